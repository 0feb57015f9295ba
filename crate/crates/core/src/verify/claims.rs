//! Closed-form homotopy types for the graph families the suites cover.

use crate::homology::WedgeClaim;
use crate::poset::binomial;

/// `Δ_d^t(C_n) ≃ S^{n-2d}` for `n ≥ 2d`.
pub fn cycle_total_cut(n: usize, d: usize) -> Option<WedgeClaim> {
    (d >= 2 && n >= 2 * d).then(|| WedgeClaim::sphere(n - 2 * d))
}

/// `BI_d(C_n) ≃ S^{2d-3}` for `n ≥ 2d`.
pub fn cycle_bi(n: usize, d: usize) -> Option<WedgeClaim> {
    (d >= 2 && n >= 2 * d).then(|| WedgeClaim::sphere(2 * d - 3))
}

/// `BI_2(C_n^r)` for `n ≥ 3` and `1 ≤ r < n/2`.
pub fn cycle_power_clique(n: usize, r: usize) -> Option<WedgeClaim> {
    if n < 3 || r == 0 || 2 * r >= n {
        return None;
    }
    let l = cycle_power_level(n, r);
    if r * (2 * l + 1) == l * n {
        Some(WedgeClaim::wedge(2 * l, n - 2 * r - 1))
    } else {
        Some(WedgeClaim::sphere(2 * l + 1))
    }
}

/// The `l ≥ 0` with `l n / (2l+1) ≤ r < (l+1) n / (2l+3)`.
fn cycle_power_level(n: usize, r: usize) -> usize {
    (0..n).find(|&l| l * n <= r * (2 * l + 1) && r * (2 * l + 3) < (l + 1) * n).expect("r < n/2 has a level")
}

/// Which of the four ranges of `n` a `Δ_2^t(C_n^r)` instance falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerRange {
    /// `n = 2r + 2`
    Tight,
    /// `2r + 3 ≤ n ≤ 3r - 1`
    Middle,
    /// `n = 3r`
    Triple,
    /// `n ≥ 3r + 1`
    Large,
}

impl PowerRange {
    pub fn of(n: usize, r: usize) -> Option<PowerRange> {
        match n {
            _ if n < 2 * r + 2 => None,
            _ if n == 2 * r + 2 => Some(PowerRange::Tight),
            _ if n < 3 * r => Some(PowerRange::Middle),
            _ if n == 3 * r => Some(PowerRange::Triple),
            _ => Some(PowerRange::Large),
        }
    }

    pub fn letter(self) -> char {
        match self {
            PowerRange::Tight => 'a',
            PowerRange::Middle => 'b',
            PowerRange::Triple => 'c',
            PowerRange::Large => 'd',
        }
    }
}

/// `Δ_2^t(C_n^r)` for `r ≥ 3` and `n ≥ 2r + 2`.
pub fn cycle_power_total_cut_two(n: usize, r: usize) -> Option<(PowerRange, WedgeClaim)> {
    if r < 3 {
        return None;
    }
    let range = PowerRange::of(n, r)?;
    let claim = match range {
        PowerRange::Tight => WedgeClaim::sphere(r - 1),
        PowerRange::Middle => {
            let l = cycle_power_level(n, r);
            if r * (2 * l + 1) == l * n {
                WedgeClaim::wedge(n - 2 * l - 3, n - 2 * r - 1)
            } else {
                WedgeClaim::sphere(n - 2 * l - 4)
            }
        }
        PowerRange::Triple => WedgeClaim::wedge(3 * r - 5, r - 1),
        PowerRange::Large => WedgeClaim::sphere(n - 4),
    };
    Some((range, claim))
}

/// `Δ_2^t(C_n^r)` is 2-skeleton-full for `r ≥ 3`, `n ≥ 2r + 3`.
pub fn cycle_power_sk2(n: usize, r: usize) -> bool {
    r >= 3 && n >= 2 * r + 3
}

/// `Δ_d^t(C^r_{(r+1)d}) ≃ S^{r-1}`.
pub fn tight_cycle_power_total_cut(r: usize) -> WedgeClaim {
    WedgeClaim::sphere(r - 1)
}

fn multipartite_count(parts: &[usize], d: usize) -> usize {
    parts.iter().map(|&p| binomial(p - 1, d - 1)).product()
}

/// `BI_d(K_{n_1, ..., n_k})`.
pub fn multipartite_bi(parts: &[usize], d: usize) -> WedgeClaim {
    if parts.iter().any(|&p| p < d) {
        WedgeClaim::Contractible
    } else {
        WedgeClaim::wedge(parts.len() * (d - 1) - 1, multipartite_count(parts, d))
    }
}

/// `Δ_d^t(K_{n_1, ..., n_k})`.
pub fn multipartite_total_cut(parts: &[usize], d: usize) -> WedgeClaim {
    let n: usize = parts.iter().sum();
    if parts.iter().all(|&p| p < d) {
        WedgeClaim::Void
    } else if parts.iter().any(|&p| p < d) {
        WedgeClaim::Contractible
    } else {
        WedgeClaim::wedge(n - parts.len() * (d - 1) - 2, multipartite_count(parts, d))
    }
}

/// Whether `Δ_d^t(K_{n_1, ..., n_k})` is 2-skeleton-full: every part has at
/// least `d` vertices and the graph is not `K_{d,d}`, `K_{d,d+1}` or `K_{d,d,d}`.
pub fn multipartite_sk2(parts: &[usize], d: usize) -> bool {
    if parts.iter().any(|&p| p < d) {
        return false;
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    sorted != [d, d] && sorted != [d, d + 1] && sorted != [d, d, d]
}

/// `s_k = Σ_i (n_i - 1) Π_{j≠i} n_j - Π_i n_i + 1`.
pub fn grid_count(sizes: &[usize]) -> usize {
    let n: i128 = sizes.iter().map(|&x| x as i128).product();
    let edges: i128 = sizes.iter().map(|&x| (x as i128 - 1) * (n / x as i128)).sum();
    usize::try_from(edges - n + 1).expect("nonnegative for sizes >= 1")
}

/// `F_k = (k - 1) n + 1 - Σ_i Π_{j≠i} n_j` with `n = Π n_i`.
pub fn rook_count(sizes: &[usize]) -> usize {
    let n: i128 = sizes.iter().map(|&x| x as i128).product();
    let k = sizes.len() as i128;
    let cofactors: i128 = sizes.iter().map(|&x| n / x as i128).sum();
    usize::try_from((k - 1) * n + 1 - cofactors).expect("nonnegative for sizes >= 2")
}

/// `BI_2` and `Δ_2^t` of a grid graph with all sizes at least 2.
pub fn grid_claims(sizes: &[usize]) -> (WedgeClaim, WedgeClaim) {
    let n: usize = sizes.iter().product();
    let s = grid_count(sizes);
    (WedgeClaim::wedge(1, s), WedgeClaim::wedge(n - 4, s))
}

pub fn grid_sk2(sizes: &[usize]) -> bool {
    sizes != [2, 2]
}

/// `BI_2` and `Δ_2^t` of a rook graph with all sizes at least 2.
pub fn rook_claims(sizes: &[usize]) -> (WedgeClaim, WedgeClaim) {
    let n: usize = sizes.iter().product();
    let f = rook_count(sizes);
    (WedgeClaim::wedge(1, f), WedgeClaim::wedge(n - 4, f))
}

pub fn rook_sk2(sizes: &[usize]) -> bool {
    sizes.len() >= 3 || (sizes.len() == 2 && sizes.iter().all(|&x| x >= 3))
}

/// `BI_d` of a disjoint union of `k` graphs whose `BI_l` are contractible.
pub fn union_bi(k: usize, d: usize) -> WedgeClaim {
    if k < d {
        WedgeClaim::Contractible
    } else {
        WedgeClaim::wedge(d - 2, binomial(k - 1, d - 1))
    }
}

/// `Δ_d^t` of a disjoint union of `k ≥ d + 3` suitable graphs on `n` vertices.
pub fn union_total_cut(k: usize, d: usize, n: usize) -> Option<WedgeClaim> {
    (k >= d + 3).then(|| WedgeClaim::wedge(n - d - 1, binomial(k - 1, d - 1)))
}

/// The coloring `ψ_{d,n} : V(C_n^p) → V(C_{2d})`.
///
/// Writing `n = l·2d + k` with `0 ≤ k < 2d`, the first `k` colors get runs of
/// `l + 1` consecutive vertices and the remaining `2d - k` colors runs of `l`.
pub fn psi(d: usize, n: usize, i: usize) -> usize {
    let (l, k) = (n / (2 * d), n % (2 * d));
    if i <= (l + 1) * k {
        (i - 1) / (l + 1) + 1
    } else {
        (i - (l + 1) * k - 1) / l + 1 + k
    }
}
