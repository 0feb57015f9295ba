//! Augmented simplicial chain complexes with integer boundary matrices.

use std::collections::{HashMap, HashSet};

use crate::complex::SimplicialComplex;
use crate::integer::Integer;
use crate::snf::SparseMatrix;
use crate::vertex_set::VertexSet;

/// Default cap on the ground set for full simplex enumeration.
pub const DEFAULT_MAX_GROUND: usize = 20;
/// Larger ground sets are still accepted when `Σ_F 2^|F|` stays below this.
pub const MAX_ENUMERATED: u128 = 1 << 20;
/// Masks are `u128`, so no override can go past this.
pub const HARD_MAX_GROUND: usize = 128;
/// Environment variable that raises [`DEFAULT_MAX_GROUND`].
pub const MAX_GROUND_ENV: &str = "TOTALCUT_MAX_GROUND";

const BITMAP_MAX_GROUND: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_ground: usize,
    /// Skip the enumeration caps entirely (still bounded by [`HARD_MAX_GROUND`]).
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_ground: DEFAULT_MAX_GROUND, force: false }
    }
}

impl Limits {
    pub fn forced() -> Self {
        Limits { max_ground: HARD_MAX_GROUND, force: true }
    }

    /// Defaults, with `max_ground` taken from [`MAX_GROUND_ENV`] when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(MAX_GROUND_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            limits.max_ground = v;
        }
        limits
    }

    /// `Err(limit)` when `k` is too large to enumerate.
    pub fn admit(&self, k: &SimplicialComplex) -> Result<(), usize> {
        let n = k.ground().len();
        if n > HARD_MAX_GROUND {
            return Err(HARD_MAX_GROUND);
        }
        if self.force || n <= self.max_ground {
            return Ok(());
        }
        let mut total: u128 = 0;
        for f in k.facets() {
            total = total.saturating_add(1u128.checked_shl(f.len() as u32).unwrap_or(u128::MAX));
            if total > MAX_ENUMERATED {
                return Err(self.max_ground);
            }
        }
        Ok(())
    }
}

/// Chain groups `C_{-1}, C_0, ..., C_top` of a complex or of a pair.
///
/// Bases are lists of simplices in lexicographic order. The boundary
/// `∂_q : C_q → C_{q-1}` is stored with one row per `q`-simplex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ground: VertexSet,
    bases: Vec<Vec<u128>>,
    boundaries: Vec<SparseMatrix>,
}

fn lex_key(m: u128) -> std::cmp::Reverse<u128> {
    std::cmp::Reverse(m.reverse_bits())
}

fn mask_of(ground: &VertexSet, s: &VertexSet) -> u128 {
    s.iter().fold(0u128, |m, v| m | 1u128 << ground.as_slice().binary_search(&v).expect("simplex inside ground"))
}

/// Every simplex of `k` as a mask over ground-set positions.
pub(crate) fn simplex_masks(k: &SimplicialComplex) -> Vec<u128> {
    if k.is_void() {
        return Vec::new();
    }
    let ground = k.ground();
    let n = ground.len();
    let facets: Vec<u128> = k.facets().iter().map(|f| mask_of(ground, f)).collect();
    if n <= BITMAP_MAX_GROUND {
        let mut present = vec![false; 1 << n];
        for f in &facets {
            present[*f as usize] = true;
        }
        for b in 0..n {
            let bit = 1usize << b;
            for m in (0..1usize << n).rev() {
                if m & bit != 0 && present[m] {
                    present[m ^ bit] = true;
                }
            }
        }
        return present.iter().enumerate().filter(|(_, p)| **p).map(|(m, _)| m as u128).collect();
    }
    let mut seen = HashSet::new();
    for &f in &facets {
        let mut sub = f;
        loop {
            seen.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    seen.into_iter().collect()
}

impl ChainComplex {
    /// The augmented chain complex of `k`; the void complex gives the zero complex.
    pub fn new(k: &SimplicialComplex) -> Self {
        ChainComplex::from_masks(k.ground().clone(), simplex_masks(k))
    }

    /// The quotient `C(k) / C(l)`.
    ///
    /// # Panics
    /// If the ground sets differ.
    pub fn relative(k: &SimplicialComplex, l: &SimplicialComplex) -> Self {
        assert_eq!(k.ground(), l.ground(), "pair must share a ground set");
        let sub: HashSet<u128> = simplex_masks(l).into_iter().collect();
        let masks = simplex_masks(k).into_iter().filter(|m| !sub.contains(m)).collect();
        ChainComplex::from_masks(k.ground().clone(), masks)
    }

    /// Faces missing from `masks` are treated as zero.
    fn from_masks(ground: VertexSet, masks: Vec<u128>) -> Self {
        let top = masks.iter().map(|m| m.count_ones() as usize).max();
        let mut bases: Vec<Vec<u128>> = vec![Vec::new(); top.map_or(0, |t| t + 1)];
        for m in masks {
            bases[m.count_ones() as usize].push(m);
        }
        for b in &mut bases {
            b.sort_unstable_by_key(|&m| lex_key(m));
        }
        let index: Vec<HashMap<u128, usize>> =
            bases.iter().map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
        let mut boundaries = Vec::with_capacity(bases.len());
        for (size, basis) in bases.iter().enumerate() {
            if size == 0 {
                boundaries.push(SparseMatrix::zeros(basis.len(), 0));
                continue;
            }
            let faces = &index[size - 1];
            let rows = basis
                .iter()
                .map(|&m| {
                    let mut row = Vec::with_capacity(size);
                    let mut rest = m;
                    let mut i = 0;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        if let Some(&col) = faces.get(&(m ^ bit)) {
                            row.push((col, Integer::from(if i % 2 == 0 { 1 } else { -1 })));
                        }
                        rest ^= bit;
                        i += 1;
                    }
                    row
                })
                .collect();
            boundaries.push(SparseMatrix::from_rows(bases[size - 1].len(), rows));
        }
        ChainComplex { ground, bases, boundaries }
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn is_zero(&self) -> bool {
        self.bases.iter().all(Vec::is_empty)
    }

    /// Highest degree with a nonzero chain group.
    pub fn top_degree(&self) -> Option<isize> {
        self.bases.iter().rposition(|b| !b.is_empty()).map(|i| i as isize - 1)
    }

    fn slot(q: isize) -> Option<usize> {
        usize::try_from(q + 1).ok()
    }

    pub fn rank(&self, q: isize) -> usize {
        Self::slot(q).and_then(|i| self.bases.get(i)).map_or(0, Vec::len)
    }

    pub fn basis(&self, q: isize) -> Vec<VertexSet> {
        let Some(basis) = Self::slot(q).and_then(|i| self.bases.get(i)) else { return Vec::new() };
        let g = self.ground.as_slice();
        basis
            .iter()
            .map(|&m| VertexSet::from_sorted((0..g.len()).filter(|&i| m >> i & 1 == 1).map(|i| g[i]).collect()))
            .collect()
    }

    /// `∂_q`, one row per `q`-simplex and one column per `(q-1)`-simplex.
    pub fn boundary(&self, q: isize) -> SparseMatrix {
        match Self::slot(q).and_then(|i| self.boundaries.get(i)) {
            Some(m) => m.clone(),
            None => SparseMatrix::zeros(self.rank(q), self.rank(q - 1)),
        }
    }

    pub(crate) fn boundary_ref(&self, q: isize) -> Option<&SparseMatrix> {
        Self::slot(q).and_then(|i| self.boundaries.get(i))
    }

    /// The first degree `q` with `∂_{q-1} ∘ ∂_q ≠ 0`, if any.
    pub fn boundary_square_failure(&self) -> Option<isize> {
        (2..self.boundaries.len())
            .find(|&i| !self.boundaries[i].mul(&self.boundaries[i - 1]).is_zero())
            .map(|i| i as isize - 1)
    }

    /// `Σ (-1)^q rank C_q` over the augmented complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.bases.iter().enumerate().map(|(i, b)| if i % 2 == 1 { b.len() as i64 } else { -(b.len() as i64) }).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_complexes::total_cut_complex;
    use crate::Family;

    #[test]
    fn boundary_of_triangle() {
        let k = SimplicialComplex::simplex_boundary(VertexSet::range(3));
        let c = ChainComplex::new(&k);
        assert_eq!((c.rank(-1), c.rank(0), c.rank(1), c.rank(2)), (1, 3, 3, 0));
        assert_eq!(c.top_degree(), Some(1));
        assert_eq!(c.basis(1), vec![VertexSet::from([1, 2]), VertexSet::from([1, 3]), VertexSet::from([2, 3])]);
        assert_eq!(c.boundary_square_failure(), None);
        let d1 = c.boundary(1);
        assert_eq!(d1.row(0), &[(0, Integer::from(-1)), (1, Integer::ONE)]);
        assert_eq!(c.boundary(0).row(2), &[(0, Integer::ONE)]);
        assert_eq!(c.euler_characteristic(), -1 + 3 - 3);
    }

    #[test]
    fn void_and_empty_simplex() {
        let void = ChainComplex::new(&SimplicialComplex::void(VertexSet::range(3)));
        assert!(void.is_zero());
        assert_eq!(void.top_degree(), None);
        let e = ChainComplex::new(&SimplicialComplex::empty_simplex(VertexSet::range(3)));
        assert_eq!(e.rank(-1), 1);
        assert_eq!(e.top_degree(), Some(-1));
    }

    #[test]
    fn total_cut_of_six_cycle() {
        let g = Family::Cycle(6).build().unwrap();
        let c = ChainComplex::new(&total_cut_complex(&g, 2).unwrap());
        assert_eq!(c.top_degree(), Some(3));
        assert_eq!(c.rank(3), 9);
        assert_eq!(c.boundary_square_failure(), None);
    }

    #[test]
    fn hash_enumeration_agrees_with_bitmap() {
        let g = Family::Cycle(9).build().unwrap();
        let k = total_cut_complex(&g, 3).unwrap();
        let mut a = simplex_masks(&k);
        let facets = k.facets().iter().map(|f| mask_of(k.ground(), f));
        let mut b: Vec<u128> = facets
            .flat_map(|f| (0..=f).filter(move |s| s & !f == 0))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        let wide = k.with_ground(VertexSet::range(30)).unwrap();
        let mut c = simplex_masks(&wide);
        c.sort_unstable();
        assert_eq!(c, b);
    }

    #[test]
    fn limits() {
        let big = SimplicialComplex::simplex(VertexSet::range(21));
        assert_eq!(Limits::default().admit(&big), Err(20));
        assert!(Limits::forced().admit(&big).is_ok());
        let sparse = SimplicialComplex::simplex_boundary(VertexSet::range(3)).with_ground(VertexSet::range(60)).unwrap();
        assert!(Limits::default().admit(&sparse).is_ok());
        let huge = SimplicialComplex::void(VertexSet::range(129));
        assert_eq!(Limits::forced().admit(&huge), Err(HARD_MAX_GROUND));
    }
}
