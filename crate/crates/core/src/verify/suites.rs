//! Case generators for the closed-form suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::claims::*;
use super::{check_claim, random_graph, Case, Outcome, Plan};
use crate::complex::Cover;
use crate::family::Family;
use crate::graph_complexes::{bounded_independence_complex, total_cut_complex, ComplexKind};
use crate::homology::{matches_wedge, reduced_homology, verify_alexander_duality, WedgeClaim};
use crate::poset::verify_composition_wedge;

const TC: ComplexKind = ComplexKind::TotalCut;
const BI: ComplexKind = ComplexKind::BoundedIndependence;

fn claim_case(plan: &mut Plan, prefix: &str, family: Family, kind: ComplexKind, d: usize, claim: WedgeClaim, sk2: bool) {
    let id = format!("{prefix}/{kind}/d={d}/{family}");
    let g = family.build().unwrap_or_else(|e| panic!("{id}: {e}"));
    plan.push(Case::new(id, g.order(), move || check_claim(&g, kind, d, claim, sk2)));
}

pub(super) fn cycles(plan: &mut Plan) {
    for d in 2..=4 {
        for n in 2 * d..=13 {
            claim_case(plan, "cycles", Family::Cycle(n), TC, d, cycle_total_cut(n, d).unwrap(), false);
            claim_case(plan, "cycles", Family::Cycle(n), BI, d, cycle_bi(n, d).unwrap(), false);
        }
    }
}

pub(super) fn cycle_powers(plan: &mut Plan) {
    let r = 2;
    for d in [2, 3] {
        for p in 1..=r {
            for n in 2 * r * d..=13 {
                let f = Family::CyclePower(n, p);
                claim_case(plan, "cyclepowers/general", f.clone(), BI, d, cycle_bi(n, d).unwrap(), false);
                claim_case(plan, "cyclepowers/general", f, TC, d, cycle_total_cut(n, d).unwrap(), false);
            }
        }
    }

    for (r, d) in [(2, 2), (3, 2), (2, 3)] {
        let f = Family::CyclePower((r + 1) * d, r);
        let claim = tight_cycle_power_total_cut(r);
        claim_case(plan, "cyclepowers/tight", f.clone(), TC, d, claim, false);
        let g = f.build().unwrap();
        plan.push(Case::new(format!("cyclepowers/tight/nerve/d={d}/{f}"), g.order(), move || {
            let expected = format!("{claim}; nerve of facets covers");
            let k = match total_cut_complex(&g, d) {
                Ok(k) => k,
                Err(e) => return Outcome::error(expected, e),
            };
            let cover = match Cover::by_facets(&k) {
                Ok(c) => c,
                Err(e) => return Outcome::error(expected, e),
            };
            match reduced_homology(&cover.nerve()) {
                Ok(p) => Outcome::new(claim.to_string(), p.to_string(), matches_wedge(&p, &claim))
                    .and("nerve of facets covers", cover.covers(&k)),
                Err(e) => Outcome::error(expected, e),
            }
        }));
    }

    for r in [3, 4] {
        if 2 * r + 3 > 3 * r - 1 {
            plan.skip(
                format!("cyclepowers/range-b/totalcut/d=2/r={r}"),
                format!("no n with {} <= n <= {}", 2 * r + 3, 3 * r - 1),
            );
        }
        for n in 2 * r + 2..=13 {
            let f = Family::CyclePower(n, r);
            let (range, claim) = cycle_power_total_cut_two(n, r).unwrap();
            let prefix = format!("cyclepowers/range-{}", range.letter());
            claim_case(plan, &prefix, f.clone(), TC, 2, claim, cycle_power_sk2(n, r));
            claim_case(plan, "cyclepowers/clique", f, BI, 2, cycle_power_clique(n, r).unwrap(), false);
        }
    }
}

/// Partitions of `n` into parts of size at most `max`, parts nonincreasing.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub(super) fn multipartite(plan: &mut Plan) {
    for n in 2..=12 {
        for parts in partitions(n, n).into_iter().filter(|p| p.len() >= 2) {
            for d in [2, 3] {
                let f = Family::Multipartite(parts.clone());
                claim_case(plan, "multipartite", f.clone(), BI, d, multipartite_bi(&parts, d), false);
                let sk2 = multipartite_sk2(&parts, d);
                claim_case(plan, "multipartite", f, TC, d, multipartite_total_cut(&parts, d), sk2);
            }
        }
    }
}

/// Nondecreasing size lists with at least two factors, each at least 2,
/// whose product is at most `limit`.
fn product_shapes(limit: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, limit: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let start = prefix.last().copied().unwrap_or(2);
        for x in start..=limit / product {
            prefix.push(x);
            extend(prefix, product * x, limit, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, limit, &mut out);
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

pub(super) fn products(plan: &mut Plan) {
    for sizes in product_shapes(12) {
        let (bi, tc) = grid_claims(&sizes);
        let f = Family::Grid(sizes.clone());
        claim_case(plan, "products", f.clone(), BI, 2, bi, false);
        claim_case(plan, "products", f, TC, 2, tc, grid_sk2(&sizes));
        let (bi, tc) = rook_claims(&sizes);
        let f = Family::Rook(sizes.clone());
        claim_case(plan, "products", f.clone(), BI, 2, bi, false);
        claim_case(plan, "products", f, TC, 2, tc, rook_sk2(&sizes));
    }
}

fn union_shapes() -> Vec<Vec<Family>> {
    use Family::{Path, PathPower};
    let mut out: Vec<Vec<Family>> = Vec::new();
    for k in 2..=5 {
        out.push(vec![Path(2); k]);
    }
    for k in 2..=4 {
        out.push(vec![Path(3); k]);
    }
    out.extend([
        vec![Path(1); 5],
        vec![Path(1), Path(2)],
        vec![Path(1), Path(2), Path(3)],
        vec![Path(1), Path(2), Path(3), Path(4)],
        vec![Path(1), Path(1), Path(2), Path(3), Path(4)],
        vec![PathPower(4, 2), Path(3)],
        vec![PathPower(3, 2), PathPower(3, 2), PathPower(3, 2)],
        vec![PathPower(5, 2), PathPower(4, 3), Path(2)],
        vec![PathPower(5, 2), Path(4), Path(1), Path(2)],
        vec![PathPower(6, 2), Path(2), Path(2), Path(2), Path(1)],
    ]);
    out
}

pub(super) fn unions(plan: &mut Plan) {
    for parts in union_shapes() {
        let k = parts.len();
        let f = Family::Union(parts);
        let n = f.build().unwrap().order();
        for d in [2, 3] {
            claim_case(plan, "unions", f.clone(), BI, d, union_bi(k, d), false);
            if let Some(claim) = union_total_cut(k, d, n) {
                claim_case(plan, "unions", f.clone(), TC, d, claim, true);
            }
        }
    }
}

pub(super) fn duality(plan: &mut Plan, rng: &mut ChaCha8Rng) {
    for i in 0..50 {
        let n = rng.gen_range(4..=9);
        let g = std::sync::Arc::new(random_graph(n, rng));
        let alpha = g.independence_number_unguarded();
        for d in 2..=alpha.max(2) {
            let g = g.clone();
            plan.push(Case::new(format!("duality/g{i:02}-n{n}/d={d}"), n, move || {
                let expected = "BI* = totalcut; totalcut* = BI; duality (BI); duality (totalcut)";
                let (bi, tc) = match (bounded_independence_complex(&g, d), total_cut_complex(&g, d)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return Outcome::error(expected, e),
                };
                let (bi_dual, tc_dual) = match (bi.alexander_dual(), tc.alexander_dual()) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return Outcome::error(expected, e),
                };
                let (h_bi, h_tc) = match (verify_alexander_duality(&bi), verify_alexander_duality(&tc)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return Outcome::error(expected, e),
                };
                let mut out = Outcome::new("", "", true);
                out = out.and("BI* = totalcut", bi_dual == tc);
                out = out.and("totalcut* = BI", tc_dual == bi);
                out = out.and("duality (BI)", h_bi);
                out = out.and("duality (totalcut)", h_tc);
                out.trimmed()
            }));
        }
    }
}

pub(super) fn posets(plan: &mut Plan) {
    for d in 2..=4 {
        for k in 1..=5 {
            plan.push(Case::new(format!("posets/d={d}/k={k}"), 0, move || match verify_composition_wedge(d, k) {
                Ok(c) => Outcome::new(c.expected.to_string(), format!("{} ({} elements)", c.computed, c.elements), c.pass),
                Err(e) => Outcome::error("", e),
            }));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(partitions(4, 4), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn shapes() {
        let s = product_shapes(12);
        assert_eq!(s.len(), 9);
        assert!(s.contains(&vec![2, 2, 3]));
        assert!(s.iter().all(|x| x.iter().product::<usize>() <= 12));
        assert!(union_shapes().iter().all(|p| Family::Union(p.clone()).build().unwrap().order() <= 13));
    }
}
