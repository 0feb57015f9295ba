//! The two graph complexes: total `d`-cut complexes `Δ_d^t(G)` and
//! `d`-bounded independence complexes `BI_d(G)`.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::graph::{alpha_table, independent_masks_of_size, mask_to_set, Graph, ALPHA_GUARD};

/// `Δ_d^t(G) = {σ ⊆ V : α(G[V \ σ]) ≥ d}`.
///
/// The facets are exactly the complements of the independent `d`-sets, so the
/// complex is void when `α(G) < d`.
pub fn total_cut_complex(g: &Graph, d: usize) -> Result<SimplicialComplex, ComplexError> {
    if d < 2 {
        return Err(ComplexError::InvalidD(d));
    }
    Ok(total_cut_unchecked(g, d))
}

pub(crate) fn total_cut_unchecked(g: &Graph, d: usize) -> SimplicialComplex {
    let full = g.full_mask();
    let facets = independent_masks_of_size(g.neighbor_masks(), full, d).into_iter().map(|s| mask_to_set(full & !s));
    SimplicialComplex::from_facets(g.vertices(), facets).expect("facets lie in V(G)")
}

/// `Δ_1^t(G) = ∂Δ^{V(G)}` is allowed here for the join identities that lower
/// `d` by one; `d = 0` gives the full simplex.
pub fn total_cut_complex_any(g: &Graph, d: usize) -> SimplicialComplex {
    match d {
        0 => SimplicialComplex::simplex(g.vertices()),
        1 => SimplicialComplex::simplex_boundary(g.vertices()),
        _ => total_cut_unchecked(g, d),
    }
}

/// `BI_d(G) = {σ ⊆ V : α(G[σ]) < d}`.
///
/// Facets are read off a table of `α(G[S])` over all vertex subsets; a set is
/// a facet when it is a simplex and adding any vertex reaches `α = d`.
pub fn bounded_independence_complex(g: &Graph, d: usize) -> Result<SimplicialComplex, ComplexError> {
    if d < 2 {
        return Err(ComplexError::InvalidD(d));
    }
    let n = g.order();
    if n > ALPHA_GUARD {
        return Err(ComplexError::TooLarge { size: n, limit: ALPHA_GUARD });
    }
    let table = alpha_table(g.neighbor_masks());
    let full = g.full_mask() as usize;
    let d = d as u8;
    let mut facets = Vec::new();
    for s in 0..table.len() {
        if table[s] >= d {
            continue;
        }
        let mut rest = full & !s;
        let mut maximal = true;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            if table[s | b] < d {
                maximal = false;
                break;
            }
            rest &= rest - 1;
        }
        if maximal {
            facets.push(mask_to_set(s as u64));
        }
    }
    Ok(SimplicialComplex::from_facets(g.vertices(), facets).expect("facets lie in V(G)"))
}

/// Selects one of the two graph complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    TotalCut,
    BoundedIndependence,
}

impl ComplexKind {
    pub fn build(self, g: &Graph, d: usize) -> Result<SimplicialComplex, ComplexError> {
        match self {
            ComplexKind::TotalCut => total_cut_complex(g, d),
            ComplexKind::BoundedIndependence => bounded_independence_complex(g, d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::TotalCut => "totalcut",
            ComplexKind::BoundedIndependence => "bi",
        }
    }
}

impl std::fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ComplexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "totalcut" | "total-cut" | "tc" => Ok(ComplexKind::TotalCut),
            "bi" | "bounded-independence" => Ok(ComplexKind::BoundedIndependence),
            _ => Err(format!("unknown complex kind `{s}` (expected totalcut or bi)")),
        }
    }
}

/// Maps a complex built on an induced subgraph back to parent labels.
pub fn lift_to_parent(k: &SimplicialComplex, parent: &[usize]) -> SimplicialComplex {
    k.relabel(|v| parent[v - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::vertex_set::VertexSet;

    fn graph(desc: &str) -> Graph {
        desc.parse::<Family>().unwrap().build().unwrap()
    }

    fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
        VertexSet::from(a)
    }

    /// Membership straight from the definitions, α by brute force.
    fn brute_alpha(g: &Graph, s: &VertexSet) -> usize {
        let items = s.as_slice();
        (0u32..1 << items.len())
            .filter_map(|m| {
                let sub: VertexSet = (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect();
                g.is_independent(&sub).then_some(sub.len())
            })
            .max()
            .unwrap_or(0)
    }

    fn all_subsets(n: usize) -> Vec<VertexSet> {
        (0u32..1 << n).map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect()).collect()
    }

    #[test]
    fn total_cut_examples() {
        let k = total_cut_complex(&graph("cycle:4"), 2).unwrap();
        assert_eq!(k.facets(), &[vs([1, 3]), vs([2, 4])]);
        assert!(total_cut_complex(&graph("complete:3"), 2).unwrap().is_void());
        let k = total_cut_complex(&graph("cycle:6"), 2).unwrap();
        assert_eq!(k.facets().len(), 9);
        assert!(k.facets().iter().all(|f| f.len() == 4));
        assert_eq!(total_cut_complex(&graph("cycle:6"), 1), Err(ComplexError::InvalidD(1)));
    }

    #[test]
    fn bounded_independence_examples() {
        let k = bounded_independence_complex(&graph("cycle:5"), 2).unwrap();
        assert_eq!(k.facets(), &[vs([1, 2]), vs([1, 5]), vs([2, 3]), vs([3, 4]), vs([4, 5])]);
        for n in 1..6 {
            let k = bounded_independence_complex(&graph(&format!("complete:{n}")), 3).unwrap();
            assert_eq!(k, SimplicialComplex::simplex(VertexSet::range(n)));
        }
        let k = bounded_independence_complex(&graph("multipartite:2,2"), 2).unwrap();
        assert_eq!(k.facets(), &[vs([1, 3]), vs([1, 4]), vs([2, 3]), vs([2, 4])]);
        assert_eq!(bounded_independence_complex(&graph("cycle:5"), 0), Err(ComplexError::InvalidD(0)));
        let empty = Graph::edgeless(0).unwrap();
        assert!(bounded_independence_complex(&empty, 2).unwrap().is_empty_simplex());
        assert!(total_cut_complex(&empty, 2).unwrap().is_void());
    }

    #[test]
    fn both_complexes_match_subset_scan() {
        for desc in ["petersen", "cyclepow:9:2", "grid:2,3", "union:path:2+cycle:4+path:3", "multipartite:1,2,3"] {
            let g = graph(desc);
            let alpha = g.independence_number().unwrap();
            for d in 2..=alpha + 1 {
                let bi = bounded_independence_complex(&g, d).unwrap();
                let tc = total_cut_complex(&g, d).unwrap();
                for s in all_subsets(g.order()) {
                    let comp = g.vertices().difference(&s);
                    assert_eq!(bi.contains(&s), brute_alpha(&g, &s) < d, "{desc} BI_{d} {s}");
                    assert_eq!(tc.contains(&s), brute_alpha(&g, &comp) >= d, "{desc} Δ_{d} {s}");
                }
            }
        }
    }

    #[test]
    fn total_cut_below_two() {
        let g = graph("cycle:5");
        assert_eq!(total_cut_complex_any(&g, 1), SimplicialComplex::simplex_boundary(VertexSet::range(5)));
        assert_eq!(total_cut_complex_any(&g, 0), SimplicialComplex::simplex(VertexSet::range(5)));
        assert!(total_cut_complex_any(&Graph::edgeless(0).unwrap(), 1).is_void());
    }
}
