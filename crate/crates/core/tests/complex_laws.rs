use proptest::prelude::*;
use totalcut::{
    bounded_independence_complex, compositions, lift_to_parent, total_cut_complex, total_cut_complex_any, Family, Graph,
    SimplicialComplex, VertexSet,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn complex_strategy(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::btree_set(1..=n, 0..=n), 0..6).prop_map(move |fs| {
            SimplicialComplex::from_facets(VertexSet::range(n), fs.into_iter().map(|f| f.into_iter().collect())).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn dual_of_bounded_independence_is_total_cut(g in graph_strategy(9)) {
        let alpha = g.independence_number().unwrap();
        for d in 2..=alpha {
            let bi = bounded_independence_complex(&g, d).unwrap();
            prop_assert_eq!(bi.alexander_dual().unwrap(), total_cut_complex(&g, d).unwrap());
        }
    }

    #[test]
    fn dual_is_an_involution(k in complex_strategy(8)) {
        prop_assert_eq!(k.alexander_dual().unwrap().alexander_dual().unwrap(), k);
    }

    #[test]
    fn link_of_a_simplex_is_total_cut_of_the_rest(g in graph_strategy(8), d in 2usize..4) {
        let delta = total_cut_complex(&g, d).unwrap();
        for sigma in delta.simplices().into_iter().filter(|s| s.len() <= 2) {
            let rest = g.remove_vertices(&sigma).unwrap();
            let expected = lift_to_parent(&total_cut_complex(&rest.graph, d).unwrap(), &rest.parent);
            prop_assert_eq!(delta.link(&sigma).unwrap(), expected, "sigma = {}", sigma);
        }
    }
}

/// `del(v) = Δ_d^t(G - v) ∪ (Δ^{N(v)} * Δ_{d-1}^t(G - N[v]))` when
/// `α(G - v) ≥ d` and `α(G - N[v]) ≥ d - 1`.
#[test]
fn deletion_law_on_cycles() {
    let mut checked = 0;
    for n in 3..=8 {
        let g = Graph::cycle(n).unwrap();
        for d in 2..=3 {
            let Ok(delta) = total_cut_complex(&g, d) else { continue };
            for v in 1..=n {
                let minus = g.remove_vertices(&VertexSet::from([v])).unwrap();
                let far = g.remove_vertices(&g.closed_neighbors(v)).unwrap();
                if minus.graph.independence_number().unwrap() < d || far.graph.independence_number().unwrap() + 1 < d {
                    continue;
                }
                let low = lift_to_parent(&total_cut_complex_any(&far.graph, d - 1), &far.parent);
                let join = SimplicialComplex::simplex(g.neighbors(v)).join(&low).unwrap();
                let union = lift_to_parent(&total_cut_complex(&minus.graph, d).unwrap(), &minus.parent).union(&join);
                let del = delta.deletion(&VertexSet::from([v])).unwrap();
                assert!(del.same_simplices(&union), "C_{n}, d = {d}, v = {v}");
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

/// `BI_d(G_1 + ... + G_k)` is the union over compositions `c` of `d + k - 1`
/// into `k` parts of the joins `BI_{c_1}(G_1) * ... * BI_{c_k}(G_k)`, where
/// `BI_1` is `{∅}`.
#[test]
fn disjoint_union_law_on_short_paths() {
    let shapes: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 2], vec![3, 2], vec![1, 2, 3], vec![2, 3, 3], vec![3, 3, 3]];
    for shape in shapes {
        let f = Family::Union(shape.iter().map(|&n| Family::Path(n)).collect());
        let g = f.build().unwrap();
        let k = shape.len();
        let blocks: Vec<VertexSet> = {
            let mut start = 1;
            shape
                .iter()
                .map(|&n| {
                    let b = VertexSet::new((start..start + n).collect());
                    start += n;
                    b
                })
                .collect()
        };
        for d in 2..=4 {
            let mut union: Option<SimplicialComplex> = None;
            for c in compositions(d + k - 1, k).unwrap() {
                let mut join: Option<SimplicialComplex> = None;
                for (j, &cj) in c.iter().enumerate() {
                    let sub = g.induced_subgraph(&blocks[j]).unwrap();
                    let piece = if cj == 1 {
                        SimplicialComplex::empty_simplex(blocks[j].clone())
                    } else {
                        lift_to_parent(&bounded_independence_complex(&sub.graph, cj).unwrap(), &sub.parent)
                    };
                    join = Some(match join {
                        None => piece,
                        Some(acc) => acc.join(&piece).unwrap(),
                    });
                }
                let join = join.unwrap();
                union = Some(match union {
                    None => join,
                    Some(acc) => acc.union(&join),
                });
            }
            let bi = bounded_independence_complex(&g, d).unwrap();
            assert_eq!(union.unwrap(), bi, "{f}, d = {d}");
        }
    }
}

#[test]
fn composition_counts() {
    for d in 1..=8 {
        for k in 1..=d {
            let n = (1..k).fold(1usize, |acc, i| acc * (d - i) / i);
            assert_eq!(compositions(d, k).unwrap().len(), n, "C({d},{k})");
        }
    }
}
