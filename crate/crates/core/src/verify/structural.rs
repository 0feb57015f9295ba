//! Structural identities: domination, chordality, deletion decompositions,
//! suspension, relative connectivity, girth and the cycle coloring map.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::claims::psi;
use super::{random_graph, Case, Outcome, Plan};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::family::Family;
use crate::graph::Graph;
use crate::graph_complexes::{bounded_independence_complex, lift_to_parent, total_cut_complex, total_cut_complex_any};
use crate::homology::{reduced_homology, relative_homology, HomologyProfile};
use crate::vertex_set::VertexSet;

pub(super) fn structural(plan: &mut Plan, rng: &mut ChaCha8Rng) {
    domination(plan, rng);
    chordal(plan, rng);
    deletion(plan, rng);
    pairs(plan, rng);
    girth(plan);
    coloring(plan);
}

type Named = (String, Arc<Graph>);

fn named(f: Family) -> Named {
    let g = f.build().unwrap_or_else(|e| panic!("{f}: {e}"));
    (f.to_string(), Arc::new(g))
}

fn random_named(prefix: &str, count: usize, sizes: std::ops::RangeInclusive<usize>, rng: &mut ChaCha8Rng) -> Vec<Named> {
    (0..count)
        .map(|i| {
            let n = rng.gen_range(sizes.clone());
            (format!("{prefix}{i:02}-n{n}"), Arc::new(random_graph(n, rng)))
        })
        .collect()
}

fn betti_line(p: &HomologyProfile, top: isize) -> String {
    (-1..=top).map(|q| p.betti(q).to_string()).collect::<Vec<_>>().join(",")
}

fn domination(plan: &mut Plan, rng: &mut ChaCha8Rng) {
    let mut graphs: Vec<Named> = [
        Family::Path(6),
        Family::PathPower(7, 2),
        Family::Multipartite(vec![3, 2]),
        Family::Cycle(6),
        Family::Grid(vec![2, 3]),
    ]
    .into_iter()
    .map(named)
    .collect();
    graphs.extend(random_named("random", 12, 5..=8, rng));

    for (name, g) in graphs {
        let n = g.order();
        let pair = |closed: bool| {
            (1..=n).find_map(|v| {
                let nv = if closed { g.closed_neighbors(v) } else { g.neighbors(v) };
                (1..=n).find(|&u| {
                    let nu = if closed { g.closed_neighbors(u) } else { g.neighbors(u) };
                    u != v && nv.is_subset(&nu)
                })
                .map(|u| (v, u))
            })
        };
        if let Some((v, u)) = pair(true) {
            for d in 2..=3 {
                let g = g.clone();
                plan.push(Case::new(format!("structural/dominated-closed/{name}/d={d}/v={v}/u={u}"), n, move || {
                    let expected = "H(BI_d(G)) = H(BI_d(G-v))";
                    let minus = g.remove_vertices(&VertexSet::from([v])).expect("v in G");
                    let run = || -> Result<(HomologyProfile, HomologyProfile), String> {
                        let whole = reduced_homology(&bounded_independence_complex(&g, d).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                        let part = reduced_homology(&bounded_independence_complex(&minus.graph, d).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                        Ok((whole, part))
                    };
                    match run() {
                        Ok((a, b)) => Outcome::new(expected, format!("{a} vs {b}"), a.same_groups(&b)),
                        Err(e) => Outcome::error(expected, e),
                    }
                }));
            }
        }
        if let Some((v, u)) = pair(false) {
            for d in 2..=3 {
                let g = g.clone();
                plan.push(Case::new(format!("structural/dominated-open/{name}/d={d}/v={v}/u={u}"), n, move || {
                    let expected = "b(BI_d(G)) = b(BI_d(G-v)) + b(susp lk v)";
                    let minus = g.remove_vertices(&VertexSet::from([v])).expect("v in G");
                    let run = || -> Result<[HomologyProfile; 3], String> {
                        let bi = bounded_independence_complex(&g, d).map_err(|e| e.to_string())?;
                        let link = bi.link(&VertexSet::from([v])).map_err(|e| e.to_string())?;
                        let rest = bounded_independence_complex(&minus.graph, d).map_err(|e| e.to_string())?;
                        let h = |k: &SimplicialComplex| reduced_homology(k).map_err(|e| e.to_string());
                        Ok([h(&bi)?, h(&rest)?, h(&link)?.shifted(1)])
                    };
                    match run() {
                        Ok([whole, rest, susp]) => {
                            let top = n as isize;
                            let pass = (-1..=top).all(|q| whole.betti(q) == rest.betti(q) + susp.betti(q));
                            let computed = format!(
                                "[{}] vs [{}] + [{}]",
                                betti_line(&whole, top),
                                betti_line(&rest, top),
                                betti_line(&susp, top)
                            );
                            Outcome::new(expected, computed, pass)
                        }
                        Err(e) => Outcome::error(expected, e),
                    }
                }));
            }
        }
    }
}

/// A connected chordal graph: each new vertex is joined to a nonempty clique
/// of earlier vertices, so the reverse insertion order is a perfect
/// elimination ordering.
fn random_chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj = vec![vec![false; n + 1]; n + 1];
    let mut edges = Vec::new();
    for v in 2..=n {
        let u = rng.gen_range(1..v);
        let mut clique = vec![u];
        for w in 1..v {
            if adj[u][w] && rng.gen_bool(0.6) && clique.iter().all(|&c| adj[c][w]) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[c][v] = true;
            adj[v][c] = true;
            edges.push((c, v));
        }
    }
    Graph::from_edges(n, &edges).expect("vertices in range")
}

fn chordal(plan: &mut Plan, rng: &mut ChaCha8Rng) {
    let mut graphs: Vec<Named> = Vec::new();
    for n in 5..=10 {
        for r in 1..=3 {
            graphs.push(named(Family::PathPower(n, r)));
        }
    }
    graphs.push(named(Family::Multipartite(vec![1, 1, 4])));
    graphs.extend((0..12).map(|i| {
        let n = rng.gen_range(5..=10);
        (format!("chordal{i:02}-n{n}"), Arc::new(random_chordal(n, rng)))
    }));
    for (name, g) in graphs {
        let alpha = g.independence_number_unguarded();
        for d in 2..=alpha.max(2) {
            let g = g.clone();
            plan.push(Case::new(format!("structural/chordal/bi/d={d}/{name}"), g.order(), move || {
                let expected = "0; chordal";
                match bounded_independence_complex(&g, d).map_err(|e| e.to_string()).and_then(|k| {
                    reduced_homology(&k).map_err(|e| e.to_string())
                }) {
                    Ok(p) => Outcome::new("0", p.to_string(), !p.void && p.is_acyclic()).and("chordal", g.is_chordal()),
                    Err(e) => Outcome::error(expected, e),
                }
            }));
        }
    }
}

/// The complexes in the decomposition of `del(v)` inside `Δ_d^t(G)`.
struct Decomposition {
    whole: SimplicialComplex,
    /// `Δ_d^t(G - v)` on `V \ {v}`.
    minus: SimplicialComplex,
    /// `Δ^{N(v)} * Δ_{d-1}^t(G - N[v])` on `V \ {v}`.
    join: SimplicialComplex,
    alpha_minus: usize,
    alpha_far: usize,
}

fn decompose(g: &Graph, d: usize, v: usize) -> Result<Decomposition, ComplexError> {
    let whole = total_cut_complex(g, d)?;
    let minus = g.remove_vertices(&VertexSet::from([v]))?;
    let far = g.remove_vertices(&g.closed_neighbors(v))?;
    let low = lift_to_parent(&total_cut_complex_any(&far.graph, d - 1), &far.parent);
    Ok(Decomposition {
        whole,
        minus: lift_to_parent(&total_cut_complex_any(&minus.graph, d), &minus.parent),
        join: SimplicialComplex::simplex(g.neighbors(v)).join(&low)?,
        alpha_minus: minus.graph.independence_number_unguarded(),
        alpha_far: far.graph.independence_number_unguarded(),
    })
}

fn deletion(plan: &mut Plan, rng: &mut ChaCha8Rng) {
    let mut graphs: Vec<Named> = Vec::new();
    for n in 5..=8 {
        graphs.push(named(Family::Path(n)));
        graphs.push(named(Family::Cycle(n)));
    }
    for (n, r) in [(7, 2), (8, 2), (9, 2), (10, 3)] {
        graphs.push(named(Family::CyclePower(n, r)));
    }
    graphs.push(named(Family::Grid(vec![2, 4])));
    graphs.extend(random_named("random", 6, 6..=9, rng));

    for (name, g) in graphs {
        let n = g.order();
        let alpha = g.independence_number_unguarded();
        for d in 2..=alpha {
            for v in 1..=n {
                let dec = Arc::new(decompose(&g, d, v).expect("decomposition of a valid graph"));
                let id = |what: &str| format!("structural/{what}/{name}/d={d}/v={v}");
                if dec.alpha_minus < d {
                    let dec = dec.clone();
                    plan.push(Case::new(id("deletion-a"), n, move || {
                        let del = dec.whole.deletion(&VertexSet::from([v])).expect("v in ground");
                        Outcome::new("", "", true)
                            .and("del(v) = totalcut", del.same_simplices(&dec.whole))
                            .and("totalcut = N(v) * lower", dec.whole.same_simplices(&dec.join))
                            .trimmed()
                    }));
                }
                if dec.alpha_far + 2 <= d {
                    let dec = dec.clone();
                    plan.push(Case::new(id("deletion-b"), n, move || {
                        let del = dec.whole.deletion(&VertexSet::from([v])).expect("v in ground");
                        Outcome::new("", "", true).and("del(v) = totalcut(G-v)", del.same_simplices(&dec.minus)).trimmed()
                    }));
                }
                if dec.alpha_minus >= d && dec.alpha_far + 1 >= d {
                    let c = dec.clone();
                    plan.push(Case::new(id("deletion-c"), n, move || {
                        let del = c.whole.deletion(&VertexSet::from([v])).expect("v in ground");
                        let union = c.minus.union(&c.join);
                        Outcome::new("", "", true).and("del(v) = totalcut(G-v) u N(v) * lower", del.same_simplices(&union)).trimmed()
                    }));
                    plan.push(Case::new(id("suspension"), n, move || {
                        let expected = "H(totalcut) = H(susp (totalcut(G-v) n N(v) * lower))";
                        let meet = dec.minus.intersection(&dec.join);
                        match (reduced_homology(&dec.whole), reduced_homology(&meet)) {
                            (Ok(a), Ok(b)) => {
                                let b = b.shifted(1);
                                Outcome::new(expected, format!("{a} vs {b}"), !meet.is_void() && a.same_groups(&b))
                            }
                            (Err(e), _) | (_, Err(e)) => Outcome::error(expected, e),
                        }
                    }));
                }
            }
        }
    }
}

/// `H_q(BI_a(G), BI_b(H)) = 0` for `q <= upto`.
fn vanishing_case(plan: &mut Plan, id: String, big: (Arc<Graph>, usize), small: (Arc<Graph>, usize), upto: isize) {
    plan.push(Case::new(id, big.0.order(), move || {
        let expected = format!("H_q = 0 for q <= {upto}");
        let k = bounded_independence_complex(&big.0, big.1);
        let l = bounded_independence_complex(&small.0, small.1);
        let (k, l) = match (k, l) {
            (Ok(k), Ok(l)) => (k, l),
            (Err(e), _) | (_, Err(e)) => return Outcome::error(expected, e),
        };
        match relative_homology(&k, &l) {
            Ok(p) => {
                let pass = p.reduced.iter().all(|g| g.degree > upto);
                Outcome::new(expected, p.to_string(), pass)
            }
            Err(e) => Outcome::error(expected, e),
        }
    }));
}

fn pairs(plan: &mut Plan, rng: &mut ChaCha8Rng) {
    let mut graphs = random_named("random", 10, 5..=9, rng);
    graphs.push(named(Family::Petersen));
    graphs.push(named(Family::Cycle(9)));
    for (name, g) in graphs {
        let alpha = g.independence_number_unguarded();
        for d in 2..=alpha {
            let id = format!("structural/pair-bounded/{name}/d={d}");
            vanishing_case(plan, id, (g.clone(), d + 1), (g.clone(), d), d as isize - 2);
        }
    }
    for r in 1..=2 {
        for n in 2 * r + 3..=10 {
            let base = Graph::cycle(n).expect("cycle");
            let small = Arc::new(base.power(r).expect("power"));
            let big = Arc::new(base.power(r + 1).expect("power"));
            for d in [3, 4] {
                let id = format!("structural/pair-powers/cycle:{n}/r={r}/d={d}");
                vanishing_case(plan, id, (big.clone(), d), (small.clone(), d), d as isize - 1);
            }
        }
    }
}

/// The Heawood graph: a 14-cycle with chords `i ~ i + 5` from even `i`.
pub(crate) fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i + 1, (i + 1) % 14 + 1)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i + 1, (i + 5) % 14 + 1)));
    Graph::from_edges(14, &edges).expect("heawood edges are valid")
}

fn girth(plan: &mut Plan) {
    let mut graphs: Vec<Named> = vec![named(Family::Petersen), ("heawood".to_string(), Arc::new(heawood()))];
    graphs.extend([Family::Grid(vec![2, 2, 2]), Family::Grid(vec![3, 3]), Family::Path(8), Family::Multipartite(vec![1, 5])].map(named));
    let tree = Graph::from_edges(7, &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]).expect("tree");
    graphs.push(("tree7".to_string(), Arc::new(tree)));
    graphs.extend((6..=12).map(|n| named(Family::Cycle(n))));
    for (name, g) in graphs {
        let n = g.order();
        let girth = g.girth();
        for d in (2..).take_while(|&d| 2 * d <= n && girth.at_least(2 * d)) {
            let k = n - 2 * d;
            let g = g.clone();
            plan.push(Case::new(format!("structural/girth/{name}/d={d}/k={k}"), n, move || {
                let expected = format!("sk_{k} full (girth {girth})");
                match total_cut_complex(&g, d) {
                    Ok(c) => {
                        let full = c.is_skeleton_full(k);
                        let computed = if full { expected.clone() } else { format!("sk_{k} not full (girth {girth})") };
                        Outcome::new(expected, computed, full)
                    }
                    Err(e) => Outcome::error(expected, e),
                }
            }));
        }
    }
}

fn coloring(plan: &mut Plan) {
    let d = 3;
    let target = Arc::new(bounded_independence_complex(&Graph::cycle(2 * d).expect("cycle"), d).expect("d >= 2"));
    {
        let target = target.clone();
        plan.push(Case::new(format!("structural/coloring/target/d={d}"), 2 * d, move || {
            let evens: VertexSet = (1..=d).map(|i| 2 * i).collect();
            let odds: VertexSet = (1..=d).map(|i| 2 * i - 1).collect();
            let join = SimplicialComplex::simplex_boundary(evens).join(&SimplicialComplex::simplex_boundary(odds));
            let pass = join.map(|j| j.same_simplices(&target)).unwrap_or(false);
            Outcome::new("BI_d(C_2d) = bd(evens) * bd(odds)", if pass { "equal" } else { "different" }, pass)
        }));
    }
    for n in [12, 13] {
        for p in 1..=2 {
            let target = target.clone();
            plan.push(Case::new(format!("structural/coloring/cyclepow:{n}:{p}/d={d}"), n, move || {
                let expected = "psi maps every facet of BI_d(C_n^p) into BI_d(C_2d)";
                let g = match Graph::cycle(n).and_then(|c| c.power(p)) {
                    Ok(g) => g,
                    Err(e) => return Outcome::error(expected, e),
                };
                let source = match bounded_independence_complex(&g, d) {
                    Ok(k) => k,
                    Err(e) => return Outcome::error(expected, e),
                };
                let bad = source
                    .facets()
                    .iter()
                    .find(|f| !target.contains(&f.iter().map(|i| psi(d, n, i)).collect::<VertexSet>()));
                match bad {
                    None => Outcome::new(expected, format!("all {} facets map to simplices", source.facets().len()), true),
                    Some(f) => Outcome::new(expected, format!("facet {f} maps outside"), false),
                }
            }));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn heawood_is_cubic_with_girth_six() {
        let h = heawood();
        assert!((1..=14).all(|v| h.degree(v) == 3));
        assert_eq!(h.girth(), Girth::Finite(6));
        assert_eq!(h.edge_count(), 21);
    }

    #[test]
    fn random_chordal_graphs_are_chordal() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..12 {
            let g = random_chordal(n, &mut rng);
            assert!(g.is_chordal() && g.is_connected());
        }
    }
}
