//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use totalcut::homology::homology_of_chain;
use totalcut::snf::{smith_invariants, SparseMatrix};
use totalcut::verify::claims::{grid_count, rook_count};
use totalcut::verify::{self, Report, Suite, DEFAULT_SEED};
use totalcut::{
    reduced_homology, ChainComplex, ComplexKind, Family, Integer, SimplicialComplex, VertexSet,
};

struct Criterion {
    number: usize,
    title: &'static str,
    budget: Duration,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn suite(suite: Suite) -> Report {
    verify::run(&[suite], None, DEFAULT_SEED).expect("suite runs")
}

/// All entries pass and every required id is present and passing.
fn suite_verdict(report: &Report, required: &[(&str, &str)]) -> (bool, String) {
    let mut problems: Vec<String> = report.failed().map(|e| format!("{}: expected {}, computed {}", e.id, e.expected, e.computed)).collect();
    for (id, expected) in required {
        match report.entries.iter().find(|e| e.id == *id) {
            None => problems.push(format!("{id}: missing")),
            Some(e) if !e.pass => {}
            Some(e) if !e.expected.starts_with(expected) => {
                problems.push(format!("{id}: expected {} but required {expected}", e.expected))
            }
            Some(_) => {}
        }
    }
    let summary = format!("{} cases, {} failures", report.entries.len(), report.failures);
    if problems.is_empty() {
        (true, summary)
    } else {
        (false, format!("{summary}; {}", problems.join("; ")))
    }
}

fn prefixes_present(report: &Report, prefixes: &[&str]) -> Vec<String> {
    prefixes
        .iter()
        .filter(|p| !report.entries.iter().any(|e| e.id.starts_with(*p)))
        .map(|p| format!("no case under {p}"))
        .collect()
}

fn criterion(number: usize, title: &'static str, budget_secs: u64, check: impl FnOnce() -> (bool, String)) -> Criterion {
    let start = Instant::now();
    let (pass, detail) = check();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_secs);
    let pass = pass && elapsed <= budget;
    Criterion { number, title, budget, pass, detail, elapsed }
}

fn rp2() -> SimplicialComplex {
    let facets = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6], [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]];
    SimplicialComplex::from_facets(VertexSet::range(6), facets.iter().map(|f| VertexSet::from(*f))).unwrap()
}

/// Graph complexes drawn from every family the suites cover.
fn engine_complexes() -> Vec<(String, SimplicialComplex)> {
    let mut families: Vec<Family> = Vec::new();
    families.extend((3..=13).map(Family::Cycle));
    families.extend((6..=13).flat_map(|n| (2..=4).filter(move |r| 2 * r < n).map(move |r| Family::CyclePower(n, r))));
    let parts: [&[usize]; 6] = [&[2, 2], &[3, 3], &[2, 3, 4], &[1, 1, 4], &[3, 3, 3], &[2, 2, 2, 2]];
    families.extend(parts.iter().map(|p| Family::Multipartite(p.to_vec())));
    families.extend([vec![2, 3], vec![3, 4], vec![2, 2, 3]].into_iter().flat_map(|s| [Family::Grid(s.clone()), Family::Rook(s)]));
    families.push(Family::Union(vec![Family::Path(2); 5]));
    families.push(Family::Union(vec![Family::PathPower(5, 2), Family::Path(3), Family::Path(1)]));
    families.push(Family::Petersen);
    let mut out = Vec::new();
    for f in families {
        let g = f.build().unwrap();
        for d in 2..=4 {
            for kind in [ComplexKind::TotalCut, ComplexKind::BoundedIndependence] {
                out.push((format!("{kind}/d={d}/{f}"), kind.build(&g, d).unwrap()));
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let mut results = Vec::new();

    results.push(criterion(1, "cycle table", 120, || {
        let r = suite(Suite::Cycles);
        let (mut pass, mut detail) = suite_verdict(&r, &[
            ("cycles/totalcut/d=2/cycle:4", "S^0"),
            ("cycles/totalcut/d=4/cycle:13", "S^5"),
            ("cycles/bi/d=4/cycle:8", "S^5"),
        ]);
        if r.entries.len() != 48 {
            pass = false;
            detail.push_str("; expected 48 cases");
        }
        (pass, detail)
    }));

    results.push(criterion(2, "cycle powers", 300, || {
        let r = suite(Suite::CyclePowers);
        suite_verdict(&r, &[
            ("cyclepowers/general/totalcut/d=3/cyclepow:13:2", "S^7"),
            ("cyclepowers/general/bi/d=3/cyclepow:12:2", "S^3"),
            ("cyclepowers/tight/totalcut/d=2/cyclepow:6:2", "S^1"),
            ("cyclepowers/tight/totalcut/d=2/cyclepow:8:3", "S^2"),
            ("cyclepowers/tight/totalcut/d=3/cyclepow:9:2", "S^1"),
            ("cyclepowers/range-a/totalcut/d=2/cyclepow:8:3", "S^2"),
            ("cyclepowers/range-c/totalcut/d=2/cyclepow:9:3", "wedge 2 x S^4"),
            ("cyclepowers/range-d/totalcut/d=2/cyclepow:13:3", "S^9"),
            ("cyclepowers/range-b/totalcut/d=2/cyclepow:11:4", "S^5"),
        ])
    }));

    results.push(criterion(3, "multipartite", 180, || {
        let r = suite(Suite::Multipartite);
        let (mut pass, mut detail) = suite_verdict(&r, &[
            ("multipartite/totalcut/d=3/multipartite:2,2,2", "void"),
            ("multipartite/totalcut/d=3/multipartite:3,2", "contractible"),
            ("multipartite/bi/d=3/multipartite:3,3,3,3", "S^7"),
            ("multipartite/totalcut/d=3/multipartite:3,3,3,3", "S^2"),
            ("multipartite/totalcut/d=2/multipartite:4,3", "wedge 6 x S^3"),
        ]);
        // 259 part lists with at least two parts, two values of d, two complexes
        if r.entries.len() != 259 * 4 {
            pass = false;
            detail.push_str("; expected 1036 cases");
        }
        (pass, detail)
    }));

    results.push(criterion(4, "products", 300, || {
        let r = suite(Suite::Products);
        let (mut pass, mut detail) = suite_verdict(&r, &[
            ("products/bi/d=2/rook:2,2,2", "wedge 5 x S^1"),
            ("products/totalcut/d=2/rook:2,2,2", "wedge 5 x S^4"),
            ("products/bi/d=2/grid:3,3", "wedge 4 x S^1"),
            ("products/totalcut/d=2/grid:3,3", "wedge 4 x S^5"),
            ("products/bi/d=2/rook:3,4", "wedge 6 x S^1"),
        ]);
        if rook_count(&[2, 2, 2]) != 5 || grid_count(&[3, 3]) != 4 {
            pass = false;
            detail.push_str("; closed-form counts wrong");
        }
        (pass, detail)
    }));

    results.push(criterion(5, "disjoint unions", 120, || {
        let r = suite(Suite::Unions);
        suite_verdict(&r, &[
            ("unions/totalcut/d=2/union:path:2+path:2+path:2+path:2+path:2", "wedge 4 x S^7"),
            ("unions/bi/d=3/union:path:2+path:2+path:2+path:2+path:2", "wedge 6 x S^1"),
            ("unions/bi/d=3/union:path:3+path:3", "contractible"),
        ])
    }));

    results.push(criterion(6, "duality property", 180, || {
        let r = suite(Suite::Duality);
        let graphs: std::collections::BTreeSet<&str> = r.entries.iter().map(|e| e.id.split('/').nth(1).unwrap()).collect();
        let (mut pass, mut detail) = suite_verdict(&r, &[]);
        if graphs.len() != 50 {
            pass = false;
            detail.push_str(&format!("; {} graphs instead of 50", graphs.len()));
        }
        (pass, detail)
    }));

    results.push(criterion(7, "structural", 300, || {
        let r = suite(Suite::Structural);
        let (mut pass, mut detail) = suite_verdict(&r, &[
            ("structural/girth/petersen/d=2/k=6", "sk_6 full"),
            ("structural/coloring/cyclepow:12:1/d=3", "psi"),
            ("structural/coloring/cyclepow:13:2/d=3", "psi"),
        ]);
        let missing = prefixes_present(&r, &[
            "structural/dominated-closed/",
            "structural/dominated-open/",
            "structural/chordal/",
            "structural/deletion-a/",
            "structural/deletion-b/",
            "structural/deletion-c/",
            "structural/suspension/",
            "structural/pair-bounded/",
            "structural/pair-powers/",
            "structural/girth/",
            "structural/coloring/",
        ]);
        if !missing.is_empty() {
            pass = false;
            detail.push_str(&format!("; {}", missing.join("; ")));
        }
        (pass, detail)
    }));

    results.push(criterion(8, "posets", 60, || {
        let r = suite(Suite::Posets);
        let (mut pass, mut detail) = suite_verdict(&r, &[("posets/d=3/k=3", "S^1"), ("posets/d=2/k=4", "wedge 3 x S^0")]);
        if r.entries.len() != 15 {
            pass = false;
            detail.push_str("; expected 15 cases");
        }
        (pass, detail)
    }));

    results.push(criterion(9, "engine oracles", 120, || {
        let mut problems = Vec::new();
        let complexes = engine_complexes();
        for (name, k) in &complexes {
            let c = ChainComplex::new(k);
            if let Some(q) = c.boundary_square_failure() {
                problems.push(format!("{name}: boundary squares to nonzero at degree {q}"));
            }
            match homology_of_chain(&c) {
                Ok(p) if !k.is_void() && p.euler != c.euler_characteristic() => problems.push(format!("{name}: euler")),
                Ok(_) => {}
                Err(e) => problems.push(format!("{name}: {e}")),
            }
        }
        let snf = smith_invariants(&SparseMatrix::from_dense(&[vec![2, 4], vec![6, 8]]));
        if snf != [Integer::from(2), Integer::from(4)] {
            problems.push(format!("snf [[2,4],[6,8]] gave {snf:?}"));
        }
        let h = reduced_homology(&rp2()).unwrap();
        if !(h.betti(1) == 0 && h.torsion(1) == [Integer::from(2)] && h.reduced.len() == 1) {
            problems.push(format!("RP^2 gave {h}"));
        }
        let detail = format!("{} complexes; snf diag(2,4); RP^2 {h}", complexes.len());
        if problems.is_empty() {
            (true, detail)
        } else {
            (false, format!("{detail}; {}", problems.join("; ")))
        }
    }));

    println!();
    for c in &results {
        println!(
            "{} criterion {}: {} (exact match; {:.1}s of {}s budget) {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.number,
            c.title,
            c.elapsed.as_secs_f64(),
            c.budget.as_secs(),
            c.detail
        );
    }
    let failed = results.iter().filter(|c| !c.pass).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
