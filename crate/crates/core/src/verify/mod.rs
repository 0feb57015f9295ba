//! Verification harness: checks computed homology of graph complexes
//! against closed-form homotopy types and structural identities.
//!
//! Every suite expands into a deterministic list of cases. Cases run in
//! parallel and the report lists them in generation order.

pub mod claims;
pub mod report;
mod structural;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph_complexes::ComplexKind;
use crate::homology::{matches_wedge, reduced_homology, verify_alexander_duality, WedgeClaim, DUALITY_MAX_GROUND};

pub use report::{Entry, Report, Skipped};

pub const DEFAULT_SEED: u64 = 0x7c_5eed;
/// Upper bound on the order of any graph a case computes homology for.
pub const MAX_CASE_ORDER: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Cycles,
    CyclePowers,
    Multipartite,
    Products,
    Unions,
    Structural,
    Duality,
    Posets,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Cycles,
        Suite::CyclePowers,
        Suite::Multipartite,
        Suite::Products,
        Suite::Unions,
        Suite::Structural,
        Suite::Duality,
        Suite::Posets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cycles => "cycles",
            Suite::CyclePowers => "cyclepowers",
            Suite::Multipartite => "multipartite",
            Suite::Products => "products",
            Suite::Unions => "unions",
            Suite::Structural => "structural",
            Suite::Duality => "duality",
            Suite::Posets => "posets",
        }
    }

    /// Suite names accepted on the command line, `all` included.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, VerifyError> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(|p| p.trim().parse()).collect()
    }

    fn rng(self, seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed ^ (self as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid filter pattern `{pattern}`: {reason}")]
    BadPattern { pattern: String, reason: String },
    #[error("filter `{0}` matches no case")]
    NoMatch(String),
}

/// Expected and computed descriptions for one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Outcome {
    pub fn new(expected: impl Into<String>, computed: impl Into<String>, pass: bool) -> Self {
        Outcome { expected: expected.into(), computed: computed.into(), pass }
    }

    pub fn error(expected: impl Into<String>, err: impl fmt::Display) -> Self {
        Outcome { expected: expected.into(), computed: format!("error: {err}"), pass: false }
    }

    /// Appends a side condition to both descriptions.
    fn and(mut self, label: &str, holds: bool) -> Self {
        self.expected.push_str(&format!("; {label}"));
        self.computed.push_str(&format!("; {}{label}", if holds { "" } else { "NOT " }));
        self.pass &= holds;
        self
    }

    /// Drops the leading separator left by chaining [`Outcome::and`] from an empty outcome.
    fn trimmed(mut self) -> Self {
        for s in [&mut self.expected, &mut self.computed] {
            if s.starts_with("; ") {
                s.drain(..2);
            }
        }
        self
    }
}

type Check = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Case {
    pub id: String,
    /// Order of the largest graph the case builds complexes on.
    pub order: usize,
    check: Check,
}

impl Case {
    pub fn new(id: impl Into<String>, order: usize, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Case { id: id.into(), order, check: Box::new(check) }
    }

    pub fn run(&self) -> Entry {
        let start = Instant::now();
        let out = (self.check)();
        Entry {
            id: self.id.clone(),
            expected: out.expected,
            computed: out.computed,
            pass: out.pass,
            ms: start.elapsed().as_millis() as u64,
        }
    }
}

impl fmt::Debug for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Case").field("id", &self.id).field("order", &self.order).finish()
    }
}

#[derive(Debug, Default)]
pub struct Plan {
    pub cases: Vec<Case>,
    pub skipped: Vec<Skipped>,
}

impl Plan {
    fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.skipped.push(Skipped { id: id.into(), reason: reason.into() });
    }

    /// Keeps the cases whose id matches the glob `pattern`.
    pub fn filter(mut self, pattern: &str) -> Result<Plan, VerifyError> {
        let glob = glob::Pattern::new(pattern)
            .map_err(|e| VerifyError::BadPattern { pattern: pattern.to_string(), reason: e.to_string() })?;
        self.cases.retain(|c| glob.matches(&c.id));
        self.skipped.retain(|s| glob.matches(&s.id));
        if self.cases.is_empty() {
            return Err(VerifyError::NoMatch(pattern.to_string()));
        }
        Ok(self)
    }

    pub fn run(&self, seed: u64) -> Report {
        let entries: Vec<Entry> = self.cases.par_iter().map(Case::run).collect();
        Report::new(entries, self.skipped.clone(), seed)
    }
}

/// Expands the suites into cases, in suite order.
pub fn plan(suites: &[Suite], seed: u64) -> Plan {
    let mut plan = Plan::default();
    for &s in suites {
        let mut rng = s.rng(seed);
        match s {
            Suite::Cycles => suites::cycles(&mut plan),
            Suite::CyclePowers => suites::cycle_powers(&mut plan),
            Suite::Multipartite => suites::multipartite(&mut plan),
            Suite::Products => suites::products(&mut plan),
            Suite::Unions => suites::unions(&mut plan),
            Suite::Structural => structural::structural(&mut plan, &mut rng),
            Suite::Duality => suites::duality(&mut plan, &mut rng),
            Suite::Posets => suites::posets(&mut plan),
        }
    }
    plan
}

pub fn run(suites: &[Suite], filter: Option<&str>, seed: u64) -> Result<Report, VerifyError> {
    let mut p = plan(suites, seed);
    if let Some(pattern) = filter {
        p = p.filter(pattern)?;
    }
    Ok(p.run(seed))
}

pub fn run_all(filter: Option<&str>) -> Result<Report, VerifyError> {
    run(&Suite::ALL, filter, DEFAULT_SEED)
}

/// Computes the homology of `kind` on `g` and compares it with `claim`.
///
/// With `sk2` the complex must also contain every 2-simplex on its ground
/// set. On ground sets of at most 12 vertices Alexander duality is checked
/// as well.
pub fn check_claim(g: &Graph, kind: ComplexKind, d: usize, claim: WedgeClaim, sk2: bool) -> Outcome {
    let expected = claim.to_string();
    let k = match kind.build(g, d) {
        Ok(k) => k,
        Err(e) => return Outcome::error(expected, e),
    };
    let profile = match reduced_homology(&k) {
        Ok(p) => p,
        Err(e) => return Outcome::error(expected, e),
    };
    let mut out = Outcome::new(expected, profile.to_string(), matches_wedge(&profile, &claim));
    if sk2 {
        out = out.and("sk2 full", k.is_skeleton_full(2));
    }
    if g.order() <= DUALITY_MAX_GROUND && g.order() > 0 {
        match verify_alexander_duality(&k) {
            Ok(ok) => out = out.and("duality", ok),
            Err(e) => return Outcome::error(out.expected, e),
        }
    }
    out
}

/// `G(n, 1/2)`.
pub fn random_graph(n: usize, rng: &mut impl rand::Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("vertices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_list("all").unwrap().len(), 8);
        assert_eq!(Suite::parse_list("cycles,posets").unwrap(), vec![Suite::Cycles, Suite::Posets]);
        assert!(Suite::parse_list("cycle").is_err());
    }

    #[test]
    fn plans_are_deterministic_and_bounded() {
        let a = plan(&Suite::ALL, 11);
        let b = plan(&Suite::ALL, 11);
        let ids = |p: &Plan| p.cases.iter().map(|c| c.id.clone()).collect::<Vec<_>>();
        assert_eq!(ids(&a), ids(&b));
        let mut unique = ids(&a);
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), a.cases.len(), "case ids are unique");
        assert!(a.cases.iter().all(|c| c.order <= MAX_CASE_ORDER), "{:?}", a.cases.iter().find(|c| c.order > MAX_CASE_ORDER));
        for s in Suite::ALL {
            assert!(a.cases.iter().any(|c| c.id.starts_with(&format!("{s}/"))), "{s} is empty");
        }
    }

    #[test]
    fn filters() {
        let p = plan(&[Suite::Cycles], 1).filter("cycles/bi/*").unwrap();
        assert!(!p.cases.is_empty());
        assert!(p.cases.iter().all(|c| c.id.starts_with("cycles/bi/")));
        assert!(matches!(plan(&[Suite::Cycles], 1).filter("nothing*"), Err(VerifyError::NoMatch(_))));
        assert!(matches!(plan(&[Suite::Cycles], 1).filter("["), Err(VerifyError::BadPattern { .. })));
    }

    #[test]
    fn claim_checks_fail_on_wrong_claims() {
        let g = Family::Cycle(6).build().unwrap();
        assert!(check_claim(&g, ComplexKind::TotalCut, 2, WedgeClaim::sphere(2), true).pass);
        let wrong = check_claim(&g, ComplexKind::TotalCut, 2, WedgeClaim::sphere(1), false);
        assert!(!wrong.pass);
        assert_eq!(wrong.expected, "S^1; duality");
        assert!(check_claim(&g, ComplexKind::TotalCut, 3, WedgeClaim::sphere(0), false).pass);
        let thin = check_claim(&g, ComplexKind::TotalCut, 3, WedgeClaim::sphere(0), true);
        assert!(!thin.pass);
        assert!(thin.computed.contains("NOT sk2 full"));
    }
}
