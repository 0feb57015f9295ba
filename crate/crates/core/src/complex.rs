//! Finite abstract simplicial complexes stored by their facets over an
//! explicit ground set.
//!
//! The ground set may contain phantom vertices (elements that are not
//! simplices). The void complex (no simplices at all) and the complex `{∅}`
//! are different values: the first has no facets and `void = true`, the
//! second has the single facet `∅`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Largest ground set accepted by [`SimplicialComplex::alexander_dual`].
pub const DUAL_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet {facet} is not contained in the ground set {ground}")]
    FacetOutsideGround { facet: VertexSet, ground: VertexSet },
    #[error("{0} is not contained in the ground set")]
    NotInGround(VertexSet),
    #[error("ground sets overlap on {0}")]
    OverlappingGround(VertexSet),
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("the Alexander dual needs a nonempty ground set")]
    EmptyGround,
    #[error("ground set of {size} vertices exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("d must be at least 2, got {0}")]
    InvalidD(usize),
    #[error("a cover needs at least one piece")]
    EmptyCover,
    #[error("malformed complex: {0}")]
    BadJson(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: VertexSet,
    facets: Vec<VertexSet>,
    void: bool,
}

/// Keeps the inclusion-maximal members of `sets`, deduplicated and sorted.
pub(crate) fn maximal_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let unique: BTreeSet<VertexSet> = sets.into_iter().collect();
    let mut by_size: Vec<VertexSet> = unique.into_iter().collect();
    by_size.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(by_size.len());
    for s in by_size {
        if !kept.iter().any(|k| k.len() > s.len() && s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of simplices; non-maximal
    /// members are dropped. An empty family yields the void complex.
    pub fn from_facets(ground: VertexSet, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self, ComplexError> {
        let facets = maximal_sets(facets);
        if let Some(f) = facets.iter().find(|f| !f.is_subset(&ground)) {
            return Err(ComplexError::FacetOutsideGround { facet: f.clone(), ground });
        }
        Ok(Self::from_checked(ground, facets))
    }

    fn from_checked(ground: VertexSet, facets: Vec<VertexSet>) -> Self {
        let void = facets.is_empty();
        SimplicialComplex { ground, facets, void }
    }

    fn from_unchecked(ground: VertexSet, facets: impl IntoIterator<Item = VertexSet>) -> Self {
        Self::from_checked(ground, maximal_sets(facets))
    }

    pub fn void(ground: VertexSet) -> Self {
        SimplicialComplex { ground, facets: Vec::new(), void: true }
    }

    /// The complex `{∅}`.
    pub fn empty_simplex(ground: VertexSet) -> Self {
        SimplicialComplex { ground, facets: vec![VertexSet::empty()], void: false }
    }

    /// The full simplex `Δ^V` on the ground set.
    pub fn simplex(ground: VertexSet) -> Self {
        SimplicialComplex { facets: vec![ground.clone()], ground, void: false }
    }

    /// `∂Δ^V`: every proper subset of the ground set. Void when `V = ∅`.
    pub fn simplex_boundary(ground: VertexSet) -> Self {
        let facets: Vec<_> = ground.iter().map(|v| ground.without(v)).collect();
        Self::from_unchecked(ground, facets)
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// `{∅}`: nonvoid with no vertices.
    pub fn is_empty_simplex(&self) -> bool {
        !self.void && self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension of the largest facet; `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains(&self, sigma: &VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(f))
    }

    /// Ground elements that are 0-simplices.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::empty(), |acc, f| acc.union(f))
    }

    pub fn phantom_vertices(&self) -> VertexSet {
        self.ground.difference(&self.vertices())
    }

    /// Equality of simplex families, ignoring the ground sets.
    pub fn same_simplices(&self, other: &SimplicialComplex) -> bool {
        self.void == other.void && self.facets == other.facets
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    /// Replaces the ground set, keeping the simplices.
    pub fn with_ground(&self, ground: VertexSet) -> Result<Self, ComplexError> {
        if let Some(f) = self.facets.iter().find(|f| !f.is_subset(&ground)) {
            return Err(ComplexError::FacetOutsideGround { facet: f.clone(), ground });
        }
        Ok(SimplicialComplex { ground, facets: self.facets.clone(), void: self.void })
    }

    /// Applies an injective relabeling to ground set and simplices.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        let ground: VertexSet = self.ground.iter().map(&f).collect();
        let facets = self.facets.iter().map(|s| s.iter().map(&f).collect::<VertexSet>());
        Self::from_unchecked(ground, facets.collect::<Vec<_>>())
    }

    /// Every simplex, sorted. Exponential in the facet sizes.
    pub fn simplices(&self) -> Vec<VertexSet> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            let items = f.as_slice();
            for m in 0u64..(1u64 << items.len()) {
                all.insert(VertexSet::from_sorted(
                    items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect(),
                ));
            }
        }
        all.into_iter().collect()
    }

    /// `Σ_F 2^{|F|}`, an upper bound on the number of simplices.
    pub fn simplex_count_bound(&self) -> f64 {
        self.facets.iter().map(|f| 2f64.powi(f.len() as i32)).sum()
    }

    fn check_in_ground(&self, sigma: &VertexSet) -> Result<(), ComplexError> {
        if sigma.is_subset(&self.ground) {
            Ok(())
        } else {
            Err(ComplexError::NotInGround(sigma.clone()))
        }
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}` on the ground set minus `σ`.
    /// Void when `σ` is not a simplex.
    pub fn link(&self, sigma: &VertexSet) -> Result<Self, ComplexError> {
        self.check_in_ground(sigma)?;
        let ground = self.ground.difference(sigma);
        let facets: Vec<_> = self.facets.iter().filter(|f| sigma.is_subset(f)).map(|f| f.difference(sigma)).collect();
        Ok(Self::from_unchecked(ground, facets))
    }

    /// `st(σ) = {τ : τ ∪ σ ∈ K}`. Void when `σ` is not a simplex.
    pub fn star(&self, sigma: &VertexSet) -> Result<Self, ComplexError> {
        self.check_in_ground(sigma)?;
        let facets: Vec<_> = self.facets.iter().filter(|f| sigma.is_subset(f)).cloned().collect();
        Ok(Self::from_checked(self.ground.clone(), facets))
    }

    /// `del(σ) = {τ ∈ K : σ ⊄ τ}` on the same ground set.
    pub fn deletion(&self, sigma: &VertexSet) -> Result<Self, ComplexError> {
        self.check_in_ground(sigma)?;
        let mut gens = Vec::new();
        for f in &self.facets {
            if sigma.is_subset(f) {
                gens.extend(sigma.iter().map(|w| f.without(w)));
            } else {
                gens.push(f.clone());
            }
        }
        Ok(Self::from_unchecked(self.ground.clone(), gens))
    }

    /// `K * J = {σ ∪ τ}` for complexes on disjoint ground sets.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self, ComplexError> {
        let overlap = self.ground.intersection(&other.ground);
        if !overlap.is_empty() {
            return Err(ComplexError::OverlappingGround(overlap));
        }
        let ground = self.ground.union(&other.ground);
        let facets: Vec<_> =
            self.facets.iter().flat_map(|f| other.facets.iter().map(move |g| f.union(g))).collect();
        Ok(Self::from_checked(ground, {
            let mut facets = facets;
            facets.sort();
            facets
        }))
    }

    /// All simplices with at most `d + 1` vertices.
    pub fn skeleton(&self, d: usize) -> Self {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            if f.len() <= d + 1 {
                out.insert(f.clone());
            } else {
                out.extend(f.subsets_of_size(d + 1));
            }
        }
        Self::from_checked(self.ground.clone(), out.into_iter().collect())
    }

    /// True iff every `(d + 1)`-subset of the ground set is a simplex.
    pub fn is_skeleton_full(&self, d: usize) -> bool {
        let k = d + 1;
        let n = self.ground.len();
        if k > n {
            return true;
        }
        if self.ground.len() <= 64 {
            let index = |v: usize| self.ground.as_slice().binary_search(&v).unwrap();
            let masks: Vec<u64> =
                self.facets.iter().map(|f| f.iter().fold(0u64, |m, v| m | 1 << index(v))).collect();
            return combinations_u64(n, k).all(|s| masks.iter().any(|f| s & !f == 0));
        }
        self.ground.subsets_of_size(k).iter().all(|s| self.contains(s))
    }

    /// The complex of simplices lying in both complexes.
    pub fn intersection(&self, other: &SimplicialComplex) -> Self {
        let ground = self.ground.intersection(&other.ground);
        let gens = self.facets.iter().flat_map(|f| other.facets.iter().map(move |g| f.intersection(g)));
        Self::from_unchecked(ground, gens.collect::<Vec<_>>())
    }

    pub fn union(&self, other: &SimplicialComplex) -> Self {
        let ground = self.ground.union(&other.ground);
        Self::from_unchecked(ground, self.facets.iter().chain(&other.facets).cloned().collect::<Vec<_>>())
    }

    /// `K* = {σ ⊆ V : V \ σ ∉ K}` over the same ground set `V`.
    pub fn alexander_dual(&self) -> Result<Self, ComplexError> {
        let n = self.ground.len();
        if n == 0 {
            return Err(ComplexError::EmptyGround);
        }
        if n > DUAL_LIMIT {
            return Err(ComplexError::TooLarge { size: n, limit: DUAL_LIMIT });
        }
        let ground = self.ground.as_slice();
        let index = |v: usize| ground.binary_search(&v).unwrap();
        let size = 1usize << n;
        let full = size - 1;
        let mut member = vec![false; size];
        for f in &self.facets {
            member[f.iter().fold(0usize, |m, v| m | 1 << index(v))] = true;
        }
        for m in (0..size).rev() {
            if !member[m] {
                let mut rest = full & !m;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    if member[m | b] {
                        member[m] = true;
                        break;
                    }
                    rest &= rest - 1;
                }
            }
        }
        let in_dual = |m: usize| !member[full & !m];
        let mut facets = Vec::new();
        for m in 0..size {
            if !in_dual(m) {
                continue;
            }
            let mut rest = full & !m;
            let mut maximal = true;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                if in_dual(m | b) {
                    maximal = false;
                    break;
                }
                rest &= rest - 1;
            }
            if maximal {
                facets.push(VertexSet::from_sorted(
                    (0..n).filter(|i| m >> i & 1 == 1).map(|i| ground[i]).collect(),
                ));
            }
        }
        facets.sort();
        Ok(Self::from_checked(self.ground.clone(), facets))
    }
}

/// All `k`-subsets of `0..n` as bitmasks (Gosper's hack).
pub(crate) fn combinations_u64(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut next = if k == 0 {
        Some(0u64)
    } else if k <= n {
        Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
    } else {
        None
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c);
            match r {
                Some(r) if r != 0 => {
                    let nxt = (((r ^ cur) >> 2) / c) | r;
                    (nxt & !limit == 0).then_some(nxt)
                }
                _ => None,
            }
        };
        Some(cur)
    })
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return write!(f, "void on {}", self.ground);
        }
        write!(f, "<")?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "> on {}", self.ground)
    }
}

/// A family of subcomplexes over one ground set.
#[derive(Clone, Debug)]
pub struct Cover {
    pieces: Vec<SimplicialComplex>,
}

impl Cover {
    pub fn new(pieces: Vec<SimplicialComplex>) -> Result<Self, ComplexError> {
        let first = pieces.first().ok_or(ComplexError::EmptyCover)?;
        if pieces.iter().any(|p| p.ground != first.ground) {
            return Err(ComplexError::GroundMismatch);
        }
        Ok(Cover { pieces })
    }

    /// Each facet of `k` as a full simplex piece.
    pub fn by_facets(k: &SimplicialComplex) -> Result<Self, ComplexError> {
        Cover::new(
            k.facets
                .iter()
                .map(|f| SimplicialComplex::simplex(f.clone()).with_ground(k.ground.clone()))
                .collect::<Result<_, _>>()?,
        )
    }

    pub fn pieces(&self) -> &[SimplicialComplex] {
        &self.pieces
    }

    pub fn union(&self) -> SimplicialComplex {
        let ground = self.pieces[0].ground.clone();
        SimplicialComplex::from_unchecked(ground, self.pieces.iter().flat_map(|p| p.facets.iter().cloned()).collect::<Vec<_>>())
    }

    pub fn covers(&self, k: &SimplicialComplex) -> bool {
        self.union().same_simplices(k)
    }

    /// Nerve on vertices `1..=m`: a set of pieces spans a simplex iff they
    /// share a nonempty simplex, i.e. a common vertex.
    pub fn nerve(&self) -> SimplicialComplex {
        let ground = VertexSet::range(self.pieces.len());
        let verts: Vec<VertexSet> = self.pieces.iter().map(SimplicialComplex::vertices).collect();
        let all = verts.iter().fold(VertexSet::empty(), |acc, v| acc.union(v));
        let gens: Vec<VertexSet> = all
            .iter()
            .map(|w| (1..=self.pieces.len()).filter(|&i| verts[i - 1].contains(w)).collect())
            .collect();
        if gens.is_empty() {
            return SimplicialComplex::empty_simplex(ground);
        }
        SimplicialComplex::from_unchecked(ground, gens)
    }
}

/// Order complex of a finite poset on elements `1..=n` given by its strict
/// order relation; simplices are chains, facets are maximal chains.
pub fn order_complex(n: usize, less: impl Fn(usize, usize) -> bool) -> SimplicialComplex {
    let ground = VertexSet::range(n);
    let lt: Vec<Vec<bool>> = (1..=n).map(|a| (1..=n).map(|b| a != b && less(a, b)).collect()).collect();
    let covers: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| lt[a][b] && !(0..n).any(|c| lt[a][c] && lt[c][b])).collect())
        .collect();
    let minimal: Vec<usize> = (0..n).filter(|&b| !(0..n).any(|a| lt[a][b])).collect();
    let mut chains = Vec::new();
    let mut stack: Vec<Vec<usize>> = minimal.into_iter().map(|m| vec![m]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        if covers[last].is_empty() {
            chains.push(chain.iter().map(|&i| i + 1).collect::<VertexSet>());
        } else {
            for &c in &covers[last] {
                let mut next = chain.clone();
                next.push(c);
                stack.push(next);
            }
        }
    }
    if chains.is_empty() {
        return SimplicialComplex::empty_simplex(ground);
    }
    chains.sort();
    SimplicialComplex::from_checked(ground, chains)
}

// -------------------------------------------------------------------------
// JSON interchange: {"ground": [...], "facets": [[...], ...], "void": bool}
// -------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub ground: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
    pub void: bool,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexJson {
            ground: k.ground.as_slice().to_vec(),
            facets: k.facets.iter().map(|f| f.as_slice().to_vec()).collect(),
            void: k.void,
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = ComplexError;

    fn try_from(j: ComplexJson) -> Result<Self, Self::Error> {
        if j.void != j.facets.is_empty() {
            return Err(ComplexError::BadJson(
                "`void` must be true exactly when `facets` is empty (use [[]] for the complex {∅})".into(),
            ));
        }
        SimplicialComplex::from_facets(VertexSet::new(j.ground), j.facets.into_iter().map(VertexSet::new))
    }
}

impl SimplicialComplex {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ComplexJson::from(self)).expect("complex json serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ComplexError> {
        let j: ComplexJson = serde_json::from_str(text)
            .map_err(|e| ComplexError::BadJson(format!("line {} column {}: {e}", e.line(), e.column())))?;
        SimplicialComplex::try_from(j)
    }
}
