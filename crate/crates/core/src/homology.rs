//! Reduced integral homology and cohomology of simplicial complexes.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chain::{ChainComplex, Limits};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::integer::Integer;
use crate::snf::smith_invariants;

/// Largest ground set accepted by [`verify_alexander_duality`].
pub const DUALITY_MAX_GROUND: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("complex on {size} ground vertices exceeds the enumeration cap of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("boundary of boundary is nonzero at degree {0}")]
    BoundarySquare(isize),
    #[error("Euler characteristic mismatch: chains give {chains}, Betti numbers give {betti}")]
    Euler { chains: i64, betti: i64 },
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// One nonzero homology group `Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: isize,
    pub betti: usize,
    pub torsion: Vec<Integer>,
}

impl DegreeHomology {
    fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology listed by degree; trivial degrees are omitted.
///
/// The void complex has no groups at all and is flagged as such; `{∅}` has
/// `H̃_{-1} = Z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub reduced: Vec<DegreeHomology>,
    pub euler: i64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub void: bool,
}

impl HomologyProfile {
    pub fn from_groups(groups: impl IntoIterator<Item = DegreeHomology>) -> Self {
        let mut by_degree: BTreeMap<isize, DegreeHomology> = BTreeMap::new();
        for g in groups {
            let e = by_degree.entry(g.degree).or_insert(DegreeHomology { degree: g.degree, betti: 0, torsion: Vec::new() });
            e.betti += g.betti;
            e.torsion.extend(g.torsion);
        }
        let reduced: Vec<DegreeHomology> = by_degree
            .into_values()
            .map(|mut g| {
                g.torsion.retain(|t| !t.is_one());
                g.torsion = normalize_torsion(std::mem::take(&mut g.torsion));
                g
            })
            .filter(|g| !g.is_trivial())
            .collect();
        let euler = reduced.iter().map(|g| if g.degree % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum();
        HomologyProfile { reduced, euler, void: false }
    }

    pub fn zero() -> Self {
        HomologyProfile::default()
    }

    pub fn void() -> Self {
        HomologyProfile { void: true, ..Default::default() }
    }

    /// `⋁_count S^dim`.
    pub fn sphere_wedge(dim: isize, count: usize) -> Self {
        HomologyProfile::from_groups([DegreeHomology { degree: dim, betti: count, torsion: Vec::new() }])
    }

    pub fn group(&self, q: isize) -> Option<&DegreeHomology> {
        self.reduced.iter().find(|g| g.degree == q)
    }

    pub fn betti(&self, q: isize) -> usize {
        self.group(q).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, q: isize) -> &[Integer] {
        self.group(q).map_or(&[], |g| &g.torsion)
    }

    /// All reduced groups vanish (true for the void complex as well).
    pub fn is_acyclic(&self) -> bool {
        self.reduced.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        self.reduced.iter().any(|g| !g.torsion.is_empty())
    }

    /// Same groups with every degree moved up by `by`.
    pub fn shifted(&self, by: isize) -> Self {
        HomologyProfile {
            reduced: self.reduced.iter().map(|g| DegreeHomology { degree: g.degree + by, ..g.clone() }).collect(),
            euler: if by % 2 == 0 { self.euler } else { -self.euler },
            void: self.void,
        }
    }

    /// Equality of the groups, ignoring the void flag.
    pub fn same_groups(&self, other: &HomologyProfile) -> bool {
        self.reduced == other.reduced
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return write!(f, "void");
        }
        if self.reduced.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.reduced.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "H{}=", g.degree)?;
            let mut parts = Vec::new();
            match g.betti {
                0 => {}
                1 => parts.push("Z".to_string()),
                b => parts.push(format!("Z^{b}")),
            }
            parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
            write!(f, "{}", parts.join("+"))?;
        }
        Ok(())
    }
}

/// Rewrites a list of cyclic orders as an invariant-factor chain.
fn normalize_torsion(ts: Vec<Integer>) -> Vec<Integer> {
    if ts.len() < 2 {
        return ts;
    }
    let mut rest = ts;
    rest.sort();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            if !rest[j].is_divisible_by(&rest[i]) {
                let g = rest[i].gcd(&rest[j]);
                let l = rest[i].lcm(&rest[j]);
                rest[i] = g;
                rest[j] = l;
            }
        }
    }
    rest.retain(|t| !t.is_one());
    rest
}

/// Homology of an augmented chain complex, with the boundary-square and
/// Euler checks applied.
pub fn homology_of_chain(c: &ChainComplex) -> Result<HomologyProfile, HomologyError> {
    if let Some(q) = c.boundary_square_failure() {
        return Err(HomologyError::BoundarySquare(q));
    }
    let Some(top) = c.top_degree() else { return Ok(HomologyProfile::zero()) };
    let degrees: Vec<isize> = (0..=top).collect();
    let invariants: Vec<Vec<Integer>> = degrees
        .par_iter()
        .map(|&q| c.boundary_ref(q).map(smith_invariants).unwrap_or_default())
        .collect();
    let inv = |q: isize| -> &[Integer] { usize::try_from(q).ok().and_then(|i| invariants.get(i)).map_or(&[], Vec::as_slice) };
    let groups: Vec<DegreeHomology> = (-1..=top)
        .map(|q| {
            let betti = c.rank(q) - inv(q).len() - inv(q + 1).len();
            let torsion = inv(q + 1).iter().filter(|t| !t.is_one()).cloned().collect();
            DegreeHomology { degree: q, betti, torsion }
        })
        .collect();
    let profile = HomologyProfile::from_groups(groups);
    let chains = c.euler_characteristic();
    if chains != profile.euler {
        return Err(HomologyError::Euler { chains, betti: profile.euler });
    }
    Ok(profile)
}

pub fn reduced_homology(k: &SimplicialComplex) -> Result<HomologyProfile, HomologyError> {
    reduced_homology_with(k, &Limits::default())
}

pub fn reduced_homology_with(k: &SimplicialComplex, limits: &Limits) -> Result<HomologyProfile, HomologyError> {
    limits.admit(k).map_err(|limit| HomologyError::TooLarge { size: k.ground().len(), limit })?;
    if k.is_void() {
        return Ok(HomologyProfile::void());
    }
    homology_of_chain(&ChainComplex::new(k))
}

/// `H̃^q ≅ free(H̃_q) ⊕ T(H̃_{q-1})`.
pub fn cohomology_from_homology(p: &HomologyProfile) -> HomologyProfile {
    let groups = p.reduced.iter().flat_map(|g| {
        [
            DegreeHomology { degree: g.degree, betti: g.betti, torsion: Vec::new() },
            DegreeHomology { degree: g.degree + 1, betti: 0, torsion: g.torsion.clone() },
        ]
    });
    HomologyProfile { void: p.void, ..HomologyProfile::from_groups(groups) }
}

/// Homology of the quotient `C(k) / C(l)` of augmented chain complexes.
pub fn relative_homology(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<HomologyProfile, HomologyError> {
    relative_homology_with(k, l, &Limits::default())
}

pub fn relative_homology_with(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    limits: &Limits,
) -> Result<HomologyProfile, HomologyError> {
    if k.ground() != l.ground() {
        return Err(ComplexError::GroundMismatch.into());
    }
    if !l.is_subcomplex_of(k) {
        return Err(HomologyError::NotSubcomplex(format!("{l} is not inside {k}")));
    }
    limits.admit(k).map_err(|limit| HomologyError::TooLarge { size: k.ground().len(), limit })?;
    homology_of_chain(&ChainComplex::relative(k, l))
}

/// Checks `H̃_i(K) ≅ H̃^{n-i-3}(K*)` in every degree, `n` the ground-set size.
pub fn verify_alexander_duality(k: &SimplicialComplex) -> Result<bool, HomologyError> {
    let n = k.ground().len();
    if n > DUALITY_MAX_GROUND {
        return Err(HomologyError::TooLarge { size: n, limit: DUALITY_MAX_GROUND });
    }
    let dual = k.alexander_dual()?;
    let h = reduced_homology(k)?;
    let co = cohomology_from_homology(&reduced_homology(&dual)?);
    let mirrored = HomologyProfile::from_groups(
        co.reduced.iter().map(|g| DegreeHomology { degree: n as isize - g.degree - 3, ..g.clone() }),
    );
    Ok(h.same_groups(&mirrored))
}

/// Expected homotopy type: void, contractible, or `⋁_count S^dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum WedgeClaim {
    Void,
    Contractible,
    Wedge { dim: usize, count: usize },
}

impl WedgeClaim {
    /// `⋁_count S^dim`, collapsing to contractible when `count = 0`.
    pub fn wedge(dim: usize, count: usize) -> Self {
        if count == 0 {
            WedgeClaim::Contractible
        } else {
            WedgeClaim::Wedge { dim, count }
        }
    }

    pub fn sphere(dim: usize) -> Self {
        WedgeClaim::Wedge { dim, count: 1 }
    }
}

impl fmt::Display for WedgeClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WedgeClaim::Void => write!(f, "void"),
            WedgeClaim::Contractible => write!(f, "contractible"),
            WedgeClaim::Wedge { dim, count: 1 } => write!(f, "S^{dim}"),
            WedgeClaim::Wedge { dim, count } => write!(f, "wedge {count} x S^{dim}"),
        }
    }
}

pub fn matches_wedge(p: &HomologyProfile, claim: &WedgeClaim) -> bool {
    match claim {
        WedgeClaim::Void => p.void,
        WedgeClaim::Contractible => !p.void && p.is_acyclic(),
        WedgeClaim::Wedge { dim, count } => {
            !p.void && *count >= 1 && p.same_groups(&HomologyProfile::sphere_wedge(*dim as isize, *count))
        }
    }
}
