//! Compositions and the composition posets `𝒞_{m,k}`.

use thiserror::Error;

use crate::complex::{order_complex, SimplicialComplex};
use crate::homology::{matches_wedge, reduced_homology, HomologyError, WedgeClaim};

/// Largest poset whose order complex [`verify_composition_wedge`] will build.
pub const MAX_POSET_ELEMENTS: usize = 5_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("compositions of {d} into {k} parts need 1 <= k <= d")]
    BadParts { d: usize, k: usize },
    #[error("the composition poset needs m > k >= 1, got m = {m}, k = {k}")]
    BadPoset { m: usize, k: usize },
    #[error("d must be at least 2, got {0}")]
    BadD(usize),
    #[error("poset has {size} elements, above the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Ordered `k`-tuples of positive integers summing to `d`, in lexicographic order.
pub fn compositions(d: usize, k: usize) -> Result<Vec<Vec<usize>>, PosetError> {
    if k < 1 || k > d {
        return Err(PosetError::BadParts { d, k });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fill(d, k, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, parts: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        current.push(remaining);
        out.push(current.clone());
        current.pop();
        return;
    }
    for first in 1..=remaining - (parts - 1) {
        current.push(first);
        fill(remaining - first, parts - 1, current, out);
        current.pop();
    }
}

/// `𝒞_{m,k}`: compositions of `k+1, ..., m` into `k` parts under the
/// coordinatewise order, optionally with `(1, ..., 1)` added at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionPoset {
    m: usize,
    k: usize,
    augmented: bool,
    elements: Vec<Vec<usize>>,
}

impl CompositionPoset {
    pub fn new(m: usize, k: usize) -> Result<Self, PosetError> {
        Self::build(m, k, false)
    }

    /// The poset with `(1, ..., 1)` adjoined.
    pub fn augmented(m: usize, k: usize) -> Result<Self, PosetError> {
        Self::build(m, k, true)
    }

    fn build(m: usize, k: usize, augmented: bool) -> Result<Self, PosetError> {
        if k < 1 || m <= k {
            return Err(PosetError::BadPoset { m, k });
        }
        let size = binomial(m, k) - 1 + usize::from(augmented);
        if size > MAX_POSET_ELEMENTS {
            return Err(PosetError::TooLarge { size, limit: MAX_POSET_ELEMENTS });
        }
        let first = if augmented { k } else { k + 1 };
        let mut elements = Vec::with_capacity(size);
        for s in first..=m {
            elements.extend(compositions(s, k)?);
        }
        elements.sort();
        Ok(CompositionPoset { m, k, augmented, elements })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    /// Elements in lexicographic order; element `i` is vertex `i + 1` of the order complex.
    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn le(a: &[usize], b: &[usize]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    pub fn order_complex(&self) -> SimplicialComplex {
        let e = &self.elements;
        order_complex(e.len(), |a, b| Self::le(&e[a - 1], &e[b - 1]) && e[a - 1] != e[b - 1])
    }
}

/// Homotopy type of `Δ(𝒞_{d+k-1,k})`.
pub fn composition_wedge_claim(d: usize, k: usize) -> WedgeClaim {
    if k < d {
        WedgeClaim::Contractible
    } else {
        WedgeClaim::wedge(d - 2, binomial(k - 1, d - 1))
    }
}

/// Outcome of checking one instance of the composition-poset wedge law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetCheck {
    pub d: usize,
    pub k: usize,
    pub elements: usize,
    pub expected: WedgeClaim,
    pub computed: crate::homology::HomologyProfile,
    pub pass: bool,
}

pub fn verify_composition_wedge(d: usize, k: usize) -> Result<PosetCheck, PosetError> {
    if d < 2 {
        return Err(PosetError::BadD(d));
    }
    if k < 1 {
        return Err(PosetError::BadPoset { m: d + k - 1, k });
    }
    let poset = CompositionPoset::new(d + k - 1, k)?;
    let computed = reduced_homology(&poset.order_complex())?;
    let expected = composition_wedge_claim(d, k);
    let pass = matches_wedge(&computed, &expected);
    Ok(PosetCheck { d, k, elements: poset.len(), expected, computed, pass })
}
