use serde::{Deserialize, Serialize};

use super::Triangulation;
use crate::error::{Error, Result};
use crate::moment::{classify_unchecked, PairClass, Simplex};

/// The `⌈d/2⌉`-simplices lying weakly below a triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubmersionSet {
    pub d: usize,
    pub members: Vec<Simplex>,
}

impl SubmersionSet {
    pub fn contains(&self, s: Simplex) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn intersection(&self, other: &SubmersionSet) -> SubmersionSet {
        SubmersionSet {
            d: self.d,
            members: self
                .members
                .iter()
                .copied()
                .filter(|s| other.contains(*s))
                .collect(),
        }
    }

    /// Vertex count of the members.
    pub fn member_size(d: usize) -> usize {
        d.div_ceil(2) + 1
    }
}

fn check_size(sigma: Simplex, t: &Triangulation) -> Result<()> {
    if sigma.is_empty() {
        return Err(Error::EmptySimplex);
    }
    if sigma.len() > t.d() + 1 {
        return Err(Error::SimplexTooLarge {
            simplex: sigma,
            len: sigma.len(),
            max: t.d() + 1,
            d: t.d(),
        });
    }
    Ok(())
}

/// `σ ≤_{d+1} T`: no facet of `T` lies strictly below `σ`.
pub fn simplex_below(sigma: Simplex, t: &Triangulation) -> Result<bool> {
    check_size(sigma, t)?;
    Ok(below_unchecked(sigma, t))
}

/// `σ ≥_{d+1} T`.
pub fn simplex_above(sigma: Simplex, t: &Triangulation) -> Result<bool> {
    check_size(sigma, t)?;
    let d = t.d();
    Ok(t.facets()
        .iter()
        .all(|&f| matches!(classify_unchecked(sigma, f, d), PairClass::A | PairClass::C)))
}

pub(crate) fn below_unchecked(sigma: Simplex, t: &Triangulation) -> bool {
    let d = t.d();
    t.facets()
        .iter()
        .all(|&f| matches!(classify_unchecked(sigma, f, d), PairClass::A | PairClass::B))
}

pub fn submersion_set(t: &Triangulation) -> SubmersionSet {
    let k = SubmersionSet::member_size(t.d());
    SubmersionSet {
        d: t.d(),
        members: t
            .vertices()
            .subsets(k)
            .into_iter()
            .filter(|&s| below_unchecked(s, t))
            .collect(),
    }
}

/// `T1 ≤ T2` in the higher Stasheff–Tamari order.
pub fn triangulation_leq(t1: &Triangulation, t2: &Triangulation) -> Result<bool> {
    t1.same_ambient(t2)?;
    Ok(t1.facets().iter().all(|&f| below_unchecked(f, t2)))
}

/// For `τ ≤_{d+1} T`: `τ` is a face of `T` iff no member of `sub(T)` lies
/// strictly above it.
pub fn face_membership(tau: Simplex, t: &Triangulation) -> Result<bool> {
    if !simplex_below(tau, t)? {
        return Err(Error::NotBelow(tau));
    }
    let d = t.d();
    let sub = submersion_set(t);
    Ok(!sub
        .members
        .iter()
        .any(|&s| classify_unchecked(tau, s, d) == PairClass::B))
}
