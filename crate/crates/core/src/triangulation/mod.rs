//! Triangulations of cyclic polytopes and the higher Stasheff–Tamari order.

mod envelope;
mod meet;
mod poset;
mod psi;
pub(crate) mod search;
mod submersion;
mod validate;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moment::{Simplex, MAX_VERTEX};

pub use envelope::{cone, envelope_triangulation, link_at_max, Side};
pub use meet::meet;
pub use poset::HstPoset;
pub use psi::{psi_chain, skeleton_closure};
pub use search::{
    enumerate_triangulations, enumerate_triangulations_on, enumerate_triangulations_with_budget,
    RidgeRule, SearchOutcome, SearchSpace, SearchStats, DEFAULT_ENUMERATION_BUDGET,
};
pub use submersion::{
    face_membership, simplex_above, simplex_below, submersion_set, triangulation_leq, SubmersionSet,
};
pub use validate::{polytope_volume_numerator, validate, Failure, FailureKind, ValidityReport};

/// A set of `d`-simplices meant to triangulate the cyclic polytope on
/// `vertices ⊆ [n]`. Facets are kept sorted; validity is checked separately
/// by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TriangulationRepr", into = "TriangulationRepr")]
pub struct Triangulation {
    n: u32,
    d: usize,
    vertices: Simplex,
    facets: Vec<Simplex>,
}

impl Triangulation {
    /// Facets on the full vertex set `[n]`.
    pub fn new(n: u32, d: usize, facets: Vec<Simplex>) -> Result<Self> {
        if n == 0 || n > MAX_VERTEX {
            return Err(Error::InvalidParameters(format!("n={n} outside 1..=64")));
        }
        Self::on_vertices(n, Simplex::ground(n), d, facets)
    }

    /// Facets on an arbitrary vertex set `vertices ⊆ [n]`.
    pub fn on_vertices(
        n: u32,
        vertices: Simplex,
        d: usize,
        mut facets: Vec<Simplex>,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameters(
                "dimension must be at least 1".into(),
            ));
        }
        if vertices.max().is_none_or(|m| m > n) {
            return Err(Error::InvalidParameters(format!(
                "vertex set {vertices} is not a nonempty subset of [{n}]"
            )));
        }
        if vertices.len() < d + 1 {
            return Err(Error::InvalidParameters(format!(
                "{} vertices cannot span dimension {d}",
                vertices.len()
            )));
        }
        for f in &facets {
            if f.len() != d + 1 {
                return Err(Error::InvalidSimplex(format!(
                    "facet {f} does not have {} vertices",
                    d + 1
                )));
            }
            if !f.is_subset(vertices) {
                return Err(Error::InvalidSimplex(format!(
                    "facet {f} leaves the vertex set {vertices}"
                )));
            }
        }
        facets.sort_unstable();
        facets.dedup();
        Ok(Triangulation {
            n,
            d,
            vertices,
            facets,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> Simplex {
        self.vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn contains_facet(&self, f: Simplex) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    /// Whether `s` is a face of some facet.
    pub fn has_face(&self, s: Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// All faces with exactly `k` vertices, sorted.
    pub fn faces(&self, k: usize) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self.facets.iter().flat_map(|f| f.subsets(k)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub(crate) fn same_ambient(&self, other: &Triangulation) -> Result<()> {
        if self.d != other.d || self.vertices != other.vertices {
            return Err(Error::DimensionMismatch(format!(
                "triangulations live on ({}, d={}) and ({}, d={})",
                self.vertices, self.d, other.vertices, other.d
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
struct TriangulationRepr {
    d: usize,
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Simplex>,
    facets: Vec<Simplex>,
}

impl TryFrom<TriangulationRepr> for Triangulation {
    type Error = Error;

    fn try_from(r: TriangulationRepr) -> Result<Self> {
        match r.vertices {
            Some(v) => Triangulation::on_vertices(r.n, v, r.d, r.facets),
            None => Triangulation::new(r.n, r.d, r.facets),
        }
    }
}

impl From<Triangulation> for TriangulationRepr {
    fn from(t: Triangulation) -> Self {
        TriangulationRepr {
            d: t.d,
            n: t.n,
            vertices: (t.vertices != Simplex::ground(t.n)).then_some(t.vertices),
            facets: t.facets,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn constructor_checks_shape() {
        assert!(Triangulation::new(4, 2, vec![simplex![1, 2]]).is_err());
        assert!(Triangulation::new(4, 2, vec![simplex![1, 2, 5]]).is_err());
        assert!(Triangulation::new(2, 2, vec![]).is_err());
        let t = Triangulation::new(4, 2, vec![simplex![1, 3, 4], simplex![1, 2, 3]]).unwrap();
        assert_eq!(t.facets(), &[simplex![1, 2, 3], simplex![1, 3, 4]]);
    }

    #[test]
    fn json_round_trip() {
        let t = Triangulation::new(4, 2, vec![simplex![1, 2, 3], simplex![1, 3, 4]]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"d":2,"n":4,"facets":[[1,2,3],[1,3,4]]}"#);
        assert_eq!(serde_json::from_str::<Triangulation>(&json).unwrap(), t);
        let sub =
            Triangulation::on_vertices(5, simplex![1, 2, 5], 2, vec![simplex![1, 2, 5]]).unwrap();
        let json = serde_json::to_string(&sub).unwrap();
        assert_eq!(serde_json::from_str::<Triangulation>(&json).unwrap(), sub);
        assert!(
            serde_json::from_str::<Triangulation>(r#"{"d":2,"n":4,"facets":[[1,2]]}"#).is_err()
        );
    }
}
