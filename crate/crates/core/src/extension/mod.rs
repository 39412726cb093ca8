//! Extending families of non-overlapping simplices on `γ_d` to triangulations
//! of the cyclic polytope without new vertices.

mod constructive;
mod greedy;
mod level;
mod lmr;
mod plane;
mod reduce;
mod small;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moment::{overlaps_unchecked, Simplex, MAX_VERTEX};
use crate::triangulation::Triangulation;

pub use constructive::{constructive_extend, constructive_extend_with_budget};
pub use greedy::{greedy_extend, StuckState};
pub use level::level_triangulation_d3;
pub use lmr::{lmr_triangulate, lmr_triangulate_logged, LmrInstance};
pub use plane::{separating_order, separating_triangulation, t_of_sigma_d2};
pub use reduce::skeleton_reduce;
pub use small::{extend_single, extend_small};

/// Pairwise non-overlapping simplices on `γ_d` with vertices in `[n]`.
///
/// Only inclusion-maximal members are stored; their faces are implied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct Complex {
    n: u32,
    d: usize,
    simplices: Vec<Simplex>,
}

impl Complex {
    pub fn new(n: u32, d: usize, simplices: Vec<Simplex>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameters(
                "dimension must be at least 1".into(),
            ));
        }
        if n == 0 || n > MAX_VERTEX {
            return Err(Error::InvalidParameters(format!("n={n} outside 1..=64")));
        }
        let ground = Simplex::ground(n);
        for &s in &simplices {
            if s.is_empty() {
                return Err(Error::EmptySimplex);
            }
            if s.len() > d + 1 {
                return Err(Error::SimplexTooLarge {
                    simplex: s,
                    len: s.len(),
                    max: d + 1,
                    d,
                });
            }
            if !s.is_subset(ground) {
                return Err(Error::InvalidSimplex(format!(
                    "{s} is not a subset of [{n}]"
                )));
            }
        }
        let mut all = simplices;
        all.sort_unstable();
        all.dedup();
        let simplices: Vec<Simplex> = all
            .iter()
            .copied()
            .filter(|&s| !all.iter().any(|&t| t != s && s.is_subset(t)))
            .collect();
        for (i, &a) in simplices.iter().enumerate() {
            for &b in &simplices[i + 1..] {
                if overlaps_unchecked(a, b, d) {
                    return Err(Error::Overlap(a, b));
                }
            }
        }
        Ok(Complex { n, d, simplices })
    }

    pub fn empty(n: u32, d: usize) -> Result<Self> {
        Self::new(n, d, Vec::new())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    /// Whether every member is a face of `t`.
    pub fn is_extended_by(&self, t: &Triangulation) -> bool {
        self.simplices.iter().all(|&s| t.has_face(s))
    }
}

impl std::fmt::Display for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, d={}) [", self.n, self.d)?;
        for (i, s) in self.simplices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    d: usize,
    n: u32,
    simplices: Vec<Simplex>,
}

impl TryFrom<ComplexRepr> for Complex {
    type Error = Error;

    fn try_from(r: ComplexRepr) -> Result<Self> {
        Complex::new(r.n, r.d, r.simplices)
    }
}

impl From<Complex> for ComplexRepr {
    fn from(c: Complex) -> Self {
        ComplexRepr {
            d: c.d,
            n: c.n,
            simplices: c.simplices,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Greedy,
    Constructive,
    SmallN,
    Single,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionResult {
    pub triangulation: Triangulation,
    pub strategy: Strategy,
    /// One line per choice made, in order.
    pub steps: Vec<String>,
    /// Elementary interlacing tests performed.
    pub ops: u64,
}

fn check_result(t: &Triangulation, required: &[Simplex], what: &str) -> Result<()> {
    let report = crate::triangulation::validate(t);
    if !report.ok {
        return Err(Error::InternalConsistency(format!(
            "{what} produced {t}, which is not a triangulation: {:?}",
            report.failures
        )));
    }
    if let Some(s) = required.iter().find(|&&s| !t.has_face(s)) {
        return Err(Error::InternalConsistency(format!(
            "{what} produced {t}, which misses the required face {s}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn constructor_rejects_overlap() {
        let err = Complex::new(6, 3, vec![simplex![1, 3, 5], simplex![2, 4, 6]]).unwrap_err();
        assert_eq!(err, Error::Overlap(simplex![1, 3, 5], simplex![2, 4, 6]));
        assert!(Complex::new(6, 4, vec![simplex![1, 3, 5], simplex![2, 4, 6]]).is_err());
        assert!(Complex::new(6, 5, vec![simplex![1, 3, 5], simplex![2, 4, 6]]).is_ok());
    }

    #[test]
    fn constructor_keeps_maximal_members() {
        let c = Complex::new(5, 3, vec![simplex![1, 2], simplex![1, 2, 3], simplex![4]]).unwrap();
        assert_eq!(c.simplices(), &[simplex![1, 2, 3], simplex![4]]);
    }

    #[test]
    fn constructor_checks_shape() {
        assert!(Complex::new(4, 2, vec![simplex![1, 2, 3, 4]]).is_err());
        assert!(Complex::new(4, 2, vec![simplex![1, 5]]).is_err());
        assert!(Complex::new(0, 2, vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = Complex::new(8, 5, vec![simplex![1, 2, 3, 4, 5, 6]]).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"d":5,"n":8,"simplices":[[1,2,3,4,5,6]]}"#);
        assert_eq!(serde_json::from_str::<Complex>(&json).unwrap(), c);
        assert!(
            serde_json::from_str::<Complex>(r#"{"d":2,"n":4,"simplices":[[1,3],[2,4]]}"#).is_err()
        );
    }
}
