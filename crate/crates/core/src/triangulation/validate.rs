use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Triangulation;
use crate::geometry::vandermonde;
use crate::moment::{gale_facets_on, overlaps_unchecked, Simplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    OverlapPair,
    MissingBoundaryRidge,
    BadRidgeMultiplicity,
    VolumeMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub witness: Vec<Simplex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub ok: bool,
    pub failures: Vec<Failure>,
}

impl ValidityReport {
    pub fn has(&self, kind: FailureKind) -> bool {
        self.failures.iter().any(|f| f.kind == kind)
    }
}

/// `d!` times the volume of the cyclic `d`-polytope on `vertices`, summed
/// over the lower envelope triangulation.
pub fn polytope_volume_numerator(vertices: Simplex, d: usize) -> BigInt {
    if vertices.len() == d + 1 {
        return vandermonde(vertices);
    }
    gale_facets_on(vertices, d + 1)
        .expect("enough vertices")
        .lower
        .into_iter()
        .map(vandermonde)
        .sum()
}

/// Checks that `t` triangulates the cyclic polytope on its vertex set:
/// non-overlapping facets, each boundary ridge in one facet, every other ridge
/// in two, and total volume equal to that of the polytope.
pub fn validate(t: &Triangulation) -> ValidityReport {
    let d = t.d();
    let facets = t.facets();
    let mut failures = Vec::new();

    for (i, &a) in facets.iter().enumerate() {
        for &b in &facets[i + 1..] {
            if overlaps_unchecked(a, b, d) {
                failures.push(Failure {
                    kind: FailureKind::OverlapPair,
                    witness: vec![a, b],
                });
            }
        }
    }

    let mut count: HashMap<Simplex, u32> = HashMap::new();
    for f in facets {
        for r in f.facets() {
            *count.entry(r).or_default() += 1;
        }
    }
    let mut boundary = gale_facets_on(t.vertices(), d)
        .expect("vertex set spans d")
        .all();
    boundary.sort_unstable();
    for &r in &boundary {
        match count.get(&r).copied().unwrap_or(0) {
            0 => failures.push(Failure {
                kind: FailureKind::MissingBoundaryRidge,
                witness: vec![r],
            }),
            1 => {}
            _ => failures.push(Failure {
                kind: FailureKind::BadRidgeMultiplicity,
                witness: vec![r],
            }),
        }
    }
    let mut interior: Vec<(Simplex, u32)> = count
        .into_iter()
        .filter(|(r, c)| *c != 2 && boundary.binary_search(r).is_err())
        .collect();
    interior.sort_unstable();
    for (r, _) in interior {
        failures.push(Failure {
            kind: FailureKind::BadRidgeMultiplicity,
            witness: vec![r],
        });
    }

    let total: BigInt = facets.iter().map(|&f| vandermonde(f)).sum();
    let expected = polytope_volume_numerator(t.vertices(), d);
    if total != expected || (facets.is_empty() && !expected.is_zero()) {
        failures.push(Failure {
            kind: FailureKind::VolumeMismatch,
            witness: facets.to_vec(),
        });
    }

    ValidityReport {
        ok: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    fn tri(n: u32, d: usize, f: Vec<Simplex>) -> Triangulation {
        Triangulation::new(n, d, f).unwrap()
    }

    #[test]
    fn square_diagonal() {
        let r = validate(&tri(4, 2, vec![simplex![1, 2, 3], simplex![1, 3, 4]]));
        assert!(r.ok, "{r:?}");
    }

    #[test]
    fn overlapping_pair() {
        let r = validate(&tri(4, 2, vec![simplex![1, 2, 3], simplex![2, 3, 4]]));
        assert!(!r.ok);
        assert!(r.has(FailureKind::OverlapPair));
    }

    #[test]
    fn missing_boundary() {
        let r = validate(&tri(4, 2, vec![simplex![1, 2, 3]]));
        assert!(r.failures.contains(&Failure {
            kind: FailureKind::MissingBoundaryRidge,
            witness: vec![simplex![1, 4]],
        }));
        assert!(r.has(FailureKind::VolumeMismatch));
    }

    #[test]
    fn single_simplex_and_segment() {
        assert!(validate(&tri(3, 2, vec![simplex![1, 2, 3]])).ok);
        assert!(validate(&tri(3, 1, vec![simplex![1, 2], simplex![2, 3]])).ok);
    }

    #[test]
    fn line_triangulations_may_skip_points() {
        // on γ_1 the point 2 lies inside the segment [1,3]
        assert!(validate(&tri(3, 1, vec![simplex![1, 3]])).ok);
        let r = validate(&tri(4, 1, vec![simplex![1, 3]]));
        assert!(r.has(FailureKind::MissingBoundaryRidge));
    }
}
