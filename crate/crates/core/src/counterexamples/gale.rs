use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Certificate, Method, Verdict};
use crate::error::{Error, Result};
use crate::extension::Complex;
use crate::geometry::predicates::rational_one;
use crate::geometry::{kernel_basis, power, sign, Affine, LinearSystem, Rational};
use crate::moment::Simplex;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaleVector {
    #[serde(with = "rational_one")]
    pub x: Rational,
    #[serde(with = "rational_one")]
    pub y: Rational,
}

impl GaleVector {
    fn cross(&self, other: &GaleVector) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }
}

/// Planar Gale transform of `n = D + 3` points on `γ_D`, and the dual cone of
/// each input simplex, spanned by the vectors of its two missing vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaleConfiguration {
    /// Vector `i` belongs to vertex `i + 1`.
    pub vectors: Vec<GaleVector>,
    /// Per input simplex, the two vertices spanning its dual cone.
    pub dual_cones: Vec<(Simplex, Simplex)>,
    /// A point interior to every dual cone, if there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior_point: Option<GaleVector>,
}

/// Kernel basis of the `(d+1) × n` matrix with columns `(1, t, …, t^d)`, read
/// column-wise as `n` vectors in the plane. Requires `n = d + 3`.
pub fn gale_configuration(n: u32, d: usize) -> Result<Vec<GaleVector>> {
    if n as usize != d + 3 {
        return Err(Error::Unsupported(format!(
            "planar Gale transform needs n = d + 3, got n={n}, d={d}"
        )));
    }
    let rows: Vec<Vec<Rational>> = (0..=d as u32)
        .map(|k| (1..=n as i64).map(|t| power(t, k)).collect())
        .collect();
    let basis = kernel_basis(&rows);
    if basis.len() != 2 {
        return Err(Error::InternalConsistency(format!(
            "moment matrix kernel has dimension {}",
            basis.len()
        )));
    }
    Ok((0..n as usize)
        .map(|i| GaleVector {
            x: basis[0][i].clone(),
            y: basis[1][i].clone(),
        })
        .collect())
}

/// Extendability to a regular triangulation for `n = D + 3`, decided by
/// whether the open dual cones of all members share a point.
pub fn gale_dual_check(f: &Complex) -> Result<Certificate> {
    let (n, d) = (f.n(), f.d());
    let vectors = gale_configuration(n, d)?;
    let ground = Simplex::ground(n);
    let mut system = LinearSystem::new(2);
    let mut dual_cones = Vec::with_capacity(f.len());
    for &sigma in f.simplices() {
        if sigma.len() != d + 1 {
            return Err(Error::Unsupported(format!(
                "{sigma} is not full-dimensional; the dual-cone test covers only {d}-simplices"
            )));
        }
        let rest = ground.difference(sigma);
        let (i, j) = match rest.to_vec()[..] {
            [i, j] => (i as usize - 1, j as usize - 1),
            _ => unreachable!("complement of a {d}-simplex in [d+3]"),
        };
        let (a, b) = (&vectors[i], &vectors[j]);
        let orient = match sign(&a.cross(b)) {
            0 => {
                return Err(Error::Precondition(format!(
                    "Gale vectors of {rest} are collinear"
                )))
            }
            s => Rational::from_integer(s.into()),
        };
        // w inside the open cone: cross(a, w) and cross(w, b) have the orientation's sign
        system.gt(Affine {
            a: vec![-&a.y * &orient, &a.x * &orient],
            c: Rational::zero(),
        });
        system.gt(Affine {
            a: vec![&b.y * &orient, -&b.x * &orient],
            c: Rational::zero(),
        });
        dual_cones.push((sigma, rest));
    }
    let interior_point = system.solve().map(|w| GaleVector {
        x: w[0].clone(),
        y: w[1].clone(),
    });
    let verdict = if interior_point.is_some() {
        Verdict::Extendable
    } else {
        Verdict::NonExtendable
    };
    Ok(Certificate {
        verdict,
        method: Method::Gale,
        witness: None,
        search: None,
        gale: Some(GaleConfiguration {
            vectors,
            dual_cones,
            interior_point,
        }),
    })
}
