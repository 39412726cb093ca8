use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::fourier_motzkin::{Affine, LinearSystem};
use super::linalg::{determinant, power, sign, Rational};
use crate::error::{Error, Result};
use crate::moment::{gale_facets_on, PairClass, Simplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPoint {
    pub t: i64,
    pub coords: Vec<Rational>,
}

pub fn moment_point(t: i64, d: usize) -> MomentPoint {
    MomentPoint {
        t,
        coords: (1..=d as u32).map(|k| power(t, k)).collect(),
    }
}

/// A point of `conv(σ) ∩ conv(τ)` outside `conv(σ ∩ τ)` with the heights of
/// both liftings to `γ_{d+1}` above it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightWitness {
    #[serde(with = "rational_vec")]
    pub point: Vec<Rational>,
    #[serde(with = "rational_one")]
    pub h_sigma: Rational,
    #[serde(with = "rational_one")]
    pub h_tau: Rational,
}

fn factorial(d: usize) -> BigInt {
    (1..=d as u64).map(BigInt::from).product()
}

fn check_full(sigma: Simplex, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameters(
            "dimension must be at least 1".into(),
        ));
    }
    if sigma.len() != d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "{sigma} has {} vertices, a {d}-simplex needs {}",
            sigma.len(),
            d + 1
        )));
    }
    Ok(())
}

/// `∏_{i<j}(t_j − t_i)` over the vertices of `sigma`, i.e. `d!` times its volume.
pub fn vandermonde(sigma: Simplex) -> BigInt {
    let t = sigma.to_vec();
    let mut prod = BigInt::one();
    for j in 0..t.len() {
        for i in 0..j {
            prod *= BigInt::from(t[j] - t[i]);
        }
    }
    prod
}

/// Volume of a full-dimensional simplex on `γ_d`: `∏_{i<j}(t_j − t_i) / d!`.
pub fn simplex_volume(sigma: Simplex, d: usize) -> Result<Rational> {
    check_full(sigma, d)?;
    Ok(Rational::new(vandermonde(sigma), factorial(d)))
}

/// Same volume computed as `|det [1, γ_d(t_i)]| / d!`.
pub fn simplex_volume_by_determinant(sigma: Simplex, d: usize) -> Result<Rational> {
    check_full(sigma, d)?;
    let rows = sigma
        .vertices()
        .map(|v| {
            let mut row = vec![Rational::one()];
            row.extend(moment_point(v as i64, d).coords);
            row
        })
        .collect();
    Ok(determinant(rows).abs() / Rational::from_integer(factorial(d)))
}

/// Sign of `det [1, γ_d(p_i)]` for `d + 1` parameters in the given order.
///
/// The matrix is a Vandermonde matrix, so the sign is that of
/// `∏_{i<j}(p_j − p_i)`.
pub fn orientation(points: &[u32], d: usize) -> Result<i8> {
    if points.len() != d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "orientation in dimension {d} needs {} points, got {}",
            d + 1,
            points.len()
        )));
    }
    let mut s = 1i8;
    for j in 0..points.len() {
        for i in 0..j {
            match points[j].cmp(&points[i]) {
                std::cmp::Ordering::Equal => return Ok(0),
                std::cmp::Ordering::Less => s = -s,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    Ok(s)
}

/// Orientation computed from the exact determinant; slow reference version.
pub fn orientation_by_determinant(points: &[u32], d: usize) -> Result<i8> {
    if points.len() != d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "orientation in dimension {d} needs {} points",
            d + 1
        )));
    }
    let rows = points
        .iter()
        .map(|&v| {
            let mut row = vec![Rational::one()];
            row.extend(moment_point(v as i64, d).coords);
            row
        })
        .collect();
    Ok(sign(&determinant(rows)))
}

/// Boundary facets of `conv(γ_d(V))` visible from `γ_d(q)`, `q ∉ V`.
pub fn visible_facets(vertices: Simplex, d: usize, q: u32) -> Result<Vec<Simplex>> {
    if vertices.contains(q) {
        return Err(Error::InvalidParameters(format!(
            "vertex {q} already belongs to {vertices}"
        )));
    }
    let facets = gale_facets_on(vertices, d)?.all();
    let mut out = Vec::new();
    for f in facets {
        let inside = vertices
            .difference(f)
            .min()
            .expect("a facet misses some vertex");
        let mut with_q = f.to_vec();
        with_q.push(q);
        let mut with_inside = f.to_vec();
        with_inside.push(inside);
        if orientation(&with_q, d)? != orientation(&with_inside, d)? {
            out.push(f);
        }
    }
    Ok(out)
}

fn check_pair(sigma: Simplex, tau: Simplex, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameters(
            "dimension must be at least 1".into(),
        ));
    }
    for s in [sigma, tau] {
        if s.is_empty() {
            return Err(Error::EmptySimplex);
        }
        if s.len() > d + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{s} has more than {} vertices",
                d + 1
            )));
        }
    }
    Ok(())
}

/// Variables are barycentric weights, first on `σ` then on `τ`. Encodes
/// `Σλ γ(σ) = Σμ γ(τ)`, weights in the simplex, and positive weight of `λ`
/// outside `σ ∩ τ`.
fn overlap_system(sigma: Simplex, tau: Simplex, d: usize) -> LinearSystem {
    let s = sigma.to_vec();
    let t = tau.to_vec();
    let nv = s.len() + t.len();
    let mut sys = LinearSystem::new(nv);
    for i in 0..nv {
        let mut a = Affine::zero(nv);
        a.a[i] = Rational::one();
        sys.ge(a);
    }
    let mut sum_s = Affine::zero(nv);
    let mut sum_t = Affine::zero(nv);
    for i in 0..s.len() {
        sum_s.a[i] = Rational::one();
    }
    for j in 0..t.len() {
        sum_t.a[s.len() + j] = Rational::one();
    }
    sum_s.c = -Rational::one();
    sum_t.c = -Rational::one();
    sys.eq(sum_s);
    sys.eq(sum_t);
    for k in 1..=d as u32 {
        let mut row = Affine::zero(nv);
        for (i, &v) in s.iter().enumerate() {
            row.a[i] = power(v as i64, k);
        }
        for (j, &v) in t.iter().enumerate() {
            row.a[s.len() + j] = -power(v as i64, k);
        }
        sys.eq(row);
    }
    let mut outside = Affine::zero(nv);
    for (i, &v) in s.iter().enumerate() {
        if !tau.contains(v) {
            outside.a[i] = Rational::one();
        }
    }
    sys.gt(outside);
    sys
}

/// `h_τ − h_σ` over the barycentric variables of [`overlap_system`].
fn height_gap(sigma: Simplex, tau: Simplex, d: usize) -> Affine {
    let nv = sigma.len() + tau.len();
    let mut gap = Affine::zero(nv);
    let k = d as u32 + 1;
    for (i, v) in sigma.vertices().enumerate() {
        gap.a[i] = -power(v as i64, k);
    }
    for (j, v) in tau.vertices().enumerate() {
        gap.a[sigma.len() + j] = power(v as i64, k);
    }
    gap
}

pub fn geometric_overlap(sigma: Simplex, tau: Simplex, d: usize) -> Result<bool> {
    check_pair(sigma, tau, d)?;
    Ok(overlap_system(sigma, tau, d).is_feasible())
}

/// A point of the overlap region where `h_σ < h_τ` (`below = true`) or
/// `h_σ > h_τ` (`below = false`).
pub fn height_witness(
    sigma: Simplex,
    tau: Simplex,
    d: usize,
    below: bool,
) -> Result<Option<HeightWitness>> {
    check_pair(sigma, tau, d)?;
    let mut sys = overlap_system(sigma, tau, d);
    let gap = height_gap(sigma, tau, d);
    sys.gt(if below { gap } else { gap.scaled_neg() });
    let Some(x) = sys.solve() else {
        return Ok(None);
    };
    let k = d as u32 + 1;
    let mut point = vec![Rational::zero(); d];
    let mut h_sigma = Rational::zero();
    let mut h_tau = Rational::zero();
    for (i, v) in sigma.vertices().enumerate() {
        for (c, p) in point.iter_mut().enumerate() {
            *p += &x[i] * power(v as i64, c as u32 + 1);
        }
        h_sigma += &x[i] * power(v as i64, k);
    }
    for (j, v) in tau.vertices().enumerate() {
        h_tau += &x[sigma.len() + j] * power(v as i64, k);
    }
    Ok(Some(HeightWitness {
        point,
        h_sigma,
        h_tau,
    }))
}

pub fn geometric_classify(sigma: Simplex, tau: Simplex, d: usize) -> Result<PairClass> {
    Ok(geometric_classify_with_witness(sigma, tau, d)?.0)
}

/// Classification plus, for B and C, a witness point with the heights.
pub fn geometric_classify_with_witness(
    sigma: Simplex,
    tau: Simplex,
    d: usize,
) -> Result<(PairClass, Option<HeightWitness>)> {
    if !geometric_overlap(sigma, tau, d)? {
        return Ok((PairClass::A, None));
    }
    let lt = height_witness(sigma, tau, d, true)?;
    let gt = height_witness(sigma, tau, d, false)?;
    match (lt, gt) {
        (Some(w), None) => Ok((PairClass::B, Some(w))),
        (None, Some(w)) => Ok((PairClass::C, Some(w))),
        (Some(_), Some(_)) => Ok((PairClass::D, None)),
        (None, None) => Err(Error::InternalConsistency(format!(
            "{sigma} and {tau} overlap but their liftings coincide"
        ))),
    }
}

impl Affine {
    fn scaled_neg(&self) -> Affine {
        Affine {
            a: self.a.iter().map(|x| -x).collect(),
            c: -&self.c,
        }
    }
}

pub(crate) mod rational_one {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) mod rational_vec {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|q| q.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
