use super::{submersion_set, validate, Triangulation};
use crate::error::{Error, Result};
use crate::moment::{classify_unchecked, PairClass, Simplex};

/// Meet in the higher Stasheff–Tamari lattice for `d ∈ {2, 3}`, rebuilt from
/// the intersection of the submersion sets.
pub fn meet(t1: &Triangulation, t2: &Triangulation) -> Result<Triangulation> {
    t1.same_ambient(t2)?;
    let d = t1.d();
    if !(2..=3).contains(&d) {
        return Err(Error::Unsupported(format!("meet in dimension {d}")));
    }
    let target = submersion_set(t1).intersection(&submersion_set(t2));
    let s = &target.members;
    let mid: Vec<Simplex> = s
        .iter()
        .copied()
        .filter(|&tau| {
            !s.iter()
                .any(|&sigma| classify_unchecked(tau, sigma, d) == PairClass::B)
        })
        .collect();
    let k = mid.first().map_or(d.div_ceil(2) + 1, |m| m.len());
    let facets: Vec<Simplex> = t1
        .vertices()
        .subsets(d + 1)
        .into_iter()
        .filter(|f| f.subsets(k).iter().all(|x| mid.binary_search(x).is_ok()))
        .collect();
    let out = Triangulation::on_vertices(t1.n().max(t2.n()), t1.vertices(), d, facets)?;
    let report = validate(&out);
    if !report.ok {
        return Err(Error::InternalConsistency(format!(
            "meet of {t1} and {t2} rebuilt as {out}: {:?}",
            report.failures
        )));
    }
    if submersion_set(&out) != target {
        return Err(Error::InternalConsistency(format!(
            "meet {out} of {t1} and {t2} has the wrong submersion set"
        )));
    }
    Ok(out)
}
