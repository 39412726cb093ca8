use std::collections::HashSet;

use super::{validate, HstPoset, Triangulation};
use crate::error::{Error, Result};
use crate::moment::Simplex;

/// The `(k+1)`-simplices on `vertices` all of whose `k`-vertex subsets lie in
/// `faces`.
pub fn skeleton_closure(
    faces: &HashSet<Simplex>,
    vertices: Simplex,
    size: usize,
    k: usize,
) -> Vec<Simplex> {
    vertices
        .subsets(size)
        .into_iter()
        .filter(|s| s.subsets(k).iter().all(|f| faces.contains(f)))
        .collect()
}

/// Lifts a maximal chain of `HST(n, d)` to a triangulation of the cyclic
/// `(d+1)`-polytope: its facets are the `(d+2)`-sets whose
/// `⌈(d+1)/2⌉`-skeleton consists of faces of chain members.
pub fn psi_chain(chain: &[Triangulation], poset: &HstPoset) -> Result<Triangulation> {
    let idx: Vec<usize> = chain
        .iter()
        .map(|t| {
            poset
                .index_of(t)
                .ok_or_else(|| Error::Precondition(format!("{t} is not an element of the poset")))
        })
        .collect::<Result<_>>()?;
    if !poset.is_maximal_chain(&idx) {
        return Err(Error::Precondition("the chain is not maximal".into()));
    }
    let first = &chain[0];
    let d = first.d();
    let k = (d + 1).div_ceil(2) + 1;
    let faces: HashSet<Simplex> = chain.iter().flat_map(|t| t.faces(k)).collect();
    let facets = skeleton_closure(&faces, first.vertices(), d + 2, k);
    let out = Triangulation::on_vertices(first.n(), first.vertices(), d + 1, facets)?;
    let report = validate(&out);
    if !report.ok {
        return Err(Error::InternalConsistency(format!(
            "lifted chain gives {out}: {:?}",
            report.failures
        )));
    }
    Ok(out)
}
