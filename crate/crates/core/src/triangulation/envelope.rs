use serde::{Deserialize, Serialize};

use super::{validate, Triangulation};
use crate::error::{Error, Result};
use crate::geometry::visible_facets;
use crate::moment::{gale_facets_on, Simplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// Projection of the lower or upper envelope of the cyclic `(d+1)`-polytope on
/// `vertices`: the minimum and maximum of the higher Stasheff–Tamari order.
pub fn envelope_triangulation(vertices: Simplex, d: usize, side: Side) -> Result<Triangulation> {
    if d == 0 {
        return Err(Error::InvalidParameters(
            "dimension must be at least 1".into(),
        ));
    }
    if vertices.len() <= d {
        return Err(Error::InvalidParameters(format!(
            "{} vertices cannot span dimension {d}",
            vertices.len()
        )));
    }
    let n = vertices.max().expect("nonempty");
    if vertices.len() == d + 1 {
        return Triangulation::on_vertices(n, vertices, d, vec![vertices]);
    }
    let g = gale_facets_on(vertices, d + 1)?;
    let facets = match side {
        Side::Lower => g.lower,
        Side::Upper => g.upper,
    };
    Triangulation::on_vertices(n, vertices, d, facets)
}

/// Adds `τ ∪ {q}` for every boundary facet `τ` of `conv(V)` visible from `q`.
pub fn cone(t: &Triangulation, q: u32) -> Result<Triangulation> {
    if t.vertices().contains(q) {
        return Err(Error::InvalidParameters(format!(
            "cannot cone over {q}: already a vertex"
        )));
    }
    let mut facets = t.facets().to_vec();
    facets.extend(
        visible_facets(t.vertices(), t.d(), q)?
            .into_iter()
            .map(|f| f.with(q)),
    );
    Triangulation::on_vertices(t.n().max(q), t.vertices().with(q), t.d(), facets)
}

/// `T / max(V)`: the faces joined to the last vertex, one dimension down.
pub fn link_at_max(t: &Triangulation) -> Result<Triangulation> {
    let m = t.vertices().max().expect("nonempty");
    if t.d() < 2 {
        return Err(Error::Unsupported(
            "link of a one-dimensional triangulation".into(),
        ));
    }
    let facets = t
        .facets()
        .iter()
        .filter(|f| f.contains(m))
        .map(|f| f.without(m))
        .collect();
    let rest = t.vertices().without(m);
    let link = Triangulation::on_vertices(rest.max().expect("nonempty"), rest, t.d() - 1, facets)?;
    let report = validate(&link);
    if !report.ok {
        return Err(Error::InternalConsistency(format!(
            "link of {t} is not a triangulation: {:?}",
            report.failures
        )));
    }
    Ok(link)
}
