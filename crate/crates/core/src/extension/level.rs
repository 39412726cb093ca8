use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::check_result;
use super::lmr::{lmr_triangulate_logged, LmrInstance};
use crate::error::{Error, Result};
use crate::moment::{interlace_report, Simplex};
use crate::triangulation::{cone, envelope_triangulation, simplex_below, Side, Triangulation};

/// `T ∈ S(n, 3)` containing the triangle `σ` with every `τ_i ≤_4 T`.
///
/// Requires the liftings of `σ, τ_1, …` to be pairwise non-overlapping in
/// `R^4`, `min σ ≤ min τ_i`, and `max σ ≥ max τ_i` whenever the minima agree.
pub fn level_triangulation_d3(sigma: Simplex, taus: &[Simplex], n: u32) -> Result<Triangulation> {
    check_level_input(sigma, taus, n)?;
    let v1 = sigma.min().expect("nonempty");
    let width = n - v1 + 1;
    let mut t = if width == 3 {
        let base = sigma.with(v1 - 1);
        Triangulation::on_vertices(n, base, 3, vec![base])?
    } else {
        let shift = |s: Simplex| s.map(|x| x - v1 + 1);
        let shifted: Vec<Simplex> = taus.iter().map(|&t| shift(t)).collect();
        let inner = level_from_one(shift(sigma), &shifted, width)?;
        let facets = inner
            .facets()
            .iter()
            .map(|f| f.map(|x| x + v1 - 1))
            .collect();
        Triangulation::on_vertices(n, Simplex::range(v1, n), 3, facets)?
    };
    let lowest = t.vertices().min().expect("nonempty");
    for q in (1..lowest).rev() {
        t = cone(&t, q)?;
    }
    check_result(&t, &[sigma], "level triangulation")?;
    for &tau in taus {
        if !simplex_below(tau, &t)? {
            return Err(Error::InternalConsistency(format!(
                "{tau} is not below {t}"
            )));
        }
        for e in t.faces(2) {
            if interlace_report(e, tau)?.max_len() >= 5 {
                return Err(Error::InternalConsistency(format!(
                    "edge {e} of {t} is 5-interlacing with {tau}"
                )));
            }
        }
    }
    Ok(t)
}

fn check_level_input(sigma: Simplex, taus: &[Simplex], n: u32) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!(
            "n={n} is too small for dimension 3"
        )));
    }
    let ground = Simplex::ground(n);
    for &s in std::iter::once(&sigma).chain(taus) {
        if s.len() != 3 || !s.is_subset(ground) {
            return Err(Error::InvalidSimplex(format!(
                "{s} is not a triangle on [{n}]"
            )));
        }
    }
    let all: Vec<Simplex> = std::iter::once(sigma).chain(taus.iter().copied()).collect();
    let mut seen = HashSet::new();
    for &s in &all {
        if !seen.insert(s) {
            return Err(Error::Precondition(format!("{s} is listed twice")));
        }
    }
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            if interlace_report(a, b)?.max_len() >= 6 {
                return Err(Error::Overlap(a, b));
            }
        }
    }
    let (lo, hi) = (sigma.min().unwrap(), sigma.max().unwrap());
    for &tau in taus {
        let (tlo, thi) = (tau.min().unwrap(), tau.max().unwrap());
        if tlo < lo || (tlo == lo && thi > hi) {
            return Err(Error::Precondition(format!(
                "{tau} starts before {sigma} or shares its minimum and ends later"
            )));
        }
    }
    Ok(())
}

/// The construction on `[n]` with `min σ = 1` and `n ≥ 4`.
fn level_from_one(sigma: Simplex, taus: &[Simplex], n: u32) -> Result<Triangulation> {
    let ground = Simplex::ground(n);
    let (_, v2, v3) = match sigma.to_vec()[..] {
        [a, b, c] => (a, b, c),
        _ => unreachable!("checked to be a triangle"),
    };
    let i_m = Simplex::range(v2 + 1, v3.saturating_sub(1)).intersection(ground);
    let v0 = ground.difference(i_m);
    if v0 == sigma {
        return envelope_triangulation(ground, 3, Side::Upper);
    }
    let mut t = envelope_triangulation(v0, 3, Side::Upper)?;
    if i_m.is_empty() {
        return Ok(t);
    }
    let j_m = i_m.with(v2).with(v3);
    let j_l = Simplex::range(1, v2 - 1);
    let j_r = Simplex::range(v3 + 1, n).intersection(ground);
    let mut inst = LmrInstance {
        n,
        vertices: j_m,
        left: Vec::new(),
        right: Vec::new(),
        middle: Vec::new(),
    };
    for &tau in taus {
        let inside = tau.intersection(j_m);
        match inside.len() {
            3 => inst.middle.push(tau),
            2 if tau.intersection(j_l).len() == 1 => inst.left.push(inside),
            2 if tau.intersection(j_r).len() == 1 => inst.right.push(inside),
            _ => {}
        }
    }
    for set in [&mut inst.left, &mut inst.right, &mut inst.middle] {
        set.sort_unstable();
        set.dedup();
    }
    let plane = lmr_triangulate_logged(&inst, &mut Vec::new())?;
    for q in coning_order(&plane, Simplex::from_iter_unchecked([v2, v3]))? {
        t = cone(&t, q)?;
    }
    Ok(t)
}

/// New vertices of a polygon triangulation in dual-tree order from the
/// triangle on `root_edge`, smaller vertices first among available ones.
fn coning_order(plane: &Triangulation, root_edge: Simplex) -> Result<Vec<u32>> {
    let tris = plane.facets();
    let root = tris
        .iter()
        .position(|t| root_edge.is_subset(*t))
        .ok_or_else(|| {
            Error::InternalConsistency(format!("no triangle of {plane} on {root_edge}"))
        })?;
    let mut seen = vec![false; tris.len()];
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((
        tris[root].difference(root_edge).min().unwrap(),
        root,
    )));
    seen[root] = true;
    let mut order = Vec::with_capacity(tris.len());
    while let Some(Reverse((p, i))) = heap.pop() {
        order.push(p);
        for (j, &other) in tris.iter().enumerate() {
            if !seen[j] && other.intersection(tris[i]).len() == 2 {
                seen[j] = true;
                heap.push(Reverse((other.difference(tris[i]).min().unwrap(), j)));
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;
    use crate::triangulation::validate;

    #[test]
    fn lone_triangle() {
        let t = level_triangulation_d3(simplex![2, 5, 6], &[], 7).unwrap();
        assert!(t.has_face(simplex![2, 5, 6]));
        assert!(validate(&t).ok);
    }

    #[test]
    fn boundary_triangle() {
        let t = level_triangulation_d3(simplex![1, 2, 7], &[], 7).unwrap();
        assert!(t.has_face(simplex![1, 2, 7]));
    }

    #[test]
    fn one_constraint() {
        let t = level_triangulation_d3(simplex![1, 4, 7], &[simplex![2, 4, 6]], 7).unwrap();
        assert!(t.has_face(simplex![1, 4, 7]));
        assert!(simplex_below(simplex![2, 4, 6], &t).unwrap());
    }

    #[test]
    fn narrow_tail() {
        let t = level_triangulation_d3(simplex![5, 6, 7], &[], 7).unwrap();
        assert!(t.has_face(simplex![5, 6, 7]));
        assert_eq!(t.vertices(), Simplex::ground(7));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(level_triangulation_d3(simplex![2, 4, 6], &[simplex![1, 3, 5]], 7).is_err());
        assert!(level_triangulation_d3(simplex![1, 3, 5], &[simplex![2, 4, 6]], 7).is_err());
        assert!(level_triangulation_d3(simplex![1, 3, 5], &[simplex![1, 4, 7]], 7).is_err());
        assert!(level_triangulation_d3(simplex![1, 3], &[], 7).is_err());
    }
}
