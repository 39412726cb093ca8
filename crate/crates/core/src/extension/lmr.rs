use super::check_result;
use super::plane::{separating_order, separating_triangulation};
use crate::error::{Error, Result};
use crate::moment::{interlace_report, Simplex};
use crate::triangulation::Triangulation;

/// A polygon `conv(V)` with left edges `L`, right edges `R` and middle
/// triangles `M` on `[n]`, to be triangulated so that every edge `e = v1v2`
/// avoids the patterns
///
/// * (Le) `v1 < l1 < v2 < l2` for `l ∈ L`,
/// * (Me) `w1 < v1 < w2 < v2 < w3` for `w ∈ M`,
/// * (Re) `r1 < v1 < r2 < v2` for `r ∈ R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmrInstance {
    pub n: u32,
    pub vertices: Simplex,
    pub left: Vec<Simplex>,
    pub right: Vec<Simplex>,
    pub middle: Vec<Simplex>,
}

fn pair(e: Simplex) -> (u32, u32) {
    let v = e.to_vec();
    (v[0], v[1])
}

fn triple(t: Simplex) -> (u32, u32, u32) {
    let v = t.to_vec();
    (v[0], v[1], v[2])
}

fn violates_le(e: Simplex, l: Simplex) -> bool {
    let ((v1, v2), (l1, l2)) = (pair(e), pair(l));
    v1 < l1 && l1 < v2 && v2 < l2
}

fn violates_re(e: Simplex, r: Simplex) -> bool {
    let ((v1, v2), (r1, r2)) = (pair(e), pair(r));
    r1 < v1 && v1 < r2 && r2 < v2
}

fn violates_me(e: Simplex, t: Simplex) -> bool {
    let ((v1, v2), (w1, w2, w3)) = (pair(e), triple(t));
    w1 < v1 && v1 < w2 && w2 < v2 && v2 < w3
}

fn polygon_edges(vertices: Simplex) -> Vec<Simplex> {
    let v = vertices.to_vec();
    let mut out: Vec<Simplex> = v
        .windows(2)
        .map(|w| Simplex::from_iter_unchecked([w[0], w[1]]))
        .collect();
    if v.len() > 2 {
        out.push(Simplex::from_iter_unchecked([v[0], v[v.len() - 1]]));
    }
    out
}

fn reflect(s: Simplex, n: u32) -> Simplex {
    s.map(|x| n + 1 - x)
}

impl LmrInstance {
    /// Checks (LR), (LMR), (MM) and that the polygon edges of `conv(V)`
    /// satisfy (Le), (Me), (Re).
    pub fn check(&self) -> Result<()> {
        let ground = Simplex::ground(self.n);
        if self.vertices.len() < 3 || !self.vertices.is_subset(ground) {
            return Err(Error::Precondition(format!(
                "{} is not a polygon on [{}]",
                self.vertices, self.n
            )));
        }
        for (set, k) in [(&self.left, 2), (&self.right, 2), (&self.middle, 3)] {
            if let Some(s) = set.iter().find(|s| s.len() != k || !s.is_subset(ground)) {
                return Err(Error::InvalidSimplex(format!(
                    "{s} should have {k} vertices in [{}]",
                    self.n
                )));
            }
        }
        for &l in &self.left {
            for &r in &self.right {
                let ((l1, l2), (r1, r2)) = (pair(l), pair(r));
                if r1 < l1 && l1 < r2 && r2 < l2 {
                    return Err(Error::Precondition(format!(
                        "(LR) fails for left {l} and right {r}"
                    )));
                }
            }
        }
        for &e in self.left.iter().chain(&self.right) {
            if let Some(t) = self.middle.iter().find(|&&t| violates_me(e, t)) {
                return Err(Error::Precondition(format!(
                    "(LMR) fails for edge {e} and triangle {t}"
                )));
            }
        }
        for (i, &a) in self.middle.iter().enumerate() {
            for &b in &self.middle[i + 1..] {
                if interlace_report(a, b)?.max_len() >= 6 {
                    return Err(Error::Precondition(format!("(MM) fails for {a} and {b}")));
                }
            }
        }
        if let Some(e) = polygon_edges(self.vertices)
            .into_iter()
            .find(|&e| !self.edge_ok(e))
        {
            return Err(Error::Precondition(format!(
                "polygon edge {e} violates (Le), (Me) or (Re)"
            )));
        }
        Ok(())
    }

    /// Whether `e` satisfies (Le), (Me) and (Re).
    pub fn edge_ok(&self, e: Simplex) -> bool {
        !self.left.iter().any(|&l| violates_le(e, l))
            && !self.middle.iter().any(|&t| violates_me(e, t))
            && !self.right.iter().any(|&r| violates_re(e, r))
    }

    fn reflected(&self) -> LmrInstance {
        let n = self.n;
        let map = |v: &[Simplex]| {
            let mut out: Vec<Simplex> = v.iter().map(|&s| reflect(s, n)).collect();
            out.sort_unstable();
            out
        };
        LmrInstance {
            n,
            vertices: reflect(self.vertices, n),
            left: map(&self.right),
            right: map(&self.left),
            middle: map(&self.middle),
        }
    }

    fn with_vertices(&self, vertices: Simplex) -> LmrInstance {
        LmrInstance {
            vertices,
            ..self.clone()
        }
    }

    /// Largest vertex of `V` below `w` and smallest above, for `w ∉ V`; the
    /// closed region cut off by the separating edge of `w`.
    fn cap(&self, w: u32) -> Simplex {
        let below = self.vertices.intersection(Simplex::range(1, w)).max();
        let above = self.vertices.intersection(Simplex::range(w, self.n)).min();
        match (below, above) {
            (Some(a), Some(b)) => Simplex::range(a, b),
            _ => {
                let (lo, hi) = (
                    self.vertices.min().expect("nonempty"),
                    self.vertices.max().expect("nonempty"),
                );
                Simplex::range(1, lo).union(Simplex::range(hi, self.n))
            }
        }
    }

    fn same_side(&self, a: u32, b: u32) -> bool {
        if a == b {
            return true;
        }
        let v = self.vertices;
        if v.contains(a) && v.contains(b) {
            return polygon_edges(v).contains(&Simplex::from_iter_unchecked([a, b]));
        }
        (!v.contains(a) && self.cap(a).contains(b)) || (!v.contains(b) && self.cap(b).contains(a))
    }
}

/// Triangulation of `conv(V)` all of whose edges satisfy (Le), (Me) and (Re).
pub fn lmr_triangulate(inst: &LmrInstance) -> Result<Triangulation> {
    lmr_triangulate_logged(inst, &mut Vec::new())
}

/// As [`lmr_triangulate`], recording every deletion and split in `log`.
pub fn lmr_triangulate_logged(inst: &LmrInstance, log: &mut Vec<String>) -> Result<Triangulation> {
    inst.check()?;
    let mut facets = Vec::new();
    solve(inst.clone(), log, &mut facets)?;
    let v = inst.vertices;
    let t = Triangulation::on_vertices(inst.n, v, 2, facets)?;
    check_result(&t, &[], "LMR triangulation")?;
    if let Some(e) = t.faces(2).into_iter().find(|&e| !inst.edge_ok(e)) {
        return Err(Error::InternalConsistency(format!(
            "edge {e} of {t} violates (Le), (Me) or (Re) for {inst:?}"
        )));
    }
    Ok(t)
}

fn solve(mut inst: LmrInstance, log: &mut Vec<String>, out: &mut Vec<Simplex>) -> Result<()> {
    let v = inst.vertices;
    if v.len() == 3 {
        out.push(v);
        return Ok(());
    }
    let boundary = polygon_edges(v);
    inst.left.retain(|e| !boundary.contains(e));
    inst.right.retain(|e| !boundary.contains(e));

    let (n, probe) = (inst.n, inst.clone());
    inst.middle.retain(|&t| {
        let (w1, w2, w3) = triple(t);
        let drop = probe.same_side(w2, w1) || probe.same_side(w2, w3);
        if drop {
            log.push(format!("on {v}: drop middle {t} (Ms)"));
        }
        !drop
    });
    if let Some(&t) = inst.middle.iter().find(|&&t| !v.contains(triple(t).1)) {
        return Err(Error::InternalConsistency(format!(
            "middle vertex of {t} is outside {v} after reduction (MV)"
        )));
    }
    let far = |w: u32| probe.same_side(w, 1) && probe.same_side(w, n);
    inst.right.retain(|&r| {
        let r2 = pair(r).1;
        let drop = !v.contains(r2) && !far(r2);
        if drop {
            log.push(format!("on {v}: drop right {r} (RV)"));
        }
        !drop
    });
    inst.left.retain(|&l| {
        let l1 = pair(l).0;
        let drop = !v.contains(l1) && !far(l1);
        if drop {
            log.push(format!("on {v}: drop left {l} (LV)"));
        }
        !drop
    });

    if inst.middle.is_empty() {
        return base_case(&inst, log, out);
    }

    let t = *inst
        .middle
        .iter()
        .max_by(|a, b| {
            let span = |s: &&Simplex| Simplex::max(**s).unwrap() - Simplex::min(**s).unwrap();
            span(a).cmp(&span(b)).then_with(|| b.cmp(a))
        })
        .expect("nonempty");
    let (w1, w2, w3) = triple(t);
    let case_i = !inst.right.iter().any(|&r| {
        let (r1, r2) = pair(r);
        r1 < w2 && w2 < r2 && r2 < w3
    });
    let case_ii = !inst.left.iter().any(|&l| {
        let (l1, l2) = pair(l);
        w1 < l1 && l1 < w2 && w2 < l2
    });
    let right_room = v.max().unwrap() >= w3;
    let left_room = v.min().unwrap() <= w1;
    let diagonal = if case_i && right_room {
        log.push(format!("on {v}: middle {t}, case (i)"));
        descend(&inst, t, log)?
    } else if case_ii && left_room {
        log.push(format!("on {v}: middle {t}, case (ii) by reflection"));
        reflect(descend(&inst.reflected(), reflect(t, n), log)?, n)
    } else {
        return Err(Error::InternalConsistency(format!(
            "no admissible case for middle {t} in {inst:?}"
        )));
    };
    if boundary.contains(&diagonal) || !diagonal.is_subset(v) || !inst.edge_ok(diagonal) {
        return Err(Error::InternalConsistency(format!(
            "chosen {diagonal} is not an admissible diagonal of {inst:?}"
        )));
    }
    let (a, b) = pair(diagonal);
    log.push(format!("on {v}: split along {diagonal}"));
    let inner = v.intersection(Simplex::range(a, b));
    let outer = v.difference(inner).with(a).with(b);
    solve(inst.with_vertices(inner), log, out)?;
    solve(inst.with_vertices(outer), log, out)
}

/// Diagonal `w2 q` with `q ≥ w3`, found by descending from `q = max V`.
fn descend(inst: &LmrInstance, t: Simplex, log: &mut Vec<String>) -> Result<Simplex> {
    let (_, w2, w3) = triple(t);
    let v = inst.vertices;
    let edge = |q: u32| Simplex::from_iter_unchecked([w2, q]);
    let fail = |what: String| {
        Error::InternalConsistency(format!("{what} while descending for {t} in {inst:?}"))
    };
    let m = v.max().expect("nonempty");
    let e = edge(m);
    let m0: Vec<Simplex> = inst
        .middle
        .iter()
        .copied()
        .filter(|&p| violates_me(e, p))
        .collect();
    let r0: Vec<Simplex> = inst
        .right
        .iter()
        .copied()
        .filter(|&r| violates_re(e, r))
        .collect();
    if m0.is_empty() && r0.is_empty() {
        return Ok(e);
    }
    let mut q = m0
        .iter()
        .map(|&p| triple(p).1)
        .chain(r0.iter().map(|&r| pair(r).1))
        .min()
        .expect("nonempty");
    if q < w3 || !v.contains(q) {
        return Err(fail(format!("q0 = {q} is not a vertex at least {w3}")));
    }
    log.push(format!("  q0 = {q}"));
    loop {
        let next = inst
            .middle
            .iter()
            .filter(|&&p| violates_me(edge(q), p))
            .map(|&p| triple(p).1)
            .min();
        let Some(next) = next else { return Ok(edge(q)) };
        if next >= q || next < w3 || !v.contains(next) {
            return Err(fail(format!(
                "step from {q} to {next} leaves the admissible range"
            )));
        }
        log.push(format!("  q = {next}"));
        q = next;
    }
}

fn base_case(inst: &LmrInstance, log: &mut Vec<String>, out: &mut Vec<Simplex>) -> Result<()> {
    let e1: Vec<Simplex> = inst
        .left
        .iter()
        .copied()
        .filter(|e| !inst.right.contains(e))
        .collect();
    let e3: Vec<Simplex> = inst
        .right
        .iter()
        .copied()
        .filter(|e| !inst.left.contains(e))
        .collect();
    let mut e2 = polygon_edges(inst.vertices);
    e2.extend(inst.left.iter().copied().filter(|e| inst.right.contains(e)));
    e2.sort_unstable();
    e2.dedup();
    let order = separating_order(&e1, &e2, &e3)?;
    let t = separating_triangulation(&e1, &e2, &e3, &order, inst.n)?;
    let before = out.len();
    out.extend(
        t.facets()
            .iter()
            .copied()
            .filter(|f| f.is_subset(inst.vertices)),
    );
    log.push(format!(
        "on {}: separating triangulation gives {} triangles",
        inst.vertices,
        out.len() - before
    ));
    Ok(())
}
