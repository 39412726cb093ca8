//! Exact linear feasibility with strict and non-strict inequalities.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::linalg::Rational;

/// `a · x + c`, as the left-hand side of a constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub a: Vec<Rational>,
    pub c: Rational,
}

impl Affine {
    pub fn zero(nvars: usize) -> Self {
        Affine {
            a: vec![Rational::zero(); nvars],
            c: Rational::zero(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.a.iter().zip(x).map(|(a, x)| a * x).sum::<Rational>() + &self.c
    }

    fn scaled(&self, f: &Rational) -> Affine {
        Affine {
            a: self.a.iter().map(|x| x * f).collect(),
            c: &self.c * f,
        }
    }

    fn add(&self, other: &Affine) -> Affine {
        Affine {
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
            c: &self.c + &other.c,
        }
    }

    /// Replaces `x_var` by `expr` (which must not mention `x_var`).
    fn substitute(&mut self, var: usize, expr: &Affine) {
        if self.a[var].is_zero() {
            return;
        }
        let f = std::mem::replace(&mut self.a[var], Rational::zero());
        let mut out = self.add(&expr.scaled(&f));
        out.a[var] = Rational::zero();
        *self = out;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub lhs: Affine,
    /// `lhs > 0` when set, `lhs ≥ 0` otherwise.
    pub strict: bool,
}

/// A conjunction of linear equalities (`lhs = 0`) and inequalities.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    pub nvars: usize,
    pub equalities: Vec<Affine>,
    pub inequalities: Vec<Inequality>,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            ..Default::default()
        }
    }

    pub fn eq(&mut self, lhs: Affine) {
        self.equalities.push(lhs);
    }

    pub fn ge(&mut self, lhs: Affine) {
        self.inequalities.push(Inequality { lhs, strict: false });
    }

    pub fn gt(&mut self, lhs: Affine) {
        self.inequalities.push(Inequality { lhs, strict: true });
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|e| e.eval(x).is_zero())
            && self.inequalities.iter().all(|i| {
                let v = i.lhs.eval(x);
                if i.strict {
                    v.is_positive()
                } else {
                    !v.is_negative()
                }
            })
    }

    /// Some point satisfying every constraint, or `None` if there is none.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        let n = self.nvars;
        let mut eqs = self.equalities.clone();
        let mut ineqs = self.inequalities.clone();
        let mut subs: Vec<(usize, Affine)> = Vec::new();
        while let Some(e) = eqs.pop() {
            let Some(p) = e.a.iter().position(|x| !x.is_zero()) else {
                if e.c.is_zero() {
                    continue;
                }
                return None;
            };
            // x_p = -(e - a_p x_p) / a_p
            let inv = -e.a[p].recip();
            let mut expr = e.scaled(&inv);
            expr.a[p] = Rational::zero();
            for other in eqs.iter_mut() {
                other.substitute(p, &expr);
            }
            for i in ineqs.iter_mut() {
                i.lhs.substitute(p, &expr);
            }
            for (_, s) in subs.iter_mut() {
                s.substitute(p, &expr);
            }
            subs.push((p, expr));
        }
        let pivoted: Vec<usize> = subs.iter().map(|(p, _)| *p).collect();
        let free: Vec<usize> = (0..n).filter(|v| !pivoted.contains(v)).collect();

        let mut stage = normalize(ineqs)?;
        let mut stages: Vec<(usize, Vec<Inequality>)> = Vec::new();
        let mut remaining = free.clone();
        while !remaining.is_empty() {
            // eliminate the variable producing the fewest new rows
            let (idx, _) = remaining
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let pos = stage.iter().filter(|c| c.lhs.a[v].is_positive()).count();
                    let neg = stage.iter().filter(|c| c.lhs.a[v].is_negative()).count();
                    (i, pos * neg)
                })
                .min_by_key(|&(_, cost)| cost)
                .expect("nonempty");
            let v = remaining.swap_remove(idx);
            let next = eliminate(&stage, v);
            stages.push((v, std::mem::replace(&mut stage, normalize(next)?)));
        }
        debug_assert!(stage.is_empty());

        let mut x = vec![Rational::zero(); n];
        for (v, rows) in stages.iter().rev() {
            x[*v] = pick_value(rows, *v, &x);
        }
        for (p, expr) in subs.iter().rev() {
            x[*p] = expr.eval(&x);
        }
        debug_assert!(self.is_satisfied_by(&x));
        Some(x)
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }
}

fn eliminate(rows: &[Inequality], v: usize) -> Vec<Inequality> {
    let mut out = Vec::new();
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for r in rows {
        let a = &r.lhs.a[v];
        if a.is_positive() {
            lower.push((r.lhs.scaled(&a.recip()), r.strict));
        } else if a.is_negative() {
            upper.push((r.lhs.scaled(&(-a.recip())), r.strict));
        } else {
            out.push(r.clone());
        }
    }
    for (l, ls) in &lower {
        for (u, us) in &upper {
            let mut lhs = l.add(u);
            lhs.a[v] = Rational::zero();
            out.push(Inequality {
                lhs,
                strict: *ls || *us,
            });
        }
    }
    out
}

/// Scales each row so its first nonzero coefficient is ±1, drops trivially true
/// rows, keeps only the tightest row per direction. `None` when some constant
/// row is violated.
fn normalize(rows: Vec<Inequality>) -> Option<Vec<Inequality>> {
    let mut best: HashMap<Vec<Rational>, (Rational, bool)> = HashMap::new();
    let mut order: Vec<Vec<Rational>> = Vec::new();
    for r in rows {
        let Some(p) = r.lhs.a.iter().position(|x| !x.is_zero()) else {
            let ok = if r.strict {
                r.lhs.c.is_positive()
            } else {
                !r.lhs.c.is_negative()
            };
            if !ok {
                return None;
            }
            continue;
        };
        let f = r.lhs.a[p].abs().recip();
        let lhs = r.lhs.scaled(&f);
        match best.get_mut(&lhs.a) {
            Some(slot) => {
                if lhs.c < slot.0 || (lhs.c == slot.0 && r.strict) {
                    *slot = (lhs.c, r.strict);
                }
            }
            None => {
                order.push(lhs.a.clone());
                best.insert(lhs.a, (lhs.c, r.strict));
            }
        }
    }
    Some(
        order
            .into_iter()
            .map(|a| {
                let (c, strict) = best.remove(&a).expect("recorded");
                Inequality {
                    lhs: Affine { a, c },
                    strict,
                }
            })
            .collect(),
    )
}

fn pick_value(rows: &[Inequality], v: usize, x: &[Rational]) -> Rational {
    let mut lo: Option<(Rational, bool)> = None;
    let mut hi: Option<(Rational, bool)> = None;
    for r in rows {
        let a = &r.lhs.a[v];
        if a.is_zero() {
            continue;
        }
        let mut rest = r.lhs.clone();
        rest.a[v] = Rational::zero();
        let bound = -rest.eval(x) / a;
        if a.is_positive() {
            let tighter = match &lo {
                None => true,
                Some((b, s)) => bound > *b || (bound == *b && r.strict && !s),
            };
            if tighter {
                lo = Some((bound, r.strict));
            }
        } else {
            let tighter = match &hi {
                None => true,
                Some((b, s)) => bound < *b || (bound == *b && r.strict && !s),
            };
            if tighter {
                hi = Some((bound, r.strict));
            }
        }
    }
    let two = Rational::one() + Rational::one();
    match (lo, hi) {
        (Some((l, _)), Some((h, _))) => (l + h) / two,
        (Some((l, _)), None) => l + Rational::one(),
        (None, Some((h, _))) => h - Rational::one(),
        (None, None) => Rational::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::linalg::rat;
    use super::*;

    fn aff(a: &[i64], c: i64) -> Affine {
        Affine {
            a: a.iter().map(|&v| rat(v)).collect(),
            c: rat(c),
        }
    }

    #[test]
    fn interval() {
        // 1 ≤ x ≤ 3
        let mut s = LinearSystem::new(1);
        s.ge(aff(&[1], -1));
        s.ge(aff(&[-1], 3));
        let x = s.solve().unwrap();
        assert_eq!(x[0], rat(2));
    }

    #[test]
    fn strictness_matters() {
        // x ≥ 1, x ≤ 1 feasible; x > 1, x ≤ 1 not
        let mut s = LinearSystem::new(1);
        s.ge(aff(&[1], -1));
        s.ge(aff(&[-1], 1));
        assert_eq!(s.solve().unwrap(), vec![rat(1)]);
        let mut t = LinearSystem::new(1);
        t.gt(aff(&[1], -1));
        t.ge(aff(&[-1], 1));
        assert!(t.solve().is_none());
    }

    #[test]
    fn equalities_and_two_dimensions() {
        // x + y = 1, x, y ≥ 0, x - y > 0
        let mut s = LinearSystem::new(2);
        s.eq(aff(&[1, 1], -1));
        s.ge(aff(&[1, 0], 0));
        s.ge(aff(&[0, 1], 0));
        s.gt(aff(&[1, -1], 0));
        let x = s.solve().unwrap();
        assert!(s.is_satisfied_by(&x));
        s.gt(aff(&[-2, 0], 1)); // x < 1/2 contradicts x > y
        assert!(s.solve().is_none());
    }

    #[test]
    fn inconsistent_equalities() {
        let mut s = LinearSystem::new(2);
        s.eq(aff(&[1, 1], -1));
        s.eq(aff(&[2, 2], -3));
        assert!(s.solve().is_none());
    }

    #[test]
    fn unbounded_directions() {
        let mut s = LinearSystem::new(3);
        s.gt(aff(&[1, 1, 1], 0));
        s.gt(aff(&[0, -1, 2], 5));
        let x = s.solve().unwrap();
        assert!(s.is_satisfied_by(&x));
    }
}
