use std::collections::HashSet;

use super::check_result;
use crate::error::{Error, Result};
use crate::moment::{classify_unchecked, order_simplices, PairClass, Simplex};
use crate::triangulation::{
    envelope_triangulation, meet, simplex_above, simplex_below, Side, Triangulation,
};

/// `T(σ) ∈ S(n, 2)` for an edge or triangle `σ`: cut the `n`-gon along `σ`
/// and fan every piece from its largest vertex.
///
/// Contains `σ`, and lies above every edge or triangle that is below `σ` or
/// does not cross it.
pub fn t_of_sigma_d2(sigma: Simplex, n: u32) -> Result<Triangulation> {
    if !(2..=3).contains(&sigma.len()) {
        return Err(Error::InvalidSimplex(format!(
            "{sigma} is not an edge or a triangle"
        )));
    }
    if n < 3 || !sigma.is_subset(Simplex::ground(n)) {
        return Err(Error::InvalidParameters(format!(
            "{sigma} is not a simplex of the {n}-gon"
        )));
    }
    let v = sigma.to_vec();
    let (first, last) = (v[0], v[v.len() - 1]);
    let mut regions: Vec<Simplex> = v.windows(2).map(|w| Simplex::range(w[0], w[1])).collect();
    regions.push(Simplex::range(1, first).union(Simplex::range(last, n)));
    let mut facets: Vec<Simplex> = regions.into_iter().flat_map(fan_at_max).collect();
    if sigma.len() == 3 {
        facets.push(sigma);
    }
    let t = Triangulation::new(n, 2, facets)?;
    check_result(&t, &[sigma], "T(σ)")?;
    Ok(t)
}

fn fan_at_max(region: Simplex) -> Vec<Simplex> {
    let Some(m) = region.max() else {
        return Vec::new();
    };
    let rest = region.without(m).to_vec();
    rest.windows(2)
        .map(|w| Simplex::from_iter_unchecked([w[0], w[1], m]))
        .collect()
}

/// Each block sorted along the height order, blocks concatenated `E1, E2, E3`.
pub fn separating_order(e1: &[Simplex], e2: &[Simplex], e3: &[Simplex]) -> Result<Vec<Simplex>> {
    let mut out = order_simplices(e1, 2)?;
    out.extend(order_simplices(e2, 2)?);
    out.extend(order_simplices(e3, 2)?);
    Ok(out)
}

/// `T ∈ S(n, 2)` with every edge of `E1` below `T`, every edge of `E2` in `T`
/// and every edge of `E3` above `T`: the meet of `T(e)` over the edges from
/// the first non-`E1` position of `order` on.
pub fn separating_triangulation(
    e1: &[Simplex],
    e2: &[Simplex],
    e3: &[Simplex],
    order: &[Simplex],
    n: u32,
) -> Result<Triangulation> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "n={n} is too small for a polygon"
        )));
    }
    let ground = Simplex::ground(n);
    let sets: Vec<HashSet<Simplex>> = [e1, e2, e3]
        .iter()
        .map(|e| e.iter().copied().collect())
        .collect();
    for e in e1.iter().chain(e2).chain(e3) {
        if e.len() != 2 || !e.is_subset(ground) {
            return Err(Error::InvalidSimplex(format!(
                "{e} is not an edge on [{n}]"
            )));
        }
    }
    let block = |e: &Simplex| sets.iter().position(|s| s.contains(e));
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if let Some(e) = a.intersection(b).next() {
                return Err(Error::Precondition(format!(
                    "{e} is in two of the edge sets"
                )));
            }
        }
    }
    let listed: HashSet<Simplex> = order.iter().copied().collect();
    let total: usize = sets.iter().map(|s| s.len()).sum();
    if listed.len() != order.len()
        || listed.len() != total
        || order.iter().any(|e| block(e).is_none())
    {
        return Err(Error::Precondition(
            "the order must list each given edge exactly once".into(),
        ));
    }
    for w in order.windows(2) {
        if block(&w[0]) > block(&w[1]) {
            return Err(Error::Precondition(format!(
                "{} precedes {} but belongs to a later edge set",
                w[0], w[1]
            )));
        }
    }
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            let class = classify_unchecked(a, b, 2);
            if !matches!(class, PairClass::A | PairClass::B) {
                return Err(Error::Precondition(format!(
                    "{a} precedes {b} in the order but lies above it"
                )));
            }
            if class != PairClass::A && block(&a) == Some(1) && block(&b) == Some(1) {
                return Err(Error::Precondition(format!("{a} and {b} in E2 cross")));
            }
        }
    }

    let t = match order.iter().position(|e| !sets[0].contains(e)) {
        None => envelope_triangulation(ground, 2, Side::Upper)?,
        Some(r) => {
            let mut acc = t_of_sigma_d2(order[order.len() - 1], n)?;
            for &e in order[r..order.len() - 1].iter().rev() {
                acc = meet(&t_of_sigma_d2(e, n)?, &acc)?;
            }
            acc
        }
    };
    for &e in e1 {
        if !simplex_below(e, &t)? {
            return Err(Error::InternalConsistency(format!("{e} is not below {t}")));
        }
    }
    for &e in e2 {
        if !t.has_face(e) {
            return Err(Error::InternalConsistency(format!(
                "{e} is not an edge of {t}"
            )));
        }
    }
    for &e in e3 {
        if !simplex_above(e, &t)? {
            return Err(Error::InternalConsistency(format!("{e} is not above {t}")));
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;
    use crate::triangulation::validate;

    #[test]
    fn t_of_sigma_examples() {
        assert_eq!(
            t_of_sigma_d2(simplex![1, 3], 4).unwrap().facets(),
            &[simplex![1, 2, 3], simplex![1, 3, 4]]
        );
        assert_eq!(
            t_of_sigma_d2(simplex![2, 4], 5).unwrap().facets(),
            &[simplex![1, 2, 5], simplex![2, 3, 4], simplex![2, 4, 5]]
        );
        assert_eq!(
            t_of_sigma_d2(simplex![1, 3, 5], 5).unwrap().facets(),
            &[simplex![1, 2, 3], simplex![1, 3, 5], simplex![3, 4, 5]]
        );
    }

    #[test]
    fn t_of_sigma_rejects_bad_input() {
        assert!(t_of_sigma_d2(simplex![1, 2, 3, 4], 6).is_err());
        assert!(t_of_sigma_d2(simplex![2], 6).is_err());
        assert!(t_of_sigma_d2(simplex![2, 7], 6).is_err());
    }

    #[test]
    fn t_of_sigma_guarantee_small() {
        for n in 3..=7u32 {
            let ground = Simplex::ground(n);
            let cands: Vec<Simplex> = ground
                .subsets(2)
                .into_iter()
                .chain(ground.subsets(3))
                .collect();
            for &sigma in &cands {
                let t = t_of_sigma_d2(sigma, n).unwrap();
                assert!(validate(&t).ok);
                for &tau in &cands {
                    if matches!(
                        classify_unchecked(tau, sigma, 2),
                        PairClass::A | PairClass::B
                    ) {
                        assert!(
                            simplex_below(tau, &t).unwrap(),
                            "{tau} vs T({sigma}) on {n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn separating_examples() {
        let t =
            separating_triangulation(&[], &[simplex![1, 3]], &[], &[simplex![1, 3]], 4).unwrap();
        assert_eq!(t.facets(), &[simplex![1, 2, 3], simplex![1, 3, 4]]);
        let order = [simplex![1, 3], simplex![2, 4]];
        let t =
            separating_triangulation(&[simplex![1, 3]], &[], &[simplex![2, 4]], &order, 4).unwrap();
        assert!(simplex_below(simplex![1, 3], &t).unwrap());
        assert!(simplex_above(simplex![2, 4], &t).unwrap());
        assert_eq!(t, t_of_sigma_d2(simplex![2, 4], 4).unwrap());
        let poly: Vec<Simplex> = (1..6u32)
            .map(|i| simplex![i, i + 1])
            .chain([simplex![1, 6]])
            .collect();
        let order = separating_order(&[], &poly, &[]).unwrap();
        let t = separating_triangulation(&[], &poly, &[], &order, 6).unwrap();
        assert!(validate(&t).ok);
    }

    #[test]
    fn separating_without_constraints_beyond_e1() {
        let e1 = [simplex![1, 4], simplex![2, 5]];
        let order = separating_order(&e1, &[], &[]).unwrap();
        let t = separating_triangulation(&e1, &[], &[], &order, 6).unwrap();
        assert_eq!(
            t,
            envelope_triangulation(Simplex::ground(6), 2, Side::Upper).unwrap()
        );
    }

    #[test]
    fn separating_rejects_bad_orders() {
        let order = [simplex![2, 4], simplex![1, 3]];
        let err = separating_triangulation(&[simplex![2, 4]], &[], &[simplex![1, 3]], &order, 4);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let e2 = [simplex![1, 3], simplex![2, 4]];
        let err = separating_triangulation(&[], &e2, &[], &e2, 4);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let err = separating_triangulation(&[simplex![1, 3]], &[], &[], &[], 4);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }
}
