use super::level::level_triangulation_d3;
use super::plane::t_of_sigma_d2;
use super::reduce::skeleton_reduce;
use super::{check_result, Complex, ExtensionResult, Strategy};
use crate::error::{Error, Result};
use crate::moment::{order_simplices, Simplex};
use crate::triangulation::{meet, psi_chain, HstPoset, Triangulation, DEFAULT_ENUMERATION_BUDGET};

/// Extension for `D ∈ {3, 4}` by the lattice argument: one triangulation
/// `T_i ∈ S(n, D-1)` per reduced simplex, suffix meets `S_k`, a maximal chain
/// of `HST(n, D-1)` through all `S_k`, lifted back to dimension `D`.
///
/// Enumerates `S(n, D-1)`, so only practical for small `n`.
pub fn constructive_extend(f: &Complex) -> Result<ExtensionResult> {
    constructive_extend_with_budget(f, DEFAULT_ENUMERATION_BUDGET)
}

pub fn constructive_extend_with_budget(f: &Complex, budget: u64) -> Result<ExtensionResult> {
    let (n, big_d) = (f.n(), f.d());
    if !(3..=4).contains(&big_d) {
        return Err(Error::Unsupported(format!(
            "constructive extension in dimension {big_d}"
        )));
    }
    if (n as usize) < big_d + 1 {
        return Err(Error::InvalidParameters(format!(
            "{n} vertices cannot span dimension {big_d}"
        )));
    }
    let d = big_d - 1;
    let reduced = skeleton_reduce(f)?;
    let mut steps = Vec::new();
    let order: Vec<Simplex> = if big_d == 3 {
        order_simplices(reduced.simplices(), d)?
    } else {
        let mut v = reduced.simplices().to_vec();
        v.sort_by(|a, b| {
            Simplex::min(*b)
                .cmp(&Simplex::min(*a))
                .then_with(|| Simplex::max(*a).cmp(&Simplex::max(*b)))
                .then_with(|| a.cmp(b))
        });
        v
    };
    steps.push(format!("order: {order:?}"));

    let mut levels = Vec::with_capacity(order.len());
    for (i, &sigma) in order.iter().enumerate() {
        let t = if big_d == 3 {
            t_of_sigma_d2(sigma, n)?
        } else {
            level_triangulation_d3(sigma, &order[..i], n)?
        };
        steps.push(format!("T({sigma}) = {t}"));
        levels.push(t);
    }
    let mut suffix: Vec<Triangulation> = Vec::with_capacity(levels.len());
    for t in levels.iter().rev() {
        let s = match suffix.last() {
            None => t.clone(),
            Some(prev) => meet(t, prev)?,
        };
        suffix.push(s);
    }
    suffix.reverse();
    for (k, s) in suffix.iter().enumerate() {
        steps.push(format!("S_{} = {s}", k + 1));
    }

    let poset = HstPoset::build_with_budget(n, d, budget)?;
    let mut anchors = vec![poset.minimum().expect("nonempty poset")];
    for s in &suffix {
        anchors.push(
            poset
                .index_of(s)
                .ok_or_else(|| Error::InternalConsistency(format!("{s} missing from the poset")))?,
        );
    }
    anchors.push(poset.maximum().expect("nonempty poset"));
    let mut chain = vec![anchors[0]];
    for w in anchors.windows(2) {
        let path = poset.cover_path(w[0], w[1]).ok_or_else(|| {
            Error::InternalConsistency(format!(
                "{} is not below {}",
                poset.element(w[0]),
                poset.element(w[1])
            ))
        })?;
        chain.extend(path.into_iter().skip(1));
    }
    steps.push(format!("maximal chain of length {}", chain.len()));
    let members: Vec<Triangulation> = chain.iter().map(|&i| poset.element(i).clone()).collect();
    let lifted = psi_chain(&members, &poset)?;
    check_result(&lifted, f.simplices(), "constructive extension")?;
    check_result(&lifted, reduced.simplices(), "constructive extension")?;
    Ok(ExtensionResult {
        triangulation: lifted,
        strategy: Strategy::Constructive,
        steps,
        ops: poset.len() as u64,
    })
}
