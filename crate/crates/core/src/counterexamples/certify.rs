use super::{Certificate, Method, Verdict};
use crate::error::Result;
use crate::extension::Complex;
use crate::moment::{overlaps_unchecked, Simplex};
use crate::triangulation::{RidgeRule, SearchSpace, Triangulation};

pub const DEFAULT_CERTIFY_BUDGET: u64 = 10_000_000;

/// Complete backtracking for a triangulation of `C(n, D)` having every member
/// of `F` as a face. Running out of `budget` is an error, never a verdict.
pub fn verify_nonextendable(f: &Complex, budget: u64) -> Result<Certificate> {
    let space = SearchSpace::new(Simplex::ground(f.n()), f.d())?;
    let mut witness: Option<Triangulation> = None;
    let stats = space.run(f.simplices(), RidgeRule::FewestOptions, budget, &mut |t| {
        witness = Some(t);
        false
    })?;
    Ok(Certificate {
        verdict: if witness.is_some() {
            Verdict::Extendable
        } else {
            Verdict::NonExtendable
        },
        method: Method::Search,
        witness,
        search: Some(stats),
        gale: None,
    })
}

/// The `D`-simplices on `[n]` outside `F` that overlap no member of `F`.
pub fn maximal_nonoverlap_check(f: &Complex) -> Vec<Simplex> {
    let d = f.d();
    Simplex::ground(f.n())
        .subsets(d + 1)
        .into_iter()
        .filter(|&c| {
            !f.simplices().contains(&c)
                && f.simplices().iter().all(|&s| !overlaps_unchecked(c, s, d))
        })
        .collect()
}
