use serde::{Deserialize, Serialize};

use super::Simplex;
use crate::error::{Error, Result};

/// Longest alternating sequences in `σ ∪ τ`, by starting role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterlaceReport {
    /// Longest `v1 < v2 < ...` with `v1 ∈ σ, v2 ∈ τ, v3 ∈ σ, ...`.
    pub max_len_sigma_start: usize,
    /// Same, beginning with an element of `τ`.
    pub max_len_tau_start: usize,
}

impl InterlaceReport {
    pub fn max_len(&self) -> usize {
        self.max_len_sigma_start.max(self.max_len_tau_start)
    }
}

/// The four mutually exclusive relations between two simplices on `γ_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairClass {
    /// No overlap in `R^d`.
    A,
    /// `σ <_{d+1} τ`.
    B,
    /// `σ >_{d+1} τ`.
    C,
    /// The liftings overlap in `R^{d+1}`.
    D,
}

impl PairClass {
    pub fn flipped(self) -> PairClass {
        match self {
            PairClass::B => PairClass::C,
            PairClass::C => PairClass::B,
            other => other,
        }
    }

    pub fn letter(self) -> char {
        match self {
            PairClass::A => 'A',
            PairClass::B => 'B',
            PairClass::C => 'C',
            PairClass::D => 'D',
        }
    }
}

/// Longest alternating lengths starting with `a` and with `b`, on raw masks.
///
/// Two-state dynamic programme over the merged vertex sequence; a vertex in
/// both sets may take either role.
#[inline]
pub(crate) fn alternating_lengths(a: u64, b: u64) -> (usize, usize) {
    (alternating_from(a, b), alternating_from(b, a))
}

#[inline]
fn alternating_from(first: u64, second: u64) -> usize {
    // best length of a sequence (starting in `first`) ending in each role; 0 = none
    let mut end_first = 0usize;
    let mut end_second = 0usize;
    let mut rest = first | second;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        let (prev_first, prev_second) = (end_first, end_second);
        if first & bit != 0 {
            let cand = if prev_second > 0 { prev_second + 1 } else { 1 };
            end_first = end_first.max(cand);
        }
        if second & bit != 0 && prev_first > 0 {
            end_second = end_second.max(prev_first + 1);
        }
    }
    end_first.max(end_second)
}

pub fn interlace_report(sigma: Simplex, tau: Simplex) -> Result<InterlaceReport> {
    if sigma.is_empty() || tau.is_empty() {
        return Err(Error::EmptySimplex);
    }
    let (s, t) = alternating_lengths(sigma.mask(), tau.mask());
    Ok(InterlaceReport {
        max_len_sigma_start: s,
        max_len_tau_start: t,
    })
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
            return Err(Error::SimplexTooLarge {
                simplex: s,
                len: s.len(),
                max: d + 1,
                d,
            });
        }
    }
    Ok(())
}

/// Overlap in `R^d`: the simplices are `(d+2)`-interlacing.
pub fn overlaps(sigma: Simplex, tau: Simplex, d: usize) -> Result<bool> {
    check_pair(sigma, tau, d)?;
    Ok(overlaps_unchecked(sigma, tau, d))
}

#[inline]
pub(crate) fn overlaps_unchecked(sigma: Simplex, tau: Simplex, d: usize) -> bool {
    let (s, t) = alternating_lengths(sigma.mask(), tau.mask());
    s.max(t) >= d + 2
}

/// `σ <_{d+1} τ`: `(d+2)`-interlacing with the `σ`-first pattern only (d even),
/// or the `τ`-first pattern only (d odd).
pub fn height_less(sigma: Simplex, tau: Simplex, d: usize) -> Result<bool> {
    check_pair(sigma, tau, d)?;
    Ok(classify_unchecked(sigma, tau, d) == PairClass::B)
}

pub fn classify_pair(sigma: Simplex, tau: Simplex, d: usize) -> Result<PairClass> {
    check_pair(sigma, tau, d)?;
    Ok(classify_unchecked(sigma, tau, d))
}

#[inline]
pub(crate) fn classify_unchecked(sigma: Simplex, tau: Simplex, d: usize) -> PairClass {
    let (s, t) = alternating_lengths(sigma.mask(), tau.mask());
    let k = d + 2;
    let (below, above) = if d.is_multiple_of(2) { (s, t) } else { (t, s) };
    match (below >= k, above >= k) {
        (false, false) => PairClass::A,
        (true, false) => PairClass::B,
        (false, true) => PairClass::C,
        (true, true) => PairClass::D,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    /// Brute force: try every increasing subsequence of the union together with
    /// every role assignment.
    fn brute_force(sigma: Simplex, tau: Simplex) -> (usize, usize) {
        let union = sigma.union(tau).to_vec();
        let mut best = (0, 0);
        for mask in 1u32..(1 << union.len()) {
            let seq: Vec<u32> = (0..union.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| union[i])
                .collect();
            let fits = |first: Simplex, second: Simplex| {
                seq.iter().enumerate().all(|(i, &v)| {
                    if i % 2 == 0 {
                        first.contains(v)
                    } else {
                        second.contains(v)
                    }
                })
            };
            if fits(sigma, tau) {
                best.0 = best.0.max(seq.len());
            }
            if fits(tau, sigma) {
                best.1 = best.1.max(seq.len());
            }
        }
        best
    }

    #[test]
    fn crossing_diagonals() {
        let r = interlace_report(simplex![1, 3], simplex![2, 4]).unwrap();
        assert_eq!((r.max_len_sigma_start, r.max_len_tau_start), (4, 3));
    }

    #[test]
    fn rambau_pair_lengths_match_brute_force() {
        let a = simplex![1, 2, 3, 4, 5, 6];
        let b = simplex![3, 4, 5, 6, 7, 8];
        assert_eq!(brute_force(a, b), (6, 5));
        let r = interlace_report(a, b).unwrap();
        assert_eq!((r.max_len_sigma_start, r.max_len_tau_start), (6, 5));
    }

    #[test]
    fn six_interlacing_example() {
        let r = interlace_report(simplex![1, 4, 6], simplex![3, 5, 8]).unwrap();
        assert!(r.max_len_sigma_start >= 6);
        assert!(r.max_len_tau_start >= 5);
    }

    #[test]
    fn dp_matches_brute_force_on_all_small_pairs() {
        for a in 1u64..128 {
            for b in 1u64..128 {
                let (sa, sb) = (Simplex::from_mask(a), Simplex::from_mask(b));
                let r = interlace_report(sa, sb).unwrap();
                assert_eq!(
                    (r.max_len_sigma_start, r.max_len_tau_start),
                    brute_force(sa, sb),
                    "{sa} {sb}"
                );
            }
        }
    }

    #[test]
    fn empty_simplex_is_an_error() {
        assert_eq!(
            interlace_report(Simplex::EMPTY, simplex![1]),
            Err(Error::EmptySimplex)
        );
    }

    #[test]
    fn overlap_examples() {
        assert!(overlaps(simplex![1, 3], simplex![2, 4], 2).unwrap());
        assert!(!overlaps(simplex![1, 2, 3, 4, 5, 6], simplex![1, 2, 3, 6, 7, 8], 5).unwrap());
        assert!(overlaps(simplex![1, 3, 5, 7], simplex![2, 4, 6, 8], 5).unwrap());
        assert!(matches!(
            overlaps(simplex![1, 2, 3, 4], simplex![1], 2),
            Err(Error::SimplexTooLarge { .. })
        ));
    }

    #[test]
    fn height_examples() {
        let sigma = simplex![1, 4, 6];
        let e = simplex![2, 7];
        let tau = simplex![3, 5, 8];
        assert!(height_less(sigma, e, 2).unwrap());
        assert!(height_less(e, tau, 2).unwrap());
        assert!(height_less(simplex![1, 3], simplex![2, 4], 2).unwrap());
        assert!(!height_less(simplex![2, 4], simplex![1, 3], 2).unwrap());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_pair(simplex![1, 2], simplex![1, 2, 3], 2).unwrap(),
            PairClass::A
        );
        assert_eq!(
            classify_pair(simplex![1, 3], simplex![2, 4], 2).unwrap(),
            PairClass::B
        );
        assert_eq!(
            classify_pair(simplex![1, 4, 6], simplex![3, 5, 8], 2).unwrap(),
            PairClass::D
        );
    }

    #[test]
    fn singletons_never_overlap_from_dimension_two() {
        for d in 2..6 {
            for v in 1..10 {
                for m in 1u64..512 {
                    let t = Simplex::from_mask(m);
                    if t.len() <= d + 1 {
                        assert!(!overlaps(Simplex::new(&[v]).unwrap(), t, d).unwrap());
                    }
                }
            }
        }
        // on the line a point does sit inside a segment
        assert!(overlaps(simplex![2], simplex![1, 3], 1).unwrap());
    }
}
