use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::error::Result;
use crate::extension::Complex;
use crate::moment::{overlaps_unchecked, Simplex};

/// Rejection sampling: `attempts` random simplices with 2 to `d + 1` vertices
/// on `[n]`, each kept when it overlaps nothing kept so far.
pub fn random_complex<R: Rng + ?Sized>(
    n: u32,
    d: usize,
    attempts: usize,
    rng: &mut R,
) -> Result<Complex> {
    let mut kept: Vec<Simplex> = Vec::new();
    let top = (d + 1).min(n as usize);
    for _ in 0..attempts {
        if top < 2 {
            break;
        }
        let k = rng.gen_range(2..=top);
        let s = Simplex::from_iter_unchecked(
            index::sample(rng, n as usize, k)
                .into_iter()
                .map(|i| i as u32 + 1),
        );
        if kept.iter().all(|&t| !overlaps_unchecked(s, t, d)) {
            kept.push(s);
        }
    }
    Complex::new(n, d, kept)
}

/// A maximal family of pairwise non-overlapping `d`-simplices on `[n]`, built
/// greedily over a random order of all candidates.
pub fn random_maximal_family<R: Rng + ?Sized>(n: u32, d: usize, rng: &mut R) -> Result<Complex> {
    let mut cands = Simplex::ground(n).subsets(d + 1);
    cands.shuffle(rng);
    let mut kept: Vec<Simplex> = Vec::new();
    for c in cands {
        if kept.iter().all(|&t| !overlaps_unchecked(c, t, d)) {
            kept.push(c);
        }
    }
    Complex::new(n, d, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexamples::maximal_nonoverlap_check;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_by_seed() {
        let a = random_complex(10, 4, 30, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = random_complex(10, 4, 30, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn maximal_families_are_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let f = random_maximal_family(8, 5, &mut rng).unwrap();
            assert!(maximal_nonoverlap_check(&f).is_empty());
        }
    }
}
