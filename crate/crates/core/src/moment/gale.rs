//! Facets of the cyclic polytope `C(n, d)` split into upper and lower envelope,
//! via the adjacent-pair families `D(k, [a, b])`.

use serde::{Deserialize, Serialize};

use super::Simplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaleFacets {
    pub upper: Vec<Simplex>,
    pub lower: Vec<Simplex>,
}

impl GaleFacets {
    /// Upper and lower facets merged, sorted, deduplicated.
    pub fn all(&self) -> Vec<Simplex> {
        let mut all: Vec<Simplex> = self.upper.iter().chain(&self.lower).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// `D(k, [a, b])`: sets `i1 < i2 < ... < i2k` in `[a, b]` with `i_{2j} = i_{2j-1} + 1`.
pub fn adjacent_pairs(k: usize, a: u32, b: u32) -> Vec<Simplex> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    adjacent_pairs_rec(k, a, b, &mut acc, &mut out);
    out.sort_unstable();
    out
}

fn adjacent_pairs_rec(k: usize, from: u32, b: u32, acc: &mut Vec<u32>, out: &mut Vec<Simplex>) {
    if k == 0 {
        out.push(Simplex::from_iter_unchecked(acc.iter().copied()));
        return;
    }
    let mut i = from;
    // need room for 2k elements in [i, b]
    while i < b && (b - i + 1) as usize >= 2 * k {
        acc.push(i);
        acc.push(i + 1);
        adjacent_pairs_rec(k - 1, i + 2, b, acc, out);
        acc.pop();
        acc.pop();
        i += 1;
    }
}

fn join(prefix: Simplex, family: Vec<Simplex>) -> Vec<Simplex> {
    let mut out: Vec<Simplex> = family.into_iter().map(|s| s.union(prefix)).collect();
    out.sort_unstable();
    out
}

/// Facets of `C(n, d)` on `[n]`.
pub fn gale_facets(n: u32, d: usize) -> Result<GaleFacets> {
    if d == 0 {
        return Err(Error::InvalidParameters(
            "dimension must be at least 1".into(),
        ));
    }
    if (n as usize) <= d {
        return Err(Error::InvalidParameters(format!(
            "C(n,d) needs n > d, got n={n}, d={d}"
        )));
    }
    if n > super::simplex::MAX_VERTEX {
        return Err(Error::InvalidParameters(format!("n={n} exceeds 64")));
    }
    let single = |v: u32| Simplex::from_iter_unchecked([v]);
    let (upper, lower) = if d % 2 == 1 {
        let k = (d - 1) / 2;
        (
            join(single(n), adjacent_pairs(k, 1, n - 1)),
            join(single(1), adjacent_pairs(k, 2, n)),
        )
    } else {
        let k = d / 2;
        (
            join(single(1).with(n), adjacent_pairs(k - 1, 2, n - 1)),
            adjacent_pairs(k, 1, n),
        )
    };
    Ok(GaleFacets { upper, lower })
}

/// Facets of the cyclic polytope on an arbitrary vertex set `vertices`.
pub fn gale_facets_on(vertices: Simplex, d: usize) -> Result<GaleFacets> {
    let g = gale_facets(vertices.len() as u32, d)?;
    let back = |fs: Vec<Simplex>| {
        let mut v: Vec<Simplex> = fs.into_iter().map(|f| f.relabel_from(vertices)).collect();
        v.sort_unstable();
        v
    };
    Ok(GaleFacets {
        upper: back(g.upper),
        lower: back(g.lower),
    })
}

/// Gale's evenness condition: a `d`-subset `f` of `[n]` is a facet of `C(n, d)`
/// iff every two vertices outside `f` are separated by an even number of
/// elements of `f`.
pub fn satisfies_gale_evenness(f: Simplex, n: u32) -> bool {
    let outside: Vec<u32> = Simplex::ground(n).difference(f).to_vec();
    outside.windows(2).all(|w| {
        let between = f.intersection(Simplex::range(w[0] + 1, w[1].saturating_sub(1)));
        between.len().is_multiple_of(2)
    })
}
