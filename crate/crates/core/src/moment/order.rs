use std::collections::BTreeSet;

use super::interlace::{classify_pair, PairClass};
use super::Simplex;
use crate::error::{Error, Result};

/// A linear extension of `≼_{d+1}` on the given simplices: topological sort of
/// the `<_{d+1}` digraph, taking the lexicographically smallest available
/// simplex at each step.
pub fn order_simplices(simplices: &[Simplex], d: usize) -> Result<Vec<Simplex>> {
    let mut items: Vec<Simplex> = simplices.to_vec();
    items.sort_unstable();
    items.dedup();
    let n = items.len();
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && classify_pair(items[i], items[j], d)? == PairClass::B {
                succ[i].push(j);
                indeg[j] += 1;
            }
        }
    }
    // items are sorted, so index order is lexicographic order
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(i) = ready.pop_first() {
        out.push(items[i]);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.insert(j);
            }
        }
    }
    if out.len() < n {
        let stuck = (0..n).find(|&i| indeg[i] > 0).expect("unsorted element");
        return Err(Error::AntisymmetryViolated(items[stuck]));
    }
    Ok(out)
}
