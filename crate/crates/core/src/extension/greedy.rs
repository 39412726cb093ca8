use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::{check_result, reduce::skeleton_reduce, Complex, ExtensionResult, Strategy};
use crate::error::{Error, Result};
use crate::moment::{gale_facets, overlaps_unchecked, Simplex};
use crate::triangulation::Triangulation;

/// Snapshot of a greedy run that found no admissible simplex on a ridge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StuckState {
    pub n: u32,
    pub d: usize,
    pub ridge: Simplex,
    pub pending_ridges: Vec<Simplex>,
    pub facets: Vec<Simplex>,
    pub steps: Vec<String>,
}

impl std::fmt::Display for StuckState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "greedy extension on (n={}, d={}) stuck at ridge {} with {} facets placed and {} ridges open",
            self.n,
            self.d,
            self.ridge,
            self.facets.len(),
            self.pending_ridges.len()
        )
    }
}

/// Greedy completion: repeatedly take the smallest open ridge and glue on the
/// lexicographically first `d`-simplex through it that overlaps nothing placed
/// so far.
///
/// Guaranteed to succeed for `d ∈ {3, 4}` (and `d ≤ 2`). In higher dimensions
/// it may get stuck, which is reported as [`Error::GreedyStuck`].
pub fn greedy_extend(f: &Complex) -> Result<ExtensionResult> {
    let (n, d) = (f.n(), f.d());
    if (n as usize) < d + 1 {
        return Err(Error::InvalidParameters(format!(
            "{n} vertices cannot span dimension {d}"
        )));
    }
    let reduced = match d {
        3 | 4 => skeleton_reduce(f)?.simplices().to_vec(),
        _ => f.simplices().to_vec(),
    };
    let boundary = if d == 1 {
        vec![
            Simplex::from_iter_unchecked([1]),
            Simplex::from_iter_unchecked([n]),
        ]
    } else {
        gale_facets(n, d)?.all()
    };

    let mut cells: Vec<Simplex> = Vec::new();
    let mut facets: Vec<Simplex> = Vec::new();
    let mut placed: HashSet<Simplex> = HashSet::new();
    let mut open: BTreeSet<Simplex> = boundary.iter().copied().collect();
    for &s in &reduced {
        if s.len() == d + 1 {
            facets.push(s);
            placed.insert(s);
            toggle_ridges(&mut open, s);
        } else {
            cells.push(s);
        }
    }
    cells.extend(boundary);

    let mut steps = Vec::new();
    let mut ops = 0u64;
    while let Some(&ridge) = open.first() {
        let mut chosen = None;
        let mut scanned = 0usize;
        for v in 1..=n {
            if ridge.contains(v) {
                continue;
            }
            let sigma = ridge.with(v);
            scanned += 1;
            if placed.contains(&sigma) {
                continue;
            }
            let mut clear = true;
            for &c in cells.iter().chain(&facets) {
                ops += 1;
                if overlaps_unchecked(sigma, c, d) {
                    clear = false;
                    break;
                }
            }
            if clear {
                chosen = Some(sigma);
                break;
            }
        }
        let Some(sigma) = chosen else {
            facets.sort_unstable();
            return Err(Error::GreedyStuck(Box::new(StuckState {
                n,
                d,
                ridge,
                pending_ridges: open.into_iter().collect(),
                facets,
                steps,
            })));
        };
        steps.push(format!("ridge {ridge}: add {sigma} (candidate {scanned})"));
        facets.push(sigma);
        placed.insert(sigma);
        toggle_ridges(&mut open, sigma);
    }

    let t = Triangulation::new(n, d, facets)?;
    check_result(&t, f.simplices(), "greedy extension")?;
    Ok(ExtensionResult {
        triangulation: t,
        strategy: Strategy::Greedy,
        steps,
        ops,
    })
}

fn toggle_ridges(open: &mut BTreeSet<Simplex>, sigma: Simplex) {
    for r in sigma.facets() {
        if !open.remove(&r) {
            open.insert(r);
        }
    }
}
