use std::collections::VecDeque;

use rayon::prelude::*;

use super::search::{enumerate_triangulations_with_budget, DEFAULT_ENUMERATION_BUDGET};
use super::{submersion_set, triangulation_leq, Triangulation};
use crate::error::{Error, Result};

/// `S(n, d)` ordered by `triangulation_leq`, with its covering relation.
#[derive(Debug, Clone)]
pub struct HstPoset {
    elements: Vec<Triangulation>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

impl HstPoset {
    pub fn build(n: u32, d: usize) -> Result<Self> {
        Self::build_with_budget(n, d, DEFAULT_ENUMERATION_BUDGET)
    }

    pub fn build_with_budget(n: u32, d: usize, budget: u64) -> Result<Self> {
        Self::from_elements(enumerate_triangulations_with_budget(n, d, budget)?)
    }

    /// Elements must share their ambient data; they are sorted canonically.
    pub fn from_elements(mut elements: Vec<Triangulation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(first) = elements.first() {
            for e in &elements {
                first.same_ambient(e)?;
            }
        }
        let leq: Vec<Vec<bool>> = elements
            .par_iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| triangulation_leq(a, b).expect("same ambient"))
                    .collect()
            })
            .collect();
        let m = elements.len();
        let mut covers = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j
                    && leq[i][j]
                    && !(0..m).any(|k| k != i && k != j && leq[i][k] && leq[k][j])
                {
                    covers.push((i, j));
                }
            }
        }
        Ok(HstPoset {
            elements,
            leq,
            covers,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Triangulation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Triangulation {
        &self.elements[i]
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        self.elements.binary_search(t).ok()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.covers.binary_search(&(i, j)).is_ok()
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i]))
    }

    /// Checks reflexivity, antisymmetry and transitivity; returns the first
    /// offending triple otherwise.
    pub fn check_partial_order(&self) -> Result<()> {
        let m = self.len();
        for i in 0..m {
            if !self.leq[i][i] {
                return Err(Error::InternalConsistency(format!(
                    "{} ≰ itself",
                    self.elements[i]
                )));
            }
            for j in 0..m {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return Err(Error::InternalConsistency(format!(
                        "{} and {} are mutually below each other",
                        self.elements[i], self.elements[j]
                    )));
                }
                if !self.leq[i][j] {
                    continue;
                }
                for k in 0..m {
                    if self.leq[j][k] && !self.leq[i][k] {
                        return Err(Error::InternalConsistency(format!(
                            "order not transitive at {}, {}, {}",
                            self.elements[i], self.elements[j], self.elements[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Greatest lower bound, if it exists.
    pub fn glb(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq[k][i] && self.leq[k][j])
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&k| self.leq[k][g]))
    }

    /// Least upper bound, if it exists.
    pub fn lub(&self, i: usize, j: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq[i][k] && self.leq[j][k])
            .collect();
        upper
            .iter()
            .copied()
            .find(|&g| upper.iter().all(|&k| self.leq[g][k]))
    }

    /// A pair without meet or join, or `None` when the poset is a lattice.
    pub fn lattice_violation(&self) -> Option<(usize, usize)> {
        let m = self.len();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .find(|&(i, j)| self.glb(i, j).is_none() || self.lub(i, j).is_none())
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_violation().is_none()
    }

    /// A pair whose meet is missing or whose meet's submersion set differs
    /// from the intersection of theirs.
    pub fn meet_intersection_violation(&self) -> Option<(usize, usize)> {
        let subs: Vec<_> = self.elements.par_iter().map(submersion_set).collect();
        let m = self.len();
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .collect();
        pairs
            .into_par_iter()
            .find_first(|&(i, j)| match self.glb(i, j) {
                None => true,
                Some(g) => subs[g] != subs[i].intersection(&subs[j]),
            })
    }

    /// A shortest path of covering steps from `a` up to `b`.
    pub fn cover_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        if !self.leq[a][b] {
            return None;
        }
        let mut prev = vec![usize::MAX; self.len()];
        let mut queue = VecDeque::from([a]);
        prev[a] = a;
        while let Some(x) = queue.pop_front() {
            if x == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &(lo, hi) in &self.covers {
                if lo == x && prev[hi] == usize::MAX && self.leq[hi][b] {
                    prev[hi] = x;
                    queue.push_back(hi);
                }
            }
        }
        None
    }

    /// Whether `chain` runs from the minimum to the maximum by covering steps.
    pub fn is_maximal_chain(&self, chain: &[usize]) -> bool {
        !chain.is_empty()
            && Some(chain[0]) == self.minimum()
            && chain.last().copied() == self.maximum()
            && chain.windows(2).all(|w| self.is_cover(w[0], w[1]))
    }

    /// All maximal chains, up to `limit` of them.
    pub fn maximal_chains(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let (Some(lo), Some(hi)) = (self.minimum(), self.maximum()) else {
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        let mut path = vec![lo];
        self.chains_from(hi, &mut path, &mut out, limit)?;
        Ok(out)
    }

    fn chains_from(
        &self,
        hi: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<()> {
        let x = *path.last().expect("nonempty");
        if x == hi {
            if out.len() == limit {
                return Err(Error::BudgetExhausted {
                    budget: limit as u64,
                });
            }
            out.push(path.clone());
            return Ok(());
        }
        let ups: Vec<usize> = self
            .covers
            .iter()
            .filter(|c| c.0 == x)
            .map(|c| c.1)
            .collect();
        for y in ups {
            path.push(y);
            self.chains_from(hi, path, out, limit)?;
            path.pop();
        }
        Ok(())
    }

    /// Covering relation as a DOT digraph; nodes are labelled by their facets.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hst {\n  rankdir=BT;\n");
        for (i, t) in self.elements.iter().enumerate() {
            s.push_str(&format!("  {i} [label=\"{t}\"];\n"));
        }
        for (a, b) in &self.covers {
            s.push_str(&format!("  {a} -> {b};\n"));
        }
        s.push_str("}\n");
        s
    }
}
