//! Complete backtracking over ridge-covering choices.
//!
//! A partial triangulation is a set of pairwise non-overlapping `d`-simplices.
//! A ridge is active when it lies on the boundary of the polytope and no placed
//! facet contains it, or lies inside and exactly one placed facet contains it.
//! Every completion covers an active ridge by exactly one new facet, so
//! branching over the facets through one active ridge splits the completions
//! into disjoint classes.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::{validate, Triangulation};
use crate::error::{Error, Result};
use crate::moment::{gale_facets_on, overlaps_unchecked, Simplex};

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RidgeRule {
    /// Lexicographically smallest active ridge.
    Lexicographic,
    /// Active ridge with the fewest admissible facets.
    FewestOptions,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Facets placed over the whole search.
    pub nodes: u64,
    pub solutions: u64,
    pub dead_ends: u64,
    /// Set when the search space was explored to the end.
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub stats: SearchStats,
    pub solutions: Vec<Triangulation>,
}

/// Precomputed candidate facets, ridges and pairwise conflicts for one
/// `(V, d)`.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    n: u32,
    d: usize,
    vertices: Simplex,
    candidates: Vec<Simplex>,
    ridges: Vec<Simplex>,
    boundary: Vec<bool>,
    cand_ridges: Vec<Vec<usize>>,
    ridge_cands: Vec<FixedBitSet>,
    conflicts: Vec<FixedBitSet>,
}

struct Frame<'a> {
    rule: RidgeRule,
    budget: u64,
    stats: SearchStats,
    count: Vec<u8>,
    placed: Vec<usize>,
    on_solution: &'a mut dyn FnMut(Triangulation) -> bool,
}

impl SearchSpace {
    pub fn new(vertices: Simplex, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameters(
                "dimension must be at least 1".into(),
            ));
        }
        if vertices.len() <= d {
            return Err(Error::InvalidParameters(format!(
                "{} vertices cannot span dimension {d}",
                vertices.len()
            )));
        }
        let candidates = vertices.subsets(d + 1);
        let ridges = vertices.subsets(d);
        let index: HashMap<Simplex, usize> =
            ridges.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut boundary = vec![false; ridges.len()];
        for r in gale_facets_on(vertices, d)?.all() {
            boundary[index[&r]] = true;
        }
        let m = candidates.len();
        let mut ridge_cands = vec![FixedBitSet::with_capacity(m); ridges.len()];
        let cand_ridges: Vec<Vec<usize>> = candidates
            .iter()
            .enumerate()
            .map(|(c, s)| {
                s.facets()
                    .map(|r| {
                        let i = index[&r];
                        ridge_cands[i].insert(c);
                        i
                    })
                    .collect()
            })
            .collect();
        let mut conflicts = vec![FixedBitSet::with_capacity(m); m];
        for a in 0..m {
            conflicts[a].insert(a);
            for b in a + 1..m {
                if overlaps_unchecked(candidates[a], candidates[b], d) {
                    conflicts[a].insert(b);
                    conflicts[b].insert(a);
                }
            }
        }
        Ok(SearchSpace {
            n: vertices.max().expect("nonempty"),
            d,
            vertices,
            candidates,
            ridges,
            boundary,
            cand_ridges,
            ridge_cands,
            conflicts,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> Simplex {
        self.vertices
    }

    /// Ambient `n` used for the produced triangulations.
    pub fn with_ambient(mut self, n: u32) -> Self {
        self.n = self.n.max(n);
        self
    }

    /// Explores every triangulation containing all of `required` as faces,
    /// calling `on_solution` for each; it returns `false` to stop.
    ///
    /// A simplex is a face of a triangulation iff it overlaps none of its
    /// facets, so `required` only prunes the candidate set and forces its
    /// full-dimensional members.
    pub fn run(
        &self,
        required: &[Simplex],
        rule: RidgeRule,
        budget: u64,
        on_solution: &mut dyn FnMut(Triangulation) -> bool,
    ) -> Result<SearchStats> {
        let d = self.d;
        for s in required {
            if s.is_empty() || s.len() > d + 1 || !s.is_subset(self.vertices) {
                return Err(Error::InvalidSimplex(format!(
                    "{s} is not a simplex of dimension at most {d} on {}",
                    self.vertices
                )));
            }
        }
        let mut allowed = FixedBitSet::with_capacity(self.candidates.len());
        allowed.insert_range(..);
        for (c, &cand) in self.candidates.iter().enumerate() {
            if required.iter().any(|&s| overlaps_unchecked(s, cand, d)) {
                allowed.set(c, false);
            }
        }
        let mut frame = Frame {
            rule,
            budget,
            stats: SearchStats::default(),
            count: vec![0; self.ridges.len()],
            placed: Vec::new(),
            on_solution,
        };
        for s in required.iter().filter(|s| s.len() == d + 1) {
            let c = self.candidates.binary_search(s).expect("candidate");
            if frame.placed.contains(&c) {
                continue;
            }
            if !allowed.contains(c) {
                return Err(Error::Overlap(*s, *s));
            }
            allowed.difference_with(&self.conflicts[c]);
            self.place(&mut frame, c);
        }
        let finished = self.descend(&allowed, &mut frame)?;
        frame.stats.complete = finished;
        Ok(frame.stats)
    }

    fn place(&self, frame: &mut Frame<'_>, c: usize) {
        for &r in &self.cand_ridges[c] {
            frame.count[r] += 1;
        }
        frame.placed.push(c);
    }

    fn unplace(&self, frame: &mut Frame<'_>, c: usize) {
        for &r in &self.cand_ridges[c] {
            frame.count[r] -= 1;
        }
        frame.placed.pop();
    }

    fn is_active(&self, frame: &Frame<'_>, r: usize) -> bool {
        if self.boundary[r] {
            frame.count[r] == 0
        } else {
            frame.count[r] == 1
        }
    }

    /// Returns `Ok(false)` when the callback asked to stop.
    fn descend(&self, allowed: &FixedBitSet, frame: &mut Frame<'_>) -> Result<bool> {
        let mut chosen: Option<(usize, usize)> = None;
        for r in 0..self.ridges.len() {
            if !self.is_active(frame, r) {
                continue;
            }
            let options = allowed.intersection_count(&self.ridge_cands[r]);
            if options == 0 {
                frame.stats.dead_ends += 1;
                return Ok(true);
            }
            match (frame.rule, chosen) {
                (_, None) => chosen = Some((r, options)),
                (RidgeRule::FewestOptions, Some((_, best))) if options < best => {
                    chosen = Some((r, options))
                }
                _ => {}
            }
        }
        let Some((r, _)) = chosen else {
            return self.emit(frame);
        };
        let options: Vec<usize> = allowed.intersection(&self.ridge_cands[r]).collect();
        for c in options {
            frame.stats.nodes += 1;
            if frame.stats.nodes > frame.budget {
                return Err(Error::BudgetExhausted {
                    budget: frame.budget,
                });
            }
            let mut next = allowed.clone();
            next.difference_with(&self.conflicts[c]);
            self.place(frame, c);
            let go_on = self.descend(&next, frame)?;
            self.unplace(frame, c);
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn emit(&self, frame: &mut Frame<'_>) -> Result<bool> {
        let facets = frame.placed.iter().map(|&c| self.candidates[c]).collect();
        let t = Triangulation::on_vertices(self.n, self.vertices, self.d, facets)?;
        let report = validate(&t);
        if !report.ok {
            return Err(Error::InternalConsistency(format!(
                "search completed a non-triangulation {t}: {:?}",
                report.failures
            )));
        }
        frame.stats.solutions += 1;
        Ok((frame.on_solution)(t))
    }
}

/// All triangulations of `C(n, d)`, canonically sorted.
pub fn enumerate_triangulations(n: u32, d: usize) -> Result<Vec<Triangulation>> {
    enumerate_triangulations_with_budget(n, d, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_triangulations_with_budget(
    n: u32,
    d: usize,
    budget: u64,
) -> Result<Vec<Triangulation>> {
    if n == 0 || n > crate::moment::MAX_VERTEX {
        return Err(Error::InvalidParameters(format!("n={n} outside 1..=64")));
    }
    Ok(enumerate_triangulations_on(Simplex::ground(n), d, budget)?.solutions)
}

/// All triangulations of the cyclic polytope on `vertices`.
pub fn enumerate_triangulations_on(
    vertices: Simplex,
    d: usize,
    budget: u64,
) -> Result<SearchOutcome> {
    let space = SearchSpace::new(vertices, d)?;
    let mut solutions = Vec::new();
    let stats = space.run(&[], RidgeRule::Lexicographic, budget, &mut |t| {
        solutions.push(t);
        true
    })?;
    solutions.sort_unstable();
    Ok(SearchOutcome { stats, solutions })
}
