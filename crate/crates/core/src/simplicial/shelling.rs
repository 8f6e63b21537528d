//! Shelling verification, spanning facets, and a backtracking shelling search.
//!
//! For a facet order `F_1, …, F_t` let `L_j` be the set of vertices `λ ∈ F_j`
//! such that some earlier facet meets `F_j` in exactly `F_j ∖ {λ}`. The order
//! is a shelling iff for every `i < j` some `λ ∈ F_j ∖ F_i` lies in `L_j`,
//! i.e. iff no earlier facet contains `L_j`. A facet with `L_j = F_j` is
//! spanning.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// The first failing pair of a facet order, as 0-based positions `earlier < later`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ShellingWitness {
    pub earlier: usize,
    pub later: usize,
}

/// Outcome of [`SimplicialComplex::verify_shelling`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingReport {
    order: Vec<VertexSet>,
    removable: Vec<VertexSet>,
    witness: Option<ShellingWitness>,
}

impl ShellingReport {
    pub fn order(&self) -> &[VertexSet] {
        &self.order
    }

    /// The sets `L_j`, position by position.
    pub fn removable(&self) -> &[VertexSet] {
        &self.removable
    }

    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }

    /// Smallest failing `later`, then smallest `earlier`.
    pub fn witness(&self) -> Option<ShellingWitness> {
        self.witness
    }

    /// `spanning_flags()[j]` iff `L_j = F_j`; never set for the first facet.
    pub fn spanning_flags(&self) -> Vec<bool> {
        self.order.iter().zip(&self.removable).enumerate().map(|(j, (&f, &l))| j > 0 && l == f).collect()
    }

    /// Spanning facets of a valid shelling, in shelling order.
    pub fn spanning_facets(&self) -> Result<Vec<VertexSet>> {
        if let Some(w) = self.witness {
            return Err(Error::InvalidShelling { earlier: w.earlier, later: w.later });
        }
        Ok(self.order.iter().zip(self.spanning_flags()).filter_map(|(&f, s)| s.then_some(f)).collect())
    }

    pub fn spanning_count(&self) -> usize {
        self.spanning_flags().into_iter().filter(|&s| s).count()
    }
}

/// Outcome of [`SimplicialComplex::find_shelling`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingSearch {
    Found(Vec<VertexSet>),
    /// The search space was exhausted: no shelling exists.
    NotShellable,
    /// The node budget ran out before a decision.
    BudgetExceeded,
}

impl ShellingSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, ShellingSearch::Found(_))
    }
}

fn removable_set(order: &[VertexSet], j: usize) -> VertexSet {
    let f = order[j];
    let codim_one = f.len().saturating_sub(1);
    order[..j]
        .iter()
        .map(|&r| f.intersection(r))
        .filter(|meet| meet.len() == codim_one)
        .fold(VertexSet::EMPTY, |acc, meet| acc.union(f.difference(meet)))
}

impl SimplicialComplex {
    fn check_permutation(&self, order: &[VertexSet]) -> Result<()> {
        if order.len() != self.facet_count() {
            return Err(Error::NotAPermutation(format!("{} entries for {} facets", order.len(), self.facet_count())));
        }
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotAPermutation(format!("{} appears twice", w[0])));
        }
        if let Some((got, _)) = sorted.iter().zip(self.facets()).find(|(a, b)| a != b) {
            let missing = self.facets().iter().find(|f| !order.contains(f));
            return Err(Error::NotAPermutation(match missing {
                Some(m) if !self.facets().contains(got) => format!("{got} is not a facet ({m} is missing)"),
                _ => format!("{got} is not a facet"),
            }));
        }
        Ok(())
    }

    /// Checks whether `order` is a shelling of this pure complex.
    pub fn verify_shelling(&self, order: &[VertexSet]) -> Result<ShellingReport> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        self.check_permutation(order)?;
        let removable: Vec<VertexSet> = (0..order.len()).into_par_iter().map(|j| removable_set(order, j)).collect();
        let failures: Vec<Option<usize>> =
            (0..order.len()).into_par_iter().map(|j| (0..j).find(|&i| removable[j].is_subset(order[i]))).collect();
        let witness =
            failures.iter().enumerate().find_map(|(later, i)| i.map(|earlier| ShellingWitness { earlier, later }));
        Ok(ShellingReport { order: order.to_vec(), removable, witness })
    }

    /// Backtracking search for a shelling order, expanding at most `budget`
    /// search nodes.
    ///
    /// Whether a facet may come next depends only on the *set* of facets
    /// already placed, so failed sets are memoised and never re-expanded.
    pub fn find_shelling(&self, budget: u64) -> Result<ShellingSearch> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let facets = self.facets();
        let t = facets.len();
        if t <= 1 {
            return Ok(ShellingSearch::Found(facets.to_vec()));
        }
        // facets sharing a codimension-one face with facet a
        let codim_one = facets[0].len().saturating_sub(1);
        let ridge: Vec<Vec<usize>> = (0..t)
            .map(|a| (0..t).filter(|&b| b != a && facets[a].intersection(facets[b]).len() == codim_one).collect())
            .collect();
        let mut search = Search {
            facets,
            ridge: &ridge,
            chosen: Vec::with_capacity(t),
            in_prefix: vec![0u64; t.div_ceil(64)],
            removable: vec![VertexSet::EMPTY; t],
            failed: HashSet::new(),
            nodes: 0,
            budget,
        };
        Ok(match search.extend() {
            Step::Found => ShellingSearch::Found(search.chosen.iter().map(|&i| facets[i]).collect()),
            Step::Dead => ShellingSearch::NotShellable,
            Step::OutOfBudget => ShellingSearch::BudgetExceeded,
        })
    }
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct Search<'a> {
    facets: &'a [VertexSet],
    ridge: &'a [Vec<usize>],
    chosen: Vec<usize>,
    in_prefix: Vec<u64>,
    removable: Vec<VertexSet>,
    failed: HashSet<Vec<u64>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn placed(&self, i: usize) -> bool {
        (self.in_prefix[i / 64] >> (i % 64)) & 1 == 1
    }

    fn admissible(&self, a: usize) -> bool {
        let l = self.removable[a];
        !l.is_empty() && self.chosen.iter().all(|&i| !l.is_subset(self.facets[i]))
    }

    fn push(&mut self, a: usize) -> Vec<(usize, VertexSet)> {
        self.chosen.push(a);
        self.in_prefix[a / 64] |= 1 << (a % 64);
        let mut saved = Vec::new();
        for &b in &self.ridge[a] {
            if !self.placed(b) {
                let lambda = self.facets[b].difference(self.facets[a]);
                saved.push((b, self.removable[b]));
                self.removable[b] = self.removable[b].union(lambda);
            }
        }
        saved
    }

    fn pop(&mut self, saved: Vec<(usize, VertexSet)>) {
        let a = self.chosen.pop().expect("non-empty prefix");
        self.in_prefix[a / 64] &= !(1 << (a % 64));
        for (b, l) in saved.into_iter().rev() {
            self.removable[b] = l;
        }
    }

    fn extend(&mut self) -> Step {
        let t = self.facets.len();
        if self.chosen.len() == t {
            return Step::Found;
        }
        if self.failed.contains(&self.in_prefix) {
            return Step::Dead;
        }
        if self.nodes >= self.budget {
            return Step::OutOfBudget;
        }
        self.nodes += 1;

        let mut candidates: Vec<usize> = if self.chosen.is_empty() {
            (0..t).collect()
        } else {
            (0..t).filter(|&a| !self.placed(a) && self.admissible(a)).collect()
        };
        candidates.sort_by_key(|&a| std::cmp::Reverse(self.removable[a].len()));

        for a in candidates {
            let saved = self.push(a);
            match self.extend() {
                Step::Dead => self.pop(saved),
                other => return other,
            }
        }
        self.failed.insert(self.in_prefix.clone());
        Step::Dead
    }
}
