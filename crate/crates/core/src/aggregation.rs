//! Weighted-voting aggregation of criteria into choice functions.
//!
//! Binary criteria with strictly ordered categories aggregate into score
//! maximization, which is rational by construction; finer criteria can
//! produce majority cycles, which the tournament search exhibits.

use std::collections::VecDeque;

use num::{BigRational, Signed, Zero};

use crate::choice::ChoiceFunction;
use crate::criteria::CriteriaSet;
use crate::domain::{Domain, LabelId};
use crate::error::{Error, Result};

/// Strictly positive per-criterion weights.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightProfile(Vec<BigRational>);

impl WeightProfile {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        for (i, w) in weights.iter().enumerate() {
            if !w.is_positive() {
                return Err(Error::NonPositiveWeight(i));
            }
        }
        Ok(WeightProfile(weights))
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Pairwise weighted margins: `margin(x, y) = sum_i w_i * sigma_i(x, y)`
/// where `sigma_i` is the sign of criterion i's category order between the
/// categories of `x` and `y` (0 within a category or when unrelated).
#[derive(Clone, Debug, PartialEq)]
pub struct Tournament {
    domain: Domain,
    margins: Vec<Vec<BigRational>>,
}

impl Tournament {
    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn margin(&self, x: LabelId, y: LabelId) -> &BigRational {
        &self.margins[x][y]
    }

    /// Strictly positive margin of `x` over `y`.
    pub fn beats(&self, x: LabelId, y: LabelId) -> bool {
        self.margins[x][y].is_positive()
    }
}

/// Build the weighted pairwise tournament of a criteria set.
#[allow(clippy::needless_range_loop)]
pub fn weighted_tournament(cs: &CriteriaSet, w: &WeightProfile) -> Result<Tournament> {
    if w.len() != cs.len() {
        return Err(Error::WeightCountMismatch {
            weights: w.len(),
            criteria: cs.len(),
        });
    }
    let n = cs.domain().len();
    let mut margins = vec![vec![BigRational::zero(); n]; n];
    for x in 0..n {
        for y in (x + 1)..n {
            let mut m = BigRational::zero();
            for (c, weight) in cs.criteria().iter().zip(w.weights()) {
                let cx = c.category_of(x);
                let cy = c.category_of(y);
                if cx == cy {
                    continue;
                }
                if c.structure().dominates(cx, cy) {
                    m += weight;
                } else if c.structure().dominates(cy, cx) {
                    m -= weight;
                }
            }
            margins[y][x] = -&m;
            margins[x][y] = m;
        }
    }
    Ok(Tournament {
        domain: cs.domain().clone(),
        margins,
    })
}

/// Score of each alternative: the total weight of criteria placing it in
/// their top category.
///
/// Every criterion must have exactly two categories, strictly ordered.
pub fn aggregate_scores(cs: &CriteriaSet, w: &WeightProfile) -> Result<Vec<BigRational>> {
    if w.len() != cs.len() {
        return Err(Error::WeightCountMismatch {
            weights: w.len(),
            criteria: cs.len(),
        });
    }
    let mut top = Vec::with_capacity(cs.len());
    for (index, c) in cs.criteria().iter().enumerate() {
        if c.category_count() != 2 {
            return Err(Error::NonBinaryCriterion {
                index,
                categories: c.category_count(),
            });
        }
        let st = c.structure();
        if st.dominates(0, 1) {
            top.push(0);
        } else if st.dominates(1, 0) {
            top.push(1);
        } else {
            return Err(Error::UnorderedBinaryCriterion { index });
        }
    }
    Ok(cs
        .domain()
        .ids()
        .map(|id| {
            cs.criteria()
                .iter()
                .zip(w.weights())
                .zip(&top)
                .filter(|((c, _), &t)| c.category_of(id) == t)
                .map(|((_, weight), _)| weight)
                .sum()
        })
        .collect())
}

/// Condorcet-rule aggregation of all-binary criteria: `c(A)` keeps the
/// maximum-score members of `A`.
///
/// Pairwise choices agree with the tournament margin sign, and the result
/// maximizes the score weak order, so it is rational by construction.
pub fn aggregate_choice(cs: &CriteriaSet, w: &WeightProfile) -> Result<ChoiceFunction> {
    let scores = aggregate_scores(cs, w)?;
    // dense ranks, best score first
    let mut distinct: Vec<&BigRational> = scores.iter().collect();
    distinct.sort();
    distinct.dedup();
    let ranks = scores
        .iter()
        .map(|s| {
            let pos = distinct.binary_search(&s).expect("score present");
            (distinct.len() - 1 - pos) as u64
        })
        .collect();
    ChoiceFunction::from_ranks(cs.domain().clone(), ranks)
}

/// Shortest cycle of strictly positive margins, if any.
///
/// Breadth-first search from every start vertex; among shortest cycles the
/// lexicographically least (rotated to its smallest label id) is returned.
pub fn find_condorcet_cycle(t: &Tournament) -> Option<Vec<LabelId>> {
    let n = t.domain().len();
    let mut best: Option<Vec<LabelId>> = None;
    for start in 0..n {
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        let mut closing: Option<usize> = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !t.beats(u, v) {
                    continue;
                }
                if v == start {
                    closing = Some(u);
                    break 'bfs;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if let Some(mut u) = closing {
            let mut cycle = Vec::new();
            while u != start {
                cycle.push(u);
                u = parent[u];
            }
            cycle.push(start);
            cycle.reverse();
            let rotated = rotate_to_min(cycle);
            let better = match &best {
                None => true,
                Some(b) => rotated.len() < b.len() || (rotated.len() == b.len() && rotated < *b),
            };
            if better {
                best = Some(rotated);
            }
        }
    }
    best
}

fn rotate_to_min(cycle: Vec<LabelId>) -> Vec<LabelId> {
    let pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .expect("cycle is nonempty");
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[pos..]);
    out.extend_from_slice(&cycle[..pos]);
    out
}
