// Copyright 2026 The votemle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Rules computed from the pairwise tally alone.

use super::{Alternatives, Detail, RuleOutcome};
use crate::pairwise::PairwiseMatrix;
use crate::profile::{Ranking, WeakOrder};

/// Maximin: a candidate's score is its worst pairwise count `min N(c, c')`.
pub fn maximin(matrix: &PairwiseMatrix) -> RuleOutcome {
    let m = matrix.m();
    let scores: Vec<i64> = (0..m)
        .map(|c| {
            (0..m)
                .filter(|&d| d != c)
                .map(|d| matrix.count(c, d))
                .min()
                .unwrap_or(matrix.n()) as i64
        })
        .collect();
    RuleOutcome::from_weak(WeakOrder::from_scores(&scores), Detail::Points(scores))
}

/// Copeland: pairwise wins minus pairwise losses.
pub fn copeland(matrix: &PairwiseMatrix) -> RuleOutcome {
    let m = matrix.m();
    let scores: Vec<i64> = (0..m)
        .map(|c| {
            (0..m)
                .filter(|&d| d != c)
                .map(|d| match matrix.count(c, d).cmp(&matrix.count(d, c)) {
                    std::cmp::Ordering::Greater => 1,
                    std::cmp::Ordering::Less => -1,
                    std::cmp::Ordering::Equal => 0,
                })
                .sum()
        })
        .collect();
    RuleOutcome::from_weak(WeakOrder::from_scores(&scores), Detail::Points(scores))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LockAction {
    /// Locked in as new information.
    Locked,
    /// Already implied by earlier locks.
    Implied,
    /// Contradicts earlier locks.
    Skipped,
}

/// One ordered pair considered by ranked pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LockStep {
    pub winner: usize,
    pub loser: usize,
    pub count: u64,
    pub action: LockAction,
}

/// Whether all off-diagonal counts are pairwise distinct, in which case the
/// lock order does not depend on how equal counts are ordered.
pub(crate) fn counts_distinct(matrix: &PairwiseMatrix) -> bool {
    let m = matrix.m();
    let mut counts: Vec<u64> = (0..m)
        .flat_map(|a| (0..m).filter(move |&b| b != a).map(move |b| (a, b)))
        .map(|(a, b)| matrix.count(a, b))
        .collect();
    counts.sort_unstable();
    counts.windows(2).all(|w| w[0] != w[1])
}

/// Ranked pairs. Ordered pairs are taken by descending `N(a, b)`, equal
/// counts by ascending `(a, b)`; each is locked unless it would close a cycle.
///
/// The trace records pairs with `N(a, b) >= N(b, a)`; the others can only be
/// skipped or implied. The outcome is reported as unresolved unless all
/// counts are distinct.
pub fn ranked_pairs(matrix: &PairwiseMatrix) -> RuleOutcome {
    let m = matrix.m();
    let mut pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..m).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    pairs.sort_by_key(|&(a, b)| (std::cmp::Reverse(matrix.count(a, b)), a, b));

    // above[x][y]: x is locked above y, directly or transitively.
    let mut above = vec![vec![false; m]; m];
    let mut steps = Vec::new();
    for (a, b) in pairs {
        let action = if above[a][b] {
            LockAction::Implied
        } else if above[b][a] {
            LockAction::Skipped
        } else {
            let below_b: Vec<bool> = (0..m).map(|y| y == b || above[b][y]).collect();
            for (x, row) in above.iter_mut().enumerate() {
                if x != a && !row[a] {
                    continue;
                }
                for (cell, &reach) in row.iter_mut().zip(&below_b) {
                    *cell |= reach;
                }
            }
            LockAction::Locked
        };
        if matrix.count(a, b) >= matrix.count(b, a) {
            steps.push(LockStep {
                winner: a,
                loser: b,
                count: matrix.count(a, b),
                action,
            });
        }
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&c| std::cmp::Reverse(above[c].iter().filter(|&&x| x).count()));
    let strict = Ranking::new(order).expect("locked relation is a total order");
    let alternatives = if counts_distinct(matrix) {
        Alternatives::Listed(vec![strict.clone()])
    } else {
        Alternatives::Unresolved
    };
    RuleOutcome {
        weak: WeakOrder::from_ranking(&strict),
        winner: strict.top(),
        strict,
        alternatives,
        detail: Detail::RankedPairs(steps),
    }
}
