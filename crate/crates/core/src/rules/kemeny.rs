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

//! Kemeny rank aggregation by exhaustive enumeration.

use super::{Alternatives, Detail, RuleOutcome};
use crate::error::{Error, Result};
use crate::pairwise::PairwiseMatrix;
use crate::profile::{all_rankings, Profile, Ranking, WeakOrder};

/// Largest candidate count for which `m!` rankings are enumerated.
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// Total pairwise agreement `sum N(a, b)` over pairs with `a` above `b`.
pub(crate) fn agreement(matrix: &PairwiseMatrix, ranking: &Ranking) -> u64 {
    let order = ranking.order();
    let mut total = 0;
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            total += matrix.count(a, b);
        }
    }
    total
}

fn optimal_rankings(matrix: &PairwiseMatrix, bound: usize) -> Result<(u64, Vec<Ranking>)> {
    let m = matrix.m();
    if m > bound {
        return Err(Error::TooManyCandidates { m, bound });
    }
    let mut best = 0;
    let mut optima = Vec::new();
    for ranking in all_rankings(m) {
        let score = agreement(matrix, &ranking);
        if optima.is_empty() || score > best {
            best = score;
            optima.clear();
            optima.push(ranking);
        } else if score == best {
            optima.push(ranking);
        }
    }
    Ok((best, optima))
}

/// All rankings with maximal total pairwise agreement, in lexicographic order.
pub fn kemeny(profile: &Profile) -> Result<Vec<Ranking>> {
    kemeny_with_bound(profile, DEFAULT_ENUMERATION_BOUND)
}

pub fn kemeny_with_bound(profile: &Profile, bound: usize) -> Result<Vec<Ranking>> {
    optimal_rankings(&PairwiseMatrix::from_profile(profile), bound).map(|(_, optima)| optima)
}

/// The finest weak order of which every ranking in `rankings` is a linear
/// extension: each candidate spans the interval of positions it takes, and
/// overlapping intervals share a tier.
fn covering_weak_order(rankings: &[Ranking], m: usize) -> WeakOrder {
    let mut span = vec![(usize::MAX, 0usize); m];
    for ranking in rankings {
        for (pos, &c) in ranking.order().iter().enumerate() {
            span[c].0 = span[c].0.min(pos);
            span[c].1 = span[c].1.max(pos);
        }
    }
    let mut by_start: Vec<usize> = (0..m).collect();
    by_start.sort_by_key(|&c| (span[c].0, c));
    let mut tiers: Vec<Vec<usize>> = Vec::new();
    let mut reach = 0;
    for c in by_start {
        match tiers.last_mut() {
            Some(tier) if span[c].0 <= reach => tier.push(c),
            _ => tiers.push(vec![c]),
        }
        reach = reach.max(span[c].1);
    }
    WeakOrder::new(tiers, m).expect("intervals cover every candidate once")
}

pub(crate) fn kemeny_outcome(matrix: &PairwiseMatrix, bound: usize) -> Result<RuleOutcome> {
    let (agreement, optima) = optimal_rankings(matrix, bound)?;
    let strict = optima[0].clone();
    Ok(RuleOutcome {
        weak: covering_weak_order(&optima, matrix.m()),
        winner: strict.top(),
        strict,
        alternatives: Alternatives::Listed(optima),
        detail: Detail::Kemeny { agreement },
    })
}
