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

//! Bucklin.

use super::{Detail, RuleOutcome};
use crate::error::{Error, Result};
use crate::profile::{Profile, WeakOrder};

/// The depth at which a candidate first passes the majority post, and by how
/// many votes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BucklinScore {
    /// Smallest `l` with more than half the voters ranking the candidate in
    /// their top `l`. Lower is better.
    pub depth: usize,
    /// Number of voters ranking the candidate in their top `depth`.
    pub support: u64,
}

/// Candidates ordered by Bucklin depth, then by support at that depth
/// (larger first). Remaining ties stay in one tier.
pub fn bucklin(profile: &Profile) -> Result<RuleOutcome> {
    let n = profile.n();
    if n == 0 {
        return Err(Error::EmptyProfile { rule: "bucklin" });
    }
    let m = profile.m();
    // at_position[c][r]: voters placing c at position r
    let mut at_position = vec![vec![0u64; m]; m];
    for (ranking, k) in profile.votes() {
        for (r, &c) in ranking.order().iter().enumerate() {
            at_position[c][r] += k;
        }
    }
    let scores: Vec<BucklinScore> = at_position
        .iter()
        .map(|row| {
            let mut support = 0;
            for (r, count) in row.iter().enumerate() {
                support += count;
                if 2 * support > n {
                    return BucklinScore {
                        depth: r + 1,
                        support,
                    };
                }
            }
            unreachable!("every candidate is in every voter's top m")
        })
        .collect();
    let keys: Vec<(std::cmp::Reverse<usize>, u64)> = scores
        .iter()
        .map(|s| (std::cmp::Reverse(s.depth), s.support))
        .collect();
    Ok(RuleOutcome::from_weak(
        WeakOrder::from_scores(&keys),
        Detail::Bucklin(scores),
    ))
}
