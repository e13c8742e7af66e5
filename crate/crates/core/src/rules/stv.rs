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

//! Single transferable vote, producing a full ranking by elimination order.

use super::{Alternatives, Detail, RuleOutcome};
use crate::error::{Error, Result};
use crate::profile::{Profile, Ranking, WeakOrder};

/// Upper bound on the number of tie-break branches enumerated before the
/// outcome is reported as unresolved.
const MAX_BRANCHES: usize = 5040;

/// One elimination round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StvRound {
    /// First-preference counts of the candidates still standing.
    pub tallies: Vec<(usize, u64)>,
    pub eliminated: usize,
    /// Whether several candidates shared the lowest count.
    pub tied: bool,
}

/// First-preference counts among the candidates still standing; zero for
/// eliminated candidates.
fn tallies(profile: &Profile, standing: &[bool]) -> Vec<u64> {
    let mut counts = vec![0; profile.m()];
    for (ranking, k) in profile.votes() {
        if let Some(&c) = ranking.order().iter().find(|&&c| standing[c]) {
            counts[c] += k;
        }
    }
    counts
}

fn lowest(counts: &[u64], standing: &[bool]) -> Vec<usize> {
    let min = (0..counts.len())
        .filter(|&c| standing[c])
        .map(|c| counts[c])
        .min()
        .expect("at least one candidate standing");
    (0..counts.len())
        .filter(|&c| standing[c] && counts[c] == min)
        .collect()
}

/// Collects every ranking reachable by some choice among tied lowest
/// candidates. Returns false once more than `MAX_BRANCHES` are found.
fn explore(
    profile: &Profile,
    standing: &mut [bool],
    bottom: &mut Vec<usize>,
    out: &mut Vec<Ranking>,
) -> bool {
    let left = standing.iter().filter(|&&s| s).count();
    if left == 1 {
        let last = standing.iter().position(|&s| s).unwrap();
        let order = std::iter::once(last)
            .chain(bottom.iter().rev().copied())
            .collect();
        out.push(Ranking::new(order).expect("elimination order is a permutation"));
        return out.len() <= MAX_BRANCHES;
    }
    let counts = tallies(profile, standing);
    for c in lowest(&counts, standing) {
        standing[c] = false;
        bottom.push(c);
        let ok = explore(profile, standing, bottom, out);
        bottom.pop();
        standing[c] = true;
        if !ok {
            return false;
        }
    }
    true
}

/// STV over `m - 1` elimination rounds. The lowest first-preference count is
/// eliminated each round, lowest index first among ties; eliminated
/// candidates are ranked bottom-up in elimination order.
pub fn stv(profile: &Profile) -> Result<RuleOutcome> {
    if profile.n() == 0 {
        return Err(Error::EmptyProfile { rule: "stv" });
    }
    let m = profile.m();
    let mut standing = vec![true; m];
    let mut rounds = Vec::with_capacity(m.saturating_sub(1));
    let mut bottom = Vec::with_capacity(m);
    for _ in 1..m {
        let counts = tallies(profile, &standing);
        let lowest = lowest(&counts, &standing);
        let eliminated = lowest[0];
        rounds.push(StvRound {
            tallies: (0..m)
                .filter(|&c| standing[c])
                .map(|c| (c, counts[c]))
                .collect(),
            eliminated,
            tied: lowest.len() > 1,
        });
        standing[eliminated] = false;
        bottom.push(eliminated);
    }
    let last = standing.iter().position(|&s| s).unwrap();
    let order = std::iter::once(last)
        .chain(bottom.into_iter().rev())
        .collect();
    let strict = Ranking::new(order).expect("elimination order is a permutation");

    let alternatives = if rounds.iter().any(|r| r.tied) {
        let mut out = Vec::new();
        if explore(profile, &mut vec![true; m], &mut Vec::new(), &mut out) {
            out.sort();
            Alternatives::Listed(out)
        } else {
            Alternatives::Unresolved
        }
    } else {
        Alternatives::Listed(vec![strict.clone()])
    };

    Ok(RuleOutcome {
        weak: WeakOrder::from_ranking(&strict),
        winner: strict.top(),
        strict,
        alternatives,
        detail: Detail::Stv(rounds),
    })
}
