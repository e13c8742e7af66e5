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

//! Hybrid rule: one rule picks the winner, another ranks the rest.

use super::{Alternatives, Detail, Rule, RuleOutcome};
use crate::error::Result;
use crate::outcome::OutcomeKind;
use crate::pairwise::PairwiseMatrix;
use crate::profile::{Ranking, WeakOrder};

/// Stitches the winner rule's output and the rest rule's output (over the
/// candidates in `keep`) into one outcome.
fn combine(
    first: RuleOutcome,
    rest: Option<RuleOutcome>,
    keep: Vec<usize>,
    m: usize,
) -> RuleOutcome {
    let w = first.winner;
    let Some(rest) = rest else {
        // single candidate
        return RuleOutcome {
            weak: first.weak.clone(),
            strict: first.strict.clone(),
            winner: w,
            alternatives: first.alternatives.clone(),
            detail: Detail::Hybrid {
                winner: Box::new(first),
                rest: None,
                rest_candidates: keep,
            },
        };
    };

    let lift = |r: &Ranking| -> Ranking {
        let order = std::iter::once(w)
            .chain(r.order().iter().map(|&i| keep[i]))
            .collect();
        Ranking::new(order).expect("winner plus the remaining candidates")
    };
    let strict = lift(&rest.strict);
    let determined = first.is_determined(OutcomeKind::Winner);
    let weak = if determined {
        let tiers = std::iter::once(vec![w])
            .chain(
                rest.weak
                    .tiers()
                    .iter()
                    .map(|t| t.iter().map(|&i| keep[i]).collect()),
            )
            .collect();
        WeakOrder::new(tiers, m).expect("winner plus the remaining tiers")
    } else {
        WeakOrder::new(vec![(0..m).collect()], m).unwrap()
    };
    let alternatives = match (&rest.alternatives, determined) {
        (_, false) => Alternatives::Unresolved,
        (Alternatives::Weak, true) => Alternatives::Weak,
        (Alternatives::Listed(list), true) => Alternatives::Listed(list.iter().map(lift).collect()),
        (Alternatives::Unresolved, true) => Alternatives::Unresolved,
    };
    RuleOutcome {
        weak,
        strict,
        winner: w,
        alternatives,
        detail: Detail::Hybrid {
            winner: Box::new(first),
            rest: Some(Box::new(rest)),
            rest_candidates: keep,
        },
    }
}

fn others(m: usize, w: usize) -> Vec<usize> {
    (0..m).filter(|&c| c != w).collect()
}

/// Winner chosen by `winner_rule`; the remaining candidates ranked by
/// `rest_rule` on the profile with the winner deleted from every vote.
///
/// When the winner rule's top tier is tied, the weak order collapses to a
/// single tier and the alternatives are left unresolved.
pub fn hybrid(
    profile: &crate::profile::Profile,
    winner_rule: &Rule,
    rest_rule: &Rule,
) -> Result<RuleOutcome> {
    let first = winner_rule.apply(profile)?;
    let m = profile.m();
    let keep = others(m, first.winner);
    let rest = if keep.is_empty() {
        None
    } else {
        Some(rest_rule.apply(&profile.restrict(&keep))?)
    };
    Ok(combine(first, rest, keep, m))
}

pub(crate) fn hybrid_pairwise(
    matrix: &PairwiseMatrix,
    winner_rule: &Rule,
    rest_rule: &Rule,
) -> Result<RuleOutcome> {
    let first = winner_rule.apply_pairwise(matrix)?;
    let m = matrix.m();
    let keep = others(m, first.winner);
    let rest = if keep.is_empty() {
        None
    } else {
        Some(rest_rule.apply_pairwise(&matrix.restrict(&keep))?)
    };
    Ok(combine(first, rest, keep, m))
}
