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

//! Voting rules.
//!
//! Every rule produces a [`RuleOutcome`]: a weak order that keeps score ties,
//! a strict ranking that breaks them by ascending candidate index, and the
//! set of outcomes reachable under any other tie-breaking.

mod bucklin;
mod hybrid;
mod kemeny;
mod pairwise;
mod scoring;
mod stv;

use std::fmt;

pub use bucklin::{bucklin, BucklinScore};
pub use hybrid::hybrid;
pub use kemeny::{kemeny, kemeny_with_bound, DEFAULT_ENUMERATION_BOUND};
pub use pairwise::{copeland, maximin, ranked_pairs, LockAction, LockStep};
pub use scoring::{scoring, ScoreVector, ScoringRule};
pub use stv::{stv, StvRound};

pub(crate) use kemeny::agreement as kemeny_agreement;
pub(crate) use scoring::scores as scoring_points;

use crate::error::{Error, Result};
use crate::outcome::{Outcome, OutcomeKind};
use crate::pairwise::PairwiseMatrix;
use crate::profile::{Profile, Ranking, WeakOrder};

/// The voting rules implemented by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Scoring(ScoringRule),
    Stv,
    Bucklin,
    Maximin,
    Copeland,
    RankedPairs,
    Kemeny,
    /// Winner from the first rule, remaining candidates ranked by the second
    /// on the profile with the winner deleted.
    Hybrid {
        winner: Box<Rule>,
        rest: Box<Rule>,
    },
}

impl Rule {
    pub fn hybrid(winner: Rule, rest: Rule) -> Rule {
        Rule::Hybrid {
            winner: Box::new(winner),
            rest: Box::new(rest),
        }
    }

    pub fn apply(&self, profile: &Profile) -> Result<RuleOutcome> {
        match self {
            Rule::Scoring(kind) => scoring(profile, &kind.vector(profile.m())?),
            Rule::Stv => stv(profile),
            Rule::Bucklin => bucklin(profile),
            Rule::Hybrid { winner, rest } => hybrid(profile, winner, rest),
            _ => self.apply_pairwise(&PairwiseMatrix::from_profile(profile)),
        }
    }

    /// Evaluates a rule that only looks at the pairwise tally.
    pub fn apply_pairwise(&self, matrix: &PairwiseMatrix) -> Result<RuleOutcome> {
        match self {
            Rule::Maximin => Ok(maximin(matrix)),
            Rule::Copeland => Ok(copeland(matrix)),
            Rule::RankedPairs => Ok(ranked_pairs(matrix)),
            Rule::Kemeny => kemeny::kemeny_outcome(matrix, DEFAULT_ENUMERATION_BOUND),
            Rule::Hybrid { winner, rest } => hybrid::hybrid_pairwise(matrix, winner, rest),
            _ => Err(Error::NotMarginDetermined(self.to_string())),
        }
    }

    /// Whether the rule's output is a function of the pairwise tally alone.
    pub fn is_pairwise(&self) -> bool {
        match self {
            Rule::Maximin | Rule::Copeland | Rule::RankedPairs | Rule::Kemeny => true,
            Rule::Hybrid { winner, rest } => winner.is_pairwise() && rest.is_pairwise(),
            _ => false,
        }
    }

    /// Whether the rule's strict output only counts as tie-free when every
    /// pairwise count is distinct.
    pub fn needs_distinct_counts(&self) -> bool {
        match self {
            Rule::RankedPairs => true,
            Rule::Hybrid { winner, rest } => {
                winner.needs_distinct_counts() || rest.needs_distinct_counts()
            }
            _ => false,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Rule::Scoring(kind) => write!(f, "{kind}"),
            Rule::Stv => f.write_str("stv"),
            Rule::Bucklin => f.write_str("bucklin"),
            Rule::Maximin => f.write_str("maximin"),
            Rule::Copeland => f.write_str("copeland"),
            Rule::RankedPairs => f.write_str("ranked-pairs"),
            Rule::Kemeny => f.write_str("kemeny"),
            Rule::Hybrid { winner, rest } => write!(f, "hybrid({winner},{rest})"),
        }
    }
}

/// Outcomes a rule could have produced under some other tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alternatives {
    /// Any linear extension of the outcome's weak order.
    Weak,
    /// Exactly these rankings.
    Listed(Vec<Ranking>),
    /// Not enumerated; every outcome is treated as possible.
    Unresolved,
}

/// Per-rule scores and traces, kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detail {
    Points(Vec<i64>),
    Bucklin(Vec<BucklinScore>),
    Stv(Vec<StvRound>),
    RankedPairs(Vec<LockStep>),
    Kemeny {
        agreement: u64,
    },
    Hybrid {
        winner: Box<RuleOutcome>,
        rest: Option<Box<RuleOutcome>>,
        /// Original indices of the candidates the second rule ranked.
        rest_candidates: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub weak: WeakOrder,
    /// `weak` with ties broken by ascending candidate index (or, for STV and
    /// ranked pairs, the ranking built with that tie-break).
    pub strict: Ranking,
    pub winner: usize,
    pub alternatives: Alternatives,
    pub detail: Detail,
}

impl RuleOutcome {
    /// Outcome built from a weak order and its index refinement.
    pub(crate) fn from_weak(weak: WeakOrder, detail: Detail) -> Self {
        let strict = weak.to_ranking();
        RuleOutcome {
            winner: strict.top(),
            weak,
            strict,
            alternatives: Alternatives::Weak,
            detail,
        }
    }

    /// The tie-broken outcome at the given level.
    pub fn outcome(&self, kind: OutcomeKind) -> Outcome {
        match kind {
            OutcomeKind::Winner => Outcome::Winner(self.winner),
            OutcomeKind::Ranking => Outcome::Ranking(self.strict.clone()),
        }
    }

    /// Whether every admissible tie-breaking gives the same outcome at the
    /// given level.
    pub fn is_determined(&self, kind: OutcomeKind) -> bool {
        match (&self.alternatives, kind) {
            (Alternatives::Weak, OutcomeKind::Winner) => self.weak.top_tier().len() == 1,
            (Alternatives::Weak, OutcomeKind::Ranking) => self.weak.is_strict(),
            (Alternatives::Listed(list), OutcomeKind::Winner) => {
                list.iter().all(|r| r.top() == list[0].top())
            }
            (Alternatives::Listed(list), OutcomeKind::Ranking) => list.len() == 1,
            (Alternatives::Unresolved, _) => false,
        }
    }

    /// Whether some admissible tie-breaking produces `outcome`.
    pub fn admits(&self, outcome: &Outcome) -> bool {
        match (&self.alternatives, outcome) {
            (Alternatives::Weak, Outcome::Winner(w)) => self.weak.top_tier().contains(w),
            (Alternatives::Weak, Outcome::Ranking(r)) => self.weak.admits(r),
            (Alternatives::Listed(list), Outcome::Winner(w)) => list.iter().any(|r| r.top() == *w),
            (Alternatives::Listed(list), Outcome::Ranking(r)) => list.contains(r),
            (Alternatives::Unresolved, _) => true,
        }
    }

    /// Every ranking the rule could output, when that set is known.
    pub fn admissible_rankings(&self) -> Option<Vec<Ranking>> {
        match &self.alternatives {
            Alternatives::Weak => Some(self.weak.linear_extensions()),
            Alternatives::Listed(list) => Some(list.clone()),
            Alternatives::Unresolved => None,
        }
    }
}
