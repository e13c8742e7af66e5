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

//! Voting rules, the noise models under which some of them are maximum
//! likelihood estimators, and tools for showing that others are not.
//!
//! Profiles are multisets of strict rankings over a fixed candidate set.
//! Rules map a profile to a [`WeakOrder`] plus a tie-broken winner and
//! ranking. Noise models assign exact likelihoods to outcomes, and the
//! [`mle`] module finds their argmax by enumeration. A rule that agrees on
//! two electorates but not on their union cannot be such an estimator;
//! [`consistency`] checks and searches for these pairs, and [`synth`] builds
//! profiles with prescribed pairwise margins.
//!
//! ```
//! use votemle::{parse_profile, OutcomeKind, Rule};
//!
//! let profile = parse_profile("candidates: a,b,c\n3: c>a>b\n4: a>b>c\n6: b>a>c\n").unwrap();
//! let outcome = Rule::Stv.apply(&profile).unwrap();
//! assert_eq!(outcome.winner, 0);
//! assert!(outcome.is_determined(OutcomeKind::Winner));
//! ```

pub mod consistency;
pub mod error;
pub mod format;
pub mod mle;
pub mod noise;
pub mod outcome;
pub mod pairwise;
pub mod profile;
pub mod rules;
pub mod sampling;
pub mod synth;

#[cfg(test)]
mod testing;

pub use consistency::{
    check_violation, known_violations, search_violation, SearchConfig, SearchOutcome,
    SearchStrategy, ViolationCertificate,
};
pub use error::{Error, Result};
pub use format::{parse_profile, render_profile};
pub use mle::{mle, mle_rankings, mle_winners, Equivalence, EquivalenceReport};
pub use noise::{CondorcetProbability, Likelihood, NoiseModel};
pub use outcome::{Outcome, OutcomeKind};
pub use pairwise::{margins, pairwise_matrix, MarginGraph, PairwiseMatrix};
pub use profile::{CandidateSet, Profile, Ranking, WeakOrder};
pub use rules::{Rule, RuleOutcome, ScoreVector, ScoringRule};
pub use sampling::ProfileBounds;
pub use synth::{parse_margin_file, realize_margin_graph, render_margin_file};
