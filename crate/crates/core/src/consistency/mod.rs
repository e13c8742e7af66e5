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

//! Consistency (reinforcement) violations: two electorates on which a rule
//! agrees, whose union it decides differently. Every maximum-likelihood
//! rule under i.i.d. votes is consistent, so such a pair shows a rule is not
//! one.

mod fixtures;
mod search;

use std::fmt::Write;

pub use fixtures::{known_violations, Expected, Fixture};
pub use search::{search_violation, SearchConfig, SearchOutcome, SearchStrategy};

use crate::error::{Error, Result};
use crate::format::render_profile;
use crate::outcome::{Outcome, OutcomeKind};
use crate::profile::Profile;
use crate::rules::Rule;

/// Verified violation: the rule's outcome on `v1` and `v2` is the same and
/// tie-free, and no tie-breaking yields it on `v1 + v2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationCertificate {
    pub rule: Rule,
    pub kind: OutcomeKind,
    pub v1: Profile,
    pub v2: Profile,
    pub outcome_v1: Outcome,
    pub outcome_v2: Outcome,
    /// Tie-broken outcome on the union.
    pub outcome_combined: Outcome,
    /// `v1` determined, `v2` determined, union excludes the common outcome.
    pub strictness: [bool; 3],
    /// Whether the union's outcome is itself free of ties.
    pub combined_determined: bool,
}

impl ViolationCertificate {
    /// Re-runs [`check_violation`] on the stored profiles.
    pub fn verify(&self) -> Result<bool> {
        Ok(check_violation(&self.rule, self.kind, &self.v1, &self.v2)?.as_ref() == Some(self))
    }

    /// Outcome summary followed by both profiles in ballot format.
    pub fn render(&self) -> String {
        let c = self.v1.candidates();
        let mut out = String::new();
        writeln!(out, "violation: {} ({})", self.rule, self.kind).unwrap();
        writeln!(out, "V1 outcome: {}", self.outcome_v1.display(c)).unwrap();
        writeln!(out, "V2 outcome: {}", self.outcome_v2.display(c)).unwrap();
        let note = if self.combined_determined {
            ""
        } else {
            " (tied; no tie-break recovers the V1/V2 outcome)"
        };
        writeln!(
            out,
            "V1+V2 outcome: {}{note}",
            self.outcome_combined.display(c)
        )
        .unwrap();
        writeln!(out, "--- V1 ({} votes) ---", self.v1.n()).unwrap();
        out.push_str(&render_profile(&self.v1));
        writeln!(out, "--- V2 ({} votes) ---", self.v2.n()).unwrap();
        out.push_str(&render_profile(&self.v2));
        out
    }
}

/// Applies `rule` to `v1`, `v2` and their union and returns a certificate
/// iff the first two agree at level `kind` with no ties and the union's
/// outcome differs from theirs under every admissible tie-breaking.
pub fn check_violation(
    rule: &Rule,
    kind: OutcomeKind,
    v1: &Profile,
    v2: &Profile,
) -> Result<Option<ViolationCertificate>> {
    if v1.candidates() != v2.candidates() {
        return Err(Error::CandidateMismatch);
    }
    let first = rule.apply(v1)?;
    let second = rule.apply(v2)?;
    let combined = rule.apply(&v1.union(v2)?)?;
    let outcome_v1 = first.outcome(kind);
    let outcome_v2 = second.outcome(kind);
    let strictness = [
        first.is_determined(kind),
        second.is_determined(kind),
        !combined.admits(&outcome_v1),
    ];
    if outcome_v1 != outcome_v2 || !strictness.iter().all(|&s| s) {
        return Ok(None);
    }
    Ok(Some(ViolationCertificate {
        rule: rule.clone(),
        kind,
        v1: v1.clone(),
        v2: v2.clone(),
        outcome_v1,
        outcome_v2,
        outcome_combined: combined.outcome(kind),
        strictness,
        combined_determined: combined.is_determined(kind),
    }))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::profile::CandidateSet;
    use crate::rules::ScoringRule;
    use crate::testing::*;

    #[test]
    fn bucklin_example() {
        let (v1, v2) = (profile(BUCKLIN_V1), profile(BUCKLIN_V2));
        let cert = check_violation(&Rule::Bucklin, OutcomeKind::Ranking, &v1, &v2)
            .unwrap()
            .expect("violation");
        assert_eq!(cert.outcome_v1, Outcome::Ranking(ranking(&v1, "a>b>c>d>e")));
        assert_eq!(
            cert.outcome_combined,
            Outcome::Ranking(ranking(&v1, "b>a>c>d>e"))
        );
        assert!(cert.combined_determined);
        assert!(cert.verify().unwrap());
        // and at the winner level, a vs b
        let cert = check_violation(&Rule::Bucklin, OutcomeKind::Winner, &v1, &v2)
            .unwrap()
            .unwrap();
        assert_eq!(
            (cert.outcome_v1, cert.outcome_combined),
            (Outcome::Winner(0), Outcome::Winner(1))
        );
    }

    #[test]
    fn stv_example_winner() {
        let (v1, v2) = (profile(STV_V1), profile(STV_V2));
        let cert = check_violation(&Rule::Stv, OutcomeKind::Winner, &v1, &v2)
            .unwrap()
            .unwrap();
        assert_eq!(cert.outcome_v1, Outcome::Winner(0));
        assert_eq!(cert.outcome_v2, Outcome::Winner(0));
        assert_ne!(cert.outcome_combined, Outcome::Winner(0));
        assert!(!cert.combined_determined);
        assert_eq!(cert.strictness, [true; 3]);
    }

    #[test]
    fn stv_example_ranking_is_not_a_violation() {
        let (v1, v2) = (profile(STV_V1), profile(STV_V2));
        assert_eq!(
            check_violation(&Rule::Stv, OutcomeKind::Ranking, &v1, &v2).unwrap(),
            None
        );
    }

    #[test]
    fn doubling_is_never_a_violation() {
        let v = profile(STV_V1);
        let borda = Rule::Scoring(ScoringRule::Borda);
        assert_eq!(
            check_violation(&borda, OutcomeKind::Ranking, &v, &v).unwrap(),
            None
        );
    }

    #[test]
    fn candidate_mismatch() {
        let v1 = profile(STV_V1);
        let v2 = Profile::new(CandidateSet::new(["x", "y", "z"]).unwrap());
        assert_eq!(
            check_violation(&Rule::Copeland, OutcomeKind::Winner, &v1, &v2),
            Err(Error::CandidateMismatch)
        );
    }

    #[test]
    fn ties_block_certificates() {
        // plurality ties a and b on V1; V2 has a clear winner
        let v1 = profile("candidates: a,b,c\n1: a>b>c\n1: b>a>c");
        let v2 = profile("candidates: a,b,c\n1: c>a>b");
        let plurality = Rule::Scoring(ScoringRule::Plurality);
        assert_eq!(
            check_violation(&plurality, OutcomeKind::Winner, &v1, &v2).unwrap(),
            None
        );
    }

    #[test]
    fn render_lists_both_profiles() {
        let (v1, v2) = (profile(BUCKLIN_V1), profile(BUCKLIN_V2));
        let cert = check_violation(&Rule::Bucklin, OutcomeKind::Ranking, &v1, &v2)
            .unwrap()
            .unwrap();
        let text = cert.render();
        assert!(text.starts_with("violation: bucklin (ranking)\nV1 outcome: a>b>c>d>e\n"));
        assert!(text
            .contains("V1+V2 outcome: b>a>c>d>e\n--- V1 (3 votes) ---\ncandidates: a,b,c,d,e\n"));
    }

    proptest! {
        // Scoring rules and STV at ranking level are consistent, so random
        // pairs never yield a certificate.
        #[test]
        fn consistent_rules_yield_nothing((v1, v2) in arb_profile_pair(2, 4, 5)) {
            prop_assume!(v1.n() > 0 && v2.n() > 0);
            for rule in [Rule::Scoring(ScoringRule::Borda), Rule::Scoring(ScoringRule::Plurality), Rule::Kemeny] {
                for kind in [OutcomeKind::Winner, OutcomeKind::Ranking] {
                    prop_assert_eq!(check_violation(&rule, kind, &v1, &v2).unwrap(), None);
                }
            }
            prop_assert_eq!(check_violation(&Rule::Stv, OutcomeKind::Ranking, &v1, &v2).unwrap(), None);
        }

        #[test]
        fn certificates_are_sound((v1, v2) in arb_profile_pair(3, 4, 6)) {
            prop_assume!(v1.n() > 0 && v2.n() > 0);
            for rule in [Rule::Bucklin, Rule::Stv, Rule::Maximin, Rule::Copeland, Rule::RankedPairs] {
                for kind in [OutcomeKind::Winner, OutcomeKind::Ranking] {
                    if let Some(cert) = check_violation(&rule, kind, &v1, &v2).unwrap() {
                        prop_assert!(cert.verify().unwrap());
                        prop_assert_eq!(&cert.outcome_v1, &cert.outcome_v2);
                        prop_assert_ne!(&cert.outcome_v1, &cert.outcome_combined);
                    }
                }
            }
        }
    }
}
