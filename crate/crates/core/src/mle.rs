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

//! Maximum-likelihood estimation of the correct outcome by exhaustive
//! enumeration, and harnesses comparing estimators with voting rules.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::noise::{profile_likelihood, CondorcetProbability, Likelihood, NoiseModel};
use crate::outcome::{Outcome, OutcomeKind};
use crate::profile::{all_rankings, Profile, Ranking};
use crate::rules::{kemeny, scoring, stv, ScoringRule, DEFAULT_ENUMERATION_BOUND};
use crate::sampling::{random_bounded_profile, trial_rng, ProfileBounds};

/// All outcomes of maximal likelihood with their (shared) likelihood, in
/// enumeration order: candidates by index, rankings lexicographically.
pub fn mle(model: &NoiseModel, profile: &Profile) -> Result<Vec<(Outcome, Likelihood)>> {
    mle_with_bound(model, profile, DEFAULT_ENUMERATION_BOUND)
}

pub fn mle_with_bound(
    model: &NoiseModel,
    profile: &Profile,
    bound: usize,
) -> Result<Vec<(Outcome, Likelihood)>> {
    let m = profile.m();
    let outcomes: Box<dyn Iterator<Item = Outcome>> = match model.outcome_kind() {
        OutcomeKind::Winner => Box::new((0..m).map(Outcome::Winner)),
        OutcomeKind::Ranking => {
            if m > bound {
                return Err(Error::TooManyCandidates { m, bound });
            }
            Box::new(all_rankings(m).map(Outcome::Ranking))
        }
    };
    let mut best: Vec<(Outcome, Likelihood)> = Vec::new();
    for outcome in outcomes {
        let value = profile_likelihood(model, &outcome, profile)?;
        let ordering = best.first().map(|(_, top)| {
            value
                .partial_cmp(top)
                .expect("likelihoods of one model are comparable")
        });
        match ordering {
            None | Some(std::cmp::Ordering::Greater) => best = vec![(outcome, value)],
            Some(std::cmp::Ordering::Equal) => best.push((outcome, value)),
            Some(std::cmp::Ordering::Less) => {}
        }
    }
    Ok(best)
}

/// Every candidate maximizing the likelihood of being the correct winner.
pub fn mle_winners(model: &NoiseModel, profile: &Profile) -> Result<Vec<usize>> {
    if model.outcome_kind() != OutcomeKind::Winner {
        return Err(Error::IncompatibleOutcome);
    }
    Ok(mle(model, profile)?
        .into_iter()
        .map(|(o, _)| match o {
            Outcome::Winner(w) => w,
            Outcome::Ranking(_) => unreachable!(),
        })
        .collect())
}

/// Every ranking maximizing the likelihood of being the correct ranking.
pub fn mle_rankings(model: &NoiseModel, profile: &Profile) -> Result<Vec<Ranking>> {
    mle_rankings_with_bound(model, profile, DEFAULT_ENUMERATION_BOUND)
}

pub fn mle_rankings_with_bound(
    model: &NoiseModel,
    profile: &Profile,
    bound: usize,
) -> Result<Vec<Ranking>> {
    if model.outcome_kind() != OutcomeKind::Ranking {
        return Err(Error::IncompatibleOutcome);
    }
    Ok(mle_with_bound(model, profile, bound)?
        .into_iter()
        .map(|(o, _)| match o {
            Outcome::Ranking(r) => r,
            Outcome::Winner(_) => unreachable!(),
        })
        .collect())
}

/// A noise model paired with the voting rule predicted to be its estimator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// Winner estimate vs. the set of top-scoring candidates.
    ScoringWinner(ScoringRule),
    /// Ranking estimate vs. every ranking sorting candidates by score.
    ScoringRanking(ScoringRule),
    /// Lexicographic STV model vs. the STV ranking, on profiles whose
    /// eliminations are all tie-free.
    Stv,
    /// Condorcet model at each listed `p` vs. the Kemeny rankings.
    Kemeny(Vec<CondorcetProbability>),
}

/// Draws per trial before a tie-free STV profile is given up on.
const STV_REDRAWS: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquivalenceReport {
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    /// STV only: drawn profiles with a tied elimination, which were redrawn.
    pub tied: usize,
    /// STV only: how many tied profiles had an estimate set equal to the set
    /// of STV rankings over all tie-breaks. Recorded, never asserted.
    pub tied_matching_branches: usize,
    /// STV only: trials that never drew a tie-free profile.
    pub skipped: usize,
    /// Smallest failing trial index and its profile.
    pub first_failure: Option<(usize, Profile)>,
}

impl EquivalenceReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.skipped == 0 && self.passed == self.trials
    }
}

enum Trial {
    Pass,
    Fail(Profile),
    Skipped,
}

struct TrialResult {
    trial: Trial,
    tied: usize,
    tied_matching: usize,
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

impl Equivalence {
    /// Whether the estimator and the rule agree on `profile`. `None` when the
    /// profile is outside the comparison's domain (tied STV eliminations).
    pub fn agrees(&self, profile: &Profile) -> Result<Option<bool>> {
        Ok(Some(match self {
            Equivalence::ScoringWinner(rule) => {
                let outcome = scoring(profile, &rule.vector(profile.m())?)?;
                let winners = mle_winners(&NoiseModel::ScoringWinner(rule.clone()), profile)?;
                winners == outcome.weak.top_tier()
            }
            Equivalence::ScoringRanking(rule) => {
                let outcome = scoring(profile, &rule.vector(profile.m())?)?;
                let rankings = mle_rankings(&NoiseModel::ScoringRanking(rule.clone()), profile)?;
                rankings == sorted(outcome.weak.linear_extensions())
            }
            Equivalence::Stv => {
                let outcome = stv(profile)?;
                if !outcome.is_determined(OutcomeKind::Ranking) {
                    return Ok(None);
                }
                mle_rankings(&NoiseModel::StvLex, profile)? == vec![outcome.strict]
            }
            Equivalence::Kemeny(ps) => {
                let expected = kemeny(profile)?;
                let mut all = true;
                for p in ps {
                    all &= mle_rankings(&NoiseModel::Condorcet(p.clone()), profile)? == expected;
                }
                all
            }
        }))
    }

    fn run_trial(&self, bounds: &ProfileBounds, seed: u64, trial: u64) -> Result<TrialResult> {
        let mut rng = trial_rng(seed, trial);
        let mut tied = 0;
        let mut tied_matching = 0;
        let draws = if matches!(self, Equivalence::Stv) {
            STV_REDRAWS
        } else {
            1
        };
        for _ in 0..draws {
            let profile = random_bounded_profile(bounds, &mut rng);
            match self.agrees(&profile)? {
                Some(true) => {
                    return Ok(TrialResult {
                        trial: Trial::Pass,
                        tied,
                        tied_matching,
                    })
                }
                Some(false) => {
                    return Ok(TrialResult {
                        trial: Trial::Fail(profile),
                        tied,
                        tied_matching,
                    })
                }
                None => {
                    tied += 1;
                    let branches = stv(&profile)?.admissible_rankings();
                    let estimate = mle_rankings(&NoiseModel::StvLex, &profile)?;
                    if branches == Some(estimate) {
                        tied_matching += 1;
                    }
                }
            }
        }
        Ok(TrialResult {
            trial: Trial::Skipped,
            tied,
            tied_matching,
        })
    }

    /// Runs `trials` seeded random profiles through [`Equivalence::agrees`].
    /// Trials run in parallel; the report is identical to a sequential run.
    pub fn report(
        &self,
        trials: usize,
        bounds: &ProfileBounds,
        seed: u64,
    ) -> Result<EquivalenceReport> {
        if matches!(self, Equivalence::Stv) && bounds.min_votes == 0 {
            return Err(Error::InvalidBounds("STV needs at least one vote".into()));
        }
        let results: Vec<TrialResult> = (0..trials as u64)
            .into_par_iter()
            .map(|t| self.run_trial(bounds, seed, t))
            .collect::<Result<_>>()?;
        let mut report = EquivalenceReport {
            trials,
            ..Default::default()
        };
        for (index, result) in results.into_iter().enumerate() {
            report.tied += result.tied;
            report.tied_matching_branches += result.tied_matching;
            match result.trial {
                Trial::Pass => report.passed += 1,
                Trial::Skipped => report.skipped += 1,
                Trial::Fail(profile) => {
                    report.failed += 1;
                    if report.first_failure.is_none() {
                        report.first_failure = Some((index, profile));
                    }
                }
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::testing::*;

    fn p35() -> CondorcetProbability {
        CondorcetProbability::from_ratio(3, 5).unwrap()
    }

    #[test]
    fn plurality_winner_example_v1() {
        let p = profile(STV_V1);
        let model = NoiseModel::ScoringWinner(ScoringRule::Plurality);
        assert_eq!(mle_winners(&model, &p).unwrap(), vec![1]);
    }

    #[test]
    fn winner_ties_are_kept() {
        let p = profile("candidates: a,b\n1: a>b\n1: b>a");
        let model = NoiseModel::ScoringWinner(ScoringRule::Plurality);
        assert_eq!(mle_winners(&model, &p).unwrap(), vec![0, 1]);
    }

    #[test]
    fn unanimous_winner() {
        let p = profile("candidates: a,b,c,d\n3: c>d>a>b");
        let model = NoiseModel::ScoringWinner(ScoringRule::Veto);
        // veto leaves a and c and d tied at three points each
        assert_eq!(mle_winners(&model, &p).unwrap(), vec![0, 2, 3]);
        let model = NoiseModel::ScoringWinner(ScoringRule::Borda);
        assert_eq!(mle_winners(&model, &p).unwrap(), vec![2]);
    }

    #[test]
    fn stv_lex_example_v1() {
        let p = profile(STV_V1);
        let rankings = mle_rankings(&NoiseModel::StvLex, &p).unwrap();
        assert_eq!(rankings, vec![ranking(&p, "a>b>c")]);
        assert_eq!(rankings[0], stv(&p).unwrap().strict);
    }

    #[test]
    fn condorcet_examples() {
        let single = profile("candidates: a,b,c,d\n1: d>b>a>c");
        let model = NoiseModel::Condorcet(CondorcetProbability::from_ratio(2, 3).unwrap());
        assert_eq!(
            mle_rankings(&model, &single).unwrap(),
            vec![ranking(&single, "d>b>a>c")]
        );

        let p = profile("candidates: a,b,c\n2: a>b>c\n1: b>c>a");
        assert_eq!(
            mle_rankings(&model, &p).unwrap(),
            vec![ranking(&p, "a>b>c")]
        );
        assert_eq!(mle_rankings(&model, &p).unwrap(), kemeny(&p).unwrap());

        let cycle = profile(CYCLE3);
        assert_eq!(mle_rankings(&model, &cycle).unwrap().len(), 3);
    }

    #[test]
    fn incompatible_models() {
        let p = profile(STV_V1);
        assert_eq!(
            mle_winners(&NoiseModel::StvLex, &p),
            Err(Error::IncompatibleOutcome)
        );
        let model = NoiseModel::ScoringWinner(ScoringRule::Borda);
        assert_eq!(mle_rankings(&model, &p), Err(Error::IncompatibleOutcome));
        assert!(mle_rankings_with_bound(&NoiseModel::StvLex, &p, 2).is_err());
    }

    #[test]
    fn zero_trials() {
        let bounds = ProfileBounds::new((2, 5), (1, 7)).unwrap();
        let report = Equivalence::ScoringWinner(ScoringRule::Borda)
            .report(0, &bounds, 1)
            .unwrap();
        assert_eq!(report, EquivalenceReport::default());
        assert!(report.all_passed());
    }

    #[test]
    fn borda_winner_report() {
        let bounds = ProfileBounds::new((2, 5), (1, 7)).unwrap();
        let report = Equivalence::ScoringWinner(ScoringRule::Borda)
            .report(200, &bounds, 3)
            .unwrap();
        assert_eq!(report.passed, 200);
        assert!(report.all_passed());
    }

    #[test]
    fn kemeny_report() {
        let bounds = ProfileBounds::new((2, 4), (1, 7)).unwrap();
        let report = Equivalence::Kemeny(vec![p35()])
            .report(100, &bounds, 5)
            .unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn report_is_deterministic() {
        let bounds = ProfileBounds::new((2, 4), (1, 5)).unwrap();
        let a = Equivalence::Stv.report(50, &bounds, 11).unwrap();
        let b = Equivalence::Stv.report(50, &bounds, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.all_passed());
        assert!(a.tied > 0);
    }

    #[test]
    fn mismatched_rule_disagrees() {
        // sanity check on the harness's sensitivity: plurality's estimator is
        // not Borda
        let bounds = ProfileBounds::new((3, 4), (2, 6)).unwrap();
        let mut failures = 0;
        for t in 0..200 {
            let p = random_bounded_profile(&bounds, &mut trial_rng(1, t));
            let borda = scoring(&p, &ScoringRule::Borda.vector(p.m()).unwrap()).unwrap();
            let plurality =
                mle_winners(&NoiseModel::ScoringWinner(ScoringRule::Plurality), &p).unwrap();
            if plurality != borda.weak.top_tier() {
                failures += 1;
            }
        }
        assert!(failures > 0);
    }

    proptest! {
        #[test]
        fn scaling_keeps_argmax(p in arb_profile(4, 5), k in 2u64..=4) {
            let scaled = p.scaled(k).unwrap();
            let models = [
                NoiseModel::ScoringRanking(ScoringRule::Borda),
                NoiseModel::StvLex,
                NoiseModel::Condorcet(p35()),
            ];
            for model in models {
                prop_assert_eq!(mle_rankings(&model, &p).unwrap(), mle_rankings(&model, &scaled).unwrap());
            }
            let model = NoiseModel::ScoringWinner(ScoringRule::Plurality);
            prop_assert_eq!(mle_winners(&model, &p).unwrap(), mle_winners(&model, &scaled).unwrap());
        }

        #[test]
        fn condorcet_estimate_is_independent_of_p(p in arb_profile(4, 5)) {
            let a = mle_rankings(&NoiseModel::Condorcet(p35()), &p).unwrap();
            let b = mle_rankings(&NoiseModel::Condorcet(CondorcetProbability::from_ratio(99, 100).unwrap()), &p).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a, kemeny(&p).unwrap());
        }
    }
}
