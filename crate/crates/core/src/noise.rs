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

//! Noise models: conditional distributions of a single vote given the
//! correct outcome, evaluated exactly.
//!
//! Weights are unnormalized ("proportional to"); [`normalizer`] gives the
//! constant for the exact-valued models. Votes are i.i.d. given the outcome,
//! so a profile's likelihood is the product of its votes' weights.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::outcome::{Outcome, OutcomeKind};
use crate::pairwise::PairwiseMatrix;
use crate::profile::{all_rankings, Profile, Ranking};
use crate::rules::{ScoringRule, DEFAULT_ENUMERATION_BOUND};

/// A probability strictly between 1/2 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CondorcetProbability(BigRational);

impl CondorcetProbability {
    pub fn new(p: BigRational) -> Result<Self> {
        let half = BigRational::new(1.into(), 2.into());
        if p > half && p < BigRational::one() {
            Ok(CondorcetProbability(p))
        } else {
            Err(Error::InvalidProbability(format_rational(&p)))
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidProbability(format!("{numer}/{denom}")));
        }
        Self::new(BigRational::new(numer.into(), denom.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl FromStr for CondorcetProbability {
    type Err = Error;

    /// Accepts `num/den` or an integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidProbability(s.to_owned());
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let numer: BigInt = numer.parse().map_err(|_| bad())?;
        let denom: BigInt = denom.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Self::new(BigRational::new(numer, denom))
    }
}

impl fmt::Display for CondorcetProbability {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoiseModel {
    /// Given winner `w`, a vote placing `w` in position `r` has weight
    /// `2^alpha(r)`.
    ScoringWinner(ScoringRule),
    /// Given ranking `c_1 > ... > c_m`, a vote has weight
    /// `prod_i (m + 1 - i)^alpha(r(c_i))`.
    ScoringRanking(ScoringRule),
    /// Given ranking `c_1 > ... > c_m`, a vote has weight `prod_i k_i^delta(c_i)`
    /// with `k_{i+1}` vanishingly small next to `k_i`. Kept as the exponent
    /// vector `delta` and compared lexicographically from `c_m` down.
    StvLex,
    /// Every pairwise comparison in a vote agrees with the correct ranking
    /// with probability `p`, independently.
    Condorcet(CondorcetProbability),
}

impl NoiseModel {
    /// The outcome type the model conditions on.
    pub fn outcome_kind(&self) -> OutcomeKind {
        match self {
            NoiseModel::ScoringWinner(_) => OutcomeKind::Winner,
            _ => OutcomeKind::Ranking,
        }
    }

    fn check(&self, outcome: &Outcome, m: usize) -> Result<()> {
        if outcome.kind() != self.outcome_kind() {
            return Err(Error::IncompatibleOutcome);
        }
        match outcome {
            Outcome::Winner(w) if *w >= m => Err(Error::IncompatibleOutcome),
            Outcome::Ranking(r) if r.len() != m => Err(Error::RankingSize {
                got: r.len(),
                expected: m,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for NoiseModel {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            NoiseModel::ScoringWinner(rule) => write!(f, "scoring-winner({rule})"),
            NoiseModel::ScoringRanking(rule) => write!(f, "scoring-ranking({rule})"),
            NoiseModel::StvLex => f.write_str("stv-lex"),
            NoiseModel::Condorcet(p) => write!(f, "condorcet({p})"),
        }
    }
}

/// A likelihood value, exactly comparable with values from the same model.
/// Greater means more likely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Likelihood {
    Exact(BigRational),
    /// Exponents `e_1..e_m` of the vanishing constants `k_1..k_m`; more
    /// likely means lexicographically smaller on `(e_m, ..., e_1)`.
    Lex(Vec<u64>),
}

impl Likelihood {
    pub fn one(kind: &NoiseModel, m: usize) -> Likelihood {
        match kind {
            NoiseModel::StvLex => Likelihood::Lex(vec![0; m]),
            _ => Likelihood::Exact(BigRational::one()),
        }
    }

    /// Product of two likelihoods (exponent sum for `Lex`). `None` when the
    /// kinds or lengths differ.
    pub fn checked_mul(&self, other: &Likelihood) -> Option<Likelihood> {
        match (self, other) {
            (Likelihood::Exact(a), Likelihood::Exact(b)) => Some(Likelihood::Exact(a * b)),
            (Likelihood::Lex(a), Likelihood::Lex(b)) if a.len() == b.len() => Some(
                Likelihood::Lex(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            ),
            _ => None,
        }
    }

    pub fn pow(&self, k: u64) -> Likelihood {
        match self {
            Likelihood::Exact(r) => Likelihood::Exact(rational_pow(r, k as i64)),
            Likelihood::Lex(e) => Likelihood::Lex(e.iter().map(|x| x * k).collect()),
        }
    }
}

impl PartialOrd for Likelihood {
    fn partial_cmp(&self, other: &Likelihood) -> Option<Ordering> {
        match (self, other) {
            (Likelihood::Exact(a), Likelihood::Exact(b)) => Some(a.cmp(b)),
            (Likelihood::Lex(a), Likelihood::Lex(b)) if a.len() == b.len() => {
                Some(b.iter().rev().cmp(a.iter().rev()))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Likelihood {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Likelihood::Exact(r) => f.write_str(&format_rational(r)),
            Likelihood::Lex(e) => write!(f, "[{}]", e.iter().format(", ")),
        }
    }
}

/// `num/den`, always with the denominator.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let e = u32::try_from(exp.unsigned_abs()).expect("exponent fits in u32");
    let r = BigRational::new(base.numer().pow(e), base.denom().pow(e));
    if exp < 0 {
        r.recip()
    } else {
        r
    }
}

fn pow2(exp: i64) -> BigRational {
    rational_pow(&BigRational::from_integer(2.into()), exp)
}

/// `sum over pairs c_i above c_j of [vote agrees]` and the disagreements.
fn agreements(truth: &Ranking, vote: &Ranking) -> (u64, u64) {
    let pos = vote.positions();
    let order = truth.order();
    let mut agree = 0;
    let mut disagree = 0;
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            if pos[a] < pos[b] {
                agree += 1;
            } else {
                disagree += 1;
            }
        }
    }
    (agree, disagree)
}

/// `delta(c_i) = 1` iff every candidate above `c_i` in the vote is one of
/// `c_{i+1}, ..., c_m`; indexed by the position `i` in `truth`.
fn stv_deltas(truth: &Ranking, vote: &Ranking) -> Vec<u64> {
    let rank = truth.positions();
    let mut deltas = vec![0; truth.len()];
    // best (smallest) truth position among candidates seen so far in the vote
    let mut best_above = usize::MAX;
    for &c in vote.order() {
        if best_above > rank[c] {
            deltas[rank[c]] = 1;
        }
        best_above = best_above.min(rank[c]);
    }
    deltas
}

/// The unnormalized weight of a single vote given the correct outcome.
pub fn vote_weight(model: &NoiseModel, outcome: &Outcome, vote: &Ranking) -> Result<Likelihood> {
    let m = vote.len();
    model.check(outcome, m)?;
    Ok(match (model, outcome) {
        (NoiseModel::ScoringWinner(rule), Outcome::Winner(w)) => {
            let alpha = rule.vector(m)?;
            Likelihood::Exact(pow2(alpha.points(vote.positions()[*w])))
        }
        (NoiseModel::ScoringRanking(rule), Outcome::Ranking(truth)) => {
            let alpha = rule.vector(m)?;
            let pos = vote.positions();
            let mut weight = BigRational::one();
            for (i, &c) in truth.order().iter().enumerate() {
                let base = BigRational::from_integer(BigInt::from(m - i));
                weight *= rational_pow(&base, alpha.points(pos[c]));
            }
            Likelihood::Exact(weight)
        }
        (NoiseModel::StvLex, Outcome::Ranking(truth)) => Likelihood::Lex(stv_deltas(truth, vote)),
        (NoiseModel::Condorcet(p), Outcome::Ranking(truth)) => {
            let (agree, disagree) = agreements(truth, vote);
            let q = BigRational::one() - p.value();
            Likelihood::Exact(
                rational_pow(p.value(), agree as i64) * rational_pow(&q, disagree as i64),
            )
        }
        _ => unreachable!("checked above"),
    })
}

/// Sum of [`vote_weight`] over all `m!` votes.
pub fn normalizer(model: &NoiseModel, outcome: &Outcome, m: usize) -> Result<Likelihood> {
    if matches!(model, NoiseModel::StvLex) {
        return Err(Error::NoNormalizer);
    }
    if m > DEFAULT_ENUMERATION_BOUND {
        return Err(Error::TooManyCandidates {
            m,
            bound: DEFAULT_ENUMERATION_BOUND,
        });
    }
    model.check(outcome, m)?;
    let mut total = BigRational::zero();
    for vote in all_rankings(m) {
        match vote_weight(model, outcome, &vote)? {
            Likelihood::Exact(w) => total += w,
            Likelihood::Lex(_) => unreachable!("exact model"),
        }
    }
    Ok(Likelihood::Exact(total))
}

/// Likelihood of the whole profile: the product of the vote weights, computed
/// from aggregate exponents rather than vote by vote.
pub fn profile_likelihood(
    model: &NoiseModel,
    outcome: &Outcome,
    profile: &Profile,
) -> Result<Likelihood> {
    let m = profile.m();
    model.check(outcome, m)?;
    Ok(match (model, outcome) {
        (NoiseModel::ScoringWinner(rule), Outcome::Winner(w)) => {
            let scores = crate::rules::scoring_points(profile, &rule.vector(m)?)?;
            Likelihood::Exact(pow2(scores[*w]))
        }
        (NoiseModel::ScoringRanking(rule), Outcome::Ranking(truth)) => {
            let scores = crate::rules::scoring_points(profile, &rule.vector(m)?)?;
            let mut weight = BigRational::one();
            for (i, &c) in truth.order().iter().enumerate() {
                let base = BigRational::from_integer(BigInt::from(m - i));
                weight *= rational_pow(&base, scores[c]);
            }
            Likelihood::Exact(weight)
        }
        (NoiseModel::StvLex, Outcome::Ranking(truth)) => {
            let mut exponents = vec![0; m];
            for (vote, k) in profile.votes() {
                for (e, d) in exponents.iter_mut().zip(stv_deltas(truth, vote)) {
                    *e += d * k;
                }
            }
            Likelihood::Lex(exponents)
        }
        (NoiseModel::Condorcet(p), Outcome::Ranking(truth)) => {
            let matrix = PairwiseMatrix::from_profile(profile);
            let agree = crate::rules::kemeny_agreement(&matrix, truth);
            let pairs = (m * m.saturating_sub(1) / 2) as u64;
            let disagree = profile.n() * pairs - agree;
            let q = BigRational::one() - p.value();
            Likelihood::Exact(
                rational_pow(p.value(), agree as i64) * rational_pow(&q, disagree as i64),
            )
        }
        _ => unreachable!("checked above"),
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::rules::ScoreVector;
    use crate::testing::*;

    fn exact(n: i64, d: i64) -> Likelihood {
        Likelihood::Exact(BigRational::new(n.into(), d.into()))
    }

    fn condorcet(n: i64, d: i64) -> NoiseModel {
        NoiseModel::Condorcet(CondorcetProbability::from_ratio(n, d).unwrap())
    }

    /// Product of per-vote weights, vote by vote.
    fn naive_likelihood(model: &NoiseModel, outcome: &Outcome, p: &Profile) -> Likelihood {
        p.votes()
            .iter()
            .fold(Likelihood::one(model, p.m()), |acc, (vote, k)| {
                acc.checked_mul(&vote_weight(model, outcome, vote).unwrap().pow(*k))
                    .unwrap()
            })
    }

    fn exact_models() -> Vec<NoiseModel> {
        vec![
            NoiseModel::ScoringWinner(ScoringRule::Plurality),
            NoiseModel::ScoringWinner(ScoringRule::Borda),
            NoiseModel::ScoringWinner(ScoringRule::Veto),
            NoiseModel::ScoringRanking(ScoringRule::Plurality),
            NoiseModel::ScoringRanking(ScoringRule::Borda),
            NoiseModel::ScoringRanking(ScoringRule::Veto),
            condorcet(3, 5),
            condorcet(9, 10),
        ]
    }

    fn outcomes(model: &NoiseModel, m: usize) -> Vec<Outcome> {
        match model.outcome_kind() {
            OutcomeKind::Winner => (0..m).map(Outcome::Winner).collect(),
            OutcomeKind::Ranking => all_rankings(m).map(Outcome::Ranking).collect(),
        }
    }

    #[test]
    fn scoring_winner_weights() {
        let p = profile("candidates: a,b,c");
        let model = NoiseModel::ScoringWinner(ScoringRule::Plurality);
        let w = Outcome::Winner(0);
        assert_eq!(
            vote_weight(&model, &w, &ranking(&p, "a>b>c")).unwrap(),
            exact(2, 1)
        );
        assert_eq!(
            vote_weight(&model, &w, &ranking(&p, "b>a>c")).unwrap(),
            exact(1, 1)
        );
    }

    #[test]
    fn scoring_ranking_weights() {
        let p = profile("candidates: a,b,c");
        let model = NoiseModel::ScoringRanking(ScoringRule::Borda);
        let truth = Outcome::Ranking(ranking(&p, "a>b>c"));
        // 3^2 * 2^1 * 1^0
        assert_eq!(
            vote_weight(&model, &truth, &ranking(&p, "a>b>c")).unwrap(),
            exact(18, 1)
        );
        // 3^0 * 2^1 * 1^2
        assert_eq!(
            vote_weight(&model, &truth, &ranking(&p, "c>b>a")).unwrap(),
            exact(2, 1)
        );
    }

    #[test]
    fn negative_points_give_fractions() {
        let alpha = ScoreVector::new(vec![0, -1, -3]).unwrap();
        let model = NoiseModel::ScoringWinner(ScoringRule::Custom(alpha));
        let p = profile("candidates: a,b,c");
        let weight = vote_weight(&model, &Outcome::Winner(0), &ranking(&p, "b>c>a")).unwrap();
        assert_eq!(weight, exact(1, 8));
    }

    #[test]
    fn stv_lex_deltas() {
        let p = profile("candidates: a,b,c");
        let truth = Outcome::Ranking(ranking(&p, "a>b>c"));
        let weight = |v| vote_weight(&NoiseModel::StvLex, &truth, &ranking(&p, v)).unwrap();
        assert_eq!(weight("b>c>a"), Likelihood::Lex(vec![1, 1, 0]));
        assert_eq!(weight("a>b>c"), Likelihood::Lex(vec![1, 0, 0]));
        assert_eq!(weight("c>b>a"), Likelihood::Lex(vec![1, 1, 1]));
        assert_eq!(weight("c>a>b"), Likelihood::Lex(vec![1, 0, 1]));
    }

    #[test]
    fn condorcet_single_pair() {
        let p = profile("candidates: a,b");
        let model = condorcet(2, 3);
        let truth = Outcome::Ranking(ranking(&p, "a>b"));
        assert_eq!(
            vote_weight(&model, &truth, &ranking(&p, "a>b")).unwrap(),
            exact(2, 3)
        );
        assert_eq!(
            vote_weight(&model, &truth, &ranking(&p, "b>a")).unwrap(),
            exact(1, 3)
        );
        assert_eq!(normalizer(&model, &truth, 2).unwrap(), exact(1, 1));
        let one_vote = profile("candidates: a,b\n1: a>b");
        assert_eq!(
            profile_likelihood(&model, &truth, &one_vote).unwrap(),
            exact(2, 3)
        );
    }

    #[test]
    fn probability_bounds() {
        assert!(CondorcetProbability::from_ratio(1, 2).is_err());
        assert!(CondorcetProbability::from_ratio(1, 1).is_err());
        assert!(CondorcetProbability::from_ratio(3, 2).is_err());
        assert!(CondorcetProbability::from_ratio(1, 0).is_err());
        assert!("3/5".parse::<CondorcetProbability>().is_ok());
        assert!("2/4".parse::<CondorcetProbability>().is_err());
        assert!("1".parse::<CondorcetProbability>().is_err());
        assert!("x/5".parse::<CondorcetProbability>().is_err());
        assert_eq!(
            "6/10".parse::<CondorcetProbability>().unwrap().to_string(),
            "3/5"
        );
    }

    #[test]
    fn normalizer_values() {
        let plurality = NoiseModel::ScoringWinner(ScoringRule::Plurality);
        assert_eq!(
            normalizer(&plurality, &Outcome::Winner(0), 3).unwrap(),
            exact(8, 1)
        );
        assert_eq!(
            normalizer(&plurality, &Outcome::Winner(0), 1).unwrap(),
            exact(2, 1)
        );
        assert_eq!(
            normalizer(
                &NoiseModel::StvLex,
                &Outcome::Ranking(Ranking::identity(3)),
                3
            ),
            Err(Error::NoNormalizer)
        );
        assert!(normalizer(&plurality, &Outcome::Winner(0), 9).is_err());
    }

    #[test]
    fn normalizer_is_outcome_independent() {
        for model in exact_models() {
            for m in 1..=4 {
                let values: Vec<_> = outcomes(&model, m)
                    .iter()
                    .map(|o| normalizer(&model, o, m).unwrap())
                    .collect();
                assert!(values.iter().all_equal(), "{model} m={m}");
            }
        }
    }

    #[test]
    fn incompatible_outcomes() {
        let p = profile(STV_V1);
        let r = Outcome::Ranking(Ranking::identity(3));
        let model = NoiseModel::ScoringWinner(ScoringRule::Plurality);
        assert_eq!(
            profile_likelihood(&model, &r, &p),
            Err(Error::IncompatibleOutcome)
        );
        assert_eq!(
            profile_likelihood(&NoiseModel::StvLex, &Outcome::Winner(0), &p),
            Err(Error::IncompatibleOutcome)
        );
        assert!(profile_likelihood(&model, &Outcome::Winner(3), &p).is_err());
        assert!(profile_likelihood(
            &NoiseModel::StvLex,
            &Outcome::Ranking(Ranking::identity(2)),
            &p
        )
        .is_err());
    }

    #[test]
    fn empty_profile_is_one() {
        let p = profile("candidates: a,b,c");
        let truth = Outcome::Ranking(Ranking::identity(3));
        assert_eq!(
            profile_likelihood(&NoiseModel::StvLex, &truth, &p).unwrap(),
            Likelihood::Lex(vec![0; 3])
        );
        assert_eq!(
            profile_likelihood(&condorcet(3, 5), &truth, &p).unwrap(),
            exact(1, 1)
        );
    }

    #[test]
    fn stv_lex_example_v1() {
        let p = profile(STV_V1);
        let truth = Outcome::Ranking(ranking(&p, "a>b>c"));
        assert_eq!(
            profile_likelihood(&NoiseModel::StvLex, &truth, &p).unwrap(),
            Likelihood::Lex(vec![13, 6, 3])
        );
    }

    #[test]
    fn lex_ordering() {
        let a = Likelihood::Lex(vec![5, 0, 1]);
        let b = Likelihood::Lex(vec![0, 9, 2]);
        let c = Likelihood::Lex(vec![0, 1, 2]);
        assert!(a > b);
        assert!(c > b);
        assert!(a > c);
        assert_eq!(a.partial_cmp(&exact(1, 1)), None);
        assert_eq!(a.partial_cmp(&Likelihood::Lex(vec![1])), None);
        assert_eq!(exact(1, 1).checked_mul(&a), None);
    }

    #[test]
    fn display() {
        assert_eq!(exact(18, 1).to_string(), "18/1");
        assert_eq!(exact(4, 6).to_string(), "2/3");
        assert_eq!(Likelihood::Lex(vec![13, 6, 3]).to_string(), "[13, 6, 3]");
    }

    fn all_models() -> Vec<NoiseModel> {
        let mut models = exact_models();
        models.push(NoiseModel::StvLex);
        models
    }

    proptest! {
        #[test]
        fn aggregate_route_matches_vote_by_vote(p in arb_profile(5, 6)) {
            for model in all_models() {
                for outcome in outcomes(&model, p.m()) {
                    prop_assert_eq!(
                        profile_likelihood(&model, &outcome, &p).unwrap(),
                        naive_likelihood(&model, &outcome, &p)
                    );
                }
            }
        }

        #[test]
        fn likelihood_factorizes((v1, v2) in arb_profile_pair(1, 5, 5)) {
            let both = v1.union(&v2).unwrap();
            for model in all_models() {
                for outcome in outcomes(&model, v1.m()) {
                    let l1 = profile_likelihood(&model, &outcome, &v1).unwrap();
                    let l2 = profile_likelihood(&model, &outcome, &v2).unwrap();
                    prop_assert_eq!(
                        profile_likelihood(&model, &outcome, &both).unwrap(),
                        l1.checked_mul(&l2).unwrap()
                    );
                }
            }
        }

        #[test]
        fn stv_lex_first_exponent_is_n(p in arb_profile(5, 6)) {
            for truth in all_rankings(p.m()) {
                let Likelihood::Lex(e) = profile_likelihood(&NoiseModel::StvLex, &Outcome::Ranking(truth), &p).unwrap() else {
                    unreachable!()
                };
                prop_assert_eq!(e[0], p.n());
            }
        }

        #[test]
        fn scoring_winner_depends_on_position_only(
            (m, a, b) in (1usize..=5).prop_flat_map(|m| (Just(m), arb_ranking(m), arb_ranking(m)))
        ) {
            let model = NoiseModel::ScoringWinner(ScoringRule::Borda);
            for w in 0..m {
                if a.positions()[w] == b.positions()[w] {
                    prop_assert_eq!(
                        vote_weight(&model, &Outcome::Winner(w), &a).unwrap(),
                        vote_weight(&model, &Outcome::Winner(w), &b).unwrap()
                    );
                }
            }
        }
    }
}
