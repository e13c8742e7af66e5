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

//! Positional scoring rules.

use std::fmt;

use itertools::Itertools;

use super::{Detail, RuleOutcome};
use crate::error::{Error, Result};
use crate::profile::{Profile, WeakOrder};

/// Points `alpha[r]` for the candidate in (0-based) position `r`;
/// nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector(Vec<i64>);

impl ScoreVector {
    pub fn new(alpha: Vec<i64>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::ScoreVectorLength {
                got: 0,
                expected: 1,
            });
        }
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ScoreVectorOrder(alpha));
        }
        Ok(ScoreVector(alpha))
    }

    /// `<1, 0, ..., 0>`
    pub fn plurality(m: usize) -> Self {
        ScoreVector((0..m).map(|i| i64::from(i == 0)).collect())
    }

    /// `<m-1, m-2, ..., 0>`
    pub fn borda(m: usize) -> Self {
        ScoreVector((0..m).rev().map(|i| i as i64).collect())
    }

    /// `<1, ..., 1, 0>`
    pub fn veto(m: usize) -> Self {
        ScoreVector((0..m).map(|i| i64::from(i + 1 < m)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn points(&self, position: usize) -> i64 {
        self.0[position]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// A scoring rule family, resolved to a vector once `m` is known.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScoringRule {
    Plurality,
    Borda,
    Veto,
    Custom(ScoreVector),
}

impl ScoringRule {
    pub fn vector(&self, m: usize) -> Result<ScoreVector> {
        match self {
            ScoringRule::Plurality => Ok(ScoreVector::plurality(m)),
            ScoringRule::Borda => Ok(ScoreVector::borda(m)),
            ScoringRule::Veto => Ok(ScoreVector::veto(m)),
            ScoringRule::Custom(alpha) if alpha.len() == m => Ok(alpha.clone()),
            ScoringRule::Custom(alpha) => Err(Error::ScoreVectorLength {
                got: alpha.len(),
                expected: m,
            }),
        }
    }
}

impl fmt::Display for ScoringRule {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            ScoringRule::Plurality => f.write_str("plurality"),
            ScoringRule::Borda => f.write_str("borda"),
            ScoringRule::Veto => f.write_str("veto"),
            ScoringRule::Custom(alpha) => write!(f, "scoring({})", alpha.0.iter().format(",")),
        }
    }
}

pub(crate) fn scores(profile: &Profile, alpha: &ScoreVector) -> Result<Vec<i64>> {
    if alpha.len() != profile.m() {
        return Err(Error::ScoreVectorLength {
            got: alpha.len(),
            expected: profile.m(),
        });
    }
    let mut scores = vec![0i64; profile.m()];
    for (ranking, k) in profile.votes() {
        for (position, &c) in ranking.order().iter().enumerate() {
            scores[c] += alpha.points(position) * *k as i64;
        }
    }
    Ok(scores)
}

/// Candidates ranked by total points, highest first.
pub fn scoring(profile: &Profile, alpha: &ScoreVector) -> Result<RuleOutcome> {
    let scores = scores(profile, alpha)?;
    Ok(RuleOutcome::from_weak(
        WeakOrder::from_scores(&scores),
        Detail::Points(scores),
    ))
}
