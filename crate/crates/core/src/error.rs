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

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced while parsing inputs or evaluating rules and models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed line in a ballot or margin file. Lines are 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid candidate set: {0}")]
    InvalidCandidates(String),
    #[error("not a permutation of 0..{len}: {order:?}")]
    InvalidRanking { order: Vec<usize>, len: usize },
    #[error("ranking over {got} candidates, expected {expected}")]
    RankingSize { got: usize, expected: usize },
    #[error("multiplicity must be a positive integer")]
    ZeroMultiplicity,
    #[error("profiles are over different candidate sets")]
    CandidateMismatch,
    #[error("{rule} requires at least one vote")]
    EmptyProfile { rule: &'static str },
    #[error("score vector has length {got}, expected {expected}")]
    ScoreVectorLength { got: usize, expected: usize },
    #[error("score vector must be nonincreasing: {0:?}")]
    ScoreVectorOrder(Vec<i64>),
    #[error("{m} candidates exceeds the enumeration bound of {bound}")]
    TooManyCandidates { m: usize, bound: usize },
    #[error("outcome kind does not match the noise model")]
    IncompatibleOutcome,
    #[error("the lexicographic model has no finite normalizer")]
    NoNormalizer,
    #[error("Condorcet parameter must lie strictly between 1/2 and 1, got {0}")]
    InvalidProbability(String),
    #[error("odd weight {weight} on pair ({a}, {b})")]
    OddWeight { a: usize, b: usize, weight: i64 },
    #[error("{0} is not determined by pairwise margins")]
    NotMarginDetermined(String),
    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;
