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

//! Election outcomes: a single winner or a full ranking.

use std::fmt;

use crate::profile::{CandidateSet, Ranking};

/// Which part of a rule's output is being compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeKind {
    Winner,
    Ranking,
}

impl fmt::Display for OutcomeKind {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            OutcomeKind::Winner => "winner",
            OutcomeKind::Ranking => "ranking",
        })
    }
}

/// A correct outcome to be estimated, or the output of a rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Winner(usize),
    Ranking(Ranking),
}

impl Outcome {
    pub fn kind(&self) -> OutcomeKind {
        match self {
            Outcome::Winner(_) => OutcomeKind::Winner,
            Outcome::Ranking(_) => OutcomeKind::Ranking,
        }
    }

    pub fn display<'a>(&'a self, candidates: &'a CandidateSet) -> impl fmt::Display + 'a {
        DisplayOutcome {
            outcome: self,
            candidates,
        }
    }
}

struct DisplayOutcome<'a> {
    outcome: &'a Outcome,
    candidates: &'a CandidateSet,
}

impl fmt::Display for DisplayOutcome<'_> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self.outcome {
            Outcome::Winner(w) => f.write_str(self.candidates.label(*w)),
            Outcome::Ranking(r) => write!(f, "{}", r.display(self.candidates)),
        }
    }
}
