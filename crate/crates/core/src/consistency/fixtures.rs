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

//! The two published counterexamples given as explicit profiles.

use crate::format::parse_profile;
use crate::outcome::{Outcome, OutcomeKind};
use crate::profile::{Profile, Ranking};
use crate::rules::Rule;

/// What a fixture's union is expected to produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Exactly(Outcome),
    /// Anything but this outcome, whichever way ties are broken.
    Not(Outcome),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub rule: Rule,
    pub kind: OutcomeKind,
    pub v1: Profile,
    pub v2: Profile,
    pub expected_v1: Outcome,
    pub expected_v2: Outcome,
    pub expected_combined: Expected,
}

const BUCKLIN_V1: &str = "\
candidates: a,b,c,d,e
2: a>b>c>d>e
1: b>a>c>d>e
";

const BUCKLIN_V2: &str = "\
candidates: a,b,c,d,e
2: b>d>a>c>e
1: c>e>a>b>d
1: c>a>b>d>e
";

const STV_V1: &str = "\
candidates: a,b,c
3: c>a>b
4: a>b>c
6: b>a>c
";

/// Same as `STV_V1` with b and c swapped.
const STV_V2: &str = "\
candidates: a,b,c
3: b>a>c
4: a>c>b
6: c>a>b
";

fn ranking(order: &[usize]) -> Outcome {
    Outcome::Ranking(Ranking::new(order.to_vec()).unwrap())
}

/// Bucklin at ranking level, then STV at winner level.
pub fn known_violations() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "bucklin",
            rule: Rule::Bucklin,
            kind: OutcomeKind::Ranking,
            v1: parse_profile(BUCKLIN_V1).unwrap(),
            v2: parse_profile(BUCKLIN_V2).unwrap(),
            expected_v1: ranking(&[0, 1, 2, 3, 4]),
            expected_v2: ranking(&[0, 1, 2, 3, 4]),
            expected_combined: Expected::Exactly(ranking(&[1, 0, 2, 3, 4])),
        },
        Fixture {
            name: "stv",
            rule: Rule::Stv,
            kind: OutcomeKind::Winner,
            v1: parse_profile(STV_V1).unwrap(),
            v2: parse_profile(STV_V2).unwrap(),
            expected_v1: Outcome::Winner(0),
            expected_v2: Outcome::Winner(0),
            expected_combined: Expected::Not(Outcome::Winner(0)),
        },
    ]
}
