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

//! Shared helpers for unit tests.

use proptest::prelude::*;

use crate::format::parse_profile;
use crate::profile::{CandidateSet, Profile, Ranking};

pub fn profile(text: &str) -> Profile {
    parse_profile(text).unwrap()
}

pub fn ranking(p: &Profile, text: &str) -> Ranking {
    let order = text
        .split('>')
        .map(|l| p.candidates().index_of(l.trim()).unwrap())
        .collect();
    Ranking::new(order).unwrap()
}

pub const BUCKLIN_V1: &str = "candidates: a,b,c,d,e\n2: a>b>c>d>e\n1: b>a>c>d>e";
pub const BUCKLIN_V2: &str = "candidates: a,b,c,d,e\n2: b>d>a>c>e\n1: c>e>a>b>d\n1: c>a>b>d>e";
pub const STV_V1: &str = "candidates: a,b,c\n3: c>a>b\n4: a>b>c\n6: b>a>c";
pub const STV_V2: &str = "candidates: a,b,c\n3: b>a>c\n4: a>c>b\n6: c>a>b";
pub const CYCLE3: &str = "candidates: a,b,c\n1: a>b>c\n1: b>c>a\n1: c>a>b";

pub fn arb_ranking(m: usize) -> impl Strategy<Value = Ranking> {
    Just((0..m).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|order| Ranking::new(order).unwrap())
}

pub fn arb_profile_with(
    m: usize,
    max_lines: usize,
    max_count: u64,
) -> impl Strategy<Value = Profile> {
    prop::collection::vec((arb_ranking(m), 1..=max_count), 0..=max_lines)
        .prop_map(move |votes| Profile::from_votes(CandidateSet::alphabetic(m), votes).unwrap())
}

/// Profiles with 1 to `max_m` candidates and up to `max_lines` ballot lines.
pub fn arb_profile(max_m: usize, max_lines: usize) -> impl Strategy<Value = Profile> {
    (1..=max_m).prop_flat_map(move |m| arb_profile_with(m, max_lines, 3))
}

/// A pair of profiles over the same candidates.
pub fn arb_profile_pair(
    min_m: usize,
    max_m: usize,
    max_lines: usize,
) -> impl Strategy<Value = (Profile, Profile)> {
    (min_m..=max_m).prop_flat_map(move |m| {
        (
            arb_profile_with(m, max_lines, 2),
            arb_profile_with(m, max_lines, 2),
        )
    })
}

pub fn arb_permutation(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..m).collect::<Vec<_>>()).prop_shuffle()
}
