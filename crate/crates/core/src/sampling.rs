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

//! Seeded pseudo-random profiles.
//!
//! Every trial draws from its own ChaCha stream keyed by `(seed, trial)`, so
//! results do not depend on the order in which trials run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::profile::{CandidateSet, Profile, Ranking};

/// Inclusive ranges for the candidate count and the number of voters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileBounds {
    pub min_candidates: usize,
    pub max_candidates: usize,
    pub min_votes: u64,
    pub max_votes: u64,
}

impl ProfileBounds {
    pub fn new(candidates: (usize, usize), votes: (u64, u64)) -> Result<Self> {
        let bounds = ProfileBounds {
            min_candidates: candidates.0,
            max_candidates: candidates.1,
            min_votes: votes.0,
            max_votes: votes.1,
        };
        if bounds.min_candidates == 0
            || bounds.min_candidates > bounds.max_candidates
            || bounds.min_votes > bounds.max_votes
        {
            return Err(Error::InvalidBounds(format!("{bounds:?}")));
        }
        Ok(bounds)
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_ranking<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Ranking {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    Ranking::new(order).expect("shuffled identity")
}

/// `n` i.i.d. uniform rankings over `m` alphabetic candidates, equal ones
/// merged.
pub fn random_profile<R: Rng + ?Sized>(m: usize, n: u64, rng: &mut R) -> Profile {
    let votes = (0..n).map(|_| (random_ranking(m, rng), 1));
    Profile::from_votes(CandidateSet::alphabetic(m), votes)
        .expect("valid rankings")
        .merged()
}

/// Draws `m` and `n` uniformly from the bounds, then the votes.
pub fn random_bounded_profile<R: Rng + ?Sized>(bounds: &ProfileBounds, rng: &mut R) -> Profile {
    let m = rng.gen_range(bounds.min_candidates..=bounds.max_candidates);
    let n = rng.gen_range(bounds.min_votes..=bounds.max_votes);
    random_profile(m, n, rng)
}
