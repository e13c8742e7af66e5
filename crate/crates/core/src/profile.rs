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

//! Candidates, rankings, profiles and weak orders.
//!
//! Candidates are referred to by their dense index `0..m` everywhere inside
//! the crate; labels only matter when parsing or rendering.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Ordered list of distinct candidate labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CandidateSet {
    names: Vec<String>,
}

impl CandidateSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidCandidates(
                "at least one candidate is required".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidCandidates(format!(
                    "candidate {i} has an empty label"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidCandidates(format!(
                    "duplicate label {name:?}"
                )));
            }
        }
        Ok(CandidateSet { names })
    }

    /// Candidates labelled `a`, `b`, `c`, ... (then `c26`, `c27`, ... past `z`).
    pub fn alphabetic(m: usize) -> Self {
        let names = (0..m.max(1))
            .map(|i| {
                if i < 26 {
                    char::from(b'a' + i as u8).to_string()
                } else {
                    format!("c{i}")
                }
            })
            .collect();
        CandidateSet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    /// The subset of candidates at the given (strictly increasing) indices.
    pub fn subset(&self, keep: &[usize]) -> CandidateSet {
        CandidateSet {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }
}

/// A strict total order of candidates, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ranking(Vec<usize>);

impl Ranking {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let len = order.len();
        let mut seen = vec![false; len];
        for &c in &order {
            if c >= len || seen[c] {
                return Err(Error::InvalidRanking { order, len });
            }
            seen[c] = true;
        }
        Ok(Ranking(order))
    }

    pub fn identity(m: usize) -> Self {
        Ranking((0..m).collect())
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top(&self) -> usize {
        self.0[0]
    }

    /// `positions()[c]` is the 0-based position of candidate `c`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &c) in self.0.iter().enumerate() {
            pos[c] = i;
        }
        pos
    }

    pub fn prefers(&self, a: usize, b: usize) -> bool {
        for &c in &self.0 {
            if c == a {
                return true;
            }
            if c == b {
                return false;
            }
        }
        false
    }

    /// Maps every candidate `c` to `sigma[c]`.
    pub fn relabel(&self, sigma: &[usize]) -> Ranking {
        Ranking(self.0.iter().map(|&c| sigma[c]).collect())
    }

    /// Drops candidates not in `keep` and reindexes the rest by their
    /// position in `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Ranking {
        let mut new_index = vec![usize::MAX; self.0.len()];
        for (i, &c) in keep.iter().enumerate() {
            new_index[c] = i;
        }
        Ranking(
            self.0
                .iter()
                .filter_map(|&c| (new_index[c] != usize::MAX).then_some(new_index[c]))
                .collect(),
        )
    }

    pub fn display<'a>(&'a self, candidates: &'a CandidateSet) -> impl fmt::Display + 'a {
        DisplayRanking {
            ranking: self,
            candidates,
        }
    }
}

struct DisplayRanking<'a> {
    ranking: &'a Ranking,
    candidates: &'a CandidateSet,
}

impl fmt::Display for DisplayRanking<'_> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let labels = self.ranking.0.iter().map(|&c| self.candidates.label(c));
        write!(f, "{}", labels.format(">"))
    }
}

/// Every ranking of `m` candidates, in lexicographic order of their
/// `order()` vectors.
pub fn all_rankings(m: usize) -> impl Iterator<Item = Ranking> {
    (0..m).permutations(m).map(Ranking)
}

/// A multiset of rankings over a common candidate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    candidates: CandidateSet,
    votes: Vec<(Ranking, u64)>,
}

impl Profile {
    pub fn new(candidates: CandidateSet) -> Self {
        Profile {
            candidates,
            votes: Vec::new(),
        }
    }

    pub fn from_votes(
        candidates: CandidateSet,
        votes: impl IntoIterator<Item = (Ranking, u64)>,
    ) -> Result<Self> {
        let mut profile = Profile::new(candidates);
        for (ranking, count) in votes {
            profile.push(ranking, count)?;
        }
        Ok(profile)
    }

    /// Appends `count` copies of `ranking` as a new ballot line.
    pub fn push(&mut self, ranking: Ranking, count: u64) -> Result<()> {
        if ranking.len() != self.candidates.len() {
            return Err(Error::RankingSize {
                got: ranking.len(),
                expected: self.candidates.len(),
            });
        }
        if count == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        self.votes.push((ranking, count));
        Ok(())
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn votes(&self) -> &[(Ranking, u64)] {
        &self.votes
    }

    /// Number of candidates.
    pub fn m(&self) -> usize {
        self.candidates.len()
    }

    /// Number of voters.
    pub fn n(&self) -> u64 {
        self.votes.iter().map(|(_, k)| k).sum()
    }

    /// Equal rankings merged into one line, keeping first-occurrence order.
    pub fn merged(&self) -> Profile {
        let mut index: HashMap<&Ranking, usize> = HashMap::new();
        let mut votes: Vec<(Ranking, u64)> = Vec::new();
        for (ranking, count) in &self.votes {
            match index.get(ranking) {
                Some(&i) => votes[i].1 += count,
                None => {
                    index.insert(ranking, votes.len());
                    votes.push((ranking.clone(), *count));
                }
            }
        }
        Profile {
            candidates: self.candidates.clone(),
            votes,
        }
    }

    /// Merged, with lines sorted by ranking.
    pub fn canonical(&self) -> Profile {
        let mut merged = self.merged();
        merged.votes.sort();
        merged
    }

    /// Whether both profiles hold the same multiset of votes.
    pub fn same_multiset(&self, other: &Profile) -> bool {
        self.canonical() == other.canonical()
    }

    /// The multiset union `self + other`.
    pub fn union(&self, other: &Profile) -> Result<Profile> {
        if self.candidates != other.candidates {
            return Err(Error::CandidateMismatch);
        }
        let mut votes = self.votes.clone();
        votes.extend(other.votes.iter().cloned());
        Ok(Profile {
            candidates: self.candidates.clone(),
            votes,
        }
        .merged())
    }

    /// Every multiplicity multiplied by `factor` (which must be positive).
    pub fn scaled(&self, factor: u64) -> Result<Profile> {
        if factor == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        Ok(Profile {
            candidates: self.candidates.clone(),
            votes: self
                .votes
                .iter()
                .map(|(r, k)| (r.clone(), k * factor))
                .collect(),
        })
    }

    /// The profile over the candidates in `keep` (strictly increasing
    /// indices), with every other candidate deleted from every vote.
    pub fn restrict(&self, keep: &[usize]) -> Profile {
        Profile {
            candidates: self.candidates.subset(keep),
            votes: self
                .votes
                .iter()
                .map(|(r, k)| (r.restrict(keep), *k))
                .collect(),
        }
        .merged()
    }

    /// Renames candidate `c` to `sigma[c]` in every vote. Labels stay put.
    pub fn relabel(&self, sigma: &[usize]) -> Profile {
        Profile {
            candidates: self.candidates.clone(),
            votes: self
                .votes
                .iter()
                .map(|(r, k)| (r.relabel(sigma), *k))
                .collect(),
        }
    }
}

/// A ranking with ties: tiers of equally placed candidates, best first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakOrder {
    tiers: Vec<Vec<usize>>,
}

impl WeakOrder {
    pub fn new(mut tiers: Vec<Vec<usize>>, m: usize) -> Result<Self> {
        let mut seen = vec![false; m];
        let flat: Vec<usize> = tiers.iter().flatten().copied().collect();
        for &c in &flat {
            if c >= m || seen[c] {
                return Err(Error::InvalidRanking {
                    order: flat,
                    len: m,
                });
            }
            seen[c] = true;
        }
        if flat.len() != m || tiers.iter().any(Vec::is_empty) {
            return Err(Error::InvalidRanking {
                order: flat,
                len: m,
            });
        }
        for tier in &mut tiers {
            tier.sort_unstable();
        }
        Ok(WeakOrder { tiers })
    }

    /// Groups candidates by key, higher keys first.
    pub fn from_scores<K: Ord>(scores: &[K]) -> Self {
        let mut order: Vec<usize> = (0..scores.len()).collect();
        order.sort_by(|&a, &b| scores[b].cmp(&scores[a]).then(a.cmp(&b)));
        let tiers = order
            .into_iter()
            .chunk_by(|&c| &scores[c])
            .into_iter()
            .map(|(_, group)| group.collect())
            .collect();
        WeakOrder { tiers }
    }

    pub fn from_ranking(ranking: &Ranking) -> Self {
        WeakOrder {
            tiers: ranking.order().iter().map(|&c| vec![c]).collect(),
        }
    }

    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    pub fn m(&self) -> usize {
        self.tiers.iter().map(Vec::len).sum()
    }

    pub fn top_tier(&self) -> &[usize] {
        &self.tiers[0]
    }

    pub fn is_strict(&self) -> bool {
        self.tiers.iter().all(|t| t.len() == 1)
    }

    /// Refinement that orders each tier by ascending candidate index.
    pub fn to_ranking(&self) -> Ranking {
        Ranking(self.tiers.iter().flatten().copied().collect())
    }

    /// Whether `ranking` is a linear extension of this weak order.
    pub fn admits(&self, ranking: &Ranking) -> bool {
        if ranking.len() != self.m() {
            return false;
        }
        let mut rest = ranking.order();
        for tier in &self.tiers {
            let (head, tail) = rest.split_at(tier.len());
            if !head.iter().all(|c| tier.contains(c)) {
                return false;
            }
            rest = tail;
        }
        true
    }

    /// All linear extensions, in lexicographic order.
    pub fn linear_extensions(&self) -> Vec<Ranking> {
        self.tiers
            .iter()
            .map(|tier| {
                tier.iter()
                    .copied()
                    .permutations(tier.len())
                    .collect::<Vec<_>>()
            })
            .multi_cartesian_product()
            .map(|parts| Ranking(parts.concat()))
            .collect()
    }

    /// Maps candidate `c` to `sigma[c]`.
    pub fn relabel(&self, sigma: &[usize]) -> WeakOrder {
        let mut tiers: Vec<Vec<usize>> = self
            .tiers
            .iter()
            .map(|t| t.iter().map(|&c| sigma[c]).collect())
            .collect();
        for tier in &mut tiers {
            tier.sort_unstable();
        }
        WeakOrder { tiers }
    }

    pub fn display<'a>(&'a self, candidates: &'a CandidateSet) -> impl fmt::Display + 'a {
        DisplayWeakOrder {
            order: self,
            candidates,
        }
    }
}

struct DisplayWeakOrder<'a> {
    order: &'a WeakOrder,
    candidates: &'a CandidateSet,
}

impl fmt::Display for DisplayWeakOrder<'_> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let tiers = self.order.tiers.iter().map(|tier| {
            let labels = tier.iter().map(|&c| self.candidates.label(c));
            if tier.len() == 1 {
                labels.format("").to_string()
            } else {
                format!("{{{}}}", labels.format(","))
            }
        });
        write!(f, "{}", tiers.format(" > "))
    }
}
