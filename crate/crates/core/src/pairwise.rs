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

//! Pairwise tallies `N(a, b)` and margin graphs `N(a, b) - N(b, a)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::profile::{CandidateSet, Profile};

/// `count(a, b)` is the number of votes ranking `a` above `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairwiseMatrix {
    n: u64,
    counts: Vec<Vec<u64>>,
}

impl PairwiseMatrix {
    pub fn from_profile(profile: &Profile) -> Self {
        let m = profile.m();
        let mut counts = vec![vec![0; m]; m];
        for (ranking, k) in profile.votes() {
            let order = ranking.order();
            for (i, &a) in order.iter().enumerate() {
                for &b in &order[i + 1..] {
                    counts[a][b] += k;
                }
            }
        }
        PairwiseMatrix {
            n: profile.n(),
            counts,
        }
    }

    /// The tally of an `n`-vote profile whose margins are `graph`, i.e.
    /// `N(a, b) = (n + weight(a, b)) / 2`.
    pub fn from_margins(graph: &MarginGraph, n: u64) -> Result<Self> {
        let m = graph.m();
        let mut counts = vec![vec![0; m]; m];
        for (a, row) in counts.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                if a == b {
                    continue;
                }
                let total = n as i64 + graph.weight(a, b);
                if total < 0 || total % 2 != 0 {
                    return Err(Error::InvalidBounds(format!(
                        "margin {} between {a} and {b} is not realizable with {n} votes",
                        graph.weight(a, b)
                    )));
                }
                *cell = (total / 2) as u64;
            }
        }
        Ok(PairwiseMatrix { n, counts })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, a: usize, b: usize) -> u64 {
        self.counts[a][b]
    }

    pub fn margins(&self) -> MarginGraph {
        let m = self.m();
        let weights = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| self.counts[a][b] as i64 - self.counts[b][a] as i64)
                    .collect()
            })
            .collect();
        MarginGraph { weights }
    }

    /// The tally over the candidates in `keep`, reindexed.
    pub fn restrict(&self, keep: &[usize]) -> PairwiseMatrix {
        PairwiseMatrix {
            n: self.n,
            counts: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| self.counts[a][b]).collect())
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, candidates: &'a CandidateSet) -> impl fmt::Display + 'a {
        DisplayMatrix {
            candidates,
            cell: move |a: usize, b: usize| {
                if a == b {
                    "-".to_string()
                } else {
                    self.counts[a][b].to_string()
                }
            },
        }
    }
}

/// Antisymmetric matrix of pairwise margins.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginGraph {
    weights: Vec<Vec<i64>>,
}

impl MarginGraph {
    pub fn zero(m: usize) -> Self {
        MarginGraph {
            weights: vec![vec![0; m]; m],
        }
    }

    pub fn new(weights: Vec<Vec<i64>>) -> Result<Self> {
        let m = weights.len();
        for (a, row) in weights.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidBounds("margin matrix is not square".into()));
            }
            for (b, &w) in row.iter().enumerate() {
                if w != -weights[b][a] {
                    return Err(Error::InvalidBounds(format!(
                        "margin matrix is not antisymmetric at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(MarginGraph { weights })
    }

    pub fn m(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, a: usize, b: usize) -> i64 {
        self.weights[a][b]
    }

    /// Sets `weight(a, b) = w` and `weight(b, a) = -w`.
    pub fn set(&mut self, a: usize, b: usize, w: i64) {
        assert_ne!(a, b, "a margin graph has no self loops");
        self.weights[a][b] = w;
        self.weights[b][a] = -w;
    }

    /// Edgewise sum; margins of `V1 + V2` are the sum of the margins.
    pub fn add(&self, other: &MarginGraph) -> MarginGraph {
        MarginGraph {
            weights: self
                .weights
                .iter()
                .zip(&other.weights)
                .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    /// Sum of the positive weights, i.e. the number of votes the gadget
    /// construction uses.
    pub fn positive_sum(&self) -> u64 {
        self.weights
            .iter()
            .flatten()
            .filter(|&&w| w > 0)
            .map(|&w| w as u64)
            .sum()
    }

    /// Directed edges `(a, b, weight)` with positive weight, ascending by
    /// `(a, b)`.
    pub fn positive_edges(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let m = self.m();
        (0..m)
            .flat_map(move |a| (0..m).map(move |b| (a, b)))
            .map(|(a, b)| (a, b, self.weights[a][b]))
            .filter(|&(_, _, w)| w > 0)
    }

    /// Maps candidate `c` to `sigma[c]`.
    pub fn relabel(&self, sigma: &[usize]) -> MarginGraph {
        let m = self.m();
        let mut weights = vec![vec![0; m]; m];
        for a in 0..m {
            for b in 0..m {
                weights[sigma[a]][sigma[b]] = self.weights[a][b];
            }
        }
        MarginGraph { weights }
    }

    pub fn display<'a>(&'a self, candidates: &'a CandidateSet) -> impl fmt::Display + 'a {
        DisplayMatrix {
            candidates,
            cell: move |a: usize, b: usize| {
                if a == b {
                    "-".to_string()
                } else {
                    self.weights[a][b].to_string()
                }
            },
        }
    }
}

/// Pairwise tally of a profile.
pub fn pairwise_matrix(profile: &Profile) -> PairwiseMatrix {
    PairwiseMatrix::from_profile(profile)
}

/// Margin graph of a pairwise tally.
pub fn margins(matrix: &PairwiseMatrix) -> MarginGraph {
    matrix.margins()
}

struct DisplayMatrix<'a, F> {
    candidates: &'a CandidateSet,
    cell: F,
}

impl<F: Fn(usize, usize) -> String> fmt::Display for DisplayMatrix<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let m = self.candidates.len();
        let cells: Vec<Vec<String>> = (0..m)
            .map(|a| (0..m).map(|b| (self.cell)(a, b)).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(self.candidates.names().iter().map(String::len))
            .max()
            .unwrap_or(1);
        write!(f, "{:width$}", "")?;
        for name in self.candidates.names() {
            write!(f, " {name:>width$}")?;
        }
        writeln!(f)?;
        for (a, row) in cells.iter().enumerate() {
            write!(f, "{:width$}", self.candidates.label(a))?;
            for cell in row {
                write!(f, " {cell:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
