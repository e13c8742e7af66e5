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

//! Profiles realizing a prescribed even-weighted margin graph.
//!
//! The pair of votes `a > b > c_1 > ... > c_{m-2}` and
//! `c_{m-2} > ... > c_1 > a > b` raises the margin of `a` over `b` by two
//! and leaves every other margin unchanged.
//!
//! Margin files look like:
//!
//! ```text
//! candidates: a,b,c
//! a b 2
//! c a 4
//! ```
//!
//! Unlisted pairs have margin zero.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::format::{content_lines, parse_candidates_line};
use crate::pairwise::MarginGraph;
use crate::profile::{CandidateSet, Profile, Ranking};

/// The two votes that add 2 to `margin(a, b)`. `others` lists every other
/// candidate exactly once.
pub fn gadget_pair(a: usize, b: usize, others: &[usize]) -> Result<(Ranking, Ranking)> {
    let forward: Vec<usize> = [a, b].into_iter().chain(others.iter().copied()).collect();
    let forward = Ranking::new(forward)?;
    let backward = others.iter().rev().copied().chain([a, b]).collect();
    Ok((forward, Ranking::new(backward)?))
}

/// A profile whose margins are exactly `graph`, using `weight / 2` gadget
/// pairs per positive edge (edges in ascending `(a, b)` order, the other
/// candidates in ascending index order). Equal rankings are merged.
pub fn realize_margin_graph(candidates: &CandidateSet, graph: &MarginGraph) -> Result<Profile> {
    let m = graph.m();
    if candidates.len() != m {
        return Err(Error::RankingSize {
            got: m,
            expected: candidates.len(),
        });
    }
    for a in 0..m {
        for b in a + 1..m {
            let w = graph.weight(a, b);
            if w % 2 != 0 {
                let (a, b, weight) = if w > 0 { (a, b, w) } else { (b, a, -w) };
                return Err(Error::OddWeight { a, b, weight });
            }
        }
    }
    let mut profile = Profile::new(candidates.clone());
    for (a, b, w) in graph.positive_edges() {
        let others: Vec<usize> = (0..m).filter(|&c| c != a && c != b).collect();
        let (forward, backward) = gadget_pair(a, b, &others)?;
        let copies = (w / 2) as u64;
        profile.push(forward, copies)?;
        profile.push(backward, copies)?;
    }
    Ok(profile.merged())
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a margin file. Weights must be positive integers; odd weights are
/// accepted here and rejected by [`realize_margin_graph`].
pub fn parse_margin_file(text: &str) -> Result<(CandidateSet, MarginGraph)> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `candidates:` line"))?;
    let candidates = parse_candidates_line(line_no, header)?;
    let mut graph = MarginGraph::zero(candidates.len());
    let mut listed = vec![vec![false; candidates.len()]; candidates.len()];
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [from, to, weight] = fields[..] else {
            return Err(parse_error(line_no, "expected `<label> <label> <weight>`"));
        };
        let index = |label: &str| {
            candidates
                .index_of(label)
                .ok_or_else(|| parse_error(line_no, format!("unknown candidate {label:?}")))
        };
        let (a, b) = (index(from)?, index(to)?);
        if a == b {
            return Err(parse_error(
                line_no,
                "an edge needs two distinct candidates",
            ));
        }
        if listed[a][b] {
            return Err(parse_error(
                line_no,
                format!("pair {from} {to} listed twice"),
            ));
        }
        let weight: i64 = weight
            .parse()
            .ok()
            .filter(|&w| w > 0)
            .ok_or_else(|| parse_error(line_no, format!("invalid weight {weight:?}")))?;
        listed[a][b] = true;
        listed[b][a] = true;
        graph.set(a, b, weight);
    }
    Ok((candidates, graph))
}

/// Renders the positive edges of `graph` as a margin file.
pub fn render_margin_file(candidates: &CandidateSet, graph: &MarginGraph) -> String {
    let mut out = format!("candidates: {}\n", candidates.names().join(","));
    for (a, b, w) in graph.positive_edges() {
        writeln!(out, "{} {} {w}", candidates.label(a), candidates.label(b)).unwrap();
    }
    out
}
