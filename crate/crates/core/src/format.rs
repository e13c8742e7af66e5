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

//! Ballot file format.
//!
//! ```text
//! # optional comments
//! candidates: a,b,c
//! 3: c>a>b
//! 4: a>b>c
//! ```
//!
//! Each vote line lists every candidate exactly once. Blank lines are
//! ignored, as is whitespace around tokens.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::profile::{CandidateSet, Profile, Ranking};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Parses the `candidates: a,b,c` header line.
pub(crate) fn parse_candidates_line(line_no: usize, line: &str) -> Result<CandidateSet> {
    let rest = line
        .strip_prefix("candidates")
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .ok_or_else(|| parse_error(line_no, "expected `candidates: <label>,...`"))?;
    let labels: Vec<&str> = rest.split(',').map(str::trim).collect();
    for label in &labels {
        if label.is_empty() {
            return Err(parse_error(line_no, "empty candidate label"));
        }
        if label.contains(|c: char| c == '>' || c == ':' || c.is_whitespace()) {
            return Err(parse_error(
                line_no,
                format!("invalid candidate label {label:?}"),
            ));
        }
    }
    CandidateSet::new(labels.iter().copied()).map_err(|e| parse_error(line_no, e.to_string()))
}

/// Parses a ballot file into a profile. Ballot lines keep their order and
/// multiplicities; nothing is merged.
pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `candidates:` line"))?;
    let candidates = parse_candidates_line(line_no, header)?;
    let m = candidates.len();
    let mut profile = Profile::new(candidates);

    for (line_no, line) in lines {
        let (count, ballot) = line
            .split_once(':')
            .ok_or_else(|| parse_error(line_no, "expected `<count>: <label>>...`"))?;
        let count: u64 = count
            .trim()
            .parse()
            .map_err(|_| parse_error(line_no, format!("invalid count {:?}", count.trim())))?;
        if count == 0 {
            return Err(parse_error(line_no, "count must be positive"));
        }
        let mut order = Vec::with_capacity(m);
        let mut seen = vec![false; m];
        for label in ballot.split('>').map(str::trim) {
            let c = profile
                .candidates()
                .index_of(label)
                .ok_or_else(|| parse_error(line_no, format!("unknown candidate {label:?}")))?;
            if seen[c] {
                return Err(parse_error(
                    line_no,
                    format!("candidate {label:?} listed twice"),
                ));
            }
            seen[c] = true;
            order.push(c);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            let label = profile.candidates().label(missing).to_owned();
            return Err(parse_error(
                line_no,
                format!("candidate {label:?} missing from vote"),
            ));
        }
        let ranking = Ranking::new(order).expect("checked to be a permutation");
        profile
            .push(ranking, count)
            .expect("size and count checked");
    }
    Ok(profile)
}

/// Renders the canonical form of `profile`: equal rankings merged, lines
/// sorted by ranking.
pub fn render_profile(profile: &Profile) -> String {
    let canonical = profile.canonical();
    let candidates = canonical.candidates();
    let mut out = format!("candidates: {}\n", candidates.names().join(","));
    for (ranking, count) in canonical.votes() {
        writeln!(out, "{count}: {}", ranking.display(candidates)).unwrap();
    }
    out
}
