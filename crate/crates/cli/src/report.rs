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

//! Plain-text reports. Everything printed here is a function of the inputs
//! alone, so repeated runs produce identical bytes.

use std::fmt::Write;

use votemle::rules::{Alternatives, Detail, LockAction};
use votemle::{
    margins, pairwise_matrix, CandidateSet, Likelihood, NoiseModel, Outcome, OutcomeKind, Profile,
    Rule, RuleOutcome, SearchConfig, SearchOutcome, SearchStrategy,
};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn header(out: &mut String, profile: &Profile) {
    writeln!(
        out,
        "candidates: {}",
        profile.candidates().names().join(",")
    )
    .unwrap();
    writeln!(out, "votes: {}", profile.n()).unwrap();
}

fn outcome_lines(out: &mut String, c: &CandidateSet, outcome: &RuleOutcome, indent: &str) {
    writeln!(out, "{indent}winner: {}", c.label(outcome.winner)).unwrap();
    writeln!(out, "{indent}ranking: {}", outcome.strict.display(c)).unwrap();
    writeln!(out, "{indent}weak order: {}", outcome.weak.display(c)).unwrap();
    writeln!(
        out,
        "{indent}tie-free: winner {}, ranking {}",
        yes_no(outcome.is_determined(OutcomeKind::Winner)),
        yes_no(outcome.is_determined(OutcomeKind::Ranking))
    )
    .unwrap();
    if !outcome.is_determined(OutcomeKind::Ranking) {
        match &outcome.alternatives {
            Alternatives::Weak => {}
            Alternatives::Listed(list) => {
                let shown: Vec<String> = list.iter().map(|r| r.display(c).to_string()).collect();
                writeln!(out, "{indent}possible rankings: {}", shown.join(", ")).unwrap();
            }
            Alternatives::Unresolved => {
                writeln!(out, "{indent}possible rankings: not enumerated").unwrap()
            }
        }
    }
    detail_lines(out, c, &outcome.detail, indent);
}

fn detail_lines(out: &mut String, c: &CandidateSet, detail: &Detail, indent: &str) {
    let m = c.len();
    match detail {
        Detail::Points(points) => {
            let cells: Vec<String> = (0..m)
                .map(|i| format!("{}={}", c.label(i), points[i]))
                .collect();
            writeln!(out, "{indent}scores: {}", cells.join(" ")).unwrap();
        }
        Detail::Bucklin(scores) => {
            let cells: Vec<String> = (0..m)
                .map(|i| format!("{}={}/{}", c.label(i), scores[i].depth, scores[i].support))
                .collect();
            writeln!(out, "{indent}depth/support: {}", cells.join(" ")).unwrap();
        }
        Detail::Stv(rounds) => {
            for (k, round) in rounds.iter().enumerate() {
                let cells: Vec<String> = round
                    .tallies
                    .iter()
                    .map(|&(i, t)| format!("{}={t}", c.label(i)))
                    .collect();
                let tie = if round.tied { " (tie)" } else { "" };
                writeln!(
                    out,
                    "{indent}round {}: {}, eliminate {}{tie}",
                    k + 1,
                    cells.join(" "),
                    c.label(round.eliminated)
                )
                .unwrap();
            }
        }
        Detail::RankedPairs(steps) => {
            for step in steps {
                let action = match step.action {
                    LockAction::Locked => "locked",
                    LockAction::Implied => "implied",
                    LockAction::Skipped => "skipped",
                };
                writeln!(
                    out,
                    "{indent}{}>{} ({}): {action}",
                    c.label(step.winner),
                    c.label(step.loser),
                    step.count
                )
                .unwrap();
            }
        }
        Detail::Kemeny { agreement } => writeln!(out, "{indent}agreement: {agreement}").unwrap(),
        Detail::Hybrid {
            winner,
            rest,
            rest_candidates,
        } => {
            writeln!(out, "{indent}winner stage:").unwrap();
            let deeper = format!("{indent}  ");
            outcome_lines(out, c, winner, &deeper);
            if let Some(rest) = rest {
                writeln!(out, "{indent}rest stage:").unwrap();
                outcome_lines(out, &c.subset(rest_candidates), rest, &deeper);
            }
        }
    }
}

pub fn tally(rule: &Rule, profile: &Profile, outcome: &RuleOutcome, show_pairwise: bool) -> String {
    let mut out = String::new();
    writeln!(out, "rule: {rule}").unwrap();
    header(&mut out, profile);
    outcome_lines(&mut out, profile.candidates(), outcome, "");
    if show_pairwise {
        out.push_str("pairwise counts:\n");
        write!(
            out,
            "{}",
            pairwise_matrix(profile).display(profile.candidates())
        )
        .unwrap();
    }
    out
}

pub fn pairwise(profile: &Profile) -> String {
    let mut out = String::new();
    header(&mut out, profile);
    let matrix = pairwise_matrix(profile);
    let c = profile.candidates();
    out.push_str("pairwise counts:\n");
    write!(out, "{}", matrix.display(c)).unwrap();
    out.push_str("margins:\n");
    write!(out, "{}", margins(&matrix).display(c)).unwrap();
    out
}

pub fn mle(model: &NoiseModel, profile: &Profile, best: &[(Outcome, Likelihood)]) -> String {
    let mut out = String::new();
    writeln!(out, "model: {model}").unwrap();
    header(&mut out, profile);
    let what = match best.first().map(|(_, l)| l) {
        Some(Likelihood::Lex(_)) => "exponents",
        _ => "likelihood",
    };
    writeln!(out, "maximum likelihood outcomes: {}", best.len()).unwrap();
    for (outcome, value) in best {
        writeln!(
            out,
            "  {}  {what} {value}",
            outcome.display(profile.candidates())
        )
        .unwrap();
    }
    out
}

pub fn no_violation(
    rule: &Rule,
    kind: OutcomeKind,
    v1: &Profile,
    v2: &Profile,
) -> votemle::Result<String> {
    let c = v1.candidates();
    let mut out = String::new();
    writeln!(out, "no violation: {rule} ({kind})").unwrap();
    let union = v1.union(v2)?;
    for (name, p) in [("V1", v1), ("V2", v2), ("V1+V2", &union)] {
        let o = rule.apply(p)?;
        let tie = if o.is_determined(kind) { "" } else { " (tied)" };
        writeln!(out, "{name} outcome: {}{tie}", o.outcome(kind).display(c)).unwrap();
    }
    Ok(out)
}

pub fn search(config: &SearchConfig, found: &SearchOutcome) -> String {
    let mut out = String::new();
    let space = match config.strategy {
        SearchStrategy::Profiles {
            max_votes,
            exhaustive,
        } => format!(
            "profiles with at most {max_votes} votes, {}",
            if exhaustive { "exhaustive" } else { "random" }
        ),
        SearchStrategy::Margins {
            max_weight,
            exhaustive,
        } => format!(
            "margin graphs with weights up to {max_weight}, {}",
            if exhaustive { "exhaustive" } else { "random" }
        ),
    };
    writeln!(
        out,
        "search: {} ({}), {} candidates",
        config.rule, config.kind, config.m
    )
    .unwrap();
    writeln!(out, "space: {space}").unwrap();
    writeln!(out, "seed: {}, budget: {}", config.seed, config.budget).unwrap();
    if config.strict_union {
        out.push_str("union must be tie-free\n");
    }
    writeln!(out, "examined: {}", found.examined).unwrap();
    match &found.certificate {
        Some(cert) => out.push_str(&cert.render()),
        None => out.push_str("no violation found\n"),
    }
    out
}
