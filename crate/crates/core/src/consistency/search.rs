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

//! Searching for consistency violations, either over small profiles or over
//! even margin graphs realized afterwards as profiles.
//!
//! Every search visits candidates in a fixed canonical order (enumeration
//! index, or trial index for seeded random draws) and reports the first hit
//! in that order, so parallel runs agree with sequential ones.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::{check_violation, ViolationCertificate};
use crate::error::{Error, Result};
use crate::outcome::{Outcome, OutcomeKind};
use crate::pairwise::{MarginGraph, PairwiseMatrix};
use crate::profile::{all_rankings, CandidateSet, Profile};
use crate::rules::{Rule, RuleOutcome};
use crate::sampling::{random_profile, trial_rng};
use crate::synth::realize_margin_graph;

/// Largest number of profiles or graphs an exhaustive search will list.
pub const EXHAUSTIVE_LIMIT: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Pairs of profiles with between 1 and `max_votes` votes each.
    Profiles { max_votes: u64, exhaustive: bool },
    /// Pairs of margin graphs with even weights in `-max_weight..=max_weight`,
    /// each realized with as many votes as its positive weight sum.
    Margins { max_weight: i64, exhaustive: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub rule: Rule,
    pub kind: OutcomeKind,
    pub m: usize,
    pub strategy: SearchStrategy,
    /// Pairs examined at most: random trials, or a prefix of the enumeration.
    pub budget: u64,
    pub seed: u64,
    /// Only accept certificates whose union outcome is itself tie-free, not
    /// merely different from the common outcome under every tie-break.
    pub strict_union: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub certificate: Option<ViolationCertificate>,
    /// Pairs examined up to and including the hit.
    pub examined: u64,
}

pub fn search_violation(config: &SearchConfig) -> Result<SearchOutcome> {
    if config.m < 2 {
        return Err(Error::InvalidBounds(format!(
            "search needs at least 2 candidates, got {}",
            config.m
        )));
    }
    match config.strategy {
        SearchStrategy::Profiles {
            max_votes,
            exhaustive,
        } => {
            if max_votes == 0 {
                return Err(Error::InvalidBounds("max votes must be positive".into()));
            }
            if exhaustive {
                exhaustive_profiles(config, max_votes)
            } else {
                random_profiles(config, max_votes)
            }
        }
        SearchStrategy::Margins {
            max_weight,
            exhaustive,
        } => {
            if !config.rule.is_pairwise() {
                return Err(Error::NotMarginDetermined(config.rule.to_string()));
            }
            if max_weight < 2 || max_weight % 2 != 0 {
                return Err(Error::InvalidBounds(format!(
                    "max weight must be even and at least 2, got {max_weight}"
                )));
            }
            if exhaustive {
                exhaustive_margins(config, max_weight)
            } else {
                random_margins(config, max_weight)
            }
        }
    }
}

fn accept(
    config: &SearchConfig,
    found: Result<Option<ViolationCertificate>>,
) -> Result<Option<ViolationCertificate>> {
    Ok(found?.filter(|c| !config.strict_union || c.combined_determined))
}

/// Same outcome on both sides, free of ties.
fn agree(kind: OutcomeKind, x: &RuleOutcome, y: &RuleOutcome) -> bool {
    x.is_determined(kind) && y.is_determined(kind) && x.outcome(kind) == y.outcome(kind)
}

/// Candidate renaming that turns `from` into `to` (both of the same kind).
fn matching_relabel(m: usize, from: &Outcome, to: &Outcome) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..m).collect();
    match (from, to) {
        (Outcome::Winner(a), Outcome::Winner(b)) => sigma.swap(*a, *b),
        (Outcome::Ranking(r), Outcome::Ranking(s)) => {
            for (&c, &d) in r.order().iter().zip(s.order()) {
                sigma[c] = d;
            }
        }
        _ => unreachable!("outcomes of one kind"),
    }
    sigma
}

/// Scans unordered pairs `(i, j)`, `i <= j`, row by row and returns the first
/// certificate, counting at most `budget` pairs.
fn scan_pairs<T: Sync>(
    items: &[(T, RuleOutcome)],
    kind: OutcomeKind,
    budget: u64,
    check: impl Fn(&T, &T) -> Result<Option<ViolationCertificate>> + Sync,
) -> Result<SearchOutcome> {
    let len = items.len() as u64;
    let total = len * (len + 1) / 2;
    let row_start = |i: u64| i * len - i * (i.saturating_sub(1)) / 2;
    let hit = (0..items.len())
        .into_par_iter()
        .map(|i| -> Result<Option<_>> {
            let start = row_start(i as u64);
            if start >= budget {
                return Ok(None);
            }
            let (a, oa) = &items[i];
            let end = (items.len() as u64).min((i as u64).saturating_add(budget - start)) as usize;
            for (j, (b, ob)) in items.iter().enumerate().take(end).skip(i) {
                if agree(kind, oa, ob) {
                    if let Some(cert) = check(a, b)? {
                        return Ok(Some((start + (j - i) as u64 + 1, cert)));
                    }
                }
            }
            Ok(None)
        });
    match hit.find_map_first(|r| r.transpose()) {
        Some(Ok((examined, cert))) => Ok(SearchOutcome {
            certificate: Some(cert),
            examined,
        }),
        Some(Err(e)) => Err(e),
        None => Ok(SearchOutcome {
            certificate: None,
            examined: total.min(budget),
        }),
    }
}

/// Runs `trial` over `0..budget` and keeps the lowest-indexed hit.
fn scan_trials(
    budget: u64,
    trial: impl Fn(u64) -> Result<Option<ViolationCertificate>> + Sync,
) -> Result<SearchOutcome> {
    let hit = (0..budget)
        .into_par_iter()
        .map(|t| trial(t).map(|c| c.map(|c| (t, c))))
        .find_map_first(|r| r.transpose());
    match hit {
        Some(Ok((t, cert))) => Ok(SearchOutcome {
            certificate: Some(cert),
            examined: t + 1,
        }),
        Some(Err(e)) => Err(e),
        None => Ok(SearchOutcome {
            certificate: None,
            examined: budget,
        }),
    }
}

/// Every profile with 1 to `max_votes` votes, by size and then by the
/// lexicographic order of its sorted ballot list.
fn all_profiles(m: usize, max_votes: u64) -> Result<Vec<Profile>> {
    let rankings: Vec<_> = all_rankings(m).collect();
    let candidates = CandidateSet::alphabetic(m);
    let mut out = Vec::new();
    for size in 1..=max_votes as usize {
        for combo in (0..rankings.len()).combinations_with_replacement(size) {
            if out.len() >= EXHAUSTIVE_LIMIT {
                return Err(Error::InvalidBounds(format!(
                    "more than {EXHAUSTIVE_LIMIT} profiles with m = {m} and up to {max_votes} votes"
                )));
            }
            let votes = combo.into_iter().map(|k| (rankings[k].clone(), 1));
            out.push(Profile::from_votes(candidates.clone(), votes)?.merged());
        }
    }
    Ok(out)
}

fn evaluate_all<T: Sync + Send>(
    items: Vec<T>,
    eval: impl Fn(&T) -> Result<RuleOutcome> + Sync,
) -> Result<Vec<(T, RuleOutcome)>> {
    items
        .into_par_iter()
        .map(|item| eval(&item).map(|o| (item, o)))
        .collect()
}

fn exhaustive_profiles(config: &SearchConfig, max_votes: u64) -> Result<SearchOutcome> {
    if config.budget == 0 {
        return Ok(SearchOutcome {
            certificate: None,
            examined: 0,
        });
    }
    let items = evaluate_all(all_profiles(config.m, max_votes)?, |p| config.rule.apply(p))?;
    scan_pairs(&items, config.kind, config.budget, |v1, v2| {
        accept(config, check_violation(&config.rule, config.kind, v1, v2))
    })
}

fn random_profiles(config: &SearchConfig, max_votes: u64) -> Result<SearchOutcome> {
    let (rule, kind, m) = (&config.rule, config.kind, config.m);
    scan_trials(config.budget, |t| {
        let mut rng = trial_rng(config.seed, t);
        let n1 = rng.gen_range(1..=max_votes);
        let v1 = random_profile(m, n1, &mut rng);
        let n2 = rng.gen_range(1..=max_votes);
        let v2 = random_profile(m, n2, &mut rng);
        let (o1, o2) = (rule.apply(&v1)?, rule.apply(&v2)?);
        if !o1.is_determined(kind) || !o2.is_determined(kind) {
            return Ok(None);
        }
        let sigma = matching_relabel(m, &o2.outcome(kind), &o1.outcome(kind));
        accept(
            config,
            check_violation(rule, kind, &v1, &v2.relabel(&sigma).merged()),
        )
    })
}

fn margin_outcome(rule: &Rule, graph: &MarginGraph, n: u64) -> Result<RuleOutcome> {
    rule.apply_pairwise(&PairwiseMatrix::from_margins(graph, n)?)
}

/// Decides the pair in margin space and only realizes it on a hit.
fn check_margins(
    config: &SearchConfig,
    (g1, o1): (&MarginGraph, &RuleOutcome),
    (g2, o2): (&MarginGraph, &RuleOutcome),
) -> Result<Option<ViolationCertificate>> {
    let kind = config.kind;
    if !agree(kind, o1, o2) {
        return Ok(None);
    }
    let union = g1.add(g2);
    let combined = margin_outcome(&config.rule, &union, g1.positive_sum() + g2.positive_sum())?;
    if combined.admits(&o1.outcome(kind)) || (config.strict_union && !combined.is_determined(kind))
    {
        return Ok(None);
    }
    let candidates = CandidateSet::alphabetic(config.m);
    let v1 = realize_margin_graph(&candidates, g1)?;
    let v2 = realize_margin_graph(&candidates, g2)?;
    accept(config, check_violation(&config.rule, kind, &v1, &v2))
}

/// Every nonzero graph, ordered lexicographically by its upper-triangle
/// weights read row by row.
fn all_graphs(m: usize, max_weight: i64) -> Result<Vec<MarginGraph>> {
    let edges: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
    let values = (max_weight + 1) as usize;
    let count = u32::try_from(edges.len())
        .ok()
        .and_then(|e| values.checked_pow(e))
        .filter(|&c| c <= EXHAUSTIVE_LIMIT + 1)
        .ok_or_else(|| {
            Error::InvalidBounds(format!(
                "more than {EXHAUSTIVE_LIMIT} margin graphs with m = {m} and weight {max_weight}"
            ))
        })?;
    let weights: Vec<i64> = (-max_weight..=max_weight).step_by(2).collect();
    Ok((0..edges.len())
        .map(|_| weights.iter().copied())
        .multi_cartesian_product()
        .take(count)
        .filter(|w| w.iter().any(|&x| x != 0))
        .map(|w| {
            let mut g = MarginGraph::zero(m);
            for (&(a, b), x) in edges.iter().zip(w) {
                g.set(a, b, x);
            }
            g
        })
        .collect())
}

fn exhaustive_margins(config: &SearchConfig, max_weight: i64) -> Result<SearchOutcome> {
    if config.budget == 0 {
        return Ok(SearchOutcome {
            certificate: None,
            examined: 0,
        });
    }
    let graphs = all_graphs(config.m, max_weight)?;
    let items = evaluate_all(graphs, |g| {
        margin_outcome(&config.rule, g, g.positive_sum())
    })?;
    let outcomes: std::collections::HashMap<&MarginGraph, &RuleOutcome> =
        items.iter().map(|(g, o)| (g, o)).collect();
    scan_pairs(&items, config.kind, config.budget, |g1, g2| {
        check_margins(config, (g1, outcomes[g1]), (g2, outcomes[g2]))
    })
}

/// Uniform even weights; for rules gated on distinct pairwise counts, the
/// magnitudes are drawn without repetition when the range allows it.
fn random_graph<R: Rng>(rule: &Rule, m: usize, max_weight: i64, rng: &mut R) -> MarginGraph {
    let edges: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
    let mut g = MarginGraph::zero(m);
    let levels = max_weight / 2;
    if rule.needs_distinct_counts() && levels as usize >= edges.len() {
        let mut magnitudes: Vec<i64> = (1..=levels).map(|k| 2 * k).collect();
        magnitudes.shuffle(rng);
        for (&(a, b), w) in edges.iter().zip(magnitudes) {
            g.set(a, b, if rng.gen() { w } else { -w });
        }
    } else {
        for &(a, b) in &edges {
            g.set(a, b, 2 * rng.gen_range(-levels..=levels));
        }
    }
    g
}

fn random_margins(config: &SearchConfig, max_weight: i64) -> Result<SearchOutcome> {
    let (rule, kind, m) = (&config.rule, config.kind, config.m);
    scan_trials(config.budget, |t| {
        let mut rng = trial_rng(config.seed, t);
        let g1 = random_graph(rule, m, max_weight, &mut rng);
        let g2 = random_graph(rule, m, max_weight, &mut rng);
        let o1 = margin_outcome(rule, &g1, g1.positive_sum())?;
        let o2 = margin_outcome(rule, &g2, g2.positive_sum())?;
        if !o1.is_determined(kind) || !o2.is_determined(kind) {
            return Ok(None);
        }
        let sigma = matching_relabel(m, &o2.outcome(kind), &o1.outcome(kind));
        let g2 = g2.relabel(&sigma);
        let o2 = margin_outcome(rule, &g2, g2.positive_sum())?;
        check_margins(config, (&g1, &o1), (&g2, &o2))
    })
}
