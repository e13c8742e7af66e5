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

//! `votemle`: tally profiles, compute maximum likelihood outcomes, check
//! and search for consistency violations, and realize margin graphs.
//!
//! Exit status is 0 on success (or when no violation is found), 1 when a
//! violation is found or a margin file has an odd weight, and 2 on usage,
//! parse or range errors.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use votemle::{
    check_violation, parse_margin_file, parse_profile, realize_margin_graph, render_profile,
    search_violation, CondorcetProbability, Error, NoiseModel, OutcomeKind, Profile, Rule,
    ScoreVector, ScoringRule, SearchConfig, SearchStrategy,
};

/// Seed used when `--seed` is not given.
const DEFAULT_SEED: u64 = 1;
/// Pairs examined by `search` when `--trials` is not given.
const DEFAULT_TRIALS: u64 = 100_000;

#[derive(Parser)]
#[command(
    name = "votemle",
    version,
    about = "Voting rules as maximum likelihood estimators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a voting rule to a ballot file.
    Tally {
        #[command(flatten)]
        rule: RuleArgs,
        /// Also print the pairwise count matrix.
        #[arg(long)]
        pairwise: bool,
        profile: PathBuf,
    },
    /// Print pairwise counts and margins of a ballot file.
    Pairwise { profile: PathBuf },
    /// Maximum likelihood outcomes under a noise model.
    Mle {
        #[arg(long, value_enum)]
        model: ModelName,
        /// Scoring rule for the scoring models.
        #[arg(long, value_enum)]
        rule: Option<RuleName>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        score_vector: Option<Vec<i64>>,
        /// Condorcet model parameter as `num/den`, strictly between 1/2 and 1.
        #[arg(long)]
        p: Option<String>,
        profile: PathBuf,
    },
    /// Check whether two electorates witness a consistency violation.
    Consistency {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long, value_enum)]
        kind: Kind,
        v1: PathBuf,
        v2: PathBuf,
    },
    /// Search for a consistency violation.
    Search {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        candidates: usize,
        #[arg(long, value_enum, default_value_t = StrategyName::Profiles)]
        strategy: StrategyName,
        /// Largest number of votes per side (profiles strategy).
        #[arg(long, default_value_t = 4)]
        max_votes: u64,
        /// Largest absolute margin, even (margins strategy).
        #[arg(long, default_value_t = 6)]
        max_weight: i64,
        /// Enumerate in canonical order instead of drawing at random.
        #[arg(long)]
        exhaustive: bool,
        /// Number of pairs to examine.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Require the union's outcome to be tie-free as well.
        #[arg(long)]
        strict_union: bool,
        /// Directory for `v1.votes` and `v2.votes` when a violation is found.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a ballot file whose pairwise margins match a margin file.
    Realize {
        margins: PathBuf,
        /// Output ballot file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RuleArgs {
    #[arg(long, value_enum)]
    rule: RuleName,
    /// Comma-separated nonincreasing points, for `--rule scoring`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    score_vector: Option<Vec<i64>>,
    /// Rule choosing the winner, for `--rule hybrid`.
    #[arg(long, value_enum)]
    winner_rule: Option<RuleName>,
    /// Rule ranking the remaining candidates, for `--rule hybrid`.
    #[arg(long, value_enum)]
    rest_rule: Option<RuleName>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleName {
    Plurality,
    Borda,
    Veto,
    Scoring,
    Stv,
    Bucklin,
    Maximin,
    Copeland,
    RankedPairs,
    Kemeny,
    Hybrid,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelName {
    ScoringWinner,
    ScoringRanking,
    StvLex,
    Condorcet,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Winner,
    Ranking,
}

impl From<Kind> for OutcomeKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Winner => OutcomeKind::Winner,
            Kind::Ranking => OutcomeKind::Ranking,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyName {
    Profiles,
    Margins,
}

/// A failed command: the message and the exit status to report it with.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        usage(e.to_string())
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<(String, u8), Failure>;

fn scoring_rule(name: RuleName, vector: &Option<Vec<i64>>) -> Result<ScoringRule, Failure> {
    Ok(match name {
        RuleName::Plurality => ScoringRule::Plurality,
        RuleName::Borda => ScoringRule::Borda,
        RuleName::Veto => ScoringRule::Veto,
        RuleName::Scoring => match vector {
            Some(v) => ScoringRule::Custom(ScoreVector::new(v.clone())?),
            None => return Err(usage("--rule scoring needs --score-vector")),
        },
        _ => return Err(usage("expected a scoring rule")),
    })
}

fn simple_rule(name: RuleName, vector: &Option<Vec<i64>>) -> Result<Rule, Failure> {
    Ok(match name {
        RuleName::Plurality | RuleName::Borda | RuleName::Veto | RuleName::Scoring => {
            Rule::Scoring(scoring_rule(name, vector)?)
        }
        RuleName::Stv => Rule::Stv,
        RuleName::Bucklin => Rule::Bucklin,
        RuleName::Maximin => Rule::Maximin,
        RuleName::Copeland => Rule::Copeland,
        RuleName::RankedPairs => Rule::RankedPairs,
        RuleName::Kemeny => Rule::Kemeny,
        RuleName::Hybrid => return Err(usage("hybrid rules cannot be nested")),
    })
}

impl RuleArgs {
    fn build(&self) -> Result<Rule, Failure> {
        if self.rule != RuleName::Hybrid {
            return simple_rule(self.rule, &self.score_vector);
        }
        match (self.winner_rule, self.rest_rule) {
            (Some(w), Some(r)) => Ok(Rule::hybrid(
                simple_rule(w, &self.score_vector)?,
                simple_rule(r, &self.score_vector)?,
            )),
            _ => Err(usage("--rule hybrid needs --winner-rule and --rest-rule")),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Profile, Failure> {
    parse_profile(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Tally {
            rule,
            pairwise,
            profile,
        } => {
            let rule = rule.build()?;
            let profile = load(&profile)?;
            let outcome = rule.apply(&profile)?;
            Ok((report::tally(&rule, &profile, &outcome, pairwise), 0))
        }
        Command::Pairwise { profile } => Ok((report::pairwise(&load(&profile)?), 0)),
        Command::Mle {
            model,
            rule,
            score_vector,
            p,
            profile,
        } => {
            let scoring = || match rule {
                Some(name) => scoring_rule(name, &score_vector),
                None => Err(usage("scoring models need --rule")),
            };
            let model = match model {
                ModelName::ScoringWinner => NoiseModel::ScoringWinner(scoring()?),
                ModelName::ScoringRanking => NoiseModel::ScoringRanking(scoring()?),
                ModelName::StvLex => NoiseModel::StvLex,
                ModelName::Condorcet => {
                    let p = p.ok_or_else(|| usage("condorcet needs --p"))?;
                    NoiseModel::Condorcet(p.parse::<CondorcetProbability>()?)
                }
            };
            let profile = load(&profile)?;
            let best = votemle::mle(&model, &profile)?;
            Ok((report::mle(&model, &profile, &best), 0))
        }
        Command::Consistency { rule, kind, v1, v2 } => {
            let rule = rule.build()?;
            let (v1, v2) = (load(&v1)?, load(&v2)?);
            match check_violation(&rule, kind.into(), &v1, &v2)? {
                Some(cert) => Ok((cert.render(), 1)),
                None => Ok((report::no_violation(&rule, kind.into(), &v1, &v2)?, 0)),
            }
        }
        Command::Search {
            rule,
            kind,
            candidates,
            strategy,
            max_votes,
            max_weight,
            exhaustive,
            trials,
            seed,
            strict_union,
            output,
        } => {
            let strategy = match strategy {
                StrategyName::Profiles => SearchStrategy::Profiles {
                    max_votes,
                    exhaustive,
                },
                StrategyName::Margins => SearchStrategy::Margins {
                    max_weight,
                    exhaustive,
                },
            };
            let config = SearchConfig {
                rule: rule.build()?,
                kind: kind.into(),
                m: candidates,
                strategy,
                budget: trials,
                seed,
                strict_union,
            };
            let found = search_violation(&config)?;
            if let (Some(cert), Some(dir)) = (&found.certificate, &output) {
                fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
                write(&dir.join("v1.votes"), &render_profile(&cert.v1))?;
                write(&dir.join("v2.votes"), &render_profile(&cert.v2))?;
            }
            let code = u8::from(found.certificate.is_some());
            Ok((report::search(&config, &found), code))
        }
        Command::Realize { margins, output } => {
            let (candidates, graph) = parse_margin_file(&read(&margins)?)
                .map_err(|e| usage(format!("{}: {e}", margins.display())))?;
            let profile = match realize_margin_graph(&candidates, &graph) {
                Err(Error::OddWeight { a, b, weight }) => {
                    return Err(Failure {
                        code: 1,
                        message: format!(
                            "odd weight {weight} on {} -> {}; only even margins are realizable",
                            candidates.label(a),
                            candidates.label(b)
                        ),
                    })
                }
                other => other?,
            };
            let text = render_profile(&profile);
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    Ok((
                        format!("wrote {} votes to {}\n", profile.n(), path.display()),
                        0,
                    ))
                }
                None => Ok((text, 0)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
