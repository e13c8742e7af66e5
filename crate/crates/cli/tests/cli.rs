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

//! End-to-end runs of the binary: exit codes, golden outputs and file
//! round trips. Set `UPDATE_GOLDEN=1` to rewrite the golden files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use votemle::{margins, pairwise_matrix, parse_margin_file, parse_profile};

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).to_str().unwrap().to_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_votemle"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// `(golden name, arguments with `@file` standing for a fixture, exit code)`.
const GOLDEN: &[(&str, &[&str], i32)] = &[
    (
        "tally_stv_v1",
        &["tally", "--rule", "stv", "@stv_v1.votes"],
        0,
    ),
    (
        "tally_bucklin_combined",
        &["tally", "--rule", "bucklin", "@bucklin_combined.votes"],
        0,
    ),
    (
        "tally_borda_single",
        &["tally", "--rule", "borda", "@single.votes"],
        0,
    ),
    (
        "tally_ranked_pairs_cycle",
        &[
            "tally",
            "--rule",
            "ranked-pairs",
            "--pairwise",
            "@cycle3.votes",
        ],
        0,
    ),
    (
        "tally_scoring_custom",
        &[
            "tally",
            "--rule",
            "scoring",
            "--score-vector",
            "3,1,0",
            "@stv_v2.votes",
        ],
        0,
    ),
    (
        "tally_hybrid",
        &[
            "tally",
            "--rule",
            "hybrid",
            "--winner-rule",
            "plurality",
            "--rest-rule",
            "bucklin",
            "@stv_v1.votes",
        ],
        0,
    ),
    (
        "tally_kemeny_cycle",
        &["tally", "--rule", "kemeny", "@cycle3.votes"],
        0,
    ),
    ("pairwise_stv_v1", &["pairwise", "@stv_v1.votes"], 0),
    (
        "mle_stv_lex",
        &["mle", "--model", "stv-lex", "@stv_v1.votes"],
        0,
    ),
    (
        "mle_condorcet_cycle",
        &["mle", "--model", "condorcet", "--p", "3/5", "@cycle3.votes"],
        0,
    ),
    (
        "mle_scoring_ranking",
        &[
            "mle",
            "--model",
            "scoring-ranking",
            "--rule",
            "borda",
            "@stv_v1.votes",
        ],
        0,
    ),
    (
        "mle_scoring_winner",
        &[
            "mle",
            "--model",
            "scoring-winner",
            "--rule",
            "plurality",
            "@bucklin_v1.votes",
        ],
        0,
    ),
    (
        "consistency_bucklin",
        &[
            "consistency",
            "--rule",
            "bucklin",
            "--kind",
            "ranking",
            "@bucklin_v1.votes",
            "@bucklin_v2.votes",
        ],
        1,
    ),
    (
        "consistency_stv_winner",
        &[
            "consistency",
            "--rule",
            "stv",
            "--kind",
            "winner",
            "@stv_v1.votes",
            "@stv_v2.votes",
        ],
        1,
    ),
    (
        "consistency_stv_ranking",
        &[
            "consistency",
            "--rule",
            "stv",
            "--kind",
            "ranking",
            "@stv_v1.votes",
            "@stv_v2.votes",
        ],
        0,
    ),
    ("realize_edge", &["realize", "@edge.margins"], 0),
    ("realize_cycle", &["realize", "@cycle.margins"], 0),
    ("realize_empty", &["realize", "@empty.margins"], 0),
    (
        "search_copeland",
        &[
            "search",
            "--rule",
            "copeland",
            "--kind",
            "ranking",
            "--candidates",
            "5",
            "--strategy",
            "margins",
            "--max-weight",
            "6",
            "--seed",
            "7",
        ],
        1,
    ),
    (
        "search_borda_exhaustive",
        &[
            "search",
            "--rule",
            "borda",
            "--kind",
            "winner",
            "--candidates",
            "3",
            "--strategy",
            "profiles",
            "--max-votes",
            "4",
            "--exhaustive",
        ],
        0,
    ),
];

fn expand(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => fixture(name),
            None => a.to_string(),
        })
        .collect()
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for &(name, args, code) in GOLDEN {
        let args = expand(args);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run(&args);
        let second = run(&args);
        assert_eq!(
            first.status.code(),
            Some(code),
            "{name}: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(first.stdout, second.stdout, "{name} is not byte-stable");
        let path = dir("golden").join(format!("{name}.txt"));
        if update {
            fs::write(&path, &first.stdout).unwrap();
        }
        let expected = fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
        assert_eq!(
            String::from_utf8_lossy(&first.stdout),
            String::from_utf8_lossy(&expected),
            "{name} differs from its golden file"
        );
    }
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["tally", "--rule", "stv", "@bad.votes"],
        &["tally", "--rule", "stv", "@missing.votes"],
        &["tally", "--rule", "scoring", "@stv_v1.votes"],
        &[
            "tally",
            "--rule",
            "scoring",
            "--score-vector",
            "0,1,2",
            "@stv_v1.votes",
        ],
        &[
            "tally",
            "--rule",
            "hybrid",
            "--winner-rule",
            "plurality",
            "@stv_v1.votes",
        ],
        &["tally", "--rule", "nonsense", "@stv_v1.votes"],
        &["mle", "--model", "condorcet", "--p", "1/2", "@cycle3.votes"],
        &["mle", "--model", "condorcet", "--p", "1", "@cycle3.votes"],
        &["mle", "--model", "condorcet", "@cycle3.votes"],
        &["mle", "--model", "scoring-winner", "@cycle3.votes"],
        &[
            "consistency",
            "--rule",
            "stv",
            "--kind",
            "winner",
            "@stv_v1.votes",
            "@bucklin_v1.votes",
        ],
        &[
            "search",
            "--rule",
            "stv",
            "--kind",
            "winner",
            "--candidates",
            "3",
            "--strategy",
            "margins",
        ],
        &[
            "search",
            "--rule",
            "copeland",
            "--kind",
            "winner",
            "--candidates",
            "1",
        ],
        &["realize", "@bad.votes"],
        &[],
    ];
    for args in cases {
        let expanded = expand(args);
        let args: Vec<&str> = expanded.iter().map(String::as_str).collect();
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn odd_weight_exits_1() {
    let out = run(&["realize", &fixture("odd.margins")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd weight 3 on a -> b"));
}

#[test]
fn zero_budget_search_exits_0() {
    let out = run(&[
        "search",
        "--rule",
        "bucklin",
        "--kind",
        "winner",
        "--candidates",
        "4",
        "--trials",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("examined: 0\nno violation found\n"));
}

#[test]
fn realized_file_reproduces_margins() {
    let tmp = tempfile::tempdir().unwrap();
    for name in ["edge.margins", "cycle.margins", "empty.margins"] {
        let ballots = tmp.path().join(format!("{name}.votes"));
        let out = run(&["realize", &fixture(name), "-o", ballots.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let profile = parse_profile(&fs::read_to_string(&ballots).unwrap()).unwrap();
        let (_, graph) = parse_margin_file(&fs::read_to_string(fixture(name)).unwrap()).unwrap();
        assert_eq!(margins(&pairwise_matrix(&profile)), graph, "{name}");
        assert_eq!(profile.n(), graph.positive_sum());
    }
}

#[test]
fn search_writes_replayable_ballots() {
    let tmp = tempfile::tempdir().unwrap();
    let out_dir = tmp.path().join("cert");
    let out = run(&[
        "search",
        "--rule",
        "maximin",
        "--kind",
        "winner",
        "--candidates",
        "4",
        "--strategy",
        "margins",
        "--max-weight",
        "12",
        "-o",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v1 = out_dir.join("v1.votes");
    let v2 = out_dir.join("v2.votes");
    let replay = run(&[
        "consistency",
        "--rule",
        "maximin",
        "--kind",
        "winner",
        v1.to_str().unwrap(),
        v2.to_str().unwrap(),
    ]);
    assert_eq!(replay.status.code(), Some(1));
}

#[test]
fn stv_tally_names_the_winner() {
    let out = run(&["tally", "--rule", "stv", &fixture("stv_v1.votes")]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\nwinner: a\n"));
    let out = run(&[
        "tally",
        "--rule",
        "bucklin",
        &fixture("bucklin_combined.votes"),
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\nranking: b>a>c>d>e\n"));
}
