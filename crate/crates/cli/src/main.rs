//! Command-line surface of the squarefree power toolkit.
//!
//! Structured output (JSON with a schema version field) goes to stdout;
//! human-readable renderings and timing go to stderr. Exit codes: 0 on
//! success, 1 when a verification suite fails, 2 on usage or parse errors,
//! 3 when a resource cap is exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use sqfpow::betti::{betti_hochster, betti_taylor, g_profile};
use sqfpow::error::Error;
use sqfpow::families::{
    example36, ones_ideal, prescribed_profile_ideal, staircase_graph, step_ideal, Construction,
    ProfileTarget,
};
use sqfpow::homology::FieldSpec;
use sqfpow::io::{
    graph_to_text, parse_input, BettiJson, GraphJson, IdealJson, Input, ProfileJson,
};
use sqfpow::monomial::MonomialIdeal;
use sqfpow::verify::{conjecture_sweep, run_suite, SuiteOptions, SCHEMA_VERSION, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "sqfpow", version, about = "Squarefree powers of monomial ideals: profiles, Betti tables, constructions, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized depth profile of an ideal or graph file
    Gprofile {
        /// Ideal JSON, graph JSON, or plain graph file
        file: PathBuf,
        /// Field characteristic: 0 or a prime
        #[arg(long = "char", default_value = "0")]
        characteristic: String,
    },
    /// Graded Betti table of the quotient by the ideal
    Betti {
        /// Ideal JSON, graph JSON, or plain graph file
        file: PathBuf,
        /// Field characteristic: 0 or a prime
        #[arg(long = "char", default_value = "0")]
        characteristic: String,
        /// Compute via the Taylor-complex oracle instead
        #[arg(long)]
        oracle: Option<String>,
    },
    /// Build an instance with a prescribed profile and print the bundle
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Run a named verification suite
    Verify {
        /// One of the suite names, or "all"
        suite: String,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Field characteristic: 0 or a prime
        #[arg(long = "char", default_value = "0")]
        characteristic: String,
    },
    /// Profile sweep over all (or sampled) graphs without isolated vertices
    Sweep {
        #[arg(long)]
        max_vertices: usize,
        /// Sample this many random graphs instead of enumerating
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Field characteristic: 0 or a prime
        #[arg(long = "char", default_value = "0")]
        characteristic: String,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Graph with profile (s, s-1, ..., 1, 0, ..., 0) and matching number m
    Thm38 {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
    },
    /// Ideal realizing an arbitrary non-increasing profile, e.g. 2,1,1,0
    Thm41 {
        #[arg(long)]
        profile: String,
    },
    /// Ideal with profile (1, ..., 1, 0, ..., 0): s ones, grade m
    Lemma42 {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
    },
    /// Ideal with all-ones profile and grade m
    Lemma43 {
        #[arg(long)]
        m: usize,
    },
    /// The fixed six-vertex demonstration graph
    Example36,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::CapExceeded { .. } => 3,
        Error::Parse(_) | Error::Invalid(_) | Error::BadParameters(_) | Error::Io(_) => 2,
        _ => 2,
    }
}

fn load_input(path: &PathBuf) -> Result<Input, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_input(&text)
}

fn input_ideal(input: Input) -> Result<MonomialIdeal, Error> {
    match input {
        Input::Ideal(i) => Ok(i),
        Input::Graph(g) => g.edge_ideal(),
    }
}

fn render_profile(p: &ProfileJson) {
    eprintln!("nu = {}", p.nu);
    eprintln!("{:>3} {:>6} {:>6} {:>6}", "k", "d_k", "depth", "g");
    for k in 1..=p.nu {
        eprintln!(
            "{:>3} {:>6} {:>6} {:>6}",
            k,
            p.d[k - 1],
            p.depth[k - 1],
            p.g[k - 1]
        );
    }
}

fn cmd_gprofile(file: PathBuf, characteristic: String) -> Result<(), Error> {
    let field = FieldSpec::parse(&characteristic)?;
    let ideal = input_ideal(load_input(&file)?)?;
    let profile = g_profile(&ideal, &field)?;
    let json = ProfileJson::from_profile(&profile);
    render_profile(&json);
    let out = json!({
        "schema": SCHEMA_VERSION,
        "field": field.to_string(),
        "profile": json,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(())
}

fn cmd_betti(file: PathBuf, characteristic: String, oracle: Option<String>) -> Result<(), Error> {
    let field = FieldSpec::parse(&characteristic)?;
    let ideal = input_ideal(load_input(&file)?)?;
    let (route, table) = match oracle.as_deref() {
        None => ("hochster", betti_hochster(&ideal, &field)?),
        Some("taylor") => ("taylor", betti_taylor(&ideal, &field)?),
        Some(other) => {
            return Err(Error::Parse(format!("unknown oracle '{other}', expected 'taylor'")))
        }
    };
    let out = json!({
        "schema": SCHEMA_VERSION,
        "field": field.to_string(),
        "route": route,
        "pd": table.pd(),
        "depth": table.ambient() - table.pd(),
        "betti": BettiJson::from_table(&table),
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(())
}

fn construction_bundle(c: &Construction) -> serde_json::Value {
    json!({
        "schema": SCHEMA_VERSION,
        "provenance": c.provenance,
        "ideal": IdealJson::from_ideal(&c.ideal),
        "graph": c.graph.as_ref().map(GraphJson::from_graph),
        "graph_text": c.graph.as_ref().map(graph_to_text),
        "predicted": ProfileJson::from_profile(&c.predicted),
    })
}

fn cmd_construct(what: ConstructCmd) -> Result<(), Error> {
    let bundle = match what {
        ConstructCmd::Thm38 { s, m } => construction_bundle(&staircase_graph(s, m)?),
        ConstructCmd::Thm41 { profile } => {
            let values: Result<Vec<usize>, _> =
                profile.split(',').map(|t| t.trim().parse::<usize>()).collect();
            let values =
                values.map_err(|_| Error::Parse(format!("bad profile list '{profile}'")))?;
            construction_bundle(&prescribed_profile_ideal(&ProfileTarget::new(values)?)?)
        }
        ConstructCmd::Lemma42 { s, m } => construction_bundle(&step_ideal(s, m)?),
        ConstructCmd::Lemma43 { m } => construction_bundle(&ones_ideal(m)?),
        ConstructCmd::Example36 => {
            let g = example36();
            let ideal = g.edge_ideal()?;
            let profile = g_profile(&ideal, &FieldSpec::Char0)?;
            json!({
                "schema": SCHEMA_VERSION,
                "provenance": "example36",
                "ideal": IdealJson::from_ideal(&ideal),
                "graph": GraphJson::from_graph(&g),
                "graph_text": graph_to_text(&g),
                "predicted": ProfileJson::from_profile(&profile),
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&bundle).expect("serializable"));
    Ok(())
}

fn cmd_verify(
    suite: String,
    max_vertices: Option<usize>,
    trials: Option<u64>,
    seed: Option<u64>,
    characteristic: String,
) -> Result<bool, Error> {
    let field = FieldSpec::parse(&characteristic)?;
    let opts = SuiteOptions { field, max_vertices, trials, seed };
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![suite.as_str()]
    };
    let mut all_passed = true;
    let mut reports = Vec::new();
    for name in names {
        let start = Instant::now();
        let report = run_suite(name, &opts)?;
        for check in &report.checks {
            eprintln!(
                "[{}] {}: {}{}",
                report.suite,
                if check.passed { "PASS" } else { "FAIL" },
                check.name,
                if check.details.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", check.details)
                }
            );
        }
        eprintln!(
            "suite {}: {} ({} instances, {:.2?})",
            report.suite,
            if report.passed { "PASS" } else { "FAIL" },
            report.instances,
            start.elapsed()
        );
        all_passed &= report.passed;
        reports.push(report);
    }
    let out = json!({
        "schema": SCHEMA_VERSION,
        "passed": all_passed,
        "suites": reports,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(all_passed)
}

fn cmd_sweep(
    max_vertices: usize,
    sample: Option<u64>,
    seed: Option<u64>,
    characteristic: String,
) -> Result<bool, Error> {
    let field = FieldSpec::parse(&characteristic)?;
    let start = Instant::now();
    let sample = sample.map(|count| (count, seed.unwrap_or(7)));
    let report = conjecture_sweep(max_vertices, sample, &field)?;
    eprintln!(
        "sweep: {} instances, {} counterexamples ({:.2?})",
        report.instances,
        report.counterexamples.len(),
        start.elapsed()
    );
    let clean = report.counterexamples.is_empty();
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(clean)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<bool, Error> = match cli.command {
        Command::Gprofile { file, characteristic } => {
            cmd_gprofile(file, characteristic).map(|()| true)
        }
        Command::Betti { file, characteristic, oracle } => {
            cmd_betti(file, characteristic, oracle).map(|()| true)
        }
        Command::Construct { what } => cmd_construct(what).map(|()| true),
        Command::Verify { suite, max_vertices, trials, seed, characteristic } => {
            cmd_verify(suite, max_vertices, trials, seed, characteristic)
        }
        Command::Sweep { max_vertices, sample, seed, characteristic } => {
            cmd_sweep(max_vertices, sample, seed, characteristic)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
