//! Subcommands of the `pgroup` binary.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pgroup_core::{p_quotient, NormalWord, PcPresentation};
use pgroup_verify::{
    central_decomposition, classify_derived_subgroup, hypothesis_check, reduce_generators, verify_hall_bounds,
    verify_power_central, verify_theorem_1, verify_transfer_lemma, Check, Checklist, Context, Status,
};

use crate::acceptance::{self, Options, CRITERIA};
use crate::corpus::Corpus;
use crate::grammar::parse_presentation;
use crate::report::Report;

const DEFAULT_CLASS: u32 = 6;

#[derive(Debug, Parser)]
#[command(name = "pgroup", version, about = "p-quotients and structure checks for finite p-groups")]
pub struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the largest p-quotient of a presentation file up to a class.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        class: Option<u32>,
        /// Where to write the pc presentation as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower central and derived series orders.
    Series {
        /// A pc presentation (JSON) or a presentation file.
        input: PathBuf,
        #[arg(long)]
        class: Option<u32>,
    },
    /// Run structural checks.
    Check {
        what: CheckKind,
        input: PathBuf,
        #[arg(long)]
        class: Option<u32>,
        /// Generators of H for the transfer check, as exponent vectors
        /// separated by ';', e.g. "1,0,0;0,1,0".
        #[arg(long)]
        h: Option<String>,
    },
    /// Construct and verify a central decomposition G = HU.
    Decompose {
        input: PathBuf,
        #[arg(long)]
        class: Option<u32>,
    },
    /// Run the acceptance criteria on the corpus files in a directory.
    CorpusVerify {
        dir: PathBuf,
        /// Include the hyperplane search for Example A.
        #[arg(long)]
        long: bool,
        /// Run only these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Theorem1,
    Hall,
    Transfer,
    Classify,
    PowerCentral,
    All,
}

/// Exit status and rendered output of one invocation.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(cli: Cli) -> Outcome {
    let report = match &cli.command {
        Command::Quotient { file, class, out } => quotient(file, *class, out.as_deref()),
        Command::Series { input, class } => series(input, *class),
        Command::Check { what, input, class, h } => check(*what, input, *class, h.as_deref()),
        Command::Decompose { input, class } => decompose(input, *class),
        Command::CorpusVerify { dir, long, criteria } => corpus_verify(dir, *long, criteria),
    };
    let code = if report.error.is_some() {
        2
    } else if report.ok {
        0
    } else {
        1
    };
    if cli.json {
        Outcome {
            code,
            stdout: report.to_json() + "\n",
            stderr: String::new(),
        }
    } else if report.error.is_some() {
        Outcome {
            code,
            stdout: String::new(),
            stderr: report.to_text(),
        }
    } else {
        Outcome {
            code,
            stdout: report.to_text(),
            stderr: String::new(),
        }
    }
}

/// `p^log` as a number when it fits, otherwise as text.
fn order_value(p: u32, log: usize) -> Value {
    match (p as u64).checked_pow(log as u32) {
        Some(n) => json!(n),
        None => json!(format!("{p}^{log}")),
    }
}

/// Reads a pc presentation, or computes one from a presentation file.
fn load(path: &Path, class: Option<u32>) -> Result<PcPresentation, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if text.trim_start().starts_with('{') {
        return PcPresentation::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()));
    }
    let file = parse_presentation(&text).map_err(|e| format!("{}:{e}", path.display()))?;
    let fp = file.to_fp().map_err(|e| e.to_string())?;
    let c = class.or(file.class_cap).unwrap_or(DEFAULT_CLASS);
    p_quotient(&fp, c).map(|q| q.pcp).map_err(|e| e.to_string())
}

fn shown(path: &Path) -> String {
    path.display().to_string()
}

fn quotient(file: &Path, class: Option<u32>, out: Option<&Path>) -> Report {
    let mut report = Report::new("quotient", Some(&shown(file)));
    let result = (|| -> Result<Value, String> {
        let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
        let pres = parse_presentation(&text).map_err(|e| format!("{}:{e}", file.display()))?;
        let fp = pres.to_fp().map_err(|e| e.to_string())?;
        let c = class.or(pres.class_cap).unwrap_or(DEFAULT_CLASS);
        let q = p_quotient(&fp, c).map_err(|e| e.to_string())?;
        if let Some(out) = out {
            std::fs::write(out, q.pcp.to_json_string() + "\n").map_err(|e| format!("{}: {e}", out.display()))?;
        }
        Ok(json!({
            "name": pres.name,
            "p": q.pcp.p(),
            "order_log": q.pcp.n(),
            "order": order_value(q.pcp.p(), q.pcp.n()),
            "class": q.class,
            "stabilized": q.stabilized,
            "steps": q.steps,
            "images": q.images,
            "written_to": out.map(shown),
        }))
    })();
    match result {
        Ok(data) => report.data = data,
        Err(e) => report.fail(e),
    }
    report
}

fn series(input: &Path, class: Option<u32>) -> Report {
    let mut report = Report::new("series", Some(&shown(input)));
    match load(input, class) {
        Ok(g) => {
            let p = g.p();
            let logs = |s: Vec<pgroup_core::InducedSequence<'_>>| s.iter().map(|x| x.len()).collect::<Vec<_>>();
            let lcs = logs(g.lower_central_series());
            let derived = logs(g.derived_series());
            report.data = json!({
                "p": p,
                "order_log": g.n(),
                "lower_central_logs": lcs,
                "lower_central_orders": lcs.iter().map(|&l| order_value(p, l)).collect::<Vec<_>>(),
                "derived_logs": derived,
                "derived_orders": derived.iter().map(|&l| order_value(p, l)).collect::<Vec<_>>(),
            });
        }
        Err(e) => report.fail(e),
    }
    report
}

fn parse_h(spec: &str, g: &PcPresentation) -> Result<Vec<NormalWord>, String> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|v| {
            let exps = v
                .split(',')
                .map(|e| e.trim().parse::<u32>().map_err(|_| format!("bad exponent '{e}'")))
                .collect::<Result<Vec<_>, _>>()?;
            if exps.len() != g.n() {
                return Err(format!("vector '{v}' needs {} entries", g.n()));
            }
            Ok(NormalWord::from_exponents(g.p(), exps))
        })
        .collect()
}

fn check(what: CheckKind, input: &Path, class: Option<u32>, h: Option<&str>) -> Report {
    let mut report = Report::new("check", Some(&shown(input)));
    let g = match load(input, class) {
        Ok(g) => g,
        Err(e) => {
            report.fail(e);
            return report;
        }
    };
    let ctx = Context::new(&g);
    report.data = json!({ "hypotheses": hypothesis_check(&ctx) });
    let wants = |k: CheckKind| what == k || what == CheckKind::All;
    if wants(CheckKind::Theorem1) {
        report.push_result("theorem1", verify_theorem_1(&ctx));
    }
    if wants(CheckKind::Hall) {
        report.push("hall", verify_hall_bounds(&ctx));
    }
    if wants(CheckKind::Transfer) {
        let gens = match h {
            Some(spec) => match parse_h(spec, &g) {
                Ok(gens) => gens,
                Err(e) => {
                    report.fail(e);
                    return report;
                }
            },
            None => reduce_generators(&ctx).map(|r| r.gens).unwrap_or_else(|_| g.generators()),
        };
        report.push("transfer", verify_transfer_lemma(&ctx, &gens));
    }
    if wants(CheckKind::Classify) {
        let result = classify_derived_subgroup(&ctx).map(|c| {
            let mut list = c.checklist;
            list.push(Check::new(
                "type",
                Status::Pass,
                json!({ "type": c.kind, "exponent": c.exponent }),
            ));
            list
        });
        report.push_result("classify", result);
    }
    if wants(CheckKind::PowerCentral) {
        report.push_result("power-central", verify_power_central(&ctx));
    }
    report
}

fn decompose(input: &Path, class: Option<u32>) -> Report {
    let mut report = Report::new("decompose", Some(&shown(input)));
    let g = match load(input, class) {
        Ok(g) => g,
        Err(e) => {
            report.fail(e);
            return report;
        }
    };
    let ctx = Context::new(&g);
    match central_decomposition(&ctx) {
        Ok(d) => {
            report.data = json!({
                "normalized": d.normalized,
                "h_generators": d.h_gens,
                "u_generators": d.u_gens,
                "h_log": g.induced_sequence(&d.h_gens).len(),
                "u_log": g.induced_sequence(&d.u_gens).len(),
            });
            report.push("decomposition", d.checklist);
        }
        Err(e) => {
            let mut list = Checklist::new();
            list.push(Check::new("decomposition", Status::Fail, json!({ "reason": e.to_string() })));
            report.push("decomposition", list);
        }
    }
    report
}

fn corpus_verify(dir: &Path, long: bool, criteria: &[u8]) -> Report {
    let mut report = Report::new("corpus-verify", Some(&shown(dir)));
    let corpus = match Corpus::from_dir(dir) {
        Ok(c) => c,
        Err(e) => {
            report.fail(e.to_string());
            return report;
        }
    };
    let opts = Options {
        long,
        ..Options::default()
    };
    let ids: Vec<u8> = if criteria.is_empty() {
        CRITERIA.iter().map(|c| c.0).collect()
    } else {
        criteria.to_vec()
    };
    if let Some(bad) = ids.iter().find(|&&i| !(1..=8).contains(&i)) {
        report.fail(format!("no criterion {bad}"));
        return report;
    }
    let mut lines = Vec::new();
    for id in ids {
        let outcome = acceptance::run_criterion(id, &corpus, &opts);
        lines.push(outcome.line());
        let mut list = outcome.checklist.clone();
        if let Some(e) = &outcome.error {
            list.push(Check::new("criterion", Status::Fail, json!({ "error": e })));
        }
        list.push(Check::new(
            "time-limit",
            if outcome.elapsed_ms <= outcome.limit_ms { Status::Pass } else { Status::Fail },
            json!({ "elapsed_ms": outcome.elapsed_ms as u64, "limit_ms": outcome.limit_ms as u64 }),
        ));
        report.push(format!("criterion {}: {}", outcome.id, outcome.title), list);
    }
    report.data = json!({ "summary": lines });
    report
}
