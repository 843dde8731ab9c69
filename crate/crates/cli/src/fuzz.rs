//! Random p = 3 presentations whose quotients exercise the verifier.
//!
//! Relators follow the shape of the corpus: p-power relators with random
//! exponents 3 or 9, the conditions `[t,s,t]` and `[t,s,s,s,s]` with random
//! deep tails, an optional `[t,s]^3` relator, and for a third generator
//! commutator conditions against `s` and `t`. The roles `s`, `t` of the
//! first two generators are assigned at random.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use pgroup_core::p_quotient;
use pgroup_verify::{
    central_decomposition, check_decomposition, classify_derived_subgroup, hypothesis_check, verify_hall_bounds,
    verify_theorem_1, Check, Checklist, Context,
};

use crate::grammar::{Expr, PresentationFile, Relator};

pub const CLASS_CAP: u32 = 6;

fn gen(name: &str) -> Expr {
    Expr::Gen(name.into())
}

fn comm(names: &[&str]) -> Expr {
    Expr::Comm(names.iter().map(|n| gen(n)).collect())
}

fn with_tail(rng: &mut ChaCha8Rng, head: Expr, tails: &[Expr]) -> Expr {
    if tails.is_empty() || rng.gen_bool(0.5) {
        return head;
    }
    let t = tails[rng.gen_range(0..tails.len())].clone();
    let t = match rng.gen_range(1..3) {
        1 => t,
        k => Expr::Power(Box::new(t), k),
    };
    Expr::Product(vec![head, t])
}

pub fn random_presentation(seed: u64) -> PresentationFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.gen_range(2..=3);
    let names: Vec<&str> = ["a", "b", "u"][..rank].to_vec();
    let (s, t) = if rng.gen_bool(0.5) { ("a", "b") } else { ("b", "a") };
    let w = comm(&[t, s, s, s]);
    let z = comm(&[t, s, s, s, t]);
    let mut rels = Vec::new();
    for n in &names {
        let e = if rng.gen_bool(0.5) { 3 } else { 9 };
        rels.push(Expr::Power(Box::new(gen(n)), e));
    }
    rels.push(with_tail(&mut rng, comm(&[t, s, t]), &[w.clone(), z.clone()]));
    rels.push(with_tail(&mut rng, comm(&[t, s, s, s, s]), std::slice::from_ref(&z)));
    if rng.gen_bool(0.5) {
        let head = Expr::Power(Box::new(comm(&[t, s])), 3);
        rels.push(with_tail(&mut rng, head, &[z.clone(), w.clone(), comm(&[t, s, s])]));
    }
    if rank == 3 {
        rels.push(with_tail(&mut rng, comm(&[s, "u"]), std::slice::from_ref(&z)));
        rels.push(with_tail(&mut rng, comm(&[t, "u"]), &[w, z]));
    }
    PresentationFile {
        name: format!("fuzz{seed}"),
        prime: 3,
        class_cap: Some(CLASS_CAP),
        generators: names.iter().map(|n| n.to_string()).collect(),
        relators: rels.into_iter().map(|lhs| Relator { lhs, rhs: None }).collect(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FuzzOutcome {
    pub seed: u64,
    pub order_log: Option<usize>,
    /// The quotient satisfies the hypotheses.
    pub accepted: bool,
    pub checklist: Checklist,
}

impl FuzzOutcome {
    pub fn passed(&self) -> bool {
        self.checklist.passed()
    }
}

pub fn run_case(seed: u64) -> FuzzOutcome {
    let file = random_presentation(seed);
    let mut checks = Checklist::new();
    let q = match file.to_fp().and_then(|fp| p_quotient(&fp, CLASS_CAP)) {
        Ok(q) => q,
        Err(e) => {
            // quotients beyond the resource caps are not candidates
            return FuzzOutcome {
                seed,
                order_log: None,
                accepted: false,
                checklist: Checklist {
                    checks: vec![Check::new(
                        "quotient",
                        pgroup_verify::Status::Skipped,
                        json!({ "reason": e.to_string() }),
                    )],
                },
            };
        }
    };
    let ctx = Context::new(&q.pcp);
    let accepted = hypothesis_check(&ctx).satisfied;
    if accepted {
        let as_check = |name: &str, r: pgroup_verify::Result<Checklist>| match r {
            Ok(list) => Check::assert(name, list.passed(), json!({ "checks": list.checks.len() })),
            Err(e) => Check::assert(name, false, json!({ "error": e.to_string() })),
        };
        checks.push(as_check("theorem1", verify_theorem_1(&ctx)));
        checks.push(as_check("hall", Ok(verify_hall_bounds(&ctx))));
        checks.push(match classify_derived_subgroup(&ctx) {
            Ok(c) => Check::assert("classify", true, json!({ "type": c.kind })),
            Err(e) => Check::assert("classify", false, json!({ "error": e.to_string() })),
        });
        checks.push(match central_decomposition(&ctx) {
            Ok(d) => {
                let recheck = check_decomposition(&ctx, &d.h_gens, &d.u_gens);
                Check::assert(
                    "decomposition",
                    recheck.passed(),
                    json!({ "h_generators": d.h_gens.len(), "u_generators": d.u_gens.len() }),
                )
            }
            Err(e) => Check::assert("decomposition", false, json!({ "error": e.to_string() })),
        });
    }
    FuzzOutcome {
        seed,
        order_log: Some(q.pcp.n()),
        accepted,
        checklist: checks,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub attempts: u64,
    pub accepted: Vec<FuzzOutcome>,
}

impl FuzzSummary {
    pub fn failures(&self) -> impl Iterator<Item = &FuzzOutcome> {
        self.accepted.iter().filter(|o| !o.passed())
    }
}

/// Tries seeds `base, base + 1, ...` until `target` presentations satisfy
/// the hypotheses or `max_attempts` seeds are used.
pub fn run(base: u64, target: usize, max_attempts: u64) -> FuzzSummary {
    let mut accepted = Vec::new();
    let mut attempts = 0;
    while accepted.len() < target && attempts < max_attempts {
        let outcome = run_case(base + attempts);
        attempts += 1;
        if outcome.accepted {
            accepted.push(outcome);
        }
    }
    FuzzSummary { attempts, accepted }
}
