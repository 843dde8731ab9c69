//! The acceptance criteria, each with a pinned time limit.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use pgroup_core::{
    centralizer_brute_force, centralizer_lifting, is_elementary_abelian_section, p_quotient, InducedSequence,
    NormalWord, PcPresentation, QuotientResult,
};
use pgroup_oracle::FiniteGroup;
use pgroup_verify::{
    central_decomposition, check_decomposition, classify_derived_subgroup, compare, hyperplane_minimality,
    subset_minimality, verify_power_central, verify_theorem_1, Check, Checklist, Context, DerivedType, Status,
    VerifyError,
};

use crate::corpus::{w128, w128_permutations, Corpus};
use crate::fuzz;
use crate::grammar::PresentationFile;
use crate::oracle::{image_set, oracle, to_oracle};

pub const CRITERIA: [(u8, &str, u64); 8] = [
    (1, "Example C: maximal class 5^6", 10),
    (2, "Example A: five-generator H", 60),
    (3, "Example B: two factorizations", 120),
    (4, "Example D: derived subgroup X_27 x C_3", 10),
    (5, "Example E: derived subgroup of type Y", 30),
    (6, "Sharpness witness W of order 2^7", 5),
    (7, "Property suites", 300),
    (8, "Fuzz acceptance", 600),
];

#[derive(Clone, Debug)]
pub struct Options {
    /// Also test every hyperplane of `G / Phi(G)` for Example A.
    pub long: bool,
    pub seed: u64,
    pub fuzz_target: usize,
    pub fuzz_max_attempts: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            long: false,
            seed: 0x5eed,
            fuzz_target: 25,
            fuzz_max_attempts: 2000,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
    pub checklist: Checklist,
    pub error: Option<String>,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {} ({}): {verdict} in {:.2} s (limit {} s)",
            self.id,
            self.title,
            self.elapsed_ms as f64 / 1000.0,
            self.limit_ms / 1000
        );
        if let Some(e) = &self.error {
            s.push_str(&format!(": {e}"));
        }
        for c in self.checklist.failures() {
            s.push_str(&format!("\n    failed {}: {}", c.name, c.witness));
        }
        s
    }
}

type Outcome = Result<Checklist, String>;

pub fn run_criterion(id: u8, corpus: &Corpus, opts: &Options) -> CriterionOutcome {
    let (_, title, limit) = CRITERIA[id as usize - 1];
    let start = Instant::now();
    let result = match id {
        1 => example_c(corpus),
        2 => example_a(corpus, opts),
        3 => example_b(corpus),
        4 => example_d(corpus),
        5 => example_e(corpus),
        6 => witness_w(),
        7 => property_suites(corpus, opts),
        8 => fuzz_acceptance(opts),
        _ => Err(format!("no criterion {id}")),
    };
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit);
    let (checklist, error) = match result {
        Ok(list) => (list, None),
        Err(e) => (Checklist::new(), Some(e)),
    };
    let mut error = error;
    if error.is_none() && elapsed > limit {
        error = Some("time limit exceeded".into());
    }
    CriterionOutcome {
        id,
        title: title.into(),
        passed: error.is_none() && checklist.passed(),
        elapsed_ms: elapsed.as_millis(),
        limit_ms: limit.as_millis(),
        checklist,
        error,
    }
}

pub fn run_all(corpus: &Corpus, opts: &Options) -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|&(id, _, _)| run_criterion(id, corpus, opts))
        .collect()
}

fn quotient(file: &PresentationFile) -> Result<QuotientResult, String> {
    let fp = file.to_fp().map_err(|e| e.to_string())?;
    p_quotient(&fp, file.class_cap.unwrap_or(6)).map_err(|e| e.to_string())
}

fn verify_err(e: VerifyError) -> String {
    e.to_string()
}

fn lcs_logs(ctx: &Context<'_>) -> Vec<usize> {
    ctx.lcs.iter().map(|s| s.len()).collect()
}

fn example_c(corpus: &Corpus) -> Outcome {
    let q = quotient(&corpus.c)?;
    let g = &q.pcp;
    let ctx = Context::new(g);
    let mut out = Checklist::new();
    out.push(Check::assert(
        "order-5^6",
        g.p() == 5 && g.n() == 6,
        json!({ "p": g.p(), "order_log": g.n() }),
    ));
    out.push(Check::assert(
        "stabilized-at-class-5",
        q.stabilized && q.class == 5,
        json!({ "class": q.class, "stabilized": q.stabilized }),
    ));
    let logs = lcs_logs(&ctx);
    out.push(Check::assert("lower-central-orders", logs == [6, 4, 3, 2, 1, 0], json!({ "logs": logs })));
    out.extend(verify_theorem_1(&ctx).map_err(verify_err)?);
    let class = classify_derived_subgroup(&ctx).map_err(verify_err)?;
    out.push(Check::assert("type-X", class.kind == DerivedType::X, json!({ "type": class.kind })));
    let pc = verify_power_central(&ctx).map_err(verify_err)?;
    out.push(Check::assert(
        "power-central-passes",
        pc.status("power-central") == Some(Status::Pass),
        json!(pc.checks),
    ));
    Ok(out)
}

fn example_a(corpus: &Corpus, opts: &Options) -> Outcome {
    let q = quotient(&corpus.a)?;
    let g = &q.pcp;
    let ctx = Context::new(g);
    let mut out = Checklist::new();
    out.push(Check::assert(
        "finite",
        q.stabilized,
        json!({ "order_log": g.n(), "class": q.class }),
    ));
    let g5 = ctx.gamma(5);
    out.push(Check::assert(
        "gamma5-equals-second-derived",
        g5 == ctx.derived(2) && !g5.is_trivial(),
        json!({ "gamma5_log": g5.len(), "second_derived_log": ctx.derived(2).len() }),
    ));
    let im = &q.images;
    let baaa = g.commutator(&[im[1].clone(), im[0].clone(), im[0].clone(), im[0].clone()]).unwrap();
    let target = g.induced_sequence(&[im[2].clone(), im[3].clone(), im[4].clone(), baaa]);
    let cent = g.centralizer(&ctx.gamma(2).gens());
    out.push(Check::assert(
        "centralizer-of-derived",
        cent.len() == target.len() && cent.contains_all(&target.gens()) && target.contains_all(&cent.gens()),
        json!({ "centralizer_log": cent.len(), "expected_log": target.len() }),
    ));
    let d = central_decomposition(&ctx).map_err(verify_err)?;
    out.push(Check::assert(
        "h-has-five-generators",
        d.h_gens.len() == 5,
        json!({ "h_generators": d.h_gens.len() }),
    ));
    out.extend(check_decomposition(&ctx, &d.h_gens, &d.u_gens));
    let subsets = subset_minimality(&ctx, &d.normalized.all(), 4);
    out.push(Check::assert(
        "four-subsets-fail",
        subsets.checks.iter().all(|c| c.status == Status::Pass),
        json!(subsets.checks),
    ));
    if opts.long {
        let planes = hyperplane_minimality(&ctx, &d.normalized.all());
        let count = |s: Status| planes.checks.iter().filter(|c| c.status == s).count();
        out.push(Check::assert(
            "hyperplanes-fail",
            count(Status::Pass) == planes.checks.len(),
            json!({
                "hyperplanes": planes.checks.len(),
                "failing": count(Status::Pass),
                "inconclusive": count(Status::Skipped),
                "valid": count(Status::Fail),
            }),
        ));
    }
    Ok(out)
}

fn example_b(corpus: &Corpus) -> Outcome {
    let q = quotient(&corpus.b)?;
    let g = &q.pcp;
    let ctx = Context::new(g);
    let im = &q.images;
    let (a, b, u1, u2, u3) = (&im[0], &im[1], &im[2], &im[3], &im[4]);
    let h1 = vec![a.clone(), b.clone(), u1.clone()];
    let f1 = vec![u2.clone(), u3.clone()];
    let h2 = vec![g.multiply(a, u3), b.clone(), u1.clone()];
    let f2 = vec![g.multiply(u1, &g.invert(u2)), u3.clone()];
    let mut out = Checklist::new();
    out.push(Check::assert("finite", q.stabilized, json!({ "order_log": g.n() })));
    let first = check_decomposition(&ctx, &h1, &f1);
    out.push(Check::assert("first-factorization", first.passed(), json!(first.checks)));
    let second = check_decomposition(&ctx, &h2, &f2);
    out.push(Check::assert("second-factorization", second.passed(), json!(second.checks)));
    out.push(compare("h1-vs-h2", &g.induced_sequence(&h1), &g.induced_sequence(&h2)));
    out.push(compare("u1-vs-u2", &g.induced_sequence(&f1), &g.induced_sequence(&f2)));
    Ok(out)
}

fn example_d(corpus: &Corpus) -> Outcome {
    let q = quotient(&corpus.d)?;
    let ctx = Context::new(&q.pcp);
    let mut out = Checklist::new();
    out.push(Check::assert("finite", q.stabilized, json!({ "order_log": q.pcp.n() })));
    let d = ctx.derived(1);
    out.push(Check::assert(
        "derived-order-3^4",
        q.pcp.p() == 3 && d.len() == 4,
        json!({ "derived_log": d.len() }),
    ));
    let class = classify_derived_subgroup(&ctx).map_err(verify_err)?;
    out.push(Check::assert("type-X", class.kind == DerivedType::X, json!({ "type": class.kind })));
    Ok(out)
}

fn example_e(corpus: &Corpus) -> Outcome {
    let q = quotient(&corpus.e)?;
    let ctx = Context::new(&q.pcp);
    let mut out = Checklist::new();
    let class = classify_derived_subgroup(&ctx).map_err(verify_err)?;
    out.push(Check::assert("type-Y", class.kind == DerivedType::Y, json!({ "type": class.kind })));
    let pc = verify_power_central(&ctx).map_err(verify_err)?;
    out.push(Check::assert(
        "power-central-passes",
        pc.status("power-central") == Some(Status::Pass),
        json!(pc.checks),
    ));
    let (d1, d2) = (ctx.derived(1), ctx.derived(2));
    let elementary = is_elementary_abelian_section(&d1, &d2).map_err(|e| e.to_string())?;
    out.push(Check::assert(
        "derived-quotient-elementary-rank-3",
        elementary && d1.len() - d2.len() == 3,
        json!({ "elementary": elementary, "rank": d1.len() - d2.len() }),
    ));
    Ok(out)
}

fn witness_w() -> Outcome {
    let w = w128();
    let ctx = Context::new(&w);
    let mut out = Checklist::new();
    out.push(Check::assert(
        "consistent",
        w.is_consistent(),
        json!({ "violations": w.consistency_violations().len() }),
    ));
    let (d1, d2) = (ctx.derived(1).len(), ctx.derived(2).len());
    out.push(Check::assert(
        "derived-quotient-2^3",
        d1 - d2 == 3 && d2 > 0,
        json!({ "derived_log": d1, "second_derived_log": d2 }),
    ));
    let refused = verify_theorem_1(&ctx);
    out.push(Check::assert(
        "theorem-1-refuses",
        refused == Err(VerifyError::PrimeTwo),
        json!({ "result": format!("{refused:?}") }),
    ));
    let perms = FiniteGroup::from_permutations(&w128_permutations());
    let sizes: Vec<usize> = perms.derived_series().iter().map(|s| s.len()).collect();
    let ours: Vec<usize> = ctx.derived.iter().map(|s| 1 << s.len()).collect();
    out.push(Check::assert(
        "permutation-group-agrees",
        perms.order() == 128 && sizes == ours,
        json!({ "permutation_sizes": sizes, "pc_sizes": ours }),
    ));
    Ok(out)
}

fn random_word(rng: &mut ChaCha8Rng, g: &PcPresentation) -> NormalWord {
    NormalWord::from_exponents(g.p(), (0..g.n()).map(|_| rng.gen_range(0..g.p())))
}

/// Quotients of `g` by lower exponent-p central terms, up to order `p^max_log`.
fn small_truncations(g: &PcPresentation, max_log: usize) -> Vec<PcPresentation> {
    (1..=g.class())
        .map(|c| g.count_up_to_weight(c))
        .filter(|&n| n <= max_log)
        .map(|n| g.truncate(n).expect("prefixes of a weighted presentation"))
        .collect()
}

fn table_and_series_agree(g: &PcPresentation) -> Result<bool, String> {
    let og = oracle(g, 1 << 20).ok_or("coset enumeration exceeded its cap")?;
    if og.order() as u128 != g.order().unwrap_or(0) {
        return Ok(false);
    }
    let all = g.whole().elements().map_err(|e| e.to_string())?;
    let map: Vec<_> = all.iter().map(|x| to_oracle(&og, x)).collect();
    for (x, &ox) in all.iter().zip(&map) {
        for (y, &oy) in all.iter().zip(&map) {
            if to_oracle(&og, &g.multiply(x, y)) != og.mul(ox, oy) {
                return Ok(false);
            }
        }
    }
    let same = |ours: Vec<InducedSequence<'_>>, theirs: Vec<std::collections::BTreeSet<u32>>| {
        ours.len() == theirs.len() && ours.iter().zip(&theirs).all(|(s, t)| image_set(&og, s) == *t)
    };
    Ok(same(g.lower_central_series(), og.lower_central_series()) && same(g.derived_series(), og.derived_series()))
}

fn property_suites(corpus: &Corpus, opts: &Options) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut groups = Vec::new();
    for (name, file) in corpus.entries() {
        groups.push((name.to_string(), quotient(file)?.pcp));
    }
    groups.push(("W".to_string(), w128()));
    let mut out = Checklist::new();

    for (name, g) in &groups {
        let mut bad = 0;
        for _ in 0..100 {
            let (x, y, z) = (random_word(&mut rng, g), random_word(&mut rng, g), random_word(&mut rng, g));
            if !g.hall_witt_residual(&x, &y, &z).is_identity() || !g.hall_witt_residual_alt(&x, &y, &z).is_identity() {
                bad += 1;
            }
        }
        out.push(Check::assert(format!("hall-witt-{name}"), bad == 0, json!({ "triples": 100, "failures": bad })));
        let mut bad = 0;
        for _ in 0..50 {
            let (x, y) = (random_word(&mut rng, g), random_word(&mut rng, g));
            let (r, sub) = g.collection_formula_residual(&x, &y).map_err(|e| e.to_string())?;
            if !sub.contains(&r) {
                bad += 1;
            }
        }
        out.push(Check::assert(
            format!("collection-formula-{name}"),
            bad == 0,
            json!({ "pairs": 50, "failures": bad }),
        ));
    }

    let mut tables = 0;
    for (name, g) in &groups {
        for t in small_truncations(g, 5) {
            let ok = table_and_series_agree(&t)?;
            tables += 1;
            out.push(Check::assert(
                format!("table-{name}-order-{}^{}", t.p(), t.n()),
                ok,
                json!({ "order_log": t.n() }),
            ));
        }
    }
    out.push(Check::assert("tables-compared", tables > 0, json!({ "groups": tables })));

    let mut small: Vec<(String, PcPresentation)> = Vec::new();
    for (name, g) in &groups {
        if g.p() == 3 {
            small.extend(small_truncations(g, 6).into_iter().map(|t| (name.clone(), t)));
        }
    }
    let mut seed = opts.seed;
    while small.len() < 12 {
        let case = fuzz::random_presentation(seed);
        seed += 1;
        if let Ok(q) = quotient(&case) {
            small.extend(small_truncations(&q.pcp, 6).into_iter().map(|t| (case.name.clone(), t)));
        }
    }
    for (name, g) in &small {
        let whole = g.whole();
        let mut subsets: Vec<(InducedSequence<'_>, Vec<NormalWord>)> = Vec::new();
        for i in 0..g.n() {
            subsets.push((whole.clone(), vec![g.gen(i)]));
        }
        for _ in 0..4 {
            subsets.push((whole.clone(), vec![random_word(&mut rng, g), random_word(&mut rng, g)]));
        }
        subsets.push((whole.clone(), g.generators()));
        let derived = g.gamma(2);
        subsets.push((derived.clone(), vec![random_word(&mut rng, g)]));
        subsets.push((derived.clone(), derived.gens()));
        let mut bad = 0;
        for (ambient, s) in &subsets {
            let fast = centralizer_lifting(ambient, s);
            let slow = centralizer_brute_force(ambient, s).map_err(|e| e.to_string())?;
            if fast != slow {
                bad += 1;
            }
        }
        out.push(Check::assert(
            format!("centralizers-{name}-order-3^{}", g.n()),
            bad == 0,
            json!({ "subsets": subsets.len(), "failures": bad }),
        ));
    }
    Ok(out)
}

fn fuzz_acceptance(opts: &Options) -> Outcome {
    let summary = fuzz::run(opts.seed, opts.fuzz_target, opts.fuzz_max_attempts);
    let mut out = Checklist::new();
    out.push(Check::assert(
        "enough-accepted",
        summary.accepted.len() >= 20,
        json!({ "accepted": summary.accepted.len(), "attempts": summary.attempts }),
    ));
    for case in &summary.accepted {
        out.push(Check::assert(
            format!("fuzz-{}", case.seed),
            case.passed(),
            json!({ "order_log": case.order_log, "checks": case.checklist.checks }),
        ));
    }
    Ok(out)
}
