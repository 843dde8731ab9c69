mod common;

use common::*;
use pgroup_core::{FpPresentation, FreeWord, NormalWord, PcPresentation};
use pgroup_verify::*;

fn images(fp: &FpPresentation) -> (PcPresentation, Vec<NormalWord>) {
    let q = quotient_with_images(fp);
    (q.pcp, q.images)
}

#[test]
fn hypotheses_on_the_corpus() {
    for fp in [example_a(), example_b(), example_c(), example_d(), example_e()] {
        let g = quotient(&fp);
        let report = hypothesis_check(&Context::new(&g));
        assert!(report.satisfied, "{report:?}");
        assert_eq!(report.derived_quotient_log, 3);
        assert_eq!(report.second_derived_log, 1);
    }
    let w = w128();
    let report = hypothesis_check(&Context::new(&w));
    assert!(!report.p_odd);
    assert!(!report.satisfied);
    let x27 = PcPresentation::elementary_abelian(3, 2).unwrap();
    assert!(!hypothesis_check(&Context::new(&x27)).satisfied);
}

#[test]
fn theorem_1_and_hall_bounds() {
    for fp in [example_a(), example_b(), example_c(), example_d(), example_e()] {
        let g = quotient(&fp);
        let ctx = Context::new(&g);
        let t1 = verify_theorem_1(&ctx).unwrap();
        assert!(t1.passed());
        assert_eq!(t1.checks.len(), 4);
        let hall = verify_hall_bounds(&ctx);
        assert!(hall.checks.iter().all(|c| c.status == Status::Pass), "{hall:?}");
    }
    let w = w128();
    let ctx = Context::new(&w);
    assert_eq!(verify_theorem_1(&ctx), Err(VerifyError::PrimeTwo));
    assert_eq!(VerifyError::PrimeTwo.to_string(), "theorem requires p >= 3");
    let hall = verify_hall_bounds(&ctx);
    assert_eq!(hall.status("derived-quotient-at-least-p3"), Some(Status::Pass));
    assert_eq!(hall.status("lower-bound-attained"), Some(Status::Pass));
    assert_eq!(hall.status("second-derived-order-p"), Some(Status::NotApplicable));

    let x27 = pgroup_core::PcpBuilder::new(3, vec![1, 1, 2])
        .comm(1, 0, &[(2, 1)])
        .build()
        .unwrap();
    let hall = verify_hall_bounds(&Context::new(&x27));
    assert!(hall.checks.iter().all(|c| c.status == Status::NotApplicable));
    assert!(matches!(verify_theorem_1(&Context::new(&x27)), Err(VerifyError::Hypothesis(_))));
}

#[test]
fn transfer_lemma() {
    let (g, im) = images(&example_a());
    let ctx = Context::new(&g);
    let whole = verify_transfer_lemma(&ctx, &g.generators());
    assert!(whole.passed());
    assert_eq!(whole.status("precondition"), Some(Status::Pass));
    let ab = verify_transfer_lemma(&ctx, &im[..2]);
    assert!(ab.passed());
    assert_eq!(ab.status("precondition"), Some(Status::Pass));
    assert_eq!(ab.checks.len(), 2 + ctx.class());
    let uu = verify_transfer_lemma(&ctx, &im[2..4]);
    assert_eq!(uu.status("precondition"), Some(Status::NotApplicable));
    assert_eq!(uu.checks.len(), 1);
}

#[test]
fn generator_reduction() {
    let (g, im) = images(&example_a());
    let red = reduce_generators(&Context::new(&g)).unwrap();
    assert_eq!(red.case, ReductionCase::Cyclic);
    assert_eq!(red.gens, im[..2].to_vec());

    let c = quotient(&example_c());
    let red = reduce_generators(&Context::new(&c)).unwrap();
    assert_eq!(c.induced_sequence(&red.gens), c.whole());

    let ab = PcPresentation::elementary_abelian(3, 2).unwrap();
    assert_eq!(reduce_generators(&Context::new(&ab)), Err(VerifyError::Degenerate));

    // G'/gamma_3 elementary of rank 2
    let mut fp = FpPresentation::free(3, 3).unwrap();
    fp.relators = (0..3).map(|i| FreeWord::gen_pow(i, 3)).collect();
    fp.relators.push(FreeWord::comm_of_gens(&[1, 2]));
    let g = pgroup_core::p_quotient(&fp, 2).unwrap().pcp;
    let ctx = Context::new(&g);
    let red = reduce_generators(&ctx).unwrap();
    assert_eq!(red.case, ReductionCase::ElementaryRank2);
    assert_eq!(red.gens.len(), 3);
    assert!(!red.searched);
    assert!(verify_transfer_lemma(&ctx, &red.gens).passed());

    // rank 3 fits neither case
    let free = pgroup_core::p_quotient(&FpPresentation::free(3, 3).unwrap(), 2).unwrap().pcp;
    assert!(matches!(reduce_generators(&Context::new(&free)), Err(VerifyError::Shape(_))));
}

#[test]
fn standard_pairs() {
    let (c, im) = images(&example_c());
    let ctx = Context::new(&c);
    assert_eq!(standard_pair(&ctx).unwrap(), (im[0].clone(), im[1].clone()));
    assert!(ctx.comm(&[&im[1], &im[0], &im[1]]).is_identity());

    for fp in [example_d(), example_e()] {
        let g = quotient(&fp);
        let ctx = Context::new(&g);
        let (a, b) = standard_pair(&ctx).unwrap();
        assert!(is_standard_pair(&ctx, &a, &b));
        assert!(ctx.independent_mod_frattini(&[a, b]).unwrap());
    }

    let a = quotient(&example_a());
    assert!(matches!(standard_pair(&Context::new(&a)), Err(VerifyError::Shape(_))));
    let w = w128();
    assert_eq!(standard_pair(&Context::new(&w)), Err(VerifyError::PrimeTwo));
}

#[test]
fn normalized_generating_sets() {
    for (fp, r) in [(example_a(), 3), (example_b(), 3), (example_c(), 0), (example_e(), 0)] {
        let g = quotient(&fp);
        let ctx = Context::new(&g);
        let n = normalize_generating_set(&ctx).unwrap();
        assert_eq!(n.us.len(), r);
        assert!(check_normalized(&ctx, &n).unwrap().passed());
    }
}

#[test]
fn decomposition_of_example_c_is_trivial() {
    let c = quotient(&example_c());
    let ctx = Context::new(&c);
    let d = central_decomposition(&ctx).unwrap();
    assert_eq!(c.induced_sequence(&d.h_gens), c.whole());
    assert!(c.induced_sequence(&d.u_gens).is_subgroup_of(&c.center()));
    // the factorization with U = Z(G) is equally valid
    assert!(check_decomposition(&ctx, &d.h_gens, &c.center().gens()).passed());
}

#[test]
fn example_a_needs_five_generators() {
    let g = quotient(&example_a());
    let ctx = Context::new(&g);
    let d = central_decomposition(&ctx).unwrap();
    assert_eq!(d.h_gens.len(), 5);
    assert!(check_decomposition(&ctx, &d.h_gens, &d.u_gens).passed());
    let minimal = subset_minimality(&ctx, &d.normalized.all(), 4);
    assert_eq!(minimal.checks.len(), 5);
    assert!(minimal.checks.iter().all(|c| c.status == Status::Pass), "{minimal:?}");
}

fn mul(g: &PcPresentation, xs: &[&NormalWord]) -> NormalWord {
    g.product(xs.iter().copied())
}

#[test]
fn example_b_factorizations() {
    let (g, im) = images(&example_b());
    let ctx = Context::new(&g);
    let (a, b, u1, u2, u3) = (&im[0], &im[1], &im[2], &im[3], &im[4]);
    let h1 = vec![a.clone(), b.clone(), u1.clone()];
    let u1s = vec![u2.clone(), u3.clone()];
    let h2 = vec![mul(&g, &[a, u3]), b.clone(), u1.clone()];
    let u2s = vec![mul(&g, &[u1, &g.invert(u2)]), u3.clone()];
    assert!(check_decomposition(&ctx, &h1, &u1s).passed());
    assert!(check_decomposition(&ctx, &h2, &u2s).passed());

    let d = central_decomposition(&ctx).unwrap();
    assert!(check_decomposition(&ctx, &d.h_gens, &d.u_gens).passed());

    let hs = compare("h", &g.induced_sequence(&h1), &g.induced_sequence(&h2));
    let us = compare("u", &g.induced_sequence(&u1s), &g.induced_sequence(&u2s));
    assert_eq!(hs.status, Status::Pass, "{hs:?}");
    assert_eq!(us.status, Status::Pass, "{us:?}");
}

#[test]
fn derived_subgroup_types() {
    for (fp, kind) in [(example_c(), DerivedType::X), (example_d(), DerivedType::X), (example_e(), DerivedType::Y)] {
        let g = quotient(&fp);
        let class = classify_derived_subgroup(&Context::new(&g)).unwrap();
        assert_eq!(class.kind, kind);
        assert!(class.checklist.passed());
    }
    let w = w128();
    assert_eq!(classify_derived_subgroup(&Context::new(&w)), Err(VerifyError::PrimeTwo));
}

#[test]
fn power_centrality() {
    let expect = [
        (example_c(), Status::Pass),
        (example_d(), Status::NotApplicable),
        (example_e(), Status::Pass),
        (example_b(), Status::Skipped),
    ];
    for (fp, status) in expect {
        let g = quotient(&fp);
        let out = verify_power_central(&Context::new(&g)).unwrap();
        assert_eq!(out.status("power-central"), Some(status), "{out:?}");
    }
}

#[test]
fn checklist_json_uses_kebab_case() {
    let w = w128();
    let hall = verify_hall_bounds(&Context::new(&w));
    let text = serde_json::to_string(&hall).unwrap();
    assert!(text.contains("\"not-applicable\""));
    let back: Checklist = serde_json::from_str(&text).unwrap();
    assert_eq!(back, hall);
}
