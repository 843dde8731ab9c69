mod common;

use common::*;
use pgroup_core::{enforce, p_cover, p_quotient, Definition, Error, FpPresentation, FreeWord, PcpBuilder};
use proptest::prelude::*;

#[test]
fn covers_of_small_groups() {
    let cp = PcpBuilder::new(5, vec![1]).define(0, Definition::Generator { of: 0 }).build().unwrap();
    let c = p_cover(&cp).unwrap();
    assert_eq!(c.pcp.n(), 2);
    assert_eq!(c.pcp.whole().exponent().unwrap(), 25);

    let v = pgroup_core::PcPresentation::elementary_abelian(5, 2).unwrap();
    let c = p_cover(&v).unwrap();
    assert_eq!(c.pcp.order(), Some(5u128.pow(5)));
    assert!(c.pcp.is_consistent());
    // the new generators are central
    let z = c.pcp.center();
    for i in c.first_tail..c.pcp.n() {
        assert!(z.contains(&c.pcp.gen(i)));
    }

    let class1 = p_quotient(&example_c(), 1).unwrap();
    assert_eq!(p_cover(&class1.pcp).unwrap().pcp.n(), 5);
}

#[test]
fn enforcing_relators() {
    let fp = FpPresentation::new(
        3,
        vec!["a".into()],
        vec![FreeWord::gen(0).mul(FreeWord::gen_pow(0, -1))],
        vec![],
    )
    .unwrap();
    let q1 = p_quotient(&fp, 1).unwrap();
    let mut cover = p_cover(&q1.pcp).unwrap();
    cover.images = q1.images.iter().map(|w| {
        let mut e = w.exponents().to_vec();
        e.resize(cover.pcp.n(), 0);
        cover.pcp.word(&e).unwrap()
    }).collect();
    let out = enforce(&cover, &fp).unwrap();
    assert_eq!(out.cover.pcp, cover.pcp);

    let q2 = p_quotient(&example_c(), 2).unwrap();
    assert_eq!(q2.pcp.n(), 3);
    assert_eq!(q2.steps[1].relator_ranks[..2], [1, 1]);
}

#[test]
fn relation_of_example_e_consumes_a_tail_at_class_five() {
    let q = p_quotient(&example_e(), 6).unwrap();
    let step = q.steps.iter().find(|s| s.class == 5).unwrap();
    assert_eq!(*step.relator_ranks.last().unwrap(), 1);
}

#[test]
fn example_quotients() {
    let q = p_quotient(&FpPresentation::free(3, 2).unwrap(), 1).unwrap();
    assert_eq!(q.pcp.order(), Some(9));

    let q = p_quotient(&example_c(), 6).unwrap();
    assert_eq!(q.pcp.order(), Some(5u128.pow(6)));
    assert_eq!(q.class, 5);
    assert!(q.stabilized);

    let q = p_quotient(&example_d(), 6).unwrap();
    assert!(q.stabilized);
    assert_eq!(q.pcp.derived_series()[1].len(), 4);

    for fp in [example_a(), example_b(), example_e()] {
        assert!(p_quotient(&fp, 6).unwrap().stabilized);
    }
}

#[test]
fn results_are_consistent_and_satisfy_relators() {
    for fp in [example_a(), example_b(), example_c(), example_d(), example_e()] {
        let mut previous = None;
        for class in 1..=6 {
            let q = p_quotient(&fp, class).unwrap();
            assert!(q.pcp.is_consistent());
            for r in fp.all_relators() {
                assert!(q.pcp.evaluate(&r, &q.images).unwrap().is_identity());
            }
            if let Some(prev) = previous.replace(q.pcp.clone()) {
                let keep = q.pcp.count_up_to_weight(class - 1);
                assert_eq!(q.pcp.truncate(keep).unwrap(), prev);
            }
        }
    }
}

#[test]
fn free_class_two_quotients() {
    // No relators: 2 generators, 2 power tails and one commutator.
    for p in [3, 5] {
        let q = p_quotient(&FpPresentation::free(p, 2).unwrap(), 2).unwrap();
        assert_eq!(q.pcp.n(), 5);
    }
    let fp = FpPresentation::new(
        3,
        vec!["a".into(), "b".into()],
        vec![FreeWord::gen_pow(0, 3), FreeWord::gen_pow(1, 3)],
        vec![],
    )
    .unwrap();
    assert_eq!(p_quotient(&fp, 2).unwrap().pcp.n(), 3);
}

#[test]
fn generator_cap_is_reported() {
    let err = p_quotient(&FpPresentation::free(2, 8).unwrap(), 2).unwrap_err();
    assert!(matches!(err, Error::GeneratorCap { needed: 44, .. }));
}

#[test]
fn bad_input_is_rejected() {
    assert!(FpPresentation::new(3, vec!["a".into()], vec![FreeWord::gen(1)], vec![]).is_err());
    assert!(FpPresentation::new(4, vec!["a".into()], vec![], vec![]).is_err());
    assert!(p_quotient(&example_c(), 0).is_err());
}

fn random_relator() -> impl Strategy<Value = FreeWord> {
    prop_oneof![
        (0usize..2, prop_oneof![Just(3i64), Just(9)]).prop_map(|(g, e)| FreeWord::gen_pow(g, e)),
        (prop::collection::vec(0usize..2, 2..5), 1i64..3)
            .prop_map(|(ix, e)| FreeWord::comm_of_gens(&ix).pow(e)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_quotients_are_consistent(rels in prop::collection::vec(random_relator(), 1..5)) {
        let fp = FpPresentation::new(3, vec!["a".into(), "b".into()], rels, vec![]).unwrap();
        let q = match p_quotient(&fp, 4) {
            Ok(q) => q,
            Err(Error::GeneratorCap { .. }) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        prop_assert!(q.pcp.is_consistent());
        for r in fp.all_relators() {
            prop_assert!(q.pcp.evaluate(&r, &q.images).unwrap().is_identity());
        }
    }
}
