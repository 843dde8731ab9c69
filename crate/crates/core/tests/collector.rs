mod common;

use common::*;
use pgroup_core::{p_quotient, FreeWord, NormalWord, PcPresentation};
use proptest::prelude::*;

/// Every product computed by the collector agrees with the oracle table.
fn assert_table_matches(g: &PcPresentation) {
    let og = oracle(g);
    assert_eq!(og.order() as u128, g.order().unwrap());
    let words = normal_form_map(g, &og);
    for x in og.elements() {
        for y in og.elements() {
            let prod = g.multiply(&words[x as usize], &words[y as usize]);
            assert_eq!(prod, words[og.mul(x, y) as usize]);
        }
    }
}

#[test]
fn x27_table_matches_oracle() {
    let g = x27();
    assert_table_matches(&g);
    let og = oracle(&g);
    assert!(og.is_associative());
    let x = g.multiply(&g.gen(0), &g.gen(1));
    assert!(g.power(&x, 3).is_identity());
}

#[test]
fn x27_collector_is_associative_on_all_triples() {
    let g = x27();
    let all = g.whole().elements().unwrap();
    for x in &all {
        for y in &all {
            let xy = g.multiply(x, y);
            for z in &all {
                assert_eq!(g.multiply(&xy, z), g.multiply(x, &g.multiply(y, z)));
            }
        }
    }
}

#[test]
fn small_groups_match_oracle() {
    assert_table_matches(&y125());
    assert_table_matches(&c9_x_c3());
    assert_table_matches(&w128().0);
    for class in 2..=3 {
        assert_table_matches(&p_quotient(&example_c(), class).unwrap().pcp);
    }
    assert_table_matches(&p_quotient(&example_d(), 2).unwrap().pcp);
}

#[test]
fn w128_matches_permutations() {
    let (g, perms) = w128();
    assert!(g.is_consistent());
    let og = pgroup_oracle::FiniteGroup::from_permutations(&perms);
    assert_eq!(og.order(), 128);
    for r in pcp_relators(&g) {
        assert_eq!(og.evaluate(&r), og.identity());
    }
}

#[test]
fn negative_exponents_collect_through_inverses() {
    let g = y125();
    let w = FreeWord::gen_pow(0, -3).mul(FreeWord::gen_pow(1, 7));
    let expected = g.multiply(&g.power(&g.invert(&g.gen(0)), 3), &g.power(&g.gen(1), 7));
    assert_eq!(g.collect(&w).unwrap(), expected);
}

fn groups() -> Vec<PcPresentation> {
    vec![
        x27(),
        y125(),
        w128().0,
        p_quotient(&example_c(), 6).unwrap().pcp,
        p_quotient(&example_d(), 6).unwrap().pcp,
        p_quotient(&example_a(), 6).unwrap().pcp,
    ]
}

fn element(g: &PcPresentation, seed: &[u32]) -> NormalWord {
    g.word(&seed[..g.n()].iter().map(|e| e % g.p()).collect::<Vec<_>>())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms(which in 0usize..6, a in prop::collection::vec(0u32..1000, 16),
                    b in prop::collection::vec(0u32..1000, 16), c in prop::collection::vec(0u32..1000, 16)) {
        let g = &groups()[which];
        let (x, y, z) = (element(g, &a), element(g, &b), element(g, &c));
        prop_assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
        prop_assert_eq!(g.multiply(&x, &g.identity()), x.clone());
        prop_assert_eq!(g.multiply(&g.identity(), &x), x.clone());
        prop_assert!(g.multiply(&g.invert(&x), &x).is_identity());
        prop_assert!(g.multiply(&x, &g.invert(&x)).is_identity());
        // xy = yx[x,y]
        prop_assert_eq!(g.multiply(&x, &y), g.multiply(&g.multiply(&y, &x), &g.comm(&x, &y)));
        prop_assert!(g.hall_witt_residual(&x, &y, &z).is_identity());
        prop_assert!(g.power(&x, (g.p() as i64).pow(g.element_order_log(&x))).is_identity());
    }
}
