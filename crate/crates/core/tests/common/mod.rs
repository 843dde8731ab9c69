#![allow(dead_code)]

use pgroup_core::{FpPresentation, FreeWord, NormalWord, PcPresentation, PcpBuilder};
use pgroup_oracle::{enumerate, Elem, FiniteGroup};

pub fn x27() -> PcPresentation {
    PcpBuilder::new(3, vec![1, 1, 2]).comm(1, 0, &[(2, 1)]).build().unwrap()
}

/// Exponent-25 group of order 125: `[b, a] = a^5`.
pub fn y125() -> PcPresentation {
    PcpBuilder::new(5, vec![1, 1, 2])
        .power(0, &[(2, 1)])
        .comm(1, 0, &[(2, 1)])
        .build()
        .unwrap()
}

pub fn c9_x_c3() -> PcPresentation {
    PcpBuilder::new(3, vec![1, 1, 2]).power(0, &[(2, 1)]).build().unwrap()
}

/// Sylow 2-subgroup of S8 and the permutations of its pc generators.
pub fn w128() -> (PcPresentation, Vec<Vec<u32>>) {
    let g = PcpBuilder::new(2, vec![1, 1, 1, 2, 2, 3, 4])
        .comm(1, 0, &[(5, 1)])
        .comm(2, 0, &[(3, 1)])
        .comm(2, 1, &[(4, 1)])
        .comm(3, 1, &[(5, 1)])
        .comm(4, 0, &[(5, 1)])
        .comm(4, 3, &[(6, 1)])
        .comm(5, 2, &[(6, 1)])
        .build()
        .unwrap();
    let perms = vec![
        vec![1, 0, 2, 3, 4, 5, 6, 7],
        vec![2, 3, 0, 1, 4, 5, 6, 7],
        vec![4, 5, 6, 7, 0, 1, 2, 3],
        vec![1, 0, 2, 3, 5, 4, 6, 7],
        vec![2, 3, 0, 1, 6, 7, 4, 5],
        vec![1, 0, 3, 2, 4, 5, 6, 7],
        vec![1, 0, 3, 2, 5, 4, 7, 6],
    ];
    (g, perms)
}

fn c(ix: &[usize]) -> FreeWord {
    FreeWord::comm_of_gens(ix)
}

fn pw(i: usize, e: i64) -> FreeWord {
    FreeWord::gen_pow(i, e)
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

const A: usize = 0;
const B: usize = 1;
const U1: usize = 2;
const U2: usize = 3;
const U3: usize = 4;

pub fn example_a() -> FpPresentation {
    let rels = vec![
        pw(A, 5),
        pw(B, 5),
        pw(U1, 5),
        pw(U2, 5),
        pw(U3, 5),
        c(&[B, A, B]),
        c(&[B, A, A, A, A]),
        c(&[B, A, A, A, B]).mul(c(&[A, U1])),
        c(&[A, U2]),
        c(&[A, U3]),
        c(&[B, U1]),
        c(&[B, A, A, A]).mul(c(&[B, U2])),
        c(&[B, U3]),
        c(&[U1, U2]),
        c(&[U1, U3]),
        c(&[B, A, A, A, B]).mul(c(&[U2, U3])),
    ];
    FpPresentation::new(5, names(&["a", "b", "u1", "u2", "u3"]), rels, vec![]).unwrap()
}

pub fn example_b() -> FpPresentation {
    let rels = vec![
        pw(A, 5),
        pw(B, 5),
        pw(U1, 125),
        pw(U2, 25),
        pw(U3, 25),
        c(&[B, A, B]),
        c(&[B, A, A, A, A]),
        c(&[B, A, A, A, B]).mul(c(&[A, U1])),
        c(&[A, U2]),
        c(&[B, U1]),
        c(&[B, U2]),
        c(&[U1, U2]),
        c(&[U3, A]),
        c(&[U3, B]),
        c(&[U3, U1]),
        c(&[B, A, A, A, B]).mul(c(&[U3, U2])),
    ];
    FpPresentation::new(5, names(&["a", "b", "u1", "u2", "u3"]), rels, vec![]).unwrap()
}

pub fn example_c() -> FpPresentation {
    let rels = vec![pw(A, 5), pw(B, 5), c(&[B, A, B]), c(&[B, A, A, A, A])];
    FpPresentation::new(5, names(&["a", "b"]), rels, vec![]).unwrap()
}

pub fn example_d() -> FpPresentation {
    let rels = vec![
        pw(A, 9),
        pw(B, 9),
        c(&[A, B]).pow(3),
        c(&[B, A, B]),
        c(&[B, A, A, A, A]),
    ];
    FpPresentation::new(3, names(&["a", "b"]), rels, vec![]).unwrap()
}

pub fn example_e() -> FpPresentation {
    let rels = vec![pw(A, 25), pw(B, 25), c(&[B, A, B]), c(&[B, A, A, A, A])];
    let relations = vec![(c(&[B, A]).pow(5), c(&[B, A, A, A, B]))];
    FpPresentation::new(5, names(&["a", "b"]), rels, relations).unwrap()
}

/// Relators of the pc presentation as words for coset enumeration.
pub fn pcp_relators(g: &PcPresentation) -> Vec<Vec<i32>> {
    let letters = |w: &NormalWord| -> Vec<i32> {
        w.letters()
            .flat_map(|(i, e)| std::iter::repeat_n(i as i32 + 1, e as usize))
            .collect()
    };
    let inverse = |w: Vec<i32>| -> Vec<i32> { w.into_iter().rev().map(|l| -l).collect() };
    let mut out = Vec::new();
    for i in 0..g.n() {
        let a = i as i32 + 1;
        let mut r = vec![a; g.p() as usize];
        r.extend(inverse(letters(g.power_tail(i))));
        out.push(r);
        for j in 0..i {
            let b = j as i32 + 1;
            let mut r = vec![-a, -b, a, b];
            r.extend(inverse(letters(g.comm_tail(i, j))));
            out.push(r);
        }
    }
    out
}

/// The group defined by the relations of `g`, built by coset enumeration.
pub fn oracle(g: &PcPresentation) -> FiniteGroup {
    let table = enumerate(g.n(), &pcp_relators(g), &[], 200_000).expect("coset enumeration finishes");
    let gens: Vec<Vec<u32>> = (0..g.n()).map(|i| table.permutation(i)).collect();
    FiniteGroup::from_regular_action(&gens)
}

/// The oracle element named by a normal word.
pub fn to_oracle(og: &FiniteGroup, w: &NormalWord) -> Elem {
    let word: Vec<i32> = w
        .letters()
        .flat_map(|(i, e)| std::iter::repeat_n(i as i32 + 1, e as usize))
        .collect();
    og.evaluate(&word)
}

/// Map from oracle elements to normal words, checking it is a bijection.
pub fn normal_form_map(g: &PcPresentation, og: &FiniteGroup) -> Vec<NormalWord> {
    let elems = g.whole().elements().unwrap();
    assert_eq!(elems.len(), og.order());
    let mut back = vec![None; og.order()];
    for w in elems {
        let e = to_oracle(og, &w) as usize;
        assert!(back[e].is_none(), "two normal words name the same element");
        back[e] = Some(w);
    }
    back.into_iter().map(Option::unwrap).collect()
}
