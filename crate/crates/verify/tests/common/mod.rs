#![allow(dead_code)]

use pgroup_core::{p_quotient, FpPresentation, FreeWord, PcPresentation, PcpBuilder, QuotientResult};

/// Sylow 2-subgroup of S8.
pub fn w128() -> PcPresentation {
    PcpBuilder::new(2, vec![1, 1, 1, 2, 2, 3, 4])
        .comm(1, 0, &[(5, 1)])
        .comm(2, 0, &[(3, 1)])
        .comm(2, 1, &[(4, 1)])
        .comm(3, 1, &[(5, 1)])
        .comm(4, 0, &[(5, 1)])
        .comm(4, 3, &[(6, 1)])
        .comm(5, 2, &[(6, 1)])
        .build()
        .unwrap()
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

/// The largest class-6 quotient; it stabilizes for every example.
pub fn quotient_with_images(fp: &FpPresentation) -> QuotientResult {
    let q = p_quotient(fp, 6).unwrap();
    assert!(q.stabilized);
    q
}

pub fn quotient(fp: &FpPresentation) -> PcPresentation {
    quotient_with_images(fp).pcp
}
