//! Consistency checks for pc presentations with all relative orders `p`.
//!
//! The presentation defines a group of order `p^n` exactly when the
//! following words collect to the same normal form along both routes:
//!
//! * `a_k a_j a_i` for `k > j > i`;
//! * `a_j^p a_i` for `j > i`;
//! * `a_j a_i^p` for `j > i`;
//! * `a_i^{p+1}` for every `i`.

use serde::{Deserialize, Serialize};

use crate::pcp::PcPresentation;
use crate::word::NormalWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// `(a_k a_j) a_i = a_k (a_j a_i)`
    Associativity,
    /// `(a_j^p) a_i = a_j^{p-1} (a_j a_i)`
    PowerLeft,
    /// `a_j (a_i^p) = (a_j a_i) a_i^{p-1}`
    PowerRight,
    /// `a_i (a_i^p) = (a_i^p) a_i`
    PowerSelf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: CheckId,
    /// Generator indices of the test word, largest first.
    pub generators: Vec<usize>,
    pub lhs: NormalWord,
    pub rhs: NormalWord,
    /// `lhs^{-1} rhs` as computed by the (inconsistent) collector.
    pub residual: NormalWord,
}

/// Both collections of one test word.
#[derive(Clone, Debug)]
pub struct TestPair {
    pub check: CheckId,
    pub generators: Vec<usize>,
    pub lhs: NormalWord,
    pub rhs: NormalWord,
}

impl PcPresentation {
    /// Evaluates every consistency test whose generators all lie below
    /// `limit`.
    pub fn consistency_tests(&self, limit: usize) -> Vec<TestPair> {
        let p = self.p();
        let limit = limit.min(self.n());
        let gen = |i: usize| self.gen(i);
        let mut out = Vec::new();
        for k in 0..limit {
            for j in 0..k {
                let akaj = self.multiply(&gen(k), &gen(j));
                for i in 0..j {
                    let lhs = self.multiply_letter(&akaj, i, 1);
                    let ajai = self.multiply(&gen(j), &gen(i));
                    let rhs = self.multiply(&gen(k), &ajai);
                    out.push(TestPair {
                        check: CheckId::Associativity,
                        generators: vec![k, j, i],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        for j in 0..limit {
            let pj = self.power_tail(j);
            for i in 0..j {
                let lhs = self.multiply(pj, &gen(i));
                let top = self.power(&gen(j), p as i64 - 1);
                let rhs = self.multiply(&top, &self.multiply(&gen(j), &gen(i)));
                out.push(TestPair {
                    check: CheckId::PowerLeft,
                    generators: vec![j, i],
                    lhs,
                    rhs,
                });
                let lhs = self.multiply(&gen(j), self.power_tail(i));
                let rhs = self.multiply_letter(&self.multiply(&gen(j), &gen(i)), i, p - 1);
                out.push(TestPair {
                    check: CheckId::PowerRight,
                    generators: vec![j, i],
                    lhs,
                    rhs,
                });
            }
        }
        for i in 0..limit {
            let pi = self.power_tail(i);
            out.push(TestPair {
                check: CheckId::PowerSelf,
                generators: vec![i],
                lhs: self.multiply(&gen(i), pi),
                rhs: self.multiply_letter(pi, i, 1),
            });
        }
        out
    }

    /// All failing consistency tests; empty iff the presentation is
    /// consistent.
    pub fn consistency_violations(&self) -> Vec<Violation> {
        self.consistency_tests(self.n())
            .into_iter()
            .filter(|t| t.lhs != t.rhs)
            .map(|t| Violation {
                residual: self.multiply(&self.invert(&t.lhs), &t.rhs),
                check: t.check,
                generators: t.generators,
                lhs: t.lhs,
                rhs: t.rhs,
            })
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency_tests(self.n())
            .iter()
            .all(|t| t.lhs == t.rhs)
    }
}
