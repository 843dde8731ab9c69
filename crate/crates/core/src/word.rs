use std::fmt;

use serde::{Deserialize, Serialize};

/// A group element in collected normal form `a_0^e_0 a_1^e_1 ... a_{n-1}^e_{n-1}`
/// with every exponent in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalWord(Vec<u32>);

impl NormalWord {
    pub fn identity(n: usize) -> Self {
        NormalWord(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        NormalWord(v)
    }

    /// Wraps an exponent vector; entries are reduced mod `p`.
    pub fn from_exponents(p: u32, exps: impl IntoIterator<Item = u32>) -> Self {
        NormalWord(exps.into_iter().map(|e| e % p).collect())
    }

    /// Sparse constructor: `(index, exponent)` pairs over `n` generators.
    pub fn from_sparse(p: u32, n: usize, entries: &[(usize, u32)]) -> Self {
        let mut v = vec![0; n];
        for &(i, e) in entries {
            v[i] = e % p;
        }
        NormalWord(v)
    }

    pub(crate) fn from_vec_unchecked(v: Vec<u32>) -> Self {
        NormalWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut Vec<u32> {
        &mut self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Index of the first nonzero exponent, `None` for the identity.
    pub fn depth(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0)
    }

    pub fn leading_exponent(&self) -> Option<u32> {
        self.depth().map(|d| self.0[d])
    }

    /// Nonzero entries as `(generator, exponent)` letters in index order.
    pub fn letters(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e))
    }

    /// Support lies strictly above `i`.
    pub fn supported_above(&self, i: usize) -> bool {
        self.0[..=i.min(self.0.len().saturating_sub(1))]
            .iter()
            .all(|&e| e == 0)
    }
}

impl fmt::Debug for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.letters() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "g{}", i + 1)?;
            } else {
                write!(f, "g{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// One factor of a [`FreeWord`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    /// A generator raised to a nonzero power.
    Gen { index: usize, exp: i64 },
    /// A left-normed commutator `[w_1, ..., w_k]` raised to a nonzero power.
    Comm { args: Vec<FreeWord>, exp: i64 },
}

/// An uncollected product of generator powers and left-normed commutators.
/// Generator indices refer either to a pc presentation or to the abstract
/// generators of a finite presentation, depending on context.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeWord {
    pub letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn gen(index: usize) -> Self {
        Self::gen_pow(index, 1)
    }

    pub fn gen_pow(index: usize, exp: i64) -> Self {
        assert!(exp != 0, "zero exponent");
        FreeWord {
            letters: vec![Letter::Gen { index, exp }],
        }
    }

    /// Left-normed commutator of the arguments.
    pub fn comm(args: Vec<FreeWord>) -> Self {
        assert!(args.len() >= 2, "commutator needs two arguments");
        FreeWord {
            letters: vec![Letter::Comm { args, exp: 1 }],
        }
    }

    /// Left-normed commutator of generators, e.g. `[b,a,a]` from `&[1,0,0]`.
    pub fn comm_of_gens(indices: &[usize]) -> Self {
        Self::comm(indices.iter().map(|&i| FreeWord::gen(i)).collect())
    }

    pub fn mul(mut self, other: FreeWord) -> Self {
        self.letters.extend(other.letters);
        self
    }

    /// `self^k`. A single-letter word keeps its shape (exponents multiply);
    /// longer products are repeated, inverted when `k < 0`.
    pub fn pow(self, k: i64) -> Self {
        assert!(k != 0, "zero exponent");
        if self.letters.len() == 1 {
            let letter = match self.letters.into_iter().next().unwrap() {
                Letter::Gen { index, exp } => Letter::Gen { index, exp: exp * k },
                Letter::Comm { args, exp } => Letter::Comm { args, exp: exp * k },
            };
            return FreeWord {
                letters: vec![letter],
            };
        }
        let base = if k < 0 { self.inverse() } else { self };
        let mut out = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(base.clone());
        }
        out
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| match l {
                    Letter::Gen { index, exp } => Letter::Gen {
                        index: *index,
                        exp: -exp,
                    },
                    Letter::Comm { args, exp } => Letter::Comm {
                        args: args.clone(),
                        exp: -exp,
                    },
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index referenced anywhere in the word.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters
            .iter()
            .filter_map(|l| match l {
                Letter::Gen { index, .. } => Some(*index),
                Letter::Comm { args, .. } => args.iter().filter_map(|a| a.max_generator()).max(),
            })
            .max()
    }

    /// Checks the structural invariants: nonzero exponents, commutators with
    /// at least two arguments.
    pub fn validate(&self) -> Result<(), String> {
        for l in &self.letters {
            match l {
                Letter::Gen { exp, .. } if *exp == 0 => return Err("zero exponent".into()),
                Letter::Comm { args, exp } => {
                    if *exp == 0 {
                        return Err("zero exponent".into());
                    }
                    if args.len() < 2 {
                        return Err(format!("commutator with {} argument(s)", args.len()));
                    }
                    for a in args {
                        a.validate()?;
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_and_leading_exponent() {
        let w = NormalWord::from_exponents(5, [0, 0, 3, 1]);
        assert_eq!(w.depth(), Some(2));
        assert_eq!(w.leading_exponent(), Some(3));
        assert!(NormalWord::identity(4).depth().is_none());
        assert!(w.supported_above(1));
        assert!(!w.supported_above(2));
    }

    #[test]
    fn free_word_power_and_inverse() {
        let w = FreeWord::gen(0).mul(FreeWord::gen_pow(1, 2));
        let inv = w.inverse();
        assert_eq!(
            inv.letters,
            vec![Letter::Gen { index: 1, exp: -2 }, Letter::Gen { index: 0, exp: -1 }]
        );
        assert_eq!(w.clone().pow(2).letters.len(), 4);
        assert_eq!(FreeWord::gen(3).pow(-5).letters, vec![Letter::Gen { index: 3, exp: -5 }]);
        assert_eq!(FreeWord::comm_of_gens(&[1, 0, 2]).max_generator(), Some(2));
    }

    #[test]
    fn validate_rejects_short_brackets() {
        let bad = FreeWord {
            letters: vec![Letter::Comm {
                args: vec![FreeWord::gen(0)],
                exp: 1,
            }],
        };
        assert!(bad.validate().is_err());
        assert!(FreeWord::comm_of_gens(&[0, 1]).validate().is_ok());
    }
}
