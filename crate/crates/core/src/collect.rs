//! Collection from the left and the element arithmetic built on it.
//!
//! A product is held as a collected prefix (an exponent vector) followed by a
//! stack of uncollected letters `a_k^m`. The leftmost uncollected letter is
//! moved into the prefix: the part of the prefix above `k` that does not
//! commute with `a_k` is lifted off, conjugated by `a_k` and pushed back as
//! letters, and overflowing exponents are replaced by their power relation.
//! Every rewrite introduces only generators of larger index, so the process
//! terminates.

use crate::error::{Error, Result};
use crate::pcp::PcPresentation;
use crate::word::{FreeWord, Letter, NormalWord};

impl PcPresentation {
    /// Runs the collector until no uncollected letters remain.
    pub(crate) fn collect_stack(&self, e: &mut [u32], stack: &mut Vec<(u32, u32)>) {
        let p = self.p();
        let n = e.len();
        while let Some((k, m)) = stack.pop() {
            let k = k as usize;
            let blocked = self.noncommuting_above[k].iter().any(|&i| e[i] != 0);
            if !blocked {
                let s = e[k] + m;
                if s < p {
                    e[k] = s;
                    continue;
                }
                e[k] = s - p;
                let pw = &self.power_letters[k];
                if pw.is_empty() {
                    continue;
                }
                // a_k^p must land before the (commuting) tail
                for j in (k + 1..n).rev() {
                    if e[j] != 0 {
                        stack.push((j as u32, e[j]));
                        e[j] = 0;
                    }
                }
                stack.extend(pw.iter().rev().copied());
                continue;
            }
            if m > 1 {
                stack.push((k as u32, m - 1));
            }
            for j in (k + 1..n).rev() {
                let t = e[j];
                if t == 0 {
                    continue;
                }
                e[j] = 0;
                let w = &self.comm_letters[j][k];
                if w.is_empty() {
                    stack.push((j as u32, t));
                } else {
                    // (a_j^{a_k})^t with a_j^{a_k} = a_j [a_j, a_k]
                    for _ in 0..t {
                        stack.extend(w.iter().rev().copied());
                        stack.push((j as u32, 1));
                    }
                }
            }
            e[k] += 1;
            if e[k] == p {
                e[k] = 0;
                stack.extend(self.power_letters[k].iter().rev().copied());
            }
        }
    }

    fn push_word(stack: &mut Vec<(u32, u32)>, v: &NormalWord) {
        for (i, &x) in v.exponents().iter().enumerate().rev() {
            if x != 0 {
                stack.push((i as u32, x));
            }
        }
    }

    /// `u * v` in normal form.
    pub fn multiply(&self, u: &NormalWord, v: &NormalWord) -> NormalWord {
        debug_assert_eq!(u.len(), self.n());
        debug_assert_eq!(v.len(), self.n());
        let mut e = u.clone();
        let mut stack = Vec::with_capacity(4 * self.n());
        Self::push_word(&mut stack, v);
        self.collect_stack(e.exponents_mut(), &mut stack);
        e
    }

    /// `u * a_k^m` for a single letter, `0 < m < p`.
    pub fn multiply_letter(&self, u: &NormalWord, k: usize, m: u32) -> NormalWord {
        let mut e = u.clone();
        let mut stack = vec![(k as u32, m % self.p())];
        if m.is_multiple_of(self.p()) {
            stack.clear();
        }
        self.collect_stack(e.exponents_mut(), &mut stack);
        e
    }

    /// `u^{-1}`: the exponents are found position by position, each step
    /// clearing the current leading entry of `u * x`.
    pub fn invert(&self, u: &NormalWord) -> NormalWord {
        let p = self.p();
        let n = self.n();
        let mut e = u.clone();
        let mut x = vec![0u32; n];
        let mut stack = Vec::with_capacity(4 * n);
        for i in 0..n {
            let c = e.exponents()[i];
            if c != 0 {
                x[i] = p - c;
                stack.push((i as u32, p - c));
                self.collect_stack(e.exponents_mut(), &mut stack);
            }
        }
        debug_assert!(e.is_identity());
        NormalWord::from_vec_unchecked(x)
    }

    /// `u^k` for any integer `k`.
    pub fn power(&self, u: &NormalWord, k: i64) -> NormalWord {
        let mut base = if k < 0 { self.invert(u) } else { u.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `[u, v] = u^{-1} v^{-1} u v`, computed as `(vu)^{-1} (uv)`.
    pub fn comm(&self, u: &NormalWord, v: &NormalWord) -> NormalWord {
        let uv = self.multiply(u, v);
        let vu = self.multiply(v, u);
        self.multiply(&self.invert(&vu), &uv)
    }

    /// Left-normed commutator `[x_1, ..., x_k] = [[x_1, x_2], ..., x_k]`.
    pub fn commutator(&self, args: &[NormalWord]) -> Result<NormalWord> {
        if args.len() < 2 {
            return Err(Error::CommutatorArity(args.len()));
        }
        for a in args {
            self.check_word(a)?;
        }
        let mut acc = self.comm(&args[0], &args[1]);
        for x in &args[2..] {
            acc = self.comm(&acc, x);
        }
        Ok(acc)
    }

    /// `u^v = v^{-1} u v`.
    pub fn conjugate(&self, u: &NormalWord, v: &NormalWord) -> NormalWord {
        self.multiply(&self.invert(v), &self.multiply(u, v))
    }

    /// Collects a word over the generators of this presentation.
    pub fn collect(&self, w: &FreeWord) -> Result<NormalWord> {
        let gens = self.generators();
        self.evaluate(w, &gens)
    }

    /// Evaluates a word whose generator indices refer to `images`.
    pub fn evaluate(&self, w: &FreeWord, images: &[NormalWord]) -> Result<NormalWord> {
        let mut acc = self.identity();
        for letter in &w.letters {
            let value = match letter {
                Letter::Gen { index, exp } => {
                    let img = images.get(*index).ok_or(Error::UnknownGenerator {
                        index: *index,
                        count: images.len(),
                    })?;
                    if *exp == 0 {
                        return Err(Error::InvalidArgument("zero exponent".into()));
                    }
                    self.power(img, *exp)
                }
                Letter::Comm { args, exp } => {
                    let vals = args
                        .iter()
                        .map(|a| self.evaluate(a, images))
                        .collect::<Result<Vec<_>>>()?;
                    let c = self.commutator(&vals)?;
                    self.power(&c, *exp)
                }
            };
            acc = self.multiply(&acc, &value);
        }
        Ok(acc)
    }

    /// Smallest `k` with `x^(p^k) = 1`.
    pub fn element_order_log(&self, x: &NormalWord) -> u32 {
        let mut k = 0;
        let mut y = x.clone();
        while !y.is_identity() {
            y = self.power(&y, self.p() as i64);
            k += 1;
        }
        k
    }

    /// Product of a list of words, left to right.
    pub fn product<'a>(&self, words: impl IntoIterator<Item = &'a NormalWord>) -> NormalWord {
        words
            .into_iter()
            .fold(self.identity(), |acc, w| self.multiply(&acc, w))
    }
}

#[cfg(test)]
mod tests {
    use crate::pcp::PcpBuilder;
    use crate::word::{FreeWord, NormalWord};

    use super::*;

    fn x27() -> PcPresentation {
        PcpBuilder::new(3, vec![1, 1, 2])
            .comm(1, 0, &[(2, 1)])
            .build()
            .unwrap()
    }

    fn w(g: &PcPresentation, e: &[u32]) -> NormalWord {
        g.word(e).unwrap()
    }

    #[test]
    fn normal_words_are_fixed_points() {
        let g = x27();
        for e in [[1, 2, 0], [0, 0, 2], [2, 2, 2]] {
            let word = FreeWord {
                letters: w(&g, &e)
                    .letters()
                    .map(|(i, x)| crate::word::Letter::Gen { index: i, exp: x as i64 })
                    .collect(),
            };
            assert_eq!(g.collect(&word).unwrap(), w(&g, &e));
        }
    }

    #[test]
    fn swapping_generators_creates_commutator() {
        let g = x27();
        let word = FreeWord::gen(1).mul(FreeWord::gen(0));
        assert_eq!(g.collect(&word).unwrap(), w(&g, &[1, 1, 1]));
        assert_eq!(g.multiply(&g.gen(1), &g.gen(0)), w(&g, &[1, 1, 1]));
    }

    #[test]
    fn cube_of_product_is_trivial_in_exponent_three_group() {
        let g = x27();
        let word = FreeWord::gen(0).mul(FreeWord::gen(1)).pow(3);
        assert!(g.collect(&word).unwrap().is_identity());
        assert!(g.power(&g.gen(0), 3).is_identity());
    }

    #[test]
    fn identity_and_inverse() {
        let g = x27();
        let u = w(&g, &[2, 1, 1]);
        assert_eq!(g.multiply(&u, &g.identity()), u);
        assert!(g.multiply(&g.invert(&u), &u).is_identity());
        assert_eq!(g.power(&u, -1), g.invert(&u));
    }

    #[test]
    fn commutator_arity_and_value() {
        let g = x27();
        assert_eq!(g.commutator(&[g.gen(1), g.gen(0)]).unwrap(), g.gen(2));
        assert!(g.commutator(&[g.gen(1)]).is_err());
        let ab = PcPresentation::elementary_abelian(3, 2).unwrap();
        assert!(ab.commutator(&[ab.gen(0), ab.gen(1)]).unwrap().is_identity());
    }

    #[test]
    fn unknown_generator_is_reported() {
        let g = x27();
        assert!(matches!(
            g.collect(&FreeWord::gen(7)),
            Err(Error::UnknownGenerator { index: 7, .. })
        ));
    }

    #[test]
    fn cyclic_group_of_order_nine() {
        let g = PcpBuilder::new(3, vec![1, 2]).power(0, &[(1, 1)]).build().unwrap();
        assert_eq!(g.power(&g.gen(0), 3), g.gen(1));
        assert!(g.power(&g.gen(0), 9).is_identity());
        assert_eq!(g.element_order_log(&g.gen(0)), 2);
        assert_eq!(g.power(&g.gen(0), -1), w(&g, &[2, 2]));
    }
}
