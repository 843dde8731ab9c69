//! Weighted power-commutator presentations.
//!
//! Generators are numbered from 0. The presentation stores
//!
//! * `a_i^p = power(i)` with support strictly above `i`;
//! * `[a_i, a_j] = comm(i, j)` for `i > j`, with support strictly above `i`.
//!
//! Every relative order is `p`, so a consistent presentation on `n`
//! generators defines a group of order `p^n`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::NormalWord;

/// How a generator first arose during a p-quotient computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Definition {
    /// Image of the abstract generator with this index (weight 1).
    Generator { of: usize },
    /// `a_of^p`.
    Power { of: usize },
    /// `[a_left, a_right]` with `left > right`.
    Commutator { left: usize, right: usize },
}

pub(crate) type Letters = Vec<(u32, u32)>;

#[derive(Clone, Debug)]
pub struct PcPresentation {
    p: u32,
    weights: Vec<u32>,
    power: Vec<NormalWord>,
    /// `comm[i][j]` for `j < i`.
    comm: Vec<Vec<NormalWord>>,
    definitions: Vec<Option<Definition>>,
    // Collector tables derived from the relations above.
    pub(crate) power_letters: Vec<Letters>,
    pub(crate) comm_letters: Vec<Vec<Letters>>,
    /// For each `k`, the generators `i > k` with `[a_i, a_k] != 1`.
    pub(crate) noncommuting_above: Vec<Vec<usize>>,
}

impl PartialEq for PcPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.weights == other.weights
            && self.power == other.power
            && self.comm == other.comm
            && self.definitions == other.definitions
    }
}

impl Eq for PcPresentation {}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl PcPresentation {
    pub fn new(
        p: u32,
        weights: Vec<u32>,
        power: Vec<NormalWord>,
        comm: Vec<Vec<NormalWord>>,
        definitions: Vec<Option<Definition>>,
    ) -> Result<Self> {
        let n = weights.len();
        let bad = |msg: String| Err(Error::InvalidPresentation(msg));
        if !is_prime(p) || p >= 1 << 16 {
            return bad(format!("{p} is not a supported prime"));
        }
        if power.len() != n || comm.len() != n || definitions.len() != n {
            return bad("relation tables do not match the generator count".into());
        }
        if weights.contains(&0) {
            return bad("weights must be positive".into());
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return bad("weights must weakly increase with the generator index".into());
        }
        for (i, w) in power.iter().enumerate() {
            check_word(p, n, w, i, &format!("power relation of generator {i}"))?;
        }
        for (i, row) in comm.iter().enumerate() {
            if row.len() != i {
                return bad(format!("commutator row {i} has {} entries", row.len()));
            }
            for (j, w) in row.iter().enumerate() {
                check_word(p, n, w, i, &format!("commutator [{i},{j}]"))?;
            }
        }
        for (k, d) in definitions.iter().enumerate() {
            match *d {
                Some(Definition::Power { of }) if of >= k => {
                    return bad(format!("generator {k} defined as a power of a later generator"))
                }
                Some(Definition::Commutator { left, right }) if left >= k || right >= left => {
                    return bad(format!("generator {k} has an ill-formed commutator definition"))
                }
                _ => {}
            }
        }
        let power_letters = power.iter().map(to_letters).collect();
        let comm_letters: Vec<Vec<Letters>> = comm
            .iter()
            .map(|row| row.iter().map(to_letters).collect())
            .collect();
        let mut noncommuting_above = vec![Vec::new(); n];
        for (i, row) in comm.iter().enumerate() {
            for (k, w) in row.iter().enumerate() {
                if !w.is_identity() {
                    noncommuting_above[k].push(i);
                }
            }
        }
        Ok(PcPresentation {
            p,
            weights,
            power,
            comm,
            definitions,
            power_letters,
            comm_letters,
            noncommuting_above,
        })
    }

    /// The elementary abelian group of order `p^n`, all generators of weight 1.
    pub fn elementary_abelian(p: u32, n: usize) -> Result<Self> {
        PcpBuilder::new(p, vec![1; n]).build()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    /// Largest weight present (0 for the trivial group).
    pub fn class(&self) -> u32 {
        self.weights.last().copied().unwrap_or(0)
    }

    pub fn power_tail(&self, i: usize) -> &NormalWord {
        &self.power[i]
    }

    /// `[a_i, a_j]` for `i > j`.
    pub fn comm_tail(&self, i: usize, j: usize) -> &NormalWord {
        &self.comm[i][j]
    }

    pub fn definitions(&self) -> &[Option<Definition>] {
        &self.definitions
    }

    pub fn definition(&self, i: usize) -> Option<Definition> {
        self.definitions[i]
    }

    /// `log_p |G|`.
    pub fn order_log(&self) -> usize {
        self.n()
    }

    /// `|G|`, or `None` if it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.n() as u32)
    }

    pub fn identity(&self) -> NormalWord {
        NormalWord::identity(self.n())
    }

    pub fn gen(&self, i: usize) -> NormalWord {
        NormalWord::generator(self.n(), i)
    }

    pub fn generators(&self) -> Vec<NormalWord> {
        (0..self.n()).map(|i| self.gen(i)).collect()
    }

    /// Wraps an exponent vector after checking its length.
    pub fn word(&self, exps: &[u32]) -> Result<NormalWord> {
        if exps.len() != self.n() {
            return Err(Error::WordLength {
                expected: self.n(),
                found: exps.len(),
            });
        }
        Ok(NormalWord::from_exponents(self.p, exps.iter().copied()))
    }

    pub fn check_word(&self, w: &NormalWord) -> Result<()> {
        if w.len() != self.n() {
            return Err(Error::WordLength {
                expected: self.n(),
                found: w.len(),
            });
        }
        Ok(())
    }

    /// Presentation of the quotient by the generators with index `>= keep`
    /// (they must span a normal subgroup, which holds for any suffix).
    pub fn truncate(&self, keep: usize) -> Result<Self> {
        let cut = |w: &NormalWord| NormalWord::from_vec_unchecked(w.exponents()[..keep].to_vec());
        PcPresentation::new(
            self.p,
            self.weights[..keep].to_vec(),
            self.power[..keep].iter().map(cut).collect(),
            self.comm[..keep]
                .iter()
                .map(|row| row.iter().map(cut).collect())
                .collect(),
            self.definitions[..keep].to_vec(),
        )
    }

    /// Number of generators of weight at most `w`.
    pub fn count_up_to_weight(&self, w: u32) -> usize {
        self.weights.iter().take_while(|&&x| x <= w).count()
    }

    pub fn to_json(&self) -> PcpJson {
        let mut power_tails = BTreeMap::new();
        for (i, w) in self.power.iter().enumerate() {
            if !w.is_identity() {
                power_tails.insert(i.to_string(), w.exponents().to_vec());
            }
        }
        let mut comm_tails = BTreeMap::new();
        for (i, row) in self.comm.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                if !w.is_identity() {
                    comm_tails.insert(format!("{i},{j}"), w.exponents().to_vec());
                }
            }
        }
        let definitions = self
            .definitions
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|d| (i.to_string(), d)))
            .collect();
        PcpJson {
            p: self.p,
            n: self.n(),
            weights: self.weights.clone(),
            power_tails,
            comm_tails,
            definitions,
        }
    }

    pub fn from_json(doc: &PcpJson) -> Result<Self> {
        let n = doc.n;
        let p = doc.p;
        if doc.weights.len() != n {
            return Err(Error::InvalidPresentation(format!(
                "{} weights for {n} generators",
                doc.weights.len()
            )));
        }
        let parse_index = |s: &str| -> Result<usize> {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Serialization(format!("bad index key {s:?}")))
        };
        let to_word = |v: &Vec<u32>| -> Result<NormalWord> {
            if v.len() != n || v.iter().any(|&e| e >= p) {
                return Err(Error::Serialization(format!("bad exponent vector {v:?}")));
            }
            Ok(NormalWord::from_vec_unchecked(v.clone()))
        };
        let mut b = PcpBuilder::new(p, doc.weights.clone());
        for (k, v) in &doc.power_tails {
            let i = parse_index(k)?;
            if i >= n {
                return Err(Error::UnknownGenerator { index: i, count: n });
            }
            b.power[i] = to_word(v)?;
        }
        for (k, v) in &doc.comm_tails {
            let (a, c) = k
                .split_once(',')
                .ok_or_else(|| Error::Serialization(format!("bad commutator key {k:?}")))?;
            let (i, j) = (parse_index(a)?, parse_index(c)?);
            if i >= n || j >= i {
                return Err(Error::Serialization(format!("commutator key {k:?} out of range")));
            }
            b.comm[i][j] = to_word(v)?;
        }
        for (k, d) in &doc.definitions {
            let i = parse_index(k)?;
            if i >= n {
                return Err(Error::UnknownGenerator { index: i, count: n });
            }
            b.definitions[i] = Some(*d);
        }
        b.build()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("pcp serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: PcpJson = serde_json::from_str(s).map_err(|e| Error::Serialization(e.to_string()))?;
        Self::from_json(&doc)
    }
}

fn check_word(p: u32, n: usize, w: &NormalWord, i: usize, what: &str) -> Result<()> {
    if w.len() != n {
        return Err(Error::InvalidPresentation(format!("{what}: wrong length")));
    }
    if w.exponents().iter().any(|&e| e >= p) {
        return Err(Error::InvalidPresentation(format!("{what}: unreduced exponent")));
    }
    if !w.supported_above(i) {
        return Err(Error::InvalidPresentation(format!(
            "{what}: tail must involve only generators after {i}"
        )));
    }
    Ok(())
}

fn to_letters(w: &NormalWord) -> Letters {
    w.letters().map(|(i, e)| (i as u32, e)).collect()
}

/// On-disk form of a presentation; NormalWords are plain exponent arrays.
/// Only nontrivial tails are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcpJson {
    pub p: u32,
    pub n: usize,
    pub weights: Vec<u32>,
    pub power_tails: BTreeMap<String, Vec<u32>>,
    pub comm_tails: BTreeMap<String, Vec<u32>>,
    pub definitions: BTreeMap<String, Definition>,
}

/// Incremental construction with sparse relation words.
#[derive(Clone, Debug)]
pub struct PcpBuilder {
    p: u32,
    weights: Vec<u32>,
    power: Vec<NormalWord>,
    comm: Vec<Vec<NormalWord>>,
    definitions: Vec<Option<Definition>>,
}

impl PcpBuilder {
    pub fn new(p: u32, weights: Vec<u32>) -> Self {
        let n = weights.len();
        PcpBuilder {
            p,
            power: vec![NormalWord::identity(n); n],
            comm: (0..n).map(|i| vec![NormalWord::identity(n); i]).collect(),
            definitions: vec![None; n],
            weights,
        }
    }

    /// `a_i^p = prod a_k^e` over the given `(k, e)` pairs.
    pub fn power(mut self, i: usize, word: &[(usize, u32)]) -> Self {
        let n = self.weights.len();
        self.power[i] = NormalWord::from_sparse(self.p, n, word);
        self
    }

    /// `[a_i, a_j] = prod a_k^e` for `i > j`.
    pub fn comm(mut self, i: usize, j: usize, word: &[(usize, u32)]) -> Self {
        assert!(i > j, "commutator relations are stored for i > j");
        let n = self.weights.len();
        self.comm[i][j] = NormalWord::from_sparse(self.p, n, word);
        self
    }

    pub fn define(mut self, i: usize, d: Definition) -> Self {
        self.definitions[i] = Some(d);
        self
    }

    pub fn build(self) -> Result<PcPresentation> {
        PcPresentation::new(self.p, self.weights, self.power, self.comm, self.definitions)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x27() -> PcPresentation {
        PcpBuilder::new(3, vec![1, 1, 2])
            .comm(1, 0, &[(2, 1)])
            .build()
            .unwrap()
    }

    #[test]
    fn rejects_tail_below_its_generator() {
        let err = PcpBuilder::new(3, vec![1, 1, 2]).comm(2, 0, &[(1, 1)]).build();
        assert!(err.is_err());
        let err = PcpBuilder::new(3, vec![1, 1]).power(1, &[(0, 1)]).build();
        assert!(err.is_err());
    }

    #[test]
    fn rejects_decreasing_weights_and_composite_modulus() {
        assert!(PcpBuilder::new(3, vec![2, 1]).build().is_err());
        assert!(PcpBuilder::new(4, vec![1]).build().is_err());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let g = PcpBuilder::new(5, vec![1, 1, 2, 3])
            .power(0, &[(2, 1)])
            .comm(1, 0, &[(2, 1), (3, 4)])
            .comm(2, 0, &[(3, 1)])
            .define(0, Definition::Generator { of: 0 })
            .define(1, Definition::Generator { of: 1 })
            .define(2, Definition::Commutator { left: 1, right: 0 })
            .define(3, Definition::Commutator { left: 2, right: 0 })
            .build()
            .unwrap();
        let text = g.to_json_string();
        let back = PcPresentation::from_json_str(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json_string(), text);
    }

    #[test]
    fn truncation_drops_higher_generators() {
        let g = x27();
        let q = g.truncate(2).unwrap();
        assert_eq!(q.n(), 2);
        assert!(q.comm_tail(1, 0).is_identity());
        assert_eq!(g.count_up_to_weight(1), 2);
        assert_eq!(g.class(), 2);
    }
}
