//! Finite groups given by a full multiplication table, and subgroup
//! computations straight from the definitions.

use std::collections::{BTreeSet, HashMap, VecDeque};

pub type Elem = u32;

/// Composition `x` then `y` of permutations acting on the right.
pub fn compose(x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().map(|&i| y[i as usize]).collect()
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    /// Elements corresponding to the generators the group was built from.
    pub generators: Vec<Elem>,
}

impl FiniteGroup {
    /// The group generated by permutations of `0..degree`.
    pub fn from_permutations(gens: &[Vec<u32>]) -> Self {
        let degree = gens.first().map_or(0, |g| g.len());
        let id: Vec<u32> = (0..degree as u32).collect();
        let mut index: HashMap<Vec<u32>, Elem> = HashMap::new();
        let mut elems = vec![id.clone()];
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let y = compose(&elems[i], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len() as Elem);
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&compose(&elems[i], &elems[j])];
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Self::from_table(n, mul, generators)
    }

    /// The group acting regularly through `gens` on `0..order`, such as the
    /// generator permutations of a coset table over the trivial subgroup.
    /// Element `c` is the one sending point 0 to `c`.
    pub fn from_regular_action(gens: &[Vec<u32>]) -> Self {
        let n = gens.first().map_or(1, |g| g.len());
        let mut perm: Vec<Option<Vec<u32>>> = vec![None; n];
        perm[0] = Some((0..n as u32).collect());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for g in gens {
                let d = g[c] as usize;
                if perm[d].is_none() {
                    perm[d] = Some(compose(perm[c].as_ref().unwrap(), g));
                    queue.push_back(d);
                }
            }
        }
        let perm: Vec<Vec<u32>> = perm
            .into_iter()
            .map(|p| p.expect("action is transitive"))
            .collect();
        let mut mul = vec![0; n * n];
        for c in 0..n {
            for d in 0..n {
                mul[c * n + d] = perm[d][c];
            }
        }
        let generators = gens.iter().map(|g| g[0]).collect();
        Self::from_table(n, mul, generators)
    }

    fn from_table(order: usize, mul: Vec<Elem>, generators: Vec<Elem>) -> Self {
        let mut inv = vec![0; order];
        for i in 0..order {
            for j in 0..order {
                if mul[i * order + j] == 0 {
                    inv[i] = j as Elem;
                    break;
                }
            }
        }
        FiniteGroup {
            order,
            mul,
            inv,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.order + y as usize]
    }

    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x as usize]
    }

    /// `x^-1 y^-1 x y`.
    pub fn comm(&self, x: Elem, y: Elem) -> Elem {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_associative(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|y| {
                let xy = self.mul(x, y);
                self.elements()
                    .all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    /// Subgroup generated by `gens`, by breadth-first closure.
    pub fn closure(&self, gens: &[Elem]) -> BTreeSet<Elem> {
        let mut seen = BTreeSet::from([0]);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn whole(&self) -> BTreeSet<Elem> {
        self.elements().collect()
    }

    /// Subgroup generated by all `[x, y]`, `x` in `a`, `y` in `b`.
    pub fn commutator_subgroup(&self, a: &BTreeSet<Elem>, b: &BTreeSet<Elem>) -> BTreeSet<Elem> {
        let mut comms = BTreeSet::new();
        for &x in a {
            for &y in b {
                comms.insert(self.comm(x, y));
            }
        }
        let gens: Vec<Elem> = comms.into_iter().collect();
        self.closure(&gens)
    }

    pub fn lower_central_series(&self) -> Vec<BTreeSet<Elem>> {
        let g = self.whole();
        let mut out = vec![g.clone()];
        while out.last().unwrap().len() > 1 {
            let next = self.commutator_subgroup(out.last().unwrap(), &g);
            if next.len() == out.last().unwrap().len() {
                break;
            }
            out.push(next);
        }
        out
    }

    pub fn derived_series(&self) -> Vec<BTreeSet<Elem>> {
        let mut out = vec![self.whole()];
        while out.last().unwrap().len() > 1 {
            let last = out.last().unwrap();
            let next = self.commutator_subgroup(last, last);
            if next.len() == last.len() {
                break;
            }
            out.push(next);
        }
        out
    }

    /// Elements commuting with every element of `s`.
    pub fn centralizer(&self, s: &[Elem]) -> BTreeSet<Elem> {
        self.elements()
            .filter(|&x| s.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    pub fn center(&self) -> BTreeSet<Elem> {
        let all: Vec<Elem> = self.elements().collect();
        self.centralizer(&all)
    }

    /// Evaluates a word in the generators (`g + 1` / `-(g + 1)` letters).
    pub fn evaluate(&self, word: &[i32]) -> Elem {
        word.iter().fold(0, |acc, &l| {
            let g = self.generators[l.unsigned_abs() as usize - 1];
            self.mul(acc, if l > 0 { g } else { self.inv(g) })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::todd_coxeter::enumerate;

    #[test]
    fn dihedral_group_of_order_eight() {
        let r = vec![1, 2, 3, 0];
        let s = vec![0, 3, 2, 1];
        let g = FiniteGroup::from_permutations(&[r, s]);
        assert_eq!(g.order(), 8);
        assert!(g.is_associative());
        assert_eq!(g.center().len(), 2);
        let lcs: Vec<usize> = g.lower_central_series().iter().map(|s| s.len()).collect();
        assert_eq!(lcs, vec![8, 2, 1]);
    }

    #[test]
    fn regular_action_matches_permutation_closure() {
        let rels = vec![vec![1, 1], vec![2, 2, 2], vec![1, 2, 1, 2]];
        let t = enumerate(2, &rels, &[], 100).unwrap();
        let gens: Vec<Vec<u32>> = (0..2).map(|g| t.permutation(g)).collect();
        let reg = FiniteGroup::from_regular_action(&gens);
        assert_eq!(reg.order(), 6);
        assert!(reg.is_associative());
        for r in &rels {
            assert_eq!(reg.evaluate(r), 0);
        }
        assert_eq!(reg.derived_series().iter().map(|s| s.len()).collect::<Vec<_>>(), vec![6, 3, 1]);
    }
}
