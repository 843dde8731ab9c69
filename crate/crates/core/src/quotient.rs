//! The p-quotient algorithm.
//!
//! Starting from the trivial group, each step forms a covering presentation
//! by attaching a fresh central generator of order `p` (a tail) to every
//! relation that is not a definition, and to the image of every abstract
//! generator that does not define a pc generator. Consistency of the cover
//! and the relators of the finite presentation then give linear equations
//! in the tails; solving them eliminates tails, and the survivors form the
//! next layer of the exponent-p central series.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::FpPresentation;
use crate::limits::{max_generators, MAX_GENERATORS_VAR};
use crate::linalg::{neg_mod, FpMatrix};
use crate::pcp::{Definition, PcPresentation};
use crate::word::NormalWord;

/// A presentation whose generators from `first_tail` on are central tails of
/// order `p`, together with the images of the abstract generators.
#[derive(Clone, Debug)]
pub struct Cover {
    pub pcp: PcPresentation,
    pub first_tail: usize,
    pub images: Vec<NormalWord>,
}

impl Cover {
    pub fn tail_count(&self) -> usize {
        self.pcp.n() - self.first_tail
    }

    fn split<'w>(&self, w: &'w NormalWord) -> (&'w [u32], &'w [u32]) {
        w.exponents().split_at(self.first_tail)
    }

    /// Kills the tail combinations given by `rows` (vectors over the tails),
    /// highest tail index first, and renumbers the survivors.
    fn eliminate(&self, rows: Vec<Vec<u32>>) -> Result<Cover> {
        let p = self.pcp.p();
        let t = self.tail_count();
        let reversed: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|mut r| {
                r.reverse();
                r
            })
            .collect();
        let ech = FpMatrix::from_residue_rows(p, t, reversed).echelonize();
        if ech.rank == 0 {
            return Ok(self.clone());
        }
        // killed tail -> its value as a vector over all tails
        let mut value: Vec<Option<Vec<u32>>> = vec![None; t];
        for (r, &c) in ech.pivots.iter().enumerate() {
            let killed = t - 1 - c;
            let mut v = vec![0; t];
            for c2 in c + 1..t {
                let x = ech.matrix.get(r, c2);
                if x != 0 {
                    v[t - 1 - c2] = neg_mod(x, p);
                }
            }
            value[killed] = Some(v);
        }
        let survivors: Vec<usize> = (0..t).filter(|&k| value[k].is_none()).collect();
        let old = self.first_tail;
        let n_new = old + survivors.len();
        let subst = |w: &NormalWord| -> NormalWord {
            let (head, tail) = self.split(w);
            let mut acc = tail.to_vec();
            for k in 0..t {
                if let (Some(v), e) = (&value[k], tail[k]) {
                    if e != 0 {
                        for (a, &b) in acc.iter_mut().zip(v) {
                            *a = (*a + e * b) % p;
                        }
                    }
                }
            }
            let mut out = head.to_vec();
            out.extend(survivors.iter().map(|&k| acc[k]));
            NormalWord::from_vec_unchecked(out)
        };
        let g = &self.pcp;
        let pad = |w: NormalWord| -> NormalWord {
            let mut e = w.into_exponents();
            e.resize(n_new, 0);
            NormalWord::from_vec_unchecked(e)
        };
        let mut power = Vec::with_capacity(n_new);
        let mut comm = Vec::with_capacity(n_new);
        for i in 0..old {
            power.push(subst(g.power_tail(i)));
            comm.push((0..i).map(|j| subst(g.comm_tail(i, j))).collect());
        }
        for i in old..n_new {
            power.push(NormalWord::identity(n_new));
            comm.push(vec![NormalWord::identity(n_new); i]);
        }
        let mut weights = g.weights()[..old].to_vec();
        let mut definitions = g.definitions()[..old].to_vec();
        for &k in &survivors {
            weights.push(g.weight(old + k));
            definitions.push(g.definition(old + k));
        }
        let pcp = PcPresentation::new(p, weights, power, comm, definitions)?;
        let images = self.images.iter().map(|w| pad(subst(w))).collect();
        Ok(Cover {
            pcp,
            first_tail: old,
            images,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Power(usize),
    Comm(usize, usize),
    Image(usize),
}

/// Weight of the relation in a slot, for ordering; images go last.
fn slot_key(g: &PcPresentation, s: Slot) -> (u32, u8, usize, usize) {
    match s {
        Slot::Power(i) => (g.weight(i) + 1, 0, i, 0),
        Slot::Comm(i, j) => (g.weight(i) + g.weight(j), 1, i, j),
        Slot::Image(k) => (u32::MAX, 2, k, 0),
    }
}

/// Definitions with weight-1 gaps filled as images of abstract generators.
fn effective_definitions(g: &PcPresentation) -> Result<Vec<Definition>> {
    (0..g.n())
        .map(|i| match g.definition(i) {
            Some(d) => Ok(d),
            None if g.weight(i) == 1 => Ok(Definition::Generator { of: i }),
            None => Err(Error::MissingDefinition(i)),
        })
        .collect()
}

/// Relations and images that receive a tail, in tail order.
fn tail_slots(g: &PcPresentation, defs: &[Definition], image_count: usize) -> Vec<Slot> {
    let mut slots = Vec::new();
    for i in 0..g.n() {
        if !defs.contains(&Definition::Power { of: i }) {
            slots.push(Slot::Power(i));
        }
        for j in 0..i {
            if !defs.contains(&Definition::Commutator { left: i, right: j }) {
                slots.push(Slot::Comm(i, j));
            }
        }
    }
    for k in 0..image_count {
        if !defs.contains(&Definition::Generator { of: k }) {
            slots.push(Slot::Image(k));
        }
    }
    slots.sort_by_key(|&s| slot_key(g, s));
    slots
}

/// Attaches tails and enforces consistency. `images` are the images of the
/// abstract generators; those not defining a pc generator get a tail too.
/// Also returns the number of tails before consistency.
fn cover_with_images(g: &PcPresentation, images: &[NormalWord]) -> Result<(Cover, usize)> {
    let p = g.p();
    let n = g.n();
    let defs = effective_definitions(g)?;
    let slots = tail_slots(g, &defs, images.len());
    let t = slots.len();
    let m = n + t;
    let widen = |w: &NormalWord, tail: Option<usize>| {
        let mut e = w.exponents().to_vec();
        e.resize(m, 0);
        if let Some(k) = tail {
            e[n + k] = 1;
        }
        NormalWord::from_vec_unchecked(e)
    };
    let find = |s: Slot| slots.iter().position(|&x| x == s);
    let mut power = Vec::with_capacity(m);
    let mut comm = Vec::with_capacity(m);
    for i in 0..n {
        power.push(widen(g.power_tail(i), find(Slot::Power(i))));
        comm.push(
            (0..i)
                .map(|j| widen(g.comm_tail(i, j), find(Slot::Comm(i, j))))
                .collect::<Vec<_>>(),
        );
    }
    for i in n..m {
        power.push(NormalWord::identity(m));
        comm.push(vec![NormalWord::identity(m); i]);
    }
    let next_weight = g.class() + 1;
    let mut weights = g.weights().to_vec();
    weights.resize(m, next_weight);
    let mut definitions: Vec<Option<Definition>> = defs.into_iter().map(Some).collect();
    definitions.extend(slots.iter().map(|s| {
        Some(match *s {
            Slot::Power(i) => Definition::Power { of: i },
            Slot::Comm(i, j) => Definition::Commutator { left: i, right: j },
            Slot::Image(k) => Definition::Generator { of: k },
        })
    }));
    let pcp = PcPresentation::new(p, weights, power, comm, definitions)?;
    let images = images
        .iter()
        .enumerate()
        .map(|(k, w)| widen(w, find(Slot::Image(k))))
        .collect();
    let cover = Cover {
        pcp,
        first_tail: n,
        images,
    };
    // Tests involving a tail hold identically: tails are central of order p.
    let mut rows = Vec::new();
    for test in cover.pcp.consistency_tests(n) {
        let (lh, lt) = cover.split(&test.lhs);
        let (rh, rt) = cover.split(&test.rhs);
        if lh != rh {
            return Err(Error::InconsistentInput(format!(
                "{:?} test on generators {:?} fails",
                test.check, test.generators
            )));
        }
        let row: Vec<u32> = lt.iter().zip(rt).map(|(&a, &b)| (a + p - b) % p).collect();
        if row.iter().any(|&x| x != 0) {
            rows.push(row);
        }
    }
    Ok((cover.eliminate(rows)?, t))
}

/// The p-covering group of a presentation with recorded definitions.
pub fn p_cover(g: &PcPresentation) -> Result<Cover> {
    Ok(cover_with_images(g, &[])?.0)
}

/// A cover with the relators of `fp` imposed.
#[derive(Clone, Debug)]
pub struct Enforced {
    pub cover: Cover,
    /// For each relator (relations last), how many tails it eliminated
    /// beyond those eliminated by earlier relators.
    pub relator_ranks: Vec<usize>,
}

/// Evaluates every relator of `fp` under the cover images and eliminates the
/// resulting tail combinations.
pub fn enforce(cover: &Cover, fp: &FpPresentation) -> Result<Enforced> {
    let p = cover.pcp.p();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut rank = 0;
    let mut relator_ranks = Vec::new();
    for r in fp.all_relators() {
        let v = cover.pcp.evaluate(&r, &cover.images)?;
        let (head, tail) = cover.split(&v);
        if head.iter().any(|&e| e != 0) {
            return Err(Error::InconsistentInput(
                "relator does not hold in the previous quotient".into(),
            ));
        }
        if tail.iter().any(|&e| e != 0) {
            rows.push(tail.to_vec());
        }
        let now = if rows.is_empty() {
            0
        } else {
            FpMatrix::from_residue_rows(p, cover.tail_count(), rows.clone()).rank()
        };
        relator_ranks.push(now - rank);
        rank = now;
    }
    Ok(Enforced {
        cover: cover.eliminate(rows)?,
        relator_ranks,
    })
}

/// Bookkeeping for one class of the computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientStep {
    pub class: u32,
    pub tails: usize,
    pub after_consistency: usize,
    pub relator_ranks: Vec<usize>,
    pub new_generators: usize,
}

#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub pcp: PcPresentation,
    /// Image of each abstract generator.
    pub images: Vec<NormalWord>,
    pub class: u32,
    /// The next class adds no generators, so the quotient is the whole
    /// pro-p group.
    pub stabilized: bool,
    pub steps: Vec<QuotientStep>,
}

fn step(g: &PcPresentation, images: &[NormalWord], fp: &FpPresentation) -> Result<(Cover, QuotientStep)> {
    let (cover, raw_tails) = cover_with_images(g, images)?;
    let after_consistency = cover.tail_count();
    let enforced = enforce(&cover, fp)?;
    let out = enforced.cover;
    let info = QuotientStep {
        class: g.class() + 1,
        tails: raw_tails,
        after_consistency,
        relator_ranks: enforced.relator_ranks,
        new_generators: out.tail_count(),
    };
    Ok((out, info))
}

/// The largest quotient of exponent-p class at most `max_class`.
pub fn p_quotient(fp: &FpPresentation, max_class: u32) -> Result<QuotientResult> {
    if max_class == 0 {
        return Err(Error::InvalidArgument("class must be at least 1".into()));
    }
    fp.validate()?;
    let cap = max_generators();
    let mut g = PcPresentation::new(fp.p, vec![], vec![], vec![], vec![])?;
    let mut images = vec![g.identity(); fp.rank()];
    let mut steps = Vec::new();
    let mut stabilized = false;
    for c in 1..=max_class + 1 {
        let (next, info) = step(&g, &images, fp)?;
        let grew = info.new_generators > 0;
        steps.push(info);
        if !grew {
            stabilized = true;
            break;
        }
        if c > max_class {
            break;
        }
        if next.pcp.n() > cap {
            return Err(Error::GeneratorCap {
                needed: next.pcp.n(),
                cap,
                var: MAX_GENERATORS_VAR,
            });
        }
        g = next.pcp;
        images = next.images;
    }
    let class = g.class();
    Ok(QuotientResult {
        pcp: g,
        images,
        class,
        stabilized,
        steps,
    })
}
