//! Coset enumeration (HLT strategy with coincidence processing).
//!
//! Words are lists of nonzero integers: `g + 1` stands for generator `g`
//! and `-(g + 1)` for its inverse.

const NONE: usize = usize::MAX;

/// Action of the generators on the cosets of the enumerated subgroup.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub generators: usize,
    /// `rows[c][2g]` is `c * g`, `rows[c][2g + 1]` is `c * g^-1`.
    pub rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Permutation of the cosets induced by generator `g`.
    pub fn permutation(&self, g: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[2 * g] as u32).collect()
    }

    /// Coset reached from `c` by reading `word`.
    pub fn trace(&self, mut c: usize, word: &[i32]) -> usize {
        for &l in word {
            c = self.rows[c][column(l)];
        }
        c
    }
}

fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

fn inverse_column(col: usize) -> usize {
    col ^ 1
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    max_cosets: usize,
}

impl Enumerator {
    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: usize, col: usize) -> Option<()> {
        if self.table.len() >= self.max_cosets {
            return None;
        }
        let d = self.table.len();
        self.table.push(vec![NONE; self.cols]);
        self.parent.push(d);
        self.table[c][col] = d;
        self.table[d][inverse_column(col)] = c;
        Some(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop] = keep;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.table[e][x];
                if f == NONE {
                    continue;
                }
                let xi = inverse_column(x);
                if self.table[f][xi] == e {
                    self.table[f][xi] = NONE;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if self.table[e1][x] != NONE {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][xi] != NONE {
                    let t = self.table[f1][xi];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][xi] = e1;
                }
            }
        }
    }

    /// Scans `word` at coset `c`, defining new cosets to complete it.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Option<()> {
        if word.is_empty() {
            return Some(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len() - 1;
        loop {
            while i <= j && self.table[f][word[i]] != NONE {
                f = self.table[f][word[i]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j >= i && self.table[b][inverse_column(word[j])] != NONE {
                b = self.table[b][inverse_column(word[j])];
                if j == 0 {
                    // whole word traced backwards
                    if f != b {
                        self.coincidence(f, b);
                    }
                    return Some(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Some(());
            }
            if i == j {
                self.table[f][word[i]] = b;
                self.table[b][inverse_column(word[i])] = f;
                return Some(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Enumerates the cosets of `<subgroup>` in `<generators | relators>`.
/// Returns `None` if more than `max_cosets` cosets get defined.
pub fn enumerate(
    generators: usize,
    relators: &[Vec<i32>],
    subgroup: &[Vec<i32>],
    max_cosets: usize,
) -> Option<CosetTable> {
    let cols = 2 * generators;
    let to_cols = |w: &Vec<i32>| -> Vec<usize> { w.iter().map(|&l| column(l)).collect() };
    let rels: Vec<Vec<usize>> = relators.iter().map(to_cols).collect();
    let mut e = Enumerator {
        cols,
        table: vec![vec![NONE; cols]],
        parent: vec![0],
        max_cosets,
    };
    for h in subgroup {
        e.scan_and_fill(0, &to_cols(h))?;
    }
    let mut c = 0;
    while c < e.table.len() {
        for r in &rels {
            if !e.live(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.live(c) {
            for x in 0..cols {
                if e.table[c][x] == NONE {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.live(c)).collect();
    let mut index = vec![NONE; e.table.len()];
    for (k, &c) in live.iter().enumerate() {
        index[c] = k;
    }
    let mut rows = Vec::with_capacity(live.len());
    for &c in &live {
        let mut row = Vec::with_capacity(cols);
        for x in 0..cols {
            let t = e.table[c][x];
            let t = e.rep(t);
            row.push(index[t]);
        }
        rows.push(row);
    }
    Some(CosetTable { generators, rows })
}
