//! Dense linear algebra over the two-element field, rows packed into `u64` words.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut r = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                r.set(i, true);
            }
        }
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Row echelon form built incrementally; supports rank and span membership.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, BitRow)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, mut v: BitRow) -> BitRow {
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: BitRow) -> bool {
        let v = self.reduce(v);
        match v.first_one() {
            None => false,
            Some(p) => {
                for (_, row) in &mut self.rows {
                    if row.get(p) {
                        row.xor_assign(&v);
                    }
                }
                self.rows.push((p, v));
                true
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &BitRow) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

pub fn rank(rows: &[BitRow]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

/// Solves `A x = b` for square `A` given as rows; `None` when `A` is singular.
pub fn solve_unique(a: &[BitRow], b: &[bool]) -> Option<Vec<bool>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) || b.len() != n {
        return None;
    }
    // Augment each row with its right-hand side bit.
    let mut m: Vec<BitRow> = a
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut row = BitRow::zeros(n + 1);
            for i in r.ones() {
                row.set(i, true);
            }
            row.set(n, bi);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r].get(col))?;
        m.swap(col, piv);
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
    }
    Some((0..n).map(|i| m[i].get(n)).collect())
}
