//! Dense linear algebra over a small prime field.

use crate::error::{Error, Result};

/// The prime field `F_p` for `p` in {2, 3, 5}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u8,
}

impl Field {
    pub fn new(p: u8) -> Result<Self> {
        match p {
            2 | 3 | 5 => Ok(Field { p }),
            other => Err(Error::UnsupportedField(other)),
        }
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((u16::from(a) * u16::from(b)) % u16::from(self.p)) as u8
    }

    pub fn inv(self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        (1..self.p).find(|&x| self.mul(a, x) == 1).expect("prime field")
    }

    /// `p^d`, or `None` on overflow.
    pub fn count(self, d: usize) -> Option<u64> {
        u64::from(self.p).checked_pow(u32::try_from(d).ok()?)
    }

    /// All vectors of length `d`, in lexicographic order.
    pub fn vectors(self, d: usize) -> impl Iterator<Item = Vec<u8>> {
        let p = self.p;
        let total = self.count(d).expect("vector space too large to list");
        (0..total).map(move |mut code| {
            let mut v = vec![0u8; d];
            for slot in v.iter_mut().rev() {
                *slot = (code % u64::from(p)) as u8;
                code /= u64::from(p);
            }
            v
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, f: Field) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u8], f: Field) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Matrix, c: u8, f: Field) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                .collect(),
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self, f: Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(pr, j));
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn nullspace(&self, f: Field) -> Vec<Vec<u8>> {
        let (m, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u8; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.sub(0, m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn is_invertible(&self, f: Field) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }
}

/// A subspace of `F_p^ambient`, stored by its reduced echelon basis so that
/// equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient)
                .data
                .chunks(ambient.max(1))
                .take(ambient)
                .map(<[u8]>::to_vec)
                .collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<u8>], f: Field) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let flat: Vec<u8> = vectors.iter().flatten().copied().collect();
        let (m, pivots) = Matrix::from_rows(vectors.len(), ambient, &flat).rref(f);
        Subspace {
            ambient,
            basis: (0..pivots.len()).map(|r| m.row(r).to_vec()).collect(),
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Positions not used as pivots; their unit vectors span a complement.
    pub fn complement_positions(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus its projection along the basis; zero iff `v` lies in `self`.
    pub fn reduce(&self, v: &[u8], f: Field) -> Vec<u8> {
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = out[pc];
            if c != 0 {
                for (o, &b) in out.iter_mut().zip(row) {
                    *o = f.sub(*o, f.mul(c, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u8], f: Field) -> bool {
        self.reduce(v, f).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` (assumed to lie in `self`) in the echelon basis.
    pub fn coordinates(&self, v: &[u8]) -> Vec<u8> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// Coordinates of the class of `v` in the quotient by `self`, with respect
    /// to [`Subspace::complement_positions`].
    pub fn quotient_coordinates(&self, v: &[u8], f: Field) -> Vec<u8> {
        let r = self.reduce(v, f);
        self.complement_positions().iter().map(|&c| r[c]).collect()
    }

    pub fn image(&self, m: &Matrix, f: Field) -> Subspace {
        let images: Vec<Vec<u8>> = self.basis.iter().map(|b| m.apply(b, f)).collect();
        Subspace::span(m.rows(), &images, f)
    }

    pub fn is_subspace_of(&self, other: &Subspace, f: Field) -> bool {
        self.basis.iter().all(|b| other.contains(b, f))
    }

    /// Appends a canonical encoding to `key`.
    pub fn encode(&self, key: &mut Vec<u8>) {
        key.push(self.basis.len() as u8);
        for row in &self.basis {
            key.extend_from_slice(row);
        }
    }

    /// Every subspace of `F_p^ambient`, listed by dimension and then by
    /// echelon shape.
    pub fn all(ambient: usize, f: Field) -> Vec<Subspace> {
        let mut out = Vec::new();
        for k in 0..=ambient {
            for pivots in combinations(ambient, k) {
                let free: Vec<(usize, usize)> = pivots
                    .iter()
                    .enumerate()
                    .flat_map(|(r, &pc)| {
                        let pivots = &pivots;
                        (pc + 1..ambient)
                            .filter(move |c| !pivots.contains(c))
                            .map(move |c| (r, c))
                    })
                    .collect();
                for values in f.vectors(free.len()) {
                    let mut basis = vec![vec![0u8; ambient]; k];
                    for (r, &pc) in pivots.iter().enumerate() {
                        basis[r][pc] = 1;
                    }
                    for (&(r, c), &v) in free.iter().zip(&values) {
                        basis[r][c] = v;
                    }
                    out.push(Subspace {
                        ambient,
                        basis,
                        pivots: pivots.clone(),
                    });
                }
            }
        }
        out
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
