//! Dense linear algebra over GF(p) for small primes. Entries live in `u8`
//! (primes up to 251), arithmetic in `u32`.

#[inline]
fn add(p: u16, a: u8, b: u8) -> u8 {
    ((a as u32 + b as u32) % p as u32) as u8
}

#[inline]
fn sub(p: u16, a: u8, b: u8) -> u8 {
    ((a as u32 + p as u32 - b as u32) % p as u32) as u8
}

#[inline]
fn mul(p: u16, a: u8, b: u8) -> u8 {
    ((a as u32 * b as u32) % p as u32) as u8
}

fn inv(p: u16, a: u8) -> u8 {
    // Fermat: a^(p-2) mod p.
    debug_assert!(a != 0);
    let mut result = 1u32;
    let mut base = a as u32;
    let mut e = p as u32 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u32;
        }
        base = base * base % p as u32;
        e >>= 1;
    }
    result as u8
}

/// A dense matrix over GF(p), row major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    pub p: u16,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zero(p: u16, rows: usize, cols: usize) -> Mat {
        Mat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u16, n: usize) -> Mat {
        let mut m = Mat::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u16, rows: Vec<Vec<u8>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat { p, rows: r, cols: c, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v % self.p as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = Mat::zero(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = add(p, out.get(i, j), mul(p, a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// `v · M` for a row vector.
    pub fn apply_row(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.rows);
        let p = self.p;
        let mut out = vec![0u8; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = add(p, out[j], mul(p, a, self.get(k, j)));
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let p = self.p;
        let mut a = self.clone();
        let mut b = Mat::identity(p, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (b.get(col, j), b.get(pivot, j));
                    b.set(col, j, y);
                    b.set(pivot, j, x);
                }
            }
            let scale = inv(p, a.get(col, col));
            for j in 0..n {
                a.set(col, j, mul(p, a.get(col, j), scale));
                b.set(col, j, mul(p, b.get(col, j), scale));
            }
            for r in 0..n {
                if r == col || a.get(r, col) == 0 {
                    continue;
                }
                let f = a.get(r, col);
                for j in 0..n {
                    let va = sub(p, a.get(r, j), mul(p, f, a.get(col, j)));
                    a.set(r, j, va);
                    let vb = sub(p, b.get(r, j), mul(p, f, b.get(col, j)));
                    b.set(r, j, vb);
                }
            }
        }
        Some(b)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }
}

/// A subspace of GF(p)^n in canonical reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    p: u16,
    ambient: usize,
    /// RREF basis rows with pivot columns strictly increasing.
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u16, ambient: usize) -> Subspace {
        Subspace {
            p,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors(p: u16, ambient: usize, vecs: &[Vec<u8>]) -> Subspace {
        let mut s = Subspace::zero(p, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let p = self.p;
        let mut w = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c != 0 {
                for j in 0..self.ambient {
                    w[j] = sub(p, w[j], mul(p, c, row[j]));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Insert a vector, returning `true` when the dimension grew. The basis
    /// stays in reduced row echelon form.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let p = self.p;
        let mut w = self.reduce(v);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let scale = inv(p, w[piv]);
        for x in w.iter_mut() {
            *x = mul(p, *x, scale);
        }
        // Clear the new pivot column in existing rows.
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for j in 0..w.len() {
                    row[j] = sub(p, row[j], mul(p, c, w[j]));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < piv);
        self.rows.insert(pos, w);
        self.pivots.insert(pos, piv);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// RREF nullspace basis of a matrix (solutions x of `M x^T = 0`, i.e. row
/// vectors x with `x · M^T = 0`); returns one basis vector per free column.
pub fn nullspace(m: &Mat) -> Vec<Vec<u8>> {
    let p = m.p;
    let rows = m.rows;
    let cols = m.cols;
    let mut a = m.clone();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                let (x, y) = (a.get(r, j), a.get(pr, j));
                a.set(r, j, y);
                a.set(pr, j, x);
            }
        }
        let scale = inv(p, a.get(r, c));
        for j in 0..cols {
            a.set(r, j, mul(p, a.get(r, j), scale));
        }
        for i in 0..rows {
            if i != r && a.get(i, c) != 0 {
                let f = a.get(i, c);
                for j in 0..cols {
                    let v = sub(p, a.get(i, j), mul(p, f, a.get(r, j)));
                    a.set(i, j, v);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u8; cols];
        v[free] = 1;
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            let coeff = a.get(ri, free);
            if coeff != 0 {
                v[pc] = sub(p, 0, coeff);
            }
        }
        basis.push(v);
    }
    basis
}
