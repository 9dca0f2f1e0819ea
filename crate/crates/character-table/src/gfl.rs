//! Linear algebra over the prime field GF(ℓ) used by the class-matrix
//! eigenvector computation; ℓ < 2^31 so products fit in u64.

#[derive(Clone, Copy)]
pub struct FL {
    pub l: u64,
}

impl FL {
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.l {
            s - self.l
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.l - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut result = 1u64;
        base %= self.l;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.l != 0);
        self.pow(a, self.l - 2)
    }
}

/// Square matrix over GF(ℓ), row major.
#[derive(Clone)]
pub struct MatL {
    pub n: usize,
    pub data: Vec<u64>,
}

impl MatL {
    pub fn zero(n: usize) -> MatL {
        MatL {
            n,
            data: vec![0; n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mat_vec(&self, f: FL, v: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n];
        for i in 0..n {
            let mut acc: u64 = 0;
            for j in 0..n {
                let x = self.get(i, j);
                if x != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(x, v[j]));
                }
            }
            out[i] = acc;
        }
        out
    }
}

/// Characteristic polynomial (monic, ascending coefficients) via Hessenberg
/// reduction; deterministic.
pub fn charpoly(f: FL, m: &MatL) -> Vec<u64> {
    let n = m.n;
    let mut h = m.clone();
    // Reduce to upper Hessenberg form.
    for col in 0..n.saturating_sub(2) {
        // Find a nonzero pivot below the subdiagonal.
        let pivot = ((col + 1)..n).find(|&r| h.get(r, col) != 0);
        let Some(pivot) = pivot else { continue };
        if pivot != col + 1 {
            for j in 0..n {
                let (a, b) = (h.get(col + 1, j), h.get(pivot, j));
                h.set(col + 1, j, b);
                h.set(pivot, j, a);
            }
            for i in 0..n {
                let (a, b) = (h.get(i, col + 1), h.get(i, pivot));
                h.set(i, col + 1, b);
                h.set(i, pivot, a);
            }
        }
        let inv = f.inv(h.get(col + 1, col));
        for r in (col + 2)..n {
            let factor = f.mul(h.get(r, col), inv);
            if factor == 0 {
                continue;
            }
            // Row operation R_r -= factor * R_{col+1}, then the inverse
            // column operation C_{col+1} += factor * C_r keeps similarity.
            for j in 0..n {
                let v = f.sub(h.get(r, j), f.mul(factor, h.get(col + 1, j)));
                h.set(r, j, v);
            }
            for i in 0..n {
                let v = f.add(h.get(i, col + 1), f.mul(factor, h.get(i, r)));
                h.set(i, col + 1, v);
            }
        }
    }
    // char polys of leading principal Hessenberg minors, by recurrence.
    // p_0 = 1; p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
    //                  - sum_{i=1}^{k-1} h[k-1-i][k-1] (prod subdiag) p_{k-1-i}(x)
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let mut p = vec![0u64; k + 1];
        // (x - h_{k-1,k-1}) * p_{k-1}
        let prev = &polys[k - 1];
        for (i, &c) in prev.iter().enumerate() {
            p[i + 1] = f.add(p[i + 1], c);
            p[i] = f.sub(p[i], f.mul(h.get(k - 1, k - 1), c));
        }
        let mut subdiag_prod = 1u64;
        for i in 1..k {
            subdiag_prod = f.mul(subdiag_prod, h.get(k - i, k - i - 1));
            if subdiag_prod == 0 {
                break;
            }
            let coeff = f.mul(h.get(k - 1 - i, k - 1), subdiag_prod);
            if coeff == 0 {
                continue;
            }
            for (j, &c) in polys[k - 1 - i].iter().enumerate() {
                p[j] = f.sub(p[j], f.mul(coeff, c));
            }
        }
        polys.push(p);
    }
    polys.pop().expect("n-th minor exists")
}

/// All roots of a polynomial over GF(ℓ), ascending, found by scanning the
/// field.
pub fn roots(f: FL, poly: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for x in 0..f.l {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        if acc == 0 {
            out.push(x);
        }
    }
    out
}

/// Basis of the kernel of `m` (column vectors), canonical RREF form.
pub fn kernel(f: FL, m: &MatL) -> Vec<Vec<u64>> {
    let n = m.n;
    let mut a = m.clone();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..n {
                let (x, y) = (a.get(r, j), a.get(pr, j));
                a.set(r, j, y);
                a.set(pr, j, x);
            }
        }
        let inv = f.inv(a.get(r, c));
        for j in 0..n {
            a.set(r, j, f.mul(a.get(r, j), inv));
        }
        for i in 0..n {
            if i != r && a.get(i, c) != 0 {
                let factor = a.get(i, c);
                for j in 0..n {
                    let v = f.sub(a.get(i, j), f.mul(factor, a.get(r, j)));
                    a.set(i, j, v);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            let coeff = a.get(ri, free);
            if coeff != 0 {
                v[pc] = f.sub(0, coeff);
            }
        }
        basis.push(v);
    }
    basis
}

/// Express `M · b_j` in the span of `basis`, producing the restriction
/// matrix `R` with `M · B = B · R`. The subspace must be `M`-invariant.
pub fn restriction(f: FL, m: &MatL, basis: &[Vec<u64>]) -> MatL {
    let k = m.n;
    let d = basis.len();
    // Augmented system [B | M b_1 … M b_d] over k rows.
    let mut aug: Vec<Vec<u64>> = vec![vec![0u64; d + d]; k];
    for (j, b) in basis.iter().enumerate() {
        for i in 0..k {
            aug[i][j] = b[i];
        }
    }
    for (j, b) in basis.iter().enumerate() {
        let image = m.mat_vec(f, b);
        for i in 0..k {
            aug[i][d + j] = image[i];
        }
    }
    // Row-reduce the left block.
    let mut r = 0usize;
    let mut pivot_rows: Vec<usize> = Vec::new();
    for c in 0..d {
        let pr = (r..k)
            .find(|&i| aug[i][c] != 0)
            .expect("basis vectors are independent");
        aug.swap(r, pr);
        let inv = f.inv(aug[r][c]);
        for x in aug[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..k {
            if i != r && aug[i][c] != 0 {
                let factor = aug[i][c];
                for j in 0..(d + d) {
                    let v = f.sub(aug[i][j], f.mul(factor, aug[r][j]));
                    aug[i][j] = v;
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // Rows beyond the pivots must vanish on the right block (invariance).
    for row in aug.iter().skip(r) {
        debug_assert!(row[d..].iter().all(|&x| x == 0), "subspace must be invariant");
    }
    let mut out = MatL::zero(d);
    for (ri, _) in pivot_rows.iter().enumerate() {
        for j in 0..d {
            out.set(ri, j, aug[ri][d + j]);
        }
    }
    out
}

/// Primality by trial division (ℓ < 2^31).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The smallest primitive root mod ℓ.
pub fn primitive_root(l: u64) -> u64 {
    let f = FL { l };
    let phi = l - 1;
    let mut prime_factors = Vec::new();
    let mut m = phi;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            prime_factors.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        prime_factors.push(m);
    }
    for g in 2..l {
        if prime_factors.iter().all(|&q| f.pow(g, phi / q) != 1) {
            return g;
        }
    }
    panic!("every prime has a primitive root");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_shift() {
        // Companion/shift matrix of x^3 - 1 over GF(7).
        let f = FL { l: 7 };
        let mut m = MatL::zero(3);
        m.set(0, 2, 1);
        m.set(1, 0, 1);
        m.set(2, 1, 1);
        let p = charpoly(f, &m);
        // x^3 - 1 = x^3 + 6 mod 7.
        assert_eq!(p, vec![6, 0, 0, 1]);
        let r = roots(f, &p);
        assert_eq!(r, vec![1, 2, 4]);
    }

    #[test]
    fn kernel_dimension() {
        let f = FL { l: 5 };
        let mut m = MatL::zero(2);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 0, 2);
        m.set(1, 1, 4);
        let k = kernel(f, &m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!((v[0] + 2 * v[1]) % 5, 0);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        assert!(is_prime(797));
        assert!(!is_prime(799));
    }
}
