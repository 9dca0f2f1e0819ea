//! Exact cyclotomic integers: values in Z[ζ_e] stored on the power basis
//! ζ_e^0 … ζ_e^{φ(e)-1} after reduction modulo the e-th cyclotomic
//! polynomial, with the conductor minimized. Zero testing is exact
//! (coefficient vector is zero); no floating point anywhere.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Φ_n(x), ascending coefficients, memoized. Computed by dividing x^n − 1 by
/// the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("poly cache lock").get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![-1, 1]
    } else {
        // x^n - 1
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in divisors(n) {
            if d < n {
                num = poly_div_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    cache
        .lock()
        .expect("poly cache lock")
        .insert(n, result.clone());
    result
}

/// Exact division of integer polynomials (monic divisor).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; dn - dd + 1];
    for i in (dd..=dn).rev() {
        let c = rem[i];
        if c != 0 {
            quo[i - dd] = c;
            for j in 0..=dd {
                rem[i - dd + j] -= c * den[j];
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quo
}

/// Reduce an exponent-form polynomial (length ≤ e, exponents mod e already
/// folded) modulo Φ_e, returning φ(e) coefficients.
fn reduce_mod_cyclotomic(e: u64, mut poly: Vec<i64>) -> Vec<i64> {
    let phi = euler_phi(e) as usize;
    let cyc = cyclotomic_polynomial(e);
    poly.resize(poly.len().max(phi), 0);
    for i in (phi..poly.len()).rev() {
        let c = poly[i];
        if c != 0 {
            poly[i] = 0;
            for (j, &d) in cyc.iter().enumerate().take(phi) {
                poly[i - phi + j] -= c * d;
            }
        }
    }
    poly.truncate(phi);
    poly
}

/// Generators of the kernel of `(Z/e)^* → (Z/e')^*`, memoized. Testing
/// Galois invariance against generators is enough.
fn fixing_subgroup_gens(e: u64, e_sub: u64) -> Vec<u64> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Vec<u64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("gens cache lock").get(&(e, e_sub)) {
        return hit.clone();
    }
    let members: Vec<u64> = (1..e)
        .filter(|&k| gcd(k, e) == 1 && k % e_sub == 1)
        .collect();
    let mut gens: Vec<u64> = Vec::new();
    let mut span: Vec<u64> = vec![1];
    for &k in &members {
        if span.contains(&k) {
            continue;
        }
        gens.push(k);
        // Regenerate the span.
        let mut new_span = vec![1u64];
        let mut frontier = vec![1u64];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = x * g % e;
                if !new_span.contains(&y) {
                    new_span.push(y);
                    frontier.push(y);
                }
            }
        }
        span = new_span;
        if span.len() == members.len() {
            break;
        }
    }
    cache
        .lock()
        .expect("gens cache lock")
        .insert((e, e_sub), gens.clone());
    gens
}

/// An exact cyclotomic integer in canonical form: minimal conductor e, with
/// integer coefficients over ζ_e^0 … ζ_e^{φ(e)-1}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicInteger {
    conductor: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero() -> Self {
        CyclotomicInteger {
            conductor: 1,
            coeffs: vec![0],
        }
    }

    pub fn from_integer(k: i64) -> Self {
        CyclotomicInteger {
            conductor: 1,
            coeffs: vec![k],
        }
    }

    /// ζ_e^j.
    pub fn root_of_unity(e: u64, j: u64) -> Self {
        let mut poly = vec![0i64; e as usize];
        poly[(j % e) as usize] = 1;
        Self::from_exponent_form(e, poly)
    }

    /// Build from a polynomial in ζ_e with exponents 0..e (not necessarily
    /// reduced), then canonicalize.
    pub fn from_exponent_form(e: u64, poly: Vec<i64>) -> Self {
        debug_assert!(poly.len() <= e as usize || e == 1);
        let coeffs = reduce_mod_cyclotomic(e, poly);
        Self::canonicalize(e, coeffs)
    }

    fn canonicalize(e: u64, coeffs: Vec<i64>) -> Self {
        if coeffs.iter().all(|&c| c == 0) {
            return Self::zero();
        }
        if e == 1 {
            return CyclotomicInteger { conductor: 1, coeffs };
        }
        for d in divisors(e) {
            if d == e {
                break;
            }
            if let Some(rewritten) = try_rewrite(e, &coeffs, d) {
                return CyclotomicInteger {
                    conductor: d,
                    coeffs: rewritten,
                };
            }
        }
        CyclotomicInteger { conductor: e, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Rational integer value, when the conductor is 1.
    pub fn as_integer(&self) -> Option<i64> {
        if self.conductor == 1 {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// The coefficients as an exponent-form polynomial of length `e`
    /// (conductor must divide `e`).
    pub fn to_exponent_form(&self, e: u64) -> Vec<i64> {
        assert_eq!(e % self.conductor, 0);
        let f = (e / self.conductor) as usize;
        let mut out = vec![0i64; e as usize];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j * f] = c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = lcm(self.conductor, other.conductor);
        let mut poly = self.to_exponent_form(e);
        for (i, c) in other.to_exponent_form(e).into_iter().enumerate() {
            poly[i] += c;
        }
        Self::from_exponent_form(e, poly)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = lcm(self.conductor, other.conductor);
        let fa = e / self.conductor;
        let fb = e / other.conductor;
        let mut poly = vec![0i64; e as usize];
        for (ja, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (jb, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let exp = (ja as u64 * fa + jb as u64 * fb) % e;
                poly[exp as usize] += ca * cb;
            }
        }
        Self::from_exponent_form(e, poly)
    }

    /// Galois map σ_k: ζ ↦ ζ^k, for gcd(k, conductor) = 1.
    pub fn galois(&self, k: u64) -> Self {
        let e = self.conductor;
        assert_eq!(gcd(k % e, e), 1, "galois exponent must be coprime");
        let mut poly = vec![0i64; e as usize];
        for (j, &c) in self.coeffs.iter().enumerate() {
            poly[(j as u64 * k % e) as usize] += c;
        }
        Self::from_exponent_form(e, poly)
    }

    /// Complex conjugation σ_{-1}.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }
}

/// If the value lies in Q(ζ_d), rewrite its coefficients on the ζ_d power
/// basis; otherwise `None`. Invariance is tested against generators of the
/// fixing Galois subgroup; the rewrite solves an exact linear system.
fn try_rewrite(e: u64, coeffs: &[i64], d: u64) -> Option<Vec<i64>> {
    // Galois invariance test.
    for k in fixing_subgroup_gens(e, d) {
        let mut poly = vec![0i64; e as usize];
        for (j, &c) in coeffs.iter().enumerate() {
            poly[(j as u64 * k % e) as usize] += c;
        }
        if reduce_mod_cyclotomic(e, poly) != coeffs {
            return None;
        }
    }
    // Solve sum_j x_j * (ζ_e^{(e/d) j} reduced) = coeffs over the rationals.
    let phi_e = euler_phi(e) as usize;
    let phi_d = euler_phi(d) as usize;
    let f = e / d;
    let basis: Vec<Vec<i64>> = (0..phi_d as u64)
        .map(|j| {
            let mut poly = vec![0i64; e as usize];
            poly[(j * f % e) as usize] = 1;
            reduce_mod_cyclotomic(e, poly)
        })
        .collect();
    let solution = solve_rational(phi_e, phi_d, &basis, coeffs)?;
    Some(solution)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd_i128(b, a % b)
    }
}

/// Solve the overdetermined integer system `Σ_j basis[j] · x_j = target`
/// exactly; returns the integer solution when it exists and is integral.
fn solve_rational(
    rows: usize,
    cols: usize,
    basis: &[Vec<i64>],
    target: &[i64],
) -> Option<Vec<i64>> {
    // Augmented matrix with i128 rational-free elimination (track a common
    // denominator per row via fraction-free pivoting).
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|r| {
            let mut row: Vec<i128> = (0..cols).map(|c| basis[c][r] as i128).collect();
            row.push(target[r] as i128);
            row
        })
        .collect();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            return None; // basis columns are independent; should not happen
        };
        a.swap(r, pr);
        // Eliminate below and above with cross-multiplication, reducing each
        // row by its gcd to keep entries small.
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let (num, den) = (a[i][c], a[r][c]);
                for j in 0..=cols {
                    a[i][j] = a[i][j] * den - a[r][j] * num;
                }
                let mut g: i128 = 0;
                for &x in &a[i] {
                    g = gcd_i128(g, x.abs());
                }
                if g > 1 {
                    for x in a[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Consistency: all non-pivot rows must be zero.
    for i in r..rows {
        if a[i].iter().any(|&x| x != 0) {
            return None;
        }
    }
    let mut solution = vec![0i64; cols];
    for (c, &pr) in pivot_rows.iter().enumerate() {
        let num = a[pr][cols];
        let den = a[pr][c];
        if den == 0 || num % den != 0 {
            return None;
        }
        let v = num / den;
        solution[c] = i64::try_from(v).ok()?;
    }
    Some(solution)
}

impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                first = false;
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            if j == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if j > 1 {
                    write!(f, "^{j}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
