//! Builtin group constructors. Every group named in the corpus is built from
//! explicit permutations: symmetric, alternating, dihedral, cyclic (minimal
//! degree via prime-power parts), elementary abelian, generalized
//! quaternion (regular representation), one-dimensional affine groups over
//! small finite fields, and direct products.

use permgroup_core::{direct_product, GroupHandle, Permutation, DEGREE_CAP};

use crate::error::CliError;

pub fn sym(n: usize) -> Result<GroupHandle, CliError> {
    if n == 0 || n > DEGREE_CAP {
        return Err(CliError::Constructor(format!("sym({n}): degree out of range")));
    }
    if n == 1 {
        return Ok(GroupHandle::trivial(1));
    }
    let transposition = Permutation::from_cycles(n, &[vec![1, 2]])?;
    let cycle = Permutation::from_cycles(n, &[(1..=n).collect()])?;
    Ok(GroupHandle::build(vec![transposition, cycle])?)
}

pub fn alt(n: usize) -> Result<GroupHandle, CliError> {
    if n == 0 || n > DEGREE_CAP {
        return Err(CliError::Constructor(format!("alt({n}): degree out of range")));
    }
    if n <= 2 {
        return Ok(GroupHandle::trivial(n.max(1)));
    }
    let three = Permutation::from_cycles(n, &[vec![1, 2, 3]])?;
    let long = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(1..=n).collect()])?
    } else {
        Permutation::from_cycles(n, &[(2..=n).collect()])?
    };
    Ok(GroupHandle::build(vec![three, long])?)
}

/// Cyclic group of order n on the minimal number of points: one cycle per
/// prime-power part of n.
pub fn cyclic(n: usize) -> Result<GroupHandle, CliError> {
    if n == 0 {
        return Err(CliError::Constructor("cyclic(0) is not a group".to_string()));
    }
    if n == 1 {
        return Ok(GroupHandle::trivial(1));
    }
    let mut parts: Vec<usize> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut q = 1;
            while m % p == 0 {
                m /= p;
                q *= p;
            }
            parts.push(q);
        }
        p += 1;
    }
    if m > 1 {
        parts.push(m);
    }
    parts.sort_unstable();
    let degree: usize = parts.iter().sum();
    if degree > DEGREE_CAP {
        return Err(CliError::Constructor(format!(
            "cyclic({n}) needs {degree} points, over the cap of {DEGREE_CAP}"
        )));
    }
    let mut cycles = Vec::new();
    let mut offset = 1usize;
    for q in parts {
        cycles.push((offset..offset + q).collect::<Vec<usize>>());
        offset += q;
    }
    Ok(GroupHandle::build(vec![Permutation::from_cycles(degree, &cycles)?])?)
}

/// Dihedral group of the n-gon (order 2n), n ≥ 3.
pub fn dihedral(n: usize) -> Result<GroupHandle, CliError> {
    if n < 3 || n > DEGREE_CAP {
        return Err(CliError::Constructor(format!(
            "dihedral({n}): polygon size must be between 3 and {DEGREE_CAP}"
        )));
    }
    let rotation = Permutation::from_cycles(n, &[(1..=n).collect()])?;
    let reflection_images: Vec<u8> = (0..n as u8).map(|i| (n as u8 - i) % n as u8).collect();
    let reflection = Permutation::from_images(reflection_images)?;
    Ok(GroupHandle::build(vec![rotation, reflection])?)
}

/// Elementary abelian group of order p^k on p·k points.
pub fn elem_abelian(p: usize, k: usize) -> Result<GroupHandle, CliError> {
    if !is_prime(p) {
        return Err(CliError::Constructor(format!("elem_abelian({p},{k}): {p} is not prime")));
    }
    if k == 0 || p * k > DEGREE_CAP {
        return Err(CliError::Constructor(format!(
            "elem_abelian({p},{k}): rank out of range"
        )));
    }
    let degree = p * k;
    let mut gens = Vec::new();
    for i in 0..k {
        let cycle: Vec<usize> = (i * p + 1..=(i + 1) * p).collect();
        gens.push(Permutation::from_cycles(degree, &[cycle])?);
    }
    Ok(GroupHandle::build(gens)?)
}

/// Generalized quaternion group of order n (a power of two, at least 8), in
/// its regular representation: ⟨a, b | a^{n/2} = 1, b² = a^{n/4},
/// a^b = a^{-1}⟩.
pub fn quaternion(n: usize) -> Result<GroupHandle, CliError> {
    if n < 8 || !n.is_power_of_two() || n > DEGREE_CAP {
        return Err(CliError::Constructor(format!(
            "quaternion({n}): order must be a power of two between 8 and {DEGREE_CAP}"
        )));
    }
    let half = n / 2;
    // Points are (i, j) = a^i b^j with i < n/2, j < 2, indexed i + half*j.
    let mut a_images = vec![0u8; n];
    let mut b_images = vec![0u8; n];
    for i in 0..half {
        // (a^i) * a = a^{i+1};  (a^i b) * a = a^{i-1} b.
        a_images[i] = ((i + 1) % half) as u8;
        a_images[half + i] = (half + (i + half - 1) % half) as u8;
        // (a^i) * b = a^i b;    (a^i b) * b = a^{i + n/4}.
        b_images[i] = (half + i) as u8;
        b_images[half + i] = ((i + half / 2) % half) as u8;
    }
    let a = Permutation::from_images(a_images)?;
    let b = Permutation::from_images(b_images)?;
    let g = GroupHandle::build(vec![a, b])?;
    debug_assert_eq!(g.order(), n as u128);
    Ok(g)
}

/// Arithmetic tables of GF(q) for the small prime powers the affine
/// constructor supports. Elements are indexed by their coefficient vectors
/// in base p.
struct SmallField {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

fn small_field(q: usize) -> Result<SmallField, CliError> {
    let (p, k, reduction): (usize, usize, Vec<u64>) = match q {
        4 => (2, 2, vec![1, 1]),
        5 => (5, 1, vec![]),
        7 => (7, 1, vec![]),
        8 => (2, 3, vec![1, 1, 0]),
        9 => (3, 2, vec![2, 0]),
        11 => (11, 1, vec![]),
        13 => (13, 1, vec![]),
        25 => (5, 2, vec![2, 0]),
        27 => (3, 3, vec![2, 1, 0]),
        _ => {
            return Err(CliError::Constructor(format!(
                "agl1({q}): q must be one of 4, 5, 7, 8, 9, 11, 13, 25, 27"
            )))
        }
    };
    let digits = |mut x: usize| -> Vec<u64> {
        let mut v = vec![0u64; k];
        for slot in v.iter_mut() {
            *slot = (x % p) as u64;
            x /= p;
        }
        v
    };
    let index = |v: &[u64]| -> u16 {
        let mut out = 0usize;
        for &c in v.iter().rev() {
            out = out * p + c as usize;
        }
        out as u16
    };
    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    for x in 0..q {
        for y in 0..q {
            let (dx, dy) = (digits(x), digits(y));
            let sum: Vec<u64> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p as u64).collect();
            add[x * q + y] = index(&sum);
            // Polynomial product, reduced by x^k = reduction.
            let mut prod = vec![0u64; 2 * k];
            for (i, &a) in dx.iter().enumerate() {
                for (j, &b) in dy.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + a * b) % p as u64;
                }
            }
            for d in (k..2 * k).rev() {
                let c = prod[d];
                if c != 0 {
                    prod[d] = 0;
                    for (j, &r) in reduction.iter().enumerate() {
                        prod[d - k + j] = (prod[d - k + j] + c * r) % p as u64;
                    }
                }
            }
            mul[x * q + y] = index(&prod[..k]);
        }
    }
    Ok(SmallField { q, add, mul })
}

impl SmallField {
    fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.q + y as usize]
    }

    fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.q + y as usize]
    }

    /// Smallest multiplicative generator.
    fn primitive_element(&self) -> u16 {
        'candidates: for x in 2..self.q as u16 {
            let mut power = x;
            for _ in 1..self.q - 2 {
                if power == 1 {
                    continue 'candidates;
                }
                power = self.mul(power, x);
            }
            if power != 1 {
                return x;
            }
        }
        panic!("multiplicative groups of finite fields are cyclic");
    }
}

/// The one-dimensional affine group AGL(1, q) = {x ↦ ax + b} acting on the
/// q field elements; order q(q−1). Generated by the translation x ↦ x + 1
/// and scaling by a primitive element.
pub fn agl1(q: usize) -> Result<GroupHandle, CliError> {
    let field = small_field(q)?;
    let translation: Vec<u8> = (0..q as u16).map(|x| field.add(x, 1) as u8).collect();
    let omega = field.primitive_element();
    let scaling: Vec<u8> = (0..q as u16).map(|x| field.mul(x, omega) as u8).collect();
    let g = GroupHandle::build(vec![
        Permutation::from_images(translation)?,
        Permutation::from_images(scaling)?,
    ])?;
    debug_assert_eq!(g.order(), (q * (q - 1)) as u128);
    Ok(g)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// A constructor-call expression: `sym(4)`, `elem_abelian(2,3)`,
/// `direct(sym(3), cyclic(2))`, with nesting.
pub fn build_source(expr: &str) -> Result<GroupHandle, CliError> {
    let (handle, rest) = parse_expr(expr.trim())?;
    if !rest.trim().is_empty() {
        return Err(CliError::Constructor(format!(
            "trailing input '{rest}' after constructor"
        )));
    }
    Ok(handle)
}

fn parse_expr(s: &str) -> Result<(GroupHandle, &str), CliError> {
    let s = s.trim_start();
    let name_end = s
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(s.len());
    let name = &s[..name_end];
    let rest = s[name_end..].trim_start();
    let Some(rest) = rest.strip_prefix('(') else {
        return Err(CliError::Constructor(format!(
            "expected '(' after constructor name '{name}'"
        )));
    };
    match name {
        "direct" => {
            let (a, rest) = parse_expr(rest)?;
            let rest = expect_char(rest, ',')?;
            let (b, rest) = parse_expr(rest)?;
            let rest = expect_char(rest, ')')?;
            Ok((direct_product(&a, &b).map_err(CliError::from)?, rest))
        }
        _ => {
            let (args, rest) = parse_numbers(rest)?;
            let handle = match (name, args.as_slice()) {
                ("sym", [n]) => sym(*n)?,
                ("alt", [n]) => alt(*n)?,
                ("cyclic", [n]) => cyclic(*n)?,
                ("dihedral", [n]) => dihedral(*n)?,
                ("elem_abelian", [p, k]) => elem_abelian(*p, *k)?,
                ("quaternion", [n]) => quaternion(*n)?,
                ("agl1", [q]) => agl1(*q)?,
                _ => {
                    return Err(CliError::Constructor(format!(
                        "unknown constructor '{name}' with {} argument(s)",
                        args.len()
                    )))
                }
            };
            Ok((handle, rest))
        }
    }
}

fn expect_char(s: &str, c: char) -> Result<&str, CliError> {
    let s = s.trim_start();
    s.strip_prefix(c)
        .ok_or_else(|| CliError::Constructor(format!("expected '{c}' in constructor expression")))
}

fn parse_numbers(s: &str) -> Result<(Vec<usize>, &str), CliError> {
    let mut args = Vec::new();
    let mut rest = s.trim_start();
    loop {
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(CliError::Constructor("expected a number".to_string()));
        }
        args.push(
            rest[..end]
                .parse::<usize>()
                .map_err(|e| CliError::Constructor(e.to_string()))?,
        );
        rest = rest[end..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            continue;
        }
        if let Some(r) = rest.strip_prefix(')') {
            return Ok((args, r));
        }
        return Err(CliError::Constructor(
            "expected ',' or ')' in argument list".to_string(),
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_orders() {
        assert_eq!(sym(4).unwrap().order(), 24);
        assert_eq!(alt(5).unwrap().order(), 60);
        assert_eq!(cyclic(200).unwrap().order(), 200);
        assert_eq!(cyclic(199).unwrap().order(), 199);
        assert_eq!(dihedral(100).unwrap().order(), 200);
        assert_eq!(elem_abelian(2, 7).unwrap().order(), 128);
        assert_eq!(quaternion(8).unwrap().order(), 8);
        assert_eq!(quaternion(128).unwrap().order(), 128);
        for (q, expected) in [(4, 12), (5, 20), (7, 42), (8, 56), (9, 72), (11, 110), (13, 156), (25, 600), (27, 702)] {
            assert_eq!(agl1(q).unwrap().order(), expected, "agl1({q})");
        }
    }

    #[test]
    fn cyclic_uses_minimal_degree() {
        assert_eq!(cyclic(200).unwrap().degree(), 33);
        assert_eq!(cyclic(6).unwrap().degree(), 5);
    }

    #[test]
    fn invalid_constructors_fail() {
        assert!(sym(0).is_err());
        assert!(dihedral(2).is_err());
        assert!(elem_abelian(4, 2).is_err());
        assert!(quaternion(12).is_err());
        assert!(agl1(6).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn source_expressions() {
        assert_eq!(build_source("sym(4)").unwrap().order(), 24);
        assert_eq!(build_source("direct(sym(3), cyclic(2))").unwrap().order(), 12);
        assert_eq!(
            build_source("direct(direct(cyclic(2), cyclic(2)), cyclic(2))")
                .unwrap()
                .order(),
            8
        );
        assert!(build_source("sym(4) extra").is_err());
        assert!(build_source("unknown(3)").is_err());
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q8 = quaternion(8).unwrap();
        let table = q8.element_table(100).unwrap();
        let involutions = (0..8u16).filter(|&i| table.order_of(i) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn agl19_scaling_is_fixed_point_free_of_order_8() {
        let g = agl1(9).unwrap();
        assert_eq!(g.order(), 72);
        let scaling = &g.generators()[1];
        assert_eq!(scaling.order(), 8);
        // Only the zero field element is fixed.
        let fixed = (0..9u8).filter(|&x| scaling.apply(x) == x).count();
        assert_eq!(fixed, 1);
    }
}
