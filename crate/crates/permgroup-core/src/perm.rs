use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Maximum number of points a permutation may act on. Points are stored as
/// `u8`, which keeps elements compact; 255 covers every group the builtin
/// constructors can produce (prime cycles up to 199, regular representations
/// up to order 255).
pub const DEGREE_CAP: usize = 255;

/// A permutation of `{0, …, degree-1}`, stored as its image array.
///
/// Composition is left-to-right: `(a * b)(p) = b(a(p))`, i.e. `a` acts first.
/// This matches the usual convention for products of cycles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1 && degree <= DEGREE_CAP);
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Build from an explicit image array, validating bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 || n > DEGREE_CAP {
            return Err(Error::DegreeCapExceeded(n, DEGREE_CAP));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(Error::NotBijective { degree: n });
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u8) -> u8 {
        self.images[point as usize]
    }

    /// `(self * other)(p) = other(self(p))`: apply `self` first.
    pub fn product(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().product(self).product(g)
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .product(&other.inverse())
            .product(self)
            .product(other)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    pub fn first_moved(&self) -> Option<u8> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u8 != x)
            .map(|(i, _)| i as u8)
    }

    /// Multiplicative order, via the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut result: u64 = 1;
        for cycle in self.cycles_including_fixed() {
            result = lcm(result, cycle.len() as u64);
        }
        result
    }

    /// Parity: `true` when even.
    pub fn is_even(&self) -> bool {
        let mut transpositions = 0usize;
        for cycle in self.cycles_including_fixed() {
            transpositions += cycle.len() - 1;
        }
        transpositions % 2 == 0
    }

    fn cycles_including_fixed(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n as u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        self.cycles_including_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    /// Pad with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Result<Permutation, Error> {
        if degree < self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: degree,
            });
        }
        if degree > DEGREE_CAP {
            return Err(Error::DegreeCapExceeded(degree, DEGREE_CAP));
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Ok(Permutation { images })
    }

    /// Build a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation, Error> {
        if degree == 0 || degree > DEGREE_CAP {
            return Err(Error::DegreeCapExceeded(degree, DEGREE_CAP));
        }
        let mut perm = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<u8> = (0..degree as u8).collect();
            let mut used = vec![false; degree];
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if pt == 0 || pt > degree || next == 0 || next > degree {
                    return Err(Error::Parse(format!("point {pt} out of range 1..={degree}")));
                }
                if used[pt - 1] {
                    return Err(Error::Parse(format!("cycle repeats point {pt}")));
                }
                used[pt - 1] = true;
                images[pt - 1] = (next - 1) as u8;
            }
            let c = Permutation::from_images(images)
                .map_err(|_| Error::Parse("cycle repeats a point".to_string()))?;
            perm = perm.product(&c);
        }
        Ok(perm)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points, e.g. `(1,2)(3,4)`; identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", *p as usize + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse cycle notation without a fixed degree; the degree becomes the
/// largest point mentioned (at least 1). Cycles compose left-to-right.
pub fn parse_cycles(s: &str) -> Result<(Vec<Vec<usize>>, usize), Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty permutation string".to_string()));
    }
    let mut cycles = Vec::new();
    let mut max_point = 1usize;
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(Error::Parse(format!("expected '(' but found '{c}'")));
        }
        chars.next();
        let mut cycle = Vec::new();
        let mut num = String::new();
        loop {
            match chars.next() {
                Some(')') => {
                    if !num.is_empty() {
                        let p: usize = num
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad point '{num}'")))?;
                        cycle.push(p);
                    } else if !cycle.is_empty() {
                        return Err(Error::Parse("trailing comma in cycle".to_string()));
                    }
                    break;
                }
                Some(',') | Some(' ') => {
                    if num.is_empty() {
                        if chars.peek() == Some(&' ') {
                            continue;
                        }
                        return Err(Error::Parse("empty entry in cycle".to_string()));
                    }
                    let p: usize = num
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad point '{num}'")))?;
                    cycle.push(p);
                    num.clear();
                }
                Some(d) if d.is_ascii_digit() => num.push(d),
                Some(bad) => return Err(Error::Parse(format!("unexpected character '{bad}'"))),
                None => return Err(Error::Parse("unterminated cycle".to_string())),
            }
        }
        for &p in &cycle {
            if p == 0 {
                return Err(Error::Parse("points are 1-based; 0 is not valid".to_string()));
            }
            max_point = max_point.max(p);
        }
        if cycle.len() == 1 {
            return Err(Error::Parse("singleton cycle is not valid notation".to_string()));
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok((cycles, max_point))
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (cycles, degree) = parse_cycles(s)?;
        Permutation::from_cycles(degree, &cycles)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_applies_left_first() {
        // a = (1,2), b = (2,3) acting on 3 points; a*b sends 1 -> 2 -> 3.
        let a: Permutation = "(1,2)".parse::<Permutation>().unwrap().extended(3).unwrap();
        let b: Permutation = "(2,3)".parse::<Permutation>().unwrap().extended(3).unwrap();
        let ab = a.product(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.to_string(), "(1,3,2)");
    }

    #[test]
    fn parse_print_round_trip() {
        for s in ["(1,2)", "(1,2)(3,4)", "(1,2,3,4)", "(2,5)(3,7,9)"] {
            let p: Permutation = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        let id: Permutation = "()".parse().unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "()");
    }

    #[test]
    fn rejects_bad_input() {
        assert!("(0,1)".parse::<Permutation>().is_err());
        assert!("(1,1)".parse::<Permutation>().is_err());
        assert!("1,2".parse::<Permutation>().is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn order_and_parity() {
        let p: Permutation = "(1,2,3,4)".parse().unwrap();
        assert_eq!(p.order(), 4);
        assert!(!p.is_even());
        let q: Permutation = "(1,2,3)".parse().unwrap();
        assert_eq!(q.order(), 3);
        assert!(q.is_even());
    }

    #[test]
    fn inverse_round_trip() {
        let p: Permutation = "(1,5,3)(2,4)".parse().unwrap();
        assert!(p.product(&p.inverse()).is_identity());
        assert!(p.inverse().product(&p).is_identity());
    }
}
