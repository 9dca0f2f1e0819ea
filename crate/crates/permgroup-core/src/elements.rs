use std::collections::HashMap;

use crate::perm::Permutation;

/// Full element enumeration of a small group with a canonical indexing:
/// elements are sorted lexicographically by image array, so index 0 is always
/// the identity and every downstream ordering derived from indices is
/// deterministic and independent of generator presentation.
#[derive(Debug)]
pub struct ElementTable {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Vec<u8>, u16>,
    mult: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u16>,
}

impl ElementTable {
    /// Enumerate all elements of the group generated by `gens`. The caller
    /// is responsible for checking the group order against its bound first.
    pub fn build(degree: usize, gens: &[Permutation]) -> ElementTable {
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
        let mut queue: Vec<Permutation> = vec![identity.clone()];
        seen.insert(identity.images().to_vec(), ());
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            head += 1;
            for g in gens {
                let next = current.product(g);
                if !seen.contains_key(next.images()) {
                    seen.insert(next.images().to_vec(), ());
                    queue.push(next);
                }
            }
        }
        let mut elements = queue;
        elements.sort();
        let n = elements.len();
        assert!(n <= u16::MAX as usize, "element table limited to 65535 elements");
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.images().to_vec(), i as u16);
        }
        let mut mult = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = elements[a].product(&elements[b]);
                mult[a * n + b] = index[p.images()];
            }
        }
        let mut inv = vec![0u16; n];
        let mut orders = vec![0u16; n];
        for a in 0..n {
            inv[a] = index[elements[a].inverse().images()];
            orders[a] = elements[a].order() as u16;
        }
        ElementTable {
            degree,
            elements,
            index,
            mult,
            inv,
            orders,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn perm(&self, i: u16) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u16> {
        self.index.get(p.images()).copied()
    }

    #[inline]
    pub fn mult(&self, a: u16, b: u16) -> u16 {
        self.mult[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn order_of(&self, a: u16) -> u16 {
        self.orders[a as usize]
    }

    /// `g^-1 * a * g` in index space.
    #[inline]
    pub fn conj(&self, a: u16, g: u16) -> u16 {
        self.mult(self.mult(self.inv(g), a), g)
    }

    pub fn power(&self, a: u16, k: u64) -> u16 {
        let mut result = 0u16;
        let mut remaining = k;
        let mut square = a;
        while remaining > 0 {
            if remaining & 1 == 1 {
                result = self.mult(result, square);
            }
            square = self.mult(square, square);
            remaining >>= 1;
        }
        result
    }

    /// Close a set of element indices under multiplication; returns a sorted
    /// element list.
    pub fn close_subgroup(&self, seed: &[u16]) -> Vec<u16> {
        let n = self.elements.len();
        let mut member = vec![false; n];
        let mut list: Vec<u16> = vec![0];
        member[0] = true;
        let mut queue: Vec<u16> = Vec::new();
        for &s in seed {
            if !member[s as usize] {
                member[s as usize] = true;
                list.push(s);
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for i in 0..list.len() {
                let b = list[i];
                for c in [self.mult(a, b), self.mult(b, a)] {
                    if !member[c as usize] {
                        member[c as usize] = true;
                        list.push(c);
                        queue.push(c);
                    }
                }
            }
        }
        list.sort_unstable();
        list
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, degree: usize) -> Permutation {
        s.parse::<Permutation>().unwrap().extended(degree).unwrap()
    }

    #[test]
    fn s3_table() {
        let gens = vec![perm("(1,2)", 3), perm("(1,2,3)", 3)];
        let t = ElementTable::build(3, &gens);
        assert_eq!(t.len(), 6);
        assert!(t.perm(0).is_identity());
        for a in 0..6u16 {
            assert_eq!(t.mult(a, t.inv(a)), 0);
        }
        // Orders: identity 1, three transpositions, two 3-cycles.
        let mut orders: Vec<u16> = (0..6).map(|i| t.order_of(i)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn closure_of_transpositions() {
        let gens = vec![perm("(1,2)", 4), perm("(1,2,3,4)", 4)];
        let t = ElementTable::build(4, &gens);
        let a = t.index_of(&perm("(1,2)", 4)).unwrap();
        let b = t.index_of(&perm("(3,4)", 4)).unwrap();
        assert_eq!(t.close_subgroup(&[a, b]).len(), 4);
    }
}
