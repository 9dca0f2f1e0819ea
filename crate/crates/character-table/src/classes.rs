use std::sync::Arc;

use permgroup_core::{ElementTable, GroupHandle, Permutation};

use crate::error::Error;

/// Conjugacy classes of a small group, in canonical order: the identity
/// class first, then ascending element order, ties broken by the smallest
/// element index (lexicographically smallest image array).
pub struct ConjugacyClasses {
    table: Arc<ElementTable>,
    /// Representative element index per class (the smallest in the class).
    reps: Vec<u16>,
    sizes: Vec<usize>,
    members: Vec<Vec<u16>>,
    class_of: Vec<u16>,
    /// Class index of the inverses of each class.
    inverse_map: Vec<usize>,
}

pub fn conjugacy_classes(g: &GroupHandle, bound: u128) -> Result<ConjugacyClasses, Error> {
    if g.order() > bound {
        return Err(Error::OrderBoundExceeded {
            order: g.order(),
            bound,
        });
    }
    let table = g.element_table(bound)?;
    let n = table.len();
    let gen_indices: Vec<u16> = g
        .generators()
        .iter()
        .map(|p| table.index_of(p).expect("generator indexed"))
        .collect();
    let mut assigned: Vec<bool> = vec![false; n];
    let mut raw_classes: Vec<Vec<u16>> = Vec::new();
    for a in 0..n as u16 {
        if assigned[a as usize] {
            continue;
        }
        let mut orbit = vec![a];
        assigned[a as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &gi in &gen_indices {
                let y = table.conj(x, gi);
                if !assigned[y as usize] {
                    assigned[y as usize] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        raw_classes.push(orbit);
    }
    // Identity first, then ascending element order, ties by smallest member.
    raw_classes.sort_by_key(|c| (table.order_of(c[0]), c[0]));
    debug_assert_eq!(raw_classes[0], vec![0]);

    let mut class_of = vec![0u16; n];
    for (ci, class) in raw_classes.iter().enumerate() {
        for &x in class {
            class_of[x as usize] = ci as u16;
        }
    }
    let reps: Vec<u16> = raw_classes.iter().map(|c| c[0]).collect();
    let sizes: Vec<usize> = raw_classes.iter().map(|c| c.len()).collect();
    let inverse_map: Vec<usize> = reps
        .iter()
        .map(|&r| class_of[table.inv(r) as usize] as usize)
        .collect();
    debug_assert_eq!(sizes.iter().sum::<usize>(), n);
    Ok(ConjugacyClasses {
        table,
        reps,
        sizes,
        members: raw_classes,
        class_of,
        inverse_map,
    })
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn rep(&self, class: usize) -> u16 {
        self.reps[class]
    }

    pub fn rep_perm(&self, class: usize) -> &Permutation {
        self.table.perm(self.reps[class])
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn members(&self, class: usize) -> &[u16] {
        &self.members[class]
    }

    pub fn class_of(&self, elem: u16) -> usize {
        self.class_of[elem as usize] as usize
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_map[class]
    }

    /// Element order of the class representative (constant on the class).
    pub fn element_order(&self, class: usize) -> u64 {
        self.table.order_of(self.reps[class]) as u64
    }

    /// Class of `rep^k`.
    pub fn power_class(&self, class: usize, k: u64) -> usize {
        let powered = self.table.power(self.reps[class], k);
        self.class_of[powered as usize] as usize
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut m = 1u64;
        for c in 0..self.count() {
            m = crate::cyclotomic::lcm(m, self.element_order(c));
        }
        m
    }
}
