use serde::{Deserialize, Serialize};

use permgroup_core::GroupHandle;

use crate::classes::ConjugacyClasses;
use crate::cyclotomic::{gcd, CyclotomicInteger};
use crate::error::Error;

/// An exact character table: one row of cyclotomic integers per irreducible
/// character, columns indexed by conjugacy classes in canonical order.
pub struct CharacterTable {
    group: GroupHandle,
    classes: ConjugacyClasses,
    degrees: Vec<u64>,
    rows: Vec<Vec<CyclotomicInteger>>,
}

impl CharacterTable {
    pub(crate) fn assemble(
        group: GroupHandle,
        classes: ConjugacyClasses,
        degrees: Vec<u64>,
        rows: Vec<Vec<CyclotomicInteger>>,
    ) -> CharacterTable {
        CharacterTable {
            group,
            classes,
            degrees,
            rows,
        }
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn value(&self, row: usize, class: usize) -> &CyclotomicInteger {
        &self.rows[row][class]
    }

    pub fn rows(&self) -> &[Vec<CyclotomicInteger>] {
        &self.rows
    }

    /// Exact first orthogonality: Σ_k |C_k| χ_i(g_k) conj(χ_j(g_k)) equals
    /// δ_ij |G| as cyclotomic integers.
    pub fn check_row_orthogonality(&self) -> Result<(), Error> {
        let e = self.classes.exponent();
        let order = self.group.order() as i64;
        let k = self.classes.count();
        // Exponent-form support of every value and its conjugate.
        let supports: Vec<Vec<Vec<(u64, i64)>>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|v| support(v, e)).collect())
            .collect();
        for i in 0..self.rows.len() {
            for j in i..self.rows.len() {
                let mut acc = vec![0i64; e as usize];
                for t in 0..k {
                    let size = self.classes.size(t) as i64;
                    for &(ea, ca) in &supports[i][t] {
                        for &(eb, cb) in &supports[j][t] {
                            // conj flips the exponent of the second factor.
                            let exp = (ea + (e - eb) % e) % e;
                            acc[exp as usize] += size * ca * cb;
                        }
                    }
                }
                let total = CyclotomicInteger::from_exponent_form(e, acc);
                let expected = if i == j {
                    CyclotomicInteger::from_integer(order)
                } else {
                    CyclotomicInteger::zero()
                };
                if total != expected {
                    return Err(Error::Orthogonality(i, j));
                }
            }
        }
        Ok(())
    }

    /// Exact second orthogonality: Σ_i χ_i(g) conj(χ_i(h)) equals 0 for
    /// non-conjugate g, h and |C_G(g)| for g = h.
    pub fn check_column_orthogonality(&self) -> Result<(), Error> {
        let e = self.classes.exponent();
        let order = self.group.order() as i64;
        let k = self.classes.count();
        let supports: Vec<Vec<Vec<(u64, i64)>>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|v| support(v, e)).collect())
            .collect();
        for s in 0..k {
            for t in s..k {
                let mut acc = vec![0i64; e as usize];
                for supports_row in &supports {
                    for &(ea, ca) in &supports_row[s] {
                        for &(eb, cb) in &supports_row[t] {
                            let exp = (ea + (e - eb) % e) % e;
                            acc[exp as usize] += ca * cb;
                        }
                    }
                }
                let total = CyclotomicInteger::from_exponent_form(e, acc);
                let expected = if s == t {
                    CyclotomicInteger::from_integer(order / self.classes.size(s) as i64)
                } else {
                    CyclotomicInteger::zero()
                };
                if total != expected {
                    return Err(Error::Orthogonality(s, t));
                }
            }
        }
        Ok(())
    }

    /// Galois consistency: applying ζ ↦ ζ^j to a value must equal the value
    /// at the class of the j-th powers, for every j coprime to the exponent.
    pub fn check_galois_consistency(&self) -> Result<(), Error> {
        let e = self.classes.exponent();
        for j in 1..e {
            if gcd(j, e) != 1 {
                continue;
            }
            for t in 0..self.classes.count() {
                let image_class = self.classes.power_class(t, j);
                for row in &self.rows {
                    let mapped = apply_galois(&row[t], j, e);
                    if mapped != row[image_class] {
                        return Err(Error::InternalAssertion(format!(
                            "Galois map ζ→ζ^{j} does not permute column {t} to {image_class}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Classes on which no irreducible character vanishes; their union is
    /// the set of non-vanishing elements.
    pub fn nonvanishing_classes(&self) -> Vec<usize> {
        (0..self.classes.count())
            .filter(|&t| self.rows.iter().all(|row| !row[t].is_zero()))
            .collect()
    }

    /// Element indices (in the group's element table) of all non-vanishing
    /// elements.
    pub fn nonvanishing_elements(&self) -> Vec<u16> {
        let mut out: Vec<u16> = self
            .nonvanishing_classes()
            .into_iter()
            .flat_map(|t| self.classes.members(t).to_vec())
            .collect();
        out.sort_unstable();
        out
    }

    pub fn export(&self) -> TableExport {
        TableExport {
            order: self.group.order() as u64,
            class_sizes: self.classes.sizes().to_vec(),
            class_reps: (0..self.classes.count())
                .map(|t| self.classes.rep_perm(t).to_string())
                .collect(),
            class_element_orders: (0..self.classes.count())
                .map(|t| self.classes.element_order(t))
                .collect(),
            degrees: self.degrees.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| ValueExport {
                            e: v.conductor(),
                            c: v.coeffs().to_vec(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Nonzero terms of a value viewed in exponent form at conductor `e`.
fn support(v: &CyclotomicInteger, e: u64) -> Vec<(u64, i64)> {
    let f = e / v.conductor();
    v.coeffs()
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(j, &c)| (j as u64 * f, c))
        .collect()
}

fn apply_galois(v: &CyclotomicInteger, j: u64, e: u64) -> CyclotomicInteger {
    // Lift into conductor e so the exponent map is well defined, then map.
    let mut poly = vec![0i64; e as usize];
    let f = e / v.conductor();
    for (idx, &c) in v.coeffs().iter().enumerate() {
        if c != 0 {
            poly[(idx as u64 * f * j % e) as usize] += c;
        }
    }
    CyclotomicInteger::from_exponent_form(e, poly)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableExport {
    pub order: u64,
    pub class_sizes: Vec<usize>,
    pub class_reps: Vec<String>,
    pub class_element_orders: Vec<u64>,
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<ValueExport>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ValueExport {
    pub e: u64,
    pub c: Vec<i64>,
}
