//! Exact character tables by the Dixon–Schneider method: simultaneous
//! eigenvectors of the class matrices over a prime field GF(ℓ) with
//! ℓ ≡ 1 (mod exp G) and ℓ > 2√|G|, followed by an exact lift to cyclotomic
//! integers through root-of-unity multiplicities.

use permgroup_core::GroupHandle;

use crate::classes::conjugacy_classes;
use crate::cyclotomic::CyclotomicInteger;
use crate::error::Error;
use crate::gfl::{charpoly, is_prime, kernel, primitive_root, restriction, roots, FL, MatL};
use crate::table::CharacterTable;

fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn character_table(g: &GroupHandle, bound: u128) -> Result<CharacterTable, Error> {
    let classes = conjugacy_classes(g, bound)?;
    let order = g.order() as u64;
    let k = classes.count();
    if k == 1 {
        return Ok(CharacterTable::assemble(
            g.clone(),
            classes,
            vec![1],
            vec![vec![CyclotomicInteger::from_integer(1)]],
        ));
    }

    let m = classes.exponent();
    // Smallest prime ℓ ≡ 1 (mod m) with ℓ > 2√|G|.
    let mut l = m + 1;
    loop {
        if l > (1 << 31) {
            return Err(Error::NoSuitablePrime { exponent: m });
        }
        if l * l > 4 * order && is_prime(l) {
            break;
        }
        l += m;
    }
    let f = FL { l };
    let z = f.pow(primitive_root(l), (l - 1) / m);

    let table = classes.table().clone();
    let class_matrix = |r: usize| -> MatL {
        let mut mat = MatL::zero(k);
        for t in 0..k {
            let zt = classes.rep(t);
            for &x in classes.members(r) {
                let y = table.mult(table.inv(x), zt);
                let s = classes.class_of(y);
                let v = f.add(mat.get(s, t), 1);
                mat.set(s, t, v);
            }
        }
        mat
    };

    // Split the k-dimensional space into common eigenspaces.
    let mut subspaces: Vec<Vec<Vec<u64>>> = {
        let basis: Vec<Vec<u64>> = (0..k)
            .map(|i| {
                let mut v = vec![0u64; k];
                v[i] = 1;
                v
            })
            .collect();
        vec![basis]
    };
    for r in 1..k {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat = class_matrix(r);
        let mut next = Vec::new();
        for basis in &subspaces {
            if basis.len() == 1 {
                next.push(basis.clone());
                continue;
            }
            let rmat = restriction(f, &mat, basis);
            let cp = charpoly(f, &rmat);
            let eigenvalues = roots(f, &cp);
            if eigenvalues.len() <= 1 {
                next.push(basis.clone());
                continue;
            }
            for lambda in eigenvalues {
                let mut shifted = rmat.clone();
                for i in 0..shifted.n {
                    let v = f.sub(shifted.get(i, i), lambda);
                    shifted.set(i, i, v);
                }
                let ker = kernel(f, &shifted);
                if ker.is_empty() {
                    continue;
                }
                let lifted: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|y| {
                        let mut v = vec![0u64; k];
                        for (ci, &c) in y.iter().enumerate() {
                            if c != 0 {
                                for (vi, item) in v.iter_mut().enumerate() {
                                    *item = f.add(*item, f.mul(c, basis[ci][vi]));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push(lifted);
            }
        }
        subspaces = next;
    }
    if subspaces.len() != k || subspaces.iter().any(|s| s.len() != 1) {
        return Err(Error::InternalAssertion(
            "class matrices failed to split into one-dimensional eigenspaces".into(),
        ));
    }

    // Normalize so the identity-class coordinate is 1: the vector then holds
    // ω_i(t) = h_t χ_i(g_t) / d_i for every class t.
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for basis in subspaces {
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::InternalAssertion(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let scale = f.inv(v[0]);
        omegas.push(v.iter().map(|&x| f.mul(x, scale)).collect());
    }

    // Degrees from the first orthogonality relation.
    let size_inv: Vec<u64> = (0..k).map(|t| f.inv(classes.size(t) as u64 % l)).collect();
    let mut degrees: Vec<u64> = Vec::with_capacity(k);
    let root_bound = isqrt(order);
    for v in &omegas {
        let mut s = 0u64;
        for t in 0..k {
            let term = f.mul(f.mul(v[t], v[classes.inverse_class(t)]), size_inv[t]);
            s = f.add(s, term);
        }
        let d_squared = f.mul(order % l, f.inv(s));
        let d = (1..=root_bound)
            .find(|&d| f.mul(d % l, d % l) == d_squared)
            .ok_or_else(|| {
                Error::InternalAssertion("no integer degree matches the eigenvector".into())
            })?;
        degrees.push(d);
    }
    if degrees.iter().map(|d| d * d).sum::<u64>() != order {
        return Err(Error::InternalAssertion(
            "degree squares do not sum to the group order".into(),
        ));
    }

    // Character values mod ℓ: χ_i(g_t) = d_i ω_i(t) / h_t.
    let char_mod: Vec<Vec<u64>> = omegas
        .iter()
        .enumerate()
        .map(|(i, v)| {
            (0..k)
                .map(|t| f.mul(f.mul(degrees[i] % l, v[t]), size_inv[t]))
                .collect()
        })
        .collect();

    // Lift to cyclotomic integers: multiplicities of each o-th root of unity
    // in χ_i(g_t), recovered by a discrete Fourier sum over the powers of
    // the class representative.
    let mut rows: Vec<Vec<CyclotomicInteger>> = vec![Vec::with_capacity(k); k];
    for t in 0..k {
        let o = classes.element_order(t);
        let power_classes: Vec<usize> = (0..o).map(|s| classes.power_class(t, s)).collect();
        let z_o = f.pow(z, m / o);
        let z_o_inv = f.inv(z_o);
        // Powers of z_o and its inverse.
        let mut pow_table = vec![1u64; o as usize];
        for j in 1..o as usize {
            pow_table[j] = f.mul(pow_table[j - 1], z_o);
        }
        let o_inv = f.inv(o % l);
        for i in 0..k {
            let value = if degrees[i] == 1 {
                // A linear character value is a single root of unity: find
                // its discrete log directly.
                let target = char_mod[i][t];
                let j = (0..o as usize)
                    .find(|&j| pow_table[j] == target)
                    .ok_or_else(|| {
                        Error::InternalAssertion("linear value is not a root of unity".into())
                    })?;
                CyclotomicInteger::root_of_unity(o, j as u64)
            } else {
                let mut poly = vec![0i64; o as usize];
                let mut total = 0u64;
                for (j, slot) in poly.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    let mut zpow = 1u64;
                    let step = f.pow(z_o_inv, j as u64);
                    for s in 0..o as usize {
                        acc = f.add(acc, f.mul(char_mod[i][power_classes[s]], zpow));
                        zpow = f.mul(zpow, step);
                    }
                    let mult = f.mul(acc, o_inv);
                    if mult > degrees[i] {
                        return Err(Error::InternalAssertion(
                            "root-of-unity multiplicity exceeds the degree".into(),
                        ));
                    }
                    total += mult;
                    *slot = mult as i64;
                }
                if total != degrees[i] {
                    return Err(Error::InternalAssertion(
                        "root-of-unity multiplicities do not sum to the degree".into(),
                    ));
                }
                CyclotomicInteger::from_exponent_form(o, poly)
            };
            rows[i].push(value);
        }
    }

    // Canonical row order: ascending degree, then the values themselves.
    let mut order_idx: Vec<usize> = (0..k).collect();
    order_idx.sort_by(|&a, &b| {
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| rows[a].cmp(&rows[b]))
    });
    let degrees: Vec<u64> = order_idx.iter().map(|&i| degrees[i]).collect();
    let rows: Vec<Vec<CyclotomicInteger>> = order_idx.into_iter().map(|i| rows[i].clone()).collect();

    let table = CharacterTable::assemble(g.clone(), classes, degrees, rows);
    // Both orthogonality relations must hold as exact cyclotomic identities;
    // a violation is a bug in the construction, never a valid outcome.
    table.check_row_orthogonality()?;
    table.check_column_orthogonality()?;
    Ok(table)
}
