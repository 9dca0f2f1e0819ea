use std::sync::Arc;

use permgroup_core::{ElementTable, GroupHandle};
use subgroup_lattice::{quotient_group, ChiefSeries, ElemSet, QuotientMap, SubgroupLattice};

use crate::error::Error;
use crate::gf::{nullspace, Mat, Subspace};

/// Where a module came from, for reports.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub group_id: String,
    pub factor_index: usize,
    pub factor_order: usize,
}

/// A finite-dimensional GF(p) vector space with a right action of a finite
/// group: one invertible matrix per generator, extended to every element and
/// verified to be a homomorphism on the full multiplication table.
#[derive(Clone)]
pub struct GModule {
    p: u16,
    dim: usize,
    acting: GroupHandle,
    table: Arc<ElementTable>,
    gen_mats: Vec<Mat>,
    elem_mats: Vec<Mat>,
    provenance: Option<Provenance>,
}

impl GModule {
    /// Build a module, verifying invertibility and (exhaustively) that the
    /// generator assignment extends to a homomorphism.
    pub fn new(
        acting: GroupHandle,
        gen_mats: Vec<Mat>,
        p: u16,
        dim: usize,
        elem_bound: u128,
        provenance: Option<Provenance>,
    ) -> Result<GModule, Error> {
        if dim == 0 {
            return Err(Error::InvalidModule("dimension must be at least 1".into()));
        }
        if gen_mats.len() != acting.generators().len() {
            return Err(Error::InvalidModule(
                "one matrix per acting-group generator is required".into(),
            ));
        }
        for m in &gen_mats {
            if m.rows != dim || m.cols != dim || m.p != p {
                return Err(Error::InvalidModule("matrix shape mismatch".into()));
            }
            if !m.is_invertible() {
                return Err(Error::InvalidModule("generator matrix is singular".into()));
            }
        }
        let table = acting.element_table(elem_bound)?;
        let n = table.len();
        let mut elem_mats: Vec<Option<Mat>> = vec![None; n];
        elem_mats[0] = Some(Mat::identity(p, dim));
        let gen_indices: Vec<u16> = acting
            .generators()
            .iter()
            .map(|g| table.index_of(g).expect("generator indexed"))
            .collect();
        let mut queue: Vec<u16> = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            let ma = elem_mats[a as usize].clone().expect("queued element has a matrix");
            for (j, &gi) in gen_indices.iter().enumerate() {
                let b = table.mult(a, gi);
                let mb = ma.matmul(&gen_mats[j]);
                match &elem_mats[b as usize] {
                    None => {
                        elem_mats[b as usize] = Some(mb);
                        queue.push(b);
                    }
                    Some(existing) => {
                        if *existing != mb {
                            return Err(Error::InvalidModule(
                                "generator matrices do not extend to a homomorphism".into(),
                            ));
                        }
                    }
                }
            }
        }
        let elem_mats: Vec<Mat> = elem_mats
            .into_iter()
            .map(|m| m.expect("group is generated by its generators"))
            .collect();
        Ok(GModule {
            p,
            dim,
            acting,
            table,
            gen_mats,
            elem_mats,
            provenance,
        })
    }

    pub fn prime(&self) -> u16 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn acting(&self) -> &GroupHandle {
        &self.acting
    }

    pub fn gen_mats(&self) -> &[Mat] {
        &self.gen_mats
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// Matrix of an arbitrary element, by its index in the acting group's
    /// element table.
    pub fn elem_mat(&self, idx: u16) -> &Mat {
        &self.elem_mats[idx as usize]
    }

    /// Element indices acting as the identity (the kernel of the action).
    pub fn kernel_indices(&self) -> Vec<u16> {
        (0..self.table.len() as u16)
            .filter(|&i| self.elem_mats[i as usize].is_identity())
            .collect()
    }

    pub fn kernel_set(&self) -> ElemSet {
        ElemSet::from_sorted(self.table.len(), &self.kernel_indices())
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_indices().len() == 1
    }

    /// Number of vectors `p^dim`, the cost driver for exhaustive spinning.
    pub fn vector_count(&self) -> Option<usize> {
        let mut count: usize = 1;
        for _ in 0..self.dim {
            count = count.checked_mul(self.p as usize)?;
        }
        Some(count)
    }

    fn vector_at(&self, mut index: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim];
        for slot in v.iter_mut() {
            *slot = (index % self.p as usize) as u8;
            index /= self.p as usize;
        }
        v
    }

    /// Smallest subspace containing `v`, closed under the given matrices and
    /// their inverses.
    pub fn spin_under(&self, mats: &[Mat], v: &[u8]) -> Result<Subspace, Error> {
        if v.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVector);
        }
        let mut closed: Vec<Mat> = mats.to_vec();
        for m in mats {
            closed.push(m.inverse().expect("action matrices are invertible"));
        }
        let mut space = Subspace::zero(self.p, self.dim);
        space.insert(v);
        let mut queue: Vec<Vec<u8>> = vec![v.to_vec()];
        while let Some(w) = queue.pop() {
            for m in &closed {
                let u = m.apply_row(&w);
                if space.insert(&u) {
                    queue.push(u);
                }
            }
        }
        Ok(space)
    }

    /// Spin under the full acting group.
    pub fn spin(&self, v: &[u8]) -> Result<Subspace, Error> {
        self.spin_under(&self.gen_mats.clone(), v)
    }

    fn is_irreducible_under(&self, mats: &[Mat], vector_bound: usize) -> Result<bool, Error> {
        let count = self
            .vector_count()
            .filter(|&c| c <= vector_bound)
            .ok_or(Error::VectorBoundExceeded { bound: vector_bound })?;
        for idx in 1..count {
            let v = self.vector_at(idx);
            if self.spin_under(mats, &v)?.dim() < self.dim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exhaustive irreducibility: every nonzero vector must spin to the whole
    /// space. This is the specified oracle; anything faster must agree with
    /// it.
    pub fn is_irreducible(&self, vector_bound: usize) -> Result<bool, Error> {
        self.is_irreducible_under(&self.gen_mats.clone(), vector_bound)
    }

    /// Matrices of the generators of a subgroup given by element indices.
    pub fn restriction_mats(&self, gen_indices: &[u16]) -> Vec<Mat> {
        gen_indices
            .iter()
            .map(|&i| self.elem_mats[i as usize].clone())
            .collect()
    }

    /// Irreducible, and the restriction to every maximal subgroup of the
    /// acting group is irreducible; a trivial acting group qualifies by
    /// convention.
    pub fn is_strongly_irreducible(
        &self,
        lattice: &SubgroupLattice,
        vector_bound: usize,
    ) -> Result<bool, Error> {
        self.check_lattice(lattice)?;
        if self.acting.is_trivial() {
            return Ok(true);
        }
        if !self.is_irreducible(vector_bound)? {
            return Ok(false);
        }
        for &m in lattice.maximal_ids() {
            let mats = self.restriction_mats(&lattice.node(m).gens);
            if !self.is_irreducible_under(&mats, vector_bound)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restriction to every normal subgroup of the acting group is
    /// homogeneous (all minimal submodules pairwise isomorphic). The module
    /// must be irreducible.
    pub fn is_quasi_primitive(
        &self,
        lattice: &SubgroupLattice,
        vector_bound: usize,
    ) -> Result<bool, Error> {
        self.check_lattice(lattice)?;
        if !self.is_irreducible(vector_bound)? {
            return Err(Error::InvalidModule(
                "quasi-primitivity is defined for irreducible modules".into(),
            ));
        }
        let count = self
            .vector_count()
            .filter(|&c| c <= vector_bound)
            .ok_or(Error::VectorBoundExceeded { bound: vector_bound })?;
        for n_id in lattice.normal_ids() {
            if n_id == lattice.trivial_id() {
                // Restriction to the trivial group is a sum of trivial
                // modules: always homogeneous.
                continue;
            }
            let mats = self.restriction_mats(&lattice.node(n_id).gens);
            // Collect inclusion-minimal spins.
            let mut minimal: Vec<Subspace> = Vec::new();
            for idx in 1..count {
                let v = self.vector_at(idx);
                let s = self.spin_under(&mats, &v)?;
                if minimal.iter().any(|m| m.is_subspace_of(&s) && m.dim() < s.dim()) {
                    continue;
                }
                minimal.retain(|m| !(s.is_subspace_of(m) && s.dim() < m.dim()));
                if !minimal.contains(&s) {
                    minimal.push(s);
                }
            }
            let first = restricted_action(self.p, &minimal[0], &mats);
            for other in minimal.iter().skip(1) {
                let mats_other = restricted_action(self.p, other, &mats);
                if !mats_isomorphic(self.p, &first, &mats_other, vector_bound)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Contragredient module: `g ↦ (ρ(g)^-1)^T`.
    pub fn dual_module(&self) -> GModule {
        let gen_mats: Vec<Mat> = self
            .gen_mats
            .iter()
            .map(|m| m.inverse().expect("action matrices are invertible").transpose())
            .collect();
        let elem_mats: Vec<Mat> = self
            .elem_mats
            .iter()
            .map(|m| m.inverse().expect("action matrices are invertible").transpose())
            .collect();
        GModule {
            p: self.p,
            dim: self.dim,
            acting: self.acting.clone(),
            table: self.table.clone(),
            gen_mats,
            elem_mats,
            provenance: self.provenance.clone(),
        }
    }

    /// Push the action through `G → G/N` when `N` acts trivially. Returns
    /// the induced module over the quotient group.
    pub fn restrict_and_lift(
        &self,
        lattice: &SubgroupLattice,
        n_id: u32,
    ) -> Result<(GModule, QuotientMap), Error> {
        self.check_lattice(lattice)?;
        for e in lattice.node(n_id).elems.iter() {
            if !self.elem_mats[e as usize].is_identity() {
                return Err(Error::NotActedTrivially);
            }
        }
        let qmap = quotient_group(lattice, n_id)?;
        let quotient = qmap.group().clone();
        let mut gen_mats = Vec::new();
        for qg in quotient.generators() {
            let j = qmap
                .gen_images()
                .iter()
                .position(|img| img == qg)
                .expect("quotient generators are images of parent generators");
            gen_mats.push(self.gen_mats[j].clone());
        }
        let module = GModule::new(
            quotient,
            gen_mats,
            self.p,
            self.dim,
            u128::MAX,
            self.provenance.clone(),
        )?;
        Ok((module, qmap))
    }

    fn check_lattice(&self, lattice: &SubgroupLattice) -> Result<(), Error> {
        if lattice.parent().id() != self.acting.id() {
            return Err(Error::InvalidModule(
                "lattice does not belong to the acting group".into(),
            ));
        }
        Ok(())
    }
}

/// The action matrices of `mats` restricted to an invariant subspace, in the
/// subspace's basis coordinates.
pub fn restricted_action(p: u16, space: &Subspace, mats: &[Mat]) -> Vec<Mat> {
    let d = space.dim();
    mats.iter()
        .map(|m| {
            let mut rows = Vec::with_capacity(d);
            for b in space.basis() {
                let image = m.apply_row(b);
                rows.push(coordinates(p, space, &image));
            }
            Mat::from_rows(p, rows)
        })
        .collect()
}

/// Coordinates of `v` in the RREF basis of `space` (v must lie in it).
fn coordinates(p: u16, space: &Subspace, v: &[u8]) -> Vec<u8> {
    let mut w = v.to_vec();
    let mut coords = vec![0u8; space.dim()];
    for (i, b) in space.basis().iter().enumerate() {
        let piv = b.iter().position(|&x| x != 0).expect("basis rows are nonzero");
        let c = w[piv];
        coords[i] = c;
        if c != 0 {
            for j in 0..w.len() {
                let s = (c as u32 * b[j] as u32) % p as u32;
                w[j] = ((w[j] as u32 + p as u32 - s as u8 as u32) % p as u32) as u8;
            }
        }
    }
    debug_assert!(w.iter().all(|&x| x == 0), "vector lies outside the subspace");
    coords
}

/// Module isomorphism for two aligned matrix lists over the same group: is
/// there an invertible `T` with `A_i · T = T · B_i` for all i? The
/// intertwiner space is solved exactly; invertibility is found by exhaustive
/// search when `p^d` is small, otherwise by deterministic sampling, and a
/// failed sample search is an explicit error rather than a silent `false`.
pub fn mats_isomorphic(
    p: u16,
    a: &[Mat],
    b: &[Mat],
    search_bound: usize,
) -> Result<bool, Error> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return Ok(true);
    }
    let n = a[0].rows;
    if b[0].rows != n {
        return Ok(false);
    }
    // Equations over the n² unknowns T_{kl}: for each generator i and each
    // (r, c): sum_k A_i[r,k] T[k,c] - sum_l T[r,l] B_i[l,c] = 0.
    let unknowns = n * n;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (ma, mb) in a.iter().zip(b) {
        for r in 0..n {
            for c in 0..n {
                let mut eq = vec![0u8; unknowns];
                for k in 0..n {
                    // coefficient of T[k,c]
                    let idx = k * n + c;
                    eq[idx] = ((eq[idx] as u32 + ma.get(r, k) as u32) % p as u32) as u8;
                }
                for l in 0..n {
                    // coefficient of T[r,l]
                    let idx = r * n + l;
                    eq[idx] =
                        ((eq[idx] as u32 + p as u32 - mb.get(l, c) as u32 % p as u32) % p as u32) as u8;
                }
                rows.push(eq);
            }
        }
    }
    let system = Mat::from_rows(p, rows);
    let hom_basis = nullspace(&system);
    let d = hom_basis.len();
    if d == 0 {
        return Ok(false);
    }
    // Exhaustive search over the Hom space when small enough.
    let mut total: usize = 1;
    let mut exhaustive = true;
    for _ in 0..d {
        match total.checked_mul(p as usize) {
            Some(t) if t <= search_bound => total = t,
            _ => {
                exhaustive = false;
                break;
            }
        }
    }
    let candidate_is_invertible = |coeffs: &[u8]| -> bool {
        let mut t = Mat::zero(p, n, n);
        for (ci, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (pos, &base) in hom_basis[ci].iter().enumerate() {
                let cur = t.get(pos / n, pos % n);
                let v = ((cur as u32 + c as u32 * base as u32) % p as u32) as u8;
                t.set(pos / n, pos % n, v);
            }
        }
        t.is_invertible()
    };
    if exhaustive {
        let mut coeffs = vec![0u8; d];
        for idx in 1..total {
            let mut x = idx;
            for slot in coeffs.iter_mut() {
                *slot = (x % p as usize) as u8;
                x /= p as usize;
            }
            if candidate_is_invertible(&coeffs) {
                return Ok(true);
            }
        }
        Ok(false)
    } else {
        // Deterministic LCG sampling; the Hom space is too big to sweep.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        for _ in 0..search_bound {
            let mut coeffs = vec![0u8; d];
            for slot in coeffs.iter_mut() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                *slot = ((state >> 33) % p as u64) as u8;
            }
            if coeffs.iter().any(|&c| c != 0) && candidate_is_invertible(&coeffs) {
                return Ok(true);
            }
        }
        Err(Error::IsoUnknown)
    }
}

/// Module isomorphism over a common acting group.
pub fn module_isomorphic(m1: &GModule, m2: &GModule, search_bound: usize) -> Result<bool, Error> {
    if m1.p != m2.p || m1.dim != m2.dim {
        return Ok(false);
    }
    if m1.acting.id() != m2.acting.id() {
        return Err(Error::InvalidModule(
            "module isomorphism requires a common acting group".into(),
        ));
    }
    mats_isomorphic(m1.p, &m1.gen_mats, &m2.gen_mats, search_bound)
}

/// The conjugation action of `G` on an elementary abelian chief factor
/// `top/bottom`, as matrices over GF(p) for the generators of `G`.
pub fn chief_factor_module(
    lattice: &SubgroupLattice,
    series: &ChiefSeries,
    index: usize,
    elem_bound: u128,
) -> Result<GModule, Error> {
    let factor = &series.factors[index];
    let (p, dim) = factor
        .prime_power
        .ok_or(Error::NotElementaryAbelian)?;
    let table = lattice.table().clone();
    let top = lattice.node(factor.top);
    let bottom = lattice.node(factor.bottom);
    let top_elems = top.elems.to_sorted_vec();
    let bottom_elems = bottom.elems.to_sorted_vec();

    // Elementary abelian check: x^p lands in the bottom for all x in the top.
    for &x in &top_elems {
        let xp = table.power(x, p as u64);
        if !bottom.elems.contains(xp) {
            return Err(Error::NotElementaryAbelian);
        }
    }

    // Coset keys inside the top group.
    let key_of = |x: u16| -> u16 {
        bottom_elems.iter().map(|&b| table.mult(b, x)).min().expect("nonempty")
    };

    // Independent factor generators, discovered in canonical element order.
    let mut span_set = bottom.elems.clone();
    let mut basis: Vec<u16> = Vec::new();
    for &e in &top_elems {
        if span_set.contains(e) {
            continue;
        }
        basis.push(e);
        let mut seed = bottom.gens.clone();
        seed.extend(basis.iter().copied());
        let span = table.close_subgroup(&seed);
        span_set = ElemSet::from_sorted(table.len(), &span);
        if span.len() == top_elems.len() {
            break;
        }
    }
    debug_assert_eq!(basis.len(), dim as usize);
    let dim = dim as usize;

    // Coordinates for every coset: enumerate all exponent tuples.
    let mut coords_of_key: std::collections::HashMap<u16, Vec<u8>> = std::collections::HashMap::new();
    let count = (p as usize).pow(dim as u32);
    for idx in 0..count {
        let mut x = idx;
        let mut v = vec![0u8; dim];
        let mut elem = 0u16;
        for (i, slot) in v.iter_mut().enumerate() {
            let a = (x % p as usize) as u8;
            x /= p as usize;
            *slot = a;
            if a > 0 {
                let powered = table.power(basis[i], a as u64);
                elem = table.mult(elem, powered);
            }
        }
        let key = key_of(elem);
        let prior = coords_of_key.insert(key, v);
        debug_assert!(prior.is_none(), "coset representatives are unique");
    }
    debug_assert_eq!(coords_of_key.len(), count);

    // One matrix per parent generator: row i is the image of basis[i] under
    // conjugation.
    let parent = lattice.parent();
    let mut gen_mats = Vec::new();
    for g in parent.generators() {
        let gi = table.index_of(g).expect("generator indexed");
        let mut rows = Vec::with_capacity(dim);
        for &e in &basis {
            let image = table.conj(e, gi);
            rows.push(coords_of_key[&key_of(image)].clone());
        }
        gen_mats.push(Mat::from_rows(p as u16, rows));
    }
    GModule::new(
        parent.clone(),
        gen_mats,
        p as u16,
        dim,
        elem_bound,
        Some(Provenance {
            group_id: parent.id().to_string(),
            factor_index: index,
            factor_order: factor.order,
        }),
    )
}
