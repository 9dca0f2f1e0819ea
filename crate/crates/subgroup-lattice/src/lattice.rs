use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use permgroup_core::{ElementTable, GroupHandle, Permutation, SubgroupRef};

use crate::bitset::ElemSet;
use crate::error::Error;

/// Where a proper subgroup sits in the maximal-chain structure of its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainPosition {
    /// Maximal in the parent itself.
    Maximal,
    /// Maximal in every member of `Max(G, H)`.
    SecondMaximal,
    /// Maximal in some member of `Max(G, H)` but not in all of them.
    WeakSecondMaximalOnly,
    /// Maximal in no member of `Max(G, H)`.
    Neither,
}

/// One subgroup in the lattice.
#[derive(Debug, Clone)]
pub struct SubNode {
    pub elems: ElemSet,
    /// Element indices generating the subgroup (a chain of cyclic extensions).
    pub gens: Vec<u16>,
    pub order: usize,
    /// Minimal strict overgroups, i.e. the subgroups this one is maximal in.
    pub covers: Vec<u32>,
    pub is_normal: bool,
    /// Maximal in the parent group.
    pub is_maximal: bool,
    pub class_id: u32,
}

/// A conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct ClassInfo {
    /// Node id of the representative (smallest in the canonical node order).
    pub rep: u32,
    pub members: Vec<u32>,
}

/// The complete subgroup lattice of a small group: every subgroup exactly
/// once, organized by conjugacy, with cover edges and maximality flags.
/// Nodes are sorted by (order, element list), so node ids are canonical.
pub struct SubgroupLattice {
    parent: GroupHandle,
    table: Arc<ElementTable>,
    nodes: Vec<SubNode>,
    classes: Vec<ClassInfo>,
    maximal_ids: Vec<u32>,
    by_elems: HashMap<ElemSet, u32>,
    full_id: u32,
    trivial_id: u32,
}

/// Enumerate all subgroups by layered cyclic extension: seed with the cyclic
/// subgroups, then repeatedly join known subgroups with cyclic ones until no
/// new subgroup appears.
pub fn enumerate_subgroups(parent: &GroupHandle, bound: u128) -> Result<SubgroupLattice, Error> {
    if parent.order() > bound {
        return Err(Error::OrderBoundExceeded {
            order: parent.order(),
            bound,
        });
    }
    let table = parent.element_table(bound)?;
    let n = table.len();

    // Discovery phase: sets plus generator chains, deduped by element set.
    let mut discovered: Vec<(ElemSet, Vec<u16>, Vec<u16>)> = Vec::new();
    let mut seen: HashMap<ElemSet, u32> = HashMap::new();

    let trivial_set = ElemSet::from_sorted(n, &[0]);
    seen.insert(trivial_set.clone(), 0);
    discovered.push((trivial_set, Vec::new(), vec![0]));

    // All cyclic subgroups, scanning elements in canonical order.
    let mut cyclic: Vec<(u16, ElemSet)> = Vec::new();
    for a in 1..n as u16 {
        let mut elems: Vec<u16> = vec![0];
        let mut x = a;
        while x != 0 {
            elems.push(x);
            x = table.mult(x, a);
        }
        elems.sort_unstable();
        let set = ElemSet::from_sorted(n, &elems);
        if !seen.contains_key(&set) {
            seen.insert(set.clone(), discovered.len() as u32);
            discovered.push((set.clone(), vec![a], elems));
            cyclic.push((a, set));
        }
    }

    // Layered joins with cyclic subgroups.
    let mut head = 0;
    while head < discovered.len() {
        for ci in 0..cyclic.len() {
            let (c_gen, c_set) = (cyclic[ci].0, cyclic[ci].1.clone());
            if c_set.is_subset_of(&discovered[head].0) {
                continue;
            }
            let (set, elems) = close_join(
                &table,
                &discovered[head].0,
                &discovered[head].2,
                &c_set,
            );
            if !seen.contains_key(&set) {
                let mut gens = discovered[head].1.clone();
                gens.push(c_gen);
                seen.insert(set.clone(), discovered.len() as u32);
                discovered.push((set, gens, elems));
            }
        }
        head += 1;
    }

    // Canonical node order: (order, element list).
    let mut order_idx: Vec<usize> = (0..discovered.len()).collect();
    order_idx.sort_by(|&a, &b| {
        let (sa, sb) = (&discovered[a], &discovered[b]);
        match sa.2.len().cmp(&sb.2.len()) {
            Ordering::Equal => sa.0.cmp_as_sorted_list(&sb.0),
            other => other,
        }
    });
    let mut nodes: Vec<SubNode> = Vec::with_capacity(discovered.len());
    let mut by_elems: HashMap<ElemSet, u32> = HashMap::with_capacity(discovered.len());
    for &old in &order_idx {
        let (set, gens, elems) = discovered[old].clone();
        by_elems.insert(set.clone(), nodes.len() as u32);
        nodes.push(SubNode {
            elems: set,
            gens,
            order: elems.len(),
            covers: Vec::new(),
            is_normal: false,
            is_maximal: false,
            class_id: 0,
        });
    }
    let trivial_id = 0u32;
    let full_id = (nodes.len() - 1) as u32;
    debug_assert_eq!(nodes[full_id as usize].order, n);

    compute_covers(&mut nodes);
    for node in nodes.iter_mut() {
        node.is_maximal = node.covers.len() == 1 && node.covers[0] == full_id;
    }
    // The full group is maximal in nothing and covers nothing above it.
    nodes[full_id as usize].is_maximal = false;

    let maximal_ids: Vec<u32> = nodes
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_maximal)
        .map(|(i, _)| i as u32)
        .collect();

    // Conjugation maps, one per parent generator.
    let conj_maps: Vec<Vec<u16>> = parent
        .generators()
        .iter()
        .map(|g| {
            let gi = table.index_of(g).expect("generator is in the table");
            (0..n as u16).map(|a| table.conj(a, gi)).collect()
        })
        .collect();
    for node in nodes.iter_mut() {
        node.is_normal = conj_maps
            .iter()
            .all(|m| node.elems.map_through(m) == node.elems);
    }

    // Conjugacy classes of subgroups: orbits under the conjugation maps.
    let mut class_of: Vec<Option<u32>> = vec![None; nodes.len()];
    let mut classes: Vec<ClassInfo> = Vec::new();
    for i in 0..nodes.len() {
        if class_of[i].is_some() {
            continue;
        }
        let class_id = classes.len() as u32;
        let mut members = vec![i as u32];
        class_of[i] = Some(class_id);
        let mut head = 0;
        while head < members.len() {
            let current = members[head] as usize;
            head += 1;
            for m in &conj_maps {
                let image = nodes[current].elems.map_through(m);
                let j = by_elems[&image];
                if class_of[j as usize].is_none() {
                    class_of[j as usize] = Some(class_id);
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(ClassInfo {
            rep: members[0],
            members,
        });
    }
    for (i, c) in class_of.iter().enumerate() {
        nodes[i].class_id = c.expect("every node is classified");
    }

    Ok(SubgroupLattice {
        parent: parent.clone(),
        table,
        nodes,
        classes,
        maximal_ids,
        by_elems,
        full_id,
        trivial_id,
    })
}

/// Closure of `base ∪ extra` under multiplication, reusing the fact that
/// `base` is already a subgroup: only products involving new elements are
/// formed.
fn close_join(
    table: &ElementTable,
    base_set: &ElemSet,
    base_list: &[u16],
    extra: &ElemSet,
) -> (ElemSet, Vec<u16>) {
    let mut set = base_set.clone();
    let mut list = base_list.to_vec();
    let mut queue: Vec<u16> = Vec::new();
    for e in extra.iter() {
        if !set.contains(e) {
            set.insert(e);
            list.push(e);
            queue.push(e);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        let mut i = 0;
        while i < list.len() {
            let b = list[i];
            i += 1;
            for c in [table.mult(a, b), table.mult(b, a)] {
                if !set.contains(c) {
                    set.insert(c);
                    list.push(c);
                    queue.push(c);
                }
            }
        }
    }
    list.sort_unstable();
    (set, list)
}

/// Cover edges: for each node, the inclusion-minimal strict overgroups.
/// Nodes must already be sorted by (order, element list).
fn compute_covers(nodes: &mut [SubNode]) {
    // Bucket node ids by order for the divisibility scan.
    let mut by_order: HashMap<usize, Vec<u32>> = HashMap::new();
    let mut orders: Vec<usize> = Vec::new();
    for (i, s) in nodes.iter().enumerate() {
        by_order.entry(s.order).or_insert_with(|| {
            orders.push(s.order);
            Vec::new()
        });
        by_order.get_mut(&s.order).expect("just inserted").push(i as u32);
    }
    orders.sort_unstable();

    for i in 0..nodes.len() {
        let my_order = nodes[i].order;
        let mut covers: Vec<u32> = Vec::new();
        for &o in &orders {
            if o <= my_order || o % my_order != 0 {
                continue;
            }
            for &j in &by_order[&o] {
                if !nodes[i].elems.is_subset_of(&nodes[j as usize].elems) {
                    continue;
                }
                // Minimal iff no already-found cover sits inside it.
                let dominated = covers
                    .iter()
                    .any(|&k| nodes[k as usize].elems.is_subset_of(&nodes[j as usize].elems));
                if !dominated {
                    covers.push(j);
                }
            }
        }
        nodes[i].covers = covers;
    }
}

impl SubgroupLattice {
    pub fn parent(&self) -> &GroupHandle {
        &self.parent
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: u32) -> &SubNode {
        &self.nodes[id as usize]
    }

    pub fn nodes(&self) -> &[SubNode] {
        &self.nodes
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn full_id(&self) -> u32 {
        self.full_id
    }

    pub fn trivial_id(&self) -> u32 {
        self.trivial_id
    }

    pub fn maximal_ids(&self) -> &[u32] {
        &self.maximal_ids
    }

    pub fn normal_ids(&self) -> Vec<u32> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_normal)
            .map(|(i, _)| i as u32)
            .collect()
    }

    /// Find the node for an arbitrary subgroup handle of the parent.
    pub fn find(&self, h: &GroupHandle) -> Result<u32, Error> {
        let mut gens = Vec::new();
        for g in h.generators() {
            let i = self.table.index_of(g).ok_or(Error::NotInLattice)?;
            gens.push(i);
        }
        let elems = self.table.close_subgroup(&gens);
        let set = ElemSet::from_sorted(self.table.len(), &elems);
        self.by_elems.get(&set).copied().ok_or(Error::NotInLattice)
    }

    /// Materialize a node as a `SubgroupRef` of the parent.
    pub fn subgroup_ref(&self, id: u32) -> SubgroupRef {
        let gens: Vec<Permutation> = self.nodes[id as usize]
            .gens
            .iter()
            .map(|&e| self.table.perm(e).clone())
            .collect();
        SubgroupRef::new(&self.parent, gens).expect("lattice generators are members")
    }

    /// Generators of a node in cycle notation, for witnesses and reports.
    pub fn gens_cycle_notation(&self, id: u32) -> Vec<String> {
        let node = &self.nodes[id as usize];
        if node.gens.is_empty() {
            return vec!["()".to_string()];
        }
        node.gens
            .iter()
            .map(|&e| self.table.perm(e).to_string())
            .collect()
    }

    /// `Max(G, H)`: all maximal subgroups of the parent containing `H`.
    /// When `H` is itself maximal this is `{H}`.
    pub fn max_over(&self, id: u32) -> Result<Vec<u32>, Error> {
        if id == self.full_id {
            return Err(Error::NotProper);
        }
        let h = &self.nodes[id as usize].elems;
        Ok(self
            .maximal_ids
            .iter()
            .copied()
            .filter(|&m| h.is_subset_of(&self.nodes[m as usize].elems))
            .collect())
    }

    /// Is `h` maximal in `k`? Cover edges answer this directly.
    pub fn is_maximal_in(&self, h: u32, k: u32) -> bool {
        self.nodes[h as usize].covers.contains(&k)
    }

    pub fn classify_chain_position(&self, id: u32) -> Result<ChainPosition, Error> {
        if id == self.full_id {
            return Err(Error::NotProper);
        }
        if self.nodes[id as usize].is_maximal {
            return Ok(ChainPosition::Maximal);
        }
        let max_over = self.max_over(id)?;
        let maximal_in = max_over
            .iter()
            .filter(|&&m| self.is_maximal_in(id, m))
            .count();
        Ok(if maximal_in == max_over.len() && maximal_in > 0 {
            ChainPosition::SecondMaximal
        } else if maximal_in > 0 {
            ChainPosition::WeakSecondMaximalOnly
        } else {
            ChainPosition::Neither
        })
    }

    /// Frattini subgroup: intersection of all maximal subgroups.
    pub fn frattini(&self) -> u32 {
        let mut meet = self.nodes[self.full_id as usize].elems.clone();
        for &m in &self.maximal_ids {
            meet = meet.intersect(&self.nodes[m as usize].elems);
        }
        self.by_elems[&meet]
    }

    /// Fitting subgroup: join of the largest normal p-subgroups over the
    /// primes dividing the group order.
    pub fn fitting(&self) -> u32 {
        let order = self.nodes[self.full_id as usize].order;
        let primes = prime_factors(order);
        let mut parts: Vec<u32> = Vec::new();
        for p in primes {
            let mut best: Option<u32> = None;
            for (i, s) in self.nodes.iter().enumerate() {
                if s.is_normal && is_prime_power_of(s.order, p) {
                    match best {
                        Some(b) if self.nodes[b as usize].order >= s.order => {}
                        _ => best = Some(i as u32),
                    }
                }
            }
            if let Some(b) = best {
                if self.nodes[b as usize].order > 1 {
                    parts.push(b);
                }
            }
        }
        let mut set = self.nodes[self.trivial_id as usize].elems.clone();
        let mut list = vec![0u16];
        for b in parts {
            let joined = close_join(&self.table, &set, &list, &self.nodes[b as usize].elems);
            set = joined.0;
            list = joined.1;
        }
        self.by_elems[&set]
    }

    /// The normal core of a node: intersect conjugates until stable.
    pub fn core_of(&self, id: u32) -> u32 {
        let conj_maps: Vec<Vec<u16>> = self
            .parent
            .generators()
            .iter()
            .map(|g| {
                let gi = self.table.index_of(g).expect("generator indexed");
                (0..self.table.len() as u16)
                    .map(|a| self.table.conj(a, gi))
                    .collect()
            })
            .collect();
        let mut core = self.nodes[id as usize].elems.clone();
        loop {
            let mut changed = false;
            for m in &conj_maps {
                let image = core.map_through(m);
                if image != core {
                    core = core.intersect(&image);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // The stable intersection is a subgroup (intersection of subgroups).
        self.by_elems[&core]
    }

    /// Centralizing-closure of an element subset is not needed; joins are.
    pub fn join_nodes(&self, a: u32, b: u32) -> u32 {
        let list_a = self.nodes[a as usize].elems.to_sorted_vec();
        let (set, _) = close_join(
            &self.table,
            &self.nodes[a as usize].elems,
            &list_a,
            &self.nodes[b as usize].elems,
        );
        self.by_elems[&set]
    }

    pub fn intersect_nodes(&self, a: u32, b: u32) -> u32 {
        let meet = self.nodes[a as usize].elems.intersect(&self.nodes[b as usize].elems);
        self.by_elems[&meet]
    }

    pub fn node_by_elems(&self, set: &ElemSet) -> Option<u32> {
        self.by_elems.get(set).copied()
    }
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime_power_of(mut n: usize, p: usize) -> bool {
    if n == 1 {
        return true;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// `(p, k)` when `n = p^k` for a prime `p` and `k ≥ 1`.
pub(crate) fn as_prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let factors = prime_factors(n);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut k = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    if m == 1 {
        Some((p, k))
    } else {
        None
    }
}
