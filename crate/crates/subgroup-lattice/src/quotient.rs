use std::collections::HashMap;
use std::sync::Arc;

use permgroup_core::{ElementTable, GroupHandle, Permutation, DEGREE_CAP};

use crate::error::Error;
use crate::lattice::SubgroupLattice;

/// A quotient `G/N` realized as a faithful permutation group, together with
/// the projection map. The action is on the cosets of a subgroup `K ⊇ N`
/// whose normal core is exactly `N` (the largest such, to keep the degree
/// small); for `N = 1` the quotient is the group itself.
pub struct QuotientMap {
    group: GroupHandle,
    gen_images: Vec<Permutation>,
    repr: Repr,
}

enum Repr {
    Identity,
    Cosets {
        table: Arc<ElementTable>,
        /// Canonical (minimal) coset keys in ascending order; the key is
        /// itself an element of the coset and serves as its representative.
        reps: Vec<u16>,
        point_of: HashMap<u16, u8>,
        /// `coset_key[x]` for every element index `x`.
        coset_key: Vec<u16>,
    },
}

impl QuotientMap {
    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    /// Images of the parent's generators, aligned with
    /// `parent.generators()`.
    pub fn gen_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    /// Project an element of the parent onto the quotient.
    pub fn project(&self, g: &Permutation) -> Result<Permutation, Error> {
        match &self.repr {
            Repr::Identity => Ok(g.clone()),
            Repr::Cosets { table, .. } => {
                let x = table.index_of(g).ok_or(Error::NotInLattice)?;
                Ok(self.project_index(x))
            }
        }
    }

    /// Project by element index in the parent's element table.
    pub fn project_index(&self, x: u16) -> Permutation {
        match &self.repr {
            Repr::Identity => panic!("identity quotients project by element"),
            Repr::Cosets {
                table,
                reps,
                point_of,
                coset_key,
            } => {
                let images: Vec<u8> = reps
                    .iter()
                    .map(|&r| point_of[&coset_key[table.mult(r, x) as usize]])
                    .collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            }
        }
    }
}

/// Build `G/N` for a normal node of the lattice.
pub fn quotient_group(lattice: &SubgroupLattice, n_id: u32) -> Result<QuotientMap, Error> {
    let node = lattice.node(n_id);
    if !node.is_normal {
        return Err(Error::NotNormal);
    }
    let parent = lattice.parent();
    if n_id == lattice.trivial_id() {
        return Ok(QuotientMap {
            group: parent.clone(),
            gen_images: parent.generators().to_vec(),
            repr: Repr::Identity,
        });
    }
    let table = lattice.table().clone();
    let n = table.len();

    // Largest subgroup whose core is exactly N; acting on its cosets gives a
    // faithful representation of G/N of the smallest degree the lattice can
    // see. Scanning ids in reverse is deterministic (nodes are sorted).
    let mut k_id = n_id;
    for id in (0..lattice.node_count() as u32).rev() {
        if lattice.node(n_id).elems.is_subset_of(&lattice.node(id).elems)
            && lattice.core_of(id) == n_id
        {
            k_id = id;
            break;
        }
    }
    let k_elems = lattice.node(k_id).elems.to_sorted_vec();
    let index = n / k_elems.len();
    if index > DEGREE_CAP {
        return Err(Error::QuotientDegree(index, DEGREE_CAP));
    }

    let unset = u16::MAX;
    let mut coset_key = vec![unset; n];
    for x in 0..n as u16 {
        if coset_key[x as usize] != unset {
            continue;
        }
        let mut members: Vec<u16> = k_elems.iter().map(|&k| table.mult(k, x)).collect();
        members.sort_unstable();
        let key = members[0];
        for y in members {
            coset_key[y as usize] = key;
        }
    }
    let mut reps: Vec<u16> = Vec::with_capacity(index);
    for x in 0..n as u16 {
        if coset_key[x as usize] == x {
            reps.push(x);
        }
    }
    debug_assert_eq!(reps.len(), index);
    let point_of: HashMap<u16, u8> = reps
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i as u8))
        .collect();

    let repr = Repr::Cosets {
        table: table.clone(),
        reps,
        point_of,
        coset_key,
    };
    let helper = QuotientMap {
        group: GroupHandle::trivial(1),
        gen_images: Vec::new(),
        repr,
    };
    let gen_images: Vec<Permutation> = parent
        .generators()
        .iter()
        .map(|g| {
            let x = table.index_of(g).expect("generator is in the table");
            helper.project_index(x)
        })
        .collect();
    let group = GroupHandle::build_on(index.max(1), gen_images.clone())?;
    let expected = parent.order() / lattice.node(n_id).order as u128;
    assert_eq!(
        group.order(),
        expected,
        "coset action of a core-free overgroup is faithful on G/N"
    );
    Ok(QuotientMap {
        group,
        gen_images,
        repr: helper.repr,
    })
}
