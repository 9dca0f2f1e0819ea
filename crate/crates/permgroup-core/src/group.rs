use std::fmt;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::chain::StabilizerChain;
use crate::elements::ElementTable;
use crate::error::Error;
use crate::perm::{Permutation, DEGREE_CAP};

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
    order: u128,
    id: String,
    table: OnceLock<Arc<ElementTable>>,
}

/// A finite permutation group with a stabilizer chain. Immutable after
/// construction; cloning is cheap and handles can be shared across threads.
#[derive(Clone)]
pub struct GroupHandle {
    inner: Arc<GroupInner>,
}

impl GroupHandle {
    /// Build a group from generators. An empty generator list yields the
    /// trivial group on one point.
    pub fn build(generators: Vec<Permutation>) -> Result<GroupHandle, Error> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => 1,
        };
        Self::build_on(degree, generators)
    }

    /// Build a group of the given degree (generators may be empty).
    pub fn build_on(degree: usize, generators: Vec<Permutation>) -> Result<GroupHandle, Error> {
        if degree == 0 || degree > DEGREE_CAP {
            return Err(Error::DegreeCapExceeded(degree, DEGREE_CAP));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InconsistentDegrees(degree, g.degree()));
            }
        }
        // Drop identities and duplicates but keep the caller's order.
        let mut cleaned: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !cleaned.contains(&g) {
                cleaned.push(g);
            }
        }
        let chain = StabilizerChain::build(degree, &cleaned)?;
        let order = chain.order()?;
        let id = canonical_id(degree, &cleaned);
        Ok(GroupHandle {
            inner: Arc::new(GroupInner {
                degree,
                generators: cleaned,
                chain,
                order,
                id,
                table: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> GroupHandle {
        GroupHandle::build_on(degree, Vec::new()).expect("trivial group is valid")
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.inner.chain
    }

    /// Stable hash of the canonical (sorted, deduplicated) generator set.
    pub fn id(&self) -> &str {
        &self.inner.id
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool, Error> {
        if g.degree() != self.inner.degree {
            return Err(Error::DegreeMismatch {
                expected: self.inner.degree,
                got: g.degree(),
            });
        }
        Ok(self.inner.chain.contains(g))
    }

    /// Full element enumeration, cached on the handle. Fails when the order
    /// exceeds `bound`.
    pub fn element_table(&self, bound: u128) -> Result<Arc<ElementTable>, Error> {
        if self.inner.order > bound {
            return Err(Error::OrderBoundExceeded { bound });
        }
        Ok(self
            .inner
            .table
            .get_or_init(|| Arc::new(ElementTable::build(self.inner.degree, &self.inner.generators)))
            .clone())
    }
}

impl fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHandle(degree={}, order={}, gens=[",
            self.inner.degree, self.inner.order
        )?;
        for (i, g) in self.inner.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

fn canonical_id(degree: usize, generators: &[Permutation]) -> String {
    let mut sorted: Vec<&Permutation> = generators.iter().collect();
    sorted.sort();
    let mut hasher = Sha256::new();
    hasher.update([degree as u8]);
    for g in sorted {
        hasher.update(g.images());
        hasher.update([255u8]);
    }
    let digest = hasher.finalize();
    digest[..16].iter().map(|b| format!("{b:02x}")).collect()
}

/// A subgroup of a parent group, carried as a full group handle of the same
/// degree together with the parent's id.
#[derive(Clone, Debug)]
pub struct SubgroupRef {
    parent: String,
    group: GroupHandle,
}

impl SubgroupRef {
    /// Build `⟨generators⟩ ≤ parent`, validating membership of every
    /// generator.
    pub fn new(parent: &GroupHandle, generators: Vec<Permutation>) -> Result<SubgroupRef, Error> {
        for g in &generators {
            if !parent.contains(g)? {
                return Err(Error::NotSubgroup(format!("generator {g} lies outside the parent")));
            }
        }
        let group = GroupHandle::build_on(parent.degree(), generators)?;
        Ok(SubgroupRef {
            parent: parent.id().to_string(),
            group,
        })
    }

    pub fn trivial(parent: &GroupHandle) -> SubgroupRef {
        SubgroupRef {
            parent: parent.id().to_string(),
            group: GroupHandle::trivial(parent.degree()),
        }
    }

    /// The whole parent as a subgroup of itself.
    pub fn full(parent: &GroupHandle) -> SubgroupRef {
        SubgroupRef {
            parent: parent.id().to_string(),
            group: parent.clone(),
        }
    }

    pub fn parent_id(&self) -> &str {
        &self.parent
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool, Error> {
        self.group.contains(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, degree: usize) -> Permutation {
        s.parse::<Permutation>().unwrap().extended(degree).unwrap()
    }

    #[test]
    fn builds_s4() {
        let g = GroupHandle::build(vec![perm("(1,2)", 4), perm("(1,2,3,4)", 4)]).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = GroupHandle::build(Vec::new()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn id_independent_of_generator_order() {
        let a = GroupHandle::build(vec![perm("(1,2)", 4), perm("(1,2,3,4)", 4)]).unwrap();
        let b = GroupHandle::build(vec![perm("(1,2,3,4)", 4), perm("(1,2)", 4)]).unwrap();
        assert_eq!(a.id(), b.id());
    }

    #[test]
    fn subgroup_validation() {
        let g = GroupHandle::build(vec![perm("(1,2,3)", 4), perm("(2,3,4)", 4)]).unwrap();
        assert!(SubgroupRef::new(&g, vec![perm("(1,2)", 4)]).is_err());
        let h = SubgroupRef::new(&g, vec![perm("(1,2,3)", 4)]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn inconsistent_degrees_rejected() {
        let res = GroupHandle::build(vec![perm("(1,2)", 4), perm("(1,2)", 5)]);
        assert!(res.is_err());
    }
}
