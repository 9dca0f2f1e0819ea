use std::cmp::Ordering;

/// A set of element indices over a fixed universe `{0, …, universe-1}`,
/// packed into 64-bit words. Subgroups are identified by these sets, which
/// makes dedup and containment exact and cheap.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn from_sorted(universe: usize, elems: &[u16]) -> Self {
        let mut set = ElemSet::new(universe);
        for &e in elems {
            set.insert(e);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, e: u16) {
        self.words[e as usize / 64] |= 1u64 << (e as usize % 64);
    }

    #[inline]
    pub fn contains(&self, e: u16) -> bool {
        self.words[e as usize / 64] & (1u64 << (e as usize % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some((wi * 64 + b as usize) as u16)
                }
            })
        })
    }

    pub fn to_sorted_vec(&self) -> Vec<u16> {
        self.iter().collect()
    }

    /// Image of the set under a permutation of the universe given as an
    /// index map.
    pub fn map_through(&self, index_map: &[u16]) -> ElemSet {
        let mut out = ElemSet::new(self.universe);
        for e in self.iter() {
            out.insert(index_map[e as usize]);
        }
        out
    }

    /// Order as sorted element lists (shorter prefix first). Used for all
    /// deterministic tie-breaking between subgroups.
    pub fn cmp_as_sorted_list(&self, other: &ElemSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}
