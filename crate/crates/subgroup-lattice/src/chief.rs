use crate::lattice::{as_prime_power, SubgroupLattice};

/// One factor `N_i / N_{i+1}` of a chief series.
#[derive(Debug, Clone)]
pub struct ChiefFactor {
    /// Node id of `N_i`.
    pub top: u32,
    /// Node id of `N_{i+1}`.
    pub bottom: u32,
    pub order: usize,
    /// `(p, n)` when the factor is elementary abelian of order `p^n`
    /// (always the case for solvable groups).
    pub prime_power: Option<(usize, u32)>,
    /// The factor is non-Frattini when its image is not contained in
    /// `Φ(G / N_{i+1})`.
    pub non_frattini: bool,
}

/// A chief series `G = N_0 ▷ N_1 ▷ … ▷ N_k = 1`: each term is normal in `G`
/// and each factor is a minimal normal subgroup of the quotient below it.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    /// Descending node ids, full group first, trivial subgroup last.
    pub terms: Vec<u32>,
    /// `factors[i]` is `terms[i] / terms[i+1]`.
    pub factors: Vec<ChiefFactor>,
}

/// Build a chief series bottom-up: repeatedly pick the minimal normal
/// subgroup of the current quotient, lifted to `G`; ties are broken by the
/// lexicographically smallest element list, so the series is deterministic.
pub fn chief_series(lattice: &SubgroupLattice) -> ChiefSeries {
    let normals = lattice.normal_ids();
    let full = lattice.full_id();
    let mut ascending = vec![lattice.trivial_id()];
    let mut current = lattice.trivial_id();
    while current != full {
        let over: Vec<u32> = normals
            .iter()
            .copied()
            .filter(|&n| {
                n != current
                    && lattice.node(current).elems.is_subset_of(&lattice.node(n).elems)
            })
            .collect();
        let minimal: Vec<u32> = over
            .iter()
            .copied()
            .filter(|&n| {
                !over.iter().any(|&m| {
                    m != n && lattice.node(m).elems.is_subset_of(&lattice.node(n).elems)
                })
            })
            .collect();
        let chosen = minimal
            .into_iter()
            .min_by(|&a, &b| {
                lattice
                    .node(a)
                    .elems
                    .cmp_as_sorted_list(&lattice.node(b).elems)
            })
            .expect("a proper normal subgroup has a minimal normal overgroup");
        ascending.push(chosen);
        current = chosen;
    }

    let mut factors = Vec::new();
    for w in ascending.windows(2) {
        let (bottom, top) = (w[0], w[1]);
        let order = lattice.node(top).order / lattice.node(bottom).order;
        // Φ(G / N_{i+1}) corresponds to the intersection of the maximal
        // subgroups of G that contain N_{i+1}.
        let mut meet = lattice.node(full).elems.clone();
        for &m in lattice.maximal_ids() {
            if lattice.node(bottom).elems.is_subset_of(&lattice.node(m).elems) {
                meet = meet.intersect(&lattice.node(m).elems);
            }
        }
        let non_frattini = !lattice.node(top).elems.is_subset_of(&meet);
        factors.push(ChiefFactor {
            top,
            bottom,
            order,
            prime_power: as_prime_power(order),
            non_frattini,
        });
    }

    ascending.reverse();
    factors.reverse();
    ChiefSeries {
        terms: ascending,
        factors,
    }
}

/// A finite group is supersolvable exactly when every chief factor has prime
/// order.
pub fn is_supersolvable(series: &ChiefSeries) -> bool {
    series
        .factors
        .iter()
        .all(|f| matches!(f.prime_power, Some((_, 1))))
}
