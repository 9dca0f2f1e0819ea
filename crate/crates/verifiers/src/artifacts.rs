use character_table::{character_table, CharacterTable};
use modular_rep::{chief_factor_module, GModule};
use permgroup_core::{is_solvable, GroupHandle};
use subgroup_lattice::{
    chief_series, enumerate_subgroups, is_supersolvable, ChainPosition, ChiefSeries,
    SubgroupLattice,
};

/// Resource bounds for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub lattice: u128,
    pub character: u128,
    pub index: u128,
    pub vector: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            lattice: 500,
            character: 2000,
            index: 100_000,
            vector: 10_000,
        }
    }
}

/// One chief factor of the group as a module, together with its reduction
/// to the faithful action of the centralizer quotient.
pub struct FactorModule {
    pub index: usize,
    pub order: usize,
    pub non_frattini: bool,
    /// Conjugation action of the whole group.
    pub over_group: GModule,
    /// The same action pushed through `G → G/C_G(V)`.
    pub reduced: GModule,
    /// Subgroup lattice of the (small) quotient acting group.
    pub reduced_lattice: SubgroupLattice,
}

/// Everything the verifiers need about one group, computed once.
pub struct GroupArtifacts {
    pub name: String,
    pub handle: GroupHandle,
    pub bounds: Bounds,
    pub solvable: bool,
    pub lattice: Option<SubgroupLattice>,
    pub lattice_skip: Option<String>,
    pub chief: Option<ChiefSeries>,
    pub supersolvable: Option<bool>,
    pub wsm: Option<bool>,
    pub factor_modules: Vec<FactorModule>,
    /// Per-factor notes for factors whose module could not be built
    /// (non-elementary-abelian chief factors of non-solvable groups).
    pub factor_skips: Vec<(usize, String)>,
    pub table: Option<CharacterTable>,
    pub table_skip: Option<String>,
}

impl GroupArtifacts {
    pub fn build(
        name: &str,
        handle: &GroupHandle,
        bounds: Bounds,
        with_table: bool,
    ) -> GroupArtifacts {
        let solvable = is_solvable(handle).expect("derived series always computes");
        let (lattice, lattice_skip) = match enumerate_subgroups(handle, bounds.lattice) {
            Ok(l) => (Some(l), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let chief = lattice.as_ref().map(chief_series);
        let supersolvable = chief.as_ref().map(is_supersolvable);
        let wsm = lattice.as_ref().map(is_wsm);
        let mut factor_modules = Vec::new();
        let mut factor_skips = Vec::new();
        if let (Some(l), Some(series)) = (&lattice, &chief) {
            for (i, factor) in series.factors.iter().enumerate() {
                match build_factor_module(l, series, i, &bounds) {
                    Ok(fm) => factor_modules.push(FactorModule {
                        index: i,
                        order: factor.order,
                        non_frattini: factor.non_frattini,
                        over_group: fm.0,
                        reduced: fm.1,
                        reduced_lattice: fm.2,
                    }),
                    Err(e) => factor_skips.push((i, e)),
                }
            }
        }
        let (table, table_skip) = if with_table {
            match character_table(handle, bounds.character) {
                Ok(t) => (Some(t), None),
                Err(e) => (None, Some(e.to_string())),
            }
        } else {
            (None, Some("character table not requested".to_string()))
        };
        GroupArtifacts {
            name: name.to_string(),
            handle: handle.clone(),
            bounds,
            solvable,
            lattice,
            lattice_skip,
            chief,
            supersolvable,
            wsm,
            factor_modules,
            factor_skips,
            table,
            table_skip,
        }
    }

    pub fn id(&self) -> &str {
        self.handle.id()
    }
}

fn build_factor_module(
    lattice: &SubgroupLattice,
    series: &ChiefSeries,
    index: usize,
    bounds: &Bounds,
) -> Result<(GModule, GModule, SubgroupLattice), String> {
    let over_group =
        chief_factor_module(lattice, series, index, bounds.character.max(bounds.lattice))
            .map_err(|e| e.to_string())?;
    let kernel = lattice
        .node_by_elems(&over_group.kernel_set())
        .expect("action kernels are subgroups in the lattice");
    let (reduced, _) = over_group
        .restrict_and_lift(lattice, kernel)
        .map_err(|e| e.to_string())?;
    let reduced_lattice =
        enumerate_subgroups(reduced.acting(), bounds.lattice).map_err(|e| e.to_string())?;
    Ok((over_group, reduced, reduced_lattice))
}

/// A group is a WSM-group when no subgroup is weak second maximal without
/// being second maximal. Chain position is constant on conjugacy classes,
/// so class representatives suffice.
pub fn is_wsm(lattice: &SubgroupLattice) -> bool {
    for class in lattice.classes() {
        if class.rep == lattice.full_id() {
            continue;
        }
        if lattice.classify_chain_position(class.rep).expect("proper subgroup")
            == ChainPosition::WeakSecondMaximalOnly
        {
            return false;
        }
    }
    true
}
