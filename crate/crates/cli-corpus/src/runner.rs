use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;

use permgroup_core::GroupHandle;
use rayon::prelude::*;
use verifiers::{verify, Bounds, GroupArtifacts, TheoremId, Verdict};

use crate::cache;
use crate::corpus::GroupSpec;
use crate::report::{
    CharacterSummary, ConfigEcho, FactorSummary, GroupBundle, GroupEntry, LatticeSummary,
    RemarkSummary, RunReport, StoredVerdict, Summary, Timings, VerdictCounts, VerdictEntry,
    BUNDLE_SCHEMA,
};

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub corpus_label: String,
    pub theorems: Vec<TheoremId>,
    pub bounds: Bounds,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            corpus_label: "builtin-default".to_string(),
            theorems: TheoremId::ALL.to_vec(),
            bounds: Bounds::default(),
            jobs: 1,
            cache_dir: None,
            timings: false,
        }
    }
}

fn needs_table(theorems: &[TheoremId]) -> bool {
    theorems.contains(&TheoremId::A)
}

fn needs_modules(theorems: &[TheoremId]) -> bool {
    theorems.iter().any(|t| {
        matches!(
            t,
            TheoremId::C
                | TheoremId::Lemma31
                | TheoremId::Lemma41
                | TheoremId::Lemma43
                | TheoremId::RemarkOrder72
        )
    })
}

/// Compute (or extend) the bundle for one group, covering the requested
/// theorems.
pub fn compute_bundle(
    name: &str,
    handle: &GroupHandle,
    existing: Option<GroupBundle>,
    theorems: &[TheoremId],
    bounds: Bounds,
) -> GroupBundle {
    let mut bundle = existing.unwrap_or_else(|| GroupBundle {
        schema: BUNDLE_SCHEMA,
        id: handle.id().to_string(),
        order: handle.order() as u64,
        degree: handle.degree(),
        solvable: false,
        supersolvable: None,
        wsm: None,
        lattice: None,
        lattice_skip: None,
        chief_factors: None,
        character: None,
        verdicts: BTreeMap::new(),
    });
    let missing: Vec<TheoremId> = theorems
        .iter()
        .copied()
        .filter(|t| !bundle.verdicts.contains_key(t.as_str()))
        .collect();
    let table_missing = needs_table(theorems) && bundle.character.is_none();
    if missing.is_empty() && !table_missing && bundle.lattice.is_some() == bundle.lattice_skip.is_none()
    {
        return bundle;
    }
    let artifacts = GroupArtifacts::build(
        name,
        handle,
        bounds,
        needs_table(&missing) || table_missing,
    );
    let _ = needs_modules(&missing); // artifacts always carry modules when the lattice exists
    bundle.solvable = artifacts.solvable;
    bundle.supersolvable = artifacts.supersolvable;
    bundle.wsm = artifacts.wsm;
    if let Some(lattice) = &artifacts.lattice {
        bundle.lattice = Some(LatticeSummary {
            subgroups: lattice.node_count(),
            conjugacy_classes: lattice.class_count(),
            maximal_subgroups: lattice.maximal_ids().len(),
            frattini_order: lattice.node(lattice.frattini()).order as u64,
            fitting_order: lattice.node(lattice.fitting()).order as u64,
        });
        bundle.lattice_skip = None;
    } else {
        bundle.lattice = None;
        bundle.lattice_skip = artifacts.lattice_skip.clone();
    }
    if let Some(series) = &artifacts.chief {
        bundle.chief_factors = Some(
            series
                .factors
                .iter()
                .map(|f| FactorSummary {
                    order: f.order as u64,
                    non_frattini: f.non_frattini,
                })
                .collect(),
        );
    }
    if let Some(table) = &artifacts.table {
        bundle.character = Some(CharacterSummary {
            degrees: table.degrees().to_vec(),
            nonvanishing_classes: table.nonvanishing_classes(),
            table: table.export(),
        });
    }
    for theorem in missing {
        let report = verify(theorem, &artifacts);
        bundle.verdicts.insert(
            theorem.as_str().to_string(),
            StoredVerdict {
                verdict: report.verdict,
                witnesses: report.witnesses,
                observations: report.observations,
            },
        );
    }
    bundle
}

fn resolve_bundle(
    name: &str,
    handle: &GroupHandle,
    opts: &RunOptions,
) -> GroupBundle {
    let cached = opts
        .cache_dir
        .as_deref()
        .and_then(|dir| cache::load(dir, handle.id()));
    let had_all = cached
        .as_ref()
        .map(|b| {
            opts.theorems
                .iter()
                .all(|t| b.verdicts.contains_key(t.as_str()))
                && (!needs_table(&opts.theorems) || b.character.is_some())
        })
        .unwrap_or(false);
    let bundle = if had_all {
        cached.expect("checked above")
    } else {
        let bundle = compute_bundle(name, handle, cached, &opts.theorems, opts.bounds);
        if let Some(dir) = opts.cache_dir.as_deref() {
            if let Err(e) = cache::save(dir, &bundle) {
                eprintln!("warning: could not write cache entry for {name}: {e}");
            }
        }
        bundle
    };
    bundle
}

fn project_entry(
    spec_name: &str,
    bundle: &GroupBundle,
    opts: &RunOptions,
    elapsed_ms: u64,
) -> GroupEntry {
    let verdicts: Vec<VerdictEntry> = opts
        .theorems
        .iter()
        .map(|t| {
            let stored = bundle
                .verdicts
                .get(t.as_str())
                .expect("requested verdicts are computed");
            VerdictEntry {
                theorem: t.as_str().to_string(),
                verdict: stored.verdict.clone(),
                witnesses: stored.witnesses.clone(),
                observations: stored.observations.clone(),
            }
        })
        .collect();
    let with_character = needs_table(&opts.theorems);
    GroupEntry {
        name: spec_name.to_string(),
        id: bundle.id.clone(),
        order: bundle.order,
        degree: bundle.degree,
        solvable: bundle.solvable,
        supersolvable: bundle.supersolvable,
        wsm: bundle.wsm,
        lattice: bundle.lattice.clone(),
        chief_factors: bundle.chief_factors.clone(),
        character_degrees: if with_character {
            bundle.character.as_ref().map(|c| c.degrees.clone())
        } else {
            None
        },
        nonvanishing_classes: if with_character {
            bundle.character.as_ref().map(|c| c.nonvanishing_classes.clone())
        } else {
            None
        },
        verdicts,
        timings: if opts.timings {
            Some(Timings { total_ms: elapsed_ms })
        } else {
            None
        },
    }
}

/// Run the selected verifiers over a corpus; returns the report and the
/// process exit code (0 all pass/skip, 1 any fail).
pub fn run(corpus: &[(GroupSpec, GroupHandle)], opts: &RunOptions) -> (RunReport, i32) {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .expect("thread pool builds");

    // Deduplicate by group id; each unique group is computed once.
    let mut unique: Vec<(String, GroupHandle)> = Vec::new();
    let mut index_of: HashMap<String, usize> = HashMap::new();
    for (spec, handle) in corpus {
        if !index_of.contains_key(handle.id()) {
            index_of.insert(handle.id().to_string(), unique.len());
            unique.push((spec.name.clone(), handle.clone()));
        }
    }

    let results: Vec<(GroupBundle, u64)> = pool.install(|| {
        unique
            .par_iter()
            .map(|(name, handle)| {
                let start = std::time::Instant::now();
                let bundle = resolve_bundle(name, handle, opts);
                (bundle, start.elapsed().as_millis() as u64)
            })
            .collect()
    });

    let mut entries: Vec<GroupEntry> = corpus
        .iter()
        .map(|(spec, handle)| {
            let idx = index_of[handle.id()];
            let (bundle, ms) = &results[idx];
            project_entry(&spec.name, bundle, opts, *ms)
        })
        .collect();
    entries.sort_by(|a, b| (a.id.clone(), a.name.clone()).cmp(&(b.id.clone(), b.name.clone())));

    let mut counts: BTreeMap<String, VerdictCounts> = BTreeMap::new();
    for t in &opts.theorems {
        counts.insert(t.as_str().to_string(), VerdictCounts::default());
    }
    let mut any_fail = false;
    for entry in &entries {
        for v in &entry.verdicts {
            let c = counts.get_mut(&v.theorem).expect("selection initialized");
            match v.verdict {
                Verdict::Pass => c.pass += 1,
                Verdict::Fail => {
                    c.fail += 1;
                    any_fail = true;
                }
                Verdict::Skipped { .. } => c.skipped += 1,
            }
        }
    }
    let supersolvable_remark = if opts.theorems.contains(&TheoremId::RemarkSupersolvable) {
        let mut failures = Vec::new();
        let mut exhibits = Vec::new();
        for entry in &entries {
            for v in &entry.verdicts {
                if v.theorem == TheoremId::RemarkSupersolvable.as_str() {
                    if v.verdict == Verdict::Fail {
                        failures.push(entry.name.clone());
                    }
                    if v.observations.iter().any(|o| o.contains("converse exhibit")) {
                        exhibits.push(entry.name.clone());
                    }
                }
            }
        }
        failures.sort();
        exhibits.sort();
        Some(RemarkSummary {
            implication_failures: failures,
            wsm_not_supersolvable: exhibits,
        })
    } else {
        None
    };

    let report = RunReport {
        config: ConfigEcho {
            corpus: opts.corpus_label.clone(),
            theorems: opts.theorems.iter().map(|t| t.as_str().to_string()).collect(),
            lattice_bound: opts.bounds.lattice as u64,
            char_bound: opts.bounds.character as u64,
            index_bound: opts.bounds.index as u64,
            vector_bound: opts.bounds.vector,
            jobs: opts.jobs,
        },
        summary: Summary {
            groups: entries.len(),
            verdicts: counts,
            supersolvable_remark,
        },
        groups: entries,
    };
    (report, if any_fail { 1 } else { 0 })
}

/// Re-derive every cached bundle and compare byte-for-byte.
pub fn verify_cache(
    corpus: &[(GroupSpec, GroupHandle)],
    cache_dir: &std::path::Path,
    bounds: Bounds,
) -> i32 {
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    let mut seen: HashMap<String, ()> = HashMap::new();
    for (spec, handle) in corpus {
        if seen.insert(handle.id().to_string(), ()).is_some() {
            continue;
        }
        let Some(cached) = cache::load(cache_dir, handle.id()) else {
            continue;
        };
        checked += 1;
        let theorems: Vec<TheoremId> = cached
            .verdicts
            .keys()
            .filter_map(|k| k.parse().ok())
            .collect();
        let mut fresh = compute_bundle(&spec.name, handle, None, &theorems, bounds);
        if cached.character.is_some() && fresh.character.is_none() {
            fresh = compute_bundle(&spec.name, handle, Some(fresh), &[TheoremId::A], bounds);
        }
        let cached_json = serde_json::to_string(&cached).expect("bundle serializes");
        let fresh_json = serde_json::to_string(&fresh).expect("bundle serializes");
        if cached_json != fresh_json {
            eprintln!("cache mismatch for {} ({})", spec.name, handle.id());
            mismatches += 1;
        }
    }
    println!("verified {checked} cache entr{} against recomputation; {mismatches} mismatch(es)",
        if checked == 1 { "y" } else { "ies" });
    if mismatches > 0 {
        1
    } else {
        0
    }
}

pub fn write_report(report: &RunReport, out: Option<&std::path::Path>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
