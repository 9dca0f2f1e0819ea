use std::path::Path;

use permgroup_core::{GroupHandle, Permutation};
use serde::{Deserialize, Serialize};

use crate::builtins::build_source;
use crate::error::CliError;

/// One corpus entry: a name with either a constructor-call source or an
/// explicit generator list in cycle notation, plus an optional order
/// cross-check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source {
    Constructor(String),
    Generators(Vec<String>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<GroupHandle, CliError> {
        let handle = match &self.source {
            Source::Constructor(expr) => build_source(expr)?,
            Source::Generators(strings) => {
                let mut parsed: Vec<(Vec<Vec<usize>>, usize)> = Vec::new();
                let mut degree = 1usize;
                for s in strings {
                    let (cycles, d) = permgroup_core::parse_cycles(s)
                        .map_err(|e| CliError::Constructor(e.to_string()))?;
                    degree = degree.max(d);
                    parsed.push((cycles, d));
                }
                let mut gens = Vec::new();
                for (cycles, _) in parsed {
                    gens.push(Permutation::from_cycles(degree, &cycles)?);
                }
                GroupHandle::build_on(degree, gens)?
            }
        };
        if let Some(expected) = self.expected_order {
            if handle.order() != expected as u128 {
                return Err(CliError::Constructor(format!(
                    "group '{}' has order {}, expected {expected}",
                    self.name,
                    handle.order()
                )));
            }
        }
        Ok(handle)
    }
}

/// Parse a line-delimited JSON corpus file, validating every entry by
/// building its group.
pub fn parse_corpus(path: &Path) -> Result<Vec<(GroupSpec, GroupHandle)>, CliError> {
    let content = std::fs::read_to_string(path)?;
    parse_corpus_str(&content)
}

pub fn parse_corpus_str(content: &str) -> Result<Vec<(GroupSpec, GroupHandle)>, CliError> {
    let mut out = Vec::new();
    for (i, line) in content.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let spec: GroupSpec = serde_json::from_str(trimmed).map_err(|e| CliError::Corpus {
            line: line_no,
            message: e.to_string(),
        })?;
        let handle = spec.build().map_err(|e| CliError::Corpus {
            line: line_no,
            message: e.to_string(),
        })?;
        out.push((spec, handle));
    }
    Ok(out)
}

fn spec(name: String, source: String) -> GroupSpec {
    GroupSpec {
        name,
        source: Source::Constructor(source),
        expected_order: None,
    }
}

/// The builtin default corpus: all symmetric, alternating, dihedral,
/// cyclic, elementary abelian, generalized quaternion, and affine groups of
/// order at most 200, plus all pairwise direct products within the same
/// order bound. Duplicated groups (identical generator sets) keep their
/// first name only.
pub fn default_corpus() -> Vec<(GroupSpec, GroupHandle)> {
    let max_order: u128 = 200;
    let mut base: Vec<(String, String, GroupHandle)> = Vec::new();
    let push = |base: &mut Vec<(String, String, GroupHandle)>, name: String, source: String| {
        let handle = build_source(&source).expect("builtin corpus sources are valid");
        if handle.order() <= max_order {
            base.push((name, source, handle));
        }
    };
    for n in 1..=200usize {
        push(&mut base, format!("C{n}"), format!("cyclic({n})"));
    }
    for n in 3..=100usize {
        push(&mut base, format!("D{n}"), format!("dihedral({n})"));
    }
    for n in 2..=5usize {
        push(&mut base, format!("S{n}"), format!("sym({n})"));
    }
    for n in 3..=5usize {
        push(&mut base, format!("A{n}"), format!("alt({n})"));
    }
    for (p, kmax) in [(2usize, 7usize), (3, 4), (5, 3), (7, 2), (11, 2), (13, 2)] {
        for k in 2..=kmax {
            push(&mut base, format!("E{}", p.pow(k as u32)), format!("elem_abelian({p},{k})"));
        }
    }
    for n in [8usize, 16, 32, 64, 128] {
        push(&mut base, format!("Q{n}"), format!("quaternion({n})"));
    }
    for q in [4usize, 5, 7, 8, 9, 11, 13] {
        push(&mut base, format!("AGL1({q})"), format!("agl1({q})"));
    }

    let mut out: Vec<(GroupSpec, GroupHandle)> = Vec::new();
    let mut seen_ids: std::collections::HashSet<String> = std::collections::HashSet::new();
    let add = |out: &mut Vec<(GroupSpec, GroupHandle)>,
                   seen: &mut std::collections::HashSet<String>,
                   name: String,
                   source: String,
                   handle: GroupHandle| {
        if seen.insert(handle.id().to_string()) {
            out.push((spec(name, source), handle));
        }
    };
    for (name, source, handle) in &base {
        add(&mut out, &mut seen_ids, name.clone(), source.clone(), handle.clone());
    }
    // Pairwise direct products (nontrivial factors only).
    for i in 0..base.len() {
        for j in i..base.len() {
            let (na, sa, ha) = &base[i];
            let (nb, sb, hb) = &base[j];
            if ha.order() <= 1 || hb.order() <= 1 {
                continue;
            }
            if ha.order() * hb.order() > max_order {
                continue;
            }
            match permgroup_core::direct_product(ha, hb) {
                Ok(product) => add(
                    &mut out,
                    &mut seen_ids,
                    format!("{na}x{nb}"),
                    format!("direct({sa},{sb})"),
                    product,
                ),
                Err(_) => continue,
            }
        }
    }
    out.sort_by(|a, b| {
        (a.1.order(), a.0.name.clone()).cmp(&(b.1.order(), b.0.name.clone()))
    });
    out
}

/// A one-line corpus for the A7 × A7 counterexample runs.
pub fn nonsolvable_corpus() -> Vec<(GroupSpec, GroupHandle)> {
    let source = "direct(alt(7),alt(7))".to_string();
    let handle = build_source(&source).expect("A7 x A7 builds");
    vec![(spec("A7xA7".to_string(), source), handle)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_valid_lines() {
        let corpus = r#"
{"name":"S4","source":"sym(4)","expected_order":24}
{"name":"AGL19","source":"agl1(9)","expected_order":72}
{"name":"V4","source":["(1,2)(3,4)","(1,3)(2,4)"]}
"#;
        let parsed = parse_corpus_str(corpus).unwrap();
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed[0].1.order(), 24);
        assert_eq!(parsed[1].1.order(), 72);
        assert_eq!(parsed[2].1.order(), 4);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let corpus = "{\"name\":\"bad\",\"source\":\"sym(0)\"}";
        match parse_corpus_str(corpus) {
            Err(CliError::Corpus { line: 1, .. }) => {}
            other => panic!("expected corpus error, got {other:?}"),
        }
        let mismatch = "{\"name\":\"S4\",\"source\":\"sym(4)\",\"expected_order\":25}";
        assert!(parse_corpus_str(mismatch).is_err());
        let unknown = "{\"name\":\"x\",\"source\":\"frobnicate(3)\"}";
        assert!(parse_corpus_str(unknown).is_err());
    }

    #[test]
    fn default_corpus_is_deduplicated_and_bounded() {
        let corpus = default_corpus();
        assert!(corpus.len() > 300, "corpus has {} groups", corpus.len());
        let mut ids = std::collections::HashSet::new();
        for (spec, handle) in &corpus {
            assert!(handle.order() <= 200, "{} exceeds the bound", spec.name);
            assert!(ids.insert(handle.id().to_string()), "duplicate {}", spec.name);
        }
        // Key members are present.
        for name in ["S4", "S5", "A5", "AGL1(9)", "E128", "Q8", "C199", "D100"] {
            assert!(corpus.iter().any(|(s, _)| s.name == name), "missing {name}");
        }
    }
}
