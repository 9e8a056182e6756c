//! Group specifications, the group file format, and the built-in corpus.
//!
//! File format: one group per line, `name ; degree ; gen1 ; gen2 ; …` with
//! 1-based cycle notation; `#` starts a comment. The built-in corpus is the
//! family grid pinned in `data/manifest.txt` plus the shipped generator
//! files, all embedded in the binary.

use std::path::Path;

use realclass_core::group::{GenerateError, Group};
use realclass_core::perm::Permutation;
use serde::Serialize;
use thiserror::Error;

use crate::families::{FamilyError, FamilySpec};

pub const BUILTIN_MANIFEST: &str = include_str!("../data/manifest.txt");
pub const ORDER48_CANDIDATES: &str = include_str!("../data/order48.groups");
pub const EXTRA_GROUPS: &str = include_str!("../data/extra.groups");

/// Default element cap, overridable through the `REALCLASS_CAP` variable.
pub fn element_cap() -> usize {
    std::env::var("REALCLASS_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(realclass_core::DEFAULT_ELEMENT_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generator_strings: Vec<String>,
    pub source: String,
}

impl GroupSpec {
    pub fn build(&self, cap: usize) -> Result<Group, SpecError> {
        let gens: Result<Vec<Permutation>, _> = self
            .generator_strings
            .iter()
            .map(|t| Permutation::parse(t, self.degree))
            .collect();
        let gens = gens.map_err(|e| SpecError::BadGenerator {
            name: self.name.clone(),
            message: e.to_string(),
        })?;
        Group::generate(gens, cap).map_err(|e| SpecError::Generate {
            name: self.name.clone(),
            error: e,
        })
    }

    /// The group-file line for this spec.
    pub fn to_line(&self) -> String {
        let mut parts = vec![self.name.clone(), self.degree.to_string()];
        parts.extend(self.generator_strings.iter().cloned());
        parts.join(" ; ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("group {name}: bad generator: {message}")]
    BadGenerator { name: String, message: String },
    #[error("group {name}: {error}")]
    Generate { name: String, error: GenerateError },
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: expected `name ; degree ; gen…`, found {found:?}")]
    MalformedLine { line: usize, found: String },
    #[error("line {line}: bad degree {found:?}")]
    BadDegree { line: usize, found: String },
    #[error("line {line}: generator {text:?}: {message}")]
    BadGenerator {
        line: usize,
        text: String,
        message: String,
    },
    #[error("line {line}: duplicate group name {name:?}")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: family expression: {error}")]
    Family { line: usize, error: FamilyError },
    #[error("reading {path}: {error}")]
    Io { path: String, error: std::io::Error },
}

/// Parses group-file text. Every generator must parse at the stated degree.
pub fn parse_group_lines(text: &str, source_tag: &str) -> Result<Vec<GroupSpec>, IngestError> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(';').map(str::trim);
        let name = fields.next().unwrap_or("").to_string();
        let degree_text = fields.next().unwrap_or("");
        if name.is_empty() || degree_text.is_empty() {
            return Err(IngestError::MalformedLine {
                line: line_no,
                found: raw.to_string(),
            });
        }
        let degree: usize = degree_text.parse().map_err(|_| IngestError::BadDegree {
            line: line_no,
            found: degree_text.to_string(),
        })?;
        if degree == 0 {
            return Err(IngestError::BadDegree {
                line: line_no,
                found: degree_text.to_string(),
            });
        }
        let generator_strings: Vec<String> = fields.map(str::to_string).collect();
        if generator_strings.is_empty() {
            return Err(IngestError::MalformedLine {
                line: line_no,
                found: raw.to_string(),
            });
        }
        for text in &generator_strings {
            if let Err(e) = Permutation::parse(text, degree) {
                return Err(IngestError::BadGenerator {
                    line: line_no,
                    text: text.clone(),
                    message: e.to_string(),
                });
            }
        }
        if specs.iter().any(|s| s.name == name) {
            return Err(IngestError::DuplicateName {
                line: line_no,
                name,
            });
        }
        specs.push(GroupSpec {
            name,
            degree,
            generator_strings,
            source: source_tag.to_string(),
        });
    }
    Ok(specs)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Reads a group file from disk.
pub fn ingest(path: &Path) -> Result<Vec<GroupSpec>, IngestError> {
    let text = std::fs::read_to_string(path).map_err(|error| IngestError::Io {
        path: path.display().to_string(),
        error,
    })?;
    parse_group_lines(&text, &format!("file:{}", path.display()))
}

/// Serializes specs back into the line format (inverse of parsing).
pub fn write_group_lines(specs: &[GroupSpec]) -> String {
    let mut out = String::new();
    for spec in specs {
        out.push_str(&spec.to_line());
        out.push('\n');
    }
    out
}

pub fn emit_group_file(specs: &[GroupSpec], path: &Path) -> std::io::Result<()> {
    std::fs::write(path, write_group_lines(specs))
}

/// Parses a manifest of family invocations (one per line, `#` comments).
pub fn parse_manifest(text: &str) -> Result<Vec<GroupSpec>, IngestError> {
    let mut specs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let family = FamilySpec::parse(line).map_err(|error| IngestError::Family {
            line: line_no,
            error,
        })?;
        let spec = family.to_group_spec().map_err(|error| IngestError::Family {
            line: line_no,
            error,
        })?;
        if specs.iter().any(|s: &GroupSpec| s.name == spec.name) {
            return Err(IngestError::DuplicateName {
                line: line_no,
                name: spec.name,
            });
        }
        specs.push(spec);
    }
    Ok(specs)
}

/// The full built-in corpus: manifest families plus shipped group files.
pub fn builtin_corpus() -> Vec<GroupSpec> {
    let mut specs = parse_manifest(BUILTIN_MANIFEST).expect("embedded manifest is well-formed");
    specs.extend(
        parse_group_lines(ORDER48_CANDIDATES, "builtin:order48")
            .expect("embedded order-48 candidates are well-formed"),
    );
    specs.extend(
        parse_group_lines(EXTRA_GROUPS, "builtin:extra").expect("embedded extras are well-formed"),
    );
    let mut seen = std::collections::HashSet::new();
    for s in &specs {
        assert!(seen.insert(s.name.clone()), "duplicate corpus name {}", s.name);
    }
    specs
}

/// Loads a corpus: the literal name `builtin`, or a directory containing
/// `manifest.txt` and/or `*.groups` files.
pub fn load_corpus(corpus: &str) -> Result<Vec<GroupSpec>, IngestError> {
    if corpus == "builtin" {
        return Ok(builtin_corpus());
    }
    let dir = Path::new(corpus);
    let mut specs: Vec<GroupSpec> = Vec::new();
    let manifest = dir.join("manifest.txt");
    if manifest.is_file() {
        let text = std::fs::read_to_string(&manifest).map_err(|error| IngestError::Io {
            path: manifest.display().to_string(),
            error,
        })?;
        specs.extend(parse_manifest(&text)?);
    }
    let mut group_files: Vec<std::path::PathBuf> = std::fs::read_dir(dir)
        .map_err(|error| IngestError::Io {
            path: dir.display().to_string(),
            error,
        })?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|e| e == "groups").unwrap_or(false))
        .collect();
    group_files.sort();
    for file in group_files {
        specs.extend(ingest(&file)?);
    }
    Ok(specs)
}
