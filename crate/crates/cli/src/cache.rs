//! Versioned on-disk caches for groups and posets.
//!
//! Files are written to a temporary sibling and renamed into place. A cache
//! file that is unreadable, from another format version, or fails the poset
//! invariants is ignored and rewritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use ncm_core::groups::{build_group, COMPOSITION_CONVENTION};
use ncm_core::{DivisiblePoset, GroupRealization, GroupSpec, NcmError};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};
use crate::wire::{decode_element, decode_tuple, encode_element, encode_tuple};
use crate::LIBRARY_VERSION;

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub format_version: u32,
    pub library_version: String,
    pub group: String,
    pub convention: String,
    pub order: usize,
    pub simple_reflections: Vec<Value>,
    pub coxeter_element: Value,
    pub elements: Vec<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PosetFile {
    pub format_version: u32,
    pub library_version: String,
    pub group: String,
    pub m: usize,
    pub convention: String,
    pub coxeter_element: Value,
    pub elements: Vec<Value>,
    pub cover_pairs: Vec<(usize, usize)>,
}

/// File-name-safe form of a group label: `I2(5)` becomes `I2_5`.
pub fn file_stem(spec: &GroupSpec) -> String {
    let mut s: String = spec
        .label()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    while s.ends_with('_') {
        s.pop();
    }
    s
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> CliResult<()> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(bytes).map_err(io)?;
    f.sync_all().map_err(io)?;
    drop(f);
    fs::rename(&tmp, path).map_err(io)
}

#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn group_path(&self, spec: &GroupSpec) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("group-{}.json", file_stem(spec))))
    }

    pub fn poset_path(&self, spec: &GroupSpec, m: usize) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("poset-{}-m{m}.json", file_stem(spec))))
    }

    /// Builds the group and checks it against (or writes) the group cache.
    pub fn group(&self, spec: GroupSpec) -> CliResult<GroupRealization> {
        let g = build_group(spec)?;
        let Some(path) = self.group_path(&spec) else {
            return Ok(g);
        };
        let fresh = group_file(&g);
        match read_json::<GroupFile>(&path) {
            Some(cached) if cached.format_version == CACHE_FORMAT_VERSION => {
                if cached.elements != fresh.elements
                    || cached.coxeter_element != fresh.coxeter_element
                    || cached.convention != fresh.convention
                {
                    return Err(CliError::Cache {
                        path,
                        reason: "cached group disagrees with the generated realization".into(),
                    });
                }
            }
            _ => write_atomic(&path, &to_bytes(&fresh))?,
        }
        Ok(g)
    }

    /// Loads `NC^(m)(W)` from the poset cache, or enumerates and stores it.
    pub fn poset<'g>(
        &self,
        g: &'g GroupRealization,
        m: usize,
        max_elements: u64,
    ) -> CliResult<DivisiblePoset<'g>> {
        let Some(path) = self.poset_path(g.spec(), m) else {
            return Ok(DivisiblePoset::build(g, g.coxeter_element(), m, max_elements)?);
        };
        if let Some(file) = read_json::<PosetFile>(&path) {
            match poset_from_file(g, m, &file, max_elements) {
                Ok(p) => return Ok(p),
                Err(CliError::Core(e @ NcmError::SizeGuard { .. })) => return Err(e.into()),
                Err(e) => eprintln!("warning: ignoring cache {}: {e}", path.display()),
            }
        }
        let p = DivisiblePoset::build(g, g.coxeter_element(), m, max_elements)?;
        write_atomic(&path, &to_bytes(&poset_file(&p)))?;
        Ok(p)
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Option<T> {
    let bytes = fs::read(path).ok()?;
    serde_json::from_slice(&bytes).ok()
}

fn to_bytes<T: Serialize>(v: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec(v).expect("cache records serialize");
    out.push(b'\n');
    out
}

pub fn group_file(g: &GroupRealization) -> GroupFile {
    GroupFile {
        format_version: CACHE_FORMAT_VERSION,
        library_version: LIBRARY_VERSION.to_string(),
        group: g.spec().label(),
        convention: COMPOSITION_CONVENTION.to_string(),
        order: g.order(),
        simple_reflections: g
            .simple_reflections()
            .iter()
            .map(|&s| encode_element(g.element(s)))
            .collect(),
        coxeter_element: encode_element(g.element(g.coxeter_element())),
        elements: g.elements().iter().map(encode_element).collect(),
    }
}

pub fn poset_file(p: &DivisiblePoset<'_>) -> PosetFile {
    let g = p.group();
    PosetFile {
        format_version: CACHE_FORMAT_VERSION,
        library_version: LIBRARY_VERSION.to_string(),
        group: g.spec().label(),
        m: p.m(),
        convention: COMPOSITION_CONVENTION.to_string(),
        coxeter_element: encode_element(g.element(p.coxeter())),
        elements: p.elements().iter().map(|t| encode_tuple(g, t)).collect(),
        cover_pairs: p.cover_pairs(),
    }
}

pub fn poset_from_file<'g>(
    g: &'g GroupRealization,
    m: usize,
    file: &PosetFile,
    max_elements: u64,
) -> CliResult<DivisiblePoset<'g>> {
    let mismatch = |what: &str| CliError::Input(format!("cache {what} does not match the request"));
    if file.format_version != CACHE_FORMAT_VERSION {
        return Err(mismatch("format version"));
    }
    if file.group != g.spec().label() || file.m != m {
        return Err(mismatch("case"));
    }
    if file.convention != COMPOSITION_CONVENTION {
        return Err(mismatch("composition convention"));
    }
    if file.elements.len() as u64 > max_elements {
        return Err(NcmError::SizeGuard {
            what: "NC^(m)(W)",
            predicted: file.elements.len().to_string(),
            limit: max_elements,
        }
        .into());
    }
    let c = decode_element(g.spec().family, &file.coxeter_element)?;
    let c = g.id_of(&c).ok_or_else(|| mismatch("Coxeter element"))?;
    let elements = file
        .elements
        .iter()
        .map(|v| decode_tuple(g, v))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(DivisiblePoset::from_covers(g, c, m, elements, &file.cover_pairs)?)
}
