use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::GroupHandle;

pub const BUILTIN_CATALOG: &str = include_str!("../../data/catalog.txt");

/// One named group: generators in cycle notation and its known order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub expected_order: BigUint,
    pub tags: Vec<String>,
    /// Catalog name of an overgroup normalizing this group, used for fusion.
    pub overgroup: Option<String>,
}

impl CatalogEntry {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// Builds the group and checks its order against the catalog.
    pub fn instantiate(&self) -> Result<GroupHandle> {
        let g = GroupHandle::parse(&self.generators.join(" ; "), self.degree)?;
        if g.order() != &self.expected_order {
            return Err(Error::OrderMismatch {
                name: self.name.clone(),
                expected: self.expected_order.to_string(),
                actual: g.order().to_string(),
            });
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Line format: `name | degree | gen ; gen | order | tag,tag | overgroup`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| Error::CatalogParse {
                line: line_no,
                reason,
            };
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            if !(5..=6).contains(&fields.len()) {
                return Err(err(format!("expected 5 or 6 fields, found {}", fields.len())));
            }
            let name = fields[0];
            if name.is_empty() {
                return Err(err("empty name".into()));
            }
            if entries.iter().any(|e| e.name == name) {
                return Err(err(format!("duplicate name `{name}`")));
            }
            let degree: usize = fields[1]
                .parse()
                .map_err(|_| err(format!("bad degree `{}`", fields[1])))?;
            if degree == 0 {
                return Err(err("degree must be at least 1".into()));
            }
            let generators: Vec<String> = fields[2]
                .split(';')
                .map(|g| g.trim().to_string())
                .filter(|g| !g.is_empty())
                .collect();
            if generators.is_empty() {
                return Err(err("no generators".into()));
            }
            let expected_order: BigUint = fields[3]
                .parse()
                .map_err(|_| err(format!("bad order `{}`", fields[3])))?;
            let tags = fields[4]
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(String::from)
                .collect();
            let overgroup = fields
                .get(5)
                .filter(|o| !o.is_empty())
                .map(|o| o.to_string());
            entries.push(CatalogEntry {
                name: name.to_string(),
                degree,
                generators,
                expected_order,
                tags,
                overgroup,
            });
        }
        Ok(Catalog { entries })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The catalog shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_CATALOG).expect("built-in catalog parses")
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    pub fn instantiate(&self, name: &str) -> Result<GroupHandle> {
        self.get(name)?.instantiate()
    }

    /// The overgroup of an entry, if it names one.
    pub fn overgroup_of(&self, name: &str) -> Result<Option<GroupHandle>> {
        match &self.get(name)?.overgroup {
            Some(o) => Ok(Some(self.instantiate(o)?)),
            None => Ok(None),
        }
    }
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>> {
    Ok(Catalog::load(path)?.entries)
}

pub fn instantiate(entry: &CatalogEntry) -> Result<GroupHandle> {
    entry.instantiate()
}
