//! `m(G)`: the least dimension of a faithful Q-rational representation of `G`.

use serde::{Deserialize, Serialize};

use super::GaloisError;

const BUILTIN: &str = include_str!("../../data/mg_table.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MGFamily {
    /// `"S"` or `"A"`; matches identifiers `S7`, `S_7`.
    pub family: String,
    pub min_degree: usize,
    /// `m(G) = n + offset`.
    pub offset: i64,
    #[serde(default)]
    pub note: String,
    #[serde(default)]
    pub external: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MGEntry {
    pub group: String,
    pub m: usize,
    #[serde(default)]
    pub note: String,
    #[serde(default)]
    pub external: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MGTable {
    pub version: u32,
    #[serde(default)]
    pub families: Vec<MGFamily>,
    #[serde(default)]
    pub entries: Vec<MGEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MGValue {
    pub group: String,
    pub m: usize,
    /// Supplied by the user rather than shipped with the toolkit.
    pub external: bool,
}

fn normalize(id: &str) -> String {
    id.chars().filter(|c| !c.is_whitespace() && *c != '_').collect()
}

impl MGTable {
    pub fn builtin() -> Self {
        serde_json::from_str(BUILTIN).expect("shipped m(G) table is valid")
    }

    /// Adds entries from a user table; all of them are flagged external.
    pub fn extend_from_json(&mut self, json: &str) -> Result<(), serde_json::Error> {
        let extra: MGTable = serde_json::from_str(json)?;
        self.families.extend(extra.families.into_iter().map(|f| MGFamily { external: true, ..f }));
        self.entries.extend(extra.entries.into_iter().map(|e| MGEntry { external: true, ..e }));
        Ok(())
    }

    pub fn lookup(&self, group: &str) -> Result<MGValue, GaloisError> {
        let id = normalize(group);
        if let Some(e) = self.entries.iter().find(|e| normalize(&e.group) == id) {
            return Ok(MGValue { group: id, m: e.m, external: e.external });
        }
        for fam in &self.families {
            let Some(n) = id.strip_prefix(fam.family.as_str()).and_then(|r| r.parse::<usize>().ok()) else {
                continue;
            };
            let m = n as i64 + fam.offset;
            if n >= fam.min_degree && m > 0 {
                return Ok(MGValue { group: id, m: m as usize, external: fam.external });
            }
        }
        Err(GaloisError::UnknownGroup(group.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_values() {
        let t = MGTable::builtin();
        assert_eq!(t.lookup("S5").unwrap().m, 4);
        assert_eq!(t.lookup("S_7").unwrap().m, 6);
        assert_eq!(t.lookup("PSL(2,7)").unwrap().m, 6);
        assert_eq!(t.lookup("PSL(2, 7)").unwrap().m, 6);
        assert!(!t.lookup("S5").unwrap().external);
        assert!(matches!(t.lookup("S4"), Err(GaloisError::UnknownGroup(_))));
        assert!(matches!(t.lookup("A3"), Err(GaloisError::UnknownGroup(_))));
        assert!(matches!(t.lookup("M24"), Err(GaloisError::UnknownGroup(_))));
    }

    #[test]
    fn user_entries_are_flagged() {
        let mut t = MGTable::builtin();
        t.extend_from_json(r#"{"version":1,"entries":[{"group":"M24","m":23}]}"#).unwrap();
        let v = t.lookup("M24").unwrap();
        assert_eq!(v.m, 23);
        assert!(v.external);
    }
}
