//! Scenario data: one JSON file per source table, shipped with the crate.
//! The engine always recomputes and diffs against the transcription; the
//! `claims` block is the ledger it diffs against.

use crate::error::{Error, Result};
use crate::tables::divisor::SymbolicDivisor;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableScenario {
    pub id: String,
    pub label: String,
    #[serde(default)]
    pub title: String,
    /// Target total number of cyclic subgroups (11 or 12).
    pub total: u64,
    pub order: SymbolicDivisor,
    pub divisors: Vec<SymbolicDivisor>,
    /// The variable T is solved for ("p", "q" or "r").
    pub variable: Option<String>,
    /// The variable pinned to concrete primes by row blocks, if any.
    pub pin_variable: Option<String>,
    pub constraints: Vec<BlockConstraints>,
    pub expected_rows: Vec<ExpectedRow>,
    pub claims: Claims,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct BlockConstraints {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pin: Option<BTreeMap<String, u64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fixed: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub allowed: BTreeMap<String, AllowedCounts>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub zero_links: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub support: Vec<SupportRule>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub allowed_when: Vec<ConditionalAllowed>,
}

/// Allowed count values for a free divisor column: an explicit set or a
/// lower bound.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct AllowedCounts {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<u64>,
}

/// At most `max_nonzero` of `cols` may be nonzero (optionally only when
/// another column reaches a threshold).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportRule {
    pub cols: Vec<usize>,
    pub max_nonzero: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub when: Option<SupportCondition>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportCondition {
    pub col: usize,
    pub min: u64,
}

/// When `if_col` equals `if_eq`, column `col` is restricted to `set`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionalAllowed {
    pub col: usize,
    pub if_col: usize,
    pub if_eq: u64,
    pub set: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpectedRow {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pin: Option<u64>,
    pub counts: Vec<u64>,
    /// The T cell as recorded in the source table.
    pub t: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Claims {
    #[serde(default)]
    pub solutions: Vec<ClaimedSolution>,
    #[serde(default)]
    pub identically_zero_rows: Vec<usize>,
    #[serde(default)]
    pub resolution: String,
    #[serde(default)]
    pub anomalies: Vec<LedgeredAnomaly>,
    #[serde(default)]
    pub enumeration_extra: Vec<LedgeredRow>,
    #[serde(default)]
    pub enumeration_missing: Vec<LedgeredRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimedSolution {
    pub var: String,
    pub value: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pin: Option<BTreeMap<String, u64>>,
    /// "accepted", "rejected" or "open".
    pub outcome: String,
    /// Spec-DSL text of the accepted group realizing the solution, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Default "row" (a prime zero of some recomputed row polynomial);
    /// "congruence" (forced by a Sylow count on an identically-zero row);
    /// "text-only" (claimed in the source but unsupported by recomputation).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ClaimedSolution {
    pub fn basis(&self) -> &str {
        self.basis.as_deref().unwrap_or("row")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgeredAnomaly {
    pub row: usize,
    pub kind: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgeredRow {
    #[serde(default)]
    pub pin: Option<u64>,
    pub counts: Vec<u64>,
}

pub(crate) fn var_index(v: &str) -> Option<usize> {
    match v {
        "p" => Some(0),
        "q" => Some(1),
        "r" => Some(2),
        _ => None,
    }
}

impl TableScenario {
    pub fn parse(json: &str) -> Result<TableScenario> {
        let sc: TableScenario =
            serde_json::from_str(json).map_err(|e| Error::ScenarioData(e.to_string()))?;
        for d in &sc.divisors {
            if !d.divides(&sc.order) {
                return Err(Error::DivisorNotDividing {
                    divisor: d.symbol(),
                    order: sc.order.symbol(),
                });
            }
        }
        Ok(sc)
    }

    pub fn variable_index(&self) -> Option<usize> {
        self.variable.as_deref().and_then(var_index)
    }

    /// Pin array for a row of this scenario.
    pub fn pins_for(&self, row_pin: Option<u64>) -> [Option<u64>; 3] {
        let mut pins = [None; 3];
        if let (Some(v), Some(value)) = (self.pin_variable.as_deref().and_then(var_index), row_pin)
        {
            pins[v] = Some(value);
        }
        pins
    }

    /// Primes the free variable may not take: the prime factors of the
    /// concrete part of the (pinned) order.
    pub fn excluded_primes(&self, pins: [Option<u64>; 3]) -> Vec<u64> {
        let pinned = self.order.pin(pins);
        crate::arith::factorize(pinned.constant).into_iter().map(|(p, _)| p).collect()
    }

    /// The divisor column holding the full power of the free variable, if
    /// present; its count is a Sylow count (≡ 1 mod the prime).
    pub fn sylow_column(&self) -> Option<usize> {
        let v = self.variable_index()?;
        let order_e = self.order.exps()[v];
        if order_e == 0 {
            return None;
        }
        self.divisors.iter().position(|d| {
            d.constant == 1 && d.exps()[v] == order_e && d.exps().iter().sum::<u8>() == order_e
        })
    }
}

static SCENARIO_SOURCES: &[(&str, &str)] = &[
    ("T1", include_str!("../../../../data/scenarios/T1.json")),
    ("T2", include_str!("../../../../data/scenarios/T2.json")),
    ("T3", include_str!("../../../../data/scenarios/T3.json")),
    ("T4", include_str!("../../../../data/scenarios/T4.json")),
    ("T5", include_str!("../../../../data/scenarios/T5.json")),
    ("T6", include_str!("../../../../data/scenarios/T6.json")),
    ("T7", include_str!("../../../../data/scenarios/T7.json")),
    ("T8", include_str!("../../../../data/scenarios/T8.json")),
    ("T9", include_str!("../../../../data/scenarios/T9.json")),
    ("T10", include_str!("../../../../data/scenarios/T10.json")),
    ("T11", include_str!("../../../../data/scenarios/T11.json")),
    ("T12", include_str!("../../../../data/scenarios/T12.json")),
    ("T13", include_str!("../../../../data/scenarios/T13.json")),
    ("T14", include_str!("../../../../data/scenarios/T14.json")),
    ("T15", include_str!("../../../../data/scenarios/T15.json")),
    ("T16", include_str!("../../../../data/scenarios/T16.json")),
    ("T17", include_str!("../../../../data/scenarios/T17.json")),
    ("T18", include_str!("../../../../data/scenarios/T18.json")),
    ("T19", include_str!("../../../../data/scenarios/T19.json")),
    ("T20", include_str!("../../../../data/scenarios/T20.json")),
    ("T21", include_str!("../../../../data/scenarios/T21.json")),
    ("T22", include_str!("../../../../data/scenarios/T22.json")),
    ("T23", include_str!("../../../../data/scenarios/T23.json")),
    ("T24", include_str!("../../../../data/scenarios/T24.json")),
    ("T25", include_str!("../../../../data/scenarios/T25.json")),
    ("T26", include_str!("../../../../data/scenarios/T26.json")),
    ("T27", include_str!("../../../../data/scenarios/T27.json")),
    ("T28", include_str!("../../../../data/scenarios/T28.json")),
    ("T29", include_str!("../../../../data/scenarios/T29.json")),
    ("T30", include_str!("../../../../data/scenarios/T30.json")),
    ("T31", include_str!("../../../../data/scenarios/T31.json")),
    ("T32", include_str!("../../../../data/scenarios/T32.json")),
    ("T33", include_str!("../../../../data/scenarios/T33.json")),
];

/// All shipped scenarios, in id order T1..T33.
pub fn all_scenarios() -> Result<Vec<TableScenario>> {
    SCENARIO_SOURCES.iter().map(|(_, src)| TableScenario::parse(src)).collect()
}

pub fn scenario_by_id(id: &str) -> Result<TableScenario> {
    SCENARIO_SOURCES
        .iter()
        .find(|(sid, _)| *sid == id)
        .map(|(_, src)| TableScenario::parse(src))
        .unwrap_or_else(|| Err(Error::UnknownTableId(id.to_string())))
}

/// Load scenarios from a directory of `T*.json` files instead of the
/// embedded set.
pub fn load_scenario_dir(dir: &Path) -> Result<Vec<TableScenario>> {
    let mut out = Vec::new();
    let entries =
        std::fs::read_dir(dir).map_err(|e| Error::ScenarioData(format!("{}: {e}", dir.display())))?;
    for entry in entries {
        let entry = entry.map_err(|e| Error::ScenarioData(e.to_string()))?;
        let path = entry.path();
        if path.extension().is_some_and(|e| e == "json") {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::ScenarioData(format!("{}: {e}", path.display())))?;
            out.push(TableScenario::parse(&text)?);
        }
    }
    out.sort_by_key(|s| s.id.trim_start_matches('T').parse::<u32>().unwrap_or(u32::MAX));
    if out.is_empty() {
        return Err(Error::ScenarioData(format!("no scenario files in {}", dir.display())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_set_loads() {
        let all = all_scenarios().unwrap();
        assert_eq!(all.len(), 33);
        assert!(all.iter().all(|s| s.total == 11 || s.total == 12));
        assert!(all.iter().all(|s| !s.expected_rows.is_empty()));
    }

    #[test]
    fn lookup() {
        assert_eq!(scenario_by_id("T8").unwrap().label, "p^3q3");
        assert!(matches!(scenario_by_id("T99"), Err(Error::UnknownTableId(_))));
    }

    #[test]
    fn sylow_column_detection() {
        let t3 = scenario_by_id("T3").unwrap();
        // order 6p: the column "p" is the full Sylow power of p
        assert_eq!(t3.sylow_column(), Some(3));
        let t16 = scenario_by_id("T16").unwrap();
        // order p^2q^2, free variable q: the column q^2
        assert_eq!(t16.sylow_column(), Some(4));
    }
}
