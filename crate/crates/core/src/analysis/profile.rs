use crate::arith::euler_phi;
use crate::group::FiniteGroup;
use std::collections::BTreeMap;

/// The map m ↦ c_G(m) together with the total c(G).
///
/// Since a cyclic subgroup of order m has exactly φ(m) generators,
/// c_G(m) = #{x : ord(x) = m} / φ(m), and Σ_m c_G(m)·φ(m) = |G|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicProfile {
    pub per_order: BTreeMap<u64, u64>,
    pub total: u64,
    pub group_order: u64,
}

impl CyclicProfile {
    /// Flat JSON object with per-order keys in ascending numeric order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut per = serde_json::Map::new();
        for (m, c) in &self.per_order {
            per.insert(m.to_string(), serde_json::json!(c));
        }
        serde_json::json!({
            "order": self.group_order,
            "total": self.total,
            "per_order": per,
        })
    }

    /// Counts lined up against a list of divisors (0 for absent orders).
    pub fn counts_for(&self, divisors: &[u64]) -> Vec<u64> {
        divisors.iter().map(|d| self.per_order.get(d).copied().unwrap_or(0)).collect()
    }
}

/// Count cyclic subgroups of each order via the element-order census.
pub fn cyclic_profile(g: &FiniteGroup) -> CyclicProfile {
    let mut per_order = BTreeMap::new();
    for (ord, count) in g.order_class_counts() {
        let phi = euler_phi(ord as u64);
        debug_assert_eq!(count as u64 % phi, 0);
        *per_order.entry(ord as u64).or_insert(0) += count as u64 / phi;
    }
    let total = per_order.values().sum();
    CyclicProfile { per_order, total, group_order: g.order() as u64 }
}

/// Total number of cyclic subgroups c(G).
pub fn count_cyclic(g: &FiniteGroup) -> u64 {
    cyclic_profile(g).total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_spec, DEFAULT_ORDER_CAP};

    fn build(text: &str) -> FiniteGroup {
        parse_spec(text).unwrap().build(DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn s3_profile() {
        let p = cyclic_profile(&build("D 3"));
        assert_eq!(p.per_order, BTreeMap::from([(1, 1), (2, 3), (3, 1)]));
        assert_eq!(p.total, 5);
    }

    #[test]
    fn quoted_totals() {
        assert_eq!(count_cyclic(&build("D 7")), 9);
        assert_eq!(count_cyclic(&build("C 27 x C 3")), 11);
        assert_eq!(count_cyclic(&build("Q 16")), 8);
        assert_eq!(count_cyclic(&build("C 1024")), 11);
        assert_eq!(count_cyclic(&build("D 8")), 12);
        assert_eq!(count_cyclic(&build("SL23")), 13);
    }

    #[test]
    fn partition_identity() {
        for text in ["C 60", "D 12", "Dic 6", "A4", "SL23", "Z3A4", "F5", "M(5,3)", "EA(2,4)"] {
            let g = build(text);
            let p = cyclic_profile(&g);
            let sum: u64 = p.per_order.iter().map(|(m, c)| c * euler_phi(*m)).sum();
            assert_eq!(sum, g.order() as u64, "{text}");
            assert_eq!(p.per_order[&1], 1);
            for m in p.per_order.keys() {
                assert_eq!(g.order() as u64 % m, 0);
            }
        }
    }

    #[test]
    fn json_keys_ascend_numerically() {
        let p = cyclic_profile(&build("C 12"));
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let i2 = s.find("\"2\"").unwrap();
        let i12 = s.find("\"12\"").unwrap();
        assert!(i2 < i12, "expected numeric ascending keys: {s}");
    }
}
