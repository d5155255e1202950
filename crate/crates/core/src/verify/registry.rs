//! Registries of classified groups: the 11-cyclic and 12-cyclic families,
//! the known set of non-cyclic groups with at most 10 cyclic subgroups, and
//! the inline count claims. Semidirect actions are pinned concretely; each
//! pin is validated by the expected-count check at verification time.

use crate::arith::first_primes;
use crate::group::{GroupSpec, NamedGroup};

#[derive(Debug, Clone)]
pub struct Family {
    pub name: &'static str,
    pub expected: u64,
    pub kind: FamilyKind,
}

#[derive(Debug, Clone)]
pub enum FamilyKind {
    Fixed(GroupSpec),
    OneParam { make: fn(u64) -> GroupSpec, excluded: &'static [u64] },
    TwoParam { make: fn(u64, u64) -> GroupSpec },
    ThreeParam { make: fn(u64, u64, u64) -> GroupSpec },
}

const SAMPLES_PER_PARAM: usize = 5;

impl Family {
    /// Concrete instances: the first 5 admissible primes per parameter,
    /// restricted to the order cap.
    pub fn instances(&self, cap: u64) -> Vec<(String, GroupSpec)> {
        let mut out = Vec::new();
        match &self.kind {
            FamilyKind::Fixed(spec) => {
                out.push((self.name.to_string(), spec.clone()));
            }
            FamilyKind::OneParam { make, excluded } => {
                for p in first_primes(SAMPLES_PER_PARAM, |p| !excluded.contains(&p)) {
                    let spec = make(p);
                    if spec.spec_order() <= cap {
                        out.push((format!("{} at {p}", self.name), spec));
                    }
                }
            }
            FamilyKind::TwoParam { make } => {
                for p in first_primes(SAMPLES_PER_PARAM, |_| true) {
                    for q in first_primes(SAMPLES_PER_PARAM, |q| q != p) {
                        let spec = make(p, q);
                        if spec.spec_order() <= cap {
                            out.push((format!("{} at ({p},{q})", self.name), spec));
                        }
                    }
                }
            }
            FamilyKind::ThreeParam { make } => {
                for p in first_primes(SAMPLES_PER_PARAM, |_| true) {
                    let others = first_primes(SAMPLES_PER_PARAM + 1, |x| x != p);
                    for (i, &q) in others.iter().enumerate() {
                        for &r in &others[i + 1..] {
                            let spec = make(p, q, r);
                            if spec.spec_order() <= cap {
                                out.push((format!("{} at ({p},{q},{r})", self.name), spec));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn cyclic(n: u64) -> GroupSpec {
    GroupSpec::Cyclic(n)
}

fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
    GroupSpec::DirectProduct(Box::new(a), Box::new(b))
}

/// The eight families with exactly 11 cyclic subgroups.
pub fn families_11() -> Vec<Family> {
    vec![
        Family {
            name: "Z_p^10",
            expected: 11,
            kind: FamilyKind::OneParam { make: |p| cyclic(p.pow(10)), excluded: &[] },
        },
        Family {
            name: "Z_27 x Z_3",
            expected: 11,
            kind: FamilyKind::Fixed(product(cyclic(27), cyclic(3))),
        },
        Family {
            name: "Z_27 : Z_3",
            expected: 11,
            kind: FamilyKind::Fixed(GroupSpec::ModularPGroup { p: 3, a: 4 }),
        },
        Family { name: "Dic_7", expected: 11, kind: FamilyKind::Fixed(GroupSpec::Dicyclic(7)) },
        Family {
            name: "Z_7 : Z_9",
            expected: 11,
            kind: FamilyKind::Fixed(GroupSpec::SemidirectCyclic { base: 7, top: 9, multiplier: 2 }),
        },
        Family {
            name: "Z_3 x S_3",
            expected: 11,
            kind: FamilyKind::Fixed(product(cyclic(3), GroupSpec::Dihedral(3))),
        },
        Family {
            name: "Z_5 : Z_8",
            expected: 11,
            kind: FamilyKind::Fixed(GroupSpec::SemidirectCyclic { base: 5, top: 8, multiplier: 4 }),
        },
        Family {
            name: "Z_3 : Z_16",
            expected: 11,
            kind: FamilyKind::Fixed(GroupSpec::SemidirectCyclic { base: 3, top: 16, multiplier: 2 }),
        },
    ]
}

/// The fourteen families with exactly 12 cyclic subgroups.
pub fn families_12() -> Vec<Family> {
    vec![
        Family {
            name: "Z_p^11",
            expected: 12,
            kind: FamilyKind::OneParam { make: |p| cyclic(p.pow(11)), excluded: &[] },
        },
        Family {
            name: "Z_p^5q",
            expected: 12,
            kind: FamilyKind::TwoParam { make: |p, q| cyclic(p.pow(5) * q) },
        },
        Family {
            name: "Z_p^3q^2",
            expected: 12,
            kind: FamilyKind::TwoParam { make: |p, q| cyclic(p.pow(3) * q * q) },
        },
        Family {
            name: "Z_p^2qr",
            expected: 12,
            kind: FamilyKind::ThreeParam { make: |p, q, r| cyclic(p * p * q * r) },
        },
        Family {
            name: "Z_5 x Z_25",
            expected: 12,
            kind: FamilyKind::Fixed(product(cyclic(5), cyclic(25))),
        },
        Family {
            name: "Z_2 x Z_32",
            expected: 12,
            kind: FamilyKind::Fixed(product(cyclic(2), cyclic(32))),
        },
        Family {
            name: "Z_25 : Z_5",
            expected: 12,
            kind: FamilyKind::Fixed(GroupSpec::ModularPGroup { p: 5, a: 3 }),
        },
        Family { name: "D_16", expected: 12, kind: FamilyKind::Fixed(GroupSpec::Dihedral(8)) },
        Family { name: "D_18", expected: 12, kind: FamilyKind::Fixed(GroupSpec::Dihedral(9)) },
        Family {
            name: "F_5",
            expected: 12,
            kind: FamilyKind::Fixed(GroupSpec::Named(NamedGroup::F5)),
        },
        Family {
            name: "Z_3.A_4",
            expected: 12,
            kind: FamilyKind::Fixed(GroupSpec::Named(NamedGroup::Z3A4)),
        },
        Family {
            name: "Z_2 x Z_2q^2",
            expected: 12,
            kind: FamilyKind::OneParam {
                make: |q| product(cyclic(2), cyclic(2 * q * q)),
                excluded: &[2],
            },
        },
        Family {
            name: "Z_4q x Z_2",
            expected: 12,
            kind: FamilyKind::OneParam {
                make: |q| product(cyclic(4 * q), cyclic(2)),
                excluded: &[2],
            },
        },
        Family { name: "Dic_6", expected: 12, kind: FamilyKind::Fixed(GroupSpec::Dicyclic(6)) },
    ]
}

/// The known non-cyclic groups with at most 10 cyclic subgroups.
pub fn known_small_registry() -> Vec<(&'static str, GroupSpec, u64)> {
    vec![
        ("Z_2 x Z_2", GroupSpec::ElementaryAbelian { p: 2, k: 2 }, 4),
        ("Z_3 x Z_3", GroupSpec::ElementaryAbelian { p: 3, k: 2 }, 5),
        ("Z_2 x Z_4", product(cyclic(2), cyclic(4)), 6),
        ("Z_5 x Z_5", GroupSpec::ElementaryAbelian { p: 5, k: 2 }, 7),
        ("Z_3 x Z_9", product(cyclic(3), cyclic(9)), 8),
        ("Z_2 x Z_8", product(cyclic(2), cyclic(8)), 8),
        ("Z_2 x Z_2 x Z_2", GroupSpec::ElementaryAbelian { p: 2, k: 3 }, 8),
        ("Z_7 x Z_7", GroupSpec::ElementaryAbelian { p: 7, k: 2 }, 9),
        ("Z_2 x Z_16", product(cyclic(2), cyclic(16)), 10),
        ("Z_4 x Z_4", product(cyclic(4), cyclic(4)), 10),
        ("Z_2 x Q_8", product(cyclic(2), GroupSpec::GeneralizedQuaternion(3)), 10),
        ("SD_16", GroupSpec::Semidihedral(4), 10),
        ("Z_16 : Z_2", GroupSpec::ModularPGroup { p: 2, a: 5 }, 10),
        ("Z_4 : Z_4", GroupSpec::SemidirectCyclic { base: 4, top: 4, multiplier: 3 }, 10),
        ("Z_9 : Z_3", GroupSpec::ModularPGroup { p: 3, a: 3 }, 8),
        ("Z_8 : Z_2", GroupSpec::ModularPGroup { p: 2, a: 4 }, 8),
        ("Q_16", GroupSpec::GeneralizedQuaternion(4), 8),
        ("D_8", GroupSpec::Dihedral(4), 7),
        ("Q_8", GroupSpec::GeneralizedQuaternion(3), 5),
    ]
}

/// Inline count claims quoted alongside the case analysis, with the primes
/// they are checked at (the base prime is excluded by the distinct-primes
/// convention).
pub fn inline_claims() -> Vec<(String, GroupSpec, u64)> {
    let mut out = vec![
        ("SL(2,3)".to_string(), GroupSpec::Named(NamedGroup::Sl23), 13),
        ("D_14".to_string(), GroupSpec::Dihedral(7), 9),
    ];
    for q in [3u64, 5, 7] {
        out.push((format!("Z_2 x Z_2q at q={q}"), product(cyclic(2), cyclic(2 * q)), 8));
        out.push((format!("Z_q x Q_8 at q={q}"), product(cyclic(q), GroupSpec::GeneralizedQuaternion(3)), 10));
        if q != 3 {
            out.push((format!("Z_3 x Z_3q at q={q}"), product(cyclic(3), cyclic(3 * q)), 10));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_counts() {
        assert_eq!(families_11().len(), 8);
        assert_eq!(families_12().len(), 14);
        assert_eq!(known_small_registry().len(), 19);
    }

    #[test]
    fn power_towers_sample_only_two() {
        let f = &families_11()[0];
        let inst = f.instances(2048);
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].1.spec_order(), 1024);
        let f = &families_12()[0];
        let inst = f.instances(2048);
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].1.spec_order(), 2048);
    }

    #[test]
    fn two_param_sampling_respects_cap() {
        let f = &families_12()[1]; // Z_p^5q
        let inst = f.instances(2048);
        assert!(inst.iter().any(|(n, _)| n.ends_with("(2,3)")));
        assert!(inst.iter().any(|(n, _)| n.ends_with("(3,2)")));
        assert!(inst.iter().all(|(_, s)| s.spec_order() <= 2048));
        assert!(inst.len() >= 6);
    }

    #[test]
    fn three_param_sampling() {
        let f = &families_12()[3]; // Z_p^2qr
        let inst = f.instances(2048);
        assert!(inst.iter().any(|(n, _)| n.ends_with("(2,3,5)")));
        assert!(inst.iter().any(|(n, _)| n.ends_with("(3,2,5)")));
        assert!(inst.iter().any(|(n, _)| n.ends_with("(5,2,3)")));
    }
}
