//! Closed-form cyclic-subgroup counts and the order-shape bound.

use crate::arith::{divisors, euler_phi, gcd, is_prime};
use crate::error::{Error, Result};

pub use crate::arith::{divisor_count, omega};

/// The families with quoted closed-form counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyCount {
    /// D_{2^a}: c = a + 2^(a-1)
    DihedralPow2 { a: u32 },
    /// Q_{2^a}: c = a + 2^(a-2)
    QuaternionPow2 { a: u32 },
    /// M(2^a): c = 2a
    ModularPow2 { a: u32 },
    /// S_{2^a}: c = a + 3·2^(a-3)
    SemidihedralPow2 { a: u32 },
    /// Z_p x Z_{p^(a-1)}: c = (a-1)p + 2
    RankTwoP { p: u64, a: u32 },
    /// M(p^a), p odd: c = (a-1)p + 2
    ModularOddP { p: u64, a: u32 },
    /// E(p^3): c = p² + p + 2
    ElementaryP3 { p: u64 },
    /// Nonabelian group of order pq, p < q: c = q + 2
    NonabelianPQ { p: u64, q: u64 },
}

/// Evaluate the closed form for the family, exactly.
pub fn family_count(f: FamilyCount) -> Result<u64> {
    match f {
        FamilyCount::DihedralPow2 { a } => {
            check(a >= 3, "dihedral 2-power family needs a >= 3")?;
            Ok(a as u64 + (1u64 << (a - 1)))
        }
        FamilyCount::QuaternionPow2 { a } => {
            check(a >= 3, "quaternion family needs a >= 3")?;
            Ok(a as u64 + (1u64 << (a - 2)))
        }
        FamilyCount::ModularPow2 { a } => {
            check(a >= 3, "modular 2-power family needs a >= 3")?;
            Ok(2 * a as u64)
        }
        FamilyCount::SemidihedralPow2 { a } => {
            check(a >= 3, "semidihedral family needs a >= 3")?;
            Ok(a as u64 + 3 * (1u64 << (a - 3)))
        }
        FamilyCount::RankTwoP { p, a } => {
            check(is_prime(p) && p % 2 == 1 && a >= 2, "rank-2 family needs odd prime p, a >= 2")?;
            Ok((a as u64 - 1) * p + 2)
        }
        FamilyCount::ModularOddP { p, a } => {
            check(is_prime(p) && p % 2 == 1 && a >= 2, "odd modular family needs odd prime p, a >= 2")?;
            Ok((a as u64 - 1) * p + 2)
        }
        FamilyCount::ElementaryP3 { p } => {
            check(is_prime(p), "elementary family needs prime p")?;
            Ok(p * p + p + 2)
        }
        FamilyCount::NonabelianPQ { p, q } => {
            check(is_prime(p) && is_prime(q) && p < q, "nonabelian pq family needs primes p < q")?;
            Ok(q + 2)
        }
    }
}

fn check(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(msg.into()))
    }
}

/// Number of cyclic subgroups of the abelian group Z_{n1} x ... x Z_{nk},
/// via the exact-order census: #{x : x^d = e} = Π gcd(d, n_i), Möbius
/// inversion over the divisor lattice, then c = Σ_d #{ord = d} / φ(d).
pub fn abelian_count(invariants: &[u64]) -> u64 {
    assert!(!invariants.is_empty() && invariants.iter().all(|&n| n >= 1));
    let lcm = invariants.iter().copied().fold(1u64, |a, b| a / gcd(a, b) * b);
    let ds = divisors(lcm);
    let kill: Vec<u64> = ds
        .iter()
        .map(|&d| invariants.iter().map(|&n| gcd(d, n)).product())
        .collect();
    let mut exact = vec![0i64; ds.len()];
    let mut total = 0u64;
    for i in 0..ds.len() {
        let mut cnt = kill[i] as i64;
        for j in 0..i {
            if ds[i] % ds[j] == 0 {
                cnt -= exact[j];
            }
        }
        exact[i] = cnt;
        debug_assert!(cnt >= 0 && cnt as u64 % euler_phi(ds[i]) == 0);
        total += cnt as u64 / euler_phi(ds[i]);
    }
    total
}

/// An admissible order shape: the multiset of prime exponents, e.g.
/// {2, 1} for p²q.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderShape {
    /// Exponents in descending order; empty means order 1.
    pub exponents: Vec<u32>,
}

impl OrderShape {
    pub fn divisor_count(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64 + 1).product()
    }

    /// Symbolic form, e.g. "p^2q", "pqr", "p^10".
    pub fn symbol(&self) -> String {
        if self.exponents.is_empty() {
            return "1".into();
        }
        let vars = ["p", "q", "r"];
        self.exponents
            .iter()
            .zip(vars)
            .map(|(&e, v)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect()
    }
}

/// All order shapes an n-cyclic group can have: nonempty exponent multisets
/// with at most three primes and divisor count at most n (the Richards bound
/// c(G) >= d(|G|)). The empty shape (order 1) appears only for n = 1, since
/// the trivial group is exactly 1-cyclic.
pub fn admissible_shapes(n: u64) -> Vec<OrderShape> {
    let mut out = Vec::new();
    if n == 1 {
        out.push(OrderShape { exponents: vec![] });
        return out;
    }
    // e1 >= e2 >= e3 >= 1, Π(ei + 1) <= n, up to three primes
    let max_e = (n - 1) as u32;
    for e1 in 1..=max_e {
        if (e1 as u64 + 1) > n {
            break;
        }
        out.push(OrderShape { exponents: vec![e1] });
        for e2 in 1..=e1 {
            if (e1 as u64 + 1) * (e2 as u64 + 1) > n {
                break;
            }
            out.push(OrderShape { exponents: vec![e1, e2] });
            for e3 in 1..=e2 {
                if (e1 as u64 + 1) * (e2 as u64 + 1) * (e3 as u64 + 1) > n {
                    break;
                }
                out.push(OrderShape { exponents: vec![e1, e2, e3] });
            }
        }
    }
    out.sort_by_key(|s| (s.exponents.len(), s.exponents.clone()));
    out
}

/// Shape classes with the prime-power tower collapsed, e.g. for n = 11:
/// ["p^k, k<=10", "pq", "p^2q", "p^2q^2", "p^3q", "p^4q", "pqr"].
pub fn shape_classes(n: u64) -> Vec<String> {
    let shapes = admissible_shapes(n);
    let mut out = Vec::new();
    let max_k = shapes
        .iter()
        .filter(|s| s.exponents.len() == 1)
        .map(|s| s.exponents[0])
        .max();
    if let Some(k) = max_k {
        out.push(format!("p^k, k<={k}"));
    }
    for s in &shapes {
        if s.exponents.len() >= 2 {
            out.push(s.symbol());
        } else if s.exponents.is_empty() {
            out.push("1".into());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        assert_eq!(family_count(FamilyCount::DihedralPow2 { a: 4 }).unwrap(), 12);
        assert_eq!(family_count(FamilyCount::RankTwoP { p: 3, a: 4 }).unwrap(), 11);
        assert_eq!(family_count(FamilyCount::ElementaryP3 { p: 2 }).unwrap(), 8);
        assert_eq!(family_count(FamilyCount::NonabelianPQ { p: 2, q: 7 }).unwrap(), 9);
        assert_eq!(family_count(FamilyCount::QuaternionPow2 { a: 4 }).unwrap(), 8);
        assert_eq!(family_count(FamilyCount::ModularPow2 { a: 5 }).unwrap(), 10);
        assert_eq!(family_count(FamilyCount::SemidihedralPow2 { a: 4 }).unwrap(), 10);
        assert!(family_count(FamilyCount::NonabelianPQ { p: 7, q: 3 }).is_err());
        assert!(family_count(FamilyCount::DihedralPow2 { a: 2 }).is_err());
    }

    #[test]
    fn abelian_examples() {
        assert_eq!(abelian_count(&[96]), divisor_count(96));
        assert_eq!(abelian_count(&[2, 18]), 12);
        assert_eq!(abelian_count(&[2, 2, 2]), 8);
        assert_eq!(abelian_count(&[3, 27]), 11);
        assert_eq!(abelian_count(&[2, 18]), abelian_count(&[18, 2]));
    }

    #[test]
    fn shapes_for_eleven() {
        let classes = shape_classes(11);
        let expect: Vec<String> = ["p^k, k<=10", "pq", "p^2q", "p^2q^2", "p^3q", "p^4q", "pqr"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(classes, expect);
    }

    #[test]
    fn shapes_for_twelve() {
        let classes = shape_classes(12);
        let expect: Vec<String> = [
            "p^k, k<=11",
            "pq",
            "p^2q",
            "p^2q^2",
            "p^3q",
            "p^3q^2",
            "p^4q",
            "p^5q",
            "pqr",
            "p^2qr",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(classes, expect);
    }

    #[test]
    fn shape_edge_cases() {
        assert_eq!(admissible_shapes(2), vec![OrderShape { exponents: vec![1] }]);
        assert_eq!(admissible_shapes(1), vec![OrderShape { exponents: vec![] }]);
        assert_eq!(shape_classes(1), vec!["1".to_string()]);
    }
}
