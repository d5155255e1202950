use crate::arith::{divisors, is_prime};
use crate::tables::poly::TPolynomial;

pub const DEFAULT_SCAN_BOUND: u64 = 10_000;

/// Admissibility constraints on prime assignments.
#[derive(Debug, Clone, Default)]
pub struct SolveConstraints {
    /// Primes each variable may not take.
    pub excluded: [Vec<u64>; 3],
    /// (i, j) pairs demanding var_i < var_j.
    pub orderings: Vec<(usize, usize)>,
    /// All assigned variables pairwise distinct.
    pub distinct: bool,
}

/// Result of solving T = 0 over admissible primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The polynomial is identically zero: every admissible assignment works.
    IdenticallyZero,
    /// Complete solution set, certified exactly.
    Exact(Vec<[u64; 3]>),
    /// Solutions found below the scan bound; completeness not certified.
    ScanLimited(Vec<[u64; 3]>),
}

impl SolveOutcome {
    pub fn solutions(&self) -> &[[u64; 3]] {
        match self {
            SolveOutcome::IdenticallyZero => &[],
            SolveOutcome::Exact(v) | SolveOutcome::ScanLimited(v) => v,
        }
    }
}

/// Solve poly = 0 over primes. Univariate polynomials are solved exactly
/// (integer roots divide the trailing coefficient); multivariate ones are
/// scanned up to `scan_bound` with a monotonicity certificate where one
/// applies.
pub fn solve_primes(
    poly: &TPolynomial,
    constraints: &SolveConstraints,
    scan_bound: u64,
) -> SolveOutcome {
    if poly.is_zero() {
        return SolveOutcome::IdenticallyZero;
    }
    let used = poly.variables();
    let nvars = used.iter().filter(|&&u| u).count();
    match nvars {
        0 => SolveOutcome::Exact(vec![]), // nonzero constant
        1 => {
            let v = used.iter().position(|&u| u).unwrap();
            let roots = univariate_prime_roots(poly, v);
            let sols = roots
                .into_iter()
                .filter(|&r| !constraints.excluded[v].contains(&r))
                .map(|r| {
                    let mut a = [0u64; 3];
                    a[v] = r;
                    a
                })
                .collect();
            SolveOutcome::Exact(sols)
        }
        _ => scan_multivariate(poly, constraints, scan_bound, used),
    }
}

/// All prime roots of a univariate integer polynomial, exactly: any integer
/// root divides the lowest nonzero coefficient.
fn univariate_prime_roots(poly: &TPolynomial, v: usize) -> Vec<u64> {
    let coeffs = poly.univariate_coeffs(v).expect("univariate by construction");
    let low = coeffs.iter().position(|&c| c != 0).expect("nonzero");
    let c0 = coeffs[low].unsigned_abs();
    let mut out: Vec<u64> = divisors(c0)
        .into_iter()
        .filter(|&d| is_prime(d))
        .filter(|&d| {
            let mut assign = [0u64; 3];
            assign[v] = d;
            poly.eval(assign) == 0
        })
        .collect();
    out.sort_unstable();
    out
}

fn admissible(assign: [u64; 3], used: [bool; 3], constraints: &SolveConstraints) -> bool {
    for (i, &u) in used.iter().enumerate() {
        if u && constraints.excluded[i].contains(&assign[i]) {
            return false;
        }
    }
    for &(i, j) in &constraints.orderings {
        if used[i] && used[j] && assign[i] >= assign[j] {
            return false;
        }
    }
    if constraints.distinct {
        for i in 0..3 {
            for j in i + 1..3 {
                if used[i] && used[j] && assign[i] == assign[j] {
                    return false;
                }
            }
        }
    }
    true
}

fn scan_multivariate(
    poly: &TPolynomial,
    constraints: &SolveConstraints,
    scan_bound: u64,
    used: [bool; 3],
) -> SolveOutcome {
    let primes: Vec<u64> = (2..=scan_bound).filter(|&n| is_prime(n)).collect();
    let vars: Vec<usize> = (0..3).filter(|&i| used[i]).collect();
    let mut sols = Vec::new();
    let mut assign = [0u64; 3];
    fn rec(
        k: usize,
        vars: &[usize],
        primes: &[u64],
        poly: &TPolynomial,
        constraints: &SolveConstraints,
        used: [bool; 3],
        assign: &mut [u64; 3],
        sols: &mut Vec<[u64; 3]>,
    ) {
        if k == vars.len() {
            if admissible(*assign, used, constraints) && poly.eval(*assign) == 0 {
                sols.push(*assign);
            }
            return;
        }
        for &p in primes {
            assign[vars[k]] = p;
            rec(k + 1, vars, primes, poly, constraints, used, assign, sols);
        }
        assign[vars[k]] = 0;
    }
    rec(0, &vars, &primes, poly, constraints, used, &mut assign, &mut sols);

    // Monotone certificate: if every non-constant coefficient has the same
    // sign and the value at the minimal corner already passed it, the
    // polynomial cannot return to zero beyond the bound.
    let mut pos = 0usize;
    let mut neg = 0usize;
    for (exps, &c) in poly.terms() {
        if exps.iter().any(|&e| e > 0) {
            if c > 0 {
                pos += 1;
            } else {
                neg += 1;
            }
        }
    }
    let corner = {
        let mut a = [0u64; 3];
        for &v in &vars {
            a[v] = 2;
        }
        poly.eval(a)
    };
    let certified = (neg == 0 && corner > 0) || (pos == 0 && corner < 0);
    if certified {
        SolveOutcome::Exact(sols)
    } else {
        SolveOutcome::ScanLimited(sols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::poly::parse_t_cell;

    fn cons(excluded_p: &[u64]) -> SolveConstraints {
        SolveConstraints {
            excluded: [excluded_p.to_vec(), vec![], vec![]],
            ..Default::default()
        }
    }

    #[test]
    fn no_root_for_14p_minus_14() {
        let t = parse_t_cell("14p-14").unwrap();
        assert_eq!(solve_primes(&t, &cons(&[2, 3, 7]), 100), SolveOutcome::Exact(vec![]));
    }

    #[test]
    fn root_at_seven() {
        let t = parse_t_cell("p-7").unwrap();
        assert_eq!(
            solve_primes(&t, &cons(&[2, 3]), 100),
            SolveOutcome::Exact(vec![[7, 0, 0]])
        );
    }

    #[test]
    fn root_at_three_in_q() {
        let t = parse_t_cell("q-3").unwrap();
        let c = SolveConstraints {
            excluded: [vec![], vec![2], vec![]],
            ..Default::default()
        };
        assert_eq!(solve_primes(&t, &c, 100), SolveOutcome::Exact(vec![[0, 3, 0]]));
    }

    #[test]
    fn exclusion_applies() {
        let t = parse_t_cell("p-7").unwrap();
        assert_eq!(solve_primes(&t, &cons(&[7]), 100), SolveOutcome::Exact(vec![]));
    }

    #[test]
    fn identically_zero() {
        assert_eq!(
            solve_primes(&TPolynomial::zero(), &cons(&[]), 100),
            SolveOutcome::IdenticallyZero
        );
    }

    #[test]
    fn cubic_with_large_root_is_exact() {
        // (p - 101)(p^2 + 1) has prime root 101 above any small scan bound
        let t = parse_t_cell("p^3-101p^2+p-101").unwrap();
        assert_eq!(solve_primes(&t, &cons(&[]), 10), SolveOutcome::Exact(vec![[101, 0, 0]]));
    }

    #[test]
    fn multivariate_scan() {
        // pq - 2q - 3p + 6 = (p-2)(q-3): admissible zeros need p=2 or q=3
        let t = parse_t_cell("pq-2q-3p+6").unwrap();
        let c = SolveConstraints { distinct: true, ..Default::default() };
        let out = solve_primes(&t, &c, 12);
        let sols = out.solutions();
        assert!(sols.contains(&[2, 3, 0]));
        assert!(sols.contains(&[2, 5, 0]));
        assert!(sols.contains(&[5, 3, 0]));
        assert!(!sols.contains(&[2, 2, 0]));
        // mixed signs, no certificate
        assert!(matches!(out, SolveOutcome::ScanLimited(_)));
    }

    #[test]
    fn multivariate_monotone_certificate() {
        let t = parse_t_cell("pq+1").unwrap();
        assert_eq!(
            solve_primes(&t, &SolveConstraints::default(), 50),
            SolveOutcome::Exact(vec![])
        );
    }
}
