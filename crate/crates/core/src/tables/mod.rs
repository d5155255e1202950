//! Symbolic reproduction of the Diophantine case tables: candidate count
//! vectors, the T polynomial |G| − Σ c(m)·φ(m), and its prime solutions.

mod divisor;
mod enumerate;
mod poly;
mod report;
pub(crate) mod scenario;
pub(crate) mod solve;

pub use divisor::SymbolicDivisor;
pub use enumerate::{enumerate_rows, EnumeratedRow};
pub use poly::{parse_t_cell, TPolynomial};
pub use report::{reproduce_table, CellVerdict, RowReport, TableReport};
pub use scenario::{
    all_scenarios, load_scenario_dir, scenario_by_id, BlockConstraints, ClaimedSolution, Claims,
    ExpectedRow, TableScenario,
};
pub use solve::{solve_primes, SolveConstraints, SolveOutcome, DEFAULT_SCAN_BOUND};

use crate::error::{Error, Result};

/// T(G) = |G| − Σ_m c(m)·φ(m) as an exact polynomial. Each divisor must
/// divide the order symbolically.
pub fn t_polynomial(
    order: &SymbolicDivisor,
    row: &[(SymbolicDivisor, u64)],
) -> Result<TPolynomial> {
    let mut t = order.to_poly();
    for (d, count) in row {
        if !d.divides(order) {
            return Err(Error::DivisorNotDividing {
                divisor: d.symbol(),
                order: order.symbol(),
            });
        }
        t = t - TPolynomial::constant(*count as i64) * d.phi_symbolic();
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(constant: u64, p: u8) -> SymbolicDivisor {
        SymbolicDivisor { constant, p, q: 0, r: 0 }
    }

    #[test]
    fn table_one_first_row() {
        let order = dv(21, 1);
        let row = vec![
            (dv(1, 0), 1),
            (dv(7, 0), 1),
            (dv(3, 0), 7),
            (dv(1, 1), 1),
            (dv(7, 1), 1),
        ];
        let t = t_polynomial(&order, &row).unwrap();
        assert_eq!(t.to_string(), "14p - 14");
    }

    #[test]
    fn identically_zero_row() {
        // order 6p with counts 1, 3x2, 1x3, 1xp, 5x2p
        let order = dv(6, 1);
        let row = vec![
            (dv(1, 0), 1),
            (dv(2, 0), 3),
            (dv(3, 0), 1),
            (dv(1, 1), 1),
            (dv(2, 1), 5),
        ];
        assert!(t_polynomial(&order, &row).unwrap().is_zero());
    }

    #[test]
    fn trivial_order() {
        let t = t_polynomial(&dv(1, 0), &[(dv(1, 0), 1)]).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn non_divisor_rejected() {
        let err = t_polynomial(&dv(21, 1), &[(dv(2, 0), 1)]);
        assert!(matches!(err, Err(Error::DivisorNotDividing { .. })));
    }
}
