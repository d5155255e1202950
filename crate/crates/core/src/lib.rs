//! Exact computational toolkit for cyclic-subgroup census work on small
//! finite groups: explicit Cayley-table construction of the classical
//! families, brute-force and closed-form counts of cyclic subgroups,
//! subgroup lattices with Sylow/CLT queries, and symbolic reproduction of
//! the T(G) = 0 case tables behind the 11- and 12-cyclic classifications.

pub mod analysis;
pub mod arith;
mod error;
pub mod forms;
pub mod group;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};

pub use analysis::{
    count_cyclic, cyclic_profile, enumerate_cyclic_subgroups, hasse_dot, is_clt,
    subgroup_lattice, sylow_count, CyclicProfile, Subgroup, SubgroupLattice,
};
pub use arith::{divisor_count, euler_phi, omega};
pub use forms::{abelian_count, admissible_shapes, family_count, shape_classes, FamilyCount, OrderShape};
pub use group::{parse_spec, verify_group_axioms, Element, FiniteGroup, GroupSpec, DEFAULT_ORDER_CAP};
pub use tables::{
    all_scenarios, enumerate_rows, reproduce_table, scenario_by_id, solve_primes, t_polynomial,
    SymbolicDivisor, TPolynomial, TableReport, TableScenario,
};
pub use verify::{audit_tables, verify_registry, verify_theorem, VerificationReport};
