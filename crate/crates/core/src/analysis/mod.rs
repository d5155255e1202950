//! Cyclic-subgroup counting, subgroup lattices, and Sylow/CLT queries.

mod lattice;
mod profile;
mod subgroup;

pub use lattice::{hasse_dot, is_clt, subgroup_lattice, subgroup_lattice_capped, sylow_count, SubgroupLattice, DEFAULT_LATTICE_CAP};
pub use profile::{count_cyclic, cyclic_profile, CyclicProfile};
pub use subgroup::{enumerate_cyclic_subgroups, Subgroup};
