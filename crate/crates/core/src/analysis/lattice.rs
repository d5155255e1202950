use crate::arith::{divisors, is_prime};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::subgroup::{enumerate_cyclic_subgroups, Subgroup};

/// Default cap on |G| for lattice construction.
pub const DEFAULT_LATTICE_CAP: usize = 512;

/// The full subgroup lattice: canonically sorted subgroups plus the cover
/// relation (transitive reduction of containment).
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    pub subgroups: Vec<Subgroup>,
    /// (lower, upper) index pairs where upper covers lower.
    pub covers: Vec<(usize, usize)>,
}

type Bits = Vec<u64>;

fn to_bits(s: &Subgroup, words: usize) -> Bits {
    let mut b = vec![0u64; words];
    for &x in &s.elements {
        b[x as usize / 64] |= 1 << (x as usize % 64);
    }
    b
}

fn bits_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Closure of a union of two subgroups under the group multiplication
/// (finiteness makes inverses automatic).
fn join(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut members: BTreeSet<u16> = a.elements.iter().copied().collect();
    members.extend(b.elements.iter().copied());
    let mut frontier: Vec<u16> = members.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        let gen: Vec<u16> = members.iter().copied().collect();
        for y in gen {
            for z in [g.mul_idx(x as usize, y as usize), g.mul_idx(y as usize, x as usize)] {
                if members.insert(z as u16) {
                    frontier.push(z as u16);
                }
            }
        }
    }
    Subgroup::new(members.into_iter().collect())
}

/// Worklist join-closure starting from all cyclic subgroups. Every subgroup
/// of G is the join of the cyclic subgroups it contains, so the closure is
/// the full lattice.
pub fn subgroup_lattice(g: &FiniteGroup) -> Result<SubgroupLattice> {
    subgroup_lattice_capped(g, DEFAULT_LATTICE_CAP)
}

pub fn subgroup_lattice_capped(g: &FiniteGroup, cap: usize) -> Result<SubgroupLattice> {
    let n = g.order();
    if n > cap {
        return Err(Error::LatticeCapExceeded { order: n, cap });
    }
    let cyclics = enumerate_cyclic_subgroups(g);
    let mut known: BTreeSet<Subgroup> = cyclics.iter().cloned().collect();
    let mut list: Vec<Subgroup> = cyclics;
    let mut i = 0;
    while i < list.len() {
        let mut j = 0;
        while j < i {
            let a = &list[i];
            let b = &list[j];
            // joins with the trivial subgroup or a superset are no-ops
            if !(a.is_subset_of(b) || b.is_subset_of(a)) {
                let joined = join(g, a, b);
                if known.insert(joined.clone()) {
                    list.push(joined);
                }
            }
            j += 1;
        }
        i += 1;
    }
    let mut subgroups: Vec<Subgroup> = known.into_iter().collect();
    subgroups.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.elements.cmp(&b.elements)));

    let words = n.div_ceil(64);
    let bits: Vec<Bits> = subgroups.iter().map(|s| to_bits(s, words)).collect();
    let mut covers = Vec::new();
    for (lo, s_lo) in subgroups.iter().enumerate() {
        for (hi, s_hi) in subgroups.iter().enumerate() {
            if s_lo.order >= s_hi.order
                || s_hi.order % s_lo.order != 0
                || !bits_subset(&bits[lo], &bits[hi])
            {
                continue;
            }
            let is_cover = !subgroups.iter().enumerate().any(|(mid, s_mid)| {
                mid != lo
                    && mid != hi
                    && s_mid.order > s_lo.order
                    && s_mid.order < s_hi.order
                    && bits_subset(&bits[lo], &bits[mid])
                    && bits_subset(&bits[mid], &bits[hi])
            });
            if is_cover {
                covers.push((lo, hi));
            }
        }
    }
    Ok(SubgroupLattice { subgroups, covers })
}

/// True iff G has a subgroup of every order dividing |G|.
pub fn is_clt(g: &FiniteGroup) -> Result<bool> {
    let lat = subgroup_lattice(g)?;
    let present: BTreeSet<usize> = lat.subgroups.iter().map(|s| s.order).collect();
    Ok(divisors(g.order() as u64).into_iter().all(|d| present.contains(&(d as usize))))
}

/// Number of Sylow p-subgroups (subgroups of order p^k where p^k || |G|).
pub fn sylow_count(g: &FiniteGroup, p: u64) -> Result<u64> {
    let n = g.order() as u64;
    if !is_prime(p) || n % p != 0 {
        return Err(Error::PrimeDoesNotDivideOrder { p, order: g.order() });
    }
    let mut pk = 1u64;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        pk *= p;
    }
    if pk == n {
        // the whole group is its own unique Sylow p-subgroup
        return Ok(1);
    }
    let lat = subgroup_lattice(g)?;
    Ok(lat.subgroups.iter().filter(|s| s.order as u64 == pk).count() as u64)
}

/// DOT digraph of the Hasse diagram: one node per subgroup labeled
/// "order:index" (index among subgroups of the same order), one edge per
/// cover relation, deterministic order.
pub fn hasse_dot(lat: &SubgroupLattice) -> String {
    let mut rank: BTreeMap<usize, usize> = BTreeMap::new();
    let mut labels = Vec::with_capacity(lat.subgroups.len());
    for s in &lat.subgroups {
        let r = rank.entry(s.order).or_insert(0);
        labels.push(format!("{}:{}", s.order, r));
        *r += 1;
    }
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    for &(lo, hi) in &lat.covers {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}
