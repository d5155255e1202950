//! Concrete finite groups as explicit Cayley tables.

mod build;
mod parse;
mod spec;

pub use parse::parse_spec;
pub use spec::{GroupSpec, NamedGroup, DEFAULT_ORDER_CAP};

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Index into a group's element list. Index 0 is always the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u16);

/// A finite group given by its full multiplication table, with cached
/// inverses and element orders. Immutable after construction.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    elem_order: Vec<u32>,
    label: String,
}

impl FiniteGroup {
    /// Build from a raw table; derives inverses and element orders.
    /// The table must satisfy the identity law at index 0 (checked), but
    /// associativity is only verified on demand by [`verify_group_axioms`].
    pub(crate) fn from_table(table: Vec<u16>, order: usize, label: String) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        for j in 0..order {
            if table[j] as usize != j || table[j * order] as usize != j {
                return Err(Error::MalformedSpec(format!(
                    "index 0 is not an identity in table for {label}"
                )));
            }
        }
        let mut inverse = vec![u16::MAX; order];
        for i in 0..order {
            for j in 0..order {
                if table[i * order + j] == 0 {
                    inverse[i] = j as u16;
                    break;
                }
            }
            if inverse[i] == u16::MAX {
                return Err(Error::MalformedSpec(format!(
                    "element {i} has no inverse in table for {label}"
                )));
            }
        }
        let mut elem_order = vec![0u32; order];
        elem_order[0] = 1;
        for i in 1..order {
            let mut x = i;
            let mut k = 1u32;
            while x != 0 {
                x = table[x * order + i] as usize;
                k += 1;
                if k as usize > order + 1 {
                    return Err(Error::MalformedSpec(format!(
                        "element {i} does not reach the identity in table for {label}"
                    )));
                }
            }
            elem_order[i] = k;
        }
        Ok(FiniteGroup { order, table, inverse, elem_order, label })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.table[a.0 as usize * self.order + b.0 as usize])
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: Element) -> Element {
        Element(self.inverse[a.0 as usize])
    }

    /// Order of the element `x`; divides the group order by Lagrange.
    pub fn element_order(&self, x: Element) -> Result<u32> {
        self.elem_order
            .get(x.0 as usize)
            .copied()
            .ok_or(Error::IndexOutOfRange { index: x.0 as usize, order: self.order })
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub(crate) fn element_order_idx(&self, x: usize) -> u32 {
        self.elem_order[x]
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order as u16).map(Element)
    }

    /// Map d ↦ number of elements of exact order d.
    pub fn order_class_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for &o in &self.elem_order {
            *out.entry(o).or_insert(0) += 1;
        }
        out
    }

    /// Test-only access for corrupting a table entry (negative controls).
    #[doc(hidden)]
    pub fn with_corrupted_entry(&self, i: usize, j: usize, v: u16) -> FiniteGroup {
        let mut g = self.clone();
        g.table[i * g.order + j] = v;
        g
    }
}

/// Outcome of the full axiom scan, with a counterexample when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub holds: bool,
    pub failure: Option<AxiomFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    /// (a·b)·c != a·(b·c)
    Associativity(usize, usize, usize),
    /// e·x != x or x·e != x
    Identity(usize),
    /// x·x⁻¹ != e
    Inverse(usize),
    /// table entry out of range
    Closure(usize, usize),
}

/// Full O(n³) check of associativity plus the identity and inverse laws.
pub fn verify_group_axioms(g: &FiniteGroup) -> AxiomReport {
    let n = g.order;
    for i in 0..n {
        for j in 0..n {
            if g.table[i * n + j] as usize >= n {
                return AxiomReport { holds: false, failure: Some(AxiomFailure::Closure(i, j)) };
            }
        }
    }
    for x in 0..n {
        if g.mul_idx(0, x) != x || g.mul_idx(x, 0) != x {
            return AxiomReport { holds: false, failure: Some(AxiomFailure::Identity(x)) };
        }
        if g.mul_idx(x, g.inverse[x] as usize) != 0 || g.mul_idx(g.inverse[x] as usize, x) != 0 {
            return AxiomReport { holds: false, failure: Some(AxiomFailure::Inverse(x)) };
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul_idx(a, b);
            for c in 0..n {
                if g.mul_idx(ab, c) != g.mul_idx(a, g.mul_idx(b, c)) {
                    return AxiomReport {
                        holds: false,
                        failure: Some(AxiomFailure::Associativity(a, b, c)),
                    };
                }
            }
        }
    }
    AxiomReport { holds: true, failure: None }
}
