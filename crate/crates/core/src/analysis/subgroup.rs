use crate::group::FiniteGroup;
use std::collections::BTreeSet;

/// A subgroup as its sorted element-index list. The sorted list is the
/// canonical identity, independent of any generator choice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    pub elements: Vec<u16>,
    pub order: usize,
}

impl Subgroup {
    pub fn new(mut elements: Vec<u16>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let order = elements.len();
        Subgroup { elements, order }
    }

    pub fn contains(&self, x: u16) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.elements.iter().all(|&x| other.contains(x))
    }
}

/// The cyclic subgroup generated by `x`.
pub fn generated_cyclic(g: &FiniteGroup, x: u16) -> Subgroup {
    let mut elems = vec![0u16];
    let mut cur = x;
    while cur != 0 {
        elems.push(cur);
        cur = g.mul(crate::group::Element(cur), crate::group::Element(x)).0;
    }
    Subgroup::new(elems)
}

/// Every cyclic subgroup ⟨x⟩, deduplicated, in canonical order
/// (ascending order, then lexicographic element lists).
pub fn enumerate_cyclic_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = BTreeSet::new();
    for x in 0..g.order() as u16 {
        seen.insert(generated_cyclic(g, x));
    }
    let mut out: Vec<Subgroup> = seen.into_iter().collect();
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.elements.cmp(&b.elements)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::count_cyclic;
    use crate::group::{parse_spec, DEFAULT_ORDER_CAP};

    fn build(text: &str) -> FiniteGroup {
        parse_spec(text).unwrap().build(DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn cyclic_4_has_three_subgroups() {
        let subs = enumerate_cyclic_subgroups(&build("C 4"));
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[0].elements, vec![0]);
        assert_eq!(subs[1].elements, vec![0, 2]);
        assert_eq!(subs[2].elements, vec![0, 1, 2, 3]);
    }

    #[test]
    fn a4_has_eight_cyclic_subgroups() {
        let subs = enumerate_cyclic_subgroups(&build("A4"));
        assert_eq!(subs.len(), 8);
        assert_eq!(subs.iter().filter(|s| s.order == 2).count(), 3);
        assert_eq!(subs.iter().filter(|s| s.order == 3).count(), 4);
    }

    #[test]
    fn dic7_has_eleven() {
        assert_eq!(enumerate_cyclic_subgroups(&build("Dic 7")).len(), 11);
    }

    #[test]
    fn enumeration_agrees_with_census() {
        for text in ["C 36", "D 9", "Dic 5", "Q 32", "SD 32", "M(2,5)", "SL23", "Z3A4", "EA(2,4)", "C 7 x C 7"] {
            let g = build(text);
            assert_eq!(enumerate_cyclic_subgroups(&g).len() as u64, count_cyclic(&g), "{text}");
        }
    }
}
