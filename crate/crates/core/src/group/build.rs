//! Table realizations of the group families. Elements of product and
//! semidirect constructions are ordered lexicographically by component
//! indices, so index 0 is always the identity.

use crate::error::{Error, Result};
use crate::group::spec::{GroupSpec, NamedGroup};
use crate::group::FiniteGroup;

pub(super) fn build(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::DirectProduct(a, b) => {
            let (ga, gb) = (build(a)?, build(b)?);
            direct_product(&ga, &gb)
        }
        GroupSpec::SemidirectCyclic { base, top, multiplier } => {
            semidirect_cyclic(*base, *top, *multiplier)
        }
        GroupSpec::SemidirectKlein9 | GroupSpec::Named(NamedGroup::Z3A4) => klein_semidirect(9),
        GroupSpec::Dihedral(n) => {
            let g = semidirect_cyclic(*n, 2, (*n).saturating_sub(1) % (*n).max(1))?;
            relabel(g, format!("D({})", 2 * n))
        }
        GroupSpec::Dicyclic(n) => dicyclic(*n),
        GroupSpec::GeneralizedQuaternion(a) => {
            let g = dicyclic(1u64 << (a - 2))?;
            relabel(g, format!("Q({})", 1u64 << a))
        }
        GroupSpec::Semidihedral(a) => {
            let m = 1u64 << (a - 1);
            let g = semidirect_cyclic(m, 2, (1u64 << (a - 2)) - 1)?;
            relabel(g, format!("SD({})", 1u64 << a))
        }
        GroupSpec::ModularPGroup { p, a } => {
            // The family is pinned by its order statistics (those of
            // Z_p x Z_{p^(a-1)}); at (p, a) = (2, 3) the standard multiplier
            // 1 + p^(a-2) would give D8 instead, so that case is abelian.
            let m = p.pow(a - 1);
            let r = if *p == 2 && *a == 3 { 1 } else { 1 + p.pow(a - 2) };
            let g = semidirect_cyclic(m, *p, r)?;
            relabel(g, format!("M({p}^{a})"))
        }
        GroupSpec::ElementaryAbelian { p, k } => elementary_abelian(*p, *k),
        GroupSpec::Named(NamedGroup::A4) => klein_semidirect(3),
        GroupSpec::Named(NamedGroup::Sl23) => sl23(),
        GroupSpec::Named(NamedGroup::F5) => {
            let g = semidirect_cyclic(5, 4, 2)?;
            relabel(g, "F5".into())
        }
    }
}

fn relabel(mut g: FiniteGroup, label: String) -> Result<FiniteGroup> {
    g.label = label;
    Ok(g)
}

fn cyclic(n: u64) -> Result<FiniteGroup> {
    let n = n as usize;
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u16;
        }
    }
    FiniteGroup::from_table(table, n, format!("C{n}"))
}

fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0u16; n * n];
    for x1 in 0..na {
        for y1 in 0..nb {
            let i = x1 * nb + y1;
            for x2 in 0..na {
                for y2 in 0..nb {
                    let j = x2 * nb + y2;
                    table[i * n + j] = (a.mul_idx(x1, x2) * nb + b.mul_idx(y1, y2)) as u16;
                }
            }
        }
    }
    FiniteGroup::from_table(table, n, format!("{} x {}", a.label(), b.label()))
}

/// Z_m ⋊ Z_k with (i1, j1)(i2, j2) = (i1 + r^j1 · i2, j1 + j2).
fn semidirect_cyclic(m: u64, k: u64, r: u64) -> Result<FiniteGroup> {
    if m == 1 {
        return relabel(cyclic(k)?, format!("SD({m},{k},{r})"));
    }
    let (mu, ku) = (m as usize, k as usize);
    let n = mu * ku;
    // r^j mod m for j in 0..k
    let mut rpow = Vec::with_capacity(ku);
    let mut acc = 1u64;
    for _ in 0..ku {
        rpow.push(acc as usize);
        acc = acc * (r % m) % m;
    }
    let mut table = vec![0u16; n * n];
    for i1 in 0..mu {
        for j1 in 0..ku {
            let row = (i1 * ku + j1) * n;
            for i2 in 0..mu {
                for j2 in 0..ku {
                    let base = (i1 + rpow[j1] * i2) % mu;
                    let top = (j1 + j2) % ku;
                    table[row + i2 * ku + j2] = (base * ku + top) as u16;
                }
            }
        }
    }
    FiniteGroup::from_table(table, n, format!("SD({m},{k},{r})"))
}

/// Dicyclic group of order 4n: a of order 2n, b² = aⁿ, b a b⁻¹ = a⁻¹.
/// Element (i, e) = aⁱbᵉ at index 2i + e.
fn dicyclic(n: u64) -> Result<FiniteGroup> {
    let m = 2 * n as usize;
    let nn = 2 * m;
    let mut table = vec![0u16; nn * nn];
    for i1 in 0..m {
        for e1 in 0..2usize {
            let row = (i1 * 2 + e1) * nn;
            for i2 in 0..m {
                for e2 in 0..2usize {
                    let (i, e) = if e1 == 0 {
                        ((i1 + i2) % m, e2)
                    } else if e2 == 0 {
                        ((i1 + m - i2 % m) % m, 1)
                    } else {
                        ((i1 + m - i2 % m + n as usize) % m, 0)
                    };
                    table[row + i2 * 2 + e2] = (i * 2 + e) as u16;
                }
            }
        }
    }
    FiniteGroup::from_table(table, nn, format!("Dic{n}"))
}

fn elementary_abelian(p: u64, k: u32) -> Result<FiniteGroup> {
    let pu = p as usize;
    let n = pu.pow(k);
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            // componentwise addition of base-p digit vectors
            let (mut x, mut y, mut out, mut place) = (i, j, 0usize, 1usize);
            for _ in 0..k {
                out += (x % pu + y % pu) % pu * place;
                x /= pu;
                y /= pu;
                place *= pu;
            }
            table[i * n + j] = out as u16;
        }
    }
    FiniteGroup::from_table(table, n, format!("E({p}^{k})"))
}

/// Base ⋊ Z_k where the top generator acts by the index permutation `auto`,
/// which must be an automorphism of `base` with auto^k = id.
fn semidirect_by_automorphism(
    base: &FiniteGroup,
    k: usize,
    auto: &[u16],
    label: String,
) -> Result<FiniteGroup> {
    let nb = base.order();
    let check = || -> bool {
        if auto.len() != nb || auto[0] != 0 {
            return false;
        }
        for a in 0..nb {
            for b in 0..nb {
                if auto[base.mul_idx(a, b)] as usize
                    != base.mul_idx(auto[a] as usize, auto[b] as usize)
                {
                    return false;
                }
            }
        }
        let mut perm: Vec<u16> = (0..nb as u16).collect();
        for _ in 0..k {
            perm = perm.iter().map(|&x| auto[x as usize]).collect();
        }
        perm.iter().enumerate().all(|(i, &x)| i == x as usize)
    };
    if !check() {
        return Err(Error::MalformedSpec(format!("not an order-dividing automorphism for {label}")));
    }
    // powers of the automorphism
    let mut powers = Vec::with_capacity(k);
    let mut cur: Vec<u16> = (0..nb as u16).collect();
    for _ in 0..k {
        powers.push(cur.clone());
        cur = cur.iter().map(|&x| auto[x as usize]).collect();
    }
    let n = nb * k;
    let mut table = vec![0u16; n * n];
    for x1 in 0..nb {
        for t1 in 0..k {
            let row = (x1 * k + t1) * n;
            for x2 in 0..nb {
                for t2 in 0..k {
                    let x = base.mul_idx(x1, powers[t1][x2] as usize);
                    let t = (t1 + t2) % k;
                    table[row + x2 * k + t2] = (x * k + t) as u16;
                }
            }
        }
    }
    FiniteGroup::from_table(table, n, label)
}

/// (Z2 x Z2) ⋊ Z_k for k divisible by 3; the generator cycles the three
/// involutions b → c → bc.
fn klein_semidirect(k: usize) -> Result<FiniteGroup> {
    let v4 = elementary_abelian(2, 2)?;
    // involutions of E(2^2) are indices 1, 2, 3; cycle 1 → 2 → 3 → 1
    let auto = [0u16, 2, 3, 1];
    let label = if k == 3 { "A4".to_string() } else { format!("(2^2):{k}") };
    semidirect_by_automorphism(&v4, k, &auto, label)
}

/// SL(2,3) realized as Q8 ⋊ Z3, the Z3 generator cycling i → j → k.
fn sl23() -> Result<FiniteGroup> {
    let q8 = dicyclic(2)?;
    // Q8 indices: element a^i b^e at 2i + e; automorphism a → b, b → ab.
    let a_img = 1usize; // b
    let b_img = q8.mul_idx(2, 1); // ab
    let mut auto = vec![0u16; 8];
    for i in 0..4 {
        for e in 0..2 {
            let mut img = 0usize;
            for _ in 0..i {
                img = q8.mul_idx(img, a_img);
            }
            if e == 1 {
                img = q8.mul_idx(img, b_img);
            }
            auto[i * 2 + e] = img as u16;
        }
    }
    semidirect_by_automorphism(&q8, 3, &auto, "SL(2,3)".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::verify_group_axioms;

    #[test]
    fn family_orders_and_axioms() {
        for (spec, order) in [
            (GroupSpec::Dicyclic(2), 8),
            (GroupSpec::Dicyclic(7), 28),
            (GroupSpec::GeneralizedQuaternion(4), 16),
            (GroupSpec::Semidihedral(4), 16),
            (GroupSpec::ModularPGroup { p: 3, a: 3 }, 27),
            (GroupSpec::ModularPGroup { p: 2, a: 5 }, 32),
            (GroupSpec::ElementaryAbelian { p: 3, k: 3 }, 27),
            (GroupSpec::Named(NamedGroup::A4), 12),
            (GroupSpec::Named(NamedGroup::Sl23), 24),
            (GroupSpec::Named(NamedGroup::Z3A4), 36),
            (GroupSpec::Named(NamedGroup::F5), 20),
        ] {
            let g = spec.build(2048).unwrap();
            assert_eq!(g.order(), order, "{spec:?}");
            assert!(verify_group_axioms(&g).holds, "{spec:?}");
        }
    }

    #[test]
    fn q8_is_dic2() {
        let q8 = GroupSpec::GeneralizedQuaternion(3).build(64).unwrap();
        let counts = q8.order_class_counts();
        assert_eq!(counts[&1], 1);
        assert_eq!(counts[&2], 1);
        assert_eq!(counts[&4], 6);
    }

    #[test]
    fn direct_product_orders_are_lcms() {
        let a = GroupSpec::Cyclic(4).build(64).unwrap();
        let b = GroupSpec::Cyclic(6).build(64).unwrap();
        let g = direct_product(&a, &b).unwrap();
        for x in 0..4usize {
            for y in 0..6usize {
                let ord = g.element_order_idx(x * 6 + y) as u64;
                let (oa, ob) =
                    (a.element_order_idx(x) as u64, b.element_order_idx(y) as u64);
                assert_eq!(ord, oa * ob / crate::arith::gcd(oa, ob));
            }
        }
    }

    #[test]
    fn trivial_action_matches_direct_product() {
        let s = GroupSpec::SemidirectCyclic { base: 6, top: 4, multiplier: 1 }.build(64).unwrap();
        let d = GroupSpec::DirectProduct(
            Box::new(GroupSpec::Cyclic(6)),
            Box::new(GroupSpec::Cyclic(4)),
        )
        .build(64)
        .unwrap();
        assert_eq!(s.order_class_counts(), d.order_class_counts());
    }

    #[test]
    fn modular_group_matches_rank_two_abelian_order_classes() {
        for (p, a) in [(2u64, 3u32), (2, 4), (2, 5), (3, 3), (3, 4), (5, 3)] {
            let m = GroupSpec::ModularPGroup { p, a }.build(2048).unwrap();
            let ab = GroupSpec::DirectProduct(
                Box::new(GroupSpec::Cyclic(p)),
                Box::new(GroupSpec::Cyclic(p.pow(a - 1))),
            )
            .build(2048)
            .unwrap();
            assert_eq!(m.order_class_counts(), ab.order_class_counts(), "M({p}^{a})");
        }
    }

    #[test]
    fn dihedral_one_is_z2() {
        let g = GroupSpec::Dihedral(1).build(64).unwrap();
        assert_eq!(g.order(), 2);
    }
}
