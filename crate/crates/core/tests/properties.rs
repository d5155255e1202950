//! Property tests over randomly drawn groups and scenario rows.

use cyclic_census::arith::{divisor_count, euler_phi};
use cyclic_census::tables::all_scenarios;
use cyclic_census::{
    abelian_count, count_cyclic, cyclic_profile, enumerate_cyclic_subgroups, parse_spec,
    t_polynomial, GroupSpec,
};
use proptest::prelude::*;

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1u64..=200).prop_map(GroupSpec::Cyclic),
        (1u64..=60).prop_map(GroupSpec::Dihedral),
        (1u64..=30).prop_map(GroupSpec::Dicyclic),
        (3u32..=7).prop_map(GroupSpec::GeneralizedQuaternion),
        (3u32..=7).prop_map(GroupSpec::Semidihedral),
        prop_oneof![Just(2u64), Just(3), Just(5)]
            .prop_flat_map(|p| (Just(p), 3u32..=5))
            .prop_filter("cap", |(p, a)| p.pow(*a) <= 256)
            .prop_map(|(p, a)| GroupSpec::ModularPGroup { p, a }),
        (prop_oneof![Just(2u64), Just(3), Just(5)], 1u32..=4)
            .prop_filter("cap", |(p, k)| p.pow(*k) <= 128)
            .prop_map(|(p, k)| GroupSpec::ElementaryAbelian { p, k }),
        ((1u64..=12), (1u64..=12))
            .prop_map(|(a, b)| GroupSpec::DirectProduct(
                Box::new(GroupSpec::Cyclic(a)),
                Box::new(GroupSpec::Cyclic(b))
            )),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Σ_m c(m)·φ(m) = |G| for every built group.
    #[test]
    fn partition_identity(spec in small_spec()) {
        let g = spec.build(512).unwrap();
        let profile = cyclic_profile(&g);
        let weighted: u64 = profile.per_order.iter().map(|(m, c)| c * euler_phi(*m)).sum();
        prop_assert_eq!(weighted, g.order() as u64);
        prop_assert_eq!(profile.per_order[&1], 1);
    }

    /// Counting by element orders and by explicit enumeration agree.
    #[test]
    fn enumeration_agrees_with_count(spec in small_spec()) {
        let g = spec.build(512).unwrap();
        prop_assert_eq!(enumerate_cyclic_subgroups(&g).len() as u64, count_cyclic(&g));
    }

    /// d(|G|) <= c(G) <= |G|, the upper bound tight only for elementary
    /// abelian 2-groups.
    #[test]
    fn divisor_bound_and_upper_bound(spec in small_spec()) {
        let g = spec.build(512).unwrap();
        let c = count_cyclic(&g);
        prop_assert!(c >= divisor_count(g.order() as u64));
        prop_assert!(c <= g.order() as u64);
        let all_involutions = g.order_class_counts().keys().all(|&d| d <= 2);
        prop_assert_eq!(c == g.order() as u64, all_involutions);
    }

    /// The census formula matches brute force on abelian invariant lists.
    #[test]
    fn abelian_census_matches_brute_force(invs in proptest::collection::vec(1u64..=16, 1..=3)) {
        prop_assume!(invs.iter().product::<u64>() <= 256);
        let spec = invs.iter().skip(1).fold(GroupSpec::Cyclic(invs[0]), |acc, &n| {
            GroupSpec::DirectProduct(Box::new(acc), Box::new(GroupSpec::Cyclic(n)))
        });
        let g = spec.build(512).unwrap();
        prop_assert_eq!(abelian_count(&invs), count_cyclic(&g));
    }

    /// Census count is invariant under reordering of the invariant list.
    #[test]
    fn abelian_census_order_invariant(mut invs in proptest::collection::vec(1u64..=24, 2..=4)) {
        let a = abelian_count(&invs);
        invs.reverse();
        prop_assert_eq!(a, abelian_count(&invs));
    }

    /// DSL text of any spec parses back to the same spec.
    #[test]
    fn dsl_roundtrip(spec in small_spec()) {
        prop_assert_eq!(&parse_spec(&spec.to_dsl()).unwrap(), &spec);
    }
}

/// Symbolic/numeric agreement: T evaluated at concrete admissible primes
/// equals |G| − Σ c(m)·φ(m) computed with plain integers.
#[test]
fn t_polynomial_matches_numeric_evaluation() {
    let mut rng = 0x2545F4914F6CDD1Du64;
    let mut next = move || {
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        rng
    };
    let primes: Vec<u64> =
        (2u64..200).filter(|&n| cyclic_census::arith::is_prime(n)).collect();
    for sc in all_scenarios().unwrap() {
        for row in &sc.expected_rows {
            let pins = sc.pins_for(row.pin);
            let order = sc.order.pin(pins);
            let pinned: Vec<_> =
                sc.divisors.iter().zip(&row.counts).map(|(d, &c)| (d.pin(pins), c)).collect();
            let t = t_polynomial(&order, &pinned).unwrap();
            let excluded = sc.excluded_primes(pins);
            for _ in 0..20 {
                let mut assign = [0u64; 3];
                if let Some(v) = sc.variable_index() {
                    loop {
                        let p = primes[(next() % primes.len() as u64) as usize];
                        if !excluded.contains(&p) {
                            assign[v] = p;
                            break;
                        }
                    }
                }
                let numeric: i128 = order.eval(assign) as i128
                    - pinned
                        .iter()
                        .map(|(d, c)| *c as i128 * euler_phi(d.eval(assign)) as i128)
                        .sum::<i128>();
                assert_eq!(t.eval(assign), numeric, "{} row {:?} at {assign:?}", sc.id, row.counts);
            }
        }
    }
}
