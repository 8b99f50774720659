use proptest::prelude::*;

use roughalg::format::{parse_algebra, parse_partition, parse_svmap, render_algebra, render_partition, render_svmap};
use roughalg::gas::{is_strong_sv_morphism, is_sv_morphism, SetValuedMap};
use roughalg::{
    check_axiom, product_set, ApproximationSpace, AxiomId, FiniteAlgebra, Partition, Subset,
};

fn algebra() -> impl Strategy<Value = FiniteAlgebra> {
    (1usize..=5).prop_flat_map(|n| {
        (prop::collection::vec(0..n, n * n), 0..n)
            .prop_map(move |(cells, zero)| FiniteAlgebra::from_flat(n, cells, zero).unwrap())
    })
}

fn subset(n: usize) -> impl Strategy<Value = Subset> {
    (0u64..1 << n).prop_map(move |bits| Subset::from_bits(n, bits))
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|labels| Partition::from_labels(&labels).unwrap())
}

fn space_with_sets() -> impl Strategy<Value = (ApproximationSpace, Subset, Subset)> {
    (1usize..=6).prop_flat_map(|n| {
        (partition(n), subset(n), subset(n))
            .prop_map(|(p, a, b)| (ApproximationSpace::new(p), a, b))
    })
}

fn algebra_and_map() -> impl Strategy<Value = (FiniteAlgebra, SetValuedMap)> {
    algebra().prop_flat_map(|alg| {
        let n = alg.order();
        prop::collection::vec(subset(n), n)
            .prop_map(move |images| (alg.clone(), SetValuedMap::new(n, images).unwrap()))
    })
}

proptest! {
    #[test]
    fn duality((space, a, _b) in space_with_sets()) {
        prop_assert_eq!(space.upper(&!a), !space.lower(&a));
        prop_assert_eq!(space.lower(&!a), !space.upper(&a));
    }

    #[test]
    fn monotone_and_sandwiched((space, a, b) in space_with_sets()) {
        let (lo, up) = (space.lower(&a), space.upper(&a));
        prop_assert!(lo.is_subset(&a) && a.is_subset(&up));
        let inner = a & b;
        prop_assert!(space.lower(&inner).is_subset(&lo));
        prop_assert!(space.upper(&inner).is_subset(&up));
        prop_assert_eq!(space.boundary(&a), up - lo);
    }

    #[test]
    fn partition_map_reduces((space, a, _b) in space_with_sets()) {
        let f = SetValuedMap::from_partition(space.partition());
        prop_assert_eq!(f.lower(&a), space.lower(&a));
        prop_assert_eq!(f.upper(&a), space.upper(&a));
    }

    #[test]
    fn strong_morphism_is_morphism((alg, f) in algebra_and_map()) {
        let weak = is_sv_morphism(&f, &alg, &alg).unwrap().holds();
        let strong = is_strong_sv_morphism(&f, &alg, &alg).unwrap().holds();
        prop_assert!(!strong || weak);
    }

    #[test]
    fn axiom_reports_are_complete(alg in algebra()) {
        let n = alg.order();
        for axiom in AxiomId::ALL {
            let report = check_axiom(&alg, axiom);
            let tuples: Vec<Vec<usize>> = (0..n.pow(axiom.arity() as u32))
                .map(|mut code| {
                    let mut t = vec![0; axiom.arity()];
                    for slot in t.iter_mut().rev() {
                        *slot = code % n;
                        code /= n;
                    }
                    t
                })
                .filter(|t| !axiom.holds_at(&alg, t))
                .collect();
            prop_assert_eq!(report.holds, tuples.is_empty());
            prop_assert_eq!(report.violations, tuples.len());
            prop_assert_eq!(&report.witnesses, &tuples);
        }
    }

    #[test]
    fn product_is_monotone(alg in algebra(), bits in any::<(u64, u64, u64)>()) {
        let n = alg.order();
        let mask = (1u64 << n) - 1;
        let a = Subset::from_bits(n, bits.0 & mask);
        let b = Subset::from_bits(n, bits.1 & mask);
        let c = Subset::from_bits(n, bits.2 & mask);
        let small = product_set(&alg, &(a & c), &b);
        prop_assert!(small.is_subset(&product_set(&alg, &a, &b)));
    }

    #[test]
    fn algebra_round_trip(alg in algebra()) {
        prop_assert_eq!(parse_algebra(&render_algebra(&alg, Some("sample"))).unwrap(), alg);
    }

    #[test]
    fn partition_and_map_round_trip((alg, f) in algebra_and_map(), labels in prop::collection::vec(0usize..6, 1..=6)) {
        let p = Partition::from_labels(&labels).unwrap();
        prop_assert_eq!(parse_partition(&render_partition(&p), p.order()).unwrap(), p);
        let n = alg.order();
        prop_assert_eq!(parse_svmap(&render_svmap(&f), n, n).unwrap(), f);
    }
}
