//! Cross-module properties of choice machinery and aggregation: the built
//! maximal choice always uses its criteria, rationalizable functions are
//! Condorcet consistent, and binary-criteria aggregation is rational.

use num::{BigInt, BigRational};
use proptest::prelude::*;

use criteria_core::aggregation::{
    aggregate_choice, find_condorcet_cycle, weighted_tournament, WeightProfile,
};
use criteria_core::choice::{
    build_max_choice, maximally_discriminates, uses, ChoiceFunction, WeakOrder,
};
use criteria_core::criteria::{Criterion, CriteriaSet};
use criteria_core::domain::Domain;
use criteria_core::relations::Relation;

fn indexed_domain(n: usize) -> Domain {
    Domain::new((0..n).map(|i| format!("x{i}"))).unwrap()
}

fn criteria_set(max_n: usize, max_criteria: usize) -> impl Strategy<Value = CriteriaSet> {
    (2usize..=max_n, 1usize..=max_criteria)
        .prop_flat_map(|(n, m)| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(proptest::collection::vec(0u8..3, pairs), m),
            )
        })
        .prop_map(|(n, relations)| {
            let domain = indexed_domain(n);
            let criteria = relations
                .into_iter()
                .map(|choices| {
                    let mut pairs = Vec::new();
                    let mut k = 0;
                    for x in 0..n {
                        for y in (x + 1)..n {
                            match choices[k] {
                                1 => pairs.push((x, y)),
                                2 => pairs.push((y, x)),
                                _ => {}
                            }
                            k += 1;
                        }
                    }
                    Criterion::new(Relation::from_id_pairs(domain.clone(), pairs).unwrap())
                        .unwrap()
                })
                .collect();
            CriteriaSet::new(criteria).unwrap()
        })
}

fn binary_criteria_set(max_n: usize, max_criteria: usize) -> impl Strategy<Value = CriteriaSet> {
    (2usize..=max_n, 1usize..=max_criteria)
        .prop_flat_map(|(n, m)| {
            (
                Just(n),
                proptest::collection::vec(1u32..(1 << n) - 1, m),
            )
        })
        .prop_map(|(n, tops)| {
            let domain = indexed_domain(n);
            let criteria = tops
                .into_iter()
                .map(|top| {
                    let mut pairs = Vec::new();
                    for x in 0..n {
                        for y in 0..n {
                            if top >> x & 1 == 1 && top >> y & 1 == 0 {
                                pairs.push((x, y));
                            }
                        }
                    }
                    Criterion::new(Relation::from_id_pairs(domain.clone(), pairs).unwrap())
                        .unwrap()
                })
                .collect();
            CriteriaSet::new(criteria).unwrap()
        })
}

proptest! {
    /// The constructed maximal choice always uses its criteria, its class
    /// count equals the cell count, and maximal discrimination holds exactly
    /// when the cell count reaches min(prod e_i, |X|).
    #[test]
    fn build_max_choice_properties(cs in criteria_set(7, 3)) {
        let c = build_max_choice(&cs).unwrap();
        prop_assert!(uses(&cs, &c).unwrap());
        let cells = cs.discrimination_partition().cell_count();
        prop_assert_eq!(c.class_count().unwrap(), cells);
        let bound = cs
            .discrimination_vector()
            .max_distinctions(cs.domain().len() as u64);
        prop_assert_eq!(
            maximally_discriminates(&cs, &c).unwrap(),
            cells as u64 == bound
        );
        // the cell order is a weak order on X, so the result is rational
        prop_assert!(c.rationalizable().unwrap().is_some());
        prop_assert!(c.condorcet_consistent().unwrap());
    }

    /// Whenever uses(cs, c) holds, c makes at most as many distinctions as
    /// the discrimination partition has cells.
    #[test]
    fn uses_bounds_class_count(cs in criteria_set(6, 2), levels in 1usize..4) {
        // weak-order maximizers over the cells always use the criteria
        let partition = cs.discrimination_partition();
        let ranks: Vec<u64> = cs
            .domain()
            .ids()
            .map(|id| (partition.cell_of(id).unwrap() % levels) as u64)
            .collect();
        let c = ChoiceFunction::from_ranks(cs.domain().clone(), ranks).unwrap();
        if uses(&cs, &c).unwrap() {
            prop_assert!(c.class_count().unwrap() <= partition.cell_count());
        }
    }

    /// Rationalizable choice functions are Condorcet consistent, and the
    /// weak order maximizer round-trips.
    #[test]
    fn rationalizable_implies_condorcet(ranks in proptest::collection::vec(0usize..4, 2..=7)) {
        let domain = indexed_domain(ranks.len());
        let order = WeakOrder::from_ranks(ranks);
        let c = order.maximizer(domain).unwrap();
        let recovered = c.rationalizable().unwrap().expect("maximizers are rational");
        prop_assert_eq!(recovered, order.clone());
        prop_assert!(c.condorcet_consistent().unwrap());
        // choice classes equal indifference classes
        let classes = c.choice_classes().unwrap();
        prop_assert!(classes.well_defined());
        let mut got = classes.classes().to_vec();
        got.sort();
        let mut want = order.indifference_classes();
        want.retain(|cl| !cl.is_empty());
        want.sort();
        prop_assert_eq!(got, want);
    }

    /// Aggregation of all-binary criteria under positive weights is
    /// rationalizable and Condorcet consistent, margins match pairwise
    /// choices, and the tournament is acyclic.
    #[test]
    fn binary_aggregation_is_rational(
        cs in binary_criteria_set(6, 4),
        raw_weights in proptest::collection::vec(1u64..20, 4),
    ) {
        let weights = WeightProfile::new(
            raw_weights[..cs.len()]
                .iter()
                .map(|&w| BigRational::from_integer(BigInt::from(w)))
                .collect(),
        )
        .unwrap();
        let c = aggregate_choice(&cs, &weights).unwrap();
        prop_assert!(c.rationalizable().unwrap().is_some());
        prop_assert!(c.condorcet_consistent().unwrap());

        let t = weighted_tournament(&cs, &weights).unwrap();
        prop_assert!(find_condorcet_cycle(&t).is_none());
        let n = cs.domain().len();
        use num::Signed;
        for x in 0..n {
            for y in (x + 1)..n {
                let chosen = c.choose((1 << x) | (1 << y)).unwrap();
                let m = t.margin(x, y);
                if m.is_positive() {
                    prop_assert_eq!(chosen, 1u32 << x);
                } else if m.is_negative() {
                    prop_assert_eq!(chosen, 1u32 << y);
                } else {
                    prop_assert_eq!(chosen, (1u32 << x) | (1u32 << y));
                }
            }
        }
    }
}

proptest! {
    /// Margins are antisymmetric on random inputs, including non-binary
    /// criteria.
    #[test]
    fn margins_are_antisymmetric(
        cs in criteria_set(6, 3),
        raw_weights in proptest::collection::vec(1u64..10, 3),
    ) {
        let weights = WeightProfile::new(
            raw_weights[..cs.len()]
                .iter()
                .map(|&w| BigRational::from_integer(BigInt::from(w)))
                .collect(),
        )
        .unwrap();
        let t = weighted_tournament(&cs, &weights).unwrap();
        let n = cs.domain().len();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(t.margin(x, y).clone(), -t.margin(y, x).clone());
            }
        }
    }
}
