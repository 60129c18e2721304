//! Seeded random generators for relations, criteria sets, weight profiles,
//! and cost tables. Used by the verification suites; all functions are
//! deterministic given the generator state.

use num::{BigInt, BigRational};
use rand::Rng;

use crate::aggregation::WeightProfile;
use crate::choice::WeakOrder;
use crate::criteria::{Criterion, CriteriaSet, DiscriminationVector};
use crate::domain::Domain;
use crate::efficiency::CostModel;
use crate::relations::Relation;

/// A domain with labels `x0..x{n-1}`.
pub fn indexed_domain(n: usize) -> Domain {
    Domain::new((0..n).map(|i| format!("x{i}"))).expect("indexed labels are distinct")
}

/// Random asymmetric relation: each unordered pair is oriented one way, the
/// other, or left unrelated, with the given edge probability split evenly
/// between the two orientations.
pub fn random_relation<R: Rng>(domain: &Domain, edge_prob: f64, rng: &mut R) -> Relation {
    let n = domain.len();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            if rng.gen_bool(edge_prob) {
                if rng.gen_bool(0.5) {
                    pairs.push((x, y));
                } else {
                    pairs.push((y, x));
                }
            }
        }
    }
    Relation::from_id_pairs(domain.clone(), pairs).expect("generated ids are in range")
}

/// Random criteria set of `n_criteria` relations on one domain.
pub fn random_criteria_set<R: Rng>(
    domain: &Domain,
    n_criteria: usize,
    rng: &mut R,
) -> CriteriaSet {
    let criteria = (0..n_criteria)
        .map(|_| {
            let p = rng.gen_range(0.1..0.9);
            Criterion::new(random_relation(domain, p, rng))
                .expect("asymmetric by construction")
        })
        .collect();
    CriteriaSet::new(criteria).expect("shared domain, nonempty")
}

/// Random binary criterion: a nonempty proper subset on top of its
/// complement. The derived structure always has exactly two ordered cells.
pub fn random_binary_criterion<R: Rng>(domain: &Domain, rng: &mut R) -> Criterion {
    let n = domain.len();
    assert!(n >= 2, "binary criteria need at least two labels");
    let top: Vec<usize> = loop {
        let picked: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !picked.is_empty() && picked.len() < n {
            break picked;
        }
    };
    let mut pairs = Vec::new();
    for &x in &top {
        for y in 0..n {
            if !top.contains(&y) {
                pairs.push((x, y));
            }
        }
    }
    Criterion::new(Relation::from_id_pairs(domain.clone(), pairs).expect("ids in range"))
        .expect("asymmetric by construction")
}

/// Random all-binary criteria set.
pub fn random_binary_criteria_set<R: Rng>(
    domain: &Domain,
    n_criteria: usize,
    rng: &mut R,
) -> CriteriaSet {
    let criteria = (0..n_criteria)
        .map(|_| random_binary_criterion(domain, rng))
        .collect();
    CriteriaSet::new(criteria).expect("shared domain, nonempty")
}

/// Random strictly positive integer weights.
pub fn random_weights<R: Rng>(n: usize, max: u64, rng: &mut R) -> WeightProfile {
    WeightProfile::new(
        (0..n)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(1..=max))))
            .collect(),
    )
    .expect("weights are positive")
}

/// Random weak order over `n` labels with at most `levels` indifference
/// levels.
pub fn random_weak_order<R: Rng>(n: usize, levels: usize, rng: &mut R) -> WeakOrder {
    WeakOrder::from_ranks((0..n).map(|_| rng.gen_range(0..levels.max(1))).collect())
}

/// Random discrimination vector with costly-category budget exactly `budget`.
pub fn random_vector_with_budget<R: Rng>(budget: u64, rng: &mut R) -> DiscriminationVector {
    let mut entries = Vec::new();
    let mut left = budget;
    while left > 0 {
        let part = rng.gen_range(1..=left);
        entries.push(part + 1);
        left -= part;
    }
    entries.sort_unstable();
    DiscriminationVector::new(entries).expect("budget >= 1 yields entries")
}

/// Random nondecreasing integer cost table over `1..=e_max` with zero unit
/// cost and increments drawn from `0..=max_step`.
pub fn random_nondecreasing_table<R: Rng>(e_max: u64, max_step: u64, rng: &mut R) -> CostModel {
    let mut entries = vec![(1u64, BigRational::from_integer(BigInt::from(0)))];
    let mut cost = 0u64;
    for e in 2..=e_max {
        cost += rng.gen_range(0..=max_step);
        entries.push((e, BigRational::from_integer(BigInt::from(cost))));
    }
    CostModel::table(entries).expect("table is valid")
}

/// Random integer cost table with strictly increasing marginal costs
/// (including the first increment `k(2) - k(1)`).
pub fn random_strictly_convex_table<R: Rng>(e_max: u64, rng: &mut R) -> CostModel {
    let mut entries = vec![(1u64, BigRational::from_integer(BigInt::from(0)))];
    let mut increment = rng.gen_range(1..=5u64);
    let mut cost = 0u64;
    for e in 2..=e_max {
        cost += increment;
        entries.push((e, BigRational::from_integer(BigInt::from(cost))));
        increment += rng.gen_range(1..=4u64);
    }
    CostModel::table(entries).expect("table is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let d = indexed_domain(6);
        for _ in 0..50 {
            let r = random_relation(&d, 0.5, &mut rng);
            assert!(r.is_asymmetric());
            let cs = random_binary_criteria_set(&d, 3, &mut rng);
            assert!(cs
                .criteria()
                .iter()
                .all(|c| c.category_count() == 2));
            let v = random_vector_with_budget(9, &mut rng);
            assert_eq!(v.costly_categories(), 9);
            let t = random_strictly_convex_table(10, &mut rng);
            assert!(t.marginal_profile(10).unwrap().strictly_increasing);
            let t = random_nondecreasing_table(10, 3, &mut rng);
            assert!(t.is_nondecreasing(10).unwrap());
        }
    }
}
