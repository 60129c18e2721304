//! Coarse decision criteria and their efficiency.
//!
//! An agent without preferences can decide by criteria: asymmetric relations
//! that order a few categories of alternatives. This crate implements the
//! machinery around that idea:
//!
//! - [`relations`]: finite relations, category extraction, and order
//!   isomorphism of category structures;
//! - [`criteria`]: criteria sets, discrimination vectors and partitions, and
//!   the equivalence of maximal categorization, the order-isomorphism
//!   property, and product representations;
//! - [`choice`]: choice functions, choice classes, the "uses" relation,
//!   maximal discrimination, rationalizability, and Condorcet consistency;
//! - [`efficiency`]: category cost models, the more-efficient relation, the
//!   binary-criteria condition, coarseness dominance, and Pareto frontiers;
//! - [`storage`]: radix economy - the cost-optimal digit base for a storage
//!   range, with an encode/decode codec;
//! - [`aggregation`]: weighted-voting aggregation of binary criteria into
//!   rational choice, and majority-cycle detection for finer criteria.
//!
//! Everything is a pure function of immutable inputs, safe to call
//! concurrently. Cost arithmetic is exact rational.

pub mod aggregation;
pub mod choice;
pub mod criteria;
pub mod domain;
pub mod efficiency;
pub mod error;
pub mod relations;
pub mod sampling;
pub mod storage;

pub use aggregation::{
    aggregate_choice, aggregate_scores, find_condorcet_cycle, weighted_tournament, Tournament,
    WeightProfile,
};
pub use choice::{
    build_max_choice, maximally_discriminates, uses, ChoiceClassPartition, ChoiceFunction,
    ChoiceSets, SubsetMask, WeakOrder, MAX_CHOICE_DOMAIN,
};
pub use criteria::{
    CriteriaSet, Criterion, DiscriminationPartition, DiscriminationVector, ProductRepresentation,
    SelectorSemantics, TheoremReport,
};
pub use domain::{Domain, LabelId};
pub use efficiency::{
    binary_condition, coarseness_dominates, compare_efficiency, enumerate_vectors, frontier,
    more_efficient, set_cost, vector_cost, verify_coarser_more_efficient, BinaryConditionReport,
    CoarsenessVerdict, CostExpr, CostModel, Dominance, EfficiencyPoint, MarginalProfile,
    MarginalVariant, Verdict,
};
pub use error::{Error, Result};
pub use relations::{CategoryStructure, Relation};
pub use storage::{
    binary_always_optimal, decode, digit_count, encode, optimal_bases, storage_cost,
    BinaryOptimalityReport, OptimalBases, OptimalityWitness, StoragePlan,
};
