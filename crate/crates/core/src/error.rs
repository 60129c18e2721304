//! Crate-wide error type.

use std::fmt;

/// Errors raised by construction and verification operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A domain needs at least one label.
    EmptyDomain,
    /// Domain labels must be unique.
    DuplicateLabel(String),
    /// Domain labels must be nonempty strings.
    EmptyLabel,
    /// A label was used that is not part of the domain.
    UnknownLabel(String),
    /// A label id was out of range for the domain.
    LabelOutOfRange(usize),
    /// The relation contains a pair together with its reverse, or a self-pair.
    NotAsymmetric { x: String, y: String },
    /// A criteria set needs at least one criterion.
    EmptyCriteria,
    /// Parts of the input were built over different domains.
    DomainMismatch,
    /// Criterion index out of range.
    CriterionOutOfRange(usize),
    /// A restriction selector must name at least one cell.
    EmptySelector,
    /// Selector cell index out of range.
    SelectorOutOfRange(usize),
    /// Exhaustive selector enumeration refused: too many parts.
    SelectorSpaceTooLarge { parts: usize, max: usize },
    /// The operation quantifies over every nonempty subset and needs the
    /// full-lattice choice domain.
    ExplicitChoiceDomain,
    /// Full-lattice choice functions are capped to keep subset sweeps feasible.
    DomainTooLarge { size: usize, max: usize },
    /// The interchangeability relation of the choice function is not an
    /// equivalence; the witness pair cannot be classified.
    IllDefinedChoiceClasses { x: String, y: String },
    /// A choice set without an assignment (or outside the declared sets).
    MissingAssignment(String),
    /// An assignment violating nonemptiness or containment.
    InvalidAssignment(String),
    /// The choice function distinguishes alternatives the criteria do not.
    UsesViolation,
    /// Category counts are positive integers.
    InvalidCategoryCount(u64),
    /// Cost table has no entry for the queried category count.
    MissingTableEntry(u64),
    /// Cost models map category counts to nonnegative values.
    NegativeCost(u64),
    /// Cost table must assign cost 0 to one-category criteria.
    NonzeroUnitCost,
    /// Division by zero while evaluating a cost expression.
    DivisionByZero,
    /// Cost expression could not be parsed.
    ExprParse(String),
    /// A discrimination vector needs at least one entry after stripping
    /// one-category entries.
    EmptyVector,
    /// A bound parameter was below its admissible minimum.
    BoundTooSmall { what: &'static str, min: u64, got: u64 },
    /// Enumeration budget exceeds the supported bound.
    BudgetOutOfRange { budget: u64, max: u64 },
    /// Storage bases start at 2.
    BadBase(u64),
    /// Value outside the declared storage range.
    ValueOutOfRange { value: u64, n: u64 },
    /// Digit outside 0..base.
    DigitOutOfRange { digit: u64, base: u64 },
    /// Digit vector length does not match the plan.
    WrongDigitCount { got: usize, expected: u32 },
    /// Weight profile length does not match the criteria count.
    WeightCountMismatch { weights: usize, criteria: usize },
    /// Weights must be strictly positive.
    NonPositiveWeight(usize),
    /// Aggregation needs binary criteria; this one has a different count.
    NonBinaryCriterion { index: usize, categories: usize },
    /// Aggregation needs the two categories of each criterion to be ordered.
    UnorderedBinaryCriterion { index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            EmptyDomain => write!(f, "domain must contain at least one label"),
            DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            EmptyLabel => write!(f, "labels must be nonempty"),
            UnknownLabel(l) => write!(f, "label {l:?} is not in the domain"),
            LabelOutOfRange(i) => write!(f, "label id {i} out of range"),
            NotAsymmetric { x, y } => {
                write!(f, "relation is not asymmetric at ({x:?}, {y:?})")
            }
            EmptyCriteria => write!(f, "criteria set must contain at least one criterion"),
            DomainMismatch => write!(f, "inputs are defined over different domains"),
            CriterionOutOfRange(i) => write!(f, "criterion index {i} out of range"),
            EmptySelector => write!(f, "selector must name at least one cell"),
            SelectorOutOfRange(i) => write!(f, "selector cell index {i} out of range"),
            SelectorSpaceTooLarge { parts, max } => write!(
                f,
                "exhaustive selector check over {parts} parts exceeds the supported {max}"
            ),
            ExplicitChoiceDomain => write!(
                f,
                "operation requires a choice function on all nonempty subsets"
            ),
            DomainTooLarge { size, max } => {
                write!(f, "domain size {size} exceeds the subset-sweep cap {max}")
            }
            IllDefinedChoiceClasses { x, y } => write!(
                f,
                "choice classes are ill-defined: interchangeability fails at ({x:?}, {y:?})"
            ),
            MissingAssignment(s) => write!(f, "no assignment for choice set {s}"),
            InvalidAssignment(s) => write!(f, "invalid assignment: {s}"),
            UsesViolation => write!(
                f,
                "choice function makes distinctions absent from the criteria"
            ),
            InvalidCategoryCount(e) => write!(f, "category count must be positive, got {e}"),
            MissingTableEntry(e) => write!(f, "cost table has no entry for {e} categories"),
            NegativeCost(e) => write!(f, "cost model is negative at {e} categories"),
            NonzeroUnitCost => write!(f, "one-category criteria are costless; table must map 1 to 0"),
            DivisionByZero => write!(f, "division by zero in cost expression"),
            ExprParse(msg) => write!(f, "cost expression parse error: {msg}"),
            EmptyVector => write!(f, "discrimination vector has no entries with two or more categories"),
            BoundTooSmall { what, min, got } => {
                write!(f, "{what} must be at least {min}, got {got}")
            }
            BudgetOutOfRange { budget, max } => {
                write!(f, "budget {budget} exceeds the enumeration bound {max}")
            }
            BadBase(k) => write!(f, "digit base must be at least 2, got {k}"),
            ValueOutOfRange { value, n } => {
                write!(f, "value {value} outside the storage range 1..={n}")
            }
            DigitOutOfRange { digit, base } => {
                write!(f, "digit {digit} outside 0..{base}")
            }
            WrongDigitCount { got, expected } => {
                write!(f, "expected {expected} digits, got {got}")
            }
            WeightCountMismatch { weights, criteria } => {
                write!(f, "{weights} weights supplied for {criteria} criteria")
            }
            NonPositiveWeight(i) => write!(f, "weight {i} is not strictly positive"),
            NonBinaryCriterion { index, categories } => write!(
                f,
                "criterion {index} has {categories} categories; aggregation needs exactly 2"
            ),
            UnorderedBinaryCriterion { index } => write!(
                f,
                "criterion {index} does not order its two categories"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
