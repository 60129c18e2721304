//! Sets of criteria over a shared domain: discrimination vectors and
//! partitions, restricted category orders, and the equivalence between
//! maximal categorization, the order-isomorphism property, and product
//! representations.

use std::collections::BTreeSet;
use std::fmt;

use crate::domain::{Domain, LabelId};
use crate::error::{Error, Result};
use crate::relations::{CategoryStructure, Relation};

/// A criterion: an asymmetric relation with its derived category structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    name: Option<String>,
    relation: Relation,
    structure: CategoryStructure,
    cell_of: Vec<usize>,
}

impl Criterion {
    pub fn new(relation: Relation) -> Result<Self> {
        let structure = relation.categories()?;
        let cell_of = relation
            .domain()
            .ids()
            .map(|id| structure.cell_of(id).expect("categories cover the domain"))
            .collect();
        Ok(Criterion {
            name: None,
            relation,
            structure,
            cell_of,
        })
    }

    pub fn named(name: impl Into<String>, relation: Relation) -> Result<Self> {
        let mut c = Criterion::new(relation)?;
        c.name = Some(name.into());
        Ok(c)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn structure(&self) -> &CategoryStructure {
        &self.structure
    }

    /// Number of categories, `e(C)`.
    pub fn category_count(&self) -> usize {
        self.structure.cell_count()
    }

    /// Category index of a label (precomputed, full-domain).
    pub fn category_of(&self, id: LabelId) -> usize {
        self.cell_of[id]
    }
}

/// Which reading of a restriction selector to use when enumerating all
/// selectors exhaustively.
///
/// `MeetCells` draws selectors from the meet partition of the other criteria
/// and is the canonical reading: it is the one under which the maximal
/// categorization equivalence holds. `CategoryUnions` reads selectors as
/// unions of raw categories of the other criteria; it is kept for study
/// because it admits sets that pass the isomorphism check while failing
/// maximal categorization.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SelectorSemantics {
    MeetCells,
    CategoryUnions,
}

/// Cap on the number of selector parts in exhaustive mode (2^parts subsets).
pub const MAX_SELECTOR_PARTS: usize = 16;

/// An ordered list of criteria sharing one domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriteriaSet {
    domain: Domain,
    criteria: Vec<Criterion>,
}

impl CriteriaSet {
    pub fn new(criteria: Vec<Criterion>) -> Result<Self> {
        let first = criteria.first().ok_or(Error::EmptyCriteria)?;
        let domain = first.relation().domain().clone();
        if criteria.iter().any(|c| c.relation().domain() != &domain) {
            return Err(Error::DomainMismatch);
        }
        Ok(CriteriaSet { domain, criteria })
    }

    /// A criteria set based on a product of attributes.
    ///
    /// The domain is the full product of `sizes` attribute ranges, labeled by
    /// dot-joined indices ("0.1.0"). Criterion `i` orders alternatives by
    /// attribute `i` alone, lower index superior. Such a set always
    /// maximally categorizes.
    pub fn product(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptyCriteria);
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidCategoryCount(0));
        }
        let tuples = product_tuples(sizes);
        let domain = Domain::new(tuples.iter().map(|t| join_indices(t)))?;
        let criteria = (0..sizes.len())
            .map(|i| {
                let mut pairs = Vec::new();
                for (x, tx) in tuples.iter().enumerate() {
                    for (y, ty) in tuples.iter().enumerate() {
                        if tx[i] < ty[i] {
                            pairs.push((x, y));
                        }
                    }
                }
                Criterion::new(Relation::from_id_pairs(domain.clone(), pairs)?)
            })
            .collect::<Result<Vec<_>>>()?;
        CriteriaSet::new(criteria)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    pub fn len(&self) -> usize {
        self.criteria.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one criterion
    }

    /// The tuple of category counts `(e(C_1), ..., e(C_N))`.
    pub fn discrimination_vector(&self) -> DiscriminationVector {
        DiscriminationVector::new(
            self.criteria
                .iter()
                .map(|c| c.category_count() as u64)
                .collect::<Vec<_>>(),
        )
        .expect("category counts are positive")
    }

    /// Meet of all criteria's category partitions, with per-cell signatures.
    pub fn discrimination_partition(&self) -> DiscriminationPartition {
        self.meet_of(&(0..self.len()).collect::<Vec<_>>())
    }

    /// Meet of the category partitions of every criterion except `i`.
    ///
    /// With a single criterion this is the one-cell partition of the whole
    /// domain (the meet over no criteria).
    pub fn meet_excluding(&self, i: usize) -> Result<DiscriminationPartition> {
        if i >= self.len() {
            return Err(Error::CriterionOutOfRange(i));
        }
        let others: Vec<usize> = (0..self.len()).filter(|&k| k != i).collect();
        Ok(self.meet_of(&others))
    }

    fn meet_of(&self, indices: &[usize]) -> DiscriminationPartition {
        let mut cells: Vec<Vec<LabelId>> = Vec::new();
        let mut signatures: Vec<Vec<usize>> = Vec::new();
        for id in self.domain.ids() {
            let sig: Vec<usize> = indices.iter().map(|&k| self.criteria[k].category_of(id)).collect();
            match signatures.iter().position(|s| *s == sig) {
                Some(c) => cells[c].push(id),
                None => {
                    signatures.push(sig);
                    cells.push(vec![id]);
                }
            }
        }
        DiscriminationPartition { cells, signatures }
    }

    /// True iff the discrimination partition has `prod e(C_i)` cells.
    pub fn maximally_categorizes(&self) -> bool {
        let cells = self.discrimination_partition().cell_count() as u128;
        cells == self.discrimination_vector().product()
    }

    /// Restrict criterion `i` to the union of the given cells of the meet
    /// partition of the other criteria.
    ///
    /// Categories of the result are the nonempty intersections of the
    /// `C_i`-categories with the selected union, ordered by the lifted
    /// `C_i` order; empty intersections are dropped.
    pub fn restricted_order(&self, i: usize, selector: &[usize]) -> Result<CategoryStructure> {
        let co = self.meet_excluding(i)?;
        if selector.is_empty() {
            return Err(Error::EmptySelector);
        }
        let mut members = BTreeSet::new();
        for &s in selector {
            let cell = co.cells().get(s).ok_or(Error::SelectorOutOfRange(s))?;
            members.extend(cell.iter().copied());
        }
        Ok(self.restrict_to(i, &members))
    }

    /// Restrict criterion `i` to a union of raw categories of other criteria,
    /// given as `(criterion index, category index)` picks. This is the
    /// literal union-of-categories selector reading; see
    /// [`SelectorSemantics`].
    pub fn restricted_order_for_categories(
        &self,
        i: usize,
        picks: &[(usize, usize)],
    ) -> Result<CategoryStructure> {
        if i >= self.len() {
            return Err(Error::CriterionOutOfRange(i));
        }
        if picks.is_empty() {
            return Err(Error::EmptySelector);
        }
        let mut members = BTreeSet::new();
        for &(k, j) in picks {
            if k == i || k >= self.len() {
                return Err(Error::CriterionOutOfRange(k));
            }
            let cell = self.criteria[k]
                .structure()
                .cells()
                .get(j)
                .ok_or(Error::SelectorOutOfRange(j))?;
            members.extend(cell.iter().copied());
        }
        Ok(self.restrict_to(i, &members))
    }

    fn restrict_to(&self, i: usize, members: &BTreeSet<LabelId>) -> CategoryStructure {
        let st = self.criteria[i].structure();
        let mut surviving: Vec<usize> = Vec::new();
        let mut cells: Vec<Vec<LabelId>> = Vec::new();
        for (j, cat) in st.cells().iter().enumerate() {
            let cell: Vec<LabelId> = cat.iter().copied().filter(|id| members.contains(id)).collect();
            if !cell.is_empty() {
                surviving.push(j);
                cells.push(cell);
            }
        }
        let mut order = BTreeSet::new();
        for (a, &ja) in surviving.iter().enumerate() {
            for (b, &jb) in surviving.iter().enumerate() {
                if st.dominates(ja, jb) {
                    order.insert((a, b));
                }
            }
        }
        CategoryStructure::from_parts(cells, order)
    }

    /// Does every restriction of every criterion have the same order shape
    /// as the criterion itself?
    ///
    /// Checked via the minimal-cell test: each cell of the meet partition of
    /// the other criteria must intersect every category of criterion `i`.
    /// Unions of cells only enlarge intersections, so this is equivalent to
    /// quantifying over all selectors while staying polynomial.
    pub fn order_isomorphism_property(&self) -> bool {
        for i in 0..self.len() {
            let co = self.meet_excluding(i).expect("index in range");
            let st = self.criteria[i].structure();
            for cell in co.cells() {
                for cat in st.cells() {
                    if !intersects(cell, cat) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exhaustive form of the order-isomorphism property: every nonempty
    /// selector produces a restriction order-isomorphic to the criterion's
    /// own category structure. Exponential in the number of selector parts;
    /// intended for small instances and cross-checking.
    pub fn order_isomorphism_property_exhaustive(
        &self,
        semantics: SelectorSemantics,
    ) -> Result<bool> {
        for i in 0..self.len() {
            let full = self.restrict_to(i, &self.domain.ids().collect());
            let parts: Vec<Vec<LabelId>> = match semantics {
                SelectorSemantics::MeetCells => self.meet_excluding(i)?.cells().to_vec(),
                SelectorSemantics::CategoryUnions => (0..self.len())
                    .filter(|&k| k != i)
                    .flat_map(|k| self.criteria[k].structure().cells().iter().cloned())
                    .collect(),
            };
            if parts.is_empty() {
                continue; // no other criteria: vacuously true
            }
            if parts.len() > MAX_SELECTOR_PARTS {
                return Err(Error::SelectorSpaceTooLarge {
                    parts: parts.len(),
                    max: MAX_SELECTOR_PARTS,
                });
            }
            for mask in 1u32..(1u32 << parts.len()) {
                let mut members = BTreeSet::new();
                for (p, part) in parts.iter().enumerate() {
                    if mask & (1 << p) != 0 {
                        members.extend(part.iter().copied());
                    }
                }
                let restricted = self.restrict_to(i, &members);
                if !restricted.order_isomorphic(&full) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Constructive product representation, present exactly when the set
    /// maximally categorizes.
    ///
    /// Attribute `i` is the category-index set of `C_i` partitioned into
    /// singletons; the mirrored criteria live on the full index product with
    /// slab categories, and each label maps to its signature.
    pub fn product_representation(&self) -> Option<ProductRepresentation> {
        if !self.maximally_categorizes() {
            return None;
        }
        let sizes: Vec<usize> = self.criteria.iter().map(|c| c.category_count()).collect();
        let tuples = product_tuples(&sizes);
        let domain = Domain::new(tuples.iter().map(|t| join_indices(t)))
            .expect("index tuples are distinct and nonempty");
        let mirrored = CriteriaSet::new(
            (0..sizes.len())
                .map(|i| {
                    let st = self.criteria[i].structure();
                    let mut pairs = Vec::new();
                    for (x, tx) in tuples.iter().enumerate() {
                        for (y, ty) in tuples.iter().enumerate() {
                            if tx[i] != ty[i] && st.dominates(tx[i], ty[i]) {
                                pairs.push((x, y));
                            }
                        }
                    }
                    let rel = Relation::from_id_pairs(domain.clone(), pairs)
                        .expect("ids generated in range");
                    match self.criteria[i].name() {
                        Some(n) => Criterion::named(n, rel),
                        None => Criterion::new(rel),
                    }
                    .expect("mirrored relation is asymmetric")
                })
                .collect::<Vec<_>>(),
        )
        .expect("mirrored criteria share one domain");
        debug_assert!(mirrored
            .criteria
            .iter()
            .enumerate()
            .all(|(i, c)| c.category_count() == sizes[i]
                && tuples
                    .iter()
                    .enumerate()
                    .all(|(y, t)| c.category_of(y) == t[i])));
        let relabeling: Vec<Vec<usize>> = self
            .domain
            .ids()
            .map(|id| {
                self.criteria
                    .iter()
                    .map(|c| c.category_of(id))
                    .collect::<Vec<_>>()
            })
            .collect();
        let bijections = sizes.iter().map(|&e| (0..e).collect()).collect();
        Some(ProductRepresentation {
            attribute_sizes: sizes,
            mirrored,
            bijections,
            relabeling,
        })
    }

    /// Evaluate the three equivalent statements and report them together.
    pub fn theorem_check(&self) -> TheoremReport {
        TheoremReport {
            maximal_categorization: self.maximally_categorizes(),
            order_isomorphism: self.order_isomorphism_property(),
            product_representation: self.product_representation().is_some(),
        }
    }
}

fn intersects(a: &[LabelId], b: &[LabelId]) -> bool {
    // both sorted ascending
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn product_tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut tuples = vec![Vec::new()];
    for &s in sizes {
        let mut next = Vec::with_capacity(tuples.len() * s);
        for t in &tuples {
            for v in 0..s {
                let mut t = t.clone();
                t.push(v);
                next.push(t);
            }
        }
        tuples = next;
    }
    tuples
}

fn join_indices(t: &[usize]) -> String {
    t.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

/// The tuple of category counts of a criteria set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscriminationVector(Vec<u64>);

impl DiscriminationVector {
    pub fn new(entries: impl Into<Vec<u64>>) -> Result<Self> {
        let entries = entries.into();
        if entries.is_empty() {
            return Err(Error::EmptyCriteria);
        }
        if let Some(&e) = entries.iter().find(|&&e| e == 0) {
            return Err(Error::InvalidCategoryCount(e));
        }
        Ok(DiscriminationVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one entry
    }

    /// `prod e_i` (saturating at u128::MAX, far beyond any enumerable size).
    pub fn product(&self) -> u128 {
        self.0
            .iter()
            .fold(1u128, |acc, &e| acc.saturating_mul(e as u128))
    }

    /// `sum (e_i - 1)`: the number of costly categories.
    pub fn costly_categories(&self) -> u64 {
        self.0.iter().map(|&e| e - 1).sum()
    }

    /// `min(prod e_i, domain size)`: an upper bound on choice classes.
    pub fn max_distinctions(&self, domain_size: u64) -> u64 {
        self.product().min(domain_size as u128) as u64
    }

    /// Entries with at least two categories, ascending.
    pub fn costly_entries(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.0.iter().copied().filter(|&e| e >= 2).collect();
        v.sort_unstable();
        v
    }

    pub fn is_all_binary(&self) -> bool {
        self.0.iter().all(|&e| e == 2)
    }
}

impl fmt::Display for DiscriminationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// The meet of the criteria's category partitions.
///
/// Cells are indexed by first appearance over the domain's label order; each
/// cell carries the vector of category indices its members share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminationPartition {
    cells: Vec<Vec<LabelId>>,
    signatures: Vec<Vec<usize>>,
}

impl DiscriminationPartition {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<LabelId>] {
        &self.cells
    }

    pub fn signature(&self, cell: usize) -> &[usize] {
        &self.signatures[cell]
    }

    pub fn signatures(&self) -> &[Vec<usize>] {
        &self.signatures
    }

    pub fn cell_of(&self, id: LabelId) -> Option<usize> {
        self.cells.iter().position(|c| c.contains(&id))
    }
}

/// Product representation of a maximally categorizing criteria set.
#[derive(Clone, Debug)]
pub struct ProductRepresentation {
    attribute_sizes: Vec<usize>,
    mirrored: CriteriaSet,
    bijections: Vec<Vec<usize>>,
    relabeling: Vec<Vec<usize>>,
}

impl ProductRepresentation {
    /// Sizes of the attribute sets `Y_i` (each partitioned into singletons).
    pub fn attribute_sizes(&self) -> &[usize] {
        &self.attribute_sizes
    }

    /// The mirrored criteria on the attribute-index product.
    pub fn mirrored(&self) -> &CriteriaSet {
        &self.mirrored
    }

    /// Per criterion, the order-preserving bijection from original to
    /// mirrored category indices.
    pub fn bijections(&self) -> &[Vec<usize>] {
        &self.bijections
    }

    /// Per original label id, the attribute-index vector it maps to.
    pub fn relabeling(&self) -> &[Vec<usize>] {
        &self.relabeling
    }

    /// Mirrored-domain label a given original label maps to.
    pub fn relabel(&self, id: LabelId) -> String {
        join_indices(&self.relabeling[id])
    }

    /// Check the representation against the original set: the bijections
    /// preserve category order in both directions, every attribute-index
    /// combination is realized by some label, and the mirrored criteria have
    /// slab categories.
    pub fn verify(&self, original: &CriteriaSet) -> bool {
        if original.len() != self.mirrored.len() {
            return false;
        }
        for (i, (orig, mir)) in original
            .criteria()
            .iter()
            .zip(self.mirrored.criteria())
            .enumerate()
        {
            let f = &self.bijections[i];
            if orig.category_count() != mir.category_count()
                || f.len() != orig.category_count()
            {
                return false;
            }
            let e = orig.category_count();
            for a in 0..e {
                for b in 0..e {
                    if orig.structure().dominates(a, b)
                        != mir.structure().dominates(f[a], f[b])
                    {
                        return false;
                    }
                }
            }
        }
        let realized: BTreeSet<&Vec<usize>> = self.relabeling.iter().collect();
        let expected: usize = self.attribute_sizes.iter().product();
        realized.len() == expected
            && original
                .domain()
                .ids()
                .all(|id| {
                    self.relabeling[id]
                        .iter()
                        .enumerate()
                        .all(|(i, &j)| original.criteria()[i].category_of(id) == j)
                })
    }
}

/// The three equivalent statements, evaluated independently.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub maximal_categorization: bool,
    pub order_isomorphism: bool,
    pub product_representation: bool,
}

impl TheoremReport {
    /// True iff all three statements agree, as the equivalence demands.
    pub fn consistent(&self) -> bool {
        self.maximal_categorization == self.order_isomorphism
            && self.order_isomorphism == self.product_representation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coordinate_set(labels: &[&str]) -> CriteriaSet {
        // Each label is a bit string; criterion i orders by bit i, 1 on top.
        let domain = Domain::new(labels.iter().copied()).unwrap();
        let width = labels[0].len();
        let bits: Vec<Vec<u8>> = labels
            .iter()
            .map(|l| l.bytes().map(|b| b - b'0').collect())
            .collect();
        let criteria = (0..width)
            .map(|i| {
                let mut pairs = Vec::new();
                for x in 0..labels.len() {
                    for y in 0..labels.len() {
                        if bits[x][i] > bits[y][i] {
                            pairs.push((x, y));
                        }
                    }
                }
                Criterion::new(Relation::from_id_pairs(domain.clone(), pairs).unwrap()).unwrap()
            })
            .collect();
        CriteriaSet::new(criteria).unwrap()
    }

    fn bit_cube() -> CriteriaSet {
        coordinate_set(&["000", "001", "010", "011", "100", "101", "110", "111"])
    }

    fn four_point() -> CriteriaSet {
        coordinate_set(&["001", "010", "100", "111"])
    }

    #[test]
    fn discrimination_vector_examples() {
        let d = Domain::new(["a", "b"]).unwrap();
        let single = CriteriaSet::new(vec![Criterion::new(Relation::empty(d)).unwrap()]).unwrap();
        assert_eq!(single.discrimination_vector().entries(), &[1]);

        assert_eq!(bit_cube().discrimination_vector().entries(), &[2, 2, 2]);

        let cars = CriteriaSet::product(&[3, 2, 2]).unwrap();
        assert_eq!(cars.discrimination_vector().entries(), &[3, 2, 2]);
    }

    #[test]
    fn discrimination_partition_meets() {
        let two = coordinate_set(&["00", "01", "10", "11"]);
        let p = two.discrimination_partition();
        assert_eq!(p.cell_count(), 4);
        assert!(p.cells().iter().all(|c| c.len() == 1));

        let fp = four_point();
        let p = fp.discrimination_partition();
        assert_eq!(p.cell_count(), 4);
        // Category indices follow first appearance over the label order, so
        // the first label's meet signature is all zeros.
        assert_eq!(p.signature(0), &[0, 0, 0]);
        assert!(p.cells().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn maximal_categorization_examples() {
        assert!(bit_cube().maximally_categorizes());
        assert!(!four_point().maximally_categorizes()); // 4 < 8

        let d = Domain::new(["a", "b", "c"]).unwrap();
        let single = CriteriaSet::new(vec![
            Criterion::new(Relation::from_pairs(d, [("a", "b")]).unwrap()).unwrap(),
        ])
        .unwrap();
        assert!(single.maximally_categorizes());
    }

    #[test]
    fn product_constructor_maximally_categorizes() {
        for sizes in [&[2, 2][..], &[3, 2, 2][..], &[2, 3][..], &[4][..]] {
            let cs = CriteriaSet::product(sizes).unwrap();
            assert!(cs.maximally_categorizes(), "sizes {sizes:?}");
            assert_eq!(
                cs.discrimination_vector().entries(),
                sizes.iter().map(|&s| s as u64).collect::<Vec<_>>().as_slice()
            );
        }
    }

    #[test]
    fn restricted_order_examples() {
        let cube = bit_cube();
        // Any single meet cell of the others restricts criterion 0 to a
        // structure isomorphic to its own.
        let own = cube.criteria()[0].structure().clone();
        let co = cube.meet_excluding(0).unwrap();
        for s in 0..co.cell_count() {
            let r = cube.restricted_order(0, &[s]).unwrap();
            assert!(r.order_isomorphic(&own));
        }
        // All cells: the criterion's own structure up to index renaming.
        let all: Vec<usize> = (0..co.cell_count()).collect();
        let r = cube.restricted_order(0, &all).unwrap();
        assert_eq!(r.cell_count(), own.cell_count());
        assert_eq!(r.order(), own.order());

        // Four-point domain: the meet cell of the other criteria containing
        // only "100" restricts criterion 0 to a single category.
        let fp = four_point();
        let co = fp.meet_excluding(0).unwrap();
        let id100 = fp.domain().id_of("100").unwrap();
        let cell = co.cell_of(id100).unwrap();
        assert_eq!(co.cells()[cell], vec![id100]);
        let r = fp.restricted_order(0, &[cell]).unwrap();
        assert_eq!(r.cell_count(), 1);
        assert!(!r.order_isomorphic(fp.criteria()[0].structure()));
    }

    #[test]
    fn restricted_order_rejects_empty_selector() {
        assert_eq!(
            bit_cube().restricted_order(0, &[]).unwrap_err(),
            Error::EmptySelector
        );
    }

    #[test]
    fn order_isomorphism_property_examples() {
        assert!(bit_cube().order_isomorphism_property());
        assert!(!four_point().order_isomorphism_property());

        let d = Domain::new(["a", "b", "c"]).unwrap();
        let single = CriteriaSet::new(vec![
            Criterion::new(Relation::from_pairs(d, [("a", "b")]).unwrap()).unwrap(),
        ])
        .unwrap();
        assert!(single.order_isomorphism_property());
    }

    #[test]
    fn exhaustive_selector_check_agrees_on_small_sets() {
        for cs in [bit_cube(), four_point(), CriteriaSet::product(&[3, 2]).unwrap()] {
            let fast = cs.order_isomorphism_property();
            let exhaustive = cs
                .order_isomorphism_property_exhaustive(SelectorSemantics::MeetCells)
                .unwrap();
            assert_eq!(fast, exhaustive);
        }
    }

    #[test]
    fn raw_category_union_reading_misses_nonproduct_sets() {
        // Seven points of the bit cube: every pairwise slab intersection is
        // nonempty, but the (1,1,1) cell is missing. The union-of-categories
        // reading accepts the set; the meet-cell reading rejects it.
        let seven = coordinate_set(&["000", "001", "010", "011", "100", "101", "110"]);
        assert!(!seven.maximally_categorizes());
        assert!(!seven.order_isomorphism_property());
        assert!(seven
            .order_isomorphism_property_exhaustive(SelectorSemantics::CategoryUnions)
            .unwrap());
        assert!(!seven
            .order_isomorphism_property_exhaustive(SelectorSemantics::MeetCells)
            .unwrap());
    }

    #[test]
    fn product_representation_examples() {
        let cube = bit_cube();
        let rep = cube.product_representation().unwrap();
        assert_eq!(rep.attribute_sizes(), &[2, 2, 2]);
        assert!(rep.verify(&cube));
        // Identity relabeling on the cube: "011" has signature (0,1,1).
        let id = cube.domain().id_of("011").unwrap();
        assert_eq!(rep.relabel(id), "0.1.1");

        assert!(four_point().product_representation().is_none());

        let d = Domain::new(["a", "b", "c"]).unwrap();
        let single = CriteriaSet::new(vec![
            Criterion::new(
                Relation::from_pairs(d, [("a", "b"), ("b", "c"), ("a", "c")]).unwrap(),
            )
            .unwrap(),
        ])
        .unwrap();
        let rep = single.product_representation().unwrap();
        assert_eq!(rep.attribute_sizes(), &[3]);
        assert!(rep.verify(&single));
    }

    #[test]
    fn theorem_check_examples() {
        let r = bit_cube().theorem_check();
        assert!(r.maximal_categorization && r.order_isomorphism && r.product_representation);
        assert!(r.consistent());

        let r = four_point().theorem_check();
        assert!(!r.maximal_categorization && !r.order_isomorphism && !r.product_representation);
        assert!(r.consistent());
    }

    #[test]
    fn cell_bound_invariant() {
        for cs in [bit_cube(), four_point(), CriteriaSet::product(&[3, 2]).unwrap()] {
            let cells = cs.discrimination_partition().cell_count() as u128;
            let bound = cs
                .discrimination_vector()
                .product()
                .min(cs.domain().len() as u128);
            assert!(cells <= bound);
        }
    }

    #[test]
    fn domain_mismatch_rejected() {
        let a = Criterion::new(Relation::empty(Domain::new(["a"]).unwrap())).unwrap();
        let b = Criterion::new(Relation::empty(Domain::new(["b"]).unwrap())).unwrap();
        assert_eq!(
            CriteriaSet::new(vec![a, b]).unwrap_err(),
            Error::DomainMismatch
        );
    }
}
