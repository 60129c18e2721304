//! Choice functions on subset domains: choice classes, the "uses" relation,
//! maximal discrimination, rationalizability, and Condorcet consistency.
//!
//! Subsets are bitmasks over label ids. Operations that quantify over every
//! nonempty subset require the full-lattice domain, which is capped at 20
//! labels to keep the 2^|X| sweeps feasible.

use std::collections::BTreeMap;

use crate::criteria::CriteriaSet;
use crate::domain::{Domain, LabelId};
use crate::error::{Error, Result};

/// A subset of the domain as a bitmask (bit i = label id i).
pub type SubsetMask = u32;

/// Largest domain for full-lattice choice functions.
pub const MAX_CHOICE_DOMAIN: usize = 20;

/// Which choice sets the function is defined on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChoiceSets {
    /// Every nonempty subset of the domain.
    All,
    /// An explicit list of subsets.
    Explicit(Vec<SubsetMask>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Eval {
    /// Stored assignment per choice set.
    Table(BTreeMap<SubsetMask, SubsetMask>),
    /// Choose the minimum-rank members of the set.
    Ranked(Vec<u64>),
}

/// A choice function `c` mapping each choice set to a nonempty subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceFunction {
    domain: Domain,
    sets: ChoiceSets,
    eval: Eval,
}

impl ChoiceFunction {
    /// Choice function from explicit assignments `(set, chosen)`.
    ///
    /// Validates nonemptiness and containment. The function is full-lattice
    /// when the assignments cover every nonempty subset of the domain.
    pub fn from_assignments<I>(domain: Domain, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetMask, SubsetMask)>,
    {
        let n = domain.len();
        if n > MAX_CHOICE_DOMAIN {
            return Err(Error::DomainTooLarge {
                size: n,
                max: MAX_CHOICE_DOMAIN,
            });
        }
        let full: SubsetMask = full_mask(n);
        let mut table = BTreeMap::new();
        for (set, chosen) in assignments {
            if set == 0 || set & !full != 0 {
                return Err(Error::InvalidAssignment(format!(
                    "choice set {set:#b} is empty or not within the domain"
                )));
            }
            if chosen == 0 {
                return Err(Error::InvalidAssignment(format!(
                    "empty choice from set {set:#b}"
                )));
            }
            if chosen & !set != 0 {
                return Err(Error::InvalidAssignment(format!(
                    "chosen {chosen:#b} not contained in set {set:#b}"
                )));
            }
            if table.insert(set, chosen).is_some() {
                return Err(Error::InvalidAssignment(format!(
                    "duplicate assignment for set {set:#b}"
                )));
            }
        }
        let sets = if table.len() == (1usize << n) - 1 {
            ChoiceSets::All
        } else {
            ChoiceSets::Explicit(table.keys().copied().collect())
        };
        Ok(ChoiceFunction {
            domain,
            sets,
            eval: Eval::Table(table),
        })
    }

    /// Full-lattice choice function selecting the minimum-rank members of
    /// each set. This is maximization of the weak order "lower rank is
    /// better".
    pub fn from_ranks(domain: Domain, ranks: Vec<u64>) -> Result<Self> {
        let n = domain.len();
        if n > MAX_CHOICE_DOMAIN {
            return Err(Error::DomainTooLarge {
                size: n,
                max: MAX_CHOICE_DOMAIN,
            });
        }
        if ranks.len() != n {
            return Err(Error::InvalidAssignment(format!(
                "{} ranks supplied for {} labels",
                ranks.len(),
                n
            )));
        }
        Ok(ChoiceFunction {
            domain,
            sets: ChoiceSets::All,
            eval: Eval::Ranked(ranks),
        })
    }

    /// `c(A) = A` for every set: one choice class containing everything.
    pub fn total_indifference(domain: Domain) -> Result<Self> {
        let n = domain.len();
        Self::from_ranks(domain, vec![0; n])
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn sets(&self) -> &ChoiceSets {
        &self.sets
    }

    pub fn is_full_lattice(&self) -> bool {
        matches!(self.sets, ChoiceSets::All)
    }

    /// `c(A)` for a nonempty subset mask.
    pub fn choose(&self, set: SubsetMask) -> Result<SubsetMask> {
        if set == 0 || set & !full_mask(self.domain.len()) != 0 {
            return Err(Error::MissingAssignment(format!("{set:#b}")));
        }
        match &self.eval {
            Eval::Table(t) => t
                .get(&set)
                .copied()
                .ok_or_else(|| Error::MissingAssignment(format!("{set:#b}"))),
            Eval::Ranked(ranks) => {
                let best = members(set)
                    .map(|i| ranks[i])
                    .min()
                    .expect("set is nonempty");
                Ok(members(set).filter(|&i| ranks[i] == best).fold(0, |m, i| m | bit(i)))
            }
        }
    }

    /// `c` applied to a set of labels, returned as labels.
    pub fn choose_labels<'a, I>(&self, labels: I) -> Result<Vec<String>>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = 0;
        for l in labels {
            set |= bit(self.domain.require_id(l)?);
        }
        let chosen = self.choose(set)?;
        Ok(members(chosen).map(|i| self.domain.label(i).to_string()).collect())
    }

    fn table(&self) -> Result<Vec<SubsetMask>> {
        if !self.is_full_lattice() {
            return Err(Error::ExplicitChoiceDomain);
        }
        let n = self.domain.len();
        let mut t = vec![0; 1usize << n];
        for set in 1..(1u64 << n) as SubsetMask {
            t[set as usize] = self.choose(set)?;
        }
        Ok(t)
    }

    /// Partition the domain into choice classes, or report a witness pair at
    /// which interchangeability fails to be an equivalence.
    ///
    /// Two labels are interchangeable when (a) in every set containing both,
    /// one is chosen exactly when the other is, and (b) swapping one for the
    /// other in any set not containing both leaves the choice status
    /// unchanged. The relation is symmetric and reflexive by construction;
    /// transitivity can genuinely fail, in which case the witness pair is
    /// interchangeable with a common third label but not with each other.
    /// Requires the full-lattice domain.
    #[allow(clippy::needless_range_loop)]
    pub fn choice_classes(&self) -> Result<ChoiceClassPartition> {
        let c = self.table()?;
        let n = self.domain.len();
        let full = full_mask(n);
        let mut inter = vec![vec![true; n]; n];
        for x in 0..n {
            for y in (x + 1)..n {
                let i = self.interchangeable(&c, full, x, y);
                inter[x][y] = i;
                inter[y][x] = i;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if inter[x][y] && inter[y][z] && !inter[x][z] {
                        return Ok(ChoiceClassPartition {
                            classes: Vec::new(),
                            witness: Some((x.min(z), x.max(z))),
                        });
                    }
                }
            }
        }
        let mut classes: Vec<Vec<LabelId>> = Vec::new();
        for x in 0..n {
            match classes.iter().position(|cl| inter[cl[0]][x]) {
                Some(i) => classes[i].push(x),
                None => classes.push(vec![x]),
            }
        }
        Ok(ChoiceClassPartition {
            classes,
            witness: None,
        })
    }

    fn interchangeable(&self, c: &[SubsetMask], full: SubsetMask, x: usize, y: usize) -> bool {
        let bx = bit(x);
        let by = bit(y);
        // (a) over sets containing both: equal choice membership
        let rest = full & !(bx | by);
        let mut s = rest;
        loop {
            let a = (s | bx | by) as usize;
            if (c[a] & bx != 0) != (c[a] & by != 0) {
                return false;
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        // (b) over sets containing x but not y, mirrored through the swap
        let mut s = rest;
        loop {
            let a = s | bx;
            let mirrored = s | by;
            if (c[a as usize] & bx != 0) != (c[mirrored as usize] & by != 0) {
                return false;
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        true
    }

    /// `n(c)`: the number of choice classes.
    pub fn class_count(&self) -> Result<usize> {
        let p = self.choice_classes()?;
        match p.witness {
            None => Ok(p.classes.len()),
            Some((x, y)) => Err(Error::IllDefinedChoiceClasses {
                x: self.domain.label(x).to_string(),
                y: self.domain.label(y).to_string(),
            }),
        }
    }

    /// A complete transitive relation whose maximizers reproduce `c` on
    /// every set, if one exists.
    ///
    /// The only candidate is the pairwise-choice relation `x R y iff
    /// x in c({x,y})`; it is checked for transitivity and full agreement.
    pub fn rationalizable(&self) -> Result<Option<WeakOrder>> {
        let c = self.table()?;
        let n = self.domain.len();
        let mut r = vec![vec![true; n]; n];
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    r[x][y] = c[(bit(x) | bit(y)) as usize] & bit(x) != 0;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if r[x][y] && r[y][z] && !r[x][z] {
                        return Ok(None);
                    }
                }
            }
        }
        for set in 1..(1u64 << n) as SubsetMask {
            let maximizers = members(set)
                .filter(|&x| members(set).all(|y| r[x][y]))
                .fold(0, |m, x| m | bit(x));
            if maximizers != c[set as usize] {
                return Ok(None);
            }
        }
        let ranks: Vec<usize> = (0..n)
            .map(|x| (0..n).filter(|&y| r[y][x] && !r[x][y]).count())
            .collect();
        Ok(Some(WeakOrder::from_ranks(ranks)))
    }

    /// Condorcet rule: an alternative chosen pairwise against every member
    /// of a set must be chosen from the set.
    pub fn condorcet_consistent(&self) -> Result<bool> {
        let c = self.table()?;
        let n = self.domain.len();
        let mut wins = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    wins[x][y] = c[(bit(x) | bit(y)) as usize] & bit(x) != 0;
                }
            }
        }
        for set in 1..(1u64 << n) as SubsetMask {
            for x in members(set) {
                let beats_all = members(set).all(|y| y == x || wins[x][y]);
                if beats_all && c[set as usize] & bit(x) == 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Choice classes, or the witness pair at which the interchangeability
/// relation fails to be an equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceClassPartition {
    classes: Vec<Vec<LabelId>>,
    witness: Option<(LabelId, LabelId)>,
}

impl ChoiceClassPartition {
    pub fn well_defined(&self) -> bool {
        self.witness.is_none()
    }

    pub fn classes(&self) -> &[Vec<LabelId>] {
        &self.classes
    }

    pub fn witness(&self) -> Option<(LabelId, LabelId)> {
        self.witness
    }

    pub fn class_of(&self, id: LabelId) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&id))
    }
}

/// A complete transitive relation as dense ranks, 0 best.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakOrder {
    ranks: Vec<usize>,
}

impl WeakOrder {
    /// Normalizes arbitrary rank values to dense 0-based ranks.
    pub fn from_ranks(ranks: Vec<usize>) -> Self {
        let mut distinct: Vec<usize> = ranks.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let ranks = ranks
            .iter()
            .map(|r| distinct.binary_search(r).expect("rank present"))
            .collect();
        WeakOrder { ranks }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Strict preference.
    pub fn prefers(&self, x: LabelId, y: LabelId) -> bool {
        self.ranks[x] < self.ranks[y]
    }

    pub fn indifferent(&self, x: LabelId, y: LabelId) -> bool {
        self.ranks[x] == self.ranks[y]
    }

    pub fn indifference_classes(&self) -> Vec<Vec<LabelId>> {
        let levels = self.ranks.iter().max().map_or(0, |&m| m + 1);
        (0..levels)
            .map(|r| {
                (0..self.ranks.len())
                    .filter(|&x| self.ranks[x] == r)
                    .collect()
            })
            .collect()
    }

    /// The choice function maximizing this order on every subset.
    pub fn maximizer(&self, domain: Domain) -> Result<ChoiceFunction> {
        ChoiceFunction::from_ranks(domain, self.ranks.iter().map(|&r| r as u64).collect())
    }
}

/// Does `c` make only distinctions already present in the criteria?
///
/// Equivalent to: every cell of the discrimination partition lies inside a
/// single choice class.
pub fn uses(cs: &CriteriaSet, c: &ChoiceFunction) -> Result<bool> {
    if cs.domain() != c.domain() {
        return Err(Error::DomainMismatch);
    }
    let classes = c.choice_classes()?;
    if let Some((x, y)) = classes.witness() {
        return Err(Error::IllDefinedChoiceClasses {
            x: c.domain().label(x).to_string(),
            y: c.domain().label(y).to_string(),
        });
    }
    let partition = cs.discrimination_partition();
    for cell in partition.cells() {
        let class = classes.class_of(cell[0]).expect("classes cover the domain");
        if cell.iter().any(|&id| classes.class_of(id) != Some(class)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does the pair `(cs, c)` maximally discriminate: `n(c) = min(prod e_i, |X|)`?
///
/// Requires `uses(cs, c)`; the pair is not well-formed otherwise.
pub fn maximally_discriminates(cs: &CriteriaSet, c: &ChoiceFunction) -> Result<bool> {
    if !uses(cs, c)? {
        return Err(Error::UsesViolation);
    }
    let n = c.class_count()? as u64;
    Ok(n == cs
        .discrimination_vector()
        .max_distinctions(cs.domain().len() as u64))
}

/// The canonical maximally discriminating choice function of a criteria set.
///
/// Discrimination cells are ordered lexicographically by their category-index
/// signatures (category indices are assigned by first appearance over the
/// domain's label order), lower signature preferred; `c(A)` picks the members
/// of the best cell meeting `A`. Its choice classes are exactly the cells.
pub fn build_max_choice(cs: &CriteriaSet) -> Result<ChoiceFunction> {
    let n = cs.domain().len();
    if n > MAX_CHOICE_DOMAIN {
        return Err(Error::DomainTooLarge {
            size: n,
            max: MAX_CHOICE_DOMAIN,
        });
    }
    let partition = cs.discrimination_partition();
    let mut order: Vec<usize> = (0..partition.cell_count()).collect();
    order.sort_by(|&a, &b| partition.signature(a).cmp(partition.signature(b)));
    let mut rank_of_cell = vec![0u64; partition.cell_count()];
    for (rank, &cell) in order.iter().enumerate() {
        rank_of_cell[cell] = rank as u64;
    }
    let ranks = cs
        .domain()
        .ids()
        .map(|id| rank_of_cell[partition.cell_of(id).expect("cells cover the domain")])
        .collect();
    ChoiceFunction::from_ranks(cs.domain().clone(), ranks)
}

pub(crate) fn bit(i: usize) -> SubsetMask {
    1 << i
}

pub(crate) fn full_mask(n: usize) -> SubsetMask {
    if n == 0 {
        0
    } else {
        (u32::MAX >> (32 - n)) as SubsetMask
    }
}

pub(crate) fn members(set: SubsetMask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| set & (1 << i) != 0)
}
