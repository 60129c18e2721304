//! Binary relations on finite domains and the categories they induce.
//!
//! A criterion is an asymmetric relation. Two alternatives fall into the same
//! category when they have identical superior sets and identical inferior
//! sets; the relation then lifts to a well-defined order on categories.

use std::collections::BTreeSet;

use crate::domain::{Domain, LabelId};
use crate::error::{Error, Result};

/// A binary relation stored as an explicit set of ordered pairs.
///
/// A pair `(x, y)` means `x` is superior to `y`. Construction validates
/// domain membership only; asymmetry is checked by [`Relation::is_asymmetric`]
/// and required by [`Relation::categories`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    domain: Domain,
    pairs: BTreeSet<(LabelId, LabelId)>,
}

impl Relation {
    /// Relation from label pairs; every label must belong to the domain.
    pub fn from_pairs<'a, I>(domain: Domain, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut ids = BTreeSet::new();
        for (x, y) in pairs {
            ids.insert((domain.require_id(x)?, domain.require_id(y)?));
        }
        Ok(Relation { domain, pairs: ids })
    }

    /// Relation from label-id pairs.
    pub fn from_id_pairs<I>(domain: Domain, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LabelId, LabelId)>,
    {
        let n = domain.len();
        let mut ids = BTreeSet::new();
        for (x, y) in pairs {
            if x >= n {
                return Err(Error::LabelOutOfRange(x));
            }
            if y >= n {
                return Err(Error::LabelOutOfRange(y));
            }
            ids.insert((x, y));
        }
        Ok(Relation { domain, pairs: ids })
    }

    /// The empty relation (everything unordered, one category).
    pub fn empty(domain: Domain) -> Self {
        Relation {
            domain,
            pairs: BTreeSet::new(),
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn pairs(&self) -> impl Iterator<Item = (LabelId, LabelId)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn relates(&self, x: LabelId, y: LabelId) -> bool {
        self.pairs.contains(&(x, y))
    }

    /// True iff no pair occurs together with its reverse and no self-pair occurs.
    pub fn is_asymmetric(&self) -> bool {
        self.asymmetry_violation().is_none()
    }

    fn asymmetry_violation(&self) -> Option<(LabelId, LabelId)> {
        self.pairs
            .iter()
            .find(|&&(x, y)| x == y || self.pairs.contains(&(y, x)))
            .copied()
    }

    /// Partition the domain into categories and lift the relation to them.
    ///
    /// Labels share a category iff their superior sets and inferior sets
    /// coincide. Categories are indexed by first appearance over the domain's
    /// label order. Errors if the relation is not asymmetric.
    pub fn categories(&self) -> Result<CategoryStructure> {
        if let Some((x, y)) = self.asymmetry_violation() {
            return Err(Error::NotAsymmetric {
                x: self.domain.label(x).to_string(),
                y: self.domain.label(y).to_string(),
            });
        }
        let n = self.domain.len();
        let mut superiors = vec![BTreeSet::new(); n];
        let mut inferiors = vec![BTreeSet::new(); n];
        for &(x, y) in &self.pairs {
            superiors[y].insert(x);
            inferiors[x].insert(y);
        }
        let mut cells: Vec<Vec<LabelId>> = Vec::new();
        let mut keys: Vec<(&BTreeSet<LabelId>, &BTreeSet<LabelId>)> = Vec::new();
        let mut cell_of = vec![0usize; n];
        for z in 0..n {
            let key = (&superiors[z], &inferiors[z]);
            match keys.iter().position(|k| *k == key) {
                Some(i) => {
                    cell_of[z] = i;
                    cells[i].push(z);
                }
                None => {
                    cell_of[z] = cells.len();
                    keys.push(key);
                    cells.push(vec![z]);
                }
            }
        }
        let mut order = BTreeSet::new();
        for &(x, y) in &self.pairs {
            order.insert((cell_of[x], cell_of[y]));
        }
        Ok(CategoryStructure { cells, order })
    }
}

/// Categories of a criterion together with the lifted category order.
///
/// `cells` need not cover a whole domain: restrictions of a criterion to a
/// subset of alternatives produce the same shape of structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryStructure {
    cells: Vec<Vec<LabelId>>,
    order: BTreeSet<(usize, usize)>,
}

impl CategoryStructure {
    pub(crate) fn from_parts(cells: Vec<Vec<LabelId>>, order: BTreeSet<(usize, usize)>) -> Self {
        CategoryStructure { cells, order }
    }

    /// Number of categories, `e(C)`.
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<LabelId>] {
        &self.cells
    }

    pub fn order(&self) -> &BTreeSet<(usize, usize)> {
        &self.order
    }

    pub fn cell_of(&self, id: LabelId) -> Option<usize> {
        self.cells.iter().position(|c| c.contains(&id))
    }

    /// True iff category `a` is lifted-superior to category `b`.
    pub fn dominates(&self, a: usize, b: usize) -> bool {
        self.order.contains(&(a, b))
    }

    /// Is there a bijection between the two category sets preserving the
    /// category order in both directions?
    ///
    /// Exhaustive backtracking search pruned by in/out-degree signatures.
    /// Category counts are small by construction, so this stays cheap.
    pub fn order_isomorphic(&self, other: &CategoryStructure) -> bool {
        let n = self.cell_count();
        if n != other.cell_count() || self.order.len() != other.order.len() {
            return false;
        }
        let sig = |st: &CategoryStructure| -> Vec<(usize, usize)> {
            let mut s = vec![(0usize, 0usize); st.cell_count()];
            for &(a, b) in &st.order {
                s[a].0 += 1;
                s[b].1 += 1;
            }
            s
        };
        let s1 = sig(self);
        let s2 = sig(other);
        {
            let mut m1 = s1.clone();
            let mut m2 = s2.clone();
            m1.sort_unstable();
            m2.sort_unstable();
            if m1 != m2 {
                return false;
            }
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.assign(0, &mut image, &mut used, &s1, &s2, other)
    }

    fn assign(
        &self,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        s1: &[(usize, usize)],
        s2: &[(usize, usize)],
        other: &CategoryStructure,
    ) -> bool {
        if v == self.cell_count() {
            return true;
        }
        for w in 0..other.cell_count() {
            if used[w] || s1[v] != s2[w] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                self.dominates(u, v) == other.dominates(image[u], w)
                    && self.dominates(v, u) == other.dominates(w, image[u])
            });
            if consistent {
                image[v] = w;
                used[w] = true;
                if self.assign(v + 1, image, used, s1, s2, other) {
                    return true;
                }
                used[w] = false;
                image[v] = usize::MAX;
            }
        }
        false
    }
}
