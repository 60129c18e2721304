//! JSON document formats: criteria documents (domain plus criteria given as
//! category lists with an order, or as raw superior/inferior pairs) and
//! choice documents (explicit assignments per subset).
//!
//! Category-list form is canonical; pair-list input is converted on load.
//! Emitting a loaded set reproduces a canonical document losslessly.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use criteria_core::choice::{ChoiceFunction, SubsetMask};
use criteria_core::criteria::{Criterion, CriteriaSet};
use criteria_core::domain::Domain;
use criteria_core::relations::Relation;

use crate::report::{CliResult, InputError};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest domain stored explicitly in choice documents.
pub const MAX_EXPLICIT_CHOICE_DOMAIN: usize = 12;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CriteriaDocument {
    pub schema: u32,
    pub domain: Vec<String>,
    pub criteria: Vec<CriterionDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CriterionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Canonical form: cells of the category partition, each a list of
    /// domain labels.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub categories: Option<Vec<Vec<String>>>,
    /// Category-order pairs `[superior, inferior]` as indices into
    /// `categories`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[usize; 2]>>,
    /// Alternative form: explicit `[superior, inferior]` label pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<[String; 2]>>,
}

/// A loaded criteria set plus any normalization notes (e.g. supplied
/// categories that merged because the order did not distinguish them).
pub struct LoadedCriteria {
    pub set: CriteriaSet,
    pub notes: Vec<String>,
}

pub fn read_criteria_document(path: &Path) -> CliResult<CriteriaDocument> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let doc: CriteriaDocument = serde_json::from_str(&text)?;
    if doc.schema != SCHEMA_VERSION {
        return Err(InputError(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            doc.schema
        )));
    }
    Ok(doc)
}

pub fn load_criteria(doc: &CriteriaDocument) -> CliResult<LoadedCriteria> {
    let domain = Domain::new(doc.domain.iter().cloned())?;
    if doc.criteria.is_empty() {
        return Err(InputError("document declares no criteria".into()));
    }
    let mut criteria = Vec::with_capacity(doc.criteria.len());
    let mut notes = Vec::new();
    for (index, cd) in doc.criteria.iter().enumerate() {
        let relation = match (&cd.categories, &cd.pairs) {
            (Some(cells), None) => {
                relation_from_categories(&domain, index, cells, cd.order.as_deref())?
            }
            (None, Some(pairs)) => {
                if cd.order.is_some() {
                    return Err(InputError(format!(
                        "criterion {index}: order is only valid with categories"
                    )));
                }
                Relation::from_pairs(
                    domain.clone(),
                    pairs.iter().map(|[x, y]| (x.as_str(), y.as_str())),
                )?
            }
            (Some(_), Some(_)) => {
                return Err(InputError(format!(
                    "criterion {index}: give categories or pairs, not both"
                )))
            }
            (None, None) => {
                return Err(InputError(format!(
                    "criterion {index}: needs categories or pairs"
                )))
            }
        };
        let criterion = match &cd.name {
            Some(name) => Criterion::named(name.clone(), relation)?,
            None => Criterion::new(relation)?,
        };
        if let Some(cells) = &cd.categories {
            if cells.len() != criterion.category_count() {
                notes.push(format!(
                    "criterion {index}: {} supplied categories merged into {} (the order does not distinguish them)",
                    cells.len(),
                    criterion.category_count()
                ));
            }
        }
        criteria.push(criterion);
    }
    Ok(LoadedCriteria {
        set: CriteriaSet::new(criteria)?,
        notes,
    })
}

fn relation_from_categories(
    domain: &Domain,
    index: usize,
    cells: &[Vec<String>],
    order: Option<&[[usize; 2]]>,
) -> CliResult<Relation> {
    let n = domain.len();
    let mut cell_of: Vec<Option<usize>> = vec![None; n];
    for (c, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(InputError(format!(
                "criterion {index}: category {c} is empty"
            )));
        }
        for label in cell {
            let id = domain.require_id(label)?;
            if cell_of[id].is_some() {
                return Err(InputError(format!(
                    "criterion {index}: label {label:?} appears in two categories"
                )));
            }
            cell_of[id] = Some(c);
        }
    }
    if let Some(id) = cell_of.iter().position(|c| c.is_none()) {
        return Err(InputError(format!(
            "criterion {index}: label {:?} is not covered by the categories",
            domain.label(id)
        )));
    }
    let mut edges = BTreeSet::new();
    for pair in order.unwrap_or_default() {
        let [sup, inf] = *pair;
        if sup >= cells.len() || inf >= cells.len() {
            return Err(InputError(format!(
                "criterion {index}: order pair [{sup}, {inf}] out of range"
            )));
        }
        if sup == inf || edges.contains(&(inf, sup)) {
            return Err(InputError(format!(
                "criterion {index}: order pair [{sup}, {inf}] breaks asymmetry"
            )));
        }
        edges.insert((sup, inf));
    }
    let mut pairs = Vec::new();
    for &(sup, inf) in &edges {
        for x in 0..n {
            for y in 0..n {
                if cell_of[x] == Some(sup) && cell_of[y] == Some(inf) {
                    pairs.push((x, y));
                }
            }
        }
    }
    Ok(Relation::from_id_pairs(domain.clone(), pairs)?)
}

/// Canonical document of a criteria set: derived categories in index order,
/// labels in domain order, sorted order pairs.
pub fn canonical_document(cs: &CriteriaSet) -> CriteriaDocument {
    let domain = cs.domain();
    let criteria = cs
        .criteria()
        .iter()
        .map(|c| {
            let st = c.structure();
            let categories = st
                .cells()
                .iter()
                .map(|cell| cell.iter().map(|&id| domain.label(id).to_string()).collect())
                .collect();
            let order = st.order().iter().map(|&(a, b)| [a, b]).collect();
            CriterionDoc {
                name: c.name().map(str::to_string),
                categories: Some(categories),
                order: Some(order),
                pairs: None,
            }
        })
        .collect();
    CriteriaDocument {
        schema: SCHEMA_VERSION,
        domain: domain.labels().to_vec(),
        criteria,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChoiceDocument {
    pub schema: u32,
    pub domain: Vec<String>,
    pub assignments: Vec<AssignmentDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AssignmentDoc {
    pub set: Vec<String>,
    pub choose: Vec<String>,
}

pub fn read_choice_document(path: &Path) -> CliResult<ChoiceDocument> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let doc: ChoiceDocument = serde_json::from_str(&text)?;
    if doc.schema != SCHEMA_VERSION {
        return Err(InputError(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            doc.schema
        )));
    }
    Ok(doc)
}

pub fn load_choice(doc: &ChoiceDocument) -> CliResult<ChoiceFunction> {
    let domain = Domain::new(doc.domain.iter().cloned())?;
    let mut assignments: Vec<(SubsetMask, SubsetMask)> = Vec::new();
    for (i, a) in doc.assignments.iter().enumerate() {
        let mut set: SubsetMask = 0;
        for label in &a.set {
            set |= 1 << domain.require_id(label)?;
        }
        let mut chosen: SubsetMask = 0;
        for label in &a.choose {
            chosen |= 1 << domain.require_id(label)?;
        }
        if set == 0 {
            return Err(InputError(format!("assignment {i}: empty choice set")));
        }
        assignments.push((set, chosen));
    }
    Ok(ChoiceFunction::from_assignments(domain, assignments)?)
}

/// Document for a full-lattice choice function: every nonempty subset in
/// ascending mask order. Domains above the explicit cap are refused;
/// full-lattice functions that large are generated, not stored.
pub fn choice_document(c: &ChoiceFunction) -> CliResult<ChoiceDocument> {
    let domain = c.domain();
    let n = domain.len();
    if n > MAX_EXPLICIT_CHOICE_DOMAIN {
        return Err(InputError(format!(
            "domain size {n} exceeds the explicit choice-document cap {MAX_EXPLICIT_CHOICE_DOMAIN}"
        )));
    }
    let labels = |mask: SubsetMask| -> Vec<String> {
        (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| domain.label(i).to_string())
            .collect()
    };
    let mut assignments = Vec::with_capacity((1usize << n) - 1);
    for set in 1..(1u64 << n) as SubsetMask {
        let chosen = c.choose(set).map_err(InputError::from)?;
        assignments.push(AssignmentDoc {
            set: labels(set),
            choose: labels(chosen),
        });
    }
    Ok(ChoiceDocument {
        schema: SCHEMA_VERSION,
        domain: domain.labels().to_vec(),
        assignments,
    })
}

pub fn to_json(doc: &impl Serialize) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}
