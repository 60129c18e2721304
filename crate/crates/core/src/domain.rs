//! Finite labeled domains of alternatives.

use crate::error::{Error, Result};

/// Position of a label in its domain.
pub type LabelId = usize;

/// An ordered set of distinct, nonempty labels.
///
/// Label order is significant: category indices, discrimination cells, and
/// report output are all canonicalized by first appearance over this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Domain {
    labels: Vec<String>,
}

impl Domain {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyDomain);
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Domain { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one label
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: LabelId) -> &str {
        &self.labels[id]
    }

    pub fn id_of(&self, label: &str) -> Option<LabelId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require_id(&self, label: &str) -> Result<LabelId> {
        self.id_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn ids(&self) -> impl Iterator<Item = LabelId> {
        0..self.labels.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empties() {
        assert_eq!(
            Domain::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(Domain::new(["a", ""]).unwrap_err(), Error::EmptyLabel);
        assert_eq!(Domain::new(Vec::<String>::new()).unwrap_err(), Error::EmptyDomain);
    }

    #[test]
    fn lookup() {
        let d = Domain::new(["x", "y"]).unwrap();
        assert_eq!(d.id_of("y"), Some(1));
        assert_eq!(d.id_of("z"), None);
        assert_eq!(d.require_id("z").unwrap_err(), Error::UnknownLabel("z".into()));
    }
}
