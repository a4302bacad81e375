//! Relations over named attribute schemes, with a designated key and the
//! natural join.

use std::collections::HashSet;

use crate::error::{LatqlError, Result};

/// A finite relation: a scheme of attribute names and a set of tuples.
/// Cells may be absent (undefined value).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    scheme: Vec<String>,
    /// Index of the key attribute, when the tuples are keyed.
    key: Option<usize>,
    tuples: Vec<Vec<Option<String>>>,
}

impl Relation {
    /// A keyed relation; key values must be present and pairwise distinct.
    pub fn new(
        scheme: Vec<String>,
        key: &str,
        tuples: Vec<Vec<Option<String>>>,
    ) -> Result<Self> {
        let key_idx = scheme
            .iter()
            .position(|a| a == key)
            .ok_or(LatqlError::MissingKey)?;
        let r = Relation {
            scheme,
            key: Some(key_idx),
            tuples,
        };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<()> {
        for t in &self.tuples {
            if t.len() != self.scheme.len() {
                return Err(LatqlError::Invariant(format!(
                    "tuple arity {} does not match scheme arity {}",
                    t.len(),
                    self.scheme.len()
                )));
            }
        }
        if let Some(k) = self.key {
            let mut seen = HashSet::new();
            for t in &self.tuples {
                let v = t[k].as_deref().ok_or(LatqlError::MissingKey)?;
                if !seen.insert(v.to_string()) {
                    return Err(LatqlError::DuplicateKey {
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn scheme(&self) -> &[String] {
        &self.scheme
    }

    pub fn key_attribute(&self) -> Option<&str> {
        self.key.map(|k| self.scheme[k].as_str())
    }

    pub fn key_index(&self) -> Option<usize> {
        self.key
    }

    pub fn tuples(&self) -> &[Vec<Option<String>>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Natural join on shared attribute names. With no shared attributes this
    /// degenerates to the Cartesian product. The result keeps `self`'s key
    /// only when its values remain pairwise distinct.
    pub fn natural_join(&self, other: &Relation) -> Relation {
        let shared: Vec<(usize, usize)> = self
            .scheme
            .iter()
            .enumerate()
            .filter_map(|(i, a)| other.scheme.iter().position(|b| b == a).map(|j| (i, j)))
            .collect();
        let extra: Vec<usize> = (0..other.scheme.len())
            .filter(|j| !shared.iter().any(|&(_, sj)| sj == *j))
            .collect();
        let mut scheme = self.scheme.clone();
        scheme.extend(extra.iter().map(|&j| other.scheme[j].clone()));

        let mut tuples = Vec::new();
        for t1 in &self.tuples {
            for t2 in &other.tuples {
                if shared.iter().all(|&(i, j)| t1[i] == t2[j]) {
                    let mut t = t1.clone();
                    t.extend(extra.iter().map(|&j| t2[j].clone()));
                    tuples.push(t);
                }
            }
        }

        let key = self.key.filter(|&k| {
            let mut seen = HashSet::new();
            tuples.iter().all(|t| match &t[k] {
                Some(v) => seen.insert(v.clone()),
                None => false,
            })
        });
        Relation {
            scheme,
            key,
            tuples,
        }
    }
}
