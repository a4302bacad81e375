//! Many-valued contexts and conceptual scaling.
//!
//! A many-valued context holds raw tabular data; a conceptual scale per
//! attribute binarizes it into a formal context.

use std::collections::BTreeSet;

use crate::context::FormalContext;
use crate::error::{LatqlError, Result};
use crate::relation::Relation;

/// Tabular data (G, M, W, I) with at most one value per (object, attribute)
/// cell; cells may be undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManyValuedContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    /// cells[g][m] = Some(w) when attribute m has value w on object g.
    cells: Vec<Vec<Option<String>>>,
}

impl ManyValuedContext {
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        cells: Vec<Vec<Option<String>>>,
    ) -> Result<Self> {
        if cells.len() != objects.len() || cells.iter().any(|r| r.len() != attributes.len()) {
            return Err(LatqlError::DimensionMismatch {
                rows: cells.len(),
                cols: cells.first().map_or(0, |r| r.len()),
                expected_rows: objects.len(),
                expected_cols: attributes.len(),
            });
        }
        Ok(ManyValuedContext {
            objects,
            attributes,
            cells,
        })
    }

    /// Interpret a keyed relation as a many-valued context: one object per
    /// tuple named by its key value, one attribute per non-key column.
    pub fn from_relation(r: &Relation) -> Result<Self> {
        let k = r.key_index().ok_or(LatqlError::MissingKey)?;
        let attributes: Vec<String> = r
            .scheme()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, a)| a.clone())
            .collect();
        let mut objects = Vec::new();
        let mut cells = Vec::new();
        for t in r.tuples() {
            objects.push(t[k].clone().ok_or(LatqlError::MissingKey)?);
            cells.push(
                t.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, v)| v.clone())
                    .collect(),
            );
        }
        Self::new(objects, attributes, cells)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn value(&self, g: usize, m: usize) -> Option<&str> {
        self.cells[g][m].as_deref()
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }

    /// The distinct values occurring for attribute `m`, in first-occurrence order.
    pub fn occurring_values(&self, m: usize) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for row in &self.cells {
            if let Some(v) = &row[m] {
                if seen.insert(v.clone()) {
                    out.push(v.clone());
                }
            }
        }
        out
    }
}

/// A small binary context binarizing one many-valued attribute: its objects
/// are attribute values, its attributes are the scaled attributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptualScale {
    attribute: String,
    scale_context: FormalContext,
}

impl ConceptualScale {
    pub fn new(attribute: String, scale_context: FormalContext) -> Self {
        ConceptualScale {
            attribute,
            scale_context,
        }
    }

    /// The neutral default: one scaled attribute per occurring value,
    /// incidence is value equality.
    pub fn nominal(attribute: &str, values: &[String]) -> Self {
        let n = values.len();
        let incidence = (0..n)
            .map(|i| (0..n).map(|j| i == j).collect())
            .collect();
        let ctx = FormalContext::new(values.to_vec(), values.to_vec(), incidence)
            .expect("distinct values");
        ConceptualScale::new(attribute.to_string(), ctx)
    }

    /// Ordinal scale over the given value order: scaled attribute "<=v" holds
    /// for every value at or before v.
    pub fn ordinal(attribute: &str, values: &[String]) -> Self {
        let n = values.len();
        let names: Vec<String> = values.iter().map(|v| format!("<={v}")).collect();
        let incidence = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        let ctx = FormalContext::new(values.to_vec(), names, incidence).expect("distinct values");
        ConceptualScale::new(attribute.to_string(), ctx)
    }

    pub fn attribute(&self) -> &str {
        &self.attribute
    }

    pub fn scale_context(&self) -> &FormalContext {
        &self.scale_context
    }
}

/// Binarize one attribute of `mv` through `scale`. Objects with no value for
/// the attribute get an all-false row.
pub fn scale_attribute(
    mv: &ManyValuedContext,
    m: &str,
    scale: &ConceptualScale,
) -> Result<FormalContext> {
    if scale.attribute() != m {
        return Err(LatqlError::Config(format!(
            "scale for '{}' applied to attribute '{}'",
            scale.attribute(),
            m
        )));
    }
    let mi = mv.attribute_index(m).ok_or_else(|| LatqlError::UnknownName {
        kind: "attribute",
        name: m.to_string(),
    })?;
    let sc = scale.scale_context();
    let cols = sc.attribute_count();
    let mut incidence = Vec::with_capacity(mv.objects().len());
    for g in 0..mv.objects().len() {
        let row = match mv.value(g, mi) {
            None => vec![false; cols],
            Some(v) => {
                let vi = sc.object_index(v).ok_or_else(|| LatqlError::ScaleCoverage {
                    attribute: m.to_string(),
                    value: v.to_string(),
                })?;
                (0..cols).map(|s| sc.incident(vi, s)).collect()
            }
        };
        incidence.push(row);
    }
    FormalContext::new(
        mv.objects().to_vec(),
        sc.attributes().to_vec(),
        incidence,
    )
}

/// Scale every attribute and concatenate the columns. Scaled attribute names
/// are prefixed "attr:scaled" to keep the union disjoint. Attributes with no
/// configured scale fall back to nominal scaling over their occurring values.
pub fn derive_context(
    mv: &ManyValuedContext,
    scales: &[ConceptualScale],
) -> Result<FormalContext> {
    let mut attributes = Vec::new();
    let mut columns: Vec<Vec<bool>> = vec![Vec::new(); mv.objects().len()];
    for (mi, m) in mv.attributes().iter().enumerate() {
        let nominal;
        let scale = match scales.iter().find(|s| s.attribute() == m.as_str()) {
            Some(s) => s,
            None => {
                nominal = ConceptualScale::nominal(m, &mv.occurring_values(mi));
                &nominal
            }
        };
        let part = scale_attribute(mv, m, scale)?;
        for s in part.attributes() {
            attributes.push(format!("{m}:{s}"));
        }
        for (g, col) in columns.iter_mut().enumerate() {
            for s in 0..part.attribute_count() {
                col.push(part.incident(g, s));
            }
        }
    }
    FormalContext::new(mv.objects().to_vec(), attributes, columns)
}

/// As `derive_context`, but errors when some attribute has no configured
/// scale instead of defaulting.
pub fn derive_context_strict(
    mv: &ManyValuedContext,
    scales: &[ConceptualScale],
) -> Result<FormalContext> {
    for m in mv.attributes() {
        if !scales.iter().any(|s| s.attribute() == m.as_str()) {
            return Err(LatqlError::MissingScale {
                attribute: m.clone(),
            });
        }
    }
    derive_context(mv, scales)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv_one() -> ManyValuedContext {
        ManyValuedContext::new(
            vec!["o1".into(), "o2".into(), "o3".into()],
            vec!["m".into()],
            vec![
                vec![Some("x".into())],
                vec![Some("y".into())],
                vec![None],
            ],
        )
        .unwrap()
    }

    #[test]
    fn from_relation_single_tuple() {
        let r = Relation::new(
            vec!["K".into(), "A".into()],
            "K",
            vec![vec![Some("x".into()), Some("a".into())]],
        )
        .unwrap();
        let mv = ManyValuedContext::from_relation(&r).unwrap();
        assert_eq!(mv.objects(), ["x"]);
        assert_eq!(mv.value(0, 0), Some("a"));
    }

    #[test]
    fn from_relation_empty() {
        let r = Relation::new(vec!["K".into()], "K", vec![]).unwrap();
        let mv = ManyValuedContext::from_relation(&r).unwrap();
        assert!(mv.objects().is_empty());
    }

    #[test]
    fn from_relation_counts() {
        let r = Relation::new(
            vec!["K".into(), "A".into(), "B".into()],
            "K",
            vec![
                vec![Some("x".into()), Some("1".into()), Some("p".into())],
                vec![Some("y".into()), Some("2".into()), Some("q".into())],
                vec![Some("z".into()), Some("3".into()), Some("r".into())],
            ],
        )
        .unwrap();
        let mv = ManyValuedContext::from_relation(&r).unwrap();
        assert_eq!(mv.objects().len(), 3);
        assert_eq!(mv.attributes().len(), 2);
        let cells = (0..3)
            .flat_map(|g| (0..2).map(move |m| (g, m)))
            .filter(|&(g, m)| mv.value(g, m).is_some())
            .count();
        assert_eq!(cells, 6);
    }

    #[test]
    fn nominal_scaling_is_value_equality() {
        let mv = mv_one();
        let scale = ConceptualScale::nominal("m", &["x".into(), "y".into()]);
        let k = scale_attribute(&mv, "m", &scale).unwrap();
        assert!(k.incident(0, 0) && !k.incident(0, 1));
        assert!(!k.incident(1, 0) && k.incident(1, 1));
    }

    #[test]
    fn missing_value_gives_empty_row() {
        let mv = mv_one();
        let scale = ConceptualScale::nominal("m", &["x".into(), "y".into()]);
        let k = scale_attribute(&mv, "m", &scale).unwrap();
        assert!(!k.incident(2, 0) && !k.incident(2, 1));
    }

    #[test]
    fn ordinal_scale_cumulates() {
        let mv = ManyValuedContext::new(
            vec!["g".into()],
            vec!["m".into()],
            vec![vec![Some("2".into())]],
        )
        .unwrap();
        let scale = ConceptualScale::ordinal("m", &["1".into(), "2".into(), "3".into()]);
        let k = scale_attribute(&mv, "m", &scale).unwrap();
        // value 2 is incident with "<=2" and "<=3" but not "<=1"
        assert!(!k.incident(0, 0) && k.incident(0, 1) && k.incident(0, 2));
    }

    #[test]
    fn scale_coverage_error() {
        let mv = mv_one();
        let scale = ConceptualScale::nominal("m", &["x".into()]);
        assert!(matches!(
            scale_attribute(&mv, "m", &scale),
            Err(LatqlError::ScaleCoverage { .. })
        ));
    }

    #[test]
    fn derive_context_concatenates_and_prefixes() {
        let mv = ManyValuedContext::new(
            vec!["g".into()],
            vec!["a".into(), "b".into()],
            vec![vec![Some("x".into()), Some("y".into())]],
        )
        .unwrap();
        let k = derive_context(&mv, &[]).unwrap();
        assert_eq!(k.attributes(), ["a:x", "b:y"]);
        assert_eq!(k.object_count(), 1);
        assert!(k.incident(0, 0) && k.incident(0, 1));
    }

    #[test]
    fn strict_requires_all_scales() {
        let mv = mv_one();
        assert!(matches!(
            derive_context_strict(&mv, &[]),
            Err(LatqlError::MissingScale { .. })
        ));
    }
}
