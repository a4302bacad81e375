//! Binary formal contexts and their derivation operators.
//!
//! A context is a triple of named objects, named attributes and a dense
//! boolean incidence matrix whose rows are addressable as bit-vectors, so
//! derivations are word-wise intersections.

use crate::bits::{AttributeSet, IdxSet, ObjectSet};
use crate::error::{LatqlError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    /// One attribute-set per object, in object order.
    rows: Vec<AttributeSet>,
}

impl FormalContext {
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        incidence: Vec<Vec<bool>>,
    ) -> Result<Self> {
        check_distinct(&objects, "object")?;
        check_distinct(&attributes, "attribute")?;
        if incidence.len() != objects.len()
            || incidence.iter().any(|r| r.len() != attributes.len())
        {
            return Err(LatqlError::DimensionMismatch {
                rows: incidence.len(),
                cols: incidence.first().map_or(0, |r| r.len()),
                expected_rows: objects.len(),
                expected_cols: attributes.len(),
            });
        }
        let rows = incidence
            .iter()
            .map(|r| {
                IdxSet::from_indices(
                    attributes.len(),
                    r.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
                )
                .expect("in-range by construction")
            })
            .collect();
        Ok(FormalContext {
            objects,
            attributes,
            rows,
        })
    }

    /// Build from rows given as sets of incident attribute indices.
    pub fn from_rows(
        objects: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<AttributeSet>,
    ) -> Result<Self> {
        let incidence = rows
            .iter()
            .map(|r| (0..attributes.len()).map(|j| r.contains(j)).collect())
            .collect();
        Self::new(objects, attributes, incidence)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    pub fn row(&self, g: usize) -> &AttributeSet {
        &self.rows[g]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }

    pub fn object_set(&self, names: &[&str]) -> Result<ObjectSet> {
        let mut s = IdxSet::empty(self.objects.len());
        for n in names {
            let i = self.object_index(n).ok_or_else(|| LatqlError::UnknownName {
                kind: "object",
                name: n.to_string(),
            })?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn attribute_set(&self, names: &[&str]) -> Result<AttributeSet> {
        let mut s = IdxSet::empty(self.attributes.len());
        for n in names {
            let i = self
                .attribute_index(n)
                .ok_or_else(|| LatqlError::UnknownName {
                    kind: "attribute",
                    name: n.to_string(),
                })?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn object_names(&self, s: &ObjectSet) -> Vec<String> {
        s.iter().map(|i| self.objects[i].clone()).collect()
    }

    pub fn attribute_names(&self, s: &AttributeSet) -> Vec<String> {
        s.iter().map(|i| self.attributes[i].clone()).collect()
    }

    fn check_objects(&self, a: &ObjectSet) -> Result<()> {
        if a.domain() != self.objects.len() {
            return Err(LatqlError::ForeignSet {
                got: a.domain(),
                expected: self.objects.len(),
            });
        }
        Ok(())
    }

    fn check_attributes(&self, b: &AttributeSet) -> Result<()> {
        if b.domain() != self.attributes.len() {
            return Err(LatqlError::ForeignSet {
                got: b.domain(),
                expected: self.attributes.len(),
            });
        }
        Ok(())
    }

    /// A ↦ A′: the attributes common to every object of `a`.
    /// The empty set derives to all of M.
    pub fn derive_objects(&self, a: &ObjectSet) -> Result<AttributeSet> {
        self.check_objects(a)?;
        let mut out = IdxSet::full(self.attributes.len());
        for g in a.iter() {
            out.intersect_with(&self.rows[g]);
        }
        Ok(out)
    }

    /// B ↦ B′: the objects possessing every attribute of `b`.
    pub fn derive_attributes(&self, b: &AttributeSet) -> Result<ObjectSet> {
        self.check_attributes(b)?;
        let mut out = IdxSet::empty(self.objects.len());
        for (g, row) in self.rows.iter().enumerate() {
            if b.is_subset(row) {
                out.insert(g);
            }
        }
        Ok(out)
    }

    /// A ↦ A″ on object sets.
    pub fn closure_objects(&self, a: &ObjectSet) -> Result<ObjectSet> {
        self.derive_attributes(&self.derive_objects(a)?)
    }

    /// B ↦ B″ on attribute sets.
    pub fn closure_attributes(&self, b: &AttributeSet) -> Result<AttributeSet> {
        self.derive_objects(&self.derive_attributes(b)?)
    }

    /// The sub-context (H, N, I ∩ (H × N)), preserving the parent order.
    pub fn subcontext(&self, h: &ObjectSet, n: &AttributeSet) -> Result<FormalContext> {
        self.check_objects(h)?;
        self.check_attributes(n)?;
        let attr_idx: Vec<usize> = n.iter().collect();
        let objects = self.object_names(h);
        let attributes: Vec<String> = attr_idx.iter().map(|&j| self.attributes[j].clone()).collect();
        let incidence = h
            .iter()
            .map(|g| attr_idx.iter().map(|&j| self.incident(g, j)).collect())
            .collect();
        FormalContext::new(objects, attributes, incidence)
    }

    /// Swap objects and attributes; involutive.
    pub fn transpose(&self) -> FormalContext {
        let incidence = (0..self.attributes.len())
            .map(|m| (0..self.objects.len()).map(|g| self.incident(g, m)).collect())
            .collect();
        FormalContext::new(self.attributes.clone(), self.objects.clone(), incidence)
            .expect("transpose preserves validity")
    }

    pub fn full_objects(&self) -> ObjectSet {
        IdxSet::full(self.objects.len())
    }

    pub fn full_attributes(&self) -> AttributeSet {
        IdxSet::full(self.attributes.len())
    }

    pub fn empty_objects(&self) -> ObjectSet {
        IdxSet::empty(self.objects.len())
    }

    pub fn empty_attributes(&self) -> AttributeSet {
        IdxSet::empty(self.attributes.len())
    }
}

impl std::fmt::Debug for FormalContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FormalContext {}x{}", self.objects.len(), self.attributes.len())?;
        for (g, row) in self.rows.iter().enumerate() {
            let cells: String = (0..self.attributes.len())
                .map(|m| if row.contains(m) { 'X' } else { '.' })
                .collect();
            writeln!(f, "  {} {}", self.objects[g], cells)?;
        }
        Ok(())
    }
}

fn check_distinct(names: &[String], kind: &'static str) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(LatqlError::DuplicateName {
                kind,
                name: n.clone(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The 3x4 context of the generalization example: g1={m3,m4}, g2={m2,m4}, g3={m1,m3}.
    pub(crate) fn kf6() -> FormalContext {
        FormalContext::new(
            vec!["g1".into(), "g2".into(), "g3".into()],
            vec!["m1".into(), "m2".into(), "m3".into(), "m4".into()],
            vec![
                vec![false, false, true, true],
                vec![false, true, false, true],
                vec![true, false, true, false],
            ],
        )
        .unwrap()
    }

    fn names_a(ctx: &FormalContext, s: &AttributeSet) -> Vec<String> {
        ctx.attribute_names(s)
    }

    #[test]
    fn derive_objects_examples() {
        let k = kf6();
        let a = k.object_set(&["g1"]).unwrap();
        assert_eq!(names_a(&k, &k.derive_objects(&a).unwrap()), ["m3", "m4"]);
        let empty = k.empty_objects();
        assert_eq!(k.derive_objects(&empty).unwrap(), k.full_attributes());
        let a = k.object_set(&["g1", "g2"]).unwrap();
        assert_eq!(names_a(&k, &k.derive_objects(&a).unwrap()), ["m4"]);
    }

    #[test]
    fn derive_attributes_examples() {
        let k = kf6();
        let b = k.attribute_set(&["m3"]).unwrap();
        assert_eq!(k.object_names(&k.derive_attributes(&b).unwrap()), ["g1", "g3"]);
        assert_eq!(
            k.derive_attributes(&k.empty_attributes()).unwrap(),
            k.full_objects()
        );
        let b = k.attribute_set(&["m1", "m3", "m4"]).unwrap();
        assert!(k.derive_attributes(&b).unwrap().is_empty());
    }

    #[test]
    fn closure_examples() {
        let k = kf6();
        let a = k.object_set(&["g1", "g3"]).unwrap();
        assert_eq!(k.closure_objects(&a).unwrap(), a);
        let bottom = k
            .derive_attributes(&k.derive_objects(&k.empty_objects()).unwrap())
            .unwrap();
        assert_eq!(k.closure_objects(&k.empty_objects()).unwrap(), bottom);

        let b = k.attribute_set(&["m1"]).unwrap();
        assert_eq!(names_a(&k, &k.closure_attributes(&b).unwrap()), ["m1", "m3"]);
        let b = k.attribute_set(&["m3", "m4"]).unwrap();
        assert_eq!(k.closure_attributes(&b).unwrap(), b);
        let full = k.full_attributes();
        assert_eq!(k.closure_attributes(&full).unwrap(), full);
    }

    #[test]
    fn subcontext_identity_and_transpose() {
        let k = kf6();
        let sub = k.subcontext(&k.full_objects(), &k.full_attributes()).unwrap();
        assert_eq!(sub, k);
        assert_eq!(k.transpose().transpose(), k);
        let t = k.transpose();
        let m3 = t.object_set(&["m3"]).unwrap();
        assert_eq!(t.attribute_names(&t.derive_objects(&m3).unwrap()), ["g1", "g3"]);
    }

    #[test]
    fn transpose_degenerate_shape() {
        let k = FormalContext::new(vec![], vec!["a".into(), "b".into()], vec![]).unwrap();
        let t = k.transpose();
        assert_eq!(t.object_count(), 2);
        assert_eq!(t.attribute_count(), 0);
    }

    #[test]
    fn foreign_set_rejected() {
        let k = kf6();
        let wrong: ObjectSet = IdxSet::empty(5);
        assert!(matches!(
            k.derive_objects(&wrong),
            Err(LatqlError::ForeignSet { .. })
        ));
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(FormalContext::new(
            vec!["g".into(), "g".into()],
            vec!["m".into()],
            vec![vec![true], vec![false]],
        )
        .is_err());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert!(FormalContext::new(
            vec!["g".into()],
            vec!["m".into()],
            vec![vec![true, false]],
        )
        .is_err());
    }
}
