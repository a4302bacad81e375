//! Approximation of presumed concepts: classification, lower/upper concept
//! bounds, the approximating interval, and the projective/selective
//! representations.

use crate::bits::{AttributeSet, ObjectSet};
use crate::error::{LatqlError, Result};
use crate::lattice::{ConceptLattice, ConceptRegion, RegionShape};

/// A user-supplied (objects, attributes) pair to approximate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresumedConcept {
    p_ext: ObjectSet,
    p_int: AttributeSet,
}

impl PresumedConcept {
    pub fn new(lat: &ConceptLattice, p_ext: ObjectSet, p_int: AttributeSet) -> Result<Self> {
        let ctx = lat.context();
        if p_ext.domain() != ctx.object_count() {
            return Err(LatqlError::ForeignSet {
                got: p_ext.domain(),
                expected: ctx.object_count(),
            });
        }
        if p_int.domain() != ctx.attribute_count() {
            return Err(LatqlError::ForeignSet {
                got: p_int.domain(),
                expected: ctx.attribute_count(),
            });
        }
        Ok(PresumedConcept { p_ext, p_int })
    }

    pub fn from_names(lat: &ConceptLattice, objects: &[&str], attributes: &[&str]) -> Result<Self> {
        let ctx = lat.context();
        Self::new(lat, ctx.object_set(objects)?, ctx.attribute_set(attributes)?)
    }

    pub fn p_ext(&self) -> &ObjectSet {
        &self.p_ext
    }

    pub fn p_int(&self) -> &AttributeSet {
        &self.p_int
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresumedKind {
    /// (X, Y) is itself a formal concept.
    FormalConcept,
    /// X × Y lies inside the incidence relation but is not closed.
    Preconcept,
    /// No formal concept covers (X, Y).
    Degenerated,
}

#[derive(Clone, Debug)]
pub struct ApproxResult {
    pub kind: PresumedKind,
    /// L(c) = (X″, X′), smallest concept whose extent contains X.
    pub lower: usize,
    /// H(c) = (Y′, Y″), largest concept whose intent contains Y.
    pub upper: usize,
    /// [L(c), H(c)]; empty exactly when degenerated.
    pub interval: ConceptRegion,
}

/// Is X × Y a rectangle of crosses?
fn is_preconcept(lat: &ConceptLattice, c: &PresumedConcept) -> Result<bool> {
    let yprime = lat.context().derive_attributes(c.p_int())?;
    Ok(c.p_ext().is_subset(&yprime))
}

pub fn classify(lat: &ConceptLattice, c: &PresumedConcept) -> Result<PresumedKind> {
    let ctx = lat.context();
    let xprime = ctx.derive_objects(c.p_ext())?;
    let yprime = ctx.derive_attributes(c.p_int())?;
    if &xprime == c.p_int() && &yprime == c.p_ext() {
        return Ok(PresumedKind::FormalConcept);
    }
    if is_preconcept(lat, c)? {
        return Ok(PresumedKind::Preconcept);
    }
    Ok(PresumedKind::Degenerated)
}

/// L(c) = (X″, X′).
pub fn lower_approx(lat: &ConceptLattice, c: &PresumedConcept) -> Result<usize> {
    let extent = lat.context().closure_objects(c.p_ext())?;
    lat.concept_by_extent(&extent)
        .ok_or_else(|| LatqlError::Invariant("closure not in lattice".into()))
}

/// H(c) = (Y′, Y″).
pub fn upper_approx(lat: &ConceptLattice, c: &PresumedConcept) -> Result<usize> {
    let extent = lat.context().derive_attributes(c.p_int())?;
    lat.concept_by_extent(&extent)
        .ok_or_else(|| LatqlError::Invariant("derivation not in lattice".into()))
}

/// Bundle kind, bounds and the interval [L(c), H(c)].
pub fn approx_interval(lat: &ConceptLattice, c: &PresumedConcept) -> Result<ApproxResult> {
    let kind = classify(lat, c)?;
    let lower = lower_approx(lat, c)?;
    let upper = upper_approx(lat, c)?;
    let interval = lat.interval(lower, upper)?;
    Ok(ApproxResult {
        kind,
        lower,
        upper,
        interval,
    })
}

/// π_c(A, B) = (f₂(B ∩ Y), B ∩ Y).
pub fn projective_repr(
    lat: &ConceptLattice,
    c: &PresumedConcept,
    target: usize,
) -> Result<(ObjectSet, AttributeSet)> {
    let b = lat.concept(target)?.intent().intersection(c.p_int());
    let a = lat.context().derive_attributes(&b)?;
    Ok((a, b))
}

/// ξ_c(A, B) = (A ∩ X, f₁(A ∩ X)).
pub fn selective_repr(
    lat: &ConceptLattice,
    c: &PresumedConcept,
    target: usize,
) -> Result<(ObjectSet, AttributeSet)> {
    let a = lat.concept(target)?.extent().intersection(c.p_ext());
    let b = lat.context().derive_objects(&a)?;
    Ok((a, b))
}

/// π_c⁻¹(c): all concepts whose intent contains Y — the principal ideal ↓H(c).
pub fn projective_fiber(lat: &ConceptLattice, c: &PresumedConcept) -> Result<ConceptRegion> {
    let members = (0..lat.len())
        .filter(|&id| c.p_int().is_subset(lat.concepts()[id].intent()))
        .collect();
    Ok(ConceptRegion::new(members, RegionShape::OrderIdeal))
}

/// ξ_c⁻¹(c): all concepts whose extent contains X — the principal filter ↑L(c).
pub fn selective_fiber(lat: &ConceptLattice, c: &PresumedConcept) -> Result<ConceptRegion> {
    let members = (0..lat.len())
        .filter(|&id| c.p_ext().is_subset(lat.concepts()[id].extent()))
        .collect();
    Ok(ConceptRegion::new(members, RegionShape::OrderFilter))
}
