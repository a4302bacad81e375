//! Relational-algebra analogues on contexts and lattices: selection,
//! projection, apposition/subposition/glue, weak negation/opposition and the
//! restriction homomorphism onto a sub-context.

use crate::bits::{AttributeSet, IdxSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::{LatqlError, Result};
use crate::lattice::{build_lattice, ConceptLattice};

/// A selection condition. Negation applies to atoms only, by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    /// The attribute (possibly a scaled `attr:value` name) must be in the intent.
    Atom(String),
    /// No object of the extent has the attribute.
    Not(String),
    And(Vec<Condition>),
    Or(Vec<Condition>),
}

impl Condition {
    fn atoms(&self) -> Vec<&str> {
        match self {
            Condition::Atom(a) | Condition::Not(a) => vec![a],
            Condition::And(cs) | Condition::Or(cs) => {
                cs.iter().flat_map(|c| c.atoms()).collect()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionShape {
    OrderIdeal,
    SubHierarchy,
}

#[derive(Clone, Debug)]
pub struct SelectionResult {
    members: Vec<usize>,
    shape: SelectionShape,
    /// For negated-atom selections: whether G ∖ a′ was closed.
    complement_closed: Option<bool>,
}

impl SelectionResult {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn shape(&self) -> SelectionShape {
        self.shape
    }

    pub fn complement_closed(&self) -> Option<bool> {
        self.complement_closed
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.binary_search(&id).is_ok()
    }
}

fn atom_index(ctx: &FormalContext, a: &str) -> Result<usize> {
    ctx.attribute_index(a).ok_or_else(|| LatqlError::UnknownName {
        kind: "attribute",
        name: a.to_string(),
    })
}

/// Does the condition hold on a concept? Atoms test intent membership; a
/// negated atom requires the extent to avoid the attribute's extent entirely.
fn holds(lat: &ConceptLattice, id: usize, cond: &Condition) -> Result<bool> {
    let ctx = lat.context();
    let c = lat.concept(id)?;
    Ok(match cond {
        Condition::Atom(a) => c.intent().contains(atom_index(ctx, a)?),
        Condition::Not(a) => {
            let mi = atom_index(ctx, a)?;
            let aprime = ctx
                .derive_attributes(&IdxSet::from_indices(ctx.attribute_count(), [mi]).unwrap())?;
            c.extent().is_disjoint(&aprime)
        }
        Condition::And(cs) => {
            for sub in cs {
                if !holds(lat, id, sub)? {
                    return Ok(false);
                }
            }
            true
        }
        Condition::Or(cs) => {
            for sub in cs {
                if holds(lat, id, sub)? {
                    return Ok(true);
                }
            }
            false
        }
    })
}

fn is_downward_closed(lat: &ConceptLattice, members: &[usize]) -> bool {
    (0..lat.len()).all(|y| members.contains(&y) || !members.iter().any(|&x| lat.le(y, x)))
}

fn only_atoms(cs: &[Condition]) -> Option<Vec<&str>> {
    cs.iter()
        .map(|c| match c {
            Condition::Atom(a) => Some(a.as_str()),
            _ => None,
        })
        .collect()
}

/// Selection on a lattice. Pure atomic/conjunctive/disjunctive conditions use
/// the order-ideal closed forms; a negated atom uses the extent-avoidance
/// definition with a closedness flag; mixed trees fall back to the
/// definition-level filter with the shape computed afterwards.
pub fn select(lat: &ConceptLattice, cond: &Condition) -> Result<SelectionResult> {
    let ctx = lat.context();
    for a in cond.atoms() {
        atom_index(ctx, a)?;
    }
    let (mut members, shape, complement_closed) = match cond {
        Condition::Atom(a) => {
            let mu = lat.mu(a)?.id();
            (
                lat.order_ideal(&[mu])?.members().to_vec(),
                SelectionShape::OrderIdeal,
                None,
            )
        }
        Condition::And(cs) if only_atoms(cs).is_some() => {
            let atoms = only_atoms(cs).unwrap();
            let mut acc = lat.top();
            for a in atoms {
                acc = lat.meet(acc, lat.mu(a)?.id())?;
            }
            (
                lat.order_ideal(&[acc])?.members().to_vec(),
                SelectionShape::OrderIdeal,
                None,
            )
        }
        Condition::Or(cs) if only_atoms(cs).is_some() => {
            let atoms = only_atoms(cs).unwrap();
            let mut seeds = Vec::new();
            for a in atoms {
                seeds.push(lat.mu(a)?.id());
            }
            (
                lat.order_ideal(&seeds)?.members().to_vec(),
                SelectionShape::OrderIdeal,
                None,
            )
        }
        Condition::Not(a) => {
            let mi = atom_index(ctx, a)?;
            let aprime = ctx
                .derive_attributes(&IdxSet::from_indices(ctx.attribute_count(), [mi]).unwrap())?;
            let members: Vec<usize> = (0..lat.len())
                .filter(|&id| lat.concepts()[id].extent().is_disjoint(&aprime))
                .collect();
            let complement = aprime.complement();
            let closed = ctx.closure_objects(&complement)? == complement;
            let shape = if closed {
                SelectionShape::OrderIdeal
            } else {
                SelectionShape::SubHierarchy
            };
            (members, shape, Some(closed))
        }
        _ => {
            let mut members = Vec::new();
            for id in 0..lat.len() {
                if holds(lat, id, cond)? {
                    members.push(id);
                }
            }
            let shape = if is_downward_closed(lat, &members) {
                SelectionShape::OrderIdeal
            } else {
                SelectionShape::SubHierarchy
            };
            (members, shape, None)
        }
    };
    members.sort_unstable();
    Ok(SelectionResult {
        members,
        shape,
        complement_closed,
    })
}

/// ((G ∖ A)″, (G ∖ A)′).
pub fn weak_negation(lat: &ConceptLattice, c: usize) -> Result<usize> {
    let ctx = lat.context();
    let complement = lat.concept(c)?.extent().complement();
    let extent = ctx.closure_objects(&complement)?;
    lat.concept_by_extent(&extent)
        .ok_or_else(|| LatqlError::Invariant("closure not in lattice".into()))
}

/// ((M ∖ B)′, (M ∖ B)″).
pub fn weak_opposition(lat: &ConceptLattice, c: usize) -> Result<usize> {
    let ctx = lat.context();
    let complement = lat.concept(c)?.intent().complement();
    let extent = ctx.derive_attributes(&complement)?;
    lat.concept_by_extent(&extent)
        .ok_or_else(|| LatqlError::Invariant("derivation not in lattice".into()))
}

#[derive(Clone, Debug)]
pub struct ProjectionResult {
    /// The lattice of the sub-context (G, Y, I ∩ (G × Y)).
    lattice: ConceptLattice,
    /// Parent concept id → id of the greatest concept of its Y-equivalence class.
    representative: Vec<usize>,
    /// Parent concept id → concept id in the projected lattice.
    projected: Vec<usize>,
}

impl ProjectionResult {
    pub fn lattice(&self) -> &ConceptLattice {
        &self.lattice
    }

    pub fn representative(&self) -> &[usize] {
        &self.representative
    }

    pub fn projected(&self) -> &[usize] {
        &self.projected
    }
}

/// Project a lattice on an attribute subset Y.
pub fn project(lat: &ConceptLattice, y: &AttributeSet) -> Result<ProjectionResult> {
    let ctx = lat.context();
    if y.domain() != ctx.attribute_count() {
        return Err(LatqlError::ForeignSet {
            got: y.domain(),
            expected: ctx.attribute_count(),
        });
    }
    let sub = ctx.subcontext(&ctx.full_objects(), y)?;
    let sub_lat = build_lattice(&sub);
    let y_positions: Vec<usize> = y.iter().collect();

    let mut representative = Vec::with_capacity(lat.len());
    let mut projected = Vec::with_capacity(lat.len());
    for c in lat.concepts() {
        let z = c.intent().intersection(y);
        // greatest Y-equivalent concept: (Z′, Z″) in the parent
        let rep_extent = ctx.derive_attributes(&z)?;
        representative.push(
            lat.concept_by_extent(&rep_extent)
                .ok_or_else(|| LatqlError::Invariant("representative not closed".into()))?,
        );
        // image concept: close Z inside the sub-context
        let z_sub: AttributeSet = IdxSet::from_indices(
            y_positions.len(),
            z.iter().map(|j| y_positions.iter().position(|&p| p == j).unwrap()),
        )
        .unwrap();
        let sub_extent = sub.derive_attributes(&z_sub)?;
        projected.push(
            sub_lat
                .concept_by_extent(&sub_extent)
                .ok_or_else(|| LatqlError::Invariant("projected extent not closed".into()))?,
        );
    }
    Ok(ProjectionResult {
        lattice: sub_lat,
        representative,
        projected,
    })
}

fn renamed_union(left: &[String], right: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(left.len() + right.len());
    for n in left {
        if right.contains(n) {
            out.push(format!("{n}#1"));
        } else {
            out.push(n.clone());
        }
    }
    for n in right {
        if left.contains(n) {
            out.push(format!("{n}#2"));
        } else {
            out.push(n.clone());
        }
    }
    out
}

/// Side-by-side combination of two contexts over the same objects.
pub fn apposition(k1: &FormalContext, k2: &FormalContext) -> Result<FormalContext> {
    if k1.objects() != k2.objects() {
        return Err(LatqlError::AlignmentError { kind: "object" });
    }
    let attributes = renamed_union(k1.attributes(), k2.attributes());
    let incidence = (0..k1.object_count())
        .map(|g| {
            (0..k1.attribute_count())
                .map(|m| k1.incident(g, m))
                .chain((0..k2.attribute_count()).map(|m| k2.incident(g, m)))
                .collect()
        })
        .collect();
    FormalContext::new(k1.objects().to_vec(), attributes, incidence)
}

/// Stacked combination of two contexts over the same attributes.
pub fn subposition(k1: &FormalContext, k2: &FormalContext) -> Result<FormalContext> {
    if k1.attributes() != k2.attributes() {
        return Err(LatqlError::AlignmentError { kind: "attribute" });
    }
    let objects = renamed_union(k1.objects(), k2.objects());
    let incidence = (0..k1.object_count())
        .map(|g| (0..k1.attribute_count()).map(|m| k1.incident(g, m)).collect())
        .chain(
            (0..k2.object_count())
                .map(|g| (0..k2.attribute_count()).map(|m| k2.incident(g, m)).collect()),
        )
        .collect();
    FormalContext::new(objects, k1.attributes().to_vec(), incidence)
}

/// Union of two contexts that agree on their shared rectangle; cross cells
/// (object of one only, attribute of the other only) are false.
pub fn glue(k1: &FormalContext, k2: &FormalContext) -> Result<FormalContext> {
    for (g1, g) in k1.objects().iter().enumerate() {
        if let Some(g2) = k2.object_index(g) {
            for (m1, m) in k1.attributes().iter().enumerate() {
                if let Some(m2) = k2.attribute_index(m) {
                    if k1.incident(g1, m1) != k2.incident(g2, m2) {
                        return Err(LatqlError::GlueConflict {
                            object: g.clone(),
                            attribute: m.clone(),
                        });
                    }
                }
            }
        }
    }
    let mut objects = k1.objects().to_vec();
    objects.extend(k2.objects().iter().filter(|g| k1.object_index(g).is_none()).cloned());
    let mut attributes = k1.attributes().to_vec();
    attributes.extend(
        k2.attributes()
            .iter()
            .filter(|m| k1.attribute_index(m).is_none())
            .cloned(),
    );
    let incidence = objects
        .iter()
        .map(|g| {
            attributes
                .iter()
                .map(|m| {
                    let in1 = k1
                        .object_index(g)
                        .zip(k1.attribute_index(m))
                        .is_some_and(|(gi, mi)| k1.incident(gi, mi));
                    let in2 = k2
                        .object_index(g)
                        .zip(k2.attribute_index(m))
                        .is_some_and(|(gi, mi)| k2.incident(gi, mi));
                    in1 || in2
                })
                .collect()
        })
        .collect();
    FormalContext::new(objects, attributes, incidence)
}

/// Per-concept outcome of restricting a parent concept to (H, N).
#[derive(Clone, Debug)]
pub struct RestrictionEntry {
    /// A ∩ H, as an object set of the sub-context.
    pub extent: ObjectSet,
    /// B ∩ N, as an attribute set of the sub-context.
    pub intent: AttributeSet,
    /// Whether (A ∩ H, B ∩ N) is a concept of the sub-context.
    pub is_concept: bool,
    /// Its id in the sub-lattice when it is one.
    pub sub_id: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub sub_lattice: ConceptLattice,
    /// Indexed by parent concept id.
    pub entries: Vec<RestrictionEntry>,
    /// All restrictions landed on sub-context concepts.
    pub compatible: bool,
    /// Checked only when compatible.
    pub surjective: Option<bool>,
    pub preserves_joins: Option<bool>,
    pub preserves_meets: Option<bool>,
}

/// Restrict every concept of `lat` to the sub-context (H, N); report whether
/// the induced map is a surjective complete lattice homomorphism.
pub fn restrict_concepts(
    lat: &ConceptLattice,
    h: &ObjectSet,
    n: &AttributeSet,
) -> Result<RestrictionReport> {
    let ctx = lat.context();
    let sub = ctx.subcontext(h, n)?;
    let sub_lat = build_lattice(&sub);
    let h_pos: Vec<usize> = h.iter().collect();
    let n_pos: Vec<usize> = n.iter().collect();

    let mut entries = Vec::with_capacity(lat.len());
    for c in lat.concepts() {
        let extent: ObjectSet = IdxSet::from_indices(
            h_pos.len(),
            h_pos
                .iter()
                .enumerate()
                .filter(|(_, &g)| c.extent().contains(g))
                .map(|(i, _)| i),
        )
        .unwrap();
        let intent: AttributeSet = IdxSet::from_indices(
            n_pos.len(),
            n_pos
                .iter()
                .enumerate()
                .filter(|(_, &m)| c.intent().contains(m))
                .map(|(i, _)| i),
        )
        .unwrap();
        let sub_id = sub_lat
            .concept_by_extent(&extent)
            .filter(|&id| sub_lat.concepts()[id].intent() == &intent);
        entries.push(RestrictionEntry {
            extent,
            intent,
            is_concept: sub_id.is_some(),
            sub_id,
        });
    }

    let compatible = entries.iter().all(|e| e.is_concept);
    let (surjective, preserves_joins, preserves_meets) = if compatible {
        let image: std::collections::BTreeSet<usize> =
            entries.iter().filter_map(|e| e.sub_id).collect();
        let surjective = image.len() == sub_lat.len();
        let pi = |c: usize| entries[c].sub_id.unwrap();
        let mut joins_ok = true;
        let mut meets_ok = true;
        for c in 0..lat.len() {
            for d in c..lat.len() {
                joins_ok &= pi(lat.join(c, d)?) == sub_lat.join(pi(c), pi(d))?;
                meets_ok &= pi(lat.meet(c, d)?) == sub_lat.meet(pi(c), pi(d))?;
            }
        }
        (Some(surjective), Some(joins_ok), Some(meets_ok))
    } else {
        (None, None, None)
    };

    Ok(RestrictionReport {
        sub_lattice: sub_lat,
        entries,
        compatible,
        surjective,
        preserves_joins,
        preserves_meets,
    })
}

/// Embed a sub-context concept u = (U, V) into the parent lattice as the pair
/// (φ₁u, φ₂u) = ((U″, U′), (V′, V″)); every parent concept between the two
/// restricts back to u.
pub fn embed_subconcept(
    parent: &ConceptLattice,
    sub: &ConceptLattice,
    u: usize,
) -> Result<(usize, usize)> {
    let pc = parent.context();
    let u = sub.concept(u)?;
    let sc = sub.context();
    let u_names: Vec<String> = sc.object_names(u.extent());
    let v_names: Vec<String> = sc.attribute_names(u.intent());
    let u_parent = pc.object_set(&u_names.iter().map(String::as_str).collect::<Vec<_>>())?;
    let v_parent = pc.attribute_set(&v_names.iter().map(String::as_str).collect::<Vec<_>>())?;
    let phi1_extent = pc.closure_objects(&u_parent)?;
    let phi2_extent = pc.derive_attributes(&v_parent)?;
    let phi1 = parent
        .concept_by_extent(&phi1_extent)
        .ok_or_else(|| LatqlError::Invariant("phi1 extent not closed".into()))?;
    let phi2 = parent
        .concept_by_extent(&phi2_extent)
        .ok_or_else(|| LatqlError::Invariant("phi2 extent not closed".into()))?;
    Ok((phi1, phi2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::tests::kf6;

    fn lat() -> ConceptLattice {
        build_lattice(&kf6())
    }

    #[test]
    fn select_atomic_is_principal_ideal() {
        let lat = lat();
        let r = select(&lat, &Condition::Atom("m4".into())).unwrap();
        let m4 = lat.mu("m4").unwrap().id();
        assert_eq!(r.members(), lat.order_ideal(&[m4]).unwrap().members());
        assert_eq!(r.shape(), SelectionShape::OrderIdeal);
        assert_eq!(r.members().len(), 4);
    }

    #[test]
    fn select_conjunction() {
        let lat = lat();
        let r = select(
            &lat,
            &Condition::And(vec![Condition::Atom("m3".into()), Condition::Atom("m4".into())]),
        )
        .unwrap();
        let g1 = lat.gamma("g1").unwrap().id();
        assert_eq!(r.members(), lat.order_ideal(&[g1]).unwrap().members());
        assert_eq!(r.members().len(), 2);
    }

    #[test]
    fn select_negated_atom() {
        let lat = lat();
        let r = select(&lat, &Condition::Not("m4".into())).unwrap();
        let g3 = lat.gamma("g3").unwrap().id();
        let mut expected = vec![g3, lat.bottom()];
        expected.sort_unstable();
        assert_eq!(r.members(), expected.as_slice());
        assert_eq!(r.complement_closed(), Some(true));
        assert_eq!(r.shape(), SelectionShape::OrderIdeal);
    }

    #[test]
    fn select_matches_definition_filter() {
        let lat = lat();
        for cond in [
            Condition::Atom("m3".into()),
            Condition::And(vec![Condition::Atom("m3".into()), Condition::Atom("m4".into())]),
            Condition::Or(vec![Condition::Atom("m1".into()), Condition::Atom("m2".into())]),
        ] {
            let r = select(&lat, &cond).unwrap();
            let by_filter: Vec<usize> = (0..lat.len())
                .filter(|&id| holds(&lat, id, &cond).unwrap())
                .collect();
            assert_eq!(r.members(), by_filter.as_slice(), "{cond:?}");
        }
    }

    #[test]
    fn select_unknown_attribute() {
        let lat = lat();
        assert!(select(&lat, &Condition::Atom("zzz".into())).is_err());
    }

    #[test]
    fn weak_negation_examples() {
        let lat = lat();
        let g3 = lat.gamma("g3").unwrap().id();
        let m4 = lat.mu("m4").unwrap().id();
        assert_eq!(weak_negation(&lat, g3).unwrap(), m4);
        assert_eq!(weak_negation(&lat, lat.bottom()).unwrap(), lat.top());
        assert_eq!(weak_negation(&lat, lat.top()).unwrap(), lat.bottom());
    }

    #[test]
    fn weak_opposition_examples() {
        let lat = lat();
        let m4 = lat.mu("m4").unwrap().id();
        assert_eq!(weak_opposition(&lat, m4).unwrap(), lat.bottom());
        assert_eq!(weak_opposition(&lat, lat.bottom()).unwrap(), lat.top());
        // top's intent is empty here, so its opposition closes all of M
        assert_eq!(weak_opposition(&lat, lat.top()).unwrap(), lat.bottom());
    }

    #[test]
    fn project_kf6_on_m3_m4() {
        let k = kf6();
        let lat = build_lattice(&k);
        let y = k.attribute_set(&["m3", "m4"]).unwrap();
        let p = project(&lat, &y).unwrap();
        assert_eq!(p.lattice().len(), 4);
        let extents: Vec<Vec<String>> = p
            .lattice()
            .concepts()
            .iter()
            .map(|c| p.lattice().context().object_names(c.extent()))
            .collect();
        assert!(extents.contains(&vec!["g1".to_string(), "g2".into(), "g3".into()]));
        assert!(extents.contains(&vec!["g1".to_string(), "g3".into()]));
        assert!(extents.contains(&vec!["g1".to_string(), "g2".into()]));
        assert!(extents.contains(&vec!["g1".to_string()]));
    }

    #[test]
    fn project_full_is_identity() {
        let k = kf6();
        let lat = build_lattice(&k);
        let p = project(&lat, &k.full_attributes()).unwrap();
        assert_eq!(p.lattice().len(), lat.len());
        for c in 0..lat.len() {
            assert_eq!(p.representative()[c], c);
        }
    }

    #[test]
    fn representatives_are_greatest_and_meet_closed() {
        let k = kf6();
        let lat = build_lattice(&k);
        let y = k.attribute_set(&["m3", "m4"]).unwrap();
        let p = project(&lat, &y).unwrap();
        for c in 0..lat.len() {
            let rep = p.representative()[c];
            // same Y-restricted intent, and at least as large
            assert_eq!(
                lat.concepts()[rep].intent().intersection(&y),
                lat.concepts()[c].intent().intersection(&y)
            );
            assert!(lat.le(c, rep));
        }
        let reps: std::collections::BTreeSet<usize> =
            p.representative().iter().copied().collect();
        for &a in &reps {
            for &b in &reps {
                assert!(reps.contains(&lat.meet(a, b).unwrap()));
            }
        }
    }

    #[test]
    fn apposition_of_column_split_reconstitutes() {
        let k = kf6();
        let left = k
            .subcontext(&k.full_objects(), &k.attribute_set(&["m1", "m2"]).unwrap())
            .unwrap();
        let right = k
            .subcontext(&k.full_objects(), &k.attribute_set(&["m3", "m4"]).unwrap())
            .unwrap();
        assert_eq!(apposition(&left, &right).unwrap(), k);
        let empty = k.subcontext(&k.full_objects(), &k.empty_attributes()).unwrap();
        assert_eq!(apposition(&k, &empty).unwrap(), k);
    }

    #[test]
    fn apposition_object_mismatch() {
        let k = kf6();
        let t = k.transpose();
        assert!(matches!(
            apposition(&k, &t),
            Err(LatqlError::AlignmentError { .. })
        ));
    }

    #[test]
    fn subposition_of_row_split_reconstitutes() {
        let k = kf6();
        let top = k
            .subcontext(&k.object_set(&["g1", "g2"]).unwrap(), &k.full_attributes())
            .unwrap();
        let bottom = k
            .subcontext(&k.object_set(&["g3"]).unwrap(), &k.full_attributes())
            .unwrap();
        assert_eq!(subposition(&top, &bottom).unwrap(), k);
        let empty = k.subcontext(&k.empty_objects(), &k.full_attributes()).unwrap();
        assert_eq!(subposition(&k, &empty).unwrap(), k);
    }

    #[test]
    fn glue_identity_and_disjoint() {
        let k = kf6();
        assert_eq!(glue(&k, &k).unwrap(), k);

        let other = FormalContext::new(
            vec!["h1".into()],
            vec!["n1".into()],
            vec![vec![true]],
        )
        .unwrap();
        let glued = glue(&k, &other).unwrap();
        assert_eq!(glued.object_count(), 4);
        assert_eq!(glued.attribute_count(), 5);
        // off-blocks are false
        assert!(!glued.incident(0, 4));
        assert!(!glued.incident(3, 0));
        assert!(glued.incident(3, 4));
    }

    #[test]
    fn glue_overlapping_fragments() {
        let k = kf6();
        // fragment 1: rows g1,g2 over m1..m3; fragment 2: rows g1,g3 over m3,m4
        let f1 = k
            .subcontext(
                &k.object_set(&["g1", "g2"]).unwrap(),
                &k.attribute_set(&["m1", "m2", "m3"]).unwrap(),
            )
            .unwrap();
        let f2 = k
            .subcontext(
                &k.object_set(&["g1", "g3"]).unwrap(),
                &k.attribute_set(&["m3", "m4"]).unwrap(),
            )
            .unwrap();
        let glued = glue(&f1, &f2).unwrap();
        assert_eq!(glued.object_count(), 3);
        assert_eq!(glued.attribute_count(), 4);
        // shared cell g1/m3 agreed; cross cell g2/m4 filled false even though
        // true in the original context
        let g2 = glued.object_index("g2").unwrap();
        let m4 = glued.attribute_index("m4").unwrap();
        assert!(!glued.incident(g2, m4));
    }

    #[test]
    fn glue_conflict_reported() {
        let a = FormalContext::new(vec!["g".into()], vec!["m".into()], vec![vec![true]]).unwrap();
        let b = FormalContext::new(vec!["g".into()], vec!["m".into()], vec![vec![false]]).unwrap();
        match glue(&a, &b) {
            Err(LatqlError::GlueConflict { object, attribute }) => {
                assert_eq!(object, "g");
                assert_eq!(attribute, "m");
            }
            other => panic!("expected conflict, got {other:?}"),
        }
    }

    #[test]
    fn restrict_to_full_is_identity() {
        let k = kf6();
        let lat = build_lattice(&k);
        let report = restrict_concepts(&lat, &k.full_objects(), &k.full_attributes()).unwrap();
        assert!(report.compatible);
        assert_eq!(report.surjective, Some(true));
        assert_eq!(report.preserves_joins, Some(true));
        assert_eq!(report.preserves_meets, Some(true));
        for (c, e) in report.entries.iter().enumerate() {
            assert_eq!(e.sub_id, Some(report.sub_lattice.concept_by_extent(lat.concepts()[c].extent()).unwrap()));
        }
    }

    #[test]
    fn restrict_kf6_to_quarter() {
        let k = kf6();
        let lat = build_lattice(&k);
        let h = k.object_set(&["g1", "g2"]).unwrap();
        let n = k.attribute_set(&["m3", "m4"]).unwrap();
        let report = restrict_concepts(&lat, &h, &n).unwrap();
        // verdict must agree with a direct membership test of every
        // restricted pair against the brute-force sub-context lattice
        let sub = k.subcontext(&h, &n).unwrap();
        let oracle = crate::oracle::enumerate_concepts(&sub);
        let all_in = report
            .entries
            .iter()
            .all(|e| oracle.iter().any(|(x, y)| x == &e.extent && y == &e.intent));
        assert_eq!(report.compatible, all_in);
    }

    #[test]
    fn embed_subconcept_examples() {
        let k = kf6();
        let lat = build_lattice(&k);
        let h = k.object_set(&["g1", "g2"]).unwrap();
        let n = k.attribute_set(&["m3", "m4"]).unwrap();
        let sub = k.subcontext(&h, &n).unwrap();
        let sub_lat = build_lattice(&sub);
        // u = ({g1}, {m3, m4})
        let u_extent = sub.object_set(&["g1"]).unwrap();
        let u = sub_lat.concept_by_extent(&u_extent).unwrap();
        let (phi1, phi2) = embed_subconcept(&lat, &sub_lat, u).unwrap();
        let g1 = lat.gamma("g1").unwrap().id();
        assert_eq!(phi1, g1);
        assert_eq!(phi2, g1);
        assert!(lat.le(phi1, phi2));
    }

    #[test]
    fn embed_full_subcontext_top() {
        let k = kf6();
        let lat = build_lattice(&k);
        let sub = k.subcontext(&k.full_objects(), &k.full_attributes()).unwrap();
        let sub_lat = build_lattice(&sub);
        let (phi1, phi2) = embed_subconcept(&lat, &sub_lat, sub_lat.top()).unwrap();
        assert_eq!(phi1, lat.top());
        assert_eq!(phi2, lat.top());
    }
}
