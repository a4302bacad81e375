//! Concept lattices: enumeration of all formal concepts of a context, their
//! order and covering relation, object/attribute concepts, joins/meets, and
//! order-theoretic regions (ideals, filters, intervals).

use std::collections::BTreeMap;

use crate::bits::{AttributeSet, IdxSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::{LatqlError, Result};

/// A formal concept: a pair of mutually-derived closed sets, with a stable
/// id within its lattice (lectic enumeration order of intents).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concept {
    id: usize,
    extent: ObjectSet,
    intent: AttributeSet,
}

impl Concept {
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn extent(&self) -> &ObjectSet {
        &self.extent
    }

    pub fn intent(&self) -> &AttributeSet {
        &self.intent
    }
}

#[derive(Clone, Debug)]
pub struct ConceptLattice {
    context: FormalContext,
    concepts: Vec<Concept>,
    extent_index: BTreeMap<ObjectSet, usize>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    top: usize,
    bottom: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionShape {
    OrderIdeal,
    OrderFilter,
    LatticeIdeal,
    Interval,
    Arbitrary,
}

/// A set of concepts of one lattice together with a shape tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptRegion {
    members: Vec<usize>,
    shape: RegionShape,
}

impl ConceptRegion {
    pub fn new(mut members: Vec<usize>, shape: RegionShape) -> Self {
        members.sort_unstable();
        members.dedup();
        ConceptRegion { members, shape }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn shape(&self) -> RegionShape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.binary_search(&id).is_ok()
    }
}

/// Lectic successor: the next closed intent after `a`, or None past M.
fn next_intent(ctx: &FormalContext, a: &AttributeSet) -> Option<AttributeSet> {
    let m = ctx.attribute_count();
    let mut a = a.clone();
    for i in (0..m).rev() {
        if a.contains(i) {
            a.remove(i);
        } else {
            let mut candidate = a.clone();
            candidate.insert(i);
            let b = ctx
                .closure_attributes(&candidate)
                .expect("set belongs to ctx");
            // accept iff closing added nothing below i
            let new_below_i = b.iter().take_while(|&j| j < i).any(|j| !a.contains(j));
            if !new_below_i {
                return Some(b);
            }
        }
    }
    None
}

/// Enumerate every formal concept exactly once; ids follow the lectic order
/// of intents, so output is deterministic.
pub fn build_lattice(ctx: &FormalContext) -> ConceptLattice {
    let mut concepts = Vec::new();
    let mut extent_index = BTreeMap::new();
    let mut intent = ctx
        .closure_attributes(&ctx.empty_attributes())
        .expect("own set");
    loop {
        let extent = ctx.derive_attributes(&intent).expect("own set");
        let id = concepts.len();
        extent_index.insert(extent.clone(), id);
        concepts.push(Concept { id, extent, intent: intent.clone() });
        match next_intent(ctx, &intent) {
            Some(next) => intent = next,
            None => break,
        }
    }

    let n = concepts.len();
    let mut lower_covers = vec![Vec::new(); n];
    let mut upper_covers = vec![Vec::new(); n];
    for c in 0..n {
        // lower covers of c: maximal proper sub-extents
        let below: Vec<usize> = (0..n)
            .filter(|&d| d != c && concepts[d].extent.is_subset(&concepts[c].extent))
            .collect();
        for &d in &below {
            let maximal = below.iter().all(|&e| {
                e == d || !concepts[d].extent.is_subset(&concepts[e].extent)
                    || concepts[e].extent == concepts[d].extent
            });
            if maximal {
                lower_covers[c].push(d);
                upper_covers[d].push(c);
            }
        }
    }
    for v in lower_covers.iter_mut().chain(upper_covers.iter_mut()) {
        v.sort_unstable();
    }

    let top = extent_index[&ctx
        .closure_objects(&ctx.full_objects())
        .expect("own set")];
    let bottom_extent = ctx
        .derive_attributes(&ctx.full_attributes())
        .expect("own set");
    let bottom = extent_index[&bottom_extent];

    ConceptLattice {
        context: ctx.clone(),
        concepts,
        extent_index,
        lower_covers,
        upper_covers,
        top,
        bottom,
    }
}

impl ConceptLattice {
    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a lattice always has at least one concept
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, id: usize) -> Result<&Concept> {
        self.concepts
            .get(id)
            .ok_or(LatqlError::ForeignConcept { id })
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// c ≤ d ⟺ ext(c) ⊆ ext(d).
    pub fn le(&self, c: usize, d: usize) -> bool {
        self.concepts[c].extent.is_subset(&self.concepts[d].extent)
    }

    pub fn lower_covers(&self, c: usize) -> &[usize] {
        &self.lower_covers[c]
    }

    pub fn upper_covers(&self, c: usize) -> &[usize] {
        &self.upper_covers[c]
    }

    /// Concept with the given extent, if closed.
    pub fn concept_by_extent(&self, extent: &ObjectSet) -> Option<usize> {
        self.extent_index.get(extent).copied()
    }

    /// γg := (g″, g′), the object concept.
    pub fn gamma(&self, g: &str) -> Result<&Concept> {
        let gi = self
            .context
            .object_index(g)
            .ok_or_else(|| LatqlError::UnknownName {
                kind: "object",
                name: g.to_string(),
            })?;
        let single = IdxSet::from_indices(self.context.object_count(), [gi]).unwrap();
        let extent = self.context.closure_objects(&single)?;
        let id = self.extent_index[&extent];
        Ok(&self.concepts[id])
    }

    /// μm := (m′, m″), the attribute concept.
    pub fn mu(&self, m: &str) -> Result<&Concept> {
        let mi = self
            .context
            .attribute_index(m)
            .ok_or_else(|| LatqlError::UnknownName {
                kind: "attribute",
                name: m.to_string(),
            })?;
        self.mu_by_index(mi)
    }

    pub fn mu_by_index(&self, mi: usize) -> Result<&Concept> {
        if mi >= self.context.attribute_count() {
            return Err(LatqlError::OutOfRange {
                kind: "attribute",
                index: mi,
                domain: self.context.attribute_count(),
            });
        }
        let single = IdxSet::from_indices(self.context.attribute_count(), [mi]).unwrap();
        let extent = self.context.derive_attributes(&single)?;
        let id = self.extent_index[&extent];
        Ok(&self.concepts[id])
    }

    pub fn gamma_by_index(&self, gi: usize) -> Result<&Concept> {
        if gi >= self.context.object_count() {
            return Err(LatqlError::OutOfRange {
                kind: "object",
                index: gi,
                domain: self.context.object_count(),
            });
        }
        let single = IdxSet::from_indices(self.context.object_count(), [gi]).unwrap();
        let extent = self.context.closure_objects(&single)?;
        Ok(&self.concepts[self.extent_index[&extent]])
    }

    fn check(&self, c: usize) -> Result<()> {
        if c >= self.concepts.len() {
            return Err(LatqlError::ForeignConcept { id: c });
        }
        Ok(())
    }

    /// (A, B) ∨ (C, D) = ((A ∪ C)″, B ∩ D).
    pub fn join(&self, c: usize, d: usize) -> Result<usize> {
        self.check(c)?;
        self.check(d)?;
        let extent = self
            .context
            .closure_objects(&self.concepts[c].extent.union(&self.concepts[d].extent))?;
        Ok(self.extent_index[&extent])
    }

    /// (A, B) ∧ (C, D) = (A ∩ C, (B ∪ D)″).
    pub fn meet(&self, c: usize, d: usize) -> Result<usize> {
        self.check(c)?;
        self.check(d)?;
        let extent = self.concepts[c].extent.intersection(&self.concepts[d].extent);
        self.extent_index
            .get(&extent)
            .copied()
            .ok_or_else(|| LatqlError::Invariant("meet extent not closed".into()))
    }

    /// Smallest downward-closed set containing the seeds.
    pub fn order_ideal(&self, seeds: &[usize]) -> Result<ConceptRegion> {
        for &s in seeds {
            self.check(s)?;
        }
        let members = (0..self.concepts.len())
            .filter(|&x| seeds.iter().any(|&s| self.le(x, s)))
            .collect();
        Ok(ConceptRegion::new(members, RegionShape::OrderIdeal))
    }

    /// Smallest upward-closed set containing the seeds.
    pub fn order_filter(&self, seeds: &[usize]) -> Result<ConceptRegion> {
        for &s in seeds {
            self.check(s)?;
        }
        let members = (0..self.concepts.len())
            .filter(|&x| seeds.iter().any(|&s| self.le(s, x)))
            .collect();
        Ok(ConceptRegion::new(members, RegionShape::OrderFilter))
    }

    /// Smallest downward-closed, join-closed set containing the seeds.
    pub fn lattice_ideal(&self, seeds: &[usize]) -> Result<ConceptRegion> {
        for &s in seeds {
            self.check(s)?;
        }
        if seeds.is_empty() {
            return Ok(ConceptRegion::new(vec![], RegionShape::LatticeIdeal));
        }
        // the join of all seeds dominates every join-combination, so the
        // result is the principal ideal below it; computed as a fixpoint to
        // stay faithful to the generating procedure
        let mut members: Vec<usize> = self.order_ideal(seeds)?.members().to_vec();
        loop {
            let mut grew = false;
            let snapshot = members.clone();
            for (i, &a) in snapshot.iter().enumerate() {
                for &b in &snapshot[i + 1..] {
                    let j = self.join(a, b)?;
                    if !members.contains(&j) {
                        members.push(j);
                        grew = true;
                    }
                }
            }
            let down: Vec<usize> = (0..self.concepts.len())
                .filter(|&x| members.iter().any(|&s| self.le(x, s)))
                .collect();
            if down.len() != members.len() {
                grew = true;
            }
            members = down;
            if !grew {
                break;
            }
        }
        Ok(ConceptRegion::new(members, RegionShape::LatticeIdeal))
    }

    /// {x | lo ≤ x ≤ hi}; empty when lo ≰ hi.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<ConceptRegion> {
        self.check(lo)?;
        self.check(hi)?;
        let members = (0..self.concepts.len())
            .filter(|&x| self.le(lo, x) && self.le(x, hi))
            .collect();
        Ok(ConceptRegion::new(members, RegionShape::Interval))
    }
}
