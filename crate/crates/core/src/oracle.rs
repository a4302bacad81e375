//! Brute-force concept enumeration, independent of the lectic enumerator.
//!
//! Closes every attribute subset and deduplicates. Exponential in |M|, only
//! meant for cross-checking on small contexts (`--oracle` and the test
//! suites).

use std::collections::BTreeSet;

use crate::bits::{AttributeSet, IdxSet, ObjectSet};
use crate::context::FormalContext;

/// All (extent, intent) pairs, sorted by extent for a canonical order.
pub fn enumerate_concepts(ctx: &FormalContext) -> Vec<(ObjectSet, AttributeSet)> {
    let m = ctx.attribute_count();
    assert!(m < 26, "oracle is exponential; refusing |M| >= 26");
    let mut seen: BTreeSet<AttributeSet> = BTreeSet::new();
    for mask in 0u64..(1u64 << m) {
        let b: AttributeSet =
            IdxSet::from_indices(m, (0..m).filter(|i| mask & (1 << i) != 0)).unwrap();
        seen.insert(ctx.closure_attributes(&b).expect("own set"));
    }
    let mut out: Vec<(ObjectSet, AttributeSet)> = seen
        .into_iter()
        .map(|b| (ctx.derive_attributes(&b).expect("own set"), b))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Compare a built lattice against the brute-force enumeration.
/// Returns the concept-set symmetric difference sizes (missing, extra).
pub fn diff_against_lattice(
    ctx: &FormalContext,
    lattice_concepts: &[(ObjectSet, AttributeSet)],
) -> (usize, usize) {
    let oracle: BTreeSet<_> = enumerate_concepts(ctx).into_iter().collect();
    let built: BTreeSet<_> = lattice_concepts.iter().cloned().collect();
    let missing = oracle.difference(&built).count();
    let extra = built.difference(&oracle).count();
    (missing, extra)
}
