//! Attribute generalization: replace groups of attributes by generalized
//! attributes under exists / forall / threshold semantics and rebuild the
//! context.

use std::collections::HashMap;

use crate::bits::AttributeSet;
use crate::context::FormalContext;
use crate::error::{LatqlError, Result};
use crate::lattice::build_lattice;

/// Named groups of source attributes. Groups may overlap; attributes in no
/// group pass through unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttributeCover {
    groups: Vec<(String, AttributeSet)>,
}

impl AttributeCover {
    pub fn new(ctx: &FormalContext, groups: Vec<(String, Vec<String>)>) -> Result<Self> {
        let mut resolved = Vec::with_capacity(groups.len());
        let mut names_seen = std::collections::HashSet::new();
        for (name, members) in &groups {
            if members.is_empty() {
                return Err(LatqlError::InvalidCover {
                    reason: format!("group '{name}' is empty"),
                });
            }
            if !names_seen.insert(name.clone()) {
                return Err(LatqlError::InvalidCover {
                    reason: format!("duplicate group name '{name}'"),
                });
            }
            let set = ctx.attribute_set(&members.iter().map(String::as_str).collect::<Vec<_>>())?;
            resolved.push((name.clone(), set));
        }
        let cover = AttributeCover { groups: resolved };
        // pass-through attributes keep their names; group names must not collide
        for m in cover.pass_through(ctx).iter() {
            let n = &ctx.attributes()[m];
            if names_seen.contains(n) {
                return Err(LatqlError::InvalidCover {
                    reason: format!("group name '{n}' collides with a pass-through attribute"),
                });
            }
        }
        Ok(cover)
    }

    pub fn groups(&self) -> &[(String, AttributeSet)] {
        &self.groups
    }

    /// Attributes covered by no group.
    pub fn pass_through(&self, ctx: &FormalContext) -> AttributeSet {
        let mut grouped = ctx.empty_attributes();
        for (_, members) in &self.groups {
            grouped.union_with(members);
        }
        grouped.complement()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GeneralizationSemantics {
    /// gJs ⟺ some member of s holds for g.
    Exists,
    /// gJs ⟺ every member of s holds for g.
    ForAll,
    /// gJs ⟺ at least the group's fraction of members hold for g.
    Alpha(HashMap<String, f64>),
}

impl GeneralizationSemantics {
    fn threshold(&self, group: &str) -> Result<Option<f64>> {
        match self {
            GeneralizationSemantics::Alpha(map) => {
                let a = *map.get(group).ok_or_else(|| LatqlError::InvalidCover {
                    reason: format!("no alpha threshold for group '{group}'"),
                })?;
                if a <= 0.0 || a > 1.0 {
                    return Err(LatqlError::InvalidAlpha {
                        group: group.to_string(),
                        value: a,
                    });
                }
                Ok(Some(a))
            }
            _ => Ok(None),
        }
    }
}

/// One output column: either a pass-through source attribute or a group.
enum Column<'a> {
    PassThrough(usize),
    Group(&'a str, &'a AttributeSet, Option<f64>),
}

/// Rebuild the context with group columns in place of their members. Each
/// group column sits at the position of its smallest member index;
/// pass-through columns keep their source position.
pub fn generalize(
    ctx: &FormalContext,
    cover: &AttributeCover,
    sem: &GeneralizationSemantics,
) -> Result<FormalContext> {
    let pass = cover.pass_through(ctx);
    let mut columns: Vec<(usize, Column)> = pass.iter().map(|m| (m, Column::PassThrough(m))).collect();
    for (name, members) in cover.groups() {
        let pos = members.min_index().expect("groups are nonempty");
        columns.push((pos, Column::Group(name, members, sem.threshold(name)?)));
    }
    columns.sort_by_key(|&(pos, _)| pos);

    let mut attributes = Vec::with_capacity(columns.len());
    for (_, col) in &columns {
        attributes.push(match col {
            Column::PassThrough(m) => ctx.attributes()[*m].clone(),
            Column::Group(name, _, _) => name.to_string(),
        });
    }
    let incidence = (0..ctx.object_count())
        .map(|g| {
            columns
                .iter()
                .map(|(_, col)| match col {
                    Column::PassThrough(m) => ctx.incident(g, *m),
                    Column::Group(_, members, alpha) => {
                        let hits = members.iter().filter(|&m| ctx.incident(g, m)).count();
                        match (sem, alpha) {
                            (GeneralizationSemantics::Exists, _) => hits > 0,
                            (GeneralizationSemantics::ForAll, _) => hits == members.len(),
                            (GeneralizationSemantics::Alpha(_), Some(a)) => {
                                hits as f64 / members.len() as f64 >= *a
                            }
                            _ => unreachable!(),
                        }
                    }
                })
                .collect()
        })
        .collect();
    FormalContext::new(ctx.objects().to_vec(), attributes, incidence)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub original: usize,
    pub generalized: usize,
    pub delta: i64,
}

/// Concept counts before and after generalization.
pub fn compare_lattice_sizes(
    ctx: &FormalContext,
    cover: &AttributeCover,
    sem: &GeneralizationSemantics,
) -> Result<SizeReport> {
    let original = build_lattice(ctx).len();
    let generalized = build_lattice(&generalize(ctx, cover, sem)?).len();
    Ok(SizeReport {
        original,
        generalized,
        delta: generalized as i64 - original as i64,
    })
}
