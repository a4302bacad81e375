//! Rendering of query results: DOT Hasse diagrams, JSON, and plain-text
//! listings. All three are deterministic: concepts in id order, set members
//! in context order.

use std::fmt::Write as _;

use serde_json::json;

use crate::context::FormalContext;
use crate::error::{LatqlError, Result};
use crate::io::write_burmeister;
use crate::lattice::ConceptLattice;
use crate::query::Value;
use crate::relation::Relation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = LatqlError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(LatqlError::Config(format!("unknown format '{other}'"))),
        }
    }
}

/// An optional set of concept ids to highlight, with a label for why.
#[derive(Clone, Copy, Debug)]
pub struct Highlight<'a> {
    pub members: &'a [usize],
    pub label: &'a str,
}

fn names(all: &[String], set: impl Iterator<Item = usize>) -> Vec<String> {
    set.map(|i| all[i].clone()).collect()
}

fn set_line(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

pub fn write_lattice_text(lat: &ConceptLattice, highlight: Option<Highlight>) -> String {
    let ctx = lat.context();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "lattice: {} concepts, top #{}, bottom #{}",
        lat.len(),
        lat.top(),
        lat.bottom()
    );
    for c in lat.concepts() {
        let mark = match highlight {
            Some(h) if h.members.contains(&c.id()) => " *",
            _ => "",
        };
        let _ = writeln!(
            out,
            "#{}: extent {} intent {}{}",
            c.id(),
            set_line(&names(ctx.objects(), c.extent().iter())),
            set_line(&names(ctx.attributes(), c.intent().iter())),
            mark
        );
    }
    for c in 0..lat.len() {
        for &d in lat.lower_covers(c) {
            let _ = writeln!(out, "cover: #{d} -< #{c}");
        }
    }
    if let Some(h) = highlight {
        let _ = writeln!(
            out,
            "{}: {}",
            h.label,
            h.members
                .iter()
                .map(|id| format!("#{id}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    out
}

pub fn write_lattice_json(lat: &ConceptLattice, highlight: Option<Highlight>) -> serde_json::Value {
    let ctx = lat.context();
    let concepts: Vec<serde_json::Value> = lat
        .concepts()
        .iter()
        .map(|c| {
            let mut obj = json!({
                "id": c.id(),
                "extent": names(ctx.objects(), c.extent().iter()),
                "intent": names(ctx.attributes(), c.intent().iter()),
            });
            if let Some(h) = highlight {
                obj["in_region"] = json!(h.members.contains(&c.id()));
            }
            obj
        })
        .collect();
    let edges: Vec<serde_json::Value> = (0..lat.len())
        .flat_map(|c| {
            lat.lower_covers(c)
                .iter()
                .map(move |&d| json!({"lower": d, "upper": c}))
        })
        .collect();
    let mut out = json!({
        "concepts": concepts,
        "covers": edges,
        "top": lat.top(),
        "bottom": lat.bottom(),
    });
    if let Some(h) = highlight {
        out[h.label] = json!(h.members);
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram: covering edges only, reduced labeling (each object labels
/// its γ-concept, each attribute its μ-concept), highlighted region filled.
pub fn write_lattice_dot(lat: &ConceptLattice, highlight: Option<Highlight>) -> String {
    let ctx = lat.context();
    let mut obj_labels: Vec<Vec<&str>> = vec![Vec::new(); lat.len()];
    let mut attr_labels: Vec<Vec<&str>> = vec![Vec::new(); lat.len()];
    for (gi, g) in ctx.objects().iter().enumerate() {
        if let Ok(c) = lat.gamma_by_index(gi) {
            obj_labels[c.id()].push(g);
        }
    }
    for (mi, m) in ctx.attributes().iter().enumerate() {
        if let Ok(c) = lat.mu_by_index(mi) {
            attr_labels[c.id()].push(m);
        }
    }
    let mut out = String::from("graph lattice {\n  rankdir=BT;\n  node [shape=circle, label=\"\"];\n");
    for c in lat.concepts() {
        let id = c.id();
        let mut label = String::new();
        if !attr_labels[id].is_empty() {
            label.push_str(&attr_labels[id].join(", "));
        }
        if !obj_labels[id].is_empty() {
            if !label.is_empty() {
                label.push_str("\\n");
            }
            label.push_str(&obj_labels[id].join(", "));
        }
        let mut attrs = vec![format!("xlabel=\"{}\"", dot_escape(&label))];
        if matches!(highlight, Some(h) if h.members.contains(&id)) {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=gray80".to_string());
        }
        let _ = writeln!(out, "  c{id} [{}];", attrs.join(", "));
    }
    for c in 0..lat.len() {
        for &d in lat.lower_covers(c) {
            let _ = writeln!(out, "  c{d} -- c{c};");
        }
    }
    out.push_str("}\n");
    out
}

pub fn write_lattice(
    lat: &ConceptLattice,
    highlight: Option<Highlight>,
    format: Format,
) -> String {
    match format {
        Format::Text => write_lattice_text(lat, highlight),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&write_lattice_json(lat, highlight))
                .expect("json value serializes");
            s.push('\n');
            s
        }
        Format::Dot => write_lattice_dot(lat, highlight),
    }
}

fn relation_text(rel: &Relation) -> String {
    let mut out = rel.scheme().join(",");
    out.push('\n');
    for t in rel.tuples() {
        let cells: Vec<&str> = t.iter().map(|c| c.as_deref().unwrap_or("")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn context_json(ctx: &FormalContext) -> serde_json::Value {
    json!({
        "objects": ctx.objects(),
        "attributes": ctx.attributes(),
        "incidence": (0..ctx.object_count())
            .map(|g| (0..ctx.attribute_count())
                .map(|m| if ctx.incident(g, m) { "X" } else { "." })
                .collect::<String>())
            .collect::<Vec<_>>(),
    })
}

/// Render any query result. DOT is only defined for lattice-shaped values.
pub fn render(value: &Value, format: Format) -> Result<String> {
    let pretty = |v: serde_json::Value| -> String {
        let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
        s.push('\n');
        s
    };
    match value {
        Value::Context(ctx) => match format {
            Format::Text => Ok(write_burmeister(ctx, "")),
            Format::Json => Ok(pretty(context_json(ctx))),
            Format::Dot => Err(LatqlError::Config(
                "dot export needs a lattice; wrap the expression in BUILD(...)".into(),
            )),
        },
        Value::Relation(rel) => match format {
            Format::Text => Ok(relation_text(rel)),
            Format::Json => Ok(pretty(json!({
                "scheme": rel.scheme(),
                "key": rel.key_attribute(),
                "tuples": rel.tuples(),
            }))),
            Format::Dot => Err(LatqlError::Config(
                "dot export needs a lattice; wrap the expression in BUILD(...)".into(),
            )),
        },
        Value::Lattice(lat) => Ok(write_lattice(lat, None, format)),
        Value::Selection { lattice, result } => {
            let highlight = Highlight {
                members: result.members(),
                label: "selection",
            };
            match format {
                Format::Json => {
                    let mut v = write_lattice_json(lattice, Some(highlight));
                    v["shape"] = json!(format!("{:?}", result.shape()));
                    if let Some(closed) = result.complement_closed() {
                        v["complement_closed"] = json!(closed);
                    }
                    Ok(pretty(v))
                }
                _ => Ok(write_lattice(lattice, Some(highlight), format)),
            }
        }
        Value::Projection(p) => match format {
            Format::Json => {
                let mut v = write_lattice_json(p.lattice(), None);
                v["projected"] = json!(p.projected());
                v["representative"] = json!(p.representative());
                Ok(pretty(v))
            }
            _ => Ok(write_lattice(p.lattice(), None, format)),
        },
        Value::Approx { lattice, result } => {
            let highlight = Highlight {
                members: result.interval.members(),
                label: "interval",
            };
            match format {
                Format::Json => {
                    let mut v = write_lattice_json(lattice, Some(highlight));
                    v["kind"] = json!(format!("{:?}", result.kind));
                    v["lower"] = json!(result.lower);
                    v["upper"] = json!(result.upper);
                    v["interval"] = json!(result.interval.members());
                    Ok(pretty(v))
                }
                Format::Text => {
                    let mut out = write_lattice_text(lattice, Some(highlight));
                    let _ = writeln!(
                        out,
                        "kind: {:?}\nlower: #{}\nupper: #{}",
                        result.kind, result.lower, result.upper
                    );
                    Ok(out)
                }
                Format::Dot => Ok(write_lattice_dot(lattice, Some(highlight))),
            }
        }
    }
}
