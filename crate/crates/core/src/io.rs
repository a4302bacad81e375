//! File formats: Burmeister context files, CSV many-valued tables, and the
//! TOML session configuration.
//!
//! Burmeister grammar (bit-exact): line 1 `B`; line 2 context name (may be
//! empty); line 3 |G|; line 4 |M|; |G| object-name lines; |M| attribute-name
//! lines; |G| rows of exactly |M| characters from {X, .}.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::context::FormalContext;
use crate::error::{LatqlError, Result};
use crate::relation::Relation;

fn err(file: &str, line: usize, message: impl Into<String>) -> LatqlError {
    LatqlError::FileFormat {
        file: file.to_string(),
        line,
        message: message.into(),
    }
}

pub fn read_burmeister(input: &str, file: &str) -> Result<FormalContext> {
    let lines: Vec<&str> = input.lines().collect();
    let get = |i: usize| -> Result<&str> {
        lines
            .get(i)
            .copied()
            .ok_or_else(|| err(file, i + 1, "unexpected end of file"))
    };
    if get(0)?.trim() != "B" {
        return Err(err(file, 1, "expected header line 'B'"));
    }
    let _name = get(1)?; // optional context name, may be empty
    let g: usize = get(2)?
        .trim()
        .parse()
        .map_err(|_| err(file, 3, "expected object count"))?;
    let m: usize = get(3)?
        .trim()
        .parse()
        .map_err(|_| err(file, 4, "expected attribute count"))?;
    let mut objects = Vec::with_capacity(g);
    for i in 0..g {
        objects.push(get(4 + i)?.to_string());
    }
    let mut attributes = Vec::with_capacity(m);
    for i in 0..m {
        attributes.push(get(4 + g + i)?.to_string());
    }
    let mut incidence = Vec::with_capacity(g);
    for i in 0..g {
        let lineno = 4 + g + m + i;
        let row = get(lineno)?;
        if row.chars().count() != m {
            return Err(err(
                file,
                lineno + 1,
                format!("row has {} cells, expected {}", row.chars().count(), m),
            ));
        }
        let mut cells = Vec::with_capacity(m);
        for ch in row.chars() {
            match ch {
                'X' => cells.push(true),
                '.' => cells.push(false),
                other => {
                    return Err(err(
                        file,
                        lineno + 1,
                        format!("invalid cell character '{other}'"),
                    ))
                }
            }
        }
        incidence.push(cells);
    }
    FormalContext::new(objects, attributes, incidence).map_err(|e| match e {
        LatqlError::DuplicateName { kind, name } => {
            err(file, 1, format!("duplicate {kind} name '{name}'"))
        }
        other => other,
    })
}

pub fn write_burmeister(ctx: &FormalContext, name: &str) -> String {
    let mut out = String::from("B\n");
    out.push_str(name);
    out.push('\n');
    out.push_str(&format!("{}\n{}\n", ctx.object_count(), ctx.attribute_count()));
    for g in ctx.objects() {
        out.push_str(g);
        out.push('\n');
    }
    for m in ctx.attributes() {
        out.push_str(m);
        out.push('\n');
    }
    for g in 0..ctx.object_count() {
        for m in 0..ctx.attribute_count() {
            out.push(if ctx.incident(g, m) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// CSV many-valued table: header row names the attributes, the first column
/// is the key; an empty cell is an undefined value.
pub fn read_csv_relation(input: &str, file: &str) -> Result<Relation> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(input.as_bytes());
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| err(file, 1, e.to_string()))?
        .iter()
        .map(|s| s.trim().to_string())
        .collect();
    if header.is_empty() {
        return Err(err(file, 1, "empty header"));
    }
    let key = header[0].clone();
    let mut tuples = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| err(file, i + 2, e.to_string()))?;
        tuples.push(
            record
                .iter()
                .map(|cell| {
                    let cell = cell.trim();
                    if cell.is_empty() {
                        None
                    } else {
                        Some(cell.to_string())
                    }
                })
                .collect(),
        );
    }
    Relation::new(header, &key, tuples)
}

/// Session configuration (TOML): named contexts, scales per many-valued
/// attribute, and attribute covers with optional per-group alpha thresholds.
#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    #[serde(default)]
    pub contexts: BTreeMap<String, ContextDecl>,
    /// scales[context][attribute]
    #[serde(default)]
    pub scales: BTreeMap<String, BTreeMap<String, ScaleDecl>>,
    #[serde(default)]
    pub covers: BTreeMap<String, CoverDecl>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextDecl {
    pub path: String,
    pub format: ContextFormat,
}

#[derive(Debug, Deserialize, PartialEq, Eq, Clone, Copy)]
#[serde(rename_all = "lowercase")]
pub enum ContextFormat {
    Burmeister,
    Csv,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "lowercase", tag = "kind")]
pub enum ScaleDecl {
    Nominal,
    /// Ordinal over the listed value order.
    Ordinal { values: Vec<String> },
    /// Explicit scale context: one incidence row (X/. string) per value.
    Explicit {
        values: Vec<String>,
        attributes: Vec<String>,
        incidence: Vec<String>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDecl {
    /// group name → member attribute names
    pub groups: BTreeMap<String, Vec<String>>,
    /// group name → alpha threshold, for alpha semantics
    #[serde(default)]
    pub alpha: BTreeMap<String, f64>,
}

pub fn parse_session_config(input: &str) -> Result<SessionConfig> {
    toml::from_str(input).map_err(|e| LatqlError::Config(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const KF6_CXT: &str = "B\n\n3\n4\ng1\ng2\ng3\nm1\nm2\nm3\nm4\n..XX\n.X.X\nX.X.\n";

    #[test]
    fn read_kf6() {
        let k = read_burmeister(KF6_CXT, "kf6.cxt").unwrap();
        assert_eq!(k.objects(), ["g1", "g2", "g3"]);
        assert_eq!(k.attributes(), ["m1", "m2", "m3", "m4"]);
        assert!(k.incident(0, 2) && k.incident(0, 3) && !k.incident(0, 0));
        assert_eq!(k, crate::context::tests::kf6());
    }

    #[test]
    fn roundtrip() {
        let k = read_burmeister(KF6_CXT, "kf6.cxt").unwrap();
        assert_eq!(write_burmeister(&k, ""), KF6_CXT);
    }

    #[test]
    fn zero_object_file() {
        let k = read_burmeister("B\nname\n0\n2\na\nb\n", "x.cxt").unwrap();
        assert_eq!(k.object_count(), 0);
        assert_eq!(k.attribute_count(), 2);
    }

    #[test]
    fn row_length_error_names_line() {
        let bad = "B\n\n1\n2\ng\na\nb\nX\n";
        match read_burmeister(bad, "x.cxt") {
            Err(LatqlError::FileFormat { line, .. }) => assert_eq!(line, 8),
            other => panic!("expected format error, got {other:?}"),
        }
    }

    #[test]
    fn bad_header_rejected() {
        assert!(read_burmeister("A\n\n0\n0\n", "x.cxt").is_err());
    }

    #[test]
    fn csv_relation() {
        let r = read_csv_relation("K,a,b\nx,1,\ny,2,p\n", "t.csv").unwrap();
        assert_eq!(r.scheme(), ["K", "a", "b"]);
        assert_eq!(r.key_attribute(), Some("K"));
        assert_eq!(r.len(), 2);
        assert_eq!(r.tuples()[0][2], None);
        assert_eq!(r.tuples()[1][2], Some("p".to_string()));
    }

    #[test]
    fn csv_duplicate_key_rejected() {
        assert!(read_csv_relation("K,a\nx,1\nx,2\n", "t.csv").is_err());
    }

    #[test]
    fn session_config_parses() {
        let cfg = parse_session_config(
            r#"
[contexts.sa]
path = "sa.cxt"
format = "burmeister"

[scales.tab.price]
kind = "ordinal"
values = ["low", "mid", "high"]

[covers.fig6]
groups.m12 = ["m1", "m2"]
alpha.m12 = 0.5
"#,
        )
        .unwrap();
        assert_eq!(cfg.contexts["sa"].format, ContextFormat::Burmeister);
        assert!(matches!(cfg.scales["tab"]["price"], ScaleDecl::Ordinal { .. }));
        assert_eq!(cfg.covers["fig6"].groups["m12"], ["m1", "m2"]);
        assert_eq!(cfg.covers["fig6"].alpha["m12"], 0.5);
    }
}
