//! Query expression trees and their canonical printed form.
//!
//! The printer and parser round-trip: parsing a printed AST yields the same
//! tree.

use std::fmt;

use crate::algebra::Condition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemanticsSpec {
    Exists,
    ForAll,
    Alpha,
}

impl fmt::Display for SemanticsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SemanticsSpec::Exists => "exists",
            SemanticsSpec::ForAll => "forall",
            SemanticsSpec::Alpha => "alpha",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QueryAst {
    /// A catalog name (context or relation).
    Ref(String),
    Build(Box<QueryAst>),
    Select(Box<QueryAst>, Condition),
    Project(Box<QueryAst>, Vec<String>),
    Appose(Box<QueryAst>, Box<QueryAst>),
    Subpose(Box<QueryAst>, Box<QueryAst>),
    Glue(Box<QueryAst>, Box<QueryAst>),
    Join(Box<QueryAst>, Box<QueryAst>),
    Generalize(Box<QueryAst>, String, SemanticsSpec),
    /// APPROX(expr, {objects} ; {attributes})
    Approx(Box<QueryAst>, Vec<String>, Vec<String>),
}

pub(crate) const KEYWORDS: &[&str] = &[
    "BUILD",
    "SELECT",
    "PROJECT",
    "APPOSE",
    "SUBPOSE",
    "GLUE",
    "JOIN",
    "GENERALIZE",
    "APPROX",
    "exists",
    "forall",
    "alpha",
];

fn bare_ok(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
        && !KEYWORDS.contains(&name)
}

/// Quote an identifier unless it is a safe bare name.
pub fn print_ident(name: &str) -> String {
    if bare_ok(name) {
        name.to_string()
    } else {
        let escaped = name.replace('\\', "\\\\").replace('"', "\\\"");
        format!("\"{escaped}\"")
    }
}

fn print_names(names: &[String]) -> String {
    names.iter().map(|n| print_ident(n)).collect::<Vec<_>>().join(", ")
}

/// Print a condition; compound children are parenthesized so the grammar's
/// precedence (`&` over `|`) reparses the same tree.
pub fn print_condition(cond: &Condition) -> String {
    fn child(c: &Condition, parenthesize_compound: bool) -> String {
        match c {
            Condition::Atom(_) | Condition::Not(_) => print_condition(c),
            _ if parenthesize_compound => format!("({})", print_condition(c)),
            _ => print_condition(c),
        }
    }
    match cond {
        Condition::Atom(a) => print_ident(a),
        Condition::Not(a) => format!("!{}", print_ident(a)),
        Condition::And(cs) => cs
            .iter()
            .map(|c| child(c, true))
            .collect::<Vec<_>>()
            .join(" & "),
        Condition::Or(cs) => cs
            .iter()
            .map(|c| match c {
                // `&` binds tighter, And children need no parens
                Condition::And(_) => print_condition(c),
                _ => child(c, true),
            })
            .collect::<Vec<_>>()
            .join(" | "),
    }
}

impl fmt::Display for QueryAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryAst::Ref(name) => f.write_str(&print_ident(name)),
            QueryAst::Build(e) => write!(f, "BUILD({e})"),
            QueryAst::Select(e, cond) => write!(f, "SELECT({e}, {})", print_condition(cond)),
            QueryAst::Project(e, attrs) => write!(f, "PROJECT({e}, [{}])", print_names(attrs)),
            QueryAst::Appose(a, b) => write!(f, "APPOSE({a}, {b})"),
            QueryAst::Subpose(a, b) => write!(f, "SUBPOSE({a}, {b})"),
            QueryAst::Glue(a, b) => write!(f, "GLUE({a}, {b})"),
            QueryAst::Join(a, b) => write!(f, "JOIN({a}, {b})"),
            QueryAst::Generalize(e, cover, sem) => {
                write!(f, "GENERALIZE({e}, {}, {sem})", print_ident(cover))
            }
            QueryAst::Approx(e, objs, attrs) => {
                write!(f, "APPROX({e}, {{{}}} ; {{{}}})", print_names(objs), print_names(attrs))
            }
        }
    }
}
