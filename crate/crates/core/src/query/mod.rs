//! Query language: AST, parser, and executor.

pub mod ast;
pub mod exec;
pub mod parser;

pub use ast::{print_condition, print_ident, QueryAst, SemanticsSpec};
pub use exec::{Catalog, CoverSpec, Executor, Value};
pub use parser::parse_query;
