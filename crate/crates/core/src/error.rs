use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatqlError {
    #[error("index {index} out of range for {kind} domain of size {domain}")]
    OutOfRange {
        kind: &'static str,
        index: usize,
        domain: usize,
    },
    #[error("unknown {kind} name: {name}")]
    UnknownName { kind: &'static str, name: String },
    #[error("duplicate {kind} name: {name}")]
    DuplicateName { kind: &'static str, name: String },
    #[error("incidence matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("set belongs to a different context (domain {got}, expected {expected})")]
    ForeignSet { got: usize, expected: usize },
    #[error("concept {id} does not belong to this lattice")]
    ForeignConcept { id: usize },
    #[error("contexts have different {kind} lists; cannot combine")]
    AlignmentError { kind: &'static str },
    #[error("contexts disagree at object '{object}', attribute '{attribute}'")]
    GlueConflict { object: String, attribute: String },
    #[error("relation has no usable key")]
    MissingKey,
    #[error("duplicate key value '{value}' in relation")]
    DuplicateKey { value: String },
    #[error("value '{value}' of attribute '{attribute}' is not covered by its scale")]
    ScaleCoverage { attribute: String, value: String },
    #[error("no scale configured for attribute '{attribute}'")]
    MissingScale { attribute: String },
    #[error("invalid attribute cover: {reason}")]
    InvalidCover { reason: String },
    #[error("alpha threshold for group '{group}' must be in (0, 1], got {value}")]
    InvalidAlpha { group: String, value: f64 },
    #[error("{file}:{line}: {message}")]
    FileFormat {
        file: String,
        line: usize,
        message: String,
    },
    #[error("query error at {line}:{col}: {message}")]
    QuerySyntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("in {context}: {source}")]
    Query {
        context: String,
        #[source]
        source: Box<LatqlError>,
    },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, LatqlError>;

impl LatqlError {
    /// CLI exit code class: 1 usage/syntax, 2 data integrity, 3 internal.
    pub fn exit_code(&self) -> u8 {
        use LatqlError::*;
        match self {
            QuerySyntax { .. } | UnknownName { .. } | Config(_) => 1,
            Query { source, .. } => source.exit_code(),
            Invariant(_) => 3,
            _ => 2,
        }
    }
}
