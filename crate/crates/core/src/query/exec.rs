//! Query execution: a catalog of named inputs and a bottom-up evaluator.
//! Lattices are built lazily per distinct context and memoized for the
//! duration of one execution.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use crate::algebra::{self, ProjectionResult, SelectionResult};
use crate::approximation::{self, ApproxResult, PresumedConcept};
use crate::context::FormalContext;
use crate::error::{LatqlError, Result};
use crate::generalization::{AttributeCover, GeneralizationSemantics};
use crate::io::{self, ContextFormat, ScaleDecl, SessionConfig};
use crate::lattice::{build_lattice, ConceptLattice};
use crate::relation::Relation;
use crate::scaling::{derive_context, ConceptualScale, ManyValuedContext};

use super::ast::{QueryAst, SemanticsSpec};

#[derive(Clone, Debug, Default)]
pub struct CoverSpec {
    pub groups: Vec<(String, Vec<String>)>,
    pub alpha: HashMap<String, f64>,
}

/// Named contexts, relations, scales and covers for one session.
#[derive(Default)]
pub struct Catalog {
    contexts: BTreeMap<String, FormalContext>,
    relations: BTreeMap<String, Relation>,
    /// keyed by relation name, then attribute
    scales: BTreeMap<String, Vec<ConceptualScale>>,
    covers: BTreeMap<String, CoverSpec>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_config(cfg: &SessionConfig, base_dir: &Path) -> Result<Self> {
        let mut cat = Catalog::new();
        for (name, decl) in &cfg.contexts {
            let path = base_dir.join(&decl.path);
            let text = std::fs::read_to_string(&path).map_err(|e| LatqlError::Io {
                path: path.display().to_string(),
                source: e,
            })?;
            match decl.format {
                ContextFormat::Burmeister => {
                    cat.insert_context(name, io::read_burmeister(&text, &decl.path)?)?;
                }
                ContextFormat::Csv => {
                    cat.insert_relation(name, io::read_csv_relation(&text, &decl.path)?)?;
                }
            }
        }
        for (rel_name, per_attr) in &cfg.scales {
            for (attr, decl) in per_attr {
                let scale = scale_from_decl(attr, decl)?;
                cat.scales.entry(rel_name.clone()).or_default().push(scale);
            }
        }
        for (name, decl) in &cfg.covers {
            cat.covers.insert(
                name.clone(),
                CoverSpec {
                    groups: decl
                        .groups
                        .iter()
                        .map(|(g, ms)| (g.clone(), ms.clone()))
                        .collect(),
                    alpha: decl.alpha.iter().map(|(k, v)| (k.clone(), *v)).collect(),
                },
            );
        }
        Ok(cat)
    }

    pub fn insert_context(&mut self, name: &str, ctx: FormalContext) -> Result<()> {
        if self.contexts.contains_key(name) {
            return Err(LatqlError::DuplicateName {
                kind: "context",
                name: name.to_string(),
            });
        }
        self.contexts.insert(name.to_string(), ctx);
        Ok(())
    }

    pub fn insert_relation(&mut self, name: &str, rel: Relation) -> Result<()> {
        if self.relations.contains_key(name) {
            return Err(LatqlError::DuplicateName {
                kind: "relation",
                name: name.to_string(),
            });
        }
        self.relations.insert(name.to_string(), rel);
        Ok(())
    }

    pub fn insert_cover(&mut self, name: &str, spec: CoverSpec) {
        self.covers.insert(name.to_string(), spec);
    }

    pub fn context(&self, name: &str) -> Option<&FormalContext> {
        self.contexts.get(name)
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.get(name)
    }

    pub fn cover(&self, name: &str) -> Option<&CoverSpec> {
        self.covers.get(name)
    }

    /// Binarize a relation through its configured scales (nominal default).
    pub fn binarize(&self, name: &str, rel: &Relation) -> Result<FormalContext> {
        let mv = ManyValuedContext::from_relation(rel)?;
        let scales = self.scales.get(name).map(Vec::as_slice).unwrap_or(&[]);
        derive_context(&mv, scales)
    }
}

fn scale_from_decl(attr: &str, decl: &ScaleDecl) -> Result<ConceptualScale> {
    match decl {
        ScaleDecl::Nominal => Err(LatqlError::Config(format!(
            "attribute '{attr}': nominal is the default; omit the scale instead"
        ))),
        ScaleDecl::Ordinal { values } => Ok(ConceptualScale::ordinal(attr, values)),
        ScaleDecl::Explicit {
            values,
            attributes,
            incidence,
        } => {
            let rows: Result<Vec<Vec<bool>>> = incidence
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.chars()
                        .map(|c| match c {
                            'X' => Ok(true),
                            '.' => Ok(false),
                            other => Err(LatqlError::Config(format!(
                                "scale for '{attr}', row {}: invalid cell '{other}'",
                                i + 1
                            ))),
                        })
                        .collect()
                })
                .collect();
            let ctx = FormalContext::new(values.clone(), attributes.clone(), rows?)?;
            Ok(ConceptualScale::new(attr.to_string(), ctx))
        }
    }
}

/// The result of evaluating a query expression.
#[derive(Clone, Debug)]
pub enum Value {
    Context(FormalContext),
    Relation(Relation),
    Lattice(ConceptLattice),
    Selection {
        lattice: ConceptLattice,
        result: SelectionResult,
    },
    Projection(ProjectionResult),
    Approx {
        lattice: ConceptLattice,
        result: ApproxResult,
    },
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Context(_) => "context",
            Value::Relation(_) => "relation",
            Value::Lattice(_) => "lattice",
            Value::Selection { .. } => "selection",
            Value::Projection(_) => "projection",
            Value::Approx { .. } => "approximation",
        }
    }
}

pub struct Executor<'a> {
    catalog: &'a Catalog,
    lattice_cache: HashMap<FormalContext, ConceptLattice>,
}

impl<'a> Executor<'a> {
    pub fn new(catalog: &'a Catalog) -> Self {
        Executor {
            catalog,
            lattice_cache: HashMap::new(),
        }
    }

    fn lattice_for(&mut self, ctx: &FormalContext) -> ConceptLattice {
        self.lattice_cache
            .entry(ctx.clone())
            .or_insert_with(|| build_lattice(ctx))
            .clone()
    }

    /// Coerce a value to a context. Relations are binarized through the
    /// catalog's scales (nominal by default).
    fn as_context(&self, value: Value, name_hint: Option<&str>) -> Result<FormalContext> {
        match value {
            Value::Context(c) => Ok(c),
            Value::Relation(r) => self.catalog.binarize(name_hint.unwrap_or(""), &r),
            Value::Lattice(l) => Ok(l.context().clone()),
            other => Err(LatqlError::Config(format!(
                "expected a context, got a {}",
                other.kind()
            ))),
        }
    }

    fn as_lattice(&mut self, value: Value, name_hint: Option<&str>) -> Result<ConceptLattice> {
        match value {
            Value::Lattice(l) => Ok(l),
            Value::Projection(p) => Ok(p.lattice().clone()),
            other => {
                let ctx = self.as_context(other, name_hint)?;
                Ok(self.lattice_for(&ctx))
            }
        }
    }

    fn as_relation(&self, value: Value) -> Result<Relation> {
        match value {
            Value::Relation(r) => Ok(r),
            other => Err(LatqlError::Config(format!(
                "expected a relation, got a {}",
                other.kind()
            ))),
        }
    }

    pub fn execute(&mut self, ast: &QueryAst) -> Result<Value> {
        self.eval(ast).map_err(|e| match e {
            already @ LatqlError::Query { .. } => already,
            source => LatqlError::Query {
                context: ast.to_string(),
                source: Box::new(source),
            },
        })
    }

    fn eval(&mut self, ast: &QueryAst) -> Result<Value> {
        match ast {
            QueryAst::Ref(name) => {
                if let Some(ctx) = self.catalog.context(name) {
                    Ok(Value::Context(ctx.clone()))
                } else if let Some(rel) = self.catalog.relation(name) {
                    Ok(Value::Relation(rel.clone()))
                } else {
                    Err(LatqlError::UnknownName {
                        kind: "catalog entry",
                        name: name.clone(),
                    })
                }
            }
            QueryAst::Build(e) => {
                let v = self.execute(e)?;
                let lat = self.as_lattice(v, ref_hint(e))?;
                Ok(Value::Lattice(lat))
            }
            QueryAst::Select(e, cond) => {
                let v = self.execute(e)?;
                let lattice = self.as_lattice(v, ref_hint(e))?;
                let result = algebra::select(&lattice, cond)?;
                Ok(Value::Selection { lattice, result })
            }
            QueryAst::Project(e, attrs) => {
                let v = self.execute(e)?;
                let lattice = self.as_lattice(v, ref_hint(e))?;
                let y = lattice
                    .context()
                    .attribute_set(&attrs.iter().map(String::as_str).collect::<Vec<_>>())?;
                Ok(Value::Projection(algebra::project(&lattice, &y)?))
            }
            QueryAst::Appose(a, b) => {
                let (ka, kb) = self.eval_context_pair(a, b)?;
                Ok(Value::Context(algebra::apposition(&ka, &kb)?))
            }
            QueryAst::Subpose(a, b) => {
                let (ka, kb) = self.eval_context_pair(a, b)?;
                Ok(Value::Context(algebra::subposition(&ka, &kb)?))
            }
            QueryAst::Glue(a, b) => {
                let (ka, kb) = self.eval_context_pair(a, b)?;
                Ok(Value::Context(algebra::glue(&ka, &kb)?))
            }
            QueryAst::Join(a, b) => {
                let ra = self.execute(a).and_then(|v| self.as_relation(v))?;
                let rb = self.execute(b).and_then(|v| self.as_relation(v))?;
                Ok(Value::Relation(ra.natural_join(&rb)))
            }
            QueryAst::Generalize(e, cover_name, sem) => {
                let v = self.execute(e)?;
                let ctx = self.as_context(v, ref_hint(e))?;
                let spec = self
                    .catalog
                    .cover(cover_name)
                    .ok_or_else(|| LatqlError::UnknownName {
                        kind: "cover",
                        name: cover_name.clone(),
                    })?;
                let cover = AttributeCover::new(&ctx, spec.groups.clone())?;
                let sem = match sem {
                    SemanticsSpec::Exists => GeneralizationSemantics::Exists,
                    SemanticsSpec::ForAll => GeneralizationSemantics::ForAll,
                    SemanticsSpec::Alpha => {
                        GeneralizationSemantics::Alpha(spec.alpha.clone())
                    }
                };
                Ok(Value::Context(crate::generalization::generalize(
                    &ctx, &cover, &sem,
                )?))
            }
            QueryAst::Approx(e, objs, attrs) => {
                let v = self.execute(e)?;
                let lattice = self.as_lattice(v, ref_hint(e))?;
                let c = PresumedConcept::from_names(
                    &lattice,
                    &objs.iter().map(String::as_str).collect::<Vec<_>>(),
                    &attrs.iter().map(String::as_str).collect::<Vec<_>>(),
                )?;
                let result = approximation::approx_interval(&lattice, &c)?;
                Ok(Value::Approx { lattice, result })
            }
        }
    }

    fn eval_context_pair(
        &mut self,
        a: &QueryAst,
        b: &QueryAst,
    ) -> Result<(FormalContext, FormalContext)> {
        let va = self.execute(a)?;
        let ka = self.as_context(va, ref_hint(a))?;
        let vb = self.execute(b)?;
        let kb = self.as_context(vb, ref_hint(b))?;
        Ok((ka, kb))
    }
}

fn ref_hint(ast: &QueryAst) -> Option<&str> {
    match ast {
        QueryAst::Ref(name) => Some(name),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::tests::kf6;
    use crate::query::parser::parse_query;

    fn catalog() -> Catalog {
        let mut cat = Catalog::new();
        cat.insert_context("kf6", kf6()).unwrap();
        cat.insert_cover(
            "fig6cover",
            CoverSpec {
                groups: vec![("m12".into(), vec!["m1".into(), "m2".into()])],
                alpha: HashMap::from([("m12".to_string(), 0.5)]),
            },
        );
        cat
    }

    fn run(cat: &Catalog, q: &str) -> Result<Value> {
        Executor::new(cat).execute(&parse_query(q).unwrap())
    }

    #[test]
    fn build_kf6() {
        let cat = catalog();
        match run(&cat, "BUILD(kf6)").unwrap() {
            Value::Lattice(l) => assert_eq!(l.len(), 7),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn generalize_then_build() {
        let cat = catalog();
        match run(&cat, "BUILD(GENERALIZE(kf6, fig6cover, exists))").unwrap() {
            Value::Lattice(l) => assert_eq!(l.len(), 8),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn generalize_alpha_uses_config_thresholds() {
        let cat = catalog();
        match run(&cat, "GENERALIZE(kf6, fig6cover, alpha)").unwrap() {
            Value::Context(k) => {
                let m12 = k.attribute_index("m12").unwrap();
                // alpha 0.5 over {m1,m2}: one member suffices
                assert!(!k.incident(0, m12));
                assert!(k.incident(1, m12));
                assert!(k.incident(2, m12));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn select_and_approx() {
        let cat = catalog();
        match run(&cat, "SELECT(kf6, m4)").unwrap() {
            Value::Selection { result, .. } => assert_eq!(result.members().len(), 4),
            other => panic!("unexpected {other:?}"),
        }
        match run(&cat, "APPROX(kf6, {g1} ; {m4})").unwrap() {
            Value::Approx { result, .. } => assert_eq!(result.interval.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn project_counts() {
        let cat = catalog();
        match run(&cat, "PROJECT(kf6, [m3, m4])").unwrap() {
            Value::Projection(p) => assert_eq!(p.lattice().len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn errors_carry_subexpression() {
        let cat = catalog();
        match run(&cat, "BUILD(SELECT(kf6, nosuch))") {
            Err(LatqlError::Query { context, .. }) => {
                assert!(context.contains("SELECT"), "{context}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(run(&cat, "BUILD(nope)").is_err());
    }

    #[test]
    fn join_requires_relations() {
        let cat = catalog();
        assert!(run(&cat, "JOIN(kf6, kf6)").is_err());
    }
}
