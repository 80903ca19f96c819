//! Output model for every subcommand, schema `specgraph/1`.
//!
//! Each output is first built as a serializable value; `--format json`
//! prints it and `--format text` renders the same value, so the two formats
//! never disagree. Field order is fixed by the struct definitions.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::decompose::Decomposition;
use crate::document::Case;
use crate::error::{Error, Result};
use crate::graph::{
    codim_one_graph, complement_isomorphic, connectivity, facet_ridge_graph,
    ConnectivityCertificate, PrimeGraph, Witness,
};
use crate::ideal::{VarSet, VariableContext};
use crate::verdicts::{analyze, AnalysisReport, SideValue, Verdict};

pub const SCHEMA: &str = "specgraph/1";

fn prime_names(ctx: &VariableContext, s: VarSet) -> Vec<String> {
    ctx.set_names(s)
}

fn render_prime(names: &[String]) -> String {
    if names.is_empty() {
        "(0)".into()
    } else {
        format!("({})", names.join(", "))
    }
}

fn render_set(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub kind: String,
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn new(ctx: &VariableContext, g: &PrimeGraph) -> Self {
        GraphJson {
            kind: g.kind.cli_name().into(),
            vertices: g.vertices.iter().map(|&v| prime_names(ctx, v)).collect(),
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    fn render(&self, out: &mut String, indent: &str) {
        let facets = self.kind == "facet-ridge";
        let _ = writeln!(out, "{indent}graph {} ({} vertices)", self.kind, self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            let shown = if facets { format!("{{{}}}", v.join(", ")) } else { render_prime(v) };
            let adj: Vec<String> = self
                .edges
                .iter()
                .filter_map(|&[a, b]| {
                    if a == i {
                        Some(b.to_string())
                    } else if b == i {
                        Some(a.to_string())
                    } else {
                        None
                    }
                })
                .collect();
            let _ = writeln!(out, "{indent}  {i}: {shown} -- [{}]", adj.join(", "));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartitionJson {
    pub first: Vec<usize>,
    pub rest: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub status: String,
    pub components: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spanning_tree: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<BipartitionJson>,
}

impl CertificateJson {
    pub fn new(cert: &ConnectivityCertificate) -> Self {
        let (spanning_tree, bipartition) = match &cert.witness {
            Witness::SpanningTree(t) => (Some(t.iter().map(|&(a, b)| [a, b]).collect()), None),
            Witness::Bipartition { first, rest } => {
                (None, Some(BipartitionJson { first: first.clone(), rest: rest.clone() }))
            }
            Witness::None => (None, None),
        };
        CertificateJson {
            status: cert.status.as_str().into(),
            components: cert.components.clone(),
            spanning_tree,
            bipartition,
        }
    }

    fn render(&self, out: &mut String, indent: &str) {
        let comps: Vec<String> = self.components.iter().map(|c| render_set(c)).collect();
        let _ = write!(out, "{indent}{}", self.status);
        if !comps.is_empty() {
            let _ = write!(out, "; components {}", comps.join(" "));
        }
        if let Some(tree) = &self.spanning_tree {
            let edges: Vec<String> = tree.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            let _ = write!(out, "; spanning tree [{}]", edges.join(", "));
        }
        if let Some(b) = &self.bipartition {
            let _ = write!(out, "; split {} | {}", render_set(&b.first), render_set(&b.rest));
        }
        out.push('\n');
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictJson {
    pub claim: String,
    pub result: String,
    pub statement: String,
    pub citation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    pub side: Map<String, Value>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub attached: Vec<VerdictJson>,
}

impl VerdictJson {
    pub fn new(ctx: &VariableContext, v: &Verdict) -> Self {
        let mut side = Map::new();
        for item in &v.side {
            let value = match &item.value {
                SideValue::Int(i) => Value::from(*i),
                SideValue::Bool(b) => Value::from(*b),
                SideValue::Ideal(i) => Value::from(i.to_string()),
                SideValue::Ideals(list) => {
                    Value::from(list.iter().map(ToString::to_string).collect::<Vec<_>>())
                }
                SideValue::Text(t) => Value::from(t.clone()),
            };
            side.insert(item.name.into(), value);
        }
        VerdictJson {
            claim: v.claim.id().into(),
            result: v.result.as_str().into(),
            statement: v.statement.clone(),
            citation: v.citation.map(str::to_string),
            graph: v.graph.as_ref().map(|g| GraphJson::new(ctx, g)),
            certificate: v.certificate.as_ref().map(CertificateJson::new),
            side,
            notes: v.notes.clone(),
            attached: v.attached.iter().map(|a| VerdictJson::new(ctx, a)).collect(),
        }
    }

    fn render(&self, out: &mut String, indent: &str) {
        let _ = writeln!(out, "{indent}[{}] {}", self.result, self.statement);
        let inner = format!("{indent}    ");
        let _ = writeln!(out, "{inner}claim: {}", self.claim);
        match &self.citation {
            Some(c) => {
                let _ = writeln!(out, "{inner}basis: {c}");
            }
            None => {
                let _ = writeln!(out, "{inner}basis: none (no result applies)");
            }
        }
        if let Some(g) = &self.graph {
            g.render(out, &inner);
        }
        if let Some(c) = &self.certificate {
            let _ = write!(out, "{inner}certificate: ");
            c.render(out, "");
        }
        for (k, v) in &self.side {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Array(a) => {
                    let parts: Vec<String> = a
                        .iter()
                        .map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string))
                        .collect();
                    format!("[{}]", parts.join(", "))
                }
                other => other.to_string(),
            };
            let _ = writeln!(out, "{inner}{k} = {shown}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "{inner}note: {n}");
        }
        for a in &self.attached {
            let _ = writeln!(out, "{inner}consequence:");
            a.render(out, &format!("{inner}  "));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionJson {
    pub c: usize,
    pub d: usize,
    pub minimal_primes: Vec<Vec<String>>,
    pub ideal_top: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_part: Option<String>,
}

impl DecompositionJson {
    pub fn new(ctx: &VariableContext, dec: &Decomposition) -> Self {
        DecompositionJson {
            c: dec.height_c,
            d: dec.dim_d,
            minimal_primes: dec.min_primes.iter().map(|p| prime_names(ctx, p.vars())).collect(),
            ideal_top: dec.ideal_top().to_string(),
            lower_part: (!dec.is_unmixed()).then(|| dec.lower_part().to_string()),
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "decomposition: c = {}, d = {}", self.c, self.d);
        for p in &self.minimal_primes {
            let tag = if p.len() == self.c { "  top" } else { "" };
            let _ = writeln!(out, "  {:<24} height {}{tag}", render_prime(p), p.len());
        }
        let _ = writeln!(out, "  I_d = {}", self.ideal_top);
        if let Some(l) = &self.lower_part {
            let _ = writeln!(out, "  lower part = {l}");
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexJson {
    pub facets: Vec<Vec<String>>,
    pub pure: bool,
    pub stanley_reisner: String,
    pub facet_ridge: GraphJson,
    pub certificate: CertificateJson,
    /// Facet-ridge graph equals the codimension-one graph under complementation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_isomorphic: Option<bool>,
}

impl ComplexJson {
    /// The facet section of an analysis; `None` for documents given by `I`.
    pub fn of_case(case: &Case) -> Result<Option<ComplexJson>> {
        let Some(complex) = &case.complex else {
            return Ok(None);
        };
        let ridge = facet_ridge_graph(complex);
        let cert = connectivity(&ridge);
        let iso = if complex.is_pure() {
            Some(complement_isomorphic(&ridge, &codim_one_graph(&case.ideal)?))
        } else {
            None
        };
        if iso == Some(false) {
            return Err(Error::Invariant(
                "facet-ridge graph does not match the codimension-one graph".into(),
            ));
        }
        Ok(Some(ComplexJson {
            facets: complex.facets().iter().map(|f| case.ctx.set_names(*f)).collect(),
            pure: complex.is_pure(),
            stanley_reisner: case.ideal.to_string(),
            facet_ridge: GraphJson::new(&case.ctx, &ridge),
            certificate: CertificateJson::new(&cert),
            complement_isomorphic: iso,
        }))
    }

    fn render(&self, out: &mut String) {
        let facets: Vec<String> =
            self.facets.iter().map(|f| format!("{{{}}}", f.join(", "))).collect();
        let _ = writeln!(out, "complex: facets {} (pure: {})", facets.join(" "), self.pure);
        let _ = writeln!(out, "  Stanley-Reisner ideal = {}", self.stanley_reisner);
        self.facet_ridge.render(out, "  ");
        let _ = write!(out, "  certificate: ");
        self.certificate.render(out, "");
        if let Some(iso) = self.complement_isomorphic {
            let _ = writeln!(out, "  complements match the codimension-one graph: {iso}");
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyzeJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub variables: Vec<String>,
    #[serde(rename = "J")]
    pub quotient: Option<String>,
    #[serde(rename = "I")]
    pub ideal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexJson>,
    pub decomposition: DecompositionJson,
    pub verdicts: Vec<VerdictJson>,
}

impl AnalyzeJson {
    /// Runs [`analyze`] on the case and attaches the facet section.
    pub fn for_case(case: &Case) -> Result<Self> {
        let report = analyze(case.quotient.as_ref(), &case.ideal)?;
        Ok(Self::new(&report, ComplexJson::of_case(case)?))
    }

    pub fn new(report: &AnalysisReport, complex: Option<ComplexJson>) -> Self {
        let ctx = &report.ctx;
        AnalyzeJson {
            schema: SCHEMA,
            command: "analyze",
            variables: ctx.names().to_vec(),
            quotient: report.quotient.as_ref().map(ToString::to_string),
            ideal: report.ideal.to_string(),
            complex,
            decomposition: DecompositionJson::new(ctx, &report.decomposition),
            verdicts: report.verdicts.iter().map(|v| VerdictJson::new(ctx, v)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinPrimesJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub variables: Vec<String>,
    #[serde(rename = "I")]
    pub ideal: String,
    pub decomposition: DecompositionJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphCommandJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub variables: Vec<String>,
    pub graph: GraphJson,
    pub certificate: CertificateJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub variables: Vec<String>,
    #[serde(rename = "I")]
    pub ideal: String,
    pub ideal_top: String,
    pub components: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub agree: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub checks: Vec<CheckJson>,
    pub all_agree: bool,
}

/// An output that can be printed either way.
pub trait Render: Serialize {
    fn to_text(&self) -> String;

    fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("output models serialize");
        s.push('\n');
        s
    }
}

impl Render for AnalyzeJson {
    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} analyze", self.schema);
        let _ = writeln!(out, "variables: {}", self.variables.join(", "));
        let _ = writeln!(out, "J = {}", self.quotient.as_deref().unwrap_or("(0)  [A = R]"));
        let _ = writeln!(out, "I = {}", self.ideal);
        if let Some(c) = &self.complex {
            c.render(&mut out);
        }
        self.decomposition.render(&mut out);
        let _ = writeln!(out, "verdicts:");
        for v in &self.verdicts {
            v.render(&mut out, "  ");
        }
        out
    }
}

impl Render for MinPrimesJson {
    fn to_text(&self) -> String {
        let mut out = format!("{} min-primes\nI = {}\n", self.schema, self.ideal);
        self.decomposition.render(&mut out);
        out
    }
}

impl Render for GraphCommandJson {
    fn to_text(&self) -> String {
        let mut out = format!("{} graph\n", self.schema);
        self.graph.render(&mut out, "");
        out.push_str("certificate: ");
        self.certificate.render(&mut out, "");
        out
    }
}

impl Render for SplitJson {
    fn to_text(&self) -> String {
        let mut out = format!("{} split\nI = {}\nI_d = {}\n", self.schema, self.ideal, self.ideal_top);
        for (i, c) in self.components.iter().enumerate() {
            let _ = writeln!(out, "  I_{} = {c}", i + 1);
        }
        out
    }
}

impl Render for VerifyJson {
    fn to_text(&self) -> String {
        let mut out = format!("{} verify\n", self.schema);
        for c in &self.checks {
            let mark = if c.agree { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  {mark} {} ({})", c.name, c.detail);
        }
        let _ = writeln!(out, "all agree: {}", self.all_agree);
        out
    }
}
