//! Verdict engines: decompositions and graphs turned into cited statements
//! about local cohomology, ideal transforms and punctured loci.
//!
//! The ambient ring is `R = k[x_1..x_n]`, regular and hence Gorenstein. The
//! module-theoretic statements are read at the homogeneous maximal ideal `m`;
//! minimal primes, unions and cardinalities of a monomial ideal do not change
//! under extension to the completion, which is what lets the complete-ring
//! results be quoted here. None of the modules involved are ever computed.

use std::sync::Arc;

use crate::decompose::{
    ext_height_mod_prime, height, minimal_primes, reduction_assertions, u_ideal, Decomposition,
};
use crate::error::{Error, Result};
use crate::graph::{
    codim_one_graph, connectivity, off_locus_graph, punctured_graph, Connectivity,
    ConnectivityCertificate, PrimeGraph,
};
use crate::ideal::{MonomialPrime, SquarefreeIdeal, VariableContext};

/// The statements a verdict can be about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    HcIndecomposable,
    IdealTransformIndecomposable,
    IdealTransformLocal,
    GradeTwoConnected,
    TopCohomologyIndecomposable,
    PuncturedConnected,
    EndomorphismRing,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::HcIndecomposable => "hc_indecomposable",
            Claim::IdealTransformIndecomposable => "ideal_transform_indecomposable",
            Claim::IdealTransformLocal => "ideal_transform_local",
            Claim::GradeTwoConnected => "grade_two_connected",
            Claim::TopCohomologyIndecomposable => "top_cohomology_indecomposable",
            Claim::PuncturedConnected => "punctured_connected",
            Claim::EndomorphismRing => "endomorphism_ring",
        }
    }

    /// The result each verdict rests on. Kept in this one table.
    pub fn basis(self) -> &'static str {
        match self {
            Claim::HcIndecomposable => {
                "local Gorenstein R, c = height I: H^c_I(R) is indecomposable iff the graph \
                 G_{R/I} is connected iff V(I_d) is connected in codimension one"
            }
            Claim::IdealTransformIndecomposable => {
                "Noetherian A, proper I: D_I(A) is indecomposable as an A-module iff \
                 Spec A \\ V(I) is connected; D_I(A) = D_I(A/U_1) + ... + D_I(A/U_t) over the \
                 components of G(I), each summand indecomposable, and H^0_I(A) = U_1 ∩ ... ∩ U_t"
            }
            Claim::IdealTransformLocal => {
                "complete local A with height (I + p)/p > 1 for every p in Ass A: D_I(A) is a \
                 local ring iff Spec A \\ V(I) is connected"
            }
            Claim::GradeTwoConnected => "grade I >= 2 implies Spec A \\ V(I) is connected",
            Claim::TopCohomologyIndecomposable => {
                "complete local A of dimension d: H^d_m(A) is indecomposable iff \
                 Hom_A(H^d_m(A), H^d_m(A)) is a local Noetherian ring finite over A iff G_A is \
                 connected iff V(0_d) is connected in codimension one"
            }
            Claim::PuncturedConnected => {
                "complete local A: D^I(A) is indecomposable as a ring iff V(I) \\ {m} is \
                 connected; vanishing of lim H^i_m(A/I^a) for i = 0, 1 forces V(I Â) \\ {m} \
                 to be connected"
            }
            Claim::EndomorphismRing => {
                "Gorenstein R with dim R/I = 1: Hom_R(H^c_I(R), H^c_I(R)) = R^I / u(I) for the \
                 I-adic completion R^I, a commutative local Noetherian ring"
            }
        }
    }
}

/// Boolean outcome, or `Empty` when the locus in question has no points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    True,
    False,
    Empty,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::True => "true",
            Outcome::False => "false",
            Outcome::Empty => "empty",
        }
    }

    fn from_connectivity(c: Connectivity) -> Self {
        match c {
            Connectivity::Connected => Outcome::True,
            Connectivity::Disconnected => Outcome::False,
            Connectivity::Empty => Outcome::Empty,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SideValue {
    Int(usize),
    Bool(bool),
    Ideal(SquarefreeIdeal),
    Ideals(Vec<SquarefreeIdeal>),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideItem {
    pub name: &'static str,
    pub value: SideValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub claim: Claim,
    /// `None` when no result applies, e.g. an empty locus.
    pub citation: Option<&'static str>,
    pub statement: String,
    pub result: Outcome,
    pub graph: Option<PrimeGraph>,
    pub certificate: Option<ConnectivityCertificate>,
    pub side: Vec<SideItem>,
    pub notes: Vec<String>,
    /// Consequences that hold under extra hypotheses checked on this input.
    pub attached: Vec<Verdict>,
}

impl Verdict {
    fn new(claim: Claim, statement: String, result: Outcome) -> Self {
        Verdict {
            claim,
            citation: Some(claim.basis()),
            statement,
            result,
            graph: None,
            certificate: None,
            side: Vec::new(),
            notes: Vec::new(),
            attached: Vec::new(),
        }
    }

    fn with_graph(mut self, graph: PrimeGraph, cert: ConnectivityCertificate) -> Self {
        self.graph = Some(graph);
        self.certificate = Some(cert);
        self
    }

    fn push(&mut self, name: &'static str, value: SideValue) {
        self.side.push(SideItem { name, value });
    }

    pub fn side_value(&self, name: &str) -> Option<&SideValue> {
        self.side.iter().find(|s| s.name == name).map(|s| &s.value)
    }

    /// Certificates re-checked against their graphs, recursively.
    pub fn validate(&self) -> bool {
        let own = match (&self.graph, &self.certificate) {
            (Some(g), Some(c)) => c.validate(g),
            (None, None) => true,
            _ => false,
        };
        own && self.attached.iter().all(Verdict::validate)
    }
}

const POLYNOMIAL_AMBIENT: &str = "R = k[x_1..x_n] is regular, hence Gorenstein; local statements \
     are taken at the homogeneous maximal ideal m";
const COMPLETION: &str = "the statement is for the completion; minimal primes and their unions \
     are unchanged by extending a monomial ideal to k[[x_1..x_n]]";
const OPEN_NOETHERIAN: &str = "open: for dim R/I >= 2 it is not known whether \
     Hom_R(H^c_I(R), H^c_I(R)) is Noetherian, or whether that property is equivalent to \
     indecomposability; no claim is made";
const RING_VS_MODULE: &str = "open: whether indecomposability of D^I(A) as a ring agrees with \
     indecomposability as an A-module is not known; only the ring statement is made";

fn require_nonzero_proper(ideal: &SquarefreeIdeal) -> Result<()> {
    if ideal.is_unit() || ideal.is_zero() {
        Err(Error::Domain(format!("H^c_I(R) needs a nonzero proper ideal, got {ideal}")))
    } else {
        Ok(())
    }
}

fn component_ideals(
    ctx: &Arc<VariableContext>,
    graph: &PrimeGraph,
    cert: &ConnectivityCertificate,
) -> Vec<SquarefreeIdeal> {
    cert.components
        .iter()
        .map(|comp| {
            let primes: Vec<MonomialPrime> =
                comp.iter().map(|&v| MonomialPrime::new(graph.vertices[v])).collect();
            SquarefreeIdeal::intersect_primes(ctx, &primes)
        })
        .collect()
}

/// `I_1, ..., I_t` with `H^c_I(R) = H^c_{I_1}(R) + ... + H^c_{I_t}(R)`: one
/// intersection of top-dimensional primes per component of `G_{R/I}`.
pub fn split_hc(ideal: &SquarefreeIdeal) -> Result<Vec<SquarefreeIdeal>> {
    require_nonzero_proper(ideal)?;
    let graph = codim_one_graph(ideal)?;
    let cert = connectivity(&graph);
    Ok(component_ideals(ideal.context(), &graph, &cert))
}

/// Indecomposability of `H^c_I(R)` from the connectivity of `G_{R/I}`.
pub fn analyze_hc(ideal: &SquarefreeIdeal) -> Result<Verdict> {
    require_nonzero_proper(ideal)?;
    let dec = Decomposition::of(ideal)?;
    let c = dec.height_c;
    let graph = codim_one_graph(ideal)?;
    let cert = connectivity(&graph);
    let result = Outcome::from_connectivity(cert.status);
    let statement = match result {
        Outcome::True => format!("H^{c}_I(R) is indecomposable"),
        _ => format!("H^{c}_I(R) is decomposable"),
    };
    let split = component_ideals(ideal.context(), &graph, &cert);

    let mut v = Verdict::new(Claim::HcIndecomposable, statement, result);
    v.push("c", SideValue::Int(c));
    v.push("d", SideValue::Int(dec.dim_d));
    v.push("ideal_top", SideValue::Ideal(dec.ideal_top()));
    v.push("split", SideValue::Ideals(split));
    if !dec.is_unmixed() {
        let r = reduction_assertions(ideal)?;
        if !(r.ht_lower_ok && r.ht_sum_ok) {
            return Err(Error::Invariant(format!(
                "height bounds for replacing {ideal} by its top part failed: {r:?}"
            )));
        }
        v.push("lower_part", SideValue::Ideal(dec.lower_part()));
        v.push("ht_lower_ok", SideValue::Bool(r.ht_lower_ok));
        v.push("ht_sum_ok", SideValue::Bool(r.ht_sum_ok));
        v.notes.push("H^c_I(R) = H^c_{I_d}(R): the lower-dimensional part has height > c and \
             meets I_d in height >= c + 2"
            .into());
    }
    v.notes.push(POLYNOMIAL_AMBIENT.into());
    if dec.dim_d >= 2 {
        v.notes.push(OPEN_NOETHERIAN.into());
    }
    Ok(v.with_graph(graph, cert))
}

/// Indecomposability and splitting of the ideal transform `D_I(A)`, `A = R/J`.
pub fn analyze_ideal_transform(
    quotient: &SquarefreeIdeal,
    ideal: &SquarefreeIdeal,
) -> Result<Verdict> {
    let ctx = ideal.context();
    let graph = off_locus_graph(quotient, ideal)?;
    let cert = connectivity(&graph);
    let result = Outcome::from_connectivity(cert.status);
    let parts = component_ideals(ctx, &graph, &cert);

    let mut v = match result {
        Outcome::True => Verdict::new(
            Claim::IdealTransformIndecomposable,
            "D_I(A) is indecomposable as an A-module".into(),
            result,
        ),
        Outcome::False => {
            let sum = (1..=parts.len())
                .map(|i| format!("D_I(A/U_{i})"))
                .collect::<Vec<_>>()
                .join(" + ");
            Verdict::new(
                Claim::IdealTransformIndecomposable,
                format!("D_I(A) decomposes: D_I(A) = {sum}, each summand indecomposable"),
                result,
            )
        }
        Outcome::Empty => {
            let mut v = Verdict::new(
                Claim::IdealTransformIndecomposable,
                "Spec A \\ V(I) is empty: I is nilpotent in A and D_I(A) = 0".into(),
                result,
            );
            v.citation = None;
            v
        }
    };

    if result != Outcome::Empty {
        let h0 = parts
            .iter()
            .fold(SquarefreeIdeal::unit(ctx), |acc, u| acc.intersect(u).expect("same context"));
        let all = SquarefreeIdeal::intersect_primes(ctx, &graph.primes());
        if h0 != all {
            return Err(Error::Invariant(format!(
                "intersection of the U_i is {h0}, expected {all}"
            )));
        }
        v.push("U", SideValue::Ideals(parts));
        v.push("H0", SideValue::Ideal(h0));
        v.push("h0_check", SideValue::Bool(true));
    }

    // local-ring criterion when every (I + p)/p has height > 1
    let ass = minimal_primes(quotient)?;
    let mut ext_ok = true;
    for &p in &ass {
        if ext_height_mod_prime(ideal, p)? <= 1 {
            ext_ok = false;
            break;
        }
    }
    v.push("ext_heights_above_one", SideValue::Bool(ext_ok));
    if ext_ok && result != Outcome::Empty {
        let statement = if result == Outcome::True {
            "D_I(A) is a local ring"
        } else {
            "D_I(A) is not a local ring"
        };
        let mut local = Verdict::new(Claim::IdealTransformLocal, statement.into(), result);
        local.notes.push(COMPLETION.into());
        v.attached.push(local.with_graph(graph.clone(), cert.clone()));
    }

    if quotient.is_zero() && !ideal.is_zero() {
        let ht = height(ideal)?;
        if ht >= 2 {
            if cert.status != Connectivity::Connected {
                return Err(Error::Invariant(format!(
                    "grade {ht} >= 2 but Spec R \\ V(I) is not connected for {ideal}"
                )));
            }
            let mut grade = Verdict::new(
                Claim::GradeTwoConnected,
                format!("grade I = height I = {ht} >= 2, so Spec R \\ V(I) is connected"),
                Outcome::True,
            );
            grade.notes.push("grade equals height in the Cohen-Macaulay ring R".into());
            v.attached.push(grade.with_graph(graph.clone(), cert.clone()));
        }
    }
    v.notes.push(format!("A = R/J with J = {quotient}"));
    Ok(v.with_graph(graph, cert))
}

/// Indecomposability of `H^d_m(A)` for `A = R/J`.
pub fn analyze_top_cohomology(quotient: &SquarefreeIdeal) -> Result<Verdict> {
    let dec = Decomposition::of(quotient)?;
    let graph = codim_one_graph(quotient)?;
    let cert = connectivity(&graph);
    let result = Outcome::from_connectivity(cert.status);
    let d = dec.dim_d;
    let statement = match result {
        Outcome::True => format!(
            "H^{d}_m(A) is indecomposable and Hom_A(H^{d}_m(A), H^{d}_m(A)) is a local Noetherian ring"
        ),
        _ => format!(
            "H^{d}_m(A) is decomposable and Hom_A(H^{d}_m(A), H^{d}_m(A)) is not a local ring"
        ),
    };
    let mut v = Verdict::new(Claim::TopCohomologyIndecomposable, statement, result);
    v.push("d", SideValue::Int(d));
    v.push("zero_d", SideValue::Ideal(dec.ideal_top()));
    v.notes.push(COMPLETION.into());
    Ok(v.with_graph(graph, cert))
}

/// Connectedness of `V(I) \ {m}` and what it says about `D^I(R̂)`.
pub fn analyze_punctured(ideal: &SquarefreeIdeal) -> Result<Verdict> {
    let graph = punctured_graph(ideal)?;
    let cert = connectivity(&graph);
    let result = Outcome::from_connectivity(cert.status);
    let mut v = match result {
        Outcome::True => Verdict::new(
            Claim::PuncturedConnected,
            "V(I) \\ {m} is connected, so D^I(R^) is indecomposable as a ring".into(),
            result,
        ),
        Outcome::False => Verdict::new(
            Claim::PuncturedConnected,
            "V(I) \\ {m} is disconnected, so D^I(R^) decomposes as a ring and \
             lim H^i_m(R/I^a) != 0 for some i in {0, 1}"
                .into(),
            result,
        ),
        Outcome::Empty => {
            let mut v = Verdict::new(
                Claim::PuncturedConnected,
                "V(I) \\ {m} is empty: I is m-primary".into(),
                result,
            );
            v.citation = None;
            v
        }
    };
    if result != Outcome::Empty {
        v.notes.push(COMPLETION.into());
        v.notes.push(RING_VS_MODULE.into());
    }
    Ok(v.with_graph(graph, cert))
}

/// `dim A/IA` for `A = R/J`.
pub fn dim_over(quotient: &SquarefreeIdeal, ideal: &SquarefreeIdeal) -> Result<usize> {
    Ok(Decomposition::of(&ideal.sum(quotient)?)?.dim_d)
}

/// The endomorphism ring of `H^c_I` when `dim A/IA = 1`.
pub fn endomorphism_report(quotient: &SquarefreeIdeal, ideal: &SquarefreeIdeal) -> Result<Verdict> {
    let dim = dim_over(quotient, ideal)?;
    if dim != 1 {
        return Err(Error::Domain(format!(
            "the endomorphism ring is only described for dim R/I = 1, here it is {dim}"
        )));
    }
    let u = u_ideal(quotient, ideal)?;
    let mut v = Verdict::new(
        Claim::EndomorphismRing,
        format!(
            "Hom(H^c_I, H^c_I) = A^I / u with u = {u}, a commutative local Noetherian ring"
        ),
        Outcome::True,
    );
    v.push("u", SideValue::Ideal(u));
    v.push("dim", SideValue::Int(dim));
    v.notes.push(POLYNOMIAL_AMBIENT.into());
    if !quotient.is_zero() {
        v.notes.push(format!(
            "the description assumes the ambient A = R/J, J = {quotient}, is Gorenstein; \
             commutativity of the endomorphism ring is only known over Gorenstein rings"
        ));
    }
    Ok(v)
}

/// Input echo, decomposition summary and every applicable verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub ctx: Arc<VariableContext>,
    pub quotient: Option<SquarefreeIdeal>,
    pub ideal: SquarefreeIdeal,
    pub decomposition: Decomposition,
    pub verdicts: Vec<Verdict>,
}

impl AnalysisReport {
    pub fn validate(&self) -> bool {
        self.verdicts.iter().all(Verdict::validate)
    }
}

/// Runs every verdict that applies to `(J, I)`. Fails with
/// [`Error::Invariant`] if any certificate does not re-validate.
pub fn analyze(quotient: Option<&SquarefreeIdeal>, ideal: &SquarefreeIdeal) -> Result<AnalysisReport> {
    let ctx = ideal.context().clone();
    let decomposition = Decomposition::of(ideal)?;
    let zero = SquarefreeIdeal::zero(&ctx);
    let ambient = quotient.unwrap_or(&zero);

    let mut verdicts = vec![analyze_hc(ideal)?];
    if let Some(j) = quotient {
        verdicts.push(analyze_ideal_transform(j, ideal)?);
        verdicts.push(analyze_top_cohomology(j)?);
    }
    verdicts.push(analyze_punctured(ideal)?);
    if dim_over(ambient, ideal)? == 1 {
        verdicts.push(endomorphism_report(ambient, ideal)?);
    }
    let report = AnalysisReport {
        ctx,
        quotient: quotient.cloned(),
        ideal: ideal.clone(),
        decomposition,
        verdicts,
    };
    if !report.validate() {
        return Err(Error::Invariant("a connectivity certificate failed to re-validate".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::make_context;

    fn ideal(c: &Arc<VariableContext>, gens: &[&[&str]]) -> SquarefreeIdeal {
        let sets = gens.iter().map(|g| c.varset_by_names(g).unwrap()).collect();
        SquarefreeIdeal::from_sets(c, sets).unwrap()
    }

    fn cone() -> (Arc<VariableContext>, SquarefreeIdeal) {
        let c = make_context(&["x", "y", "z", "w"]).unwrap();
        let i = ideal(&c, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]]);
        (c, i)
    }

    #[test]
    fn hc_verdicts() {
        let (c, i) = cone();
        let v = analyze_hc(&i).unwrap();
        assert_eq!(v.result, Outcome::False);
        assert_eq!(v.statement, "H^2_I(R) is decomposable");
        assert!(v.validate());
        assert_eq!(
            split_hc(&i).unwrap(),
            vec![ideal(&c, &[&["x"], &["y"]]), ideal(&c, &[&["z"], &["w"]])]
        );

        let c3 = make_context(&["x", "y", "z"]).unwrap();
        let bridge = ideal(&c3, &[&["y"], &["x", "z"]]);
        assert_eq!(analyze_hc(&bridge).unwrap().result, Outcome::True);
        assert_eq!(split_hc(&bridge).unwrap(), vec![bridge.clone()]);
        let x = ideal(&c3, &[&["x"]]);
        assert_eq!(analyze_hc(&x).unwrap().result, Outcome::True);
        assert_eq!(split_hc(&x).unwrap(), vec![x]);

        assert!(matches!(analyze_hc(&SquarefreeIdeal::zero(&c3)), Err(Error::Domain(_))));
        assert!(matches!(analyze_hc(&SquarefreeIdeal::unit(&c3)), Err(Error::Domain(_))));
    }

    #[test]
    fn mixed_hc_carries_reduction_data() {
        let c = make_context(&["x", "y", "z"]).unwrap();
        let i = ideal(&c, &[&["x", "y"], &["x", "z"]]);
        let v = analyze_hc(&i).unwrap();
        assert_eq!(v.side_value("ht_lower_ok"), Some(&SideValue::Bool(true)));
        assert_eq!(v.side_value("ideal_top"), Some(&SideValue::Ideal(ideal(&c, &[&["x"]]))));
        // dim R/I = 2 surfaces the open question
        assert!(v.notes.iter().any(|n| n.starts_with("open:")));
    }

    #[test]
    fn ideal_transform_node() {
        let c = make_context(&["x", "y"]).unwrap();
        let j = ideal(&c, &[&["x", "y"]]);
        let i = ideal(&c, &[&["x"], &["y"]]);
        let v = analyze_ideal_transform(&j, &i).unwrap();
        assert_eq!(v.result, Outcome::False);
        assert_eq!(
            v.side_value("U"),
            Some(&SideValue::Ideals(vec![ideal(&c, &[&["x"]]), ideal(&c, &[&["y"]])]))
        );
        assert_eq!(v.side_value("H0"), Some(&SideValue::Ideal(j.clone())));
        assert!(v.statement.contains("D_I(A/U_1) + D_I(A/U_2)"));
    }

    #[test]
    fn ideal_transform_grade_two() {
        let c = make_context(&["x", "y", "z"]).unwrap();
        let zero = SquarefreeIdeal::zero(&c);
        let v = analyze_ideal_transform(&zero, &ideal(&c, &[&["x"], &["y"]])).unwrap();
        assert_eq!(v.result, Outcome::True);
        assert_eq!(v.graph.as_ref().unwrap().vertices.len(), 1);
        assert!(v.attached.iter().any(|a| a.claim == Claim::GradeTwoConnected));
        // ht((x,y) + 0)/0 = 2 > 1 at the only associated prime
        assert!(v.attached.iter().any(|a| a.claim == Claim::IdealTransformLocal));
    }

    #[test]
    fn ideal_transform_cone_over_maximal() {
        let (c, j) = cone();
        let m = ideal(&c, &[&["x"], &["y"], &["z"], &["w"]]);
        let v = analyze_ideal_transform(&j, &m).unwrap();
        assert_eq!(v.result, Outcome::False);
        assert_eq!(
            v.side_value("U"),
            Some(&SideValue::Ideals(vec![ideal(&c, &[&["x"], &["y"]]), ideal(&c, &[&["z"], &["w"]])]))
        );
        let local = v.attached.iter().find(|a| a.claim == Claim::IdealTransformLocal).unwrap();
        assert_eq!(local.statement, "D_I(A) is not a local ring");
    }

    #[test]
    fn ideal_transform_empty_locus() {
        let c = make_context(&["x", "y"]).unwrap();
        let j = ideal(&c, &[&["x"]]);
        let v = analyze_ideal_transform(&j, &ideal(&c, &[&["x"]])).unwrap();
        assert_eq!(v.result, Outcome::Empty);
        assert_eq!(v.citation, None);
    }

    #[test]
    fn top_cohomology() {
        let (_, j) = cone();
        assert_eq!(analyze_top_cohomology(&j).unwrap().result, Outcome::False);
        let c3 = make_context(&["x", "y", "z"]).unwrap();
        assert_eq!(
            analyze_top_cohomology(&ideal(&c3, &[&["y"], &["x", "z"]])).unwrap().result,
            Outcome::True
        );
        let v = analyze_top_cohomology(&SquarefreeIdeal::zero(&c3)).unwrap();
        assert_eq!(v.result, Outcome::True);
        assert_eq!(v.graph.unwrap().vertices.len(), 1);
    }

    #[test]
    fn punctured() {
        let (c, i) = cone();
        assert_eq!(analyze_punctured(&i).unwrap().result, Outcome::False);
        let v = analyze_punctured(&ideal(&c, &[&["x"], &["y"]])).unwrap();
        assert_eq!(v.result, Outcome::True);
        let c3 = make_context(&["x", "y", "z"]).unwrap();
        let v = analyze_punctured(&ideal(&c3, &[&["x"], &["y"], &["z"]])).unwrap();
        assert_eq!(v.result, Outcome::Empty);
        assert_eq!(v.citation, None);
        assert!(v.validate());
    }

    #[test]
    fn endomorphism() {
        let c3 = make_context(&["x", "y", "z"]).unwrap();
        let zero = SquarefreeIdeal::zero(&c3);
        let v = endomorphism_report(&zero, &ideal(&c3, &[&["x"], &["y"]])).unwrap();
        assert_eq!(v.side_value("u"), Some(&SideValue::Ideal(zero.clone())));
        assert!(matches!(
            endomorphism_report(&zero, &ideal(&c3, &[&["x"]])),
            Err(Error::Domain(_))
        ));
        let c2 = make_context(&["x", "y"]).unwrap();
        let v = endomorphism_report(&ideal(&c2, &[&["x", "y"]]), &ideal(&c2, &[&["x"]])).unwrap();
        assert_eq!(v.side_value("u"), Some(&SideValue::Ideal(ideal(&c2, &[&["x"]]))));
    }

    #[test]
    fn full_report() {
        let c = make_context(&["x", "y"]).unwrap();
        let j = ideal(&c, &[&["x", "y"]]);
        let i = ideal(&c, &[&["x"], &["y"]]);
        let r = analyze(Some(&j), &i).unwrap();
        let claims: Vec<Claim> = r.verdicts.iter().map(|v| v.claim).collect();
        assert_eq!(
            claims,
            vec![
                Claim::HcIndecomposable,
                Claim::IdealTransformIndecomposable,
                Claim::TopCohomologyIndecomposable,
                Claim::PuncturedConnected,
            ]
        );
        assert!(r.validate());
    }
}
