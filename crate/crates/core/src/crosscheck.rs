//! Compares the main-path answers for one input against the enumeration oracle.

use crate::decompose::minimal_primes;
use crate::document::Case;
use crate::error::Result;
use crate::graph::{
    codim_one_graph, complement_isomorphic, connectivity, facet_ridge_graph, height_in_quotient,
    off_locus_graph, punctured_graph, Connectivity,
};
use crate::ideal::{MonomialPrime, SquarefreeIdeal};
use crate::oracle::{
    oracle_codim_one_edge, oracle_minimal_primes, oracle_off_locus_edge,
    oracle_punctured_components, oracle_top_components, PrimeEnumeration, PuncturedComponents,
    QuotientHeights,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub agree: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, agree: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), agree, detail: detail.into() }
    }
}

fn check_minimal_primes(label: &str, ideal: &SquarefreeIdeal, out: &mut Vec<Check>) -> Result<()> {
    let main = minimal_primes(ideal)?;
    let brute = oracle_minimal_primes(ideal)?;
    out.push(Check::new(
        format!("minimal_primes({label})"),
        main == brute,
        format!("{} primes", brute.len()),
    ));
    Ok(())
}

fn check_codim_one(label: &str, quotient: &SquarefreeIdeal, out: &mut Vec<Check>) -> Result<()> {
    let graph = codim_one_graph(quotient)?;
    let top = oracle_top_components(quotient)?;
    let vertices_agree = graph.primes() == top;
    let mut edges_agree = vertices_agree;
    if vertices_agree {
        for a in 0..top.len() {
            for b in a + 1..top.len() {
                if graph.has_edge(a, b) != oracle_codim_one_edge(quotient, top[a], top[b])? {
                    edges_agree = false;
                }
            }
        }
    }
    out.push(Check::new(
        format!("codim_one_graph({label})"),
        vertices_agree && edges_agree,
        format!("{} vertices, {} edges", graph.vertices.len(), graph.edges.len()),
    ));

    let heights = QuotientHeights::new(quotient)?;
    let mut agree = true;
    let mut count = 0;
    for p in PrimeEnumeration::new(quotient.n())? {
        if let Some(h) = heights.height(p) {
            count += 1;
            if height_in_quotient(quotient, p)? != h {
                agree = false;
            }
        }
    }
    out.push(Check::new(
        format!("height_in_quotient({label})"),
        agree,
        format!("{count} primes over {label}"),
    ));
    Ok(())
}

/// Runs every comparison that applies to the case.
pub fn crosscheck(case: &Case) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let ideal = &case.ideal;
    let zero = SquarefreeIdeal::zero(&case.ctx);
    let quotient = case.quotient.as_ref().unwrap_or(&zero);

    check_minimal_primes("I", ideal, &mut out)?;
    if let Some(j) = &case.quotient {
        check_minimal_primes("J", j, &mut out)?;
    }
    check_codim_one("I", ideal, &mut out)?;
    if let Some(j) = &case.quotient {
        check_codim_one("J", j, &mut out)?;
    }

    if ideal.is_proper() {
        let graph = off_locus_graph(quotient, ideal)?;
        let brute: Vec<MonomialPrime> = oracle_minimal_primes(quotient)?
            .into_iter()
            .filter(|&p| !ideal.contained_in_prime(p))
            .collect();
        let mut agree = graph.primes() == brute;
        if agree {
            for a in 0..brute.len() {
                for b in a + 1..brute.len() {
                    if graph.has_edge(a, b) != oracle_off_locus_edge(quotient, ideal, brute[a], brute[b])? {
                        agree = false;
                    }
                }
            }
        }
        out.push(Check::new(
            "off_locus_graph(J, I)",
            agree,
            format!("{} vertices, {} edges", graph.vertices.len(), graph.edges.len()),
        ));
    }

    let cert = connectivity(&punctured_graph(ideal)?);
    let main = match cert.status {
        Connectivity::Empty => PuncturedComponents::Empty,
        _ => PuncturedComponents::Count(cert.components.len()),
    };
    let brute = oracle_punctured_components(ideal)?;
    out.push(Check::new("punctured_components(I)", main == brute, format!("{brute:?}")));

    if let Some(complex) = &case.complex {
        if complex.is_pure() {
            let ridge = facet_ridge_graph(complex);
            let codim = codim_one_graph(ideal)?;
            out.push(Check::new(
                "facet_ridge_complement",
                complement_isomorphic(&ridge, &codim),
                format!("{} facets", ridge.vertices.len()),
            ));
        }
    }
    Ok(out)
}
