//! Prime graphs and their connectivity certificates.
//!
//! Four graphs are built here:
//!
//! * the off-locus graph of `A = R/J` relative to `I`: minimal primes of `A`
//!   outside `V(I)`, joined when some prime outside `V(I)` contains both;
//! * the codimension-one graph of `A = R/J`: top-dimensional minimal primes,
//!   joined when `p + q` has height one in `A`;
//! * the punctured graph of `I`: minimal primes other than `m`, joined when
//!   they meet away from `m`;
//! * the facet-ridge graph of a simplicial complex.
//!
//! For monomial primes `Rad(p + q)` is the monomial prime on `p ∪ q`, which
//! turns every edge quantifier over primes into a test on that one prime.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::decompose::{minimal_primes, minimal_transversals, Decomposition};
use crate::error::{Error, Result};
use crate::ideal::{maximalize, MonomialPrime, SquarefreeIdeal, VarSet, VariableContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// Minimal primes of `R/J` off `V(I)`; CLI name `def51`.
    OffLocus,
    /// Top-dimensional primes with height-one joins; CLI name `def61`.
    CodimOne,
    Punctured,
    FacetRidge,
}

impl GraphKind {
    pub fn cli_name(self) -> &'static str {
        match self {
            GraphKind::OffLocus => "def51",
            GraphKind::CodimOne => "def61",
            GraphKind::Punctured => "punctured",
            GraphKind::FacetRidge => "facet-ridge",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<Self> {
        match name {
            "def51" => Some(GraphKind::OffLocus),
            "def61" => Some(GraphKind::CodimOne),
            "punctured" => Some(GraphKind::Punctured),
            "facet-ridge" => Some(GraphKind::FacetRidge),
            _ => None,
        }
    }
}

/// The data a graph was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambient {
    /// `J` with `A = R/J`; `None` means `A = R`.
    pub quotient: Option<SquarefreeIdeal>,
    pub ideal: Option<SquarefreeIdeal>,
    pub n: usize,
}

/// An undirected simple graph whose vertices are variable subsets: monomial
/// primes, or facets for [`GraphKind::FacetRidge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGraph {
    pub kind: GraphKind,
    /// Sorted lexicographically.
    pub vertices: Vec<VarSet>,
    /// Pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub ambient: Ambient,
}

impl PrimeGraph {
    fn build(
        kind: GraphKind,
        mut vertices: Vec<VarSet>,
        ambient: Ambient,
        mut joined: impl FnMut(VarSet, VarSet) -> Result<bool>,
    ) -> Result<Self> {
        vertices.sort();
        let mut edges = Vec::new();
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                if joined(vertices[a], vertices[b])? {
                    edges.push((a, b));
                }
            }
        }
        Ok(PrimeGraph { kind, vertices, edges, ambient })
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn primes(&self) -> Vec<MonomialPrime> {
        self.vertices.iter().copied().map(MonomialPrime::new).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Connected,
    Disconnected,
    /// No vertices at all. Never folded into either boolean.
    Empty,
}

impl Connectivity {
    pub fn as_str(self) -> &'static str {
        match self {
            Connectivity::Connected => "connected",
            Connectivity::Disconnected => "disconnected",
            Connectivity::Empty => "empty",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    SpanningTree(Vec<(usize, usize)>),
    /// The first component against all the others.
    Bipartition { first: Vec<usize>, rest: Vec<usize> },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityCertificate {
    pub status: Connectivity,
    /// Sorted vertex indices per component, components ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub witness: Witness,
}

impl ConnectivityCertificate {
    /// Re-checks the certificate against the graph it claims to describe.
    pub fn validate(&self, g: &PrimeGraph) -> bool {
        let n = g.vertices.len();
        let mut seen = vec![false; n];
        for &v in self.components.iter().flatten() {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        match (&self.status, &self.witness) {
            (Connectivity::Empty, Witness::None) => n == 0,
            (Connectivity::Connected, Witness::SpanningTree(tree)) => {
                if n == 0 || tree.len() != n - 1 || self.components.len() != 1 {
                    return false;
                }
                if !tree.iter().all(|&(a, b)| a < n && b < n && g.has_edge(a, b)) {
                    return false;
                }
                let mut parent: Vec<usize> = (0..n).collect();
                fn root(parent: &mut [usize], mut v: usize) -> usize {
                    while parent[v] != v {
                        parent[v] = parent[parent[v]];
                        v = parent[v];
                    }
                    v
                }
                tree.iter().all(|&(a, b)| {
                    let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                    parent[ra] = rb;
                    ra != rb
                })
            }
            (Connectivity::Disconnected, Witness::Bipartition { first, rest }) => {
                if first.is_empty() || rest.is_empty() || first.len() + rest.len() != n {
                    return false;
                }
                let mut side = vec![None; n];
                for &v in first {
                    side[v] = Some(true);
                }
                for &v in rest {
                    side[v] = Some(false);
                }
                side.iter().all(Option::is_some)
                    && g.edges.iter().all(|&(a, b)| side[a] == side[b])
            }
            _ => false,
        }
    }
}

/// Components by breadth-first search, with a spanning tree or bipartition witness.
pub fn connectivity(g: &PrimeGraph) -> ConnectivityCertificate {
    let n = g.vertices.len();
    if n == 0 {
        return ConnectivityCertificate {
            status: Connectivity::Empty,
            components: Vec::new(),
            witness: Witness::None,
        };
    }
    let adj = g.adjacency();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut tree = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    component.push(w);
                    tree.push((v.min(w), v.max(w)));
                    queue.push_back(w);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    if components.len() == 1 {
        tree.sort_unstable();
        ConnectivityCertificate {
            status: Connectivity::Connected,
            components,
            witness: Witness::SpanningTree(tree),
        }
    } else {
        let first = components[0].clone();
        let mut rest: Vec<usize> = components[1..].iter().flatten().copied().collect();
        rest.sort_unstable();
        ConnectivityCertificate {
            status: Connectivity::Disconnected,
            components,
            witness: Witness::Bipartition { first, rest },
        }
    }
}

fn require_same_context(a: &SquarefreeIdeal, b: &SquarefreeIdeal) -> Result<()> {
    if a.context() == b.context() {
        Ok(())
    } else {
        Err(Error::Input("ideals live over different variable contexts".into()))
    }
}

/// Graph of the minimal primes of `A = R/J` lying outside `V(I)`. Two of
/// them are joined when a prime outside `V(I)` contains both, which happens
/// exactly when `I ⊄ p ∪ q`.
pub fn off_locus_graph(quotient: &SquarefreeIdeal, ideal: &SquarefreeIdeal) -> Result<PrimeGraph> {
    require_same_context(quotient, ideal)?;
    if ideal.is_unit() {
        return Err(Error::Domain("the off-locus graph needs a proper ideal I".into()));
    }
    let vertices = minimal_primes(quotient)?
        .into_iter()
        .filter(|&p| !ideal.contained_in_prime(p))
        .map(MonomialPrime::vars)
        .collect();
    let ambient = Ambient {
        quotient: Some(quotient.clone()),
        ideal: Some(ideal.clone()),
        n: ideal.n(),
    };
    PrimeGraph::build(GraphKind::OffLocus, vertices, ambient, |p, q| {
        Ok(!ideal.contained_in_prime(MonomialPrime::new(p.union(q))))
    })
}

/// `ht_{R/J}(P/J) = |P| - min{|r| : r minimal prime of J, r ⊆ P}`.
pub fn height_in_quotient(quotient: &SquarefreeIdeal, p: MonomialPrime) -> Result<usize> {
    if !quotient.contained_in_prime(p) {
        return Err(Error::Domain("the prime does not contain the quotient ideal".into()));
    }
    Ok(height_over(&minimal_primes(quotient)?, p))
}

fn height_over(min_primes: &[MonomialPrime], p: MonomialPrime) -> usize {
    let lowest = min_primes
        .iter()
        .filter(|r| r.is_subset(p))
        .map(|r| r.height())
        .min()
        .expect("a prime containing J contains a minimal prime of J");
    p.height() - lowest
}

/// Graph on the top-dimensional minimal primes of `A = R/J`, joined when
/// `p + q` has height one in `A`.
///
/// Each edge is decided twice: by the height in the quotient and by the
/// cardinality test `|p ∪ q| = height J + 1`. Disagreement is reported as
/// [`Error::Invariant`].
pub fn codim_one_graph(quotient: &SquarefreeIdeal) -> Result<PrimeGraph> {
    let dec = Decomposition::of(quotient)?;
    let c = dec.height_c;
    let vertices = dec.top_components().into_iter().map(MonomialPrime::vars).collect();
    let ambient = Ambient { quotient: Some(quotient.clone()), ideal: None, n: quotient.n() };
    PrimeGraph::build(GraphKind::CodimOne, vertices, ambient, |p, q| {
        let join = MonomialPrime::new(p.union(q));
        let by_height = height_over(&dec.min_primes, join) == 1;
        let by_count = join.height() == c + 1;
        if by_height != by_count {
            return Err(Error::Invariant(format!(
                "height-one test disagrees with the cardinality test for {p:?} and {q:?}"
            )));
        }
        Ok(by_height)
    })
}

/// Graph of the minimal primes of `I` other than `m`, joined when `p ∪ q`
/// is not all variables. Empty when `I` is `m`-primary.
pub fn punctured_graph(ideal: &SquarefreeIdeal) -> Result<PrimeGraph> {
    let n = ideal.n();
    let full = VarSet::full(n);
    let vertices = minimal_primes(ideal)?
        .into_iter()
        .map(MonomialPrime::vars)
        .filter(|&p| p != full)
        .collect();
    let ambient = Ambient { quotient: None, ideal: Some(ideal.clone()), n };
    PrimeGraph::build(GraphKind::Punctured, vertices, ambient, |p, q| Ok(p.union(q) != full))
}

/// A simplicial complex on the variables, given by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<VarSet>,
    n: usize,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal faces of the given list.
    pub fn new(ctx: &VariableContext, faces: Vec<VarSet>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::Input("a simplicial complex needs at least one facet".into()));
        }
        for &f in &faces {
            if !f.is_subset(ctx.full()) {
                return Err(Error::Input(format!("facet {f:?} uses undeclared variables")));
            }
        }
        Ok(SimplicialComplex { facets: maximalize(faces), n: ctx.n() })
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_face(&self, s: VarSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }
}

/// The Stanley–Reisner ideal: generated by the minimal non-faces.
///
/// A set is a non-face iff it meets the complement of every facet, so the
/// minimal non-faces are the minimal transversals of the facet complements.
pub fn stanley_reisner(
    ctx: &Arc<VariableContext>,
    complex: &SimplicialComplex,
) -> Result<SquarefreeIdeal> {
    if complex.n != ctx.n() {
        return Err(Error::Input("complex and context disagree on the variables".into()));
    }
    let full = ctx.full();
    let complements: Vec<VarSet> = complex.facets.iter().map(|f| full.difference(*f)).collect();
    SquarefreeIdeal::from_sets(ctx, minimal_transversals(&complements))
}

/// Facets of maximum size, joined when they share a ridge.
pub fn facet_ridge_graph(complex: &SimplicialComplex) -> PrimeGraph {
    let top = complex.facets.iter().map(|f| f.len()).max().unwrap_or(0);
    let vertices = complex.facets.iter().copied().filter(|f| f.len() == top).collect();
    let ambient = Ambient { quotient: None, ideal: None, n: complex.n };
    PrimeGraph::build(GraphKind::FacetRidge, vertices, ambient, |f, g| {
        Ok(f.intersection(g).len() + 1 == f.len())
    })
    .expect("the ridge test is infallible")
}

/// Whether `F ↦ complement(F)` maps the facet-ridge graph isomorphically
/// onto `primes` (vertices onto vertices, edges onto edges).
pub fn complement_isomorphic(facet_ridge: &PrimeGraph, primes: &PrimeGraph) -> bool {
    if facet_ridge.vertices.len() != primes.vertices.len()
        || facet_ridge.edges.len() != primes.edges.len()
    {
        return false;
    }
    let full = VarSet::full(facet_ridge.ambient.n);
    let image: Option<Vec<usize>> = facet_ridge
        .vertices
        .iter()
        .map(|f| primes.vertices.iter().position(|p| *p == full.difference(*f)))
        .collect();
    let Some(image) = image else {
        return false;
    };
    facet_ridge.edges.iter().all(|&(a, b)| primes.has_edge(image[a], image[b]))
}
