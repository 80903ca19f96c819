//! Brute-force reference answers by enumerating every monomial prime.
//!
//! Nothing here calls into `decompose` or `graph`; the only shared logic is
//! the containment test `I ⊆ P` from the ideal core. Cost is `O(2^n)` per
//! query, so every entry point refuses contexts above [`ORACLE_MAX_VARIABLES`].

use crate::error::{Error, Result};
use crate::ideal::{MonomialPrime, SquarefreeIdeal, VarSet};

pub const ORACLE_MAX_VARIABLES: usize = 14;

fn guard(n: usize) -> Result<()> {
    if n > ORACLE_MAX_VARIABLES {
        Err(Error::Capacity(format!(
            "the enumeration oracle handles at most {ORACLE_MAX_VARIABLES} variables, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Every subset of `{0..n-1}` exactly once, in increasing bitmask order.
#[derive(Debug, Clone)]
pub struct PrimeEnumeration {
    n: usize,
    next: u64,
}

impl PrimeEnumeration {
    pub fn new(n: usize) -> Result<Self> {
        guard(n)?;
        Ok(PrimeEnumeration { n, next: 0 })
    }
}

impl Iterator for PrimeEnumeration {
    type Item = MonomialPrime;

    fn next(&mut self) -> Option<MonomialPrime> {
        if self.next >= 1u64 << self.n {
            return None;
        }
        let p = MonomialPrime::new(VarSet::from_bits(self.next));
        self.next += 1;
        Some(p)
    }
}

/// All primes containing `I` that have no smaller prime containing `I`.
pub fn oracle_minimal_primes(ideal: &SquarefreeIdeal) -> Result<Vec<MonomialPrime>> {
    if ideal.is_unit() {
        return Err(Error::Domain("the unit ideal has no minimal primes".into()));
    }
    let over: Vec<MonomialPrime> =
        PrimeEnumeration::new(ideal.n())?.filter(|&p| ideal.contained_in_prime(p)).collect();
    let mut minimal: Vec<MonomialPrime> = over
        .iter()
        .copied()
        .filter(|&p| !over.iter().any(|&q| q != p && q.is_subset(p)))
        .collect();
    minimal.sort();
    Ok(minimal)
}

/// Literal edge rule of the off-locus graph: is there a prime containing
/// `p + q` that does not contain `I`?
pub fn oracle_off_locus_edge(
    quotient: &SquarefreeIdeal,
    ideal: &SquarefreeIdeal,
    p: MonomialPrime,
    q: MonomialPrime,
) -> Result<bool> {
    if p == q {
        return Err(Error::Domain("an edge needs two distinct vertices".into()));
    }
    let vertices: Vec<MonomialPrime> = oracle_minimal_primes(quotient)?
        .into_iter()
        .filter(|&r| !ideal.contained_in_prime(r))
        .collect();
    if !vertices.contains(&p) || !vertices.contains(&q) {
        return Err(Error::Domain("both primes must be vertices of the graph".into()));
    }
    let join = p.join(q);
    Ok(PrimeEnumeration::new(ideal.n())?
        .filter(|s| join.is_subset(*s))
        .any(|s| !ideal.contained_in_prime(s)))
}

/// Heights of every prime of `A = R/J`, as lengths of longest saturated
/// chains down to a minimal prime of `J`.
#[derive(Debug, Clone)]
pub struct QuotientHeights {
    n: usize,
    /// `None` for subsets that do not contain `J`.
    chain: Vec<Option<usize>>,
}

impl QuotientHeights {
    pub fn new(quotient: &SquarefreeIdeal) -> Result<Self> {
        let n = quotient.n();
        guard(n)?;
        let mut chain = vec![None; 1usize << n];
        // subsets before supersets in bitmask order
        for bits in 0u64..(1u64 << n) {
            let s = VarSet::from_bits(bits);
            if !quotient.contained_in_prime(MonomialPrime::new(s)) {
                continue;
            }
            let below = s
                .iter()
                .filter_map(|v| chain[s.without(v).bits() as usize])
                .max();
            chain[bits as usize] = Some(below.map_or(0, |h| h + 1));
        }
        Ok(QuotientHeights { n, chain })
    }

    /// Height of `P/J`, or `None` when `P ⊉ J`.
    pub fn height(&self, p: MonomialPrime) -> Option<usize> {
        self.chain[p.vars().bits() as usize]
    }

    /// Height of the ideal generated by `J` and the variables in `s`: the
    /// least height among primes containing it.
    pub fn ideal_height(&self, s: VarSet) -> Option<usize> {
        (0u64..(1u64 << self.n))
            .map(VarSet::from_bits)
            .filter(|t| s.is_subset(*t))
            .filter_map(|t| self.chain[t.bits() as usize])
            .min()
    }
}

pub fn oracle_height_in_quotient(quotient: &SquarefreeIdeal, p: MonomialPrime) -> Result<usize> {
    QuotientHeights::new(quotient)?
        .height(p)
        .ok_or_else(|| Error::Domain("the prime does not contain the quotient ideal".into()))
}

/// Literal edge rule of the codimension-one graph: `p + q` has height one in `R/J`.
pub fn oracle_codim_one_edge(
    quotient: &SquarefreeIdeal,
    p: MonomialPrime,
    q: MonomialPrime,
) -> Result<bool> {
    if p == q {
        return Err(Error::Domain("an edge needs two distinct vertices".into()));
    }
    let heights = QuotientHeights::new(quotient)?;
    Ok(heights.ideal_height(p.join(q).vars()) == Some(1))
}

/// Top-dimensional minimal primes, i.e. `dim R/p = dim R/J`.
pub fn oracle_top_components(quotient: &SquarefreeIdeal) -> Result<Vec<MonomialPrime>> {
    let minimal = oracle_minimal_primes(quotient)?;
    let least = minimal.iter().map(|p| p.height()).min().unwrap_or(0);
    Ok(minimal.into_iter().filter(|p| p.height() == least).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PuncturedComponents {
    Empty,
    Count(usize),
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn unite(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Components of the comparability graph on the monomial primes `P ⊇ I`
/// with `P ≠ m`.
///
/// That set is closed under intervals, so comparable pairs are already
/// linked through one-variable steps and only those are united.
pub fn oracle_punctured_components(ideal: &SquarefreeIdeal) -> Result<PuncturedComponents> {
    let n = ideal.n();
    guard(n)?;
    let full = VarSet::full(n);
    let members: Vec<bool> = (0u64..(1u64 << n))
        .map(|bits| {
            let s = VarSet::from_bits(bits);
            s != full && ideal.contained_in_prime(MonomialPrime::new(s))
        })
        .collect();
    let mut uf = UnionFind::new(members.len());
    for (bits, &inside) in members.iter().enumerate() {
        if !inside {
            continue;
        }
        for v in 0..n {
            let up = bits | (1usize << v);
            if up != bits && members[up] {
                uf.unite(bits, up);
            }
        }
    }
    let roots: std::collections::BTreeSet<usize> =
        (0..members.len()).filter(|&b| members[b]).map(|b| uf.find(b)).collect();
    Ok(match roots.len() {
        0 => PuncturedComponents::Empty,
        k => PuncturedComponents::Count(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{make_context, VariableContext};
    use std::sync::Arc;

    fn ideal(c: &Arc<VariableContext>, gens: &[&[&str]]) -> SquarefreeIdeal {
        let sets = gens.iter().map(|g| c.varset_by_names(g).unwrap()).collect();
        SquarefreeIdeal::from_sets(c, sets).unwrap()
    }

    fn prime(c: &VariableContext, vars: &[&str]) -> MonomialPrime {
        MonomialPrime::new(c.varset_by_names(vars).unwrap())
    }

    #[test]
    fn enumeration_visits_each_subset_once() {
        let all: Vec<u64> = PrimeEnumeration::new(4).unwrap().map(|p| p.vars().bits()).collect();
        assert_eq!(all, (0..16).collect::<Vec<_>>());
        assert!(matches!(PrimeEnumeration::new(15), Err(Error::Capacity(_))));
    }

    #[test]
    fn minimal_primes_by_enumeration() {
        let c = make_context(&["x", "y", "z", "w"]).unwrap();
        let cone = ideal(&c, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]]);
        assert_eq!(
            oracle_minimal_primes(&cone).unwrap(),
            vec![prime(&c, &["x", "y"]), prime(&c, &["z", "w"])]
        );
        assert_eq!(oracle_minimal_primes(&ideal(&c, &[&["x"]])).unwrap(), vec![prime(&c, &["x"])]);
        assert_eq!(
            oracle_minimal_primes(&SquarefreeIdeal::zero(&c)).unwrap(),
            vec![MonomialPrime::default()]
        );
        let names: Vec<String> = (0..20).map(|i| format!("v{i}")).collect();
        let big = make_context(&names).unwrap();
        assert!(matches!(
            oracle_minimal_primes(&SquarefreeIdeal::zero(&big)),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn off_locus_edges() {
        let c = make_context(&["x", "y"]).unwrap();
        let j = ideal(&c, &[&["x", "y"]]);
        let i = ideal(&c, &[&["x"], &["y"]]);
        let (x, y) = (prime(&c, &["x"]), prime(&c, &["y"]));
        assert!(!oracle_off_locus_edge(&j, &i, x, y).unwrap());
        assert!(matches!(oracle_off_locus_edge(&j, &i, x, x), Err(Error::Domain(_))));

        let c4 = make_context(&["x", "y", "z", "w"]).unwrap();
        let j = ideal(&c4, &[&["x", "z"]]);
        let i = ideal(&c4, &[&["w"]]);
        assert!(oracle_off_locus_edge(&j, &i, prime(&c4, &["x"]), prime(&c4, &["z"])).unwrap());
    }

    #[test]
    fn chain_heights() {
        let c = make_context(&["x", "y", "z", "w"]).unwrap();
        let zero = SquarefreeIdeal::zero(&c);
        assert_eq!(oracle_height_in_quotient(&zero, prime(&c, &["x", "y"])).unwrap(), 2);
        let cone = ideal(&c, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]]);
        assert_eq!(oracle_height_in_quotient(&cone, MonomialPrime::new(c.full())).unwrap(), 2);
        let c3 = make_context(&["x", "y", "z"]).unwrap();
        let bridge = ideal(&c3, &[&["y"], &["x", "z"]]);
        assert_eq!(oracle_height_in_quotient(&bridge, MonomialPrime::new(c3.full())).unwrap(), 1);
        assert!(oracle_codim_one_edge(&bridge, prime(&c3, &["x", "y"]), prime(&c3, &["y", "z"])).unwrap());
        assert!(!oracle_codim_one_edge(&cone, prime(&c, &["x", "y"]), prime(&c, &["z", "w"])).unwrap());
    }

    #[test]
    fn punctured_counts() {
        let c = make_context(&["x", "y", "z", "w"]).unwrap();
        let cone = ideal(&c, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]]);
        assert_eq!(oracle_punctured_components(&cone).unwrap(), PuncturedComponents::Count(2));
        let xy = ideal(&c, &[&["x"], &["y"]]);
        assert_eq!(oracle_punctured_components(&xy).unwrap(), PuncturedComponents::Count(1));
        let c3 = make_context(&["x", "y", "z"]).unwrap();
        let m = ideal(&c3, &[&["x"], &["y"], &["z"]]);
        assert_eq!(oracle_punctured_components(&m).unwrap(), PuncturedComponents::Empty);
    }
}
