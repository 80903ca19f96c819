//! Minimal primes, heights and the top/lower split of a squarefree ideal.
//!
//! A squarefree monomial ideal is radical, so its reduced primary
//! decomposition is the intersection of its minimal primes, and those are the
//! minimal transversals (vertex covers) of the generator hypergraph.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialPrime, SquarefreeIdeal, VarSet, VariableContext};

/// Minimal transversals of a hypergraph by Berge multiplication.
///
/// Edges are folded in one at a time, smallest first, keeping the antichain
/// of minimal partial transversals. No edges gives `[∅]`; an empty edge
/// cannot be hit and gives `[]`.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut edges = edges.to_vec();
    edges.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    edges.dedup();

    let mut partial = vec![VarSet::EMPTY];
    for edge in edges {
        if edge.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(partial.len() * 2);
        let mut misses = Vec::new();
        for t in partial {
            if t.meets(edge) {
                next.push(t);
            } else {
                misses.push(t);
            }
        }
        let hitting = next.len();
        for t in misses {
            for v in edge.iter() {
                let candidate = t.with(v);
                // absorbed by an old transversal that already hits this edge
                if !next[..hitting].iter().any(|h| h.is_subset(candidate)) {
                    next.push(candidate);
                }
            }
        }
        partial = minimalize(next);
    }
    partial
}

fn require_proper(ideal: &SquarefreeIdeal) -> Result<()> {
    if ideal.is_unit() {
        Err(Error::Domain("the unit ideal has no minimal primes".into()))
    } else {
        Ok(())
    }
}

/// Minimal primes of a proper ideal, sorted lexicographically. The zero
/// ideal has the single minimal prime `∅`.
pub fn minimal_primes(ideal: &SquarefreeIdeal) -> Result<Vec<MonomialPrime>> {
    require_proper(ideal)?;
    Ok(minimal_transversals(ideal.gens()).into_iter().map(MonomialPrime::new).collect())
}

/// `height I`, the smallest minimal prime.
pub fn height(ideal: &SquarefreeIdeal) -> Result<usize> {
    Ok(Decomposition::of(ideal)?.height_c)
}

/// `dim R/I = n - height I`.
pub fn dim_quotient(ideal: &SquarefreeIdeal) -> Result<usize> {
    Ok(Decomposition::of(ideal)?.dim_d)
}

/// Minimal primes of minimum height, i.e. the highest dimensional components.
pub fn top_components(ideal: &SquarefreeIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(Decomposition::of(ideal)?.top_components())
}

/// `I_d`: the intersection of the highest dimensional components.
pub fn ideal_top(ideal: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    Ok(Decomposition::of(ideal)?.ideal_top())
}

/// Intersection of the components of dimension below `dim R/I`; the unit
/// ideal when `I` is unmixed.
pub fn lower_part(ideal: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    Ok(Decomposition::of(ideal)?.lower_part())
}

/// The decomposition of a proper squarefree ideal into minimal primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub ideal: SquarefreeIdeal,
    pub min_primes: Vec<MonomialPrime>,
    /// `c = height I`
    pub height_c: usize,
    /// `d = dim R/I`
    pub dim_d: usize,
}

impl Decomposition {
    pub fn of(ideal: &SquarefreeIdeal) -> Result<Self> {
        let min_primes = minimal_primes(ideal)?;
        let height_c = min_primes.iter().map(|p| p.height()).min().unwrap_or(0);
        Ok(Decomposition {
            ideal: ideal.clone(),
            dim_d: ideal.n() - height_c,
            min_primes,
            height_c,
        })
    }

    fn ctx(&self) -> &Arc<VariableContext> {
        self.ideal.context()
    }

    pub fn top_components(&self) -> Vec<MonomialPrime> {
        self.min_primes.iter().copied().filter(|p| p.height() == self.height_c).collect()
    }

    pub fn lower_components(&self) -> Vec<MonomialPrime> {
        self.min_primes.iter().copied().filter(|p| p.height() != self.height_c).collect()
    }

    pub fn is_unmixed(&self) -> bool {
        self.min_primes.iter().all(|p| p.height() == self.height_c)
    }

    pub fn ideal_top(&self) -> SquarefreeIdeal {
        SquarefreeIdeal::intersect_primes(self.ctx(), &self.top_components())
    }

    pub fn lower_part(&self) -> SquarefreeIdeal {
        SquarefreeIdeal::intersect_primes(self.ctx(), &self.lower_components())
    }
}

/// Height bounds that justify replacing `I` by `I_d` for a mixed ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionAssertions {
    /// `height J >= c + 1` for the lower part `J`.
    pub ht_lower_ok: bool,
    /// `height (I_d + J) >= c + 2`.
    pub ht_sum_ok: bool,
    pub c: usize,
}

/// Checks both height bounds. Either one failing is a bug, not a property of
/// the input.
pub fn reduction_assertions(ideal: &SquarefreeIdeal) -> Result<ReductionAssertions> {
    let dec = Decomposition::of(ideal)?;
    if dec.is_unmixed() {
        return Err(Error::Domain("no reduction needed: the ideal is unmixed".into()));
    }
    let c = dec.height_c;
    let top = dec.ideal_top();
    let lower = dec.lower_part();
    let ht_lower = height(&lower)?;
    let ht_sum = height(&top.sum(&lower)?)?;
    Ok(ReductionAssertions { ht_lower_ok: ht_lower > c, ht_sum_ok: ht_sum >= c + 2, c })
}

/// Height of `(I + p)/p` inside the polynomial ring on the variables outside
/// `p`. Generators meeting `p` vanish there; if none survive the image is the
/// zero ideal and the height is 0.
pub fn ext_height_mod_prime(ideal: &SquarefreeIdeal, p: MonomialPrime) -> Result<usize> {
    require_proper(ideal)?;
    let surviving: Vec<VarSet> =
        ideal.gens().iter().copied().filter(|g| !g.meets(p.vars())).collect();
    Ok(minimal_transversals(&surviving).iter().map(|t| t.len()).min().unwrap_or(0))
}

/// `u_A(I)` for `A = R/J`: the intersection of the minimal primes `p` of `J`
/// with `dim R/(I + p) > 0`. An empty family gives the unit ideal (`u = A`).
pub fn u_ideal(ambient: &SquarefreeIdeal, ideal: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    let ctx = ambient.context();
    // context check
    ambient.sum(ideal)?;
    require_proper(ideal)?;
    let mut kept = Vec::new();
    for p in minimal_primes(ambient)? {
        let sum = ideal.sum(&p.to_ideal(ctx))?;
        if !sum.is_unit() && dim_quotient(&sum)? > 0 {
            kept.push(p);
        }
    }
    Ok(SquarefreeIdeal::intersect_primes(ctx, &kept))
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::ideal::make_context;
    use proptest::prelude::*;

    fn ctx_n(n: usize) -> Arc<VariableContext> {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        make_context(&names).unwrap()
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = SquarefreeIdeal> {
        prop::collection::vec(1u64..(1u64 << n), 1..8).prop_map(move |raw| {
            let c = ctx_n(n);
            SquarefreeIdeal::from_sets(&c, raw.into_iter().map(VarSet::from_bits).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn double_transversal_is_stable(i in arb_ideal(8)) {
            let primes = minimal_primes(&i).unwrap();
            let back = SquarefreeIdeal::intersect_primes(i.context(), &primes);
            prop_assert_eq!(&back, &i);
            prop_assert_eq!(minimal_primes(&back).unwrap(), primes);
        }

        #[test]
        fn containment_via_minimal_primes(i in arb_ideal(8)) {
            let primes = minimal_primes(&i).unwrap();
            for bits in 0u64..256 {
                let p = MonomialPrime::new(VarSet::from_bits(bits));
                prop_assert_eq!(i.contained_in_prime(p), primes.iter().any(|q| q.is_subset(p)));
            }
        }

        #[test]
        fn top_equals_ideal_iff_unmixed(i in arb_ideal(8)) {
            let dec = Decomposition::of(&i).unwrap();
            prop_assert_eq!(dec.ideal_top() == i, dec.is_unmixed());
            if !dec.is_unmixed() {
                prop_assert_eq!(dec.ideal_top().intersect(&dec.lower_part()).unwrap(), i.clone());
                let r = reduction_assertions(&i).unwrap();
                prop_assert!(r.ht_lower_ok && r.ht_sum_ok);
            }
        }
    }
}
