//! Seeded random inputs for sweeps and self-tests.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::SimplicialComplex;
use crate::ideal::{make_context, MonomialPrime, SquarefreeIdeal, VarSet, VariableContext};

/// Seed used when `SPECGRAPH_SEED` is unset or unparsable.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn seed_from_env() -> u64 {
    std::env::var("SPECGRAPH_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Context with variables `x0..x{n-1}`.
pub fn numbered_context(n: usize) -> Result<Arc<VariableContext>> {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    make_context(&names)
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> VarSet {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx.into_iter().take(size).collect()
}

/// Between 1 and `max_gens` generators of size 1 to 4.
pub fn random_ideal<R: Rng>(
    rng: &mut R,
    ctx: &Arc<VariableContext>,
    max_gens: usize,
) -> SquarefreeIdeal {
    let n = ctx.n();
    let count = rng.gen_range(1..=max_gens.max(1));
    let sets = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(4));
            random_subset(rng, n, size)
        })
        .collect();
    SquarefreeIdeal::from_sets(ctx, sets).expect("subsets drawn inside the context")
}

/// An intersection of random primes of at least two different heights.
pub fn random_mixed_ideal<R: Rng>(rng: &mut R, ctx: &Arc<VariableContext>) -> SquarefreeIdeal {
    let n = ctx.n();
    assert!(n >= 3, "mixed ideals need room for two heights");
    loop {
        let count = rng.gen_range(2..=5);
        let primes: Vec<MonomialPrime> = (0..count)
            .map(|_| {
                let size = rng.gen_range(1..n);
                MonomialPrime::new(random_subset(rng, n, size))
            })
            .collect();
        let ideal = SquarefreeIdeal::intersect_primes(ctx, &primes);
        let heights = crate::decompose::minimal_primes(&ideal)
            .expect("intersection of primes is proper")
            .iter()
            .map(|p| p.height())
            .collect::<std::collections::BTreeSet<_>>();
        if heights.len() > 1 {
            return ideal;
        }
    }
}

/// A pure complex with 1 to 6 facets of a common random size.
pub fn random_pure_complex<R: Rng>(rng: &mut R, ctx: &Arc<VariableContext>) -> SimplicialComplex {
    let n = ctx.n();
    let size = rng.gen_range(1..n.max(2));
    let count = rng.gen_range(1..=6);
    let facets = (0..count).map(|_| random_subset(rng, n, size)).collect();
    SimplicialComplex::new(ctx, facets).expect("facets drawn inside the context")
}
