//! Squarefree monomial ideals and monomial primes over a fixed set of variables.
//!
//! Every subset of variables is stored as a single `u64` bitmask, which caps
//! the ambient ring at 64 variables. Squarefree ideals are radical, so two
//! ideals are equal exactly when their minimal generator supports agree.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest number of variables a context may declare.
pub const MAX_VARIABLES: usize = 64;

/// A subset of variable indices `{0..n-1}` packed into one machine word.
///
/// The total order is lexicographic on the increasing index sequence, so
/// `{0} < {0,1} < {0,2} < {1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0..n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(1u64 << i)
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1u64 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    /// True when the two sets share at least one variable.
    pub fn meets(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Keeps the inclusion-minimal members, deduplicated and sorted.
pub fn minimalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keeps the inclusion-maximal members, deduplicated and sorted.
pub fn maximalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// The ordered variables of the ambient polynomial ring `k[x_1..x_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Input("at least one variable is required".into()));
        }
        if names.len() > MAX_VARIABLES {
            return Err(Error::Capacity(format!(
                "{} variables exceed the limit of {MAX_VARIABLES}",
                names.len()
            )));
        }
        let mut seen = HashSet::new();
        let mut owned = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(Error::Input("variable names must be nonempty".into()));
            }
            if !seen.insert(name) {
                return Err(Error::Input(format!("duplicate variable name `{name}`")));
            }
            owned.push(name.to_string());
        }
        Ok(VariableContext { names: owned })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The variable set of the maximal ideal `m = (x_1..x_n)`.
    pub fn full(&self) -> VarSet {
        VarSet::full(self.n())
    }

    /// Builds a subset from indices, rejecting anything out of range.
    pub fn varset(&self, indices: &[usize]) -> Result<VarSet> {
        let mut set = VarSet::EMPTY;
        for &i in indices {
            if i >= self.n() {
                return Err(Error::Input(format!(
                    "variable index {i} out of range for {} variables",
                    self.n()
                )));
            }
            set = set.with(i);
        }
        Ok(set)
    }

    /// Builds a subset from variable names.
    pub fn varset_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<VarSet> {
        let mut set = VarSet::EMPTY;
        for name in names {
            let name = name.as_ref();
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::Input(format!("unknown variable `{name}`")))?;
            set = set.with(i);
        }
        Ok(set)
    }

    pub(crate) fn check(&self, set: VarSet) -> Result<()> {
        if set.is_subset(self.full()) {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "subset {set:?} is not contained in the {} declared variables",
                self.n()
            )))
        }
    }

    /// Renders a subset as a monomial term, e.g. `x*z`; the empty set renders as `1`.
    pub fn term(&self, set: VarSet) -> String {
        if set.is_empty() {
            return "1".into();
        }
        set.iter().map(|i| self.name(i)).collect::<Vec<_>>().join("*")
    }

    /// Names of the variables in `set`, in index order.
    pub fn set_names(&self, set: VarSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }
}

/// Convenience constructor returning a shareable context.
pub fn make_context<S: AsRef<str>>(names: &[S]) -> Result<Arc<VariableContext>> {
    VariableContext::new(names).map(Arc::new)
}

/// The prime ideal generated by a subset of the variables. Its height is the
/// size of the subset; the empty subset is the zero prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MonomialPrime(VarSet);

impl MonomialPrime {
    pub fn new(vars: VarSet) -> Self {
        MonomialPrime(vars)
    }

    pub fn from_indices(ctx: &VariableContext, indices: &[usize]) -> Result<Self> {
        ctx.varset(indices).map(MonomialPrime)
    }

    pub fn vars(self) -> VarSet {
        self.0
    }

    pub fn height(self) -> usize {
        self.0.len()
    }

    /// The prime generated by both variable sets, i.e. `Rad(p + q)`.
    pub fn join(self, other: MonomialPrime) -> MonomialPrime {
        MonomialPrime(self.0.union(other.0))
    }

    pub fn is_subset(self, other: MonomialPrime) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn to_ideal(self, ctx: &Arc<VariableContext>) -> SquarefreeIdeal {
        SquarefreeIdeal::normalized(ctx, self.0.iter().map(VarSet::singleton).collect())
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.0)
    }
}

/// A squarefree monomial ideal, stored as the antichain of its minimal
/// generator supports.
///
/// The zero ideal has no generators. The unit ideal is a separate flag rather
/// than a stored empty generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<VarSet>,
    unit: bool,
}

impl SquarefreeIdeal {
    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        SquarefreeIdeal { ctx: Arc::clone(ctx), gens: Vec::new(), unit: false }
    }

    pub fn unit(ctx: &Arc<VariableContext>) -> Self {
        SquarefreeIdeal { ctx: Arc::clone(ctx), gens: Vec::new(), unit: true }
    }

    /// Normal form of the ideal generated by the given supports (index lists).
    pub fn new(ctx: &Arc<VariableContext>, supports: &[Vec<usize>]) -> Result<Self> {
        let sets = supports
            .iter()
            .map(|s| ctx.varset(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(ctx, sets))
    }

    /// Normal form of the ideal generated by the given subsets.
    pub fn from_sets(ctx: &Arc<VariableContext>, sets: Vec<VarSet>) -> Result<Self> {
        for &s in &sets {
            ctx.check(s)?;
        }
        Ok(Self::normalized(ctx, sets))
    }

    pub(crate) fn normalized(ctx: &Arc<VariableContext>, sets: Vec<VarSet>) -> Self {
        if sets.iter().any(|s| s.is_empty()) {
            return Self::unit(ctx);
        }
        SquarefreeIdeal { ctx: Arc::clone(ctx), gens: minimalize(sets), unit: false }
    }

    /// Intersection of the given primes; the empty family gives the unit ideal.
    pub fn intersect_primes(ctx: &Arc<VariableContext>, primes: &[MonomialPrime]) -> Self {
        primes
            .iter()
            .fold(Self::unit(ctx), |acc, p| acc.intersect_unchecked(&p.to_ideal(ctx)))
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    /// Minimal generator supports, sorted lexicographically.
    pub fn gens(&self) -> &[VarSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    /// Anything but the unit ideal. The zero ideal is proper.
    pub fn is_proper(&self) -> bool {
        !self.unit
    }

    fn same_context(&self, other: &SquarefreeIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::Input("ideals live over different variable contexts".into()))
        }
    }

    pub fn sum(&self, other: &SquarefreeIdeal) -> Result<Self> {
        self.same_context(other)?;
        if self.unit || other.unit {
            return Ok(Self::unit(&self.ctx));
        }
        let sets = self.gens.iter().chain(&other.gens).copied().collect();
        Ok(Self::normalized(&self.ctx, sets))
    }

    pub fn intersect(&self, other: &SquarefreeIdeal) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.intersect_unchecked(other))
    }

    fn intersect_unchecked(&self, other: &SquarefreeIdeal) -> Self {
        if self.unit {
            return other.clone();
        }
        if other.unit {
            return self.clone();
        }
        let mut sets = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &g in &self.gens {
            for &h in &other.gens {
                sets.push(g.union(h));
            }
        }
        Self::normalized(&self.ctx, sets)
    }

    /// Whether the ideal lies inside the monomial prime `p`, i.e. `p` is a
    /// transversal of the generator supports. The unit ideal lies in no prime.
    pub fn contained_in_prime(&self, p: MonomialPrime) -> bool {
        !self.unit && self.gens.iter().all(|g| g.meets(p.vars()))
    }

    /// Membership of the squarefree monomial with the given support.
    pub fn contains_monomial(&self, support: VarSet) -> bool {
        self.unit || self.gens.iter().any(|g| g.is_subset(support))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subideal_of(&self, other: &SquarefreeIdeal) -> bool {
        if other.unit {
            return true;
        }
        if self.unit {
            return false;
        }
        self.gens.iter().all(|&g| other.contains_monomial(g))
    }

    /// Index lists of the generators, for serialization.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.gens.iter().map(|g| g.iter().collect()).collect()
    }
}

impl fmt::Display for SquarefreeIdeal {
    /// Renders in the input grammar: `(x*z, y)`, `(0)` or `(1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit {
            return f.write_str("(1)");
        }
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        let terms: Vec<String> = self.gens.iter().map(|&g| self.ctx.term(g)).collect();
        write!(f, "({})", terms.join(", "))
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquarefreeIdeal{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(names: &[&str]) -> Arc<VariableContext> {
        make_context(names).unwrap()
    }

    fn ideal(c: &Arc<VariableContext>, gens: &[&[&str]]) -> SquarefreeIdeal {
        let sets = gens.iter().map(|g| c.varset_by_names(g).unwrap()).collect();
        SquarefreeIdeal::from_sets(c, sets).unwrap()
    }

    /// All supports of squarefree monomials in `n` variables.
    fn all_monomials(n: usize) -> impl Iterator<Item = VarSet> {
        (0u64..(1u64 << n)).map(VarSet::from_bits)
    }

    #[test]
    fn context_construction() {
        assert_eq!(ctx(&["x", "y"]).n(), 2);
        assert_eq!(ctx(&["u", "v", "x", "y"]).n(), 4);
        assert!(matches!(make_context(&["x", "x"]), Err(Error::Input(_))));
        assert!(matches!(make_context(&["x", ""]), Err(Error::Input(_))));
        assert!(matches!(make_context::<&str>(&[]), Err(Error::Input(_))));
        let many: Vec<String> = (0..65).map(|i| format!("x{i}")).collect();
        assert!(matches!(make_context(&many), Err(Error::Capacity(_))));
        let max: Vec<String> = (0..64).map(|i| format!("x{i}")).collect();
        assert_eq!(make_context(&max).unwrap().full(), VarSet::from_bits(u64::MAX));
    }

    #[test]
    fn varset_lex_order() {
        let a: VarSet = [0].into_iter().collect();
        let ab: VarSet = [0, 1].into_iter().collect();
        let ac: VarSet = [0, 2].into_iter().collect();
        let b: VarSet = [1].into_iter().collect();
        let mut v = vec![b, ac, ab, a];
        v.sort();
        assert_eq!(v, vec![a, ab, ac, b]);
    }

    #[test]
    fn make_ideal_normalizes() {
        let c = ctx(&["x", "y"]);
        let i = SquarefreeIdeal::new(&c, &[vec![0, 1], vec![0]]).unwrap();
        assert_eq!(i.gens(), &[VarSet::singleton(0)]);
        assert!(SquarefreeIdeal::new(&c, &[]).unwrap().is_zero());
        assert!(SquarefreeIdeal::new(&c, &[vec![0], vec![]]).unwrap().is_unit());
        assert!(matches!(SquarefreeIdeal::new(&c, &[vec![2]]), Err(Error::Input(_))));

        let c4 = ctx(&["x", "y", "z", "w"]);
        let i = ideal(&c4, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]]);
        assert_eq!(i.gens().len(), 4);
        assert_eq!(i.to_string(), "(x*z, x*w, y*z, y*w)");
    }

    #[test]
    fn sums() {
        let c = ctx(&["x", "y"]);
        let x = ideal(&c, &[&["x"]]);
        let y = ideal(&c, &[&["y"]]);
        let xy = ideal(&c, &[&["x", "y"]]);
        assert_eq!(x.sum(&y).unwrap(), ideal(&c, &[&["x"], &["y"]]));
        assert_eq!(x.sum(&SquarefreeIdeal::zero(&c)).unwrap(), x);
        assert_eq!(xy.sum(&x).unwrap(), x);
        assert!(x.sum(&SquarefreeIdeal::unit(&c)).unwrap().is_unit());
        let other = ctx(&["a", "b"]);
        assert!(matches!(x.sum(&SquarefreeIdeal::zero(&other)), Err(Error::Input(_))));
    }

    #[test]
    fn intersections_match_membership_oracle() {
        let c = ctx(&["x", "y", "z", "w"]);
        let left = ideal(&c, &[&["x"], &["y"]]);
        let right = ideal(&c, &[&["z"], &["w"]]);
        let got = left.intersect(&right).unwrap();
        assert_eq!(got, ideal(&c, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]]));
        for g in all_monomials(4) {
            assert_eq!(
                got.contains_monomial(g),
                left.contains_monomial(g) && right.contains_monomial(g)
            );
        }

        let c3 = ctx(&["x", "y", "z"]);
        let left = ideal(&c3, &[&["x"]]);
        let right = ideal(&c3, &[&["y"], &["z"]]);
        let got = left.intersect(&right).unwrap();
        assert_eq!(got, ideal(&c3, &[&["x", "y"], &["x", "z"]]));
        for g in all_monomials(3) {
            assert_eq!(
                got.contains_monomial(g),
                left.contains_monomial(g) && right.contains_monomial(g)
            );
        }

        assert_eq!(left.intersect(&SquarefreeIdeal::unit(&c3)).unwrap(), left);
        assert!(left.intersect(&SquarefreeIdeal::zero(&c3)).unwrap().is_zero());
    }

    #[test]
    fn intersect_primes_conventions() {
        let c = ctx(&["x", "y", "z", "w"]);
        let p = MonomialPrime::new(c.varset_by_names(&["x", "y"]).unwrap());
        let q = MonomialPrime::new(c.varset_by_names(&["z", "w"]).unwrap());
        assert_eq!(
            SquarefreeIdeal::intersect_primes(&c, &[p, q]),
            ideal(&c, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]])
        );
        let x = MonomialPrime::new(VarSet::singleton(0));
        assert_eq!(SquarefreeIdeal::intersect_primes(&c, &[x]), ideal(&c, &[&["x"]]));
        assert!(SquarefreeIdeal::intersect_primes(&c, &[]).is_unit());
        assert!(SquarefreeIdeal::intersect_primes(&c, &[MonomialPrime::default()]).is_zero());
    }

    #[test]
    fn containment_in_primes() {
        let c = ctx(&["x", "y", "z", "w"]);
        let i = ideal(&c, &[&["x", "z"], &["x", "w"], &["y", "z"], &["y", "w"]]);
        let xy = MonomialPrime::new(c.varset_by_names(&["x", "y"]).unwrap());
        let xw = MonomialPrime::new(c.varset_by_names(&["x", "w"]).unwrap());
        assert!(i.contained_in_prime(xy));
        assert!(!i.contained_in_prime(xw));
        assert!(SquarefreeIdeal::zero(&c).contained_in_prime(MonomialPrime::default()));
        assert!(!SquarefreeIdeal::unit(&c).contained_in_prime(MonomialPrime::new(c.full())));
    }

    #[test]
    fn equality() {
        let c = ctx(&["x", "y", "z"]);
        let a = ideal(&c, &[&["x"], &["y"]]).intersect(&ideal(&c, &[&["y"], &["z"]])).unwrap();
        assert_eq!(a, ideal(&c, &[&["y"], &["x", "z"]]));
        assert_ne!(ideal(&c, &[&["x"]]), ideal(&c, &[&["y"]]));
        assert_eq!(SquarefreeIdeal::zero(&c), SquarefreeIdeal::zero(&c));
        assert_ne!(SquarefreeIdeal::zero(&c), SquarefreeIdeal::unit(&c));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn ctx_n(n: usize) -> Arc<VariableContext> {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        make_context(&names).unwrap()
    }

    fn gens(n: usize) -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(1u64..(1u64 << n), 0..6)
    }

    proptest! {
        #[test]
        fn normal_form_is_idempotent(raw in gens(8)) {
            let c = ctx_n(8);
            let i = SquarefreeIdeal::from_sets(&c, raw.into_iter().map(VarSet::from_bits).collect()).unwrap();
            let again = SquarefreeIdeal::from_sets(&c, i.gens().to_vec()).unwrap();
            prop_assert_eq!(again, i);
        }

        #[test]
        fn lattice_laws_and_membership(a in gens(8), b in gens(8), d in gens(8)) {
            let c = ctx_n(8);
            let mk = |v: Vec<u64>| SquarefreeIdeal::from_sets(&c, v.into_iter().map(VarSet::from_bits).collect()).unwrap();
            let (i, j, k) = (mk(a), mk(b), mk(d));
            prop_assert_eq!(i.sum(&j).unwrap(), j.sum(&i).unwrap());
            prop_assert_eq!(i.intersect(&j).unwrap(), j.intersect(&i).unwrap());
            prop_assert_eq!(i.sum(&j).unwrap().sum(&k).unwrap(), i.sum(&j.sum(&k).unwrap()).unwrap());
            prop_assert_eq!(
                i.intersect(&j).unwrap().intersect(&k).unwrap(),
                i.intersect(&j.intersect(&k).unwrap()).unwrap()
            );
            let meet = i.intersect(&j).unwrap();
            for g in 0u64..256 {
                let g = VarSet::from_bits(g);
                prop_assert_eq!(meet.contains_monomial(g), i.contains_monomial(g) && j.contains_monomial(g));
            }
        }

        #[test]
        fn prime_intersections_agree(p in 0u64..256, q in 0u64..256) {
            let c = ctx_n(8);
            let (p, q) = (MonomialPrime::new(VarSet::from_bits(p)), MonomialPrime::new(VarSet::from_bits(q)));
            prop_assert_eq!(
                p.to_ideal(&c).intersect(&q.to_ideal(&c)).unwrap(),
                SquarefreeIdeal::intersect_primes(&c, &[p, q])
            );
        }

        #[test]
        fn containment_is_transversality(raw in gens(8), p in 0u64..256) {
            let c = ctx_n(8);
            let i = SquarefreeIdeal::from_sets(&c, raw.into_iter().map(VarSet::from_bits).collect()).unwrap();
            let p = VarSet::from_bits(p);
            let transversal = i.gens().iter().all(|g| g.iter().any(|v| p.contains(v)));
            prop_assert_eq!(i.contained_in_prime(MonomialPrime::new(p)), transversal && !i.is_unit());
        }
    }
}
