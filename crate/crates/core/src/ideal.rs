//! Monomial fractional ideals of `k[[H]]`, encoded by their value sets.
//!
//! A relative ideal is a set `E ⊆ ℤ` with a minimum and `E + H ⊆ E`. Every
//! such set is determined by its minimum `m`, the smallest `s` with
//! `[s, ∞) ⊆ E`, and the finite window `E ∩ [m, s)`. All ideal-theoretic
//! operations of the ring (colon, product, sum, trace, duals, blow-ups)
//! become finite set computations on these windows.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::{parse_generators, NumericalSemigroup};

#[derive(Clone)]
pub struct RelativeIdeal {
    ambient: Arc<NumericalSemigroup>,
    min: i64,
    stab: i64,
    // membership on [min, stab); bits[0] is true and the last entry false
    // whenever stab > min
    bits: Vec<bool>,
}

impl RelativeIdeal {
    fn raw(
        ambient: &Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let min = (lo..hi).find(|&x| pred(x)).unwrap_or(hi);
        let mut stab = hi;
        while stab > min && pred(stab - 1) {
            stab -= 1;
        }
        RelativeIdeal {
            ambient: Arc::clone(ambient),
            min,
            stab,
            bits: (min..stab).map(&pred).collect(),
        }
    }

    /// The set equal to `pred` on `[lo, hi)`, containing `[hi, ∞)` and nothing
    /// below `lo`. The caller guarantees closure under the ambient semigroup.
    fn build(
        ambient: &Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        let ideal = Self::raw(ambient, lo, hi, pred);
        debug_assert!(ideal.is_closed_under(ambient));
        ideal
    }

    /// The set `pred ∩ [lo, hi) ∪ [hi, ∞)`, checked to be an `H`-relative ideal.
    pub fn from_predicate(
        ambient: &Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Result<Self> {
        let ideal = Self::raw(ambient, lo, hi, pred);
        if ideal.is_closed_under(ambient) {
            Ok(ideal)
        } else {
            Err(Error::NotASemigroup(
                "set is not closed under the semigroup".into(),
            ))
        }
    }

    /// `⋃ (g + H)` over the given generators.
    pub fn from_generators(ambient: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = gens.iter().max().unwrap() + ambient.conductor();
        Ok(Self::build(ambient, lo, hi, |x| {
            gens.iter().any(|&g| ambient.contains(x - g))
        }))
    }

    pub fn principal(ambient: &Arc<NumericalSemigroup>, g: i64) -> Self {
        Self::build(ambient, g, g + ambient.conductor(), |x| {
            ambient.contains(x - g)
        })
    }

    /// `H` itself, the unit ideal.
    pub fn ring(ambient: &Arc<NumericalSemigroup>) -> Self {
        Self::principal(ambient, 0)
    }

    /// `[s, ∞)`, the value set of `t^s V`.
    pub fn interval(ambient: &Arc<NumericalSemigroup>, s: i64) -> Self {
        Self::build(ambient, s, s, |_| true)
    }

    /// `𝔪 = H \ {0}`.
    pub fn maximal_ideal(ambient: &Arc<NumericalSemigroup>) -> Self {
        Self::build(ambient, 1, ambient.conductor().max(1), |x| {
            ambient.contains(x)
        })
    }

    /// `K = {x : f(H) − x ∉ H}`, the standard fractional canonical ideal with
    /// `H ⊆ K ⊆ ℕ`.
    pub fn canonical(ambient: &Arc<NumericalSemigroup>) -> Self {
        let f = ambient.frobenius();
        let k = Self::build(ambient, 0, ambient.conductor(), |x| {
            !ambient.contains(f - x)
        });
        if !ambient.is_naturals() {
            let shifts: Vec<i64> = ambient.pseudo_frobenius().iter().map(|p| f - p).collect();
            let alt = Self::from_generators(ambient, &shifts).unwrap();
            assert_eq!(k, alt, "canonical ideal constructions disagree");
        }
        k
    }

    /// The value set of an overring `H ⊆ T ⊆ ℕ`, viewed as an `H`-module.
    pub fn overring(ambient: &Arc<NumericalSemigroup>, over: &NumericalSemigroup) -> Result<Self> {
        if !ambient.is_subset_of(over) {
            return Err(Error::NotContained);
        }
        Ok(Self::build(ambient, 0, over.conductor(), |x| {
            over.contains(x)
        }))
    }

    /// Parses `"gens@H"`, e.g. `"0,1@3,7,8"`.
    pub fn parse(literal: &str) -> Result<Self> {
        let (gens, h) = literal
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("expected gens@H, got {literal:?}")))?;
        let ambient = Arc::new(h.parse::<NumericalSemigroup>()?);
        Self::from_generators(&ambient, &parse_generators(gens)?)
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    /// Least `s` with `[s, ∞) ⊆ E`.
    pub fn stab(&self) -> i64 {
        self.stab
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < self.min {
            false
        } else if x >= self.stab {
            true
        } else {
            self.bits[(x - self.min) as usize]
        }
    }

    /// `E ∩ [min, stab)`.
    pub fn small_part(&self) -> Vec<i64> {
        (self.min..self.stab)
            .filter(|&x| self.contains(x))
            .collect()
    }

    /// Elements of `E` below `bound`.
    pub fn members_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (self.min..bound).filter(move |&x| self.contains(x))
    }

    pub fn is_closed_under(&self, h: &NumericalSemigroup) -> bool {
        self.small_part()
            .into_iter()
            .all(|x| h.generators().iter().all(|&a| self.contains(x + a)))
    }

    /// The same set regarded over another semigroup, when it is closed under it.
    pub fn with_ambient(&self, ambient: &Arc<NumericalSemigroup>) -> Result<Self> {
        if !self.is_closed_under(ambient) {
            return Err(Error::NotContained);
        }
        Ok(RelativeIdeal {
            ambient: Arc::clone(ambient),
            ..self.clone()
        })
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.min >= other.min
            && (self.min..other.stab).all(|x| !self.contains(x) || other.contains(x))
    }

    /// `E ⊆ H`.
    pub fn is_integral(&self) -> bool {
        self.min >= 0
            && (self.min..self.ambient.conductor())
                .all(|x| !self.contains(x) || self.ambient.contains(x))
    }

    pub fn shift(&self, k: i64) -> Self {
        RelativeIdeal {
            ambient: Arc::clone(&self.ambient),
            min: self.min + k,
            stab: self.stab + k,
            bits: self.bits.clone(),
        }
    }

    /// The isomorphic copy with minimum 0.
    pub fn normalized(&self) -> Self {
        self.shift(-self.min)
    }

    /// `E − F = {z : z + F ⊆ E}`, the value set of the colon `E : F`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let lo = self.min - other.min;
        let hi = self.stab - other.min;
        let out = Self::build(&self.ambient, lo, hi, |z| {
            other
                .members_below(self.stab - z)
                .all(|y| self.contains(y + z))
        });
        Ok(out)
    }

    /// `E + F`, the value set of the product of the ideals.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let lo = self.min + other.min;
        let hi = (self.stab + other.min).min(other.stab + self.min);
        Ok(Self::build(&self.ambient, lo, hi, |x| {
            self.members_below(x - other.min + 1)
                .any(|y| other.contains(x - y))
        }))
    }

    /// `E ∪ F`, the value set of the module sum.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let lo = self.min.min(other.min);
        let hi = self.stab.max(other.stab);
        Ok(Self::build(&self.ambient, lo, hi, |x| {
            self.contains(x) || other.contains(x)
        }))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let lo = self.min.max(other.min);
        let hi = self.stab.max(other.stab);
        Ok(Self::build(&self.ambient, lo, hi, |x| {
            self.contains(x) && other.contains(x)
        }))
    }

    /// `n`-fold sumset, `n ≥ 1`.
    pub fn power(&self, n: usize) -> Self {
        assert!(n >= 1);
        let mut p = self.clone();
        for _ in 1..n {
            p = p.sum(self).unwrap();
        }
        p
    }

    /// `H − E`, the value set of `R : I`.
    pub fn dual(&self) -> Self {
        Self::ring(&self.ambient).colon(self).unwrap()
    }

    /// `(H − E) + E`, the value set of `tr_R(I) = (R:I)I`.
    pub fn trace(&self) -> Self {
        self.dual().sum(self).unwrap()
    }

    /// Whether an integral ideal is a trace ideal. Both characterizations
    /// `(R:I)I = I` and `I:I = R:I` are evaluated and must agree.
    pub fn is_trace(&self) -> Result<bool> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let by_trace = self.trace() == *self;
        let by_colon = self.colon(self).unwrap() == self.dual();
        assert_eq!(by_trace, by_colon, "trace criteria disagree on {self}");
        Ok(by_trace)
    }

    /// `R : (R : I) = I`.
    pub fn is_reflexive(&self) -> bool {
        self.dual().dual() == *self
    }

    /// `E + E = min(E) + E`; for monomial ideals the reduction can be taken
    /// to be `t^{min E}`.
    pub fn is_stable(&self) -> bool {
        self.sum(self).unwrap() == self.shift(self.min)
    }

    /// Least `r ≥ 0` with `E^{r+1} = min(E) + E^r` (with `E^0 = H`).
    pub fn reduction_number(&self) -> usize {
        if Self::ring(&self.ambient).sum(self).unwrap() == Self::ring(&self.ambient).shift(self.min)
        {
            return 0;
        }
        let mut p = self.clone();
        let mut r = 1;
        loop {
            let next = p.sum(self).unwrap();
            if next == p.shift(self.min) {
                return r;
            }
            p = next;
            r += 1;
        }
    }

    /// `E − E` as a numerical semigroup: the value semigroup of `End_R(I) = I:I`.
    pub fn endomorphism_semigroup(&self) -> NumericalSemigroup {
        self.colon(self)
            .unwrap()
            .as_semigroup()
            .expect("I:I is always a numerical semigroup")
    }

    /// The blow-up `R^I = ⋃ I^n : I^n`, computed at the first `n` with
    /// `I^{n+1} = min(I) + I^n`.
    pub fn blowup(&self) -> NumericalSemigroup {
        let n = self.reduction_number().max(1);
        self.power(n).endomorphism_semigroup()
    }

    /// Reinterprets a set that contains 0 and is closed under addition.
    pub fn as_semigroup(&self) -> Option<NumericalSemigroup> {
        if self.min != 0 {
            return None;
        }
        NumericalSemigroup::from_predicate(self.stab, |x| self.contains(x)).ok()
    }

    /// `E \ (𝔪 + E)`: the exponents of a minimal monomial generating set.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let e = self.ambient.multiplicity();
        let h = &self.ambient;
        (self.min..self.stab + e)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..=x - self.min).any(|d| h.contains(d) && self.contains(x - d)))
            .collect()
    }

    /// Minimal number of generators `μ(I)`.
    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    /// `|E \ F|`, the length `ℓ_R(I/J)` of the monomial quotient for `F ⊆ E`.
    pub fn length_quotient(&self, sub: &Self) -> Result<usize> {
        self.same_ambient(sub)?;
        if !sub.is_subset(self) {
            return Err(Error::NotContained);
        }
        Ok(self.difference(sub).len())
    }

    fn difference(&self, sub: &Self) -> Vec<i64> {
        (self.min..sub.stab.max(self.min))
            .filter(|&x| self.contains(x) && !sub.contains(x))
            .collect()
    }

    /// `μ_R(I/J)` for `J ⊆ I`: elements of `E \ F` not reachable from another
    /// element of `E \ F` by adding a nonzero member of `H`.
    pub fn module_mu(&self, sub: &Self) -> Result<usize> {
        self.same_ambient(sub)?;
        if !sub.is_subset(self) {
            return Err(Error::NotContained);
        }
        let diff = self.difference(sub);
        let h = &self.ambient;
        Ok(diff
            .iter()
            .filter(|&&x| !diff.iter().any(|&y| y < x && h.contains(x - y)))
            .count())
    }

    /// Cohen–Macaulay type `r(R/I)` of the quotient by an integral ideal: the
    /// number of `h ∈ H \ E` with `h + a ∈ E` for every generator `a`.
    pub fn quotient_socle_dim(&self) -> Result<usize> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let h = &self.ambient;
        Ok((0..self.stab)
            .filter(|&x| h.contains(x) && !self.contains(x))
            .filter(|&x| h.generators().iter().all(|&a| self.contains(x + a)))
            .count())
    }

    /// `ℓ_R(R/I) = |H \ E|` for an integral ideal.
    pub fn colength(&self) -> Result<usize> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok((0..self.stab)
            .filter(|&x| self.ambient.contains(x) && !self.contains(x))
            .count())
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.min == other.min && self.stab == other.stab && self.bits == other.bits
    }
}

impl Eq for RelativeIdeal {}

impl Hash for RelativeIdeal {
    fn hash<S: Hasher>(&self, state: &mut S) {
        self.min.hash(state);
        self.stab.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let small = self.small_part();
        if !small.is_empty() {
            let list: Vec<String> = small.iter().map(i64::to_string).collect();
            write!(f, "{{{}}} ∪ ", list.join(","))?;
        }
        write!(f, "[{},∞)", self.stab)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ambient)
    }
}

impl Serialize for RelativeIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RelativeIdeal", 3)?;
        st.serialize_field("min", &self.min)?;
        st.serialize_field("small_part", &self.small_part())?;
        st.serialize_field("stab", &self.stab)?;
        st.end()
    }
}

/// Every relative ideal `E` with `min(E) = 0` and `E ⊆ ℕ`: one representative
/// per isomorphism class of monomial fractional ideals. Such sets contain `H`
/// and are determined by which gaps they contain.
pub fn enumerate_normalized_ideals(ambient: &Arc<NumericalSemigroup>) -> Vec<RelativeIdeal> {
    let gaps = ambient.gaps();
    let c = ambient.conductor();
    let mut out = Vec::new();
    let mut chosen = vec![false; c.max(0) as usize];
    for &x in &ambient.small_members() {
        chosen[x as usize] = true;
    }
    closed_subsets(ambient, &gaps, c, &mut chosen, &mut out, 0);
    out
}

/// Normalized ideals that are reflexive: the rank-one monomial sector of
/// the reflexive modules, up to isomorphism.
pub fn enumerate_reflexive_classes(ambient: &Arc<NumericalSemigroup>) -> Vec<RelativeIdeal> {
    enumerate_normalized_ideals(ambient)
        .into_iter()
        .filter(RelativeIdeal::is_reflexive)
        .collect()
}

/// Every integral ideal `E ⊆ H` with `lo ≤ min(E) ≤ hi`. An ideal with
/// minimum `m` contains `m + H`, so it is determined by which elements of
/// `H ∩ (m, m + c)` outside `m + H` it contains.
pub fn enumerate_integral_ideals(
    ambient: &Arc<NumericalSemigroup>,
    lo: i64,
    hi: i64,
) -> Vec<RelativeIdeal> {
    let c = ambient.conductor();
    let mut out = Vec::new();
    for m in lo.max(0)..=hi {
        if !ambient.contains(m) {
            continue;
        }
        let width = c.max(1) as usize;
        // chosen[i] describes m + i, for i in [0, c)
        let mut chosen: Vec<bool> = (0..width as i64).map(|i| ambient.contains(i)).collect();
        let free: Vec<i64> = (1..c)
            .filter(|&i| !ambient.contains(i) && ambient.contains(m + i))
            .collect();
        let mut found = Vec::new();
        closed_subsets(ambient, &free, c, &mut chosen, &mut found, 0);
        out.extend(found.into_iter().map(|e| e.shift(m)));
    }
    out
}

// Depth-first over `free` (ascending offsets, decided from the largest down).
// `chosen` is the membership on [0, c) relative to the base point; everything
// at or above `c` is a member. Including an offset is allowed only when all
// its generator translates are already members, which makes every emitted
// set closed.
fn closed_subsets(
    ambient: &Arc<NumericalSemigroup>,
    free: &[i64],
    c: i64,
    chosen: &mut Vec<bool>,
    out: &mut Vec<RelativeIdeal>,
    depth: usize,
) {
    if depth == free.len() {
        let snapshot = chosen.clone();
        out.push(RelativeIdeal::build(ambient, 0, c, |x| {
            snapshot[x as usize]
        }));
        return;
    }
    let x = free[free.len() - 1 - depth];
    chosen[x as usize] = false;
    closed_subsets(ambient, free, c, chosen, out, depth + 1);
    let closed = ambient
        .generators()
        .iter()
        .all(|&a| x + a >= c || chosen[(x + a) as usize]);
    if closed {
        chosen[x as usize] = true;
        closed_subsets(ambient, free, c, chosen, out, depth + 1);
        chosen[x as usize] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(g).unwrap())
    }

    fn set(amb: &Arc<NumericalSemigroup>, small: &[i64], stab: i64) -> RelativeIdeal {
        let lo = small.first().copied().unwrap_or(stab);
        RelativeIdeal::from_predicate(amb, lo, stab, |x| small.contains(&x)).unwrap()
    }

    #[test]
    fn generators_and_canonical() {
        let a = h(&[3, 7, 8]);
        assert_eq!(
            RelativeIdeal::from_generators(&a, &[0]).unwrap(),
            RelativeIdeal::ring(&a)
        );
        let k = RelativeIdeal::from_generators(&a, &[0, 1]).unwrap();
        assert_eq!(k, set(&a, &[0, 1, 3, 4], 6));
        assert_eq!(RelativeIdeal::canonical(&a), k);
        assert_eq!(
            RelativeIdeal::from_generators(&a, &[6, 7, 8]).unwrap(),
            RelativeIdeal::interval(&a, 6)
        );
        assert!(RelativeIdeal::from_generators(&a, &[]).is_err());

        let b = h(&[3, 7]);
        assert_eq!(RelativeIdeal::canonical(&b), RelativeIdeal::ring(&b));
        let c = h(&[3, 4, 5]);
        assert_eq!(RelativeIdeal::canonical(&c), set(&c, &[0, 1], 3));
    }

    #[test]
    fn colons() {
        let a = h(&[3, 7, 8]);
        let m = RelativeIdeal::maximal_ideal(&a);
        let r = RelativeIdeal::ring(&a);
        assert_eq!(r.colon(&m).unwrap(), set(&a, &[0], 3));
        assert_eq!(r.colon(&m).unwrap().small_part(), vec![0]);
        assert_eq!(r.colon(&m).unwrap().stab(), 3);
        let k = RelativeIdeal::canonical(&a);
        assert_eq!(r.colon(&k).unwrap(), RelativeIdeal::interval(&a, 6));
        let p = RelativeIdeal::principal(&a, 7);
        assert_eq!(p.colon(&p).unwrap(), r);
    }

    #[test]
    fn sums_and_unions() {
        let a = h(&[3, 7, 8]);
        let k = RelativeIdeal::canonical(&a);
        let m = RelativeIdeal::maximal_ideal(&a);
        let r = RelativeIdeal::ring(&a);
        assert_eq!(k.sum(&k).unwrap(), RelativeIdeal::interval(&a, 0));
        assert_eq!(m.sum(&m).unwrap(), m.shift(3));
        assert_eq!(k.sum(&r).unwrap(), k);
        assert_eq!(r.union(&k).unwrap(), k);
        assert_eq!(k.union(&k).unwrap(), k);

        let b = h(&[3, 7]);
        let mv = RelativeIdeal::interval(&b, 3);
        assert_eq!(
            mv.union(&RelativeIdeal::ring(&b)).unwrap(),
            set(&b, &[0], 3)
        );
    }

    #[test]
    fn traces() {
        let a = h(&[3, 7, 8]);
        let m = RelativeIdeal::maximal_ideal(&a);
        assert_eq!(m.trace(), m);
        assert!(m.is_trace().unwrap());
        let k = RelativeIdeal::canonical(&a);
        assert_eq!(k.trace(), RelativeIdeal::interval(&a, 6));
        assert!(!RelativeIdeal::principal(&a, 3).is_trace().unwrap());
        assert_eq!(k.is_trace(), Err(Error::NotIntegral));
    }

    #[test]
    fn reflexivity() {
        let a = h(&[3, 7, 8]);
        assert!(RelativeIdeal::ring(&a).is_reflexive());
        assert!(!RelativeIdeal::canonical(&a).is_reflexive());
        assert!(set(&a, &[0], 3).is_reflexive());
    }

    #[test]
    fn stability() {
        let a = h(&[3, 7, 8]);
        assert!(RelativeIdeal::maximal_ideal(&a).is_stable());
        assert!(RelativeIdeal::interval(&a, 6).is_stable());
        let b = h(&[3, 7]);
        let m = RelativeIdeal::maximal_ideal(&b);
        assert!(!m.is_stable());
        assert!(m.sum(&m).unwrap().contains(14));
        assert!(!m.shift(3).contains(14));
    }

    #[test]
    fn blowups_and_endomorphisms() {
        let b = h(&[3, 7]);
        assert_eq!(
            RelativeIdeal::maximal_ideal(&b).blowup(),
            NumericalSemigroup::from_generators(&[3, 4]).unwrap()
        );
        let a = h(&[3, 7, 8]);
        let m = RelativeIdeal::maximal_ideal(&a);
        let t345 = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(m.blowup(), t345);
        assert_eq!(m.endomorphism_semigroup(), t345);
        assert_eq!(
            RelativeIdeal::interval(&a, 6).endomorphism_semigroup(),
            NumericalSemigroup::naturals()
        );
        assert_eq!(RelativeIdeal::ring(&a).endomorphism_semigroup(), *a);
    }

    #[test]
    fn generators_and_lengths() {
        let a = h(&[3, 7, 8]);
        let r = RelativeIdeal::ring(&a);
        let c = RelativeIdeal::interval(&a, 6);
        assert_eq!(r.length_quotient(&c).unwrap(), 2);
        assert_eq!(c.length_quotient(&r), Err(Error::NotContained));
        let k = RelativeIdeal::canonical(&a);
        assert_eq!(k.minimal_generators(), vec![0, 1]);
        assert_eq!(k.mu(), 2);
        assert_eq!(k.module_mu(&r).unwrap(), 1);
        assert_eq!(c.minimal_generators(), vec![6, 7, 8]);
    }

    #[test]
    fn reflexive_classes_of_378() {
        let a = h(&[3, 7, 8]);
        let classes = enumerate_reflexive_classes(&a);
        assert_eq!(classes.len(), 3);
        assert!(classes.contains(&RelativeIdeal::ring(&a)));
        assert!(classes.contains(&set(&a, &[0], 3)));
        assert!(classes.contains(&RelativeIdeal::interval(&a, 0)));
    }

    #[test]
    fn reflexive_classes_small_cases() {
        let c = h(&[3, 4, 5]);
        assert_eq!(enumerate_reflexive_classes(&c).len(), 2);
        let n = Arc::new(NumericalSemigroup::naturals());
        assert_eq!(
            enumerate_reflexive_classes(&n),
            vec![RelativeIdeal::ring(&n)]
        );
    }

    #[test]
    fn rendering() {
        let a = h(&[3, 7, 8]);
        assert_eq!(
            RelativeIdeal::canonical(&a).to_string(),
            "{0,1,3,4} ∪ [6,∞)"
        );
        assert_eq!(RelativeIdeal::interval(&a, 6).to_string(), "[6,∞)");
        let json = serde_json::to_string(&RelativeIdeal::canonical(&a)).unwrap();
        assert_eq!(json, r#"{"min":0,"small_part":[0,1,3,4],"stab":6}"#);
        assert_eq!(
            RelativeIdeal::parse("0,1@3,7,8").unwrap(),
            RelativeIdeal::canonical(&a)
        );
    }

    #[test]
    fn integral_enumeration_is_integral_and_distinct() {
        let a = h(&[3, 7, 8]);
        let all = enumerate_integral_ideals(&a, 0, 9);
        assert!(all.iter().all(|e| e.is_integral()));
        let mut dedup = all.clone();
        dedup.sort_by_key(|e| (e.min(), e.stab(), e.small_part()));
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
        assert!(all.contains(&RelativeIdeal::maximal_ideal(&a)));
        assert!(all.contains(&RelativeIdeal::interval(&a, 6)));
    }
}
