//! Numerical semigroups: construction, invariants and the genus tree.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A numerical semigroup `H ⊆ ℕ`, stored as its membership table below the
/// conductor. Everything at or above the conductor is a member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    conductor: i64,
    small: Vec<bool>,
}

/// Basic numeric invariants of a numerical semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: i64,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub apery: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub cm_type: usize,
}

impl NumericalSemigroup {
    /// The full semigroup ℕ, the value semigroup of `k[[t]]`.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: vec![1],
            conductor: 0,
            small: Vec::new(),
        }
    }

    /// Builds `⟨gens⟩`, minimalizing the generator list.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&(x as u64)));
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let e = sorted[0];

        // Sieve until e consecutive members are seen; from there on every
        // integer is reachable by adding e.
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0i64;
        let mut n = 0i64;
        while run < e {
            let is_member = n == 0 || sorted.iter().any(|&a| a <= n && member[(n - a) as usize]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
            n += 1;
        }
        let conductor = n - e;
        member.truncate(conductor as usize);
        Ok(Self::from_table(member))
    }

    /// Builds a semigroup from a membership predicate on `[0, bound)`, with
    /// every integer `≥ bound` a member. Validates closure under addition.
    pub fn from_predicate(bound: i64, pred: impl Fn(i64) -> bool) -> Result<Self> {
        let bound = bound.max(0);
        let mut table: Vec<bool> = (0..bound).map(&pred).collect();
        if bound > 0 && !table[0] {
            return Err(Error::NotASemigroup("0 is not a member".into()));
        }
        while table.last() == Some(&true) {
            table.pop();
        }
        let c = table.len() as i64;
        let member = |x: i64| x >= c || table[x as usize];
        for x in 1..c {
            if !member(x) {
                continue;
            }
            for y in x..c {
                if member(y) && !member(x + y) {
                    return Err(Error::NotASemigroup(format!(
                        "{x} + {y} = {} is missing",
                        x + y
                    )));
                }
            }
        }
        Ok(Self::from_table(table))
    }

    // `table` is the membership on [0, c) with table[c-1] == false (or empty).
    fn from_table(table: Vec<bool>) -> Self {
        let conductor = table.len() as i64;
        let member = |x: i64| x >= conductor || (x >= 0 && table[x as usize]);
        let e = (1..=conductor + 1).find(|&x| member(x)).unwrap_or(1);
        let mut generators = Vec::new();
        for x in 1..=conductor + e {
            if !member(x) {
                continue;
            }
            let decomposable = (1..x).any(|h| member(h) && member(x - h));
            if !decomposable {
                generators.push(x);
            }
        }
        NumericalSemigroup {
            generators,
            conductor,
            small: table,
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// `f(H) = max(ℤ \ H)`, which is `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn largest_generator(&self) -> i64 {
        *self.generators.last().unwrap()
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x >= self.conductor {
            true
        } else {
            self.small[x as usize]
        }
    }

    /// Members below the conductor.
    pub fn small_members(&self) -> Vec<i64> {
        (0..self.conductor).filter(|&x| self.contains(x)).collect()
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    pub fn genus(&self) -> i64 {
        self.gaps().len() as i64
    }

    /// `PF(H) = {n ∉ H : n + a ∈ H for every generator a}`; empty for ℕ.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        self.gaps()
            .into_iter()
            .filter(|&n| self.generators.iter().all(|&a| self.contains(n + a)))
            .collect()
    }

    /// Cohen–Macaulay type `|PF(H)|`, with the DVR convention `type(ℕ) = 1`.
    pub fn cm_type(&self) -> usize {
        if self.is_naturals() {
            1
        } else {
            self.pseudo_frobenius().len()
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }

    /// Apéry set with respect to a positive member `n`, indexed by residue.
    pub fn apery(&self, n: i64) -> Option<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return None;
        }
        let mut out = vec![None; n as usize];
        let mut found = 0;
        let mut x = 0;
        while found < n {
            let r = x.mod_floor(&n) as usize;
            if out[r].is_none() && self.contains(x) {
                out[r] = Some(x);
                found += 1;
            }
            x += 1;
        }
        Some(out.into_iter().map(Option::unwrap).collect())
    }

    pub fn invariants(&self) -> Invariants {
        let mut apery = self.apery(self.multiplicity()).unwrap();
        apery.sort_unstable();
        Invariants {
            frobenius: self.frobenius(),
            conductor: self.conductor,
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            apery,
            pseudo_frobenius: self.pseudo_frobenius(),
            cm_type: self.cm_type(),
        }
    }

    /// Comma-joined minimal generators, the canonical survey key.
    pub fn key(&self) -> String {
        self.generators
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// `H ⊆ other` as sets.
    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        self.conductor >= other.conductor
            && (0..self.conductor).all(|x| !self.contains(x) || other.contains(x))
    }

    /// Minimal generators larger than the Frobenius number; removing one of
    /// them leaves a numerical semigroup of genus one more.
    pub fn effective_generators(&self) -> Vec<i64> {
        let f = self.frobenius();
        self.generators.iter().copied().filter(|&g| g > f).collect()
    }

    /// `H \ {g}` for an effective generator `g`.
    pub fn remove_generator(&self, g: i64) -> Option<Self> {
        if !self.effective_generators().contains(&g) {
            return None;
        }
        let table = (0..=g).map(|x| x != g && self.contains(x)).collect();
        Some(Self::from_table(table))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.key())
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.key())
    }
}

/// Serialized as its minimal generator list.
impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(s)
    }
}

/// Parses a comma-separated generator list such as `"3,7,8"`.
pub fn parse_generators(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_generators(&parse_generators(s)?)
    }
}

/// Breadth-first walk of the tree of effective generator removals, rooted at
/// ℕ. Yields genus 0, then genus 1, and so on; children in increasing order
/// of the removed generator.
pub struct GenusTree {
    queue: VecDeque<NumericalSemigroup>,
    max_genus: i64,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let h = self.queue.pop_front()?;
        if h.genus() < self.max_genus {
            for g in h.effective_generators() {
                self.queue.extend(h.remove_generator(g));
            }
        }
        Some(h)
    }
}

/// Every numerical semigroup of genus at most `max_genus`, each exactly once.
pub fn enumerate_by_genus(max_genus: i64) -> Result<GenusTree> {
    if max_genus < 0 {
        return Err(Error::NegativeBound(max_genus));
    }
    Ok(GenusTree {
        queue: VecDeque::from([NumericalSemigroup::naturals()]),
        max_genus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn three_seven_eight() {
        let s = h(&[3, 7, 8]);
        assert_eq!(s.frobenius(), 5);
        assert_eq!(s.conductor(), 6);
        assert_eq!(s.small_members(), vec![0, 3]);
        let inv = s.invariants();
        assert_eq!(inv.pseudo_frobenius, vec![4, 5]);
        assert_eq!(inv.cm_type, 2);
        assert_eq!(inv.multiplicity, 3);
        assert_eq!(inv.embedding_dimension, 3);
        assert_eq!(inv.genus, 4);
        assert_eq!(inv.apery, vec![0, 7, 8]);
    }

    #[test]
    fn three_seven() {
        let inv = h(&[3, 7]).invariants();
        assert_eq!(inv.frobenius, 11);
        assert_eq!(inv.pseudo_frobenius, vec![11]);
        assert_eq!(inv.cm_type, 1);
        assert_eq!(inv.genus, 6);
        assert_eq!(inv.embedding_dimension, 2);
    }

    #[test]
    fn naturals_conventions() {
        let n = h(&[1]);
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        let inv = n.invariants();
        assert!(inv.pseudo_frobenius.is_empty());
        assert_eq!(inv.cm_type, 1);
        assert_eq!(inv.genus, 0);
        assert_eq!(inv.embedding_dimension, 1);
    }

    #[test]
    fn errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[2, 4]),
            Err(Error::NotCoprime(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[3, 0, 5]),
            Err(Error::NonPositiveGenerator(0))
        );
        assert!(enumerate_by_genus(-1).is_err());
    }

    #[test]
    fn minimalizes() {
        let s = h(&[6, 3, 7, 8, 10, 14]);
        assert_eq!(s.generators(), &[3, 7, 8]);
        assert_eq!("3, 7,8".parse::<NumericalSemigroup>().unwrap(), s);
    }

    #[test]
    fn membership() {
        let s = h(&[3, 7, 8]);
        assert!(!s.contains(5));
        assert!(s.contains(6));
        assert!(!s.contains(-1));
    }

    #[test]
    fn from_predicate_rejects_non_closed() {
        assert!(NumericalSemigroup::from_predicate(5, |x| x == 0 || x == 2).is_err());
        let s = NumericalSemigroup::from_predicate(6, |x| x == 0 || x == 3).unwrap();
        assert_eq!(s.generators(), &[3, 7, 8]);
    }

    #[test]
    fn small_genus_counts() {
        assert_eq!(enumerate_by_genus(0).unwrap().count(), 1);
        assert_eq!(enumerate_by_genus(2).unwrap().count(), 4);
    }
}
