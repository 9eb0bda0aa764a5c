//! Blow-up chains `R ⊆ R_1 ⊆ ⋯ ⊆ V` and the filtration `I^n : I^n`.

use std::sync::Arc;

use serde::Serialize;

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// `H = H_0 ⊂ H_1 ⊂ ⋯ ⊂ ℕ` with `H_{n+1}` the blow-up of the maximal ideal
/// of `H_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LipmanChain {
    pub members: Vec<NumericalSemigroup>,
    pub multiplicity_sequence: Vec<i64>,
}

pub fn lipman_chain(h: &NumericalSemigroup) -> LipmanChain {
    let mut members = vec![h.clone()];
    while !members.last().unwrap().is_naturals() {
        let cur = Arc::new(members.last().unwrap().clone());
        let next = RelativeIdeal::maximal_ideal(&cur).blowup();
        debug_assert!(next.genus() < cur.genus());
        members.push(next);
    }
    let multiplicity_sequence = members
        .iter()
        .map(NumericalSemigroup::multiplicity)
        .collect();
    LipmanChain {
        members,
        multiplicity_sequence,
    }
}

impl LipmanChain {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Arf semigroups are those whose whole chain has minimal multiplicity.
pub fn is_arf_by_chain(h: &NumericalSemigroup) -> bool {
    lipman_chain(h)
        .members
        .iter()
        .all(|m| m.is_naturals() || m.multiplicity() as usize == m.embedding_dimension())
}

/// Position of `S` in the chain of a GGL ring with minimal multiplicity.
#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub chain: LipmanChain,
    /// `N = ℓ(R/𝔠)`.
    pub n: usize,
    #[serde(rename = "S")]
    pub s: NumericalSemigroup,
    pub failures: Vec<String>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For a GGL ring with minimal multiplicity: `S` is the `N`-th member of
/// the chain with `N = ℓ(R/𝔠)`, and every earlier member has multiplicity
/// `e(H)` and minimal multiplicity.
pub fn verify_chain_position(h: &NumericalSemigroup) -> Result<ChainReport> {
    let report = classify(h);
    if !(report.generalized_gorenstein && report.minimal_multiplicity) {
        return Err(Error::HypothesisNotSatisfied(format!(
            "{h} is not generalized Gorenstein with minimal multiplicity"
        )));
    }
    let chain = lipman_chain(h);
    let n = report.ell_r_mod_c;
    let mut failures = Vec::new();
    match chain.members.get(n) {
        Some(m) if *m == report.s => {}
        Some(m) => failures.push(format!("member {n} is {m}, S is {}", report.s)),
        None => failures.push(format!("chain has only {} members, N = {n}", chain.len())),
    }
    for (i, m) in chain.members.iter().take(n).enumerate() {
        if m.multiplicity() != h.multiplicity() {
            failures.push(format!(
                "member {i} = {m} has multiplicity {}",
                m.multiplicity()
            ));
        }
        if m.multiplicity() as usize != m.embedding_dimension() {
            failures.push(format!("member {i} = {m} lacks minimal multiplicity"));
        }
    }
    Ok(ChainReport {
        chain,
        n,
        s: report.s,
        failures,
    })
}

/// `[I^n : I^n]` for `n = 1, …, max(r, 1)` with `r` the reduction number; the
/// last entry is the blow-up of `I`.
pub fn filtration(i: &RelativeIdeal) -> Vec<NumericalSemigroup> {
    let r = i.reduction_number().max(1);
    (1..=r)
        .map(|n| i.power(n).endomorphism_semigroup())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn chains() {
        let c = lipman_chain(&h(&[3, 7, 8]));
        assert_eq!(
            c.members,
            vec![h(&[3, 7, 8]), h(&[3, 4, 5]), NumericalSemigroup::naturals()]
        );
        assert_eq!(c.multiplicity_sequence, vec![3, 3, 1]);
        let c = lipman_chain(&h(&[3, 7]));
        assert_eq!(
            c.members,
            vec![h(&[3, 7]), h(&[3, 4]), NumericalSemigroup::naturals()]
        );
        assert_eq!(lipman_chain(&NumericalSemigroup::naturals()).len(), 1);
    }

    #[test]
    fn arf_by_chain_matches_triples() {
        assert!(is_arf_by_chain(&h(&[3, 7, 8])));
        assert!(!is_arf_by_chain(&h(&[3, 7])));
    }

    #[test]
    fn chain_position() {
        let r = verify_chain_position(&h(&[3, 7, 8])).unwrap();
        assert!(r.holds());
        assert_eq!(r.n, 2);
        let r = verify_chain_position(&h(&[3, 4, 5])).unwrap();
        assert!(r.holds() && r.n == 1 && r.s.is_naturals());
        let r = verify_chain_position(&h(&[2, 5])).unwrap();
        assert!(r.holds() && r.n == 0);
        assert!(verify_chain_position(&h(&[3, 7])).is_err());
    }

    #[test]
    fn filtrations() {
        let hh = Arc::new(h(&[3, 7]));
        let f = filtration(&RelativeIdeal::maximal_ideal(&hh));
        assert_eq!(f.first(), Some(&h(&[3, 7, 11])));
        assert_eq!(f.last(), Some(&h(&[3, 4])));
        assert!(f.windows(2).all(|w| w[0].is_subset_of(&w[1])));
        let stable = RelativeIdeal::interval(&hh, 12);
        assert_eq!(filtration(&stable).len(), 1);
        assert_eq!(
            filtration(&RelativeIdeal::principal(&hh, 3)),
            vec![h(&[3, 7])]
        );
    }
}
