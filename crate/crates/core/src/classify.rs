//! Ring-level verdicts on `k[[t^H]]` computed from value sets.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// `S = R[K]` as the stable sumset power of the canonical ideal, together
/// with the first exponent `n` at which `K^{n+1} = K^n`.
pub fn ring_s(h: &NumericalSemigroup) -> (NumericalSemigroup, usize) {
    let h = Arc::new(h.clone());
    let k = RelativeIdeal::canonical(&h);
    let mut p = k.clone();
    let mut n = 1;
    loop {
        let next = p.sum(&k).unwrap();
        if next == p {
            let s = p
                .as_semigroup()
                .expect("powers of K containing 0 are semigroups");
            return (s, n);
        }
        p = next;
        n += 1;
    }
}

/// `𝔠 = R : S`, a reflexive trace ideal with `𝔠 : 𝔠 = S`.
pub fn conductor_ideal(h: &NumericalSemigroup) -> RelativeIdeal {
    let (s, _) = ring_s(h);
    conductor_of(&Arc::new(h.clone()), &s)
}

fn conductor_of(h: &Arc<NumericalSemigroup>, s: &NumericalSemigroup) -> RelativeIdeal {
    let s_ideal = RelativeIdeal::overring(h, s).unwrap();
    let c = RelativeIdeal::ring(h).colon(&s_ideal).unwrap();
    debug_assert!(c.is_reflexive() && c.is_trace().unwrap());
    debug_assert_eq!(c.endomorphism_semigroup(), *s);
    c
}

/// Whether `x + y − z ∈ H` for all `x ≥ y ≥ z` in `H`.
pub fn is_arf(h: &NumericalSemigroup) -> bool {
    let members = h.small_members();
    members.iter().all(|&x| {
        members.iter().filter(|&&y| y <= x).all(|&y| {
            members
                .iter()
                .filter(|&&z| z <= y)
                .all(|&z| h.contains(x + y - z))
        })
    })
}

/// The smallest Arf semigroup containing `H`.
pub fn arf_closure(h: &NumericalSemigroup) -> NumericalSemigroup {
    let c = h.conductor().max(0);
    let mut member: Vec<bool> = (0..c).map(|x| h.contains(x)).collect();
    let contains = |m: &[bool], x: i64| x >= m.len() as i64 || m[x as usize];
    loop {
        let mut changed = false;
        for x in 0..c {
            if !contains(&member, x) {
                continue;
            }
            for y in 0..=x {
                if !contains(&member, y) {
                    continue;
                }
                for z in 0..=y {
                    if contains(&member, z) && !contains(&member, x + y - z) {
                        member[(x + y - z) as usize] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let closure = NumericalSemigroup::from_predicate(c, |x| member[x as usize])
        .expect("Arf saturation is additively closed");
    debug_assert!(is_arf(&closure) && h.is_subset_of(&closure));
    closure
}

/// Counts and sets behind the ring-level verdicts.
#[derive(Clone, Debug, Serialize)]
pub struct Evidence {
    pub canonical: RelativeIdeal,
    /// `𝔞 = R : K`.
    pub trace_dual: RelativeIdeal,
    pub length_k_mod_r: usize,
    pub mu_k_mod_r: usize,
    pub length_r_mod_a: usize,
    /// `μ((𝔪V + R)/R)`.
    pub mu_mv_mod_r: usize,
    pub s_exponent: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub semigroup: NumericalSemigroup,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub generalized_gorenstein: bool,
    pub minimal_multiplicity: bool,
    pub arf: bool,
    pub finite_cm_type: bool,
    #[serde(rename = "S")]
    pub s: NumericalSemigroup,
    pub conductor_ideal: RelativeIdeal,
    pub ell_r_mod_c: usize,
    pub reflexive_count: Option<usize>,
    pub evidence: Evidence,
    pub notes: Vec<String>,
}

pub fn classify(h: &NumericalSemigroup) -> ClassificationReport {
    let ha = Arc::new(h.clone());
    let ring = RelativeIdeal::ring(&ha);
    let m = RelativeIdeal::maximal_ideal(&ha);
    let k = RelativeIdeal::canonical(&ha);
    let a = ring.colon(&k).unwrap();

    let gorenstein = h.cm_type() == 1;
    let almost_gorenstein = m.sum(&k).unwrap() == m;
    let length_k_mod_r = k.length_quotient(&ring).unwrap();
    let mu_k_mod_r = k.module_mu(&ring).unwrap();
    let length_r_mod_a = ring.length_quotient(&a).unwrap();
    let generalized_gorenstein =
        gorenstein || (h.cm_type() > 1 && length_k_mod_r == mu_k_mod_r * length_r_mod_a);
    let minimal_multiplicity = m.is_stable();
    let arf = is_arf(h);

    let e = h.multiplicity();
    let mv_plus_r = ring.union(&RelativeIdeal::interval(&ha, e)).unwrap();
    let mu_mv_mod_r = mv_plus_r.module_mu(&ring).unwrap();
    let finite_cm_type = e <= 3 && mu_mv_mod_r <= 1;

    let (s, s_exponent) = ring_s(h);
    let c = conductor_of(&ha, &s);
    let ell_r_mod_c = ring.length_quotient(&c).unwrap();

    let mut notes = Vec::new();
    let reflexive_count = if generalized_gorenstein && minimal_multiplicity {
        if s.is_naturals() {
            notes.push(format!(
                "reflexive count = ℓ(R/𝔠) + 1 = {}",
                ell_r_mod_c + 1
            ));
            Some(ell_r_mod_c + 1)
        } else {
            notes.push(format!(
                "reflexive count = {ell_r_mod_c} + |ind CM(S)| with S = {s}, undetermined"
            ));
            None
        }
    } else {
        notes
            .push("reflexive count undetermined: ring is not GGL with minimal multiplicity".into());
        None
    };

    ClassificationReport {
        semigroup: h.clone(),
        gorenstein,
        almost_gorenstein,
        generalized_gorenstein,
        minimal_multiplicity,
        arf,
        finite_cm_type,
        s,
        conductor_ideal: c,
        ell_r_mod_c,
        reflexive_count,
        evidence: Evidence {
            canonical: k,
            trace_dual: a,
            length_k_mod_r,
            mu_k_mod_r,
            length_r_mod_a,
            mu_mv_mod_r,
            s_exponent,
        },
        notes,
    }
}

/// `ℓ(R/𝔠) + |ind CM(S)|`, with the second term known only for `S = ℕ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexiveCount {
    pub ell: usize,
    #[serde(rename = "S")]
    pub s: NumericalSemigroup,
    pub total: Option<usize>,
}

/// Number of indecomposable reflexive modules up to isomorphism, for a GGL
/// ring with minimal multiplicity.
pub fn reflexive_count(h: &NumericalSemigroup) -> Result<ReflexiveCount> {
    let r = classify(h);
    if !(r.generalized_gorenstein && r.minimal_multiplicity) {
        return Err(Error::HypothesisNotSatisfied(format!(
            "{h} is not generalized Gorenstein with minimal multiplicity"
        )));
    }
    Ok(ReflexiveCount {
        ell: r.ell_r_mod_c,
        total: r.s.is_naturals().then_some(r.ell_r_mod_c + 1),
        s: r.s,
    })
}

/// Properties of a reflexive trace ideal `I` and of `A = I : I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealConditions {
    pub stable: bool,
    pub contained_in_c: bool,
    #[serde(rename = "IK_equals_I")]
    pub ik_equals_i: bool,
    #[serde(rename = "A_gorenstein")]
    pub a_gorenstein: bool,
    pub endomorphisms: NumericalSemigroup,
}

impl IdealConditions {
    /// Violated equivalences; empty on every input seen so far.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.contained_in_c != self.ik_equals_i {
            v.push(format!(
                "I ⊆ 𝔠 is {} but IK = I is {}",
                self.contained_in_c, self.ik_equals_i
            ));
        }
        if (self.stable && self.contained_in_c) != self.a_gorenstein {
            v.push(format!(
                "stable ∧ I ⊆ 𝔠 is {} but A Gorenstein is {}",
                self.stable && self.contained_in_c,
                self.a_gorenstein
            ));
        }
        v
    }
}

/// Checks that `I` is an integral reflexive trace ideal and evaluates the
/// stability, conductor and Gorenstein conditions on it.
pub fn ideal_conditions(i: &RelativeIdeal) -> Result<IdealConditions> {
    if !i.is_integral() {
        return Err(Error::NotSettingIdeal(format!("{i} is not contained in R")));
    }
    if !i.is_reflexive() {
        return Err(Error::NotSettingIdeal(format!("{i} is not reflexive")));
    }
    if !i.is_trace()? {
        return Err(Error::NotSettingIdeal(format!("{i} is not a trace ideal")));
    }
    let h = i.ambient();
    let c = conductor_ideal(h);
    let k = RelativeIdeal::canonical(h);
    let a = i.endomorphism_semigroup();
    Ok(IdealConditions {
        stable: i.is_stable(),
        contained_in_c: i.is_subset(&c),
        ik_equals_i: i.sum(&k)? == *i,
        a_gorenstein: a.cm_type() == 1,
        endomorphisms: a,
    })
}
