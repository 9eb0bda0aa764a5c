mod common;

use std::sync::Arc;

use common::{fractional_ideal, integral_ideal, naive_semigroup, semigroup, Window};
use proptest::prelude::*;
use sgring::chains::{filtration, is_arf_by_chain, lipman_chain};
use sgring::classify::{arf_closure, classify, is_arf};
use sgring::ideal::enumerate_reflexive_classes;
use sgring::series::{PrimeField, Rationals, SubringIdeal};
use sgring::ulrich::{is_ulrich_monomial, is_ulrich_series, SeriesOptions};
use sgring::{NumericalSemigroup, RelativeIdeal};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semigroup_invariants_match_sieve(h in semigroup()) {
        let naive = naive_semigroup(h.generators());
        for x in -3..3 * h.conductor() + 3 {
            prop_assert_eq!(h.contains(x), naive.contains(x));
        }
        prop_assert!(!h.contains(h.frobenius()));
        prop_assert_eq!(h.genus() as usize, h.gaps().len());
        prop_assert!(2 * h.genus() >= h.conductor());
        let pf = h.pseudo_frobenius();
        prop_assert!(pf.contains(&h.frobenius()));
        prop_assert_eq!(h.cm_type(), pf.len());
        prop_assert_eq!(h.is_symmetric(), h.cm_type() == 1);
        let ap = h.apery(h.multiplicity()).unwrap();
        prop_assert_eq!(ap.len() as i64, h.multiplicity());
        prop_assert_eq!(*ap.iter().max().unwrap() - h.multiplicity(), h.frobenius());
    }

    #[test]
    fn ideal_ops_match_window_model(e in fractional_ideal(), f_gens in prop::collection::vec(0i64..12, 1..=2)) {
        let h = Arc::clone(e.ambient());
        let f = RelativeIdeal::from_generators(&h, &f_gens).unwrap();
        let (we, wf) = (Window::of(&e), Window::of(&f));
        prop_assert_eq!(Window::of(&e.sum(&f).unwrap()), we.sum(&wf));
        prop_assert_eq!(Window::of(&e.colon(&f).unwrap()), we.colon(&wf));
        prop_assert_eq!(Window::of(&f.colon(&e).unwrap()), wf.colon(&we));
        let wh = naive_semigroup(h.generators());
        prop_assert_eq!(Window::of(&e.dual()), wh.colon(&we));
        prop_assert_eq!(e.is_stable(), we.sum(&we) == we.shift(we.min()));
    }

    #[test]
    fn triple_dual_and_trace_idempotence(e in fractional_ideal()) {
        let d = e.dual();
        prop_assert_eq!(d.dual().dual(), d.clone());
        let t = e.trace();
        prop_assert!(t.is_integral());
        prop_assert_eq!(t.trace(), t.clone());
        prop_assert!(t.is_trace().unwrap());
    }

    #[test]
    fn canonical_duality(e in fractional_ideal()) {
        let k = RelativeIdeal::canonical(e.ambient());
        prop_assert_eq!(k.colon(&k.colon(&e).unwrap()).unwrap(), e);
    }

    #[test]
    fn stable_iff_shift_of_endomorphisms(e in fractional_ideal()) {
        let a = e.colon(&e).unwrap();
        prop_assert_eq!(e.is_stable(), a.shift(e.min()) == e);
    }

    #[test]
    fn blowup_invariant_under_powers(e in integral_ideal(), n in 1usize..4) {
        prop_assert_eq!(e.power(n).blowup(), e.blowup());
        let f = filtration(&e);
        prop_assert!(f.windows(2).all(|w| w[0].is_subset_of(&w[1])));
        prop_assert_eq!(f.last().unwrap(), &e.blowup());
    }

    #[test]
    fn classification_implications(h in semigroup()) {
        let r = classify(&h);
        prop_assert!(!r.gorenstein || r.almost_gorenstein);
        prop_assert!(!r.almost_gorenstein || r.generalized_gorenstein);
        prop_assert!(!r.arf || r.minimal_multiplicity);
        prop_assert_eq!(r.minimal_multiplicity, h.multiplicity() as usize == h.embedding_dimension());
        if r.generalized_gorenstein && r.minimal_multiplicity {
            prop_assert_eq!(r.s.cm_type(), 1);
        }
        prop_assert!(r.conductor_ideal.is_reflexive() && r.conductor_ideal.is_trace().unwrap());
        prop_assert_eq!(r.conductor_ideal.endomorphism_semigroup(), r.s.clone());
    }

    #[test]
    fn arf_closure_is_least_arf_overring(h in semigroup()) {
        let a = arf_closure(&h);
        prop_assert!(is_arf(&a));
        prop_assert!(h.is_subset_of(&a));
        prop_assert_eq!(arf_closure(&a), a.clone());
        prop_assert_eq!(is_arf(&h), a == *h);
        prop_assert_eq!(is_arf_by_chain(&h), is_arf(&h));
        if is_arf(&h) {
            for m in lipman_chain(&h).members {
                prop_assert!(m.is_naturals() || m.multiplicity() as usize == m.embedding_dimension());
            }
        }
    }

    #[test]
    fn reflexive_classes_are_reflexive_overrings_of_h(h in semigroup()) {
        prop_assume!(h.genus() <= 8);
        let ring = RelativeIdeal::ring(&h);
        for c in enumerate_reflexive_classes(&h) {
            prop_assert_eq!(c.min(), 0);
            prop_assert!(ring.is_subset(&c));
            prop_assert!(c.is_reflexive());
        }
    }

    #[test]
    fn series_agree_with_monomial_ideals(e in integral_ideal()) {
        let h = Arc::clone(e.ambient());
        let gens = e.minimal_generators();
        let n = (h.conductor() + 2 * gens.iter().max().unwrap() + h.multiplicity()) as usize;
        let q = SubringIdeal::monomial(&h, &Rationals::new(), &gens, n).unwrap();
        let p = SubringIdeal::monomial(&h, &PrimeField::new(7).unwrap(), &gens, n).unwrap();
        prop_assert_eq!(q.value_ideal(), e.clone());
        prop_assert_eq!(q.value_set(), p.value_set());
        let l = q.lengths().unwrap();
        prop_assert_eq!(l, p.lengths().unwrap());
        prop_assert_eq!(l.mu, e.mu());
        prop_assert_eq!(l.colength, e.colength().unwrap());
        prop_assert_eq!(l.socle_dim, e.quotient_socle_dim().unwrap());
        let q2 = q.at_precision(2 * n).unwrap();
        prop_assert_eq!(q2.lengths().unwrap(), l);
        prop_assert_eq!(q2.value_ideal(), e);
    }

    #[test]
    fn ulrich_series_agrees_with_monomial_test(e in integral_ideal()) {
        let h = Arc::clone(e.ambient());
        let gens = e.minimal_generators();
        let n = (h.conductor() + 2 * gens.iter().max().unwrap() + h.multiplicity()) as usize;
        let f = PrimeField::new(5).unwrap();
        let series = SubringIdeal::monomial(&h, &f, &gens, n).unwrap().generators();
        let s = is_ulrich_series(&h, &f, &series, n, &SeriesOptions::default()).unwrap();
        let m = is_ulrich_monomial(&e, false).unwrap();
        prop_assert_eq!(s.verdict.is_ulrich(), m.ulrich);
        if m.ulrich {
            let t = h.cm_type();
            prop_assert_eq!((m.mu - 1) * m.socle_dim, t);
            prop_assert!(m.mu * (m.mu - 1) <= t * (t + 1));
        }
    }
}

#[test]
fn naturals_edge_cases() {
    let n = Arc::new(NumericalSemigroup::naturals());
    assert_eq!(n.frobenius(), -1);
    assert_eq!(n.cm_type(), 1);
    let r = classify(&n);
    assert!(r.gorenstein && r.arf && r.finite_cm_type);
    assert_eq!(r.reflexive_count, Some(1));
    assert_eq!(enumerate_reflexive_classes(&n).len(), 1);
}
