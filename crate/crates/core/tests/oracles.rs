mod common;

use std::sync::Arc;

use common::{naive_semigroup, Window};
use sgring::ideal::{enumerate_integral_ideals, enumerate_normalized_ideals};
use sgring::semigroup::enumerate_by_genus;
use sgring::{NumericalSemigroup, RelativeIdeal};

// Semigroups of genus g have Frobenius number at most 2g - 1; count the
// additively closed member sets of [1, F) with F as the largest gap.
fn brute_genus_count(g: u32) -> usize {
    if g == 0 {
        return 1;
    }
    let mut count = 0;
    for f in g..2 * g {
        let bits = f - 1;
        for mask in 0u32..(1 << bits) {
            if mask.count_ones() != f - g {
                continue;
            }
            let member = |x: u32| x == 0 || x > f || (x < f && mask >> (x - 1) & 1 == 1);
            let closed = (1..f)
                .filter(|&x| member(x))
                .all(|x| (x..f).filter(|&y| member(y)).all(|y| member(x + y)));
            if closed {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn genus_counts_match_brute_force() {
    let tree: Vec<_> = enumerate_by_genus(8).unwrap().collect();
    for g in 0..=8 {
        let n = tree.iter().filter(|h| h.genus() == g as i64).count();
        assert_eq!(n, brute_genus_count(g), "genus {g}");
    }
    let cumulative: usize = (0..=6).map(brute_genus_count).sum();
    assert_eq!(cumulative, 50);
}

#[test]
fn golden_invariants_by_definition() {
    let h = NumericalSemigroup::from_generators(&[3, 7, 8]).unwrap();
    let naive = naive_semigroup(&[3, 7, 8]);
    let gaps: Vec<i64> = (0..40).filter(|&x| !naive.contains(x)).collect();
    assert_eq!(gaps, vec![1, 2, 4, 5]);
    let pf: Vec<i64> = gaps
        .iter()
        .copied()
        .filter(|&x| {
            (1..40)
                .filter(|&s| naive.contains(s))
                .all(|s| naive.contains(x + s))
        })
        .collect();
    assert_eq!(pf, vec![4, 5]);
    assert_eq!(h.pseudo_frobenius(), pf);
    assert_eq!(h.frobenius(), *gaps.last().unwrap());
}

// All sets E with 0 ∈ E ⊆ ℕ, E ⊇ [c, ∞) and E + H ⊆ E, by subset search.
fn brute_normalized(h: &NumericalSemigroup) -> Vec<Vec<i64>> {
    let c = h.conductor();
    let mut out = Vec::new();
    for mask in 0u64..(1 << c.max(0)) {
        let member = |x: i64| x >= c || (x >= 0 && mask >> x & 1 == 1);
        if !member(0) && c > 0 {
            continue;
        }
        let closed = (0..c)
            .filter(|&x| member(x))
            .all(|x| h.generators().iter().all(|&a| member(x + a)));
        if closed {
            out.push((0..c).filter(|&x| member(x)).collect());
        }
    }
    out.sort();
    out
}

#[test]
fn normalized_ideal_enumeration_matches_subset_search() {
    for h in enumerate_by_genus(6).unwrap() {
        let ha = Arc::new(h.clone());
        let mut ours: Vec<Vec<i64>> = enumerate_normalized_ideals(&ha)
            .iter()
            .map(|e| (0..h.conductor()).filter(|&x| e.contains(x)).collect())
            .collect();
        ours.sort();
        assert_eq!(ours, brute_normalized(&h), "{h}");
    }
}

#[test]
fn reflexive_classes_match_window_duality() {
    for h in enumerate_by_genus(5).unwrap() {
        let ha = Arc::new(h.clone());
        let wh = naive_semigroup(h.generators());
        for e in enumerate_normalized_ideals(&ha) {
            let we = Window::of(&e);
            let refl = wh.colon(&wh.colon(&we)) == we;
            assert_eq!(e.is_reflexive(), refl, "{e} over {h}");
        }
    }
}

#[test]
fn integral_ideal_enumeration_is_complete() {
    // every set generated by members of H with minimum m appears
    let h = Arc::new(NumericalSemigroup::from_generators(&[3, 7]).unwrap());
    let all = enumerate_integral_ideals(&h, 0, 12);
    let members: Vec<i64> = (0..24).filter(|&x| h.contains(x)).collect();
    for mask in 0u32..(1 << 10) {
        let gens: Vec<i64> = (0..10)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        if gens.is_empty() || gens.iter().copied().min().unwrap() > 12 {
            continue;
        }
        let e = RelativeIdeal::from_generators(&h, &gens).unwrap();
        assert!(all.contains(&e), "{e} missing");
    }
    let unique: std::collections::HashSet<_> = all.iter().collect();
    assert_eq!(unique.len(), all.len());
}
