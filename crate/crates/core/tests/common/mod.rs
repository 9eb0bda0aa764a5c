//! Brute-force models shared by the integration tests. Sets are membership
//! tables on a fixed window `[-W, W)`, with everything from `W` on a member.
#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use sgring::{NumericalSemigroup, RelativeIdeal};

pub const W: i64 = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window(Vec<bool>);

impl Window {
    pub fn from_fn(f: impl Fn(i64) -> bool) -> Self {
        Window((-W..W).map(f).collect())
    }

    pub fn of(e: &RelativeIdeal) -> Self {
        Self::from_fn(|x| e.contains(x))
    }

    pub fn contains(&self, x: i64) -> bool {
        if x >= W {
            true
        } else if x < -W {
            false
        } else {
            self.0[(x + W) as usize]
        }
    }

    fn members(&self) -> impl Iterator<Item = i64> + '_ {
        (-W..3 * W).filter(|&x| self.contains(x))
    }

    pub fn sum(&self, o: &Self) -> Self {
        let mine: Vec<i64> = self.members().collect();
        Self::from_fn(|x| mine.iter().any(|&y| o.contains(x - y)))
    }

    pub fn colon(&self, o: &Self) -> Self {
        let theirs: Vec<i64> = o.members().collect();
        Self::from_fn(|z| theirs.iter().all(|&y| self.contains(z + y)))
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::from_fn(|x| self.contains(x - k))
    }

    pub fn min(&self) -> i64 {
        self.members().next().unwrap()
    }
}

/// Membership of `⟨gens⟩` by sieving.
pub fn naive_semigroup(gens: &[i64]) -> Window {
    let mut member = vec![false; (3 * W) as usize];
    member[0] = true;
    for x in 1..3 * W {
        member[x as usize] = gens.iter().any(|&g| g <= x && member[(x - g) as usize]);
    }
    Window::from_fn(|x| x >= 0 && member[x as usize])
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Semigroups with 2 to 4 generators below 12 and conductor at most 40.
pub fn semigroup() -> impl Strategy<Value = Arc<NumericalSemigroup>> {
    prop::collection::vec(2i64..12, 2..=4)
        .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
        .prop_map(|g| Arc::new(NumericalSemigroup::from_generators(&g).unwrap()))
        .prop_filter("small conductor", |h| h.conductor() <= 40)
}

/// An integral monomial ideal generated by 1 to 3 members of `H` below `c + e`.
pub fn integral_ideal() -> impl Strategy<Value = RelativeIdeal> {
    semigroup().prop_flat_map(|h| {
        let members: Vec<i64> = (1..=h.conductor() + h.multiplicity())
            .filter(|&x| h.contains(x))
            .collect();
        prop::collection::vec(prop::sample::select(members), 1..=3)
            .prop_map(move |g| RelativeIdeal::from_generators(&h, &g).unwrap())
    })
}

/// A fractional monomial ideal with generators in `[-5, c + e)`.
pub fn fractional_ideal() -> impl Strategy<Value = RelativeIdeal> {
    semigroup().prop_flat_map(|h| {
        let hi = h.conductor() + h.multiplicity();
        prop::collection::vec(-5i64..hi, 1..=3)
            .prop_map(move |g| RelativeIdeal::from_generators(&h, &g).unwrap())
    })
}
