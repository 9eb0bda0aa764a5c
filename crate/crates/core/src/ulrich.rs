//! Ulrich ideals: `I² = aI` with `I/(a)` free over `R/I`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{enumerate_integral_ideals, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::series::{
    CoefficientField, Lengths, PrimeField, SeriesTemplate, SubringIdeal, TruncatedSeries,
};

/// Both sides of the monomial test, `E + E = m + E` and
/// `|E \ (m + H)| = (μ − 1)·|H \ E|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialEvidence {
    pub ulrich: bool,
    pub stable: bool,
    pub principal: bool,
    pub mu: usize,
    pub colength: usize,
    pub socle_dim: usize,
    pub free_lhs: usize,
    pub free_rhs: usize,
}

/// Monomial Ulrich test. Principal ideals satisfy both conditions trivially
/// and count only when `include_principal` is set.
pub fn is_ulrich_monomial(e: &RelativeIdeal, include_principal: bool) -> Result<MonomialEvidence> {
    if !e.is_integral() {
        return Err(Error::NotIntegral);
    }
    if e.min() == 0 {
        // the unit ideal is not 𝔪-primary
        return Err(Error::NotPrimary);
    }
    let h = e.ambient();
    let stable = e.is_stable();
    let mu = e.mu();
    let colength = e.colength()?;
    let base = RelativeIdeal::principal(h, e.min());
    let free_lhs = e.length_quotient(&base)?;
    let free_rhs = (mu - 1) * colength;
    let principal = mu == 1;
    Ok(MonomialEvidence {
        ulrich: stable && free_lhs == free_rhs && (include_principal || !principal),
        stable,
        principal,
        mu,
        colength,
        socle_dim: e.quotient_socle_dim()?,
        free_lhs,
        free_rhs,
    })
}

/// Monomial Ulrich ideals with `1 ≤ min(E) ≤ min_bound`. The search is
/// exhaustive below the bound and says nothing above it.
pub fn enumerate_ulrich_monomial(
    h: &Arc<NumericalSemigroup>,
    min_bound: i64,
    include_principal: bool,
) -> Result<Vec<RelativeIdeal>> {
    if min_bound < 0 {
        return Err(Error::NegativeBound(min_bound));
    }
    let candidates = enumerate_integral_ideals(h, 1, min_bound);
    Ok(candidates
        .into_par_iter()
        .filter(|e| {
            is_ulrich_monomial(e, include_principal)
                .map(|v| v.ulrich)
                .unwrap_or(false)
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Failure {
    /// `v(I²) ≠ m + v(I)`, so no element can be a reduction.
    StabilityFails,
    /// `ℓ(I/(a)) ≠ (μ − 1)·ℓ(R/I)`.
    NotFree,
    /// `μ(I) = 1`.
    Principal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SeriesVerdict {
    Ulrich {
        witness: String,
    },
    NotUlrich {
        reason: Failure,
    },
    /// No tried candidate is a reduction; inconclusive.
    NotVerified {
        candidates_tried: usize,
    },
}

impl SeriesVerdict {
    pub fn is_ulrich(&self) -> bool {
        matches!(self, SeriesVerdict::Ulrich { .. })
    }
}

impl std::fmt::Display for SeriesVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesVerdict::Ulrich { witness } => write!(f, "ulrich, I² = aI with a = {witness}"),
            SeriesVerdict::NotUlrich { reason } => {
                let why = match reason {
                    Failure::StabilityFails => "v(I²) ≠ m + v(I)",
                    Failure::NotFree => "I/(a) is not free over R/I",
                    Failure::Principal => "principal",
                };
                write!(f, "not ulrich ({why})")
            }
            SeriesVerdict::NotVerified { candidates_tried } => write!(
                f,
                "not verified: none of {candidates_tried} candidates is a reduction"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    #[serde(flatten)]
    pub verdict: SeriesVerdict,
    #[serde(flatten)]
    pub lengths: Lengths,
    pub min_value: usize,
    pub precision: usize,
    pub rechecked_at: Option<usize>,
}

#[derive(Clone, Copy, Debug)]
pub struct SeriesOptions {
    /// Random combinations of the generators tried as reductions.
    pub extra_candidates: usize,
    pub seed: u64,
    pub include_principal: bool,
    /// Also run at twice the precision and require the same verdict.
    pub recheck: bool,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            extra_candidates: 8,
            seed: 0,
            include_principal: false,
            recheck: true,
        }
    }
}

/// Ulrich test for the ideal generated by arbitrary series.
pub fn is_ulrich_series<F: CoefficientField>(
    h: &Arc<NumericalSemigroup>,
    field: &F,
    gens: &[TruncatedSeries<F>],
    precision: usize,
    opts: &SeriesOptions,
) -> Result<SeriesReport> {
    let i = SubringIdeal::span(h, field, gens, precision)?;
    let mut report = series_verdict(&i, opts)?;
    if opts.recheck {
        let again = series_verdict(&i.at_precision(2 * precision)?, opts)?;
        if again.verdict.is_ulrich() != report.verdict.is_ulrich()
            || again.lengths != report.lengths
        {
            return Err(Error::PrecisionTooLow(
                precision,
                format!("verdict changed at precision {}", 2 * precision),
            ));
        }
        report.rechecked_at = Some(2 * precision);
    }
    Ok(report)
}

fn series_verdict<F: CoefficientField>(
    i: &SubringIdeal<F>,
    opts: &SeriesOptions,
) -> Result<SeriesReport> {
    let field = i.field();
    let lengths = i.lengths()?;
    let values = i.value_set();
    let m = values[0];
    if m == 0 {
        return Err(Error::NotPrimary);
    }
    let report = |verdict| SeriesReport {
        verdict,
        lengths,
        min_value: m,
        precision: i.precision(),
        rechecked_at: None,
    };
    let gens = i.generators();
    let minimal: Vec<&TruncatedSeries<F>> =
        gens.iter().filter(|g| g.valuation() == Some(m)).collect();

    if lengths.mu == 1 {
        return Ok(report(if opts.include_principal {
            SeriesVerdict::Ulrich {
                witness: minimal[0].to_string(),
            }
        } else {
            SeriesVerdict::NotUlrich {
                reason: Failure::Principal,
            }
        }));
    }

    let square = i.product(i)?;
    let shifted = i.value_ideal().shift(m as i64);
    if square.value_ideal() != shifted {
        return Ok(report(SeriesVerdict::NotUlrich {
            reason: Failure::StabilityFails,
        }));
    }
    // ℓ(I/(a)) = ℓ(R/(a)) − ℓ(R/I) = v(a) − ℓ(R/I)
    if m - lengths.colength != (lengths.mu - 1) * lengths.colength {
        return Ok(report(SeriesVerdict::NotUlrich {
            reason: Failure::NotFree,
        }));
    }

    let mut candidates: Vec<TruncatedSeries<F>> = minimal.into_iter().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.extra_candidates {
        let mut acc = TruncatedSeries::zero(field, i.precision());
        for g in &gens {
            acc = acc.add(&g.scale(&field.random(&mut rng)));
        }
        if acc.valuation() == Some(m) {
            candidates.push(acc);
        }
    }
    let tried = candidates.len();
    for a in candidates {
        if square.equals(&i.scaled(&a)?)? {
            return Ok(report(SeriesVerdict::Ulrich {
                witness: a.to_string(),
            }));
        }
    }
    Ok(report(SeriesVerdict::NotVerified {
        candidates_tried: tried,
    }))
}

/// Every `c ∈ GF(p)` for which the templates, instantiated at `c`, generate
/// an Ulrich ideal.
pub fn field_sweep(
    h: &Arc<NumericalSemigroup>,
    templates: &[SeriesTemplate],
    field: &PrimeField,
    precision: usize,
    opts: &SeriesOptions,
) -> Result<Vec<u64>> {
    let results: Vec<Result<Option<u64>>> = field
        .elements()
        .expect("prime fields are finite")
        .into_par_iter()
        .map(|c| {
            let gens = templates
                .iter()
                .map(|t| t.instantiate(field, &c, precision))
                .collect::<Result<Vec<_>>>()?;
            let r = is_ulrich_series(h, field, &gens, precision, opts)?;
            Ok(r.verdict.is_ulrich().then_some(c))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        if let Some(c) = r? {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{default_precision, parse_series_list, Rationals};

    fn h(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    fn series<F: CoefficientField>(f: &F, lit: &str, n: usize) -> Vec<TruncatedSeries<F>> {
        parse_series_list(lit)
            .unwrap()
            .iter()
            .map(|t| t.to_series(f, n).unwrap())
            .collect()
    }

    #[test]
    fn monomial_examples() {
        let hh = h(&[3, 7, 8]);
        let v = is_ulrich_monomial(&RelativeIdeal::interval(&hh, 6), false).unwrap();
        assert!(v.ulrich && v.free_lhs == 4 && v.free_rhs == 4);
        let h37 = h(&[3, 7]);
        let e = RelativeIdeal::from_generators(&h37, &[6, 10]).unwrap();
        assert!(!is_ulrich_monomial(&e, false).unwrap().stable);
        let h345 = h(&[3, 4, 5]);
        assert!(
            is_ulrich_monomial(&RelativeIdeal::maximal_ideal(&h345), false)
                .unwrap()
                .ulrich
        );
        let p = is_ulrich_monomial(&RelativeIdeal::principal(&hh, 3), false).unwrap();
        assert!(p.principal && !p.ulrich);
        assert!(
            is_ulrich_monomial(&RelativeIdeal::principal(&hh, 3), true)
                .unwrap()
                .ulrich
        );
    }

    #[test]
    fn monomial_enumeration() {
        assert!(enumerate_ulrich_monomial(&h(&[3, 7]), 12, false)
            .unwrap()
            .is_empty());
        let hh = h(&[3, 7, 8]);
        let found = enumerate_ulrich_monomial(&hh, 8, false).unwrap();
        assert!(found.contains(&RelativeIdeal::interval(&hh, 6)));
        let n = Arc::new(NumericalSemigroup::naturals());
        assert!(enumerate_ulrich_monomial(&n, 10, false).unwrap().is_empty());
        assert_eq!(enumerate_ulrich_monomial(&n, 10, true).unwrap().len(), 10);
    }

    #[test]
    fn series_examples() {
        let f = PrimeField::new(5).unwrap();
        let hh = h(&[3, 7]);
        let opts = SeriesOptions::default();
        let r = is_ulrich_series(&hh, &f, &series(&f, "t^6 - t^7, t^10", 40), 40, &opts).unwrap();
        assert!(r.verdict.is_ulrich(), "{r:?}");
        assert_eq!(r.rechecked_at, Some(80));
        let r = is_ulrich_series(&hh, &f, &series(&f, "t^6, t^10", 40), 40, &opts).unwrap();
        assert_eq!(
            r.verdict,
            SeriesVerdict::NotUlrich {
                reason: Failure::StabilityFails
            }
        );
        let q = Rationals::new();
        let h378 = h(&[3, 7, 8]);
        let r = is_ulrich_series(&h378, &q, &series(&q, "t^6, t^7, t^8", 40), 40, &opts).unwrap();
        assert!(r.verdict.is_ulrich());
    }

    #[test]
    fn sweeps() {
        let hh = h(&[3, 7]);
        let tpl = parse_series_list("t^6 - c*t^7, t^10").unwrap();
        let opts = SeriesOptions::default();
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(
            field_sweep(&hh, &tpl, &f5, 40, &opts).unwrap(),
            vec![1, 2, 3, 4]
        );
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(field_sweep(&hh, &tpl, &f2, 40, &opts).unwrap(), vec![1]);
        let none = parse_series_list("t^6 + c*t^9, t^10").unwrap();
        assert!(field_sweep(&hh, &none, &f5, 40, &opts).unwrap().is_empty());
    }

    #[test]
    fn default_precision_suffices() {
        let f = PrimeField::new(5).unwrap();
        let hh = h(&[3, 7]);
        let gens = series(&f, "t^6 - t^7, t^10", 64);
        let n = default_precision(&hh, &gens);
        let gens = series(&f, "t^6 - t^7, t^10", n);
        assert!(
            is_ulrich_series(&hh, &f, &gens, n, &SeriesOptions::default())
                .unwrap()
                .verdict
                .is_ulrich()
        );
    }
}
