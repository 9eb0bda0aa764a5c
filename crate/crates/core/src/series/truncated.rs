//! Elements of `k[[t]]` modulo `t^N`, and the literal syntax for them.

use std::fmt;

use super::field::CoefficientField;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<F: CoefficientField> {
    field: F,
    // coefficients of t^0 .. t^{N-1}
    coeffs: Vec<F::Elem>,
}

impl<F: CoefficientField> TruncatedSeries<F> {
    pub fn zero(field: &F, precision: usize) -> Self {
        TruncatedSeries {
            field: field.clone(),
            coeffs: vec![field.zero(); precision],
        }
    }

    pub fn monomial(field: &F, exponent: usize, coeff: F::Elem, precision: usize) -> Self {
        let mut s = Self::zero(field, precision);
        if exponent < precision {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    /// `Σ c·t^k` over the given terms; repeated exponents accumulate.
    pub fn from_terms(field: &F, terms: &[(usize, F::Elem)], precision: usize) -> Self {
        let mut s = Self::zero(field, precision);
        for (k, c) in terms {
            if *k < precision {
                s.coeffs[*k] = field.add(&s.coeffs[*k], c);
            }
        }
        s
    }

    pub(crate) fn from_coeffs(field: &F, coeffs: Vec<F::Elem>) -> Self {
        TruncatedSeries {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &F::Elem {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// Least degree with a nonzero coefficient; `None` means "≥ N".
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    /// Exponents with nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        (0..self.precision())
            .filter(|&k| !self.field.is_zero(&self.coeffs[k]))
            .collect()
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(precision, self.field.zero());
        if precision > self.precision() {
            panic!("cannot raise precision by truncation");
        }
        TruncatedSeries {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let coeffs = (0..n)
            .map(|k| self.field.add(&self.coeffs[k], &other.coeffs[k]))
            .collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let coeffs = (0..n)
            .map(|k| self.field.sub(&self.coeffs[k], &other.coeffs[k]))
            .collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|x| self.field.mul(x, c)).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    /// Product modulo `t^{min(N, M)}`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut out = vec![self.field.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if !self.field.is_zero(b) {
                    out[i + j] = self.field.add(&out[i + j], &self.field.mul(a, b));
                }
            }
        }
        Self::from_coeffs(&self.field, out)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.precision();
        let mut coeffs = vec![self.field.zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Self::from_coeffs(&self.field, coeffs)
    }
}

impl<F: CoefficientField> fmt::Display for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return write!(f, "0");
        }
        for (i, k) in support.iter().enumerate() {
            let c = &self.coeffs[*k];
            let (sign, mag) = match self.field.descriptor() {
                super::FieldKind::Rational => {
                    let r = self.field.render(c);
                    match r.strip_prefix('-') {
                        Some(m) => ("-", m.to_string()),
                        None => ("+", r),
                    }
                }
                super::FieldKind::Prime(_) => ("+", self.field.render(c)),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mag.as_str(), *k) {
                (m, 0) => write!(f, "{m}")?,
                ("1", k) => write!(f, "t^{k}")?,
                (m, k) => write!(f, "{m}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<F: CoefficientField> fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(t^{})", self.precision())
    }
}

/// One term `(α + β·c)·t^k` of a series literal, with rational `α, β` and an
/// optional scalar slot `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateTerm {
    pub exponent: usize,
    pub constant: (i64, i64),
    pub slot: (i64, i64),
}

/// A polynomial whose coefficients may depend linearly on one scalar `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTemplate {
    pub terms: Vec<TemplateTerm>,
}

impl SeriesTemplate {
    pub fn has_slot(&self) -> bool {
        self.terms.iter().any(|t| t.slot.0 != 0)
    }

    /// Largest exponent in the literal.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.exponent).max().unwrap_or(0)
    }

    /// Substitutes `c` and truncates at `precision`. Terms whose coefficient
    /// vanishes are dropped.
    pub fn instantiate<F: CoefficientField>(
        &self,
        field: &F,
        c: &F::Elem,
        precision: usize,
    ) -> Result<TruncatedSeries<F>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let a = field.from_ratio(t.constant.0, t.constant.1)?;
            let b = field.from_ratio(t.slot.0, t.slot.1)?;
            terms.push((t.exponent, field.add(&a, &field.mul(&b, c))));
        }
        Ok(TruncatedSeries::from_terms(field, &terms, precision))
    }

    /// A literal without a slot.
    pub fn to_series<F: CoefficientField>(
        &self,
        field: &F,
        precision: usize,
    ) -> Result<TruncatedSeries<F>> {
        self.instantiate(field, &field.zero(), precision)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn reduce(num: i64, den: i64) -> (i64, i64) {
    let g = gcd(num, den).max(1);
    let (n, d) = (num / g, den / g);
    if d < 0 {
        (-n, -d)
    } else {
        (n, d)
    }
}

fn add_ratio(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    reduce(a.0 * b.1 + b.0 * a.1, a.1 * b.1)
}

/// Parses a sparse sum of terms such as `"t^6 - 1*t^7"` or `"t^6 - c*t^7"`.
/// A term is a `*`-product of integers, fractions `p/q`, `t`, `t^k` and at
/// most one `c`.
pub fn parse_series(literal: &str) -> Result<SeriesTemplate> {
    let err = |m: &str| Error::Parse(format!("{m} in series literal {literal:?}"));
    let text: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(err("empty literal"));
    }
    // split into signed terms
    let mut pieces: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut current = String::new();
    for (i, ch) in text.chars().enumerate() {
        let after_caret = current.ends_with('^');
        if (ch == '+' || ch == '-') && !after_caret {
            if !current.is_empty() {
                pieces.push((sign, std::mem::take(&mut current)));
            } else if i != 0 {
                return Err(err("dangling operator"));
            }
            sign = if ch == '-' { -1 } else { 1 };
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(err("dangling operator"));
    }
    pieces.push((sign, current));

    let mut acc: Vec<TemplateTerm> = Vec::new();
    for (sign, piece) in pieces {
        let mut coef = (sign, 1i64);
        let mut exponent = 0usize;
        let mut slot = false;
        for factor in piece.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if factor == "c" {
                if slot {
                    return Err(err("slot used twice in one term"));
                }
                slot = true;
            } else if factor == "t" {
                exponent += 1;
            } else if let Some(k) = factor.strip_prefix("t^") {
                exponent += k.parse::<usize>().map_err(|_| err("bad exponent"))?;
            } else if let Some((p, q)) = factor.split_once('/') {
                let p: i64 = p.parse().map_err(|_| err("bad numerator"))?;
                let q: i64 = q.parse().map_err(|_| err("bad denominator"))?;
                if q == 0 {
                    return Err(err("zero denominator"));
                }
                coef = reduce(coef.0 * p, coef.1 * q);
            } else {
                let n: i64 = factor.parse().map_err(|_| err("bad factor"))?;
                coef = reduce(coef.0 * n, coef.1);
            }
        }
        let (constant, slot_coef) = if slot { ((0, 1), coef) } else { (coef, (0, 1)) };
        match acc.iter_mut().find(|t| t.exponent == exponent) {
            Some(t) => {
                t.constant = add_ratio(t.constant, constant);
                t.slot = add_ratio(t.slot, slot_coef);
            }
            None => acc.push(TemplateTerm {
                exponent,
                constant,
                slot: slot_coef,
            }),
        }
    }
    acc.sort_by_key(|t| t.exponent);
    Ok(SeriesTemplate { terms: acc })
}

/// Parses a comma-separated list of series literals.
pub fn parse_series_list(literal: &str) -> Result<Vec<SeriesTemplate>> {
    literal.split(',').map(parse_series).collect()
}
