//! `R`-submodules of `k[[t]]` for `R = k[[t^H]]`, stored as an echelonized
//! basis of their image modulo `t^N`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::field::CoefficientField;
use super::truncated::TruncatedSeries;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Exact polynomial as sparse `(exponent, coefficient)` terms, so that an
/// ideal can be rebuilt at any precision.
type Poly<E> = Vec<(usize, E)>;

#[derive(Clone, Debug)]
pub struct SubringIdeal<F: CoefficientField> {
    ambient: Arc<NumericalSemigroup>,
    field: F,
    precision: usize,
    generators: Vec<Poly<F::Elem>>,
    // leading exponent -> monic row, zero at every other leading exponent
    staircase: BTreeMap<usize, Vec<F::Elem>>,
    // every exponent in [tail, N) is a leading exponent, and N - tail ≥ e
    tail: usize,
}

/// `μ(A)`, `ℓ(R/A)` and the type `r(R/A)` of an `𝔪`-primary ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Lengths {
    pub mu: usize,
    pub colength: usize,
    pub socle_dim: usize,
}

/// `c(H) + 2·v + e(H)` where `v` is the largest generator valuation.
pub fn default_precision<F: CoefficientField>(
    h: &NumericalSemigroup,
    gens: &[TruncatedSeries<F>],
) -> usize {
    let v = gens.iter().filter_map(|g| g.valuation()).max().unwrap_or(0);
    (h.conductor().max(0) as usize) + 2 * v + h.multiplicity() as usize
}

fn to_poly<F: CoefficientField>(s: &TruncatedSeries<F>) -> Poly<F::Elem> {
    s.support()
        .into_iter()
        .map(|k| (k, s.coeff(k).clone()))
        .collect()
}

impl<F: CoefficientField> SubringIdeal<F> {
    /// The `R`-module generated by `gens`, computed modulo `t^N`.
    ///
    /// Fails with `PrecisionTooLow` unless the result contains `t^s k[[t]]` for
    /// some `s` with `s + e(H) ≤ N`, which pins it down exactly.
    pub fn span(
        ambient: &Arc<NumericalSemigroup>,
        field: &F,
        gens: &[TruncatedSeries<F>],
        precision: usize,
    ) -> Result<Self> {
        let polys: Vec<_> = gens.iter().map(to_poly).collect();
        Self::from_polys(ambient, field, polys, precision)
    }

    /// The ideal generated by monomials `t^g`.
    pub fn monomial(
        ambient: &Arc<NumericalSemigroup>,
        field: &F,
        exponents: &[i64],
        precision: usize,
    ) -> Result<Self> {
        let polys = exponents
            .iter()
            .map(|&g| {
                if g < 0 {
                    Err(Error::UnsupportedExponent(g))
                } else {
                    Ok(vec![(g as usize, field.one())])
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_polys(ambient, field, polys, precision)
    }

    fn from_polys(
        ambient: &Arc<NumericalSemigroup>,
        field: &F,
        generators: Vec<Poly<F::Elem>>,
        precision: usize,
    ) -> Result<Self> {
        for g in &generators {
            for (k, _) in g {
                if !ambient.contains(*k as i64) {
                    return Err(Error::UnsupportedExponent(*k as i64));
                }
            }
        }
        let mut ideal = SubringIdeal {
            ambient: Arc::clone(ambient),
            field: field.clone(),
            precision,
            generators,
            staircase: BTreeMap::new(),
            tail: precision,
        };
        ideal.close();
        if ideal.staircase.is_empty() {
            return Err(Error::NotPrimary);
        }
        let n = precision;
        let mut tail = n;
        while tail > 0 && ideal.staircase.contains_key(&(tail - 1)) {
            tail -= 1;
        }
        let e = ambient.multiplicity() as usize;
        if n - tail < e {
            return Err(Error::PrecisionTooLow(
                n,
                format!("leading exponents do not reach a run of {e} below the precision"),
            ));
        }
        ideal.tail = tail;
        Ok(ideal)
    }

    fn dense(&self, p: &Poly<F::Elem>) -> Vec<F::Elem> {
        let mut row = vec![self.field.zero(); self.precision];
        for (k, c) in p {
            if *k < self.precision {
                row[*k] = self.field.add(&row[*k], c);
            }
        }
        row
    }

    // Closure under multiplication by t^{a_i}.
    fn close(&mut self) {
        let mut queue: Vec<Vec<F::Elem>> = self.generators.iter().map(|g| self.dense(g)).collect();
        let shifts: Vec<usize> = self
            .ambient
            .generators()
            .iter()
            .map(|&a| a as usize)
            .filter(|&a| a > 0)
            .collect();
        while let Some(row) = queue.pop() {
            if let Some(lead) = self.insert(row) {
                let row = &self.staircase[&lead];
                for &a in &shifts {
                    if lead + a < self.precision {
                        queue.push(shift_row(&self.field, row, a));
                    }
                }
            }
        }
    }

    /// Reduces `row` against the staircase in place.
    fn reduce(&self, row: &mut [F::Elem]) {
        for (&lead, basis) in &self.staircase {
            if !self.field.is_zero(&row[lead]) {
                let c = row[lead].clone();
                for k in lead..row.len() {
                    if !self.field.is_zero(&basis[k]) {
                        row[k] = self.field.sub(&row[k], &self.field.mul(&c, &basis[k]));
                    }
                }
            }
        }
    }

    // Returns the new leading exponent, if the row was independent.
    fn insert(&mut self, mut row: Vec<F::Elem>) -> Option<usize> {
        self.reduce(&mut row);
        let lead = row.iter().position(|c| !self.field.is_zero(c))?;
        let inv = self
            .field
            .inv(&row[lead])
            .expect("nonzero leading coefficient");
        for c in row.iter_mut().skip(lead) {
            *c = self.field.mul(c, &inv);
        }
        for basis in self.staircase.values_mut() {
            if !self.field.is_zero(&basis[lead]) {
                let c = basis[lead].clone();
                for k in lead..row.len() {
                    if !self.field.is_zero(&row[k]) {
                        basis[k] = self.field.sub(&basis[k], &self.field.mul(&c, &row[k]));
                    }
                }
            }
        }
        self.staircase.insert(lead, row);
        Some(lead)
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn generators(&self) -> Vec<TruncatedSeries<F>> {
        self.generators
            .iter()
            .map(|g| TruncatedSeries::from_coeffs(&self.field, self.dense(g)))
            .collect()
    }

    /// The same ideal recomputed modulo `t^{precision}`.
    pub fn at_precision(&self, precision: usize) -> Result<Self> {
        Self::from_polys(
            &self.ambient,
            &self.field,
            self.generators.clone(),
            precision,
        )
    }

    /// Least `s` with `t^s k[[t]] ⊆ A` as certified by the staircase.
    pub fn tail(&self) -> usize {
        self.tail
    }

    /// Value set `v(A)` below the precision.
    pub fn value_set(&self) -> Vec<usize> {
        self.staircase.keys().copied().collect()
    }

    /// `v(A)` as a monomial relative ideal.
    pub fn value_ideal(&self) -> RelativeIdeal {
        let tail = self.tail as i64;
        RelativeIdeal::from_predicate(&self.ambient, 0, tail, |x| {
            self.staircase.contains_key(&(x as usize))
        })
        .expect("value sets are closed under the semigroup")
    }

    /// Basis rows in increasing order of leading exponent.
    pub fn basis(&self) -> Vec<TruncatedSeries<F>> {
        self.staircase
            .values()
            .map(|r| TruncatedSeries::from_coeffs(&self.field, r.clone()))
            .collect()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.precision != other.precision
            || self.field != other.field
            || self.ambient != other.ambient
        {
            Err(Error::PrecisionMismatch)
        } else {
            Ok(())
        }
    }

    /// `A·B`, generated by pairwise products of generators.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let f = &self.field;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
                for (i, x) in a {
                    for (j, y) in b {
                        let slot = acc.entry(i + j).or_insert_with(|| f.zero());
                        *slot = f.add(slot, &f.mul(x, y));
                    }
                }
                gens.push(acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect());
            }
        }
        Self::from_polys(&self.ambient, f, gens, self.precision)
    }

    /// `x·A` for an element `x` of `R`.
    pub fn scaled(&self, x: &TruncatedSeries<F>) -> Result<Self> {
        let principal =
            Self::from_polys(&self.ambient, &self.field, vec![to_poly(x)], self.precision)?;
        principal.product(self)
    }

    /// `𝔪A`, generated by `t^{a_i}` times the generators.
    pub fn maximal_times(&self) -> Result<Self> {
        let gens = self
            .ambient
            .generators()
            .iter()
            .flat_map(|&a| {
                self.generators
                    .iter()
                    .map(move |g| g.iter().map(|(k, c)| (k + a as usize, c.clone())).collect())
            })
            .collect();
        Self::from_polys(&self.ambient, &self.field, gens, self.precision)
    }

    /// Equality of the two ideals. Both staircases are certified, so this is
    /// exact and not only modulo `t^N`.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.staircase == other.staircase)
    }

    pub fn contains(&self, x: &TruncatedSeries<F>) -> Result<bool> {
        if x.field() != &self.field {
            return Err(Error::PrecisionMismatch);
        }
        let mut row = self.dense(&to_poly(x));
        self.reduce(&mut row);
        Ok(row.iter().all(|c| self.field.is_zero(c)))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        for row in self.staircase.values() {
            let mut r = row.clone();
            other.reduce(&mut r);
            if !r.iter().all(|c| self.field.is_zero(c)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `ℓ(R/A)`; every nonzero ideal here is `𝔪`-primary.
    pub fn colength(&self) -> Result<usize> {
        if !self
            .staircase
            .keys()
            .all(|&k| self.ambient.contains(k as i64))
        {
            return Err(Error::NotIntegral);
        }
        let in_h = (0..self.precision)
            .filter(|&k| self.ambient.contains(k as i64))
            .count();
        Ok(in_h - self.staircase.len())
    }

    /// Dimension of the socle of `R/A`: the common kernel of multiplication by
    /// each `t^{a_i}` on the normal monomials `H \ v(A)`.
    pub fn socle_dim(&self) -> Result<usize> {
        self.colength()?;
        let normal: Vec<usize> = (0..self.tail)
            .filter(|&k| self.ambient.contains(k as i64) && !self.staircase.contains_key(&k))
            .collect();
        let column: BTreeMap<usize, usize> =
            normal.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let d = normal.len();
        let f = &self.field;
        // one row per (generator, normal monomial): the image expressed in
        // normal coordinates; the socle is the kernel of the transpose
        let mut images: Vec<Vec<F::Elem>> = Vec::new();
        for &a in self.ambient.generators() {
            for &k in &normal {
                let mut row = vec![f.zero(); self.precision];
                if k + (a as usize) < self.precision {
                    row[k + a as usize] = f.one();
                }
                self.reduce(&mut row);
                let mut img = vec![f.zero(); d];
                for (pos, c) in row.iter().enumerate() {
                    if !f.is_zero(c) {
                        img[column[&pos]] = c.clone();
                    }
                }
                images.push(img);
            }
        }
        // the map x ↦ (t^{a_i} x)_i has matrix with columns indexed by normal
        // monomials; its rank is the column rank of the stacked blocks
        let ne = self.ambient.generators().len();
        let mut matrix: Vec<Vec<F::Elem>> = Vec::new();
        for i in 0..ne {
            for j in 0..d {
                // row j of block i: coefficient of normal monomial j in t^{a_i}·x
                matrix.push((0..d).map(|src| images[i * d + src][j].clone()).collect());
            }
        }
        Ok(d - rank(f, matrix))
    }

    pub fn lengths(&self) -> Result<Lengths> {
        let colength = self.colength()?;
        let m_a = self.maximal_times()?;
        // v(A) and v(𝔪A) agree from the larger tail on, and both tails lie below N
        let mu = self.staircase.len() - m_a.staircase.len();
        Ok(Lengths {
            mu,
            colength,
            socle_dim: self.socle_dim()?,
        })
    }
}

fn shift_row<F: CoefficientField>(field: &F, row: &[F::Elem], a: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); row.len()];
    if a < row.len() {
        out[a..].clone_from_slice(&row[..row.len() - a]);
    }
    out
}

fn rank<F: CoefficientField>(f: &F, mut m: Vec<Vec<F::Elem>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !f.is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][col]).unwrap();
        for i in 0..m.len() {
            if i != r && !f.is_zero(&m[i][col]) {
                let c = f.mul(&m[i][col], &inv);
                for j in col..cols {
                    let t = f.mul(&c, &m[r][j]);
                    m[i][j] = f.sub(&m[i][j], &t);
                }
            }
        }
        r += 1;
    }
    r
}
