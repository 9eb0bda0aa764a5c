//! Truncated power series over exact fields and the submodules of `k[[t]]`
//! they generate over `k[[t^H]]`.

mod field;
mod staircase;
mod truncated;

pub use field::{
    big_ratio, CoefficientField, ExactField, ExactScalar, FieldKind, PrimeField, Rationals,
};
pub use staircase::{default_precision, Lengths, SubringIdeal};
pub use truncated::{
    parse_series, parse_series_list, SeriesTemplate, TemplateTerm, TruncatedSeries,
};
