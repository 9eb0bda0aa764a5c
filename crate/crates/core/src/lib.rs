pub mod chains;
pub mod classify;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod oracle;
pub mod semigroup;
pub mod series;
pub mod ulrich;

pub use error::{Error, Result};
pub use ideal::RelativeIdeal;
pub use semigroup::NumericalSemigroup;
pub use series::{PrimeField, Rationals};

/// Series over `ℚ`.
pub type RationalSeries = series::TruncatedSeries<Rationals>;
/// Series over a prime field.
pub type PrimeSeries = series::TruncatedSeries<PrimeField>;
/// Series ideals over `ℚ`.
pub type RationalIdeal = series::SubringIdeal<Rationals>;
/// Series ideals over a prime field.
pub type PrimeIdeal = series::SubringIdeal<PrimeField>;
