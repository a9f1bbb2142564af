//! Formal q-series with rational exponents, Dedekind eta quotients, and the
//! Laurent-in-`f` description of characters on `Γ0(3)`.

mod error;
mod eta;
mod fit;
mod series;

pub use error::QError;
pub use eta::{eta_expansion, f_power_at_S, hauptmodul_f};
pub use fit::{derive_dimension_formula, dim_tilde_v1, fit_character, LaurentFit};
pub use series::PuiseuxSeries;

/// Integer powers of `q` kept past the leading pole by default.
pub const DEFAULT_TRUNC: i64 = 12;
