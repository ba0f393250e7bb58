//! Exact polynomial algebra over the rationals and the polynomial text
//! grammar used by the command line.

mod multi;
mod parse;
mod uni;

pub use multi::{Exponents, MultiPoly};
pub use parse::{parse_poly, MAX_EXPONENT};
pub use uni::UniPoly;
pub use uni::latex_rational;
