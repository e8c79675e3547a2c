//! Exact arithmetic: arbitrary-precision rationals, dense univariate
//! polynomials over arbitrary tower fields, resultants, squarefree
//! decomposition, root adjunction and dynamic-evaluation splitting.

mod factor;
mod rat;
mod ratfunc;
mod ring;
mod tower;
mod unipoly;

pub use factor::factor_rational_univariate;
pub use rat::{rat, ratio, Rat};
pub use ratfunc::{RatFunc, RatFuncField};
pub use ring::{Field, PolyRing, Ring, QQ};
pub use tower::{InvOutcome, Level, LevelKind, SplitOutcome, Tower, TowerEl};
pub use unipoly::UniPoly;
