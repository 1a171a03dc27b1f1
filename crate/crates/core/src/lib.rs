//! Arithmetic of the prime twists `C(N,p)` of the modular curves `X_0(N)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: primality, quadratic symbols, modular square roots, Hilbert
//!   symbols and class numbers of imaginary quadratic orders.
//! * [`elliptic`]: exact Weierstrass curves over `Q`, the group law, quadratic
//!   twists and the models of `C(11,p)` and `C(19,p)`.
//! * [`lseries`]: coefficient tables, root numbers, `L(1)`, `L'(1)` and the
//!   analytic-rank classifier.
//! * [`localsolve`]: real and `ℓ`-adic solubility of quartics `d·y² = P(x)`.
//! * [`deficiency`]: genus of `X_0(N)`, Atkin-Lehner fixed points and the
//!   classification of deficient places.
//! * [`survey`]: the prime census, the worked examples and the class-number
//!   counting experiment, with CSV/JSON output.

pub mod arith;
pub mod deficiency;
pub mod elliptic;
mod error;
pub mod localsolve;
pub mod lseries;
pub mod survey;

pub use error::{Error, Result};
