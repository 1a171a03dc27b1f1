//! Exact integer arithmetic: primes, quadratic symbols, square roots modulo
//! primes, Hilbert symbols over `Q` and class numbers of binary quadratic
//! forms.

mod forms;
mod hilbert;
mod primes;
mod symbols;

pub use forms::{class_number, field_discriminant, reduced_forms, Discriminant};
pub use hilbert::{hilbert_symbol, hilbert_symbol_int, Place};
pub(crate) use primes::require_prime;
pub use primes::{
    factorize, is_prime, is_squarefree, prime_divisors, primes_in_range, primes_up_to,
    smallest_prime_factors,
};
pub use symbols::{kronecker, legendre_big, p_star, pow_mod, sqrt_mod};
