//! Exact arithmetic over Z/pZ and a constructive primitive-root finder.
//!
//! The construction works bottom-up: multiplicative orders come from full
//! power traces, the roots of -1 + x^d are counted by exhaustive scan to
//! show each prime power q^n dividing p - 1 has an element of that exact
//! order, and those witnesses multiply into an element of order p - 1.
//! Everything is desk-scale and exact (moduli below 2^31, arbitrary
//! precision polynomial coefficients), and every theorem the construction
//! leans on ships as a runnable sweep in [`selftest`].

pub mod construct;
pub mod error;
pub mod field;
pub mod order;
pub mod poly;
pub mod proot;
pub mod selftest;

pub use construct::{
    compose_coprime_orders, number_of_powers, witness_with_order, PrimePowerFactor,
};
pub use error::{Error, Result};
pub use field::{
    coprime, divides, gcd, is_prime, least_divisor, FieldElement, Prime, MODULUS_BOUND,
};
pub use order::{all_powers, exists_smaller_power_eq_1, order, order_fast, PowerTrace};
pub use poly::{fermat_poly, geometric_series_poly, IntPolynomial};
pub use proot::{
    count_primitive_roots, decompose_with_witnesses, element_of_order, is_primitive_root,
    primitive_root, totient, PrimitiveRootResult,
};
pub use selftest::{run_selftest, PropertyCheck};
