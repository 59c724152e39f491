//! Multiplicative order, defined as the length of the full power trace
//! [a^1, a^2, ..., a^k] that stops at the first 1.

use crate::error::{Error, Result};
use crate::field::{mul_mod, FieldElement};

/// The list [a^1 mod p, ..., a^k mod p] where k is minimal with a^k = 1.
/// Fermat's little theorem caps k at p-1, so the trace always ends in 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTrace {
    base: FieldElement,
    entries: Vec<FieldElement>,
}

impl PowerTrace {
    pub fn base(&self) -> FieldElement {
        self.base
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    /// The trace length, i.e. the order of the base. Never zero: a trace
    /// holds at least a^1.
    pub fn len(&self) -> u64 {
        self.entries.len() as u64
    }
}

/// Materializes the power trace of a nonzero element.
pub fn all_powers(a: FieldElement) -> Result<PowerTrace> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let p = a.modulus().value();
    let mut entries = Vec::new();
    let mut cur = a.residue();
    loop {
        entries.push(a.modulus().element(cur).expect("residue stays below p"));
        if cur == 1 || entries.len() as u64 >= p - 1 {
            break;
        }
        cur = mul_mod(cur, a.residue(), p);
    }
    debug_assert_eq!(
        entries.last().map(|e| e.residue()),
        Some(1),
        "a^(p-1) = 1 failed; the modulus cannot be prime"
    );
    Ok(PowerTrace { base: a, entries })
}

/// ord(a): the least k >= 1 with a^k = 1, computed as the trace length.
pub fn order(a: FieldElement) -> Result<u64> {
    Ok(all_powers(a)?.len())
}

/// Same value as [`order`], found by scanning the divisors of p-1 in
/// ascending order instead of materializing the trace. Cross-validated
/// against the trace definition in the test suite.
pub fn order_fast(a: FieldElement) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = a.modulus().value() - 1;
    for d in divisors_ascending(n) {
        if a.pow(d).residue() == 1 {
            return Ok(d);
        }
    }
    unreachable!("a^(p-1) = 1 for every nonzero a mod a prime")
}

/// True iff some m with 1 <= m < n has a^m = 1. Total: zero never powers
/// to 1 and an empty range has no witness.
pub fn exists_smaller_power_eq_1(a: FieldElement, n: u64) -> bool {
    let p = a.modulus().value();
    let mut cur = 1 % p;
    for _ in 1..n {
        cur = mul_mod(cur, a.residue(), p);
        if cur == 1 {
            return true;
        }
    }
    false
}

pub(crate) fn divisors_ascending(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d <= n / d {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
