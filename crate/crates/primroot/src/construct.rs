//! Building elements of prescribed order: the ascending witness scan for
//! prime-power orders and the product composition for coprime orders.

use crate::error::{Error, Result};
use crate::field::{gcd_u64, pow_mod, FieldElement, Prime, MODULUS_BOUND};
use crate::order::order;

/// A factor q^n peeled off p - 1, with q prime and n >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePowerFactor {
    q: Prime,
    n: u64,
}

impl PrimePowerFactor {
    /// Rejects powers that leave the modulus bound, since no p - 1 could
    /// contain them.
    pub fn new(q: Prime, n: u64) -> Result<PrimePowerFactor> {
        match checked_pow(q.value(), n) {
            Some(v) if v < MODULUS_BOUND => Ok(PrimePowerFactor { q, n }),
            Some(v) => Err(Error::OutOfRange { value: v }),
            None => Err(Error::OutOfRange { value: u64::MAX }),
        }
    }

    pub fn base(self) -> Prime {
        self.q
    }

    pub fn exponent(self) -> u64 {
        self.n
    }

    /// q^n as a plain integer.
    pub fn value(self) -> u64 {
        checked_pow(self.q.value(), self.n).expect("validated at construction")
    }
}

/// The largest k with q^k | x.
pub fn number_of_powers(x: u64, q: u64) -> Result<u64> {
    if x == 0 {
        return Err(Error::Domain("number_of_powers requires x >= 1"));
    }
    if q < 2 {
        return Err(Error::Domain("number_of_powers requires q >= 2"));
    }
    let mut x = x;
    let mut k = 0;
    while x % q == 0 {
        x /= q;
        k += 1;
    }
    Ok(k)
}

/// The smallest x in [1, p-1] with x^(q^n) = 1 and x^(q^(n-1)) != 1; such
/// an x has order exactly q^n. Requires q^n | p - 1, which guarantees by
/// root counting that the scan succeeds. n = 0 yields the identity.
pub fn witness_with_order(q: Prime, n: u64, p: Prime) -> Result<FieldElement> {
    let pm1 = p.value() - 1;
    let qn = match checked_pow(q.value(), n) {
        Some(v) if pm1 % v == 0 => v,
        _ => {
            return Err(Error::NotDivisor {
                divisor: saturating_pow_u128(q.value(), n),
                of: pm1,
            })
        }
    };
    if n == 0 {
        return Ok(p.one());
    }
    let m = p.value();
    let lower = qn / q.value(); // q^(n-1)
    for x in 1..m {
        if pow_mod(x, qn, m) == 1 && pow_mod(x, lower, m) != 1 {
            return Ok(p.element(x).expect("x < p"));
        }
    }
    Err(Error::WitnessNotFound {
        q: q.value(),
        n,
        p: m,
    })
}

/// Multiplies two nonzero elements whose orders are coprime; the product's
/// order is the product of the orders. The coprimality hypothesis is
/// checked eagerly because the order claim is part of the contract.
pub fn compose_coprime_orders(a: FieldElement, b: FieldElement) -> Result<FieldElement> {
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.modulus().value(),
            right: b.modulus().value(),
        });
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ord_a = order(a)?;
    let ord_b = order(b)?;
    if gcd_u64(ord_a, ord_b) != 1 {
        return Err(Error::NotCoprime {
            left: ord_a,
            right: ord_b,
        });
    }
    a.mul(b)
}

pub(crate) fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

fn saturating_pow_u128(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
