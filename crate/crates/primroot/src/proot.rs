//! The top-level construction: peel prime powers off p - 1, fetch a witness
//! of each prime-power order, and multiply them into a primitive root.
//! Also the brute-force oracles (generator check, root counting, totient)
//! used to verify the construction independently.

use crate::construct::{checked_pow, number_of_powers, witness_with_order, PrimePowerFactor};
use crate::error::{Error, Result};
use crate::field::{gcd_u64, least_divisor, mul_mod, FieldElement, Prime};

/// The factor/witness trail behind a primitive root: the prime powers
/// peeled off p - 1 in scan order, the witness of each order, and their
/// product, an element of order p - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRootResult {
    p: Prime,
    root: FieldElement,
    factors: Vec<PrimePowerFactor>,
    witnesses: Vec<FieldElement>,
}

impl PrimitiveRootResult {
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn root(&self) -> FieldElement {
        self.root
    }

    pub fn factors(&self) -> &[PrimePowerFactor] {
        &self.factors
    }

    pub fn witnesses(&self) -> &[FieldElement] {
        &self.witnesses
    }
}

/// An element of order exactly k, for any k dividing p - 1. Peels the
/// smallest prime power q^n off k, takes the order-q^n witness, and
/// composes it with an element of order k / q^n; the two orders are
/// coprime, so the orders multiply.
pub fn element_of_order(k: u64, p: Prime) -> Result<FieldElement> {
    let pm1 = p.value() - 1;
    if k == 0 || pm1 % k != 0 {
        return Err(Error::NotDivisor {
            divisor: k as u128,
            of: pm1,
        });
    }
    if k == 1 {
        return Ok(p.one());
    }
    let q = least_divisor(2, k)?;
    let n = number_of_powers(k, q)?;
    let qn = checked_pow(q, n).expect("q^n divides k, so it fits u64");
    let k1 = k / qn;

    // Side conditions of the composition step.
    debug_assert!(k1 < k);
    debug_assert_eq!(pm1 % k1, 0);
    debug_assert_eq!(gcd_u64(qn, k1), 1);

    let witness = witness_with_order(Prime::new(q)?, n, p)?;
    let rest = element_of_order(k1, p)?;
    debug_assert!(!witness.is_zero() && !rest.is_zero());
    witness.mul(rest)
}

/// A primitive root of p: an element of order p - 1. Total for a validated
/// prime; a failed witness scan would mean the arithmetic itself is broken.
pub fn primitive_root(p: Prime) -> FieldElement {
    element_of_order(p.value() - 1, p).expect("p - 1 divides itself and witnesses exist")
}

/// Generator check by direct enumeration: do g^1, ..., g^(p-1) hit every
/// residue in [1, p-1]? Deliberately avoids order() and the trace machinery
/// so it can serve as an independent oracle for them.
pub fn is_primitive_root(g: FieldElement) -> bool {
    let p = g.modulus().value();
    let base = g.residue();
    if base == 0 {
        return false;
    }
    let mut seen = vec![false; p as usize];
    let mut cur: u64 = 1;
    for _ in 0..p - 1 {
        cur = mul_mod(cur, base, p);
        seen[cur as usize] = true;
    }
    (1..p).all(|r| seen[r as usize])
}

/// How many elements of [1, p-1] generate the whole group, by exhaustive
/// scan with the enumeration oracle.
pub fn count_primitive_roots(p: Prime) -> u64 {
    (1..p.value())
        .filter(|&g| is_primitive_root(p.element(g).expect("g < p")))
        .count() as u64
}

/// Euler's totient by direct count of the k in [1, n] coprime to n.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("totient requires n >= 1"));
    }
    Ok((1..=n).filter(|&k| gcd_u64(k, n) == 1).count() as u64)
}

/// Runs the peel loop of [`primitive_root`] while recording every factor
/// and witness, so callers can display or re-verify the construction.
pub fn decompose_with_witnesses(p: Prime) -> PrimitiveRootResult {
    let mut k = p.value() - 1;
    let mut factors = Vec::new();
    let mut witnesses = Vec::new();
    let mut root = p.one();
    while k > 1 {
        let q = least_divisor(2, k).expect("k >= 2");
        let n = number_of_powers(k, q).expect("k >= 1 and q >= 2");
        let q = Prime::new(q).expect("least divisor from 2 is prime");
        let factor = PrimePowerFactor::new(q, n).expect("q^n <= p - 1");
        let witness = witness_with_order(q, n, p).expect("q^n divides p - 1");
        k /= factor.value();
        factors.push(factor);
        witnesses.push(witness);
        root = root.mul(witness).expect("same modulus");
    }
    PrimitiveRootResult {
        p,
        root,
        factors,
        witnesses,
    }
}
