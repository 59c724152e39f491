//! Integer polynomials viewed as congruences mod p: evaluation, root
//! scanning, synthetic division by a monic linear factor, and the special
//! -1 + x^n family whose root counts drive the witness search.
//!
//! Coefficients are arbitrary-precision integers. Synthetic-division
//! quotients grow geometrically in the shift, so fixed-width words would
//! silently lose exactness on inputs the contracts still allow.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::field::{mul_mod, FieldElement, Prime};

/// Ascending coefficient list: `coeffs[i]` is the coefficient of x^i.
/// The empty list is the zero polynomial. Operations never trim trailing
/// zeros on their own; call [`IntPolynomial::normalized`] when a canonical
/// degree matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Formal degree: length - 1, with no normalization applied.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// A copy with trailing zero coefficients trimmed. The zero polynomial
    /// normalizes to the empty list.
    pub fn normalized(&self) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// A copy with every coefficient reduced to its residue in [0, p).
    pub fn reduce_mod(&self, p: Prime) -> IntPolynomial {
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigInt::from(reduce_coeff(c, p.value())))
                .collect(),
        }
    }

    /// Horner evaluation at `x`, every step reduced mod p. The empty
    /// polynomial evaluates to 0.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let p = x.modulus().value();
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x.residue(), p) + reduce_coeff(c, p)) % p;
        }
        x.modulus().element(acc).expect("residue stays below p")
    }

    /// True iff `x` is a root of the congruence self = 0 (mod p).
    pub fn is_root(&self, x: FieldElement) -> bool {
        self.eval(x).is_zero()
    }

    /// Non-trivial mod p: nonempty with leading coefficient not divisible
    /// by p. Callers wanting a canonical answer normalize first.
    pub fn is_nontrivial(&self, p: Prime) -> bool {
        match self.coeffs.last() {
            Some(c) => reduce_coeff(c, p.value()) != 0,
            None => false,
        }
    }

    /// All distinct roots in [0, p), found by scanning every residue.
    /// Rejects polynomials that are trivial mod p, whose root set carries
    /// no information (either everything or a lie about the degree).
    pub fn roots(&self, p: Prime) -> Result<Vec<FieldElement>> {
        if !self.is_nontrivial(p) {
            return Err(Error::Domain(
                "root counting requires a polynomial that is non-trivial mod p",
            ));
        }
        let m = p.value();
        let reduced: Vec<u64> = self.coeffs.iter().map(|c| reduce_coeff(c, m)).collect();
        let mut found = Vec::new();
        for x in 0..m {
            let mut acc = 0u64;
            for &c in reduced.iter().rev() {
                acc = (mul_mod(acc, x, m) + c) % m;
            }
            if acc == 0 {
                found.push(p.element(x).expect("x < p"));
            }
        }
        Ok(found)
    }

    /// The number of distinct roots in [0, p).
    pub fn count_roots(&self, p: Prime) -> Result<u64> {
        Ok(self.roots(p)?.len() as u64)
    }

    /// The unique root -a0/a1 of a non-trivial linear polynomial [a0, a1].
    pub fn root_of_linear(&self, p: Prime) -> Result<FieldElement> {
        if self.coeffs.len() != 2 {
            return Err(Error::Domain(
                "root_of_linear requires a polynomial of length exactly 2",
            ));
        }
        if !self.is_nontrivial(p) {
            return Err(Error::Domain(
                "root_of_linear requires a leading coefficient nonzero mod p",
            ));
        }
        let a0 = p.reduce(reduce_coeff(&self.coeffs[0], p.value()));
        let a1 = p.reduce(reduce_coeff(&self.coeffs[1], p.value()));
        Ok(a0.div(a1)?.neg())
    }

    /// Synthetic division by the monic linear factor (x + a), exactly over
    /// the integers: self = (x + a) * quotient + remainder, with the
    /// quotient one shorter than self.
    pub fn divide_by_x_plus_a(&self, a: &BigInt) -> Result<(IntPolynomial, BigInt)> {
        let n = match self.coeffs.len() {
            0 => {
                return Err(Error::Domain(
                    "cannot divide an empty polynomial",
                ))
            }
            len => len - 1,
        };
        if n == 0 {
            return Ok((IntPolynomial::zero(), self.coeffs[0].clone()));
        }
        let mut quotient = vec![BigInt::zero(); n];
        quotient[n - 1] = self.coeffs[n].clone();
        for i in (1..n).rev() {
            quotient[i - 1] = &self.coeffs[i] - a * &quotient[i];
        }
        let remainder = &self.coeffs[0] - a * &quotient[0];
        Ok((IntPolynomial::new(quotient), remainder))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    /// Coefficient convolution over the integers; degrees add, and anything
    /// times the zero polynomial is the zero polynomial.
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_empty() || rhs.is_empty() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.len() + rhs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.len().max(rhs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::new(out)
    }
}

/// The polynomial -1 + x^n, whose congruence mod p has exactly d roots for
/// every divisor d = n of p - 1.
pub fn fermat_poly(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Domain("fermat_poly requires n >= 1"));
    }
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[n as usize] = BigInt::one();
    Ok(IntPolynomial::new(coeffs))
}

/// The polynomial 1 + x^d + x^(2d) + ... + x^((c-1)d), the cofactor that
/// completes -1 + x^d into -1 + x^(cd).
pub fn geometric_series_poly(c: u64, d: u64) -> Result<IntPolynomial> {
    if c == 0 || d == 0 {
        return Err(Error::Domain(
            "geometric_series_poly requires c >= 1 and d >= 1",
        ));
    }
    let len = ((c - 1) * d + 1) as usize;
    let mut coeffs = vec![BigInt::zero(); len];
    for k in 0..c {
        coeffs[(k * d) as usize] = BigInt::one();
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The residue of a (possibly negative) integer coefficient in [0, p).
fn reduce_coeff(c: &BigInt, p: u64) -> u64 {
    let mut r = c % BigInt::from(p);
    if r.is_negative() {
        r += BigInt::from(p);
    }
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}
