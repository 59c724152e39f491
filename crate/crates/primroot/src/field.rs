//! Exact arithmetic in Z/pZ: primality by trial division, gcd, and the
//! field operations every other module builds on.

use crate::error::{Error, Result};

/// Moduli stay below 2^31 so the product of two residues fits in 64 bits
/// exactly; we widen to u128 anyway.
pub const MODULUS_BOUND: u64 = 1 << 31;

/// (a * b) mod p, widened so the intermediate product is exact.
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

/// base^exp mod p by square-and-multiply; 0^0 = 1.
pub(crate) fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut base = base % p;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Euclidean gcd with the convention gcd(0, n) = n.
pub(crate) fn gcd_u64(mut m: u64, mut n: u64) -> u64 {
    while n != 0 {
        let t = n;
        n = m % n;
        m = t;
    }
    m
}

/// A validated prime modulus in [2, 2^31).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    /// Validates `n` by trial division. Composites report their smallest
    /// factor so callers can print a useful diagnostic.
    pub fn new(n: u64) -> Result<Prime> {
        if n >= MODULUS_BOUND {
            return Err(Error::OutOfRange { value: n });
        }
        if n < 2 {
            return Err(Error::NotPrime { n, factor: None });
        }
        let d = least_divisor(2, n)?;
        if d != n {
            return Err(Error::NotPrime { n, factor: Some(d) });
        }
        Ok(Prime(n))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// The element with exactly this residue; rejects residues >= p.
    pub fn element(self, residue: u64) -> Result<FieldElement> {
        if residue >= self.0 {
            return Err(Error::BadResidue {
                residue,
                modulus: self.0,
            });
        }
        Ok(FieldElement {
            residue,
            modulus: self,
        })
    }

    /// The element congruent to `n`, reducing mod p.
    pub fn reduce(self, n: u64) -> FieldElement {
        FieldElement {
            residue: n % self.0,
            modulus: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        FieldElement {
            residue: 0,
            modulus: self,
        }
    }

    pub fn one(self) -> FieldElement {
        FieldElement {
            residue: 1,
            modulus: self,
        }
    }
}

/// A residue in [0, p) together with its prime modulus. Carrying the modulus
/// lets mixed-field operations fail loudly instead of computing nonsense.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    residue: u64,
    modulus: Prime,
}

impl FieldElement {
    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn check_same_field(self, other: FieldElement) -> Result<u64> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.value(),
                right: other.modulus.value(),
            });
        }
        Ok(self.modulus.value())
    }

    pub fn add(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.check_same_field(other)?;
        Ok(FieldElement {
            residue: (self.residue + other.residue) % p,
            modulus: self.modulus,
        })
    }

    pub fn neg(self) -> FieldElement {
        let p = self.modulus.value();
        FieldElement {
            residue: (p - self.residue) % p,
            modulus: self.modulus,
        }
    }

    pub fn mul(self, other: FieldElement) -> Result<FieldElement> {
        let p = self.check_same_field(other)?;
        Ok(FieldElement {
            residue: mul_mod(self.residue, other.residue, p),
            modulus: self.modulus,
        })
    }

    /// self^exp by square-and-multiply. Exponent 0 gives 1 for every base,
    /// including 0.
    pub fn pow(self, exp: u64) -> FieldElement {
        FieldElement {
            residue: pow_mod(self.residue, exp, self.modulus.value()),
            modulus: self.modulus,
        }
    }

    /// The multiplicative inverse, computed as self^(p-2) via Fermat's
    /// little theorem. Zero is rejected.
    pub fn inv(self) -> Result<FieldElement> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.modulus.value() - 2))
    }

    pub fn div(self, other: FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        self.mul(other.inv()?)
    }
}

/// True iff `n` is prime, decided by trial division.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && least_divisor(2, n) == Ok(n)
}

/// The smallest divisor d of `k` with start <= d <= k. For start = 2 the
/// result is always prime (any smaller factor of a composite divisor would
/// divide `k` too).
pub fn least_divisor(start: u64, k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::Domain("least_divisor requires k >= 2"));
    }
    if start < 2 || start > k {
        return Err(Error::Domain("least_divisor requires 2 <= start <= k"));
    }
    let mut d = start;
    loop {
        if k % d == 0 {
            return Ok(d);
        }
        // The sqrt cutoff is only sound when the scan covered every
        // candidate cofactor, i.e. when it started at 2.
        if start == 2 && d > k / d {
            return Ok(k);
        }
        d += 1;
    }
}

/// Euclidean gcd; rejects (0, 0), where no greatest common divisor exists.
pub fn gcd(m: u64, n: u64) -> Result<u64> {
    if m == 0 && n == 0 {
        return Err(Error::Domain("gcd(0, 0) is undefined"));
    }
    Ok(gcd_u64(m, n))
}

/// True iff gcd(m, n) = 1.
pub fn coprime(m: u64, n: u64) -> bool {
    gcd_u64(m, n) == 1
}

/// True iff d | n; the divisor must be positive.
pub fn divides(d: u64, n: u64) -> Result<bool> {
    if d == 0 {
        return Err(Error::Domain("divides requires a positive divisor"));
    }
    Ok(n % d == 0)
}
