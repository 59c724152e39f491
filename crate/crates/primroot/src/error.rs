use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate. All operations are exact;
/// errors only ever signal violated preconditions, never lost precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `n` is not prime. `factor` holds its smallest divisor >= 2 when one
    /// exists (i.e. when `n` is a composite >= 4).
    NotPrime { n: u64, factor: Option<u64> },
    /// Value exceeds the 2^31 modulus bound that keeps (p-1)^2 in 64 bits.
    OutOfRange { value: u64 },
    /// Residue outside [0, p).
    BadResidue { residue: u64, modulus: u64 },
    /// Operands belong to fields with different moduli.
    ModulusMismatch { left: u64, right: u64 },
    /// Zero has no multiplicative inverse.
    DivisionByZero,
    /// The operation requires a nonzero field element.
    ZeroElement,
    /// `divisor` does not divide `of` (u128 so prime powers can be reported
    /// even when they overflow the modulus bound).
    NotDivisor { divisor: u128, of: u64 },
    /// The two multiplicative orders share a factor, so the product-order
    /// composition theorem does not apply.
    NotCoprime { left: u64, right: u64 },
    /// The witness scan exhausted [1, p-1]. The counting argument guarantees
    /// a witness whenever q^n | p-1, so this signals an arithmetic bug.
    WitnessNotFound { q: u64, n: u64, p: u64 },
    /// Argument outside an operation's domain.
    Domain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime { n, factor: Some(d) } => {
                write!(f, "{} is not prime (smallest factor {})", n, d)
            }
            Error::NotPrime { n, factor: None } => write!(f, "{} is not prime", n),
            Error::OutOfRange { value } => {
                write!(f, "{} exceeds the 2^31 modulus bound", value)
            }
            Error::BadResidue { residue, modulus } => {
                write!(f, "residue {} is not in [0, {})", residue, modulus)
            }
            Error::ModulusMismatch { left, right } => {
                write!(f, "mismatched moduli: {} vs {}", left, right)
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroElement => write!(f, "operation requires a nonzero field element"),
            Error::NotDivisor { divisor, of } => {
                write!(f, "{} does not divide {}", divisor, of)
            }
            Error::NotCoprime { left, right } => {
                write!(f, "orders {} and {} are not coprime", left, right)
            }
            Error::WitnessNotFound { q, n, p } => {
                write!(
                    f,
                    "no element of order {}^{} found in [1, {}); this is a bug",
                    q, n, p
                )
            }
            Error::Domain(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for Error {}
