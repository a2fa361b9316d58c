//! Arithmetic in the prime field `F_p`.
//!
//! Scalars are `u64` values kept reduced into `[0, p)`. All operations are
//! exact; there is no floating point anywhere in this crate.

use std::fmt;

/// Errors from the exact linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// The requested modulus is not a prime in `[2, 2^31 - 1]`.
    NotPrime(u64),
    /// Attempt to invert zero.
    ZeroInverse,
    /// Matrix/vector shapes do not line up.
    DimensionMismatch { expected: usize, got: usize },
    /// Quotient of subspaces requested for a pair where `U ⊆ V` fails.
    NotASubspacePair,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotPrime(p) => write!(f, "{p} is not a prime in [2, 2^31-1]"),
            LinalgError::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            LinalgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LinalgError::NotASubspacePair => {
                write!(
                    f,
                    "quotient requested for subspaces U, V with U not contained in V"
                )
            }
        }
    }
}

impl std::error::Error for LinalgError {}

/// The field `F_p` for a prime `p` with `2 <= p <= 2^31 - 1`.
///
/// `PrimeField` is a tiny copyable handle; every matrix and module carries
/// one so that mixed-field operations can be rejected early.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

const MAX_MODULUS: u64 = (1 << 31) - 1;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// Constructs `F_p`, checking primality.
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        // a, b < p <= 2^31 - 1, so the product fits in u64.
        (a * b) % self.p
    }

    /// Inverse of `a` modulo `p` via the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64, LinalgError> {
        if a % self.p == 0 {
            return Err(LinalgError::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        let t = t0.rem_euclid(self.p as i64) as u64;
        Ok(t)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}
