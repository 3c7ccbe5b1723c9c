//! Exact coefficient arithmetic over the integers, the rationals, and the
//! field of two elements.
//!
//! Values are kept canonical at all times (reduced fractions, mod-2 residues
//! in `{0, 1}`), so structural equality is equality in the ring. Integer
//! arithmetic is arbitrary precision and never wraps.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// The three coefficient rings the engine computes in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Integers,
    Rationals,
    FieldOfTwo,
}

impl CoeffRing {
    pub fn zero(self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Coefficient {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(self, n: BigInt) -> Coefficient {
        match self {
            CoeffRing::Integers => Coefficient::Int(n),
            CoeffRing::Rationals => Coefficient::Rat(BigRational::from_integer(n)),
            CoeffRing::FieldOfTwo => Coefficient::Mod2(n.mod_floor(&BigInt::from(2)).is_one()),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "Z"),
            CoeffRing::Rationals => write!(f, "Q"),
            CoeffRing::FieldOfTwo => write!(f, "F2"),
        }
    }
}

/// An exact scalar in one of the [`CoeffRing`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Int(BigInt),
    Rat(BigRational),
    Mod2(bool),
}

impl Coefficient {
    pub fn ring(&self) -> CoeffRing {
        match self {
            Coefficient::Int(_) => CoeffRing::Integers,
            Coefficient::Rat(_) => CoeffRing::Rationals,
            Coefficient::Mod2(_) => CoeffRing::FieldOfTwo,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Int(n) => n.is_zero(),
            Coefficient::Rat(q) => q.is_zero(),
            Coefficient::Mod2(b) => !b,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Int(n) => n.is_one(),
            Coefficient::Rat(q) => q.is_one(),
            Coefficient::Mod2(b) => *b,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Int(n) => n.is_negative(),
            Coefficient::Rat(q) => q.is_negative(),
            Coefficient::Mod2(_) => false,
        }
    }

    /// Exact sum. Fails when the operands belong to different rings.
    pub fn add(&self, other: &Coefficient) -> Result<Coefficient, Error> {
        match (self, other) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Ok(Coefficient::Int(a + b)),
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Ok(Coefficient::Rat(a + b)),
            (Coefficient::Mod2(a), Coefficient::Mod2(b)) => Ok(Coefficient::Mod2(a ^ b)),
            _ => Err(Error::CoeffRingMismatch {
                left: self.ring(),
                right: other.ring(),
            }),
        }
    }

    /// Exact product. Fails when the operands belong to different rings.
    pub fn mul(&self, other: &Coefficient) -> Result<Coefficient, Error> {
        match (self, other) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Ok(Coefficient::Int(a * b)),
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Ok(Coefficient::Rat(a * b)),
            (Coefficient::Mod2(a), Coefficient::Mod2(b)) => Ok(Coefficient::Mod2(*a && *b)),
            _ => Err(Error::CoeffRingMismatch {
                left: self.ring(),
                right: other.ring(),
            }),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Int(n) => Coefficient::Int(-n),
            Coefficient::Rat(q) => Coefficient::Rat(-q),
            Coefficient::Mod2(b) => Coefficient::Mod2(*b),
        }
    }

    pub fn abs(&self) -> Coefficient {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// The action of an ordinary integer on this scalar.
    pub fn times_i64(&self, n: i64) -> Coefficient {
        self.mul(&self.ring().from_i64(n))
            .expect("scalar was built in the same ring")
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Int(n) => write!(f, "{n}"),
            Coefficient::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coefficient::Mod2(b) => write!(f, "{}", u8::from(*b)),
        }
    }
}
