//! Rationals that stay on machine words until an operation overflows.
//!
//! The representation is canonical: a value is `Small` whenever its reduced
//! numerator and denominator both fit in `i64`, so derived equality and
//! hashing agree with numeric equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Rat {
    Small(Rational64),
    Big(BigRational),
}

fn to_big(r: &Rational64) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl Rat {
    pub fn from_i64(n: i64) -> Rat {
        Rat::Small(Rational64::from_integer(n))
    }

    pub fn from_bigint(n: &BigInt) -> Rat {
        Rat::from_big(BigRational::from_integer(n.clone()))
    }

    pub fn new(num: i64, den: i64) -> Rat {
        Rat::Small(Rational64::new(num, den))
    }

    fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(Rational64::new_raw(n, d)),
            _ => Rat::Big(r),
        }
    }

    fn big(&self) -> BigRational {
        match self {
            Rat::Small(r) => to_big(r),
            Rat::Big(r) => r.clone(),
        }
    }

    fn combine(
        &self,
        other: &Rat,
        small: impl Fn(&Rational64, &Rational64) -> Option<Rational64>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, other) {
            if let Some(c) = small(a, b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(big(self.big(), other.big()))
    }

    pub fn add(&self, other: &Rat) -> Rat {
        self.combine(other, |a, b| a.checked_add(b), |a, b| a + b)
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.combine(other, |a, b| a.checked_sub(b), |a, b| a - b)
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        self.combine(other, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(-r),
            _ => Rat::from_big(-self.big()),
        }
    }

    /// Panics on zero, like `Ratio::recip`.
    pub fn recip(&self) -> Rat {
        match self {
            Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(r.recip()),
            _ => Rat::from_big(self.big().recip()),
        }
    }

    pub fn div(&self, other: &Rat) -> Rat {
        self.mul(&other.recip())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_one(),
            Rat::Big(_) => false,
        }
    }

    pub fn is_minus_one(&self) -> bool {
        matches!(self, Rat::Small(r) if *r.numer() == -1 && *r.denom() == 1)
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_negative(),
            Rat::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rat::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rat::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}
