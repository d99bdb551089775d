//! Exact scalar fields.
//!
//! Four kinds of base field are supported, all of characteristic different
//! from two:
//!
//! * `q`: the rationals,
//! * `gf:p`: the prime field of odd order `p`,
//! * `gf:p^2`: `GF(p)[t]/(t² − d)` with `d` the smallest positive quadratic
//!   nonresidue mod `p`,
//! * `q(sqrt(d))`: `Q[t]/(t² − d)` for a non-square integer `d`; `q(i)` is the
//!   Gaussian field `d = −1`.
//!
//! The quadratic fields carry a conjugation `t ↦ −t`, which for `gf:p^2`
//! is the Frobenius `s ↦ s^p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;

use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime { p: u64 },
    PrimeSquare { p: u64, d: u64 },
    RationalQuadratic { d: i64 },
}

/// The involution a field carries when it acts on scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldInvolution {
    #[default]
    Identity,
    /// `t ↦ −t`; the Frobenius on `GF(p²)`.
    Conjugation,
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut q = 3u64;
    while q.saturating_mul(q) <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

fn is_residue(a: u64, p: u64) -> bool {
    a.is_multiple_of(p) || pow_mod(a, (p - 1) / 2, p) == 1
}

fn smallest_nonresidue(p: u64) -> u64 {
    (2..p).find(|&a| !is_residue(a, p)).expect("odd primes have nonresidues")
}

/// Square root of a residue mod an odd prime (Tonelli–Shanks).
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if !is_residue(a, p) {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = smallest_nonresidue(p);
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// `c^((p−1)/4)` for the smallest nonresidue `c`, when `p ≡ 1 (mod 4)`.
fn prime_sqrt_minus_one(p: u64) -> Option<u64> {
    (p % 4 == 1).then(|| pow_mod(smallest_nonresidue(p), (p - 1) / 4, p))
}

fn is_perfect_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let r = (n as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).any(|s| s >= 0 && s.checked_mul(s) == Some(n))
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_odd_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime")));
        }
        Ok(Field::Prime { p })
    }

    pub fn prime_square(p: u64) -> Result<Field> {
        if !is_odd_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime")));
        }
        Ok(Field::PrimeSquare { p, d: smallest_nonresidue(p) })
    }

    pub fn rational_quadratic(d: i64) -> Result<Field> {
        if d == 0 || is_perfect_square(d) {
            return Err(Error::InvalidField(format!("{d} is a square in Q")));
        }
        Ok(Field::RationalQuadratic { d })
    }

    /// `Q(i)`.
    pub fn gaussian() -> Field {
        Field::RationalQuadratic { d: -1 }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Prime { p } | Field::PrimeSquare { p, .. } => p,
            _ => 0,
        }
    }

    /// Whether the field is a quadratic extension with a nontrivial conjugation.
    pub fn is_quadratic(&self) -> bool {
        matches!(self, Field::PrimeSquare { .. } | Field::RationalQuadratic { .. })
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        let repr = match *self {
            Field::Rational => Repr::Rational(Rat::from_bigint(n)),
            Field::Prime { p } => Repr::Residue(reduce_bigint(n, p)),
            Field::PrimeSquare { p, .. } => Repr::Pair(reduce_bigint(n, p), 0),
            Field::RationalQuadratic { .. } => {
                Repr::RationalPair(Rat::from_bigint(n), Rat::from_i64(0))
            }
        };
        Scalar { field: *self, repr }
    }

    /// The quadratic generator `t` with `t² = d`, when the field has one.
    pub fn generator(&self) -> Option<Scalar> {
        let repr = match *self {
            Field::PrimeSquare { .. } => Repr::Pair(0, 1),
            Field::RationalQuadratic { .. } => Repr::RationalPair(Rat::from_i64(0), Rat::from_i64(1)),
            _ => return None,
        };
        Some(Scalar { field: *self, repr })
    }

    /// A deterministic square root of −1, when one exists.
    pub fn sqrt_minus_one(&self) -> Option<Scalar> {
        match *self {
            Field::Rational => None,
            Field::Prime { p } => prime_sqrt_minus_one(p).map(|r| Scalar {
                field: *self,
                repr: Repr::Residue(r),
            }),
            Field::PrimeSquare { p, d } => {
                if let Some(r) = prime_sqrt_minus_one(p) {
                    return Some(Scalar { field: *self, repr: Repr::Pair(r, 0) });
                }
                // −1 = (s·t)² = s²·d, so s² = −1/d.
                let target = mul_mod(p - 1, inv_mod(d, p)?, p);
                let s = sqrt_mod(target, p)?;
                Some(Scalar { field: *self, repr: Repr::Pair(0, s) })
            }
            Field::RationalQuadratic { d } => {
                if d == -1 {
                    self.generator()
                } else {
                    None
                }
            }
        }
    }

    pub fn random_scalar<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        let repr = match *self {
            Field::Rational => Repr::Rational(small_rational(rng)),
            Field::Prime { p } => Repr::Residue(rng.gen_range(0..p)),
            Field::PrimeSquare { p, .. } => Repr::Pair(rng.gen_range(0..p), rng.gen_range(0..p)),
            Field::RationalQuadratic { .. } => Repr::RationalPair(small_rational(rng), small_rational(rng)),
        };
        Scalar { field: *self, repr }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random_scalar(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Every element of a finite field, in a fixed order; `None` for infinite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            Field::Prime { p } => Some(
                (0..p)
                    .map(|a| Scalar { field: *self, repr: Repr::Residue(a) })
                    .collect(),
            ),
            Field::PrimeSquare { p, .. } => Some(
                (0..p)
                    .flat_map(|a| (0..p).map(move |b| (a, b)))
                    .map(|(a, b)| Scalar { field: *self, repr: Repr::Pair(a, b) })
                    .collect(),
            ),
            _ => None,
        }
    }
}

fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    let num: i64 = rng.gen_range(-4..=4);
    let den: i64 = rng.gen_range(1..=3);
    Rat::new(num, den)
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Field::Rational => write!(f, "q"),
            Field::Prime { p } => write!(f, "gf:{p}"),
            Field::PrimeSquare { p, .. } => write!(f, "gf:{p}^2"),
            Field::RationalQuadratic { d: -1 } => write!(f, "q(i)"),
            Field::RationalQuadratic { d } => write!(f, "q(sqrt({d}))"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        let bad = || Error::InvalidField(format!("unrecognized field descriptor `{s}`"));
        match s {
            "q" | "Q" => return Ok(Field::Rational),
            "q(i)" | "Q(i)" => return Ok(Field::gaussian()),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("gf:") {
            return match rest.strip_suffix("^2") {
                Some(p) => Field::prime_square(p.parse().map_err(|_| bad())?),
                None => Field::prime(rest.parse().map_err(|_| bad())?),
            };
        }
        if let Some(inner) = s.strip_prefix("q(sqrt(").and_then(|r| r.strip_suffix("))")) {
            return Field::rational_quadratic(inner.trim().parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(Rat),
    Residue(u64),
    /// `a + b·t` in `GF(p²)`.
    Pair(u64, u64),
    /// `a + b·t` in `Q(√d)`.
    RationalPair(Rat, Rat),
}

/// An element of one of the supported fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

impl Scalar {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(a) => a.is_zero(),
            Repr::Residue(a) => *a == 0,
            Repr::Pair(a, b) => *a == 0 && *b == 0,
            Repr::RationalPair(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// True when the scalar lies in the prime subfield (zero `t`-component).
    pub fn in_base_subfield(&self) -> bool {
        match &self.repr {
            Repr::Pair(_, b) => *b == 0,
            Repr::RationalPair(_, b) => b.is_zero(),
            _ => true,
        }
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(self.field, other.field, "scalar field mismatch");
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other);
        let repr = match (&self.repr, &other.repr, self.field) {
            (Repr::Rational(a), Repr::Rational(b), _) => Repr::Rational(a.add(b)),
            (Repr::Residue(a), Repr::Residue(b), Field::Prime { p }) => Repr::Residue((a + b) % p),
            (Repr::Pair(a, b), Repr::Pair(c, d), Field::PrimeSquare { p, .. }) => {
                Repr::Pair((a + c) % p, (b + d) % p)
            }
            (Repr::RationalPair(a, b), Repr::RationalPair(c, d), _) => Repr::RationalPair(a.add(c), b.add(d)),
            _ => unreachable!("representation matches field"),
        };
        Scalar { field: self.field, repr }
    }

    pub fn neg(&self) -> Scalar {
        let repr = match (&self.repr, self.field) {
            (Repr::Rational(a), _) => Repr::Rational(a.neg()),
            (Repr::Residue(a), Field::Prime { p }) => Repr::Residue((p - a) % p),
            (Repr::Pair(a, b), Field::PrimeSquare { p, .. }) => Repr::Pair((p - a) % p, (p - b) % p),
            (Repr::RationalPair(a, b), _) => Repr::RationalPair(a.neg(), b.neg()),
            _ => unreachable!("representation matches field"),
        };
        Scalar { field: self.field, repr }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other);
        let repr = match (&self.repr, &other.repr, self.field) {
            (Repr::Rational(a), Repr::Rational(b), _) => Repr::Rational(a.mul(b)),
            (Repr::Residue(a), Repr::Residue(b), Field::Prime { p }) => Repr::Residue(mul_mod(*a, *b, p)),
            (Repr::Pair(a, b), Repr::Pair(c, e), Field::PrimeSquare { p, d }) => {
                let re = (mul_mod(*a, *c, p) + mul_mod(mul_mod(*b, *e, p), d, p)) % p;
                let im = (mul_mod(*a, *e, p) + mul_mod(*b, *c, p)) % p;
                Repr::Pair(re, im)
            }
            (Repr::RationalPair(a, b), Repr::RationalPair(c, e), Field::RationalQuadratic { d }) => {
                let d = Rat::from_i64(d);
                Repr::RationalPair(a.mul(c).add(&b.mul(e).mul(&d)), a.mul(e).add(&b.mul(c)))
            }
            _ => unreachable!("representation matches field"),
        };
        Scalar { field: self.field, repr }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let repr = match (&self.repr, self.field) {
            (Repr::Rational(a), _) => Repr::Rational(a.recip()),
            (Repr::Residue(a), Field::Prime { p }) => Repr::Residue(inv_mod(*a, p)?),
            (Repr::Pair(a, b), Field::PrimeSquare { p, d }) => {
                // (a + bt)⁻¹ = (a − bt) / (a² − d b²)
                let norm = (mul_mod(*a, *a, p) + p - mul_mod(mul_mod(*b, *b, p), d, p)) % p;
                let ninv = inv_mod(norm, p)?;
                Repr::Pair(mul_mod(*a, ninv, p), mul_mod((p - b) % p, ninv, p))
            }
            (Repr::RationalPair(a, b), Field::RationalQuadratic { d }) => {
                let d = Rat::from_i64(d);
                let norm = a.mul(a).sub(&b.mul(b).mul(&d));
                Repr::RationalPair(a.div(&norm), b.div(&norm).neg())
            }
            _ => unreachable!("representation matches field"),
        };
        Some(Scalar { field: self.field, repr })
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// The field conjugation `a + bt ↦ a − bt`; the identity on prime fields and `Q`.
    pub fn conjugate(&self) -> Scalar {
        match &self.repr {
            Repr::Pair(..) | Repr::RationalPair(..) => {
                let t = self.field.generator().expect("quadratic field");
                let (a, b) = self.components();
                a.sub(&b.mul(&t))
            }
            _ => self.clone(),
        }
    }

    pub fn apply(&self, inv: FieldInvolution) -> Scalar {
        match inv {
            FieldInvolution::Identity => self.clone(),
            FieldInvolution::Conjugation => self.conjugate(),
        }
    }

    /// `(a, b)` with `self = a + b·t`, both embedded back into the field.
    pub fn components(&self) -> (Scalar, Scalar) {
        let f = self.field;
        match &self.repr {
            Repr::Pair(a, b) => (
                Scalar { field: f, repr: Repr::Pair(*a, 0) },
                Scalar { field: f, repr: Repr::Pair(*b, 0) },
            ),
            Repr::RationalPair(a, b) => (
                Scalar { field: f, repr: Repr::RationalPair(a.clone(), Rat::from_i64(0)) },
                Scalar { field: f, repr: Repr::RationalPair(b.clone(), Rat::from_i64(0)) },
            ),
            _ => (self.clone(), f.zero()),
        }
    }

    /// Sign and magnitude text used by the polynomial printer. Compound
    /// quadratic values are parenthesized and never report a sign.
    pub(crate) fn signed_text(&self) -> (bool, String, bool) {
        match &self.repr {
            Repr::Rational(a) => (a.is_negative(), a.abs().to_string(), false),
            Repr::Residue(a) => (false, a.to_string(), false),
            Repr::Pair(a, 0) => (false, a.to_string(), false),
            Repr::RationalPair(a, b) if b.is_zero() => (a.is_negative(), a.abs().to_string(), false),
            _ => (false, self.to_string(), true),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(a) => write!(f, "{a}"),
            Repr::Residue(a) => write!(f, "{a}"),
            Repr::Pair(a, b) => match (*a, *b) {
                (a, 0) => write!(f, "{a}"),
                (0, 1) => write!(f, "t"),
                (0, b) => write!(f, "{b}*t"),
                (a, 1) => write!(f, "{a}+t"),
                (a, b) => write!(f, "{a}+{b}*t"),
            },
            Repr::RationalPair(a, b) => {
                if b.is_zero() {
                    return write!(f, "{a}");
                }
                let bt = if b.is_one() {
                    "t".to_string()
                } else if b.is_minus_one() {
                    "-t".to_string()
                } else {
                    format!("{b}*t")
                };
                if a.is_zero() {
                    write!(f, "{bt}")
                } else if bt.starts_with('-') {
                    write!(f, "{a}{bt}")
                } else {
                    write!(f, "{a}+{bt}")
                }
            }
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}
