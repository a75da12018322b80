//! Exact scalar arithmetic over the two supported ground fields: the
//! rationals ℚ with arbitrary-precision numerators and denominators, and
//! prime fields GF(p) for primes p < 2³¹.
//!
//! Scalars are immutable values; cross-field operations are rejected with
//! a typed error by the `checked_*` methods and panic in the operator
//! impls (which are meant for code paths that have already validated
//! field uniformity, such as matrix arithmetic).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::FieldError;

/// A ground field: ℚ or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// Largest admissible prime modulus; products of residues below this
/// bound fit in 64-bit intermediates.
pub const MAX_PRIME: u64 = 1 << 31;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    /// A prime field GF(p). The modulus is verified prime by trial
    /// division and must stay below 2³¹.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_PRIME {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(inner) = s.strip_prefix("GF(").and_then(|t| t.strip_suffix(')')) {
            let p: u64 = inner
                .trim()
                .parse()
                .map_err(|_| FieldError::ParseField(s.to_string()))?;
            return Field::prime(p);
        }
        Err(FieldError::ParseField(s.to_string()))
    }
}

/// An exact field element.
///
/// Rationals are kept normalized (coprime numerator and denominator,
/// positive denominator); residues are kept in `[0, p)`. Both are
/// guaranteed by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: &Field) -> Self {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue {
                value: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(field: &Field) -> Self {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::one()),
            Field::Prime(p) => Scalar::Residue {
                value: 1,
                modulus: *p,
            },
        }
    }

    pub fn from_integer(value: i64, field: &Field) -> Self {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(value))),
            Field::Prime(p) => {
                let p = *p as i128;
                let r = ((value as i128 % p) + p) % p;
                Scalar::Residue {
                    value: r as u64,
                    modulus: p as u64,
                }
            }
        }
    }

    /// An exact rational from big numerator and denominator.
    pub fn from_rational(num: BigInt, den: BigInt) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(num, den)))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> FieldError {
        FieldError::FieldMismatch(self.field().to_string(), other.field().to_string())
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Ok(Scalar::Residue {
                value: (a + b) % modulus,
                modulus: *modulus,
            }),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        self.checked_add(&rhs.negated())
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Ok(Scalar::Residue {
                value: (a * b) % modulus,
                modulus: *modulus,
            }),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn negated(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// The multiplicative inverse; zero has none.
    pub fn inverse(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            Scalar::Rational(a) => Ok(Scalar::Rational(a.recip())),
            Scalar::Residue { value, modulus } => Ok(Scalar::Residue {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        self.checked_mul(&rhs.inverse()?)
    }

    /// Parse a scalar in the text format: optional sign, decimal digits,
    /// optionally followed by `/` and positive decimal digits. Over a
    /// prime field, numerator and denominator are reduced mod p.
    pub fn parse(text: &str, field: &Field) -> Result<Scalar, FieldError> {
        let err = |reason: &str| FieldError::ParseScalar {
            text: text.to_string(),
            field: field.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let (num_text, den_text) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (trimmed, None),
        };
        let num: BigInt = num_text
            .parse()
            .map_err(|_| err("malformed numerator"))?;
        let den: BigInt = match den_text {
            Some(d) => {
                if d.starts_with('-') || d.starts_with('+') {
                    return Err(err("denominator must be unsigned"));
                }
                d.parse().map_err(|_| err("malformed denominator"))?
            }
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        match field {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let n = big_mod(&num, *p);
                let d = big_mod(&den, *p);
                if d == 0 {
                    return Err(err("denominator is zero in this field"));
                }
                Ok(Scalar::Residue {
                    value: (n * mod_inverse(d, *p)) % p,
                    modulus: *p,
                })
            }
        }
    }
}

fn big_mod(x: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let mut r = x % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    let (_, digits) = r.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

/// Inverse of `a` modulo the prime `p`, by the extended Euclidean
/// algorithm. Requires `0 < a < p`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    debug_assert!(a > 0 && a < p);
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    (((old_s % p as i128) + p as i128) % p as i128) as u64
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn q(text: &str) -> Scalar {
        Scalar::parse(text, &Q).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(2147483647).is_ok()); // 2^31 - 1 is prime
        assert_eq!(Field::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(Field::prime(91), Err(FieldError::NotPrime(91)));
        assert_eq!(
            Field::prime(1 << 31),
            Err(FieldError::ModulusTooLarge(1 << 31))
        );
    }

    #[test]
    fn field_text_round_trip() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("GF(5)".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("GF(6)".parse::<Field>().is_err());
        assert!("C".parse::<Field>().is_err());
        for f in [Field::Rationals, Field::Prime(31)] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(q("1/2").checked_add(&q("1/3")).unwrap(), q("5/6"));
        assert_eq!(q("-2/7").checked_mul(&q("7/2")).unwrap(), q("-1"));
        assert_eq!(q("3/6"), q("1/2"));
    }

    #[test]
    fn prime_field_inverse() {
        let f5 = Field::prime(5).unwrap();
        let two = Scalar::from_integer(2, &f5);
        assert_eq!(two.inverse().unwrap(), Scalar::from_integer(3, &f5));
        assert_eq!(
            Scalar::zero(&f5).inverse(),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn parse_reduces_and_normalizes() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(Scalar::parse("7", &f5).unwrap(), Scalar::from_integer(2, &f5));
        assert_eq!(
            Scalar::parse("-1", &f5).unwrap(),
            Scalar::from_integer(4, &f5)
        );
        let half = q("-2/7");
        match &half {
            Scalar::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(-2));
                assert_eq!(r.denom(), &BigInt::from(7));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(Scalar::parse("1/0", &Q).is_err());
        assert!(Scalar::parse("", &Q).is_err());
        assert!(Scalar::parse("1.5", &Q).is_err());
        assert!(Scalar::parse("2/-3", &Q).is_err());
        assert!(Scalar::parse("x", &Field::prime(5).unwrap()).is_err());
        // 6 is zero mod 3, so 1/6 has no meaning in GF(3)
        assert!(Scalar::parse("1/6", &Field::prime(3).unwrap()).is_err());
    }

    #[test]
    fn cross_field_operations_are_rejected() {
        let f5 = Field::prime(5).unwrap();
        let a = Scalar::one(&Q);
        let b = Scalar::one(&f5);
        assert!(matches!(
            a.checked_add(&b),
            Err(FieldError::FieldMismatch(..))
        ));
        let f7 = Field::prime(7).unwrap();
        assert!(Scalar::one(&f5).checked_mul(&Scalar::one(&f7)).is_err());
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::Rationals),
            prop_oneof![Just(2u64), Just(3), Just(5), Just(31), Just(65537)]
                .prop_map(|p| Field::prime(p).unwrap()),
        ]
    }

    fn arb_scalar_in(field: Field) -> impl Strategy<Value = Scalar> {
        match field {
            Field::Rationals => (any::<i32>(), 1..10_000i32)
                .prop_map(|(n, d)| {
                    Scalar::from_rational(BigInt::from(n), BigInt::from(d)).unwrap()
                })
                .boxed(),
            Field::Prime(p) => (0..p)
                .prop_map(move |v| Scalar::from_integer(v as i64, &Field::Prime(p)))
                .boxed(),
        }
    }

    fn arb_scalar_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        arb_field().prop_flat_map(|f| {
            (
                arb_scalar_in(f),
                arb_scalar_in(f),
                arb_scalar_in(f),
            )
        })
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in arb_scalar_triple()) {
            let ab_c = &(&a + &b) + &c;
            let a_bc = &a + &(&b + &c);
            prop_assert_eq!(&ab_c, &a_bc);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inverse().unwrap()).is_one());
            }
            prop_assert!((&a + &(-&a)).is_zero());
        }

        #[test]
        fn render_parse_round_trip((a, _, _) in arb_scalar_triple()) {
            let field = a.field();
            let rendered = a.to_string();
            let reparsed = Scalar::parse(&rendered, &field).unwrap();
            prop_assert_eq!(&a, &reparsed);
            prop_assert_eq!(reparsed.to_string(), rendered);
        }

        // Arbitrary-precision stress: arithmetic on 256-bit numerators
        // stays exact.
        #[test]
        fn wide_rationals_round_trip(bytes_a in prop::array::uniform32(any::<u8>()),
                                     bytes_b in prop::array::uniform32(any::<u8>()),
                                     da in 1u64.., db in 1u64..) {
            let a = Scalar::from_rational(
                BigInt::from_signed_bytes_be(&bytes_a),
                BigInt::from(da),
            ).unwrap();
            let b = Scalar::from_rational(
                BigInt::from_signed_bytes_be(&bytes_b),
                BigInt::from(db),
            ).unwrap();
            prop_assert_eq!(&(&(&a + &b) - &b), &a);
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap().checked_mul(&b).unwrap(), &a);
            }
        }
    }
}
