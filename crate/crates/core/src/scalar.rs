//! Exact rational scalars.
//!
//! Values that fit in a pair of `i64` are kept inline and only promoted to
//! arbitrary precision when an operation overflows. Every value is stored in
//! lowest terms with a positive denominator, and a value that fits the small
//! representation is never stored big, so structural equality is numeric
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small(i64, i64),
    Big(BigRational),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Small(0, 1);
    pub const ONE: Scalar = Scalar::Small(1, 1);

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Small(n, 1)
    }

    /// `num / den`; panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::from_ratio(BigRational::new(num, den)))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::ZERO;
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar::Small(n, d),
            _ => Scalar::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_ratio(r: BigRational) -> Self {
        // BigRational keeps lowest terms with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar::Small(n, d),
            _ => Scalar::Big(r),
        }
    }

    fn to_ratio(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Scalar::Small(n, _) => BigInt::from(*n),
            Scalar::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Scalar::Small(_, d) => BigInt::from(*d),
            Scalar::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Scalar::Small(_, 1))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Small(0, _) => None,
            Scalar::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Scalar::Big(r) => Some(Self::from_ratio(r.recip())),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Small(n, _) => n.signum() as i32,
            Scalar::Big(r) => {
                if r.is_negative() {
                    -1
                } else if r.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Scalar::Small(0, _), _) => rhs.clone(),
            (_, Scalar::Small(0, _)) => self.clone(),
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_ratio(self.to_ratio() + rhs.to_ratio()),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Scalar::Small(0, _), _) | (_, Scalar::Small(0, _)) => Self::ZERO,
            (Scalar::Small(1, 1), _) => rhs.clone(),
            (_, Scalar::Small(1, 1)) => self.clone(),
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_ratio(self.to_ratio() * rhs.to_ratio()),
        }
    }

    fn neg_ref(&self) -> Self {
        match self {
            Scalar::Small(n, d) => match n.checked_neg() {
                Some(n) => Scalar::Small(n, *d),
                None => Self::from_ratio(-self.to_ratio()),
            },
            Scalar::Big(r) => Self::from_ratio(-r.clone()),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{n}"),
            Scalar::Small(n, d) => write!(f, "{n}/{d}"),
            Scalar::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Accepts `p` or `p/q` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let malformed = || ScalarParseError::Malformed(s.to_string());
        let parse_int = |x: &str| -> Result<BigInt, ScalarParseError> {
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            x.parse::<BigInt>().map_err(|_| malformed())
        };
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => {
                if d.starts_with(['-', '+']) {
                    return Err(malformed());
                }
                (parse_int(n)?, parse_int(d)?)
            }
            None => (parse_int(t)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(s.to_string()));
        }
        Ok(Self::from_ratio(BigRational::new(num, den)))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_ratio().cmp(&other.to_ratio()),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_ref(b));
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_ref(b));
forward_binop!(Div, div, |a: &Scalar, b: &Scalar| a
    .mul_ref(&b.inv().expect("division by zero")));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::ONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d)
    }

    #[test]
    fn normalizes() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, -7), Scalar::ZERO);
        assert_eq!(q(0, 5).to_string(), "0");
    }

    #[test]
    fn dot_product_example() {
        let t = [q(1, 2), q(1, 3)];
        let dot: Scalar = t.iter().map(|x| x * x).sum();
        assert_eq!(dot, q(13, 36));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/6".parse::<Scalar>().unwrap(), q(1, 2));
        assert_eq!("-7".parse::<Scalar>().unwrap(), q(-7, 1));
        assert_eq!(q(-5, 3).to_string(), "-5/3");
        assert!(matches!(
            "1/0".parse::<Scalar>(),
            Err(ScalarParseError::ZeroDenominator(_))
        ));
        assert!("1/-2".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn promotes_on_overflow_and_demotes_back() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Small(..)));
        let min = Scalar::from_int(i64::MIN);
        assert_eq!(-(-min.clone()), min);
        let text = sq.to_string();
        assert_eq!(text.parse::<Scalar>().unwrap(), sq);
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Scalar::new(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, Scalar::ZERO);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.inv().unwrap(), Scalar::ONE);
            }
        }

        #[test]
        fn display_round_trips(a in small_rational()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
