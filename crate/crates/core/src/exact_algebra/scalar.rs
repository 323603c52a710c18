//! Exact elements of the real quadratic field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `a + b·√5` with `a`, `b` arbitrary-precision rationals.
///
/// Crystallographic root systems only ever produce `b = 0`; the surd part
/// carries the golden ratio needed by the icosahedral types.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt5 {
    rational: BigRational,
    surd: BigRational,
}

impl QSqrt5 {
    pub fn new(rational: BigRational, surd: BigRational) -> Self {
        QSqrt5 { rational, surd }
    }

    pub fn from_integer(n: i64) -> Self {
        QSqrt5::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        QSqrt5::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        QSqrt5::new(r, BigRational::zero())
    }

    pub fn sqrt5() -> Self {
        QSqrt5::new(BigRational::zero(), BigRational::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn golden_ratio() -> Self {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        QSqrt5::new(half.clone(), half)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.rational.clone())
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.rational.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.rational.to_integer())
    }

    /// Galois conjugate `a − b·√5`.
    pub fn conjugate(&self) -> Self {
        QSqrt5::new(self.rational.clone(), -self.surd.clone())
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> BigRational {
        let five = BigRational::from_integer(BigInt::from(5));
        &self.rational * &self.rational - five * &self.surd * &self.surd
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QSqrt5::new(c.rational / &n, c.surd / n))
    }

    /// Sign in the real embedding where √5 > 0.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.rational);
        let sb = sign_of(&self.surd);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // Opposite signs: compare a² with 5b².
        let a2 = &self.rational * &self.rational;
        let b2 = BigRational::from_integer(BigInt::from(5)) * &self.surd * &self.surd;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Nearest `f64` value; only for display and never for decisions.
    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.surd.to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }

    /// `[a_num, a_den, b_num, b_den]` as decimal strings.
    pub fn to_parts(&self) -> [String; 4] {
        [
            self.rational.numer().to_string(),
            self.rational.denom().to_string(),
            self.surd.numer().to_string(),
            self.surd.denom().to_string(),
        ]
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            if self.surd.is_positive() {
                write!(f, "+")?;
            }
        }
        write!(f, "{}*r5", self.surd)
    }
}

impl fmt::Debug for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for QSqrt5 {
    fn from(n: i64) -> Self {
        QSqrt5::from_integer(n)
    }
}

impl From<BigRational> for QSqrt5 {
    fn from(r: BigRational) -> Self {
        QSqrt5::from_rational(r)
    }
}

impl Zero for QSqrt5 {
    fn zero() -> Self {
        QSqrt5::default()
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        QSqrt5::from_integer(1)
    }
}

impl<'a> Add<&'a QSqrt5> for &'a QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: &QSqrt5) -> QSqrt5 {
        QSqrt5::new(&self.rational + &rhs.rational, &self.surd + &rhs.surd)
    }
}

impl<'a> Sub<&'a QSqrt5> for &'a QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: &QSqrt5) -> QSqrt5 {
        QSqrt5::new(&self.rational - &rhs.rational, &self.surd - &rhs.surd)
    }
}

impl<'a> Mul<&'a QSqrt5> for &'a QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: &QSqrt5) -> QSqrt5 {
        if self.surd.is_zero() && rhs.surd.is_zero() {
            return QSqrt5::from_rational(&self.rational * &rhs.rational);
        }
        let five = BigRational::from_integer(BigInt::from(5));
        QSqrt5::new(
            &self.rational * &rhs.rational + five * &self.surd * &rhs.surd,
            &self.rational * &rhs.surd + &self.surd * &rhs.rational,
        )
    }
}

impl<'a> Div<&'a QSqrt5> for &'a QSqrt5 {
    type Output = QSqrt5;
    fn div(self, rhs: &QSqrt5) -> QSqrt5 {
        if self.surd.is_zero() && rhs.surd.is_zero() {
            return QSqrt5::from_rational(&self.rational / &rhs.rational);
        }
        let inv = rhs.inverse().expect("division by zero in Q(sqrt5)");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<QSqrt5> for QSqrt5 {
            type Output = QSqrt5;
            fn $method(self, rhs: QSqrt5) -> QSqrt5 { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a QSqrt5> for QSqrt5 {
            type Output = QSqrt5;
            fn $method(self, rhs: &QSqrt5) -> QSqrt5 { (&self).$method(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5::new(-self.rational, -self.surd)
    }
}

impl Neg for &QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        -self.clone()
    }
}

impl AddAssign<&QSqrt5> for QSqrt5 {
    fn add_assign(&mut self, rhs: &QSqrt5) {
        self.rational += &rhs.rational;
        self.surd += &rhs.surd;
    }
}

impl SubAssign<&QSqrt5> for QSqrt5 {
    fn sub_assign(&mut self, rhs: &QSqrt5) {
        self.rational -= &rhs.rational;
        self.surd -= &rhs.surd;
    }
}

impl MulAssign<&QSqrt5> for QSqrt5 {
    fn mul_assign(&mut self, rhs: &QSqrt5) {
        *self = &*self * rhs;
    }
}

impl Sum for QSqrt5 {
    fn sum<I: Iterator<Item = QSqrt5>>(iter: I) -> Self {
        iter.fold(QSqrt5::zero(), |acc, x| acc + x)
    }
}

impl Product for QSqrt5 {
    fn product<I: Iterator<Item = QSqrt5>>(iter: I) -> Self {
        iter.fold(QSqrt5::one(), |acc, x| acc * x)
    }
}
