use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::field::Field;
use crate::rational::{int, to_f64, Rational};

/// `a + b·ω` with `ω = e^{2πi/3}`, so `ω² = −1 − ω`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo3 {
    pub a: Rational,
    pub b: Rational,
}

impl Cyclo3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(int(n), Rational::zero())
    }

    pub fn omega() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::from_int(1),
            1 => Self::omega(),
            _ => Self::new(int(-1), int(-1)),
        }
    }

    /// Complex conjugation, `ω ↦ ω²`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// `N(x) = x·conj(x) = a² − ab + b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        let a = to_f64(&self.a);
        let b = to_f64(&self.b);
        Complex64::new(a - 0.5 * b, b * 3f64.sqrt() / 2.0)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r)
    }
}

impl From<Rational> for Cyclo3 {
    fn from(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }
}

impl fmt::Display for Cyclo3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}w", self.b)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

impl Add for &Cyclo3 {
    type Output = Cyclo3;
    fn add(self, o: &Cyclo3) -> Cyclo3 {
        Cyclo3::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &Cyclo3 {
    type Output = Cyclo3;
    fn sub(self, o: &Cyclo3) -> Cyclo3 {
        Cyclo3::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &Cyclo3 {
    type Output = Cyclo3;
    fn mul(self, o: &Cyclo3) -> Cyclo3 {
        let bd = &self.b * &o.b;
        Cyclo3::new(
            &self.a * &o.a - &bd,
            &self.a * &o.b + &self.b * &o.a - bd,
        )
    }
}

impl Neg for &Cyclo3 {
    type Output = Cyclo3;
    fn neg(self) -> Cyclo3 {
        Cyclo3::new(-&self.a, -&self.b)
    }
}

impl Zero for Cyclo3 {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Cyclo3 {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Add for Cyclo3 {
    type Output = Cyclo3;
    fn add(self, o: Cyclo3) -> Cyclo3 {
        &self + &o
    }
}

impl Mul for Cyclo3 {
    type Output = Cyclo3;
    fn mul(self, o: Cyclo3) -> Cyclo3 {
        &self * &o
    }
}

impl Field for Cyclo3 {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let inv = n.recip();
        Some(self.conj().scale(&inv))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone().into()
    }
}
