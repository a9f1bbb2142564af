//! Helpers around `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Least integer `>= x`.
pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn to_f64(x: &Rational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // fall back on scaled division for huge operands
            let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
            let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

pub fn to_i64(x: &Rational) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Least common multiple of the denominators (1 for an empty slice).
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Closest rational to `x` with denominator at most `max_den`, via continued fractions.
pub fn approximate(x: f64, max_den: i64) -> Rational {
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let a = a as i64;
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        if q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let r = v - a as f64;
        if r < 1e-12 {
            break;
        }
        v = 1.0 / r;
    }
    if q1 == 0 {
        return Rational::zero();
    }
    rat(sign * p1, q1)
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

/// Binomial coefficient as a rational.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * rat(n - i, i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approximate_recovers_small_fractions() {
        assert_eq!(approximate(2.0 / 3.0 + 1e-12, 100), rat(2, 3));
        assert_eq!(approximate(-8.0, 100), int(-8));
        assert_eq!(approximate(35.0 / 108.0, 200), rat(35, 108));
    }

    #[test]
    fn ceil_and_frac() {
        assert_eq!(ceil(&rat(6, 5)), BigInt::from(2));
        assert_eq!(ceil(&rat(-1, 3)), BigInt::from(0));
        assert_eq!(frac(&rat(-1, 3)), rat(2, 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(36, 3), int(7140));
        assert_eq!(binomial(12, 2), int(66));
    }
}
