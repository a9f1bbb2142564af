use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use exactmath::rational::int;
use exactmath::{BigInt, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::QError;

/// Truncated series `Σ a_n q^{n/D}`, known exactly for exponents below `trunc`.
///
/// The exponent denominator `D` is kept minimal, so structurally equal series
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    denom: i64,
    coeffs: BTreeMap<i64, Rational>,
    trunc: Rational,
}

impl PuiseuxSeries {
    /// Terms `(n, a_n)` meaning `a_n q^{n/denom}`; terms at or past `trunc` are dropped.
    pub fn new(denom: i64, terms: impl IntoIterator<Item = (i64, Rational)>, trunc: Rational) -> Self {
        assert!(denom > 0, "exponent denominator must be positive");
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (n, a) in terms {
            *coeffs.entry(n).or_insert_with(Rational::zero) += a;
        }
        let mut s = Self { denom, coeffs, trunc };
        s.clean();
        s
    }

    pub fn zero(trunc: Rational) -> Self {
        Self::new(1, [], trunc)
    }

    pub fn constant(c: Rational, trunc: Rational) -> Self {
        Self::new(1, [(0, c)], trunc)
    }

    /// `c q^e`.
    pub fn monomial(e: &Rational, c: Rational, trunc: Rational) -> Self {
        let d = e.denom().to_i64().expect("exponent denominator fits i64");
        let n = e.numer().to_i64().expect("exponent numerator fits i64");
        Self::new(d, [(n, c)], trunc)
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn trunc(&self) -> &Rational {
        &self.trunc
    }

    /// Coefficient of `q^e`. Panics if `e` is not below the truncation.
    pub fn coeff(&self, e: &Rational) -> Rational {
        assert!(e < &self.trunc, "coefficient of q^{e} requested past truncation {}", self.trunc);
        let scaled = e * int(self.denom);
        if !scaled.is_integer() {
            return Rational::zero();
        }
        let n = scaled.to_integer().to_i64().expect("exponent fits i64");
        self.coeffs.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        let d = self.denom;
        self.coeffs.iter().map(move |(n, a)| (Rational::new(BigInt::from(*n), BigInt::from(d)), a))
    }

    pub fn valuation(&self) -> Option<Rational> {
        self.terms().next().map(|(e, _)| e)
    }

    pub fn leading(&self) -> Option<(Rational, Rational)> {
        self.terms().next().map(|(e, a)| (e, a.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowers the truncation to `min(trunc, t)`.
    pub fn truncate(&self, t: &Rational) -> Self {
        let t = if t < &self.trunc { t.clone() } else { self.trunc.clone() };
        Self::new(self.denom, self.coeffs.clone(), t)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.denom, self.coeffs.iter().map(|(n, a)| (*n, a * c)), self.trunc.clone())
    }

    /// `q ↦ q^s` for `s > 0`.
    pub fn substitute(&self, s: &Rational) -> Self {
        assert!(s.is_positive(), "substitution exponent must be positive");
        let p = s.numer().to_i64().expect("fits i64");
        let r = s.denom().to_i64().expect("fits i64");
        Self::new(self.denom * r, self.coeffs.iter().map(|(n, a)| (n * p, a.clone())), &self.trunc * s)
    }

    /// Whether both series agree below the smaller truncation.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let t = if self.trunc < other.trunc { &self.trunc } else { &other.trunc };
        self.truncate(t) == other.truncate(t)
    }

    /// Multiplicative inverse; needs a nonzero term below the truncation.
    pub fn inverse(&self) -> Result<Self, QError> {
        let (v, c) = self.leading().ok_or(QError::NotInvertible)?;
        let d = self.denom;
        let v_num = *self.coeffs.keys().next().unwrap();
        let c_inv = c.recip();
        // a = c q^v (1 + u), u known below trunc − v
        let unit: BTreeMap<i64, Rational> = self.coeffs.iter().map(|(n, a)| (n - v_num, a * &c_inv)).collect();
        let bound = &self.trunc - &v;
        let mut b: Vec<Rational> = vec![Rational::one()];
        let mut k = 1i64;
        while int(k) / int(d) < bound {
            let mut acc = Rational::zero();
            for (j, aj) in unit.range(1..=k) {
                acc -= aj * &b[(k - j) as usize];
            }
            b.push(acc);
            k += 1;
        }
        let terms = b.into_iter().enumerate().map(|(k, bk)| (k as i64 - v_num, bk * &c_inv));
        Ok(Self::new(d, terms, &self.trunc - &v - &v))
    }

    pub fn pow(&self, n: i64) -> Result<Self, QError> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        if n == 0 {
            let v = self.valuation().ok_or(QError::NotInvertible)?;
            return Ok(Self::constant(Rational::one(), &self.trunc - v));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = &acc * self;
        }
        Ok(acc)
    }

    fn valuation_or_trunc(&self) -> Rational {
        self.valuation().unwrap_or_else(|| self.trunc.clone())
    }

    fn rescaled(&self, denom: i64) -> BTreeMap<i64, Rational> {
        let f = denom / self.denom;
        self.coeffs.iter().map(|(n, a)| (n * f, a.clone())).collect()
    }

    fn clean(&mut self) {
        let d = self.denom;
        let t = self.trunc.clone();
        self.coeffs.retain(|n, a| !a.is_zero() && Rational::new(BigInt::from(*n), BigInt::from(d)) < t);
        let g = self.coeffs.keys().fold(self.denom, |g, n| g.gcd(n));
        if g > 1 {
            self.denom /= g;
            self.coeffs = std::mem::take(&mut self.coeffs).into_iter().map(|(n, a)| (n / g, a)).collect();
        }
    }
}

impl Add for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn add(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let d = self.denom.lcm(&rhs.denom);
        let t = if self.trunc < rhs.trunc { self.trunc.clone() } else { rhs.trunc.clone() };
        PuiseuxSeries::new(d, self.rescaled(d).into_iter().chain(rhs.rescaled(d)), t)
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        self.scale(&int(-1))
    }
}

impl Sub for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn sub(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self + &(-rhs)
    }
}

impl Mul for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let d = self.denom.lcm(&rhs.denom);
        let t1 = &self.valuation_or_trunc() + &rhs.trunc;
        let t2 = &rhs.valuation_or_trunc() + &self.trunc;
        let t = if t1 < t2 { t1 } else { t2 };
        let a = self.rescaled(d);
        let b = rhs.rescaled(d);
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (i, x) in &a {
            for (j, y) in &b {
                if Rational::new(BigInt::from(i + j), BigInt::from(d)) >= t {
                    break;
                }
                *out.entry(i + j).or_insert_with(Rational::zero) += x * y;
            }
        }
        PuiseuxSeries::new(d, out, t)
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, a) in self.terms() {
            let (sign, mag) = if a.is_negative() { ("-", -a.clone()) } else { ("+", a.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = if mag.is_one() && !e.is_zero() { String::new() } else { mag.to_string() };
            if e.is_zero() {
                write!(f, "{coef}")?;
            } else if e.is_one() {
                write!(f, "{coef}q")?;
            } else {
                write!(f, "{coef}q^({e})")?;
            }
        }
        if first {
            write!(f, "O(q^({}))", self.trunc)
        } else {
            write!(f, " + O(q^({}))", self.trunc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactmath::rational::rat;

    #[test]
    fn denominators_reduce() {
        let s = PuiseuxSeries::new(6, [(3, int(1)), (6, int(2))], int(5));
        assert_eq!(s.denom(), 2);
        assert_eq!(s.coeff(&rat(1, 2)), int(1));
        assert_eq!(s.coeff(&int(1)), int(2));
    }

    #[test]
    fn terms_past_trunc_are_dropped() {
        let s = PuiseuxSeries::new(1, [(0, int(1)), (3, int(1))], int(3));
        assert_eq!(s.terms().count(), 1);
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_q = PuiseuxSeries::new(1, [(0, int(1)), (1, int(-1))], int(10));
        let inv = one_minus_q.inverse().unwrap();
        for k in 0..10 {
            assert_eq!(inv.coeff(&int(k)), int(1));
        }
    }

    #[test]
    fn display_reads_naturally() {
        let s = PuiseuxSeries::new(1, [(-1, int(1)), (0, int(-12))], int(1));
        assert_eq!(s.to_string(), "q^(-1) - 12 + O(q^(1))");
    }
}
