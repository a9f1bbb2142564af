use exactmath::rational::{int, rat};
use exactmath::Rational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{PuiseuxSeries, QError};

/// `η(sτ)^m` with `η(τ) = q^{1/24} Π_{n≥1} (1 − q^n)`, known below `q^trunc`.
pub fn eta_expansion(s: &Rational, m: i64, trunc: i64) -> Result<PuiseuxSeries, QError> {
    if trunc <= 0 {
        return Err(QError::NonPositiveTrunc(trunc));
    }
    if !s.is_positive() {
        return Err(QError::NonPositiveScale);
    }
    let lead = s * rat(m, 24);
    // degree K in x = q^s needed so that lead + sK reaches trunc
    let need = (int(trunc) - &lead) / s;
    let k_max = need.ceil().to_integer().to_i64().expect("fits i64").max(0) as usize;

    let mut prod = vec![Rational::zero(); k_max + 1];
    prod[0] = Rational::one();
    for n in 1..=k_max {
        for k in (n..=k_max).rev() {
            let t = prod[k - n].clone();
            prod[k] -= t;
        }
    }

    // b = prod^m with b_k = (1/k) Σ_j ((m+1)j − k) a_j b_{k−j}
    let mut b = vec![Rational::zero(); k_max + 1];
    b[0] = Rational::one();
    for k in 1..=k_max {
        let mut acc = Rational::zero();
        for j in 1..=k {
            if prod[j].is_zero() {
                continue;
            }
            acc += int((m + 1) * j as i64 - k as i64) * &prod[j] * &b[k - j];
        }
        b[k] = acc / int(k as i64);
    }

    // exponent s(m + 24k)/24 with s = p/r
    let p = s.numer().to_i64().expect("fits i64");
    let r = s.denom().to_i64().expect("fits i64");
    let terms = b.into_iter().enumerate().map(|(k, c)| (p * (m + 24 * k as i64), c));
    Ok(PuiseuxSeries::new(24 * r, terms, int(trunc)))
}

/// `f = η(τ)^{12} / η(3τ)^{12}`, the Hauptmodul for `Γ0(3)`.
pub fn hauptmodul_f(trunc: i64) -> Result<PuiseuxSeries, QError> {
    let margin = trunc + 2;
    let num = eta_expansion(&int(1), 12, margin)?;
    let den = eta_expansion(&int(3), -12, margin)?;
    Ok((&num * &den).truncate(&int(trunc)))
}

/// `f^n(Sτ) = (3^6 η(τ)^{12} / η(τ/3)^{12})^n`.
#[allow(non_snake_case)]
pub fn f_power_at_S(n: i64, trunc: i64) -> Result<PuiseuxSeries, QError> {
    if trunc <= 0 {
        return Err(QError::NonPositiveTrunc(trunc));
    }
    let margin = trunc + n.abs() + 1;
    let num = eta_expansion(&int(1), 12 * n, margin)?;
    let den = eta_expansion(&rat(1, 3), -12 * n, margin)?;
    let three = int(3);
    let factor = if n >= 0 { num_traits::pow(three, 6 * n as usize) } else { num_traits::pow(three, (-6 * n) as usize).recip() };
    Ok((&num * &den).scale(&factor).truncate(&int(trunc)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_cubed_is_jacobi() {
        // η^3 = q^{1/8} Σ (−1)^k (2k+1) q^{k(k+1)/2}
        let e = eta_expansion(&int(1), 3, 20).unwrap();
        let lead = rat(1, 8);
        for k in 0..5i64 {
            let e_k = &lead + int(k * (k + 1) / 2);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(e.coeff(&e_k), int(sign * (2 * k + 1)));
        }
        assert_eq!(e.coeff(&(&lead + int(2))), int(0));
    }

    #[test]
    fn f_has_simple_pole() {
        let f = hauptmodul_f(4).unwrap();
        assert_eq!(f.valuation(), Some(int(-1)));
        assert!(f.trunc() == &int(4));
    }
}
