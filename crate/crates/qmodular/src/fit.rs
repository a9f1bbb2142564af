use std::collections::BTreeMap;
use std::sync::OnceLock;

use exactmath::rational::{int, rat, to_i64};
use exactmath::{Cyclo3, Rational};
use num_traits::{One, ToPrimitive, Zero};

use crate::{f_power_at_S, hauptmodul_f, PuiseuxSeries, QError};

/// `Z_{V^g}(τ) = Σ_{n=-3}^{1} c_n f(τ)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentFit {
    pub c1: Rational,
    pub c0: Rational,
    pub cm1: Rational,
    pub cm2: Rational,
    pub cm3: Rational,
}

impl LaurentFit {
    /// `c_n` for `n ∈ −3..=1`.
    pub fn coefficient(&self, n: i64) -> &Rational {
        match n {
            1 => &self.c1,
            0 => &self.c0,
            -1 => &self.cm1,
            -2 => &self.cm2,
            -3 => &self.cm3,
            _ => panic!("no Laurent coefficient c_{n}"),
        }
    }

    /// `Z_{V^g}(τ)` as a q-series.
    pub fn z_fixed(&self, trunc: i64) -> Result<PuiseuxSeries, QError> {
        let f = hauptmodul_f(trunc + 4)?;
        let mut acc = PuiseuxSeries::zero(int(trunc));
        for n in -3..=1 {
            acc = &acc + &f.pow(n)?.scale(self.coefficient(n));
        }
        Ok(acc)
    }

    /// `Z_{V^g}(Sτ)` as a series in `q^{1/3}`.
    pub fn z_fixed_at_s(&self, trunc: i64) -> Result<PuiseuxSeries, QError> {
        let mut acc = PuiseuxSeries::zero(int(trunc));
        for n in -3..=1 {
            acc = &acc + &f_power_at_S(n, trunc)?.scale(self.coefficient(n));
        }
        Ok(acc)
    }
}

/// Affine form over `(d0, d13, d23, 1)`.
#[derive(Clone, Debug, PartialEq)]
struct Affine([Cyclo3; 4]);

impl Affine {
    fn zero() -> Self {
        Self(std::array::from_fn(|_| Cyclo3::zero()))
    }

    fn basis(i: usize, c: Rational) -> Self {
        let mut a = Self::zero();
        a.0[i] = Cyclo3::from(c);
        a
    }

    fn plus(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    fn times(&self, c: &Cyclo3) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * c))
    }

    fn times_rat(&self, c: &Rational) -> Self {
        self.times(&Cyclo3::from(c.clone()))
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn rational(&self) -> [Rational; 4] {
        std::array::from_fn(|i| {
            assert!(self.0[i].is_rational(), "irrational coefficient {}", self.0[i]);
            self.0[i].a.clone()
        })
    }

    fn eval(&self, d0: i64, d13: i64, d23: i64) -> Rational {
        let r = self.rational();
        &r[0] * int(d0) + &r[1] * int(d13) + &r[2] * int(d23) + &r[3]
    }
}

const D0: usize = 0;
const D13: usize = 1;
const D23: usize = 2;
const ONE: usize = 3;

/// Symbolic `c_n`, indexed by `1 − n`.
fn symbolic_fit() -> Result<[Affine; 5], QError> {
    let s_series: Vec<PuiseuxSeries> = (-3..=1).map(|n| f_power_at_S(n, 1)).collect::<Result<_, _>>()?;
    let at_s = |n: i64| &s_series[(n + 3) as usize];
    let mut c: BTreeMap<i64, Affine> = BTreeMap::new();
    c.insert(1, Affine::basis(ONE, Rational::one()));

    // Z_{V^g}(Sτ) = (Z_V + Z_{V[g]} + Z_{V[g²]})/3 at q^{-1}, q^{-2/3}, q^{-1/3}
    let targets = [
        (rat(-1, 1), Affine::basis(ONE, rat(1, 3))),
        (rat(-2, 3), Affine::basis(D13, rat(1, 3))),
        (rat(-1, 3), Affine::basis(D23, rat(1, 3))),
    ];
    for (j, (e, target)) in targets.iter().enumerate() {
        let n = -3 + j as i64;
        let mut rest = target.clone();
        for (m, cm) in &c {
            rest = rest.plus(&cm.times_rat(&-at_s(*m).coeff(e)));
        }
        let lead = at_s(n).coeff(e);
        c.insert(n, rest.times_rat(&lead.recip()));
    }

    // constant term of Z_{V^g}(τ) is d0
    let f = hauptmodul_f(1)?;
    let mut rest = Affine::basis(D0, Rational::one());
    for (m, cm) in &c {
        rest = rest.plus(&cm.times_rat(&-f.pow(*m)?.coeff(&Rational::zero())));
    }
    c.insert(0, rest);
    Ok(std::array::from_fn(|i| c[&(1 - i as i64)].clone()))
}

/// Laurent coefficients of `Z_{V^g}` from `dim (V^g)_1` and the summed twisted dimensions at
/// weights 1/3 and 2/3.
pub fn fit_character(d0: i64, d13: i64, d23: i64) -> LaurentFit {
    let c = symbolic_fit().expect("fixed truncation is positive");
    let v = |i: usize| c[i].eval(d0, d13, d23);
    LaurentFit { c1: v(0), c0: v(1), cm1: v(2), cm2: v(3), cm3: v(4) }
}

/// Coefficients `(a, b, c, e)` in `dim V_1 + dim Ṽ_1 = a·d0 + b·d13 + c·d23 + e`.
pub fn derive_dimension_formula() -> [Rational; 4] {
    static CACHE: OnceLock<[Rational; 4]> = OnceLock::new();
    CACHE.get_or_init(|| derive().expect("fixed truncation is positive")).clone()
}

fn derive() -> Result<[Rational; 4], QError> {
    let c = symbolic_fit()?;
    // Z_{V^g}(Sτ) with symbolic coefficients, keyed by the numerator of the exponent over 3
    let mut z_s: BTreeMap<i64, Affine> = BTreeMap::new();
    for (i, cn) in c.iter().enumerate() {
        let n = 1 - i as i64;
        for (e, a) in f_power_at_S(n, 1)?.terms() {
            let m = (e * int(3)).to_integer().to_i64().expect("exponent in (1/3)Z");
            let entry = z_s.entry(m).or_insert_with(Affine::zero);
            *entry = entry.plus(&cn.times_rat(a));
        }
    }
    // Σ_{i=0}^{2} Z_{V^g}(ST^i τ): T^i multiplies the q^{m/3} term by ω^{im}
    let mut twisted: BTreeMap<i64, Affine> = BTreeMap::new();
    for (m, a) in &z_s {
        let trace = (0..3).fold(Cyclo3::zero(), |acc, i| &acc + &Cyclo3::omega_pow(i * m));
        let entry = twisted.entry(*m).or_insert_with(Affine::zero);
        *entry = entry.plus(&a.times(&trace));
    }
    for (m, a) in &twisted {
        assert!(m % 3 == 0 || a.is_zero(), "fractional power q^({m}/3) survives the T-average");
    }
    let constant = twisted.remove(&0).unwrap_or_else(Affine::zero);
    Ok(constant.plus(&Affine::basis(D0, Rational::one())).rational())
}

/// `dim Ṽ_1` from `dim V_1`, `dim (V^g)_1` and the summed twisted dimensions.
pub fn dim_tilde_v1(dim_v1: i64, d0: i64, d13: i64, d23: i64) -> Result<i64, QError> {
    let a = Affine(std::array::from_fn(|i| Cyclo3::from(derive_dimension_formula()[i].clone())));
    let total = a.eval(d0, d13, d23) - int(dim_v1);
    let v = to_i64(&total).expect("integral coefficients");
    if v < 0 {
        return Err(QError::NegativeDimension(v));
    }
    Ok(v)
}
