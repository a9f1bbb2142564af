//! Lower bounds for the lowest `L(0)`-weight of `σ_h`-twisted modules.
//!
//! A module `⊗ L(k_i, λ_i)` of lowest weight `ℓ` shifts under the Δ-operator to
//! lowest weight `ℓ + Σ_i min{(h_i|μ) : μ ∈ Π(λ_i)} + ⟨h|h⟩/2`, provided
//! `(h|α) ≥ −1` for every root.

use affinerep::{enumerate_level_weights, n_min, AffineAlgebra, AffineError, TwistVector};
use exactmath::rational::{int, rat};
use exactmath::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rootdata::{parse_ideal_list, Family, RootError, SemisimpleTypeWithLevels, SimpleType, Weight};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("(h|α) < −1 for some root α; the shift bound does not apply")]
    ShiftViolated,
    #[error("ideal {0} has a non-integral level")]
    NonIntegralLevel(String),
    #[error("case has an abelian part; only semisimple ambient algebras are supported")]
    AbelianAmbient,
    #[error("tuple has {got} entries, expected {expected}")]
    TupleLength { expected: usize, got: usize },
}

/// Ambient semisimple algebra with levels, in a fixed ideal order, and a twist vector.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub name: String,
    pub algebras: Vec<AffineAlgebra>,
    pub h: TwistVector,
}

impl CaseSpec {
    pub fn new(name: &str, algebras: Vec<AffineAlgebra>, h: TwistVector) -> Result<Self, TwistError> {
        if h.components.len() != algebras.len() {
            return Err(AffineError::ComponentCount { expected: algebras.len(), got: h.components.len() }.into());
        }
        for (a, hi) in algebras.iter().zip(&h.components) {
            a.rs.check_weight(hi)?;
        }
        Ok(Self { name: name.into(), algebras, h })
    }

    /// Ideals from a type string, kept in the order written; `h` rows in fundamental coordinates.
    pub fn from_strings(name: &str, ambient: &str, h: &[Vec<Rational>]) -> Result<Self, TwistError> {
        let (ideals, abelian) = parse_ideal_list(ambient)?;
        if abelian > 0 {
            return Err(TwistError::AbelianAmbient);
        }
        let mut algebras = Vec::new();
        for (t, l) in ideals {
            let k = exactmath::rational::to_i64(&l).ok_or_else(|| TwistError::NonIntegralLevel(format!("{t},{l}")))?;
            algebras.push(AffineAlgebra::new(t, k as u32)?);
        }
        if h.len() != algebras.len() {
            return Err(AffineError::ComponentCount { expected: algebras.len(), got: h.len() }.into());
        }
        let comps = algebras
            .iter()
            .zip(h)
            .map(|(a, c)| Weight::new(a.ty(), c.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(name, algebras, TwistVector::new(comps))
    }

    pub fn ambient(&self) -> SemisimpleTypeWithLevels {
        SemisimpleTypeWithLevels::new(self.algebras.iter().map(|a| (a.ty(), int(a.level as i64))).collect(), 0)
    }

    /// Same ambient algebra with `h` replaced by `−h`.
    pub fn negated(&self) -> Self {
        Self { name: format!("{}(-h)", self.name), algebras: self.algebras.clone(), h: self.h.neg() }
    }

    /// `E6,3 G2,1^3` with `h = (0, Λ1, Λ1, Λ1)`.
    pub fn e6g2() -> Self {
        let mut algebras = vec![alg(Family::E, 6, 3)];
        algebras.extend((0..3).map(|_| alg(Family::G, 2, 1)));
        let mut comps = vec![Weight::zero(algebras[0].ty())];
        comps.extend(algebras[1..].iter().map(|a| Weight::fundamental(a.ty(), 1)));
        Self::new("e6g2", algebras, TwistVector::new(comps)).expect("built-in case")
    }

    /// `A2,3^6` with `h = (Λ1, 0, 0, 0, 0, 0)`.
    pub fn a2x6() -> Self {
        let algebras: Vec<_> = (0..6).map(|_| alg(Family::A, 2, 3)).collect();
        let mut comps: Vec<Weight> = algebras.iter().map(|a| Weight::zero(a.ty())).collect();
        comps[0] = Weight::fundamental(algebras[0].ty(), 1);
        Self::new("a2x6", algebras, TwistVector::new(comps)).expect("built-in case")
    }

    /// `A5,3 D4,3 A1,1^3` with `h = ((2/3)Λ3, 0, 0, 0, 0)`.
    pub fn a5d4() -> Self {
        let algebras = vec![alg(Family::A, 5, 3), alg(Family::D, 4, 3), alg(Family::A, 1, 1), alg(Family::A, 1, 1), alg(Family::A, 1, 1)];
        let mut comps: Vec<Weight> = algebras.iter().map(|a| Weight::zero(a.ty())).collect();
        comps[0] = Weight::fundamental(algebras[0].ty(), 3).scale(&rat(2, 3));
        Self::new("a5d4", algebras, TwistVector::new(comps)).expect("built-in case")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "e6g2" => Some(Self::e6g2()),
            "a2x6" => Some(Self::a2x6()),
            "a5d4" => Some(Self::a5d4()),
            _ => None,
        }
    }
}

fn alg(f: Family, n: usize, k: u32) -> AffineAlgebra {
    AffineAlgebra::new(SimpleType::new(f, n).expect("valid type"), k).expect("positive level")
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormReport {
    pub value: Rational,
    pub in_2z: bool,
    pub in_two_thirds_z: bool,
}

/// `⟨h|h⟩ = Σ k_i (h_i|h_i)`.
pub fn invariant_norm(c: &CaseSpec) -> NormReport {
    let value = c
        .algebras
        .iter()
        .zip(&c.h.components)
        .map(|(a, hi)| int(a.level as i64) * a.rs.inner(hi, hi))
        .fold(Rational::zero(), |x, y| x + y);
    let in_2z = (&value / int(2)).is_integer();
    let in_two_thirds_z = (&value * rat(3, 2)).is_integer();
    NormReport { value, in_2z, in_two_thirds_z }
}

/// True iff `(h|α) ≥ −1` for every root α.
pub fn shift_ok(c: &CaseSpec) -> bool {
    c.algebras
        .iter()
        .zip(&c.h.components)
        .all(|(a, hi)| a.rs.roots.iter().all(|r| a.rs.pair_root(hi, r) >= int(-1)))
}

/// A tuple of admissible weights, as row indices into each ideal's module table.
#[derive(Clone, Debug, PartialEq)]
pub struct TupleBound {
    pub tuple: Vec<usize>,
    pub conformal_sum: Rational,
    pub ell_min: Rational,
    pub bound: Rational,
    pub feasible: bool,
}

/// Module tables and directional minima for every ideal of a case.
#[derive(Clone, Debug)]
pub struct CaseTables {
    pub weights: Vec<Vec<Weight>>,
    pub conformal: Vec<Vec<Rational>>,
    pub minima: Vec<Vec<Rational>>,
    pub half_norm: Rational,
}

impl CaseTables {
    pub fn new(c: &CaseSpec) -> Result<Self, TwistError> {
        let mut weights = Vec::new();
        let mut conformal = Vec::new();
        let mut minima = Vec::new();
        for (a, hi) in c.algebras.iter().zip(&c.h.components) {
            let table = enumerate_level_weights(a);
            let mut ms = Vec::with_capacity(table.rows.len());
            for row in &table.rows {
                ms.push(n_min(&a.rs, hi, &row.lambda)?);
            }
            conformal.push(table.rows.iter().map(|r| r.conformal_weight.clone()).collect());
            weights.push(table.rows.into_iter().map(|r| r.lambda).collect());
            minima.push(ms);
        }
        Ok(Self { weights, conformal, minima, half_norm: invariant_norm(c).value / int(2) })
    }

    pub fn tuple_count(&self) -> u128 {
        self.weights.iter().map(|w| w.len() as u128).product()
    }

    /// Index of the zero weight in every table.
    fn vacuum_index(&self, i: usize) -> usize {
        self.weights[i].iter().position(Weight::is_zero).expect("zero weight present")
    }

    pub fn evaluate(&self, tuple: &[usize]) -> Result<TupleBound, TwistError> {
        if tuple.len() != self.weights.len() {
            return Err(TwistError::TupleLength { expected: self.weights.len(), got: tuple.len() });
        }
        let mut sum = Rational::zero();
        let mut nsum = Rational::zero();
        let mut vacuum = true;
        for (i, &j) in tuple.iter().enumerate() {
            sum += &self.conformal[i][j];
            nsum += &self.minima[i][j];
            vacuum &= j == self.vacuum_index(i);
        }
        let floor = if vacuum { Rational::zero() } else { int(2) };
        let target = if sum > floor { sum.clone() } else { floor };
        let shift = (&target - &sum).ceil();
        let ell_min = &sum + shift;
        let bound = &ell_min + nsum + &self.half_norm;
        Ok(TupleBound { tuple: tuple.to_vec(), feasible: sum.is_integer(), conformal_sum: sum, ell_min, bound })
    }

    /// Visits every tuple with integral conformal-weight sum in lexicographic order,
    /// passing `(tuple, scaled bound)` where the bound is multiplied by `denominator()`.
    fn for_each_feasible(&self, mut f: impl FnMut(&[usize], i64)) {
        let d = self.denominator();
        let scale = |x: &Rational| -> i64 { (x * Rational::from_integer(d.clone())).to_integer().to_i64().expect("fits in i64") };
        let conf: Vec<Vec<i64>> = self.conformal.iter().map(|v| v.iter().map(scale).collect()).collect();
        let mins: Vec<Vec<i64>> = self.minima.iter().map(|v| v.iter().map(scale).collect()).collect();
        let half = scale(&self.half_norm);
        let d = d.to_i64().expect("fits in i64");
        let vac: Vec<usize> = (0..self.weights.len()).map(|i| self.vacuum_index(i)).collect();
        let k = self.weights.len();
        let mut idx = vec![0usize; k];
        if self.weights.iter().any(Vec::is_empty) {
            return;
        }
        loop {
            let s: i64 = (0..k).map(|i| conf[i][idx[i]]).sum();
            if s % d == 0 {
                let vacuum = (0..k).all(|i| idx[i] == vac[i]);
                let ell = if vacuum { 0 } else { s.max(2 * d) };
                let n: i64 = (0..k).map(|i| mins[i][idx[i]]).sum();
                f(&idx, ell + n + half);
            }
            let mut p = k;
            loop {
                if p == 0 {
                    return;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < self.weights[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    /// Common denominator of all conformal weights, minima and `⟨h|h⟩/2`.
    pub fn denominator(&self) -> BigInt {
        let mut d = self.half_norm.denom().clone();
        for v in self.conformal.iter().chain(&self.minima) {
            for x in v {
                d = d.lcm(x.denom());
            }
        }
        d
    }
}

/// All tuples whose conformal-weight sum is an integer, with their bounds.
pub fn feasible_tuples(c: &CaseSpec) -> Result<Vec<TupleBound>, TwistError> {
    let tables = CaseTables::new(c)?;
    let mut out = Vec::new();
    let mut err = None;
    tables.for_each_feasible(|t, _| match tables.evaluate(t) {
        Ok(b) => out.push(b),
        Err(e) => err = Some(e),
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `ℓ_min + Σ n_min(h_i, λ_i) + ⟨h|h⟩/2`.
pub fn twisted_weight_lower_bound(t: &TupleBound, c: &CaseSpec) -> Result<Rational, TwistError> {
    if !shift_ok(c) {
        return Err(TwistError::ShiftViolated);
    }
    Ok(CaseTables::new(c)?.evaluate(&t.tuple)?.bound)
}

/// Minimum bound over all feasible tuples with the lexicographically least minimizer.
pub fn min_twisted_weight(c: &CaseSpec) -> Result<(Rational, Vec<usize>), TwistError> {
    if !shift_ok(c) {
        return Err(TwistError::ShiftViolated);
    }
    let tables = CaseTables::new(c)?;
    let mut best: Option<(i64, Vec<usize>)> = None;
    tables.for_each_feasible(|t, b| {
        if best.as_ref().map_or(true, |(x, _)| b < *x) {
            best = Some((b, t.to_vec()));
        }
    });
    let (b, w) = best.expect("vacuum tuple is always feasible");
    Ok((Rational::new(BigInt::from(b), tables.denominator()), w))
}

/// Every feasible bound, in enumeration order.
pub fn all_feasible_bounds(c: &CaseSpec) -> Result<Vec<Rational>, TwistError> {
    let tables = CaseTables::new(c)?;
    let d = tables.denominator();
    let mut out = Vec::new();
    tables.for_each_feasible(|_, b| out.push(Rational::new(BigInt::from(b), d.clone())));
    Ok(out)
}

/// Weights of a tuple as a display string.
pub fn describe_tuple(c: &CaseSpec, tuple: &[usize]) -> Result<String, TwistError> {
    let tables = CaseTables::new(c)?;
    Ok(tuple.iter().enumerate().map(|(i, &j)| tables.weights[i][j].to_string()).collect::<Vec<_>>().join(", "))
}

/// True when `⟨h|h⟩/2` and every pairing lie in `(1/3)Z`.
pub fn pairings_in_third_integers(c: &CaseSpec) -> Result<bool, TwistError> {
    let tables = CaseTables::new(c)?;
    let third = |x: &Rational| (x * int(3)).is_integer();
    Ok(third(&tables.half_norm) && tables.minima.iter().flatten().all(third))
}
