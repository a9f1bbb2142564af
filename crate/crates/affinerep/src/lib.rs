//! Level-k module tables of simple affine vertex algebras, directional minima of
//! weight systems, and fixed subalgebras of inner automorphisms `exp(2πi ad h)`.

use std::collections::HashSet;

use exactmath::rational::int;
use exactmath::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rootdata::{
    build_root_system, classify_cartan, lin_min_over_weights, weyl_dim, RootError, RootSystem,
    SemisimpleTypeWithLevels, SimpleType, Weight,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("{lambda} is not admissible at level {level}")]
    Inadmissible { lambda: String, level: u32 },
    #[error("level must be positive")]
    ZeroLevel,
    #[error("twist vector has {got} components, algebra has {expected} ideals")]
    ComponentCount { expected: usize, got: usize },
    #[error("ambient ideal {0} has a non-integral level")]
    NonIntegralLevel(String),
}

/// `L_g(k, 0)` for a simple `g` and positive integer `k`.
#[derive(Clone, Debug)]
pub struct AffineAlgebra {
    pub rs: RootSystem,
    pub level: u32,
}

impl AffineAlgebra {
    pub fn new(ty: SimpleType, level: u32) -> Result<Self, AffineError> {
        if level == 0 {
            return Err(AffineError::ZeroLevel);
        }
        Ok(Self { rs: build_root_system(ty), level })
    }

    pub fn ty(&self) -> SimpleType {
        self.rs.ty
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.rs.ty.dual_coxeter_formula() as i64
    }

    pub fn is_admissible(&self, lambda: &Weight) -> bool {
        lambda.is_dominant_integral() && self.rs.pair_root(lambda, &self.rs.theta) <= int(self.level as i64)
    }
}

impl std::fmt::Display for AffineAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.rs.ty, self.level)
    }
}

#[derive(Clone, Debug)]
pub struct ModuleRow {
    pub lambda: Weight,
    pub conformal_weight: Rational,
    pub dim_of_top: u128,
}

#[derive(Clone, Debug)]
pub struct AffineModuleTable {
    pub algebra: AffineAlgebra,
    pub rows: Vec<ModuleRow>,
}

impl AffineModuleTable {
    pub fn row(&self, labels: &[i64]) -> Option<&ModuleRow> {
        self.rows.iter().find(|r| r.lambda.labels().as_deref() == Some(labels))
    }
}

/// One weight per simple ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistVector {
    pub components: Vec<Weight>,
}

impl TwistVector {
    pub fn new(components: Vec<Weight>) -> Self {
        Self { components }
    }

    pub fn neg(&self) -> Self {
        Self { components: self.components.iter().map(Weight::neg).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Weight::is_zero)
    }
}

/// All dominant λ with `(λ|θ) ≤ k`, ordered by `(λ|θ)` and then by labels.
pub fn enumerate_level_weights(a: &AffineAlgebra) -> AffineModuleTable {
    let rs = &a.rs;
    let n = rs.rank();
    // (Λ_i|θ) = θ_i (α_i|α_i)/2 is a positive integer for every simple type
    let comarks: Vec<i64> = (0..n)
        .map(|i| exactmath::rational::to_i64(&(&rs.half_norms[i] * int(rs.theta[i]))).expect("integral comark"))
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fill(&comarks, a.level as i64, 0, &mut cur, &mut out);
    out.sort_by(|x, y| {
        let lx: i64 = x.iter().zip(&comarks).map(|(a, b)| a * b).sum();
        let ly: i64 = y.iter().zip(&comarks).map(|(a, b)| a * b).sum();
        lx.cmp(&ly).then(y.cmp(x))
    });
    let rows = out
        .into_iter()
        .map(|labels| {
            let lambda = Weight::from_labels(rs.ty, &labels).expect("rank matches");
            let conformal_weight = conformal_weight_unchecked(a, &lambda);
            let dim_of_top = weyl_dim(rs, &lambda).expect("dominant");
            ModuleRow { lambda, conformal_weight, dim_of_top }
        })
        .collect();
    AffineModuleTable { algebra: a.clone(), rows }
}

fn fill(comarks: &[i64], budget: i64, i: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if i == comarks.len() {
        out.push(cur.clone());
        return;
    }
    let mut v = 0;
    while v * comarks[i] <= budget {
        cur[i] = v;
        fill(comarks, budget - v * comarks[i], i + 1, cur, out);
        v += 1;
    }
    cur[i] = 0;
}

fn conformal_weight_unchecked(a: &AffineAlgebra, lambda: &Weight) -> Rational {
    let rs = &a.rs;
    let shifted = lambda.add(&rs.rho()).add(&rs.rho());
    rs.inner(lambda, &shifted) / int(2 * (a.level as i64 + a.dual_coxeter()))
}

/// Lowest `L(0)`-weight `(λ, λ+2ρ)/(2(k+h^∨))`.
pub fn conformal_weight(lambda: &Weight, a: &AffineAlgebra) -> Result<Rational, AffineError> {
    a.rs.check_weight(lambda)?;
    if !a.is_admissible(lambda) {
        return Err(AffineError::Inadmissible { lambda: lambda.to_string(), level: a.level });
    }
    Ok(conformal_weight_unchecked(a, lambda))
}

/// `min{(h|μ) : μ ∈ Π(λ)}`.
pub fn n_min(rs: &RootSystem, h: &Weight, lambda: &Weight) -> Result<Rational, AffineError> {
    Ok(lin_min_over_weights(rs, h, lambda)?)
}

/// Least `n` with `n·(h|λ) ∈ Z` for every tuple of admissible weights.
pub fn sigma_order_on_category(h: &TwistVector, algebras: &[AffineAlgebra]) -> Result<u64, AffineError> {
    if h.components.len() != algebras.len() {
        return Err(AffineError::ComponentCount { expected: algebras.len(), got: h.components.len() });
    }
    let mut order = BigInt::one();
    for (hi, a) in h.components.iter().zip(algebras) {
        a.rs.check_weight(hi)?;
        for row in enumerate_level_weights(a).rows {
            order = order.lcm(a.rs.inner(hi, &row.lambda).denom());
        }
    }
    Ok(num_traits::ToPrimitive::to_u64(&order).expect("order fits in u64"))
}

/// Fixed subalgebra of `exp(2πi ad h)` together with its dimension.
pub fn inner_fixed_subalgebra(
    ambient: &SemisimpleTypeWithLevels,
    h: &TwistVector,
) -> Result<(SemisimpleTypeWithLevels, usize), AffineError> {
    if h.components.len() != ambient.ideals().len() {
        return Err(AffineError::ComponentCount { expected: ambient.ideals().len(), got: h.components.len() });
    }
    let mut ideals = Vec::new();
    let mut abelian = ambient.abelian_rank();
    let mut dim = ambient.abelian_rank();
    for ((ty, level), hi) in ambient.ideals().iter().zip(&h.components) {
        let rs = build_root_system(*ty);
        rs.check_weight(hi)?;
        let kept: Vec<&Vec<i64>> = rs.positive_roots.iter().filter(|r| rs.pair_root(hi, r).is_integer()).collect();
        dim += ty.rank() + 2 * kept.len();
        let kept_set: HashSet<&Vec<i64>> = kept.iter().copied().collect();
        let simple: Vec<&Vec<i64>> = kept
            .iter()
            .copied()
            .filter(|r| {
                !kept.iter().any(|a| {
                    let b: Vec<i64> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                    kept_set.contains(&b)
                })
            })
            .collect();
        abelian += ty.rank() - simple.len();
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| {
                simple
                    .iter()
                    .map(|b| {
                        let v = int(2) * rs.root_inner(a, b) / rs.root_inner(b, b);
                        exactmath::rational::to_i64(&v).expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect();
        for (t, nodes) in classify_cartan(&cartan)? {
            let longest = nodes.iter().map(|&k| rs.root_inner(simple[k], simple[k])).max().expect("nonempty");
            ideals.push((t, level * int(2) / longest));
        }
    }
    let fixed = SemisimpleTypeWithLevels::new(ideals, abelian);
    debug_assert_eq!(fixed.dim(), dim);
    Ok((fixed, dim))
}

/// `(h|λ)` summed over the ideals of a tuple.
pub fn tuple_pairing(algebras: &[AffineAlgebra], h: &TwistVector, tuple: &[Weight]) -> Rational {
    algebras
        .iter()
        .zip(&h.components)
        .zip(tuple)
        .map(|((a, hi), l)| a.rs.inner(hi, l))
        .fold(Rational::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rootdata::Family;

    #[test]
    fn zero_level_rejected() {
        assert_eq!(AffineAlgebra::new(SimpleType::new(Family::A, 1).unwrap(), 0).unwrap_err(), AffineError::ZeroLevel);
    }

    #[test]
    fn inadmissible_weight_rejected() {
        let a = AffineAlgebra::new(SimpleType::new(Family::A, 2).unwrap(), 1).unwrap();
        let l = Weight::from_labels(a.ty(), &[1, 1]).unwrap();
        assert!(matches!(conformal_weight(&l, &a), Err(AffineError::Inadmissible { .. })));
    }

    #[test]
    fn vacuum_has_weight_zero() {
        let a = AffineAlgebra::new(SimpleType::new(Family::E, 6).unwrap(), 3).unwrap();
        assert!(conformal_weight(&Weight::zero(a.ty()), &a).unwrap().is_zero());
    }
}
