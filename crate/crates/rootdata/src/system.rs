use std::collections::{HashSet, VecDeque};
use std::fmt;

use exactmath::rational::{int, rat};
use exactmath::{Rational, RationalMatrix};
use num_traits::{One, Signed, Zero};

use crate::error::RootError;
use crate::types::{Family, SimpleType};

/// A weight in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    pub ty: SimpleType,
    pub coords: Vec<Rational>,
}

impl Weight {
    pub fn new(ty: SimpleType, coords: Vec<Rational>) -> Result<Self, RootError> {
        if coords.len() != ty.rank() {
            return Err(RootError::WrongLength { expected: ty.rank(), got: coords.len() });
        }
        Ok(Self { ty, coords })
    }

    pub fn zero(ty: SimpleType) -> Self {
        Self { ty, coords: vec![Rational::zero(); ty.rank()] }
    }

    /// Integral weight from Dynkin labels.
    pub fn from_labels(ty: SimpleType, labels: &[i64]) -> Result<Self, RootError> {
        Self::new(ty, labels.iter().map(|&x| int(x)).collect())
    }

    /// `Λ_i`, with `i` starting at 1.
    pub fn fundamental(ty: SimpleType, i: usize) -> Self {
        let mut w = Self::zero(ty);
        w.coords[i - 1] = Rational::one();
        w
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { ty: self.ty, coords: self.coords.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { ty: self.ty, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Integer labels if integral.
    pub fn labels(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(exactmath::rational::to_i64).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = format!("L{}", i + 1);
            if c.is_one() {
                terms.push(name);
            } else if *c == -Rational::one() {
                terms.push(format!("-{name}"));
            } else {
                terms.push(format!("({c}){name}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+").replace("+-", "-"))
        }
    }
}

/// Root datum of a simple type with long roots of norm 2.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: SimpleType,
    /// `(α_i|α_j)`.
    pub gram: RationalMatrix,
    /// `C_ij = 2(α_i|α_j)/(α_j|α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// All roots in simple-root coordinates.
    pub roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    /// `(Λ_i|Λ_j)`.
    pub weight_form: RationalMatrix,
    /// `(α_i|α_i)/2`.
    pub half_norms: Vec<Rational>,
    /// Highest root in simple-root coordinates.
    pub theta: Vec<i64>,
}

fn simple_gram(ty: SimpleType) -> RationalMatrix {
    let n = ty.rank();
    let mut g = RationalMatrix::zeros(n, n);
    let link = |g: &mut RationalMatrix, i: usize, j: usize, v: Rational| {
        g[(i, j)] = v.clone();
        g[(j, i)] = v;
    };
    match ty.family() {
        Family::A => {
            for i in 0..n {
                g[(i, i)] = int(2);
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, int(-1));
            }
        }
        Family::B => {
            for i in 0..n {
                g[(i, i)] = int(2);
            }
            g[(n - 1, n - 1)] = int(1);
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, int(-1));
            }
        }
        Family::C => {
            for i in 0..n - 1 {
                g[(i, i)] = int(1);
            }
            g[(n - 1, n - 1)] = int(2);
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, rat(-1, 2));
            }
            link(&mut g, n - 2, n - 1, int(-1));
        }
        Family::D => {
            for i in 0..n {
                g[(i, i)] = int(2);
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, int(-1));
            }
            link(&mut g, n - 3, n - 1, int(-1));
        }
        Family::E => {
            for i in 0..n {
                g[(i, i)] = int(2);
            }
            link(&mut g, 0, 2, int(-1));
            link(&mut g, 1, 3, int(-1));
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, int(-1));
            }
        }
        Family::F => {
            for (i, v) in [2, 2, 1, 1].into_iter().enumerate() {
                g[(i, i)] = int(v);
            }
            link(&mut g, 0, 1, int(-1));
            link(&mut g, 1, 2, int(-1));
            link(&mut g, 2, 3, rat(-1, 2));
        }
        Family::G => {
            g[(0, 0)] = rat(2, 3);
            g[(1, 1)] = int(2);
            link(&mut g, 0, 1, int(-1));
        }
    }
    g
}

pub fn build_root_system(ty: SimpleType) -> RootSystem {
    let n = ty.rank();
    let gram = simple_gram(ty);
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = int(2) * &gram[(i, j)] / &gram[(j, j)];
                    exactmath::rational::to_i64(&c).expect("integral Cartan entry")
                })
                .collect()
        })
        .collect();

    // reflection closure: s_i(β) = β − <β, α_i^∨> α_i
    let pair = |b: &[i64], i: usize| -> i64 { (0..n).map(|j| b[j] * cartan[j][i]).sum() };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let p = pair(&b, i);
            if p == 0 {
                continue;
            }
            let mut r = b.clone();
            r[i] -= p;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        hb.cmp(&ha).then(b.cmp(a))
    });
    assert_eq!(roots.len(), ty.root_count(), "root count for {ty}");
    let positive_roots: Vec<Vec<i64>> = roots.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect();
    let theta = positive_roots[0].clone();

    let cm = RationalMatrix::from_fn(n, n, |i, j| int(cartan[i][j]));
    let cinv = cm.inverse().expect("Cartan matrix invertible");
    let weight_form = cinv.mul(&gram).unwrap().mul(&cinv.transpose()).unwrap();
    let half_norms = (0..n).map(|i| &gram[(i, i)] / int(2)).collect();

    RootSystem { ty, gram, cartan, roots, positive_roots, weight_form, half_norms, theta }
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Dynkin labels of a root given in simple coordinates.
    pub fn root_labels(&self, c: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|j| (0..n).map(|i| c[i] * self.cartan[i][j]).sum()).collect()
    }

    pub fn root_weight(&self, c: &[i64]) -> Weight {
        Weight::from_labels(self.ty, &self.root_labels(c)).expect("rank matches")
    }

    /// `(λ|β)` for a weight λ and a root β in simple coordinates.
    pub fn pair_root(&self, lambda: &Weight, c: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.rank() {
            if c[i] != 0 && !lambda.coords[i].is_zero() {
                acc += &lambda.coords[i] * &self.half_norms[i] * int(c[i]);
            }
        }
        acc
    }

    /// `(β|γ)` for roots in simple coordinates.
    pub fn root_inner(&self, b: &[i64], c: &[i64]) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                if b[i] != 0 && c[j] != 0 {
                    acc += &self.gram[(i, j)] * int(b[i] * c[j]);
                }
            }
        }
        acc
    }

    pub fn inner(&self, x: &Weight, y: &Weight) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y.coords[j].is_zero() {
                    acc += &x.coords[i] * &self.weight_form[(i, j)] * &y.coords[j];
                }
            }
        }
        acc
    }

    pub fn rho(&self) -> Weight {
        Weight::new(self.ty, vec![Rational::one(); self.rank()]).expect("rank matches")
    }

    pub fn theta_weight(&self) -> Weight {
        self.root_weight(&self.theta)
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        let mut e = vec![0; self.rank()];
        e[i - 1] = 1;
        self.root_weight(&e)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), RootError> {
        if w.ty != self.ty {
            return Err(RootError::SystemMismatch { expected: self.ty.to_string(), got: w.ty.to_string() });
        }
        if w.coords.len() != self.rank() {
            return Err(RootError::WrongLength { expected: self.rank(), got: w.coords.len() });
        }
        Ok(())
    }
}

/// `(x|y)` in the normalized form.
pub fn inner_product(rs: &RootSystem, x: &Weight, y: &Weight) -> Result<Rational, RootError> {
    rs.check_weight(x)?;
    rs.check_weight(y)?;
    Ok(rs.inner(x, y))
}

/// `h^∨ = 1 + (ρ|θ^∨)`, computed from the root datum.
pub fn dual_coxeter(ty: SimpleType) -> i64 {
    let rs = build_root_system(ty);
    let rho_theta = rs.pair_root(&rs.rho(), &rs.theta);
    let theta_norm = rs.root_inner(&rs.theta, &rs.theta);
    let v = Rational::one() + int(2) * rho_theta / theta_norm;
    exactmath::rational::to_i64(&v).expect("integral dual Coxeter number")
}

/// Weyl dimension formula.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u128, RootError> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant_integral() {
        return Err(RootError::NotDominantIntegral(lambda.to_string()));
    }
    let lr = lambda.add(&rs.rho());
    let rho = rs.rho();
    let mut acc = Rational::one();
    for a in &rs.positive_roots {
        acc = acc * rs.pair_root(&lr, a) / rs.pair_root(&rho, a);
    }
    Ok(exactmath::rational::to_i64(&acc).expect("integral dimension") as u128)
}
