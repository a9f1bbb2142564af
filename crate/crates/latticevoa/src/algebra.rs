//! The weight-one Lie algebra `h ⊕ ⊕_α C e^α` of a lattice VOA, over Q.

use std::collections::{BTreeMap, HashMap};

use exactmath::rational::int;
use exactmath::Rational;
use num_traits::Zero;

use crate::intmat::{integer_kernel, solve_mod2};
use crate::isometry::{identity, mat_mul, mat_vec, matrix_order, transpose, IntMatrix};
use crate::lattice::EvenLattice;
use crate::LatticeError;

/// An element `h + Σ c_α e^α`; root keys index [`LatticeLie::roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    pub cartan: Vec<Rational>,
    pub roots: BTreeMap<usize, Rational>,
}

impl Elem {
    pub fn zero(rank: usize) -> Self {
        Self { cartan: vec![Rational::zero(); rank], roots: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.iter().all(Zero::is_zero) && self.roots.values().all(Zero::is_zero)
    }

    pub fn add_root(&mut self, k: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.roots.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.roots.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, other: &Elem, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (x, y) in self.cartan.iter_mut().zip(&other.cartan) {
            *x += y * c;
        }
        for (k, v) in &other.roots {
            self.add_root(*k, &(v * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> Elem {
        let mut out = Elem::zero(self.cartan.len());
        out.add_scaled(self, c);
        out
    }
}

/// Weight-one Lie algebra of `V_L` for an even lattice whose roots lie in a root lattice `Q`.
#[derive(Clone, Debug)]
pub struct LatticeLie {
    pub gram: IntMatrix,
    pub roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    neg: Vec<usize>,
}

impl LatticeLie {
    pub fn new(gram: IntMatrix, roots: Vec<Vec<i64>>) -> Self {
        let index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let neg = roots.iter().map(|r| index[&r.iter().map(|x| -x).collect::<Vec<_>>()]).collect();
        Self { gram, roots, index, neg }
    }

    pub fn from_lattice(lat: &EvenLattice) -> Result<Self, LatticeError> {
        Ok(Self::new(lat.ambient_gram.clone(), lat.roots()?))
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.roots.len()
    }

    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn negative(&self, k: usize) -> usize {
        self.neg[k]
    }

    /// Basis vector: `h_i` for `i < rank`, else `e^{α_{i−rank}}`.
    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = Elem::zero(self.rank());
        if i < self.rank() {
            e.cartan[i] = int(1);
        } else {
            e.roots.insert(i - self.rank(), int(1));
        }
        e
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// `ε(α, β) = (−1)^{Σ_{i>j} a_i b_j G_ij}`.
    pub fn epsilon(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..i {
                s += a[i] * b[j] * self.gram[i][j];
            }
        }
        if s.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(h | β)` for `h` in Cartan coordinates.
    fn cartan_pair(&self, h: &[Rational], b: &[i64]) -> Rational {
        let n = self.rank();
        let mut s = Rational::zero();
        for i in 0..n {
            if h[i].is_zero() {
                continue;
            }
            let gb: i64 = (0..n).map(|j| self.gram[i][j] * b[j]).sum();
            if gb != 0 {
                s += &h[i] * int(gb);
            }
        }
        s
    }

    pub fn bracket(&self, x: &Elem, y: &Elem) -> Elem {
        let n = self.rank();
        let mut out = Elem::zero(n);
        if x.cartan.iter().any(|c| !c.is_zero()) {
            for (k, c) in &y.roots {
                let p = self.cartan_pair(&x.cartan, &self.roots[*k]);
                out.add_root(*k, &(p * c));
            }
        }
        if y.cartan.iter().any(|c| !c.is_zero()) {
            for (k, c) in &x.roots {
                let p = self.cartan_pair(&y.cartan, &self.roots[*k]);
                out.add_root(*k, &-(p * c));
            }
        }
        for (i, a) in &x.roots {
            for (j, b) in &y.roots {
                let (ra, rb) = (&self.roots[*i], &self.roots[*j]);
                let coef = a * b;
                if self.neg[*i] == *j {
                    let e = int(self.epsilon(ra, rb));
                    for (h, r) in out.cartan.iter_mut().zip(ra) {
                        if *r != 0 {
                            *h += &coef * &e * int(*r);
                        }
                    }
                } else if self.pairing(ra, rb) == -1 {
                    let sum: Vec<i64> = ra.iter().zip(rb).map(|(p, q)| p + q).collect();
                    let k = self.index[&sum];
                    out.add_root(k, &(coef * int(self.epsilon(ra, rb))));
                }
            }
        }
        out
    }

    /// Invariant form: the lattice form on `h`, `⟨e^α | e^{−α}⟩ = ε(α, −α)`.
    pub fn form(&self, x: &Elem, y: &Elem) -> Rational {
        let n = self.rank();
        let mut s = Rational::zero();
        for i in 0..n {
            if x.cartan[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if self.gram[i][j] != 0 {
                    s += &x.cartan[i] * &y.cartan[j] * int(self.gram[i][j]);
                }
            }
        }
        for (i, a) in &x.roots {
            if let Some(b) = y.roots.get(&self.neg[*i]) {
                let r = &self.roots[*i];
                let m: Vec<i64> = r.iter().map(|v| -v).collect();
                s += a * b * int(self.epsilon(r, &m));
            }
        }
        s
    }
}

/// `h ↦ A h`, `e^α ↦ phase(α) e^{Aα}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAutomorphism {
    pub matrix: IntMatrix,
    pub perm: Vec<usize>,
    pub phase: Vec<i8>,
}

impl LieAutomorphism {
    pub fn identity(lie: &LatticeLie) -> Self {
        Self { matrix: identity(lie.rank()), perm: (0..lie.roots.len()).collect(), phase: vec![1; lie.roots.len()] }
    }

    pub fn apply(&self, x: &Elem) -> Elem {
        let cartan = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(&x.cartan).filter(|(a, _)| **a != 0).fold(Rational::zero(), |s, (a, c)| s + c * int(*a)))
            .collect();
        let mut roots = BTreeMap::new();
        for (k, c) in &x.roots {
            let v = if self.phase[*k] == 1 { c.clone() } else { -c.clone() };
            roots.insert(self.perm[*k], v);
        }
        Elem { cartan, roots }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm = other.perm.iter().map(|&k| self.perm[k]).collect();
        let phase = other.perm.iter().zip(&other.phase).map(|(&k, &p)| p * self.phase[k]).collect();
        Self { matrix: mat_mul(&self.matrix, &other.matrix), perm, phase }
    }

    pub fn power(&self, k: u32) -> Self {
        let id = Self { matrix: identity(self.matrix.len()), perm: (0..self.perm.len()).collect(), phase: vec![1; self.perm.len()] };
        (0..k).fold(id, |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> Option<u32> {
        let base = matrix_order(&self.matrix)?;
        (1..=4).map(|m| base * m).find(|&k| self.power(k).is_identity())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.matrix.len())
            && self.perm.iter().enumerate().all(|(i, &p)| i == p)
            && self.phase.iter().all(|&p| p == 1)
    }

    pub fn inverse(&self) -> Self {
        let k = self.order().expect("finite order");
        self.power(k - 1)
    }

    /// Exact check that brackets of all basis pairs and the form are preserved.
    pub fn is_automorphism_of(&self, lie: &LatticeLie) -> bool {
        let g = &lie.gram;
        if &mat_mul(&mat_mul(&transpose(&self.matrix), g), &self.matrix) != g {
            return false;
        }
        for (k, r) in lie.roots.iter().enumerate() {
            if lie.root_index(&mat_vec(&self.matrix, r)) != Some(self.perm[k]) {
                return false;
            }
        }
        let m = lie.roots.len();
        for i in 0..m {
            let x = lie.basis_elem(lie.rank() + i);
            let gx = self.apply(&x);
            for j in 0..m {
                let pa = lie.pairing(&lie.roots[i], &lie.roots[j]);
                if pa != -1 && pa != -2 {
                    continue;
                }
                let y = lie.basis_elem(lie.rank() + j);
                if self.apply(&lie.bracket(&x, &y)) != lie.bracket(&gx, &self.apply(&y)) {
                    return false;
                }
            }
        }
        true
    }
}

fn mod2(x: i64) -> u8 {
    x.rem_euclid(2) as u8
}

/// `η(x) = (−1)^{q(x)}` with `q(x) = Σ_{i<j} B_ij x_i x_j + Σ_i B_ii C(x_i, 2) + λ·x` over F2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseFunction {
    pub b: Vec<Vec<u8>>,
    pub lambda: Vec<u8>,
}

impl PhaseFunction {
    /// The quadratic part for `A`, with `ε(Aα, Aβ) ε(α, β) = (−1)^{αᵀ B β}`, and `λ = 0`.
    pub fn for_isometry(lie: &LatticeLie, a: &IntMatrix) -> Self {
        let n = lie.rank();
        let mut e = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..i {
                e[i][j] = lie.gram[i][j];
            }
        }
        let aea = mat_mul(&mat_mul(&transpose(a), &e), a);
        let b = (0..n).map(|i| (0..n).map(|j| mod2(aea[i][j] - e[i][j])).collect()).collect();
        Self { b, lambda: vec![0; n] }
    }

    fn quadratic(&self, x: &[i64]) -> u8 {
        let n = x.len();
        let mut s = 0i64;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            if self.b[i][i] == 1 {
                s += x[i] * (x[i] - 1) / 2;
            }
            for j in i + 1..n {
                if self.b[i][j] == 1 {
                    s += x[i] * x[j];
                }
            }
        }
        mod2(s)
    }

    pub fn exponent(&self, x: &[i64]) -> u8 {
        let lin: i64 = x.iter().zip(&self.lambda).map(|(v, l)| v * i64::from(*l)).sum();
        (self.quadratic(x) + mod2(lin)) % 2
    }

    pub fn eval(&self, x: &[i64]) -> i8 {
        if self.exponent(x) == 0 {
            1
        } else {
            -1
        }
    }
}

fn assemble(lie: &LatticeLie, a: &IntMatrix, eta: &PhaseFunction) -> Result<LieAutomorphism, LatticeError> {
    let mut perm = Vec::with_capacity(lie.roots.len());
    let mut phase = Vec::with_capacity(lie.roots.len());
    for r in &lie.roots {
        let k = lie.root_index(&mat_vec(a, r)).ok_or_else(|| LatticeError::NotIsometry("root not mapped to a root".into()))?;
        perm.push(k);
        phase.push(eta.eval(r));
    }
    Ok(LieAutomorphism { matrix: a.clone(), perm, phase })
}

/// Some lift of an isometry of `Q`, with `λ = 0`.
pub fn lift(lie: &LatticeLie, a: &IntMatrix) -> Result<LieAutomorphism, LatticeError> {
    assemble(lie, a, &PhaseFunction::for_isometry(lie, a))
}

/// Lifts an isometry `A` of `Q` to an automorphism of finite order equal to that of `A`,
/// acting trivially on `e^α` for every `α` fixed by `A`.
pub fn standard_lift(lie: &LatticeLie, a: &IntMatrix) -> Result<LieAutomorphism, LatticeError> {
    standard_lift_with_phase(lie, a).map(|(g, _)| g)
}

pub fn standard_lift_with_phase(lie: &LatticeLie, a: &IntMatrix) -> Result<(LieAutomorphism, PhaseFunction), LatticeError> {
    let n = lie.rank();
    let order = matrix_order(a).ok_or_else(|| LatticeError::NoStandardLift("infinite order".into()))?;
    let mut eta = PhaseFunction::for_isometry(lie, a);

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    // the phase product along an orbit is linear; require it to vanish on a basis
    for j in 0..n {
        let mut v = vec![0i64; n];
        v[j] = 1;
        let mut orbit_sum = vec![0i64; n];
        let mut p0 = 0u8;
        for _ in 0..order {
            p0 ^= eta.quadratic(&v);
            for (s, x) in orbit_sum.iter_mut().zip(&v) {
                *s += x;
            }
            v = mat_vec(a, &v);
        }
        rows.push(orbit_sum.iter().map(|&x| mod2(x)).collect());
        rhs.push(p0);
    }
    let a_minus_i: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[i][j] - i64::from(i == j)).collect()).collect();
    for f in integer_kernel(&a_minus_i, n) {
        rows.push(f.iter().map(|&x| mod2(x)).collect());
        rhs.push(eta.quadratic(&f));
    }
    eta.lambda = solve_mod2(&rows, &rhs, n).ok_or_else(|| LatticeError::NoStandardLift("phase system is inconsistent".into()))?;

    let g = assemble(lie, a, &eta)?;
    if g.power(order) != LieAutomorphism::identity(lie) {
        return Err(LatticeError::NoStandardLift(format!("lift does not have order {order}")));
    }
    Ok((g, eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rootdata::{build_root_system, Family, SimpleType};

    fn a2() -> LatticeLie {
        let rs = build_root_system(SimpleType::new(Family::A, 2).unwrap());
        let mut roots: Vec<Vec<i64>> = rs.roots.clone();
        roots.sort();
        LatticeLie::new(rs.cartan.clone(), roots)
    }

    #[test]
    fn sl3_has_dimension_8() {
        assert_eq!(a2().dim(), 8);
    }

    #[test]
    fn epsilon_is_a_commutator_cocycle() {
        let lie = a2();
        for a in &lie.roots {
            for b in &lie.roots {
                let sign = if lie.pairing(a, b).rem_euclid(2) == 0 { 1 } else { -1 };
                assert_eq!(lie.epsilon(a, b) * lie.epsilon(b, a), sign);
            }
        }
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let lie = a2();
        for i in 0..lie.dim() {
            for j in 0..lie.dim() {
                let (x, y) = (lie.basis_elem(i), lie.basis_elem(j));
                let s = lie.bracket(&x, &y);
                let t = lie.bracket(&y, &x).scale(&int(-1));
                assert_eq!(s, t);
            }
        }
    }
}
