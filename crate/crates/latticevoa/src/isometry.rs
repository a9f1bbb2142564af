use std::collections::{HashSet, VecDeque};
use std::fmt;

use exactmath::rational::{int, rat};
use exactmath::{Cyclo3, ExactMatrix, Rational, RationalMatrix};
use num_traits::{One, ToPrimitive, Zero};
use rootdata::{build_root_system, Family, SimpleType};

use crate::lattice::EvenLattice;
use crate::LatticeError;

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Smallest `k ≤ 60` with `a^k = 1`.
pub fn matrix_order(a: &IntMatrix) -> Option<u32> {
    let id = identity(a.len());
    let mut p = a.clone();
    for k in 1..=60 {
        if p == id {
            return Some(k);
        }
        p = mat_mul(&p, a);
    }
    None
}

/// Characteristic polynomial `det(xI − A)`, coefficients from the constant term up.
pub fn char_poly(a: &IntMatrix) -> Vec<Rational> {
    // Faddeev–LeVerrier
    let n = a.len();
    let am = RationalMatrix::from_fn(n, n, |i, j| int(a[i][j]));
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = am.mul(&m).expect("square");
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        m = next;
        let am_m = am.mul(&m).expect("square");
        let tr: Rational = (0..n).map(|i| am_m[(i, i)].clone()).fold(Rational::zero(), |s, x| s + x);
        coeffs[n - k] = -tr / int(k as i64);
    }
    coeffs
}

pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(x² + x + 1)^k`.
pub fn cyclotomic3_power(k: usize) -> Vec<Rational> {
    let base = vec![int(1), int(1), int(1)];
    (0..k).fold(vec![int(1)], |acc, _| poly_mul(&acc, &base))
}

/// Simple reflection `s_i` on simple-root coordinates of a simply-laced type.
pub fn reflection(t: SimpleType, i: usize) -> IntMatrix {
    let rs = build_root_system(t);
    let n = t.rank();
    let mut m = identity(n);
    for j in 0..n {
        // s_i(x) = x − (α_i|x) α_i
        m[i][j] -= rs.cartan[i][j];
    }
    m
}

/// Product `s_1 s_2 ⋯ s_n`.
pub fn coxeter_element(t: SimpleType) -> IntMatrix {
    (0..t.rank()).fold(identity(t.rank()), |acc, i| mat_mul(&acc, &reflection(t, i)))
}

/// The Weyl group as matrices, in breadth-first order from the identity.
pub fn weyl_group(t: SimpleType) -> Vec<IntMatrix> {
    let gens: Vec<IntMatrix> = (0..t.rank()).map(|i| reflection(t, i)).collect();
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut order = Vec::new();
    let mut q = VecDeque::new();
    let id = identity(t.rank());
    seen.insert(id.clone());
    q.push_back(id);
    while let Some(w) = q.pop_front() {
        for g in &gens {
            let x = mat_mul(&w, g);
            if seen.insert(x.clone()) {
                q.push_back(x);
            }
        }
        order.push(w);
    }
    order
}

fn d4() -> SimpleType {
    SimpleType::new(Family::D, 4).expect("D4")
}

fn e6() -> SimpleType {
    SimpleType::new(Family::E, 6).expect("E6")
}

fn is_fixed_point_free(a: &IntMatrix) -> bool {
    let n = a.len();
    let m = RationalMatrix::from_fn(n, n, |i, j| int(a[i][j] - i64::from(i == j)));
    m.rank() == n
}

/// Checks `a` is an order-3 isometry of `t` with characteristic polynomial `(x²+x+1)^{n/2}`.
pub fn certify_fixed_point_free(t: SimpleType, a: &IntMatrix) -> Result<(), LatticeError> {
    let g = build_root_system(t).cartan;
    if mat_mul(&mat_mul(&transpose(a), &g), a) != g {
        return Err(LatticeError::NotIsometry(format!("candidate on {t} does not preserve the form")));
    }
    if t.rank() % 2 != 0 || char_poly(a) != cyclotomic3_power(t.rank() / 2) {
        return Err(LatticeError::NotIsometry(format!("candidate on {t} is not fixed-point-free of order 3")));
    }
    Ok(())
}

/// Fixed-point-free order-3 isometry of `E6`: the fourth power of a Coxeter element.
pub fn phi_e6() -> Result<IntMatrix, LatticeError> {
    let c = coxeter_element(e6());
    let m = mat_mul(&mat_mul(&c, &c), &mat_mul(&c, &c));
    certify_fixed_point_free(e6(), &m)?;
    Ok(m)
}

/// Triality diagram automorphism of `D4`, cycling the three outer nodes.
pub fn triality() -> IntMatrix {
    // node 1 is central; outer nodes 0 → 2 → 3 → 0
    let perm = [2usize, 1, 3, 0];
    let mut m = vec![vec![0i64; 4]; 4];
    for (j, &pj) in perm.iter().enumerate() {
        m[pj][j] = 1;
    }
    m
}

/// Fixed-point-free order-3 isometry of `D4` outside the Weyl group: `τ·w`, first in BFS order.
pub fn phi_d4() -> Result<IntMatrix, LatticeError> {
    let tau = triality();
    for w in weyl_group(d4()) {
        let m = mat_mul(&tau, &w);
        if matrix_order(&m) == Some(3) && is_fixed_point_free(&m) {
            certify_fixed_point_free(d4(), &m)?;
            return Ok(m);
        }
    }
    Err(LatticeError::NotIsometry("no fixed-point-free triality element found".into()))
}

/// Order-3 Weyl element `s_0 s_1` of `D4`.
pub fn psi_d4() -> Result<IntMatrix, LatticeError> {
    let m = mat_mul(&reflection(d4(), 0), &reflection(d4(), 1));
    if matrix_order(&m) != Some(3) {
        return Err(LatticeError::NotIsometry("ψ does not have order 3".into()));
    }
    Ok(m)
}

pub fn invert_order3(a: &IntMatrix) -> IntMatrix {
    mat_mul(a, a)
}

/// Target component `j` receives `maps[j].1 · γ_{maps[j].0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMap {
    pub source: usize,
    pub label: String,
}

/// Isometry of the ambient space preserving the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeIsometry {
    pub name: String,
    /// Action on simple-root coordinates of `Q` (column vectors).
    pub matrix: IntMatrix,
    /// Action on the lattice basis (columns are images of basis vectors).
    pub basis_matrix: IntMatrix,
    pub description: Vec<ComponentMap>,
}

impl LatticeIsometry {
    /// Assembles a block map and checks it preserves the lattice and its form.
    pub fn from_blocks(name: &str, lat: &EvenLattice, blocks: Vec<(usize, String, IntMatrix)>) -> Result<Self, LatticeError> {
        let n = lat.rank();
        let offsets = lat.code.offsets();
        let mut a = vec![vec![0i64; n]; n];
        for (target, (source, _, m)) in blocks.iter().enumerate() {
            let (to, so) = (offsets[target], offsets[*source]);
            if lat.code.components[target] != lat.code.components[*source] {
                return Err(LatticeError::NotIsometry("component types differ".into()));
            }
            for (i, row) in m.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    a[to + i][so + j] = x;
                }
            }
        }
        let description = blocks.into_iter().map(|(source, label, _)| ComponentMap { source, label }).collect();
        Self::from_matrix(name, lat, a, description)
    }

    pub fn from_matrix(name: &str, lat: &EvenLattice, a: IntMatrix, description: Vec<ComponentMap>) -> Result<Self, LatticeError> {
        let g = &lat.ambient_gram;
        if &mat_mul(&mat_mul(&transpose(&a), g), &a) != g {
            return Err(LatticeError::NotIsometry(format!("{name} does not preserve the form")));
        }
        // M = (Bᵀ)^{-1} A Bᵀ with basis rows B
        let n = lat.rank();
        let bt = RationalMatrix::from_fn(n, n, |i, j| lat.basis[j][i].clone());
        let am = RationalMatrix::from_fn(n, n, |i, j| int(a[i][j]));
        let m = bt.inverse()?.mul(&am)?.mul(&bt)?;
        let mut basis_matrix = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let x = &m[(i, j)];
                if !x.is_integer() {
                    return Err(LatticeError::NotIsometry(format!("{name} does not preserve the lattice")));
                }
                basis_matrix[i][j] = x.to_integer().to_i64().expect("small");
            }
        }
        Ok(Self { name: name.into(), matrix: a, basis_matrix, description })
    }

    pub fn identity(lat: &EvenLattice) -> Self {
        let n = lat.code.components.len();
        let description = (0..n).map(|i| ComponentMap { source: i, label: "1".into() }).collect();
        Self::from_matrix("id", lat, identity(lat.rank()), description).expect("identity preserves everything")
    }

    pub fn order(&self) -> Option<u32> {
        matrix_order(&self.matrix)
    }

    /// Dimension of the fixed subspace.
    pub fn fixed_rank(&self) -> usize {
        let n = self.matrix.len();
        let m = RationalMatrix::from_fn(n, n, |i, j| int(self.matrix[i][j] - i64::from(i == j)));
        n - m.rank()
    }

    pub fn power(&self, k: u32) -> IntMatrix {
        (0..k).fold(identity(self.matrix.len()), |acc, _| mat_mul(&acc, &self.matrix))
    }
}

impl fmt::Display for LatticeIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.description.iter().map(|c| format!("{}(γ{})", c.label, c.source + 1)).collect();
        write!(f, "{}: ({})", self.name, parts.join(", "))
    }
}

/// The three order-3 isometries used for the orbifold cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsometryName {
    Sigma6,
    Sigma2,
    Sigma4,
}

impl IsometryName {
    pub fn label(self) -> &'static str {
        match self {
            IsometryName::Sigma6 => "σ6",
            IsometryName::Sigma2 => "σ2",
            IsometryName::Sigma4 => "σ4",
        }
    }
}

/// Builds `σ6` on `Ni(E6⁴)` or `σ2`, `σ4` on `Ni(D4⁶)`.
///
/// `σ4` cycles components 4, 5, 6 with twists `φ^{-1}`, `φ` so that the cycle cubes to the
/// identity.
pub fn build_isometry(name: IsometryName, lat: &EvenLattice) -> Result<LatticeIsometry, LatticeError> {
    let ids = |t: SimpleType| identity(t.rank());
    match name {
        IsometryName::Sigma6 => {
            let phi = phi_e6()?;
            let blocks = vec![
                (0, "φ".to_string(), phi),
                (3, "1".to_string(), ids(e6())),
                (1, "1".to_string(), ids(e6())),
                (2, "1".to_string(), ids(e6())),
            ];
            LatticeIsometry::from_blocks(name.label(), lat, blocks)
        }
        IsometryName::Sigma2 => {
            let phi = phi_d4()?;
            let blocks = (0..6).map(|i| (i, "φ".to_string(), phi.clone())).collect();
            LatticeIsometry::from_blocks(name.label(), lat, blocks)
        }
        IsometryName::Sigma4 => {
            let phi = phi_d4()?;
            let phi_inv = invert_order3(&phi);
            let psi = psi_d4()?;
            let blocks = vec![
                (0, "ψ".to_string(), psi),
                (1, "φ".to_string(), phi.clone()),
                (2, "φ⁻¹".to_string(), phi_inv.clone()),
                (5, "1".to_string(), ids(d4())),
                (3, "φ⁻¹".to_string(), phi_inv),
                (4, "φ".to_string(), phi),
            ];
            LatticeIsometry::from_blocks(name.label(), lat, blocks)
        }
    }
}

/// Ground energy `ρ = ¼ Σ_{j=1}^{n−1} (j/n)(1 − j/n) m_j` of the `g`-twisted module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundEnergy {
    pub rho: Rational,
    pub order: u32,
    /// `m_j = dim ker(g − e^{2πij/n})`, `j = 0..n`.
    pub multiplicities: Vec<usize>,
}

impl GroundEnergy {
    /// Whether `x ∈ ρ + (1/n)Z`.
    pub fn grid_contains(&self, x: &Rational) -> bool {
        ((x - &self.rho) * int(self.order as i64)).is_integer()
    }
}

/// `e^{2πi k/6}` in `Q(ω)`.
fn zeta6_pow(k: i64) -> Cyclo3 {
    // ζ6 = 1 + ω
    let z = Cyclo3::new(int(1), int(1));
    let mut acc = Cyclo3::from_int(1);
    for _ in 0..k.rem_euclid(6) {
        acc = &acc * &z;
    }
    acc
}

pub fn twisted_ground_energy(g: &LatticeIsometry) -> Result<GroundEnergy, LatticeError> {
    twisted_ground_energy_of(&g.matrix)
}

/// Ground energy from the eigenvalue multiplicities of a finite-order integer matrix.
pub fn twisted_ground_energy_of(a: &IntMatrix) -> Result<GroundEnergy, LatticeError> {
    let order = matrix_order(a).ok_or(LatticeError::UnsupportedOrder(0))?;
    if 6 % order != 0 {
        return Err(LatticeError::UnsupportedOrder(order));
    }
    let n = a.len();
    let step = 6 / order as i64;
    let mut multiplicities = Vec::new();
    let mut rho = Rational::zero();
    for j in 0..order as i64 {
        let z = zeta6_pow(j * step);
        let m = ExactMatrix::from_fn(n, n, |r, c| {
            let x = Cyclo3::from_int(a[r][c]);
            if r == c {
                &x - &z
            } else {
                x
            }
        });
        let mj = n - m.rank();
        multiplicities.push(mj);
        let t = rat(j, order as i64);
        rho += &t * (int(1) - &t) * int(mj as i64);
    }
    rho /= int(4);
    Ok(GroundEnergy { rho, order, multiplicities })
}

/// Orthogonal projection of `u` onto the fixed space of `g`, and its norm.
pub fn fixed_projection_norm(lat: &EvenLattice, g: &LatticeIsometry, u: &[Rational]) -> (Vec<Rational>, Rational) {
    let order = g.order().expect("finite order");
    let n = lat.rank();
    let mut acc = vec![Rational::zero(); n];
    let mut p = identity(n);
    for _ in 0..order {
        for i in 0..n {
            for j in 0..n {
                if p[i][j] != 0 {
                    acc[i] += &u[j] * int(p[i][j]);
                }
            }
        }
        p = mat_mul(&p, &g.matrix);
    }
    let proj: Vec<Rational> = acc.into_iter().map(|x| x / int(order as i64)).collect();
    let norm = lat.inner(&proj, &proj);
    (proj, norm)
}
