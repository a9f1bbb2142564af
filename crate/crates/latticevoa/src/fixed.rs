//! Fixed-point subalgebras and identification of reductive Lie algebras over Q.

use std::collections::BTreeMap;

use exactmath::rational::{approximate, int, to_f64};
use exactmath::{float_eigen, Rational, RationalMatrix};
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootdata::{classify_cartan, SemisimpleTypeWithLevels};

use crate::algebra::{Elem, LatticeLie, LieAutomorphism};
use crate::LatticeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pivot {
    Cartan(usize),
    Root(usize),
}

/// `L^g` with a basis in reduced echelon form.
#[derive(Clone, Debug)]
pub struct FixedSubalgebra {
    pub basis: Vec<Elem>,
    pivots: Vec<Pivot>,
    pub cartan_dim: usize,
    pub fixed_roots: usize,
    pub root_orbits: usize,
}

impl FixedSubalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an element of `L^g` in [`FixedSubalgebra::basis`].
    pub fn coords(&self, x: &Elem) -> Vec<Rational> {
        self.pivots
            .iter()
            .map(|p| match p {
                Pivot::Cartan(i) => x.cartan[*i].clone(),
                Pivot::Root(k) => x.roots.get(k).cloned().unwrap_or_else(Rational::zero),
            })
            .collect()
    }

    pub fn element(&self, c: &[Rational]) -> Elem {
        let mut out = Elem::zero(self.basis.first().map_or(0, |b| b.cartan.len()));
        for (b, x) in self.basis.iter().zip(c) {
            out.add_scaled(b, x);
        }
        out
    }
}

fn rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// The subalgebra fixed by a finite-order automorphism.
pub fn fixed_subalgebra(lie: &LatticeLie, g: &LieAutomorphism) -> Result<FixedSubalgebra, LatticeError> {
    let n = lie.rank();
    let order = g.order().ok_or_else(|| LatticeError::NotIsometry("automorphism of infinite order".into()))?;
    let mut basis = Vec::new();
    let mut pivots = Vec::new();

    let a_minus_i = RationalMatrix::from_fn(n, n, |i, j| int(g.matrix[i][j] - i64::from(i == j)));
    let cartan_rows = rref(a_minus_i.kernel());
    for row in &cartan_rows {
        let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
        let mut e = Elem::zero(n);
        e.cartan = row.clone();
        basis.push(e);
        pivots.push(Pivot::Cartan(p));
    }

    let mut seen = vec![false; lie.roots.len()];
    let (mut fixed_roots, mut root_orbits) = (0, 0);
    for k in 0..lie.roots.len() {
        if seen[k] {
            continue;
        }
        let start = lie.basis_elem(n + k);
        let mut x = Elem::zero(n);
        let mut y = start;
        let mut size = 0;
        for _ in 0..order {
            for key in y.roots.keys() {
                if !seen[*key] {
                    seen[*key] = true;
                    size += 1;
                }
            }
            x.add_scaled(&y, &Rational::one());
            y = g.apply(&y);
        }
        let Some(c) = x.roots.get(&k).cloned() else { continue };
        basis.push(x.scale(&c.recip()));
        pivots.push(Pivot::Root(k));
        if size == 1 {
            fixed_roots += 1;
        } else {
            root_orbits += 1;
        }
    }
    Ok(FixedSubalgebra { basis, pivots, cartan_dim: cartan_rows.len(), fixed_roots, root_orbits })
}

/// Structure constants of `L^g` and everything derived from them.
struct Structure {
    d: usize,
    /// `ad[i][j]` = coordinates of `[b_i, b_j]`, sparse.
    ad: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl Structure {
    fn new(lie: &LatticeLie, fixed: &FixedSubalgebra) -> Result<Self, LatticeError> {
        let d = fixed.dim();
        let mut ad = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let z = lie.bracket(&fixed.basis[i], &fixed.basis[j]);
                if z.is_zero() {
                    continue;
                }
                let c = fixed.coords(&z);
                if fixed.element(&c) != z {
                    return Err(LatticeError::NotIsometry("fixed subspace is not closed under the bracket".into()));
                }
                ad[i][j] = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            }
        }
        Ok(Self { d, ad })
    }

    fn ad_matrix(&self, x: &[Rational]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.d, self.d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.d {
                for (k, c) in &self.ad[i][j] {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.ad_matrix(x).mul_vec(y).expect("matching dimensions")
    }
}

fn shifted(m: &RationalMatrix, c: &Rational) -> RationalMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        out[(i, i)] -= c;
    }
    out
}

type RootData = (Vec<Vec<Rational>>, Vec<(Vec<Complex64>, Vec<Complex64>)>);

fn rayleigh(w: &[Complex64], z: &[Complex64]) -> Complex64 {
    let num: Complex64 = w.iter().zip(z).map(|(a, b)| a * b.conj()).sum();
    let den: f64 = z.iter().map(|b| b.norm_sqr()).sum();
    num / den
}

/// A Cartan subalgebra `H` and the roots of `H` as functionals on its basis, each with a root vector.
fn root_decomposition(st: &Structure, torus_dim: usize, rng: &mut ChaCha8Rng) -> Result<RootData, LatticeError> {
    let ident = |s: &str| LatticeError::RoundingUnverified(s.to_string());
    let d = st.d;
    // the centralizer of the fixed torus contains a Cartan subalgebra
    let c0: Vec<usize> = (0..d).filter(|&k| (0..torus_dim).all(|t| st.ad[t][k].is_empty())).collect();
    let mut x = vec![Rational::zero(); d];
    for &k in &c0 {
        x[k] = int(rng.gen_range(1..=1_000_000));
    }
    let h_basis = st.ad_matrix(&x).kernel();
    let r = h_basis.len();
    for a in &h_basis {
        for b in &h_basis {
            if st.bracket(a, b).iter().any(|v| !v.is_zero()) {
                return Err(ident("centralizer is not abelian"));
            }
        }
    }

    let mut h = vec![Rational::zero(); d];
    for v in &h_basis {
        let c = int(rng.gen_range(1..=1_000_000));
        for (x, y) in h.iter_mut().zip(v) {
            *x += &c * y;
        }
    }
    let ad_h = st.ad_matrix(&h);
    let size = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| to_f64(&ad_h[(i, j)]).abs()).fold(1.0, f64::max);
    let clusters = float_eigen(&ad_h, 1e-9 * size)?;
    let ad_basis: Vec<Vec<Vec<f64>>> =
        h_basis.iter().map(|v| st.ad_matrix(v)).map(|m| (0..d).map(|i| (0..d).map(|j| to_f64(&m[(i, j)])).collect()).collect()).collect();
    let apply = |m: &[Vec<f64>], z: &[Complex64]| -> Vec<Complex64> { m.iter().map(|row| row.iter().zip(z).map(|(a, b)| b * a).sum()).collect() };

    let mut roots = Vec::new();
    let mut zero_mult = 0;
    for cl in &clusters {
        if cl.value.norm() < 1e-8 * size {
            zero_mult += cl.multiplicity;
            continue;
        }
        if cl.multiplicity != 1 {
            return Err(ident("generic Cartan element has a repeated nonzero eigenvalue"));
        }
        let z = &cl.vectors[0];
        let functional = ad_basis.iter().map(|m| rayleigh(&apply(m, z), z)).collect();
        roots.push((functional, z.clone()));
    }
    if zero_mult != r {
        return Err(ident("zero weight space differs from the Cartan subalgebra"));
    }
    Ok((h_basis, roots))
}

/// Names the reductive Lie algebra `L^g` with levels read off from the invariant form.
///
/// Each simple ideal of level `k` has Casimir eigenvalue `2h∨/k` on itself; these are
/// recovered in floating point, rounded, and then confirmed by exact kernel dimensions.
pub fn identify_type(lie: &LatticeLie, fixed: &FixedSubalgebra, seed: u64) -> Result<SemisimpleTypeWithLevels, LatticeError> {
    let ident = |s: &str| LatticeError::RoundingUnverified(s.to_string());
    let d = fixed.dim();
    let st = Structure::new(lie, fixed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Casimir Ω = Σ F⁻¹_ij ad(b_i) ad(b_j)
    let f = RationalMatrix::from_fn(d, d, |i, j| lie.form(&fixed.basis[i], &fixed.basis[j]));
    let finv = f.inverse()?;
    let mut omega = RationalMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let fij = &finv[(i, j)];
            if fij.is_zero() {
                continue;
            }
            for k in 0..d {
                for (m, c) in &st.ad[j][k] {
                    let w = fij * c;
                    for (l, e) in &st.ad[i][*m] {
                        omega[(*l, k)] += &w * e;
                    }
                }
            }
        }
    }

    let centre = omega.kernel();
    for z in &centre {
        if !st.ad_matrix(z).is_zero() {
            return Err(ident("kernel of the Casimir is not central"));
        }
    }

    let (h_basis, roots) = (0..4)
        .map(|_| root_decomposition(&st, fixed.cartan_dim, &mut rng))
        .find(Result::is_ok)
        .unwrap_or_else(|| Err(ident("no regular element found in four draws")))?;
    let r = h_basis.len();
    let scale = roots.iter().flat_map(|(f, _)| f.iter().map(|z| z.norm())).fold(1.0, f64::max);
    let tol = 1e-6 * scale;
    let close = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).all(|(x, y)| (x - y).norm() < tol);
    let find = |v: &[Complex64]| roots.iter().position(|(f, _)| close(f, v));
    let dir: Vec<Complex64> = (0..r).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let height = |f: &[Complex64]| f.iter().zip(&dir).map(|(a, b)| a * b).sum::<Complex64>().re;
    if roots.iter().any(|(f, _)| height(f).abs() < tol) {
        return Err(ident("positivity functional vanishes on a root"));
    }
    let positive: Vec<usize> = (0..roots.len()).filter(|&i| height(&roots[i].0) > 0.0).collect();
    let simple: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&i| {
            !positive.iter().any(|&p| {
                let rest: Vec<Complex64> = roots[i].0.iter().zip(&roots[p].0).map(|(a, b)| a - b).collect();
                find(&rest).is_some_and(|q| positive.contains(&q))
            })
        })
        .collect();

    let add = |a: &[Complex64], b: &[Complex64], k: f64| -> Vec<Complex64> { a.iter().zip(b).map(|(x, y)| x + y * k).collect() };
    let cartan: Vec<Vec<i64>> = simple
        .iter()
        .map(|&i| {
            simple
                .iter()
                .map(|&j| {
                    if i == j {
                        return 2;
                    }
                    let q = (1..=3).take_while(|&k| find(&add(&roots[i].0, &roots[j].0, k as f64)).is_some()).count();
                    -(q as i64)
                })
                .collect()
        })
        .collect();
    let components = classify_cartan(&cartan)?;

    let omega_f: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| to_f64(&omega[(i, j)])).collect()).collect();
    let mut ideals = Vec::new();
    let mut by_eigenvalue: BTreeMap<Rational, usize> = BTreeMap::new();
    for (t, nodes) in &components {
        let z = &roots[simple[nodes[0]]].1;
        let w: Vec<Complex64> = omega_f.iter().map(|row| row.iter().zip(z).map(|(a, b)| b * a).sum()).collect();
        let c = approximate(rayleigh(&w, z).re, 10_000);
        if c <= Rational::zero() {
            return Err(ident("nonpositive Casimir eigenvalue"));
        }
        let level = int(2 * t.dual_coxeter_formula() as i64) / &c;
        *by_eigenvalue.entry(c).or_insert(0) += t.dim();
        ideals.push((*t, level));
    }
    let rank_sum: usize = components.iter().map(|(t, _)| t.rank()).sum();
    if rank_sum + centre.len() != r {
        return Err(ident("ranks of the ideals and centre do not add up"));
    }
    let mut total = centre.len();
    for (c, dim) in &by_eigenvalue {
        let got = d - shifted(&omega, c).rank();
        if got != *dim {
            return Err(LatticeError::RoundingUnverified(format!("Casimir eigenvalue {c} has multiplicity {got}, expected {dim}")));
        }
        total += got;
    }
    if total != d {
        return Err(ident("Casimir eigenspaces do not exhaust the algebra"));
    }
    Ok(SemisimpleTypeWithLevels::new(ideals, centre.len()))
}
