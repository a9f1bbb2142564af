use nalgebra::linalg::balancing::balance_parlett_reinsch;
use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::cyclo3::Cyclo3;
use crate::error::MathError;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::rational::{to_f64, Rational};

pub const DEFAULT_EIGEN_TOL: f64 = 1e-9;

/// Exact scalars that embed into the complex numbers.
pub trait ToComplex {
    fn to_c64(&self) -> Complex64;
}

impl ToComplex for Rational {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(self), 0.0)
    }
}

impl ToComplex for Cyclo3 {
    fn to_c64(&self) -> Complex64 {
        self.to_complex()
    }
}

/// One eigenvalue cluster with an orthonormal basis of its eigenspace.
#[derive(Clone, Debug)]
pub struct EigenCluster {
    pub value: Complex64,
    pub multiplicity: usize,
    pub vectors: Vec<Vec<Complex64>>,
}

/// Eigen-decomposition of a diagonalizable matrix in floating point.
///
/// Eigenvalues within `tol` of each other (single linkage) form one cluster; each
/// returned vector satisfies `‖Av − λv‖ < tol·‖v‖` or the call fails.
pub fn float_eigen<F: Field + ToComplex>(a: &Matrix<F>, tol: f64) -> Result<Vec<EigenCluster>, MathError> {
    if !a.is_square() {
        return Err(MathError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let m = DMatrix::from_fn(n, n, |i, j| a[(i, j)].to_c64());
    let scale = 1.0 + m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let eigs = eigenvalues(&m)?;
    let gap = tol.max(1e-7 * scale);
    let clusters = cluster(eigs.iter().copied().collect(), gap);

    let mut out = Vec::with_capacity(clusters.len());
    for members in clusters {
        let k = members.len();
        let lambda = members.iter().sum::<Complex64>() / k as f64;
        let lambda = snap(lambda, gap);
        let shifted = &m - DMatrix::identity(n, n) * lambda;
        let svd = shifted.svd(false, true);
        let vt = svd.v_t.expect("right singular vectors requested");
        let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
        order.sort_by(|&x, &y| svd.singular_values[x].total_cmp(&svd.singular_values[y]));
        let mut vectors = Vec::with_capacity(k);
        for &idx in order.iter().take(k) {
            let v: Vec<Complex64> = vt.row(idx).iter().map(|z| z.conj()).collect();
            let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let residual = (0..n)
                .map(|i| {
                    let av: Complex64 = (0..n).map(|j| m[(i, j)] * v[j]).sum();
                    (av - lambda * v[i]).norm_sqr()
                })
                .sum::<f64>()
                .sqrt();
            if !(residual < tol * vn) {
                return Err(MathError::ResidualExceeded { residual, bound: tol * vn });
            }
            vectors.push(v);
        }
        out.push(EigenCluster { value: lambda, multiplicity: k, vectors });
    }
    out.sort_by(|x, y| x.value.re.total_cmp(&y.value.re).then(x.value.im.total_cmp(&y.value.im)));
    Ok(out)
}

/// Schur eigenvalues with a bounded iteration count; real input is balanced first.
fn eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<Complex64>, MathError> {
    let n = m.nrows();
    let max_niter = 1000 * n;
    if m.iter().all(|z| z.im == 0.0) {
        let mut re = m.map(|z| z.re);
        balance_parlett_reinsch(&mut re);
        let schur = Schur::try_new(re, f64::EPSILON, max_niter).ok_or(MathError::NoConvergence(max_niter))?;
        Ok(schur.complex_eigenvalues().iter().copied().collect())
    } else {
        let schur = Schur::try_new(m.clone(), f64::EPSILON, max_niter).ok_or(MathError::NoConvergence(max_niter))?;
        schur.eigenvalues().map(|v| v.iter().copied().collect()).ok_or(MathError::NoConvergence(max_niter))
    }
}

/// Single-linkage clustering in the complex plane.
fn cluster(values: Vec<Complex64>, gap: f64) -> Vec<Vec<Complex64>> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() < gap {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Complex64>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(values[i]);
    }
    groups.into_values().collect()
}

fn snap(z: Complex64, gap: f64) -> Complex64 {
    let re = if z.re.abs() < gap { 0.0 } else { z.re };
    let im = if z.im.abs() < gap { 0.0 } else { z.im };
    Complex64::new(re, im)
}
