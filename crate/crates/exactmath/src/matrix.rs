use std::fmt;

use num_traits::Zero;

use crate::cyclo3::Cyclo3;
use crate::error::MathError;
use crate::field::Field;
use crate::rational::Rational;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type ExactMatrix = Matrix<Cyclo3>;
pub type RationalMatrix = Matrix<Rational>;

/// Outcome of [`Matrix::solve_linear`].
#[derive(Clone, PartialEq, Debug)]
pub enum Solution<F: Field> {
    Solved { particular: Vec<F>, kernel: Vec<Vec<F>> },
    Inconsistent,
}

/// Reduced row echelon form together with its pivot columns.
struct Rref<F: Field> {
    m: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Columns given as vectors.
    pub fn from_columns(cols: &[Vec<F>], rows: usize) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MathError> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MathError> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| x.times(s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MathError> {
        if self.cols != other.rows {
            return Err(MathError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].plus(&a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, MathError> {
        if v.len() != self.cols {
            return Err(MathError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(F::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.plus(&a.times(b))
                    }
                })
            })
            .collect())
    }

    pub fn pow(&self, mut e: u32) -> Result<Self, MathError> {
        self.check_square()?;
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = m[(r, j)].times(&inv);
                }
            }
            let pivot_row: Vec<F> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !pivot_row[j].is_zero() {
                        m[(i, j)] = m[(i, j)].minus(&f.times(&pivot_row[j]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Null-space basis. Each vector has a 1 in one free column and 0 in the others.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let Rref { m, pivots } = self.rref();
        kernel_from_rref(&m, &pivots)
    }

    /// Returns a particular solution plus a kernel basis, or `Inconsistent`.
    pub fn solve_linear(&self, b: &[F]) -> Result<Solution<F>, MathError> {
        if b.len() != self.rows {
            return Err(MathError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let Rref { m, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut particular = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = m[(r, self.cols)].clone();
        }
        let coeff = Self::from_fn(m.rows, self.cols, |i, j| m[(i, j)].clone());
        Ok(Solution::Solved { particular, kernel: kernel_from_rref(&coeff, &pivots) })
    }

    pub fn inverse(&self) -> Result<Self, MathError> {
        self.check_square()?;
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let Rref { m, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(MathError::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| m[(i, n + j)].clone()))
    }

    pub fn det(&self) -> Result<F, MathError> {
        self.check_square()?;
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(F::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.negated();
            }
            let piv = m[(c, c)].clone();
            det = det.times(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].times(&inv);
                for j in c..n {
                    let t = f.times(&m[(c, j)]);
                    m[(i, j)] = m[(i, j)].minus(&t);
                }
            }
        }
        Ok(det)
    }

    fn check_square(&self) -> Result<(), MathError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MathError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), MathError> {
        if self.rows != other.rows {
            return Err(MathError::DimensionMismatch { expected: self.rows, got: other.rows });
        }
        if self.cols != other.cols {
            return Err(MathError::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        Ok(())
    }
}

fn kernel_from_rref<F: Field>(m: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; m.cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(); m.cols];
            v[f] = F::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = m[(r, f)].negated();
            }
            v
        })
        .collect()
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn q(rows: &[&[i64]]) -> RationalMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn degenerate_two_by_two() {
        let a = q(&[&[1, 1], &[1, 1]]);
        let sol = a.solve_linear(&[int(1), int(1)]).unwrap();
        assert_eq!(
            sol,
            Solution::Solved { particular: vec![int(1), int(0)], kernel: vec![vec![int(-1), int(1)]] }
        );
    }

    #[test]
    fn inconsistent_system() {
        let a = q(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve_linear(&[int(1), int(2)]).unwrap(), Solution::Inconsistent);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = q(&[&[1, 1], &[1, 1]]);
        assert!(matches!(a.solve_linear(&[int(1)]), Err(MathError::DimensionMismatch { .. })));
    }

    #[test]
    fn det_and_inverse() {
        let a = q(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.det().unwrap(), int(4));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn singular_inverse() {
        assert_eq!(q(&[&[1, 2], &[2, 4]]).inverse(), Err(MathError::Singular));
    }
}
