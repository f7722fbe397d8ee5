//! Dense matrices over `F_q` with exact Gaussian elimination.

use std::fmt;

use super::field::{Elem, Field};
use super::poly::Poly;
use super::subspace::DependencyFinder;
use super::FieldError;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|e| e.0).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: Elem) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix { field: field.clone(), rows: r, cols: c, data }
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let v: Vec<Vec<Elem>> =
            rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        Matrix::from_rows(field, &v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { Elem::ONE } else { Elem::ZERO })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, FieldError> {
        if self.cols != other.rows {
            return Err(FieldError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        *d = f.add(*d, f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix dimension mismatch")
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| f.sum(self.row(i).iter().zip(v).map(|(&a, &b)| f.mul(a, b))))
            .collect()
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, FieldError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(FieldError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix dimension mismatch")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(self.field.neg(Elem::ONE)))
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        m
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv_nz(self.get(r, c));
            for j in c..cols {
                let v = self.get(r, j);
                self.set(r, j, f.mul(v, inv));
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn nullspace_basis(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>, FieldError> {
        if b.len() != self.rows {
            return Err(FieldError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (b.len(), 1),
            });
        }
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Elem::ZERO; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Elem::ONE);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Monic minimal polynomial of a square matrix.
    pub fn min_poly(&self) -> Result<Poly, FieldError> {
        if !self.is_square() {
            return Err(FieldError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut finder = DependencyFinder::new(&self.field, n * n);
        let mut power = Matrix::identity(&self.field, n);
        loop {
            if let Some(coeffs) = finder.push(power.data.clone()) {
                return Ok(Poly::new(&self.field, coeffs));
            }
            power = power.mul(self);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity() {
        let f = Field::prime(3).unwrap();
        for n in 0..6 {
            assert_eq!(Matrix::identity(&f, n).rank(), n);
        }
    }

    #[test]
    fn jordan_block_min_poly_over_f2() {
        let f = Field::prime(2).unwrap();
        let j = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        // (x+1)^2 = x^2 + 1 over F_2
        assert_eq!(j.min_poly().unwrap().coeffs(), &[Elem(1), Elem(0), Elem(1)]);
    }

    #[test]
    fn nullspace_of_zero_map() {
        let f = Field::prime(2).unwrap();
        assert_eq!(Matrix::zeros(&f, 2, 3).nullspace_basis().len(), 3);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        assert!(m.solve(&[Elem(1), Elem(3)]).unwrap().is_none());
        let x = m.solve(&[Elem(1), Elem(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vec![Elem(1), Elem(2)]);
    }

    #[test]
    fn dimension_mismatch() {
        let f = Field::prime(2).unwrap();
        let a = Matrix::zeros(&f, 2, 3);
        assert!(matches!(a.try_mul(&a), Err(FieldError::DimensionMismatch { .. })));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(2, 2).unwrap();
        let m = Matrix::from_rows(&f, &[vec![Elem(2), Elem(1)], vec![Elem(1), Elem(1)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }
}
