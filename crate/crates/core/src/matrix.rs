//! Dense row-major matrices over a [`Field`].

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![f.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = f.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        *o = f.add(o, &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        f.is_one(v)
                    } else {
                        f.is_zero(v)
                    }
                })
            })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|a| f.is_zero(a))
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(a.get(r, col)))?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = f.inv(a.get(col, col)).expect("nonzero pivot");
            a.scale_row(f, col, &p);
            inv.scale_row(f, col, &p);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let c = a.get(r, col).clone();
                if f.is_zero(&c) {
                    continue;
                }
                let c = f.neg(&c);
                a.add_row_multiple(f, r, col, &c);
                inv.add_row_multiple(f, r, col, &c);
            }
        }
        Some(inv)
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub(crate) fn scale_row<F: Field<Elem = E>>(&mut self, f: &F, i: usize, c: &E) {
        for k in 0..self.cols {
            let v = f.mul(self.get(i, k), c);
            self.set(i, k, v);
        }
    }

    /// Row `dst` += `c` * row `src`.
    pub(crate) fn add_row_multiple<F: Field<Elem = E>>(&mut self, f: &F, dst: usize, src: usize, c: &E) {
        for k in 0..self.cols {
            let s = self.get(src, k);
            if f.is_zero(s) {
                continue;
            }
            let v = f.add(self.get(dst, k), &f.mul(s, c));
            self.set(dst, k, v);
        }
    }

    pub fn map<F2: Field>(&self, g: impl Fn(&E) -> F2::Elem) -> Matrix<F2::Elem> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(g).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn inverse_round_trip() {
        let f = FiniteField::new(2, 2).unwrap();
        let m = Matrix::from_rows(vec![vec![1, 2, 0], vec![0, 1, 3], vec![1, 0, 2]]);
        let inv = m.inverse(&f).expect("invertible");
        assert!(m.mul(&f, &inv).is_identity(&f));
        assert!(inv.mul(&f, &m).is_identity(&f));
    }

    #[test]
    fn singular_has_no_inverse() {
        let f = FiniteField::new(3, 1).unwrap();
        let m = Matrix::from_rows(vec![vec![1, 2], vec![2, 1]]);
        assert!(m.inverse(&f).is_none());
    }

    #[test]
    fn products() {
        let f = FiniteField::new(5, 1).unwrap();
        let a = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&f, &b), Matrix::from_rows(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(a.mul_vec(&f, &[1, 1]), vec![3, 2]);
        assert_eq!(a.transpose().transpose(), a);
    }
}
