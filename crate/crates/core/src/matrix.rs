//! Dense matrices over F_p with exact Gaussian elimination.
//!
//! Matrices act on column vectors. Every routine here is exact; rank,
//! kernels and solutions are computed by row reduction to reduced row
//! echelon form.

use std::fmt;

use crate::field::Fp;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    /// `pivots[k]` is the pivot column of row `k`.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of already-reduced entries.
    pub fn from_rows(field: Fp, rows: usize, cols: usize, entries: &[Vec<u32>]) -> Self {
        assert_eq!(entries.len(), rows);
        let mut m = Self::zeros(field, rows, cols);
        for (r, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v % field.char());
            }
        }
        m
    }

    pub fn from_columns(field: Fp, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &v) in col.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in product: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let p = self.field.char() as u64;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, slot) in other.row(k).iter().zip(acc.iter_mut()) {
                    *slot = (*slot + a * *c as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.set(r, c, v as u32);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| self.field.mul_add(acc, a, b))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: u32, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, s, b);
        }
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        out
    }

    pub fn select_columns(&self, columns: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, columns.len());
        for (j, &c) in columns.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        out
    }

    /// Horizontal concatenation. All parts must have `rows` rows.
    pub fn hstack(field: Fp, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    /// Vertical concatenation. All parts must have `cols` columns.
    pub fn vstack(field: Fp, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            out.set_block(r0, 0, m);
            r0 += m.rows;
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let p = f.char() as u64;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = f.inv(m.get(row, col));
            if inv != 1 {
                for c in col..m.cols {
                    let v = f.mul(m.get(row, c), inv);
                    m.set(row, c, v);
                }
            }
            let pivot_row: Vec<u32> = m.row(row)[col..].to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                let neg = p - factor as u64;
                let base = r * m.cols;
                for (k, &pv) in pivot_row.iter().enumerate() {
                    if pv != 0 {
                        let slot = &mut m.data[base + col + k];
                        *slot = ((*slot as u64 + neg * pv as u64) % p) as u32;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().rank()
    }

    /// Columns span the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Matrix {
        let ech = self.rref();
        let f = self.field;
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; self.cols];
            for &c in &ech.pivots {
                is_pivot[c] = true;
            }
            (0..self.cols).filter(|&c| !is_pivot[c]).collect()
        };
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (r, &pc) in ech.pivots.iter().enumerate() {
                k.set(pc, j, f.neg(ech.reduced.get(r, fc)));
            }
        }
        k
    }

    /// Rows span the left kernel `{y : y A = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel().transpose()
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        if self.rows == 0 {
            return Vec::new();
        }
        self.rref().pivots
    }

    /// Columns forming a basis of the column space.
    pub fn column_space(&self) -> Matrix {
        self.select_columns(&self.independent_columns())
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let f = self.field;
        let aug = Matrix::hstack(f, self.rows, &[self, rhs]);
        let ech = aug.rref();
        let mut x = Matrix::zeros(f, self.cols, rhs.cols);
        for (r, &pc) in ech.pivots.iter().enumerate() {
            if pc >= self.cols {
                return None;
            }
            for c in 0..rhs.cols {
                x.set(pc, c, ech.reduced.get(r, self.cols + c));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Matrix::identity(self.field, n))?;
        if self.rank() == n {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Extends the independent columns of `self` by standard basis vectors
    /// to a basis of the ambient space; returns the indices of the unit
    /// vectors used.
    pub fn complement_units(&self) -> Vec<usize> {
        let f = self.field;
        let span = self.column_space();
        let mut current = span.clone();
        let mut chosen = Vec::new();
        let mut rank = current.cols;
        for i in 0..self.rows {
            if rank == self.rows {
                break;
            }
            let mut unit = Matrix::zeros(f, self.rows, 1);
            unit.set(i, 0, 1);
            let trial = Matrix::hstack(f, self.rows, &[&current, &unit]);
            if trial.rank() > rank {
                current = trial;
                rank += 1;
                chosen.push(i);
            }
        }
        chosen
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} mod {}]", self.rows, self.cols, self.field.char())?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn arb_matrix(p: u32, max: usize) -> impl Strategy<Value = Matrix> {
        (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |data| {
                let mut m = Matrix::zeros(f(p), r, c);
                for (i, v) in data.into_iter().enumerate() {
                    m.set(i / c.max(1), i % c.max(1), v);
                }
                m
            })
        })
    }

    #[test]
    fn rank_of_small_examples() {
        let m = Matrix::from_rows(f(2), 2, 3, &[vec![1, 1, 0], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let m = Matrix::from_rows(f(3), 3, 3, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 0]]);
        // second row is 2 * first row mod 3
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(f(5), 2, 2, &[vec![2, 3], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f(5), 2));
        let sing = Matrix::from_rows(f(5), 2, 2, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn empty_shapes() {
        let z = Matrix::zeros(f(2), 0, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().cols(), 3);
        let z = Matrix::zeros(f(2), 3, 0);
        assert_eq!(z.kernel().cols(), 0);
        assert_eq!(z.left_kernel().rows(), 3);
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(3, 6)) {
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
        }

        #[test]
        fn left_kernel_annihilates(m in arb_matrix(2, 6)) {
            let y = m.left_kernel();
            prop_assert_eq!(y.rows() + m.rank(), m.rows());
            prop_assert!(y.mul(&m).is_zero());
        }

        #[test]
        fn solve_finds_preimages(m in arb_matrix(5, 5), seed in 0u32..1000) {
            let x0 = Matrix::from_columns(
                m.field(),
                m.cols(),
                &[(0..m.cols()).map(|i| (seed + 7 * i as u32) % 5).collect::<Vec<_>>()],
            );
            let b = m.mul(&x0);
            let x = m.solve(&b).expect("consistent system");
            prop_assert_eq!(m.mul(&x), b);
        }

        #[test]
        fn complement_completes_basis(m in arb_matrix(2, 5)) {
            let extra = m.complement_units();
            prop_assert_eq!(extra.len() + m.rank(), m.rows());
        }
    }
}
