//! Dense matrices over GF(q): row reduction, rank, left kernel, linear
//! solving. Sizes here are tiny (tens of rows), so plain Gauss–Jordan is all
//! that is needed.

use crate::galois::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Row-reduced form together with the transform that produced it:
/// `transform · original = rref`.
pub struct Reduced {
    pub rref: Matrix,
    pub transform: Matrix,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix { field, rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() }
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

    pub fn at(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.at(r, c)).collect()
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field.clone(), self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.at(r, c));
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(x.len(), self.rows);
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr.is_zero() {
                continue;
            }
            for c in 0..self.cols {
                out[c] = f.add(out[c], f.mul(xr, self.at(r, c)));
            }
        }
        out
    }

    /// Gauss–Jordan reduction, tracking the transform on an identity block.
    pub fn reduce(&self) -> Reduced {
        let f = self.field.clone();
        let mut a = self.clone();
        let mut t = Matrix::identity(f.clone(), self.rows);
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..a.cols {
            let Some(src) = (pivot_row..a.rows).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(pivot_row, src);
            t.swap_rows(pivot_row, src);
            let inv = f.inv(a.at(pivot_row, col)).expect("pivot is nonzero");
            a.scale_row(pivot_row, inv);
            t.scale_row(pivot_row, inv);
            for r in 0..a.rows {
                if r != pivot_row && !a.at(r, col).is_zero() {
                    let factor = a.at(r, col);
                    a.sub_scaled_row(r, pivot_row, factor);
                    t.sub_scaled_row(r, pivot_row, factor);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
            if pivot_row == a.rows {
                break;
            }
        }
        Reduced { rref: a, transform: t, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.reduce().pivot_cols.len()
    }

    /// Basis of the left kernel { x : x·A = 0 }, as RREF rows.
    pub fn left_kernel(&self) -> Matrix {
        let red = self.reduce();
        let rank = red.pivot_cols.len();
        let rows: Vec<Vec<FieldElement>> = (rank..self.rows)
            .map(|r| red.transform.row(r).to_vec())
            .collect();
        let kernel = Matrix::from_rows(self.field.clone(), rows);
        if kernel.rows == 0 {
            return kernel;
        }
        kernel.reduce().rref
    }

    /// One solution x of x·A = rhs, or `None` if the system is inconsistent.
    pub fn solve_left(&self, rhs: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(rhs.len(), self.cols);
        // Work on A^T x^T = rhs^T with an augmented column.
        let f = &self.field;
        let mut aug = Matrix::zero(f.clone(), self.cols, self.rows + 1);
        for r in 0..self.cols {
            for c in 0..self.rows {
                aug.set(r, c, self.at(c, r));
            }
            aug.set(r, self.rows, rhs[r]);
        }
        let red = aug.reduce();
        // Inconsistent if some pivot lands in the augmented column.
        if red.pivot_cols.contains(&self.rows) {
            return None;
        }
        let mut x = vec![FieldElement::ZERO; self.rows];
        for (i, &pc) in red.pivot_cols.iter().enumerate() {
            x[pc] = red.rref.at(i, self.rows);
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, by: FieldElement) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = self.at(r, c);
            self.set(r, c, f.mul(v, by));
        }
    }

    /// row[r] -= factor * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: FieldElement) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = f.sub(self.at(r, c), f.mul(factor, self.at(src, c)));
            self.set(r, c, v);
        }
    }
}
