//! Exact Gaussian elimination over the function field `Q(A)`.

use alloc::vec;
use alloc::vec::Vec;

use super::ratfunc::RatFunc;

/// Dense matrix over `Q(A)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QaMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl QaMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QaMatrix { rows, cols, data: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QaMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let a = self.get(row, j).clone();
                let b = self.get(p, j).clone();
                self.set(row, j, b);
                self.set(p, j, a);
            }
            let inv = self.get(row, col).recip().expect("pivot is nonzero");
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i != row && !self.get(i, col).is_zero() {
                    let f = self.get(i, col).clone();
                    for j in col..self.cols {
                        let v = self.get(i, j) - &(&f * self.get(row, j));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    /// Rank and a basis of the right kernel. `rank + kernel.len() == cols`.
    pub fn kernel_and_rank(&self) -> (usize, Vec<Vec<RatFunc>>) {
        let mut work = self.clone();
        let pivots = work.rref();
        let rank = pivots.len();
        let mut kernel = Vec::new();
        let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();
        for free in (0..self.cols).filter(|&c| !is_pivot(c)) {
            let mut v = vec![RatFunc::zero(); self.cols];
            v[free] = RatFunc::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -work.get(r, free);
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    pub fn rank(&self) -> usize {
        self.kernel_and_rank().0
    }

    /// Solves `self * x = rhs` exactly. Returns `None` when inconsistent;
    /// free variables are set to zero.
    pub fn solve(&self, rhs: &[RatFunc]) -> Option<Vec<RatFunc>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let mut aug = QaMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // a pivot in the augmented column: inconsistent
        }
        let mut x = vec![RatFunc::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = RatFunc::zero();
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() && !v[j].is_zero() {
                        acc += &(self.get(i, j) * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }
}
