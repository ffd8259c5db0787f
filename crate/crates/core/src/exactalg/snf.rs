//! Smith normal form with unimodular transforms.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::intmat::IntMatrix;

/// Result of [`snf`]: `left * original * right = diag`, where `diag` is
/// diagonal with `invariant_factors` (each positive, each dividing the next)
/// in its leading positions, and both transforms are unimodular.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub invariant_factors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diag: IntMatrix,
}

impl SnfDecomposition {
    /// Rank of the original matrix.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Smith normal form by repeated pivot reduction. Pivot selection takes the
/// entry of smallest nonzero absolute value in the trailing block (row-major
/// tie-break), which keeps the transforms reproducible run to run.
pub fn snf(m: &IntMatrix) -> SnfDecomposition {
    let mut a = m.clone();
    let mut left = IntMatrix::identity(m.rows());
    let mut right = IntMatrix::identity(m.cols());
    let bound = m.rows().min(m.cols());

    for k in 0..bound {
        'pivot: loop {
            let Some((pi, pj)) = a.min_abs_pivot(k) else {
                break 'pivot; // trailing block is zero; done entirely
            };
            a.row_swap(k, pi);
            left.row_swap(k, pi);
            a.col_swap(k, pj);
            right.col_swap(k, pj);
            if a.get(k, k).is_negative() {
                a.row_negate(k);
                left.row_negate(k);
            }

            let pivot = a.get(k, k).clone();
            let mut dirty = false;
            for i in k + 1..a.rows() {
                if !a.get(i, k).is_zero() {
                    let q = -a.get(i, k).div_floor(&pivot);
                    a.row_add(i, k, &q);
                    left.row_add(i, k, &q);
                    if !a.get(i, k).is_zero() {
                        dirty = true; // nonzero remainder becomes the next pivot
                    }
                }
            }
            for j in k + 1..a.cols() {
                if !a.get(k, j).is_zero() {
                    let q = -a.get(k, j).div_floor(&pivot);
                    a.col_add(j, k, &q);
                    right.col_add(j, k, &q);
                    if !a.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Row and column are clean; enforce divisibility of the rest.
            let mut offender = None;
            'scan: for i in k + 1..a.rows() {
                for j in k + 1..a.cols() {
                    if !a.get(i, j).mod_floor(&pivot).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.row_add(k, i, &one);
                    left.row_add(k, i, &one);
                    // loop again: the new row k has entries not divisible by
                    // the pivot, so the next pivot strictly shrinks
                }
                None => break 'pivot,
            }
        }
        if a.get(k, k).is_zero() {
            break;
        }
    }

    let invariant_factors = (0..bound)
        .map(|k| a.get(k, k).clone())
        .take_while(|d| !d.is_zero())
        .collect();

    SnfDecomposition { invariant_factors, left, right, diag: a }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;
    use proptest::prelude::*;

    fn check_decomposition(m: &IntMatrix, d: &SnfDecomposition) {
        // left * m * right = diag
        assert_eq!(d.left.mul(m).mul(&d.right), d.diag);
        // transforms unimodular
        assert_eq!(d.left.determinant().abs(), BigInt::one());
        assert_eq!(d.right.determinant().abs(), BigInt::one());
        // diagonal, positive factors, divisibility chain
        for i in 0..d.diag.rows() {
            for j in 0..d.diag.cols() {
                if i != j {
                    assert!(d.diag.get(i, j).is_zero());
                }
            }
        }
        for w in d.invariant_factors.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
        }
        for f in &d.invariant_factors {
            assert!(f.is_positive());
        }
    }

    #[test]
    fn worked_example() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let d = snf(&m);
        check_decomposition(&m, &d);
        assert_eq!(d.invariant_factors, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn identity_and_zero() {
        let d = snf(&IntMatrix::identity(2));
        assert_eq!(d.invariant_factors, vec![BigInt::one(), BigInt::one()]);
        let z = snf(&IntMatrix::zero(1, 1));
        assert!(z.invariant_factors.is_empty());
        let e = snf(&IntMatrix::zero(0, 3));
        assert!(e.invariant_factors.is_empty());
    }

    #[test]
    fn product_of_factors_is_determinant_up_to_sign() {
        let m = IntMatrix::from_rows(&[vec![-6, 111, -36], vec![5, -672, 210], vec![0, -255, 81]]);
        let d = snf(&m);
        check_decomposition(&m, &d);
        let prod: BigInt = d.invariant_factors.iter().product();
        assert_eq!(prod, m.determinant().abs());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_matrices_decompose(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-9i64..=9, 16),
        ) {
            let mut m = IntMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, BigInt::from(seed[i * 4 + j]));
                }
            }
            let d = snf(&m);
            check_decomposition(&m, &d);
            if rows == cols {
                let prod: BigInt = d.invariant_factors.iter().product();
                let det = m.determinant().abs();
                if det.is_zero() {
                    prop_assert!(d.rank() < rows);
                } else {
                    prop_assert_eq!(prod, det);
                }
            }
        }
    }
}
