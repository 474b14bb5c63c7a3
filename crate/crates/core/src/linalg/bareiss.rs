//! Fraction-free elimination over an integral domain.
//!
//! Bareiss' update `m[i][j] = (m[k][k]·m[i][j] − m[i][k]·m[k][j]) / prev`
//! keeps every intermediate entry a minor of the input, so the division is
//! exact and entries grow polynomially rather than exponentially.

use num_integer::Integer;

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::LinalgError;

/// Determinant without leaving the integers.
pub fn determinant<T>(m: &Matrix<T>) -> Result<T, LinalgError>
where
    T: Scalar + Integer,
{
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut prev = T::one();
    let mut sign = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(T::zero());
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[(k, k)].clone() * a[(i, j)].clone()
                    - a[(i, k)].clone() * a[(k, j)].clone())
                    / prev.clone();
                a.set(i, j, v);
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * a[(n - 1, n - 1)].clone())
}

/// Rank over the fraction field, computed without fractions.
pub fn rank<T>(m: &Matrix<T>) -> usize
where
    T: Scalar + Integer,
{
    let mut a = m.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (a[(r, c)].clone() * a[(i, j)].clone()
                    - a[(i, c)].clone() * a[(r, j)].clone())
                    / prev.clone();
                a.set(i, j, v);
            }
            a.set(i, c, T::zero());
        }
        prev = a[(r, c)].clone();
        r += 1;
    }
    r
}
