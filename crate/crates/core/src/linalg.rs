//! Exact dense linear algebra over [`Scalar`]s.
//!
//! Matrices are row-major `Vec<Vec<Scalar>>`. Every routine takes the ambient
//! [`FieldDescriptor`] so that constants (zero, one) come from the right field
//! even for empty inputs.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{FieldDescriptor, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(field: &FieldDescriptor, rows: usize, cols: usize) -> Matrix {
    vec![vec![field.zero(); cols]; rows]
}

pub fn identity(field: &FieldDescriptor, n: usize) -> Matrix {
    let mut m = zeros(field, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = field.one();
    }
    m
}

pub fn unit_vector(field: &FieldDescriptor, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn transpose(field: &FieldDescriptor, m: &[Vec<Scalar>], cols: usize) -> Matrix {
    let mut t = zeros(field, cols, m.len());
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            t[j][i] = x.clone();
        }
    }
    t
}

/// Reduced row echelon form with zero rows dropped, plus the pivot columns.
pub fn rref(m: &[Vec<Scalar>], cols: usize) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * y);
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &[Vec<Scalar>], cols: usize) -> usize {
    rref(m, cols).1.len()
}

/// Basis of `{x : m·x = 0}`, one vector per free column with that entry 1.
pub fn nullspace(field: &FieldDescriptor, m: &[Vec<Scalar>], cols: usize) -> Matrix {
    let (r, pivots) = rref(m, cols);
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[f] = field.one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -&row[f];
        }
        basis.push(v);
    }
    basis
}

/// Basis of `{y : y·m = 0}` for an `rows × cols` matrix.
pub fn left_nullspace(field: &FieldDescriptor, m: &[Vec<Scalar>], cols: usize) -> Matrix {
    nullspace(field, &transpose(field, m, cols), m.len())
}

pub fn mat_mul(field: &FieldDescriptor, a: &[Vec<Scalar>], b: &[Vec<Scalar>], cols: usize) -> Matrix {
    a.iter().map(|row| vec_mat(field, row, b, cols)).collect()
}

/// Row vector times matrix.
pub fn vec_mat(field: &FieldDescriptor, v: &[Scalar], m: &[Vec<Scalar>], cols: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); cols];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o = &*o + &(x * y);
        }
    }
    out
}

pub fn dot(field: &FieldDescriptor, u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).fold(field.zero(), |acc, (a, b)| acc + a * b)
}

pub fn inverse(field: &FieldDescriptor, m: &[Vec<Scalar>]) -> Result<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vector(field, n, i));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by Gaussian elimination.
pub fn determinant(field: &FieldDescriptor, m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().expect("pivot is nonzero");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    det
}

/// One solution of `a·x = b`, with free variables set to zero.
pub fn solve(field: &FieldDescriptor, a: &[Vec<Scalar>], b: &[Scalar], cols: usize) -> Option<Vec<Scalar>> {
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, y)| {
            let mut r = row.clone();
            r.push(y.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Scales `v` so its first nonzero entry is 1. Zero vectors are returned as is.
pub fn normalize_leading(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
    }
}
