//! Dense exact linear algebra over the rationals (small dimensions only).

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vector>;

/// Reduce `m` in place to reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][c];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// One solution of `a x = b` (free variables set to zero), or `None` if the
/// system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vector> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols];
    }
    Some(x)
}

/// Basis of `{x : a x = 0}`.
pub fn nullspace(a: &Matrix, cols: usize) -> Vec<Vector> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f];
            }
            v
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, x: &[Rational]) -> Vector {
    a.iter()
        .map(|row| row.iter().zip(x).fold(Rational::zero(), |acc, (p, q)| acc + p * q))
        .collect()
}

pub fn transpose(a: &Matrix, cols: usize) -> Matrix {
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}
