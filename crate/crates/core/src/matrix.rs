//! Concrete matrix model of `p` over the Gaussian rationals and the moment
//! map `Φ_K(X) = −[X, [z_o, X]]`.
//!
//! `SU(p,q)`: `p = {[[0, B], [B*, 0]]}` with `B` a `p×q` block and
//! `z_o = i·diag(z0)`. `Sp(n,ℝ)` is realized inside `u(n,n)` as
//! `{[[A, B], [B̄, Ā]]}` with `B` symmetric; there `z_o = diag(i/2, −i/2)`.
//!
//! With the Euclidean form on weights the bracket produces `c·Σ t_k² γ_k`
//! for some constant `c` that depends on the family; [`calibration`] computes
//! it rather than assuming it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hermitian::{Family, HermitianPair};
use crate::rational::{format_rational, int, Rational};
use crate::weight::Weight;

/// `re + i·im` with rational parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Gaussian {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Gaussian {
        Gaussian { re, im: Rational::zero() }
    }

    pub fn zero() -> Gaussian {
        Gaussian::real(Rational::zero())
    }

    pub fn i() -> Gaussian {
        Gaussian { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(self) -> Gaussian {
        Gaussian { re: self.re, im: -self.im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm2(&self) -> Rational {
        self.re * self.re + self.im * self.im
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}i", format_rational(&self.re), if self.im.is_negative() { "" } else { "+" }, format_rational(&self.im))
    }
}

/// Square complex-rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Gaussian>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> CMatrix {
        CMatrix { n, data: vec![Gaussian::zero(); n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Gaussian {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gaussian) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Gaussian::is_zero)
    }

    pub fn scale(&self, s: Gaussian) -> CMatrix {
        CMatrix { n: self.n, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn add(&self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.n, o.n);
        CMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a + b).collect() }
    }

    pub fn sub(&self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.n, o.n);
        CMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a - b).collect() }
    }

    pub fn mul(&self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + a * o.get(k, j));
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &CMatrix) -> CMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }
}

fn model_size(pair: &HermitianPair) -> usize {
    match pair.family() {
        Family::SU { p, q } => p + q,
        Family::Sp { n } => 2 * n,
    }
}

/// The matrix of `z_o`.
pub fn z0_matrix(pair: &HermitianPair) -> CMatrix {
    let mut m = CMatrix::zeros(model_size(pair));
    match pair.family() {
        Family::SU { .. } => {
            for (j, z) in pair.z0().coords().iter().enumerate() {
                m.set(j, j, Gaussian::new(Rational::zero(), *z));
            }
        }
        Family::Sp { n } => {
            let h = Rational::new(1, 2);
            for j in 0..n {
                m.set(j, j, Gaussian::new(Rational::zero(), h));
                m.set(n + j, n + j, Gaussian::new(Rational::zero(), -h));
            }
        }
    }
    m
}

/// Embed the off-diagonal block `B` (rows × cols, row-major) as an element of `p`.
pub fn p_element(pair: &HermitianPair, block: &[Vec<Gaussian>]) -> Result<CMatrix> {
    let (rows, cols, off) = match pair.family() {
        Family::SU { p, q } => (p, q, p),
        Family::Sp { n } => (n, n, n),
    };
    if block.len() != rows || block.iter().any(|r| r.len() != cols) {
        return Err(Error::NotInModel(format!("{}: block must be {rows}x{cols}", pair.family())));
    }
    let mut m = CMatrix::zeros(model_size(pair));
    for (i, row) in block.iter().enumerate() {
        for (j, &b) in row.iter().enumerate() {
            m.set(i, off + j, b);
            m.set(off + j, i, b.conj());
        }
    }
    if !in_p_model(pair, &m) {
        return Err(Error::NotInModel(format!("{}: block violates the model symmetry", pair.family())));
    }
    Ok(m)
}

/// Membership in the model of `p`.
pub fn in_p_model(pair: &HermitianPair, x: &CMatrix) -> bool {
    if x.size() != model_size(pair) {
        return false;
    }
    let (split, n) = match pair.family() {
        Family::SU { p, q } => (p, p + q),
        Family::Sp { n } => (n, 2 * n),
    };
    for i in 0..n {
        for j in 0..n {
            let same_block = (i < split) == (j < split);
            let v = x.get(i, j);
            if same_block && !v.is_zero() {
                return false;
            }
            if !same_block && x.get(j, i) != v.conj() {
                return false;
            }
        }
    }
    if let Family::Sp { n } = pair.family() {
        for i in 0..n {
            for j in 0..n {
                if x.get(i, n + j) != x.get(j, n + i) {
                    return false;
                }
            }
        }
    }
    true
}

/// Model vectors `X_k` with `Φ_K(X_k)` a positive multiple of `γ_k`.
pub fn cascade_vectors(pair: &HermitianPair) -> Vec<CMatrix> {
    let size = model_size(pair);
    let one = Gaussian::real(Rational::one());
    match pair.family() {
        Family::SU { p, q } => (0..pair.rank())
            .map(|k| {
                let (a, b) = (k, p + q - 1 - k);
                let mut m = CMatrix::zeros(size);
                m.set(a, b, one);
                m.set(b, a, one);
                m
            })
            .collect(),
        Family::Sp { n } => (0..n)
            .map(|k| {
                let mut m = CMatrix::zeros(size);
                m.set(k, n + k, one);
                m.set(n + k, k, one);
                m
            })
            .collect(),
    }
}

/// `Φ_K(X) = −[X, [z_o, X]]`.
pub fn phi_k_matrix(pair: &HermitianPair, x: &CMatrix) -> Result<CMatrix> {
    if !in_p_model(pair, x) {
        return Err(Error::NotInModel(pair.family().to_string()));
    }
    let z = z0_matrix(pair);
    let inner = z.commutator(x);
    Ok(x.commutator(&inner).scale(Gaussian::real(int(-1))))
}

/// Weight of a diagonal element `i·diag(θ)` of `t`.
pub fn torus_weight(pair: &HermitianPair, m: &CMatrix) -> Result<Weight> {
    if m.size() != model_size(pair) || !m.is_diagonal() {
        return Err(Error::NotInModel("expected a diagonal element of t".into()));
    }
    let dim = pair.ambient().dim();
    if (0..m.size()).any(|j| !m.get(j, j).re.is_zero()) {
        return Err(Error::NotInModel("diagonal entries must be imaginary".into()));
    }
    pair.parse_weight((0..dim).map(|j| m.get(j, j).im).collect())
}

/// `⟨M, z_o⟩ = Σ_j Im(M_jj)·z0_j` over the first block of coordinates.
pub fn z0_pairing(pair: &HermitianPair, m: &CMatrix) -> Rational {
    pair.z0()
        .coords()
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (j, z)| acc + m.get(j, j).im * z)
}

/// The constant `c > 0` with `Φ_K(X_1) = c·γ_1`.
pub fn calibration(pair: &HermitianPair) -> Result<Rational> {
    let x1 = cascade_vectors(pair)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("empty cascade".into()))?;
    let w = torus_weight(pair, &phi_k_matrix(pair, &x1)?)?;
    let g = &pair.cascade()[0];
    let c = w.dot(g) / g.norm2();
    if w != g.scale(c) || !c.is_positive() {
        return Err(Error::Internal(format!("Φ_K(X_1) = {w} is not a positive multiple of {g}")));
    }
    Ok(c)
}

/// `Σ t_k X_k`.
pub fn cascade_combination(pair: &HermitianPair, t: &[Rational]) -> Result<CMatrix> {
    let xs = cascade_vectors(pair);
    if t.len() != xs.len() {
        return Err(Error::DimensionMismatch { expected: xs.len(), got: t.len() });
    }
    Ok(xs
        .iter()
        .zip(t)
        .fold(CMatrix::zeros(model_size(pair)), |acc, (x, &tk)| acc.add(&x.scale(Gaussian::real(tk)))))
}
