//! Exact feasibility for small rational linear systems by Fourier–Motzkin
//! elimination, with witness recovery by back-substitution.
//!
//! Equalities are eliminated first by Gaussian elimination; the remaining
//! inequalities are projected variable by variable. Dimensions here are tiny
//! (rank ≤ 7), so the quadratic growth of FM is harmless once duplicate and
//! dominated rows are merged.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::linalg::{rref, Vector};
use crate::rational::{common_denominator, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `a·x ≥ b`
    Ge,
    /// `a·x = b`
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vector,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn ge(coeffs: Vector, rhs: Rational) -> Constraint {
        Constraint { coeffs, relation: Relation::Ge, rhs }
    }

    pub fn eq(coeffs: Vector, rhs: Rational) -> Constraint {
        Constraint { coeffs, relation: Relation::Eq, rhs }
    }
}

#[derive(Clone, Debug)]
struct Ineq {
    a: Vector,
    b: Rational,
}

impl Ineq {
    /// Rescale by a positive factor to primitive integer data.
    fn normalized(mut self) -> Ineq {
        let den = common_denominator(self.a.iter().chain(std::iter::once(&self.b)));
        let scaled: Vec<i64> = self
            .a
            .iter()
            .chain(std::iter::once(&self.b))
            .map(|q| (q * den).to_integer())
            .collect();
        let g = scaled.iter().fold(0i64, |g, &x| num_integer::Integer::gcd(&g, &x));
        if g != 0 {
            let f = Rational::new(den, g);
            for x in self.a.iter_mut() {
                *x *= f;
            }
            self.b *= f;
        }
        self
    }
}

/// Keep one row per coefficient vector, retaining the tightest right-hand side.
fn merge(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut best: HashMap<Vector, Rational> = HashMap::new();
    let mut order = Vec::new();
    for row in rows {
        let row = row.normalized();
        match best.get_mut(&row.a) {
            Some(b) => {
                if row.b > *b {
                    *b = row.b;
                }
            }
            None => {
                order.push(row.a.clone());
                best.insert(row.a, row.b);
            }
        }
    }
    order
        .into_iter()
        .map(|a| {
            let b = best[&a];
            Ineq { a, b }
        })
        .collect()
}

fn pick_in(lo: Option<Rational>, hi: Option<Rational>) -> Rational {
    let zero = Rational::zero();
    let ok_lo = lo.is_none_or(|l| l <= zero);
    let ok_hi = hi.is_none_or(|h| h >= zero);
    if ok_lo && ok_hi {
        return zero;
    }
    match (lo, hi) {
        (Some(l), Some(h)) => {
            let c = l.ceil();
            if c <= h {
                c
            } else {
                l
            }
        }
        (Some(l), None) => l.ceil(),
        (None, Some(h)) => h.floor(),
        (None, None) => zero,
    }
}

/// A point satisfying all constraints, or `None` when the system is infeasible.
pub fn feasible_point(n: usize, constraints: &[Constraint]) -> Option<Vector> {
    for c in constraints {
        assert_eq!(c.coeffs.len(), n, "constraint arity");
    }

    // Equalities: x = x0 + N y.
    let eqs: Vec<&Constraint> = constraints.iter().filter(|c| c.relation == Relation::Eq).collect();
    let (x0, basis): (Vector, Vec<Vector>) = if eqs.is_empty() {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        (vec![Rational::zero(); n], basis)
    } else {
        let mut aug: Vec<Vector> = eqs
            .iter()
            .map(|c| {
                let mut r = c.coeffs.clone();
                r.push(c.rhs);
                r
            })
            .collect();
        let pivots = rref(&mut aug);
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x0 = vec![Rational::zero(); n];
        for (i, &p) in pivots.iter().enumerate() {
            x0[p] = aug[i][n];
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); n];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -aug[i][f];
                }
                v
            })
            .collect();
        (x0, basis)
    };
    let m = basis.len();

    let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).fold(Rational::zero(), |s, (x, y)| s + x * y);
    let initial: Vec<Ineq> = constraints
        .iter()
        .filter(|c| c.relation == Relation::Ge)
        .map(|c| Ineq {
            a: basis.iter().map(|col| dot(&c.coeffs, col)).collect(),
            b: c.rhs - dot(&c.coeffs, &x0),
        })
        .collect();

    // levels[i] is the system in which variable m-1-i is eliminated next.
    let mut levels: Vec<Vec<Ineq>> = Vec::with_capacity(m);
    let mut current = merge(initial);
    for k in (0..m).rev() {
        levels.push(current.clone());
        let mut next = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for row in current {
            if row.a[k].is_positive() {
                pos.push(row);
            } else if row.a[k].is_negative() {
                neg.push(row);
            } else {
                next.push(row);
            }
        }
        for p in &pos {
            for q in &neg {
                let fp = Rational::one() / p.a[k];
                let fq = Rational::one() / -q.a[k];
                let a: Vector = p.a.iter().zip(&q.a).map(|(x, y)| x * fp + y * fq).collect();
                let b = p.b * fp + q.b * fq;
                next.push(Ineq { a, b });
            }
        }
        current = merge(next);
    }
    if current.iter().any(|row| row.b.is_positive()) {
        return None;
    }

    let mut y = vec![Rational::zero(); m];
    for k in 0..m {
        let system = &levels[m - 1 - k];
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for row in system {
            let ak = row.a[k];
            if ak.is_zero() {
                continue;
            }
            let rest = row.a[..k].iter().zip(&y[..k]).fold(Rational::zero(), |s, (a, v)| s + a * v);
            let bound = (row.b - rest) / ak;
            if ak.is_positive() {
                lo = Some(lo.map_or(bound, |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound, |h| h.min(bound)));
            }
        }
        if let (Some(l), Some(h)) = (lo, hi) {
            assert!(l <= h, "Fourier-Motzkin back-substitution found an empty interval");
        }
        y[k] = pick_in(lo, hi);
    }

    let mut x = x0;
    for (col, yk) in basis.iter().zip(&y) {
        for (xi, ci) in x.iter_mut().zip(col) {
            *xi += ci * yk;
        }
    }
    debug_assert!(constraints.iter().all(|c| {
        let v = dot(&c.coeffs, &x);
        match c.relation {
            Relation::Ge => v >= c.rhs,
            Relation::Eq => v == c.rhs,
        }
    }));
    Some(x)
}

/// Nonnegative coefficients expressing `point` in the cone spanned by
/// `generators`, if it lies in that cone.
pub fn cone_coefficients(generators: &[Vector], point: &[Rational]) -> Option<Vector> {
    let n = generators.len();
    let mut cons = Vec::new();
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        cons.push(Constraint::ge(e, Rational::zero()));
    }
    for (j, &pj) in point.iter().enumerate() {
        cons.push(Constraint::eq(generators.iter().map(|g| g[j]).collect(), pj));
    }
    feasible_point(n, &cons)
}

/// A functional `η` with `⟨v, η⟩ ≥ 1` for every `v`, i.e. one that is
/// strictly positive on the whole family.
pub fn strictly_positive_functional(vectors: &[Vector], dim: usize) -> Option<Vector> {
    let cons: Vec<Constraint> = vectors.iter().map(|v| Constraint::ge(v.clone(), int(1))).collect();
    feasible_point(dim, &cons)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn simple_box() {
        let cons = vec![
            Constraint::ge(v(&[1, 0]), int(1)),
            Constraint::ge(v(&[-1, 0]), int(-3)),
            Constraint::ge(v(&[0, 1]), int(2)),
        ];
        let x = feasible_point(2, &cons).unwrap();
        assert!(x[0] >= int(1) && x[0] <= int(3) && x[1] >= int(2));
    }

    #[test]
    fn infeasible_pair() {
        let cons = vec![Constraint::ge(v(&[1, 1]), int(1)), Constraint::ge(v(&[-1, -1]), int(0))];
        assert!(feasible_point(2, &cons).is_none());
    }

    #[test]
    fn equalities_and_fractions() {
        let cons = vec![Constraint::eq(v(&[2, 0]), int(1)), Constraint::ge(v(&[1, 1]), int(1))];
        let x = feasible_point(2, &cons).unwrap();
        assert_eq!(x[0], frac(1, 2));
        assert!(x[0] + x[1] >= int(1));
        let bad = vec![Constraint::eq(v(&[1, 1]), int(1)), Constraint::eq(v(&[2, 2]), int(3))];
        assert!(feasible_point(2, &bad).is_none());
    }

    #[test]
    fn cone_membership() {
        let gens = vec![v(&[1, 0]), v(&[1, 1])];
        assert!(cone_coefficients(&gens, &v(&[3, 1])).is_some());
        assert!(cone_coefficients(&gens, &v(&[1, 2])).is_none());
        let c = cone_coefficients(&gens, &v(&[3, 1])).unwrap();
        assert_eq!(c, v(&[2, 1]));
    }

    #[test]
    fn separating_functional() {
        assert!(strictly_positive_functional(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])], 2).is_some());
        assert!(strictly_positive_functional(&[v(&[1, -1]), v(&[-1, 1])], 2).is_none());
    }
}
