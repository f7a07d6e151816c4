//! Root systems, Weyl-group orbits, dominance, ρ, Weyl dimensions and
//! Freudenthal weight multiplicities.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve, transpose, Matrix};
use crate::rational::{int, is_integer, Rational};
use crate::weight::{self, Ambient, Weight};

/// Checked Euclidean pairing.
pub fn inner(u: &Weight, v: &Weight) -> Result<Rational> {
    u.check_same_ambient(v)?;
    Ok(u.dot(v))
}

/// `v − 2(v,α)/(α,α)·α`.
pub fn reflect(alpha: &Weight, v: &Weight) -> Result<Weight> {
    alpha.check_same_ambient(v)?;
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    Ok(reflect_unchecked(alpha, v))
}

pub(crate) fn reflect_unchecked(alpha: &Weight, v: &Weight) -> Weight {
    let c = int(2) * v.dot(alpha) / alpha.norm2();
    v - &alpha.scale(c)
}

/// `2(v,α)/(α,α)`.
pub fn coroot_pairing(v: &Weight, alpha: &Weight) -> Rational {
    int(2) * v.dot(alpha) / alpha.norm2()
}

/// A positive system together with its base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    ambient: Ambient,
    positives: Vec<Weight>,
    simple: Vec<Weight>,
}

impl PositiveSystem {
    /// Build from the positive roots; the base is the set of indecomposable
    /// positive roots.
    pub fn from_positives(ambient: Ambient, mut positives: Vec<Weight>) -> Result<PositiveSystem> {
        for p in &positives {
            if p.ambient() != ambient {
                return Err(Error::AmbientMismatch(ambient.to_string(), p.ambient().to_string()));
            }
            if p.is_zero() {
                return Err(Error::ZeroRoot);
            }
        }
        positives.sort();
        positives.dedup();
        let set: BTreeSet<&Weight> = positives.iter().collect();
        let simple = positives
            .iter()
            .filter(|a| !positives.iter().any(|b| *b != **a && set.contains(&(*a - b))))
            .cloned()
            .collect();
        Ok(PositiveSystem { ambient, positives, simple })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn positives(&self) -> &[Weight] {
        &self.positives
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn rho(&self) -> Weight {
        rho(self.ambient, &self.positives)
    }

    /// Coordinates of `v` in the base, if `v` lies in its span.
    pub fn simple_coords(&self, v: &Weight) -> Option<Vec<Rational>> {
        if self.simple.is_empty() {
            return v.is_zero().then(Vec::new);
        }
        let cols: Matrix = self.simple.iter().map(|s| s.coords().to_vec()).collect();
        let a = transpose(&cols, self.ambient.dim());
        let x = solve(&a, v.coords())?;
        // `solve` zeroes free variables; verify the system was consistent.
        let mut back = Weight::zero(self.ambient);
        for (s, c) in self.simple.iter().zip(&x) {
            back = &back + &s.scale(*c);
        }
        (back == *v).then_some(x)
    }

    /// Height: sum of the simple-root coordinates.
    pub fn height(&self, v: &Weight) -> Option<Rational> {
        self.simple_coords(v).map(|c| c.iter().fold(Rational::zero(), |a, b| a + b))
    }

    /// `(v, α) ≥ 0` for every positive root.
    pub fn is_dominant(&self, v: &Weight) -> bool {
        self.simple.iter().all(|a| !v.dot(a).is_negative())
    }

    /// `(v, α) > 0` for every positive root.
    pub fn is_strictly_dominant(&self, v: &Weight) -> bool {
        self.simple.iter().all(|a| v.dot(a).is_positive())
    }

    /// `2(v,α)/(α,α) ∈ ℤ≥0` for every simple root.
    pub fn is_dominant_integral(&self, v: &Weight) -> bool {
        self.simple.iter().all(|a| {
            let c = coroot_pairing(v, a);
            is_integer(&c) && !c.is_negative()
        })
    }
}

/// A root system with a chosen positive system.
#[derive(Debug)]
pub struct RootDatum {
    ambient: Ambient,
    roots: Vec<Weight>,
    positive: PositiveSystem,
    weyl_order: OnceLock<u64>,
}

impl Clone for RootDatum {
    fn clone(&self) -> Self {
        let weyl_order = OnceLock::new();
        if let Some(&n) = self.weyl_order.get() {
            let _ = weyl_order.set(n);
        }
        RootDatum { ambient: self.ambient, roots: self.roots.clone(), positive: self.positive.clone(), weyl_order }
    }
}

impl RootDatum {
    /// Generate all roots by closing the base under simple reflections.
    pub fn from_simple_roots(ambient: Ambient, simple: Vec<Weight>) -> Result<RootDatum> {
        for s in &simple {
            if s.ambient() != ambient {
                return Err(Error::AmbientMismatch(ambient.to_string(), s.ambient().to_string()));
            }
            if s.is_zero() {
                return Err(Error::ZeroRoot);
            }
        }
        let m: Matrix = simple.iter().map(|s| s.coords().to_vec()).collect();
        if crate::linalg::rank(&m) != simple.len() {
            return Err(Error::InvalidParameters("simple roots are linearly dependent".into()));
        }
        let mut roots: BTreeSet<Weight> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = simple.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for s in &simple {
                let t = reflect_unchecked(s, &r);
                if roots.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        let mut all: Vec<Weight> = roots.iter().cloned().collect();
        all.extend(roots.iter().map(|r| -r));
        all.sort();
        all.dedup();
        let base = PositiveSystem { ambient, positives: Vec::new(), simple: simple.clone() };
        let mut positives = Vec::new();
        for r in &all {
            let c = base
                .simple_coords(r)
                .ok_or_else(|| Error::Internal(format!("root {r} outside the span of the base")))?;
            if c.iter().any(|x| !is_integer(x)) {
                return Err(Error::InvalidParameters(format!("root {r} is not an integral combination of the base")));
            }
            if c.iter().all(|x| !x.is_negative()) {
                positives.push(r.clone());
            } else if !c.iter().all(|x| !x.is_positive()) {
                return Err(Error::InvalidParameters(format!("root {r} has mixed signs in the base")));
            }
        }
        let positive = PositiveSystem { ambient, positives, simple };
        Ok(RootDatum { ambient, roots: all, positive, weyl_order: OnceLock::new() })
    }

    /// The empty root system (a torus).
    pub fn torus(ambient: Ambient) -> RootDatum {
        RootDatum {
            ambient,
            roots: Vec::new(),
            positive: PositiveSystem { ambient, positives: Vec::new(), simple: Vec::new() },
            weyl_order: OnceLock::new(),
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn is_root(&self, v: &Weight) -> bool {
        self.roots.binary_search(v).is_ok()
    }

    pub fn positive_system(&self) -> &PositiveSystem {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Weight] {
        self.positive.simple_roots()
    }

    pub fn rank(&self) -> usize {
        self.positive.rank()
    }

    /// `|W|`, computed once as the orbit size of the regular element ρ.
    pub fn weyl_order(&self) -> u64 {
        *self.weyl_order.get_or_init(|| weyl_orbit(&self.positive, &self.positive.rho()).len() as u64)
    }
}

pub fn is_dominant(positives: &PositiveSystem, v: &Weight) -> bool {
    positives.is_dominant(v)
}

/// The dominant Weyl conjugate of `v` with `det(w)`, or sign 0 when `v` is
/// fixed by some reflection.
pub fn dominant_rep(positives: &PositiveSystem, v: &Weight) -> (Weight, i8) {
    let mut w = v.clone();
    let mut sign: i8 = 1;
    while let Some(a) = positives.simple.iter().find(|a| w.dot(a).is_negative()) {
        w = reflect_unchecked(a, &w);
        sign = -sign;
    }
    if positives.simple.iter().any(|a| w.dot(a).is_zero()) {
        sign = 0;
    }
    (w, sign)
}

/// The dominant Weyl conjugate of `v`.
pub fn dominant_conjugate(positives: &PositiveSystem, v: &Weight) -> Weight {
    dominant_rep(positives, v).0
}

/// The full Weyl orbit of `v`, by closure under simple reflections.
pub fn weyl_orbit(positives: &PositiveSystem, v: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::new();
    seen.insert(v.clone());
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(x) = queue.pop_front() {
        for a in &positives.simple {
            let y = reflect_unchecked(a, &x);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen
}

/// For `v` strictly dominant, every `w·v` paired with `det(w)`.
///
/// `det(w) = (−1)^ℓ(w)` and `ℓ(w)` counts the positive roots that are
/// negative on `w·v`.
pub fn signed_orbit(positives: &PositiveSystem, v: &Weight) -> Vec<(Weight, i8)> {
    debug_assert!(positives.is_strictly_dominant(v));
    weyl_orbit(positives, v)
        .into_iter()
        .map(|x| {
            let neg = positives.positives.iter().filter(|a| x.dot(a).is_negative()).count();
            (x, if neg % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Half the sum of the given roots.
pub fn rho(ambient: Ambient, positives: &[Weight]) -> Weight {
    weight::sum(ambient, positives).scale(Rational::new(1, 2))
}

/// Weyl's dimension formula.
pub fn weyl_dim(positives: &PositiveSystem, lam: &Weight) -> Result<u64> {
    if lam.ambient() != positives.ambient {
        return Err(Error::AmbientMismatch(positives.ambient.to_string(), lam.ambient().to_string()));
    }
    if !positives.is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let rho = positives.rho();
    let shifted = lam + &rho;
    let mut d = Rational::from_integer(1);
    for a in &positives.positives {
        d *= shifted.dot(a) / rho.dot(a);
    }
    if !is_integer(&d) {
        return Err(Error::NotIntegral(lam.to_string()));
    }
    Ok(d.to_integer() as u64)
}

/// Weight multiplicities of the irreducible module with highest weight `lam`.
pub fn freudenthal(positives: &PositiveSystem, lam: &Weight) -> Result<BTreeMap<Weight, u64>> {
    if lam.ambient() != positives.ambient {
        return Err(Error::AmbientMismatch(positives.ambient.to_string(), lam.ambient().to_string()));
    }
    if !positives.is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_string()));
    }
    if !positives.is_dominant_integral(lam) {
        return Err(Error::NotIntegral(lam.to_string()));
    }

    let is_weight = |nu: &Weight| -> bool {
        let delta = dominant_conjugate(positives, nu);
        match positives.simple_coords(&(lam - &delta)) {
            Some(c) => c.iter().all(|x| is_integer(x) && !x.is_negative()),
            None => false,
        }
    };

    // Weights in order of increasing depth below lam.
    let mut order = vec![lam.clone()];
    let mut seen: BTreeSet<Weight> = BTreeSet::from([lam.clone()]);
    let mut head = 0;
    while head < order.len() {
        let nu = order[head].clone();
        head += 1;
        for a in &positives.simple {
            let next = &nu - a;
            if !seen.contains(&next) && is_weight(&next) {
                seen.insert(next.clone());
                order.push(next);
            }
        }
    }

    let rho = positives.rho();
    let top = (lam + &rho).norm2();
    let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(order.len());
    mult.insert(lam.clone(), 1);
    for mu in order.iter().skip(1) {
        let mut acc = Rational::zero();
        for a in &positives.positives {
            let mut k = 1;
            loop {
                let up = mu + &a.scale(int(k));
                match mult.get(&up) {
                    Some(&m) => acc += int(m as i64) * up.dot(a),
                    None => {
                        if !seen.contains(&up) {
                            break;
                        }
                    }
                }
                k += 1;
            }
        }
        let denom = top - (mu + &rho).norm2();
        if denom.is_zero() {
            return Err(Error::Internal(format!("Freudenthal denominator vanished at {mu}")));
        }
        let m = int(2) * acc / denom;
        if !is_integer(&m) || m.is_negative() {
            return Err(Error::Internal(format!("non-integral multiplicity {m} at {mu}")));
        }
        mult.insert(mu.clone(), m.to_integer() as u64);
    }
    Ok(mult.into_iter().filter(|(_, m)| *m > 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn a(n: usize) -> RootDatum {
        let amb = Ambient::TypeA(n + 1);
        RootDatum::from_simple_roots(amb, (0..n).map(|i| Weight::difference(amb, i, i + 1)).collect()).unwrap()
    }

    fn c(n: usize) -> RootDatum {
        let amb = Ambient::Euclidean(n);
        let mut s: Vec<Weight> = (0..n - 1).map(|i| Weight::difference(amb, i, i + 1)).collect();
        s.push(Weight::unit(amb, n - 1).scale(int(2)));
        RootDatum::from_simple_roots(amb, s).unwrap()
    }

    fn w(amb: Ambient, xs: &[i64]) -> Weight {
        Weight::from_ints(amb, xs).unwrap()
    }

    #[test]
    fn inner_examples() {
        let e = Ambient::Euclidean(2);
        assert_eq!(inner(&w(e, &[1, 0]), &w(e, &[1, 0])).unwrap(), int(1));
        assert_eq!(inner(&w(e, &[1, -1]), &w(e, &[1, 1])).unwrap(), int(0));
        let a5 = Ambient::TypeA(5);
        assert_eq!(inner(&w(a5, &[1, 0, 0, 0, -1]), &w(a5, &[0, 1, 0, -1, 0])).unwrap(), int(0));
        assert!(inner(&w(e, &[1, 0]), &w(Ambient::TypeA(2), &[1, 0])).is_err());
    }

    #[test]
    fn reflect_examples() {
        let e = Ambient::Euclidean(2);
        assert_eq!(reflect(&w(e, &[1, -1]), &w(e, &[1, 0])).unwrap(), w(e, &[0, 1]));
        let al = w(e, &[1, -1]);
        assert_eq!(reflect(&al, &al).unwrap(), -&al);
        assert_eq!(reflect(&w(e, &[0, 2]), &w(e, &[3, 1])).unwrap(), w(e, &[3, -1]));
        assert_eq!(reflect(&Weight::zero(e), &al), Err(Error::ZeroRoot));
    }

    #[test]
    fn generated_root_counts() {
        assert_eq!(a(2).roots().len(), 6);
        assert_eq!(a(3).weyl_order(), 24);
        assert_eq!(c(2).roots().len(), 8);
        assert_eq!(c(3).weyl_order(), 48);
        assert_eq!(c(2).positive_system().positives().len(), 4);
    }

    #[test]
    fn dominance_and_reps() {
        let a1 = a(1);
        let ps = a1.positive_system();
        let amb = Ambient::TypeA(2);
        assert!(ps.is_dominant(&w(amb, &[1, 0])));
        assert_eq!(dominant_rep(ps, &w(amb, &[0, 1])), (w(amb, &[1, 0]), -1));
        assert_eq!(dominant_rep(ps, &w(amb, &[2, 0])), (w(amb, &[2, 0]), 1));
        assert_eq!(dominant_rep(ps, &w(amb, &[1, 1])).1, 0);

        let e = Ambient::Euclidean(2);
        let compact = PositiveSystem::from_positives(e, vec![w(e, &[1, -1])]).unwrap();
        assert!(!compact.is_dominant(&w(e, &[1, 2])));
    }

    #[test]
    fn orbits() {
        let a1 = a(1);
        let amb = Ambient::TypeA(2);
        let o = weyl_orbit(a1.positive_system(), &w(amb, &[1, 0]));
        assert_eq!(o.len(), 2);
        assert!(o.contains(&w(amb, &[0, 1])));
        let a2 = a(2);
        let a3 = Ambient::TypeA(3);
        assert_eq!(weyl_orbit(a2.positive_system(), &w(a3, &[1, 0, -1])).len(), 6);
        assert_eq!(weyl_orbit(a2.positive_system(), &Weight::zero(a3)).len(), 1);
        let signed = signed_orbit(a2.positive_system(), &w(a3, &[1, 0, -1]));
        assert_eq!(signed.iter().map(|(_, s)| *s as i32).sum::<i32>(), 0);
    }

    #[test]
    fn rho_values() {
        let e = Ambient::Euclidean(4);
        let compact: Vec<Weight> =
            (0..4).flat_map(|i| ((i + 1)..4).map(move |j| Weight::difference(e, i, j))).collect();
        assert_eq!(
            rho(e, &compact).coords(),
            &[frac(3, 2), frac(1, 2), frac(-1, 2), frac(-3, 2)]
        );
        assert!(rho(e, &[]).is_zero());
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = a(2);
        let amb = Ambient::TypeA(3);
        assert_eq!(weyl_dim(a2.positive_system(), &Weight::zero(amb)).unwrap(), 1);
        assert_eq!(weyl_dim(a2.positive_system(), &w(amb, &[1, 0, -1])).unwrap(), 8);
        let a1 = a(1);
        for n in 0..6 {
            assert_eq!(weyl_dim(a1.positive_system(), &w(Ambient::TypeA(2), &[n, 0])).unwrap(), n as u64 + 1);
        }
        assert!(weyl_dim(a1.positive_system(), &w(Ambient::TypeA(2), &[0, 1])).is_err());
    }

    #[test]
    fn freudenthal_examples() {
        let a2 = a(2);
        let amb = Ambient::TypeA(3);
        let adj = freudenthal(a2.positive_system(), &w(amb, &[1, 0, -1])).unwrap();
        assert_eq!(adj.len(), 7);
        assert_eq!(adj[&Weight::zero(amb)], 2);
        assert_eq!(adj.values().sum::<u64>(), 8);

        let triv = freudenthal(a2.positive_system(), &Weight::zero(amb)).unwrap();
        assert_eq!(triv.len(), 1);

        let a1 = a(1);
        let a2amb = Ambient::TypeA(2);
        let m = freudenthal(a1.positive_system(), &w(a2amb, &[2, 0])).unwrap();
        let expect: BTreeMap<Weight, u64> =
            [w(a2amb, &[2, 0]), w(a2amb, &[1, 1]), w(a2amb, &[0, 2])].into_iter().map(|x| (x, 1)).collect();
        assert_eq!(m, expect);
    }

    #[test]
    fn freudenthal_c2() {
        let c2 = c(2);
        let e = Ambient::Euclidean(2);
        // Adjoint of sp(4): highest root 2e1, dim 10, zero weight multiplicity 2.
        let adj = freudenthal(c2.positive_system(), &w(e, &[2, 0])).unwrap();
        assert_eq!(adj.values().sum::<u64>(), 10);
        assert_eq!(adj[&Weight::zero(e)], 2);
    }
}
