//! Hermitian symmetric pairs `(G, K)` for `SU(p,q)` and `Sp(n,ℝ)`: the
//! compact/noncompact split, β_min, the cascade of strongly orthogonal roots,
//! the Kirwan cone and the restricted root system.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::params::Chamber;
use crate::rational::{frac, int, Rational};
use crate::rootsys::{rho, PositiveSystem, RootDatum};
use crate::weight::{Ambient, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `SU(p,q)`, `K = S(U(p)×U(q))`.
    SU { p: usize, q: usize },
    /// `Sp(n,ℝ)`, `K = U(n)`.
    Sp { n: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SU { p, q } => write!(f, "SU({p},{q})"),
            Family::Sp { n } => write!(f, "Sp({n},R)"),
        }
    }
}

/// Root data of a Hermitian pair. Immutable after construction.
#[derive(Debug)]
pub struct HermitianPair {
    family: Family,
    ambient: Ambient,
    datum: RootDatum,
    compact: RootDatum,
    compact_roots: Vec<Weight>,
    noncompact_roots: Vec<Weight>,
    noncompact_positives: Vec<Weight>,
    z0: Weight,
    beta_min: Weight,
    rho_c: Weight,
    rho_n: Weight,
    cascade: Vec<Weight>,
    cone: Vec<Weight>,
    pub(crate) chambers: OnceLock<Vec<Chamber>>,
}

/// Entry point by family tag.
pub fn build_pair(family: Family) -> Result<HermitianPair> {
    HermitianPair::new(family)
}

impl HermitianPair {
    pub fn su(p: usize, q: usize) -> Result<HermitianPair> {
        HermitianPair::new(Family::SU { p, q })
    }

    pub fn sp(n: usize) -> Result<HermitianPair> {
        HermitianPair::new(Family::Sp { n })
    }

    pub fn new(family: Family) -> Result<HermitianPair> {
        let (ambient, simple, compact_simple, z0, beta_min) = match family {
            Family::SU { p, q } => {
                if p == 0 || q == 0 {
                    return Err(Error::InvalidParameters(format!("SU(p,q) needs p,q >= 1, got ({p},{q})")));
                }
                let n = p + q;
                let amb = Ambient::TypeA(n);
                let simple: Vec<Weight> = (0..n - 1).map(|i| Weight::difference(amb, i, i + 1)).collect();
                let compact_simple = simple.iter().enumerate().filter(|(i, _)| *i != p - 1).map(|(_, s)| s.clone()).collect();
                let z0c = (0..n)
                    .map(|i| if i < p { frac(q as i64, n as i64) } else { frac(-(p as i64), n as i64) })
                    .collect();
                let z0 = Weight::new(amb, z0c)?;
                (amb, simple, compact_simple, z0, Weight::difference(amb, p - 1, p))
            }
            Family::Sp { n } => {
                if n == 0 {
                    return Err(Error::InvalidParameters("Sp(n,R) needs n >= 1".into()));
                }
                let amb = Ambient::Euclidean(n);
                let mut simple: Vec<Weight> = (0..n - 1).map(|i| Weight::difference(amb, i, i + 1)).collect();
                let compact_simple = simple.clone();
                let long = Weight::unit(amb, n - 1).scale(int(2));
                simple.push(long.clone());
                let z0 = Weight::new(amb, vec![frac(1, 2); n])?;
                (amb, simple, compact_simple, z0, long)
            }
        };

        let datum = RootDatum::from_simple_roots(ambient, simple)?;
        let compact = RootDatum::from_simple_roots(ambient, compact_simple)?;
        let (compact_roots, noncompact_roots): (Vec<Weight>, Vec<Weight>) =
            datum.roots().iter().cloned().partition(|r| r.dot(&z0).is_zero());
        let noncompact_positives: Vec<Weight> =
            noncompact_roots.iter().filter(|r| r.dot(&z0).is_positive()).cloned().collect();
        let rho_c = compact.positive_system().rho();
        let rho_n = rho(ambient, &noncompact_positives);

        let mut pair = HermitianPair {
            family,
            ambient,
            datum,
            compact,
            compact_roots,
            noncompact_roots,
            noncompact_positives,
            z0,
            beta_min,
            rho_c,
            rho_n,
            cascade: Vec::new(),
            cone: Vec::new(),
            chambers: OnceLock::new(),
        };
        pair.cascade = pair.compute_cascade()?;
        pair.cone = pair
            .cascade
            .iter()
            .scan(Weight::zero(ambient), |acc, g| {
                *acc = &*acc + g;
                Some(acc.clone())
            })
            .collect();
        pair.check_invariants()?;
        Ok(pair)
    }

    fn compute_cascade(&self) -> Result<Vec<Weight>> {
        let hol = self.datum.positive_system();
        let mut chosen: Vec<Weight> = Vec::new();
        loop {
            let candidates: Vec<&Weight> = self
                .noncompact_positives
                .iter()
                .filter(|b| !chosen.contains(b))
                .filter(|b| chosen.iter().all(|g| self.strongly_orthogonal(b, g)))
                .collect();
            let Some(best) = candidates
                .iter()
                .map(|b| (hol.height(b).expect("roots lie in the span of the base"), *b))
                .max_by(|x, y| x.0.cmp(&y.0))
            else {
                break;
            };
            let ties = candidates.iter().filter(|b| hol.height(b) == Some(best.0)).count();
            if ties != 1 {
                return Err(Error::Internal(format!("cascade step has {ties} maximal roots")));
            }
            chosen.push(best.1.clone());
        }
        Ok(chosen)
    }

    /// Neither `a + b` nor `a − b` is a root.
    pub fn strongly_orthogonal(&self, a: &Weight, b: &Weight) -> bool {
        !self.datum.is_root(&(a + b)) && !self.datum.is_root(&(a - b))
    }

    fn check_invariants(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Internal(format!("{}: {m}", self.family)));
        if self.compact_roots.len() + self.noncompact_roots.len() != self.datum.roots().len() {
            return bad("root split is not a partition");
        }
        let c = self.beta_min.dot(&self.z0);
        if !c.is_positive() || self.noncompact_positives.iter().any(|b| b.dot(&self.z0) != c) {
            return bad("z0 pairing is not constant on noncompact positives");
        }
        let compact_pos = self.compact.positive_system();
        for b in &self.noncompact_positives {
            match compact_pos.simple_coords(&(b - &self.beta_min)) {
                Some(x) if x.iter().all(|v| !v.is_negative()) => {}
                _ => return bad("beta_min does not generate the noncompact positives"),
            }
        }
        let len = self.cascade.first().map(Weight::norm2);
        for (i, g) in self.cascade.iter().enumerate() {
            if Some(g.norm2()) != len {
                return bad("cascade roots have different lengths");
            }
            for h in &self.cascade[i + 1..] {
                if !self.strongly_orthogonal(g, h) {
                    return bad("cascade roots are not strongly orthogonal");
                }
            }
        }
        if self.cone.iter().any(|g| !compact_pos.is_dominant(g)) {
            return bad("cone generator is not compact-dominant");
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.datum
    }

    /// `R⁺_hol = R_c⁺ ∪ R_n^{+,z_o}`.
    pub fn holomorphic_positives(&self) -> &PositiveSystem {
        self.datum.positive_system()
    }

    pub fn compact_datum(&self) -> &RootDatum {
        &self.compact
    }

    /// `R_c⁺`.
    pub fn compact_positive_system(&self) -> &PositiveSystem {
        self.compact.positive_system()
    }

    pub fn compact_positives(&self) -> &[Weight] {
        self.compact.positive_system().positives()
    }

    pub fn compact_roots(&self) -> &[Weight] {
        &self.compact_roots
    }

    pub fn noncompact_roots(&self) -> &[Weight] {
        &self.noncompact_roots
    }

    /// `R_n^{+,z_o}`.
    pub fn noncompact_positives(&self) -> &[Weight] {
        &self.noncompact_positives
    }

    pub fn z0(&self) -> &Weight {
        &self.z0
    }

    pub fn beta_min(&self) -> &Weight {
        &self.beta_min
    }

    pub fn rho_c(&self) -> &Weight {
        &self.rho_c
    }

    pub fn rho_n(&self) -> &Weight {
        &self.rho_n
    }

    /// ρ of `R⁺_hol`.
    pub fn rho_hol(&self) -> Weight {
        &self.rho_c + &self.rho_n
    }

    pub fn rank(&self) -> usize {
        self.cascade.len()
    }

    pub fn cascade(&self) -> &[Weight] {
        &self.cascade
    }

    /// Generators `γ1 + … + γk` of the Kirwan cone.
    pub fn kirwan_cone(&self) -> &[Weight] {
        &self.cone
    }

    /// z_o-degree `(ν, z0)/(β_min, z0)`: 1 on noncompact positive roots.
    pub fn degree(&self, nu: &Weight) -> Rational {
        nu.dot(&self.z0) / self.beta_min.dot(&self.z0)
    }

    pub fn parse_weight(&self, coords: Vec<Rational>) -> Result<Weight> {
        Weight::new(self.ambient, coords)
    }

    pub fn check_ambient(&self, w: &Weight) -> Result<()> {
        if w.ambient() == self.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.ambient.to_string(), w.ambient().to_string()))
        }
    }

    pub fn is_compact_dominant(&self, w: &Weight) -> bool {
        self.compact_positive_system().is_dominant(w)
    }

    /// Dominant for `R_c⁺` and in the weight lattice.
    pub fn is_dominant_weight(&self, w: &Weight) -> bool {
        self.is_compact_dominant(w) && w.is_integral()
    }

    pub fn to_json(&self) -> Value {
        let params = match self.family {
            Family::SU { p, q } => json!({ "p": p.to_string(), "q": q.to_string() }),
            Family::Sp { n } => json!({ "n": n.to_string() }),
        };
        json!({
            "family": self.family.to_string(),
            "params": params,
            "cascade": self.cascade,
            "cone_generators": self.cone,
            "beta_min": self.beta_min,
            "rho_c": self.rho_c,
            "rho_n": self.rho_n,
            "z0": self.z0,
        })
    }
}

/// `ξ` compact-dominant with `(ξ, β_min) > 0`.
pub fn in_c_hol(pair: &HermitianPair, xi: &Weight) -> bool {
    xi.ambient() == pair.ambient && pair.is_compact_dominant(xi) && xi.dot(&pair.beta_min).is_positive()
}

/// `(Λ − 2ρ_n, β_min) ≥ 0` for a dominant weight `Λ`.
pub fn in_c_hol_geq(pair: &HermitianPair, lam: &Weight) -> Result<bool> {
    pair.check_ambient(lam)?;
    if !pair.is_dominant_weight(lam) {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let shifted = lam - &pair.rho_n.scale(int(2));
    Ok(!shifted.dot(&pair.beta_min).is_negative())
}

pub fn cascade(pair: &HermitianPair) -> Vec<Weight> {
    pair.cascade.clone()
}

pub fn kirwan_cone(pair: &HermitianPair) -> Vec<Weight> {
    pair.cone.clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiType {
    Empty,
    HalfGammas,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedRoots {
    pub half_sums: Vec<Weight>,
    pub xi_type: XiType,
}

/// Orthogonal projection of `R⁺_hol` onto the span of the cascade, compared
/// against the two admissible shapes `C_r` and `BC_r`.
pub fn restricted_roots(pair: &HermitianPair) -> Result<RestrictedRoots> {
    let amb = pair.ambient;
    let gammas = &pair.cascade;
    let project = |a: &Weight| -> Weight {
        gammas.iter().fold(Weight::zero(amb), |acc, g| &acc + &g.scale(a.dot(g) / g.norm2()))
    };
    let projected: BTreeSet<Weight> = pair
        .holomorphic_positives()
        .positives()
        .iter()
        .map(project)
        .filter(|w| !w.is_zero())
        .collect();

    let half = Rational::new(1, 2);
    let mut base: BTreeSet<Weight> = BTreeSet::new();
    for (i, gi) in gammas.iter().enumerate() {
        base.insert(gi.clone());
        for gj in &gammas[i + 1..] {
            base.insert((gi + gj).scale(half));
            base.insert((gi - gj).scale(half));
        }
    }
    let mut with_half = base.clone();
    with_half.extend(gammas.iter().map(|g| g.scale(half)));

    let r = gammas.len();
    let xi_type = if projected == base {
        debug_assert_eq!(projected.len(), r * r);
        XiType::Empty
    } else if projected == with_half {
        debug_assert_eq!(projected.len(), r * r + r);
        XiType::HalfGammas
    } else {
        return Err(Error::Internal(format!("{}: restricted roots match neither C_r nor BC_r", pair.family)));
    };
    Ok(RestrictedRoots { half_sums: projected.into_iter().collect(), xi_type })
}

/// `Σ t_k² γ_k / (γ_k, γ_k)` for `t` in the closed chamber `t1 ≥ … ≥ t_r ≥ 0`.
pub fn moment_image_on_a(pair: &HermitianPair, t: &[Rational]) -> Result<Weight> {
    let r = pair.rank();
    if t.len() != r {
        return Err(Error::DimensionMismatch { expected: r, got: t.len() });
    }
    let in_chamber = t.windows(2).all(|w| w[0] >= w[1]) && t.last().is_none_or(|x| !x.is_negative());
    if !in_chamber {
        return Err(Error::OutsideChamber("t must satisfy t1 >= ... >= tr >= 0".into()));
    }
    Ok(pair
        .cascade
        .iter()
        .zip(t)
        .fold(Weight::zero(pair.ambient), |acc, (g, tk)| &acc + &g.scale(tk * tk / g.norm2())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su_w(p: &HermitianPair, xs: &[i64]) -> Weight {
        Weight::from_ints(p.ambient(), xs).unwrap()
    }

    #[test]
    fn su32_roots() {
        let g = HermitianPair::su(3, 2).unwrap();
        let expect: BTreeSet<Weight> = [(0, 1), (0, 2), (1, 2), (3, 4)]
            .iter()
            .map(|&(i, j)| Weight::difference(g.ambient(), i, j))
            .collect();
        let got: BTreeSet<Weight> = g.compact_positives().iter().cloned().collect();
        assert_eq!(got, expect);
        let mut nc: BTreeSet<Weight> = BTreeSet::new();
        for i in 0..3 {
            for j in 3..5 {
                nc.insert(Weight::difference(g.ambient(), i, j));
                nc.insert(Weight::difference(g.ambient(), j, i));
            }
        }
        assert_eq!(g.noncompact_roots().iter().cloned().collect::<BTreeSet<_>>(), nc);
        assert_eq!(g.rho_c().to_string(), "(1,0,-1,1/2,-1/2)");
    }

    #[test]
    fn sp2_roots() {
        let g = HermitianPair::sp(2).unwrap();
        assert_eq!(g.compact_positives(), &[su_w(&g, &[1, -1])]);
        let nc: BTreeSet<Weight> = g.noncompact_positives().iter().cloned().collect();
        let expect: BTreeSet<Weight> = [[2, 0], [1, 1], [0, 2]].iter().map(|x| su_w(&g, x)).collect();
        assert_eq!(nc, expect);
        assert_eq!(g.rho_n().to_string(), "(3/2,3/2)");
    }

    #[test]
    fn cascades() {
        let g = HermitianPair::su(2, 3).unwrap();
        assert_eq!(g.cascade(), &[su_w(&g, &[1, 0, 0, 0, -1]), su_w(&g, &[0, 1, 0, -1, 0])]);
        let g = HermitianPair::sp(2).unwrap();
        assert_eq!(g.cascade(), &[su_w(&g, &[2, 0]), su_w(&g, &[0, 2])]);
        assert_eq!(g.kirwan_cone(), &[su_w(&g, &[2, 0]), su_w(&g, &[2, 2])]);
        let g = HermitianPair::su(1, 1).unwrap();
        assert_eq!(g.cascade(), &[su_w(&g, &[1, -1])]);
        assert_eq!(g.kirwan_cone(), &[su_w(&g, &[1, -1])]);
    }

    #[test]
    fn p_greater_than_q() {
        let g = HermitianPair::su(3, 1).unwrap();
        assert_eq!(g.cascade(), &[su_w(&g, &[1, 0, 0, -1])]);
        assert_eq!(g.beta_min(), &su_w(&g, &[0, 0, 1, -1]));
    }

    #[test]
    fn c_hol_membership() {
        let g = HermitianPair::sp(2).unwrap();
        assert!(in_c_hol(&g, &su_w(&g, &[2, 1])));
        assert!(!in_c_hol(&g, &su_w(&g, &[2, 0])));
        assert!(in_c_hol_geq(&g, &su_w(&g, &[3, 3])).unwrap());
        assert!(!in_c_hol_geq(&g, &su_w(&g, &[3, 2])).unwrap());
        let s = HermitianPair::su(3, 2).unwrap();
        assert!(!in_c_hol(&s, &su_w(&s, &[3, 1, -1, 0, -3])));
        let s11 = HermitianPair::su(1, 1).unwrap();
        // rho_n = (1/2,-1/2); (Lam, beta_min) = 2 (rho_n, beta_min) = 2.
        assert!(in_c_hol_geq(&s11, &su_w(&s11, &[1, -1])).unwrap());
        assert!(!in_c_hol_geq(&s11, &su_w(&s11, &[0, 0])).unwrap());
    }

    #[test]
    fn restricted_types() {
        assert_eq!(restricted_roots(&HermitianPair::su(2, 2).unwrap()).unwrap().xi_type, XiType::Empty);
        let bc = restricted_roots(&HermitianPair::su(2, 3).unwrap()).unwrap();
        assert_eq!(bc.xi_type, XiType::HalfGammas);
        assert_eq!(bc.half_sums.len(), 6);
        for n in 1..4 {
            let r = restricted_roots(&HermitianPair::sp(n).unwrap()).unwrap();
            assert_eq!(r.xi_type, XiType::Empty);
            assert_eq!(r.half_sums.len(), n * n);
        }
    }

    #[test]
    fn moment_on_a() {
        let g = HermitianPair::su(2, 3).unwrap();
        assert!(moment_image_on_a(&g, &[int(0), int(0)]).unwrap().is_zero());
        let m = moment_image_on_a(&g, &[int(1), int(0)]).unwrap();
        assert_eq!(m, g.cascade()[0].scale(frac(1, 2)));
        let m = moment_image_on_a(&g, &[int(1), int(1)]).unwrap();
        assert_eq!(m, g.kirwan_cone()[1].scale(frac(1, 2)));
        assert!(moment_image_on_a(&g, &[int(0), int(1)]).is_err());
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(HermitianPair::su(0, 2), Err(Error::InvalidParameters(_))));
        assert!(matches!(HermitianPair::sp(0), Err(Error::InvalidParameters(_))));
    }
}
