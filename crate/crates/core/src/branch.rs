//! Subgroups `H ⊂ K`, branching of K-types, the admissibility decision
//! procedure and H-multiplicities of discrete series.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hermitian::{in_c_hol, Family, HermitianPair};
use crate::linalg::{mat_vec, Matrix, Vector};
use crate::lp::{feasible_point, Constraint};
use crate::mult::{holo_k_decompose, schmid_degree, BlattnerSeries, RepDecomposition};
use crate::params::{blattner_param, condition_hc, in_ghat_d};
use crate::rational::{deserialize_rational, int, primitive_integer, Rational};
use crate::rootsys::{freudenthal, weyl_dim, weyl_orbit, RootDatum};
use crate::weight::{Ambient, Weight};

pub const DEFAULT_TRUNCATION: u64 = 6;
pub const DEFAULT_CUTOFF: u64 = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
pub struct SubgroupFlags {
    #[serde(default)]
    pub is_torus: bool,
    #[serde(default)]
    pub is_normal_in_k: bool,
    #[serde(default)]
    pub contains_center: bool,
}

/// A closed connected subgroup `H ⊂ K` whose maximal torus `S` lies in `T`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    name: String,
    projection: Matrix,
    target: Ambient,
    h_datum: RootDatum,
    flags: SubgroupFlags,
}

fn standard_a(amb: Ambient, k: usize) -> Vec<Weight> {
    (0..k).map(|i| Weight::difference(amb, i, i + 1)).collect()
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect()).collect()
}

impl Subgroup {
    /// Validate and assemble an embedding. `h_simple` lists simple roots of
    /// `H` in `s*`; an empty list means `H` is a torus.
    pub fn new(
        pair: &HermitianPair,
        name: &str,
        projection: Matrix,
        target: Ambient,
        h_simple: Vec<Weight>,
        flags: SubgroupFlags,
    ) -> Result<Subgroup> {
        let src = pair.ambient().dim();
        if projection.len() != target.dim() {
            return Err(Error::InvalidSubgroup(format!(
                "projection has {} rows, s* has dimension {}",
                projection.len(),
                target.dim()
            )));
        }
        if projection.iter().any(|r| r.len() != src) {
            return Err(Error::InvalidSubgroup(format!("projection rows must have length {src}")));
        }
        let h_datum = if h_simple.is_empty() {
            RootDatum::torus(target)
        } else {
            RootDatum::from_simple_roots(target, h_simple).map_err(|e| Error::InvalidSubgroup(e.to_string()))?
        };
        let sub = Subgroup { name: name.to_string(), projection, target, h_datum, flags };

        let images: BTreeSet<Weight> = pair.compact_roots().iter().map(|a| sub.restrict_unchecked(a)).collect();
        if let Some(bad) = images.iter().find(|w| !w.is_integral()) {
            return Err(Error::InvalidSubgroup(format!("compact root restricts to non-integral {bad}")));
        }
        if let Some(r) = sub.h_datum.roots().iter().find(|r| !images.contains(r)) {
            return Err(Error::InvalidSubgroup(format!("root {r} of H is not the restriction of a compact root")));
        }
        if flags.is_torus && sub.h_datum.rank() > 0 {
            return Err(Error::InvalidSubgroup("flagged as a torus but has roots".into()));
        }
        if flags.contains_center && sub.restrict_unchecked(pair.z0()).is_zero() {
            return Err(Error::InvalidSubgroup("flagged as containing Z(K) but z0 restricts to zero".into()));
        }
        Ok(sub)
    }

    /// Named embeddings: `su-p-block`, `su-q-block` (SU only), `su-n`
    /// (Sp only), `torus`, `center`, `full`.
    pub fn preset(pair: &HermitianPair, name: &str) -> Result<Subgroup> {
        let amb = pair.ambient();
        let n = amb.dim();
        let compact_abelian = pair.compact_roots().is_empty();
        let flags = |t, nrm, c| SubgroupFlags { is_torus: t, is_normal_in_k: nrm, contains_center: c };
        match (pair.family(), name) {
            (_, "torus") => Subgroup::new(pair, name, identity(n), amb, vec![], flags(true, compact_abelian, true)),
            (_, "center") => {
                let row: Vector = pair.z0().scale(Rational::from_integer(1) / pair.beta_min().dot(pair.z0())).coords().to_vec();
                Subgroup::new(pair, name, vec![row], Ambient::Euclidean(1), vec![], flags(true, true, true))
            }
            (_, "full") => {
                let simple = pair.compact_datum().simple_roots().to_vec();
                Subgroup::new(pair, name, identity(n), amb, simple, flags(compact_abelian, true, true))
            }
            (Family::SU { p, q }, "su-p-block" | "su-q-block") => {
                let (size, offset) = if name == "su-p-block" { (p, 0) } else { (q, p) };
                let proj: Matrix = (0..size)
                    .map(|i| (0..n).map(|j| int((j == offset + i) as i64)).collect())
                    .collect();
                let target = Ambient::TypeA(size);
                Subgroup::new(pair, name, proj, target, standard_a(target, size - 1), flags(size == 1, true, false))
            }
            (Family::Sp { n }, "su-n") => {
                let target = Ambient::TypeA(n);
                Subgroup::new(pair, name, identity(n), target, standard_a(target, n - 1), flags(n == 1, true, false))
            }
            _ => Err(Error::InvalidSubgroup(format!("unknown preset {name:?} for {}", pair.family()))),
        }
    }

    pub fn preset_names(pair: &HermitianPair) -> &'static [&'static str] {
        match pair.family() {
            Family::SU { .. } => &["su-p-block", "su-q-block", "torus", "center", "full"],
            Family::Sp { .. } => &["su-n", "torus", "center", "full"],
        }
    }

    /// Parse a subgroup description:
    /// `{"name", "projection": [[..]], "h_type": "torus"|"A<k>"|"C<k>", "flags": {..},
    ///   "target": "euclidean"|"type_a"}`.
    pub fn from_json(pair: &HermitianPair, text: &str) -> Result<Subgroup> {
        #[derive(Deserialize)]
        struct Row(#[serde(deserialize_with = "de_row")] Vec<Rational>);
        fn de_row<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
            #[derive(Deserialize)]
            struct Q(#[serde(deserialize_with = "deserialize_rational")] Rational);
            Ok(Vec::<Q>::deserialize(d)?.into_iter().map(|q| q.0).collect())
        }
        #[derive(Deserialize)]
        struct Desc {
            name: String,
            projection: Vec<Row>,
            #[serde(default = "default_h_type")]
            h_type: String,
            #[serde(default)]
            flags: SubgroupFlags,
            #[serde(default)]
            target: Option<String>,
        }
        fn default_h_type() -> String {
            "torus".into()
        }
        let desc: Desc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("subgroup JSON: {e}")))?;
        let m = desc.projection.len();
        let target = match desc.target.as_deref() {
            None | Some("euclidean") => Ambient::Euclidean(m),
            Some("type_a") => Ambient::TypeA(m),
            Some(other) => return Err(Error::Parse(format!("unknown target {other:?}"))),
        };
        let simple = parse_h_type(&desc.h_type, target)?;
        let proj = desc.projection.into_iter().map(|r| r.0).collect();
        Subgroup::new(pair, &desc.name, proj, target, simple, desc.flags)
    }

    fn restrict_unchecked(&self, nu: &Weight) -> Weight {
        Weight::new(self.target, mat_vec(&self.projection, nu.coords())).expect("projection rows match s*")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn target(&self) -> Ambient {
        self.target
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn flags(&self) -> SubgroupFlags {
        self.flags
    }

    pub fn h_datum(&self) -> &RootDatum {
        &self.h_datum
    }

    pub fn is_abelian(&self) -> bool {
        self.h_datum.rank() == 0
    }

    pub fn to_json(&self) -> Value {
        let proj: Vec<Vec<String>> =
            self.projection.iter().map(|r| r.iter().map(crate::rational::format_rational).collect()).collect();
        json!({
            "name": self.name,
            "projection": proj,
            "target": if self.target.is_type_a() { "type_a" } else { "euclidean" },
            "h_simple_roots": self.h_datum.simple_roots(),
            "flags": {
                "is_torus": self.flags.is_torus,
                "is_normal_in_k": self.flags.is_normal_in_k,
                "contains_center": self.flags.contains_center,
            },
        })
    }
}

fn parse_h_type(h: &str, target: Ambient) -> Result<Vec<Weight>> {
    let k = |s: &str| -> Result<usize> { s.parse().map_err(|_| Error::Parse(format!("bad h_type {h:?}"))) };
    let dim = target.dim();
    let need = |r: usize| -> Result<()> {
        if r > dim {
            Err(Error::InvalidSubgroup(format!("h_type {h} does not fit in s* of dimension {dim}")))
        } else {
            Ok(())
        }
    };
    if h == "torus" {
        return Ok(vec![]);
    }
    if let Some(rest) = h.strip_prefix('A') {
        let r = k(rest)?;
        need(r + 1)?;
        return Ok(standard_a(target, r));
    }
    if let Some(rest) = h.strip_prefix('C') {
        let r = k(rest)?;
        need(r)?;
        if r == 0 {
            return Ok(vec![]);
        }
        let mut s = standard_a(target, r - 1);
        s.push(Weight::unit(target, r - 1).scale(int(2)));
        return Ok(s);
    }
    Err(Error::Parse(format!("unknown h_type {h:?}")))
}

/// `ν ↦ P·ν` from `t*` to `s*`.
pub fn restrict_weight(sub: &Subgroup, nu: &Weight) -> Result<Weight> {
    let src = sub.projection.first().map_or(0, Vec::len);
    if nu.dim() != src {
        return Err(Error::DimensionMismatch { expected: src, got: nu.dim() });
    }
    Ok(sub.restrict_unchecked(nu))
}

/// Decomposition of `V^K_λ|_H`.
pub fn branch_irrep(pair: &HermitianPair, sub: &Subgroup, lam: &Weight) -> Result<RepDecomposition> {
    pair.check_ambient(lam)?;
    let kps = pair.compact_positive_system();
    if !kps.is_dominant_integral(lam) {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let dim_k = weyl_dim(kps, lam)?;
    let mut remaining: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in freudenthal(kps, lam)? {
        *remaining.entry(sub.restrict_unchecked(&nu)).or_insert(0) += m as i64;
    }
    let hps = sub.h_datum.positive_system();
    if sub.is_abelian() {
        let terms: BTreeMap<Weight, u64> = remaining.into_iter().map(|(w, m)| (w, m as u64)).collect();
        return Ok(RepDecomposition { terms, grading: None });
    }
    let two_rho = hps.rho().scale(int(2));
    let mut terms = BTreeMap::new();
    let mut total = 0u64;
    while let Some(top) = remaining
        .iter()
        .filter(|(_, m)| **m != 0)
        .max_by(|a, b| a.0.dot(&two_rho).cmp(&b.0.dot(&two_rho)).then_with(|| b.0.cmp(a.0)))
        .map(|(w, m)| (w.clone(), *m))
    {
        let (hw, m) = top;
        if m < 0 || !hps.is_dominant_integral(&hw) {
            return Err(Error::InvalidSubgroup(format!("branching {lam} to {} left multiplicity {m} at {hw}", sub.name)));
        }
        for (nu, c) in freudenthal(hps, &hw)? {
            let e = remaining.entry(nu).or_insert(0);
            *e -= m * c as i64;
        }
        remaining.retain(|_, v| *v != 0);
        total += m as u64 * weyl_dim(hps, &hw)?;
        terms.insert(hw, m as u64);
    }
    if total != dim_k {
        return Err(Error::Internal(format!("branching of {lam}: dimension {total} != {dim_k}")));
    }
    Ok(RepDecomposition { terms, grading: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Admissible,
    NotAdmissible,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Admissible => "Admissible",
            Status::NotAdmissible => "NotAdmissible",
            Status::Unknown => "Unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    CenterGrading,
    SeparatingFunctional { eta: Weight },
    ConeKernelTrivial,
    ConeKernelRay { witness: Weight },
    InvariantWitness { degree: u64, count: u64 },
    TruncationExhausted { n: u64 },
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::CenterGrading => "CenterGrading",
            Certificate::SeparatingFunctional { .. } => "SeparatingFunctional",
            Certificate::ConeKernelTrivial => "ConeKernelTrivial",
            Certificate::ConeKernelRay { .. } => "ConeKernelRay",
            Certificate::InvariantWitness { .. } => "InvariantWitness",
            Certificate::TruncationExhausted { .. } => "TruncationExhausted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub status: Status,
    pub certificate: Certificate,
}

impl AdmissibilityVerdict {
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "status": self.status.as_str(), "certificate": self.certificate.name() });
        match &self.certificate {
            Certificate::SeparatingFunctional { eta } => v["eta"] = json!(eta),
            Certificate::ConeKernelRay { witness } => v["witness"] = json!(witness),
            Certificate::InvariantWitness { degree, count } => {
                v["degree"] = json!(degree.to_string());
                v["count"] = json!(count.to_string());
            }
            Certificate::TruncationExhausted { n } => v["truncation"] = json!(n.to_string()),
            Certificate::CenterGrading | Certificate::ConeKernelTrivial => {}
        }
        v
    }
}

/// Vectors in `s*` in coordinates for the LP; type-A targets use the
/// sum-zero representative, so a sum-zero constraint on `η` is added.
fn positive_functional(target: Ambient, vectors: &[Weight]) -> Option<Weight> {
    let dim = target.dim();
    let mut cons: Vec<Constraint> = vectors.iter().map(|v| Constraint::ge(v.coords().to_vec(), int(1))).collect();
    if target.is_type_a() {
        cons.push(Constraint::eq(vec![int(1); dim], int(0)));
    }
    let eta = feasible_point(dim, &cons)?;
    let prim: Vec<Rational> = primitive_integer(&eta).into_iter().map(int).collect();
    Some(Weight::new(target, prim).expect("dimension matches"))
}

/// Route (a): `H ⊃ Z(K)`.
pub fn center_route(sub: &Subgroup) -> bool {
    sub.flags.contains_center
}

/// Route (b): `η ∈ s*` with `(P β, η) > 0` for every `β ∈ R_n^{+,z_o}`.
pub fn separating_functional(pair: &HermitianPair, sub: &Subgroup) -> Option<Weight> {
    let vs: Vec<Weight> = pair.noncompact_positives().iter().map(|b| sub.restrict_unchecked(b)).collect();
    positive_functional(sub.target, &vs)
}

/// Route (c), for normal `H`: a nonzero point of the Kirwan cone killed by
/// the projection, normalized to a primitive integer vector; `None` if the
/// intersection is `{0}`.
pub fn cone_kernel_ray(pair: &HermitianPair, sub: &Subgroup) -> Option<Weight> {
    let gens = pair.kirwan_cone();
    let r = gens.len();
    // Type-A images are stored sum-zero, so vanishing in the quotient is vanishing here.
    let images: Vec<Vec<Rational>> = gens.iter().map(|g| sub.restrict_unchecked(g).coords().to_vec()).collect();
    let mut cons = Vec::new();
    for k in 0..r {
        let mut e = vec![Rational::zero(); r];
        e[k] = int(1);
        cons.push(Constraint::ge(e, Rational::zero()));
    }
    cons.push(Constraint::eq((1..=r as i64).map(int).collect(), int(1)));
    for row in 0..sub.target.dim() {
        cons.push(Constraint::eq(images.iter().map(|im| im[row]).collect(), Rational::zero()));
    }
    let c = feasible_point(r, &cons)?;
    let x = gens.iter().zip(&c).fold(Weight::zero(pair.ambient()), |acc, (g, ck)| &acc + &g.scale(*ck));
    let prim: Vec<Rational> = primitive_integer(x.coords()).into_iter().map(int).collect();
    Some(Weight::new(pair.ambient(), prim).expect("dimension matches"))
}

/// Number of H-invariant lines in `S^d(p⁺)`.
pub fn invariants_dim(pair: &HermitianPair, sub: &Subgroup, d: u64) -> Result<u64> {
    let zero = Weight::zero(sub.target);
    let mut total = 0;
    for kappa in schmid_degree(pair, d).terms.keys() {
        total += branch_irrep(pair, sub, kappa)?.mult(&zero);
    }
    Ok(total)
}

/// Route (d): the first degree `1 ≤ d ≤ n` with an H-invariant in `S^d(p⁺)`.
pub fn invariant_search(pair: &HermitianPair, sub: &Subgroup, n: u64) -> Result<Option<(u64, u64)>> {
    for d in 1..=n {
        let c = invariants_dim(pair, sub, d)?;
        if c > 0 {
            return Ok(Some((d, c)));
        }
    }
    Ok(None)
}

/// Decision cascade for admissibility of the holomorphic discrete series
/// restricted to `H`.
pub fn admissible(pair: &HermitianPair, sub: &Subgroup, truncation: u64) -> Result<AdmissibilityVerdict> {
    let verdict = |status, certificate| Ok(AdmissibilityVerdict { status, certificate });
    if center_route(sub) {
        return verdict(Status::Admissible, Certificate::CenterGrading);
    }
    if let Some(eta) = separating_functional(pair, sub) {
        return verdict(Status::Admissible, Certificate::SeparatingFunctional { eta });
    }
    if sub.flags.is_normal_in_k {
        return match cone_kernel_ray(pair, sub) {
            None => verdict(Status::Admissible, Certificate::ConeKernelTrivial),
            Some(witness) => verdict(Status::NotAdmissible, Certificate::ConeKernelRay { witness }),
        };
    }
    if let Some((degree, count)) = invariant_search(pair, sub, truncation)? {
        return verdict(Status::NotAdmissible, Certificate::InvariantWitness { degree, count });
    }
    verdict(Status::Unknown, Certificate::TruncationExhausted { n: truncation })
}

/// Result of a truncated H-multiplicity computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HMult {
    pub value: u64,
    pub complete: bool,
    /// Largest degree that can contribute, when a functional certifies one;
    /// negative means no degree contributes.
    pub degree_bound: Option<i64>,
    pub cutoff: u64,
}

impl HMult {
    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.to_string(),
            "complete": self.complete,
            "degree_bound": self.degree_bound.map(|b| b.to_string()),
            "cutoff": self.cutoff.to_string(),
        })
    }
}

fn require_h_weight(sub: &Subgroup, mu: &Weight) -> Result<()> {
    if mu.ambient() != sub.target {
        return Err(Error::AmbientMismatch(sub.target.to_string(), mu.ambient().to_string()));
    }
    if !sub.h_datum.positive_system().is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_string()));
    }
    Ok(())
}

/// `floor((max_{W_H} (wμ, η) − min_{W_K} (P wΛ, η)) / c)`.
fn degree_bound(pair: &HermitianPair, sub: &Subgroup, big: &Weight, mu: &Weight, eta: &Weight, c: Rational) -> i64 {
    let lower = weyl_orbit(pair.compact_positive_system(), big)
        .iter()
        .map(|w| sub.restrict_unchecked(w).dot(eta))
        .min()
        .expect("orbit is nonempty");
    let upper = weyl_orbit(sub.h_datum.positive_system(), mu)
        .iter()
        .map(|w| w.dot(eta))
        .max()
        .expect("orbit is nonempty");
    ((upper - lower) / c).floor().to_integer()
}

/// Degree bound for normal `H` with `Δ_K ∩ ker P = 0`. Every K-type of
/// degree `d` is `s + ν` with `s = Σ n_k g_k`, `Σ k n_k = d` and `ν` a weight
/// of `V_Λ`, and restricts to copies of `V^H_{P(s+ν)}`. A functional `η`
/// positive on the projected generators `P g_k` gives `(P s, η) ≥ d·c` with
/// `c = min (P g_k, η)/k`.
fn cone_degree_bound(pair: &HermitianPair, sub: &Subgroup, big: &Weight, mu: &Weight) -> Option<i64> {
    let images: Vec<Weight> = pair.kirwan_cone().iter().map(|g| sub.restrict_unchecked(g)).collect();
    let eta = positive_functional(sub.target, &images)?;
    let c = images.iter().enumerate().map(|(k, v)| v.dot(&eta) / int(k as i64 + 1)).min()?;
    Some(degree_bound(pair, sub, big, mu, &eta, c))
}

/// Contribution of `V_Λ ⊗ S^d(p⁺)` to the multiplicity of `V^H_μ`.
pub fn h_mult_degree(pair: &HermitianPair, big: &Weight, sub: &Subgroup, mu: &Weight, d: u64) -> Result<u64> {
    let mut total = 0;
    for (kappa, m) in holo_k_decompose(pair, big, d)?.terms {
        total += m * branch_irrep(pair, sub, &kappa)?.mult(mu);
    }
    Ok(total)
}

/// Multiplicity of `V^H_μ` in the holomorphic discrete series with lowest
/// K-type `Λ`, summed over degrees `≤ cutoff`.
///
/// Completeness: every K-type of degree `d` has restricted weights `ν` with
/// `(ν, η) ≥ lower + d·c`, where `c = min (Pβ, η)` over noncompact positive
/// roots plays the role of the properness constant. A copy of `V^H_μ`
/// needs `(ν, η) ≤ upper`, so only `d ≤ (upper − lower)/c` can contribute.
pub fn h_mult(pair: &HermitianPair, big: &Weight, sub: &Subgroup, mu: &Weight, cutoff: u64) -> Result<HMult> {
    pair.check_ambient(big)?;
    if !pair.is_dominant_weight(big) {
        return Err(Error::NotDominant(big.to_string()));
    }
    if !in_c_hol(pair, big) {
        return Err(Error::NotHolomorphic(big.to_string()));
    }
    require_h_weight(sub, mu)?;
    let verdict = admissible(pair, sub, DEFAULT_TRUNCATION)?;
    if verdict.status != Status::Admissible {
        return Err(Error::NotAdmissible(format!(
            "{} restricted to {}: {} ({})",
            pair.family(),
            sub.name,
            verdict.status.as_str(),
            verdict.certificate.name()
        )));
    }
    let eta = match &verdict.certificate {
        Certificate::SeparatingFunctional { eta } => Some(eta.clone()),
        _ => separating_functional(pair, sub),
    };
    let bound = match (&eta, &verdict.certificate) {
        (Some(eta), _) => {
            let c = pair.noncompact_positives().iter().map(|b| sub.restrict_unchecked(b).dot(eta)).min().expect("p+ is nonzero");
            Some(degree_bound(pair, sub, big, mu, eta, c))
        }
        (None, Certificate::ConeKernelTrivial) => cone_degree_bound(pair, sub, big, mu),
        (None, _) => None,
    };
    let last = match bound {
        Some(b) if b < 0 => None,
        Some(b) => Some((b as u64).min(cutoff)),
        None => Some(cutoff),
    };
    let mut value = 0;
    if let Some(last) = last {
        for d in 0..=last {
            value += h_mult_degree(pair, big, sub, mu, d)?;
        }
    }
    let complete = bound.is_some_and(|b| b <= cutoff as i64);
    Ok(HMult { value, complete, degree_bound: bound, cutoff })
}

/// Multiplicity of `V^H_μ` in the discrete series with Harish-Chandra
/// parameter `λ`. Holomorphic `λ` reduces to [`h_mult`]; otherwise the
/// K-types `Λ + Σ n_β β` (`β ∈ R_n^{+,λ}`) are weighted by the Blattner
/// formula and branched, with the degree bound taken from a functional
/// positive on `P(W_K·R_n^{+,λ})`.
pub fn ds_h_mult(pair: &HermitianPair, lam: &Weight, sub: &Subgroup, mu: &Weight, cutoff: u64) -> Result<HMult> {
    pair.check_ambient(lam)?;
    if !in_ghat_d(pair, lam) {
        return Err(Error::NotHarishChandra(lam.to_string()));
    }
    if !condition_hc(pair, lam)? {
        return Err(Error::ConditionFails(lam.to_string()));
    }
    let big = blattner_param(pair, lam)?;
    if in_c_hol(pair, lam) {
        return h_mult(pair, &big, sub, mu, cutoff);
    }
    require_h_weight(sub, mu)?;
    let series = BlattnerSeries::new(pair, lam)?;
    let gens = series.noncompact_positives().to_vec();
    let kps = pair.compact_positive_system();
    let images: BTreeSet<Weight> = gens
        .iter()
        .flat_map(|b| weyl_orbit(kps, b))
        .map(|w| sub.restrict_unchecked(&w))
        .collect();
    let images: Vec<Weight> = images.into_iter().collect();
    let eta = positive_functional(sub.target, &images).ok_or_else(|| {
        Error::NotAdmissible(format!(
            "no functional on s* is positive on the restricted noncompact roots of the chamber of {lam}"
        ))
    })?;
    let c = images.iter().map(|v| v.dot(&eta)).min().expect("nonempty");
    let bound = degree_bound(pair, sub, &big, mu, &eta, c);
    let mut value = 0;
    if bound >= 0 {
        let last = (bound as u64).min(cutoff);
        let mut kappas: BTreeSet<Weight> = BTreeSet::from([big.clone()]);
        let mut frontier = vec![big.clone()];
        for _ in 0..last {
            let mut next = BTreeSet::new();
            for k in &frontier {
                for b in &gens {
                    next.insert(k + b);
                }
            }
            frontier = next.iter().filter(|k| !kappas.contains(*k)).cloned().collect();
            kappas.extend(next);
        }
        for kappa in kappas.iter().filter(|k| kps.is_dominant(k)) {
            let m = series.mult(kappa)?;
            if m > 0 {
                value += m * branch_irrep(pair, sub, kappa)?.mult(mu);
            }
        }
    }
    Ok(HMult { value, complete: bound <= cutoff as i64, degree_bound: Some(bound), cutoff })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(amb: Ambient, xs: &[i64]) -> Weight {
        Weight::from_ints(amb, xs).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let g = HermitianPair::su(2, 3).unwrap();
        let t = Subgroup::preset(&g, "torus").unwrap();
        let nu = w(g.ambient(), &[2, 1, 0, -1, -2]);
        assert_eq!(restrict_weight(&t, &nu).unwrap(), nu);
        let p = Subgroup::preset(&g, "su-p-block").unwrap();
        assert!(restrict_weight(&p, &w(g.ambient(), &[1, 1, 0, -1, -1])).unwrap().is_zero());
        let z = Subgroup::preset(&g, "center").unwrap();
        let beta = &g.noncompact_positives()[0];
        assert_eq!(restrict_weight(&z, beta).unwrap().coords(), &[int(1)]);
        assert!(restrict_weight(&z, &w(Ambient::TypeA(2), &[1, 0])).is_err());
    }

    #[test]
    fn branch_examples() {
        let g = HermitianPair::su(2, 3).unwrap();
        let full = Subgroup::preset(&g, "full").unwrap();
        let lam = w(g.ambient(), &[2, 1, 0, -1, -2]);
        assert_eq!(branch_irrep(&g, &full, &lam).unwrap(), RepDecomposition::single(lam.clone()));

        let p = Subgroup::preset(&g, "su-p-block").unwrap();
        let b = branch_irrep(&g, &p, &w(g.ambient(), &[1, 0, 0, 0, -1])).unwrap();
        assert_eq!(b.terms, BTreeMap::from([(w(Ambient::TypeA(2), &[1, 0]), 3)]));

        let s = HermitianPair::sp(2).unwrap();
        let t = Subgroup::preset(&s, "torus").unwrap();
        let b = branch_irrep(&s, &t, &w(s.ambient(), &[1, 0])).unwrap();
        assert_eq!(b.terms, BTreeMap::from([(w(s.ambient(), &[1, 0]), 1), (w(s.ambient(), &[0, 1]), 1)]));
    }

    #[test]
    fn admissibility_examples() {
        let g = HermitianPair::su(2, 3).unwrap();
        let p = Subgroup::preset(&g, "su-p-block").unwrap();
        let v = admissible(&g, &p, 4).unwrap();
        assert_eq!(v.status, Status::NotAdmissible);
        assert_eq!(v.certificate, Certificate::ConeKernelRay { witness: w(g.ambient(), &[1, 1, 0, -1, -1]) });
        let q = Subgroup::preset(&g, "su-q-block").unwrap();
        let v = admissible(&g, &q, 4).unwrap();
        assert_eq!((v.status, v.certificate), (Status::Admissible, Certificate::ConeKernelTrivial));
        let z = Subgroup::preset(&g, "center").unwrap();
        assert_eq!(admissible(&g, &z, 4).unwrap().certificate, Certificate::CenterGrading);
    }

    #[test]
    fn invariant_counts() {
        let g = HermitianPair::su(2, 3).unwrap();
        let p = Subgroup::preset(&g, "su-p-block").unwrap();
        assert_eq!(invariants_dim(&g, &p, 0).unwrap(), 1);
        assert_eq!(invariants_dim(&g, &p, 1).unwrap(), 0);
        assert_eq!(invariants_dim(&g, &p, 2).unwrap(), 3);
        let q = Subgroup::preset(&g, "su-q-block").unwrap();
        for d in 1..=4 {
            assert_eq!(invariants_dim(&g, &q, d).unwrap(), 0);
        }
    }

    #[test]
    fn h_mult_examples() {
        let s = HermitianPair::sp(2).unwrap();
        let t = Subgroup::preset(&s, "torus").unwrap();
        let big = w(s.ambient(), &[3, 3]);
        let r = h_mult(&s, &big, &t, &w(s.ambient(), &[4, 4]), DEFAULT_CUTOFF).unwrap();
        assert_eq!((r.value, r.complete), (1, true));
        let r = h_mult(&s, &big, &t, &big, DEFAULT_CUTOFF).unwrap();
        assert_eq!((r.value, r.complete), (1, true));
        let full = Subgroup::preset(&s, "full").unwrap();
        let r = h_mult(&s, &big, &full, &big, DEFAULT_CUTOFF).unwrap();
        assert_eq!((r.value, r.complete), (1, true));

        let g = HermitianPair::su(2, 3).unwrap();
        let p = Subgroup::preset(&g, "su-p-block").unwrap();
        let lam = w(g.ambient(), &[1, 1, 0, 0, -2]);
        assert!(matches!(
            h_mult(&g, &lam, &p, &Weight::zero(Ambient::TypeA(2)), 3),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn ds_h_mult_examples() {
        let s1 = HermitianPair::sp(1).unwrap();
        let t1 = Subgroup::preset(&s1, "full").unwrap();
        let r = ds_h_mult(&s1, &w(s1.ambient(), &[3]), &t1, &w(s1.ambient(), &[4]), DEFAULT_CUTOFF).unwrap();
        assert_eq!((r.value, r.complete), (1, true));
        let s = HermitianPair::sp(2).unwrap();
        let t = Subgroup::preset(&s, "torus").unwrap();
        let r = ds_h_mult(&s, &w(s.ambient(), &[2, 1]), &t, &w(s.ambient(), &[5, 3]), DEFAULT_CUTOFF).unwrap();
        assert_eq!((r.value, r.complete), (1, true));
    }

    #[test]
    fn subgroup_json() {
        let g = HermitianPair::su(2, 3).unwrap();
        let text = r#"{"name":"q","projection":[["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]],
                       "target":"type_a","h_type":"A2","flags":{"is_normal_in_k":true}}"#;
        let sub = Subgroup::from_json(&g, text).unwrap();
        assert_eq!(admissible(&g, &sub, 3).unwrap().certificate, Certificate::ConeKernelTrivial);
        assert!(Subgroup::from_json(&g, "{").is_err());
        let bad = r#"{"name":"x","projection":[["1/2","0","0","0","0"]]}"#;
        assert!(matches!(Subgroup::from_json(&g, bad), Err(Error::InvalidSubgroup(_))));
    }
}
