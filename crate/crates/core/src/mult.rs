//! Multiplicity engines: Klimyk tensor products, the Schmid decomposition of
//! `S(p⁺)`, the holomorphic model `V_Λ ⊗ S(p⁺)` and the Blattner formula.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hermitian::{in_c_hol, HermitianPair};
use crate::params::{blattner_param, condition_hc, in_ghat_d};
use crate::partition::PartitionFunction;
use crate::rational::{int, is_integer};
use crate::rootsys::{dominant_rep, freudenthal, signed_orbit, weyl_dim, PositiveSystem};
use crate::weight::Weight;

/// Finite sum of irreducibles, keyed by highest weight, optionally graded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepDecomposition {
    pub terms: BTreeMap<Weight, u64>,
    pub grading: Option<BTreeMap<Weight, u64>>,
}

impl RepDecomposition {
    pub fn single(hw: Weight) -> RepDecomposition {
        RepDecomposition { terms: BTreeMap::from([(hw, 1)]), grading: None }
    }

    pub fn mult(&self, hw: &Weight) -> u64 {
        self.terms.get(hw).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult · dim`.
    pub fn dimension(&self, positives: &PositiveSystem) -> Result<u64> {
        self.terms
            .iter()
            .map(|(hw, m)| weyl_dim(positives, hw).map(|d| d * m))
            .sum()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(hw, m)| {
                let mut t = json!({ "hw": hw, "mult": m.to_string() });
                if let Some(d) = self.grading.as_ref().and_then(|g| g.get(hw)) {
                    t["degree"] = json!(d.to_string());
                }
                t
            })
            .collect();
        json!({ "terms": terms })
    }
}

/// Klimyk's formula: `V_λ ⊗ V_Λ = Σ_{ν ∈ wt(V_λ)} m(ν)·det(w)·V_{w(Λ+ν+ρ)−ρ}`.
pub fn tensor_decompose(positives: &PositiveSystem, lam: &Weight, big: &Weight) -> Result<RepDecomposition> {
    for x in [lam, big] {
        if x.ambient() != positives.ambient() {
            return Err(Error::AmbientMismatch(positives.ambient().to_string(), x.ambient().to_string()));
        }
        if !positives.is_dominant(x) {
            return Err(Error::NotDominant(x.to_string()));
        }
    }
    let (da, db) = (weyl_dim(positives, lam)?, weyl_dim(positives, big)?);
    // Expand the smaller factor into weights.
    let (small, large) = if da <= db { (lam, big) } else { (big, lam) };
    let rho = positives.rho();
    let shifted = large + &rho;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in freudenthal(positives, small)? {
        let (dom, sign) = dominant_rep(positives, &(&shifted + &nu));
        if sign != 0 {
            *acc.entry(&dom - &rho).or_insert(0) += sign as i64 * m as i64;
        }
    }
    let mut terms = BTreeMap::new();
    for (hw, c) in acc {
        if c < 0 {
            return Err(Error::Internal(format!("negative Klimyk coefficient {c} at {hw}")));
        }
        if c > 0 {
            terms.insert(hw, c as u64);
        }
    }
    let out = RepDecomposition { terms, grading: None };
    let total = out.dimension(positives)?;
    if total != da * db {
        return Err(Error::Internal(format!("tensor product dimension {total} != {da}*{db}")));
    }
    Ok(out)
}

/// Highest weights `Σ n_k(γ1+…+γk)` with `Σ k·n_k = d`, each with multiplicity one.
pub fn schmid_degree(pair: &HermitianPair, d: u64) -> RepDecomposition {
    let gens = pair.kirwan_cone();
    let mut terms = BTreeMap::new();
    let mut grading = BTreeMap::new();
    let mut stack: Vec<(usize, u64, Weight)> = vec![(0, d, Weight::zero(pair.ambient()))];
    while let Some((k, left, acc)) = stack.pop() {
        if left == 0 {
            terms.insert(acc.clone(), 1);
            grading.insert(acc, d);
            continue;
        }
        if k == gens.len() {
            continue;
        }
        let step = (k + 1) as u64;
        let mut n = 0;
        while n * step <= left {
            stack.push((k + 1, left - n * step, &acc + &gens[k].scale(int(n as i64))));
            n += 1;
        }
    }
    RepDecomposition { terms, grading: Some(grading) }
}

/// Weights of `S^d(p⁺)` with multiplicity: sums of `d`-element multisets of
/// `R_n^{+,z_o}`.
pub fn sym_power_character(pair: &HermitianPair, d: u64) -> BTreeMap<Weight, u64> {
    let roots = pair.noncompact_positives();
    let mut out = BTreeMap::new();
    fn rec(roots: &[Weight], start: usize, left: u64, acc: Weight, out: &mut BTreeMap<Weight, u64>) {
        if left == 0 {
            *out.entry(acc).or_insert(0) += 1;
            return;
        }
        for i in start..roots.len() {
            rec(roots, i, left - 1, &acc + &roots[i], out);
        }
    }
    rec(roots, 0, d, Weight::zero(pair.ambient()), &mut out);
    out
}

fn require_holomorphic(pair: &HermitianPair, big: &Weight) -> Result<()> {
    pair.check_ambient(big)?;
    if !pair.is_dominant_weight(big) {
        return Err(Error::NotDominant(big.to_string()));
    }
    if !in_c_hol(pair, big) {
        return Err(Error::NotHolomorphic(big.to_string()));
    }
    Ok(())
}

/// Degree-`d` part of `V_Λ ⊗ S(p⁺)` as a K-module.
pub fn holo_k_decompose(pair: &HermitianPair, big: &Weight, d: u64) -> Result<RepDecomposition> {
    require_holomorphic(pair, big)?;
    let ps = pair.compact_positive_system();
    let mut terms: BTreeMap<Weight, u64> = BTreeMap::new();
    for kappa in schmid_degree(pair, d).terms.keys() {
        for (hw, m) in tensor_decompose(ps, big, kappa)?.terms {
            *terms.entry(hw).or_insert(0) += m;
        }
    }
    let grading = terms.keys().map(|k| (k.clone(), d)).collect();
    Ok(RepDecomposition { terms, grading: Some(grading) })
}

/// Multiplicity of `V_μ` in `V_Λ ⊗ S(p⁺)`, read off at the single degree
/// `deg(μ) − deg(Λ)`.
pub fn holo_k_mult(pair: &HermitianPair, big: &Weight, mu: &Weight) -> Result<u64> {
    require_holomorphic(pair, big)?;
    pair.check_ambient(mu)?;
    if !pair.is_compact_dominant(mu) {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let d = pair.degree(mu) - pair.degree(big);
    if !is_integer(&d) || d.is_negative() {
        return Ok(0);
    }
    Ok(holo_k_decompose(pair, big, d.to_integer() as u64)?.mult(mu))
}

/// Blattner-formula evaluator for one Harish-Chandra parameter; the
/// partition-function memo is shared across queries.
#[derive(Debug)]
pub struct BlattnerSeries<'a> {
    pair: &'a HermitianPair,
    lambda: Weight,
    big: Weight,
    positives: Vec<Weight>,
    partition: PartitionFunction,
}

impl<'a> BlattnerSeries<'a> {
    pub fn new(pair: &'a HermitianPair, lam: &Weight) -> Result<BlattnerSeries<'a>> {
        pair.check_ambient(lam)?;
        if !in_ghat_d(pair, lam) {
            return Err(Error::NotHarishChandra(lam.to_string()));
        }
        if !condition_hc(pair, lam)? {
            return Err(Error::ConditionFails(lam.to_string()));
        }
        let big = blattner_param(pair, lam)?;
        let positives: Vec<Weight> =
            pair.noncompact_roots().iter().filter(|b| b.dot(lam).is_positive()).cloned().collect();
        // λ itself is strictly positive on R_n^{+,λ}: it grades the partitions.
        let partition = PartitionFunction::new(pair.ambient(), positives.clone(), Some(lam.clone()))?;
        Ok(BlattnerSeries { pair, lambda: lam.clone(), big, positives, partition })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn blattner_parameter(&self) -> &Weight {
        &self.big
    }

    /// `R_n^{+,λ}`.
    pub fn noncompact_positives(&self) -> &[Weight] {
        &self.positives
    }

    /// `m(μ) = Σ_{w∈W_K} det(w)·P_λ(w(μ+ρ_c) − ρ_c − Λ)`.
    pub fn mult(&self, mu: &Weight) -> Result<u64> {
        self.pair.check_ambient(mu)?;
        if !self.pair.is_compact_dominant(mu) {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let rho_c = self.pair.rho_c();
        let shift = rho_c + &self.big;
        let mut total: i64 = 0;
        for (x, sign) in signed_orbit(self.pair.compact_positive_system(), &(mu + rho_c)) {
            let target = &x - &shift;
            let p = self.partition.count(&target)?;
            total += sign as i64 * p as i64;
        }
        if total < 0 {
            return Err(Error::Internal(format!("negative Blattner multiplicity {total} at {mu}")));
        }
        Ok(total as u64)
    }
}

/// Multiplicity of the K-type `μ` in the discrete series with parameter `λ`.
pub fn blattner_mult(pair: &HermitianPair, lam: &Weight, mu: &Weight) -> Result<u64> {
    BlattnerSeries::new(pair, lam)?.mult(mu)
}

/// Generators of the asymptotic K-support cone.
pub fn asymptotic_support(pair: &HermitianPair) -> Vec<Weight> {
    pair.kirwan_cone().to_vec()
}
