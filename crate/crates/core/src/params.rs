//! Discrete-series parameters: chambers of the strongly elliptic set, the
//! Blattner parameter `Λ(λ) = λ − ρ_c + ρ_n(λ)` and the sign condition
//! relating `λ` to `Λ(λ)`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hermitian::{in_c_hol, in_c_hol_geq, HermitianPair};
use crate::rootsys::{rho, weyl_orbit};
use crate::weight::Weight;

/// A positive system of the full root datum containing `R_c⁺`, recorded by
/// its noncompact part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub id: usize,
    pub noncompact_positives: Vec<Weight>,
    pub rho_n: Weight,
    /// A regular element of the chamber (a Weyl conjugate of `ρ_hol`).
    pub sample: Weight,
}

impl Chamber {
    /// `(β, ξ) > 0` on the chamber's noncompact positives and `ξ` strictly
    /// compact-dominant.
    pub fn contains(&self, pair: &HermitianPair, xi: &Weight) -> bool {
        pair.compact_positive_system().is_strictly_dominant(xi)
            && self.noncompact_positives.iter().all(|b| b.dot(xi).is_positive())
    }

    /// Closure: the same inequalities, non-strict.
    pub fn closure_contains(&self, pair: &HermitianPair, xi: &Weight) -> bool {
        pair.is_compact_dominant(xi) && self.noncompact_positives.iter().all(|b| !b.dot(xi).is_negative())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id.to_string(),
            "rho_n": self.rho_n,
            "noncompact_positives": self.noncompact_positives,
        })
    }
}

fn compute_chambers(pair: &HermitianPair) -> Vec<Chamber> {
    let compact = pair.compact_positive_system();
    let orbit = weyl_orbit(pair.holomorphic_positives(), &pair.rho_hol());
    let mut found: Vec<Chamber> = orbit
        .into_iter()
        .filter(|x| compact.is_strictly_dominant(x))
        .map(|x| {
            let nc: Vec<Weight> = pair.noncompact_roots().iter().filter(|b| b.dot(&x).is_positive()).cloned().collect();
            let rho_n = rho(pair.ambient(), &nc);
            Chamber { id: 0, noncompact_positives: nc, rho_n, sample: x }
        })
        .collect();
    let hol: BTreeSet<&Weight> = pair.noncompact_positives().iter().collect();
    found.sort_by(|a, b| {
        let ha = a.noncompact_positives.iter().collect::<BTreeSet<_>>() == hol;
        let hb = b.noncompact_positives.iter().collect::<BTreeSet<_>>() == hol;
        hb.cmp(&ha).then_with(|| a.rho_n.coords().cmp(b.rho_n.coords()))
    });
    for (i, c) in found.iter_mut().enumerate() {
        c.id = i;
    }
    found
}

/// All chambers; the holomorphic one has id 0, the rest are ordered
/// lexicographically by `ρ_n`.
pub fn chambers(pair: &HermitianPair) -> &[Chamber] {
    pair.chambers.get_or_init(|| compute_chambers(pair))
}

pub fn rho_n_of(chamber: &Chamber) -> &Weight {
    &chamber.rho_n
}

fn is_regular(pair: &HermitianPair, lam: &Weight) -> bool {
    pair.root_datum().positive_system().positives().iter().all(|a| !a.dot(lam).is_zero())
}

/// `λ ∈ Ĝ_d`: compact-dominant, regular, and `λ − ρ_hol` in the weight lattice.
pub fn in_ghat_d(pair: &HermitianPair, lam: &Weight) -> bool {
    lam.ambient() == pair.ambient()
        && pair.is_compact_dominant(lam)
        && is_regular(pair, lam)
        && (lam - &pair.rho_hol()).is_integral()
}

/// Half the sum of the noncompact roots positive on `λ`.
pub fn rho_n_lambda(pair: &HermitianPair, lam: &Weight) -> Result<Weight> {
    pair.check_ambient(lam)?;
    let mut pos = Vec::new();
    for b in pair.noncompact_roots() {
        let s = b.dot(lam);
        if s.is_zero() {
            return Err(Error::NoncompactWall(lam.to_string()));
        }
        if s.is_positive() {
            pos.push(b.clone());
        }
    }
    Ok(rho(pair.ambient(), &pos))
}

/// The chamber containing a regular compact-dominant `λ`.
pub fn chamber_of<'a>(pair: &'a HermitianPair, lam: &Weight) -> Result<&'a Chamber> {
    pair.check_ambient(lam)?;
    if pair.noncompact_roots().iter().any(|b| b.dot(lam).is_zero()) {
        return Err(Error::NoncompactWall(lam.to_string()));
    }
    chambers(pair)
        .iter()
        .find(|c| c.contains(pair, lam))
        .ok_or_else(|| Error::OutsideChamber(lam.to_string()))
}

fn require_ghat(pair: &HermitianPair, lam: &Weight) -> Result<()> {
    pair.check_ambient(lam)?;
    if in_ghat_d(pair, lam) {
        Ok(())
    } else {
        Err(Error::NotHarishChandra(lam.to_string()))
    }
}

/// `Λ(λ) = λ − ρ_c + ρ_n(λ)`.
pub fn blattner_param(pair: &HermitianPair, lam: &Weight) -> Result<Weight> {
    require_ghat(pair, lam)?;
    let big = &(lam - pair.rho_c()) + &rho_n_lambda(pair, lam)?;
    if !pair.is_dominant_weight(&big) {
        return Err(Error::Internal(format!("Blattner parameter {big} of {lam} is not a dominant weight")));
    }
    Ok(big)
}

/// `(β, λ)(β, Λ(λ)) > 0` for every noncompact root `β`.
pub fn condition_hc(pair: &HermitianPair, lam: &Weight) -> Result<bool> {
    let big = blattner_param(pair, lam)?;
    Ok(pair.noncompact_roots().iter().all(|b| (b.dot(lam) * b.dot(&big)).is_positive()))
}

/// Inverse of the Blattner map on the holomorphic chamber: `λ = Λ + ρ_c − ρ_n`.
pub fn hc_from_blattner(pair: &HermitianPair, big: &Weight) -> Result<Weight> {
    if !in_c_hol_geq(pair, big)? {
        return Err(Error::NotHolomorphic(format!("{big} fails (Lambda - 2 rho_n, beta_min) >= 0")));
    }
    let lam = &(big + pair.rho_c()) - pair.rho_n();
    if !(in_ghat_d(pair, &lam) && in_c_hol(pair, &lam)) {
        return Err(Error::Internal(format!("{lam} is not a holomorphic Harish-Chandra parameter")));
    }
    Ok(lam)
}
