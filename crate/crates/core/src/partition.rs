//! Kostant-type partition functions over a finite list of vectors.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::strictly_positive_functional;
use crate::rational::{is_integer, Rational};
use crate::weight::{Ambient, Weight};

/// Counts the ways to write a target as a sum of generators with
/// nonnegative integer coefficients. Repeated generators count as distinct
/// colours.
///
/// Termination rests on a grading functional `g` with `g(β) > 0` for every
/// generator: the recursion never leaves the half-space `g ≥ 0`.
#[derive(Debug)]
pub struct PartitionFunction {
    ambient: Ambient,
    generators: Vec<Weight>,
    grading: Weight,
    integral: bool,
    memo: Mutex<HashMap<(usize, Weight), u64>>,
}

impl PartitionFunction {
    /// With `grading = None` a strictly positive functional is searched for
    /// and `Error::NoGrading` is returned if none exists.
    pub fn new(ambient: Ambient, generators: Vec<Weight>, grading: Option<Weight>) -> Result<PartitionFunction> {
        for g in &generators {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch(ambient.to_string(), g.ambient().to_string()));
            }
        }
        let grading = match grading {
            Some(g) => {
                if g.ambient() != ambient {
                    return Err(Error::AmbientMismatch(ambient.to_string(), g.ambient().to_string()));
                }
                if generators.iter().any(|b| !b.dot(&g).is_positive()) {
                    return Err(Error::NoGrading);
                }
                g
            }
            None => {
                let vecs: Vec<Vec<Rational>> = generators.iter().map(|g| g.coords().to_vec()).collect();
                let eta = strictly_positive_functional(&vecs, ambient.dim()).ok_or(Error::NoGrading)?;
                Weight::new(ambient, eta)?
            }
        };
        let integral = generators.iter().all(|g| g.coords().iter().all(is_integer));
        Ok(PartitionFunction { ambient, generators, grading, integral, memo: Mutex::new(HashMap::new()) })
    }

    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    pub fn grading(&self) -> &Weight {
        &self.grading
    }

    pub fn count(&self, target: &Weight) -> Result<u64> {
        target.check_same_ambient(&Weight::zero(self.ambient))?;
        if self.integral && !target.coords().iter().all(is_integer) {
            return Ok(0);
        }
        Ok(self.count_from(self.generators.len(), target))
    }

    fn count_from(&self, k: usize, target: &Weight) -> u64 {
        if target.dot(&self.grading).is_negative() {
            return 0;
        }
        if k == 0 {
            return u64::from(target.is_zero());
        }
        let key = (k, target.clone());
        if let Some(&v) = self.memo.lock().expect("partition memo poisoned").get(&key) {
            return v;
        }
        let g = &self.generators[k - 1];
        let mut total = 0u64;
        let mut rest = target.clone();
        while !rest.dot(&self.grading).is_negative() {
            total += self.count_from(k - 1, &rest);
            rest = &rest - g;
        }
        self.memo.lock().expect("partition memo poisoned").insert(key, total);
        total
    }
}

/// One-shot partition count with an automatically chosen grading.
pub fn kostant_partition(generators: &[Weight], target: &Weight) -> Result<u64> {
    if generators.is_empty() {
        return Ok(u64::from(target.is_zero()));
    }
    let pf = PartitionFunction::new(target.ambient(), generators.to_vec(), None)?;
    pf.count(target)
}

/// Number of generators needed to reach `target` is bounded by
/// `g(target) / min g(β)`; exposed for callers that enumerate by degree.
pub fn grading_bound(pf: &PartitionFunction, target: &Weight) -> Option<Rational> {
    let min = pf.generators.iter().map(|b| b.dot(&pf.grading)).min()?;
    if min.is_zero() {
        return None;
    }
    Some(target.dot(&pf.grading) / min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(Ambient::Euclidean(xs.len()), xs).unwrap()
    }

    #[test]
    fn examples() {
        let b = w(&[1, 1]);
        assert_eq!(kostant_partition(std::slice::from_ref(&b), &b.scale(int(3))).unwrap(), 1);
        assert_eq!(kostant_partition(std::slice::from_ref(&b), &b.scale(frac(1, 2))).unwrap(), 0);
        let b1 = w(&[1, 0]);
        let b2 = w(&[0, 1]);
        let b12 = w(&[1, 1]);
        assert_eq!(kostant_partition(&[b1, b2, b12.clone()], &b12).unwrap(), 2);
        assert_eq!(kostant_partition(&[b], &Weight::zero(Ambient::Euclidean(2))).unwrap(), 1);
    }

    #[test]
    fn no_grading() {
        let gens = vec![w(&[1, 0]), w(&[-1, 0])];
        assert_eq!(kostant_partition(&gens, &w(&[0, 0])).unwrap_err(), Error::NoGrading);
    }

    #[test]
    fn c2_noncompact_counts() {
        // Partitions into 2e1, e1+e2, 2e2 of (2,2): {2e1,2e2}, {2(e1+e2)}.
        let gens = vec![w(&[2, 0]), w(&[1, 1]), w(&[0, 2])];
        assert_eq!(kostant_partition(&gens, &w(&[2, 2])).unwrap(), 2);
        assert_eq!(kostant_partition(&gens, &w(&[1, -1])).unwrap(), 0);
    }
}
