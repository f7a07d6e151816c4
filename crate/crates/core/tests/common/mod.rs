//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hds_core::rational::int;
use hds_core::rootsys::RootDatum;
use hds_core::{Ambient, Rational, Weight};

pub fn w(amb: Ambient, xs: &[i64]) -> Weight {
    Weight::from_ints(amb, xs).unwrap()
}

/// Classical root data by Cartan type and rank.
pub fn classical(kind: char, r: usize) -> RootDatum {
    let (amb, simple) = match kind {
        'A' => {
            let amb = Ambient::TypeA(r + 1);
            (amb, (0..r).map(|i| Weight::difference(amb, i, i + 1)).collect::<Vec<_>>())
        }
        'B' | 'C' | 'D' => {
            let amb = Ambient::Euclidean(r);
            let mut s: Vec<Weight> = (0..r - 1).map(|i| Weight::difference(amb, i, i + 1)).collect();
            let last = match kind {
                'B' => Weight::unit(amb, r - 1),
                'C' => Weight::unit(amb, r - 1).scale(int(2)),
                _ => &Weight::unit(amb, r - 2) + &Weight::unit(amb, r - 1),
            };
            s.push(last);
            (amb, s)
        }
        _ => panic!("unknown type {kind}"),
    };
    RootDatum::from_simple_roots(amb, simple).unwrap()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// All nonnegative integer combinations of `gens` equal to `target`, by
/// exhaustive search. `grade` must be positive on every generator; it
/// bounds each coefficient.
pub fn brute_partition(gens: &[Weight], target: &Weight, grade: &Weight) -> u64 {
    fn go(gens: &[Weight], rest: Weight, grade: &Weight) -> u64 {
        match gens.split_first() {
            None => u64::from(rest.is_zero()),
            Some((g, tail)) => {
                let mut total = 0;
                let mut cur = rest;
                while cur.dot(grade) >= Rational::from_integer(0) {
                    total += go(tail, cur.clone(), grade);
                    cur = &cur - g;
                }
                total
            }
        }
    }
    assert!(gens.iter().all(|g| g.dot(grade) > Rational::from_integer(0)));
    go(gens, target.clone(), grade)
}

/// Weight multiset of the degree-d symmetric power of the span of `gens`
/// (each generator a weight vector), by listing monomials.
pub fn sym_power_weights(amb: Ambient, gens: &[Weight], d: u64) -> BTreeMap<Weight, u64> {
    fn go(gens: &[Weight], d: u64, acc: Weight, out: &mut BTreeMap<Weight, u64>) {
        if d == 0 {
            *out.entry(acc).or_insert(0) += 1;
            return;
        }
        for (i, g) in gens.iter().enumerate() {
            go(&gens[i..], d - 1, &acc + g, out);
        }
    }
    let mut out = BTreeMap::new();
    go(gens, d, Weight::zero(amb), &mut out);
    out
}

/// Highest weights of a character given as a weight multiset, peeling off
/// the maximal dominant weight with a Freudenthal character each time.
pub fn peel(
    ps: &hds_core::rootsys::PositiveSystem,
    mut ch: BTreeMap<Weight, i64>,
    grade: &Weight,
) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    loop {
        ch.retain(|_, m| *m != 0);
        let top = ch
            .iter()
            .filter(|(w, _)| ps.is_dominant(w))
            .max_by(|a, b| a.0.dot(grade).cmp(&b.0.dot(grade)).then_with(|| a.0.cmp(b.0)))
            .map(|(w, m)| (w.clone(), *m));
        let Some((hw, m)) = top else {
            assert!(ch.is_empty(), "character has no dominant weight left: {ch:?}");
            return out;
        };
        assert!(m > 0, "negative multiplicity at {hw}");
        for (wt, k) in hds_core::rootsys::freudenthal(ps, &hw).unwrap() {
            *ch.entry(wt).or_insert(0) -= m * k as i64;
        }
        out.insert(hw, m as u64);
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}
