//! Golden checks of the worked examples: each item recomputes a set of
//! quantities and compares them with the stored expected values.

use std::time::Instant;

use serde_json::{json, Value};

use crate::branch::{admissible, restrict_weight, Certificate, Status, Subgroup};
use crate::error::Result;
use crate::hermitian::{in_c_hol, HermitianPair};
use crate::lp::cone_coefficients;
use crate::mult::{blattner_mult, holo_k_mult};
use crate::params::{blattner_param, chamber_of, chambers, condition_hc, in_ghat_d, rho_n_lambda};
use crate::rational::{int, parse_list};
use crate::weight::Weight;
use crate::Rational;

/// Expected values, written as comma-separated rationals.
#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub sp4_lambda: &'static str,
    pub sp4_rho_c: &'static str,
    pub sp4_rho_n: &'static str,
    pub sp4_shift: &'static str,
    pub sp4_blattner: &'static str,
    pub sp4_condition: bool,
    pub su32_rho_c: &'static str,
    pub su32_lambda: &'static str,
    pub su32_rho_n_c1: &'static str,
    pub su32_blattner: &'static str,
    pub su32_condition: bool,
    /// A point of `{λ1 > λ4 > λ2 > λ5 > λ3}`.
    pub su32_c2_sample: &'static str,
    pub sp2_chamber_count: usize,
    /// Points of the chambers `C2 = {θ1 > −θ2 > 0}` and `C3 = {−θ2 > θ1 > 0}`.
    pub sp2_c2_sample: &'static str,
    pub sp2_c3_sample: &'static str,
    pub sp2_bound: i64,
    pub su23_cascade: [&'static str; 2],
    pub supq_max: usize,
    pub cone_max: usize,
}

impl GoldenTable {
    pub fn reference() -> GoldenTable {
        GoldenTable {
            sp4_lambda: "5,3,1,-2",
            sp4_rho_c: "3/2,1/2,-1/2,-3/2",
            sp4_rho_n: "5/2,5/2,3/2,-1/2",
            sp4_shift: "1,2,2,1",
            sp4_blattner: "6,5,3,-1",
            sp4_condition: false,
            su32_rho_c: "1,0,-1,1/2,-1/2",
            su32_lambda: "3,1,-1,0,-3",
            su32_rho_n_c1: "1,1,0,-1/2,-3/2",
            su32_blattner: "3,2,0,-1,-4",
            su32_condition: false,
            su32_c2_sample: "2,0,-2,1,-1",
            sp2_chamber_count: 4,
            sp2_c2_sample: "2,-1",
            sp2_c3_sample: "1,-2",
            sp2_bound: 10,
            su23_cascade: ["1,0,0,0,-1", "0,1,0,-1,0"],
            supq_max: 6,
            cone_max: 7,
        }
    }
}

pub const ITEMS: &[&str] = &[
    "sp4-counterexample",
    "su32-values",
    "sp2-chambers",
    "supq-admissibility",
    "kirwan-cone",
    "su23-cascade",
    "build-examples",
    "blattner-vs-tensor",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemReport {
    pub name: String,
    pub pass: bool,
    pub mismatches: Vec<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub items: Vec<ItemReport>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .items
            .iter()
            .map(|i| json!({ "item": i.name, "pass": i.pass, "mismatches": i.mismatches }))
            .collect();
        json!({ "all_pass": self.all_pass(), "items": items })
    }
}

struct Checker {
    mismatches: Vec<String>,
}

impl Checker {
    fn eq<T: PartialEq + std::fmt::Display>(&mut self, what: &str, expected: T, actual: T) {
        if expected != actual {
            self.mismatches.push(format!("{what}: expected {expected}, actual {actual}"));
        }
    }

    fn truth(&mut self, what: &str, ok: bool) {
        if !ok {
            self.mismatches.push(format!("{what}: check failed"));
        }
    }
}

fn wt(pair: &HermitianPair, s: &str) -> Result<Weight> {
    pair.parse_weight(parse_list(s)?)
}

fn sp4(t: &GoldenTable, c: &mut Checker) -> Result<()> {
    let g = HermitianPair::sp(4)?;
    let lam = wt(&g, t.sp4_lambda)?;
    c.truth("lambda in G^_d", in_ghat_d(&g, &lam));
    c.eq("rho_c", wt(&g, t.sp4_rho_c)?, g.rho_c().clone());
    let rho_n = rho_n_lambda(&g, &lam)?;
    c.eq("rho_n(C)", wt(&g, t.sp4_rho_n)?, rho_n.clone());
    c.eq("-rho_c+rho_n(C)", wt(&g, t.sp4_shift)?, &rho_n - g.rho_c());
    let big = blattner_param(&g, &lam)?;
    c.eq("Lambda(lambda)", wt(&g, t.sp4_blattner)?, big.clone());
    c.eq("condition", t.sp4_condition, condition_hc(&g, &lam)?);
    let ch = chamber_of(&g, &lam)?;
    c.truth("Lambda outside closure of C", !ch.closure_contains(&g, &big));
    Ok(())
}

fn su32(t: &GoldenTable, c: &mut Checker) -> Result<()> {
    let g = HermitianPair::su(3, 2)?;
    c.eq("rho_c", wt(&g, t.su32_rho_c)?, g.rho_c().clone());
    let lam = wt(&g, t.su32_lambda)?;
    c.eq("rho_n(C1)", wt(&g, t.su32_rho_n_c1)?, rho_n_lambda(&g, &lam)?);
    c.eq("Lambda(lambda)", wt(&g, t.su32_blattner)?, blattner_param(&g, &lam)?);
    c.eq("condition", t.su32_condition, condition_hc(&g, &lam)?);
    let sample = wt(&g, t.su32_c2_sample)?;
    let c2 = chamber_of(&g, &sample)?;
    c.eq("rho_n(C2)", g.rho_c().clone(), c2.rho_n.clone());
    // Every parameter of C2 in a small box satisfies the condition.
    let mut failures = 0;
    for lam in integer_box(&g, 6) {
        if in_ghat_d(&g, &lam) && c2.contains(&g, &lam) && !condition_hc(&g, &lam)? {
            failures += 1;
        }
    }
    c.eq("C2 parameters failing the condition", 0, failures);
    Ok(())
}

/// Weights with coordinates in `[-b, b]` that can occur as parameters:
/// integer vectors, and for a type-A ambient every sum-zero vector whose
/// coordinates differ by integers (coordinates in `k/n + Z`).
pub fn integer_box(pair: &HermitianPair, b: i64) -> Vec<Weight> {
    let amb = pair.ambient();
    let n = amb.dim();
    let cosets = if amb.is_type_a() { n as i64 } else { 1 };
    let mut out = Vec::new();
    for k in 0..cosets {
        let shift = Rational::new(k, n as i64);
        let hi = if k == 0 { b } else { b - 1 };
        let mut cur = vec![-b; n];
        'odometer: loop {
            if !amb.is_type_a() || cur.iter().sum::<i64>() == -k {
                let coords = cur.iter().map(|&y| int(y) + shift).collect();
                out.push(Weight::new(amb, coords).expect("length matches"));
            }
            for x in cur.iter_mut() {
                *x += 1;
                if *x <= hi {
                    continue 'odometer;
                }
                *x = -b;
            }
            break;
        }
    }
    out.sort();
    out
}

fn sp2(t: &GoldenTable, c: &mut Checker) -> Result<()> {
    let g = HermitianPair::sp(2)?;
    c.eq("chamber count", t.sp2_chamber_count, chambers(&g).len());
    for (name, s) in [("C2", t.sp2_c2_sample), ("C3", t.sp2_c3_sample)] {
        let ch = chamber_of(&g, &wt(&g, s)?)?;
        let shift = &ch.rho_n - g.rho_c();
        c.truth(&format!("-rho_c+rho_n({name}) = {shift} in closure of {name}"), ch.closure_contains(&g, &shift));
    }
    let mut failures = 0;
    for lam in integer_box(&g, t.sp2_bound) {
        if in_ghat_d(&g, &lam) && !condition_hc(&g, &lam)? {
            failures += 1;
        }
    }
    c.eq("parameters failing the condition", 0, failures);
    Ok(())
}

/// Block of size `s` against a block of size `t` is admissible iff `t < s`.
fn supq(t: &GoldenTable, c: &mut Checker) -> Result<()> {
    for n in 2..=t.supq_max {
        for p in 1..n {
            let q = n - p;
            let g = HermitianPair::su(p, q)?;
            for (name, own, other) in [("su-p-block", p, q), ("su-q-block", q, p)] {
                let sub = Subgroup::preset(&g, name)?;
                let v = admissible(&g, &sub, 4)?;
                let expect = if other < own { Status::Admissible } else { Status::NotAdmissible };
                c.eq(&format!("SU({p},{q}) {name}"), expect.as_str(), v.status.as_str());
                if let Certificate::ConeKernelRay { witness } = &v.certificate {
                    let in_kernel = restrict_weight(&sub, witness)?.is_zero();
                    let gens: Vec<Vec<_>> = g.kirwan_cone().iter().map(|w| w.coords().to_vec()).collect();
                    let in_cone = cone_coefficients(&gens, witness.coords()).is_some();
                    c.truth(&format!("SU({p},{q}) {name} witness {witness} in h-perp and cone"), in_kernel && in_cone);
                }
            }
            let z = Subgroup::preset(&g, "center")?;
            c.eq(&format!("SU({p},{q}) center"), "Admissible", admissible(&g, &z, 4)?.status.as_str());
        }
    }
    Ok(())
}

fn cone(t: &GoldenTable, c: &mut Checker) -> Result<()> {
    for n in 2..=t.cone_max {
        for p in 1..n {
            let q = n - p;
            let g = HermitianPair::su(p, q)?;
            let r = p.min(q);
            c.eq(&format!("SU({p},{q}) cone size"), r, g.kirwan_cone().len());
            for (k, gen) in g.kirwan_cone().iter().enumerate() {
                let mut x = vec![0i64; n];
                for i in 0..=k {
                    x[i] = 1;
                    x[n - 1 - i] = -1;
                }
                c.eq(&format!("SU({p},{q}) generator {}", k + 1), Weight::from_ints(g.ambient(), &x)?, gen.clone());
            }
        }
    }
    Ok(())
}

fn su23(t: &GoldenTable, c: &mut Checker) -> Result<()> {
    let g = HermitianPair::su(2, 3)?;
    let expect: Vec<Weight> = t.su23_cascade.iter().map(|s| wt(&g, s)).collect::<Result<_>>()?;
    c.eq("cascade length", expect.len(), g.cascade().len());
    for (i, (e, a)) in expect.iter().zip(g.cascade()).enumerate() {
        c.eq(&format!("gamma_{}", i + 1), e.clone(), a.clone());
    }
    Ok(())
}

fn build(_t: &GoldenTable, c: &mut Checker) -> Result<()> {
    let g = HermitianPair::su(3, 2)?;
    c.eq("SU(3,2) |R_c+|", 4, g.compact_positives().len());
    c.eq("SU(3,2) |R_n|", 12, g.noncompact_roots().len());
    let s = HermitianPair::sp(2)?;
    c.eq("Sp(2) |R_c+|", 1, s.compact_positives().len());
    c.eq("Sp(2) |R_n+|", 3, s.noncompact_positives().len());
    Ok(())
}

fn blattner_vs_tensor(_t: &GoldenTable, c: &mut Checker) -> Result<()> {
    let mut compared = 0;
    for g in [HermitianPair::sp(2)?, HermitianPair::su(2, 1)?] {
        for lam in integer_box(&g, 3) {
            if !(in_ghat_d(&g, &lam) && in_c_hol(&g, &lam)) {
                continue;
            }
            let big = blattner_param(&g, &lam)?;
            for mu in integer_box(&g, 5) {
                let mu = &mu + &big;
                if !g.is_dominant_weight(&mu) {
                    continue;
                }
                let d = g.degree(&mu) - g.degree(&big);
                if d < int(0) || d > int(2) {
                    continue;
                }
                let a = blattner_mult(&g, &lam, &mu)?;
                let b = holo_k_mult(&g, &big, &mu)?;
                c.eq(&format!("{} lambda={lam} mu={mu}", g.family()), b, a);
                compared += 1;
            }
        }
    }
    c.truth(&format!("{compared} comparisons made"), compared > 20);
    Ok(())
}

pub fn run_item(table: &GoldenTable, name: &str) -> Option<ItemReport> {
    let f: fn(&GoldenTable, &mut Checker) -> Result<()> = match name {
        "sp4-counterexample" => sp4,
        "su32-values" => su32,
        "sp2-chambers" => sp2,
        "supq-admissibility" => supq,
        "kirwan-cone" => cone,
        "su23-cascade" => su23,
        "build-examples" => build,
        "blattner-vs-tensor" => blattner_vs_tensor,
        _ => return None,
    };
    let start = Instant::now();
    let mut c = Checker { mismatches: Vec::new() };
    if let Err(e) = f(table, &mut c) {
        c.mismatches.push(format!("error: {e}"));
    }
    Some(ItemReport { name: name.to_string(), pass: c.mismatches.is_empty(), mismatches: c.mismatches, millis: start.elapsed().as_millis() })
}

/// Run all items, or only those named in `filter`. Unknown names are
/// reported as failures.
pub fn verify_paper(table: &GoldenTable, filter: &[String]) -> Report {
    let names: Vec<String> = if filter.is_empty() { ITEMS.iter().map(|s| s.to_string()).collect() } else { filter.to_vec() };
    let items = names
        .iter()
        .map(|n| {
            run_item(table, n).unwrap_or_else(|| ItemReport {
                name: n.clone(),
                pass: false,
                mismatches: vec![format!("unknown item {n:?}")],
                millis: 0,
            })
        })
        .collect();
    Report { items }
}
