//! Assembly of the verification battery over modules, windows and
//! specializations. Per-module work runs on the current rayon pool; reports
//! are concatenated in input order.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use uqsl2::gammamod::verify_gamma_suite;
use uqsl2::ncore::rewrite::verify_confluence;
use uqsl2::ncore::{verify_n_commutation, verify_n_elements, verify_presentation_iso, Automorphism, Presentation};
use uqsl2::qexpops::{closed_form_for, verify_conjugation_suite, verify_omega_closed_form, verify_relation_rewrites, OperatorFamily};
use uqsl2::qfield::{check_admissible, RatFunc, Rational};
use uqsl2::repmod::{subject_of, verify_module_suite, ModuleFamily, ModuleSpec, Rep};
use uqsl2::report::{Entry, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Iso,
    Relations,
    Modules,
    Operators,
    Gamma,
    All,
}

impl Scope {
    fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: u32,
    pub window: u32,
    pub q_spots: Vec<Rational>,
}

/// Every `L(n, eps)` with `n <= n_max`, `+1` before `-1`.
pub fn simple_specs(n_max: u32) -> Vec<ModuleSpec> {
    (0..=n_max)
        .flat_map(|n| [1, -1].map(|eps| ModuleSpec::simple(n, eps).expect("valid eps")))
        .collect()
}

/// `L(1,+1) + L(2,-1)` and `L(0,-1) + L(3,+1)`.
pub fn mixed_sums() -> Vec<ModuleSpec> {
    [vec![(1, 1), (2, -1)], vec![(0, -1), (3, 1)]]
        .into_iter()
        .map(|s| ModuleSpec::new(s).expect("valid summands"))
        .collect()
}

/// `k` distinct admissible rationals `a/b` with `|a|, b <= 12`, drawn from a
/// seeded stream.
pub fn random_q_spots(k: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let a: i64 = rng.gen_range(-12..=12);
        let b: i64 = rng.gen_range(1..=12);
        let q0 = Rational::new(a.into(), b.into());
        if check_admissible(&q0).is_ok() && !out.contains(&q0) {
            out.push(q0);
        }
    }
    out
}

pub fn iso_report() -> VerificationReport {
    verify_presentation_iso()
}

/// Confluence of the rewriting system, the `n` elements, their
/// q-commutation, and a few automorphisms.
pub fn relations_report() -> VerificationReport {
    let mut report = verify_confluence(&[-2, -1, 1, 2]);
    report.extend(verify_n_elements());
    report.extend(verify_n_commutation());
    let q = RatFunc::q();
    for (i, alpha) in [(1, RatFunc::one()), (-2, q.clone()), (3, &RatFunc::from_int(-2) * &q.inverse().unwrap())] {
        report.extend(Automorphism::new(i, alpha).expect("nonzero alpha").verify());
    }
    report
}

pub fn gamma_report(window: u32) -> VerificationReport {
    verify_gamma_suite(window, window)
}

fn failed_build(spec: &ModuleSpec, what: &str, err: impl ToString) -> VerificationReport {
    std::iter::once(Entry::fail(format!("build.{what}"), subject_of(spec), err.to_string())).collect()
}

fn tag_q(report: VerificationReport, q0: &Rational) -> VerificationReport {
    report
        .into_iter()
        .map(|mut e| {
            e.check_id = format!("{}@q={q0}", e.check_id);
            e
        })
        .collect()
}

/// The module suite on one module, plus its specializations.
pub fn module_report(spec: &ModuleSpec, q_spots: &[Rational]) -> VerificationReport {
    let fam = match ModuleFamily::build(spec) {
        Ok(f) => f,
        Err(e) => return failed_build(spec, "module", e),
    };
    let mut report = verify_module_suite(&fam);
    for q0 in q_spots {
        match fam.specialize(q0) {
            Ok(sp) => report.extend(tag_q(verify_module_suite(&sp), q0)),
            Err(e) => report.extend(failed_build(spec, &format!("module@q={q0}"), e)),
        }
    }
    report
}

/// The conjugation battery, closed-form `Omega` and relation rewrites on one
/// module, plus the first two at each specialization.
pub fn operator_report(spec: &ModuleSpec, q_spots: &[Rational]) -> VerificationReport {
    let rep = match Rep::build(spec, Presentation::Equitable) {
        Ok(r) => r,
        Err(e) => return failed_build(spec, "module", e),
    };
    let ops = match OperatorFamily::build(&rep) {
        Ok(o) => o,
        Err(e) => return failed_build(spec, "operators", e),
    };
    let mut report = verify_conjugation_suite(&ops);
    match closed_form_for(&ops) {
        Ok(c) => report.extend(verify_omega_closed_form(&ops, &c)),
        Err(e) => report.extend(failed_build(spec, "omega-closed-form", e)),
    }
    report.extend(verify_relation_rewrites(&rep));
    for q0 in q_spots {
        let sp = match ops.specialize(q0) {
            Ok(sp) => sp,
            Err(e) => {
                report.extend(failed_build(spec, &format!("operators@q={q0}"), e));
                continue;
            }
        };
        let mut part = verify_conjugation_suite(&sp);
        match closed_form_for(&sp) {
            Ok(c) => part.extend(verify_omega_closed_form(&sp, &c)),
            Err(e) => part.extend(failed_build(spec, "omega-closed-form", e)),
        }
        report.extend(tag_q(part, q0));
    }
    report
}

fn per_spec(specs: &[ModuleSpec], f: impl Fn(&ModuleSpec) -> VerificationReport + Sync + Send) -> VerificationReport {
    let parts: Vec<VerificationReport> = specs.par_iter().map(f).collect();
    let mut out = VerificationReport::new();
    for p in parts {
        out.extend(p);
    }
    out
}

/// Runs the suites selected by `scope`, in the order iso, relations, modules,
/// operators, gamma.
pub fn run(scope: Scope, cfg: &SuiteConfig) -> VerificationReport {
    let mut specs = simple_specs(cfg.n_max);
    specs.extend(mixed_sums());
    let mut report = VerificationReport::new();
    if scope.includes(Scope::Iso) {
        report.extend(iso_report());
    }
    if scope.includes(Scope::Relations) {
        report.extend(relations_report());
    }
    if scope.includes(Scope::Modules) {
        report.extend(per_spec(&specs, |s| module_report(s, &cfg.q_spots)));
    }
    if scope.includes(Scope::Operators) {
        report.extend(per_spec(&specs, |s| operator_report(s, &cfg.q_spots)));
    }
    if scope.includes(Scope::Gamma) {
        report.extend(gamma_report(cfg.window));
    }
    report
}
