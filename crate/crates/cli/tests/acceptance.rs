//! End-to-end acceptance run: nine criteria, each timed against its budget,
//! one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use uqsl2::gammamod::{non_invertibility_witness, verify_gamma_suite, GammaFlavor};
use uqsl2::ncore::rewrite::verify_confluence;
use uqsl2::ncore::{verify_n_commutation, verify_n_elements, verify_presentation_iso, GenSymbol, Presentation};
use uqsl2::qexpops::{
    closed_form_for, omega, omega_cubed_scalar, verify_conjugation_suite, verify_omega_closed_form, OperatorFamily,
};
use uqsl2::qfield::{RatFunc, Rational};
use uqsl2::repmod::render::MatrixRecord;
use uqsl2::repmod::{build_equitable, verify_module_suite, Matrix, ModuleFamily, ModuleSpec, Rep};
use uqsl2::report::VerificationReport;
use uqsl2_cli::suites::{mixed_sums, random_q_spots, simple_specs};

const N_MAX: u32 = 8;
const SEED: u64 = 20260415;

type Outcome = Result<String, String>;

fn from_report(report: VerificationReport, expect_len: Option<usize>) -> Outcome {
    if let Some(n) = expect_len {
        if report.len() != n {
            return Err(format!("expected {n} checks, got {}", report.len()));
        }
    }
    match report.failures().next() {
        None => Ok(format!("{} checks", report.len())),
        Some(f) => Err(format!("{} of {} checks failed, first: {f}", report.failures().count(), report.len())),
    }
}

fn concat(parts: impl IntoIterator<Item = VerificationReport>) -> VerificationReport {
    let mut out = VerificationReport::new();
    for p in parts {
        out.extend(p);
    }
    out
}

fn c1_iso() -> Outcome {
    from_report(verify_presentation_iso(), Some(8))
}

fn c2_confluence() -> Outcome {
    let r = verify_confluence(&[-2, -1, 1, 2]);
    if r.is_empty() {
        return Err("no critical pairs examined".into());
    }
    from_report(r, None)
}

fn c3_n_elements() -> Outcome {
    let commutation = verify_n_commutation();
    if commutation.len() != 6 {
        return Err(format!("expected 6 q-commutation identities, got {}", commutation.len()));
    }
    from_report(concat([verify_n_elements(), commutation]), None)
}

fn c4_modules() -> Outcome {
    let mut parts = Vec::new();
    for spec in simple_specs(N_MAX) {
        let fam = ModuleFamily::build(&spec).map_err(|e| format!("{spec}: {e}"))?;
        parts.push(verify_module_suite(&fam));
    }
    from_report(concat(parts), None)
}

fn operator_specs() -> Vec<ModuleSpec> {
    let mut specs = simple_specs(N_MAX);
    specs.extend(mixed_sums());
    specs
}

fn c5_operators() -> Outcome {
    let mut parts = Vec::new();
    for spec in operator_specs() {
        let rep = Rep::build(&spec, Presentation::Equitable).map_err(|e| format!("{spec}: {e}"))?;
        let ops = OperatorFamily::build(&rep).map_err(|e| format!("{spec}: {e}"))?;
        parts.push(verify_conjugation_suite(&ops));
    }
    from_report(concat(parts), None)
}

/// `q^{-n(n+2)/2}` for even n, `-q^{(1-n)(n+3)/2}` for odd n.
fn cube_scalar_oracle(n: u32) -> RatFunc {
    let n = i64::from(n);
    if n % 2 == 0 {
        RatFunc::q_pow(-n * (n + 2) / 2)
    } else {
        -RatFunc::q_pow((1 - n) * (n + 3) / 2)
    }
}

fn c6_closed_form() -> Outcome {
    let mut parts = Vec::new();
    for n in 0..=N_MAX {
        let scalar = omega_cubed_scalar(n);
        if scalar != cube_scalar_oracle(n) {
            return Err(format!("Omega^3 scalar for n={n} is {scalar}, expected {}", cube_scalar_oracle(n)));
        }
        for eps in [1, -1] {
            let rep = build_equitable(n, eps).map_err(|e| e.to_string())?;
            let ops = OperatorFamily::build(&rep).map_err(|e| e.to_string())?;
            let closed = closed_form_for(&ops).map_err(|e| e.to_string())?;
            parts.push(verify_omega_closed_form(&ops, &closed));
            let cube = ops.omega.pow(3);
            if cube != Matrix::identity(rep.dim()).scale(&scalar) {
                return Err(format!("Omega^3 on L({n},{eps:+}) is not {scalar} * I"));
            }
        }
    }
    from_report(concat(parts), None)
}

fn c7_gamma() -> Outcome {
    let suite = verify_gamma_suite(4, 4);
    // per flavor: 45 window vectors x 4 relation checks + 45 monomial vectors + 1 null vector
    let expected = 2 * (45 * 4 + 45 + 1);
    for f in GammaFlavor::ALL {
        let w = non_invertibility_witness(f);
        if !w.passed() {
            return Err(w.to_string());
        }
    }
    from_report(suite, Some(expected))
}

fn c8_specialized() -> Outcome {
    let spots = random_q_spots(3, SEED);
    let mut parts = Vec::new();
    for spec in operator_specs() {
        let fam = ModuleFamily::build(&spec).map_err(|e| format!("{spec}: {e}"))?;
        let rep = Rep::build(&spec, Presentation::Equitable).map_err(|e| format!("{spec}: {e}"))?;
        let ops = OperatorFamily::build(&rep).map_err(|e| format!("{spec}: {e}"))?;
        for q0 in &spots {
            let sp = fam.specialize(q0).map_err(|e| format!("{spec} at q={q0}: {e}"))?;
            parts.push(verify_module_suite(&sp));
            let sp = ops.specialize(q0).map_err(|e| format!("{spec} at q={q0}: {e}"))?;
            parts.push(verify_conjugation_suite(&sp));
            let closed = closed_form_for(&sp).map_err(|e| format!("{spec} at q={q0}: {e}"))?;
            parts.push(verify_omega_closed_form(&sp, &closed));
        }
    }
    let spots: Vec<String> = spots.iter().map(Rational::to_string).collect();
    from_report(concat(parts), None).map(|s| format!("{s} at q in {{{}}}", spots.join(", ")))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_uqsl2"))
        .env_remove("UQSL2_FORMAT")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn c9_golden() -> Outcome {
    let rep = build_equitable(1, 1).map_err(|e| e.to_string())?;
    let y = serde_json::to_string(&MatrixRecord::new(1, 1, Presentation::Equitable, GenSymbol::Y, &rep.matrix(GenSymbol::Y)))
        .map_err(|e| e.to_string())?;
    let om = omega(&rep).map_err(|e| e.to_string())?;
    let cases = [
        ("l1_y.json", format!("{y}\n")),
        ("l1_y.json", cli(&["--format", "json", "rep", "--n", "1", "--eps", "+1", "--basis", "equitable", "--gen", "y"])?),
        ("l1_omega.txt", format!("{}\n", om.matrix)),
        ("l1_omega.txt", cli(&["omega", "--n", "1", "--eps", "+1"])?),
        ("l1_omega_cubed.txt", format!("{}\n", om.matrix.pow(3))),
    ];
    for (file, got) in &cases {
        let want = golden(file);
        if *got != want {
            return Err(format!("{file}: expected {want:?}, got {got:?}"));
        }
    }
    Ok(format!("{} byte-exact comparisons", cases.len()))
}

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { name: "1 presentation isomorphism", budget: secs(1), run: c1_iso },
        Criterion { name: "2 rewriting confluence", budget: secs(1), run: c2_confluence },
        Criterion { name: "3 n-element identities", budget: secs(1), run: c3_n_elements },
        Criterion { name: "4 module suite n<=8", budget: secs(10), run: c4_modules },
        Criterion { name: "5 operator suite n<=8 and sums", budget: secs(60), run: c5_operators },
        Criterion { name: "6 closed-form Omega n<=8", budget: secs(10), run: c6_closed_form },
        Criterion { name: "7 infinite modules window (4,4)", budget: secs(10), run: c7_gamma },
        Criterion { name: "8 specialization cross-check", budget: secs(30), run: c8_specialized },
        Criterion { name: "9 golden L(1,+1) fixtures", budget: None, run: c9_golden },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let verdict = match (&outcome, c.budget) {
            (Err(e), _) => Err(e.clone()),
            (Ok(_), Some(b)) if took > b => Err(format!("took {took:.2?}, budget {b:?}")),
            (Ok(s), _) => Ok(s.clone()),
        };
        let budget = c.budget.map(|b| format!(" / {b:?}")).unwrap_or_default();
        match verdict {
            Ok(s) => println!("PASS  {:<34} {took:>9.2?}{budget}  {s}", c.name),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:<34} {took:>9.2?}{budget}  {e}", c.name);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
