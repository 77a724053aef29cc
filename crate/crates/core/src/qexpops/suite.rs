use super::ops::{omega_closed_form_sum, omega_cubed_scalar, OmegaOperator, OpError, OperatorFamily};
use crate::ncore::{n_element_expressions, Axis};
use crate::qfield::{qint, QScalar, RatFunc};
use crate::repmod::{subject_of, Matrix, Rep};
use crate::report::{Entry, Subject, VerificationReport};

struct Checker<'a> {
    subject: Subject,
    report: &'a mut VerificationReport,
}

impl Checker<'_> {
    fn eq<F: QScalar>(&mut self, id: String, l: &Matrix<F>, r: &Matrix<F>) {
        self.report.push(Entry::check(id, self.subject.clone(), l == r, || {
            format!("difference {}", l.sub(r))
        }));
    }

    fn truth(&mut self, id: String, ok: bool, witness: impl FnOnce() -> String) {
        self.report.push(Entry::check(id, self.subject.clone(), ok, witness));
    }
}

/// `E A E'` for a conjugation.
fn conj<F: QScalar>(left: &Matrix<F>, a: &Matrix<F>, right: &Matrix<F>) -> Matrix<F> {
    left.mul(a).mul(right)
}

/// Nilpotency, exponential inverses, the eighteen conjugation identities, the
/// intermediate and inductive commutator identities, the `Psi` properties, the
/// `Omega` conjugations, and the behavior of `Omega^3`.
pub fn verify_conjugation_suite<F: QScalar>(ops: &OperatorFamily<F>) -> VerificationReport {
    let mut report = VerificationReport::new();
    let mut ck = Checker {
        subject: subject_of(&ops.spec),
        report: &mut report,
    };
    let id = Matrix::<F>::identity(ops.dim());
    let max_n = ops.spec.summands().iter().map(|(n, _)| *n).max().unwrap_or(0);

    for a in Axis::ALL {
        let got = ops.n_of(a).nil_index();
        ck.truth(format!("operator.nil-index.n_{a}={}", max_n + 1), got == max_n + 1, || {
            format!("index {got}")
        });
    }
    for a in Axis::ALL {
        let p = ops.exp_of(a).mul(ops.exp_inv_of(a));
        let p2 = ops.exp_inv_of(a).mul(ops.exp_of(a));
        ck.truth(format!("operator.exp_q(n_{a})*inverse=1"), p == id && p2 == id, || {
            format!("products {p} and {p2}")
        });
    }

    for a in Axis::ALL {
        let (b, c) = (a.next(), a.prev());
        let (ga, gb, gc) = (ops.gen(a), ops.gen(b), ops.gen(c));
        let (ea, eb, ec) = (ops.exp_of(a), ops.exp_of(b), ops.exp_of(c));
        let (ia, ib, ic) = (ops.exp_inv_of(a), ops.exp_inv_of(b), ops.exp_inv_of(c));
        ck.eq(format!("conjugation.E_{b}^-1*{a}*E_{b}={c}^-1"), &conj(ib, ga, eb), ops.gen_inv(c));
        ck.eq(format!("conjugation.E_{c}*{a}*E_{c}^-1={b}^-1"), &conj(ec, ga, ic), ops.gen_inv(b));
        ck.eq(format!("conjugation.E_{c}^-1*{a}*E_{c}={a}{b}{a}"), &conj(ic, ga, ec), &conj(ga, gb, ga));
        ck.eq(format!("conjugation.E_{b}*{a}*E_{b}^-1={a}{c}{a}"), &conj(eb, ga, ib), &conj(ga, gc, ga));
        ck.eq(
            format!("conjugation.E_{a}^-1*{a}*E_{a}={a}+{b}-{b}^-1"),
            &conj(ia, ga, ea),
            &ga.add(gb).sub(ops.gen_inv(b)),
        );
        ck.eq(
            format!("conjugation.E_{a}*{a}*E_{a}^-1={a}+{c}-{c}^-1"),
            &conj(ea, ga, ia),
            &ga.add(gc).sub(ops.gen_inv(c)),
        );
    }

    for a in Axis::ALL {
        let (b, c) = (a.next(), a.prev());
        let (ga, gb, gc, ea) = (ops.gen(a), ops.gen(b), ops.gen(c), ops.exp_of(a));
        ck.eq(
            format!("commutator.{a}*E_{a}-E_{a}*{a}=E_{a}*{b}-{c}*E_{a}"),
            &ga.mul(ea).sub(&ea.mul(ga)),
            &ea.mul(gb).sub(&gc.mul(ea)),
        );
    }

    // a n_a^i - n_a^i a = q^(1-i) [i] (n_a^(i-1) b - c n_a^(i-1)) for 1 <= i <= n+1
    for a in Axis::ALL {
        let (ga, gb, gc) = (ops.gen(a), ops.gen(a.next()), ops.gen(a.prev()));
        let na = ops.n_of(a).matrix();
        let mut ok = true;
        let mut witness = String::new();
        let mut prev = Matrix::identity(ops.dim());
        for i in 1..=i64::from(max_n) + 1 {
            let cur = prev.mul(na);
            let lhs = ga.mul(&cur).sub(&cur.mul(ga));
            let coeff = ops
                .lift(&(RatFunc::q_pow(1 - i) * RatFunc::from(qint(i))))
                .expect("Laurent coefficient");
            let rhs = prev.mul(gb).sub(&gc.mul(&prev)).scale(&coeff);
            if lhs != rhs && ok {
                ok = false;
                witness = format!("i = {i}: difference {}", lhs.sub(&rhs));
            }
            prev = cur;
        }
        ck.truth(format!("commutator.{a}*n_{a}^i-n_{a}^i*{a}=q^(1-i)[i](n_{a}^(i-1)*{}-{}*n_{a}^(i-1))", a.next(), a.prev()), ok, || witness);
    }

    let (x, xi) = (ops.gen(Axis::X), ops.gen_inv(Axis::X));
    let (p, pi) = (&ops.psi, &ops.psi_inv);
    ck.eq("psi.Psi^-1*x*Psi=x".into(), &conj(pi, x, p), x);
    let ny = ops.n_of(Axis::Y).matrix();
    let nz = ops.n_of(Axis::Z).matrix();
    ck.eq("psi.Psi^-1*n_y*Psi=x*n_y*x".into(), &conj(pi, ny, p), &conj(x, ny, x));
    ck.eq("psi.Psi^-1*n_z*Psi=x^-1*n_z*x^-1".into(), &conj(pi, nz, p), &conj(xi, nz, xi));

    let (om, omi) = (&ops.omega, &ops.omega_inv);
    ck.truth("omega.Omega*Omega^-1=1".into(), om.mul(omi) == id && omi.mul(om) == id, || {
        format!("Omega*Omega^-1 = {}", om.mul(omi))
    });
    for a in Axis::ALL {
        ck.eq(format!("omega.Omega^-1*{a}*Omega={}", a.next()), &conj(omi, ops.gen(a), om), ops.gen(a.next()));
    }
    let cube = om.mul(om).mul(om);
    let commutes = Axis::ALL
        .iter()
        .all(|&a| cube.mul(ops.gen(a)) == ops.gen(a).mul(&cube));
    ck.truth("omega.Omega^3-commutes-with-x,y,z".into(), commutes, || format!("Omega^3 = {cube}"));
    if let Some((n, _)) = ops.spec.as_simple() {
        let want = id.scale(&ops.lift(&omega_cubed_scalar(n)).expect("Laurent scalar"));
        ck.eq(format!("omega.Omega^3={}", omega_cubed_scalar(n)), &cube, &want);
    }
    report
}

/// `q(1 - ab) = q^-1(1 - ba)` for each cyclic pair, and agreement of the
/// evaluated `n` element with `q(1 - ab)/(q - q^-1)`.
pub fn verify_relation_rewrites<F: QScalar>(rep: &Rep<F>) -> VerificationReport {
    let mut report = VerificationReport::new();
    let mut ck = Checker {
        subject: subject_of(rep.spec()),
        report: &mut report,
    };
    let id = rep.identity();
    let (q, qi) = (rep.q_pow(1), rep.q_pow(-1));
    for a in Axis::ALL {
        let (b, c) = (a.next(), a.prev());
        let (mb, mc) = (rep.matrix(b.symbol()), rep.matrix(c.symbol()));
        let l = id.sub(&mb.mul(&mc)).scale(&q);
        let r = id.sub(&mc.mul(&mb)).scale(&qi);
        ck.eq(format!("rewrite.q(1-{b}{c})=q^-1(1-{c}{b})"), &l, &r);
        let expr = n_element_expressions(a).0;
        match (rep.evaluate_expr(&expr), crate::ncore::n_element(a)) {
            (Ok(from_expr), Ok(elem)) => match rep.evaluate(&elem) {
                Ok(from_nf) => ck.eq(format!("rewrite.n_{a}=q(1-{b}{c})/(q-q^-1)"), &from_nf, &from_expr),
                Err(e) => ck.truth(format!("rewrite.n_{a}=q(1-{b}{c})/(q-q^-1)"), false, || e.to_string()),
            },
            (Err(e), _) => ck.truth(format!("rewrite.n_{a}=q(1-{b}{c})/(q-q^-1)"), false, || e.to_string()),
            (_, Err(e)) => ck.truth(format!("rewrite.n_{a}=q(1-{b}{c})/(q-q^-1)"), false, || e.to_string()),
        }
    }
    report
}

/// Compositional against closed-form `Omega` and `Omega^-1`, plus the
/// `Omega^3` scalar on simple modules.
pub fn verify_omega_closed_form<F: QScalar>(
    ops: &OperatorFamily<F>,
    closed: &OmegaOperator<F>,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let mut ck = Checker {
        subject: subject_of(&ops.spec),
        report: &mut report,
    };
    ck.eq("omega.closed-form.Omega".into(), &ops.omega, &closed.matrix);
    ck.eq("omega.closed-form.Omega^-1".into(), &ops.omega_inv, &closed.inverse);
    if let Some((n, _)) = ops.spec.as_simple() {
        let cube = closed.matrix.mul(&closed.matrix).mul(&closed.matrix);
        let want = Matrix::identity(ops.dim()).scale(&ops.lift(&omega_cubed_scalar(n)).expect("Laurent scalar"));
        ck.eq(format!("omega.closed-form.Omega^3={}", omega_cubed_scalar(n)), &cube, &want);
    }
    report
}

/// The closed-form `Omega` for the family's module, specialized alongside it.
pub fn closed_form_for<F: QScalar>(ops: &OperatorFamily<F>) -> Result<OmegaOperator<F>, OpError> {
    let c = omega_closed_form_sum(&ops.spec)?;
    let lift = |m: &Matrix<RatFunc>| m.try_map(|v| ops.lift(v));
    Ok(OmegaOperator {
        matrix: lift(&c.matrix)?,
        inverse: lift(&c.inverse)?,
        provenance: c.provenance,
    })
}
