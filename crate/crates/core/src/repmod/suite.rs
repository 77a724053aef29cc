use super::matrix::Matrix;
use super::module::{change_of_basis, ModuleSpec, Rep, RepError};
use crate::ncore::{GenSymbol, Presentation};
use crate::qfield::{FieldError, QScalar, RatFunc, Rational};
use crate::report::{Entry, Subject, VerificationReport};

/// One module in both bases together with the diagonal basis change.
#[derive(Clone, Debug)]
pub struct ModuleFamily<F = RatFunc> {
    pub equitable: Rep<F>,
    pub chevalley: Rep<F>,
    /// `u_i = gamma_i v_i`, as a diagonal matrix.
    pub basis_change: Matrix<F>,
}

impl ModuleFamily<RatFunc> {
    pub fn build(spec: &ModuleSpec) -> Result<Self, RepError> {
        Ok(ModuleFamily {
            equitable: Rep::build(spec, Presentation::Equitable)?,
            chevalley: Rep::build(spec, Presentation::Chevalley)?,
            basis_change: change_of_basis(spec),
        })
    }

    pub fn specialize(&self, q0: &Rational) -> Result<ModuleFamily<Rational>, FieldError> {
        Ok(ModuleFamily {
            equitable: self.equitable.specialize(q0)?,
            chevalley: self.chevalley.specialize(q0)?,
            basis_change: self.basis_change.try_map(|c| c.specialize(q0))?,
        })
    }
}

pub fn subject_of(spec: &ModuleSpec) -> Subject {
    match spec.as_simple() {
        Some((n, eps)) => Subject::module(n, eps),
        None => Subject::Sum(spec.summands().to_vec()),
    }
}

fn diff_witness<F: QScalar>(l: &Matrix<F>, r: &Matrix<F>) -> String {
    format!("difference {}", l.sub(r))
}

fn same_multiset<F: PartialEq>(a: &[F], b: &[F]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        match (0..b.len()).find(|&j| !used[j] && b[j] == *x) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// `(q A B - q^-1 B A) / (q - q^-1)`.
pub fn q_bracket<F: QScalar>(rep: &Rep<F>, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.mul(b)
        .scale(rep.q())
        .sub(&b.mul(a).scale(&rep.q_pow(-1)))
        .scale(&rep.c_factor())
}

/// The defining relations of the equitable presentation as matrix identities.
pub fn equitable_relations<F: QScalar>(rep: &Rep<F>) -> VerificationReport {
    let subject = subject_of(rep.spec());
    let id = rep.identity();
    let [x, xi, y, z] = [GenSymbol::X, GenSymbol::XInv, GenSymbol::Y, GenSymbol::Z].map(|g| rep.matrix(g));
    let mut report = VerificationReport::new();
    let (a, b) = (x.mul(&xi), xi.mul(&x));
    report.push(Entry::check("module.equitable.x*x^-1=x^-1*x=1", subject.clone(), a == id && b == id, || {
        format!("x*x^-1 = {a}, x^-1*x = {b}")
    }));
    for (name, l, r) in [("x*y", &x, &y), ("y*z", &y, &z), ("z*x", &z, &x)] {
        let v = q_bracket(rep, l, r);
        report.push(Entry::check(
            format!("module.equitable.q-bracket({name})=1"),
            subject.clone(),
            v == id,
            || diff_witness(&v, &id),
        ));
    }
    report
}

/// The defining relations of the Chevalley presentation as matrix identities.
pub fn chevalley_relations<F: QScalar>(rep: &Rep<F>) -> VerificationReport {
    let subject = subject_of(rep.spec());
    let id = rep.identity();
    let [k, ki, e, f] = [GenSymbol::K, GenSymbol::KInv, GenSymbol::E, GenSymbol::F].map(|g| rep.matrix(g));
    let mut report = VerificationReport::new();
    let (a, b) = (k.mul(&ki), ki.mul(&k));
    report.push(Entry::check("module.chevalley.k*k^-1=k^-1*k=1", subject.clone(), a == id && b == id, || {
        format!("k*k^-1 = {a}, k^-1*k = {b}")
    }));
    let pairs = [
        ("k*e=q^2*e*k", k.mul(&e), e.mul(&k).scale(&rep.q_pow(2))),
        ("k*f=q^-2*f*k", k.mul(&f), f.mul(&k).scale(&rep.q_pow(-2))),
        (
            "e*f-f*e=(k-k^-1)/(q-q^-1)",
            e.mul(&f).sub(&f.mul(&e)),
            k.sub(&ki).scale(&rep.c_factor()),
        ),
    ];
    for (name, l, r) in pairs {
        report.push(Entry::check(format!("module.chevalley.{name}"), subject.clone(), l == r, || {
            diff_witness(&l, &r)
        }));
    }
    report
}

/// `{eps q^(n-2i)}` over all summands.
fn expected_spectrum<F: QScalar>(rep: &Rep<F>) -> Vec<F> {
    rep.spec()
        .summands()
        .iter()
        .flat_map(|&(n, eps)| {
            let n = i64::from(n);
            (0..=n).map(move |i| (eps, n - 2 * i))
        })
        .map(|(eps, l)| {
            let v = rep.q_pow(l);
            if eps < 0 {
                v.neg_ref()
            } else {
                v
            }
        })
        .collect()
}

/// Relations in both bases, spectra of `x, y, z`, invertibility of `y, z`, the
/// all-ones vector eigen-identities, and coherence of the basis change.
pub fn verify_module_suite<F: QScalar>(fam: &ModuleFamily<F>) -> VerificationReport {
    let rep = &fam.equitable;
    let subject = subject_of(rep.spec());
    let mut report = equitable_relations(rep);
    report.extend(chevalley_relations(&fam.chevalley));

    let spectrum = expected_spectrum(rep);
    type Shape<F> = fn(&Matrix<F>) -> bool;
    let shapes: [(GenSymbol, &str, Shape<F>); 3] = [
        (GenSymbol::X, "diagonal", Matrix::is_diagonal),
        (GenSymbol::Y, "lower-triangular", Matrix::is_lower_triangular),
        (GenSymbol::Z, "upper-triangular", Matrix::is_upper_triangular),
    ];
    for (g, shape, pred) in shapes {
        let m = rep.matrix(g);
        let diag = m.diagonal();
        let ok = pred(&m) && same_multiset(&diag, &spectrum);
        report.push(Entry::check(format!("module.eigenvalues.{g}"), subject.clone(), ok, || {
            let d: Vec<String> = diag.iter().map(ToString::to_string).collect();
            format!("{shape}: {}, diagonal [{}]", pred(&m), d.join(", "))
        }));
    }

    for g in [GenSymbol::Y, GenSymbol::Z] {
        let m = rep.matrix(g);
        let entry = match m.inverse() {
            Ok(inv) => {
                let ok = m.mul(&inv).is_identity() && inv.mul(&m).is_identity();
                Entry::check(format!("module.invertible.{g}"), subject.clone(), ok, || {
                    format!("candidate inverse {inv} fails")
                })
            }
            Err(e) => Entry::fail(format!("module.invertible.{g}"), subject.clone(), e.to_string()),
        };
        report.push(entry);
    }

    // per summand: the sum of its basis vectors is an eigenvector of y and z
    for (g, sign) in [(GenSymbol::Y, -1i64), (GenSymbol::Z, 1i64)] {
        let m = rep.matrix(g);
        let mut ok = true;
        let mut witness = String::new();
        for (&(n, eps), off) in rep.spec().summands().iter().zip(rep.spec().offsets()) {
            let mut u = vec![F::zero_elem(); rep.dim()];
            for v in &mut u[off..=off + n as usize] {
                *v = F::one_elem();
            }
            let lam = rep.q_pow(sign * i64::from(n));
            let lam = if eps < 0 { lam.neg_ref() } else { lam };
            let want: Vec<F> = u.iter().map(|v| v.mul_ref(&lam)).collect();
            let got = m.mul_vec(&u);
            if got != want {
                ok = false;
                let got: Vec<String> = got.iter().map(ToString::to_string).collect();
                witness = format!("L({n},{eps:+}): {g}*u = [{}]", got.join(", "));
            }
        }
        let name = if sign < 0 { "y*u=eps*q^-n*u" } else { "z*u=eps*q^n*u" };
        report.push(Entry::check(format!("module.sum-vector.{name}"), subject.clone(), ok, || witness));
    }

    let d = &fam.basis_change;
    match d.inverse() {
        Ok(dinv) => {
            for g in [GenSymbol::X, GenSymbol::Y, GenSymbol::Z] {
                let conj = dinv.mul(&fam.chevalley.matrix(g)).mul(d);
                let want = rep.matrix(g);
                report.push(Entry::check(
                    format!("module.change-of-basis.{g}"),
                    subject.clone(),
                    conj == want,
                    || diff_witness(&conj, &want),
                ));
            }
        }
        Err(e) => report.push(Entry::fail("module.change-of-basis", subject.clone(), e.to_string())),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_comparison() {
        assert!(same_multiset(&[1, 2, 2], &[2, 1, 2]));
        assert!(!same_multiset(&[1, 1, 2], &[2, 1, 2]));
    }
}
