//! Residual verification of the spinorial field equations.
//!
//! Every check in this module reduces a differential statement on a
//! homogeneous model to finite-dimensional linear algebra and reports the
//! defect norm instead of a bare boolean: a Killing or twistor equation is
//! "verified" when its residual falls below the tolerance of the
//! corresponding class ([`tol::RESIDUAL`] for linear equations,
//! [`tol::QUADRATIC`] for operator-square identities, [`tol::DET_NONZERO`]
//! for determinant non-vanishing).
//!
//! The checks cover the Killing equation with torsion, the twistor equation
//! with torsion, the eigenvalue identity for the square of the
//! characteristic Dirac operator, a Dirac/torsion anticommutator identity,
//! the curvature integrability endomorphism that every Killing spinor with
//! torsion must annihilate, and the resulting non-existence table for the
//! five-dimensional Einstein–Sasaki local model.

use crate::error::{Error, Result};
use crate::estimates;
use crate::forms::ExteriorForm;
use crate::homogeneous::ReductiveModel;
use crate::linalg::{self, CMat, CVec, RMat};
use crate::spin::SpinRep;
use crate::tol;

/// A candidate Killing spinor with torsion: ∇^s_X ψ = κ X·ψ at the
/// distinguished parameter s = (n−1)/(4(n−3)).
pub struct KillingCandidate {
    /// The spinor (need not be normalized).
    pub psi: CVec,
    /// Killing number κ.
    pub kappa: f64,
    /// Connection parameter; must equal the twistorial value for the model
    /// dimension.
    pub s: f64,
    /// Torsion-action eigenvalue of ψ, when ψ is an eigenspinor.
    pub mu: Option<f64>,
}

/// Per-direction residual norms of a pointwise spinor equation.
pub struct ResidualReport {
    residuals: Vec<f64>,
    max: f64,
    tol: f64,
}

impl ResidualReport {
    fn new(residuals: Vec<f64>, tol: f64) -> Self {
        let max = residuals.iter().cloned().fold(0.0, f64::max);
        ResidualReport {
            residuals,
            max,
            tol,
        }
    }

    /// Residual norm for each frame direction.
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// Largest per-direction residual.
    pub fn max(&self) -> f64 {
        self.max
    }

    /// Tolerance the verdict is taken at.
    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Whether the equation is satisfied at the report's tolerance.
    pub fn pass(&self) -> bool {
        self.max <= self.tol
    }
}

/// Distinguished connection parameter s = (n−1)/(4(n−3)).
pub fn twistorial_s(n: usize) -> Result<f64> {
    Ok(estimates::ConnectionParams::twistorial(n)?.s)
}

fn check_invariant(model: &ReductiveModel, rep: &SpinRep, psi: &CVec) -> Result<()> {
    let space = model.invariant_spinors(rep)?;
    if !space.contains(psi, 1e-8) {
        return Err(Error::Precondition(format!(
            "spinor is not isotropy-invariant on {}; the pointwise check is meaningless",
            model.name()
        )));
    }
    Ok(())
}

fn normalized(psi: &CVec) -> Result<CVec> {
    let norm = psi.norm();
    if norm == 0.0 {
        return Err(Error::Precondition("candidate spinor is zero".into()));
    }
    Ok(psi.map(|z| z / norm))
}

/// Characteristic Dirac operator D̸ = Σ γ_i Λ̃^g(Z_i) + ¼·T on the full
/// spinor module, assembled from the given torsion form.
fn dslash_full(model: &ReductiveModel, rep: &SpinRep, torsion: &ExteriorForm) -> Result<CMat> {
    let lam_g = model.spin_connection(rep, torsion, 0.0)?;
    let mut d = CMat::zeros(rep.dim(), rep.dim());
    for (i, l) in lam_g.iter().enumerate() {
        d += rep.gamma(i) * l;
    }
    d += rep.act(torsion)?.map(|z| z * 0.25);
    Ok(d)
}

/// Residuals of the Killing equation ∇^s_X ψ = κ X·ψ over all frame
/// directions, for the connection of parameter `cand.s` with the given
/// torsion.
///
/// Errors when `cand.s` is not the twistorial parameter, when ψ is not
/// isotropy-invariant, or when a declared torsion eigenvalue `mu` is
/// inconsistent with ψ.
pub fn killing_residual(
    model: &ReductiveModel,
    rep: &SpinRep,
    torsion: &ExteriorForm,
    cand: &KillingCandidate,
) -> Result<ResidualReport> {
    let s_tw = twistorial_s(model.n())?;
    if (cand.s - s_tw).abs() > 1e-12 {
        return Err(Error::Precondition(format!(
            "Killing candidates are tied to s = (n−1)/(4(n−3)) = {s_tw}, got s = {}",
            cand.s
        )));
    }
    check_invariant(model, rep, &cand.psi)?;
    let psi = normalized(&cand.psi)?;
    if let Some(mu) = cand.mu {
        let defect = rep.act(torsion)? * &psi - psi.map(|z| z * mu);
        if defect.norm() > 1e-6 {
            return Err(Error::Precondition(format!(
                "declared torsion eigenvalue {mu} does not match the candidate spinor"
            )));
        }
    }
    let maps = model.spin_connection(rep, torsion, cand.s)?;
    let residuals = (0..model.n())
        .map(|i| {
            let lhs = &maps[i] * &psi;
            let rhs = (rep.gamma(i) * &psi).map(|z| z * cand.kappa);
            (lhs - rhs).norm()
        })
        .collect();
    Ok(ResidualReport::new(residuals, tol::RESIDUAL))
}

/// Residuals of the twistor equation with torsion in its canonical-connection
/// form, ∇^c_X ψ + (1/n) X·D̸ψ + 1/(2(n−3)) (X ∧ T)·ψ = 0.
///
/// `s` only selects the family member the equation characterizes and must be
/// the twistorial parameter; ψ must be isotropy-invariant.
pub fn twistor_residual(
    model: &ReductiveModel,
    rep: &SpinRep,
    torsion: &ExteriorForm,
    psi: &CVec,
    s: f64,
) -> Result<ResidualReport> {
    let n = model.n();
    let s_tw = twistorial_s(n)?;
    if (s - s_tw).abs() > 1e-12 {
        return Err(Error::Precondition(format!(
            "the twistor characterization holds at s = {s_tw}, got s = {s}"
        )));
    }
    check_invariant(model, rep, psi)?;
    let psi = normalized(psi)?;
    let maps_c = model.spin_connection(rep, torsion, 0.25)?;
    let dslash_psi = dslash_full(model, rep, torsion)? * &psi;
    let lambda = 1.0 / (2.0 * (n as f64 - 3.0));
    let residuals = (0..n)
        .map(|i| -> Result<f64> {
            let wedge = ExteriorForm::basis(n, i + 1)?.wedge(torsion)?;
            let mut value = &maps_c[i] * &psi;
            value += (rep.gamma(i) * &dslash_psi).map(|z| z / n as f64);
            value += (rep.act(&wedge)? * &psi).map(|z| z * lambda);
            Ok(value.norm())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(ResidualReport::new(residuals, tol::RESIDUAL))
}

/// Residual of the eigenvalue identity for the square of the characteristic
/// Dirac operator on a twistor spinor with torsion,
/// D̸²ψ = [n/(4(n−1))·Scal^g + n(n−5)/(8(n−3)²)·‖T‖²]ψ + n(4−n)/(4(n−3)²)·T²ψ.
pub fn dirac_squared_residual(
    model: &ReductiveModel,
    rep: &SpinRep,
    torsion: &ExteriorForm,
    psi: &CVec,
) -> Result<f64> {
    let n = model.n();
    if n <= 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the identity involves the factor 1/(n−3)".into(),
        });
    }
    let psi = normalized(psi)?;
    let nf = n as f64;
    let scal = model.scal_g()?;
    let t2 = torsion.norm_sq();
    let scalar = nf / (4.0 * (nf - 1.0)) * scal
        + nf * (nf - 5.0) / (8.0 * (nf - 3.0).powi(2)) * t2;
    let quad = nf * (4.0 - nf) / (4.0 * (nf - 3.0).powi(2));
    let dslash = dslash_full(model, rep, torsion)?;
    let act_t = rep.act(torsion)?;
    let lhs = &dslash * (&dslash * &psi);
    let mut rhs = psi.map(|z| z * scalar);
    rhs += (&act_t * (&act_t * &psi)).map(|z| z * quad);
    Ok((lhs - rhs).norm())
}

/// Residual of the Dirac/torsion anticommutator identity on a twistor spinor
/// with torsion, [D̸·T + (1 − 6/n)·T·D̸]ψ = [(5−n)/(n−3)·T² − 2/(n−3)·‖T‖²]ψ.
pub fn commutator_residual(
    model: &ReductiveModel,
    rep: &SpinRep,
    torsion: &ExteriorForm,
    psi: &CVec,
) -> Result<f64> {
    let n = model.n();
    if n <= 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the identity involves the factor 1/(n−3)".into(),
        });
    }
    let psi = normalized(psi)?;
    let nf = n as f64;
    let dslash = dslash_full(model, rep, torsion)?;
    let act_t = rep.act(torsion)?;
    let t2 = torsion.norm_sq();
    let lhs = &dslash * (&act_t * &psi)
        + (&act_t * (&dslash * &psi)).map(|z| z * (1.0 - 6.0 / nf));
    let mut rhs = (&act_t * (&act_t * &psi)).map(|z| z * ((5.0 - nf) / (nf - 3.0)));
    rhs -= psi.map(|z| z * (2.0 / (nf - 3.0) * t2));
    Ok((lhs - rhs).norm())
}

/// Integrability endomorphism of the Killing equation with torsion for the
/// frame direction `x` (0-based):
///
/// M(X) = Ric^c(X)·(…) − [−16sκ (X⌟T) + 4(n−1)κ² X + (1−12λ²)(X⌟σ_T)
///        + 2(2λ²+λ) Σ_k e_k·(T(X,e_k)⌟T)]·(…)
///
/// with λ = 1/(2(n−3)) and s = (n−1)/(4(n−3)).  Every Killing spinor with
/// torsion and Killing number κ lies in the kernel of M(X) for all X.
pub fn integrability_endomorphism(
    n: usize,
    torsion: &ExteriorForm,
    ric_c: &RMat,
    kappa: f64,
    x: usize,
    rep: &SpinRep,
) -> Result<CMat> {
    if n <= 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the integrability condition involves the factor 1/(n−3)".into(),
        });
    }
    if ric_c.nrows() != n || ric_c.ncols() != n {
        return Err(Error::DimensionMismatch(format!(
            "Ricci tensor must be {n}×{n}, got {}×{}",
            ric_c.nrows(),
            ric_c.ncols()
        )));
    }
    if x >= n {
        return Err(Error::InvalidIndex(format!(
            "frame index {x} out of range for dimension {n}"
        )));
    }
    let nf = n as f64;
    let lambda = 1.0 / (2.0 * (nf - 3.0));
    let s = (nf - 1.0) / (4.0 * (nf - 3.0));

    let ric_vec: Vec<f64> = ric_c.column(x).iter().cloned().collect();
    let mut m = rep.act_vector(&ric_vec)?;

    let interior = torsion.interior_basis(x + 1)?;
    m -= rep.act(&interior)?.map(|z| z * (-16.0 * s * kappa));
    m -= rep.gamma(x).map(|z| z * (4.0 * (nf - 1.0) * kappa * kappa));
    let sigma_interior = torsion.sigma_t()?.interior_basis(x + 1)?;
    m -= rep.act(&sigma_interior)?.map(|z| z * (1.0 - 12.0 * lambda * lambda));

    let pair_coeff = 2.0 * (2.0 * lambda * lambda + lambda);
    for k in 0..n {
        let vector = torsion.contract_pair(x + 1, k + 1)?;
        let contracted = torsion.interior(&vector)?;
        m -= (rep.gamma(k) * rep.act(&contracted)?).map(|z| z * pair_coeff);
    }
    Ok(m)
}

/// One row of the Einstein–Sasaki non-existence table.
pub struct SasakiRow {
    /// Torsion eigenvalue the Killing number is paired with.
    pub mu: f64,
    /// Candidate Killing number.
    pub kappa: f64,
    /// |det M(e_1)| for the integrability endomorphism at this (μ, κ).
    pub det_abs: f64,
}

/// Determinant table certifying that the five-dimensional Einstein–Sasaki
/// local model admits no Killing spinor with torsion.
pub struct SasakiReport {
    rows: Vec<SasakiRow>,
    tol: f64,
}

impl SasakiReport {
    pub fn rows(&self) -> &[SasakiRow] {
        &self.rows
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// True when every determinant is bounded away from zero, i.e. no
    /// candidate Killing number survives the integrability condition.
    pub fn all_nonzero(&self) -> bool {
        self.rows.iter().all(|r| r.det_abs > self.tol)
    }
}

/// Evaluates the integrability determinant for all candidate Killing numbers
/// of the five-dimensional Einstein–Sasaki local model (Scal = 20,
/// T = 2(e_12 + e_34) ∧ e_5, Ric^c = diag(2,2,2,2,0)).
///
/// The candidate list is exactly the root set of the Killing-number
/// quadratic for μ ∈ {0, 4, −4}.
pub fn sasaki_nonexistence_report(rep: &SpinRep) -> Result<SasakiReport> {
    if rep.n() != 5 {
        return Err(Error::DimensionMismatch(format!(
            "the Einstein–Sasaki local model is five-dimensional, got a spin module for n = {}",
            rep.n()
        )));
    }
    let torsion = ExteriorForm::from_terms(5, 3, &[(vec![1, 2, 5], 2.0), (vec![3, 4, 5], 2.0)])?;
    let mut ric_c = RMat::zeros(5, 5);
    for i in 0..4 {
        ric_c[(i, i)] = 2.0;
    }
    let scal = 20.0;
    let t2 = torsion.norm_sq();

    let mut rows = Vec::new();
    for &mu in &[0.0, 4.0, -4.0] {
        for kappa in estimates::kappa_solutions(5, scal, t2, mu)? {
            let m = integrability_endomorphism(5, &torsion, &ric_c, kappa, 0, rep)?;
            rows.push(SasakiRow {
                mu,
                kappa,
                det_abs: m.determinant().norm(),
            });
        }
    }
    Ok(SasakiReport {
        rows,
        tol: tol::DET_NONZERO,
    })
}

/// Checks that a ∇^c-parallel spinor becomes a Killing spinor with torsion
/// with κ = 0 once the torsion is rescaled by (n−3)/(n−1).
///
/// Errors when ψ is not actually parallel for the model's canonical
/// connection.
pub fn parallel_killing_rescale_check(
    model: &ReductiveModel,
    rep: &SpinRep,
    psi: &CVec,
) -> Result<ResidualReport> {
    let n = model.n();
    check_invariant(model, rep, psi)?;
    let unit = normalized(psi)?;
    let maps_c = model.spin_connection(rep, model.torsion(), 0.25)?;
    let parallel_defect = maps_c
        .iter()
        .map(|m| (m * &unit).norm())
        .fold(0.0, f64::max);
    if parallel_defect > tol::RESIDUAL {
        return Err(Error::Precondition(format!(
            "spinor is not parallel for the canonical connection (defect {parallel_defect:.3e})"
        )));
    }
    let rescaled = model
        .torsion()
        .scale((n as f64 - 3.0) / (n as f64 - 1.0));
    let cand = KillingCandidate {
        psi: unit,
        kappa: 0.0,
        s: twistorial_s(n)?,
        mu: None,
    };
    killing_residual(model, rep, &rescaled, &cand)
}

/// Finds the invariant spinor that comes closest to solving the Killing
/// equation with the given Killing number, by minimizing the summed squared
/// residuals over the invariant space.
pub fn find_killing_candidate(
    model: &ReductiveModel,
    rep: &SpinRep,
    torsion: &ExteriorForm,
    kappa: f64,
) -> Result<KillingCandidate> {
    let s = twistorial_s(model.n())?;
    let space = model.invariant_spinors(rep)?;
    if space.dim() == 0 {
        return Err(Error::EmptyInvariantSpace(format!(
            "{} admits no isotropy-invariant spinors",
            model.name()
        )));
    }
    let b = space.basis_matrix(rep.dim());
    let maps = model.spin_connection(rep, torsion, s)?;
    let mut gram = CMat::zeros(space.dim(), space.dim());
    for (i, m) in maps.iter().enumerate() {
        let op = (m - rep.gamma(i).map(|z| z * kappa)) * &b;
        gram += op.adjoint() * op;
    }
    let (_, vecs) = linalg::hermitian_eigen(&gram);
    let coords = vecs.last().expect("invariant space is nonempty");
    let psi = &b * coords;

    let image = rep.act(torsion)? * &psi;
    let mu_estimate = psi.dotc(&image).re;
    let mu = if (&image - psi.map(|z| z * mu_estimate)).norm() <= 1e-6 {
        Some(mu_estimate)
    } else {
        None
    };
    Ok(KillingCandidate { psi, kappa, s, mu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::build_spin_rep;
    use num_complex::Complex64;

    fn killing_pass(model: &ReductiveModel, rep: &SpinRep, kappa: f64) -> (KillingCandidate, f64) {
        let cand = find_killing_candidate(model, rep, model.torsion(), kappa).unwrap();
        let report = killing_residual(model, rep, model.torsion(), &cand).unwrap();
        (cand, report.max())
    }

    #[test]
    fn stiefel_42_killing_numbers_verify_at_the_special_parameter() {
        let model = ReductiveModel::stiefel_42(0.4).unwrap();
        let rep = build_spin_rep(5).unwrap();
        let kappa = 5.0_f64.sqrt() / 10.0;
        for sign in [1.0, -1.0] {
            let (cand, max) = killing_pass(&model, &rep, sign * kappa);
            assert!(max <= tol::RESIDUAL, "κ={}: residual {max}", sign * kappa);
            assert!(cand.mu.is_some());
        }
        // The remaining quadratic roots are not geometric Killing numbers.
        for sign in [1.0, -1.0] {
            let (_, max) = killing_pass(&model, &rep, sign * 3.0 * kappa);
            assert!(max >= 0.1, "κ={}: residual {max}", sign * 3.0 * kappa);
        }
    }

    #[test]
    fn stiefel_52_killing_number_verifies() {
        let t = 42.0 / 49.0;
        let model = ReductiveModel::stiefel_52(t).unwrap();
        let rep = build_spin_rep(7).unwrap();
        let kappa = -(42.0_f64.sqrt()) / 56.0;
        let (cand, max) = killing_pass(&model, &rep, kappa);
        assert!(max <= tol::RESIDUAL, "residual {max}");
        assert!(cand.mu.is_some());
        let mu = cand.mu.unwrap();
        assert!((mu - 3.0 * t.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn killing_implies_twistor_and_dirac_eigenspinor() {
        let model = ReductiveModel::stiefel_42(0.4).unwrap();
        let rep = build_spin_rep(5).unwrap();
        let kappa = 5.0_f64.sqrt() / 10.0;
        let (cand, max) = killing_pass(&model, &rep, kappa);
        assert!(max <= tol::RESIDUAL);

        let tw = twistor_residual(&model, &rep, model.torsion(), &cand.psi, cand.s).unwrap();
        assert!(tw.pass(), "twistor residual {}", tw.max());

        // D̸ψ = (−nκ − nμ/(2(n−3))) ψ.
        let mu = cand.mu.unwrap();
        let expected = -5.0 * kappa - 5.0 * mu / 4.0;
        let psi = cand.psi.map(|z| z / cand.psi.norm());
        let image = dslash_full(&model, &rep, model.torsion()).unwrap() * &psi;
        let defect = (&image - psi.map(|z| z * expected)).norm();
        assert!(defect < tol::QUADRATIC, "defect {defect}");

        // κ must be a root of the Killing-number quadratic.
        let roots = estimates::kappa_solutions(
            5,
            model.scal_g().unwrap(),
            model.torsion().norm_sq(),
            mu,
        )
        .unwrap();
        assert!(roots.iter().any(|r| (r - kappa).abs() < 1e-10));
    }

    #[test]
    fn quadratic_identities_hold_on_killing_spinors() {
        let t = 0.4;
        let model = ReductiveModel::stiefel_42(t).unwrap();
        let rep = build_spin_rep(5).unwrap();
        let kappa = 5.0_f64.sqrt() / 10.0;
        let (cand, _) = killing_pass(&model, &rep, kappa);

        let r1 = dirac_squared_residual(&model, &rep, model.torsion(), &cand.psi).unwrap();
        assert!(r1 <= tol::QUADRATIC, "Dirac-square residual {r1}");
        // Both sides realize the known eigenvalue 1/(2t) = 5/4.
        let psi = cand.psi.map(|z| z / cand.psi.norm());
        let dslash = dslash_full(&model, &rep, model.torsion()).unwrap();
        let image = &dslash * (&dslash * &psi);
        let lambda = psi.dotc(&image).re;
        assert!((lambda - 1.0 / (2.0 * t)).abs() < 1e-9);

        let r2 = commutator_residual(&model, &rep, model.torsion(), &cand.psi).unwrap();
        assert!(r2 <= tol::QUADRATIC, "anticommutator residual {r2}");
    }

    #[test]
    fn parallel_spinors_rescale_to_killing() {
        let model = ReductiveModel::stiefel_42(0.5).unwrap();
        let rep = build_spin_rep(5).unwrap();
        let space = model.invariant_spinors(&rep).unwrap();
        for psi in space.basis() {
            // At t = 1/2 the invariant spinors are parallel but fail the
            // twistor equation at the special parameter...
            let tw = twistor_residual(&model, &rep, model.torsion(), psi, 0.5).unwrap();
            assert!(!tw.pass(), "twistor residual unexpectedly {}", tw.max());
            // ...while the rescaled torsion turns them into κ = 0 Killing
            // spinors.
            let report = parallel_killing_rescale_check(&model, &rep, psi).unwrap();
            assert!(report.pass(), "rescale residual {}", report.max());
        }

        // The guard rejects spinors that are not parallel.
        let other = ReductiveModel::stiefel_42(0.4).unwrap();
        let space = other.invariant_spinors(&rep).unwrap();
        let err = parallel_killing_rescale_check(&other, &rep, &space.basis()[0]);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn integrability_annihilates_killing_spinors_on_both_models() {
        let rep5 = build_spin_rep(5).unwrap();
        let model42 = ReductiveModel::stiefel_42(0.4).unwrap();
        let kappa42 = 5.0_f64.sqrt() / 10.0;
        let (cand, _) = killing_pass(&model42, &rep5, kappa42);
        let ric_c = model42.curvature(0.25).unwrap().ricci().clone();
        // Ric^c = diag(2−2t, …, 0).
        for i in 0..4 {
            assert!((ric_c[(i, i)] - 1.2).abs() < 1e-12);
        }
        assert!(ric_c[(4, 4)].abs() < 1e-12);
        let psi = cand.psi.map(|z| z / cand.psi.norm());
        for x in 0..5 {
            let m =
                integrability_endomorphism(5, model42.torsion(), &ric_c, kappa42, x, &rep5)
                    .unwrap();
            assert!((&m * &psi).norm() <= tol::QUADRATIC, "direction {x}");
        }

        let rep7 = build_spin_rep(7).unwrap();
        let model52 = ReductiveModel::stiefel_52(42.0 / 49.0).unwrap();
        let kappa52 = -(42.0_f64.sqrt()) / 56.0;
        let (cand, _) = killing_pass(&model52, &rep7, kappa52);
        let ric_c = model52.curvature(0.25).unwrap().ricci().clone();
        let psi = cand.psi.map(|z| z / cand.psi.norm());
        for x in 0..7 {
            let m =
                integrability_endomorphism(7, model52.torsion(), &ric_c, kappa52, x, &rep7)
                    .unwrap();
            assert!((&m * &psi).norm() <= tol::QUADRATIC, "direction {x}");
        }
    }

    #[test]
    fn riemannian_killing_limit_gives_zero_endomorphism() {
        // T = 0, Einstein with Scal = 4n(n−1)κ²: the endomorphism collapses
        // to act(Ric(X)) − 4(n−1)κ²·act(X) = 0.
        let rep = build_spin_rep(5).unwrap();
        let kappa = 0.3;
        let scal = 4.0 * 5.0 * 4.0 * kappa * kappa;
        let torsion = ExteriorForm::zero(5, 3).unwrap();
        let ric = RMat::identity(5, 5).map(|x| x * scal / 5.0);
        for x in 0..5 {
            let m = integrability_endomorphism(5, &torsion, &ric, kappa, x, &rep).unwrap();
            assert!(linalg::spec_norm(&m) < 1e-12);
        }
    }

    #[test]
    fn sasaki_table_matches_quadratic_roots_and_excludes_killing_spinors() {
        let rep = build_spin_rep(5).unwrap();
        let report = sasaki_nonexistence_report(&rep).unwrap();
        assert_eq!(report.rows().len(), 6);
        assert!(report.all_nonzero());

        let r5 = 5.0_f64.sqrt() / 10.0;
        let expected: Vec<(f64, f64)> = vec![
            (0.0, -0.5),
            (0.0, 0.5),
            (4.0, -1.0 - r5),
            (4.0, -1.0 + r5),
            (-4.0, 1.0 - r5),
            (-4.0, 1.0 + r5),
        ];
        for (row, (mu, kappa)) in report.rows().iter().zip(&expected) {
            assert!((row.mu - mu).abs() < 1e-12);
            assert!((row.kappa - kappa).abs() < 1e-12);
            // Verdicts survive doubling the tolerance.
            assert!(row.det_abs > 2.0 * report.tol());
        }
    }

    #[test]
    fn killing_residual_guards_preconditions() {
        let model = ReductiveModel::stiefel_42(0.4).unwrap();
        let rep = build_spin_rep(5).unwrap();
        let space = model.invariant_spinors(&rep).unwrap();

        // Wrong connection parameter.
        let cand = KillingCandidate {
            psi: space.basis()[0].clone(),
            kappa: 0.1,
            s: 0.25,
            mu: None,
        };
        assert!(matches!(
            killing_residual(&model, &rep, model.torsion(), &cand),
            Err(Error::Precondition(_))
        ));

        // Non-invariant spinor.
        let mut stray = CVec::zeros(rep.dim());
        stray[0] = Complex64::new(1.0, 0.0);
        let cand = KillingCandidate {
            psi: stray,
            kappa: 0.1,
            s: 0.5,
            mu: None,
        };
        assert!(matches!(
            killing_residual(&model, &rep, model.torsion(), &cand),
            Err(Error::Precondition(_))
        ));

        // Declared eigenvalue that does not match.
        let cand = KillingCandidate {
            psi: space.basis()[0].clone(),
            kappa: 0.1,
            s: 0.5,
            mu: Some(0.0),
        };
        assert!(matches!(
            killing_residual(&model, &rep, model.torsion(), &cand),
            Err(Error::Precondition(_))
        ));
    }
}
