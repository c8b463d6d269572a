//! Complex spin representations and the Clifford action of exterior forms.
//!
//! Conventions (global for the whole crate):
//! - γ_i γ_j + γ_j γ_i = −2 δ_ij Id, so each γ_i is skew-Hermitian and unitary;
//! - vectors act skew-adjointly, 3-forms act self-adjointly;
//! - a monomial e_{i1..ik} (increasing) acts as the product γ_{i1} ⋯ γ_{ik}.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::forms::ExteriorForm;
use crate::linalg::{self, CMat, CVec};
use crate::tol;

/// Largest supported frame dimension; keeps spinor spaces at or below 64×64.
pub const MAX_DIM: usize = 12;

#[derive(Clone, Debug)]
pub struct SpinRep {
    n: usize,
    dim: usize,
    gammas: Vec<CMat>,
}

/// Generators of the complex spinor space in dimension n (2^⌊n/2⌋ components),
/// built from tensor products of the three 2×2 Pauli matrices.
pub fn build_spin_rep(n: usize) -> Result<SpinRep> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::UnsupportedDimension {
            n,
            reason: format!("spin representations are built for 1..={MAX_DIM}"),
        });
    }
    let sigma1 = CMat::from_row_slice(2, 2, &[linalg::re(0.0), linalg::re(1.0), linalg::re(1.0), linalg::re(0.0)]);
    let sigma2 = CMat::from_row_slice(2, 2, &[linalg::re(0.0), linalg::im(-1.0), linalg::im(1.0), linalg::re(0.0)]);
    let sigma3 = CMat::from_row_slice(2, 2, &[linalg::re(1.0), linalg::re(0.0), linalg::re(0.0), linalg::re(-1.0)]);

    let m = n / 2;
    let dim = 1usize << m;
    // e_{2j-1} ↦ σ3^{⊗(j-1)} ⊗ σ1 ⊗ Id^{⊗(m-j)},  e_{2j} ↦ same with σ2,
    // and for odd n the last generator is σ3^{⊗m}; multiplying the resulting
    // Hermitian anticommuting family by i gives the skew-Hermitian γ_i.
    let place = |middle: &CMat, j: usize| -> CMat {
        let mut acc = CMat::identity(1, 1);
        for _ in 0..j {
            acc = acc.kronecker(&sigma3);
        }
        acc = acc.kronecker(middle);
        let trailing = m - j - 1;
        for _ in 0..trailing {
            acc = acc.kronecker(&CMat::identity(2, 2));
        }
        acc
    };
    let mut gammas = Vec::with_capacity(n);
    for j in 0..m {
        gammas.push(place(&sigma1, j).map(|z| z * Complex64::i()));
        gammas.push(place(&sigma2, j).map(|z| z * Complex64::i()));
    }
    if n % 2 == 1 {
        let mut acc = CMat::identity(1, 1);
        for _ in 0..m {
            acc = acc.kronecker(&sigma3);
        }
        gammas.push(acc.map(|z| z * Complex64::i()));
    }
    Ok(SpinRep { n, dim, gammas })
}

impl SpinRep {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the spinor space, 2^⌊n/2⌋.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma(&self, i: usize) -> &CMat {
        &self.gammas[i]
    }

    /// Clifford action of an exterior form: each increasing monomial maps to
    /// the ordered product of its generators.
    pub fn act(&self, w: &ExteriorForm) -> Result<CMat> {
        if w.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "form on R^{} against a spin representation for n={}",
                w.n(),
                self.n
            )));
        }
        let mut out = CMat::zeros(self.dim, self.dim);
        for (key, coeff) in w.terms() {
            let mut product = CMat::identity(self.dim, self.dim);
            for &i in key {
                product = &product * &self.gammas[i - 1];
            }
            out += product.scale(coeff);
        }
        Ok(out)
    }

    /// Clifford action of a plain vector, Σ x_i γ_i.
    pub fn act_vector(&self, x: &[f64]) -> Result<CMat> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against a spin representation for n={}",
                x.len(),
                self.n
            )));
        }
        let mut out = CMat::zeros(self.dim, self.dim);
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0.0 {
                out += self.gammas[i].scale(xi);
            }
        }
        Ok(out)
    }

    /// Clifford contraction of an element of T* ⊗ Σ: m(φ) = Σ γ_k φ_k.
    pub fn clifford_contraction(&self, phi: &[CVec]) -> Result<CVec> {
        if phi.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} spinor components, expected n={}",
                phi.len(),
                self.n
            )));
        }
        let mut out = CVec::zeros(self.dim);
        for (k, component) in phi.iter().enumerate() {
            out += &self.gammas[k] * component;
        }
        Ok(out)
    }

    /// The twistor projection on T* ⊗ Σ:
    /// p(φ)_k = φ_k + (1/n) γ_k · m(φ). Orthogonal projector onto ker m.
    pub fn twistor_project(&self, phi: &[CVec]) -> Result<Vec<CVec>> {
        let m = self.clifford_contraction(phi)?;
        let scale = linalg::re(1.0 / self.n as f64);
        Ok(phi
            .iter()
            .enumerate()
            .map(|(k, component)| component + (&self.gammas[k] * &m).scale_complex(scale))
            .collect())
    }

    /// The vector field attached to a spinor: X_j = i⟨ψ, γ_j ψ⟩ (real because
    /// the γ_j are skew-adjoint).
    pub fn killing_vector(&self, psi: &CVec) -> Vec<f64> {
        self.gammas
            .iter()
            .map(|g| (Complex64::i() * psi.dotc(&(g * psi))).re)
            .collect()
    }
}

/// Helper: scale a complex vector by a complex scalar (nalgebra's `scale`
/// takes a real factor only).
trait ScaleComplex {
    fn scale_complex(&self, c: Complex64) -> Self;
}

impl ScaleComplex for CVec {
    fn scale_complex(&self, c: Complex64) -> Self {
        self.map(|z| z * c)
    }
}

/// Eigenbundle of the Clifford action of a 3-form.
#[derive(Clone, Debug)]
pub struct EigenBundle {
    pub mu: f64,
    pub multiplicity: usize,
    pub projector: CMat,
}

/// Split the spinor space into eigenbundles of act(T). Eigenvalues closer
/// than `cluster_tol` are merged; bundles are reported with μ descending.
pub fn split_eigenbundles(
    rep: &SpinRep,
    t: &ExteriorForm,
    cluster_tol: f64,
) -> Result<Vec<EigenBundle>> {
    if t.grade() != 3 {
        return Err(Error::InvalidParameter(format!(
            "eigenbundles are split for 3-forms, got grade {}",
            t.grade()
        )));
    }
    let action = rep.act(t)?;
    let (values, vectors) = linalg::hermitian_eigen(&action);
    let mut bundles: Vec<EigenBundle> = Vec::new();
    let mut cluster: Vec<usize> = Vec::new();
    let flush = |cluster: &[usize], bundles: &mut Vec<EigenBundle>| {
        if cluster.is_empty() {
            return;
        }
        let mu = cluster.iter().map(|&i| values[i]).sum::<f64>() / cluster.len() as f64;
        let mut projector = CMat::zeros(rep.dim(), rep.dim());
        for &i in cluster {
            projector += &vectors[i] * vectors[i].adjoint();
        }
        bundles.push(EigenBundle { mu, multiplicity: cluster.len(), projector });
    };
    for i in 0..values.len() {
        if let Some(&last) = cluster.last() {
            if (values[last] - values[i]).abs() > cluster_tol {
                flush(&cluster, &mut bundles);
                cluster.clear();
            }
        }
        cluster.push(i);
    }
    flush(&cluster, &mut bundles);
    Ok(bundles)
}

/// A torsion form on R^n together with the scalar curvature floor and the
/// derived quantities every bound consumes.
#[derive(Clone, Debug)]
pub struct TorsionDatum {
    pub n: usize,
    pub torsion: ExteriorForm,
    pub scal_g: f64,
    pub t_norm_sq: f64,
    pub sigma: ExteriorForm,
    pub eigenbundles: Vec<EigenBundle>,
}

impl TorsionDatum {
    pub fn new(torsion: ExteriorForm, scal_g: f64) -> Result<Self> {
        if torsion.grade() != 3 {
            return Err(Error::InvalidParameter(format!(
                "torsion must be a 3-form, got grade {}",
                torsion.grade()
            )));
        }
        let n = torsion.n();
        let rep = build_spin_rep(n)?;
        let eigenbundles = split_eigenbundles(&rep, &torsion, tol::CLUSTER)?;
        Ok(Self {
            n,
            t_norm_sq: torsion.norm_sq(),
            sigma: torsion.sigma_t()?,
            scal_g,
            torsion,
            eigenbundles,
        })
    }

    /// Largest μ² over the torsion spectrum.
    pub fn max_mu_sq(&self) -> f64 {
        self.eigenbundles.iter().fold(0.0f64, |m, b| m.max(b.mu * b.mu))
    }
}

/// One named residual from the identity suite.
#[derive(Clone, Debug)]
pub struct IdentityResidual {
    pub label: &'static str,
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub items: Vec<IdentityResidual>,
    pub max_residual: f64,
}

/// Check the eight algebraic identities tying together the Clifford action,
/// wedge, contraction, σ_T, and ‖T‖² for a 3-form `t` and a vector `x`.
/// Each residual is the spectral norm of (LHS − RHS) as endomorphisms.
pub fn identity_suite(rep: &SpinRep, t: &ExteriorForm, x: &[f64]) -> Result<IdentityReport> {
    let n = rep.n();
    if t.n() != n || t.grade() != 3 || x.len() != n {
        return Err(Error::DimensionMismatch(
            "identity suite needs a 3-form and a vector matching the representation".into(),
        ));
    }
    let dim = rep.dim();
    let id = linalg::identity(dim);
    let t_act = rep.act(t)?;
    let x_act = rep.act_vector(x)?;
    let x_form = ExteriorForm::one_form(n, x)?;
    let x_wedge_t = rep.act(&x_form.wedge(t)?)?;
    let x_into_t = rep.act(&t.interior(x)?)?;
    let sigma = t.sigma_t()?;
    let sigma_act = rep.act(&sigma)?;
    let t2 = t.norm_sq();

    let mut items = Vec::with_capacity(8);

    // (1) X·T = X∧T − X⌟T and T·X = −X∧T − X⌟T.
    let r1a = linalg::spec_norm(&(&x_act * &t_act - (&x_wedge_t - &x_into_t)));
    let r1b = linalg::spec_norm(&(&t_act * &x_act - (-&x_wedge_t - &x_into_t)));
    items.push(IdentityResidual {
        label: "vector/3-form product splits into wedge minus contraction",
        residual: r1a.max(r1b),
    });

    // (2) X·ω − (−1)^k ω·X = −2 X⌟ω, exercised for ω = T (k=3) and ω = σ_T (k=4).
    let r2a = linalg::spec_norm(&(&x_act * &t_act + &t_act * &x_act + (&x_into_t).scale(2.0)));
    let x_into_sigma = rep.act(&sigma.interior(x)?)?;
    let r2b = linalg::spec_norm(
        &(&x_act * &sigma_act - &sigma_act * &x_act + (&x_into_sigma).scale(2.0)),
    );
    items.push(IdentityResidual {
        label: "graded anticommutator with a vector gives -2 contraction",
        residual: r2a.max(r2b),
    });

    // (3) 3-forms act self-adjointly.
    items.push(IdentityResidual {
        label: "3-form action is self-adjoint",
        residual: linalg::spec_norm(&(&t_act - t_act.adjoint())),
    });

    // (4) Σ (e_i⌟T)·e_i = Σ e_i·(e_i⌟T) = 3T.
    let mut sum_ci_gi = CMat::zeros(dim, dim);
    let mut sum_gi_ci = CMat::zeros(dim, dim);
    for i in 1..=n {
        let ci = rep.act(&t.interior_basis(i)?)?;
        sum_ci_gi += &ci * rep.gamma(i - 1);
        sum_gi_ci += rep.gamma(i - 1) * &ci;
    }
    let three_t = (&t_act).scale(3.0);
    let r4 = linalg::spec_norm(&(&sum_ci_gi - &three_t))
        .max(linalg::spec_norm(&(&sum_gi_ci - &three_t)));
    items.push(IdentityResidual {
        label: "frame sum of contraction times vector equals 3T",
        residual: r4,
    });

    // (5) Σ (e_i⌟T)·(e_i⌟T) = 2σ_T − 3‖T‖².
    let mut sum_ci_sq = CMat::zeros(dim, dim);
    for i in 1..=n {
        let ci = rep.act(&t.interior_basis(i)?)?;
        sum_ci_sq += &ci * &ci;
    }
    items.push(IdentityResidual {
        label: "squared frame contractions equal 2 sigma_T - 3|T|^2",
        residual: linalg::spec_norm(&(&sum_ci_sq - ((&sigma_act).scale(2.0) - (&id).scale(3.0 * t2)))),
    });

    // (6) T² = −2σ_T + ‖T‖².
    items.push(IdentityResidual {
        label: "torsion square equals -2 sigma_T + |T|^2",
        residual: linalg::spec_norm(&(&t_act * &t_act - ((&id).scale(t2) - (&sigma_act).scale(2.0)))),
    });

    // (7) Σ e_i·(e_i ∧ T) = (3−n)T.
    let mut sum_gi_wi = CMat::zeros(dim, dim);
    for i in 1..=n {
        let wi = rep.act(&ExteriorForm::basis(n, i)?.wedge(t)?)?;
        sum_gi_wi += rep.gamma(i - 1) * &wi;
    }
    items.push(IdentityResidual {
        label: "frame sum of vector times wedge equals (3-n)T",
        residual: linalg::spec_norm(&(&sum_gi_wi - (&t_act).scale(3.0 - n as f64))),
    });

    // (8) Σ_j T(X, e_j)·e_j = −2 X⌟T.
    let mut sum_pair = CMat::zeros(dim, dim);
    for j in 1..=n {
        let mut v = vec![0.0; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0.0 {
                let w = t.contract_pair(i + 1, j)?;
                for (a, &wa) in w.iter().enumerate() {
                    v[a] += xi * wa;
                }
            }
        }
        sum_pair += rep.act_vector(&v)? * rep.gamma(j - 1);
    }
    items.push(IdentityResidual {
        label: "pair-contraction frame sum equals -2 X contracted into T",
        residual: linalg::spec_norm(&(&sum_pair + (&x_into_t).scale(2.0))),
    });

    let max_residual = items.iter().fold(0.0f64, |m, r| m.max(r.residual));
    Ok(IdentityReport { items, max_residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn contact_torsion() -> ExteriorForm {
        ExteriorForm::from_terms(5, 3, &[(vec![1, 2, 5], 2.0), (vec![3, 4, 5], 2.0)]).unwrap()
    }

    pub(crate) fn random_three_form(rng: &mut ChaCha8Rng, n: usize) -> ExteriorForm {
        let mut t = ExteriorForm::zero(n, 3).unwrap();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    let c = rng.gen_range(-2.0..2.0);
                    t = t.add(&ExteriorForm::monomial(n, &[i, j, k], c).unwrap()).unwrap();
                }
            }
        }
        t
    }

    #[test]
    fn gamma_relations_hold_for_all_supported_dimensions() {
        for n in 1..=8 {
            let rep = build_spin_rep(n).unwrap();
            assert_eq!(rep.dim(), 1 << (n / 2));
            let id = linalg::identity(rep.dim());
            for i in 0..n {
                let gi = rep.gamma(i);
                assert!(linalg::spec_norm(&(gi + gi.adjoint())) < 1e-14, "skew-Hermitian");
                assert!(linalg::spec_norm(&(gi * gi.adjoint() - &id)) < 1e-14, "unitary");
                for j in 0..n {
                    let gj = rep.gamma(j);
                    let anti = gi * gj + gj * gi;
                    let expected = if i == j { (&id).scale(-2.0) } else { (&id).scale(0.0) };
                    assert!(linalg::spec_norm(&(anti - expected)) < 1e-14);
                }
            }
        }
    }

    #[test]
    fn dimension_bounds_are_enforced() {
        assert!(build_spin_rep(0).is_err());
        assert!(build_spin_rep(13).is_err());
        assert!(build_spin_rep(12).is_ok());
    }

    #[test]
    fn odd_dimensional_volume_element_is_fixed() {
        // The generator convention pins the Clifford volume element in odd
        // dimensions; the torsion spectra of the homogeneous models depend on it.
        for (n, expected) in [(5usize, linalg::im(-1.0)), (7, linalg::re(-1.0))] {
            let rep = build_spin_rep(n).unwrap();
            let mut vol = linalg::identity(rep.dim());
            for i in 0..n {
                vol = &vol * rep.gamma(i);
            }
            let target = linalg::identity(rep.dim()).map(|z| z * expected);
            assert!(linalg::spec_norm(&(vol - target)) < 1e-13, "n={n}");
        }
    }

    #[test]
    fn contact_torsion_action_has_expected_spectrum() {
        let rep = build_spin_rep(5).unwrap();
        let t = contact_torsion();
        let action = rep.act(&t).unwrap();
        assert!(linalg::spec_norm(&(&action - action.adjoint())) < 1e-13);
        let (values, _) = linalg::hermitian_eigen(&action);
        let expected = [4.0, 0.0, 0.0, -4.0];
        for (v, e) in values.iter().zip(expected) {
            assert!((v - e).abs() < 1e-12, "{values:?}");
        }
    }

    #[test]
    fn act_of_basis_one_form_is_a_generator() {
        let rep = build_spin_rep(5).unwrap();
        let e1 = ExteriorForm::basis(5, 1).unwrap();
        assert!(linalg::spec_norm(&(rep.act(&e1).unwrap() - rep.gamma(0))) < 1e-15);
    }

    #[test]
    fn eigenbundles_of_contact_torsion() {
        let rep = build_spin_rep(5).unwrap();
        let bundles = split_eigenbundles(&rep, &contact_torsion(), tol::CLUSTER).unwrap();
        let spectrum: Vec<(f64, usize)> = bundles.iter().map(|b| (b.mu, b.multiplicity)).collect();
        assert_eq!(spectrum.len(), 3);
        assert!((spectrum[0].0 - 4.0).abs() < 1e-12 && spectrum[0].1 == 1);
        assert!(spectrum[1].0.abs() < 1e-12 && spectrum[1].1 == 2);
        assert!((spectrum[2].0 + 4.0).abs() < 1e-12 && spectrum[2].1 == 1);

        // Projector laws and completeness.
        let mut sum = CMat::zeros(4, 4);
        let action = rep.act(&contact_torsion()).unwrap();
        for b in &bundles {
            let p = &b.projector;
            assert!(linalg::spec_norm(&(p * p - p)) < 1e-12);
            assert!(linalg::spec_norm(&(p - p.adjoint().clone())) < 1e-12);
            assert!(linalg::spec_norm(&(&action * p - p.scale(b.mu))) < 1e-12);
            sum += p;
        }
        assert!(linalg::spec_norm(&(sum - linalg::identity(4))) < 1e-12);
    }

    #[test]
    fn zero_torsion_gives_single_bundle() {
        let rep = build_spin_rep(6).unwrap();
        let t = ExteriorForm::zero(6, 3).unwrap();
        let bundles = split_eigenbundles(&rep, &t, tol::CLUSTER).unwrap();
        assert_eq!(bundles.len(), 1);
        assert_eq!(bundles[0].multiplicity, 8);
        assert!(bundles[0].mu.abs() < 1e-14);
    }

    #[test]
    fn identity_suite_passes_on_random_torsions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [5usize, 6] {
            let rep = build_spin_rep(n).unwrap();
            for _ in 0..5 {
                let t = random_three_form(&mut rng, n);
                let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let report = identity_suite(&rep, &t, &x).unwrap();
                assert_eq!(report.items.len(), 8);
                assert!(
                    report.max_residual <= tol::ALGEBRAIC,
                    "n={n}: {:?}",
                    report.items
                );
            }
        }
    }

    #[test]
    fn twistor_projection_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in [5usize, 6, 7] {
            let rep = build_spin_rep(n).unwrap();
            let dim = rep.dim();
            let random_spinor = |rng: &mut ChaCha8Rng| {
                CVec::from_iterator(
                    dim,
                    (0..dim).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))),
                )
            };
            for _ in 0..10 {
                let phi: Vec<CVec> = (0..n).map(|_| random_spinor(&mut rng)).collect();
                let p = rep.twistor_project(&phi).unwrap();
                let pp = rep.twistor_project(&p).unwrap();
                let proj_err: f64 = p
                    .iter()
                    .zip(&pp)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max);
                assert!(proj_err < 1e-12, "p is idempotent");
                assert!(rep.clifford_contraction(&p).unwrap().norm() < 1e-12, "p lands in ker m");

                let norm_sq = |phi: &[CVec]| phi.iter().map(|v| v.norm_squared()).sum::<f64>();
                let m = rep.clifford_contraction(&phi).unwrap();
                let lhs = norm_sq(&p) + m.norm_squared() / n as f64;
                assert!((lhs - norm_sq(&phi)).abs() < 1e-10, "norm identity");
            }
        }
    }

    #[test]
    fn killing_vector_is_real_and_vanishes_on_zero() {
        let rep = build_spin_rep(5).unwrap();
        assert_eq!(rep.killing_vector(&CVec::zeros(4)), vec![0.0; 5]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let psi = CVec::from_iterator(
                4,
                (0..4).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))),
            );
            // Components are produced as real parts of i⟨ψ, γψ⟩; verify the
            // imaginary part genuinely vanishes.
            for (j, _) in rep.gammas.iter().enumerate() {
                let val = Complex64::i() * psi.dotc(&(rep.gamma(j) * &psi));
                assert!(val.im.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn torsion_datum_derives_consistent_quantities() {
        let datum = TorsionDatum::new(contact_torsion(), 20.0).unwrap();
        assert_eq!(datum.n, 5);
        assert_eq!(datum.t_norm_sq, 8.0);
        assert_eq!(datum.max_mu_sq(), 16.0);
        let mult_sum: usize = datum.eigenbundles.iter().map(|b| b.multiplicity).sum();
        assert_eq!(mult_sum, 4);

        // T² = −2σ_T + ‖T‖² as endomorphisms.
        let rep = build_spin_rep(5).unwrap();
        let t_act = rep.act(&datum.torsion).unwrap();
        let rhs = linalg::identity(4).scale(datum.t_norm_sq)
            - rep.act(&datum.sigma).unwrap().scale(2.0);
        assert!(linalg::spec_norm(&(&t_act * &t_act - rhs)) < tol::ALGEBRAIC);
    }
}
