//! Reductive homogeneous models with invariant metric connections.
//!
//! A [`ReductiveModel`] packages a reductive decomposition g = h ⊕ m of a
//! compact matrix Lie algebra together with a frame of m that is orthonormal
//! for a (possibly deformed) invariant metric, and an invariant torsion
//! 3-form expressed in that frame.  From the structure constants the module
//! computes the Levi-Civita connection (Koszul formula), the one-parameter
//! family of metric connections Λ^s = Λ^g + 2s·T(X,·,·), their curvature,
//! Ricci and scalar curvature, covariant derivatives of the torsion, and the
//! cyclic (first Bianchi) sum.
//!
//! On the spinor side, the isotropy representation is lifted to the spinor
//! module; the joint kernel of the lifted isotropy generators is the space of
//! invariant spinors, on which the Dirac operators of the family act as plain
//! Hermitian matrices.  [`ReductiveModel::algebraic_dirac`] restricts those
//! operators to that kernel (with an explicit closure check).
//!
//! Two concrete builders are provided: the Stiefel manifolds
//! V(4,2) = SO(4)/SO(2) and V(5,2) = SO(5)/SO(3), each carrying a
//! one-parameter deformation `t > 0` of the fibre metric.

use crate::error::{Error, Result};
use crate::forms::ExteriorForm;
use crate::linalg::{self, CMat, CVec, RMat};
use crate::spin::SpinRep;
use crate::tol;

/// Invariant inner product β(X, Y) = ½ tr(Xᵀ Y) on a matrix Lie algebra.
fn beta(x: &RMat, y: &RMat) -> f64 {
    0.5 * (x.transpose() * y).trace()
}

/// Skew basis matrix E_ij ∈ so(N) with +1 in entry (i, j) and −1 in (j, i)
/// (0-based indices).
fn e_skew(n: usize, i: usize, j: usize) -> RMat {
    let mut m = RMat::zeros(n, n);
    m[(i, j)] = 1.0;
    m[(j, i)] = -1.0;
    m
}

fn commutator(a: &RMat, b: &RMat) -> RMat {
    a * b - b * a
}

/// Lift a skew matrix A ∈ so(n) acting on the frame to the spinor module:
/// lift(A) = ¼ Σ_{a,b} A_{ba} γ_a γ_b = ½ Σ_{a<b} A_{ba} γ_a γ_b.
pub fn spin_lift(rep: &SpinRep, a: &RMat) -> Result<CMat> {
    if a.nrows() != rep.n() || a.ncols() != rep.n() {
        return Err(Error::DimensionMismatch(format!(
            "spin lift expects an {0}×{0} matrix, got {1}×{2}",
            rep.n(),
            a.nrows(),
            a.ncols()
        )));
    }
    let mut out = CMat::zeros(rep.dim(), rep.dim());
    for p in 0..rep.n() {
        for q in (p + 1)..rep.n() {
            let coeff = a[(q, p)];
            if coeff != 0.0 {
                out += (rep.gamma(p) * rep.gamma(q)).map(|z| z * 0.5 * coeff);
            }
        }
    }
    Ok(out)
}

/// Curvature data of one connection of the family on a reductive model.
///
/// The 4-tensor is stored in frame coordinates with the convention
/// `r(i, j, k, l) = ⟨R(Z_i, Z_j) Z_k, Z_l⟩`, the Ricci tensor is
/// `Ric(X, Y) = Σ_a ⟨R(Z_a, X) Y, Z_a⟩`, and `scal` is its trace.
pub struct CurvatureData {
    n: usize,
    riemann: Vec<f64>,
    ricci: RMat,
    scal: f64,
}

impl CurvatureData {
    /// Component ⟨R(Z_i, Z_j) Z_k, Z_l⟩ (0-based frame indices).
    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.riemann[((i * self.n + j) * self.n + k) * self.n + l]
    }

    /// Ricci tensor in frame coordinates.
    pub fn ricci(&self) -> &RMat {
        &self.ricci
    }

    /// Scalar curvature.
    pub fn scal(&self) -> f64 {
        self.scal
    }
}

/// Joint kernel of the lifted isotropy generators, i.e. the spinors fixed by
/// the identity component of the isotropy group.
///
/// The basis is orthonormal and diagonalizes the restriction of the torsion
/// action; `mus` lists the corresponding eigenvalues in descending order.
pub struct InvariantSpinorSpace {
    basis: Vec<CVec>,
    mus: Vec<f64>,
    annihilation_residual: f64,
}

impl InvariantSpinorSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CVec] {
        &self.basis
    }

    /// Torsion-action eigenvalue of each basis spinor (descending).
    pub fn mus(&self) -> &[f64] {
        &self.mus
    }

    /// Largest norm ‖L ψ‖ over lifted isotropy generators L and basis
    /// spinors ψ; certifies invariance.
    pub fn annihilation_residual(&self) -> f64 {
        self.annihilation_residual
    }

    /// Basis vectors as the columns of a matrix (spinor dim × space dim).
    pub fn basis_matrix(&self, spinor_dim: usize) -> CMat {
        let mut b = CMat::zeros(spinor_dim, self.basis.len());
        for (j, v) in self.basis.iter().enumerate() {
            b.set_column(j, v);
        }
        b
    }

    /// Whether ψ lies in the span of the basis up to `tol` (relative).
    pub fn contains(&self, psi: &CVec, tol: f64) -> bool {
        let norm = psi.norm();
        if norm == 0.0 {
            return true;
        }
        let mut proj = CVec::zeros(psi.len());
        for v in &self.basis {
            let coeff = v.dotc(psi);
            proj += v.map(|z| z * coeff);
        }
        (psi - proj).norm() <= tol * norm
    }
}

/// Dirac-type operators restricted to the invariant spinor space.
///
/// All matrices act on the coordinates of the invariant basis; the
/// `closure_residual` certifies that the full-space operators map the
/// invariant space to itself.
pub struct InvariantOperators {
    space: InvariantSpinorSpace,
    s: f64,
    d0: CMat,
    act_t: CMat,
    d_s: CMat,
    dslash: CMat,
    cal_d: CMat,
    closure_residual: f64,
}

impl InvariantOperators {
    pub fn space(&self) -> &InvariantSpinorSpace {
        &self.space
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Torsion-free Dirac operator Σ γ_i Λ̃^g(Z_i) on invariant spinors.
    pub fn d0(&self) -> &CMat {
        &self.d0
    }

    /// Clifford action of the torsion form on invariant spinors.
    pub fn act_t(&self) -> &CMat {
        &self.act_t
    }

    /// Dirac operator of the family member `s`: D^s = D^0 + 3s·T.
    pub fn d_s(&self) -> &CMat {
        &self.d_s
    }

    /// Characteristic Dirac operator D̸ = D^0 + ¼·T.
    pub fn dslash(&self) -> &CMat {
        &self.dslash
    }

    /// Auxiliary operator 𝒟^s = Σ (Z_i ⌟ T) · Λ̃^s(Z_i) on invariant spinors.
    pub fn cal_d(&self) -> &CMat {
        &self.cal_d
    }

    /// Largest defect ‖(1 − P) M B‖ over the restricted operators, where P
    /// projects onto the invariant space spanned by the columns of B.
    pub fn closure_residual(&self) -> f64 {
        self.closure_residual
    }
}

/// A reductive homogeneous space G/H given by matrix data: a basis of the
/// isotropy algebra h, a metric-orthonormal frame of the complement m, and an
/// invariant torsion 3-form in frame coordinates.
pub struct ReductiveModel {
    name: String,
    n: usize,
    t: f64,
    h_basis: Vec<RMat>,
    frame: Vec<RMat>,
    beta_m: Vec<f64>,
    beta_h: Vec<f64>,
    torsion: ExteriorForm,
    /// c[i] has entry (k, j) = coefficient of Z_k in [Z_i, Z_j]_m.
    c: Vec<RMat>,
    /// h_parts[i][j] = [Z_i, Z_j]_h as a Lie-algebra matrix.
    h_parts: Vec<Vec<RMat>>,
    /// Levi-Civita connection maps Λ^g(Z_i) in frame coordinates.
    lc: Vec<RMat>,
}

impl ReductiveModel {
    fn assemble(
        name: &str,
        t: f64,
        h_basis: Vec<RMat>,
        frame: Vec<RMat>,
        torsion: ExteriorForm,
    ) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "deformation parameter must be positive and finite, got {t}"
            )));
        }
        let n = frame.len();
        let beta_m: Vec<f64> = frame.iter().map(|z| beta(z, z)).collect();
        let beta_h: Vec<f64> = h_basis.iter().map(|h| beta(h, h)).collect();

        let mut model = ReductiveModel {
            name: name.to_owned(),
            n,
            t,
            h_basis,
            frame,
            beta_m,
            beta_h,
            torsion,
            c: Vec::new(),
            h_parts: Vec::new(),
            lc: Vec::new(),
        };

        // Structure data: split every frame bracket into its m- and h-parts
        // and check that the split is exact.
        let mut c = vec![RMat::zeros(n, n); n];
        let mut h_parts = vec![vec![RMat::zeros(0, 0); n]; n];
        for i in 0..n {
            for j in 0..n {
                let w = commutator(&model.frame[i], &model.frame[j]);
                let m_coords = model.m_project(&w);
                let h_coords = model.h_project(&w);
                let mut rest = w.clone();
                for (k, a) in m_coords.iter().enumerate() {
                    rest -= model.frame[k].map(|x| x * a);
                }
                let mut h_mat = RMat::zeros(w.nrows(), w.ncols());
                for (a, b) in h_coords.iter().enumerate() {
                    h_mat += model.h_basis[a].map(|x| x * b);
                }
                rest -= &h_mat;
                debug_assert!(
                    rest.norm() < 1e-12,
                    "bracket [Z_{i}, Z_{j}] does not lie in h ⊕ m"
                );
                for (k, a) in m_coords.iter().enumerate() {
                    c[i][(k, j)] = *a;
                }
                h_parts[i][j] = h_mat;
            }
        }
        model.c = c;
        model.h_parts = h_parts;

        // Koszul formula for the Levi-Civita connection in frame coordinates:
        // ⟨Λ^g(Z_i) Z_j, Z_k⟩ = −½ (c_ij^k − c_jk^i + c_ki^j).
        let mut lc = Vec::with_capacity(n);
        for i in 0..n {
            let mut a = RMat::zeros(n, n);
            for j in 0..n {
                for k in 0..n {
                    a[(k, j)] = -0.5
                        * (model.c[i][(k, j)] - model.c[j][(i, k)] + model.c[k][(j, i)]);
                }
            }
            lc.push(a);
        }
        model.lc = lc;
        Ok(model)
    }

    /// SO(4)/SO(2) with fibre deformation `t > 0`.
    ///
    /// Frame: Z_1 = E_13, Z_2 = E_14, Z_3 = E_23, Z_4 = E_24,
    /// Z_5 = E_12/√(2t); isotropy h spanned by E_34.  The invariant torsion
    /// is T = −√(2t)(e_135 + e_245) with ‖T‖² = 4t.
    pub fn stiefel_42(t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "deformation parameter must be positive and finite, got {t}"
            )));
        }
        let s2t = (2.0 * t).sqrt();
        let frame = vec![
            e_skew(4, 0, 2),
            e_skew(4, 0, 3),
            e_skew(4, 1, 2),
            e_skew(4, 1, 3),
            e_skew(4, 0, 1).map(|x| x / s2t),
        ];
        let h_basis = vec![e_skew(4, 2, 3)];
        let torsion = ExteriorForm::from_terms(
            5,
            3,
            &[(vec![1, 3, 5], -s2t), (vec![2, 4, 5], -s2t)],
        )?;
        Self::assemble("V(4,2)", t, h_basis, frame, torsion)
    }

    /// SO(5)/SO(3) with fibre deformation `t > 0`.
    ///
    /// Frame: Z_1..Z_6 = E_14, E_24, E_34, E_15, E_25, E_35 and
    /// Z_7 = E_45/√t; isotropy h spanned by E_12, E_13, E_23.  The invariant
    /// torsion is T = −√t (e_147 + e_257 + e_367) with ‖T‖² = 3t.
    pub fn stiefel_52(t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "deformation parameter must be positive and finite, got {t}"
            )));
        }
        let st = t.sqrt();
        let frame = vec![
            e_skew(5, 0, 3),
            e_skew(5, 1, 3),
            e_skew(5, 2, 3),
            e_skew(5, 0, 4),
            e_skew(5, 1, 4),
            e_skew(5, 2, 4),
            e_skew(5, 3, 4).map(|x| x / st),
        ];
        let h_basis = vec![e_skew(5, 0, 1), e_skew(5, 0, 2), e_skew(5, 1, 2)];
        let torsion = ExteriorForm::from_terms(
            7,
            3,
            &[
                (vec![1, 4, 7], -st),
                (vec![2, 5, 7], -st),
                (vec![3, 6, 7], -st),
            ],
        )?;
        Self::assemble("V(5,2)", t, h_basis, frame, torsion)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dimension of m (the tangent space).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Deformation parameter of the fibre metric.
    pub fn t(&self) -> f64 {
        self.t
    }

    /// Invariant torsion 3-form in frame coordinates.
    pub fn torsion(&self) -> &ExteriorForm {
        &self.torsion
    }

    /// Coordinates of the m-part of W relative to the frame.
    fn m_project(&self, w: &RMat) -> Vec<f64> {
        self.frame
            .iter()
            .zip(&self.beta_m)
            .map(|(z, nz)| beta(w, z) / nz)
            .collect()
    }

    /// Coordinates of the h-part of W relative to the isotropy basis.
    fn h_project(&self, w: &RMat) -> Vec<f64> {
        self.h_basis
            .iter()
            .zip(&self.beta_h)
            .map(|(h, nh)| beta(w, h) / nh)
            .collect()
    }

    /// Levi-Civita connection maps Λ^g(Z_i) in frame coordinates.
    pub fn levi_civita(&self) -> &[RMat] {
        &self.lc
    }

    /// Endomorphism Y ↦ T(X, Y, ·)♯ of a torsion form: entry (k, j) equals
    /// T(Z_i, Z_j, Z_k).
    pub fn torsion_map(&self, torsion: &ExteriorForm, i: usize) -> Result<RMat> {
        if i >= self.n {
            return Err(Error::InvalidIndex(format!(
                "frame index {i} out of range for dimension {}",
                self.n
            )));
        }
        let mut m = RMat::zeros(self.n, self.n);
        for j in 0..self.n {
            for k in 0..self.n {
                m[(k, j)] = torsion.coeff(&[i + 1, j + 1, k + 1]);
            }
        }
        Ok(m)
    }

    /// Connection maps of the family Λ^s(Z_i) = Λ^g(Z_i) + 2s·T(Z_i, ·, ·)♯
    /// for the given torsion form (the member s = 1/4 has parallel torsion
    /// when `torsion` is the model's own).
    pub fn connection(&self, torsion: &ExteriorForm, s: f64) -> Result<Vec<RMat>> {
        if torsion.n() != self.n || torsion.grade() != 3 {
            return Err(Error::DimensionMismatch(format!(
                "torsion must be a 3-form in dimension {}, got grade {} in dimension {}",
                self.n,
                torsion.grade(),
                torsion.n()
            )));
        }
        (0..self.n)
            .map(|i| Ok(&self.lc[i] + self.torsion_map(torsion, i)?.map(|x| 2.0 * s * x)))
            .collect()
    }

    /// Maximum residual of ∇^s_X T(U,V,W) = (2s − ½) σ_T(U,V,W,X) over all
    /// frame directions and triples, where ∇^s_X acts on the invariant tensor
    /// T through minus the connection map.
    pub fn covariant_torsion_residual(&self, torsion: &ExteriorForm, s: f64) -> Result<f64> {
        let maps = self.connection(torsion, s)?;
        let sigma = torsion.sigma_t()?;
        let factor = 2.0 * s - 0.5;
        let mut worst: f64 = 0.0;
        for (x, a) in maps.iter().enumerate() {
            for u in 0..self.n {
                for v in (u + 1)..self.n {
                    for w in (v + 1)..self.n {
                        let mut lhs = 0.0;
                        for r in 0..self.n {
                            lhs -= a[(r, u)] * torsion.coeff(&[r + 1, v + 1, w + 1])
                                + a[(r, v)] * torsion.coeff(&[u + 1, r + 1, w + 1])
                                + a[(r, w)] * torsion.coeff(&[u + 1, v + 1, r + 1]);
                        }
                        let rhs = factor * sigma.coeff(&[u + 1, v + 1, w + 1, x + 1]);
                        worst = worst.max((lhs - rhs).abs());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Curvature of the family member s for the given torsion form:
    /// R(X, Y)Z = [Λ(X), Λ(Y)]Z + Λ([X,Y]_m)Z − [[X,Y]_h, Z].
    pub fn curvature_with(&self, torsion: &ExteriorForm, s: f64) -> Result<CurvatureData> {
        let maps = self.connection(torsion, s)?;
        let n = self.n;
        let mut riemann = vec![0.0; n * n * n * n];
        for i in 0..n {
            for j in 0..n {
                let mut op = &maps[i] * &maps[j] - &maps[j] * &maps[i];
                for a in 0..n {
                    let coeff = self.c[i][(a, j)];
                    if coeff != 0.0 {
                        op += maps[a].map(|x| x * coeff);
                    }
                }
                let h = &self.h_parts[i][j];
                for k in 0..n {
                    let col = self.m_project(&commutator(h, &self.frame[k]));
                    for (l, v) in col.iter().enumerate() {
                        op[(l, k)] -= v;
                    }
                }
                for k in 0..n {
                    for l in 0..n {
                        riemann[((i * n + j) * n + k) * n + l] = op[(l, k)];
                    }
                }
            }
        }
        let mut ricci = RMat::zeros(n, n);
        for x in 0..n {
            for y in 0..n {
                let mut sum = 0.0;
                for a in 0..n {
                    sum += riemann[((a * n + x) * n + y) * n + a];
                }
                ricci[(x, y)] = sum;
            }
        }
        let scal = ricci.trace();
        Ok(CurvatureData {
            n,
            riemann,
            ricci,
            scal,
        })
    }

    /// Curvature of the family member s for the model's own torsion.
    pub fn curvature(&self, s: f64) -> Result<CurvatureData> {
        self.curvature_with(&self.torsion, s)
    }

    /// Riemannian scalar curvature.
    pub fn scal_g(&self) -> Result<f64> {
        Ok(self.curvature(0.0)?.scal())
    }

    /// Maximum residual of the cyclic curvature sum against
    /// s(6 − 8s)·σ_T over all frame index combinations.
    pub fn bianchi_residual(&self, torsion: &ExteriorForm, s: f64) -> Result<f64> {
        let curv = self.curvature_with(torsion, s)?;
        let sigma = torsion.sigma_t()?;
        let factor = s * (6.0 - 8.0 * s);
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                for k in (j + 1)..self.n {
                    for l in 0..self.n {
                        let cyc = curv.r(i, j, k, l) + curv.r(j, k, i, l) + curv.r(k, i, j, l);
                        let rhs =
                            factor * sigma.coeff(&[i + 1, j + 1, k + 1, l + 1]);
                        worst = worst.max((cyc - rhs).abs());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Action of the isotropy generator `h_basis[a]` on m in frame
    /// coordinates.
    pub fn isotropy_on_m(&self, a: usize) -> Result<RMat> {
        let h = self.h_basis.get(a).ok_or_else(|| {
            Error::InvalidIndex(format!(
                "isotropy index {a} out of range for {} generators",
                self.h_basis.len()
            ))
        })?;
        let mut m = RMat::zeros(self.n, self.n);
        for j in 0..self.n {
            let col = self.m_project(&commutator(h, &self.frame[j]));
            for (k, v) in col.iter().enumerate() {
                m[(k, j)] = *v;
            }
        }
        Ok(m)
    }

    /// Spinor lifts Λ̃^s(Z_i) of the connection maps for the given torsion.
    pub fn spin_connection(
        &self,
        rep: &SpinRep,
        torsion: &ExteriorForm,
        s: f64,
    ) -> Result<Vec<CMat>> {
        if rep.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "spin representation has dimension {}, model has {}",
                rep.n(),
                self.n
            )));
        }
        self.connection(torsion, s)?
            .iter()
            .map(|a| spin_lift(rep, a))
            .collect()
    }

    /// Invariant spinors: the joint kernel of the lifted isotropy generators,
    /// with basis rotated to diagonalize the torsion action.
    pub fn invariant_spinors(&self, rep: &SpinRep) -> Result<InvariantSpinorSpace> {
        if rep.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "spin representation has dimension {}, model has {}",
                rep.n(),
                self.n
            )));
        }
        let lifts: Vec<CMat> = (0..self.h_basis.len())
            .map(|a| spin_lift(rep, &self.isotropy_on_m(a)?))
            .collect::<Result<_>>()?;
        let mut gram = CMat::zeros(rep.dim(), rep.dim());
        for l in &lifts {
            gram += l.adjoint() * l;
        }
        let kernel = linalg::kernel_basis(&gram, tol::ALGEBRAIC);
        if kernel.is_empty() {
            return Ok(InvariantSpinorSpace {
                basis: Vec::new(),
                mus: Vec::new(),
                annihilation_residual: 0.0,
            });
        }

        // Rotate the kernel basis so the restricted torsion action is
        // diagonal; record its eigenvalues in descending order.
        let act_t = rep.act(&self.torsion)?;
        let k = kernel.len();
        let mut b = CMat::zeros(rep.dim(), k);
        for (j, v) in kernel.iter().enumerate() {
            b.set_column(j, v);
        }
        let restricted = b.adjoint() * &act_t * &b;
        let (mus, vecs) = linalg::hermitian_eigen(&restricted);
        let basis: Vec<CVec> = vecs.iter().map(|v| &b * v).collect();

        let mut annihilation_residual: f64 = 0.0;
        for l in &lifts {
            for psi in &basis {
                annihilation_residual = annihilation_residual.max((l * psi).norm());
            }
        }
        Ok(InvariantSpinorSpace {
            basis,
            mus,
            annihilation_residual,
        })
    }

    /// Dirac-type operators of the family member s restricted to the
    /// invariant spinor space.
    ///
    /// Errors with [`Error::EmptyInvariantSpace`] when the model admits no
    /// invariant spinors.
    pub fn algebraic_dirac(&self, rep: &SpinRep, s: f64) -> Result<InvariantOperators> {
        let space = self.invariant_spinors(rep)?;
        if space.dim() == 0 {
            return Err(Error::EmptyInvariantSpace(format!(
                "{} admits no isotropy-invariant spinors",
                self.name
            )));
        }
        let b = space.basis_matrix(rep.dim());

        let lam_g = self.spin_connection(rep, &self.torsion, 0.0)?;
        let lam_s = self.spin_connection(rep, &self.torsion, s)?;
        let act_t_full = rep.act(&self.torsion)?;

        let mut d0_full = CMat::zeros(rep.dim(), rep.dim());
        for (i, l) in lam_g.iter().enumerate() {
            d0_full += rep.gamma(i) * l;
        }
        let d_s_full = &d0_full + act_t_full.map(|z| z * 3.0 * s);
        let dslash_full = &d0_full + act_t_full.map(|z| z * 0.25);
        let mut cal_d_full = CMat::zeros(rep.dim(), rep.dim());
        for (i, l) in lam_s.iter().enumerate() {
            let contraction = self.torsion.interior_basis(i + 1)?;
            cal_d_full += rep.act(&contraction)? * l;
        }

        let mut closure_residual: f64 = 0.0;
        let mut restrict = |m: &CMat| -> CMat {
            let rest = b.adjoint() * m * &b;
            let defect = m * &b - &b * &rest;
            closure_residual = closure_residual.max(linalg::spec_norm(&defect));
            rest
        };
        let d0 = restrict(&d0_full);
        let act_t = restrict(&act_t_full);
        let d_s = restrict(&d_s_full);
        let dslash = restrict(&dslash_full);
        let cal_d = restrict(&cal_d_full);

        Ok(InvariantOperators {
            space,
            s,
            d0,
            act_t,
            d_s,
            dslash,
            cal_d,
            closure_residual,
        })
    }
}
