//! Closed-form scalar machinery: eigenvalue lower bounds for the Dirac
//! operator with skew torsion, the Killing-number quadratic, the
//! dimension-six relations, parallel-spinor criteria, and product bounds.
//!
//! Everything here is a low-degree rational (or square-root) function of its
//! inputs; double precision reproduces the worked values to 1e−12 or better.

use crate::error::{Error, Result};
use crate::spin::TorsionDatum;

/// Connection-family bookkeeping for dimension n: the distinguished twistorial
/// parameter s = (n−1)/(4(n−3)) and the auxiliary constant λ = 1/(2(n−3)).
#[derive(Clone, Copy, Debug)]
pub struct ConnectionParams {
    pub n: usize,
    pub s: f64,
    pub lambda: f64,
}

impl ConnectionParams {
    /// Parameters at the twistorial value of s; requires n ≥ 4.
    pub fn twistorial(n: usize) -> Result<Self> {
        if n <= 3 {
            return Err(Error::UnsupportedDimension {
                n,
                reason: "the twistorial connection parameter needs n ≥ 4".into(),
            });
        }
        let d = (n - 3) as f64;
        Ok(Self { n, s: (n as f64 - 1.0) / (4.0 * d), lambda: 1.0 / (2.0 * d) })
    }
}

/// Scalar curvature of the s-family connection: Scal^s = Scal^g − 24 s² ‖T‖².
pub fn scal_s(scal_g: f64, s: f64, t_norm_sq: f64) -> f64 {
    scal_g - 24.0 * s * s * t_norm_sq
}

/// Universal lower bound for the square of the Dirac operator with torsion,
/// restricted to the μ-eigenbundle of T:
/// β_univ(μ) = (1/4) Scal_min + (1/8) ‖T‖² − (1/4) μ².
pub fn beta_univ(_n: usize, scal_min: f64, t_norm_sq: f64, mu: f64) -> f64 {
    0.25 * scal_min + 0.125 * t_norm_sq - 0.25 * mu * mu
}

/// Twistorial lower bound on the μ-eigenbundle:
/// β_tw(μ) = n/(4(n−1)) Scal_min + n(n−5)/(8(n−3)²) ‖T‖² + n(4−n)/(4(n−3)²) μ².
/// Undefined for n ≤ 3.
pub fn beta_tw(n: usize, scal_min: f64, t_norm_sq: f64, mu: f64) -> Result<f64> {
    if n <= 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the twistorial bound needs n ≥ 4".into(),
        });
    }
    let nf = n as f64;
    let d = nf - 3.0;
    Ok(nf / (4.0 * (nf - 1.0)) * scal_min
        + nf * (nf - 5.0) / (8.0 * d * d) * t_norm_sq
        + nf * (4.0 - nf) / (4.0 * d * d) * mu * mu)
}

/// Real solutions κ of the Killing-number quadratic
/// n [κ + μ/(2(n−3))]² = Scal/(4(n−1)) + (n−5)/(8(n−3)²) ‖T‖² − (n−4)/(4(n−3)²) μ².
///
/// Returns the empty vector when the right-hand side is negative (no real
/// Killing number exists on that eigenbundle), one root when it vanishes,
/// two roots (ascending) otherwise.
pub fn kappa_solutions(n: usize, scal: f64, t_norm_sq: f64, mu: f64) -> Result<Vec<f64>> {
    let params = ConnectionParams::twistorial(n)?;
    let nf = n as f64;
    let d = nf - 3.0;
    let rhs = scal / (4.0 * (nf - 1.0)) + (nf - 5.0) / (8.0 * d * d) * t_norm_sq
        - (nf - 4.0) / (4.0 * d * d) * mu * mu;
    let center = -mu * params.lambda;
    if rhs < 0.0 {
        return Ok(Vec::new());
    }
    if rhs == 0.0 {
        return Ok(vec![center]);
    }
    let r = (rhs / nf).sqrt();
    Ok(vec![center - r, center + r])
}

/// Residual of the Killing-number quadratic for a proposed κ (used to
/// cross-check roots and externally supplied Killing numbers).
pub fn kappa_quadratic_residual(n: usize, scal: f64, t_norm_sq: f64, mu: f64, kappa: f64) -> Result<f64> {
    let params = ConnectionParams::twistorial(n)?;
    let nf = n as f64;
    let d = nf - 3.0;
    let lhs = nf * (kappa + mu * params.lambda) * (kappa + mu * params.lambda);
    let rhs = scal / (4.0 * (nf - 1.0)) + (nf - 5.0) / (8.0 * d * d) * t_norm_sq
        - (nf - 4.0) / (4.0 * d * d) * mu * mu;
    Ok((lhs - rhs).abs())
}

/// Checks that must hold when a connection-parallel spinor exists in the
/// μ-eigenbundle (with parallel torsion): the scalar-curvature relation
/// Scal = −‖T‖²/2 + 2μ² and, for n ≤ 8, the inequality pair
/// 0 ≤ 2n‖T‖² + (n−9)μ² and Scal ≤ 9(n−1)/(2(9−n)) ‖T‖².
#[derive(Clone, Copy, Debug)]
pub struct ParallelSpinorCriteria {
    pub n: usize,
    /// |Scal − (−‖T‖²/2 + 2μ²)|
    pub scal_relation_residual: f64,
    pub scal_relation_holds: bool,
    /// 0 ≤ 2n‖T‖² + (n−9)μ² (trivially true for n ≥ 9).
    pub mu_inequality_holds: bool,
    pub mu_inequality_slack: f64,
    /// Scal ≤ 9(n−1)/(2(9−n))‖T‖² (trivially true for n ≥ 9).
    pub scal_inequality_holds: bool,
    pub scal_inequality_slack: f64,
    /// Both inequalities hold with equality — the bounds β_tw(μ) and β_univ(μ) coincide.
    pub equality_case: bool,
    /// Reported when n ≥ 9 and the inequality pair carries no information.
    pub inequalities_trivial: bool,
}

pub fn parallel_spinor_criteria(
    n: usize,
    scal: f64,
    t_norm_sq: f64,
    mu: f64,
    tol: f64,
) -> ParallelSpinorCriteria {
    let nf = n as f64;
    let scal_relation_residual = (scal - (-0.5 * t_norm_sq + 2.0 * mu * mu)).abs();
    let trivial = n >= 9;
    let (mu_slack, scal_slack) = if trivial {
        (f64::INFINITY, f64::INFINITY)
    } else {
        (
            2.0 * nf * t_norm_sq + (nf - 9.0) * mu * mu,
            9.0 * (nf - 1.0) / (2.0 * (9.0 - nf)) * t_norm_sq - scal,
        )
    };
    ParallelSpinorCriteria {
        n,
        scal_relation_residual,
        scal_relation_holds: scal_relation_residual <= tol,
        mu_inequality_holds: trivial || mu_slack >= -tol,
        mu_inequality_slack: mu_slack,
        scal_inequality_holds: trivial || scal_slack >= -tol,
        scal_inequality_slack: scal_slack,
        equality_case: !trivial && mu_slack.abs() <= tol && scal_slack.abs() <= tol,
        inequalities_trivial: trivial,
    }
}

/// Relations specific to dimension six on the μ-eigenbundle (μ ≠ 0):
/// the Dirac eigenvalue, the geometric Killing number, its excluded partner
/// root, and the scalar curvature forced by the equality case.
#[derive(Clone, Copy, Debug)]
pub struct SixDimRelations {
    pub dirac_eigenvalue: f64,
    pub kappa: f64,
    /// The second quadratic root; it cannot belong to a Killing spinor.
    pub kappa_excluded: f64,
    pub scal_g: f64,
}

pub fn n6_relations(mu: f64, t_norm_sq: f64) -> Result<SixDimRelations> {
    if mu == 0.0 {
        return Err(Error::InvalidParameter(
            "the six-dimensional relations degenerate at mu = 0 (torsion or spinor vanishes)".into(),
        ));
    }
    let dirac_eigenvalue = -(mu + 2.0 * t_norm_sq / mu) / 3.0;
    let kappa = (t_norm_sq / mu - mu) / 9.0;
    let kappa_excluded = -(t_norm_sq / mu + 2.0 * mu) / 9.0;
    let scal_g = (10.0 / 3.0)
        * ((4.0 / 9.0) * mu * mu
            + (13.0 / 36.0) * t_norm_sq
            + (4.0 / 9.0) * t_norm_sq * t_norm_sq / (mu * mu));
    Ok(SixDimRelations { dirac_eigenvalue, kappa, kappa_excluded, scal_g })
}

/// One factor of a geometry with reducible parallel torsion: its dimension and
/// the torsion eigenvalues on its own spinor space.
#[derive(Clone, Debug)]
pub struct ProductBlock {
    pub n: usize,
    pub mu_spectrum: Vec<f64>,
}

/// A product geometry: blocks sorted ascending by dimension plus the scalar
/// curvature floor of the total space.
#[derive(Clone, Debug)]
pub struct ProductDatum {
    pub blocks: Vec<ProductBlock>,
    pub scal_min: f64,
    pub total_t_norm_sq: f64,
}

impl ProductDatum {
    pub fn new(mut blocks: Vec<ProductBlock>, scal_min: f64, total_t_norm_sq: f64) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidParameter("a product needs at least one block".into()));
        }
        blocks.sort_by_key(|b| b.n);
        Ok(Self { blocks, scal_min, total_t_norm_sq })
    }

    /// Possible eigenvalues μ² of the squared total torsion action.
    ///
    /// Block torsions act by odd Clifford elements on disjoint index sets, so
    /// they anticommute and T² = Σ T_i².  Every eigenvalue of T² is therefore
    /// a sum of one eigenvalue of T_i² per block; enumerate all such sums
    /// (deduplicated, descending).
    pub fn combined_mu_sq(&self) -> Vec<f64> {
        let mut sums = vec![0.0f64];
        for block in &self.blocks {
            if block.mu_spectrum.is_empty() {
                continue;
            }
            let mut next = Vec::with_capacity(sums.len() * block.mu_spectrum.len());
            for &mu in &block.mu_spectrum {
                for &s in &sums {
                    next.push(s + mu * mu);
                }
            }
            sums = next;
        }
        sums.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        sums.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        sums
    }

    pub fn max_combined_mu_sq(&self) -> f64 {
        self.combined_mu_sq().first().copied().unwrap_or(0.0)
    }
}

/// Lower bound for products with reducible parallel torsion: the twistorial
/// bound of the largest block dimension n_k, fed with the total ‖T‖² and the
/// largest combined μ².
pub fn product_bound(p: &ProductDatum) -> Result<f64> {
    let n_k = p.blocks.last().expect("blocks nonempty").n;
    if n_k <= 3 {
        return Err(Error::UnsupportedDimension {
            n: n_k,
            reason: "the product bound needs the largest block dimension ≥ 4".into(),
        });
    }
    beta_tw(n_k, p.scal_min, p.total_t_norm_sq, p.max_combined_mu_sq().sqrt())
}

/// Gap in the eigenvalue comparison for Riemannian products:
/// (λ − Σ λ_i/n_i) − Scal_min/4, nonnegative for admissible spectra.
pub fn riemannian_product_gap(
    lambda_total: f64,
    lambdas: &[f64],
    dims: &[usize],
    scal_min: f64,
) -> Result<f64> {
    if lambdas.len() != dims.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} eigenvalues against {} block dimensions",
            lambdas.len(),
            dims.len()
        )));
    }
    if dims.iter().any(|&d| d == 0) {
        return Err(Error::InvalidParameter("block dimensions must be positive".into()));
    }
    let sum: f64 = lambdas.iter().sum();
    if (sum - lambda_total).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "total eigenvalue {lambda_total} does not decompose into the block eigenvalues (sum {sum})"
        )));
    }
    let weighted: f64 = lambdas.iter().zip(dims).map(|(&l, &d)| l / d as f64).sum();
    Ok((lambda_total - weighted) - scal_min / 4.0)
}

/// Per-eigenbundle and global bound summary for a torsion datum.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub global_beta_univ: f64,
    pub global_beta_tw: f64,
    /// True when the twistorial global bound is at least the universal one.
    pub twistorial_dominates: bool,
}

#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub mu: f64,
    pub multiplicity: usize,
    pub beta_univ: f64,
    pub beta_tw: f64,
    pub kappa_roots: Vec<f64>,
}

pub fn bound_report(datum: &TorsionDatum) -> Result<BoundReport> {
    let n = datum.n;
    let entries: Vec<BoundEntry> = datum
        .eigenbundles
        .iter()
        .map(|b| -> Result<BoundEntry> {
            Ok(BoundEntry {
                mu: b.mu,
                multiplicity: b.multiplicity,
                beta_univ: beta_univ(n, datum.scal_g, datum.t_norm_sq, b.mu),
                beta_tw: beta_tw(n, datum.scal_g, datum.t_norm_sq, b.mu)?,
                kappa_roots: kappa_solutions(n, datum.scal_g, datum.t_norm_sq, b.mu)?,
            })
        })
        .collect::<Result<_>>()?;
    let mu_worst = datum.max_mu_sq().sqrt();
    let global_beta_univ = beta_univ(n, datum.scal_g, datum.t_norm_sq, mu_worst);
    let global_beta_tw = beta_tw(n, datum.scal_g, datum.t_norm_sq, mu_worst)?;
    Ok(BoundReport {
        entries,
        global_beta_univ,
        global_beta_tw,
        twistorial_dominates: global_beta_tw >= global_beta_univ,
    })
}

/// Reference bounds quoted for comparison tables. These reproduce numbers
/// from other published estimates (deformation-method results) and two
/// printed coefficients that disagree with the formulas derived here; they
/// are displayed next to the derived values, never used in verification.
pub mod quoted {
    /// Four-dimensional deformation-method bound, as a function of
    /// c = Scal_min/‖T‖²: (‖T‖²/4)(c − 1/2) for c ≥ 3/2,
    /// (‖T‖²/16)(√(6c) − 1)² for 1/6 ≤ c ≤ 3/2, undefined below 1/6.
    pub fn deformation_n4(scal_min: f64, t_norm_sq: f64) -> Option<f64> {
        if t_norm_sq <= 0.0 {
            return None;
        }
        let c = scal_min / t_norm_sq;
        if c >= 1.5 {
            Some(t_norm_sq / 4.0 * (c - 0.5))
        } else if c >= 1.0 / 6.0 {
            let r = (6.0 * c).sqrt() - 1.0;
            Some(t_norm_sq / 16.0 * r * r)
        } else {
            None
        }
    }

    /// Five-dimensional deformation-method bound for contact geometries:
    /// (1/16)(1 + Scal_min/4)² for −4 < Scal ≤ 4(9+4√5), (5/16)Scal beyond.
    pub fn deformation_n5_contact(scal_min: f64) -> Option<f64> {
        let threshold = 4.0 * (9.0 + 4.0 * 5.0f64.sqrt());
        if scal_min <= -4.0 {
            None
        } else if scal_min <= threshold {
            let r = 1.0 + scal_min / 4.0;
            Some(r * r / 16.0)
        } else {
            Some(5.0 / 16.0 * scal_min)
        }
    }

    /// Printed six-dimensional bound for the almost-Hermitian classes whose
    /// torsion spectrum is {0, ±√2 ‖T‖}: (3/10)Scal − (7/16)‖T‖². Direct
    /// substitution of μ² = 2‖T‖² into the twistorial bound gives coefficient
    /// −7/12 instead; both are surfaced so the discrepancy stays visible.
    pub fn w3_w4_printed(scal_min: f64, t_norm_sq: f64) -> f64 {
        0.3 * scal_min - 7.0 / 16.0 * t_norm_sq
    }

    /// Printed coefficient variant of the product bound for two 5-dimensional
    /// blocks: (5/4)Scal_min − (5/16)max μ². The bound derived from the
    /// product theorem uses 5/16 for both coefficients.
    pub fn product_5_5_printed(scal_min: f64, max_mu_sq: f64) -> f64 {
        1.25 * scal_min - 5.0 / 16.0 * max_mu_sq
    }
}
