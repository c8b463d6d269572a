//! Command-line interface: geometry configs in, verification verdicts and
//! CSV sweep data out.
//!
//! Subcommands: `identities` (randomized Clifford/torsion identity checks),
//! `bounds` (eigenvalue bounds for a JSON geometry), `stiefel` (CSV sweep of
//! the deformed Stiefel models), `verify` (Killing/twistor candidate
//! verification), `sasaki-check` (Einstein–Sasaki non-existence table) and
//! `product` (block checks for product geometries).
//!
//! Exit codes: 0 when every requested check passes, 1 when a verification
//! fails, 2 on usage or configuration errors.  All numeric output is
//! formatted deterministically, so identical invocations produce identical
//! bytes.

use crate::config::{format_g12, format_sig, GeometryConfig};
use crate::error::{Error, Result};
use crate::estimates::{self, ProductBlock, ProductDatum};
use crate::forms::ExteriorForm;
use crate::homogeneous::ReductiveModel;
use crate::linalg::{self, CMat};
use crate::spin::{build_spin_rep, identity_suite, split_eigenbundles, TorsionDatum};
use crate::tol;
use crate::verify;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "spintor",
    version,
    about = "Eigenvalue estimates and spinor verification for metric connections with skew torsion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// The two deformed Stiefel models built into the tool.
#[derive(Copy, Clone, ValueEnum)]
enum StiefelKind {
    /// SO(4)/SO(2) with fibre deformation t.
    #[value(name = "42")]
    V42,
    /// SO(5)/SO(3) with fibre deformation t.
    #[value(name = "52")]
    V52,
}

impl StiefelKind {
    fn build(self, t: f64) -> Result<ReductiveModel> {
        match self {
            StiefelKind::V42 => ReductiveModel::stiefel_42(t),
            StiefelKind::V52 => ReductiveModel::stiefel_52(t),
        }
    }

    /// Known smallest Dirac-square eigenvalue along the deformation.
    fn known_eigenvalue(self, t: f64) -> f64 {
        match self {
            StiefelKind::V42 => 1.0 / (2.0 * t),
            StiefelKind::V52 => 9.0 / (4.0 * t),
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the eight Clifford/torsion identities on random forms.
    Identities {
        /// Dimension of the underlying inner-product space (4..=9).
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Number of random torsion forms.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// RNG seed; a fixed seed reproduces the report byte for byte.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Eigenvalue bounds and Killing numbers for a geometry config.
    Bounds {
        /// Path to a JSON geometry config.
        config: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Sweep the deformation parameter of a Stiefel model into a CSV file.
    Stiefel {
        /// Which model: 42 for SO(4)/SO(2), 52 for SO(5)/SO(3).
        which: StiefelKind,
        /// Left end of the deformation range (must be positive).
        #[arg(long, default_value_t = 0.05)]
        t_min: f64,
        /// Right end of the deformation range.
        #[arg(long, default_value_t = 1.5)]
        t_max: f64,
        /// Number of rows in the uniform grid.
        #[arg(long, default_value_t = 30)]
        steps: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify Killing-spinor candidates on a Stiefel model.
    Verify {
        /// Which model: 42 for SO(4)/SO(2), 52 for SO(5)/SO(3).
        which: StiefelKind,
        /// Deformation parameter.
        #[arg(long)]
        t: f64,
        /// Explicit Killing numbers to test (comma-separated).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        kappa: Vec<f64>,
        /// Derive candidate Killing numbers from the quadratic for every
        /// torsion eigenvalue realized by an invariant spinor.
        #[arg(long, conflicts_with = "kappa")]
        auto: bool,
        /// Instead of the Killing equation, check that parallel invariant
        /// spinors become κ = 0 Killing spinors after the torsion is
        /// rescaled by (n−3)/(n−1).
        #[arg(long)]
        rescale_torsion: bool,
    },
    /// Integrability determinants for the five-dimensional Einstein–Sasaki
    /// local model.
    SasakiCheck,
    /// Block checks and the eigenvalue bound for a product geometry.
    Product {
        /// Path to a JSON geometry config with a blocks field.
        config: PathBuf,
    },
}

/// Parses the command line, runs the selected subcommand, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Identities { n, trials, seed } => cmd_identities(n, trials, seed),
        Command::Bounds { config, format } => cmd_bounds(&config, format),
        Command::Stiefel {
            which,
            t_min,
            t_max,
            steps,
            out,
        } => cmd_stiefel(which, t_min, t_max, steps, &out),
        Command::Verify {
            which,
            t,
            kappa,
            auto,
            rescale_torsion,
        } => cmd_verify(which, t, &kappa, auto, rescale_torsion),
        Command::SasakiCheck => cmd_sasaki_check(),
        Command::Product { config } => cmd_product(&config),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn join_g12(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format_g12(*v))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_identities(n: usize, trials: usize, seed: u64) -> Result<bool> {
    if !(4..=9).contains(&n) {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the identity sweep covers dimensions 4..=9".into(),
        });
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let rep = build_spin_rep(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<&'static str> = Vec::new();
    let mut maxes: Vec<f64> = Vec::new();
    for _ in 0..trials {
        let torsion = ExteriorForm::random(n, 3, &mut rng)?;
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let report = identity_suite(&rep, &torsion, &x)?;
        if labels.is_empty() {
            labels = report.items.iter().map(|item| item.label).collect();
            maxes = vec![0.0; labels.len()];
        }
        for (slot, item) in maxes.iter_mut().zip(&report.items) {
            *slot = slot.max(item.residual);
        }
    }
    println!("identity residuals over {trials} random torsions (n = {n}, seed = {seed}):");
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(0);
    let mut worst: f64 = 0.0;
    for (label, value) in labels.iter().zip(&maxes) {
        println!("  {label:<width$}  max residual {}", format_sig(*value, 3));
        worst = worst.max(*value);
    }
    let pass = worst <= tol::ALGEBRAIC;
    println!(
        "overall max residual {} at tolerance {}: {}",
        format_sig(worst, 3),
        format_sig(tol::ALGEBRAIC, 3),
        verdict(pass)
    );
    Ok(pass)
}

fn cmd_bounds(path: &Path, format: OutputFormat) -> Result<bool> {
    let config = GeometryConfig::from_path(path)?;
    let form = config.to_form()?;
    let datum = TorsionDatum::new(form, config.scal_g)?;
    let report = estimates::bound_report(&datum)?;

    match format {
        OutputFormat::Json => {
            let entries: Vec<serde_json::Value> = report
                .entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "mu": e.mu,
                        "multiplicity": e.multiplicity,
                        "beta_univ": e.beta_univ,
                        "beta_tw": e.beta_tw,
                        "kappa_roots": e.kappa_roots,
                    })
                })
                .collect();
            let quoted = quoted_reference_json(config.n, config.scal_g, datum.t_norm_sq)?;
            let value = serde_json::json!({
                "n": config.n,
                "scal_g": config.scal_g,
                "t_norm_sq": datum.t_norm_sq,
                "entries": entries,
                "global_beta_univ": report.global_beta_univ,
                "global_beta_tw": report.global_beta_tw,
                "twistorial_dominates": report.twistorial_dominates,
                "reference_bounds": quoted,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
        OutputFormat::Text => {
            println!(
                "geometry: n = {}, scal = {}, |T|^2 = {}",
                config.n,
                format_g12(config.scal_g),
                format_g12(datum.t_norm_sq)
            );
            println!(
                "{:>14} {:>6} {:>16} {:>16}   kappa roots",
                "mu", "mult", "beta_univ", "beta_tw"
            );
            for e in &report.entries {
                println!(
                    "{:>14} {:>6} {:>16} {:>16}   [{}]",
                    format_g12(e.mu),
                    e.multiplicity,
                    format_g12(e.beta_univ),
                    format_g12(e.beta_tw),
                    join_g12(&e.kappa_roots)
                );
            }
            println!(
                "global bounds: universal {} | twistorial {} ({} dominates)",
                format_g12(report.global_beta_univ),
                format_g12(report.global_beta_tw),
                if report.twistorial_dominates {
                    "twistorial"
                } else {
                    "universal"
                }
            );
            print_quoted_reference_text(config.n, config.scal_g, datum.t_norm_sq)?;
        }
    }
    Ok(true)
}

/// Literature-quoted comparison bounds applicable to this dimension.
fn quoted_reference_json(n: usize, scal: f64, t2: f64) -> Result<serde_json::Value> {
    let mut map = serde_json::Map::new();
    match n {
        4 => {
            if let Some(b) = estimates::quoted::deformation_n4(scal, t2) {
                map.insert("deformation_n4".into(), serde_json::json!(b));
            }
        }
        5 => {
            if let Some(b) = estimates::quoted::deformation_n5_contact(scal) {
                map.insert("contact_deformation_n5".into(), serde_json::json!(b));
            }
        }
        6 => {
            map.insert(
                "w3_w4_quoted".into(),
                serde_json::json!(estimates::quoted::w3_w4_printed(scal, t2)),
            );
            let mu = (2.0 * t2).sqrt();
            map.insert(
                "w3_w4_derived".into(),
                serde_json::json!(estimates::beta_tw(6, scal, t2, mu)?),
            );
        }
        _ => {}
    }
    Ok(serde_json::Value::Object(map))
}

fn print_quoted_reference_text(n: usize, scal: f64, t2: f64) -> Result<()> {
    match n {
        4 => {
            if let Some(b) = estimates::quoted::deformation_n4(scal, t2) {
                println!(
                    "reference: literature-quoted 4-dimensional deformation bound {}",
                    format_g12(b)
                );
            }
        }
        5 => {
            if let Some(b) = estimates::quoted::deformation_n5_contact(scal) {
                println!(
                    "reference: literature-quoted contact deformation bound {}",
                    format_g12(b)
                );
            }
        }
        6 => {
            let mu = (2.0 * t2).sqrt();
            let derived = estimates::beta_tw(6, scal, t2, mu)?;
            println!(
                "reference: W3 ⊕ W4 bound at mu = sqrt(2)|T|: literature-quoted {} vs derived {}",
                format_g12(estimates::quoted::w3_w4_printed(scal, t2)),
                format_g12(derived)
            );
        }
        _ => {}
    }
    Ok(())
}

fn cmd_stiefel(
    which: StiefelKind,
    t_min: f64,
    t_max: f64,
    steps: usize,
    out: &Path,
) -> Result<bool> {
    if !(t_min > 0.0) || !t_min.is_finite() || !t_max.is_finite() || t_max < t_min {
        return Err(Error::Config(format!(
            "need 0 < t_min ≤ t_max, got t_min = {t_min}, t_max = {t_max}"
        )));
    }
    if steps == 0 {
        return Err(Error::Config("steps must be at least 1".into()));
    }
    let probe = which.build(t_min)?;
    let n = probe.n();
    let rep = build_spin_rep(n)?;

    let mut csv = String::from("t,lambda_known,beta_univ,beta_tw,beta_univ_mu0,beta_tw_mu0\n");
    for i in 0..steps {
        let t = if steps == 1 {
            t_min
        } else {
            t_min + (t_max - t_min) * i as f64 / (steps - 1) as f64
        };
        let model = which.build(t)?;
        let scal = model.scal_g()?;
        let t2 = model.torsion().norm_sq();
        let space = model.invariant_spinors(&rep)?;
        if space.dim() == 0 {
            return Err(Error::EmptyInvariantSpace(format!(
                "{} admits no invariant spinors",
                model.name()
            )));
        }
        let mu = space
            .mus()
            .iter()
            .fold(0.0_f64, |acc, &m| if m.abs() > acc.abs() { m } else { acc });
        let columns = [
            t,
            which.known_eigenvalue(t),
            estimates::beta_univ(n, scal, t2, mu),
            estimates::beta_tw(n, scal, t2, mu)?,
            estimates::beta_univ(n, scal, t2, 0.0),
            estimates::beta_tw(n, scal, t2, 0.0)?,
        ];
        let line: Vec<String> = columns.iter().map(|v| format_g12(*v)).collect();
        csv.push_str(&line.join(","));
        csv.push('\n');
    }
    std::fs::write(out, csv)?;
    println!("wrote {steps} rows to {}", out.display());
    Ok(true)
}

fn cmd_verify(
    which: StiefelKind,
    t: f64,
    kappas: &[f64],
    auto: bool,
    rescale_torsion: bool,
) -> Result<bool> {
    let model = which.build(t)?;
    let n = model.n();
    let rep = build_spin_rep(n)?;
    let scal = model.scal_g()?;
    let t2 = model.torsion().norm_sq();
    let space = model.invariant_spinors(&rep)?;
    println!(
        "model {} at t = {}: n = {n}, scal = {}, |T|^2 = {}",
        model.name(),
        format_g12(t),
        format_g12(scal),
        format_g12(t2)
    );
    println!(
        "invariant spinors: {} with torsion eigenvalues [{}]",
        space.dim(),
        join_g12(space.mus())
    );

    if rescale_torsion {
        if kappas.iter().any(|k| *k != 0.0) {
            return Err(Error::Config(
                "--rescale-torsion verifies κ = 0; drop nonzero --kappa values".into(),
            ));
        }
        let factor = (n as f64 - 3.0) / (n as f64 - 1.0);
        println!("rescaling torsion by (n−3)/(n−1) = {}", format_g12(factor));
        let mut all = true;
        for (idx, psi) in space.basis().iter().enumerate() {
            match verify::parallel_killing_rescale_check(&model, &rep, psi) {
                Ok(report) => {
                    println!(
                        "  spinor {idx}: κ = 0 residual {}  [{}]",
                        format_sig(report.max(), 3),
                        verdict(report.pass())
                    );
                    all &= report.pass();
                }
                Err(Error::Precondition(msg)) => {
                    println!("  spinor {idx}: FAIL ({msg})");
                    all = false;
                }
                Err(other) => return Err(other),
            }
        }
        return Ok(all);
    }

    let candidates: Vec<f64> = if auto {
        let mut mus: Vec<f64> = Vec::new();
        for &mu in space.mus() {
            if !mus.iter().any(|m| (m - mu).abs() < 1e-9) {
                mus.push(mu);
            }
        }
        let mut roots: Vec<f64> = Vec::new();
        for mu in mus {
            for root in estimates::kappa_solutions(n, scal, t2, mu)? {
                if !roots.iter().any(|r| (r - root).abs() < 1e-12) {
                    roots.push(root);
                }
            }
        }
        if roots.is_empty() {
            println!("the Killing-number quadratic has no real roots here");
            return Ok(false);
        }
        roots
    } else if !kappas.is_empty() {
        kappas.to_vec()
    } else {
        return Err(Error::Config(
            "pass --kappa values or --auto to select candidates".into(),
        ));
    };

    let ric_c = model.curvature(0.25)?.ricci().clone();
    let mut all = true;
    let mut any = false;
    for kappa in candidates {
        let cand = verify::find_killing_candidate(&model, &rep, model.torsion(), kappa)?;
        println!(
            "candidate κ = {} (torsion eigenvalue {}):",
            format_g12(kappa),
            cand.mu.map_or("mixed".into(), format_g12)
        );
        let killing = verify::killing_residual(&model, &rep, model.torsion(), &cand)?;
        println!(
            "  killing residual        {}  [{}]",
            format_sig(killing.max(), 3),
            verdict(killing.pass())
        );
        let twistor = verify::twistor_residual(&model, &rep, model.torsion(), &cand.psi, cand.s)?;
        println!(
            "  twistor residual        {}  [{}]",
            format_sig(twistor.max(), 3),
            verdict(twistor.pass())
        );
        let d2 = verify::dirac_squared_residual(&model, &rep, model.torsion(), &cand.psi)?;
        let d2_pass = d2 <= tol::QUADRATIC;
        println!(
            "  dirac-square residual   {}  [{}]",
            format_sig(d2, 3),
            verdict(d2_pass)
        );
        let unit = cand.psi.map(|z| z / cand.psi.norm());
        let mut integ: f64 = 0.0;
        for x in 0..n {
            let m = verify::integrability_endomorphism(
                n,
                model.torsion(),
                &ric_c,
                kappa,
                x,
                &rep,
            )?;
            integ = integ.max((&m * &unit).norm());
        }
        let integ_pass = integ <= tol::QUADRATIC;
        println!(
            "  integrability residual  {}  [{}]",
            format_sig(integ, 3),
            verdict(integ_pass)
        );
        let ok = killing.pass() && twistor.pass() && d2_pass && integ_pass;
        println!("  candidate verdict: {}", verdict(ok));
        all &= ok;
        any |= ok;
    }
    Ok(if auto { any } else { all })
}

fn cmd_sasaki_check() -> Result<bool> {
    let rep = build_spin_rep(5)?;
    let report = verify::sasaki_nonexistence_report(&rep)?;
    println!("Einstein–Sasaki local model (n = 5, scal = 20): integrability determinants");
    println!("{:>10} {:>16} {:>14}  verdict", "mu", "kappa", "|det M(e1)|");
    for row in report.rows() {
        println!(
            "{:>10} {:>16} {:>14}  {}",
            format_g12(row.mu),
            format_g12(row.kappa),
            format_sig(row.det_abs, 6),
            if row.det_abs > report.tol() {
                "nonzero"
            } else {
                "ZERO"
            }
        );
    }
    let ok = report.all_nonzero();
    println!(
        "no candidate Killing number survives the integrability condition: {}",
        verdict(ok)
    );
    Ok(ok)
}

fn cmd_product(path: &Path) -> Result<bool> {
    let config = GeometryConfig::from_path(path)?;
    let blocks = config.block_forms()?;
    for (dim, _) in &blocks {
        if *dim <= 3 {
            return Err(Error::UnsupportedDimension {
                n: *dim,
                reason: "product blocks need dimension ≥ 4".into(),
            });
        }
    }
    let ranges = config.blocks.clone().expect("validated by block_forms");
    let n = config.n;
    let rep = build_spin_rep(n)?;
    let total_form = config.to_form()?;

    let embedded: Vec<CMat> = blocks
        .iter()
        .zip(&ranges)
        .map(|((_, form), &(a, _))| rep.act(&form.embed(n, a - 1)?))
        .collect::<Result<_>>()?;

    let mut anti: f64 = 0.0;
    for i in 0..embedded.len() {
        for j in (i + 1)..embedded.len() {
            let sum = &embedded[i] * &embedded[j] + &embedded[j] * &embedded[i];
            anti = anti.max(linalg::spec_norm(&sum));
        }
    }
    let act_total = rep.act(&total_form)?;
    let mut sum_sq = CMat::zeros(rep.dim(), rep.dim());
    for a in &embedded {
        sum_sq += a * a;
    }
    let square_residual = linalg::spec_norm(&(&act_total * &act_total - sum_sq));

    let block_data: Vec<ProductBlock> = blocks
        .iter()
        .map(|(dim, form)| {
            let datum = TorsionDatum::new(form.clone(), 0.0)?;
            Ok(ProductBlock {
                n: *dim,
                mu_spectrum: datum.eigenbundles.iter().map(|b| b.mu).collect(),
            })
        })
        .collect::<Result<_>>()?;
    let datum = ProductDatum::new(block_data, config.scal_g, total_form.norm_sq())?;

    let combined = datum.combined_mu_sq();
    let mut brute: Vec<f64> = split_eigenbundles(&rep, &total_form, tol::CLUSTER)?
        .iter()
        .map(|b| b.mu * b.mu)
        .collect();
    brute.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    brute.dedup_by(|a, b| (*a - *b).abs() <= tol::CLUSTER);
    let spectrum_distance = set_distance(&combined, &brute);

    println!(
        "product geometry: n = {} in blocks [{}], scal = {}, |T|^2 = {}",
        n,
        ranges
            .iter()
            .map(|(a, b)| format!("{a}..{b}"))
            .collect::<Vec<_>>()
            .join(", "),
        format_g12(config.scal_g),
        format_g12(datum.total_t_norm_sq)
    );
    let anti_pass = anti <= tol::ALGEBRAIC;
    println!(
        "block torsion anticommutation residual {}  [{}]",
        format_sig(anti, 3),
        verdict(anti_pass)
    );
    let square_pass = square_residual <= tol::ALGEBRAIC;
    println!(
        "T² = Σ T_i² residual {}  [{}]",
        format_sig(square_residual, 3),
        verdict(square_pass)
    );
    let spectrum_pass = spectrum_distance <= tol::CLUSTER;
    println!(
        "combined μ² values [{}] vs direct spectrum of T² [{}]: distance {}  [{}]",
        join_g12(&combined),
        join_g12(&brute),
        format_sig(spectrum_distance, 3),
        verdict(spectrum_pass)
    );

    let bound = estimates::product_bound(&datum)?;
    let largest = datum.blocks.last().expect("validated nonempty").n;
    let mu_max = datum.max_combined_mu_sq().sqrt();
    let plain = estimates::beta_tw(n, config.scal_g, datum.total_t_norm_sq, mu_max)?;
    println!(
        "product bound (largest block n_k = {largest}): {}  | plain twistorial bound in dimension {n}: {}",
        format_g12(bound),
        format_g12(plain)
    );
    if largest == 5 {
        println!(
            "  note: the scal coefficient above is 5/16; a literature-quoted variant uses 5/4 and gives {}",
            format_g12(estimates::quoted::product_5_5_printed(
                config.scal_g,
                datum.max_combined_mu_sq()
            ))
        );
    }
    Ok(anti_pass && square_pass && spectrum_pass)
}

/// Largest gap between the two eigenvalue lists viewed as sets: every value
/// of one list must be close to some value of the other.
fn set_distance(a: &[f64], b: &[f64]) -> f64 {
    let one_sided = |xs: &[f64], ys: &[f64]| -> f64 {
        xs.iter()
            .map(|x| {
                ys.iter()
                    .map(|y| (x - y).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one_sided(a, b).max(one_sided(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_distance_detects_mismatch() {
        assert!(set_distance(&[1.0, 2.0], &[2.0, 1.0]) < 1e-15);
        assert!((set_distance(&[1.0, 2.0], &[1.0, 2.5]) - 0.5).abs() < 1e-15);
        assert_eq!(set_distance(&[], &[]), 0.0);
    }

    #[test]
    fn stiefel_kind_known_eigenvalues() {
        assert!((StiefelKind::V42.known_eigenvalue(0.4) - 1.25).abs() < 1e-15);
        assert!((StiefelKind::V52.known_eigenvalue(42.0 / 49.0) - 21.0 / 8.0).abs() < 1e-15);
    }
}
