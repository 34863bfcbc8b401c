//! The `cartan-sheaf` command line.
//!
//! Exit codes: `0` success, `1` invalid configuration, `2` a verification failed,
//! `3` a query point lies outside the certified margin of the lattice window.

mod render;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use render::Format;
use render::{csv_table, graded_rows, set_label, Rendered};

use crate::error::{Error, Result};
use crate::flag_schubert::{betti, g_space, verify_free_decomposition, FlagType};
use crate::graded::GradedDims;
use crate::lie_numerics::{run_trials, NumericsOptions};
use crate::rational::{self, Rational};
use crate::root_system::{center_class, CartanVector, CenterClass, DegreeWeights, LatticeBox};
use crate::sheaf_complex::{
    build_y, cohomology_dims, delta_jump, jump_epsilon, sections_complex, stalk_complex, Region, SheafComplex,
};
use crate::spectral_pipeline::{
    build_s_mainbfs, certificate, covering_window, crosscheck_stalks, h_graded, jump_spectrum, pair_hom,
    sample_points, NovikovWindows, OrbitParams, Side,
};
use crate::subset::Subset;

/// Environment variable naming a directory that receives a copy of every output.
pub const OUT_DIR_ENV: &str = "CARTAN_SHEAF_OUT";

#[derive(Debug, Parser)]
#[command(name = "cartan-sheaf", version, about = "Lattice sheaf complexes, flag cohomology and su(N) checks")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Also write the output to this directory (overrides CARTAN_SHEAF_OUT).
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partial flag varieties: Betti tables, G-spaces, free decomposition.
    #[command(subcommand)]
    Flags(FlagsCmd),
    /// Stalks, sections and jump functors of Y and S.
    #[command(subcommand)]
    Sheaf(SheafCmd),
    /// Stalk cross-check, Hom modules, certificates and jump spectra.
    #[command(subcommand)]
    Pipeline(PipelineCmd),
    /// Randomized checks of the matrix inequalities on su(N).
    Numerics(NumericsArgs),
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub n: usize,
    /// Degree weights D_1..D_{N-1} as a comma list; defaults to 2k(N-k).
    #[arg(long)]
    pub weights: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum FlagsCmd {
    /// Betti numbers of every partial flag variety F(I).
    Betti(RankArgs),
    /// Graded dimensions of the spaces G(I).
    Gtable(RankArgs),
    /// Checks the free decomposition against the Betti tables.
    Verify(RankArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Object {
    /// The standard complex Y.
    Y,
    /// S, assembled from translated copies of Y.
    S,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    /// Lattice window [-R, R]^{N-1}; defaults to the smallest window covering the query.
    #[arg(long)]
    pub radius: Option<i64>,
    #[arg(long, value_enum, default_value_t = Object::S)]
    pub object: Object,
}

#[derive(Debug, Args)]
pub struct StalkArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub z: i64,
    /// Point as comma-separated x-coordinates, e.g. "-5/2" or "-1/2,-3/4".
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    #[command(flatten)]
    pub window: WindowArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OpenKind {
    UOpen,
    UMinus,
}

#[derive(Debug, Args)]
pub struct SectionsArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub z: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub apex: String,
    #[arg(long, value_enum, default_value_t = OpenKind::UOpen)]
    pub kind: OpenKind,
    #[command(flatten)]
    pub window: WindowArgs,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    /// Center residue; defaults to the class of m when m is a lattice point, else 0.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<i64>,
    /// Subset I as a comma list; "" is the empty set.
    #[arg(long, default_value = "")]
    pub i: String,
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    /// Jump width; defaults to 1/(2N).
    #[arg(long)]
    pub eps: Option<String>,
    #[command(flatten)]
    pub window: WindowArgs,
}

#[derive(Debug, Subcommand)]
pub enum SheafCmd {
    /// Stalk cohomology at a point.
    Stalk(StalkArgs),
    /// Sections over an open set U(a) or U^-(a).
    Sections(SectionsArgs),
    /// Jump functor at one center and subset.
    Delta(DeltaArgs),
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    #[arg(long, default_value = "1")]
    pub lambda: String,
}

#[derive(Debug, Args)]
pub struct NovikovArgs {
    #[arg(long, default_value_t = -40, allow_hyphen_values = true)]
    pub degree_lo: i64,
    #[arg(long, default_value_t = 40, allow_hyphen_values = true)]
    pub degree_hi: i64,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub action_max: String,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Restrict to one center residue; all classes by default.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<i64>,
    /// Sample coordinates lie in [-depth, 0).
    #[arg(long, default_value_t = 2)]
    pub depth: i64,
    #[arg(long, default_value_t = 3)]
    pub max_den: i64,
}

#[derive(Debug, Args)]
pub struct HomArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    /// A single flag type I; without it the full sum over I is reported.
    #[arg(long)]
    pub i: Option<String>,
    #[arg(long, default_value = "0")]
    pub d: String,
    #[arg(long, value_enum, default_value_t = Side::Diagonal)]
    pub side_a: Side,
    #[arg(long, value_enum, default_value_t = Side::Diagonal)]
    pub side_b: Side,
    /// Coefficient characteristic (0 for the rationals).
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u32,
    #[command(flatten)]
    pub windows: NovikovArgs,
}

#[derive(Debug, Args)]
pub struct CertificateArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    #[arg(long, default_value = "0,1/2,1,2,5")]
    pub d_grid: String,
    #[command(flatten)]
    pub windows: NovikovArgs,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    #[arg(long, default_value = "")]
    pub i: String,
    #[arg(long, default_value = "5")]
    pub d_max: String,
    #[arg(long, default_value_t = -40, allow_hyphen_values = true)]
    pub degree_lo: i64,
    #[arg(long, default_value_t = 40, allow_hyphen_values = true)]
    pub degree_hi: i64,
}

#[derive(Debug, Subcommand)]
pub enum PipelineCmd {
    /// Compares the two descriptions of S on sampled stalks.
    Crosscheck(CrosscheckArgs),
    /// Graded Hom modules H_I(d).
    Hom(HomArgs),
    /// Non-vanishing certificate over a grid of d.
    Certificate(CertificateArgs),
    /// Jump spectrum of H_I(d) for d up to d_max.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Args)]
pub struct NumericsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Corrupt the first triangle sample, to exercise the failure path.
    #[arg(long)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Margin(_) => 3,
        Error::Integrity(_) | Error::Internal(_) | Error::NoConvergence { .. } => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command. The output
/// directory comes from `--out-dir`, else from `CARTAN_SHEAF_OUT`.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutput { code: 0, stdout: text, stderr: String::new() }
                }
                _ => CliOutput { code: 1, stdout: String::new(), stderr: text },
            };
        }
    };
    let out_dir = cli.out_dir.clone().or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from));
    match execute(&cli).and_then(|r| Ok((r.format(cli.format)?, r))) {
        Ok((text, r)) => {
            let mut stderr: String = r.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            if let Some(dir) = out_dir {
                let path = dir.join(format!("{}.{}", r.name, cli.format.extension()));
                if let Err(e) = std::fs::create_dir_all(&dir).and_then(|_| std::fs::write(&path, &text)) {
                    stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                    return CliOutput { code: 1, stdout: text, stderr };
                }
            }
            CliOutput { code: r.code, stdout: text, stderr }
        }
        Err(e) => CliOutput { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn main_with_env() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

fn execute(cli: &Cli) -> Result<Rendered> {
    let go = || match &cli.command {
        Command::Flags(c) => flags(c),
        Command::Sheaf(c) => sheaf(c),
        Command::Pipeline(c) => pipeline(c),
        Command::Numerics(a) => numerics(a),
    };
    match cli.jobs {
        Some(0) => Err(Error::InvalidInput("--jobs must be positive".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(go),
        None => go(),
    }
}

fn weights(r: &RankArgs) -> Result<DegreeWeights> {
    crate::root_system::check_rank(r.n)?;
    match &r.weights {
        None => Ok(DegreeWeights::standard(r.n)),
        Some(s) => {
            let w = s
                .split(',')
                .map(|p| p.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad weight {p:?}"))))
                .collect::<Result<Vec<_>>>()?;
            DegreeWeights::custom(r.n, w)
        }
    }
}

fn point(n: usize, s: &str) -> Result<CartanVector> {
    CartanVector::new(n, rational::parse_list(s)?)
}

fn subset(n: usize, s: &str) -> Result<Subset> {
    Subset::parse(s, n - 1)
}

fn flags(c: &FlagsCmd) -> Result<Rendered> {
    let (name, r) = match c {
        FlagsCmd::Betti(r) => ("flags-betti", r),
        FlagsCmd::Gtable(r) => ("flags-gtable", r),
        FlagsCmd::Verify(r) => ("flags-verify", r),
    };
    weights(r)?;
    let types = FlagType::all(r.n)?;
    if let FlagsCmd::Verify(_) = c {
        let reports: Vec<_> = types.iter().map(|&t| verify_free_decomposition(t)).collect();
        let passed = reports.iter().all(|r| r.passed);
        let pretty = reports
            .iter()
            .map(|x| {
                let status = if x.passed { "ok".to_string() } else { format!("FAILED: {}", x.first_mismatch.clone().unwrap_or_default()) };
                format!("I={:<12} cells={:<6} images={:<6} {status}\n", set_label(&x.flag.to_string()), x.cell_count, x.image_count)
            })
            .collect();
        let rows = reports.iter().map(|x| {
            vec![x.flag.to_string(), x.cell_count.to_string(), x.image_count.to_string(), x.passed.to_string()]
        });
        let csv = csv_table(&["flag", "cells", "images", "passed"], rows);
        let body = json!({ "n": r.n, "reports": reports, "passed": passed });
        return Ok(Rendered::new(name, &body, pretty)?.with_csv(csv).failing_unless(passed));
    }
    let table: BTreeMap<String, GradedDims> = types
        .iter()
        .map(|&t| (t.indices().to_string(), if name == "flags-betti" { betti(t) } else { g_space(t) }))
        .collect();
    let pretty = table.iter().map(|(k, g)| format!("I={:<12} {g}\n", set_label(k))).collect();
    let csv = csv_table(&["flag", "degree", "dim"], graded_rows(table.iter().map(|(k, g)| (k.clone(), g))));
    let key = if name == "flags-betti" { "betti" } else { "g_space" };
    Rendered::new(name, &json!({ "n": r.n, key: table }), pretty).map(|x| x.with_csv(csv))
}

fn sheaf_object(n: usize, w: &WindowArgs, queries: &[CartanVector], weights: &DegreeWeights, z: Option<CenterClass>) -> Result<(SheafComplex, LatticeBox)> {
    let window = match w.radius {
        Some(r) => LatticeBox::radius(n, r)?,
        None => covering_window(n, queries)?,
    };
    let s = match w.object {
        Object::Y => build_y(n, &window, weights)?,
        Object::S => build_s_mainbfs(n, z, &window, weights)?,
    };
    Ok((s, window))
}

fn object_name(o: Object) -> &'static str {
    match o {
        Object::Y => "Y",
        Object::S => "S",
    }
}

fn graded_rendered(name: &'static str, body: serde_json::Value, dims: &GradedDims, label: String) -> Result<Rendered> {
    let csv = csv_table(&["degree", "dim"], dims.iter().map(|(d, m)| vec![d.to_string(), m.to_string()]));
    Ok(Rendered::new(name, &body, format!("{label}: {dims}\n"))?.with_csv(csv))
}

fn sheaf(c: &SheafCmd) -> Result<Rendered> {
    match c {
        SheafCmd::Stalk(a) => {
            let n = a.rank.n;
            let w = weights(&a.rank)?;
            let p = point(n, &a.point)?;
            let z = CenterClass::new(n, a.z);
            let (s, window) = sheaf_object(n, &a.window, std::slice::from_ref(&p), &w, Some(z))?;
            let dims = cohomology_dims(&stalk_complex(&s, z, &p)?)?;
            let body = json!({
                "n": n, "object": object_name(a.window.object), "center": z, "point": p,
                "window": window, "margin_certified": true, "dims": dims,
            });
            graded_rendered("sheaf-stalk", body, &dims, format!("stalk of {} at {p}, center {z}", object_name(a.window.object)))
        }
        SheafCmd::Sections(a) => {
            let n = a.rank.n;
            let w = weights(&a.rank)?;
            let apex = point(n, &a.apex)?;
            let z = CenterClass::new(n, a.z);
            let region = match a.kind {
                OpenKind::UOpen => Region::u_open(apex.clone()),
                OpenKind::UMinus => Region::u_minus(apex.clone()),
            };
            let (s, window) = sheaf_object(n, &a.window, std::slice::from_ref(&apex), &w, Some(z))?;
            let dims = cohomology_dims(&sections_complex(&s, z, &region)?)?;
            let body = json!({
                "n": n, "object": object_name(a.window.object), "center": z, "region": region,
                "window": window, "margin_certified": true, "dims": dims,
            });
            graded_rendered("sheaf-sections", body, &dims, format!("sections of {} over {:?}, center {z}", object_name(a.window.object), a.kind))
        }
        SheafCmd::Delta(a) => {
            let n = a.rank.n;
            let w = weights(&a.rank)?;
            let m = point(n, &a.m)?;
            let i = subset(n, &a.i)?;
            let eps = a.eps.as_deref().map(rational::parse).transpose()?.unwrap_or_else(|| jump_epsilon(n));
            let lattice = m.is_integral();
            let z = match a.z {
                Some(r) => CenterClass::new(n, r),
                None if lattice => center_class(&m)?,
                None => CenterClass::identity(n),
            };
            let corners = i
                .subsets()
                .map(|l| Ok(&m + &CartanVector::f_sum(n, l)?.scaled(eps)))
                .collect::<Result<Vec<_>>>()?;
            let (s, window) = sheaf_object(n, &a.window, &corners, &w, Some(z))?;
            let dims = delta_jump(&s, z, i, &m, eps)?;
            // Flag cohomology is the expected value at the origin and at lattice points of
            // C_- with I = I_m, for S in the center class of m.
            let expected = (a.window.object == Object::S
                && lattice
                && m.in_c_minus()
                && z == center_class(&m)?
                && (m.coords().iter().all(|c| *c == Rational::from_integer(0)) || i == m.i_set()))
            .then(|| Ok::<_, Error>(betti(FlagType::new(n, i)?).shifted(-w.degree(&m)?)))
            .transpose()?;
            let consistent = expected.as_ref().is_none_or(|e| *e == dims);
            let body = json!({
                "n": n, "object": object_name(a.window.object), "center": z, "flag": i, "m": m,
                "eps": rational::format(&eps), "window": window, "margin_certified": true, "dims": dims,
                "flag_cohomology": expected, "consistent": consistent,
            });
            Ok(graded_rendered("sheaf-delta", body, &dims, format!("jump of {} at {m} along {}", object_name(a.window.object), set_label(&i.to_string())))?
                .failing_unless(consistent))
        }
    }
}

fn orbit(a: &OrbitArgs) -> Result<(OrbitParams, DegreeWeights)> {
    let w = weights(&a.rank)?;
    Ok((OrbitParams::new(a.rank.n, rational::parse(&a.lambda)?)?, w))
}

fn novikov_windows(a: &NovikovArgs) -> Result<NovikovWindows> {
    Ok(NovikovWindows { degree_lo: a.degree_lo, degree_hi: a.degree_hi, action_max: rational::parse(&a.action_max)? })
}

fn pipeline(c: &PipelineCmd) -> Result<Rendered> {
    match c {
        PipelineCmd::Crosscheck(a) => {
            let (params, w) = orbit(&a.orbit)?;
            let n = params.n;
            if a.depth < 1 || a.max_den < 1 {
                return Err(Error::InvalidInput("--depth and --max-den must be positive".into()));
            }
            let samples = sample_points(n, a.samples, a.seed, a.depth, a.max_den);
            let window = covering_window(n, &samples)?;
            let centers: Vec<CenterClass> = match a.z {
                Some(r) => vec![CenterClass::new(n, r)],
                None => CenterClass::all(n).collect(),
            };
            let reports = centers
                .iter()
                .map(|&z| crosscheck_stalks(&params, z, &samples, &window, &w))
                .collect::<Result<Vec<_>>>()?;
            let passed = reports.iter().all(|r| r.passed);
            let pretty = reports
                .iter()
                .map(|r| format!("center {}: compared {}, excluded {}, mismatches {}\n", r.center, r.compared, r.excluded.len(), r.mismatches.len()))
                .collect();
            let rows = reports.iter().map(|r| {
                vec![r.center.residue().to_string(), r.compared.to_string(), r.excluded.len().to_string(), r.mismatches.len().to_string()]
            });
            let csv = csv_table(&["center", "compared", "excluded", "mismatches"], rows);
            let body = json!({ "params": params, "seed": a.seed, "samples": a.samples, "reports": reports, "passed": passed });
            let mut r = Rendered::new("pipeline-crosscheck", &body, pretty)?.with_csv(csv).failing_unless(passed);
            let excluded: usize = reports.iter().map(|r| r.excluded.len()).sum();
            if excluded > 0 {
                r.warnings.push(format!("{excluded} samples fell outside the certified margin"));
            }
            if a.samples == 0 {
                r.warnings.push("no samples requested; the pass is vacuous".into());
            }
            Ok(r)
        }
        PipelineCmd::Hom(a) => {
            let (params, w) = orbit(&a.orbit)?;
            let d = rational::parse(&a.d)?;
            let windows = novikov_windows(&a.windows)?;
            match &a.i {
                Some(i) => {
                    let i = subset(params.n, i)?;
                    let rec = h_graded(&params, i, d, &windows, &w)?;
                    let body = json!({ "params": params, "flag": i, "d": rational::format(&d), "windows": windows, "dims": rec.graded, "terms": rec.elements });
                    graded_rendered("pipeline-hom", body, &rec.graded, format!("H_{}({d})", set_label(&i.to_string())))
                }
                None => {
                    let dims = pair_hom(&params, a.side_a, a.side_b, d, &windows, a.characteristic, &w)?;
                    let body = json!({
                        "params": params, "side_a": a.side_a, "side_b": a.side_b, "d": rational::format(&d),
                        "characteristic": a.characteristic, "windows": windows, "dims": dims,
                    });
                    graded_rendered("pipeline-hom", body, &dims, format!("Hom({:?}, {:?}) at d = {d}", a.side_a, a.side_b))
                }
            }
        }
        PipelineCmd::Certificate(a) => {
            let (params, w) = orbit(&a.orbit)?;
            let grid = rational::parse_list(&a.d_grid)?;
            let report = certificate(&params, &grid, &novikov_windows(&a.windows)?, &w)?;
            let mut pretty: String = report
                .records
                .iter()
                .map(|r| {
                    let witness = r.tau.witness.as_ref().map_or("none".to_string(), |t| t.lattice.to_string());
                    format!("I={:<10} d={:<5} H={}  witness={witness}\n", set_label(&r.h.flag.to_string()), r.h.d.to_string(), r.h.graded)
                })
                .collect();
            pretty.push_str(&format!("verdict: {}\n", report.verdict.status));
            let ok = report.verdict.certified;
            let mut r = Rendered::new("pipeline-certificate", &report, pretty)?.with_csv(report.to_csv()).failing_unless(ok);
            if grid.is_empty() {
                r.warnings.push("empty d grid".into());
            }
            Ok(r)
        }
        PipelineCmd::Spectrum(a) => {
            let (params, w) = orbit(&a.orbit)?;
            let i = subset(params.n, &a.i)?;
            let d_max = rational::parse(&a.d_max)?;
            let jumps = jump_spectrum(&params, i, (a.degree_lo, a.degree_hi), d_max, &w)?;
            let labels: Vec<String> = jumps.iter().map(rational::format).collect();
            let csv = csv_table(&["d"], labels.iter().map(|l| vec![l.clone()]));
            let pretty = format!("jumps of H_{} below {d_max}: {}\n", set_label(&i.to_string()), labels.join(" "));
            let body = json!({ "params": params, "flag": i, "d_max": rational::format(&d_max), "jumps": labels });
            Rendered::new("pipeline-spectrum", &body, pretty).map(|r| r.with_csv(csv))
        }
    }
}

fn numerics(a: &NumericsArgs) -> Result<Rendered> {
    let report = run_trials(&NumericsOptions { n: a.n, trials: a.trials, seed: a.seed, inject_fault: a.inject_fault })?;
    let pretty = report
        .lemmas
        .iter()
        .map(|(k, s)| format!("{k:<18} passed {:>5}/{:<5} rejected {:<4} max residual {:.3e}\n", s.passed, s.trials, s.rejected, s.max_residual))
        .collect();
    let rows = report.lemmas.iter().map(|(k, s)| {
        vec![k.clone(), s.trials.to_string(), s.passed.to_string(), s.failed.to_string(), s.rejected.to_string(), format!("{:e}", s.max_residual)]
    });
    let csv = csv_table(&["lemma", "trials", "passed", "failed", "rejected", "max_residual"], rows);
    let mut r = Rendered::new("numerics", &report, pretty)?.with_csv(csv).failing_unless(report.passed);
    r.warnings = report.warnings.clone();
    Ok(r)
}
