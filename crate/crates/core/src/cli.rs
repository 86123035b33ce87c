//! Command-line dispatch.
//!
//! Results go to standard output as a single JSON document (or a short text
//! rendering with `--format text`); diagnostics go to standard error as
//! `{"kind": ..., "message": ...}`. Identical invocations produce identical
//! bytes: all randomness flows from `--seed` through one named generator, and
//! every emitted map is sorted.
//!
//! Exit codes: 0 — the requested value was computed (including negative
//! verdicts); 1 — a property suite found a counterexample; 2 — unusable
//! input; 3 — an internal cross-check failed.

use crate::error::{Error, Result};
use crate::json::{
    CertificateDto, CriterionDto, MorphismDto, QuiverDto, RepDto, SharpDto, StableHomDto,
    TorsionDto, VerdictDto, WitnessOutcomeDto,
};
use crate::linalg::Fp;
use crate::normality::{bimorphism_witness, is_normal_epi, normal_mono_certificate};
use crate::quiver::Quiver;
use crate::rep::Morphism;
use crate::stable::{
    is_stable_epi, is_stable_iso, is_stable_mono, is_stable_split_epi, is_stable_split_mono,
    is_stable_zero, StableHom,
};
use crate::torsion::{sharp, torsion_submodule};
use crate::verdict::{census, classify, equivalence_table, run_suite, suite_names};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(
    name = "stabmod",
    version,
    about = "Stable module category toolkit for path algebras of finite acyclic quivers over prime fields"
)]
pub struct Cli {
    /// Prime modulus of the ground field.
    #[arg(long, global = true, default_value_t = crate::linalg::DEFAULT_MODULUS, value_name = "P")]
    pub field: u64,
    /// Seed for all randomized sampling (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random trials per suite.
    #[arg(long, global = true, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON document, newline-terminated (the stable contract).
    Json,
    /// Lossy human-oriented summary.
    Text,
}

/// Quiver input: an explicit JSON document, or a line quiver `--an N` with an
/// optional `--orientation` string ('>' or '<' per edge, default all '>').
#[derive(Debug, Args)]
pub struct QuiverInput {
    /// Path to a quiver JSON document.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["an", "orientation"])]
    pub quiver: Option<PathBuf>,
    /// Number of vertices of a line quiver.
    #[arg(long, value_name = "N")]
    pub an: Option<usize>,
    /// Orientation of the line quiver, one character per edge.
    #[arg(long, requires = "an", allow_hyphen_values = true, value_name = "STR")]
    pub orientation: Option<String>,
}

impl QuiverInput {
    fn resolve(&self) -> Result<Quiver> {
        if let Some(path) = &self.quiver {
            let dto: QuiverDto = read_json(path)?;
            return dto.build();
        }
        if let Some(n) = self.an {
            let default = ">".repeat(n.saturating_sub(1));
            let orientation = self.orientation.as_deref().unwrap_or(&default);
            return Quiver::an(n, orientation);
        }
        Err(Error::InvalidInput(
            "a quiver is required: pass --quiver FILE or --an N".into(),
        ))
    }
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Decide whether the stable module category of the path algebra is
    /// abelian, reporting the injective envelope of the regular module.
    Classify {
        #[command(flatten)]
        quiver: QuiverInput,
    },
    /// Classify every orientation of the line quiver on N vertices.
    Census {
        #[arg(long, value_name = "N")]
        an: usize,
    },
    /// Match the stably nonzero indecomposables of the equioriented line on N
    /// vertices against the module indecomposables on N-1 vertices.
    Equivalence {
        #[arg(long, value_name = "N")]
        n: usize,
    },
    /// Run a named property suite on seeded random instances.
    Verify {
        /// Suite name; pass an unknown name to list the known ones.
        #[arg(long)]
        suite: String,
    },
    /// Largest submodule annihilated by every linear form, with its
    /// inclusion.
    Torsion {
        #[arg(long, value_name = "FILE")]
        rep: PathBuf,
    },
    /// Torsion-free quotient, with the canonical projection.
    Sharp {
        #[arg(long, value_name = "FILE")]
        rep: PathBuf,
    },
    /// Does the morphism factor through a projective module?
    IsZero {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Is the stable class of the morphism a monomorphism?
    IsMono {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Is the stable class of the morphism an epimorphism?
    IsEpi {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Does the stable class of the morphism admit a left inverse?
    IsSplitMono {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Does the stable class of the morphism admit a right inverse?
    IsSplitEpi {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Is the stable class of the morphism an isomorphism?
    IsIso {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Dimensions of the stable hom group between the endpoints, and the
    /// class of the morphism in quotient coordinates.
    StableHom {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Is the stable class of the morphism a cokernel?
    NormalEpi {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Exhibit the stable class of the morphism as a kernel (available when
    /// the injective envelope of the regular module is projective).
    NormalMonoCert {
        #[arg(long, value_name = "FILE")]
        morphism: PathBuf,
    },
    /// Search for a monomorphism that is also an epimorphism but not an
    /// isomorphism: the quotient of a stable injective envelope by an
    /// embedded projective.
    Witness {
        #[command(flatten)]
        quiver: QuiverInput,
    },
}

/// Full dispatch: parse `argv`, run, render. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            diagnose(err, "invalid-input", &e.to_string());
            return 2;
        }
    };
    match execute(&cli) {
        Ok((body, code)) => {
            let _ = out.write_all(body.as_bytes());
            code
        }
        Err(e) => {
            diagnose(err, error_kind(&e), &e.to_string());
            e.exit_code()
        }
    }
}

fn diagnose(err: &mut dyn Write, kind: &str, message: &str) {
    #[derive(Serialize)]
    struct Diagnostic<'a> {
        kind: &'a str,
        message: &'a str,
    }
    let doc = serde_json::to_string(&Diagnostic { kind, message })
        .expect("diagnostic serialization cannot fail");
    let _ = writeln!(err, "{doc}");
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Quiver(_) => "invalid-quiver",
        Error::BadModulus(_) => "bad-modulus",
        Error::Shape(_) => "shape-mismatch",
        Error::InvalidInput(_) => "invalid-input",
        Error::NotEpi => "not-an-epimorphism",
        Error::NotMono => "not-a-monomorphism",
        Error::NotAbelianCase => "not-abelian",
        Error::NoneExists(_) => "none-exists",
        Error::IsActuallyEpi => "is-an-epimorphism",
        Error::UnknownSuite(_) => "unknown-suite",
        Error::OracleMismatch(_) => "oracle-mismatch",
        Error::SplitAssertionFailed(_) => "split-assertion-failed",
        Error::Internal(_) => "internal",
        Error::Json(_) => "malformed-json",
        Error::Io(_) => "io",
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let field = Fp::new(cli.field)?;
    match &cli.cmd {
        Cmd::Classify { quiver } => {
            let v = classify(field, &std::sync::Arc::new(quiver.resolve()?))?;
            let dto = VerdictDto::of(&v);
            done(cli, &dto, verdict_text(&dto))
        }
        Cmd::Census { an } => {
            let dtos: Vec<VerdictDto> = census(field, *an)?.iter().map(VerdictDto::of).collect();
            let text = dtos
                .iter()
                .map(|d| format!("{}: abelian={}", d.algebra, d.abelian))
                .collect::<Vec<_>>()
                .join("\n");
            done(cli, &dtos, text)
        }
        Cmd::Equivalence { n } => {
            let report = equivalence_table(field, *n)?;
            let text = format!(
                "A{} stable vs A{} modules: {} objects each, tables {}",
                report.n,
                report.n - 1,
                report.stable_objects.len(),
                if report.matched { "matched" } else { "DID NOT MATCH" },
            );
            done(cli, &report, text)
        }
        Cmd::Verify { suite } => {
            if !suite_names().contains(&suite.as_str()) {
                return Err(Error::UnknownSuite(format!(
                    "{suite} (known: {})",
                    suite_names().join(", ")
                )));
            }
            let report = run_suite(field, suite, cli.trials, cli.seed)?;
            let mut lines = vec![format!(
                "suite {} (field={}, trials={}, seed={}): {}",
                report.suite,
                report.field,
                report.trials,
                report.seed,
                if report.passed { "passed" } else { "FAILED" },
            )];
            lines.extend(report.failures.iter().map(|f| format!("  failure: {f}")));
            lines.extend(report.evidence.iter().map(|e| format!("  evidence: {e}")));
            let code = if report.passed { 0 } else { 1 };
            let (body, _) = done(cli, &report, lines.join("\n"))?;
            Ok((body, code))
        }
        Cmd::Torsion { rep } => {
            let m = read_rep(rep, field)?;
            let (t, inclusion) = torsion_submodule(&m).to_rep();
            let dto = TorsionDto {
                torsion: RepDto::of(&t),
                inclusion: MorphismDto::of(&inclusion),
            };
            let text = format!("torsion dims {:?} inside {:?}", t.dims, m.dims);
            done(cli, &dto, text)
        }
        Cmd::Sharp { rep } => {
            let m = read_rep(rep, field)?;
            let (s, projection) = sharp(&m);
            let dto = SharpDto {
                sharp: RepDto::of(&s),
                projection: MorphismDto::of(&projection),
            };
            let text = format!("torsion-free quotient dims {:?} of {:?}", s.dims, m.dims);
            done(cli, &dto, text)
        }
        Cmd::IsZero { morphism } => criterion(cli, morphism, field, is_stable_zero),
        Cmd::IsMono { morphism } => criterion(cli, morphism, field, is_stable_mono),
        Cmd::IsEpi { morphism } => criterion(cli, morphism, field, is_stable_epi),
        Cmd::IsSplitMono { morphism } => criterion(cli, morphism, field, is_stable_split_mono),
        Cmd::IsSplitEpi { morphism } => criterion(cli, morphism, field, is_stable_split_epi),
        Cmd::IsIso { morphism } => criterion(cli, morphism, field, is_stable_iso),
        Cmd::NormalEpi { morphism } => criterion(cli, morphism, field, is_normal_epi),
        Cmd::StableHom { morphism } => {
            let f = read_morphism(morphism, field)?;
            let space = StableHom::new(&f.source, &f.target)?;
            let dto = StableHomDto::of(&space, &f)?;
            let text = format!(
                "hom dimension {}, trivial {}, stable {}; class {:?}",
                dto.dim_hom, dto.dim_trivial, dto.dim_stable, dto.class
            );
            done(cli, &dto, text)
        }
        Cmd::NormalMonoCert { morphism } => {
            let f = read_morphism(morphism, field)?;
            let cert = normal_mono_certificate(&f)?;
            let dto = CertificateDto::of(&cert);
            let text = format!(
                "kernel certificate: quotient onto {:?}, envelope dims {:?}, induced map into {:?}",
                dto.quotient.target.dims, dto.envelope.dims, dto.induced.target.dims
            );
            done(cli, &dto, text)
        }
        Cmd::Witness { quiver } => {
            let q = std::sync::Arc::new(quiver.resolve()?);
            let dto = match bimorphism_witness(field, &q) {
                Ok(w) => WitnessOutcomeDto {
                    exists: true,
                    reason: None,
                    witness: Some(crate::json::BimorphismDto::of(&w)),
                },
                Err(Error::NoneExists(reason)) => WitnessOutcomeDto {
                    exists: false,
                    reason: Some(reason),
                    witness: None,
                },
                Err(e) => return Err(e),
            };
            let text = match &dto.witness {
                Some(w) => format!(
                    "bimorphism witness: envelope dims {:?} of projective dims {:?}; mono={} epi={} iso={}",
                    w.envelope.dims, w.projective.dims, w.mono, w.epi, w.iso
                ),
                None => format!(
                    "no witness: {}",
                    dto.reason.as_deref().unwrap_or("none exists")
                ),
            };
            done(cli, &dto, text)
        }
    }
}

fn criterion(
    cli: &Cli,
    path: &Path,
    field: Fp,
    decide: fn(&Morphism) -> Result<crate::stable::CriterionReport>,
) -> Result<(String, i32)> {
    let f = read_morphism(path, field)?;
    let report = decide(&f)?;
    let dto = CriterionDto::of(&report);
    let mut text = format!("verdict: {} (method: {})", dto.verdict, dto.method);
    if let Some(w) = &report.witness {
        text.push_str(&format!("; witness: {}", witness_label(w)));
    }
    done(cli, &dto, text)
}

fn witness_label(w: &crate::stable::Witness) -> String {
    use crate::stable::Witness;
    match w {
        Witness::Factorization(f) => {
            format!("factors through a projective of dims {:?}", f.through.dims)
        }
        Witness::Retraction(_) => "stable left inverse".into(),
        Witness::Section(_) => "stable right inverse".into(),
        Witness::Inverse(_) => "stable two-sided inverse".into(),
        Witness::NonProjectiveKernel(k) => format!("non-projective kernel of dims {:?}", k.dims),
        Witness::NonSplitPushout(a) => format!(
            "map from the kernel into a projective of dims {:?} with no extension",
            a.target.dims
        ),
        Witness::FailingInterval { lo, hi, reason } => {
            format!("interval [{},{}] fails: {reason}", lo + 1, hi + 1)
        }
    }
}

fn done<T: Serialize>(cli: &Cli, dto: &T, text: String) -> Result<(String, i32)> {
    let body = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string(dto)?),
        Format::Text => format!("{text}\n"),
    };
    Ok((body, 0))
}

fn verdict_text(d: &VerdictDto) -> String {
    let mut lines = vec![format!(
        "{} over GF({}): stable category {}",
        d.algebra,
        d.field,
        if d.abelian { "abelian" } else { "not abelian" },
    )];
    lines.extend(d.reasons.iter().map(|r| format!("  - {r}")));
    lines.join("\n")
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let raw = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&raw)?)
}

fn read_rep(path: &Path, field: Fp) -> Result<crate::rep::Rep> {
    read_json::<RepDto>(path)?.build(field)
}

fn read_morphism(path: &Path, field: Fp) -> Result<Morphism> {
    read_json::<MorphismDto>(path)?.build(field)
}
