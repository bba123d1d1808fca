//! Command-line front end. `run` is the whole program minus process exit so
//! tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 a computed check failed, 2 usage error,
//! 3 unreadable or invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use crate::algebra::OmegaAlgebra;
use crate::catalog;
use crate::error::{Error, Result};
use crate::format::{family_from_json, map_from_json, read_algebra, AlgebraDocument};
use crate::linalg::{parse_scalar, Scalar};
use crate::local::{
    affine_local_closure, is_local_member, local_closure, two_local_report, SamplePlan, DEFAULT_SEED,
};
use crate::report::{compare, AlgebraIdentity, CatalogSummary, Payload, Report};
use crate::solvers::{self, MapKind, MapSpace, TensorKind};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "omega-lie", version, about = "Exact computations for omega-Lie algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Seed for random sample points.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Add the lattice sweep and targeted degenerate points to local sampling.
    #[arg(long, global = true)]
    thorough: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the ω-Lie axioms.
    Check {
        /// `@KEY`, `@KEY?alpha=p/q`, or a JSON file.
        algebra: String,
    },
    /// Compute a solution space exactly.
    Solve {
        #[arg(value_enum)]
        kind: SolveKind,
        algebra: String,
        /// δ for `dder`.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Local analysis of derivations or ½-derivations.
    Local {
        #[command(subcommand)]
        target: LocalTarget,
    },
    /// Look for a separating vector proving 2-local maps are global.
    Twolocal {
        #[arg(value_enum)]
        space: SpaceArg,
        algebra: String,
    },
    /// Browse the built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Re-check the published claims against exact computation.
    VerifyPaper {
        /// Run only this criterion.
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolveKind {
    Der,
    Wder,
    Cent,
    Cmap,
    Acmap,
    Halfder,
    Dder,
    Bider,
    BiderSym,
    BiderSkew,
    BiderOmega,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Der,
    Halfder,
}

#[derive(Subcommand, Debug)]
enum LocalTarget {
    /// Local closure of Der(L).
    Der { algebra: String },
    /// Local closure of the ½-derivations.
    Halfder { algebra: String },
    /// Is a given map a local derivation?
    Map {
        algebra: String,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = SpaceArg::Der)]
        space: SpaceArg,
    },
    /// Local closure of an affine family of maps.
    Family {
        algebra: String,
        #[arg(long)]
        family: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show {
        key: String,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Print the algebra in the JSON input format.
    Export {
        key: String,
        #[arg(long)]
        alpha: Option<String>,
    },
}

/// A resolved algebra argument.
struct Loaded {
    algebra: OmegaAlgebra,
    params: Vec<(String, Scalar)>,
    entry: Option<catalog::CatalogEntry>,
}

impl Loaded {
    fn identity(&self) -> AlgebraIdentity {
        AlgebraIdentity::of(&self.algebra, &self.params)
    }

    /// Catalog claims apply only to generic parameter values.
    fn expected(&self) -> Option<&catalog::ExpectedResults> {
        self.entry
            .as_ref()
            .filter(|e| !e.is_special(&self.params))
            .map(|e| &e.expected)
    }
}

fn alpha_params(alpha: Option<&str>) -> Result<Vec<(String, Scalar)>> {
    alpha
        .map(|a| Ok(vec![("alpha".to_string(), parse_scalar(a)?)]))
        .transpose()
        .map(Option::unwrap_or_default)
}

/// First generic sample, so catalog claims can be compared by default.
fn default_sample(entry: &catalog::CatalogEntry) -> Vec<(String, Scalar)> {
    let samples = entry.sample_assignments();
    samples
        .iter()
        .find(|p| !entry.is_special(p))
        .or(samples.first())
        .cloned()
        .unwrap_or_default()
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Io(io) => Error::Invalid(format!("{}: {io}", path.display())),
        Error::Json(j) => Error::Parse(format!("{}: {j}", path.display())),
        other => other,
    }
}

fn read_file<T>(path: &Path, parse: impl Fn(&str) -> Result<T>) -> Result<T> {
    std::fs::read_to_string(path)
        .map_err(Error::from)
        .and_then(|t| parse(&t))
        .map_err(|e| in_file(path, e))
}

fn load(arg: &str) -> Result<Loaded> {
    let Some(spec) = arg.strip_prefix('@') else {
        return Ok(Loaded {
            algebra: read_algebra(Path::new(arg)).map_err(|e| in_file(Path::new(arg), e))?,
            params: vec![],
            entry: None,
        });
    };
    let (key, query) = spec.split_once('?').unwrap_or((spec, ""));
    let entry = catalog::entry(key)?;
    let mut params = Vec::new();
    for pair in query.split('&').filter(|p| !p.is_empty()) {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got {pair:?}")))?;
        params.push((name.to_string(), parse_scalar(value)?));
    }
    if entry.is_parametric() && params.is_empty() {
        params = default_sample(&entry);
    }
    Ok(Loaded {
        algebra: catalog::get(key, &params)?,
        params,
        entry: Some(entry),
    })
}

fn load_valid(arg: &str) -> Result<Loaded> {
    let l = load(arg)?;
    let axioms = l.algebra.check_axioms();
    if !axioms.passed {
        let triples: Vec<String> = axioms
            .failing_triples()
            .iter()
            .map(|(i, j, k)| format!("({},{},{})", i + 1, j + 1, k + 1))
            .collect();
        return Err(Error::Invalid(format!(
            "{} is not an omega-Lie algebra (failing triples {})",
            l.algebra.name(),
            triples.join(" ")
        )));
    }
    Ok(l)
}

fn space_for(alg: &OmegaAlgebra, s: SpaceArg) -> MapSpace {
    match s {
        SpaceArg::Der => solvers::derivations(alg),
        SpaceArg::Halfder => solvers::half_derivations(alg),
    }
}

fn with_expected(mut report: Report, l: &Loaded) -> Report {
    if let Some(e) = l.expected() {
        report.verdicts = compare(e, &report.payload);
    }
    report
}

enum Outcome {
    Report(Report),
    Raw(String),
}

fn execute(cli: &Cli, command: Vec<String>) -> Result<Outcome> {
    let plan = if cli.thorough {
        SamplePlan {
            seed: cli.seed,
            ..SamplePlan::thorough()
        }
    } else {
        SamplePlan::with_seed(cli.seed)
    };
    let report = match &cli.command {
        Command::Check { algebra } => {
            let l = load(algebra)?;
            let payload = Payload::axioms(&l.algebra.check_axioms());
            Report::new(command, Some(l.identity()), payload)
        }
        Command::Solve { kind, algebra, delta } => {
            let l = load_valid(algebra)?;
            let a = &l.algebra;
            if delta.is_some() && *kind != SolveKind::Dder {
                return Err(Error::Invalid("--delta only applies to dder".into()));
            }
            let map = |k: MapKind| Payload::map_space(&solvers::solve_map(a, &k));
            let tensor = |k: TensorKind| Payload::tensor_space(&solvers::solve_tensor(a, k));
            let payload = match kind {
                SolveKind::Der => map(MapKind::Derivation),
                SolveKind::Wder => map(MapKind::OmegaDerivation),
                SolveKind::Cent => map(MapKind::Centroid),
                SolveKind::Cmap => map(MapKind::Commuting),
                SolveKind::Acmap => map(MapKind::AntiCommuting),
                SolveKind::Halfder => map(MapKind::half_derivation()),
                SolveKind::Dder => {
                    let d = delta
                        .as_deref()
                        .ok_or_else(|| Error::Invalid("dder needs --delta p/q".into()))?;
                    map(MapKind::DeltaDerivation(parse_scalar(d)?))
                }
                SolveKind::Bider => tensor(TensorKind::Biderivation),
                SolveKind::BiderSym => tensor(TensorKind::Symmetric),
                SolveKind::BiderSkew => tensor(TensorKind::Skew),
                SolveKind::BiderOmega => tensor(TensorKind::OmegaBiderivation),
            };
            with_expected(Report::new(command, Some(l.identity()), payload), &l)
        }
        Command::Local { target } => match target {
            LocalTarget::Der { algebra } | LocalTarget::Halfder { algebra } => {
                let l = load_valid(algebra)?;
                let s = if matches!(target, LocalTarget::Der { .. }) {
                    SpaceArg::Der
                } else {
                    SpaceArg::Halfder
                };
                let space = space_for(&l.algebra, s);
                let r = local_closure(&l.algebra, &space, &plan)?;
                with_expected(Report::new(command, Some(l.identity()), Payload::local_closure(&r)), &l)
            }
            LocalTarget::Map { algebra, map, space } => {
                let l = load_valid(algebra)?;
                let m = read_file(map, map_from_json)?;
                let space = space_for(&l.algebra, *space);
                let v = is_local_member(&l.algebra, &space, &m, &plan)?;
                Report::new(command, Some(l.identity()), Payload::local_member(&space, &v))
            }
            LocalTarget::Family { algebra, family } => {
                let l = load_valid(algebra)?;
                let f = read_file(family, family_from_json)?;
                if f.dim() != l.algebra.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: l.algebra.dim(),
                        found: f.dim(),
                    });
                }
                let r = affine_local_closure(&l.algebra, &f, &plan)?;
                Report::new(
                    command,
                    Some(l.identity()),
                    Payload::affine_closure(l.algebra.dim(), &r),
                )
            }
        },
        Command::Twolocal { space, algebra } => {
            let l = load_valid(algebra)?;
            let s = space_for(&l.algebra, *space);
            let r = two_local_report(&l.algebra, &s, &plan)?;
            with_expected(Report::new(command, Some(l.identity()), Payload::two_local(&s, &r)), &l)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries = catalog::list()
                    .into_iter()
                    .map(|e| CatalogSummary {
                        key: e.key.clone(),
                        dim: e.dim,
                        group: e.group.to_string(),
                        parameters: e.parameters.iter().map(|p| p.name.clone()).collect(),
                    })
                    .collect();
                Report::new(command, None, Payload::CatalogList { entries })
            }
            CatalogAction::Show { key, alpha } => {
                let entry = catalog::entry(key)?;
                let mut params = alpha_params(alpha.as_deref())?;
                if entry.is_parametric() && params.is_empty() {
                    params = default_sample(&entry);
                }
                let alg = catalog::get(key, &params)?;
                let payload = Payload::CatalogEntry {
                    algebra: AlgebraDocument::from_algebra(&alg),
                    entry,
                };
                Report::new(command, Some(AlgebraIdentity::of(&alg, &params)), payload)
            }
            CatalogAction::Export { key, alpha } => {
                return Ok(Outcome::Raw(catalog::export(key, &alpha_params(alpha.as_deref())?)?));
            }
        },
        Command::VerifyPaper { criterion } => {
            let criteria = match criterion {
                None => verify::run_all(cli.seed),
                Some(id) => vec![verify::run(*id, cli.seed).ok_or_else(|| {
                    Error::Invalid(format!("criteria are numbered 1 to {}", verify::CRITERIA))
                })?],
            };
            Report::new(command, None, Payload::Verify { criteria })
        }
    };
    Ok(Outcome::Report(report))
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let command = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(&cli, command) {
        Ok(Outcome::Raw(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Outcome::Report(r)) => {
            let text = match cli.format {
                OutputFormat::Text => r.to_text(),
                OutputFormat::Json => r.to_json() + "\n",
            };
            let _ = write!(out, "{text}");
            if r.passed() && axioms_ok(&r) {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            3
        }
    }
}

fn axioms_ok(r: &Report) -> bool {
    !matches!(r.payload, Payload::Axioms { passed: false, .. })
}
