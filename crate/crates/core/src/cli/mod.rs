//! Command-line front end.
//!
//! [`run`] executes one command in-process and returns what would be printed
//! together with the exit code: 0 when every check passes, 1 when one fails,
//! 2 on input errors.

mod document;

use std::ffi::OsString;
use std::fmt::{self, Display, Write as _};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, Fixture};
use crate::checks::{self, CheckReport, Law, SignPattern, SymmetryKind};
use crate::construct::{tensor_product, yau_twist, yau_twist_forced};
use crate::exactnum::{Rational, Scalar};
use crate::nambu_poly::{check_nambu_sampled, jacobian_det, Poly3, PolyError, PolyMap3};
use crate::{AlgebraError, ExactAlgebra};

pub use document::{AlgebraDocument, DocumentError};

/// Environment variable capping the number of checker threads.
pub const THREADS_ENV: &str = "HOMNARY_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "homnary",
    version,
    about = "Exact checks for n-ary Hom-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run identity checks on an algebra file.
    Check {
        file: PathBuf,
        /// Comma-separated identities to check.
        #[arg(short, long, value_delimiter = ',', required = true)]
        checks: Vec<CheckName>,
        /// Placement signs for `partial`, e.g. `+,-,+`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        signs: Option<Vec<String>>,
    },
    /// Twist an algebra along one of its named maps.
    Twist {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Accept an input whose twist maps are not identities.
        #[arg(long)]
        force: bool,
    },
    /// Tensor product of two algebras of equal arity.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Dump a built-in fixture, e.g. `total_assoc_2dim` or `twisted_partial(2,3)`.
    Catalog {
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// List fixture names with their class tags.
        #[arg(long, conflicts_with = "name")]
        list: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Sampled check of the Jacobian ternary bracket.
    JacobianDemo {
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Unimodular substitution, e.g. `x1+x2^2, x2, x3`.
        #[arg(long)]
        gamma: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Nambu,
    Jacobi,
    Total,
    WeakTotal,
    Partial,
    Skew,
    Symmetric,
    NambuLie,
}

/// Result of one command.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(message: impl Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug)]
struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

/// Sizes the global thread pool from `HOMNARY_THREADS`, if set. Call once,
/// before any check runs.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match cli.command {
        Command::Check {
            file,
            checks,
            signs,
        } => cmd_check(&file, &checks, signs.as_deref()),
        Command::Twist {
            file,
            map,
            out,
            force,
        } => cmd_twist(&file, &map, out.as_deref(), force),
        Command::Tensor { a, b, out } => cmd_tensor(&a, &b, out.as_deref()),
        Command::Catalog { name, list, out } => match (list, name) {
            (true, _) => Ok(cmd_list()),
            (false, Some(name)) => cmd_catalog(&name, out.as_deref()),
            (false, None) => Err(InputError("fixture name required".into())),
        },
        Command::JacobianDemo {
            samples,
            degree,
            seed,
            gamma,
        } => cmd_jacobian_demo(samples, degree, seed, gamma.as_deref()),
    };
    result.unwrap_or_else(|InputError(message)| Outcome::input_error(message))
}

/// `CHECK <identity> <pass|fail> tuples=<N>`, followed on failure by the
/// 1-based witness tuple and both sides.
pub fn format_report<T: Scalar + Display>(report: &CheckReport<T>) -> String {
    let mut line = format!(
        "CHECK {} {} tuples={}",
        report.identity(),
        report.verdict(),
        report.tuples_checked()
    );
    if let Some(w) = report.witness() {
        let tuple: Vec<String> = w.tuple.iter().map(|i| (i + 1).to_string()).collect();
        let _ = write!(
            line,
            " witness=({}) lhs={} rhs={}",
            tuple.join(","),
            w.lhs,
            w.rhs
        );
        if let Some(note) = &w.note {
            let _ = write!(line, " note=\"{note}\"");
        }
    }
    line
}

fn read_document(path: &Path) -> Result<AlgebraDocument, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    AlgebraDocument::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<(AlgebraDocument, ExactAlgebra), InputError> {
    let mut doc = read_document(path)?;
    if doc.name.is_none() {
        doc.name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .filter(|s| !s.contains(char::is_whitespace));
    }
    let alg = doc
        .to_algebra()
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((doc, alg))
}

fn parse_sign(text: &str) -> Result<i8, InputError> {
    match text.trim() {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        other => Err(InputError(format!("bad sign `{other}`, expected + or -"))),
    }
}

fn laws(
    names: &[CheckName],
    signs: Option<&[String]>,
    arity: usize,
) -> Result<Vec<Law>, InputError> {
    let pattern = match signs {
        Some(s) => {
            let signs = s
                .iter()
                .map(|x| parse_sign(x))
                .collect::<Result<Vec<_>, _>>()?;
            if signs.len() != arity {
                return Err(InputError(format!(
                    "--signs needs {arity} entries, got {}",
                    signs.len()
                )));
            }
            SignPattern::new(signs)?
        }
        None => SignPattern::all_plus(arity),
    };
    let mut out: Vec<Law> = Vec::new();
    for name in names {
        let expanded = match name {
            CheckName::Nambu => vec![Law::HomNambu],
            CheckName::Jacobi => vec![Law::HomJacobi],
            CheckName::Total => vec![Law::TotalAssoc { weak: false }],
            CheckName::WeakTotal => vec![Law::TotalAssoc { weak: true }],
            CheckName::Partial => vec![Law::PartialAssoc(pattern.clone())],
            CheckName::Skew => vec![Law::Symmetry(SymmetryKind::Skew)],
            CheckName::Symmetric => vec![Law::Symmetry(SymmetryKind::Symmetric)],
            // a Hom-Nambu-Lie algebra is a skew Hom-Nambu algebra
            CheckName::NambuLie => vec![Law::Symmetry(SymmetryKind::Skew), Law::HomNambu],
        };
        for law in expanded {
            if !out.contains(&law) {
                out.push(law);
            }
        }
    }
    Ok(out)
}

fn cmd_check(file: &Path, names: &[CheckName], signs: Option<&[String]>) -> CmdResult {
    let (_, alg) = load_algebra(file)?;
    let mut out = Outcome::default();
    for law in laws(names, signs, alg.arity())? {
        let report = checks::check(&alg, &law)?;
        if !report.passed() {
            out.code = 1;
        }
        let _ = writeln!(out.stdout, "{}", format_report(&report));
    }
    Ok(out)
}

fn emit_document(
    text: String,
    out: Option<&Path>,
    outcome: &mut Outcome,
) -> Result<(), InputError> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
        }
        None => {
            outcome.stdout.push_str(&text);
            Ok(())
        }
    }
}

fn cmd_twist(file: &Path, map_name: &str, out: Option<&Path>, force: bool) -> CmdResult {
    let (doc, alg) = load_algebra(file)?;
    let rho = doc
        .map(map_name)
        .ok_or_else(|| InputError(format!("unknown map `{map_name}`")))?;
    let report = checks::is_morphism(rho, &alg, &alg)?;
    let line = format_report(&report);
    if !report.passed() {
        return Ok(Outcome {
            code: 1,
            stdout: format!("{line}\n"),
            stderr: format!("error: `{map_name}` is not an endomorphism\n"),
        });
    }
    let twisted = if force {
        yau_twist_forced(&alg, rho)
    } else {
        yau_twist(&alg, rho)
    }
    .map_err(|e| match e {
        AlgebraError::NotClassical => {
            InputError("input has non-identity alphas; pass --force to replace them".into())
        }
        other => InputError(other.to_string()),
    })?;
    let header = vec![format!("twist of {} along {map_name}", alg.name())];
    let text = AlgebraDocument::from_algebra(&twisted).dump_with_header(&header);
    let mut outcome = Outcome::default();
    if out.is_some() {
        let _ = writeln!(outcome.stdout, "{line}");
    }
    emit_document(text, out, &mut outcome)?;
    Ok(outcome)
}

fn cmd_tensor(a: &Path, b: &Path, out: Option<&Path>) -> CmdResult {
    let (_, alg_a) = load_algebra(a)?;
    let (_, alg_b) = load_algebra(b)?;
    let product = tensor_product(&alg_a, &alg_b)?;
    let header = vec![
        format!(
            "tensor product of {} (dim {}) and {} (dim {})",
            alg_a.name(),
            alg_a.dim(),
            alg_b.name(),
            alg_b.dim()
        ),
        format!(
            "basis e_p (x) f_q has index (p-1)*{} + q, with p, q 1-based",
            alg_b.dim()
        ),
    ];
    let text = AlgebraDocument::from_algebra(&product).dump_with_header(&header);
    let mut outcome = Outcome::default();
    emit_document(text, out, &mut outcome)?;
    Ok(outcome)
}

fn cmd_list() -> Outcome {
    let mut out = Outcome::default();
    for info in catalog::list_fixtures() {
        let tags: Vec<String> = info.tags.iter().map(|t| t.to_string()).collect();
        let _ = write!(out.stdout, "{:<22} {}", info.signature(), tags.join(","));
        if info.invented {
            out.stdout.push_str(" invented");
        }
        out.stdout.push('\n');
    }
    out
}

/// Document for a fixture; map fixtures are written as their base algebra
/// with the map attached under the fixture's bare name.
pub fn fixture_document(spec: &str) -> Result<AlgebraDocument, catalog::CatalogError> {
    let (name, params) = catalog::parse_fixture_spec(spec)?;
    Ok(match catalog::get_fixture(&name, &params)? {
        Fixture::Algebra(alg) => AlgebraDocument::from_algebra(&alg),
        Fixture::Map { map, base } => AlgebraDocument::from_algebra(&base).with_map(&name, map)?,
    })
}

fn cmd_catalog(spec: &str, out: Option<&Path>) -> CmdResult {
    let doc = fixture_document(spec)?;
    let text = doc.dump_with_header(&[format!("catalog fixture {spec}")]);
    let mut outcome = Outcome::default();
    emit_document(text, out, &mut outcome)?;
    Ok(outcome)
}

struct Components<'a>(&'a PolyMap3<Rational>);

impl Display for Components<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0.components();
        write!(f, "({a}, {b}, {c})")
    }
}

fn cmd_jacobian_demo(samples: usize, degree: u32, seed: u64, gamma: Option<&str>) -> CmdResult {
    let gamma = gamma.map(PolyMap3::<Rational>::parse).transpose()?;
    let mut out = Outcome::default();
    let label = gamma
        .as_ref()
        .map_or_else(|| "none".to_string(), |g| Components(g).to_string());
    let _ = writeln!(
        out.stdout,
        "JACOBIAN samples={samples} degree={degree} seed={seed} gamma={label}"
    );
    let report = match check_nambu_sampled(gamma.as_ref(), samples, degree, seed) {
        Ok(r) => r,
        Err(PolyError::NotUnimodular) => {
            let det: Poly3<Rational> =
                jacobian_det(gamma.as_ref().expect("only raised with gamma"));
            return Err(InputError(format!("det J(gamma) = {det}, expected 1")));
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(det) = &report.gamma_det {
        let _ = writeln!(out.stdout, "DET {det}");
    }
    let identity = if gamma.is_some() {
        "hom-nambu"
    } else {
        "nambu"
    };
    for o in &report.outcomes {
        match &o.failure {
            None => {
                let _ = writeln!(out.stdout, "SAMPLE {} pass", o.index + 1);
            }
            Some(w) => {
                out.code = 1;
                let _ = writeln!(
                    out.stdout,
                    "SAMPLE {} fail identity={} lhs={} rhs={}",
                    o.index + 1,
                    w.identity,
                    w.lhs,
                    w.rhs
                );
            }
        }
    }
    let verdict = if report.passed() { "pass" } else { "fail" };
    let _ = writeln!(
        out.stdout,
        "RESULT {identity} {verdict} {}/{}",
        report.passed_count(),
        report.outcomes.len()
    );
    Ok(out)
}
