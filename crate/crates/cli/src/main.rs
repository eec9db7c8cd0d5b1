use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symcell::algebra::Element;
use symcell::builders::{build, BuilderParams, Family};
use symcell::center::{primitive_idempotents, schur_elements, CenterError, SymmetricCellularAlgebra};
use symcell::io::{decode, parse_trace_file, write_algebra_file, IoError, ParsedFile};
use symcell::linalg::Subspace;
use symcell::report::Report;
use symcell::suite;
use symcell::{Field, Scalar};

/// `println!` that tolerates a closed pipe.
macro_rules! say {
    ($($t:tt)*) => {{
        let _ = writeln!(io::stdout().lock(), $($t)*);
    }};
}

const EXIT_PARSE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;
const EXIT_CHECK: u8 = 4;

#[derive(Parser)]
#[command(name = "symcell", version, about = "Centers, Higman ideals and idempotents of symmetric cellular algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an algebra file for one of the built-in families.
    Build {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Associativity, anti-automorphism, cellularity and trace checks.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the dual basis with respect to the file's trace.
    DualBasis { file: PathBuf },
    /// Print Z, H, L, L′ and the elements x_λ.
    Center { file: PathBuf },
    /// Run the dual-basis and central-ideal suites.
    Verify {
        file: PathBuf,
        /// Second trace: a JSON array of scalars or an algebra file.
        #[arg(long)]
        alt_trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Schur elements and primitive central idempotents.
    Idempotents { file: PathBuf },
    /// Every check and suite in one report.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        alt_trace: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CHECK,
            message: message.into(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        if e.is_parse() {
            Failure::parse(e.to_string())
        } else {
            Failure::validation(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ParsedFile, Failure> {
    Ok(decode(&read(path)?)?)
}

fn load_symmetric(path: &Path) -> Result<SymmetricCellularAlgebra, Failure> {
    let built = load(path)?.validate()?;
    suite::symmetric(&built).map_err(Failure::check)
}

fn load_alt(path: Option<&Path>, sca: &SymmetricCellularAlgebra) -> Result<Option<symcell::TraceForm>, Failure> {
    match path {
        None => Ok(None),
        Some(p) => Ok(Some(parse_trace_file(&read(p)?, sca.algebra())?)),
    }
}

fn emit(report: &Report, format: Format) -> Result<(), Failure> {
    match format {
        Format::Text => {
            let _ = write!(io::stdout().lock(), "{report}");
        }
        Format::Json => say!("{}", report.to_json()),
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::check(format!("{} check(s) failed", report.failures().len())))
    }
}

fn print_subspace(name: &str, s: &Subspace, sca: &SymmetricCellularAlgebra) {
    say!("{name}: dim {}", s.dim());
    for row in s.basis().row_vectors() {
        say!("  {}", sca.algebra().format(&Element::from_coeffs(row.to_vec())));
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build {
            family,
            n,
            delta,
            blocks,
            field,
            out,
        } => {
            let family: Family = family.parse().map_err(|e: symcell::builders::BuildError| Failure::parse(e.to_string()))?;
            let field: Field = field.parse().map_err(|e: symcell::scalar::ScalarError| Failure::parse(e.to_string()))?;
            let mut params = BuilderParams::new(family, n, field);
            params.blocks = blocks;
            if let Some(d) = delta {
                params.delta = Some(Scalar::parse(field, &d).map_err(|e| Failure::parse(e.to_string()))?);
            }
            let built = build(&params).map_err(|e| Failure::validation(e.to_string()))?;
            let text = write_algebra_file(&built);
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?,
                None => {
                    let _ = io::stdout().lock().write_all(text.as_bytes());
                }
            }
            Ok(())
        }
        Command::Check { file, format } => emit(&suite::check_suite(&load(&file)?)?, format),
        Command::DualBasis { file } => {
            let sca = load_symmetric(&file)?;
            let alg = sca.algebra();
            let labels = alg.labels();
            let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
            for (j, d) in sca.dual().elements().iter().enumerate() {
                say!("D[{:<width$}] = {}", labels[j], alg.format(d));
            }
            Ok(())
        }
        Command::Center { file } => {
            let sca = load_symmetric(&file)?;
            let cs = sca.central_structure().map_err(|e| Failure::check(e.to_string()))?;
            print_subspace("Z", &cs.z, &sca);
            print_subspace("H", &cs.h, &sca);
            print_subspace("L", &cs.l, &sca);
            print_subspace("L'", &cs.l_prime, &sca);
            let cells = sca.cellular().cells();
            for (lambda, (x, xp)) in cs.x.iter().zip(&cs.x_prime).enumerate() {
                let label = cells.lambda_label(lambda);
                say!("x[{label}] = {}", sca.algebra().format(x));
                say!("x'[{label}] = {}", sca.algebra().format(xp));
            }
            Ok(())
        }
        Command::Verify {
            file,
            alt_trace,
            format,
        } => {
            let sca = load_symmetric(&file)?;
            let alt = load_alt(alt_trace.as_deref(), &sca)?;
            let alt = suite::alternate(&sca, alt).map_err(|e| Failure::validation(e.to_string()))?;
            emit(&suite::verify_suite(&sca, &alt), format)
        }
        Command::Idempotents { file } => {
            let sca = load_symmetric(&file)?;
            let cells = sca.cellular().cells();
            let schur = schur_elements(&sca).map_err(|e| Failure::check(e.to_string()))?;
            for c in &schur.cells {
                say!("c[{}] = {}", cells.lambda_label(c.lambda), c.schur);
            }
            match primitive_idempotents(&sca) {
                Ok(es) => {
                    for (lambda, e) in es.iter().enumerate() {
                        say!("e[{}] = {}", cells.lambda_label(lambda), sca.algebra().format(e));
                    }
                    Ok(())
                }
                Err(e @ CenterError::NotSemisimple { .. }) => {
                    say!("NotSemisimple");
                    Err(Failure::check(e.to_string()))
                }
                Err(e) => Err(Failure::check(e.to_string())),
            }
        }
        Command::Report {
            file,
            format,
            alt_trace,
        } => {
            let parsed = load(&file)?;
            let alt = match alt_trace {
                None => None,
                Some(p) => {
                    let alg = parsed.algebra()?;
                    Some(parse_trace_file(&read(&p)?, &alg)?)
                }
            };
            emit(&suite::full_report(&parsed, alt)?, format)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
