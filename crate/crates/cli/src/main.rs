use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ordkit_core::io::{self, Instance, LoadError};
use ordkit_core::lab::enumerate::{enumerate, EnumerationBounds, EqualityMode};
use ordkit_core::lab::gallery::{run_all_galleries, run_gallery, GALLERY_NAMES};
use ordkit_core::{
    coarse_product, derive_leq_n, derive_leq_p, lex_product, seq_compare, weak_lex_product, Side, StrictRel,
};
use serde_json::json;

mod render;

const MAX_ENUM_VAR: &str = "ORDKIT_MAX_ENUM";

#[derive(Parser)]
#[command(name = "ordkit", version, about = "Check order axioms on finite relations")]
struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    /// x ≤_N y iff not y < x
    Np,
    /// x ≤_P y iff everything below x is below y and everything above y is above x
    Pp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Lex,
    Weaklex,
    CoarseLeft,
    CoarseRight,
}

#[derive(Clone, Copy, ValueEnum)]
enum Equality {
    Identity,
    AllPartitions,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a relation file against every axiom.
    Check { path: PathBuf },
    /// Print a derived weak order.
    Derive {
        path: PathBuf,
        #[arg(long, value_enum)]
        order: Order,
    },
    /// Build a product of two strict relations.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Transpose a strict relation.
    Dual {
        path: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check every relation on a small carrier.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Equality::Identity)]
        equality: Equality,
        /// Also write the JSON summary here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run worked instances, all of them when no name is given.
    Gallery {
        name: Option<String>,
        /// Write every instance as a relation file into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Compare two eventually-constant sequences.
    SeqCompare { path: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure { code: e.exit_code() as u8, message: e.to_string() }
    }
}

impl From<ordkit_core::OrdError> for Failure {
    fn from(e: ordkit_core::OrdError) -> Self {
        LoadError::Invalid(e).into()
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    io::parse_relation(&read(path)?).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn load_strict(path: &Path) -> Result<StrictRel, Failure> {
    match load(path)? {
        Instance::Strict(r) => Ok(r),
        Instance::Poset(_) => Err(Failure::usage(format!("{}: expected a strict relation (`less`)", path.display()))),
    }
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn relation_output(r: &StrictRel, output: Option<&Path>) -> Outcome {
    let text = io::emit_strict(r);
    match output {
        Some(path) => write(path, &format!("{text}\n")).map(|()| String::new()),
        None => Ok(text),
    }
}

fn cmd_check(path: &Path, format: Format) -> Outcome {
    Ok(match (load(path)?, format) {
        (Instance::Strict(r), Format::Text) => render::strict_report(&r),
        (Instance::Strict(r), Format::Json) => to_json(&render::strict_json(&r)),
        (Instance::Poset(p), Format::Text) => render::poset_report(&p),
        (Instance::Poset(p), Format::Json) => to_json(&render::poset_json(&p)),
    })
}

fn cmd_derive(path: &Path, order: Order, format: Format) -> Outcome {
    let r = load_strict(path)?;
    let (name, m) = match order {
        Order::Np => ("leq_N", derive_leq_n(&r)),
        Order::Pp => ("leq_P", derive_leq_p(&r)),
    };
    Ok(match format {
        Format::Text => render::matrix(name, r.base().labels(), &m),
        Format::Json => to_json(&json!({
            "order": name,
            "elements": r.base().labels(),
            "matrix": m.rows(),
        })),
    })
}

fn enumeration_bounds() -> Result<EnumerationBounds, Failure> {
    match std::env::var(MAX_ENUM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(EnumerationBounds::uniform)
            .map_err(|_| Failure::usage(format!("{MAX_ENUM_VAR} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(EnumerationBounds::default()),
    }
}

fn cmd_enumerate(size: usize, equality: Equality, report: Option<&Path>, format: Format) -> Outcome {
    let mode = match equality {
        Equality::Identity => EqualityMode::Identity,
        Equality::AllPartitions => EqualityMode::AllPartitions,
    };
    let summary = enumerate(size, mode, &enumeration_bounds()?).map_err(|e| match e {
        ordkit_core::OrdError::BoundExceeded { size, bound } => Failure::usage(format!(
            "carrier size {size} exceeds the enumeration bound {bound} (set {MAX_ENUM_VAR} to raise it)"
        )),
        other => other.into(),
    })?;
    if let Some(path) = report {
        write(path, &format!("{}\n", to_json(&summary)))?;
    }
    Ok(match format {
        Format::Text => summary.render_text(),
        Format::Json => to_json(&summary),
    })
}

fn file_stem(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('-') {
            out.push('-');
        }
    }
    out.trim_matches('-').to_string()
}

fn cmd_gallery(name: Option<&str>, emit: Option<&Path>, format: Format) -> Outcome {
    let reports = match name {
        None => run_all_galleries(),
        Some(n) => run_gallery(n).ok_or_else(|| {
            Failure::usage(format!("unknown gallery `{n}`; available: {}", GALLERY_NAMES.join(", ")))
        })?,
    };
    if let Some(dir) = emit {
        fs::create_dir_all(dir).map_err(|e| Failure::usage(format!("{}: {e}", dir.display())))?;
        for rep in &reports {
            let oracle = match rep.oracle {
                Some(true) => "-p",
                Some(false) => "-not-p",
                None => "",
            };
            for inst in &rep.instances {
                let file = dir.join(format!("{}{oracle}-{}.json", rep.instance_name, file_stem(&inst.name)));
                write(&file, &format!("{}\n", io::emit(&inst.instance)))?;
            }
        }
    }
    Ok(match format {
        Format::Text => reports.iter().map(render::extraction).collect::<Vec<_>>().join("\n"),
        Format::Json => to_json(&reports),
    })
}

fn cmd_seq_compare(path: &Path, format: Format) -> Outcome {
    let (f, g) = io::parse_seq_compare(&read(path)?).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    let verdict = seq_compare(&f, &g)?;
    Ok(match format {
        Format::Text => render::seq_verdict(&f, &g, &verdict),
        Format::Json => to_json(&json!({ "f": f.to_string(), "g": g.to_string(), "verdict": verdict })),
    })
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Check { path } => cmd_check(&path, format),
        Command::Derive { path, order } => cmd_derive(&path, order, format),
        Command::Product { a, b, kind, output } => {
            let (a, b) = (load_strict(&a)?, load_strict(&b)?);
            let r = match kind {
                Kind::Lex => lex_product(&a, &b),
                Kind::Weaklex => weak_lex_product(&a, &b),
                Kind::CoarseLeft => coarse_product(&a, &b, Side::Left),
                Kind::CoarseRight => coarse_product(&a, &b, Side::Right),
            };
            relation_output(&r, output.as_deref())
        }
        Command::Dual { path, output } => relation_output(&load_strict(&path)?.dual(), output.as_deref()),
        Command::Enumerate { size, equality, report } => cmd_enumerate(size, equality, report.as_deref(), format),
        Command::Gallery { name, emit } => cmd_gallery(name.as_deref(), emit.as_deref(), format),
        Command::SeqCompare { path } => cmd_seq_compare(&path, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            if !out.is_empty() {
                // a closed pipe downstream is not our failure
                let _ = writeln!(std::io::stdout().lock(), "{}", out.trim_end());
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
