//! Front end for the `nullcone` binary: input loading, command dispatch and
//! output files. `run` never exits the process; it returns the exit status.

pub mod report;
pub mod svg;
pub mod text;

use std::io::Write;
use std::path::{Path, PathBuf};

use nullcone_core::candidates::{enumerate_candidates, EnumerationOptions};
use nullcone_core::oracle;
use nullcone_core::root_data::catalog_names;
use nullcone_core::{parse_catalog_spec, Engine, EngineOptions, Problem, SubProblem, ValidatedProblem, Violation};

pub use report::JsonReport;
pub use svg::render_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Stratify,
    Candidates,
    Tree,
    CatalogList,
    Verify,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// A problem file, or a catalog spec when no such file exists.
    pub input: Option<String>,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub fast: bool,
    pub verify: bool,
    pub no_dedup: bool,
    pub orbit_cap: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<String>) -> Self {
        RunConfig {
            command,
            input: Some(input.into()),
            json: None,
            svg: None,
            fast: false,
            verify: false,
            no_dedup: false,
            orbit_cap: None,
        }
    }

    fn engine_options(&self) -> EngineOptions {
        EngineOptions {
            fast: self.fast,
            no_dedup: self.no_dedup,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] nullcone_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("invalid problem:\n{}", list(.0))]
    Invalid(Vec<Violation>),
    #[error("oracle disagreement")]
    Mismatch,
}

fn list(vs: &[Violation]) -> String {
    vs.iter().map(|v| format!("  - {v}")).collect::<Vec<_>>().join("\n")
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource() => EXIT_RESOURCE,
            CliError::Mismatch => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        }
    }
}

/// Reads `input` as a problem file if such a path exists, else as a catalog spec.
pub fn load_problem(input: &str) -> Result<Problem, CliError> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?;
        return Ok(Problem::from_json(&text)?);
    }
    parse_catalog_spec(input).map_err(|e| {
        CliError::Usage(format!(
            "{input:?} is neither a readable problem file nor a catalog spec: {e} (see `nullcone catalog-list`)"
        ))
    })
}

pub fn load_validated(config: &RunConfig) -> Result<ValidatedProblem, CliError> {
    let input = config
        .input
        .as_deref()
        .ok_or_else(|| CliError::Usage("this command needs an input file or catalog spec".into()))?;
    let problem = load_problem(input)?.validate().map_err(CliError::Invalid)?;
    Ok(match config.orbit_cap {
        Some(cap) => problem.with_orbit_cap(cap),
        None => problem,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn emit(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

/// Runs the oracle and prints its findings; `Err(Mismatch)` on disagreement.
fn run_oracle(problem: &ValidatedProblem, config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let (r, notes) = oracle::verify(problem, config.engine_options())?;
    for n in &notes {
        emit(out, &format!("verify: {n}\n"))?;
    }
    for (l, side) in &r.mismatches {
        emit(out, &format!("verify: candidate {l} found only by the {side}\n"))?;
    }
    for v in &r.law_violations {
        emit(out, &format!("verify: {v}\n"))?;
    }
    if r.is_clean() {
        emit(out, "verify: engine and oracle agree\n")?;
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    if config.command == Command::CatalogList {
        for (name, usage) in catalog_names() {
            emit(out, &format!("{name:<12} {usage}\n"))?;
        }
        return Ok(());
    }
    let problem = load_validated(config)?;
    if config.svg.is_some() && !(1..=2).contains(&problem.rank()) {
        return Err(CliError::Usage(format!(
            "--svg needs a problem of rank 1 or 2; this one has rank {}",
            problem.rank()
        )));
    }
    emit(out, &text::header(&problem))?;

    if config.command == Command::Candidates {
        let sub = SubProblem::from_problem(&problem);
        let cs = enumerate_candidates(&sub, EnumerationOptions { weyl_dedup: !config.no_dedup })?;
        emit(out, &text::weights(&problem))?;
        emit(out, &text::candidates(&cs))?;
        if let Some(path) = &config.json {
            write_file(path, &report::to_json(&report::JsonCandidateList::new(&cs)))?;
        }
        if config.svg.is_some() {
            return Err(CliError::Usage("--svg is available for stratify, tree and verify".into()));
        }
        return if config.verify { run_oracle(&problem, config, out) } else { Ok(()) };
    }

    let summary = Engine::new(config.engine_options()).stratify(&problem)?;
    match config.command {
        Command::Tree => emit(out, &text::trees(&summary))?,
        _ => emit(out, &text::summary(&summary))?,
    }
    if let Some(path) = &config.json {
        write_file(path, &report::to_json(&JsonReport::from_summary(&summary)))?;
    }
    if let Some(path) = &config.svg {
        write_file(path, &render_svg(&problem, &summary)?)?;
    }
    if config.verify || config.command == Command::Verify {
        run_oracle(&problem, config, out)?;
    }
    Ok(())
}

/// Executes `config`, writing reports to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 for invalid input, 2 when a resource bound is hit,
/// 3 when the oracle disagrees with the engine.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
