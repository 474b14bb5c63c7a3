use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use surfbundle::io::{self, CliError, Format, ReportFile, EXIT_FAILURE, EXIT_OK};
use surfbundle::search::{SearchConfig, DEFAULT_MAX_STATES};
use surfbundle::symplectic::BaseKind;

#[derive(Parser)]
#[command(name = "surfbundle", version, about = "Exact rational homology of surface bundles over surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Closed,
    #[value(name = "one_boundary")]
    OneBoundary,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a problem file.
    Check {
        /// Problem file (JSON).
        file: String,
    },
    /// Betti numbers, generators and consistency checks of the total space.
    Homology {
        /// Problem file (JSON).
        file: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Search for holonomy products with eigenvalue 1.
    Search {
        /// Problem file (JSON).
        file: String,
        /// Longest word to try.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_len: u32,
        /// Abort (exit 3) once this many distinct products are stored.
        #[arg(long, default_value_t = DEFAULT_MAX_STATES as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_states: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Compare the engine with the Künneth formula on a product bundle.
    Oracle {
        /// Fiber genus h, at least 2.
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        fiber_genus: u32,
        /// Base genus g, at least 1.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        base_genus: u32,
        #[arg(long, value_enum)]
        base: BaseArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn emit(report: ReportFile, format: FormatArg) -> u8 {
    print!("{}", io::render(&report, format.into(), io::color_enabled()));
    if report.success() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Cmd::Check { file } => {
            let p = io::load_problem(&file)?;
            println!(
                "ok: fiber genus {}, {} base of genus {}, {} holonomy matrices",
                p.fiber_genus(),
                p.base(),
                p.base_genus(),
                p.matrices().len()
            );
            Ok(EXIT_OK)
        }
        Cmd::Homology { file, format } => {
            let p = io::load_problem(&file)?;
            Ok(emit(io::run_homology(&p)?, format))
        }
        Cmd::Search {
            file,
            max_len,
            max_states,
            format,
        } => {
            let p = io::load_problem(&file)?;
            let cfg = SearchConfig {
                max_len: max_len as usize,
                max_states: usize::try_from(max_states).unwrap_or(usize::MAX),
                parallel: true,
            };
            Ok(emit(io::run_search(&p, &cfg)?, format))
        }
        Cmd::Oracle {
            fiber_genus,
            base_genus,
            base,
            format,
        } => {
            let base = match base {
                BaseArg::Closed => BaseKind::Closed,
                BaseArg::OneBoundary => BaseKind::OneBoundary,
            };
            Ok(emit(io::run_oracle(fiber_genus as usize, base, base_genus as usize)?, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
