use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbitsym::classifier::{self, TableFormat};
use orbitsym::orbits::{orbit_report, Marking};
use orbitsym::symspace::{catalog, catalog_json};
use orbitsym::{build_root_system, Family, RootSystemKind, SymmetricSpace};

#[derive(Parser)]
#[command(name = "orbitsym", version, about = "Almost symmetric orbits of s-representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries.
    List {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Dump the positive roots of a root system as JSON.
    Roots { family: String, rank: usize },
    /// Tangent/normal decomposition of one orbit.
    Orbit {
        /// Space label, e.g. `AIII(5,2)` or `EVII`.
        space: String,
        /// Support of the marking, e.g. `1,2`.
        support: String,
    },
    /// Sweep every marking and character and print the JSON report.
    Classify {
        #[arg(long)]
        space: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Compare the sweep with the expected classification.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Check the dimension identity of the cohomogeneity-three rows.
    VerifyTableB {
        /// Largest `n` for the Stiefel row.
        #[arg(long, default_value_t = 10)]
        max_n: u32,
    },
    /// Render the table of almost symmetric orbits.
    Emit {
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long, default_value = "md")]
        format: String,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Dump the catalog.
    Catalog {
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    A,
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn run(cli: Cli) -> orbitsym::Result<ExitCode> {
    match cli.command {
        Command::List { max_rank } => {
            for s in catalog(max_rank)? {
                println!(
                    "{:<14} {:<10} dim {:>4}  {} / {}",
                    s.label(),
                    s.restricted().to_string(),
                    s.known_dim,
                    s.g_name,
                    s.k_name
                );
            }
        }
        Command::Roots { family, rank } => {
            let family: Family = family.parse().map_err(|detail| orbitsym::Error::InvalidParameters {
                family: family.clone(),
                detail,
            })?;
            let kind = match family.fixed_rank() {
                Some(_) => RootSystemKind::exceptional(family)?,
                None => RootSystemKind::new(family, rank)?,
            };
            if kind.rank() != rank {
                return Err(orbitsym::Error::InvalidRank { family, rank });
            }
            println!("{}", pretty(&build_root_system(kind)?.dump_json()));
        }
        Command::Orbit { space, support } => {
            let space = SymmetricSpace::from_label(&space)?;
            let marking = Marking::parse(space.rank(), &support)?;
            println!("{}", pretty(&orbit_report(&space, &marking)?));
        }
        Command::Classify { space, max_rank } => {
            let spaces = match space {
                Some(label) => vec![SymmetricSpace::from_label(&label)?],
                None => catalog(max_rank)?,
            };
            let report = classifier::report(classifier::classify_all(&spaces)?);
            println!("{}", pretty(&report));
        }
        Command::Verify { max_rank } => {
            let diff = classifier::verify_against_paper(max_rank)?;
            println!("{}", pretty(&diff));
            if !diff.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::VerifyTableB { max_n } => {
            let rows = classifier::verify_table_b(max_n);
            println!("{}", pretty(&rows));
            if !rows.iter().all(|r| r.pass) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Emit {
            table: Table::A,
            format,
            max_rank,
        } => {
            let format: TableFormat = format.parse()?;
            let spaces = catalog(max_rank)?;
            let verdicts = classifier::classify_all(&spaces)?;
            print!("{}", classifier::emit_table_a(&classifier::table_a(&spaces, &verdicts), format));
        }
        Command::Catalog { format, max_rank } => {
            if format != "json" {
                return Err(orbitsym::Error::UnsupportedFormat(format));
            }
            println!("{}", pretty(&catalog_json(&catalog(max_rank)?)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
