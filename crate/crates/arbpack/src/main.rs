use std::io::Read;
use std::process::ExitCode;

use arbpack::commands::{self, CommandError, Output, SolveOptions, EXIT_ERROR};
use arbpack::gen::{GenParams, MatroidFamily};
use arbpack_core::verify::Caps;
use arbpack_core::PackingMode;
use clap::{Parser, Subcommand};

/// Minimum-weight packings of mixed hyperarborescences.
///
/// Exit status: 0 on success, 2 when the instance is infeasible or its condition fails, 1 on
/// errors and invalid solutions.
#[derive(Parser, Debug)]
#[command(name = "arbpack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an instance and print a solution document.
    Solve {
        /// Instance file, or `-` for standard input.
        instance: String,
        #[arg(long, value_parser = parse_mode)]
        mode: PackingMode,
        /// Attach a violated inequality when infeasible.
        #[arg(long)]
        certificate: bool,
        /// Treat every weight as zero.
        #[arg(long)]
        unweighted: bool,
        /// Largest node count for the certificate search.
        #[arg(long, default_value_t = Caps::default().nodes)]
        cap: usize,
    },
    /// Check a solution document against its instance.
    Validate {
        instance: String,
        solution: String,
        /// Defaults to the mode recorded in the solution.
        #[arg(long, value_parser = parse_mode)]
        mode: Option<PackingMode>,
    },
    /// Evaluate the packing condition by enumeration and compare it with the solver.
    Check {
        instance: String,
        #[arg(long, value_parser = parse_mode)]
        mode: PackingMode,
        /// Largest node count for set and wall enumeration.
        #[arg(long, default_value_t = Caps::default().nodes)]
        cap: usize,
        /// Largest vertex count for biset subpartition enumeration.
        #[arg(long, default_value_t = Caps::default().biset_vertices)]
        biset_cap: usize,
        /// Also compare the solver weight with a brute-force optimum.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Print a seeded random instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = GenParams::default().vertices)]
        vertices: usize,
        #[arg(long, default_value_t = GenParams::default().roots)]
        roots: usize,
        #[arg(long, default_value_t = GenParams::default().dyperedges)]
        dyperedges: usize,
        #[arg(long, default_value_t = GenParams::default().hyperedges)]
        hyperedges: usize,
        #[arg(long, default_value_t = GenParams::default().max_tail)]
        max_tail: usize,
        #[arg(long, default_value_t = GenParams::default().max_members)]
        max_members: usize,
        /// free, uniform:K or partition:C1,C2,...
        #[arg(long, default_value = "free", value_parser = parse_family)]
        matroid: MatroidFamily,
        /// Integer weight range LO:HI.
        #[arg(long, default_value = "-5:5", value_parser = parse_range, allow_hyphen_values = true)]
        weights: (i64, i64),
    },
}

fn parse_mode(s: &str) -> Result<PackingMode, String> {
    PackingMode::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = PackingMode::ALL.iter().map(|m| m.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_family(s: &str) -> Result<MatroidFamily, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer"));
    Ok((num(lo)?, num(hi)?))
}

fn read(path: &str) -> Result<String, CommandError> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| CommandError::Usage(format!("{path}: {e}")))?;
    Ok(text)
}

fn run(cli: Cli) -> Result<Output, CommandError> {
    match cli.command {
        Command::Solve { instance, mode, certificate, unweighted, cap } => {
            let caps = Caps { nodes: cap, ..Caps::default() };
            commands::solve(&read(&instance)?, SolveOptions { mode, certificate, unweighted, caps })
        }
        Command::Validate { instance, solution, mode } => commands::validate(&read(&instance)?, &read(&solution)?, mode),
        Command::Check { instance, mode, cap, biset_cap, exhaustive } => {
            let caps = Caps { nodes: cap, biset_vertices: biset_cap, ..Caps::default() };
            commands::check(&read(&instance)?, mode, caps, exhaustive)
        }
        Command::Gen { seed, vertices, roots, dyperedges, hyperedges, max_tail, max_members, matroid, weights } => {
            commands::gen(&GenParams { seed, vertices, roots, dyperedges, hyperedges, max_tail, max_members, matroid, weights })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            for note in &out.notes {
                eprintln!("note: {note}");
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
