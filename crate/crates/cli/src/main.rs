//! cubevc: command-line analysis and construction of concept classes in the
//! binary n-cube.
//!
//! Exit codes: 0 on success, 1 on usage, IO or precondition errors, 2 when a
//! guarantee of the underlying theory fails on the given input (so scripted
//! runs can tell genuine findings from mistakes).

mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use cubevc_core::Error;

#[derive(Parser)]
#[command(name = "cubevc", version, about = "Concept classes in the binary n-cube")]
struct Args {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for heavy operations. Accepted for forward
    /// compatibility; all current operations are deterministic and
    /// single-threaded, and output bytes never depend on this value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// VC dimension of a class (-1 for the empty class).
    Vcdim { file: String },
    /// The Sauer bound Phi_d(n).
    Sauer {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// VC dimension, Sauer bound, cardinality and deficiency.
    Deficiency { file: String },
    /// Does the class meet its Sauer bound with equality?
    IsMaximum { file: String },
    /// Can no vertex be added without raising the VC dimension?
    IsMaximal { file: String },
    /// Count k-cubes in the complement of a maximal class against the lower
    /// bound met exactly by maximum classes.
    CountCubes {
        #[arg(long)]
        k: u32,
        file: String,
    },
    /// The complementary class.
    Complement { file: String },
    /// Project the class by deleting coordinates.
    Project {
        /// Comma-separated coordinates to delete, e.g. 1,3.
        #[arg(long, value_delimiter = ',')]
        drop: Vec<u32>,
        file: String,
    },
    /// Split along one coordinate into image, reduction and tail.
    Reduce {
        #[arg(long)]
        x: u32,
        file: String,
    },
    /// Iterated reduction of a cube collection as DOT. Accepts a ".cubes"
    /// collection or a ".cc" maximum class (via its unique collection).
    Ir {
        /// Comma-separated direction set of size k-1 (omit for k=1).
        #[arg(long, value_delimiter = ',')]
        s: Option<Vec<u32>>,
        file: String,
    },
    /// Face graph of a cube collection as DOT.
    FaceGraph { file: String },
    /// Shift one coordinate down, or fully to the closed-below fixed point.
    Shift {
        #[arg(long)]
        x: Option<u32>,
        file: String,
    },
    /// Enumerate all d-maximum classes of the n-cube.
    EnumMax {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// All maximum classes of VC dimension d+k containing the class.
    Embed {
        #[arg(long)]
        k: u32,
        /// Cap on queue pushes; a capped run reports no classes.
        #[arg(long)]
        budget: Option<u64>,
        file: String,
    },
    /// Embed into a maximum class by deficiency-reducing projections.
    EmbedDeficiency { file: String },
    /// Generate a class from one of the built-in families.
    Gen {
        #[command(subcommand)]
        family: commands::GenFamily,
    },
    /// Canonical representatives of all maximal-but-not-maximum VC-d classes.
    ClassifyMaximal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    if args.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(1);
    }
    match commands::run(&args.command, args.json) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                commands::CliError::Core(Error::InvariantViolation { .. }) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
