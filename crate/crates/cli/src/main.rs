// Copyright 2026 The latpick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `latpick`: lattice-polygon areas, counts and primitive triangulations.
//!
//! Exit codes: 0 success, 1 output not writable, 2 input unreadable or
//! unparseable, 3 invalid polygon, 4 enumeration guard exceeded, 5 internal
//! invariant violation.

mod commands;
mod error;
mod input;
mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::{exit, CliError};
use crate::input::{read_document, Format};

#[derive(Parser)]
#[command(name = "latpick", version, about = "Exact lattice-polygon geometry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Polygon file (`.json` is read as structured, anything else as plain)
    file: PathBuf,
    /// Override the format guessed from the file extension
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact twice-area and area
    Area(InputArgs),
    /// Print interior and boundary lattice-point counts
    Count(InputArgs),
    /// Check Pick's formula against the counted lattice points
    Pick(InputArgs),
    /// Print the primitive triangles, one per line
    Triangulate {
        #[command(flatten)]
        input: InputArgs,
        /// Append the split-event log
        #[arg(long)]
        events: bool,
    },
    /// Render outline, triangulation and lattice points as SVG
    Svg {
        #[command(flatten)]
        input: InputArgs,
        /// Output path
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let load = |args: &InputArgs| read_document(&args.file, args.format)?.into_polygon();
    match cli.command {
        Command::Area(args) => Ok(commands::area(&load(&args)?)),
        Command::Count(args) => commands::count(&load(&args)?),
        Command::Pick(args) => commands::pick(&load(&args)?),
        Command::Triangulate { input, events } => commands::triangulate(&load(&input)?, events),
        Command::Svg { input, output } => {
            commands::svg(&load(&input)?, &output)?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(exit::WRITE as u8);
            }
            ExitCode::from(exit::OK as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
