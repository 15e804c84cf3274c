//! Command-line driver. Exit codes: 0 yes/success, 1 no/rejected, 2 error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::basic::{reduce_aut_to_iso, reduce_iso_to_aut};
use crate::dispatch::{classify_instance, solve_with, Engine};
use crate::error::{Error, Result};
use crate::gen::{gen_planted, gen_sat_formula, PlantedParams, Shape};
use crate::hardness::{cnf_1in3_to_listaut, lift_bipartite_subdivision, lift_split_clique};
use crate::instance::{verify_list_iso, ListInstance};
use crate::io;
use crate::oracle::count_list_isos;

#[derive(Parser, Debug)]
#[command(name = "listiso", version, about = "List-restricted graph isomorphism solver")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an instance and print the answer.
    Solve {
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Width bound for the treewidth engine.
        #[arg(long)]
        k: Option<usize>,
        /// Print the solve time in milliseconds to standard error.
        #[arg(long)]
        time: bool,
        /// Instance file, or - for standard input.
        file: PathBuf,
    },
    /// Check a mapping against an instance.
    Verify { file: PathBuf, mapping: PathBuf },
    /// Count list-compatible isomorphisms by brute force.
    Count { file: PathBuf },
    /// Generate instances or formulas.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Apply a reduction and print the resulting instance.
    Reduce {
        #[arg(value_enum)]
        kind: Reduction,
        file: PathBuf,
    },
    /// Print the engine that automatic dispatch would use.
    Classify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Instance with a hidden isomorphism planted in the lists.
    Planted(PlantedArgs),
    /// Random positive 1-in-3 SAT formula.
    Sat {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct PlantedArgs {
    #[arg(long, value_enum)]
    shape: ShapeArg,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    list_width: usize,
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algo {
    Auto,
    Oracle,
    Lists2,
    Deg2,
    Tree,
    Interval,
    Treewidth,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ShapeArg {
    Tree,
    Cycle,
    Interval,
    Deg2,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Reduction {
    Iso2aut,
    Aut2iso,
    SatGadget,
    LiftBipartite,
    LiftSplit,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        if path == Path::new("-") {
            self.stdin
                .read_to_end(&mut buf)
                .map_err(|e| Error::InvalidInstance(format!("reading standard input: {e}")))?;
        } else {
            buf =
                std::fs::read(path).map_err(|e| Error::InvalidInstance(format!("reading {}: {e}", path.display())))?;
        }
        Ok(buf)
    }

    fn instance(&mut self, path: &Path) -> Result<ListInstance> {
        io::parse_instance(&self.read(path)?)
    }

    fn line(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.cmd, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> Result<i32> {
    match cmd {
        Command::Solve { algo, k, time, file } => {
            let inst = io.instance(&file)?;
            let engine = match algo {
                Algo::Auto => classify_instance(&inst),
                Algo::Oracle => Engine::Oracle,
                Algo::Lists2 => Engine::Lists2,
                Algo::Deg2 => Engine::Deg2,
                Algo::Tree => Engine::Tree,
                Algo::Interval => Engine::Interval,
                Algo::Treewidth => Engine::Treewidth,
            };
            let start = Instant::now();
            let r = solve_with(&inst, engine, k)?;
            if time {
                let _ = writeln!(io.err, "time_ms: {:.3}", start.elapsed().as_secs_f64() * 1e3);
            }
            let (json, code) = io::emit_result(&r);
            io.line(&json);
            Ok(code)
        }
        Command::Verify { file, mapping } => {
            let inst = io.instance(&file)?;
            let Some(pi) = io::parse_mapping(&io.read(&mapping)?)? else {
                return Err(Error::InvalidInstance("mapping file holds a 'no' answer".into()));
            };
            let ok = verify_list_iso(&inst, &pi);
            io.line(&format!("{{\"valid\":{ok}}}"));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Count { file } => {
            let inst = io.instance(&file)?;
            io.line(&format!("{{\"count\":{}}}", count_list_isos(&inst)));
            Ok(0)
        }
        Command::Gen(GenCommand::Planted(a)) => {
            let shape = match a.shape {
                ShapeArg::Tree => Shape::Tree,
                ShapeArg::Cycle => Shape::Cycle,
                ShapeArg::Interval => Shape::Interval,
                ShapeArg::Deg2 => Shape::Deg2,
            };
            let inst =
                gen_planted(&PlantedParams { shape, n: a.n, seed: a.seed, list_width: a.list_width, noise: a.noise })?;
            io.line(&io::emit_instance(&inst));
            Ok(0)
        }
        Command::Gen(GenCommand::Sat { vars, clauses, seed }) => {
            io.line(&io::emit_cnf(&gen_sat_formula(vars, clauses, seed)?));
            Ok(0)
        }
        Command::Reduce { kind, file } => {
            let text = match kind {
                Reduction::SatGadget => io::emit_gadget(&cnf_1in3_to_listaut(&io::parse_cnf(&io.read(&file)?)?)?),
                Reduction::Iso2aut => io::emit_instance(&reduce_iso_to_aut(&io.instance(&file)?)),
                Reduction::Aut2iso => io::emit_instance_with_h(&reduce_aut_to_iso(&io.instance(&file)?)?),
                Reduction::LiftBipartite => io::emit_instance(&lift_bipartite_subdivision(&io.instance(&file)?)?),
                Reduction::LiftSplit => io::emit_instance(&lift_split_clique(&io.instance(&file)?)?),
            };
            io.line(&text);
            Ok(0)
        }
        Command::Classify { file } => {
            let inst = io.instance(&file)?;
            io.line(&format!("{{\"engine\":\"{}\"}}", classify_instance(&inst)));
            Ok(0)
        }
    }
}
