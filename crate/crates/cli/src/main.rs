//! `guessgraph`: guessing numbers, defects, bounds and network coding from
//! the command line.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "guessgraph", version, about = "Guessing games on digraphs")]
pub struct Cli {
    /// Print `key=value` records only.
    #[arg(long, global = true)]
    pub machine: bool,

    /// Write generated digraphs as Graphviz DOT.
    #[arg(long, global = true)]
    pub dot: bool,

    /// Worker threads; the solvers currently run on one thread.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct Alphabet {
    /// Alphabet size, any integer >= 2.
    #[arg(short = 's', long = "alphabet", default_value_t = 2)]
    pub s: u64,
}

#[derive(Args)]
pub struct Output {
    /// Write the digraph here instead of standard output.
    #[arg(short, long)]
    pub output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum UnionArg {
    Disjoint,
    Unidirectional,
    Bidirectional,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    ThreeT,
    EvenHalf,
    Doubling,
}

#[derive(Subcommand)]
pub enum Command {
    /// Guessing number by maximum independent set search.
    Guess {
        digraph: String,
        #[command(flatten)]
        alphabet: Alphabet,
        /// Search node budget.
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
        /// Largest s^n per strong component.
        #[arg(long, default_value_t = 1 << 14)]
        guard: u64,
        /// Write the fixed configurations and protocol tables to this file.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Information defect by exact colouring.
    Defect {
        digraph: String,
        #[command(flatten)]
        alphabet: Alphabet,
        #[arg(long, default_value_t = 1 << 22)]
        budget: u64,
        #[arg(long, default_value_t = 1 << 14)]
        guard: u64,
    },
    /// Linear guessing number over a prime field.
    Linear {
        digraph: String,
        /// Field size, a prime.
        #[arg(short = 'p', long = "field", default_value_t = 2)]
        p: u64,
        /// Largest p^|E| searched exhaustively per strong component.
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
    },
    /// Every structural bound on g, g_linear and b.
    Bounds {
        digraph: String,
        #[command(flatten)]
        alphabet: Alphabet,
    },
    /// Maximum induced acyclic subgraph.
    Mas {
        digraph: String,
        #[arg(long, default_value_t = 1 << 25)]
        budget: u64,
    },
    /// Structure, bounds and, when affordable, exact values.
    Report {
        digraph: String,
        #[command(flatten)]
        alphabet: Alphabet,
    },
    /// Digraph of a binary polynomial on n vertices, with its property checks.
    CyclicGen {
        /// Coefficients `c0 c1 ...` as a bit string, or `x^4+x^2+x+1`.
        #[arg(long)]
        poly: String,
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Digraph of the simplex code of dimension l.
    Simplex {
        #[arg(short)]
        l: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Cyclic-code digraphs without bidirectional edges.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyArg,
        /// Length parameter of three-t and doubling.
        #[arg(long)]
        t: Option<usize>,
        /// Half length for even-half.
        #[arg(long)]
        p: Option<usize>,
        /// Base polynomial for doubling.
        #[arg(long)]
        poly: Option<String>,
        /// Doubling exponent.
        #[arg(long)]
        l: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Strong product of two digraphs.
    Product {
        first: String,
        second: String,
        #[command(flatten)]
        out: Output,
    },
    /// Disjoint, unidirectional or bidirectional union.
    Union {
        #[arg(long, value_enum)]
        kind: UnionArg,
        first: String,
        second: String,
        #[command(flatten)]
        out: Output,
    },
    /// k interlinked copies of a digraph.
    Expand {
        digraph: String,
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// m linked copies of the k-th strong power of the l-cycle.
    Thm3 {
        #[arg(short)]
        l: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Solvability of a multiple-unicast instance, with a certificate.
    NetcodeSolve {
        instance: String,
        #[command(flatten)]
        alphabet: Alphabet,
    },
    /// `.nc` to its merged digraph, or `.dg` to an instance.
    NetcodeConvert {
        input: String,
        /// Vertices kept as intermediates when converting a digraph,
        /// comma separated; a maximum acyclic set by default.
        #[arg(long, value_delimiter = ',')]
        acyclic: Option<Vec<usize>>,
        #[command(flatten)]
        out: Output,
    },
    /// Edge list of the guessing graph.
    GgExport {
        digraph: String,
        #[command(flatten)]
        alphabet: Alphabet,
        #[arg(long, default_value_t = 1 << 14)]
        guard: u64,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
