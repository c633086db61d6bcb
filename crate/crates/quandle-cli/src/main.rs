//! `quandle`: command-line interface to the quandle toolkit.
//!
//! Exit codes: 0 success, 1 domain error, 2 input error, 3 resource
//! error. With `--json`, output is a single line of key-sorted JSON;
//! identical invocations produce byte-identical output.

mod commands;
mod formats;

use clap::{Parser, Subcommand, ValueEnum};
use quandle_core::Error;

/// Fixed default seed for sampled checks; never time-derived.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Parser)]
#[command(name = "quandle", version, about = "Quandle and monodromy toolkit")]
pub struct Cli {
    /// Emit key-sorted JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for sampled property checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Resource cap for orbit, closure, and homology computations.
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpDir {
    /// x ▷ y (positive twist).
    Rt,
    /// x ◁ y (negative twist).
    Lt,
    /// Matrix-conjugation cross-check (torus only).
    Oracle,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Check the quandle axioms: exhaustively for finite targets,
    /// by sampling for "torus" and "alternating:RING:GENUS".
    Axioms {
        /// Quandle constructor, file, "torus", or "alternating:Z/5:2".
        target: String,
        /// Sample count for the non-finite targets.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Count quandle homomorphisms between two finite quandles.
    HomCount {
        src: String,
        tgt: String,
        /// Also list every homomorphism as an image array.
        #[arg(long)]
        list: bool,
    },
    /// Apply a torus Dehn-quandle operation to two slopes.
    TorusOp {
        dir: OpDir,
        a: String,
        b: String,
    },
    /// Apply an alternating-quandle operation to two homology elements.
    HqOp {
        dir: OpDir,
        x: String,
        y: String,
        /// Reduce the inputs to ±1 orbits and operate in HD.
        #[arg(long)]
        reduced: bool,
    },
    /// Reduce a homology element to its canonical ±1 representative.
    Reduce { x: String },
    /// Monodromy data: checks, moves, canonical forms, invariants.
    Monodromy {
        #[command(subcommand)]
        cmd: MonoCmd,
    },
    /// Integral quandle (or rack) homology of a finite quandle.
    Qhomology {
        quandle: String,
        n: usize,
        /// Use the rack complex (all tuples) instead of the quandle one.
        #[arg(long)]
        rack: bool,
    },
    /// Congruence quotients of a finite quandle.
    Quotient {
        #[command(subcommand)]
        cmd: QuotCmd,
    },
}

#[derive(Subcommand)]
pub enum MonoCmd {
    /// Sphere-base check: is the total monodromy the identity?
    Check { file: String },
    /// Lexicographically minimal tuple in the Hurwitz orbit
    /// (finite targets, at most 8 cycles).
    Canonical {
        file: String,
        /// Also close under cyclic rotation (sphere base only).
        #[arg(long)]
        cyclic: bool,
        /// Also close under global conjugation by inner automorphisms.
        #[arg(long)]
        conj: bool,
    },
    /// Hurwitz-invariant quantities of the datum.
    Invariants { file: String },
    /// Apply one elementary Hurwitz move and print the updated datum.
    Move {
        file: String,
        /// Position i: the move acts on cycles i and i+1.
        #[arg(long)]
        index: usize,
        /// Apply the inverse move.
        #[arg(long)]
        backward: bool,
    },
    /// Evaluate the quandle monodromy on a free-quandle element
    /// such as "s0 ^ [g1+, g2-]".
    Eval { file: String, element: String },
}

#[derive(Subcommand)]
pub enum QuotCmd {
    /// Universal involutory quotient (forces (x ▷ y) ▷ y = x).
    Involutory { quandle: String },
    /// Universal medial quotient (forces the exchange identity).
    Abelian { quandle: String },
    /// Smallest congruence containing the given pairs, e.g. [[0,1]].
    Pairs { quandle: String, pairs: String },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => 2,
        Error::Domain(_) => 1,
        Error::Resource(_) => 3,
        Error::Internal(_) => 1,
    }
}

fn main() {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.human);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
