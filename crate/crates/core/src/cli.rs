//! The `idcalc` command line. Exit status 0 means yes (derivable, satisfied,
//! no violations), 1 means no, 2 means a usage, input or internal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::atom::{AtomKind, Problem};
use crate::countermodel::{counter, CounterResult, Semantics};
use crate::derive::{derives, Completeness, Judgment, Limits};
use crate::error::{Error, Result};
use crate::parser::{parse_atom_list, parse_problem, parse_team_csv, print_atom};
use crate::pregeometry::{audit_axioms, VectorSpace};
use crate::team::{mine_with, satisfies_all, MineMode};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "idcalc", version, about = "Dependence and independence atoms: derivations, countermodels, team checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the query of a problem file is derivable from its premises.
    Entails {
        problem: PathBuf,
        /// Print the derivation tree.
        #[arg(long)]
        proof: bool,
    },
    /// Build a verified countermodel, or print a derivation if there is none.
    Counter {
        problem: PathBuf,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Team)]
        semantics: SemanticsArg,
        /// Write the witness here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate every atom of a file on a team.
    Check { team: PathBuf, atoms: PathBuf },
    /// List the atoms of one kind that a team satisfies.
    Mine {
        team: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: AtomKind,
        #[arg(long)]
        max_arity: usize,
        /// Keep implied dependence atoms instead of only the strongest ones.
        #[arg(long)]
        all: bool,
    },
    /// Spot-check the pregeometry axioms on GF(p)^k, given as `fp:k`.
    Audit {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SemanticsArg {
    Team,
    Pregeometry,
}

fn parse_kind(word: &str) -> std::result::Result<AtomKind, String> {
    AtomKind::from_keyword(word).ok_or_else(|| format!("expected one of dep, abs, ind, cind; got `{word}`"))
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_ERROR;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_YES;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "idcalc: {e}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn read_problem(path: &Path) -> Result<Problem> {
    parse_problem(&read(path)?)
}

fn print_judgment(out: &mut dyn Write, problem: &Problem, judgment: &Judgment, proof: bool) -> Result<()> {
    if judgment.derivable {
        writeln!(out, "derivable")?;
        if proof {
            if let Some(p) = &judgment.proof {
                write!(out, "{}", p.render(problem.vocab()))?;
            }
        }
    } else if judgment.completeness == Completeness::SoundOnly {
        writeln!(out, "not derivable (system incomplete)")?;
    } else {
        writeln!(out, "not derivable")?;
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Entails { problem, proof } => {
            let problem = read_problem(&problem)?;
            let judgment = derives(&problem, &Limits::from_env()?)?;
            print_judgment(out, &problem, &judgment, proof)?;
            Ok(if judgment.derivable { EXIT_YES } else { EXIT_NO })
        }
        Command::Counter {
            problem,
            semantics,
            output,
        } => {
            let problem = read_problem(&problem)?;
            let semantics = match semantics {
                SemanticsArg::Team => Semantics::Team,
                SemanticsArg::Pregeometry => Semantics::Pregeometry,
            };
            match counter(&problem, semantics, &Limits::from_env()?)? {
                CounterResult::Derivable(judgment) => {
                    print_judgment(out, &problem, &judgment, true)?;
                    Ok(EXIT_NO)
                }
                CounterResult::Witness(w) => {
                    match output {
                        Some(path) => std::fs::write(path, w.to_text())?,
                        None => write!(out, "{}", w.to_text())?,
                    }
                    Ok(EXIT_YES)
                }
            }
        }
        Command::Check { team, atoms } => {
            let team = parse_team_csv(read(&team)?.as_bytes())?;
            let atoms = parse_atom_list(&read(&atoms)?, team.vocab())?;
            let report = satisfies_all(&team, &atoms)?;
            write!(out, "{}", report.to_lines(&team))?;
            Ok(if report.all_hold() { EXIT_YES } else { EXIT_NO })
        }
        Command::Mine {
            team,
            kind,
            max_arity,
            all,
        } => {
            let team = parse_team_csv(read(&team)?.as_bytes())?;
            let mode = if all { MineMode::All } else { MineMode::Minimal };
            for atom in mine_with(&team, kind, max_arity, mode)? {
                writeln!(out, "{}", print_atom(&atom, team.vocab()))?;
            }
            Ok(EXIT_YES)
        }
        Command::Audit { space, samples, seed } => {
            let space = VectorSpace::from_spec(&space)?;
            let report = audit_axioms(&space, samples, seed);
            write!(out, "{}", report.render())?;
            Ok(if report.passed() { EXIT_YES } else { EXIT_NO })
        }
    }
}
