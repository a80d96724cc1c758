//! Command-line front end. Exit codes: 0 success or pass, 1 a check or
//! suite failed, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rankdual_core::ground::subsets_by_size;
use rankdual_core::{
    check_antimatroid, check_demimatroid_characterization, check_demimatroid_triple,
    check_dual_greedoid, check_greedoid, check_matroid, contract, convex_closure, delete,
    direct_sum, dual, enumerate_tables, feasible_descriptors, minor, tutte_recursive, tutte_subset,
    uniform_matroid, Constraint, DemiTriple, EnumSpec, GroundSet, MinorSpec, Pivot, RankTable,
    Subset,
};

use crate::doc::{rank_table_json, read_document, Document};
use crate::suite::{run_suite, Params, SuiteError, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rankdual",
    version,
    about = "Duality, minors, Tutte functions and axiom checks for integer rank functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Input document (JSON); `-` reads standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the dual rank table r*(A) = |A| + r(S - A) - r(S).
    Dual(Input),
    /// Delete one element.
    Delete {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'p', long = "element")]
        element: String,
    },
    /// Contract one element: r(A + p) - r(p).
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'p', long = "element")]
        element: String,
    },
    /// Contract a set and delete a disjoint set.
    Minor {
        #[command(flatten)]
        input: Input,
        /// Comma-separated labels, e.g. `a,b`.
        #[arg(long, default_value = "")]
        contract: String,
        #[arg(long, default_value = "")]
        delete: String,
    },
    /// Direct sum of two tables over disjoint ground sets.
    Sum {
        /// Exactly two documents.
        #[arg(long = "in", value_name = "FILE", num_args = 1, required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Print the two-variable Tutte function in canonical form.
    Tutte {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Subset)]
        method: Method,
        /// Pivot rule for the recursive method.
        #[arg(long, value_enum, default_value_t = PivotArg::Lowest)]
        pivot: PivotArg,
    },
    /// Check an axiom system; exits 1 with witnesses if it fails.
    Check {
        #[arg(value_enum)]
        system: SystemArg,
        #[command(flatten)]
        input: Input,
        /// Second table `s` for the demi-matroid triple check.
        #[arg(long, value_name = "FILE")]
        with: Option<PathBuf>,
    },
    /// Convex closure in a full antimatroid.
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        set: String,
    },
    /// Feasible sets, bases, spanning sets, fullness and loops.
    Feasible(Input),
    /// Build a rank table from a structure.
    Build {
        #[command(subcommand)]
        what: Build,
    },
    /// Enumerate every table of a class on n elements.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// all-normalized-subcardinal-monotone, greedoid, matroid or full-antimatroid.
        #[arg(long, default_value = "all-normalized-subcardinal-monotone")]
        constraint: String,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        /// `key=value` pairs, comma separated or repeated.
        #[arg(long)]
        params: Vec<String>,
        /// Seed for randomized suites.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        fail_fast: bool,
        /// List suites and their parameters.
        #[arg(long)]
        list: bool,
    },
    /// Report normalization, subcardinality, nonnegativity, monotonicity and
    /// maximality of r(S).
    Validate(Input),
}

#[derive(Debug, Subcommand)]
enum Build {
    /// Branching greedoid of a rooted-graph document.
    Branching(Input),
    /// Pruning antimatroid of a tree document.
    Pruning(Input),
    /// Uniform matroid r(A) = min(|A|, k).
    Uniform {
        #[arg(long)]
        labels: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Subset,
    Recursive,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PivotArg {
    Lowest,
    Highest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    Matroid,
    Greedoid,
    DualGreedoid,
    Antimatroid,
    Demimatroid,
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn load(input: &Input) -> anyhow::Result<RankTable> {
    Ok(read_document(&input.input)?.to_table())
}

/// `a,b`, `{a,b}` or empty.
fn parse_set(ground: &GroundSet, text: &str) -> anyhow::Result<Subset> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let labels = inner.split(',').map(str::trim).filter(|s| !s.is_empty());
    ground.subset(labels).with_context(|| format!("set {text:?}"))
}

fn element(ground: &GroundSet, label: &str) -> anyhow::Result<usize> {
    Ok(ground.element(label)?)
}

fn emit(out: &mut dyn Write, t: &RankTable) -> anyhow::Result<i32> {
    out.write_all(rank_table_json(t).as_bytes())?;
    Ok(EXIT_OK)
}

fn show_family(ground: &GroundSet, sets: &[Subset]) -> String {
    let mut sorted = sets.to_vec();
    sorted.sort_by_key(|s| (s.len(), s.bits()));
    sorted
        .iter()
        .map(|&s| ground.show(s))
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Dual(input) => emit(out, &dual(&load(&input)?)?),
        Command::Delete { input, element: p } => {
            let t = load(&input)?;
            let p = element(t.ground(), &p)?;
            emit(out, &delete(&t, p)?)
        }
        Command::Contract { input, element: p } => {
            let t = load(&input)?;
            let p = element(t.ground(), &p)?;
            emit(out, &contract(&t, p)?)
        }
        Command::Minor {
            input,
            contract: c,
            delete: d,
        } => {
            let t = load(&input)?;
            let spec = MinorSpec::new(parse_set(t.ground(), &c)?, parse_set(t.ground(), &d)?)?;
            emit(out, &minor(&t, &spec)?)
        }
        Command::Sum { inputs } => {
            if inputs.len() != 2 {
                bail!("sum takes exactly two --in documents, got {}", inputs.len());
            }
            let a = read_document(&inputs[0])?.to_table();
            let b = read_document(&inputs[1])?.to_table();
            emit(out, &direct_sum(&a, &b)?)
        }
        Command::Tutte {
            input,
            method,
            pivot,
        } => {
            let t = load(&input)?;
            let p = match (method, pivot) {
                (Method::Subset, _) => tutte_subset(&t)?,
                (Method::Recursive, PivotArg::Lowest) => tutte_recursive(&t, &Pivot::Lowest)?,
                (Method::Recursive, PivotArg::Highest) => tutte_recursive(&t, &Pivot::Highest)?,
            };
            writeln!(out, "{p}")?;
            Ok(EXIT_OK)
        }
        Command::Check {
            system,
            input,
            with,
        } => {
            let t = load(&input)?;
            if with.is_some() && system != SystemArg::Demimatroid {
                bail!("--with applies only to `check demimatroid`");
            }
            let rep = match system {
                SystemArg::Matroid => check_matroid(&t),
                SystemArg::Greedoid => check_greedoid(&t),
                SystemArg::DualGreedoid => check_dual_greedoid(&t),
                SystemArg::Antimatroid => check_antimatroid(&t),
                SystemArg::Demimatroid => match with {
                    Some(path) => {
                        let s = read_document(&path)?.to_table();
                        check_demimatroid_triple(&DemiTriple::new(t.clone(), s)?)
                    }
                    None => check_demimatroid_characterization(&t),
                },
            };
            out.write_all(rep.render(t.ground()).as_bytes())?;
            Ok(if rep.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Closure { input, set } => {
            let t = load(&input)?;
            let a = parse_set(t.ground(), &set)?;
            let c = convex_closure(&t, a)?;
            writeln!(out, "{}", t.ground().show(c))?;
            Ok(EXIT_OK)
        }
        Command::Feasible(input) => {
            let t = load(&input)?;
            let g = t.ground();
            let d = feasible_descriptors(&t);
            writeln!(out, "feasible: {}", show_family(g, d.feasible.members()))?;
            writeln!(out, "bases: {}", show_family(g, &d.bases))?;
            writeln!(out, "spanning: {}", show_family(g, &d.spanning))?;
            writeln!(out, "full: {}", d.full)?;
            writeln!(out, "loops: {}", g.show(d.loops))?;
            Ok(EXIT_OK)
        }
        Command::Build { what } => match what {
            Build::Branching(input) => match read_document(&input.input)? {
                Document::RootedGraph(g) => emit(out, &rankdual_core::branching_greedoid(&g)),
                other => bail!("build branching needs a rooted-graph document, got {}", other.kind()),
            },
            Build::Pruning(input) => match read_document(&input.input)? {
                Document::Tree(t) => emit(out, &rankdual_core::pruning_antimatroid(&t)),
                other => bail!("build pruning needs a tree document, got {}", other.kind()),
            },
            Build::Uniform { labels, k } => {
                let labels = labels.split(',').map(str::trim).filter(|s| !s.is_empty());
                emit(out, &uniform_matroid(labels, k)?)
            }
        },
        Command::Enumerate {
            n,
            constraint,
            count,
        } => {
            let c: Constraint = constraint.parse().map_err(|()| {
                let names: Vec<&str> = Constraint::ALL.iter().map(|c| c.name()).collect();
                anyhow::anyhow!("unknown constraint {constraint:?}; expected one of {}", names.join(", "))
            })?;
            let tables = enumerate_tables(EnumSpec::new(n, c)?)?;
            if count {
                writeln!(out, "count: {}", tables.count())?;
                return Ok(EXIT_OK);
            }
            let ground = GroundSet::alphabetic(n)?;
            let order = subsets_by_size(n);
            let header: Vec<String> = order.iter().map(|&s| ground.show(s)).collect();
            writeln!(out, "subsets: {}", header.join(" "))?;
            let mut k = 0u64;
            for t in tables {
                let row: Vec<String> = order.iter().map(|&s| t.rank(s).to_string()).collect();
                writeln!(out, "{}", row.join(" "))?;
                k += 1;
            }
            writeln!(out, "count: {k}")?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            params,
            seed,
            fail_fast,
            list,
        } => {
            if list {
                for s in SUITES {
                    writeln!(out, "{}: {} [{}]", s.name, s.about, s.keys.join(", "))?;
                }
                return Ok(EXIT_OK);
            }
            let name = suite.expect("clap requires --suite unless --list");
            let mut p = Params::parse(&params)?;
            if let Some(s) = seed {
                p.set("seed", s);
            }
            if fail_fast {
                p.set("fail_fast", true);
            }
            let result = run_suite(&name, &p).map_err(|e| match e {
                SuiteError::MissingSeed(s) => {
                    anyhow::anyhow!("suite {s} is randomized; pass --seed")
                }
                other => other.into(),
            })?;
            out.write_all(result.report().as_bytes())?;
            writeln!(err, "elapsed: {:.3}s", result.elapsed.as_secs_f64())?;
            Ok(if result.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Validate(input) => {
            let t = load(&input)?;
            let v = t.validate();
            let g = t.ground();
            let flag = |name: &str, w: Option<String>| match w {
                None => format!("{name}: yes"),
                Some(w) => format!("{name}: no ({w})"),
            };
            writeln!(out, "normalized: {}", if v.normalized { "yes" } else { "no" })?;
            writeln!(out, "{}", flag("subcardinal", v.subcardinal.witness().map(|a| format!("A={}", g.show(a)))))?;
            writeln!(out, "{}", flag("nonnegative", v.nonnegative.witness().map(|a| format!("A={}", g.show(a)))))?;
            writeln!(
                out,
                "{}",
                flag(
                    "monotone",
                    v.monotone
                        .witness()
                        .map(|c| format!("A={}, B={}", g.show(c.lower), g.show(c.upper())))
                )
            )?;
            writeln!(out, "{}", flag("rank-S-maximum", v.rank_s_maximum.witness().map(|a| format!("A={}", g.show(a)))))?;
            Ok(EXIT_OK)
        }
    }
}
