use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fliess_core::admissible::{
    dendriform_left_lc, dendriform_right_lc, dendriform_star_lc, m_eval_lc, m_prelie_lc, to_m_basis,
};
use fliess_core::fliess::{compose, reduced_compose};
use fliess_core::hopf::{
    coproduct_lc, format_tensor, kernel_prelie_coproduct, prelie_coproduct_lc,
};
use fliess_core::lincomb::JsonBasis;
use fliess_core::morphisms::{phi_cpl, phi_pl_lc, psi_lc};
use fliess_core::ptree::{pt_counts_by_series, pt_enumerate, rigidity_coproduct_lc};
use fliess_core::series::{series_fh, series_fibonacci_fv};
use fliess_core::verify::{self, Suite};
use fliess_core::words::{format_word_lincomb, shuffle_lc};
use fliess_core::{algebra, Error, Expr, LinComb, NCSeries, PosWord, Sort, Truncation};

/// Exact computations with Fliess series, their coordinate Hopf algebra and
/// the prelie structures around it.
#[derive(Parser)]
#[command(name = "fliess", version)]
struct Cli {
    /// Print results as JSON with exact rational strings.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle product of two word combinations.
    Shuffle { left: String, right: String },
    /// Fliess composition c∘d of two series.
    Compose {
        left: String,
        right: String,
        /// Keep only words of length at most L.
        #[arg(long, value_name = "L")]
        truncate: Option<usize>,
    },
    /// Reduced composition c∘d - d.
    Rcompose {
        left: String,
        right: String,
        #[arg(long, value_name = "L")]
        truncate: Option<usize>,
    },
    /// Coproduct of a combination of coordinate monomials, e.g. "X_01*X_1".
    Coproduct { monomials: String },
    /// Prelie coproduct of a combination of words.
    PrelieCoproduct { words: String },
    /// Basis of the kernel of the prelie coproduct in one degree.
    KernelDelta {
        #[arg(long)]
        degree: usize,
    },
    /// Prelie product of two word combinations.
    Prelie { left: String, right: String },
    /// List isomorphism classes of partitioned trees.
    PtreeEnum {
        /// Number of vertices.
        vertices: usize,
        /// Decorations are drawn from 1..=D.
        #[arg(long, default_value_t = 1, value_name = "D")]
        decorations: u32,
        /// Print only the number of classes.
        #[arg(long)]
        count: bool,
    },
    /// Prelie product of two partitioned-tree combinations.
    PtreePrelie { left: String, right: String },
    /// Shuffle product of two partitioned-tree combinations.
    PtreeShuffle { left: String, right: String },
    /// Rigidity coproduct of a partitioned-tree combination.
    RigidityDelta { trees: String },
    /// Evaluate partitioned trees on words (1 -> empty word, 2 -> x1).
    PhiCpl { trees: String },
    /// Evaluate rooted trees on words.
    PhiPl { trees: String },
    /// Send rooted trees to partitioned trees.
    Psi { trees: String },
    /// Expand pos-words in the m basis as words.
    MEval { poswords: String },
    /// Prelie product of admissible words in the m basis.
    MPrelie { left: String, right: String },
    /// Coordinates of a homogeneous word combination in the m basis.
    ToMBasis {
        words: String,
        #[arg(long)]
        degree: usize,
    },
    /// Dendriform products of pos-word combinations.
    Dendriform {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Op::Star)]
        op: Op,
    },
    /// Graded dimensions up to a degree.
    Dims {
        #[arg(long, default_value_t = 10)]
        degree: usize,
        /// Also list partitioned-tree counts with this many decorations.
        #[arg(long, value_name = "D")]
        decorations: Option<u32>,
    },
    /// Run a seeded property suite.
    Verify {
        /// hopf, prelie, comprelie, ptree, morphisms, dendriform, enumeration or all.
        suite: String,
        #[arg(long, default_value_t = 4)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances per property.
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Star,
    Left,
    Right,
}

enum Outcome {
    Done,
    Failed,
}

fn parse(sort: Sort, text: &str) -> Result<Expr, Error> {
    Expr::parse(sort, text, Truncation::Exact)
}

fn words(text: &str) -> Result<LinComb<fliess_core::BinaryWord>, Error> {
    parse(Sort::Word, text)?.into_words()
}

fn ptrees(text: &str) -> Result<LinComb<fliess_core::PartitionedTree>, Error> {
    parse(Sort::PTree, text)?.into_ptrees()
}

fn rtrees(text: &str) -> Result<LinComb<fliess_core::RootedTree>, Error> {
    parse(Sort::RTree, text)?.into_rtrees()
}

fn poswords(text: &str) -> Result<LinComb<PosWord>, Error> {
    fliess_core::admissible::parse_posword_lincomb(text)
}

fn series(text: &str, truncate: Option<usize>) -> Result<NCSeries, Error> {
    let t = truncate.map_or(Truncation::Exact, Truncation::Truncated);
    NCSeries::parse(text, t)
}

struct Printer {
    json: bool,
}

impl Printer {
    fn expr(&self, value: Expr) {
        if self.json {
            println!("{}", value.to_json());
        } else {
            println!("{value}");
        }
    }

    fn tensor<A, B>(&self, x: &LinComb<(A, B)>)
    where
        A: Ord + Clone + Display + JsonBasis,
        B: Ord + Clone + Display + JsonBasis,
    {
        if self.json {
            println!("{}", x.to_json());
        } else {
            println!("{}", format_tensor(x));
        }
    }

    fn raw(&self, json: Value, text: impl Display) {
        if self.json {
            println!("{json}");
        } else {
            println!("{text}");
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let out = Printer { json: cli.json };
    match cli.command {
        Command::Shuffle { left, right } => {
            out.expr(Expr::Words(shuffle_lc(&words(&left)?, &words(&right)?)))
        }
        Command::Compose {
            left,
            right,
            truncate,
        } => out.expr(Expr::Series(compose(
            &series(&left, truncate)?,
            &series(&right, truncate)?,
        ))),
        Command::Rcompose {
            left,
            right,
            truncate,
        } => out.expr(Expr::Series(reduced_compose(
            &series(&left, truncate)?,
            &series(&right, truncate)?,
        ))),
        Command::Coproduct { monomials } => {
            let x = fliess_core::hopf::parse_monomial_lincomb(&monomials)?;
            out.tensor(&coproduct_lc(&x));
        }
        Command::PrelieCoproduct { words: text } => {
            out.tensor(&prelie_coproduct_lc(&words(&text)?))
        }
        Command::KernelDelta { degree } => {
            let basis = kernel_prelie_coproduct(degree)?;
            let json = Value::Array(basis.iter().map(LinComb::to_json).collect());
            let text: Vec<String> = basis.iter().map(format_word_lincomb).collect();
            out.raw(
                json,
                format!("dimension {}\n{}", basis.len(), text.join("\n")).trim_end(),
            );
        }
        Command::Prelie { left, right } => out.expr(Expr::Words(
            fliess_core::prelie_words::prelie(&words(&left)?, &words(&right)?),
        )),
        Command::PtreeEnum {
            vertices,
            decorations,
            count,
        } => {
            let trees = pt_enumerate(vertices, decorations)?;
            if count {
                out.raw(json!(trees.len()), trees.len());
            } else {
                let json = Value::Array(trees.iter().map(|t| t.to_json()).collect());
                let text: Vec<String> = trees.iter().map(ToString::to_string).collect();
                out.raw(json, text.join("\n"));
            }
        }
        Command::PtreePrelie { left, right } => out.expr(Expr::PTrees(algebra::prelie(
            &ptrees(&left)?,
            &ptrees(&right)?,
        ))),
        Command::PtreeShuffle { left, right } => out.expr(Expr::PTrees(algebra::shuffle(
            &ptrees(&left)?,
            &ptrees(&right)?,
        ))),
        Command::RigidityDelta { trees } => out.tensor(&rigidity_coproduct_lc(&ptrees(&trees)?)),
        Command::PhiCpl { trees } => out.expr(Expr::Words(phi_cpl(&ptrees(&trees)?)?)),
        Command::PhiPl { trees } => out.expr(Expr::Words(phi_pl_lc(&rtrees(&trees)?))),
        Command::Psi { trees } => out.expr(Expr::PTrees(psi_lc(&rtrees(&trees)?))),
        Command::MEval { poswords: text } => out.expr(Expr::Words(m_eval_lc(&poswords(&text)?))),
        Command::MPrelie { left, right } => out.expr(Expr::PosWords(m_prelie_lc(
            &poswords(&left)?,
            &poswords(&right)?,
        )?)),
        Command::ToMBasis {
            words: text,
            degree,
        } => out.expr(Expr::PosWords(to_m_basis(&words(&text)?, degree)?)),
        Command::Dendriform { left, right, op } => {
            let (x, y) = (poswords(&left)?, poswords(&right)?);
            let z = match op {
                Op::Star => dendriform_star_lc(&x, &y)?,
                Op::Left => dendriform_left_lc(&x, &y)?,
                Op::Right => dendriform_right_lc(&x, &y)?,
            };
            out.expr(Expr::PosWords(z));
        }
        Command::Dims {
            degree,
            decorations,
        } => dims(&out, degree, decorations)?,
        Command::Verify {
            suite,
            size,
            seed,
            instances,
        } => {
            let suite: Suite = suite.parse()?;
            let report = verify::run(
                suite,
                verify::Config {
                    size,
                    seed,
                    instances,
                },
            );
            out.raw(report.to_json(), &report);
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Done)
}

fn dims(out: &Printer, degree: usize, decorations: Option<u32>) -> Result<(), Error> {
    let fv = series_fibonacci_fv(degree);
    let fh = series_fh(degree);
    let census = decorations
        .map(|d| pt_counts_by_series(degree.max(1), d))
        .transpose()?;
    let mut rows = Vec::new();
    let mut lines = vec![match decorations {
        Some(_) => "k\tdim V_k\tdim H_k\tforests\ttrees".to_string(),
        None => "k\tdim V_k\tdim H_k".to_string(),
    }];
    for k in 1..=degree {
        let (v, h) = (fv.coeff(k).to_string(), fh.coeff(k).to_string());
        let mut row = json!({ "k": k, "dim_v": v, "dim_h": h });
        let mut line = format!("{k}\t{v}\t{h}");
        if let Some((forests, trees)) = &census {
            row["forests"] = json!(forests[k - 1].to_string());
            row["trees"] = json!(trees[k - 1].to_string());
            line.push_str(&format!("\t{}\t{}", forests[k - 1], trees[k - 1]));
        }
        rows.push(row);
        lines.push(line);
    }
    out.raw(Value::Array(rows), lines.join("\n"));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e @ Error::Fault(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
