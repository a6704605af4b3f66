//! The `ckstar` command-line tool.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input.

pub mod expr;
pub mod matrix_io;
pub mod schema;

use std::collections::BTreeSet;

use ckstar::bialgebra::{coefficient_text, gauge, Family, SigmaRule};
use ckstar::permutative_reps::{describe_decomposition, verify_decomposition};
use ckstar::{counit, decompose, delta, k_groups, CycleWord, SumElement, ZeroOneMatrix};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::expr::parse_expression;
use crate::matrix_io::load_matrix;
use crate::schema::*;

#[derive(Debug, Parser)]
#[command(
    name = "ckstar",
    version,
    about = "Exact computations in Cuntz-Krieger algebras and their bialgebra"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kronecker-monoid queries on a 0-1 matrix.
    #[command(subcommand)]
    Matrix(MatrixCommand),
    /// K-groups of O_A from the Smith form of 1 - A^t.
    Ktheory {
        /// Matrix file, `F<k>` or `1`.
        matrix: String,
        /// Also print the Smith diagonal.
        #[arg(long)]
        smith: bool,
    },
    /// Normal forms, comultiplication, counit, gauge action, membership.
    #[command(subcommand)]
    Expr(ExprCommand),
    /// Tensor products of cyclic permutative representations.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Words of the subshift of finite type.
    #[command(subcommand)]
    Shift(ShiftCommand),
}

#[derive(Debug, Subcommand)]
pub enum MatrixCommand {
    /// Irreducibility, permutation and simplicity flags.
    Classify { matrix: String },
    /// All Kronecker factorisations `B (x) C`.
    Factor { matrix: String },
}

#[derive(Debug, Args)]
pub struct ExprArgs {
    /// Context matrix: file, `F<k>` or `1`.
    #[arg(long)]
    pub context: String,
    /// Expression, e.g. "s1 s2* + 1/2 I".
    pub expression: String,
}

#[derive(Debug, Subcommand)]
pub enum ExprCommand {
    Normalize(ExprArgs),
    Delta(ExprArgs),
    Counit(ExprArgs),
    Gauge {
        #[command(flatten)]
        args: ExprArgs,
        /// Exponent `a` of `z^a`.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
    Member {
        #[command(flatten)]
        args: ExprArgs,
        /// C, AF, SF, CK:first, CK:last, CK:first,last or CK:<letters>.
        #[arg(long)]
        family: String,
    },
}

#[derive(Debug, Args)]
pub struct RepArgs {
    #[arg(short = 'A')]
    pub a: String,
    #[arg(short = 'B')]
    pub b: String,
    /// Cycle word over A, e.g. 1,2.
    #[arg(short = 'J')]
    pub j: String,
    /// Cycle word over B.
    #[arg(short = 'K')]
    pub k: String,
}

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    Decompose(RepArgs),
    Verify {
        #[command(flatten)]
        args: RepArgs,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ShiftCommand {
    Words {
        #[arg(short = 'A')]
        a: String,
        #[arg(short = 'l')]
        length: usize,
        #[arg(long)]
        count_only: bool,
    },
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn check(passed: bool, stdout: String) -> Self {
        Outcome {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

type Run = Result<Outcome, String>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(&cli).unwrap_or_else(Outcome::input_error)
}

pub fn execute(cli: &Cli) -> Run {
    let json = cli.json;
    match &cli.command {
        Command::Matrix(MatrixCommand::Classify { matrix }) => {
            let c: ClassifyJson = load(matrix)?.classify().into();
            emit(json, &c, || {
                format!(
                    "nondegenerate: {}\nirreducible: {}\npermutation: {}\nsimple_ck: {}\n",
                    c.nondegenerate, c.irreducible, c.permutation, c.simple_ck
                )
            })
        }
        Command::Matrix(MatrixCommand::Factor { matrix }) => {
            let pairs = load(matrix)?.divisors();
            let out: Vec<DivisorJson> = pairs
                .iter()
                .map(|p| DivisorJson {
                    left: (&p.left).into(),
                    right: (&p.right).into(),
                })
                .collect();
            emit(json, &out, || {
                pairs
                    .iter()
                    .map(|p| format!("{} (x) {}\n", p.left, p.right))
                    .collect()
            })
        }
        Command::Ktheory { matrix, smith } => {
            let k = k_groups(&load(matrix)?);
            let diag: Vec<String> = k.smith_diagonal.iter().map(|d| d.to_string()).collect();
            let out = KTheoryJson {
                k0: (&k.k0).into(),
                k1: (&k.k1).into(),
                smith_diagonal: smith.then(|| diag.clone()),
            };
            emit(json, &out, || {
                let mut s = format!("K0 = {}, K1 = {}\n", k.k0, k.k1);
                if *smith {
                    s.push_str(&format!("smith diagonal = {}\n", diag.join(", ")));
                }
                s
            })
        }
        Command::Expr(cmd) => expr_command(json, cmd),
        Command::Rep(cmd) => rep_command(json, cmd),
        Command::Shift(ShiftCommand::Words {
            a,
            length,
            count_only,
        }) => {
            let a = load(a)?;
            let count = ckstar::subshift::count_words(&a, *length);
            let words: Option<Vec<Vec<u32>>> = (!count_only).then(|| {
                ckstar::words(&a, *length)
                    .iter()
                    .map(|w| w.letters().to_vec())
                    .collect()
            });
            let out = WordsJson {
                length: *length,
                count: count.to_string(),
                words,
            };
            emit(json, &out, || match &out.words {
                None => format!("{count}\n"),
                Some(ws) => ws
                    .iter()
                    .map(|w| format!("{}\n", join_letters(w)))
                    .collect(),
            })
        }
    }
}

fn expr_command(json: bool, cmd: &ExprCommand) -> Run {
    let parse = |a: &ExprArgs| -> Result<ckstar::AlgebraElement, String> {
        let ctx = load(&a.context)?;
        parse_expression(&a.expression, &ctx).map_err(|e| e.to_string())
    };
    match cmd {
        ExprCommand::Normalize(a) => {
            let x = parse(a)?;
            emit(json, &ElementJson::from(&x), || format!("{x}\n"))
        }
        ExprCommand::Delta(a) => {
            let t = delta(&SumElement::from(parse(a)?));
            emit(json, &TensorJson::from(&t), || format!("{t}\n"))
        }
        ExprCommand::Counit(a) => {
            let c = counit(&SumElement::from(parse(a)?));
            emit(json, &CounitJson::from(&c), || {
                format!("{}\n", coefficient_text(&c))
            })
        }
        ExprCommand::Gauge { args, power } => {
            let x = parse(args)?;
            let g = gauge(*power, &SumElement::from(x.clone()));
            let out = GaugeJson::new(*power, x.context(), &g);
            emit(json, &out, || {
                if out.parts.is_empty() {
                    return "0\n".into();
                }
                out.parts
                    .iter()
                    .map(|p| format!("{}: {}\n", p.phase, p.element.text))
                    .collect()
            })
        }
        ExprCommand::Member { args, family } => {
            let fam = parse_family(family)?;
            let x = SumElement::from(parse(args)?);
            let out = MemberJson {
                family: fam.to_string(),
                member: fam.contains(&x),
                delta_closed: fam.closed_under_delta(&x),
            };
            let passed = out.member && out.delta_closed;
            let text = format!(
                "member of {}: {}\ndelta closed: {}\n",
                out.family, out.member, out.delta_closed
            );
            let stdout = if json { to_json(&out) } else { text };
            Ok(Outcome::check(passed, stdout))
        }
    }
}

fn rep_command(json: bool, cmd: &RepCommand) -> Run {
    let inputs =
        |r: &RepArgs| -> Result<(ZeroOneMatrix, ZeroOneMatrix, CycleWord, CycleWord), String> {
            let (a, b) = (load(&r.a)?, load(&r.b)?);
            let j = CycleWord::new(&a, &parse_letters(&r.j)?).map_err(|e| format!("-J: {e}"))?;
            let k = CycleWord::new(&b, &parse_letters(&r.k)?).map_err(|e| format!("-K: {e}"))?;
            Ok((a, b, j, k))
        };
    match cmd {
        RepCommand::Decompose(r) => {
            let (a, b, j, k) = inputs(r)?;
            let d = decompose(&j, &k);
            emit(json, &DecompositionJson::from(&d), || {
                describe_decomposition(&d, &format!("{a}(x){b}"))
                    .iter()
                    .map(|l| format!("{l}\n"))
                    .collect()
            })
        }
        RepCommand::Verify { args, depth } => {
            let (_, _, j, k) = inputs(args)?;
            let d = decompose(&j, &k);
            let verified = verify_decomposition(&j, &k, &d, *depth);
            let out = VerifyJson {
                depth: *depth,
                components: d.count(),
                verified,
            };
            let stdout = if json {
                to_json(&out)
            } else {
                format!(
                    "{j} (x) {k}: {} components, verified at depth {depth}: {verified}\n",
                    out.components
                )
            };
            Ok(Outcome::check(verified, stdout))
        }
    }
}

fn load(arg: &str) -> Result<ZeroOneMatrix, String> {
    load_matrix(arg).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("schema types serialize");
    s.push('\n');
    s
}

fn emit<T: Serialize>(json: bool, v: &T, text: impl FnOnce() -> String) -> Run {
    Ok(Outcome::ok(if json { to_json(v) } else { text() }))
}

fn join_letters(w: &[u32]) -> String {
    w.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `1,2,3` as letters.
pub fn parse_letters(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad letter '{}' in word '{s}'", t.trim()))
        })
        .collect()
}

pub fn parse_family(s: &str) -> Result<Family, String> {
    let upper = s.trim().to_ascii_uppercase();
    Ok(match upper.as_str() {
        "C" | "C_*" | "CSTAR" => Family::CStar,
        "AF" | "AF_*" => Family::AF,
        "SF" | "SF_*" => Family::SF,
        _ => {
            let rule = upper.strip_prefix("CK:").ok_or_else(|| {
                format!("unknown family '{s}' (expected C, AF, SF or CK:<letters>)")
            })?;
            Family::CkSigma(match rule {
                "FIRST" => SigmaRule::First,
                "LAST" => SigmaRule::Last,
                "FIRST,LAST" => SigmaRule::FirstAndLast,
                _ => SigmaRule::Fixed(parse_letters(rule)?.into_iter().collect::<BTreeSet<u32>>()),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("ckstar").chain(args.iter().copied()))
    }

    #[test]
    fn factor_full_four() {
        let o = run_args(&["matrix", "factor", "F4"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "1 (x) F4\nF2 (x) F2\nF4 (x) 1\n");
    }

    #[test]
    fn ktheory_full_four() {
        assert_eq!(run_args(&["ktheory", "F4"]).stdout, "K0 = Z/3, K1 = 0\n");
    }

    #[test]
    fn delta_of_generator() {
        let o = run_args(&["expr", "delta", "--context", "F4", "s1"]);
        assert_eq!(o.stdout.lines().count(), 3, "{}", o.stdout);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_args(&["expr", "normalize", "--context", "F2", "s3"]).code,
            2
        );
        assert_eq!(run_args(&["matrix", "frobnicate", "F2"]).code, 2);
        assert_eq!(
            run_args(&["expr", "member", "--context", "F2", "--family", "AF", "s1"]).code,
            1
        );
        assert_eq!(
            run_args(&[
                "expr",
                "member",
                "--context",
                "F2",
                "--family",
                "AF",
                "s1 s2*"
            ])
            .code,
            0
        );
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn families() {
        assert_eq!(parse_family("af"), Ok(Family::AF));
        assert_eq!(
            parse_family("CK:first,last"),
            Ok(Family::CkSigma(SigmaRule::FirstAndLast))
        );
        assert_eq!(
            parse_family("CK:2,3"),
            Ok(Family::CkSigma(SigmaRule::Fixed([2, 3].into())))
        );
        assert!(parse_family("XY").is_err());
    }
}
