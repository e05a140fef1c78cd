mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use homhopf::foundation::{parse_rational, Rational, TruncSeries};
use homhopf::freehom::{exp_series, format_poly, format_tensor, parse_poly, FreeHom};
use homhopf::grouplike::{exp_u, validate_sequence, GroupLikeSequence, SequenceVerdict};
use homhopf::homlie::{fixtures, HomLieAlgebra};
use homhopf::hopf::{Check, HomHopf, IndexVerdict, Poly, Tensor};
use homhopf::ueg::{
    format_upoly, format_utensor, parse_upoly, UEnvelope, UEquality, DEFAULT_KEY_CAP,
};
use homhopf::verify::{run_suite, Suite};
use homhopf::{Error, Result};
use serde::Deserialize;

use report::{Exit, Report};

#[derive(Parser)]
#[command(
    name = "homhopf",
    version,
    about = "Hom-Hopf algebras of leaf-weighted trees"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Extra leaves above the input when choosing the first enveloping-algebra level.
    #[arg(long, global = true, default_value_t = 1)]
    slack: usize,
    /// Highest level tried when escalating in the enveloping algebra.
    #[arg(long, global = true, default_value_t = 6)]
    level_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Hom-Lie algebra JSON file, or `builtin:NAME` (sl2, sl2-twisted,
    /// sl2-twisted-center, aff1, aff1-twisted, nilpotent3). Without it,
    /// expressions live in the free one-generator algebra.
    #[arg(long)]
    algebra: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hom-Lie axioms of an algebra file.
    Validate { file: PathBuf },
    /// Normal form of an expression.
    Nf {
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Decide whether two expressions are equal in the quotient.
    Equal {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Fixed level instead of escalation (enveloping algebra only).
        #[arg(long)]
        level: Option<usize>,
    },
    /// Coproduct of an expression.
    Coproduct {
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Antipode of an expression.
    Antipode {
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Invertibility index of an expression.
    AntipodeIndex {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 8)]
        max_k: u32,
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Truncated exponentials exp_0 .. exp_P.
    Exp {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Element of the algebra, e.g. `E + 1/2*H` (requires --algebra).
        #[arg(long)]
        element: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        scalar: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Validate a formal group-like sequence stored as JSON.
    GrouplikeCheck {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        level: usize,
    },
}

/// Expressions live either in the free algebra or in an enveloping algebra.
enum Space {
    Free(FreeHom),
    Envelope(UEnvelope),
}

impl Space {
    fn open(arg: &AlgebraArg, cli: &Cli) -> Result<Space> {
        Ok(match &arg.algebra {
            None => Space::Free(FreeHom::new()),
            Some(spec) => Space::Envelope(UEnvelope::with_limits(
                load_algebra(spec)?,
                cli.slack,
                cli.level_cap,
                DEFAULT_KEY_CAP,
            )),
        })
    }

    fn hopf(&self) -> &dyn HomHopf {
        match self {
            Space::Free(f) => f,
            Space::Envelope(u) => u,
        }
    }

    fn parse(&self, text: &str) -> Result<Poly> {
        match self {
            Space::Free(_) => Ok(parse_poly(text)?),
            Space::Envelope(u) => parse_upoly(u, text),
        }
    }

    fn show(&self, p: &Poly) -> String {
        match self {
            Space::Free(_) => format_poly(p),
            Space::Envelope(u) => format_upoly(p, u.names()),
        }
    }

    fn show_tensor(&self, t: &Tensor) -> String {
        match self {
            Space::Free(_) => format_tensor(t),
            Space::Envelope(u) => format_utensor(t, u.names()),
        }
    }

    fn show_series(&self, s: &TruncSeries<Poly>) -> String {
        let parts: Vec<String> = s
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => self.show(c),
                1 => format!("nu*({})", self.show(c)),
                _ => format!("nu^{i}*({})", self.show(c)),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn load_algebra(spec: &str) -> Result<HomLieAlgebra> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok(match name {
            "sl2" => fixtures::sl2(),
            "sl2-twisted" => fixtures::sl2_twisted(),
            "sl2-twisted-center" => fixtures::sl2_twisted_with_center(),
            "aff1" => fixtures::nonabelian2(),
            "aff1-twisted" => fixtures::nonabelian2_twisted(),
            "nilpotent3" => fixtures::abelian_nilpotent3(),
            other => return Err(Error::Algebra(format!("unknown builtin algebra `{other}`"))),
        });
    }
    HomLieAlgebra::from_json(&read(Path::new(spec))?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn parse_scalar(text: &str) -> Result<Rational> {
    Ok(parse_rational(text)?)
}

fn validate(file: &Path) -> Result<Report> {
    let g = HomLieAlgebra::from_json(&read(file)?)?;
    let base = |verdict, exit| {
        Report::new("validate", verdict, exit)
            .field("name", g.name())
            .field("dim", g.dim())
            .field("basis", g.basis_names().join(" "))
    };
    Ok(match g.validate() {
        Ok(()) => base("valid", Exit::Ok),
        Err(v) => base("invalid", Exit::Failed)
            .field("law", v.law.to_string())
            .field("witness", v.describe(g.basis_names())),
    })
}

fn normal_form(space: &Space, expr: &str, level: Option<usize>) -> Result<Report> {
    let p = space.parse(expr)?;
    let report = Report::new("nf", "ok", Exit::Ok).field("input", space.show(&p));
    Ok(match space {
        Space::Free(f) => {
            let classes: Vec<String> = FreeHom::graded_decompose(&p)
                .into_keys()
                .filter(|(n, _)| *n > 0)
                .map(|(n, s)| {
                    let ctx = f.class_context(&s);
                    format!(
                        "class ({n}, ({})): basis {}, quotient dimension {}",
                        join(&s),
                        ctx.basis().len(),
                        ctx.quotient_dimension()
                    )
                })
                .collect();
            report
                .field("normal_form", space.show(&f.normal_form(&p)))
                .field("classes", classes)
        }
        Space::Envelope(u) => {
            let level = level.unwrap_or_else(|| u.default_level(&p));
            report
                .field("level", level)
                .field("normal_form", space.show(&u.normal_form_at(&p, level)?))
        }
    })
}

fn join(s: &[u32]) -> String {
    s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn equal(space: &Space, lhs: &str, rhs: &str, level: Option<usize>) -> Result<Report> {
    let a = space.parse(lhs)?;
    let b = space.parse(rhs)?;
    Ok(match space {
        Space::Free(f) => match f.equal_mod_i(&a, &b) {
            homhopf::freehom::QuotientEquality::Equal(certs) => {
                let lines: Vec<String> = certs
                    .iter()
                    .map(|((n, s), cert)| {
                        let ctx = f.class_context(s);
                        let rows: Vec<String> = cert
                            .iter()
                            .map(|(&r, c)| format!("{c} * ({})", space.show(&ctx.raw_row_poly(r))))
                            .collect();
                        format!("class ({n}, ({})): {}", join(s), rows.join(" + "))
                    })
                    .collect();
                Report::new("equal", "equal", Exit::Ok).field("certificate", lines)
            }
            homhopf::freehom::QuotientEquality::NotEqual {
                class: (n, s),
                residual,
            } => Report::new("equal", "not equal", Exit::Failed)
                .field("class", format!("({n}, ({}))", join(&s)))
                .field("residual", space.show(&residual)),
        },
        Space::Envelope(u) => {
            let verdict = match level {
                Some(n) => u.equal_at(&a, &b, n)?,
                None => u.equal_mod_u(&a, &b)?,
            };
            match verdict {
                UEquality::Equal { certificate, level } => {
                    let rows: Vec<String> = certificate
                        .iter()
                        .map(|(r, c)| format!("{c} * {r:?}"))
                        .collect();
                    Report::new("equal", "equal", Exit::Ok)
                        .field("level", level)
                        .field("certificate", rows)
                }
                UEquality::NotProvablyEqualUpTo { level, residual } => {
                    Report::new("equal", "not provably equal", Exit::Inconclusive)
                        .field("level", level)
                        .field("residual", space.show(&residual))
                }
            }
        }
    })
}

fn index(space: &Space, expr: &str, max_k: u32) -> Result<Report> {
    let x = space.parse(expr)?;
    let alg = space.hopf();
    let report = |verdict, exit| Report::new("antipode-index", verdict, exit).field("max_k", max_k);
    Ok(match alg.invertibility_index(&x, max_k)? {
        IndexVerdict::Index(k) => report("index", Exit::Ok).field("index", k),
        IndexVerdict::AtMost(k) => report("index at most", Exit::Ok).field("index", k),
        IndexVerdict::NotFoundUpTo(k) => {
            let (l, _) = alg.antipode_defects(&x);
            let witness = space.show(&alg.alpha(&l, k));
            let exit = match space {
                Space::Free(_) => Exit::Failed,
                Space::Envelope(_) => Exit::Inconclusive,
            };
            report("no index found", exit).field("defect", witness)
        }
    })
}

fn exp(space: &Space, element: Option<&str>, scalar: &str, order: usize) -> Result<Report> {
    let s = parse_scalar(scalar)?;
    let terms: Vec<TruncSeries<Poly>> = match (space, element) {
        (Space::Free(_), None) => (0..=order).map(|p| exp_series(&s, p)).collect(),
        (Space::Free(_), Some(_)) => {
            return Err(Error::Domain("--element needs --algebra".into()));
        }
        (Space::Envelope(u), Some(e)) => {
            let x = u.algebra().parse_element(e)?;
            (0..=order).map(|p| exp_u(u, &x, &s, p)).collect()
        }
        (Space::Envelope(_), None) => {
            return Err(Error::Domain("--algebra needs --element".into()));
        }
    };
    let lines: Vec<String> = terms
        .iter()
        .enumerate()
        .map(|(p, t)| format!("exp_{p} = {}", space.show_series(t)))
        .collect();
    Ok(Report::new("exp", "ok", Exit::Ok)
        .field("scalar", s.to_string())
        .field("order", order)
        .field("terms", lines))
}

/// `terms[p]` lists the coefficients of `nu^0 .. nu^p` in `g_p`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceFile {
    bound: u32,
    terms: Vec<Vec<String>>,
}

fn grouplike_check(space: &Space, file: &Path) -> Result<Report> {
    let data: SequenceFile = serde_json::from_str(&read(file)?)?;
    let mut terms = Vec::new();
    for (p, coeffs) in data.terms.iter().enumerate() {
        if coeffs.len() != p + 1 {
            return Err(Error::Domain(format!(
                "term {p} has {} coefficients, expected {}",
                coeffs.len(),
                p + 1
            )));
        }
        let parsed = coeffs
            .iter()
            .map(|c| space.parse(c))
            .collect::<Result<Vec<_>>>()?;
        terms.push(TruncSeries::new(parsed));
    }
    if terms.is_empty() {
        return Err(Error::Domain("the sequence has no terms".into()));
    }
    let seq = GroupLikeSequence::new(terms, data.bound);
    let report = |verdict, exit| {
        Report::new("grouplike-check", verdict, exit)
            .field("bound", data.bound)
            .field("cap", seq.cap())
    };
    Ok(match validate_sequence(space.hopf(), &seq)? {
        SequenceVerdict::Ok => report("valid", Exit::Ok),
        SequenceVerdict::Violation {
            clause,
            index,
            witness,
        } => report("violation", Exit::Failed)
            .field("clause", clause.to_string())
            .field("term", index)
            .field("witness", witness),
        SequenceVerdict::Inconclusive {
            clause,
            index,
            witness,
        } => report("inconclusive", Exit::Inconclusive)
            .field("clause", clause.to_string())
            .field("term", index)
            .field("witness", witness),
    })
}

fn verify(suite: &str, level: usize) -> Result<Report> {
    let suite: Suite = suite.parse()?;
    let outcomes = run_suite(suite, level);
    let mut exit = Exit::Ok;
    let lines: Vec<String> = outcomes
        .iter()
        .map(|o| match &o.check {
            Check::Pass => format!("pass  [{}] {}", o.suite, o.statement),
            Check::Fail(w) => {
                exit = Exit::Failed;
                format!("FAIL  [{}] {}: {w}", o.suite, o.statement)
            }
            Check::Inconclusive(w) => {
                if exit == Exit::Ok {
                    exit = Exit::Inconclusive;
                }
                format!("inconclusive  [{}] {}: {w}", o.suite, o.statement)
            }
        })
        .collect();
    let passed = outcomes.iter().filter(|o| o.check.is_pass()).count();
    let verdict = match exit {
        Exit::Ok => "pass",
        Exit::Failed => "fail",
        _ => "inconclusive",
    };
    Ok(Report::new("verify", verdict, exit)
        .field("suite", suite.to_string())
        .field("level", level)
        .field("passed", format!("{passed}/{}", outcomes.len()))
        .field("results", lines))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Nf {
            expr,
            algebra,
            level,
        } => normal_form(&Space::open(algebra, cli)?, expr, *level),
        Command::Equal {
            lhs,
            rhs,
            algebra,
            level,
        } => equal(&Space::open(algebra, cli)?, lhs, rhs, *level),
        Command::Coproduct { expr, algebra } => {
            let space = Space::open(algebra, cli)?;
            let p = space.parse(expr)?;
            Ok(Report::new("coproduct", "ok", Exit::Ok)
                .field("input", space.show(&p))
                .field("coproduct", space.show_tensor(&space.hopf().coproduct(&p))))
        }
        Command::Antipode { expr, algebra } => {
            let space = Space::open(algebra, cli)?;
            let p = space.parse(expr)?;
            Ok(Report::new("antipode", "ok", Exit::Ok)
                .field("input", space.show(&p))
                .field("antipode", space.show(&space.hopf().antipode(&p))))
        }
        Command::AntipodeIndex {
            expr,
            max_k,
            algebra,
        } => index(&Space::open(algebra, cli)?, expr, *max_k),
        Command::Exp {
            algebra,
            element,
            scalar,
            order,
        } => exp(
            &Space::open(algebra, cli)?,
            element.as_deref(),
            scalar,
            *order,
        ),
        Command::GrouplikeCheck { file, algebra } => {
            grouplike_check(&Space::open(algebra, cli)?, file)
        }
        Command::Verify { suite, level } => verify(suite, *level),
    }
}

fn error_report(e: &Error) -> Report {
    let exit = match e {
        Error::ResourceLimit { .. } => Exit::Inconclusive,
        _ => Exit::Usage,
    };
    let mut r = Report::new("error", "error", exit).field("message", e.to_string());
    if let Error::Parse(p) = e {
        r = r.field("position", p.position);
    }
    r
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli).unwrap_or_else(|e| error_report(&e));
    if cli.json {
        println!("{}", report.to_json());
    } else if report.command == "error" {
        eprint!("{}", report.to_text());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit as u8)
}
