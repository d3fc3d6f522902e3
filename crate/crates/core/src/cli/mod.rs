//! The `taut` command line front end.
//!
//! Every verb produces an [`Outcome`]: plain text, a JSON value (printed
//! with sorted keys under `--json`) and a verdict. Exit codes are 0 for
//! success, 1 for a failed verification and 2 for usage or input errors.

mod suites;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{parse_rational, Rational, TermOrder, Vars};
use crate::error::{Error, Result};
use crate::rootsys::{parse_subset, RootSystem};
use crate::tautbuild::{build_tauthat, family_spec, family_weight, fl_ideal, TautSpec};
use crate::topo::{rank_comparison, FamilyCase};
use crate::weyl::{holonomic_rank_with, left_groebner, transpose, WeylContext, WeylElement};

pub use suites::{run_suite, SUITES};

#[derive(Parser, Debug)]
#[command(
    name = "taut",
    version,
    about = "Exact computations with tautological systems of differential operators",
    after_help = "Term orders: set TAUT_ORDER to grevlex (default), grlex or lex."
)]
pub struct Cli {
    /// Emit JSON with sorted keys instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// beta-parameter of a highest weight.
    Beta(WeightArgs),
    /// Dimension of the irreducible representation with a highest weight.
    Dim(WeightArgs),
    /// Half-sum of the positive roots outside a parabolic subsystem.
    #[command(name = "delta-i")]
    DeltaI(SubsetArgs),
    /// Whether the anticanonical weight of G/P_I is ample.
    Fano(SubsetArgs),
    /// Generators of the tautological left ideal.
    Build(IdealArgs),
    /// Fourier-Laplace transform of a generator set.
    Fl(IdealArgs),
    /// Normal form of an operator modulo a left ideal.
    Nf(MemberArgs),
    /// Whether an operator lies in a left ideal.
    Member(MemberArgs),
    /// Holonomic rank. Families and spec files are transformed by
    /// Fourier-Laplace first; explicit generators are used as given.
    Rank(RankArgs),
    /// Formal adjoint of an operator.
    Transpose(OperatorArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    /// Root system, e.g. A1, G2, A1xA1.
    #[arg(long = "type")]
    pub root_type: String,
    /// Weight in fundamental coordinates, e.g. 1,1 or 3.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
}

#[derive(Args, Debug)]
pub struct SubsetArgs {
    #[arg(long = "type")]
    pub root_type: String,
    /// 1-based simple roots of the Levi part, e.g. 1,3; empty for the Borel.
    #[arg(long, default_value = "")]
    pub subset: String,
}

#[derive(Args, Debug, Default)]
pub struct IdealArgs {
    /// Shipped family: rnc:k or segre.
    #[arg(long, conflicts_with_all = ["spec", "gens"])]
    pub family: Option<String>,
    /// beta(e) for a family; defaults to the beta-parameter of its weight.
    #[arg(long, requires = "family", allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Tautological data in JSON.
    #[arg(long, conflicts_with = "gens")]
    pub spec: Option<PathBuf>,
    /// Explicit generator, repeatable.
    #[arg(long = "gen", allow_hyphen_values = true)]
    pub gens: Vec<String>,
    /// Comma-separated variables for explicit generators.
    #[arg(long, default_value = "x")]
    pub vars: String,
}

#[derive(Args, Debug)]
pub struct MemberArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// The operator to reduce.
    #[arg(long, allow_hyphen_values = true)]
    pub op: String,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// Compare with the Euler-characteristic prediction (families only).
    #[arg(long, requires = "family")]
    pub crosscheck: bool,
}

#[derive(Args, Debug)]
pub struct OperatorArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub op: String,
    #[arg(long, default_value = "x")]
    pub vars: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name; `list` prints the available ones.
    pub suite: String,
    /// Degree bound for degree-dependent suites.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    fn success(text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            ok: true,
        }
    }

    fn verdict(ok: bool, text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            ok,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

fn context(vars: &str) -> Result<WeylContext> {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(Error::Invalid("no variables given".into()));
    }
    Ok(WeylContext::new(Vars::new(names)))
}

fn order() -> Result<TermOrder> {
    TermOrder::from_env()
}

fn show(ops: &[WeylElement], order: &TermOrder) -> Vec<String> {
    ops.iter().map(|g| g.to_string_with(order)).collect()
}

/// Where a generator set comes from.
enum Source {
    Built(TautSpec),
    Explicit(Vec<WeylElement>),
}

impl IdealArgs {
    fn source(&self) -> Result<Source> {
        if let Some(family) = &self.family {
            let beta = match &self.beta {
                Some(b) => parse_rational(b)?,
                None => {
                    let (rs, mu) = family_weight(family)?;
                    rs.beta_value(&mu)?
                }
            };
            return Ok(Source::Built(family_spec(family, beta)?));
        }
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let value: Value =
                serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            return Ok(Source::Built(TautSpec::from_json(&value)?));
        }
        if self.gens.is_empty() {
            return Err(Error::Invalid("give --family, --spec or at least one --gen".into()));
        }
        let ctx = context(&self.vars)?;
        let gens = self
            .gens
            .iter()
            .map(|g| WeylElement::parse(g, &ctx))
            .collect::<Result<Vec<_>>>()?;
        Ok(Source::Explicit(gens))
    }

    fn generators(&self) -> Result<Vec<WeylElement>> {
        match self.source()? {
            Source::Built(spec) => build_tauthat(&spec),
            Source::Explicit(g) => Ok(g),
        }
    }
}

fn weight_input(args: &WeightArgs) -> Result<(RootSystem, crate::rootsys::Weight)> {
    let rs = RootSystem::parse(&args.root_type)?;
    let mu = rs.parse_weight(&args.mu)?;
    Ok((rs, mu))
}

/// Executes a parsed command.
pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Beta(a) => {
            let (rs, mu) = weight_input(a)?;
            let b = rs.beta_value(&mu)?;
            Ok(Outcome::success(
                b.to_string(),
                json!({"type": rs.name(), "mu": mu.to_json(), "beta": b.to_string()}),
            ))
        }
        Command::Dim(a) => {
            let (rs, mu) = weight_input(a)?;
            let d = rs.weyl_dim(&mu)?;
            Ok(Outcome::success(
                d.to_string(),
                json!({"type": rs.name(), "mu": mu.to_json(), "dim": d}),
            ))
        }
        Command::DeltaI(a) => {
            let rs = RootSystem::parse(&a.root_type)?;
            let subset = parse_subset(&a.subset)?;
            let d = rs.delta_i(&subset)?;
            Ok(Outcome::success(
                d.to_string(),
                json!({"type": rs.name(), "subset": subset, "delta_i": d.to_json()}),
            ))
        }
        Command::Fano(a) => {
            let rs = RootSystem::parse(&a.root_type)?;
            let subset = parse_subset(&a.subset)?;
            let ok = rs.fano_check(&subset)?;
            Ok(Outcome::verdict(
                ok,
                ok.to_string(),
                json!({"type": rs.name(), "subset": subset, "fano": ok}),
            ))
        }
        Command::Build(a) => {
            let o = order()?;
            let gens = a.generators()?;
            let lines = show(&gens, &o);
            Ok(Outcome::success(
                lines.join("\n"),
                json!({"vars": gens[0].context().vars().names(), "generators": lines}),
            ))
        }
        Command::Fl(a) => {
            let o = order()?;
            let gens = fl_ideal(&a.generators()?)?;
            let lines = show(&gens, &o);
            Ok(Outcome::success(
                lines.join("\n"),
                json!({"vars": gens[0].context().vars().names(), "generators": lines}),
            ))
        }
        Command::Nf(a) | Command::Member(a) => {
            let o = order()?;
            let gens = a.ideal.generators()?;
            let p = WeylElement::parse(&a.op, gens[0].context())?;
            let gb = left_groebner(&gens, &o)?;
            let r = gb.normal_form(&p)?;
            let text = r.to_string_with(&o);
            if matches!(cmd, Command::Nf(_)) {
                Ok(Outcome::success(
                    text.clone(),
                    json!({"op": p.to_string_with(&o), "normal_form": text}),
                ))
            } else {
                let member = r.is_zero();
                Ok(Outcome::verdict(
                    member,
                    member.to_string(),
                    json!({"op": p.to_string_with(&o), "member": member, "normal_form": text}),
                ))
            }
        }
        Command::Rank(a) => {
            let o = order()?;
            if a.crosscheck {
                let family = a.ideal.family.as_deref().expect("clap enforces --family");
                let spec = match a.ideal.source()? {
                    Source::Built(s) => s,
                    Source::Explicit(_) => unreachable!("family given"),
                };
                let beta = spec.beta()[spec.rep().scaling_index()].clone();
                let case = FamilyCase::named(family, beta)?;
                let check = rank_comparison(&case)?;
                let agrees = check.agrees();
                return Ok(Outcome::verdict(
                    agrees,
                    format!(
                        "rank: {}\nexpected: {}\nagree: {agrees}",
                        check.computed, check.expected
                    ),
                    json!({
                        "family": family,
                        "beta": case.beta.to_string(),
                        "rank": check.computed.to_string(),
                        "expected": check.expected,
                        "agree": agrees,
                    }),
                ));
            }
            let gens = match a.ideal.source()? {
                Source::Built(spec) => fl_ideal(&build_tauthat(&spec)?)?,
                Source::Explicit(g) => g,
            };
            let r = holonomic_rank_with(&gens, &o)?;
            Ok(Outcome::success(r.to_string(), json!({"rank": r.to_string()})))
        }
        Command::Transpose(a) => {
            let o = order()?;
            let ctx = context(&a.vars)?;
            let p = WeylElement::parse(&a.op, &ctx)?;
            let t = transpose(&p)?.to_string_with(&o);
            Ok(Outcome::success(
                t.clone(),
                json!({"op": p.to_string_with(&o), "transpose": t}),
            ))
        }
        Command::Verify(a) => {
            let beta: Option<Rational> = a.beta.as_deref().map(parse_rational).transpose()?;
            run_suite(&a.suite, a.k, beta)
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code together with what should be written to stdout
/// and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (2, String::new(), text)
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
            } else {
                out.text.clone()
            };
            stdout.push('\n');
            (out.exit_code(), stdout, String::new())
        }
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}
