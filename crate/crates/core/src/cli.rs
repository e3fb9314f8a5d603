//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a `check` found counterexamples, 2 bad input,
//! 3 a higher-rank `support` query no settled rule covers.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::charring::demazure_character;
use crate::error::{Error, Result};
use crate::modweights::{check_prime, phi_lambda_p, ModularProfile};
use crate::rootsys::{RootSystemData, WeightVec};
use crate::supports::{classify, concrete_support, g_saturate, Outcome, PairOrder, SupportQuery, VarietyExpr};
use crate::sweep::{self, Execution};
use crate::weyl::{longest_element, WeylElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNRESOLVED: i32 = 3;

/// How many counterexamples a failing check prints in text mode.
const SHOW_LIMIT: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "demazure", version, about = "Demazure characters and B1-support varieties of Demazure modules")]
pub struct Cli {
    /// Emit the stable JSON serialization instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the support variety of one Demazure module H0(w, λ).
    Support(QueryArgs),
    /// Print the Demazure character of H0(w, λ) as JSON.
    Character(CharacterArgs),
    /// Reproduce one of the support-variety tables.
    Table(TableArgs),
    /// Run an exhaustive property sweep.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    /// Root system, e.g. A2.
    #[arg(long = "type", default_value = "A2")]
    pub type_name: String,
    #[arg(long)]
    pub p: u64,
    /// Space-separated simple indices, or `e` / `w0`.
    #[arg(long)]
    pub w: String,
    /// Comma-separated fundamental-weight coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Args)]
pub struct CharacterArgs {
    #[arg(long = "type", default_value = "A2")]
    pub type_name: String,
    #[arg(long)]
    pub w: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    /// A2, λ = (p−1)ρ, all six w.
    Steinberg,
    /// A1, both w, both divisibility columns.
    A1,
    /// A2 with ℓ(w) ≠ 2, p ≥ 3.
    A2,
    /// A2 with ℓ(w) ≠ 2, p = 2.
    A2p2,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub name: TableName,
    #[arg(long, default_value_t = 3)]
    pub p: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    /// G-saturated supports shrink along w1 < w2.
    Saturation,
    /// v ≤ w_S(v), and v ≤ w_I implies S(v) ⊆ I and w_S(v) ≤ w_I.
    #[value(name = "lemma531")]
    Lemma531,
    /// Operator dimensions against closed forms in A2.
    Dimension,
    /// Demazure characters agree across all reduced words.
    Words,
    /// Parabolic lower/upper bounds contain the saturated support.
    Sandwich,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Bruhat,
    LeftWeak,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub name: CheckName,
    #[arg(long = "type", default_value = "A2")]
    pub type_name: String,
    /// Largest λ coordinate in the sweep (defaults: saturation/sandwich 15,
    /// dimension 12, words 8).
    #[arg(long)]
    pub lmax: Option<i64>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
    pub primes: Vec<u64>,
    /// Pair order for the saturation check.
    #[arg(long, value_enum, default_value = "bruhat")]
    pub order: OrderArg,
    /// Run the sweep on one thread.
    #[arg(long)]
    pub sequential: bool,
}

pub fn parse_lambda(rank: usize, s: &str) -> Result<WeightVec> {
    let coords = s
        .split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| Error::Parse {
                field: "lambda",
                message: format!("bad coordinate `{t}`"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != rank {
        return Err(Error::Parse {
            field: "lambda",
            message: format!("expected {rank} coordinates, got {}", coords.len()),
        });
    }
    Ok(WeightVec(coords))
}

fn parse_type(s: &str) -> Result<RootSystemData> {
    RootSystemData::parse_type(s).map_err(|e| Error::Parse { field: "type", message: e.to_string() })
}

/// Row label: `e`, `s1 s2`, or `w0` for the longest element.
fn w_label(w: &WeylElement) -> String {
    if w.rank() > 1 && *w == longest_element(w.rank()) {
        "w0".to_string()
    } else {
        w.pretty()
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_USAGE, format!("error: {e}"))
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Support(args) => cmd_support(args, cli.json, out),
        Command::Character(args) => cmd_character(args, out),
        Command::Table(args) => cmd_table(args, cli.json, out),
        Command::Check(args) => cmd_check(args, cli.json, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "{message}");
            code
        }
    }
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure(EXIT_USAGE, format!("error: {e}"))
}

fn cmd_support(args: &QueryArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let rs = parse_type(&args.type_name)?;
    let w = WeylElement::parse(rs.rank, &args.w)?;
    let lambda = parse_lambda(rs.rank, &args.lambda)?;
    let query = SupportQuery::new(rs.clone(), args.p, w.clone(), lambda.clone())?;
    let outcome = classify(&query)?;
    let profile = ModularProfile::compute(&rs, &lambda, args.p)?;
    let saturation = match &outcome {
        Outcome::Concrete(c) => Some(g_saturate(c.variety)),
        Outcome::Symbolic { variety, resolved, .. } => Some(g_saturate(resolved.unwrap_or(*variety))),
        Outcome::Unresolved { .. } => None,
    };
    let code = if matches!(outcome, Outcome::Unresolved { .. }) { EXIT_UNRESOLVED } else { EXIT_OK };

    if json {
        let doc = json!({
            "query": { "type": rs.name(), "p": args.p, "w": w, "lambda": lambda },
            "outcome": outcome,
            "saturation": saturation,
            "profile": profile,
        });
        writeln!(out, "{doc}").map_err(io_fail)?;
        return Ok(code);
    }

    let mut lines = vec![format!("type {}  p={}  w={}  λ={}", rs.name(), args.p, w.pretty(), lambda)];
    match &outcome {
        Outcome::Concrete(c) => {
            lines.push(format!("variety:     {}", c.variety));
            lines.push(format!("branch:      {}", c.branch));
        }
        Outcome::Symbolic { variety, resolved, level, branch } => {
            lines.push(format!("variety:     {variety}"));
            if let Some(r) = resolved {
                lines.push(format!("resolved:    {r}"));
            }
            let level = match level {
                crate::supports::SupportLevel::Borel => "B1".to_string(),
                crate::supports::SupportLevel::Parabolic(i) => format!("(P_I)1 with I={i}"),
            };
            lines.push(format!("level:       {level}"));
            lines.push(format!("branch:      {branch}"));
        }
        Outcome::Unresolved { bounds } => {
            lines.push("variety:     unresolved (no settled rule for this w)".to_string());
            lines.push(format!("lower bound: {} from w_S(v), S(v)={}", bounds.lower, bounds.lower_subset));
            let terms: Vec<String> =
                bounds.upper_terms.iter().map(|(i, o)| format!("{o} at I={i}")).collect();
            lines.push(format!("upper bound: ∩ [{}]", terms.join(", ")));
        }
    }
    if let Some(s) = saturation {
        lines.push(format!("saturation:  {s}"));
    }
    let roots: Vec<String> = profile.phi_lambda_p.iter().map(|r| format!("{:?}", r.coeffs())).collect();
    lines.push(format!("Φ_λ,p:       {{{}}}", roots.join(", ")));
    lines.push(format!("p-regular:   {}", profile.regular));
    lines.push(format!("J_λ:         {}", profile.j_lambda));
    match &profile.conjugation {
        Some(c) => lines.push(format!("conjugation: x={} I={}", c.x.pretty(), c.subset)),
        None => lines.push("conjugation: none".to_string()),
    }
    for l in lines {
        writeln!(out, "{l}").map_err(io_fail)?;
    }
    Ok(code)
}

fn cmd_character(args: &CharacterArgs, out: &mut dyn Write) -> CmdResult {
    let rs = parse_type(&args.type_name)?;
    let w = WeylElement::parse(rs.rank, &args.w)?;
    let lambda = parse_lambda(rs.rank, &args.lambda)?;
    let ch = demazure_character(&rs, &w, &lambda)?;
    let mut doc = ch.to_json();
    doc["dimension"] = json!(ch.dimension());
    writeln!(out, "{doc}").map_err(io_fail)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub w: String,
    pub condition: String,
    /// Representative weight the row was evaluated at.
    pub lambda: WeightVec,
    pub variety: VarietyExpr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub title: String,
    pub p: u64,
    pub rows: Vec<TableRow>,
}

fn row(rs: &RootSystemData, p: u64, w: &str, condition: &str, lambda: &[i64]) -> Result<TableRow> {
    let we = WeylElement::parse(rs.rank, w)?;
    let lambda = WeightVec::new(lambda.to_vec());
    Ok(TableRow {
        w: w_label(&we),
        condition: condition.to_string(),
        variety: concrete_support(rs, &we, &lambda, p)?.variety,
        lambda,
    })
}

/// Builds a table by evaluating the classifier at one representative weight
/// per row.
pub fn build_table(name: TableName, p: u64) -> Result<Table> {
    check_prime(p)?;
    let q = p as i64 - 1;
    match name {
        TableName::Steinberg => {
            if p < 3 {
                return Err(Error::Parse { field: "p", message: "the Steinberg table needs p ≥ 3".into() });
            }
            let rs = parse_type("A2")?;
            let rows = ["e", "1", "2", "1 2", "2 1", "w0"]
                .iter()
                .map(|w| row(&rs, p, w, "λ=(p−1)ρ", &[q, q]))
                .collect::<Result<Vec<_>>>()?;
            Ok(Table {
                name: "steinberg".into(),
                title: format!("B1-supports of H0(w,(p−1)ρ), type A2, p={p}, λ=({q},{q})"),
                p,
                rows,
            })
        }
        TableName::A1 => {
            let rs = parse_type("A1")?;
            let mut rows = Vec::new();
            for w in ["e", "1"] {
                rows.push(row(&rs, p, w, "p ∤ λ+1", &[0])?);
                rows.push(row(&rs, p, w, "p ∣ λ+1", &[q])?);
            }
            Ok(Table {
                name: "a1".into(),
                title: format!("B1-supports of H0(w,λ), type A1, p={p}"),
                p,
                rows,
            })
        }
        TableName::A2 | TableName::A2p2 => {
            if name == TableName::A2 && p < 3 {
                return Err(Error::Parse { field: "p", message: "table a2 needs p ≥ 3; use a2p2".into() });
            }
            let p = if name == TableName::A2p2 { 2 } else { p };
            let q = p as i64 - 1;
            let rs = parse_type("A2")?;
            let mut rows = vec![
                row(&rs, p, "e", "all λ", &[0, 0])?,
                row(&rs, p, "1", "p ∣ λ1+1", &[q, 0])?,
                row(&rs, p, "1", "p ∤ λ1+1", &[0, 0])?,
                row(&rs, p, "2", "p ∣ λ2+1", &[0, q])?,
                row(&rs, p, "2", "p ∤ λ2+1", &[0, 0])?,
            ];
            // p = 2 < h admits no p-regular weight.
            if p > 2 {
                rows.push(row(&rs, p, "w0", "I=∅ (λ p-regular)", &[0, 0])?);
            }
            rows.push(row(&rs, p, "w0", "|I|=1", &[q, 0])?);
            rows.push(row(&rs, p, "w0", "I=Δ", &[q, q])?);
            for r in &rows {
                debug_assert_eq!(phi_lambda_p(&rs, &r.lambda, p).map(|_| ()), Ok(()));
            }
            let (name, title) = if p == 2 {
                ("a2p2", "B1-supports of H0(w,λ), type A2, ℓ(w)≠2, p=2".to_string())
            } else {
                ("a2", format!("B1-supports of H0(w,λ), type A2, ℓ(w)≠2, p={p}"))
            };
            Ok(Table { name: name.into(), title, p, rows })
        }
    }
}

/// Rows grouped by `w`, one column per condition, in first-seen order.
fn render_grid(table: &Table) -> String {
    let mut ws: Vec<&str> = Vec::new();
    let mut conds: Vec<&str> = Vec::new();
    for r in &table.rows {
        if !ws.contains(&r.w.as_str()) {
            ws.push(&r.w);
        }
        if !conds.contains(&r.condition.as_str()) {
            conds.push(&r.condition);
        }
    }
    let cell = |w: &str, c: &str| {
        table
            .rows
            .iter()
            .find(|r| r.w == w && r.condition == c)
            .map(|r| r.variety.to_string())
            .unwrap_or_else(|| "-".into())
    };
    let w_width = ws.iter().map(|w| w.chars().count()).max().unwrap_or(1).max(1);
    let widths: Vec<usize> = conds
        .iter()
        .map(|c| ws.iter().map(|w| cell(w, c).chars().count()).chain([c.chars().count()]).max().unwrap_or(1))
        .collect();
    let pad = |s: &str, n: usize| format!("{s}{}", " ".repeat(n.saturating_sub(s.chars().count())));
    let line = |first: &str, cells: Vec<String>| {
        let mut l = pad(first, w_width);
        for (c, n) in cells.iter().zip(&widths) {
            l.push_str("  ");
            l.push_str(&pad(c, *n));
        }
        format!("{}\n", l.trim_end())
    };
    let mut s = format!("{}\n", table.title);
    s.push_str(&line("w", conds.iter().map(|c| c.to_string()).collect()));
    for w in &ws {
        s.push_str(&line(w, conds.iter().map(|c| cell(w, c)).collect()));
    }
    s
}

pub fn render_table(table: &Table) -> String {
    if table.name == "a1" {
        return render_grid(table);
    }
    let w_width = table.rows.iter().map(|r| r.w.chars().count()).max().unwrap_or(1).max(1);
    let v_width = table
        .rows
        .iter()
        .map(|r| r.variety.to_string().chars().count())
        .max()
        .unwrap_or(1)
        .max("V".len());
    let pad = |s: &str, n: usize| format!("{s}{}", " ".repeat(n.saturating_sub(s.chars().count())));
    let mut s = format!("{}\n", table.title);
    s.push_str(&format!("{}  {}  {}\n", pad("w", w_width), pad("V", v_width), "λ"));
    for r in &table.rows {
        s.push_str(&format!(
            "{}  {}  {}\n",
            pad(&r.w, w_width),
            pad(&r.variety.to_string(), v_width),
            r.condition
        ));
    }
    s
}

fn cmd_table(args: &TableArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let table = build_table(args.name, args.p)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&table).expect("tables serialize")).map_err(io_fail)?;
    } else {
        write!(out, "{}", render_table(&table)).map_err(io_fail)?;
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct CheckReport {
    check: String,
    #[serde(rename = "type")]
    type_name: String,
    pass: bool,
    count: usize,
    counterexamples: Vec<serde_json::Value>,
}

fn require_rank(rs: &RootSystemData, allowed: &[usize], check: &str) -> Result<()> {
    if allowed.contains(&rs.rank) {
        Ok(())
    } else {
        Err(Error::Parse {
            field: "type",
            message: format!("check {check} supports ranks {allowed:?}, got {}", rs.name()),
        })
    }
}

fn cmd_check(args: &CheckArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let rs = parse_type(&args.type_name)?;
    for &p in &args.primes {
        check_prime(p)?;
    }
    let exec = if args.sequential { Execution::Sequential } else { Execution::default() };
    let (label, failures): (String, Vec<(String, serde_json::Value)>) = match args.name {
        CheckName::Saturation => {
            require_rank(&rs, &[1, 2], "saturation")?;
            let lmax = args.lmax.unwrap_or(15);
            let order = match args.order {
                OrderArg::Bruhat => PairOrder::Bruhat,
                OrderArg::LeftWeak => PairOrder::LeftWeak,
            };
            let v = sweep::saturation_sweep(&rs, lmax, &args.primes, order, exec)?;
            (
                format!("saturation ({:?} pairs, λ ≤ {lmax}, p ∈ {:?})", args.order, args.primes),
                v.iter().map(|x| (x.to_string(), json!(x))).collect(),
            )
        }
        CheckName::Sandwich => {
            require_rank(&rs, &[1, 2], "sandwich")?;
            let lmax = args.lmax.unwrap_or(15);
            let v = sweep::sandwich_sweep(&rs, lmax, &args.primes, exec)?;
            (
                format!("sandwich (λ ≤ {lmax}, p ∈ {:?})", args.primes),
                v.iter()
                    .map(|x| {
                        let upper = x.upper.map(|u| u.to_string()).unwrap_or_else(|| "?".into());
                        (
                            format!(
                                "p={} λ={} v={}: {} ≤ {} ≤ {} fails",
                                x.p, x.lambda, x.v.pretty(), x.lower, x.actual, upper
                            ),
                            json!(x),
                        )
                    })
                    .collect(),
            )
        }
        CheckName::Lemma531 => {
            let v = sweep::parabolic_lemma_check(rs.rank, exec);
            (
                format!("parabolic bound lemma (all of W({}))", rs.name()),
                v.iter()
                    .map(|x| {
                        let s = x.subset.map(|s| format!(" I={s}")).unwrap_or_default();
                        (format!("v={}{s}: {}", x.v.pretty(), x.reason), json!(x))
                    })
                    .collect(),
            )
        }
        CheckName::Dimension => {
            require_rank(&rs, &[2], "dimension")?;
            let lmax = args.lmax.unwrap_or(12);
            let v = sweep::dimension_sweep(&rs, lmax, exec)?;
            (
                format!("dimension (λ ≤ {lmax})"),
                v.iter()
                    .map(|x| {
                        (
                            format!("w={} λ={}: operator {} ≠ closed form {}", x.w.pretty(), x.lambda, x.operator, x.closed_form),
                            json!(x),
                        )
                    })
                    .collect(),
            )
        }
        CheckName::Words => {
            let lmax = args.lmax.unwrap_or(8);
            let v = sweep::word_independence_sweep(&rs, lmax, exec)?;
            (
                format!("reduced-word independence ({}, λ ≤ {lmax})", rs.name()),
                v.iter()
                    .map(|x| (format!("w={} λ={} word={:?}", x.w.pretty(), x.lambda, x.word), json!(x)))
                    .collect(),
            )
        }
    };
    let pass = failures.is_empty();
    if json {
        let report = CheckReport {
            check: label,
            type_name: rs.name(),
            pass,
            count: failures.len(),
            counterexamples: failures.into_iter().map(|(_, j)| j).collect(),
        };
        writeln!(out, "{}", serde_json::to_string(&report).expect("reports serialize")).map_err(io_fail)?;
    } else if pass {
        writeln!(out, "check {label}: pass").map_err(io_fail)?;
    } else {
        writeln!(out, "check {label}: FAIL, {} counterexamples", failures.len()).map_err(io_fail)?;
        for (text, _) in failures.iter().take(SHOW_LIMIT) {
            writeln!(out, "  {text}").map_err(io_fail)?;
        }
        if failures.len() > SHOW_LIMIT {
            writeln!(out, "  … {} more", failures.len() - SHOW_LIMIT).map_err(io_fail)?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}
