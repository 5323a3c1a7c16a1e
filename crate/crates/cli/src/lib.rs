//! Command-line front end for `translim`.
//!
//! [`run`] parses an argument vector, dispatches to the library and writes
//! to the supplied streams. Exit codes: 0 success, 1 failed check or
//! validation, 2 usage or parse error.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use translim::demo::{composition_example, f32_instantiation, table_f32, thread_demo, THREAD_FOOTER};
use translim::oracle::{exhaustive_oracle, run_laws, CheckRecord};
use translim::point::{parse_entries, validate, PointParseError};
use translim::{enumerate_schemas, section, MapSpec, OrdPoint, Ordinal};

#[derive(Debug, Parser)]
#[command(name = "translim", version, about = "Ordinals, points and bonding maps of an inverse system with empty limit")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ordinal arithmetic.
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Point validation and accessors.
    #[command(subcommand)]
    Point(PointCommand),
    /// List the schemas (point shapes) of X_K for a finite K.
    Schemas { k: String },
    /// Bonding maps and their sections.
    #[command(subcommand)]
    Map(MapCommand),
    /// Check identity, composition and section laws on random cases.
    Laws {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `a..b` (naturals, end exclusive) or a comma list of ordinals.
        #[arg(long, default_value = DEFAULT_LAW_POOL)]
        pool: String,
    },
    /// Check every law on every point over a small pool.
    Oracle {
        #[arg(long)]
        pool: String,
    },
    /// Worked examples.
    #[command(subcommand)]
    Demo(DemoCommand),
}

#[derive(Debug, Subcommand)]
pub enum OrdCommand {
    /// Print the canonical form.
    Eval { expr: String },
    /// Print LT, EQ or GT.
    Compare { a: String, b: String },
    Add { a: String, b: String },
    Mul { a: String, b: String },
}

#[derive(Debug, Subcommand)]
pub enum PointCommand {
    Validate { point: String },
    /// Print index, order and length.
    Info { point: String },
}

#[derive(Debug, Subcommand)]
pub enum MapCommand {
    /// Apply f^FROM_TO to a point of X_FROM.
    Apply(ApplyArgs),
    /// Lift a point of X_FROM to X_TO.
    Section(SectionArgs),
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
    pub point: String,
}

#[derive(Debug, Args)]
pub struct SectionArgs {
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
    /// Witness above TO; defaults to its successor.
    #[arg(long)]
    pub gamma: Option<String>,
    pub point: String,
}

#[derive(Debug, Subcommand)]
pub enum DemoCommand {
    /// The table of f^3_2 on the eight shapes of X_3.
    F32 {
        /// Use w, w + 1, w*2, w^2 for the placeholders instead of 4..7.
        #[arg(long)]
        transfinite: bool,
    },
    /// f^4_3 ∘ f^6_4 = f^6_3 on (0, 1, 1, 2, 3, 4, 5, 6, 6, 7).
    Composition,
    /// Grow a compatible family over keys 0..=N and profile it.
    Thread {
        #[arg(long, default_value_t = 10)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

pub const DEFAULT_LAW_POOL: &str = "0, 1, 2, 3, w, w + 1, w*2, w^2";

#[derive(Debug)]
enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1.
    Check(String),
}

type Outcome = Result<bool, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn ordinal(text: &str) -> Result<Ordinal, Failure> {
    text.parse().map_err(|e| Failure::Usage(format!("cannot parse ordinal {text:?}: {e}")))
}

fn point(text: &str) -> Result<OrdPoint, Failure> {
    match text.parse::<OrdPoint>() {
        Ok(p) => Ok(p),
        Err(PointParseError::Invalid(e)) => Err(Failure::Check(format!("not a point: {e}"))),
        Err(e) => Err(Failure::Usage(format!("cannot parse point {text:?}: {e}"))),
    }
}

/// `a..b` over naturals (end exclusive) or a comma list of ordinals.
pub fn parse_pool(spec: &str) -> Result<BTreeSet<Ordinal>, String> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start in {spec:?}"))?;
        let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end in {spec:?}"))?;
        if lo >= hi {
            return Err(format!("empty range {spec:?}"));
        }
        return Ok((lo..hi).map(Ordinal::from_natural).collect());
    }
    spec.split(',')
        .map(|s| s.parse::<Ordinal>().map_err(|e| format!("bad pool entry {:?}: {e}", s.trim())))
        .collect()
}

fn show_pool(pool: &BTreeSet<Ordinal>) -> String {
    let v: Vec<String> = pool.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(", "))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Check(msg)) => {
            emit_error(&cli, out, err, &msg);
            1
        }
        Err(Failure::Usage(msg)) => {
            emit_error(&cli, out, err, &msg);
            2
        }
    }
}

fn emit_error(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write, msg: &str) {
    if cli.json {
        let _ = writeln!(out, "{}", json!({ "ok": false, "error": msg }));
    } else {
        let _ = writeln!(err, "error: {msg}");
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(usage)?;
    writeln!(out, "{text}").map_err(usage)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Ord(cmd) => ord(cmd, json, out),
        Command::Point(cmd) => point_cmd(cmd, json, out),
        Command::Schemas { k } => schemas(k, json, out),
        Command::Map(MapCommand::Apply(a)) => map_apply(a, json, out),
        Command::Map(MapCommand::Section(a)) => map_section(a, json, out),
        Command::Laws { samples, seed, pool } => laws(pool, *samples, *seed, json, out),
        Command::Oracle { pool } => oracle(pool, json, out),
        Command::Demo(DemoCommand::F32 { transfinite }) => demo_f32(*transfinite, json, out),
        Command::Demo(DemoCommand::Composition) => demo_composition(json, out),
        Command::Demo(DemoCommand::Thread { n, seed }) => demo_thread(*n, *seed, json, out),
    }
}

fn ord(cmd: &OrdCommand, json: bool, out: &mut dyn Write) -> Outcome {
    let (op, operands, result) = match cmd {
        OrdCommand::Eval { expr } => ("eval", vec![ordinal(expr)?], None),
        OrdCommand::Compare { a, b } => {
            let (a, b) = (ordinal(a)?, ordinal(b)?);
            let c = a.compare(&b).to_string();
            ("compare", vec![a, b], Some(c))
        }
        OrdCommand::Add { a, b } => {
            let (a, b) = (ordinal(a)?, ordinal(b)?);
            let s = a.add(&b).to_string();
            ("add", vec![a, b], Some(s))
        }
        OrdCommand::Mul { a, b } => {
            let (a, b) = (ordinal(a)?, ordinal(b)?);
            let p = a.multiply(&b).to_string();
            ("mul", vec![a, b], Some(p))
        }
    };
    let result = result.unwrap_or_else(|| operands[0].to_string());
    if json {
        let operands: Vec<String> = operands.iter().map(ToString::to_string).collect();
        emit(out, &json!({ "op": op, "operands": operands, "result": result }))?;
    } else {
        writeln!(out, "{result}").map_err(usage)?;
    }
    Ok(true)
}

fn point_cmd(cmd: &PointCommand, json: bool, out: &mut dyn Write) -> Outcome {
    match cmd {
        PointCommand::Validate { point: text } => {
            let entries: Vec<Ordinal> = parse_entries(text).map_err(usage)?;
            let shown = format!(
                "({})",
                entries.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            );
            let verdict = validate(&entries);
            if json {
                emit(
                    out,
                    &json!({
                        "point": shown,
                        "valid": verdict.is_ok(),
                        "error": verdict.as_ref().err().map(ToString::to_string),
                        "index": verdict.is_ok().then(|| entries[entries.len() - 2].to_string()),
                    }),
                )?;
            } else {
                match &verdict {
                    Ok(()) => writeln!(out, "valid: {shown} is in X_{}", entries[entries.len() - 2]),
                    Err(e) => writeln!(out, "invalid: {shown}: {e}"),
                }
                .map_err(usage)?;
            }
            Ok(verdict.is_ok())
        }
        PointCommand::Info { point: text } => {
            let p = point(text)?;
            if json {
                emit(
                    out,
                    &json!({
                        "point": p.to_string(),
                        "index": p.index().to_string(),
                        "order": p.order().to_string(),
                        "length": p.length(),
                    }),
                )?;
            } else {
                writeln!(out, "point  = {p}").map_err(usage)?;
                writeln!(out, "index  = {}", p.index()).map_err(usage)?;
                writeln!(out, "order  = {}", p.order()).map_err(usage)?;
                writeln!(out, "length = {}", p.length()).map_err(usage)?;
            }
            Ok(true)
        }
    }
}

fn schemas(k: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let k = ordinal(k)?;
    let list = enumerate_schemas(&k).map_err(usage)?;
    if json {
        let rows: Vec<_> = list
            .iter()
            .map(|s| json!({ "chain": s.chain().iter().map(ToString::to_string).collect::<Vec<_>>(), "shape": s.shape() }))
            .collect();
        emit(out, &json!({ "target": k.to_string(), "count": list.len(), "schemas": rows }))?;
    } else {
        for s in &list {
            writeln!(out, "{:<24}{}", s.to_string(), s.shape()).map_err(usage)?;
        }
        writeln!(out, "count = {} = 2^{k}", list.len()).map_err(usage)?;
    }
    Ok(true)
}

fn map_apply(a: &ApplyArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let (source, target) = (ordinal(&a.from)?, ordinal(&a.to)?);
    let x = point(&a.point)?;
    let f = MapSpec::new(source, target).map_err(|e| Failure::Check(e.to_string()))?;
    let y = f.apply(&x).map_err(|e| Failure::Check(e.to_string()))?;
    if json {
        emit(out, &json!({ "map": f.to_string(), "input": x.to_string(), "output": y.to_string() }))?;
    } else {
        writeln!(out, "{y}").map_err(usage)?;
    }
    Ok(true)
}

fn map_section(a: &SectionArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let (alpha, beta) = (ordinal(&a.from)?, ordinal(&a.to)?);
    let gamma = a.gamma.as_deref().map(ordinal).transpose()?;
    let x = point(&a.point)?;
    let y = section(&alpha, &beta, &x, gamma).map_err(|e| Failure::Check(e.to_string()))?;
    let back = MapSpec::new(beta.clone(), alpha.clone())
        .and_then(|f| f.apply(&y))
        .map_err(|e| Failure::Check(e.to_string()))?;
    let ok = back == x;
    if json {
        emit(
            out,
            &json!({ "from": alpha.to_string(), "to": beta.to_string(), "input": x.to_string(), "lift": y.to_string(), "round_trip": ok }),
        )?;
    } else {
        writeln!(out, "{y}").map_err(usage)?;
    }
    Ok(ok)
}

fn write_checks(out: &mut dyn Write, checks: &[CheckRecord]) -> Result<(), Failure> {
    writeln!(out, "{:<32}{:>10}{:>10}", "check", "cases", "failures").map_err(usage)?;
    for c in checks {
        writeln!(out, "{:<32}{:>10}{:>10}", c.name, c.cases, c.failures).map_err(usage)?;
        if let Some(x) = &c.first_counterexample {
            writeln!(out, "    first counterexample: {x}").map_err(usage)?;
        }
    }
    Ok(())
}

fn laws(pool: &str, samples: usize, seed: u64, json: bool, out: &mut dyn Write) -> Outcome {
    let pool = parse_pool(pool).map_err(Failure::Usage)?;
    let report = run_laws(&pool, samples, seed);
    let ok = report.passed();
    if json {
        emit(out, &json!({ "ok": ok, "report": report }))?;
    } else {
        writeln!(out, "laws over pool {}: {samples} samples, seed {seed}", show_pool(&pool)).map_err(usage)?;
        write_checks(out, &report.checks)?;
        writeln!(out, "result: {}", if ok { "PASS" } else { "FAIL" }).map_err(usage)?;
    }
    Ok(ok)
}

fn oracle(pool: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let pool = parse_pool(pool).map_err(Failure::Usage)?;
    let report = exhaustive_oracle(&pool);
    let ok = report.passed();
    if json {
        emit(out, &json!({ "ok": ok, "report": report }))?;
    } else {
        writeln!(out, "exhaustive oracle over pool {}", show_pool(&pool)).map_err(usage)?;
        writeln!(out, "points = {}, recount = {}", report.points, report.recount).map_err(usage)?;
        write_checks(out, &report.checks)?;
        writeln!(out, "result: {}", if ok { "PASS" } else { "FAIL" }).map_err(usage)?;
    }
    Ok(ok)
}

fn demo_f32(transfinite: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let values = f32_instantiation(transfinite);
    let rows = table_f32(&values);
    let verified = rows.iter().filter(|r| r.verified()).count();
    let ok = verified == rows.len();
    let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
    if json {
        let records: Vec<_> = rows
            .iter()
            .map(|r| {
                json!({
                    "symbolic": format!("{} ↦ {}", r.symbolic_input, r.symbolic_output),
                    "input": r.input.to_string(),
                    "output": r.output.to_string(),
                    "expected": r.expected.to_string(),
                    "case": r.case,
                    "verified": r.verified(),
                })
            })
            .collect();
        emit(out, &json!({ "ok": ok, "instantiation": shown, "rows": records }))?;
    } else {
        writeln!(out, "f^3_2 : X_3 -> X_2 with α, β, γ, δ := {}", shown.join(", ")).map_err(usage)?;
        for r in &rows {
            let case = if r.case == 1 { "Case I" } else { "Case II" };
            let mark = if r.verified() { "ok" } else { "MISMATCH" };
            writeln!(
                out,
                "{:<46}{:<50}{:<9}{mark}",
                format!("{} ↦ {}", r.symbolic_input, r.symbolic_output),
                format!("{} ↦ {}", r.input, r.output),
                case
            )
            .map_err(usage)?;
        }
        writeln!(out, "{verified}/{} rows verified", rows.len()).map_err(usage)?;
    }
    Ok(ok)
}

fn demo_composition(json: bool, out: &mut dyn Write) -> Outcome {
    let d = composition_example();
    let ok = d.verified();
    if json {
        emit(
            out,
            &json!({
                "ok": ok,
                "x": d.x.to_string(),
                "f64(x)": d.y.to_string(),
                "f43(f64(x))": d.composed.to_string(),
                "f63(x)": d.direct.to_string(),
                "expected": d.expected.to_string(),
            }),
        )?;
    } else {
        let lines = [
            format!("x              = {} in X_6", d.x),
            format!("y = f^6_4(x)   = {} in X_{}", d.y, d.y.index()),
            format!("f^4_3(y)       = {}", d.composed),
            format!("f^6_3(x)       = {}", d.direct),
            format!("expected       = {}  ((0, α, 1, β, 3, γ) with α, β, γ := 1, 2, 4)", d.expected),
            format!("f^4_3 ∘ f^6_4 = f^6_3: {}", if ok { "ok" } else { "FAIL" }),
            "note: y ends in the pair (4, 6); a sequence ending (5, 6) has index 5 and is not in X_4".to_string(),
        ];
        for l in lines {
            writeln!(out, "{l}").map_err(usage)?;
        }
    }
    Ok(ok)
}

fn demo_thread(n: u64, seed: u64, json: bool, out: &mut dyn Write) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let d = thread_demo(n, seed);
    let ok = d.passed();
    let checks = [
        ("family is compatible", d.compatible),
        ("index < order on every row", d.orders_dominate_indices),
        ("order is a function of length", d.order_function_of_length),
        ("length is nondecreasing in the index", d.lengths_nondecreasing),
        ("max order exceeds every index", d.max_order_exceeds_every_index),
    ];
    if json {
        let rows: Vec<_> = d
            .profile
            .iter()
            .map(|r| json!({ "index": r.index.to_string(), "length": r.length, "order": r.order.to_string() }))
            .collect();
        let checks: Vec<_> = checks.iter().map(|(name, pass)| json!({ "name": name, "passed": pass })).collect();
        emit(out, &json!({ "ok": ok, "n": n, "seed": seed, "profile": rows, "checks": checks, "footer": THREAD_FOOTER }))?;
    } else {
        writeln!(out, "compatible family over keys 0..={n} grown from (0, 1), seed {seed}").map_err(usage)?;
        writeln!(out, "{:<8}{:<8}{}", "index", "length", "order").map_err(usage)?;
        for r in &d.profile {
            writeln!(out, "{:<8}{:<8}{}", r.index.to_string(), r.length, r.order).map_err(usage)?;
        }
        for (name, pass) in checks {
            writeln!(out, "{name}: {}", if pass { "ok" } else { "FAIL" }).map_err(usage)?;
        }
        writeln!(out).map_err(usage)?;
        writeln!(out, "{THREAD_FOOTER}").map_err(usage)?;
    }
    Ok(ok)
}
