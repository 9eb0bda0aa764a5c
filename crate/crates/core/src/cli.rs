//! Command-line front end. `run` is the whole program; `main` only forwards
//! the process arguments and exit code.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::chains::{filtration, lipman_chain};
use crate::classify::{classify, ideal_conditions};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_reflexive_classes, RelativeIdeal};
use crate::oracle::{run_suite, verify_counts, Suite};
use crate::semigroup::{enumerate_by_genus, NumericalSemigroup};
use crate::series::{
    default_precision, parse_series_list, CoefficientField, FieldKind, PrimeField, Rationals,
    TruncatedSeries,
};
use crate::ulrich::{enumerate_ulrich_monomial, field_sweep, is_ulrich_series, SeriesOptions};

#[derive(Parser, Debug)]
#[command(
    name = "sgring",
    version,
    about = "Numerical semigroup rings: ideals, classification, reflexive counts"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants and ring-level classification of ⟨gens⟩.
    Analyze { generators: String },
    /// Monomial ideal arithmetic on `gens@H` literals.
    Ideal {
        #[arg(value_enum)]
        op: IdealOp,
        ideal: String,
        /// Second operand for colon and sum.
        other: Option<String>,
    },
    /// Blow-up chain of the maximal ideal.
    Chain { generators: String },
    /// Ulrich ideals.
    Ulrich {
        #[command(subcommand)]
        command: UlrichCommand,
    },
    /// Run a verification suite over all semigroups up to a genus.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        genus_max: i64,
        /// Write certificates here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every semigroup up to a genus into a JSONL file.
    Survey {
        #[arg(long)]
        genus_max: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdealOp {
    Show,
    Dual,
    Trace,
    Colon,
    Sum,
    Stable,
    Reflexive,
    Blowup,
    Filtration,
    Lengths,
    Conditions,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Trace,
    Main,
    Maximal,
    Conductor,
    Counts,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Trace => Suite::Trace,
            SuiteArg::Main => Suite::Main,
            SuiteArg::Maximal => Suite::Maximal,
            SuiteArg::Conductor => Suite::Conductor,
            SuiteArg::Counts => Suite::Counts,
        }
    }
}

#[derive(clap::Args, Debug)]
struct SeriesArgs {
    /// Coefficient field: `q` or `p:<prime>`.
    #[arg(long, default_value = "q")]
    field: String,
    /// Truncation order; defaults to c(H) + 2·(largest valuation) + e(H).
    #[arg(long)]
    prec: Option<usize>,
    /// Seed for random reduction candidates.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Count principal ideals as Ulrich.
    #[arg(long)]
    include_principal: bool,
    /// Skip the recomputation at twice the precision.
    #[arg(long)]
    no_recheck: bool,
}

impl SeriesArgs {
    fn options(&self) -> SeriesOptions {
        SeriesOptions {
            seed: self.seed,
            include_principal: self.include_principal,
            recheck: !self.no_recheck,
            ..SeriesOptions::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum UlrichCommand {
    /// Test the ideal generated by comma-separated series, e.g. "t^6 - t^7, t^10".
    Verify {
        generators: String,
        series: String,
        #[command(flatten)]
        args: SeriesArgs,
    },
    /// All monomial Ulrich ideals with 1 ≤ min ≤ B.
    Enumerate {
        generators: String,
        #[arg(long)]
        min_bound: i64,
        #[arg(long)]
        include_principal: bool,
    },
    /// The values of `c` in GF(p) for which a template such as
    /// "t^6 - c*t^7, t^10" gives an Ulrich ideal.
    Sweep {
        generators: String,
        template: String,
        #[command(flatten)]
        args: SeriesArgs,
    },
}

enum Failure {
    Usage(String),
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code: 0 on
/// success, 1 when a verification fails, 2 on usage or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => 0,
        Err(Failure::Verdict(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Analyze { generators } => analyze(generators, cli.json, out),
        Command::Ideal { op, ideal, other } => {
            ideal_cmd(*op, ideal, other.as_deref(), cli.json, out)
        }
        Command::Chain { generators } => chain(generators, cli.json, out),
        Command::Ulrich { command } => ulrich(command, cli.json, out),
        Command::Verify {
            suite,
            genus_max,
            out: path,
        } => verify(Suite::from(*suite), *genus_max, path.as_ref(), out, err),
        Command::Survey {
            genus_max,
            out: path,
        } => survey(*genus_max, path, err),
    }
}

/// Canonical rendering: sorted keys, integers only, so parsing and
/// re-rendering reproduces the same bytes.
pub fn render_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(&serde_json::to_value(value).expect("report serializes")).unwrap()
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    json: bool,
    value: &T,
    text: impl FnOnce() -> String,
) -> Outcome {
    if json {
        writeln!(out, "{}", render_json(value))?;
    } else {
        writeln!(out, "{}", text())?;
    }
    Ok(())
}

fn semigroup(s: &str) -> Result<NumericalSemigroup> {
    s.parse()
}

/// The `analyze` report as a JSON object.
pub fn analysis(h: &NumericalSemigroup) -> Value {
    let mut obj = Map::new();
    if let Value::Object(inv) = json!(h.invariants()) {
        obj.extend(inv);
    }
    let report = classify(h);
    if let Value::Object(mut rep) = json!(report) {
        let ggl = rep.remove("generalized_gorenstein").unwrap();
        rep.insert("ggl".into(), ggl);
        let ell = rep.remove("ell_r_mod_c").unwrap();
        rep.insert("ell_R_mod_c".into(), ell);
        rep.insert(
            "conductor_ideal".into(),
            json!(report.conductor_ideal.to_string()),
        );
        rep.remove("semigroup");
        obj.extend(rep);
    }
    obj.insert("generators".into(), json!(h.generators()));
    Value::Object(obj)
}

fn analyze(gens: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let h = semigroup(gens)?;
    let value = analysis(&h);
    let r = classify(&h);
    emit(out, json, &value, || {
        let inv = h.invariants();
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        s += &format!("semigroup            {h}\n");
        s += &format!("frobenius            {}\n", inv.frobenius);
        s += &format!("genus                {}\n", inv.genus);
        s += &format!("multiplicity         {}\n", inv.multiplicity);
        s += &format!("embedding dimension  {}\n", inv.embedding_dimension);
        s += &format!("pseudo-frobenius     {:?}\n", inv.pseudo_frobenius);
        s += &format!("type                 {}\n", inv.cm_type);
        s += &format!("gorenstein           {}\n", yn(r.gorenstein));
        s += &format!("almost gorenstein    {}\n", yn(r.almost_gorenstein));
        s += &format!("ggl                  {}\n", yn(r.generalized_gorenstein));
        s += &format!("minimal multiplicity {}\n", yn(r.minimal_multiplicity));
        s += &format!("arf                  {}\n", yn(r.arf));
        s += &format!("finite cm type       {}\n", yn(r.finite_cm_type));
        s += &format!("canonical ideal      {}\n", r.evidence.canonical);
        s += &format!("S = R[K]             {}\n", r.s);
        s += &format!("conductor 𝔠          {}\n", r.conductor_ideal);
        s += &format!("ℓ(R/𝔠)               {}\n", r.ell_r_mod_c);
        s += &format!(
            "reflexive count      {}",
            r.reflexive_count
                .map_or("undetermined".to_string(), |n| n.to_string())
        );
        s
    })
}

fn ideal_cmd(
    op: IdealOp,
    lit: &str,
    other: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let i = RelativeIdeal::parse(lit)?;
    let second = || -> std::result::Result<RelativeIdeal, Failure> {
        let o =
            other.ok_or_else(|| Failure::Usage("this operation needs a second ideal".into()))?;
        // a bare generator list is read over the first ideal's semigroup
        let j = if o.contains('@') {
            RelativeIdeal::parse(o)?
        } else {
            RelativeIdeal::from_generators(i.ambient(), &crate::semigroup::parse_generators(o)?)?
        };
        Ok(j)
    };
    let (value, text) = match op {
        IdealOp::Show => (json!({"ideal": i.to_string(), "set": i}), i.to_string()),
        IdealOp::Dual => {
            let d = i.dual();
            (json!({"result": d.to_string()}), d.to_string())
        }
        IdealOp::Trace => {
            let t = i.trace();
            (json!({"result": t.to_string()}), t.to_string())
        }
        IdealOp::Colon => {
            let r = i.colon(&second()?)?;
            (json!({"result": r.to_string()}), r.to_string())
        }
        IdealOp::Sum => {
            let r = i.sum(&second()?)?;
            (json!({"result": r.to_string()}), r.to_string())
        }
        IdealOp::Stable => {
            let s = i.is_stable();
            (
                json!({"stable": s, "reduction_number": i.reduction_number()}),
                s.to_string(),
            )
        }
        IdealOp::Reflexive => {
            let r = i.is_reflexive();
            (json!({"reflexive": r}), r.to_string())
        }
        IdealOp::Blowup => {
            let b = i.blowup();
            (json!({"blowup": b}), b.to_string())
        }
        IdealOp::Filtration => {
            let f = filtration(&i);
            let t = f
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ⊆ ");
            (json!({"filtration": f}), t)
        }
        IdealOp::Lengths => {
            let v = json!({
                "mu": i.mu(),
                "colength": i.colength()?,
                "socle_dim": i.quotient_socle_dim()?,
            });
            let t = format!(
                "mu {} colength {} socle_dim {}",
                v["mu"], v["colength"], v["socle_dim"]
            );
            (v, t)
        }
        IdealOp::Conditions => {
            let c = ideal_conditions(&i)?;
            let t = format!(
                "stable {} contained_in_c {} IK=I {} A={} gorenstein {}",
                c.stable, c.contained_in_c, c.ik_equals_i, c.endomorphisms, c.a_gorenstein
            );
            (json!(c), t)
        }
    };
    emit(out, json, &value, || text)
}

fn chain(gens: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let h = semigroup(gens)?;
    let c = lipman_chain(&h);
    emit(out, json, &c, || {
        let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
        format!(
            "{}\nmultiplicities {:?}",
            members.join(" ⊂ "),
            c.multiplicity_sequence
        )
    })
}

fn parse_field(s: &str) -> Result<FieldKind> {
    s.parse()
}

fn build_series<F: CoefficientField>(
    field: &F,
    lit: &str,
    prec: usize,
) -> Result<Vec<TruncatedSeries<F>>> {
    parse_series_list(lit)?
        .iter()
        .map(|t| {
            if t.has_slot() {
                Err(Error::Parse(
                    "the scalar c only appears in sweep templates".into(),
                ))
            } else {
                t.to_series(field, prec)
            }
        })
        .collect()
}

fn precision_for(h: &NumericalSemigroup, lit: &str, prec: Option<usize>) -> Result<usize> {
    if let Some(p) = prec {
        return Ok(p);
    }
    let templates = parse_series_list(lit)?;
    let q = Rationals::new();
    let degree = templates.iter().map(|t| t.degree()).max().unwrap_or(0) + 1;
    let probe: Vec<_> = templates
        .iter()
        .map(|t| t.instantiate(&q, &q.one(), degree))
        .collect::<Result<_>>()?;
    Ok(default_precision(h, &probe))
}

fn ulrich_verify_in<F: CoefficientField>(
    field: F,
    h: &Arc<NumericalSemigroup>,
    lit: &str,
    prec: usize,
    opts: &SeriesOptions,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let gens = build_series(&field, lit, prec)?;
    let r = is_ulrich_series(h, &field, &gens, prec, opts)?;
    emit(out, json, &r, || {
        format!(
            "{}\nmu {} colength {} socle_dim {} (precision {}, rechecked at {})",
            r.verdict,
            r.lengths.mu,
            r.lengths.colength,
            r.lengths.socle_dim,
            r.precision,
            r.rechecked_at.map_or("-".into(), |n| n.to_string())
        )
    })
}

fn ulrich(cmd: &UlrichCommand, json: bool, out: &mut dyn Write) -> Outcome {
    match cmd {
        UlrichCommand::Verify {
            generators,
            series,
            args,
        } => {
            let h = Arc::new(semigroup(generators)?);
            let prec = precision_for(&h, series, args.prec)?;
            let opts = args.options();
            match parse_field(&args.field)? {
                FieldKind::Rational => {
                    ulrich_verify_in(Rationals::new(), &h, series, prec, &opts, json, out)
                }
                FieldKind::Prime(p) => {
                    ulrich_verify_in(PrimeField::new(p)?, &h, series, prec, &opts, json, out)
                }
            }
        }
        UlrichCommand::Enumerate {
            generators,
            min_bound,
            include_principal,
        } => {
            let h = Arc::new(semigroup(generators)?);
            let found = enumerate_ulrich_monomial(&h, *min_bound, *include_principal)?;
            let rendered: Vec<String> = found.iter().map(|e| e.to_string()).collect();
            emit(
                out,
                json,
                &json!({"min_bound": min_bound, "ulrich": rendered}),
                || {
                    if rendered.is_empty() {
                        "none".into()
                    } else {
                        rendered.join("\n")
                    }
                },
            )
        }
        UlrichCommand::Sweep {
            generators,
            template,
            args,
        } => {
            let h = Arc::new(semigroup(generators)?);
            let FieldKind::Prime(p) = parse_field(&args.field)? else {
                return Err(Failure::Usage(
                    "sweep needs a finite field, e.g. --field p:5".into(),
                ));
            };
            let f = PrimeField::new(p)?;
            let prec = precision_for(&h, template, args.prec)?;
            let templates = parse_series_list(template)?;
            let values = field_sweep(&h, &templates, &f, prec, &args.options())?;
            emit(
                out,
                json,
                &json!({"field": format!("p:{p}"), "precision": prec, "ulrich_at": values}),
                || format!("{values:?}"),
            )
        }
    }
}

fn verify(
    suite: Suite,
    genus_max: i64,
    path: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let certs = run_suite(suite, genus_max)?;
    let mut file;
    let sink: &mut dyn Write = match path {
        Some(p) => {
            file = BufWriter::new(File::create(p)?);
            &mut file
        }
        None => out,
    };
    for c in &certs {
        writeln!(
            sink,
            "{}",
            serde_json::to_string(&serde_json::to_value(c).unwrap()).unwrap()
        )?;
    }
    sink.flush()?;
    let failed = certs.iter().filter(|c| !c.pass).count();
    let summary = format!(
        "suite {suite}: {} certificates, {failed} failed",
        certs.len()
    );
    if failed > 0 {
        return Err(Failure::Verdict(summary));
    }
    writeln!(err, "{summary}")?;
    Ok(())
}

/// One survey line per semigroup followed by a summary line.
pub fn survey_lines(genus_max: i64) -> Result<Vec<Value>> {
    let mut all: Vec<NumericalSemigroup> = enumerate_by_genus(genus_max)?.collect();
    all.sort_by(|a, b| a.generators().cmp(b.generators()));
    let lines: Vec<(Value, [bool; 6])> = all
        .par_iter()
        .map(|h| {
            let r = classify(h);
            let sector = verify_counts(h)
                .ok()
                .map(|_| enumerate_reflexive_classes(&Arc::new(h.clone())).len());
            let flags = [
                r.gorenstein,
                r.almost_gorenstein,
                r.generalized_gorenstein,
                r.minimal_multiplicity,
                r.arf,
                r.finite_cm_type,
            ];
            let mut line = analysis(h);
            line.as_object_mut()
                .unwrap()
                .insert("key".into(), json!(h.key()));
            line.as_object_mut()
                .unwrap()
                .insert("reflexive_sector_count".into(), json!(sector));
            (line, flags)
        })
        .collect();
    let names = [
        "gorenstein",
        "almost_gorenstein",
        "generalized_gorenstein",
        "minimal_multiplicity",
        "arf",
        "finite_cm_type",
    ];
    let mut counts = [0usize; 6];
    for (_, f) in &lines {
        for (c, b) in counts.iter_mut().zip(f) {
            *c += usize::from(*b);
        }
    }
    assert!(
        counts[1] >= counts[0] && counts[2] >= counts[1],
        "class counts violate inclusions"
    );
    let mut summary = Map::new();
    summary.insert("semigroups".into(), json!(lines.len()));
    for (n, c) in names.iter().zip(counts) {
        summary.insert((*n).into(), json!(c));
    }
    let mut out: Vec<Value> = lines.into_iter().map(|(l, _)| l).collect();
    out.push(json!({ "summary": summary }));
    Ok(out)
}

fn survey(genus_max: i64, path: &PathBuf, err: &mut dyn Write) -> Outcome {
    let lines = survey_lines(genus_max)?;
    let mut w = BufWriter::new(File::create(path)?);
    for l in &lines {
        writeln!(w, "{}", serde_json::to_string(l).unwrap())?;
    }
    w.flush()?;
    writeln!(
        err,
        "wrote {} semigroups to {}",
        lines.len() - 1,
        path.display()
    )?;
    Ok(())
}
