use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lsa_core::algebra::{algebra_from_json, algebra_to_json, peek_field, FieldMode};
use lsa_core::classification::catalog::{self, Params, ENTRIES};
use lsa_core::classification::classify;
use lsa_core::completeness::{check_all_criteria, Criterion};
use lsa_core::decomposition::{make_canonical, TransportWord};
use lsa_core::field::{set_numeric_eps, Cf, Qi, Scalar};
use lsa_core::graph::{analyze, GraphKind};
use lsa_core::ideals::is_simple;
use lsa_core::{Algebra, Error};

#[derive(Parser)]
#[command(name = "lsa", version, about = "Analyze left-symmetric algebras given by structure constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Work with complex doubles instead of exact Gaussian rationals.
    #[arg(long, global = true)]
    numeric: bool,
    /// Tolerance for --numeric.
    #[arg(long, global = true, value_name = "X")]
    eps: Option<f64>,
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    L,
    R,
}

#[derive(Subcommand)]
enum Command {
    /// Identities and completeness.
    Check {
        /// Algebra file, or a catalog name.
        input: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Canonical root-space decomposition.
    Decompose {
        input: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Coordinates of the element whose Cartan subalgebra starts the construction, e.g. "1,0,1".
        #[arg(long)]
        seed: Option<String>,
    },
    /// Root graphs and their properties.
    Graph {
        input: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "l")]
        kind: Kind,
        /// Write the graph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Simplicity.
    Simple {
        input: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Classification of simple complete algebras in one dimension.
    Classify {
        #[arg(long)]
        dim: usize,
        /// Directory for one DOT file per graph.
        #[arg(long, value_name = "DIR")]
        dot: Option<PathBuf>,
    },
    /// Print or write a catalog algebra; lists the catalog without a name.
    Catalog {
        name: Option<String>,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
    },
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

enum Loaded {
    Exact(Algebra<Qi>),
    Numeric(Algebra<Cf>),
}

macro_rules! with_algebra {
    ($loaded:expr, $a:ident => $body:expr) => {
        match $loaded {
            Loaded::Exact($a) => $body,
            Loaded::Numeric($a) => $body,
        }
    };
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::BadParameters(_) | Error::DimensionMismatch(_) | Error::TemplateExhausted(_) => 2,
        Error::NumericFallback { .. } | Error::SolverIncomplete(_) => 3,
        _ => 1,
    }
}

fn parse_params(raw: &[String]) -> lsa_core::Result<Params> {
    let mut out = BTreeMap::new();
    for p in raw {
        let (k, v) = p.split_once('=').ok_or_else(|| Error::BadParameters(format!("expected K=V, got {p:?}")))?;
        out.insert(k.trim().to_string(), v.trim().parse::<Qi>()?);
    }
    Ok(out)
}

fn to_numeric(a: &Algebra<Qi>) -> Algebra<Cf> {
    a.map_field(|x| Cf::from_complex(x.to_complex()).expect("numeric field accepts complex values"))
}

fn load(input: &str, params: &[String], g: &Global) -> lsa_core::Result<Loaded> {
    let path = Path::new(input);
    if path.exists() {
        if !params.is_empty() {
            return Err(Error::BadParameters("--param applies to catalog names only".into()));
        }
        let text = std::fs::read_to_string(path)?;
        return Ok(if g.numeric || peek_field(&text)? == FieldMode::Numeric {
            Loaded::Numeric(algebra_from_json(&text)?)
        } else {
            Loaded::Exact(algebra_from_json(&text)?)
        });
    }
    if catalog::entry(input).is_none() {
        return Err(Error::Parse(format!("{input:?} is neither a file nor a catalog entry")));
    }
    let a = catalog::catalog(input, &parse_params(params)?)?;
    Ok(if g.numeric { Loaded::Numeric(to_numeric(&a)) } else { Loaded::Exact(a) })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn criterion_line(out: &mut String, label: &str, c: &Option<Criterion>) {
    if let Some(c) = c {
        let _ = write!(out, "  {label}: {}", yes(c.holds));
        if let Some(w) = &c.witness {
            let _ = write!(out, " ({w})");
        }
        out.push('\n');
    }
}

fn check<F: Scalar>(a: &Algebra<F>, _g: &Global) -> lsa_core::Result<Report> {
    let b = a.basis();
    let violation = a.left_symmetry_violation();
    let ls = violation.is_none();
    let completeness = if ls { Some(check_all_criteria(a)?) } else { None };
    let complete = completeness.as_ref().map(|r| r.verdict);
    let mut text = format!(
        "left-symmetric: {}, complete: {}\n",
        yes(ls),
        complete.map_or("n/a", yes)
    );
    let _ = writeln!(text, "algebra: {} (dim {})", a.name(), a.dim());
    let mut js = json!({
        "algebra": a.name(),
        "dim": a.dim(),
        "left_symmetric": ls,
        "jacobi": a.check_lie_admissible(),
        "l_representation": a.check_l_representation(),
        "lr_identity": a.check_lr_identity(),
    });
    if let Some(v) = &violation {
        let [i, j, k] = v.triple;
        let w = format!("({}, {}, {})", b[i], b[j], b[k]);
        let _ = writeln!(
            text,
            "witness: {w}: (x,y,z) = {}, (y,x,z) = {}",
            a.format_vector(&v.lhs),
            a.format_vector(&v.rhs)
        );
        js["witness"] = json!(w);
    }
    let _ = writeln!(text, "jacobi: {}", yes(a.check_lie_admissible()));
    let _ = writeln!(text, "L is a representation: {}", yes(a.check_l_representation()));
    let _ = writeln!(text, "L/R identity: {}", yes(a.check_lr_identity()));
    if let Some(r) = &completeness {
        let _ = writeln!(text, "completeness criteria:");
        criterion_line(&mut text, "R(x) nilpotent", &r.nilpotent);
        criterion_line(&mut text, "P(x) = 1", &r.det_is_one);
        criterion_line(&mut text, "P(x) != 0", &r.det_nonvanishing);
        criterion_line(&mut text, "Tr R(x) = 0", &Some(r.trace_zero.clone()));
        js["completeness"] = serde_json::to_value(r).expect("report serializes");
    }
    js["complete"] = json!(complete);
    Ok(Report { text, json: js, ok: ls && complete == Some(true) })
}

fn parse_seed<F: Scalar>(raw: &str, n: usize) -> lsa_core::Result<Vec<F>> {
    let v: Vec<F> = raw
        .split(',')
        .map(|s| {
            let q: Qi = s.trim().parse()?;
            if F::EXACT {
                F::from_json(&q.to_json())
            } else {
                F::from_complex(q.to_complex()).ok_or_else(|| Error::Parse(format!("bad seed coordinate {s}")))
            }
        })
        .collect::<lsa_core::Result<_>>()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!("seed has {} coordinates, algebra has dimension {n}", v.len())));
    }
    Ok(v)
}

fn span<F: Scalar>(a: &Algebra<F>, vs: &[Vec<F>]) -> String {
    format!("span({})", vs.iter().map(|v| a.format_vector(v)).collect::<Vec<_>>().join(", "))
}

fn decompose<F: Scalar>(a: &Algebra<F>, seed: Option<&str>, g: &Global) -> lsa_core::Result<Report> {
    let seed = seed.map(|s| parse_seed::<F>(s, a.dim())).transpose()?;
    let cd = make_canonical(a, seed.as_deref())?;
    let mut text = String::new();
    let _ = writeln!(text, "algebra: {} (dim {})", a.name(), a.dim());
    let _ = writeln!(text, "initial cartan: {}", span(a, cd.initial.basis()));
    let _ = writeln!(text, "canonical cartan: {}", span(a, cd.cartan.basis()));
    let word: Vec<String> = cd.word.factors.iter().map(|y| a.format_vector(y)).collect();
    let _ = writeln!(text, "transport word: [{}]", word.join(", "));
    if g.verbose {
        // the word acts right to left, carrying the point to the unit
        let e = a.unital_extension();
        let mut point = cd.point.clone();
        let _ = writeln!(text, "  start: {}", e.extended.format_vector(&point));
        for y in cd.word.factors.iter().rev() {
            let step = TransportWord { factors: vec![y.clone()] };
            point = step.action(&e)?.apply(&point);
            let _ = writeln!(text, "  exp L({}): {}", a.format_vector(y), e.extended.format_vector(&point));
        }
    }
    let _ = writeln!(text, "root spaces:");
    for p in &cd.decomposition.parts {
        let root: Vec<String> = p.root.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "  ({}): {}", root.join(", "), span(a, p.space.basis()));
    }
    let js = json!({
        "algebra": a.name(),
        "initial": cd.initial.basis().iter().map(|v| a.format_vector(v)).collect::<Vec<_>>(),
        "cartan": cd.cartan.basis().iter().map(|v| a.format_vector(v)).collect::<Vec<_>>(),
        "word": word,
        "decomposition": cd.decomposition.to_json(),
    });
    Ok(Report { text, json: js, ok: true })
}

fn graph<F: Scalar>(a: &Algebra<F>, kind: Kind, dot: Option<&Path>) -> lsa_core::Result<Report> {
    let cd = make_canonical(a, None)?;
    let an = analyze(a, &cd)?;
    let g = match kind {
        Kind::L => &an.left,
        Kind::R => &an.right,
    };
    if let Some(p) = dot {
        std::fs::write(p, g.to_dot())?;
    }
    let mut text = String::new();
    let kind_name = match g.kind {
        GraphKind::Left => "left",
        GraphKind::Right => "right",
    };
    let _ = writeln!(text, "algebra: {} (dim {})", a.name(), a.dim());
    let vs: Vec<String> = g.vertices.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "{kind_name} graph vertices: {}", vs.join(", "));
    for e in &g.edges {
        let c = e.coefficient.as_ref().map(|c| format!(" [{c}]")).unwrap_or_default();
        let _ = writeln!(text, "  {} -> {}{c}", e.from, e.to);
    }
    let _ = writeln!(text, "properties:");
    for c in &an.report.checks {
        let _ = write!(text, "  {}: {}", c.property, if c.holds { "holds" } else { "fails" });
        if let Some(w) = &c.witness {
            let _ = write!(text, " at {w}");
        }
        for n in &c.notes {
            let _ = write!(text, " ({n})");
        }
        text.push('\n');
    }
    let js = json!({
        "algebra": a.name(),
        "graph": g.to_json(),
        "properties": an.report.to_json(),
    });
    Ok(Report { text, json: js, ok: an.report.all_hold() })
}

fn simple<F: Scalar>(a: &Algebra<F>) -> lsa_core::Result<Report> {
    let r = is_simple(a);
    let mut text = format!("{}: {}\n", a.name(), r.verdict());
    if let Some(w) = &r.witness {
        let _ = writeln!(text, "proper ideal: {}", span(a, w.subspace.basis()));
    }
    let mut js = r.to_json();
    js["algebra"] = json!(a.name());
    Ok(Report { text, json: js, ok: r.simple })
}

fn classify_cmd(dim: usize, dot: Option<&Path>) -> lsa_core::Result<Report> {
    let r = classify(dim)?;
    if let Some(dir) = dot {
        std::fs::create_dir_all(dir)?;
        let mut k = 0;
        for c in &r.classes {
            for m in &c.members {
                if let Some(d) = &m.dot {
                    k += 1;
                    std::fs::write(dir.join(format!("dim{dim}-{k}.dot")), d)?;
                }
            }
        }
    }
    Ok(Report { text: r.to_string(), json: r.to_json(), ok: r.verified() })
}

fn catalog_cmd(name: Option<&str>, params: &[String], emit: Option<&Path>) -> lsa_core::Result<Report> {
    let Some(name) = name else {
        let mut text = String::new();
        for e in ENTRIES {
            let ps: Vec<String> = e.params.iter().map(|(p, d)| format!("{p}={d}")).collect();
            let _ = writeln!(text, "{:<26} {:<22} {}", e.name, ps.join(" "), e.summary);
        }
        let js = json!(ENTRIES.iter().map(|e| e.name).collect::<Vec<_>>());
        return Ok(Report { text, json: js, ok: true });
    };
    let a = catalog::catalog(name, &parse_params(params)?)?;
    let body = algebra_to_json(&a);
    match emit {
        Some(p) => {
            std::fs::write(p, &body)?;
            Ok(Report { text: format!("wrote {} to {}\n", a.name(), p.display()), json: json!({ "written": p }), ok: true })
        }
        None => {
            let js: Value = serde_json::from_str(&body).expect("valid JSON");
            Ok(Report { text: body, json: js, ok: true })
        }
    }
}

fn run(cli: &Cli) -> lsa_core::Result<Report> {
    let g = &cli.global;
    match &cli.command {
        Command::Check { input, params } => with_algebra!(load(input, params, g)?, a => check(&a, g)),
        Command::Decompose { input, params, seed } => {
            with_algebra!(load(input, params, g)?, a => decompose(&a, seed.as_deref(), g))
        }
        Command::Graph { input, params, kind, dot } => {
            with_algebra!(load(input, params, g)?, a => graph(&a, *kind, dot.as_deref()))
        }
        Command::Simple { input, params } => with_algebra!(load(input, params, g)?, a => simple(&a)),
        Command::Classify { dim, dot } => classify_cmd(*dim, dot.as_deref()),
        Command::Catalog { name, params, emit } => catalog_cmd(name.as_deref(), params, emit.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(eps) = cli.global.eps {
        if !cli.global.numeric {
            eprintln!("error: --eps needs --numeric");
            return ExitCode::from(2);
        }
        set_numeric_eps(eps);
    }
    match run(&cli) {
        Ok(r) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&r.json).expect("report serializes"));
            } else {
                print!("{}", r.text);
            }
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        Err(e) => {
            if cli.global.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
