//! The `queerds` command line: weight and arc diagrams, `DS` decompositions, depth,
//! signed multiplicities, manifest verification and direct oracle computations.

pub mod json;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use queer_core::weight::fmt_rat;
use queer_core::{
    decompose, depth, render_ascii, smult, vanishing_predicate, ArcDiagram, Parity, Rat, Weight, WeightDiagram, XSpec,
};
use queer_oracle::algebra::{AlgebraKind, LieSuperalgebra};
use queer_oracle::classify::ds_adjoint;
use queer_oracle::ds::{ds_module, nilpotent_grading};
use queer_oracle::simple::construct_simple;
use queer_oracle::{build_x_default, Q};

use json::{DecompositionJson, ModuleDump, XJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<queer_core::Error> for CliError {
    fn from(e: queer_core::Error) -> Self {
        match e {
            queer_core::Error::Parse(m) => CliError::Usage(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<queer_oracle::Error> for CliError {
    fn from(e: queer_oracle::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "queerds", version, about = "Duflo-Serganova functor on q(n)-modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Weight in tuple syntax, e.g. "(4,1,0,-1,-4)".
    #[arg(short = 'w', long = "weight", allow_hyphen_values = true, conflicts_with = "diagram")]
    pub weight: Option<String>,
    /// Weight diagram, e.g. "int: ^2 x o < o >".
    #[arg(short = 'd', long = "diagram")]
    pub diagram: Option<String>,
    /// Expected rank when the input is a diagram.
    #[arg(short = 'n', long = "n", requires = "diagram")]
    pub n: Option<usize>,
}

#[derive(Debug, Args, Default)]
pub struct XArgs {
    /// x = H_1 + H_2 (rank one, trace nonzero), or H_1 - H_2 with --trace-zero.
    #[arg(long, conflicts_with_all = ["rank1_nilpotent", "c", "cr"])]
    pub rank1: bool,
    /// x a root vector of an odd root (rank one, nilpotent).
    #[arg(long = "rank1-nilpotent", conflicts_with_all = ["c", "cr"])]
    pub rank1_nilpotent: bool,
    #[arg(long = "trace-zero", requires = "rank1")]
    pub trace_zero: bool,
    /// Coefficients c_j of x = sum c_j H_j, e.g. "1,-1/2".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "cr")]
    pub c: Option<String>,
    /// x = C_r = H_1 + ... + H_r.
    #[arg(long)]
    pub cr: Option<usize>,
    /// Number of rank one nilpotent summands, added to --c.
    #[arg(long = "nil-pairs", conflicts_with_all = ["rank1", "rank1_nilpotent", "cr"])]
    pub nil_pairs: Option<usize>,
}

impl XArgs {
    pub fn spec(&self) -> Result<XSpec, CliError> {
        let one = Rat::from_integer(1);
        if self.rank1 {
            let c = if self.trace_zero { [one, -one] } else { [one, one] };
            return Ok(XSpec::semisimple(&c)?);
        }
        if self.rank1_nilpotent {
            return Ok(XSpec::nilpotent());
        }
        if let Some(r) = self.cr {
            return Ok(XSpec::c_r(r));
        }
        let coeffs = match &self.c {
            Some(s) => XSpec::parse_coeffs(s)?,
            None => Vec::new(),
        };
        let nil = self.nil_pairs.unwrap_or(0);
        if coeffs.is_empty() && nil == 0 {
            return Err(CliError::Usage("choose x with --rank1, --rank1-nilpotent, --c, --cr or --nil-pairs".into()));
        }
        Ok(XSpec::new(nil, coeffs)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight diagram of a weight, or the weight of a diagram.
    Diagram {
        #[command(flatten)]
        input: Input,
    },
    /// The arc diagram, as an ASCII picture and a list of arcs.
    Arcs {
        #[command(flatten)]
        input: Input,
    },
    /// [DS_x L(lambda)] with multiplicities and gradings.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        x: XArgs,
    },
    /// Signed multiplicity of L(nu) in DS_x L(lambda) for x of rank s.
    Smult {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Rank of x, e.g. 1 or 1/2.
        #[arg(long)]
        s: String,
    },
    /// Depth of L(lambda) with a witness chain.
    Depth {
        #[command(flatten)]
        input: Input,
    },
    /// Runs a verification manifest (the bundled one by default).
    Verify {
        #[arg(long)]
        manifest: Option<std::path::PathBuf>,
        /// Also run the randomized zigzag, Hinich and restriction suites.
        #[arg(long)]
        suites: bool,
    },
    /// Direct linear algebra: DS_x of an algebra (--algebra, -n) or of L(lambda) (-w).
    Oracle {
        #[arg(long, requires = "rank")]
        algebra: Option<String>,
        #[arg(short = 'n', long = "n", id = "rank")]
        rank: Option<usize>,
        #[arg(short = 'w', long = "weight", allow_hyphen_values = true, conflicts_with = "algebra")]
        weight: Option<String>,
        #[command(flatten)]
        x: XArgs,
        /// Print DS_x(L(lambda)) as a module dump.
        #[arg(long, requires = "weight")]
        dump: bool,
    },
}

fn weight_of(input: &Input) -> Result<Weight, CliError> {
    match (&input.weight, &input.diagram) {
        (Some(w), None) => Ok(Weight::parse(w)?),
        (None, Some(d)) => {
            let diag = WeightDiagram::parse(d)?;
            let w = diag.to_weight();
            if let Some(n) = input.n {
                if w.n() != n {
                    return Err(CliError::Domain(format!("diagram {diag} has rank {}, not {n}", w.n())));
                }
            }
            Ok(w)
        }
        _ => Err(CliError::Usage("give exactly one of --weight and --diagram".into())),
    }
}

fn emit_json<T: serde::Serialize>(out: &mut dyn Write, v: &T) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(v).map_err(|e| CliError::Domain(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn cmd_diagram(input: &Input, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = weight_of(input)?;
    let d = WeightDiagram::from_weight(&w)?;
    let core: Vec<String> = w.core().iter().map(fmt_rat).collect();
    match format {
        Format::Text => {
            writeln!(out, "weight: {w}")?;
            writeln!(out, "diagram: {d}")?;
            writeln!(out, "glyphs: {}", d.glyphs())?;
            writeln!(out, "atypicality: {}", fmt_rat(&w.atypicality()))?;
            writeln!(out, "core: ({})", core.join(","))?;
        }
        Format::Json => emit_json(
            out,
            &serde_json::json!({
                "weight": w.coords().iter().map(json::Num::from_rat).collect::<Vec<_>>(),
                "diagram": d.to_string(),
                "glyphs": d.glyphs(),
                "atypicality": json::Num::from_rat(&w.atypicality()),
                "core": w.core().iter().map(json::Num::from_rat).collect::<Vec<_>>(),
            }),
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_arcs(input: &Input, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = weight_of(input)?;
    let a = ArcDiagram::from_weight(&w)?;
    let grid = a.base().grid();
    let labels: Vec<String> = a.arcs().iter().map(|arc| arc.label(grid)).collect();
    match format {
        Format::Text => {
            write!(out, "{}", render_ascii(&a))?;
            writeln!(out, "arcs: {}", labels.join(" "))?;
        }
        Format::Json => emit_json(
            out,
            &serde_json::json!({
                "weight": w.coords().iter().map(json::Num::from_rat).collect::<Vec<_>>(),
                "diagram": a.base().to_string(),
                "arcs": labels,
                "picture": render_ascii(&a),
            }),
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_decompose(input: &Input, x: &XArgs, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = weight_of(input)?;
    let spec = x.spec()?;
    let dec = decompose(&w, &spec)?;
    let note = (dec.is_zero() && spec == XSpec::nilpotent() && vanishing_predicate(&w))
        .then(|| format!("DS_x L{w} = 0: the vanishing predicate holds for rank one nilpotent x"));
    match format {
        Format::Text => {
            writeln!(out, "lambda: {w}")?;
            writeln!(out, "x: {spec}")?;
            if dec.is_zero() {
                writeln!(out, "DS_x L(lambda) = 0")?;
            }
            for e in &dec.entries {
                let h = match &e.h {
                    Some(h) => format!(" h=[{}]", h.iter().map(fmt_rat).collect::<Vec<_>>().join(",")),
                    None => String::new(),
                };
                let par = if e.parity == Parity::Balanced { " (with Pi)" } else { "" };
                writeln!(out, "L{} x{}{par}{h}", e.nu, e.mult)?;
            }
            if let Some(n) = &note {
                writeln!(out, "note: {n}")?;
            }
        }
        Format::Json => {
            let report = DecompositionJson { note, ..DecompositionJson::from_decomposition(&dec) };
            emit_json(out, &report)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_smult(input: &Input, nu: &str, s: &str, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = weight_of(input)?;
    let nu = Weight::parse(nu)?;
    let s = queer_core::weight::parse_rational(s)?;
    let v = smult(&w, &nu, s)?;
    match format {
        Format::Text => writeln!(out, "smult(L{w}, L{nu}; s={}) = {v}", fmt_rat(&s))?,
        Format::Json => emit_json(out, &serde_json::json!({"lambda": w.to_string(), "nu": nu.to_string(), "s": json::Num::from_rat(&s), "smult": v}))?,
    }
    Ok(EXIT_OK)
}

fn cmd_depth(input: &Input, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = weight_of(input)?;
    let d = depth(&w)?;
    match format {
        Format::Text => {
            writeln!(out, "depth L{w} = {} (atypicality {})", fmt_rat(&d.depth), fmt_rat(&w.atypicality()))?;
            for (x, nu) in &d.witness_chain {
                writeln!(out, "  {x} -> L{nu}")?;
            }
        }
        Format::Json => {
            let chain: Vec<_> = d
                .witness_chain
                .iter()
                .map(|(x, nu)| serde_json::json!({"x": XJson::from_spec(x), "nu": nu.coords().iter().map(json::Num::from_rat).collect::<Vec<_>>()}))
                .collect();
            emit_json(out, &serde_json::json!({"lambda": w.to_string(), "depth": json::Num::from_rat(&d.depth), "atypicality": json::Num::from_rat(&w.atypicality()), "witness_chain": chain}))?;
        }
    }
    Ok(EXIT_OK)
}

fn seed() -> Result<u64, CliError> {
    match std::env::var("QUEERDS_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("QUEERDS_SEED must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

fn cmd_verify(manifest: &Option<std::path::PathBuf>, suites: bool, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let (name, text) = match manifest {
        Some(p) => (p.display().to_string(), std::fs::read_to_string(p)?),
        None => ("bundled (bundled)".to_string(), verify::BUNDLED.to_string()),
    };
    let m = verify::parse_manifest(&text)?;
    let rep = verify::verify(&name, &m, suites, seed()?)?;
    match format {
        Format::Text => {
            writeln!(out, "manifest: {name}")?;
            for c in &rep.cases {
                if c.pass {
                    writeln!(out, "PASS {}: {}", c.id, c.got)?;
                } else {
                    writeln!(out, "FAIL {}: expected {}, got {} (sdim {}|{})", c.id, c.expected, c.got, c.sdim[0], c.sdim[1])?;
                }
            }
            for s in &rep.suites {
                let status = if s.failures.is_empty() { "PASS" } else { "FAIL" };
                writeln!(out, "{status} suite {}: {} cases, {} failures", s.name, s.cases, s.failures.len())?;
                for f in &s.failures {
                    writeln!(out, "  {f}")?;
                }
            }
            let failed = rep.cases.iter().filter(|c| !c.pass).count();
            writeln!(out, "{} cases, {} failed", rep.cases.len(), failed)?;
        }
        Format::Json => emit_json(out, &rep)?,
    }
    Ok(if rep.pass { EXIT_OK } else { EXIT_VERIFY })
}

fn cmd_oracle(
    algebra: &Option<String>,
    rank: Option<usize>,
    weight: &Option<String>,
    x: &XArgs,
    dump: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let spec = x.spec()?;
    if let Some(a) = algebra {
        let kind = AlgebraKind::parse(a).ok_or_else(|| CliError::Usage(format!("unknown algebra {a:?}; use q, sq, pq or psq")))?;
        let n = rank.expect("clap requires -n");
        if n == 0 || n > 4 {
            return Err(CliError::Domain(format!("rank {n} is outside 1..=4")));
        }
        let g = LieSuperalgebra::<Q>::new(kind, n);
        let rep = ds_adjoint(&g, &build_x_default::<Q>(&spec, n)?)?;
        let class = rep.class.map_or("unclassified".to_string(), |c| c.to_string());
        match format {
            Format::Text => {
                writeln!(out, "DS_x({kind}({n})) for x: {spec}")?;
                writeln!(out, "sdim: ({}|{})", rep.sdim.0, rep.sdim.1)?;
                writeln!(out, "abelian: {}", rep.abelian)?;
                writeln!(out, "class: {class}")?;
                if let Some(e) = rep.embedding_verified {
                    writeln!(out, "embedding verified: {e}")?;
                }
            }
            Format::Json => emit_json(
                out,
                &serde_json::json!({
                    "algebra": kind.to_string(), "n": n, "x": XJson::from_spec(&spec),
                    "sdim": [rep.sdim.0, rep.sdim.1], "abelian": rep.abelian, "class": class,
                    "odd_square_nonzero": rep.odd_square_nonzero, "embedding_verified": rep.embedding_verified,
                    "centralizes": rep.centralizes,
                }),
            )?,
        }
        return Ok(EXIT_OK);
    }
    let Some(w) = weight else {
        return Err(CliError::Usage("oracle needs --algebra with -n, or --weight".into()));
    };
    let w = Weight::parse(w)?;
    let m = construct_simple::<Q>(&w)?;
    let xe = build_x_default::<Q>(&spec, w.n())?;
    let grading = if spec.ss_coeffs().is_empty() { nilpotent_grading(&xe) } else { None };
    let ds = ds_module(&m, &xe, grading.as_deref())?;
    if dump {
        emit_json(out, &ModuleDump::from_module(&ds.module))?;
        return Ok(EXIT_OK);
    }
    let (e, o) = ds.sdim();
    match format {
        Format::Text => {
            writeln!(out, "L{w}: sdim ({}|{})", m.sdim().0, m.sdim().1)?;
            writeln!(out, "DS_x L(lambda) for x: {spec}: sdim ({e}|{o})")?;
            for (wt, (a, b)) in ds.module.character() {
                writeln!(out, "  weight {wt:?}: ({a}|{b})")?;
            }
        }
        Format::Json => emit_json(
            out,
            &serde_json::json!({"lambda": w.to_string(), "module_sdim": [m.sdim().0, m.sdim().1], "x": XJson::from_spec(&spec), "ds_sdim": [e, o], "h": ds.h}),
        )?,
    }
    Ok(EXIT_OK)
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Diagram { input } => cmd_diagram(input, f, out),
        Command::Arcs { input } => cmd_arcs(input, f, out),
        Command::Decompose { input, x } => cmd_decompose(input, x, f, out),
        Command::Smult { input, nu, s } => cmd_smult(input, nu, s, f, out),
        Command::Depth { input } => cmd_depth(input, f, out),
        Command::Verify { manifest, suites } => cmd_verify(manifest, *suites, f, out),
        Command::Oracle { algebra, rank, weight, x, dump } => cmd_oracle(algebra, *rank, weight, x, *dump, f, out),
    }
}

/// Parses `args` (including the program name) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{}", e.render());
                    return if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { EXIT_USAGE } else { EXIT_OK };
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            let _ = writeln!(err, "usage: queerds <diagram|arcs|decompose|smult|depth|verify|oracle> [options]; see --help");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
