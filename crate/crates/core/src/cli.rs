//! The `surfgraph` command line. JSON results go to stdout, a short human
//! summary to stderr.
//!
//! Exit codes: 0 success, 2 unreadable or invalid input, 3 enumeration guard
//! exceeded, 4 an identity failed in `verify` or `batch`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::enumeration::{
    bao_witness_vector, check_integral_reciprocity, check_reciprocity, count_integral, integral_quasipolynomial,
    polynomial, Kind,
};
use crate::error::{Error, Result};
use crate::generator::{corpus_stats, generate, CorpusSpec};
use crate::orientation::{count_class, tbo_formula_with_vertex_count, tbo_generating_poly_formula, tbo_histogram, Orientation, OrientationClass};
use crate::ribbon::{write_corpus, RibbonGraph};
use crate::verify::{verify_corpus, verify_graph, MAX_PERIOD};

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_IDENTITY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "surfgraph", version, about = "Orientations, tensions and flows of maps on orientable surfaces")]
pub struct Cli {
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Tension,
    Flow,
    LocalTension,
    BalancedFlow,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Tension => Kind::Tension,
            KindArg::Flow => Kind::Flow,
            KindArg::LocalTension => Kind::LocalTension,
            KindArg::BalancedFlow => Kind::BalancedFlow,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassArg {
    Ao,
    Tco,
    Bao,
    Tbo,
}

impl From<ClassArg> for OrientationClass {
    fn from(c: ClassArg) -> OrientationClass {
        match c {
            ClassArg::Ao => OrientationClass::Ao,
            ClassArg::Tco => OrientationClass::Tco,
            ClassArg::Bao => OrientationClass::Bao,
            ClassArg::Tbo => OrientationClass::Tbo,
        }
    }
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Number of edges.
    #[arg(long)]
    pub edges: usize,
    #[arg(long)]
    pub genus: Option<usize>,
    /// Keep only planar maps.
    #[arg(long)]
    pub planar: bool,
    /// Keep isomorphic duplicates.
    #[arg(long)]
    pub no_dedupe: bool,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        CorpusSpec {
            edges: self.edges,
            genus: self.genus,
            planar: self.planar.then_some(true),
            connected: true,
            dedupe: !self.no_dedupe,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler data, bridges and single-face edges.
    Info { path: PathBuf },
    /// Write the dual map.
    Dual {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count the orientations in a class.
    Count {
        path: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Nowhere-zero counting polynomial.
    Poly {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Nowhere-zero integral count with absolute values below k.
    Integral {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "local-tension")]
        kind: KindArg,
        #[arg(long)]
        k: u64,
    },
    /// Pair count against the polynomial at -k.
    Reciprocity {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        k: u64,
    },
    /// Every identity on one map.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        kmax: u64,
    },
    /// Every identity on a generated corpus.
    Batch {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value_t = 3)]
        kmax: u64,
    },
    /// Write a generated corpus as newline-delimited map files.
    Generate {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Witness vector of a boundary acyclic orientation.
    Witness {
        path: PathBuf,
        /// One `+` or `-` per edge.
        #[arg(allow_hyphen_values = true)]
        orientation: String,
    },
    /// Clockwise-face histogram of totally bi-walkable orientations.
    CwHist { path: PathBuf },
}

/// Result of a command: its JSON output, a summary line, and whether every
/// identity it checked held.
struct Outcome {
    json: Value,
    summary: String,
    ok: bool,
}

impl Outcome {
    fn ok(json: Value, summary: impl Into<String>) -> Self {
        Outcome {
            json,
            summary: summary.into(),
            ok: true,
        }
    }
}

fn load(path: &Path) -> Result<RibbonGraph> {
    RibbonGraph::read_file(path)
}

fn execute(cmd: &Command, stdout: &mut dyn Write) -> Result<Option<Outcome>> {
    let out = match cmd {
        Command::Info { path } => {
            let g = load(path)?;
            let bridges = g.underlying().bridges();
            let single: Vec<usize> = (0..g.edge_count()).filter(|&e| g.is_single_face_edge(e)).collect();
            let e = g.euler_data();
            Outcome::ok(
                json!({
                    "euler": e,
                    "canonical_code": g.canonical_code().to_hex(),
                    "bridges": bridges,
                    "single_face_edges": single,
                }),
                format!(
                    "V={} E={} F={} c={} g={}, {} bridge(s), {} single-face edge(s)",
                    e.v_count,
                    e.e_count,
                    e.f_count,
                    e.components,
                    e.genus,
                    bridges.len(),
                    single.len()
                ),
            )
        }
        Command::Dual { path, out } => {
            let d = load(path)?.dual();
            match out {
                Some(p) => {
                    d.write_file(p)?;
                    Outcome::ok(json!({ "written": p }), format!("dual written to {}", p.display()))
                }
                None => Outcome::ok(serde_json::from_str(&d.to_json())?, "dual map"),
            }
        }
        Command::Count { path, class } => {
            let c = OrientationClass::from(*class);
            let n = count_class(&load(path)?, c)?;
            Outcome::ok(json!({ "class": c, "count": n }), format!("|{c}| = {n}"))
        }
        Command::Poly { path, kind } => {
            let kind = Kind::from(*kind);
            let p = polynomial(&load(path)?, kind)?;
            Outcome::ok(json!({ "kind": kind, "coefficients": p }), format!("{kind}: {p}"))
        }
        Command::Integral { path, kind, k } => {
            let kind = Kind::from(*kind);
            let n = count_integral(&load(path)?, kind, *k, true)?;
            Outcome::ok(
                json!({ "kind": kind, "k": k, "count": n }),
                format!("{n} nowhere-zero integral {kind}s below {k}"),
            )
        }
        Command::Reciprocity { path, kind, k } => {
            let g = load(path)?;
            let kind = Kind::from(*kind);
            let c = check_reciprocity(&g, kind, &polynomial(&g, kind)?, *k)?;
            let mut json = json!({ "modular": c });
            let mut ok = c.holds;
            let mut summary = format!("{kind} at -{k}: pairs {} vs {} ({})", c.pairs, c.signed_value, verdict(c.holds));
            if kind == Kind::LocalTension {
                let q = integral_quasipolynomial(&g, kind, MAX_PERIOD)?;
                let ic = check_integral_reciprocity(&g, &q, *k)?;
                ok &= ic.holds;
                summary.push_str(&format!("; integral pairs {} ({})", ic.pairs, verdict(ic.holds)));
                json["integral"] = json!({ "check": ic, "quasipolynomial": q });
            }
            Outcome { json, summary, ok }
        }
        Command::Verify { path, kmax } => {
            let r = verify_graph(&load(path)?, *kmax)?;
            let failed = r.failures().count();
            Outcome {
                summary: format!("{} identities checked, {failed} failed", r.checks.len()),
                ok: r.passed(),
                json: serde_json::to_value(&r)?,
            }
        }
        Command::Batch { corpus, kmax } => {
            let r = verify_corpus(&corpus.spec(), *kmax)?;
            Outcome {
                summary: format!("{} maps verified, {} with failures", r.graphs, r.failures),
                ok: r.failures == 0,
                json: serde_json::to_value(&r)?,
            }
        }
        Command::Generate { corpus, out } => {
            let graphs = generate(&corpus.spec())?;
            let stats = corpus_stats(&graphs);
            let summary = format!("{} maps generated", graphs.len());
            match out {
                Some(p) => {
                    let file = std::io::BufWriter::new(std::fs::File::create(p)?);
                    write_corpus(file, &graphs)?;
                    Outcome::ok(json!({ "written": p, "stats": stats }), summary)
                }
                None => {
                    write_corpus(&mut *stdout, &graphs)?;
                    eprintln!("{summary}");
                    return Ok(None);
                }
            }
        }
        Command::Witness { path, orientation } => {
            let g = load(path)?;
            let o: Orientation = orientation.parse()?;
            o.check(g.edge_count())?;
            let p = bao_witness_vector(&g, &o)?;
            Outcome::ok(json!({ "orientation": o, "witness": p }), "witness vector")
        }
        Command::CwHist { path } => {
            let g = load(path)?;
            let h = tbo_histogram(&g)?;
            let formula = tbo_generating_poly_formula(&g)?;
            let primal = tbo_formula_with_vertex_count(&g, g.vertex_count())?;
            let matches = h.to_polynomial() == formula;
            Outcome {
                json: json!({
                    "histogram": h.counts,
                    "formula": formula,
                    "formula_with_primal_vertex_count": primal,
                    "matches": matches,
                }),
                summary: format!("histogram {} vs formula {} ({})", h.to_polynomial().display_in("q"), formula.display_in("q"), verdict(matches)),
                ok: matches,
            }
        }
    };
    Ok(Some(out))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge(_) => EXIT_GUARD,
        _ => EXIT_INPUT,
    }
}

/// Runs the command line `args` (program name first), writing to the given
/// streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    if let Some(n) = cli.jobs {
        // fails only when a pool already exists, in which case it is reused
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let start = Instant::now();
    match execute(&cli.command, stdout) {
        Ok(None) => 0,
        Ok(Some(out)) => {
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            let _ = writeln!(stderr, "{} [{:.2?}]", out.summary, start.elapsed());
            if out.ok {
                0
            } else {
                EXIT_IDENTITY
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
