use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qred_core::cascade::kostant_cascade;
use qred_core::classify::classify_parabolic;
use qred_core::seaweed::{biparabolic_basis, seaweed_index, BiparabolicSpec};
use qred_core::stabilizer::{certify_with_workers, FormKind};
use qred_core::tables::{compare_golden, non_qr_table, reference_tables, write_table, GoldenStatus, Table};
use qred_core::{Family, RootSubset, RootSystem, SimpleType};
use serde_json::json;

const EXIT_USAGE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;
const EXIT_GOLDEN_MISMATCH: u8 = 1;

#[derive(Parser)]
#[command(name = "qred", version, about = "Cascades, indices and quasi-reductivity of parabolic subalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Query {
    /// Family letter A..G.
    family: String,
    rank: usize,
    /// Simple roots of the first subset, comma separated; "" is the empty set. Defaults to all.
    #[arg(long)]
    pi: Option<String>,
    /// Simple roots of the second subset. Defaults to all.
    #[arg(long)]
    pi2: Option<String>,
    /// Print JSON instead of key: value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cascade of a subset.
    Cascade(Query),
    /// Print dimension and index of the seaweed q(pi, pi2).
    Index(Query),
    /// Classify the parabolic with Levi roots --pi.
    Classify(Query),
    /// Search for a torus certificate of quasi-reductivity.
    Verify {
        #[command(flatten)]
        query: Query,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Also write the certificate to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate tables as CSV and markdown and compare with the golden copies.
    Tables {
        /// Restrict to the non-QR list of one type, e.g. `tables D 6`.
        family: Option<String>,
        rank: Option<usize>,
        /// Output directory; defaults to $QRED_OUT_DIR or ./qred-tables.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<qred_core::Error> for Failure {
    fn from(e: qred_core::Error) -> Self {
        let code = match e {
            qred_core::Error::Io(_) => 1,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn simple_type(family: &str, rank: usize) -> qred_core::Result<SimpleType> {
    SimpleType::new(Family::from_letter(family)?, rank)
}

fn subset(text: &Option<String>, rank: usize) -> qred_core::Result<RootSubset> {
    match text {
        Some(t) => RootSubset::parse(t, rank),
        None => Ok(RootSubset::full(rank)),
    }
}

fn resolve(q: &Query) -> qred_core::Result<(RootSystem, BiparabolicSpec)> {
    let ty = simple_type(&q.family, q.rank)?;
    let spec = BiparabolicSpec::new(ty, subset(&q.pi, q.rank)?, subset(&q.pi2, q.rank)?)?;
    Ok((RootSystem::new(ty), spec))
}

fn join(v: &[impl ToString]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_cascade(q: &Query) -> Outcome {
    let ty = simple_type(&q.family, q.rank)?;
    let s = subset(&q.pi, q.rank)?;
    let r = RootSystem::new(ty);
    let c = kostant_cascade(&r, s);
    if q.json {
        let nodes: Vec<_> = c
            .nodes
            .iter()
            .map(|n| json!({"support": n.support.labels(), "eps": r.root(n.eps).coeffs(), "gamma": n.gamma.len()}))
            .collect();
        let v = json!({"type": ty.to_string(), "subset": s.labels(), "k": c.len(), "nodes": nodes});
        return Ok((format!("{v}\n"), 0));
    }
    let mut out = format!("type: {ty}\nsubset: {}\nk: {}\n", join(&s.labels()), c.len());
    for (i, n) in c.nodes.iter().enumerate() {
        out.push_str(&format!(
            "node {}: support={} eps={} gamma={}\n",
            i + 1,
            join(&n.support.labels()),
            join(r.root(n.eps).coeffs()),
            n.gamma.len()
        ));
    }
    Ok((out, 0))
}

fn cmd_index(q: &Query) -> Outcome {
    let (r, spec) = resolve(q)?;
    let dim = biparabolic_basis(&r, &spec)?.dim();
    let index = seaweed_index(&r, &spec)?;
    let (p1, p2) = (spec.pi1.labels(), spec.pi2.labels());
    if q.json {
        let v = json!({"type": spec.ty.to_string(), "pi1": p1, "pi2": p2, "dim": dim, "index": index});
        return Ok((format!("{v}\n"), 0));
    }
    Ok((format!("type: {}\npi1: {}\npi2: {}\ndim: {dim}\nindex: {index}\n", spec.ty, join(&p1), join(&p2)), 0))
}

fn cmd_classify(q: &Query) -> Outcome {
    let ty = simple_type(&q.family, q.rank)?;
    let v = classify_parabolic(&RootSystem::new(ty), subset(&q.pi, q.rank)?)?;
    if q.json {
        let text = serde_json::to_string(&v).map_err(|e| Failure { code: 1, message: e.to_string() })?;
        return Ok((format!("{text}\n"), 0));
    }
    Ok((v.to_text(), 0))
}

fn cmd_verify(q: &Query, seed: u64, trials: usize, workers: usize, out: &Option<PathBuf>) -> Outcome {
    if trials == 0 {
        return Err(Failure { code: EXIT_USAGE, message: "--trials must be at least 1".into() });
    }
    let (r, spec) = resolve(q)?;
    let c = certify_with_workers(&r, &spec, trials, seed, workers)?;
    let stats = (c.cascade_trials, c.dense_trials, c.irregular_trials);
    let Some(cert) = c.certificate else {
        let text = if q.json {
            json!({"certified": false, "cascade_trials": stats.0, "dense_trials": stats.1, "irregular_trials": stats.2})
                .to_string()
                + "\n"
        } else {
            format!(
                "certified: false\ncascade_trials: {}\ndense_trials: {}\nirregular_trials: {}\n",
                stats.0, stats.1, stats.2
            )
        };
        return Ok((text, EXIT_EXHAUSTED));
    };
    let text = cert.to_text();
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })?;
    }
    let form = match cert.form {
        FormKind::Cascade(_) => "cascade",
        FormKind::Dense => "dense",
    };
    if q.json {
        let v = json!({
            "certified": true,
            "dim": cert.stab.dim(),
            "index": cert.index,
            "form": form,
            "trial": cert.trial,
            "certificate": text,
        });
        return Ok((format!("{v}\n"), 0));
    }
    Ok((format!("certified: true\ndim: {}\nform: {form}\n{text}", cert.stab.dim()), 0))
}

fn out_dir(out: &Option<PathBuf>) -> PathBuf {
    out.clone()
        .or_else(|| std::env::var_os("QRED_OUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("qred-tables"))
}

fn cmd_tables(family: &Option<String>, rank: Option<usize>, out: &Option<PathBuf>) -> Outcome {
    let tables: Vec<Table> = match (family, rank) {
        (Some(f), Some(l)) => vec![non_qr_table(simple_type(f, l)?)?],
        (None, None) => reference_tables()?,
        _ => return Err(Failure { code: EXIT_USAGE, message: "give both a family and a rank, or neither".into() }),
    };
    let dir = out_dir(out);
    let mut text = format!("dir: {}\n", dir.display());
    let mut code = 0;
    for t in &tables {
        write_table(t, &dir)?;
        let status = match compare_golden(t) {
            GoldenStatus::Match => "golden match".to_string(),
            GoldenStatus::Missing => "no golden copy".to_string(),
            GoldenStatus::Differs { line, expected, actual } => {
                code = EXIT_GOLDEN_MISMATCH;
                format!("golden mismatch at line {line}: expected {expected:?}, got {actual:?}")
            }
        };
        text.push_str(&format!("{}: {} rows, {status}\n", t.name, t.rows.len()));
    }
    if let [t] = tables.as_slice() {
        text.push_str(&t.to_markdown());
    }
    Ok((text, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Cascade(q) => cmd_cascade(q),
        Command::Index(q) => cmd_index(q),
        Command::Classify(q) => cmd_classify(q),
        Command::Verify { query, seed, trials, workers, out } => cmd_verify(query, *seed, *trials, *workers, out),
        Command::Tables { family, rank, out } => cmd_tables(family, *rank, out),
    };
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
