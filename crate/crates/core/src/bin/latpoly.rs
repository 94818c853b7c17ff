use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use latpoly::adjoint::{freeness_check, theorem_tm1_check, theorem_tm2_check};
use latpoly::classification::{
    classify_empty_interior, classify_empty_simplex, classify_gorenstein_small_interior,
    classify_unique_interior, ClassificationVerdict,
};
use latpoly::cones::{is_gorenstein, very_ample_at};
use latpoly::error::{Error, Result};
use latpoly::harness::{parse_polytope, run_campaign, serialize_polytope, CampaignId, CorpusSpec};
use latpoly::lattice_algebra::{AffineUnimodularMap, IntVector};
use latpoly::points::{interior_lattice_points, lattice_points, normality_check};
use latpoly::polytope::{lattice_equivalent, LatticePolytope};

#[derive(Parser)]
#[command(name = "latpoly", version, about = "Exact computations on lattice polytopes")]
struct Cli {
    /// Polytope file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Print a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice points of P.
    Points,
    /// Interior lattice points of P.
    Interior,
    /// The dilate kP.
    Dilate {
        #[arg(short)]
        k: u64,
    },
    /// Level-generation test for normality.
    NormalCheck,
    /// Gorenstein test at every vertex.
    Gorenstein,
    /// Very-ampleness test at every vertex.
    VeryAmple,
    /// Classify P against the canonical families.
    Classify {
        #[arg(long, value_enum, default_value = "unique-interior")]
        mode: ClassifyMode,
    },
    /// Adjoint bundle certificates.
    Adjoint {
        #[arg(long, value_enum, default_value = "nef")]
        check: AdjointCheck,
    },
    /// Unimodular equivalence of two polytope files.
    Equiv { a: String, b: String },
    /// Run a falsification campaign.
    Campaign {
        id: String,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 3)]
        bound: u32,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyMode {
    EmptyInterior,
    UniqueInterior,
    GorensteinSmall,
    EmptySimplex,
}

#[derive(Clone, Copy, ValueEnum)]
enum AdjointCheck {
    Nef,
    VeryAmple,
}

/// What a subcommand produced: a report and whether it is a counterexample.
struct Outcome {
    text: String,
    json: Value,
    counterexample: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            counterexample: false,
        }
    }
}

fn read_source(path: &str) -> Result<String> {
    let io_err = |e: io::Error| Error::Parse {
        line: 0,
        message: format!("cannot read {path}: {e}"),
    };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn load(path: &str) -> Result<LatticePolytope> {
    parse_polytope(&read_source(path)?)
}

/// One point per line in the file format's row syntax.
fn rows<'a>(points: impl IntoIterator<Item = &'a IntVector>) -> String {
    points
        .into_iter()
        .map(|x| {
            let cells: Vec<String> = x.coords().iter().map(ToString::to_string).collect();
            cells.join(" ") + "\n"
        })
        .collect()
}

fn witness_json(w: &Option<AffineUnimodularMap>) -> (Value, Value) {
    match w {
        Some(w) => (json!(w.linear()), json!(w.translation())),
        None => (Value::Null, Value::Null),
    }
}

fn verdict_outcome(v: ClassificationVerdict) -> Outcome {
    let (matrix, translation) = witness_json(&v.witness);
    let mut text = format!("verdict: {}\n", v.family);
    if let Some(w) = &v.witness {
        text += &format!("witness matrix: {:?}\n", w.linear().row_vectors().iter().map(ToString::to_string).collect::<Vec<_>>());
        text += &format!("witness translation: {}\n", w.translation());
    }
    Outcome::ok(
        text,
        json!({
            "verdict": v.family.tag(),
            "params": v.family.params(),
            "witness": { "matrix": matrix, "translation": translation },
        }),
    )
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Points | Command::Interior => {
            let p = load(&cli.input)?;
            let pts = match cli.command {
                Command::Points => lattice_points(&p),
                _ => interior_lattice_points(&p),
            };
            Ok(Outcome::ok(
                rows(pts.iter()),
                json!({ "count": pts.len(), "points": pts.as_slice() }),
            ))
        }
        Command::Dilate { k } => {
            let q = load(&cli.input)?.dilate(*k)?;
            Ok(Outcome::ok(
                serialize_polytope(&q),
                json!({ "k": k, "vertices": q.vertices(), "count": q.vertices().len() }),
            ))
        }
        Command::NormalCheck => {
            let r = normality_check(&load(&cli.input)?)?;
            let text = match r.first_failing_k {
                None => "normal\n".to_string(),
                Some(k) => format!("not normal: level {k} misses {}\n", r.missing.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")),
            };
            Ok(Outcome::ok(text, json!({ "verdict": if r.normal { "normal" } else { "not-normal" }, "report": r })))
        }
        Command::Gorenstein => {
            let data = is_gorenstein(&load(&cli.input)?)?;
            let all = data.values().all(Option::is_some);
            let mut text = format!("{}\n", if all { "Gorenstein" } else { "not Gorenstein" });
            let mut per_vertex = Vec::new();
            for (v, d) in &data {
                let m0 = d.as_ref().map(|d| d.point.clone());
                text += &match &m0 {
                    Some(m) => format!("{v}: m0 = {m}\n"),
                    None => format!("{v}: no Gorenstein point\n"),
                };
                per_vertex.push(json!({ "vertex": v, "m0": m0 }));
            }
            Ok(Outcome::ok(
                text,
                json!({ "verdict": if all { "gorenstein" } else { "not-gorenstein" }, "vertices": per_vertex }),
            ))
        }
        Command::VeryAmple => {
            let p = load(&cli.input)?;
            let checks = p.vertices().iter().map(|v| very_ample_at(&p, v)).collect::<Result<Vec<_>>>()?;
            let ok = checks.iter().all(|c| c.ok);
            let mut text = format!("{}\n", if ok { "very ample" } else { "not very ample" });
            for c in checks.iter().filter(|c| !c.ok) {
                if let Some(x) = &c.violator {
                    text += &format!("{}: {x} is not generated\n", c.vertex);
                }
            }
            Ok(Outcome::ok(text, json!({ "verdict": if ok { "very-ample" } else { "not-very-ample" }, "vertices": checks })))
        }
        Command::Classify { mode } => {
            let p = load(&cli.input)?;
            let v = match mode {
                ClassifyMode::EmptyInterior => classify_empty_interior(&p),
                ClassifyMode::UniqueInterior => classify_unique_interior(&p),
                ClassifyMode::GorensteinSmall => classify_gorenstein_small_interior(&p),
                ClassifyMode::EmptySimplex => classify_empty_simplex(&p),
            }?;
            Ok(verdict_outcome(v))
        }
        Command::Adjoint { check } => {
            let p = load(&cli.input)?;
            match check {
                AdjointCheck::Nef => {
                    let report = freeness_check(&p)?;
                    let exception = if report.gorenstein { theorem_tm1_check(&p)?.exception } else { None };
                    let verdict = if report.nef_certified { "nef" } else { "not-certified" };
                    let mut text = format!("{verdict}\nhypotheses hold: {}\n", report.hypotheses_hold);
                    if let Some(e) = &exception {
                        text += &format!("exception: {}\n", e.label());
                    }
                    Ok(Outcome {
                        text,
                        counterexample: report.counterexample_candidate,
                        json: json!({ "verdict": verdict, "exception": exception, "report": report }),
                    })
                }
                AdjointCheck::VeryAmple => {
                    let r = theorem_tm2_check(&p)?;
                    let verdict = if r.very_ample { "very-ample" } else { "not-very-ample" };
                    let mut text = format!("{verdict}\nhypotheses hold: {}\n", r.hypotheses_hold);
                    if let Some(m) = &r.precondition_failure {
                        text += &format!("precondition: {m}\n");
                    }
                    for v in r.vertices.iter().filter(|v| !v.ok) {
                        if let Some(x) = &v.violator {
                            text += &format!("{}: {x} is not generated\n", v.vertex);
                        }
                    }
                    Ok(Outcome {
                        text,
                        counterexample: r.counterexample_candidate,
                        json: json!({ "verdict": verdict, "report": r }),
                    })
                }
            }
        }
        Command::Equiv { a, b } => {
            let (p, q) = (load(a)?, load(b)?);
            let w = lattice_equivalent(&p, &q);
            let verdict = if w.is_some() { "equivalent" } else { "not-equivalent" };
            let (matrix, translation) = witness_json(&w);
            let mut text = format!("{verdict}\n");
            if let Some(w) = &w {
                text += &format!("witness matrix: {:?}\n", w.linear().row_vectors().iter().map(ToString::to_string).collect::<Vec<_>>());
                text += &format!("witness translation: {}\n", w.translation());
            }
            Ok(Outcome::ok(text, json!({ "verdict": verdict, "witness": { "matrix": matrix, "translation": translation } })))
        }
        Command::Campaign { id, rank, bound, count, seed, exhaustive, max_vertices } => {
            let id: CampaignId = id.parse()?;
            let spec = if *exhaustive {
                CorpusSpec::exhaustive(*rank, *bound, *max_vertices)
            } else {
                CorpusSpec::random(*rank, *bound, *max_vertices, *count, *seed)
            };
            let r = run_campaign(id, &spec)?;
            let mut text = format!(
                "campaign {}: examined {}, hypothesis held {}, failures {}\n",
                r.campaign,
                r.examined,
                r.hypothesis_count,
                r.failures.len()
            );
            for (v, c) in &r.verdicts {
                text += &format!("  {v}: {c}\n");
            }
            for f in &r.failures {
                text += &format!("failure: {}\n{}", f.reason, f.polytope);
            }
            text += &format!("wall time: {:.2?}\n", r.wall_time);
            Ok(Outcome {
                text,
                counterexample: !r.passed(),
                json: serde_json::to_value(&r).expect("report serializes"),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.counterexample { 4 } else { 0 })
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string(), "exit_code": e.exit_code() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
