use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use panhandle::cable::{
    corrected, ell_phi, ell_theta, from_corrected, mfw_bound, panhandle_decompose, reverse_cable_homfly,
    vertical_cable, vertical_delta, vertical_framing, FramingVector,
};
use panhandle::conventions::ledger;
use panhandle::grid::{
    arc_index_torus, braid_index_banded, corner_framings, lambda_torus, standard_mirror_grid, standard_torus_grid,
    GridDiagram,
};
use panhandle::rosso_jones::fundamental_homfly_torus;
use panhandle::skein::{homfly_with, reverse_cable_braid, BraidWord, PlanarDiagram, SkeinOptions};
use panhandle::verify::{run_suite, suite_names};
use panhandle::{Error, TorusParams, ZVTable};

const EXIT_COMPUTE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "panhandle", version, about = "Colored HOMFLY-PT invariants of torus links and their reverse 2-cables")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Latex,
}

#[derive(clap::Args)]
struct Torus {
    /// Torus parameters "m,n".
    #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
    torus: Vec<u32>,
}

#[derive(clap::Args)]
struct Framing {
    /// Absolute framings, one per component.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "corrected")]
    framing: Option<Vec<i64>>,
    /// Framings relative to the vertical framing.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    corrected: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// HOMFLY-PT polynomial of a torus knot.
    Homfly {
        #[command(flatten)]
        torus: Torus,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reverse 2-cable polynomial with metadata, as JSON.
    Cable {
        #[command(flatten)]
        torus: Torus,
        #[command(flatten)]
        framing: Framing,
    },
    /// Cable coefficient table (defaults to the vertical framing).
    Table {
        #[command(flatten)]
        torus: Torus,
        #[command(flatten)]
        framing: Framing,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Panhandle decomposition of the vertical-framing cable and its verdict.
    Panhandle {
        #[command(flatten)]
        torus: Torus,
    },
    /// Arc index, lambda, l, theta, MFW and corner framings.
    Invariants {
        #[arg(long, value_delimiter = ',', num_args = 1)]
        torus: Option<Vec<u32>>,
        #[arg(long)]
        mirror: bool,
        /// Print the convention ledger.
        #[arg(long)]
        conventions: bool,
    },
    /// Standard torus grid statistics.
    Grid {
        /// "m,n"
        #[arg(long, value_delimiter = ',', num_args = 1)]
        standard: Vec<u32>,
        #[arg(long)]
        mirror: bool,
        /// Stabilize the component through column i (1-based) k times: "i^k" or "i". Repeatable.
        #[arg(long)]
        stabilize: Vec<String>,
    },
    /// Run a named verification suite ("all" for every suite).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Skein-relation HOMFLY-PT of a diagram.
    Oracle {
        /// PD JSON file {"crossings": [[a,b,c,d,sign], ...]}.
        #[arg(long, conflicts_with = "braid")]
        pd: Option<PathBuf>,
        /// Braid word such as "s1 s1 s1" or "1 1 -2".
        #[arg(long, allow_hyphen_values = true)]
        braid: Option<String>,
        /// Reverse-cable the braid closure with these twists per component.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        cable: Option<Vec<i64>>,
        #[arg(long)]
        max_crossings: Option<usize>,
    },
}

enum Failure {
    Compute(Error),
    Usage(String),
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Out = std::result::Result<String, Failure>;

fn torus_of(v: &[u32]) -> std::result::Result<TorusParams, Failure> {
    match v {
        [m, n] => TorusParams::new(*m, *n).map_err(|e| Failure::Usage(e.to_string())),
        _ => Err(Failure::Usage(format!("expected m,n but got {v:?}"))),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json")
}

fn resolve_framing(tp: TorusParams, f: &Framing) -> std::result::Result<FramingVector, Failure> {
    let fv = match (&f.framing, &f.corrected) {
        (Some(t), _) => FramingVector(t.clone()),
        (None, Some(e)) => from_corrected(tp, &FramingVector(e.clone())),
        (None, None) => vertical_framing(tp),
    };
    if fv.len() != tp.l as usize {
        return Err(Failure::Usage(format!("T({},{}) has {} components, got {} framings", tp.m, tp.n, tp.l, fv.len())));
    }
    Ok(fv)
}

fn render(t: &ZVTable, format: Format, caption: &str) -> String {
    match format {
        Format::Csv => t.to_csv(),
        Format::Json => pretty(&t.to_json()),
        Format::Latex => t.to_latex(caption),
    }
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Homfly { torus, format } => {
            let tp = torus_of(&torus.torus)?;
            let p = fundamental_homfly_torus(tp)?;
            Ok(render(&p, format, &format!("HOMFLY-PT polynomial of T({},{})", tp.m, tp.n)))
        }
        Cmd::Cable { torus, framing } => {
            let tp = torus_of(&torus.torus)?;
            let f = resolve_framing(tp, &framing)?;
            let p = reverse_cable_homfly(tp, &f)?;
            Ok(pretty(&json!({
                "torus": [tp.m, tp.n],
                "components": 2 * tp.l,
                "framing": f.0,
                "corrected": corrected(tp, &f).0,
                "polynomial": p.to_json(),
            })))
        }
        Cmd::Table { torus, framing, format } => {
            let tp = torus_of(&torus.torus)?;
            let f = resolve_framing(tp, &framing)?;
            let p = reverse_cable_homfly(tp, &f)?;
            let caption = format!("HOMFLY-PT polynomial of C_2(T({},{}),{:?})", tp.m, tp.n, f.0);
            Ok(render(&p, format, &caption))
        }
        Cmd::Panhandle { torus } => {
            let tp = torus_of(&torus.torus)?;
            let p = vertical_cable(tp)?;
            match panhandle_decompose(&p, tp) {
                Ok(d) => Ok(pretty(&json!({
                    "torus": [tp.m, tp.n],
                    "framing": vertical_framing(tp).0,
                    "handle_coefficient": d.handle_coefficient,
                    "handle_range": d.handle_range,
                    "handle_length": d.handle_length,
                    "bulk_v_range": [d.bulk.min_v(), d.bulk.max_v()],
                    "bulk": d.bulk.to_json(),
                    "verdict": "pass",
                }))),
                Err(Error::ShapeViolation(msg)) => Err(Failure::Verify(json!({
                    "torus": [tp.m, tp.n],
                    "verdict": "fail",
                    "reason": msg,
                }))),
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Invariants { torus, mirror, conventions } => {
            if conventions {
                return Ok(pretty(&serde_json::to_value(ledger()).expect("json")));
            }
            let tp = torus_of(&torus.ok_or_else(|| Failure::Usage("--torus or --conventions is required".into()))?)?;
            invariants(tp, mirror)
        }
        Cmd::Grid { standard, mirror, stabilize } => {
            let [m, n] = standard[..] else {
                return Err(Failure::Usage("--standard takes m,n".into()));
            };
            let mut g = if mirror { standard_mirror_grid(m as usize, n as usize)? } else { standard_torus_grid(m as usize, n as usize)? };
            for s in &stabilize {
                let (col, times) = match s.split_once('^') {
                    Some((a, b)) => (a.parse::<usize>(), b.parse::<usize>()),
                    None => (s.parse::<usize>(), Ok(1)),
                };
                let (Ok(col), Ok(times)) = (col, times) else {
                    return Err(Failure::Usage(format!("bad --stabilize {s}, expected i^k")));
                };
                if col == 0 || col > g.size() {
                    return Err(Failure::Usage(format!("column {col} outside 1..={}", g.size())));
                }
                for _ in 0..times {
                    g = g.stabilize(col - 1);
                }
            }
            Ok(pretty(&grid_stats(&g)))
        }
        Cmd::Verify { suite } => {
            let names: Vec<String> =
                if suite == "all" { suite_names().into_iter().map(String::from).collect() } else { vec![suite] };
            let mut reports = Vec::new();
            let mut pass = true;
            for name in names {
                let r = run_suite(&name).ok_or_else(|| {
                    Failure::Usage(format!("unknown suite {name}; known: {}", suite_names().join(", ")))
                })?;
                pass &= r.pass;
                reports.push(r.to_json());
            }
            let out = json!({"pass": pass, "suites": reports});
            if pass {
                Ok(pretty(&out))
            } else {
                Err(Failure::Verify(out))
            }
        }
        Cmd::Oracle { pd, braid, cable, max_crossings } => {
            let d = match (pd, braid) {
                (Some(path), None) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                    let v: Value = serde_json::from_str(&text)
                        .map_err(|e| Failure::Compute(Error::MalformedDiagram(format!("json: {e}"))))?;
                    if cable.is_some() {
                        return Err(Failure::Usage("--cable needs --braid".into()));
                    }
                    PlanarDiagram::from_json(&v)?
                }
                (None, Some(word)) => {
                    let b: BraidWord = word.parse()?;
                    match cable {
                        Some(t) => reverse_cable_braid(&b, &t)?,
                        None => b.closure(),
                    }
                }
                _ => return Err(Failure::Usage("exactly one of --pd or --braid is required".into())),
            };
            let mut opts = SkeinOptions::default();
            if let Some(m) = max_crossings {
                opts.max_crossings = m;
            }
            let p = homfly_with(&d, opts)?;
            Ok(pretty(&json!({
                "crossings": d.crossing_count(),
                "components": d.component_count(),
                "linking_matrix": d.linking_matrix(),
                "polynomial": p.to_json(),
            })))
        }
    }
}

fn invariants(tp: TorusParams, mirror: bool) -> Out {
    let (m, n) = (tp.m as i64, tp.n as i64);
    let cable = vertical_cable(tp)?;
    let delta = vertical_delta(tp);
    // the mirror's cable at framing -delta is the mirror image of the cable
    let (table, t) = if mirror { (cable.mirror(), -delta) } else { ((*cable).clone(), delta) };
    let (ell, theta) = match (tp.is_knot(), ell_theta(&table, t)) {
        (true, Ok((l, th))) => (json!(l), json!(th)),
        _ => (Value::Null, Value::Null),
    };
    let ell_phi = if mirror { Value::Null } else { json!(ell_phi(tp, &vertical_framing(tp))?.to_string()) };
    let corners = corner_framings(tp, mirror);
    let braid_index: Vec<Value> = corners
        .iter()
        .map(|c| braid_index_banded(tp, mirror, c).map_or(Value::Null, |b| json!(b)))
        .collect();
    Ok(pretty(&json!({
        "torus": [tp.m, tp.n],
        "mirror": mirror,
        "components": tp.l,
        "a": arc_index_torus(m, n),
        "lambda": lambda_torus(m, n, mirror),
        "ell": ell,
        "theta": theta,
        "ell_phi": ell_phi,
        "mfw": mfw_bound(&table),
        "vertical_framing": vertical_framing(tp).0,
        "corner_framings": corners,
        "braid_index_at_corners": braid_index,
    })))
}

fn grid_stats(g: &GridDiagram) -> Value {
    let tb = g.tb();
    json!({
        "grid": g.to_json(),
        "size": g.size(),
        "components": g.component_count(),
        "tb": tb.total,
        "tb_per_component": tb.per_component,
        "writhe": tb.writhe,
        "corners": tb.corners,
        "lambda": g.lambda(),
        "lambda_mirror": g.mirror().lambda(),
    })
}

// a closed pipe (`| head`) is not an error worth reporting
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
}

fn fail(kind: &str, message: String, code: u8) -> ExitCode {
    eprintln!("{}", json!({"error": kind, "message": message}));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return fail("Usage", e.to_string().trim().to_string(), EXIT_USAGE);
        }
    };
    match run(cli.cmd) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => fail("Usage", m, EXIT_USAGE),
        Err(Failure::Compute(e)) => fail(e.kind(), e.to_string(), EXIT_COMPUTE),
        Err(Failure::Verify(v)) => {
            emit(&pretty(&v));
            fail("VerificationFailure", "one or more checks failed".into(), EXIT_VERIFY)
        }
    }
}
