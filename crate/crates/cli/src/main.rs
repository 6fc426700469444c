mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};
use tbtool_core::classifier::{decompose, is_tight_numeric, is_tight_structural};
use tbtool_core::extremal::{
    d_max, d_skeleton_value, g, g_argmax, serialize_big, sigma_tb_global, sigma_tb_witnesses,
    tb_upper_bound, tight_bound,
};
use tbtool_core::generate::Generator;
use tbtool_core::search::{scan, Objective, ScanOptions, TheoremId, VerifyParams};
use tbtool_core::{bigraded, d_total, reduced_betti, tau, Complex, Error, FieldSpec};

use output::{facets_text, Output};

#[derive(Parser)]
#[command(name = "tbtool", version, about = "Betti numbers, Hochster sums and extremal searches for simplicial complexes")]
struct Cli {
    /// Coefficient field: f2, f<p> for an odd prime p, or q.
    #[arg(long, global = true, default_value = "f2", value_parser = parse_field)]
    field: FieldSpec,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Seed for the sampled verifiers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Complex file.
    file: Option<PathBuf>,

    /// Inline generator instead of a file, e.g. `--gen "cycle 5"`.
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Betti numbers.
    Betti {
        #[command(flatten)]
        input: Input,
    },
    /// Bigraded Betti numbers of the Stanley-Reisner ring.
    Bigraded {
        #[command(flatten)]
        input: Input,
    },
    /// Sum of all bigraded Betti numbers.
    Dtotal {
        #[command(flatten)]
        input: Input,
    },
    /// Weighted sum of the `i`-th row of bigraded Betti numbers.
    Tau {
        #[command(flatten)]
        input: Input,
        #[arg(long = "i", allow_negative_numbers = true)]
        i: isize,
    },
    /// Tightness test and simplex-sphere join decomposition.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Writes a complex file for a named family.
    Gen {
        /// simplex, skeleton, skeleton-ext, boundary, sphere-join,
        /// simplex-sphere-join, cycle or bipartite.
        kind: String,
        params: Vec<usize>,
        /// Output path; stdout when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Extremal scan over all classes of complexes on `[m]`.
    Scan {
        #[arg(long)]
        m: usize,
        /// Dimension, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_dim)]
        d: Dim,
        #[arg(long, value_parser = parse_objective)]
        objective: Objective,
        /// Permit m = 6.
        #[arg(long)]
        long: bool,
        /// Progress lines on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Checks one theorem at desk scale.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Values of g(m, d) with the maximizing d.
    Gtable {
        #[arg(long)]
        m_max: usize,
    },
    /// Closed-form bounds for complexes of dimension d on [m].
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
    },
    /// Extremal complexes from the closed forms.
    Witnesses {
        #[arg(long)]
        m: usize,
        /// Restrict the t̃b maximum to dimension d.
        #[arg(long, conflicts_with = "dmax")]
        d: Option<usize>,
        /// The D̃ maximum instead of the t̃b maximum.
        #[arg(long)]
        dmax: bool,
    },
}

#[derive(Clone, Copy)]
enum Dim {
    Fixed(usize),
    All,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_dim(s: &str) -> Result<Dim, String> {
    if s.eq_ignore_ascii_case("all") {
        Ok(Dim::All)
    } else {
        s.parse().map(Dim::Fixed).map_err(|_| format!("expected a dimension or `all`, got `{s}`"))
    }
}

enum Failure {
    Core(Error),
    Usage(String),
    VerifyFailed(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn load(input: &Input) -> Result<Complex, Failure> {
    match (&input.file, &input.generator) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Complex::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        (None, Some(spec)) => {
            let mut words = spec.split_whitespace();
            let kind = words.next().ok_or_else(|| Failure::Usage("empty generator".into()))?;
            let params = words
                .map(|w| w.parse::<usize>().map_err(|_| Failure::Usage(format!("bad generator parameter `{w}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Generator::parse(kind, &params)?.build()?)
        }
        _ => Err(Failure::Usage("give exactly one of a file or --gen".into())),
    }
}

fn big(v: &BigUint) -> Value {
    serialize_big(v, serde_json::value::Serializer).expect("plain data")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let field = cli.field;
    Ok(match &cli.command {
        Command::Betti { input } => {
            let table = reduced_betti(&load(input)?, field);
            let rows = table.iter().map(|(i, b)| vec![i.to_string(), b.to_string()]).collect();
            Output::table(&["degree", "betti"], rows, json!(table))
        }
        Command::Bigraded { input } => {
            let table = bigraded(&load(input)?, field)?;
            let rows = table
                .entries()
                .iter()
                .map(|((i, j), v)| vec![i.to_string(), j.to_string(), v.to_string()])
                .collect();
            Output::table(&["i", "j", "value"], rows, json!(table))
        }
        Command::Dtotal { input } => {
            let k = load(input)?;
            let v = d_total(&k, field)?;
            Output::scalar("d_total", v.to_string(), json!({"m": k.m(), "field": field, "d_total": v}))
        }
        Command::Tau { input, i } => {
            let k = load(input)?;
            let v = tau(&k, field, *i)?.to_string();
            Output::scalar("tau", v.clone(), json!({"m": k.m(), "field": field, "i": i, "tau": v}))
        }
        Command::Classify { input } => {
            let k = load(input)?;
            let numeric = is_tight_numeric(&k, field)?;
            let structural = is_tight_structural(&k)?;
            let dec = decompose(&k)?;
            let row = vec![
                field.to_string(),
                numeric.to_string(),
                structural.to_string(),
                serde_json::to_string(&json!(dec)["cone_vertices"]).expect("plain data"),
                serde_json::to_string(&json!(dec)["sphere_factors"]).expect("plain data"),
                dec.residual.to_string(),
            ];
            Output::table(
                &["field", "tight", "structural", "cone_vertices", "sphere_factors", "residual"],
                vec![row],
                json!({
                    "m": k.m(),
                    "field": field,
                    "d_total": d_total(&k, field)?,
                    "tight": numeric,
                    "structural": structural,
                    "decomposition": dec,
                }),
            )
        }
        Command::Gen { kind, params, out } => {
            let k = Generator::parse(kind, params)?.build()?;
            let text = k.to_json();
            match out {
                Some(path) => {
                    fs::write(path, format!("{text}\n"))
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    Output::Raw(String::new())
                }
                None => Output::Raw(format!("{text}\n")),
            }
        }
        Command::Scan { m, d, objective, long, progress } => {
            let d = match d {
                Dim::Fixed(d) => Some(*d),
                Dim::All => None,
            };
            let opts = ScanOptions { threads: cli.threads, progress: *progress, allow_long: *long };
            let report = scan(*m, d, *objective, field, opts)?;
            let summary = [
                report.objective.to_string(),
                m.to_string(),
                d.map_or("all".into(), |d| d.to_string()),
                field.to_string(),
                report.extremal_value.to_string(),
                report.enumerated.to_string(),
            ];
            let rows = report
                .witnesses
                .iter()
                .map(|w| {
                    let mut row = summary.to_vec();
                    row.push(facets_text(&w.to_complex().facet_lists()));
                    row
                })
                .collect();
            Output::table(
                &["objective", "m", "d", "field", "extremal_value", "enumerated", "witness"],
                rows,
                json!(report),
            )
        }
        Command::Verify { theorem, m_max, m, samples, n_max } => {
            let params = VerifyParams {
                m_max: *m_max,
                m: *m,
                samples: *samples,
                n_max: *n_max,
                seed: cli.seed,
                field,
                threads: cli.threads,
            };
            let report = tbtool_core::search::verify(*theorem, params)?;
            let row = vec![
                report.theorem.clone(),
                if report.pass { "PASS" } else { "FAIL" }.to_string(),
                report.checked.to_string(),
                report.details.clone(),
                report
                    .counterexample
                    .as_ref()
                    .map_or("-".into(), |c| serde_json::to_string(c).expect("plain data")),
            ];
            let pass = report.pass;
            let out = Output::table(&["theorem", "result", "checked", "details", "counterexample"], vec![row], json!(report));
            if !pass {
                return Err(Failure::VerifyFailed(out));
            }
            out
        }
        Command::Gtable { m_max } => {
            let mut rows = Vec::new();
            let mut entries = Vec::new();
            for m in 1..=*m_max {
                let values = (0..m).map(|d| g(m, d)).collect::<tbtool_core::Result<Vec<_>>>()?;
                let argmax = g_argmax(m).ok();
                rows.push(vec![
                    m.to_string(),
                    argmax.map_or("tie".into(), |a| a.to_string()),
                    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
                ]);
                entries.push(json!({
                    "m": m,
                    "argmax": argmax,
                    "g": values.iter().map(big).collect::<Vec<_>>(),
                }));
            }
            Output::table(&["m", "argmax", "g"], rows, json!({ "rows": entries }))
        }
        Command::Bounds { m, d } => {
            let tb = tb_upper_bound(*m, *d)?;
            let skel = d_skeleton_value(*m, *d)?;
            let tight = tight_bound(*m, *d)?;
            let gv = g(*m, *d)?;
            let row = vec![m.to_string(), d.to_string(), tb.to_string(), skel.to_string(), tight.to_string(), gv.to_string()];
            Output::table(
                &["m", "d", "tb_upper_bound", "d_skeleton_value", "tight_bound", "g"],
                vec![row],
                json!({
                    "m": m,
                    "d": d,
                    "tb_upper_bound": big(&tb),
                    "d_skeleton_value": big(&skel),
                    "tight_bound": big(&tight),
                    "g": big(&gv),
                }),
            )
        }
        Command::Witnesses { m, d, dmax } => {
            let answer = match (d, dmax) {
                (_, true) => d_max(*m)?,
                (Some(d), false) => sigma_tb_witnesses(*m, *d)?,
                (None, false) => sigma_tb_global(*m)?,
            };
            let rows = answer
                .witnesses
                .iter()
                .map(|w| vec![answer.theorem.clone(), answer.value.to_string(), facets_text(&w.facet_lists())])
                .collect();
            Output::table(&["theorem", "value", "witness"], rows, json!(answer))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // only fails when a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let (out, code) = match run(&cli) {
        Ok(out) => (Some(out), 0),
        Err(Failure::VerifyFailed(out)) => (Some(out), 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            (None, 2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            (None, if e.is_capacity() { 3 } else { 2 })
        }
    };
    if let Some(out) = out {
        let text = out.render(cli.format);
        let mut stdout = std::io::stdout().lock();
        if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
