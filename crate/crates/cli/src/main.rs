use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chainpart::generators::GeneratorSpec;
use chainpart::harness::{emit, random_online_instance, run_suite, Algorithm, ExperimentConfig, Format};
use chainpart::online::{chi_ff_exact, first_fit, verify_grundy, GrundyColoring, OnlineInstance};
use chainpart::poset::{find_max_ladder, width, ChainPartition, Poset};
use chainpart::reduction::{composite_color, ReductionOptions, DEFAULT_COLOR_CAP};
use chainpart::regular::{ladder_bound_check, verify_p6_p7, verify_regular, RegularInstance};

#[derive(Parser)]
#[command(name = "chainpart", version, about = "On-line chain partitioning experiments")]
struct Cli {
    /// Seed for random instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; `suite` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<OutFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// First-Fit over an on-line instance.
    Ff {
        #[arg(long)]
        instance: PathBuf,
    },
    /// The recursive reduction colorer over an on-line instance.
    Reduce {
        #[arg(long)]
        instance: PathBuf,
        /// Width bound; defaults to the instance's own.
        #[arg(long)]
        w: Option<usize>,
        /// Also write the top-level regular instance here.
        #[arg(long)]
        emit_regular: Option<PathBuf>,
        /// Colors reserved per width level.
        #[arg(long, default_value_t = DEFAULT_COLOR_CAP)]
        cap: usize,
        /// Skip the per-step structural checks.
        #[arg(long)]
        no_checks: bool,
    },
    /// Check a regular instance or a Grundy coloring.
    Verify(VerifyArgs),
    /// Longest induced ladder.
    Ladder {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Exact First-Fit number over all presentations.
    ChiExact {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Batch run over random and generated instances.
    Suite(SuiteArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// The First-Fit adversary R_n.
    Rn {
        #[arg(long)]
        n: usize,
    },
    /// The ladder L_m.
    Ladder {
        #[arg(long)]
        m: usize,
    },
    /// A core of type I, S or T.
    Core {
        #[arg(long = "type", value_enum)]
        kind: CoreType,
        #[arg(long)]
        w: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// A regular poset with a long ladder.
    RegularLadder {
        #[arg(long)]
        w: usize,
    },
    /// The product family Q_k with its Grundy coloring.
    Qk {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        pad_to: Option<usize>,
    },
    /// A seeded random on-line instance.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CoreType {
    I,
    S,
    T,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VerifyArgs {
    /// A regular instance.
    #[arg(long)]
    regular: Option<PathBuf>,
    /// A file with `poset` and `coloring`.
    #[arg(long)]
    grundy: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// JSON experiment config; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    trials: Option<usize>,
    /// Random instance sizes as `n:w`, comma separated.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<String>,
    /// Add R_1..R_N to the generated instances.
    #[arg(long)]
    rn_sweep: Option<usize>,
    #[arg(long, value_delimiter = ',', value_enum)]
    algorithms: Vec<AlgoArg>,
    /// Record wall time per row.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    FirstFit,
    Composite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let kind = c
            .downcast_ref::<io::Error>()
            .map(io::Error::kind)
            .or_else(|| c.downcast_ref::<serde_json::Error>().and_then(serde_json::Error::io_error_kind));
        kind == Some(io::ErrorKind::BrokenPipe)
    })
}

fn read_json(path: &Path) -> Result<Value> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    serde_json::from_reader(io::BufReader::new(f)).with_context(|| format!("parsing {}", path.display()))
}

fn load<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_value(read_json(path)?).with_context(|| format!("reading {}", path.display()))?)
}

/// A poset file, or any file with a `poset` field.
fn load_poset(path: &Path) -> Result<Poset> {
    let mut v = read_json(path)?;
    if let Some(p) = v.get_mut("poset") {
        v = p.take();
    }
    Ok(serde_json::from_value(v).with_context(|| format!("reading poset from {}", path.display()))?)
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json(out: &Option<PathBuf>, v: &impl serde::Serialize) -> Result<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, v)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn write_partition(out: &Option<PathBuf>, format: OutFormat, poset: &Poset, colors: &[usize]) -> Result<bool> {
    let partition = ChainPartition::from_labels(colors);
    let valid = partition.is_valid_for(poset);
    match format {
        OutFormat::Json => write_json(
            out,
            &json!({
                "colors": colors,
                "n_colors": partition.n_chains(),
                "valid": valid,
            }),
        )?,
        OutFormat::Csv => {
            let mut w = sink(out)?;
            writeln!(w, "vertex,color")?;
            for (v, c) in colors.iter().enumerate() {
                writeln!(w, "{v},{c}")?;
            }
            w.flush()?;
        }
    }
    Ok(valid)
}

fn json_only(format: Option<OutFormat>, cmd: &str) -> Result<()> {
    if format == Some(OutFormat::Csv) {
        bail!("`{cmd}` writes JSON only");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let Cli { seed, out, format, command } = cli;
    let fmt = format.unwrap_or(OutFormat::Json);
    match command {
        Command::Gen { what } => {
            json_only(format, "gen")?;
            let spec = match what {
                GenCommand::Random { n, w } => {
                    if n == 0 || w == 0 {
                        bail!("random instances need n >= 1 and w >= 1");
                    }
                    write_json(&out, &random_online_instance(seed, n, w))?;
                    return Ok(true);
                }
                GenCommand::Rn { n } => GeneratorSpec::Rn { n },
                GenCommand::Ladder { m } => GeneratorSpec::Ladder { m },
                GenCommand::Core { kind, w, k } => match kind {
                    CoreType::I => GeneratorSpec::CoreI { w },
                    CoreType::S => GeneratorSpec::CoreS { w, k },
                    CoreType::T => GeneratorSpec::CoreT { w, k },
                },
                GenCommand::RegularLadder { w } => GeneratorSpec::RegularLadder { w },
                GenCommand::Qk { m, k, pad_to } => GeneratorSpec::Qk { m, k, pad_to },
            };
            write_json(&out, &spec.generate()?)?;
            Ok(true)
        }
        Command::Ff { instance } => {
            let inst: OnlineInstance = load(&instance)?;
            let g = first_fit(&inst);
            write_partition(&out, fmt, inst.poset(), g.colors())
        }
        Command::Reduce { instance, w, emit_regular, cap, no_checks } => {
            let mut inst: OnlineInstance = load(&instance)?;
            if let Some(w) = w {
                inst = OnlineInstance::new(inst.poset().clone(), inst.presentation().to_vec(), w)?;
            }
            let outcome = composite_color(&inst, ReductionOptions { cap, check: !no_checks })?;
            if let Some(path) = &emit_regular {
                match &outcome.regular {
                    Some(reg) => write_json(&Some(path.clone()), reg)?,
                    None => eprintln!("no regular instance at width {}", inst.width_bound()),
                }
            }
            write_partition(&out, fmt, inst.poset(), &outcome.run.colors)
        }
        Command::Verify(args) => {
            json_only(format, "verify")?;
            if let Some(path) = args.regular {
                let reg: RegularInstance = load(&path)?;
                let regular = verify_regular(&reg);
                let p67 = verify_p6_p7(&reg);
                let (rungs, ladder_ok) = ladder_bound_check(&reg);
                let ok = regular.passes() && p67.passes() && ladder_ok;
                write_json(
                    &out,
                    &json!({
                        "passes": ok,
                        "regular": regular,
                        "p6_p7": p67,
                        "ladder": { "rungs": rungs, "within_bound": ladder_ok },
                    }),
                )?;
                Ok(ok)
            } else {
                let path = args.grundy.expect("clap enforces one of the flags");
                let v = read_json(&path)?;
                let poset: Poset = serde_json::from_value(v["poset"].clone()).context("reading poset")?;
                let coloring: GrundyColoring = serde_json::from_value(v["coloring"].clone()).context("reading coloring")?;
                let coloring = GrundyColoring::new(coloring.colors().to_vec());
                let verdict = verify_grundy(&poset, &coloring);
                let ok = verdict.holds();
                write_json(&out, &json!({ "passes": ok, "n_colors": coloring.n_colors(), "verdict": verdict }))?;
                Ok(ok)
            }
        }
        Command::Ladder { poset, cap } => {
            json_only(format, "ladder")?;
            let p = load_poset(&poset)?;
            let (m, embedding) = find_max_ladder(&p, cap.unwrap_or(p.len()));
            write_json(&out, &json!({ "rungs": m, "embedding": embedding }))?;
            Ok(true)
        }
        Command::ChiExact { poset } => {
            json_only(format, "chi-exact")?;
            let p = load_poset(&poset)?;
            let chi = chi_ff_exact(&p)?;
            write_json(&out, &json!({ "n": p.len(), "width": width(&p), "chi_ff": chi }))?;
            Ok(true)
        }
        Command::Suite(args) => {
            let mut cfg = match &args.config {
                Some(path) => load::<ExperimentConfig>(path)?,
                None => ExperimentConfig::default(),
            };
            cfg.seed = seed;
            if let Some(t) = args.trials {
                cfg.trials = t;
            }
            if !args.sizes.is_empty() {
                cfg.sizes = args.sizes.iter().map(|s| parse_size(s)).collect::<Result<_>>()?;
            }
            if let Some(n) = args.rn_sweep {
                cfg.generators.extend((1..=n).map(|n| GeneratorSpec::Rn { n }));
            }
            if !args.algorithms.is_empty() {
                cfg.algorithms = args
                    .algorithms
                    .iter()
                    .map(|a| match a {
                        AlgoArg::FirstFit => Algorithm::FirstFit,
                        AlgoArg::Composite => Algorithm::Composite,
                    })
                    .collect();
            }
            cfg.timing |= args.timing;
            let rows = run_suite(&cfg)?;
            let format = match format.unwrap_or(OutFormat::Csv) {
                OutFormat::Csv => Format::Csv,
                OutFormat::Json => Format::Json,
            };
            let mut w = sink(&out)?;
            emit(&rows, format, &mut w)?;
            w.flush()?;
            Ok(rows.iter().all(|r| r.passed()))
        }
    }
}

fn parse_size(s: &str) -> Result<(usize, usize)> {
    let (n, w) = s.split_once(':').with_context(|| format!("size `{s}` is not n:w"))?;
    let (n, w) = (n.trim().parse()?, w.trim().parse()?);
    if n == 0 || w == 0 {
        bail!("size `{s}` needs n >= 1 and w >= 1");
    }
    Ok((n, w))
}
