//! Seeded batch runs over random and generated instances.

use std::io::Write;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitMatrix;
use crate::error::Result;
use crate::generators::{Generated, GeneratorSpec};
use crate::online::{first_fit, OnlineInstance};
use crate::poset::{maximum_antichain, width, Poset};
use crate::reduction::{composite_color, ReductionOptions};
use crate::regular::{ladder_bound_check, verify_p6_p7, verify_regular};

/// Edge probability of the random DAG before thinning.
pub const EDGE_PROBABILITY: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    FirstFit,
    Composite,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::FirstFit => "first-fit",
            Algorithm::Composite => "composite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    pub seed: u64,
    /// Random instances per `(n, w)` pair.
    pub trials: usize,
    pub sizes: Vec<(usize, usize)>,
    pub generators: Vec<GeneratorSpec>,
    pub algorithms: Vec<Algorithm>,
    /// Record wall time; off keeps output byte-identical across runs.
    pub timing: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 0,
            sizes: Vec::new(),
            generators: Vec::new(),
            algorithms: vec![Algorithm::FirstFit, Algorithm::Composite],
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRow {
    pub instance: String,
    pub n: usize,
    pub w: usize,
    pub algorithm: String,
    pub colors: usize,
    pub valid: bool,
    pub verdicts: String,
    pub ms: u64,
}

impl ResultRow {
    /// Chains valid and no verifier reported a failure.
    pub fn passed(&self) -> bool {
        self.valid && !self.verdicts.split(';').any(|v| v.ends_with("=fail") || v.starts_with("error="))
    }
}

/// Random poset on `n` vertices of width at most `w`: a random DAG on
/// ids in increasing order, then while too wide a relation is added
/// between two members of a maximum antichain.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, w: usize) -> Poset {
    let mut m = BitMatrix::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(EDGE_PROBABILITY) {
                m.set(u, v, true);
            }
        }
    }
    m.transitive_closure();
    loop {
        let p = Poset::from_closed(m.clone());
        if width(&p) <= w.max(1) {
            return p;
        }
        let a = maximum_antichain(&p);
        let mut pick = a.choose_multiple(rng, 2).copied().collect::<Vec<_>>();
        pick.sort_unstable();
        m.set(pick[0], pick[1], true);
        m.transitive_closure();
    }
}

/// Random on-line instance: [`random_poset`] with a shuffled presentation
/// and width bound `w`. Deterministic in `seed`.
pub fn random_online_instance(seed: u64, n: usize, w: usize) -> OnlineInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_poset(&mut rng, n, w);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    OnlineInstance::new(p, order, w.max(1)).expect("random instance is well formed")
}

struct Job {
    id: String,
    instance: OnlineInstance,
    algorithm: Algorithm,
}

fn generated_instance(g: Generated) -> OnlineInstance {
    let p = match g {
        Generated::Online(i) => return i,
        Generated::Poset(p) | Generated::Colored { poset: p, .. } => p,
        Generated::Regular { instance, .. } => instance.poset().clone(),
    };
    OnlineInstance::in_id_order(p)
}

fn jobs(cfg: &ExperimentConfig) -> Result<Vec<Job>> {
    let mut instances = Vec::new();
    for (g, spec) in cfg.generators.iter().enumerate() {
        let name = serde_json::to_value(spec)?;
        let kind = name["kind"].as_str().unwrap_or("gen").to_owned();
        let params: Vec<String> = name
            .as_object()
            .into_iter()
            .flatten()
            .filter(|(k, v)| *k != "kind" && !v.is_null())
            .map(|(k, v)| format!("{k}{v}"))
            .collect();
        let id = format!("g{g:03}-{kind}-{}", params.join("-"));
        instances.push((id, generated_instance(spec.generate()?)));
    }
    let mut k = 0u64;
    for &(n, w) in &cfg.sizes {
        for t in 0..cfg.trials {
            let seed = cfg.seed.wrapping_add(k);
            k += 1;
            let id = format!("r{:06}-n{n}-w{w}-t{t}", k - 1);
            instances.push((id, random_online_instance(seed, n, w)));
        }
    }
    Ok(instances
        .into_iter()
        .flat_map(|(id, instance)| {
            cfg.algorithms.iter().map(move |&algorithm| Job {
                id: id.clone(),
                instance: instance.clone(),
                algorithm,
            })
        })
        .collect())
}

fn verdict(name: &str, ok: bool) -> String {
    format!("{name}={}", if ok { "ok" } else { "fail" })
}

fn run_job(job: &Job, timing: bool) -> ResultRow {
    let inst = &job.instance;
    let start = Instant::now();
    let (colors, valid, verdicts) = match job.algorithm {
        Algorithm::FirstFit => {
            let g = first_fit(inst);
            let ok = crate::poset::ChainPartition::from_labels(g.colors()).is_valid_for(inst.poset());
            (g.n_colors(), ok, verdict("chains", ok))
        }
        Algorithm::Composite => match composite_color(inst, ReductionOptions::default()) {
            Err(e) => (0, false, format!("error={e}")),
            Ok(out) => {
                let ok = out.run.partition.is_valid_for(inst.poset());
                let mut v = vec![verdict("chains", ok)];
                if let Some(reg) = &out.regular {
                    v.push(verdict("regular", verify_regular(reg).passes()));
                    let p67 = verify_p6_p7(reg);
                    v.push(verdict("p6", p67.p6.is_empty()));
                    v.push(verdict("p7-upper", p67.p7_upper.is_empty()));
                    v.push(verdict("p7-lower", p67.p7_lower.is_empty()));
                    v.push(verdict("ladder", ladder_bound_check(reg).1));
                }
                (out.run.n_colors(), ok, v.join(";"))
            }
        },
    };
    let ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    ResultRow {
        instance: job.id.clone(),
        n: inst.len(),
        w: inst.width_bound(),
        algorithm: job.algorithm.name().to_owned(),
        colors,
        valid,
        verdicts,
        ms,
    }
}

/// Runs every configured row in parallel; rows come back sorted by
/// instance id, then algorithm.
pub fn run_suite(cfg: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    let jobs = jobs(cfg)?;
    let mut rows: Vec<ResultRow> = jobs.par_iter().map(|j| run_job(j, cfg.timing)).collect();
    rows.sort_by(|a, b| (&a.instance, &a.algorithm).cmp(&(&b.instance, &b.algorithm)));
    Ok(rows)
}

/// Writes rows as CSV (header `instance,n,w,algorithm,colors,valid,verdicts,ms`)
/// or as a JSON array.
pub fn emit<W: Write>(rows: &[ResultRow], format: Format, out: W) -> Result<()> {
    match format {
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(out);
            if rows.is_empty() {
                wtr.write_record(["instance", "n", "w", "algorithm", "colors", "valid", "verdicts", "ms"])?;
            }
            for r in rows {
                wtr.serialize(r)?;
            }
            wtr.flush()?;
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
