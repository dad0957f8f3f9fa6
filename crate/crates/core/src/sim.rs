//! Source and channel generators, Monte Carlo experiments, and
//! benchmarking.
//!
//! Every trial's randomness is a pure function of (master seed, trial
//! index): per-trial seeds come from a counter-based split, so running
//! trials in any order, or in parallel, produces the same draws. The
//! paired experiments depend on this — a duality trial feeds the decoder
//! and the quantizer complementary erasure patterns from one draw.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::gf2::{BitVector, SparseBinaryMatrix};
use crate::graph::{
    read_alist_file, sample_irregular_detailed, sample_regular_ldpc_detailed, CodeGraph,
    DegreeDistribution, SampleStats,
};
use crate::oracle::{
    optimal_quantize_with_checks, profile_failure_bounds, quantizable, FailureBounds,
};
use crate::peel::{
    distortion, erasure_decode, erasure_quantize, ErasurePattern, ErasureWord, TieBreak,
};

/// Environment variable the CLI consults when no seed flag is given.
pub const SEED_ENV_VAR: &str = "DUALPEEL_SEED";

/// Exact rank (and random-codeword sampling) uses dense elimination,
/// which is only affordable up to a few thousand columns; larger codes
/// fall back to assuming independent checks and transmitting the zero
/// codeword, which peeling treats identically to any other codeword.
pub const EXACT_RANK_MAX_COLS: usize = 8192;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Counter-based seed split: deterministic in (master, trial) only.
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    splitmix64(master ^ splitmix64(trial.wrapping_add(0x5851f42d4c957f2d)))
}

pub fn trial_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// I.i.d. ternary source: 0 and 1 each with probability (1-e)/2, the
/// erasure with probability e.
pub fn gen_beq_source_with<R: Rng + ?Sized>(n: usize, e: f64, rng: &mut R) -> ErasureWord {
    let symbols = (0..n)
        .map(|_| {
            if rng.random_bool(e) {
                crate::algebra::DecSymbol::Erased
            } else {
                crate::algebra::DecSymbol::from_bit(rng.random())
            }
        })
        .collect();
    ErasureWord::from_symbols(symbols)
}

pub fn gen_beq_source(n: usize, e: f64, seed: u64) -> ErasureWord {
    gen_beq_source_with(n, e, &mut trial_rng(seed))
}

/// Passes a codeword through the erasure channel: each bit is replaced
/// by an erasure with probability e, never flipped.
pub fn gen_bec_received_with<R: Rng + ?Sized>(
    c: &BitVector,
    e: f64,
    rng: &mut R,
) -> ErasureWord {
    ErasureWord::from_codeword(c, &ErasurePattern::random(c.len(), e, rng))
}

pub fn gen_bec_received(c: &BitVector, e: f64, seed: u64) -> ErasureWord {
    gen_bec_received_with(c, e, &mut trial_rng(seed))
}

/// Where the code under test comes from.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CodeSpec {
    Alist { path: String },
    Regular { n: usize, dv: usize, dc: usize },
    Irregular { n: usize, dist: DegreeDistribution },
}

impl CodeSpec {
    /// Materializes the parity-check matrix (sampling uses `seed`).
    pub fn load(&self, seed: u64) -> Result<(SparseBinaryMatrix, Option<SampleStats>), Error> {
        match self {
            CodeSpec::Alist { path } => {
                Ok((read_alist_file(std::path::Path::new(path))?, None))
            }
            CodeSpec::Regular { n, dv, dc } => {
                let (h, stats) = sample_regular_ldpc_detailed(*n, *dv, *dc, seed)?;
                Ok((h, Some(stats)))
            }
            CodeSpec::Irregular { n, dist } => {
                let (h, stats) = sample_irregular_detailed(*n, dist, seed)?;
                Ok((h, Some(stats)))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreakPolicy {
    Zeros,
    Random,
}

const TIE_BREAK_SALT: u64 = 0x7b5e_9d3a_41c6_0842;

impl TieBreakPolicy {
    fn for_trial(self, trial_seed: u64) -> TieBreak {
        match self {
            TieBreakPolicy::Zeros => TieBreak::Zeros,
            TieBreakPolicy::Random => {
                TieBreak::SeededRandom(splitmix64(trial_seed ^ TIE_BREAK_SALT))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Decode,
    Quantize,
    Duality,
    Bound,
    Sweep,
    Bench,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimConfig {
    pub code: CodeSpec,
    pub erasure_prob: f64,
    pub trials: u64,
    pub seed: u64,
    pub tie_break: TieBreakPolicy,
    pub experiment: ExperimentKind,
    /// Source-erasure grid for the rate sweep.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub e_grid: Vec<f64>,
    /// Block lengths for the runtime benchmark.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sizes: Vec<usize>,
}

impl SimConfig {
    pub fn new(code: CodeSpec, experiment: ExperimentKind) -> SimConfig {
        SimConfig {
            code,
            erasure_prob: 0.5,
            trials: 100,
            seed: 1,
            tie_break: TieBreakPolicy::Zeros,
            experiment,
            e_grid: Vec::new(),
            sizes: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(0.0..=1.0).contains(&self.erasure_prob) {
            return Err(Error::InvalidParameter(format!(
                "erasure probability must be in [0, 1], got {}",
                self.erasure_prob
            )));
        }
        if self.trials < 1 {
            return Err(Error::InvalidParameter("need at least one trial".into()));
        }
        for &e in &self.e_grid {
            if !(0.0..=1.0).contains(&e) {
                return Err(Error::InvalidParameter(format!(
                    "grid erasure probability must be in [0, 1], got {e}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    ErasureDecode,
    ErasureQuantize,
    MlDecode,
    OptimalQuantize,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algorithm::ErasureDecode => "erasure-decode",
            Algorithm::ErasureQuantize => "erasure-quantize",
            Algorithm::MlDecode => "ml-decode",
            Algorithm::OptimalQuantize => "optimal-quantize",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Success,
    Fail,
    Anomaly,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Success => "success",
            Outcome::Fail => "fail",
            Outcome::Anomaly => "anomaly",
        })
    }
}

/// One row of a simulation report.
#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub n: usize,
    pub rate: f64,
    pub e: f64,
    pub algorithm: Algorithm,
    pub outcome: Outcome,
    pub distortion: f64,
    pub runtime_ns: u64,
}

/// Shape and rate facts about the code a report used.
#[derive(Clone, Debug, Serialize)]
pub struct CodeInfo {
    pub n: usize,
    pub checks: usize,
    /// None when the block length is beyond the dense-elimination cutoff,
    /// in which case checks are assumed independent.
    pub exact_rank: Option<usize>,
    /// Rate of the code the checks define: (n - rank) / n.
    pub code_rate: f64,
    /// Rate of the dual code the same matrix generates: rank / n.
    pub dual_rate: f64,
    pub max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removed_edge_pairs: Option<usize>,
}

pub fn describe_code(h: &SparseBinaryMatrix, stats: Option<SampleStats>) -> CodeInfo {
    let n = h.cols();
    let exact_rank = (n <= EXACT_RANK_MAX_COLS).then(|| h.rank());
    let rank = exact_rank.unwrap_or_else(|| h.rows().min(n));
    CodeInfo {
        n,
        checks: h.rows(),
        exact_rank,
        code_rate: (n - rank) as f64 / n.max(1) as f64,
        dual_rate: rank as f64 / n.max(1) as f64,
        max_degree: CodeGraph::from_parity_check(h).max_degree(),
        removed_edge_pairs: stats.map(|s| s.removed_edge_pairs),
    }
}

/// Per-(algorithm, n, e) aggregate with a normal-approximation
/// confidence half-width at the recorded confidence level.
#[derive(Clone, Debug, Serialize)]
pub struct SummaryCell {
    pub algorithm: Algorithm,
    pub n: usize,
    pub rate: f64,
    pub e: f64,
    pub trials: u64,
    pub successes: u64,
    pub success_prob: f64,
    pub ci_halfwidth: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_runtime_ns: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DoublingRatio {
    pub algorithm: Algorithm,
    pub from_n: usize,
    pub to_n: usize,
    pub ratio: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub confidence_level: f64,
    pub anomalies: u64,
    pub cells: Vec<SummaryCell>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<FailureBounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern_failure_prob: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold_e: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rate_gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converse_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub doubling_ratios: Option<Vec<DoublingRatio>>,
}

/// A full experiment report: the configuration that produced it, every
/// trial row, and the aggregate summary.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub config: SimConfig,
    pub code_info: Option<CodeInfo>,
    pub rows: Vec<TrialRecord>,
    pub summary: Summary,
}

const CONFIDENCE_LEVEL: f64 = 0.95;
const Z_95: f64 = 1.959_963_984_540_054;

/// Groups rows into cells; insensitive to row order by construction.
pub fn summarize(rows: &[TrialRecord]) -> Vec<SummaryCell> {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<(Algorithm, usize, u64, u64), Vec<&TrialRecord>> = BTreeMap::new();
    for row in rows {
        groups
            .entry((row.algorithm, row.n, row.e.to_bits(), row.rate.to_bits()))
            .or_default()
            .push(row);
    }
    groups
        .into_values()
        .map(|group| {
            let trials = group.len() as u64;
            let successes = group
                .iter()
                .filter(|r| r.outcome == Outcome::Success)
                .count() as u64;
            let p = successes as f64 / trials as f64;
            let mut runtimes: Vec<u64> = group.iter().map(|r| r.runtime_ns).collect();
            runtimes.sort_unstable();
            let sample = &group[0];
            SummaryCell {
                algorithm: sample.algorithm,
                n: sample.n,
                rate: sample.rate,
                e: sample.e,
                trials,
                successes,
                success_prob: p,
                ci_halfwidth: Z_95 * (p * (1.0 - p) / trials as f64).sqrt(),
                median_runtime_ns: Some(runtimes[runtimes.len() / 2]),
            }
        })
        .collect()
}

fn base_summary(rows: &[TrialRecord]) -> Summary {
    Summary {
        confidence_level: CONFIDENCE_LEVEL,
        anomalies: rows.iter().filter(|r| r.outcome == Outcome::Anomaly).count() as u64,
        cells: summarize(rows),
        agreement: None,
        bounds: None,
        pattern_failure_prob: None,
        threshold_e: None,
        rate_gap: None,
        converse_ok: None,
        doubling_ratios: None,
    }
}

/// Codeword sampler: a random nullspace combination when the basis is
/// affordable, otherwise the zero codeword (peeling work and failure
/// depend only on the pattern, never on the transmitted values).
struct CodewordSampler {
    basis: Option<Vec<BitVector>>,
    n: usize,
}

impl CodewordSampler {
    fn new(h: &SparseBinaryMatrix) -> CodewordSampler {
        let basis = (h.cols() <= EXACT_RANK_MAX_COLS).then(|| h.nullspace_basis());
        CodewordSampler {
            basis,
            n: h.cols(),
        }
    }

    fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> BitVector {
        match &self.basis {
            Some(basis) => {
                let mut c = BitVector::zeros(self.n);
                for b in basis {
                    if rng.random() {
                        c.xor_assign(b);
                    }
                }
                c
            }
            None => BitVector::zeros(self.n),
        }
    }
}

fn time_ns<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_nanos().min(u64::MAX as u128) as u64)
}

/// Monte Carlo erasure decoding over the binary erasure channel.
pub fn run_decode_trials(cfg: &SimConfig, h: &SparseBinaryMatrix) -> Result<SweepReport, Error> {
    cfg.validate()?;
    let info = describe_code(h, None);
    let sampler = CodewordSampler::new(h);
    let mut rows = Vec::with_capacity(cfg.trials as usize);
    for trial in 0..cfg.trials {
        let seed = trial_seed(cfg.seed, trial);
        let mut rng = trial_rng(seed);
        let c = sampler.draw(&mut rng);
        let y = gen_bec_received_with(&c, cfg.erasure_prob, &mut rng);
        let (out, runtime_ns) = time_ns(|| erasure_decode(h, &y));
        let out = out?;
        let (outcome, dist) = match out.codeword() {
            Some(word) if *word == c => (Outcome::Success, distortion(&y, word)?),
            Some(_) => (Outcome::Anomaly, 0.0),
            None => (Outcome::Fail, 0.0),
        };
        rows.push(TrialRecord {
            trial,
            seed,
            n: info.n,
            rate: info.code_rate,
            e: cfg.erasure_prob,
            algorithm: Algorithm::ErasureDecode,
            outcome,
            distortion: dist,
            runtime_ns,
        });
    }
    let summary = base_summary(&rows);
    Ok(SweepReport {
        config: cfg.clone(),
        code_info: Some(info),
        rows,
        summary,
    })
}

/// Monte Carlo erasure quantization; the given matrix is used directly
/// as the generator of the quantizing code.
pub fn run_quantize_trials(cfg: &SimConfig, g: &SparseBinaryMatrix) -> Result<SweepReport, Error> {
    cfg.validate()?;
    let info = describe_code(g, None);
    let n = g.cols();
    let mut rows = Vec::with_capacity(cfg.trials as usize);
    for trial in 0..cfg.trials {
        let seed = trial_seed(cfg.seed, trial);
        let mut rng = trial_rng(seed);
        let z = gen_beq_source_with(n, cfg.erasure_prob, &mut rng);
        let tie = cfg.tie_break.for_trial(seed);
        let (out, runtime_ns) = time_ns(|| erasure_quantize(g, &z, tie));
        let out = out?;
        let (outcome, dist) = match out.codeword() {
            Some(word) => {
                let d = distortion(&z, word)?;
                if d == 0.0 {
                    (Outcome::Success, 0.0)
                } else {
                    (Outcome::Anomaly, d)
                }
            }
            None => (Outcome::Fail, 0.0),
        };
        rows.push(TrialRecord {
            trial,
            seed,
            n,
            rate: info.dual_rate,
            e: cfg.erasure_prob,
            algorithm: Algorithm::ErasureQuantize,
            outcome,
            distortion: dist,
            runtime_ns,
        });
    }
    let summary = base_summary(&rows);
    Ok(SweepReport {
        config: cfg.clone(),
        code_info: Some(info),
        rows,
        summary,
    })
}

/// Paired-pattern experiment: every trial decodes a random codeword
/// erased at pattern e and quantizes a random source erased at the
/// complement, with the dual generator. Step-5 failure must agree on
/// every trial; a disagreement is recorded as a hard anomaly.
pub fn run_duality_experiment(
    cfg: &SimConfig,
    h: &SparseBinaryMatrix,
) -> Result<SweepReport, Error> {
    cfg.validate()?;
    let info = describe_code(h, None);
    let g_dual = h.dualize();
    let sampler = CodewordSampler::new(h);
    let n = h.cols();
    let mut rows = Vec::with_capacity(2 * cfg.trials as usize);
    let mut agreements = 0u64;
    for trial in 0..cfg.trials {
        let seed = trial_seed(cfg.seed, trial);
        let mut rng = trial_rng(seed);
        let e = ErasurePattern::random(n, cfg.erasure_prob, &mut rng);
        let c = sampler.draw(&mut rng);
        let y = ErasureWord::from_codeword(&c, &e);
        let z = ErasureWord::random_with_pattern(&e.complement(), &mut rng);
        let tie = cfg.tie_break.for_trial(seed);

        let (dec, dec_ns) = time_ns(|| erasure_decode(h, &y));
        let dec = dec?;
        let (quant, quant_ns) = time_ns(|| erasure_quantize(&g_dual, &z, tie));
        let quant = quant?;

        let agree = dec.is_success() == quant.is_success();
        if agree {
            agreements += 1;
        }
        let dec_outcome = if !agree {
            Outcome::Anomaly
        } else if dec.is_success() {
            Outcome::Success
        } else {
            Outcome::Fail
        };
        let quant_outcome = if !agree {
            Outcome::Anomaly
        } else if quant.is_success() {
            Outcome::Success
        } else {
            Outcome::Fail
        };
        rows.push(TrialRecord {
            trial,
            seed,
            n,
            rate: info.code_rate,
            e: cfg.erasure_prob,
            algorithm: Algorithm::ErasureDecode,
            outcome: dec_outcome,
            distortion: 0.0,
            runtime_ns: dec_ns,
        });
        rows.push(TrialRecord {
            trial,
            seed,
            n,
            rate: info.dual_rate,
            e: 1.0 - cfg.erasure_prob,
            algorithm: Algorithm::ErasureQuantize,
            outcome: quant_outcome,
            distortion: quant
                .codeword()
                .map(|w| distortion(&z, w))
                .transpose()?
                .unwrap_or(0.0),
            runtime_ns: quant_ns,
        });
    }
    let mut summary = base_summary(&rows);
    summary.agreement = Some(agreements as f64 / cfg.trials as f64);
    Ok(SweepReport {
        config: cfg.clone(),
        code_info: Some(info),
        rows,
        summary,
    })
}

/// Estimates the failure probability of optimal quantization when the
/// sparse-check code is used directly as the quantizer, against the
/// closed-form lower bounds extracted from the check-degree profile.
pub fn run_failure_bound_experiment(
    cfg: &SimConfig,
    h: &SparseBinaryMatrix,
) -> Result<SweepReport, Error> {
    cfg.validate()?;
    let n = h.cols();
    if n > EXACT_RANK_MAX_COLS {
        return Err(Error::InvalidParameter(format!(
            "the failure-bound experiment solves dense systems; n = {n} exceeds {EXACT_RANK_MAX_COLS}"
        )));
    }
    let info = describe_code(h, None);
    let profile = CodeGraph::from_parity_check(h).check_degree_profile();
    let bounds = profile_failure_bounds(&profile, n, cfg.erasure_prob)?;
    // Generator of the code the checks define, for the pattern-level test.
    let generator_rows: Vec<(usize, usize)> = h
        .nullspace_basis()
        .iter()
        .enumerate()
        .flat_map(|(r, v)| v.support().into_iter().map(move |c| (r, c)))
        .collect();
    let k = n - info.exact_rank.expect("within cutoff");
    let code_generator = SparseBinaryMatrix::from_entries(k, n, &generator_rows)?;

    let mut rows = Vec::with_capacity(cfg.trials as usize);
    let mut pattern_failures = 0u64;
    for trial in 0..cfg.trials {
        let seed = trial_seed(cfg.seed, trial);
        let mut rng = trial_rng(seed);
        let z = gen_beq_source_with(n, cfg.erasure_prob, &mut rng);
        let (feasible, runtime_ns) = time_ns(|| optimal_quantize_with_checks(h, &z));
        let feasible = feasible?;
        if !quantizable(&code_generator, &z.pattern_of()) {
            pattern_failures += 1;
        }
        let (outcome, dist) = match &feasible {
            Some(word) => (Outcome::Success, distortion(&z, word)?),
            None => (Outcome::Fail, 0.0),
        };
        rows.push(TrialRecord {
            trial,
            seed,
            n,
            rate: info.code_rate,
            e: cfg.erasure_prob,
            algorithm: Algorithm::OptimalQuantize,
            outcome,
            distortion: dist,
            runtime_ns,
        });
    }
    let mut summary = base_summary(&rows);
    summary.bounds = Some(bounds);
    summary.pattern_failure_prob = Some(pattern_failures as f64 / cfg.trials as f64);
    Ok(SweepReport {
        config: cfg.clone(),
        code_info: Some(info),
        rows,
        summary,
    })
}

/// Success probability of iterative quantization with the dual code
/// across a grid of source-erasure probabilities, with the empirical
/// threshold and the gap to the minimum possible rate.
pub fn run_rate_sweep(cfg: &SimConfig, h: &SparseBinaryMatrix) -> Result<SweepReport, Error> {
    cfg.validate()?;
    if cfg.e_grid.is_empty() {
        return Err(Error::InvalidParameter(
            "the rate sweep needs a nonempty erasure-probability grid".into(),
        ));
    }
    let info = describe_code(h, None);
    let g_dual = h.dualize();
    let n = h.cols();
    let rate = info.dual_rate;
    let mut rows = Vec::new();
    for (gi, &e) in cfg.e_grid.iter().enumerate() {
        for trial in 0..cfg.trials {
            let seed = trial_seed(cfg.seed, (gi as u64) << 32 | trial);
            let mut rng = trial_rng(seed);
            let z = gen_beq_source_with(n, e, &mut rng);
            let tie = cfg.tie_break.for_trial(seed);
            let (out, runtime_ns) = time_ns(|| erasure_quantize(&g_dual, &z, tie));
            let out = out?;
            let (outcome, dist) = match out.codeword() {
                Some(word) => {
                    let d = distortion(&z, word)?;
                    if d == 0.0 {
                        (Outcome::Success, 0.0)
                    } else {
                        (Outcome::Anomaly, d)
                    }
                }
                None => (Outcome::Fail, 0.0),
            };
            rows.push(TrialRecord {
                trial,
                seed,
                n,
                rate,
                e,
                algorithm: Algorithm::ErasureQuantize,
                outcome,
                distortion: dist,
                runtime_ns,
            });
        }
    }
    let mut summary = base_summary(&rows);
    let threshold = summary
        .cells
        .iter()
        .filter(|cell| cell.success_prob >= 0.99)
        .map(|cell| cell.e)
        .fold(None, |best: Option<f64>, e| {
            Some(best.map_or(e, |b| b.min(e)))
        });
    summary.threshold_e = threshold;
    summary.rate_gap = threshold.map(|e_star| rate - (1.0 - e_star));
    summary.converse_ok = Some(summary.cells.iter().all(|cell| {
        cell.success_prob < 0.99 || rate + 1e-9 >= 1.0 - cell.e
    }));
    Ok(SweepReport {
        config: cfg.clone(),
        code_info: Some(info),
        rows,
        summary,
    })
}

/// Median runtimes of both peeling algorithms across doubling block
/// lengths of one regular family, with per-doubling ratios.
///
/// Decode and quantize run on complementary patterns of the same draw,
/// so the two workloads peel mirrored schedules.
pub fn bench_linear_runtime(cfg: &SimConfig) -> Result<SweepReport, Error> {
    cfg.validate()?;
    let CodeSpec::Regular { dv, dc, .. } = cfg.code else {
        return Err(Error::InvalidParameter(
            "the runtime benchmark needs a regular ensemble code spec".into(),
        ));
    };
    if cfg.sizes.len() < 2 {
        return Err(Error::InvalidParameter(
            "the runtime benchmark needs at least two block lengths".into(),
        ));
    }
    let mut codes = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        let (h, _) = sample_regular_ldpc_detailed(n, dv, dc, trial_seed(cfg.seed, n as u64))?;
        let g_dual = h.dualize();
        codes.push((n, h, g_dual));
    }
    // Warmup pass, untimed, so first-touch costs don't skew the medians.
    for (si, (n, h, g_dual)) in codes.iter().enumerate() {
        let mut rng = trial_rng(trial_seed(cfg.seed, (si as u64 + 1) << 48));
        let e = ErasurePattern::random(*n, cfg.erasure_prob, &mut rng);
        erasure_decode(h, &ErasureWord::from_codeword(&BitVector::zeros(*n), &e))?;
        let z = ErasureWord::random_with_pattern(&e.complement(), &mut rng);
        erasure_quantize(g_dual, &z, TieBreak::Zeros)?;
    }
    // Repetitions on the outside, sizes on the inside: transient system
    // load then spreads over all block lengths instead of biasing one.
    let mut rows = Vec::new();
    for trial in 0..cfg.trials {
        for (si, (n, h, g_dual)) in codes.iter().enumerate() {
            let n = *n;
            let seed = trial_seed(cfg.seed, (si as u64 + 1) << 40 | trial);
            let mut rng = trial_rng(seed);
            let e = ErasurePattern::random(n, cfg.erasure_prob, &mut rng);
            let y = ErasureWord::from_codeword(&BitVector::zeros(n), &e);
            let z = ErasureWord::random_with_pattern(&e.complement(), &mut rng);
            let tie = cfg.tie_break.for_trial(seed);

            let (dec, dec_ns) = time_ns(|| erasure_decode(h, &y));
            let dec = dec?;
            let (quant, quant_ns) = time_ns(|| erasure_quantize(g_dual, &z, tie));
            let quant = quant?;

            rows.push(TrialRecord {
                trial,
                seed,
                n,
                rate: (dc - dv) as f64 / dc as f64,
                e: cfg.erasure_prob,
                algorithm: Algorithm::ErasureDecode,
                outcome: if dec.is_success() {
                    Outcome::Success
                } else {
                    Outcome::Fail
                },
                distortion: 0.0,
                runtime_ns: dec_ns,
            });
            rows.push(TrialRecord {
                trial,
                seed,
                n,
                rate: dv as f64 / dc as f64,
                e: 1.0 - cfg.erasure_prob,
                algorithm: Algorithm::ErasureQuantize,
                outcome: if quant.is_success() {
                    Outcome::Success
                } else {
                    Outcome::Fail
                },
                distortion: 0.0,
                runtime_ns: quant_ns,
            });
        }
    }
    let mut summary = base_summary(&rows);
    summary.doubling_ratios = Some(doubling_ratios(&summary.cells, &cfg.sizes));
    Ok(SweepReport {
        config: cfg.clone(),
        code_info: None,
        rows,
        summary,
    })
}

fn doubling_ratios(cells: &[SummaryCell], sizes: &[usize]) -> Vec<DoublingRatio> {
    let mut ratios = Vec::new();
    for algorithm in [Algorithm::ErasureDecode, Algorithm::ErasureQuantize] {
        let median = |n: usize| -> Option<u64> {
            cells
                .iter()
                .find(|c| c.algorithm == algorithm && c.n == n)
                .and_then(|c| c.median_runtime_ns)
        };
        for pair in sizes.windows(2) {
            let (Some(small), Some(large)) = (median(pair[0]), median(pair[1])) else {
                continue;
            };
            ratios.push(DoublingRatio {
                algorithm,
                from_n: pair[0],
                to_n: pair[1],
                ratio: large as f64 / small.max(1) as f64,
            });
        }
    }
    ratios
}
