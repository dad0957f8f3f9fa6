//! End-to-end acceptance suite.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion. Everything runs inside a single test
//! function so the runtime measurements of the linear-scaling criterion
//! are not perturbed by sibling tests.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dualpeel_core::algebra::{
    dec_prod, dec_sum, quant_prod, quant_sum, DecSymbol as D, QuantSymbol as Q,
};
use dualpeel_core::gf2::{BitVector, SparseBinaryMatrix};
use dualpeel_core::graph::sample_regular_ldpc;
use dualpeel_core::oracle::{
    build_stacked, build_stacked_for_quantizer, decodable, exhaustive_quantize, ml_decode,
    optimal_quantize, quantizable,
};
use dualpeel_core::peel::{
    distortion, erasure_decode, erasure_quantize, ErasurePattern, ErasureWord, TieBreak,
};
use dualpeel_core::sim::{
    bench_linear_runtime, run_duality_experiment, run_failure_bound_experiment, run_rate_sweep,
    CodeSpec, ExperimentKind, Outcome, SimConfig,
};

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, density: f64) -> SparseBinaryMatrix {
    let mut entries = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if rng.random_bool(density) {
                entries.push((r, c));
            }
        }
    }
    SparseBinaryMatrix::from_entries(rows, cols, &entries).unwrap()
}

fn random_codeword(basis: &[BitVector], n: usize, rng: &mut impl Rng) -> BitVector {
    let mut c = BitVector::zeros(n);
    for b in basis {
        if rng.random() {
            c.xor_assign(b);
        }
    }
    c
}

/// Criterion 1: iterative decode and quantize fail together, exhaustively
/// for small codes and on ten thousand sampled paired trials at n = 512.
fn duality_exactness() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD001);
    let mut checked = 0u64;
    for code_idx in 0..20 {
        let n = 4 + (code_idx % 7); // block lengths 4..=10
        let m = 1 + (code_idx % n);
        let h = random_matrix(&mut rng, m, n, 0.45);
        let basis = h.nullspace_basis();
        let g_dual = h.dualize();
        for mask in 0u32..(1 << n) {
            let erased: Vec<bool> = (0..n).map(|i| (mask >> i) & 1 == 1).collect();
            let e = ErasurePattern::from_bools(&erased);
            let y = ErasureWord::from_codeword(&random_codeword(&basis, n, &mut rng), &e);
            let z = ErasureWord::random_with_pattern(&e.complement(), &mut rng);
            let dec = erasure_decode(&h, &y).map_err(|e| e.to_string())?;
            let quant =
                erasure_quantize(&g_dual, &z, TieBreak::Zeros).map_err(|e| e.to_string())?;
            if dec.is_success() != quant.is_success() {
                return Err(format!(
                    "disagreement at code {code_idx}, pattern {mask:b}"
                ));
            }
            checked += 1;
        }
    }

    let h = sample_regular_ldpc(512, 3, 6, 0xC0DE).map_err(|e| e.to_string())?;
    let mut cfg = SimConfig::new(
        CodeSpec::Regular {
            n: 512,
            dv: 3,
            dc: 6,
        },
        ExperimentKind::Duality,
    );
    cfg.erasure_prob = 0.45;
    cfg.trials = 10_000;
    cfg.seed = 0xD002;
    let report = run_duality_experiment(&cfg, &h).map_err(|e| e.to_string())?;
    let agreement = report.summary.agreement.unwrap_or(0.0);
    if agreement != 1.0 || report.summary.anomalies != 0 {
        return Err(format!(
            "sampled agreement {agreement} with {} anomalies",
            report.summary.anomalies
        ));
    }
    for row in &report.rows {
        if row.outcome == Outcome::Success && row.distortion != 0.0 {
            return Err(format!("success row with distortion {}", row.distortion));
        }
    }
    Ok(format!(
        "{checked} exhaustive paired runs and 10000 sampled trials agree"
    ))
}

/// Criterion 2: every successful quantization reproduces the source at
/// all unerased positions, across ensembles, policies and sizes.
fn quantizer_validity() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
    let mut successes = 0u64;
    let mut runs = 0u64;
    let mut generators: Vec<SparseBinaryMatrix> = vec![
        sample_regular_ldpc(120, 3, 6, 7).map_err(|e| e.to_string())?,
        sample_regular_ldpc(64, 3, 4, 8).map_err(|e| e.to_string())?,
        SparseBinaryMatrix::from_dense_rows(&[vec![1, 1, 1]]),
        SparseBinaryMatrix::from_dense_rows(&[vec![1, 0, 1], vec![0, 1, 1]]),
    ];
    for _ in 0..40 {
        let rows = 1 + rng.random_range(0..10);
        let cols = 2 + rng.random_range(0..18);
        generators.push(random_matrix(&mut rng, rows, cols, 0.4));
    }
    for (gi, g) in generators.iter().enumerate() {
        for trial in 0..60u64 {
            let pattern = ErasurePattern::random(g.cols(), 0.4 + 0.5 * (trial as f64 / 60.0), &mut rng);
            let z = ErasureWord::random_with_pattern(&pattern, &mut rng);
            let tie = if trial % 2 == 0 {
                TieBreak::Zeros
            } else {
                TieBreak::SeededRandom(trial ^ gi as u64)
            };
            runs += 1;
            if let Some(word) = erasure_quantize(g, &z, tie)
                .map_err(|e| e.to_string())?
                .codeword()
            {
                successes += 1;
                for j in 0..z.len() {
                    if let Some(b) = z.symbol(j).bit() {
                        if word.get(j) != b {
                            return Err(format!(
                                "generator {gi} trial {trial}: mismatch at position {j}"
                            ));
                        }
                    }
                }
                if distortion(&z, word).map_err(|e| e.to_string())? != 0.0 {
                    return Err(format!("generator {gi} trial {trial}: nonzero distortion"));
                }
            }
        }
    }
    if successes < 200 {
        return Err(format!(
            "only {successes} successes across {runs} runs; suite too weak"
        ));
    }
    Ok(format!(
        "{successes} successes out of {runs} runs all match at unerased positions"
    ))
}

/// Criterion 3: the decoding-side and quantization-side stacked matrices
/// are identical entrywise and their rank conditions agree.
fn stacked_matrix_identity() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51AC);
    for case in 0..200 {
        let n = 1 + rng.random_range(0..32);
        let m = 1 + rng.random_range(0..n.max(2));
        let h = random_matrix(&mut rng, m, n, 0.4);
        let erased: Vec<bool> = (0..n).map(|_| rng.random()).collect();
        let e = ErasurePattern::from_bools(&erased);
        let decode_side = build_stacked(&h, &e);
        let quant_side = build_stacked_for_quantizer(&h.dualize(), &e.complement());
        if decode_side.matrix() != quant_side.matrix() {
            return Err(format!("case {case}: stacked matrices differ"));
        }
        if decodable(&h, &e) != quantizable(&h, &e.complement()) {
            return Err(format!("case {case}: rank conditions disagree"));
        }
    }
    Ok("200 random (H, e) pairs agree entrywise and in rank".to_string())
}

/// Criterion 4: the linear-algebra quantization oracle matches brute
/// force over all 2^k codewords, and peeling success implies unique
/// maximum-likelihood agreement.
fn oracle_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1);
    let mut instances = 0u64;
    for case in 0..120 {
        let k = 1 + rng.random_range(0..10);
        let n = k + rng.random_range(0..11);
        let g = random_matrix(&mut rng, k, n, 0.5);
        instances += 1;
        for _ in 0..3 {
            let pattern = ErasurePattern::random(n, 0.5, &mut rng);
            let z = ErasureWord::random_with_pattern(&pattern, &mut rng);
            let brute = exhaustive_quantize(&g, &z).map_err(|e| e.to_string())?;
            let solved = optimal_quantize(&g, &z).map_err(|e| e.to_string())?;
            if brute.is_some() != solved.is_some() {
                return Err(format!("case {case}: oracle existence mismatch"));
            }
        }
    }

    let mut peel_successes = 0u64;
    for case in 0..10_000 {
        let n = 6 + rng.random_range(0..18);
        let m = 1 + rng.random_range(0..n);
        let h = random_matrix(&mut rng, m, n, 0.35);
        let basis = h.nullspace_basis();
        let c = random_codeword(&basis, n, &mut rng);
        let pattern = ErasurePattern::random(n, 0.3, &mut rng);
        let y = ErasureWord::from_codeword(&c, &pattern);
        if let Some(peeled) = erasure_decode(&h, &y).map_err(|e| e.to_string())?.codeword() {
            peel_successes += 1;
            let ml = ml_decode(&h, &y).map_err(|e| e.to_string())?;
            if !ml.is_unique() {
                return Err(format!("case {case}: peeling success but ML not unique"));
            }
            if ml.word() != Some(peeled) {
                return Err(format!("case {case}: peeling and ML words differ"));
            }
        }
    }
    if peel_successes == 0 {
        return Err("no peeling successes sampled".into());
    }
    Ok(format!(
        "{instances} oracle instances agree with brute force; {peel_successes} peeling successes all match ML"
    ))
}

/// Criterion 5: empirical failure probability of optimal quantization
/// with a (3,6) code at e = 0.5 meets the closed-form product bound.
fn failure_bound() -> Result<String, String> {
    let h = sample_regular_ldpc(1024, 3, 6, 0xB0B).map_err(|e| e.to_string())?;
    let mut cfg = SimConfig::new(
        CodeSpec::Regular {
            n: 1024,
            dv: 3,
            dc: 6,
        },
        ExperimentKind::Bound,
    );
    cfg.erasure_prob = 0.5;
    cfg.trials = 1000;
    cfg.seed = 0xB0B2;
    let report = run_failure_bound_experiment(&cfg, &h).map_err(|e| e.to_string())?;
    let failures = report
        .rows
        .iter()
        .filter(|r| r.outcome == Outcome::Fail)
        .count() as f64;
    let empirical = failures / cfg.trials as f64;

    // Half the block length in checks, all of degree at most six.
    let bound = 1.0 - (1.0 - 1.0 / 128.0f64).powi(512);
    let sigma = (bound * (1.0 - bound) / cfg.trials as f64).sqrt();
    let threshold = bound - 3.0 * sigma;
    let reported = report.summary.bounds.ok_or("missing bound values")?;
    if (reported.product - bound).abs() > 1e-9 {
        return Err(format!(
            "profile bound {} differs from pinned value {bound}",
            reported.product
        ));
    }
    let pattern_failure = report
        .summary
        .pattern_failure_prob
        .ok_or("missing pattern failure rate")?;
    if pattern_failure + 1e-12 < empirical {
        return Err(format!(
            "pattern-level failure {pattern_failure} below per-source failure {empirical}"
        ));
    }
    if empirical < threshold {
        return Err(format!(
            "empirical failure {empirical} below bound {bound} - 3σ = {threshold}"
        ));
    }
    Ok(format!(
        "failure {empirical} ≥ {threshold:.4} (bound {bound:.4}); pattern-level {pattern_failure}"
    ))
}

/// Criterion 6: the dual of a rate-1/2 (3,6) code at n = 100000
/// quantizes sources with erasure probability 0.65 almost surely, and
/// no sweep point beats the converse.
fn rate_distortion_approach() -> Result<String, String> {
    let n = 100_000;
    let h = sample_regular_ldpc(n, 3, 6, 0x5EED).map_err(|e| e.to_string())?;
    let mut cfg = SimConfig::new(
        CodeSpec::Regular { n, dv: 3, dc: 6 },
        ExperimentKind::Sweep,
    );
    cfg.trials = 200;
    cfg.seed = 0x5EED2;
    cfg.e_grid = vec![0.55, 0.6, 0.65, 0.7];
    let report = run_rate_sweep(&cfg, &h).map_err(|e| e.to_string())?;
    if report.summary.anomalies != 0 {
        return Err(format!("{} anomalies", report.summary.anomalies));
    }
    let cell = report
        .summary
        .cells
        .iter()
        .find(|c| (c.e - 0.65).abs() < 1e-12)
        .ok_or("missing e = 0.65 cell")?;
    if cell.success_prob < 0.99 {
        return Err(format!(
            "success probability {} at e = 0.65 below 0.99",
            cell.success_prob
        ));
    }
    if report.summary.converse_ok != Some(true) {
        return Err("a sweep point beat the converse bound".into());
    }
    let threshold = report.summary.threshold_e.map(|e| e.to_string());
    let gap = report.summary.rate_gap.map(|g| format!("{g:.3}"));
    Ok(format!(
        "success {} at e = 0.65; threshold e* = {}, rate gap = {}",
        cell.success_prob,
        threshold.as_deref().unwrap_or("none"),
        gap.as_deref().unwrap_or("none")
    ))
}

/// Criterion 7: median runtimes of both algorithms grow at most 2.5x
/// per doubling of the block length.
fn linear_runtime() -> Result<String, String> {
    let mut cfg = SimConfig::new(
        CodeSpec::Regular {
            n: 0,
            dv: 3,
            dc: 6,
        },
        ExperimentKind::Bench,
    );
    cfg.erasure_prob = 0.35;
    cfg.trials = 31;
    cfg.seed = 0xBE4C;
    cfg.sizes = (12..=17).map(|p| 1usize << p).collect();
    let report = bench_linear_runtime(&cfg).map_err(|e| e.to_string())?;
    let ratios = report
        .summary
        .doubling_ratios
        .as_ref()
        .ok_or("missing doubling ratios")?;
    if ratios.len() != 2 * (cfg.sizes.len() - 1) {
        return Err(format!("expected 10 ratios, got {}", ratios.len()));
    }
    let mut worst = 0.0f64;
    for r in ratios {
        worst = worst.max(r.ratio);
        if r.ratio > 2.5 {
            return Err(format!(
                "{} ratio {:.2} from n={} to n={} exceeds 2.5",
                r.algorithm, r.ratio, r.from_n, r.to_n
            ));
        }
    }
    Ok(format!("all per-doubling ratios ≤ 2.5 (worst {worst:.2})"))
}

/// Criterion 8: the four message-combination rules equal their
/// transcribed tables on every entry.
fn algebra_tables() -> Result<String, String> {
    const DEC: [D; 3] = [D::Zero, D::One, D::Erased];
    const QUANT: [Q; 4] = [Q::Zero, Q::One, Q::Erased, Q::Null];
    let dec_sum_table: [[D; 3]; 3] = [
        [D::Zero, D::One, D::Erased],
        [D::One, D::Zero, D::Erased],
        [D::Erased, D::Erased, D::Erased],
    ];
    let dec_prod_table: [[Option<D>; 3]; 3] = [
        [Some(D::Zero), None, Some(D::Zero)],
        [None, Some(D::One), Some(D::One)],
        [Some(D::Zero), Some(D::One), Some(D::Erased)],
    ];
    let quant_sum_table: [[Q; 4]; 4] = [
        [Q::Zero, Q::One, Q::Erased, Q::Null],
        [Q::One, Q::Zero, Q::Erased, Q::Null],
        [Q::Erased, Q::Erased, Q::Erased, Q::Erased],
        [Q::Null, Q::Null, Q::Erased, Q::Null],
    ];
    let quant_prod_table: [[Option<Q>; 4]; 4] = [
        [Some(Q::Zero), None, Some(Q::Zero), Some(Q::Zero)],
        [None, Some(Q::One), Some(Q::One), Some(Q::One)],
        [Some(Q::Zero), Some(Q::One), Some(Q::Erased), Some(Q::Null)],
        [Some(Q::Zero), Some(Q::One), Some(Q::Null), Some(Q::Null)],
    ];
    let mut entries = 0;
    for (i, &a) in DEC.iter().enumerate() {
        for (j, &b) in DEC.iter().enumerate() {
            if dec_sum(a, b) != dec_sum_table[i][j] {
                return Err(format!("dec_sum({a:?}, {b:?}) off the table"));
            }
            if dec_prod(a, b).ok() != dec_prod_table[i][j] {
                return Err(format!("dec_prod({a:?}, {b:?}) off the table"));
            }
            entries += 2;
        }
    }
    for (i, &a) in QUANT.iter().enumerate() {
        for (j, &b) in QUANT.iter().enumerate() {
            if quant_sum(a, b) != quant_sum_table[i][j] {
                return Err(format!("quant_sum({a:?}, {b:?}) off the table"));
            }
            if quant_prod(a, b).ok() != quant_prod_table[i][j] {
                return Err(format!("quant_prod({a:?}, {b:?}) off the table"));
            }
            entries += 2;
        }
    }
    Ok(format!("{entries} table entries match"))
}

#[test]
fn acceptance_criteria() {
    type Criterion = (
        &'static str,
        Option<Duration>,
        fn() -> Result<String, String>,
    );
    let criteria: [Criterion; 8] = [
        ("duality exactness", Some(Duration::from_secs(60)), duality_exactness),
        ("quantizer validity", None, quantizer_validity),
        ("stacked matrix identity", None, stacked_matrix_identity),
        ("oracle equivalence", None, oracle_equivalence),
        ("failure bound", Some(Duration::from_secs(300)), failure_bound),
        ("rate-distortion approach", None, rate_distortion_approach),
        ("linear runtime", Some(Duration::from_secs(300)), linear_runtime),
        ("algebra tables", None, algebra_tables),
    ];

    let mut failures = Vec::new();
    for (idx, (name, cap, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = f();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(cap)) = (&result, cap) {
            if elapsed > *cap {
                result = Err(format!("exceeded time cap {cap:?} (took {elapsed:.1?})"));
            }
        }
        match &result {
            Ok(detail) => println!(
                "criterion {} ({name}): PASS [{elapsed:.1?}] — {detail}",
                idx + 1
            ),
            Err(detail) => {
                println!(
                    "criterion {} ({name}): FAIL [{elapsed:.1?}] — {detail}",
                    idx + 1
                );
                failures.push(format!("criterion {} ({name}): {detail}", idx + 1));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "acceptance criteria failed:\n{}",
        failures.join("\n")
    );
}
