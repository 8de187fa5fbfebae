//! Self-check suite run by `eomq verify`.
//!
//! Every check compares a computed deviation against a tolerance (scaled by
//! the caller). Randomized checks draw from a seeded ChaCha stream so a
//! report is reproducible.

use crate::eom::{
    coherent_output, composition_oracle, dsb_settings, mean_field, multitone_coherent_output, port_entanglement,
    single_photon_output, ssb_settings, suggested_lattice_size, two_photon_output, Arm, EomConfig, Port, Preset,
    SsbSide, TimeGrid,
};
use crate::error::Result;
use crate::lattice::{decompose_mode, LatticeScale, ModeIndex, RfTone};
use crate::phase_modulator::{
    pm_coeff_exact, pm_generator_oracle, pm_scatter_row, Model, MultitonePmConfig, PmConfig, SidebandConvention,
    ToneDrive, Truncation,
};
use crate::scalar::j_unit;
use crate::splitters::{splitter_coeffs, splitter_generator_oracle, verify_reciprocity_within, SplitterSpec};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

type C = Complex<f64>;

pub const DEFAULT_SEED: u64 = 0x5eed_e0e0;

/// One measured deviation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub deviation: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(label: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Self {
            label: label.into(),
            deviation,
            tolerance,
        }
    }

    pub fn passed(&self, scale: f64) -> bool {
        // NaN deviations fail.
        self.deviation <= self.tolerance * scale
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    /// Label of the check with the largest `deviation / tolerance`.
    pub worst_check: String,
    pub worst_deviation: f64,
    pub worst_tolerance: f64,
}

impl CriterionReport {
    fn build(id: u8, name: &'static str, checks: Vec<Check>, scale: f64) -> Self {
        let passed = !checks.is_empty() && checks.iter().all(|c| c.passed(scale));
        let ratio = |c: &Check| {
            if c.deviation.is_nan() {
                f64::INFINITY
            } else if c.tolerance == 0.0 {
                if c.deviation == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                c.deviation / c.tolerance
            }
        };
        let worst = checks
            .iter()
            .max_by(|a, b| ratio(a).total_cmp(&ratio(b)))
            .cloned()
            .unwrap_or_else(|| Check::new("no checks", f64::NAN, 0.0));
        Self {
            id,
            name,
            passed,
            checks: checks.len(),
            worst_check: worst.label,
            worst_deviation: worst.deviation,
            worst_tolerance: worst.tolerance * scale,
        }
    }
}

fn mode(n: i64) -> Result<ModeIndex> {
    ModeIndex::new(n)
}

fn tone(n: i64) -> Result<RfTone> {
    RfTone::new(n)
}

fn splitter_laws() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for i in 0..=10 {
        let k = f64::from(i) / 10.0;
        for spec in [
            SplitterSpec::Bulk {
                theta: 2.0 * k.sqrt().asin(),
            },
            SplitterSpec::Dc { k },
            SplitterSpec::Yb { k },
        ] {
            let c = splitter_coeffs(&spec)?;
            let report = verify_reciprocity_within(&c, 1e-14);
            checks.push(Check::new(format!("{spec:?} reciprocity"), report.worst(), 1e-14));
            let oracle = splitter_generator_oracle(&spec)?;
            let m = c.operator_matrix();
            let mut worst = 0.0f64;
            for (r, row) in m.iter().enumerate() {
                for (col, &v) in row.iter().enumerate() {
                    worst = worst.max((oracle[(r, col)] - v).norm());
                }
            }
            checks.push(Check::new(format!("{spec:?} generator"), worst, 1e-12));
        }
    }
    Ok(checks)
}

fn pm_unitarity() -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let mut checks = Vec::new();
    for m in [0.5f64, 1.0, 2.0] {
        for big_n in [1i64, 3, 7] {
            for q0 in [20i64, 40] {
                let cfg = PmConfig::new(0.4, m, 0.7, tone(big_n)?)?;
                let n0 = mode(q0 * big_n)?;
                let row = pm_scatter_row(n0, &cfg, &tr, Model::Exact)?;
                checks.push(Check::new(
                    format!("norm m={m} N={big_n} q0={q0}"),
                    (row.power() - 1.0).abs(),
                    1e-10,
                ));
                let mut worst = 0.0f64;
                for other in (1..q0 + 6).filter(|&q| q != q0) {
                    let r = pm_scatter_row(mode(other * big_n)?, &cfg, &tr, Model::Exact)?;
                    worst = worst.max(row.inner(&r).norm());
                }
                checks.push(Check::new(
                    format!("orthogonality m={m} N={big_n} q0={q0}"),
                    worst,
                    1e-8,
                ));
            }
        }
    }
    Ok(checks)
}

fn generator_oracle() -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let mut checks = Vec::new();
    for (m, big_n, q0) in [(0.5, 1i64, 20i64), (1.0, 3, 20), (2.0, 2, 30), (1.5, 5, 12)] {
        let cfg = PmConfig::new(-0.3, m, 1.1, tone(big_n)?)?;
        let n0 = mode(q0 * big_n - 1)?;
        let cfg_eom = Preset::YbSingle.config().with_arms(Arm::Tone(cfg), Arm::Identity);
        let n_max = suggested_lattice_size(&cfg_eom, n0, &tr)?.max(n0.get() as usize + 10 * big_n as usize);
        let u = pm_generator_oracle(&cfg, n_max)?;
        let dec = decompose_mode(n0, cfg.tone);
        let (lo, hi) = crate::phase_modulator::retained_orders(n0, &cfg, &tr)?;
        let mut worst = 0.0f64;
        for q in lo..=hi {
            let out = dec.mode(q)?.get() as usize;
            if out <= n_max {
                let want = pm_coeff_exact(q, &dec, &cfg)?;
                worst = worst.max((u[(out - 1, n0.get() as usize - 1)] - want).norm());
            }
        }
        checks.push(Check::new(format!("m={m} N={big_n} q0={q0}"), worst, 1e-8));
    }
    Ok(checks)
}

fn optical_limit() -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let mut checks = Vec::new();
    for m in [0.1, 1.0, 2.0] {
        for q0 in [20i64, 35] {
            let cfg = PmConfig::new(0.2, m, 0.3, tone(3)?)?;
            let n0 = mode(q0 * 3 - 2)?;
            let exact = pm_scatter_row(n0, &cfg, &tr, Model::Exact)?;
            let optical = pm_scatter_row(n0, &cfg, &tr, Model::Optical)?;
            checks.push(Check::new(
                format!("m={m} q0={q0}"),
                exact.max_abs_diff(&optical),
                1e-15,
            ));
        }
    }
    Ok(checks)
}

fn dual(p1: PmConfig<f64>, p2: PmConfig<f64>) -> EomConfig<f64> {
    Preset::YbDual.config().with_arms(Arm::Tone(p1), Arm::Tone(p2))
}

fn dsb_parity() -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let n0 = mode(100)?;
    let dec = decompose_mode(n0, tone(3)?);
    let mut checks = Vec::new();
    for m in [0.1, 0.5, 1.0] {
        let (p1, p2) = dsb_settings(m, tone(3)?)?;
        let out = single_photon_output(&dual(p1, p2), Port::One, n0, &tr, Model::Optical)?;
        let worst = out
            .port1
            .iter()
            .filter(|(md, _)| ((md.get() as i64 + dec.r0) / 3 - dec.q0) % 2 == 0)
            .map(|(_, a)| a.norm())
            .fold(0.0, f64::max);
        checks.push(Check::new(format!("m={m}"), worst, 1e-14));
    }
    Ok(checks)
}

fn ssb_cancellation() -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let n0 = mode(100)?;
    let mut checks = Vec::new();
    for m in [0.2, 0.8] {
        for (side, offset) in [(SsbSide::Lower, -3i64), (SsbSide::Upper, 3)] {
            let (p1, p2) = ssb_settings(m, tone(3)?, side)?;
            let out = single_photon_output(&dual(p1, p2), Port::One, n0, &tr, Model::Optical)?;
            checks.push(Check::new(
                format!("{side:?} m={m}"),
                out.port1.get(n0.offset(offset)?).norm(),
                1e-14,
            ));
        }
    }
    Ok(checks)
}

fn random_spec(rng: &mut ChaCha8Rng) -> SplitterSpec<f64> {
    let k: f64 = rng.gen_range(0.0..=1.0);
    match rng.gen_range(0..3) {
        0 => SplitterSpec::Bulk {
            theta: rng.gen_range(0.0..PI),
        },
        1 => SplitterSpec::Dc { k },
        _ => SplitterSpec::Yb { k },
    }
}

fn random_config(rng: &mut ChaCha8Rng, equal_tones: bool) -> Result<EomConfig<f64>> {
    let si = splitter_coeffs(&random_spec(rng))?;
    let so = splitter_coeffs(&random_spec(rng))?;
    let n1 = rng.gen_range(1..=5);
    let n2 = if equal_tones { n1 } else { rng.gen_range(1..=5) };
    let mut arm = |n: i64| -> Result<Arm<f64>> {
        Ok(Arm::Tone(PmConfig::new(
            rng.gen_range(-PI..PI),
            rng.gen_range(0.0..=2.0),
            rng.gen_range(-PI..PI),
            tone(n)?,
        )?))
    };
    let pm1 = arm(n1)?;
    let pm2 = arm(n2)?;
    Ok(EomConfig::new(si, so, pm1, pm2))
}

fn single_photon_norm(seed: u64) -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for i in 0..50 {
        let cfg = random_config(&mut rng, i % 2 == 0)?;
        let n0 = mode(rng.gen_range(20..60))?;
        let input = if rng.gen_bool(0.5) { Port::One } else { Port::Two };
        let out = single_photon_output(&cfg, input, n0, &tr, Model::Exact)?;
        checks.push(Check::new(
            format!("config {i} norm"),
            (out.total_power() - 1.0).abs(),
            1e-8,
        ));
        let n_max = suggested_lattice_size(&cfg, n0, &tr)?;
        let oracle = composition_oracle(&cfg, input, n0, n_max)?;
        checks.push(Check::new(
            format!("config {i} oracle"),
            out.max_abs_diff(&oracle),
            1e-8,
        ));
    }
    Ok(checks)
}

fn coherent_correspondence(seed: u64) -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0);
    let mut checks = Vec::new();
    for i in 0..10 {
        let cfg = random_config(&mut rng, i % 2 == 0)?;
        let n0 = mode(rng.gen_range(20..60))?;
        let alpha = C::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let single = single_photon_output(&cfg, Port::One, n0, &tr, Model::Exact)?;
        let coh = coherent_output(&cfg, Port::One, n0, alpha, &tr, Model::Exact)?;
        let worst = single
            .iter()
            .map(|(p, m, a)| (coh.port(p).get(m) - alpha * a).norm())
            .fold(0.0, f64::max);
        checks.push(Check::new(format!("config {i} entrywise"), worst, 1e-14));
        checks.push(Check::new(
            format!("config {i} energy"),
            (coh.total_power() - alpha.norm_sqr()).abs(),
            1e-10,
        ));
    }
    Ok(checks)
}

fn two_photon() -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let n0 = mode(40)?;
    let mut checks = Vec::new();
    for p in Preset::ALL {
        let (si, _) = p.splitters::<f64>();
        checks.push(Check::new(
            format!("{p} cross-arm"),
            si.cross_arm_coefficient().norm(),
            0.0,
        ));
    }
    for i in 0..=4 {
        let delta = f64::from(i) * PI / 8.0;
        let cfg = Preset::DcDual.config().with_arms(
            Arm::Tone(PmConfig::new(0.3, 0.8, 0.5, tone(3)?)?),
            Arm::Tone(PmConfig::new(0.3 + delta, 0.8, 0.5, tone(3)?)?),
        );
        let state = two_photon_output(&cfg, n0, &tr, Model::Exact)?;
        checks.push(Check::new(
            format!("Δ={delta:.4} norm"),
            (state.norm_sqr() - 1.0).abs(),
            1e-10,
        ));
        let [_, p11, _] = state.sector_probabilities();
        checks.push(Check::new(
            format!("Δ={delta:.4} P(1,1)"),
            (p11 - delta.cos().powi(2)).abs(),
            1e-10,
        ));
        if i == 0 {
            let sv = port_entanglement(&state);
            checks.push(Check::new(
                "Δ=0 second singular value",
                sv.get(1).copied().unwrap_or(0.0),
                1e-12,
            ));
        }
        if i == 4 {
            let split = state
                .iter()
                .filter(|(a, b, _)| a.port != b.port)
                .map(|(_, _, c)| c.norm())
                .fold(0.0, f64::max);
            checks.push(Check::new("Δ=π/2 split sector", split, 1e-14));
        }
    }
    Ok(checks)
}

fn multitone() -> Result<Vec<Check>> {
    let tr = Truncation::default();
    let m = 1e-3;
    let n0 = mode(60)?;
    let alpha = C::new(1.5, -0.5);
    let mut checks = Vec::new();
    let p1 = PmConfig::new(0.3, m, 0.2, tone(4)?)?;
    let p2 = PmConfig::new(-0.5, m, 1.4, tone(4)?)?;
    let exact = coherent_output(&dual(p1, p2), Port::One, n0, alpha, &tr, Model::Exact)?;
    let arm = |p: PmConfig<f64>| {
        Arm::Multitone(MultitonePmConfig {
            bias: p.bias,
            tones: vec![ToneDrive {
                index: p.index,
                rf_phase: p.rf_phase,
                tone: p.tone,
            }],
            convention: SidebandConvention::Literal,
        })
    };
    let cfg = Preset::YbDual.config().with_arms(arm(p1), arm(p2));
    let mt = multitone_coherent_output(&cfg, Port::One, n0, alpha)?;
    for p in Port::BOTH {
        for off in [-4i64, 4] {
            let md = n0.offset(off)?;
            let e = exact.port(p).get(md);
            // Literal weights carry m_k where the Bessel expansion has m/2.
            let a = mt.port(p).get(md) / 2.0;
            let rel = if e.norm() > 0.0 {
                (e - a).norm() / e.norm()
            } else {
                a.norm()
            };
            checks.push(Check::new(format!("port {} offset {off}", p.number()), rel, 1e-5));
        }
    }
    let scale = LatticeScale::default();
    let series = mean_field(&mt, Port::One, &TimeGrid::new(0.0, 1.0, 5)?, &scale, 1.0)?;
    let worst = series
        .terms
        .iter()
        .map(|t| (t.phasor - j_unit::<f64>() * mt.port1.get(t.mode) * scale.omega(t.mode).sqrt()).norm())
        .fold(0.0, f64::max);
    checks.push(Check::new("phasor table", worst, 0.0));
    Ok(checks)
}

/// Runs criteria 1 to 10; `scale` multiplies every tolerance.
pub fn run_suite(scale: f64, seed: u64) -> Vec<CriterionReport> {
    type Suite = Vec<(u8, &'static str, Box<dyn Fn() -> Result<Vec<Check>>>)>;
    let suite: Suite = vec![
        (1, "splitter laws", Box::new(splitter_laws)),
        (2, "phase-modulator unitarity", Box::new(pm_unitarity)),
        (3, "generator exponential", Box::new(generator_oracle)),
        (4, "optical limit", Box::new(optical_limit)),
        (5, "dsb parity", Box::new(dsb_parity)),
        (6, "ssb cancellation", Box::new(ssb_cancellation)),
        (
            7,
            "single-photon norm and oracle",
            Box::new(move || single_photon_norm(seed)),
        ),
        (
            8,
            "coherent correspondence",
            Box::new(move || coherent_correspondence(seed)),
        ),
        (9, "two-photon", Box::new(two_photon)),
        (10, "multitone consistency", Box::new(multitone)),
    ];
    suite
        .into_iter()
        .map(|(id, name, f)| match f() {
            Ok(checks) => CriterionReport::build(id, name, checks, scale),
            Err(e) => CriterionReport {
                id,
                name,
                passed: false,
                checks: 0,
                worst_check: format!("error: {e}"),
                worst_deviation: f64::NAN,
                worst_tolerance: f64::NAN,
            },
        })
        .collect()
}
