use super::*;
use crate::lattice::{LatticeScale, RfTone};
use crate::phase_modulator::{SidebandConvention, ToneDrive};
use crate::scalar::cis;
use crate::splitters::{splitter_coeffs, SplitterSpec};
use proptest::prelude::*;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

type C = Complex<f64>;

fn mode(n: i64) -> ModeIndex {
    ModeIndex::new(n).unwrap()
}

fn tone(n: i64) -> RfTone {
    RfTone::new(n).unwrap()
}

fn pm(bias: f64, m: f64, theta: f64, n: i64) -> Arm<f64> {
    Arm::Tone(PmConfig::new(bias, m, theta, tone(n)).unwrap())
}

fn row(arm: &Arm<f64>, n0: ModeIndex, model: Model) -> PortSpectrum<f64> {
    arm.row(n0, &Truncation::default(), model).unwrap()
}

fn out(cfg: &EomConfig<f64>, input: Port, n0: ModeIndex, model: Model) -> TwoPortSpectrum<f64> {
    single_photon_output(cfg, input, n0, &Truncation::default(), model).unwrap()
}

fn oracle(cfg: &EomConfig<f64>, input: Port, n0: ModeIndex) -> TwoPortSpectrum<f64> {
    let n_max = suggested_lattice_size(cfg, n0, &Truncation::default()).unwrap();
    composition_oracle(cfg, input, n0, n_max).unwrap()
}

#[test]
fn port_numbers() {
    assert_eq!(Port::new(1).unwrap(), Port::One);
    assert_eq!(Port::new(2).unwrap().index(), 1);
    assert_eq!(Port::new(3), Err(Error::InvalidPort(3)));
    assert_eq!(serde_json::to_string(&Port::Two).unwrap(), "2");
    assert!(serde_json::from_str::<Port>("0").is_err());
}

#[test]
fn idle_yb_dual_is_transparent() {
    let cfg = Preset::YbDual.config::<f64>();
    let n0 = mode(40);
    let o = out(&cfg, Port::One, n0, Model::Exact);
    assert!((o.port1.get(n0) - C::new(1.0, 0.0)).norm() < 1e-15);
    assert!(o.port2.power() < 1e-30);
    assert!(o.port1.power() - 1.0 < 1e-15);
}

#[test]
fn preset_coefficients() {
    let (i, o) = Preset::YbDual.splitters::<f64>();
    let h = FRAC_1_SQRT_2;
    assert_eq!(i.r_prime, C::new(h, 0.0));
    assert_eq!(i.r, C::new(-h, 0.0));
    assert_eq!(o.r, C::new(h, 0.0));
    assert_eq!(o.r_prime, C::new(-h, 0.0));
    let (i, o) = Preset::DcDual.splitters::<f64>();
    assert_eq!(i, o);
    assert_eq!(i.r, C::new(0.0, h));
    let (i, o) = Preset::HybridSingle.splitters::<f64>();
    assert_eq!(i, Preset::YbDual.splitters::<f64>().0);
    assert_eq!(o, Preset::DcDual.splitters::<f64>().1);
    assert!(Preset::YbSingle.config::<f64>().pm2.is_identity());
    assert!(!Preset::DcDual.config::<f64>().pm2.is_identity());
    for p in Preset::ALL {
        assert_eq!(p.name().parse::<Preset>().unwrap(), p);
    }
    assert!(matches!("mzm".parse::<Preset>(), Err(Error::UnknownPreset(_))));
}

#[test]
fn equal_tone_weights_match_closed_form() {
    // Input port 1: t′_i t′_o C + r′_i r_o C̄ and t′_i r′_o C + r′_i t_o C̄.
    // Input port 2: r_i t′_o C + t_i r_o C̄ and r_i r′_o C + t_i t_o C̄.
    let si = splitter_coeffs(&SplitterSpec::Dc { k: 0.3 }).unwrap();
    let so = splitter_coeffs(&SplitterSpec::Bulk { theta: 0.7 }).unwrap();
    let cfg = EomConfig::new(si, so, pm(0.2, 0.9, 0.4, 3), pm(-1.0, 0.9, 2.0, 3));
    let n0 = mode(35);
    let c = row(&cfg.pm1, n0, Model::Exact);
    let cb = row(&cfg.pm2, n0, Model::Exact);
    let o1 = out(&cfg, Port::One, n0, Model::Exact);
    let o2 = out(&cfg, Port::Two, n0, Model::Exact);
    for m in c.modes() {
        let (cq, cbq) = (c.get(m), cb.get(m));
        let want = [
            si.t_prime * so.t_prime * cq + si.r_prime * so.r * cbq,
            si.t_prime * so.r_prime * cq + si.r_prime * so.t * cbq,
            si.r * so.t_prime * cq + si.t * so.r * cbq,
            si.r * so.r_prime * cq + si.t * so.t * cbq,
        ];
        let got = [o1.port1.get(m), o1.port2.get(m), o2.port1.get(m), o2.port2.get(m)];
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).norm() < 1e-15);
        }
    }
}

#[test]
fn yb_dual_equal_tones_half_sum_and_difference() {
    let cfg = Preset::YbDual
        .config::<f64>()
        .with_arms(pm(0.3, 1.2, 0.1, 2), pm(-0.4, 1.2, 1.9, 2));
    let n0 = mode(50);
    let c = row(&cfg.pm1, n0, Model::Exact);
    let cb = row(&cfg.pm2, n0, Model::Exact);
    let o = out(&cfg, Port::One, n0, Model::Exact);
    for m in c.modes() {
        assert!((o.port1.get(m) - (c.get(m) + cb.get(m)) / 2.0).norm() < 1e-15);
        assert!((o.port2.get(m) - (-c.get(m) + cb.get(m)) / 2.0).norm() < 1e-15);
    }
}

#[test]
fn hybrid_weights() {
    let cfg = Preset::HybridDual
        .config::<f64>()
        .with_arms(pm(0.5, 0.8, 0.0, 3), pm(0.1, 0.8, 1.0, 3));
    let n0 = mode(61);
    let c = row(&cfg.pm1, n0, Model::Exact);
    let cb = row(&cfg.pm2, n0, Model::Exact);
    let o = out(&cfg, Port::One, n0, Model::Exact);
    let j = C::new(0.0, 1.0);
    for m in c.modes() {
        assert!((o.port1.get(m) - (c.get(m) + j * cb.get(m)) / 2.0).norm() < 1e-15);
        assert!((o.port2.get(m) - (j * c.get(m) + cb.get(m)) / 2.0).norm() < 1e-15);
    }
}

#[test]
fn dsb_real_and_imaginary_parts() {
    let (p1, p2) = dsb_settings(0.7, tone(3)).unwrap();
    let cfg = Preset::YbDual.config::<f64>().with_arms(Arm::Tone(p1), Arm::Tone(p2));
    let n0 = mode(100);
    let dec = crate::lattice::decompose_mode(n0, tone(3));
    let c = row(&cfg.pm1, n0, Model::Exact);
    let o = out(&cfg, Port::One, n0, Model::Exact);
    for m in c.modes() {
        let cq = c.get(m);
        assert!((o.port1.get(m) - C::new(cq.re, 0.0)).norm() < 1e-15);
        assert!((o.port2.get(m) - C::new(0.0, -cq.im)).norm() < 1e-15);
    }
    for model in [Model::Exact, Model::Optical] {
        let o = out(&cfg, Port::One, n0, model);
        for (m, a) in o.port1.iter() {
            let s = (m.get() as i64 + dec.r0) / 3 - dec.q0;
            if s % 2 == 0 {
                assert!(a.norm() < 1e-14, "order {s}: {a}");
            }
        }
    }
}

#[test]
fn ssb_cancels_one_sideband() {
    let n0 = mode(100);
    let big_n = 3;
    for (side, gone, kept) in [(SsbSide::Lower, -big_n, big_n), (SsbSide::Upper, big_n, -big_n)] {
        let (p1, p2) = ssb_settings(0.6, tone(big_n), side).unwrap();
        let cfg = Preset::YbDual.config::<f64>().with_arms(Arm::Tone(p1), Arm::Tone(p2));
        for model in [Model::Optical, Model::Exact] {
            let o = out(&cfg, Port::One, n0, model);
            assert!(o.port1.get(n0.offset(gone).unwrap()).norm() < 1e-14);
            assert!(o.port1.get(n0.offset(kept).unwrap()).norm() > 0.1);
        }
    }
}

#[test]
fn single_drive_limits() {
    let n0 = mode(20);
    let tr = Truncation::default();
    let cfg = Preset::YbSingle.config::<f64>();
    let o = single_drive_output(&cfg, n0, &tr, Model::Exact).unwrap();
    assert!((o.port1.get(n0) - C::new(1.0, 0.0)).norm() < 1e-15);
    assert!(o.port2.power() < 1e-30);

    let cfg = cfg.with_arms(pm(PI, 0.0, 0.0, 1), Arm::Identity);
    let o = single_drive_output(&cfg, n0, &tr, Model::Exact).unwrap();
    assert!(o.port1.power() < 1e-30);
    assert!((o.port2.get(n0) - C::new(1.0, 0.0)).norm() < 1e-15);

    let dual = Preset::YbDual.config::<f64>();
    assert!(single_drive_output(&dual, n0, &tr, Model::Exact).is_err());
}

#[test]
fn single_drive_half_weights() {
    let cfg = Preset::YbSingle
        .config::<f64>()
        .with_arms(pm(0.4, 1.5, 0.3, 4), Arm::Identity);
    let n0 = mode(77);
    let c = row(&cfg.pm1, n0, Model::Exact);
    let o = single_drive_output(&cfg, n0, &Truncation::default(), Model::Exact).unwrap();
    for m in c.modes() {
        let one = if m == n0 { C::new(1.0, 0.0) } else { C::new(0.0, 0.0) };
        assert!((o.port1.get(m) - (c.get(m) + one) / 2.0).norm() < 1e-15);
        assert!((o.port2.get(m) - (-c.get(m) + one) / 2.0).norm() < 1e-15);
    }
}

#[test]
fn presets_match_oracle() {
    let n0 = mode(30);
    for p in Preset::ALL {
        let pm2 = if p.is_dual() {
            pm(-0.6, 1.1, 2.2, 3)
        } else {
            Arm::Identity
        };
        let cfg = p.config::<f64>().with_arms(pm(0.3, 1.1, 0.5, 3), pm2);
        for input in Port::BOTH {
            let closed = out(&cfg, input, n0, Model::Exact);
            let brute = oracle(&cfg, input, n0);
            let diff = closed.max_abs_diff(&brute);
            assert!(diff < 1e-8, "{p} input {input:?}: {diff}");
            assert!((brute.total_power() - 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn oracle_with_identity_arms_is_interferometer() {
    let si = splitter_coeffs(&SplitterSpec::Bulk { theta: 1.0 }).unwrap();
    let so = splitter_coeffs(&SplitterSpec::Yb { k: 0.2 }).unwrap();
    let cfg = EomConfig::new(si, so, Arm::Identity, Arm::Identity);
    let n0 = mode(5);
    let got = composition_oracle(&cfg, Port::Two, n0, 8).unwrap();
    let w = cfg.path_weights(Port::Two);
    assert!((got.port1.get(n0) - (w[0][0] + w[0][1])).norm() < 1e-15);
    assert!((got.port2.get(n0) - (w[1][0] + w[1][1])).norm() < 1e-15);
    assert_eq!(got.port1.len(), 1);
}

#[test]
fn oracle_rejects_small_lattice_and_multitone() {
    let cfg = Preset::YbDual.config::<f64>();
    assert!(composition_oracle(&cfg, Port::One, mode(10), 5).is_err());
    let mt = MultitonePmConfig {
        bias: 0.0,
        tones: vec![],
        convention: SidebandConvention::Literal,
    };
    let cfg = cfg.with_arms(Arm::Multitone(mt), Arm::Identity);
    assert!(matches!(
        composition_oracle(&cfg, Port::One, mode(10), 20),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn distinct_tones_union_ladder() {
    let cfg = Preset::DcDual
        .config::<f64>()
        .with_arms(pm(0.1, 0.9, 0.0, 2), pm(0.7, 0.9, 0.3, 5));
    let n0 = mode(41);
    let o = out(&cfg, Port::One, n0, Model::Exact);
    let b = row(&cfg.pm1, n0, Model::Exact);
    let c = row(&cfg.pm2, n0, Model::Exact);
    let union: std::collections::BTreeSet<_> = b.modes().chain(c.modes()).collect();
    let support: std::collections::BTreeSet<_> = o.port1.modes().chain(o.port2.modes()).collect();
    assert_eq!(support, union);
    assert!((o.total_power() - 1.0).abs() < 1e-10);
    assert!(o.max_abs_diff(&oracle(&cfg, Port::One, n0)) < 1e-8);
}

#[test]
fn coherent_is_alpha_times_single() {
    let cfg = Preset::HybridDual
        .config::<f64>()
        .with_arms(pm(0.3, 1.4, 0.2, 3), pm(1.3, 0.4, 0.9, 3));
    let n0 = mode(25);
    let tr = Truncation::default();
    let alpha = C::new(0.8, -1.7);
    let single = out(&cfg, Port::Two, n0, Model::Exact);
    let coh = coherent_output(&cfg, Port::Two, n0, alpha, &tr, Model::Exact).unwrap();
    for (p, m, a) in single.iter() {
        assert!((coh.port(p).get(m) - alpha * a).norm() <= 1e-14);
    }
    assert!((coh.total_power() - alpha.norm_sqr()).abs() < 1e-10);
    let vac = coherent_output(&cfg, Port::Two, n0, C::new(0.0, 0.0), &tr, Model::Exact).unwrap();
    assert!(vac.iter().all(|(_, _, a)| a.norm() == 0.0));
}

#[test]
fn balanced_input_suppresses_cross_arm_terms() {
    for p in Preset::ALL {
        let (si, _) = p.splitters::<f64>();
        assert!(si.cross_arm_coefficient().norm() < 1e-16, "{p}");
    }
}

fn dc_equal_arms(delta: f64) -> EomConfig<f64> {
    Preset::DcDual
        .config::<f64>()
        .with_arms(pm(0.2, 0.9, 0.4, 3), pm(0.2 + delta, 0.9, 0.4, 3))
}

#[test]
fn two_photon_matches_closed_form() {
    let n0 = mode(40);
    let tr = Truncation::default();
    for i in 0..=4 {
        let delta = i as f64 * PI / 8.0;
        let cfg = dc_equal_arms(delta);
        let state = two_photon_output(&cfg, n0, &tr, Model::Exact).unwrap();
        let b = row(&cfg.pm1, n0, Model::Exact);
        let closed = two_photon_dc_closed_form(delta, &b);
        assert!(state.max_abs_diff(&closed) < 1e-10, "Δ={delta}");
        assert!((state.norm_sqr() - 1.0).abs() < 1e-10);
        let [p20, p11, p02] = state.sector_probabilities();
        assert!((p11 - delta.cos().powi(2)).abs() < 1e-10);
        assert!((p20 - delta.sin().powi(2) / 2.0).abs() < 1e-10);
        assert!((p02 - p20).abs() < 1e-10);
        let sv = port_entanglement(&state);
        let total: f64 = sv.iter().map(|s| s * s).sum();
        assert!((total - 1.0).abs() < 1e-10);
    }
}

#[test]
fn two_photon_product_and_entangled_limits() {
    let n0 = mode(40);
    let tr = Truncation::default();
    let product = two_photon_output(&dc_equal_arms(0.0), n0, &tr, Model::Exact).unwrap();
    let sv = port_entanglement(&product);
    assert!((sv[0] - 1.0).abs() < 1e-10);
    assert!(sv[1] < 1e-12);

    let ent = two_photon_output(&dc_equal_arms(FRAC_PI_2), n0, &tr, Model::Exact).unwrap();
    let split: f64 = ent
        .iter()
        .filter(|(a, b, _)| a.port != b.port)
        .map(|(_, _, c)| c.norm())
        .fold(0.0, f64::max);
    assert!(split < 1e-14);
    let sv = port_entanglement(&ent);
    assert!((sv[0] - FRAC_1_SQRT_2).abs() < 1e-10);
    assert!((sv[1] - FRAC_1_SQRT_2).abs() < 1e-10);
    assert!(sv[2..].iter().all(|s| *s < 1e-12));
}

#[test]
fn closed_form_sector_probabilities() {
    let b: PortSpectrum<f64> = PortSpectrum::single(mode(7), C::new(1.0, 0.0));
    let s = two_photon_dc_closed_form(0.0, &b);
    assert_eq!(s.sector_probabilities(), [0.0, 1.0, 0.0]);
    let s = two_photon_dc_closed_form(FRAC_PI_2, &b);
    let [p20, p11, p02] = s.sector_probabilities();
    assert!((p20 - 0.5).abs() < 1e-15 && p11 < 1e-30 && (p02 - 0.5).abs() < 1e-15);
}

#[test]
fn pair_symmetry_and_double_occupancy() {
    let a = Slot::new(Port::One, mode(3));
    let b = Slot::new(Port::Two, mode(5));
    let mut s = TwoPhotonState::<f64>::new();
    s.add(b, a, C::new(0.5, 0.0));
    assert_eq!(s.get(a, b), s.get(b, a));
    s.add(a, a, C::new(0.5, 0.0));
    assert!((s.norm_sqr() - 0.75).abs() < 1e-16);
}

#[test]
fn product_state_single_mode() {
    let mut s = TwoPhotonState::<f64>::new();
    s.add(
        Slot::new(Port::One, mode(4)),
        Slot::new(Port::Two, mode(4)),
        C::new(1.0, 0.0),
    );
    assert_eq!(port_entanglement(&s), vec![1.0, 0.0, 0.0]);
}

fn multitone(bias: f64, drives: &[(f64, f64, i64)], convention: SidebandConvention) -> Arm<f64> {
    Arm::Multitone(MultitonePmConfig {
        bias,
        tones: drives
            .iter()
            .map(|&(index, rf_phase, n)| ToneDrive {
                index,
                rf_phase,
                tone: tone(n),
            })
            .collect(),
        convention,
    })
}

#[test]
fn multitone_without_tones_is_bias_only() {
    let n0 = mode(30);
    let alpha = C::new(1.2, 0.3);
    let lit = SidebandConvention::Literal;
    let cfg = Preset::YbDual
        .config::<f64>()
        .with_arms(multitone(0.4, &[], lit), multitone(-1.1, &[], lit));
    let got = multitone_coherent_output(&cfg, Port::One, n0, alpha).unwrap();
    let reference = Preset::YbDual
        .config::<f64>()
        .with_arms(pm(0.4, 0.0, 0.0, 1), pm(-1.1, 0.0, 0.0, 1));
    let want = coherent_output(&reference, Port::One, n0, alpha, &Truncation::default(), Model::Exact).unwrap();
    assert!(got.max_abs_diff(&want) < 1e-14);
}

#[test]
fn multitone_line_count_and_tone_arm_rejection() {
    let lit = SidebandConvention::Literal;
    let drives = [(0.01, 0.0, 3), (0.02, 0.5, 7)];
    let cfg = Preset::YbDual
        .config::<f64>()
        .with_arms(multitone(FRAC_PI_4, &drives, lit), multitone(-FRAC_PI_4, &drives, lit));
    let o = multitone_coherent_output(&cfg, Port::One, mode(50), C::new(1.0, 0.0)).unwrap();
    assert_eq!(o.port1.len(), 5);
    let bad = cfg.with_arms(pm(0.0, 0.1, 0.0, 3), Arm::Identity);
    assert!(multitone_coherent_output(&bad, Port::One, mode(50), C::new(1.0, 0.0)).is_err());
}

#[test]
fn multitone_first_order_matches_bessel() {
    let m = 1e-3;
    let n0 = mode(60);
    let alpha = C::new(0.7, 0.2);
    let exact_cfg = Preset::YbDual
        .config::<f64>()
        .with_arms(pm(0.3, m, 0.2, 4), pm(-0.5, m, 1.4, 4));
    let exact = coherent_output(&exact_cfg, Port::One, n0, alpha, &Truncation::default(), Model::Exact).unwrap();
    let bessel = SidebandConvention::Bessel;
    let mt_cfg = Preset::YbDual.config::<f64>().with_arms(
        multitone(0.3, &[(m, 0.2, 4)], bessel),
        multitone(-0.5, &[(m, 1.4, 4)], bessel),
    );
    let mt = multitone_coherent_output(&mt_cfg, Port::One, n0, alpha).unwrap();
    for p in Port::BOTH {
        for off in [-4, 4] {
            let md = n0.offset(off).unwrap();
            let (e, a) = (exact.port(p).get(md), mt.port(p).get(md));
            assert!((e - a).norm() <= 1e-5 * e.norm(), "{p:?} {off}: {e} vs {a}");
        }
    }
}

#[test]
fn mean_field_single_carrier() {
    let a = C::new(0.3, -0.4);
    let n0 = mode(5);
    let spectrum = TwoPortSpectrum {
        port1: PortSpectrum::single(n0, a),
        port2: PortSpectrum::new(),
    };
    let grid = TimeGrid::new(0.0, 2.0, 21).unwrap();
    let scale = LatticeScale::default();
    let series = mean_field(&spectrum, Port::One, &grid, &scale, 1.0 / 5f64.sqrt()).unwrap();
    assert_eq!(series.terms.len(), 1);
    assert_eq!(series.samples.len(), 21);
    for &(t, e) in &series.samples {
        let want = 2.0 * a.norm() * (5.0 * t - a.arg()).sin();
        assert!((e - want).abs() < 1e-12, "t={t}: {e} vs {want}");
    }
    let empty = mean_field(&spectrum, Port::Two, &grid, &scale, 1.0).unwrap();
    assert!(empty.samples.iter().all(|&(_, e)| e == 0.0));
}

#[test]
fn mean_field_phasors_are_j_xi_times_displacement() {
    let lit = SidebandConvention::Literal;
    let cfg = Preset::YbDual.config::<f64>().with_arms(
        multitone(FRAC_PI_2, &[(0.01, 0.0, 3)], lit),
        multitone(-FRAC_PI_2, &[(0.01, PI, 3)], lit),
    );
    let o = multitone_coherent_output(&cfg, Port::One, mode(40), C::new(2.0, 0.0)).unwrap();
    let scale = LatticeScale::new(3.0, 2.0).unwrap();
    let series = mean_field(&o, Port::One, &TimeGrid::new(0.0, 1.0, 3).unwrap(), &scale, 0.5).unwrap();
    for term in &series.terms {
        let xi = 0.5 * scale.omega(term.mode).sqrt();
        assert_eq!(term.phasor, C::new(0.0, 1.0) * o.port1.get(term.mode) * xi);
    }
    for &(t, e) in &series.samples {
        let direct: f64 = o
            .port1
            .iter()
            .map(|(m, a)| {
                let w = scale.omega(m);
                2.0 * (C::new(0.0, 1.0) * 0.5 * w.sqrt() * a * cis(-w * t)).re
            })
            .sum();
        assert!((e - direct).abs() < 1e-12);
    }
}

#[test]
fn time_grid_validation() {
    assert!(TimeGrid::new(0.0, 1.0, 0).is_err());
    assert!(TimeGrid::new(f64::NAN, 1.0, 3).is_err());
    let g = TimeGrid::new(1.0, 1.0, 1).unwrap();
    assert_eq!(g.times().collect::<Vec<_>>(), vec![1.0]);
}

fn spec_strategy() -> impl Strategy<Value = SplitterSpec<f64>> {
    prop_oneof![
        (0.0..PI).prop_map(|theta| SplitterSpec::Bulk { theta }),
        (0.0..=1.0f64).prop_map(|k| SplitterSpec::Dc { k }),
        (0.0..=1.0f64).prop_map(|k| SplitterSpec::Yb { k }),
    ]
}

fn arm_strategy() -> impl Strategy<Value = Arm<f64>> {
    prop_oneof![
        1 => Just(Arm::Identity),
        4 => (-PI..PI, 0.0..2.0f64, -PI..PI, 1i64..5).prop_map(|(b, m, th, n)| pm(b, m, th, n)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_configs_conserve_norm_and_match_oracle(
        si in spec_strategy(),
        so in spec_strategy(),
        a1 in arm_strategy(),
        a2 in arm_strategy(),
        n0 in 20i64..45,
        second in any::<bool>(),
    ) {
        let cfg = EomConfig::new(
            splitter_coeffs(&si).unwrap(),
            splitter_coeffs(&so).unwrap(),
            a1,
            a2,
        );
        let input = if second { Port::Two } else { Port::One };
        let n0 = mode(n0);
        let closed = out(&cfg, input, n0, Model::Exact);
        prop_assert!((closed.total_power() - 1.0).abs() < 1e-8);
        prop_assert!(closed.max_abs_diff(&oracle(&cfg, input, n0)) < 1e-8);
    }
}
