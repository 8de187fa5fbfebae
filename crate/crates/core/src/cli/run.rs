use super::config::{Command, Job, RunConfig};
use crate::eom::{
    coherent_output, mean_field, multitone_coherent_output, port_entanglement, single_photon_output, two_photon_output,
    TimeGrid, TwoPortSpectrum,
};
use crate::error::Result;
use crate::verify::{run_suite, CriterionReport};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub port: u8,
    pub mode: u64,
    /// `(mode − n0)` in units of the tone spacing.
    pub order: i64,
    pub re: f64,
    pub im: f64,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub command: &'static str,
    pub input_port: u8,
    pub n0: u64,
    pub rows: Vec<SpectrumRow>,
    pub total_power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairRow {
    pub port_a: u8,
    pub mode_a: u64,
    pub port_b: u8,
    pub mode_b: u64,
    pub re: f64,
    pub im: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sectors {
    pub both_port1: f64,
    pub one_each: f64,
    pub both_port2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoPhotonReport {
    pub command: &'static str,
    pub n0: u64,
    pub pairs: Vec<PairRow>,
    pub norm: f64,
    pub sectors: Sectors,
    pub singular_values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleRow {
    pub t: f64,
    pub field: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhasorRow {
    pub mode: u64,
    pub omega: f64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeanFieldReport {
    pub command: &'static str,
    pub port: u8,
    pub n0: u64,
    pub samples: Vec<SampleRow>,
    pub phasors: Vec<PhasorRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub seed: u64,
    pub tolerance_scale: f64,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Spectrum(SpectrumReport),
    TwoPhoton(TwoPhotonReport),
    MeanField(MeanFieldReport),
    Verify(VerifyReport),
}

impl Outcome {
    /// False only for a verify run with a failing criterion.
    pub fn succeeded(&self) -> bool {
        match self {
            Outcome::Verify(v) => v.passed,
            _ => true,
        }
    }
}

/// Exact cancellations are left out of the tables.
fn is_zero(a: num_complex::Complex<f64>) -> bool {
    a.re == 0.0 && a.im == 0.0
}

fn spectrum_rows(job: &Job, out: &TwoPortSpectrum<f64>) -> Vec<SpectrumRow> {
    let unit = i128::from(job.order_unit());
    let n0 = i128::from(job.n0.get());
    out.iter()
        .filter(|(_, _, a)| !is_zero(*a))
        .map(|(p, m, a)| SpectrumRow {
            port: p.number(),
            mode: m.get(),
            order: ((i128::from(m.get()) - n0) / unit) as i64,
            re: a.re,
            im: a.im,
            power: a.norm_sqr(),
        })
        .collect()
}

fn displacements(job: &Job) -> Result<TwoPortSpectrum<f64>> {
    if job.has_multitone() {
        multitone_coherent_output(&job.eom, job.input, job.n0, job.alpha)
    } else {
        coherent_output(&job.eom, job.input, job.n0, job.alpha, &job.truncation, job.model)
    }
}

fn run_job(command: Command, job: &Job) -> Result<Outcome> {
    match command {
        Command::Spectrum | Command::Coherent => {
            let out = if command == Command::Spectrum {
                single_photon_output(&job.eom, job.input, job.n0, &job.truncation, job.model)?
            } else {
                displacements(job)?
            };
            Ok(Outcome::Spectrum(SpectrumReport {
                command: command.name(),
                input_port: job.input.number(),
                n0: job.n0.get(),
                rows: spectrum_rows(job, &out),
                total_power: out.total_power(),
            }))
        }
        Command::TwoPhoton => {
            let state = two_photon_output(&job.eom, job.n0, &job.truncation, job.model)?;
            let pairs = state
                .iter()
                .filter(|(_, _, c)| !is_zero(*c))
                .map(|(a, b, c)| PairRow {
                    port_a: a.port.number(),
                    mode_a: a.mode.get(),
                    port_b: b.port.number(),
                    mode_b: b.mode.get(),
                    re: c.re,
                    im: c.im,
                    probability: crate::eom::TwoPhotonState::pair_probability(a, b, c),
                })
                .collect();
            let [p20, p11, p02] = state.sector_probabilities();
            Ok(Outcome::TwoPhoton(TwoPhotonReport {
                command: command.name(),
                n0: job.n0.get(),
                pairs,
                norm: state.norm_sqr(),
                sectors: Sectors {
                    both_port1: p20,
                    one_each: p11,
                    both_port2: p02,
                },
                singular_values: port_entanglement(&state),
            }))
        }
        Command::MeanField => {
            let settings = job
                .mean_field
                .as_ref()
                .expect("mean-field jobs carry settings after parsing");
            let out = displacements(job)?;
            let grid = TimeGrid::new(settings.start, settings.end, settings.samples)?;
            let series = mean_field(&out, settings.port, &grid, &settings.scale, settings.field_scale)?;
            Ok(Outcome::MeanField(MeanFieldReport {
                command: command.name(),
                port: settings.port.number(),
                n0: job.n0.get(),
                samples: series
                    .samples
                    .iter()
                    .map(|&(t, field)| SampleRow { t, field })
                    .collect(),
                phasors: series
                    .terms
                    .iter()
                    .map(|p| PhasorRow {
                        mode: p.mode.get(),
                        omega: p.omega,
                        re: p.phasor.re,
                        im: p.phasor.im,
                    })
                    .collect(),
            }))
        }
        Command::Verify => unreachable!("verify has no jobs"),
    }
}

/// Evaluates every point in order.
pub fn run(cfg: &RunConfig) -> Result<Vec<Outcome>> {
    if cfg.command == Command::Verify {
        let criteria = run_suite(cfg.verify.tolerance_scale, cfg.verify.seed);
        return Ok(vec![Outcome::Verify(VerifyReport {
            command: Command::Verify.name(),
            seed: cfg.verify.seed,
            tolerance_scale: cfg.verify.tolerance_scale,
            passed: criteria.iter().all(|c| c.passed),
            criteria,
        })]);
    }
    cfg.points.iter().map(|job| run_job(cfg.command, job)).collect()
}
