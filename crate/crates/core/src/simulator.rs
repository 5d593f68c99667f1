//! Monte-Carlo estimation of the observed failure rate.
//!
//! Each trial draws a uniformly random message, then a uniformly random error
//! of exact Hamming weight `tau`, and decodes. Trial `i` uses its own ChaCha8
//! stream (seed `seed`, stream `i`), so reports do not depend on how trials
//! are scheduled across threads.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ag_code::CodeSpec;
use crate::finite_field::{FieldElement, FieldSpec};
use crate::function_field::Curve;
use crate::power_decoder::{radius_exact, DecodeError, DecodeOutcome, DecoderParams, PowerDecoder};

#[derive(Debug, Error)]
pub enum SimError {
    #[error("error weight {tau} exceeds code length {n}")]
    TauTooLarge { tau: usize, n: usize },
    #[error("at least one trial is required")]
    NoTrials,
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error("writing report: {0}")]
    Io(#[from] std::io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialPlan {
    pub params: DecoderParams,
    pub tau: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialResult {
    Success,
    Failure,
    Miscorrection,
}

#[derive(Clone, Debug)]
pub struct SimReport {
    pub curve: String,
    pub q: u32,
    pub field: String,
    pub gamma: u32,
    pub n: usize,
    pub k: usize,
    pub dstar: usize,
    pub ell: u32,
    pub s: u32,
    pub tau: usize,
    pub tau_max_exact: Option<u32>,
    pub trials: usize,
    pub successes: usize,
    pub failures: usize,
    pub miscorrections: usize,
    pub wall_time: Duration,
}

impl SimReport {
    /// `(failures + miscorrections, trials)`.
    pub fn ofr_fraction(&self) -> (usize, usize) {
        (self.failures + self.miscorrections, self.trials)
    }

    pub fn ofr(&self) -> f64 {
        let (num, den) = self.ofr_fraction();
        num as f64 / den as f64
    }

    fn csv_row(&self) -> CsvRow<'_> {
        CsvRow {
            curve: &self.curve,
            q: self.q,
            gamma: self.gamma,
            n: self.n,
            k: self.k,
            dstar: self.dstar,
            ell: self.ell,
            s: self.s,
            tau: self.tau,
            tau_max_exact: self.tau_max_exact.map_or(String::from("none"), |t| t.to_string()),
            trials: self.trials,
            successes: self.successes,
            failures: self.failures,
            miscorrections: self.miscorrections,
            ofr: format!("{:.4}", self.ofr()),
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    curve: &'a str,
    q: u32,
    gamma: u32,
    n: usize,
    k: usize,
    dstar: usize,
    ell: u32,
    s: u32,
    tau: usize,
    tau_max_exact: String,
    trials: usize,
    successes: usize,
    failures: usize,
    miscorrections: usize,
    ofr: String,
}

/// Per-trial generator: ChaCha8 keyed by `seed`, stream `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform error of Hamming weight exactly `tau`: support by a partial
/// Fisher–Yates shuffle, values uniform over the nonzero elements.
pub fn sample_error<R: Rng>(field: &FieldSpec, n: usize, tau: usize, rng: &mut R) -> Vec<FieldElement> {
    assert!(tau <= n, "error weight exceeds length");
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..tau {
        let j = rng.random_range(i..n);
        idx.swap(i, j);
    }
    let mut e = vec![FieldElement::ZERO; n];
    for &i in &idx[..tau] {
        let v = rng.random_range(1..field.order() as u64);
        e[i] = field.elem(v).expect("in range");
    }
    e
}

pub fn random_message<R: Rng>(field: &FieldSpec, k: usize, rng: &mut R) -> Vec<FieldElement> {
    (0..k).map(|_| field.elem(rng.random_range(0..field.order() as u64)).expect("in range")).collect()
}

fn run_one(code: &CodeSpec, dec: &PowerDecoder<'_>, plan: &TrialPlan, index: u64) -> Result<TrialResult, DecodeError> {
    let field = code.backend().field();
    let mut rng = trial_rng(plan.seed, index);
    let msg = random_message(field, code.k(), &mut rng);
    let e = sample_error(field, code.n(), plan.tau, &mut rng);
    let c = code.encode(&msg).expect("k symbols");
    let r: Vec<_> = c.iter().zip(&e).map(|(&a, &b)| field.add(a, b)).collect();
    Ok(match dec.decode(&r)? {
        DecodeOutcome::Success(d) if d.coords == msg => TrialResult::Success,
        DecodeOutcome::Success(_) => TrialResult::Miscorrection,
        DecodeOutcome::Failure(_) => TrialResult::Failure,
    })
}

pub fn run_trials(code: &CodeSpec, plan: &TrialPlan) -> Result<SimReport, SimError> {
    if plan.tau > code.n() {
        return Err(SimError::TauTooLarge { tau: plan.tau, n: code.n() });
    }
    if plan.trials == 0 {
        return Err(SimError::NoTrials);
    }
    let start = Instant::now();
    let dec = PowerDecoder::new(code, plan.params)?;
    let results =
        (0..plan.trials as u64).into_par_iter().map(|i| run_one(code, &dec, plan, i)).collect::<Result<Vec<_>, _>>()?;
    let count = |want| results.iter().filter(|&&r| r == want).count();

    let field = code.backend().field();
    let (curve, q) = match code.backend().curve() {
        Curve::Rational => ("rational", field.order()),
        Curve::Hermitian { q } => ("hermitian", q),
    };
    Ok(SimReport {
        curve: curve.into(),
        q,
        field: format!("{}^{}", field.characteristic(), field.degree()),
        gamma: code.gamma(),
        n: code.n(),
        k: code.k(),
        dstar: code.dstar(),
        ell: plan.params.ell,
        s: plan.params.s,
        tau: plan.tau,
        tau_max_exact: radius_exact(code, plan.params.ell, plan.params.s),
        trials: plan.trials,
        successes: count(TrialResult::Success),
        failures: count(TrialResult::Failure),
        miscorrections: count(TrialResult::Miscorrection),
        wall_time: start.elapsed(),
    })
}

/// CSV with a header row and one row per report.
pub fn write_csv<W: Write>(reports: &[SimReport], out: W) -> Result<(), SimError> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        w.serialize(r.csv_row())?;
    }
    w.flush()?;
    Ok(())
}

/// Markdown table in the usual simulation-results layout.
pub fn write_markdown<W: Write>(reports: &[SimReport], mut out: W) -> Result<(), SimError> {
    writeln!(out, "| Curve | \\|F\\| | gamma | n | k | d* | ell | s | tau | OFR | N | fail | miscorr |")?;
    writeln!(out, "|---|---|---|---|---|---|---|---|---|---|---|---|---|")?;
    for r in reports {
        let curve = match r.curve.as_str() {
            "hermitian" => format!("H_{}", r.q),
            _ => "RS".to_string(),
        };
        let mark = if r.tau_max_exact == Some(r.tau as u32) { "+" } else { "" };
        writeln!(
            out,
            "| {curve} | {} | {} | {} | {} | {} | {} | {} | {}{mark} | {:.2} | {} | {} | {} |",
            r.field,
            r.gamma,
            r.n,
            r.k,
            r.dstar,
            r.ell,
            r.s,
            r.tau,
            r.ofr(),
            r.trials,
            r.failures,
            r.miscorrections
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ag_code::PlaceSelection;
    use crate::function_field::Backend;

    #[test]
    fn error_weights_are_exact() {
        let f = FieldSpec::new(2, 3).unwrap();
        let mut rng = trial_rng(7, 0);
        assert!(sample_error(&f, 8, 0, &mut rng).iter().all(|e| e.is_zero()));
        assert!(sample_error(&f, 8, 8, &mut rng).iter().all(|e| !e.is_zero()));
        for tau in 0..=8 {
            let e = sample_error(&f, 8, tau, &mut rng);
            assert_eq!(e.iter().filter(|x| !x.is_zero()).count(), tau);
        }
    }

    #[test]
    fn support_is_uniform() {
        let f = FieldSpec::new(2, 3).unwrap();
        let mut rng = trial_rng(11, 0);
        let draws = 10_000;
        let mut hits = [0usize; 8];
        for _ in 0..draws {
            for (i, e) in sample_error(&f, 8, 3, &mut rng).iter().enumerate() {
                if !e.is_zero() {
                    hits[i] += 1;
                }
            }
        }
        for h in hits {
            let freq = h as f64 / draws as f64;
            assert!((freq - 3.0 / 8.0).abs() < 0.02, "frequency {freq}");
        }
    }

    #[test]
    fn trial_streams_differ_and_repeat() {
        let a: u64 = trial_rng(5, 1).random();
        let b: u64 = trial_rng(5, 2).random();
        assert_ne!(a, b);
        assert_eq!(a, trial_rng(5, 1).random::<u64>());
    }

    #[test]
    fn zero_errors_always_succeed() {
        let code = CodeSpec::new(Backend::hermitian(2).unwrap(), PlaceSelection::All, 3).unwrap();
        let plan = TrialPlan { params: DecoderParams::new(2, 1).unwrap(), tau: 0, trials: 10, seed: 1 };
        let rep = run_trials(&code, &plan).unwrap();
        assert_eq!(rep.successes, 10);
        assert_eq!(rep.ofr_fraction(), (0, 10));
    }

    #[test]
    fn plan_validation() {
        let code = CodeSpec::new(Backend::hermitian(2).unwrap(), PlaceSelection::All, 3).unwrap();
        let params = DecoderParams::new(1, 1).unwrap();
        let too_big = TrialPlan { params, tau: 9, trials: 1, seed: 0 };
        assert!(matches!(run_trials(&code, &too_big), Err(SimError::TauTooLarge { .. })));
        let none = TrialPlan { params, tau: 1, trials: 0, seed: 0 };
        assert!(matches!(run_trials(&code, &none), Err(SimError::NoTrials)));
    }

    #[test]
    fn csv_layout() {
        let code = CodeSpec::new(Backend::hermitian(2).unwrap(), PlaceSelection::All, 3).unwrap();
        let plan = TrialPlan { params: DecoderParams::new(1, 1).unwrap(), tau: 1, trials: 4, seed: 9 };
        let rep = run_trials(&code, &plan).unwrap();
        let mut buf = Vec::new();
        write_csv(&[rep], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "curve,q,gamma,n,k,dstar,ell,s,tau,tau_max_exact,trials,successes,failures,miscorrections,ofr"
        );
        assert!(lines.next().unwrap().starts_with("hermitian,2,3,8,3,5,1,1,1,"));
    }
}
