//! Seeded property checks for the catalog of identities.
//!
//! Trial `k` of check `name` under seed `s` draws its inputs from a generator seeded
//! with a stable hash of `(s, name, k)`, so any single trial can be replayed.

pub mod catalog;
pub mod report;
pub mod trial;

use rayon::prelude::*;

use crate::error::{Error, Result};
pub use catalog::{catalog, CheckKind, IdentityCheck};
pub use report::{Counterexample, IdentityReport, Status};
pub use trial::{GenParams, Outcome, Trial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunParams {
    pub trials: usize,
    pub seed: u64,
    pub max_rank: usize,
    pub coeff_bound: i64,
}

impl Default for RunParams {
    fn default() -> Self {
        RunParams {
            trials: 100,
            seed: 0,
            max_rank: 2,
            coeff_bound: 5,
        }
    }
}

impl RunParams {
    fn gen(&self) -> GenParams {
        GenParams {
            max_rank: self.max_rank,
            coeff_bound: self.coeff_bound,
        }
    }
}

/// FNV-1a over the seed, name and trial index, finished with a splitmix64 round.
pub fn derived_seed(seed: u64, name: &str, trial: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for b in bytes {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(&seed.to_le_bytes());
    eat(name.as_bytes());
    eat(&(trial as u64).to_le_bytes());
    let mut z = h.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn first_failure(
    name: &str,
    check: fn(&mut Trial) -> Outcome,
    params: &RunParams,
) -> Option<Counterexample> {
    (0..params.trials).into_par_iter().find_map_first(|k| {
        let seed = derived_seed(params.seed, name, k);
        let mut t = Trial::new(seed, params.gen());
        match check(&mut t) {
            Ok(()) => None,
            Err(f) => Some(Counterexample {
                trial: k,
                seed,
                message: f.0,
                inputs: t.into_inputs(),
            }),
        }
    })
}

pub fn run_identity(check: &IdentityCheck, params: &RunParams) -> IdentityReport {
    let mut report = IdentityReport {
        name: check.name.to_string(),
        statement: check.statement.to_string(),
        status: Status::Pass,
        trials: params.trials,
        seed: params.seed,
        counterexample: None,
        note: None,
        warning: (params.trials == 0).then(|| "zero trials requested; nothing was checked".into()),
    };
    match check.kind {
        CheckKind::Property(f) => {
            if let Some(c) = first_failure(check.name, f, params) {
                report.status = Status::Fail;
                report.counterexample = Some(c);
            }
        }
        CheckKind::Discovery { printed, corrected } => {
            if let Some(c) = first_failure(check.name, printed, params) {
                report.status = Status::DiscoveryFail;
                report.counterexample = Some(c);
                report.note = Some(match first_failure(check.name, corrected, params) {
                    None => format!(
                        "corrected form `{}` holds on all {} trials",
                        check.corrected_statement, params.trials
                    ),
                    Some(c2) => format!(
                        "corrected form `{}` also fails at trial {}",
                        check.corrected_statement, c2.trial
                    ),
                });
            }
        }
    }
    report
}

pub fn run_check(name: &str, params: &RunParams) -> Result<IdentityReport> {
    let check = catalog()
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))?;
    Ok(run_identity(check, params))
}

pub fn run_all(params: &RunParams) -> Vec<IdentityReport> {
    catalog().iter().map(|c| run_identity(c, params)).collect()
}
