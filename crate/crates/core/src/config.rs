//! Run settings shared by the command line tool and the examples.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{PrimeField, DEFAULT_CHARACTERISTIC};
use crate::reps::DEFAULT_REALIZE_ATTEMPTS;
use crate::tangent::DescentBudget;

/// Environment variable overriding the field characteristic.
pub const CHARACTERISTIC_ENV: &str = "DTAN_CHARACTERISTIC";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub characteristic: u64,
    pub seed: u64,
    pub realize_attempts: usize,
    pub budget: DescentBudget,
    /// Worker threads, `0` for the rayon default.
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            characteristic: DEFAULT_CHARACTERISTIC as u64,
            seed: 1,
            realize_attempts: DEFAULT_REALIZE_ATTEMPTS,
            budget: DescentBudget::default(),
            threads: 0,
        }
    }
}

impl RunConfig {
    /// Defaults with the characteristic taken from the environment if set.
    pub fn from_env() -> Self {
        let mut c = RunConfig::default();
        if let Some(p) = std::env::var(CHARACTERISTIC_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
        {
            c.characteristic = p;
        }
        c
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.characteristic)
    }

    /// Installs the global thread pool once; later calls are ignored.
    pub fn install_threads(&self) {
        if self.threads > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build_global();
        }
    }
}
