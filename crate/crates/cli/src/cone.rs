//! Randomized experiments on the Γ_k cones.

use gamma2_core::cone_geometry::{concavity_check, h4_nonconvexity_witness};
use gamma2_core::invariants::{schouten, sigma_all};
use gamma2_core::sampling::{
    gamma_positive_schouten, stream_rng, structure_with_schouten, symmetric_with_spectrum,
};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::failure::Failure;
use crate::report::Provenance;
use crate::structure_file::StructureFile;

/// Concavity residuals below this count as violations.
pub const CONCAVITY_FLOOR: f64 = -1e-10;

/// Norm of the Weyl noise added to every sampled structure.
const WEYL_NOISE: f64 = 1.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum ConeResult {
    Sample {
        n: usize,
        k: usize,
        trials: usize,
        /// Samples in Γ_1, …, Γ_k.
        counts: Vec<usize>,
        in_cone: usize,
    },
    Concavity {
        n: usize,
        k: usize,
        trials: usize,
        min_residual: f64,
        floor: f64,
        passed: bool,
    },
    H4Witness {
        n: usize,
        budget: usize,
        found: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<WitnessRecord>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessRecord {
    pub trial: usize,
    /// `h₄` at `R`, `R̄` and the midpoint.
    pub h4: [f64; 3],
    pub r: StructureFile,
    pub r_bar: StructureFile,
}

#[derive(Serialize)]
pub struct ConeFile<'a> {
    pub provenance: &'a Provenance,
    #[serde(flatten)]
    pub result: &'a ConeResult,
}

fn check_params(n: usize, k: usize) -> Result<(), Failure> {
    if !(3..=12).contains(&n) {
        return Err(Failure::input(format!("n must lie in 3..=12, got {n}")));
    }
    if !(1..=n).contains(&k) {
        return Err(Failure::input(format!("k must lie in 1..={n}, got {k}")));
    }
    Ok(())
}

fn check_budget(budget: usize) -> Result<(), Failure> {
    if budget == 0 {
        return Err(Failure::input("budget must be at least 1"));
    }
    Ok(())
}

/// Structures with Schouten eigenvalues uniform in `[−1, 2]` plus Weyl noise,
/// tallied by Γ_j membership for `j ≤ k`.
pub fn sample(n: usize, k: usize, trials: usize, seed: u64) -> Result<ConeResult, Failure> {
    check_params(n, k)?;
    check_budget(trials)?;
    let counts = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<Vec<usize>, Failure> {
            let mut rng = stream_rng(seed, trial as u64);
            let lambda: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..2.0)).collect();
            let a = symmetric_with_spectrum(&lambda, &mut rng)?;
            let r = structure_with_schouten(&a, WEYL_NOISE, &mut rng)?;
            let sigma = sigma_all(&schouten(&r)?);
            let depth = sigma.iter().take_while(|&&s| s > 0.0).count();
            Ok((1..=k).map(|j| usize::from(depth >= j)).collect())
        })
        .try_reduce(
            || vec![0; k],
            |a, b| Ok(a.iter().zip(&b).map(|(x, y)| x + y).collect()),
        )?;
    Ok(ConeResult::Sample {
        n,
        k,
        trials,
        in_cone: counts[k - 1],
        counts,
    })
}

/// Concavity residual over random in-cone pairs and mixing parameters.
pub fn concavity(n: usize, k: usize, trials: usize, seed: u64) -> Result<ConeResult, Failure> {
    check_params(n, k)?;
    check_budget(trials)?;
    let min_residual = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<f64, Failure> {
            let mut rng = stream_rng(seed, trial as u64);
            let a = gamma_positive_schouten(n, k, &mut rng)?;
            let b = gamma_positive_schouten(n, k, &mut rng)?;
            let r = structure_with_schouten(&a, WEYL_NOISE, &mut rng)?;
            let r_bar = structure_with_schouten(&b, WEYL_NOISE, &mut rng)?;
            let t = rng.random_range(0.0..=1.0);
            Ok(concavity_check(&r, &r_bar, k, t)?)
        })
        .try_reduce(|| f64::INFINITY, |a, b| Ok(a.min(b)))?;
    Ok(ConeResult::Concavity {
        n,
        k,
        trials,
        min_residual,
        floor: CONCAVITY_FLOOR,
        passed: min_residual >= CONCAVITY_FLOOR,
    })
}

pub fn h4_witness(n: usize, budget: usize, seed: u64) -> Result<ConeResult, Failure> {
    check_params(n, 1)?;
    check_budget(budget)?;
    if n < 4 {
        return Err(Failure::input(format!("h4-witness needs n ≥ 4, got {n}")));
    }
    let witness = h4_nonconvexity_witness(n, seed, budget)?.map(|w| WitnessRecord {
        trial: w.trial,
        h4: w.h4,
        r: StructureFile::from_structure(&w.r),
        r_bar: StructureFile::from_structure(&w.r_bar),
    });
    Ok(ConeResult::H4Witness {
        n,
        budget,
        found: witness.is_some(),
        witness,
    })
}
