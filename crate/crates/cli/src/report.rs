//! JSON reports with provenance.

use gamma2_core::invariants::{check_identities, invariant_report, IdentityCheck, InvariantReport};
use gamma2_core::{CurvatureStructure, SymmetricForm, Tolerances};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::failure::Failure;

pub const TOOL: &str = "gamma2";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceRecord {
    pub structural: f64,
    pub relative: f64,
}

impl From<Tolerances> for ToleranceRecord {
    fn from(t: Tolerances) -> Self {
        Self {
            structural: t.structural,
            relative: t.relative,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tolerances: ToleranceRecord,
}

impl Provenance {
    pub fn new(tolerances: Tolerances) -> Self {
        Self {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_sha256: None,
            seed: None,
            tolerances: tolerances.into(),
        }
    }

    pub fn with_input(mut self, bytes: &[u8]) -> Self {
        self.input_sha256 = Some(hex::encode(Sha256::digest(bytes)));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

type Matrix = Vec<Vec<f64>>;

/// Serializable mirror of the core invariant report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub scal: f64,
    pub ricci: Matrix,
    pub schouten: Matrix,
    /// `σ_1..σ_n`.
    pub sigma: Vec<f64>,
    /// `t_1..t_{n−1}`.
    pub newton: Vec<Matrix>,
    pub einstein: Matrix,
    /// `h_0, h_2, …, h_{2⌊n/2⌋}`.
    pub gauss_bonnet: Vec<f64>,
    /// `T_0, T_2, …` for `2k < n`.
    pub lovelock: Vec<Matrix>,
    pub weyl_norm_sq: f64,
    /// Γ_1..Γ_n membership.
    pub gamma: Vec<bool>,
}

fn rows(s: &SymmetricForm) -> Matrix {
    s.to_rows()
}

impl From<&InvariantReport> for InvariantRecord {
    fn from(r: &InvariantReport) -> Self {
        Self {
            n: r.n,
            scal: r.scal,
            ricci: rows(&r.ricci),
            schouten: rows(&r.schouten),
            sigma: r.sigma.clone(),
            newton: r.newton.iter().map(rows).collect(),
            einstein: rows(&r.einstein),
            gauss_bonnet: r.gauss_bonnet.clone(),
            lovelock: r.lovelock.iter().map(rows).collect(),
            weyl_norm_sq: r.weyl_norm_sq,
            gamma: r.gamma.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl From<&IdentityCheck> for CheckRecord {
    fn from(c: &IdentityCheck) -> Self {
        Self {
            name: c.name.clone(),
            residual: c.residual,
            tolerance: c.tolerance,
            passed: c.passed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub provenance: Provenance,
    pub report: InvariantRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckRecord>>,
}

impl ReportFile {
    pub fn build(
        r: &CurvatureStructure,
        provenance: Provenance,
        tolerances: Tolerances,
        with_checks: bool,
    ) -> Result<Self, Failure> {
        let report = invariant_report(r)?;
        let checks = if with_checks {
            Some(
                check_identities(r, tolerances)?
                    .iter()
                    .map(CheckRecord::from)
                    .collect(),
            )
        } else {
            None
        };
        Ok(Self {
            provenance,
            report: (&report).into(),
            checks,
        })
    }

    pub fn failed_checks(&self) -> Vec<&CheckRecord> {
        self.checks.iter().flatten().filter(|c| !c.passed).collect()
    }

    /// Scalar fields as `(quantity, value)` rows.
    pub fn scalar_rows(&self) -> Vec<(String, String)> {
        let r = &self.report;
        let mut out = vec![
            ("n".to_string(), r.n.to_string()),
            ("scal".to_string(), r.scal.to_string()),
            ("weyl_norm_sq".to_string(), r.weyl_norm_sq.to_string()),
        ];
        for (i, s) in r.sigma.iter().enumerate() {
            out.push((format!("sigma_{}", i + 1), s.to_string()));
        }
        for (i, h) in r.gauss_bonnet.iter().enumerate() {
            out.push((format!("h_{}", 2 * i), h.to_string()));
        }
        for (i, g) in r.gamma.iter().enumerate() {
            out.push((format!("gamma_{}", i + 1), g.to_string()));
        }
        for c in self.checks.iter().flatten() {
            out.push((format!("residual:{}", c.name), c.residual.to_string()));
        }
        out
    }
}
