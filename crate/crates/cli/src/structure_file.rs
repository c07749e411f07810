//! JSON input format for curvature structures.

use gamma2_core::double_forms::{bianchi_project, kulkarni_nomizu};
use gamma2_core::model_spaces::{
    canonical_variation, flat, product, space_form, sphere, FiberModel, ProductSpec,
};
use gamma2_core::{CurvatureStructure, SymmetricForm};
use serde::{Deserialize, Serialize};

use crate::failure::Failure;

/// Relative tolerance for the Bianchi fixed-point test on load.
pub const LOAD_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureFile {
    pub n: usize,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "format", content = "payload", rename_all = "snake_case")]
pub enum Payload {
    Components(Vec<Component>),
    KnSum(Vec<KnTerm>),
    Model(Model),
}

/// `R(e_i, e_j, e_k, e_l) = value`; the other symmetry images are implied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: f64,
}

/// `weight · (a ∧ b)` for symmetric matrices `a`, `b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnTerm {
    #[serde(default = "one")]
    pub weight: f64,
    pub a: Vec<Vec<f64>>,
    pub b: Vec<Vec<f64>>,
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Model {
    Sphere {
        dim: usize,
        #[serde(default = "one")]
        radius: f64,
    },
    SpaceForm {
        dim: usize,
        curvature: f64,
    },
    Flat {
        dim: usize,
    },
    Einstein {
        dim: usize,
        scal: f64,
        #[serde(default)]
        weyl_norm: f64,
        #[serde(default)]
        seed: u64,
    },
    Product {
        factors: Vec<Model>,
    },
    /// Product with the fiber metric scaled by `t²`.
    CanonicalVariation {
        fiber: Box<Model>,
        base: Box<Model>,
        t: f64,
    },
}

impl Model {
    fn dim(&self) -> usize {
        match self {
            Model::Sphere { dim, .. }
            | Model::SpaceForm { dim, .. }
            | Model::Flat { dim }
            | Model::Einstein { dim, .. } => *dim,
            Model::Product { factors } => factors.iter().map(Model::dim).sum(),
            Model::CanonicalVariation { fiber, base, .. } => fiber.dim() + base.dim(),
        }
    }

    fn factor(&self) -> Result<FiberModel, Failure> {
        Ok(match *self {
            Model::Sphere { radius, .. } => FiberModel::Sphere { radius },
            Model::SpaceForm { curvature, .. } => FiberModel::SpaceForm { curvature },
            Model::Flat { .. } => FiberModel::Flat,
            Model::Einstein {
                scal,
                weyl_norm,
                seed,
                ..
            } => FiberModel::Einstein {
                scal,
                weyl_norm,
                seed,
            },
            _ => {
                return Err(Failure::input(
                    "canonical_variation factors must be single models, not products",
                ))
            }
        })
    }

    pub fn build(&self) -> Result<CurvatureStructure, Failure> {
        Ok(match self {
            Model::Sphere { dim, radius } => sphere(*dim, *radius)?,
            Model::SpaceForm { dim, curvature } => space_form(*dim, *curvature)?,
            Model::Flat { dim } => flat(*dim)?,
            Model::Einstein { dim, .. } => self.factor()?.build(*dim)?,
            Model::Product { factors } => {
                let mut iter = factors.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Failure::input("product needs at least one factor"))?;
                iter.try_fold(first.build()?, |acc, f| -> Result<_, Failure> {
                    Ok(product(&acc, &f.build()?)?)
                })?
            }
            Model::CanonicalVariation { fiber, base, t } => canonical_variation(&ProductSpec {
                fiber_dim: fiber.dim(),
                fiber: fiber.factor()?,
                base_dim: base.dim(),
                base: base.factor()?,
                t: *t,
            })?,
        })
    }
}

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text)
            .map_err(|e| Failure::input(format!("invalid structure file: {e}")))
    }

    /// Builds the structure, rejecting inputs that are not curvature tensors.
    pub fn load(&self) -> Result<CurvatureStructure, Failure> {
        let n = self.n;
        let r = match &self.payload {
            Payload::Components(entries) => from_components(n, entries)?,
            Payload::KnSum(terms) => from_kn_sum(n, terms)?,
            Payload::Model(model) => model.build()?,
        };
        if r.dim() != n {
            return Err(Failure::input(format!(
                "declared n = {n} but the payload has dimension {}",
                r.dim()
            )));
        }
        Ok(r)
    }

    /// Canonical `components` encoding: one entry per nonzero `R(I, J)` with
    /// `I ≤ J` in increasing-pair order.
    pub fn from_structure(r: &CurvatureStructure) -> Self {
        let n = r.dim();
        let mut entries = Vec::new();
        for (first, second, value) in r.as_double_form().entries() {
            if value != 0.0 && first <= second {
                entries.push(Component {
                    i: first[0],
                    j: first[1],
                    k: second[0],
                    l: second[1],
                    value,
                });
            }
        }
        Self {
            n,
            payload: Payload::Components(entries),
        }
    }
}

fn from_components(n: usize, entries: &[Component]) -> Result<CurvatureStructure, Failure> {
    let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    let mut raw = vec![0.0; n.pow(4)];
    let mut set = vec![false; n.pow(4)];
    for c in entries {
        let Component { i, j, k, l, value } = *c;
        if [i, j, k, l].iter().any(|&x| x >= n) {
            return Err(Failure::input(format!(
                "component ({i},{j},{k},{l}) has an index outside 0..{n}"
            )));
        }
        if !value.is_finite() {
            return Err(Failure::input(format!(
                "component ({i},{j},{k},{l}) is not finite"
            )));
        }
        if (i == j || k == l) && value != 0.0 {
            return Err(Failure::symmetry(format!(
                "component ({i},{j},{k},{l}) = {value} violates antisymmetry"
            )));
        }
        let images = [
            ((i, j, k, l), value),
            ((j, i, k, l), -value),
            ((i, j, l, k), -value),
            ((j, i, l, k), value),
            ((k, l, i, j), value),
            ((l, k, i, j), -value),
            ((k, l, j, i), -value),
            ((l, k, j, i), value),
        ];
        for ((a, b, c, d), v) in images {
            let slot = idx(a, b, c, d);
            if set[slot] && (raw[slot] - v).abs() > 1e-12 * raw[slot].abs().max(v.abs()) {
                return Err(Failure::symmetry(format!(
                    "component ({i},{j},{k},{l}) = {value} conflicts with an earlier entry implying {}",
                    raw[slot] * v.signum() * value.signum()
                )));
            }
            raw[slot] = v;
            set[slot] = true;
        }
    }
    let projected = bianchi_project(n, &raw)?;
    let scale = raw.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    worst =
                        worst.max((projected.component(i, j, k, l) - raw[idx(i, j, k, l)]).abs());
                }
            }
        }
    }
    if worst > LOAD_TOLERANCE * scale {
        return Err(Failure::symmetry(format!(
            "components violate the first Bianchi identity: distance to the curvature projection {worst:.3e} exceeds {:.1e}",
            LOAD_TOLERANCE * scale
        )));
    }
    Ok(projected)
}

fn from_kn_sum(n: usize, terms: &[KnTerm]) -> Result<CurvatureStructure, Failure> {
    let mut acc = CurvatureStructure::zeros(n)?;
    for term in terms {
        let a = symmetric(&term.a)?;
        let b = symmetric(&term.b)?;
        if a.dim() != n || b.dim() != n {
            return Err(Failure::input(format!(
                "kn_sum matrices must be {n}×{n}, got {}×{0} and {}×{1}",
                a.dim(),
                b.dim()
            )));
        }
        acc = acc.checked_add(&kulkarni_nomizu(&a, &b)?.scale(term.weight))?;
    }
    Ok(acc)
}

fn symmetric(rows: &[Vec<f64>]) -> Result<SymmetricForm, Failure> {
    Ok(SymmetricForm::from_rows(rows)?)
}
