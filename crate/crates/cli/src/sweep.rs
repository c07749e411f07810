//! Parameter sweeps over the closed-form tables.

use gamma2_core::cone_geometry::{
    fundamental_group_status, h2r_product_value, one_surgery_max_k, surgery_product_sigma2,
    FundamentalGroupStatus,
};
use gamma2_core::invariants::{gauss_bonnet, schouten, sigma_k};
use gamma2_core::model_spaces::{
    flat, product, product_sign_table, sphere, BaseKind, SignPrediction,
};
use gamma2_core::tolerance::relative_residual;
use gamma2_core::CurvatureStructure;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::table::{sign, Table};

/// `S^{c−1}(1) × ℝ^{n−c+1}`.
fn surgery_model(n: usize, c: usize) -> Result<CurvatureStructure, Failure> {
    Ok(product(&sphere(c - 1, 1.0)?, &flat(n - c + 1)?)?)
}

fn prediction(p: SignPrediction) -> &'static str {
    match p {
        SignPrediction::Positive => "+",
        SignPrediction::Negative => "-",
        SignPrediction::Indeterminate => "?",
    }
}

fn require_nonempty(rows: &[Vec<Value>], what: &str) -> Result<(), Failure> {
    if rows.is_empty() {
        return Err(Failure::input(format!(
            "no valid parameter combinations for {what}"
        )));
    }
    Ok(())
}

/// Columns: p, q, base, r, scal, sigma2, scal_sign, sigma2_sign,
/// predicted_scal, predicted_sigma2, largest_consistent_r.
pub fn product_signs(
    ps: &[usize],
    q: usize,
    base: BaseKind,
    radii: &[f64],
) -> Result<Table, Failure> {
    if radii.iter().any(|&r| r <= 0.0) {
        return Err(Failure::input("radii must be positive"));
    }
    let base_name = match base {
        BaseKind::UnitSphere => "sphere",
        BaseKind::Flat => "flat",
    };
    let tables = ps
        .par_iter()
        .map(|&p| product_sign_table(p, q, base, radii))
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(vec![
        "p",
        "q",
        "base",
        "r",
        "scal",
        "sigma2",
        "scal_sign",
        "sigma2_sign",
        "predicted_scal",
        "predicted_sigma2",
        "largest_consistent_r",
    ]);
    for t in tables {
        for row in &t.rows {
            table.rows.push(vec![
                json!(t.p),
                json!(t.q),
                json!(base_name),
                json!(row.r),
                json!(row.scal),
                json!(row.sigma2),
                json!(sign(row.scal)),
                json!(sign(row.sigma2)),
                json!(prediction(t.predicted_scal)),
                json!(prediction(t.predicted_sigma2)),
                t.largest_consistent_r.map_or(Value::Null, |r| json!(r)),
            ]);
        }
    }
    require_nonempty(&table.rows, "product-signs")?;
    Ok(table)
}

/// Columns: n, c, closed_form, direct, residual, sign.
pub fn surgery_sigma2(ns: &[usize], cs: &[usize]) -> Result<Table, Failure> {
    let pairs: Vec<(usize, usize)> = ns
        .iter()
        .flat_map(|&n| {
            cs.iter()
                .filter(move |&&c| (3..=n).contains(&c))
                .map(move |&c| (n, c))
        })
        .collect();
    let rows = pairs
        .par_iter()
        .map(|&(n, c)| -> Result<Vec<Value>, Failure> {
            let closed = surgery_product_sigma2(n, c)?;
            let direct = sigma_k(&schouten(&surgery_model(n, c)?)?, 2)?;
            Ok(vec![
                json!(n),
                json!(c),
                json!(closed),
                json!(direct),
                json!(relative_residual(closed, direct, 0.0)),
                json!(sign(closed)),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    require_nonempty(&rows, "surgery-sigma2 (need 3 ≤ c ≤ n)")?;
    let mut table = Table::new(vec!["n", "c", "closed_form", "direct", "residual", "sign"]);
    table.rows = rows;
    Ok(table)
}

/// Columns: n, c, r, closed_form, direct, residual.
pub fn h2r(ns: &[usize], cs: &[usize], rs: &[usize]) -> Result<Table, Failure> {
    let mut combos = Vec::new();
    for &n in ns {
        for &c in cs {
            for &r in rs {
                if (3..=n).contains(&c) && r >= 1 && 2 * r < c {
                    combos.push((n, c, r));
                }
            }
        }
    }
    let rows = combos
        .par_iter()
        .map(|&(n, c, r)| -> Result<Vec<Value>, Failure> {
            let closed = h2r_product_value(c, r)?;
            let direct = gauss_bonnet(&surgery_model(n, c)?, r)?;
            Ok(vec![
                json!(n),
                json!(c),
                json!(r),
                json!(closed),
                json!(direct),
                json!(relative_residual(closed, direct, 0.0)),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    require_nonempty(&rows, "h2r (need 3 ≤ c ≤ n and 2 ≤ 2r ≤ c − 1)")?;
    let mut table = Table::new(vec!["n", "c", "r", "closed_form", "direct", "residual"]);
    table.rows = rows;
    Ok(table)
}

/// Columns: n, max_k, unrestricted, open, finite_required; k lists are
/// space-separated.
pub fn k_bound(ns: &[usize]) -> Result<Table, Failure> {
    if let Some(&n) = ns.iter().find(|&&n| n < 3) {
        return Err(Failure::input(format!("k-bound needs n ≥ 3, got {n}")));
    }
    let rows = ns
        .par_iter()
        .map(|&n| -> Result<Vec<Value>, Failure> {
            let mut lists: [Vec<String>; 3] = Default::default();
            for k in 1..=n {
                let slot = match fundamental_group_status(n, k)? {
                    FundamentalGroupStatus::Unrestricted => 0,
                    FundamentalGroupStatus::Open => 1,
                    FundamentalGroupStatus::FiniteRequired => 2,
                };
                lists[slot].push(k.to_string());
            }
            let [unrestricted, open, finite] = lists.map(|l| l.join(" "));
            Ok(vec![
                json!(n),
                one_surgery_max_k(n).map_or(Value::Null, |k| json!(k)),
                json!(unrestricted),
                json!(open),
                json!(finite),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    require_nonempty(&rows, "k-bound")?;
    let mut table = Table::new(vec![
        "n",
        "max_k",
        "unrestricted",
        "open",
        "finite_required",
    ]);
    table.rows = rows;
    Ok(table)
}
