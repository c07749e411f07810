/// Default absolute tolerance for structural identities (symmetries, Bianchi).
pub const STRUCTURAL: f64 = 1e-12;
/// Default relative tolerance for composed formulas.
pub const RELATIVE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub structural: f64,
    pub relative: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            structural: STRUCTURAL,
            relative: RELATIVE,
        }
    }
}

/// `|a − b|` relative to the larger of `|a|`, `|b|` and `scale`, where `scale`
/// is the magnitude of the terms that produced `a` and `b`.
pub fn relative_residual(a: f64, b: f64, scale: f64) -> f64 {
    let denom = a.abs().max(b.abs()).max(scale.abs());
    if denom == 0.0 {
        0.0
    } else {
        (a - b).abs() / denom
    }
}
