use anyhow::{bail, Result};

/// `steps` equally spaced values from `min` to `max` inclusive (`[min]` for
/// a single step).
pub fn linspace(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite()) || steps == 0 || min > max {
        bail!("invalid grid: min {min}, max {max}, steps {steps}");
    }
    if steps == 1 {
        return Ok(vec![min]);
    }
    Ok((0..steps)
        .map(|k| min + (max - min) * k as f64 / (steps - 1) as f64)
        .collect())
}

/// `x = e^{−2φ}`.
pub fn x_of_phi(phi: f64) -> f64 {
    (-2.0 * phi).exp()
}
