use crate::config::FillingConfig;
use crate::error::FillingError;

/// Bethe numbers realising `config` on a chain of even length `L`.
///
/// Each weight-1 interval `(lo, hi)` becomes a contiguous block of
/// `round((hi−lo)·L)` numbers, centred on `(lo+hi)·L/2` and spaced by one.
/// Numbers are integers when `N = m·L` is odd and half-integers when it is
/// even; a block whose centre falls off that grid is shifted by `1/2` toward
/// zero, so symmetric fillings give symmetric sets.
pub fn bethe_numbers_for(config: &FillingConfig, length: usize) -> Result<Vec<f64>, FillingError> {
    if length == 0 || length % 2 == 1 {
        return Err(FillingError::BadLength(length));
    }
    let l = length as f64;
    let count = config.m * l;
    if (count - count.round()).abs() > 1e-9 || count.round() < 1.0 {
        return Err(FillingError::NonIntegerCount {
            m: config.m,
            length,
            count,
        });
    }
    let n = count.round() as i64;
    let offset = if n % 2 == 0 { 0.5 } else { 0.0 };
    let mut numbers = Vec::with_capacity(n as usize);
    for iv in config.intervals() {
        if iv.weight != 1 {
            return Err(FillingError::NotRealisable(format!(
                "interval ({}, {}) has weight {}",
                iv.lo, iv.hi, iv.weight
            )));
        }
        let size = ((iv.hi - iv.lo) * l).round() as i64;
        if size < 1 {
            return Err(FillingError::IntervalTooNarrow {
                lo: iv.lo,
                hi: iv.hi,
                length,
            });
        }
        let centre = (iv.lo + iv.hi) * l / 2.0;
        let mut start = centre - (size - 1) as f64 / 2.0;
        // Snap onto the admissible grid `offset + ℤ`, ties toward zero.
        let frac = (start - offset) - (start - offset).round();
        if frac.abs() > 1e-9 {
            let down = start - frac;
            let up = if frac > 0.0 { down + 1.0 } else { down - 1.0 };
            let half = (size - 1) as f64 / 2.0;
            start = if (down + half).abs() <= (up + half).abs() {
                down
            } else {
                up
            };
        } else {
            start = (start - offset).round() + offset;
        }
        numbers.extend((0..size).map(|j| start + j as f64));
    }
    numbers.sort_by(|a, b| a.partial_cmp(b).expect("finite Bethe numbers"));
    if numbers.len() as i64 != n {
        return Err(FillingError::NotRealisable(format!(
            "blocks hold {} numbers but N = {n}",
            numbers.len()
        )));
    }
    if numbers.windows(2).any(|w| w[1] - w[0] < 0.5) {
        return Err(FillingError::NotRealisable("blocks overlap".into()));
    }
    Ok(numbers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_standard_sets() {
        assert_eq!(
            bethe_numbers_for(&FillingConfig::standard(0.5), 8).unwrap(),
            vec![-1.5, -0.5, 0.5, 1.5]
        );
        assert_eq!(
            bethe_numbers_for(&FillingConfig::standard(0.375), 8).unwrap(),
            vec![-1.0, 0.0, 1.0]
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            bethe_numbers_for(&FillingConfig::standard(0.3), 8),
            Err(FillingError::NonIntegerCount { .. })
        ));
        assert!(matches!(
            bethe_numbers_for(&FillingConfig::standard(0.5), 7),
            Err(FillingError::BadLength(7))
        ));
    }
}
