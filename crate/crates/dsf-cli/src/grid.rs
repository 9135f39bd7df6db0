//! `min:max:step` grid specifications with an inclusive upper end.

use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl GridSpec {
    /// Grid points `min + k·step` for `k = 0..=K`, `K` the largest index
    /// with `min + K·step ≤ max` (up to a half-ulp slack so that exact
    /// decimal endpoints are kept).
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.max - self.min) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|k| self.min + k as f64 * self.step)
            .collect()
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.step.is_nan() || self.step <= 0.0 {
            return Err(format!("grid step must be positive, got {}", self.step));
        }
        if self.min > self.max {
            return Err(format!(
                "grid minimum {} exceeds maximum {}",
                self.min, self.max
            ));
        }
        Ok(())
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected min:max:step, got '{s}'"));
        }
        let parse = |part: &str, what: &str| {
            part.parse::<f64>()
                .map_err(|_| format!("bad {what} '{part}' in grid '{s}'"))
        };
        let spec = GridSpec {
            min: parse(parts[0], "minimum")?,
            max: parse(parts[1], "maximum")?,
            step: parse(parts[2], "step")?,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusive_endpoints() {
        let g: GridSpec = "0:41:0.5".parse().unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 83);
        assert_eq!(pts[0], 0.0);
        assert_eq!(*pts.last().unwrap(), 41.0);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!("0:1:0".parse::<GridSpec>().is_err());
        assert!("3:1:0.5".parse::<GridSpec>().is_err());
        assert!("1:2".parse::<GridSpec>().is_err());
        assert!("a:b:c".parse::<GridSpec>().is_err());
    }
}
