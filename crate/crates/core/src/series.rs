use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Affine preprocessing `(x - shift) / divisor` applied at ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transform {
    pub shift: f64,
    pub divisor: f64,
}

impl Default for Transform {
    fn default() -> Self {
        Transform::IDENTITY
    }
}

impl Transform {
    pub const IDENTITY: Transform = Transform {
        shift: 0.0,
        divisor: 1.0,
    };

    pub fn new(shift: f64, divisor: f64) -> Result<Self> {
        if !shift.is_finite() {
            return Err(Error::param("shift", "must be finite"));
        }
        if !(divisor.is_finite() && divisor > 0.0) {
            return Err(Error::param("divisor", format!("must be > 0, got {divisor}")));
        }
        Ok(Transform { shift, divisor })
    }

    pub fn apply(&self, x: f64) -> f64 {
        if *self == Transform::IDENTITY {
            x
        } else {
            (x - self.shift) / self.divisor
        }
    }
}

/// Ordered observations plus the transform that produced them.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Series {
    values: Vec<f64>,
    transform: Transform,
}

impl Series {
    pub fn new(values: Vec<f64>) -> Self {
        Series {
            values,
            transform: Transform::IDENTITY,
        }
    }

    pub fn with_transform(values: Vec<f64>, transform: Transform) -> Self {
        Series { values, transform }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn transform(&self) -> Transform {
        self.transform
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

impl AsRef<[f64]> for Series {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

impl From<Vec<f64>> for Series {
    fn from(v: Vec<f64>) -> Self {
        Series::new(v)
    }
}
