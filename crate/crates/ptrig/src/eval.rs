//! Computed values carrying an error estimate and a method tag.

use crate::error::{Error, Result};

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    Quadrature,
    ClosedForm,
    Inversion,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Series => "series",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed-form",
            Method::Inversion => "inversion",
        };
        f.write_str(s)
    }
}

/// A computed real value with a claimed absolute error bound.
///
/// Non-finite values are never wrapped in an `Evaluation`; constructors
/// return `Error::Range` instead.
#[derive(Debug, Clone, Copy)]
pub struct Evaluation {
    pub value: f64,
    pub abs_err: f64,
    pub method: Method,
}

impl Evaluation {
    pub fn new(value: f64, abs_err: f64, method: Method) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Range(format!("non-finite value {value}")));
        }
        if !abs_err.is_finite() || abs_err < 0.0 {
            return Err(Error::Range(format!("invalid error bound {abs_err}")));
        }
        Ok(Evaluation {
            value,
            abs_err,
            method,
        })
    }

    /// Exact value (zero claimed error).
    pub fn exact(value: f64, method: Method) -> Result<Self> {
        Self::new(value, 0.0, method)
    }
}

/// A few ulps of `v`, used as the error bound of closed-form compositions.
pub(crate) fn ulps(v: f64, n: f64) -> f64 {
    n * f64::EPSILON * v.abs().max(f64::MIN_POSITIVE)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert!(Evaluation::new(f64::INFINITY, 0.0, Method::Series).is_err());
        assert!(Evaluation::new(f64::NAN, 0.0, Method::Series).is_err());
        assert!(Evaluation::new(1.0, -1.0, Method::Series).is_err());
        assert!(Evaluation::new(1.0, f64::NAN, Method::Series).is_err());
    }

    #[test]
    fn method_display() {
        assert_eq!(Method::ClosedForm.to_string(), "closed-form");
        assert_eq!(Method::Series.to_string(), "series");
    }
}
