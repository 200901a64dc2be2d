//! Benchmark functions with their paired Chebyshev and Jacobi weights.

use std::fmt;
use std::str::FromStr;

use crate::basis::{make_nodes, ChebyshevKind};
use crate::error::{Error, Result};
use crate::operators::JacobiWeight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TestFunction {
    /// `|x + 0.5|^(7/2) sin x / (1 + x^2)`
    F1,
    /// Three-piece spline with kinks at `x = +-1/3`.
    F2,
    /// `(1 + |x|)^(1/4)`
    F3,
    /// `|x|`
    F4,
    /// `sign(x) - x/2`, jump of height 2 at the origin.
    F5,
}

impl TestFunction {
    pub const ALL: [TestFunction; 5] = [Self::F1, Self::F2, Self::F3, Self::F4, Self::F5];

    /// Evaluates without a domain check.
    pub fn value(self, x: f64) -> f64 {
        match self {
            Self::F1 => (x + 0.5).abs().powf(3.5) * x.sin() / (1.0 + x * x),
            Self::F2 => {
                if x <= -1.0 / 3.0 {
                    32.0 / 9.0 * (1.0 + x)
                } else if x <= 1.0 / 3.0 {
                    (1.0 - x).powi(3)
                } else {
                    4.0 / 9.0 * (1.0 - x)
                }
            }
            Self::F3 => (1.0 + x.abs()).powf(0.25),
            Self::F4 => x.abs(),
            Self::F5 => {
                let sign = if x > 0.0 {
                    1.0
                } else if x < 0.0 {
                    -1.0
                } else {
                    0.0
                };
                sign - x / 2.0
            }
        }
    }

    /// The benchmark pairing used for this function.
    pub fn case(self) -> TestCase {
        let (kind, gamma, delta, theta) = match self {
            Self::F1 => (ChebyshevKind::W3, 0.6, 0.6, 0.4),
            Self::F2 => (ChebyshevKind::W1, 0.0, 0.0, 0.9),
            Self::F3 => (ChebyshevKind::W4, 0.5, 0.5, 0.3),
            Self::F4 => (ChebyshevKind::W2, 0.1, 0.1, 0.9),
            Self::F5 => (ChebyshevKind::W2, 1.0, 1.0, 0.4),
        };
        TestCase {
            id: self,
            kind,
            weight: JacobiWeight::new(gamma, delta).expect("static exponents are valid"),
            theta_default: theta,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::F1 => "f1",
            Self::F2 => "f2",
            Self::F3 => "f3",
            Self::F4 => "f4",
            Self::F5 => "f5",
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(Self::F1),
            "f2" => Ok(Self::F2),
            "f3" => Ok(Self::F3),
            "f4" => Ok(Self::F4),
            "f5" => Ok(Self::F5),
            other => Err(Error::InvalidArgument(format!(
                "unknown test function '{other}' (expected f1..f5)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TestCase {
    pub id: TestFunction,
    pub kind: ChebyshevKind,
    pub weight: JacobiWeight,
    pub theta_default: f64,
}

impl TestCase {
    pub fn eval(&self, x: f64) -> Result<f64> {
        test_function_eval(self.id, x)
    }
}

pub fn test_function_eval(id: TestFunction, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::AbscissaOutOfRange(x));
    }
    Ok(id.value(x))
}

/// `f(x_k)` at the zeros of `p_n(kind)`, in node order.
pub fn sample_at_nodes(id: TestFunction, kind: ChebyshevKind, n: usize) -> Result<Vec<f64>> {
    let nodes = make_nodes(kind, n)?;
    Ok(nodes.x_nodes.iter().map(|&x| id.value(x)).collect())
}
