//! Orthonormal Chebyshev polynomials of the four kinds, their zeros and
//! Christoffel numbers.
//!
//! Everything is evaluated in the angular variable `t = arccos x`, where each
//! family has a closed trigonometric form.

use std::f64::consts::{FRAC_1_PI, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Below this magnitude the denominator of a closed form is treated as zero
/// and the continuous extension is returned instead.
pub(crate) const SINGULAR_EPS: f64 = 1e-9;

/// Slack accepted on angles before they are reported out of range.
const ANGLE_SLACK: f64 = 1e-12;

/// One of the four Chebyshev weights on [-1, 1].
///
/// * `W1`: `1/sqrt(1-x^2)`
/// * `W2`: `sqrt(1-x^2)`
/// * `W3`: `sqrt((1+x)/(1-x))`
/// * `W4`: `sqrt((1-x)/(1+x))`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChebyshevKind {
    W1,
    W2,
    W3,
    W4,
}

impl ChebyshevKind {
    pub const ALL: [ChebyshevKind; 4] = [Self::W1, Self::W2, Self::W3, Self::W4];

    /// Weight value at `x` in the open interval (-1, 1).
    pub fn weight(self, x: f64) -> f64 {
        match self {
            Self::W1 => 1.0 / (1.0 - x * x).sqrt(),
            Self::W2 => (1.0 - x * x).sqrt(),
            Self::W3 => ((1.0 + x) / (1.0 - x)).sqrt(),
            Self::W4 => ((1.0 - x) / (1.0 + x)).sqrt(),
        }
    }

    /// `int_{-1}^{1} w(x) dx`.
    pub fn total_mass(self) -> f64 {
        match self {
            Self::W2 => PI / 2.0,
            _ => PI,
        }
    }

    /// Short lowercase label (`w1`..`w4`).
    pub fn label(self) -> &'static str {
        match self {
            Self::W1 => "w1",
            Self::W2 => "w2",
            Self::W3 => "w3",
            Self::W4 => "w4",
        }
    }
}

impl fmt::Display for ChebyshevKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ChebyshevKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "w1" | "1" => Ok(Self::W1),
            "w2" | "2" => Ok(Self::W2),
            "w3" | "3" => Ok(Self::W3),
            "w4" | "4" => Ok(Self::W4),
            other => Err(Error::InvalidArgument(format!(
                "unknown Chebyshev kind '{other}' (expected w1, w2, w3 or w4)"
            ))),
        }
    }
}

/// Validates an angle, clamping round-off overshoot into [0, pi].
pub fn check_angle(t: f64) -> Result<f64> {
    if !(-ANGLE_SLACK..=PI + ANGLE_SLACK).contains(&t) {
        return Err(Error::AngleOutOfRange(t));
    }
    Ok(t.clamp(0.0, PI))
}

/// Angle of an abscissa, `arccos(clamp(x, -1, 1))`.
///
/// This is the only place where x-space inputs lose precision.
pub fn angle_of(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

/// `p_j(w, cos t)`, the orthonormal polynomial of degree `j`.
pub fn ortho_poly_eval(kind: ChebyshevKind, j: usize, t: f64) -> Result<f64> {
    Ok(ortho_poly(kind, j, check_angle(t)?))
}

/// Unchecked evaluation; `t` must already lie in [0, pi].
pub(crate) fn ortho_poly(kind: ChebyshevKind, j: usize, t: f64) -> f64 {
    let jf = j as f64;
    match kind {
        ChebyshevKind::W1 => {
            if j == 0 {
                FRAC_1_PI.sqrt()
            } else {
                (2.0 * FRAC_1_PI).sqrt() * (jf * t).cos()
            }
        }
        ChebyshevKind::W2 => {
            let s = t.sin();
            let ratio = if s.abs() < SINGULAR_EPS {
                // U_j(+-1) = (+-1)^j (j + 1)
                if t < PI / 2.0 || j.is_multiple_of(2) {
                    jf + 1.0
                } else {
                    -(jf + 1.0)
                }
            } else {
                ((jf + 1.0) * t).sin() / s
            };
            (2.0 * FRAC_1_PI).sqrt() * ratio
        }
        ChebyshevKind::W3 => {
            let c = (t / 2.0).cos();
            let ratio = if c.abs() < SINGULAR_EPS {
                let v = 2.0 * jf + 1.0;
                if j.is_multiple_of(2) {
                    v
                } else {
                    -v
                }
            } else {
                ((2.0 * jf + 1.0) * t / 2.0).cos() / c
            };
            FRAC_1_PI.sqrt() * ratio
        }
        ChebyshevKind::W4 => {
            let s = (t / 2.0).sin();
            let ratio = if s.abs() < SINGULAR_EPS {
                2.0 * jf + 1.0
            } else {
                ((2.0 * jf + 1.0) * t / 2.0).sin() / s
            };
            FRAC_1_PI.sqrt() * ratio
        }
    }
}

/// Fills `out` with `p_0(t), ..., p_{count-1}(t)`.
pub(crate) fn ortho_poly_values(kind: ChebyshevKind, count: usize, t: f64, out: &mut Vec<f64>) {
    out.clear();
    out.extend((0..count).map(|j| ortho_poly(kind, j, t)));
}

/// Zeros of `p_n(w)` and the matching Gauss quadrature weights.
///
/// Index `k` is 0-based; `t_nodes` ascends so `x_nodes` descends.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSystem {
    pub kind: ChebyshevKind,
    pub n: usize,
    pub t_nodes: Vec<f64>,
    pub x_nodes: Vec<f64>,
    pub christoffel: Vec<f64>,
}

impl NodeSystem {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// Angle of the `k`-th zero (0-based) of `p_n(w)`.
pub(crate) fn node_angle(kind: ChebyshevKind, n: usize, k: usize) -> f64 {
    let nf = n as f64;
    let kk = (k + 1) as f64;
    match kind {
        ChebyshevKind::W1 => (2.0 * kk - 1.0) * PI / (2.0 * nf),
        ChebyshevKind::W2 => kk * PI / (nf + 1.0),
        ChebyshevKind::W3 => (2.0 * kk - 1.0) * PI / (2.0 * nf + 1.0),
        ChebyshevKind::W4 => 2.0 * kk * PI / (2.0 * nf + 1.0),
    }
}

pub(crate) fn christoffel_number(kind: ChebyshevKind, n: usize, t: f64) -> f64 {
    let nf = n as f64;
    match kind {
        ChebyshevKind::W1 => PI / nf,
        ChebyshevKind::W2 => PI / (nf + 1.0) * t.sin().powi(2),
        ChebyshevKind::W3 => 4.0 * PI / (2.0 * nf + 1.0) * (t / 2.0).cos().powi(2),
        ChebyshevKind::W4 => 4.0 * PI / (2.0 * nf + 1.0) * (t / 2.0).sin().powi(2),
    }
}

pub fn make_nodes(kind: ChebyshevKind, n: usize) -> Result<NodeSystem> {
    if n == 0 {
        return Err(Error::ZeroNodes);
    }
    let t_nodes: Vec<f64> = (0..n).map(|k| node_angle(kind, n, k)).collect();
    let x_nodes = t_nodes.iter().map(|t| t.cos()).collect();
    let christoffel = t_nodes.iter().map(|&t| christoffel_number(kind, n, t)).collect();
    Ok(NodeSystem {
        kind,
        n,
        t_nodes,
        x_nodes,
        christoffel,
    })
}

/// Darboux kernel `K_n(cos t, cos s) = sum_{j=0}^{n} p_j(cos t) p_j(cos s)`.
pub fn darboux_kernel(kind: ChebyshevKind, n: usize, t: f64, s: f64) -> Result<f64> {
    let t = check_angle(t)?;
    let s = check_angle(s)?;
    Ok((0..=n).map(|j| ortho_poly(kind, j, t) * ortho_poly(kind, j, s)).sum())
}
