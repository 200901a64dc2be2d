//! VP and Lagrange interpolation operators acting on node values.

use crate::basis::{angle_of, check_angle, make_nodes, ortho_poly, ortho_poly_values, ChebyshevKind};
use crate::error::{Error, Result};
use crate::vp::{q_from_p, VpParams};

/// Jacobi weight `u(x) = (1 - x)^gamma (1 + x)^delta` with non-negative exponents.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiWeight {
    gamma: f64,
    delta: f64,
}

impl JacobiWeight {
    pub fn new(gamma: f64, delta: f64) -> Result<Self> {
        if !(gamma >= 0.0 && delta >= 0.0) || !gamma.is_finite() || !delta.is_finite() {
            return Err(Error::NegativeExponent { gamma, delta });
        }
        Ok(Self { gamma, delta })
    }

    /// `u = 1`.
    pub fn unit() -> Self {
        Self { gamma: 0.0, delta: 0.0 }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `u(cos t) = 2^(gamma+delta) sin^(2 gamma)(t/2) cos^(2 delta)(t/2)`.
    pub fn at_angle(&self, t: f64) -> f64 {
        let (s, c) = (t / 2.0).sin_cos();
        // cos(pi/2) is not exactly zero in floating point
        let c = if t >= std::f64::consts::PI { 0.0 } else { c };
        2f64.powf(self.gamma + self.delta) * s.powf(2.0 * self.gamma) * c.abs().powf(2.0 * self.delta)
    }

    pub fn at(&self, x: f64) -> f64 {
        self.at_angle(angle_of(x))
    }

    /// `u(1) = 0`, i.e. the endpoint `t = 0` is weighted out.
    pub fn vanishes_at_right(&self) -> bool {
        self.gamma > 0.0
    }

    /// `u(-1) = 0`, i.e. the endpoint `t = pi` is weighted out.
    pub fn vanishes_at_left(&self) -> bool {
        self.delta > 0.0
    }
}

/// `V_n^m f` (or `L_n f` when `m = 0`) built from the values of `f` at the nodes.
///
/// Stores the q-basis coefficients `c_j = sum_k f(x_k) lambda_k p_j(t_k)`, so
/// evaluation is a single O(n + m) sum `sum_j c_j q_j(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct VpInterpolant {
    kind: ChebyshevKind,
    params: VpParams,
    node_values: Vec<f64>,
    coeffs: Vec<f64>,
}

pub fn vp_interpolate(kind: ChebyshevKind, params: VpParams, node_values: &[f64]) -> Result<VpInterpolant> {
    let n = params.n();
    if node_values.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: node_values.len(),
        });
    }
    let nodes = make_nodes(kind, n)?;
    let weighted: Vec<f64> = node_values.iter().zip(&nodes.christoffel).map(|(f, l)| f * l).collect();
    let coeffs = (0..n)
        .map(|j| {
            nodes
                .t_nodes
                .iter()
                .zip(&weighted)
                .map(|(&tk, fl)| fl * ortho_poly(kind, j, tk))
                .sum()
        })
        .collect();
    Ok(VpInterpolant {
        kind,
        params,
        node_values: node_values.to_vec(),
        coeffs,
    })
}

/// `L_n f`, the `m = 0` interpolant.
pub fn lagrange_interpolate(kind: ChebyshevKind, n: usize, node_values: &[f64]) -> Result<VpInterpolant> {
    vp_interpolate(kind, VpParams::lagrange(n)?, node_values)
}

impl VpInterpolant {
    pub fn kind(&self) -> ChebyshevKind {
        self.kind
    }

    pub fn params(&self) -> VpParams {
        self.params
    }

    pub fn node_values(&self) -> &[f64] {
        &self.node_values
    }

    /// Coefficients in the q-basis, `j = 0..n-1`.
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Value at `cos t`; `t` is clamped into [0, pi].
    pub fn evaluate(&self, t: f64) -> f64 {
        let mut p = Vec::with_capacity(self.params.basis_len());
        self.evaluate_with(t, &mut p)
    }

    /// Checked variant of [`evaluate`](Self::evaluate).
    pub fn try_evaluate(&self, t: f64) -> Result<f64> {
        Ok(self.evaluate(check_angle(t)?))
    }

    pub fn evaluate_x(&self, x: f64) -> f64 {
        self.evaluate(angle_of(x))
    }

    /// Evaluates at many angles, reusing one scratch buffer.
    pub fn evaluate_many(&self, ts: &[f64]) -> Vec<f64> {
        let mut p = Vec::with_capacity(self.params.basis_len());
        ts.iter().map(|&t| self.evaluate_with(t, &mut p)).collect()
    }

    fn evaluate_with(&self, t: f64, p: &mut Vec<f64>) -> f64 {
        let t = t.clamp(0.0, std::f64::consts::PI);
        ortho_poly_values(self.kind, self.params.basis_len(), t, p);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * q_from_p(self.params, j, p))
            .sum()
    }
}
