//! The de la Vallee Poussin filter, the modified q-basis and the fundamental
//! VP / Lagrange polynomials.
//!
//! Fundamental polynomials are available in several equivalent forms:
//!
//! * [`fundamental_vp_sum`]: `lambda_k * sum_j p_j(t_k) q_j(t)`, exact everywhere, O(n).
//! * [`fundamental_vp_darboux_mean`]: delayed mean of Darboux kernels, O(n + m).
//! * [`fundamental_vp_trig`]: closed trigonometric form, O(1) away from the nodes.
//!
//! [`FundamentalSet`] precomputes the per-node constants of the closed forms
//! and evaluates all `n` fundamental polynomials at one angle in O(n).

use std::f64::consts::FRAC_1_PI;

use crate::basis::{
    check_angle, christoffel_number, make_nodes, node_angle, ortho_poly, ortho_poly_values, ChebyshevKind, NodeSystem,
};
use crate::error::{Error, Result};

/// Distance from a node (radians) under which closed forms delegate to the sum form.
pub const SWITCH_EPS: f64 = 1e-6;

/// Degree parameters: `n` nodes, filter half-width `m`, with `0 <= m < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VpParams {
    n: usize,
    m: usize,
}

impl VpParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroNodes);
        }
        if m >= n {
            return Err(Error::FilterWidth { n, m });
        }
        Ok(Self { n, m })
    }

    /// `m = floor(theta * n)`.
    pub fn from_theta(n: usize, theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::Theta(theta));
        }
        let m = (theta * n as f64 + 1e-9).floor() as usize;
        Self::new(n, m)
    }

    /// The Lagrange limit `m = 0`.
    pub fn lagrange(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of orthonormal polynomials needed to evaluate the q-basis.
    pub(crate) fn basis_len(&self) -> usize {
        self.n + self.m
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FilterCoefficients {
    pub params: VpParams,
    pub mu: Vec<f64>,
}

/// Trapezoidal VP filter: 1 up to degree `n - m`, then linear down to 0 at `n + m`.
///
/// For `m = 0` the filter is `n` ones.
pub fn filter_coefficients(params: VpParams) -> FilterCoefficients {
    let (n, m) = (params.n, params.m);
    let mu = if m == 0 {
        vec![1.0; n]
    } else {
        (0..n + m)
            .map(|j| {
                if j <= n - m {
                    1.0
                } else {
                    (n + m - j) as f64 / (2 * m) as f64
                }
            })
            .collect()
    };
    FilterCoefficients { params, mu }
}

/// Blend weights of `q_j = a p_j - b p_{2n-j}`; `None` outside the ramp.
#[inline]
fn ramp_weights(params: VpParams, j: usize) -> Option<(f64, f64)> {
    let (n, m) = (params.n, params.m);
    if m == 0 || j + m <= n {
        None
    } else {
        let two_m = (2 * m) as f64;
        Some(((m + n - j) as f64 / two_m, (m + j - n) as f64 / two_m))
    }
}

/// `q_j` from a slice holding `p_0 .. p_{n+m-1}` at the same point.
#[inline]
pub(crate) fn q_from_p(params: VpParams, j: usize, p: &[f64]) -> f64 {
    match ramp_weights(params, j) {
        None => p[j],
        Some((a, b)) => a * p[j] - b * p[2 * params.n - j],
    }
}

/// `q_{n,j}^m(w, cos t)` for `0 <= j < n`.
pub fn q_poly_eval(kind: ChebyshevKind, params: VpParams, j: usize, t: f64) -> Result<f64> {
    if j >= params.n {
        return Err(Error::BasisIndex { j, n: params.n });
    }
    let t = check_angle(t)?;
    Ok(match ramp_weights(params, j) {
        None => ortho_poly(kind, j, t),
        Some((a, b)) => a * ortho_poly(kind, j, t) - b * ortho_poly(kind, 2 * params.n - j, t),
    })
}

fn check_node(k: usize, n: usize) -> Result<()> {
    if k >= n {
        Err(Error::NodeIndex { k, n })
    } else {
        Ok(())
    }
}

/// Sum form at a validated angle; `k` is 0-based.
fn vp_sum_unchecked(kind: ChebyshevKind, params: VpParams, k: usize, t: f64) -> f64 {
    let n = params.n;
    let tk = node_angle(kind, n, k);
    let lambda = christoffel_number(kind, n, tk);
    let mut p = Vec::with_capacity(params.basis_len());
    ortho_poly_values(kind, params.basis_len(), t, &mut p);
    let s: f64 = (0..n).map(|j| ortho_poly(kind, j, tk) * q_from_p(params, j, &p)).sum();
    lambda * s
}

/// `Phi_{n,k}^m(cos t) = lambda_k sum_{j<n} p_j(t_k) q_j(t)`, `k` 0-based.
///
/// With `m = 0` this is the fundamental Lagrange polynomial.
pub fn fundamental_vp_sum(kind: ChebyshevKind, params: VpParams, k: usize, t: f64) -> Result<f64> {
    check_node(k, params.n)?;
    let t = check_angle(t)?;
    Ok(vp_sum_unchecked(kind, params, k, t))
}

/// `l_{n,k}(cos t) = lambda_k sum_{j<n} p_j(t_k) p_j(t)`, `k` 0-based.
pub fn fundamental_lagrange(kind: ChebyshevKind, n: usize, k: usize, t: f64) -> Result<f64> {
    fundamental_vp_sum(kind, VpParams::lagrange(n)?, k, t)
}

/// `(lambda_k / 2m) sum_{r=n-m}^{n+m-1} K_r(t, t_k)`, valid for `m >= 1`.
pub fn fundamental_vp_darboux_mean(kind: ChebyshevKind, params: VpParams, k: usize, t: f64) -> Result<f64> {
    if params.m == 0 {
        return Err(Error::CompactFormulaNeedsFilter);
    }
    check_node(k, params.n)?;
    let t = check_angle(t)?;
    let (n, m) = (params.n, params.m);
    let tk = node_angle(kind, n, k);
    let mut kernel = 0.0;
    let mut total = 0.0;
    for r in 0..n + m {
        kernel += ortho_poly(kind, r, t) * ortho_poly(kind, r, tk);
        if r + m >= n {
            total += kernel;
        }
    }
    Ok(christoffel_number(kind, n, tk) / (2 * m) as f64 * total)
}

/// `p_n(w, cos t)` with the normalising constant stripped, i.e. `cos(nt)`,
/// `sin((n+1)t)/sin t`, `cos((2n+1)t/2)/cos(t/2)` or `sin((2n+1)t/2)/sin(t/2)`.
#[inline]
fn stripped_pn(kind: ChebyshevKind, n: usize, t: f64) -> f64 {
    let p = ortho_poly(kind, n, t);
    match kind {
        ChebyshevKind::W1 if n == 0 => p * std::f64::consts::PI.sqrt(),
        ChebyshevKind::W1 | ChebyshevKind::W2 => p / (2.0 * FRAC_1_PI).sqrt(),
        ChebyshevKind::W3 | ChebyshevKind::W4 => p / FRAC_1_PI.sqrt(),
    }
}

/// Closed form of `Phi_{n,k}^m(cos t)` for `0 < m < n`; `k` 0-based.
///
/// Within [`SWITCH_EPS`] of the node (or where `sin((t + t_k)/2)` is that
/// small) the value comes from [`fundamental_vp_sum`].
pub fn fundamental_vp_trig(kind: ChebyshevKind, params: VpParams, k: usize, t: f64) -> Result<f64> {
    if params.m == 0 {
        return Err(Error::CompactFormulaNeedsFilter);
    }
    check_node(k, params.n)?;
    let t = check_angle(t)?;
    let tk = node_angle(kind, params.n, k);
    let mf = params.m as f64;
    let diff = t - tk;
    let sum_half = ((t + tk) / 2.0).sin();
    if diff.abs() < SWITCH_EPS || sum_half.abs() < SWITCH_EPS {
        return Ok(vp_sum_unchecked(kind, params, k, t));
    }
    let psi = (mf * diff).sin() / (diff / 2.0).sin().powi(2) - (mf * (t + tk)).sin() / sum_half.powi(2);
    Ok(vp_node_coefficient(kind, params, k, tk) * stripped_pn(kind, params.n, t) * psi)
}

/// Node-dependent constant in front of the closed form; `k` 0-based.
fn vp_node_coefficient(kind: ChebyshevKind, params: VpParams, k: usize, tk: f64) -> f64 {
    let nf = params.n as f64;
    let mf = params.m as f64;
    // (-1)^k with the 1-based node index
    let sign = if k.is_multiple_of(2) { -1.0 } else { 1.0 };
    sign * match kind {
        ChebyshevKind::W1 => 1.0 / (4.0 * mf * nf),
        ChebyshevKind::W2 => tk.sin() / (4.0 * mf * (nf + 1.0)),
        ChebyshevKind::W3 => (tk / 2.0).cos() / (2.0 * mf * (2.0 * nf + 1.0)),
        ChebyshevKind::W4 => (tk / 2.0).sin() / (2.0 * mf * (2.0 * nf + 1.0)),
    }
}

/// `1 / p_n'(x_k)`, the derivative taken in x with the normalisation of
/// [`stripped_pn`].
fn lagrange_node_coefficient(kind: ChebyshevKind, n: usize, tk: f64) -> f64 {
    let nf = n as f64;
    let h = 2.0 * nf + 1.0;
    // d/dt of the stripped p_n at its zero t_k
    let dt = match kind {
        ChebyshevKind::W1 => -nf * (nf * tk).sin(),
        ChebyshevKind::W2 => (nf + 1.0) * ((nf + 1.0) * tk).cos() / tk.sin(),
        ChebyshevKind::W3 => -(h / 2.0) * (h * tk / 2.0).sin() / (tk / 2.0).cos(),
        ChebyshevKind::W4 => (h / 2.0) * (h * tk / 2.0).cos() / (tk / 2.0).sin(),
    };
    // dx/dt = -sin t
    -tk.sin() / dt
}

/// Closed product form `p_n(x) / ((x - x_k) p_n'(x_k))` of the fundamental
/// Lagrange polynomial; `k` 0-based. Delegates to the sum form near the node.
pub fn fundamental_lagrange_compact(kind: ChebyshevKind, n: usize, k: usize, t: f64) -> Result<f64> {
    let params = VpParams::lagrange(n)?;
    check_node(k, n)?;
    let t = check_angle(t)?;
    let tk = node_angle(kind, n, k);
    if (t - tk).abs() < SWITCH_EPS {
        return Ok(vp_sum_unchecked(kind, params, k, t));
    }
    let dx = -2.0 * ((t + tk) / 2.0).sin() * ((t - tk) / 2.0).sin();
    Ok(stripped_pn(kind, n, t) * lagrange_node_coefficient(kind, n, tk) / dx)
}

/// Precomputed per-node constants for evaluating all fundamental polynomials
/// of one `(kind, n, m)` at an angle in O(n).
///
/// `m = 0` selects the Lagrange product form, `m >= 1` the VP closed form.
#[derive(Clone, Debug)]
pub struct FundamentalSet {
    kind: ChebyshevKind,
    params: VpParams,
    nodes: NodeSystem,
    coef: Vec<f64>,
    sin_half: Vec<f64>,
    cos_half: Vec<f64>,
    sin_m: Vec<f64>,
    cos_m: Vec<f64>,
}

impl FundamentalSet {
    pub fn new(kind: ChebyshevKind, params: VpParams) -> Result<Self> {
        let nodes = make_nodes(kind, params.n)?;
        let mf = params.m as f64;
        let t = &nodes.t_nodes;
        let coef = if params.m == 0 {
            t.iter()
                .map(|&tk| lagrange_node_coefficient(kind, params.n, tk))
                .collect()
        } else {
            t.iter()
                .enumerate()
                .map(|(k, &tk)| vp_node_coefficient(kind, params, k, tk))
                .collect()
        };
        Ok(Self {
            kind,
            params,
            sin_half: t.iter().map(|&tk| (tk / 2.0).sin()).collect(),
            cos_half: t.iter().map(|&tk| (tk / 2.0).cos()).collect(),
            sin_m: t.iter().map(|&tk| (mf * tk).sin()).collect(),
            cos_m: t.iter().map(|&tk| (mf * tk).cos()).collect(),
            coef,
            nodes,
        })
    }

    pub fn kind(&self) -> ChebyshevKind {
        self.kind
    }

    pub fn params(&self) -> VpParams {
        self.params
    }

    pub fn nodes(&self) -> &NodeSystem {
        &self.nodes
    }

    /// Writes `Phi_{n,k}^m(cos t)` (or `l_{n,k}` when `m = 0`) for every node
    /// into `out`, which must have length `n`. `t` must lie in [0, pi].
    pub fn eval_all(&self, t: f64, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.params.n);
        let (sh, ch) = (t / 2.0).sin_cos();
        let common = stripped_pn(self.kind, self.params.n, t);
        let mut near: Option<usize> = None;

        if self.params.n == 1 {
            out[0] = 1.0;
            return;
        }
        if self.params.m == 0 {
            for (k, o) in out.iter_mut().enumerate() {
                if (t - self.nodes.t_nodes[k]).abs() < SWITCH_EPS {
                    near = Some(k);
                    *o = 0.0;
                    continue;
                }
                let d_minus = sh * self.cos_half[k] - ch * self.sin_half[k];
                let d_plus = sh * self.cos_half[k] + ch * self.sin_half[k];
                *o = common * self.coef[k] / (-2.0 * d_plus * d_minus);
            }
        } else {
            let (smt, cmt) = (self.params.m as f64 * t).sin_cos();
            for (k, o) in out.iter_mut().enumerate() {
                let d_minus = sh * self.cos_half[k] - ch * self.sin_half[k];
                let d_plus = sh * self.cos_half[k] + ch * self.sin_half[k];
                if (t - self.nodes.t_nodes[k]).abs() < SWITCH_EPS || d_plus.abs() < SWITCH_EPS {
                    near = Some(k);
                    *o = 0.0;
                    continue;
                }
                let s_minus = smt * self.cos_m[k] - cmt * self.sin_m[k];
                let s_plus = smt * self.cos_m[k] + cmt * self.sin_m[k];
                let psi = s_minus / (d_minus * d_minus) - s_plus / (d_plus * d_plus);
                *o = self.coef[k] * common * psi;
            }
        }
        // nodes are at least pi/(2n+1) apart, so at most one is this close
        if let Some(k) = near {
            out[k] = vp_sum_unchecked(self.kind, self.params, k, t);
        }
    }

    /// `sum_k weights[k] * |Phi_k(cos t)|`, using `scratch` of length `n`.
    pub fn weighted_abs_sum(&self, t: f64, weights: &[f64], scratch: &mut [f64]) -> f64 {
        self.eval_all(t, scratch);
        scratch.iter().zip(weights).map(|(phi, w)| phi.abs() * w).sum()
    }
}
