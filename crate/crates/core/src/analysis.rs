//! Weighted Lebesgue constants, boundedness conditions and weighted sup-norm
//! errors.
//!
//! Sup norms over `|x| <= 1` are discretised on an [`EvaluationGrid`] in the
//! angle variable: equispaced angles, enriched with the nodes, the midpoints
//! between consecutive nodes and a finer split of the gaps next to the
//! endpoints, where the Lebesgue function peaks.

use std::f64::consts::PI;

use num_integer::Integer;
use rayon::prelude::*;

use crate::basis::{ChebyshevKind, NodeSystem};
use crate::error::{Error, Result};
use crate::operators::{JacobiWeight, VpInterpolant};
use crate::vp::{FundamentalSet, VpParams};

pub const DEFAULT_BASE_COUNT: usize = 4096;

/// The Lebesgue function peaks close to the endpoints, so the outermost
/// `EDGE_GAPS` gaps on each side are split into `EDGE_GAP_POINTS` parts.
const EDGE_GAPS: usize = 4;
const EDGE_GAP_POINTS: usize = 16;

/// Points closer than this are merged.
const DEDUP_TOL: f64 = 1e-14;

/// Grid points per rayon task.
const CHUNK: usize = 256;

#[derive(Clone, Debug, PartialEq)]
pub struct EvaluationGrid {
    base_count: usize,
    t_points: Vec<f64>,
}

impl EvaluationGrid {
    /// `base_count` equispaced angles in [0, pi], plus the node angles, the
    /// midpoints between consecutive nodes and the edge-gap subdivisions.
    pub fn new(base_count: usize, node_angles: &[f64]) -> Result<Self> {
        if base_count < 2 {
            return Err(Error::InvalidArgument(format!(
                "grid base count must be at least 2, got {base_count}"
            )));
        }
        let step = PI / (base_count - 1) as f64;
        let mut pts: Vec<f64> = (0..base_count).map(|i| i as f64 * step).collect();
        pts.extend_from_slice(node_angles);
        pts.extend(node_angles.windows(2).map(|w| 0.5 * (w[0] + w[1])));
        let mut edges = Vec::with_capacity(node_angles.len() + 2);
        edges.push(0.0);
        edges.extend_from_slice(node_angles);
        edges.push(PI);
        let gaps: Vec<&[f64]> = edges.windows(2).collect();
        let outer = if node_angles.is_empty() {
            0
        } else {
            EDGE_GAPS.min(gaps.len())
        };
        for w in gaps[..outer].iter().chain(&gaps[gaps.len() - outer..]) {
            for i in 1..EDGE_GAP_POINTS {
                pts.push(w[0] + (w[1] - w[0]) * i as f64 / EDGE_GAP_POINTS as f64);
            }
        }
        let mut grid = Self::from_points(pts)?;
        grid.base_count = base_count;
        Ok(grid)
    }

    pub fn for_nodes(base_count: usize, nodes: &NodeSystem) -> Result<Self> {
        Self::new(base_count, &nodes.t_nodes)
    }

    /// Arbitrary angles, clamped to [0, pi], sorted and deduplicated.
    pub fn from_points(mut pts: Vec<f64>) -> Result<Self> {
        if pts.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidArgument("grid contains non-finite angles".into()));
        }
        for t in pts.iter_mut() {
            *t = t.clamp(0.0, PI);
        }
        pts.sort_by(f64::total_cmp);
        pts.dedup_by(|a, b| (*a - *b).abs() < DEDUP_TOL);
        if pts.is_empty() {
            return Err(Error::EmptyGrid);
        }
        Ok(Self {
            base_count: 0,
            t_points: pts,
        })
    }

    pub fn base_count(&self) -> usize {
        self.base_count
    }

    pub fn points(&self) -> &[f64] {
        &self.t_points
    }

    pub fn len(&self) -> usize {
        self.t_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t_points.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LebesgueEntry {
    pub n: usize,
    pub m: usize,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LebesgueReport {
    pub kind: ChebyshevKind,
    pub weight: JacobiWeight,
    /// `None` for Lagrange interpolation.
    pub theta: Option<f64>,
    pub entries: Vec<LebesgueEntry>,
    pub sup_value: f64,
}

impl LebesgueReport {
    fn new(kind: ChebyshevKind, weight: JacobiWeight, theta: Option<f64>, entries: Vec<LebesgueEntry>) -> Self {
        let sup_value = entries.iter().map(|e| e.value).fold(f64::NEG_INFINITY, f64::max);
        Self {
            kind,
            weight,
            theta,
            entries,
            sup_value,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.value).collect()
    }
}

/// `max_t u(t) sum_k |Phi_{n,k}^m(t)| / u(t_k)` over the grid.
///
/// `m = 0` gives the Lagrange Lebesgue constant. Where `u` vanishes at an
/// endpoint the term there is 0.
pub fn lebesgue_constant(
    kind: ChebyshevKind,
    params: VpParams,
    weight: JacobiWeight,
    grid: &EvaluationGrid,
) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let set = FundamentalSet::new(kind, params)?;
    let inv_u: Vec<f64> = set.nodes().t_nodes.iter().map(|&t| 1.0 / weight.at_angle(t)).collect();
    let n = params.n();
    let value = grid
        .points()
        .par_chunks(CHUNK)
        .map_init(
            || vec![0.0; n],
            |scratch, chunk| {
                chunk
                    .iter()
                    .map(|&t| {
                        let u = weight.at_angle(t);
                        if u == 0.0 {
                            0.0
                        } else {
                            u * set.weighted_abs_sum(t, &inv_u, scratch)
                        }
                    })
                    .fold(0.0, f64::max)
            },
        )
        .reduce(|| 0.0, f64::max);
    if !value.is_finite() {
        return Err(Error::NonFinite { x: f64::NAN, value });
    }
    Ok(value)
}

pub fn lagrange_lebesgue(kind: ChebyshevKind, n: usize, weight: JacobiWeight, grid: &EvaluationGrid) -> Result<f64> {
    lebesgue_constant(kind, VpParams::lagrange(n)?, weight, grid)
}

/// Lebesgue constant on the default grid built from the nodes of `(kind, n)`.
pub fn lebesgue_constant_on_nodes(
    kind: ChebyshevKind,
    params: VpParams,
    weight: JacobiWeight,
    base_count: usize,
) -> Result<f64> {
    let nodes = crate::basis::make_nodes(kind, params.n())?;
    let grid = EvaluationGrid::for_nodes(base_count, &nodes)?;
    lebesgue_constant(kind, params, weight, &grid)
}

/// A named inequality on the Jacobi exponents and whether it holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
}

fn conditions(list: &[(&'static str, bool)]) -> Vec<Condition> {
    list.iter().map(|&(name, holds)| Condition { name, holds }).collect()
}

/// Conditions under which the VP Lebesgue constants are bounded in `n ~ m`.
pub fn vp_conditions(kind: ChebyshevKind, weight: JacobiWeight) -> Vec<Condition> {
    let (g, d) = (weight.gamma(), weight.delta());
    match kind {
        ChebyshevKind::W1 => conditions(&[("0 <= gamma <= 1", g <= 1.0), ("0 <= delta <= 1", d <= 1.0)]),
        ChebyshevKind::W2 => conditions(&[
            ("0 < gamma <= 3/2", g > 0.0 && g <= 1.5),
            ("0 < delta <= 3/2", d > 0.0 && d <= 1.5),
            ("-1 <= gamma - delta <= 1", (-1.0..=1.0).contains(&(g - d))),
        ]),
        ChebyshevKind::W3 => conditions(&[
            ("0 <= gamma <= 1", g <= 1.0),
            ("0 < delta <= 3/2", d > 0.0 && d <= 1.5),
            ("gamma - delta <= 1/2", g - d <= 0.5),
        ]),
        ChebyshevKind::W4 => conditions(&[
            ("0 < gamma <= 3/2", g > 0.0 && g <= 1.5),
            ("0 <= delta <= 1", d <= 1.0),
            ("gamma - delta >= -1/2", g - d >= -0.5),
        ]),
    }
}

/// Conditions under which Lagrange interpolation is near-best up to `log n`.
pub fn lagrange_conditions(kind: ChebyshevKind, weight: JacobiWeight) -> Vec<Condition> {
    let (g, d) = (weight.gamma(), weight.delta());
    let low = |v: f64| v <= 1.0;
    let high = |v: f64| (0.5..=1.5).contains(&v);
    match kind {
        ChebyshevKind::W1 => conditions(&[("0 <= gamma <= 1", low(g)), ("0 <= delta <= 1", low(d))]),
        ChebyshevKind::W2 => conditions(&[("1/2 <= gamma <= 3/2", high(g)), ("1/2 <= delta <= 3/2", high(d))]),
        ChebyshevKind::W3 => conditions(&[("0 <= gamma <= 1", low(g)), ("1/2 <= delta <= 3/2", high(d))]),
        ChebyshevKind::W4 => conditions(&[("1/2 <= gamma <= 3/2", high(g)), ("0 <= delta <= 1", low(d))]),
    }
}

pub fn vp_bounds_check(kind: ChebyshevKind, weight: JacobiWeight) -> bool {
    vp_conditions(kind, weight).iter().all(|c| c.holds)
}

pub fn lagrange_bounds_check(kind: ChebyshevKind, weight: JacobiWeight) -> bool {
    lagrange_conditions(kind, weight).iter().all(|c| c.holds)
}

/// `max u(x) |f(x) - interp(x)|` over the grid.
///
/// An endpoint where `u` vanishes is left out, since `f` may be unbounded there.
pub fn weighted_sup_error<F>(interp: &VpInterpolant, f: F, weight: JacobiWeight, grid: &EvaluationGrid) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    let errors = weighted_errors(interp, f, weight, grid)?;
    Ok(errors.into_iter().map(|(_, e)| e).fold(0.0, f64::max))
}

/// Pointwise `(t, u(x)|f(x) - interp(x)|)` over the grid, skipping weighted-out endpoints.
pub fn weighted_errors<F>(
    interp: &VpInterpolant,
    f: F,
    weight: JacobiWeight,
    grid: &EvaluationGrid,
) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> f64 + Sync,
{
    let pts: Vec<f64> = grid
        .points()
        .iter()
        .copied()
        .filter(|&t| !(t == 0.0 && weight.vanishes_at_right() || t == PI && weight.vanishes_at_left()))
        .collect();
    let chunks: Vec<Result<Vec<(f64, f64)>>> = pts
        .par_chunks(CHUNK)
        .map(|chunk| {
            let approx = interp.evaluate_many(chunk);
            chunk
                .iter()
                .zip(approx)
                .map(|(&t, p)| {
                    let x = t.cos();
                    let value = f(x);
                    if !value.is_finite() {
                        return Err(Error::NonFinite { x, value });
                    }
                    if !p.is_finite() {
                        return Err(Error::NonFinite { x, value: p });
                    }
                    Ok((t, weight.at_angle(t) * (value - p).abs()))
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(pts.len());
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

/// Lebesgue constants for `m = floor(theta n)` over `n_values`.
pub fn lebesgue_sweep(
    kind: ChebyshevKind,
    weight: JacobiWeight,
    theta: f64,
    n_values: &[usize],
    base_count: usize,
) -> Result<LebesgueReport> {
    if n_values.is_empty() {
        return Err(Error::InvalidArgument("empty list of n values".into()));
    }
    let params = n_values
        .iter()
        .map(|&n| {
            if n < 2 {
                return Err(Error::InvalidArgument(format!("n = {n} must be at least 2")));
            }
            let p = VpParams::from_theta(n, theta)?;
            if p.m() == 0 {
                return Err(Error::DegenerateFilter { theta, n });
            }
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?;
    let entries = params
        .into_par_iter()
        .map(|p| {
            Ok(LebesgueEntry {
                n: p.n(),
                m: p.m(),
                value: lebesgue_constant_on_nodes(kind, p, weight, base_count)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LebesgueReport::new(kind, weight, Some(theta), entries))
}

/// Lagrange Lebesgue constants over `n_values`.
pub fn lagrange_sweep(
    kind: ChebyshevKind,
    weight: JacobiWeight,
    n_values: &[usize],
    base_count: usize,
) -> Result<LebesgueReport> {
    if n_values.is_empty() {
        return Err(Error::InvalidArgument("empty list of n values".into()));
    }
    let entries = n_values
        .par_iter()
        .map(|&n| {
            Ok(LebesgueEntry {
                n,
                m: 0,
                value: lebesgue_constant_on_nodes(kind, VpParams::lagrange(n)?, weight, base_count)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LebesgueReport::new(kind, weight, None, entries))
}

/// Lebesgue constants along `n = 2 l nu`, `m = 2 l mu` for coprime `0 < mu < nu`.
pub fn divergence_probe(
    kind: ChebyshevKind,
    weight: JacobiWeight,
    mu: usize,
    nu: usize,
    l_values: &[usize],
    base_count: usize,
) -> Result<LebesgueReport> {
    if mu == 0 || mu >= nu || mu.gcd(&nu) != 1 {
        return Err(Error::DegreeSequence { mu, nu });
    }
    if l_values.is_empty() || l_values[0] == 0 || l_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "l values must be positive and strictly increasing".into(),
        ));
    }
    let entries = l_values
        .par_iter()
        .map(|&l| {
            let params = VpParams::new(2 * l * nu, 2 * l * mu)?;
            Ok(LebesgueEntry {
                n: params.n(),
                m: params.m(),
                value: lebesgue_constant_on_nodes(kind, params, weight, base_count)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LebesgueReport::new(kind, weight, Some(mu as f64 / nu as f64), entries))
}
