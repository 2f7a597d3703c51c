use num_complex::Complex64;

use super::engine::Engine;
use super::Field;
use crate::error::{Error, Result};
use crate::specialfn::{Flag, Flags, SeriesParams};
use crate::zetavalues::{dedekind_zeta_factored, riemann_zeta};

#[derive(Debug, Clone, PartialEq)]
pub struct WiltonReport {
    /// 0 for Q, otherwise the field discriminant.
    pub field_disc: i64,
    pub u: Complex64,
    pub v: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// |lhs - rhs|.
    pub residual: f64,
    pub truncation_m: usize,
    /// Upper bound on the omitted part of the m-sums; infinite when the
    /// series are not known to converge.
    pub tail_estimate: f64,
    /// Tail model included in `rhs` (zero when none is available).
    pub tail_model: Complex64,
    pub constant_term: Complex64,
    pub sum_u: Complex64,
    pub sum_v: Complex64,
    /// Accumulated error estimates of the special-function evaluations.
    pub inner_error: f64,
    /// |term_m| at m = 1, 2, 4, ... up to M.
    pub per_term_log: Vec<(usize, f64)>,
    pub flags: Flags,
}

fn lhs(field: Field, u: Complex64, v: Complex64) -> Result<Complex64> {
    Ok(match field {
        Field::Rational => riemann_zeta(u)?.value * riemann_zeta(v)?.value,
        Field::Quadratic(d) => dedekind_zeta_factored(d, u)?.value * dedekind_zeta_factored(d, v)?.value,
    })
}

pub fn verify(field_disc: i64, u: Complex64, v: Complex64, m: usize, p: &SeriesParams) -> Result<WiltonReport> {
    let mut reports = convergence_sweep(field_disc, u, v, &[m], p)?;
    Ok(reports.remove(0))
}

/// One report per truncation point, computed in a single pass over m.
pub fn convergence_sweep(field_disc: i64, u: Complex64, v: Complex64, m_list: &[usize], p: &SeriesParams) -> Result<Vec<WiltonReport>> {
    if m_list.is_empty() {
        return Err(Error::domain("M list is empty"));
    }
    if m_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("M list must be strictly increasing"));
    }
    let field = Field::from_disc(field_disc)?;
    let m_max = *m_list.last().unwrap();
    let engine = Engine::new(field, u, v, m_max, p)?;
    let lhs = lhs(field, u, v)?;
    let mut state = engine.start();
    let mut log = Vec::new();
    let mut next_log = 1;
    let mut out = Vec::with_capacity(m_list.len());
    for &m in m_list {
        while next_log <= m {
            engine.advance(&mut state, next_log)?;
            log.push((next_log, state.last_term));
            next_log *= 2;
        }
        engine.advance(&mut state, m)?;
        let (model, bound) = engine.tail(&state)?;
        let rhs = engine.constant + state.sum_u + state.sum_v + model;
        let mut flags = state.flags;
        if !bound.is_finite() {
            flags.insert(Flag::NonConvergent);
        }
        out.push(WiltonReport {
            field_disc,
            u,
            v,
            lhs,
            rhs,
            residual: (lhs - rhs).norm(),
            truncation_m: m,
            tail_estimate: bound,
            tail_model: model,
            constant_term: engine.constant,
            sum_u: state.sum_u,
            sum_v: state.sum_v,
            inner_error: state.inner_err + engine.constant_err,
            per_term_log: log.clone(),
            flags,
        });
    }
    Ok(out)
}

/// Qualitative behaviour of residuals over increasing M.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    StrictlyDecreasing,
    StrictlyIncreasing,
    /// Residuals stay within a factor 1.5 of each other.
    Plateau,
    Oscillating,
}

impl Trend {
    pub fn name(self) -> &'static str {
        match self {
            Trend::StrictlyDecreasing => "decreasing",
            Trend::StrictlyIncreasing => "increasing",
            Trend::Plateau => "plateau",
            Trend::Oscillating => "oscillating",
        }
    }
}

pub fn classify_trend(reports: &[WiltonReport]) -> Trend {
    let r: Vec<f64> = reports.iter().map(|x| x.residual).collect();
    if r.windows(2).all(|w| w[1] < w[0]) && r.len() > 1 {
        return Trend::StrictlyDecreasing;
    }
    if r.windows(2).all(|w| w[1] > w[0]) && r.len() > 1 {
        return Trend::StrictlyIncreasing;
    }
    let lo = r.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = r.iter().cloned().fold(0.0, f64::max);
    if hi <= 1.5 * lo {
        Trend::Plateau
    } else {
        Trend::Oscillating
    }
}
