//! Limit shapes, rescaled profiles and column statistics.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitShape {
    /// `(2/π)(x·arcsin(x/2) + √(4 − x²))` on `|x| ≤ 2`, `|x|` outside.
    PlancherelRussian,
    /// `(1/b)·log(e^{−bx} + e^{bx})` with `b = π/(2√6)`.
    UniformRussian,
    /// `y` with `e^{−πx/√6} + e^{−πy/√6} = 1`, for `x > 0`.
    UniformFrench,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ShapeError {
    #[error("{0:?} is undefined at x = {1}")]
    Domain(LimitShape, f64),
    #[error("the empty partition has no rescaled profile")]
    Empty,
}

/// `π/(2√6)`.
pub fn uniform_rate() -> f64 {
    PI / (2.0 * 6f64.sqrt())
}

/// Evaluates a limit shape in double precision.
pub fn limit_shape_eval(shape: LimitShape, x: f64) -> Result<f64, ShapeError> {
    if !x.is_finite() {
        return Err(ShapeError::Domain(shape, x));
    }
    match shape {
        LimitShape::PlancherelRussian => {
            if x.abs() >= 2.0 {
                Ok(x.abs())
            } else {
                Ok((2.0 / PI) * (x * (x / 2.0).asin() + (4.0 - x * x).sqrt()))
            }
        }
        LimitShape::UniformRussian => {
            let b = uniform_rate();
            // log(e^{−bx} + e^{bx}) = b|x| + log(1 + e^{−2b|x|})
            let t = b * x.abs();
            Ok((t + (-2.0 * t).exp().ln_1p()) / b)
        }
        LimitShape::UniformFrench => {
            if x <= 0.0 {
                return Err(ShapeError::Domain(shape, x));
            }
            let c = PI / 6f64.sqrt();
            Ok(-(-(-c * x).exp()).ln_1p() / c)
        }
    }
}

/// Corners of the boundary of `λ` in Russian coordinates, scaled to area 2: `(u, v)` with
/// `u = (x − y)/√n`, `v = (x + y)/√n`, where `x` runs along rows and `y` along columns.
pub fn russian_profile(lambda: &Partition) -> Vec<(f64, f64)> {
    let n = lambda.size() as f64;
    let s = n.sqrt();
    let rows = lambda.parts();
    let mut pts = vec![(0.0, rows.len() as f64)];
    for i in (0..rows.len()).rev() {
        let x = rows[i] as f64;
        pts.push((x, (i + 1) as f64));
        pts.push((x, i as f64));
    }
    pts.dedup();
    pts.into_iter().map(|(x, y)| ((x - y) / s, (x + y) / s)).collect()
}

/// `sup_u |f_λ(u) − f(u)|` for a Russian limit shape `f`.
///
/// On each segment of the profile the slope is `±1` while both limit shapes have slopes strictly
/// inside `(−1, 1)`, so the difference is monotone there; outside the diagram `f − |u|` decreases
/// in `|u|`. The supremum is therefore attained at a corner.
pub fn rescaled_sup_distance(lambda: &Partition, shape: LimitShape) -> Result<f64, ShapeError> {
    if lambda.is_empty() {
        return Err(ShapeError::Empty);
    }
    if shape == LimitShape::UniformFrench {
        return Err(ShapeError::Domain(shape, f64::NAN));
    }
    let mut best: f64 = 0.0;
    for (u, v) in russian_profile(lambda) {
        best = best.max((v - limit_shape_eval(shape, u)?).abs());
    }
    Ok(best)
}

/// `λ₁/√n` and `λ'₁/√n`.
pub fn rescaled_length_height(lambda: &Partition) -> (f64, f64) {
    let s = (lambda.size() as f64).sqrt();
    if s == 0.0 {
        return (0.0, 0.0);
    }
    (lambda.first() as f64 / s, lambda.len() as f64 / s)
}

/// Columns ascending `a_1 ≤ a_2 ≤ …`: `a_1 = 1` and `a_k ≤ ⌈β·Σ_{j≤k} a_j⌉` for every `k`.
pub fn beta_sum_flexible(lambda: &Partition, beta: f64) -> bool {
    let mut cols = lambda.columns();
    cols.reverse();
    if cols.first() != Some(&1) {
        return false;
    }
    let mut sum = 0usize;
    cols.iter().all(|&a| {
        sum += a;
        a as f64 <= (beta * sum as f64).ceil()
    })
}

/// `|{i ≥ 1 : λ_i − i ≥ w}|`, with `λ_i = 0` past the last row.
pub fn descent_tail_count(lambda: &Partition, w: i64) -> usize {
    let len = lambda.len() as i64;
    let inside = lambda.parts().iter().enumerate().filter(|(i, &r)| r as i64 - (*i as i64 + 1) >= w).count();
    let outside = if w <= -(len + 1) { (-w - len) as usize } else { 0 };
    inside + outside
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::staircase;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn shape_values() {
        assert!(close(limit_shape_eval(LimitShape::PlancherelRussian, 0.0).unwrap(), 4.0 / PI));
        assert!(close(limit_shape_eval(LimitShape::PlancherelRussian, 2.0).unwrap(), 2.0));
        assert!(close(limit_shape_eval(LimitShape::PlancherelRussian, -3.5).unwrap(), 3.5));
        let b = uniform_rate();
        assert!(close(limit_shape_eval(LimitShape::UniformRussian, 0.0).unwrap(), 2f64.ln() / b));
        for x in [-10.0, -1.0, 0.3, 5.0, 40.0] {
            for s in [LimitShape::PlancherelRussian, LimitShape::UniformRussian] {
                assert!(limit_shape_eval(s, x).unwrap() >= f64::abs(x) - 1e-12);
            }
        }
        let y = limit_shape_eval(LimitShape::UniformFrench, 1.0).unwrap();
        let c = PI / 6f64.sqrt();
        assert!(close((-c).exp() + (-c * y).exp(), 1.0));
        assert!(limit_shape_eval(LimitShape::UniformFrench, 0.0).is_err());
    }

    #[test]
    fn profiles() {
        let p = russian_profile(&Partition::new(vec![1]));
        assert_eq!(p.first(), Some(&(-1.0, 1.0)));
        assert_eq!(p.last(), Some(&(1.0, 1.0)));
        assert!(p.contains(&(0.0, 2.0)));
        let d = rescaled_sup_distance(&Partition::new(vec![1]), LimitShape::PlancherelRussian).unwrap();
        assert!(d > 0.0 && d.is_finite());
        assert!(rescaled_sup_distance(&staircase(30), LimitShape::PlancherelRussian).unwrap() > 0.1);
    }

    #[test]
    fn flexibility_and_tails() {
        assert!(beta_sum_flexible(&Partition::new(vec![2, 1]), 1.0));
        assert!(!beta_sum_flexible(&Partition::new(vec![2, 2]), 1.0));
        assert!(beta_sum_flexible(&Partition::new(vec![6]), 0.01));
        assert!(!beta_sum_flexible(&Partition::new(vec![3, 1, 1]), 0.1));
        assert_eq!(descent_tail_count(&staircase(4), 0), 2);
        assert_eq!(descent_tail_count(&Partition::new(vec![7]), 6), 1);
        assert_eq!(descent_tail_count(&Partition::new(vec![7]), 7), 0);
        assert_eq!(descent_tail_count(&Partition::new(vec![2]), -3), 3);
    }
}
