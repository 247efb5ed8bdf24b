//! Rectangles in the tensor cube of a staircase, as 4-ary certificates `(R(a,b); ϱ_m, ϱ_m, ϱ_m)`.
//!
//! With `a ≥ b` and `a < m`, put `y = 2m − 2a + 1` and `x = 2a − m − 1`, so `x + y = m` and
//! `ϱ_m = (R(x,y) +_H ϱ_y) +_V ϱ_x`. The rectangle splits the same way:
//! `R(a,b) = (R(x,y) +_H R(m−a+1, y)) +_V R(a, b−y)`, and the three pieces are a self-quadruple,
//! a rectangle in the cube of `ϱ_y` and a rectangle in the cube of `ϱ_x`.

use std::sync::Arc;

use super::certificate::{self as cert, Certificate};
use crate::partition::{rectangle, staircase_index};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubeError {
    #[error("{0}x{1} rectangle does not have triangular size")]
    NotTriangular(usize, usize),
}

const ALL: [usize; 4] = [0, 1, 2, 3];

/// Certificate for `(R(a,b); ϱ_m, ϱ_m, ϱ_m)` where `ab = m(m+1)/2`.
pub fn prove_rectangle_cube(a: usize, b: usize) -> Result<Arc<Certificate>, CubeError> {
    let m = staircase_index(a * b).filter(|&m| m > 0).ok_or(CubeError::NotTriangular(a, b))?;
    Ok(build(a, b, m))
}

fn build(a: usize, b: usize, m: usize) -> Arc<Certificate> {
    if a < b {
        let c = build(b, a, m);
        return cert::conjugate(&c, &ALL).expect("four coordinates");
    }
    let target = rectangle(a, b);
    if a >= m {
        return cert::dominance_staircase(m, &target, 3).expect("wide rectangles are comparable to the staircase");
    }
    let y = 2 * m - 2 * a + 1;
    let x = 2 * a - m - 1;
    let self_piece = cert::fourfold_self(&rectangle(x, y));
    let upper = build(m - a + 1, y, y);
    let lower = build(a, b - y, x);
    let top = cert::combine_h(&self_piece, &upper).expect("same arity");
    cert::combine_vvh(&top, &lower, &ALL).expect("four vertical coordinates")
}
