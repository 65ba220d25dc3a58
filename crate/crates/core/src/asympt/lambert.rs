//! Principal branch of the Lambert W function on the reals.

use crate::error::{Error, Result};

const MAX_ITER: usize = 50;
const INV_E: f64 = 1.0 / std::f64::consts::E;

/// `W(x)` on the principal branch, i.e. the `w >= -1` with `w e^w = x`.
pub fn lambert_w(x: f64) -> Result<f64> {
    if x.is_nan() || x < -INV_E - 1e-15 {
        return Err(Error::Domain(format!("lambert_w({x}) needs x >= -1/e")));
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x <= -INV_E {
        return Ok(-1.0);
    }
    let mut w = initial_guess(x);
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1.abs() < 1e-300 {
            break;
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        let next = w - step;
        if !next.is_finite() {
            break;
        }
        if (next - w).abs() <= 4.0 * f64::EPSILON * (1.0 + next.abs()) {
            return Ok(next);
        }
        w = next;
    }
    // Halley can stall one ulp away from the root near the branch point.
    assert!(
        (w * w.exp() - x).abs() <= 1e-10 * x.abs().max(1e-300),
        "lambert_w({x}) failed to converge"
    );
    Ok(w)
}

fn initial_guess(x: f64) -> f64 {
    if x < -0.25 {
        // branch-point expansion in p = sqrt(2(ex + 1))
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x <= std::f64::consts::E {
        // W(x) = x - x^2 + 3x^3/2 - ... near 0, blended with ln(1 + x)
        if x.abs() < 0.1 {
            x - x * x + 1.5 * x * x * x
        } else {
            (1.0 + x).ln() * 0.8
        }
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    }
}

/// `W(e^l)` for any real `l`, without forming `e^l`.
///
/// Large `l` is handled by solving `w + ln w = l` directly.
pub fn lambert_w_ln(l: f64) -> Result<f64> {
    if l.is_nan() {
        return Err(Error::Domain("lambert_w_ln(NaN)".into()));
    }
    if l < 500.0 {
        return lambert_w(l.exp());
    }
    if l.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let mut w = l - l.ln();
    for _ in 0..MAX_ITER {
        let f = w + w.ln() - l;
        // Halley on g(w) = w + ln w - l: g' = 1 + 1/w, g'' = -1/w^2
        let g1 = 1.0 + 1.0 / w;
        let g2 = -1.0 / (w * w);
        let step = f / (g1 - f * g2 / (2.0 * g1));
        let next = w - step;
        if (next - w).abs() <= 4.0 * f64::EPSILON * next.abs() {
            return Ok(next);
        }
        w = next;
    }
    assert!(
        (w + w.ln() - l).abs() <= 1e-12 * l,
        "lambert_w_ln({l}) failed to converge"
    );
    Ok(w)
}
