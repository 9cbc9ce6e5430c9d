//! Bracketed scalar root finding shared by the special-function inverses.

use crate::error::{CapError, Result};

/// Width at which bisection hands over to Newton.
pub(crate) const SWITCH_WIDTH: f64 = 1e-3;
pub(crate) const ABS_TOL: f64 = 1e-14;

/// Finds a root of `f` in `[lo, hi]` given opposite signs at the ends.
///
/// `f` returns the value and, if cheap, the derivative. Bisection runs until
/// the bracket is narrower than `SWITCH_WIDTH`; then Newton steps take over,
/// falling back to bisection whenever a step leaves the bracket. Without a
/// derivative a forward difference stands in for it.
pub(crate) fn bracketed<F>(mut f: F, mut lo: f64, mut hi: f64) -> Result<f64>
where
    F: FnMut(f64) -> (f64, Option<f64>),
{
    let (mut flo, _) = f(lo);
    let (fhi, _) = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || !flo.is_finite() || !fhi.is_finite() {
        return Err(CapError::Numerical(format!(
            "root not bracketed on [{lo}, {hi}]: f = {flo}, {fhi}"
        )));
    }
    let mut fhi = fhi;
    while hi - lo > SWITCH_WIDTH {
        let mid = 0.5 * (lo + hi);
        let (fm, _) = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    let mut x = lo - flo * (hi - lo) / (fhi - flo);
    if !(x > lo && x < hi) {
        x = 0.5 * (lo + hi);
    }
    for _ in 0..200 {
        let (fx, dfx) = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        let slope = match dfx {
            Some(d) => d,
            None => {
                let h = 1e-7 * (hi - lo).max(1e-9 * x.abs().max(1.0));
                let xh = if x + h < hi { x + h } else { x - h };
                (f(xh).0 - fx) / (xh - x)
            }
        };
        let next = if slope != 0.0 && slope.is_finite() {
            let xn = x - fx / slope;
            if xn > lo && xn < hi {
                xn
            } else {
                0.5 * (lo + hi)
            }
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - x).abs();
        x = next;
        let scale = ABS_TOL * x.abs().max(1.0);
        if step <= scale || hi - lo <= scale {
            return Ok(x);
        }
    }
    Ok(x)
}
