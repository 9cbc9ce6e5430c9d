use statrs::function::gamma::{digamma, gamma, ln_gamma};

use crate::error::{domain, CapError, Result};

const MAX_TERMS: usize = 200_000;
/// Above this argument the series is re-expanded about x = 1.
const TRANSFORM_THRESHOLD: f64 = 0.75;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        0.0
    } else {
        1.0 / gamma(x)
    }
}

/// Beta function B(x, y) = Γ(x)Γ(y)/Γ(x+y) for positive arguments.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return domain(format!("beta needs positive arguments, got ({x}, {y})"));
    }
    Ok((ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y)).exp())
}

/// Gauss hypergeometric function ₂F₁(a, b; c; x) for real 0 ≤ x < 1.
///
/// Direct power series for small x. For x close to 1 the function is
/// re-expanded in 1 − x: the generic connection formula when c − a − b is not
/// an integer, and the logarithmic formulas when it is.
pub fn gauss_2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return domain(format!("2F1 undefined for c = {c}"));
    }
    if !(0.0..1.0).contains(&x) {
        return domain(format!("2F1 evaluated only for 0 <= x < 1, got {x}"));
    }
    if x <= TRANSFORM_THRESHOLD || is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return series(a, b, c, x);
    }
    let s = c - a - b;
    let m = s.round();
    if (s - m).abs() > 1e-9 {
        return connection(a, b, c, x);
    }
    let m = m as i64;
    if m == 0 {
        log_case_zero(a, b, x)
    } else if m > 0 {
        log_case_positive(a, b, m as usize, x)
    } else {
        // Euler: F(a,b;c;x) = (1−x)^{c−a−b} F(c−a, c−b; c; x), and the new
        // parameter excess is −m > 0.
        let f = log_case_positive(c - a, c - b, (-m) as usize, x)?;
        Ok((1.0 - x).powf(s) * f)
    }
}

fn series(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if term.abs() <= 1e-17 * sum.abs() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(CapError::Numerical(format!(
        "2F1({a}, {b}; {c}; {x}) series did not converge"
    )))
}

fn connection(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let y = 1.0 - x;
    let s = c - a - b;
    let gc = gamma(c);
    let t1 = gc * gamma(s) * rgamma(c - a) * rgamma(c - b);
    let t2 = gc * gamma(-s) * rgamma(a) * rgamma(b);
    let mut value = 0.0;
    if t1 != 0.0 {
        value += t1 * series(a, b, 1.0 - s, y)?;
    }
    if t2 != 0.0 {
        value += t2 * y.powf(s) * series(c - a, c - b, 1.0 + s, y)?;
    }
    Ok(value)
}

/// c = a + b.
fn log_case_zero(a: f64, b: f64, x: f64) -> Result<f64> {
    let y = 1.0 - x;
    let ln_y = y.ln();
    let pre = gamma(a + b) * rgamma(a) * rgamma(b);
    let (mut psi1, mut psia, mut psib) = (digamma(1.0), digamma(a), digamma(b));
    let mut coef = 1.0;
    let mut sum = 0.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let term = coef * (2.0 * psi1 - psia - psib - ln_y);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && n > 2 {
            return Ok(pre * sum);
        }
        coef *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + 1.0)) * y;
        psi1 += 1.0 / (nf + 1.0);
        psia += 1.0 / (a + nf);
        psib += 1.0 / (b + nf);
        if coef == 0.0 {
            return Ok(pre * sum);
        }
    }
    Err(CapError::Numerical("2F1 logarithmic series did not converge".into()))
}

/// c = a + b + m with a positive integer m.
fn log_case_positive(a: f64, b: f64, m: usize, x: f64) -> Result<f64> {
    let y = 1.0 - x;
    let mf = m as f64;
    let c = a + b + mf;
    let gm = gamma(mf);
    let mut finite = 0.0;
    let mut coef = 1.0;
    for n in 0..m {
        finite += coef;
        let nf = n as f64;
        coef *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * y;
    }
    finite *= gm * gamma(c) * rgamma(a + mf) * rgamma(b + mf);

    let pre = (-y).powi(m as i32) * gamma(c) * rgamma(a) * rgamma(b);
    if pre == 0.0 {
        return Ok(finite);
    }
    let ln_y = y.ln();
    let mut psi1 = digamma(1.0);
    let mut psim = digamma(mf + 1.0);
    let mut psia = digamma(a + mf);
    let mut psib = digamma(b + mf);
    let mut coef = 1.0 / gamma(mf + 1.0);
    let mut sum = 0.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let term = coef * (ln_y - psi1 - psim + psia + psib);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && n > 2 {
            return Ok(finite - pre * sum);
        }
        coef *= (a + mf + nf) * (b + mf + nf) / ((nf + 1.0) * (nf + mf + 1.0)) * y;
        psi1 += 1.0 / (nf + 1.0);
        psim += 1.0 / (nf + mf + 1.0);
        psia += 1.0 / (a + mf + nf);
        psib += 1.0 / (b + mf + nf);
        if coef == 0.0 {
            return Ok(finite - pre * sum);
        }
    }
    Err(CapError::Numerical("2F1 logarithmic series did not converge".into()))
}
