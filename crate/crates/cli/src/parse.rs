//! Parsers for the compact flag syntax: `X,Y` points, `;`-separated point
//! lists, `a:step:b` ranges, `NX,NY` grids and `x0,y0,x1,y1` boxes.

use cap_core::C64;

fn number(s: &str, what: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("{what}: cannot parse {s:?} as a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{what}: {s:?} is not finite"))
    }
}

pub fn numbers(s: &str, what: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(|t| number(t, what)).collect()
}

pub fn point(s: &str, what: &str) -> Result<C64, String> {
    match numbers(s, what)?.as_slice() {
        [x, y] => Ok(C64::new(*x, *y)),
        _ => Err(format!("{what}: expected X,Y, got {s:?}")),
    }
}

pub fn points(s: &str, what: &str) -> Result<Vec<C64>, String> {
    let pts: Vec<C64> =
        s.split(';').filter(|t| !t.trim().is_empty()).map(|t| point(t, what)).collect::<Result<_, _>>()?;
    if pts.is_empty() {
        return Err(format!("{what}: no points given"));
    }
    Ok(pts)
}

/// `a:step:b` with a ≤ b and step > 0, endpoint included when it falls on
/// the grid up to rounding.
pub fn range(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, step, b] = parts.as_slice() else {
        return Err(format!("--rgrid: expected a:step:b, got {s:?}"));
    };
    let (a, step, b) = (number(a, "--rgrid")?, number(step, "--rgrid")?, number(b, "--rgrid")?);
    if !(step > 0.0) || b < a {
        return Err("--rgrid: need step > 0 and a <= b".into());
    }
    let count = ((b - a) / step + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err("--rgrid: too many radii".into());
    }
    Ok((0..count).map(|k| a + k as f64 * step).collect())
}

pub fn grid(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [nx, ny] = parts.as_slice() else {
        return Err(format!("--grid: expected NX,NY, got {s:?}"));
    };
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("--grid: cannot parse {t:?}"));
    let (nx, ny) = (parse(nx)?, parse(ny)?);
    if nx < 2 || ny < 2 {
        return Err("--grid: need at least 2 points per direction".into());
    }
    Ok((nx, ny))
}

pub fn bbox(s: &str) -> Result<[f64; 4], String> {
    match numbers(s, "--bbox")?.as_slice() {
        &[x0, y0, x1, y1] if x0 < x1 && y0 < y1 => Ok([x0, y0, x1, y1]),
        [_, _, _, _] => Err("--bbox: need x0 < x1 and y0 < y1".into()),
        _ => Err(format!("--bbox: expected x0,y0,x1,y1, got {s:?}")),
    }
}
