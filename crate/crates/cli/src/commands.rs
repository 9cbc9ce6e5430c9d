//! The subcommands: load the domain, run the computation, shape a report.

use cap_core::geometry::{DomainSpec, ParametrizedBoundary};
use cap_core::invariants::*;
use cap_core::maps::{rectangle_map, SolveOptions};
use cap_core::C64;
use serde_json::{Map, Value};

use crate::output::{num, nums, xy, Report, Table};
use crate::{parse, Common, Failure, Field};

type Outcome = Result<Report, Failure>;

fn load(common: &Common) -> Result<(DomainSpec, ParametrizedBoundary), Failure> {
    let text = std::fs::read_to_string(&common.domain)
        .map_err(|e| Failure::Config(format!("cannot read {}: {e}", common.domain.display())))?;
    let spec = DomainSpec::from_json(&text)?;
    let b = spec.build()?;
    Ok((spec, b))
}

fn opts(common: &Common) -> SolveOptions {
    SolveOptions::new(common.n).with_grading(common.grading)
}

fn fields(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn scalar(r: InvariantResult) -> Report {
    let mut f = vec![("value", num(r.value))];
    let mut table = Table::new(&["value"]);
    let mut row = vec![r.value];
    if !r.contributions.is_empty() {
        f.push(("contributions", nums(&r.contributions)));
        for (k, &c) in r.contributions.iter().enumerate() {
            table.header.push(format!("contribution_{}", k + 1));
            row.push(c);
        }
    }
    table.header.extend(["nu_deviation".to_string(), "n".to_string()]);
    row.extend([r.nu_deviation, r.n as f64]);
    table.rows.push(row);
    Report::new(fields(f), table, r.nu_deviation, r.n)
}

/// A list of complex points as `points` in JSON and `x,y` rows in CSV.
fn curve(pts: &[C64], nu_deviation: f64, n: usize) -> Report {
    let mut table = Table::new(&["x", "y"]);
    table.rows = pts.iter().map(|z| vec![z.re, z.im]).collect();
    let f = fields(vec![("points", Value::Array(pts.iter().map(|&z| xy(z)).collect()))]);
    Report::new(f, table, nu_deviation, n)
}

fn optional_point(s: Option<&str>, what: &str) -> Result<Option<C64>, Failure> {
    Ok(s.map(|s| parse::point(s, what)).transpose()?)
}

fn two_points(s: &str) -> Result<(C64, C64), Failure> {
    match parse::points(s, "--points")?.as_slice() {
        &[x, y] => Ok((x, y)),
        _ => Err(Failure::Config("--points: expected exactly two points".into())),
    }
}

/// Four points `x,y;…`, or four parameters `t1,…,t4` of the first component.
fn vertices(b: &ParametrizedBoundary, s: &str) -> Result<[C64; 4], Failure> {
    let pts: Vec<C64> = if s.contains(';') {
        parse::points(s, "--vertices")?
    } else {
        let comp = &b.components()[0];
        parse::numbers(s, "--vertices")?.into_iter().map(|t| comp.eval(t).z).collect()
    };
    pts.try_into().map_err(|_| Failure::Config("--vertices: expected four vertices".into()))
}

fn levels(s: &str) -> Result<Vec<f64>, Failure> {
    Ok(parse::numbers(s, "--levels")?)
}

fn condenser_spec(b: ParametrizedBoundary, lv: Option<&str>) -> Result<CondenserSpec, Failure> {
    Ok(match lv {
        Some(s) => CondenserSpec::new(b, levels(s)?)?,
        None => CondenserSpec::unit_levels(b)?,
    })
}

pub fn condenser(common: &Common, lv: Option<&str>) -> Outcome {
    let (_, b) = load(common)?;
    Ok(scalar(condenser_capacity(&condenser_spec(b, lv)?, opts(common))?))
}

pub fn logcap(common: &Common) -> Outcome {
    let (_, b) = load(common)?;
    Ok(scalar(log_capacity(&b, opts(common))?))
}

fn plate(b: &ParametrizedBoundary) -> Result<&cap_core::geometry::BoundaryComponent, Failure> {
    if b.len() != 1 {
        return Err(Failure::Config("the domain file must hold the plate E as its only component".into()));
    }
    Ok(&b.components()[0])
}

pub fn hypcap(common: &Common, alpha: Option<&str>) -> Outcome {
    let (_, b) = load(common)?;
    let alpha = optional_point(alpha, "--alpha")?;
    Ok(scalar(hyperbolic_capacity(plate(&b)?, alpha, opts(common))?))
}

pub fn ellcap(common: &Common) -> Outcome {
    let (_, b) = load(common)?;
    Ok(scalar(elliptic_capacity(plate(&b)?, opts(common))?))
}

pub fn redmod(common: &Common, alpha: Option<&str>, generalized: bool) -> Outcome {
    let (_, b) = load(common)?;
    let alpha = optional_point(alpha, "--alpha")?;
    let r = if generalized {
        generalized_reduced_modulus(&b, alpha, opts(common))?
    } else {
        reduced_modulus(&b, alpha, opts(common))?
    };
    Ok(scalar(r))
}

pub fn quadmod(common: &Common, v: &str, reciprocity: bool) -> Outcome {
    let (_, b) = load(common)?;
    let z = vertices(&b, v)?;
    let mut report = scalar(quad_modulus(&b, z, opts(common))?);
    report.fields.insert("vertices".into(), Value::Array(z.iter().map(|&p| xy(p)).collect()));
    if reciprocity {
        let err = quad_reciprocity_check(&b, z, opts(common))?;
        report.fields.insert("reciprocity_error".into(), num(err));
        report.table.header.push("reciprocity_error".into());
        report.table.rows[0].push(err);
    }
    Ok(report)
}

/// Harmonic measure of arcs (one component) or of a whole component
/// (several), with the ν deviation of the solve.
enum Measure {
    Arcs(HarmonicMeasureSc, Vec<C64>),
    Component(HarmonicMeasures, usize),
}

impl Measure {
    fn new(b: &ParametrizedBoundary, arcs: Option<&str>, component: Option<usize>, o: SolveOptions) -> Result<Self, Failure> {
        if b.len() == 1 {
            let arcs = arcs.ok_or_else(|| Failure::Config("--arcs is required for a simply connected domain".into()))?;
            Ok(Measure::Arcs(HarmonicMeasureSc::new(b, None, o)?, parse::points(arcs, "--arcs")?))
        } else {
            let k = component
                .ok_or_else(|| Failure::Config("--component is required for a multiply connected domain".into()))?;
            Ok(Measure::Component(HarmonicMeasures::solve(b, o)?, k))
        }
    }

    fn eval(&self, pts: &[C64]) -> Result<Vec<f64>, Failure> {
        Ok(match self {
            Measure::Arcs(hm, arcs) => hm.eval(arcs, pts)?,
            Measure::Component(hm, k) => hm.sigma(*k, pts)?,
        })
    }

    fn nu_deviation(&self) -> f64 {
        match self {
            Measure::Arcs(hm, _) => hm.map().nu_deviation(),
            Measure::Component(hm, _) => hm.nu_deviation(),
        }
    }
}

pub fn hmeasure(common: &Common, arcs: Option<&str>, component: Option<usize>, points: &str) -> Outcome {
    let (_, b) = load(common)?;
    let pts = parse::points(points, "--points")?;
    let m = Measure::new(&b, arcs, component, opts(common))?;
    let values = m.eval(&pts)?;
    let mut table = Table::new(&["x", "y", "omega"]);
    table.rows = pts.iter().zip(&values).map(|(z, &v)| vec![z.re, z.im, v]).collect();
    let f = fields(vec![
        ("points", Value::Array(pts.iter().map(|&z| xy(z)).collect())),
        ("values", nums(&values)),
    ]);
    Ok(Report::new(f, table, m.nu_deviation(), common.n))
}

pub fn hfun(common: &Common, z0: &str, rgrid: &str) -> Outcome {
    let (_, b) = load(common)?;
    let z0 = parse::point(z0, "--z0")?;
    let radii = parse::range(rgrid)?;
    let h = h_function(&b, z0, &radii, opts(common))?;
    let mut table = Table::new(&["r", "h"]);
    table.rows = radii.iter().zip(&h.values).map(|(&r, &v)| vec![r, v]).collect();
    let f = fields(vec![("z0", xy(z0)), ("radii", nums(&radii)), ("values", nums(&h.values))]);
    Ok(Report::new(f, table, h.nu_deviation, common.n))
}

pub fn hdist(common: &Common, points: &str) -> Outcome {
    let (_, b) = load(common)?;
    let (x, y) = two_points(points)?;
    Ok(scalar(hyperbolic_distance(&b, x, y, opts(common))?))
}

pub fn geodesic(common: &Common, points: &str, samples: usize) -> Outcome {
    let (_, b) = load(common)?;
    let (x, y) = two_points(points)?;
    let g = hyperbolic_geodesic(&b, x, y, opts(common), samples)?;
    Ok(curve(&g.values, g.nu_deviation, common.n))
}

pub fn hcircle(common: &Common, z0: &str, radius: f64, samples: usize) -> Outcome {
    let (_, b) = load(common)?;
    let z0 = parse::point(z0, "--z0")?;
    let c = hyperbolic_circle(&b, z0, radius, opts(common), samples)?;
    Ok(curve(&c.values, c.nu_deviation, common.n))
}

pub struct GridRequest<'a> {
    pub grid: &'a str,
    pub bbox: Option<&'a str>,
    pub levels: Option<&'a str>,
    pub component: Option<usize>,
    pub arcs: Option<&'a str>,
    pub vertices: Option<&'a str>,
}

/// Bounding box of the boundary outlines.
fn boundary_box(b: &ParametrizedBoundary) -> [f64; 4] {
    let mut bb = [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY];
    for z in b.components().iter().flat_map(|c| c.outline(512)) {
        bb = [bb[0].min(z.re), bb[1].min(z.im), bb[2].max(z.re), bb[3].max(z.im)];
    }
    bb
}

/// Mean node spacing of the coarsest component at n nodes.
fn mesh_spacing(b: &ParametrizedBoundary, n: usize) -> f64 {
    b.components()
        .iter()
        .map(|c| {
            let o = c.outline(n);
            let len: f64 = (0..o.len()).map(|i| (o[(i + 1) % o.len()] - o[i]).norm()).sum();
            len / n as f64
        })
        .fold(0.0, f64::max)
}

pub fn potential_grid(common: &Common, field: Field, req: &GridRequest) -> Outcome {
    let (_, b) = load(common)?;
    let o = opts(common);
    let (nx, ny) = parse::grid(req.grid)?;
    let bb = match req.bbox {
        Some(s) => parse::bbox(s)?,
        None if b.is_bounded() => boundary_box(&b),
        None => return Err(Failure::Config("--bbox is required for an unbounded domain".into())),
    };
    let coord = |k: usize, m: usize, lo: f64, hi: f64| lo + (hi - lo) * k as f64 / (m - 1) as f64;
    let grid: Vec<C64> = (0..ny)
        .flat_map(|j| (0..nx).map(move |i| C64::new(coord(i, nx, bb[0], bb[2]), coord(j, ny, bb[1], bb[3]))))
        .collect();
    // Cauchy sums lose accuracy within a few node spacings of the boundary.
    let band = 2.0 * mesh_spacing(&b, common.n);
    let keep: Vec<usize> =
        (0..grid.len()).filter(|&i| b.contains(grid[i]) && b.distance_to_boundary(grid[i]) >= band).collect();
    let pts: Vec<C64> = keep.iter().map(|&i| grid[i]).collect();

    let (values, nu_deviation) = match field {
        Field::Condenser => {
            let c = Condenser::solve(&condenser_spec(b.clone(), req.levels)?, o)?;
            (c.potential(&pts)?, c.capacity().nu_deviation)
        }
        Field::Sigma | Field::Hmeasure => {
            let m = Measure::new(&b, req.arcs, req.component, o)?;
            (m.eval(&pts)?, m.nu_deviation())
        }
        Field::PsiRe | Field::PsiIm => {
            let v = req.vertices.ok_or_else(|| Failure::Config("--vertices is required for psi fields".into()))?;
            let r = rectangle_map(&b, vertices(&b, v)?, o)?;
            let psi = r.eval(&pts)?.values;
            let part = |z: &C64| if field == Field::PsiRe { z.re } else { z.im };
            let dev = r.disk_map().nu_deviation().max(r.rectangle_disk_map().nu_deviation());
            (psi.iter().map(part).collect(), dev)
        }
        Field::Redmod => {
            if !b.is_bounded() {
                return Err(Failure::Config("redmod fields need a bounded domain".into()));
            }
            let mut dev: f64 = 0.0;
            let mut vals = Vec::with_capacity(pts.len());
            for &z in &pts {
                let r = if b.len() == 1 {
                    reduced_modulus(&b, Some(z), o)?
                } else {
                    generalized_reduced_modulus(&b, Some(z), o)?
                };
                dev = dev.max(r.nu_deviation);
                vals.push(r.value);
            }
            (vals, dev)
        }
    };

    let mut u = vec![f64::NAN; grid.len()];
    for (&i, &v) in keep.iter().zip(&values) {
        u[i] = v;
    }
    let mut table = Table::new(&["x", "y", "u"]);
    table.rows = grid.iter().zip(&u).map(|(z, &v)| vec![z.re, z.im, v]).collect();
    let f = fields(vec![
        ("grid", Value::from(vec![nx, ny])),
        ("bbox", nums(&bb)),
        ("x", nums(&grid.iter().map(|z| z.re).collect::<Vec<_>>())),
        ("y", nums(&grid.iter().map(|z| z.im).collect::<Vec<_>>())),
        ("u", nums(&u)),
    ]);
    Ok(Report::new(f, table, nu_deviation, common.n))
}
