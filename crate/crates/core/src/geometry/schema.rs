//! JSON domain description.
//!
//! ```json
//! {"bounded": true, "alpha": [0, 0.75],
//!  "components": [
//!    {"kind": "circle", "parameters": {"center": [0, 0], "radius": 1}},
//!    {"kind": "ellipse", "parameters": {"center": [0, 0], "semi_x": 0.75, "semi_y": 0.5}}]}
//! ```
//!
//! Component kinds and their parameters:
//! - `circle`: `center`, `radius`
//! - `ellipse`: `center`, `semi_x`, `semi_y`, optional `rotation`
//! - `polygon`: `vertices`
//! - `polycircular`: `vertices`, optional `through` (one entry per edge,
//!   `null` for a straight edge or a point the arc passes through)
//! - `samples`: `points`, equispaced in the parameter
//!
//! `aux` is a point inside the component (holes and unbounded domains).
//! `corners`, if present, must match the corners implied by the kind.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::boundary::{build_boundary, BoundaryComponent, ParametrizedBoundary};
use crate::error::{CapError, Result};
use crate::C64;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainSpec {
    pub bounded: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<[f64; 2]>,
    pub components: Vec<ComponentSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub kind: String,
    pub parameters: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corners: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aux: Option<[f64; 2]>,
}

fn cfg(msg: impl Into<String>) -> CapError {
    CapError::Config(msg.into())
}

fn point(v: &Value, what: &str) -> Result<C64> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([x, y]) => match (x.as_f64(), y.as_f64()) {
            (Some(x), Some(y)) => Ok(C64::new(x, y)),
            _ => Err(cfg(format!("{what}: expected two numbers"))),
        },
        _ => Err(cfg(format!("{what}: expected [x, y]"))),
    }
}

fn field<'a>(p: &'a Value, key: &str, kind: &str) -> Result<&'a Value> {
    p.get(key).ok_or_else(|| cfg(format!("{kind}: missing parameter '{key}'")))
}

fn number(p: &Value, key: &str, kind: &str) -> Result<f64> {
    field(p, key, kind)?.as_f64().ok_or_else(|| cfg(format!("{kind}: '{key}' must be a number")))
}

fn points(p: &Value, key: &str, kind: &str) -> Result<Vec<C64>> {
    field(p, key, kind)?
        .as_array()
        .ok_or_else(|| cfg(format!("{kind}: '{key}' must be a list of points")))?
        .iter()
        .map(|v| point(v, key))
        .collect()
}

impl ComponentSpec {
    pub fn build(&self) -> Result<BoundaryComponent> {
        let p = &self.parameters;
        let kind = self.kind.as_str();
        let comp = match kind {
            "circle" => {
                BoundaryComponent::circle(point(field(p, "center", kind)?, "center")?, number(p, "radius", kind)?)?
            }
            "ellipse" => {
                let rotation = p.get("rotation").and_then(Value::as_f64).unwrap_or(0.0);
                BoundaryComponent::ellipse(
                    point(field(p, "center", kind)?, "center")?,
                    number(p, "semi_x", kind)?,
                    number(p, "semi_y", kind)?,
                    rotation,
                )?
            }
            "polygon" => BoundaryComponent::polygon(&points(p, "vertices", kind)?)?,
            "polycircular" => {
                let vertices = points(p, "vertices", kind)?;
                let through = match p.get("through") {
                    None => vec![None; vertices.len()],
                    Some(v) => v
                        .as_array()
                        .ok_or_else(|| cfg("polycircular: 'through' must be a list"))?
                        .iter()
                        .map(|e| if e.is_null() { Ok(None) } else { point(e, "through").map(Some) })
                        .collect::<Result<Vec<_>>>()?,
                };
                BoundaryComponent::polycircular(&vertices, &through)?
            }
            "samples" => BoundaryComponent::samples(&points(p, "points", kind)?)?,
            other => return Err(cfg(format!("unknown component kind '{other}'"))),
        };
        if let Some(expected) = &self.corners {
            let actual = comp.corners();
            let same = expected.len() == actual.len()
                && expected.iter().zip(&actual).all(|(a, b)| (a - b).abs() < 1e-9);
            if !same {
                return Err(cfg(format!(
                    "{kind}: declared corners {expected:?} differ from the curve's {actual:?}"
                )));
            }
        }
        Ok(match self.aux {
            Some([x, y]) => comp.with_interior_point(C64::new(x, y)),
            None => comp,
        })
    }
}

impl DomainSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| cfg(format!("invalid domain file: {e}")))
    }

    pub fn build(&self) -> Result<ParametrizedBoundary> {
        let comps = self.components.iter().map(ComponentSpec::build).collect::<Result<Vec<_>>>()?;
        build_boundary(comps, self.bounded, self.alpha.map(|[x, y]| C64::new(x, y)))
    }
}
