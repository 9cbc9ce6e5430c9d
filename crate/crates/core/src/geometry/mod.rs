//! Domain boundaries: parametrized curves, validation and Nyström discretization.

mod boundary;
mod curves;
mod discretize;
mod grading;
mod schema;

pub use boundary::{build_boundary, winding_number as winding, BoundaryComponent, Orientation, ParametrizedBoundary};
pub use curves::{
    Circle, ClosureCurve, Curve, CurvePoint, Ellipse, FourierCurve, MobiusCurve, PiecewiseCurve,
};
pub use discretize::{
    default_coefficient, discretize, discretize_graded, discretize_with, Coefficient, DiscretizedBoundary, GRADING_P,
    GRADING_RANGE,
};
pub use grading::{graded_reparam, graded_reparam_jet, kress_substitution, Jet};
pub use schema::{ComponentSpec, DomainSpec};
