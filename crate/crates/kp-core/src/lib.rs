//! Critical points of the planar Kirchhoff-Plateau energy.
//!
//! A closed elastic rod with circular midline is spanned by a soap film
//! that attaches along an inward offset curve; an extra quadratic penalty
//! resists changes of the cross-section shape. This crate computes and
//! certifies the equilibrium cross-sections for three families:
//!
//! * [`ellipse`] — fixed-area ellipse; the equilibrium horizontal
//!   semi-axis is the unique positive root of a quartic.
//! * [`dilation`] — horizontal dilation of a previously solved elliptical
//!   section; the dilation coefficient has a closed form.
//! * [`oval`] — fixed-area limacon of Pascal; the equilibrium is the
//!   unique admissible intersection of a hyperbola with an ellipse in the
//!   shape-parameter plane.
//!
//! The [`variational`] module is an independent check: it discretizes the
//! full energy functional on the midline and verifies that solved states
//! are stationary, and it evaluates the reduced Euler-Lagrange residuals
//! directly. [`quartic`] supplies the real-root machinery (discriminant,
//! Descartes counting, Sturm isolation) the solvers are built on.
//!
//! The crate is `no_std` (with `alloc`) so the solvers can be embedded
//! anywhere; IO, file formats and the command line live in the companion
//! `kp-cli` crate.

#![no_std]

extern crate alloc;

mod float;

pub mod dilation;
pub mod ellipse;
pub mod geometry;
pub mod oval;
pub mod params;
pub mod quartic;
pub mod variational;

pub use dilation::{solve_dilation, DilationError, DilationSolution};
pub use ellipse::{solve_equilibrium, EllipseSolution};
pub use geometry::{midline_point, scaled_curve_point, tube_point, GeometryError, Point2, Point3};
pub use oval::{solve_oval, LimaconShape, OvalError, OvalSolution};
pub use params::{CaseKind, ParamError, Params};
pub use quartic::{QuarticError, QuarticPoly, RealRoot, RootReport};
pub use variational::{
    el_residual, ConstantProfile, DiscreteFunctional, ElResidual, EnergyBreakdown, Profile,
    VariationalError,
};
