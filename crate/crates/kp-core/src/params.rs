//! Physical parameters and the cross-section case taxonomy.

use core::f64::consts::TAU;
use core::fmt;

/// Parameter set of the planar problem.
///
/// `alpha` weights the bending energy [N·m²], `beta` the shape penalty
/// [N/m²], `sigma` is the surface tension, `area` the fixed cross-section
/// area [m²] and `radius` the radius of the circular midline [m]. The
/// midline closes exactly, so the rod length is always `2π·radius` and is
/// exposed as a derived quantity rather than stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub alpha: f64,
    pub beta: f64,
    pub sigma: f64,
    pub area: f64,
    pub radius: f64,
}

impl Params {
    /// Validated constructor. Requires `alpha, beta, area, radius > 0` and
    /// `sigma >= 0`; `sigma > 1` is accepted (see
    /// [`sigma_above_physical`](Self::sigma_above_physical)).
    pub fn new(
        alpha: f64,
        beta: f64,
        sigma: f64,
        area: f64,
        radius: f64,
    ) -> Result<Self, ParamError> {
        let params = Self {
            alpha,
            beta,
            sigma,
            area,
            radius,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let positive = [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("area", self.area),
            ("radius", self.radius),
        ];
        for (name, value) in positive {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { name });
            }
            if value <= 0.0 {
                return Err(ParamError::NonPositive { name, value });
            }
        }
        if !self.sigma.is_finite() {
            return Err(ParamError::NonFinite { name: "sigma" });
        }
        if self.sigma < 0.0 {
            return Err(ParamError::NegativeSigma { value: self.sigma });
        }
        Ok(())
    }

    /// Rod length `L = 2π·radius`, exact by construction.
    #[inline]
    pub fn length(&self) -> f64 {
        TAU * self.radius
    }

    /// Surface tension outside the physical range `[0, 1]`. Such values are
    /// accepted (larger tensions are useful for exploring shape trends) but
    /// callers may want to surface a warning.
    #[inline]
    pub fn sigma_above_physical(&self) -> bool {
        self.sigma > 1.0
    }
}

/// Cross-section family selector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CaseKind {
    /// Fixed-area ellipse with free horizontal semi-axis.
    Ellipse,
    /// Horizontal dilation of a previously solved elliptical section with
    /// base semi-axis `a0 > 0`.
    Dilation { a0: f64 },
    /// Fixed-area oval modeled as a limacon of Pascal.
    Oval,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseKind::Ellipse => write!(f, "ellipse"),
            CaseKind::Dilation { .. } => write!(f, "dilation"),
            CaseKind::Oval => write!(f, "oval"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamError {
    NonFinite { name: &'static str },
    NonPositive { name: &'static str, value: f64 },
    NegativeSigma { value: f64 },
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::NonFinite { name } => write!(f, "parameter `{name}` must be finite"),
            ParamError::NonPositive { name, value } => {
                write!(f, "parameter `{name}` must be positive, got {value}")
            }
            ParamError::NegativeSigma { value } => {
                write!(f, "surface tension must be non-negative, got {value}")
            }
        }
    }
}
