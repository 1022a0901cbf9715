//! Oval cross-section modeled as a limacon of Pascal: conic intersection,
//! critical-area analysis and admissibility classification.
//!
//! Stationarity of the oval energy reduces to intersecting a hyperbola
//! (from the shape equation) with an ellipse (from the fixed-area
//! constraint) in the `(a, b)` plane of limacon parameters. Substituting
//! `b² = 2Π/π - 2a²` into the hyperbola yields a quartic in `a`; its
//! discriminant, as a function of the area `Π`, changes sign at the
//! tangency area `Ξ₂` where the intersection count switches between two
//! and four.

// Inherent std methods shadow the shim when the test harness links std.
#[allow(unused_imports)]
use crate::float::FloatExt;
use crate::params::Params;
use crate::quartic::{discriminant_of, QuarticError, QuarticPoly};
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

/// Relative radicand slack treated as zero when recovering `b`.
const RADICAND_CLAMP: f64 = 1e-12;

/// Relative quartic residual at a critical point below which the conics
/// are treated as tangent there.
const TANGENCY_EPS: f64 = 1e-8;

/// Relative disagreement between the closed-form and numeric tangency
/// areas that raises the transcription flag.
const XI2_AGREE_TOL: f64 = 1e-6;

/// Limacon of Pascal in polar form `r(θ) = a + b·cosθ`.
///
/// The vertical semi-axis is `a`; the horizontal semi-axes are `a + b`
/// (film side) and `a - b`. The curve has no double points iff `a > b`
/// and no cusps iff `a > 2b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimaconShape {
    pub a: f64,
    pub b: f64,
}

impl LimaconShape {
    pub fn new(a: f64, b: f64) -> Result<Self, OvalError> {
        if !a.is_finite() || !b.is_finite() || a <= 0.0 || b < 0.0 {
            return Err(OvalError::InvalidShape { a, b });
        }
        Ok(Self { a, b })
    }

    /// Enclosed area `πa² + (π/2)b²`.
    pub fn area(&self) -> f64 {
        PI * self.a * self.a + 0.5 * PI * self.b * self.b
    }

    pub fn radius_at(&self, theta: f64) -> f64 {
        self.a + self.b * theta.cos()
    }

    /// Longer horizontal semi-axis `a + b`, the one spanned by the film.
    pub fn long_semi_axis(&self) -> f64 {
        self.a + self.b
    }

    /// Shorter horizontal semi-axis `a - b`.
    pub fn short_semi_axis(&self) -> f64 {
        self.a - self.b
    }

    pub fn has_double_points(&self) -> bool {
        self.a <= self.b
    }

    pub fn has_cusps(&self) -> bool {
        self.a <= 2.0 * self.b
    }
}

/// Cosine amplitude from the fixed area: `b = √((2/π)(Π - πa²))`.
pub fn oval_b_of_a(area: f64, a: f64) -> Result<f64, OvalError> {
    let radicand = (2.0 / PI) * (area - PI * a * a);
    if radicand < -RADICAND_CLAMP * (2.0 * area / PI) {
        return Err(OvalError::RadicandNegative { area, a });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// Conic `c_aa·a² + c_bb·b² + c_ab·ab + c_a·a + c_b·b + c_0 = 0` in the
/// `(a, b)` plane of limacon parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic {
    pub c_aa: f64,
    pub c_bb: f64,
    pub c_ab: f64,
    pub c_a: f64,
    pub c_b: f64,
    pub c_0: f64,
}

impl Conic {
    pub fn eval(&self, a: f64, b: f64) -> f64 {
        self.c_aa * a * a
            + self.c_bb * b * b
            + self.c_ab * a * b
            + self.c_a * a
            + self.c_b * b
            + self.c_0
    }

    /// Magnitude of the terms at `(a, b)`, for relative residuals.
    pub fn magnitude_at(&self, a: f64, b: f64) -> f64 {
        ((self.c_aa * a * a).abs()
            + (self.c_bb * b * b).abs()
            + (self.c_ab * a * b).abs()
            + (self.c_a * a).abs()
            + (self.c_b * b).abs()
            + self.c_0.abs())
        .max(f64::MIN_POSITIVE)
    }
}

/// The stationarity hyperbola `2a² - b² + (1 + 2βR/σ)ab - 2Ra + Rb = 0`
/// (passing through the origin, `(R, 0)` and `(0, R)`) and the fixed-area
/// ellipse `2a² + b² = 2Π/π`.
pub fn conic_system(params: &Params) -> Result<(Conic, Conic), OvalError> {
    if params.sigma <= 0.0 {
        return Err(OvalError::DegenerateHyperbola);
    }
    let hyperbola = Conic {
        c_aa: 2.0,
        c_bb: -1.0,
        c_ab: 1.0 + 2.0 * params.beta * params.radius / params.sigma,
        c_a: -2.0 * params.radius,
        c_b: params.radius,
        c_0: 0.0,
    };
    let ellipse = Conic {
        c_aa: 2.0,
        c_bb: 1.0,
        c_ab: 0.0,
        c_a: 0.0,
        c_b: 0.0,
        c_0: -2.0 * params.area / PI,
    };
    Ok((hyperbola, ellipse))
}

fn intersection_coeffs(beta: f64, sigma: f64, radius: f64, area: f64) -> [f64; 5] {
    let pi2 = PI * PI;
    let (s2, r2) = (sigma * sigma, radius * radius);
    [
        pi2 * (18.0 * s2 + 8.0 * beta * beta * r2 + 8.0 * beta * radius * sigma),
        pi2 * (8.0 * beta * r2 * sigma - 12.0 * radius * s2),
        6.0 * pi2 * r2 * s2
            - 8.0 * PI * area * beta * beta * r2
            - 18.0 * PI * area * s2
            - 8.0 * PI * area * beta * radius * sigma,
        PI * (4.0 * area * radius * s2 - 8.0 * area * beta * r2 * sigma),
        (4.0 * area * area - 2.0 * PI * area * r2) * s2,
    ]
}

/// Quartic in `a` obtained by eliminating `b` from the conic system.
pub fn intersection_quartic(params: &Params) -> Result<QuarticPoly, OvalError> {
    if params.sigma <= 0.0 {
        return Err(OvalError::DegenerateHyperbola);
    }
    QuarticPoly::new(intersection_coeffs(
        params.beta,
        params.sigma,
        params.radius,
        params.area,
    ))
    .map_err(OvalError::Quartic)
}

/// One hyperbola-ellipse intersection point. `tangent` marks a
/// multiplicity-two contact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Intersection {
    pub a: f64,
    pub b: f64,
    pub tangent: bool,
}

/// All real intersections of the stationarity hyperbola with the
/// fixed-area ellipse. `b` is recovered as `±√(2Π/π - 2a²)` with the sign
/// validated against the hyperbola. Near-tangent configurations are
/// diagnosed at the quartic's critical points, so a double contact is
/// reported as a single `tangent` intersection whether the underlying
/// root pair is barely real or barely complex.
pub fn intersect_conics(params: &Params) -> Result<Vec<Intersection>, OvalError> {
    let (hyperbola, _) = conic_system(params)?;
    let quartic = intersection_quartic(params)?;
    let a_max = (params.area / PI).sqrt();
    let margin = 1e-9 * a_max;
    let report = quartic
        .isolate_real_roots(-a_max - margin, a_max + margin)
        .map_err(OvalError::Quartic)?;

    let ellipse = conic_system(params)?.1;
    let two_area_over_pi = 2.0 * params.area / PI;
    let recover = |a: f64| -> Option<f64> {
        let radicand = two_area_over_pi - 2.0 * a * a;
        if radicand < -RADICAND_CLAMP * two_area_over_pi {
            return None;
        }
        let magnitude = radicand.max(0.0).sqrt();
        let plus = hyperbola.eval(a, magnitude).abs();
        let minus = hyperbola.eval(a, -magnitude).abs();
        Some(if plus <= minus { magnitude } else { -magnitude })
    };

    let mut points: Vec<Intersection> = Vec::new();
    for root in &report.real_roots {
        if let Some(b) = recover(root.value) {
            let (a, b) = newton_on_conics(&hyperbola, &ellipse, root.value, b);
            points.push(Intersection {
                a,
                b,
                tangent: root.multiplicity >= 2,
            });
        }
    }

    for c in quartic.critical_points(-a_max - margin, a_max + margin) {
        let rel = quartic.eval(c).abs() / quartic.magnitude_at(c);
        if rel > TANGENCY_EPS {
            continue;
        }
        // Radius of the well around a near-tangent contact, from the local
        // quadratic model |q| ≈ |q''|/2 · (a - c)².
        let curvature = second_derivative(&quartic, c).abs().max(f64::MIN_POSITIVE);
        let well = 3.0 * (2.0 * quartic.eval(c).abs() / curvature).sqrt()
            + 1e-9 * c.abs().max(1.0);
        let nearby: Vec<usize> = (0..points.len())
            .filter(|&i| (points[i].a - c).abs() <= well)
            .collect();
        let Some(b) = recover(c) else { continue };
        match nearby.len() {
            0 => points.push(Intersection { a: c, b, tangent: true }),
            1 => {
                let i = nearby[0];
                points[i] = Intersection { a: c, b, tangent: true };
            }
            _ => {
                // A barely-split pair: collapse it onto the contact point.
                for &i in nearby.iter().rev() {
                    points.remove(i);
                }
                points.push(Intersection { a: c, b, tangent: true });
            }
        }
    }

    points.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap());
    Ok(points)
}

fn second_derivative(q: &QuarticPoly, x: f64) -> f64 {
    let [c4, c3, c2, _, _] = q.coeffs();
    (12.0 * c4 * x + 6.0 * c3) * x + 2.0 * c2
}

/// A couple of Newton steps on the conic pair itself, so the residuals of
/// reported intersections sit at rounding level regardless of the
/// parameter scale that went through the elimination quartic. Steps that
/// fail to improve the residual are discarded.
fn newton_on_conics(hyperbola: &Conic, ellipse: &Conic, a0: f64, b0: f64) -> (f64, f64) {
    let residual = |a: f64, b: f64| {
        let h = hyperbola.eval(a, b).abs() / hyperbola.magnitude_at(a, b);
        let e = ellipse.eval(a, b).abs() / ellipse.magnitude_at(a, b);
        h.max(e)
    };
    let (mut a, mut b) = (a0, b0);
    for _ in 0..3 {
        let h = hyperbola.eval(a, b);
        let e = ellipse.eval(a, b);
        let h_a = 2.0 * hyperbola.c_aa * a + hyperbola.c_ab * b + hyperbola.c_a;
        let h_b = 2.0 * hyperbola.c_bb * b + hyperbola.c_ab * a + hyperbola.c_b;
        let e_a = 2.0 * ellipse.c_aa * a + ellipse.c_ab * b + ellipse.c_a;
        let e_b = 2.0 * ellipse.c_bb * b + ellipse.c_ab * a + ellipse.c_b;
        let det = h_a * e_b - h_b * e_a;
        if det == 0.0 {
            break;
        }
        let da = (h * e_b - h_b * e) / det;
        let db = (h_a * e - h * e_a) / det;
        let (next_a, next_b) = (a - da, b - db);
        if !next_a.is_finite() || !next_b.is_finite() || residual(next_a, next_b) >= residual(a, b)
        {
            break;
        }
        a = next_a;
        b = next_b;
    }
    (a, b)
}

/// Critical areas where the discriminant of the intersection quartic
/// vanishes. `xi2` (the tangency area separating two from four
/// intersections) is computed numerically by sign-change bisection on the
/// discriminant; the radical closed form is evaluated alongside as a
/// cross-check, since its transcription spans fifteen orders of magnitude
/// in the coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalAreas {
    /// Trivial root: the oval degenerates at zero area.
    pub xi1: f64,
    /// Tangency area (numeric discriminant root; the authoritative value).
    pub xi2: f64,
    /// Tangency area from the radical closed form.
    pub xi2_closed_form: f64,
    /// Double root `πR²σ(2βR + 3σ)/(2βR + σ)²`.
    pub xi34: f64,
    /// Whether the closed form reproduces the numeric root to 1e-6
    /// relative; `false` flags a transcription problem.
    pub closed_form_agrees: bool,
}

pub fn critical_areas(params: &Params) -> Result<CriticalAreas, OvalError> {
    if params.sigma <= 0.0 {
        return Err(OvalError::DegenerateHyperbola);
    }
    let Params {
        beta,
        sigma,
        radius,
        ..
    } = *params;

    let xi34 = PI * radius * radius * sigma * (2.0 * beta * radius + 3.0 * sigma)
        / ((2.0 * beta * radius + sigma) * (2.0 * beta * radius + sigma));

    let xi2 = xi2_numeric(beta, sigma, radius, xi34)?;
    let xi2_closed_form = xi2_closed_form(beta, sigma, radius);
    let closed_form_agrees =
        (xi2 - xi2_closed_form).abs() <= XI2_AGREE_TOL * xi2.abs().max(f64::MIN_POSITIVE);

    Ok(CriticalAreas {
        xi1: 0.0,
        xi2,
        xi2_closed_form,
        xi34,
        closed_form_agrees,
    })
}

/// Discriminant of the (normalized) intersection quartic as a function of
/// the area.
fn area_discriminant(beta: f64, sigma: f64, radius: f64, area: f64) -> f64 {
    let coeffs = intersection_coeffs(beta, sigma, radius, area);
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let normalized = coeffs.map(|c| c / scale);
    discriminant_of(&normalized)
}

fn xi2_numeric(beta: f64, sigma: f64, radius: f64, xi34: f64) -> Result<f64, OvalError> {
    let unit = PI * radius * radius;
    let hi = (8.0 * unit).max(2.0 * xi34);
    let lo = 1e-9 * unit;
    let n = 4096;
    let mut prev_area = lo;
    let mut prev = area_discriminant(beta, sigma, radius, lo);
    for k in 1..=n {
        let area = lo + (hi - lo) * k as f64 / n as f64;
        let value = area_discriminant(beta, sigma, radius, area);
        if value == 0.0 {
            return Ok(area);
        }
        if prev < 0.0 && value > 0.0 || prev > 0.0 && value < 0.0 {
            let (mut a, mut b, mut fa) = (prev_area, area, prev);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                let fm = area_discriminant(beta, sigma, radius, mid);
                if fm == 0.0 {
                    return Ok(mid);
                }
                if fa * fm < 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            return Ok(0.5 * (a + b));
        }
        prev_area = area;
        prev = value;
    }
    Err(OvalError::NoDiscriminantRoot)
}

/// Radical closed form of the tangency area. The inner square root can go
/// complex (casus irreducibilis); the principal-branch cube root keeps the
/// final combination real either way.
fn xi2_closed_form(beta: f64, sigma: f64, radius: f64) -> f64 {
    let w = 4.0 * radius * radius * beta * beta + 4.0 * radius * sigma * beta
        + 9.0 * sigma * sigma;
    let w3 = w * w * w;
    let u = beta * radius;

    const DELTA_COEFFS: [f64; 11] = [
        17_915_904.0,
        89_579_520.0,
        380_712_960.0,
        985_374_720.0,
        2_205_895_680.0,
        3_545_109_504.0,
        4_963_265_280.0,
        4_988_459_520.0,
        4_336_558_560.0,
        2_295_825_120.0,
        1_033_121_304.0,
    ];
    let mut series = 0.0;
    for (i, c) in DELTA_COEFFS.iter().enumerate() {
        series += c * u.powi((10 - i) as i32) * sigma.powi(i as i32);
    }
    let delta = PI.powi(3) * beta.powi(2) * sigma.powi(6) * radius.powi(8) * series;

    let r4 = radius.powi(4);
    let pi2 = PI * PI;
    let s4 = sigma.powi(4);
    let q = -81.0 * pi2 * r4 * w.powi(4) * s4
        - 81.0
            * pi2
            * r4
            * w3
            * (4.0 * radius * radius * beta * beta
                - 4.0 * radius * sigma * beta
                - 9.0 * sigma * sigma)
            * s4;

    let inner = 4.0 * q * q * q + delta * delta;
    let v = if inner >= 0.0 {
        Complex::real(delta + inner.sqrt()).cbrt()
    } else {
        Complex {
            re: delta,
            im: (-inner).sqrt(),
        }
        .cbrt()
    };

    let cbrt2 = 2.0f64.cbrt();
    let term1 = v.scale(1.0 / (3.0 * cbrt2 * w3));
    let term2 = 3.0 * PI * radius * radius * sigma * sigma / w;
    let term3 = v.recip().scale(-cbrt2 * q / (3.0 * w3));
    term1.re + term2 + term3.re
}

#[derive(Debug, Clone, Copy)]
struct Complex {
    re: f64,
    im: f64,
}

impl Complex {
    fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    fn cbrt(self) -> Self {
        if self.im == 0.0 && self.re >= 0.0 {
            return Self::real(self.re.cbrt());
        }
        let rho = self.re.hypot(self.im).cbrt();
        let theta = self.im.atan2(self.re) / 3.0;
        Self {
            re: rho * theta.cos(),
            im: rho * theta.sin(),
        }
    }

    fn recip(self) -> Self {
        let norm = self.re * self.re + self.im * self.im;
        Self {
            re: self.re / norm,
            im: -self.im / norm,
        }
    }

    fn scale(self, k: f64) -> Self {
        Self {
            re: self.re * k,
            im: self.im * k,
        }
    }
}

/// Lower bound `τ = 2/(2 + 8βR/(9σ))²` of the normalized area `Π/(πR²)`
/// below which the admissible section would develop cusps.
pub fn tau_limit(params: &Params) -> Result<f64, OvalError> {
    if params.sigma <= 0.0 {
        return Err(OvalError::DegenerateHyperbola);
    }
    let q = 2.0 + 8.0 * params.beta * params.radius / (9.0 * params.sigma);
    Ok(2.0 / (q * q))
}

/// Admissibility constraints on a candidate `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintFlags {
    /// The fixed-area radicand stays non-negative: `a ≤ √(Π/π)`.
    pub well_defined: bool,
    /// No cusps: `a > 2b`, strict.
    pub cusp_free: bool,
    /// No interpenetration: `a + b < R`, strict.
    pub no_interpenetration: bool,
}

impl ConstraintFlags {
    pub fn all(&self) -> bool {
        self.well_defined && self.cusp_free && self.no_interpenetration
    }
}

/// Checks the three admissibility constraints at a point with nonnegative
/// coordinates. Boundary equalities in the cusp and interpenetration
/// constraints classify as inadmissible.
pub fn classify_region(params: &Params, a: f64, b: f64) -> ConstraintFlags {
    ConstraintFlags {
        well_defined: PI * a * a <= params.area * (1.0 + RADICAND_CLAMP),
        cusp_free: a > 2.0 * b,
        no_interpenetration: a + b < params.radius,
    }
}

/// A candidate intersection together with the constraints it failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RejectedCandidate {
    pub a: f64,
    pub b: f64,
    pub flags: ConstraintFlags,
}

/// Critical point data for the oval case.
#[derive(Debug, Clone, PartialEq)]
pub struct OvalSolution {
    /// The admissible intersection point.
    pub shape: LimaconShape,
    /// Inextensibility multiplier.
    pub lambda_bar: f64,
    /// Every real intersection of the conic system.
    pub intersections: Vec<Intersection>,
    /// 2, 3 (tangent contact) or 4.
    pub n_intersections: u32,
    /// Constraint flags of the selected point (all true).
    pub constraint_flags: ConstraintFlags,
    /// Cusp limit of the normalized area.
    pub tau: f64,
    /// Tangency area of the conic system.
    pub xi2: f64,
}

/// Multiplier from the first reduced equation of the oval system:
/// `λ = α/R² + 2βa² + 2σa - 2σR - 2βΠ/π + 2σb`.
pub fn lambda_from_oval(params: &Params, a: f64, b: f64) -> f64 {
    let Params {
        alpha,
        beta,
        sigma,
        area,
        radius,
    } = *params;
    alpha / (radius * radius) + 2.0 * beta * a * a + 2.0 * sigma * a
        - 2.0 * sigma * radius
        - 2.0 * beta * area / PI
        + 2.0 * sigma * b
}

/// Selects the unique admissible intersection point and solves the linear
/// equation for the multiplier. Guaranteed to exist for
/// `τ < Π/(πR²) ≤ 1`; outside that range the failure reports which
/// constraint excluded each candidate.
pub fn solve_oval(params: &Params) -> Result<OvalSolution, OvalError> {
    let tau = tau_limit(params)?;
    let areas = critical_areas(params)?;
    let intersections = intersect_conics(params)?;

    let mut admissible: Vec<(Intersection, ConstraintFlags)> = Vec::new();
    let mut rejected: Vec<RejectedCandidate> = Vec::new();
    for point in &intersections {
        let flags = classify_region(params, point.a, point.b);
        if point.a > 0.0 && point.b >= 0.0 && flags.all() {
            admissible.push((*point, flags));
        } else {
            rejected.push(RejectedCandidate {
                a: point.a,
                b: point.b,
                flags,
            });
        }
    }

    match admissible.len() {
        1 => {
            let (point, constraint_flags) = admissible[0];
            let shape = LimaconShape::new(point.a, point.b.max(0.0))?;
            let lambda_bar = lambda_from_oval(params, shape.a, shape.b);
            let n_intersections = intersections.len() as u32;
            Ok(OvalSolution {
                shape,
                lambda_bar,
                intersections,
                n_intersections,
                constraint_flags,
                tau,
                xi2: areas.xi2,
            })
        }
        0 => Err(OvalError::NoAdmissibleIntersection { rejected }),
        _ => Err(OvalError::AmbiguousIntersections {
            points: admissible.iter().map(|(p, _)| (p.a, p.b)).collect(),
        }),
    }
}

/// Diagnostic for the complementary attachment where the film would span
/// the shorter semi-axis `a - b`. Mirroring `b ↦ -b` maps that system onto
/// the standard one, so its first-quadrant candidates are the standard
/// intersections with negative `b`. The physical statement is that no such
/// candidate is admissible.
pub fn short_axis_attachment_candidates(
    params: &Params,
) -> Result<Vec<Intersection>, OvalError> {
    let intersections = intersect_conics(params)?;
    Ok(intersections
        .into_iter()
        .filter(|p| p.a > 0.0 && p.b < 0.0)
        .map(|p| Intersection {
            a: p.a,
            b: -p.b,
            tangent: p.tangent,
        })
        .filter(|p| {
            let flags = classify_region(params, p.a, p.b);
            // Interpenetration guards the attached side a - b here.
            flags.well_defined && flags.cusp_free && p.a - p.b < params.radius
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub enum OvalError {
    RadicandNegative { area: f64, a: f64 },
    InvalidShape { a: f64, b: f64 },
    DegenerateHyperbola,
    Quartic(QuarticError),
    NoDiscriminantRoot,
    NoAdmissibleIntersection { rejected: Vec<RejectedCandidate> },
    AmbiguousIntersections { points: Vec<(f64, f64)> },
}

impl fmt::Display for OvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OvalError::RadicandNegative { area, a } => write!(
                f,
                "semi-axis {a} exceeds the area bound sqrt({area}/pi)"
            ),
            OvalError::InvalidShape { a, b } => {
                write!(f, "limacon requires a > 0 and b >= 0, got ({a}, {b})")
            }
            OvalError::DegenerateHyperbola => {
                write!(f, "the oval system needs sigma > 0")
            }
            OvalError::Quartic(e) => write!(f, "intersection quartic: {e}"),
            OvalError::NoDiscriminantRoot => {
                write!(f, "no sign change of the area discriminant found")
            }
            OvalError::NoAdmissibleIntersection { rejected } => {
                write!(f, "no admissible intersection among {} candidates", rejected.len())?;
                for r in rejected.iter() {
                    write!(
                        f,
                        "; ({:.6}, {:.6}) well_defined={} cusp_free={} no_interpenetration={}",
                        r.a,
                        r.b,
                        r.flags.well_defined,
                        r.flags.cusp_free,
                        r.flags.no_interpenetration
                    )?;
                }
                Ok(())
            }
            OvalError::AmbiguousIntersections { points } => {
                write!(f, "{} admissible intersections, expected one", points.len())
            }
        }
    }
}
