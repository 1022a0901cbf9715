//! Real-root machinery for quartic polynomials: discriminant, Descartes
//! sign-change counting and guaranteed isolation.
//!
//! Isolation uses Sturm-sequence counting on dyadic subdivision followed by
//! safeguarded Newton polishing. This beats closed-form resolvents for the
//! coefficient ranges encountered here, in particular near double roots
//! where radical formulas lose half the working precision.

// Inherent std methods shadow the shim when the test harness links std.
#[allow(unused_imports)]
use crate::float::FloatExt;
use alloc::vec::Vec;
use core::fmt;

/// Target relative residual for polished roots.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-12;

/// Relative coefficient threshold below which Sturm remainders are trimmed.
const TRIM_EPS: f64 = 1e-13;

/// Interval width (relative) below which a root cluster is one root.
const WIDTH_FLOOR: f64 = 1e-13;

/// Distance (relative) below which two polished roots merge.
const MERGE_EPS: f64 = 1e-10;

/// Relative derivative magnitude below which a derivative "vanishes" when
/// assigning multiplicities.
const MULT_EPS: f64 = 1e-7;

/// Degree-4 real polynomial, coefficients in descending order `c₄…c₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticPoly {
    coeffs: [f64; 5],
}

/// One real root with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: u32,
}

/// Result of real-root isolation over an interval.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    /// Distinct real roots, sorted ascending.
    pub real_roots: Vec<RealRoot>,
    /// Number of strictly positive roots, counted with multiplicity.
    pub positive_count: u32,
    /// Standard degree-4 discriminant of the polynomial.
    pub discriminant: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuarticError {
    /// Leading coefficient zero or a coefficient not finite.
    NotAQuartic,
    /// Isolation interval empty or not finite.
    DegenerateInterval { lo: f64, hi: f64 },
}

impl fmt::Display for QuarticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuarticError::NotAQuartic => {
                write!(f, "quartic requires finite coefficients and c4 != 0")
            }
            QuarticError::DegenerateInterval { lo, hi } => {
                write!(f, "isolation interval [{lo}, {hi}] is degenerate")
            }
        }
    }
}

impl QuarticPoly {
    pub fn new(coeffs: [f64; 5]) -> Result<Self, QuarticError> {
        if coeffs.iter().any(|c| !c.is_finite()) || coeffs[0] == 0.0 {
            return Err(QuarticError::NotAQuartic);
        }
        Ok(Self { coeffs })
    }

    /// Coefficients in descending order `c₄…c₀`.
    #[inline]
    pub fn coeffs(&self) -> [f64; 5] {
        self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_derivative(&self, x: f64) -> f64 {
        let [c4, c3, c2, c1, _] = self.coeffs;
        ((4.0 * c4 * x + 3.0 * c3) * x + 2.0 * c2) * x + c1
    }

    /// Magnitude scale `Σ|cᵢ||x|ⁱ` used for relative residuals.
    pub fn magnitude_at(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs
            .iter()
            .fold(0.0, |acc: f64, &c| acc * ax + c.abs())
            .max(f64::MIN_POSITIVE)
    }

    /// Standard 16-term discriminant. Its sign classifies the root pattern;
    /// in particular `Δ < 0` means two distinct real roots and one
    /// complex-conjugate pair.
    pub fn discriminant(&self) -> f64 {
        discriminant_of(&self.coeffs)
    }

    /// Number of sign changes in the nonzero coefficient sequence: an upper
    /// bound, of the same parity, on the count of positive real roots.
    pub fn descartes_positive(&self) -> u32 {
        let mut changes = 0;
        let mut prev = 0.0f64;
        for &c in &self.coeffs {
            if c != 0.0 {
                if prev != 0.0 && c * prev < 0.0 {
                    changes += 1;
                }
                prev = c;
            }
        }
        changes
    }

    /// Isolates every real root in `[lo, hi]`, polishes each to relative
    /// residual below [`ROOT_RESIDUAL_TOL`] and detects multiplicities by
    /// derivative analysis. Coefficients are normalized by their largest
    /// magnitude first so large inputs cannot overflow intermediate
    /// quantities.
    pub fn isolate_real_roots(&self, lo: f64, hi: f64) -> Result<RootReport, QuarticError> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(QuarticError::DegenerateInterval { lo, hi });
        }
        let poly = Poly::from_coeffs(&normalized(&self.coeffs));

        // Extend left so a root exactly at `lo` is captured: Sturm counting
        // is half-open on the left.
        let lo_ext = lo - 1e-12 * lo.abs().max(1.0);
        let mut found = real_roots_in(&poly, lo_ext, hi);
        found.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());

        // Merge pairs that polished to the same point.
        let mut merged: Vec<PolishedRoot> = Vec::new();
        for root in found {
            match merged.last_mut() {
                Some(last)
                    if (root.value - last.value).abs()
                        <= MERGE_EPS * last.value.abs().max(1.0) =>
                {
                    last.value = 0.5 * (last.value + root.value);
                    last.merged += 1;
                }
                _ => merged.push(root),
            }
        }

        let cascade = derivative_cascade(&self.coeffs);
        let mut real_roots: Vec<RealRoot> = Vec::new();
        let mut total: u32 = 0;
        for root in merged {
            let (value, multiplicity) = settle_root(&cascade, &root, 4 - total);
            total += multiplicity;
            real_roots.push(RealRoot {
                value,
                multiplicity,
            });
        }

        let positive_count = real_roots
            .iter()
            .filter(|r| r.value > 0.0)
            .map(|r| r.multiplicity)
            .sum();

        Ok(RootReport {
            real_roots,
            positive_count,
            discriminant: self.discriminant(),
        })
    }

    /// Real critical points (roots of the derivative) inside `[lo, hi]`.
    pub(crate) fn critical_points(&self, lo: f64, hi: f64) -> Vec<f64> {
        let poly = Poly::from_coeffs(&normalized(&self.coeffs));
        let mut out: Vec<f64> = real_roots_in(&poly.derivative(), lo, hi)
            .into_iter()
            .map(|r| r.value)
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out
    }

}

/// Confirms the multiplicity of a polished root and sharpens its value.
///
/// A multiplicity-`m` root is only a simple root of the `(m-1)`-th
/// derivative, so polishing on `p` alone cannot get closer than roughly
/// `ε^(1/m)`. Candidate multiplicities (parity-matched to whether the
/// polynomial changed sign) are therefore validated by re-locating the
/// root on the matching derivative and requiring every lower derivative
/// to vanish there.
fn settle_root(cascade: &[Poly; 4], root: &PolishedRoot, budget: u32) -> (f64, u32) {
    let candidates: &[u32] = if root.sign_change { &[3] } else { &[4, 2] };
    let radius = 1e-3 * root.value.abs().max(1.0);
    for &m in candidates {
        if m > budget.max(1) || m < 2 {
            continue;
        }
        let anchor = &cascade[(m - 1) as usize];
        let Some(refined) = nearest_root(anchor, root.value, radius) else {
            continue;
        };
        let vanishes = (0..(m - 1) as usize).all(|k| {
            cascade[k].eval(refined).abs() <= MULT_EPS * cascade[k].magnitude_at(refined)
        });
        if vanishes {
            return (refined, m);
        }
    }
    let base = if root.sign_change { 1 } else { 2 };
    (root.value, base.min(budget.max(1)))
}

/// Nearest real root of a linear or quadratic polynomial within `radius`
/// of `x0`.
fn nearest_root(p: &Poly, x0: f64, radius: f64) -> Option<f64> {
    let mut best: Option<f64> = None;
    let mut consider = |candidate: f64| {
        if (candidate - x0).abs() <= radius
            && best.is_none_or(|b| (candidate - x0).abs() < (b - x0).abs())
        {
            best = Some(candidate);
        }
    };
    match p.deg {
        1 => consider(-p.c[0] / p.c[1]),
        2 => {
            let (a, b, c) = (p.c[2], p.c[1], p.c[0]);
            let disc = b * b - 4.0 * a * c;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                // Citardauq ordering avoids cancellation in the smaller root.
                let q = -0.5 * (b + b.signum() * sq);
                consider(q / a);
                if q != 0.0 {
                    consider(c / q);
                }
            }
        }
        _ => {}
    }
    best
}

/// Standard quartic discriminant of descending coefficients `[a, b, c, d, e]`.
pub(crate) fn discriminant_of(coeffs: &[f64; 5]) -> f64 {
    let [a, b, c, d, e] = *coeffs;
    256.0 * a * a * a * e * e * e - 192.0 * a * a * b * d * e * e
        - 128.0 * a * a * c * c * e * e
        + 144.0 * a * a * c * d * d * e
        - 27.0 * a * a * d * d * d * d
        + 144.0 * a * b * b * c * e * e
        - 6.0 * a * b * b * d * d * e
        - 80.0 * a * b * c * c * d * e
        + 18.0 * a * b * c * d * d * d
        + 16.0 * a * c * c * c * c * e
        - 4.0 * a * c * c * c * d * d
        - 27.0 * b * b * b * b * e * e
        + 18.0 * b * b * b * c * d * e
        - 4.0 * b * b * b * d * d * d
        - 4.0 * b * b * c * c * c * e
        + b * b * c * c * d * d
}

fn normalized(coeffs: &[f64; 5]) -> [f64; 5] {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut out = *coeffs;
    for c in &mut out {
        *c /= scale;
    }
    out
}

/// Dense polynomial of degree at most 4, ascending coefficients.
#[derive(Debug, Clone, Copy)]
struct Poly {
    c: [f64; 5],
    deg: usize,
}

impl Poly {
    fn from_coeffs(descending: &[f64; 5]) -> Self {
        let mut c = [0.0; 5];
        for (i, &v) in descending.iter().rev().enumerate() {
            c[i] = v;
        }
        Self { c, deg: 4 }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        let scale = self.max_abs();
        if scale == 0.0 {
            return Self { c: [0.0; 5], deg: 0 };
        }
        for v in &mut self.c {
            if v.abs() <= TRIM_EPS * scale {
                *v = 0.0;
            }
        }
        while self.deg > 0 && self.c[self.deg] == 0.0 {
            self.deg -= 1;
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.deg == 0 && self.c[0] == 0.0
    }

    fn max_abs(&self) -> f64 {
        self.c[..=self.deg]
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }

    fn normalized(mut self) -> Self {
        let scale = self.max_abs();
        if scale > 0.0 {
            for v in &mut self.c[..=self.deg] {
                *v /= scale;
            }
        }
        self
    }

    fn eval(&self, x: f64) -> f64 {
        let mut acc = self.c[self.deg];
        for k in (0..self.deg).rev() {
            acc = acc * x + self.c[k];
        }
        acc
    }

    fn magnitude_at(&self, x: f64) -> f64 {
        let ax = x.abs();
        let mut acc = self.c[self.deg].abs();
        for k in (0..self.deg).rev() {
            acc = acc * ax + self.c[k].abs();
        }
        acc.max(f64::MIN_POSITIVE)
    }

    fn derivative(&self) -> Self {
        let mut c = [0.0; 5];
        for i in 1..=self.deg {
            c[i - 1] = self.c[i] * i as f64;
        }
        Self {
            c,
            deg: self.deg.saturating_sub(1),
        }
        .trimmed()
    }

    /// Remainder of `self / divisor` by long division.
    fn rem(&self, divisor: &Self) -> Self {
        debug_assert!(divisor.deg >= 1 || divisor.c[0] != 0.0);
        let mut r = *self;
        let lead = divisor.c[divisor.deg];
        while r.deg >= divisor.deg && !(r.deg == 0 && r.c[0] == 0.0) {
            let q = r.c[r.deg] / lead;
            let shift = r.deg - divisor.deg;
            for i in 0..=divisor.deg {
                r.c[shift + i] -= q * divisor.c[i];
            }
            r.c[r.deg] = 0.0;
            if r.deg == 0 {
                break;
            }
            r.deg -= 1;
            r = r.trimmed();
            if r.is_zero() {
                break;
            }
        }
        r.trimmed()
    }
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = Vec::with_capacity(5);
    chain.push(p.normalized());
    let dp = p.derivative();
    if dp.is_zero() {
        return chain;
    }
    chain.push(dp.normalized());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let mut neg = r;
        for v in &mut neg.c[..=neg.deg] {
            *v = -*v;
        }
        chain.push(neg.normalized());
        if chain.last().unwrap().deg == 0 {
            break;
        }
    }
    chain
}

fn sign_variations(chain: &[Poly], x: f64) -> u32 {
    let mut changes = 0;
    let mut prev = 0.0f64;
    for p in chain {
        let v = p.eval(x);
        if v != 0.0 {
            if prev != 0.0 && v * prev < 0.0 {
                changes += 1;
            }
            prev = v;
        }
    }
    changes
}

#[derive(Debug, Clone, Copy)]
struct PolishedRoot {
    value: f64,
    sign_change: bool,
    merged: u32,
}

/// Distinct real roots of `p` in `(lo, hi]`, polished. Works for any degree
/// up to 4; the even-multiplicity path recurses on the derivative.
fn real_roots_in(p: &Poly, lo: f64, hi: f64) -> Vec<PolishedRoot> {
    let mut out = Vec::new();
    if p.is_zero() {
        return out;
    }
    if p.deg == 0 {
        return out;
    }
    if p.deg == 1 {
        let root = -p.c[0] / p.c[1];
        if root > lo && root <= hi {
            out.push(PolishedRoot {
                value: root,
                sign_change: true,
                merged: 0,
            });
        }
        return out;
    }

    let chain = sturm_chain(p);
    let mut stack: Vec<(f64, f64, u32, u32)> = Vec::new();
    stack.push((lo, hi, sign_variations(&chain, lo), sign_variations(&chain, hi)));

    while let Some((a, b, va, vb)) = stack.pop() {
        let count = va.saturating_sub(vb);
        if count == 0 {
            continue;
        }
        let width = b - a;
        let floor = WIDTH_FLOOR * a.abs().max(b.abs()).max(1.0);
        if count == 1 || width <= floor {
            if let Some(root) = refine_in_bracket(p, a, b) {
                out.push(root);
            }
            continue;
        }
        let mut mid = 0.5 * (a + b);
        if p.eval(mid) == 0.0 {
            mid += width * 1e-9;
        }
        let vm = sign_variations(&chain, mid);
        stack.push((a, mid, va, vm));
        stack.push((mid, b, vm, vb));
    }
    out
}

/// Polishes the single distinct root inside `[a, b]`. Sign-change roots use
/// bisection with Newton acceleration, confined to the bracket; touching
/// roots (no sign change) are located at the matching critical point of the
/// derivative.
fn refine_in_bracket(p: &Poly, a: f64, b: f64) -> Option<PolishedRoot> {
    let fa = p.eval(a);
    let fb = p.eval(b);
    if fa == 0.0 {
        return Some(PolishedRoot {
            value: a,
            sign_change: true,
            merged: 0,
        });
    }
    if fb == 0.0 {
        return Some(PolishedRoot {
            value: b,
            sign_change: true,
            merged: 0,
        });
    }

    if fa * fb < 0.0 {
        let dp = p.derivative();
        let (mut lo, mut hi, mut flo) = (a, b, fa);
        let mut x = 0.5 * (lo + hi);
        for _ in 0..200 {
            let fx = p.eval(x);
            if fx == 0.0 {
                break;
            }
            if flo * fx < 0.0 {
                hi = x;
            } else {
                lo = x;
                flo = fx;
            }
            let dfx = dp.eval(x);
            let newton = x - fx / dfx;
            let next = if dfx != 0.0 && newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
            if (next - x).abs() <= f64::EPSILON * x.abs().max(1.0) {
                x = next;
                break;
            }
            x = next;
        }
        return Some(PolishedRoot {
            value: x,
            sign_change: true,
            merged: 0,
        });
    }

    // Even-multiplicity root: the polynomial touches zero at a critical
    // point. Recurse on the derivative and pick the critical point with
    // the smallest residual. Residuals are judged against the polynomial's
    // magnitude over the whole bracket; the pointwise magnitude collapses
    // together with the value at a high-order root near the origin.
    let interval_scale = p.magnitude_at(a.abs().max(b.abs()));
    let dp = p.derivative();
    let crits = real_roots_in(&dp, a, b);
    let mut best: Option<(f64, f64)> = None;
    for c in crits {
        let rel = p.eval(c.value).abs() / interval_scale;
        if best.is_none_or(|(_, r)| rel < r) {
            best = Some((c.value, rel));
        }
    }
    match best {
        Some((value, rel)) if rel <= 1e-9 => Some(PolishedRoot {
            value,
            sign_change: false,
            merged: 0,
        }),
        // Sturm claimed a root here but no touching point confirms it:
        // a cluster collapsed below the width floor. Use the midpoint.
        _ => {
            let mid = 0.5 * (a + b);
            let rel = p.eval(mid).abs() / interval_scale;
            (rel <= 1e-9).then_some(PolishedRoot {
                value: mid,
                sign_change: false,
                merged: 0,
            })
        }
    }
}

/// `[p, p', p'', p''']` as evaluable polynomials (descending input).
fn derivative_cascade(coeffs: &[f64; 5]) -> [Poly; 4] {
    let p0 = Poly::from_coeffs(&normalized(coeffs));
    let p1 = p0.derivative();
    let p2 = p1.derivative();
    let p3 = p2.derivative();
    [p0, p1, p2, p3]
}
