//! Canonical potential equations and their behavior under contraction,
//! checked in high-precision fixed-point arithmetic.
//!
//! The potential of a nondegenerate second-order system satisfies a pair of
//! canonical equations determined by the free quadratic algebra,
//!
//! ```text
//! V_22 = V_11 + A22 V_1 + B22 V_2,
//! V_12 =        A12 V_1 + B12 V_2,
//! ```
//!
//! where subscripts denote partial derivatives in the two chart coordinates.
//! This module encodes the coefficient functions for the generic system on
//! the sphere (chart `(psi, phi)`) and for its flat-space contraction target
//! (polar chart `(R, phi)`), verifies that each four-dimensional potential
//! basis solves its canonical equations, and follows an epsilon-dependent
//! basis through the contraction `psi = ln(1/eps)/2 - R` to its flat-space
//! limit.  All transcendental evaluations use [`Fix`], a 192-fractional-bit
//! fixed-point type, so the residual tolerances below are far beyond
//! double-precision roundoff.

use crate::error::CoreError;
use crate::fixedpoint::Fix;
use crate::jet::Jet2;
use crate::ring::{Field, Ring};

/// Taylor jet of a single-variable curve along one chart axis.
///
/// `derivs[k]` is the k-th derivative of the curve at the base point; the
/// jet order is `derivs.len() - 1`.
fn curve_jet(axis: usize, derivs: &[Fix], base: &(Fix, Fix)) -> Jet2<Fix> {
    let order = derivs.len() - 1;
    let mut jet = Jet2::zero(base.clone(), order);
    let mut fact = Fix::one();
    for (k, d) in derivs.iter().enumerate() {
        if k > 0 {
            fact = fact.mul(&Fix::from_int(k as i64));
        }
        let c = d.div(&fact);
        if axis == 0 {
            jet.set(k, 0, c);
        } else {
            jet.set(0, k, c);
        }
    }
    jet
}

fn cosh_jet(axis: usize, x0: &Fix, base: &(Fix, Fix)) -> Jet2<Fix> {
    let (c, s) = (x0.cosh(), x0.sinh());
    curve_jet(axis, &[c.clone(), s, c], base)
}

fn sinh_jet(axis: usize, x0: &Fix, base: &(Fix, Fix)) -> Jet2<Fix> {
    let (c, s) = (x0.cosh(), x0.sinh());
    curve_jet(axis, &[s.clone(), c, s], base)
}

fn cos_jet(axis: usize, x0: &Fix, base: &(Fix, Fix)) -> Jet2<Fix> {
    let (c, s) = (x0.cos(), x0.sin());
    curve_jet(axis, &[c.clone(), s.neg(), c.neg()], base)
}

fn sin_jet(axis: usize, x0: &Fix, base: &(Fix, Fix)) -> Jet2<Fix> {
    let (c, s) = (x0.cos(), x0.sin());
    curve_jet(axis, &[s.clone(), c, s.neg()], base)
}

/// Jet of `exp(a*x)` along `axis` with integer rate `a`.
fn exp_jet(axis: usize, rate: i64, x0: &Fix, base: &(Fix, Fix)) -> Jet2<Fix> {
    let v = x0.mul(&Fix::from_int(rate)).exp();
    let a = Fix::from_int(rate);
    let d1 = v.mul(&a);
    let d2 = d1.mul(&a);
    curve_jet(axis, &[v, d1, d2], base)
}

/// Coefficient functions of the canonical potential equations in one chart.
pub struct ChartCoeffs {
    pub a12: Fix,
    pub a22: Fix,
    pub b12: Fix,
    pub b22: Fix,
}

/// The shared `B22` coefficient `-3 (cos^2 - sin^2) / (sin cos)`.
fn b22_of(phi: &Fix) -> Fix {
    let (c, s) = (phi.cos(), phi.sin());
    let num = c.mul(&c).sub(&s.mul(&s)).mul(&Fix::from_int(-3));
    num.div(&s.mul(&c))
}

/// Canonical coefficients for the generic sphere system in `(psi, phi)`.
pub fn sphere_coeffs(psi: &Fix, phi: &Fix) -> ChartCoeffs {
    let (ch, sh) = (psi.cosh(), psi.sinh());
    let a22_num = ch
        .mul(&ch)
        .mul(&Fix::from_int(3))
        .sub(&sh.mul(&sh));
    ChartCoeffs {
        a12: Fix::zero(),
        a22: a22_num.div(&sh.mul(&ch)),
        b12: sh.mul(&Fix::from_int(2)).div(&ch),
        b22: b22_of(phi),
    }
}

/// Canonical coefficients for the flat-space target in polar `(R, phi)`.
pub fn flat_coeffs(phi: &Fix) -> ChartCoeffs {
    ChartCoeffs {
        a12: Fix::zero(),
        a22: Fix::from_int(-2),
        b12: Fix::from_int(-2),
        b22: b22_of(phi),
    }
}

/// Residuals of the two canonical equations for one potential jet.
///
/// The jet must have order at least 2.  Returns
/// `(V22 - V11 - A22 V1 - B22 V2, V12 - A12 V1 - B12 V2)` at the base point.
pub fn canonical_residuals(f: &Jet2<Fix>, coeffs: &ChartCoeffs) -> (Fix, Fix) {
    let f1 = f.partial(0);
    let f2 = f.partial(1);
    let f11 = f1.partial(0).value().clone();
    let f12 = f1.partial(1).value().clone();
    let f22 = f2.partial(1).value().clone();
    let f1 = f1.value().clone();
    let f2 = f2.value().clone();
    let r1 = f22
        .sub(&f11)
        .sub(&coeffs.a22.mul(&f1))
        .sub(&coeffs.b22.mul(&f2));
    let r2 = f12.sub(&coeffs.a12.mul(&f1)).sub(&coeffs.b12.mul(&f2));
    (r1, r2)
}

/// Order-2 jets of the four sphere potential basis functions at `(psi, phi)`:
/// `cosh^2/cos^2`, `cosh^2/sin^2`, `cosh^2/sinh^2`, `1`.
pub fn sphere_basis(psi: &Fix, phi: &Fix) -> Result<Vec<Jet2<Fix>>, CoreError> {
    let base = (psi.clone(), phi.clone());
    let ch2 = cosh_jet(0, psi, &base).pow(2);
    let sh2 = sinh_jet(0, psi, &base).pow(2);
    let c2 = cos_jet(1, phi, &base).pow(2);
    let s2 = sin_jet(1, phi, &base).pow(2);
    Ok(vec![
        ch2.mul(&c2.recip()?),
        ch2.mul(&s2.recip()?),
        ch2.mul(&sh2.recip()?),
        Jet2::constant(Fix::one(), base, 2),
    ])
}

/// Order-2 jets of the four flat potential basis functions at `(R, phi)`:
/// `e^{2R}`, `e^{-2R}/cos^2`, `e^{-2R}/sin^2`, `1`.
pub fn flat_basis(r: &Fix, phi: &Fix) -> Result<Vec<Jet2<Fix>>, CoreError> {
    let base = (r.clone(), phi.clone());
    let e2 = exp_jet(0, 2, r, &base);
    let em2 = exp_jet(0, -2, r, &base);
    let c2 = cos_jet(1, phi, &base).pow(2);
    let s2 = sin_jet(1, phi, &base).pow(2);
    Ok(vec![
        e2,
        em2.mul(&c2.recip()?),
        em2.mul(&s2.recip()?),
        Jet2::constant(Fix::one(), base, 2),
    ])
}

/// Result of checking one chart's potential basis against its canonical
/// equations over a family of sample points.
pub struct CanonicalReport {
    pub points: usize,
    pub max_residual: Fix,
    pub ok: bool,
}

fn fix_lt(a: &Fix, b: &Fix) -> bool {
    a.sub(b).is_negative()
}

fn fix_max(a: Fix, b: Fix) -> Fix {
    if fix_lt(&a, &b) {
        b
    } else {
        a
    }
}

/// Checks that every sphere basis function solves the sphere canonical
/// equations at `points` interior sample points, to tolerance `tol`.
pub fn sphere_canonical_check(points: usize, tol: &Fix) -> Result<CanonicalReport, CoreError> {
    let mut max = Fix::zero();
    for i in 0..points {
        let psi = Fix::from_ratio(3 + 2 * i as i64, 17);
        let phi = Fix::from_ratio(5 + 2 * i as i64, 31);
        let coeffs = sphere_coeffs(&psi, &phi);
        for f in sphere_basis(&psi, &phi)? {
            let (r1, r2) = canonical_residuals(&f, &coeffs);
            max = fix_max(max, fix_max(r1.abs(), r2.abs()));
        }
    }
    Ok(CanonicalReport {
        points,
        ok: fix_lt(&max, tol),
        max_residual: max,
    })
}

/// Checks the flat basis against the flat canonical equations.
pub fn flat_canonical_check(points: usize, tol: &Fix) -> Result<CanonicalReport, CoreError> {
    let mut max = Fix::zero();
    for i in 0..points {
        let r = Fix::from_ratio(2 * i as i64 - 19, 13);
        let phi = Fix::from_ratio(5 + 2 * i as i64, 31);
        let coeffs = flat_coeffs(&phi);
        for f in flat_basis(&r, &phi)? {
            let (r1, r2) = canonical_residuals(&f, &coeffs);
            max = fix_max(max, fix_max(r1.abs(), r2.abs()));
        }
    }
    Ok(CanonicalReport {
        points,
        ok: fix_lt(&max, tol),
        max_residual: max,
    })
}

/// Outcome of following the epsilon-dependent potential basis through the
/// sphere-to-flat contraction `psi = ln(1/eps)/2 - R` at one chart point.
///
/// For each epsilon the rescaled basis functions are
///
/// ```text
/// V1(eps) = (cosh^2/sinh^2 - 1) / (4 eps),
/// V2(eps) = eps cosh^2/cos^2,
/// V3(eps) = eps cosh^2/sin^2,
/// V4(eps) = 1,
/// ```
///
/// with limits `e^{2R}`, `e^{-2R}/(4 cos^2 phi)`, `e^{-2R}/(4 sin^2 phi)`,
/// and `1`.  The commonly quoted limits for `V2` and `V3` omit the factor
/// `1/4` produced by `cosh^2 psi ~ e^{2 psi}/4`; both readings are measured
/// here, and only the quarter-scaled targets are actually approached.
pub struct ContractionReport {
    /// |V1(eps) - e^{2R}| per epsilon.
    pub v1_errors: Vec<Fix>,
    /// |V2(eps) - e^{-2R}/(4 cos^2)| per epsilon.
    pub v2_errors: Vec<Fix>,
    /// |V2(eps) - e^{-2R}/cos^2| per epsilon (the unscaled reading).
    pub v2_errors_unscaled: Vec<Fix>,
    /// |V3(eps) - e^{-2R}/(4 sin^2)| per epsilon.
    pub v3_errors: Vec<Fix>,
    /// |V3(eps) - e^{-2R}/sin^2| per epsilon (the unscaled reading).
    pub v3_errors_unscaled: Vec<Fix>,
    /// |A22(psi(eps)) - 2| per epsilon; the sphere coefficient tends to 2,
    /// the negative of the flat-chart value, because the contraction flips
    /// the orientation of the first coordinate.
    pub a22_errors: Vec<Fix>,
    /// |B12(psi(eps)) - 2| per epsilon, with the same sign convention.
    pub b12_errors: Vec<Fix>,
    /// True when every error sequence that should converge is strictly
    /// decreasing and ends below `tol`.
    pub converges: bool,
    /// True when the unscaled `V2`/`V3` targets are *not* approached: their
    /// final errors stay above three quarters of the unscaled target less
    /// the tolerance.
    pub unscaled_targets_rejected: bool,
}

fn strictly_decreasing(errs: &[Fix]) -> bool {
    errs.windows(2).all(|w| fix_lt(&w[1], &w[0]))
}

/// Follows the epsilon basis through the contraction at chart point
/// `(r, phi)` over the given epsilon values (which must decrease).
pub fn potential_contraction_check(
    r: &Fix,
    phi: &Fix,
    eps_list: &[Fix],
    tol: &Fix,
) -> ContractionReport {
    let half = Fix::from_ratio(1, 2);
    let quarter = Fix::from_ratio(1, 4);
    let two = Fix::from_int(2);
    let e2r = r.mul(&two).exp();
    let em2r = e2r.inv();
    let cos2 = phi.cos().pow(2);
    let sin2 = phi.sin().pow(2);
    let v2_target = em2r.mul(&quarter).div(&cos2);
    let v2_unscaled = em2r.div(&cos2);
    let v3_target = em2r.mul(&quarter).div(&sin2);
    let v3_unscaled = em2r.div(&sin2);

    let mut report = ContractionReport {
        v1_errors: Vec::new(),
        v2_errors: Vec::new(),
        v2_errors_unscaled: Vec::new(),
        v3_errors: Vec::new(),
        v3_errors_unscaled: Vec::new(),
        a22_errors: Vec::new(),
        b12_errors: Vec::new(),
        converges: false,
        unscaled_targets_rejected: false,
    };

    for eps in eps_list {
        let psi = eps.ln().mul(&half).neg().sub(r);
        let ch2 = psi.cosh().pow(2);
        let sh2 = psi.sinh().pow(2);
        let v1 = ch2.div(&sh2).sub(&Fix::one()).div(&eps.mul(&Fix::from_int(4)));
        let v2 = eps.mul(&ch2).div(&cos2);
        let v3 = eps.mul(&ch2).div(&sin2);
        report.v1_errors.push(v1.sub(&e2r).abs());
        report.v2_errors.push(v2.sub(&v2_target).abs());
        report.v2_errors_unscaled.push(v2.sub(&v2_unscaled).abs());
        report.v3_errors.push(v3.sub(&v3_target).abs());
        report.v3_errors_unscaled.push(v3.sub(&v3_unscaled).abs());
        let coeffs = sphere_coeffs(&psi, phi);
        report.a22_errors.push(coeffs.a22.sub(&two).abs());
        report.b12_errors.push(coeffs.b12.sub(&two).abs());
    }

    let converging = [
        &report.v1_errors,
        &report.v2_errors,
        &report.v3_errors,
        &report.a22_errors,
        &report.b12_errors,
    ];
    report.converges = converging
        .iter()
        .all(|errs| strictly_decreasing(errs) && fix_lt(errs.last().unwrap(), tol));
    // The unscaled reading misses by asymptotically 3/4 of the target.
    let v2_floor = v2_unscaled.mul(&half);
    let v3_floor = v3_unscaled.mul(&half);
    report.unscaled_targets_rejected = !fix_lt(report.v2_errors_unscaled.last().unwrap(), &v2_floor)
        && !fix_lt(report.v3_errors_unscaled.last().unwrap(), &v3_floor);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_bases_satisfy_canonical_equations() {
        let tol = Fix::pow10_neg(25);
        let sphere = sphere_canonical_check(20, &tol).unwrap();
        assert!(
            sphere.ok,
            "sphere basis residual {:?} exceeds tolerance",
            sphere.max_residual
        );
        let flat = flat_canonical_check(20, &tol).unwrap();
        assert!(
            flat.ok,
            "flat basis residual {:?} exceeds tolerance",
            flat.max_residual
        );
    }

    #[test]
    fn contraction_carries_the_basis_to_its_flat_limits() {
        let eps_list = vec![Fix::pow10_neg(2), Fix::pow10_neg(4), Fix::pow10_neg(6)];
        let tol = Fix::pow10_neg(4);
        for (p, q) in [(3i64, 10i64), (-2, 5), (7, 9)] {
            let r = Fix::from_ratio(p, q);
            let phi = Fix::from_ratio(4, 7);
            let report = potential_contraction_check(&r, &phi, &eps_list, &tol);
            assert!(report.converges, "errors failed to shrink at R={p}/{q}");
            assert!(
                report.unscaled_targets_rejected,
                "unscaled targets were unexpectedly approached at R={p}/{q}"
            );
        }
    }
}
