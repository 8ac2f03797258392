//! Independent low-precision cross-checks of the summation engine via
//! adaptive quadrature of integral representations.
//!
//! Everything here runs in plain `f64`. The oracle's job is to catch
//! systematic mistakes (wrong index order, off-by-one exponents), not to
//! supply digits, so a relative tolerance around `1e-8` is the intended
//! operating point. Endpoint logarithmic singularities are softened by the
//! substitutions `t = e^{-w}` and `t = 1 - e^{-v}`, which turn the
//! integrands into exponentially decaying functions on `[0, inf)`.

use alloc::vec::Vec;

use libm::{exp, expm1, log, pow};

/// Quadrature settings.
#[derive(Clone, Debug)]
pub struct QuadConfig {
    /// Relative tolerance, clamped to `[1e-12, 1e-4]`.
    pub rel_tol: f64,
    /// Budget of interval bisections across one integral.
    pub max_subdivisions: u32,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            max_subdivisions: 200_000,
        }
    }
}

impl QuadConfig {
    fn tol(&self) -> f64 {
        self.rel_tol.clamp(1e-12, 1e-4)
    }
}

/// Quadrature failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadError {
    /// The subdivision budget ran out before reaching the tolerance.
    SubdivisionLimit,
}

impl core::fmt::Display for QuadError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            QuadError::SubdivisionLimit => write!(f, "quadrature subdivision limit reached"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for QuadError {}

/// Adaptive Simpson with the usual Richardson error estimate
/// `|S2 - S1| / 15`, splitting until the local tolerance is met.
fn adaptive_simpson(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    budget: &mut i64,
) -> Result<f64, QuadError> {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        f: &mut dyn FnMut(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        budget: &mut i64,
        depth: u32,
    ) -> Result<f64, QuadError> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        // the f64 floor stops refinement once the panel is at rounding
        // noise, otherwise the per-level tolerance halving cannot terminate
        // on singular integrands
        let floor = 4.0 * f64::EPSILON * (left.abs() + right.abs()) + 1e-305;
        // depth 120 panels span < 2^-120 of the range; their residual is
        // negligible next to any permitted tolerance
        if (depth >= 4 && delta.abs() <= 15.0 * tol) || delta.abs() <= floor || depth >= 120 {
            return Ok(left + right + delta / 15.0);
        }
        *budget -= 2;
        if *budget < 0 {
            return Err(QuadError::SubdivisionLimit);
        }
        let l = rec(f, a, m, fa, flm, fm, left, 0.5 * tol, budget, depth + 1)?;
        let r = rec(f, m, b, fm, frm, fb, right, 0.5 * tol, budget, depth + 1)?;
        Ok(l + r)
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    rec(f, a, b, fa, fm, fb, whole, tol, budget, 0)
}

fn factorial_f(n: u32) -> f64 {
    let mut acc = 1.0;
    for k in 2..=n as u64 {
        acc *= k as f64;
    }
    acc
}

/// `-ln(1 - e^{-v})`, the weight function of the `t = 1 - e^{-v}`
/// substitution (an involution on `(0, inf)`).
fn glog(v: f64) -> f64 {
    -log(-expm1(-v))
}

/// `zeta(p+2)` as `1/(p+1)! Int_0^1 log(1/t)^{p+1} / (1-t) dt`,
/// evaluated after `t = e^{-w}`.
pub fn quad_zeta_single(p: u32, qc: &QuadConfig) -> Result<f64, QuadError> {
    let tol = qc.tol();
    let mut budget = qc.max_subdivisions as i64;
    // integrand w^{p+1} e^{-w} / (1 - e^{-w}); truncate where it drops
    // below tol/100 relative to the total mass ~ (p+1)!
    let cut = trunc_point(p + 1, tol);
    let mut f = |w: f64| -> f64 {
        if w == 0.0 {
            return if p == 0 { 1.0 } else { 0.0 };
        }
        pow(w, (p + 1) as f64) * exp(-w) / (-expm1(-w))
    };
    let scale = factorial_f(p + 1);
    let raw = adaptive_simpson(&mut f, 0.0, cut, tol * scale, &mut budget)?;
    Ok(raw / scale)
}

/// `zeta(bar(p+1))` as `-(1/p!) Int_0^1 log(1/t)^p / (1+t) dt`.
pub fn quad_eta(p: u32, qc: &QuadConfig) -> Result<f64, QuadError> {
    let tol = qc.tol();
    let mut budget = qc.max_subdivisions as i64;
    let cut = trunc_point(p, tol);
    let mut f = |w: f64| -> f64 {
        if w == 0.0 {
            return if p == 0 { 0.5 } else { 0.0 };
        }
        pow(w, p as f64) * exp(-w) / (1.0 + exp(-w))
    };
    let scale = factorial_f(p);
    let raw = adaptive_simpson(&mut f, 0.0, cut, tol * scale, &mut budget)?;
    Ok(-raw / scale)
}

/// Upper truncation for integrands `~ w^k e^{-w}`: beyond the returned
/// point the remaining mass is below `tol/100` of the total.
fn trunc_point(k: u32, tol: f64) -> f64 {
    let mut w = 30.0 + 3.0 * k as f64;
    let target = log(tol / 100.0);
    for _ in 0..60 {
        let lhs = k as f64 * log(w) - w - target;
        if lhs < 0.0 {
            break;
        }
        w += 4.0;
    }
    w
}

/// Height-one values by 2D quadrature over `0 < t1 < t2 < 1`:
/// `zeta({1}^m, n+2)` (`star = false`) or `zeta*({1}^m, n+2)`
/// (`star = true`, the Bose–Einstein form with the log factor at `t2`).
pub fn quad_height_one(m: u32, n: u32, star: bool, qc: &QuadConfig) -> Result<f64, QuadError> {
    let tol = qc.tol();
    let mut budget = qc.max_subdivisions as i64;
    let scale = factorial_f(m) * factorial_f(n);
    if !star {
        // t1 = 1 - e^{-v}, t2 = t1 e^{s}:
        // 1/(m! n!) Int_0^inf v^m [ Int_0^{glog(v)} s^n ds ] dv
        let outer_cut = trunc_point(m, tol);
        let inner_tol = tol / outer_cut;
        let mut outer = |v: f64| -> f64 {
            if v == 0.0 {
                return 0.0;
            }
            let upper = glog(v);
            let mut inner = |s: f64| pow(s, n as f64);
            let mut inner_budget = 4_000i64;
            let inner_val =
                adaptive_simpson(&mut inner, 0.0, upper, inner_tol, &mut inner_budget)
                    .unwrap_or(pow(upper, (n + 1) as f64) / (n + 1) as f64);
            pow(v, m as f64) * inner_val
        };
        let raw = adaptive_simpson(&mut outer, 0.0, outer_cut, tol * scale, &mut budget)?;
        Ok(raw / scale)
    } else {
        // t2 = 1 - e^{-b}, t1 = t2 e^{-s}:
        // 1/(m! n!) Int_0^inf b^m e^{-b} [ Int_0^1 (-ln w)^n c/(1 - c w) dw ] db
        // with c = 1 - e^{-b} and w = e^{-s}
        let outer_cut = trunc_point(m + 1, tol) + 10.0;
        let mut outer = |b: f64| -> f64 {
            if b == 0.0 {
                return 0.0;
            }
            let c = -expm1(-b);
            let mut inner = |w: f64| -> f64 {
                if w <= 0.0 {
                    return 0.0;
                }
                let lw = -log(w);
                pow(lw, n as f64) * c / (1.0 - c * w)
            };
            let mut inner_budget = 40_000i64;
            let inner_val = adaptive_simpson(&mut inner, 0.0, 1.0, tol, &mut inner_budget)
                .unwrap_or(f64::NAN);
            pow(b, m as f64) * exp(-b) / (-expm1(-b)) * c * inner_val
        };
        let raw = adaptive_simpson(&mut outer, 0.0, outer_cut, tol * scale, &mut budget)?;
        if !raw.is_finite() {
            return Err(QuadError::SubdivisionLimit);
        }
        Ok(raw / scale)
    }
}

/// The four-logarithm block
/// `sum_{|alpha| = q+r+1} zeta({1}^p, alpha_1..alpha_q, alpha_{q+1}+l+1)`
/// as a 2D integral; coordinates `a = log 1/(1-t1)`, `c = log 1/t2` give
/// the region `0 < c < glog(a)` with integrand
/// `a^p (glog(c) - a)^q (glog(a) - c)^r c^l`.
pub fn quad_weighted_block(p: u32, q: u32, r: u32, l: u32, qc: &QuadConfig) -> Result<f64, QuadError> {
    let tol = qc.tol();
    let mut budget = qc.max_subdivisions as i64;
    let scale = factorial_f(p) * factorial_f(q) * factorial_f(r) * factorial_f(l);
    let outer_cut = trunc_point(p + q + 1, tol) + 10.0;
    let mut outer = |a: f64| -> f64 {
        if a == 0.0 {
            return 0.0;
        }
        let upper = glog(a);
        let mut inner = |c: f64| -> f64 {
            if c <= 0.0 || c >= upper {
                return 0.0;
            }
            let f1 = glog(c) - a;
            let f2 = upper - c;
            if f1 <= 0.0 || f2 < 0.0 {
                return 0.0;
            }
            pow(f1, q as f64) * pow(f2, r as f64) * pow(c, l as f64)
        };
        let mut inner_budget = 40_000i64;
        let inner_val = adaptive_simpson(&mut inner, 0.0, upper, tol, &mut inner_budget)
            .unwrap_or(f64::NAN);
        pow(a, p as f64) * inner_val
    };
    let raw = adaptive_simpson(&mut outer, 0.0, outer_cut, tol * scale, &mut budget)?;
    if !raw.is_finite() {
        return Err(QuadError::SubdivisionLimit);
    }
    Ok(raw / scale)
}

/// Convenience: run an integral at two tolerances and return both
/// (used by refinement-monotonicity checks).
pub fn refine_pair(
    run: impl Fn(&QuadConfig) -> Result<f64, QuadError>,
    qc: &QuadConfig,
) -> Result<(f64, f64), QuadError> {
    let coarse = run(qc)?;
    let fine = run(&QuadConfig {
        rel_tol: qc.tol() / 2.0,
        max_subdivisions: qc.max_subdivisions * 2,
    })?;
    Ok((coarse, fine))
}

/// All compositions `alpha` of `total` into `parts` positive entries,
/// mapped through `zeta({1}^p, alpha_1, ..., alpha_parts + l + 1)` shapes —
/// helper for comparing [`quad_weighted_block`] with the summation engine.
pub fn weighted_block_compositions(p: u32, q: u32, r: u32, l: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for alpha in crate::numbers::compositions(q + r + 1, q + 1) {
        let mut idx = Vec::with_capacity((p + q + 1) as usize);
        for _ in 0..p {
            idx.push(1);
        }
        idx.extend_from_slice(&alpha[..q as usize]);
        idx.push(alpha[q as usize] + l + 1);
        out.push(idx);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = core::f64::consts::PI;
    const LN2: f64 = core::f64::consts::LN_2;

    fn qc() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn zeta_single_low_orders() {
        let z2 = quad_zeta_single(0, &qc()).unwrap();
        assert!((z2 - PI * PI / 6.0).abs() < 1e-8, "{z2}");
        let z4 = quad_zeta_single(2, &qc()).unwrap();
        assert!((z4 - PI.powi(4) / 90.0).abs() < 1e-8, "{z4}");
    }

    #[test]
    fn eta_values() {
        let e1 = quad_eta(0, &qc()).unwrap();
        assert!((e1 + LN2).abs() < 1e-9, "{e1}");
        let e2 = quad_eta(1, &qc()).unwrap();
        assert!((e2 + PI * PI / 12.0).abs() < 1e-9, "{e2}");
    }

    #[test]
    fn height_one_basics() {
        // (0,0): zeta(2)
        let v = quad_height_one(0, 0, false, &qc()).unwrap();
        assert!((v - PI * PI / 6.0).abs() < 1e-7, "{v}");
        // (1,1): zeta(1,3) = pi^4/360
        let v = quad_height_one(1, 1, false, &qc()).unwrap();
        assert!((v - PI.powi(4) / 360.0).abs() < 1e-7, "{v}");
        // star (0,0): zeta*(2) = zeta(2)
        let v = quad_height_one(0, 0, true, &qc()).unwrap();
        assert!((v - PI * PI / 6.0).abs() < 1e-6, "{v}");
    }

    #[test]
    fn weighted_block_reduces_to_single_zeta() {
        // q = 0, l = 0: the block is zeta(r+2)
        let v = quad_weighted_block(0, 0, 2, 0, &qc()).unwrap();
        assert!((v - PI.powi(4) / 90.0).abs() < 1e-7, "{v}");
    }

    #[test]
    fn subdivision_limit_is_reported() {
        let starved = QuadConfig {
            rel_tol: 1e-12,
            max_subdivisions: 8,
        };
        assert_eq!(
            quad_height_one(2, 2, false, &starved),
            Err(QuadError::SubdivisionLimit)
        );
    }

    #[test]
    fn composition_helper_shapes() {
        // p=0,q=1,r=1,l=0: |alpha|=3 into 2 parts -> (1,2),(2,1);
        // shapes (1, 2+1) and (2, 1+1)
        let shapes = weighted_block_compositions(0, 1, 1, 0);
        assert_eq!(shapes, alloc::vec![alloc::vec![1, 3], alloc::vec![2, 2]]);
    }
}
