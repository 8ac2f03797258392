//! Arbitrary-precision evaluation of multiple zeta(-star) values and the
//! supporting special functions.
//!
//! The nested-sum engine runs one dynamic-programming pass over partial sums
//! (cost `O(depth * cutoff_n)`, never `O(cutoff_n^depth)`) and then corrects
//! the truncated tails level by level with Euler–Maclaurin / Boole
//! asymptotic models (see [`tail`]). Every evaluation is performed with the
//! tail models matched at both `cutoff_n / 2` and `cutoff_n`; the difference
//! of the two results is the reported engine error estimate, so each value
//! carries its own doubling-based self check.

mod special;
pub(crate) mod tail;

pub use special::{gamma_fn, hyp3f2_unit};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::bigreal::{self, BigReal};
use crate::composition::Composition;
use tail::{transition, Model, TailCtx};

/// Numeric evaluation settings.
///
/// Working precision is `target_digits + guard_digits` decimal digits
/// (converted to bits, floor 64). `cutoff_n` is the outermost summation
/// cutoff and `em_order` the order of the tail corrections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalConfig {
    pub target_digits: u32,
    pub guard_digits: u32,
    pub cutoff_n: u64,
    pub em_order: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_digits: 30,
            guard_digits: 10,
            cutoff_n: 100_000,
            em_order: 8,
        }
    }
}

impl EvalConfig {
    /// Clamps all fields into their valid ranges (`cutoff_n >= 10`,
    /// `em_order` even and at most 16, at least one target digit).
    pub fn new(target_digits: u32, guard_digits: u32, cutoff_n: u64, em_order: u32) -> Self {
        Self {
            target_digits: target_digits.max(1),
            guard_digits,
            cutoff_n: cutoff_n.max(10),
            em_order: (em_order & !1).clamp(2, 16),
        }
    }

    pub fn with_cutoff(&self, cutoff_n: u64) -> Self {
        Self {
            cutoff_n: cutoff_n.max(10),
            ..self.clone()
        }
    }

    /// Working precision in bits.
    pub fn prec_bits(&self) -> u32 {
        let digits = (self.target_digits + self.guard_digits) as u64;
        ((digits * 3322) / 1000 + 18).max(64) as u32
    }

    /// `10^(-target_digits)`: the accuracy the engine promises.
    pub fn target_accuracy(&self) -> BigReal {
        let den = num_traits::pow::pow(BigInt::from(10u8), self.target_digits as usize);
        BigReal::from_ratio(&BigInt::from(1u8), &den, self.prec_bits())
    }

    /// Default verification tolerance: eight digits of headroom over the
    /// requested accuracy.
    pub fn verification_tolerance(&self) -> BigReal {
        let d = self.target_digits.saturating_sub(8).max(1);
        let den = num_traits::pow::pow(BigInt::from(10u8), d as usize);
        BigReal::from_ratio(&BigInt::from(1u8), &den, self.prec_bits())
    }
}

/// Evaluation failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// The nested series diverges (last exponent 1 and unbarred).
    NotAdmissible,
    /// The tail estimate exceeds the requested accuracy at this cutoff.
    PrecisionUnreachable { estimate: String },
    /// `Li_1(1)` diverges.
    DivergentAtOne,
    /// The hypergeometric series does not converge at unit argument.
    DivergentParameters,
    /// Gamma pole.
    PoleAtNonpositiveInteger,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::NotAdmissible => write!(f, "composition is not admissible"),
            EvalError::PrecisionUnreachable { estimate } => {
                write!(f, "tail estimate {estimate} exceeds the requested accuracy")
            }
            EvalError::DivergentAtOne => write!(f, "polylogarithm diverges at u = 1, k = 1"),
            EvalError::DivergentParameters => {
                write!(f, "hypergeometric series diverges for these parameters")
            }
            EvalError::PoleAtNonpositiveInteger => {
                write!(f, "gamma pole at a nonpositive integer")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EvalError {}

/// A value together with the engine's self-estimated absolute error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approx {
    pub value: BigReal,
    pub err_est: BigReal,
}

// ---------------------------------------------------------------------
// nested-sum engine
// ---------------------------------------------------------------------

struct DpLevels {
    exps: Vec<u32>,
    barred: Vec<bool>,
    max_alpha: usize,
}

impl DpLevels {
    fn of(c: &Composition) -> Self {
        let exps: Vec<u32> = c.entries().iter().map(|e| e.exponent()).collect();
        let barred: Vec<bool> = c.entries().iter().map(|e| e.is_barred()).collect();
        let max_alpha = *exps.iter().max().expect("nonempty") as usize;
        Self {
            exps,
            barred,
            max_alpha,
        }
    }
}

/// One DP step at summation index `k`; `t[j]` holds the level-`j` partial
/// sum. Strict sums update levels top-down (they consume the previous `k`'s
/// inner value), weak (star) sums bottom-up.
fn dp_step(t: &mut [BigReal], levels: &DpLevels, star: bool, k: u64, pows: &[BigReal]) {
    let depth = levels.exps.len();
    let odd = k % 2 == 1;
    let apply = |t: &mut [BigReal], j: usize| {
        let w = pows[levels.exps[j - 1] as usize].mul(&t[j - 1]);
        let w = if levels.barred[j - 1] && odd { w.neg() } else { w };
        t[j] = t[j].add(&w);
    };
    if star {
        for j in 1..=depth {
            apply(t, j);
        }
    } else {
        for j in (1..=depth).rev() {
            apply(t, j);
        }
    }
}

fn power_chain(pows: &mut [BigReal], k: u64, prec: u32) {
    pows[1] = BigReal::recip_u64(k, prec);
    for a in 2..pows.len() {
        pows[a] = pows[a - 1].mul(&pows[1]);
    }
}

/// Truncated nested sum `T_depth(n)` with no tail correction. Exposed for
/// oracle-style comparisons against naive nested loops.
pub fn zeta_partial_sum(c: &Composition, star: bool, n: u64, prec: u32) -> BigReal {
    let levels = DpLevels::of(c);
    let depth = levels.exps.len();
    let mut t = vec![BigReal::zero(prec); depth + 1];
    t[0] = BigReal::one(prec);
    let mut pows = vec![BigReal::zero(prec); levels.max_alpha + 1];
    for k in 1..=n {
        power_chain(&mut pows, k, prec);
        dp_step(&mut t, &levels, star, k, &pows);
    }
    t.pop().expect("depth >= 1")
}

fn tail_limit(
    levels: &DpLevels,
    star: bool,
    snapshot: &[BigReal],
    n0: u64,
    ctx: &TailCtx,
) -> BigReal {
    let ln_n0 = BigReal::from_u64(n0, ctx.prec).ln();
    let mut model = Model::unit(ctx.prec);
    for j in 0..levels.exps.len() {
        model = transition(
            &model,
            levels.exps[j],
            levels.barred[j],
            star,
            &snapshot[j + 1],
            n0,
            &ln_n0,
            ctx,
        );
    }
    model.plain.limit(ctx.prec)
}

fn finish_eval(cfg: &EvalConfig, value: BigReal, half_value: BigReal) -> Result<Approx, EvalError> {
    let prec = cfg.prec_bits();
    let scale = BigReal::one(prec).max(value.abs());
    let ulp_floor = scale.shl2(-(prec as i64) + 12);
    let err_est = value.sub(&half_value).abs().add(&ulp_floor);
    if err_est > cfg.target_accuracy().mul(&scale) {
        return Err(EvalError::PrecisionUnreachable {
            estimate: err_est.to_decimal(3),
        });
    }
    Ok(Approx { value, err_est })
}

/// Evaluate `zeta(c)` (strict inequalities) or `zeta*(c)` (weak) with each
/// barred entry `j` contributing `(-1)^{k_j}`.
pub fn zeta_m(c: &Composition, star: bool, cfg: &EvalConfig) -> Result<Approx, EvalError> {
    if !c.is_admissible() {
        return Err(EvalError::NotAdmissible);
    }
    let prec = cfg.prec_bits();
    let n = cfg.cutoff_n.max(10);
    let n_half = (n / 2).max(5);
    let levels = DpLevels::of(c);
    let depth = levels.exps.len();

    let mut t = vec![BigReal::zero(prec); depth + 1];
    t[0] = BigReal::one(prec);
    let mut snap_half: Vec<BigReal> = Vec::new();
    let mut pows = vec![BigReal::zero(prec); levels.max_alpha + 1];
    for k in 1..=n {
        power_chain(&mut pows, k, prec);
        dp_step(&mut t, &levels, star, k, &pows);
        if k == n_half {
            snap_half = t.clone();
        }
    }

    let ctx = TailCtx::new(prec, cfg.em_order);
    let v_half = tail_limit(&levels, star, &snap_half, n_half, &ctx);
    let v_full = tail_limit(&levels, star, &t, n, &ctx);
    finish_eval(cfg, v_full, v_half)
}

/// Batch evaluation of the height-one family `zeta({1}^m, n+2)` (or star)
/// for all `m <= m_max`, `n <= n_max`, optionally restricted to
/// `m + n <= max_weight`.
///
/// All pairs share one DP pass over the `{1}^m` prefix levels and one set of
/// prefix tail models, so the cost grows like
/// `O((m_max + pairs) * cutoff_n)` instead of `pairs * depth * cutoff_n`.
pub fn height_one_table(
    m_max: u32,
    n_max: u32,
    star: bool,
    max_weight: Option<u32>,
    cfg: &EvalConfig,
) -> Result<Vec<Vec<Option<Approx>>>, EvalError> {
    let prec = cfg.prec_bits();
    let n_cut = cfg.cutoff_n.max(10);
    let n_half = (n_cut / 2).max(5);
    let wanted = |m: u32, n: u32| max_weight.map(|w| m + n <= w).unwrap_or(true);

    let mm = m_max as usize;
    let nn = n_max as usize;
    // prefix partial sums over the all-ones levels
    let mut t = vec![BigReal::zero(prec); mm + 1];
    t[0] = BigReal::one(prec);
    let mut acc = vec![vec![BigReal::zero(prec); nn + 1]; mm + 1];
    let mut snap: Option<(Vec<BigReal>, Vec<Vec<BigReal>>)> = None;

    let mut pows = vec![BigReal::zero(prec); nn + 3];
    for k in 1..=n_cut {
        power_chain(&mut pows, k, prec);
        let inv = pows[1].clone();
        if star {
            // weak: update prefix first, accumulate with T*_m(k)
            for j in 1..=mm {
                let w = inv.mul(&t[j - 1]);
                t[j] = t[j].add(&w);
            }
        }
        for (m, row) in acc.iter_mut().enumerate() {
            // strict sums consume the previous k's prefix value
            let tm = &t[m];
            if tm.is_zero() {
                continue;
            }
            for (n, cell) in row.iter_mut().enumerate() {
                if wanted(m as u32, n as u32) {
                    *cell = cell.add(&pows[n + 2].mul(tm));
                }
            }
        }
        if !star {
            for j in (1..=mm).rev() {
                let w = inv.mul(&t[j - 1]);
                t[j] = t[j].add(&w);
            }
        }
        if k == n_half {
            snap = Some((t.clone(), acc.clone()));
        }
    }
    let (t_half, acc_half) = snap.expect("cutoff >= 10");

    let ctx = TailCtx::new(prec, cfg.em_order);
    // per match point: prefix models, then one outer transition per pair
    let mut values: Vec<Vec<Option<(BigReal, Option<BigReal>)>>> = vec![vec![None; nn + 1]; mm + 1];
    for (n0, t_snap, acc_snap, is_final) in [
        (n_half, &t_half, &acc_half, false),
        (n_cut, &t, &acc, true),
    ] {
        let ln_n0 = BigReal::from_u64(n0, prec).ln();
        let mut prefix = Model::unit(prec);
        for m in 0..=mm {
            if m > 0 {
                prefix = transition(&prefix, 1, false, star, &t_snap[m], n0, &ln_n0, &ctx);
            }
            // the models feed the outer level shifted for strict sums;
            // precompute that shift once per m
            let shifted = if star {
                prefix.plain.clone()
            } else {
                prefix.plain.shift(-1, &ctx)
            };
            for n in 0..=nn {
                if !wanted(m as u32, n as u32) {
                    continue;
                }
                let g = shifted.mul_kpow(n + 2, &ctx).em_indefinite(&ctx);
                let c = acc_snap[m][n].sub(&g.eval_at(n0, &ln_n0, &ctx));
                let v = g.limit(prec).add(&c);
                let slot = &mut values[m][n];
                if is_final {
                    let half = slot.take().map(|(h, _)| h);
                    *slot = Some((v, half));
                } else {
                    *slot = Some((v, None));
                }
            }
        }
    }

    let mut out: Vec<Vec<Option<Approx>>> = vec![vec![None; nn + 1]; mm + 1];
    for m in 0..=mm {
        for n in 0..=nn {
            if let Some((v, Some(half))) = values[m][n].take() {
                out[m][n] = Some(finish_eval(cfg, v, half)?);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// single zeta, eta, polylogarithm, Bell polynomials
// ---------------------------------------------------------------------

/// Riemann zeta at an integer `s >= 2`: direct sum plus Euler–Maclaurin
/// tail, with the cutoff chosen from the working precision.
pub fn zeta_single(s: u32, cfg: &EvalConfig) -> BigReal {
    assert!(s >= 2, "zeta_single requires s >= 2");
    let prec = cfg.prec_bits();
    let wp = prec + 24;
    let max_j = 40usize;
    let bern = crate::numbers::bernoulli_upto(2 * max_j);
    let eps_mag = -(wp as i64) - 4;
    let mut n1 = 64u64;
    loop {
        // partial sum
        let mut sum = BigReal::zero(wp);
        for k in 1..=n1 {
            sum = sum.add(&BigReal::recip_u64(k, wp).powi(s as i64));
        }
        // tail: N^(1-s)/(s-1) - N^(-s)/2 + sum_j B_2j/(2j)! (s)_{2j-1} N^(-s-2j+1)
        let inv = BigReal::recip_u64(n1, wp);
        let inv_s = inv.powi(s as i64);
        sum = sum.add(&inv.powi(s as i64 - 1).div_u64(s as u64 - 1));
        sum = sum.sub(&inv_s.shl2(-1));
        let inv2 = inv.mul(&inv);
        // rising factorial (s)_{2j-1} built incrementally
        let mut rising = BigReal::from_u64(s as u64, wp); // (s)_1
        let mut kpow = inv_s.mul(&inv); // N^{-(s+1)}
        let mut fact = BigInt::from(1u8);
        let mut prev_mag = i64::MAX;
        let mut ok = false;
        for j in 1..=max_j {
            fact *= BigInt::from((2 * j - 1) as u64);
            fact *= BigInt::from((2 * j) as u64);
            let b = &bern[2 * j];
            let coef = BigReal::from_ratio(b.numer(), &(b.denom() * &fact), wp);
            let term = coef.mul(&rising).mul(&kpow);
            let mag = term.mag2().unwrap_or(i64::MIN);
            if mag >= prev_mag {
                break; // asymptotic series started diverging
            }
            sum = sum.add(&term);
            if mag < eps_mag {
                ok = true;
                break;
            }
            prev_mag = mag;
            rising = rising
                .mul_i64((s as i64) + 2 * j as i64 - 1)
                .mul_i64((s as i64) + 2 * j as i64);
            kpow = kpow.mul(&inv2);
        }
        if ok || n1 >= 1 << 20 {
            return sum.with_prec(prec);
        }
        n1 *= 2;
    }
}

/// `zeta(s-bar)`: `-ln 2` for `s = 1`, `(2^{1-s} - 1) zeta(s)` otherwise.
pub fn eta_bar(s: u32, cfg: &EvalConfig) -> BigReal {
    assert!(s >= 1);
    let prec = cfg.prec_bits();
    if s == 1 {
        return bigreal::ln2(prec).neg();
    }
    let factor = BigReal::one(prec).shl2(1 - s as i64).sub(&BigReal::one(prec));
    factor.mul(&zeta_single(s, cfg))
}

/// Polylogarithm `Li_k(u)` for `0 <= u <= 1` by its power series
/// (geometric tail bound), `zeta(k)` at `u = 1`.
pub fn polylog(k: u32, u: &BigReal, cfg: &EvalConfig) -> Result<BigReal, EvalError> {
    assert!(k >= 1);
    let prec = cfg.prec_bits();
    let one = BigReal::one(prec);
    assert!(
        !u.is_negative() && *u <= one,
        "polylog requires 0 <= u <= 1"
    );
    if *u == one {
        if k == 1 {
            return Err(EvalError::DivergentAtOne);
        }
        return Ok(zeta_single(k, cfg));
    }
    if u.is_zero() {
        return Ok(BigReal::zero(prec));
    }
    let wp = prec + 16;
    let u = u.with_prec(wp);
    let geom = one.with_prec(wp).sub(&u); // 1 - u
    let mut up = u.clone();
    let mut sum = u.clone(); // n = 1 term
    let mut n = 1u64;
    loop {
        n += 1;
        up = up.mul(&u);
        sum = sum.add(&up.div(&BigReal::from_u64(n, wp).powi(k as i64)));
        // tail <= u^{n+1} / ((n+1)^k (1-u))
        let bound = up.mul(&u).div(&geom);
        if bound.is_zero() || bound.mag2().unwrap() < -(wp as i64) - 4 {
            break;
        }
        if n > 40_000_000 {
            return Err(EvalError::PrecisionUnreachable {
                estimate: bound.to_decimal(3),
            });
        }
    }
    Ok(sum.with_prec(prec))
}

/// Modified Bell polynomials `P_0 .. P_m` of `exp(sum_k x_k z^k / k)`,
/// by the recurrence `m P_m = sum_{k=1..m} x_k P_{m-k}`.
pub fn bell_upto(m: u32, xs: &[BigReal]) -> Vec<BigReal> {
    assert!(xs.len() >= m as usize, "need x_1..x_m");
    let prec = xs.iter().map(|x| x.prec()).min().unwrap_or(64);
    let mut p = Vec::with_capacity(m as usize + 1);
    p.push(BigReal::one(prec));
    for j in 1..=m as usize {
        let mut s = BigReal::zero(prec);
        for k in 1..=j {
            s = s.add(&xs[k - 1].mul(&p[j - k]));
        }
        p.push(s.div_u64(j as u64));
    }
    p
}

/// `P_m(x_1, ..., x_m)`.
pub fn bell_p(m: u32, xs: &[BigReal]) -> BigReal {
    bell_upto(m, xs).pop().expect("nonempty")
}
