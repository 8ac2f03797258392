//! Asymptotic tail models for nested-sum partial sums.
//!
//! A partial sum of one summation level is modelled for `k >= N` as
//!
//! ```text
//!     T(k)  ~  P(k) + (-1)^k Q(k),
//! ```
//!
//! where `P` and `Q` are finite combinations of basis terms
//! `ln^a(k) * k^(-b)`. The model of the next level follows symbolically:
//! multiplying by the level weight `k^(-alpha)` (times `(-1)^k` for a barred
//! entry) stays inside the basis, the plain part is summed with the
//! Euler–Maclaurin formula and the alternating part with the Boole
//! summation formula, and the one unknown constant of integration is matched
//! against the exactly computed partial sum at the cutoff. Truncation is
//! controlled by the maximum `1/k` order carried in the basis: a dropped
//! term is of size `O(N^-(max_b+1))` at the matching point.

use alloc::vec;
use alloc::vec::Vec;

use crate::bigreal::BigReal;
use crate::numbers;

/// Shared context: working precision, basis truncation order, and the
/// Euler–Maclaurin / Boole coefficients as ready-to-use reals.
pub(crate) struct TailCtx {
    pub prec: u32,
    /// Largest power of `1/k` kept in the basis.
    pub max_b: usize,
    /// Number of Bernoulli correction terms `B_2 .. B_{2 em_j}`.
    pub em_j: usize,
    /// Number of Boole (Euler polynomial) terms `E_0 .. E_{boole_j - 1}`.
    pub boole_j: usize,
    /// `B_{2j} / (2j)!` for `j = 1 ..= em_j` (index 0 unused).
    bern_fact: Vec<BigReal>,
    /// `E_j(0) / (2 * j!)` for `j = 0 .. boole_j`.
    boole_fact: Vec<BigReal>,
}

impl TailCtx {
    pub fn new(prec: u32, em_order: u32) -> Self {
        let em_j = (em_order / 2).max(1) as usize;
        // Boole coefficients E_j(0)/j! decay only like (2/pi)^j, so the
        // alternating expansion needs roughly twice as many terms as the
        // factorially-assisted Euler–Maclaurin one
        let boole_j = (2 * em_order).clamp(4, 24) as usize;
        let max_b = em_order as usize + 6;
        let bern = numbers::bernoulli_upto(2 * em_j);
        let mut bern_fact = Vec::with_capacity(em_j + 1);
        bern_fact.push(BigReal::zero(prec));
        let mut fact = num_bigint::BigInt::from(1u8);
        for j in 1..=em_j {
            // (2j)! incrementally
            fact *= num_bigint::BigInt::from((2 * j - 1) as u64);
            fact *= num_bigint::BigInt::from((2 * j) as u64);
            let r = &bern[2 * j];
            bern_fact.push(BigReal::from_ratio(r.numer(), &(r.denom() * &fact), prec));
        }
        let euler = numbers::euler_at_zero_upto(boole_j.saturating_sub(1));
        let mut boole_fact = Vec::with_capacity(boole_j);
        let mut jfact = num_bigint::BigInt::from(1u8);
        for (j, e) in euler.iter().enumerate() {
            if j > 0 {
                jfact *= num_bigint::BigInt::from(j as u64);
            }
            boole_fact.push(BigReal::from_ratio(
                e.numer(),
                &(e.denom() * &jfact * num_bigint::BigInt::from(2u8)),
                prec,
            ));
        }
        Self {
            prec,
            max_b,
            em_j,
            boole_j,
            bern_fact,
            boole_fact,
        }
    }
}

/// Finite combination of `ln^a(k) * k^(-b)` terms; `coeff[b][a]`.
#[derive(Clone)]
pub(crate) struct LogPoly {
    coeff: Vec<Vec<BigReal>>,
}

impl LogPoly {
    pub fn zero() -> Self {
        Self { coeff: Vec::new() }
    }

    pub fn constant(v: BigReal) -> Self {
        Self {
            coeff: vec![vec![v]],
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::constant(BigReal::one(prec))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff
            .iter()
            .all(|row| row.iter().all(|c| c.is_zero()))
    }

    fn entry_mut(&mut self, b: usize, a: usize, prec: u32) -> &mut BigReal {
        while self.coeff.len() <= b {
            self.coeff.push(Vec::new());
        }
        let row = &mut self.coeff[b];
        while row.len() <= a {
            row.push(BigReal::zero(prec));
        }
        &mut row[a]
    }

    fn add_term(&mut self, b: usize, a: usize, v: &BigReal, prec: u32) {
        if v.is_zero() {
            return;
        }
        let e = self.entry_mut(b, a, prec);
        *e = e.add(v);
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        let mut out = self.clone();
        for (b, row) in other.coeff.iter().enumerate() {
            for (a, c) in row.iter().enumerate() {
                out.add_term(b, a, c, prec);
            }
        }
        out
    }

    pub fn add_constant(&self, v: &BigReal, prec: u32) -> Self {
        let mut out = self.clone();
        out.add_term(0, 0, v, prec);
        out
    }

    pub fn scale(&self, f: &BigReal) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        Self {
            coeff: self
                .coeff
                .iter()
                .map(|row| row.iter().map(|c| c.mul(f)).collect())
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            coeff: self
                .coeff
                .iter()
                .map(|row| row.iter().map(|c| c.neg()).collect())
                .collect(),
        }
    }

    /// Multiply by `k^(-d)`, truncating past the basis order.
    pub fn mul_kpow(&self, d: usize, ctx: &TailCtx) -> Self {
        let mut out = Self::zero();
        for (b, row) in self.coeff.iter().enumerate() {
            if b + d > ctx.max_b {
                continue;
            }
            for (a, c) in row.iter().enumerate() {
                out.add_term(b + d, a, c, ctx.prec);
            }
        }
        out
    }

    /// d/dk of the model.
    pub fn derivative(&self, ctx: &TailCtx) -> Self {
        let mut out = Self::zero();
        for (b, row) in self.coeff.iter().enumerate() {
            if b + 1 > ctx.max_b {
                continue;
            }
            for (a, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if a > 0 {
                    out.add_term(b + 1, a - 1, &c.mul_i64(a as i64), ctx.prec);
                }
                if b > 0 {
                    out.add_term(b + 1, a, &c.mul_i64(-(b as i64)), ctx.prec);
                }
            }
        }
        out
    }

    /// Antiderivative; every term must have `b >= 1`.
    pub fn integrate(&self, ctx: &TailCtx) -> Self {
        let mut out = Self::zero();
        for (b, row) in self.coeff.iter().enumerate() {
            for (a, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                debug_assert!(b >= 1, "integrand must decay");
                if b == 1 {
                    // ln^a/k -> ln^(a+1)/(a+1)
                    out.add_term(0, a + 1, &c.div_u64(a as u64 + 1), ctx.prec);
                } else {
                    // by parts down the ln powers
                    let mut coef = c.clone();
                    let mut j = a as i64;
                    loop {
                        out.add_term(
                            b - 1,
                            j as usize,
                            &coef.div_u64(b as u64 - 1).neg(),
                            ctx.prec,
                        );
                        if j == 0 {
                            break;
                        }
                        coef = coef.mul_i64(j).div_u64(b as u64 - 1);
                        j -= 1;
                    }
                }
            }
        }
        out
    }

    /// Re-expand `f(k + delta)` around `k` (Taylor in `delta`, truncated at
    /// the basis order — later terms fall outside the basis anyway).
    pub fn shift(&self, delta: i64, ctx: &TailCtx) -> Self {
        debug_assert!(delta == 1 || delta == -1);
        let mut out = self.clone();
        let mut der = self.clone();
        let mut fact = 1u64;
        for i in 1..=ctx.max_b as u64 {
            der = der.derivative(ctx);
            if der.is_zero() {
                break;
            }
            fact = fact.saturating_mul(i);
            let mut f = BigReal::one(ctx.prec).div_u64(fact);
            if delta < 0 && i % 2 == 1 {
                f = f.neg();
            }
            out = out.add(&der.scale(&f), ctx.prec);
        }
        out
    }

    /// Indefinite Euler–Maclaurin sum `G` with
    /// `sum_{k=M+1..K} g(k) = G(K) - G(M)`.
    pub fn em_indefinite(&self, ctx: &TailCtx) -> Self {
        let mut out = self.integrate(ctx);
        out = out.add(&self.scale(&BigReal::one(ctx.prec).shl2(-1)), ctx.prec);
        let mut der = self.derivative(ctx); // g'
        for j in 1..=ctx.em_j {
            if der.is_zero() {
                break;
            }
            out = out.add(&der.scale(&ctx.bern_fact[j]), ctx.prec);
            if j < ctx.em_j {
                der = der.derivative(ctx).derivative(ctx); // g^(2j+1)
            }
        }
        out
    }

    /// Boole summation kernel `U` with
    /// `sum_{k=M+1..K} (-1)^k g(k) = (-1)^K U(K) - (-1)^M U(M)`.
    pub fn boole_indefinite(&self, ctx: &TailCtx) -> Self {
        let mut acc = self.scale(&ctx.boole_fact[0]);
        let mut der = self.clone();
        for j in 1..ctx.boole_j {
            der = der.derivative(ctx);
            if der.is_zero() {
                break;
            }
            if !ctx.boole_fact[j].is_zero() {
                acc = acc.add(&der.scale(&ctx.boole_fact[j]), ctx.prec);
            }
        }
        acc.shift(1, ctx)
    }

    /// Evaluate at integer `k = n`, given `ln n` at working precision.
    pub fn eval_at(&self, n: u64, ln_n: &BigReal, ctx: &TailCtx) -> BigReal {
        let prec = ctx.prec;
        let max_a = self.coeff.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut ln_pows = Vec::with_capacity(max_a);
        let mut p = BigReal::one(prec);
        for _ in 0..max_a {
            ln_pows.push(p.clone());
            p = p.mul(ln_n);
        }
        let inv = BigReal::recip_u64(n, prec);
        let mut total = BigReal::zero(prec);
        let mut kpow = BigReal::one(prec);
        for (b, row) in self.coeff.iter().enumerate() {
            if b > 0 {
                kpow = kpow.mul(&inv);
            }
            let mut rowsum = BigReal::zero(prec);
            for (a, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    rowsum = rowsum.add(&c.mul(&ln_pows[a]));
                }
            }
            if !rowsum.is_zero() {
                total = total.add(&rowsum.mul(&kpow));
            }
        }
        total
    }

    /// The `k -> infinity` limit, i.e. the `ln^0 k^0` coefficient.
    pub fn limit(&self, prec: u32) -> BigReal {
        self.coeff
            .first()
            .and_then(|row| row.first())
            .cloned()
            .unwrap_or_else(|| BigReal::zero(prec))
    }
}

/// Two-component asymptotic model `P(k) + (-1)^k Q(k)` of one level's
/// partial sums.
pub(crate) struct Model {
    pub plain: LogPoly,
    pub alt: LogPoly,
}

impl Model {
    pub fn unit(prec: u32) -> Self {
        Self {
            plain: LogPoly::one(prec),
            alt: LogPoly::zero(),
        }
    }
}

/// Build the model of the next level from the previous one.
///
/// * `alpha`, `barred` — the level weight `eps(k) k^(-alpha)`;
/// * `star` selects the weak-inequality recursion (no argument shift);
/// * `t_at_n0` is the exact partial sum of the *new* level at `k = n0`.
pub(crate) fn transition(
    prev: &Model,
    alpha: u32,
    barred: bool,
    star: bool,
    t_at_n0: &BigReal,
    n0: u64,
    ln_n0: &BigReal,
    ctx: &TailCtx,
) -> Model {
    let prec = ctx.prec;
    // the summand is eps(k) k^-alpha [P(k') + (-1)^(k') Q(k')] where
    // k' = k for star and k' = k-1 for strict sums
    let (p_sh, q_sh) = if star {
        (prev.plain.clone(), prev.alt.clone())
    } else {
        (prev.plain.shift(-1, ctx), prev.alt.shift(-1, ctx))
    };
    // (-1)^(k-1) = -(-1)^k folds a sign into the alternating component
    let alt_sign_neg = !star;
    let a_part = p_sh.mul_kpow(alpha as usize, ctx);
    let mut b_part = q_sh.mul_kpow(alpha as usize, ctx);
    if alt_sign_neg {
        b_part = b_part.negate();
    }
    // summand = eps(k) A(k) + eps(k) (-1)^k B(k)
    let parity_sign = n0 % 2 == 1;
    let signed = |v: BigReal| if parity_sign { v.neg() } else { v };
    if !barred {
        // plain part by Euler–Maclaurin, alternating part by Boole
        let g = a_part.em_indefinite(ctx);
        let u = b_part.boole_indefinite(ctx);
        let mut c = t_at_n0.sub(&g.eval_at(n0, ln_n0, ctx));
        if !u.is_zero() {
            c = c.sub(&signed(u.eval_at(n0, ln_n0, ctx)));
        }
        Model {
            plain: g.add_constant(&c, prec),
            alt: u,
        }
    } else {
        // eps = (-1)^k swaps the roles of the two components
        let u = a_part.boole_indefinite(ctx);
        let g = b_part.em_indefinite(ctx);
        let mut c = t_at_n0.sub(&g.eval_at(n0, ln_n0, ctx));
        if !u.is_zero() {
            c = c.sub(&signed(u.eval_at(n0, ln_n0, ctx)));
        }
        Model {
            plain: g.add_constant(&c, prec),
            alt: u,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 160;

    fn ctx() -> TailCtx {
        TailCtx::new(P, 8)
    }

    fn poly_term(b: usize, a: usize, v: i64) -> LogPoly {
        let mut p = LogPoly::zero();
        p.add_term(b, a, &BigReal::from_i64(v, P), P);
        p
    }

    #[test]
    fn derivative_of_log_term() {
        // d/dk [ln k / k] = 1/k^2 - ln k / k^2
        let c = ctx();
        let p = poly_term(1, 1, 1);
        let d = p.derivative(&c);
        let n = 50u64;
        let ln_n = BigReal::from_u64(n, P).ln();
        let expect = {
            let inv2 = BigReal::recip_u64(n * n, P);
            inv2.sub(&ln_n.mul(&inv2))
        };
        let got = d.eval_at(n, &ln_n, &c);
        assert!(got.sub(&expect).abs().to_f64() < 1e-40);
    }

    #[test]
    fn integrate_then_differentiate() {
        let c = ctx();
        for (b, a) in [(1usize, 0usize), (1, 2), (3, 0), (4, 3)] {
            let p = poly_term(b, a, 7);
            let back = p.integrate(&c).derivative(&c);
            let n = 37u64;
            let ln_n = BigReal::from_u64(n, P).ln();
            let d = p
                .eval_at(n, &ln_n, &c)
                .sub(&back.eval_at(n, &ln_n, &c))
                .abs();
            assert!(d.to_f64() < 1e-38, "b={b} a={a}: {}", d.to_f64());
        }
    }

    #[test]
    fn shift_matches_direct_evaluation() {
        let c = ctx();
        let p = poly_term(2, 1, 3); // 3 ln k / k^2
        let shifted = p.shift(-1, &c);
        let n = 120u64;
        let ln_n = BigReal::from_u64(n, P).ln();
        let ln_nm1 = BigReal::from_u64(n - 1, P).ln();
        let direct = p.eval_at(n - 1, &ln_nm1, &c);
        let via_model = shifted.eval_at(n, &ln_n, &c);
        assert!(direct.sub(&via_model).abs().to_f64() < 1e-20);
    }

    #[test]
    fn em_sum_of_inverse_squares() {
        // sum_{k=M+1..K} 1/k^2 = G(K) - G(M) to high accuracy
        let c = ctx();
        let g = poly_term(2, 0, 1).em_indefinite(&c);
        let (m, k) = (40u64, 200u64);
        let mut exact = BigReal::zero(P);
        for i in m + 1..=k {
            exact = exact.add(&BigReal::recip_u64(i * i, P));
        }
        let ln_m = BigReal::from_u64(m, P).ln();
        let ln_k = BigReal::from_u64(k, P).ln();
        let approx = g.eval_at(k, &ln_k, &c).sub(&g.eval_at(m, &ln_m, &c));
        // remainder is the first omitted correction, ~ B_10/10! f^(9)(40)
        assert!(exact.sub(&approx).abs().to_f64() < 1e-17);
    }

    #[test]
    fn boole_sum_of_alternating_inverse() {
        // sum_{k=M+1..K} (-1)^k / k = (-1)^K U(K) - (-1)^M U(M)
        let c = ctx();
        let u = poly_term(1, 0, 1).boole_indefinite(&c);
        let (m, k) = (41u64, 201u64);
        let mut exact = BigReal::zero(P);
        for i in m + 1..=k {
            let t = BigReal::recip_u64(i, P);
            exact = if i % 2 == 1 { exact.sub(&t) } else { exact.add(&t) };
        }
        let ln_m = BigReal::from_u64(m, P).ln();
        let ln_k = BigReal::from_u64(k, P).ln();
        let um = u.eval_at(m, &ln_m, &c);
        let uk = u.eval_at(k, &ln_k, &c);
        // both endpoints odd here
        let approx = uk.neg().sub(&um.neg());
        assert!(exact.sub(&approx).abs().to_f64() < 1e-12);
    }
}
