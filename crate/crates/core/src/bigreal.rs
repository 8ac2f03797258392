//! A compact arbitrary-precision binary floating-point type.
//!
//! `BigReal` stores `mantissa * 2^exponent` with a per-value working
//! precision in bits. Two rules make the precision contract explicit:
//!
//! * every arithmetic result is rounded to the *smaller* operand precision;
//! * precision is never below 64 bits.
//!
//! The transcendental routines (`sqrt`, `exp`, `ln`, `sin`, constants) carry
//! internal guard bits and round back to the operand precision, so callers
//! can treat results as correctly rounded to a few ulps.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

/// Minimum supported working precision in bits.
pub const MIN_PREC: u32 = 64;

/// Arbitrary-precision real: `mant * 2^exp` at `prec` bits.
#[derive(Clone, Debug)]
pub struct BigReal {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn bits_of(m: &BigInt) -> u64 {
    m.magnitude().bits()
}

impl BigReal {
    pub fn zero(prec: u32) -> Self {
        Self {
            mant: BigInt::zero(),
            exp: 0,
            prec: prec.max(MIN_PREC),
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_bigint(BigInt::from(v), prec)
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        Self::from_bigint(BigInt::from(v), prec)
    }

    pub fn from_bigint(v: BigInt, prec: u32) -> Self {
        Self::normalized(v, 0, prec.max(MIN_PREC))
    }

    /// `num / den` rounded to `prec` bits. Panics if `den` is zero.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(!den.is_zero(), "division by zero");
        let prec = prec.max(MIN_PREC);
        if num.is_zero() {
            return Self::zero(prec);
        }
        let shift = prec as u64 + 64 + bits_of(den);
        let scaled = (num << shift) / den;
        Self::normalized(scaled, -(shift as i64), prec)
    }

    pub fn from_rational(r: &num_rational::BigRational, prec: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), prec)
    }

    fn normalized(mant: BigInt, mut exp: i64, prec: u32) -> Self {
        if mant.is_zero() {
            return Self::zero(prec);
        }
        let (sign, mut mag) = mant.into_parts();
        let bits = mag.bits();
        if bits > prec as u64 {
            let drop = bits - prec as u64;
            // round half away from zero (shift the magnitude, not the
            // signed value: signed shifts floor toward -infinity)
            mag += BigUint::from(1u8) << (drop - 1);
            mag >>= drop;
            exp += drop as i64;
            if mag.bits() > prec as u64 {
                mag >>= 1u8;
                exp += 1;
            }
        }
        Self {
            mant: BigInt::from_biguint(sign, mag),
            exp,
            prec,
        }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Re-round to a different working precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::normalized(self.mant.clone(), self.exp, prec.max(MIN_PREC))
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Exponent magnitude: `2^(mag2 - 1) <= |v| < 2^mag2`, `None` for zero.
    pub fn mag2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(bits_of(&self.mant) as i64 + self.exp)
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mant: -self.mant.clone(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        if self.is_zero() {
            return other.with_prec(prec);
        }
        if other.is_zero() {
            return self.with_prec(prec);
        }
        let mag_a = self.mag2().unwrap();
        let mag_b = other.mag2().unwrap();
        // an addend entirely below the result ulp cannot change the rounding
        // by more than one ulp; drop it
        if mag_a - mag_b > prec as i64 + 8 {
            return self.with_prec(prec);
        }
        if mag_b - mag_a > prec as i64 + 8 {
            return other.with_prec(prec);
        }
        let (lo, hi) = if self.exp <= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let gap = (hi.exp - lo.exp) as u64;
        let mant = (&hi.mant << gap) + &lo.mant;
        Self::normalized(mant, lo.exp, prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        if self.is_zero() || other.is_zero() {
            return Self::zero(prec);
        }
        Self::normalized(&self.mant * &other.mant, self.exp + other.exp, prec)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero(self.prec);
        }
        Self::normalized(&self.mant * BigInt::from(k), self.exp, self.prec)
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        let prec = self.prec.min(other.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let shift = prec as u64 + 32 + bits_of(&other.mant);
        let mant = (&self.mant << shift) / &other.mant;
        Self::normalized(mant, self.exp - other.exp - shift as i64, prec)
    }

    pub fn div_u64(&self, k: u64) -> Self {
        assert!(k != 0, "division by zero");
        if self.is_zero() {
            return Self::zero(self.prec);
        }
        let shift = self.prec as u64 + 32;
        let mant = (&self.mant << shift) / BigInt::from(k);
        Self::normalized(mant, self.exp - shift as i64, self.prec)
    }

    pub fn recip(&self) -> Self {
        Self::one(self.prec).div(self)
    }

    /// `1/k` at the requested precision; the workhorse of the summation
    /// loops.
    pub fn recip_u64(k: u64, prec: u32) -> Self {
        assert!(k != 0, "division by zero");
        let prec = prec.max(MIN_PREC);
        let shift = prec as u64 + 32;
        let mant = (BigInt::from(1u8) << shift) / BigInt::from(k);
        Self::normalized(mant, -(shift as i64), prec)
    }

    /// Exact multiplication by `2^k`.
    pub fn shl2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self {
            mant: self.mant.clone(),
            exp: self.exp + k,
            prec: self.prec,
        }
    }

    /// `self^k` for a signed integer power by repeated squaring.
    pub fn powi(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one(self.prec);
        }
        if k < 0 {
            return self.powi(-k).recip();
        }
        let mut base = self.clone();
        let mut acc = Self::one(self.prec);
        let mut n = k as u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        let sa = self.mant.sign();
        let sb = other.mant.sign();
        let rank = |s: Sign| match s {
            Sign::Minus => 0,
            Sign::NoSign => 1,
            Sign::Plus => 2,
        };
        if rank(sa) != rank(sb) {
            return rank(sa).cmp(&rank(sb));
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let mag_cmp = self.mag2().unwrap().cmp(&other.mag2().unwrap());
        let abs_cmp = if mag_cmp != Ordering::Equal {
            mag_cmp
        } else {
            let gap = self.exp - other.exp;
            if gap >= 0 {
                (self.mant.magnitude() << gap as u64).cmp(other.mant.magnitude())
            } else {
                self.mant
                    .magnitude()
                    .cmp(&(other.mant.magnitude() << (-gap) as u64))
            }
        };
        if sa == Sign::Minus {
            abs_cmp.reverse()
        } else {
            abs_cmp
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        // keep at most 64 mantissa bits so the conversion cannot overflow
        let bits = bits_of(&self.mant);
        let (m, e) = if bits > 64 {
            let drop = bits - 64;
            (
                (&self.mant >> drop).to_f64().unwrap_or(f64::NAN),
                self.exp + drop as i64,
            )
        } else {
            (self.mant.to_f64().unwrap_or(f64::NAN), self.exp)
        };
        let e = e.clamp(-2098, 2098) as i32;
        libm::ldexp(m, e)
    }

    /// Nearest integer as `i64` (half away from zero). Panics when out of
    /// range.
    pub fn round_to_i64(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        let neg = self.is_negative();
        let mag = self.mant.magnitude();
        let v = if self.exp >= 0 {
            mag << self.exp as u64
        } else {
            let drop = (-self.exp) as u64;
            if drop >= mag.bits() + 2 {
                return 0;
            }
            (mag + (BigUint::from(1u8) << (drop - 1))) >> drop
        };
        let v = v.to_i64().expect("round_to_i64 out of range");
        if neg {
            -v
        } else {
            v
        }
    }

    // ---- decimal conversion -------------------------------------------

    /// Render with `sig` significant decimal digits.
    ///
    /// Uses plain notation for moderate magnitudes and `d.dd...e±k`
    /// otherwise; the output parses back via [`BigReal::from_decimal_str`].
    pub fn to_decimal(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return String::from("0");
        }
        // first estimate of floor(log10 |v|)
        let mag2 = self.mag2().unwrap();
        let mut e10 = ((mag2 - 1) as f64 * 0.301_029_995_663_981_2).floor() as i64;
        // scaled = round(|v| * 10^(sig-1-e10)); adjust e10 until it has
        // exactly `sig` digits
        let mut scaled = self.scale_decimal(sig as i64 - 1 - e10);
        let low = pow10(sig as u32 - 1);
        let high = &low * 10u32;
        loop {
            if scaled < low {
                e10 -= 1;
                scaled = self.scale_decimal(sig as i64 - 1 - e10);
            } else if scaled >= high {
                e10 += 1;
                scaled = self.scale_decimal(sig as i64 - 1 - e10);
            } else {
                break;
            }
        }
        let digits = scaled.to_string();
        debug_assert_eq!(digits.len(), sig);
        let neg = self.is_negative();
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if e10 >= 0 && (e10 as usize) < sig.max(21) && (e10 as usize) < sig {
            // point inside the digit string
            let ip = e10 as usize + 1;
            out.push_str(&digits[..ip]);
            if ip < sig {
                out.push('.');
                out.push_str(&digits[ip..]);
            }
        } else if e10 < 0 && e10 >= -6 {
            out.push_str("0.");
            for _ in 0..(-e10 - 1) {
                out.push('0');
            }
            out.push_str(&digits);
        } else {
            out.push_str(&digits[..1]);
            if sig > 1 {
                out.push('.');
                out.push_str(&digits[1..]);
            }
            out.push('e');
            out.push_str(&e10.to_string());
        }
        out
    }

    /// `round(|v| * 10^t)` as a nonnegative integer.
    fn scale_decimal(&self, t: i64) -> BigUint {
        let mut num = self.mant.magnitude().clone();
        let mut den = BigUint::from(1u8);
        if t >= 0 {
            num *= pow10(t as u32);
        } else {
            den *= pow10((-t) as u32);
        }
        if self.exp >= 0 {
            num <<= self.exp as u64;
        } else {
            den <<= (-self.exp) as u64;
        }
        // round half up
        (num * 2u8 + &den) / (den * 2u8)
    }

    /// Parse a decimal string: optional sign, digits, optional fraction,
    /// optional `e`/`E` exponent.
    pub fn from_decimal_str(s: &str, prec: u32) -> Option<Self> {
        let s = s.trim();
        let (sign, rest) = match s.strip_prefix('-') {
            Some(r) => (-1, r),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let (body, exp_part) = match rest.find(['e', 'E']) {
            Some(i) => (&rest[..i], Some(&rest[i + 1..])),
            None => (rest, None),
        };
        let exp10: i64 = match exp_part {
            Some(e) if !e.is_empty() => e.parse().ok()?,
            Some(_) => return None,
            None => 0,
        };
        let (int_part, frac_part) = match body.find('.') {
            Some(i) => (&body[..i], &body[i + 1..]),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return None;
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        let mantissa: BigUint = if digits.is_empty() {
            BigUint::zero()
        } else {
            digits.parse().ok()?
        };
        let mut num = BigInt::from(mantissa);
        if sign < 0 {
            num = -num;
        }
        let shift = exp10 - frac_part.len() as i64;
        let (num, den) = if shift >= 0 {
            (num * BigInt::from(pow10(shift as u32)), BigInt::from(1u8))
        } else {
            (num, BigInt::from(pow10((-shift) as u32)))
        };
        Some(Self::from_ratio(&num, &den, prec))
    }

    // ---- transcendentals ----------------------------------------------

    /// Square root; panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of negative value");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        let mut m = self.mant.magnitude().clone();
        let mut e = self.exp;
        if e & 1 != 0 {
            m <<= 1u8;
            e -= 1;
        }
        let bits = m.bits();
        let want = 2 * (prec as u64 + 24);
        let extra = if bits < want {
            let mut x = want - bits;
            if x & 1 != 0 {
                x += 1;
            }
            x
        } else {
            0
        };
        m <<= extra;
        let root = m.sqrt();
        Self::normalized(
            BigInt::from(root),
            (e - extra as i64) / 2,
            prec,
        )
    }

    /// Natural logarithm; panics unless the value is positive.
    pub fn ln(&self) -> Self {
        assert!(
            !self.is_zero() && !self.is_negative(),
            "ln of non-positive value"
        );
        let prec = self.prec;
        let wp = prec + 48;
        // x = mu * 2^e2 with mu in [1, 2)
        let bits = bits_of(&self.mant) as i64;
        let e2 = self.exp + bits - 1;
        let mu = Self::normalized(self.mant.clone(), -(bits - 1), wp);
        let one = Self::one(wp);
        let t = mu.sub(&one).div(&mu.add(&one));
        // ln(mu) = 2 atanh(t), |t| <= 1/3
        let atanh = atanh_series(&t, wp);
        let mut out = atanh.shl2(1);
        if e2 != 0 {
            out = out.add(&ln2(wp).mul_i64(e2));
        }
        out.with_prec(prec)
    }

    /// Exponential.
    pub fn exp(&self) -> Self {
        let prec = self.prec;
        let wp = prec + 64;
        if self.is_zero() {
            return Self::one(prec);
        }
        let x = self.with_prec(wp);
        let l2 = ln2(wp);
        let n = x.div(&l2).round_to_i64();
        let r = x.sub(&l2.mul_i64(n));
        // halve the argument 12 times, series, then square back
        let h = 12;
        let r_small = r.shl2(-h);
        let mut term = Self::one(wp);
        let mut sum = Self::one(wp);
        let mut i = 1u64;
        loop {
            term = term.mul(&r_small).div_u64(i);
            if term.is_zero() || term.mag2().unwrap() < -(wp as i64) - 4 {
                break;
            }
            sum = sum.add(&term);
            i += 1;
        }
        let mut out = sum;
        for _ in 0..h {
            out = out.mul(&out);
        }
        out.shl2(n).with_prec(prec)
    }

    /// `2^self`.
    pub fn exp2(&self) -> Self {
        let wp = self.prec + 32;
        self.with_prec(wp).mul(&ln2(wp)).exp().with_prec(self.prec)
    }

    /// Sine (used by the gamma reflection formula).
    pub fn sin(&self) -> Self {
        let prec = self.prec;
        let wp = prec + 48;
        let x = self.with_prec(wp);
        let two_pi = pi(wp).shl2(1);
        let n = x.div(&two_pi).round_to_i64();
        let mut r = x.sub(&two_pi.mul_i64(n));
        // |r| <= pi; shrink by 3^4 = 81 so the Taylor series is short
        let h = 4;
        for _ in 0..h {
            r = r.div_u64(3);
        }
        let r2 = r.mul(&r);
        let mut term = r.clone();
        let mut sum = r;
        let mut i = 1u64;
        loop {
            term = term.mul(&r2).div_u64((2 * i) * (2 * i + 1)).neg();
            if term.is_zero() || term.mag2().unwrap() < -(wp as i64) - 4 {
                break;
            }
            sum = sum.add(&term);
            i += 1;
        }
        // sin(3t) = 3 sin t - 4 sin^3 t
        for _ in 0..h {
            let s3 = sum.mul(&sum).mul(&sum);
            sum = sum.mul_i64(3).sub(&s3.shl2(2));
        }
        sum.with_prec(prec)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec as f64 * 0.301_029_995_663_981_2) as usize;
        write!(f, "{}", self.to_decimal(digits.max(1)))
    }
}

fn pow10(n: u32) -> BigUint {
    num_traits::pow::pow(BigUint::from(10u8), n as usize)
}

/// `atanh(t)` by series; requires `|t| < 1/2`.
fn atanh_series(t: &BigReal, wp: u32) -> BigReal {
    let t2 = t.mul(t);
    let mut term = t.clone();
    let mut sum = t.clone();
    let mut i = 1u64;
    loop {
        term = term.mul(&t2);
        let inc = term.div_u64(2 * i + 1);
        if inc.is_zero() || inc.mag2().unwrap() < -(wp as i64) - 4 {
            break;
        }
        sum = sum.add(&inc);
        i += 1;
    }
    sum
}

/// `ln 2` at the requested precision: `2 atanh(1/3)`.
pub fn ln2(prec: u32) -> BigReal {
    let wp = prec + 16;
    let third = BigReal::one(wp).div_u64(3);
    atanh_series(&third, wp).shl2(1).with_prec(prec)
}

/// `pi` by Machin's formula: `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> BigReal {
    let wp = prec + 16;
    let a = atan_recip(5, wp);
    let b = atan_recip(239, wp);
    a.shl2(4).sub(&b.shl2(2)).with_prec(prec)
}

/// `atan(1/n)` for integer `n >= 2`.
fn atan_recip(n: u64, wp: u32) -> BigReal {
    let n2 = n * n;
    let mut cur = BigReal::one(wp).div_u64(n);
    let mut sum = cur.clone();
    let mut i = 1u64;
    loop {
        cur = cur.div_u64(n2);
        let inc = cur.div_u64(2 * i + 1);
        if inc.is_zero() || inc.mag2().unwrap() < -(wp as i64) - 4 {
            break;
        }
        if i & 1 == 1 {
            sum = sum.sub(&inc);
        } else {
            sum = sum.add(&inc);
        }
        i += 1;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 192;

    fn dec(s: &str) -> BigReal {
        BigReal::from_decimal_str(s, P).unwrap()
    }

    fn assert_close(a: &BigReal, b: &BigReal, tol: &str) {
        let t = dec(tol);
        let d = a.sub(b).abs();
        assert!(
            d.compare(&t) != Ordering::Greater,
            "difference {} exceeds {}",
            d.to_decimal(6),
            tol
        );
    }

    #[test]
    fn basic_arithmetic() {
        let a = BigReal::from_i64(7, P);
        let b = BigReal::from_i64(3, P);
        assert_eq!(a.add(&b), BigReal::from_i64(10, P));
        assert_eq!(a.sub(&b), BigReal::from_i64(4, P));
        assert_eq!(a.mul(&b), BigReal::from_i64(21, P));
        assert_close(&a.div(&b), &dec("2.333333333333333333333333333333333333333333"), "1e-40");
        assert_eq!(a.powi(3), BigReal::from_i64(343, P));
        assert_close(&a.powi(-2), &dec("0.020408163265306122448979591836734693877551"), "1e-40");
        assert_eq!(BigReal::from_i64(-4, P).abs(), BigReal::from_i64(4, P));
    }

    #[test]
    fn mixed_precision_rounds_to_smaller() {
        let a = BigReal::one(256);
        let b = BigReal::one(128).div_u64(3);
        assert_eq!(a.add(&b).prec(), 128);
        assert_eq!(a.mul(&b).prec(), 128);
        assert_eq!(b.div(&a).prec(), 128);
        // precision floor
        assert_eq!(BigReal::zero(10).prec(), MIN_PREC);
    }

    #[test]
    fn compare_and_magnitudes() {
        let a = dec("1.5");
        let b = dec("1.25");
        assert_eq!(a.compare(&b), Ordering::Greater);
        assert_eq!(b.compare(&a), Ordering::Less);
        assert_eq!(a.compare(&dec("1.5")), Ordering::Equal);
        assert_eq!(dec("-2").compare(&dec("1")), Ordering::Less);
        assert_eq!(dec("4").mag2(), Some(3));
        assert_eq!(dec("0.5").mag2(), Some(0));
    }

    #[test]
    fn tiny_addend_is_absorbed() {
        let a = BigReal::one(P);
        let tiny = dec("1e-200");
        assert_eq!(a.add(&tiny), a);
    }

    #[test]
    fn decimal_round_trip() {
        for s in ["1.25", "-0.0003172", "27182.81828", "9.109e-31", "6.022e23"] {
            let v = dec(s);
            let back = BigReal::from_decimal_str(&v.to_decimal(30), P).unwrap();
            assert_close(&v, &back, "1e-20");
        }
        assert_eq!(BigReal::zero(P).to_decimal(10), "0");
        assert_eq!(BigReal::from_i64(2, P).to_decimal(3), "2.00");
        assert_eq!(dec("1234.5").to_decimal(5), "1234.5");
        assert!(BigReal::from_decimal_str("abc", P).is_none());
        assert!(BigReal::from_decimal_str("1e", P).is_none());
    }

    #[test]
    fn round_to_i64_works() {
        assert_eq!(dec("2.5").round_to_i64(), 3);
        assert_eq!(dec("-2.5").round_to_i64(), -3);
        assert_eq!(dec("41.99").round_to_i64(), 42);
        assert_eq!(dec("1e-30").round_to_i64(), 0);
    }

    // reference constants, 50 published digits each
    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436025";
    const E_50: &str = "2.71828182845904523536028747135266249775724709369996";
    const SQRT2_50: &str = "1.41421356237309504880168872420969807856967187537694";

    #[test]
    fn constants_match_references() {
        assert_close(&pi(P), &dec(PI_50), "1e-48");
        assert_close(&ln2(P), &dec(LN2_50), "1e-48");
    }

    #[test]
    fn transcendental_spot_values() {
        assert_close(&BigReal::one(P).exp(), &dec(E_50), "1e-46");
        assert_close(&BigReal::from_i64(2, P).sqrt(), &dec(SQRT2_50), "1e-46");
        assert_close(&BigReal::from_i64(2, P).ln(), &dec(LN2_50), "1e-46");
        // sin(pi/6) = 1/2
        let x = pi(P).div_u64(6);
        assert_close(&x.sin(), &dec("0.5"), "1e-46");
        // exp(ln x) = x
        let v = dec("123.456");
        assert_close(&v.ln().exp(), &v, "1e-40");
        // exp2
        assert_close(&dec("0.5").exp2(), &dec(SQRT2_50), "1e-46");
        // large argument exponentials stay consistent: ln(exp(100)) = 100
        let big = BigReal::from_i64(100, P);
        assert_close(&big.exp().ln(), &big, "1e-40");
    }
}
