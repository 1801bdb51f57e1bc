//! Fixed-point binary reals with an explicit working precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Scalar;

const LOG2_10: f64 = std::f64::consts::LOG2_10;
/// Guard bits kept beyond the requested decimal precision.
pub const GUARD_BITS: u32 = 64;

/// `mant / 2^bits`. Binary operations work at the smaller of the two
/// precisions, so precision is never silently increased or lost beyond that.
#[derive(Clone, Debug)]
pub struct HPReal {
    mant: BigInt,
    bits: u32,
}

pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + GUARD_BITS
}

fn shift(x: &BigInt, by: i64) -> BigInt {
    match by.cmp(&0) {
        Ordering::Greater => x << by as usize,
        Ordering::Less => round_shr(x, (-by) as usize),
        Ordering::Equal => x.clone(),
    }
}

/// Right shift rounding to nearest.
fn round_shr(x: &BigInt, by: usize) -> BigInt {
    if by == 0 {
        return x.clone();
    }
    let half = BigInt::one() << (by - 1);
    if x.is_negative() {
        -((-x + half) >> by)
    } else {
        (x + half) >> by
    }
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if (r * 2u8).abs() >= d.abs() {
        q + 1
    } else {
        q
    }
}

impl HPReal {
    pub fn from_parts(mant: BigInt, bits: u32) -> Self {
        Self { mant, bits }
    }

    pub fn zero(bits: u32) -> Self {
        Self {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Self::from_int(1, bits)
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Self {
            mant: BigInt::from(n) << bits as usize,
            bits,
        }
    }

    pub fn from_bigint(n: &BigInt, bits: u32) -> Self {
        Self {
            mant: n << bits as usize,
            bits,
        }
    }

    pub fn from_rational(q: &BigRational, bits: u32) -> Self {
        Self {
            mant: round_div(&(q.numer() << bits as usize), q.denom()),
            bits,
        }
    }

    pub fn from_ratio(n: i64, d: i64, bits: u32) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()), bits)
    }

    /// Exact binary value of an `f64` (only used for tolerances).
    pub fn from_f64(x: f64, bits: u32) -> Self {
        let q = BigRational::from_float(x).unwrap_or_else(BigRational::zero);
        Self::from_rational(&q, bits)
    }

    /// `10^e` for any integer `e`.
    pub fn pow10(e: i32, bits: u32) -> Self {
        let p = BigInt::from(10u8).pow(e.unsigned_abs());
        if e >= 0 {
            Self::from_bigint(&p, bits)
        } else {
            Self::from_rational(&BigRational::new(BigInt::one(), p), bits)
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn digits(&self) -> u32 {
        (self.bits.saturating_sub(GUARD_BITS) as f64 / LOG2_10).floor() as u32
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        Self {
            mant: shift(&self.mant, bits as i64 - self.bits as i64),
            bits,
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let bits = self.bits.min(other.bits);
        (
            shift(&self.mant, bits as i64 - self.bits as i64),
            shift(&other.mant, bits as i64 - other.bits as i64),
            bits,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self {
            mant: &self.mant * k,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: i64) -> Self {
        Self {
            mant: round_div(&self.mant, &BigInt::from(k)),
            bits: self.bits,
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        Self {
            mant: round_div(&(&self.mant * q.numer()), q.denom()),
            bits: self.bits,
        }
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Self::one(self.bits);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let nb = self.mant.bits() as i64;
        let drop = (nb - 62).max(0);
        let top = (&self.mant >> drop as usize).to_f64().unwrap_or(0.0);
        top * 2f64.powi((drop - self.bits as i64) as i32)
    }

    /// `|self - other| <= tol`.
    pub fn close_to(&self, other: &Self, tol: &Self) -> bool {
        (self - other).abs() <= *tol
    }

    /// Scientific notation with `sig` significant digits, e.g. `1.2020569e0`.
    pub fn to_sci(&self, sig: u32) -> String {
        if self.mant.is_zero() {
            return "0".to_string();
        }
        let sig = sig.max(1);
        let f = self.to_f64().abs();
        let mut e10 = if f > 0.0 && f.is_finite() {
            f.log10().floor() as i64
        } else {
            // underflow in f64; fall back on the binary exponent
            ((self.mant.bits() as f64 - self.bits as f64) * std::f64::consts::LOG10_2).floor() as i64
        };
        let abs = self.mant.abs();
        let digits_of = |e10: i64| -> BigInt {
            let k = sig as i64 - 1 - e10;
            let den = BigInt::one() << self.bits as usize;
            if k >= 0 {
                round_div(&(&abs * BigInt::from(10u8).pow(k as u32)), &den)
            } else {
                round_div(&abs, &(den * BigInt::from(10u8).pow((-k) as u32)))
            }
        };
        let lo = BigInt::from(10u8).pow(sig - 1);
        let hi = &lo * 10u8;
        let mut n = digits_of(e10);
        for _ in 0..4 {
            if n >= hi {
                e10 += 1;
            } else if n < lo {
                e10 -= 1;
            } else {
                break;
            }
            n = digits_of(e10);
        }
        let s = n.to_string();
        let sign = if self.mant.is_negative() { "-" } else { "" };
        if s.len() == 1 {
            format!("{sign}{s}e{e10}")
        } else {
            format!("{sign}{}.{}e{e10}", &s[..1], &s[1..])
        }
    }

    /// Fixed notation with `frac` digits after the point.
    pub fn to_fixed(&self, frac: u32) -> String {
        let scaled = round_div(
            &(&self.mant * BigInt::from(10u8).pow(frac)),
            &(BigInt::one() << self.bits as usize),
        );
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let s = format!("{:0>width$}", s, width = frac as usize + 1);
        let (ip, fp) = s.split_at(s.len() - frac as usize);
        let sign = if neg { "-" } else { "" };
        if frac == 0 {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{fp}")
        }
    }
}

impl PartialEq for HPReal {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned(other);
        a == b
    }
}

impl PartialOrd for HPReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.aligned(other);
        Some(a.cmp(&b))
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().map(|p| p as u32).unwrap_or_else(|| self.digits().min(40));
        f.write_str(&self.to_sci(sig.max(1)))
    }
}

impl Add for &HPReal {
    type Output = HPReal;
    fn add(self, rhs: &HPReal) -> HPReal {
        let (a, b, bits) = self.aligned(rhs);
        HPReal { mant: a + b, bits }
    }
}

impl Sub for &HPReal {
    type Output = HPReal;
    fn sub(self, rhs: &HPReal) -> HPReal {
        let (a, b, bits) = self.aligned(rhs);
        HPReal { mant: a - b, bits }
    }
}

impl Mul for &HPReal {
    type Output = HPReal;
    fn mul(self, rhs: &HPReal) -> HPReal {
        let bits = self.bits.min(rhs.bits);
        let prod = &self.mant * &rhs.mant;
        let total = self.bits as i64 + rhs.bits as i64;
        HPReal {
            mant: shift(&prod, bits as i64 - total),
            bits,
        }
    }
}

impl Div for &HPReal {
    type Output = HPReal;
    fn div(self, rhs: &HPReal) -> HPReal {
        assert!(!rhs.mant.is_zero(), "HPReal division by zero");
        let bits = self.bits.min(rhs.bits);
        // (A/2^p) / (B/2^q) = C/2^r  =>  C = A·2^(q+r) / (B·2^p)
        let num = &self.mant << (rhs.bits + bits) as usize;
        let den = &rhs.mant << self.bits as usize;
        HPReal {
            mant: round_div(&num, &den),
            bits,
        }
    }
}

impl Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal {
            mant: -&self.mant,
            bits: self.bits,
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for HPReal {
            type Output = HPReal;
            fn $m(self, rhs: HPReal) -> HPReal {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        -&self
    }
}

impl Scalar for HPReal {
    fn zero_like(&self) -> Self {
        HPReal::zero(self.bits)
    }
    fn one_like(&self) -> Self {
        HPReal::one(self.bits)
    }
    fn from_rational_like(&self, q: &BigRational) -> Self {
        HPReal::from_rational(q, self.bits)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_exact_zero(&self) -> bool {
        self.mant.is_zero()
    }
    fn scale(&self, q: &BigRational) -> Self {
        self.mul_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let b = bits_for_digits(40);
        let third = HPReal::from_ratio(1, 3, b);
        let one = &third.mul_int(3) - &HPReal::one(b);
        assert!(one.abs() < HPReal::pow10(-40, b));
        let x = &HPReal::from_ratio(7, 2, b) / &HPReal::from_ratio(1, 4, b);
        assert_eq!(x, HPReal::from_int(14, b));
        assert_eq!(HPReal::from_ratio(-3, 8, b).to_f64(), -0.375);
    }

    #[test]
    fn mixed_precision_takes_minimum() {
        let a = HPReal::one(100);
        let b = HPReal::one(300);
        assert_eq!((&a + &b).bits(), 100);
        assert_eq!((&a * &b).bits(), 100);
        assert_eq!((&b / &a).bits(), 100);
    }

    #[test]
    fn formatting() {
        let b = bits_for_digits(30);
        assert_eq!(HPReal::from_ratio(1, 8, b).to_sci(3), "1.25e-1");
        assert_eq!(HPReal::from_ratio(-1234, 1, b).to_sci(2), "-1.2e3");
        assert_eq!(HPReal::from_ratio(999, 1000, b).to_sci(2), "1.0e0");
        assert_eq!(HPReal::from_ratio(-1, 8, b).to_fixed(3), "-0.125");
        assert_eq!(HPReal::pow10(-25, b).to_sci(1), "1e-25");
    }
}
