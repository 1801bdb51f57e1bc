//! Exact `c·π^k` values: Bernoulli numbers, even zeta values and the
//! Newton-identity families `ζ({s}^n)`, `ζ*({s}^n)` for even `s`.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hpreal::HPReal;
use super::zeta::pi;
use crate::algebra::Scalar;

static BERNOULLI: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    let mut table = BERNOULLI.lock().unwrap();
    while table.len() <= n {
        let m = table.len();
        if m == 0 {
            table.push(BigRational::one());
            continue;
        }
        if m > 1 && m % 2 == 1 {
            table.push(BigRational::zero());
            continue;
        }
        // Σ_{k=0}^{m} C(m+1,k) B_k = 0
        let mut s = BigRational::zero();
        for (k, bk) in table.iter().enumerate() {
            if !bk.is_zero() {
                s += BigRational::from_integer(binomial(m as u64 + 1, k as u64)) * bk;
            }
        }
        table.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    table[n].clone()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `c·π^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPoly {
    pub coeff: BigRational,
    pub exp: u32,
}

impl PiPoly {
    pub fn new(coeff: BigRational, exp: u32) -> Self {
        Self { coeff, exp }
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), 0)
    }

    pub fn mul(&self, other: &PiPoly) -> PiPoly {
        PiPoly::new(&self.coeff * &other.coeff, self.exp + other.exp)
    }

    /// Sum, if the exponents agree (zero terms adapt to the other exponent).
    pub fn checked_add(&self, other: &PiPoly) -> Option<PiPoly> {
        if self.coeff.is_zero() {
            return Some(other.clone());
        }
        if other.coeff.is_zero() {
            return Some(self.clone());
        }
        (self.exp == other.exp).then(|| PiPoly::new(&self.coeff + &other.coeff, self.exp))
    }

    pub fn to_hp(&self, bits: u32) -> HPReal {
        &HPReal::from_rational(&self.coeff, bits + 16) * &pi(bits + 16).powi(self.exp)
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}·π", self.coeff),
            k => write!(f, "{}·π^{k}", self.coeff),
        }
    }
}

/// `ζ(s)` for even `s ≥ 2` via Euler's formula.
pub fn zeta_even(s: u32) -> PiPoly {
    assert!(s >= 2 && s % 2 == 0, "zeta_even needs an even argument");
    let b = bernoulli(s as usize);
    let sign = if (s / 2) % 2 == 1 { 1 } else { -1 };
    let coeff = b * BigRational::from_integer(BigInt::from(sign) << s as usize)
        / BigRational::from_integer(factorial(s as u64) * 2);
    PiPoly::new(coeff, s)
}

/// Newton's identities: elementary `e_0..=e_n` and complete homogeneous
/// `h_0..=h_n` from power sums `p_1..=p_n` (`p[k-1] = p_k`).
pub fn newton<S: Scalar>(p: &[S], n: usize, proto: &S) -> (Vec<S>, Vec<S>) {
    let mut e = vec![proto.one_like()];
    let mut h = vec![proto.one_like()];
    for m in 1..=n {
        let mut se = proto.zero_like();
        let mut sh = proto.zero_like();
        for i in 1..=m {
            let t = e[m - i].times(&p[i - 1]);
            se = if i % 2 == 1 { se.plus(&t) } else { se.minus(&t) };
            sh = sh.plus(&h[m - i].times(&p[i - 1]));
        }
        let inv = BigRational::new(BigInt::one(), BigInt::from(m));
        e.push(se.scale(&inv));
        h.push(sh.scale(&inv));
    }
    (e, h)
}

/// `(ζ({s}^n), ζ*({s}^n))` for even `s`, exactly.
pub fn repeat_even(s: u32, n: usize) -> (PiPoly, PiPoly) {
    // the π powers are homogeneous, so Newton runs on the coefficients alone
    let p: Vec<BigRational> = (1..=n as u32).map(|k| zeta_even(s * k).coeff).collect();
    let (e, h) = newton(&p, n, &BigRational::one());
    let exp = s * n as u32;
    (PiPoly::new(e[n].clone(), exp), PiPoly::new(h[n].clone(), exp))
}

/// `2π^{4n}/(4n+2)!`, the known value of `ζ({1,3}^n)`.
pub fn zeta_13_closed(n: u32) -> PiPoly {
    PiPoly::new(
        BigRational::new(BigInt::from(2), factorial(4 * n as u64 + 2)),
        4 * n,
    )
}
