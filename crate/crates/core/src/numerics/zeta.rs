//! π and single zeta values at arbitrary precision.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hpreal::{bits_for_digits, HPReal};
use super::pipoly::{bernoulli, newton, repeat_even, zeta_even, PiPoly};

static PI_CACHE: Mutex<Option<(u32, BigInt)>> = Mutex::new(None);

/// `atan(1/x)` scaled by `2^bits`.
fn atan_inv(x: u64, bits: u32) -> BigInt {
    let one = BigInt::one() << bits as usize;
    let x2 = BigInt::from(x * x);
    let mut term = one / x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !term.is_zero() {
        let t = &term / (2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

/// π by Machin's formula, cached at the highest precision requested so far.
pub fn pi(bits: u32) -> HPReal {
    let mut cache = PI_CACHE.lock().unwrap();
    if let Some((b, m)) = cache.as_ref() {
        if *b >= bits {
            return HPReal::from_parts(m.clone(), *b).with_bits(bits);
        }
    }
    let work = bits + 32;
    let m: BigInt = atan_inv(5, work) * 16 - atan_inv(239, work) * 4;
    *cache = Some((work, m.clone()));
    HPReal::from_parts(m, work).with_bits(bits)
}

/// `ζ(s)` for odd `s ≥ 3` by Euler–Maclaurin summation with `n_terms`
/// direct terms; the correction series runs until it drops below the
/// working precision.
pub fn zeta_euler_maclaurin(s: u32, bits: u32, n_terms: u64) -> HPReal {
    assert!(s >= 2);
    let work = bits + 32;
    let one = BigInt::one() << work as usize;
    let n = n_terms;
    let mut sum = BigInt::zero();
    for m in 1..n {
        sum += &one / BigInt::from(m).pow(s);
    }
    let nb = BigInt::from(n);
    let to_fixed = |q: &BigRational| (q.numer() << work as usize) / q.denom();
    // N^{1-s}/(s-1) + N^{-s}/2
    sum += to_fixed(&BigRational::new(BigInt::one(), nb.pow(s - 1) * (s - 1)));
    sum += to_fixed(&BigRational::new(BigInt::one(), nb.pow(s) * 2));
    let eps = BigInt::from(1u8);
    // Σ_j B_{2j}/(2j)! · s(s+1)…(s+2j-2) · N^{-s-2j+1}
    let mut rising = BigRational::from_integer(BigInt::from(s)); // s (j = 1)
    let mut fact = BigInt::from(2u8); // (2j)!
    let mut j: u32 = 1;
    let mut prev_abs: Option<BigInt> = None;
    loop {
        let b = bernoulli(2 * j as usize);
        let q = &b * &rising / BigRational::from_integer(&fact * nb.pow(s + 2 * j - 1));
        let t = to_fixed(&q);
        let a = t.magnitude().clone();
        let a = BigInt::from(a);
        if a <= eps {
            break;
        }
        if let Some(p) = &prev_abs {
            // asymptotic series started to diverge
            if &a > p {
                break;
            }
        }
        sum += t;
        prev_abs = Some(a);
        // advance rising factorial by two factors and (2j)! by two
        let s64 = s as i64;
        let jj = j as i64;
        rising *= BigRational::from_integer(BigInt::from((s64 + 2 * jj - 1) * (s64 + 2 * jj)));
        fact *= BigInt::from((2 * jj + 1) * (2 * jj + 2));
        j += 1;
    }
    HPReal::from_parts(sum, work).with_bits(bits)
}

fn default_terms(bits: u32) -> u64 {
    // the correction series reaches e^{-2πN}; N ≈ bits/8 gives ample margin
    (bits as u64 / 8).max(12) + 10
}

/// An exact or approximate single zeta value.
#[derive(Debug, Clone)]
pub enum ZetaValue {
    Exact(PiPoly),
    Approx(HPReal),
}

impl ZetaValue {
    pub fn to_hp(&self, bits: u32) -> HPReal {
        match self {
            ZetaValue::Exact(p) => p.to_hp(bits),
            ZetaValue::Approx(x) => x.with_bits(bits.min(x.bits())),
        }
    }
}

/// Memo of odd zeta values keyed by `(s, bits)`. Reads are concurrent,
/// fills are serialized per key by the write lock.
#[derive(Default)]
pub struct ZetaCache {
    odd: RwLock<HashMap<(u32, u32), HPReal>>,
}

impl ZetaCache {
    pub fn global() -> &'static ZetaCache {
        static CACHE: OnceLock<ZetaCache> = OnceLock::new();
        CACHE.get_or_init(ZetaCache::default)
    }

    pub fn odd(&self, s: u32, bits: u32) -> HPReal {
        if let Some(v) = self.odd.read().unwrap().get(&(s, bits)) {
            return v.clone();
        }
        let v = zeta_euler_maclaurin(s, bits, default_terms(bits));
        self.odd.write().unwrap().entry((s, bits)).or_insert(v).clone()
    }
}

/// `ζ(s)` for `s ≥ 2`: exact for even `s`, `digits` decimal digits for odd `s`.
pub fn zeta_int(s: u32, digits: u32) -> ZetaValue {
    assert!(s >= 2, "ζ(s) diverges for s < 2");
    if s % 2 == 0 {
        ZetaValue::Exact(zeta_even(s))
    } else {
        ZetaValue::Approx(ZetaCache::global().odd(s, bits_for_digits(digits)))
    }
}

/// `ζ(s)` as an `HPReal` at the given binary precision.
pub fn zeta_hp(s: u32, bits: u32) -> HPReal {
    if s % 2 == 0 {
        zeta_even(s).to_hp(bits)
    } else {
        ZetaCache::global().odd(s, bits)
    }
}

/// `ζ({s}^n)` and `ζ*({s}^n)`.
pub fn repeated_zeta(s: u32, n: usize, bits: u32) -> (ZetaValue, ZetaValue) {
    if s % 2 == 0 {
        let (e, h) = repeat_even(s, n);
        return (ZetaValue::Exact(e), ZetaValue::Exact(h));
    }
    let p: Vec<HPReal> = (1..=n as u32).map(|k| zeta_hp(s * k, bits + 16)).collect();
    let (e, h) = newton(&p, n, &HPReal::one(bits + 16));
    (
        ZetaValue::Approx(e[n].with_bits(bits)),
        ZetaValue::Approx(h[n].with_bits(bits)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZETA3: &str = "1.202056903159594285399738161511449990764986292340498881792";
    const PI: &str = "3.141592653589793238462643383279502884197169399375105820974";

    fn parse(s: &str, bits: u32) -> HPReal {
        let (ip, fp) = s.split_once('.').unwrap();
        let n: BigInt = format!("{ip}{fp}").parse().unwrap();
        let d = BigInt::from(10u8).pow(fp.len() as u32);
        HPReal::from_rational(&BigRational::new(n, d), bits)
    }

    #[test]
    fn pi_digits() {
        let b = bits_for_digits(55);
        let tol = HPReal::pow10(-55, b);
        assert!(pi(b).close_to(&parse(PI, b), &tol));
        // lower precision served from the cache
        let b2 = bits_for_digits(20);
        assert!(pi(b2).close_to(&parse(PI, b2), &HPReal::pow10(-20, b2)));
    }

    #[test]
    fn zeta3_two_internal_cutoffs() {
        let b = bits_for_digits(55);
        let z1 = zeta_euler_maclaurin(3, b, 30);
        let z2 = zeta_euler_maclaurin(3, b, 47);
        let tol = HPReal::pow10(-55, b);
        assert!(z1.close_to(&z2, &tol));
        assert!(z1.close_to(&parse(ZETA3, b), &tol));
    }

    #[test]
    fn even_zeta_matches_summation() {
        let b = bits_for_digits(40);
        for s in [2u32, 4, 8, 10] {
            let direct = zeta_euler_maclaurin(s, b, 40);
            let exact = zeta_even(s).to_hp(b);
            assert!(direct.close_to(&exact, &HPReal::pow10(-40, b)), "s={s}");
        }
    }

    #[test]
    fn repeated_odd_by_newton() {
        let b = bits_for_digits(40);
        let (ZetaValue::Approx(e1), ZetaValue::Approx(h1)) = repeated_zeta(3, 1, b) else {
            panic!()
        };
        assert!(e1.close_to(&zeta_hp(3, b), &HPReal::pow10(-40, b)));
        assert!(h1.close_to(&zeta_hp(3, b), &HPReal::pow10(-40, b)));
        let (ZetaValue::Approx(e2), ZetaValue::Approx(h2)) = repeated_zeta(3, 2, b) else {
            panic!()
        };
        let z3 = zeta_hp(3, b);
        let z6 = zeta_hp(6, b);
        let sq = &z3 * &z3;
        assert!(e2.close_to(&(&sq - &z6).div_int(2), &HPReal::pow10(-40, b)));
        assert!(h2.close_to(&(&sq + &z6).div_int(2), &HPReal::pow10(-40, b)));
    }
}
