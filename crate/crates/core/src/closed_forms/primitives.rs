//! Primitive ribbons: the `(1,3)` evaluations, the recursions in terms of
//! `{a,b}`-chains and the generating-series relations for `S`, `S*`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::expr::{PrimKind, Symbol, ZetaExpr};
use crate::numerics::pipoly::{repeat_even, PiPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Prim13 {
    S,
    SStar,
    A,
    B,
    L,
    LStar,
    /// `ζ(3,{1,3}^n)`
    Y,
    /// `ζ*(3,{1,3}^n)`
    YStar,
}

fn pipoly_expr(p: &PiPoly) -> ZetaExpr {
    ZetaExpr::pi_pow(p.exp).scale_by(&p.coeff)
}

fn pow4_inv(n: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(4u8).pow(n))
}

fn minus_quarter_pow(k: u32) -> BigRational {
    let q = pow4_inv(k);
    if k % 2 == 1 {
        -q
    } else {
        q
    }
}

fn sign(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(if k.rem_euclid(2) == 0 { 1 } else { -1 }))
}

fn rep4(star: bool, n: u32) -> ZetaExpr {
    let (e, h) = repeat_even(4, n as usize);
    pipoly_expr(if star { &h } else { &e })
}

/// `ζ({1,3}^n) = 4^{-n} ζ({4}^n)`.
pub fn zeta_13(n: u32) -> ZetaExpr {
    rep4(false, n).scale_by(&pow4_inv(n))
}

/// `ζ*({1,3}^n) = Σ_k ζ({1,3}^k) ζ*({4}^{n-k})`.
pub fn zeta_13_star(n: u32) -> ZetaExpr {
    let mut acc = ZetaExpr::zero();
    for k in 0..=n {
        acc = &acc + &(&zeta_13(k) * &rep4(true, n - k));
    }
    acc
}

fn zeta13_either(star: bool, n: u32) -> ZetaExpr {
    if star {
        zeta_13_star(n)
    } else {
        zeta_13(n)
    }
}

fn out_of_range(what: &str, n: u32) -> Error {
    Error::IndexOutOfRange(format!("{what} is not defined for n = {n}"))
}

/// The `(1,3)` evaluations of the primitive ribbons and of `ζ^(⋆)(3,{1,3}^n)`.
pub fn primitive_13(kind: Prim13, n: u32) -> Result<ZetaExpr> {
    let z = |s: u32| ZetaExpr::zeta(s as i64);
    Ok(match kind {
        Prim13::S => rep4(true, n).scale_by(&pow4_inv(n)),
        Prim13::SStar => {
            let mut acc = ZetaExpr::zero();
            for k in 0..=n {
                acc = &acc + &(&rep4(true, k).scale_by(&pow4_inv(k)) * &rep4(false, n - k));
            }
            acc
        }
        Prim13::A => {
            if n < 1 {
                return Err(out_of_range("A", n));
            }
            z(4 * n + 1).scale_by(&(pow4_inv(n) * BigInt::from(2)))
        }
        Prim13::B => z(4 * n + 3).scale_by(&pow4_inv(n)),
        Prim13::L | Prim13::LStar => {
            if n < 1 {
                return Err(out_of_range("L", n));
            }
            let star = kind == Prim13::LStar;
            let mut acc = ZetaExpr::zero();
            for k in 1..=n {
                let term = &z(4 * k + 1) * &zeta13_either(star, n - k);
                acc = &acc + &term.scale_by(&minus_quarter_pow(k));
            }
            acc.scale_by(&BigRational::from_integer(BigInt::from(-2)))
        }
        Prim13::Y | Prim13::YStar => {
            let star = kind == Prim13::YStar;
            let mut acc = ZetaExpr::zero();
            for k in 0..=n {
                let term = &z(4 * k + 3) * &zeta13_either(star, n - k);
                acc = &acc + &term.scale_by(&minus_quarter_pow(k));
            }
            acc
        }
    })
}

/// Rewrites every `(1,3)` chain, primitive ribbon and even repeated zeta
/// symbol into odd single zeta values and powers of `π`.
pub fn reduce_13(expr: &ZetaExpr) -> Result<ZetaExpr> {
    let mut failure = None;
    let out = expr.substitute(&mut |s| {
        let r = match *s {
            Symbol::Chain {
                star,
                lead_b: false,
                a: 1,
                b: 3,
                n,
            } => Some(Ok(zeta13_either(star, n))),
            Symbol::Chain {
                star,
                lead_b: true,
                a: 1,
                b: 3,
                n,
            } => Some(primitive_13(if star { Prim13::YStar } else { Prim13::Y }, n)),
            Symbol::Prim { kind, a: 1, b: 3, n } => Some(match kind {
                PrimKind::A => primitive_13(Prim13::A, n),
                PrimKind::B => primitive_13(Prim13::B, n),
                PrimKind::L => primitive_13(Prim13::L, n),
                PrimKind::LStar => primitive_13(Prim13::LStar, n),
                PrimKind::S => primitive_13(Prim13::S, n),
                PrimKind::SStar => primitive_13(Prim13::SStar, n),
            }),
            Symbol::Repeat { star, s, n } if s % 2 == 0 => {
                let (e, h) = repeat_even(s, n as usize);
                Some(Ok(pipoly_expr(if star { &h } else { &e })))
            }
            _ => None,
        };
        match r {
            Some(Ok(e)) => Some(e),
            Some(Err(err)) => {
                failure.get_or_insert(err);
                None
            }
            None => None,
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `S(n)` from the reciprocal series `(Σ (-1)^n ζ({a,b}^n) x^n)^{-1}`.
pub fn s_general(a: u32, b: u32, n: u32) -> ZetaExpr {
    let mut s = vec![ZetaExpr::one()];
    for m in 1..=n as i64 {
        let mut acc = ZetaExpr::zero();
        for k in 0..m {
            let term = &s[k as usize] * &ZetaExpr::chain(false, false, a, b, m - k);
            acc = &acc + &term.scale_by(&sign(m - k));
        }
        s.push(-acc);
    }
    s.pop().unwrap()
}

/// `S*(n) = Σ_k S(k) ζ({a+b}^{n-k})`.
pub fn sstar_general(a: u32, b: u32, n: u32) -> ZetaExpr {
    let mut acc = ZetaExpr::zero();
    for k in 0..=n {
        acc = &acc + &(&s_general(a, b, k) * &ZetaExpr::repeat(false, a + b, (n - k) as i64));
    }
    acc
}

/// `S*(n)` from the reciprocal series of `Σ (-1)^n ζ*({a,b}^n) x^n`.
pub fn sstar_genseries(a: u32, b: u32, n: u32) -> ZetaExpr {
    let mut s = vec![ZetaExpr::one()];
    for m in 1..=n as i64 {
        let mut acc = ZetaExpr::zero();
        for k in 0..m {
            let term = &s[k as usize] * &ZetaExpr::chain(true, false, a, b, m - k);
            acc = &acc + &term.scale_by(&sign(m - k));
        }
        s.push(-acc);
    }
    s.pop().unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RecVariant {
    Zeta,
    ZetaStar,
}

/// One step of the alternating recursions for `A(n)` (`n ≥ 2`) and `B(n)`
/// (`n ≥ 1`), over primitive ribbon and chain symbols.
pub fn primitive_rec(kind: PrimKind, variant: RecVariant, a: u32, b: u32, n: u32) -> Result<ZetaExpr> {
    let star = variant == RecVariant::ZetaStar;
    let n = n as i64;
    let chain = |m: i64| ZetaExpr::chain(star, false, a, b, m);
    let (lead, first) = match kind {
        PrimKind::A => {
            if n < 2 {
                return Err(Error::IndexOutOfRange(format!("A recursion needs n >= 2, got {n}")));
            }
            let l = if star { PrimKind::LStar } else { PrimKind::L };
            (ZetaExpr::prim(l, a, b, n).scale_by(&sign(n - 1)), 1)
        }
        PrimKind::B => {
            if n < 1 {
                return Err(Error::IndexOutOfRange(format!("B recursion needs n >= 1, got {n}")));
            }
            (ZetaExpr::chain(star, true, a, b, n).scale_by(&sign(n)), 0)
        }
        other => {
            return Err(Error::MissingContext(format!(
                "no recursion for {}",
                other.name()
            )))
        }
    };
    let mut acc = lead;
    for k in first..n {
        let term = &ZetaExpr::prim(kind, a, b, k) * &chain(n - k);
        acc = &acc - &term.scale_by(&sign(n - k));
    }
    Ok(acc)
}

/// `L(n)` (or `L*(n)`) solved from the `A` recursion, over `A` and chain symbols.
pub fn l_from_recursion(variant: RecVariant, a: u32, b: u32, n: u32) -> Result<ZetaExpr> {
    if n < 1 {
        return Err(out_of_range("L", n));
    }
    let star = variant == RecVariant::ZetaStar;
    let n = n as i64;
    let mut acc = ZetaExpr::prim(PrimKind::A, a, b, n);
    for k in 1..n {
        let term = &ZetaExpr::prim(PrimKind::A, a, b, k) * &ZetaExpr::chain(star, false, a, b, n - k);
        acc = &acc + &term.scale_by(&sign(n - k));
    }
    Ok(acc.scale_by(&sign(n - 1)))
}

/// `ζ^(⋆)(b,{a,b}^n) = Σ_k (-1)^k B(k) ζ^(⋆)({a,b}^{n-k})`.
pub fn lead_b_chain(star: bool, a: u32, b: u32, n: u32) -> ZetaExpr {
    let mut acc = ZetaExpr::zero();
    for k in 0..=n as i64 {
        let term = &ZetaExpr::prim(PrimKind::B, a, b, k) * &ZetaExpr::chain(star, false, a, b, n as i64 - k);
        acc = &acc + &term.scale_by(&sign(k));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::exact::{eval_truncated, Cutoff};
    use crate::numerics::pipoly::zeta_13_closed;

    fn z(s: i64) -> ZetaExpr {
        ZetaExpr::zeta(s)
    }

    #[test]
    fn small_values() {
        assert_eq!(primitive_13(Prim13::B, 0).unwrap(), z(3));
        assert_eq!(primitive_13(Prim13::A, 1).unwrap(), z(5).scale_by(&rat(1, 2)));
        assert_eq!(primitive_13(Prim13::B, 1).unwrap(), z(7).scale_by(&rat(1, 4)));
        assert!(matches!(primitive_13(Prim13::A, 0), Err(Error::IndexOutOfRange(_))));
        assert_eq!(primitive_13(Prim13::S, 0).unwrap(), ZetaExpr::one());
        // S(1) = ζ(1,3) = ζ(4)/4
        assert_eq!(primitive_13(Prim13::S, 1).unwrap(), z(4).scale_by(&rat(1, 4)));
    }

    #[test]
    fn zeta_13_is_closed_form() {
        for n in 0..=8 {
            let p = zeta_13_closed(n);
            assert_eq!(zeta_13(n), pipoly_expr(&p), "n={n}");
        }
    }

    #[test]
    fn recursion_at_13_reproduces_closed_forms() {
        for n in 2..=5u32 {
            for v in [RecVariant::Zeta, RecVariant::ZetaStar] {
                let e = reduce_13(&primitive_rec(PrimKind::A, v, 1, 3, n).unwrap()).unwrap();
                assert_eq!(e, primitive_13(Prim13::A, n).unwrap(), "A({n}) {v:?}");
            }
        }
        for n in 1..=5u32 {
            for v in [RecVariant::Zeta, RecVariant::ZetaStar] {
                let e = reduce_13(&primitive_rec(PrimKind::B, v, 1, 3, n).unwrap()).unwrap();
                assert_eq!(e, primitive_13(Prim13::B, n).unwrap(), "B({n}) {v:?}");
            }
        }
        let a2 = reduce_13(&primitive_rec(PrimKind::A, RecVariant::Zeta, 1, 3, 2).unwrap()).unwrap();
        assert_eq!(a2, z(9).scale_by(&rat(1, 8)));
    }

    #[test]
    fn l_from_recursion_matches_corollary() {
        for n in 1..=5 {
            for (v, k) in [(RecVariant::Zeta, Prim13::L), (RecVariant::ZetaStar, Prim13::LStar)] {
                let e = reduce_13(&l_from_recursion(v, 1, 3, n).unwrap()).unwrap();
                assert_eq!(e, primitive_13(k, n).unwrap(), "{k:?}({n})");
            }
        }
        let m = Cutoff::new(10).unwrap();
        for v in [RecVariant::Zeta, RecVariant::ZetaStar] {
            let kind = if v == RecVariant::Zeta { PrimKind::L } else { PrimKind::LStar };
            for n in 1..=3 {
                let e = l_from_recursion(v, 2, 3, n).unwrap();
                assert_eq!(
                    eval_truncated(&e, m).unwrap(),
                    eval_truncated(&ZetaExpr::prim(kind, 2, 3, n as i64), m).unwrap()
                );
            }
        }
    }

    #[test]
    fn b_recursion_first_step() {
        let e = primitive_rec(PrimKind::B, RecVariant::Zeta, 2, 3, 1).unwrap();
        let want = &(&ZetaExpr::prim(PrimKind::B, 2, 3, 0) * &ZetaExpr::chain(false, false, 2, 3, 1))
            - &ZetaExpr::chain(false, true, 2, 3, 1);
        assert_eq!(e, want);
        let m = Cutoff::new(12).unwrap();
        for v in [RecVariant::Zeta, RecVariant::ZetaStar] {
            let e = primitive_rec(PrimKind::B, v, 2, 3, 1).unwrap();
            assert_eq!(
                eval_truncated(&e, m).unwrap(),
                eval_truncated(&ZetaExpr::prim(PrimKind::B, 2, 3, 1), m).unwrap()
            );
        }
    }

    #[test]
    fn general_s_series() {
        assert_eq!(s_general(2, 3, 0), ZetaExpr::one());
        assert_eq!(s_general(2, 3, 1), ZetaExpr::chain(false, false, 2, 3, 1));
        for n in 0..=4 {
            assert_eq!(reduce_13(&s_general(1, 3, n)).unwrap(), primitive_13(Prim13::S, n).unwrap());
            assert_eq!(reduce_13(&sstar_general(1, 3, n)).unwrap(), primitive_13(Prim13::SStar, n).unwrap());
        }
    }

    #[test]
    fn lead_b_chain_matches_corollary() {
        for n in 0..=4 {
            for (star, kind) in [(false, Prim13::Y), (true, Prim13::YStar)] {
                let e = reduce_13(&lead_b_chain(star, 1, 3, n)).unwrap();
                assert_eq!(e, primitive_13(kind, n).unwrap());
            }
        }
    }
}
