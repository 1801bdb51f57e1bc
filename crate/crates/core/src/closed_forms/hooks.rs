//! Hooks `(m,1^n)` and anti-hooks `(m^{n+1})/((m-1)^n)` over primitive
//! ribbon and chain symbols.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::expr::{PrimKind, ZetaExpr};
use crate::shapes::{Partition, SkewShape};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HookCase {
    /// `(2p+2, 1^{2q-1})`, `p ≥ 0`, `q ≥ 1`
    EvenRow,
    /// `(2p+1, 1^{2q})`, `p, q ≥ 0`
    OddRow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AntiHookCase {
    /// `((2p)^{2q+1})/((2p-1)^{2q})`, `p ≥ 1`, `q ≥ 0`
    I,
    /// `((2p)^{2q})/((2p-1)^{2q-1})`, `p, q ≥ 1`
    II,
    /// `((2p+1)^{2q})/((2p)^{2q-1})`, `p ≥ 0`, `q ≥ 1`
    III,
    /// `((2p+1)^{2q+1})/((2p)^{2q})`, `p, q ≥ 0`
    IV,
}

fn sign(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(if k.rem_euclid(2) == 0 { 1 } else { -1 }))
}

fn range(what: &str, p: u32, q: u32) -> Error {
    Error::IndexOutOfRange(format!("{what} is not defined for p = {p}, q = {q}"))
}

/// The hook's `(m, n)` with shape `(m, 1^n)`.
pub fn hook_dims(case: HookCase, p: u32, q: u32) -> Result<(u32, u32)> {
    match case {
        HookCase::EvenRow if q >= 1 => Ok((2 * p + 2, 2 * q - 1)),
        HookCase::EvenRow => Err(range("even-row hook", p, q)),
        HookCase::OddRow => Ok((2 * p + 1, 2 * q)),
    }
}

pub fn hook_shape(case: HookCase, p: u32, q: u32) -> Result<SkewShape> {
    let (m, n) = hook_dims(case, p, q)?;
    let mut parts = vec![m];
    parts.extend(std::iter::repeat(1).take(n as usize));
    SkewShape::straight(Partition::new(parts)?)
}

/// Which case and `(p, q)` a hook `(m, 1^n)` falls into.
pub fn hook_case(m: u32, n: u32) -> Result<(HookCase, u32, u32)> {
    match (m % 2, n % 2) {
        (0, 1) if m >= 2 => Ok((HookCase::EvenRow, (m - 2) / 2, (n + 1) / 2)),
        (1, 0) => Ok((HookCase::OddRow, (m - 1) / 2, n / 2)),
        _ => Err(Error::NotCheckerboardable(format!("hook ({m},1^{n})"))),
    }
}

pub fn hook_eval(case: HookCase, p: u32, q: u32, a: u32, b: u32) -> Result<ZetaExpr> {
    hook_dims(case, p, q)?;
    let (lo2, neg) = match case {
        HookCase::EvenRow => (1, true),
        HookCase::OddRow => (0, false),
    };
    let (p, q) = (p as i64, q as i64);
    let mut acc = ZetaExpr::zero();
    for k1 in 0..=p {
        for k2 in lo2..=q {
            let t = &(&ZetaExpr::prim(PrimKind::B, a, b, k1 + k2) * &ZetaExpr::chain(true, false, a, b, p - k1))
                * &ZetaExpr::chain(false, false, a, b, q - k2);
            acc = &acc + &t.scale_by(&sign(k1 + k2));
        }
    }
    Ok(if neg { -acc } else { acc })
}

/// The anti-hook's `(m, n)` with shape `(m^{n+1})/((m-1)^n)`.
pub fn antihook_dims(case: AntiHookCase, p: u32, q: u32) -> Result<(u32, u32)> {
    use AntiHookCase::*;
    match case {
        I if p >= 1 => Ok((2 * p, 2 * q)),
        II if p >= 1 && q >= 1 => Ok((2 * p, 2 * q - 1)),
        III if q >= 1 => Ok((2 * p + 1, 2 * q - 1)),
        IV => Ok((2 * p + 1, 2 * q)),
        _ => Err(range("anti-hook", p, q)),
    }
}

pub fn antihook_shape(case: AntiHookCase, p: u32, q: u32) -> Result<SkewShape> {
    let (m, n) = antihook_dims(case, p, q)?;
    SkewShape::new(
        Partition::new(vec![m; n as usize + 1])?,
        Partition::with_zeros(vec![m - 1; n as usize])?,
    )
}

/// Which case and `(p, q)` an anti-hook `(m^{n+1})/((m-1)^n)` falls into.
pub fn antihook_case(m: u32, n: u32) -> Result<(AntiHookCase, u32, u32)> {
    if m < 1 {
        return Err(Error::InvalidShape("anti-hook needs m >= 1".into()));
    }
    Ok(match (m % 2, n % 2) {
        (0, 0) => (AntiHookCase::I, m / 2, n / 2),
        (0, _) => (AntiHookCase::II, m / 2, (n + 1) / 2),
        (1, 1) => (AntiHookCase::III, (m - 1) / 2, (n + 1) / 2),
        _ => (AntiHookCase::IV, (m - 1) / 2, n / 2),
    })
}

pub fn antihook_eval(case: AntiHookCase, p: u32, q: u32, a: u32, b: u32) -> Result<ZetaExpr> {
    use AntiHookCase::*;
    antihook_dims(case, p, q)?;
    let (p, q) = (p as i64, q as i64);
    let prim = |k, n| ZetaExpr::prim(k, a, b, n);
    let chain = |star, lead_b, n| ZetaExpr::chain(star, lead_b, a, b, n);
    // left factor depends on k1, right factor on k2
    let (left_lead, right_lead) = match case {
        I => (false, true),
        II => (false, false),
        III => (true, false),
        IV => (true, true),
    };
    let mut acc = ZetaExpr::zero();
    for k1 in 1..=p {
        for k2 in 1..=q {
            let t = &(&prim(PrimKind::A, k1 + k2 - 1) * &chain(true, left_lead, p - k1)) * &chain(false, right_lead, q - k2);
            acc = &acc + &t.scale_by(&sign(k1 + k2));
        }
    }
    if matches!(case, I | IV) {
        for k1 in 1..=p {
            let t = &prim(PrimKind::SStar, q + k1) * &chain(true, left_lead, p - k1);
            acc = &acc - &t.scale_by(&sign(q + k1));
        }
    }
    if matches!(case, III | IV) {
        for k2 in 1..=q {
            let t = &prim(PrimKind::S, p + k2) * &chain(false, right_lead, q - k2);
            acc = &acc - &t.scale_by(&sign(p + k2));
        }
    }
    if case == IV {
        acc = &acc + &prim(PrimKind::B, p + q).scale_by(&sign(p + q));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::closed_forms::reduce_13;
    use crate::exact::{eval_truncated, trunc_smzv, Cutoff};
    use crate::shapes::checkerboard_fill;

    fn z(s: i64) -> ZetaExpr {
        ZetaExpr::zeta(s)
    }

    fn lin(terms: &[(i64, i64, &[i64])]) -> ZetaExpr {
        let mut acc = ZetaExpr::zero();
        for &(n, d, args) in terms {
            let mut t = ZetaExpr::one();
            for &s in args {
                t = &t * &z(s);
            }
            acc = &acc + &t.scale_by(&rat(n, d));
        }
        acc
    }

    #[test]
    fn single_box() {
        let b0 = ZetaExpr::prim(PrimKind::B, 1, 3, 0);
        assert_eq!(hook_eval(HookCase::OddRow, 0, 0, 1, 3).unwrap(), b0);
        assert_eq!(antihook_eval(AntiHookCase::IV, 0, 0, 1, 3).unwrap(), b0);
        assert!(hook_eval(HookCase::EvenRow, 1, 0, 1, 3).is_err());
        assert!(antihook_eval(AntiHookCase::II, 0, 1, 1, 3).is_err());
    }

    #[test]
    fn hook_examples() {
        let (c, p, q) = hook_case(4, 3).unwrap();
        let e = reduce_13(&hook_eval(c, p, q, 1, 3).unwrap()).unwrap();
        assert_eq!(e, lin(&[(5, 64, &[7, 4, 4]), (-3, 32, &[11, 4]), (1, 64, &[15])]));
        let (c, p, q) = hook_case(3, 4).unwrap();
        let e = reduce_13(&hook_eval(c, p, q, 1, 3).unwrap()).unwrap();
        let want = lin(&[
            (5, 896, &[3, 4, 4, 4]),
            (-71, 896, &[7, 4, 4]),
            (3, 32, &[11, 4]),
            (-1, 64, &[15]),
        ]);
        assert_eq!(e, want);
    }

    #[test]
    fn antihook_examples() {
        let cases: [(u32, u32, ZetaExpr); 4] = [
            (4, 2, lin(&[(5, 8, &[3, 4, 5]), (-1, 8, &[3, 9]), (-13245, 34496, &[4, 4, 4])])),
            (4, 3, lin(&[(5, 32, &[4, 4, 5]), (-3, 16, &[4, 9]), (1, 32, &[13])])),
            (3, 3, lin(&[(1, 8, &[3, 4, 5]), (-1, 8, &[3, 9]), (-493, 448448, &[4, 4, 4])])),
            (
                3,
                4,
                lin(&[
                    (1, 8, &[3, 3, 4, 5]),
                    (7279, 81536, &[3, 4, 4, 4]),
                    (-1, 8, &[3, 5, 7]),
                    (13, 896, &[4, 4, 7]),
                    (-1, 8, &[3, 3, 9]),
                    (-1, 64, &[15]),
                ]),
            ),
        ];
        for (m, n, want) in cases {
            let (c, p, q) = antihook_case(m, n).unwrap();
            let e = reduce_13(&antihook_eval(c, p, q, 1, 3).unwrap()).unwrap();
            assert_eq!(e, want, "antihook ({m}^{})/({}^{n})", n + 1, m - 1);
        }
    }

    #[test]
    fn match_truncations() {
        let m = Cutoff::new(9).unwrap();
        for (a, b) in [(1, 3), (2, 3), (1, 2)] {
            for (hm, hn) in [(1, 0), (1, 2), (2, 1), (3, 2), (4, 1), (2, 3)] {
                let (c, p, q) = hook_case(hm, hn).unwrap();
                let t = checkerboard_fill(&hook_shape(c, p, q).unwrap(), a, b).unwrap();
                let e = hook_eval(c, p, q, a, b).unwrap();
                assert_eq!(eval_truncated(&e, m).unwrap(), trunc_smzv(&t, m).unwrap(), "hook {hm},{hn} ({a},{b})");
            }
            for (am, an) in [(2, 2), (2, 1), (3, 1), (3, 2), (1, 2), (2, 4), (4, 1)] {
                let (c, p, q) = antihook_case(am, an).unwrap();
                let t = checkerboard_fill(&antihook_shape(c, p, q).unwrap(), a, b).unwrap();
                let e = antihook_eval(c, p, q, a, b).unwrap();
                assert_eq!(
                    eval_truncated(&e, m).unwrap(),
                    trunc_smzv(&t, m).unwrap(),
                    "antihook {am},{an} ({a},{b}) {c:?}"
                );
            }
        }
    }
}
