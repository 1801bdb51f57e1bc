//! Closed forms and determinant evaluators for checkerboard families.
//!
//! Expressions are [`ZetaExpr`](crate::expr::ZetaExpr) polynomials. General
//! `(a,b)` formulas are stated over primitive ribbon and `{a,b}`-chain
//! symbols; [`reduce_13`] rewrites the `(1,3)` case into odd zeta values and
//! powers of `π`.

pub mod hooks;
pub mod primitives;
pub mod specials;
pub mod stairs;

use crate::expr::{PrimKind, ZetaExpr};
use crate::shapes::{Family, FamilySpec};
use crate::{Error, Result};

pub use hooks::{
    antihook_case, antihook_dims, antihook_eval, antihook_shape, hook_case, hook_dims, hook_eval, hook_shape,
    AntiHookCase, HookCase,
};
pub use primitives::{
    l_from_recursion, lead_b_chain, primitive_13, primitive_rec, reduce_13, s_general, sstar_general, sstar_genseries, zeta_13, zeta_13_star,
    Prim13, RecVariant,
};
pub use specials::{conjecture_residual, mzv_relation_check, special_tableau, special_values, ConjectureCase, ConjectureReport};
pub use stairs::{stair_data, stair_eval, stair_hankel, stair_hankel_13, stair_matrix, StairData};

/// The shape family behind a primitive ribbon symbol.
pub fn family_of(kind: PrimKind, n: u32) -> Family {
    match kind {
        PrimKind::A => Family::A(n),
        PrimKind::B => Family::B(n),
        PrimKind::L => Family::L(n),
        PrimKind::LStar => Family::LStar(n),
        PrimKind::S => Family::S(n),
        PrimKind::SStar => Family::SStar(n),
    }
}

/// Closed form of a family: over odd zeta values and `π` at `(1,3)`, over
/// primitive ribbon and chain symbols otherwise.
pub fn closed_form(spec: &FamilySpec) -> Result<ZetaExpr> {
    let (a, b) = (spec.a, spec.b);
    let is13 = (a, b) == (1, 3);
    let prim = |kind: PrimKind, p13: Prim13, n: u32| {
        if is13 {
            primitive_13(p13, n)
        } else {
            Ok(ZetaExpr::prim(kind, a, b, n as i64))
        }
    };
    let expr = match &spec.kind {
        Family::A(n) => prim(PrimKind::A, Prim13::A, *n)?,
        Family::B(n) => prim(PrimKind::B, Prim13::B, *n)?,
        Family::L(n) => prim(PrimKind::L, Prim13::L, *n)?,
        Family::LStar(n) => prim(PrimKind::LStar, Prim13::LStar, *n)?,
        Family::S(n) => s_general(a, b, *n),
        Family::SStar(n) => sstar_general(a, b, *n),
        Family::Stair { n, mu } => stair_eval(*n, mu, a, b)?,
        Family::Hook { m, n } => {
            let (c, p, q) = hook_case(*m, *n)?;
            hook_eval(c, p, q, a, b)?
        }
        Family::AntiHook { m, n } => {
            let (c, p, q) = antihook_case(*m, *n)?;
            antihook_eval(c, p, q, a, b)?
        }
        Family::Square(2) if is13 => special_values("square2x2_13")?,
        Family::Square(_) => return Err(Error::NoReductionAvailable(spec.to_string())),
    };
    if is13 {
        reduce_13(&expr)
    } else {
        Ok(expr)
    }
}
