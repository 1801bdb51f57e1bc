//! Isolated values outside the resolved families, the glued-product
//! conjectures and the MZV relation implied by the `(1,3)` anti-hooks.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::rat;
use crate::expr::ZetaExpr;
use crate::numerics::hpreal::HPReal;
use crate::numerics::numeric::{mzv_numeric, smzv_ladder, NumericConfig};
use crate::numerics::pipoly::zeta_13_closed;
use crate::report::{IdentityReport, Status};
use crate::shapes::{checkerboard_fill, make_family, Family, FamilySpec, Partition, SkewShape, Tableau};
use crate::{Error, Result};

fn product(c: BigRational, args: &[i64]) -> ZetaExpr {
    let mut t = ZetaExpr::one();
    for &s in args {
        t = &t * &ZetaExpr::zeta(s);
    }
    t.scale_by(&c)
}

fn parse_arg(name: &str, prefix: &str) -> Option<u32> {
    name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?.trim().parse().ok()
}

/// Named values: `square2x2_13`, `antistair3_13`, `A12(n)`, `S12(n)`.
pub fn special_values(name: &str) -> Result<ZetaExpr> {
    match name {
        "square2x2_13" => Ok(&product(rat(1, 2), &[3, 5]) - &product(rat(5, 16), &[4, 4])),
        "antistair3_13" => {
            let terms = [
                (rat(1, 16), vec![5, 9]),
                (rat(-1, 16), vec![3, 3, 8]),
                (rat(1, 2), vec![3, 3, 3, 5]),
                (rat(3, 8), vec![3, 4, 7]),
                (rat(-85, 192), vec![5, 5, 4]),
            ];
            Ok(terms
                .into_iter()
                .fold(ZetaExpr::zero(), |acc, (c, args)| &acc + &product(c, &args)))
        }
        _ => {
            if let Some(n) = parse_arg(name, "A12") {
                if n < 1 {
                    return Err(Error::IndexOutOfRange("A12(n) needs n >= 1".into()));
                }
                Ok(ZetaExpr::zeta(3 * n as i64 + 1).scale_by(&rat(3, 1)))
            } else if let Some(n) = parse_arg(name, "S12") {
                Ok(ZetaExpr::repeat(true, 3, n as i64))
            } else {
                Err(Error::UnknownName(name.to_string()))
            }
        }
    }
}

/// The tableau whose value a special name denotes.
pub fn special_tableau(name: &str) -> Result<Tableau> {
    let fam = |kind| make_family(&FamilySpec { kind, a: 1, b: 2 });
    match name {
        "square2x2_13" => Tableau::from_rows(&[vec![Some(3), Some(1)], vec![Some(1), Some(3)]]),
        "antistair3_13" => Tableau::from_rows(&[
            vec![None, None, Some(3)],
            vec![None, Some(3), Some(1)],
            vec![Some(3), Some(1), Some(3)],
        ]),
        _ => {
            if let Some(n) = parse_arg(name, "A12") {
                fam(Family::A(n))
            } else if let Some(n) = parse_arg(name, "S12") {
                fam(Family::S(n))
            } else {
                Err(Error::UnknownName(name.to_string()))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConjectureCase {
    W8,
    W16,
    W24,
    W32,
}

impl ConjectureCase {
    pub const ALL: [ConjectureCase; 4] = [Self::W8, Self::W16, Self::W24, Self::W32];

    pub fn n(self) -> u32 {
        match self {
            Self::W8 => 1,
            Self::W16 => 2,
            Self::W24 => 3,
            Self::W32 => 4,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "W8" => Ok(Self::W8),
            "W16" => Ok(Self::W16),
            "W24" => Ok(Self::W24),
            "W32" => Ok(Self::W32),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }

    /// The conjectured `α_n`.
    pub fn alpha(self) -> BigRational {
        match self {
            Self::W8 => rat(70, 1),
            Self::W16 => rat(1_074_502, 1),
            Self::W24 => BigRational::new(BigInt::from(9_656_199_193_420i64), BigInt::from(21)),
            Self::W32 => BigRational::from_integer(BigInt::from(2_222_659_435_447_178_310i64)),
        }
    }

    /// `(n+1,n+1,n,…,2)/δ_{n-2}`
    pub fn glued_shape(self) -> Result<SkewShape> {
        let n = self.n();
        let mut outer = vec![n + 1, n + 1];
        outer.extend((2..=n).rev());
        SkewShape::new(Partition::new(outer)?, Partition::staircase(n as i64 - 2))
    }
}

impl std::fmt::Display for ConjectureCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub case: ConjectureCase,
    /// `(B(n-1)A(n) - glued) / ζ({1,3}^{2n})`
    pub ratio: HPReal,
    pub conjectured: BigRational,
    /// Error bound on `ratio`.
    pub error_bound: HPReal,
    pub status: Status,
    pub elapsed_ms: f64,
}

impl ConjectureReport {
    pub fn to_report(&self) -> IdentityReport {
        let bits = self.ratio.bits();
        let alpha = HPReal::from_rational(&self.conjectured, bits);
        let diff = (&self.ratio - &alpha).abs();
        IdentityReport {
            suite: "conjecture".into(),
            id: self.case.to_string(),
            lhs: self.ratio.to_sci(25),
            rhs: self.conjectured.to_string(),
            error_bound: Some(self.error_bound.to_sci(3)),
            tolerance: None,
            status: self.status,
            detail: Some(format!("|ratio-alpha| = {}", diff.to_sci(3))),
            elapsed_ms: self.elapsed_ms,
        }
    }
}

/// Numeric check of `B(n-1)A(n) - glued = α_n ζ({1,3}^{2n})` at `(1,3)`.
///
/// Never fails: the result is `Pass` when the relative error bound and the
/// relative distance to `α_n` are both below `rel_tol`, else `Inconclusive`.
pub fn conjecture_residual(case: ConjectureCase, cfg: &NumericConfig, rel_tol: f64) -> Result<ConjectureReport> {
    let start = Instant::now();
    let n = case.n();
    let fam = |kind| make_family(&FamilySpec { kind, a: 1, b: 3 });
    let b = smzv_ladder(&fam(Family::B(n - 1))?, cfg)?;
    let a = smzv_ladder(&fam(Family::A(n))?, cfg)?;
    let glued = smzv_ladder(&checkerboard_fill(&case.glued_shape()?, 1, 3)?, cfg)?;
    use crate::algebra::Scalar;
    let est = b.times(&a).minus(&glued).estimate(cfg);
    let bits = est.value.bits();
    let z = zeta_13_closed(2 * n).to_hp(bits);
    let ratio = &est.value / &z;
    let error_bound = &est.error_bound / &z;
    let alpha = case.alpha();
    let alpha_hp = HPReal::from_rational(&alpha, bits);
    let rel = |x: &HPReal| x.to_f64() / alpha_hp.to_f64().abs();
    let status = if rel(&error_bound) < rel_tol && rel(&(&ratio - &alpha_hp).abs()) < rel_tol {
        Status::Pass
    } else {
        Status::Inconclusive
    };
    Ok(ConjectureReport {
        case,
        ratio,
        conjectured: alpha,
        error_bound,
        status,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn chain13(n: u32) -> impl Iterator<Item = u32> {
    std::iter::repeat([1u32, 3]).take(n as usize).flatten()
}

/// Both sides of
/// `Σ_j ζ({1,3}^j,1,2,2,{1,3}^{n-j-1}) + 3ζ({1,3}^j,1,{1,3}^{n-j})
///  = 2·4^{-n} Σ_j ζ({4}^j,5,{4}^{n-j-1})`.
pub fn mzv_relation_check(n: u32, cfg: &NumericConfig, tol: &HPReal) -> Result<IdentityReport> {
    if n < 1 {
        return Err(Error::IndexOutOfRange("relation needs n >= 1".into()));
    }
    let start = Instant::now();
    let mut lhs_terms: Vec<(i64, Vec<u32>)> = Vec::new();
    let mut rhs_terms = Vec::new();
    for j in 0..n {
        let mut k: Vec<u32> = chain13(j).collect();
        k.extend([1, 2, 2]);
        k.extend(chain13(n - j - 1));
        lhs_terms.push((1, k));
        let mut k: Vec<u32> = chain13(j).collect();
        k.push(1);
        k.extend(chain13(n - j));
        lhs_terms.push((3, k));
        let mut k = vec![4u32; j as usize];
        k.push(5);
        k.extend(std::iter::repeat(4).take((n - j - 1) as usize));
        rhs_terms.push(k);
    }
    let bits = cfg.bits() + 32;
    let mut lhs = HPReal::zero(bits);
    let mut err = HPReal::zero(bits);
    for (c, k) in &lhs_terms {
        let e = mzv_numeric(k, cfg)?;
        lhs = &lhs + &e.value.mul_int(*c);
        err = &err + &e.error_bound.mul_int(*c);
    }
    let mut rhs = HPReal::zero(bits);
    for k in &rhs_terms {
        let e = mzv_numeric(k, cfg)?;
        rhs = &rhs + &e.value;
        err = &err + &e.error_bound;
    }
    let scale = BigRational::new(BigInt::from(2), BigInt::from(4u8).pow(n));
    rhs = rhs.mul_rational(&scale);
    let id = format!("n={n} @M={}", cfg.cutoff);
    Ok(IdentityReport::numeric("mzv-relation", id, &lhs, &rhs, &err, tol).timed(start.elapsed()))
}
