//! Numeric SMZVs at large cutoffs.
//!
//! Every quantity is evaluated at the three cutoffs `M/2`, `M`, `2M` (a
//! [`Ladder`]). The reductions used (Jacobi–Trudi, ribbon decomposition) are
//! exact at each cutoff, so the ladder of the result is the ladder of the
//! truncated SMZV itself. A first order Richardson step removes the `1/M`
//! tail term; the change between the two Richardson values, doubled, is the
//! reported (heuristic) error bound.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::hpreal::{bits_for_digits, HPReal};
use super::pipoly::PiPoly;
use super::zeta::{pi, repeated_zeta, zeta_hp};
use crate::algebra::{det_laplace, Scalar};
use crate::exact::{jacobi_trudi_matrix, jt_hypothesis_holds, ribbon_decompose, JtEntry, JtVariant};
use crate::expr::{Symbol, ZetaExpr};
use crate::shapes::{make_family, FamilySpec, Tableau};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumericConfig {
    /// Working precision in decimal digits.
    pub digits: u32,
    /// Middle cutoff `M`; sums are also taken at `M/2` and `2M`.
    pub cutoff: u64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            digits: 50,
            cutoff: 100_000,
        }
    }
}

impl NumericConfig {
    pub fn new(digits: u32, cutoff: u64) -> Result<Self> {
        if cutoff < 8 {
            return Err(Error::InvalidCutoff(cutoff));
        }
        Ok(Self { digits, cutoff })
    }

    pub fn bits(&self) -> u32 {
        bits_for_digits(self.digits)
    }

    pub fn cutoffs(&self) -> [u64; 3] {
        [self.cutoff / 2, self.cutoff, 2 * self.cutoff]
    }

    /// Smallest bound ever reported: rounding in the last kept digits.
    pub fn floor(&self) -> HPReal {
        HPReal::pow10(-(self.digits as i32 - 3), self.bits())
    }
}

/// A value at the cutoffs `M/2`, `M`, `2M`.
#[derive(Debug, Clone)]
pub struct Ladder(pub [HPReal; 3]);

impl Ladder {
    pub fn constant(x: HPReal) -> Self {
        Self([x.clone(), x.clone(), x])
    }

    pub fn is_constant(&self) -> bool {
        self.0[0] == self.0[1] && self.0[1] == self.0[2]
    }

    fn map2(&self, other: &Self, f: impl Fn(&HPReal, &HPReal) -> HPReal) -> Self {
        Self([
            f(&self.0[0], &other.0[0]),
            f(&self.0[1], &other.0[1]),
            f(&self.0[2], &other.0[2]),
        ])
    }

    pub fn estimate(&self, cfg: &NumericConfig) -> TailEstimate {
        let [z0, z1, z2] = &self.0;
        let floor = cfg.floor();
        let cutoffs = (cfg.cutoff, 2 * cfg.cutoff);
        if self.is_constant() {
            return TailEstimate {
                value: z2.clone(),
                error_bound: floor,
                cutoffs,
            };
        }
        let r1 = &z1.mul_int(2) - z0;
        let r2 = &z2.mul_int(2) - z1;
        let bound = &(&r2 - &r1).abs().mul_int(2) + &floor;
        TailEstimate {
            value: r2,
            error_bound: bound,
            cutoffs,
        }
    }
}

impl Scalar for Ladder {
    fn zero_like(&self) -> Self {
        Self::constant(self.0[0].zero_like())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.0[0].one_like())
    }
    fn from_rational_like(&self, q: &BigRational) -> Self {
        Self::constant(self.0[0].from_rational_like(q))
    }
    fn plus(&self, other: &Self) -> Self {
        self.map2(other, |a, b| a + b)
    }
    fn minus(&self, other: &Self) -> Self {
        self.map2(other, |a, b| a - b)
    }
    fn times(&self, other: &Self) -> Self {
        self.map2(other, |a, b| a * b)
    }
    fn negate(&self) -> Self {
        Self([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
    fn is_exact_zero(&self) -> bool {
        self.0.iter().all(HPReal::is_zero)
    }
    fn scale(&self, q: &BigRational) -> Self {
        Self([self.0[0].scale(q), self.0[1].scale(q), self.0[2].scale(q)])
    }
}

/// Extrapolated value with a heuristic (not rigorous) error bound.
#[derive(Debug, Clone)]
pub struct TailEstimate {
    pub value: HPReal,
    pub error_bound: HPReal,
    /// The two cutoffs of the final Richardson step.
    pub cutoffs: (u64, u64),
}

impl TailEstimate {
    pub fn exact(value: HPReal, cfg: &NumericConfig) -> Self {
        Self {
            value,
            error_bound: cfg.floor(),
            cutoffs: (cfg.cutoff, 2 * cfg.cutoff),
        }
    }

    /// Whether `x` lies within the error bound of the estimate.
    pub fn contains(&self, x: &HPReal) -> bool {
        (&self.value - x).abs() <= self.error_bound
    }
}

type LeafKey = (bool, Vec<u32>);
type CacheKey = (bool, Vec<u32>, u64, u32);

fn leaf_cache() -> &'static Mutex<HashMap<CacheKey, Ladder>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Ladder>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Fixed-point DP over the longest index; returns the ladder of every prefix.
fn chain_dp(star: bool, index: &[u32], cutoffs: [u64; 3], bits: u32) -> Vec<Ladder> {
    let r = index.len();
    let max_k = *index.iter().max().unwrap() as usize;
    let mut needed = vec![false; max_k + 1];
    for &k in index {
        needed[k as usize] = true;
    }
    let one = BigUint::one() << bits as usize;
    let mut p: Vec<BigUint> = vec![BigUint::zero(); r + 1];
    let mut w: Vec<BigUint> = vec![BigUint::zero(); max_k + 1];
    let mut snaps: Vec<Vec<BigUint>> = Vec::with_capacity(3);
    let top = cutoffs[2] - 1;
    let mut next_snap = 0;
    for m in 1..=top {
        // floor(floor(x/m)/m) = floor(x/m^2), so successive division is exact
        let mut x = one.clone();
        for k in 1..=max_k {
            x /= m;
            if needed[k] {
                w[k] = x.clone();
            }
        }
        let step = |p: &mut Vec<BigUint>, j: usize| {
            let wk = &w[index[j - 1] as usize];
            let add = if j == 1 {
                wk.clone()
            } else {
                (&p[j - 1] * wk) >> bits as usize
            };
            p[j] += add;
        };
        if star {
            for j in 1..=r {
                step(&mut p, j);
            }
        } else {
            for j in (1..=r).rev() {
                step(&mut p, j);
            }
        }
        while next_snap < 3 && m == cutoffs[next_snap] - 1 {
            snaps.push(p.clone());
            next_snap += 1;
        }
    }
    (1..=r)
        .map(|j| {
            let v = |s: usize| HPReal::from_parts(BigInt::from(snaps[s][j].clone()), bits);
            Ladder([v(0), v(1), v(2)])
        })
        .collect()
}

/// Ladders for a batch of (star, index) leaves. Leaves that are prefixes of
/// another leaf share its DP; independent roots run in parallel.
pub fn leaf_ladders(leaves: &[LeafKey], cfg: &NumericConfig) -> HashMap<LeafKey, Ladder> {
    let bits = cfg.bits() + 32;
    let mut out = HashMap::new();
    let mut todo: HashSet<LeafKey> = HashSet::new();
    {
        let cache = leaf_cache().lock().unwrap();
        for (star, ix) in leaves {
            match cache.get(&(*star, ix.clone(), cfg.cutoff, bits)) {
                Some(l) => {
                    out.insert((*star, ix.clone()), l.clone());
                }
                None => {
                    todo.insert((*star, ix.clone()));
                }
            }
        }
    }
    let mut roots: Vec<LeafKey> = todo
        .iter()
        .filter(|(s, ix)| {
            !todo
                .iter()
                .any(|(s2, ix2)| s2 == s && ix2.len() > ix.len() && ix2.starts_with(ix))
        })
        .cloned()
        .collect();
    roots.sort();
    let results: Vec<(LeafKey, Vec<Ladder>)> = roots
        .into_par_iter()
        .map(|(star, ix)| {
            let l = chain_dp(star, &ix, cfg.cutoffs(), bits);
            ((star, ix), l)
        })
        .collect();
    let mut cache = leaf_cache().lock().unwrap();
    for ((star, ix), ladders) in results {
        for (j, l) in ladders.into_iter().enumerate() {
            let key = (star, ix[..=j].to_vec());
            cache.insert((star, key.1.clone(), cfg.cutoff, bits), l.clone());
            out.insert(key, l);
        }
    }
    out
}

fn check_index(index: &[u32]) -> Result<()> {
    match index.last() {
        None => Err(Error::EmptyIndex),
        Some(&k) if k < 2 => Err(Error::NotAdmissible(format!(
            "last entry of {index:?} must be at least 2"
        ))),
        _ => Ok(()),
    }
}

fn chain_numeric(star: bool, index: &[u32], cfg: &NumericConfig) -> Result<TailEstimate> {
    check_index(index)?;
    let key = (star, index.to_vec());
    let l = leaf_ladders(std::slice::from_ref(&key), cfg).remove(&key).unwrap();
    Ok(l.estimate(cfg))
}

/// `ζ(k_1,…,k_r)` (first entry on the smallest variable).
pub fn mzv_numeric(index: &[u32], cfg: &NumericConfig) -> Result<TailEstimate> {
    chain_numeric(false, index, cfg)
}

pub fn mzsv_numeric(index: &[u32], cfg: &NumericConfig) -> Result<TailEstimate> {
    chain_numeric(true, index, cfg)
}

fn constant_symbol(s: &Symbol, bits: u32) -> Option<HPReal> {
    match *s {
        Symbol::Pi => Some(pi(bits)),
        Symbol::Zeta(k) if k >= 2 => Some(zeta_hp(k, bits)),
        Symbol::Repeat { star, s, n } if s >= 2 => {
            let (e, h) = repeated_zeta(s, n as usize, bits);
            Some(if star { h } else { e }.to_hp(bits))
        }
        _ => None,
    }
}

/// Evaluates an expression at the three cutoffs. Single zeta values, `π`
/// and repeated indices use their limits; other MZV symbols are summed;
/// primitive ribbons go through [`smzv_ladder`].
pub fn eval_ladder(expr: &ZetaExpr, cfg: &NumericConfig) -> Result<Ladder> {
    let bits = cfg.bits() + 32;
    let mut leaves = Vec::new();
    for s in expr.symbols() {
        if constant_symbol(&s, bits).is_none() {
            if let Some((star, ix)) = s.as_index() {
                if !ix.is_empty() {
                    leaves.push((star, ix));
                }
            }
        }
    }
    let ladders = leaf_ladders(&leaves, cfg);
    let proto = Ladder::constant(HPReal::one(bits));
    let value = expr.eval(&proto, &mut |s| {
        if let Some(x) = constant_symbol(s, bits) {
            return Ok(Ladder::constant(x));
        }
        if let Some((star, ix)) = s.as_index() {
            return Ok(ladders[&(star, ix)].clone());
        }
        match *s {
            Symbol::Prim { kind, a, b, n } => {
                let spec = FamilySpec {
                    kind: crate::closed_forms::family_of(kind, n),
                    a,
                    b,
                };
                smzv_ladder(&make_family(&spec)?, cfg)
            }
            _ => Err(Error::MissingContext(format!("numeric value of {s}"))),
        }
    })?;
    Ok(value)
}

/// Estimate of a symbolic expression; see [`eval_ladder`].
pub fn eval_numeric(expr: &ZetaExpr, cfg: &NumericConfig) -> Result<TailEstimate> {
    Ok(eval_ladder(expr, cfg)?.estimate(cfg))
}

/// The Jacobi–Trudi variant used numerically: the smaller matrix, and on a
/// tie the one whose leaves converge.
pub fn preferred_variant(t: &Tableau) -> JtVariant {
    let h = t.shape().outer().len();
    let w = t.shape().outer().part(1) as usize;
    match h.cmp(&w) {
        std::cmp::Ordering::Less => JtVariant::Rows,
        std::cmp::Ordering::Greater => JtVariant::Cols,
        std::cmp::Ordering::Equal => {
            if !jt_hypothesis_holds(t, JtVariant::Rows) && jt_hypothesis_holds(t, JtVariant::Cols) {
                JtVariant::Cols
            } else {
                JtVariant::Rows
            }
        }
    }
}

/// Ladder of the truncated SMZV through an exact reduction.
pub fn smzv_ladder(t: &Tableau, cfg: &NumericConfig) -> Result<Ladder> {
    let bits = cfg.bits() + 32;
    if t.is_empty() {
        return Ok(Ladder::constant(HPReal::one(bits)));
    }
    if !t.is_admissible() {
        return Err(Error::NotAdmissible(format!("{t} has a corner entry below 2")));
    }
    if t.is_diagonal_constant() {
        let mat = jacobi_trudi_matrix(t, preferred_variant(t))?;
        let leaves: Vec<LeafKey> = mat
            .iter()
            .flatten()
            .filter_map(|e| match e {
                JtEntry::Leaf { star, index } => Some((*star, index.clone())),
                _ => None,
            })
            .collect();
        let ladders = leaf_ladders(&leaves, cfg);
        let proto = Ladder::constant(HPReal::one(bits));
        let m: Vec<Vec<Ladder>> = mat
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        JtEntry::Zero => proto.zero_like(),
                        JtEntry::One => proto.clone(),
                        JtEntry::Leaf { star, index } => ladders[&(*star, index.clone())].clone(),
                    })
                    .collect()
            })
            .collect();
        return Ok(det_laplace(&m, &proto));
    }
    if t.shape().is_ribbon() {
        return eval_ladder(&ribbon_decompose(t)?.expr, cfg);
    }
    Err(Error::NoReductionAvailable(t.shape().to_string()))
}

/// Numeric SMZV of an admissible tableau that is diagonal-constant or a ribbon.
pub fn smzv_numeric(t: &Tableau, cfg: &NumericConfig) -> Result<TailEstimate> {
    Ok(smzv_ladder(t, cfg)?.estimate(cfg))
}

/// Determinant by elimination with partial pivoting.
pub fn det_float(m: &[Vec<HPReal>]) -> Result<HPReal> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n == 0 {
        return Ok(HPReal::one(crate::numerics::hpreal::GUARD_BITS));
    }
    let bits = m.iter().flatten().map(HPReal::bits).min().unwrap();
    let mut a: Vec<Vec<HPReal>> = m.to_vec();
    let mut det = HPReal::one(bits);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| a[x][k].abs().partial_cmp(&a[y][k].abs()).unwrap())
            .unwrap();
        if a[p][k].is_zero() {
            return Ok(HPReal::zero(bits));
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det = &det * &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k + 1..n {
                let v = &a[i][j] - &(&f * &a[k][j]);
                a[i][j] = v;
            }
        }
    }
    Ok(det)
}

/// `c·π^k` at the configured precision.
pub fn pipoly_value(p: &PiPoly, cfg: &NumericConfig) -> HPReal {
    p.to_hp(cfg.bits() + 32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::exact::{trunc_mzsv, trunc_mzv, trunc_smzv, Cutoff};
    use crate::numerics::pipoly::zeta_even;

    fn small() -> NumericConfig {
        NumericConfig::new(30, 16).unwrap()
    }

    #[test]
    fn ladders_match_exact_truncations() {
        let cfg = small();
        let ix = vec![1, 3, 2];
        let ls = leaf_ladders(&[(false, ix.clone()), (true, ix.clone())], &cfg);
        for star in [false, true] {
            for j in 1..=3 {
                let l = &ls[&(star, ix[..j].to_vec())];
                for (s, &m) in cfg.cutoffs().iter().enumerate() {
                    let c = Cutoff::new(m).unwrap();
                    let want = if star { trunc_mzsv(&ix[..j], c) } else { trunc_mzv(&ix[..j], c) }.unwrap();
                    let want = HPReal::from_rational(&want, cfg.bits());
                    assert!(l.0[s].close_to(&want, &HPReal::pow10(-28, cfg.bits())));
                }
            }
        }
    }

    #[test]
    fn smzv_ladder_is_exact_per_cutoff() {
        let cfg = small();
        let shape = crate::shapes::SkewShape::parse_parts(&[3, 3, 2], &[1]).unwrap();
        let t = crate::shapes::checkerboard_fill(&shape, 1, 3).unwrap();
        let l = smzv_ladder(&t, &cfg).unwrap();
        for (s, &m) in cfg.cutoffs().iter().enumerate() {
            let want = trunc_smzv(&t, Cutoff::new(m).unwrap()).unwrap();
            let want = HPReal::from_rational(&want, cfg.bits());
            assert!(l.0[s].close_to(&want, &HPReal::pow10(-25, cfg.bits())));
        }
    }

    #[test]
    fn zeta_two() {
        let cfg = NumericConfig::new(30, 100_000).unwrap();
        let est = mzv_numeric(&[2], &cfg).unwrap();
        let exact = zeta_even(2).to_hp(cfg.bits());
        assert!(est.contains(&exact));
        assert!(est.error_bound < HPReal::pow10(-8, cfg.bits()));
    }

    #[test]
    fn errors() {
        let cfg = small();
        assert_eq!(mzv_numeric(&[], &cfg).unwrap_err(), Error::EmptyIndex);
        assert!(matches!(mzv_numeric(&[2, 1], &cfg), Err(Error::NotAdmissible(_))));
        let t = Tableau::row(&[2, 1]).unwrap();
        assert!(matches!(smzv_numeric(&t, &cfg), Err(Error::NotAdmissible(_))));
        let shape = crate::shapes::SkewShape::parse_parts(&[2, 2], &[]).unwrap();
        let t = Tableau::from_fn(shape, |(i, j)| i + j).unwrap();
        assert!(matches!(smzv_numeric(&t, &cfg), Err(Error::NoReductionAvailable(_))));
    }

    #[test]
    fn float_determinants() {
        let b = bits_for_digits(40);
        let id: Vec<Vec<HPReal>> = (0..3)
            .map(|i| (0..3).map(|j| HPReal::from_int((i == j) as i64, b)).collect())
            .collect();
        assert_eq!(det_float(&id).unwrap(), HPReal::one(b));
        let h: Vec<Vec<HPReal>> = (0..4)
            .map(|i| (0..4).map(|j| HPReal::from_ratio(1, i + j + 1, b)).collect())
            .collect();
        let want = HPReal::from_rational(&rat(1, 6048000), b);
        assert!(det_float(&h).unwrap().close_to(&want, &HPReal::pow10(-38, b)));
        let z = |s| zeta_hp(s, b);
        let m = vec![vec![z(3), z(7)], vec![z(7), z(11)]];
        let want = &(&z(3) * &z(11)) - &(&z(7) * &z(7));
        assert!(det_float(&m).unwrap().close_to(&want, &HPReal::pow10(-38, b)));
        assert!(matches!(det_float(&[vec![z(3)], vec![]]), Err(Error::NonSquare { .. })));
    }
}
