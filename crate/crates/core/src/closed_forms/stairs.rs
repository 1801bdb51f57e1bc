//! Checkerboard stairs `δ_N/μ` as determinants in the primitive ribbons `B(n)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{det_laplace, Scalar};
use crate::expr::{PrimKind, ZetaExpr};
use crate::shapes::{check_in_staircase, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StairData {
    pub n: u32,
    /// `μ` padded with zeros to length `N`.
    pub mu: Vec<u32>,
    /// 1-based column indices.
    pub j0: Vec<usize>,
    pub j1: Vec<usize>,
    /// `m_j` for `j = 1..N`.
    pub m: Vec<i64>,
    pub l: i64,
}

pub fn stair_data(n: u32, mu: &Partition) -> Result<StairData> {
    if n < 1 {
        return Err(Error::InvalidMu("stair needs N >= 1".into()));
    }
    check_in_staircase(n, mu)?;
    let nn = n as i64;
    let mut sd = StairData {
        n,
        mu: (1..=n as usize).map(|j| mu.part(j)).collect(),
        j0: Vec::new(),
        j1: Vec::new(),
        m: Vec::new(),
        l: 0,
    };
    for j in 1..=n as usize {
        let mj = sd.mu[j - 1] as i64;
        let ji = j as i64;
        if (nn + ji - mj) % 2 == 1 {
            let m = (nn + ji - 1 - mj) / 2;
            sd.j0.push(j);
            sd.m.push(m);
            sd.l += m + ji + 1;
        } else {
            sd.j1.push(j);
            sd.m.push((nn + ji - 2 - mj) / 2);
        }
    }
    Ok(sd)
}

/// `F_N(μ)`: the matrix `((-1)^{m_j-i+1} B(m_j-i+1))` with column `j` and
/// row `m_j + 1` removed for every `j ∈ J0`.
pub fn stair_matrix<S: Scalar>(sd: &StairData, bval: &dyn Fn(i64) -> S) -> Vec<Vec<S>> {
    let n = sd.n as usize;
    let dropped_rows: Vec<i64> = sd.j0.iter().map(|&j| sd.m[j - 1] + 1).collect();
    let rows: Vec<i64> = (1..=n as i64).filter(|i| !dropped_rows.contains(i)).collect();
    rows.iter()
        .map(|&i| {
            sd.j1
                .iter()
                .map(|&j| {
                    let k = sd.m[j - 1] - i + 1;
                    let v = bval(k);
                    if k % 2 != 0 {
                        v.negate()
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect()
}

fn b_symbol(a: u32, b: u32) -> impl Fn(i64) -> ZetaExpr {
    move |k| ZetaExpr::prim(PrimKind::B, a, b, k)
}

/// `ζ(a,b;δ_N/μ) = (-1)^{l_N(μ)} det F_N(μ)` over `B(n)` symbols.
pub fn stair_eval(n: u32, mu: &Partition, a: u32, b: u32) -> Result<ZetaExpr> {
    let sd = stair_data(n, mu)?;
    let bval = b_symbol(a, b);
    let f = stair_matrix(&sd, &bval);
    let d = det_laplace(&f, &ZetaExpr::one());
    Ok(if sd.l % 2 == 1 { -d } else { d })
}

fn hankel_check(n: u32, k: u32) -> Result<()> {
    if n < 1 || k >= n {
        return Err(Error::IndexOutOfRange(format!("Hankel form needs 0 <= n < N, got N = {n}, n = {k}")));
    }
    Ok(())
}

/// `ζ(a,b;δ_N/δ_n)` as a Hankel determinant in `B(k)`.
pub fn stair_hankel(big_n: u32, n: u32, a: u32, b: u32) -> Result<ZetaExpr> {
    hankel_check(big_n, n)?;
    let bs = b_symbol(a, b);
    let (size, shift, negate) = if (big_n - n) % 2 == 0 {
        ((big_n - n) / 2, n as i64 - 1, false)
    } else {
        ((big_n + n + 1) / 2, -(n as i64) - 2, (n * (n + 1) / 2) % 2 == 1)
    };
    let m: Vec<Vec<ZetaExpr>> = (1..=size as i64)
        .map(|i| (1..=size as i64).map(|j| bs(i + j + shift)).collect())
        .collect();
    let d = det_laplace(&m, &ZetaExpr::one());
    Ok(if negate { -d } else { d })
}

/// The `(1,3)` Hankel forms in odd single zeta values.
pub fn stair_hankel_13(big_n: u32, n: u32) -> Result<ZetaExpr> {
    hankel_check(big_n, n)?;
    let (bn, sn) = (big_n as i64, n as i64);
    let (size, expo, entry_shift, negate): (i64, i64, i64, bool) = if (bn - sn) % 2 == 0 {
        ((bn - sn) / 2, (bn + sn) * (bn - sn) / 4, 4 * sn - 1, false)
    } else {
        (
            (bn + sn + 1) / 2,
            (bn + sn + 1) * (bn - sn - 1) / 4,
            -4 * sn - 5,
            (sn * (sn + 1) / 2) % 2 == 1,
        )
    };
    let m: Vec<Vec<ZetaExpr>> = (1..=size)
        .map(|i| (1..=size).map(|j| ZetaExpr::zeta(4 * (i + j) + entry_shift)).collect())
        .collect();
    let d = det_laplace(&m, &ZetaExpr::one());
    let pre = BigRational::new(BigInt::one(), BigInt::from(4u8).pow(expo as u32));
    let d = d.scale_by(&pre);
    Ok(if negate { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::reduce_13;

    fn bsym(k: i64) -> ZetaExpr {
        ZetaExpr::prim(PrimKind::B, 1, 3, k)
    }

    fn det2(m: [[ZetaExpr; 2]; 2]) -> ZetaExpr {
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    #[test]
    fn stair_data_examples() {
        let sd = stair_data(5, &Partition::new(vec![2, 2, 1]).unwrap()).unwrap();
        assert_eq!(sd.j0, vec![2, 3, 4]);
        assert_eq!(sd.j1, vec![1, 5]);
        assert_eq!(sd.m, vec![1, 2, 3, 4, 4]);
        assert_eq!(sd.l, 21);
        let sd = stair_data(5, &Partition::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(sd.j0, vec![2, 4]);
        assert_eq!(sd.j1, vec![1, 3, 5]);
        assert_eq!(sd.m, vec![1, 2, 3, 4, 4]);
        assert_eq!(sd.l, 14);
        assert!(matches!(
            stair_data(3, &Partition::new(vec![3]).unwrap()),
            Err(Error::InvalidMu(_))
        ));
    }

    #[test]
    fn stair_eval_example() {
        let e = stair_eval(5, &Partition::new(vec![2, 2, 1]).unwrap(), 1, 3).unwrap();
        let want = -det2([[bsym(1), bsym(4)], [bsym(0), bsym(3)]]);
        assert_eq!(e, want);
    }

    #[test]
    fn transposed_route_agrees_symbolically() {
        for n in 1..=6u32 {
            let shape_mus = crate::shapes::all_partitions_in_staircase(n);
            for mu in shape_mus {
                let x = stair_eval(n, &mu, 1, 3).unwrap();
                let y = stair_eval(n, &mu.conjugate(), 1, 3).unwrap();
                assert_eq!(x, y, "N={n} mu={mu}");
            }
        }
    }

    #[test]
    fn hankel_matches_stair() {
        for big_n in 1..=6u32 {
            for n in 0..big_n {
                let h = stair_hankel(big_n, n, 1, 3).unwrap();
                let s = stair_eval(big_n, &Partition::staircase(n as i64), 1, 3).unwrap();
                assert_eq!(h, s, "N={big_n} n={n}");
            }
        }
        assert_eq!(stair_hankel(5, 3, 1, 3).unwrap(), bsym(4));
        assert_eq!(
            stair_hankel(5, 1, 1, 3).unwrap(),
            det2([[bsym(2), bsym(3)], [bsym(3), bsym(4)]])
        );
        assert!(stair_hankel(3, 3, 1, 3).is_err());
    }

    #[test]
    fn hankel_13_is_specialization() {
        for big_n in 1..=6u32 {
            for n in 0..big_n {
                let h = reduce_13(&stair_hankel(big_n, n, 1, 3).unwrap()).unwrap();
                assert_eq!(h, stair_hankel_13(big_n, n).unwrap(), "N={big_n} n={n}");
            }
        }
        let z = |s| ZetaExpr::zeta(s);
        let want = det2([[z(3), z(7)], [z(7), z(11)]]).scale_by(&crate::algebra::rat(1, 16));
        assert_eq!(stair_hankel_13(3, 0).unwrap(), want);
    }
}
