//! Ring abstraction shared by the exact, numeric and symbolic evaluators,
//! plus determinants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A commutative ring element that can build constants of its own kind
/// (for example at the same working precision).
pub trait Scalar: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, q: &BigRational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_exact_zero(&self) -> bool;
    fn scale(&self, q: &BigRational) -> Self;

    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn from_rational_like(&self, q: &BigRational) -> Self {
        q.clone()
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
        self.is_zero()
    }
    fn scale(&self, q: &BigRational) -> Self {
        self * q
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    Ok(n)
}

/// Exact determinant: cofactor expansion up to 4×4, fraction-free
/// (Bareiss) elimination on the cleared integer matrix beyond that.
pub fn det_rational(m: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigRational::one());
    }
    if n <= 4 {
        return Ok(det_laplace(m, &BigRational::one()));
    }
    Ok(det_bareiss(m))
}

pub fn det_bareiss(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    // clear denominators row by row
    let mut scale = BigRational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        scale /= BigRational::from_integer(l.clone());
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigRational::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = BigRational::from_integer(a[n - 1][n - 1].clone()) * scale;
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Division-free determinant over any commutative ring, by dynamic
/// programming over column subsets (Laplace expansion along rows).
pub fn det_laplace<S: Scalar>(m: &[Vec<S>], proto: &S) -> S {
    let n = m.len();
    if n == 0 {
        return proto.one_like();
    }
    assert!(n <= 20, "Laplace determinant limited to 20×20");
    // f[mask] = signed sum over assignments of the first popcount(mask) rows to columns in mask
    let mut f: Vec<Option<S>> = vec![None; 1 << n];
    f[0] = Some(proto.one_like());
    for mask in 0usize..(1 << n) {
        let Some(cur) = f[mask].clone() else { continue };
        if cur.is_exact_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask >> col & 1 == 1 || m[row][col].is_exact_zero() {
                continue;
            }
            // sign from the number of already used columns to the right
            let inversions = (mask >> col).count_ones();
            let term = cur.times(&m[row][col]);
            let term = if inversions % 2 == 1 { term.negate() } else { term };
            let next = mask | 1 << col;
            f[next] = Some(match f[next].take() {
                Some(v) => v.plus(&term),
                None => term,
            });
        }
    }
    f[(1 << n) - 1].take().unwrap_or_else(|| proto.zero_like())
}

/// Determinant of an exact matrix given in integers.
pub fn det_int(m: &[Vec<i64>]) -> BigRational {
    let q: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    det_bareiss(&q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hilbert(n: usize) -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| rat(1, (i + j + 1) as i64)).collect())
            .collect()
    }

    // independent oracle: permutation expansion
    fn det_perm(m: &[Vec<BigRational>]) -> BigRational {
        fn rec(m: &[Vec<BigRational>], row: usize, used: &mut Vec<bool>) -> BigRational {
            let n = m.len();
            if row == n {
                return BigRational::one();
            }
            let mut acc = BigRational::zero();
            for c in 0..n {
                if used[c] {
                    continue;
                }
                let sign = if used[c + 1..].iter().filter(|&&u| u).count() % 2 == 0 { 1 } else { -1 };
                used[c] = true;
                let sub = rec(m, row + 1, used);
                used[c] = false;
                acc += &m[row][c] * sub * int(sign);
            }
            acc
        }
        rec(m, 0, &mut vec![false; m.len()])
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_rational(&[vec![int(1)]]).unwrap(), int(1));
        assert_eq!(
            det_rational(&[vec![int(1), int(2)], vec![int(3), int(4)]]).unwrap(),
            int(-2)
        );
        assert_eq!(det_rational(&hilbert(3)).unwrap(), rat(1, 2160));
        assert_eq!(det_bareiss(&hilbert(3)), rat(1, 2160));
        assert_eq!(det_bareiss(&hilbert(4)), rat(1, 6048000));
        assert!(matches!(
            det_rational(&[vec![int(1), int(2)]]),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn bareiss_agrees_with_permutation_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..5 {
                let m: Vec<Vec<BigRational>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let z: i64 = if rng.gen_bool(0.25) { 0 } else { rng.gen_range(-9..10) };
                                rat(z, rng.gen_range(1..5))
                            })
                            .collect()
                    })
                    .collect();
                let want = det_perm(&m);
                assert_eq!(det_bareiss(&m), want);
                assert_eq!(det_laplace(&m, &BigRational::one()), want);
                assert_eq!(det_rational(&m).unwrap(), want);
            }
        }
    }
}
