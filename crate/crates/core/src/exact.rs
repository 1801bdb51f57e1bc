//! Truncated sums in exact rational arithmetic.
//!
//! All summation variables run over `1..M`. Internally the sums are carried
//! as integers scaled by powers of `L = lcm(1, …, M-1)`, so every term
//! `m^{-k}` becomes the integer `(L/m)^k`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock, RwLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{det_laplace, det_rational};
use crate::closed_forms::stairs::{stair_data, stair_matrix};
use crate::expr::{Symbol, ZetaExpr};
use crate::report::IdentityReport;
use crate::shapes::{checkerboard_fill, make_family, FamilySpec, Partition, SkewShape, Tableau};
use crate::{Error, Result};

pub const DEFAULT_DP_BUDGET: u64 = 2_000_000;

/// Truncation point: variables are strictly below `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cutoff(u64);

impl Cutoff {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidCutoff(m));
        }
        Ok(Self(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Largest admissible value of a summation variable.
    fn top(self) -> u64 {
        self.0 - 1
    }
}

fn lcm_upto(n: u64) -> BigInt {
    static CACHE: Mutex<BTreeMap<u64, BigInt>> = Mutex::new(BTreeMap::new());
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| (1..=n.max(1)).fold(BigInt::one(), |acc, k| num_integer::lcm(acc, BigInt::from(k))))
        .clone()
}

/// `(L/v)^k` for `v in 1..=n`, indexed `[v][k]` up to the largest `k`.
struct Powers {
    l: BigInt,
    table: Vec<Vec<BigInt>>,
}

impl Powers {
    fn new(n: u64, max_k: u32) -> Self {
        let l = lcm_upto(n);
        let mut table = vec![Vec::new()];
        for v in 1..=n {
            let base = &l / v;
            let mut row = vec![BigInt::one()];
            for k in 1..=max_k as usize {
                let next = &row[k - 1] * &base;
                row.push(next);
            }
            table.push(row);
        }
        Self { l, table }
    }

    fn get(&self, v: u64, k: u32) -> &BigInt {
        &self.table[v as usize][k as usize]
    }

    fn unscale(&self, x: BigInt, total: u32) -> BigRational {
        BigRational::new(x, self.l.pow(total))
    }
}

type MemoKey = (bool, Vec<u32>, u64);

fn memo() -> &'static RwLock<HashMap<MemoKey, BigRational>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, BigRational>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Values of every prefix `index[..j]`, `j = 1..=r`, in one pass.
/// `star` selects `≤` chains instead of `<`.
pub fn trunc_prefixes(star: bool, index: &[u32], m: Cutoff) -> Result<Vec<BigRational>> {
    if index.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let r = index.len();
    let pw = Powers::new(m.top(), *index.iter().max().unwrap());
    // p[j]: sum over chains of the first j entries with largest variable <= current v
    let mut p: Vec<BigInt> = vec![BigInt::zero(); r + 1];
    let mut shift = vec![0u32; r + 1];
    for j in 1..=r {
        shift[j] = shift[j - 1] + index[j - 1];
    }
    for v in 1..=m.top() {
        let step = |p: &mut Vec<BigInt>, j: usize| {
            let w = pw.get(v, index[j - 1]);
            let add = if j == 1 { w.clone() } else { &p[j - 1] * w };
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
    }
    let out: Vec<BigRational> = (1..=r).map(|j| pw.unscale(p[j].clone(), shift[j])).collect();
    let mut map = memo().write().unwrap();
    for (j, v) in out.iter().enumerate() {
        map.entry((star, index[..=j].to_vec(), m.get())).or_insert_with(|| v.clone());
    }
    Ok(out)
}

fn trunc_chain(star: bool, index: &[u32], m: Cutoff) -> Result<BigRational> {
    if index.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let key = (star, index.to_vec(), m.get());
    if let Some(v) = memo().read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    Ok(trunc_prefixes(star, index, m)?.pop().unwrap())
}

/// `Σ_{0<m_1<…<m_r<M} ∏ m_i^{-k_i}`.
pub fn trunc_mzv(index: &[u32], m: Cutoff) -> Result<BigRational> {
    trunc_chain(false, index, m)
}

/// `Σ_{0<m_1≤…≤m_r<M} ∏ m_i^{-k_i}`.
pub fn trunc_mzsv(index: &[u32], m: Cutoff) -> Result<BigRational> {
    trunc_chain(true, index, m)
}

fn binomials(n: usize, k: usize) -> Vec<Vec<u64>> {
    let mut c = vec![vec![0u64; k + 2]; n + 2];
    for i in 0..=n + 1 {
        c[i][0] = 1;
        for j in 1..=(k + 1).min(i) {
            c[i][j] = c[i - 1][j - 1] + if j <= i - 1 { c[i - 1][j] } else { 0 };
        }
    }
    c
}

/// Strictly increasing vectors over `1..=n` of a fixed length, in colex order.
struct Combos<'a> {
    n: u32,
    len: usize,
    binom: &'a [Vec<u64>],
}

impl Combos<'_> {
    fn count(&self) -> u64 {
        self.binom[self.n as usize][self.len]
    }

    fn rank(&self, z: &[u32]) -> usize {
        z.iter()
            .enumerate()
            .map(|(k, &v)| self.binom[v as usize - 1][k + 1])
            .sum::<u64>() as usize
    }

    fn all(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.count() as usize);
        if self.len == 0 {
            out.push(Vec::new());
            return out;
        }
        if self.len as u32 > self.n {
            return out;
        }
        let mut z: Vec<u32> = (1..=self.len as u32).collect();
        loop {
            out.push(z.clone());
            // colex successor
            let mut k = 0;
            loop {
                let limit = if k + 1 < self.len { z[k + 1] } else { self.n + 1 };
                if z[k] + 1 < limit {
                    break;
                }
                k += 1;
                if k == self.len {
                    return out;
                }
            }
            z[k] += 1;
            for (i, zi) in z.iter_mut().enumerate().take(k) {
                *zi = i as u32 + 1;
            }
        }
    }
}

/// Column-profile DP over semistandard fillings with entries in `1..=top`.
/// `weight(v, k)` is the integer weight of value `v` in a cell with exponent `k`.
fn column_dp(
    t: &Tableau,
    top: u64,
    budget: u64,
    weight: &dyn Fn(u64, u32) -> BigInt,
) -> Result<BigInt> {
    let shape = t.shape();
    let n = top as u32;
    let max_h = shape.height() as usize;
    let binom = binomials(n as usize, max_h);
    let mut prev: Option<(u32, u32, Vec<BigInt>)> = None; // (top row, bottom row, f)
    for j in 1..=shape.width() {
        let Some((t2, b2)) = shape.col_range(j) else { continue };
        let c2 = (b2 - t2 + 1) as usize;
        let combos = Combos { n, len: c2, binom: &binom };
        if combos.count() > budget {
            return Err(Error::DpBudgetExceeded {
                states: combos.count(),
                budget,
            });
        }
        let exps: Vec<u32> = (t2..=b2).map(|i| t.entry((i, j)).unwrap()).collect();
        let states = combos.all();
        let col_weight = |y: &[u32]| -> BigInt {
            y.iter()
                .zip(&exps)
                .fold(BigInt::one(), |acc, (&v, &k)| acc * weight(v as u64, k))
        };
        let f_new: Vec<BigInt> = match prev.take() {
            None => states.iter().map(|y| col_weight(y)).collect(),
            Some((t1, b1, f)) => {
                let o = if b2 >= t1 { (b2 - t1 + 1) as usize } else { 0 };
                let c1 = (b1 - t1 + 1) as usize;
                if o == 0 {
                    let total: BigInt = f.iter().sum();
                    states.iter().map(|y| col_weight(y) * &total).collect()
                } else {
                    let old = Combos { n, len: c1, binom: &binom };
                    let sub = Combos { n, len: o, binom: &binom };
                    // marginalize onto the top o rows of the old column
                    let mut g = vec![BigInt::zero(); sub.count() as usize];
                    for (x, fx) in old.all().iter().zip(&f) {
                        if !fx.is_zero() {
                            g[sub.rank(&x[..o])] += fx;
                        }
                    }
                    // dominance prefix sums over strictly increasing vectors
                    let subs = sub.all();
                    for k in (0..o).rev() {
                        for z in &subs {
                            let lower = if k == 0 { 0 } else { z[k - 1] };
                            if z[k] - 1 > lower {
                                let r = sub.rank(z);
                                let r_prev = r - binom[z[k] as usize - 1][k + 1] as usize
                                    + binom[z[k] as usize - 2][k + 1] as usize;
                                let add = g[r_prev].clone();
                                g[r] += add;
                            }
                        }
                    }
                    states
                        .iter()
                        .map(|y| {
                            let gv = &g[sub.rank(&y[c2 - o..])];
                            if gv.is_zero() {
                                BigInt::zero()
                            } else {
                                col_weight(y) * gv
                            }
                        })
                        .collect()
                }
            }
        };
        prev = Some((t2, b2, f_new));
    }
    Ok(prev.map(|(_, _, f)| f.into_iter().sum()).unwrap_or_else(BigInt::one))
}

/// Truncated SMZV by the column-profile DP with the default state budget.
pub fn trunc_smzv(t: &Tableau, m: Cutoff) -> Result<BigRational> {
    trunc_smzv_with_budget(t, m, DEFAULT_DP_BUDGET)
}

pub fn trunc_smzv_with_budget(t: &Tableau, m: Cutoff, budget: u64) -> Result<BigRational> {
    if t.is_empty() {
        return Ok(BigRational::one());
    }
    let max_k = t.entries().map(|(_, k)| k).max().unwrap();
    let pw = Powers::new(m.top(), max_k);
    let total = column_dp(t, m.top(), budget, &|v, k| pw.get(v, k).clone())?;
    Ok(pw.unscale(total, t.weight()))
}

/// Number of semistandard fillings with entries below `M`.
pub fn count_fillings(shape: &SkewShape, m: Cutoff) -> Result<BigInt> {
    if shape.is_empty() {
        return Ok(BigInt::one());
    }
    let t = Tableau::from_fn(shape.clone(), |_| 1)?;
    column_dp(&t, m.top(), DEFAULT_DP_BUDGET, &|_, _| BigInt::one())
}

/// Truncated SMZV by listing every semistandard filling. Only for small
/// shapes and cutoffs.
pub fn trunc_smzv_enum(t: &Tableau, m: Cutoff) -> BigRational {
    struct Walk<'a> {
        cells: &'a [((u32, u32), u32)],
        // entry of each placed cell; 0 = unplaced
        grid: Vec<Vec<u64>>,
        pw: Powers,
        top: u64,
        sum: BigInt,
    }
    impl Walk<'_> {
        fn rec(&mut self, pos: usize, acc: &BigInt) {
            if pos == self.cells.len() {
                self.sum += acc;
                return;
            }
            let ((i, j), k) = self.cells[pos];
            let (i, j) = (i as usize, j as usize);
            let lo = self.grid[i][j - 1].max(self.grid[i - 1][j] + 1).max(1);
            for v in lo..=self.top {
                self.grid[i][j] = v;
                let term = acc * self.pw.get(v, k);
                self.rec(pos + 1, &term);
            }
            self.grid[i][j] = 0;
        }
    }
    let cells: Vec<_> = t.entries().collect();
    if cells.is_empty() {
        return BigRational::one();
    }
    let top = m.top();
    let pw = Powers::new(top, cells.iter().map(|c| c.1).max().unwrap());
    let h = cells.iter().map(|c| c.0 .0).max().unwrap() as usize;
    let w = cells.iter().map(|c| c.0 .1).max().unwrap() as usize;
    let mut walk = Walk {
        cells: &cells,
        grid: vec![vec![0; w + 1]; h + 1],
        pw,
        top,
        sum: BigInt::zero(),
    };
    walk.rec(0, &BigInt::one());
    walk.pw.unscale(walk.sum, t.weight())
}

/// The harmonic product identity `ζ(t1)ζ(t2) = ζ(glue_h) + ζ(glue_v)` at `M`.
pub fn check_gluing(t1: &Tableau, t2: &Tableau, m: Cutoff) -> Result<IdentityReport> {
    let start = Instant::now();
    let lhs = trunc_smzv(t1, m)? * trunc_smzv(t2, m)?;
    let rhs = trunc_smzv(&t1.glue_h(t2), m)? + trunc_smzv(&t1.glue_v(t2), m)?;
    let id = format!("{} * {} @M={}", t1.to_literal(), t2.to_literal(), m.get());
    Ok(IdentityReport::exact("gluing", id, &lhs, &rhs).timed(start.elapsed()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JtVariant {
    /// Determinant of ζ* values, one per row pair.
    Rows,
    /// Determinant of ζ values, one per column pair.
    Cols,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum JtEntry {
    Zero,
    One,
    Leaf { star: bool, index: Vec<u32> },
}

impl JtEntry {
    pub fn to_expr(&self) -> ZetaExpr {
        match self {
            JtEntry::Zero => ZetaExpr::zero(),
            JtEntry::One => ZetaExpr::one(),
            JtEntry::Leaf { star, index } => ZetaExpr::mzv(*star, index.clone()),
        }
    }
}

// diagonals missing from a disconnected shape only meet vanishing cofactors
const DUMMY_ENTRY: u32 = 1;

/// The Jacobi–Trudi matrix of a diagonal-constant tableau.
pub fn jacobi_trudi_matrix(t: &Tableau, variant: JtVariant) -> Result<Vec<Vec<JtEntry>>> {
    let diag = t.diagonal_values().ok_or(Error::NotDiagonalConstant)?;
    let d = |m: i64| diag.get(&m).copied().unwrap_or(DUMMY_ENTRY);
    let shape = t.shape();
    let (outer, inner) = match variant {
        JtVariant::Rows => (shape.outer().clone(), shape.inner().clone()),
        JtVariant::Cols => (shape.outer().conjugate(), shape.inner().conjugate()),
    };
    let n = outer.len();
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let (li, mj) = (outer.part(i) as i64, inner.part(j) as i64);
            let (i, j) = (i as i64, j as i64);
            let len = li - mj - i + j;
            row.push(match len {
                l if l < 0 => JtEntry::Zero,
                0 => JtEntry::One,
                _ => match variant {
                    JtVariant::Rows => JtEntry::Leaf {
                        star: true,
                        index: (mj - j + 1..=li - i).map(d).collect(),
                    },
                    JtVariant::Cols => JtEntry::Leaf {
                        star: false,
                        index: (0..len).map(|s| d(j - mj - 1 - s)).collect(),
                    },
                },
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Whether the convergence hypothesis of the variant holds: the last entry
/// of every row (`Rows`) or column (`Cols`) is at least 2.
pub fn jt_hypothesis_holds(t: &Tableau, variant: JtVariant) -> bool {
    let shape = t.shape();
    match variant {
        JtVariant::Rows => (1..=shape.height()).all(|i| {
            let (_, hi) = shape.row_range(i);
            t.entry((i, hi)).unwrap() >= 2
        }),
        JtVariant::Cols => (1..=shape.width()).all(|j| match shape.col_range(j) {
            Some((_, hi)) => t.entry((hi, j)).unwrap() >= 2,
            None => true,
        }),
    }
}

/// Jacobi–Trudi determinant with truncated leaves.
pub fn trunc_jacobi_trudi(t: &Tableau, m: Cutoff, variant: JtVariant) -> Result<BigRational> {
    if t.is_empty() {
        return Ok(BigRational::one());
    }
    let mat = jacobi_trudi_matrix(t, variant)?;
    let mut q = Vec::with_capacity(mat.len());
    for row in &mat {
        let mut qr = Vec::with_capacity(row.len());
        for e in row {
            qr.push(match e {
                JtEntry::Zero => BigRational::zero(),
                JtEntry::One => BigRational::one(),
                JtEntry::Leaf { star, index } => trunc_chain(*star, index, m)?,
            });
        }
        q.push(qr);
    }
    det_rational(&q)
}

/// Symbolic Jacobi–Trudi determinant over MZV symbols.
pub fn jacobi_trudi_expr(t: &Tableau, variant: JtVariant) -> Result<ZetaExpr> {
    let mat = jacobi_trudi_matrix(t, variant)?;
    let m: Vec<Vec<ZetaExpr>> = mat
        .iter()
        .map(|row| row.iter().map(JtEntry::to_expr).collect())
        .collect();
    Ok(det_laplace(&m, &ZetaExpr::one()))
}

/// A ribbon SMZV as a polynomial in MZV / MZSV leaves, exact at every cutoff.
#[derive(Debug, Clone)]
pub struct RibbonExpr {
    pub tableau: Tableau,
    pub expr: ZetaExpr,
}

impl RibbonExpr {
    pub fn eval_truncated(&self, m: Cutoff) -> Result<BigRational> {
        eval_truncated(&self.expr, m)
    }
}

/// Cells of a ribbon from the bottom-left end, with the step into each
/// cell (`true` = right, `false` = up; the first step is unused).
fn ribbon_path(t: &Tableau) -> Result<(Vec<u32>, Vec<bool>)> {
    let shape = t.shape();
    if !shape.is_ribbon() {
        return Err(Error::NotARibbon(shape.to_string()));
    }
    let mut cell = shape.bottom_left();
    let mut entries = vec![t.entry(cell).unwrap()];
    let mut steps = vec![true];
    loop {
        let (i, j) = cell;
        if shape.contains((i, j + 1)) {
            cell = (i, j + 1);
            steps.push(true);
        } else if i > 1 && shape.contains((i - 1, j)) {
            cell = (i - 1, j);
            steps.push(false);
        } else {
            break;
        }
        entries.push(t.entry(cell).unwrap());
    }
    Ok((entries, steps))
}

type RibbonKey = (Vec<u32>, Vec<bool>);

fn decompose(entries: &[u32], steps: &[bool], memo: &mut HashMap<RibbonKey, ZetaExpr>) -> ZetaExpr {
    let n = entries.len();
    if n == 1 {
        return ZetaExpr::mzv(false, entries.to_vec());
    }
    let key = (entries.to_vec(), steps.to_vec());
    if let Some(e) = memo.get(&key) {
        return e.clone();
    }
    let first = steps[1];
    let out = match (2..n).find(|&p| steps[p] != first) {
        None if first => ZetaExpr::mzv(true, entries.to_vec()),
        None => ZetaExpr::mzv(false, entries.iter().rev().copied().collect()),
        Some(p) => {
            let head = decompose(&entries[..p], &steps[..p], memo);
            let mut tail_steps = vec![true];
            tail_steps.extend_from_slice(&steps[p + 1..]);
            let tail = decompose(&entries[p..], &tail_steps, memo);
            let mut flipped = steps.to_vec();
            flipped[p] = first;
            let other = decompose(entries, &flipped, memo);
            &(&head * &tail) - &other
        }
    };
    memo.insert(key, out.clone());
    out
}

/// Splits a ribbon at its first bend with the harmonic product until only
/// single rows (ζ*) and columns (ζ) remain.
pub fn ribbon_decompose(t: &Tableau) -> Result<RibbonExpr> {
    let (entries, steps) = ribbon_path(t)?;
    let expr = decompose(&entries, &steps, &mut HashMap::new());
    Ok(RibbonExpr {
        tableau: t.clone(),
        expr,
    })
}

/// Evaluates MZV-type symbols and primitive ribbons at cutoff `M`.
pub fn eval_truncated(expr: &ZetaExpr, m: Cutoff) -> Result<BigRational> {
    expr.eval(&BigRational::one(), &mut |s| truncated_symbol(s, m))
}

pub fn truncated_symbol(s: &Symbol, m: Cutoff) -> Result<BigRational> {
    if let Some((star, index)) = s.as_index() {
        return if index.is_empty() {
            Ok(BigRational::one())
        } else {
            trunc_chain(star, &index, m)
        };
    }
    match *s {
        Symbol::Prim { kind, a, b, n } => {
            let spec = FamilySpec {
                kind: crate::closed_forms::family_of(kind, n),
                a,
                b,
            };
            trunc_smzv(&make_family(&spec)?, m)
        }
        _ => Err(Error::MissingContext(format!("truncated value of {s}"))),
    }
}

/// Both determinant forms of a checkerboard stair against the direct sum.
pub fn check_stair_exact(n: u32, mu: &Partition, a: u32, b: u32, m: Cutoff) -> Result<IdentityReport> {
    let start = Instant::now();
    let shape = SkewShape::new(Partition::staircase(n as i64), mu.clone())?;
    let direct = trunc_smzv(&checkerboard_fill(&shape, a, b)?, m)?;
    let bvals: Vec<BigRational> = (0..n)
        .map(|k| {
            let spec = FamilySpec {
                kind: crate::shapes::Family::B(k),
                a,
                b,
            };
            trunc_smzv(&make_family(&spec)?, m)
        })
        .collect::<Result<_>>()?;
    let bval = |k: i64| {
        if k < 0 {
            BigRational::zero()
        } else {
            bvals[k as usize].clone()
        }
    };
    let mut values = Vec::new();
    for part in [mu.clone(), mu.conjugate()] {
        let sd = stair_data(n, &part)?;
        let f = stair_matrix(&sd, &bval);
        let d = if f.is_empty() { BigRational::one() } else { det_rational(&f)? };
        values.push(if sd.l % 2 == 1 { -d } else { d });
    }
    let id = format!("stair({n};{}) checker({a},{b}) @M={}", mu, m.get());
    let mut report = IdentityReport::exact("stairs", id, &values[0], &direct);
    if values[1] != direct {
        report = IdentityReport::exact("stairs", report.id.clone(), &values[1], &direct)
            .with_detail("transposed form differs");
    }
    Ok(report.timed(start.elapsed()))
}

/// The conjugate of a diagonal-constant tableau against the row-type
/// Jacobi–Trudi matrix of `t` with every ζ* leaf read as ζ.
///
/// The row-type matrix of `t` and the column-type matrix of `t'` have the
/// same indices, differing only in the star.
pub fn check_conjugation(t: &Tableau, m: Cutoff) -> Result<IdentityReport> {
    let start = Instant::now();
    let mat = jacobi_trudi_matrix(t, JtVariant::Rows)?;
    let mut q = Vec::with_capacity(mat.len());
    for row in &mat {
        let mut qr = Vec::with_capacity(row.len());
        for e in row {
            qr.push(match e {
                JtEntry::Zero => BigRational::zero(),
                JtEntry::One => BigRational::one(),
                JtEntry::Leaf { index, .. } => trunc_chain(false, index, m)?,
            });
        }
        q.push(qr);
    }
    let lhs = trunc_smzv(&t.conjugate(), m)?;
    let rhs = det_rational(&q)?;
    let id = format!("{} conjugate @M={}", t.to_literal(), m.get());
    Ok(IdentityReport::exact("conjugation", id, &lhs, &rhs).timed(start.elapsed()))
}
