//! Partitions, skew Young diagrams and tableaux.
//!
//! Cells are addressed 1-based as `(row, column)` with rows growing downwards.
//! A skew diagram `λ/μ` is valid when `μ_j < λ_j` for every part of `μ`
//! (no empty rows) and every column between 1 and `λ_1` holds at least one
//! cell (no empty columns). Both conditions are preserved by conjugation and
//! by the two gluings, and the bottom-left cell is always `(h, 1)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Cell = (u32, u32);

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Accepts trailing zero parts (as in `μ ⊂ δ_N` for stairs) and drops them.
    pub fn with_zeros(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `δ_n = (n, n-1, …, 1)`; empty for `n ≤ 0`.
    pub fn staircase(n: i64) -> Self {
        let parts = (1..=n.max(0) as u32).rev().collect();
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if outer.is_empty() {
            return Err(Error::InvalidShape("empty diagram".into()));
        }
        if inner.len() >= outer.len() && !inner.is_empty() {
            // either too many parts, or every row is indented and column 1 is empty
            return Err(Error::InvalidShape(format!(
                "{outer}/{inner}: inner partition must have fewer parts than the outer one"
            )));
        }
        for j in 1..=inner.len() {
            if inner.part(j) >= outer.part(j) {
                return Err(Error::InvalidShape(format!(
                    "{outer}/{inner}: row {j} is empty"
                )));
            }
        }
        let shape = Self { outer, inner };
        for c in 1..=shape.width() {
            if shape.col_range(c).is_none() {
                return Err(Error::InvalidShape(format!("{shape}: column {c} is empty")));
            }
        }
        Ok(shape)
    }

    pub fn straight(outer: Partition) -> Result<Self> {
        Self::new(outer, Partition::empty())
    }

    /// The empty diagram; only used as the sentinel behind [`Tableau::empty`].
    pub fn empty() -> Self {
        Self {
            outer: Partition::empty(),
            inner: Partition::empty(),
        }
    }

    pub fn parse_parts(outer: &[u32], inner: &[u32]) -> Result<Self> {
        Self::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    /// Rebuilds a diagram from an arbitrary cell set, translated so that the
    /// topmost row is 1 and the leftmost column is 1.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidShape("empty cell set".into()));
        }
        let min_row = cells.iter().map(|c| c.0).min().unwrap();
        let min_col = cells.iter().map(|c| c.1).min().unwrap();
        let max_row = cells.iter().map(|c| c.0).max().unwrap();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for r in min_row..=max_row {
            let cols: Vec<u32> = cells
                .iter()
                .filter(|c| c.0 == r)
                .map(|c| c.1 - min_col + 1)
                .collect();
            if cols.is_empty() {
                return Err(Error::InvalidShape(format!("row {} is empty", r - min_row + 1)));
            }
            let lo = *cols.iter().min().unwrap();
            let hi = *cols.iter().max().unwrap();
            if (hi - lo + 1) as usize != cols.len() {
                return Err(Error::InvalidShape(format!(
                    "row {} is not contiguous",
                    r - min_row + 1
                )));
            }
            outer.push(hi);
            inner.push(lo - 1);
        }
        let shape = Self::new(Partition::new(outer)?, Partition::with_zeros(inner)?)?;
        if shape.num_cells() != cells.len() {
            return Err(Error::InvalidShape("cell set is not a skew diagram".into()));
        }
        Ok(shape)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    /// Number of rows `h`.
    pub fn height(&self) -> u32 {
        self.outer.len() as u32
    }

    /// Number of columns `λ_1`.
    pub fn width(&self) -> u32 {
        self.outer.part(1)
    }

    pub fn num_cells(&self) -> usize {
        (self.outer.weight() - self.inner.weight()) as usize
    }

    /// Inclusive column range of row `i`.
    pub fn row_range(&self, i: u32) -> (u32, u32) {
        (self.inner.part(i as usize) + 1, self.outer.part(i as usize))
    }

    /// Inclusive row range of column `j`, `None` if the column is empty.
    pub fn col_range(&self, j: u32) -> Option<(u32, u32)> {
        let top = self.inner.conjugate().part(j as usize) + 1;
        let bottom = self.outer.conjugate().part(j as usize);
        (top <= bottom).then_some((top, bottom))
    }

    pub fn contains(&self, (i, j): Cell) -> bool {
        if i == 0 || i > self.height() {
            return false;
        }
        let (lo, hi) = self.row_range(i);
        lo <= j && j <= hi
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.height())
            .flat_map(|i| {
                let (lo, hi) = self.row_range(i);
                (lo..=hi).map(move |j| (i, j))
            })
            .collect()
    }

    pub fn corners(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|&(i, j)| !self.contains((i, j + 1)) && !self.contains((i + 1, j)))
            .collect()
    }

    pub fn top_right(&self) -> Cell {
        (1, self.width())
    }

    pub fn bottom_left(&self) -> Cell {
        (self.height(), 1)
    }

    pub fn conjugate(&self) -> SkewShape {
        if self.is_empty() {
            return self.clone();
        }
        // validity (no empty rows or columns) is symmetric under transposition
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    pub fn is_connected(&self) -> bool {
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        let Some(&start) = cells.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((i, j)) = queue.pop_front() {
            let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
            for n in nbrs {
                if cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// Connected and free of 2×2 blocks.
    pub fn is_ribbon(&self) -> bool {
        if self.is_empty() || !self.is_connected() {
            return false;
        }
        !self.cells().into_iter().any(|(i, j)| {
            self.contains((i + 1, j)) && self.contains((i, j + 1)) && self.contains((i + 1, j + 1))
        })
    }

    /// Parity of `j - i` shared by all corners, if they agree.
    pub fn corner_parity(&self) -> Option<u32> {
        let mut parities = self.corners().into_iter().map(|c| diagonal(c).rem_euclid(2) as u32);
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }

    pub fn is_checkerboardable(&self) -> bool {
        self.corner_parity().is_some()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Content `j - i` of a cell.
pub fn diagonal((i, j): Cell) -> i64 {
    j as i64 - i as i64
}

/// A filling of a skew diagram by positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: SkewShape,
    /// `rows[i-1]` holds the entries of row `i`, left to right.
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.height() as usize {
            return Err(Error::InvalidShape(format!(
                "{shape} has {} rows, got {}",
                shape.height(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let (lo, hi) = shape.row_range(i as u32 + 1);
            if row.len() != (hi + 1 - lo) as usize {
                return Err(Error::InvalidShape(format!(
                    "row {} of {shape} needs {} entries, got {}",
                    i + 1,
                    hi + 1 - lo,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidShape("entries must be positive".into()));
            }
        }
        Ok(Self { shape, rows })
    }

    pub fn from_fn(shape: SkewShape, mut entry: impl FnMut(Cell) -> u32) -> Result<Self> {
        let rows = (1..=shape.height())
            .map(|i| {
                let (lo, hi) = shape.row_range(i);
                (lo..=hi).map(|j| entry((i, j))).collect()
            })
            .collect();
        Self::new(shape, rows)
    }

    /// Sentinel with no cells; every evaluator assigns it the value 1.
    pub fn empty() -> Self {
        Self {
            shape: SkewShape::empty(),
            rows: Vec::new(),
        }
    }

    /// Single column read top to bottom.
    pub fn column(entries: &[u32]) -> Result<Self> {
        let shape = SkewShape::straight(Partition::new(vec![1; entries.len()])?)?;
        Self::new(shape, entries.iter().map(|&k| vec![k]).collect())
    }

    /// Single row read left to right.
    pub fn row(entries: &[u32]) -> Result<Self> {
        let shape = SkewShape::straight(Partition::new(vec![entries.len() as u32])?)?;
        Self::new(shape, vec![entries.to_vec()])
    }

    /// Rows with `None` for the skew holes, as in `[[_,1],[1,3]]`.
    pub fn from_rows(rows: &[Vec<Option<u32>>]) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut entries = Vec::new();
        for row in rows {
            let holes = row.iter().take_while(|x| x.is_none()).count();
            let rest: Option<Vec<u32>> = row[holes..].iter().copied().collect();
            let rest = rest.ok_or_else(|| Error::InvalidShape("holes must lead each row".into()))?;
            outer.push(row.len() as u32);
            inner.push(holes as u32);
            entries.push(rest);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::with_zeros(inner)?)?;
        Self::new(shape, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, (i, j): Cell) -> Option<u32> {
        if !self.shape.contains((i, j)) {
            return None;
        }
        let (lo, _) = self.shape.row_range(i);
        Some(self.rows[i as usize - 1][(j - lo) as usize])
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            let i = r as u32 + 1;
            let (lo, _) = self.shape.row_range(i);
            row.iter().enumerate().map(move |(c, &k)| ((i, lo + c as u32), k))
        })
    }

    pub fn weight(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.shape
            .corners()
            .into_iter()
            .all(|c| self.entry(c).is_some_and(|k| k >= 2))
    }

    /// Entry on each occupied diagonal, or `None` if some diagonal carries two values.
    pub fn diagonal_values(&self) -> Option<BTreeMap<i64, u32>> {
        let mut diag = BTreeMap::new();
        for (cell, k) in self.entries() {
            if *diag.entry(diagonal(cell)).or_insert(k) != k {
                return None;
            }
        }
        Some(diag)
    }

    pub fn is_diagonal_constant(&self) -> bool {
        self.diagonal_values().is_some()
    }

    /// Transposed diagram with transposed entries.
    pub fn conjugate(&self) -> Tableau {
        if self.is_empty() {
            return self.clone();
        }
        let shape = self.shape.conjugate();
        Tableau::from_fn(shape, |(i, j)| self.entry((j, i)).expect("transposed cell"))
            .expect("conjugate of a valid tableau")
    }

    /// Places `other` so that its bottom-left cell sits right of our top-right cell.
    pub fn glue_h(&self, other: &Tableau) -> Tableau {
        self.glue(other, true)
    }

    /// Places `other` so that its bottom-left cell sits on top of our top-right cell.
    pub fn glue_v(&self, other: &Tableau) -> Tableau {
        self.glue(other, false)
    }

    fn glue(&self, other: &Tableau, horizontal: bool) -> Tableau {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let h2 = other.shape.height();
        let w1 = self.shape.width();
        // offsets chosen so every coordinate stays positive
        let (row_shift_self, col_shift_other) = if horizontal {
            (h2 - 1, w1)
        } else {
            (h2, w1 - 1)
        };
        let mut cells = BTreeMap::new();
        for ((i, j), k) in self.entries() {
            cells.insert((i + row_shift_self, j), k);
        }
        for ((i, j), k) in other.entries() {
            cells.insert((i, j + col_shift_other), k);
        }
        let set: BTreeSet<Cell> = cells.keys().copied().collect();
        let shape = SkewShape::from_cells(&set).expect("gluing of valid shapes is a skew shape");
        let min_col = set.iter().map(|c| c.1).min().unwrap() - 1;
        let min_row = set.iter().map(|c| c.0).min().unwrap() - 1;
        Tableau::from_fn(shape, |(i, j)| cells[&(i + min_row, j + min_col)])
            .expect("glued tableau")
    }

    /// Literal form such as `[[_,1],[1,3]]`; `_` marks skew holes.
    pub fn to_literal(&self) -> String {
        let mut out = String::from("[");
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                out.push(',');
            }
            out.push('[');
            let holes = self.shape.inner.part(r + 1) as usize;
            let items: Vec<String> = std::iter::repeat("_".to_string())
                .take(holes)
                .chain(row.iter().map(|k| k.to_string()))
                .collect();
            out.push_str(&items.join(","));
            out.push(']');
        }
        out.push(']');
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Checkerboard filling: constant on diagonals, alternating `a`/`b` between
/// neighbouring diagonals and `b` on every corner.
pub fn checkerboard_fill(shape: &SkewShape, a: u32, b: u32) -> Result<Tableau> {
    if a < 1 || b < 2 {
        return Err(Error::InvalidFill { a, b });
    }
    let parity = shape
        .corner_parity()
        .ok_or_else(|| Error::NotCheckerboardable(shape.to_string()))?;
    Tableau::from_fn(shape.clone(), |c| {
        if diagonal(c).rem_euclid(2) as u32 == parity {
            b
        } else {
            a
        }
    })
}

/// The shape families that have closed forms or determinant formulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Stair { n: u32, mu: Partition },
    A(u32),
    B(u32),
    L(u32),
    LStar(u32),
    S(u32),
    SStar(u32),
    /// `(m, 1^n)`
    Hook { m: u32, n: u32 },
    /// `(m^{n+1})/((m-1)^n)`
    AntiHook { m: u32, n: u32 },
    Square(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: Family,
    pub a: u32,
    pub b: u32,
}

fn range_err(msg: impl Into<String>) -> Error {
    Error::IndexOutOfRange(msg.into())
}

impl Family {
    /// The underlying diagram; `None` for the empty `S(0)`/`S*(0)`.
    pub fn shape(&self) -> Result<Option<SkewShape>> {
        let p = |v: Vec<u32>| Partition::new(v);
        let stair = |n: i64| Partition::staircase(n);
        let shape = match *self {
            Family::A(n) => {
                if n < 1 {
                    return Err(range_err("A(n) needs n >= 1"));
                }
                let mut outer = vec![n + 1, n + 1];
                outer.extend((2..=n).rev());
                SkewShape::new(p(outer)?, stair(n as i64))?
            }
            Family::B(n) => SkewShape::new(stair(n as i64 + 1), stair(n as i64 - 1))?,
            Family::L(n) => {
                if n < 1 {
                    return Err(range_err("L(n) needs n >= 1"));
                }
                SkewShape::new(p(vec![2; 2 * n as usize])?, p(vec![1; 2 * n as usize - 1])?)?
            }
            Family::LStar(n) => {
                if n < 1 {
                    return Err(range_err("L*(n) needs n >= 1"));
                }
                SkewShape::new(p(vec![2 * n, 2 * n])?, p(vec![2 * n - 1])?)?
            }
            Family::S(n) => {
                if n == 0 {
                    return Ok(None);
                }
                let mut outer = vec![n];
                outer.extend((1..=n).rev());
                SkewShape::new(p(outer)?, stair(n as i64 - 1))?
            }
            Family::SStar(n) => {
                if n == 0 {
                    return Ok(None);
                }
                SkewShape::new(p((2..=n + 1).rev().collect())?, stair(n as i64 - 1))?
            }
            Family::Hook { m, n } => {
                if m < 1 {
                    return Err(range_err("hook (m,1^n) needs m >= 1"));
                }
                let mut outer = vec![m];
                outer.extend(std::iter::repeat(1).take(n as usize));
                SkewShape::straight(p(outer)?)?
            }
            Family::AntiHook { m, n } => {
                if m < 2 || n < 1 {
                    return Err(range_err("anti-hook needs m >= 2 and n >= 1"));
                }
                SkewShape::new(p(vec![m; n as usize + 1])?, p(vec![m - 1; n as usize])?)?
            }
            Family::Square(n) => {
                if n < 1 {
                    return Err(range_err("square needs n >= 1"));
                }
                SkewShape::straight(p(vec![n; n as usize])?)?
            }
            Family::Stair { n, ref mu } => {
                if n < 1 {
                    return Err(range_err("stair needs N >= 1"));
                }
                check_in_staircase(n, mu)?;
                SkewShape::new(stair(n as i64), mu.clone())?
            }
        };
        Ok(Some(shape))
    }
}

/// `μ ⊂ δ_N` in the strict sense, zero parts allowed.
pub fn check_in_staircase(n: u32, mu: &Partition) -> Result<()> {
    if mu.len() > n as usize {
        return Err(Error::InvalidMu(format!("{mu} has more than {n} parts")));
    }
    for j in 1..=mu.len() {
        if mu.part(j) + j as u32 > n {
            return Err(Error::InvalidMu(format!("{mu} is not inside δ_{n}")));
        }
    }
    Ok(())
}

/// Every partition `μ ⊂ δ_N`, the empty one included.
pub fn all_partitions_in_staircase(n: u32) -> Vec<Partition> {
    fn grow(n: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(parts.clone()).expect("nonincreasing by construction"));
        let j = parts.len() as u32 + 1;
        let cap = parts.last().copied().unwrap_or(u32::MAX).min(n.saturating_sub(j));
        for p in 1..=cap {
            parts.push(p);
            grow(n, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, &mut Vec::new(), &mut out);
    out
}

pub fn make_family(spec: &FamilySpec) -> Result<Tableau> {
    if spec.a < 1 || spec.b < 2 {
        return Err(Error::InvalidFill { a: spec.a, b: spec.b });
    }
    match spec.kind.shape()? {
        None => Ok(Tableau::empty()),
        Some(shape) => checkerboard_fill(&shape, spec.a, spec.b),
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Stair { n, mu } if mu.is_empty() => write!(f, "stair({n})"),
            Family::Stair { n, mu } => {
                let parts: Vec<String> = mu.parts().iter().map(u32::to_string).collect();
                write!(f, "stair({n};{})", parts.join(","))
            }
            Family::A(n) => write!(f, "A({n})"),
            Family::B(n) => write!(f, "B({n})"),
            Family::L(n) => write!(f, "L({n})"),
            Family::LStar(n) => write!(f, "Lstar({n})"),
            Family::S(n) => write!(f, "S({n})"),
            Family::SStar(n) => write!(f, "Sstar({n})"),
            Family::Hook { m, n } => write!(f, "hook({m},{n})"),
            Family::AntiHook { m, n } => write!(f, "antihook({m},{n})"),
            Family::Square(n) => write!(f, "square({n})"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checker({},{})", self.kind, self.a, self.b)
    }
}

/// Every valid skew diagram with at most `max_cells` cells.
///
/// Rows are built bottom-up; each new row may start anywhere from the start
/// of the row below up to one past its end, which keeps columns gap-free.
pub fn all_shapes(max_cells: usize) -> Vec<SkewShape> {
    fn grow(rows: &mut Vec<(u32, u32)>, used: usize, max: usize, out: &mut Vec<SkewShape>) {
        // rows are stored bottom-up as inclusive (start, end)
        let outer: Vec<u32> = rows.iter().rev().map(|r| r.1).collect();
        let inner: Vec<u32> = rows.iter().rev().map(|r| r.0 - 1).collect();
        if let Ok(shape) = Partition::new(outer)
            .and_then(|o| Partition::with_zeros(inner).and_then(|i| SkewShape::new(o, i)))
        {
            out.push(shape);
        }
        let &(s0, e0) = rows.last().unwrap();
        for s in s0..=e0 + 1 {
            for e in s.max(e0)..(s + (max - used) as u32) {
                let len = (e + 1 - s) as usize;
                if used + len > max {
                    break;
                }
                rows.push((s, e));
                grow(rows, used + len, max, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    for e in 1..=max_cells as u32 {
        let mut rows = vec![(1, e)];
        grow(&mut rows, e as usize, max_cells, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::parse_parts(outer, inner).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(shape(&[5, 4, 3], &[3, 1]).conjugate(), shape(&[3, 3, 3, 2, 1], &[2, 1, 1]));
        assert_eq!(shape(&[1], &[]).conjugate(), shape(&[1], &[]));
        assert_eq!(shape(&[3, 2, 1], &[]).conjugate(), shape(&[3, 2, 1], &[]));
    }

    #[test]
    fn corner_examples() {
        assert_eq!(shape(&[5, 4, 3], &[3, 1]).corners(), vec![(1, 5), (2, 4), (3, 3)]);
        assert_eq!(shape(&[1], &[]).corners(), vec![(1, 1)]);
        assert_eq!(shape(&[6], &[]).corners(), vec![(1, 6)]);
    }

    #[test]
    fn rejects_empty_rows_and_columns() {
        assert!(SkewShape::parse_parts(&[2, 2], &[2]).is_err());
        assert!(SkewShape::parse_parts(&[2, 2], &[1, 1]).is_err());
        // (3,1)/(2) leaves column 2 empty
        assert!(SkewShape::parse_parts(&[3, 1], &[2]).is_err());
        // touching at a corner is fine
        assert!(SkewShape::parse_parts(&[2, 1], &[1]).is_ok());
    }

    #[test]
    fn ribbons() {
        for n in 0..5 {
            let s = Family::B(n).shape().unwrap().unwrap();
            assert!(s.is_ribbon(), "B({n})");
        }
        assert!(!shape(&[2, 2], &[]).is_ribbon());
        // 2x2 block at rows 2-3, cols 2-3
        assert!(!shape(&[5, 4, 3], &[3, 1]).is_ribbon());
        assert!(!shape(&[2, 1], &[1]).is_ribbon());
    }

    #[test]
    fn checkerboard_examples() {
        let t = checkerboard_fill(&shape(&[2, 2], &[]), 1, 3).unwrap();
        assert_eq!(t.rows(), &[vec![3, 1], vec![1, 3]]);
        assert!(matches!(
            checkerboard_fill(&shape(&[3, 1], &[]), 1, 3),
            Err(Error::NotCheckerboardable(_))
        ));
        for m in 1..7 {
            for n in 1..7 {
                let ok = checkerboard_fill(&shape_hook(m, n), 1, 3).is_ok();
                // a single column has one corner
                assert_eq!(ok, m == 1 || m % 2 != n % 2, "hook ({m},1^{n})");
            }
        }
        assert!(matches!(checkerboard_fill(&shape(&[1], &[]), 1, 1), Err(Error::InvalidFill { .. })));
    }

    fn shape_hook(m: u32, n: u32) -> SkewShape {
        Family::Hook { m, n }.shape().unwrap().unwrap()
    }

    #[test]
    fn checkerboard_is_unique_diagonal_fill() {
        // brute force over all diagonal-constant fills with entries in {1,3}
        for s in all_shapes(7) {
            let fill = checkerboard_fill(&s, 1, 3);
            let diags: BTreeSet<i64> = s.cells().into_iter().map(diagonal).collect();
            let diags: Vec<i64> = diags.into_iter().collect();
            let mut found = Vec::new();
            for mask in 0u32..(1 << diags.len()) {
                let value = |d: i64| {
                    let idx = diags.iter().position(|&x| x == d).unwrap();
                    if mask >> idx & 1 == 1 {
                        3
                    } else {
                        1
                    }
                };
                let alternating = diags.windows(2).all(|w| w[1] != w[0] + 1 || value(w[0]) != value(w[1]));
                let t = Tableau::from_fn(s.clone(), |c| value(diagonal(c))).unwrap();
                let corners_b = s.corners().into_iter().all(|c| t.entry(c) == Some(3));
                if alternating && corners_b {
                    found.push(t);
                }
            }
            match fill {
                Ok(t) => {
                    assert!(t.is_admissible() && t.is_diagonal_constant());
                    // gaps between occupied diagonals can only occur for
                    // disconnected shapes; the parity rule still pins them
                    assert!(found.contains(&t), "{s}");
                    if s.is_connected() {
                        assert_eq!(found, vec![t], "{s}");
                    }
                }
                Err(_) => assert!(s.is_connected() == false || found.is_empty(), "{s}"),
            }
        }
    }

    #[test]
    fn family_shapes() {
        let spec = |kind| FamilySpec { kind, a: 1, b: 3 };
        let b0 = make_family(&spec(Family::B(0))).unwrap();
        assert_eq!(b0.rows(), &[vec![3]]);
        let a1 = make_family(&spec(Family::A(1))).unwrap();
        assert_eq!(a1.shape(), &shape(&[2, 2], &[1]));
        assert_eq!(a1.rows(), &[vec![1], vec![1, 3]]);
        let st = make_family(&spec(Family::Stair {
            n: 5,
            mu: Partition::new(vec![2, 2, 1]).unwrap(),
        }))
        .unwrap();
        assert_eq!(st.to_literal(), "[[_,_,3,1,3],[_,_,1,3],[_,1,3],[1,3],[3]]");
        let l2 = make_family(&spec(Family::L(2))).unwrap();
        assert_eq!(l2.to_literal(), "[[_,1],[_,3],[_,1],[1,3]]");
        let ls2 = make_family(&spec(Family::LStar(2))).unwrap();
        assert_eq!(ls2.to_literal(), "[[_,_,_,1],[1,3,1,3]]");
        let s2 = make_family(&spec(Family::S(2))).unwrap();
        assert_eq!(s2.to_literal(), "[[_,1],[1,3],[3]]");
        let ss2 = make_family(&spec(Family::SStar(2))).unwrap();
        assert_eq!(ss2.to_literal(), "[[_,1,3],[1,3]]");
        assert!(make_family(&spec(Family::S(0))).unwrap().is_empty());
        let ah = make_family(&spec(Family::AntiHook { m: 3, n: 4 })).unwrap();
        assert_eq!(ah.to_literal(), "[[_,_,3],[_,_,1],[_,_,3],[_,_,1],[3,1,3]]");
        assert!(make_family(&spec(Family::A(0))).is_err());
        assert!(make_family(&spec(Family::Hook { m: 3, n: 1 })).is_err());
        assert!(matches!(
            make_family(&spec(Family::Stair { n: 3, mu: Partition::new(vec![3]).unwrap() })),
            Err(Error::InvalidMu(_))
        ));
    }

    #[test]
    fn gluing_example() {
        let t1 = Tableau::from_fn(shape(&[5, 4, 3], &[3, 1]), |(i, j)| 10 * i + j).unwrap();
        let t2 = Tableau::from_fn(shape(&[3, 3, 3, 2, 1], &[2, 1, 1]), |(i, j)| 100 + 10 * i + j).unwrap();
        let h = t1.glue_h(&t2);
        assert_eq!(h.shape(), &shape(&[8, 8, 8, 7, 6, 4, 3], &[7, 6, 6, 5, 3, 1]));
        assert_eq!(h.entry((5, 6)), Some(151));
        assert_eq!(h.entry((5, 4)), Some(14));
        assert_eq!(h.entry((1, 8)), Some(113));
        let v = t1.glue_v(&t2);
        assert_eq!(v.shape(), &shape(&[7, 7, 7, 6, 5, 5, 4, 3], &[6, 5, 5, 4, 4, 3, 1]));
        assert_eq!(v.entry((5, 5)), Some(151));
        assert_eq!(v.entry((6, 5)), Some(15));
        assert_eq!(v.num_cells(), t1.num_cells() + t2.num_cells());

        let a = Tableau::row(&[2]).unwrap();
        let b = Tableau::row(&[5]).unwrap();
        assert_eq!(a.glue_h(&b).rows(), &[vec![2, 5]]);
        assert_eq!(a.glue_v(&b).rows(), &[vec![5], vec![2]]);
    }

    #[test]
    fn literal_form() {
        let t = Tableau::new(shape(&[2, 2], &[1]), vec![vec![1], vec![1, 3]]).unwrap();
        assert_eq!(t.to_literal(), "[[_,1],[1,3]]");
    }

    #[test]
    fn shape_enumeration_counts() {
        // connected skew shapes (parallelogram polyominoes) by area: 1, 2, 4, 9, 20
        let shapes = all_shapes(5);
        let connected: Vec<usize> = (1..=5)
            .map(|n| shapes.iter().filter(|s| s.num_cells() == n && s.is_connected()).count())
            .collect();
        assert_eq!(connected, vec![1, 2, 4, 9, 20]);
        let unique: BTreeSet<_> = shapes.iter().collect();
        assert_eq!(unique.len(), shapes.len());
    }
}
