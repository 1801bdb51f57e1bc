//! Formal polynomials with rational coefficients in zeta-type symbols.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::Scalar;
use crate::numerics::pipoly;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PrimKind {
    A,
    B,
    L,
    LStar,
    S,
    SStar,
}

impl PrimKind {
    pub fn name(self) -> &'static str {
        match self {
            PrimKind::A => "A",
            PrimKind::B => "B",
            PrimKind::L => "L",
            PrimKind::LStar => "L*",
            PrimKind::S => "S",
            PrimKind::SStar => "S*",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Pi,
    /// Single zeta value; even arguments are normally rewritten in powers of π.
    Zeta(u32),
    /// Multiple zeta (-star) value; the first entry carries the smallest variable.
    Mzv { star: bool, index: Vec<u32> },
    /// `ζ({a,b}^n)`, or `ζ(b,{a,b}^n)` when `lead_b` is set.
    Chain {
        star: bool,
        lead_b: bool,
        a: u32,
        b: u32,
        n: u32,
    },
    /// `ζ({s}^n)`.
    Repeat { star: bool, s: u32, n: u32 },
    /// Checkerboard primitive ribbon.
    Prim { kind: PrimKind, a: u32, b: u32, n: u32 },
}

impl Symbol {
    /// The index this symbol stands for, when it is a plain (star) MZV.
    pub fn as_index(&self) -> Option<(bool, Vec<u32>)> {
        match *self {
            Symbol::Zeta(s) => Some((false, vec![s])),
            Symbol::Mzv { star, ref index } => Some((star, index.clone())),
            Symbol::Chain {
                star,
                lead_b,
                a,
                b,
                n,
            } => {
                let mut index = Vec::with_capacity(2 * n as usize + 1);
                if lead_b {
                    index.push(b);
                }
                for _ in 0..n {
                    index.extend([a, b]);
                }
                Some((star, index))
            }
            Symbol::Repeat { star, s, n } => Some((star, vec![s; n as usize])),
            _ => None,
        }
    }

    pub fn weight(&self) -> u32 {
        match self {
            Symbol::Pi => 1,
            Symbol::Prim { kind, a, b, n } => {
                let (na, nb) = match kind {
                    PrimKind::A => (n + 1, *n),
                    PrimKind::B => (*n, n + 1),
                    PrimKind::L | PrimKind::LStar | PrimKind::S | PrimKind::SStar => (*n, *n),
                };
                na * a + nb * b
            }
            other => other.as_index().map(|(_, ix)| ix.iter().sum()).unwrap_or(0),
        }
    }
}

fn fmt_index(f: &mut fmt::Formatter<'_>, star: bool, body: &str) -> fmt::Result {
    write!(f, "ζ{}({body})", if star { "*" } else { "" })
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Pi => write!(f, "π"),
            Symbol::Zeta(s) => write!(f, "ζ({s})"),
            Symbol::Mzv { star, index } => {
                let body: Vec<String> = index.iter().map(u32::to_string).collect();
                fmt_index(f, *star, &body.join(","))
            }
            Symbol::Chain {
                star,
                lead_b,
                a,
                b,
                n,
            } => {
                let body = if *lead_b {
                    format!("{b},{{{a},{b}}}^{n}")
                } else {
                    format!("{{{a},{b}}}^{n}")
                };
                fmt_index(f, *star, &body)
            }
            Symbol::Repeat { star, s, n } => fmt_index(f, *star, &format!("{{{s}}}^{n}")),
            Symbol::Prim { kind, a, b, n } => write!(f, "{}_{{{a},{b}}}({n})", kind.name()),
        }
    }
}

pub type Monomial = BTreeMap<Symbol, u32>;

/// Polynomial in [`Symbol`]s with rational coefficients, kept in canonical
/// form (no zero coefficients, no zero exponents).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZetaExpr {
    terms: BTreeMap<Monomial, BigRational>,
}

impl ZetaExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial::new(), q);
        e
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut m = Monomial::new();
        m.insert(s, 1);
        let mut e = Self::zero();
        e.add_term(m, BigRational::one());
        e
    }

    pub fn pi_pow(k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        let mut m = Monomial::new();
        m.insert(Symbol::Pi, k);
        let mut e = Self::zero();
        e.add_term(m, BigRational::one());
        e
    }

    /// `ζ(s)`: even arguments become rational multiples of `π^s`,
    /// arguments below 2 (as produced by shifted Hankel entries) vanish.
    pub fn zeta(s: i64) -> Self {
        if s < 2 {
            return Self::zero();
        }
        let s = s as u32;
        if s % 2 == 0 {
            let p = pipoly::zeta_even(s);
            Self::pi_pow(p.exp).scale_by(&p.coeff)
        } else {
            Self::symbol(Symbol::Zeta(s))
        }
    }

    /// A multiple zeta (-star) value kept as an opaque symbol; depth one is
    /// stored without the star.
    pub fn mzv(star: bool, index: Vec<u32>) -> Self {
        if index.is_empty() {
            return Self::one();
        }
        let star = star && index.len() > 1;
        Self::symbol(Symbol::Mzv { star, index })
    }

    pub fn chain(star: bool, lead_b: bool, a: u32, b: u32, n: i64) -> Self {
        if n < 0 {
            return Self::zero();
        }
        if n == 0 && !lead_b {
            return Self::one();
        }
        let star = star && !(n == 0 && lead_b);
        Self::symbol(Symbol::Chain {
            star,
            lead_b,
            a,
            b,
            n: n as u32,
        })
    }

    pub fn repeat(star: bool, s: u32, n: i64) -> Self {
        if n < 0 {
            return Self::zero();
        }
        if n == 0 {
            return Self::one();
        }
        if n == 1 {
            return Self::zeta(s as i64);
        }
        Self::symbol(Symbol::Repeat {
            star: star && n > 1,
            s,
            n: n as u32,
        })
    }

    /// Primitive ribbons with the out-of-range conventions
    /// `A(n ≤ 0) = 0`, `B(n < 0) = 0`, `S(0) = S*(0) = 1`.
    pub fn prim(kind: PrimKind, a: u32, b: u32, n: i64) -> Self {
        match kind {
            PrimKind::A | PrimKind::L | PrimKind::LStar if n <= 0 => return Self::zero(),
            PrimKind::B if n < 0 => return Self::zero(),
            PrimKind::S | PrimKind::SStar if n < 0 => return Self::zero(),
            PrimKind::S | PrimKind::SStar if n == 0 => return Self::one(),
            _ => {}
        }
        Self::symbol(Symbol::Prim {
            kind,
            a,
            b,
            n: n as u32,
        })
    }

    fn add_term(&mut self, m: Monomial, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the expression is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, q) = self.terms.iter().next().unwrap();
                m.is_empty().then(|| q.clone())
            }
            _ => None,
        }
    }

    pub fn scale_by(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self.terms.keys().flat_map(|m| m.keys().cloned()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Replaces symbols by expressions; `None` keeps the symbol.
    pub fn substitute(&self, f: &mut dyn FnMut(&Symbol) -> Option<ZetaExpr>) -> ZetaExpr {
        let mut cache: HashMap<Symbol, Option<ZetaExpr>> = HashMap::new();
        let mut out = ZetaExpr::zero();
        for (m, q) in &self.terms {
            let mut term = ZetaExpr::constant(q.clone());
            for (s, &e) in m {
                let rep = cache.entry(s.clone()).or_insert_with(|| f(s)).clone();
                let base = rep.unwrap_or_else(|| ZetaExpr::symbol(s.clone()));
                term = &term * &base.pow(e);
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates in any ring, given values for the symbols.
    pub fn eval<S: Scalar>(&self, proto: &S, f: &mut dyn FnMut(&Symbol) -> Result<S>) -> Result<S> {
        let mut values: HashMap<Symbol, S> = HashMap::new();
        let mut acc = proto.zero_like();
        for (m, q) in &self.terms {
            let mut term = proto.from_rational_like(q);
            for (s, &e) in m {
                if !values.contains_key(s) {
                    let v = f(s)?;
                    values.insert(s.clone(), v);
                }
                term = term.times(&values[s].pow_u(e));
            }
            acc = acc.plus(&term);
        }
        Ok(acc)
    }

    /// Canonical JSON: monomials in symbol order, coefficients as strings.
    pub fn to_canonical_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, q)| {
                let factors: Vec<serde_json::Value> = m
                    .iter()
                    .map(|(s, e)| serde_json::json!({ "symbol": s.to_string(), "power": e }))
                    .collect();
                serde_json::json!({ "coeff": q.to_string(), "factors": factors })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl fmt::Display for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            let abs = q.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts = Vec::new();
            if m.is_empty() || !abs.is_one() {
                parts.push(abs.to_string());
            }
            for (s, e) in m {
                if *e == 1 {
                    parts.push(s.to_string());
                } else {
                    parts.push(format!("{s}^{e}"));
                }
            }
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

impl Add for &ZetaExpr {
    type Output = ZetaExpr;
    fn add(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.add_term(m.clone(), q.clone());
        }
        out
    }
}

impl Sub for &ZetaExpr {
    type Output = ZetaExpr;
    fn sub(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.add_term(m.clone(), -q.clone());
        }
        out
    }
}

impl Mul for &ZetaExpr {
    type Output = ZetaExpr;
    fn mul(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = ZetaExpr::zero();
        for (m1, q1) in &self.terms {
            for (m2, q2) in &rhs.terms {
                let mut m = m1.clone();
                for (s, e) in m2 {
                    *m.entry(s.clone()).or_insert(0) += e;
                }
                out.add_term(m, q1 * q2);
            }
        }
        out
    }
}

impl Neg for &ZetaExpr {
    type Output = ZetaExpr;
    fn neg(self) -> ZetaExpr {
        self.scale_by(&-BigRational::one())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ZetaExpr {
            type Output = ZetaExpr;
            fn $m(self, rhs: ZetaExpr) -> ZetaExpr {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for ZetaExpr {
    type Output = ZetaExpr;
    fn neg(self) -> ZetaExpr {
        -&self
    }
}

impl Scalar for ZetaExpr {
    fn zero_like(&self) -> Self {
        ZetaExpr::zero()
    }
    fn one_like(&self) -> Self {
        ZetaExpr::one()
    }
    fn from_rational_like(&self, q: &BigRational) -> Self {
        ZetaExpr::constant(q.clone())
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
        self.scale_by(q)
    }
}
