//! Named identity suites and the table of worked example values.
//!
//! A suite is a list of items, each a closure producing one
//! [`IdentityReport`]. Items run on the rayon pool; reports come back sorted
//! by id so output does not depend on completion order.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{det_laplace, rat};
use crate::closed_forms::{
    antihook_case, antihook_eval, antihook_shape, hook_case, hook_eval, hook_shape, l_from_recursion, lead_b_chain,
    mzv_relation_check, primitive_13, primitive_rec, reduce_13, s_general, special_tableau, special_values,
    sstar_general, sstar_genseries, stair_data, stair_eval, stair_hankel, stair_hankel_13, Prim13, RecVariant,
};
use crate::exact::{
    check_gluing, check_stair_exact, eval_truncated, trunc_jacobi_trudi, trunc_smzv, Cutoff, JtVariant,
};
use crate::expr::{PrimKind, ZetaExpr};
use crate::numerics::hpreal::HPReal;
use crate::numerics::numeric::{eval_numeric, mzsv_numeric, mzv_numeric, smzv_numeric, NumericConfig, TailEstimate};
use crate::numerics::pipoly::{repeat_even, zeta_13_closed};
use crate::report::{IdentityReport, Status};
use crate::shapes::{
    all_partitions_in_staircase, all_shapes, checkerboard_fill, make_family, Family, FamilySpec, Partition,
    SkewShape, Tableau,
};
use crate::{Error, Result};

pub const SUITES: [&str; 13] = [
    "gluing",
    "jacobi-trudi",
    "recursions",
    "genseries",
    "thm34",
    "thm35",
    "cor36",
    "hooks",
    "antihooks",
    "stairs",
    "hankel13",
    "specials",
    "mzv-relation",
];

/// The `(a,b)` fills used by the exact suites.
pub const FILLS: [(u32, u32); 4] = [(1, 3), (2, 3), (1, 2), (2, 2)];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Cutoff of the exact gluing checks.
    pub gluing_cutoff: u64,
    pub gluing_pairs: usize,
    /// Cutoff of the other exact checks.
    pub exact_cutoff: u64,
    /// Largest diagram in the exhaustive Jacobi–Trudi check.
    pub max_cells: usize,
    pub numeric: NumericConfig,
    /// Tolerance for numeric sums against closed forms.
    pub numeric_tol: f64,
    /// Tolerance for closed forms against displayed values.
    pub display_tol: f64,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            gluing_cutoff: 15,
            gluing_pairs: 50,
            exact_cutoff: 12,
            max_cells: 9,
            numeric: NumericConfig::default(),
            numeric_tol: 1e-6,
            display_tol: 1e-30,
            seed: 20_240_601,
        }
    }
}

impl SuiteConfig {
    fn exact(&self) -> Result<Cutoff> {
        Cutoff::new(self.exact_cutoff)
    }

    fn bits(&self) -> u32 {
        self.numeric.bits() + 32
    }

    fn tol(&self, x: f64) -> HPReal {
        let e = x.log10().round() as i32;
        HPReal::pow10(e, self.bits())
    }
}

type ItemFn<'a> = Box<dyn Fn() -> Result<IdentityReport> + Send + Sync + 'a>;

struct Item<'a> {
    suite: &'static str,
    id: String,
    run: ItemFn<'a>,
}

fn item<'a>(suite: &'static str, id: impl Into<String>, run: impl Fn() -> Result<IdentityReport> + Send + Sync + 'a) -> Item<'a> {
    Item {
        suite,
        id: id.into(),
        run: Box::new(run),
    }
}

fn run_items(items: Vec<Item<'_>>) -> Vec<IdentityReport> {
    let mut out: Vec<IdentityReport> = items
        .par_iter()
        .map(|it| {
            let start = Instant::now();
            let r = match (it.run)() {
                Ok(mut r) => {
                    r.suite = it.suite.to_string();
                    r.id = it.id.clone();
                    r
                }
                Err(e) => IdentityReport::failed(it.suite, it.id.clone(), e.to_string()),
            };
            r.timed(start.elapsed())
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Runs one named suite.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    let items = match name {
        "gluing" => gluing_items(cfg)?,
        "jacobi-trudi" => jacobi_trudi_items(cfg),
        "recursions" => recursion_items(cfg),
        "genseries" => genseries_items(cfg),
        "thm34" => thm34_items(cfg),
        "thm35" => thm35_items(cfg),
        "cor36" => cor36_items(cfg),
        "hooks" => hook_items(cfg),
        "antihooks" => antihook_items(cfg),
        "stairs" => stair_items(cfg),
        "hankel13" => hankel_items(cfg),
        "specials" => special_items(cfg),
        "mzv-relation" => relation_items(cfg),
        _ => return Err(Error::UnknownName(format!("suite {name}"))),
    };
    Ok(run_items(items))
}

fn fam(kind: Family, a: u32, b: u32) -> Result<Tableau> {
    make_family(&FamilySpec { kind, a, b })
}

fn z(s: i64) -> ZetaExpr {
    ZetaExpr::zeta(s)
}

fn zprod(c: BigRational, args: &[i64]) -> ZetaExpr {
    args.iter().fold(ZetaExpr::constant(c), |acc, &s| &acc * &z(s))
}

fn lin(terms: &[(i64, i64, &[i64])]) -> ZetaExpr {
    terms
        .iter()
        .fold(ZetaExpr::zero(), |acc, &(n, d, args)| &acc + &zprod(rat(n, d), args))
}

/// Numeric comparison of two symbolic expressions free of summation leaves.
fn display_check(suite: &str, id: &str, ours: &ZetaExpr, shown: &ZetaExpr, cfg: &SuiteConfig) -> Result<IdentityReport> {
    let a = eval_numeric(ours, &cfg.numeric)?;
    let b = eval_numeric(shown, &cfg.numeric)?;
    let err = &a.error_bound + &b.error_bound;
    Ok(IdentityReport::numeric(suite, id, &a.value, &b.value, &err, &cfg.tol(cfg.display_tol)))
}

fn numeric_check(suite: &str, id: &str, est: &TailEstimate, closed: &ZetaExpr, cfg: &SuiteConfig) -> Result<IdentityReport> {
    let c = eval_numeric(closed, &cfg.numeric)?;
    Ok(IdentityReport::within_bound(suite, id, est, &c.value, &cfg.tol(cfg.numeric_tol)))
}

// ---- gluing ----------------------------------------------------------------

/// Random tableau with at most `max_cells` cells and entries in `1..=max_entry`.
pub fn random_tableau(rng: &mut impl Rng, shapes: &[SkewShape], max_entry: u32) -> Tableau {
    let shape = shapes[rng.gen_range(0..shapes.len())].clone();
    Tableau::from_fn(shape, |_| rng.gen_range(1..=max_entry)).expect("entries are positive")
}

fn gluing_items(cfg: &SuiteConfig) -> Result<Vec<Item<'_>>> {
    let m = Cutoff::new(cfg.gluing_cutoff)?;
    let shapes = all_shapes(6);
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut items = Vec::new();
    for k in 0..cfg.gluing_pairs {
        let t1 = random_tableau(&mut rng, &shapes, 4);
        let t2 = random_tableau(&mut rng, &shapes, 4);
        let id = format!("pair{k:03} {} * {}", t1.to_literal(), t2.to_literal());
        items.push(item("gluing", id, move || check_gluing(&t1, &t2, m)));
    }
    Ok(items)
}

// ---- Jacobi–Trudi ----------------------------------------------------------

/// The worked shapes `(5,4,3)/(3,1)`, `(3,3,3,2,1)/(2,1,1)` and their gluings.
pub fn example_shapes() -> Vec<SkewShape> {
    let p = |v: Vec<u32>| Partition::new(v).unwrap();
    vec![
        SkewShape::new(p(vec![5, 4, 3]), p(vec![3, 1])).unwrap(),
        SkewShape::new(p(vec![3, 3, 3, 2, 1]), p(vec![2, 1, 1])).unwrap(),
        SkewShape::new(p(vec![2, 2]), Partition::empty()).unwrap(),
        SkewShape::new(p(vec![3, 3, 2]), p(vec![1])).unwrap(),
    ]
}

fn jacobi_trudi_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut shapes: Vec<SkewShape> = all_shapes(cfg.max_cells)
        .into_iter()
        .filter(SkewShape::is_checkerboardable)
        .collect();
    shapes.extend(example_shapes());
    let mut items = Vec::new();
    for shape in shapes {
        for (a, b) in FILLS {
            let id = format!("{shape} checker({a},{b})");
            let shape = shape.clone();
            items.push(item("jacobi-trudi", id, move || {
                let m = cfg.exact()?;
                let t = checkerboard_fill(&shape, a, b)?;
                let direct = trunc_smzv(&t, m)?;
                let rows = trunc_jacobi_trudi(&t, m, JtVariant::Rows)?;
                let cols = trunc_jacobi_trudi(&t, m, JtVariant::Cols)?;
                let r = IdentityReport::exact("jacobi-trudi", "", &rows, &direct);
                Ok(if cols != direct {
                    IdentityReport::exact("jacobi-trudi", "", &cols, &direct).with_detail("column variant differs")
                } else {
                    r
                })
            }));
        }
    }
    items
}

// ---- recursions and generating series -------------------------------------

fn recursion_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for (a, b) in FILLS {
        for variant in [RecVariant::Zeta, RecVariant::ZetaStar] {
            for (kind, lo) in [(PrimKind::A, 2u32), (PrimKind::B, 1)] {
                for n in lo..=5 {
                    let id = format!("{}({n}) {variant:?} ({a},{b})", kind.name());
                    items.push(item("recursions", id, move || {
                        let m = cfg.exact()?;
                        let e = primitive_rec(kind, variant, a, b, n)?;
                        let lhs = eval_truncated(&e, m)?;
                        let rhs = eval_truncated(&ZetaExpr::prim(kind, a, b, n as i64), m)?;
                        Ok(IdentityReport::exact("recursions", "", &lhs, &rhs))
                    }));
                }
            }
        }
    }
    items
}

fn genseries_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for (a, b) in FILLS {
        for n in 1..=5u32 {
            let s_kind = |star| if star { PrimKind::SStar } else { PrimKind::S };
            for star in [false, true] {
                let id = format!("series {} n={n} ({a},{b})", if star { "S*" } else { "S" });
                items.push(item("genseries", id, move || {
                    let m = cfg.exact()?;
                    let mut acc = ZetaExpr::zero();
                    for k in 0..=n as i64 {
                        let t = &ZetaExpr::prim(s_kind(star), a, b, k) * &ZetaExpr::chain(star, false, a, b, n as i64 - k);
                        acc = if (n as i64 - k) % 2 == 0 { &acc + &t } else { &acc - &t };
                    }
                    let v = eval_truncated(&acc, m)?;
                    Ok(IdentityReport::exact("genseries", "", &v, &BigRational::zero()))
                }));
            }
            let id = format!("S({n}) reciprocal ({a},{b})");
            items.push(item("genseries", id, move || {
                let m = cfg.exact()?;
                let lhs = eval_truncated(&s_general(a, b, n), m)?;
                let rhs = eval_truncated(&ZetaExpr::prim(PrimKind::S, a, b, n as i64), m)?;
                Ok(IdentityReport::exact("genseries", "", &lhs, &rhs))
            }));
            let id = format!("S*({n}) reciprocal ({a},{b})");
            items.push(item("genseries", id, move || {
                let m = cfg.exact()?;
                let lhs = eval_truncated(&sstar_genseries(a, b, n), m)?;
                let rhs = eval_truncated(&ZetaExpr::prim(PrimKind::SStar, a, b, n as i64), m)?;
                Ok(IdentityReport::exact("genseries", "", &lhs, &rhs))
            }));
            // S*(n) = Σ S(k) ζ({a+b}^{n-k}) holds in the limit only;
            // the (1,2) leaves have log M / M tails
            if n <= 2 && (a, b) != (1, 2) {
                let id = format!("S*({n}) from S ({a},{b}) numeric");
                items.push(item("genseries", id, move || {
                    let t = fam(Family::SStar(n), a, b)?;
                    let est = smzv_numeric(&t, &cfg.numeric)?;
                    let e = sstar_general(a, b, n);
                    numeric_check("genseries", "", &est, &e, cfg)
                }));
            }
        }
    }
    items
}

// ---- (1,3) closed forms ------------------------------------------------------

fn closed_vs_numeric<'a>(suite: &'static str, kind: Family, closed: Prim13, n: u32, cfg: &'a SuiteConfig) -> Item<'a> {
    let id = format!("{kind} (1,3)");
    item(suite, id, move || {
        let est = smzv_numeric(&fam(kind.clone(), 1, 3)?, &cfg.numeric)?;
        numeric_check(suite, "", &est, &primitive_13(closed, n)?, cfg)
    })
}

fn thm34_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for n in 1..=2 {
        items.push(closed_vs_numeric("thm34", Family::S(n), Prim13::S, n, cfg));
        items.push(closed_vs_numeric("thm34", Family::SStar(n), Prim13::SStar, n, cfg));
    }
    for n in 0..=8u32 {
        items.push(item("thm34", format!("4^n zeta({{1,3}}^n) = zeta({{4}}^n) n={n}"), move || {
            let (e, _) = repeat_even(4, n as usize);
            let c = zeta_13_closed(n);
            let lhs = c.coeff.clone() * BigRational::from_integer(BigInt::from(4u8).pow(n));
            let ok = c.exp == e.exp;
            let r = IdentityReport::exact("thm34", "", &lhs, &e.coeff);
            Ok(if ok { r } else { r.with_status(Status::Fail).with_detail("π exponents differ") })
        }));
    }
    items
}

fn thm35_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for n in 1..=2 {
        items.push(closed_vs_numeric("thm35", Family::A(n), Prim13::A, n, cfg));
    }
    for n in 0..=2 {
        items.push(closed_vs_numeric("thm35", Family::B(n), Prim13::B, n, cfg));
    }
    for n in 2..=5u32 {
        for v in [RecVariant::Zeta, RecVariant::ZetaStar] {
            items.push(item("thm35", format!("A({n}) via {v:?} recursion"), move || {
                let e = reduce_13(&primitive_rec(PrimKind::A, v, 1, 3, n)?)?;
                Ok(IdentityReport::exact("thm35", "", &e, &primitive_13(Prim13::A, n)?))
            }));
        }
    }
    for n in 1..=5u32 {
        for v in [RecVariant::Zeta, RecVariant::ZetaStar] {
            items.push(item("thm35", format!("B({n}) via {v:?} recursion"), move || {
                let e = reduce_13(&primitive_rec(PrimKind::B, v, 1, 3, n)?)?;
                Ok(IdentityReport::exact("thm35", "", &e, &primitive_13(Prim13::B, n)?))
            }));
        }
    }
    items
}

fn chain_13(lead: bool, n: u32) -> Vec<u32> {
    let mut k = if lead { vec![3] } else { Vec::new() };
    for _ in 0..n {
        k.extend([1, 3]);
    }
    k
}

fn cor36_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for n in 1..=4u32 {
        for (v, kind) in [(RecVariant::Zeta, Prim13::L), (RecVariant::ZetaStar, Prim13::LStar)] {
            items.push(item("cor36", format!("{kind:?}({n}) closed form"), move || {
                let e = reduce_13(&l_from_recursion(v, 1, 3, n)?)?;
                display_check("cor36", "", &e, &primitive_13(kind, n)?, cfg)
            }));
        }
    }
    for n in 0..=4u32 {
        for (star, kind) in [(false, Prim13::Y), (true, Prim13::YStar)] {
            items.push(item("cor36", format!("{kind:?}({n}) closed form"), move || {
                let e = reduce_13(&lead_b_chain(star, 1, 3, n))?;
                display_check("cor36", "", &e, &primitive_13(kind, n)?, cfg)
            }));
        }
    }
    for n in 1..=2u32 {
        items.push(closed_vs_numeric("cor36", Family::L(n), Prim13::L, n, cfg));
        items.push(closed_vs_numeric("cor36", Family::LStar(n), Prim13::LStar, n, cfg));
        items.push(item("cor36", format!("Y({n}) numeric"), move || {
            let est = mzv_numeric(&chain_13(true, n), &cfg.numeric)?;
            numeric_check("cor36", "", &est, &primitive_13(Prim13::Y, n)?, cfg)
        }));
        items.push(item("cor36", format!("Ystar({n}) numeric"), move || {
            let est = mzsv_numeric(&chain_13(true, n), &cfg.numeric)?;
            numeric_check("cor36", "", &est, &primitive_13(Prim13::YStar, n)?, cfg)
        }));
    }
    items
}

// ---- hooks and anti-hooks ----------------------------------------------------

pub fn hook_displays() -> Vec<((u32, u32), ZetaExpr)> {
    vec![
        ((4, 3), lin(&[(5, 64, &[7, 4, 4]), (-3, 32, &[11, 4]), (1, 64, &[15])])),
        (
            (3, 4),
            lin(&[(5, 896, &[3, 4, 4, 4]), (-71, 896, &[7, 4, 4]), (3, 32, &[11, 4]), (-1, 64, &[15])]),
        ),
    ]
}

pub fn antihook_displays() -> Vec<((u32, u32), ZetaExpr)> {
    vec![
        ((4, 2), lin(&[(5, 8, &[3, 4, 5]), (-1, 8, &[3, 9]), (-13245, 34496, &[4, 4, 4])])),
        ((4, 3), lin(&[(5, 32, &[4, 4, 5]), (-3, 16, &[4, 9]), (1, 32, &[13])])),
        ((3, 3), lin(&[(1, 8, &[3, 4, 5]), (-1, 8, &[3, 9]), (-493, 448448, &[4, 4, 4])])),
        (
            (3, 4),
            lin(&[
                (1, 8, &[3, 3, 4, 5]),
                (7279, 81536, &[3, 4, 4, 4]),
                (-1, 8, &[3, 5, 7]),
                (13, 896, &[4, 4, 7]),
                (-1, 8, &[3, 3, 9]),
                (-1, 64, &[15]),
            ]),
        ),
    ]
}

fn hook_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for ((m, n), shown) in hook_displays() {
        items.push(item("hooks", format!("({m},1^{n}) (1,3) display"), move || {
            let (c, p, q) = hook_case(m, n)?;
            let e = reduce_13(&hook_eval(c, p, q, 1, 3)?)?;
            display_check("hooks", "", &e, &shown, cfg)
        }));
        items.push(item("hooks", format!("({m},1^{n}) (1,3) numeric"), move || {
            let (c, p, q) = hook_case(m, n)?;
            let t = checkerboard_fill(&hook_shape(c, p, q)?, 1, 3)?;
            let est = smzv_numeric(&t, &cfg.numeric)?;
            numeric_check("hooks", "", &est, &reduce_13(&hook_eval(c, p, q, 1, 3)?)?, cfg)
        }));
    }
    for m in 1..=5u32 {
        for n in 0..=4u32 {
            if hook_case(m, n).is_err() || m + n > 7 {
                continue;
            }
            for (a, b) in FILLS {
                items.push(item("hooks", format!("({m},1^{n}) ({a},{b}) truncated"), move || {
                    let (c, p, q) = hook_case(m, n)?;
                    let mc = cfg.exact()?;
                    let t = checkerboard_fill(&hook_shape(c, p, q)?, a, b)?;
                    let lhs = eval_truncated(&hook_eval(c, p, q, a, b)?, mc)?;
                    Ok(IdentityReport::exact("hooks", "", &lhs, &trunc_smzv(&t, mc)?))
                }));
            }
        }
    }
    items
}

fn antihook_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for ((m, n), shown) in antihook_displays() {
        let label = format!("({m}^{})/({}^{n})", n + 1, m - 1);
        let shown2 = shown.clone();
        items.push(item("antihooks", format!("{label} (1,3) display"), move || {
            let (c, p, q) = antihook_case(m, n)?;
            let e = reduce_13(&antihook_eval(c, p, q, 1, 3)?)?;
            display_check("antihooks", "", &e, &shown2, cfg)
        }));
        items.push(item("antihooks", format!("{label} (1,3) numeric"), move || {
            let (c, p, q) = antihook_case(m, n)?;
            let t = checkerboard_fill(&antihook_shape(c, p, q)?, 1, 3)?;
            let est = smzv_numeric(&t, &cfg.numeric)?;
            numeric_check("antihooks", "", &est, &shown, cfg)
        }));
    }
    for m in 1..=4u32 {
        for n in 0..=4u32 {
            if m + n > 7 {
                continue;
            }
            for (a, b) in FILLS {
                items.push(item("antihooks", format!("({m}^{})/({}^{n}) ({a},{b}) truncated", n + 1, m - 1), move || {
                    let (c, p, q) = antihook_case(m, n)?;
                    let mc = cfg.exact()?;
                    let t = checkerboard_fill(&antihook_shape(c, p, q)?, a, b)?;
                    let lhs = eval_truncated(&antihook_eval(c, p, q, a, b)?, mc)?;
                    Ok(IdentityReport::exact("antihooks", "", &lhs, &trunc_smzv(&t, mc)?)
                        .with_detail(format!("case {c:?} p={p} q={q}")))
                }));
            }
        }
    }
    items
}

// ---- stairs and Hankel forms -------------------------------------------------

fn stair_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for n in 1..=5u32 {
        for mu in all_partitions_in_staircase(n) {
            for (a, b) in [(1, 3), (2, 3)] {
                let mu = mu.clone();
                items.push(item("stairs", format!("stair({n};{mu}) ({a},{b})"), move || {
                    check_stair_exact(n, &mu, a, b, cfg.exact()?)
                }));
            }
        }
    }
    for n in 1..=6u32 {
        items.push(item("stairs", format!("transpose symbolic N={n}"), move || {
            let mut bad = Vec::new();
            for mu in all_partitions_in_staircase(n) {
                if stair_eval(n, &mu, 1, 3)? != stair_eval(n, &mu.conjugate(), 1, 3)? {
                    bad.push(mu.to_string());
                }
            }
            let r = IdentityReport::exact("stairs", "", &bad.len(), &0usize);
            Ok(if bad.is_empty() { r } else { r.with_detail(bad.join(" ")) })
        }));
    }
    for (mu, l) in [(vec![2u32, 2, 1], 21i64), (vec![2, 2], 14)] {
        items.push(item("stairs", format!("l_5({mu:?})"), move || {
            let sd = stair_data(5, &Partition::new(mu.clone())?)?;
            Ok(IdentityReport::exact("stairs", "", &sd.l, &l).with_detail(format!("J0={:?} m={:?}", sd.j0, sd.m)))
        }));
    }
    items
}

/// The introductory and worked `(1,3)` stair displays: `(N, n)` and the shown value.
pub fn hankel_displays() -> Vec<((u32, u32), ZetaExpr)> {
    let det = |entries: Vec<Vec<i64>>, pre: u32, neg: bool| {
        let m: Vec<Vec<ZetaExpr>> = entries.iter().map(|r| r.iter().map(|&s| z(s)).collect()).collect();
        let d = det_laplace(&m, &ZetaExpr::one()).scale_by(&BigRational::new(BigInt::one(), BigInt::from(4u8).pow(pre)));
        if neg {
            -d
        } else {
            d
        }
    };
    vec![
        ((3, 0), det(vec![vec![3, 7], vec![7, 11]], 2, false)),
        ((4, 0), det(vec![vec![7, 11], vec![11, 15]], 4, false)),
        ((5, 0), det(vec![vec![3, 7, 11], vec![7, 11, 15], vec![11, 15, 19]], 6, false)),
        ((5, 1), det(vec![vec![11, 15], vec![15, 19]], 6, false)),
        (
            (5, 2),
            det(
                vec![vec![0, 0, 3, 7], vec![0, 3, 7, 11], vec![3, 7, 11, 15], vec![7, 11, 15, 19]],
                4,
                true,
            ),
        ),
        ((5, 3), det(vec![vec![19]], 4, false)),
    ]
}

fn hankel_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for big_n in 1..=6u32 {
        for n in 0..big_n {
            items.push(item("hankel13", format!("N={big_n} n={n} specialization"), move || {
                let h = reduce_13(&stair_hankel(big_n, n, 1, 3)?)?;
                Ok(IdentityReport::exact("hankel13", "", &h, &stair_hankel_13(big_n, n)?))
            }));
            items.push(item("hankel13", format!("N={big_n} n={n} Hankel = stair"), move || {
                let h = stair_hankel(big_n, n, 1, 3)?;
                Ok(IdentityReport::exact("hankel13", "", &h, &stair_eval(big_n, &Partition::staircase(n as i64), 1, 3)?))
            }));
        }
    }
    for ((big_n, n), shown) in hankel_displays() {
        items.push(item("hankel13", format!("N={big_n} n={n} display"), move || {
            let e = reduce_13(&stair_eval(big_n, &Partition::staircase(n as i64), 1, 3)?)?;
            display_check("hankel13", "", &e, &shown, cfg)
        }));
    }
    for (big_n, n) in [(2u32, 0u32), (3, 0), (3, 1), (4, 1)] {
        items.push(item("hankel13", format!("N={big_n} n={n} numeric"), move || {
            let shape = SkewShape::new(Partition::staircase(big_n as i64), Partition::staircase(n as i64))?;
            let est = smzv_numeric(&checkerboard_fill(&shape, 1, 3)?, &cfg.numeric)?;
            numeric_check("hankel13", "", &est, &stair_hankel_13(big_n, n)?, cfg)
        }));
    }
    items
}

// ---- specials and the MZV relation ------------------------------------------

fn special_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    let mut items = Vec::new();
    for name in ["square2x2_13", "antistair3_13", "A12(1)", "A12(2)", "S12(1)", "S12(2)"] {
        items.push(item("specials", format!("{name} numeric"), move || {
            let est = smzv_numeric(&special_tableau(name)?, &cfg.numeric)?;
            numeric_check("specials", "", &est, &special_values(name)?, cfg)
        }));
    }
    items.push(item("specials", "square2x2_13 display", move || {
        let shown = lin(&[(1, 2, &[3, 5]), (-5, 16, &[4, 4])]);
        display_check("specials", "", &special_values("square2x2_13")?, &shown, cfg)
    }));
    items.push(item("specials", "A(1) = zeta(5)/2", move || {
        let e = primitive_13(Prim13::A, 1)?;
        Ok(IdentityReport::exact("specials", "", &e, &zprod(rat(1, 2), &[5])))
    }));
    items
}

fn relation_items(cfg: &SuiteConfig) -> Vec<Item<'_>> {
    (1..=2u32)
        .map(|n| {
            item("mzv-relation", format!("n={n}"), move || {
                mzv_relation_check(n, &cfg.numeric, &cfg.tol(cfg.numeric_tol))
            })
        })
        .collect()
}

// ---- example table -------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ExampleRow {
    pub label: String,
    pub tableau: String,
    pub closed_form: String,
    pub closed_value: String,
    pub numeric_value: Option<String>,
    pub error_bound: Option<String>,
}

fn example_row(label: String, t: &Tableau, closed: &ZetaExpr, cfg: &NumericConfig) -> Result<ExampleRow> {
    let c = eval_numeric(closed, cfg)?;
    let num = smzv_numeric(t, cfg).ok();
    Ok(ExampleRow {
        label,
        tableau: t.to_literal(),
        closed_form: closed.to_string(),
        closed_value: c.value.to_sci(30),
        numeric_value: num.as_ref().map(|e| e.value.to_sci(15)),
        error_bound: num.as_ref().map(|e| e.error_bound.to_sci(3)),
    })
}

/// Every worked `(1,3)` example with its closed form and a direct numeric value.
pub fn worked_examples(cfg: &NumericConfig) -> Result<Vec<ExampleRow>> {
    let mut jobs: Vec<(String, Tableau, ZetaExpr)> = Vec::new();
    let prims = [
        (Family::B(0), Prim13::B, 0),
        (Family::B(1), Prim13::B, 1),
        (Family::B(2), Prim13::B, 2),
        (Family::A(1), Prim13::A, 1),
        (Family::A(2), Prim13::A, 2),
        (Family::S(1), Prim13::S, 1),
        (Family::S(2), Prim13::S, 2),
        (Family::SStar(1), Prim13::SStar, 1),
        (Family::SStar(2), Prim13::SStar, 2),
        (Family::L(1), Prim13::L, 1),
        (Family::L(2), Prim13::L, 2),
        (Family::LStar(1), Prim13::LStar, 1),
        (Family::LStar(2), Prim13::LStar, 2),
    ];
    for (f, k, n) in prims {
        jobs.push((format!("{f}"), fam(f, 1, 3)?, primitive_13(k, n)?));
    }
    for n in 1..=2 {
        jobs.push((format!("zeta(3,{{1,3}}^{n})"), Tableau::column(&chain_13(true, n))?, primitive_13(Prim13::Y, n)?));
        jobs.push((format!("zeta*(3,{{1,3}}^{n})"), Tableau::row(&chain_13(true, n))?, primitive_13(Prim13::YStar, n)?));
    }
    for ((m, n), shown) in hook_displays() {
        jobs.push((format!("hook({m},{n})"), fam(Family::Hook { m, n }, 1, 3)?, shown));
    }
    for ((m, n), shown) in antihook_displays() {
        jobs.push((format!("antihook({m},{n})"), fam(Family::AntiHook { m, n }, 1, 3)?, shown));
    }
    for ((big_n, n), shown) in hankel_displays() {
        let mu = Partition::staircase(n as i64);
        let label = if n == 0 {
            format!("stair({big_n})")
        } else {
            let parts: Vec<String> = mu.parts().iter().map(u32::to_string).collect();
            format!("stair({big_n};{})", parts.join(","))
        };
        jobs.push((label, fam(Family::Stair { n: big_n, mu }, 1, 3)?, shown));
    }
    for mu in [vec![2u32, 2, 1], vec![2, 2]] {
        let mu = Partition::new(mu)?;
        let e = reduce_13(&stair_eval(5, &mu, 1, 3)?)?;
        jobs.push((format!("stair(5;{})", mu.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")), fam(Family::Stair { n: 5, mu }, 1, 3)?, e));
    }
    for name in ["square2x2_13", "antistair3_13", "A12(1)", "S12(1)"] {
        jobs.push((name.to_string(), special_tableau(name)?, special_values(name)?));
    }
    jobs.par_iter()
        .map(|(label, t, e)| example_row(label.clone(), t, e, cfg))
        .collect()
}

/// Value of a single `(1,3)` report row as an `HPReal`, for callers that
/// want to compare numerically.
pub fn status_counts(reports: &[IdentityReport]) -> (usize, usize, usize) {
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    (count(Status::Pass), count(Status::Fail), count(Status::Inconclusive))
}
