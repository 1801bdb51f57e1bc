//! The acceptance criteria, one printed line each.
//!
//! Run with `cargo test -p smzv-core --test acceptance -- --nocapture` to
//! see the table.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

use smzv_core::closed_forms::{conjecture_residual, mzv_relation_check, ConjectureCase};
use smzv_core::exact::{check_conjugation, trunc_smzv, trunc_smzv_enum, Cutoff};
use smzv_core::numerics::hpreal::HPReal;
use smzv_core::numerics::numeric::{smzv_numeric, NumericConfig};
use smzv_core::closed_forms::{primitive_13, Prim13};
use smzv_core::numerics::eval_numeric;
use smzv_core::report::{IdentityReport, Status};
use smzv_core::shapes::{all_shapes, diagonal, make_family, Family, FamilySpec, Tableau};
use smzv_core::suites::{random_tableau, run_suite, status_counts, SuiteConfig};

struct Outcome {
    ok: bool,
    summary: String,
}

fn line(n: u32, title: &str, out: &Outcome, elapsed: Duration) -> String {
    format!(
        "criterion {n:>2} {:<4} {title}: {} [{:.1}s]",
        if out.ok { "PASS" } else { "FAIL" },
        out.summary,
        elapsed.as_secs_f64()
    )
}

fn all_pass(reports: &[IdentityReport]) -> Outcome {
    let (p, f, i) = status_counts(reports);
    let mut summary = format!("{p} pass, {f} fail, {i} inconclusive");
    if let Some(bad) = reports.iter().find(|r| r.status != Status::Pass) {
        summary.push_str(&format!("; first: {} ({})", bad.id, bad.detail.clone().unwrap_or_default()));
    }
    Outcome {
        ok: f == 0 && i == 0 && p > 0,
        summary,
    }
}

fn suite(name: &str, cfg: &SuiteConfig) -> Vec<IdentityReport> {
    run_suite(name, cfg).unwrap()
}

fn select(reports: Vec<IdentityReport>, keep: impl Fn(&str) -> bool) -> Vec<IdentityReport> {
    reports.into_iter().filter(|r| keep(&r.id)).collect()
}

fn c1(cfg: &SuiteConfig) -> Outcome {
    let start = Instant::now();
    let mut out = all_pass(&suite("gluing", cfg));
    out.ok &= start.elapsed() < Duration::from_secs(30);
    out
}

fn c2(cfg: &SuiteConfig) -> Outcome {
    let start = Instant::now();
    let mut out = all_pass(&suite("jacobi-trudi", cfg));
    out.ok &= start.elapsed() < Duration::from_secs(120);
    out
}

fn c3(cfg: &SuiteConfig) -> Outcome {
    let mut r = suite("recursions", cfg);
    r.extend(select(suite("genseries", cfg), |id| !id.ends_with("numeric")));
    all_pass(&r)
}

fn c4(cfg: &SuiteConfig) -> Outcome {
    all_pass(&suite("stairs", cfg))
}

fn c5(cfg: &SuiteConfig) -> Outcome {
    all_pass(&select(suite("thm34", cfg), |id| id.starts_with("4^n")))
}

fn c6(cfg: &SuiteConfig) -> Outcome {
    let items = [
        (Family::S(1), Prim13::S, 1),
        (Family::S(2), Prim13::S, 2),
        (Family::A(1), Prim13::A, 1),
        (Family::A(2), Prim13::A, 2),
        (Family::B(0), Prim13::B, 0),
        (Family::B(1), Prim13::B, 1),
        (Family::B(2), Prim13::B, 2),
    ];
    let tol = HPReal::pow10(-6, cfg.numeric.bits());
    let reports: Vec<IdentityReport> = items
        .into_iter()
        .map(|(kind, closed, n)| {
            let id = format!("{kind}");
            let t = make_family(&FamilySpec { kind, a: 1, b: 3 }).unwrap();
            let est = smzv_numeric(&t, &cfg.numeric).unwrap();
            let c = eval_numeric(&primitive_13(closed, n).unwrap(), &cfg.numeric).unwrap();
            IdentityReport::within_bound("thm", id, &est, &c.value, &tol)
        })
        .collect();
    let mut out = all_pass(&reports);
    let worst = reports.iter().filter_map(|r| r.error_bound.clone()).max_by(|a, b| {
        a.parse::<f64>().unwrap_or(f64::MAX).total_cmp(&b.parse::<f64>().unwrap_or(f64::MAX))
    });
    out.summary.push_str(&format!("; largest bound {}", worst.unwrap_or_default()));
    out
}

fn c7(cfg: &SuiteConfig) -> Outcome {
    let display = |id: &str| id.ends_with("display") || id.ends_with("closed form");
    let mut r = select(suite("cor36", cfg), display);
    for name in ["hooks", "antihooks", "hankel13", "specials"] {
        r.extend(select(suite(name, cfg), display));
    }
    all_pass(&r)
}

fn c8(cfg: &SuiteConfig) -> Outcome {
    let tol = HPReal::pow10(-6, cfg.numeric.bits());
    let r = mzv_relation_check(1, &cfg.numeric, &tol).unwrap();
    let mut out = all_pass(std::slice::from_ref(&r));
    out.summary = format!("{} vs {} ± {}", r.lhs, r.rhs, r.error_bound.unwrap_or_default());
    out
}

fn c9(cfg: &SuiteConfig) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for case in ConjectureCase::ALL {
        let tol = if case == ConjectureCase::W16 { 1e-2 } else { 1e-6 };
        let r = conjecture_residual(case, &cfg.numeric, tol).unwrap();
        ok &= r.status != Status::Fail;
        if case == ConjectureCase::W8 {
            ok &= r.status == Status::Pass;
        }
        parts.push(format!("{case} {} ± {} {}", r.ratio.to_sci(12), r.error_bound.to_sci(2), r.status));
    }
    Outcome {
        ok,
        summary: parts.join("; "),
    }
}

fn c10(cfg: &SuiteConfig) -> Outcome {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let shapes = all_shapes(8);
    let mut agree = 0;
    for k in 0..100u64 {
        let t = random_tableau(&mut rng, &shapes, 4);
        let m = Cutoff::new(2 + k % 9).unwrap();
        if trunc_smzv(&t, m).unwrap() == trunc_smzv_enum(&t, m) {
            agree += 1;
        }
    }
    let m12 = Cutoff::new(12).unwrap();
    let mut conj = 0;
    let shapes9 = all_shapes(9);
    for k in 0..100usize {
        let shape = shapes9[(k * 7919) % shapes9.len()].clone();
        let vals = [(k % 3) as u32 + 1, (k / 3 % 3) as u32 + 1];
        let t = Tableau::from_fn(shape, |c| vals[diagonal(c).rem_euclid(2) as usize]).unwrap();
        if check_conjugation(&t, m12).unwrap().passed() {
            conj += 1;
        }
    }
    Outcome {
        ok: agree == 100 && conj == 100,
        summary: format!("DP = enumeration on {agree}/100; conjugation on {conj}/100 at M=12"),
    }
}

#[test]
fn acceptance() {
    let cfg = SuiteConfig {
        numeric: NumericConfig::new(50, 100_000).unwrap(),
        ..SuiteConfig::default()
    };
    type Check = fn(&SuiteConfig) -> Outcome;
    let criteria: [(u32, &str, Check); 10] = [
        (1, "gluing, 50 pairs, M=15", c1),
        (2, "Jacobi-Trudi, <= 9 cells, 4 fills, M=12", c2),
        (3, "recursions and generating series, n <= 5, M=12", c3),
        (4, "stairs, N <= 5, M=12", c4),
        (5, "4^n zeta({1,3}^n) = zeta({4}^n), n <= 8", c5),
        (6, "primitive (1,3) values, bound <= 1e-6", c6),
        (7, "closed forms vs displayed values, 1e-30", c7),
        (8, "MZV relation n=1, bound <= 1e-6", c8),
        (9, "gluing conjectures", c9),
        (10, "DP vs enumeration; conjugation", c10),
    ];
    let mut failed = Vec::new();
    for (n, title, check) in criteria {
        let start = Instant::now();
        let out = check(&cfg);
        println!("{}", line(n, title, &out, start.elapsed()));
        if !out.ok {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
