//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Timing limits are wall-clock on the library calls named in each criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{q, s5, vector};
use homnary::catalog::{self, ClassTag, Fixture};
use homnary::cli::{fixture_document, AlgebraDocument};
use homnary::nambu_poly::{check_nambu_sampled, PolyMap3};
use homnary::{
    check_hom_jacobi, check_hom_nambu, check_partial_assoc, check_symmetry, check_total_assoc,
    is_morphism, tensor_product, yau_twist, ExactAlgebra, ExactMap, QuadScalar, Rational,
    SymmetryKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn timed<R>(f: impl FnOnce() -> R) -> (R, Duration) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed())
}

fn within(elapsed: Duration, limit_ms: u64, what: &str) -> Result<(), String> {
    if elapsed > Duration::from_millis(limit_ms) {
        Err(format!("{what} took {elapsed:.2?}, limit {limit_ms} ms"))
    } else {
        Ok(())
    }
}

fn matrix(rows: [[QuadScalar; 2]; 2]) -> ExactMap {
    ExactMap::from_rows(rows.into_iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn criterion_1() -> Outcome {
    let alg = catalog::partial_assoc_2dim().unwrap();
    let (r, t) = timed(|| check_partial_assoc(&alg));
    ensure!(r.passed(), "partial check failed: {:?}", r.witness());
    ensure!(
        r.tuples_checked() == 32,
        "checked {} tuples",
        r.tuples_checked()
    );
    within(t, 100, "check_partial_assoc")?;
    Ok(format!("32/32 tuples, {t:.2?}"))
}

fn criterion_2() -> Outcome {
    let alg = catalog::partial_assoc_2dim().unwrap();
    for (a, b) in [(1, 0), (2, 3), (-1, 5)] {
        let rho = catalog::partial_endo(&q(a), &q(b)).unwrap();
        ensure!(
            rho == matrix([[q(a), q(0)], [q(b), q(a * a * a)]]),
            "partial_endo({a},{b}) = {rho:?}"
        );
        ensure!(
            is_morphism(&rho, &alg, &alg).unwrap().passed(),
            "({a},{b}) is not a morphism"
        );
        let twisted = yau_twist(&alg, &rho).unwrap();
        ensure!(
            twisted.product(&[0, 0, 0]) == &vector(&[q(0), q(a * a * a)]),
            "twist at ({a},{b}) gives {:?}",
            twisted.product(&[0, 0, 0])
        );
    }
    ensure!(
        catalog::get_fixture("partial_endo", &[q(0), q(1)]).is_err(),
        "a = 0 accepted"
    );
    let eight = yau_twist(&alg, &catalog::partial_endo(&q(2), &q(3)).unwrap()).unwrap();
    ensure!(
        eight.product(&[0, 0, 0]).coords()[1] == q(8),
        "a = 2 does not give 8"
    );
    Ok("3 spot values, a = 0 rejected, m~(e1,e1,e1) = 8 e2 at a = 2".into())
}

fn reference_automorphisms() -> Vec<ExactMap> {
    vec![
        matrix([[q(1), q(0)], [q(0), q(1)]]),
        matrix([[q(-1), q(0)], [q(0), q(-1)]]),
        matrix([[q(-1), q(-1)], [q(0), q(1)]]),
        matrix([[s5(-1), s5(-3)], [s5(2), s5(1)]]),
        matrix([[q(1), q(1)], [q(0), q(-1)]]),
        matrix([[s5(1), s5(3)], [s5(-2), s5(-1)]]),
    ]
}

fn criterion_3() -> Outcome {
    let alg = catalog::total_assoc_2dim().unwrap();
    let r = check_total_assoc(&alg, false);
    ensure!(
        r.passed() && r.tuples_checked() == 32,
        "total check: {:?}",
        r.witness()
    );
    let mut sqrt5 = 0;
    for (k, m) in reference_automorphisms().iter().enumerate() {
        let det = &(m.get(0, 0) * m.get(1, 1)) - &(m.get(0, 1) * m.get(1, 0));
        ensure!(
            !num_traits::Zero::is_zero(&det),
            "matrix {} is singular",
            k + 1
        );
        let w = is_morphism(m, &alg, &alg).unwrap();
        ensure!(w.passed(), "matrix {} fails at {:?}", k + 1, w.witness());
        if m.context() == homnary::FieldContext::Quadratic(5) {
            sqrt5 += 1;
        }
    }
    ensure!(sqrt5 == 2, "{sqrt5} matrices over Q(sqrt 5)");
    Ok("32/32 tuples, 6/6 automorphisms (2 over Q(sqrt 5))".into())
}

fn golden(entries: [[i64; 5]; 8], sqrt5: bool) -> Vec<([usize; 3], Vec<QuadScalar>)> {
    entries
        .iter()
        .map(|e| {
            let c = |k| if sqrt5 { s5(k) } else { q(k) };
            (
                [e[0] as usize - 1, e[1] as usize - 1, e[2] as usize - 1],
                vec![c(e[3]), c(e[4])],
            )
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let alg = catalog::total_assoc_2dim().unwrap();
    let autos = reference_automorphisms();
    let m1 = golden(
        [
            [1, 1, 1, 1, 0],
            [1, 1, 2, 1, -1],
            [1, 2, 2, 2, -1],
            [2, 1, 1, 1, -1],
            [2, 2, 1, 2, -1],
            [2, 2, 2, 3, -2],
            [1, 2, 1, 1, -1],
            [2, 1, 2, 2, -1],
        ],
        false,
    );
    let m2 = golden(
        [
            [1, 1, 1, 1, -2],
            [1, 1, 2, 3, -1],
            [1, 2, 2, 4, -3],
            [2, 1, 1, 3, -1],
            [2, 2, 1, 4, -3],
            [2, 2, 2, 7, -4],
            [1, 2, 1, 3, -1],
            [2, 1, 2, 4, -3],
        ],
        true,
    );
    let mut witnesses = Vec::new();
    let mut matched = 0;
    for (label, rho, table) in [("m~1", &autos[4], m1), ("m~2", &autos[5], m2)] {
        let twisted = yau_twist(&alg, rho).unwrap();
        for (t, v) in &table {
            ensure!(
                twisted.product(t).coords() == v.as_slice(),
                "{label} {t:?}: {:?}",
                twisted.product(t)
            );
            matched += 1;
        }
        let hom = check_total_assoc(&twisted, false);
        ensure!(
            hom.passed(),
            "{label} with alpha = rho fails: {:?}",
            hom.witness()
        );
        let classical = ExactAlgebra::new(label, 2, 3, twisted.products().to_vec()).unwrap();
        let plain = check_total_assoc(&classical, false);
        let Some(w) = plain.witness() else {
            return Err(format!("{label} with alpha = id passes"));
        };
        let t: Vec<String> = w.tuple.iter().map(|i| (i + 1).to_string()).collect();
        witnesses.push(format!("{label} witness=({})", t.join(",")));
    }
    let top = yau_twist(&alg, &autos[5])
        .unwrap()
        .product(&[1, 1, 1])
        .clone();
    ensure!(
        top.coords()[0].to_string() == "0 + 7/5*r" && top.coords()[1].to_string() == "0 - 4/5*r",
        "m~2(e2,e2,e2) = {top:?}"
    );
    Ok(format!(
        "{matched}/16 products exact, hom pass, id fails: {}",
        witnesses.join(", ")
    ))
}

fn class_holds(alg: &ExactAlgebra, tag: ClassTag) -> bool {
    match tag {
        ClassTag::TotallyAssociative => check_total_assoc(alg, false).passed(),
        ClassTag::PartiallyAssociative => check_partial_assoc(alg).passed(),
        ClassTag::NambuLie => {
            check_symmetry(alg, SymmetryKind::Skew).passed() && check_hom_nambu(alg).passed()
        }
        ClassTag::Lie => {
            check_symmetry(alg, SymmetryKind::Skew).passed() && check_hom_jacobi(alg).passed()
        }
        ClassTag::Symmetric => check_symmetry(alg, SymmetryKind::Symmetric).passed(),
        ClassTag::Endomorphism => true,
    }
}

/// Each twist is checked against the first tag of its base.
fn criterion_5() -> Outcome {
    let (result, t) = timed(|| -> Outcome {
        let mut pairs = 0;
        for info in catalog::list_fixtures() {
            let Fixture::Map { map, base } = catalog::get_fixture(info.name, &[]).unwrap() else {
                continue;
            };
            let tag = catalog::fixture_info(base.name()).unwrap().tags[0];
            ensure!(
                is_morphism(&map, &base, &base).unwrap().passed(),
                "{} is not an endomorphism",
                info.name
            );
            let twisted = yau_twist(&base, &map).unwrap();
            ensure!(
                class_holds(&twisted, tag),
                "twist of {} along {} is not Hom-{tag}",
                base.name(),
                info.name
            );
            pairs += 1;
        }
        ensure!(pairs >= 6, "only {pairs} pairs");
        Ok(format!("{pairs} pairs"))
    });
    let detail = result?;
    within(t, 1000, "pair suite")?;
    Ok(format!("{detail}, {t:.2?}"))
}

fn criterion_6() -> Outcome {
    let (result, t) = timed(|| -> Outcome {
        let filippov = check_hom_nambu(&catalog::filippov4().unwrap());
        ensure!(filippov.passed(), "filippov4: {:?}", filippov.witness());
        ensure!(
            filippov.tuples_checked() == 1024,
            "filippov4 checked {}",
            filippov.tuples_checked()
        );
        let heis = check_hom_nambu(&catalog::heis4().unwrap());
        ensure!(heis.passed(), "heis4: {:?}", heis.witness());
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for trial in 0..5 {
            let base = catalog::abelian(3, 3).unwrap();
            let alphas: Vec<ExactMap> = (0..2)
                .map(|_| {
                    ExactMap::from_rows(
                        (0..3)
                            .map(|_| (0..3).map(|_| q(rng.random_range(-9..=9))).collect())
                            .collect(),
                    )
                    .unwrap()
                })
                .collect();
            let alg = base.with_alphas(alphas).unwrap();
            ensure!(
                check_hom_nambu(&alg).passed(),
                "abelian trial {trial} fails"
            );
        }
        Ok("filippov4 1024/1024, heis4 pass, abelian 5 random alpha pairs".to_string())
    });
    let detail = result?;
    within(t, 1000, "Hom-Nambu suite")?;
    Ok(format!("{detail}, {t:.2?}"))
}

fn criterion_7() -> Outcome {
    let total = catalog::total_assoc_2dim().unwrap();
    let partial = catalog::partial_assoc_2dim().unwrap();
    let tp = tensor_product(&total, &partial).unwrap();
    let r = check_partial_assoc(&tp);
    ensure!(
        r.passed() && r.tuples_checked() == 1024,
        "total (x) partial: {:?}",
        r.witness()
    );

    let sh = tensor_product(&catalog::sym1().unwrap(), &catalog::heis4().unwrap()).unwrap();
    let (jacobi, t) = timed(|| check_hom_jacobi(&sh));
    ensure!(
        jacobi.passed(),
        "sym1 (x) heis4 jacobi: {:?}",
        jacobi.witness()
    );
    ensure!(
        jacobi.tuples_checked() == 1024,
        "jacobi checked {}",
        jacobi.tuples_checked()
    );
    within(t, 5000, "check_hom_jacobi")?;
    let skew = check_symmetry(&sh, SymmetryKind::Skew);
    ensure!(skew.passed(), "sym1 (x) heis4 skew: {:?}", skew.witness());
    ensure!(
        check_symmetry(&catalog::sym1().unwrap(), SymmetryKind::Symmetric).passed()
            && check_symmetry(&catalog::heis4().unwrap(), SymmetryKind::Skew).passed(),
        "factors are not symmetric (x) skew"
    );
    Ok(format!(
        "partial 1024/1024, jacobi 1024 x 120 in {t:.2?}, skew pass"
    ))
}

fn criterion_8() -> Outcome {
    let gamma = PolyMap3::<Rational>::parse("x1 + x2^2, x2, x3").unwrap();
    let (result, t) = timed(|| -> Outcome {
        let plain = check_nambu_sampled::<Rational>(None, 20, 2, 0).map_err(|e| e.to_string())?;
        ensure!(
            plain.passed_count() == 20,
            "nambu {}/20",
            plain.passed_count()
        );
        let twisted = check_nambu_sampled(Some(&gamma), 20, 2, 0).map_err(|e| e.to_string())?;
        ensure!(
            twisted.passed_count() == 20,
            "hom-nambu {}/20",
            twisted.passed_count()
        );
        Ok("nambu 20/20, hom-nambu with morphism 20/20".to_string())
    });
    let detail = result?;
    within(t, 5000, "sampled checks")?;
    Ok(format!("{detail}, {t:.2?}"))
}

fn criterion_9() -> Outcome {
    let (mismatches, pairs) = common::multilinearity_mismatches(200, 9);
    ensure!(mismatches.is_empty(), "{}", mismatches.join("; "));
    Ok(format!(
        "{pairs} (fixture, checker) pairs x 200 tuples agree"
    ))
}

fn homnary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_homnary"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn check_names(tag: ClassTag) -> &'static [&'static str] {
    match tag {
        ClassTag::TotallyAssociative => &["total"],
        ClassTag::PartiallyAssociative => &["partial"],
        ClassTag::NambuLie => &["nambu-lie"],
        ClassTag::Lie => &["jacobi", "skew"],
        ClassTag::Symmetric => &["symmetric"],
        ClassTag::Endomorphism => &[],
    }
}

fn library_verdict(alg: &ExactAlgebra, check: &str) -> bool {
    match check {
        "nambu" => check_hom_nambu(alg).passed(),
        "jacobi" => check_hom_jacobi(alg).passed(),
        "total" => check_total_assoc(alg, false).passed(),
        "weak-total" => check_total_assoc(alg, true).passed(),
        "partial" => check_partial_assoc(alg).passed(),
        "skew" => check_symmetry(alg, SymmetryKind::Skew).passed(),
        "symmetric" => check_symmetry(alg, SymmetryKind::Symmetric).passed(),
        other => panic!("unknown check {other}"),
    }
}

fn cli_fixture(dir: &Path, name: &str) -> Outcome {
    let file = dir.join(format!("{name}.alg"));
    let path = file.to_str().unwrap();
    let (code, _, err) = homnary(&["catalog", name, "-o", path]);
    ensure!(code == 0, "catalog {name}: exit {code} {err}");
    let text = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
    let parsed = AlgebraDocument::parse(&text).map_err(|e| format!("{name}: {e}"))?;
    ensure!(
        parsed == fixture_document(name).unwrap(),
        "{name}: dump does not parse back"
    );
    ensure!(
        parsed.dump() == AlgebraDocument::parse(&parsed.dump()).unwrap().dump(),
        "{name}: dump unstable"
    );
    let info = catalog::fixture_info(name).unwrap();
    let alg = parsed.to_algebra().map_err(|e| e.to_string())?;

    let subject = match catalog::get_fixture(name, &[]).unwrap() {
        Fixture::Algebra(a) => {
            ensure!(
                common::same_structure(&a, &alg),
                "{name}: structure differs after round trip"
            );
            let tags: Vec<&str> = info
                .tags
                .iter()
                .flat_map(|&t| check_names(t).iter().copied())
                .collect();
            let (code, out, _) = homnary(&["check", path, "-c", &tags.join(",")]);
            ensure!(code == 0, "{name}: tag checks exit {code}\n{out}");
            file
        }
        Fixture::Map { map, base } => {
            ensure!(
                parsed.map(name) == Some(&map),
                "{name}: map lost in round trip"
            );
            let twisted = dir.join(format!("{name}_twisted.alg"));
            let (code, out, err) = homnary(&[
                "twist",
                path,
                "--map",
                name,
                "-o",
                twisted.to_str().unwrap(),
            ]);
            ensure!(code == 0, "{name}: twist exit {code} {out}{err}");
            let tw = AlgebraDocument::parse(&std::fs::read_to_string(&twisted).unwrap()).unwrap();
            let expected = yau_twist(&base, &map).unwrap();
            ensure!(
                common::same_structure(&tw.to_algebra().unwrap(), &expected),
                "{name}: twist differs"
            );
            twisted
        }
    };

    let alg = AlgebraDocument::parse(&std::fs::read_to_string(&subject).unwrap())
        .unwrap()
        .to_algebra()
        .unwrap();
    let sp = subject.to_str().unwrap();
    for check in [
        "nambu",
        "jacobi",
        "total",
        "weak-total",
        "partial",
        "skew",
        "symmetric",
    ] {
        let expected = if library_verdict(&alg, check) { 0 } else { 1 };
        let (code, out, _) = homnary(&["check", sp, "-c", check]);
        ensure!(
            code == expected,
            "{name} {check}: exit {code}, library says {expected}\n{out}"
        );
    }

    let broken = dir.join(format!("{name}_broken.alg"));
    std::fs::write(&broken, text.replacen("arity", "arity x", 1)).unwrap();
    let (code, _, _) = homnary(&["check", broken.to_str().unwrap(), "-c", "nambu"]);
    ensure!(code == 2, "{name}: malformed input exit {code}");
    Ok(String::new())
}

fn criterion_10() -> Outcome {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let fixtures = catalog::list_fixtures();
    for info in &fixtures {
        cli_fixture(dir.path(), info.name)?;
    }
    let (code, _, _) = homnary(&["no-such-command"]);
    ensure!(code == 2, "unknown subcommand exit {code}");
    Ok(format!(
        "{} fixtures round-tripped, exit codes 0/1/2 agree",
        fixtures.len()
    ))
}

fn main() {
    homnary::cli::configure_threads();
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({why})");
            }
        }
    }
    println!(
        "acceptance: {}/{} passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
