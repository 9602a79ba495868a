//! Acceptance criteria AC1-AC10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Arithmetic is exact, so every comparison is
//! equality; the only thresholds are the wall-clock limits.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use chevalley_core::centralizer::{lie_fixed_space, reductive_pair_check, GeneratorFamily, Subspace};
use chevalley_core::chevalley::{ChevalleyForm, LieAlgebra};
use chevalley_core::field::FiniteField;
use chevalley_core::group::{FiniteSubgroup, GroupElement, ParabolicDatum};
use chevalley_core::rootsystem::{CartanType, Cocharacter, RootSystem};
use chevalley_core::scenarios::{named_generators, run_scenario, Report, Status, SuiteParams};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn scenario(id: &str, qs: &[u32]) -> Result<Report, String> {
    let params = SuiteParams {
        qs: qs.to_vec(),
        budget: None,
        timing: false,
    };
    let r = run_scenario(id, &params).map_err(|e| e.to_string())?;
    match r.status {
        Status::Pass => Ok(r),
        _ => Err(format!("{id} {:?}: {}", r.status, json!(r.failure))),
    }
}

fn ac1() -> Check {
    let rs: RootSystem = "G2".parse().map_err(|e| format!("{e}"))?;
    let a = rs.simple_root(0);
    let b = rs.simple_root(1);
    let table = [
        ([1, 0], &a, 2),
        ([0, 1], &a, -3),
        ([1, 0], &b, -1),
        ([0, 1], &b, 2),
        ([1, 1], &a, -1),
        ([2, 1], &a, 1),
        ([3, 1], &a, 3),
        ([3, 2], &a, 0),
    ];
    for (g, d, want) in table {
        let got = rs.pairing(&rs.root(&g).unwrap(), d).unwrap();
        ensure(got == want, || format!("<{g:?}, {d}^vee> = {got}, expected {want}"))?;
    }
    Ok("8 pairings exact".into())
}

fn ac2() -> Check {
    let ranges = [
        (CartanType::A, 1),
        (CartanType::B, 2),
        (CartanType::C, 2),
        (CartanType::D, 4),
        (CartanType::E, 6),
        (CartanType::F, 4),
        (CartanType::G, 2),
    ];
    let mut n_types = 0;
    for (kind, lo) in ranges {
        let hi = match kind {
            CartanType::F => 4,
            CartanType::G => 2,
            _ => 8,
        };
        for n in lo..=hi {
            let rs = RootSystem::new(kind, n).map_err(|e| e.to_string())?;
            let c = rs.classify_primes();
            let mut want = BTreeSet::new();
            if kind != CartanType::A {
                want.insert(2);
            }
            if kind.is_exceptional() {
                want.insert(3);
            }
            if kind == CartanType::E && n == 8 {
                want.insert(5);
            }
            ensure(c.bad == want, || format!("{kind}{n}: bad {:?}, expected {want:?}", c.bad))?;
            for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
                let vg = !want.contains(&p) && !(kind == CartanType::A && (n as u64 + 1).is_multiple_of(p));
                ensure(c.is_very_good(p) == vg, || format!("{kind}{n}: very good at {p}"))?;
            }
            n_types += 1;
        }
    }
    Ok(format!("{n_types} simple types of rank <= 8"))
}

fn ac3() -> Check {
    for label in ["A1", "A2", "B2", "G2"] {
        let f = ChevalleyForm::new(label.parse().unwrap()).map_err(|e| format!("{label}: {e}"))?;
        let d = f.dim();
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    let (x, y, z) = (vec![(a, 1)], vec![(b, 1)], vec![(c, 1)]);
                    let mut acc = vec![0i64; d];
                    for t in [
                        f.bracket(&f.bracket(&x, &y), &z),
                        f.bracket(&f.bracket(&y, &z), &x),
                        f.bracket(&f.bracket(&z, &x), &y),
                    ] {
                        for (i, v) in t {
                            acc[i] += v;
                        }
                    }
                    ensure(acc.iter().all(|&v| v == 0), || format!("{label}: Jacobi residual at ({a},{b},{c})"))?;
                }
            }
        }
        // Divided powers are built with an exact-division check; confirm
        // X_n * n = X_{n-1} * ad e independently.
        for g in f.root_system().roots() {
            let xs = f.divided_powers(g).unwrap();
            for n in 1..xs.len() {
                ensure(xs[n].scale(n as i64) == xs[n - 1].mul(&xs[1]), || format!("{label}: X_{n} for {g}"))?;
            }
        }
    }
    Ok("A1 A2 B2 G2: zero residual, integral divided powers".into())
}

fn ac4() -> Check {
    let r = scenario("S2", &[4])?;
    Ok(format!(
        "{} root-group conjugations, {} u-products, {} commutator tuples",
        r.metrics["root_subgroup_conjugations_checked"], r.metrics["u_product_cases"], r.metrics["commutator_tuples_checked"]
    ))
}

fn ac5() -> Check {
    let f4 = FiniteField::new(2, 2).unwrap();
    let f2 = FiniteField::new(2, 1).unwrap();
    let err = |e: chevalley_core::scenarios::Failure| e.operands.to_string();
    let hg = named_generators("h", &f4).map_err(err)?;
    let h = FiniteSubgroup::closure(&hg, 100).map_err(|e| e.to_string())?;
    let nonabelian = !hg[0].commutes_with(&hg[1]).unwrap();
    ensure(h.order() == 6 && nonabelian, || format!("|H| = {}, nonabelian = {nonabelian}", h.order()))?;
    let m = FiniteSubgroup::closure(&named_generators("m", &f2).map_err(err)?, 1000).map_err(|e| e.to_string())?;
    ensure(m.order() == 36, || format!("|M(F2)| = {}", m.order()))?;
    let g = FiniteSubgroup::closure(&named_generators("simple-roots", &f2).map_err(err)?, 2_000_000)
        .map_err(|e| e.to_string())?;
    let q: usize = 2;
    let formula = q.pow(6) * (q.pow(6) - 1) * (q.pow(2) - 1);
    ensure(g.order() == 12096 && g.order() == formula, || format!("|G(F2)| = {}, polynomial {formula}", g.order()))?;
    Ok("|H| = 6 nonabelian, |M(F2)| = 36, |G(F2)| = 12096".into())
}

fn ac6() -> Check {
    let r = scenario("S5", &[4])?;
    let m = &r.metrics;
    ensure(m["separable_in_l"] == json!(true) && m["separable_in_g"] == json!(false), || "separability flags".into())?;
    ensure(m["dim_c_l_h"] == json!(1), || format!("dim c_l(H) = {}", m["dim_c_l_h"]))?;
    let golden_path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/separability_g2_gf4.json");
    let golden: Value = serde_json::from_str(&fs::read_to_string(golden_path).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(m["dim_c_g_h"] == golden["dim_c_g_h"] && m["dim_c_g_h"] == json!(5), || {
        format!("dim c_g(H) = {}", m["dim_c_g_h"])
    })?;
    ensure(m["dim_lie_c_g_h_declared"] == golden["dim_lie_c_g_h_declared"] && m["dim_lie_c_g_h_declared"] == json!(3), || {
        format!("declared dim = {}", m["dim_lie_c_g_h_declared"])
    })?;
    let witnesses = r.witnesses["g_witnesses"].as_array().cloned().unwrap_or_default();
    ensure(witnesses.contains(&json!("e[b] + e[3a+b]")), || format!("witnesses {witnesses:?}"))?;
    ensure(r.witnesses["g_witnesses"] == golden["g_witnesses"], || "witnesses differ from golden".into())?;
    Ok("c_l(H) = k z; dim c_g(H) = 5 vs 3, witness e_b + e_{3a+b}".into())
}

fn ac7() -> Check {
    let r = scenario("S6", &[4, 8])?;
    let c = &r.metrics["class_counts"];
    ensure(c["q4"]["classes"] == json!(4) && c["q4"]["m_order"] == json!(3600), || format!("q=4: {}", c["q4"]))?;
    ensure(c["q8"]["classes"] == json!(8) && c["q8"]["m_order"] == json!(254016), || format!("q=8: {}", c["q8"]))?;
    Ok("4 classes in M(F4) (3600), 8 classes in M(F8) (254016)".into())
}

fn ac8() -> Check {
    let r = scenario("S7", &[4])?;
    ensure(r.metrics["parameters_checked"] == json!(3), || "expected 3 nonzero parameters".into())?;
    Ok("c_lambda(H_a) = H, H_a not M(F4)-conjugate to H for a != 0".into())
}

fn ac9() -> Check {
    let r = scenario("S9", &[4, 8])?;
    let p = &r.metrics["per_q"];
    ensure(p["q4"]["candidates"] == json!(1024) && p["q8"]["candidates"] == json!(32768), || format!("{p}"))?;
    ensure(p["q4"]["fiber_sizes"] == json!([4, 4, 4]), || format!("{}", p["q4"]))?;
    ensure(p["q8"]["fiber_sizes"] == json!(vec![8; 7]), || format!("{}", p["q8"]))?;
    Ok("H_x over F4(x^2), u(x) not; fibers are u(a) U_{3a+2b} for q = 4, 8".into())
}

fn ac10() -> Check {
    let f4 = FiniteField::new(2, 2).unwrap();
    let form = Arc::new(ChevalleyForm::new("G2".parse().unwrap()).unwrap());
    let lie = LieAlgebra::new(form.clone(), f4.clone());
    let rs = form.root_system();
    let root = |c: [i64; 2]| rs.root(&c).unwrap();
    let kappa = |c: [i64; 2], a: u32| GroupElement::root_element_raw(&lie, &root(c), &a).unwrap();

    // Generator sufficiency: fixed space of generators equals that of the group.
    let hg = named_generators("h", &f4).map_err(|e| e.operands.to_string())?;
    let mg = named_generators("m", &FiniteField::new(2, 1).unwrap()).map_err(|e| e.operands.to_string())?;
    let lie2 = LieAlgebra::new(form.clone(), FiniteField::new(2, 1).unwrap());
    for (l, gens) in [(&lie, &hg), (&lie2, &mg)] {
        let group = FiniteSubgroup::closure(gens, 10_000).map_err(|e| e.to_string())?;
        let all: Vec<_> = group.iter().collect();
        let a = lie_fixed_space(l, gens).map_err(|e| e.to_string())?;
        let b = lie_fixed_space(l, &all).map_err(|e| e.to_string())?;
        ensure(a.equals(&b).unwrap(), || format!("fixed spaces differ for a group of order {}", group.order()))?;
    }

    // c_lambda is multiplicative on P_lambda(F4): all pairs from the
    // generating set of root elements and torus elements.
    let datum = ParabolicDatum::new(rs, Cocharacter(vec![1, 2])).map_err(|e| e.to_string())?;
    let mut p_gens = Vec::new();
    for c in [[1, 0], [-1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]] {
        for a in 1..4 {
            p_gens.push(kappa(c, a));
        }
    }
    for a in 1..4 {
        p_gens.push(GroupElement::torus_element(&lie, &Cocharacter(vec![1, 0]), &a).unwrap());
        p_gens.push(GroupElement::torus_element(&lie, &Cocharacter(vec![0, 1]), &a).unwrap());
    }
    let mut pairs = 0;
    for x in &p_gens {
        for y in &p_gens {
            let xy = x.mul(y).unwrap();
            let lhs = datum.c_lambda(&xy).ok_or("product left P_lambda")?;
            let rhs = datum.c_lambda(x).unwrap().mul(&datum.c_lambda(y).unwrap()).unwrap();
            ensure(lhs == rhs, || "c_lambda(xy) != c_lambda(x) c_lambda(y)".into())?;
            for z in p_gens.iter().step_by(5) {
                let xyz = xy.mul(z).unwrap();
                let l3 = datum.c_lambda(&xyz).ok_or("product left P_lambda")?;
                ensure(l3 == lhs.mul(&datum.c_lambda(z).unwrap()).unwrap(), || "triple product".into())?;
            }
            pairs += 1;
        }
    }

    // Reductive pairs over the full GF(4) sweep.
    let sweep = f4.elements();
    let fam = |cs: &[[i64; 2]]| {
        let mut v: Vec<GeneratorFamily<FiniteField>> = Vec::new();
        for &c in cs {
            v.push(GeneratorFamily::RootElement(root(c)));
            v.push(GeneratorFamily::RootElement(root([-c[0], -c[1]])));
        }
        v.push(GeneratorFamily::Torus(Cocharacter(vec![1, 0])));
        v.push(GeneratorFamily::Torus(Cocharacter(vec![0, 1])));
        v
    };
    let span = |cs: &[[i64; 2]]| {
        let mut vs = vec![lie.h(0), lie.h(1)];
        for &c in cs {
            vs.push(lie.e(&root(c)).unwrap());
            vs.push(lie.e(&root([-c[0], -c[1]])).unwrap());
        }
        Subspace::span_vectors(f4.clone(), 14, &vs).unwrap()
    };
    for cs in [&[[1, 0], [3, 2]][..], &[[1, 0]][..]] {
        let out = reductive_pair_check(&lie, &fam(cs), &span(cs), &sweep).map_err(|e| e.to_string())?;
        ensure(out.stable, || format!("complement not stable for {cs:?}"))?;
    }

    // Subspace dimension identity over all pairs of root-space spans drawn
    // from a fixed family.
    let family: Vec<Subspace<FiniteField>> = (1u32..64)
        .map(|mask| {
            let vs: Vec<_> = (0..6)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| {
                    let g = &rs.positive_roots()[i];
                    let v = lie.e(g).unwrap();
                    if i % 2 == 0 {
                        v.add(&lie.e(&rs.positive_roots()[(i + 1) % 6]).unwrap()).unwrap()
                    } else {
                        v
                    }
                })
                .collect();
            Subspace::span_vectors(f4.clone(), 14, &vs).unwrap()
        })
        .collect();
    for u in &family {
        for w in &family {
            let s = u.sum(w).unwrap().dim();
            let i = u.intersect(w).unwrap().dim();
            ensure(s + i == u.dim() + w.dim(), || "dim(U+W) + dim(U^W) != dim U + dim W".into())?;
        }
    }
    Ok(format!(
        "fixed spaces, {pairs} c_lambda pairs, (G,M) and (G,L), {} subspace pairs",
        family.len() * family.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Check); 10] = [
        ("AC1", 1, ac1),
        ("AC2", 10, ac2),
        ("AC3", 5_000, ac3),
        ("AC4", 10_000, ac4),
        ("AC5", 30_000, ac5),
        ("AC6", 1_000, ac6),
        ("AC7", 120_000, ac7),
        ("AC8", 60_000, ac8),
        ("AC9", 60_000, ac9),
        ("AC10", 30_000, ac10),
    ];
    let mut failed = 0;
    for (id, limit_ms, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_millis(limit_ms);
        let time = format!("{:.3} ms, limit {limit_ms} ms", elapsed.as_secs_f64() * 1e3);
        match outcome {
            Ok(detail) if elapsed <= limit => println!("{id} PASS  {detail} ({time})"),
            Ok(detail) => {
                failed += 1;
                println!("{id} FAIL  too slow: {detail} ({time})");
            }
            Err(reason) => {
                failed += 1;
                println!("{id} FAIL  {reason} ({time})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
