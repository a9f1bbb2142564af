use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use affinerep::{enumerate_level_weights, inner_fixed_subalgebra, AffineAlgebra};
use exactmath::rational::{int, rat};
use exactmath::Rational;
use latticevoa::isometry::{identity, mat_mul, reflection};
use latticevoa::{build_isometry, fixed_subalgebra, identify_type, lift, standard_lift, IsometryName};
use num_traits::Zero;
use pipeline_cli::lattice::{setup, LatticeName};
use pipeline_cli::{
    lattice_report, run_case, verify_tables, CaseFile, Report, TableFamily, Verdict,
};
use qmodular::{derive_dimension_formula, dim_tilde_v1, f_power_at_S, hauptmodul_f, PuiseuxSeries, DEFAULT_TRUNC};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootdata::{
    build_root_system, lin_min_over_weights, lowest_weight, weight_system, Family, SemisimpleTypeWithLevels, SimpleType,
    Weight,
};
use schellekens::{admits_order3_with_fixed, enumerate_candidates};
use twistbound::{invariant_norm, min_twisted_weight, shift_ok, CaseSpec, CaseTables};

const CASES: [&str; 3] = ["e6g2", "a2x6", "a5d4"];

fn ty(s: &str) -> SemisimpleTypeWithLevels {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.1?}, limit {limit:?}"))?;
    Ok(format!("{t:.1?}"))
}

fn failures(r: &Report) -> Vec<String> {
    r.steps
        .iter()
        .filter(|s| s.verdict == Verdict::Fail)
        .map(|s| format!("{}: {} vs {:?}", s.name, s.computed, s.expected))
        .collect()
}

fn no_failures(r: &Report) -> Result<(), String> {
    let f = failures(r);
    ensure(f.is_empty(), f.join("; "))
}

fn tables() -> Result<String, String> {
    let start = Instant::now();
    let counts = [(TableFamily::G21, 2), (TableFamily::A23, 10), (TableFamily::A11, 2), (TableFamily::A53, 56), (TableFamily::D43, 24)];
    let mut rows = 0;
    for (family, n) in counts {
        let r = verify_tables(family, DEFAULT_TRUNC);
        no_failures(&r)?;
        let count = r.step("module count").ok_or("missing module count")?;
        ensure(count.computed == n.to_string(), format!("{}: {} modules", family.label(), count.computed))?;
        ensure(r.steps.iter().all(|s| s.verdict == Verdict::Pass), format!("{}: unexpected verdict", family.label()))?;
        rows += n;
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("{rows} rows across 5 tables exact, counts 2/10/2/56/24, {t}"))
}

fn norms_and_shifts() -> Result<String, String> {
    for id in CASES {
        let c = CaseSpec::builtin(id).unwrap();
        let n = invariant_norm(&c);
        ensure(n.value == int(2) && n.in_2z && n.in_two_thirds_z, format!("{id}: <h|h> = {}", n.value))?;
        ensure(shift_ok(&c), format!("{id}: (h|alpha) < -1 for some root"))?;
    }
    Ok("<h|h> = 2 and (h|alpha) >= -1 in all three cases".into())
}

fn minima() -> Result<String, String> {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for id in CASES {
        let c = CaseSpec::builtin(id).unwrap();
        let count = CaseTables::new(&c).map_err(|e| e.to_string())?.tuple_count();
        ensure(count <= 1_000_000, format!("{id}: {count} tuples"))?;
        sizes.push(count);
        for s in [c.clone(), c.negated()] {
            let (m, w) = min_twisted_weight(&s).map_err(|e| e.to_string())?;
            ensure(m == int(1), format!("{}: minimum {m}", s.name))?;
            ensure(w.iter().all(|&i| i == 0), format!("{}: witness {w:?} is not the vacuum", s.name))?;
        }
    }
    ensure(sizes[1] == 1_000_000 && sizes[2] == 10_752, format!("tuple counts {sizes:?}"))?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("minimum 1 at the vacuum for h and -h, tuples {sizes:?}, {t}"))
}

fn abstract_fixed_types() -> Result<String, String> {
    let want = [("e6g2", "E6,3 A2,1^3", 102), ("a2x6", "A2,3^6", 48), ("a5d4", "A2,3^2 U(1) D4,3 A1,1^3", 54)];
    for (id, t, d) in want {
        let c = CaseSpec::builtin(id).unwrap();
        let (fixed, dim) = inner_fixed_subalgebra(&c.ambient(), &c.h).map_err(|e| e.to_string())?;
        ensure(fixed == ty(t) && dim == d, format!("{id}: {fixed} dim {dim}"))?;
    }
    Ok("E6,3A2,1^3/102, A2,3^6/48, A2,3^2U(1)D4,3A1,1^3/54".into())
}

fn dimension_formula() -> Result<String, String> {
    let start = Instant::now();
    let inputs = [(120, 102, 312), (48, 48, 168), (72, 54, 168)];
    for (id, (v1, d0, want)) in CASES.iter().zip(inputs) {
        let c = CaseSpec::builtin(id).unwrap();
        ensure(c.ambient().dim() == v1 as usize, format!("{id}: dim V1 = {}", c.ambient().dim()))?;
        let got = dim_tilde_v1(v1, d0, 0, 0).map_err(|e| e.to_string())?;
        ensure(got == want, format!("{id}: {got}"))?;
    }
    let f = derive_dimension_formula();
    ensure(f == [int(4), int(-36), int(-12), int(24)], format!("formula {f:?}"))?;
    let r = verify_tables(TableFamily::Modular, DEFAULT_TRUNC);
    no_failures(&r)?;
    let coeff_steps = r.steps.iter().filter(|s| s.name.starts_with("f^")).count();
    ensure(coeff_steps == 11, format!("{coeff_steps} S-expansion coefficients"))?;
    ensure(
        r.step("leading Laurent coefficient c_-3").map(|s| s.verdict) == Some(Verdict::Pass),
        "c_-3 = 3^17 not confirmed",
    )?;
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("312/168/168, (4,-36,-12,24), 11 S-coefficients and 3^17 exact, {t}"))
}

fn candidates() -> Result<String, String> {
    let mut a: Vec<String> = enumerate_candidates(312, &int(12)).iter().map(|c| c.value.to_string()).collect();
    a.sort();
    let mut want = vec![ty("A11,1 D7,1 E6,1").to_string(), ty("E6,1^4").to_string()];
    want.sort();
    ensure(a == want, format!("(312,12) gave {a:?}"))?;
    let b = enumerate_candidates(168, &int(6));
    ensure(b.len() == 4, format!("(168,6) gave {} candidates", b.len()))?;
    let targets = [("e6g2", 312, 12, "E6,1^4"), ("a2x6", 168, 6, "D4,1^6"), ("a5d4", 168, 6, "D4,1^6")];
    for (id, dim, r, survivor) in targets {
        let c = CaseSpec::builtin(id).unwrap();
        let (fixed, _) = inner_fixed_subalgebra(&c.ambient(), &c.h).map_err(|e| e.to_string())?;
        let left: Vec<_> = enumerate_candidates(dim, &int(r))
            .into_iter()
            .filter(|x| admits_order3_with_fixed(x, &fixed).is_some())
            .collect();
        ensure(left.len() == 1 && left[0].value == ty(survivor), format!("{id}: survivors {left:?}"))?;
    }
    Ok("(312,12) -> {A11,1D7,1E6,1; E6,1^4}, (168,6) -> 4, survivors E6,1^4 / D4,1^6 / D4,1^6".into())
}

fn lattice_battery() -> Result<String, String> {
    let start = Instant::now();
    no_failures(&verify_tables(TableFamily::Lattice, DEFAULT_TRUNC))?;
    for (name, g) in [
        (LatticeName::E6x4, IsometryName::Sigma6),
        (LatticeName::D4x6, IsometryName::Sigma2),
        (LatticeName::D4x6, IsometryName::Sigma4),
    ] {
        let r = lattice_report(name, g, 17).map_err(|e| e.to_string())?;
        no_failures(&r)?;
        ensure(r.step("fixed type").map(|s| s.verdict) == Some(Verdict::Pass), format!("{g:?}: fixed type unchecked"))?;
    }
    for id in CASES {
        let r = run_case(&CaseFile::builtin(id).unwrap(), 3).map_err(|e| e.to_string())?;
        ensure(r.step("lattice-side fixed type").map(|s| s.verdict) == Some(Verdict::Pass), format!("{id}: cross-match"))?;
    }
    let t = within(start, Duration::from_secs(180))?;
    Ok(format!("det 1, index 9/64, roots 288/144, order 3, fixed types incl. U(1), 4/9, rho 1, 40, 48, 2160, {t}"))
}

fn jacobi(name: LatticeName, samples: usize, seed: u64) -> Result<(), String> {
    let lie = &setup(name).map_err(|e| e.to_string())?.lie;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let [x, y, z] = [0; 3].map(|_| lie.basis_elem(rng.gen_range(0..lie.dim())));
        let mut total = lie.bracket(&x, &lie.bracket(&y, &z));
        total.add_scaled(&lie.bracket(&y, &lie.bracket(&z, &x)), &int(1));
        total.add_scaled(&lie.bracket(&z, &lie.bracket(&x, &y)), &int(1));
        ensure(total.is_zero(), format!("{}: Jacobi fails", name.label()))?;
    }
    Ok(())
}

/// Brute-force minimum over the full weight system against `(Λ|w0 λ)`.
fn lin_min_rows() -> Result<usize, String> {
    let mut rows = 0;
    let tables = [(Family::A, 1, 1, 1, int(1)), (Family::A, 2, 3, 1, int(1)), (Family::A, 5, 3, 3, rat(2, 3))];
    for (f, n, k, node, scale) in tables {
        let a = AffineAlgebra::new(SimpleType::new(f, n).unwrap(), k).unwrap();
        let dir = Weight::fundamental(a.ty(), node).scale(&scale);
        let rs = build_root_system(a.ty());
        for row in enumerate_level_weights(&a).rows {
            let brute = weight_system(&rs, &row.lambda)
                .map_err(|e| e.to_string())?
                .entries
                .iter()
                .map(|(mu, _)| rs.inner(&dir, mu))
                .min()
                .unwrap_or_else(Rational::zero);
            let low = lowest_weight(&rs, &row.lambda).map_err(|e| e.to_string())?;
            let shortcut = rs.inner(&dir, &low);
            let reported = lin_min_over_weights(&rs, &dir, &row.lambda).map_err(|e| e.to_string())?;
            ensure(brute == shortcut && brute == reported, format!("{} {}: {brute} vs {shortcut}", a, row.lambda))?;
            rows += 1;
        }
    }
    Ok(rows)
}

/// Random Weyl word on one component, as an isometry of the ambient coordinates.
fn random_weyl(rng: &mut ChaCha8Rng, t: SimpleType, comps: usize) -> Vec<Vec<i64>> {
    let r = t.rank();
    let n = r * comps;
    let mut w = identity(n);
    for _ in 0..6 {
        let c = rng.gen_range(0..comps);
        let s = reflection(t, rng.gen_range(0..r));
        let mut block = identity(n);
        for i in 0..r {
            for j in 0..r {
                block[r * c + i][r * c + j] = s[i][j];
            }
        }
        w = mat_mul(&w, &block);
    }
    w
}

fn conjugation_invariance(trials: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let isos = [IsometryName::Sigma6, IsometryName::Sigma2, IsometryName::Sigma4];
    let mut bases = Vec::new();
    for g in isos {
        let s = setup(LatticeName::of_isometry(g)).map_err(|e| e.to_string())?;
        let iso = build_isometry(g, &s.lattice).map_err(|e| e.to_string())?;
        let lifted = standard_lift(&s.lie, &iso.matrix).map_err(|e| e.to_string())?;
        let fixed = fixed_subalgebra(&s.lie, &lifted).map_err(|e| e.to_string())?;
        let base = identify_type(&s.lie, &fixed, 1).map_err(|e| e.to_string())?;
        bases.push((s, lifted, base));
    }
    for k in 0..trials {
        let g = isos[k % 3];
        let (s, lifted, base) = &bases[k % 3];
        let w = random_weyl(&mut rng, s.lattice.code.components[0], s.lattice.code.components.len());
        let wl = lift(&s.lie, &w).map_err(|e| e.to_string())?;
        let conj = wl.compose(lifted).compose(&wl.inverse());
        ensure(conj.is_automorphism_of(&s.lie), format!("trial {k}: conjugate is not an automorphism"))?;
        let fixed = fixed_subalgebra(&s.lie, &conj).map_err(|e| e.to_string())?;
        let found = identify_type(&s.lie, &fixed, rng.gen()).map_err(|e| e.to_string())?;
        ensure(&found == base, format!("trial {k} ({g:?}): {found} vs {base}"))?;
    }
    Ok(())
}

fn random_series(rng: &mut ChaCha8Rng) -> PuiseuxSeries {
    let d = [1i64, 2, 3, 6][rng.gen_range(0..4)];
    let start = rng.gen_range(-4i64..4);
    let mut terms = vec![(start, int(rng.gen_range(1..6)))];
    for i in 0..rng.gen_range(1..8) {
        terms.push((start + 1 + i, int(rng.gen_range(-9..=9))));
    }
    let trunc = Rational::new((start + d * rng.gen_range(1i64..=5)).into(), d.into());
    PuiseuxSeries::new(d, terms, trunc)
}

fn series_laws(samples: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for k in 0..samples {
        let (a, b, c) = (random_series(&mut rng), random_series(&mut rng), random_series(&mut rng));
        ensure((&(&a * &b) * &c).agrees_with(&(&a * &(&b * &c))), format!("sample {k}: associativity"))?;
        ensure((&a * &b).agrees_with(&(&b * &a)), format!("sample {k}: commutativity"))?;
        ensure((&a * &(&b + &c)).agrees_with(&(&(&a * &b) + &(&a * &c))), format!("sample {k}: distributivity"))?;
        let inv = a.inverse().map_err(|e| e.to_string())?;
        let one = PuiseuxSeries::constant(int(1), int(1000));
        ensure((&a * &inv).agrees_with(&one), format!("sample {k}: inverse"))?;
    }
    let one = PuiseuxSeries::constant(int(1), int(1000));
    let f = hauptmodul_f(DEFAULT_TRUNC).map_err(|e| e.to_string())?;
    ensure((&f * &f.inverse().map_err(|e| e.to_string())?).agrees_with(&one), "f * f^-1 != 1")?;
    let fm1 = f_power_at_S(-1, DEFAULT_TRUNC).map_err(|e| e.to_string())?;
    let fm3 = f_power_at_S(-3, DEFAULT_TRUNC).map_err(|e| e.to_string())?;
    ensure((&(&fm1 * &fm1) * &fm1).agrees_with(&fm3), "(f^-1(S tau))^3 != f^-3(S tau)")?;
    Ok(())
}

fn properties() -> Result<String, String> {
    let start = Instant::now();
    jacobi(LatticeName::E6x4, 10_000, 1)?;
    jacobi(LatticeName::D4x6, 10_000, 2)?;
    let rows = lin_min_rows()?;
    conjugation_invariance(20)?;
    series_laws(200)?;
    Ok(format!(
        "Jacobi 2x10^4, lin_min = w0 on {rows} A-type rows, 20 conjugations, 200 series samples, f f^-1 = 1, cube law, {:.1?}",
        start.elapsed()
    ))
}

fn discrepancies() -> Result<String, String> {
    let r = verify_tables(TableFamily::Modular, DEFAULT_TRUNC);
    let s = r.step("f coefficient of q^1").ok_or("missing f coefficient step")?;
    ensure(s.verdict == Verdict::DiscrepancyDocumented, format!("f coefficient verdict {}", s.verdict))?;
    let expected = s.expected.clone().unwrap_or_default();
    ensure(s.computed.contains("54") && expected.contains("66"), format!("{} / {expected}", s.computed))?;
    for id in ["a2x6", "a5d4"] {
        let r = run_case(&CaseFile::builtin(id).unwrap(), 0).map_err(|e| e.to_string())?;
        let s = r.step("candidate weight-one algebras").ok_or("missing candidate step")?;
        ensure(s.verdict == Verdict::DiscrepancyDocumented, format!("{id}: C5 verdict {}", s.verdict))?;
        let expected = s.expected.clone().unwrap_or_default();
        ensure(s.computed.contains("C5,1") && expected.contains("C5,2"), format!("{id}: {} / {expected}", s.computed))?;
        ensure(r.passed(), format!("{id}: documented discrepancy turned into a failure"))?;
    }
    Ok("f q^1: 54 vs displayed 66; C5 level: C5,1 vs displayed C5,2".into())
}

fn main() -> std::process::ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 9] = [
        ("module tables", tables),
        ("twist norms and shifts", norms_and_shifts),
        ("twisted minima", minima),
        ("abstract fixed subalgebras", abstract_fixed_types),
        ("dimension formula", dimension_formula),
        ("candidate enumeration", candidates),
        ("lattice battery", lattice_battery),
        ("property suites", properties),
        ("documented discrepancies", discrepancies),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
