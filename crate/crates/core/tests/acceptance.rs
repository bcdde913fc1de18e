//! Acceptance gate. Runs every criterion at zero tolerance, prints one
//! PASS/FAIL line each and exits nonzero if any fails.

mod common;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use loopgrass::algebra::{Field, LaurentMatrix, LaurentPoly};
use loopgrass::cells::{
    cell_dim, cell_series, cell_series_per_component, min_coset_length_oracle,
    product_formula_series,
};
use loopgrass::lattice_model::{
    beta_based_loop, birkhoff_factorize, cartan_coweight, count_lattices_in_window,
    find_chart_translate, lattice_of, predicted_window_count, torus_point, BirkhoffOutcome,
};
use loopgrass::motive::{motive_of_gr, motive_of_stage};
use loopgrass::rootdata::RootSystem;
use loopgrass::Error;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn sys(s: &str) -> RootSystem {
    s.parse().unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed <= limit {
        Ok(format!("{:.2}s", elapsed.as_secs_f64()))
    } else {
        Err(format!(
            "took {:.2}s, limit {:.0}s",
            elapsed.as_secs_f64(),
            limit.as_secs_f64()
        ))
    }
}

fn sl2_series() -> Outcome {
    let start = Instant::now();
    let s = cell_series(&sys("A1"), 20);
    if s.coeffs() != [1u64; 21] {
        return Err(format!("got {}", s.coefficient_list()));
    }
    within(start.elapsed(), Duration::from_secs(1)).map(|t| format!("21 ones, {t}"))
}

fn product_formula() -> Outcome {
    let start = Instant::now();
    for name in ["A1", "A2", "A3", "B2", "C2", "C3"] {
        let s = sys(name);
        let cells = cell_series(&s, 12);
        let product = product_formula_series(&s, 12).unwrap();
        if cells != product {
            return Err(format!(
                "{name}: cells {} vs product {}",
                cells.coefficient_list(),
                product.coefficient_list()
            ));
        }
    }
    within(start.elapsed(), Duration::from_secs(10)).map(|t| format!("6 types to degree 12, {t}"))
}

fn formula_vs_oracle() -> Outcome {
    let mut checked = 0;
    for name in ["A1", "A2", "A3", "B2", "C2"] {
        let s = sys(name);
        for mu in s.enumerate_coweights(8) {
            checked += 1;
            let (f, o) = (cell_dim(&s, &mu), min_coset_length_oracle(&s, &mu).unwrap());
            if f != o {
                return Err(format!("{name} mu={mu}: formula {f}, oracle {o}"));
            }
        }
    }
    Ok(format!("{checked} coweights, 0 mismatches"))
}

fn gl_components() -> Outcome {
    let sl = cell_series(&sys("A2sl"), 8);
    let per = cell_series_per_component(&sys("A2gl"), 8, -2..=2);
    for (c, s) in &per {
        if *s != sl {
            return Err(format!(
                "component {c}: {} vs {}",
                s.coefficient_list(),
                sl.coefficient_list()
            ));
        }
    }
    Ok(format!("components -2..2 equal {}", sl.coefficient_list()))
}

fn lattice_cosets() -> Outcome {
    let mut r = rng(5);
    for field in [Field::Rational, f5()] {
        for trial in 0..100 {
            let n = 2 + trial % 2;
            let m = general_loop(field, n, &mut r);
            let b = positive_unit(field, n, 2, &mut r);
            let mb = m.mul(&b).unwrap();
            if lattice_of(&mb).unwrap() != lattice_of(&m).unwrap() {
                return Err(format!(
                    "latticeOf moved under a right factor over {field}:\n{m}"
                ));
            }
            let left = positive_unit(field, n, 2, &mut r).mul(&mb).unwrap();
            if cartan_coweight(&left).unwrap() != cartan_coweight(&m).unwrap() {
                return Err(format!("cartanCoweight moved over {field}:\n{m}"));
            }
        }
    }
    for _ in 0..50 {
        let n = r.gen_range(1..=4);
        let mu = coweight(n, 4, &mut r);
        if cartan_coweight(&torus_point(f5(), &mu)).unwrap() != sorted_desc(&mu) {
            return Err(format!("torus point {mu}"));
        }
    }
    for field in [Field::Rational, f5()] {
        for _ in 0..25 {
            let n = r.gen_range(2..=3);
            let mu = coweight(n, 3, &mut r);
            let m = double_coset_rep(field, &mu, &mut r);
            if cartan_coweight(&m).unwrap() != sorted_desc(&mu) {
                return Err(format!("B1 t^{mu} B2 over {field}"));
            }
        }
    }
    Ok("200 coset trials, 50 torus points, 50 double cosets".into())
}

fn birkhoff() -> Outcome {
    let mut r = rng(6);
    let mut inconsistencies = 0;
    let mut tally = |res: Result<BirkhoffOutcome, Error>| -> Result<BirkhoffOutcome, String> {
        match res {
            Err(Error::InternalInconsistency(msg)) => {
                inconsistencies += 1;
                Err(msg)
            }
            other => other.map_err(|e| e.to_string()),
        }
    };
    for trial in 0..100 {
        let field = if trial % 2 == 0 {
            f5()
        } else {
            Field::Rational
        };
        let n = 2 + trial % 2;
        let a = negative_based(field, n, 2, &mut r);
        let b = positive_unit(field, n, 2, &mut r);
        let m = a.mul(&b).unwrap();
        match tally(birkhoff_factorize(&m))? {
            BirkhoffOutcome::Factored(w) => {
                if !(w.is_valid_for(&m)
                    && w.product() == m
                    && w.negative.constant_term().is_identity())
                {
                    return Err(format!("invalid witness for\n{m}"));
                }
            }
            BirkhoffOutcome::NotInBigCell => return Err(format!("A·B rejected:\n{m}")),
        }
    }
    let q = Field::Rational;
    let mut negatives = vec![LaurentMatrix::diagonal_t_powers(q, &[1, -1])];
    for _ in 0..30 {
        let n = r.gen_range(1..=3);
        let mu = coweight(n, 2, &mut r);
        if !mu.is_zero() {
            negatives.push(torus_point(f5(), &mu));
        }
    }
    for m in &negatives {
        if tally(birkhoff_factorize(m))? != BirkhoffOutcome::NotInBigCell {
            return Err(format!("torus point accepted:\n{m}"));
        }
    }
    // mixed loops exercise both answers of the decision procedure
    for _ in 0..100 {
        let n = r.gen_range(2..=3);
        tally(birkhoff_factorize(&general_loop(f5(), n, &mut r)))?;
    }
    if inconsistencies > 0 {
        return Err(format!("{inconsistencies} InternalInconsistency events"));
    }
    Ok(format!(
        "100 witnesses, {} negatives, 0 InternalInconsistency",
        negatives.len()
    ))
}

/// Random `GL_2(F_5[t, t^-1])` loop with every exponent in `[-2, 2]`.
fn small_loop(r: &mut TestRng) -> LaurentMatrix {
    let field = f5();
    loop {
        let e = |r: &mut TestRng, i, j| {
            LaurentMatrix::elementary(field, 2, i, j, laurent(field, -1, 1, r))
        };
        let mu = coweight(2, 1, r);
        let c = LaurentMatrix::diagonal(
            field,
            vec![
                LaurentPoly::constant(nonzero_scalar(field, r)),
                LaurentPoly::constant(nonzero_scalar(field, r)),
            ],
        );
        let m = e(r, 0, 1)
            .mul(&e(r, 1, 0))
            .and_then(|x| x.mul(&torus_point(field, &mu)))
            .and_then(|x| x.mul(&e(r, 0, 1)))
            .and_then(|x| x.mul(&c))
            .unwrap();
        let ok = m.min_valuation().is_none_or(|v| v >= -2) && m.max_degree().is_none_or(|d| d <= 2);
        if ok {
            return m;
        }
    }
}

fn chart_covering() -> Outcome {
    let mut r = rng(7);
    let mut translated = 0;
    for _ in 0..50 {
        let m = small_loop(&mut r);
        let chart = find_chart_translate(&m, 6).map_err(|e| format!("{e} for\n{m}"))?;
        if chart.reconstruct() != m || !chart.witness.is_valid_for(&chart.witness.product()) {
            return Err(format!("bad chart for\n{m}"));
        }
        translated += usize::from(!chart.nu.is_zero());
    }
    Ok(format!(
        "50 loops covered, {translated} needed a nonzero translate"
    ))
}

fn beta_map() -> Outcome {
    let mut r = rng(8);
    let one = f5().one();
    for _ in 0..100 {
        let g = general_loop(f5(), 2, &mut r);
        let b = beta_based_loop(&g).unwrap();
        if !b.eval(&one).is_identity() {
            return Err(format!("beta(g)(1) != I for\n{g}"));
        }
        if beta_based_loop(&b).unwrap() != b {
            return Err(format!("beta not idempotent on\n{g}"));
        }
        let c = LaurentMatrix::from_scalar_matrix(&positive_unit(f5(), 2, 0, &mut r).eval(&one));
        if beta_based_loop(&c.mul(&g).unwrap()).unwrap() != b {
            return Err(format!("beta not left-constant invariant on\n{g}"));
        }
    }
    Ok("100 loops".into())
}

fn point_counts() -> Outcome {
    let start = Instant::now();
    let mut got = Vec::new();
    for (q, expect) in [(2u32, 7u64), (3, 13)] {
        let counted = count_lattices_in_window(2, q, 1, 0).map_err(|e| e.to_string())?;
        let predicted = predicted_window_count(2, q as u64, 1, 0).map_err(|e| e.to_string())?;
        if counted != predicted || counted != expect {
            return Err(format!(
                "q={q}: enumerated {counted}, cells {predicted}, expected {expect}"
            ));
        }
        got.push(format!("q={q}: {counted}"));
    }
    within(start.elapsed(), Duration::from_secs(30)).map(|t| format!("{}, {t}", got.join(", ")))
}

fn golden_dir() -> PathBuf {
    std::env::var_os("LOOPGRASS_GOLDEN_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden"))
}

fn motive_goldens() -> Outcome {
    let cases = [
        (
            "motive_A1sl_twist6_char0.json",
            motive_of_gr(&sys("A1sl"), 6, Field::Rational),
        ),
        (
            "motive_C2_twist6_char2.json",
            motive_of_gr(&sys("C2"), 6, Field::prime(2).unwrap()),
        ),
    ];
    for (file, motive) in &cases {
        let path = golden_dir().join(file);
        let want =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if want.trim_end() != motive.to_json() {
            return Err(format!(
                "{file} differs:\n  want {}\n  got  {}",
                want.trim_end(),
                motive.to_json()
            ));
        }
    }
    let a2 = sys("A2sl");
    let q = Field::Rational;
    for i in 0..=10i64 {
        let now = motive_of_stage(&a2, i, q).unwrap().poincare();
        let before = motive_of_stage(&a2, i - 1, q).unwrap().poincare();
        let new_cells = motive_of_gr(&a2, i as u64, q).multiplicity(i as u64);
        for d in 0..=i as usize {
            let expect = before.coeff(d) + if d == i as usize { new_cells } else { 0 };
            if now.coeff(d) != expect {
                return Err(format!(
                    "stage {i}, degree {d}: {} vs {expect}",
                    now.coeff(d)
                ));
            }
        }
    }
    Ok("2 goldens match, stage additivity for i <= 10".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("SL2 series", sl2_series),
        ("product-formula identity", product_formula),
        ("formula-vs-oracle gate", formula_vs_oracle),
        ("GL_n component identity", gl_components),
        ("lattice/coset correctness", lattice_cosets),
        ("Birkhoff factorisation", birkhoff),
        ("chart covering", chart_covering),
        ("beta-map properties", beta_map),
        ("point-count bridge", point_counts),
        ("motive goldens and stage additivity", motive_goldens),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
