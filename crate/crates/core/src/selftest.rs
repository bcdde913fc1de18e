//! Oracle suites shared by the `selftest` command and CI.

use std::path::Path;

use crate::algebra::Field;
use crate::cells::{
    cell_dim, cell_series, cell_series_per_component, min_coset_length_oracle,
    product_formula_series,
};
use crate::lattice_model::{count_lattices_in_window, predicted_window_count};
use crate::motive::{motive_of_gr, motive_of_stage};
use crate::rootdata::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Golden motive files: name, system, max twist, characteristic, contents.
const GOLDENS: [(&str, &str, u64, u64, &str); 2] = [
    (
        "motive_A1sl_twist6_char0.json",
        "A1sl",
        6,
        0,
        include_str!("../tests/golden/motive_A1sl_twist6_char0.json"),
    ),
    (
        "motive_C2_twist6_char2.json",
        "C2",
        6,
        2,
        include_str!("../tests/golden/motive_C2_twist6_char2.json"),
    ),
];

fn sys(s: &str) -> RootSystem {
    s.parse().expect("built-in system name")
}

fn suite(name: &'static str, body: impl FnOnce() -> Result<String, String>) -> SuiteResult {
    match body() {
        Ok(detail) => SuiteResult {
            name,
            passed: true,
            detail,
        },
        Err(detail) => SuiteResult {
            name,
            passed: false,
            detail,
        },
    }
}

fn cell_dim_oracle() -> Result<String, String> {
    let mut checked = 0;
    for name in ["A1", "A2", "A3", "B2", "C2", "D3"] {
        let s = sys(name);
        for mu in s.enumerate_coweights(8) {
            let oracle = min_coset_length_oracle(&s, &mu).map_err(|e| e.to_string())?;
            if cell_dim(&s, &mu) != oracle {
                return Err(format!(
                    "{name} {mu}: formula {} vs oracle {oracle}",
                    cell_dim(&s, &mu)
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} coweights"))
}

fn product_formula() -> Result<String, String> {
    for name in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4"] {
        let s = sys(name);
        let product = product_formula_series(&s, 12).map_err(|e| e.to_string())?;
        let cells = cell_series(&s, 12);
        if cells != product {
            return Err(format!(
                "{name}: {} vs {}",
                cells.coefficient_list(),
                product.coefficient_list()
            ));
        }
    }
    let sl = cell_series(&sys("A2sl"), 8);
    for (c, s) in cell_series_per_component(&sys("A2gl"), 8, -2..=2) {
        if s != sl {
            return Err(format!("A2gl component {c}: {}", s.coefficient_list()));
        }
    }
    Ok("8 types to degree 12, A2gl components -2..2".into())
}

fn point_counts() -> Result<String, String> {
    let cases = [
        (2usize, 2u32, 1usize, 0i64),
        (2, 3, 1, 0),
        (2, 2, 1, 1),
        (2, 2, 1, -1),
        (3, 2, 1, 0),
        (2, 2, 2, 0),
    ];
    for (n, q, w, c) in cases {
        let counted = count_lattices_in_window(n, q, w, c).map_err(|e| e.to_string())?;
        let predicted =
            predicted_window_count(n, q as u64, w as i64, c).map_err(|e| e.to_string())?;
        if counted != predicted {
            return Err(format!(
                "n={n} q={q} N={w} component {c}: {counted} vs {predicted}"
            ));
        }
    }
    Ok(format!("{} windows", cases.len()))
}

fn goldens(dir: Option<&Path>) -> Result<String, String> {
    for (file, system, twist, char, embedded) in GOLDENS {
        let want = match dir {
            Some(d) => std::fs::read_to_string(d.join(file)).map_err(|e| format!("{file}: {e}"))?,
            None => embedded.to_string(),
        };
        let field = if char == 0 {
            Field::Rational
        } else {
            Field::prime(char).map_err(|e| e.to_string())?
        };
        let got = motive_of_gr(&sys(system), twist, field).to_json();
        if want.trim_end() != got {
            return Err(format!("{file}: got {got}"));
        }
    }
    let a2 = sys("A2sl");
    for i in 0..=10i64 {
        let now = motive_of_stage(&a2, i, Field::Rational).map_err(|e| e.to_string())?;
        let before = motive_of_stage(&a2, i - 1, Field::Rational).map_err(|e| e.to_string())?;
        let new = cell_series(&a2, i as u64).coeff(i as usize);
        if now.multiplicity(i as u64) != before.multiplicity(i as u64) + new {
            return Err(format!("stage additivity fails at {i}"));
        }
    }
    Ok(format!("{} goldens, stages 0..10", GOLDENS.len()))
}

/// Runs every suite. Golden files come from `golden_dir` when given, else
/// from the copies built into the library.
pub fn run_suites(golden_dir: Option<&Path>) -> Vec<SuiteResult> {
    vec![
        suite("cell-dim-vs-oracle", cell_dim_oracle),
        suite("series-vs-product-formula", product_formula),
        suite("point-counts", point_counts),
        suite("motive-goldens", || goldens(golden_dir)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for r in run_suites(None) {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn missing_golden_dir_fails() {
        let r = run_suites(Some(Path::new("/nonexistent/golden")));
        assert!(
            !r.iter()
                .find(|s| s.name == "motive-goldens")
                .unwrap()
                .passed
        );
    }
}
