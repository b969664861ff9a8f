//! Cross-layer verification: formulas vs. series vs. census, run over a
//! configurable grid and reported one check at a time.

use num_bigint::BigInt;

use crate::census::{census_report, GroupSpec};
use crate::count;
use crate::error::Result;
use crate::series;

/// Grid the verification suite runs over.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Formula identities are checked for ranks `0..=max_n`.
    pub max_n: usize,
    /// Prime powers the formula and series identities are checked at.
    pub qs: Vec<u64>,
    /// Truncation order for the series identities.
    pub order: usize,
    /// Groups the census is run on.
    pub census: Vec<GroupSpec>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 15,
            qs: vec![2, 3, 4, 5, 7, 8, 9],
            order: 24,
            census: default_census_grid(),
        }
    }
}

/// The census grid: even and odd q, odd and even rank, both families.
pub fn default_census_grid() -> Vec<GroupSpec> {
    vec![
        GroupSpec::gl(2, 2),
        GroupSpec::gl(2, 3),
        GroupSpec::gl(2, 4),
        GroupSpec::gl(2, 5),
        GroupSpec::gl(3, 2),
        GroupSpec::gl(3, 3),
        GroupSpec::unitary(1, 3),
        GroupSpec::unitary(2, 2),
        GroupSpec::unitary(2, 3),
        GroupSpec::unitary(3, 2),
    ]
}

/// Outcome of one identity check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub params: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn pass(name: &'static str, params: String) -> Check {
        Check {
            name,
            params,
            passed: true,
            detail: None,
        }
    }

    fn fail(name: &'static str, params: String, detail: String) -> Check {
        Check {
            name,
            params,
            passed: false,
            detail: Some(detail),
        }
    }

    fn from_result(name: &'static str, params: String, r: Result<Option<String>>) -> Check {
        match r {
            Ok(None) => Check::pass(name, params),
            Ok(Some(detail)) => Check::fail(name, params, detail),
            Err(e) => Check::fail(name, params, e.to_string()),
        }
    }
}

fn mismatch(n: usize, got: &BigInt, want: &BigInt) -> Option<String> {
    if got == want {
        None
    } else {
        Some(format!("coefficient of u^{n}: {got} != {want}"))
    }
}

fn check_real_series(q: u64, max_n: usize, order: usize) -> Result<Option<String>> {
    let order = order.max(max_n);
    let s = series::gen_real_classes(q, order)?;
    for n in 0..=max_n {
        if let Some(d) = mismatch(n, s.coeff(n), &count::real_total(q, n)?) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn check_even_series(q: u64, max_n: usize, order: usize) -> Result<Option<String>> {
    let order = order.max(max_n);
    let s = series::gen_even_types(q, order)?;
    for n in 0..=max_n {
        if let Some(d) = mismatch(n, s.coeff(n), &count::even_multiplicity_total(q, n)?) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn check_theorem_series(q: u64, max_n: usize, order: usize) -> Result<Option<String>> {
    let order = order.max(max_n);
    let s = series::gen_theorem(q, order)?;
    for n in 0..=max_n {
        let pgl = count::pgl_total(q, n)?;
        let sl = count::sl_total(q, n)?;
        if pgl != sl {
            return Ok(Some(format!(
                "n={n}: projective {pgl} != determinant-one {sl}"
            )));
        }
        if let Some(d) = mismatch(n, s.coeff(n), &pgl) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn check_det_one_forms(q: u64, max_n: usize) -> Result<Option<String>> {
    for n in 0..=max_n {
        for nu in crate::partition::partitions(n)? {
            let raw = count::sl_type_count_raw(q, &nu);
            let revised = count::sl_type_count(q, &nu);
            if raw != revised {
                return Ok(Some(format!(
                    "type {nu}: three-case {raw} != two-case {revised}"
                )));
            }
        }
    }
    Ok(None)
}

fn check_odd_factor(q: u64, order: usize) -> Result<Option<String>> {
    for i in 1..=(order + 2) / 4 + 1 {
        let lhs = series::odd_factor_lhs(q, i, order);
        let rhs = series::odd_factor_rhs(q, i, order)?;
        if lhs != rhs {
            return Ok(Some(format!("factor index i={i}")));
        }
    }
    Ok(None)
}

fn check_alternating_factor(q: u64, order: usize) -> Result<Option<String>> {
    for i in 1..=(order + 2) / 4 + 1 {
        let lhs = series::alternating_factor_lhs(q, i, order);
        let rhs = series::alternating_factor_rhs(q, i, order)?;
        if lhs != rhs {
            return Ok(Some(format!("factor index i={i}")));
        }
    }
    Ok(None)
}

fn check_collapse(order: usize) -> Result<Option<String>> {
    let factors = 2 * order;
    let (lhs, rhs) = series::square_factor_collapse_sides(factors, factors)?;
    for n in 0..=order.min(factors / 2) {
        if let Some(d) = mismatch(n, lhs.coeff(n), rhs.coeff(n)) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn check_census(spec: &GroupSpec, order: usize) -> Result<Option<String>> {
    let report = census_report(spec)?;
    let order = order.max(spec.n);
    let real_series = series::gen_real_classes(spec.q, order)?;
    let theorem_series = series::gen_theorem(spec.q, order)?;
    let real = BigInt::from(report.real_classes);
    let det_one = BigInt::from(report.real_in_det_one);
    let projective = BigInt::from(report.projective_real);
    if &real != real_series.coeff(spec.n) {
        return Ok(Some(format!(
            "real classes: census {real} != series {}",
            real_series.coeff(spec.n)
        )));
    }
    if &det_one != theorem_series.coeff(spec.n) {
        return Ok(Some(format!(
            "real in determinant-one subgroup: census {det_one} != series {}",
            theorem_series.coeff(spec.n)
        )));
    }
    if &projective != theorem_series.coeff(spec.n) {
        return Ok(Some(format!(
            "projective real classes: census {projective} != series {}",
            theorem_series.coeff(spec.n)
        )));
    }
    Ok(None)
}

/// Runs the whole suite; the returned checks are in grid order.
pub fn run_verification(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    for &q in &opts.qs {
        checks.push(Check::from_result(
            "real_classes_series_matches_type_sums",
            format!("q={q}, n<={}", opts.max_n),
            check_real_series(q, opts.max_n, opts.order),
        ));
    }
    for &q in &opts.qs {
        if q % 2 == 1 {
            checks.push(Check::from_result(
                "even_type_series_matches_even_multiplicity_sums",
                format!("q={q}, n<={}", opts.max_n),
                check_even_series(q, opts.max_n, opts.order),
            ));
        }
    }
    for &q in &opts.qs {
        checks.push(Check::from_result(
            "projective_equals_determinant_one_and_series",
            format!("q={q}, n<={}", opts.max_n),
            check_theorem_series(q, opts.max_n, opts.order),
        ));
    }
    for &q in &opts.qs {
        if q % 2 == 1 {
            checks.push(Check::from_result(
                "determinant_one_count_forms_agree",
                format!("q={q}, n<={}", opts.max_n.min(12)),
                check_det_one_forms(q, opts.max_n.min(12)),
            ));
        }
    }
    for &q in &opts.qs {
        if q % 2 == 1 {
            checks.push(Check::from_result(
                "odd_index_factor_identity",
                format!("q={q}, order {}", opts.order),
                check_odd_factor(q, opts.order),
            ));
            checks.push(Check::from_result(
                "alternating_factor_identity",
                format!("q={q}, order {}", opts.order),
                check_alternating_factor(q, opts.order),
            ));
        }
    }
    checks.push(Check::from_result(
        "square_factor_product_collapse",
        format!("order {}", opts.order),
        check_collapse(opts.order),
    ));
    for spec in &opts.census {
        checks.push(Check::from_result(
            "census_matches_series",
            spec.to_string(),
            check_census(spec, opts.order),
        ));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let opts = VerifyOptions {
            max_n: 6,
            qs: vec![2, 3],
            order: 12,
            census: vec![GroupSpec::gl(2, 2), GroupSpec::gl(2, 3)],
        };
        let checks = run_verification(&opts);
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.passed, "{} ({}): {:?}", c.name, c.params, c.detail);
        }
    }

    #[test]
    fn check_order_is_deterministic() {
        let opts = VerifyOptions {
            max_n: 3,
            qs: vec![2, 3],
            order: 8,
            census: vec![GroupSpec::gl(2, 2)],
        };
        let a: Vec<String> = run_verification(&opts)
            .iter()
            .map(|c| format!("{}:{}", c.name, c.params))
            .collect();
        let b: Vec<String> = run_verification(&opts)
            .iter()
            .map(|c| format!("{}:{}", c.name, c.params))
            .collect();
        assert_eq!(a, b);
    }
}
