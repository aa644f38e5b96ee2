//! Built-in reference cases: curves and spaces with independently known
//! parameter values, each rerun from its JSON config and compared line by
//! line. The CLI exposes them as `paper-examples`; the acceptance suite
//! reuses them.
//!
//! A handful of literature values for the length-18 genus-1 code are refuted
//! by exhaustive search (see the ex5.4 and ex6.3 notes inline); those lines
//! carry the `ExpectedDivergence` status and do not fail the case.

use std::fmt::Debug;

use crate::code::{FibreSelection, GonalityPolicy, LrcCode, WorkCaps};
use crate::config::CodeConfig;
use crate::funcspace::VSpec;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    ExpectedDivergence,
}

#[derive(Clone, Debug)]
pub struct CheckLine {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub status: CheckStatus,
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub name: &'static str,
    pub title: &'static str,
    pub lines: Vec<CheckLine>,
}

impl CaseReport {
    /// Divergence lines are pre-declared and do not count as failures.
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != CheckStatus::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = format!("case {} — {}\n", self.name, self.title);
        for line in &self.lines {
            let tag = match line.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::ExpectedDivergence => "expected-divergence",
            };
            out.push_str(&format!(
                "  [{tag}] {}: expected {}, got {}\n",
                line.label, line.expected, line.actual
            ));
        }
        out
    }
}

fn check<T: PartialEq + Debug>(lines: &mut Vec<CheckLine>, label: &str, expected: T, actual: T) {
    let status = if expected == actual { CheckStatus::Pass } else { CheckStatus::Fail };
    lines.push(CheckLine {
        label: label.to_string(),
        expected: format!("{expected:?}"),
        actual: format!("{actual:?}"),
        status,
    });
}

/// A value the source states but exhaustive computation contradicts; passes
/// when the two agree after all, otherwise reported without failing.
fn diverging<T: PartialEq + Debug>(
    lines: &mut Vec<CheckLine>,
    label: &str,
    stated: T,
    computed: T,
) {
    let status =
        if stated == computed { CheckStatus::Pass } else { CheckStatus::ExpectedDivergence };
    lines.push(CheckLine {
        label: label.to_string(),
        expected: format!("{stated:?} (as published)"),
        actual: format!("{computed:?}"),
        status,
    });
}

pub const CASE_NAMES: [&str; 9] =
    ["ex3.3a", "ex3.3b", "ex3.3c", "ex3.3d", "ex3.8", "ex5.4", "ex6.1", "ex6.2", "ex6.3"];

pub fn run_case(name: &str) -> Option<CaseReport> {
    match name {
        "ex3.3a" => Some(rational_cubic_codes()),
        "ex3.3b" => Some(elliptic_complete_family()),
        "ex3.3c" => Some(hermitian_flat()),
        "ex3.3d" => Some(hermitian_enlarged()),
        "ex3.8" => Some(elliptic_v8_defect()),
        "ex5.4" => Some(elliptic_v8_weights()),
        "ex6.1" => Some(kondo_126()),
        "ex6.2" => Some(quotient_y_176()),
        "ex6.3" => Some(quotient_x_168()),
        _ => None,
    }
}

pub fn run_all() -> Vec<CaseReport> {
    CASE_NAMES.iter().map(|n| run_case(n).expect("known case")).collect()
}

fn build(json: &str) -> (LrcCode, GonalityPolicy) {
    let cfg = CodeConfig::from_json(json).expect("embedded config parses");
    let built = cfg.build().expect("embedded config builds");
    (built.code, built.policy)
}

const RATIONAL_CUBIC: &str = r#"{
    "field": {"p": 13, "m": 1},
    "curve": {"A": [0, 1], "B": [0, 0, 0, 1]},
    "orientation": "y",
    "space": {"epsilons": [1, 1], "ells": [0, 0]},
    "fibres": [1, 8, 12]
}"#;

/// y = x³ over GF(13): three split fibres give [9, k] codes of locality 2
/// meeting the Singleton-type bound for k = 2, 4, 6.
fn rational_cubic_codes() -> CaseReport {
    let mut lines = Vec::new();
    let caps = WorkCaps::default();
    let (code, _) = build(RATIONAL_CUBIC);
    check(&mut lines, "affine points", 13, code.curve().points().len());
    let fibre_xs: Vec<Vec<u32>> = code
        .fibres()
        .iter()
        .map(|f| f.points.iter().map(|p| p.x.value()).collect())
        .collect();
    check(
        &mut lines,
        "fibre x-sets",
        vec![vec![1, 3, 9], vec![2, 5, 6], vec![4, 10, 12]],
        fibre_xs,
    );
    for (ells, expect_k, expect_d) in [([0u64, 0], 2u64, 8u64), ([1, 1], 4, 5), ([2, 2], 6, 2)] {
        let vspec = VSpec::new(
            code.curve(),
            code.orientation(),
            None,
            vec![true, true],
            ells.to_vec(),
        )
        .unwrap();
        let small = LrcCode::build(
            code.curve().clone(),
            vspec,
            FibreSelection::Explicit(vec![1, 8, 12]),
        )
        .unwrap();
        check(&mut lines, &format!("k (ells {ells:?})"), expect_k, small.k());
        let d = small.brute_min_distance(&caps).unwrap();
        check(&mut lines, &format!("exact d (k={expect_k})"), expect_d, d);
        let defect = small.n() + 2 - (small.k() + d + small.k().div_ceil(small.locality()));
        check(&mut lines, &format!("defect (k={expect_k})"), 0, defect);
    }
    CaseReport { name: "ex3.3a", title: "y = x³ over GF(13), three fibres", lines }
}

const ELLIPTIC_BASE: &str = r#"{
    "field": {"p": 13, "m": 1},
    "curve": {"A": [0, 0, 1], "B": [2, 0, 0, 1]},
    "orientation": "y",
    "space": {"complete_m": 8},
    "assert_weierstrass": true
}"#;

/// y² = x³ + 2 over GF(13): the five complete spaces below n are all
/// defect-0 codes of length 18 and locality 2.
fn elliptic_complete_family() -> CaseReport {
    let mut lines = Vec::new();
    let caps = WorkCaps::default();
    let (code, _) = build(ELLIPTIC_BASE);
    check(&mut lines, "affine points", 18, code.curve().points().len());
    let split = code.fibres().len();
    check(&mut lines, "split fibres", 6, split);
    check(&mut lines, "fibre size", 3usize, code.fibres()[0].points.len());
    for (m, expect_k, expect_d) in
        [(3u64, 3u64, 15u64), (6, 5, 12), (9, 7, 9), (12, 9, 6), (15, 11, 3)]
    {
        let vspec = VSpec::complete(code.curve(), code.orientation(), None, m).unwrap();
        let c = LrcCode::build(code.curve().clone(), vspec, FibreSelection::AllSplit).unwrap();
        check(&mut lines, &format!("k (m={m})"), expect_k, c.k());
        let d = c.brute_min_distance(&caps).unwrap();
        check(&mut lines, &format!("exact d (m={m})"), expect_d, d);
        let defect = c.n() + 2 - (c.k() + d + c.k().div_ceil(c.locality()));
        check(&mut lines, &format!("defect (m={m})"), 0, defect);
    }
    CaseReport { name: "ex3.3b", title: "y² = x³ + 2 over GF(13), complete spaces", lines }
}

const HERMITIAN_FLAT: &str = r#"{
    "field": {"p": 2, "m": 4},
    "curve": {"A": [0, 0, 0, 0, 0, 1], "B": [0, 1, 0, 0, 1]},
    "orientation": "y",
    "space": {"epsilons": [1, 1, 1], "ells": [13, 13, 13]}
}"#;

/// y⁵ = x⁴ + x over GF(16) with equal degree caps: a [64, 42] code.
fn hermitian_flat() -> CaseReport {
    let mut lines = Vec::new();
    let (code, policy) = build(HERMITIAN_FLAT);
    let report = code.params(&policy).unwrap();
    check(&mut lines, "n", 64, report.n);
    check(&mut lines, "k", 42, report.k);
    check(&mut lines, "m", 62, report.m);
    check(&mut lines, "d lower bound", 2, report.d_lower.value);
    check(&mut lines, "defect bound", 8, report.defect_upper);
    CaseReport { name: "ex3.3c", title: "y⁵ = x⁴ + x over GF(16), equal caps", lines }
}

const HERMITIAN_ENLARGED: &str = r#"{
    "field": {"p": 2, "m": 4},
    "curve": {"A": [0, 0, 0, 0, 0, 1], "B": [0, 1, 0, 0, 1]},
    "orientation": "y",
    "space": {"epsilons": [1, 1, 1], "ells": [16, 15, 14]},
    "gonality_overrides": {"2": 4}
}"#;

/// Enlarging the caps past the field size gives an abundant [64, 47] code
/// whose evaluation kernel is spanned by y¹⁶ − y; the second gonality
/// override 4 keeps the distance bound at 2 and the defect at 1.
fn hermitian_enlarged() -> CaseReport {
    let mut lines = Vec::new();
    let (code, policy) = build(HERMITIAN_ENLARGED);
    let report = code.params(&policy).unwrap();
    check(&mut lines, "dim V", 48, report.dim_v);
    check(&mut lines, "m", 66, report.m);
    check(&mut lines, "abundance w", 1, report.w);
    check(&mut lines, "k", 47, report.k);
    check(&mut lines, "kernel basis", "y + y^16", report.kernel[0].display.as_str());
    check(&mut lines, "kernel dimension", 1, report.kernel.len());
    check(&mut lines, "d lower bound", 2, report.d_lower.value);
    check(
        &mut lines,
        "gonality rung",
        "override-table",
        report.d_lower.certification.as_str(),
    );
    check(&mut lines, "defect bound", 1, report.defect_upper);
    CaseReport { name: "ex3.3d", title: "y⁵ = x⁴ + x over GF(16), enlarged caps", lines }
}

/// The complete space of pole bound 8 on the elliptic curve: [18, 6] with
/// locality 2, exact defect 1.
fn elliptic_v8_defect() -> CaseReport {
    let mut lines = Vec::new();
    let caps = WorkCaps::default();
    let (code, policy) = build(ELLIPTIC_BASE);
    let report = code.params(&policy).unwrap();
    check(&mut lines, "n", 18, report.n);
    check(&mut lines, "k", 6, report.k);
    check(&mut lines, "m", 8, report.m);
    check(&mut lines, "locality", 2, report.locality);
    let gap = code.vspec().riemann_gap(code.curve()).unwrap();
    check(&mut lines, "gap to full pole-order space", 2, gap);
    let cf = report.defect_closed_form.unwrap();
    check(&mut lines, "closed-form defect bound", (1, 'b'), (cf.value, cf.case));
    let d = code.brute_min_distance(&caps).unwrap();
    check(&mut lines, "exact d", 10, d);
    let defect = report.n + 2 - (report.k + d + report.k.div_ceil(report.locality));
    check(&mut lines, "exact defect", 1, defect);
    CaseReport { name: "ex3.8", title: "y² = x³ + 2 over GF(13), pole bound 8", lines }
}

/// Weight hierarchy of the same [18, 6] code. The published table lists
/// (10, 12, 13, 14, 15, 18); exhaustive search over all 2¹⁸ supports gives
/// (10, 12, 14, 15, 17, 18). The d₅ entry is refutable by hand: 1, x and y
/// all lie in V, so no two generator columns are proportional and a 5-dim
/// subcode must cover at least 17 positions. The published value rests on a
/// fibre-divisor index count that is only valid when V is the full
/// pole-order space, which this V is not.
fn elliptic_v8_weights() -> CaseReport {
    let mut lines = Vec::new();
    let caps = WorkCaps::default();
    let (code, policy) = build(ELLIPTIC_BASE);
    let rows = code.ghw_bounds(6, &policy).unwrap();
    let lowers: Vec<u64> = rows.iter().map(|r| r.lower).collect();
    let uppers: Vec<u64> = rows.iter().map(|r| r.upper_singleton).collect();
    check(&mut lines, "lower bound row", vec![10, 12, 13, 14, 15, 16], lowers);
    check(&mut lines, "upper bound row", vec![11, 12, 14, 15, 17, 18], uppers);

    let hierarchy = code.brute_weight_hierarchy(6, &caps).unwrap();
    let published = [10u64, 12, 13, 14, 15, 18];
    for (t, (&stated, &computed)) in published.iter().zip(&hierarchy).enumerate() {
        diverging(&mut lines, &format!("d_{}", t + 1), stated, computed);
    }

    let fibre = code.fibre_sum_uppers();
    check(&mut lines, "one dropped fibre bounds", (1, 15), (fibre[0].mu, fibre[0].upper));
    diverging(&mut lines, "subcode dim for one dropped fibre", 5, fibre[0].t);
    check(&mut lines, "two dropped fibres bound", (2, 2, 12), {
        let e = &fibre[1];
        (e.mu, e.t, e.upper)
    });

    let ranks = code.rank_indices_exact(&hierarchy);
    check(&mut lines, "optimal rank", Some(2), ranks.opt_rank.exact);
    check(&mut lines, "mds rank (k−r+1 floor attained)", Some(5), ranks.mds_rank.exact);
    let tight: Vec<u64> = hierarchy
        .iter()
        .zip(1..)
        .filter(|&(&d, t)| 6 + d + (6u64 - t + 1).div_ceil(2) == 18 + t + 1)
        .map(|(_, t)| t)
        .collect();
    diverging(&mut lines, "bound tight at t", vec![2, 6], tight);
    CaseReport { name: "ex5.4", title: "weight hierarchy of the [18, 6] elliptic code", lines }
}

const KONDO: &str = r#"{
    "field": {"p": 2, "m": 6},
    "curve": {"A": [0, 1, 1], "B": [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]},
    "orientation": "y",
    "space": {"complete_m": 50}
}"#;

/// y² + y = x⁹ over GF(64): the [126, 43] locality-8 hyperelliptic code.
fn kondo_126() -> CaseReport {
    let mut lines = Vec::new();
    let (code, policy) = build(KONDO);
    check(&mut lines, "affine points", 128, code.curve().points().len());
    let all = code.curve().fibres(code.orientation());
    let split = all.iter().filter(|f| f.totally_split).count();
    let singles = all.iter().filter(|f| f.points.len() == 1).count();
    check(&mut lines, "split fibres of 9", 14, split);
    check(&mut lines, "singleton fibres", 2, singles);
    let report = code.params(&policy).unwrap();
    check(&mut lines, "n", 126, report.n);
    check(&mut lines, "locality", 8, report.locality);
    check(&mut lines, "degree caps", vec![5, 5, 5, 4, 4, 4, 4, 4], code.vspec().ells().to_vec());
    check(&mut lines, "k", 43, report.k);
    check(&mut lines, "d lower bound", 76, report.d_lower.value);
    check(
        &mut lines,
        "gonality rung",
        "certified-semigroup",
        report.d_lower.certification.as_str(),
    );
    check(&mut lines, "defect bound", 3, report.defect_upper);
    let brackets: Vec<(u64, u64)> =
        report.ghw[..5].iter().map(|r| (r.lower, r.upper)).collect();
    check(
        &mut lines,
        "weight brackets t=1..5",
        vec![(76, 79), (78, 80), (80, 81), (82, 83), (84, 84)],
        brackets,
    );
    check(&mut lines, "gap to full pole-order space", 4, {
        code.vspec().riemann_gap(code.curve()).unwrap()
    });
    CaseReport { name: "ex6.1", title: "y² + y = x⁹ over GF(64), pole bound 50", lines }
}

const QUOTIENT_Y: &str = r#"{
    "field": {"p": 2, "m": 6},
    "curve": {"A": [0, 0, 0, 1], "B": [0, 1, 0, 0, 0, 0, 0, 0, 1]},
    "orientation": "y",
    "space": {"complete_m": 50}
}"#;

/// y³ = x⁸ + x over GF(64), grouping by y: a [176, 40] locality-7 code that
/// repairs by one addition.
fn quotient_y_176() -> CaseReport {
    let mut lines = Vec::new();
    let (code, policy) = build(QUOTIENT_Y);
    check(&mut lines, "affine points", 176, code.curve().points().len());
    check(&mut lines, "split fibres of 8", 22, code.fibres().len());
    let report = code.params(&policy).unwrap();
    check(&mut lines, "n", 176, report.n);
    check(&mut lines, "locality", 7, report.locality);
    check(&mut lines, "degree caps", vec![6, 5, 5, 5, 4, 4, 4], code.vspec().ells().to_vec());
    check(&mut lines, "k", 40, report.k);
    check(&mut lines, "d lower bound", 126, report.d_lower.value);
    check(&mut lines, "defect bound", 6, report.defect_upper);
    let one_add = code.curve().one_addition_applicable(code.vspec());
    check(&mut lines, "one-addition recovery", true, one_add.applicable);
    CaseReport { name: "ex6.2", title: "y³ = x⁸ + x over GF(64), y-fibres", lines }
}

const QUOTIENT_X: &str = r#"{
    "field": {"p": 2, "m": 6},
    "curve": {"A": [0, 0, 0, 1], "B": [0, 1, 0, 0, 0, 0, 0, 0, 1]},
    "orientation": "x",
    "space": {"complete_m": 50}
}"#;

/// The same curve grouped by x: 56 fibres of 3 over the bases with nonzero
/// trace, a [168, 32] locality-2 code. The published distance bound 120
/// corresponds to pole bound 48, but the stated degree caps (16, 14) force
/// pole bound 50, so the certified bound is 118.
fn quotient_x_168() -> CaseReport {
    let mut lines = Vec::new();
    let (code, policy) = build(QUOTIENT_X);
    let all = code.curve().fibres(code.orientation());
    let split = all.iter().filter(|f| f.totally_split).count();
    let singles = all.iter().filter(|f| f.points.len() == 1).count();
    check(&mut lines, "split fibres of 3", 56, split);
    check(&mut lines, "singleton fibres", 8, singles);
    let report = code.params(&policy).unwrap();
    check(&mut lines, "n", 168, report.n);
    check(&mut lines, "locality", 2, report.locality);
    check(&mut lines, "degree caps", vec![16, 14], code.vspec().ells().to_vec());
    check(&mut lines, "k", 32, report.k);
    check(&mut lines, "pole bound", 50, report.m);
    check(&mut lines, "certified d lower bound", 118, report.d_lower.value);
    diverging(&mut lines, "d lower bound", 120u64, report.d_lower.value);
    CaseReport { name: "ex6.3", title: "y³ = x⁸ + x over GF(64), x-fibres", lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_passes() {
        for report in run_all() {
            assert!(report.passed(), "{}", report.render());
        }
    }

    #[test]
    fn divergences_are_preannounced() {
        let ex54 = run_case("ex5.4").unwrap();
        let div = ex54
            .lines
            .iter()
            .filter(|l| l.status == CheckStatus::ExpectedDivergence)
            .count();
        assert_eq!(div, 5); // d_3, d_4, d_5, the μ=1 subcode index, tightness set
        let ex63 = run_case("ex6.3").unwrap();
        let div = ex63
            .lines
            .iter()
            .filter(|l| l.status == CheckStatus::ExpectedDivergence)
            .count();
        assert_eq!(div, 1);
        assert!(run_case("nonexistent").is_none());
    }
}
