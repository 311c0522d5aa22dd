use rayon::prelude::*;
use serde::Serialize;

use super::{
    candidate_matches, classify, graded_dims_from_diagram, levi_factor, node_order_candidates,
    recompute_m, rep_dim, Classification, ExceptionalGroup, ExceptionalOrbitRecord, LExpr,
    MRecomputation, RestrictionCase,
};
use crate::error::Result;

/// Everything checked about one row. The row passes when `failures` is
/// empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub group: ExceptionalGroup,
    pub label: String,
    pub expected: Classification,
    pub recomputed: Option<Classification>,
    pub cases: Vec<MRecomputation>,
    pub root_g1: u64,
    pub root_g2: u64,
    pub failures: Vec<String>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_case(r: &ExceptionalOrbitRecord, case: &RestrictionCase, fails: &mut Vec<String>) -> Result<()> {
    let tag = &case.description;
    for (rep, target) in &case.restriction {
        let module = LExpr::parse(target)?.as_sl2()?;
        if module.dim() != rep_dim(rep)? as u64 {
            fails.push(format!("[{tag}] {rep} restricts to {target} of dimension {}", module.dim()));
        }
    }
    for rep in LExpr::parse(&r.g1)?.reps() {
        if !case.restriction.contains_key(&rep) {
            fails.push(format!("[{tag}] no restriction for {rep}"));
        }
    }
    let stored = case.g1_expr.eval()?;
    if stored != case.apply(&r.g1)?.eval()? {
        fails.push(format!("[{tag}] stored g(1) expression disagrees with the restriction"));
    }
    if stored.dim() != r.g1_dim {
        fails.push(format!("[{tag}] g(1) restricts to dimension {}, expected {}", stored.dim(), r.g1_dim));
    }
    Ok(())
}

fn check_supplement(r: &ExceptionalOrbitRecord, fails: &mut Vec<String>) -> Result<()> {
    let Some(sup) = &r.supplement else {
        return Ok(());
    };
    let dims = graded_dims_from_diagram(r.group, &r.diagram)?;
    for (j, (module, d)) in &sup.grades {
        let from_module = LExpr::parse(module)?.dim()?;
        let from_roots = dims.get(j).copied().unwrap_or(0);
        if from_module != *d || from_roots != *d {
            fails.push(format!(
                "g({j}): printed {d}, module gives {from_module}, roots give {from_roots}"
            ));
        }
    }
    let g0_dim = LExpr::parse(&sup.g0)?.dim()?;
    if Some(&g0_dim) != dims.get(&0) {
        fails.push(format!("g(0) module has dimension {g0_dim}, roots give {:?}", dims.get(&0)));
    }
    let case = &r.cases[0];
    let g02 = case.apply(&sup.g0)?.eval()?.weight_multiplicity(2);
    let g22 = case.apply(&r.g2)?.eval()?.weight_multiplicity(2);
    if (g02, g22) != (sup.dim_g02, sup.dim_g22) {
        fails.push(format!(
            "dim g(0,2), dim g(2,2) = ({g02}, {g22}), printed ({}, {})",
            sup.dim_g02, sup.dim_g22
        ));
    }
    Ok(())
}

fn verify_inner(r: &ExceptionalOrbitRecord, report: &mut RowReport) -> Result<()> {
    let fails = &mut report.failures;
    if r.diagram.len() != r.group.rank() || r.diagram.iter().any(|&w| w > 2) {
        fails.push(format!("diagram {:?} is not a weighted diagram of {}", r.diagram, r.group));
        return Ok(());
    }
    if r.cases.is_empty() {
        fails.push("no restriction case".into());
        return Ok(());
    }

    let (l1, l2) = (LExpr::parse(&r.g1)?.dim()?, LExpr::parse(&r.g2)?.dim()?);
    if (l1, l2) != (r.g1_dim, r.g2_dim) {
        fails.push(format!(
            "Levi modules have dimensions ({l1}, {l2}), recorded ({}, {})",
            r.g1_dim, r.g2_dim
        ));
    }

    let dims = graded_dims_from_diagram(r.group, &r.diagram)?;
    report.root_g1 = dims.get(&1).copied().unwrap_or(0);
    report.root_g2 = dims.get(&2).copied().unwrap_or(0);
    if (report.root_g1, report.root_g2) != (r.g1_dim, r.g2_dim) {
        fails.push(format!(
            "root system gives dim g(1), g(2) = ({}, {}), recorded ({}, {})",
            report.root_g1, report.root_g2, r.g1_dim, r.g2_dim
        ));
    }

    let mut levi_rank = 0;
    let mut levi_roots = 0;
    for f in &r.levi {
        let (rank, roots) = levi_factor(f)?;
        levi_rank += rank;
        levi_roots += roots;
    }
    let zeros = r.diagram.iter().filter(|&&w| w == 0).count();
    if levi_rank != zeros {
        fails.push(format!("Levi {:?} has rank {levi_rank}, diagram has {zeros} zero nodes", r.levi));
    }
    let g0 = dims.get(&0).copied().unwrap_or(0);
    if g0 != (r.group.rank() + levi_roots) as u64 {
        fails.push(format!("dim g(0) = {g0} but the Levi {:?} has {levi_roots} roots", r.levi));
    }

    for case in &r.cases {
        check_case(r, case, fails)?;
    }
    for idx in 0..r.cases.len() {
        report.cases.push(recompute_m(r, idx)?);
    }
    let got = classify(r)?;
    report.recomputed = Some(got);
    if got != r.expected {
        fails.push(format!("recomputed {got}, table says {}", r.expected));
    }
    check_supplement(r, fails)
}

/// Runs every check on one row. Evaluation errors are reported as
/// failures rather than returned.
pub fn verify_row(r: &ExceptionalOrbitRecord) -> RowReport {
    let mut report = RowReport {
        group: r.group,
        label: r.label.clone(),
        expected: r.expected,
        recomputed: None,
        cases: Vec::new(),
        root_g1: 0,
        root_g2: 0,
        failures: Vec::new(),
    };
    if let Err(e) = verify_inner(r, &mut report) {
        report.failures.push(e.to_string());
    }
    report
}

/// Verifies rows in parallel; output order follows input order.
pub fn verify_table(records: &[ExceptionalOrbitRecord]) -> Vec<RowReport> {
    records.par_iter().map(verify_row).collect()
}

/// How one candidate node order fares against the rows of its group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CalibrationReport {
    pub group: ExceptionalGroup,
    pub candidate: String,
    pub builtin: bool,
    /// `None` for candidates that are not of finite type.
    pub matched: Option<usize>,
    pub rows: usize,
}

impl CalibrationReport {
    pub fn matches_all(&self) -> bool {
        self.matched == Some(self.rows)
    }
}

/// Tries every candidate node order against the recorded `dim g(1)` and
/// `dim g(2)` of each row.
pub fn calibrate(records: &[ExceptionalOrbitRecord]) -> Vec<CalibrationReport> {
    ExceptionalGroup::ALL
        .par_iter()
        .flat_map_iter(|&group| {
            let rows: Vec<(Vec<u8>, u64, u64)> = records
                .iter()
                .filter(|r| r.group == group)
                .map(|r| (r.diagram.clone(), r.g1_dim, r.g2_dim))
                .collect();
            node_order_candidates(group)
                .into_iter()
                .map(move |c| CalibrationReport {
                    group,
                    matched: candidate_matches(&c, &rows),
                    candidate: c.description,
                    builtin: c.builtin,
                    rows: rows.len(),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exceptional::table;

    #[test]
    fn every_row_verifies() {
        for rep in verify_table(table()) {
            assert!(rep.passed(), "{} {}: {:?}", rep.group, rep.label, rep.failures);
        }
    }

    #[test]
    fn builtin_order_is_the_unique_full_match() {
        let reports = calibrate(table());
        for g in ExceptionalGroup::ALL {
            let full: Vec<_> = reports
                .iter()
                .filter(|c| c.group == g && c.matches_all())
                .collect();
            assert_eq!(full.len(), 1, "{g}: {full:?}");
            assert!(full[0].builtin, "{g}: {full:?}");
        }
    }

    #[test]
    fn broken_row_is_reported() {
        let mut r = table()[0].clone();
        r.expected = Classification::Raised { m: 1 };
        r.g2_dim = 2;
        let rep = verify_row(&r);
        assert!(!rep.passed());
        assert_eq!(rep.failures.len(), 3, "{:?}", rep.failures);
    }
}
