//! Verification checks behind `coxpres verify`.
//!
//! Every check compares a value predicted from closed formulas (block sizes,
//! expected chambers, known dimensions) with the value the library computes.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::sync::OnceLock;
use std::time::Instant;

use clap::ValueEnum;
use coxpres_core::collineation::*;
use coxpres_core::exact::{kernel_basis, rank, row_lattice_hnf};
use coxpres_core::geometry::{
    barycenter_direction, gale_cone_test, git_fan, mori_cones, quotient_fan, stellar_subdivide, RationalCone,
};
use coxpres_core::groebner::{ideal_equal, krull_dimension, normal_form, saturate, toric_kernel, IdealPresentation};
use coxpres_core::polyring::{multidegree, Multidegree, Polynomial};
use coxpres_core::Error;
use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::json::{CheckRecord, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Presentation,
    Grading,
    Gale,
    Pullback,
    Gitfan,
    Fan,
    Segre,
    Mori,
    Fhat,
    Dimension,
    Saturation,
    Toric,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::Presentation,
        CheckId::Grading,
        CheckId::Gale,
        CheckId::Pullback,
        CheckId::Gitfan,
        CheckId::Fan,
        CheckId::Segre,
        CheckId::Mori,
        CheckId::Fhat,
        CheckId::Dimension,
        CheckId::Saturation,
        CheckId::Toric,
    ];

    /// Checks that run Buchberger's algorithm.
    pub fn is_groebner(self) -> bool {
        matches!(self, CheckId::Dimension | CheckId::Saturation | CheckId::Toric)
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckId::Presentation => "presentation",
            CheckId::Grading => "grading",
            CheckId::Gale => "gale",
            CheckId::Pullback => "pullback",
            CheckId::Gitfan => "gitfan",
            CheckId::Fan => "fan",
            CheckId::Segre => "segre",
            CheckId::Mori => "mori",
            CheckId::Fhat => "fhat",
            CheckId::Dimension => "dimension",
            CheckId::Saturation => "saturation",
            CheckId::Toric => "toric",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

/// Parameters for which Gröbner checks run unless requested explicitly.
pub fn in_default_groebner_range(p: &Params) -> bool {
    p.is_general() && p.m() <= 7
}

enum Verdict {
    Compared { expected: String, actual: String, ok: bool },
    Skipped { reason: String, budget: bool },
}

fn compare<T: PartialEq + Debug>(expected: T, actual: T) -> Verdict {
    let ok = expected == actual;
    Verdict::Compared { expected: format!("{expected:?}"), actual: format!("{actual:?}"), ok }
}

fn not_applicable(p: &Params) -> Verdict {
    Verdict::Skipped { reason: format!("not applicable in regime {}", p.regime().label()), budget: false }
}

struct Context {
    p: Params,
    budget: usize,
    ideal_i: OnceLock<(IdealPresentation, Polynomial)>,
}

impl Context {
    /// The Cox ideal `I` and the variable `Tinf`.
    fn ideal_i(&self) -> Result<&(IdealPresentation, Polynomial), Error> {
        if let Some(x) = self.ideal_i.get() {
            return Ok(x);
        }
        let cp = cox_presentation(&self.p)?;
        let tinf = cp.ring.var(TINF)?;
        let ideal = IdealPresentation::new(&cp.ring, cp.relations)?;
        Ok(self.ideal_i.get_or_init(|| (ideal, tinf)))
    }
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn poly_set(polys: &[Polynomial]) -> BTreeSet<String> {
    polys.iter().map(|f| f.to_string()).collect()
}

fn check_presentation(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    let cp = cox_presentation(p)?;
    Ok(match p.regime() {
        Regime::General => {
            let t_idx = cp.ring.vars().position(TINF).expect("Tinf present");
            let with_tinf = cp.relations.iter().filter(|r| r.uses_variable(t_idx)).count();
            compare(
                (p.n() + 1, binom(p.m(), 4), binom(p.c, 2) * binom(p.d, 2), 3),
                (cp.ring.nvars(), cp.relations.len(), with_tinf, cp.class_group_rank()),
            )
        }
        Regime::C2 | Regime::D2 => {
            let plucker = plucker_relations(p.m())
                .iter()
                .map(|f| f.transfer(&cp.ring))
                .collect::<Result<Vec<_>, _>>()?;
            compare(
                (p.n(), true, 2),
                (cp.ring.nvars(), poly_set(&plucker) == poly_set(&cp.relations), cp.class_group_rank()),
            )
        }
        Regime::P3 => {
            let ones = (0..4).all(|i| cp.grading.variable_degree(i) == vec![1]);
            compare((4, 0, true), (cp.ring.nvars(), cp.relations.len(), ones))
        }
    })
}

fn check_grading(cx: &Context) -> Result<Verdict, Error> {
    let cp = cox_presentation(&cx.p)?;
    let homogeneous = cp
        .relations
        .iter()
        .filter(|r| matches!(multidegree(r, &cp.grading), Multidegree::Homogeneous(_)))
        .count();
    Ok(compare(cp.relations.len(), homogeneous))
}

fn check_gale(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    let (q, _) = weight_matrices(p);
    let pm = gale_matrix_p(p);
    let n = p.n();
    let mut e_last = vec![0; n - 2];
    e_last[n - 3] = 1;
    let bary = barycenter_direction(&pm, &sigma1_columns(p))?;
    Ok(compare(
        (true, n - 2, true, e_last),
        (
            pm.mul(&q.transpose()).is_zero(),
            rank(&pm),
            row_lattice_hnf(&pm) == row_lattice_hnf(&kernel_basis(&q)),
            bary,
        ),
    ))
}

fn check_pullback(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    if !p.is_general() {
        return Ok(not_applicable(p));
    }
    let cp = cox_presentation(p)?;
    let mut eps_mismatch = 0usize;
    let mut cancelled = Vec::new();
    for q in p.quadruples() {
        let (eps, r) = pullback_and_cancel(p, q)?;
        if eps != expected_tinf_power(p, q) {
            eps_mismatch += 1;
        }
        cancelled.push(r);
    }
    Ok(compare((0, true), (eps_mismatch, poly_set(&cancelled) == poly_set(&cp.relations))))
}

fn check_gitfan(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    let (q, _) = weight_matrices(p);
    let lambda1 = RationalCone::new(2, &[vec![1, 1], vec![1, 0]])?;
    let lambda2 = RationalCone::new(2, &[vec![1, 0], vec![1, -1]])?;
    let chambers = git_fan(&q)?.maximal_cones();
    let w = witness_points(p)?;
    let zero_residuals = [&w.x1, &w.x2].iter().all(|x| x.residuals(p).iter().all(Zero::is_zero));
    Ok(compare(
        (vec![lambda1.clone(), lambda2.clone()], true, lambda1, lambda2),
        (chambers, zero_residuals, w.omega1, w.omega2),
    ))
}

fn check_fan(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    let (q, _) = weight_matrices(p);
    let pm = gale_matrix_p(p);
    let (ap, a0, am) = (p.a_plus(), p.a_zero(), p.a_minus());
    let n = p.n();
    let mut accepted1 = 0;
    let mut accepted2 = 0;
    let mut predicted_match = true;
    for pair in (0..n).combinations(2) {
        let t1 = gale_cone_test(&pm, &q, &[2, 1], &pair)?;
        let t2 = gale_cone_test(&pm, &q, &[2, -1], &pair)?;
        accepted1 += usize::from(t1);
        accepted2 += usize::from(t2);
        let plus = |i: usize| i < ap;
        let minus = |i: usize| i >= n - am;
        predicted_match &= t1 == (plus(pair[0]) != plus(pair[1]));
        predicted_match &= t2 == (minus(pair[0]) != minus(pair[1]));
    }
    let sigma1 = quotient_fan(&pm, &q, &[2, 1])?;
    let target = sigma1_columns(p);
    // subdividing a single ray changes nothing
    let subdivided = if target.len() == 1 {
        sigma1.cones.len()
    } else {
        let ray = barycenter_direction(&pm, &target)?;
        stellar_subdivide(&sigma1, &target, &ray)?.cones.len()
    };
    Ok(compare(
        (ap * (a0 + am), am * (a0 + ap), true, ap * am + ap * a0 * am),
        (accepted1, accepted2, predicted_match, subdivided),
    ))
}

fn check_segre(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    if !p.is_general() {
        return Ok(not_applicable(p));
    }
    let sigma = segre_map(p);
    let pi = proof_ideals(p)?;
    let mut g_killed = 0;
    for g in &pi.g {
        g_killed += usize::from(sigma.apply(g)?.is_zero());
    }
    let mut table_ok = 0;
    for (q, img) in pi.h_quadruples.iter().zip(&pi.sigma_h) {
        table_ok += usize::from(*img == h_image_from_table(p, *q)?);
    }
    let ren = rename_plus_block(p);
    let plus = pi.b_plus.iter().map(|f| ren.apply(f)).collect::<Result<Vec<_>, _>>()?;
    let ren = rename_minus_block(p);
    let minus = pi.b_minus.iter().map(|f| ren.apply(f)).collect::<Result<Vec<_>, _>>()?;
    Ok(compare(
        (pi.g.len(), pi.h.len(), true, true),
        (
            g_killed,
            table_ok,
            poly_set(&plus) == poly_set(&plucker_relations(p.c + 1)),
            poly_set(&minus) == poly_set(&plucker_relations(p.d + 1)),
        ),
    ))
}

fn check_mori(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    if !p.is_general() {
        return Ok(not_applicable(p));
    }
    let (w1, w2, w3, w4) = (vec![1, 1, -1], vec![1, 0, 0], vec![1, -1, 0], vec![0, 0, 1]);
    let eff = RationalCone::new(3, &[w1.clone(), w3.clone(), w4])?;
    let mov = RationalCone::new(3, &[w1, w2, w3])?;
    let (got_eff, got_mov) = mori_cones(&degree_table(p))?;
    Ok(compare((eff, mov), (got_eff, got_mov)))
}

fn check_fhat(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    if !p.is_general() {
        return Ok(not_applicable(p));
    }
    Ok(compare(true, local_equation_invariance(p)?))
}

fn check_dimension(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    if !p.is_general() {
        return Ok(not_applicable(p));
    }
    let (i, tinf) = cx.ideal_i()?;
    let j = i.extend(vec![tinf.clone()])?;
    let pi = proof_ideals(p)?;
    let bp = IdealPresentation::new(&segre_block_ring_plus(p), pi.b_plus)?;
    let bm = IdealPresentation::new(&segre_block_ring_minus(p), pi.b_minus)?;
    let m = p.m();
    Ok(compare(
        (2 * m - 3, 2 * m - 2, 2 * p.c - 1, 2 * p.d - 1),
        (
            krull_dimension(&j, cx.budget)?,
            krull_dimension(i, cx.budget)?,
            krull_dimension(&bp, cx.budget)?,
            krull_dimension(&bm, cx.budget)?,
        ),
    ))
}

fn check_saturation(cx: &Context) -> Result<Verdict, Error> {
    if !cx.p.is_general() {
        return Ok(not_applicable(&cx.p));
    }
    let (i, tinf) = cx.ideal_i()?;
    let sat = saturate(i, tinf, cx.budget)?;
    let equal = ideal_equal(&sat, i, cx.budget)?;
    let outside = !normal_form(tinf, i.groebner_basis(cx.budget)?).is_zero();
    Ok(compare((true, true), (equal, outside)))
}

fn check_toric(cx: &Context) -> Result<Verdict, Error> {
    let p = &cx.p;
    if !p.is_general() {
        return Ok(not_applicable(p));
    }
    let ring = plucker_space_ring(p);
    let kernel = toric_kernel(&ring, &segre_exponent_matrix(p), cx.budget)?;
    let g = IdealPresentation::new(&ring, proof_ideals(p)?.g)?;
    Ok(compare(true, ideal_equal(&kernel, &g, cx.budget)?))
}

fn dispatch(id: CheckId, cx: &Context) -> Result<Verdict, Error> {
    match id {
        CheckId::Presentation => check_presentation(cx),
        CheckId::Grading => check_grading(cx),
        CheckId::Gale => check_gale(cx),
        CheckId::Pullback => check_pullback(cx),
        CheckId::Gitfan => check_gitfan(cx),
        CheckId::Fan => check_fan(cx),
        CheckId::Segre => check_segre(cx),
        CheckId::Mori => check_mori(cx),
        CheckId::Fhat => check_fhat(cx),
        CheckId::Dimension => check_dimension(cx),
        CheckId::Saturation => check_saturation(cx),
        CheckId::Toric => check_toric(cx),
    }
}

fn record(id: CheckId, cx: &Context, explicit: bool) -> CheckRecord {
    let start = Instant::now();
    let verdict = if id.is_groebner() && !explicit && !in_default_groebner_range(&cx.p) {
        Ok(Verdict::Skipped {
            reason: "Gröbner check outside the default range; request it with --checks".into(),
            budget: false,
        })
    } else {
        dispatch(id, cx)
    };
    let wall_time_us = start.elapsed().as_micros() as u64;
    let (status, expected, actual, budget_exceeded) = match verdict {
        Ok(Verdict::Compared { expected, actual, ok }) => {
            (if ok { Outcome::Pass } else { Outcome::Fail }, expected, actual, false)
        }
        Ok(Verdict::Skipped { reason, budget }) => (Outcome::Skipped, String::new(), reason, budget),
        Err(Error::BudgetExceeded { budget }) => {
            (Outcome::Skipped, String::new(), format!("pair budget {budget} exceeded"), true)
        }
        Err(e) => (Outcome::Fail, String::new(), format!("error: {e}"), false),
    };
    CheckRecord { id, params: cx.p, status, expected, actual, wall_time_us, budget_exceeded }
}

/// Runs the given checks (all of them when `explicit` is `None`) in parallel;
/// records come back in check-id order.
pub fn run(p: &Params, explicit: Option<&[CheckId]>, budget: usize) -> VerificationReport {
    let ids: Vec<CheckId> = match explicit {
        Some(ids) => ids.iter().copied().sorted().dedup().collect(),
        None => CheckId::ALL.to_vec(),
    };
    let cx = Context { p: *p, budget, ideal_i: OnceLock::new() };
    let records = ids.par_iter().map(|&id| record(id, &cx, explicit.is_some())).collect();
    VerificationReport { params: *p, budget, records }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn statuses(report: &VerificationReport) -> Vec<(CheckId, Outcome)> {
        report.records.iter().map(|r| (r.id, r.status)).collect()
    }

    #[test]
    fn full_suite_passes_for_33() {
        let report = run(&Params::new(3, 3).unwrap(), None, 200_000);
        assert_eq!(report.records.len(), CheckId::ALL.len());
        for r in &report.records {
            assert_eq!(r.status, Outcome::Pass, "{r:?}");
        }
    }

    #[test]
    fn order_follows_ids() {
        let ids = [CheckId::Toric, CheckId::Gale, CheckId::Gale, CheckId::Grading];
        let report = run(&Params::new(3, 3).unwrap(), Some(&ids), 200_000);
        let got: Vec<CheckId> = report.records.iter().map(|r| r.id).collect();
        assert_eq!(got, vec![CheckId::Grading, CheckId::Gale, CheckId::Toric]);
    }

    #[test]
    fn degenerate_regimes() {
        let report = run(&Params::new(2, 2).unwrap(), None, 200_000);
        for (id, status) in statuses(&report) {
            let applicable =
                matches!(id, CheckId::Presentation | CheckId::Grading | CheckId::Gale | CheckId::Gitfan | CheckId::Fan);
            assert_eq!(status, if applicable { Outcome::Pass } else { Outcome::Skipped }, "{id:?}");
        }
        let report = run(&Params::new(4, 2).unwrap(), None, 200_000);
        assert!(report.records.iter().all(|r| r.status != Outcome::Fail));
    }

    #[test]
    fn budget_exhaustion_skips() {
        let report = run(&Params::new(3, 3).unwrap(), Some(&[CheckId::Dimension]), 1);
        let r = &report.records[0];
        assert_eq!(r.status, Outcome::Skipped);
        assert!(r.budget_exceeded);
    }

    #[test]
    fn heavy_checks_gated_by_default() {
        let report = run(&Params::new(4, 4).unwrap(), None, 200_000);
        for r in &report.records {
            let want = if r.id.is_groebner() { Outcome::Skipped } else { Outcome::Pass };
            assert_eq!(r.status, want, "{r:?}");
            assert!(!r.budget_exceeded);
        }
    }
}
