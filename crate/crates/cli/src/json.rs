//! Serializable views of presentations, cones, fans and reports.

use anyhow::{anyhow, Context};
use coxpres_core::collineation::{cox_presentation, degree_table, weight_matrices, witness_points, Params, Regime};
use coxpres_core::geometry::{git_fan, mori_cones, Fan, RationalCone};
use coxpres_core::polyring::Polynomial;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::checks::{CheckId, Outcome};

pub fn to_string<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// One term: integer coefficient and the variables with positive exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub monomial: IndexMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub c: usize,
    pub d: usize,
    pub regime: Regime,
    pub class_group_rank: usize,
    pub variables: Vec<String>,
    /// Degree of each variable, in variable order.
    pub degrees: IndexMap<String, Vec<i64>>,
    pub relations: Vec<Vec<TermJson>>,
}

impl PresentationJson {
    pub fn build(p: &Params) -> anyhow::Result<Self> {
        let cp = cox_presentation(p)?;
        let names = cp.variables().to_vec();
        let degrees = names.iter().enumerate().map(|(i, n)| (n.clone(), cp.grading.variable_degree(i))).collect();
        let relations = cp
            .relations
            .iter()
            .map(|f| poly_to_terms(f, &names))
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(PresentationJson {
            c: p.c,
            d: p.d,
            regime: cp.regime,
            class_group_rank: cp.class_group_rank(),
            variables: names,
            degrees,
            relations,
        })
    }
}

fn poly_to_terms(f: &Polynomial, names: &[String]) -> anyhow::Result<Vec<TermJson>> {
    let terms = f.integer_terms().ok_or_else(|| anyhow!("non-integer coefficient in {f}"))?;
    Ok(terms
        .into_iter()
        .map(|(coeff, m)| TermJson {
            coeff,
            monomial: m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (names[i].clone(), e))
                .collect(),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConesJson {
    pub c: usize,
    pub d: usize,
    pub effective: RationalCone,
    pub movable: RationalCone,
    /// The semiample cone is not computed; it is stated to equal `movable`.
    pub semiample: String,
}

pub const SEMIAMPLE_NOTE: &str = "equal to the movable cone (cited, not recomputed)";

impl ConesJson {
    pub fn build(p: &Params) -> anyhow::Result<Self> {
        let (effective, movable) = mori_cones(&degree_table(p))?;
        Ok(ConesJson { c: p.c, d: p.d, effective, movable, semiample: SEMIAMPLE_NOTE.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordJson {
    pub i: usize,
    pub j: usize,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub name: String,
    pub coords: Vec<CoordJson>,
    /// Values of all Plücker relations at the point, as exact rationals.
    pub residuals: Vec<String>,
    pub orbit_cone: RationalCone,
    /// Index of the chamber equal to the orbit cone, if any.
    pub chamber: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GitFanJson {
    pub c: usize,
    pub d: usize,
    /// Rows of the weight matrix `Q`.
    pub weights: Vec<Vec<i64>>,
    pub fan: Fan,
    pub chambers: Vec<RationalCone>,
    pub witnesses: Vec<WitnessJson>,
}

impl GitFanJson {
    pub fn build(p: &Params) -> anyhow::Result<Self> {
        let (q, _) = weight_matrices(p);
        let fan = git_fan(&q)?;
        let chambers = fan.maximal_cones();
        let w = witness_points(p)?;
        let witnesses = [("x1", &w.x1, &w.omega1), ("x2", &w.x2, &w.omega2)]
            .into_iter()
            .map(|(name, x, omega)| WitnessJson {
                name: name.to_string(),
                coords: x.coords.iter().map(|(&(i, j), &value)| CoordJson { i, j, value }).collect(),
                residuals: x.residuals(p).iter().map(|r| r.to_string()).collect(),
                orbit_cone: omega.clone(),
                chamber: chambers.iter().position(|ch| ch == omega),
            })
            .collect();
        let weights = q.to_i64_rows().context("weights fit in i64")?;
        Ok(GitFanJson { c: p.c, d: p.d, weights, fan, chambers, witnesses })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: CheckId,
    pub params: Params,
    pub status: Outcome,
    pub expected: String,
    pub actual: String,
    pub wall_time_us: u64,
    /// Set when the check was skipped because the pair budget ran out.
    #[serde(default)]
    pub budget_exceeded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: Params,
    pub budget: usize,
    pub records: Vec<CheckRecord>,
}
