//! Constructions for the space `X(2, c, d)` of complete rank-two collineations.
//!
//! Plücker coordinates `T_i_j` (`1 <= i < j <= c + d`) are ordered in three
//! blocks: both indices `<= c` (the `a⁺` block), mixed (`a⁰`), both `> c`
//! (`a⁻`); lexicographic inside each block. The extra Cox generator `Tinf`
//! comes last.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, Rational};
use crate::geometry::RationalCone;
use crate::polyring::{Grading, Monomial, MonomialOrder, PolyRing, Polynomial, RingMap, RingRef};

pub const TINF: &str = "Tinf";

pub fn t_name(i: usize, j: usize) -> String {
    format!("T_{i}_{j}")
}

pub fn s_pair_name(i: usize, j: usize) -> String {
    format!("S_{i}_{j}")
}

pub fn s_name(k: usize) -> String {
    format!("S_{k}")
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `c, d > 2`
    #[serde(rename = "general")]
    General,
    /// `d = 2 < c`
    #[serde(rename = "c2")]
    C2,
    /// `c = 2 < d`
    #[serde(rename = "d2")]
    D2,
    /// `c = d = 2`, projective 3-space
    #[serde(rename = "p3")]
    P3,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::General => "general",
            Regime::C2 => "c2",
            Regime::D2 => "d2",
            Regime::P3 => "p3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    Plus,
    Mixed,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub c: usize,
    pub d: usize,
}

impl Params {
    pub fn new(c: usize, d: usize) -> Result<Self> {
        if c < 2 || d < 2 {
            return Err(Error::InvalidParams(format!("need c, d >= 2, got c = {c}, d = {d}")));
        }
        Ok(Params { c, d })
    }

    /// Number of Plücker indices, `c + d`.
    pub fn m(&self) -> usize {
        self.c + self.d
    }

    /// Number of Plücker coordinates.
    pub fn n(&self) -> usize {
        binomial(self.m(), 2)
    }

    pub fn a_plus(&self) -> usize {
        binomial(self.c, 2)
    }

    pub fn a_zero(&self) -> usize {
        self.c * self.d
    }

    pub fn a_minus(&self) -> usize {
        binomial(self.d, 2)
    }

    pub fn regime(&self) -> Regime {
        match (self.c > 2, self.d > 2) {
            (true, true) => Regime::General,
            (true, false) => Regime::C2,
            (false, true) => Regime::D2,
            (false, false) => Regime::P3,
        }
    }

    pub fn is_general(&self) -> bool {
        self.regime() == Regime::General
    }

    fn require_general(&self) -> Result<()> {
        if self.is_general() {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("needs c, d > 2, got c = {}, d = {}", self.c, self.d)))
        }
    }

    pub fn block(&self, i: usize, j: usize) -> Block {
        let (i, j) = (i.min(j), i.max(j));
        if j <= self.c {
            Block::Plus
        } else if i <= self.c {
            Block::Mixed
        } else {
            Block::Minus
        }
    }

    /// Index pairs in block order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let all: Vec<(usize, usize)> = (1..=self.m()).tuple_combinations().collect();
        [Block::Plus, Block::Mixed, Block::Minus]
            .into_iter()
            .flat_map(|b| all.iter().copied().filter(move |&(i, j)| self.block(i, j) == b))
            .collect()
    }

    /// All quadruples `i < j < k < l`, lexicographically.
    pub fn quadruples(&self) -> Vec<[usize; 4]> {
        (1..=self.m()).tuple_combinations().map(|(i, j, k, l)| [i, j, k, l]).collect()
    }

    /// Quadruples whose Cox relation carries `Tinf`: `i < j <= c < k < l`.
    pub fn has_tinf(&self, q: [usize; 4]) -> bool {
        q[1] <= self.c && q[2] > self.c
    }

    pub fn check_quadruple(&self, q: [usize; 4]) -> Result<()> {
        if q[0] >= 1 && q.windows(2).all(|w| w[0] < w[1]) && q[3] <= self.m() {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("invalid quadruple {q:?} for c + d = {}", self.m())))
        }
    }

    /// Degree of `T_i_j` in the class group `ℤ³`.
    pub fn cox_degree(&self, i: usize, j: usize) -> [i64; 3] {
        match self.block(i, j) {
            Block::Plus => [1, 1, -1],
            Block::Mixed => [1, 0, 0],
            Block::Minus => [1, -1, 0],
        }
    }

    pub fn q_degree(&self, i: usize, j: usize) -> [i64; 2] {
        let d = self.cox_degree(i, j);
        [d[0], d[1]]
    }
}

/// Ring of Plücker coordinates in block order.
pub fn plucker_space_ring(p: &Params) -> RingRef {
    PolyRing::with_names(p.pairs().into_iter().map(|(i, j)| t_name(i, j)), MonomialOrder::GrevLex)
        .expect("pair names are unique")
}

/// Plücker coordinates plus `Tinf`.
pub fn cox_ring(p: &Params) -> RingRef {
    let mut names: Vec<String> = p.pairs().into_iter().map(|(i, j)| t_name(i, j)).collect();
    names.push(TINF.to_string());
    PolyRing::with_names(names, MonomialOrder::GrevLex).expect("names are unique")
}

/// Plücker coordinates of `G(2, m)` in lexicographic index order.
pub fn plucker_ring(m: usize) -> RingRef {
    PolyRing::with_names((1..=m).tuple_combinations().map(|(i, j)| t_name(i, j)), MonomialOrder::GrevLex)
        .expect("pair names are unique")
}

/// `sum coeff * prod vars` with variables looked up by name.
fn poly_from_names(ring: &RingRef, terms: &[(i64, Vec<String>)]) -> Result<Polynomial> {
    let n = ring.nvars();
    let mut out = Vec::with_capacity(terms.len());
    for (c, names) in terms {
        let mut e = vec![0u32; n];
        for name in names {
            let i = ring.vars().position(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            e[i] += 1;
        }
        out.push((Rational::from_integer((*c).into()), Monomial::from_exponents(e)));
    }
    Ok(Polynomial::from_terms(ring, out))
}

fn plucker_terms(q: [usize; 4]) -> Vec<(i64, Vec<String>)> {
    let [i, j, k, l] = q;
    vec![
        (1, vec![t_name(i, j), t_name(k, l)]),
        (-1, vec![t_name(i, k), t_name(j, l)]),
        (1, vec![t_name(i, l), t_name(j, k)]),
    ]
}

/// `P_ijkl = T_ij T_kl - T_ik T_jl + T_il T_jk` in any ring carrying the
/// needed `T_a_b` variables.
pub fn plucker_relation_in(ring: &RingRef, q: [usize; 4]) -> Result<Polynomial> {
    poly_from_names(ring, &plucker_terms(q))
}

pub fn plucker_relations_in(ring: &RingRef, m: usize) -> Result<Vec<Polynomial>> {
    (1..=m)
        .tuple_combinations()
        .map(|(i, j, k, l)| plucker_relation_in(ring, [i, j, k, l]))
        .collect()
}

/// The `binomial(m, 4)` Plücker relations of `G(2, m)`, in [`plucker_ring`].
pub fn plucker_relations(m: usize) -> Vec<Polynomial> {
    plucker_relations_in(&plucker_ring(m), m).expect("ring has all Plücker variables")
}

/// Generator of the Cox ideal for a quadruple.
pub fn cox_relation(ring: &RingRef, p: &Params, q: [usize; 4]) -> Result<Polynomial> {
    let mut terms = plucker_terms(q);
    if p.has_tinf(q) {
        terms[0].1.push(TINF.to_string());
    }
    poly_from_names(ring, &terms)
}

/// Presentation of a Cox ring: generators, relations and grading.
#[derive(Clone, Debug)]
pub struct CoxPresentation {
    pub params: Params,
    pub regime: Regime,
    pub ring: RingRef,
    pub relations: Vec<Polynomial>,
    pub grading: Grading,
}

impl CoxPresentation {
    pub fn class_group_rank(&self) -> usize {
        self.grading.rank()
    }

    pub fn variables(&self) -> &[String] {
        self.ring.vars().names()
    }
}

pub fn cox_presentation(p: &Params) -> Result<CoxPresentation> {
    let p = Params::new(p.c, p.d)?;
    let regime = p.regime();
    match regime {
        Regime::General => {
            let ring = cox_ring(&p);
            let relations =
                p.quadruples().into_iter().map(|q| cox_relation(&ring, &p, q)).collect::<Result<_>>()?;
            let (_, qinf) = weight_matrices(&p);
            Ok(CoxPresentation { params: p, regime, ring, relations, grading: Grading::new(qinf) })
        }
        Regime::C2 | Regime::D2 => {
            let ring = plucker_space_ring(&p);
            let relations = plucker_relations_in(&ring, p.m())?;
            let (q, _) = weight_matrices(&p);
            Ok(CoxPresentation { params: p, regime, ring, relations, grading: Grading::new(q) })
        }
        Regime::P3 => {
            let ring = PolyRing::with_names((0..4).map(|i| format!("T_{i}")), MonomialOrder::GrevLex)?;
            let grading = Grading::new(IntMatrix::from_rows(4, &[vec![1; 4]]));
            Ok(CoxPresentation { params: p, regime, ring, relations: Vec::new(), grading })
        }
    }
}

/// `Q` (2 × n) and `Q∞` (3 × (n + 1)), columns in variable order.
pub fn weight_matrices(p: &Params) -> (IntMatrix, IntMatrix) {
    let pairs = p.pairs();
    let q_cols: Vec<Vec<i64>> = pairs.iter().map(|&(i, j)| p.q_degree(i, j).to_vec()).collect();
    let mut qinf_cols: Vec<Vec<i64>> = pairs.iter().map(|&(i, j)| p.cox_degree(i, j).to_vec()).collect();
    qinf_cols.push(vec![0, 0, 1]);
    (IntMatrix::from_columns(2, &q_cols), IntMatrix::from_columns(3, &qinf_cols))
}

/// Degrees of the Cox generators (columns of `Q∞`).
pub fn degree_table(p: &Params) -> Vec<Vec<i64>> {
    let (_, qinf) = weight_matrices(p);
    (0..qinf.cols()).map(|j| qinf.column_i64(j)).collect()
}

/// `(k - 1) × k` difference matrix with rows `e_r - e_{r+1}`.
fn difference_block(k: usize) -> Vec<Vec<i64>> {
    (0..k.saturating_sub(1))
        .map(|r| {
            let mut row = vec![0; k];
            row[r] = 1;
            row[r + 1] = -1;
            row
        })
        .collect()
}

/// Block matrix whose rows span the kernel of `Q`.
pub fn gale_matrix_p(p: &Params) -> IntMatrix {
    let (ap, a0, am) = (p.a_plus(), p.a_zero(), p.a_minus());
    let n = p.n();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n - 2);
    for (offset, k) in [(0, ap), (ap, a0), (ap + a0, am)] {
        for d in difference_block(k) {
            let mut row = vec![0; n];
            row[offset..offset + k].copy_from_slice(&d);
            rows.push(row);
        }
    }
    let mut bottom = vec![0; n];
    bottom[ap - 1] = 1;
    bottom[ap] = -1;
    bottom[ap + a0 - 1] = -1;
    bottom[ap + a0] = 1;
    rows.push(bottom);
    IntMatrix::from_rows(n, &rows)
}

/// Column indices of the last `a⁻` columns, spanning `σ₁`.
pub fn sigma1_columns(p: &Params) -> Vec<usize> {
    (p.n() - p.a_minus()..p.n()).collect()
}

/// Comorphism of the lifted blow-up: `T_ij ↦ Tinf·T_ij` on the `a⁺` block,
/// identity elsewhere.
pub fn comorphism(p: &Params) -> RingMap {
    let src = plucker_space_ring(p);
    let tgt = cox_ring(p);
    let tinf = tgt.var(TINF).expect("Tinf present");
    let images = p
        .pairs()
        .into_iter()
        .map(|(i, j)| {
            let t = tgt.var(&t_name(i, j)).expect("pair present");
            if p.block(i, j) == Block::Plus {
                &tinf * &t
            } else {
                t
            }
        })
        .collect();
    RingMap::new(&src, &tgt, images).expect("images live in the Cox ring")
}

/// Pulls `P_ijkl` back along [`comorphism`] and divides out the largest
/// power `Tinf^ε` common to all terms. Returns `(ε, remainder)`.
pub fn pullback_and_cancel(p: &Params, q: [usize; 4]) -> Result<(u32, Polynomial)> {
    p.check_quadruple(q)?;
    let phi = comorphism(p);
    pullback_with(&phi, q)
}

pub(crate) fn pullback_with(phi: &RingMap, q: [usize; 4]) -> Result<(u32, Polynomial)> {
    let rel = plucker_relation_in(phi.source(), q)?;
    let pulled = phi.apply(&rel)?;
    let t = phi.target().vars().position(TINF).expect("Tinf present");
    let eps = pulled.common_var_power(t);
    let r = pulled.div_monomial(&Monomial::var(phi.target().nvars(), t, eps));
    Ok((eps, r))
}

/// Ring `B` of the Segre-type factorization: `S_a_b` (`a < b <= c`), `S_k`
/// (`k <= c + d`), `S_a_b` (`c < a < b`).
pub fn segre_ring(p: &Params) -> RingRef {
    let mut names: Vec<String> = Vec::new();
    names.extend((1..=p.c).tuple_combinations().map(|(a, b)| s_pair_name(a, b)));
    names.extend((1..=p.m()).map(s_name));
    names.extend((p.c + 1..=p.m()).tuple_combinations().map(|(a, b)| s_pair_name(a, b)));
    PolyRing::with_names(names, MonomialOrder::GrevLex).expect("names are unique")
}

/// `B' = ℚ[S_a_b, S_k : a < b <= c, k <= c]`
pub fn segre_block_ring_plus(p: &Params) -> RingRef {
    let mut names: Vec<String> = (1..=p.c).tuple_combinations().map(|(a, b)| s_pair_name(a, b)).collect();
    names.extend((1..=p.c).map(s_name));
    PolyRing::with_names(names, MonomialOrder::GrevLex).expect("names are unique")
}

/// `B'' = ℚ[S_a_b, S_k : c < a < b, c < k]`
pub fn segre_block_ring_minus(p: &Params) -> RingRef {
    let mut names: Vec<String> =
        (p.c + 1..=p.m()).tuple_combinations().map(|(a, b)| s_pair_name(a, b)).collect();
    names.extend((p.c + 1..=p.m()).map(s_name));
    PolyRing::with_names(names, MonomialOrder::GrevLex).expect("names are unique")
}

/// `T_ij ↦ S_ij` on pure blocks, `T_ij ↦ S_i S_j` on the mixed block.
pub fn segre_map(p: &Params) -> RingMap {
    let src = plucker_space_ring(p);
    let tgt = segre_ring(p);
    let images = p
        .pairs()
        .into_iter()
        .map(|(i, j)| {
            let names = match p.block(i, j) {
                Block::Mixed => vec![s_name(i), s_name(j)],
                _ => vec![s_pair_name(i, j)],
            };
            poly_from_names(&tgt, &[(1, names)]).expect("segre ring variables")
        })
        .collect();
    RingMap::new(&src, &tgt, images).expect("images live in B")
}

/// Exponent matrix of [`segre_map`]: column `j` is the exponent vector of the
/// image of the `j`-th Plücker coordinate.
pub fn segre_exponent_matrix(p: &Params) -> IntMatrix {
    let sigma = segre_map(p);
    let rows = sigma.target().nvars();
    let cols: Vec<Vec<i64>> = sigma
        .images()
        .iter()
        .map(|img| img.terms()[0].monomial.exponents().iter().map(|&e| e as i64).collect())
        .collect();
    IntMatrix::from_columns(rows, &cols)
}

/// `g_ijkl = -T_ik T_jl + T_il T_jk` for `i < j <= c < k < l`.
pub fn g_binomial(ring: &RingRef, q: [usize; 4]) -> Result<Polynomial> {
    let [i, j, k, l] = q;
    poly_from_names(ring, &[(-1, vec![t_name(i, k), t_name(j, l)]), (1, vec![t_name(i, l), t_name(j, k)])])
}

/// `σ(h_ijkl)` as written in the four-case table, built directly in `B`.
pub fn h_image_from_table(p: &Params, q: [usize; 4]) -> Result<Polynomial> {
    let b = segre_ring(p);
    let [i, j, k, l] = q;
    let c = p.c;
    let sp = s_pair_name;
    let s = s_name;
    let terms: Vec<(i64, Vec<String>)> = if l <= c || i > c {
        vec![
            (1, vec![sp(i, j), sp(k, l)]),
            (-1, vec![sp(i, k), sp(j, l)]),
            (1, vec![sp(i, l), sp(j, k)]),
        ]
    } else if k <= c {
        vec![
            (1, vec![s(l), sp(i, j), s(k)]),
            (-1, vec![s(l), sp(i, k), s(j)]),
            (1, vec![s(l), s(i), sp(j, k)]),
        ]
    } else if j > c {
        vec![
            (1, vec![s(i), s(j), sp(k, l)]),
            (-1, vec![s(i), s(k), sp(j, l)]),
            (1, vec![s(i), s(l), sp(j, k)]),
        ]
    } else {
        return Err(Error::InvalidParams(format!("{q:?} is a g-quadruple, not an h-quadruple")));
    };
    poly_from_names(&b, &terms)
}

/// Generators from the primality argument for `J = I + ⟨Tinf⟩`.
#[derive(Clone, Debug)]
pub struct ProofIdeals {
    /// Quadruples `i < j <= c < k < l`, in the order of `g`.
    pub g_quadruples: Vec<[usize; 4]>,
    /// Binomials `g_ijkl` in the Plücker ring `A`.
    pub g: Vec<Polynomial>,
    pub h_quadruples: Vec<[usize; 4]>,
    /// `h_ijkl = P_ijkl` for the remaining quadruples, in `A`.
    pub h: Vec<Polynomial>,
    /// `σ(h_ijkl)` in `B`.
    pub sigma_h: Vec<Polynomial>,
    /// Generators of `𝔟`: the `σ(h)` with their monomial factor removed,
    /// without repetitions.
    pub b: Vec<Polynomial>,
    /// The part of `𝔟` living in `B'`.
    pub b_plus: Vec<Polynomial>,
    /// The part of `𝔟` living in `B''`.
    pub b_minus: Vec<Polynomial>,
}

pub fn proof_ideals(p: &Params) -> Result<ProofIdeals> {
    p.require_general()?;
    let a = plucker_space_ring(p);
    let sigma = segre_map(p);
    let (mut gq, mut g, mut hq, mut h, mut sigma_h) = (vec![], vec![], vec![], vec![], vec![]);
    let mut b: Vec<Polynomial> = Vec::new();
    for q in p.quadruples() {
        if p.has_tinf(q) {
            gq.push(q);
            g.push(g_binomial(&a, q)?);
        } else {
            let rel = plucker_relation_in(&a, q)?;
            let img = sigma.apply(&rel)?;
            let stripped = img.div_monomial(&img.content_monomial());
            if !b.contains(&stripped) {
                b.push(stripped);
            }
            hq.push(q);
            h.push(rel);
            sigma_h.push(img);
        }
    }
    let (bp_ring, bm_ring) = (segre_block_ring_plus(p), segre_block_ring_minus(p));
    let (mut b_plus, mut b_minus) = (Vec::new(), Vec::new());
    for f in &b {
        if let Ok(x) = f.transfer(&bp_ring) {
            b_plus.push(x);
        } else {
            b_minus.push(f.transfer(&bm_ring)?);
        }
    }
    Ok(ProofIdeals { g_quadruples: gq, g, h_quadruples: hq, h, sigma_h, b, b_plus, b_minus })
}

/// Renames `S_a_b ↦ T_a_b`, `S_k ↦ T_k_e` with `e = c + 1`, turning the
/// `B'` block into Plücker coordinates of `G(2, c + 1)`.
pub fn rename_plus_block(p: &Params) -> RingMap {
    let src = segre_block_ring_plus(p);
    let e = p.c + 1;
    let tgt = plucker_ring(e);
    let images = src
        .vars()
        .names()
        .iter()
        .map(|name| {
            let idx = parse_s_name(name);
            let t = match idx {
                (a, Some(b)) => t_name(a, b),
                (k, None) => t_name(k, e),
            };
            tgt.var(&t).expect("renamed variable exists")
        })
        .collect();
    RingMap::new(&src, &tgt, images).expect("images live in the Plücker ring")
}

/// Renames the `B''` block into Plücker coordinates of `G(2, d + 1)`:
/// a new first index `1` is put in front, `S_k ↦ T_1_(k-c+1)` and
/// `S_a_b ↦ T_(a-c+1)_(b-c+1)`.
pub fn rename_minus_block(p: &Params) -> RingMap {
    let src = segre_block_ring_minus(p);
    let tgt = plucker_ring(p.d + 1);
    let shift = |x: usize| x - p.c + 1;
    let images = src
        .vars()
        .names()
        .iter()
        .map(|name| {
            let t = match parse_s_name(name) {
                (a, Some(b)) => t_name(shift(a), shift(b)),
                (k, None) => t_name(1, shift(k)),
            };
            tgt.var(&t).expect("renamed variable exists")
        })
        .collect();
    RingMap::new(&src, &tgt, images).expect("images live in the Plücker ring")
}

fn parse_s_name(name: &str) -> (usize, Option<usize>) {
    let mut parts = name.trim_start_matches("S_").split('_').map(|x| x.parse::<usize>().expect("S index"));
    let a = parts.next().expect("S index");
    (a, parts.next())
}

/// Sparse point in Plücker space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPoint {
    pub coords: BTreeMap<(usize, usize), i64>,
}

impl WitnessPoint {
    pub fn dense(&self, p: &Params) -> Vec<Rational> {
        p.pairs()
            .into_iter()
            .map(|ij| Rational::from_integer(self.coords.get(&ij).copied().unwrap_or(0).into()))
            .collect()
    }

    /// Values of all Plücker relations at the point.
    pub fn residuals(&self, p: &Params) -> Vec<Rational> {
        let ring = plucker_space_ring(p);
        let point = self.dense(p);
        plucker_relations_in(&ring, p.m())
            .expect("ring has all Plücker variables")
            .iter()
            .map(|f| f.evaluate(&point))
            .collect()
    }

    /// Cone over the `Q`-degrees of the nonvanishing coordinates.
    pub fn orbit_cone(&self, p: &Params) -> RationalCone {
        let gens: Vec<Vec<i64>> = self
            .coords
            .iter()
            .filter(|(_, &v)| v != 0)
            .map(|(&(i, j), _)| p.q_degree(i, j).to_vec())
            .collect();
        RationalCone::new(2, &gens).expect("two-dimensional degrees")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub x1: WitnessPoint,
    pub x2: WitnessPoint,
    pub omega1: RationalCone,
    pub omega2: RationalCone,
}

/// Points of the affine Grassmann cone whose orbit cones are the two GIT
/// chambers.
pub fn witness_points(p: &Params) -> Result<Witnesses> {
    let p = Params::new(p.c, p.d)?;
    let m = p.m();
    let x1 = WitnessPoint { coords: BTreeMap::from([((1, 2), 1), ((1, m), 1)]) };
    let x2 = WitnessPoint { coords: BTreeMap::from([((1, m), 1), ((m - 1, m), 1)]) };
    for (name, x) in [("x1", &x1), ("x2", &x2)] {
        if x.residuals(&p).iter().any(|r| !r.is_zero()) {
            return Err(Error::Construction(format!("witness {name} violates a Plücker relation")));
        }
    }
    let (omega1, omega2) = (x1.orbit_cone(&p), x2.orbit_cone(&p));
    Ok(Witnesses { x1, x2, omega1, omega2 })
}

/// Laurent exponents of `f̂ = Tinf · T_1_2 · T_(c,c+1)^-2 · T_(m-1,m)` in Cox
/// ring variable order.
pub fn fhat_exponents(p: &Params) -> Result<Vec<i64>> {
    p.require_general()?;
    let ring = cox_ring(p);
    let m = p.m();
    let mut e = vec![0i64; ring.nvars()];
    let pos = |name: String| ring.vars().position(&name).expect("variable exists");
    e[pos(TINF.to_string())] += 1;
    e[pos(t_name(1, 2))] += 1;
    e[pos(t_name(p.c, p.c + 1))] -= 2;
    e[pos(t_name(m - 1, m))] += 1;
    Ok(e)
}

/// Whether a Laurent monomial in the Cox variables has `Q∞`-degree zero.
pub fn is_torus_invariant(p: &Params, exponents: &[i64]) -> bool {
    let (_, qinf) = weight_matrices(p);
    Grading::new(qinf).laurent_degree(exponents).iter().all(|&x| x == 0)
}

pub fn local_equation_invariance(p: &Params) -> Result<bool> {
    Ok(is_torus_invariant(p, &fhat_exponents(p)?))
}

/// `ε` from a direct count: the minimum over the three terms of `P_ijkl` of
/// the number of factors in the `a⁺` block.
pub fn expected_tinf_power(p: &Params, q: [usize; 4]) -> u32 {
    let [i, j, k, l] = q;
    let plus = |a: usize, b: usize| u32::from(p.block(a, b) == Block::Plus);
    [plus(i, j) + plus(k, l), plus(i, k) + plus(j, l), plus(i, l) + plus(j, k)].into_iter().min().unwrap()
}
