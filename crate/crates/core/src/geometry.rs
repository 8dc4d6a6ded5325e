//! Exact rational cones and fans.
//!
//! High-dimensional fans are handled purely combinatorially: maximal cones are
//! index sets into the ray list, and quotient fans are read off from the
//! two-row weight matrix by Gale duality. Full H-descriptions are only ever
//! computed for small cones.

use std::cmp::Ordering;

use itertools::Itertools;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{dot_big, kernel_basis, primitive, rank, solve_rational, BigInt, IntMatrix};

/// Largest ambient dimension in which cones are reduced to extremal rays and
/// intersections are supported.
pub const SMALL_DIM: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Closed,
    RelativeInterior,
}

/// Cone generated by primitive integer vectors.
///
/// Generators are sorted lexicographically with duplicates removed; in
/// dimension at most three a pointed cone keeps only its extremal rays.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalCone {
    dim: usize,
    rays: Vec<Vec<i64>>,
}

/// Linear equations and facet inequalities (`a·x >= 0`) of a cone.
#[derive(Clone, Debug)]
struct HRep {
    equations: Vec<Vec<BigInt>>,
    inequalities: Vec<Vec<BigInt>>,
}

fn to_matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows)
}

impl RationalCone {
    pub fn new(dim: usize, generators: &[Vec<i64>]) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, actual: g.len() });
        }
        let mut rays: Vec<Vec<i64>> = generators
            .iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .map(|g| primitive(g))
            .collect();
        rays.sort();
        rays.dedup();
        let mut cone = RationalCone { dim, rays };
        if dim <= SMALL_DIM && cone.is_pointed() {
            cone.drop_redundant();
        }
        Ok(cone)
    }

    pub fn zero(dim: usize) -> Self {
        RationalCone { dim, rays: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        if self.rays.is_empty() {
            0
        } else {
            rank(&to_matrix(&self.rays, self.dim))
        }
    }

    /// A cone is pointed iff no generator has its negative in the cone.
    pub fn is_pointed(&self) -> bool {
        !self.rays.iter().any(|g| {
            let neg: Vec<i64> = g.iter().map(|x| -x).collect();
            self.contains(&neg, Membership::Closed)
        })
    }

    fn drop_redundant(&mut self) {
        let mut k = 0;
        while k < self.rays.len() {
            let mut others = self.rays.clone();
            let g = others.remove(k);
            let rest = RationalCone { dim: self.dim, rays: others.clone() };
            if rest.contains(&g, Membership::Closed) {
                self.rays = others;
            } else {
                k += 1;
            }
        }
    }

    fn hrep(&self) -> HRep {
        let dim = self.dim;
        if self.rays.is_empty() {
            let id = IntMatrix::identity(dim);
            return HRep { equations: (0..dim).map(|i| id.row(i).to_vec()).collect(), inequalities: vec![] };
        }
        let g = to_matrix(&self.rays, dim);
        let perp = kernel_basis(&g);
        let equations: Vec<Vec<BigInt>> = (0..perp.rows()).map(|i| perp.row(i).to_vec()).collect();
        let r = dim - perp.rows();
        let mut inequalities: Vec<Vec<BigInt>> = Vec::new();
        for subset in (0..self.rays.len()).combinations(r - 1) {
            let sub: Vec<Vec<i64>> = subset.iter().map(|&i| self.rays[i].clone()).collect();
            let sm = if sub.is_empty() { IntMatrix::zeros(0, dim) } else { to_matrix(&sub, dim) };
            if !sub.is_empty() && rank(&sm) != r - 1 {
                continue;
            }
            let k = kernel_basis(&sm);
            let Some(f) = (0..k.rows())
                .map(|i| k.row(i).to_vec())
                .find(|f| self.rays.iter().any(|g| !dot_big(f, g).is_zero()))
            else {
                continue;
            };
            let signs: Vec<Ordering> =
                self.rays.iter().map(|g| dot_big(&f, g).cmp(&BigInt::zero())).collect();
            let f = if signs.iter().all(|&s| s != Ordering::Less) {
                f
            } else if signs.iter().all(|&s| s != Ordering::Greater) {
                f.into_iter().map(|x| -x).collect()
            } else {
                continue;
            };
            if !inequalities.contains(&f) {
                inequalities.push(f);
            }
        }
        HRep { equations, inequalities }
    }

    pub fn contains(&self, v: &[i64], mode: Membership) -> bool {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        if self.rays.is_empty() {
            return v.iter().all(|&x| x == 0);
        }
        let g = to_matrix(&self.rays, self.dim);
        if rank(&g) == self.rays.len() {
            // independent generators: unique coefficients
            let b: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            return match solve_rational(&g.transpose(), &b) {
                None => false,
                Some(lambda) => match mode {
                    Membership::Closed => lambda.iter().all(|l| !l.is_negative()),
                    Membership::RelativeInterior => lambda.iter().all(|l| l.is_positive()),
                },
            };
        }
        let h = self.hrep();
        if h.equations.iter().any(|e| !dot_big(e, v).is_zero()) {
            return false;
        }
        h.inequalities.iter().all(|a| {
            let s = dot_big(a, v);
            match mode {
                Membership::Closed => !s.is_negative(),
                Membership::RelativeInterior => s.is_positive(),
            }
        })
    }

    /// `self ⊆ other`
    pub fn is_subcone_of(&self, other: &RationalCone) -> bool {
        self.rays.iter().all(|r| other.contains(r, Membership::Closed))
    }
}

pub fn cone_membership(cone: &RationalCone, v: &[i64], mode: Membership) -> Result<bool> {
    if v.len() != cone.dim {
        return Err(Error::DimensionMismatch { expected: cone.dim, actual: v.len() });
    }
    Ok(cone.contains(v, mode))
}

/// Intersection of two pointed cones in dimension at most three.
pub fn cone_intersect(a: &RationalCone, b: &RationalCone) -> Result<RationalCone> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, actual: b.dim });
    }
    let dim = a.dim;
    if dim > SMALL_DIM {
        return Err(Error::Unsupported(format!("cone intersection in dimension {dim}")));
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for h in [a.hrep(), b.hrep()] {
        for e in h.equations {
            rows.push(e.iter().map(|x| -x).collect());
            rows.push(e);
        }
        rows.extend(h.inequalities);
    }
    let all = IntMatrix::new(rows.len(), dim, rows.iter().flatten().cloned().collect());
    if rank(&all) < dim {
        return Err(Error::Unsupported("intersection is not pointed".into()));
    }
    let feasible = |x: &[i64]| rows.iter().all(|r| !dot_big(r, x).is_negative());
    let mut rays = Vec::new();
    for subset in (0..rows.len()).combinations(dim - 1) {
        let sm = IntMatrix::new(
            subset.len(),
            dim,
            subset.iter().flat_map(|&i| rows[i].iter().cloned()).collect(),
        );
        if rank(&sm) != dim - 1 {
            continue;
        }
        let k = kernel_basis(&sm);
        let x: Vec<i64> = k.row(0).iter().map(|v| v.to_i64().expect("ray entry exceeds i64")).collect();
        let neg: Vec<i64> = x.iter().map(|v| -v).collect();
        for cand in [x, neg] {
            if feasible(&cand) {
                rays.push(cand);
            }
        }
    }
    RationalCone::new(dim, &rays)
}

/// Fan given by a ray list and maximal cones as sorted ray-index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
    pub simplicial: bool,
}

impl Fan {
    pub fn cone(&self, k: usize) -> RationalCone {
        let gens: Vec<Vec<i64>> = self.cones[k].iter().map(|&i| self.rays[i].clone()).collect();
        RationalCone::new(self.dim, &gens).expect("fan rays have the fan dimension")
    }

    pub fn maximal_cones(&self) -> Vec<RationalCone> {
        (0..self.cones.len()).map(|k| self.cone(k)).collect()
    }

    pub fn ray_index(&self, v: &[i64]) -> Option<usize> {
        let p = primitive(v);
        self.rays.iter().position(|r| *r == p)
    }
}

fn cross(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// GIT fan of a two-row weight matrix acting on affine space.
///
/// Chambers are cut out by the rays through the columns: the maximal
/// chambers are the cones between angularly consecutive column rays, listed
/// clockwise. When all columns span a single ray, that ray is the only
/// chamber.
pub fn git_fan(q: &IntMatrix) -> Result<Fan> {
    if q.rows() != 2 {
        return Err(Error::Unsupported(format!("GIT fan for a {}-row weight matrix", q.rows())));
    }
    let cols: Vec<Vec<i64>> = (0..q.cols()).map(|j| q.column_i64(j)).filter(|c| c.iter().any(|&x| x != 0)).collect();
    if rank(q) == 0 || cols.is_empty() {
        return Err(Error::Degenerate("weight matrix has rank 0".into()));
    }
    let effective = RationalCone::new(2, &cols)?;
    if !effective.is_pointed() {
        return Err(Error::Degenerate("weights do not lie in a common open half-plane".into()));
    }
    let mut rays: Vec<Vec<i64>> = cols.iter().map(|c| primitive(c)).collect();
    rays.sort();
    rays.dedup();
    // clockwise: a before b iff b is clockwise of a
    rays.sort_by(|a, b| cross(a, b).cmp(&0));
    let cones = if rays.len() == 1 {
        vec![vec![0]]
    } else {
        (0..rays.len() - 1).map(|i| vec![i, i + 1]).collect()
    };
    Ok(Fan { dim: 2, rays, cones, simplicial: true })
}

fn check_gale_pair(p: &IntMatrix, q: &IntMatrix) -> Result<()> {
    if p.cols() != q.cols() {
        return Err(Error::DimensionMismatch { expected: q.cols(), actual: p.cols() });
    }
    if !p.mul(&q.transpose()).is_zero() {
        return Err(Error::NotGalePair);
    }
    Ok(())
}

/// Decides whether the columns of `p` outside `removed` span a cone of the
/// quotient fan attached to `w`, via the dual criterion
/// `w ∈ relint cone(Q_i : i ∈ removed)`.
pub fn gale_cone_test(p: &IntMatrix, q: &IntMatrix, w: &[i64], removed: &[usize]) -> Result<bool> {
    check_gale_pair(p, q)?;
    if w.len() != q.rows() {
        return Err(Error::DimensionMismatch { expected: q.rows(), actual: w.len() });
    }
    let gens: Vec<Vec<i64>> = removed.iter().map(|&i| q.column_i64(i)).collect();
    let cone = RationalCone::new(q.rows(), &gens)?;
    Ok(cone.contains(w, Membership::RelativeInterior))
}

/// Quotient fan for a generic `w` and a rank-two weight matrix: the maximal
/// cones are the complements of the pairs accepted by [`gale_cone_test`].
pub fn quotient_fan(p: &IntMatrix, q: &IntMatrix, w: &[i64]) -> Result<Fan> {
    check_gale_pair(p, q)?;
    if rank(q) != 2 {
        return Err(Error::Unsupported("quotient fans need a rank-two weight matrix".into()));
    }
    let n = q.cols();
    let mut cones = Vec::new();
    for pair in (0..n).combinations(2) {
        if gale_cone_test(p, q, w, &pair)? {
            cones.push((0..n).filter(|i| !pair.contains(i)).collect::<Vec<_>>());
        }
    }
    let rays: Vec<Vec<i64>> = (0..n).map(|j| primitive(&p.column_i64(j))).collect();
    let simplicial = cones.iter().all(|c| rank(&p.select_columns(c)) == c.len());
    Ok(Fan { dim: p.rows(), rays, cones, simplicial })
}

/// Stellar subdivision of a simplicial fan: every maximal cone containing
/// `target` is replaced by the cones over `new_ray` and its facets that miss
/// one ray of `target`.
pub fn stellar_subdivide(fan: &Fan, target: &[usize], new_ray: &[i64]) -> Result<Fan> {
    if !fan.simplicial {
        return Err(Error::InvalidSubdivision("fan is not simplicial".into()));
    }
    if new_ray.len() != fan.dim {
        return Err(Error::DimensionMismatch { expected: fan.dim, actual: new_ray.len() });
    }
    if target.is_empty() || target.iter().any(|&i| i >= fan.rays.len()) {
        return Err(Error::InvalidSubdivision("target is not a set of ray indices".into()));
    }
    let mut target: Vec<usize> = target.to_vec();
    target.sort_unstable();
    target.dedup();
    let ray = primitive(new_ray);
    if fan.rays.contains(&ray) {
        return Err(Error::InvalidSubdivision("new ray coincides with an existing ray".into()));
    }
    let gens: Vec<Vec<i64>> = target.iter().map(|&i| fan.rays[i].clone()).collect();
    let target_cone = RationalCone { dim: fan.dim, rays: gens };
    if !target_cone.contains(&ray, Membership::RelativeInterior) {
        return Err(Error::InvalidSubdivision("new ray is not in the relative interior of the target".into()));
    }
    let contains_target = |c: &Vec<usize>| target.iter().all(|t| c.contains(t));
    if !fan.cones.iter().any(contains_target) {
        return Err(Error::InvalidSubdivision("target is not a face of a maximal cone".into()));
    }
    let new_index = fan.rays.len();
    let mut cones = Vec::new();
    for c in &fan.cones {
        if contains_target(c) {
            for t in &target {
                let mut nc: Vec<usize> = c.iter().copied().filter(|i| i != t).collect();
                nc.push(new_index);
                nc.sort_unstable();
                cones.push(nc);
            }
        } else {
            cones.push(c.clone());
        }
    }
    let mut rays = fan.rays.clone();
    rays.push(ray);
    Ok(Fan { dim: fan.dim, rays, cones, simplicial: true })
}

/// Primitive vector on the ray through the sum of the selected columns.
pub fn barycenter_direction(p: &IntMatrix, cols: &[usize]) -> Result<Vec<i64>> {
    let mut sum = vec![0i64; p.rows()];
    for &j in cols {
        for (s, x) in sum.iter_mut().zip(p.column_i64(j)) {
            *s += x;
        }
    }
    if sum.iter().all(|&x| x == 0) {
        return Err(Error::Degenerate("selected columns sum to zero".into()));
    }
    Ok(primitive(&sum))
}

/// Effective and movable cones from the degrees of a generating system.
///
/// `Eff = cone(all degrees)`; `Mov` is the intersection over the generators
/// of the cone spanned by the remaining degrees. Removing one of several
/// generators with the same degree ray leaves `Eff` unchanged, so only rays
/// carried by a single generator contribute.
pub fn mori_cones(degrees: &[Vec<i64>]) -> Result<(RationalCone, RationalCone)> {
    let Some(first) = degrees.first() else {
        return Err(Error::Degenerate("no degrees given".into()));
    };
    let dim = first.len();
    let eff = RationalCone::new(dim, degrees)?;
    let classes: Vec<Vec<i64>> = degrees.iter().map(|d| primitive(d)).collect();
    let mut mov = eff.clone();
    let distinct: Vec<&Vec<i64>> = classes.iter().unique().collect();
    for class in distinct {
        if class.iter().all(|&x| x == 0) || classes.iter().filter(|c| *c == class).count() > 1 {
            continue;
        }
        let rest: Vec<Vec<i64>> =
            degrees.iter().zip(&classes).filter(|(_, c)| *c != class).map(|(d, _)| d.clone()).collect();
        let cone = RationalCone::new(dim, &rest)?;
        mov = cone_intersect(&mov, &cone)?;
    }
    Ok((eff, mov))
}
