//! Buchberger-based ideal arithmetic.
//!
//! Pairs are selected by the normal strategy (smallest lcm first) and pruned
//! with the Gebauer–Möller installation, which subsumes Buchberger's product
//! and chain criteria. Every computation is bounded by a pair budget.

use std::cmp::Ordering;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{kernel_basis, IntMatrix, Rational};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, RingRef, Term};

pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// Ideal given by generators, with a lazily computed reduced Gröbner basis
/// for the ring's order.
#[derive(Debug)]
pub struct IdealPresentation {
    ring: RingRef,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
    // held while a basis is being computed, so concurrent callers wait
    // instead of repeating the work
    computing: Mutex<()>,
}

impl Clone for IdealPresentation {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        IdealPresentation { ring: self.ring.clone(), generators: self.generators.clone(), gb, computing: Mutex::new(()) }
    }
}

impl IdealPresentation {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| !PolyRing::same(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealPresentation { ring: ring.clone(), generators, gb: OnceLock::new(), computing: Mutex::new(()) })
    }

    /// Wraps a list already known to be the reduced Gröbner basis.
    fn from_reduced_basis(ring: &RingRef, basis: Vec<Polynomial>) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(basis.clone());
        IdealPresentation { ring: ring.clone(), generators: basis, gb, computing: Mutex::new(()) }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self, budget: usize) -> Result<&[Polynomial]> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let _guard = self.computing.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let basis = buchberger(&self.generators, budget)?;
        let _ = self.gb.set(basis);
        Ok(self.gb.get().expect("just set"))
    }

    pub fn is_whole_ring(&self, budget: usize) -> Result<bool> {
        Ok(self.groebner_basis(budget)?.iter().any(Polynomial::is_constant))
    }

    pub fn contains(&self, f: &Polynomial, budget: usize) -> Result<bool> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form(f, self.groebner_basis(budget)?).is_zero())
    }

    /// Ideal generated by `self` and `extra`.
    pub fn extend(&self, extra: Vec<Polynomial>) -> Result<IdealPresentation> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        IdealPresentation::new(&self.ring, gens)
    }
}

struct Basis {
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    masks: Vec<u128>,
    active: Vec<bool>,
}

impl Basis {
    fn new() -> Self {
        Basis { polys: Vec::new(), lms: Vec::new(), masks: Vec::new(), active: Vec::new() }
    }

    fn push(&mut self, p: Polynomial) -> usize {
        let lm = p.leading_monomial().expect("nonzero").clone();
        self.masks.push(lm.support_mask());
        self.lms.push(lm);
        self.polys.push(p);
        self.active.push(true);
        self.polys.len() - 1
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.polys.len())
            .find(|&k| self.active[k] && self.masks[k] & !mask == 0 && self.lms[k].divides(m))
    }
}

fn reduce_with(f: &Polynomial, basis: &Basis) -> Polynomial {
    let ring = f.ring().clone();
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.leading_term() {
        match basis.find_reducer(&lt.monomial) {
            Some(k) => {
                let g = &basis.polys[k];
                let factor = &lt.coeff / g.leading_coeff().expect("nonzero");
                let shift = lt.monomial.div(&basis.lms[k]);
                p = p.add_scaled(&g.mul_term(&factor, &shift), &-Rational::one());
            }
            None => {
                rem.push(lt.clone());
                p = Polynomial::from_sorted_terms(&ring, p.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

/// Fully reduced remainder of `f` modulo `g`.
pub fn normal_form(f: &Polynomial, g: &[Polynomial]) -> Polynomial {
    let mut basis = Basis::new();
    for p in g.iter().filter(|p| !p.is_zero()) {
        basis.push(p.clone());
    }
    reduce_with(f, &basis)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let (lf, lg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let a = f.mul_term(&lg.coeff, &lcm.div(&lf.monomial));
    let b = g.mul_term(&lf.coeff, &lcm.div(&lg.monomial));
    a.add_scaled(&b, &-Rational::one())
}

/// Gebauer–Möller installation of the new basis element `h`.
fn update(basis: &mut Basis, pairs: &mut Vec<Pair>, h: Polynomial) {
    let h_lm = h.leading_monomial().unwrap().clone();
    let hi = basis.polys.len();
    let candidates: Vec<Pair> = (0..hi)
        .filter(|&k| basis.active[k])
        .map(|k| Pair { i: k, j: hi, lcm: basis.lms[k].lcm(&h_lm) })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<Pair> = Vec::new();
    for (idx, p) in candidates.iter().enumerate() {
        let coprime = basis.lms[p.i].is_coprime(&h_lm);
        let dominated = candidates[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
            || kept.iter().any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p.clone());
        }
    }
    // product criterion
    kept.retain(|p| !basis.lms[p.i].is_coprime(&h_lm));

    // chain criterion on the old pairs
    pairs.retain(|p| {
        !(h_lm.divides(&p.lcm)
            && basis.lms[p.i].lcm(&h_lm) != p.lcm
            && basis.lms[p.j].lcm(&h_lm) != p.lcm)
    });
    pairs.extend(kept);

    for k in 0..hi {
        if basis.active[k] && h_lm.divides(&basis.lms[k]) {
            basis.active[k] = false;
        }
    }
    basis.push(h);
}

fn select_pair(pairs: &mut Vec<Pair>, order: MonomialOrder) -> Pair {
    let best = (0..pairs.len())
        .min_by(|&a, &b| {
            let (pa, pb) = (&pairs[a], &pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })
        .expect("nonempty");
    pairs.swap_remove(best)
}

/// Reduced Gröbner basis of the ideal generated by `gens`: monic, tail
/// reduced, sorted by descending leading monomial.
pub fn buchberger(gens: &[Polynomial], budget: usize) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| !PolyRing::same(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    let order = ring.order();
    let mut basis = Basis::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in gens {
        let h = reduce_with(g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        update(&mut basis, &mut pairs, h.make_monic());
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let pair = select_pair(&mut pairs, order);
        let s = s_polynomial(&basis.polys[pair.i], &basis.polys[pair.j], &pair.lcm);
        let h = reduce_with(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        update(&mut basis, &mut pairs, h.make_monic());
    }

    let active: Vec<Polynomial> = (0..basis.polys.len())
        .filter(|&k| basis.active[k])
        .map(|k| basis.polys[k].clone())
        .collect();
    let mut reduced = Vec::with_capacity(active.len());
    for (k, g) in active.iter().enumerate() {
        let others: Vec<Polynomial> =
            active.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, p)| p.clone()).collect();
        reduced.push(normal_form(g, &others).make_monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(reduced)
}

pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation, budget: usize) -> Result<bool> {
    if !PolyRing::same(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(a.groebner_basis(budget)? == b.groebner_basis(budget)?)
}

/// `a ⊆ b`, by reducing the generators of `a` modulo a basis of `b`.
pub fn ideal_contains(b: &IdealPresentation, a: &IdealPresentation, budget: usize) -> Result<bool> {
    if !PolyRing::same(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    let g = b.groebner_basis(budget)?;
    Ok(a.generators.iter().all(|f| normal_form(f, g).is_zero()))
}

/// Intersection of `a` with the subring on all but the first `k` variables.
/// The result lives in that subring, ordered by grevlex.
pub fn eliminate(a: &IdealPresentation, k: usize, budget: usize) -> Result<IdealPresentation> {
    let n = a.ring.nvars();
    if k > n {
        return Err(Error::DimensionMismatch { expected: n, actual: k });
    }
    let sub = PolyRing::with_names(a.ring.vars().names()[k..].iter().cloned(), MonomialOrder::GrevLex)?;
    if a.generators.is_empty() {
        return Ok(IdealPresentation::from_reduced_basis(&sub, Vec::new()));
    }
    let elim_ring = a.ring.with_order(MonomialOrder::Elimination { block: k });
    let gens = a.generators.iter().map(|g| g.transfer(&elim_ring)).collect::<Result<Vec<_>>>()?;
    let gb = buchberger(&gens, budget)?;
    let kept = gb
        .iter()
        .filter(|g| (0..k).all(|i| !g.uses_variable(i)))
        .map(|g| g.transfer(&sub))
        .collect::<Result<Vec<_>>>()?;
    // Restricting a block-order reduced basis gives the reduced basis of the
    // elimination ideal for grevlex on the remaining block.
    Ok(IdealPresentation::from_reduced_basis(&sub, kept))
}

fn fresh_name(ring: &PolyRing, base: &str) -> String {
    let mut name = base.to_string();
    while ring.vars().position(&name).is_some() {
        name.push('_');
    }
    name
}

/// `a : f^∞`, via `a + ⟨1 - w·f⟩` with `w` eliminated.
pub fn saturate(a: &IdealPresentation, f: &Polynomial, budget: usize) -> Result<IdealPresentation> {
    if !PolyRing::same(f.ring(), &a.ring) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::Degenerate("saturation by the zero polynomial".into()));
    }
    let w = fresh_name(&a.ring, "sat_w");
    let mut names = vec![w];
    names.extend(a.ring.vars().names().iter().cloned());
    let big = PolyRing::with_names(names, MonomialOrder::GrevLex)?;
    let mut gens = a.generators.iter().map(|g| g.transfer(&big)).collect::<Result<Vec<_>>>()?;
    let wf = &Polynomial::var(&big, 0) * &f.transfer(&big)?;
    gens.push(&Polynomial::one(&big) - &wf);
    let elim = eliminate(&IdealPresentation::new(&big, gens)?, 1, budget)?;
    let back = elim.generators.iter().map(|g| g.transfer(&a.ring)).collect::<Result<Vec<_>>>()?;
    if a.ring.order() == MonomialOrder::GrevLex {
        Ok(IdealPresentation::from_reduced_basis(&a.ring, back))
    } else {
        IdealPresentation::new(&a.ring, back)
    }
}

/// Dimension of the affine zero set: the largest set of variables such
/// that no leading monomial of the Gröbner basis is supported inside it.
pub fn krull_dimension(a: &IdealPresentation, budget: usize) -> Result<usize> {
    let n = a.ring.nvars();
    if n > 128 {
        return Err(Error::Unsupported("more than 128 variables".into()));
    }
    let gb = a.groebner_basis(budget)?;
    if gb.iter().any(Polynomial::is_constant) {
        return Err(Error::EmptyVariety);
    }
    let mut supports: Vec<u128> = gb.iter().map(|g| g.leading_monomial().unwrap().support_mask()).collect();
    supports.sort_unstable();
    supports.dedup();
    // Only minimal supports matter.
    let minimal: Vec<u128> = supports
        .iter()
        .copied()
        .filter(|&s| !supports.iter().any(|&t| t != s && t & !s == 0))
        .collect();
    Ok(max_independent_set(n, &minimal))
}

fn max_independent_set(n: usize, supports: &[u128]) -> usize {
    fn search(v: usize, n: usize, set: u128, size: usize, supports: &[u128], best: &mut usize) {
        if size > *best {
            *best = size;
        }
        if v == n || size + (n - v) <= *best {
            return;
        }
        let with = set | (1u128 << v);
        if !supports.iter().any(|&s| s & !with == 0) {
            search(v + 1, n, with, size + 1, supports, best);
        }
        search(v + 1, n, set, size, supports, best);
    }
    let mut best = 0;
    search(0, n, 0, 0, supports, &mut best);
    best
}

/// Kernel of the monomial map whose `j`-th source variable goes to the
/// monomial with exponent vector `exponents[:, j]`.
///
/// Binomials of a lattice basis of the integer kernel, saturated by every
/// variable that occurs in them. Returned as its reduced Gröbner basis.
pub fn toric_kernel(ring: &RingRef, exponents: &IntMatrix, budget: usize) -> Result<IdealPresentation> {
    let n = ring.nvars();
    if exponents.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: exponents.cols() });
    }
    let lattice = kernel_basis(exponents);
    let mut gens = Vec::with_capacity(lattice.rows());
    for r in 0..lattice.rows() {
        let (mut pos, mut neg) = (vec![0u32; n], vec![0u32; n]);
        for (j, x) in lattice.row(r).iter().enumerate() {
            let v: i64 = num_traits::ToPrimitive::to_i64(x).expect("lattice entry exceeds i64");
            match v.cmp(&0) {
                Ordering::Greater => pos[j] = v as u32,
                Ordering::Less => neg[j] = (-v) as u32,
                Ordering::Equal => {}
            }
        }
        gens.push(Polynomial::from_terms(
            ring,
            vec![
                (Rational::one(), Monomial::from_exponents(pos)),
                (-Rational::one(), Monomial::from_exponents(neg)),
            ],
        ));
    }
    let mut ideal = IdealPresentation::new(ring, gens)?;
    for v in 0..n {
        if ideal.generators.iter().any(|g| g.uses_variable(v)) {
            ideal = saturate(&ideal, &Polynomial::var(ring, v), budget)?;
        }
    }
    let gb = ideal.groebner_basis(budget)?.to_vec();
    Ok(IdealPresentation::from_reduced_basis(ring, gb))
}

/// Is `f` a constant multiple of 1?
pub fn is_unit(f: &Polynomial) -> bool {
    f.is_constant() && !f.is_zero() && f.leading_coeff().is_some_and(|c| !c.is_zero())
}
