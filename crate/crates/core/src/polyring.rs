//! Multivariate polynomials over ℚ with named variables.
//!
//! A [`PolyRing`] fixes the variable table and the monomial order; every
//! [`Polynomial`] carries a shared handle to its ring and keeps its terms
//! sorted strictly descending in that order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{BigInt, IntMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableTable { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// Monomial orders. In all of them the variable with the highest index is
/// the largest one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Block order: grevlex on the first `block` variables, ties broken by
    /// grevlex on the rest. Eliminates the first block.
    Elimination { block: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination { block } => {
                let k = block.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, i: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables occurring in the monomial (first 128 only).
    pub fn support_mask(&self) -> u128 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u128, |m, (i, _)| m | (1u128 << i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: VariableTable,
    order: MonomialOrder,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new(vars: VariableTable, order: MonomialOrder) -> RingRef {
        Arc::new(PolyRing { vars, order })
    }

    pub fn with_names<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<RingRef> {
        Ok(PolyRing::new(VariableTable::new(names)?, order))
    }

    pub fn vars(&self) -> &VariableTable {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        PolyRing::new(self.vars.clone(), order)
    }

    pub fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub fn var(self: &RingRef, name: &str) -> Result<Polynomial> {
        let i = self
            .vars
            .position(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self, i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        Polynomial::from_terms(ring, vec![(c, Monomial::one(ring.nvars()))])
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { coeff: Rational::one(), monomial: Monomial::var(ring.nvars(), i, 1) }],
        }
    }

    pub fn monomial(ring: &RingRef, coeff: Rational, monomial: Monomial) -> Self {
        Polynomial::from_terms(ring, vec![(coeff, monomial)])
    }

    /// Builds a polynomial from arbitrary terms: like terms are combined,
    /// zeros dropped and the result sorted.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Rational, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            assert_eq!(m.exponents().len(), ring.nvars(), "monomial length mismatch");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(ring: &RingRef, terms: &[(i64, Vec<u32>)]) -> Self {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Rational::from_integer(BigInt::from(*c)), Monomial::from_exponents(e.clone())))
                .collect(),
        )
    }

    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<Term>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.clone() })
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    /// Multiplies by `c * m`. Monomial multiplication preserves the order.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.mul(m) })
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Scales so that all coefficients are coprime integers with a
    /// positive leading coefficient.
    pub fn primitive_integer(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let lcm_den = self.terms.iter().fold(BigInt::one(), |l, t| l.lcm(t.coeff.denom()));
        let gcd_num = self
            .terms
            .iter()
            .fold(BigInt::zero(), |g, t| g.gcd(&(t.coeff.numer() * &lcm_den / t.coeff.denom())));
        let mut f = Rational::new(lcm_den, gcd_num);
        if self.terms[0].coeff.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Merge-add of `self` and `factor * other`.
    pub(crate) fn add_scaled(&self, other: &Polynomial, factor: &Rational) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: &b[j].coeff * factor, monomial: b[j].monomial.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].coeff + &b[j].coeff * factor;
                    if !c.is_zero() {
                        out.push(Term { coeff: c, monomial: a[i].monomial.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term { coeff: &t.coeff * factor, monomial: t.monomial.clone() }));
        Polynomial::from_sorted_terms(&self.ring, out)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &Rational::one()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &-Rational::one()))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            acc = acc.add_scaled(&large.mul_term(&t.coeff, &t.monomial), &Rational::one());
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        self.terms
            .iter()
            .map(|t| {
                t.monomial
                    .exponents()
                    .iter()
                    .zip(point)
                    .filter(|(e, _)| **e > 0)
                    .fold(t.coeff.clone(), |acc, (e, x)| acc * num_traits::pow(x.clone(), *e as usize))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Exponent of the largest power of variable `i` dividing every term.
    pub fn common_var_power(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.monomial.exponents()[i]).min().unwrap_or(0)
    }

    /// Greatest monomial dividing every term.
    pub fn content_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.ring.nvars()),
            Some(t) => it.fold(t.monomial.clone(), |g, t| g.gcd(&t.monomial)),
        }
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                assert!(m.divides(&t.monomial), "monomial does not divide every term");
                Term { coeff: t.coeff.clone(), monomial: t.monomial.div(m) }
            })
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.exponents()[i] > 0)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn transfer(&self, target: &RingRef) -> Result<Polynomial> {
        if PolyRing::same(&self.ring, target) {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .ring
            .vars()
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| match target.vars().position(n) {
                Some(j) => Ok(j),
                None if !self.uses_variable(i) => Ok(usize::MAX),
                None => Err(Error::UnknownVariable(n.clone())),
            })
            .collect::<Result<_>>()?;
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0; n];
                for (i, &x) in t.monomial.exponents().iter().enumerate() {
                    if x > 0 {
                        e[map[i]] = x;
                    }
                }
                (t.coeff.clone(), Monomial::from_exponents(e))
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// True if all coefficients are `+1` or `-1`.
    pub fn has_unit_coefficients(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_integer() && t.coeff.numer().abs().is_one())
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_terms(&self) -> Option<Vec<(i64, &Monomial)>> {
        self.terms
            .iter()
            .map(|t| {
                if t.coeff.is_integer() {
                    t.coeff.numer().to_i64().map(|c| (c, &t.monomial))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<Polynomial> {
        Parser { ring, src: text.as_bytes(), pos: 0 }.parse()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.vars().name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, &t.monomial)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> Sub for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Multiply,
}

pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Multiply => f.try_mul(g),
    }
}

/// Degree data: one column per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    matrix: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multidegree {
    Homogeneous(Vec<i64>),
    Inhomogeneous,
    /// The zero polynomial has no degree.
    Zero,
}

impl Grading {
    pub fn new(matrix: IntMatrix) -> Self {
        Grading { matrix }
    }

    pub fn from_columns(rank: usize, columns: &[Vec<i64>]) -> Self {
        Grading { matrix: IntMatrix::from_columns(rank, columns) }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn variable_degree(&self, i: usize) -> Vec<i64> {
        self.matrix.column_i64(i)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Vec<i64> {
        let mut d = vec![0i64; self.matrix.rows()];
        for (j, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (r, slot) in d.iter_mut().enumerate() {
                *slot += self.matrix.get(r, j).to_i64().expect("degree exceeds i64") * e as i64;
            }
        }
        d
    }

    /// Degree of a Laurent monomial given by signed exponents.
    pub fn laurent_degree(&self, exps: &[i64]) -> Vec<i64> {
        assert_eq!(exps.len(), self.matrix.cols());
        (0..self.matrix.rows())
            .map(|r| {
                exps.iter()
                    .enumerate()
                    .map(|(j, &e)| self.matrix.get(r, j).to_i64().expect("degree exceeds i64") * e)
                    .sum()
            })
            .collect()
    }
}

pub fn multidegree(f: &Polynomial, grading: &Grading) -> Multidegree {
    assert_eq!(grading.matrix().cols(), f.ring().nvars(), "grading does not match ring");
    let mut it = f.terms().iter().map(|t| grading.monomial_degree(&t.monomial));
    let Some(first) = it.next() else {
        return Multidegree::Zero;
    };
    if it.all(|d| d == first) {
        Multidegree::Homogeneous(first)
    } else {
        Multidegree::Inhomogeneous
    }
}

/// Ring homomorphism given by the image of each source variable.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingRef,
    target: RingRef,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: &RingRef, target: &RingRef, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::DimensionMismatch { expected: source.nvars(), actual: images.len() });
        }
        if images.iter().any(|p| !PolyRing::same(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(ring: &RingRef) -> Self {
        let images = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        RingMap { source: ring.clone(), target: ring.clone(), images }
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn image_of(&self, i: usize) -> &Polynomial {
        &self.images[i]
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !PolyRing::same(f.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(&self.target);
        for t in f.terms() {
            let mut prod = Polynomial::constant(&self.target, t.coeff.clone());
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| self.images[i].pow(e));
                prod = &prod * p;
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }
}

pub fn apply_map(map: &RingMap, f: &Polynomial) -> Result<Polynomial> {
    map.apply(f)
}

struct Parser<'a> {
    ring: &'a RingRef,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = e.to_u32().ok_or_else(|| Error::Parse { pos: self.pos, msg: "bad exponent".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.ring.var(name)
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}
