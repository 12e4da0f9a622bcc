//! Contracted semigroup algebras over exact fields and their enveloping
//! rings, the quotients by `u + v − u∨v` for orthogonal `u, v`.

use crate::duality::slice_semigroup;
use crate::error::{Error, Result};
use crate::grading::GradedGroup;
use crate::groupoid::FiniteGradedGroupoid;
use crate::invsemi::{Compatibility, GradedInverseSemigroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Exact coefficient arithmetic.
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    /// `Q` or `F_p`.
    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "Q".to_string()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Largest supported prime for [`PrimeField`].
pub const MAX_PRIME: u32 = 97;

/// The field with `p` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || (2..p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::input(format!("{p} is not a prime at most {MAX_PRIME}")));
        }
        Ok(Self { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u32) -> u32 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (a * b) % self.p
    }
    fn inv(&self, a: &u32) -> u32 {
        (1..self.p).find(|b| (a * b) % self.p == 1).expect("nonzero element")
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
}

/// Converts an integer into any field.
pub fn from_int<F: Field>(field: &F, n: i64) -> F::Elem {
    let one = field.one();
    let mut acc = field.zero();
    for _ in 0..n.unsigned_abs() {
        acc = field.add(&acc, &one);
    }
    if n < 0 {
        field.neg(&acc)
    } else {
        acc
    }
}

/// Rational from a numerator and denominator.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A finitely supported linear combination of nonzero semigroup elements.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<E> {
    terms: BTreeMap<usize, E>,
}

impl<E: Clone + PartialEq> AlgebraElement<E> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(element, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &E)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, s: usize) -> Option<&E> {
        self.terms.get(&s)
    }
}

/// The contracted semigroup algebra `F[S]`, whose basis is the nonzero
/// elements of `S`.
#[derive(Debug, Clone)]
pub struct SemigroupAlgebra<'a, G: GradedGroup, F: Field> {
    semigroup: &'a GradedInverseSemigroup<G>,
    field: F,
    basis: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl<'a, G: GradedGroup, F: Field> SemigroupAlgebra<'a, G, F> {
    pub fn new(field: F, semigroup: &'a GradedInverseSemigroup<G>) -> Self {
        let basis: Vec<usize> = semigroup.nonzero().collect();
        let mut position = vec![None; semigroup.len()];
        for (i, &b) in basis.iter().enumerate() {
            position[b] = Some(i);
        }
        Self {
            semigroup,
            field,
            basis,
            position,
        }
    }

    pub fn semigroup(&self) -> &'a GradedInverseSemigroup<G> {
        self.semigroup
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis, as semigroup elements.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// The image of `s`; the zero of `S` maps to the zero of the algebra.
    pub fn element(&self, s: usize) -> AlgebraElement<F::Elem> {
        self.combination([(s, self.field.one())])
    }

    /// `Σ cᵢ sᵢ`, collecting equal terms and dropping zeros.
    pub fn combination(&self, terms: impl IntoIterator<Item = (usize, F::Elem)>) -> AlgebraElement<F::Elem> {
        let mut out = AlgebraElement::zero();
        for (s, c) in terms {
            if s != self.semigroup.zero() {
                self.accumulate(&mut out, s, &c);
            }
        }
        out
    }

    fn accumulate(&self, out: &mut AlgebraElement<F::Elem>, s: usize, c: &F::Elem) {
        let entry = out.terms.entry(s).or_insert_with(|| self.field.zero());
        *entry = self.field.add(entry, c);
        if self.field.is_zero(entry) {
            out.terms.remove(&s);
        }
    }

    pub fn add(&self, a: &AlgebraElement<F::Elem>, b: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let mut out = a.clone();
        for (s, c) in b.terms() {
            self.accumulate(&mut out, s, c);
        }
        out
    }

    pub fn scale(&self, c: &F::Elem, a: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        self.combination(a.terms().map(|(s, x)| (s, self.field.mul(c, x))))
    }

    pub fn mul(&self, a: &AlgebraElement<F::Elem>, b: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let mut out = AlgebraElement::zero();
        for (s, x) in a.terms() {
            for (t, y) in b.terms() {
                let st = self.semigroup.mul(s, t);
                if st != self.semigroup.zero() {
                    self.accumulate(&mut out, st, &self.field.mul(x, y));
                }
            }
        }
        out
    }

    /// Homogeneous components keyed by formatted degree.
    pub fn components(&self, a: &AlgebraElement<F::Elem>) -> BTreeMap<String, AlgebraElement<F::Elem>> {
        let mut out: BTreeMap<String, AlgebraElement<F::Elem>> = BTreeMap::new();
        for (s, c) in a.terms() {
            let key = self.semigroup.degree_name(s).expect("nonzero");
            self.accumulate(out.entry(key).or_insert_with(AlgebraElement::zero), s, c);
        }
        out
    }

    fn dense(&self, a: &AlgebraElement<F::Elem>) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (s, c) in a.terms() {
            v[self.position[s].expect("nonzero")] = c.clone();
        }
        v
    }

    fn sparse(&self, v: &[F::Elem]) -> AlgebraElement<F::Elem> {
        self.combination(v.iter().enumerate().map(|(i, c)| (self.basis[i], c.clone())))
    }
}

/// Which pairs contribute a relator `u + v − u∨v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelatorPairs {
    /// Orthogonal pairs; the definition of the enveloping ring.
    #[default]
    Orthogonal,
    /// All compatible pairs with a join. Informational only.
    Compatible,
}

/// Row-reduced basis of a subspace, one row per pivot column.
#[derive(Debug, Clone)]
struct RowSpace<E> {
    rows: Vec<(usize, Vec<E>)>,
}

impl<E: Clone + PartialEq> RowSpace<E> {
    fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &mut [E]) {
        for (pivot, row) in &self.rows {
            if field.is_zero(&v[*pivot]) {
                continue;
            }
            let c = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = field.sub(x, &field.mul(&c, r));
            }
        }
    }

    /// Adds `v` to the span; returns whether the span grew.
    fn insert<F: Field<Elem = E>>(&mut self, field: &F, mut v: Vec<E>) -> bool {
        self.reduce(field, &mut v);
        let Some(pivot) = v.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&v[pivot]);
        for x in v.iter_mut() {
            *x = field.mul(&inv, x);
        }
        for (_, row) in self.rows.iter_mut() {
            if field.is_zero(&row[pivot]) {
                continue;
            }
            let c = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                *x = field.sub(x, &field.mul(&c, r));
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `F⟨S⟩`: `F[S]` modulo the two-sided ideal generated by the relators.
#[derive(Debug, Clone)]
pub struct EnvelopingRing<'a, G: GradedGroup, F: Field> {
    algebra: SemigroupAlgebra<'a, G, F>,
    graded: bool,
    relators: Vec<(usize, usize, usize)>,
    ideal: RowSpace<F::Elem>,
}

impl<'a, G: GradedGroup, F: Field> EnvelopingRing<'a, G, F> {
    /// Builds the enveloping ring with orthogonal-pair relators.
    pub fn new(field: F, semigroup: &'a GradedInverseSemigroup<G>, graded: bool) -> Result<Self> {
        Self::with_relators(field, semigroup, graded, RelatorPairs::Orthogonal)
    }

    /// Builds the ring from the chosen relator pairs. With `graded`, pairs
    /// must share a degree and `S` must be graded-Boolean; otherwise `S`
    /// must be Boolean and degrees are ignored.
    pub fn with_relators(
        field: F,
        semigroup: &'a GradedInverseSemigroup<G>,
        graded: bool,
        pairs: RelatorPairs,
    ) -> Result<Self> {
        let verdict = semigroup.is_graded_boolean();
        if graded && !verdict.is_graded_boolean() {
            return Err(Error::precondition("enveloping ring needs a graded-Boolean semigroup"));
        }
        if !graded && !verdict.is_boolean() {
            return Err(Error::precondition("non-graded enveloping ring needs a Boolean semigroup"));
        }
        let algebra = SemigroupAlgebra::new(field, semigroup);
        let mut relators = Vec::new();
        for &u in algebra.basis() {
            for &v in algebra.basis() {
                if u == v || (graded && semigroup.deg(u) != semigroup.deg(v)) {
                    continue;
                }
                let admitted = match pairs {
                    RelatorPairs::Orthogonal => semigroup.compatibility(u, v) == Compatibility::Orthogonal,
                    RelatorPairs::Compatible => semigroup.compatibility(u, v).is_compatible(),
                };
                if !admitted {
                    continue;
                }
                if let Some(j) = semigroup.join(&[u, v]) {
                    relators.push((u, v, j));
                }
            }
        }
        let mut ring = Self {
            algebra,
            graded,
            relators,
            ideal: RowSpace { rows: Vec::new() },
        };
        ring.saturate();
        Ok(ring)
    }

    fn relator_element(&self, (u, v, j): (usize, usize, usize)) -> AlgebraElement<F::Elem> {
        let f = self.algebra.field();
        self.algebra
            .combination([(u, f.one()), (v, f.one()), (j, f.neg(&f.one()))])
    }

    fn saturate(&mut self) {
        let field = self.algebra.field().clone();
        let mut queue: Vec<AlgebraElement<F::Elem>> =
            self.relators.iter().map(|&r| self.relator_element(r)).collect();
        while let Some(x) = queue.pop() {
            if !self.ideal.insert(&field, self.algebra.dense(&x)) {
                continue;
            }
            for &b in self.algebra.basis() {
                let e = self.algebra.element(b);
                queue.push(self.algebra.mul(&e, &x));
                queue.push(self.algebra.mul(&x, &e));
            }
        }
    }

    pub fn algebra(&self) -> &SemigroupAlgebra<'a, G, F> {
        &self.algebra
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// The relator triples `(u, v, u∨v)`.
    pub fn relators(&self) -> &[(usize, usize, usize)] {
        &self.relators
    }

    /// Dimension of the ideal inside `F[S]`.
    pub fn ideal_rank(&self) -> usize {
        self.ideal.rank()
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.algebra.dim() - self.ideal.rank()
    }

    /// The canonical representative of the class of `a`.
    pub fn normal_form(&self, a: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let mut v = self.algebra.dense(a);
        self.ideal.reduce(self.algebra.field(), &mut v);
        self.algebra.sparse(&v)
    }

    /// Whether `a` lies in the ideal.
    pub fn is_zero(&self, a: &AlgebraElement<F::Elem>) -> bool {
        self.normal_form(a).is_zero()
    }

    pub fn mul(&self, a: &AlgebraElement<F::Elem>, b: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        self.normal_form(&self.algebra.mul(a, b))
    }

    /// A spanning set of the ideal, as algebra elements.
    pub fn ideal_basis(&self) -> Vec<AlgebraElement<F::Elem>> {
        self.ideal.rows.iter().map(|(_, r)| self.algebra.sparse(r)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub dim_nongraded: usize,
    pub dim_graded: usize,
    pub iso: bool,
    pub field: String,
    /// Which property failed, when `iso` is false.
    pub failures: Vec<String>,
}

/// Builds `F⟨S(G)⟩` and `F⟨S^gr(G)⟩` and checks that inclusion `φ` and
/// `ψ(X) = Σ_α X ∩ G_α` are mutually inverse algebra maps between them.
pub fn phi_psi_iso_check<G: GradedGroup, F: Field>(
    field: F,
    g: &FiniteGradedGroupoid<G>,
    max_slices: usize,
) -> Result<RingReport> {
    let all = slice_semigroup(g, false, max_slices)?;
    let homogeneous = slice_semigroup(g, true, max_slices)?;
    let ring = EnvelopingRing::new(field.clone(), &all.semigroup, false)?;
    let gring = EnvelopingRing::new(field.clone(), &homogeneous.semigroup, true)?;
    let (alg, galg) = (ring.algebra(), gring.algebra());

    let phi_basis = |x: usize| -> usize {
        all.find(&homogeneous.slices[x]).expect("homogeneous slices are slices")
    };
    let psi_basis = |x: usize| -> AlgebraElement<F::Elem> {
        let mut parts: BTreeMap<&G::Elem, Vec<usize>> = BTreeMap::new();
        for &m in &all.slices[x] {
            parts.entry(g.deg(m)).or_default().push(m);
        }
        galg.combination(parts.into_values().map(|part| {
            (homogeneous.find(&part).expect("degree parts are slices"), field.one())
        }))
    };
    let phi = |a: &AlgebraElement<F::Elem>| alg.combination(a.terms().map(|(s, c)| (phi_basis(s), c.clone())));
    let psi = |a: &AlgebraElement<F::Elem>| {
        a.terms().fold(AlgebraElement::zero(), |acc, (s, c)| galg.add(&acc, &galg.scale(c, &psi_basis(s))))
    };

    let mut failures = Vec::new();
    if gring.ideal_basis().iter().any(|r| !ring.is_zero(&phi(r))) {
        failures.push("φ is not well defined on the quotient".to_string());
    }
    if ring.ideal_basis().iter().any(|r| !gring.is_zero(&psi(r))) {
        failures.push("ψ is not well defined on the quotient".to_string());
    }
    for &a in galg.basis() {
        for &b in galg.basis() {
            let (ea, eb) = (galg.element(a), galg.element(b));
            let lhs = phi(&galg.mul(&ea, &eb));
            let rhs = alg.mul(&phi(&ea), &phi(&eb));
            if !ring.is_zero(&alg.add(&lhs, &alg.scale(&field.neg(&field.one()), &rhs))) {
                failures.push(format!(
                    "φ is not multiplicative at ({}, {})",
                    homogeneous.semigroup.name(a),
                    homogeneous.semigroup.name(b)
                ));
            }
        }
        let back = psi(&phi(&galg.element(a)));
        if gring.normal_form(&back) != gring.normal_form(&galg.element(a)) {
            failures.push(format!("ψ∘φ moves {}", homogeneous.semigroup.name(a)));
        }
    }
    for &a in alg.basis() {
        for &b in alg.basis() {
            let (ea, eb) = (alg.element(a), alg.element(b));
            let lhs = psi(&alg.mul(&ea, &eb));
            let rhs = galg.mul(&psi(&ea), &psi(&eb));
            if !gring.is_zero(&galg.add(&lhs, &galg.scale(&field.neg(&field.one()), &rhs))) {
                failures.push(format!(
                    "ψ is not multiplicative at ({}, {})",
                    all.semigroup.name(a),
                    all.semigroup.name(b)
                ));
            }
        }
        let back = phi(&psi(&alg.element(a)));
        if ring.normal_form(&back) != ring.normal_form(&alg.element(a)) {
            failures.push(format!("φ∘ψ moves {}", all.semigroup.name(a)));
        }
    }
    if ring.dim() != gring.dim() {
        failures.push("dimensions differ".to_string());
    }
    Ok(RingReport {
        dim_nongraded: ring.dim(),
        dim_graded: gring.dim(),
        iso: failures.is_empty(),
        field: field.name(),
        failures,
    })
}
