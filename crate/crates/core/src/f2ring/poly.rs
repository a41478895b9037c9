use std::collections::BTreeSet;

/// A monomial with exponents stored in generator-precedence order.
///
/// The derived ordering compares weighted degree first and then exponents
/// lexicographically, which is exactly the graded-lex term order used for
/// rewriting.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u16>,
}

impl Monomial {
    pub(crate) fn new(exps: Vec<u16>, weights: &[u32]) -> Self {
        let degree = exps.iter().zip(weights).map(|(&e, &w)| u32::from(e) * w).sum();
        Self { degree, exps }
    }

    pub(crate) fn one(ngens: usize) -> Self {
        Self { degree: 0, exps: vec![0; ngens] }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub(crate) fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub(crate) fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub(crate) fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub(crate) fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(), weights)
    }

    pub(crate) fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// An element of an F2 algebra: a set of monomials (coefficients are 0 or 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Element {
    terms: BTreeSet<Monomial>,
}

impl F2Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self { terms: BTreeSet::from([m]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Monomial> {
        self.terms.pop_last()
    }

    /// Adds one monomial (cancelling it if already present).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &F2Element) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn add(&self, other: &F2Element) -> F2Element {
        let mut s = self.clone();
        s.add_assign(other);
        s
    }

    pub(crate) fn mul_monomial(&self, m: &Monomial) -> F2Element {
        Self { terms: self.terms.iter().map(|t| t.mul(m)).collect() }
    }

    /// Raw (unreduced) product.
    pub(crate) fn mul_raw(&self, other: &F2Element) -> F2Element {
        let mut out = F2Element::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    /// Degree when every term has the same degree; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.degree();
        self.terms.iter().all(|m| m.degree() == d).then_some(d)
    }

    /// The part of the given degree.
    pub fn graded_part(&self, d: u32) -> F2Element {
        Self { terms: self.terms.iter().filter(|m| m.degree() == d).cloned().collect() }
    }
}

impl FromIterator<Monomial> for F2Element {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut e = F2Element::zero();
        for m in iter {
            e.toggle(m);
        }
        e
    }
}
