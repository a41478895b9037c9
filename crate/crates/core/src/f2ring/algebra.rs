use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::linalg::{BitRow, Echelon};
use super::poly::{F2Element, Monomial};
use super::F2Error;

pub const DEFAULT_DEGREE_BOUND: u32 = 64;
pub const DEFAULT_ORACLE_DEGREE: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareSpec {
    pub dimension: u32,
    pub top: String,
}

/// Textual presentation of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub name: String,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub relations: Vec<String>,
    /// Generators from highest to lowest rewriting precedence; defaults to
    /// the listed order.
    #[serde(default)]
    pub precedence: Option<Vec<String>>,
    #[serde(default)]
    pub poincare: Option<PoincareSpec>,
    #[serde(default = "default_bound")]
    pub degree_bound: u32,
    #[serde(default = "default_oracle")]
    pub oracle_degree: u32,
}

fn default_bound() -> u32 {
    DEFAULT_DEGREE_BOUND
}

fn default_oracle() -> u32 {
    DEFAULT_ORACLE_DEGREE
}

impl AlgebraSpec {
    pub fn new(name: &str, generators: &[(&str, u32)], relations: &[&str]) -> Self {
        Self {
            name: name.to_string(),
            generators: generators
                .iter()
                .map(|(n, d)| GeneratorSpec { name: n.to_string(), degree: *d })
                .collect(),
            relations: relations.iter().map(|r| r.to_string()).collect(),
            precedence: None,
            poincare: None,
            degree_bound: DEFAULT_DEGREE_BOUND,
            oracle_degree: DEFAULT_ORACLE_DEGREE,
        }
    }

    pub fn with_precedence(mut self, order: &[&str]) -> Self {
        self.precedence = Some(order.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn with_poincare(mut self, dimension: u32, top: &str) -> Self {
        self.poincare = Some(PoincareSpec { dimension, top: top.to_string() });
        self
    }
}

#[derive(Debug)]
struct AlgebraData {
    spec: AlgebraSpec,
    /// Internal (precedence) position -> listed generator index.
    perm: Vec<usize>,
    /// Listed generator index -> internal position.
    pos: Vec<usize>,
    weights: Vec<u32>,
    relations: Vec<F2Element>,
    groebner: Vec<F2Element>,
    leads: Vec<Monomial>,
    top: OnceLock<Monomial>,
    basis_cache: Mutex<HashMap<u32, Arc<Vec<Monomial>>>>,
}

/// A finitely presented commutative algebra over F2 with homogeneous
/// relations, completed to a reduced Gröbner basis at construction.
#[derive(Debug, Clone)]
pub struct PresentedF2Algebra(Arc<AlgebraData>);

impl PartialEq for PresentedF2Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for PresentedF2Algebra {}

impl PresentedF2Algebra {
    pub fn new(spec: AlgebraSpec) -> Result<Self, F2Error> {
        let n = spec.generators.len();
        for (i, g) in spec.generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(F2Error::Presentation(format!("generator {} has degree 0", g.name)));
            }
            if !is_identifier(&g.name) {
                return Err(F2Error::Presentation(format!("invalid generator name {:?}", g.name)));
            }
            if spec.generators[..i].iter().any(|h| h.name == g.name) {
                return Err(F2Error::Presentation(format!("duplicate generator {}", g.name)));
            }
        }
        let perm: Vec<usize> = match &spec.precedence {
            None => (0..n).collect(),
            Some(order) => {
                let p: Vec<usize> = order
                    .iter()
                    .map(|name| {
                        spec.generators
                            .iter()
                            .position(|g| &g.name == name)
                            .ok_or_else(|| F2Error::UnknownGenerator(name.clone()))
                    })
                    .collect::<Result<_, _>>()?;
                let mut sorted = p.clone();
                sorted.sort_unstable();
                if sorted != (0..n).collect::<Vec<_>>() {
                    return Err(F2Error::Presentation("precedence must list every generator once".into()));
                }
                p
            }
        };
        let mut pos = vec![0; n];
        for (internal, &listed) in perm.iter().enumerate() {
            pos[listed] = internal;
        }
        let weights: Vec<u32> = perm.iter().map(|&i| spec.generators[i].degree).collect();
        let mut data = AlgebraData {
            spec,
            perm,
            pos,
            weights,
            relations: Vec::new(),
            groebner: Vec::new(),
            leads: Vec::new(),
            top: OnceLock::new(),
            basis_cache: Mutex::new(HashMap::new()),
        };
        let mut relations = Vec::new();
        for (i, r) in data.spec.relations.iter().enumerate() {
            let e = parse_raw(&data, r).map_err(|e| match e {
                F2Error::Parse { position, message } => {
                    F2Error::Parse { position, message: format!("relation {i}: {message}") }
                }
                other => other,
            })?;
            if !e.is_zero() && e.homogeneous_degree().is_none() {
                return Err(F2Error::InhomogeneousRelation(i));
            }
            if !e.is_zero() {
                relations.push(e);
            }
        }
        data.groebner = super::groebner::complete(&relations, &data.weights, data.spec.degree_bound)?;
        data.leads = data.groebner.iter().map(|g| g.leading().expect("nonzero").clone()).collect();
        data.relations = relations;
        let alg = PresentedF2Algebra(Arc::new(data));
        alg.certify()?;
        if let Some(p) = &alg.0.spec.poincare {
            let top = alg.check_poincare(p)?;
            alg.0.top.set(top).expect("top class set once");
        }
        Ok(alg)
    }

    /// Compares graded dimensions with a brute-force quotient computation.
    fn certify(&self) -> Result<(), F2Error> {
        let upto = self.0.spec.oracle_degree.min(self.0.spec.degree_bound);
        for d in 0..=upto {
            let fast = self.graded_basis(d)?.len();
            let slow = self.oracle_dimension(d);
            if fast != slow {
                return Err(F2Error::NonConfluentPresentation(format!(
                    "degree {d}: rewriting gives {fast} basis monomials, quotient has dimension {slow}"
                )));
            }
        }
        Ok(())
    }

    fn check_poincare(&self, p: &PoincareSpec) -> Result<Monomial, F2Error> {
        let top = self.parse(&p.top)?;
        let m = match (top.len(), top.leading()) {
            (1, Some(m)) if m.degree() == p.dimension => m.clone(),
            _ => return Err(F2Error::Poincare(format!("top class {:?} is not a single monomial of degree {}", p.top, p.dimension))),
        };
        if *self.graded_basis(p.dimension)? != vec![m.clone()] {
            return Err(F2Error::Poincare(format!("degree {} is not spanned by the top class", p.dimension)));
        }
        let max_gen = self.0.weights.iter().copied().max().unwrap_or(1);
        for d in p.dimension + 1..=p.dimension + max_gen {
            if !self.graded_basis(d)?.is_empty() {
                return Err(F2Error::Poincare(format!("non-zero classes above the top degree (degree {d})")));
            }
        }
        Ok(m)
    }

    pub fn name(&self) -> &str {
        &self.0.spec.name
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.0.spec
    }

    pub fn degree_bound(&self) -> u32 {
        self.0.spec.degree_bound
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.0.spec.generators.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn generator_degree(&self, listed: usize) -> u32 {
        self.0.spec.generators[listed].degree
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.0.spec.generators.iter().position(|g| g.name == name)
    }

    pub fn ngens(&self) -> usize {
        self.0.spec.generators.len()
    }

    /// The generator as an element.
    pub fn generator(&self, listed: usize) -> F2Element {
        let mut exps = vec![0u16; self.ngens()];
        exps[self.0.pos[listed]] = 1;
        self.normal_form(&F2Element::from_monomial(Monomial::new(exps, &self.0.weights)))
    }

    pub fn one(&self) -> F2Element {
        F2Element::from_monomial(Monomial::one(self.ngens()))
    }

    /// Monomial from exponents listed in generator order (not reduced).
    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        let mut internal = vec![0u16; self.ngens()];
        for (listed, &e) in exps.iter().enumerate() {
            internal[self.0.pos[listed]] = e;
        }
        Monomial::new(internal, &self.0.weights)
    }

    /// Exponents of a monomial in generator order.
    pub fn exponents(&self, m: &Monomial) -> Vec<u16> {
        let mut out = vec![0u16; self.ngens()];
        for (internal, &e) in m.exps().iter().enumerate() {
            out[self.0.perm[internal]] = e;
        }
        out
    }

    pub fn groebner_basis(&self) -> &[F2Element] {
        &self.0.groebner
    }

    pub fn relations(&self) -> &[F2Element] {
        &self.0.relations
    }

    pub fn top_class(&self) -> Option<&Monomial> {
        self.0.top.get()
    }

    pub fn poincare_dimension(&self) -> Option<u32> {
        self.0.spec.poincare.as_ref().map(|p| p.dimension)
    }

    fn is_reducible(&self, m: &Monomial) -> bool {
        self.0.leads.iter().any(|l| l.divides(m))
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        !self.is_reducible(m)
    }

    /// Unique normal form modulo the relations.
    pub fn normal_form(&self, e: &F2Element) -> F2Element {
        super::groebner::reduce(e, &self.0.groebner)
    }

    pub fn add(&self, a: &F2Element, b: &F2Element) -> F2Element {
        a.add(b)
    }

    pub fn mul(&self, a: &F2Element, b: &F2Element) -> F2Element {
        self.normal_form(&a.mul_raw(b))
    }

    pub fn pow(&self, a: &F2Element, e: u32) -> F2Element {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Parses and normalizes an expression such as `x*y + x^2`.
    pub fn parse(&self, text: &str) -> Result<F2Element, F2Error> {
        Ok(self.normal_form(&parse_raw(&self.0, text)?))
    }

    /// All normal monomials of degree `n`, in descending term order.
    pub fn graded_basis(&self, n: u32) -> Result<Arc<Vec<Monomial>>, F2Error> {
        if n > self.0.spec.degree_bound {
            return Err(F2Error::DegreeBoundExceeded { degree: n, bound: self.0.spec.degree_bound });
        }
        if let Some(b) = self.0.basis_cache.lock().expect("basis cache").get(&n) {
            return Ok(Arc::clone(b));
        }
        let mut out: Vec<Monomial> = free_monomials(&self.0.weights, n)
            .into_iter()
            .filter(|m| !self.is_reducible(m))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        let out = Arc::new(out);
        self.0.basis_cache.lock().expect("basis cache").insert(n, Arc::clone(&out));
        Ok(out)
    }

    /// Dimension of the degree-`n` part computed without rewriting: the
    /// number of monomials minus the rank of all relation multiples.
    pub fn oracle_dimension(&self, n: u32) -> usize {
        let all = free_monomials(&self.0.weights, n);
        let index: HashMap<&Monomial, usize> = all.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = Echelon::new();
        for r in &self.0.relations {
            let d = r.homogeneous_degree().expect("homogeneous relation");
            if d > n {
                continue;
            }
            for m in free_monomials(&self.0.weights, n - d) {
                let mut row = BitRow::zeros(all.len());
                for t in r.terms() {
                    row.flip(index[&t.mul(&m)]);
                }
                ech.insert(row);
            }
        }
        all.len() - ech.rank()
    }

    /// Coordinates of a homogeneous element in the degree-`n` basis.
    pub fn coordinates(&self, e: &F2Element, n: u32) -> Result<BitRow, F2Error> {
        let basis = self.graded_basis(n)?;
        let nf = self.normal_form(e);
        let mut row = BitRow::zeros(basis.len());
        for m in nf.terms() {
            if m.degree() != n {
                return Err(F2Error::Presentation(format!("element has a term outside degree {n}")));
            }
            let i = basis.iter().position(|b| b == m).expect("normal monomial is in the basis");
            row.set(i, true);
        }
        Ok(row)
    }

    /// Coefficient of the designated top class.
    pub fn pairing(&self, e: &F2Element) -> Result<bool, F2Error> {
        let top = self.0.top.get().ok_or(F2Error::NoPoincareStructure)?;
        Ok(self.normal_form(e).contains(top))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let exps = self.exponents(m);
        let parts: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = &self.0.spec.generators[i].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn format(&self, e: &F2Element) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, m) in e.terms().rev().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "{}", self.format_monomial(m));
        }
        s
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// All monomials of weighted degree `n` in the internal variable order.
pub(crate) fn free_monomials(weights: &[u32], n: u32) -> Vec<Monomial> {
    fn go(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::new(cur.clone(), weights));
            }
            return;
        }
        for e in 0..=left / weights[i] {
            cur[i] = e as u16;
            go(weights, i + 1, left - e * weights[i], cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(weights, 0, n, &mut vec![0; weights.len()], &mut out);
    out
}

fn parse_raw(data: &AlgebraData, text: &str) -> Result<F2Element, F2Error> {
    let mut p = Parser { data, src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    data: &'a AlgebraData,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> F2Error {
        F2Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<F2Element, F2Error> {
        let mut acc = self.term()?;
        // Over F2 subtraction is addition.
        while matches!(self.peek(), Some(b'+' | b'-')) {
            self.pos += 1;
            acc.add_assign(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<F2Element, F2Error> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul_raw(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<F2Element, F2Error> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let e = self.integer()?;
        if e > u64::from(self.data.spec.degree_bound) + 1 {
            return Err(self.err("exponent too large"));
        }
        let mut acc = F2Element::from_monomial(Monomial::one(self.data.weights.len()));
        for _ in 0..e {
            acc = acc.mul_raw(&base);
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<u64, F2Error> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits")
            .parse()
            .map_err(|_| F2Error::Parse { position: start, message: "integer overflow".into() })
    }

    fn atom(&mut self) -> Result<F2Element, F2Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(if n % 2 == 1 {
                    F2Element::from_monomial(Monomial::one(self.data.weights.len()))
                } else {
                    F2Element::zero()
                })
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let listed = self
                    .data
                    .spec
                    .generators
                    .iter()
                    .position(|g| g.name == name)
                    .ok_or_else(|| F2Error::Parse { position: start, message: format!("unknown generator {name:?}") })?;
                let mut exps = vec![0u16; self.data.weights.len()];
                exps[self.data.pos[listed]] = 1;
                Ok(F2Element::from_monomial(Monomial::new(exps, &self.data.weights)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
