use std::collections::HashMap;

use super::algebra::PresentedF2Algebra;
use super::linalg::{solve_unique, BitRow};
use super::poly::{F2Element, Monomial};
use super::F2Error;

/// Steenrod squares on generators, extended to the algebra by the Cartan formula.
#[derive(Debug, Clone)]
pub struct SteenrodData {
    algebra: PresentedF2Algebra,
    /// `sq[g][i]` is `Sq^i` of listed generator `g`, for `0 <= i <= deg g`.
    sq: Vec<Vec<F2Element>>,
}

impl SteenrodData {
    /// `values` supplies `Sq^i(g)` for `0 < i < deg g` (by generator index);
    /// `Sq^0` and the top square are implied and checked if given.
    pub fn new(algebra: PresentedF2Algebra, values: &[(usize, u32, F2Element)]) -> Result<Self, F2Error> {
        let mut sq: Vec<Vec<Option<F2Element>>> = (0..algebra.ngens())
            .map(|g| vec![None; algebra.generator_degree(g) as usize + 1])
            .collect();
        for g in 0..algebra.ngens() {
            let x = algebra.generator(g);
            let d = algebra.generator_degree(g) as usize;
            sq[g][d] = Some(algebra.mul(&x, &x));
            sq[g][0] = Some(x);
        }
        let names = algebra.generator_names();
        for (g, i, v) in values {
            let (g, i) = (*g, *i as usize);
            if g >= algebra.ngens() || i >= sq[g].len() {
                return Err(F2Error::InconsistentSteenrodData(format!("Sq^{i} of generator {g} out of range")));
            }
            let v = algebra.normal_form(v);
            if !v.is_zero() && v.homogeneous_degree() != Some(algebra.generator_degree(g) + i as u32) {
                return Err(F2Error::InconsistentSteenrodData(format!("Sq^{i}({}) has the wrong degree", names[g])));
            }
            match &sq[g][i] {
                Some(forced) if (i == 0 || i + 1 == sq[g].len()) && *forced != v => {
                    return Err(F2Error::InconsistentSteenrodData(format!(
                        "Sq^{i}({}) must be {}",
                        names[g],
                        algebra.format(forced)
                    )));
                }
                _ => sq[g][i] = Some(v),
            }
        }
        let sq = sq
            .into_iter()
            .enumerate()
            .map(|(g, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(i, v)| v.ok_or_else(|| F2Error::MissingSteenrodValue { generator: names[g].to_string(), i: i as u32 }))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let data = Self { algebra, sq };
        data.check_relations()?;
        Ok(data)
    }

    /// Parses `(generator, i, expression)` triples.
    pub fn from_strings(algebra: PresentedF2Algebra, values: &[(&str, u32, &str)]) -> Result<Self, F2Error> {
        let parsed = values
            .iter()
            .map(|(g, i, e)| {
                let gi = algebra.generator_index(g).ok_or_else(|| F2Error::UnknownGenerator(g.to_string()))?;
                Ok((gi, *i, algebra.parse(e)?))
            })
            .collect::<Result<Vec<_>, F2Error>>()?;
        Self::new(algebra, &parsed)
    }

    fn check_relations(&self) -> Result<(), F2Error> {
        for r in self.algebra.relations() {
            let d = r.homogeneous_degree().expect("homogeneous");
            for i in 1..=d {
                let s = self.sq(i, r);
                if !s.is_zero() {
                    return Err(F2Error::InconsistentSteenrodData(format!(
                        "Sq^{i}({}) = {} is not zero",
                        self.algebra.format(r),
                        self.algebra.format(&s)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &PresentedF2Algebra {
        &self.algebra
    }

    pub fn on_generator(&self, g: usize, i: u32) -> F2Element {
        self.sq[g].get(i as usize).cloned().unwrap_or_default()
    }

    /// `Sq^i(e)`, normalized.
    pub fn sq(&self, i: u32, e: &F2Element) -> F2Element {
        let mut memo = HashMap::new();
        let mut out = F2Element::zero();
        for m in e.terms() {
            let total = self.total(m, &mut memo);
            if let Some(part) = total.get(i as usize) {
                out.add_assign(part);
            }
        }
        out
    }

    /// Total square of a monomial, split by the index `i` of `Sq^i`.
    fn total(&self, m: &Monomial, memo: &mut HashMap<Monomial, Vec<F2Element>>) -> Vec<F2Element> {
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let a = &self.algebra;
        let mut exps = a.exponents(m);
        let Some(g) = exps.iter().position(|&e| e > 0) else {
            return vec![a.one()];
        };
        exps[g] -= 1;
        let rest = self.total(&a.monomial(&exps), memo);
        let mut out = vec![F2Element::zero(); m.degree() as usize + 1];
        for (j, sg) in self.sq[g].iter().enumerate() {
            if sg.is_zero() {
                continue;
            }
            for (k, sr) in rest.iter().enumerate() {
                if !sr.is_zero() {
                    out[j + k].add_assign(&a.mul(sg, sr));
                }
            }
        }
        memo.insert(m.clone(), out.clone());
        out
    }

    /// The unique classes `v_j` with `<v_j y> = <Sq^j y>` for all `y` of
    /// complementary degree, for `0 <= j <= d/2`.
    pub fn wu_classes(&self) -> Result<Vec<F2Element>, F2Error> {
        let a = &self.algebra;
        let d = a.poincare_dimension().ok_or(F2Error::NoPoincareStructure)?;
        let mut out = Vec::new();
        for j in 0..=d / 2 {
            let low = a.graded_basis(j)?;
            let high = a.graded_basis(d - j)?;
            if low.len() != high.len() {
                return Err(F2Error::DegeneratePairing { degree: j });
            }
            let mut rows = Vec::with_capacity(high.len());
            let mut rhs = Vec::with_capacity(high.len());
            for y in high.iter() {
                let ye = F2Element::from_monomial(y.clone());
                let mut row = BitRow::zeros(low.len());
                for (c, b) in low.iter().enumerate() {
                    if a.pairing(&a.mul(&F2Element::from_monomial(b.clone()), &ye))? {
                        row.set(c, true);
                    }
                }
                rows.push(row);
                rhs.push(a.pairing(&self.sq(j, &ye))?);
            }
            let x = solve_unique(&rows, &rhs).ok_or(F2Error::DegeneratePairing { degree: j })?;
            out.push(low.iter().zip(x).filter(|(_, b)| *b).map(|(m, _)| m.clone()).collect());
        }
        Ok(out)
    }

    /// `w_k = sum_{i+j=k} Sq^i(v_j)` for `0 <= k <= d`.
    pub fn stiefel_whitney(&self) -> Result<Vec<F2Element>, F2Error> {
        let v = self.wu_classes()?;
        let d = self.algebra.poincare_dimension().ok_or(F2Error::NoPoincareStructure)?;
        Ok((0..=d)
            .map(|k| {
                let mut w = F2Element::zero();
                for (j, vj) in v.iter().enumerate() {
                    let j = j as u32;
                    if j <= k {
                        w.add_assign(&self.sq(k - j, vj));
                    }
                }
                w
            })
            .collect())
    }
}

/// Every consistent choice of the unknown generator squares, given the
/// known ones. Each unknown ranges over the whole graded piece it lives in.
pub fn solve_unknown_squares(
    algebra: &PresentedF2Algebra,
    known: &[(usize, u32, F2Element)],
    unknowns: &[(usize, u32)],
    accept: impl Fn(&SteenrodData) -> bool,
) -> Result<Vec<(Vec<F2Element>, SteenrodData)>, F2Error> {
    let mut spaces = Vec::new();
    for &(g, i) in unknowns {
        let basis = algebra.graded_basis(algebra.generator_degree(g) + i)?;
        if basis.len() > 16 {
            return Err(F2Error::InconsistentSteenrodData("candidate space too large to enumerate".into()));
        }
        spaces.push(basis);
    }
    let total_bits: usize = spaces.iter().map(|b| b.len()).sum();
    if total_bits > 20 {
        return Err(F2Error::InconsistentSteenrodData("candidate space too large to enumerate".into()));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << total_bits) {
        let mut shift = 0;
        let mut choice = Vec::with_capacity(unknowns.len());
        for basis in &spaces {
            let e: F2Element = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> (shift + k) & 1 == 1)
                .map(|(_, m)| m.clone())
                .collect();
            shift += basis.len();
            choice.push(e);
        }
        let mut values = known.to_vec();
        values.extend(unknowns.iter().zip(&choice).map(|(&(g, i), e)| (g, i, e.clone())));
        if let Ok(data) = SteenrodData::new(algebra.clone(), &values) {
            if accept(&data) {
                out.push((choice, data));
            }
        }
    }
    Ok(out)
}
