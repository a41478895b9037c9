use std::collections::HashMap;

use super::algebra::PresentedF2Algebra;
use super::linalg::BitRow;
use super::poly::{F2Element, Monomial};
use super::F2Error;

/// A degree-preserving algebra homomorphism given on generators.
#[derive(Debug, Clone)]
pub struct GradedHom {
    source: PresentedF2Algebra,
    target: PresentedF2Algebra,
    images: Vec<F2Element>,
}

impl GradedHom {
    /// `images[i]` is the image of the `i`-th listed source generator.
    pub fn new(
        source: PresentedF2Algebra,
        target: PresentedF2Algebra,
        images: Vec<F2Element>,
    ) -> Result<Self, F2Error> {
        if images.len() != source.ngens() {
            return Err(F2Error::Hom(format!("{} images for {} generators", images.len(), source.ngens())));
        }
        let images: Vec<F2Element> = images.iter().map(|e| target.normal_form(e)).collect();
        for (i, img) in images.iter().enumerate() {
            if !img.is_zero() && img.homogeneous_degree() != Some(source.generator_degree(i)) {
                return Err(F2Error::Hom(format!(
                    "image of {} is not of degree {}",
                    source.generator_names()[i],
                    source.generator_degree(i)
                )));
            }
        }
        let f = Self { source, target, images };
        for (k, r) in f.source.relations().iter().enumerate() {
            if !f.apply(r).is_zero() {
                return Err(F2Error::Hom(format!(
                    "relation {} = {} does not map to zero",
                    k,
                    f.source.format(r)
                )));
            }
        }
        Ok(f)
    }

    /// Images given as expressions in the target, keyed by source generator name.
    pub fn from_strings(
        source: PresentedF2Algebra,
        target: PresentedF2Algebra,
        images: &[(&str, &str)],
    ) -> Result<Self, F2Error> {
        let mut out = vec![None; source.ngens()];
        for (name, expr) in images {
            let i = source.generator_index(name).ok_or_else(|| F2Error::UnknownGenerator(name.to_string()))?;
            out[i] = Some(target.parse(expr)?);
        }
        let out = out
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| F2Error::Hom(format!("no image for {}", source.generator_names()[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, out)
    }

    pub fn identity(a: PresentedF2Algebra) -> Self {
        let images = (0..a.ngens()).map(|i| a.generator(i)).collect();
        Self { source: a.clone(), target: a, images }
    }

    pub fn zero(source: PresentedF2Algebra, target: PresentedF2Algebra) -> Self {
        let images = vec![F2Element::zero(); source.ngens()];
        Self { source, target, images }
    }

    pub fn source(&self) -> &PresentedF2Algebra {
        &self.source
    }

    pub fn target(&self) -> &PresentedF2Algebra {
        &self.target
    }

    pub fn image_of_generator(&self, i: usize) -> &F2Element {
        &self.images[i]
    }

    /// Substitutes generator images and normalizes in the target.
    pub fn apply(&self, e: &F2Element) -> F2Element {
        let mut cache: HashMap<(usize, u16), F2Element> = HashMap::new();
        let mut out = F2Element::zero();
        for m in e.terms() {
            let exps = self.source.exponents(m);
            let mut acc = self.target.one();
            for (i, &k) in exps.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache
                    .entry((i, k))
                    .or_insert_with(|| self.target.pow(&self.images[i], u32::from(k)))
                    .clone();
                acc = self.target.mul(&acc, &p);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Matrix of the map in degree `n`: one row per target basis monomial,
    /// one column per source basis monomial.
    pub fn matrix(&self, n: u32) -> Result<Vec<BitRow>, F2Error> {
        let src = self.source.graded_basis(n)?;
        let tgt = self.target.graded_basis(n)?;
        let mut rows = vec![BitRow::zeros(src.len()); tgt.len()];
        for (j, m) in src.iter().enumerate() {
            let img = self.apply(&F2Element::from_monomial(m.clone()));
            for t in img.terms() {
                let i = tgt.iter().position(|b| b == t).expect("normal monomial in basis");
                rows[i].set(j, true);
            }
        }
        Ok(rows)
    }

    /// Dual map on homology in degree `n`: the transpose of [`Self::matrix`].
    /// Row `i` is indexed by the `i`-th source basis monomial and column `j`
    /// by the dual of the `j`-th target basis monomial, so column `j` lists
    /// the source monomials whose image contains target monomial `j`.
    pub fn dual_pushforward(&self, n: u32) -> Result<Vec<BitRow>, F2Error> {
        let m = self.matrix(n)?;
        let cols = self.source.graded_basis(n)?.len();
        let mut out = vec![BitRow::zeros(m.len()); cols];
        for (i, row) in m.iter().enumerate() {
            for j in row.ones() {
                out[j].set(i, true);
            }
        }
        Ok(out)
    }

    /// Pushforward of the dual class of one target monomial, as the list of
    /// source monomials whose duals appear in the image.
    pub fn pushforward_dual(&self, m: &Monomial) -> Result<Vec<Monomial>, F2Error> {
        let n = m.degree();
        let tgt = self.target.graded_basis(n)?;
        let j = tgt
            .iter()
            .position(|b| b == m)
            .ok_or_else(|| F2Error::Hom(format!("{} is not a basis monomial", self.target.format_monomial(m))))?;
        let src = self.source.graded_basis(n)?;
        let d = self.dual_pushforward(n)?;
        Ok(src.iter().enumerate().filter(|(i, _)| d[*i].get(j)).map(|(_, s)| s.clone()).collect())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GradedHom) -> Result<GradedHom, F2Error> {
        if self.target != next.source {
            return Err(F2Error::AlgebraMismatch);
        }
        let images = self.images.iter().map(|e| next.apply(e)).collect();
        GradedHom::new(self.source.clone(), next.target.clone(), images)
    }
}
