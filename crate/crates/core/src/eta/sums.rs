//! The eta sums themselves.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::EtaError;
use crate::exactnum::{CyclotomicNumber, Rational};
use crate::grouprep::{cyclic_free_rep_on, FreeUnitaryRep, GroupTag, VirtualCharacter};

/// `|G|^-1 sum_{g != 1} Tr rho(g) det(tau(g))^{1/2} / det(I - tau(g))`.
pub fn eta_donnelly(tau: &FreeUnitaryRep, rho: &VirtualCharacter) -> Result<Rational, EtaError> {
    if !std::sync::Arc::ptr_eq(tau.table(), rho.table()) && **tau.table() != **rho.table() {
        return Err(EtaError::GroupMismatch);
    }
    let group = tau.table().group();
    let n = num_integer::lcm(tau.table().field_order(), tau.root_order());
    let mut total = CyclotomicNumber::zero(n);
    for (c, class) in group.classes().iter().enumerate().skip(1) {
        let trace = rho.value_at_class(c);
        if trace.is_zero() {
            continue;
        }
        let denom = tau.det_one_minus(c);
        let denom_inv = denom.inverse().map_err(|_| EtaError::NotFixedPointFree(class.name.clone()))?;
        let term = &(&trace * &tau.det_sqrt().value_at_class(c)) * &denom_inv;
        total = total + term.scale(&Rational::from_integer((class.size() as i64).into()));
    }
    let r = total.as_rational().ok_or(EtaError::NonRationalSum)?;
    Ok(r / Rational::from_integer((group.order() as i64).into()))
}

/// Floating-point evaluation of the same sum straight from the eigenvalue
/// exponents; independent of the exact field arithmetic.
pub fn eta_donnelly_approx(tau: &FreeUnitaryRep, rho: &VirtualCharacter) -> f64 {
    let group = tau.table().group();
    let root = |k: f64, n: f64| Complex64::from_polar(1.0, std::f64::consts::TAU * k / n);
    let n = f64::from(tau.root_order());
    let mut total = Complex64::new(0.0, 0.0);
    for (c, class) in group.classes().iter().enumerate().skip(1) {
        let denom: Complex64 = tau
            .exponents(c)
            .iter()
            .map(|&k| Complex64::new(1.0, 0.0) - root(f64::from(k), n))
            .product();
        let trace = rho.value_at_class(c).to_complex();
        let ds = tau.det_sqrt().value_at_class(c).to_complex();
        total += trace * ds / denom * class.size() as f64;
    }
    total.re / group.order() as f64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LensKind {
    /// `S^{2|a|-1} / C_l`.
    Sphere,
    /// The sphere bundle over `S^2` with the given first Chern numbers of
    /// the line-bundle summands, quotiented by `C_l`; dimension `2|a|+1`.
    Bundle { chern: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensSpec {
    pub l: u32,
    pub a: Vec<i64>,
    #[serde(flatten)]
    pub kind: LensKind,
}

impl LensSpec {
    pub fn sphere(l: u32, a: Vec<i64>) -> Self {
        Self { l, a, kind: LensKind::Sphere }
    }

    pub fn bundle(l: u32, a: Vec<i64>, chern: Vec<i64>) -> Self {
        Self { l, a, kind: LensKind::Bundle { chern } }
    }

    pub fn dimension(&self) -> u32 {
        let twice = 2 * self.a.len() as u32;
        match self.kind {
            LensKind::Sphere => twice - 1,
            LensKind::Bundle { .. } => twice + 1,
        }
    }

    pub fn validate(&self) -> Result<(), EtaError> {
        if self.a.is_empty() || self.a.len() % 2 != 0 {
            return Err(EtaError::Group(crate::grouprep::GroupError::OddLength(self.a.len())));
        }
        if let Some(&bad) = self.a.iter().find(|&&x| num_integer::gcd(x, i64::from(self.l)) != 1) {
            return Err(EtaError::Group(crate::grouprep::GroupError::NotFree(format!(
                "weight {bad} is not a unit mod {}",
                self.l
            ))));
        }
        if let LensKind::Bundle { chern } = &self.kind {
            if chern.len() != self.a.len() {
                return Err(EtaError::ChernLength { weights: self.a.len(), chern: chern.len() });
            }
        }
        Ok(())
    }

    /// The free representation whose sphere quotient this is.
    pub fn free_rep(&self, rho: &VirtualCharacter) -> Result<FreeUnitaryRep, EtaError> {
        Ok(cyclic_free_rep_on(std::sync::Arc::clone(rho.table()), &self.a)?)
    }
}

fn check_cyclic(spec: &LensSpec, rho: &VirtualCharacter) -> Result<(), EtaError> {
    spec.validate()?;
    if rho.table().group().tag() != GroupTag::Cyclic(spec.l) {
        return Err(EtaError::GroupMismatch);
    }
    Ok(())
}

/// `lambda^{sum a / 2} / prod (1 - lambda^{a_j})` at `lambda = zeta_l^k`.
fn lens_weight(l: u32, a: &[i64], k: i64) -> Result<CyclotomicNumber, EtaError> {
    let one = CyclotomicNumber::one(l);
    let half: i64 = a.iter().sum::<i64>() / 2;
    let mut denom = one.clone();
    for &aj in a {
        denom = denom * (&one - &CyclotomicNumber::root_of_unity(l, k * aj));
    }
    let inv = denom.inverse().map_err(|_| EtaError::NotFixedPointFree(format!("g^{k}")))?;
    Ok(CyclotomicNumber::root_of_unity(l, k * half) * inv)
}

fn lens_sum(
    spec: &LensSpec,
    rho: &VirtualCharacter,
    extra: impl Fn(i64) -> Result<CyclotomicNumber, EtaError>,
) -> Result<Rational, EtaError> {
    check_cyclic(spec, rho)?;
    let l = spec.l;
    let mut total = CyclotomicNumber::zero(l);
    // Class k of the builtin cyclic group is g^k.
    for k in 1..i64::from(l) {
        let trace = rho.value_at_class(k as usize);
        if trace.is_zero() {
            continue;
        }
        total = total + &(&lens_weight(l, &spec.a, k)? * &trace) * &extra(k)?;
    }
    let r = total.as_rational().ok_or(EtaError::NonRationalSum)?;
    Ok(r / Rational::from_integer(i64::from(l).into()))
}

/// Eta invariant of the lens space `S^{2|a|-1}/C_l` against `rho`.
pub fn eta_lens_cyclic(spec: &LensSpec, rho: &VirtualCharacter) -> Result<Rational, EtaError> {
    if spec.kind != LensKind::Sphere {
        return Err(EtaError::WrongKind);
    }
    lens_sum(spec, rho, |_| Ok(CyclotomicNumber::one(spec.l)))
}

/// Eta invariant of the lens-space bundle over `S^2`: the sphere summand
/// times `sum_j (c_j / 2) (1 + lambda^{a_j}) / (1 - lambda^{a_j})`.
pub fn eta_lens_bundle(spec: &LensSpec, rho: &VirtualCharacter) -> Result<Rational, EtaError> {
    let LensKind::Bundle { chern } = &spec.kind else {
        return Err(EtaError::WrongKind);
    };
    let l = spec.l;
    let one = CyclotomicNumber::one(l);
    lens_sum(spec, rho, |k| {
        let mut s = CyclotomicNumber::zero(l);
        for (&aj, &cj) in spec.a.iter().zip(chern) {
            if cj == 0 {
                continue;
            }
            let z = CyclotomicNumber::root_of_unity(l, k * aj);
            let q = (&one + &z).checked_div(&(&one - &z)).map_err(|_| EtaError::NotFixedPointFree(format!("g^{k}")))?;
            s = s + q.scale(&crate::exactnum::rat(cj, 2));
        }
        Ok(s)
    })
}

/// Either lens formula, chosen by the spec's kind.
pub fn eta_lens(spec: &LensSpec, rho: &VirtualCharacter) -> Result<Rational, EtaError> {
    match spec.kind {
        LensKind::Sphere => eta_lens_cyclic(spec, rho),
        LensKind::Bundle { .. } => eta_lens_bundle(spec, rho),
    }
}

/// Checks that appending the weights `(1,1,5,5)` halves the eta invariant
/// against `r4 - r0` on `C_8`.
pub fn recursion_check(a: &[i64]) -> Result<bool, EtaError> {
    let table = crate::grouprep::builtin_table(GroupTag::Cyclic(8))?;
    let rho = VirtualCharacter::parse(table, "r4 - r0")?;
    let base = eta_lens_cyclic(&LensSpec::sphere(8, a.to_vec()), &rho)?;
    let mut longer = a.to_vec();
    longer.extend([1, 1, 5, 5]);
    let next = eta_lens_cyclic(&LensSpec::sphere(8, longer), &rho)?;
    Ok(next * Rational::from_integer(2.into()) == base)
}
