use std::fmt;

use super::sums::{eta_donnelly, eta_lens, LensSpec};
use super::value::{EtaValue, Modulus};
use super::EtaError;
use crate::exactnum::Rational;
use crate::grouprep::{restrict_virtual, FreeUnitaryRep, Inclusion, VirtualCharacter};

/// A manifold whose eta invariants can be evaluated against characters of an
/// ambient group.
#[derive(Debug, Clone)]
pub enum Manifold {
    /// Lens space or lens bundle of `C_l`, optionally pushed into a larger
    /// group along `inclusion`.
    Lens { spec: LensSpec, inclusion: Option<Inclusion> },
    /// Sphere quotient `S(tau)/H`, optionally pushed into a larger group.
    Spherical { rep: FreeUnitaryRep, inclusion: Option<Inclusion> },
    /// Product with the Bott manifold: same eta values, dimension plus 8.
    Bott(Box<Manifold>),
    /// Integer combination of manifolds of one dimension.
    Combination(Vec<(i64, Manifold)>),
}

impl Manifold {
    pub fn lens(spec: LensSpec, inclusion: Option<Inclusion>) -> Self {
        Manifold::Lens { spec, inclusion }
    }

    pub fn spherical(rep: FreeUnitaryRep, inclusion: Option<Inclusion>) -> Self {
        Manifold::Spherical { rep, inclusion }
    }

    pub fn bott(self) -> Self {
        Manifold::Bott(Box::new(self))
    }

    pub fn difference(a: Manifold, b: Manifold) -> Self {
        Manifold::Combination(vec![(1, a), (-1, b)])
    }

    pub fn dimension(&self) -> u32 {
        match self {
            Manifold::Lens { spec, .. } => spec.dimension(),
            Manifold::Spherical { rep, .. } => 2 * rep.dimension() as u32 - 1,
            Manifold::Bott(m) => m.dimension() + 8,
            Manifold::Combination(parts) => parts.first().map_or(0, |(_, m)| m.dimension()),
        }
    }

    /// Eta invariant against a character of the ambient group, pulled back
    /// along the inclusion by naturality.
    pub fn eta(&self, rho: &VirtualCharacter) -> Result<Rational, EtaError> {
        match self {
            Manifold::Lens { spec, inclusion } => {
                let local = pull_back(rho, inclusion.as_ref())?;
                eta_lens(spec, &local)
            }
            Manifold::Spherical { rep, inclusion } => {
                let local = pull_back(rho, inclusion.as_ref())?;
                eta_donnelly(rep, &local)
            }
            Manifold::Bott(m) => m.eta(rho),
            Manifold::Combination(parts) => {
                let dim = self.dimension();
                let mut total = Rational::from_integer(0.into());
                for (c, m) in parts {
                    if m.dimension() != dim {
                        return Err(EtaError::DimensionMismatch);
                    }
                    total += m.eta(rho)? * Rational::from_integer((*c).into());
                }
                Ok(total)
            }
        }
    }

    /// Eta value read in the range selected by the character type and dimension.
    pub fn eta_value(&self, rho: &VirtualCharacter) -> Result<EtaValue, EtaError> {
        Ok(EtaValue::new(self.eta(rho)?, Modulus::select(rho, self.dimension())))
    }
}

fn pull_back(rho: &VirtualCharacter, inclusion: Option<&Inclusion>) -> Result<VirtualCharacter, EtaError> {
    match inclusion {
        Some(iota) => Ok(restrict_virtual(rho, iota)?),
        None => Ok(rho.clone()),
    }
}

/// Eta values of one manifold against a list of characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaVector {
    pub entries: Vec<EtaValue>,
    pub labels: Vec<String>,
}

impl fmt::Display for EtaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, e) in self.labels.iter().zip(&self.entries) {
            writeln!(f, "{label}: {e}")?;
        }
        Ok(())
    }
}

pub fn eta_vector(m: &Manifold, rhos: &[VirtualCharacter]) -> Result<EtaVector, EtaError> {
    let entries = rhos.iter().map(|r| m.eta_value(r)).collect::<Result<Vec<_>, _>>()?;
    Ok(EtaVector { entries, labels: rhos.iter().map(ToString::to_string).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::grouprep::{builtin_table, quaternion_free_rep_on, GroupTag};
    use std::sync::Arc;

    #[test]
    fn natural_under_inclusion() {
        let sd = builtin_table(GroupTag::SD16).unwrap();
        let c8 = builtin_table(GroupTag::Cyclic(8)).unwrap();
        let iota = Inclusion::new(c8.clone(), sd.clone(), &["s"]).unwrap();
        let m = Manifold::lens(LensSpec::sphere(8, vec![1, 1]), Some(iota.clone()));
        let rho = VirtualCharacter::parse(sd.clone(), "2 - rho").unwrap();
        let local = VirtualCharacter::parse(c8, "2*r0 - r1 - r3").unwrap();
        let direct = Manifold::lens(LensSpec::sphere(8, vec![1, 1]), None);
        assert_eq!(m.eta(&rho).unwrap(), direct.eta(&local).unwrap());
        assert_eq!(m.dimension(), 3);
        assert_eq!(m.clone().bott().dimension(), 11);
        assert_eq!(m.clone().bott().eta(&rho).unwrap(), m.eta(&rho).unwrap());
    }

    #[test]
    fn trivial_characters_give_zero_vector() {
        let q8 = builtin_table(GroupTag::Q8).unwrap();
        let m = Manifold::spherical(quaternion_free_rep_on(Arc::clone(&q8), 2).unwrap(), None);
        let zero = VirtualCharacter::zero(Arc::clone(&q8));
        let v = eta_vector(&m, &[zero.clone(), zero]).unwrap();
        assert!(v.entries.iter().all(|e| e.value == rat(0, 1)));
        assert_eq!(m.dimension(), 11);
    }

    #[test]
    fn quaternion_vector_moduli() {
        let q8 = builtin_table(GroupTag::Q8).unwrap();
        let rhos: Vec<VirtualCharacter> = ["r0 - k1", "r0 - k3", "2 - tau", "(2 - tau)^2"]
            .iter()
            .map(|e| VirtualCharacter::parse(Arc::clone(&q8), e).unwrap())
            .collect();
        let m3 = Manifold::spherical(quaternion_free_rep_on(Arc::clone(&q8), 0).unwrap(), None);
        let moduli: Vec<Modulus> = eta_vector(&m3, &rhos).unwrap().entries.iter().map(|e| e.modulus).collect();
        assert_eq!(moduli, vec![Modulus::TwoZ, Modulus::TwoZ, Modulus::Z, Modulus::TwoZ]);
        let m7 = Manifold::spherical(quaternion_free_rep_on(Arc::clone(&q8), 1).unwrap(), None);
        let moduli: Vec<Modulus> = eta_vector(&m7, &rhos).unwrap().entries.iter().map(|e| e.modulus).collect();
        assert_eq!(moduli, vec![Modulus::Z, Modulus::Z, Modulus::TwoZ, Modulus::Z]);
    }
}
