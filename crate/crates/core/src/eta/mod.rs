//! Exact eta invariants of spherical space forms and lens-space bundles,
//! their orders in `R/Z` or `R/2Z`, eta vectors, and determinant bounds.

mod det;
mod manifold;
mod sums;
mod value;

use thiserror::Error;

pub use det::{determinant, span_order_lower_bound};
pub use manifold::{eta_vector, EtaVector, Manifold};
pub use sums::{
    eta_donnelly, eta_donnelly_approx, eta_lens, eta_lens_bundle, eta_lens_cyclic, recursion_check, LensKind,
    LensSpec,
};
pub use value::{eta_order, EtaValue, Modulus};

use crate::grouprep::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("representation has a unit eigenvalue on {0}")]
    NotFixedPointFree(String),
    #[error("eta sum is not rational")]
    NonRationalSum,
    #[error("representation and character live on different groups")]
    GroupMismatch,
    #[error("operation does not apply to this kind of lens spec")]
    WrongKind,
    #[error("{chern} Chern numbers for {weights} weights")]
    ChernLength { weights: usize, chern: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("combined manifolds have different dimensions")]
    DimensionMismatch,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::grouprep::{builtin_table, GroupTag, VirtualCharacter};

    #[test]
    fn lens_values_congruent_under_sign_flip() {
        let c8 = builtin_table(GroupTag::Cyclic(8)).unwrap();
        let rho = VirtualCharacter::parse(c8, "r4 - r0").unwrap();
        let l3 = Manifold::lens(LensSpec::sphere(8, vec![1, 1]), None);
        let v3 = l3.eta_value(&rho).unwrap();
        assert_eq!(v3.modulus, Modulus::TwoZ);
        assert!(v3.congruent(&EtaValue::new(rat(-1, 1), Modulus::TwoZ)));
        assert_eq!(v3.order(), 2.into());
        let l7 = Manifold::lens(LensSpec::sphere(8, vec![1, 1, 1, 1]), None);
        let v7 = l7.eta_value(&rho).unwrap();
        assert_eq!(v7.modulus, Modulus::Z);
        assert!(v7.congruent(&EtaValue::new(rat(3, 2), Modulus::Z)));
        assert_eq!(v7.order(), 2.into());
    }
}
