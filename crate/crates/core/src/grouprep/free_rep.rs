use std::sync::Arc;

use super::group::GroupTag;
use super::inclusion::Inclusion;
use super::table::CharacterTable;
use super::virtual_char::{same_table, VirtualCharacter};
use super::GroupError;
use crate::exactnum::CyclotomicNumber;

/// A fixed-point-free unitary representation described by its eigenvalues
/// `zeta_n^k` on each conjugacy class, together with a chosen square root of
/// its determinant.
///
/// Only the builders can construct one, so the eigenvalue data always comes
/// from a genuine representation.
#[derive(Debug, Clone)]
pub struct FreeUnitaryRep {
    table: Arc<CharacterTable>,
    root_order: u32,
    exponents: Vec<Vec<u32>>,
    det_sqrt: VirtualCharacter,
}

impl FreeUnitaryRep {
    fn checked(
        table: Arc<CharacterTable>,
        root_order: u32,
        exponents: Vec<Vec<u32>>,
        det_sqrt: VirtualCharacter,
    ) -> Result<Self, GroupError> {
        let rep = Self { table, root_order, exponents, det_sqrt };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<(), GroupError> {
        let dim = self.exponents[0].len();
        if dim == 0 || self.exponents.iter().any(|e| e.len() != dim) {
            return Err(GroupError::ShapeMismatch("eigenvalue multisets of unequal size".into()));
        }
        if self.exponents[0].iter().any(|&k| k % self.root_order != 0) {
            return Err(GroupError::ShapeMismatch("identity acts non-trivially".into()));
        }
        for (c, ex) in self.exponents.iter().enumerate().skip(1) {
            if ex.iter().any(|&k| k % self.root_order == 0) {
                return Err(GroupError::NotFree(format!(
                    "unit eigenvalue on class {}",
                    self.table.group().classes()[c].name
                )));
            }
        }
        let ds = &self.det_sqrt;
        if ds.virtual_dimension() != 1 || ds.coeffs().iter().any(|&c| c < 0) {
            return Err(GroupError::ShapeMismatch("det_sqrt is not a linear character".into()));
        }
        for c in 0..self.exponents.len() {
            let v = ds.value_at_class(c);
            if &v * &v != self.determinant(c) {
                return Err(GroupError::ShapeMismatch(format!("det_sqrt squared differs from det on class {c}")));
            }
        }
        Ok(())
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn dimension(&self) -> usize {
        self.exponents[0].len()
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn exponents(&self, class: usize) -> &[u32] {
        &self.exponents[class]
    }

    pub fn det_sqrt(&self) -> &VirtualCharacter {
        &self.det_sqrt
    }

    pub fn determinant(&self, class: usize) -> CyclotomicNumber {
        let k: u64 = self.exponents[class].iter().map(|&k| u64::from(k)).sum();
        CyclotomicNumber::root_of_unity(self.root_order, (k % u64::from(self.root_order)) as i64)
    }

    /// `det(I - tau(g))` on a class, as the product of `1 - zeta^k`.
    pub fn det_one_minus(&self, class: usize) -> CyclotomicNumber {
        let one = CyclotomicNumber::one(self.root_order);
        self.exponents[class].iter().fold(one.clone(), |acc, &k| {
            acc * (&one - &CyclotomicNumber::root_of_unity(self.root_order, i64::from(k)))
        })
    }

    /// The character of the representation.
    pub fn character(&self) -> VirtualCharacter {
        let values: Vec<CyclotomicNumber> = self
            .exponents
            .iter()
            .map(|ex| {
                ex.iter().fold(CyclotomicNumber::zero(self.root_order), |acc, &k| {
                    acc + CyclotomicNumber::root_of_unity(self.root_order, i64::from(k))
                })
            })
            .collect();
        VirtualCharacter::from_class_function(Arc::clone(&self.table), &values)
            .expect("eigenvalue data comes from a representation")
    }

    /// Pulls the representation back along an inclusion `H -> G`.
    pub fn restrict(&self, iota: &Inclusion) -> Result<Self, GroupError> {
        if !same_table(&self.table, iota.ambient()) {
            return Err(GroupError::ShapeMismatch("representation is not on the ambient group".into()));
        }
        let classes = iota.sub().group().classes().len();
        let exponents = (0..classes).map(|c| self.exponents[iota.class_image(c)].clone()).collect();
        let det_sqrt = super::inclusion::restrict_virtual(&self.det_sqrt, iota)?;
        Self::checked(Arc::clone(iota.sub()), self.root_order, exponents, det_sqrt)
    }
}

/// `g^k` acts on `C^{|a|}` by `diag(zeta_l^{k a_j})`; `det_sqrt` is
/// `r_{(sum a)/2}`.
pub fn cyclic_free_rep(l: u32, a: &[i64]) -> Result<FreeUnitaryRep, GroupError> {
    if l < 2 {
        return Err(GroupError::UnsupportedGroup(format!("C{l}")));
    }
    let table = Arc::new(CharacterTable::builtin(GroupTag::Cyclic(l))?);
    cyclic_free_rep_on(table, a)
}

/// As [`cyclic_free_rep`], reusing an existing cyclic character table.
pub fn cyclic_free_rep_on(table: Arc<CharacterTable>, a: &[i64]) -> Result<FreeUnitaryRep, GroupError> {
    let GroupTag::Cyclic(l) = table.group().tag() else {
        return Err(GroupError::ShapeMismatch("not a cyclic group".into()));
    };
    if a.is_empty() || a.len() % 2 != 0 {
        return Err(GroupError::OddLength(a.len()));
    }
    if let Some(&bad) = a.iter().find(|&&x| num_integer::gcd(x, i64::from(l)) != 1) {
        return Err(GroupError::NotFree(format!("weight {bad} is not a unit mod {l}")));
    }
    let li = i64::from(l);
    let exponents = (0..li)
        .map(|k| a.iter().map(|&x| (k * x).rem_euclid(li) as u32).collect())
        .collect();
    let half: i64 = a.iter().sum::<i64>() / 2;
    let det_sqrt = VirtualCharacter::irreducible_at(Arc::clone(&table), half.rem_euclid(li) as usize);
    FreeUnitaryRep::checked(table, l, exponents, det_sqrt)
}

/// `(k+1) tau` on the quaternion group, with trivial `det_sqrt`.
pub fn quaternion_free_rep(k: u32) -> Result<FreeUnitaryRep, GroupError> {
    quaternion_free_rep_on(Arc::new(CharacterTable::builtin(GroupTag::Q8)?), k)
}

pub fn quaternion_free_rep_on(table: Arc<CharacterTable>, k: u32) -> Result<FreeUnitaryRep, GroupError> {
    if table.group().tag() != GroupTag::Q8 {
        return Err(GroupError::ShapeMismatch("not the quaternion group".into()));
    }
    let m = 2 * (k as usize + 1);
    let order_four: Vec<u32> = (0..m).map(|j| if j % 2 == 0 { 1 } else { 3 }).collect();
    // classes 1, -1, [i], [j], [k]
    let exponents = vec![vec![0; m], vec![2; m], order_four.clone(), order_four.clone(), order_four];
    let det_sqrt = VirtualCharacter::trivial(Arc::clone(&table));
    FreeUnitaryRep::checked(table, 4, exponents, det_sqrt)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_examples() {
        let r = cyclic_free_rep(8, &[1, 1]).unwrap();
        assert_eq!(r.exponents(1), &[1, 1]);
        assert_eq!(r.det_sqrt().coefficient("r1"), Some(1));
        let r = cyclic_free_rep(8, &[1, 1, 5, 5]).unwrap();
        assert_eq!(r.det_sqrt().coefficient("r6"), Some(1));
        assert!(matches!(cyclic_free_rep(8, &[2, 1]), Err(GroupError::NotFree(_))));
        assert!(matches!(cyclic_free_rep(8, &[1, 1, 1]), Err(GroupError::OddLength(3))));
    }

    #[test]
    fn determinant_character() {
        let a = [1, 3, 5, 7, 7, 1];
        let r = cyclic_free_rep(8, &a).unwrap();
        let sum: i64 = a.iter().sum();
        for c in 0..8 {
            assert_eq!(r.determinant(c), CyclotomicNumber::root_of_unity(8, sum * c as i64));
        }
    }

    #[test]
    fn quaternion_examples() {
        let r = quaternion_free_rep(0).unwrap();
        assert_eq!(r.det_one_minus(1), CyclotomicNumber::from_integer(4, 4));
        for c in 2..5 {
            assert_eq!(r.det_one_minus(c), CyclotomicNumber::from_integer(4, 2));
        }
        assert_eq!(r.character(), VirtualCharacter::parse(Arc::clone(r.table()), "tau").unwrap());
        let r3 = quaternion_free_rep(3).unwrap();
        assert_eq!(r3.dimension(), 8);
        for c in 0..5 {
            assert_eq!(r3.determinant(c), CyclotomicNumber::one(4));
        }
    }

    #[test]
    fn restriction_to_cyclic_subgroup() {
        let r = quaternion_free_rep(1).unwrap();
        let c4 = Arc::new(CharacterTable::builtin(GroupTag::Cyclic(4)).unwrap());
        let iota = Inclusion::new(c4.clone(), Arc::clone(r.table()), &["j"]).unwrap();
        let res = r.restrict(&iota).unwrap();
        assert_eq!(res.character(), VirtualCharacter::parse(c4, "2*r1 + 2*r3").unwrap());
        assert_eq!(res.det_sqrt().coefficient("r0"), Some(1));
    }
}
