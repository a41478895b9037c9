use std::sync::Arc;

use num_traits::{One, Zero};

use super::group::{FiniteGroup, GroupTag};
use super::GroupError;
use crate::exactnum::{CyclotomicNumber, Rational};

/// Character table of a finite group. Rows are irreducibles, columns follow
/// the group's class order. All values live in `Q(zeta_N)` with `N` the
/// group exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    group: FiniteGroup,
    field_order: u32,
    names: Vec<String>,
    values: Vec<Vec<CyclotomicNumber>>,
}

impl CharacterTable {
    /// Builds a table from explicit data and validates it: square shape,
    /// row orthonormality and column orthogonality.
    pub fn new(
        group: FiniteGroup,
        names: Vec<String>,
        values: Vec<Vec<CyclotomicNumber>>,
    ) -> Result<Self, GroupError> {
        let field_order = group.exponent();
        let k = group.classes().len();
        if names.len() != values.len() {
            return Err(GroupError::TableValidation {
                row: None,
                class: None,
                message: format!("{} names for {} rows", names.len(), values.len()),
            });
        }
        if values.len() != k {
            return Err(GroupError::TableValidation {
                row: None,
                class: None,
                message: format!("{} irreducibles for {k} classes", values.len()),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) || n.is_empty() {
                return Err(GroupError::TableValidation {
                    row: Some(i),
                    class: None,
                    message: format!("duplicate or empty name {n:?}"),
                });
            }
        }
        let mut rows = Vec::with_capacity(k);
        for (i, row) in values.into_iter().enumerate() {
            if row.len() != k {
                return Err(GroupError::TableValidation {
                    row: Some(i),
                    class: None,
                    message: format!("{} values for {k} classes", row.len()),
                });
            }
            let mut out = Vec::with_capacity(k);
            for (c, v) in row.into_iter().enumerate() {
                if field_order % v.order() != 0 {
                    return Err(GroupError::TableValidation {
                        row: Some(i),
                        class: Some(c),
                        message: format!("value of order {} outside Q(zeta_{field_order})", v.order()),
                    });
                }
                out.push(v.embed(field_order));
            }
            rows.push(out);
        }
        let table = Self { group, field_order, names, values: rows };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<(), GroupError> {
        let k = self.values.len();
        // Norms first, so a single corrupted row is the one reported.
        for i in 0..k {
            let norm = self.inner_product(&self.values[i], &self.values[i]);
            if norm.as_rational() != Some(Rational::one()) {
                return Err(GroupError::TableValidation {
                    row: Some(i),
                    class: None,
                    message: "row does not have norm 1".into(),
                });
            }
        }
        for i in 0..k {
            for j in 0..k {
                let ip = self.inner_product(&self.values[i], &self.values[j]);
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                if ip.as_rational().as_ref() != Some(&expected) {
                    return Err(GroupError::TableValidation {
                        row: Some(i),
                        class: None,
                        message: format!("row orthogonality fails against row {j}"),
                    });
                }
            }
        }
        let order = self.group.order() as i64;
        for a in 0..k {
            for b in 0..k {
                let mut s = CyclotomicNumber::zero(self.field_order);
                for row in &self.values {
                    s = s + &row[a] * &row[b].conjugate();
                }
                let expected = if a == b {
                    Rational::from_integer((order / self.group.classes()[a].size() as i64).into())
                } else {
                    Rational::zero()
                };
                if s.as_rational().as_ref() != Some(&expected) {
                    return Err(GroupError::TableValidation {
                        row: None,
                        class: Some(a),
                        message: format!("column orthogonality fails against class {b}"),
                    });
                }
            }
        }
        if self.values.iter().any(|r| r[0].as_rational().is_none()) {
            return Err(GroupError::TableValidation {
                row: None,
                class: Some(0),
                message: "degree is not rational".into(),
            });
        }
        Ok(())
    }

    pub fn builtin(tag: GroupTag) -> Result<Self, GroupError> {
        let group = FiniteGroup::builtin(tag)?;
        let (names, values) = builtin_data(&group);
        Self::new(group, names, values)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn row(&self, i: usize) -> &[CyclotomicNumber] {
        &self.values[i]
    }

    pub fn value(&self, irr: usize, class: usize) -> &CyclotomicNumber {
        &self.values[irr][class]
    }

    /// Degree of an irreducible.
    pub fn degree(&self, irr: usize) -> i64 {
        let r = self.values[irr][0].as_rational().expect("validated degree");
        i64::try_from(r.to_integer()).expect("small degree")
    }

    /// `|G|^-1 sum_g f(g) conj(h(g))` for class functions in class order.
    pub fn inner_product(&self, f: &[CyclotomicNumber], h: &[CyclotomicNumber]) -> CyclotomicNumber {
        let mut s = CyclotomicNumber::zero(self.field_order);
        for (c, class) in self.group.classes().iter().enumerate() {
            let term = &f[c] * &h[c].conjugate();
            s = s + term.scale(&Rational::from_integer((class.size() as i64).into()));
        }
        s.scale(&Rational::new(1.into(), (self.group.order() as i64).into()))
    }

    /// Expresses a class function in the irreducible basis. Fails with
    /// `NotVirtualCharacter` when some coefficient is not an integer.
    pub fn decompose(&self, f: &[CyclotomicNumber]) -> Result<Vec<i64>, GroupError> {
        let f: Vec<CyclotomicNumber> = f.iter().map(|v| v.embed(num_integer::lcm(v.order(), self.field_order))).collect();
        self.values
            .iter()
            .map(|row| {
                let c = self.inner_product(&f, row);
                c.as_rational()
                    .filter(|r| r.is_integer())
                    .and_then(|r| i64::try_from(r.to_integer()).ok())
                    .ok_or(GroupError::NotVirtualCharacter)
            })
            .collect()
    }

    /// The class whose elements are the squares of the given class.
    pub fn square_class(&self, class: usize) -> usize {
        let g = self.group.classes()[class].representative;
        self.group.class_of(self.group.mul(g, g))
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }
}

fn ints(order: u32, v: &[i64]) -> Vec<CyclotomicNumber> {
    v.iter().map(|&x| CyclotomicNumber::from_integer(order, x)).collect()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn builtin_data(group: &FiniteGroup) -> (Vec<String>, Vec<Vec<CyclotomicNumber>>) {
    match group.tag() {
        GroupTag::Cyclic(n) => {
            // r_a(g^k) = zeta_n^{ak}
            let names = (0..n).map(|a| format!("r{a}")).collect();
            let values = (0..n as i64)
                .map(|a| (0..n as i64).map(|k| CyclotomicNumber::root_of_unity(n, a * k)).collect())
                .collect();
            (names, values)
        }
        GroupTag::V2 => (
            names(&["r0", "e1", "e2", "e3"]),
            vec![
                ints(2, &[1, 1, 1, 1]),
                ints(2, &[1, -1, 1, -1]),
                ints(2, &[1, 1, -1, -1]),
                ints(2, &[1, -1, -1, 1]),
            ],
        ),
        // classes [1], [r^2], [r], [s], [rs]
        GroupTag::D8 => (
            names(&["r0", "e1", "e2", "e3", "sigma"]),
            vec![
                ints(4, &[1, 1, 1, 1, 1]),
                ints(4, &[1, 1, 1, -1, -1]),
                ints(4, &[1, 1, -1, 1, -1]),
                ints(4, &[1, 1, -1, -1, 1]),
                ints(4, &[2, -2, 0, 0, 0]),
            ],
        ),
        // classes 1, -1, [i], [j], [k]
        GroupTag::Q8 => (
            names(&["r0", "k1", "k2", "k3", "tau"]),
            vec![
                ints(4, &[1, 1, 1, 1, 1]),
                ints(4, &[1, 1, -1, 1, -1]),
                ints(4, &[1, 1, 1, -1, -1]),
                ints(4, &[1, 1, -1, -1, 1]),
                ints(4, &[2, -2, 0, 0, 0]),
            ],
        ),
        // classes [1], [s^4], [s], [s^2], [s^5], [t], [ts]
        GroupTag::SD16 => {
            let z = |k| CyclotomicNumber::root_of_unity(8, k);
            let sqrt2_i = z(1) + z(3);
            let c = |v| CyclotomicNumber::from_integer(8, v);
            let rho = vec![c(2), c(-2), sqrt2_i.clone(), c(0), -sqrt2_i.clone(), c(0), c(0)];
            let rho5 = vec![c(2), c(-2), -sqrt2_i.clone(), c(0), sqrt2_i, c(0), c(0)];
            (
                names(&["r0", "c8", "d8", "q8", "rho", "rho2", "rho5"]),
                vec![
                    ints(8, &[1, 1, 1, 1, 1, 1, 1]),
                    ints(8, &[1, 1, 1, 1, 1, -1, -1]),
                    ints(8, &[1, 1, -1, 1, -1, 1, -1]),
                    ints(8, &[1, 1, -1, 1, -1, -1, 1]),
                    rho,
                    ints(8, &[2, 2, 0, -2, 0, 0, 0]),
                    rho5,
                ],
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_validate() {
        for tag in [
            GroupTag::Cyclic(1),
            GroupTag::Cyclic(2),
            GroupTag::Cyclic(8),
            GroupTag::Cyclic(12),
            GroupTag::V2,
            GroupTag::D8,
            GroupTag::Q8,
            GroupTag::SD16,
        ] {
            let t = CharacterTable::builtin(tag).unwrap();
            assert_eq!(t.len(), t.group().classes().len(), "{tag}");
            let sum_sq: i64 = (0..t.len()).map(|i| t.degree(i).pow(2)).sum();
            assert_eq!(sum_sq as usize, t.group().order(), "{tag}");
        }
    }

    #[test]
    fn table_entries() {
        let q8 = CharacterTable::builtin(GroupTag::Q8).unwrap();
        let tau = q8.index_of("tau").unwrap();
        assert_eq!(q8.value(tau, 1), &CyclotomicNumber::from_integer(4, -2));
        assert!(q8.value(tau, 2).is_zero());
        let sd = CharacterTable::builtin(GroupTag::SD16).unwrap();
        let rho = sd.index_of("rho").unwrap();
        let rho2 = sd.index_of("rho2").unwrap();
        assert_eq!(sd.value(rho, 1), &CyclotomicNumber::from_integer(8, -2));
        assert_eq!(sd.value(rho2, 3), &CyclotomicNumber::from_integer(8, -2));
        let sq = sd.value(rho, 2) * sd.value(rho, 2);
        assert_eq!(sq, CyclotomicNumber::from_integer(8, -2));
        for c in 0..sd.len() {
            assert_eq!(sd.value(0, c), &CyclotomicNumber::one(8));
        }
    }

    #[test]
    fn corrupted_table_rejected() {
        let t = CharacterTable::builtin(GroupTag::Q8).unwrap();
        let mut rows: Vec<Vec<CyclotomicNumber>> = (0..t.len()).map(|i| t.row(i).to_vec()).collect();
        rows[2][3] = CyclotomicNumber::from_integer(4, 1);
        let err = CharacterTable::new(t.group().clone(), t.names().to_vec(), rows).unwrap_err();
        assert!(matches!(err, GroupError::TableValidation { row: Some(_), .. }));
    }
}
