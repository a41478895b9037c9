//! JSON ingestion and export of character tables and inclusions.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::group::{FiniteGroup, GroupTag};
use super::inclusion::Inclusion;
use super::table::CharacterTable;
use super::GroupError;
use crate::exactnum::CyclotomicNumber;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub name: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleSpec {
    pub name: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionSpec {
    pub name: String,
    pub subgroup: String,
    pub generator_images: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub group: String,
    pub classes: Vec<ClassSpec>,
    pub irreducibles: Vec<IrreducibleSpec>,
    #[serde(default)]
    pub inclusions: Vec<InclusionSpec>,
}

/// A validated table together with named inclusions into its group.
#[derive(Debug, Clone)]
pub struct LoadedTable {
    pub table: Arc<CharacterTable>,
    pub inclusions: Vec<(String, Inclusion)>,
}

impl TableDocument {
    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Export of an existing table (without inclusions).
    pub fn from_table(table: &CharacterTable) -> Self {
        let g = table.group();
        Self {
            group: g.name(),
            classes: g
                .classes()
                .iter()
                .map(|c| ClassSpec { name: c.name.clone(), size: c.size() })
                .collect(),
            irreducibles: (0..table.len())
                .map(|i| IrreducibleSpec {
                    name: table.names()[i].clone(),
                    values: table.row(i).iter().map(ToString::to_string).collect(),
                })
                .collect(),
            inclusions: Vec::new(),
        }
    }

    /// Validates the document against the builtin group it names.
    pub fn load(&self) -> Result<LoadedTable, GroupError> {
        let tag: GroupTag = self.group.parse()?;
        let group = FiniteGroup::builtin(tag)?;
        if self.classes.len() != group.classes().len() {
            return Err(GroupError::TableValidation {
                row: None,
                class: None,
                message: format!("{} classes listed, {} expected", self.classes.len(), group.classes().len()),
            });
        }
        for (i, (spec, class)) in self.classes.iter().zip(group.classes()).enumerate() {
            if spec.name != class.name || spec.size != class.size() {
                return Err(GroupError::TableValidation {
                    row: None,
                    class: Some(i),
                    message: format!(
                        "class {:?} of size {} does not match {:?} of size {}",
                        spec.name,
                        spec.size,
                        class.name,
                        class.size()
                    ),
                });
            }
        }
        let mut values = Vec::with_capacity(self.irreducibles.len());
        for (row, irr) in self.irreducibles.iter().enumerate() {
            let parsed = irr
                .values
                .iter()
                .enumerate()
                .map(|(class, s)| {
                    s.parse::<CyclotomicNumber>().map_err(|e| GroupError::TableValidation {
                        row: Some(row),
                        class: Some(class),
                        message: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            values.push(parsed);
        }
        let names = self.irreducibles.iter().map(|i| i.name.clone()).collect();
        let table = Arc::new(CharacterTable::new(group, names, values)?);
        let inclusions = self
            .inclusions
            .iter()
            .map(|spec| {
                let sub = Arc::new(CharacterTable::builtin(spec.subgroup.parse()?)?);
                let images: Vec<&str> = spec.generator_images.iter().map(String::as_str).collect();
                Ok((spec.name.clone(), Inclusion::new(sub, Arc::clone(&table), &images)?))
            })
            .collect::<Result<Vec<_>, GroupError>>()?;
        Ok(LoadedTable { table, inclusions })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_builtin() {
        for tag in [GroupTag::Q8, GroupTag::SD16, GroupTag::Cyclic(8), GroupTag::D8, GroupTag::V2] {
            let t = CharacterTable::builtin(tag).unwrap();
            let doc = TableDocument::from_table(&t);
            let back = TableDocument::from_json(&doc.to_json()).unwrap().load().unwrap();
            assert_eq!(*back.table, t, "{tag}");
        }
    }

    #[test]
    fn reports_indices() {
        let t = CharacterTable::builtin(GroupTag::Q8).unwrap();
        let mut doc = TableDocument::from_table(&t);
        doc.irreducibles[1].values[2] = "2 @ n=4".into();
        match doc.load() {
            Err(GroupError::TableValidation { row: Some(1), .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let mut doc = TableDocument::from_table(&t);
        doc.irreducibles[3].values[4] = "1 + @ n=4".into();
        assert!(matches!(doc.load(), Err(GroupError::TableValidation { row: Some(3), class: Some(4), .. })));
        let mut doc = TableDocument::from_table(&t);
        doc.classes[2].size = 3;
        assert!(matches!(doc.load(), Err(GroupError::TableValidation { class: Some(2), .. })));
    }

    #[test]
    fn inclusions_load() {
        let t = CharacterTable::builtin(GroupTag::SD16).unwrap();
        let mut doc = TableDocument::from_table(&t);
        doc.inclusions.push(InclusionSpec {
            name: "quaternion".into(),
            subgroup: "Q8".into(),
            generator_images: vec!["s^2".into(), "t*s".into()],
        });
        let loaded = doc.load().unwrap();
        assert_eq!(loaded.inclusions.len(), 1);
        doc.inclusions[0].generator_images[1] = "t".into();
        assert!(matches!(doc.load(), Err(GroupError::NotASubgroupMap(_))));
    }
}
