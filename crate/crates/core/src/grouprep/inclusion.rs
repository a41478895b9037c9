use std::collections::VecDeque;
use std::sync::Arc;

use super::table::CharacterTable;
use super::virtual_char::{same_table, VirtualCharacter};
use super::GroupError;
use crate::exactnum::CyclotomicNumber;

/// An injective homomorphism `H -> G`, given by the images of `H`'s generators.
#[derive(Debug, Clone)]
pub struct Inclusion {
    sub: Arc<CharacterTable>,
    ambient: Arc<CharacterTable>,
    map: Vec<usize>,
}

impl Inclusion {
    /// Extends the generator images to all of `H` and checks that the result
    /// is a well-defined injective homomorphism.
    pub fn new(
        sub: Arc<CharacterTable>,
        ambient: Arc<CharacterTable>,
        generator_images: &[&str],
    ) -> Result<Self, GroupError> {
        let h = sub.group();
        let g = ambient.group();
        if generator_images.len() != h.generators().len() {
            return Err(GroupError::NotASubgroupMap(format!(
                "{} images for {} generators",
                generator_images.len(),
                h.generators().len()
            )));
        }
        let images: Vec<usize> = generator_images
            .iter()
            .map(|w| g.element(w))
            .collect::<Result<_, _>>()?;
        let gens: Vec<usize> = h.generators().iter().map(|(_, e)| *e).collect();
        let mut map = vec![usize::MAX; h.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&gen, &img) in gens.iter().zip(&images) {
                let y = h.mul(x, gen);
                let fy = g.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return Err(GroupError::NotASubgroupMap(format!(
                        "images do not satisfy the relations of {}",
                        h.name()
                    )));
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(GroupError::NotASubgroupMap("generators do not generate the subgroup".into()));
        }
        for a in 0..h.order() {
            for b in 0..h.order() {
                if map[h.mul(a, b)] != g.mul(map[a], map[b]) {
                    return Err(GroupError::NotASubgroupMap("not a homomorphism".into()));
                }
            }
        }
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != map.len() {
            return Err(GroupError::NotASubgroupMap("not injective".into()));
        }
        Ok(Self { sub, ambient, map })
    }

    pub fn sub(&self) -> &Arc<CharacterTable> {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<CharacterTable> {
        &self.ambient
    }

    pub fn image(&self, h: usize) -> usize {
        self.map[h]
    }

    /// Class of the ambient group containing the image of a class of `H`.
    pub fn class_image(&self, class: usize) -> usize {
        let rep = self.sub.group().classes()[class].representative;
        self.ambient.group().class_of(self.map[rep])
    }

    /// `self: H -> K` followed by `outer: K -> G`.
    pub fn then(&self, outer: &Inclusion) -> Result<Inclusion, GroupError> {
        if !same_table(&self.ambient, &outer.sub) {
            return Err(GroupError::NotASubgroupMap("inclusions do not compose".into()));
        }
        Ok(Inclusion {
            sub: Arc::clone(&self.sub),
            ambient: Arc::clone(&outer.ambient),
            map: self.map.iter().map(|&k| outer.map[k]).collect(),
        })
    }

    /// Images of `H`'s generators, as ambient element names.
    pub fn generator_images(&self) -> Vec<String> {
        self.sub
            .group()
            .generators()
            .iter()
            .map(|(_, e)| self.ambient.group().element_name(self.map[*e]).to_string())
            .collect()
    }
}

/// Restriction of a virtual character of `G` to `H` along `iota`.
pub fn restrict_virtual(chi: &VirtualCharacter, iota: &Inclusion) -> Result<VirtualCharacter, GroupError> {
    if !same_table(chi.table(), &iota.ambient) {
        return Err(GroupError::ShapeMismatch("character is not on the ambient group".into()));
    }
    let ambient_values = chi.class_values();
    let values: Vec<CyclotomicNumber> = (0..iota.sub.group().classes().len())
        .map(|c| ambient_values[iota.class_image(c)].clone())
        .collect();
    VirtualCharacter::from_class_function(Arc::clone(&iota.sub), &values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprep::GroupTag;

    fn table(tag: GroupTag) -> Arc<CharacterTable> {
        Arc::new(CharacterTable::builtin(tag).unwrap())
    }

    #[test]
    fn restrictions_to_subgroups() {
        let sd = table(GroupTag::SD16);
        let q8 = table(GroupTag::Q8);
        let c8 = table(GroupTag::Cyclic(8));
        let to_c8 = Inclusion::new(c8.clone(), sd.clone(), &["s"]).unwrap();
        let rho = VirtualCharacter::irreducible(sd.clone(), "rho").unwrap();
        assert_eq!(restrict_virtual(&rho, &to_c8).unwrap(), VirtualCharacter::parse(c8, "r1 + r3").unwrap());
        let to_q8 = Inclusion::new(q8.clone(), sd.clone(), &["s^2", "t*s"]).unwrap();
        let rho2 = VirtualCharacter::irreducible(sd.clone(), "rho2").unwrap();
        assert_eq!(restrict_virtual(&rho2, &to_q8).unwrap(), VirtualCharacter::parse(q8.clone(), "k1 + k3").unwrap());
        let one = VirtualCharacter::trivial(sd);
        assert_eq!(restrict_virtual(&one, &to_q8).unwrap(), VirtualCharacter::trivial(q8));
    }

    #[test]
    fn rejects_bad_maps() {
        let sd = table(GroupTag::SD16);
        let q8 = table(GroupTag::Q8);
        let c8 = table(GroupTag::Cyclic(8));
        assert!(matches!(Inclusion::new(c8.clone(), sd.clone(), &["s^2"]), Err(GroupError::NotASubgroupMap(_))));
        assert!(matches!(Inclusion::new(c8, sd.clone(), &["t"]), Err(GroupError::NotASubgroupMap(_))));
        assert!(matches!(Inclusion::new(q8.clone(), sd.clone(), &["s^2", "t"]), Err(GroupError::NotASubgroupMap(_))));
        assert!(matches!(Inclusion::new(q8, sd, &["s^2"]), Err(GroupError::NotASubgroupMap(_))));
    }

    #[test]
    fn composition() {
        let sd = table(GroupTag::SD16);
        let q8 = table(GroupTag::Q8);
        let c4 = table(GroupTag::Cyclic(4));
        let c4_q8 = Inclusion::new(c4.clone(), q8.clone(), &["i"]).unwrap();
        let q8_sd = Inclusion::new(q8, sd.clone(), &["s^2", "t*s"]).unwrap();
        let direct = Inclusion::new(c4, sd.clone(), &["s^2"]).unwrap();
        let composed = c4_q8.then(&q8_sd).unwrap();
        let rho = VirtualCharacter::irreducible(sd, "rho").unwrap();
        assert_eq!(restrict_virtual(&rho, &composed).unwrap(), restrict_virtual(&rho, &direct).unwrap());
        assert_eq!(composed.generator_images(), vec!["s^2".to_string()]);
    }
}
