use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use super::GroupError;

/// The builtin group families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    /// Cyclic group of the given order, generated by `g`.
    Cyclic(u32),
    /// Klein four group `<a, b>`.
    V2,
    /// Dihedral group of order 8, `<r, s | r^4 = s^2 = 1, srs = r^-1>`.
    D8,
    /// Quaternion group `{+-1, +-i, +-j, +-k}`, generated by `i`, `j`.
    Q8,
    /// Semi-dihedral group of order 16, `<s, t | s^8 = t^2 = 1, tst = s^3>`.
    SD16,
}

pub const MAX_CYCLIC_ORDER: u32 = 64;

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Cyclic(n) => write!(f, "C{n}"),
            GroupTag::V2 => f.write_str("V2"),
            GroupTag::D8 => f.write_str("D8"),
            GroupTag::Q8 => f.write_str("Q8"),
            GroupTag::SD16 => f.write_str("SD16"),
        }
    }
}

impl FromStr for GroupTag {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.to_ascii_uppercase().as_str() {
            "V2" | "V(2)" => Ok(GroupTag::V2),
            "D8" => Ok(GroupTag::D8),
            "Q8" => Ok(GroupTag::Q8),
            "SD16" => Ok(GroupTag::SD16),
            u => u
                .strip_prefix('C')
                .and_then(|n| n.parse::<u32>().ok())
                .filter(|n| (1..=MAX_CYCLIC_ORDER).contains(n))
                .map(GroupTag::Cyclic)
                .ok_or_else(|| GroupError::UnsupportedGroup(t.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    pub representative: usize,
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// A finite group stored as an explicit multiplication table.
///
/// Element `0` is the identity. Conjugacy classes are kept in a fixed order,
/// with the identity class first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    tag: GroupTag,
    element_names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    generators: Vec<(String, usize)>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    pub fn builtin(tag: GroupTag) -> Result<Self, GroupError> {
        match tag {
            GroupTag::Cyclic(n) if (1..=MAX_CYCLIC_ORDER).contains(&n) => Ok(cyclic(n)),
            GroupTag::Cyclic(n) => Err(GroupError::UnsupportedGroup(format!("C{n}"))),
            GroupTag::V2 => Ok(klein_four()),
            GroupTag::D8 => Ok(dihedral8()),
            GroupTag::Q8 => Ok(quaternion8()),
            GroupTag::SD16 => Ok(semidihedral16()),
        }
    }

    fn assemble(
        tag: GroupTag,
        element_names: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
        generators: Vec<(&str, usize)>,
        class_reps: &[usize],
        class_names: Vec<String>,
    ) -> Self {
        let n = element_names.len();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        let inverse: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == 0).expect("group element without inverse"))
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::with_capacity(class_reps.len());
        for (ci, (&rep, name)) in class_reps.iter().zip(class_names).enumerate() {
            let mut elements: Vec<usize> =
                (0..n).map(|g| table[table[g][rep]][inverse[g]]).collect();
            elements.sort_unstable();
            elements.dedup();
            for &e in &elements {
                assert_eq!(class_of[e], usize::MAX, "class representatives overlap");
                class_of[e] = ci;
            }
            classes.push(ConjugacyClass { name, representative: rep, elements });
        }
        assert!(class_of.iter().all(|&c| c != usize::MAX), "class representatives incomplete");
        Self {
            tag,
            element_names,
            table,
            inverse,
            generators: generators.into_iter().map(|(s, e)| (s.to_string(), e)).collect(),
            classes,
            class_of,
        }
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn name(&self) -> String {
        self.tag.to_string()
    }

    pub fn order(&self) -> usize {
        self.element_names.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_name(&self, e: usize) -> &str {
        &self.element_names[e]
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    pub fn element_order(&self, e: usize) -> usize {
        let mut k = 1;
        let mut x = e;
        while x != 0 {
            x = self.table[x][e];
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        (0..self.order()).fold(1u32, |acc, e| {
            num_integer::lcm(acc, self.element_order(e) as u32)
        })
    }

    /// Evaluates a word such as `t*s`, `s^-3` or an element name such as `-k`.
    pub fn element(&self, word: &str) -> Result<usize, GroupError> {
        let w = word.trim();
        if let Some(e) = self.element_names.iter().position(|n| n == w) {
            return Ok(e);
        }
        if w == "e" {
            return Ok(0);
        }
        let mut acc = 0usize;
        for factor in w.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (
                    b.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| GroupError::BadWord(word.to_string()))?,
                ),
                None => (factor, 1),
            };
            let g = self
                .generators
                .iter()
                .find(|(name, _)| name == base)
                .map(|(_, g)| *g)
                .or_else(|| self.element_names.iter().position(|n| n == base))
                .ok_or_else(|| GroupError::BadWord(word.to_string()))?;
            let g = if exp < 0 { self.inverse[g] } else { g };
            for _ in 0..exp.unsigned_abs() {
                acc = self.table[acc][g];
            }
        }
        Ok(acc)
    }

    /// Exhaustive check of the group axioms.
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        });
        let ident = (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a);
        let inv = (0..n).all(|a| self.mul(a, self.inv(a)) == 0 && self.mul(self.inv(a), a) == 0);
        let partition = self.classes.iter().map(ConjugacyClass::size).sum::<usize>() == n;
        assoc && ident && inv && partition
    }

    /// Subgroup generated by the given elements, as a sorted element list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&e| seen[e]).collect()
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn cyclic(n: u32) -> FiniteGroup {
    let n = n as usize;
    let names: Vec<String> = (0..n).map(|k| power_name("g", k)).collect();
    let class_names = names.iter().map(|e| format!("[{e}]")).collect();
    let reps: Vec<usize> = (0..n).collect();
    let gens = if n > 1 { vec![("g", 1)] } else { vec![] };
    FiniteGroup::assemble(GroupTag::Cyclic(n as u32), names, |a, b| (a + b) % n, gens, &reps, class_names)
}

fn klein_four() -> FiniteGroup {
    let names = ["1", "a", "b", "a*b"].map(String::from).to_vec();
    let class_names = names.iter().map(|e| format!("[{e}]")).collect();
    FiniteGroup::assemble(GroupTag::V2, names, |x, y| x ^ y, vec![("a", 1), ("b", 2)], &[0, 1, 2, 3], class_names)
}

fn dihedral8() -> FiniteGroup {
    // r^a s^b at index a + 4b; s r^c = r^-c s.
    let names: Vec<String> = (0..8)
        .map(|i| {
            let (a, b) = (i % 4, i / 4);
            match (a, b) {
                (0, 0) => "1".to_string(),
                (_, 0) => power_name("r", a),
                (0, _) => "s".to_string(),
                _ => format!("{}*s", power_name("r", a)),
            }
        })
        .collect();
    let mul = |x: usize, y: usize| {
        let (a, b) = (x % 4, x / 4);
        let (c, d) = (y % 4, y / 4);
        let c = if b == 1 { (4 - c) % 4 } else { c };
        (a + c) % 4 + 4 * ((b + d) % 2)
    };
    let class_names = ["[1]", "[r^2]", "[r]", "[s]", "[r*s]"].map(String::from).to_vec();
    FiniteGroup::assemble(GroupTag::D8, names, mul, vec![("r", 1), ("s", 4)], &[0, 2, 1, 4, 5], class_names)
}

fn quaternion8() -> FiniteGroup {
    // Index 2u + sign, units u = 1, i, j, k; sign bit 1 means negative.
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    // Unit products: (unit, sign flip).
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mul = |x: usize, y: usize| {
        let (u, su) = (x / 2, x % 2);
        let (v, sv) = (y / 2, y % 2);
        let (w, sw) = UNIT[u][v];
        2 * w + (su ^ sv ^ sw)
    };
    let class_names = ["[1]", "[-1]", "[i]", "[j]", "[k]"].map(String::from).to_vec();
    FiniteGroup::assemble(GroupTag::Q8, names, mul, vec![("i", 2), ("j", 4)], &[0, 1, 2, 4, 6], class_names)
}

fn semidihedral16() -> FiniteGroup {
    // s^a t^b at index a + 8b; t s^c = s^{3c} t.
    let names: Vec<String> = (0..16)
        .map(|i| {
            let (a, b) = (i % 8, i / 8);
            match (a, b) {
                (0, 0) => "1".to_string(),
                (_, 0) => power_name("s", a),
                (0, _) => "t".to_string(),
                _ => format!("{}*t", power_name("s", a)),
            }
        })
        .collect();
    let mul = |x: usize, y: usize| {
        let (a, b) = (x % 8, x / 8);
        let (c, d) = (y % 8, y / 8);
        let c = if b == 1 { (3 * c) % 8 } else { c };
        (a + c) % 8 + 8 * ((b + d) % 2)
    };
    // Class order [1], [s^4], [s], [s^2], [s^5], [t], [ts] with ts = s^3 t.
    let class_names = ["[1]", "[s^4]", "[s]", "[s^2]", "[s^5]", "[t]", "[ts]"].map(String::from).to_vec();
    FiniteGroup::assemble(
        GroupTag::SD16,
        names,
        mul,
        vec![("s", 1), ("t", 8)],
        &[0, 4, 1, 2, 5, 8, 11],
        class_names,
    )
}
