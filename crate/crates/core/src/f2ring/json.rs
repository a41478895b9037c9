//! JSON form of algebra presentations with optional Steenrod data.
//!
//! ```json
//! {
//!   "name": "m4",
//!   "generators": [{"name": "sigma", "degree": 1}, {"name": "tau", "degree": 1}, {"name": "Z", "degree": 2}],
//!   "relations": ["sigma^2", "sigma*tau + tau^2", "Z^4"],
//!   "precedence": ["sigma", "tau", "Z"],
//!   "poincare": {"dimension": 8, "top": "Z^3*sigma*tau"},
//!   "steenrod": {"Z": {"1": "Z*sigma"}}
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{AlgebraSpec, F2Error, PresentedF2Algebra, SteenrodData};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    #[serde(flatten)]
    pub spec: AlgebraSpec,
    /// generator -> (i -> `Sq^i` of the generator), for `0 < i < degree`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steenrod: Option<BTreeMap<String, BTreeMap<String, String>>>,
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, F2Error> {
        serde_json::from_str(text).map_err(|e| F2Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn load(&self) -> Result<(PresentedF2Algebra, Option<SteenrodData>), F2Error> {
        let alg = PresentedF2Algebra::new(self.spec.clone())?;
        let Some(sq) = &self.steenrod else {
            return Ok((alg, None));
        };
        let mut values = Vec::new();
        for (g, by_i) in sq {
            let gi = alg.generator_index(g).ok_or_else(|| F2Error::UnknownGenerator(g.clone()))?;
            for (i, expr) in by_i {
                let i: u32 = i.parse().map_err(|_| F2Error::Json(format!("bad square index {i:?} for {g}")))?;
                values.push((gi, i, alg.parse(expr)?));
            }
        }
        let data = SteenrodData::new(alg.clone(), &values)?;
        Ok((alg, Some(data)))
    }
}
