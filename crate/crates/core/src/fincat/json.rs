//! JSON category descriptions: the full table form and the two-object
//! builder form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CategoryBuilder, CategoryError, CayleyTable, FiniteCategory, Group};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawMorphism {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

/// `[g, f, g o f]`.
pub type ComposeEntry = (String, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<RawMorphism>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<ComposeEntry>,
}

/// Two objects `x`, `y` with `Aut(x) = G`, `Aut(y) = H` and a hom set
/// `C(x, y)` carrying a right `G`-action and a left `H`-action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoObjectSpec {
    #[serde(default = "default_x")]
    pub x: String,
    #[serde(default = "default_y")]
    pub y: String,
    #[serde(rename = "G")]
    pub g: CayleyTable,
    #[serde(rename = "H")]
    pub h: CayleyTable,
    pub hom: Vec<String>,
    /// `right_action[f][a] = f o a` for `a` in `G`; identity entries optional.
    #[serde(default)]
    pub right_action: BTreeMap<String, BTreeMap<String, String>>,
    /// `left_action[f][b] = b o f` for `b` in `H`; identity entries optional.
    #[serde(default)]
    pub left_action: BTreeMap<String, BTreeMap<String, String>>,
}

fn default_x() -> String {
    "x".into()
}

fn default_y() -> String {
    "y".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryJson {
    TwoObject { two_object: TwoObjectSpec },
    Full(RawCategory),
}

impl CategoryJson {
    pub fn parse(text: &str) -> Result<CategoryJson, CategoryError> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| CategoryError::Malformed(e.to_string()))?;
        // decode by shape so that errors name the real problem
        if let Some(spec) = v.get("two_object") {
            let spec: TwoObjectSpec =
                serde_json::from_value(spec.clone()).map_err(|e| CategoryError::Malformed(e.to_string()))?;
            Ok(CategoryJson::TwoObject { two_object: spec })
        } else {
            let raw: RawCategory =
                serde_json::from_value(v).map_err(|e| CategoryError::Malformed(e.to_string()))?;
            Ok(CategoryJson::Full(raw))
        }
    }

    pub fn build(&self) -> Result<FiniteCategory, CategoryError> {
        match self {
            CategoryJson::TwoObject { two_object } => two_object.build(),
            CategoryJson::Full(raw) => raw.build(),
        }
    }
}

impl RawCategory {
    pub fn build(&self) -> Result<FiniteCategory, CategoryError> {
        let mut b = CategoryBuilder::new();
        for o in &self.objects {
            b.object(o);
        }
        for m in &self.morphisms {
            b.morphism(&m.id, &m.dom, &m.cod);
        }
        for (o, m) in &self.identities {
            b.identity(o, m);
        }
        for (g, f, gf) in &self.compose {
            b.compose(g, f, gf);
        }
        b.build()
    }
}

impl FiniteCategory {
    pub fn from_json(text: &str) -> Result<FiniteCategory, CategoryError> {
        CategoryJson::parse(text)?.build()
    }

    /// Full-table description listing every composable pair.
    pub fn to_raw(&self) -> RawCategory {
        let id = |f: usize| self.morphism_id(f).to_string();
        RawCategory {
            objects: self.objects().to_vec(),
            morphisms: self
                .morphisms()
                .iter()
                .map(|m| RawMorphism {
                    id: m.id.clone(),
                    dom: self.object_id(m.dom).to_string(),
                    cod: self.object_id(m.cod).to_string(),
                })
                .collect(),
            identities: (0..self.object_count())
                .map(|x| (self.object_id(x).to_string(), id(self.identity(x))))
                .collect(),
            compose: self.composable_pairs().map(|(g, f)| (id(g), id(f), id(self.compose(g, f)))).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("serializable")
    }
}

impl TwoObjectSpec {
    /// Builds the spec from groups and action tables given by positions:
    /// `right[a][i]` is `hom[i] o g_a`, `left[b][i]` is `h_b o hom[i]`.
    pub fn from_actions(
        g: &Group,
        h: &Group,
        hom: &[String],
        right: &[Vec<usize>],
        left: &[Vec<usize>],
    ) -> TwoObjectSpec {
        let table = |grp: &Group, act: &[Vec<usize>]| {
            hom.iter()
                .enumerate()
                .map(|(i, f)| {
                    let row = (0..grp.order())
                        .filter(|&a| a != grp.identity())
                        .map(|a| (grp.labels()[a].clone(), hom[act[a][i]].clone()))
                        .collect();
                    (f.clone(), row)
                })
                .collect()
        };
        TwoObjectSpec {
            x: default_x(),
            y: default_y(),
            g: g.to_cayley(),
            h: h.to_cayley(),
            hom: hom.to_vec(),
            right_action: table(g, right),
            left_action: table(h, left),
        }
    }

    pub fn build(&self) -> Result<FiniteCategory, CategoryError> {
        let g = Group::from_cayley(&self.g)?;
        let h = Group::from_cayley(&self.h)?;
        let n = self.hom.len();
        let hom_pos = |s: &str| {
            self.hom
                .iter()
                .position(|f| f == s)
                .ok_or_else(|| CategoryError::UnknownMorphism(s.to_string()))
        };
        let table = |grp: &Group,
                     given: &BTreeMap<String, BTreeMap<String, String>>,
                     side: &str|
         -> Result<Vec<Vec<usize>>, CategoryError> {
            for f in given.keys() {
                hom_pos(f)?;
            }
            let mut t = vec![vec![usize::MAX; n]; grp.order()];
            for (i, f) in self.hom.iter().enumerate() {
                let row = given.get(f);
                for a in 0..grp.order() {
                    let label = &grp.labels()[a];
                    t[a][i] = match row.and_then(|r| r.get(label)) {
                        Some(img) => hom_pos(img)?,
                        None if a == grp.identity() => i,
                        None => {
                            return Err(CategoryError::ActionViolation(format!(
                                "{side} action of {label} on {f} not given"
                            )))
                        }
                    };
                }
                if let Some(r) = row {
                    if let Some(k) = r.keys().find(|k| !grp.labels().contains(k)) {
                        return Err(CategoryError::ActionViolation(format!("{k} is not a group element")));
                    }
                }
            }
            Ok(t)
        };
        let right = table(&g, &self.right_action, "right")?;
        let left = table(&h, &self.left_action, "left")?;
        for i in 0..n {
            if right[g.identity()][i] != i || left[h.identity()][i] != i {
                return Err(CategoryError::ActionViolation("identity acts non-trivially".into()));
            }
            for a in 0..g.order() {
                for b in 0..g.order() {
                    // (f o a) o b = f o (a b)
                    if right[b][right[a][i]] != right[g.mul(a, b)][i] {
                        return Err(CategoryError::ActionViolation(format!(
                            "right action is not compatible with G on {}",
                            self.hom[i]
                        )));
                    }
                }
            }
            for a in 0..h.order() {
                for b in 0..h.order() {
                    // b o (a o f) = (b a) o f
                    if left[b][left[a][i]] != left[h.mul(b, a)][i] {
                        return Err(CategoryError::ActionViolation(format!(
                            "left action is not compatible with H on {}",
                            self.hom[i]
                        )));
                    }
                }
            }
            for a in 0..g.order() {
                for b in 0..h.order() {
                    if left[b][right[a][i]] != right[a][left[b][i]] {
                        return Err(CategoryError::ActionViolation(format!(
                            "actions do not commute on {}",
                            self.hom[i]
                        )));
                    }
                }
            }
        }
        let (x, y) = (&self.x, &self.y);
        let mut b = CategoryBuilder::new();
        b.object(x).object(y);
        b.identity(x, &g.labels()[g.identity()]).identity(y, &h.labels()[h.identity()]);
        for l in g.labels() {
            b.morphism(l, x, x);
        }
        for l in h.labels() {
            b.morphism(l, y, y);
        }
        for f in &self.hom {
            b.morphism(f, x, y);
        }
        for a in 0..g.order() {
            for c in 0..g.order() {
                b.compose(&g.labels()[a], &g.labels()[c], &g.labels()[g.mul(a, c)]);
            }
            for i in 0..n {
                b.compose(&self.hom[i], &g.labels()[a], &self.hom[right[a][i]]);
            }
        }
        for a in 0..h.order() {
            for c in 0..h.order() {
                b.compose(&h.labels()[a], &h.labels()[c], &h.labels()[h.mul(a, c)]);
            }
            for i in 0..n {
                b.compose(&h.labels()[a], &self.hom[i], &self.hom[left[a][i]]);
            }
        }
        b.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_case() -> TwoObjectSpec {
        let g = Group::cyclic(2, "f", "1x");
        let h = Group::cyclic(2, "g", "1y");
        let hom: Vec<String> = (1..=4).map(|i| format!("i{i}")).collect();
        // f swaps i1<->i2, i3<->i4; g swaps i1<->i3, i2<->i4
        let right = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2]];
        let left = vec![vec![0, 1, 2, 3], vec![2, 3, 0, 1]];
        TwoObjectSpec::from_actions(&g, &h, &hom, &right, &left)
    }

    #[test]
    fn two_object_roundtrip() {
        let spec = free_case();
        let c = spec.build().unwrap();
        assert_eq!(c.morphism_count(), 8);
        assert!(c.is_ei());
        let text = serde_json::to_string(&CategoryJson::TwoObject { two_object: spec }).unwrap();
        assert_eq!(FiniteCategory::from_json(&text).unwrap(), c);
        assert_eq!(FiniteCategory::from_json(&c.to_json()).unwrap(), c);
        let p = c.hom_action(0, 1).properties();
        assert!(p.is_free && p.is_transitive);
    }

    #[test]
    fn rejects_non_commuting_actions() {
        let g = Group::cyclic(2, "f", "1x");
        let h = Group::cyclic(3, "h", "1y");
        let hom: Vec<String> = (1..=3).map(|i| format!("i{i}")).collect();
        let right = vec![vec![0, 1, 2], vec![1, 0, 2]];
        let left = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let spec = TwoObjectSpec::from_actions(&g, &h, &hom, &right, &left);
        assert!(matches!(spec.build(), Err(CategoryError::ActionViolation(_))));
    }

    #[test]
    fn rejects_unknown_fields() {
        assert!(FiniteCategory::from_json(r#"{"objects":[],"morphisms":[],"identities":{},"compose":[],"x":1}"#).is_err());
        let empty = FiniteCategory::from_json(r#"{"objects":[],"morphisms":[],"identities":{},"compose":[]}"#).unwrap();
        assert_eq!(empty.object_count(), 0);
    }
}
