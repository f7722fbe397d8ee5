//! Quivers with relations: presented algebras, verification against a
//! computed algebra, string algebras and bands, graph classification.

mod families;
mod graph;
mod presented;
mod string;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use families::{one_loop, two_loop, two_loop_commuting};
pub use graph::{classify_graph, null_root, separated_quiver, ComponentClass, GraphClass, GraphKind, GraphTag, UndirectedGraph};
pub use presented::{presented_algebra, presented_algebra_auto, PresentedAlgebra, MAX_PATHS};
pub use string::{band_automaton_certificate, default_band_bound, find_band_bounded, word_label, is_string_algebra, verify_band, BandCertificate, Letter};
pub use verify::{element_terms, verify_presentation, Verification, VerifyOptions, VerifyTarget, Witness};

use crate::algebra::AlgebraError;
use crate::linfield::{Elem, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("duplicate identifier {0}")]
    DuplicateId(String),
    #[error("path {0} is not composable")]
    NotComposable(String),
    #[error("relation {0} mixes paths with different endpoints")]
    MixedEndpoints(usize),
    #[error("relation {0} has a term outside the square of the arrow ideal")]
    NotAdmissible(usize),
    #[error("paths of length {0} survive; the quotient is not finite-dimensional within this bound")]
    NotFiniteDimensionalWithinBound(usize),
    #[error("more than {0} paths up to the length bound")]
    TooManyPaths(usize),
    #[error("cannot parse relation {0:?}: {1}")]
    Parse(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// A path stored in traversal order: `arrows[0]` is applied first. The
/// trivial path at `vertex` has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub vertex: usize,
    pub arrows: Vec<usize>,
}

/// Linear combination of parallel paths; coefficients are integers reduced
/// into the prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    pub relations: Vec<Relation>,
}

/// One term of a JSON relation; `path` is in composition order, so
/// `["b", "a"]` is `a` followed by `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(default = "one")]
    pub coeff: i64,
    pub path: Vec<String>,
}

fn one() -> i64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationJson {
    Terms(Vec<TermJson>),
    /// Shorthand such as `"g^2 b - b a^3"`, composition order.
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<RelationJson>,
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<QuiverPresentation, PresentationError> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(PresentationError::DuplicateId(v.clone()));
            }
        }
        let vid = |s: &str| {
            vertices.iter().position(|v| v == s).ok_or_else(|| PresentationError::UnknownVertex(s.to_string()))
        };
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        let mut ids = std::collections::BTreeSet::new();
        for a in &arrows {
            if !ids.insert(a.id.clone()) {
                return Err(PresentationError::DuplicateId(a.id.clone()));
            }
            src.push(vid(&a.src)?);
            tgt.push(vid(&a.tgt)?);
        }
        Ok(QuiverPresentation { vertices, arrows, src, tgt, relations: Vec::new() })
    }

    pub fn from_json(j: &PresentationJson) -> Result<QuiverPresentation, PresentationError> {
        let mut p = QuiverPresentation::new(j.vertices.clone(), j.arrows.clone())?;
        for r in &j.relations {
            match r {
                RelationJson::Terms(ts) => {
                    let terms = ts
                        .iter()
                        .map(|t| {
                            let ids: Vec<&str> = t.path.iter().map(|s| s.as_str()).collect();
                            Ok((t.coeff, p.path_from_composition(&ids)?))
                        })
                        .collect::<Result<Vec<_>, PresentationError>>()?;
                    p.add_relation(Relation { terms })?;
                }
                RelationJson::Text(s) => {
                    let rel = p.parse_relation(s)?;
                    p.add_relation(rel)?;
                }
            }
        }
        Ok(p)
    }

    pub fn parse_json(text: &str) -> Result<QuiverPresentation, PresentationError> {
        let j: PresentationJson =
            serde_json::from_str(text).map_err(|e| PresentationError::Parse(String::new(), e.to_string()))?;
        QuiverPresentation::from_json(&j)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            vertices: self.vertices.clone(),
            arrows: self.arrows.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    RelationJson::Terms(
                        r.terms
                            .iter()
                            .map(|(c, p)| TermJson {
                                coeff: *c,
                                path: p.arrows.iter().rev().map(|&a| self.arrows[a].id.clone()).collect(),
                            })
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn path_src(&self, p: &Path) -> usize {
        p.arrows.first().map(|&a| self.src[a]).unwrap_or(p.vertex)
    }

    pub fn path_tgt(&self, p: &Path) -> usize {
        p.arrows.last().map(|&a| self.tgt[a]).unwrap_or(p.vertex)
    }

    /// Path from arrow ids in composition order (last applied first).
    pub fn path_from_composition(&self, ids: &[&str]) -> Result<Path, PresentationError> {
        let mut arrows = Vec::with_capacity(ids.len());
        for id in ids.iter().rev() {
            arrows.push(self.arrow_index(id).ok_or_else(|| PresentationError::UnknownArrow(id.to_string()))?);
        }
        if arrows.is_empty() {
            return Err(PresentationError::NotComposable("empty path".into()));
        }
        for w in arrows.windows(2) {
            if self.tgt[w[0]] != self.src[w[1]] {
                return Err(PresentationError::NotComposable(ids.join(" ")));
            }
        }
        Ok(Path { vertex: self.src[arrows[0]], arrows })
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e_{}", self.vertices[p.vertex]);
        }
        // composition order, grouping repeated arrows as powers
        let mut out: Vec<String> = Vec::new();
        let ids: Vec<&str> = p.arrows.iter().rev().map(|&a| self.arrows[a].id.as_str()).collect();
        let mut i = 0;
        while i < ids.len() {
            let mut j = i;
            while j < ids.len() && ids[j] == ids[i] {
                j += 1;
            }
            out.push(if j - i > 1 { format!("{}^{}", ids[i], j - i) } else { ids[i].to_string() });
            i = j;
        }
        out.join(" ")
    }

    pub fn add_relation(&mut self, r: Relation) -> Result<(), PresentationError> {
        let idx = self.relations.len();
        let Some((_, first)) = r.terms.first() else {
            return Ok(());
        };
        let ends = (self.path_src(first), self.path_tgt(first));
        for (_, p) in &r.terms {
            if (self.path_src(p), self.path_tgt(p)) != ends {
                return Err(PresentationError::MixedEndpoints(idx));
            }
            if p.arrows.len() < 2 {
                return Err(PresentationError::NotAdmissible(idx));
            }
        }
        self.relations.push(r);
        Ok(())
    }

    /// Adds the zero relation given by arrow ids in composition order.
    pub fn zero_relation(&mut self, ids: &[&str]) -> Result<(), PresentationError> {
        let p = self.path_from_composition(ids)?;
        self.add_relation(Relation { terms: vec![(1, p)] })
    }

    /// Parses shorthand like `"g^2 b - 2 b a^3"` (composition order).
    pub fn parse_relation(&self, text: &str) -> Result<Relation, PresentationError> {
        let err = |m: &str| PresentationError::Parse(text.to_string(), m.to_string());
        let mut terms = Vec::new();
        let mut sign = 1i64;
        let mut coeff: Option<i64> = None;
        let mut factors: Vec<String> = Vec::new();
        let spaced = text.replace('+', " + ").replace('-', " - ").replace('*', " ");
        let flush = |sign: i64, coeff: Option<i64>, factors: &mut Vec<String>, terms: &mut Vec<(i64, Path)>| {
            if factors.is_empty() {
                return if coeff.is_some() { Err(err("coefficient without a path")) } else { Ok(()) };
            }
            let ids: Vec<&str> = factors.iter().map(|s| s.as_str()).collect();
            terms.push((sign * coeff.unwrap_or(1), self.path_from_composition(&ids)?));
            factors.clear();
            Ok(())
        };
        for tok in spaced.split_whitespace() {
            match tok {
                "+" | "-" => {
                    flush(sign, coeff, &mut factors, &mut terms)?;
                    coeff = None;
                    sign = if tok == "-" { -1 } else { 1 };
                }
                _ if tok.chars().all(|c| c.is_ascii_digit()) => {
                    if !factors.is_empty() || coeff.is_some() {
                        return Err(err("misplaced coefficient"));
                    }
                    coeff = Some(tok.parse().map_err(|_| err("bad coefficient"))?);
                }
                _ => {
                    let (id, exp) = match tok.split_once('^') {
                        Some((id, e)) => (id, e.parse::<usize>().map_err(|_| err("bad exponent"))?),
                        None => (tok, 1),
                    };
                    if self.arrow_index(id).is_none() {
                        return Err(PresentationError::UnknownArrow(id.to_string()));
                    }
                    for _ in 0..exp {
                        factors.push(id.to_string());
                    }
                }
            }
        }
        flush(sign, coeff, &mut factors, &mut terms)?;
        if terms.is_empty() {
            return Err(err("empty relation"));
        }
        Ok(Relation { terms })
    }

    pub fn add_relation_text(&mut self, text: &str) -> Result<(), PresentationError> {
        let r = self.parse_relation(text)?;
        self.add_relation(r)
    }

    /// True iff every relation is a single path (a zero relation).
    pub fn is_monomial(&self) -> bool {
        self.relations.iter().all(|r| r.terms.len() == 1)
    }

    /// Zero-relation paths of a monomial presentation.
    pub fn zero_paths(&self) -> Vec<Path> {
        self.relations.iter().filter(|r| r.terms.len() == 1).map(|r| r.terms[0].1.clone()).collect()
    }

    /// Opposite quiver with reversed relations.
    pub fn dual(&self) -> QuiverPresentation {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { id: a.id.clone(), src: a.tgt.clone(), tgt: a.src.clone() })
            .collect();
        let mut d = QuiverPresentation::new(self.vertices.clone(), arrows).expect("same identifiers");
        for r in &self.relations {
            let terms = r
                .terms
                .iter()
                .map(|(c, p)| {
                    let mut arrows = p.arrows.clone();
                    arrows.reverse();
                    let vertex = arrows.first().map(|&a| d.src[a]).unwrap_or(p.vertex);
                    (*c, Path { vertex, arrows })
                })
                .collect();
            d.relations.push(Relation { terms });
        }
        d
    }

    pub fn coefficient(&self, field: &Field, c: i64) -> Elem {
        field.from_int(c)
    }

    /// Arrow multiplicities `m[i][j]` from vertex `i` to `j`.
    pub fn arrow_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for a in 0..self.arrow_count() {
            m[self.src[a]][self.tgt[a]] += 1;
        }
        m
    }

    pub fn relation_labels(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| {
                let mut s = String::new();
                for (i, (c, p)) in r.terms.iter().enumerate() {
                    let body = self.path_label(p);
                    let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
                    let mag = c.unsigned_abs();
                    if i > 0 {
                        s.push(' ');
                    }
                    s.push_str(sign);
                    if i > 0 || *c < 0 {
                        s.push(' ');
                    }
                    if mag != 1 {
                        s.push_str(&format!("{mag} "));
                    }
                    s.push_str(&body);
                }
                s
            })
            .collect()
    }
}

/// Convenience: build a presentation from `(id, src, tgt)` triples.
pub fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> QuiverPresentation {
    QuiverPresentation::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(id, s, t)| Arrow { id: id.to_string(), src: s.to_string(), tgt: t.to_string() })
            .collect(),
    )
    .expect("well-formed quiver")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_shorthand() {
        let mut p = quiver(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2"), ("g", "2", "2")]);
        p.add_relation_text("g^2 b - b a^3").unwrap();
        let r = &p.relations[0];
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[0].0, 1);
        assert_eq!(r.terms[1].0, -1);
        assert_eq!(p.path_label(&r.terms[1].1), "b a^3");
        assert_eq!(p.relation_labels()[0], "g^2 b - b a^3");
        assert!(p.add_relation_text("b g").is_err());
        assert!(p.add_relation_text("a").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let mut p = quiver(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2")]);
        p.zero_relation(&["a", "a"]).unwrap();
        p.zero_relation(&["b", "a"]).unwrap();
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(QuiverPresentation::parse_json(&j).unwrap(), p);
        let text = r#"{"vertices":["1","2"],"arrows":[{"id":"a","src":"1","tgt":"1"},{"id":"b","src":"1","tgt":"2"}],"relations":["a^2","b a"]}"#;
        assert_eq!(QuiverPresentation::parse_json(text).unwrap(), p);
    }

    #[test]
    fn dual_reverses() {
        let mut p = quiver(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2")]);
        p.zero_relation(&["b", "a"]).unwrap();
        let d = p.dual();
        assert_eq!(d.src(1), 1);
        assert_eq!(d.path_label(&d.relations[0].terms[0].1), "a b");
        assert_eq!(d.dual(), p);
    }
}
