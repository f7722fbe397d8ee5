//! A uniform "generators and relations" view of categories and bound
//! quivers, used by the enumerators.

use std::collections::{BTreeMap, BTreeSet};

use super::{identity_or_empty, OracleError, RepArrow, Representation};
use crate::fincat::FiniteCategory;
use crate::linfield::{Field, Matrix};
use crate::presentations::QuiverPresentation;

/// `sum c * path = 0`; paths are `(start vertex, generators in traversal order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemRelation {
    pub terms: Vec<(i64, usize, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct RepSystem {
    pub vertices: Vec<String>,
    pub arrows: Vec<RepArrow>,
    pub relations: Vec<SystemRelation>,
    /// For categories: every morphism as a word in the generators.
    pub words: Option<Vec<(RepArrow, Vec<usize>)>>,
}

/// Composites reachable from the generators; `word[m]` is traversal order.
fn closure(c: &FiniteCategory, gens: &[usize]) -> BTreeMap<usize, Vec<usize>> {
    let mut words: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..c.object_count() {
        words.insert(c.identity(x), Vec::new());
    }
    for (i, &g) in gens.iter().enumerate() {
        words.entry(g).or_insert_with(|| vec![i]);
    }
    loop {
        let known: Vec<(usize, Vec<usize>)> = words.iter().map(|(k, v)| (*k, v.clone())).collect();
        let mut grew = false;
        for (g, wg) in &known {
            for (f, wf) in &known {
                if let Some(gf) = c.try_compose(*g, *f) {
                    if !words.contains_key(&gf) {
                        let mut w = wf.clone();
                        w.extend_from_slice(wg);
                        words.insert(gf, w);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return words;
        }
    }
}

impl RepSystem {
    /// Greedy generating set: repeatedly adds the morphism whose closure
    /// covers the most of the composition table.
    pub fn from_category(c: &FiniteCategory) -> RepSystem {
        let mut gens: Vec<usize> = Vec::new();
        let mut words = closure(c, &gens);
        while words.len() < c.morphism_count() {
            let best = (0..c.morphism_count())
                .filter(|m| !words.contains_key(m))
                .map(|m| {
                    let mut g = gens.clone();
                    g.push(m);
                    (closure(c, &g).len(), m)
                })
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                .map(|(_, m)| m)
                .expect("some morphism is missing");
            gens.push(best);
            words = closure(c, &gens);
        }
        let arrow_of = |m: usize| RepArrow { label: c.morphism_id(m).to_string(), src: c.dom(m), tgt: c.cod(m) };
        let arrows = gens.iter().map(|&g| arrow_of(g)).collect();
        let mut seen = BTreeSet::new();
        let mut relations = Vec::new();
        for (g, f) in c.composable_pairs() {
            if c.is_identity(g) || c.is_identity(f) {
                continue;
            }
            let lhs = words[&c.compose(g, f)].clone();
            let mut rhs = words[&f].clone();
            rhs.extend_from_slice(&words[&g]);
            if lhs == rhs || !seen.insert((lhs.clone(), rhs.clone())) {
                continue;
            }
            let v = c.dom(f);
            relations.push(SystemRelation { terms: vec![(1, v, lhs), (-1, v, rhs)] });
        }
        let all = (0..c.morphism_count()).map(|m| (arrow_of(m), words[&m].clone())).collect();
        RepSystem { vertices: c.objects().to_vec(), arrows, relations, words: Some(all) }
    }

    pub fn from_presentation(q: &QuiverPresentation) -> RepSystem {
        let arrows = (0..q.arrow_count())
            .map(|a| RepArrow { label: q.arrows[a].id.clone(), src: q.src(a), tgt: q.tgt(a) })
            .collect();
        let relations = q
            .relations
            .iter()
            .map(|r| SystemRelation { terms: r.terms.iter().map(|(c, p)| (*c, p.vertex, p.arrows.clone())).collect() })
            .collect();
        RepSystem { vertices: q.vertices.clone(), arrows, relations, words: None }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Same system with generators renumbered so that `order[i]` becomes `i`.
    pub fn reordered(&self, order: &[usize]) -> RepSystem {
        let mut new_index = vec![0; order.len()];
        for (i, &o) in order.iter().enumerate() {
            new_index[o] = i;
        }
        let map = |w: &Vec<usize>| w.iter().map(|&a| new_index[a]).collect::<Vec<_>>();
        RepSystem {
            vertices: self.vertices.clone(),
            arrows: order.iter().map(|&o| self.arrows[o].clone()).collect(),
            relations: self
                .relations
                .iter()
                .map(|r| SystemRelation { terms: r.terms.iter().map(|(c, v, w)| (*c, *v, map(w))).collect() })
                .collect(),
            words: self.words.as_ref().map(|ws| ws.iter().map(|(a, w)| (a.clone(), map(w))).collect()),
        }
    }

    /// Relations indexed by the largest generator they mention.
    pub fn ready(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.arrows.len().max(1)];
        for (i, r) in self.relations.iter().enumerate() {
            let last = r.terms.iter().flat_map(|t| t.2.iter().copied()).max().unwrap_or(0);
            out[last].push(i);
        }
        out
    }

    pub fn path_matrix(&self, field: &Field, dims: &[usize], maps: &[Matrix], vertex: usize, word: &[usize]) -> Matrix {
        let mut m = identity_or_empty(field, dims[vertex]);
        for &a in word {
            m = maps[a].mul(&m);
        }
        m
    }

    pub fn relation_holds(&self, field: &Field, dims: &[usize], maps: &[Matrix], r: usize) -> bool {
        let rel = &self.relations[r];
        let mut acc: Option<Matrix> = None;
        for (c, v, w) in &rel.terms {
            let m = self.path_matrix(field, dims, maps, *v, w).scale(field.from_int(*c));
            acc = Some(match acc {
                None => m,
                Some(a) => a.add(&m),
            });
        }
        acc.map_or(true, |a| a.is_zero())
    }

    pub fn holds(&self, field: &Field, dims: &[usize], maps: &[Matrix]) -> bool {
        (0..self.relations.len()).all(|r| self.relation_holds(field, dims, maps, r))
    }

    /// Representation on the generators.
    pub fn representation(&self, field: &Field, dims: &[usize], maps: Vec<Matrix>) -> Representation {
        Representation {
            field: field.clone(),
            vertices: self.vertices.clone(),
            dims: dims.to_vec(),
            arrows: self.arrows.clone(),
            maps,
        }
    }

    /// For categories, the representation on every morphism; otherwise a copy.
    pub fn expand(&self, rep: &Representation) -> Representation {
        match &self.words {
            None => rep.clone(),
            Some(words) => Representation {
                field: rep.field.clone(),
                vertices: rep.vertices.clone(),
                dims: rep.dims.clone(),
                arrows: words.iter().map(|(a, _)| a.clone()).collect(),
                maps: words.iter().map(|(a, w)| self.path_matrix(&rep.field, &rep.dims, &rep.maps, a.src, w)).collect(),
            },
        }
    }

    pub fn check_dims(&self, dims: &[usize]) -> Result<(), OracleError> {
        if dims.len() != self.vertex_count() {
            return Err(OracleError::DimensionMismatch { got: dims.len(), expected: self.vertex_count() });
        }
        Ok(())
    }
}

/// `V(1_x) = I` and `V(g f) = V(g) V(f)` on every composable pair; the
/// representation must list every morphism in category order.
pub fn is_functor(c: &FiniteCategory, v: &Representation) -> bool {
    if v.maps.len() != c.morphism_count() || v.check_shapes().is_err() {
        return false;
    }
    (0..c.object_count()).all(|x| v.maps[c.identity(x)].is_identity())
        && c.composable_pairs().all(|(g, f)| v.maps[c.compose(g, f)] == v.maps[g].mul(&v.maps[f]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn generators_of_cyclic_group_action() {
        let c = corpus::z2_z3_three().build().unwrap();
        let s = RepSystem::from_category(&c);
        // g, h and one f_i
        assert_eq!(s.arrows.len(), 3);
        assert_eq!(s.words.as_ref().unwrap().len(), c.morphism_count());
    }

    #[test]
    fn expand_is_functorial() {
        let c = corpus::z2_z3_three().build().unwrap();
        let s = RepSystem::from_category(&c);
        let f = Field::prime(2).unwrap();
        let dims = vec![1, 1];
        let maps: Vec<Matrix> = s.arrows.iter().map(|_| Matrix::identity(&f, 1)).collect();
        assert!(s.holds(&f, &dims, &maps));
        let full = s.expand(&s.representation(&f, &dims, maps));
        assert!(is_functor(&c, &full));
    }
}
