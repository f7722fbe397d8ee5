//! Finite categories given by explicit composition tables.

mod action;
mod group;
mod json;
mod poset;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub use action::{ActionProperties, HomAction};
pub use group::{CayleyTable, Group};
pub use json::{CategoryJson, ComposeEntry, RawCategory, RawMorphism, TwoObjectSpec};
pub use poset::ObjectPoset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("duplicate identifier {0}")]
    DuplicateId(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("unknown morphism {0}")]
    UnknownMorphism(String),
    #[error("identity of {object} is invalid: {detail}")]
    IdentityViolation { object: String, detail: String },
    #[error("composite {g} o {f}: {detail}")]
    DomainMismatch { g: String, f: String, detail: String },
    #[error("missing composite {g} o {f}")]
    MissingComposite { g: String, f: String },
    #[error("composite {g} o {f} given twice")]
    DuplicateComposite { g: String, f: String },
    #[error("composition is not associative on ({h}, {g}, {f})")]
    NonAssociative { h: String, g: String, f: String },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid action: {0}")]
    ActionViolation(String),
    #[error("object preorder is not a partial order: {0} and {1} are mutually reachable")]
    NotAPartialOrder(String, String),
    #[error("not an EI-category: endomorphism {0} is not invertible")]
    NotEi(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub dom: usize,
    pub cod: usize,
}

/// A finite category. Objects and morphisms are indexed in lexicographic
/// order of their identifiers, which makes indices canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    // compose[g * n + f] = g o f when cod f = dom g
    compose: Vec<Option<usize>>,
    // hom[x * m + y]: morphisms x -> y in index order
    hom: Vec<Vec<usize>>,
}

/// Incremental construction of a [`FiniteCategory`] by identifiers.
#[derive(Clone, Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: BTreeMap<String, String>,
    compose: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn new() -> CategoryBuilder {
        CategoryBuilder::default()
    }

    pub fn object(&mut self, id: &str) -> &mut Self {
        self.objects.push(id.to_string());
        self
    }

    pub fn morphism(&mut self, id: &str, dom: &str, cod: &str) -> &mut Self {
        self.morphisms.push((id.to_string(), dom.to_string(), cod.to_string()));
        self
    }

    pub fn identity(&mut self, object: &str, morphism: &str) -> &mut Self {
        self.identities.insert(object.to_string(), morphism.to_string());
        self
    }

    /// Records `g o f = gf`.
    pub fn compose(&mut self, g: &str, f: &str, gf: &str) -> &mut Self {
        self.compose.push((g.to_string(), f.to_string(), gf.to_string()));
        self
    }

    pub fn build(&self) -> Result<FiniteCategory, CategoryError> {
        let mut objects = self.objects.clone();
        objects.sort();
        if let Some(w) = objects.windows(2).find(|w| w[0] == w[1]) {
            return Err(CategoryError::DuplicateId(w[0].clone()));
        }
        let obj = |s: &str| {
            objects
                .binary_search_by(|o| o.as_str().cmp(s))
                .map_err(|_| CategoryError::UnknownObject(s.to_string()))
        };
        let mut morphs = Vec::with_capacity(self.morphisms.len());
        for (id, d, c) in &self.morphisms {
            morphs.push(Morphism { id: id.clone(), dom: obj(d)?, cod: obj(c)? });
        }
        morphs.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = morphs.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(CategoryError::DuplicateId(w[0].id.clone()));
        }
        let mor = |s: &str| {
            morphs
                .binary_search_by(|m| m.id.as_str().cmp(s))
                .map_err(|_| CategoryError::UnknownMorphism(s.to_string()))
        };
        let mut identities = vec![usize::MAX; objects.len()];
        for (o, m) in &self.identities {
            let (x, i) = (obj(o)?, mor(m)?);
            if morphs[i].dom != x || morphs[i].cod != x {
                return Err(CategoryError::IdentityViolation {
                    object: o.clone(),
                    detail: format!("{m} is not an endomorphism of {o}"),
                });
            }
            identities[x] = i;
        }
        if let Some(x) = identities.iter().position(|&i| i == usize::MAX) {
            return Err(CategoryError::IdentityViolation {
                object: objects[x].clone(),
                detail: "no identity given".into(),
            });
        }
        let n = morphs.len();
        let mut compose = vec![None; n * n];
        for (g, f, gf) in &self.compose {
            let (gi, fi, gfi) = (mor(g)?, mor(f)?, mor(gf)?);
            let mismatch = |detail: String| CategoryError::DomainMismatch {
                g: g.clone(),
                f: f.clone(),
                detail,
            };
            if morphs[fi].cod != morphs[gi].dom {
                return Err(mismatch("not composable".into()));
            }
            if morphs[gfi].dom != morphs[fi].dom || morphs[gfi].cod != morphs[gi].cod {
                return Err(mismatch(format!("{gf} has the wrong domain or codomain")));
            }
            let slot = &mut compose[gi * n + fi];
            match slot {
                Some(prev) if *prev != gfi => {
                    return Err(CategoryError::DuplicateComposite { g: g.clone(), f: f.clone() })
                }
                _ => *slot = Some(gfi),
            }
        }
        // identity composites may be omitted
        for (fi, m) in morphs.iter().enumerate() {
            let (id_d, id_c) = (identities[m.dom], identities[m.cod]);
            for (slot, g, f) in [(id_c * n + fi, id_c, fi), (fi * n + id_d, fi, id_d)] {
                match compose[slot] {
                    None => compose[slot] = Some(fi),
                    Some(r) if r != fi => {
                        let (g, f) = (&morphs[g].id, &morphs[f].id);
                        return Err(CategoryError::IdentityViolation {
                            object: objects[if g == &m.id { m.dom } else { m.cod }].clone(),
                            detail: format!("{g} o {f} != {}", m.id),
                        });
                    }
                    _ => {}
                }
            }
        }
        FiniteCategory::from_indexed(objects, morphs, identities, compose)
    }
}

impl FiniteCategory {
    fn from_indexed(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Result<FiniteCategory, CategoryError> {
        let m = objects.len();
        let mut hom = vec![Vec::new(); m * m];
        for (i, f) in morphisms.iter().enumerate() {
            hom[f.dom * m + f.cod].push(i);
        }
        let c = FiniteCategory { objects, morphisms, identities, compose, hom };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), CategoryError> {
        let n = self.morphisms.len();
        let name = |i: usize| self.morphisms[i].id.clone();
        for g in 0..n {
            for f in 0..n {
                if self.morphisms[f].cod == self.morphisms[g].dom && self.compose[g * n + f].is_none() {
                    return Err(CategoryError::MissingComposite { g: name(g), f: name(f) });
                }
            }
        }
        for h in 0..n {
            for g in self.from_object(self.morphisms[h].dom) {
                let hg = self.compose(h, g);
                for f in self.from_object(self.morphisms[g].dom) {
                    if self.compose(hg, f) != self.compose(h, self.compose(g, f)) {
                        return Err(CategoryError::NonAssociative { h: name(h), g: name(g), f: name(f) });
                    }
                }
            }
        }
        Ok(())
    }

    // morphisms whose codomain is `x`
    fn from_object(&self, x: usize) -> Vec<usize> {
        (0..self.objects.len()).flat_map(|w| self.hom(w, x).iter().copied()).collect()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_index(&self, id: &str) -> Option<usize> {
        self.objects.binary_search_by(|o| o.as_str().cmp(id)).ok()
    }

    pub fn morphism_index(&self, id: &str) -> Option<usize> {
        self.morphisms.binary_search_by(|m| m.id.as_str().cmp(id)).ok()
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].dom] == f
    }

    pub fn dom(&self, f: usize) -> usize {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.morphisms[f].cod
    }

    /// `g o f`; panics if not composable.
    #[inline]
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.compose[g * self.morphisms.len() + f].expect("morphisms are not composable")
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.morphisms.len() + f]
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.hom[x * self.objects.len() + y]
    }

    pub fn endomorphisms(&self, x: usize) -> &[usize] {
        self.hom(x, x)
    }

    /// Inverse of `f` when `f` is an isomorphism.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (x, y) = (self.dom(f), self.cod(f));
        self.hom(y, x).iter().copied().find(|&g| {
            self.compose(g, f) == self.identities[x] && self.compose(f, g) == self.identities[y]
        })
    }

    pub fn is_ei(&self) -> bool {
        self.first_non_invertible_endo().is_none()
    }

    pub fn first_non_invertible_endo(&self) -> Option<usize> {
        (0..self.object_count())
            .flat_map(|x| self.endomorphisms(x).iter().copied())
            .find(|&f| self.inverse(f).is_none())
    }

    pub fn require_ei(&self) -> Result<(), CategoryError> {
        match self.first_non_invertible_endo() {
            Some(f) => Err(CategoryError::NotEi(self.morphisms[f].id.clone())),
            None => Ok(()),
        }
    }

    /// Automorphism group of `x`, labelled by morphism identifiers. Its
    /// elements are listed in the order of `automorphisms(x)`.
    pub fn automorphism_group(&self, x: usize) -> Group {
        let auts = self.automorphisms(x);
        let pos = |f: usize| auts.iter().position(|&a| a == f).unwrap();
        let table = auts
            .iter()
            .map(|&a| auts.iter().map(|&b| pos(self.compose(a, b))).collect())
            .collect();
        let labels = auts.iter().map(|&a| self.morphisms[a].id.clone()).collect();
        Group::from_table(labels, table).expect("automorphisms form a group")
    }

    pub fn automorphisms(&self, x: usize) -> Vec<usize> {
        self.endomorphisms(x).iter().copied().filter(|&f| self.inverse(f).is_some()).collect()
    }

    pub fn are_isomorphic_objects(&self, x: usize, y: usize) -> bool {
        self.hom(x, y).iter().any(|&f| self.inverse(f).is_some())
    }

    /// Each object mapped to the smallest isomorphic object.
    pub fn iso_representatives(&self) -> Vec<usize> {
        (0..self.object_count())
            .map(|x| (0..=x).find(|&y| self.are_isomorphic_objects(y, x)).unwrap())
            .collect()
    }

    pub fn is_skeletal(&self) -> bool {
        self.iso_representatives().iter().enumerate().all(|(x, &r)| x == r)
    }

    /// Skeleton on the smallest representative of each isomorphism class,
    /// with the class map from every object to its representative.
    pub fn skeletalize(&self) -> (FiniteCategory, BTreeMap<String, String>) {
        let reps = self.iso_representatives();
        let keep: BTreeSet<usize> = reps.iter().copied().collect();
        let ids: Vec<&str> = keep.iter().map(|&x| self.objects[x].as_str()).collect();
        let skel = self.full_subcategory(&ids).expect("representatives exist");
        let map = reps
            .iter()
            .enumerate()
            .map(|(x, &r)| (self.objects[x].clone(), self.objects[r].clone()))
            .collect();
        (skel, map)
    }

    pub fn full_subcategory(&self, objects: &[&str]) -> Result<FiniteCategory, CategoryError> {
        let mut keep = vec![false; self.object_count()];
        for o in objects {
            let x = self.object_index(o).ok_or_else(|| CategoryError::UnknownObject(o.to_string()))?;
            keep[x] = true;
        }
        let mut b = CategoryBuilder::new();
        for (x, o) in self.objects.iter().enumerate() {
            if keep[x] {
                b.object(o).identity(o, &self.morphisms[self.identities[x]].id);
            }
        }
        let kept: Vec<usize> =
            (0..self.morphism_count()).filter(|&f| keep[self.dom(f)] && keep[self.cod(f)]).collect();
        for &f in &kept {
            let m = &self.morphisms[f];
            b.morphism(&m.id, &self.objects[m.dom], &self.objects[m.cod]);
        }
        for &g in &kept {
            for &f in &kept {
                if let Some(gf) = self.try_compose(g, f) {
                    let id = |i: usize| self.morphisms[i].id.as_str();
                    b.compose(id(g), id(f), id(gf));
                }
            }
        }
        b.build()
    }

    pub fn opposite(&self) -> FiniteCategory {
        let n = self.morphism_count();
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism { id: m.id.clone(), dom: m.cod, cod: m.dom })
            .collect();
        let mut compose = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                compose[g * n + f] = self.compose[f * n + g];
            }
        }
        FiniteCategory::from_indexed(self.objects.clone(), morphisms, self.identities.clone(), compose)
            .expect("opposite of a category")
    }

    /// Composable pairs `(g, f)` with `g o f` defined, in index order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.morphism_count();
        (0..n).flat_map(move |g| (0..n).filter(move |&f| self.cod(f) == self.dom(g)).map(move |f| (g, f)))
    }

    /// Finds an isomorphism of categories by backtracking.
    pub fn isomorphism_to(&self, other: &FiniteCategory) -> Option<Functor> {
        let m = self.object_count();
        if m != other.object_count() || self.morphism_count() != other.morphism_count() {
            return None;
        }
        let sig = |c: &FiniteCategory, x: usize| {
            let mut out: Vec<usize> = (0..m).map(|y| c.hom(x, y).len()).collect();
            out.sort();
            let mut inc: Vec<usize> = (0..m).map(|y| c.hom(y, x).len()).collect();
            inc.sort();
            (c.hom(x, x).len(), out, inc)
        };
        let mut omap = vec![usize::MAX; m];
        let mut used = vec![false; m];
        self.match_objects(other, 0, &mut omap, &mut used, &sig)
    }

    fn match_objects<S, K>(
        &self,
        other: &FiniteCategory,
        x: usize,
        omap: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig: &S,
    ) -> Option<Functor>
    where
        S: Fn(&FiniteCategory, usize) -> K,
        K: PartialEq,
    {
        let m = self.object_count();
        if x == m {
            return self.match_morphisms(other, omap);
        }
        for y in 0..m {
            if used[y] || sig(self, x) != sig(other, y) {
                continue;
            }
            if (0..x).any(|w| {
                self.hom(w, x).len() != other.hom(omap[w], y).len()
                    || self.hom(x, w).len() != other.hom(y, omap[w]).len()
            }) {
                continue;
            }
            omap[x] = y;
            used[y] = true;
            if let Some(f) = self.match_objects(other, x + 1, omap, used, sig) {
                return Some(f);
            }
            used[y] = false;
        }
        omap[x] = usize::MAX;
        None
    }

    fn match_morphisms(&self, other: &FiniteCategory, omap: &[usize]) -> Option<Functor> {
        let n = self.morphism_count();
        let mut order: Vec<usize> = (0..n).collect();
        // identities first, then smaller hom-sets, to prune early
        order.sort_by_key(|&f| (!self.is_identity(f), self.hom(self.dom(f), self.cod(f)).len(), f));
        let mut mmap = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            a: &FiniteCategory,
            b: &FiniteCategory,
            omap: &[usize],
            order: &[usize],
            k: usize,
            mmap: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let f = order[k];
            let cands: Vec<usize> = if a.is_identity(f) {
                vec![b.identity(omap[a.dom(f)])]
            } else {
                b.hom(omap[a.dom(f)], omap[a.cod(f)]).to_vec()
            };
            for t in cands {
                if used[t] {
                    continue;
                }
                mmap[f] = t;
                let ok = order[..=k].iter().all(|&g| {
                    order[..=k].iter().all(|&h| match a.try_compose(g, h) {
                        Some(gh) => mmap[gh] == usize::MAX || b.try_compose(mmap[g], mmap[h]) == Some(mmap[gh]),
                        None => true,
                    })
                });
                if ok {
                    used[t] = true;
                    if go(a, b, omap, order, k + 1, mmap, used) {
                        return true;
                    }
                    used[t] = false;
                }
            }
            mmap[f] = usize::MAX;
            false
        }
        if go(self, other, omap, &order, 0, &mut mmap, &mut used) {
            Some(Functor { objects: omap.to_vec(), morphisms: mmap })
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &FiniteCategory) -> bool {
        self.isomorphism_to(other).is_some()
    }

    pub fn morphism_id(&self, f: usize) -> &str {
        &self.morphisms[f].id
    }

    pub fn object_id(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn to_builder(&self) -> CategoryBuilder {
        let mut b = CategoryBuilder::new();
        for (x, o) in self.objects.iter().enumerate() {
            b.object(o).identity(o, &self.morphisms[self.identities[x]].id);
        }
        for m in &self.morphisms {
            b.morphism(&m.id, &self.objects[m.dom], &self.objects[m.cod]);
        }
        for (g, f) in self.composable_pairs().collect::<Vec<_>>() {
            b.compose(self.morphism_id(g), self.morphism_id(f), self.morphism_id(self.compose(g, f)));
        }
        b
    }

    /// The category of a finite poset, `x <= y` giving one morphism `x -> y`.
    pub fn from_poset(elements: &[&str], leq: impl Fn(usize, usize) -> bool) -> Result<FiniteCategory, CategoryError> {
        let n = elements.len();
        let name = |x: usize, y: usize| {
            if x == y {
                format!("1{}", elements[x])
            } else {
                format!("{}<{}", elements[x], elements[y])
            }
        };
        let mut b = CategoryBuilder::new();
        for x in 0..n {
            b.object(elements[x]).identity(elements[x], &name(x, x));
        }
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    b.morphism(&name(x, y), elements[x], elements[y]);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if leq(x, y) && leq(y, z) {
                        if !leq(x, z) {
                            return Err(CategoryError::Malformed("relation is not transitive".into()));
                        }
                        b.compose(&name(y, z), &name(x, y), &name(x, z));
                    }
                }
            }
        }
        b.build()
    }

    /// The one-object category of a group.
    pub fn from_group(object: &str, g: &Group) -> FiniteCategory {
        let mut b = CategoryBuilder::new();
        b.object(object).identity(object, &g.labels()[g.identity()]);
        for l in g.labels() {
            b.morphism(l, object, object);
        }
        for a in 0..g.order() {
            for c in 0..g.order() {
                b.compose(&g.labels()[a], &g.labels()[c], &g.labels()[g.mul(a, c)]);
            }
        }
        b.build().expect("group category")
    }
}

/// A functor between finite categories, stored as index maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl Functor {
    pub fn validate(&self, src: &FiniteCategory, dst: &FiniteCategory) -> Result<(), CategoryError> {
        let bad = |s: String| Err(CategoryError::InvalidFunctor(s));
        if self.objects.len() != src.object_count() || self.morphisms.len() != src.morphism_count() {
            return bad("map sizes".into());
        }
        if self.objects.iter().any(|&y| y >= dst.object_count())
            || self.morphisms.iter().any(|&g| g >= dst.morphism_count())
        {
            return bad("index out of range".into());
        }
        for f in 0..src.morphism_count() {
            let g = self.morphisms[f];
            if dst.dom(g) != self.objects[src.dom(f)] || dst.cod(g) != self.objects[src.cod(f)] {
                return bad(format!("{} is sent to a morphism with wrong ends", src.morphism_id(f)));
            }
        }
        for x in 0..src.object_count() {
            if self.morphisms[src.identity(x)] != dst.identity(self.objects[x]) {
                return bad(format!("identity of {} not preserved", src.object_id(x)));
            }
        }
        for (g, f) in src.composable_pairs() {
            if self.morphisms[src.compose(g, f)] != dst.compose(self.morphisms[g], self.morphisms[f]) {
                return bad(format!("composite {} o {} not preserved", src.morphism_id(g), src.morphism_id(f)));
            }
        }
        Ok(())
    }

    pub fn compose(&self, after: &Functor) -> Functor {
        Functor {
            objects: self.objects.iter().map(|&x| after.objects[x]).collect(),
            morphisms: self.morphisms.iter().map(|&f| after.morphisms[f]).collect(),
        }
    }

    pub fn is_full(&self, src: &FiniteCategory, dst: &FiniteCategory) -> bool {
        let m = src.object_count();
        (0..m).all(|x| {
            (0..m).all(|y| {
                let img: BTreeSet<usize> = src.hom(x, y).iter().map(|&f| self.morphisms[f]).collect();
                img.len() == dst.hom(self.objects[x], self.objects[y]).len()
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow() -> CategoryBuilder {
        let mut b = CategoryBuilder::new();
        b.object("x").object("y").identity("x", "1x").identity("y", "1y");
        b.morphism("1x", "x", "x").morphism("1y", "y", "y").morphism("a", "x", "y");
        b
    }

    #[test]
    fn builds_arrow_category() {
        let c = arrow().build().unwrap();
        assert_eq!(c.morphism_count(), 3);
        assert!(c.is_ei());
        assert!(c.is_skeletal());
        let a = c.morphism_index("a").unwrap();
        assert_eq!(c.compose(c.identity(1), a), a);
    }

    #[test]
    fn rejects_missing_identity() {
        let mut b = CategoryBuilder::new();
        b.object("x").morphism("f", "x", "x");
        assert!(matches!(b.build(), Err(CategoryError::IdentityViolation { .. })));
    }

    #[test]
    fn rejects_missing_composite() {
        let mut b = CategoryBuilder::new();
        b.object("x").identity("x", "1").morphism("1", "x", "x").morphism("e", "x", "x");
        assert!(matches!(b.build(), Err(CategoryError::MissingComposite { .. })));
        b.compose("e", "e", "e");
        let c = b.build().unwrap();
        assert!(!c.is_ei());
    }

    #[test]
    fn rejects_bad_domain() {
        let mut b = arrow();
        b.compose("a", "a", "a");
        assert!(matches!(b.build(), Err(CategoryError::DomainMismatch { .. })));
    }

    #[test]
    fn rejects_non_associative() {
        // x with endomorphisms 1, s, t where composition is a non-associative magma
        let mut b = CategoryBuilder::new();
        b.object("x").identity("x", "1");
        for m in ["1", "s", "t"] {
            b.morphism(m, "x", "x");
        }
        b.compose("s", "s", "t").compose("s", "t", "1").compose("t", "s", "s");
        b.compose("t", "t", "t");
        assert!(matches!(b.build(), Err(CategoryError::NonAssociative { .. })));
    }

    #[test]
    fn skeleton_of_isomorphic_pair() {
        let mut b = CategoryBuilder::new();
        b.object("a").object("b").identity("a", "1a").identity("b", "1b");
        b.morphism("1a", "a", "a").morphism("1b", "b", "b");
        b.morphism("f", "a", "b").morphism("g", "b", "a");
        b.compose("g", "f", "1a").compose("f", "g", "1b");
        let c = b.build().unwrap();
        assert!(!c.is_skeletal());
        let (s, map) = c.skeletalize();
        assert_eq!(s.objects(), &["a".to_string()]);
        assert_eq!(map["b"], "a");
    }

    #[test]
    fn opposite_is_involutive() {
        let s3 = FiniteCategory::from_group("x", &Group::symmetric(3, "1"));
        assert_eq!(s3.opposite().opposite(), s3);
        assert!(s3.is_isomorphic(&s3.opposite()));
    }

    #[test]
    fn nonisomorphic_groups() {
        let z4 = FiniteCategory::from_group("x", &Group::cyclic(4, "g", "1"));
        let z2 = Group::cyclic(2, "g", "1");
        let v4 = FiniteCategory::from_group("x", &Group::direct_product(&z2, &z2));
        assert!(!z4.is_isomorphic(&v4));
        let f = z4.isomorphism_to(&z4).unwrap();
        f.validate(&z4, &z4).unwrap();
    }
}
