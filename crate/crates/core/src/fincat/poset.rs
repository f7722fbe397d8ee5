use super::{CategoryError, FiniteCategory};

/// A finite partial order on object identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectPoset {
    elements: Vec<String>,
    leq: Vec<bool>,
}

impl ObjectPoset {
    pub fn new(elements: Vec<String>, leq: Vec<bool>) -> Result<ObjectPoset, CategoryError> {
        let n = elements.len();
        if leq.len() != n * n {
            return Err(CategoryError::Malformed("relation table size".into()));
        }
        let r = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            if !r(a, a) {
                return Err(CategoryError::Malformed(format!("{} is not below itself", elements[a])));
            }
            for b in 0..n {
                if a != b && r(a, b) && r(b, a) {
                    return Err(CategoryError::NotAPartialOrder(elements[a].clone(), elements[b].clone()));
                }
                for c in 0..n {
                    if r(a, b) && r(b, c) && !r(a, c) {
                        return Err(CategoryError::Malformed("relation is not transitive".into()));
                    }
                }
            }
        }
        Ok(ObjectPoset { elements, leq })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.leq(a, b)
                    && !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }
}

impl FiniteCategory {
    /// `x <= y` iff `C(x, y)` is non-empty.
    pub fn object_poset(&self) -> Result<ObjectPoset, CategoryError> {
        let n = self.object_count();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = !self.hom(x, y).is_empty();
            }
        }
        ObjectPoset::new(self.objects().to_vec(), leq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let names = ["a", "b", "c", "d"];
        let le = |x: usize, y: usize| x == y || x == 0 || y == 3;
        let c = FiniteCategory::from_poset(&names, le).unwrap();
        let p = c.object_poset().unwrap();
        assert_eq!(p.hasse_edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(!p.is_chain());
    }

    #[test]
    fn antisymmetry_failure() {
        let p = ObjectPoset::new(vec!["a".into(), "b".into()], vec![true; 4]);
        assert!(matches!(p, Err(CategoryError::NotAPartialOrder(..))));
    }
}
