//! The `Aut(y) x Aut(x)` action on a hom set `C(x, y)` by composition.

use serde::{Deserialize, Serialize};

use super::{CategoryError, FiniteCategory};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAction {
    pub x: usize,
    pub y: usize,
    /// Morphisms `x -> y`.
    pub hom: Vec<usize>,
    pub aut_x: Vec<usize>,
    pub aut_y: Vec<usize>,
    /// `left[g][i]`: position of `aut_y[g] o hom[i]`.
    pub left: Vec<Vec<usize>>,
    /// `right[h][i]`: position of `hom[i] o aut_x[h]`.
    pub right: Vec<Vec<usize>>,
    /// Positions of the identities in `aut_x` and `aut_y`.
    pub unit_x: usize,
    pub unit_y: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionProperties {
    pub is_free: bool,
    pub is_transitive: bool,
    pub orbit_count: usize,
    /// Orbits as lists of hom-set positions.
    pub orbits: Vec<Vec<usize>>,
    /// A non-trivial pair `(g, h)` fixing some `f`, as `(g, h, f)` positions.
    pub stabilizer_witness: Option<(usize, usize, usize)>,
}

impl HomAction {
    pub fn new(c: &FiniteCategory, x: usize, y: usize) -> HomAction {
        let hom = c.hom(x, y).to_vec();
        let aut_x = c.automorphisms(x);
        let aut_y = c.automorphisms(y);
        let pos = |f: usize| hom.iter().position(|&h| h == f).unwrap();
        let left = aut_y.iter().map(|&g| hom.iter().map(|&f| pos(c.compose(g, f))).collect()).collect();
        let right = aut_x.iter().map(|&h| hom.iter().map(|&f| pos(c.compose(f, h))).collect()).collect();
        let unit_x = aut_x.iter().position(|&h| h == c.identity(x)).unwrap();
        let unit_y = aut_y.iter().position(|&g| g == c.identity(y)).unwrap();
        HomAction { x, y, hom, aut_x, aut_y, left, right, unit_x, unit_y }
    }

    pub fn size(&self) -> usize {
        self.hom.len()
    }

    /// Position of `aut_y[g] o hom[i] o aut_x[h]`.
    pub fn act(&self, g: usize, i: usize, h: usize) -> usize {
        self.left[g][self.right[h][i]]
    }

    /// Checks that both tables are permutations and that the actions commute.
    pub fn check(&self) -> Result<(), CategoryError> {
        let n = self.size();
        let is_perm = |row: &Vec<usize>| {
            let mut seen = vec![false; n];
            row.len() == n && row.iter().all(|&j| j < n && !std::mem::replace(&mut seen[j], true))
        };
        if !self.left.iter().chain(&self.right).all(is_perm) {
            return Err(CategoryError::ActionViolation("action does not permute the hom set".into()));
        }
        for g in 0..self.left.len() {
            for h in 0..self.right.len() {
                for i in 0..n {
                    if self.left[g][self.right[h][i]] != self.right[h][self.left[g][i]] {
                        return Err(CategoryError::ActionViolation("left and right actions do not commute".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let mut o: Vec<usize> = (0..self.left.len())
            .flat_map(|g| (0..self.right.len()).map(move |h| (g, h)))
            .map(|(g, h)| self.act(g, i, h))
            .collect();
        o.sort();
        o.dedup();
        o
    }

    pub fn properties(&self) -> ActionProperties {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for i in 0..n {
            if !seen[i] {
                let o = self.orbit(i);
                for &j in &o {
                    seen[j] = true;
                }
                orbits.push(o);
            }
        }
        let stabilizer_witness = (0..n).find_map(|i| {
            (0..self.left.len()).find_map(|g| {
                (0..self.right.len())
                    .find(|&h| (g, h) != (self.unit_y, self.unit_x) && self.act(g, i, h) == i)
                    .map(|h| (g, h, i))
            })
        });
        ActionProperties {
            is_free: stabilizer_witness.is_none(),
            is_transitive: orbits.len() == 1,
            orbit_count: orbits.len(),
            orbits,
            stabilizer_witness,
        }
    }
}

impl FiniteCategory {
    pub fn hom_action(&self, x: usize, y: usize) -> HomAction {
        HomAction::new(self, x, y)
    }
}
