//! Subspaces of `F_q^n` kept in reduced echelon form.

use super::field::{Elem, Field};

/// A subspace of `F_q^n` stored as reduced row-echelon basis rows.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![Elem::ZERO; ambient];
            v[i] = Elem::ONE;
            s.insert(v);
        }
        s
    }

    pub fn span<I: IntoIterator<Item = Vec<Elem>>>(field: &Field, ambient: usize, vs: I) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|e| e.is_zero())
    }

    /// Coordinates with respect to `basis()`, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Adds `v`; returns true if the dimension grew.
    pub fn insert(&mut self, v: Vec<Elem>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let f = self.field.clone();
        let mut r = self.reduce(&v);
        let Some(pc) = r.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = f.inv_nz(r[pc]);
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&r) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        let pos = self.pivots.iter().position(|&p| p > pc).unwrap_or(self.pivots.len());
        self.rows.insert(pos, r);
        self.pivots.insert(pos, pc);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    /// Non-pivot coordinates: the standard complement used for quotients.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

impl Eq for Subspace {}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

/// Incrementally detects the first vector that depends linearly on the
/// previously pushed ones and returns the monic dependency coefficients
/// `c_0..c_m` (with `c_m = 1`) such that `sum c_i v_i = 0`.
pub struct DependencyFinder {
    field: Field,
    // each entry: reduced vector, pivot, combination of pushed vectors giving it
    rows: Vec<(Vec<Elem>, usize, Vec<Elem>)>,
    count: usize,
}

impl DependencyFinder {
    pub fn new(field: &Field, _ambient: usize) -> DependencyFinder {
        DependencyFinder { field: field.clone(), rows: Vec::new(), count: 0 }
    }

    pub fn push(&mut self, v: Vec<Elem>) -> Option<Vec<Elem>> {
        let f = self.field.clone();
        let idx = self.count;
        self.count += 1;
        let mut comb = vec![Elem::ZERO; idx + 1];
        comb[idx] = Elem::ONE;
        let mut v = v;
        for (row, pc, rc) in &self.rows {
            let c = v[*pc];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (x, &y) in comb.iter_mut().zip(rc) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        match v.iter().position(|e| !e.is_zero()) {
            None => Some(comb),
            Some(pc) => {
                let inv = f.inv_nz(v[pc]);
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                for x in comb.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                self.rows.push((v, pc, comb));
                None
            }
        }
    }
}
