use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::fincat::{FiniteCategory, Group, ObjectPoset};
use crate::linfield::{Elem, Field, FieldSpec, Matrix, Subspace};

/// Sparse coordinate vector: `(basis index, coefficient)` pairs.
pub type Sparse = Vec<(usize, Elem)>;

/// A finite-dimensional associative unital algebra given by structure
/// constants on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    field: Field,
    labels: Vec<String>,
    // products[a * n + b] = e_a e_b
    products: Vec<Sparse>,
    unit: Vec<Elem>,
    objects: Vec<(String, Vec<Elem>)>,
}

/// Serialized form: nonzero structure constants as `[a, b, c, coeff]`
/// meaning `coeff` is the `e_c`-coordinate of `e_a e_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub constants: Vec<(usize, usize, usize, u32)>,
    pub unit: Vec<u32>,
}

impl StructureAlgebra {
    /// Validates associativity on basis triples and the unit.
    pub fn new(
        field: &Field,
        labels: Vec<String>,
        products: Vec<Sparse>,
        unit: Vec<Elem>,
    ) -> Result<StructureAlgebra, AlgebraError> {
        let a = StructureAlgebra::new_unchecked(field, labels, products, unit);
        a.check()?;
        Ok(a)
    }

    pub(crate) fn new_unchecked(
        field: &Field,
        labels: Vec<String>,
        products: Vec<Sparse>,
        unit: Vec<Elem>,
    ) -> StructureAlgebra {
        let n = labels.len();
        assert_eq!(products.len(), n * n, "structure constant table size");
        assert_eq!(unit.len(), n, "unit length");
        let products = products
            .into_iter()
            .map(|mut v| {
                v.retain(|(_, c)| !c.is_zero());
                v.sort_by_key(|&(i, _)| i);
                v
            })
            .collect();
        StructureAlgebra { field: field.clone(), labels, products, unit, objects: Vec::new() }
    }

    /// From dense products `e_a e_b` given as full coordinate vectors.
    pub(crate) fn from_dense(field: &Field, labels: Vec<String>, dense: Vec<Vec<Elem>>, unit: Vec<Elem>) -> StructureAlgebra {
        let products = dense.into_iter().map(|v| to_sparse(&v)).collect();
        StructureAlgebra::new_unchecked(field, labels, products, unit)
    }

    pub fn check(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for a in 0..n {
            let ea = self.basis_vec(a);
            if self.mul(&self.unit, &ea) != ea || self.mul(&ea, &self.unit) != ea {
                return Err(AlgebraError::NoUnit(self.labels[a].clone()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.basis_product(a, b);
                for c in 0..n {
                    let left = self.mul_sparse_basis(ab, c, true);
                    let bc = self.basis_product(b, c);
                    let right = self.mul_sparse_basis(bc, a, false);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(
                            self.labels[a].clone(),
                            self.labels[b].clone(),
                            self.labels[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    // (sum v_i e_i) e_c when `right`, else e_c (sum v_i e_i)
    fn mul_sparse_basis(&self, v: &Sparse, c: usize, right: bool) -> Vec<Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![Elem::ZERO; n];
        for &(i, x) in v {
            let p = if right { self.basis_product(i, c) } else { self.basis_product(c, i) };
            for &(j, y) in p {
                out[j] = f.add(out[j], f.mul(x, y));
            }
        }
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Elem] {
        &self.unit
    }

    /// Object idempotents `1_x` when built from a category.
    pub fn object_idempotents(&self) -> &[(String, Vec<Elem>)] {
        &self.objects
    }

    pub(crate) fn with_objects(mut self, objects: Vec<(String, Vec<Elem>)>) -> StructureAlgebra {
        self.objects = objects;
        self
    }

    #[inline]
    pub fn basis_product(&self, a: usize, b: usize) -> &Sparse {
        &self.products[a * self.dim() + b]
    }

    pub fn zero(&self) -> Vec<Elem> {
        vec![Elem::ZERO; self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Elem> {
        let mut v = self.zero();
        v[i] = Elem::ONE;
        v
    }

    pub fn mul(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![Elem::ZERO; n];
        let ys: Vec<(usize, Elem)> = y.iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (a, &xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for &(b, yb) in &ys {
                let s = f.mul(xa, yb);
                for &(c, v) in &self.products[a * n + b] {
                    out[c] = f.add(out[c], f.mul(s, v));
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: Elem, x: &[Elem]) -> Vec<Elem> {
        x.iter().map(|&a| self.field.mul(c, a)).collect()
    }

    pub fn pow(&self, x: &[Elem], e: u64) -> Vec<Elem> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_zero(&self, x: &[Elem]) -> bool {
        x.iter().all(|e| e.is_zero())
    }

    pub fn is_idempotent(&self, x: &[Elem]) -> bool {
        self.mul(x, x) == x
    }

    /// Matrix of `v -> x v` in the basis (column `j` is `x e_j`).
    pub fn left_matrix(&self, x: &[Elem]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            let col = self.mul(x, &self.basis_vec(j));
            for (i, &c) in col.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Matrix of `v -> v x`.
    pub fn right_matrix(&self, x: &[Elem]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            let col = self.mul(&self.basis_vec(j), x);
            for (i, &c) in col.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Evaluates a polynomial (coefficients low to high) at `x`.
    pub fn eval_poly(&self, coeffs: &[Elem], x: &[Elem]) -> Vec<Elem> {
        let mut acc = self.zero();
        for &c in coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.scale(c, &self.unit));
        }
        acc
    }

    /// `span{ s t : s in S, t in T }` for subspaces given by bases.
    pub fn product_space(&self, s: &[Vec<Elem>], t: &[Vec<Elem>]) -> Subspace {
        let mut out = Subspace::zero(&self.field, self.dim());
        for a in s {
            for b in t {
                let ab = self.mul(a, b);
                if !self.is_zero(&ab) {
                    out.insert(ab);
                }
            }
        }
        out
    }

    /// `span{ x s y : s in S }`.
    pub fn sandwich(&self, x: &[Elem], s: &[Vec<Elem>], y: &[Elem]) -> Subspace {
        Subspace::span(&self.field, self.dim(), s.iter().map(|v| self.mul(&self.mul(x, v), y)))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| (0..n).all(|b| self.basis_product(a, b) == self.basis_product(b, a)))
    }

    /// True iff every structure constant and unit coordinate lies in the
    /// prime subfield.
    pub fn constants_in_prime_field(&self) -> bool {
        let f = &self.field;
        self.products.iter().flatten().all(|&(_, c)| f.in_prime_subfield(c))
            && self.unit.iter().all(|&c| f.in_prime_subfield(c))
    }

    /// The same algebra over `F_{p^k}`; structure constants must lie in the
    /// prime field.
    pub fn extend_scalars(&self, k: u32) -> Result<StructureAlgebra, AlgebraError> {
        if !self.constants_in_prime_field() {
            return Err(AlgebraError::ConstantsNotPrime);
        }
        let field = Field::new(self.field.p(), k)?;
        let objects = self
            .objects
            .iter()
            .map(|(l, v)| {
                if v.iter().all(|&c| self.field.in_prime_subfield(c)) {
                    Ok((l.clone(), v.clone()))
                } else {
                    Err(AlgebraError::ConstantsNotPrime)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StructureAlgebra {
            field,
            labels: self.labels.clone(),
            products: self.products.clone(),
            unit: self.unit.clone(),
            objects,
        })
    }

    /// Subalgebra-with-own-unit given by a basis of a subspace closed under
    /// multiplication, e.g. a corner `eAe` with unit `e`.
    pub fn restrict(&self, basis: &Subspace, unit: &[Elem], labels: Option<Vec<String>>) -> StructureAlgebra {
        let d = basis.dim();
        let rows = basis.basis();
        let mut dense = Vec::with_capacity(d * d);
        for a in rows {
            for b in rows {
                dense.push(basis.coords(&self.mul(a, b)).expect("subspace is closed under products"));
            }
        }
        let unit = basis.coords(unit).expect("unit lies in the subspace");
        let labels = labels.unwrap_or_else(|| (0..d).map(|i| format!("b{i}")).collect());
        StructureAlgebra::from_dense(&self.field, labels, dense, unit)
    }

    /// Quotient by a two-sided ideal, on the non-pivot coordinates of the
    /// ideal's echelon basis. Returns the quotient and the kept coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> (StructureAlgebra, Vec<usize>) {
        let keep = ideal.complement_coords();
        let project = |v: Vec<Elem>| -> Vec<Elem> {
            let r = ideal.reduce(&v);
            keep.iter().map(|&i| r[i]).collect()
        };
        let mut dense = Vec::with_capacity(keep.len() * keep.len());
        for &a in &keep {
            for &b in &keep {
                dense.push(project(self.mul(&self.basis_vec(a), &self.basis_vec(b))));
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let unit = project(self.unit.clone());
        let q = StructureAlgebra::from_dense(&self.field, labels, dense, unit);
        let objects = self.objects.iter().map(|(l, v)| (l.clone(), project(v.clone()))).collect();
        (q.with_objects(objects), keep)
    }

    /// Algebra spanned by a family of square matrices closed under products
    /// and containing the identity.
    pub fn from_matrix_basis(field: &Field, mats: &[Matrix]) -> Result<StructureAlgebra, AlgebraError> {
        let flat = |m: &Matrix| m.data().to_vec();
        let len = mats.first().map(|m| m.rows() * m.cols()).unwrap_or(0);
        let space = Subspace::span(field, len, mats.iter().map(flat));
        if space.dim() != mats.len() {
            return Err(AlgebraError::Malformed("matrices are linearly dependent".into()));
        }
        // coordinates with respect to the given matrices, not the echelon basis
        let basis_m = Matrix::from_rows(field, &mats.iter().map(flat).collect::<Vec<_>>()).transpose();
        let coords = |m: &Matrix| -> Result<Vec<Elem>, AlgebraError> {
            basis_m
                .solve(m.data())?
                .ok_or_else(|| AlgebraError::Malformed("matrices are not closed under products".into()))
        };
        let d = mats.len();
        let mut dense = Vec::with_capacity(d * d);
        for a in mats {
            for b in mats {
                dense.push(coords(&a.mul(b))?);
            }
        }
        let n = mats.first().map(|m| m.rows()).unwrap_or(0);
        let unit = coords(&Matrix::identity(field, n))?;
        let labels = (0..d).map(|i| format!("m{i}")).collect();
        Ok(StructureAlgebra::from_dense(field, labels, dense, unit))
    }

    pub fn to_json(&self) -> AlgebraJson {
        let n = self.dim();
        let mut constants = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for &(c, v) in self.basis_product(a, b) {
                    constants.push((a, b, c, v.0));
                }
            }
        }
        AlgebraJson {
            dim: n,
            field: self.field.spec(),
            basis: self.labels.clone(),
            constants,
            unit: self.unit.iter().map(|e| e.0).collect(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<StructureAlgebra, AlgebraError> {
        let field = Field::from_spec(&j.field)?;
        let n = j.dim;
        if j.basis.len() != n || j.unit.len() != n {
            return Err(AlgebraError::Malformed("basis or unit length".into()));
        }
        let mut products = vec![Vec::new(); n * n];
        for &(a, b, c, v) in &j.constants {
            if a >= n || b >= n || c >= n || v >= field.order() {
                return Err(AlgebraError::Malformed("structure constant out of range".into()));
            }
            products[a * n + b].push((c, Elem(v)));
        }
        if j.unit.iter().any(|&v| v >= field.order()) {
            return Err(AlgebraError::Malformed("unit coefficient out of range".into()));
        }
        StructureAlgebra::new(&field, j.basis.clone(), products, j.unit.iter().map(|&v| Elem(v)).collect())
    }
}

pub(crate) fn to_sparse(v: &[Elem]) -> Sparse {
    v.iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// Category algebra `kC` on the basis of morphisms; `f g = f o g` when
/// composable and zero otherwise.
pub fn category_algebra(c: &FiniteCategory, field: &Field) -> StructureAlgebra {
    let n = c.morphism_count();
    let mut products = vec![Vec::new(); n * n];
    for (g, f) in c.composable_pairs() {
        products[g * n + f] = vec![(c.compose(g, f), Elem::ONE)];
    }
    let mut unit = vec![Elem::ZERO; n];
    let mut objects = Vec::new();
    for x in 0..c.object_count() {
        unit[c.identity(x)] = Elem::ONE;
        let mut e = vec![Elem::ZERO; n];
        e[c.identity(x)] = Elem::ONE;
        objects.push((c.object_id(x).to_string(), e));
    }
    let labels = c.morphisms().iter().map(|m| m.id.clone()).collect();
    StructureAlgebra::new_unchecked(field, labels, products, unit).with_objects(objects)
}

pub fn group_algebra(g: &Group, field: &Field) -> StructureAlgebra {
    category_algebra(&FiniteCategory::from_group("*", g), field)
}

/// Incidence algebra: basis `e_{xy}` for `x <= y`, `e_{yz} e_{xy} = e_{xz}`.
pub fn incidence_algebra(p: &ObjectPoset, field: &Field) -> StructureAlgebra {
    let names: Vec<&str> = p.elements().iter().map(|s| s.as_str()).collect();
    let c = FiniteCategory::from_poset(&names, |x, y| p.leq(x, y)).expect("poset category");
    category_algebra(&c, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_of_z2() {
        let f = Field::prime(2).unwrap();
        let a = group_algebra(&Group::cyclic(2, "g", "1"), &f);
        a.check().unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        let g = a.basis_vec(a.labels().iter().position(|l| l == "g").unwrap());
        assert_eq!(a.mul(&g, &g), a.unit());
    }

    #[test]
    fn incidence_of_antichain_is_product() {
        let f = Field::prime(3).unwrap();
        let p = ObjectPoset::new(vec!["a".into(), "b".into()], vec![true, false, false, true]).unwrap();
        let a = incidence_algebra(&p, &f);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.object_idempotents().len(), 2);
    }

    #[test]
    fn json_roundtrip_and_rejects_non_associative() {
        let f = Field::prime(3).unwrap();
        let a = group_algebra(&Group::cyclic(3, "h", "1"), &f);
        assert_eq!(StructureAlgebra::from_json(&a.to_json()).unwrap().to_json(), a.to_json());
        let mut j = a.to_json();
        j.constants.push((1, 1, 1, 1));
        assert!(StructureAlgebra::from_json(&j).is_err());
    }
}
