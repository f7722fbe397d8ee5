//! Jacobson radical.
//!
//! Over `F_{p^k}` the algebra is viewed as an `F_p`-algebra of dimension
//! `N = nk`. With `I_{-1} = A` and, for `i = 0..=floor(log_p N)`,
//!
//! ```text
//! g_i(a) = (Tr(L^{p^i}) mod p^{i+1}) / p^i,   L an integer lift of left mult. by a
//! I_i    = { a in I_{i-1} : g_i(ab) = 0 for all b in A }
//! ```
//!
//! the last `I_i` is the radical. Each `g_i` is `F_p`-linear on `I_{i-1}`,
//! so it is evaluated once per basis vector of `I_{i-1}`.

use super::{AlgebraError, StructureAlgebra};
use crate::linfield::{Elem, Field, Subspace};

pub const DEFAULT_DIM_BOUND: usize = 128;

struct PrimeView<'a> {
    a: &'a StructureAlgebra,
    fp: Field,
    k: usize,
    // F_q encodings of t^i, i < k
    powers: Vec<Elem>,
}

impl<'a> PrimeView<'a> {
    fn new(a: &'a StructureAlgebra) -> PrimeView<'a> {
        let f = a.field();
        let k = f.k() as usize;
        let powers = (0..k)
            .map(|i| {
                let mut c = vec![0u32; k];
                c[i] = 1;
                f.from_coeffs(&c).expect("basis element")
            })
            .collect();
        PrimeView { a, fp: Field::prime(f.p()).expect("prime"), k, powers }
    }

    fn n(&self) -> usize {
        self.a.dim() * self.k
    }

    fn to_prime(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.a.field();
        let mut out = Vec::with_capacity(self.n());
        for &x in v {
            out.extend(f.coeffs(x).into_iter().map(Elem));
        }
        out
    }

    fn from_prime(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.a.field();
        v.chunks(self.k)
            .map(|c| f.from_coeffs(&c.iter().map(|e| e.0).collect::<Vec<_>>()).expect("coefficients"))
            .collect()
    }

    fn basis(&self, s: usize) -> Vec<Elem> {
        let mut v = self.a.zero();
        v[s / self.k] = self.powers[s % self.k];
        v
    }

    /// Integer left-multiplication matrix (row-major) of `x` over `F_p`.
    fn left_lift(&self, x: &[Elem]) -> Vec<u64> {
        let n = self.n();
        let mut m = vec![0u64; n * n];
        for s in 0..n {
            let col = self.to_prime(&self.a.mul(x, &self.basis(s)));
            for (r, e) in col.into_iter().enumerate() {
                m[r * n + s] = e.0 as u64;
            }
        }
        m
    }
}

fn mat_mul_mod(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for l in 0..n {
            let x = a[i * n + l];
            if x == 0 {
                continue;
            }
            let row = &b[l * n..(l + 1) * n];
            let o = &mut out[i * n..(i + 1) * n];
            for j in 0..n {
                o[j] += x * row[j];
            }
        }
        for j in 0..n {
            out[i * n + j] %= m;
        }
    }
    out
}

fn trace_of_power_mod(l: &[u64], n: usize, e: u64, m: u64) -> u64 {
    let mut result: Option<Vec<u64>> = None;
    let mut base = l.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => mat_mul_mod(&r, &base, n, m),
            });
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul_mod(&base, &base, n, m);
        }
    }
    let r = result.expect("positive exponent");
    (0..n).map(|i| r[i * n + i]).sum::<u64>() % m
}

/// Radical of `A` with the default dimension bound.
pub fn radical(a: &StructureAlgebra) -> Result<Subspace, AlgebraError> {
    radical_bounded(a, DEFAULT_DIM_BOUND)
}

pub fn radical_bounded(a: &StructureAlgebra, bound: usize) -> Result<Subspace, AlgebraError> {
    if a.dim() > bound {
        return Err(AlgebraError::DimensionBoundExceeded { dim: a.dim(), bound });
    }
    let view = PrimeView::new(a);
    let n = view.n();
    let p = a.field().p() as u64;
    let fp = view.fp.clone();
    let mut ideal = Subspace::full(&fp, n);
    if n == 0 {
        return Ok(Subspace::zero(a.field(), 0));
    }
    let mut pi = 1u64; // p^i
    while pi <= n as u64 {
        let modulus = pi * p;
        let basis: Vec<Vec<Elem>> = ideal.basis().to_vec();
        let g: Vec<u64> = basis
            .iter()
            .map(|v| {
                let x = view.from_prime(v);
                trace_of_power_mod(&view.left_lift(&x), n, pi, modulus) / pi
            })
            .collect();
        // phi(u) for u in the ideal, from its coordinates
        let phi = |u: &[Elem]| -> u64 {
            let c = ideal.coords(u).expect("products stay in the ideal");
            c.iter().zip(&g).map(|(x, y)| x.0 as u64 * y).sum::<u64>() % p
        };
        // rows: b_t, columns: ideal basis a_s, entry phi(a_s b_t)
        let mut rows = Vec::with_capacity(n);
        let prods: Vec<Vec<Vec<Elem>>> = basis
            .iter()
            .map(|v| {
                let x = view.from_prime(v);
                (0..n).map(|t| view.to_prime(&a.mul(&x, &view.basis(t)))).collect()
            })
            .collect();
        for t in 0..n {
            rows.push((0..basis.len()).map(|s| Elem(phi(&prods[s][t]) as u32)).collect::<Vec<_>>());
        }
        let m = crate::linfield::Matrix::from_rows(&fp, &rows);
        let kernel = if basis.is_empty() { Vec::new() } else { m.nullspace_basis() };
        let next = Subspace::span(
            &fp,
            n,
            kernel.iter().map(|c| {
                let mut v = vec![Elem::ZERO; n];
                for (s, &cs) in c.iter().enumerate() {
                    for (x, &b) in v.iter_mut().zip(&basis[s]) {
                        *x = fp.add(*x, fp.mul(cs, b));
                    }
                }
                v
            }),
        );
        ideal = next;
        pi *= p;
    }
    let rad = Subspace::span(a.field(), a.dim(), ideal.basis().iter().map(|v| view.from_prime(v)));
    debug_assert_eq!(rad.dim() * view.k, ideal.dim());
    Ok(rad)
}

/// Radical by exhaustive search: `a` lies in the radical iff the left ideal
/// `Aa` is nilpotent. Visits all `q^dim` elements, so `budget` caps that
/// count.
pub fn radical_exhaustive(a: &StructureAlgebra, budget: u64) -> Result<Subspace, AlgebraError> {
    let f = a.field();
    let n = a.dim();
    let q = f.order() as u64;
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(q).filter(|&t| t <= budget));
    if total.is_none() {
        return Err(AlgebraError::BudgetExceeded(budget));
    }
    let mut rad = Subspace::zero(f, n);
    let mut v = vec![Elem::ZERO; n];
    loop {
        if !rad.contains(&v) && left_ideal_is_nilpotent(a, &v) {
            rad.insert(v.clone());
        }
        // next vector in lexicographic order
        let mut i = 0;
        while i < n {
            v[i] = Elem(v[i].0 + 1);
            if v[i].0 < q as u32 {
                break;
            }
            v[i] = Elem::ZERO;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(rad)
}

pub fn left_ideal_is_nilpotent(a: &StructureAlgebra, x: &[Elem]) -> bool {
    let n = a.dim();
    let ideal = Subspace::span(a.field(), n, (0..n).map(|j| a.mul(&a.basis_vec(j), x)));
    subspace_is_nilpotent(a, &ideal)
}

/// True iff some power of the subspace is zero.
pub fn subspace_is_nilpotent(a: &StructureAlgebra, s: &Subspace) -> bool {
    let mut power = s.clone();
    loop {
        if power.is_zero() {
            return true;
        }
        let next = a.product_space(power.basis(), s.basis());
        // for a left ideal the powers form a descending chain
        if next.dim() >= power.dim() {
            return false;
        }
        power = next;
    }
}

/// `rad, rad^2, ..., 0`: the radical series, ending with the zero space.
pub fn radical_series(a: &StructureAlgebra, rad: &Subspace) -> Vec<Subspace> {
    let mut out = vec![rad.clone()];
    loop {
        let last = out.last().unwrap();
        if last.is_zero() {
            return out;
        }
        let next = a.product_space(last.basis(), rad.basis());
        if next.dim() == last.dim() {
            // not nilpotent: should not happen for a radical
            return out;
        }
        out.push(next);
    }
}

/// Smallest `L` with `rad^L = 0`.
pub fn loewy_length(a: &StructureAlgebra, rad: &Subspace) -> usize {
    radical_series(a, rad).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_algebra;
    use crate::fincat::Group;

    #[test]
    fn dual_numbers_over_f2() {
        let f = Field::prime(2).unwrap();
        let a = group_algebra(&Group::cyclic(2, "g", "1"), &f);
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r, radical_exhaustive(&a, 1 << 10).unwrap());
    }

    #[test]
    fn maschke() {
        let f = Field::prime(3).unwrap();
        let a = group_algebra(&Group::cyclic(2, "g", "1"), &f);
        assert!(radical(&a).unwrap().is_zero());
    }

    #[test]
    fn cyclic_p_group_over_extension() {
        let f = Field::new(2, 2).unwrap();
        let a = group_algebra(&Group::cyclic(4, "g", "1"), &f);
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(loewy_length(&a, &r), 4);
    }
}
