//! Univariate polynomials over `F_q` and their factorization.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Elem, Field};
use super::FieldError;

/// Polynomial with ascending coefficients; never has trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c.0)?,
                1 if c.0 == 1 => write!(f, "x")?,
                1 => write!(f, "{}x", c.0)?,
                _ if c.0 == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{}x^{i}", c.0)?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![Elem::ZERO, Elem::ONE])
    }

    /// `x - a`
    pub fn linear(field: &Field, a: Elem) -> Poly {
        Poly::new(field, vec![field.neg(a), Elem::ONE])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv_nz(self.lead());
        self.scale(inv)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), FieldError> {
        let f = &self.field;
        if d.is_zero() {
            return Err(FieldError::ZeroPolynomial);
        }
        let dd = d.coeffs.len() - 1;
        let inv = f.inv_nz(d.lead());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut q = vec![Elem::ZERO; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c.is_zero() {
                continue;
            }
            q[i - dd] = c;
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = f.sub(r[i - dd + j], f.mul(c, b));
            }
        }
        r.truncate(dd);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).expect("division by zero polynomial").1
    }

    pub fn quo(&self, d: &Poly) -> Poly {
        self.div_rem(d).expect("division by zero polynomial").0
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).unwrap();
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv_nz(r0.lead());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Poly {
        self.mul(other).rem(m)
    }

    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// For `self = g(x^p)` returns `g^{1/p}` coefficientwise; requires derivative zero.
    fn pth_root_poly(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        Poly::new(f, coeffs)
    }

    /// Square-free decomposition: pairs `(g_i, i)` with `self = lead * prod g_i^i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        self.monic().sqf_rec(1, &mut out);
        out.sort_by_key(|(_, m)| *m);
        Ok(out)
    }

    fn sqf_rec(&self, mult: usize, out: &mut Vec<(Poly, usize)>) {
        if self.degree().unwrap_or(0) == 0 {
            return;
        }
        let p = self.field.p() as usize;
        let d = self.derivative();
        if d.is_zero() {
            self.pth_root_poly().sqf_rec(mult * p, out);
            return;
        }
        let mut c = self.gcd(&d);
        let mut w = self.quo(&c);
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let y = w.gcd(&c);
            let fac = w.quo(&y);
            if fac.degree().unwrap_or(0) > 0 {
                push_factor(out, fac.monic(), i * mult);
            }
            w = y;
            c = c.quo(&w);
            i += 1;
        }
        if c.degree().unwrap_or(0) > 0 {
            c.pth_root_poly().sqf_rec(mult * p, out);
        }
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    fn distinct_degree(&self) -> Vec<(Poly, usize)> {
        let f = &self.field;
        let q = f.order() as u128;
        let mut out = Vec::new();
        let mut rest = self.clone();
        let x = Poly::x(f);
        let mut h = x.clone();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            h = h.pow_mod(q, &rest);
            let g = rest.gcd(&h.sub(&x));
            if g.degree().unwrap_or(0) > 0 {
                rest = rest.quo(&g);
                h = h.rem(&rest);
                out.push((g, d));
            }
            d += 1;
        }
        if let Some(deg) = rest.degree() {
            if deg > 0 {
                out.push((rest.monic(), deg));
            }
        }
        out
    }

    /// Equal-degree splitting: all monic irreducible factors of degree `d`
    /// of a square-free product of such factors.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let f = &self.field;
        let n = self.degree().unwrap_or(0);
        if n == 0 {
            return Vec::new();
        }
        if n == d {
            return vec![self.monic()];
        }
        if d == 1 && f.order() <= 256 {
            // exhaustive root search
            return f
                .elements()
                .filter(|&a| self.eval(a).is_zero())
                .map(|a| Poly::linear(f, a))
                .collect();
        }
        let q = f.order() as u128;
        let p = f.p();
        for _ in 0..10_000 {
            let a = Poly::new(f, (0..n).map(|_| Elem(rng.gen_range(0..f.order()))).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if p == 2 {
                // trace map a + a^2 + ... + a^{2^{kd-1}}
                let steps = f.k() as usize * d;
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..steps {
                    t = t.mul_mod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (q.pow(d as u32) - 1) / 2;
                a.pow_mod(e, self).sub(&Poly::one(f))
            };
            let g = self.gcd(&b);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let mut out = g.equal_degree(d, rng);
                out.extend(self.quo(&g).equal_degree(d, rng));
                return out;
            }
        }
        unreachable!("equal-degree splitting failed to find a splitting polynomial")
    }

    /// Monic irreducible factors with multiplicity, sorted by degree then
    /// coefficients. The product reproduces `self` up to its leading unit.
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>, FieldError> {
        self.factor_seeded(0)
    }

    pub fn factor_seeded(&self, seed: u64) -> Result<Vec<(Poly, usize)>, FieldError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (sqf, mult) in self.squarefree_decomposition()? {
            for (part, d) in sqf.distinct_degree() {
                for fac in part.equal_degree(d, &mut rng) {
                    push_factor(&mut out, fac, mult);
                }
            }
        }
        out.sort_by(|a, b| {
            (a.0.degree(), &a.0.coeffs, a.1).cmp(&(b.0.degree(), &b.0.coeffs, b.1))
        });
        Ok(out)
    }

    pub fn is_irreducible(&self) -> bool {
        match self.factor() {
            Ok(fs) => fs.len() == 1 && fs[0].1 == 1 && self.degree().unwrap_or(0) >= 1,
            Err(_) => false,
        }
    }
}

fn push_factor(out: &mut Vec<(Poly, usize)>, fac: Poly, mult: usize) {
    if let Some(e) = out.iter_mut().find(|(g, _)| *g == fac) {
        e.1 += mult;
    } else {
        out.push((fac, mult));
    }
}

/// Product of factors with multiplicities.
pub fn expand(field: &Field, factors: &[(Poly, usize)]) -> Poly {
    let mut acc = Poly::one(field);
    for (g, m) in factors {
        for _ in 0..*m {
            acc = acc.mul(g);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: &Field, c: &[u32]) -> Poly {
        Poly::new(field, c.iter().map(|&x| Elem(x)).collect())
    }

    #[test]
    fn x2_minus_1_over_f2_is_square() {
        let f = Field::prime(2).unwrap();
        let fs = p(&f, &[1, 0, 1]).factor().unwrap();
        assert_eq!(fs, vec![(p(&f, &[1, 1]), 2)]);
    }

    #[test]
    fn x2_plus_1_irreducible_over_f3() {
        let f = Field::prime(3).unwrap();
        let g = p(&f, &[1, 0, 1]);
        assert!(f.elements().all(|a| !g.eval(a).is_zero()));
        assert!(g.is_irreducible());
    }

    #[test]
    fn x3_minus_1_splits_over_f4() {
        let f = Field::new(2, 2).unwrap();
        let g = p(&f, &[1, 0, 0, 1]);
        let fs = g.factor().unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(h, m)| h.degree() == Some(1) && *m == 1));
        assert_eq!(expand(&f, &fs), g);
        // the two non-trivial roots satisfy e^2 + e + 1 = 0
        for (h, _) in &fs {
            let root = f.neg(h.coeff(0));
            if root != Elem::ONE {
                let e2 = f.mul(root, root);
                assert_eq!(f.add(f.add(e2, root), f.one()), f.zero());
            }
        }
    }

    #[test]
    fn inseparable_input() {
        let f = Field::new(3, 1).unwrap();
        // (x^3 - x)^3 * (x^2+1)
        let base = p(&f, &[0, 2, 0, 1]);
        let g = base.mul(&base).mul(&base).mul(&p(&f, &[1, 0, 1]));
        let fs = g.factor().unwrap();
        assert_eq!(expand(&f, &fs), g.monic());
        assert_eq!(fs.iter().map(|(_, m)| m).sum::<usize>(), 10);
    }

    #[test]
    fn zero_polynomial_rejected() {
        let f = Field::prime(2).unwrap();
        assert_eq!(Poly::zero(&f).factor().unwrap_err(), FieldError::ZeroPolynomial);
    }
}
