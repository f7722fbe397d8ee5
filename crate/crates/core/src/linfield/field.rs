//! Finite fields `F_{p^k}` with table-driven multiplication.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_i` are the coefficients of the residue polynomial in `t`
//! modulo the defining polynomial. The prime subfield is therefore
//! exactly the encodings `0..p`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::FieldError;

/// Largest field order we build tables for.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus over F_p, ascending coefficients, length k + 1.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Handle to a finite field. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.k == other.0.k
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.k > 1 {
            write!(f, " (modulus {:?})", self.0.modulus)?;
        }
        Ok(())
    }
}

/// Serialized form of a field: characteristic, degree and modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn cache() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

// --- small polynomial helpers over F_p used only during construction ---

fn fp_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m monic
    let mut r: Vec<u32> = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let t = (lead as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut v: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
    fp_trim(&mut v);
    v
}

fn digits(mut e: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(k as usize);
    for _ in 0..k {
        d.push(e % p);
        e /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Trial factorization: no monic factor of degree `1..=deg/2`.
fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low as u32, p, d as u32);
            g.push(1);
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible polynomial of degree `k`
/// over F_p, ordering candidates by the integer encoding of their lower
/// coefficients.
pub fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for low in 0..count {
        let mut f = digits(low as u32, p, k);
        f.push(1);
        if fp_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// `F_{p^k}` with the deterministic modulus.
    pub fn new(p: u32, k: u32) -> Result<Field, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(q) = q else {
            return Err(FieldError::TooLarge { p, k });
        };
        if let Some(f) = cache().lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let modulus = least_irreducible(p, k);
        let field = Field(Arc::new(Self::build_tables(p, k, q as u32, modulus)));
        cache().lock().unwrap().insert((p, k), field.clone());
        Ok(field)
    }

    pub fn prime(p: u32) -> Result<Field, FieldError> {
        Field::new(p, 1)
    }

    /// Rebuild a field from its serialized description, checking the modulus.
    pub fn from_spec(spec: &FieldSpec) -> Result<Field, FieldError> {
        let f = Field::new(spec.p, spec.k)?;
        if f.0.modulus != spec.modulus {
            return Err(FieldError::ModulusMismatch);
        }
        Ok(f)
    }

    fn build_tables(p: u32, k: u32, q: u32, modulus: Vec<u32>) -> FieldData {
        let n = (q - 1) as usize;
        for g in 1..q {
            let gd = {
                let mut d = digits(g, p, k);
                fp_trim(&mut d);
                d
            };
            let mut exp = Vec::with_capacity(n);
            let mut cur = vec![1u32];
            let mut ok = true;
            for i in 0..n {
                let enc = {
                    let mut d = cur.clone();
                    d.resize(k as usize, 0);
                    undigits(&d, p)
                };
                if i > 0 && enc == 1 {
                    ok = false;
                    break;
                }
                exp.push(enc);
                cur = fp_rem(&fp_mul(&cur, &gd, p), &modulus, p);
            }
            if !ok {
                continue;
            }
            let mut log = vec![0u32; q as usize];
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            return FieldData { p, k, q, modulus, exp, log };
        }
        // q = 2 falls through only if n == 1 and g = 1 works, handled above.
        unreachable!("multiplicative group of a finite field is cyclic")
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.0.k
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.0.p, k: self.0.k, modulus: self.0.modulus.clone() }
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> Elem {
        Elem(if self.0.q == 2 { 1 } else { self.0.exp[1] })
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.0.q).map(Elem)
    }

    pub fn prime_subfield(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.p).map(Elem)
    }

    #[inline]
    pub fn in_prime_subfield(&self, a: Elem) -> bool {
        a.0 < self.0.p
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Coefficients over F_p in ascending degree.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a.0, self.0.p, self.0.k)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Elem, FieldError> {
        if c.len() > self.0.k as usize || c.iter().any(|&x| x >= self.0.p) {
            return Err(FieldError::BadCoefficients);
        }
        Ok(Elem(undigits(c, self.0.p)))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let d = &*self.0;
        if d.k == 1 {
            let s = a.0 + b.0;
            Elem(if s >= d.p { s - d.p } else { s })
        } else if d.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
            for _ in 0..d.k {
                let s = (x % d.p + y % d.p) % d.p;
                out += s * place;
                place *= d.p;
                x /= d.p;
                y /= d.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let d = &*self.0;
        if d.p == 2 {
            a
        } else if d.k == 1 {
            Elem(if a.0 == 0 { 0 } else { d.p - a.0 })
        } else {
            let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
            for _ in 0..d.k {
                out += ((d.p - x % d.p) % d.p) * place;
                place *= d.p;
                x /= d.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        if d.k == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % d.p as u64) as u32);
        }
        let n = d.q - 1;
        let s = d.log[a.0 as usize] + d.log[b.0 as usize];
        Elem(d.exp[(if s >= n { s - n } else { s }) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let d = &*self.0;
        let n = d.q - 1;
        let l = d.log[a.0 as usize];
        Ok(Elem(d.exp[((n - l) % n) as usize]))
    }

    /// Inverse of a value known to be nonzero.
    #[inline]
    pub fn inv_nz(&self, a: Elem) -> Elem {
        self.inv(a).expect("inverse of zero")
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u128) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        let n = (d.q - 1) as u128;
        let l = (d.log[a.0 as usize] as u128 * (e % n)) % n;
        Elem(d.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: Elem) -> u64 {
        assert!(!a.is_zero());
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        n / gcd(n, l)
    }

    /// Inverse Frobenius `a ↦ a^{1/p}`.
    pub fn pth_root(&self, a: Elem) -> Elem {
        self.pow(a, (self.0.q / self.0.p) as u128)
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_one_plus_one() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.add(f.one(), f.one()), f.zero());
    }

    #[test]
    fn f4_defining_relation() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let t = f.from_coeffs(&[0, 1]).unwrap();
        let t_plus_1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(t, t), t_plus_1);
    }

    #[test]
    fn f3_inverse_of_two() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.inv(Elem(2)).unwrap(), Elem(2));
        assert_eq!(f.inv(Elem(0)), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(Field::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
    }

    #[test]
    fn moduli_are_least_irreducible() {
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(5, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1), (2, 3)] {
            let f = Field::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                    assert_eq!(f.pth_root(f.pow(a, p as u128)), a);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }
}
