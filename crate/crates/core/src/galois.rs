//! Exact arithmetic in GF(p^m) for small q.
//!
//! Elements are stored by their canonical integer encoding: the polynomial
//! basis coordinates `c_0..c_{m-1}` packed as `Σ c_i p^i`. Every file format
//! and test vector in this crate is expressed in that encoding, so it must be
//! deterministic across runs and platforms.
//!
//! Multiplication and inversion go through discrete log/exp tables built once
//! per field from the smallest primitive element. Fields are capped at
//! `q ≤ 2^20`, which keeps table construction and exhaustive root scans cheap.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Desk-scale cap on the field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field size {q} exceeds the cap 2^20")]
    FieldTooLarge { q: u64 },
    #[error("modulus must be monic of degree {expected} with coefficients below p")]
    BadModulus { expected: u32 },
    #[error("supplied modulus is reducible over GF({p})")]
    Reducible { p: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{value} is not a canonical element of GF({q})")]
    OutOfRange { value: u64, q: u64 },
    #[error("the zero polynomial has no root set")]
    ZeroPolynomial,
}

/// An element of GF(q), stored as its canonical integer in `[0, q)`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    /// The multiplicative identity encodes as 1 in every field (c_0 = 1).
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldRepr {
    p: u32,
    m: u32,
    q: u32,
    /// Monic irreducible modulus over GF(p), lowest degree first, length m+1.
    modulus: Vec<u32>,
    /// exp[i] = g^i for i in 0..q-1, g the smallest primitive element.
    exp: Vec<u32>,
    /// log[a] for a in 1..q (index a); log[0] is unused.
    log: Vec<u32>,
    primitive: u32,
}

/// A finite field GF(p^m). Cheap to clone; all tables are shared.
#[derive(Clone)]
pub struct Field {
    repr: Arc<FieldRepr>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.repr.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.repr.p == other.repr.p
            && self.repr.m == other.repr.m
            && self.repr.modulus == other.repr.modulus
    }
}
impl Eq for Field {}

fn is_prime(n: u64) -> bool {
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

// ---- polynomial arithmetic over GF(p), used only for modulus handling ----

/// Degree of a coefficient vector over GF(p), ignoring trailing zeros.
fn base_deg(f: &[u32]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

/// Remainder of f mod g over GF(p); g must be nonzero.
fn base_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let dg = base_deg(g).expect("divisor must be nonzero");
    let lead_inv = mod_inverse(g[dg], p);
    let mut r: Vec<u32> = f.to_vec();
    while let Some(dr) = base_deg(&r) {
        if dr < dg {
            break;
        }
        let factor = (u64::from(r[dr]) * u64::from(lead_inv) % u64::from(p)) as u32;
        for i in 0..=dg {
            let sub = (u64::from(factor) * u64::from(g[i])) % u64::from(p);
            let idx = dr - dg + i;
            r[idx] = ((u64::from(r[idx]) + u64::from(p) - sub) % u64::from(p)) as u32;
        }
    }
    r
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is prime and a != 0, so a^(p-2) works; p ≤ 2^20 keeps this exact in u64.
    let mut result: u64 = 1;
    let mut base = u64::from(a % p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        e >>= 1;
    }
    result as u32
}

/// Trial-division irreducibility test for a monic polynomial over GF(p).
fn base_irreducible(f: &[u32], p: u32) -> bool {
    let deg = match base_deg(f) {
        Some(d) => d,
        None => return false,
    };
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    // Divide by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = u64::from(p).pow(d as u32);
        let mut g = vec![0u32; d + 1];
        g[d] = 1;
        for enc in 0..count {
            let mut v = enc;
            for item in g.iter_mut().take(d) {
                *item = (v % u64::from(p)) as u32;
                v /= u64::from(p);
            }
            let r = base_rem(f, &g, p);
            if base_deg(&r).is_none() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^m). With no modulus supplied, picks the irreducible monic
    /// degree-m polynomial over GF(p) whose coefficient sequence, read as a
    /// base-p integer with the constant term least significant, is smallest.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::BadDegree);
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q.saturating_mul(p);
            if q > MAX_FIELD_SIZE {
                return Err(FieldError::FieldTooLarge { q });
            }
        }
        let p32 = p as u32;
        let q32 = q as u32;

        let modulus: Vec<u32> = match modulus {
            Some(coeffs) => {
                if coeffs.len() != m as usize + 1
                    || coeffs[m as usize] != 1
                    || coeffs.iter().any(|&c| c >= p)
                {
                    return Err(FieldError::BadModulus { expected: m });
                }
                let coeffs: Vec<u32> = coeffs.iter().map(|&c| c as u32).collect();
                if !base_irreducible(&coeffs, p32) {
                    return Err(FieldError::Reducible { p });
                }
                coeffs
            }
            None => Self::smallest_irreducible(p32, m),
        };

        let mut repr = FieldRepr {
            p: p32,
            m,
            q: q32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            primitive: 0,
        };
        repr.build_tables();
        Ok(Field { repr: Arc::new(repr) })
    }

    fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
        let mut f = vec![0u32; m as usize + 1];
        f[m as usize] = 1;
        if m == 1 {
            return f; // T itself
        }
        let count = u64::from(p).pow(m);
        for enc in 0..count {
            let mut v = enc;
            for item in f.iter_mut().take(m as usize) {
                *item = (v % u64::from(p)) as u32;
                v /= u64::from(p);
            }
            if base_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }

    pub fn p(&self) -> u32 {
        self.repr.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.repr.m
    }

    pub fn q(&self) -> u32 {
        self.repr.q
    }

    /// The modulus coefficients over GF(p), lowest degree first (length m+1).
    pub fn modulus(&self) -> &[u32] {
        &self.repr.modulus
    }

    /// Checked constructor from a canonical integer.
    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value < u64::from(self.repr.q) {
            Ok(FieldElement(value as u32))
        } else {
            Err(FieldError::OutOfRange { value, q: u64::from(self.repr.q) })
        }
    }

    /// The image of an integer under the natural map Z -> GF(q) (lands in the
    /// prime subfield).
    pub fn from_int(&self, n: u64) -> FieldElement {
        FieldElement((n % u64::from(self.repr.p)) as u32)
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.repr.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = &self.repr;
        if r.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if r.m == 1 {
            return FieldElement((a.0 + b.0) % r.p);
        }
        let mut out = 0u32;
        let mut scale = 1u32;
        let (mut av, mut bv) = (a.0, b.0);
        for _ in 0..r.m {
            let digit = (av % r.p + bv % r.p) % r.p;
            out += digit * scale;
            av /= r.p;
            bv /= r.p;
            scale *= r.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let r = &self.repr;
        if r.p == 2 {
            return a;
        }
        if r.m == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { r.p - a.0 });
        }
        let mut out = 0u32;
        let mut scale = 1u32;
        let mut av = a.0;
        for _ in 0..r.m {
            let d = av % r.p;
            out += (if d == 0 { 0 } else { r.p - d }) * scale;
            av /= r.p;
            scale *= r.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let r = &self.repr;
        let ord = u64::from(r.q) - 1;
        let idx = (u64::from(r.log[a.0 as usize]) + u64::from(r.log[b.0 as usize])) % ord;
        FieldElement(r.exp[idx as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let r = &self.repr;
        let ord = r.q - 1;
        let idx = (ord - r.log[a.0 as usize]) % ord;
        Ok(FieldElement(r.exp[idx as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let mut base = a;
        let mut acc = FieldElement::ONE;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The smallest canonical integer whose multiplicative order is q−1.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement(self.repr.primitive)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u64, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let ord_group = u64::from(self.repr.q) - 1;
        if ord_group == 0 {
            return Ok(1);
        }
        let mut order = ord_group;
        for f in prime_factors(ord_group) {
            while order % f == 0 && self.pow(a, order / f) == FieldElement::ONE {
                order /= f;
            }
        }
        Ok(order)
    }
}

impl FieldRepr {
    /// Slow polynomial-basis product, used only while bootstrapping tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let m = self.m as usize;
        let p = u64::from(self.p);
        let mut av = vec![0u64; m];
        let mut bv = vec![0u64; m];
        let (mut x, mut y) = (u64::from(a), u64::from(b));
        for i in 0..m {
            av[i] = x % p;
            bv[i] = y % p;
            x /= p;
            y /= p;
        }
        let mut prod = vec![0u64; 2 * m - 1];
        for i in 0..m {
            if av[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p;
            }
        }
        // Reduce modulo the monic modulus.
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..m {
                let sub = c * u64::from(self.modulus[j]) % p;
                prod[i - m + j] = (prod[i - m + j] + p - sub) % p;
            }
        }
        let mut out = 0u64;
        for i in (0..m).rev() {
            out = out * p + prod[i];
        }
        out as u32
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = u64::from(self.q);
        let ord = q - 1;
        let factors = prime_factors(ord);
        let primitive = (1..self.q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&f| self.pow_slow(g, ord / f) != 1)
            })
            .expect("the multiplicative group of a finite field is cyclic");
        self.primitive = primitive;

        let mut exp = vec![0u32; ord.max(1) as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_slow(acc, primitive);
        }
        debug_assert_eq!(acc, 1, "primitive element order must be q-1");
        self.exp = exp;
        self.log = log;
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
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

/// A univariate polynomial over GF(q), coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and degree `None`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> UniPoly {
        while coeffs.last() == Some(&FieldElement::ZERO) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_values(field: &Field, values: &[u64]) -> Result<UniPoly, FieldError> {
        let coeffs = values
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` standing for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &Field, x: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    /// All roots in GF(q) by exhaustive scan, sorted by canonical integer,
    /// without multiplicity.
    pub fn roots(&self, field: &Field) -> Result<Vec<FieldElement>, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroPolynomial);
        }
        Ok(field
            .elements()
            .filter(|&x| self.eval(field, x).is_zero())
            .collect())
    }

    pub fn add(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| field.add(self.coeff(i), other.coeff(i)))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn mul(&self, field: &Field, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, field: &Field, c: FieldElement) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// The polynomial shifted by a constant: `self + c`.
    pub fn add_constant(&self, field: &Field, c: FieldElement) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(c);
        } else {
            coeffs[0] = field.add(coeffs[0], c);
        }
        UniPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> Field {
        Field::new(p, m, None).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        let f = gf(13, 1);
        assert_eq!(f.q(), 13);
        assert_eq!(f.modulus(), &[0, 1]); // T
    }

    #[test]
    fn default_modulus_gf64_is_smallest_irreducible() {
        let f = gf(2, 6);
        // T^6 + T + 1 encodes as 1 + 2 + 64; every smaller candidate factors.
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 0, 0, 1]);
        // Independent check with a naive divisor scan, not the library test.
        let candidates: Vec<Vec<u32>> = (0..3u32)
            .map(|low| {
                // encodings 64+0, 64+1, 64+2 (T^6, T^6+1, T^6+T)
                let mut c = vec![0u32; 7];
                c[6] = 1;
                match low {
                    0 => {}
                    1 => c[0] = 1,
                    _ => c[1] = 1,
                }
                c
            })
            .collect();
        for cand in candidates {
            assert!(has_small_factor(&cand), "{cand:?} should be reducible");
        }
        assert!(!has_small_factor(&[1, 1, 0, 0, 0, 0, 1]));
    }

    /// Naive GF(2) divisor scan written independently of the library code.
    fn has_small_factor(f: &[u32]) -> bool {
        let deg = f.iter().rposition(|&c| c != 0).unwrap();
        for d in 1..=deg / 2 {
            for bits in 0..(1u32 << d) {
                let mut g = vec![0u32; d + 1];
                g[d] = 1;
                for (i, item) in g.iter_mut().enumerate().take(d) {
                    *item = (bits >> i) & 1;
                }
                // long division over GF(2)
                let mut r: Vec<u32> = f.to_vec();
                loop {
                    let dr = match r.iter().rposition(|&c| c != 0) {
                        Some(x) => x,
                        None => break,
                    };
                    if dr < d {
                        break;
                    }
                    for i in 0..=d {
                        r[dr - d + i] ^= g[i];
                    }
                }
                if r.iter().all(|&c| c == 0) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn not_prime_rejected() {
        assert_eq!(Field::new(4, 2, None).unwrap_err(), FieldError::NotPrime(4));
    }

    #[test]
    fn too_large_rejected() {
        assert!(matches!(
            Field::new(2, 21, None).unwrap_err(),
            FieldError::FieldTooLarge { .. }
        ));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // T^2 + 1 = (T+1)^2 over GF(2)
        assert_eq!(
            Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            FieldError::Reducible { p: 2 }
        );
    }

    #[test]
    fn arithmetic_gf13() {
        let f = gf(13, 1);
        let e = |v: u64| f.element(v).unwrap();
        assert_eq!(f.add(e(7), e(9)), e(3));
        assert_eq!(f.pow(e(2), 12), e(1));
        for k in 1..12 {
            assert_ne!(f.pow(e(2), k), e(1));
        }
    }

    #[test]
    fn every_nonzero_element_has_inverse_gf64() {
        let f = gf(2, 6);
        for x in f.elements().skip(1) {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
        }
        assert_eq!(f.inv(FieldElement::ZERO), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn field_axioms_exhaustive_gf8_gf9() {
        for (p, m) in [(2u64, 3u32), (3, 2)] {
            let f = gf(p, m);
            let all: Vec<FieldElement> = f.elements().collect();
            for &a in &all {
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &all {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_every_element() {
        for (p, m) in [(2u64, 6u32), (13, 1), (2, 4), (3, 3)] {
            let f = gf(p, m);
            let q = u64::from(f.q());
            for x in f.elements() {
                assert_eq!(f.pow(x, q), x);
            }
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(gf(13, 1).primitive_element().value(), 2);
        assert_eq!(gf(2, 1).primitive_element().value(), 1);
        // With modulus T^6+T+1 the class of T (encoding 2) is primitive.
        let f = gf(2, 6);
        assert_eq!(f.primitive_element().value(), 2);
        // Independent order check: powers of 2 hit 1 first at exponent 63.
        let g = f.element(2).unwrap();
        let mut acc = FieldElement::ONE;
        for k in 1..=63u32 {
            acc = f.mul(acc, g);
            if k < 63 {
                assert_ne!(acc, FieldElement::ONE, "order divides {k}");
            }
        }
        assert_eq!(acc, FieldElement::ONE);
    }

    #[test]
    fn primitive_element_order_is_group_order() {
        for (p, m) in [(2u64, 6u32), (13, 1), (2, 4), (5, 2), (7, 1)] {
            let f = gf(p, m);
            let g = f.primitive_element();
            assert_eq!(f.order(g).unwrap(), u64::from(f.q()) - 1);
        }
    }

    #[test]
    fn poly_eval_and_roots() {
        let f = gf(13, 1);
        // T^3 - 1 over GF(13): roots are the cube roots of unity 1, 3, 9.
        let poly = UniPoly::from_values(&f, &[12, 0, 0, 1]).unwrap();
        let roots: Vec<u32> = poly.roots(&f).unwrap().iter().map(|r| r.value()).collect();
        assert_eq!(roots, vec![1, 3, 9]);

        let ident = UniPoly::from_values(&f, &[0, 1]).unwrap();
        assert_eq!(
            ident.roots(&f).unwrap(),
            vec![FieldElement::ZERO]
        );

        let f16 = gf(2, 4);
        let poly = UniPoly::from_values(&f16, &[0, 1, 0, 0, 1]).unwrap(); // T^4 + T
        assert_eq!(poly.roots(&f16).unwrap().len(), 4);

        assert_eq!(
            UniPoly::zero().roots(&f).unwrap_err(),
            FieldError::ZeroPolynomial
        );
    }

    #[test]
    fn roots_match_eval_zero_set() {
        let f = gf(2, 4);
        let poly = UniPoly::from_values(&f, &[3, 5, 0, 1]).unwrap();
        let roots = poly.roots(&f).unwrap();
        assert!(roots.len() <= 3);
        for x in f.elements() {
            assert_eq!(roots.contains(&x), poly.eval(&f, x).is_zero());
        }
    }

    #[test]
    fn canonical_encoding_round_trip() {
        let f = gf(3, 2);
        // value 5 = 2 + 1*3 means coordinates (2, 1); adding (1, 2) = 7 gives (0, 0).
        let a = f.element(5).unwrap();
        let b = f.element(7).unwrap();
        assert_eq!(f.add(a, b).value(), 0);
        assert_eq!(f.neg(a).value(), f.sub(FieldElement::ZERO, a).value());
    }
}
