//! Arithmetic in GF(p^m) backed by log/antilog tables.
//!
//! Elements are encoded as integers `c0 + c1 p + ... + c_{m-1} p^{m-1}` where
//! `c0 + c1 x + ... + c_{m-1} x^{m-1}` is the polynomial residue modulo the
//! field's defining polynomial. Without an explicit override the defining
//! polynomial is the monic irreducible of smallest encoding, and the
//! distinguished generator `g` is the smallest-encoded element of order `q - 1`.
//! Together these make every printed value reproducible.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on `q` so the tables stay small.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 16;

/// A field element in canonical integer encoding. Only meaningful together
/// with the [`FieldSpec`] it was produced by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
enum Adder {
    Xor,
    Prime,
    Table(Vec<u16>),
    Digits,
}

/// Shared handle to an immutable field description.
pub type Field = Arc<FieldSpec>;

pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    primitive: Elem,
    // exp has length 2(q-1) so log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    adder: Adder,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

/// Builds GF(p^m) with the canonical modulus unless one is supplied.
pub fn make_field(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
    make_field_bounded(p, m, modulus, DEFAULT_MAX_ORDER)
}

/// Convenience for prime fields.
pub fn prime_field(p: u32) -> Result<Field> {
    make_field(p, 1, None)
}

/// Builds GF(q) for a prime power `q` with the canonical modulus.
pub fn field_of_order(q: u32) -> Result<Field> {
    let (p, m) = prime_power(q).ok_or_else(|| Error::InvalidParams(format!("{q} is not a prime power")))?;
    make_field(p, m, None)
}

pub fn make_field_bounded(p: u32, m: u32, modulus: Option<&[u32]>, max_order: u64) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let order = (p as u64).checked_pow(m).filter(|&q| q <= max_order);
    let q = match order {
        Some(q) if q <= u32::MAX as u64 => q as u32,
        _ => return Err(Error::FieldTooLarge { p, m, bound: max_order }),
    };

    let modulus = if m == 1 {
        if let Some(c) = modulus {
            // A degree-1 override carries no information; accept only x + c0.
            if c.len() != 2 || c[1] != 1 || c[0] >= p {
                return Err(Error::BadModulus { p, expected: 1 });
            }
        }
        None
    } else {
        let poly = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c[m as usize] != 1 || c.iter().any(|&x| x >= p) {
                    return Err(Error::BadModulus { p, expected: m });
                }
                if !poly::is_irreducible(c, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                c.to_vec()
            }
            None => poly::smallest_irreducible(p, m),
        };
        Some(poly)
    };

    Ok(Arc::new(FieldSpec::build(p, m, q, modulus)))
}

impl FieldSpec {
    fn build(p: u32, m: u32, q: u32, modulus: Option<Vec<u32>>) -> FieldSpec {
        let mulmod = |a: u32, b: u32| -> u32 {
            match &modulus {
                None => ((a as u64 * b as u64) % p as u64) as u32,
                Some(md) => poly::mulmod_encoded(a, b, p, md),
            }
        };
        let powmod = |mut base: u32, mut e: u64| -> u32 {
            let mut acc = 1u32;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, base);
                }
                base = mulmod(base, base);
                e >>= 1;
            }
            acc
        };

        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let primitive = (1..q)
            .find(|&g| factors.iter().all(|&r| powmod(g, order / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let units = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * units];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..units {
            exp[i] = x;
            exp[i + units] = x;
            log[x as usize] = i as u32;
            x = mulmod(x, primitive);
        }

        let digits_add = |a: u32, b: u32| -> u32 {
            let (mut a, mut b, mut out, mut scale) = (a, b, 0u32, 1u32);
            for _ in 0..m {
                out += ((a % p + b % p) % p) * scale;
                a /= p;
                b /= p;
                scale *= p;
            }
            out
        };
        let digits_neg = |a: u32| -> u32 {
            let (mut a, mut out, mut scale) = (a, 0u32, 1u32);
            for _ in 0..m {
                out += ((p - a % p) % p) * scale;
                a /= p;
                scale *= p;
            }
            out
        };

        let adder = if p == 2 {
            Adder::Xor
        } else if m == 1 {
            Adder::Prime
        } else if q <= 256 {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = digits_add(a, b) as u16;
                }
            }
            Adder::Table(table)
        } else {
            Adder::Digits
        };
        let neg = (0..q).map(digits_neg).collect();

        FieldSpec { p, m, q, modulus, primitive: Elem(primitive), exp, log, neg, adder }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients `c0..cm` of the defining polynomial; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    /// The canonical generator `g` of the multiplicative group.
    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.q).map(Elem)
    }

    pub fn element(&self, value: u32) -> Result<Elem> {
        if value < self.q {
            Ok(Elem(value))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.q })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.q
    }

    /// The prime-subfield image of an integer.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(match &self.adder {
            Adder::Xor => a.0 ^ b.0,
            Adder::Prime => {
                let s = a.0 + b.0;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            Adder::Table(t) => t[(a.0 * self.q + b.0) as usize] as u32,
            Adder::Digits => {
                let (mut x, mut y, mut out, mut scale) = (a.0, b.0, 0u32, 1u32);
                for _ in 0..self.m {
                    out += ((x % self.p + y % self.p) % self.p) * scale;
                    x /= self.p;
                    y /= self.p;
                    scale *= self.p;
                }
                out
            }
        })
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
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
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero());
        let units = self.q - 1;
        Elem(self.exp[((units - self.log[a.0 as usize]) % units) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; `a^0 = 1` for every `a` including zero, negative exponents invert.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if e == 0 {
            return Ok(Elem::ONE);
        }
        if a.is_zero() {
            return if e > 0 { Ok(Elem::ZERO) } else { Err(Error::DivisionByZero) };
        }
        let units = (self.q - 1) as i64;
        let k = (self.log[a.0 as usize] as i64 * e.rem_euclid(units)).rem_euclid(units);
        Ok(Elem(self.exp[k as usize]))
    }

    /// Non-negative power, never fails.
    #[inline]
    pub fn pow_u(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let units = (self.q - 1) as u64;
        let k = (self.log[a.0 as usize] as u64 * (e % units)) % units;
        Elem(self.exp[k as usize])
    }

    /// `g^k` for the canonical generator.
    pub fn gen_pow(&self, k: i64) -> Elem {
        let units = (self.q - 1) as i64;
        Elem(self.exp[k.rem_euclid(units) as usize])
    }

    /// Discrete log base the canonical generator; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ONE, |acc, x| self.mul(acc, x))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Result<u32> {
        let l = self.log(a).ok_or(Error::DivisionByZero)?;
        let units = self.q - 1;
        Ok(units / gcd(l, units))
    }

    /// Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow_u(a, self.p as u64)
    }

    /// Base-p digits `c0..c_{m-1}` of an element.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let mut x = a.0;
        (0..self.m)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    /// Power notation relative to the canonical generator: `0` or `g^k`.
    pub fn power_form(&self, a: Elem) -> String {
        match self.log(a) {
            None => "0".to_string(),
            Some(k) => format!("g^{k}"),
        }
    }

    /// Integer and power notation side by side, e.g. `3 (g^2)`.
    pub fn describe(&self, a: Elem) -> String {
        format!("{} ({})", a.0, self.power_form(a))
    }

    /// Parses either a canonical integer (`5`) or a power of the canonical
    /// generator (`g`, `g^3`, `g^-1`).
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let t = s.trim();
        let bad = || Error::ParseElement(s.to_string());
        if let Some(rest) = t.strip_prefix('g') {
            let e = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
            };
            return Ok(self.gen_pow(e));
        }
        let v: u32 = t.parse().map_err(|_| bad())?;
        self.element(v)
    }

    pub fn parse_list(&self, s: &str) -> Result<Vec<Elem>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',').map(|x| self.parse_elem(x)).collect()
    }
}

/// All elements of multiplicative order `q - 1`, ascending by encoding.
pub fn primitive_elements(f: &FieldSpec) -> Vec<Elem> {
    let units = f.q - 1;
    let mut out: Vec<Elem> = (0..units)
        .filter(|&k| gcd(k, units) == 1)
        .map(|k| f.gen_pow(k as i64))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// An element bundled with its field, for callers that want checked mixing.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.describe(self.value))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> Result<Self> {
        Ok(FieldElement { value: field.element(value)?, field: field.clone() })
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn wrap(&self, value: Elem) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        Ok(self.wrap(self.field.pow(self.value, e)?))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.describe(self.value))
    }
}

/// Serializable summary of a field, enough to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldDescriptor {
    pub fn of(f: &FieldSpec) -> Self {
        FieldDescriptor { p: f.p, m: f.m, modulus: f.modulus.clone() }
    }

    pub fn build(&self) -> Result<Field> {
        make_field(self.p, self.m, self.modulus.as_deref())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, m)` with `p^m = q`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let f = prime_factors(q as u64);
    if f.len() != 1 {
        return None;
    }
    let p = f[0] as u32;
    let (mut x, mut m) = (q, 0);
    while x > 1 {
        x /= p;
        m += 1;
    }
    Some((p, m))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Dense polynomials over GF(p), coefficient vectors low degree first.
pub(crate) mod poly {
    fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
        v
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime and small, so Fermat is fine.
        let mut acc = 1u64;
        let (mut base, mut e) = (a as u64 % p as u64, p as u64 - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p) as u64;
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let c = r[dr] as u64 * lead_inv % p as u64;
            for i in 0..=db {
                let t = (c * b[i] as u64 % p as u64) as u32;
                r[dr - db + i] = (r[dr - db + i] + p - t) % p;
            }
            r = trim(r);
            if dr == 0 {
                break;
            }
        }
        r
    }

    /// Trial division by every monic polynomial of degree `1..=m/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let m = f.len() - 1;
        for d in 1..=m / 2 {
            let count = (p as u64).pow(d as u32);
            for low in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut x = low;
                for _ in 0..d {
                    g.push((x % p as u64) as u32);
                    x /= p as u64;
                }
                g.push(1);
                let r = rem(f, &g, p);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Monic irreducible of degree `m` with the smallest encoding.
    pub fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
        let count = (p as u64).pow(m);
        for low in 0..count {
            let mut f = Vec::with_capacity(m as usize + 1);
            let mut x = low;
            for _ in 0..m {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            if is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Product of two encoded residues modulo the monic `modulus`.
    pub fn mulmod_encoded(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
        let m = modulus.len() - 1;
        let split = |mut x: u32| -> Vec<u32> {
            (0..m)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let (da, db) = (split(a), split(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        // Reduce top-down; the modulus is monic.
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for i in 0..=m {
                let idx = top - m + i;
                let t = c * modulus[i] as u64 % p as u64;
                prod[idx] = (prod[idx] + p as u64 - t) % p as u64;
            }
        }
        let mut out = 0u32;
        for i in (0..m).rev() {
            out = out * p + prod[i] as u32;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_canonical_modulus() {
        let f = make_field(2, 2, None).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
        // w = x encodes as 2; w^2 = w + 1 = 3.
        let w = Elem(2);
        assert_eq!(f.mul(w, w), Elem(3));
        assert_eq!(f.add(f.mul(w, w), f.add(w, Elem::ONE)), Elem::ZERO);
    }

    #[test]
    fn gf8_modulus_is_smaller_of_two_cubics() {
        // The two irreducible cubics over GF(2): x^3+x+1 (11) and x^3+x^2+1 (13).
        let irreducible: Vec<u32> = (8..16)
            .filter(|&e| {
                let c: Vec<u32> = (0..4).map(|i| (e >> i) & 1).collect();
                poly::is_irreducible(&c, 2)
            })
            .collect();
        assert_eq!(irreducible, vec![11, 13]);
        let f = make_field(2, 3, None).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 0, 1][..]));
    }

    #[test]
    fn prime_field_generator() {
        let f = make_field(5, 1, None).unwrap();
        assert_eq!(f.modulus(), None);
        assert_eq!(f.primitive(), Elem(2));
        assert_eq!(primitive_elements(&f), vec![Elem(2), Elem(3)]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(make_field(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(2, 0, None).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(make_field(2, 17, None), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(make_field_bounded(3, 3, None, 20), Err(Error::FieldTooLarge { .. })));
        // x^2 + 1 = (x + 1)^2 over GF(2).
        assert_eq!(make_field(2, 2, Some(&[1, 0, 1])).unwrap_err(), Error::ReducibleModulus(2));
        assert!(matches!(make_field(2, 2, Some(&[1, 1])), Err(Error::BadModulus { .. })));
        assert!(matches!(make_field(2, 2, Some(&[1, 1, 0])), Err(Error::BadModulus { .. })));
    }

    #[test]
    fn override_modulus_changes_arithmetic() {
        let f = make_field(2, 3, Some(&[1, 0, 1, 1])).unwrap();
        // x^3 = x^2 + 1 under this modulus.
        let x = Elem(2);
        assert_eq!(f.mul(f.mul(x, x), x), Elem(5));
    }

    #[test]
    fn gf8_inverse_table_matches_pairwise_search() {
        let f = make_field(2, 3, None).unwrap();
        for a in f.nonzero_elements() {
            let found: Vec<Elem> = f.nonzero_elements().filter(|&b| f.mul(a, b) == Elem::ONE).collect();
            assert_eq!(found, vec![f.inv(a).unwrap()]);
        }
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.div(Elem::ONE, Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn gf8_has_six_primitive_elements() {
        let f = make_field(2, 3, None).unwrap();
        let by_order: Vec<Elem> = f
            .nonzero_elements()
            .filter(|&a| {
                let mut x = a;
                let mut ord = 1;
                while x != Elem::ONE {
                    x = f.mul(x, a);
                    ord += 1;
                }
                ord == 7
            })
            .collect();
        assert_eq!(by_order.len(), 6);
        assert_eq!(primitive_elements(&f), by_order);
        let f4 = make_field(2, 2, None).unwrap();
        assert_eq!(primitive_elements(&f4), vec![Elem(2), Elem(3)]);
    }

    #[test]
    fn pow_edge_cases() {
        let f = make_field(3, 2, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.pow(a, 0).unwrap(), Elem::ONE);
        }
        for a in f.nonzero_elements() {
            assert_eq!(f.mul(f.pow(a, -3).unwrap(), f.pow(a, 3).unwrap()), Elem::ONE);
            assert_eq!(f.pow(a, 8).unwrap(), Elem::ONE);
        }
        assert_eq!(f.pow(Elem::ZERO, -1), Err(Error::DivisionByZero));
    }

    #[test]
    fn element_parsing() {
        let f = make_field(2, 3, None).unwrap();
        assert_eq!(f.parse_elem("5").unwrap(), Elem(5));
        assert_eq!(f.parse_elem("g").unwrap(), f.primitive());
        assert_eq!(f.parse_elem("g^7").unwrap(), Elem::ONE);
        assert_eq!(f.parse_elem(" g^-1 ").unwrap(), f.inv(f.primitive()).unwrap());
        assert!(f.parse_elem("8").is_err());
        assert!(f.parse_elem("h^2").is_err());
        assert_eq!(f.power_form(Elem::ZERO), "0");
        assert_eq!(f.power_form(Elem::ONE), "g^0");
    }

    #[test]
    fn wrapped_elements_reject_mixed_fields() {
        let f4 = make_field(2, 2, None).unwrap();
        let f5 = prime_field(5).unwrap();
        let a = FieldElement::new(&f4, 2).unwrap();
        let b = FieldElement::new(&f5, 2).unwrap();
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
        assert_eq!(a.mul(&a).unwrap().value(), Elem(3));
        assert_eq!(FieldElement::new(&f4, 0).unwrap().inv().unwrap_err(), Error::DivisionByZero);
        let one = FieldElement::new(&f5, 1).unwrap();
        assert_eq!(one.mul(&b).unwrap(), b);
        // A separately built copy of the same field is the same field.
        let f5b = prime_field(5).unwrap();
        assert!(FieldElement::new(&f5b, 3).unwrap().add(&b).is_ok());
    }

    #[test]
    fn larger_fields_build() {
        for (p, m) in [(3, 5), (5, 3), (7, 2), (2, 10), (13, 2)] {
            let f = make_field(p, m, None).unwrap();
            assert_eq!(primitive_elements(&f).len() as u32, euler_phi(f.order() - 1));
            let a = f.gen_pow(5);
            let b = f.gen_pow(11);
            assert_eq!(f.sub(f.add(a, b), b), a);
        }
    }

    fn euler_phi(n: u32) -> u32 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u32
    }
}
