//! Exact arithmetic in GF(p^m) for p^m <= 2^16.
//!
//! Elements are encoded as integers in `[0, p^m)` whose base-p digits are the
//! coefficients of a polynomial in `z` (digit `i` is the coefficient of
//! `z^i`), reduced modulo a fixed monic irreducible polynomial. The modulus is
//! the irreducible polynomial of degree `m` whose lower coefficients, read as
//! such an encoding, form the smallest integer. Multiplication goes through
//! exp/log tables built from the smallest-encoded primitive element.

use std::fmt;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Odd-characteristic fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds 2^16")]
    TooLarge { p: u32, m: u32 },
    #[error("encoding {rep} is not an element of {field}")]
    OutOfRange { rep: u64, field: String },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// An element of some GF(p^m), stored by its integer encoding.
///
/// The element carries no reference to its field; a [`FieldSpec`] hands out
/// elements through [`FieldSpec::elem`] and every arithmetic routine lives on
/// the field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn rep(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field GF(p^m) with its modulus, primitive element and lookup tables.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: FieldElement,
    exp: Vec<u16>,
    log: Vec<u32>,
    neg: Vec<u16>,
    add_table: Option<Vec<u16>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus_string())
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds GF(p^m) with the deterministic modulus and generator.
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = (p as u64).checked_pow(m).filter(|&o| o <= MAX_ORDER);
        let order = order.ok_or(FieldError::TooLarge { p, m })? as u32;

        let modulus = lowest_irreducible(p, m);
        let slow = SlowField { p, m, modulus: &modulus };

        let generator = (1..order)
            .find(|&g| slow.is_primitive(g, order))
            .expect("the multiplicative group of a finite field is cyclic");

        let group = (order - 1) as usize;
        let mut exp = vec![0u16; 2 * group];
        let mut log = vec![0u32; order as usize];
        let mut acc = 1u32;
        for i in 0..group {
            exp[i] = acc as u16;
            exp[i + group] = acc as u16;
            log[acc as usize] = i as u32;
            acc = slow.mul(acc, generator);
            assert!(acc != 1 || i + 1 == group, "generator order is smaller than the group order");
        }
        assert_eq!(acc, 1, "generator order must equal p^m - 1");

        let neg = (0..order).map(|a| slow.neg(a) as u16).collect();
        let add_table = (p != 2 && order <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u16; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    t[(a * order + b) as usize] = slow.add(a, b) as u16;
                }
            }
            t
        });

        Ok(Self { p, m, order, modulus, generator: FieldElement(generator as u16), exp, log, neg, add_table })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements, p^m.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Modulus coefficients, lowest degree first; the last entry is 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Field name in the `gf(p^m)` notation.
    pub fn name(&self) -> String {
        format!("gf({}^{})", self.p, self.m)
    }

    pub fn modulus_string(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        parts.join("+")
    }

    pub fn elem(&self, rep: u64) -> Result<FieldElement, FieldError> {
        if rep < self.order as u64 {
            Ok(FieldElement(rep as u16))
        } else {
            Err(FieldError::OutOfRange { rep, field: self.name() })
        }
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(|r| FieldElement(r as u16))
    }

    /// Nonzero elements in encoding order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.order).map(|r| FieldElement(r as u16))
    }

    /// Image of an integer under the canonical map Z -> GF(p).
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u16)
    }

    /// Base-p digits of the encoding, i.e. polynomial coefficients in `z`.
    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        let mut r = a.rep();
        (0..self.m)
            .map(|_| {
                let d = r % self.p;
                r /= self.p;
                d
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if let Some(t) = &self.add_table {
            return FieldElement(t[a.0 as usize * self.order as usize + b.0 as usize]);
        }
        let slow = SlowField { p: self.p, m: self.m, modulus: &self.modulus };
        FieldElement(slow.add(a.rep(), b.rep()) as u16)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let l = self.log[a.0 as usize] + self.log[b.0 as usize];
        FieldElement(self.exp[l as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let group = self.order - 1;
        let l = (group - self.log[a.0 as usize]) % group;
        Ok(FieldElement(self.exp[l as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let group = (self.order - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % group)) % group;
        FieldElement(self.exp[l as usize])
    }

    /// `acc += c * src`, element-wise.
    #[inline]
    pub fn add_scaled(&self, acc: &mut [FieldElement], src: &[FieldElement], c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let lc = self.log[c.0 as usize];
        for (a, &s) in acc.iter_mut().zip(src) {
            if s.0 != 0 {
                let prod = FieldElement(self.exp[(lc + self.log[s.0 as usize]) as usize]);
                *a = self.add(*a, prod);
            }
        }
    }

    /// `acc -= c * src`, element-wise.
    #[inline]
    pub fn sub_scaled(&self, acc: &mut [FieldElement], src: &[FieldElement], c: FieldElement) {
        self.add_scaled(acc, src, self.neg(c));
    }

    pub fn scale(&self, v: &mut [FieldElement], c: FieldElement) {
        for a in v {
            *a = self.mul(*a, c);
        }
    }

    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial arithmetic on encodings, used to build the tables.
struct SlowField<'a> {
    p: u32,
    m: u32,
    modulus: &'a [u32],
}

impl SlowField<'_> {
    fn to_digits(&self, mut r: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = r % self.p;
                r /= self.p;
                d
            })
            .collect()
    }

    fn pack_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.to_digits(a), self.to_digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack_digits(&sum)
    }

    fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self.to_digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack_digits(&d)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = poly_mul(&self.to_digits(a), &self.to_digits(b), self.p);
        let rem = poly_rem(&prod, self.modulus, self.p);
        let mut d = rem;
        d.resize(self.m as usize, 0);
        self.pack_digits(&d)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_primitive(&self, g: u32, order: u32) -> bool {
        let group = (order - 1) as u64;
        if group == 1 {
            return g == 1;
        }
        prime_factors(group).into_iter().all(|r| self.pow(g, group / r) != 1)
    }
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

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic irreducible polynomial of degree `m` over GF(p) whose lower
/// coefficients encode the smallest integer.
fn lowest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let lower = (p as u64).pow(m);
    (0..lower)
        .map(|r| {
            let mut poly: Vec<u32> = (0..m)
                .scan(r, |rest, _| {
                    let d = (*rest % p as u64) as u32;
                    *rest /= p as u64;
                    Some(d)
                })
                .collect();
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for r in 0..(p as u64).pow(d) {
            let mut div: Vec<u32> = (0..d)
                .scan(r, |rest, _| {
                    let c = (*rest % p as u64) as u32;
                    *rest /= p as u64;
                    Some(c)
                })
                .collect();
            div.push(1);
            if poly_rem(poly, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}
