//! Prime-power finite fields GF(p^m).
//!
//! Elements are packed as integers `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` where
//! `c_i` are the coefficients of the residue polynomial modulo the defining
//! polynomial. Multiplication goes through discrete log tables, so a field
//! descriptor owns `O(q)` memory and is shared behind an `Arc`.

use std::fmt;
use std::sync::Arc;

use super::FieldError;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// The modulus is the least monic irreducible polynomial of degree `m` when
/// the lower coefficients are read as a base-`p` integer (most significant
/// coefficient first). The same `(p, m)` therefore always yields the same
/// packed representation.
pub const MODULUS_RULE: &str = "lexicographically-least-monic-irreducible";

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, low to high, length `m + 1`.
    modulus: Vec<u32>,
    /// `p^i` for `i in 0..m`.
    place: Vec<u32>,
    /// `exp[i] = g^i` for `i in 0..2(q-1)`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`.
    log: Vec<u32>,
    generator: u32,
}

/// Handle to GF(p^m). Cloning is cheap.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for FiniteField {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
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

// Dense polynomial helpers over GF(p), low to high, used only at construction.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn unpack(v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    let mut v = v;
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = unpack(low as u32, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds GF(p^m) with the deterministic modulus described by [`MODULUS_RULE`].
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(FieldError::Oversize { p, m });
        }
        let q = size as u32;
        let mu = m as usize;

        let mut modulus = None;
        for low in 0..q {
            let mut f = unpack(low, p, mu);
            f.push(1);
            if is_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial exists in every degree");
        let place: Vec<u32> = (0..m).map(|i| p.pow(i)).collect();

        let mut field = Inner {
            p,
            m,
            q,
            modulus,
            place,
            exp: Vec::new(),
            log: Vec::new(),
            generator: 0,
        };

        // Primitive element: g^((q-1)/r) != 1 for every prime r | q-1.
        let order = q as u64 - 1;
        let factors = prime_factors(order);
        let generator = if q == 2 {
            1
        } else {
            (1..q)
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&r| slow_pow(&field, g, order / r) != 1)
                })
                .expect("multiplicative group of a finite field is cyclic")
        };
        let n = order as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..n {
            exp[i] = cur;
            log[cur as usize] = i as u32;
            cur = slow_mul(&field, cur, generator);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        field.exp = exp;
        field.log = log;
        field.generator = generator;
        Ok(FiniteField(Arc::new(field)))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, low to high (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The primitive element used for the log tables.
    pub fn generator(&self) -> u32 {
        self.0.generator
    }

    /// Bytes needed for the canonical encoding of one element.
    pub fn byte_width(&self) -> usize {
        match self.0.q {
            0..=256 => 1,
            257..=65536 => 2,
            _ => 3,
        }
    }

    /// Every element in packed order; starts `0, 1`.
    pub fn elements(&self) -> Vec<u32> {
        (0..self.0.q).collect()
    }

    /// Elements of the unique subfield of the given size, in packed order.
    pub fn subfield_elements(&self, size: u32) -> Result<Vec<u32>, FieldError> {
        let q = self.0.q;
        let mut s = self.0.p;
        let mut ok = false;
        while s <= q {
            if s == size && (q - 1).is_multiple_of(size - 1) {
                ok = true;
                break;
            }
            s *= self.0.p;
        }
        if !ok {
            return Err(FieldError::NoSubfield { size, field: q });
        }
        Ok((0..q).filter(|&a| self.pow(a, size as i64) == a).collect())
    }

    /// First element (packed order) of exact multiplicative order `n`.
    pub fn element_of_order(&self, n: u32) -> Option<u32> {
        if n == 0 || !(self.0.q - 1).is_multiple_of(n) {
            return None;
        }
        (1..self.0.q).find(|&a| self.multiplicative_order(a) == n)
    }

    pub fn multiplicative_order(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no multiplicative order");
        let n = self.0.q - 1;
        let l = self.0.log[a as usize];
        n / gcd(n, l)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            return a ^ b;
        }
        if f.m == 1 {
            return (a + b) % f.p;
        }
        let mut out = 0;
        for &pl in &f.place {
            let d = ((a / pl) % f.p + (b / pl) % f.p) % f.p;
            out += d * pl;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            return a;
        }
        let mut out = 0;
        for &pl in &f.place {
            let d = (a / pl) % f.p;
            out += ((f.p - d) % f.p) * pl;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let f = &*self.0;
        f.exp[(f.log[a as usize] + f.log[b as usize]) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let f = &*self.0;
        let n = f.q - 1;
        Some(f.exp[((n - f.log[a as usize]) % n) as usize])
    }

    /// `a^e`; negative exponents invert. Panics on `0^e` with `e < 0`.
    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if a == 0 {
            assert!(e >= 0, "zero raised to a negative power");
            return if e == 0 { 1 } else { 0 };
        }
        let f = &*self.0;
        let n = (f.q - 1) as i64;
        let l = f.log[a as usize] as i64;
        f.exp[(l * e.rem_euclid(n)).rem_euclid(n) as usize]
    }

    /// Image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }

    /// Polynomial rendering in the residue class `a` of the indeterminate.
    pub fn render(&self, v: u32) -> String {
        if v == 0 {
            return "0".into();
        }
        let coeffs = unpack(v, self.0.p, self.0.m as usize);
        let mut terms = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        terms.join("+")
    }

    pub(crate) fn encode(&self, v: u32, out: &mut Vec<u8>) {
        let w = self.byte_width();
        out.extend_from_slice(&v.to_le_bytes()[..w]);
    }

    #[inline]
    pub(crate) fn decode(&self, bytes: &[u8]) -> u32 {
        match bytes.len() {
            1 => bytes[0] as u32,
            2 => u16::from_le_bytes([bytes[0], bytes[1]]) as u32,
            _ => u32::from_le_bytes([bytes[0], bytes[1], bytes[2], 0]),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn slow_mul(f: &Inner, a: u32, b: u32) -> u32 {
    let m = f.m as usize;
    let pa = unpack(a, f.p, m);
    let pb = unpack(b, f.p, m);
    let mut prod = vec![0u32; 2 * m];
    for (i, &x) in pa.iter().enumerate() {
        for (j, &y) in pb.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % f.p as u64) as u32;
        }
    }
    let r = poly_rem(&prod, &f.modulus, f.p);
    r.iter().enumerate().map(|(i, &c)| c * f.place[i]).sum()
}

fn slow_pow(f: &Inner, a: u32, mut e: u64) -> u32 {
    let mut result = 1;
    let mut base = a;
    while e > 0 {
        if e & 1 == 1 {
            result = slow_mul(f, result, base);
        }
        base = slow_mul(f, base, base);
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_are_least_irreducible() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        // x^8 + x^4 + x^3 + x + 1
        assert_eq!(
            FiniteField::new(2, 8).unwrap().modulus(),
            &[1, 1, 0, 1, 1, 0, 0, 0, 1]
        );
        // x^2 + 1 over GF(3)
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn table_mul_matches_schoolbook() {
        for (p, m) in [(2, 3), (2, 8), (3, 3), (5, 2), (7, 1)] {
            let f = FiniteField::new(p, m).unwrap();
            for a in 0..f.size() {
                for b in 0..f.size() {
                    assert_eq!(f.mul(a, b), slow_mul(&f.0, a, b), "GF({p}^{m}) {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FiniteField::new(2, 0).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(
            FiniteField::new(2, 21),
            Err(FieldError::Oversize { .. })
        ));
        assert!(FiniteField::new(2, 20).is_ok());
    }

    #[test]
    fn subfields() {
        let f16 = FiniteField::new(2, 4).unwrap();
        let s = f16.subfield_elements(4).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(&s[..2], &[0, 1]);
        assert!(f16.subfield_elements(8).is_err());
        let f64 = FiniteField::new(2, 6).unwrap();
        assert_eq!(f64.subfield_elements(8).unwrap().len(), 8);
        assert_eq!(f64.subfield_elements(4).unwrap().len(), 4);
    }

    #[test]
    fn encoding_widths() {
        let f = FiniteField::new(2, 10).unwrap();
        let mut buf = Vec::new();
        f.encode(1000, &mut buf);
        assert_eq!(buf.len(), 2);
        assert_eq!(f.decode(&buf), 1000);
        let f = FiniteField::new(2, 20).unwrap();
        buf.clear();
        f.encode(1 << 19, &mut buf);
        assert_eq!(f.decode(&buf), 1 << 19);
    }
}
