//! The rational function field F_q(x) over a finite field.
//!
//! Elements are kept as reduced fractions `num/den` with `den` monic and
//! `gcd(num, den) = 1`; zero is `0/1`. Polynomial degrees are capped, and
//! exceeding the cap is reported as [`FieldError::DegreeOverflow`].

use std::fmt;
use std::sync::Arc;

use super::{FieldError, FiniteField};

/// Default cap on numerator/denominator degree.
pub const DEFAULT_DEGREE_BOUND: usize = 64;

/// Polynomial over a finite field, coefficients low to high with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(pub Vec<u32>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: u32) -> Self {
        let mut p = Poly(vec![c]);
        p.normalize();
        p
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[n] = 1;
        Poly(v)
    }

    pub fn from_coeffs(coeffs: Vec<u32>) -> Self {
        let mut p = Poly(coeffs);
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly, f: &FiniteField) -> Poly {
        let n = self.0.len().max(other.0.len());
        let v = (0..n)
            .map(|i| {
                f.add(
                    self.0.get(i).copied().unwrap_or(0),
                    other.0.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::from_coeffs(v)
    }

    pub fn neg(&self, f: &FiniteField) -> Poly {
        Poly(self.0.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly, f: &FiniteField) -> Poly {
        self.add(&other.neg(f), f)
    }

    pub fn mul(&self, other: &Poly, f: &FiniteField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0u32; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn scale(&self, c: u32, f: &FiniteField) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly, f: &FiniteField) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = f.inv(d.lead()).unwrap();
        let mut r = self.clone();
        let mut quot = vec![0u32; self.0.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = f.mul(r.lead(), lead_inv);
            let shift = dr - dd;
            quot[shift] = c;
            for (i, &b) in d.0.iter().enumerate() {
                r.0[shift + i] = f.sub(r.0[shift + i], f.mul(c, b));
            }
            r.normalize();
        }
        (Poly::from_coeffs(quot), r)
    }

    pub fn monic(&self, f: &FiniteField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.lead()).unwrap(), f)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly, f: &FiniteField) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Formal derivative.
    pub fn derivative(&self, f: &FiniteField) -> Poly {
        let v = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
            .collect();
        Poly::from_coeffs(v)
    }

    pub fn render(&self, f: &FiniteField) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let coeff = f.render(c);
            let needs_parens = coeff.contains('+');
            terms.push(match (c, i) {
                (_, 0) => coeff,
                (1, _) => mono,
                _ if needs_parens => format!("({coeff}){mono}"),
                _ => format!("{coeff}{mono}"),
            });
        }
        terms.join("+")
    }
}

struct Inner {
    base: FiniteField,
    degree_bound: usize,
}

/// Handle to F_q(x).
#[derive(Clone)]
pub struct RatFuncField(Arc<Inner>);

impl fmt::Debug for RatFuncField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(x)", self.0.base)
    }
}

impl fmt::Display for RatFuncField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(x)", self.0.base)
    }
}

impl PartialEq for RatFuncField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.base == other.0.base
    }
}

impl Eq for RatFuncField {}

/// Reduced fraction in F_q(x).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl RatFuncField {
    pub fn new(base: FiniteField) -> Self {
        Self::with_degree_bound(base, DEFAULT_DEGREE_BOUND)
    }

    pub fn with_degree_bound(base: FiniteField, degree_bound: usize) -> Self {
        RatFuncField(Arc::new(Inner { base, degree_bound }))
    }

    pub fn base(&self) -> &FiniteField {
        &self.0.base
    }

    pub fn degree_bound(&self) -> usize {
        self.0.degree_bound
    }

    /// Reduces `num/den` to normal form.
    pub fn fraction(&self, num: Poly, den: Poly) -> Result<RatFunc, FieldError> {
        let f = &self.0.base;
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = num.gcd(&den, f);
        let (mut n, _) = num.div_rem(&g, f);
        let (mut d, _) = den.div_rem(&g, f);
        let lead_inv = f.inv(d.lead()).unwrap();
        n = n.scale(lead_inv, f);
        d = d.scale(lead_inv, f);
        let deg = n.degree().unwrap_or(0).max(d.degree().unwrap_or(0));
        if deg > self.0.degree_bound {
            return Err(FieldError::DegreeOverflow {
                degree: deg,
                bound: self.0.degree_bound,
            });
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn zero(&self) -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::constant(1),
        }
    }

    pub fn one(&self) -> RatFunc {
        self.constant(1)
    }

    /// Constant from the base field.
    pub fn constant(&self, c: u32) -> RatFunc {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::constant(1),
        }
    }

    /// The indeterminate `x`.
    pub fn x(&self) -> RatFunc {
        RatFunc {
            num: Poly::monomial(1),
            den: Poly::constant(1),
        }
    }

    pub fn poly(&self, p: Poly) -> Result<RatFunc, FieldError> {
        self.fraction(p, Poly::constant(1))
    }

    pub fn try_add(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc, FieldError> {
        let f = &self.0.base;
        if a.den == b.den {
            return self.fraction(a.num.add(&b.num, f), a.den.clone());
        }
        let num = a.num.mul(&b.den, f).add(&b.num.mul(&a.den, f), f);
        self.fraction(num, a.den.mul(&b.den, f))
    }

    pub fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: a.num.neg(&self.0.base),
            den: a.den.clone(),
        }
    }

    pub fn try_sub(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc, FieldError> {
        self.try_add(a, &self.neg(b))
    }

    pub fn try_mul(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc, FieldError> {
        if a.is_zero() || b.is_zero() {
            return Ok(self.zero());
        }
        let f = &self.0.base;
        self.fraction(a.num.mul(&b.num, f), a.den.mul(&b.den, f))
    }

    pub fn try_inv(&self, a: &RatFunc) -> Result<RatFunc, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        self.fraction(a.den.clone(), a.num.clone())
    }

    pub fn try_div(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc, FieldError> {
        self.try_mul(a, &self.try_inv(b)?)
    }

    pub fn try_pow(&self, a: &RatFunc, e: i64) -> Result<RatFunc, FieldError> {
        let mut base = if e < 0 { self.try_inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.try_mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.try_mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Formal derivative `(g/h)' = (g'h - gh')/h^2`, reduced.
    pub fn derivative(&self, a: &RatFunc) -> Result<RatFunc, FieldError> {
        let f = &self.0.base;
        let num = a
            .num
            .derivative(f)
            .mul(&a.den, f)
            .sub(&a.num.mul(&a.den.derivative(f), f), f);
        self.fraction(num, a.den.mul(&a.den, f))
    }

    /// Membership in F_q(x^p), decided as `f' = 0`.
    pub fn in_frobenius_subfield(&self, a: &RatFunc) -> Result<bool, FieldError> {
        Ok(self.derivative(a)?.is_zero())
    }

    pub fn render(&self, a: &RatFunc) -> String {
        let f = &self.0.base;
        if a.den == Poly::constant(1) {
            return a.num.render(f);
        }
        format!("({})/({})", a.num.render(f), a.den.render(f))
    }

    // Infallible wrappers for generic matrix code; the degree bound is a hard stop.
    pub(crate) fn add_or_panic(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.try_add(a, b).unwrap_or_else(|e| panic!("{e}"))
    }

    pub(crate) fn mul_or_panic(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.try_mul(a, b).unwrap_or_else(|e| panic!("{e}"))
    }

    pub(crate) fn inv_or_panic(&self, a: &RatFunc) -> Option<RatFunc> {
        match self.try_inv(a) {
            Ok(v) => Some(v),
            Err(FieldError::DivisionByZero) => None,
            Err(e) => panic!("{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2x() -> RatFuncField {
        RatFuncField::new(FiniteField::new(2, 1).unwrap())
    }

    fn p(c: &[u32]) -> Poly {
        Poly::from_coeffs(c.to_vec())
    }

    #[test]
    fn reduction_example() {
        // (x^2 + x) / x = x + 1, checked by cross-multiplication.
        let k = f2x();
        let r = k.fraction(p(&[0, 1, 1]), p(&[0, 1])).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &p(&[1]));
        let f = k.base();
        assert_eq!(
            p(&[0, 1, 1]).mul(r.denominator(), f),
            r.numerator().mul(&p(&[0, 1]), f)
        );
    }

    #[test]
    fn zero_is_canonical() {
        let k = f2x();
        let z = k.fraction(Poly::zero(), p(&[1, 1, 1])).unwrap();
        assert_eq!(z, k.zero());
        assert_eq!(z.denominator(), &p(&[1]));
    }

    #[test]
    fn denominators_are_monic() {
        let f = FiniteField::new(5, 1).unwrap();
        let k = RatFuncField::new(f);
        let r = k.fraction(p(&[1]), p(&[0, 3])).unwrap();
        assert_eq!(r.denominator().lead(), 1);
        assert_eq!(r.numerator(), &p(&[2]));
    }

    #[test]
    fn derivative_examples() {
        let k = f2x();
        let x = k.x();
        assert!(k.derivative(&k.try_mul(&x, &x).unwrap()).unwrap().is_zero());
        assert_eq!(k.derivative(&x).unwrap(), k.one());
        // x^3 / (x^2 + 1): quotient rule by hand gives x^2 (x^2+1) / (x^2+1)^2.
        let r = k.fraction(p(&[0, 0, 0, 1]), p(&[1, 0, 1])).unwrap();
        let d = k.derivative(&r).unwrap();
        let expected = k.fraction(p(&[0, 0, 1]), p(&[1, 0, 1])).unwrap();
        assert!(!d.is_zero());
        assert_eq!(d, expected);
    }

    #[test]
    fn degree_cap() {
        let k = RatFuncField::with_degree_bound(FiniteField::new(2, 1).unwrap(), 4);
        let x = k.x();
        let x4 = k.try_pow(&x, 4).unwrap();
        assert!(matches!(
            k.try_mul(&x4, &x),
            Err(FieldError::DegreeOverflow { degree: 5, bound: 4 })
        ));
    }

    #[test]
    fn division_by_zero() {
        let k = f2x();
        assert_eq!(k.try_inv(&k.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(
            k.fraction(p(&[1]), Poly::zero()),
            Err(FieldError::DivisionByZero)
        );
    }
}
