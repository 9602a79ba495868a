//! Exact scalar fields: GF(p^m) and F_q(x).
//!
//! Generic matrix and Lie algebra code is written against the [`Field`]
//! trait. [`FieldElement`] is the dynamically tagged scalar used at API
//! boundaries, where mixing elements of different fields must be a checked
//! error rather than a silent bug.

mod finite;
mod ratfunc;

use std::fmt;
use std::hash::Hash;

use thiserror::Error;

pub use finite::{FiniteField, MAX_FIELD_SIZE, MODULUS_RULE};
pub use ratfunc::{Poly, RatFunc, RatFuncField, DEFAULT_DEGREE_BOUND};

pub(crate) use finite::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{m}) exceeds the enumeration budget of 2^20 elements")]
    Oversize { p: u32, m: u32 },
    #[error("field mismatch: {left} vs {right}")]
    Mismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function degree {degree} exceeds bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("{0} is not a finite field")]
    NotFinite(String),
    #[error("{0} is not a rational function field")]
    NotRational(String),
    #[error("GF({field}) has no subfield of size {size}")]
    NoSubfield { size: u32, field: u32 },
}

/// Exact field arithmetic over a shared descriptor.
///
/// Operations are infallible here; rational function fields panic when the
/// degree bound is exceeded (use the `try_*` methods on [`RatFuncField`] to
/// observe that as an error).
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u32;
    fn render(&self, a: &Self::Elem) -> String;
    fn to_json(&self, a: &Self::Elem) -> serde_json::Value;

    /// Wraps a raw element into a tagged [`FieldElement`].
    fn wrap(&self, a: Self::Elem) -> FieldElement;
    /// Extracts a raw element, checking that it belongs to this field.
    fn unwrap(&self, a: &FieldElement) -> Result<Self::Elem, FieldError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a^e`; negative exponents go through the inverse.
    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let mut base = if e < 0 {
            self.inv(a).expect("zero raised to a negative power")
        } else {
            a.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

impl Field for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_int(&self, n: i64) -> u32 {
        FiniteField::from_int(self, n)
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::add(self, *a, *b)
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        FiniteField::neg(self, *a)
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::mul(self, *a, *b)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        FiniteField::inv(self, *a)
    }
    fn characteristic(&self) -> u32 {
        FiniteField::characteristic(self)
    }
    fn render(&self, a: &u32) -> String {
        FiniteField::render(self, *a)
    }
    fn to_json(&self, a: &u32) -> serde_json::Value {
        serde_json::Value::from(*a)
    }
    fn wrap(&self, a: u32) -> FieldElement {
        FieldElement::Finite {
            field: self.clone(),
            value: a,
        }
    }
    fn unwrap(&self, a: &FieldElement) -> Result<u32, FieldError> {
        match a {
            FieldElement::Finite { field, value } if field == self => Ok(*value),
            other => Err(FieldError::Mismatch {
                left: self.to_string(),
                right: other.field_name(),
            }),
        }
    }
    fn pow(&self, a: &u32, e: i64) -> u32 {
        FiniteField::pow(self, *a, e)
    }
}

impl Field for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFuncField::zero(self)
    }
    fn one(&self) -> RatFunc {
        RatFuncField::one(self)
    }
    fn from_int(&self, n: i64) -> RatFunc {
        self.constant(self.base().from_int(n))
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.add_or_panic(a, b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFuncField::neg(self, a)
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.mul_or_panic(a, b)
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        self.inv_or_panic(a)
    }
    fn characteristic(&self) -> u32 {
        self.base().characteristic()
    }
    fn render(&self, a: &RatFunc) -> String {
        RatFuncField::render(self, a)
    }
    fn to_json(&self, a: &RatFunc) -> serde_json::Value {
        serde_json::Value::from(RatFuncField::render(self, a))
    }
    fn wrap(&self, a: RatFunc) -> FieldElement {
        FieldElement::RatFunc {
            field: self.clone(),
            value: a,
        }
    }
    fn unwrap(&self, a: &FieldElement) -> Result<RatFunc, FieldError> {
        match a {
            FieldElement::RatFunc { field, value } if field == self => Ok(value.clone()),
            other => Err(FieldError::Mismatch {
                left: self.to_string(),
                right: other.field_name(),
            }),
        }
    }
}

/// A scalar tagged with the field it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElement {
    Finite { field: FiniteField, value: u32 },
    RatFunc { field: RatFuncField, value: RatFunc },
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Finite { field, value } => write!(f, "{}", field.render(*value)),
            FieldElement::RatFunc { field, value } => write!(f, "{}", field.render(value)),
        }
    }
}

macro_rules! binary_op {
    ($name:ident, $fin:expr, $rat:expr) => {
        pub fn $name(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
            match (self, other) {
                (
                    FieldElement::Finite { field, value: a },
                    FieldElement::Finite { field: g, value: b },
                ) if field == g => {
                    let op: fn(&FiniteField, u32, u32) -> Result<u32, FieldError> = $fin;
                    Ok(field.wrap(op(field, *a, *b)?))
                }
                (
                    FieldElement::RatFunc { field, value: a },
                    FieldElement::RatFunc { field: g, value: b },
                ) if field == g => {
                    let op: fn(&RatFuncField, &RatFunc, &RatFunc) -> Result<RatFunc, FieldError> =
                        $rat;
                    Ok(field.wrap(op(field, a, b)?))
                }
                _ => Err(self.mismatch(other)),
            }
        }
    };
}

impl FieldElement {
    pub fn field_name(&self) -> String {
        match self {
            FieldElement::Finite { field, .. } => field.to_string(),
            FieldElement::RatFunc { field, .. } => field.to_string(),
        }
    }

    fn mismatch(&self, other: &FieldElement) -> FieldError {
        FieldError::Mismatch {
            left: self.field_name(),
            right: other.field_name(),
        }
    }

    pub fn same_field(&self, other: &FieldElement) -> bool {
        match (self, other) {
            (FieldElement::Finite { field, .. }, FieldElement::Finite { field: g, .. }) => {
                field == g
            }
            (FieldElement::RatFunc { field, .. }, FieldElement::RatFunc { field: g, .. }) => {
                field == g
            }
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Finite { value, .. } => *value == 0,
            FieldElement::RatFunc { value, .. } => value.is_zero(),
        }
    }

    binary_op!(add, |f, a, b| Ok(f.add(a, b)), |k, a, b| k.try_add(a, b));
    binary_op!(sub, |f, a, b| Ok(f.sub(a, b)), |k, a, b| k.try_sub(a, b));
    binary_op!(mul, |f, a, b| Ok(f.mul(a, b)), |k, a, b| k.try_mul(a, b));
    binary_op!(
        div,
        |f, a, b| {
            let inv = f.inv(b).ok_or(FieldError::DivisionByZero)?;
            Ok(f.mul(a, inv))
        },
        |k, a, b| k.try_div(a, b)
    );

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Finite { field, value } => field.wrap(field.neg(*value)),
            FieldElement::RatFunc { field, value } => field.wrap(RatFuncField::neg(field, value)),
        }
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        match self {
            FieldElement::Finite { field, value } => field
                .inv(*value)
                .map(|v| field.wrap(v))
                .ok_or(FieldError::DivisionByZero),
            FieldElement::RatFunc { field, value } => Ok(field.wrap(field.try_inv(value)?)),
        }
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement, FieldError> {
        match self {
            FieldElement::Finite { field, value } => {
                if *value == 0 && e < 0 {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(field.wrap(field.pow(*value, e)))
            }
            FieldElement::RatFunc { field, value } => Ok(field.wrap(field.try_pow(value, e)?)),
        }
    }

    /// Field-checked equality.
    pub fn equals(&self, other: &FieldElement) -> Result<bool, FieldError> {
        if !self.same_field(other) {
            return Err(self.mismatch(other));
        }
        Ok(self == other)
    }

    /// Formal `d/dx` of an element of F_q(x).
    pub fn derivative(&self) -> Result<FieldElement, FieldError> {
        match self {
            FieldElement::RatFunc { field, value } => Ok(field.wrap(field.derivative(value)?)),
            other => Err(FieldError::NotRational(other.field_name())),
        }
    }
}

/// Builds GF(p^m).
pub fn field_make(p: u32, m: u32) -> Result<FiniteField, FieldError> {
    FiniteField::new(p, m)
}

/// Every element of a finite field in canonical order (`0`, `1`, ...).
pub fn field_enumerate(field: &FieldHandle) -> Result<Vec<FieldElement>, FieldError> {
    match field {
        FieldHandle::Finite(f) => Ok(f.elements().into_iter().map(|v| f.wrap(v)).collect()),
        FieldHandle::RatFunc(k) => Err(FieldError::NotFinite(k.to_string())),
    }
}

/// Formal derivative of an element of F_q(x).
pub fn ratfunc_derivative(f: &FieldElement) -> Result<FieldElement, FieldError> {
    f.derivative()
}

/// Either kind of field descriptor.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldHandle {
    Finite(FiniteField),
    RatFunc(RatFuncField),
}

impl fmt::Display for FieldHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldHandle::Finite(g) => write!(f, "{g}"),
            FieldHandle::RatFunc(k) => write!(f, "{k}"),
        }
    }
}
