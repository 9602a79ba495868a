//! The adjoint Chevalley group acting on its Lie algebra.
//!
//! Elements are invertible matrices in the Chevalley basis. Root elements are
//! `kappa_gamma(a) = sum_n a^n X_{gamma,n}`, torus elements act on `e_gamma` by
//! `a^<gamma, lambda>` and trivially on the Cartan subalgebra.

use std::fmt;
use std::io::{Read, Write};
use std::time::Instant;

use indexmap::IndexSet;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{ChevalleyError, LieAlgebra, LieVector};
use crate::field::{Field, FieldElement, FieldError, FiniteField};
use crate::matrix::Matrix;
use crate::rootsystem::{Cocharacter, Root, RootSystem, RootSystemError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("torus parameter must be nonzero")]
    ZeroTorusParameter,
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("closure exceeded the cap of {cap} elements ({partial} found so far)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("product map is not bijective: {left} x {right} gives {product} elements")]
    NotBijective {
        left: usize,
        right: usize,
        product: usize,
    },
    #[error("left factor does not normalize the right factor")]
    NotNormalizing,
    #[error("subgroup is not contained in the ambient group")]
    NotSubset,
    #[error("tuples have different lengths: {0} vs {1}")]
    TupleLength(usize, usize),
    #[error("element dump is malformed: {0}")]
    BadDump(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GroupError {
    fn from(e: std::io::Error) -> Self {
        GroupError::Io(e.to_string())
    }
}

/// Group element as its adjoint matrix, with an optional readable word.
#[derive(Clone, Debug)]
pub struct GroupElement<F: Field> {
    field: F,
    matrix: Matrix<F::Elem>,
    word: Option<String>,
}

impl<F: Field> PartialEq for GroupElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.matrix == other.matrix
    }
}

impl<F: Field> fmt::Display for GroupElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) => write!(f, "{w}"),
            None => write!(f, "<{}x{} matrix>", self.matrix.rows(), self.matrix.cols()),
        }
    }
}

fn joined(a: &Option<String>, b: &Option<String>) -> Option<String> {
    match (a, b) {
        (Some(x), Some(y)) => Some(format!("{x}*{y}")),
        _ => None,
    }
}

impl<F: Field> GroupElement<F> {
    pub fn from_matrix(field: F, matrix: Matrix<F::Elem>) -> Self {
        GroupElement {
            field,
            matrix,
            word: None,
        }
    }

    pub fn identity(lie: &LieAlgebra<F>) -> Self {
        GroupElement {
            field: lie.field().clone(),
            matrix: Matrix::identity(lie.field(), lie.dim()),
            word: Some("1".into()),
        }
    }

    pub fn with_word(mut self, word: impl Into<String>) -> Self {
        self.word = Some(word.into());
        self
    }

    pub fn word(&self) -> Option<&str> {
        self.word.as_deref()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix<F::Elem> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `kappa_gamma(a)` for a tagged scalar.
    pub fn root_element(lie: &LieAlgebra<F>, gamma: &Root, a: &FieldElement) -> Result<Self, GroupError> {
        let a = lie.field().unwrap(a)?;
        Self::root_element_raw(lie, gamma, &a)
    }

    pub fn root_element_raw(lie: &LieAlgebra<F>, gamma: &Root, a: &F::Elem) -> Result<Self, GroupError> {
        let f = lie.field();
        let xs = lie.form().divided_powers(gamma)?;
        let mut m = Matrix::zeros(f, lie.dim(), lie.dim());
        let mut apow = f.one();
        for x in xs {
            if f.is_zero(&apow) {
                break;
            }
            for (j, col) in x.cols.iter().enumerate() {
                for &(i, v) in col {
                    let add = f.mul(&apow, &f.from_int(v));
                    let cur = m.get(i, j).clone();
                    m.set(i, j, f.add(&cur, &add));
                }
            }
            apow = f.mul(&apow, a);
        }
        Ok(GroupElement {
            field: f.clone(),
            matrix: m,
            word: Some(format!("k{}({})", gamma, f.render(a))),
        })
    }

    /// `lambda(a)`: `a^<gamma, lambda>` on `e_gamma`, identity on the Cartan part.
    pub fn torus_element(lie: &LieAlgebra<F>, lambda: &Cocharacter, a: &F::Elem) -> Result<Self, GroupError> {
        let f = lie.field();
        if f.is_zero(a) {
            return Err(GroupError::ZeroTorusParameter);
        }
        let rs = lie.form().root_system();
        let weights = rs.cochar_weights(lambda)?;
        let mut m = Matrix::identity(f, lie.dim());
        let rank = rs.rank();
        for (g, (_, w)) in weights.roots.iter().enumerate() {
            m.set(rank + g, rank + g, f.pow(a, *w));
        }
        Ok(GroupElement {
            field: f.clone(),
            matrix: m,
            word: Some(format!("{:?}({})", lambda.coeffs(), f.render(a))),
        })
    }

    /// `s_gamma = kappa_gamma(1) kappa_{-gamma}(-1) kappa_gamma(1)`.
    pub fn weyl_rep(lie: &LieAlgebra<F>, gamma: &Root) -> Result<Self, GroupError> {
        let f = lie.field();
        let one = f.one();
        let k = Self::root_element_raw(lie, gamma, &one)?;
        let kn = Self::root_element_raw(lie, &gamma.neg(), &f.neg(&one))?;
        let s = k.mul(&kn)?.mul(&k)?;
        Ok(s.with_word(format!("s{gamma}")))
    }

    fn check(&self, other: &Self) -> Result<(), GroupError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            }
            .into());
        }
        if self.dim() != other.dim() {
            return Err(GroupError::Dimension(self.dim(), other.dim()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GroupError> {
        self.check(other)?;
        Ok(GroupElement {
            field: self.field.clone(),
            matrix: self.matrix.mul(&self.field, &other.matrix),
            word: joined(&self.word, &other.word),
        })
    }

    pub fn inv(&self) -> Self {
        let matrix = self
            .matrix
            .inverse(&self.field)
            .expect("group elements are invertible");
        GroupElement {
            field: self.field.clone(),
            matrix,
            word: self.word.as_ref().map(|w| format!("({w})^-1")),
        }
    }

    /// `self * h * self^-1`.
    pub fn conj(&self, h: &Self) -> Result<Self, GroupError> {
        self.mul(h)?.mul(&self.inv())
    }

    /// `self * h * self^-1 * h^-1`.
    pub fn commutator(&self, h: &Self) -> Result<Self, GroupError> {
        self.conj(h)?.mul(&h.inv())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity(&self.field)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool, GroupError> {
        Ok(self.mul(other)?.matrix == other.mul(self)?.matrix)
    }

    pub fn ad_apply(&self, v: &LieVector<F>) -> Result<LieVector<F>, GroupError> {
        if v.field() != &self.field {
            return Err(FieldError::Mismatch {
                left: self.field.to_string(),
                right: v.field().to_string(),
            }
            .into());
        }
        if v.dim() != self.dim() {
            return Err(GroupError::Dimension(self.dim(), v.dim()));
        }
        Ok(LieVector::new(
            self.field.clone(),
            self.matrix.mul_vec(&self.field, v.coeffs()),
        ))
    }

    /// Order of the element, searched up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut acc = self.clone();
        for n in 1..=limit {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }
}

/// Weight grading of the adjoint module by a cocharacter.
#[derive(Clone, Debug, Serialize)]
pub struct ParabolicDatum {
    pub lambda: Cocharacter,
    /// Weight of each basis vector, Cartan vectors have weight 0.
    pub weights: Vec<i64>,
    /// Basis indices sorted by decreasing weight (stable).
    pub order: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ParabolicSplit<F: Field> {
    pub in_p: bool,
    /// `c_lambda(g)`, present only when `in_p`.
    pub levi_part: Option<GroupElement<F>>,
    /// `c_lambda(levi_part^-1 g)` is the identity.
    pub unipotent_ok: bool,
}

impl ParabolicDatum {
    pub fn new(rs: &RootSystem, lambda: Cocharacter) -> Result<Self, GroupError> {
        let w = rs.cochar_weights(&lambda)?;
        let mut weights = w.cartan.clone();
        weights.extend(w.roots.iter().map(|(_, x)| *x));
        let mut order: Vec<usize> = (0..weights.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(weights[i]));
        Ok(ParabolicDatum {
            lambda,
            weights,
            order,
        })
    }

    /// `lambda(a) g lambda(a)^-1` has a limit at 0 iff no entry maps a
    /// vector to one of strictly lower weight.
    pub fn in_p<E: Clone + PartialEq, F: Field<Elem = E>>(&self, f: &F, m: &Matrix<E>) -> bool {
        let w = &self.weights;
        (0..m.rows()).all(|i| (0..m.cols()).all(|j| w[i] >= w[j] || f.is_zero(m.get(i, j))))
    }

    /// Block-diagonal truncation in the weight grading.
    pub fn levi_truncate<E: Clone + PartialEq, F: Field<Elem = E>>(&self, f: &F, m: &Matrix<E>) -> Matrix<E> {
        let mut out = m.clone();
        let w = &self.weights;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if w[i] != w[j] {
                    out.set(i, j, f.zero());
                }
            }
        }
        out
    }

    pub fn c_lambda<F: Field>(&self, g: &GroupElement<F>) -> Option<GroupElement<F>> {
        self.in_p(g.field(), g.matrix()).then(|| GroupElement {
            field: g.field().clone(),
            matrix: self.levi_truncate(g.field(), g.matrix()),
            word: g.word.as_ref().map(|w| format!("c({w})")),
        })
    }

    pub fn split<F: Field>(&self, g: &GroupElement<F>) -> ParabolicSplit<F> {
        match self.c_lambda(g) {
            None => ParabolicSplit {
                in_p: false,
                levi_part: None,
                unipotent_ok: false,
            },
            Some(l) => {
                let u = l.inv().mul(g).expect("same field");
                let unipotent_ok = self.c_lambda(&u).is_some_and(|c| c.is_identity());
                ParabolicSplit {
                    in_p: true,
                    levi_part: Some(l),
                    unipotent_ok,
                }
            }
        }
    }

    /// `g` lies in the Levi subgroup: block diagonal.
    pub fn in_levi<F: Field>(&self, g: &GroupElement<F>) -> bool {
        let w = &self.weights;
        let m = g.matrix();
        (0..m.rows()).all(|i| (0..m.cols()).all(|j| w[i] == w[j] || g.field().is_zero(m.get(i, j))))
    }
}

/// Statistics of a closure or product construction.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct ClosureStats {
    pub order: usize,
    pub generators: usize,
    pub bfs_levels: usize,
    #[serde(skip)]
    pub millis: u128,
}

/// A finite group of adjoint matrices over a finite field, stored as a
/// deduplicated set of canonical byte encodings in deterministic order.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    field: FiniteField,
    dim: usize,
    elements: IndexSet<Vec<u8>>,
    generators: Vec<Matrix<u32>>,
    stats: ClosureStats,
}

type Fe = GroupElement<FiniteField>;

impl FiniteSubgroup {
    fn encode(field: &FiniteField, m: &Matrix<u32>) -> Vec<u8> {
        let mut out = Vec::with_capacity(m.data().len() * field.byte_width());
        for &v in m.data() {
            field.encode(v, &mut out);
        }
        out
    }

    fn decode_with(field: &FiniteField, dim: usize, bytes: &[u8]) -> Matrix<u32> {
        let w = field.byte_width();
        let rows = bytes
            .chunks(w * dim)
            .map(|row| row.chunks(w).map(|c| field.decode(c)).collect())
            .collect();
        Matrix::from_rows(rows)
    }

    fn wrap(&self, m: Matrix<u32>) -> Fe {
        GroupElement::from_matrix(self.field.clone(), m)
    }

    /// Breadth-first closure under right multiplication by the generators.
    pub fn closure(gens: &[Fe], cap: usize) -> Result<Self, GroupError> {
        let start = Instant::now();
        let first = gens.first().ok_or(GroupError::Dimension(0, 0))?;
        let field = first.field().clone();
        let dim = first.dim();
        for g in gens {
            first.check(g)?;
        }
        let gmats: Vec<Matrix<u32>> = gens.iter().map(|g| g.matrix().clone()).collect();
        let mut elements = IndexSet::new();
        elements.insert(Self::encode(&field, &Matrix::identity(&field, dim)));
        let mut frontier = vec![0usize];
        let mut levels = 0;
        while !frontier.is_empty() {
            levels += 1;
            let products: Vec<Vec<u8>> = frontier
                .par_iter()
                .flat_map_iter(|&i| {
                    let m = Self::decode_with(&field, dim, &elements[i]);
                    gmats
                        .iter()
                        .map(|g| Self::encode(&field, &m.mul(&field, g)))
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut next = Vec::new();
            for p in products {
                let (idx, new) = elements.insert_full(p);
                if new {
                    if elements.len() > cap {
                        return Err(GroupError::CapExceeded {
                            cap,
                            partial: elements.len(),
                        });
                    }
                    next.push(idx);
                }
            }
            frontier = next;
        }
        let order = elements.len();
        Ok(FiniteSubgroup {
            field,
            dim,
            elements,
            generators: gmats,
            stats: ClosureStats {
                order,
                generators: gens.len(),
                bfs_levels: levels,
                millis: start.elapsed().as_millis(),
            },
        })
    }

    /// Subset of elements taken as given (used for filter results).
    pub fn from_elements(field: FiniteField, dim: usize, elems: impl IntoIterator<Item = Matrix<u32>>) -> Self {
        let elements: IndexSet<Vec<u8>> = elems.into_iter().map(|m| Self::encode(&field, &m)).collect();
        let order = elements.len();
        FiniteSubgroup {
            field,
            dim,
            elements,
            generators: Vec::new(),
            stats: ClosureStats {
                order,
                ..Default::default()
            },
        }
    }

    /// The set `A * B`, which is a group because `A` normalizes `B`
    /// (checked on generators). Fails unless the product map is bijective.
    pub fn product(a: &Self, b: &Self) -> Result<Self, GroupError> {
        let start = Instant::now();
        if a.field != b.field || a.dim != b.dim {
            return Err(GroupError::Dimension(a.dim, b.dim));
        }
        let f = &a.field;
        for x in &a.generators {
            let xinv = x.inverse(f).expect("invertible");
            for y in &b.generators {
                let c = x.mul(f, y).mul(f, &xinv);
                if !b.contains_matrix(&c) {
                    return Err(GroupError::NotNormalizing);
                }
            }
        }
        let bm: Vec<Matrix<u32>> = b.matrices().collect();
        let chunks: Vec<Vec<Vec<u8>>> = (0..a.order())
            .into_par_iter()
            .map(|i| {
                let x = a.matrix(i);
                bm.iter().map(|y| Self::encode(f, &x.mul(f, y))).collect()
            })
            .collect();
        let elements: IndexSet<Vec<u8>> = chunks.into_iter().flatten().collect();
        if elements.len() != a.order() * b.order() {
            return Err(GroupError::NotBijective {
                left: a.order(),
                right: b.order(),
                product: elements.len(),
            });
        }
        let mut generators = a.generators.clone();
        generators.extend(b.generators.iter().cloned());
        let order = elements.len();
        Ok(FiniteSubgroup {
            field: f.clone(),
            dim: a.dim,
            elements,
            generators,
            stats: ClosureStats {
                order,
                generators: a.stats.generators + b.stats.generators,
                bfs_levels: 0,
                millis: start.elapsed().as_millis(),
            },
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn stats(&self) -> &ClosureStats {
        &self.stats
    }

    pub fn generators(&self) -> Vec<Fe> {
        self.generators.iter().map(|m| self.wrap(m.clone())).collect()
    }

    pub fn matrix(&self, i: usize) -> Matrix<u32> {
        Self::decode_with(&self.field, self.dim, &self.elements[i])
    }

    pub fn get(&self, i: usize) -> Fe {
        self.wrap(self.matrix(i))
    }

    pub fn matrices(&self) -> impl Iterator<Item = Matrix<u32>> + '_ {
        (0..self.order()).map(move |i| self.matrix(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order()).map(move |i| self.get(i))
    }

    pub fn contains_matrix(&self, m: &Matrix<u32>) -> bool {
        self.elements.contains(&Self::encode(&self.field, m))
    }

    pub fn contains(&self, g: &Fe) -> bool {
        g.field() == &self.field && g.dim() == self.dim && self.contains_matrix(g.matrix())
    }

    /// Equality of underlying element sets.
    pub fn same_elements(&self, other: &Self) -> bool {
        self.order() == other.order() && self.elements.iter().all(|e| other.elements.contains(e))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|e| other.elements.contains(e))
    }

    /// Elements commuting with every target.
    pub fn centralizer_of(&self, targets: &[Fe]) -> Result<Self, GroupError> {
        for t in targets {
            if t.field() != &self.field || t.dim() != self.dim {
                return Err(GroupError::Dimension(self.dim, t.dim()));
            }
        }
        let f = &self.field;
        let keep: Vec<Matrix<u32>> = (0..self.order())
            .into_par_iter()
            .filter_map(|i| {
                let g = self.matrix(i);
                targets
                    .iter()
                    .all(|t| intertwines(f, &g, t.matrix(), t.matrix()))
                    .then_some(g)
            })
            .collect();
        Ok(Self::from_elements(f.clone(), self.dim, keep))
    }

    /// Elements whose adjoint action fixes every target vector.
    pub fn fixing(&self, targets: &[LieVector<FiniteField>]) -> Result<Self, GroupError> {
        for t in targets {
            if t.field() != &self.field || t.dim() != self.dim {
                return Err(GroupError::Dimension(self.dim, t.dim()));
            }
        }
        let f = &self.field;
        let keep: Vec<Matrix<u32>> = (0..self.order())
            .into_par_iter()
            .filter_map(|i| {
                let g = self.matrix(i);
                targets
                    .iter()
                    .all(|t| g.mul_vec(f, t.coeffs()) == t.coeffs())
                    .then_some(g)
            })
            .collect();
        Ok(Self::from_elements(f.clone(), self.dim, keep))
    }

    /// `{g in self : g T g^-1 = T}`; `T` must be a subset of `self`.
    pub fn normalizer_of(&self, t: &Self) -> Result<Self, GroupError> {
        if !t.is_subset_of(self) {
            return Err(GroupError::NotSubset);
        }
        let f = &self.field;
        let test: Vec<Matrix<u32>> = if t.generators.is_empty() {
            t.matrices().collect()
        } else {
            t.generators.clone()
        };
        let keep: Vec<Matrix<u32>> = (0..self.order())
            .into_par_iter()
            .filter_map(|i| {
                let g = self.matrix(i);
                let ginv = g.inverse(f).expect("invertible");
                test.iter()
                    .all(|x| t.contains_matrix(&g.mul(f, x).mul(f, &ginv)))
                    .then_some(g)
            })
            .collect();
        Ok(Self::from_elements(f.clone(), self.dim, keep))
    }

    /// First `g` in element order with `g a_i g^-1 = b_i` for all `i`.
    pub fn conjugator(&self, a: &[Fe], b: &[Fe]) -> Result<Option<Fe>, GroupError> {
        if a.len() != b.len() {
            return Err(GroupError::TupleLength(a.len(), b.len()));
        }
        for x in a.iter().chain(b) {
            if x.field() != &self.field || x.dim() != self.dim {
                return Err(GroupError::Dimension(self.dim, x.dim()));
            }
        }
        let f = &self.field;
        let pairs: Vec<(&Matrix<u32>, &Matrix<u32>)> =
            a.iter().map(|x| x.matrix()).zip(b.iter().map(|x| x.matrix())).collect();
        let found = (0..self.order()).into_par_iter().find_first(|&i| {
            let g = self.matrix(i);
            pairs.iter().all(|(am, bm)| intertwines(f, &g, am, bm))
        });
        Ok(found.map(|i| self.get(i)))
    }

    /// Binary dump: magic, p, m, dim, count, then the raw encodings.
    pub fn write_dump(&self, mut w: impl Write) -> Result<(), GroupError> {
        w.write_all(b"CHVG\x01")?;
        w.write_all(&self.field.characteristic().to_le_bytes())?;
        w.write_all(&self.field.degree().to_le_bytes())?;
        w.write_all(&(self.dim as u32).to_le_bytes())?;
        w.write_all(&(self.order() as u64).to_le_bytes())?;
        for e in &self.elements {
            w.write_all(e)?;
        }
        Ok(())
    }

    pub fn read_dump(mut r: impl Read) -> Result<Self, GroupError> {
        let mut head = [0u8; 5 + 4 + 4 + 4 + 8];
        r.read_exact(&mut head)?;
        if &head[..5] != b"CHVG\x01" {
            return Err(GroupError::BadDump("bad magic".into()));
        }
        let u32_at = |i: usize| u32::from_le_bytes(head[i..i + 4].try_into().unwrap());
        let (p, m, dim) = (u32_at(5), u32_at(9), u32_at(13) as usize);
        let count = u64::from_le_bytes(head[17..25].try_into().unwrap()) as usize;
        let field = FiniteField::new(p, m)?;
        let size = dim * dim * field.byte_width();
        let mut elements = IndexSet::with_capacity(count);
        let mut buf = vec![0u8; size];
        for _ in 0..count {
            r.read_exact(&mut buf)?;
            elements.insert(buf.clone());
        }
        if elements.len() != count {
            return Err(GroupError::BadDump("duplicate elements".into()));
        }
        let mut rest = Vec::new();
        r.read_to_end(&mut rest)?;
        if !rest.is_empty() {
            return Err(GroupError::BadDump("trailing bytes".into()));
        }
        Ok(FiniteSubgroup {
            field,
            dim,
            elements,
            generators: Vec::new(),
            stats: ClosureStats {
                order: count,
                ..Default::default()
            },
        })
    }
}

/// `g a == b g`, compared entry by entry with early exit.
pub(crate) fn intertwines(f: &FiniteField, g: &Matrix<u32>, a: &Matrix<u32>, b: &Matrix<u32>) -> bool {
    let n = g.rows();
    for r in 0..n {
        for c in 0..n {
            let mut lhs = 0u32;
            let mut rhs = 0u32;
            for k in 0..n {
                let (gk, ak) = (*g.get(r, k), *a.get(k, c));
                if gk != 0 && ak != 0 {
                    lhs = f.add(lhs, f.mul(gk, ak));
                }
                let (bk, gc) = (*b.get(r, k), *g.get(k, c));
                if bk != 0 && gc != 0 {
                    rhs = f.add(rhs, f.mul(bk, gc));
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
