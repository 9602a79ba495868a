//! Chevalley Z-form of a simple Lie algebra and its reductions over fields.
//!
//! Basis order is `h_1..h_r` followed by `e_gamma` in root order. Structure
//! constants `[e_x, e_y] = N_{x,y} e_{x+y}` are fixed by taking `N > 0` on
//! every extraspecial pair; all other constants follow from the Jacobi
//! identity. Everything is verified exactly over Z at construction.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::matrix::Matrix;
use crate::rootsystem::{Cocharacter, Root, RootSystem};

/// Sparse integer vector: `(basis index, coefficient)` sorted by index, no zeros.
pub type Sparse = Vec<(usize, i64)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChevalleyError {
    #[error("structure constant check failed for ({0}, {1}): {2}")]
    Constant(String, String, String),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("(ad e_{root})^{n} is not divisible by {n}! at entry ({row}, {col})")]
    DividedPower {
        root: String,
        n: usize,
        row: usize,
        col: usize,
    },
    #[error("{0} is not a root")]
    ForeignRoot(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("vector has length {got}, algebra has dimension {dim}")]
    Length { got: usize, dim: usize },
}

/// Column-sparse integer matrix; column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub dim: usize,
    pub cols: Vec<Sparse>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        IntMatrix {
            dim,
            cols: (0..dim).map(|j| vec![(j, 1)]).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cols[j]
            .iter()
            .find(|(k, _)| *k == i)
            .map_or(0, |(_, v)| *v)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn apply(&self, v: &Sparse) -> Sparse {
        let mut acc = vec![0i64; self.dim];
        for &(k, c) in v {
            for &(i, a) in &self.cols[k] {
                acc[i] += a * c;
            }
        }
        to_sparse(&acc)
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|&(i, v)| (i, v * c)).filter(|x| x.1 != 0).collect())
                .collect(),
        }
    }

    pub fn to_field<F: Field>(&self, f: &F) -> Matrix<F::Elem> {
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, f.from_int(v));
            }
        }
        m
    }
}

fn to_sparse(v: &[i64]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i, *c))
        .collect()
}

fn add_into(acc: &mut [i64], v: &Sparse, c: i64) {
    for &(i, a) in v {
        acc[i] += a * c;
    }
}

/// One entry of the structure-constant dump.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StructureConstant {
    pub left: Root,
    pub right: Root,
    pub sum: Root,
    pub n: i64,
}

#[derive(Debug)]
pub struct ChevalleyForm {
    rs: RootSystem,
    dim: usize,
    /// `table[a * dim + b] = [b_a, b_b]`.
    table: Vec<Sparse>,
    constants: HashMap<(usize, usize), i64>,
    coroots: Vec<Cocharacter>,
    /// `divided[g][n] = (ad e_g)^n / n!`, stopping before the first zero power.
    divided: Vec<Vec<IntMatrix>>,
}

impl ChevalleyForm {
    pub fn new(rs: RootSystem) -> Result<Self, ChevalleyError> {
        let rank = rs.rank();
        let nroots = rs.roots().len();
        let dim = rank + nroots;
        let constants = compute_constants(&rs)?;
        let coroots: Vec<Cocharacter> = rs
            .roots()
            .iter()
            .map(|r| rs.coroot(r).expect("own root"))
            .collect();

        let mut table = vec![Sparse::new(); dim * dim];
        for (g, gamma) in rs.roots().iter().enumerate() {
            let eg = rank + g;
            for i in 0..rank {
                let c = rs.cochar_pairing_vec(gamma.coeffs(), &unit(rank, i));
                if c != 0 {
                    table[i * dim + eg] = vec![(eg, c)];
                    table[eg * dim + i] = vec![(eg, -c)];
                }
            }
            for (d, delta) in rs.roots().iter().enumerate() {
                let ed = rank + d;
                let sum = gamma.add(delta);
                if sum.iter().all(|&c| c == 0) {
                    table[eg * dim + ed] = to_sparse(coroots[g].coeffs());
                } else if let Ok(s) = rs.root(&sum) {
                    let s = rs.index_of(&s).unwrap();
                    table[eg * dim + ed] = vec![(rank + s, constants[&(g, d)])];
                }
            }
        }

        let mut form = ChevalleyForm {
            rs,
            dim,
            table,
            constants,
            coroots,
            divided: Vec::new(),
        };
        form.check_antisymmetry()?;
        form.check_jacobi()?;
        form.divided = (0..nroots)
            .map(|g| form.compute_divided(g))
            .collect::<Result<_, _>>()?;
        Ok(form)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Basis index of `e_gamma`.
    pub fn e_index(&self, gamma: &Root) -> Result<usize, ChevalleyError> {
        self.rs
            .index_of(gamma)
            .map(|g| self.rank() + g)
            .ok_or_else(|| ChevalleyError::ForeignRoot(gamma.to_string()))
    }

    /// Basis index of `h_i`.
    pub fn h_index(&self, i: usize) -> usize {
        assert!(i < self.rank());
        i
    }

    pub fn basis_label(&self, i: usize) -> String {
        if i < self.rank() {
            format!("h{}", i + 1)
        } else {
            format!("e{}", self.rs.roots()[i - self.rank()])
        }
    }

    /// Root attached to a basis index, `None` for Cartan vectors.
    pub fn basis_root(&self, i: usize) -> Option<&Root> {
        i.checked_sub(self.rank()).map(|g| &self.rs.roots()[g])
    }

    /// `[b_a, b_b]` over Z.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &Sparse {
        &self.table[a * self.dim + b]
    }

    pub fn bracket(&self, x: &Sparse, y: &Sparse) -> Sparse {
        let mut acc = vec![0i64; self.dim];
        for &(a, ca) in x {
            for &(b, cb) in y {
                add_into(&mut acc, self.bracket_basis(a, b), ca * cb);
            }
        }
        to_sparse(&acc)
    }

    /// `N_{gamma, delta}`, zero when `gamma + delta` is not a root.
    pub fn structure_constant(&self, gamma: &Root, delta: &Root) -> Result<i64, ChevalleyError> {
        let g = self.e_index(gamma)? - self.rank();
        let d = self.e_index(delta)? - self.rank();
        Ok(self.constants.get(&(g, d)).copied().unwrap_or(0))
    }

    /// All nonzero `N_{x,y}` in root order.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let roots = self.rs.roots();
        let mut out = Vec::new();
        for (g, x) in roots.iter().enumerate() {
            for (d, y) in roots.iter().enumerate() {
                if let Some(&n) = self.constants.get(&(g, d)) {
                    out.push(StructureConstant {
                        left: x.clone(),
                        right: y.clone(),
                        sum: self.rs.root(&x.add(y)).expect("constant on a root sum"),
                        n,
                    });
                }
            }
        }
        out
    }

    /// `h_gamma` in the basis of the `h_i`.
    pub fn coroot(&self, gamma: &Root) -> Result<&Cocharacter, ChevalleyError> {
        let g = self.e_index(gamma)? - self.rank();
        Ok(&self.coroots[g])
    }

    /// Integer matrix of `ad b_a`.
    pub fn ad_basis(&self, a: usize) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            cols: (0..self.dim).map(|b| self.bracket_basis(a, b).clone()).collect(),
        }
    }

    /// `[X_{gamma,0}, X_{gamma,1}, ...]` up to the last nonzero term.
    pub fn divided_powers(&self, gamma: &Root) -> Result<&[IntMatrix], ChevalleyError> {
        let g = self.e_index(gamma)? - self.rank();
        Ok(&self.divided[g])
    }

    /// Smallest `n` with `X_{gamma,n} = 0`.
    pub fn nilpotency_bound(&self, gamma: &Root) -> Result<usize, ChevalleyError> {
        Ok(self.divided_powers(gamma)?.len())
    }

    fn check_antisymmetry(&self) -> Result<(), ChevalleyError> {
        for a in 0..self.dim {
            for b in 0..=a {
                let ab = self.bracket_basis(a, b);
                let ba: Sparse = self.bracket_basis(b, a).iter().map(|&(i, c)| (i, -c)).collect();
                if *ab != ba {
                    return Err(ChevalleyError::Constant(
                        self.basis_label(a),
                        self.basis_label(b),
                        "bracket is not alternating".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive Jacobi check over all basis triples `a < b < c`
    /// (the residual is alternating, so this covers every triple).
    pub fn check_jacobi(&self) -> Result<(), ChevalleyError> {
        let d = self.dim;
        let mut acc = vec![0i64; d];
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    acc.iter_mut().for_each(|x| *x = 0);
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for &(k, v) in self.bracket_basis(x, y) {
                            add_into(&mut acc, self.bracket_basis(k, z), v);
                        }
                    }
                    if acc.iter().any(|&x| x != 0) {
                        return Err(ChevalleyError::Jacobi(
                            self.basis_label(a),
                            self.basis_label(b),
                            self.basis_label(c),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_divided(&self, g: usize) -> Result<Vec<IntMatrix>, ChevalleyError> {
        let ad = self.ad_basis(self.rank() + g);
        let mut out = vec![IntMatrix::identity(self.dim)];
        loop {
            let n = out.len();
            let prod = ad.mul(out.last().unwrap());
            if prod.is_zero() {
                return Ok(out);
            }
            let mut cols = Vec::with_capacity(self.dim);
            for (j, col) in prod.cols.iter().enumerate() {
                let mut c = Sparse::with_capacity(col.len());
                for &(i, v) in col {
                    if v % n as i64 != 0 {
                        return Err(ChevalleyError::DividedPower {
                            root: self.rs.roots()[g].to_string(),
                            n,
                            row: i,
                            col: j,
                        });
                    }
                    c.push((i, v / n as i64));
                }
                cols.push(c);
            }
            out.push(IntMatrix { dim: self.dim, cols });
        }
    }
}

fn unit(rank: usize, i: usize) -> Cocharacter {
    let mut v = vec![0; rank];
    v[i] = 1;
    Cocharacter(v)
}

/// Structure constants for every ordered pair of root indices with a root sum.
fn compute_constants(rs: &RootSystem) -> Result<HashMap<(usize, usize), i64>, ChevalleyError> {
    let roots = rs.roots();
    let npos = rs.num_positive();
    let norm = |v: &[i64]| rs.inner(v, v);
    let idx = |v: &[i64]| rs.is_root(v).then(|| rs.index_of(&rs.root(v).unwrap()).unwrap());
    let neg_idx = |i: usize| if i < npos { i + npos } else { i - npos };
    let diff = |x: usize, y: usize| -> Vec<i64> {
        roots[x].coeffs().iter().zip(roots[y].coeffs()).map(|(a, b)| a - b).collect()
    };
    // Length of the x-string below y: largest p with y - p x a root.
    let string_below = |x: usize, y: usize| -> i64 {
        let mut p = 0;
        loop {
            let v: Vec<i64> = roots[y]
                .coeffs()
                .iter()
                .zip(roots[x].coeffs())
                .map(|(b, a)| b - (p + 1) * a)
                .collect();
            if !rs.is_root(&v) {
                return p;
            }
            p += 1;
        }
    };

    // Constants on positive pairs (x, y) with x < y in root order.
    let mut special: HashMap<(usize, usize), i64> = HashMap::new();

    fn general(
        x: usize,
        y: usize,
        npos: usize,
        special: &HashMap<(usize, usize), i64>,
        roots: &[Root],
        rs: &RootSystem,
    ) -> i64 {
        let neg = |i: usize| if i < npos { i + npos } else { i - npos };
        let sum = roots[x].add(&roots[y]);
        let z = rs.index_of(&rs.root(&sum).expect("sum must be a root")).unwrap();
        let nrm = |i: usize| rs.inner(roots[i].coeffs(), roots[i].coeffs());
        match (x < npos, y < npos) {
            (true, true) => {
                if x < y {
                    special[&(x, y)]
                } else {
                    -special[&(y, x)]
                }
            }
            (false, false) => -general(neg(x), neg(y), npos, special, roots, rs),
            (false, true) => -general(y, x, npos, special, roots, rs),
            (true, false) => {
                let (num, den, val) = if z < npos {
                    (-nrm(z), nrm(x), general(neg(y), z, npos, special, roots, rs))
                } else {
                    (nrm(z), nrm(y), general(neg(z), x, npos, special, roots, rs))
                };
                let v = num * val;
                assert_eq!(v % den, 0, "non-integral structure constant");
                v / den
            }
        }
    }

    for xi in 0..npos {
        let mut pairs = Vec::new();
        for r in 0..npos {
            for s in r + 1..npos {
                if roots[r].add(&roots[s]) == roots[xi].coeffs() {
                    pairs.push((r, s));
                }
            }
        }
        let Some(&(r1, s1)) = pairs.first() else {
            continue;
        };
        let n1 = string_below(r1, s1) + 1;
        special.insert((r1, s1), n1);
        let nxi = norm(roots[xi].coeffs());
        for &(r, s) in &pairs[1..] {
            let mut num = 0i64;
            let mut den = 1i64;
            // term: N_{s,-r1} N_{r,-s1} / (s - r1, s - r1)
            let sr1 = diff(s, r1);
            if idx(&sr1).is_some() {
                let t = general(s, neg_idx(r1), npos, &special, roots, rs)
                    * general(r, neg_idx(s1), npos, &special, roots, rs);
                let a = norm(&sr1);
                num = num * a + t * den;
                den *= a;
            }
            // term: N_{-r1,r} N_{s,-s1} / (r - r1, r - r1)
            let rr1 = diff(r, r1);
            if idx(&rr1).is_some() {
                let t = general(neg_idx(r1), r, npos, &special, roots, rs)
                    * general(s, neg_idx(s1), npos, &special, roots, rs);
                let b = norm(&rr1);
                num = num * b + t * den;
                den *= b;
            }
            let top = nxi * num;
            let bottom = den * n1;
            if top % bottom != 0 {
                return Err(ChevalleyError::Constant(
                    roots[r].to_string(),
                    roots[s].to_string(),
                    format!("non-integral value {top}/{bottom}"),
                ));
            }
            special.insert((r, s), top / bottom);
        }
    }

    let mut all = HashMap::new();
    for x in 0..roots.len() {
        for y in 0..roots.len() {
            let sum = roots[x].add(&roots[y]);
            if !rs.is_root(&sum) {
                continue;
            }
            let n = general(x, y, npos, &special, roots, rs);
            let expect = string_below(x, y) + 1;
            if n.abs() != expect {
                return Err(ChevalleyError::Constant(
                    roots[x].to_string(),
                    roots[y].to_string(),
                    format!("|N| = {} but the root string gives {}", n.abs(), expect),
                ));
            }
            all.insert((x, y), n);
        }
    }
    Ok(all)
}

/// Field-tagged coefficient vector over the Chevalley basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LieVector<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> LieVector<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        LieVector { field, coeffs }
    }

    pub fn zero(field: F, dim: usize) -> Self {
        let z = field.zero();
        LieVector {
            field,
            coeffs: vec![z; dim],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    fn check(&self, other: &Self) -> Result<(), ChevalleyError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            }
            .into());
        }
        if self.dim() != other.dim() {
            return Err(ChevalleyError::Length {
                got: other.dim(),
                dim: self.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ChevalleyError> {
        self.check(other)?;
        let f = &self.field;
        Ok(LieVector {
            field: f.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f.add(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        LieVector {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| self.field.to_json(c)).collect())
    }
}

impl<F: Field> fmt::Display for LieVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| self.field.render(c)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `g` over a field: the Chevalley form with structure constants reduced.
#[derive(Clone, Debug)]
pub struct LieAlgebra<F: Field> {
    form: Arc<ChevalleyForm>,
    field: F,
    table: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> LieAlgebra<F> {
    pub fn new(form: Arc<ChevalleyForm>, field: F) -> Self {
        let table = form
            .table
            .iter()
            .map(|s| {
                s.iter()
                    .map(|&(i, c)| (i, field.from_int(c)))
                    .filter(|(_, c)| !field.is_zero(c))
                    .collect()
            })
            .collect();
        LieAlgebra { form, field, table }
    }

    pub fn form(&self) -> &Arc<ChevalleyForm> {
        &self.form
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.form.dim
    }

    pub fn basis_vector(&self, i: usize) -> LieVector<F> {
        let mut v = LieVector::zero(self.field.clone(), self.dim());
        v.coeffs[i] = self.field.one();
        v
    }

    pub fn e(&self, gamma: &Root) -> Result<LieVector<F>, ChevalleyError> {
        Ok(self.basis_vector(self.form.e_index(gamma)?))
    }

    pub fn h(&self, i: usize) -> LieVector<F> {
        self.basis_vector(self.form.h_index(i))
    }

    /// `h_gamma` reduced into this field.
    pub fn coroot_vector(&self, gamma: &Root) -> Result<LieVector<F>, ChevalleyError> {
        let cv = self.form.coroot(gamma)?;
        let mut v = LieVector::zero(self.field.clone(), self.dim());
        for (i, &c) in cv.coeffs().iter().enumerate() {
            v.coeffs[i] = self.field.from_int(c);
        }
        Ok(v)
    }

    pub fn vector(&self, coeffs: Vec<F::Elem>) -> Result<LieVector<F>, ChevalleyError> {
        if coeffs.len() != self.dim() {
            return Err(ChevalleyError::Length {
                got: coeffs.len(),
                dim: self.dim(),
            });
        }
        Ok(LieVector::new(self.field.clone(), coeffs))
    }

    fn check(&self, v: &LieVector<F>) -> Result<(), ChevalleyError> {
        if v.field != self.field {
            return Err(FieldError::Mismatch {
                left: self.field.to_string(),
                right: v.field.to_string(),
            }
            .into());
        }
        if v.dim() != self.dim() {
            return Err(ChevalleyError::Length {
                got: v.dim(),
                dim: self.dim(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &LieVector<F>, y: &LieVector<F>) -> Result<LieVector<F>, ChevalleyError> {
        self.check(x)?;
        self.check(y)?;
        let f = &self.field;
        let d = self.dim();
        let mut acc = vec![f.zero(); d];
        for (a, ca) in x.coeffs.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (b, cb) in y.coeffs.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let c = f.mul(ca, cb);
                for (k, v) in &self.table[a * d + b] {
                    acc[*k] = f.add(&acc[*k], &f.mul(&c, v));
                }
            }
        }
        Ok(LieVector::new(f.clone(), acc))
    }

    /// Matrix of `ad x`; column `j` holds `[x, b_j]`.
    pub fn ad_matrix(&self, x: &LieVector<F>) -> Result<Matrix<F::Elem>, ChevalleyError> {
        self.check(x)?;
        let f = &self.field;
        let d = self.dim();
        let mut m = Matrix::zeros(f, d, d);
        for (a, ca) in x.coeffs.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for b in 0..d {
                for (k, v) in &self.table[a * d + b] {
                    let cur = m.get(*k, b).clone();
                    m.set(*k, b, f.add(&cur, &f.mul(ca, v)));
                }
            }
        }
        Ok(m)
    }

    /// Jacobi residual over all basis triples after reduction.
    pub fn jacobi_holds(&self) -> bool {
        let f = &self.field;
        let d = self.dim();
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    let mut acc = vec![f.zero(); d];
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (k, v) in &self.table[x * d + y] {
                            for (m, w) in &self.table[k * d + z] {
                                acc[*m] = f.add(&acc[*m], &f.mul(v, w));
                            }
                        }
                    }
                    if acc.iter().any(|x| !f.is_zero(x)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
