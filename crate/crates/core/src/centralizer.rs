//! Linear algebra for separability: subspaces in reduced echelon form, fixed
//! spaces of group elements, Lie centralizers, separability probes and the
//! complement test for reductive pairs.

use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{ChevalleyError, LieAlgebra, LieVector};
use crate::field::{Field, FieldError};
use crate::group::{GroupElement, GroupError};
use crate::matrix::Matrix;
use crate::rootsystem::{Cocharacter, Root};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CentralizerError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    Ambient(usize, usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error("declared span (dim {declared}) is not contained in the computed centralizer (dim {computed})")]
    DeclarationNotContained { declared: usize, computed: usize },
    #[error("span and coordinate complement are not complementary: dims {span} + {complement} in {ambient}")]
    NotComplementary {
        span: usize,
        complement: usize,
        ambient: usize,
    },
}

/// Reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns. Zero rows are dropped.
pub(crate) fn rref<F: Field>(f: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let k = f.neg(&row[c]);
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !f.is_zero(y) {
                    *x = f.add(x, &f.mul(&k, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Subspace of `F^n` stored as its canonical reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.ambient == other.ambient && self.basis == other.basis
    }
}

impl<F: Field> Subspace<F> {
    pub fn span(field: F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Result<Self, CentralizerError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(CentralizerError::Ambient(ambient, v.len()));
        }
        let mut basis = vectors;
        let pivots = rref(&field, &mut basis, ambient);
        Ok(Subspace {
            field,
            ambient,
            basis,
            pivots,
        })
    }

    pub fn span_vectors(field: F, ambient: usize, vectors: &[LieVector<F>]) -> Result<Self, CentralizerError> {
        for v in vectors {
            if v.field() != &field {
                return Err(FieldError::Mismatch {
                    left: field.to_string(),
                    right: v.field().to_string(),
                }
                .into());
            }
        }
        Self::span(field, ambient, vectors.iter().map(|v| v.coeffs().to_vec()).collect())
    }

    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(field: F, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Null space of `m` (vectors `v` with `m v = 0`).
    pub fn kernel(field: F, m: &Matrix<F::Elem>) -> Self {
        let n = m.cols();
        let mut rows = m.to_rows();
        let pivots = rref(&field, &mut rows, n);
        let mut vectors = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![field.zero(); n];
            v[free] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&rows[r][free]);
            }
            vectors.push(v);
        }
        Self::span(field, n, vectors).expect("kernel vectors have the ambient length")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<LieVector<F>> {
        self.basis
            .iter()
            .map(|v| LieVector::new(self.field.clone(), v.clone()))
            .collect()
    }

    fn check(&self, other: &Self) -> Result<(), CentralizerError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            }
            .into());
        }
        if self.ambient != other.ambient {
            return Err(CentralizerError::Ambient(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Residue of `v` after elimination against the basis.
    fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&w[pc]) {
                continue;
            }
            let k = f.neg(&w[pc]);
            for (x, y) in w.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.add(x, &f.mul(&k, y));
                }
            }
        }
        w
    }

    pub fn contains_coeffs(&self, v: &[F::Elem]) -> Result<bool, CentralizerError> {
        if v.len() != self.ambient {
            return Err(CentralizerError::Ambient(self.ambient, v.len()));
        }
        Ok(self.reduce(v).iter().all(|x| self.field.is_zero(x)))
    }

    pub fn contains(&self, v: &LieVector<F>) -> Result<bool, CentralizerError> {
        if v.field() != &self.field {
            return Err(FieldError::Mismatch {
                left: self.field.to_string(),
                right: v.field().to_string(),
            }
            .into());
        }
        self.contains_coeffs(v.coeffs())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, CentralizerError> {
        self.check(other)?;
        Ok(self.basis.iter().all(|v| other.reduce(v).iter().all(|x| self.field.is_zero(x))))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, CentralizerError> {
        self.check(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.field.clone(), self.ambient, rows)
    }

    /// Zassenhaus: reduce `[a | a]` and `[b | 0]`; rows with zero left half
    /// carry a basis of the intersection on the right.
    pub fn intersect(&self, other: &Self) -> Result<Self, CentralizerError> {
        self.check(other)?;
        let f = &self.field;
        let n = self.ambient;
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for a in &self.basis {
            let mut r = a.clone();
            r.extend(a.iter().cloned());
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(f.zero(), n));
            rows.push(r);
        }
        rref(f, &mut rows, 2 * n);
        let inter = rows
            .into_iter()
            .filter(|r| r[..n].iter().all(|x| f.is_zero(x)))
            .map(|r| r[n..].to_vec())
            .collect();
        Self::span(f.clone(), n, inter)
    }

    pub fn equals(&self, other: &Self) -> Result<bool, CentralizerError> {
        self.check(other)?;
        Ok(self.basis == other.basis)
    }

    /// Canonical basis of a complement of `inner` in `self`: the echelon rows
    /// of `self` that are independent of `inner` and of earlier choices.
    pub fn complement_of(&self, inner: &Self) -> Result<Vec<Vec<F::Elem>>, CentralizerError> {
        self.check(inner)?;
        let mut acc = inner.clone();
        let mut out = Vec::new();
        for v in &self.basis {
            if !acc.contains_coeffs(v)? {
                out.push(v.clone());
                acc = acc.sum(&Self::span(self.field.clone(), self.ambient, vec![v.clone()])?)?;
            }
        }
        Ok(out)
    }
}

fn stacked_kernel<F: Field>(f: &F, n: usize, blocks: Vec<Matrix<F::Elem>>) -> Subspace<F> {
    if blocks.is_empty() {
        return Subspace::whole(f.clone(), n);
    }
    let rows: Vec<Vec<F::Elem>> = blocks.iter().flat_map(|b| b.to_rows()).collect();
    Subspace::kernel(f.clone(), &Matrix::from_rows(rows))
}

fn check_elements<F: Field>(lie: &LieAlgebra<F>, gens: &[GroupElement<F>]) -> Result<(), CentralizerError> {
    for g in gens {
        if g.field() != lie.field() {
            return Err(FieldError::Mismatch {
                left: lie.field().to_string(),
                right: g.field().to_string(),
            }
            .into());
        }
        if g.dim() != lie.dim() {
            return Err(CentralizerError::Ambient(lie.dim(), g.dim()));
        }
    }
    Ok(())
}

/// Intersection of the kernels of `Ad g - 1` over the generators.
pub fn lie_fixed_space<F: Field>(lie: &LieAlgebra<F>, gens: &[GroupElement<F>]) -> Result<Subspace<F>, CentralizerError> {
    check_elements(lie, gens)?;
    let f = lie.field();
    let n = lie.dim();
    let minus_one = f.neg(&f.one());
    let id = Matrix::identity(f, n).scale(f, &minus_one);
    let blocks = gens.iter().map(|g| g.matrix().add(f, &id)).collect();
    Ok(stacked_kernel(f, n, blocks))
}

/// Intersection of the kernels of `ad x` over the given vectors.
pub fn lie_centralizer<F: Field>(lie: &LieAlgebra<F>, xs: &[LieVector<F>]) -> Result<Subspace<F>, CentralizerError> {
    let blocks = xs.iter().map(|x| lie.ad_matrix(x)).collect::<Result<Vec<_>, _>>()?;
    Ok(stacked_kernel(lie.field(), lie.dim(), blocks))
}

/// Dimension comparison between the Lie centralizer of a subgroup and the
/// declared Lie algebra of its group centralizer.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SeparabilityReport {
    pub subgroup: String,
    pub ambient: String,
    pub dim_computed: usize,
    pub dim_declared: usize,
    pub separable: bool,
    pub witnesses: Vec<serde_json::Value>,
}

#[derive(Clone, Debug)]
pub struct Probe<F: Field> {
    pub report: SeparabilityReport,
    pub computed: Subspace<F>,
    pub witnesses: Vec<LieVector<F>>,
}

pub fn separability_probe<F: Field>(
    lie: &LieAlgebra<F>,
    gens: &[GroupElement<F>],
    declared: &Subspace<F>,
    subgroup: &str,
    ambient: &str,
) -> Result<Probe<F>, CentralizerError> {
    let computed = lie_fixed_space(lie, gens)?;
    finish_probe(computed, declared, subgroup, ambient)
}

/// The same probe inside a subalgebra: the computed side is
/// `sub ∩ fixed(gens)`.
pub fn separability_probe_within<F: Field>(
    lie: &LieAlgebra<F>,
    gens: &[GroupElement<F>],
    sub: &Subspace<F>,
    declared: &Subspace<F>,
    subgroup: &str,
    ambient: &str,
) -> Result<Probe<F>, CentralizerError> {
    let computed = lie_fixed_space(lie, gens)?.intersect(sub)?;
    finish_probe(computed, declared, subgroup, ambient)
}

fn finish_probe<F: Field>(
    computed: Subspace<F>,
    declared: &Subspace<F>,
    subgroup: &str,
    ambient: &str,
) -> Result<Probe<F>, CentralizerError> {
    if !declared.is_subspace_of(&computed)? {
        return Err(CentralizerError::DeclarationNotContained {
            declared: declared.dim(),
            computed: computed.dim(),
        });
    }
    let f = computed.field().clone();
    let witnesses: Vec<LieVector<F>> = computed
        .complement_of(declared)?
        .into_iter()
        .map(|v| LieVector::new(f.clone(), v))
        .collect();
    let report = SeparabilityReport {
        subgroup: subgroup.to_string(),
        ambient: ambient.to_string(),
        dim_computed: computed.dim(),
        dim_declared: declared.dim(),
        separable: computed.dim() == declared.dim(),
        witnesses: witnesses.iter().map(LieVector::to_json).collect(),
    };
    Ok(Probe {
        report,
        computed,
        witnesses,
    })
}

/// A family of group elements swept over field parameters.
#[derive(Clone, Debug)]
pub enum GeneratorFamily<F: Field> {
    /// `kappa_gamma(a)` for every parameter.
    RootElement(Root),
    /// `lambda(a)` for every nonzero parameter.
    Torus(Cocharacter),
    Fixed(GroupElement<F>),
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReductivePairOutcome {
    pub stable: bool,
    pub span_dim: usize,
    pub complement_dim: usize,
    pub elements_checked: usize,
}

/// Checks that the span of the basis vectors outside `h_span` is stable under
/// every swept generator.
pub fn reductive_pair_check<F: Field>(
    lie: &LieAlgebra<F>,
    families: &[GeneratorFamily<F>],
    h_span: &Subspace<F>,
    sweep: &[F::Elem],
) -> Result<ReductivePairOutcome, CentralizerError> {
    let f = lie.field();
    let n = lie.dim();
    let outside: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| lie.basis_vector(i).into_coeffs())
        .filter(|v| !h_span.contains_coeffs(v).unwrap_or(false))
        .collect();
    let complement = Subspace::span(f.clone(), n, outside.clone())?;
    if h_span.dim() + complement.dim() != n || h_span.sum(&complement)?.dim() != n {
        return Err(CentralizerError::NotComplementary {
            span: h_span.dim(),
            complement: complement.dim(),
            ambient: n,
        });
    }
    let mut elements = Vec::new();
    for fam in families {
        match fam {
            GeneratorFamily::RootElement(g) => {
                for a in sweep {
                    elements.push(GroupElement::root_element_raw(lie, g, a)?);
                }
            }
            GeneratorFamily::Torus(l) => {
                for a in sweep.iter().filter(|a| !f.is_zero(a)) {
                    elements.push(GroupElement::torus_element(lie, l, a)?);
                }
            }
            GeneratorFamily::Fixed(g) => elements.push(g.clone()),
        }
    }
    check_elements(lie, &elements)?;
    let stable = elements.iter().all(|g| {
        outside
            .iter()
            .all(|v| complement.contains_coeffs(&g.matrix().mul_vec(f, v)).unwrap_or(false))
    });
    Ok(ReductivePairOutcome {
        stable,
        span_dim: h_span.dim(),
        complement_dim: complement.dim(),
        elements_checked: elements.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn gf(p: u32, m: u32) -> FiniteField {
        FiniteField::new(p, m).unwrap()
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = gf(3, 1);
        let m = Matrix::from_rows(vec![vec![1, 1, 0], vec![2, 2, 0]]);
        let k = Subspace::kernel(f.clone(), &m);
        assert_eq!(k.dim(), 2);
        assert!(k.contains_coeffs(&[1, 2, 0]).unwrap());
        assert!(k.contains_coeffs(&[0, 0, 1]).unwrap());
        assert!(!k.contains_coeffs(&[1, 0, 0]).unwrap());
    }

    #[test]
    fn intersection_and_sum() {
        let f = gf(2, 1);
        let a = Subspace::span(f.clone(), 3, vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let b = Subspace::span(f.clone(), 3, vec![vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains_coeffs(&[0, 1, 0]).unwrap());
        assert_eq!(a.sum(&b).unwrap().dim(), 3);
        assert!(a.intersect(&a).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn ambient_mismatch() {
        let f = gf(2, 1);
        let a = Subspace::whole(f.clone(), 3);
        let b = Subspace::whole(f.clone(), 4);
        assert!(matches!(a.intersect(&b), Err(CentralizerError::Ambient(3, 4))));
        assert!(Subspace::span(f, 3, vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn canonical_form() {
        let f = gf(5, 1);
        let a = Subspace::span(f.clone(), 2, vec![vec![2, 4]]).unwrap();
        let b = Subspace::span(f, 2, vec![vec![3, 1]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[vec![1, 2]]);
    }

    #[test]
    fn complement_basis() {
        let f = gf(2, 1);
        let big = Subspace::whole(f.clone(), 3);
        let small = Subspace::span(f, 3, vec![vec![0, 1, 0]]).unwrap();
        let c = big.complement_of(&small).unwrap();
        assert_eq!(c, vec![vec![1, 0, 0], vec![0, 0, 1]]);
    }
}
