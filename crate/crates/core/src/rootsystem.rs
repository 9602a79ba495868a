//! Reduced root systems in simple-root coordinates.
//!
//! A root is an integer vector `c` with `gamma = sum c_i alpha_i`. Pairings are
//! computed from the Cartan matrix `C[i][j] = <alpha_j, alpha_i^vee>` and the
//! half squared lengths `d_i = (alpha_i, alpha_i)/2` (shortest roots have
//! `d = 1`), so everything stays integral.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::field::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("unsupported root system {0}")]
    Unsupported(String),
    #[error("{0:?} is not a root of this system")]
    ForeignRoot(Vec<i64>),
    #[error("vector {0:?} has the wrong length for rank {1}")]
    WrongLength(Vec<i64>, usize),
    #[error("root subset is not symmetric: {0:?} present without its negative")]
    NotSymmetric(Vec<i64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn is_exceptional(self) -> bool {
        matches!(self, CartanType::E | CartanType::F | CartanType::G)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Largest rank accepted by [`RootSystem::new`].
pub const MAX_RANK: usize = 8;

/// Root as coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Cocharacter `sum n_i alpha_i^vee` of the maximal torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    pub fn zero(rank: usize) -> Self {
        Cocharacter(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

/// Bad primes plus the extra very-good condition for type A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeClassification {
    pub bad: BTreeSet<u64>,
    /// `n + 1` for type `A_n`, otherwise `None`.
    pub type_a_order: Option<u64>,
}

impl PrimeClassification {
    pub fn is_good(&self, p: u64) -> bool {
        !self.bad.contains(&p)
    }

    pub fn is_very_good(&self, p: u64) -> bool {
        self.is_good(p) && self.type_a_order.is_none_or(|n1| n1 % p != 0)
    }
}

/// Weights `<gamma, lambda>` of a cocharacter on the adjoint module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocharWeights {
    pub roots: Vec<(Root, i64)>,
    /// Always zero; one entry per Cartan basis vector.
    pub cartan: Vec<i64>,
}

impl CocharWeights {
    pub fn weight(&self, gamma: &Root) -> Option<i64> {
        self.roots.iter().find(|(r, _)| r == gamma).map(|(_, w)| *w)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    half_norms: Vec<i64>,
    /// Positive roots (height, then descending coefficients), followed by
    /// their negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

/// Dynkin data in Bourbaki numbering: half squared lengths and bonded pairs.
fn dynkin(kind: CartanType, n: usize) -> Result<(Vec<i64>, Vec<(usize, usize)>), RootSystemError> {
    let unsupported = || RootSystemError::Unsupported(format!("{kind}{n}"));
    if n == 0 || n > MAX_RANK {
        return Err(unsupported());
    }
    let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
    let out = match kind {
        CartanType::A => (vec![1; n], chain(n)),
        CartanType::B if n >= 2 => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (d, chain(n))
        }
        CartanType::C if n >= 2 => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (d, chain(n))
        }
        CartanType::D if n >= 4 => {
            let mut edges = chain(n - 1);
            edges.push((n - 3, n - 1));
            (vec![1; n], edges)
        }
        CartanType::E if (6..=8).contains(&n) => {
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![1; n], edges)
        }
        CartanType::F if n == 4 => (vec![2, 2, 1, 1], chain(4)),
        CartanType::G if n == 2 => (vec![1, 3], chain(2)),
        _ => return Err(unsupported()),
    };
    Ok(out)
}

impl FromStr for RootSystem {
    type Err = RootSystemError;

    /// Parses labels such as `G2` or `e8`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootSystemError::Unsupported(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanType::A,
            Some('B') => CartanType::B,
            Some('C') => CartanType::C,
            Some('D') => CartanType::D,
            Some('E') => CartanType::E,
            Some('F') => CartanType::F,
            Some('G') => CartanType::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        RootSystem::new(kind, rank)
    }
}

impl RootSystem {
    /// Builds the root system by closing the simple roots under simple reflections.
    pub fn new(kind: CartanType, rank: usize) -> Result<Self, RootSystemError> {
        let (half_norms, edges) = dynkin(kind, rank)?;
        let mut form = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            form[i][i] = 2 * half_norms[i];
        }
        for &(i, j) in &edges {
            let v = -half_norms[i].max(half_norms[j]);
            form[i][j] = v;
            form[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| form[i][j] / half_norms[i]).collect())
            .collect();

        let simple = |i: usize| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        };
        let mut seen: BTreeSet<Vec<i64>> = (0..rank).map(simple).collect();
        let mut queue: VecDeque<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(g) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| g[j] * cartan[i][j]).sum();
                let mut r = g.clone();
                r[i] -= pairing;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive: Vec<Root> = seen
            .into_iter()
            .map(Root)
            .filter(|r| r.is_positive())
            .collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        Ok(RootSystem {
            kind,
            rank,
            cartan,
            half_norms,
            roots,
            index,
        })
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    /// `C[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(alpha_i, alpha_i)/2`, normalized so short roots have 1.
    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        self.roots[i].clone()
    }

    pub fn index_of(&self, gamma: &Root) -> Option<usize> {
        self.index.get(gamma).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(&Root(v.to_vec()))
    }

    /// Looks up a root by its simple-root coefficients.
    pub fn root(&self, coeffs: &[i64]) -> Result<Root, RootSystemError> {
        let r = Root(coeffs.to_vec());
        if self.index.contains_key(&r) {
            Ok(r)
        } else {
            Err(RootSystemError::ForeignRoot(coeffs.to_vec()))
        }
    }

    fn check(&self, gamma: &Root) -> Result<(), RootSystemError> {
        if self.index.contains_key(gamma) {
            Ok(())
        } else {
            Err(RootSystemError::ForeignRoot(gamma.0.clone()))
        }
    }

    /// Symmetric bilinear form on the root lattice.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * y[j] * self.half_norms[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `(gamma, gamma)/2` for a root.
    pub fn half_norm(&self, gamma: &Root) -> i64 {
        self.inner(&gamma.0, &gamma.0) / 2
    }

    /// `<gamma, delta^vee>`.
    pub fn pairing(&self, gamma: &Root, delta: &Root) -> Result<i64, RootSystemError> {
        self.check(gamma)?;
        self.check(delta)?;
        let num = self.inner(&gamma.0, &delta.0);
        let den = self.half_norm(delta);
        debug_assert_eq!(num % den, 0);
        Ok(num / den)
    }

    /// `s_alpha . gamma = gamma - <gamma, alpha^vee> alpha`.
    pub fn reflect(&self, alpha: &Root, gamma: &Root) -> Result<Root, RootSystemError> {
        let c = self.pairing(gamma, alpha)?;
        Ok(Root(
            gamma.0.iter().zip(&alpha.0).map(|(g, a)| g - c * a).collect(),
        ))
    }

    /// `gamma^vee` in the basis of simple coroots.
    pub fn coroot(&self, gamma: &Root) -> Result<Cocharacter, RootSystemError> {
        self.check(gamma)?;
        let d = self.half_norm(gamma);
        Ok(Cocharacter(
            (0..self.rank)
                .map(|i| {
                    let v = gamma.0[i] * self.half_norms[i];
                    debug_assert_eq!(v % d, 0);
                    v / d
                })
                .collect(),
        ))
    }

    /// `<gamma, lambda>` for any lattice vector `gamma`.
    pub fn cochar_pairing_vec(&self, gamma: &[i64], lambda: &Cocharacter) -> i64 {
        (0..self.rank)
            .map(|i| {
                lambda.0[i] * (0..self.rank).map(|j| gamma[j] * self.cartan[i][j]).sum::<i64>()
            })
            .sum()
    }

    pub fn cochar_pairing(&self, gamma: &Root, lambda: &Cocharacter) -> Result<i64, RootSystemError> {
        self.check(gamma)?;
        self.check_cochar(lambda)?;
        Ok(self.cochar_pairing_vec(&gamma.0, lambda))
    }

    fn check_cochar(&self, lambda: &Cocharacter) -> Result<(), RootSystemError> {
        if lambda.0.len() == self.rank {
            Ok(())
        } else {
            Err(RootSystemError::WrongLength(lambda.0.clone(), self.rank))
        }
    }

    /// `s_alpha . lambda = lambda - <alpha, lambda> alpha^vee`.
    pub fn coroot_reflect(
        &self,
        alpha: &Root,
        lambda: &Cocharacter,
    ) -> Result<Cocharacter, RootSystemError> {
        let c = self.cochar_pairing(alpha, lambda)?;
        let av = self.coroot(alpha)?;
        Ok(Cocharacter(
            lambda.0.iter().zip(&av.0).map(|(l, a)| l - c * a).collect(),
        ))
    }

    /// Bad primes are those dividing a nonzero simple-root coefficient of a
    /// positive root.
    pub fn classify_primes(&self) -> PrimeClassification {
        let mut bad = BTreeSet::new();
        for r in self.positive_roots() {
            for &c in &r.0 {
                let c = c as u64;
                for p in 2..=c {
                    if c.is_multiple_of(p) && is_prime(p) {
                        bad.insert(p);
                    }
                }
            }
        }
        PrimeClassification {
            bad,
            type_a_order: (self.kind == CartanType::A).then_some(self.rank as u64 + 1),
        }
    }

    /// True iff `gamma + delta` lies in `subset` whenever it is a root.
    /// The subset must be symmetric under negation.
    pub fn is_closed_subsystem(&self, subset: &[Root]) -> Result<bool, RootSystemError> {
        let set: BTreeSet<&Root> = subset.iter().collect();
        for r in subset {
            self.check(r)?;
        }
        for r in subset {
            if !set.contains(&r.neg()) {
                return Err(RootSystemError::NotSymmetric(r.0.clone()));
            }
        }
        for g in subset {
            for d in subset {
                let s = Root(g.add(d));
                if self.index.contains_key(&s) && !set.contains(&s) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn cochar_weights(&self, lambda: &Cocharacter) -> Result<CocharWeights, RootSystemError> {
        self.check_cochar(lambda)?;
        Ok(CocharWeights {
            roots: self
                .roots
                .iter()
                .map(|r| (r.clone(), self.cochar_pairing_vec(&r.0, lambda)))
                .collect(),
            cartan: vec![0; self.rank],
        })
    }

    /// Summary used by the `rootsys` command.
    pub fn summary(&self) -> RootSystemSummary {
        let primes = self.classify_primes();
        let positive = self.positive_roots().to_vec();
        let pairings = positive
            .iter()
            .map(|g| {
                (0..self.rank)
                    .map(|i| self.cochar_pairing_vec(&g.0, &self.coroot(&self.simple_root(i)).unwrap()))
                    .collect()
            })
            .collect();
        let very_good_failures = (2..=31u64)
            .filter(|&p| is_prime(p) && primes.is_good(p) && !primes.is_very_good(p))
            .collect();
        RootSystemSummary {
            label: self.label(),
            rank: self.rank,
            num_roots: self.roots.len(),
            cartan_matrix: self.cartan.clone(),
            half_norms: self.half_norms.clone(),
            positive_roots: positive,
            simple_coroot_pairings: pairings,
            bad_primes: primes.bad.iter().copied().collect(),
            good_but_not_very_good: very_good_failures,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemSummary {
    pub label: String,
    pub rank: usize,
    pub num_roots: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub half_norms: Vec<i64>,
    pub positive_roots: Vec<Root>,
    /// Row per positive root: `<gamma, alpha_i^vee>` for each simple `i`.
    pub simple_coroot_pairings: Vec<Vec<i64>>,
    pub bad_primes: Vec<u64>,
    /// Good primes up to 31 that fail the very-good condition.
    pub good_but_not_very_good: Vec<u64>,
}

impl RootSystemSummary {
    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("root system {}  (rank {}, {} roots)\n", self.label, self.rank, self.num_roots));
        out.push_str("cartan matrix C[i][j] = <alpha_j, alpha_i^vee>\n");
        for row in &self.cartan_matrix {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
            out.push_str(&format!("  {}\n", cells.join("")));
        }
        let width = self
            .positive_roots
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(0);
        out.push_str("positive roots and <gamma, alpha_i^vee>\n");
        for (r, row) in self.positive_roots.iter().zip(&self.simple_coroot_pairings) {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
            out.push_str(&format!("  {:<width$}{}\n", r.to_string(), cells.join("")));
        }
        let join = |v: &[u64]| {
            if v.is_empty() {
                "none".to_string()
            } else {
                v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
            }
        };
        out.push_str(&format!("bad primes: {}\n", join(&self.bad_primes)));
        out.push_str(&format!(
            "good but not very good (p <= 31): {}\n",
            join(&self.good_but_not_very_good)
        ));
        out
    }
}
