//! The G2 characteristic-2 verification suite.
//!
//! Each scenario runs exact computations and returns a [`Report`]. Scenarios
//! flagged as shadows check finite-level set equalities over small fields;
//! they say nothing directly about the algebraic group.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::centralizer::{
    lie_centralizer, lie_fixed_space, reductive_pair_check, separability_probe,
    separability_probe_within, CentralizerError, GeneratorFamily, Subspace,
};
use crate::chevalley::{ChevalleyError, ChevalleyForm, LieAlgebra, LieVector};
use crate::field::{Field, FieldError, FiniteField, RatFuncField};
use crate::group::{intertwines, FiniteSubgroup, GroupElement, GroupError, ParabolicDatum};
use crate::rootsystem::{Cocharacter, Root, RootSystem, RootSystemError};

pub const SCHEMA_VERSION: u32 = 1;
pub const SUITE_NAME: &str = "g2-char2";
pub const SCENARIO_IDS: [&str; 10] = ["S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10"];

/// Element cap for every closure the suite performs.
const CLOSURE_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("unknown scenario id {given}; valid ids are {}", valid.join(", "))]
    UnknownId { given: String, valid: Vec<String> },
    #[error("unsupported field size {0}; the suite accepts 4 and 8")]
    UnsupportedField(u32),
    #[error("unknown generator set {0}; expected simple-roots, m or h")]
    UnknownGenerators(String),
    #[error("generator set {0} needs an element of order 3, which GF({1}) lacks")]
    NoCubeRoot(String, u32),
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    /// Field sizes for the scenarios that sweep `q`.
    pub qs: Vec<u32>,
    /// Maximum number of group elements a scenario may enumerate.
    pub budget: Option<usize>,
    pub timing: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            qs: vec![4, 8],
            budget: None,
            timing: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// First violated assertion with its operands.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub assertion: String,
    pub operands: Value,
}

macro_rules! failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure {
                    assertion: "computation error".into(),
                    operands: json!(e.to_string()),
                }
            }
        }
    )*};
}
failure_from!(FieldError, GroupError, CentralizerError, ChevalleyError, RootSystemError, ScenarioError);

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub id: String,
    pub description: String,
    pub claim: String,
    pub status: Status,
    pub shadow: bool,
    pub fields: Vec<String>,
    pub metrics: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
    pub failure: Option<Failure>,
    pub skip_reason: Option<String>,
    pub timing_ms: Option<u64>,
}

#[derive(Default)]
struct Recorder {
    metrics: BTreeMap<String, Value>,
    witnesses: BTreeMap<String, Value>,
    fields: Vec<String>,
}

impl Recorder {
    fn metric(&mut self, key: &str, v: impl Serialize) {
        self.metrics.insert(key.to_string(), json!(v));
    }

    fn witness(&mut self, key: &str, v: impl Serialize) {
        self.witnesses.insert(key.to_string(), json!(v));
    }

    fn field(&mut self, name: String) {
        if !self.fields.contains(&name) {
            self.fields.push(name);
        }
    }
}

type Outcome = Result<(), Failure>;

fn ensure(cond: bool, assertion: &str, operands: impl FnOnce() -> Value) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure {
            assertion: assertion.to_string(),
            operands: operands(),
        })
    }
}

struct ScenarioDef {
    id: &'static str,
    description: &'static str,
    claim: &'static str,
    shadow: bool,
    cost: fn(&SuiteParams) -> usize,
    run: fn(&mut Recorder, &SuiteParams) -> Outcome,
}

fn no_cost(_: &SuiteParams) -> usize {
    0
}

fn m_order(q: u32) -> usize {
    let q = q as usize;
    (q * (q * q - 1)).pow(2)
}

const SCENARIOS: [ScenarioDef; 10] = [
    ScenarioDef {
        id: "S1",
        description: "root data: coroot pairings, reflections, unipotent radical roots",
        claim: "pairings of alpha and beta with the simple coroots, s_alpha on roots and coroots, and the five positive-weight roots of alpha^vee + 2 beta^vee",
        shadow: false,
        cost: no_cost,
        run: s1,
    },
    ScenarioDef {
        id: "S2",
        description: "group relations between root elements, s_alpha, t and u(a)",
        claim: "conjugation by s_alpha permutes root subgroups, t acts on root spaces by weight parity, root subgroups fix z iff the alpha^vee pairing is even, and the product, inverse and commutator formulas for u(a)",
        shadow: false,
        cost: no_cost,
        run: s2,
    },
    ScenarioDef {
        id: "S3",
        description: "reductive pair (G, M) and closed subsystem of M",
        claim: "the root spaces outside M span an Ad(M)-stable complement of Lie M; the roots of M form a closed subsystem",
        shadow: false,
        cost: no_cost,
        run: s3,
    },
    ScenarioDef {
        id: "S4",
        description: "centralizer of z and self-normalization of M over GF(2)",
        claim: "C_G(z) = M and N_G(M) = M at the level of GF(2)-points; M(GF(2)) = G_alpha x G_{3a+2b} has 36 elements",
        shadow: true,
        cost: |_| 12096,
        run: s4,
    },
    ScenarioDef {
        id: "S5",
        description: "separability of H in L and in G",
        claim: "H is separable in L with c_l(H) = k z, and not separable in G with witness e_b + e_{3a+b}; Ad u(a) fixes e_b + e_{3a+b}",
        shadow: false,
        cost: no_cost,
        run: s5,
    },
    ScenarioDef {
        id: "S6",
        description: "infinitely many M-classes inside one G-class of pairs",
        claim: "the pairs u(a).(m1, m2) are pairwise non-conjugate under M(GF(q)), giving q classes; their centralizer in M(GF(q)) is U_{3a+2b}(GF(q))",
        shadow: true,
        cost: |p| p.qs.iter().map(|&q| m_order(q)).max().unwrap_or(0),
        run: s6,
    },
    ScenarioDef {
        id: "S7",
        description: "H_a is G-completely reducible but not M-completely reducible",
        claim: "c_lambda maps the generators of H_a to those of H, H_a is not M(GF(4))-conjugate to H, and u(a) is not in M(GF(4)) for a != 0",
        shadow: true,
        cost: |_| m_order(4),
        run: s7,
    },
    ScenarioDef {
        id: "S8",
        description: "H_a S is not G-completely reducible",
        claim: "c_lambda(H_a S) = <S, s_alpha> and the centralizer of S in R_u(P_lambda) is U_{3a+2b}",
        shadow: true,
        cost: |p| p.qs.iter().map(|&q| (q as usize).pow(5)).max().unwrap_or(0),
        run: s8,
    },
    ScenarioDef {
        id: "S9",
        description: "rationality over an imperfect field",
        claim: "over F4(x), H_x is defined over F4(x^2) while u(x) is not; over GF(q) the elements of R_u(P_lambda) moving H_a into L_lambda form the coset u(a) U_{3a+2b}",
        shadow: true,
        cost: |p| p.qs.iter().map(|&q| (q as usize).pow(5)).max().unwrap_or(0),
        run: s9,
    },
    ScenarioDef {
        id: "S10",
        description: "centralizer and normalizer of H in M(GF(4))",
        claim: "C_M(H) = G_{3a+2b} and N_M(H) = H G_{3a+2b} at the level of GF(4)-points",
        shadow: true,
        cost: |_| m_order(4),
        run: s10,
    },
];

fn unknown(id: &str) -> ScenarioError {
    ScenarioError::UnknownId {
        given: id.to_string(),
        valid: SCENARIO_IDS.iter().map(|s| s.to_string()).collect(),
    }
}

pub fn run_scenario(id: &str, params: &SuiteParams) -> Result<Report, ScenarioError> {
    let def = SCENARIOS
        .iter()
        .find(|d| d.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| unknown(id))?;
    for &q in &params.qs {
        if q != 4 && q != 8 {
            return Err(ScenarioError::UnsupportedField(q));
        }
    }
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        id: def.id.to_string(),
        description: def.description.to_string(),
        claim: def.claim.to_string(),
        status: Status::Pass,
        shadow: def.shadow,
        fields: Vec::new(),
        metrics: BTreeMap::new(),
        witnesses: BTreeMap::new(),
        failure: None,
        skip_reason: None,
        timing_ms: None,
    };
    let cost = (def.cost)(params);
    if let Some(budget) = params.budget {
        if cost > budget {
            report.status = Status::Skipped;
            report.skip_reason = Some(format!(
                "needs to enumerate {cost} group elements, budget is {budget}"
            ));
            return Ok(report);
        }
    }
    let start = Instant::now();
    let mut rec = Recorder::default();
    let outcome = (def.run)(&mut rec, params);
    if params.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    report.metrics = rec.metrics;
    report.witnesses = rec.witnesses;
    report.fields = rec.fields;
    if let Err(f) = outcome {
        report.status = Status::Fail;
        report.failure = Some(f);
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub reports: Vec<Report>,
    pub exit_code: i32,
}

/// Runs the listed scenarios in the given order. Exit code 0 when all pass,
/// 1 on any failure, 2 when something was skipped and nothing failed.
pub fn run_suite(ids: &[String], params: &SuiteParams) -> Result<SuiteOutcome, ScenarioError> {
    for id in ids {
        if !SCENARIO_IDS.iter().any(|s| s.eq_ignore_ascii_case(id)) {
            return Err(unknown(id));
        }
    }
    let reports = ids
        .iter()
        .map(|id| run_scenario(id, params))
        .collect::<Result<Vec<_>, _>>()?;
    let exit_code = if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::Skipped) {
        2
    } else {
        0
    };
    Ok(SuiteOutcome { reports, exit_code })
}

pub fn all_ids() -> Vec<String> {
    SCENARIO_IDS.iter().map(|s| s.to_string()).collect()
}

// ---------------------------------------------------------------------------
// G2 helpers

const A: [i64; 2] = [1, 0];
const B: [i64; 2] = [0, 1];
const AB: [i64; 2] = [1, 1];
const A2B: [i64; 2] = [2, 1];
const A3B: [i64; 2] = [3, 1];
const A3B2: [i64; 2] = [3, 2];
const POSITIVE: [[i64; 2]; 6] = [A, B, AB, A2B, A3B, A3B2];

/// Shared integral form of G2, built once.
pub fn g2_form() -> Arc<ChevalleyForm> {
    static FORM: OnceLock<Arc<ChevalleyForm>> = OnceLock::new();
    FORM.get_or_init(|| {
        Arc::new(ChevalleyForm::new("G2".parse().expect("G2 is supported")).expect("G2 form builds"))
    })
    .clone()
}

/// `3a+2b`-style name of a G2 root.
pub fn g2_root_name(c: &[i64]) -> String {
    let sign = if c.iter().any(|&x| x < 0) { "-" } else { "" };
    let term = |n: i64, s: &str| match n.abs() {
        0 => None,
        1 => Some(s.to_string()),
        k => Some(format!("{k}{s}")),
    };
    let parts: Vec<String> = [term(c[0], "a"), term(c[1], "b")].into_iter().flatten().collect();
    let body = parts.join("+");
    if sign == "-" && parts.len() > 1 {
        format!("-({body})")
    } else {
        format!("{sign}{body}")
    }
}

fn neg(c: [i64; 2]) -> [i64; 2] {
    [-c[0], -c[1]]
}

struct G2<F: Field> {
    lie: LieAlgebra<F>,
}

impl<F: Field> G2<F> {
    fn new(field: F) -> Self {
        G2 {
            lie: LieAlgebra::new(g2_form(), field),
        }
    }

    fn f(&self) -> &F {
        self.lie.field()
    }

    fn rs(&self) -> &RootSystem {
        self.lie.form().root_system()
    }

    fn root(&self, c: [i64; 2]) -> Root {
        self.rs().root(&c).expect("G2 root")
    }

    fn kappa(&self, c: [i64; 2], a: &F::Elem) -> Result<GroupElement<F>, GroupError> {
        GroupElement::root_element_raw(&self.lie, &self.root(c), a)
    }

    fn s(&self, c: [i64; 2]) -> Result<GroupElement<F>, GroupError> {
        GroupElement::weyl_rep(&self.lie, &self.root(c))
    }

    fn alpha_vee(&self, a: &F::Elem) -> Result<GroupElement<F>, GroupError> {
        GroupElement::torus_element(&self.lie, &Cocharacter(vec![1, 0]), a)
    }

    /// `u(a) = kappa_b(a) kappa_{3a+b}(a)`.
    fn u(&self, a: &F::Elem) -> Result<GroupElement<F>, GroupError> {
        self.kappa(B, a)?.mul(&self.kappa(A3B, a)?)
    }

    fn e(&self, c: [i64; 2]) -> LieVector<F> {
        self.lie.e(&self.root(c)).expect("G2 root")
    }

    /// `z = d alpha^vee (1) = h_alpha`.
    fn z(&self) -> LieVector<F> {
        self.lie.coroot_vector(&self.root(A)).expect("G2 root")
    }

    fn span(&self, vs: &[LieVector<F>]) -> Result<Subspace<F>, CentralizerError> {
        Subspace::span_vectors(self.f().clone(), self.lie.dim(), vs)
    }

    fn basis_name(&self, i: usize) -> String {
        match self.lie.form().basis_root(i) {
            Some(r) => format!("e[{}]", g2_root_name(r.coeffs())),
            None => format!("h{}", i + 1),
        }
    }

    /// Readable sum of basis vectors with their coefficients.
    fn describe(&self, v: &LieVector<F>) -> String {
        let f = self.f();
        let terms: Vec<String> = v
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| {
                if f.is_one(c) {
                    self.basis_name(i)
                } else {
                    format!("({})*{}", f.render(c), self.basis_name(i))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn field_label(f: &FiniteField) -> String {
    format!("GF({}^{})", f.characteristic(), f.degree())
}

/// Ambient field for parameters in GF(q) that also contains a cube root of
/// unity: GF(4) for q = 4 and GF(64) for q = 8.
fn ambient_with_order_three(q: u32) -> Result<FiniteField, Failure> {
    match q {
        4 => Ok(FiniteField::new(2, 2)?),
        8 => Ok(FiniteField::new(2, 6)?),
        _ => Err(ScenarioError::UnsupportedField(q).into()),
    }
}

fn gf_q_params(ambient: &FiniteField, q: u32) -> Result<Vec<u32>, Failure> {
    Ok(ambient.subfield_elements(q)?)
}

fn omega(f: &FiniteField) -> Result<u32, Failure> {
    f.element_of_order(3).ok_or_else(|| Failure {
        assertion: "field contains an element of order 3".into(),
        operands: json!(f.to_string()),
    })
}

type Fg = G2<FiniteField>;
type Elt = GroupElement<FiniteField>;

/// `G_gamma(GF(q))`, generated by `kappa_{+-gamma}(a)` for nonzero parameters.
fn sl2_points(g: &Fg, c: [i64; 2], params: &[u32]) -> Result<FiniteSubgroup, Failure> {
    let mut gens = Vec::new();
    for a in params.iter().filter(|&&a| a != 0) {
        gens.push(g.kappa(c, a)?);
        gens.push(g.kappa(neg(c), a)?);
    }
    Ok(FiniteSubgroup::closure(&gens, CLOSURE_CAP)?)
}

fn root_group_points(g: &Fg, c: [i64; 2], params: &[u32]) -> Result<FiniteSubgroup, Failure> {
    let gens = params
        .iter()
        .filter(|&&a| a != 0)
        .map(|a| g.kappa(c, a))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteSubgroup::closure(&gens, CLOSURE_CAP)?)
}

/// `M(GF(q)) = G_alpha(GF(q)) G_{3a+2b}(GF(q))`.
fn m_points(g: &Fg, params: &[u32]) -> Result<FiniteSubgroup, Failure> {
    let ga = sl2_points(g, A, params)?;
    let gt = sl2_points(g, A3B2, params)?;
    Ok(FiniteSubgroup::product(&ga, &gt)?)
}

/// `R_u(P_lambda)(GF(q)) = U_b U_{a+b} U_{2a+b} U_{3a+b} U_{3a+2b}`.
fn unipotent_radical_points(g: &Fg, params: &[u32]) -> Result<FiniteSubgroup, Failure> {
    let mut acc = root_group_points(g, A3B2, params)?;
    for c in [A3B, A2B, AB, B] {
        acc = FiniteSubgroup::product(&root_group_points(g, c, params)?, &acc)?;
    }
    Ok(acc)
}

fn lambda() -> Cocharacter {
    Cocharacter(vec![1, 2])
}

fn word(e: &Elt) -> Value {
    json!(e.word().unwrap_or("?"))
}

/// Named generating sets of subgroups of G2 over `field`, for the `closure`
/// command: `simple-roots` gives G itself, `m` gives M = G_a G_{3a+2b}, `h`
/// gives H = <s_a, a^vee(omega)>.
pub fn named_generators(name: &str, field: &FiniteField) -> Result<Vec<Elt>, Failure> {
    let g = G2::new(field.clone());
    let nonzero: Vec<u32> = field.elements().into_iter().filter(|&a| a != 0).collect();
    let tag = |e: Elt, w: String| e.with_word(w);
    match name {
        "simple-roots" => [A, neg(A), B, neg(B)]
            .iter()
            .map(|&c| Ok(tag(g.kappa(c, &1)?, format!("k[{}](1)", g2_root_name(&c)))))
            .collect(),
        "m" => {
            let mut out = Vec::new();
            for c in [A, neg(A), A3B2, neg(A3B2)] {
                for a in &nonzero {
                    out.push(tag(g.kappa(c, a)?, format!("k[{}]({})", g2_root_name(&c), field.render(*a))));
                }
            }
            Ok(out)
        }
        "h" => {
            let w = field
                .element_of_order(3)
                .ok_or_else(|| ScenarioError::NoCubeRoot(name.into(), field.size()))?;
            Ok(vec![tag(g.s(A)?, "s[a]".into()), tag(g.alpha_vee(&w)?, "t".into())])
        }
        other => Err(ScenarioError::UnknownGenerators(other.into()).into()),
    }
}

// ---------------------------------------------------------------------------
// Scenarios

fn s1(rec: &mut Recorder, _: &SuiteParams) -> Outcome {
    let rs: RootSystem = "G2".parse()?;
    rec.field("Z".into());
    let r = |c: [i64; 2]| rs.root(&c);
    let (a, b) = (r(A)?, r(B)?);
    let positive: Vec<Vec<i64>> = rs.positive_roots().iter().map(|x| x.coeffs().to_vec()).collect();
    ensure(positive == POSITIVE.map(|c| c.to_vec()), "positive roots", || json!(positive))?;

    let mut count = 0;
    let mut table = BTreeMap::new();
    let mut check_pairing = |g: [i64; 2], d: &Root, dname: &str, want: i64| -> Outcome {
        let got = rs.pairing(&rs.root(&g)?, d)?;
        count += 1;
        table.insert(format!("<{},{}^vee>", g2_root_name(&g), dname), got);
        ensure(got == want, "coroot pairing", || {
            json!({"root": g2_root_name(&g), "coroot": dname, "got": got, "expected": want})
        })
    };
    check_pairing(A, &a, "a", 2)?;
    check_pairing(B, &a, "a", -3)?;
    check_pairing(A, &b, "b", -1)?;
    check_pairing(B, &b, "b", 2)?;
    check_pairing(AB, &a, "a", -1)?;
    check_pairing(A2B, &a, "a", 1)?;
    check_pairing(A3B, &a, "a", 3)?;
    check_pairing(A3B2, &a, "a", 0)?;

    let av = rs.coroot(&a)?;
    let bv = rs.coroot(&b)?;
    let sav = rs.coroot_reflect(&a, &av)?;
    ensure(sav == Cocharacter(vec![-1, 0]), "s_a(a^vee) = -a^vee", || json!(sav))?;
    let sbv = rs.coroot_reflect(&a, &bv)?;
    ensure(sbv == Cocharacter(vec![1, 1]), "s_a(b^vee) = a^vee + b^vee", || json!(sbv))?;
    count += 2;
    rec.metric("pairing_assertions", count);
    rec.metric("pairings", table);

    let sa = rs.reflect(&a, &a)?;
    ensure(sa == a.neg(), "s_a(a) = -a", || json!(sa))?;
    let sb = rs.reflect(&a, &b)?;
    ensure(sb.coeffs() == A3B, "s_a(b) = 3a+b", || json!(sb))?;

    let w = rs.cochar_weights(&lambda())?;
    ensure(w.weight(&a) == Some(0) && w.weight(&b) == Some(1), "<a,lambda> = 0, <b,lambda> = 1", || {
        json!({"alpha": w.weight(&a), "beta": w.weight(&b)})
    })?;
    let radical: Vec<String> = w
        .roots
        .iter()
        .filter(|(_, x)| *x > 0)
        .map(|(r, _)| g2_root_name(r.coeffs()))
        .collect();
    let expected: Vec<String> = [B, AB, A2B, A3B, A3B2].iter().map(|c| g2_root_name(c)).collect();
    ensure(radical == expected, "roots of R_u(P_lambda)", || json!({"got": radical, "expected": expected}))?;
    rec.metric("unipotent_radical_roots", radical);
    rec.metric("positive_roots", positive);
    Ok(())
}

fn s2(rec: &mut Recorder, _: &SuiteParams) -> Outcome {
    let f16 = FiniteField::new(2, 4)?;
    rec.field(field_label(&f16));
    let g = G2::new(f16.clone());
    let sa = g.s(A)?;
    let params = f16.elements();

    // s_alpha kappa_gamma(a) s_alpha = kappa_{s_alpha gamma}(a)
    let perm = [(B, A3B), (AB, A2B), (A2B, AB), (A3B, B), (A3B2, A3B2)];
    for a in &params {
        for (from, to) in perm {
            let lhs = sa.mul(&g.kappa(from, a)?)?.mul(&sa)?;
            let rhs = g.kappa(to, a)?;
            ensure(lhs == rhs, "s_a k_gamma(a) s_a = k_{s_a gamma}(a)", || {
                json!({"gamma": g2_root_name(&from), "a": f16.render(*a)})
            })?;
        }
    }
    rec.metric("root_subgroup_conjugations_checked", params.len() * perm.len());

    for (from, to) in perm {
        let img = sa.ad_apply(&g.e(from))?;
        ensure(img == g.e(to), "Ad s_a(e_gamma) = e_{s_a gamma}", || {
            json!({"gamma": g2_root_name(&from), "image": g.describe(&img)})
        })?;
    }

    // Signs of the same relations over Z, read off in GF(7).
    let g7 = G2::new(FiniteField::new(7, 1)?);
    let sa7 = g7.s(A)?;
    let mut signs = BTreeMap::new();
    for (from, to) in perm {
        let img = sa7.ad_apply(&g7.e(from))?;
        let idx = g7.lie.form().e_index(&g7.root(to))?;
        let c = img.coeffs()[idx];
        signs.insert(g2_root_name(&from), if c == 1 { 1 } else if c == 6 { -1 } else { 0 });
    }
    rec.metric("ad_s_alpha_signs_over_z", signs);

    // t = alpha^vee(omega) acts by omega^<gamma, alpha^vee>.
    let w = omega(&f16)?;
    let t = g.alpha_vee(&w)?;
    for c in [B, A3B, A3B2] {
        for a in &params {
            let k = g.kappa(c, a)?;
            ensure(t.commutes_with(&k)?, "t centralizes U_gamma", || {
                json!({"gamma": g2_root_name(&c), "a": f16.render(*a)})
            })?;
        }
        ensure(t.ad_apply(&g.e(c))? == g.e(c), "t fixes e_gamma", || json!(g2_root_name(&c)))?;
    }
    for c in [A, AB, A2B] {
        for a in params.iter().filter(|&&a| a != 0) {
            let k = g.kappa(c, a)?;
            ensure(!t.commutes_with(&k)?, "t moves U_gamma", || {
                json!({"gamma": g2_root_name(&c), "a": f16.render(*a)})
            })?;
        }
        ensure(t.ad_apply(&g.e(c))? != g.e(c), "t moves e_gamma", || json!(g2_root_name(&c)))?;
    }

    // U_gamma fixes z iff <gamma, alpha^vee> is even.
    let z = g.z();
    let rs = g.rs();
    let a_root = g.root(A);
    let mut fixing = Vec::new();
    for gamma in rs.roots() {
        let even = rs.pairing(gamma, &a_root)? % 2 == 0;
        let c = [gamma.coeffs()[0], gamma.coeffs()[1]];
        let mut fixes_all = true;
        for a in &params {
            if g.kappa(c, a)?.ad_apply(&z)? != z {
                fixes_all = false;
            }
        }
        ensure(fixes_all == even, "U_gamma fixes z iff 2 | <gamma, a^vee>", || {
            json!({"gamma": g2_root_name(gamma.coeffs()), "even": even, "fixes": fixes_all})
        })?;
        if fixes_all {
            fixing.push(g2_root_name(gamma.coeffs()));
        }
    }
    rec.metric("roots_fixing_z", fixing);

    // u(a) u(b) = u(a+b) k_{3a+2b}(ab) and u(a)^-1 = u(a) k_{3a+2b}(a^2)
    for a in &params {
        let ua = g.u(a)?;
        for b in &params {
            let lhs = ua.mul(&g.u(b)?)?;
            let rhs = g.u(&f16.add(*a, *b))?.mul(&g.kappa(A3B2, &f16.mul(*a, *b))?)?;
            ensure(lhs == rhs, "u(a)u(b) = u(a+b) k_{3a+2b}(ab)", || {
                json!({"a": f16.render(*a), "b": f16.render(*b)})
            })?;
        }
        let inv = ua.mul(&g.kappa(A3B2, &f16.mul(*a, *a))?)?;
        ensure(ua.inv() == inv, "u(a)^-1 = u(a) k_{3a+2b}(a^2)", || json!({"a": f16.render(*a)}))?;
    }
    rec.metric("u_product_cases", params.len() * params.len());

    // s_a k_b(a) k_{a+b}(a') k_{2a+b}(b) k_{3a+b}(b') k_{3a+2b}(c) s_a
    //   = k_b(b') k_{a+b}(b) k_{2a+b}(a') k_{3a+b}(a) k_{3a+2b}(ab' + a'b + c)
    let f4 = FiniteField::new(2, 2)?;
    rec.field(field_label(&f4));
    let g4 = G2::new(f4.clone());
    let sa4 = g4.s(A)?;
    let p4 = f4.elements();
    let mut tuples = Vec::new();
    for &a in &p4 {
        for &a2 in &p4 {
            for &b in &p4 {
                for &b2 in &p4 {
                    for &c in &p4 {
                        tuples.push([a, a2, b, b2, c]);
                    }
                }
            }
        }
    }
    let bad = tuples.par_iter().find_first(|&&[a, a2, b, b2, c]| {
        let prod = |xs: [([i64; 2], u32); 5]| -> Result<Elt, GroupError> {
            let mut acc = g4.kappa(xs[0].0, &xs[0].1)?;
            for (r, v) in &xs[1..] {
                acc = acc.mul(&g4.kappa(*r, v)?)?;
            }
            Ok(acc)
        };
        let lhs = prod([(B, a), (AB, a2), (A2B, b), (A3B, b2), (A3B2, c)])
            .and_then(|x| sa4.mul(&x)?.mul(&sa4));
        let last = f4.add(f4.add(f4.mul(a, b2), f4.mul(a2, b)), c);
        let rhs = prod([(B, b2), (AB, b), (A2B, a2), (A3B, a), (A3B2, last)]);
        !matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
    });
    ensure(bad.is_none(), "conjugation of the R_u product by s_a", || json!(bad))?;
    rec.metric("commutator_tuples_checked", tuples.len());
    Ok(())
}

fn s3(rec: &mut Recorder, _: &SuiteParams) -> Outcome {
    let f4 = FiniteField::new(2, 2)?;
    rec.field(field_label(&f4));
    let g = G2::new(f4.clone());
    let sweep = f4.elements();
    let torus = [
        GeneratorFamily::Torus(Cocharacter(vec![1, 0])),
        GeneratorFamily::Torus(Cocharacter(vec![0, 1])),
    ];
    let fam = |roots: &[[i64; 2]]| {
        let mut v: Vec<GeneratorFamily<FiniteField>> = roots
            .iter()
            .flat_map(|&c| [GeneratorFamily::RootElement(g.root(c)), GeneratorFamily::RootElement(g.root(neg(c)))])
            .collect();
        v.extend(torus.iter().cloned());
        v
    };
    let cartan = [g.lie.h(0), g.lie.h(1)];

    let mut m_vecs = cartan.to_vec();
    for c in [A, A3B2] {
        m_vecs.push(g.e(c));
        m_vecs.push(g.e(neg(c)));
    }
    let m_span = g.span(&m_vecs)?;
    let m = reductive_pair_check(&g.lie, &fam(&[A, A3B2]), &m_span, &sweep)?;
    ensure(m.stable && m.complement_dim == 8, "(G, M) complement is Ad(M)-stable", || json!(m))?;
    rec.metric("g_m", &m);

    let mut l_vecs = cartan.to_vec();
    l_vecs.push(g.e(A));
    l_vecs.push(g.e(neg(A)));
    let l_span = g.span(&l_vecs)?;
    let l = reductive_pair_check(&g.lie, &fam(&[A]), &l_span, &sweep)?;
    ensure(l.stable && l.complement_dim == 10, "(G, L) complement is Ad(L)-stable", || json!(l))?;
    rec.metric("g_l", &l);

    let whole = Subspace::whole(f4.clone(), g.lie.dim());
    let all_roots: Vec<[i64; 2]> = POSITIVE.to_vec();
    let gg = reductive_pair_check(&g.lie, &fam(&all_roots), &whole, &sweep)?;
    ensure(gg.stable && gg.complement_dim == 0, "(G, G) is trivially a reductive pair", || json!(gg))?;

    let rs = g.rs();
    let sub = |cs: &[[i64; 2]]| -> Vec<Root> {
        cs.iter().flat_map(|&c| [g.root(c), g.root(neg(c))]).collect()
    };
    let closed_m = rs.is_closed_subsystem(&sub(&[A, A3B2]))?;
    let closed_l = rs.is_closed_subsystem(&sub(&[A]))?;
    ensure(closed_m, "roots of M form a closed subsystem", || json!(closed_m))?;
    ensure(closed_l, "roots of L form a closed subsystem", || json!(closed_l))?;
    let not_closed = rs.is_closed_subsystem(&sub(&[B, A3B]))?;
    ensure(!not_closed, "{+-b, +-(3a+b)} is not closed", || json!(not_closed))?;
    rec.metric("psi_m_closed", closed_m);
    rec.metric("psi_l_closed", closed_l);
    Ok(())
}

fn s4(rec: &mut Recorder, _: &SuiteParams) -> Outcome {
    let f2 = FiniteField::new(2, 1)?;
    rec.field(field_label(&f2));
    let g = G2::new(f2.clone());
    let one = 1u32;
    let gens = [A, neg(A), B, neg(B)]
        .iter()
        .map(|&c| g.kappa(c, &one))
        .collect::<Result<Vec<_>, _>>()?;
    let big = FiniteSubgroup::closure(&gens, CLOSURE_CAP)?;
    let q: usize = 2;
    let formula = q.pow(6) * (q.pow(6) - 1) * (q.pow(2) - 1);
    ensure(big.order() == formula, "|G(GF(2))| = q^6 (q^6 - 1)(q^2 - 1)", || {
        json!({"bfs": big.order(), "formula": formula})
    })?;
    rec.metric("g_order", big.order());
    rec.metric("g_bfs_levels", big.stats().bfs_levels);

    let m = m_points(&g, &[1])?;
    ensure(m.order() == 36, "|M(GF(2))| = 36", || json!(m.order()))?;
    let m_bfs = FiniteSubgroup::closure(&m.generators(), CLOSURE_CAP)?;
    ensure(m_bfs.same_elements(&m), "product and closure of M agree", || json!(m_bfs.order()))?;
    rec.metric("m_order", m.order());

    let z = g.z();
    let cz = big.fixing(std::slice::from_ref(&z))?;
    ensure(cz.same_elements(&m), "C_G(z) = M over GF(2)", || json!({"centralizer": cz.order(), "m": m.order()}))?;
    let all_fix = m.iter().all(|x| x.ad_apply(&z).map(|v| v == z).unwrap_or(false));
    ensure(all_fix, "M fixes z", || json!(null))?;
    rec.metric("centralizer_of_z_order", cz.order());

    let nm = big.normalizer_of(&m)?;
    ensure(nm.same_elements(&m), "N_G(M) = M over GF(2)", || json!({"normalizer": nm.order()}))?;
    rec.metric("normalizer_of_m_order", nm.order());

    // Lie side of the same statement: ker ad z.
    let kz = lie_centralizer(&g.lie, std::slice::from_ref(&z))?;
    let mut expected = vec![g.lie.h(0), g.lie.h(1)];
    for c in [A, A3B2] {
        expected.push(g.e(c));
        expected.push(g.e(neg(c)));
    }
    let expected = g.span(&expected)?;
    ensure(kz.equals(&expected)?, "ker ad z = t + u_{+-a} + u_{+-(3a+2b)}", || {
        json!(kz.basis_vectors().iter().map(|v| g.describe(v)).collect::<Vec<_>>())
    })?;
    rec.metric("ker_ad_z_dim", kz.dim());
    let all: Vec<_> = (0..g.lie.dim()).map(|i| g.lie.basis_vector(i)).collect();
    let centre = lie_centralizer(&g.lie, &all)?;
    rec.metric("centre_dim_mod_2", centre.dim());
    Ok(())
}

fn s5(rec: &mut Recorder, _: &SuiteParams) -> Outcome {
    let f4 = FiniteField::new(2, 2)?;
    rec.field(field_label(&f4));
    let g = G2::new(f4.clone());
    let w = omega(&f4)?;
    let h_gens = vec![g.s(A)?, g.alpha_vee(&w)?];
    let z = g.z();
    let y = g.e(B).add(&g.e(A3B))?;

    let l = g.span(&[g.lie.h(0), g.lie.h(1), g.e(A), g.e(neg(A))])?;
    let declared_l = g.span(std::slice::from_ref(&z))?;
    let in_l = separability_probe_within(&g.lie, &h_gens, &l, &declared_l, "H", "L")?;
    ensure(in_l.report.separable && in_l.computed.equals(&declared_l)?, "c_l(H) = k z, H separable in L", || {
        json!(in_l.report)
    })?;

    let top = g.root(A3B2);
    let declared_g = g.span(&[g.e(A3B2), g.e(neg(A3B2)), g.lie.coroot_vector(&top)?])?;
    ensure(declared_g.contains(&z)?, "Lie G_{3a+2b} contains z mod 2", || json!(null))?;
    ensure(!declared_g.contains(&y)?, "e_b + e_{3a+b} is not in Lie G_{3a+2b}", || json!(null))?;
    let in_g = separability_probe(&g.lie, &h_gens, &declared_g, "H", "G")?;
    let has_y = in_g.witnesses.contains(&y);
    ensure(!in_g.report.separable && has_y, "H not separable in G, witnessed by e_b + e_{3a+b}", || {
        json!(in_g.report)
    })?;
    ensure(in_g.report.dim_computed == 5 && in_g.report.dim_declared == 3, "dim c_g(H) = 5, declared 3", || {
        json!(in_g.report)
    })?;

    let h = FiniteSubgroup::closure(&h_gens, CLOSURE_CAP)?;
    let all_h: Vec<Elt> = h.iter().collect();
    let fixed_all = lie_fixed_space(&g.lie, &all_h)?;
    ensure(fixed_all.equals(&in_g.computed)?, "fixed space of H equals that of its generators", || json!(null))?;
    for wv in &in_g.witnesses {
        let ok = all_h.iter().all(|x| x.ad_apply(wv).map(|v| v == *wv).unwrap_or(false));
        ensure(ok, "witnesses are fixed by every element of H", || json!(g.describe(wv)))?;
    }

    // Ad kappa_{3a+b}(a)(e_b) = e_b + a e_{3a+2b}, and Ad u(a) fixes y, over GF(16).
    let f16 = FiniteField::new(2, 4)?;
    rec.field(field_label(&f16));
    let g16 = G2::new(f16.clone());
    let y16 = g16.e(B).add(&g16.e(A3B))?;
    for a in f16.elements() {
        let img = g16.kappa(A3B, &a)?.ad_apply(&g16.e(B))?;
        let want = g16.e(B).add(&g16.e(A3B2).scale(&a))?;
        ensure(img == want, "Ad k_{3a+b}(a) e_b = e_b + a e_{3a+2b}", || json!(f16.render(a)))?;
        let moved = g16.u(&a)?.ad_apply(&y16)?;
        ensure(moved == y16, "Ad u(a) y = y", || json!({"a": f16.render(a), "image": g16.describe(&moved)}))?;
    }

    rec.metric("separable_in_l", in_l.report.separable);
    rec.metric("separable_in_g", in_g.report.separable);
    rec.metric("dim_c_l_h", in_l.report.dim_computed);
    rec.metric("dim_c_g_h", in_g.report.dim_computed);
    rec.metric("dim_lie_c_g_h_declared", in_g.report.dim_declared);
    rec.witness("probe_l", &in_l.report);
    rec.witness("probe_g", &in_g.report);
    rec.witness(
        "c_g_h_basis",
        in_g.computed.basis_vectors().iter().map(|v| g.describe(v)).collect::<Vec<_>>(),
    );
    rec.witness("g_witnesses", in_g.witnesses.iter().map(|v| g.describe(v)).collect::<Vec<_>>());
    Ok(())
}

fn s6(rec: &mut Recorder, params: &SuiteParams) -> Outcome {
    let mut counts = BTreeMap::new();
    for &q in &params.qs {
        let f = ambient_with_order_three(q)?;
        rec.field(format!("{} (parameters in GF({q}))", field_label(&f)));
        let ps = gf_q_params(&f, q)?;
        let g = G2::new(f.clone());
        let m = m_points(&g, &ps)?;
        ensure(m.order() == m_order(q), "|M(GF(q))| = (q(q^2-1))^2", || json!({"q": q, "order": m.order()}))?;

        let t = g.alpha_vee(&omega(&f)?)?;
        let m1 = g.s(A)?;
        let m2 = t.mul(&g.kappa(A3B2, &1)?)?;
        let mut tuples = Vec::new();
        for a in &ps {
            let u = g.u(a)?;
            tuples.push(vec![u.conj(&m1)?, u.conj(&m2)?]);
        }

        for a in &ps {
            for b in &ps {
                let lhs = g.u(a)?.mul(&g.u(b)?.inv())?;
                let rhs = g.u(&f.add(*a, *b))?.mul(&g.kappa(A3B2, &f.add(f.mul(*a, *b), f.mul(*b, *b)))?)?;
                ensure(lhs == rhs, "u(a)u(b)^-1 = u(a+b) k_{3a+2b}(ab + b^2)", || {
                    json!({"q": q, "a": f.render(*a), "b": f.render(*b)})
                })?;
            }
        }

        let u_top = root_group_points(&g, A3B2, &ps)?;
        for (i, tup) in tuples.iter().enumerate() {
            let c = m.centralizer_of(tup)?;
            ensure(c.same_elements(&u_top), "C_M(H^_a) = U_{3a+2b}(GF(q))", || {
                json!({"q": q, "a": f.render(ps[i]), "centralizer": c.order()})
            })?;
        }

        let mut reps: Vec<usize> = Vec::new();
        for i in 0..tuples.len() {
            let mut joined = None;
            for &r in &reps {
                if let Some(x) = m.conjugator(&tuples[i], &tuples[r])? {
                    joined = Some((r, x));
                    break;
                }
            }
            match joined {
                Some((r, x)) => {
                    return Err(Failure {
                        assertion: "pairs for distinct parameters are not M-conjugate".into(),
                        operands: json!({"q": q, "a": f.render(ps[i]), "b": f.render(ps[r]), "conjugator": word(&x)}),
                    })
                }
                None => reps.push(i),
            }
        }
        ensure(reps.len() == q as usize, "class count = q", || json!({"q": q, "classes": reps.len()}))?;
        counts.insert(format!("q{q}"), json!({"classes": reps.len(), "m_order": m.order()}));
    }
    rec.metric("class_counts", counts);
    Ok(())
}

fn s7(rec: &mut Recorder, _: &SuiteParams) -> Outcome {
    let f4 = FiniteField::new(2, 2)?;
    rec.field(field_label(&f4));
    let g = G2::new(f4.clone());
    let m = m_points(&g, &f4.elements())?;
    let t = g.alpha_vee(&omega(&f4)?)?;
    let sa = g.s(A)?;
    let h_gens = vec![t.clone(), sa.clone()];
    let h = FiniteSubgroup::closure(&h_gens, CLOSURE_CAP)?;
    let datum = ParabolicDatum::new(g.rs(), lambda())?;
    let mut checked = 0;
    for a in f4.elements().into_iter().filter(|&a| a != 0) {
        let u = g.u(&a)?;
        let ha = vec![t.clone(), sa.mul(&g.kappa(A3B2, &f4.mul(a, a))?)?];
        let conj: Vec<Elt> = h_gens.iter().map(|x| u.conj(x)).collect::<Result<_, _>>()?;
        ensure(conj == ha, "u(a) H u(a)^-1 has generators t, s_a k_{3a+2b}(a^2)", || json!(f4.render(a)))?;
        for (x, want) in ha.iter().zip(&h_gens) {
            let c = datum.c_lambda(x);
            ensure(c.as_ref() == Some(want), "c_lambda(H_a generators) = H generators", || {
                json!({"a": f4.render(a), "generator": word(x)})
            })?;
        }
        ensure(!m.contains(&u), "u(a) is not in M(GF(4))", || json!(f4.render(a)))?;
        let x = m.conjugator(&ha, &h_gens)?;
        ensure(x.is_none(), "H_a generators not M-conjugate to H generators", || {
            json!({"a": f4.render(a), "conjugator": x.as_ref().map(word)})
        })?;
        // Stronger: no element of M maps the subgroup H_a onto H.
        let into = (0..m.order()).into_par_iter().find_first(|&i| {
            let x = m.get(i);
            let xi = x.inv();
            ha.iter().all(|y| x.mul(y).and_then(|p| p.mul(&xi)).map(|p| h.contains(&p)).unwrap_or(false))
        });
        ensure(into.is_none(), "H_a not M-conjugate to H as subgroups", || json!(f4.render(a)))?;
        let ha_group = FiniteSubgroup::closure(&ha, CLOSURE_CAP)?;
        ensure(ha_group.is_subset_of(&m) && ha_group.order() == 6, "H_a is a subgroup of M of order 6", || {
            json!(ha_group.order())
        })?;
        checked += 1;
    }
    rec.metric("parameters_checked", checked);
    rec.metric("m_order", m.order());
    Ok(())
}

fn s8(rec: &mut Recorder, params: &SuiteParams) -> Outcome {
    let mut per_q = BTreeMap::new();
    for &q in &params.qs {
        // S = alpha^vee of a primitive element; GF(q) itself is too small to
        // separate the weights of R_u(P_lambda).
        let f = match q {
            4 => FiniteField::new(2, 4)?,
            8 => FiniteField::new(2, 6)?,
            _ => return Err(ScenarioError::UnsupportedField(q).into()),
        };
        rec.field(format!("{} (parameters in GF({q}))", field_label(&f)));
        let ps = gf_q_params(&f, q)?;
        let g = G2::new(f.clone());
        let datum = ParabolicDatum::new(g.rs(), lambda())?;
        let s_gen = g.alpha_vee(&f.generator())?;
        let t = g.alpha_vee(&omega(&f)?)?;
        let sa = g.s(A)?;
        let target = FiniteSubgroup::closure(&[s_gen.clone(), sa.clone()], CLOSURE_CAP)?;
        for a in ps.iter().filter(|&&a| a != 0) {
            let gens = [t.clone(), sa.mul(&g.kappa(A3B2, &f.mul(*a, *a))?)?, s_gen.clone()];
            let images: Vec<Elt> = gens
                .iter()
                .map(|x| datum.c_lambda(x).ok_or_else(|| Failure {
                    assertion: "H_a S lies in P_lambda".into(),
                    operands: json!({"q": q, "a": f.render(*a), "generator": word(x)}),
                }))
                .collect::<Result<_, _>>()?;
            let img = FiniteSubgroup::closure(&images, CLOSURE_CAP)?;
            ensure(img.same_elements(&target), "c_lambda(H_a S) = <S, s_a>", || {
                json!({"q": q, "a": f.render(*a), "image_order": img.order(), "target_order": target.order()})
            })?;
        }
        let ru = unipotent_radical_points(&g, &ps)?;
        ensure(ru.order() == (q as usize).pow(5), "|R_u(P_lambda)(GF(q))| = q^5", || json!(ru.order()))?;
        let cs = ru.centralizer_of(std::slice::from_ref(&s_gen))?;
        let u_top = root_group_points(&g, A3B2, &ps)?;
        ensure(cs.same_elements(&u_top), "C_{R_u}(S) = U_{3a+2b}", || json!({"q": q, "centralizer": cs.order()}))?;
        let ct = ru.centralizer_of(std::slice::from_ref(&t))?;
        per_q.insert(
            format!("q{q}"),
            json!({
                "torus_order": f.size() - 1,
                "s_s_alpha_order": target.order(),
                "r_u_order": ru.order(),
                "centralizer_of_s": cs.order(),
                "centralizer_of_t_only": ct.order(),
            }),
        );
    }
    rec.metric("per_q", per_q);
    Ok(())
}

fn s9(rec: &mut Recorder, params: &SuiteParams) -> Outcome {
    // (i) certificate over k = F4(x), k0 = F4(x^2) = ker d/dx.
    let f4 = FiniteField::new(2, 2)?;
    let k = RatFuncField::new(f4.clone());
    rec.field(k.to_string());
    let g = G2::new(k.clone());
    let x = k.x();
    let x2 = k.try_mul(&x, &x)?;
    let t = g.alpha_vee(&k.constant(omega(&f4)?))?;
    let sa = g.s(A)?;
    let hx = [t.clone(), sa.mul(&g.kappa(A3B2, &x2)?)?];
    for (gi, h) in hx.iter().enumerate() {
        for v in h.matrix().data() {
            ensure(k.in_frobenius_subfield(v)?, "entries of H_x generators lie in F4(x^2)", || {
                json!({"generator": gi, "entry": k.render(v)})
            })?;
        }
    }
    let ux = g.u(&x)?;
    let moving: Vec<String> = ux
        .matrix()
        .data()
        .iter()
        .filter(|v| !k.in_frobenius_subfield(v).unwrap_or(true))
        .map(|v| k.render(v))
        .collect();
    ensure(!moving.is_empty(), "u(x) has an entry outside F4(x^2)", || json!(null))?;
    let conj: Vec<_> = [sa.clone(), t.clone()].iter().map(|h| ux.conj(h)).collect::<Result<_, _>>()?;
    ensure(conj[0] == hx[1] && conj[1] == hx[0], "u(x) H u(x)^-1 = H_x", || json!(null))?;
    rec.witness("u_x_entries_outside_k0", &moving);

    // (ii) finite fiber over GF(q).
    let mut per_q = BTreeMap::new();
    for &q in &params.qs {
        let f = ambient_with_order_three(q)?;
        rec.field(format!("{} (parameters in GF({q}))", field_label(&f)));
        let ps = gf_q_params(&f, q)?;
        let g = G2::new(f.clone());
        let datum = ParabolicDatum::new(g.rs(), lambda())?;
        let t = g.alpha_vee(&omega(&f)?)?;
        let sa = g.s(A)?;
        let ru = unipotent_radical_points(&g, &ps)?;
        let not_kernel = (0..ru.order()).into_par_iter().find_first(|&i| {
            datum.c_lambda(&ru.get(i)).is_none_or(|c| !c.is_identity())
        });
        ensure(not_kernel.is_none(), "c_lambda is trivial on R_u(P_lambda)", || json!(not_kernel))?;
        let mut fiber_sizes = Vec::new();
        for a in ps.iter().filter(|&&a| a != 0) {
            let ha = [t.clone(), sa.mul(&g.kappa(A3B2, &f.mul(*a, *a))?)?];
            let levi: Vec<_> = ha
                .iter()
                .map(|h| datum.c_lambda(h).map(|c| c.matrix().clone()))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Failure {
                    assertion: "H_a lies in P_lambda".into(),
                    operands: json!({"q": q, "a": f.render(*a)}),
                })?;
            // u^-1 h u lies in L iff h u = u c_lambda(h).
            let fiber: Vec<_> = (0..ru.order())
                .into_par_iter()
                .filter_map(|i| {
                    let u = ru.matrix(i);
                    ha.iter()
                        .zip(&levi)
                        .all(|(h, l)| intertwines(&f, &u, l, h.matrix()))
                        .then_some(u)
                })
                .collect();
            let fiber = FiniteSubgroup::from_elements(f.clone(), g.lie.dim(), fiber);
            let ua = g.u(a)?;
            let coset = ps
                .iter()
                .map(|y| ua.mul(&g.kappa(A3B2, y)?).map(|e| e.matrix().clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let coset = FiniteSubgroup::from_elements(f.clone(), g.lie.dim(), coset);
            ensure(fiber.same_elements(&coset), "fiber = u(a) U_{3a+2b}(GF(q))", || {
                json!({"q": q, "a": f.render(*a), "fiber": fiber.order(), "coset": coset.order()})
            })?;
            fiber_sizes.push(fiber.order());
        }
        per_q.insert(format!("q{q}"), json!({"candidates": ru.order(), "fiber_sizes": fiber_sizes}));
    }
    rec.metric("per_q", per_q);
    Ok(())
}

fn s10(rec: &mut Recorder, _: &SuiteParams) -> Outcome {
    let f4 = FiniteField::new(2, 2)?;
    rec.field(field_label(&f4));
    let g = G2::new(f4.clone());
    let ps = f4.elements();
    let m = m_points(&g, &ps)?;
    let h_gens = vec![g.s(A)?, g.alpha_vee(&omega(&f4)?)?];
    let h = FiniteSubgroup::closure(&h_gens, CLOSURE_CAP)?;
    let abelian = h_gens[0].commutes_with(&h_gens[1])?;
    ensure(h.order() == 6 && !abelian, "H is nonabelian of order 6", || json!(h.order()))?;
    let gt = sl2_points(&g, A3B2, &ps)?;
    let c = m.centralizer_of(&h_gens)?;
    ensure(c.same_elements(&gt), "C_M(H) = G_{3a+2b}(GF(4))", || json!({"centralizer": c.order(), "g_top": gt.order()}))?;
    let n = m.normalizer_of(&h)?;
    let hg = FiniteSubgroup::product(&h, &gt)?;
    ensure(n.same_elements(&hg), "N_M(H) = H G_{3a+2b}(GF(4))", || json!({"normalizer": n.order(), "product": hg.order()}))?;
    rec.metric("h_order", h.order());
    rec.metric("centralizer_order", c.order());
    rec.metric("normalizer_order", n.order());
    rec.metric("m_order", m.order());
    Ok(())
}
