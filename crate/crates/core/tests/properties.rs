use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use chevalley_core::centralizer::{lie_fixed_space, Subspace};
use chevalley_core::chevalley::{ChevalleyForm, LieAlgebra};
use chevalley_core::field::{FiniteField, Poly, RatFuncField};
use chevalley_core::group::{FiniteSubgroup, GroupElement, ParabolicDatum};
use chevalley_core::rootsystem::Cocharacter;

type Elt = GroupElement<FiniteField>;

const FIELDS: [(u32, u32); 7] = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 1), (7, 2)];

fn form() -> Arc<ChevalleyForm> {
    static F: OnceLock<Arc<ChevalleyForm>> = OnceLock::new();
    F.get_or_init(|| Arc::new(ChevalleyForm::new("G2".parse().unwrap()).unwrap())).clone()
}

fn lie(f: &FiniteField) -> LieAlgebra<FiniteField> {
    LieAlgebra::new(form(), f.clone())
}

fn kappa(l: &LieAlgebra<FiniteField>, c: [i64; 2], a: u32) -> Elt {
    let r = l.form().root_system().root(&c).unwrap();
    GroupElement::root_element_raw(l, &r, &a).unwrap()
}

fn field_and_elems(n: usize) -> impl Strategy<Value = (FiniteField, Vec<u32>)> {
    (0..FIELDS.len()).prop_flat_map(move |i| {
        let (p, m) = FIELDS[i];
        let f = FiniteField::new(p, m).unwrap();
        let q = f.size();
        (Just(f), prop::collection::vec(0..q, n))
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..4, 0..=max_deg + 1)
}

/// Roots of G2 with nonnegative weight under lambda = (1, 2), i.e. in P_lambda.
const P_ROOTS: [[i64; 2]; 7] = [[1, 0], [-1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

fn p_element(l: &LieAlgebra<FiniteField>, word: &[(usize, u32)]) -> Elt {
    let mut g = GroupElement::identity(l);
    for &(i, a) in word {
        let x = if i < P_ROOTS.len() {
            kappa(l, P_ROOTS[i], a)
        } else {
            let a = if a == 0 { 1 } else { a };
            GroupElement::torus_element(l, &Cocharacter(if i % 2 == 0 { vec![1, 0] } else { vec![0, 1] }), &a).unwrap()
        };
        g = g.mul(&x).unwrap();
    }
    g
}

fn p_word() -> impl Strategy<Value = Vec<(usize, u32)>> {
    prop::collection::vec((0usize..P_ROOTS.len() + 2, 0u32..4), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_field_axioms((f, v) in field_and_elems(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.mul(a, 1), a);
        match f.inv(a) {
            Some(i) => prop_assert_eq!(f.mul(a, i), 1),
            None => prop_assert_eq!(a, 0),
        }
        // Frobenius is additive.
        let p = f.characteristic() as i64;
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
        prop_assert_eq!(f.pow(a, f.size() as i64), a);
    }

    #[test]
    fn leibniz_rule(n1 in poly(6), d1 in poly(4), n2 in poly(6), d2 in poly(4)) {
        let k = RatFuncField::new(FiniteField::new(2, 2).unwrap());
        let den = |d: Vec<u32>| { let p = Poly::from_coeffs(d); if p.is_zero() { Poly::constant(1) } else { p } };
        let a = k.fraction(Poly::from_coeffs(n1), den(d1)).unwrap();
        let b = k.fraction(Poly::from_coeffs(n2), den(d2)).unwrap();
        let lhs = k.derivative(&k.try_mul(&a, &b).unwrap()).unwrap();
        let rhs = k.try_add(
            &k.try_mul(&k.derivative(&a).unwrap(), &b).unwrap(),
            &k.try_mul(&a, &k.derivative(&b).unwrap()).unwrap(),
        ).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = k.derivative(&k.try_add(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(sum, k.try_add(&k.derivative(&a).unwrap(), &k.derivative(&b).unwrap()).unwrap());
    }

    #[test]
    fn derivative_kernel_is_even_part(coeffs in poly(10), den in poly(4)) {
        let k = RatFuncField::new(FiniteField::new(2, 2).unwrap());
        let even = |c: &[u32]| -> Vec<u32> {
            let mut v = vec![0; 2 * c.len()];
            for (i, x) in c.iter().enumerate() { v[2 * i] = *x; }
            v
        };
        let d = Poly::from_coeffs(even(&den));
        let d = if d.is_zero() { Poly::constant(1) } else { d };
        let a = k.fraction(Poly::from_coeffs(even(&coeffs)), d).unwrap();
        prop_assert!(k.in_frobenius_subfield(&a).unwrap());
        // Adding x moves it out of F4(x^2).
        let b = k.try_add(&a, &k.x()).unwrap();
        prop_assert!(!k.in_frobenius_subfield(&b).unwrap());
        let p = Poly::from_coeffs(coeffs.clone());
        let odd_free = p.0.iter().enumerate().all(|(i, c)| i % 2 == 0 || *c == 0);
        let q = k.fraction(p, Poly::constant(1)).unwrap();
        prop_assert_eq!(k.in_frobenius_subfield(&q).unwrap(), odd_free);
    }

    #[test]
    fn subspace_dimension_identity(u in prop::collection::vec(prop::collection::vec(0u32..4, 6), 0..5),
                                   w in prop::collection::vec(prop::collection::vec(0u32..4, 6), 0..5)) {
        let f = FiniteField::new(2, 2).unwrap();
        let su = Subspace::span(f.clone(), 6, u).unwrap();
        let sw = Subspace::span(f.clone(), 6, w).unwrap();
        let sum = su.sum(&sw).unwrap();
        let meet = su.intersect(&sw).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), su.dim() + sw.dim());
        prop_assert!(meet.is_subspace_of(&su).unwrap() && meet.is_subspace_of(&sw).unwrap());
        prop_assert!(su.is_subspace_of(&sum).unwrap());
        for b in meet.basis() {
            prop_assert!(su.contains_coeffs(b).unwrap() && sw.contains_coeffs(b).unwrap());
        }
    }

    #[test]
    fn closure_ignores_generator_order(perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(), extra in 0usize..6) {
        let f = FiniteField::new(2, 1).unwrap();
        let l = lie(&f);
        let base = [[1, 0], [-1, 0], [3, 2], [-3, -2], [1, 0], [3, 2]];
        let gens: Vec<Elt> = perm.iter().map(|&i| kappa(&l, base[i], 1)).collect();
        let mut more = gens.clone();
        more.push(gens[extra].clone());
        let g1 = FiniteSubgroup::closure(&gens, 1000).unwrap();
        let g2 = FiniteSubgroup::closure(&more, 1000).unwrap();
        prop_assert_eq!(g1.order(), 36);
        prop_assert!(g1.same_elements(&g2));
        let sorted: Vec<Elt> = [[1, 0], [-1, 0], [3, 2], [-3, -2]].iter().map(|&c| kappa(&l, c, 1)).collect();
        prop_assert!(FiniteSubgroup::closure(&sorted, 1000).unwrap().same_elements(&g1));
    }

    #[test]
    fn c_lambda_is_a_homomorphism(x in p_word(), y in p_word()) {
        let f = FiniteField::new(2, 2).unwrap();
        let l = lie(&f);
        let datum = ParabolicDatum::new(l.form().root_system(), Cocharacter(vec![1, 2])).unwrap();
        let (gx, gy) = (p_element(&l, &x), p_element(&l, &y));
        let cx = datum.c_lambda(&gx).expect("in P");
        let cy = datum.c_lambda(&gy).expect("in P");
        let cxy = datum.c_lambda(&gx.mul(&gy).unwrap()).expect("in P");
        prop_assert_eq!(cxy, cx.mul(&cy).unwrap());
        prop_assert!(datum.in_levi(&cx));
        prop_assert!(datum.split(&gx).unipotent_ok);
    }

    #[test]
    fn conjugator_is_symmetric(i in 0usize..36, j in 0usize..36, k in 0usize..36) {
        let f = FiniteField::new(2, 1).unwrap();
        let l = lie(&f);
        let gens: Vec<Elt> = [[1, 0], [-1, 0], [3, 2], [-3, -2]].iter().map(|&c| kappa(&l, c, 1)).collect();
        let m = FiniteSubgroup::closure(&gens, 1000).unwrap();
        let a = vec![m.get(i), m.get(j)];
        let x = m.get(k);
        let b: Vec<Elt> = a.iter().map(|y| x.conj(y).unwrap()).collect();
        let fwd = m.conjugator(&a, &b).unwrap().expect("b is a conjugate of a");
        let back = m.conjugator(&b, &a).unwrap().expect("relation is symmetric");
        for (u, v) in a.iter().zip(&b) {
            prop_assert_eq!(&fwd.conj(u).unwrap(), v);
            prop_assert_eq!(&back.conj(v).unwrap(), u);
        }
    }

    #[test]
    fn fixed_space_needs_only_generators(picks in prop::collection::vec((0usize..4, 1u32..4), 1..4)) {
        let f = FiniteField::new(2, 2).unwrap();
        let l = lie(&f);
        let roots = [[1, 0], [-1, 0], [3, 2], [-3, -2]];
        let gens: Vec<Elt> = picks.iter().map(|&(i, a)| kappa(&l, roots[i], a)).collect();
        let group = FiniteSubgroup::closure(&gens, 10_000).unwrap();
        let all: Vec<Elt> = group.iter().collect();
        let from_gens = lie_fixed_space(&l, &gens).unwrap();
        let from_all = lie_fixed_space(&l, &all).unwrap();
        prop_assert!(from_gens.equals(&from_all).unwrap());
    }
}
