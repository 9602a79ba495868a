use std::collections::{BTreeSet, HashSet};

use chevalley_core::rootsystem::{CartanType, RootSystem};

const TYPES: [(CartanType, usize, usize); 7] = [
    (CartanType::A, 1, 8),
    (CartanType::B, 2, 8),
    (CartanType::C, 2, 8),
    (CartanType::D, 4, 8),
    (CartanType::E, 6, 8),
    (CartanType::F, 4, 4),
    (CartanType::G, 2, 2),
];

/// Cartan matrix `C[i][j] = <alpha_j, alpha_i^vee>` from the Dynkin diagram,
/// Bourbaki numbering.
fn oracle_cartan(kind: CartanType, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind {
        CartanType::A | CartanType::B | CartanType::C | CartanType::F | CartanType::G => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        CartanType::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
        }
    }
    match kind {
        CartanType::B => c[n - 1][n - 2] = -2,
        CartanType::C => c[n - 2][n - 1] = -2,
        CartanType::F => c[2][1] = -2,
        CartanType::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Positive roots by simple-root strings: for a positive root `g` and simple
/// `a_i`, `g + a_i` is a root iff `r - <g, a_i^vee> > 0` where `r` is the
/// length of the string below `g`.
fn oracle_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let pair = |g: &[i64], i: usize| -> i64 { (0..n).map(|j| g[j] * cartan[i][j]).sum() };
    let mut found: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        found.extend(layer.iter().cloned());
        all.extend(layer.iter().cloned());
        let mut next = BTreeSet::new();
        for g in &layer {
            for i in 0..n {
                let mut r = 0;
                let mut below = g.clone();
                loop {
                    below[i] -= 1;
                    if !found.contains(&below) {
                        break;
                    }
                    r += 1;
                }
                if r - pair(g, i) > 0 {
                    let mut up = g.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    all
}

fn expected_count(kind: CartanType, n: usize) -> usize {
    match kind {
        CartanType::A => n * (n + 1),
        CartanType::B | CartanType::C => 2 * n * n,
        CartanType::D => 2 * n * (n - 1),
        CartanType::E => [72, 126, 240][n - 6],
        CartanType::F => 48,
        CartanType::G => 12,
    }
}

fn prime_divisors(mut x: i64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut p = 2;
    while x > 1 {
        while x % p == 0 {
            out.insert(p as u64);
            x /= p;
        }
        p += 1;
    }
    out
}

fn all_systems() -> impl Iterator<Item = (CartanType, usize, RootSystem)> {
    TYPES.iter().flat_map(|&(kind, lo, hi)| {
        (lo..=hi).map(move |n| (kind, n, RootSystem::new(kind, n).expect("supported")))
    })
}

#[test]
fn cartan_matrices_match_dynkin_diagrams() {
    for (kind, n, rs) in all_systems() {
        assert_eq!(rs.cartan_matrix(), oracle_cartan(kind, n).as_slice(), "{kind}{n}");
    }
}

#[test]
fn root_sets_match_string_oracle() {
    for (kind, n, rs) in all_systems() {
        let oracle: BTreeSet<Vec<i64>> = oracle_positive_roots(&oracle_cartan(kind, n)).into_iter().collect();
        let ours: BTreeSet<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(ours, oracle, "{kind}{n}");
        assert_eq!(rs.roots().len(), expected_count(kind, n), "{kind}{n}");
        assert_eq!(rs.roots().len(), 2 * rs.num_positive());
    }
}

#[test]
fn e8_has_240_roots() {
    let rs: RootSystem = "E8".parse().unwrap();
    assert_eq!(rs.roots().len(), 240);
    assert_eq!(oracle_positive_roots(&oracle_cartan(CartanType::E, 8)).len(), 120);
}

#[test]
fn bad_primes_divide_highest_root_coefficients() {
    for (kind, n, rs) in all_systems() {
        let roots = oracle_positive_roots(&oracle_cartan(kind, n));
        let highest = roots.iter().max_by_key(|r| r.iter().sum::<i64>()).unwrap();
        let bad: BTreeSet<u64> = highest.iter().flat_map(|&c| prime_divisors(c)).collect();
        let c = rs.classify_primes();
        assert_eq!(c.bad, bad, "{kind}{n}");
        let type_a = (kind == CartanType::A).then_some(n as u64 + 1);
        assert_eq!(c.type_a_order, type_a);
        for p in [2u64, 3, 5, 7, 11] {
            let very_good = !bad.contains(&p) && type_a.is_none_or(|m| m % p != 0);
            assert_eq!(c.is_very_good(p), very_good, "{kind}{n} p={p}");
        }
    }
}

#[test]
fn pairings_are_weyl_invariant() {
    for label in ["G2", "B2", "C3", "A3"] {
        let rs: RootSystem = label.parse().unwrap();
        let roots = rs.roots();
        for a in roots {
            for g in roots {
                for d in roots {
                    let before = rs.pairing(g, d).unwrap();
                    let after = rs.pairing(&rs.reflect(a, g).unwrap(), &rs.reflect(a, d).unwrap()).unwrap();
                    assert_eq!(before, after, "{label}: s_{a} on <{g},{d}^vee>");
                }
            }
        }
        for g in roots {
            assert_eq!(rs.pairing(g, g).unwrap(), 2);
            for d in roots {
                let (x, y) = (rs.pairing(g, d).unwrap(), rs.pairing(d, g).unwrap());
                assert!(x * y <= 4 && (x == 0) == (y == 0), "{label}: {g}, {d}");
            }
        }
    }
}

#[test]
fn g2_coroot_reflection() {
    let rs: RootSystem = "G2".parse().unwrap();
    let a = rs.root(&[1, 0]).unwrap();
    let b = rs.root(&[0, 1]).unwrap();
    let bv = rs.coroot(&b).unwrap();
    // alpha^vee is long in the dual system, beta^vee short; s_a(b^vee) = a^vee + b^vee.
    assert_eq!(rs.coroot_reflect(&a, &bv).unwrap().coeffs(), &[1, 1]);
    assert_eq!(rs.coroot(&rs.root(&[3, 1]).unwrap()).unwrap().coeffs(), &[1, 1]);
}
