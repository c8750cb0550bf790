//! Strategies and checks shared by the property suites and the acceptance
//! harness.

#![allow(dead_code)]

use std::sync::Arc;

use gametheory::groebner::sturm::isolate_roots;
use gametheory::groebner::{groebner_basis, ideal_equals, quotient, saturate, sturm_count, Bound, GbConfig, UniPoly};
use gametheory::polyring::{parse_polynomial, CoefField, Ideal, Monomial, MonomialOrder, Polynomial, Ring, VarName};
use gametheory::polytope::linalg::{int, rank, Q};
use gametheory::polytope::{HPolytope, Halfspace, VPolytope};
use num::{BigInt, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub type Check = std::result::Result<(), TestCaseError>;

/// Deterministic runner used outside the `proptest!` macro.
pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

// ---- polytopes

pub fn point_cloud() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=3).prop_flat_map(|d| (Just(d), prop::collection::vec(prop::collection::vec(-4i64..=4, d), 1..8)))
}

/// A box `[-3, 3]^d` cut by a few halfspaces that keep the origin inside.
pub fn cut_box() -> impl Strategy<Value = (usize, Vec<(Vec<i64>, i64)>)> {
    (2usize..=3).prop_flat_map(|d| {
        (Just(d), prop::collection::vec((prop::collection::vec(-3i64..=3, d), 1i64..=6), 0..4))
    })
}

fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn box_hpolytope(d: usize, cuts: &[(Vec<i64>, i64)]) -> HPolytope {
    let mut ineqs = Vec::new();
    for k in 0..d {
        for s in [1, -1] {
            let mut a = vec![0; d];
            a[k] = s;
            ineqs.push(Halfspace::new(to_q(&a), int(3)));
        }
    }
    for (a, b) in cuts {
        ineqs.push(Halfspace::new(to_q(a), int(*b)));
    }
    HPolytope::new(d, ineqs, vec![]).unwrap()
}

/// Alternating sum of an f-vector that includes the polytope itself.
pub fn euler_sum(f: &[usize]) -> i64 {
    f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

fn check_vertices_are_tight(v: &VPolytope, h: &HPolytope) -> Check {
    let dim = v.dim();
    for x in v.vertices() {
        let tight: Vec<Vec<Q>> = h
            .inequalities()
            .iter()
            .filter(|f| f.is_tight_at(x))
            .map(|f| f.normal.clone())
            .chain(h.equations().iter().map(|e| e.normal.clone()))
            .collect();
        prop_assert!(rank(&tight) as i64 >= dim.min(h.ambient_dim() as i64));
        prop_assert!(h.contains_point(x).unwrap());
    }
    Ok(())
}

/// V -> H -> V gives back the vertex set, and the f-vector obeys Euler.
pub fn check_v_round_trip(d: usize, points: &[Vec<i64>]) -> Check {
    let v = VPolytope::convex_hull(d, points.iter().map(|p| to_q(p)).collect()).unwrap();
    let h = v.facets().unwrap().to_hpolytope(d).unwrap();
    for p in points {
        prop_assert!(h.contains_point(&to_q(p)).unwrap());
    }
    let back = h.vertices().unwrap();
    prop_assert_eq!(back.vertices(), v.vertices());
    check_vertices_are_tight(&v, &h)?;
    let f = v.f_vector().unwrap();
    prop_assert_eq!(f.len() as i64, v.dim() + 1);
    prop_assert_eq!(euler_sum(&f), 1);
    Ok(())
}

/// H -> V -> H -> V is stable and every V vertex satisfies the input.
pub fn check_h_round_trip(d: usize, cuts: &[(Vec<i64>, i64)]) -> Check {
    let h = box_hpolytope(d, cuts);
    let v = h.vertices().unwrap();
    prop_assert!(!v.is_empty());
    check_vertices_are_tight(&v, &h)?;
    let h2 = v.facets().unwrap().to_hpolytope(d).unwrap();
    let v2 = h2.vertices().unwrap();
    prop_assert_eq!(v2.vertices(), v.vertices());
    prop_assert!(h.contains_point(&vec![Q::zero(); d]).unwrap());
    prop_assert!(h2.contains_point(&vec![Q::zero(); d]).unwrap());
    prop_assert!(!h2.contains_point(&vec![int(4); d]).unwrap());
    prop_assert_eq!(euler_sum(&v.f_vector().unwrap()), 1);
    Ok(())
}

// ---- polynomials

pub fn small_ring(field: CoefField) -> Arc<Ring> {
    Ring::new(
        ["x", "y", "z"].iter().map(|v| VarName::Aux(v.to_string())).collect(),
        field,
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

pub type RawPoly = Vec<([u16; 3], i64)>;

pub fn raw_poly(max_deg: u16, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(([0..=max_deg, 0..=max_deg, 0..=max_deg], -5i64..=5), 1..=max_terms)
}

pub fn build(r: &Arc<Ring>, raw: &RawPoly) -> Polynomial {
    let terms = raw
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(e), r.field().from_i64(*c)))
        .collect();
    Polynomial::from_terms(r.clone(), terms)
}

pub fn field_choice() -> impl Strategy<Value = CoefField> {
    prop_oneof![Just(CoefField::Rationals), Just(CoefField::Prime(32003)), Just(CoefField::Prime(7))]
}

pub fn small_ideal() -> impl Strategy<Value = (CoefField, Vec<RawPoly>)> {
    (field_choice(), prop::collection::vec(raw_poly(2, 3), 1..=3))
}

fn ideal_of(field: CoefField, raws: &[RawPoly]) -> Ideal {
    let r = small_ring(field);
    let gens = raws.iter().map(|p| build(&r, p)).collect();
    Ideal::new(r, gens).unwrap()
}

/// Every S-pair of the reduced basis reduces to zero; the basis is monic,
/// reduced, and contains the generators.
pub fn check_s_pairs(field: CoefField, raws: &[RawPoly]) -> Check {
    let ideal = ideal_of(field, raws);
    let gb = groebner_basis(&ideal, &GbConfig::default()).unwrap();
    prop_assert!(gb.satisfies_buchberger_criterion());
    for g in ideal.gens() {
        prop_assert!(gb.contains(g).unwrap());
    }
    let lms = gb.leading_monomials();
    for (i, p) in gb.polys().iter().enumerate() {
        prop_assert!(p.leading_coeff().unwrap().is_one());
        for (m, _) in p.terms() {
            for (j, lm) in lms.iter().enumerate() {
                prop_assert!(i == j || !lm.divides(m), "basis not reduced");
            }
        }
    }
    Ok(())
}

/// The reduced basis does not depend on generator order or redundancy.
pub fn check_gb_canonical(field: CoefField, raws: &[RawPoly]) -> Check {
    let cfg = GbConfig::default();
    let a = ideal_of(field, raws);
    let mut shuffled = raws.to_vec();
    shuffled.reverse();
    let r = a.ring().clone();
    let mut gens: Vec<Polynomial> = shuffled.iter().map(|p| build(&r, p)).collect();
    gens.push(&gens[0] + &gens[gens.len() - 1]);
    let b = Ideal::new(r, gens).unwrap();
    let ga = groebner_basis(&a, &cfg).unwrap();
    let gb = groebner_basis(&b, &cfg).unwrap();
    prop_assert_eq!(ga.polys(), gb.polys());
    Ok(())
}

pub fn check_normal_form_linear(field: CoefField, raws: &[RawPoly], f: &RawPoly, g: &RawPoly) -> Check {
    let ideal = ideal_of(field, raws);
    let r = ideal.ring().clone();
    let gb = groebner_basis(&ideal, &GbConfig::default()).unwrap();
    let (f, g) = (build(&r, f), build(&r, g));
    let lhs = gb.normal_form(&(&f + &g)).unwrap();
    let rhs = &gb.normal_form(&f).unwrap() + &gb.normal_form(&g).unwrap();
    prop_assert_eq!(lhs, rhs);
    let c = r.field().from_i64(3);
    prop_assert_eq!(gb.normal_form(&f.scale(&c)).unwrap(), gb.normal_form(&f).unwrap().scale(&c));
    for b in gb.polys() {
        prop_assert!(gb.normal_form(&(&f * b)).unwrap().is_zero());
    }
    Ok(())
}

/// `sat(sat(I, f), f) = sat(I, f)` and `(J : f) = J` for the saturation.
pub fn check_saturation_idempotent(field: CoefField, raws: &[RawPoly], f: &RawPoly) -> Check {
    let cfg = GbConfig::default();
    let ideal = ideal_of(field, raws);
    let f = build(ideal.ring(), f);
    prop_assume!(!f.is_zero());
    let once = saturate(&ideal, &f, &cfg).unwrap();
    let twice = saturate(&once, &f, &cfg).unwrap();
    prop_assert!(ideal_equals(&once, &twice, &cfg).unwrap());
    if !once.gens().is_empty() {
        let q = quotient(&once, &f, &cfg).unwrap();
        prop_assert!(ideal_equals(&q, &once, &cfg).unwrap());
    }
    let gb = groebner_basis(&once, &cfg).unwrap();
    for g in ideal.gens() {
        prop_assert!(gb.contains(g).unwrap());
    }
    Ok(())
}

pub fn check_ring_axioms(field: CoefField, a: &RawPoly, b: &RawPoly, c: &RawPoly) -> Check {
    let r = small_ring(field);
    let (a, b, c) = (build(&r, a), build(&r, b), build(&r, c));
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert!((&a - &a).is_zero());
    prop_assert_eq!(&a * &r.one(), a.clone());
    Ok(())
}

pub fn check_print_parse(field: CoefField, a: &RawPoly) -> Check {
    let r = small_ring(field);
    let p = build(&r, a);
    let back = parse_polynomial(&r, &p.to_string()).unwrap();
    prop_assert_eq!(back, p);
    Ok(())
}

// ---- Sturm sequences

/// Products of linear factors with small rational roots, times a factor
/// with no real roots.
pub fn rooted_poly() -> impl Strategy<Value = (Vec<i64>, bool)> {
    (prop::collection::vec(-6i64..=6, 0..5), any::<bool>())
}

pub fn build_rooted(roots: &[i64], complex_pair: bool) -> UniPoly {
    // roots r/2 give factor (2x - r)
    let mut coeffs = vec![BigInt::from(1)];
    let mut factors: Vec<Vec<i64>> = roots.iter().map(|&r| vec![-r, 2]).collect();
    if complex_pair {
        factors.push(vec![1, 0, 1]);
    }
    for f in factors {
        let mut next = vec![BigInt::zero(); coeffs.len() + f.len() - 1];
        for (i, a) in coeffs.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                next[i + j] += a * BigInt::from(*b);
            }
        }
        coeffs = next;
    }
    UniPoly::new(coeffs.into_iter().map(Q::from_integer).collect())
}

/// Counts over adjacent intervals add up, and agree with the known roots.
pub fn check_sturm_additive(roots: &[i64], complex_pair: bool, a: i64, b: i64, c: i64) -> Check {
    let f = build_rooted(roots, complex_pair);
    let mut ends = [a, b, c];
    ends.sort();
    let [a, b, c] = ends;
    prop_assume!(a < b && b < c);
    let q = |v: i64| Q::new(v.into(), 4.into());
    let count = |x: i64, y: i64| sturm_count(&f, &Bound::Finite(q(x)), &Bound::Finite(q(y))).unwrap();
    let at_b = usize::from(f.eval(&q(b)).is_zero());
    prop_assert_eq!(count(a, c), count(a, b) + count(b, c) + at_b);
    let mut distinct = roots.to_vec();
    distinct.sort();
    distinct.dedup();
    let total = sturm_count(&f, &Bound::NegInf, &Bound::PosInf).unwrap();
    prop_assert_eq!(total, distinct.len());
    // roots r/2 lie in (a/4, c/4) iff a < 2r < c
    let inside = distinct.iter().filter(|&&r| a < 2 * r && 2 * r < c).count();
    prop_assert_eq!(count(a, c), inside);
    prop_assert_eq!(isolate_roots(&f, &q(a), &q(c)).unwrap().len(), inside);
    Ok(())
}

// ---- games

/// Formats whose correlated polytopes have face lattices small enough to
/// enumerate.
pub fn ce_format() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![Just(vec![2, 2]), Just(vec![2, 3]), Just(vec![3, 2]), Just(vec![2, 2, 2])]
}

pub fn game_format() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![
        Just(vec![2, 2]),
        Just(vec![2, 3]),
        Just(vec![3, 2]),
        Just(vec![2, 2, 2]),
        Just(vec![3, 2, 2]),
    ]
}

/// `K vec(p)` against `M_i (k_i, -1)^T` rebuilt from the payoffs.
pub fn check_konstanz_identity(game: &gametheory::gametensor::Game) -> Check {
    use gametheory::polyring::probability_ring;
    use gametheory::spohn::{konstanz_identity_holds, konstanz_matrix};
    let f = game.format();
    let ring = probability_ring(f, game.field(), "p").unwrap();
    prop_assert!(konstanz_identity_holds(&ring, game, "k").unwrap());
    let km = konstanz_matrix(&ring, game, "k").unwrap();
    let ext = km.ring.clone();
    let lhs = km.times_probability_vector();
    let mut row = 0;
    for i in 0..f.players() {
        let k_i = ext.var(ring.nvars() + i);
        for k in 0..f.dims()[i] {
            let mut expected = ext.zero();
            for (pos, j) in f.indices().enumerate().filter(|(_, j)| j[i] == k) {
                let term = &k_i - &ext.constant(game.payoff(i, &j));
                expected = &expected + &(&term * &ext.var(pos));
            }
            prop_assert_eq!(&lhs[row], &expected);
            prop_assert_eq!(km.row_labels[row], (i, k));
            row += 1;
        }
    }
    prop_assert_eq!(row, lhs.len());
    Ok(())
}
