mod common;

use common::*;
use gametheory::groebner::{dimension_and_degree, DimDegree, GbConfig};
use gametheory::nash::*;
use gametheory::polyring::{nash_equilibrium_ring, Scalar};
use std::collections::HashMap;

#[test]
fn exercise_game_ideal() {
    let g = exercise_game();
    let r = nash_equilibrium_ring(g.format(), g.field()).unwrap();
    let i = nash_equilibrium_ideal(&r, &g).unwrap();
    let cfg = GbConfig::default();
    assert_eq!(dimension_and_degree(&i, &cfg).unwrap(), DimDegree { krull_dim: 0, degree: Some(2) });
    let half: HashMap<_, _> = r.vars().iter().map(|v| (v.clone(), sc("1/2"))).collect();
    for gen in i.gens() {
        assert_eq!(gen.evaluate(&half).unwrap(), Scalar::Rational(q("0")));
    }
    assert_eq!(count_totally_mixed_nash(&g, &cfg).unwrap(), 1);
}

#[test]
fn perturbed_counts() {
    let p = perturbed_exercise_game();
    let cfg = GbConfig::default();
    for (e, expected, elim) in [
        ("-1", 2, "p_{2,1}^2 - 7/6*p_{2,1} + 1/4"),
        ("0", 1, "p_{2,1}^2 - p_{2,1} + 1/4"),
        ("1", 0, "p_{2,1}^2 - 5/6*p_{2,1} + 1/4"),
    ] {
        let g = p.specialize(&q(e)).unwrap();
        assert_eq!(nash_eliminant(&g, &cfg).unwrap().to_string(), elim, "e = {e}");
        assert_eq!(count_totally_mixed_nash(&g, &cfg).unwrap(), expected, "e = {e}");
    }
}
