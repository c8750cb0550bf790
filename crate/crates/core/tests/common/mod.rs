#![allow(dead_code)]

pub mod props;

use gametheory::gametensor::{Format, Game, Tensor};
use gametheory::nash::ParametricGame;
use gametheory::polyring::{parse_rational, CoefField, Scalar};
use num::BigRational;

pub fn q(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

pub fn qs(v: &[&str]) -> Vec<BigRational> {
    v.iter().map(|s| q(s)).collect()
}

pub fn sc(s: &str) -> Scalar {
    Scalar::Rational(q(s))
}

pub fn tensor(format: &Format, entries: &[(&[usize], i64)]) -> Tensor {
    let mut t = Tensor::zeros(format.clone(), CoefField::Rationals);
    for (idx, v) in entries {
        t.set_i64(idx, *v).unwrap();
    }
    t
}

/// The three-player exercise game with a unique, double, totally mixed
/// equilibrium at the all-1/2 point.
pub fn exercise_game() -> Game {
    perturbed_exercise_game().specialize(&q("0")).unwrap()
}

/// The exercise game with player 0's nonzero payoffs shifted by `e`.
pub fn perturbed_exercise_game() -> ParametricGame {
    let f = Format::new(vec![2, 2, 2]).unwrap();
    let e = |v: &[(&[usize], &str)]| -> Vec<(Vec<usize>, String)> {
        v.iter().map(|(i, s)| (i.to_vec(), s.to_string())).collect()
    };
    ParametricGame::from_expressions(
        &f,
        &[
            e(&[
                (&[0, 0, 0], "1+e"),
                (&[0, 1, 0], "-5+e"),
                (&[0, 0, 1], "3+e"),
                (&[0, 1, 1], "1+e"),
            ]),
            e(&[(&[0, 0, 0], "1"), (&[1, 0, 0], "3"), (&[0, 0, 1], "-5"), (&[1, 0, 1], "1")]),
            e(&[(&[0, 0, 0], "1"), (&[0, 1, 0], "3"), (&[1, 0, 0], "-5"), (&[1, 1, 0], "1")]),
        ],
    )
    .unwrap()
}

pub fn prisoners_dilemma() -> Game {
    let f = Format::new(vec![2, 2]).unwrap();
    let a = tensor(&f, &[(&[0, 0], 3), (&[0, 1], 0), (&[1, 0], 5), (&[1, 1], 1)]);
    let b = tensor(&f, &[(&[0, 0], 3), (&[0, 1], 5), (&[1, 0], 0), (&[1, 1], 1)]);
    Game::new(vec![a, b]).unwrap()
}
