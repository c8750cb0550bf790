//! Totally mixed Nash equilibria of a three-player game with binary
//! choices: the equilibrium ideal, its dimension and degree, the
//! eliminant and the certified count.

use gametheory::gametensor::{Format, Game, Tensor};
use gametheory::groebner::{dimension_and_degree, GbConfig};
use gametheory::nash::{count_totally_mixed_nash, nash_eliminant, nash_equilibrium_ideal};
use gametheory::polyring::{nash_equilibrium_ring, CoefField};

fn tensor(format: &Format, entries: &[([usize; 3], i64)]) -> gametheory::Result<Tensor> {
    let mut t = Tensor::zeros(format.clone(), CoefField::Rationals);
    for (idx, v) in entries {
        t.set_i64(idx, *v)?;
    }
    Ok(t)
}

fn main() -> gametheory::Result<()> {
    let f = Format::new(vec![2, 2, 2])?;
    let game = Game::new(vec![
        tensor(&f, &[([0, 0, 0], 1), ([0, 1, 0], -5), ([0, 0, 1], 3), ([0, 1, 1], 1)])?,
        tensor(&f, &[([0, 0, 0], 1), ([1, 0, 0], 3), ([0, 0, 1], -5), ([1, 0, 1], 1)])?,
        tensor(&f, &[([0, 0, 0], 1), ([0, 1, 0], 3), ([1, 0, 0], -5), ([1, 1, 0], 1)])?,
    ])?;
    let cfg = GbConfig::default();
    let ring = nash_equilibrium_ring(&f, CoefField::Rationals)?;
    let ideal = nash_equilibrium_ideal(&ring, &game)?;
    println!("{ideal}");
    let dd = dimension_and_degree(&ideal, &cfg)?;
    println!("dim {} degree {:?}", dd.krull_dim, dd.degree);
    println!("eliminant {}", nash_eliminant(&game, &cfg)?);
    println!("totally mixed equilibria {}", count_totally_mixed_nash(&game, &cfg)?);
    Ok(())
}
