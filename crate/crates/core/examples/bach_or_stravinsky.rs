//! Correlated equilibria of Bach or Stravinsky: vertices, facets,
//! f-vector and the payoff pairs at the vertices.

use gametheory::correlated::{correlated_equilibria, joint_expected_payoffs};
use gametheory::gametensor::Game;
use gametheory::polyring::format_rational;

fn main() -> gametheory::Result<()> {
    let game = Game::bach_or_stravinsky();
    let ce = correlated_equilibria(&game)?;
    println!("dimension {}", ce.dim()?);
    println!("f-vector {:?}", ce.f_vector()?);
    for v in ce.vertices()? {
        let point: Vec<String> = v.iter().map(format_rational).collect();
        let pay: Vec<String> = joint_expected_payoffs(&game, v)?.iter().map(format_rational).collect();
        println!("vertex ({})  payoffs ({})", point.join(", "), pay.join(", "));
    }
    let fd = ce.facets()?;
    for h in &fd.facets {
        println!("{h}");
    }
    for e in &fd.hull {
        println!("{e}");
    }
    Ok(())
}
