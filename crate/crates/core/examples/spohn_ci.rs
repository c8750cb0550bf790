//! Spohn CI variety of a random three-player game under the path graph
//! 1 - 2 - 3.

use std::time::Instant;

use gametheory::ci::{global_markov, progress_line, spohn_ci, PlayerGraph};
use gametheory::gametensor::{Format, Game};
use gametheory::groebner::{dimension_and_degree, GbConfig};
use gametheory::polyring::{probability_ring, CoefField};

fn main() -> gametheory::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let format = Format::new(vec![2, 2, 2])?;
    let field = CoefField::Prime(32003);
    let game = Game::random(format.clone(), field, seed);
    let ring = probability_ring(&format, field, "p")?;
    let graph = PlayerGraph::parse("1-2,2-3", 3, None)?;
    let statements = global_markov(&graph);
    let cfg = GbConfig::from_env();

    let start = Instant::now();
    let j = spohn_ci(&ring, &game, &statements, &cfg, &mut |phase, k| {
        eprintln!("{}", progress_line(phase, k))
    })?;
    let dd = dimension_and_degree(&j, &cfg)?;
    println!("generators: {}", j.gens().len());
    println!("codim {} degree {:?}", dd.codim(ring.nvars()), dd.degree);
    println!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
