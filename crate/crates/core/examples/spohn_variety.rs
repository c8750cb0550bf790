//! Spohn matrices and the Spohn ideal: Bach or Stravinsky over QQ, then the
//! codimension and degree for random three-player games over ZZ/32003.

use gametheory::gametensor::{Format, Game};
use gametheory::groebner::{dimension_and_degree, GbConfig};
use gametheory::polyring::{probability_ring, CoefField};
use gametheory::spohn::{spohn_ideal, spohn_matrices};

fn main() -> gametheory::Result<()> {
    let bos = Game::bach_or_stravinsky();
    let ring = probability_ring(bos.format(), CoefField::Rationals, "p")?;
    for m in spohn_matrices(&ring, &bos)? {
        println!("player {}:", m.player + 1);
        for [a, b] in &m.rows {
            println!("  {a}  |  {b}");
        }
    }
    println!("{}", spohn_ideal(&ring, &bos)?);

    let f = Format::new(vec![2, 2, 2])?;
    let field = CoefField::Prime(32003);
    let ring = probability_ring(&f, field, "p")?;
    let cfg = GbConfig::default();
    for seed in 0..3 {
        let game = Game::random(f.clone(), field, seed);
        let dd = dimension_and_degree(&spohn_ideal(&ring, &game)?, &cfg)?;
        println!("seed {seed}: codim {} degree {:?}", dd.codim(ring.nvars()), dd.degree);
    }
    Ok(())
}
