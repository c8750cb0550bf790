//! The Konstanz matrix of Bach or Stravinsky, and its product with the
//! probability vector.

use gametheory::gametensor::Game;
use gametheory::polyring::{probability_ring, CoefField};
use gametheory::spohn::{konstanz_identity_holds, konstanz_matrix};

fn main() -> gametheory::Result<()> {
    let game = Game::bach_or_stravinsky();
    let ring = probability_ring(game.format(), CoefField::Rationals, "p")?;
    let k = konstanz_matrix(&ring, &game, "k")?;
    for row in &k.rows {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("{}", cells.join("  "));
    }
    for entry in k.times_probability_vector() {
        println!("{entry}");
    }
    println!("identity holds: {}", konstanz_identity_holds(&ring, &game, "k")?);
    Ok(())
}
