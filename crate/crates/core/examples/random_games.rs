//! Seeded random games over QQ and ZZ/p, written as game files.

use gametheory::gamefile::GameFile;
use gametheory::gametensor::{Format, Game};
use gametheory::polyring::CoefField;

fn main() -> gametheory::Result<()> {
    let f = Format::new(vec![2, 3])?;
    let over_q = Game::random(f.clone(), CoefField::Rationals, 7);
    println!("{}", GameFile::from_game(&over_q).to_json());
    let over_p = Game::random(f, CoefField::prime(32003)?, 7);
    assert_eq!(over_p, Game::random(over_p.format().clone(), over_p.field(), 7));
    println!("{}", GameFile::from_game(&over_p).to_json());
    Ok(())
}
