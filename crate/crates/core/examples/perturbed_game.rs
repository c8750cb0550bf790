//! A payoff family affine in a parameter `e`, specialized at several
//! values. The number of totally mixed equilibria changes with `e`.

use gametheory::gamefile::GameFile;
use gametheory::groebner::GbConfig;
use gametheory::nash::{count_totally_mixed_nash, nash_eliminant};
use gametheory::polyring::parse_rational;

fn main() -> gametheory::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/perturbed.json");
    let family = GameFile::load(path.as_ref())?.to_parametric()?;
    let cfg = GbConfig::default();
    for e in ["-1", "-1/2", "0", "1/2", "1"] {
        let game = family.specialize(&parse_rational(e)?)?;
        println!(
            "e = {e:>4}: {} totally mixed, eliminant {}",
            count_totally_mixed_nash(&game, &cfg)?,
            nash_eliminant(&game, &cfg)?
        );
    }
    Ok(())
}
