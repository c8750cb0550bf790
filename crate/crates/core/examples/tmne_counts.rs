//! Generic numbers of totally mixed Nash equilibria, counted two ways:
//! by the coefficient formula and by enumerating block derangements.

use gametheory::gametensor::Format;
use gametheory::nash::{block_derangements, number_tmne};

fn main() -> gametheory::Result<()> {
    for dims in [vec![2, 2], vec![2, 2, 2], vec![3, 3, 3], vec![2, 2, 2, 2], vec![2, 3, 4]] {
        let f = Format::new(dims)?;
        println!(
            "{f}: {} equilibria, {} block derangements",
            number_tmne(&f)?,
            block_derangements(&f).len()
        );
    }
    let f = Format::new(vec![3, 3, 3])?;
    for d in block_derangements(&f).iter().take(3) {
        println!("{:?}", d.sets);
    }
    Ok(())
}
