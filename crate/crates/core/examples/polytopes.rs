//! Vertex and facet enumeration for a small polytope given by inequalities.

use gametheory::polytope::linalg::int;
use gametheory::polytope::{HPolytope, Halfspace};
use gametheory::polyring::format_rational;

fn main() -> gametheory::Result<()> {
    // the square [0,1]^2 cut by x + y <= 3/2
    let h = |a: i64, b: i64, rhs: Option<(i64, i64)>| {
        let r = rhs.map_or(int(0), |(n, d)| int(n) / int(d));
        Halfspace::new(vec![int(a), int(b)], r)
    };
    let square = HPolytope::new(
        2,
        vec![
            h(-1, 0, None),
            h(0, -1, None),
            h(1, 0, Some((1, 1))),
            h(0, 1, Some((1, 1))),
            h(1, 1, Some((3, 2))),
        ],
        vec![],
    )?;
    let v = square.vertices()?;
    for p in v.vertices() {
        let coords: Vec<String> = p.iter().map(format_rational).collect();
        println!("({})", coords.join(", "));
    }
    for f in &v.facets()?.facets {
        println!("{f}");
    }
    println!("f-vector {:?}", v.f_vector()?);
    Ok(())
}
