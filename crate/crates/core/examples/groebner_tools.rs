//! Gröbner bases, normal forms, saturation and real-root counting on
//! small hand-written ideals.

use gametheory::groebner::{
    dimension_and_degree, groebner_basis, saturate, sturm_count, Bound, GbConfig, UniPoly,
};
use gametheory::polyring::{parse_polynomial, CoefField, Ideal, MonomialOrder, Ring, VarName};

fn main() -> gametheory::Result<()> {
    let vars = ["x", "y", "z"].map(|v| VarName::Aux(v.into())).to_vec();
    let ring = Ring::new(vars, CoefField::Rationals, MonomialOrder::Grevlex)?;
    let p = |s: &str| parse_polynomial(&ring, s);
    let cfg = GbConfig::default();

    let ideal = Ideal::new(ring.clone(), vec![p("x^2 - y*z")?, p("x*y - z^2")?, p("x*z*y - 1")?])?;
    let gb = groebner_basis(&ideal, &cfg)?;
    for g in gb.polys() {
        println!("{g}");
    }
    println!("normal form of x^3: {}", gb.normal_form(&p("x^3")?)?);
    let dd = dimension_and_degree(&ideal, &cfg)?;
    println!("dim {} degree {:?}", dd.krull_dim, dd.degree);

    let reducible = Ideal::new(ring.clone(), vec![p("x*y")?, p("x*z")?])?;
    println!("(xy, xz) : x^inf = {}", saturate(&reducible, &p("x")?, &cfg)?);

    let f = UniPoly::from_i64(&[-2, 0, 1]);
    println!(
        "real roots of {f}: {} in total, {} in [0, 2]",
        sturm_count(&f, &Bound::NegInf, &Bound::PosInf)?,
        sturm_count(&f, &Bound::int(0), &Bound::int(2))?
    );
    Ok(())
}
