mod common;

use gametheory::gametensor::{Format, Game};
use gametheory::groebner::{dimension_and_degree, GbConfig};
use gametheory::polyring::{probability_ring, CoefField};
use gametheory::spohn::*;

#[test]
fn random_spohn_ideals_have_expected_codim_and_degree() {
    let f = Format::new(vec![2, 2, 2]).unwrap();
    let field = CoefField::prime(32003).unwrap();
    let r = probability_ring(&f, field, "p").unwrap();
    for seed in 0..10 {
        let g = Game::random(f.clone(), field, seed);
        let i = spohn_ideal(&r, &g).unwrap();
        assert_eq!(i.gens().len(), 3);
        assert!(i.gens().iter().all(|p| p.is_homogeneous() && p.total_degree() == Some(2)));
        let dd = dimension_and_degree(&i, &GbConfig::default()).unwrap();
        assert_eq!(dd.codim(8), 3, "seed {seed}");
        assert_eq!(dd.degree, Some(8), "seed {seed}");
    }
}
