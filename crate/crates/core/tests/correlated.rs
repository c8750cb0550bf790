mod common;

use common::*;
use gametheory::correlated::*;
use gametheory::gametensor::Game;
use gametheory::polytope::{Halfspace, VPolytope};

#[test]
fn bos_polytope() {
    let g = Game::bach_or_stravinsky();
    let ce = correlated_equilibria(&g).unwrap();
    assert_eq!(ce.dim().unwrap(), 3);
    let mut expected = vec![
        qs(&["1", "0", "0", "0"]),
        qs(&["0", "0", "0", "1"]),
        qs(&["2/7", "3/7", "0", "2/7"]),
        qs(&["3/8", "0", "1/4", "3/8"]),
        qs(&["6/25", "9/25", "4/25", "6/25"]),
    ];
    expected.sort();
    assert_eq!(ce.vertices().unwrap(), &expected[..]);
    assert_eq!(ce.f_vector().unwrap(), vec![5, 9, 6, 1]);
    let facets = &ce.facets().unwrap().facets;
    let mut want: Vec<Halfspace> = [
        ["0", "-1", "0", "0"],
        ["-3", "2", "0", "0"],
        ["0", "0", "-1", "0"],
        ["-2", "0", "3", "0"],
        ["0", "2", "0", "-3"],
        ["0", "0", "3", "-2"],
    ]
    .iter()
    .map(|r| Halfspace::new(qs(r), q("0")))
    .collect();
    want.sort();
    assert_eq!(facets, &want);
    assert!(ce.contains_point(&qs(&["6/25", "9/25", "4/25", "6/25"])).unwrap());
    for (p, pay) in [
        (qs(&["1", "0", "0", "0"]), qs(&["3", "2"])),
        (qs(&["0", "0", "0", "1"]), qs(&["2", "3"])),
        (qs(&["6/25", "9/25", "4/25", "6/25"]), qs(&["6/5", "6/5"])),
    ] {
        assert_eq!(joint_expected_payoffs(&g, &p).unwrap(), pay);
    }
    let v = VPolytope::new(4, expected).unwrap();
    assert!(v.contains_point(&qs(&["6/25", "9/25", "4/25", "6/25"])).unwrap());
}

#[test]
fn dominant_strategies_give_a_point() {
    let ce = correlated_equilibria(&prisoners_dilemma()).unwrap();
    assert_eq!(ce.vertices().unwrap(), &[qs(&["0", "0", "0", "1"])][..]);
    assert_eq!(ce.dim().unwrap(), 0);
}
