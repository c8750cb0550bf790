mod common;

use common::props::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn s_pairs_reduce_to_zero((field, gens) in small_ideal()) {
        check_s_pairs(field, &gens)?;
    }

    #[test]
    fn reduced_basis_is_canonical((field, gens) in small_ideal()) {
        check_gb_canonical(field, &gens)?;
    }

    #[test]
    fn normal_form_is_linear((field, gens) in small_ideal(), f in raw_poly(3, 4), g in raw_poly(3, 4)) {
        check_normal_form_linear(field, &gens, &f, &g)?;
    }

    #[test]
    fn ring_axioms(field in field_choice(), a in raw_poly(3, 4), b in raw_poly(3, 4), c in raw_poly(2, 3)) {
        check_ring_axioms(field, &a, &b, &c)?;
    }

    #[test]
    fn print_parse_round_trip(field in field_choice(), a in raw_poly(4, 6)) {
        check_print_parse(field, &a)?;
    }
}
