mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_alexander::fox::{fox_derivative, fox_fundamental_check};
use twisted_alexander::laurent::{equal_up_to_unit, UnitClass};
use twisted_alexander::presentation::{torus_link_presentation, GroupRingElement, TorusLinkParams, Word};
use twisted_alexander::repn::{
    check_trace_quadratic, extract_coordinates, from_character_case11, sample_interior_point,
    symmetric_power_matrix, torus_representation,
};
use twisted_alexander::scalars::{Cyclotomic, CyclotomicField, Precision, Scalar};
use twisted_alexander::twisted::wada_invariant;

fn letters() -> impl Strategy<Value = Letters> {
    prop::collection::vec((0..4usize, prop_oneof![Just(1i64), Just(-1i64)]), 0..24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fox_matches_letterwise_product_rule(w in letters()) {
        let word = word_of(&w);
        for j in 0..4 {
            prop_assert_eq!(fox_derivative(&word, j, 4).unwrap(), naive_fox(&w, j));
        }
    }

    #[test]
    fn fox_fundamental_identity(w in letters()) {
        let word = word_of(&w);
        prop_assert!(fox_fundamental_check(&word));
        // Σ_j (∂w/∂x_j)(x_j − 1) = w − 1 assembled by hand
        let mut lhs = GroupRingElement::zero();
        for j in 0..4 {
            let xj = GroupRingElement::from_terms([(Word::generator(j), 1), (Word::empty(), -1)]);
            lhs = lhs.add(&naive_fox(&w, j).mul(&xj));
        }
        let rhs = GroupRingElement::from_terms([(word, 1), (Word::empty(), -1)]);
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn trace_quadratic_vanishes_on_matrices(seed in any::<u64>(), meridians in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let triple = random_triple(&mut rng, Precision::default(), meridians);
        let pt = extract_coordinates(&triple);
        for i in 0..meridians {
            let r = check_trace_quadratic(&pt, i).magnitude();
            prop_assert!(r < 1e-20, "residual {r:e}");
        }
    }

    #[test]
    fn symmetric_power_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = CyclotomicField::new(12);
        let p = random_exact_sl2(&mut rng, &f);
        let q = random_exact_sl2(&mut rng, &f);
        for n in 1..=6 {
            let sp = symmetric_power_matrix(&p, n).unwrap();
            let sq = symmetric_power_matrix(&q, n).unwrap();
            prop_assert_eq!(symmetric_power_matrix(&p.mul(&q), n).unwrap(), sp.mul(&sq));
            prop_assert!(sp.det().is_one());
        }
    }

    #[test]
    fn case11_roundtrip(seed in any::<u64>(), pick in 0usize..4) {
        let (mu, p, q, a, b) = [(2, 2, 3, 1, 1), (1, 2, 5, 1, 3), (1, 3, 4, 1, 1), (3, 2, 3, 1, 1)][pick];
        let params = TorusLinkParams::new(mu, p, q).unwrap();
        let s = sample_interior_point(&params, a, b, Precision::default(), seed, 0).unwrap();
        let rebuilt = extract_coordinates(&from_character_case11(p, q, &s.point).unwrap());
        let close = |x: &twisted_alexander::scalars::Complex, y: &twisted_alexander::scalars::Complex| {
            x.sub(y).magnitude() < 1e-10
        };
        prop_assert!(close(&rebuilt.t_x, &s.point.t_x));
        prop_assert!(close(&rebuilt.t_y, &s.point.t_y));
        prop_assert!(close(&rebuilt.t_xy, &s.point.t_xy));
        for (u, v) in rebuilt.quads.iter().zip(&s.point.quads) {
            prop_assert!(close(&u.t_i, &v.t_i) && close(&u.t_xi, &v.t_xi));
            prop_assert!(close(&u.t_yi, &v.t_yi) && close(&u.t_xyi, &v.t_xyi));
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(seed in any::<u64>(), n in 1usize..=5, nvars in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = CyclotomicField::new(6);
        let (m, rows) = random_poly_matrix(&mut rng, &f, n, nvars);
        prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&rows, nvars, &f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn conjugation_invariance(seed in any::<u64>(), pick in 0usize..GRID.len()) {
        let (mu, p, q) = GRID[pick];
        let params = TorusLinkParams::new(mu, p, q).unwrap();
        let pres = torus_link_presentation(&params).unwrap();
        let f = CyclotomicField::for_torus(p as u64, q as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (a, b) in grid_labels(mu, p, q) {
            let rep = torus_representation::<Cyclotomic>(&f, &params, a, b).unwrap();
            let g = random_exact_sl2(&mut rng, &f);
            let w = wada_invariant(&pres, &rep, None).unwrap();
            let wg = wada_invariant(&pres, &rep.conjugate_by(&g).unwrap(), None).unwrap();
            prop_assert!(equal_up_to_unit(&w.reduced, &wg.reduced, UnitClass::AllMonomials).is_some());
        }
    }
}
