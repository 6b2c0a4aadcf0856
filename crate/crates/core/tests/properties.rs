mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tutte::engines::{coboundary_from_tutte, tutte_dc, tutte_from_coboundary, tutte_subset};
use tutte::families::{relax_poly, unrelax_poly};
use tutte::matroid::{ElementSet, Matroid};
use tutte::BiPoly;

fn poly(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -40i64..=40), 0..12).prop_map(BiPoly::from_terms)
}

fn matroid() -> impl Strategy<Value = Matroid> {
    any::<u64>().prop_map(|seed| common::random_matroid(&mut StdRng::seed_from_u64(seed)))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &BiPoly::zero(), a.clone());
        prop_assert_eq!(&a * &BiPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(4), b in poly(3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly(6)) {
        prop_assert_eq!(a.to_text().parse::<BiPoly>().unwrap(), a.clone());
        prop_assert_eq!(BiPoly::from_json_triples(&a.to_json_triples()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(4), b in poly(4), x in -5i64..5, y in -5i64..5) {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        prop_assert_eq!((&a * &b).eval_int(&x, &y), a.eval_int(&x, &y) * b.eval_int(&x, &y));
        prop_assert_eq!((&a + &b).eval_int(&x, &y), a.eval_int(&x, &y) + b.eval_int(&x, &y));
    }

    #[test]
    fn coboundary_conversion_round_trip(t in poly(6)) {
        let c = coboundary_from_tutte(&t, 6).unwrap();
        prop_assert_eq!(tutte_from_coboundary(&c, 6).unwrap(), t);
    }

    #[test]
    fn swap_and_relax_are_involutive(a in poly(5)) {
        prop_assert_eq!(a.swap_xy().swap_xy(), a.clone());
        prop_assert_eq!(unrelax_poly(&relax_poly(&a)), a);
    }

    #[test]
    fn rank_axioms(m in matroid(), a in any::<u64>(), b in any::<u64>()) {
        let full = m.ground_set().bits();
        let (a, b) = (ElementSet::from_bits(a & full), ElementSet::from_bits(b & full));
        prop_assert_eq!(m.rank(ElementSet::EMPTY), 0);
        prop_assert!(m.rank(a) <= a.len());
        prop_assert!(m.rank(a) <= m.rank(a.union(b)));
        prop_assert!(m.rank(a.union(b)) + m.rank(a.intersection(b)) <= m.rank(a) + m.rank(b));
        prop_assert_eq!(m.rank(m.ground_set()), m.full_rank());
    }

    #[test]
    fn dual_is_an_involution(m in matroid()) {
        let d = m.dual();
        prop_assert_eq!(d.full_rank(), m.ground_size() - m.full_rank());
        prop_assert!(d.dual().rank_agrees(&m));
    }

    #[test]
    fn duality_law(m in matroid()) {
        let t = tutte_subset(&m).unwrap();
        prop_assert_eq!(tutte_subset(&m.dual()).unwrap(), t.swap_xy());
        prop_assert_eq!(tutte_dc(&m.dual()).unwrap(), t.swap_xy());
    }

    #[test]
    fn deletion_contraction_recurrence(m in matroid()) {
        let t = tutte_subset(&m).unwrap();
        let two = BigInt::from(2);
        prop_assert_eq!(t.eval_int(&two, &two), BigInt::from(1u64) << m.ground_size());
        for e in 0..m.ground_size() {
            let (del, con) = (m.delete(e).unwrap(), m.contract(e).unwrap());
            let (td, tc) = (tutte_subset(&del).unwrap(), tutte_subset(&con).unwrap());
            let expected = if m.is_loop(e).unwrap() {
                &BiPoly::y() * &td
            } else if m.is_coloop(e).unwrap() {
                &BiPoly::x() * &tc
            } else {
                &td + &tc
            };
            prop_assert_eq!(&t, &expected, "element {}", e);
        }
    }
}
