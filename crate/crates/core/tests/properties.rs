//! Randomized invariants, one module per group so each can run alone, e.g.
//! `cargo test --test properties ring_laws`.

use fillcheck::braid::{alexander_of_closure, burau, BraidLetter, BraidWord};
use fillcheck::catalog::{link_alexander_ln, KnotFamily};
use fillcheck::floer::{d_knot_surgery, tail_sum, HFunction, TorsionCoefficients};
use fillcheck::ring::{parse_poly1, parse_poly2, ExactRational, LaurentPoly1, LaurentPoly2, PolyMatrix};
use fillcheck::slopes::{cf_evaluate, cf_expand, mod_inverse};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly1() -> impl Strategy<Value = LaurentPoly1> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly1::from_terms)
}

fn poly2() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec(((-4i64..=4, -4i64..=4), -20i64..=20), 0..6).prop_map(LaurentPoly2::from_terms)
}

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands, any::<bool>()), 0..max_len).prop_map(move |letters| {
        let letters = letters
            .into_iter()
            .map(|(g, inv)| if inv { BraidLetter::neg(g) } else { BraidLetter::pos(g) })
            .collect();
        BraidWord::new(strands, letters).unwrap()
    })
}

fn lspace_knot() -> impl Strategy<Value = KnotFamily> {
    prop_oneof![
        (2u32..=6, 1u32..=3).prop_map(|(n, m)| KnotFamily::Knm { n, m }),
        (2u32..=6, 1u32..=3).prop_map(|(n, m)| KnotFamily::Kpnm { n, m }),
        (2u32..=9, 2u32..=5)
            .prop_filter("coprime, p > q", |&(p, q)| p > q && num_integer::gcd(p, q) == 1)
            .prop_map(|(p, q)| KnotFamily::Torus { p, q }),
    ]
}

mod ring_laws {
    use super::*;

    proptest! {
        #[test]
        fn commutative_ring(a in poly1(), b in poly1(), c in poly1()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(&a * &LaurentPoly1::one(), a);
        }

        #[test]
        fn exact_division_undoes_multiplication(a in poly1(), b in poly1()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Ok(a));
        }

        #[test]
        fn evaluation_and_inversion_are_homomorphisms(a in poly1(), b in poly1()) {
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
        }

        #[test]
        fn two_variable_ring(a in poly2(), b in poly2(), c in poly2()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).swap_variables(), &a.swap_variables() * &b.swap_variables());
        }

        #[test]
        fn rationals_agree_with_integers(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            let (x, y) = (ExactRational::from_int(a), ExactRational::from_int(b));
            prop_assert_eq!(x.clone() + y.clone(), ExactRational::from_int(a + b));
            prop_assert_eq!(x.clone() - y.clone(), ExactRational::from_int(a - b));
            prop_assert_eq!(x.clone() * y.clone(), ExactRational::from_int(a * b));
            prop_assert_eq!(x.clone() < y.clone(), a < b);
            if b != 0 {
                prop_assert_eq!((x.clone() / y.clone()) * y, x);
                prop_assert_eq!(ExactRational::new(a, b).floor(), BigInt::from(a.div_euclid(b) - i64::from(b < 0 && a.rem_euclid(b) != 0)));
            }
        }
    }
}

mod parser_round_trip {
    use super::*;

    proptest! {
        #[test]
        fn one_variable(a in poly1()) {
            prop_assert_eq!(parse_poly1(&a.to_string()), Ok(a));
        }

        #[test]
        fn two_variables(a in poly2()) {
            prop_assert_eq!(parse_poly2(&a.to_string()), Ok(a));
        }

        #[test]
        fn rationals(n in -500i64..500, d in 1i64..500) {
            let r = ExactRational::new(n, d);
            prop_assert_eq!(r.to_string().parse::<ExactRational>(), Ok(r));
        }

        #[test]
        fn braid_words(w in word(5, 12)) {
            prop_assert_eq!(BraidWord::parse(&w.to_string(), Some(5)), Ok(w));
        }
    }
}

mod burau_representation {
    use super::*;

    proptest! {
        #[test]
        fn homomorphism(a in word(4, 8), b in word(4, 8)) {
            let ab = a.concat(&b).unwrap();
            prop_assert_eq!(burau(&ab).matrix, &burau(&a).matrix * &burau(&b).matrix);
            let trivial = a.concat(&a.inverse()).unwrap();
            prop_assert_eq!(burau(&trivial).matrix, PolyMatrix::identity(3));
        }

        #[test]
        fn braid_relations(prefix in word(4, 5), suffix in word(4, 5), i in 1usize..3, inv in any::<bool>()) {
            let l = |g| if inv { BraidLetter::neg(g) } else { BraidLetter::pos(g) };
            let wrap = |mid: Vec<BraidLetter>| {
                let core = BraidWord::new(4, mid).unwrap();
                prefix.concat(&core).unwrap().concat(&suffix).unwrap()
            };
            let lhs = wrap(vec![l(i), l(i + 1), l(i)]);
            let rhs = wrap(vec![l(i + 1), l(i), l(i + 1)]);
            prop_assert_eq!(burau(&lhs), burau(&rhs));
            let far_a = wrap(vec![l(1), l(3)]);
            let far_b = wrap(vec![l(3), l(1)]);
            prop_assert_eq!(burau(&far_a), burau(&far_b));
        }

        #[test]
        fn closure_invariant_under_conjugation(w in word(3, 10), g in word(3, 4)) {
            prop_assume!(w.component_count() == 1);
            let conj = g.concat(&w).unwrap().concat(&g.inverse()).unwrap();
            prop_assert_eq!(alexander_of_closure(&conj), alexander_of_closure(&w));
        }

        #[test]
        fn alexander_is_symmetric_and_normalized(w in word(3, 10)) {
            prop_assume!(w.component_count() == 1);
            let delta = alexander_of_closure(&w).unwrap();
            prop_assert!(delta.is_symmetric());
            prop_assert_eq!(delta.eval_at_one(), BigInt::from(1));
        }
    }
}

mod d_tables {
    use super::*;

    proptest! {
        #[test]
        fn symmetric_under_conjugation(knot in lspace_knot(), p in 1u64..=50) {
            let torsion = TorsionCoefficients::from_alexander(&knot.alexander_closed_form()).unwrap();
            let table = d_knot_surgery(&torsion, p).unwrap();
            prop_assert!(table.is_symmetric());
            for i in 0..p {
                prop_assert_eq!(table.get(i), table.get((p - i) % p));
            }
        }

        #[test]
        fn torsion_nonnegative_and_even(knot in lspace_knot(), i in -20i64..20) {
            let torsion = TorsionCoefficients::from_alexander(&knot.alexander_closed_form()).unwrap();
            prop_assert!(torsion.get(i) >= BigInt::from(0));
            prop_assert_eq!(torsion.get(i), torsion.get(-i));
        }

        #[test]
        fn tail_sum_matches_brute_force(a in poly1(), s in -25i64..25) {
            // coefficients of a(t)/(1 - t^-1), summed over exponents above s
            let top = a.degree().unwrap_or(0);
            let mut brute = BigInt::from(0);
            for j in (s + 1)..=top {
                for k in j..=top {
                    brute += a.coeff(k);
                }
            }
            prop_assert_eq!(tail_sum(&a, s), brute);
        }
    }
}

mod h_function {
    use super::*;

    proptest! {
        #[test]
        fn nonnegative_and_symmetric(n in 0u32..=6, s1 in -15i64..15, s2 in -15i64..15) {
            let h = HFunction::new(&link_alexander_ln(n)).unwrap();
            prop_assert!(h.h(s1, s2) >= BigInt::from(0));
            prop_assert_eq!(h.h(s1, s2), h.h(-s1, -s2));
            prop_assert_eq!(h.h(s1, s2), h.h(s1, -s2));
        }

        #[test]
        fn big_h_steps_down_by_at_most_one(n in 0u32..=6, s1 in -15i64..15, s2 in -15i64..15) {
            let h = HFunction::new(&link_alexander_ln(n)).unwrap();
            let here = h.big_h(s1, s2);
            for next in [h.big_h(s1 + 1, s2), h.big_h(s1, s2 + 1)] {
                prop_assert!(next <= here);
                prop_assert!(&here - &next <= BigInt::from(1));
            }
        }
    }
}

mod slope_arithmetic {
    use super::*;

    proptest! {
        #[test]
        fn mod_inverse_round_trip(a in 1i64..5_000, n in 2i64..5_000) {
            prop_assume!(num_integer::gcd(a, n) == 1);
            let inv = mod_inverse(a, n).unwrap();
            prop_assert!((0..n).contains(&inv));
            prop_assert_eq!((a * inv).rem_euclid(n), 1 % n);
        }

        #[test]
        fn continued_fraction_reconstructs(p in 2u64..2_000, q in 1u64..2_000) {
            prop_assume!(p > q && num_integer::gcd(p, q) == 1);
            let cf = cf_expand(p, q).unwrap();
            prop_assert!(cf.iter().all(|&c| c >= 2));
            prop_assert_eq!(cf_evaluate(&cf), ExactRational::new(p as i64, q as i64));
        }
    }
}
