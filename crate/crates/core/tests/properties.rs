//! Randomized checks of algebraic invariants.

use proptest::prelude::*;

use affweyl::affine::{bruhat_leq_oracle, demazure_oracle, length, mul, ExtAffElt};
use affweyl::criteria::{bruhat_leq_lp, bruhat_leq_datum, default_datum, semi_infinite_leq};
use affweyl::demazure::demazure_closed;
use affweyl::format::{format_element, parse_element};
use affweyl::rootsys::{IVec, RootSystem};

const TYPES: [&str; 4] = ["A2", "B2", "G2", "A1xA1"];

fn system(i: usize) -> RootSystem {
    RootSystem::build(TYPES[i]).unwrap()
}

fn element(rs: &RootSystem, w: usize, mu: &[i32]) -> ExtAffElt {
    let ws: Vec<_> = rs.weyl_elements().collect();
    ExtAffElt::new(ws[w % ws.len()], IVec::from_slice(&mu[..rs.rank()]))
}

fn coords() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-2i32..=2, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_format_round_trip(t in 0..4usize, w in 0..64usize, mu in coords()) {
        let rs = system(t);
        let x = element(&rs, w, &mu);
        let s = format_element(&rs, &x);
        prop_assert_eq!(parse_element(&s, &rs).unwrap(), x);
    }

    #[test]
    fn criteria_match_oracle(t in 0..4usize, w1 in 0..64usize, w2 in 0..64usize, m1 in coords(), m2 in coords()) {
        let rs = system(t);
        let (x, y) = (element(&rs, w1, &m1), element(&rs, w2, &m2));
        let truth = bruhat_leq_oracle(&rs, &x, &y);
        prop_assert_eq!(bruhat_leq_lp(&rs, &x, &y), truth);
        prop_assert_eq!(bruhat_leq_datum(&rs, &x, &y, &default_datum(&rs, &x)).unwrap(), truth);
    }

    #[test]
    fn demazure_closed_form(t in 0..4usize, w1 in 0..64usize, w2 in 0..64usize, m1 in coords(), m2 in coords()) {
        let rs = system(t);
        let (x, y) = (element(&rs, w1, &m1), element(&rs, w2, &m2));
        let d = demazure_closed(&rs, &x, &y);
        prop_assert_eq!(d.product, demazure_oracle(&rs, &x, &y));
        prop_assert_eq!(d.length, length(&rs, &d.product));
        prop_assert!(d.length <= length(&rs, &x) + length(&rs, &y));
        prop_assert!(d.length >= length(&rs, &mul(&rs, &x, &y)));
    }

    #[test]
    fn demazure_associative(t in 0..4usize, ws in prop::collection::vec(0..64usize, 3), m in prop::collection::vec(-1i32..=1, 6)) {
        let rs = system(t);
        let x = element(&rs, ws[0], &m[0..2]);
        let y = element(&rs, ws[1], &m[2..4]);
        let z = element(&rs, ws[2], &m[4..6]);
        let left = demazure_closed(&rs, &demazure_closed(&rs, &x, &y).product, &z).product;
        let right = demazure_closed(&rs, &x, &demazure_closed(&rs, &y, &z).product).product;
        prop_assert_eq!(left, right);
    }

    #[test]
    fn semi_infinite_is_a_partial_order(t in 0..4usize, ws in prop::collection::vec(0..64usize, 3), m in prop::collection::vec(-2i32..=2, 6)) {
        let rs = system(t);
        let x = element(&rs, ws[0], &m[0..2]);
        let y = element(&rs, ws[1], &m[2..4]);
        let z = element(&rs, ws[2], &m[4..6]);
        prop_assert!(semi_infinite_leq(&rs, &x, &x));
        if semi_infinite_leq(&rs, &x, &y) && semi_infinite_leq(&rs, &y, &x) {
            prop_assert_eq!(x, y);
        }
        if semi_infinite_leq(&rs, &x, &y) && semi_infinite_leq(&rs, &y, &z) {
            prop_assert!(semi_infinite_leq(&rs, &x, &z));
        }
    }
}
