use super::*;
use crate::scalar::q_number;
use crate::uq::central::{central_element, is_central, k_sequence};
use crate::weight::Weight;

fn q(s: &str) -> Scalar {
    Scalar::parse(s).expect("literal scalar")
}

#[test]
fn presets_are_confluent() {
    for n in 2..=4 {
        let a = make_algebra(n).unwrap();
        assert!(a.confluence.is_confluent(), "n = {}: {}", n, a.confluence);
        assert!(a.confluence.ambiguities_checked > 0);
    }
}

#[test]
fn unsupported_rank_is_rejected() {
    assert!(matches!(make_algebra(5), Err(UqError::UnsupportedRank(5))));
    assert!(matches!(make_algebra(1), Err(UqError::UnsupportedRank(1))));
}

#[test]
fn sl2_ef_relation() {
    let a = make_algebra(2).unwrap();
    let ef = a.mul(&a.e(0), &a.f(0));
    let h2 = Weight::simple_root(1, 0).scaled(2);
    let mut want = a.mul(&a.f(0), &a.e(0));
    let inv = q("q - q^{-1}").inv().unwrap();
    want.add_scaled(&a.weight_el(&h2), &inv);
    want.add_scaled(&a.weight_el(&-&h2), &-&inv);
    assert_eq!(ef, want);
}

#[test]
fn weight_commutation() {
    // q^lambda E_1 = q^{<H_1, lambda>} E_1 q^lambda with <H_1, omega_1> = 1/2.
    let a = make_algebra(3).unwrap();
    let omega1 = Weight::fundamental(2, 0);
    let lhs = a.mul(&a.weight_el(&omega1), &a.e(0));
    let rhs = a.mul(&a.e(0), &a.weight_el(&omega1)).scaled(&q("q^{1/2}"));
    assert_eq!(lhs, rhs);
}

#[test]
fn unit_is_neutral() {
    let a = make_algebra(2).unwrap();
    let x = a.mul(&a.e(0), &a.f(0));
    assert_eq!(a.mul(&a.one(), &x), x);
    assert_eq!(a.mul(&x, &a.one()), x);
}

#[test]
fn composite_raising_letter_matches_its_expansion() {
    let a = make_algebra(3).unwrap();
    // E_2 E_1 = E_12 + q^{-1} E_1 E_2 as normal forms.
    let lhs = a.mul(&a.e(1), &a.e(0));
    let mut want = a.e_root((0, 1));
    want.add_scaled(&a.mul(&a.e(0), &a.e(1)), &q("q^{-1}"));
    assert_eq!(lhs, want);
    // F_2 F_1 = q F_1 F_2 - F_12.
    let lhs = a.mul(&a.f(1), &a.f(0));
    let mut want = a.mul(&a.f(0), &a.f(1)).scaled(&q("q"));
    want.add_scaled(&a.f_root((0, 1)), &-Scalar::one());
    assert_eq!(lhs, want);
}

#[test]
fn coproduct_of_generators() {
    let a = make_algebra(2).unwrap();
    let h = Weight::simple_root(1, 0);
    let mut want = TensorElement::from_pair(&a.e(0), &a.weight_el(&-&h));
    want.add_scaled(&TensorElement::from_pair(&a.weight_el(&h), &a.e(0)), &Scalar::one());
    assert_eq!(a.coproduct(&a.e(0)), want);
    // Group-likes, and the unit.
    let lam = Weight(vec![3]);
    let g = a.weight_el(&lam);
    assert_eq!(a.coproduct(&g), TensorElement::from_pair(&g, &g));
    assert_eq!(
        a.coproduct(&a.one()),
        TensorElement::from_pair(&a.one(), &a.one())
    );
}

#[test]
fn antipode_and_counit_of_generators() {
    let a = make_algebra(2).unwrap();
    assert_eq!(a.antipode(&a.e(0)), a.e(0).scaled(&q("-q^{-1}")));
    assert_eq!(a.antipode(&a.f(0)), a.f(0).scaled(&q("-q")));
    let lam = Weight(vec![2]);
    assert_eq!(a.antipode(&a.weight_el(&lam)), a.weight_el(&-&lam));
    let x = a.weight_el(&lam).add(&a.e(0));
    assert_eq!(a.counit(&x), Scalar::one());
}

#[test]
fn adjoint_action_examples() {
    let a = make_algebra(2).unwrap();
    let h = Weight::simple_root(1, 0);
    let k0 = a.weight_el(&h.scaled(-2));
    // ad E(q^{-2H}) = (q - q^{-1}) q^{-H} E.
    let got = a.ad(&a.e(0), &k0);
    let want = a.mul(&a.weight_el(&-&h), &a.e(0)).scaled(&q("q - q^{-1}"));
    assert_eq!(got, want);
    // ad q^lambda(E_1) = q^{<H_1, lambda>} E_1.
    let lam = Weight(vec![2]);
    assert_eq!(
        a.ad(&a.weight_el(&lam), &a.e(0)),
        a.e(0).scaled(&q("q"))
    );
    // ad x(1) = counit(x) 1.
    let x = a.mul(&a.e(0), &a.f(0));
    assert_eq!(a.ad(&x, &a.one()), a.scalar_el(a.counit(&x)));
}

#[test]
fn k_sequence_sl2() {
    let a = make_algebra(2).unwrap();
    let lambda = Weight::fundamental(1, 0);
    let k0 = k_sequence(&a, &lambda, 0).unwrap();
    assert_eq!(k0, a.weight_el(&Weight(vec![-4])));
    let k1 = k_sequence(&a, &lambda, 1).unwrap();
    let combo = a
        .mul(&a.e(0), &a.f(0))
        .scaled(&q("q"))
        .sub(&a.mul(&a.f(0), &a.e(0)).scaled(&q("q^{-1}")));
    assert_eq!(k1, combo.scaled(&q("-q + q^{-1}")));
    assert!(k_sequence(&a, &lambda, 2).is_err());
}

#[test]
fn central_element_is_central() {
    for n in 2..=4 {
        let a = make_algebra(n).unwrap();
        let lambda = Weight::fundamental(a.rank, 0);
        let c = central_element(&a, &lambda);
        assert!(is_central(&a, &c), "n = {}", n);
        assert!(!is_central(&a, &a.e(0)));
        assert!(!is_central(&a, &c.add(&a.e(0))));
    }
}

#[test]
fn sl2_central_element_closed_form() {
    let a = make_algebra(2).unwrap();
    let lambda = Weight::fundamental(1, 0);
    let c = central_element(&a, &lambda);
    let combo = a
        .mul(&a.e(0), &a.f(0))
        .scaled(&q("q"))
        .sub(&a.mul(&a.f(0), &a.e(0)).scaled(&q("q^{-1}")));
    let want = a
        .weight_el(&Weight(vec![-4]))
        .add(&combo.scaled(&(&q("q - q^{-1}") / &q("q + q^{-1}"))));
    assert_eq!(c, want);
}

#[test]
fn sl4_central_element_uses_all_k() {
    // C = sum_r (-1)^r [4-r]/[4] K_r; spot-check the coefficients by
    // recomputing the sum directly.
    let a = make_algebra(4).unwrap();
    let lambda = Weight::fundamental(3, 0);
    let mut want = AlgebraElement::zero();
    for r in 0..4 {
        let mut coeff = &q_number(4 - r as i64) / &q_number(4);
        if r % 2 == 1 {
            coeff = -coeff;
        }
        want.add_scaled(&k_sequence(&a, &lambda, r).unwrap(), &coeff);
    }
    assert_eq!(central_element(&a, &lambda), want);
}

#[test]
fn element_json_round_trip() {
    let a = make_algebra(3).unwrap();
    let lambda = Weight::fundamental(2, 0);
    let x = central_element(&a, &lambda).add(&a.mul(&a.e_root((0, 1)), &a.f(1)));
    let doc = a.element_to_json(&x);
    let back = a.element_from_json(&doc).unwrap();
    assert_eq!(back, x);
    assert_eq!(a.element_to_json(&back), doc);
}

#[test]
fn rule_set_json_round_trip() {
    let a = make_algebra(3).unwrap();
    let doc = a.rules.to_json();
    let back = crate::rewrite::RuleSet::from_json(&doc).unwrap();
    assert_eq!(back.rules.len(), a.rules.rules.len());
    assert_eq!(back.to_json(), doc);
}

#[test]
fn monomial_order_matches_word_order() {
    let a = make_algebra(3).unwrap();
    let mons: Vec<PBWMonomial> = [
        PBWMonomial { f: vec![], w: Weight(vec![0, 0]), e: vec![(0, 0)] },
        PBWMonomial { f: vec![], w: Weight(vec![1, 0]), e: vec![(0, 1)] },
        PBWMonomial { f: vec![(0, 0)], w: Weight(vec![0, 0]), e: vec![(1, 1)] },
        PBWMonomial { f: vec![(0, 1)], w: Weight(vec![-1, 2]), e: vec![] },
        PBWMonomial { f: vec![], w: Weight(vec![0, 0]), e: vec![] },
        PBWMonomial { f: vec![], w: Weight(vec![2, -1]), e: vec![] },
        PBWMonomial { f: vec![(0, 0), (0, 0)], w: Weight(vec![0, 0]), e: vec![] },
    ]
    .to_vec();
    let _ = &a;
    for x in &mons {
        for y in &mons {
            assert_eq!(
                x.cmp(y),
                x.to_word().cmp(&y.to_word()),
                "{} vs {}",
                x,
                y
            );
        }
    }
}

#[test]
fn corrupted_algebra_is_detected() {
    let a = make_algebra(2).unwrap();
    let bad = a.corrupted();
    // The corrupted multiplication must break a golden identity: here the
    // defining commutation EF - FE.
    let h2 = Weight::simple_root(1, 0).scaled(2);
    let inv = q("q - q^{-1}").inv().unwrap();
    let mut want = a.weight_el(&h2).scaled(&inv);
    want.add_scaled(&a.weight_el(&-&h2), &-&inv);
    let got = bad.mul(&bad.e(0), &bad.f(0)).sub(&bad.mul(&bad.f(0), &bad.e(0)));
    let detected = !bad.confluence.is_confluent() || got != want;
    assert!(detected);
}

#[test]
fn hopf_suite_passes() {
    for n in 2..=3 {
        let a = make_algebra(n).unwrap();
        let report = hopf_suite(&a, 25, q_lie_seed());
        assert!(report.all_asserted_hold(), "{}", report);
    }
}

fn q_lie_seed() -> u64 {
    0x514c_1e5e
}
