use super::*;
use crate::scalar::Scalar;
use crate::uq::TensorElement;

fn q(s: &str) -> Scalar {
    Scalar::parse(s).expect("literal scalar")
}

#[test]
fn lbar_dimensions() {
    for (n, want) in [(2usize, 4usize), (3, 9), (4, 16)] {
        let a = crate::uq::make_algebra(n).unwrap();
        let lam = crate::weight::Weight::fundamental(a.rank, 0);
        let basis = build_lbar(&a, &lam).unwrap();
        assert_eq!(basis.rank(), want, "n = {}", n);
    }
}

#[test]
fn sl2_build_and_axioms() {
    let ql = QuantumLieAlgebra::get(2).unwrap();
    assert_eq!(ql.dim(), 3);
    let report = ql.verify_axioms();
    assert!(report.all_asserted_hold(), "{}", report);
}

#[test]
fn sl3_build_and_axioms() {
    let ql = QuantumLieAlgebra::get(3).unwrap();
    assert_eq!(ql.dim(), 8);
    let report = ql.verify_axioms();
    assert!(report.all_asserted_hold(), "{}", report);
}

#[test]
fn central_element_outside_l() {
    let ql = QuantumLieAlgebra::get(2).unwrap();
    assert!(ql.l_coords(&ql.c).is_none());
    // [X+, X-] has coordinates (0, 0, q + q^-1).
    let coords = ql.l_coords(&ql.brackets[0][1]).unwrap();
    assert_eq!(coords, vec![Scalar::zero(), Scalar::zero(), q("q + q^{-1}")]);
}

#[test]
fn sigma_fixes_the_raising_square() {
    let ql = QuantumLieAlgebra::get(2).unwrap();
    let mut unit: crate::linalg::CoordVector<(usize, usize)> = std::collections::BTreeMap::new();
    unit.insert((0, 0), Scalar::one());
    let image = ql.apply_sigma(&unit);
    assert_eq!(image, unit);
}

#[test]
fn m_sigma_recovers_the_quadratic_identity_instance() {
    // m sigma(X+ (x) X-) = X+ X- - (q + q^-1) X0 C.
    let ql = QuantumLieAlgebra::get(2).unwrap();
    let a = &ql.algebra;
    let mut msigma = crate::uq::AlgebraElement::zero();
    for k in 0..3 {
        for l in 0..3 {
            let c = &ql.sigma[0][1][k][l];
            if !c.is_zero() {
                msigma.add_scaled(&a.mul(&ql.basis[k], &ql.basis[l]), c);
            }
        }
    }
    let want = a
        .mul(&ql.basis[0], &ql.basis[1])
        .sub(&a.mul(&ql.basis[2], &ql.c).scaled(&q("q + q^{-1}")));
    assert_eq!(msigma, want);
}

#[test]
fn diag_ad_kills_highest_weight_tensor() {
    // X12 (x) X12 is a highest-weight vector for the diagonal action.
    let ql = QuantumLieAlgebra::get(3).unwrap();
    let t = TensorElement::from_pair(&ql.basis[6], &ql.basis[6]);
    for i in 0..2 {
        assert!(ql.diag_ad(&ql.algebra.e(i), &t).is_zero());
    }
}

#[test]
fn beta_mutations_are_detected() {
    let ql = QuantumLieAlgebra::get(2).unwrap();
    for (i, j, k) in [(0usize, 1usize, 2usize), (2, 2, 2), (0, 2, 0), (1, 0, 1)] {
        assert!(
            beta_mutation_is_detected(&ql, i, j, k),
            "mutation at ({}, {}, {}) undetected",
            i,
            j,
            k
        );
    }
}

#[test]
fn suites_pass() {
    let r2 = sl2_suite().unwrap();
    assert!(r2.all_asserted_hold(), "{}", r2);
    let r3 = sl3_suite().unwrap();
    assert!(r3.all_asserted_hold(), "{}", r3);
}
