//! Property suite for the Hopf structure and the adjoint action.
//!
//! All laws are exact identities; sampling only picks which elements they are
//! instantiated on. The generator pool is E_i, F_i and small group-likes, and
//! the stream is seeded, so a failing sample is reproducible.

use super::{Algebra, AlgebraElement, Tensor3Element, TensorElement};
use crate::report::VerificationReport;
use crate::scalar::{q_number, Scalar};
use crate::weight::Weight;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_element(algebra: &Algebra, rng: &mut ChaCha8Rng, max_len: usize) -> AlgebraElement {
    let rank = algebra.rank;
    let len = rng.gen_range(1..=max_len);
    let mut acc = algebra.one();
    for _ in 0..len {
        let pick = rng.gen_range(0..4 * rank);
        let i = pick / 4;
        let g = match pick % 4 {
            0 => algebra.e(i),
            1 => algebra.f(i),
            2 => algebra.weight_el(&Weight::fundamental(rank, i)),
            _ => algebra.weight_el(&-&Weight::fundamental(rank, i)),
        };
        acc = algebra.mul(&acc, &g);
    }
    acc
}

fn delta_then_left(algebra: &Algebra, d: &TensorElement) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((m1, m2), c) in &d.0 {
        let inner = algebra.coproduct(&AlgebraElement::from_term(m1.clone(), Scalar::one()));
        for ((a, b), c2) in &inner.0 {
            out.add_term((a.clone(), b.clone(), m2.clone()), &(c * c2));
        }
    }
    out
}

fn delta_then_right(algebra: &Algebra, d: &TensorElement) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((m1, m2), c) in &d.0 {
        let inner = algebra.coproduct(&AlgebraElement::from_term(m2.clone(), Scalar::one()));
        for ((a, b), c2) in &inner.0 {
            out.add_term((m1.clone(), a.clone(), b.clone()), &(c * c2));
        }
    }
    out
}

/// Runs every Hopf and adjoint-action law on `samples` seeded samples.
pub fn hopf_suite(algebra: &Algebra, samples: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new();
    let n = algebra.n;
    let fmt = |x: &AlgebraElement| algebra.element_to_string(x);

    // Serre relations reduce to zero (deterministic).
    {
        let two = q_number(2);
        let mut ok = true;
        let mut witness = String::new();
        for i in 0..algebra.rank {
            for j in 0..algebra.rank {
                if i.abs_diff(j) != 1 {
                    continue;
                }
                let (ei, ej) = (algebra.e(i), algebra.e(j));
                let serre_e = algebra
                    .mul_all(&[&ei, &ei, &ej])
                    .sub(&algebra.mul_all(&[&ei, &ej, &ei]).scaled(&two))
                    .add(&algebra.mul_all(&[&ej, &ei, &ei]));
                let (fi, fj) = (algebra.f(i), algebra.f(j));
                let serre_f = algebra
                    .mul_all(&[&fi, &fi, &fj])
                    .sub(&algebra.mul_all(&[&fi, &fj, &fi]).scaled(&two))
                    .add(&algebra.mul_all(&[&fj, &fi, &fi]));
                if !serre_e.is_zero() || !serre_f.is_zero() {
                    ok = false;
                    witness = format!("pair ({}, {}): {} / {}", i, j, fmt(&serre_e), fmt(&serre_f));
                }
            }
        }
        report.assert_check(format!("sl({}): Serre relations vanish", n), ok, || witness);
    }

    let run_law = |report: &mut VerificationReport,
                   name: String,
                   seed_offset: u64,
                   law: &dyn Fn(&mut ChaCha8Rng) -> Option<String>| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ seed_offset);
        let mut witness = None;
        for k in 0..samples {
            if let Some(w) = law(&mut rng) {
                witness = Some(format!("sample {}: {}", k, w));
                break;
            }
        }
        let ok = witness.is_none();
        report.assert_check(name, ok, || witness.unwrap_or_default());
    };

    run_law(
        &mut report,
        format!("sl({}): coassociativity on {} samples", n, samples),
        1,
        &|rng| {
            let x = random_element(algebra, rng, 4);
            let d = algebra.coproduct(&x);
            let l = delta_then_left(algebra, &d);
            let r = delta_then_right(algebra, &d);
            (l != r).then(|| fmt(&x))
        },
    );

    run_law(
        &mut report,
        format!("sl({}): counit laws on {} samples", n, samples),
        2,
        &|rng| {
            let x = random_element(algebra, rng, 4);
            let d = algebra.coproduct(&x);
            let mut left = AlgebraElement::zero();
            let mut right = AlgebraElement::zero();
            for ((m1, m2), c) in &d.0 {
                let e1 = algebra.counit(&AlgebraElement::from_term(m1.clone(), Scalar::one()));
                left.add_term(m2.clone(), &(c * &e1));
                let e2 = algebra.counit(&AlgebraElement::from_term(m2.clone(), Scalar::one()));
                right.add_term(m1.clone(), &(c * &e2));
            }
            (left != x || right != x).then(|| fmt(&x))
        },
    );

    run_law(
        &mut report,
        format!("sl({}): antipode law m(S x id)Delta = counit on {} samples", n, samples),
        3,
        &|rng| {
            let x = random_element(algebra, rng, 4);
            let d = algebra.coproduct(&x);
            let mut acc = AlgebraElement::zero();
            for ((m1, m2), c) in &d.0 {
                let s = algebra.antipode(&AlgebraElement::from_term(m1.clone(), Scalar::one()));
                let m2el = AlgebraElement::from_term(m2.clone(), Scalar::one());
                acc.add_scaled(&algebra.mul(&s, &m2el), c);
            }
            let want = algebra.scalar_el(algebra.counit(&x));
            (acc != want).then(|| fmt(&x))
        },
    );

    run_law(
        &mut report,
        format!("sl({}): ad(xy) = ad x . ad y on {} samples", n, samples),
        4,
        &|rng| {
            let x = random_element(algebra, rng, 2);
            let y = random_element(algebra, rng, 2);
            let z = random_element(algebra, rng, 2);
            let lhs = algebra.ad(&algebra.mul(&x, &y), &z);
            let rhs = algebra.ad(&x, &algebra.ad(&y, &z));
            (lhs != rhs).then(|| format!("x = {}, y = {}, z = {}", fmt(&x), fmt(&y), fmt(&z)))
        },
    );

    run_law(
        &mut report,
        format!("sl({}): composed ad agrees with the Hopf formula on {} samples", n, samples),
        5,
        &|rng| {
            let x = random_element(algebra, rng, 3);
            let y = random_element(algebra, rng, 2);
            let lhs = algebra.ad(&x, &y);
            let rhs = algebra.ad_hopf(&x, &y);
            (lhs != rhs).then(|| format!("x = {}, y = {}", fmt(&x), fmt(&y)))
        },
    );

    run_law(
        &mut report,
        format!("sl({}): generalised derivation law on {} samples", n, samples),
        6,
        &|rng| {
            let x = random_element(algebra, rng, 2);
            let y = random_element(algebra, rng, 2);
            let z = random_element(algebra, rng, 2);
            let lhs = algebra.ad(&x, &algebra.mul(&y, &z));
            let mut rhs = AlgebraElement::zero();
            for ((m1, m2), c) in &algebra.coproduct(&x).0 {
                let a = algebra.ad(&AlgebraElement::from_term(m1.clone(), Scalar::one()), &y);
                let b = algebra.ad(&AlgebraElement::from_term(m2.clone(), Scalar::one()), &z);
                rhs.add_scaled(&algebra.mul(&a, &b), c);
            }
            (lhs != rhs).then(|| format!("x = {}, y = {}, z = {}", fmt(&x), fmt(&y), fmt(&z)))
        },
    );

    run_law(
        &mut report,
        format!("sl({}): bracket derivation Jacobi on {} samples", n, samples),
        7,
        &|rng| {
            let x = random_element(algebra, rng, 2);
            let y = random_element(algebra, rng, 2);
            let z = random_element(algebra, rng, 2);
            let lhs = algebra.bracket(&x, &algebra.bracket(&y, &z));
            let mut rhs = AlgebraElement::zero();
            for ((m1, m2), c) in &algebra.coproduct(&x).0 {
                let a = algebra.bracket(&AlgebraElement::from_term(m1.clone(), Scalar::one()), &y);
                let b = algebra.bracket(&AlgebraElement::from_term(m2.clone(), Scalar::one()), &z);
                rhs.add_scaled(&algebra.bracket(&a, &b), c);
            }
            (lhs != rhs).then(|| format!("x = {}, y = {}, z = {}", fmt(&x), fmt(&y), fmt(&z)))
        },
    );

    // The representation property ad[x, y] = sum ad x_(1) . ad y . ad S(x_(2))
    // applied to z. (The antipode on the second leg is forced: the identity
    // already fails on group-likes without it.)
    run_law(
        &mut report,
        format!("sl({}): representation Jacobi on {} samples", n, samples),
        8,
        &|rng| {
            let x = random_element(algebra, rng, 2);
            let y = random_element(algebra, rng, 2);
            let z = random_element(algebra, rng, 2);
            let lhs = algebra.bracket(&algebra.bracket(&x, &y), &z);
            let mut rhs = AlgebraElement::zero();
            for ((m1, m2), c) in &algebra.coproduct(&x).0 {
                let s2 = algebra.antipode(&AlgebraElement::from_term(m2.clone(), Scalar::one()));
                let inner = algebra.bracket(&s2, &z);
                let inner = algebra.bracket(&y, &inner);
                let outer = algebra.bracket(&AlgebraElement::from_term(m1.clone(), Scalar::one()), &inner);
                rhs.add_scaled(&outer, c);
            }
            (lhs != rhs).then(|| format!("x = {}, y = {}, z = {}", fmt(&x), fmt(&y), fmt(&z)))
        },
    );

    report
}
