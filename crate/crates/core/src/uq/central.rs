//! The recursive central-element construction and its identities.
//!
//! Starting from the group-like K_0 = q^{-4 lambda}, the sequence
//! K_r = ad(F_r E_r) K_{r-1} feeds the alternating sum
//! C_lambda = sum_r (-1)^r [n-r]_q / [n]_q K_r, which is central. The
//! identity families relating ad E_j to the K_r, and the two eigenvalue
//! computations on the root vector X_1, are checked exactly.

use super::{Algebra, AlgebraElement, UqError};
use crate::report::VerificationReport;
use crate::scalar::{q_number, Scalar};
use crate::weight::Weight;

/// K_r for the given dominant weight; r ranges over 0..n-1.
pub fn k_sequence(algebra: &Algebra, lambda: &Weight, r: usize) -> Result<AlgebraElement, UqError> {
    if r >= algebra.n {
        return Err(UqError::Derivation(format!(
            "K_{} undefined for n = {}",
            r, algebra.n
        )));
    }
    let mut k = algebra.weight_el(&lambda.scaled(-4));
    for step in 1..=r {
        let i = step - 1; // 0-indexed simple root for the paper's 1-indexed step
        k = algebra.ad(&algebra.f(i), &algebra.ad(&algebra.e(i), &k));
    }
    Ok(k)
}

/// The central element C_lambda as the alternating K_r sum.
pub fn central_element(algebra: &Algebra, lambda: &Weight) -> AlgebraElement {
    let n = algebra.n as i64;
    let denom = q_number(n);
    let mut out = AlgebraElement::zero();
    let mut k = algebra.weight_el(&lambda.scaled(-4));
    for r in 0..algebra.n {
        let mut coeff = &q_number(n - r as i64) / &denom;
        if r % 2 == 1 {
            coeff = -coeff;
        }
        out.add_scaled(&k, &coeff);
        if r + 1 < algebra.n {
            let i = r; // next recursion step uses E_{r+1}, 0-indexed r
            k = algebra.ad(&algebra.f(i), &algebra.ad(&algebra.e(i), &k));
        }
    }
    out
}

/// True iff u commutes with every generator E_i, F_i, q^{omega_j}.
pub fn is_central(algebra: &Algebra, u: &AlgebraElement) -> bool {
    let rank = algebra.rank;
    let mut gens = Vec::new();
    for i in 0..rank {
        gens.push(algebra.e(i));
        gens.push(algebra.f(i));
    }
    for j in 0..rank {
        gens.push(algebra.weight_el(&Weight::fundamental(rank, j)));
    }
    gens.iter().all(|g| algebra.commutator(u, g).is_zero())
}

/// Checks the identity families tying ad E_j to the K_r sequence, plus the
/// two eigenvalue identities on X_1 = ad E_1(q^{-4 omega_1})/(q - q^{-1}).
pub fn verify_k_relations(algebra: &Algebra) -> Result<VerificationReport, UqError> {
    let n = algebra.n;
    let lambda = Weight::fundamental(algebra.rank, 0);
    let mut report = VerificationReport::new();

    let ks: Vec<AlgebraElement> = (0..n)
        .map(|r| k_sequence(algebra, &lambda, r))
        .collect::<Result<_, _>>()?;

    let fmt_el = |x: &AlgebraElement| algebra.element_to_string(x);

    // ad E_j (1-indexed j) on each K_i.
    for j in 1..n {
        let ad_e = |x: &AlgebraElement| algebra.ad(&algebra.e(j - 1), x);
        for i in 0..n {
            if i + 1 < j || i > j + 1 {
                let got = ad_e(&ks[i]);
                report.assert_check(
                    format!("sl({}): ad E_{}(K_{}) = 0", n, j, i),
                    got.is_zero(),
                    || fmt_el(&got),
                );
            }
        }
        if j + 1 < n {
            let lhs = ad_e(&ks[j + 1]);
            let rhs = ad_e(&ks[j - 1]);
            report.assert_check(
                format!("sl({}): ad E_{}(K_{}) = ad E_{}(K_{})", n, j, j + 1, j, j - 1),
                lhs == rhs,
                || format!("{} vs {}", fmt_el(&lhs), fmt_el(&rhs)),
            );
        }
        let lhs = ad_e(&ks[j]);
        let rhs = ad_e(&ks[j - 1]).scaled(&q_number(2));
        report.assert_check(
            format!("sl({}): ad E_{}(K_{}) = [2]_q ad E_{}(K_{})", n, j, j, j, j - 1),
            lhs == rhs,
            || format!("{} vs {}", fmt_el(&lhs), fmt_el(&rhs)),
        );
    }

    // Eigenvalues on X_1.
    let qdiff = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
    let x1 = algebra
        .ad(&algebra.e(0), &algebra.weight_el(&lambda.scaled(-4)))
        .scaled(&qdiff.inv().expect("q - q^{-1} nonzero"));
    {
        let got = algebra.ad(&ks[1], &x1);
        // -q (q^2 - q^{-2}) X_1
        let ev = -(&Scalar::q_pow(1) * &(&Scalar::q_pow(2) - &Scalar::q_pow(-2)));
        let want = x1.scaled(&ev);
        report.assert_check(
            format!("sl({}): ad K_1(X_1) = -q(q^2 - q^-2) X_1", n),
            got == want,
            || format!("{} vs {}", fmt_el(&got), fmt_el(&want)),
        );
    }
    if n >= 3 {
        let got = algebra.ad(&ks[2], &x1);
        let ev = -(&Scalar::q_pow(2) - &Scalar::one());
        let want = x1.scaled(&ev);
        report.assert_check(
            format!("sl({}): ad K_2(X_1) = -(q^2 - 1) X_1", n),
            got == want,
            || format!("{} vs {}", fmt_el(&got), fmt_el(&want)),
        );
    }

    Ok(report)
}
