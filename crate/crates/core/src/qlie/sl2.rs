//! The rank-1 verification suite: closed forms, the bracket table, the
//! commutation and Casimir relations in U, confluence of the Y-presentation,
//! the antisymmetriser table, essential idempotence, balancedness, and the
//! ordered-monomial independence evidence for the locally finite part.

use super::{casimir_eigenvalue, y_rules, QlieError, QuantumLieAlgebra};
use crate::linalg::{row_reduce, CoordVector};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::uq::{k_sequence, AlgebraElement};
use crate::weight::Weight;
use std::collections::BTreeMap;

fn q(s: &str) -> Scalar {
    Scalar::parse(s).expect("literal scalar")
}

/// Bracket table golden values in the basis order (X+, X-, X0).
fn golden_brackets() -> Vec<(usize, usize, Vec<(usize, &'static str)>)> {
    vec![
        (0, 0, vec![]),
        (0, 1, vec![(2, "q + q^{-1}")]),
        (0, 2, vec![(0, "-q^{-1}")]),
        (1, 0, vec![(2, "-q - q^{-1}")]),
        (1, 1, vec![]),
        (1, 2, vec![(1, "q")]),
        (2, 0, vec![(0, "q")]),
        (2, 1, vec![(1, "-q^{-1}")]),
        (2, 2, vec![(2, "q - q^{-1}")]),
    ]
}

/// The unambiguous antisymmetriser lines, as (input pair, expected image of
/// gamma' = 1 - sigma) over basis index pairs.
#[allow(clippy::type_complexity)]
fn golden_gamma_prime() -> Vec<((usize, usize), Vec<((usize, usize), &'static str)>)> {
    vec![
        ((0, 0), vec![]),
        ((1, 1), vec![]),
        ((0, 2), vec![((0, 2), "q^{-2}"), ((2, 0), "-1")]),
        ((1, 2), vec![((1, 2), "q^{2}"), ((2, 1), "-1")]),
        ((2, 0), vec![((2, 0), "q^{2}"), ((0, 2), "-1")]),
        ((2, 1), vec![((2, 1), "q^{-2}"), ((1, 2), "-1")]),
        (
            (0, 1),
            vec![((0, 1), "1"), ((1, 0), "-1"), ((2, 2), "q^{2} - q^{-2}")],
        ),
        (
            (1, 0),
            vec![((1, 0), "1"), ((0, 1), "-1"), ((2, 2), "-q^{2} + q^{-2}")],
        ),
    ]
}

pub fn sl2_suite() -> Result<VerificationReport, QlieError> {
    let ql = QuantumLieAlgebra::get(2)?;
    let a = &ql.algebra;
    let mut report = VerificationReport::new();
    let fmt = |x: &AlgebraElement| a.element_to_string(x);

    let h = Weight::simple_root(1, 0);
    let e = a.e(0);
    let f = a.f(0);
    let (xp, xm, x0) = (&ql.basis[0], &ql.basis[1], &ql.basis[2]);
    let c = &ql.c;
    let k0 = a.weight_el(&h.scaled(-2));

    // Closed forms of the basis and the central element.
    {
        let want_xp = a.mul(&a.weight_el(&-&h), &e);
        report.assert_check("sl(2): X+ = q^-H E", *xp == want_xp, || fmt(xp));
        let want_xm = a.mul(&a.weight_el(&-&h), &f);
        report.assert_check("sl(2): X- = q^-H F", *xm == want_xm, || fmt(xm));
        let qef = a.mul(&e, &f).scaled(&q("q"));
        let qfe = a.mul(&f, &e).scaled(&q("q^{-1}"));
        let combo = qef.sub(&qfe);
        let want_x0 = combo.scaled(&q("q + q^{-1}").inv().unwrap());
        report.assert_check(
            "sl(2): X0 = (q E F - q^-1 F E)/(q + q^-1)",
            *x0 == want_x0,
            || fmt(x0),
        );
        let alt_x0 = a
            .ad(&a.mul(&f, &e), &k0)
            .scaled(&(&Scalar::q_pow(2) - &Scalar::q_pow(-2)).inv().unwrap())
            .neg();
        report.assert_check(
            "sl(2): X0 = -ad(F E)(q^-2H)/(q^2 - q^-2)",
            *x0 == alt_x0,
            || fmt(&alt_x0),
        );
        let want_c = k0.add(&combo.scaled(&(&q("q - q^{-1}") / &q("q + q^{-1}"))));
        report.assert_check(
            "sl(2): C = q^-2H + (q - q^-1)/(q + q^-1) (q E F - q^-1 F E)",
            *c == want_c,
            || fmt(c),
        );
        let k1 = k_sequence(a, &ql.lambda, 1)?;
        let want_k1 = combo.scaled(&-q("q - q^{-1}"));
        report.assert_check(
            "sl(2): K_1 = -(q - q^-1)(q E F - q^-1 F E)",
            k1 == want_k1,
            || fmt(&k1),
        );
    }

    // The nine brackets.
    {
        let mut ok = true;
        let mut witness = String::new();
        for (i, j, expect) in golden_brackets() {
            let mut want = AlgebraElement::zero();
            for (k, cs) in expect {
                want.add_scaled(&ql.basis[k], &q(cs));
            }
            if ql.brackets[i][j] != want {
                ok = false;
                witness = format!(
                    "[{}, {}] = {}",
                    ql.basis_names[i],
                    ql.basis_names[j],
                    fmt(&ql.brackets[i][j])
                );
                break;
            }
        }
        report.assert_check("sl(2): bracket table (9 entries)", ok, || witness);
    }

    // Quadratic relations among X and the central element in U.
    {
        let x0xp = a.mul(x0, xp);
        let xpx0 = a.mul(xp, x0);
        let lhs = x0xp.scaled(&q("q^{2}")).sub(&xpx0);
        let rhs = a.mul(c, xp).scaled(&q("q"));
        report.assert_check("sl(2): q^2 X0 X+ - X+ X0 = q C X+", lhs == rhs, || fmt(&lhs));

        let x0xm = a.mul(x0, xm);
        let xmx0 = a.mul(xm, x0);
        let lhs = x0xm.scaled(&q("q^{-2}")).sub(&xmx0);
        let rhs = a.mul(c, xm).scaled(&q("-q^{-1}"));
        report.assert_check(
            "sl(2): q^-2 X0 X- - X- X0 = -q^-1 C X-",
            lhs == rhs,
            || fmt(&lhs),
        );

        let lhs = a
            .mul(xp, xm)
            .sub(&a.mul(xm, xp))
            .add(&a.mul(x0, x0).scaled(&q("q^{2} - q^{-2}")));
        let rhs = a.mul(c, x0).scaled(&q("q + q^{-1}"));
        report.assert_check(
            "sl(2): X+ X- - X- X+ + (q^2 - q^-2) X0^2 = (q + q^-1) C X0",
            lhs == rhs,
            || fmt(&lhs),
        );

        let mut ok = true;
        for x in [xp, xm, x0] {
            if !a.commutator(c, x).is_zero() {
                ok = false;
            }
        }
        report.assert_check("sl(2): C commutes with X+, X-, X0", ok, String::new);
    }

    // The square of the central element is a polynomial in the generators.
    {
        let inner = a
            .mul(x0, x0)
            .add(
                &a.mul(xm, xp)
                    .scaled(&q("q"))
                    .add(&a.mul(xp, xm).scaled(&q("q^{-1}")))
                    .scaled(&q("q + q^{-1}").inv().unwrap()),
            );
        let rhs = inner.scaled(&q("q - q^{-1}").pow(2)).add(&a.one());
        let lhs = a.mul(c, c);
        report.assert_check(
            "sl(2): C^2 = (q - q^-1)^2 (X0^2 + (q X- X+ + q^-1 X+ X-)/(q + q^-1)) + 1",
            lhs == rhs,
            || fmt(&lhs),
        );
    }

    // The quadratic Casimir commutes with the generators.
    {
        let c2 = a
            .mul(x0, x0)
            .scaled(&q("q + q^{-1}"))
            .add(&a.mul(xm, xp).scaled(&q("q")))
            .add(&a.mul(xp, xm).scaled(&q("q^{-1}")));
        let ok = [x0, xp, xm].iter().all(|x| a.commutator(&c2, x).is_zero());
        report.assert_check("sl(2): C_2 commutes with X0, X+, X-", ok, String::new);
    }

    // Diamond-lemma certificate for the Y-presentation.
    {
        let rules = y_rules();
        let conf = rules.check_confluence().map_err(crate::uq::UqError::from)?;
        report.assert_check(
            format!(
                "sl(2): Y-rule system confluent ({} ambiguities)",
                conf.ambiguities_checked
            ),
            conf.is_confluent(),
            || conf.to_string(),
        );
    }

    // The antisymmetriser table, and gamma' on the diagonal reported only.
    {
        let dnorm = casimir_eigenvalue();
        let gamma_prime = |i: usize, j: usize| -> CoordVector<(usize, usize)> {
            let mut unit: CoordVector<(usize, usize)> = BTreeMap::new();
            unit.insert((i, j), Scalar::one());
            let g = ql.apply_gamma(&unit);
            let mut out: CoordVector<(usize, usize)> = BTreeMap::new();
            for (k, v) in &g {
                let scaled = v * &dnorm;
                if !scaled.is_zero() {
                    out.insert(*k, scaled);
                }
            }
            out
        };
        let mut ok = true;
        let mut witness = String::new();
        for ((i, j), expect) in golden_gamma_prime() {
            let got = gamma_prime(i, j);
            let want: CoordVector<(usize, usize)> = expect
                .into_iter()
                .map(|(k, cs)| (k, q(cs)))
                .collect();
            if got != want {
                ok = false;
                witness = format!("gamma'({}, {}) = {:?}", i, j, got);
                break;
            }
        }
        report.assert_check("sl(2): antisymmetriser table (8 lines)", ok, || witness);

        // The remaining diagonal line, compared against the duplicated
        // published expression; recorded, not asserted.
        let got = gamma_prime(2, 2);
        let mut dup: CoordVector<(usize, usize)> = BTreeMap::new();
        dup.insert((2, 2), q("q - q^{-1}").pow(2));
        let ratio = &q("q - q^{-1}") / &q("q + q^{-1}");
        dup.insert((0, 1), ratio.clone());
        dup.insert((1, 0), -&ratio);
        report.report_only(
            "sl(2): gamma'(X0 (x) X0) vs the duplicated printed line",
            if got == dup { "matches the second printed expression" } else { "differs" },
        );

        // gamma^2 = ((q^2 + q^-2)/(q^2 - 1 + q^-2)) gamma.
        let ev = &(&Scalar::q_pow(2) + &Scalar::q_pow(-2)) / &dnorm;
        let mut ok = true;
        'outer: for i in 0..3 {
            for j in 0..3 {
                let mut unit: CoordVector<(usize, usize)> = BTreeMap::new();
                unit.insert((i, j), Scalar::one());
                let g1 = ql.apply_gamma(&unit);
                let g2 = ql.apply_gamma(&g1);
                let want: CoordVector<(usize, usize)> = g1
                    .iter()
                    .map(|(k, v)| (*k, v * &ev))
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                if g2 != want {
                    ok = false;
                    break 'outer;
                }
            }
        }
        report.assert_check(
            "sl(2): gamma^2 = ((q^2 + q^-2)/(q^2 - 1 + q^-2)) gamma",
            ok,
            String::new,
        );

        // Kernel of gamma' contains the pure squares.
        let ok = gamma_prime(0, 0).is_empty() && gamma_prime(1, 1).is_empty();
        report.assert_check("sl(2): gamma kills X+ (x) X+ and X- (x) X-", ok, String::new);
    }

    // Balancedness.
    {
        let axioms = ql.verify_axioms();
        let balanced = axioms
            .checks
            .iter()
            .find(|c| c.name.contains("right quantum Jacobi"))
            .map(|c| c.verdict == crate::report::Verdict::Holds)
            .unwrap_or(false);
        report.assert_check("sl(2): balanced (right quantum Jacobi)", balanced, String::new);
    }

    // Ordered monomials X-^l X0^m X+^n of degree at most 5, with and without
    // a factor of C, have independent normal forms in U.
    {
        let mut vectors = Vec::new();
        let pow = |base: &AlgebraElement| -> Vec<AlgebraElement> {
            let mut acc = vec![a.one()];
            for k in 1..=5usize {
                let next = a.mul(&acc[k - 1], base);
                acc.push(next);
            }
            acc
        };
        let pm = pow(xm);
        let p0 = pow(x0);
        let pp = pow(xp);
        for l in 0..=5usize {
            for m in 0..=5 - l {
                for nn in 0..=5 - l - m {
                    let mono = a.mul(&a.mul(&pm[l], &p0[m]), &pp[nn]);
                    vectors.push(mono.coords().clone());
                    vectors.push(a.mul(c, &mono).coords().clone());
                }
            }
        }
        let rank = row_reduce(&vectors).rank();
        report.assert_check(
            format!(
                "sl(2): degree-5 ordered monomials independent ({} of {})",
                rank,
                vectors.len()
            ),
            rank == vectors.len() && vectors.len() == 112,
            || format!("rank {}", rank),
        );
    }

    Ok(report)
}
