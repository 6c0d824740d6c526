//! Preset construction for U_q(sl n), 2 <= n <= 4.
//!
//! The alphabet has one lowering and one raising letter per positive root
//! (intervals of simple roots in the convex order) plus the group-like weight
//! letters. Straightening rules inside each block are not hard-coded: for
//! every out-of-order pair of root letters the right-hand side is solved for
//! exactly, by expanding into simple letters and testing membership in the
//! weight-homogeneous component of the two-sided Serre ideal. Cross rules
//! between raising and lowering letters are then derived by a staged
//! reduction, and the assembled system is certified confluent before the
//! algebra is handed out. Non-confluence aborts construction.

use super::{Algebra, AlgebraElement, AlgebraRef, TensorElement, UqError};
use crate::linalg::{row_reduce, solve_in_span, CoordVector};
use crate::rewrite::{Alphabet, FreeElement, Iv, Letter, RewriteRule, RuleSet, Word};
use crate::scalar::Scalar;
use crate::weight::Weight;
use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

/// Builds (or fetches from the process-wide cache) the preset algebra.
pub fn make_algebra(n: usize) -> Result<AlgebraRef, UqError> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, AlgebraRef>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(a) = cache.lock().unwrap().get(&n) {
        return Ok(a.clone());
    }
    let built = AlgebraRef::new(build_algebra(n)?);
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| built.clone());
    Ok(built)
}

fn build_algebra(n: usize) -> Result<Algebra, UqError> {
    if !(2..=4).contains(&n) {
        return Err(UqError::UnsupportedRank(n));
    }
    let rank = n - 1;
    let roots = interval_roots(rank);

    let alphabet = Alphabet {
        lo: roots.iter().map(|&iv| (iv, root_name("F", iv))).collect(),
        hi: roots.iter().map(|&iv| (iv, root_name("E", iv))).collect(),
    };

    let expand_e = expansions(&roots, |iv| Letter::Hi(iv), false);
    let expand_f = expansions(&roots, |iv| Letter::Lo(iv), true);

    let intra_e = derive_block_rules(rank, &roots, &expand_e, |iv| Letter::Hi(iv))?;
    let intra_f = derive_block_rules(rank, &roots, &expand_f, |iv| Letter::Lo(iv))?;

    let cross = derive_cross_rules(rank, &roots, &alphabet, &expand_e, &expand_f, &intra_e, &intra_f)?;

    let mut rules = Vec::new();
    rules.extend(intra_f);
    rules.extend(intra_e);
    rules.extend(cross);
    rules.sort_by(|a, b| a.lhs().cmp(b.lhs()));
    let rules = RuleSet::new(alphabet, rules, true);

    let confluence = rules.check_confluence()?;
    if !confluence.is_confluent() {
        return Err(UqError::NotConfluent(confluence.to_string()));
    }

    let mut algebra = Algebra {
        n,
        rank,
        roots: roots.clone(),
        rules,
        confluence,
        expand_e,
        expand_f,
        delta_e: BTreeMap::new(),
        delta_f: BTreeMap::new(),
        anti_e: BTreeMap::new(),
        anti_f: BTreeMap::new(),
    };
    fill_hopf_tables(&mut algebra);
    Ok(algebra)
}

/// Positive roots of sl(rank+1) as inclusive intervals, sorted in the convex
/// (lexicographic) order.
fn interval_roots(rank: usize) -> Vec<Iv> {
    let mut out = Vec::new();
    for i in 0..rank as u8 {
        for j in i..rank as u8 {
            out.push((i, j));
        }
    }
    out.sort();
    out
}

fn root_name(base: &str, iv: Iv) -> String {
    let digits: String = (iv.0..=iv.1).map(|i| (i + 1).to_string()).collect();
    format!("{}{}", base, digits)
}

/// Expansions of the root letters into simple-letter words of the free
/// algebra. Raising: E_[i,j] = E_j E_[i,j-1] - q^{-1} E_[i,j-1] E_j.
/// Lowering: F_[i,j] = q F_[i,j-1] F_j - F_j F_[i,j-1].
fn expansions(
    roots: &[Iv],
    mk: impl Fn(Iv) -> Letter,
    lowering: bool,
) -> BTreeMap<Iv, FreeElement> {
    let mut out: BTreeMap<Iv, FreeElement> = BTreeMap::new();
    let mut by_len: Vec<Iv> = roots.to_vec();
    by_len.sort_by_key(|iv| iv.1 - iv.0);
    for iv in by_len {
        if iv.0 == iv.1 {
            out.insert(iv, FreeElement::from_word(Word::single(mk(iv))));
            continue;
        }
        let prev = out[&(iv.0, iv.1 - 1)].clone();
        let last = FreeElement::from_word(Word::single(mk((iv.1, iv.1))));
        let expansion = if lowering {
            let a = prev.concat_mul(&last).scaled(&Scalar::q_pow(1));
            a.add(&last.concat_mul(&prev).neg())
        } else {
            let a = last.concat_mul(&prev);
            a.add(&prev.concat_mul(&last).scaled(&-Scalar::q_pow(-1)))
        };
        out.insert(iv, expansion);
    }
    out
}

fn iv_degree(iv: Iv, rank: usize) -> Vec<i64> {
    let mut d = vec![0i64; rank];
    for t in iv.0..=iv.1 {
        d[t as usize] += 1;
    }
    d
}

fn deg_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn deg_sub_checked(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    if d.iter().all(|&x| x >= 0) {
        Some(d)
    } else {
        None
    }
}

/// All non-decreasing root-letter sequences with the given total multidegree.
fn ordered_root_words(roots: &[Iv], rank: usize, target: &[i64]) -> Vec<Vec<Iv>> {
    fn rec(
        roots: &[Iv],
        rank: usize,
        start: usize,
        rem: &[i64],
        cur: &mut Vec<Iv>,
        out: &mut Vec<Vec<Iv>>,
    ) {
        if rem.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for (r, &iv) in roots.iter().enumerate().skip(start) {
            if let Some(next) = deg_sub_checked(rem, &iv_degree(iv, rank)) {
                cur.push(iv);
                rec(roots, rank, r, &next, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(roots, rank, 0, target, &mut Vec::new(), &mut out);
    out
}

/// All words over the simple letters realising a multidegree.
fn simple_words(rank: usize, target: &[i64], mk: &impl Fn(Iv) -> Letter) -> Vec<Word> {
    fn rec(
        rank: usize,
        rem: &mut Vec<i64>,
        cur: &mut Vec<Letter>,
        mk: &impl Fn(Iv) -> Letter,
        out: &mut Vec<Word>,
    ) {
        if rem.iter().all(|&x| x == 0) {
            out.push(Word(cur.clone()));
            return;
        }
        for t in 0..rank {
            if rem[t] > 0 {
                rem[t] -= 1;
                cur.push(mk((t as u8, t as u8)));
                rec(rank, rem, cur, mk, out);
                cur.pop();
                rem[t] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(rank, &mut target.to_vec(), &mut Vec::new(), mk, &mut out);
    out
}

/// Componentwise splits a = x + y of a multidegree.
fn splits(a: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &c in a {
        let mut next = Vec::new();
        for (x, y) in &out {
            for k in 0..=c {
                let mut nx = x.clone();
                let mut ny = y.clone();
                nx.push(k);
                ny.push(c - k);
                next.push((nx, ny));
            }
        }
        out = next;
    }
    out
}

/// The defining relations of one triangular block over simple letters:
/// the degree-3 Serre relations for adjacent pairs and plain commutation for
/// distant pairs. Both blocks share the same coefficients.
fn block_relations(rank: usize, mk: &impl Fn(Iv) -> Letter) -> Vec<(FreeElement, Vec<i64>)> {
    let two = &Scalar::q_pow(1) + &Scalar::q_pow(-1);
    let single = |t: usize| mk((t as u8, t as u8));
    let mut out = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            if i.abs_diff(j) == 1 {
                let mut rel = FreeElement::zero();
                rel.add_term(Word(vec![single(i), single(i), single(j)]), &Scalar::one());
                rel.add_term(Word(vec![single(i), single(j), single(i)]), &-&two);
                rel.add_term(Word(vec![single(j), single(i), single(i)]), &Scalar::one());
                let mut d = vec![0i64; rank];
                d[i] = 2;
                d[j] = 1;
                out.push((rel, d));
            } else if i < j {
                let mut rel = FreeElement::zero();
                rel.add_term(Word(vec![single(i), single(j)]), &Scalar::one());
                rel.add_term(Word(vec![single(j), single(i)]), &-Scalar::one());
                let mut d = vec![0i64; rank];
                d[i] = 1;
                d[j] = 1;
                out.push((rel, d));
            }
        }
    }
    out
}

/// Expansion of an ordered root word into simple letters.
fn expand_word(word: &[Iv], expansions: &BTreeMap<Iv, FreeElement>) -> FreeElement {
    let mut acc = FreeElement::unit();
    for iv in word {
        acc = acc.concat_mul(&expansions[iv]);
    }
    acc
}

/// Derives the straightening rule for every out-of-order pair of root letters
/// in one block by exact ideal-membership linear algebra.
///
/// For a pair beta > alpha the ansatz is a combination of ordered root words
/// of the same multidegree; the difference must lie in the weight-homogeneous
/// component of the two-sided relation ideal, which is spanned exactly by
/// u * relation * w over complementary-degree words u, w.
fn derive_block_rules(
    rank: usize,
    roots: &[Iv],
    expansions: &BTreeMap<Iv, FreeElement>,
    mk: impl Fn(Iv) -> Letter,
) -> Result<Vec<RewriteRule>, UqError> {
    let relations = block_relations(rank, &mk);
    let mut rules = Vec::new();
    for (bi, &beta) in roots.iter().enumerate() {
        for &alpha in roots.iter().take(bi) {
            let target_deg = deg_add(&iv_degree(beta, rank), &iv_degree(alpha, rank));
            let target = expansions[&beta].concat_mul(&expansions[&alpha]);

            let candidates = ordered_root_words(roots, rank, &target_deg);
            let cand_vecs: Vec<CoordVector<Word>> = candidates
                .iter()
                .map(|w| expand_word(w, expansions).0)
                .collect();

            let mut ideal_vecs: Vec<CoordVector<Word>> = Vec::new();
            for (rel, rel_deg) in &relations {
                let Some(rem) = deg_sub_checked(&target_deg, rel_deg) else {
                    continue;
                };
                for (a, b) in splits(&rem) {
                    for u in simple_words(rank, &a, &mk) {
                        let left = FreeElement::from_word(u).concat_mul(rel);
                        for w in simple_words(rank, &b, &mk) {
                            ideal_vecs.push(left.concat_mul(&FreeElement::from_word(w)).0);
                        }
                    }
                }
            }

            let rank_ideal = row_reduce(&ideal_vecs).rank();
            let mut all = cand_vecs.clone();
            all.extend(ideal_vecs.iter().cloned());
            let rank_all = row_reduce(&all).rank();
            if rank_all - rank_ideal != candidates.len() {
                return Err(UqError::Derivation(format!(
                    "ordered words of degree {:?} are dependent modulo the relation ideal",
                    target_deg
                )));
            }

            let solution = solve_in_span(&all, &target.0).ok_or_else(|| {
                UqError::Derivation(format!(
                    "no straightening of {:?}{:?} over ordered words",
                    beta, alpha
                ))
            })?;

            let mut rhs = FreeElement::zero();
            for (word, c) in candidates.iter().zip(&solution) {
                rhs.add_term(Word(word.iter().map(|&iv| mk(iv)).collect()), c);
            }
            let lhs = Word(vec![mk(beta), mk(alpha)]);
            rules.push(RewriteRule::new(lhs, rhs).map_err(UqError::Rewrite)?);
        }
    }
    Ok(rules)
}

/// The defining mixed relations on simple generators:
/// E_i F_i = F_i E_i + (q^{2H_i} - q^{-2H_i})/(q - q^{-1}), and E_i F_j = F_j E_i
/// for i != j.
fn simple_cross_rules(rank: usize) -> Vec<RewriteRule> {
    let qdiff_inv = (&Scalar::q_pow(1) - &Scalar::q_pow(-1)).inv().expect("q - q^{-1} nonzero");
    let mut out = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            let lhs = Word(vec![
                Letter::Hi((i as u8, i as u8)),
                Letter::Lo((j as u8, j as u8)),
            ]);
            let mut rhs = FreeElement::from_word(Word(vec![
                Letter::Lo((j as u8, j as u8)),
                Letter::Hi((i as u8, i as u8)),
            ]));
            if i == j {
                let h2 = Weight::simple_root(rank, i).scaled(2);
                rhs.add_term(Word::single(Letter::Wt(h2.clone())), &qdiff_inv);
                rhs.add_term(Word::single(Letter::Wt(-&h2)), &-&qdiff_inv);
            }
            out.push(RewriteRule::new(lhs, rhs).expect("defining cross rule is decreasing"));
        }
    }
    out
}

/// Derives the full raising-past-lowering rule table. Composite pairs are
/// reduced in two stages: first only the simple cross rules and the built-in
/// weight reductions (which sort letters into lowering/weight/raising shape
/// without touching block-internal order), then the block straightening rules.
fn derive_cross_rules(
    rank: usize,
    roots: &[Iv],
    alphabet: &Alphabet,
    expand_e: &BTreeMap<Iv, FreeElement>,
    expand_f: &BTreeMap<Iv, FreeElement>,
    intra_e: &[RewriteRule],
    intra_f: &[RewriteRule],
) -> Result<Vec<RewriteRule>, UqError> {
    let simple = simple_cross_rules(rank);
    let stage1 = RuleSet::new(alphabet.clone(), simple.clone(), true);
    let mut intra = intra_e.to_vec();
    intra.extend(intra_f.iter().cloned());
    let stage2 = RuleSet::new(alphabet.clone(), intra, true);

    let mut out = Vec::new();
    for &a in roots {
        for &b in roots {
            if a.0 == a.1 && b.0 == b.1 {
                continue; // covered by the defining rules below
            }
            let prod = expand_e[&a].concat_mul(&expand_f[&b]);
            let sorted = stage1.normal_form(&prod).map_err(UqError::Rewrite)?;
            let rhs = stage2.normal_form(&sorted).map_err(UqError::Rewrite)?;
            let lhs = Word(vec![Letter::Hi(a), Letter::Lo(b)]);
            out.push(RewriteRule::new(lhs, rhs).map_err(UqError::Rewrite)?);
        }
    }
    out.extend(simple);
    Ok(out)
}

/// Fills the coproduct and antipode tables for all root letters.
///
/// Simple letters carry the defining values; composite letters inherit them
/// through their recursive definitions, with products taken in the finished
/// algebra (the tables themselves are not consulted by multiplication).
fn fill_hopf_tables(algebra: &mut Algebra) {
    let rank = algebra.rank;
    let mut by_len = algebra.roots.clone();
    by_len.sort_by_key(|iv| iv.1 - iv.0);

    let mut delta_e: BTreeMap<Iv, TensorElement> = BTreeMap::new();
    let mut delta_f: BTreeMap<Iv, TensorElement> = BTreeMap::new();
    let mut anti_e: BTreeMap<Iv, AlgebraElement> = BTreeMap::new();
    let mut anti_f: BTreeMap<Iv, AlgebraElement> = BTreeMap::new();

    for &iv in &by_len {
        if iv.0 == iv.1 {
            let i = iv.0 as usize;
            let hi = Weight::simple_root(rank, i);
            let qh = algebra.weight_el(&hi);
            let qh_inv = algebra.weight_el(&-&hi);
            // Delta(X_i) = X_i (x) q^{-H_i} + q^{H_i} (x) X_i for both blocks.
            let mut de = TensorElement::from_pair(&algebra.e(i), &qh_inv);
            de.add_scaled(&TensorElement::from_pair(&qh, &algebra.e(i)), &Scalar::one());
            delta_e.insert(iv, de);
            let mut df = TensorElement::from_pair(&algebra.f(i), &qh_inv);
            df.add_scaled(&TensorElement::from_pair(&qh, &algebra.f(i)), &Scalar::one());
            delta_f.insert(iv, df);
            anti_e.insert(iv, algebra.e(i).scaled(&-Scalar::q_pow(-1)));
            anti_f.insert(iv, algebra.f(i).scaled(&-Scalar::q_pow(1)));
        } else {
            let prev = (iv.0, iv.1 - 1);
            let last = (iv.1, iv.1);
            // Raising: X = E_last E_prev - q^{-1} E_prev E_last.
            let de = {
                let a = algebra.tensor_mul(&delta_e[&last], &delta_e[&prev]);
                let mut b = algebra.tensor_mul(&delta_e[&prev], &delta_e[&last]);
                b = {
                    let mut t = TensorElement::zero();
                    t.add_scaled(&b, &-Scalar::q_pow(-1));
                    t
                };
                let mut t = a;
                t.add_scaled(&b, &Scalar::one());
                t
            };
            delta_e.insert(iv, de);
            let se = algebra
                .mul(&anti_e[&prev], &anti_e[&last])
                .sub(&algebra.mul(&anti_e[&last], &anti_e[&prev]).scaled(&Scalar::q_pow(-1)));
            anti_e.insert(iv, se);
            // Lowering: X = q F_prev F_last - F_last F_prev.
            let df = {
                let mut a = algebra.tensor_mul(&delta_f[&prev], &delta_f[&last]);
                a = {
                    let mut t = TensorElement::zero();
                    t.add_scaled(&a, &Scalar::q_pow(1));
                    t
                };
                let b = algebra.tensor_mul(&delta_f[&last], &delta_f[&prev]);
                let mut t = a;
                t.add_scaled(&b, &-Scalar::one());
                t
            };
            delta_f.insert(iv, df);
            let sf = algebra
                .mul(&anti_f[&last], &anti_f[&prev])
                .scaled(&Scalar::q_pow(1))
                .sub(&algebra.mul(&anti_f[&prev], &anti_f[&last]));
            anti_f.insert(iv, sf);
        }
    }

    algebra.delta_e = delta_e;
    algebra.delta_f = delta_f;
    algebra.anti_e = anti_e;
    algebra.anti_f = anti_f;
}
