//! The simply-connected quantised enveloping algebra U_q(sl n).
//!
//! Elements are kept in Poincare-Birkhoff-Witt normal form: every monomial is
//! a lowering word, a single group-like weight factor, and a raising word,
//! with both words ordered along the convex ordering of the positive roots.
//! Normal forms are computed by the rewriting presets built in [`build`] and
//! are unique by the confluence certificate checked at construction time.
//!
//! The Hopf structure (coproduct, antipode, counit) and the adjoint action
//! are provided on top, together with the recursive central-element machinery
//! in [`central`].

mod build;
mod central;
mod hopf;
#[cfg(test)]
mod tests;

pub use build::make_algebra;
pub use central::{central_element, is_central, k_sequence, verify_k_relations};
pub use hopf::hopf_suite;

use crate::linalg::CoordVector;
use crate::rewrite::{iv_len, ConfluenceReport, FreeElement, Iv, Letter, RewriteError, RuleSet, Word};
use crate::scalar::Scalar;
use crate::weight::Weight;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UqError {
    #[error("unsupported rank: n = {0} (presets cover 2 <= n <= 4)")]
    UnsupportedRank(usize),
    #[error("preset rule set is not confluent:\n{0}")]
    NotConfluent(String),
    #[error("straightening derivation failed: {0}")]
    Derivation(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

/// A PBW basis monomial: lowering word, weight, raising word.
///
/// Both words are non-decreasing sequences of positive-root intervals in the
/// convex order; the weight exponent is an integral weight. The ordering
/// agrees with the rewrite module's graded term order on the corresponding
/// words, extended to tensor pairs lexicographically where needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PBWMonomial {
    pub f: Vec<Iv>,
    pub w: Weight,
    pub e: Vec<Iv>,
}

impl PBWMonomial {
    pub fn unit(rank: usize) -> Self {
        PBWMonomial { f: Vec::new(), w: Weight::zero(rank), e: Vec::new() }
    }

    pub fn grade(&self) -> usize {
        self.f.iter().chain(&self.e).map(|&iv| iv_len(iv)).sum()
    }

    pub fn is_scalar(&self) -> bool {
        self.f.is_empty() && self.e.is_empty() && self.w.is_zero()
    }

    /// The monomial's eigenweight under the diagonal adjoint action:
    /// the sum of raising roots minus the sum of lowering roots.
    pub fn ad_weight(&self) -> Weight {
        let rank = self.w.rank();
        let mut acc = Weight::zero(rank);
        for &(lo, hi) in &self.e {
            acc = &acc + &Weight::interval_root(rank, lo as usize, hi as usize);
        }
        for &(lo, hi) in &self.f {
            acc = &acc - &Weight::interval_root(rank, lo as usize, hi as usize);
        }
        acc
    }

    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.f.len() + self.e.len() + 1);
        letters.extend(self.f.iter().map(|&iv| Letter::Lo(iv)));
        if !self.w.is_zero() {
            letters.push(Letter::Wt(self.w.clone()));
        }
        letters.extend(self.e.iter().map(|&iv| Letter::Hi(iv)));
        Word(letters)
    }

    /// Parses a word in triangular normal form (lowering letters, at most one
    /// weight letter, raising letters). Panics on malformed input; only
    /// called on outputs of the preset rewriting system.
    fn from_word(w: &Word, rank: usize) -> Self {
        let mut f = Vec::new();
        let mut weight = Weight::zero(rank);
        let mut e = Vec::new();
        // Stages: 0 lowering, 1 weight seen, 2 raising.
        let mut stage = 0u8;
        for l in &w.0 {
            match l {
                Letter::Lo(iv) => {
                    assert!(stage == 0, "lowering letter out of position");
                    f.push(*iv);
                }
                Letter::Wt(x) => {
                    assert!(stage == 0, "weight letter out of position");
                    stage = 1;
                    weight = x.clone();
                }
                Letter::Hi(iv) => {
                    stage = 2;
                    e.push(*iv);
                }
            }
        }
        PBWMonomial { f, w: weight, e }
    }
}

impl Ord for PBWMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| {
                (self.f.len() + self.e.len()).cmp(&(other.f.len() + other.e.len()))
            })
            .then_with(|| {
                let proj = |m: &PBWMonomial| -> Vec<(u8, Iv)> {
                    m.f.iter()
                        .map(|&iv| (0u8, iv))
                        .chain(m.e.iter().map(|&iv| (2u8, iv)))
                        .collect()
                };
                proj(self).cmp(&proj(other))
            })
            .then_with(|| (!self.w.is_zero()).cmp(&!other.w.is_zero()))
            .then_with(|| self.w.cmp(&other.w))
    }
}

impl PartialOrd for PBWMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of PBW monomials; zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement(pub BTreeMap<PBWMonomial, Scalar>);

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_term(m: PBWMonomial, c: Scalar) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_term(m, &c);
        out
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Scalar) {
        for (m, x) in &other.0 {
            self.add_term(m.clone(), &(c * x));
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scaled(&self, c: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scaled(&-Scalar::one())
    }

    /// View as a sparse coordinate vector over monomial keys.
    pub fn coords(&self) -> &CoordVector<PBWMonomial> {
        &self.0
    }

    pub fn from_coords(v: CoordVector<PBWMonomial>) -> Self {
        AlgebraElement(v)
    }

    pub fn to_free(&self) -> FreeElement {
        let mut out = FreeElement::zero();
        for (m, c) in &self.0 {
            out.add_term(m.to_word(), c);
        }
        out
    }

    /// Coefficient-wise q-conjugation (the bar involution on scalars only).
    pub fn q_conjugate_coeffs(&self) -> AlgebraElement {
        AlgebraElement(
            self.0
                .iter()
                .map(|(m, c)| (m.clone(), c.q_conjugate()))
                .collect(),
        )
    }

    /// The common adjoint weight of all monomials, when uniform.
    pub fn uniform_ad_weight(&self) -> Option<Weight> {
        let mut it = self.0.keys();
        let first = it.next()?.ad_weight();
        for m in it {
            if m.ad_weight() != first {
                return None;
            }
        }
        Some(first)
    }
}

/// An element of the tensor square, both slots in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement(pub BTreeMap<(PBWMonomial, PBWMonomial), Scalar>);

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, k: (PBWMonomial, PBWMonomial), c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        for (k, x) in &other.0 {
            self.add_term(k.clone(), &(c * x));
        }
    }

    pub fn from_pair(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        let mut out = TensorElement::zero();
        for (m1, c1) in &a.0 {
            for (m2, c2) in &b.0 {
                out.add_term((m1.clone(), m2.clone()), &(c1 * c2));
            }
        }
        out
    }
}

/// An element of the triple tensor power; used for coassociativity and the
/// braid-relation checks.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor3Element(pub BTreeMap<(PBWMonomial, PBWMonomial, PBWMonomial), Scalar>);

impl Tensor3Element {
    pub fn zero() -> Self {
        Tensor3Element(BTreeMap::new())
    }

    pub fn add_term(&mut self, k: (PBWMonomial, PBWMonomial, PBWMonomial), c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&k);
        }
    }
}

/// An immutable algebra descriptor: the preset rule system, its confluence
/// certificate, and cached structure tables for the root letters.
#[derive(Debug)]
pub struct Algebra {
    pub n: usize,
    pub rank: usize,
    /// Positive roots as intervals, in the convex order.
    pub roots: Vec<Iv>,
    pub rules: RuleSet,
    pub confluence: ConfluenceReport,
    /// Expansions of composite root letters into simple-letter words.
    pub(crate) expand_e: BTreeMap<Iv, FreeElement>,
    pub(crate) expand_f: BTreeMap<Iv, FreeElement>,
    /// Coproducts and antipodes of the root letters.
    pub(crate) delta_e: BTreeMap<Iv, TensorElement>,
    pub(crate) delta_f: BTreeMap<Iv, TensorElement>,
    pub(crate) anti_e: BTreeMap<Iv, AlgebraElement>,
    pub(crate) anti_f: BTreeMap<Iv, AlgebraElement>,
}

impl Algebra {
    // ---- constructors for elements ----

    pub fn zero_el(&self) -> AlgebraElement {
        AlgebraElement::zero()
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::from_term(PBWMonomial::unit(self.rank), Scalar::one())
    }

    pub fn scalar_el(&self, c: Scalar) -> AlgebraElement {
        AlgebraElement::from_term(PBWMonomial::unit(self.rank), c)
    }

    /// Raising root vector for an interval (simple when lo == hi).
    pub fn e_root(&self, iv: Iv) -> AlgebraElement {
        AlgebraElement::from_term(
            PBWMonomial { f: vec![], w: Weight::zero(self.rank), e: vec![iv] },
            Scalar::one(),
        )
    }

    pub fn f_root(&self, iv: Iv) -> AlgebraElement {
        AlgebraElement::from_term(
            PBWMonomial { f: vec![iv], w: Weight::zero(self.rank), e: vec![] },
            Scalar::one(),
        )
    }

    /// Simple raising generator E_i, 0-indexed.
    pub fn e(&self, i: usize) -> AlgebraElement {
        self.e_root((i as u8, i as u8))
    }

    pub fn f(&self, i: usize) -> AlgebraElement {
        self.f_root((i as u8, i as u8))
    }

    /// Group-like q^lambda.
    pub fn weight_el(&self, w: &Weight) -> AlgebraElement {
        AlgebraElement::from_term(
            PBWMonomial { f: vec![], w: w.clone(), e: vec![] },
            Scalar::one(),
        )
    }

    /// q^{H_i} for a simple root.
    pub fn q_h(&self, i: usize) -> AlgebraElement {
        self.weight_el(&Weight::simple_root(self.rank, i))
    }

    // ---- normal form and multiplication ----

    pub fn element_from_free(&self, x: &FreeElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, c) in &x.0 {
            out.add_term(PBWMonomial::from_word(w, self.rank), c);
        }
        out
    }

    pub fn normal_form(&self, x: &FreeElement) -> Result<AlgebraElement, RewriteError> {
        Ok(self.element_from_free(&self.rules.normal_form(x)?))
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let free = a.to_free().concat_mul(&b.to_free());
        self.normal_form(&free).expect("step budget exceeded in multiplication")
    }

    pub fn mul_all(&self, parts: &[&AlgebraElement]) -> AlgebraElement {
        let mut acc = self.one();
        for p in parts {
            acc = self.mul(&acc, p);
        }
        acc
    }

    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    // ---- Hopf structure ----

    /// Coproduct of a root letter (cached).
    fn delta_letter(&self, block_lo: bool, iv: Iv) -> &TensorElement {
        if block_lo {
            &self.delta_f[&iv]
        } else {
            &self.delta_e[&iv]
        }
    }

    pub fn tensor_mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a1, a2), ca) in &a.0 {
            let e_a1 = AlgebraElement::from_term(a1.clone(), Scalar::one());
            let e_a2 = AlgebraElement::from_term(a2.clone(), Scalar::one());
            for ((b1, b2), cb) in &b.0 {
                let p1 = self.mul(&e_a1, &AlgebraElement::from_term(b1.clone(), Scalar::one()));
                let p2 = self.mul(&e_a2, &AlgebraElement::from_term(b2.clone(), Scalar::one()));
                let c = ca * cb;
                for (m1, c1) in &p1.0 {
                    for (m2, c2) in &p2.0 {
                        out.add_term((m1.clone(), m2.clone()), &(&c * &(c1 * c2)));
                    }
                }
            }
        }
        out
    }

    /// The coproduct, an algebra morphism into the tensor square.
    pub fn coproduct(&self, x: &AlgebraElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (m, c) in &x.0 {
            let mut acc = TensorElement::from_pair(&self.one(), &self.one());
            for &iv in &m.f {
                acc = self.tensor_mul(&acc, self.delta_letter(true, iv));
            }
            if !m.w.is_zero() {
                let g = self.weight_el(&m.w);
                let dg = TensorElement::from_pair(&g, &g);
                acc = self.tensor_mul(&acc, &dg);
            }
            for &iv in &m.e {
                acc = self.tensor_mul(&acc, self.delta_letter(false, iv));
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// The antipode, an anti-homomorphism.
    pub fn antipode(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &x.0 {
            let mut acc = self.one();
            // S reverses products: letters are consumed right to left.
            for &iv in m.e.iter().rev() {
                acc = self.mul(&acc, &self.anti_e[&iv]);
            }
            if !m.w.is_zero() {
                acc = self.mul(&acc, &self.weight_el(&-&m.w));
            }
            for &iv in m.f.iter().rev() {
                acc = self.mul(&acc, &self.anti_f[&iv]);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// The counit.
    pub fn counit(&self, x: &AlgebraElement) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &x.0 {
            if m.f.is_empty() && m.e.is_empty() {
                out += c;
            }
        }
        out
    }

    // ---- adjoint action ----

    /// ad E_i for a simple root: E_i x q^{H_i} - q^{-1} q^{H_i} x E_i.
    fn ad_simple_e(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        let e = self.e(i);
        let qh = self.q_h(i);
        let left = self.mul_all(&[&e, x, &qh]);
        let right = self.mul_all(&[&qh, x, &e]).scaled(&Scalar::q_pow(-1));
        left.sub(&right)
    }

    /// ad F_i for a simple root: F_i x q^{H_i} - q^{+1} q^{H_i} x F_i.
    fn ad_simple_f(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        let f = self.f(i);
        let qh = self.q_h(i);
        let left = self.mul_all(&[&f, x, &qh]);
        let right = self.mul_all(&[&qh, x, &f]).scaled(&Scalar::q_pow(1));
        left.sub(&right)
    }

    /// ad q^lambda: conjugation, diagonal on each monomial with eigenvalue
    /// q^{<mu, lambda>} for ad-weight mu. The doubled pairing accumulates per
    /// root letter as an integer v-exponent.
    pub fn ad_weight_el(&self, lambda: &Weight, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &x.0 {
            let mut vexp = 0i64;
            for &(lo, hi) in &m.e {
                vexp += lambda.doubled_pairing_interval(lo as usize, hi as usize);
            }
            for &(lo, hi) in &m.f {
                vexp -= lambda.doubled_pairing_interval(lo as usize, hi as usize);
            }
            out.add_term(m.clone(), &(c * &Scalar::v_pow(vexp)));
        }
        out
    }

    /// ad of a single root letter, composite letters via their expansion and
    /// the representation property ad(xy) = ad x . ad y.
    fn ad_letter(&self, block_lo: bool, iv: Iv, x: &AlgebraElement) -> AlgebraElement {
        if iv.0 == iv.1 {
            return if block_lo {
                self.ad_simple_f(iv.0 as usize, x)
            } else {
                self.ad_simple_e(iv.0 as usize, x)
            };
        }
        let expansion = if block_lo { &self.expand_f[&iv] } else { &self.expand_e[&iv] };
        let mut out = AlgebraElement::zero();
        for (word, c) in &expansion.0 {
            let mut acc = x.clone();
            for l in word.0.iter().rev() {
                let idx = match l {
                    Letter::Lo(j) => {
                        acc = self.ad_simple_f(j.0 as usize, &acc);
                        continue;
                    }
                    Letter::Hi(j) => j,
                    Letter::Wt(_) => unreachable!("expansions contain no weight letters"),
                };
                acc = self.ad_simple_e(idx.0 as usize, &acc);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// The adjoint action ad u(y), composed letter by letter over each
    /// monomial of u and extended linearly.
    pub fn ad(&self, u: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &u.0 {
            let mut acc = y.clone();
            for &iv in m.e.iter().rev() {
                acc = self.ad_letter(false, iv, &acc);
            }
            if !m.w.is_zero() {
                acc = self.ad_weight_el(&m.w, &acc);
            }
            for &iv in m.f.iter().rev() {
                acc = self.ad_letter(true, iv, &acc);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// The raw Hopf-formula adjoint action sum x_(1) y S(x_(2)); used as an
    /// independent cross-check of [`Algebra::ad`].
    pub fn ad_hopf(&self, u: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((m1, m2), c) in &self.coproduct(u).0 {
            let left = AlgebraElement::from_term(m1.clone(), Scalar::one());
            let right = self.antipode(&AlgebraElement::from_term(m2.clone(), Scalar::one()));
            out.add_scaled(&self.mul_all(&[&left, y, &right]), c);
        }
        out
    }

    /// The adjoint bracket [x, y] = ad x(y).
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.ad(x, y)
    }

    // ---- rendering and serialization ----

    pub fn root_name(&self, block_lo: bool, iv: Iv) -> String {
        let base = if block_lo { "F" } else { "E" };
        let digits: String = (iv.0..=iv.1).map(|i| (i + 1).to_string()).collect();
        format!("{}{}", base, digits)
    }

    pub fn element_to_string(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.0.iter()
            .map(|(m, c)| {
                let mut parts = Vec::new();
                for &iv in &m.f {
                    parts.push(self.root_name(true, iv));
                }
                if !m.w.is_zero() {
                    parts.push(format!("q^{}", m.w));
                }
                for &iv in &m.e {
                    parts.push(self.root_name(false, iv));
                }
                let word = if parts.is_empty() { "1".to_string() } else { parts.join(" ") };
                format!("({}) {}", c, word)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn element_to_json(&self, x: &AlgebraElement) -> serde_json::Value {
        let terms: Vec<ElementTermDoc> =
            x.0.iter()
                .map(|(m, c)| ElementTermDoc {
                    f: m.f.iter().map(|&iv| self.root_name(true, iv)).collect(),
                    w: m.w.0.clone(),
                    e: m.e.iter().map(|&iv| self.root_name(false, iv)).collect(),
                    c: c.to_q_string(),
                })
                .collect();
        serde_json::to_value(terms).expect("element serialization")
    }

    pub fn element_from_json(&self, v: &serde_json::Value) -> Result<AlgebraElement, UqError> {
        let terms: Vec<ElementTermDoc> = serde_json::from_value(v.clone())
            .map_err(|e| UqError::Derivation(format!("element parse: {}", e)))?;
        let mut out = AlgebraElement::zero();
        for t in &terms {
            let parse_iv = |name: &str| -> Result<Iv, UqError> {
                self.rules
                    .alphabet
                    .letter_by_name(name)
                    .and_then(|l| match l {
                        Letter::Lo(iv) | Letter::Hi(iv) => Some(iv),
                        Letter::Wt(_) => None,
                    })
                    .ok_or_else(|| UqError::Derivation(format!("unknown letter '{}'", name)))
            };
            let f = t.f.iter().map(|n| parse_iv(n)).collect::<Result<_, _>>()?;
            let e = t.e.iter().map(|n| parse_iv(n)).collect::<Result<_, _>>()?;
            let c = Scalar::parse(&t.c).map_err(|e| UqError::Derivation(e.to_string()))?;
            out.add_term(PBWMonomial { f, w: Weight(t.w.clone()), e }, &c);
        }
        Ok(out)
    }

    /// A deterministic corrupted copy for negative-control harnesses: one
    /// rule coefficient is multiplied by q and confluence is re-checked but
    /// not enforced.
    pub fn corrupted(&self) -> Algebra {
        let mutated = self
            .rules
            .with_mutated_coefficient(self.rules.rules.len() - 1, 0, &Scalar::q_pow(1));
        let confluence = mutated
            .check_confluence()
            .unwrap_or(ConfluenceReport { ambiguities_checked: 0, failures: vec![] });
        Algebra {
            n: self.n,
            rank: self.rank,
            roots: self.roots.clone(),
            rules: mutated,
            confluence,
            expand_e: self.expand_e.clone(),
            expand_f: self.expand_f.clone(),
            delta_e: self.delta_e.clone(),
            delta_f: self.delta_f.clone(),
            anti_e: self.anti_e.clone(),
            anti_f: self.anti_f.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ElementTermDoc {
    f: Vec<String>,
    w: Vec<i64>,
    e: Vec<String>,
    c: String,
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(f={:?}, w={}, e={:?})", self.f, self.w, self.e)
    }
}

/// Shared handle type for cached algebras.
pub type AlgebraRef = Arc<Algebra>;
