//! Generic noncommutative rewriting on words over a graded alphabet.
//!
//! Linear combinations of words reduce to normal form under a rule set, and
//! the diamond lemma turns a check of overlap ambiguities into a confluence
//! certificate: when every ambiguity resolves, normal forms are unique and the
//! irreducible words form a basis of the presented algebra.
//!
//! Letters come in a lower block, an upper block, and an optional family of
//! group-like weight letters sitting between the blocks. A letter in either
//! block is labelled by an inclusive interval of simple-root indices, which
//! fixes both its grade (the interval length) and its commutation exponent
//! with weight letters. Plain alphabets (no triangular structure) just use
//! singleton intervals in the upper block.
//!
//! Concrete rules have all-generator left-hand sides of length at least two
//! and strictly smaller right-hand sides, witnessed by the graded term order
//! at construction time. The group-like reductions (merging adjacent weight
//! letters, deleting the trivial weight, commuting weight letters past block
//! letters with an exact power of v) are built in and enabled per rule set.

use crate::scalar::Scalar;
use crate::weight::Weight;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("step budget exceeded after {0} rule applications")]
    StepBudgetExceeded(u64),
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("rule set parse error: {0}")]
    Parse(String),
}

/// An inclusive interval of simple-root indices labelling a block letter.
pub type Iv = (u8, u8);

/// The length of the interval, which is the letter's grade.
pub fn iv_len(iv: Iv) -> usize {
    (iv.1 - iv.0 + 1) as usize
}

/// One symbol of a word. Variant order gives the letter order:
/// lower block < weight letters < upper block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Lo(Iv),
    Wt(Weight),
    Hi(Iv),
}

impl Letter {
    pub fn grade(&self) -> usize {
        match self {
            Letter::Lo(iv) | Letter::Hi(iv) => iv_len(*iv),
            Letter::Wt(_) => 0,
        }
    }

    fn is_gen(&self) -> bool {
        !matches!(self, Letter::Wt(_))
    }
}

/// A word over the alphabet; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn grade(&self) -> usize {
        self.0.iter().map(Letter::grade).sum()
    }

    fn wt_count(&self) -> usize {
        self.0.iter().filter(|l| !l.is_gen()).count()
    }
}

/// Graded term order: total grade, then shortlex on the generator projection,
/// then the number of weight letters, then full lexicographic comparison.
/// Every rewrite rule must be strictly decreasing in this order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| {
                let a: Vec<&Letter> = self.0.iter().filter(|l| l.is_gen()).collect();
                let b: Vec<&Letter> = other.0.iter().filter(|l| l.is_gen()).collect();
                a.len().cmp(&b.len()).then_with(|| a.cmp(&b))
            })
            .then_with(|| self.wt_count().cmp(&other.wt_count()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of words with nonzero scalar coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeElement(pub BTreeMap<Word, Scalar>);

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement(BTreeMap::new())
    }

    pub fn unit() -> Self {
        FreeElement::from_term(Word::empty(), Scalar::one())
    }

    pub fn from_word(w: Word) -> Self {
        FreeElement::from_term(w, Scalar::one())
    }

    pub fn from_term(w: Word, c: Scalar) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(w, c);
        }
        FreeElement(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(w.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &FreeElement, c: &Scalar) {
        for (w, x) in &other.0 {
            self.add_term(w.clone(), &(c * x));
        }
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn scaled(&self, c: &Scalar) -> FreeElement {
        let mut out = FreeElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> FreeElement {
        self.scaled(&-Scalar::one())
    }

    /// Free (concatenation) product, no reduction.
    pub fn concat_mul(&self, other: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (u, a) in &self.0 {
            for (v, b) in &other.0 {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        out
    }
}

/// A rewrite rule lhs -> rhs with the termination witness checked on
/// construction: every word of rhs is strictly below lhs in the term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    lhs: Word,
    rhs: FreeElement,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: FreeElement) -> Result<Self, RewriteError> {
        if lhs.0.len() < 2 {
            return Err(RewriteError::InvalidRule(
                "left-hand side must have length at least 2".into(),
            ));
        }
        if lhs.0.iter().any(|l| !l.is_gen()) {
            return Err(RewriteError::InvalidRule(
                "weight letters may not appear in a left-hand side".into(),
            ));
        }
        for w in rhs.0.keys() {
            if w >= &lhs {
                return Err(RewriteError::InvalidRule(format!(
                    "right-hand side word is not smaller than the left-hand side (grade {} vs {})",
                    w.grade(),
                    lhs.grade()
                )));
            }
        }
        Ok(RewriteRule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &FreeElement {
        &self.rhs
    }
}

/// Alphabet: named letters for both blocks, in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    pub lo: Vec<(Iv, String)>,
    pub hi: Vec<(Iv, String)>,
}

impl Alphabet {
    pub fn name(&self, l: &Letter) -> String {
        let lookup = |list: &[(Iv, String)], iv: &Iv| {
            list.iter()
                .find(|(j, _)| j == iv)
                .map(|(_, n)| n.clone())
                .unwrap_or_else(|| format!("?{:?}", iv))
        };
        match l {
            Letter::Lo(iv) => lookup(&self.lo, iv),
            Letter::Hi(iv) => lookup(&self.hi, iv),
            Letter::Wt(w) => format!("q^{}", w),
        }
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        if w.0.is_empty() {
            return "1".to_string();
        }
        w.0.iter()
            .map(|l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn letter_by_name(&self, name: &str) -> Option<Letter> {
        if let Some((iv, _)) = self.lo.iter().find(|(_, n)| n == name) {
            return Some(Letter::Lo(*iv));
        }
        if let Some((iv, _)) = self.hi.iter().find(|(_, n)| n == name) {
            return Some(Letter::Hi(*iv));
        }
        None
    }
}

/// Default cap on rule applications per normal-form call.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// A rewriting system: an alphabet, concrete rules, and optionally the
/// built-in group-like weight reductions.
#[derive(Debug, Clone)]
pub struct RuleSet {
    pub alphabet: Alphabet,
    pub rules: Vec<RewriteRule>,
    pub uq_weights: bool,
    pub step_budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Redex {
    Rule(usize),
    WtDelete,
    WtMerge,
    SwapHiWt,
    SwapWtLo,
}

impl RuleSet {
    pub fn new(alphabet: Alphabet, rules: Vec<RewriteRule>, uq_weights: bool) -> Self {
        RuleSet { alphabet, rules, uq_weights, step_budget: DEFAULT_STEP_BUDGET }
    }

    fn redex_at(&self, w: &[Letter], p: usize) -> Option<Redex> {
        if self.uq_weights {
            if let Letter::Wt(a) = &w[p] {
                if a.is_zero() {
                    return Some(Redex::WtDelete);
                }
                if p + 1 < w.len() {
                    match &w[p + 1] {
                        Letter::Wt(_) => return Some(Redex::WtMerge),
                        Letter::Lo(_) => return Some(Redex::SwapWtLo),
                        Letter::Hi(_) => {}
                    }
                }
            }
            if p + 1 < w.len() {
                if let (Letter::Hi(_), Letter::Wt(_)) = (&w[p], &w[p + 1]) {
                    return Some(Redex::SwapHiWt);
                }
            }
        }
        for (i, rule) in self.rules.iter().enumerate() {
            let l = &rule.lhs.0;
            if p + l.len() <= w.len() && &w[p..p + l.len()] == l.as_slice() {
                return Some(Redex::Rule(i));
            }
        }
        None
    }

    fn first_redex(&self, w: &[Letter]) -> Option<(usize, Redex)> {
        (0..w.len()).find_map(|p| self.redex_at(w, p).map(|r| (p, r)))
    }

    /// Applies one redex at a position, returning the replacement element
    /// (prefix * replacement * suffix summed out).
    fn apply_at(&self, w: &[Letter], p: usize, r: &Redex) -> FreeElement {
        let splice = |mid: FreeElement, consumed: usize| -> FreeElement {
            let mut out = FreeElement::zero();
            for (m, c) in &mid.0 {
                let mut letters = Vec::with_capacity(w.len() - consumed + m.0.len());
                letters.extend(w[..p].iter().cloned());
                letters.extend(m.0.iter().cloned());
                letters.extend(w[p + consumed..].iter().cloned());
                out.add_term(Word(letters), c);
            }
            out
        };
        match r {
            Redex::WtDelete => splice(FreeElement::unit(), 1),
            Redex::WtMerge => {
                let (Letter::Wt(a), Letter::Wt(b)) = (&w[p], &w[p + 1]) else {
                    unreachable!()
                };
                splice(FreeElement::from_word(Word::single(Letter::Wt(a + b))), 2)
            }
            Redex::SwapHiWt => {
                let (Letter::Hi(iv), Letter::Wt(l)) = (&w[p], &w[p + 1]) else {
                    unreachable!()
                };
                let e = -l.doubled_pairing_interval(iv.0 as usize, iv.1 as usize);
                let mid = FreeElement::from_term(
                    Word(vec![Letter::Wt(l.clone()), Letter::Hi(*iv)]),
                    Scalar::v_pow(e),
                );
                splice(mid, 2)
            }
            Redex::SwapWtLo => {
                let (Letter::Wt(l), Letter::Lo(iv)) = (&w[p], &w[p + 1]) else {
                    unreachable!()
                };
                let e = -l.doubled_pairing_interval(iv.0 as usize, iv.1 as usize);
                let mid = FreeElement::from_term(
                    Word(vec![Letter::Lo(*iv), Letter::Wt(l.clone())]),
                    Scalar::v_pow(e),
                );
                splice(mid, 2)
            }
            Redex::Rule(i) => {
                let rule = &self.rules[*i];
                splice(rule.rhs.clone(), rule.lhs.0.len())
            }
        }
    }

    /// Exhaustive reduction to the unique fixed point of the deterministic
    /// leftmost strategy. Linear in the input element.
    pub fn normal_form(&self, x: &FreeElement) -> Result<FreeElement, RewriteError> {
        let mut budget = self.step_budget;
        let mut out = FreeElement::zero();
        let mut stack: Vec<(Word, Scalar)> =
            x.0.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = stack.pop() {
            match self.first_redex(&w.0) {
                None => out.add_term(w, &c),
                Some((p, r)) => {
                    if budget == 0 {
                        return Err(RewriteError::StepBudgetExceeded(self.step_budget));
                    }
                    budget -= 1;
                    let repl = self.apply_at(&w.0, p, &r);
                    for (w2, c2) in &repl.0 {
                        stack.push((w2.clone(), &c * c2));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn normal_form_word(&self, w: Word) -> Result<FreeElement, RewriteError> {
        self.normal_form(&FreeElement::from_word(w))
    }

    fn redex_desc(&self, r: &Redex) -> String {
        match r {
            Redex::Rule(i) => format!(
                "rule {} ({} -> ...)",
                i,
                self.alphabet.word_to_string(&self.rules[*i].lhs)
            ),
            Redex::WtDelete => "unit weight deletion".into(),
            Redex::WtMerge => "weight merge".into(),
            Redex::SwapHiWt => "upper/weight commutation".into(),
            Redex::SwapWtLo => "weight/lower commutation".into(),
        }
    }

    /// Enumerates overlap and inclusion ambiguities among the concrete rules,
    /// plus (for weight-aware systems) instances of the group-like schema
    /// reductions over the weight letters occurring in the rule set.
    pub fn enumerate_overlaps(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        let mut push = |rs: &RuleSet, word: Word, p1: usize, r1: Redex, p2: usize, r2: Redex| {
            let left = rs.apply_at(&word.0, p1, &r1);
            let right = rs.apply_at(&word.0, p2, &r2);
            out.push(Ambiguity {
                description: format!(
                    "{} vs {} on {}",
                    rs.redex_desc(&r1),
                    rs.redex_desc(&r2),
                    rs.alphabet.word_to_string(&word)
                ),
                word,
                left,
                right,
            });
        };
        // Overlaps: a suffix of lhs_i equals a prefix of lhs_j.
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                let li = &ri.lhs.0;
                let lj = &rj.lhs.0;
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] == lj[..k] {
                        let mut w = li.clone();
                        w.extend(lj[k..].iter().cloned());
                        push(
                            self,
                            Word(w),
                            0,
                            Redex::Rule(i),
                            li.len() - k,
                            Redex::Rule(j),
                        );
                    }
                }
                // Inclusion: lhs_j properly inside lhs_i.
                if lj.len() < li.len() {
                    for p in 0..=li.len() - lj.len() {
                        if &li[p..p + lj.len()] == lj.as_slice() {
                            push(self, ri.lhs.clone(), 0, Redex::Rule(i), p, Redex::Rule(j));
                        }
                    }
                }
            }
        }
        if self.uq_weights {
            let window = self.weight_window();
            let his: Vec<Iv> = self.alphabet.hi.iter().map(|(iv, _)| *iv).collect();
            let los: Vec<Iv> = self.alphabet.lo.iter().map(|(iv, _)| *iv).collect();
            for a in &window {
                for b in &window {
                    let (wa, wb) = (Letter::Wt(a.clone()), Letter::Wt(b.clone()));
                    for h in &his {
                        // Hi . Wt . Wt
                        let w = Word(vec![Letter::Hi(*h), wa.clone(), wb.clone()]);
                        push(self, w, 0, Redex::SwapHiWt, 1, Redex::WtMerge);
                    }
                    for l in &los {
                        // Wt . Wt . Lo
                        let w = Word(vec![wa.clone(), wb.clone(), Letter::Lo(*l)]);
                        push(self, w, 0, Redex::WtMerge, 1, Redex::SwapWtLo);
                    }
                }
                // Hi . Wt . Lo
                for h in &his {
                    for l in &los {
                        let w = Word(vec![
                            Letter::Hi(*h),
                            Letter::Wt(a.clone()),
                            Letter::Lo(*l),
                        ]);
                        push(self, w, 0, Redex::SwapHiWt, 1, Redex::SwapWtLo);
                    }
                }
                // Rule whose lhs ends in an upper letter, followed by a weight.
                for (i, r) in self.rules.iter().enumerate() {
                    if matches!(r.lhs.0.last(), Some(Letter::Hi(_))) {
                        let mut w = r.lhs.0.clone();
                        w.push(Letter::Wt(a.clone()));
                        let p = w.len() - 2;
                        push(self, Word(w), 0, Redex::Rule(i), p, Redex::SwapHiWt);
                    }
                    if matches!(r.lhs.0.first(), Some(Letter::Lo(_))) {
                        let mut w = vec![Letter::Wt(a.clone())];
                        w.extend(r.lhs.0.iter().cloned());
                        push(self, Word(w), 0, Redex::SwapWtLo, 1, Redex::Rule(i));
                    }
                }
            }
        }
        out
    }

    /// Weight letters appearing in rule right-hand sides, the fundamental
    /// weights with both signs, and zero.
    fn weight_window(&self) -> Vec<Weight> {
        let mut set = std::collections::BTreeSet::new();
        let rank = self.weight_rank();
        if let Some(rank) = rank {
            set.insert(Weight::zero(rank));
            for j in 0..rank {
                let f = Weight::fundamental(rank, j);
                set.insert(f.clone());
                set.insert(-&f);
            }
        }
        for r in &self.rules {
            for w in r.rhs.0.keys() {
                for l in &w.0 {
                    if let Letter::Wt(x) = l {
                        set.insert(x.clone());
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    fn weight_rank(&self) -> Option<usize> {
        for r in &self.rules {
            for w in r.rhs.0.keys() {
                for l in &w.0 {
                    if let Letter::Wt(x) = l {
                        return Some(x.rank());
                    }
                }
            }
        }
        None
    }

    /// Diamond-lemma check: reduce both branches of every ambiguity to normal
    /// form and require agreement. The overall verdict is the conjunction.
    pub fn check_confluence(&self) -> Result<ConfluenceReport, RewriteError> {
        let ambiguities = self.enumerate_overlaps();
        let mut failures = Vec::new();
        for amb in &ambiguities {
            let left = self.normal_form(&amb.left)?;
            let right = self.normal_form(&amb.right)?;
            if left != right {
                failures.push(AmbiguityFailure {
                    word: self.alphabet.word_to_string(&amb.word),
                    description: amb.description.clone(),
                    left: self.element_to_string(&left),
                    right: self.element_to_string(&right),
                });
            }
        }
        Ok(ConfluenceReport { ambiguities_checked: ambiguities.len(), failures })
    }

    pub fn element_to_string(&self, x: &FreeElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.0.iter()
            .map(|(w, c)| format!("({})·{}", c, self.alphabet.word_to_string(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Returns a copy with one rule coefficient multiplied by the given
    /// factor. Used as a negative control: a single corrupted coefficient in
    /// a confluent preset must break confluence or a downstream identity.
    pub fn with_mutated_coefficient(
        &self,
        rule_idx: usize,
        term_idx: usize,
        factor: &Scalar,
    ) -> RuleSet {
        let mut out = self.clone();
        let rule = &mut out.rules[rule_idx];
        let keys: Vec<Word> = rule.rhs.0.keys().cloned().collect();
        let key = keys[term_idx % keys.len()].clone();
        let c = rule.rhs.0.get_mut(&key).unwrap();
        *c = &*c * factor;
        out
    }
}

/// An overlap or inclusion ambiguity with its two one-step reductions.
#[derive(Debug, Clone)]
pub struct Ambiguity {
    pub word: Word,
    pub description: String,
    pub left: FreeElement,
    pub right: FreeElement,
}

/// Outcome of the diamond-lemma check.
#[derive(Debug, Clone, Serialize)]
pub struct ConfluenceReport {
    pub ambiguities_checked: usize,
    pub failures: Vec<AmbiguityFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AmbiguityFailure {
    pub word: String,
    pub description: String,
    pub left: String,
    pub right: String,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_confluent() {
            write!(f, "confluent ({} ambiguities resolve)", self.ambiguities_checked)
        } else {
            writeln!(
                f,
                "NOT confluent: {} of {} ambiguities fail",
                self.failures.len(),
                self.ambiguities_checked
            )?;
            for fail in self.failures.iter().take(3) {
                writeln!(f, "  {}: {} != {}", fail.word, fail.left, fail.right)?;
            }
            Ok(())
        }
    }
}

// ---- serialization ----

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LetterDoc {
    Name(String),
    Wt { wt: Vec<i64> },
}

#[derive(Serialize, Deserialize)]
struct LetterDef {
    block: String,
    iv: (u8, u8),
    name: String,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    word: Vec<LetterDoc>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RuleDoc {
    lhs: Vec<LetterDoc>,
    rhs: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct RuleSetDoc {
    letters: Vec<LetterDef>,
    uq_weights: bool,
    rules: Vec<RuleDoc>,
}

impl RuleSet {
    fn letter_to_doc(&self, l: &Letter) -> LetterDoc {
        match l {
            Letter::Wt(w) => LetterDoc::Wt { wt: w.0.clone() },
            other => LetterDoc::Name(self.alphabet.name(other)),
        }
    }

    fn letter_from_doc(&self, d: &LetterDoc) -> Result<Letter, RewriteError> {
        match d {
            LetterDoc::Wt { wt } => Ok(Letter::Wt(Weight(wt.clone()))),
            LetterDoc::Name(n) => self
                .alphabet
                .letter_by_name(n)
                .ok_or_else(|| RewriteError::Parse(format!("unknown letter '{}'", n))),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let letters = self
            .alphabet
            .lo
            .iter()
            .map(|(iv, n)| LetterDef { block: "lo".into(), iv: *iv, name: n.clone() })
            .chain(
                self.alphabet
                    .hi
                    .iter()
                    .map(|(iv, n)| LetterDef { block: "hi".into(), iv: *iv, name: n.clone() }),
            )
            .collect();
        let rules = self
            .rules
            .iter()
            .map(|r| RuleDoc {
                lhs: r.lhs.0.iter().map(|l| self.letter_to_doc(l)).collect(),
                rhs: r
                    .rhs
                    .0
                    .iter()
                    .map(|(w, c)| TermDoc {
                        word: w.0.iter().map(|l| self.letter_to_doc(l)).collect(),
                        coeff: c.to_q_string(),
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(RuleSetDoc { letters, uq_weights: self.uq_weights, rules })
            .expect("rule set serialization")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<RuleSet, RewriteError> {
        let doc: RuleSetDoc = serde_json::from_value(value.clone())
            .map_err(|e| RewriteError::Parse(e.to_string()))?;
        let mut alphabet = Alphabet::default();
        for l in &doc.letters {
            match l.block.as_str() {
                "lo" => alphabet.lo.push((l.iv, l.name.clone())),
                "hi" => alphabet.hi.push((l.iv, l.name.clone())),
                other => {
                    return Err(RewriteError::Parse(format!("unknown block '{}'", other)));
                }
            }
        }
        let mut rs = RuleSet::new(alphabet, Vec::new(), doc.uq_weights);
        for r in &doc.rules {
            let lhs = Word(
                r.lhs
                    .iter()
                    .map(|d| rs.letter_from_doc(d))
                    .collect::<Result<_, _>>()?,
            );
            let mut rhs = FreeElement::zero();
            for t in &r.rhs {
                let w = Word(
                    t.word
                        .iter()
                        .map(|d| rs.letter_from_doc(d))
                        .collect::<Result<_, _>>()?,
                );
                let c = Scalar::parse(&t.coeff)
                    .map_err(|e| RewriteError::Parse(e.to_string()))?;
                rhs.add_term(w, &c);
            }
            rs.rules.push(RewriteRule::new(lhs, rhs)?);
        }
        Ok(rs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlie::y_rules;

    fn q(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    #[test]
    fn y_plus_y_zero_reduces() {
        let rs = y_rules();
        let yp = Letter::Hi((2, 2));
        let y0 = Letter::Hi((1, 1));
        let nf = rs.normal_form_word(Word(vec![yp.clone(), y0.clone()])).unwrap();
        let mut expect = FreeElement::zero();
        expect.add_term(Word(vec![y0, yp.clone()]), &q("q^{2}"));
        expect.add_term(Word(vec![yp]), &q("-q"));
        assert_eq!(nf, expect);
    }

    #[test]
    fn ordered_word_is_a_fixed_point() {
        let rs = y_rules();
        let w = Word(vec![Letter::Hi((0, 0)), Letter::Hi((1, 1)), Letter::Hi((2, 2))]);
        let nf = rs.normal_form_word(w.clone()).unwrap();
        assert_eq!(nf, FreeElement::from_word(w));
    }

    #[test]
    fn y_rules_single_overlap_and_confluent() {
        let rs = y_rules();
        let overlaps = rs.enumerate_overlaps();
        assert_eq!(overlaps.len(), 1);
        let want = Word(vec![Letter::Hi((2, 2)), Letter::Hi((1, 1)), Letter::Hi((0, 0))]);
        assert_eq!(overlaps[0].word, want);
        let report = rs.check_confluence().unwrap();
        assert!(report.is_confluent(), "{}", report);
    }

    #[test]
    fn single_rule_without_self_overlap() {
        let alphabet = Alphabet {
            lo: vec![((0, 0), "F".into())],
            hi: vec![((0, 0), "E".into())],
        };
        let rule = RewriteRule::new(
            Word(vec![Letter::Hi((0, 0)), Letter::Lo((0, 0))]),
            FreeElement::from_word(Word(vec![Letter::Lo((0, 0)), Letter::Hi((0, 0))])),
        )
        .unwrap();
        let rs = RuleSet::new(alphabet, vec![rule], false);
        assert!(rs.enumerate_overlaps().is_empty());
    }

    fn overlap_word() -> Word {
        Word(vec![Letter::Hi((2, 2)), Letter::Hi((1, 1)), Letter::Hi((0, 0))])
    }

    #[test]
    fn corrupted_y_rules_are_detected() {
        // Replace the third rule's right-hand side by (q + q^-1) Y0 + 1. The
        // corruption enters both branches of the single ambiguity through the
        // same multiplier words, so local confluence survives; the corruption
        // shows up as a changed normal form instead.
        let rs = y_rules();
        let mut rules = rs.rules.clone();
        let mut rhs = FreeElement::zero();
        rhs.add_term(Word(vec![Letter::Hi((1, 1))]), &q("q + q^{-1}"));
        rhs.add_term(Word::empty(), &Scalar::one());
        rules[2] = RewriteRule::new(rules[2].lhs.clone(), rhs).unwrap();
        let bad = RuleSet::new(rs.alphabet.clone(), rules, false);
        let confluent = bad.check_confluence().unwrap().is_confluent();
        let golden_changed = bad.normal_form_word(overlap_word()).unwrap()
            != rs.normal_form_word(overlap_word()).unwrap();
        assert!(!confluent || golden_changed, "corruption went undetected");
        assert!(golden_changed);
    }

    #[test]
    fn every_coefficient_mutation_is_detected() {
        // A single corrupted coefficient must break confluence or change a
        // reduced normal form.
        let rs = y_rules();
        let golden = rs.normal_form_word(overlap_word()).unwrap();
        let factor = q("q");
        for (rule_idx, rule) in rs.rules.iter().enumerate() {
            for term_idx in 0..rule.rhs.0.len() {
                let bad = rs.with_mutated_coefficient(rule_idx, term_idx, &factor);
                let confluent = bad.check_confluence().unwrap().is_confluent();
                let golden_changed = bad.normal_form_word(overlap_word()).unwrap() != golden;
                assert!(
                    !confluent || golden_changed,
                    "mutating rule {} term {} went undetected",
                    rule_idx,
                    term_idx
                );
            }
        }
    }

    #[test]
    fn step_budget_is_enforced() {
        let mut rs = y_rules();
        rs.step_budget = 1;
        let w = Word(vec![
            Letter::Hi((2, 2)),
            Letter::Hi((1, 1)),
            Letter::Hi((0, 0)),
        ]);
        assert!(matches!(
            rs.normal_form_word(w),
            Err(RewriteError::StepBudgetExceeded(1))
        ));
    }

    #[test]
    fn rule_validation_rejects_non_decreasing() {
        let y0 = Letter::Hi((1, 1));
        let yp = Letter::Hi((2, 2));
        // rhs equals lhs: not strictly smaller.
        let lhs = Word(vec![yp.clone(), y0.clone()]);
        let rhs = FreeElement::from_word(lhs.clone());
        assert!(RewriteRule::new(lhs, rhs).is_err());
        // rhs larger in the letter order.
        let lhs = Word(vec![y0.clone(), y0]);
        let rhs = FreeElement::from_word(Word(vec![yp.clone(), yp]));
        assert!(RewriteRule::new(lhs, rhs).is_err());
    }

    #[test]
    fn json_round_trip() {
        let rs = y_rules();
        let doc = rs.to_json();
        let back = RuleSet::from_json(&doc).unwrap();
        assert_eq!(back.rules.len(), rs.rules.len());
        for (a, b) in back.rules.iter().zip(&rs.rules) {
            assert_eq!(a, b);
        }
        assert_eq!(back.to_json(), doc);
    }

    #[test]
    fn normal_form_is_linear_and_idempotent() {
        let rs = y_rules();
        let ym = Letter::Hi((0, 0));
        let y0 = Letter::Hi((1, 1));
        let yp = Letter::Hi((2, 2));
        let x = FreeElement::from_word(Word(vec![yp.clone(), y0.clone(), ym.clone()]));
        let y = FreeElement::from_word(Word(vec![y0.clone(), ym.clone(), yp.clone()]));
        let a = q("q^{2} - 3");
        let nx = rs.normal_form(&x).unwrap();
        let ny = rs.normal_form(&y).unwrap();
        assert_eq!(rs.normal_form(&nx).unwrap(), nx, "idempotent");
        let mut combo = x.scaled(&a);
        combo.add_scaled(&y, &Scalar::one());
        let mut expect = nx.scaled(&a);
        expect.add_scaled(&ny, &Scalar::one());
        assert_eq!(rs.normal_form(&combo).unwrap(), expect, "linear");
    }
}
