//! Exact arithmetic in the rational function field Q(v), v = q^{1/2}.
//!
//! Every coefficient in the library lives here. A [`Scalar`] is a reduced
//! fraction of integer Laurent polynomials in v, kept in a unique canonical
//! form so that equality is structural. Half-integer powers of q are plain
//! Laurent monomials in v, which is why v rather than q is the base variable.
//!
//! Key items:
//! - [`Scalar`]: canonical rational function, field operations, q-conjugation
//!   (v -> v^{-1}), evaluation at the classical point v = 1.
//! - [`q_number`]: the q-analogue [k]_q = (q^k - q^{-k})/(q - q^{-1}).
//! - Canonical string syntax in powers of q ("q^{3/2}", "(q^{2} - 1)/(q^{2} + 1)")
//!   with a bit-exact parse/print round trip, plus a v-form for debugging.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use thiserror::Error;

/// Errors raised by scalar construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("classical-limit pole: denominator vanishes at v = 1")]
    ClassicalLimitPole,
    #[error("scalar parse error: {0}")]
    Parse(String),
}

/// Integer-coefficient Laurent polynomial in v.
///
/// `coeffs[i]` is the coefficient of `v^(low + i)`. Invariants: the first and
/// last entries are nonzero; the zero polynomial is the empty vector with
/// `low == 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    /// c * v^exp.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { low: exp, coeffs: vec![c] }
        }
    }

    /// Builds from a list of (coefficient, v-exponent) terms.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut acc = LaurentPoly::zero();
        for &(c, e) in terms {
            acc = &acc + &LaurentPoly::monomial(BigInt::from(c), e);
        }
        acc
    }

    fn trim(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        let mut start = 0usize;
        while start < coeffs.len() && coeffs[start].is_zero() {
            start += 1;
        }
        let mut end = coeffs.len();
        while end > start && coeffs[end - 1].is_zero() {
            end -= 1;
        }
        if start == end {
            return LaurentPoly::zero();
        }
        coeffs.drain(end..);
        coeffs.drain(..start);
        LaurentPoly { low: low + start as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Iterates (v-exponent, coefficient) over nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i64, c))
    }

    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            self.clone()
        } else {
            LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
        }
    }

    /// Substitutes v -> v^{-1}.
    pub fn reversed(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -self.high(), coeffs }
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - low) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - low) as usize] += c;
        }
        LaurentPoly::trim(low, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::trim(self.low + rhs.low, coeffs)
    }
}

// ---- dense ordinary-polynomial helpers (degree-indexed, trailing zeros trimmed) ----

fn dense_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn dense_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn dense_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let g = dense_content(p);
    if g.is_zero() || g.is_one() {
        return p.to_vec();
    }
    p.iter().map(|c| c / &g).collect()
}

fn dense_mul_scalar(p: &[BigInt], s: &BigInt) -> Vec<BigInt> {
    p.iter().map(|c| c * s).collect()
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
fn dense_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty());
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        r = dense_mul_scalar(&r, &lb);
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            let delta = &lead * bc;
            r[idx] -= delta;
        }
        r = dense_trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Gcd over Z[v] with positive leading coefficient.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return dense_positive_lead(b.to_vec());
    }
    if b.is_empty() {
        return dense_positive_lead(a.to_vec());
    }
    let ca = dense_content(a);
    let cb = dense_content(b);
    let cg = ca.gcd(&cb);
    let mut pa = dense_primitive(a);
    let mut pb = dense_primitive(b);
    while !pb.is_empty() {
        let r = dense_pseudo_rem(&pa, &pb);
        pa = pb;
        pb = dense_primitive(&r);
    }
    dense_positive_lead(dense_mul_scalar(&dense_primitive(&pa), &cg))
}

fn dense_positive_lead(p: Vec<BigInt>) -> Vec<BigInt> {
    match p.last() {
        Some(c) if c.is_negative() => p.iter().map(|x| -x).collect(),
        _ => p,
    }
}

/// Exact division; panics if the division has a remainder (internal use only,
/// always called with a known divisor).
fn dense_divexact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db || (r.len() == db + 1 && db == 0) {
        if r.is_empty() {
            break;
        }
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let (quot, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        q[dr - db] = quot.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = &quot * bc;
            r[dr - db + i] -= delta;
        }
        r = dense_trim(r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

impl LaurentPoly {
    fn to_dense(&self) -> Vec<BigInt> {
        // Caller guarantees low == 0.
        assert!(self.is_zero() || self.low == 0);
        self.coeffs.clone()
    }

    fn from_dense(p: Vec<BigInt>) -> Self {
        LaurentPoly::trim(0, p)
    }
}

/// An exact element of Q(v) in unique canonical form.
///
/// Invariants: the denominator is a nonzero ordinary polynomial with nonzero
/// constant term and positive leading coefficient, it shares no polynomial or
/// integer-content factor with the numerator, and zero is stored as 0/1.
/// Two scalars are equal iff their fields are identical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    /// Canonicalises num/den. Fails when den is the zero polynomial.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() });
        }
        // Pull the v-power out of the denominator into the numerator offset.
        let num = num.shifted(-den.low());
        let den = den.shifted(-den.low());
        let num_low = num.low();
        let num_dense = num.shifted(-num_low).to_dense();
        let den_dense = den.to_dense();
        let g = dense_gcd(&num_dense, &den_dense);
        let (mut n, mut d) = if g.len() == 1 && g[0].is_one() {
            (num_dense, den_dense)
        } else {
            (dense_divexact(&num_dense, &g), dense_divexact(&den_dense, &g))
        };
        if d.last().unwrap().is_negative() {
            n = n.iter().map(|c| -c).collect();
            d = d.iter().map(|c| -c).collect();
        }
        Ok(Scalar {
            num: LaurentPoly::from_dense(n).shifted(num_low),
            den: LaurentPoly::from_dense(d),
        })
    }

    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(k: i64) -> Self {
        Scalar { num: LaurentPoly::monomial(BigInt::from(k), 0), den: LaurentPoly::one() }
    }

    /// v^k, i.e. q^{k/2}.
    pub fn v_pow(k: i64) -> Self {
        Scalar { num: LaurentPoly::monomial(BigInt::one(), k), den: LaurentPoly::one() }
    }

    /// q^k = v^{2k}.
    pub fn q_pow(k: i64) -> Self {
        Scalar::v_pow(2 * k)
    }

    /// Builds a Laurent polynomial scalar from (integer coefficient, q-exponent-doubled)
    /// pairs, i.e. terms c * v^e with e the exponent of v.
    pub fn from_v_terms(terms: &[(i64, i64)]) -> Self {
        Scalar { num: LaurentPoly::from_terms(terms), den: LaurentPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        Scalar::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> Self {
        if k < 0 {
            return self.inv().expect("inverse of zero scalar").pow(-k);
        }
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The bar involution v -> v^{-1} (equivalently q -> q^{-1}).
    pub fn q_conjugate(&self) -> Self {
        Scalar::new(self.num.reversed(), self.den.reversed()).expect("conjugate of canonical scalar")
    }

    /// Evaluates at v = 1, the classical limit.
    pub fn evaluate_at_one(&self) -> Result<BigRational, ScalarError> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(ScalarError::ClassicalLimitPole);
        }
        Ok(BigRational::new(self.num.eval_one(), d))
    }

    /// Renders in powers of v ("v^{3} - v^{-1}"); mainly for debugging.
    pub fn to_v_string(&self) -> String {
        self.render(Style::V)
    }

    /// Renders in powers of q ("q^{3/2} - q^{-1/2}"); the canonical form.
    pub fn to_q_string(&self) -> String {
        self.render(Style::Q)
    }

    /// LaTeX rendering of the canonical q-form.
    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            poly_latex(&self.num)
        } else {
            format!("\\frac{{{}}}{{{}}}", poly_latex(&self.num), poly_latex(&self.den))
        }
    }

    fn render(&self, style: Style) -> String {
        if self.den.is_one() {
            poly_string(&self.num, style)
        } else {
            format!("({})/({})", poly_string(&self.num, style), poly_string(&self.den, style))
        }
    }

    /// Parses the canonical syntax (either q-form or v-form).
    pub fn parse(input: &str) -> Result<Self, ScalarError> {
        parse_scalar(input)
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Style {
    Q,
    V,
}

fn exp_string(v_exp: i64, style: Style) -> String {
    match style {
        Style::V => format!("v^{{{}}}", v_exp),
        Style::Q => {
            if v_exp % 2 == 0 {
                let e = v_exp / 2;
                if e == 1 {
                    "q".to_string()
                } else {
                    format!("q^{{{}}}", e)
                }
            } else {
                format!("q^{{{}/2}}", v_exp)
            }
        }
    }
}

fn poly_string(p: &LaurentPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut terms: Vec<(i64, &BigInt)> = p.terms().collect();
    terms.reverse();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if *e == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&exp_string(*e, style));
        }
    }
    out
}

fn poly_latex(p: &LaurentPoly) -> String {
    // Same shape as the q-form but with brace-free simple exponents left as is.
    poly_string(p, Style::Q)
}

// ---- parser ----

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.s.get(self.pos).map(|&b| b as char)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: char) -> Result<(), ScalarError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            got => Err(ScalarError::Parse(format!("expected '{}', found {:?}", c, got))),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(ScalarError::Parse("expected integer".into()));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|e| ScalarError::Parse(e.to_string()))
    }

    /// Exponent inside braces: integer, or odd/2 fraction like "3/2", "-1/2".
    /// Returns the v-exponent given the base letter.
    fn exponent(&mut self, base: char) -> Result<i64, ScalarError> {
        self.expect('{')?;
        let n = self.integer()?;
        let n: i64 = (&n)
            .try_into()
            .map_err(|_| ScalarError::Parse("exponent too large".into()))?;
        let v_exp = if self.peek() == Some('/') {
            self.bump();
            self.expect('2')?;
            if base == 'v' {
                return Err(ScalarError::Parse("fractional v exponent".into()));
            }
            n
        } else {
            match base {
                'q' => 2 * n,
                _ => n,
            }
        };
        self.expect('}')?;
        Ok(v_exp)
    }

    /// term := [sign] [integer] [base [^{exp}]]
    fn term(&mut self, lead_sign: i64) -> Result<LaurentPoly, ScalarError> {
        let mut sign = BigInt::from(lead_sign);
        if self.peek() == Some('-') {
            self.bump();
            sign = -sign;
        }
        let mut coeff: Option<BigInt> = None;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = Some(self.integer()?);
        }
        let mut v_exp = 0i64;
        let mut has_base = false;
        if matches!(self.peek(), Some('q') | Some('v')) {
            let base = self.bump().unwrap();
            has_base = true;
            if self.peek() == Some('^') {
                self.bump();
                v_exp = self.exponent(base)?;
            } else {
                v_exp = match base {
                    'q' => 2,
                    _ => 1,
                };
            }
        }
        if coeff.is_none() && !has_base {
            return Err(ScalarError::Parse("empty term".into()));
        }
        let c = sign * coeff.unwrap_or_else(BigInt::one);
        Ok(LaurentPoly::monomial(c, v_exp))
    }

    fn poly(&mut self) -> Result<LaurentPoly, ScalarError> {
        let mut acc = self.term(1)?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term(1)?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.bump();
                    let t = self.term(-1)?;
                    acc = &acc + &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

fn parse_scalar(input: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser::new(input);
    if p.peek() == Some('(') {
        p.bump();
        let num = p.poly()?;
        p.expect(')')?;
        p.expect('/')?;
        p.expect('(')?;
        let den = p.poly()?;
        p.expect(')')?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(ScalarError::Parse("trailing input".into()));
        }
        Scalar::new(num, den)
    } else {
        let num = p.poly()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(ScalarError::Parse("trailing input".into()));
        }
        Scalar::new(num, LaurentPoly::one())
    }
}

// ---- arithmetic ----

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let num = &self.num * &rhs.num;
        Scalar::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "scalar division by zero");
        let num = &self.num * &rhs.den;
        Scalar::new(num, &self.den * &rhs.num).expect("checked nonzero")
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_q_string())
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_q_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Scalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// The q-analogue [k]_q as a Laurent polynomial in q.
///
/// [k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k} for k >= 1, [0] = 0, [-k] = -[k].
pub fn q_number(k: i64) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    if k < 0 {
        return -q_number(-k);
    }
    let mut terms = Vec::new();
    let mut e = k - 1;
    while e >= 1 - k {
        terms.push((1, 2 * e));
        e -= 2;
    }
    Scalar::from_v_terms(&terms)
}

/// A q-number together with its integer argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QNumber {
    pub argument: i64,
    pub value: Scalar,
}

impl QNumber {
    pub fn new(k: i64) -> Self {
        QNumber { argument: k, value: q_number(k) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    #[test]
    fn normalize_cancels_polynomial_factors() {
        // (v^2 - 1)/(v - 1) -> v + 1
        let num = LaurentPoly::from_terms(&[(1, 2), (-1, 0)]);
        let den = LaurentPoly::from_terms(&[(1, 1), (-1, 0)]);
        let r = Scalar::new(num, den).unwrap();
        assert_eq!(r, Scalar::from_v_terms(&[(1, 1), (1, 0)]));
        assert!(r.denominator().is_one());
    }

    #[test]
    fn normalize_zero_case() {
        let r = Scalar::new(LaurentPoly::zero(), LaurentPoly::from_terms(&[(1, 3)])).unwrap();
        assert_eq!(r, Scalar::zero());
        assert!(r.denominator().is_one());
    }

    #[test]
    fn normalize_clears_laurent_denominator() {
        // (q - q^-1)/(q + q^-1) = (v^2 - v^-2)/(v^2 + v^-2) -> (v^4 - 1)/(v^4 + 1).
        // Oracle: cross-multiplication against the expected canonical pair.
        let num = LaurentPoly::from_terms(&[(1, 2), (-1, -2)]);
        let den = LaurentPoly::from_terms(&[(1, 2), (1, -2)]);
        let r = Scalar::new(num.clone(), den.clone()).unwrap();
        let expect_num = LaurentPoly::from_terms(&[(1, 4), (-1, 0)]);
        let expect_den = LaurentPoly::from_terms(&[(1, 4), (1, 0)]);
        assert_eq!(&num * &expect_den, &den * &expect_num);
        assert_eq!(r.numerator(), &expect_num);
        assert_eq!(r.denominator(), &expect_den);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Scalar::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(ScalarError::ZeroDenominator)
        );
    }

    #[test]
    fn q_number_values() {
        assert_eq!(q_number(1), Scalar::one());
        assert_eq!(q_number(0), Scalar::zero());
        // Oracle: Laurent division (q^3 - q^-3)/(q - q^-1) computed by clearing
        // denominators: [3] * (q - q^-1) must equal q^3 - q^-3.
        let three = q_number(3);
        assert_eq!(three, s("q^{2} + 1 + q^{-2}"));
        let d = s("q - q^{-1}");
        assert_eq!(&three * &d, s("q^{3} - q^{-3}"));
        assert_eq!(q_number(-3), -q_number(3));
    }

    #[test]
    fn q_number_defining_identity_window() {
        let d = s("q - q^{-1}");
        for k in -20..=20 {
            let lhs = &q_number(k) * &d;
            let rhs = &Scalar::q_pow(k) - &Scalar::q_pow(-k);
            assert_eq!(lhs, rhs, "k = {}", k);
        }
    }

    #[test]
    fn q_conjugate_examples() {
        assert_eq!(s("q^{3/2}").q_conjugate(), s("q^{-3/2}"));
        assert_eq!(s("q + q^{-1}").q_conjugate(), s("q + q^{-1}"));
        assert_eq!(s("-q^{-1}").q_conjugate(), s("-q"));
        let r = s("(q^{2} - 1)/(q^{2} + 1)");
        assert_eq!(r.q_conjugate().q_conjugate(), r);
    }

    #[test]
    fn evaluate_at_one_examples() {
        assert_eq!(
            s("q + q^{-1}").evaluate_at_one().unwrap(),
            BigRational::from(BigInt::from(2))
        );
        assert!(s("(q - q^{-1})/(q + q^{-1})")
            .evaluate_at_one()
            .unwrap()
            .is_zero());
        assert_eq!(
            q_number(3).evaluate_at_one().unwrap(),
            BigRational::from(BigInt::from(3))
        );
        assert_eq!(
            s("q - q^{-1}").inv().unwrap().evaluate_at_one(),
            Err(ScalarError::ClassicalLimitPole)
        );
    }

    #[test]
    fn display_round_trip() {
        for text in [
            "0",
            "1",
            "-1",
            "q",
            "-q^{-1}",
            "q^{3/2}",
            "2q^{1/2} - 3",
            "q^{2} + 1 + q^{-2}",
            "(q^{2} - 1)/(q^{2} + 1)",
            "(q^{-1})/(q^{2} + 1)",
        ] {
            let v = s(text);
            assert_eq!(v.to_q_string(), text, "canonical print");
            assert_eq!(s(&v.to_q_string()), v, "round trip");
        }
    }

    #[test]
    fn v_form_round_trip() {
        let v = s("q^{1/2} - q^{-3/2}");
        assert_eq!(v.to_v_string(), "v^{1} - v^{-3}");
        assert_eq!(Scalar::parse(&v.to_v_string()).unwrap(), v);
    }

    #[test]
    fn division_and_inverse() {
        let a = s("q^{2} - 1");
        let b = s("q - 1");
        let r = &a / &b;
        assert_eq!(&r * &b, a);
        let i = s("q + q^{-1}").inv().unwrap();
        assert_eq!(&i * &s("q + q^{-1}"), Scalar::one());
    }
}
