//! Laurent polynomials in `v = q^{1/2}` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sparse element of `Z[v, v^-1]`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, c.into());
        p
    }

    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `q = v^2`.
    pub fn q() -> Self {
        Self::monomial(1, 2)
    }

    /// The quantum integer `[2] = v + v^-1`.
    pub fn two() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    /// A polynomial in `q` given by its coefficients in increasing degree.
    pub fn from_q_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (2 * i as i64, c.clone())),
        )
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `v^k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Highest exponent of `v`, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent of `v`, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, x)| (k, x * c)).collect(),
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms
            .iter()
            .all(|(&k, c)| self.terms.get(&-k) == Some(c))
    }

    /// All exponents even, i.e. a Laurent polynomial in `q`.
    pub fn is_in_q(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Expansion `sum c_k [2]^k` of a bar-invariant polynomial, highest power
    /// first. `None` if the polynomial is not bar-invariant.
    pub fn quantum_two_expansion(&self) -> Option<Vec<(u32, BigInt)>> {
        if !self.is_bar_invariant() {
            return None;
        }
        let mut rest = self.clone();
        let mut out = Vec::new();
        let two = LaurentPoly::two();
        while let Some(d) = rest.degree() {
            let c = rest.coeff(d);
            let d = d as u32;
            rest -= &two.pow(d).scale(&c);
            out.push((d, c));
        }
        Some(out)
    }

    /// Rendering in powers of `[2]` when bar-invariant, otherwise in `v`.
    pub fn quantum_text(&self) -> String {
        match self.quantum_two_expansion() {
            Some(exp) if !exp.is_empty() => {
                let mut s = String::new();
                for (i, (k, c)) in exp.iter().enumerate() {
                    let neg = c.is_negative();
                    let abs = c.abs();
                    if neg {
                        s.push('-');
                    } else if i > 0 {
                        s.push('+');
                    }
                    let base = match k {
                        0 => String::new(),
                        1 => "[2]".to_string(),
                        k => format!("[2]^{k}"),
                    };
                    if base.is_empty() {
                        s.push_str(&abs.to_string());
                    } else {
                        if !abs.is_one() {
                            s.push_str(&abs.to_string());
                        }
                        s.push_str(&base);
                    }
                }
                s
            }
            _ => self.to_string(),
        }
    }

    /// Rendering as a polynomial in `q`; `None` if an exponent is odd.
    pub fn q_text(&self) -> Option<String> {
        if !self.is_in_q() {
            return None;
        }
        Some(render_terms(
            self.terms.iter().rev().map(|(&k, c)| (k / 2, c)),
            'q',
        ))
    }

    /// Evaluation at an integer `v`, for quick checks.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_i64_coeffs(&self) -> Option<Vec<(i64, i64)>> {
        self.terms
            .iter()
            .map(|(&k, c)| c.to_i64().map(|c| (k, c)))
            .collect()
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (i64, &'a BigInt)>, var: char) -> String {
    let mut s = String::new();
    for (i, (k, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if neg {
            s.push('-');
        } else if i > 0 {
            s.push('+');
        }
        match k {
            0 => s.push_str(&abs.to_string()),
            _ => {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push(var);
                if k != 1 {
                    s.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for LaurentPoly {
    /// `c_k*v^k` terms, exponents descending: `v^2+2+v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().rev().map(|(&k, c)| (k, c)), 'v'))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// Recursive-descent parser for the text forms this crate prints and the
// bracket notation used for structure constants:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'] power)*
//   power  := atom ['^' int]
//   atom   := int | 'v' | 'q' | '[2]' | '(' expr ')'
struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

fn parse_poly(src: &str) -> Result<LaurentPoly> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { src, chars, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(value)
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == 'v' || c == 'q' || c == '[' || c == '(')
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') || self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let n: i64 = digits.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let (base, monomial_exp) = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.int()?;
        match monomial_exp {
            // v^e and q^e may be negative.
            Some(unit) => Ok(LaurentPoly::monomial(1, unit * e)),
            None if e >= 0 => Ok(base.pow(e as u32)),
            None => Err(self.error("negative power of a non-monomial")),
        }
    }

    /// Returns the atom and, for `v`/`q`, its exponent unit.
    fn atom(&mut self) -> Result<(LaurentPoly, Option<i64>)> {
        match self.peek() {
            Some('v') => {
                self.pos += 1;
                Ok((LaurentPoly::v(), Some(1)))
            }
            Some('q') => {
                self.pos += 1;
                Ok((LaurentPoly::q(), Some(2)))
            }
            Some('[') => {
                self.pos += 1;
                if !(self.eat('2') && self.eat(']')) {
                    return Err(self.error("expected [2]"));
                }
                Ok((LaurentPoly::two(), None))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected )"));
                }
                Ok((e, None))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok((LaurentPoly::constant(n), None))
            }
            _ => Err(self.error("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn basic_products() {
        let v = LaurentPoly::v();
        let vinv = LaurentPoly::monomial(1, -1);
        assert!((&v * &vinv).is_one());
        let two = LaurentPoly::two();
        assert_eq!(&two * &two, p("v^2+2+v^-2"));
    }

    #[test]
    fn structure_constant_of_w0_squared() {
        let two = LaurentPoly::two();
        let h = &(&two.pow(6) - &two.pow(4).scale(&4.into())) + &two.pow(2).scale(&3.into());
        assert_eq!(h.degree(), Some(6));
        assert_eq!(h.coeff(6), 1.into());
        assert_eq!(h.coeff(5), 0.into());
        assert_eq!(h, p("[2]^6-4[2]^4+3[2]^2"));
    }

    #[test]
    fn coefficients() {
        let two = LaurentPoly::two();
        assert_eq!(two.coeff(1), 1.into());
        assert_eq!(two.coeff(5), 0.into());
        let h = p("[2]^5-3[2]^3+[2]");
        assert_eq!(h.coeff(5), 1.into());
        assert_eq!(h.coeff(6), 0.into());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::v().bar(), LaurentPoly::monomial(1, -1));
        assert_eq!(LaurentPoly::two().bar(), LaurentPoly::two());
    }

    #[test]
    fn binomial_rows() {
        // [2]^k has coefficient C(k, j) on v^(k - 2j).
        let two = LaurentPoly::two();
        for k in 0..=7u32 {
            let pk = two.pow(k);
            let mut binom = vec![BigInt::one()];
            for _ in 0..k {
                let mut next = vec![BigInt::one(); binom.len() + 1];
                for j in 1..binom.len() {
                    next[j] = &binom[j - 1] + &binom[j];
                }
                binom = next;
            }
            for (j, c) in binom.iter().enumerate() {
                assert_eq!(&pk.coeff(k as i64 - 2 * j as i64), c);
            }
            assert_eq!(pk.num_terms(), k as usize + 1);
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("3*v^2-v+4-2*v^-3").to_string(), "3*v^2-v+4-2*v^-3");
        assert_eq!(p("q^2+2*q+1").q_text().unwrap(), "q^2+2*q+1");
        assert_eq!(LaurentPoly::v().q_text(), None);
        assert_eq!(p("[2]^6-4[2]^4+3[2]^2").quantum_text(), "[2]^6-4[2]^4+3[2]^2");
        assert_eq!(p("[2]").quantum_text(), "[2]");
        assert_eq!(p("5").quantum_text(), "5");
        assert_eq!(p("v").quantum_text(), "v");
        assert!("v^".parse::<LaurentPoly>().is_err());
        assert!("(v".parse::<LaurentPoly>().is_err());
        assert!("[2]^-1".parse::<LaurentPoly>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::btree_map(-6i64..=6, -20i64..=20, 0..6)
            .prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(-(-a.clone()), a.clone());
        }

        #[test]
        fn bar_is_ring_automorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.bar().bar(), a.clone());
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn quantum_expansion_reassembles(a in arb_poly()) {
            let sym = &a + &a.bar();
            let exp = sym.quantum_two_expansion().unwrap();
            let mut back = LaurentPoly::zero();
            for (k, c) in exp {
                back += &LaurentPoly::two().pow(k).scale(&c);
            }
            prop_assert_eq!(back, sym.clone());
            prop_assert_eq!(sym.quantum_text().parse::<LaurentPoly>().unwrap(), sym);
        }
    }
}
