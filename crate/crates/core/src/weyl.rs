//! The affine Weyl group of type G2, realized by affine reflections of the
//! plane.
//!
//! Points are written in the pairing basis `(a, b) = (<x, α∨>, <x, β∨>)` with
//! `α` short and `β` long. The generators act by
//!
//! ```text
//! t = s_α      : (a, b) -> (-a, a + b)
//! s = s_β      : (a, b) -> (a + 3b, -b)
//! r = s_{θ,1}  : (a, b) -> (a, 1 - a - b)
//! ```
//!
//! The group acts simply transitively on alcoves, so an element is determined
//! by the image of one interior point `v0` of the fundamental alcove
//! `{a > 0, b > 0, a + 2b < 1}`. Every [`GroupElement`] caches that image and
//! compares by it.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    R = 0,
    S = 1,
    T = 2,
}

impl Generator {
    /// In canonical-form order `r < s < t`.
    pub const ALL: [Generator; 3] = [Generator::R, Generator::S, Generator::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Generator> {
        Self::ALL.get(i).copied()
    }

    pub fn letter(self) -> char {
        match self {
            Generator::R => 'r',
            Generator::S => 's',
            Generator::T => 't',
        }
    }

    pub fn digit(self) -> char {
        (b'0' + self as u8) as char
    }

    pub fn from_char(c: char) -> Option<Generator> {
        match c {
            'r' | '0' => Some(Generator::R),
            's' | '1' => Some(Generator::S),
            't' | '2' => Some(Generator::T),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Parses a word in either the letter alphabet (`"stsr"`) or the digit
/// alphabet (`"1210"`). The empty string and `"e"` denote the identity.
pub fn parse_word(text: &str) -> Result<Vec<Generator>> {
    let text = text.trim();
    if text == "e" {
        return Ok(Vec::new());
    }
    text.chars()
        .map(|c| {
            Generator::from_char(c)
                .ok_or_else(|| Error::Parse(format!("invalid generator {c:?} in word {text:?}")))
        })
        .collect()
}

pub fn word_digits(word: &[Generator]) -> String {
    word.iter().map(|g| g.digit()).collect()
}

pub fn word_letters(word: &[Generator]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|g| g.letter()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub a: BigRational,
    pub b: BigRational,
}

impl RationalPoint {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        RationalPoint { a, b }
    }

    pub fn from_fractions(a: (i64, i64), b: (i64, i64)) -> Self {
        RationalPoint {
            a: ratio(a.0, a.1),
            b: ratio(b.0, b.1),
        }
    }

    /// The base point `v0 = (1/4, 1/4)`.
    pub fn base() -> Self {
        Self::from_fractions((1, 4), (1, 4))
    }

    pub fn origin() -> Self {
        RationalPoint {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn sub(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        }
    }

    pub fn add(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
    }

    /// Inside the open fundamental alcove.
    pub fn in_fundamental_alcove(&self) -> bool {
        let two = BigRational::from_integer(BigInt::from(2));
        self.a > BigRational::zero()
            && self.b > BigRational::zero()
            && &self.a + &two * &self.b < BigRational::one()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Reflection of `p` by generator `g`.
pub fn act(g: Generator, p: &RationalPoint) -> RationalPoint {
    match g {
        Generator::T => RationalPoint {
            a: -&p.a,
            b: &p.a + &p.b,
        },
        Generator::S => RationalPoint {
            a: &p.a + &p.b * BigInt::from(3),
            b: -&p.b,
        },
        Generator::R => RationalPoint {
            a: p.a.clone(),
            b: BigRational::one() - &p.a - &p.b,
        },
    }
}

/// Left action of `g1 g2 ... gn` on `p`: `g1(g2(...gn(p)))`.
pub fn evaluate_at(word: &[Generator], p: &RationalPoint) -> RationalPoint {
    word.iter().rev().fold(p.clone(), |acc, &g| act(g, &acc))
}

/// Image of the base point `v0` under `word`.
pub fn evaluate(word: &[Generator]) -> RationalPoint {
    evaluate_at(word, &RationalPoint::base())
}

/// Whether the reflecting hyperplane of `g` separates `p` from `v0`, i.e.
/// whether `g` is a left descent of the element sending `v0` to `p`.
pub fn separates(g: Generator, p: &RationalPoint) -> bool {
    match g {
        Generator::T => p.a < BigRational::zero(),
        Generator::S => p.b < BigRational::zero(),
        Generator::R => &p.a + &p.b * BigInt::from(2) > BigRational::one(),
    }
}

/// Canonical word of the element whose orbit point is `p`: strip the
/// smallest left descent until `v0` is reached, reading the stripped letters
/// left to right.
fn canonical_word_of_point(p: &RationalPoint) -> Vec<Generator> {
    let mut word = Vec::new();
    let mut cur = p.clone();
    while let Some(g) = Generator::ALL.into_iter().find(|&g| separates(g, &cur)) {
        word.push(g);
        cur = act(g, &cur);
    }
    debug_assert!(cur.in_fundamental_alcove());
    word
}

/// An element of the affine Weyl group: its canonical reduced word and the
/// cached image of `v0`.
#[derive(Clone, Debug)]
pub struct GroupElement {
    word: Vec<Generator>,
    point: RationalPoint,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.point == other.point
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.point.hash(state)
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex on canonical words.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            word: Vec::new(),
            point: RationalPoint::base(),
        }
    }

    pub fn generator(g: Generator) -> Self {
        canonicalize(&[g])
    }

    pub fn from_point(point: RationalPoint) -> Self {
        let word = canonical_word_of_point(&point);
        GroupElement { word, point }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(canonicalize(&parse_word(text)?))
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn point(&self) -> &RationalPoint {
        &self.point
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Digit form (`0 = r`, `1 = s`, `2 = t`); empty for the identity.
    pub fn digits(&self) -> String {
        word_digits(&self.word)
    }

    /// Letter form; `"e"` for the identity.
    pub fn letters(&self) -> String {
        word_letters(&self.word)
    }

    pub fn left_mul(&self, g: Generator) -> GroupElement {
        GroupElement::from_point(act(g, &self.point))
    }

    pub fn right_mul(&self, g: Generator) -> GroupElement {
        self.multiply(&GroupElement::generator(g))
    }

    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        GroupElement::from_point(evaluate_at(&self.word, &other.point))
    }

    pub fn inverse(&self) -> GroupElement {
        let rev: Vec<Generator> = self.word.iter().rev().copied().collect();
        canonicalize(&rev)
    }

    pub fn is_left_descent(&self, g: Generator) -> bool {
        separates(g, &self.point)
    }

    pub fn is_right_descent(&self, g: Generator) -> bool {
        self.inverse().is_left_descent(g)
    }

    pub fn left_descents(&self) -> Vec<Generator> {
        Generator::ALL
            .into_iter()
            .filter(|&g| self.is_left_descent(g))
            .collect()
    }

    pub fn right_descents(&self) -> Vec<Generator> {
        let inv = self.inverse();
        Generator::ALL
            .into_iter()
            .filter(|&g| inv.is_left_descent(g))
            .collect()
    }

    /// Translation vector if the element acts as a pure translation.
    pub fn translation_vector(&self) -> Option<RationalPoint> {
        let origin = RationalPoint::origin();
        let other = RationalPoint::from_fractions((1, 3), (1, 7));
        let d0 = evaluate_at(&self.word, &origin).sub(&origin);
        let d1 = evaluate_at(&self.word, &other).sub(&other);
        (d0 == d1).then_some(d0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters())
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupElement::parse(s)
    }
}

/// Canonical reduced form of an arbitrary word.
pub fn canonicalize(word: &[Generator]) -> GroupElement {
    GroupElement::from_point(evaluate(word))
}

pub fn multiply(a: &GroupElement, b: &GroupElement) -> GroupElement {
    a.multiply(b)
}

pub fn inverse(a: &GroupElement) -> GroupElement {
    a.inverse()
}

/// Bruhat order by the descent recursion.
pub fn bruhat_leq(u: &GroupElement, w: &GroupElement) -> bool {
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.is_identity() || u == w {
            return true;
        }
        if u.length() >= w.length() {
            return false;
        }
        let s = w.word[0];
        if u.is_left_descent(s) {
            u = u.left_mul(s);
        }
        w = w.left_mul(s);
    }
}

/// Result of enumerating the subwords of a reduced word.
#[derive(Clone, Debug)]
pub struct Subwords {
    /// Number of subwords generated before deduplication by orbit point.
    pub raw_count: usize,
    pub elements: HashSet<RationalPoint>,
}

/// Splits above this many letters.
const BINARY_TREE_LIMIT: usize = 10;

fn subwords_binary_tree(word: &[Generator], cap: usize) -> Result<Subwords> {
    let n = word.len();
    let raw = 1usize
        .checked_shl(n as u32)
        .filter(|&r| r <= cap)
        .ok_or_else(|| Error::ResourceLimit(format!("2^{n} subwords exceeds cap {cap}")))?;
    // Depth-first over keep/delete choices, applying letters right to left so
    // each branch reuses its suffix point.
    let mut elements = HashSet::new();
    let mut stack = vec![(n, RationalPoint::base())];
    while let Some((k, p)) = stack.pop() {
        if k == 0 {
            elements.insert(p);
            continue;
        }
        let g = word[k - 1];
        stack.push((k - 1, act(g, &p)));
        stack.push((k - 1, p));
    }
    Ok(Subwords {
        raw_count: raw,
        elements,
    })
}

/// All subwords of `word` as distinct group elements. Short words go through
/// a binary tree of keep/delete choices; long words are split in half, each
/// half is enumerated and reduced to distinct elements, and the halves are
/// glued pairwise.
pub fn subwords(word: &[Generator], cap: usize) -> Result<Subwords> {
    if word.len() <= BINARY_TREE_LIMIT {
        return subwords_binary_tree(word, cap);
    }
    let (left, right) = word.split_at(word.len() / 2);
    let a = subwords(left, cap)?;
    let b = subwords(right, cap)?;
    let raw = a.elements.len() * b.elements.len();
    if raw > cap {
        return Err(Error::ResourceLimit(format!(
            "{raw} glued subwords exceeds cap {cap}"
        )));
    }
    let left_words: Vec<Vec<Generator>> = a.elements.iter().map(canonical_word_of_point).collect();
    let mut elements = HashSet::with_capacity(raw);
    for lw in &left_words {
        for p in &b.elements {
            elements.insert(evaluate_at(lw, p));
        }
    }
    Ok(Subwords {
        raw_count: raw,
        elements,
    })
}

pub const DEFAULT_SUBWORD_CAP: usize = 1 << 20;

/// Bruhat order by the subword property: `u <= w` iff `u` is a subword of a
/// reduced word of `w`.
pub fn bruhat_subword_oracle(u: &GroupElement, w: &GroupElement, cap: usize) -> Result<bool> {
    if u.length() > w.length() {
        return Ok(false);
    }
    let subs = subwords(w.word(), cap)?;
    Ok(subs.elements.contains(u.point()))
}

/// All elements of length at most `n`, sorted by length and then canonical
/// word.
pub fn elements_up_to_length(n: usize) -> Vec<GroupElement> {
    let mut seen: HashSet<RationalPoint> = HashSet::new();
    seen.insert(RationalPoint::base());
    let mut out = vec![GroupElement::identity()];
    let mut frontier = vec![RationalPoint::base()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &frontier {
            for g in Generator::ALL {
                let q = act(g, p);
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        let mut level: Vec<GroupElement> = next.iter().cloned().map(GroupElement::from_point).collect();
        level.sort();
        out.extend(level);
        frontier = next;
    }
    out
}

/// Dense index of group elements.
pub type ElemId = u32;

pub const NO_ELEMENT: ElemId = ElemId::MAX;

/// Interned table of every element up to a fixed length with multiplication
/// by generators on both sides. Ids are assigned in shortlex order, so
/// `id(u) < id(w)` whenever `l(u) < l(w)`.
#[derive(Debug)]
pub struct Registry {
    max_length: usize,
    elements: Vec<GroupElement>,
    index: HashMap<RationalPoint, ElemId>,
    lengths: Vec<u16>,
    left: Vec<[ElemId; 3]>,
    right: Vec<[ElemId; 3]>,
    inverse: Vec<ElemId>,
    level_start: Vec<usize>,
}

impl Registry {
    pub fn new(max_length: usize) -> Self {
        let elements = elements_up_to_length(max_length);
        let index: HashMap<RationalPoint, ElemId> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.point().clone(), i as ElemId))
            .collect();
        let lengths: Vec<u16> = elements.iter().map(|e| e.length() as u16).collect();
        let level_start: Vec<usize> = (0..=max_length + 1)
            .map(|l| lengths.partition_point(|&x| (x as usize) < l))
            .collect();
        let lookup = |p: &RationalPoint| index.get(p).copied().unwrap_or(NO_ELEMENT);
        let left: Vec<[ElemId; 3]> = elements
            .iter()
            .map(|e| Generator::ALL.map(|g| lookup(&act(g, e.point()))))
            .collect();
        let inverse: Vec<ElemId> = elements
            .iter()
            .map(|e| {
                let rev: Vec<Generator> = e.word().iter().rev().copied().collect();
                lookup(&evaluate(&rev))
            })
            .collect();
        let right: Vec<[ElemId; 3]> = (0..elements.len())
            .map(|i| {
                let inv = inverse[i] as usize;
                left[inv].map(|x| if x == NO_ELEMENT { x } else { inverse[x as usize] })
            })
            .collect();
        Registry {
            max_length,
            elements,
            index,
            lengths,
            left,
            right,
            inverse,
            level_start,
        }
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of elements of length strictly less than `l`.
    pub fn count_below(&self, l: usize) -> usize {
        self.level_start[l.min(self.max_length + 1)]
    }

    pub fn id(&self, e: &GroupElement) -> Option<ElemId> {
        self.index.get(e.point()).copied()
    }

    pub fn require(&self, e: &GroupElement) -> Result<ElemId> {
        self.id(e).ok_or_else(|| {
            Error::ResourceLimit(format!(
                "element {} of length {} exceeds the configured maximum length {}",
                e,
                e.length(),
                self.max_length
            ))
        })
    }

    pub fn element(&self, id: ElemId) -> &GroupElement {
        &self.elements[id as usize]
    }

    pub fn length(&self, id: ElemId) -> usize {
        self.lengths[id as usize] as usize
    }

    pub fn first_letter(&self, id: ElemId) -> Option<Generator> {
        self.elements[id as usize].word().first().copied()
    }

    pub fn last_letter(&self, id: ElemId) -> Option<Generator> {
        self.elements[id as usize].word().last().copied()
    }

    /// `g * w`, or `NO_ELEMENT` past the length bound.
    pub fn lmul(&self, g: Generator, id: ElemId) -> ElemId {
        self.left[id as usize][g.index()]
    }

    pub fn rmul(&self, id: ElemId, g: Generator) -> ElemId {
        self.right[id as usize][g.index()]
    }

    pub fn inverse(&self, id: ElemId) -> ElemId {
        self.inverse[id as usize]
    }

    pub fn is_left_descent(&self, g: Generator, id: ElemId) -> bool {
        self.elements[id as usize].is_left_descent(g)
    }

    pub fn is_right_descent(&self, id: ElemId, g: Generator) -> bool {
        self.is_left_descent(g, self.inverse(id))
    }

    /// Bruhat order on ids by the descent recursion.
    pub fn bruhat_leq(&self, mut u: ElemId, mut w: ElemId) -> bool {
        loop {
            if u == 0 || u == w {
                return true;
            }
            if self.length(u) >= self.length(w) {
                return false;
            }
            let s = self.first_letter(w).expect("w is not the identity");
            if self.is_left_descent(s, u) {
                u = self.lmul(s, u);
            }
            w = self.lmul(s, w);
        }
    }
}
