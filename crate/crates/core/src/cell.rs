//! The lowest two-sided cell `c0 = { d_u t_λ w0 d_v^{-1} }`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::kl::{gamma_delta_of, HeckeCombination, KlEngine};
use crate::rep::{self, Weight};
use crate::weyl::{Generator, GroupElement};

/// `a(w)` on the lowest cell, equal to `l(w0)`.
pub const A_LOWEST: i64 = 6;

/// Values of the a-function on the remaining two-sided cells.
pub const A_OTHER_CELLS: [i64; 4] = [0, 1, 2, 3];

pub const W0_NAMES: [&str; 12] = [
    "e", "s", "t", "st", "ts", "sts", "tst", "stst", "tsts", "ststs", "tstst", "ststst",
];

/// The tabulated `d_u` words, in the order of [`W0_NAMES`].
pub const D_WORDS: [&str; 12] = [
    "e",
    "tstsr",
    "ststrstsr",
    "tstrstsr",
    "stsr",
    "tsr",
    "strstsr",
    "trstsr",
    "sr",
    "r",
    "rstsr",
    "rstsrtstsr",
];

/// `v_1, ..., v_12` of the `v(i, j, a, b)` parametrization.
pub const V_WORDS: [&str; 12] = [
    "e",
    "r",
    "sr",
    "tsr",
    "stsr",
    "tstsr",
    "rstsr",
    "trstsr",
    "strstsr",
    "tstrstsr",
    "ststrstsr",
    "rststrstsr",
];

pub const W0_WORD: &str = "ststst";
pub const X_ALPHA_WORD: &str = "ststsr";
pub const X_BETA_WORD: &str = "tstsrtstsr";

fn el(word: &str) -> GroupElement {
    GroupElement::parse(word).expect("built-in word")
}

pub fn w0() -> GroupElement {
    el(W0_WORD)
}

/// Index into `W0` in the order `e, s, t, st, ts, sts, tst, stst, tsts,
/// ststs, tstst, ststst`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct W0Index(u8);

impl W0Index {
    pub fn all() -> impl Iterator<Item = W0Index> {
        (0..12).map(W0Index)
    }

    pub fn new(i: usize) -> Result<W0Index> {
        if i < 12 {
            Ok(W0Index(i as u8))
        } else {
            Err(Error::Parse(format!("W0 index {i} out of range")))
        }
    }

    /// Position in the list, starting at 0.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        W0_NAMES[self.index()]
    }

    pub fn d_word(self) -> &'static str {
        D_WORDS[self.index()]
    }

    pub fn from_name(name: &str) -> Result<W0Index> {
        let target = GroupElement::parse(name)?;
        W0Index::from_element(&target)
            .ok_or_else(|| Error::Parse(format!("`{name}` is not in the finite Weyl group")))
    }

    pub fn from_element(e: &GroupElement) -> Option<W0Index> {
        W0Index::all().find(|u| u.element() == *e)
    }

    /// Resolves a `d_u` word back to `u`.
    pub fn from_d_word(word: &str) -> Result<W0Index> {
        let target = GroupElement::parse(word)?;
        W0Index::all()
            .find(|u| el(u.d_word()) == target)
            .ok_or_else(|| Error::Parse(format!("`{word}` is not one of the d_u")))
    }

    pub fn element(self) -> GroupElement {
        el(self.name())
    }
}

impl fmt::Display for W0Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DominantWeight {
    pub n_alpha: u32,
    pub n_beta: u32,
}

impl DominantWeight {
    pub const fn new(n_alpha: u32, n_beta: u32) -> Self {
        DominantWeight { n_alpha, n_beta }
    }

    pub fn weight(self) -> Weight {
        Weight::new(self.n_alpha as i64, self.n_beta as i64)
    }

    pub fn from_weight(w: Weight) -> Option<Self> {
        Some(DominantWeight::new(
            u32::try_from(w.n_alpha).ok()?,
            u32::try_from(w.n_beta).ok()?,
        ))
    }

    /// Length of `t_λ`.
    pub fn translation_length(self) -> usize {
        6 * self.n_alpha as usize + 10 * self.n_beta as usize
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n_alpha, self.n_beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct C0Decomposition {
    pub u: W0Index,
    pub lambda: DominantWeight,
    pub v: W0Index,
}

impl C0Decomposition {
    pub fn element(&self) -> GroupElement {
        c0_from_parts(self.u, self.lambda, self.v)
    }
}

impl fmt::Display for C0Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.u, self.lambda, self.v)
    }
}

/// `d_u` from `u · ∏ x_γ` over the simple roots `γ` that `u` makes negative.
/// Translations for `s` and `t` are `x_α` and `x_β`.
pub fn d_element_from_formula(u: W0Index) -> GroupElement {
    let ue = u.element();
    let mut d = ue.clone();
    for (g, x) in [(Generator::S, X_ALPHA_WORD), (Generator::T, X_BETA_WORD)] {
        if ue.is_right_descent(g) {
            d = d.multiply(&el(x));
        }
    }
    d
}

/// `d_u`, checked against the tabulated word.
pub fn d_element(u: W0Index) -> Result<GroupElement> {
    let computed = d_element_from_formula(u);
    let expected = el(u.d_word());
    if computed != expected {
        return Err(Error::TableMismatch {
            u: u.name().to_string(),
            computed: computed.letters(),
            expected: u.d_word().to_string(),
        });
    }
    Ok(computed)
}

fn d_table() -> &'static [GroupElement; 12] {
    static TABLE: OnceLock<[GroupElement; 12]> = OnceLock::new();
    TABLE.get_or_init(|| std::array::from_fn(|i| el(D_WORDS[i])))
}

fn d_inverse_table() -> &'static [GroupElement; 12] {
    static TABLE: OnceLock<[GroupElement; 12]> = OnceLock::new();
    TABLE.get_or_init(|| std::array::from_fn(|i| d_table()[i].inverse()))
}

/// `t_λ = x_α^{n_α} x_β^{n_β}`.
pub fn translation_element(lambda: DominantWeight) -> GroupElement {
    let mut t = GroupElement::identity();
    let xa = el(X_ALPHA_WORD);
    let xb = el(X_BETA_WORD);
    for _ in 0..lambda.n_alpha {
        t = t.multiply(&xa);
    }
    for _ in 0..lambda.n_beta {
        t = t.multiply(&xb);
    }
    t
}

/// `d_u t_λ w0 d_v^{-1}`.
pub fn c0_from_parts(u: W0Index, lambda: DominantWeight, v: W0Index) -> GroupElement {
    d_table()[u.index()]
        .multiply(&translation_element(lambda))
        .multiply(&w0())
        .multiply(&d_inverse_table()[v.index()])
}

/// `v_i · ststst · x^a · y^b · v_j^{-1}` with `x = rststs`, `y = (rstst)^2`.
/// `i` and `j` run from 1 to 12.
pub fn c0_element(i: usize, j: usize, a: u32, b: u32) -> Result<GroupElement> {
    if !(1..=12).contains(&i) || !(1..=12).contains(&j) {
        return Err(Error::Parse(format!("v-indices ({i},{j}) must lie in 1..=12")));
    }
    let x = el("rststs");
    let y = el("rststrstst");
    let mut g = el(V_WORDS[i - 1]).multiply(&w0());
    for _ in 0..a {
        g = g.multiply(&x);
    }
    for _ in 0..b {
        g = g.multiply(&y);
    }
    Ok(g.multiply(&el(V_WORDS[j - 1]).inverse()))
}

/// The dominant weight `λ` with `t == t_λ`, if any.
fn dominant_translation(t: &GroupElement) -> Option<DominantWeight> {
    let vec = t.translation_vector()?;
    if !vec.a.is_integer() || !vec.b.is_integer() {
        return None;
    }
    let da = vec.a.to_integer();
    let db = vec.b.to_integer();
    if !(&da % 3u32).is_zero() {
        return None;
    }
    let n_alpha = (-db).to_u32()?;
    let n_beta = (-(da / BigInt::from(3))).to_u32()?;
    let lambda = DominantWeight::new(n_alpha, n_beta);
    (translation_element(lambda) == *t).then_some(lambda)
}

/// Writes `w` as `d_u t_λ w0 d_v^{-1}` with lengths adding up, or returns
/// `None` if `w` lies outside `c0`.
pub fn decompose_c0(w: &GroupElement) -> Result<Option<C0Decomposition>> {
    let lw = w.length();
    let w0 = w0();
    let mut found: Option<C0Decomposition> = None;
    for u in W0Index::all() {
        let du = &d_table()[u.index()];
        if du.length() + 6 > lw {
            continue;
        }
        let left = d_inverse_table()[u.index()].multiply(w);
        if left.length() + du.length() != lw {
            continue;
        }
        for v in W0Index::all() {
            let dv = &d_table()[v.index()];
            let m = left.multiply(dv);
            if m.length() + dv.length() != left.length() {
                continue;
            }
            let Some(lambda) = dominant_translation(&m.multiply(&w0)) else {
                continue;
            };
            if lambda.translation_length() + 6 != m.length() {
                continue;
            }
            let d = C0Decomposition { u, lambda, v };
            if let Some(prev) = found {
                return Err(Error::Invariant(format!(
                    "{w} decomposes in c0 both as {prev} and as {d}"
                )));
            }
            found = Some(d);
        }
    }
    Ok(found)
}

fn require_c0(w: &GroupElement) -> Result<C0Decomposition> {
    decompose_c0(w)?.ok_or_else(|| Error::NotInLowestCell(w.letters()))
}

pub fn same_left_cell_c0(y: &GroupElement, w: &GroupElement) -> Result<bool> {
    Ok(require_c0(y)?.v == require_c0(w)?.v)
}

pub fn same_right_cell_c0(y: &GroupElement, w: &GroupElement) -> Result<bool> {
    Ok(require_c0(y)?.u == require_c0(w)?.u)
}

/// The three translations that can carry a nonzero `δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZValue {
    Zero,
    XAlpha,
    XBeta,
}

impl ZValue {
    pub const ALL: [ZValue; 3] = [ZValue::Zero, ZValue::XAlpha, ZValue::XBeta];

    pub fn weight(self) -> DominantWeight {
        match self {
            ZValue::Zero => DominantWeight::new(0, 0),
            ZValue::XAlpha => DominantWeight::new(1, 0),
            ZValue::XBeta => DominantWeight::new(0, 1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ZValue::Zero => "0",
            ZValue::XAlpha => "x_alpha",
            ZValue::XBeta => "x_beta",
        }
    }

    /// `z · w0`.
    pub fn element(self) -> GroupElement {
        translation_element(self.weight()).multiply(&w0())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UClass {
    U1,
    U2,
    U3,
    U4,
    None,
}

impl UClass {
    pub fn label(self) -> &'static str {
        match self {
            UClass::U1 => "U1",
            UClass::U2 => "U2",
            UClass::U3 => "U3",
            UClass::U4 => "U4",
            UClass::None => "none",
        }
    }

    fn of(delta: [u8; 3]) -> Option<UClass> {
        Some(match delta {
            [0, 0, 0] => UClass::None,
            [1, 0, 0] | [0, 1, 0] | [0, 0, 1] => UClass::U1,
            [1, 1, 0] => UClass::U2,
            [1, 0, 1] => UClass::U3,
            [1, 1, 1] => UClass::U4,
            _ => return None,
        })
    }
}

impl fmt::Display for UClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `δ` values of one pair `(u, u')` at `z = 0, x_α, x_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaRecord {
    pub u: W0Index,
    pub uprime: W0Index,
    pub delta: [u8; 3],
    pub class: UClass,
}

impl DeltaRecord {
    pub fn get(&self, z: ZValue) -> u8 {
        self.delta[z as usize]
    }

    /// `(d_u, d_u')` as the tabulated words.
    pub fn d_words(&self) -> (&'static str, &'static str) {
        (self.u.d_word(), self.uprime.d_word())
    }
}

/// `C_{w0 d_u^{-1}} C_{d_u' w0}`.
pub fn lowest_product(kl: &KlEngine, u: W0Index, uprime: W0Index) -> Result<HeckeCombination> {
    let x = w0().multiply(&d_inverse_table()[u.index()]);
    let y = d_table()[uprime.index()].multiply(&w0());
    kl.c_product(&x, &y)
}

/// Every support element of the product is some `z w0` in `c0`, and each
/// coefficient has degree at most `a = 6`. Returns `δ` at the three
/// translations `0, x_α, x_β`.
fn analyse_product(u: W0Index, uprime: W0Index, h: &HeckeCombination) -> Result<[u8; 3]> {
    let mut delta = [0u8; 3];
    for (z, coeff) in h.terms() {
        let d = decompose_c0(z)?.ok_or_else(|| {
            Error::Invariant(format!(
                "C_(w0 d_{u}^-1) C_(d_{uprime} w0) has {z} outside c0 in its support"
            ))
        })?;
        let (_, dl) = gamma_delta_of(coeff, A_LOWEST)?;
        if dl.is_zero() {
            continue;
        }
        let slot = ZValue::ALL
            .into_iter()
            .find(|zv| d.u.index() == 0 && d.v.index() == 0 && d.lambda == zv.weight());
        match (slot, dl == BigInt::from(1)) {
            (Some(zv), true) => delta[zv as usize] = 1,
            _ => {
                return Err(Error::Invariant(format!(
                    "delta = {dl} at {z} = {d} for the pair ({u},{uprime})"
                )))
            }
        }
    }
    Ok(delta)
}

/// `δ_{w0 d_u^{-1}, d_u' w0, z w0}`.
pub fn delta_triple(kl: &KlEngine, u: W0Index, uprime: W0Index, z: ZValue) -> Result<u8> {
    let h = lowest_product(kl, u, uprime)?;
    Ok(analyse_product(u, uprime, &h)?[z as usize])
}

fn delta_record(kl: &KlEngine, u: W0Index, uprime: W0Index) -> Result<DeltaRecord> {
    let h = lowest_product(kl, u, uprime)?;
    let delta = analyse_product(u, uprime, &h)?;
    let class = UClass::of(delta).ok_or_else(|| {
        Error::Invariant(format!("pair ({u},{uprime}) has delta pattern {delta:?}"))
    })?;
    Ok(DeltaRecord {
        u,
        uprime,
        delta,
        class,
    })
}

/// All 144 pairs in row-major order of `(u, u')`.
pub fn delta_table(kl: &KlEngine) -> Result<Vec<DeltaRecord>> {
    let pairs: Vec<(W0Index, W0Index)> = W0Index::all()
        .flat_map(|u| W0Index::all().map(move |v| (u, v)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(u, v)| delta_record(kl, u, v))
        .collect()
}

/// The δ-table, computed once, plus `μ` on `c0` through tensor
/// multiplicities.
pub struct LowestCell {
    kl: Arc<KlEngine>,
    table: OnceLock<Vec<DeltaRecord>>,
}

/// One summand `m_{x*, x', z} · δ(u, u', z)` of `μ` on `c0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuTerm {
    pub z: ZValue,
    pub m: u64,
    pub delta: u8,
}

impl LowestCell {
    pub fn new(kl: Arc<KlEngine>) -> Self {
        LowestCell {
            kl,
            table: OnceLock::new(),
        }
    }

    pub fn engine(&self) -> &Arc<KlEngine> {
        &self.kl
    }

    pub fn table(&self) -> Result<&[DeltaRecord]> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let t = delta_table(&self.kl)?;
        Ok(self.table.get_or_init(|| t))
    }

    pub fn record(&self, u: W0Index, uprime: W0Index) -> Result<&DeltaRecord> {
        Ok(&self.table()?[u.index() * 12 + uprime.index()])
    }

    /// Terms of `μ(d_u t_x w0 d_v^{-1}, d_u' t_x' w0 d_v^{-1})`, which does
    /// not depend on `v`.
    pub fn mu_terms(
        &self,
        u: W0Index,
        x: DominantWeight,
        uprime: W0Index,
        xprime: DominantWeight,
    ) -> Result<Vec<MuTerm>> {
        let rec = self.record(u, uprime)?;
        let xs = rep::dual(x.weight());
        ZValue::ALL
            .into_iter()
            .map(|z| {
                let zs = rep::dual(z.weight().weight());
                Ok(MuTerm {
                    z,
                    m: rep::tensor_mult(xs, xprime.weight(), zs)?,
                    delta: rec.get(z),
                })
            })
            .collect()
    }

    pub fn mu_from_parts(
        &self,
        u: W0Index,
        x: DominantWeight,
        uprime: W0Index,
        xprime: DominantWeight,
    ) -> Result<u64> {
        if u == uprime && x == xprime {
            return Ok(0);
        }
        Ok(self
            .mu_terms(u, x, uprime, xprime)?
            .iter()
            .map(|t| t.m * t.delta as u64)
            .sum())
    }

    /// `μ(y, w)` for `y, w` in `c0`, symmetric in its arguments.
    pub fn mu_lowest(&self, y: &GroupElement, w: &GroupElement) -> Result<u64> {
        let dy = require_c0(y)?;
        let dw = require_c0(w)?;
        self.mu_from_decompositions(&dy, &dw)
    }

    /// `μ` for two elements already written as `d_u t_λ w0 d_v^{-1}`.
    pub fn mu_from_decompositions(&self, dy: &C0Decomposition, dw: &C0Decomposition) -> Result<u64> {
        if dy == dw {
            return Ok(0);
        }
        if dy.v == dw.v {
            self.mu_from_parts(dy.u, dy.lambda, dw.u, dw.lambda)
        } else if dy.u == dw.u {
            // Inversion swaps u and v and fixes λ, since λ* = λ.
            self.mu_from_parts(dy.v, dy.lambda, dw.v, dw.lambda)
        } else {
            Ok(0)
        }
    }
}

fn json_record(r: &DeltaRecord) -> serde_json::Value {
    json!({
        "u_index": r.u.index() + 1,
        "u_word": r.u.name(),
        "d_u": r.u.d_word(),
        "uprime_index": r.uprime.index() + 1,
        "uprime_word": r.uprime.name(),
        "d_uprime": r.uprime.d_word(),
        "delta_0": r.delta[0],
        "delta_xa": r.delta[1],
        "delta_xb": r.delta[2],
        "class": r.class.label(),
    })
}

pub const DELTA_CSV_HEADER: &str =
    "u_index,u_word,d_u,uprime_index,uprime_word,d_uprime,delta_0,delta_xa,delta_xb,class";

pub fn delta_table_csv(records: &[DeltaRecord]) -> String {
    let mut out = String::from(DELTA_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.u.index() + 1,
            r.u.name(),
            r.u.d_word(),
            r.uprime.index() + 1,
            r.uprime.name(),
            r.uprime.d_word(),
            r.delta[0],
            r.delta[1],
            r.delta[2],
            r.class.label()
        ));
    }
    out
}

pub fn delta_table_json(records: &[DeltaRecord]) -> serde_json::Value {
    serde_json::Value::Array(records.iter().map(json_record).collect())
}

fn latex_class(c: UClass) -> String {
    match c {
        UClass::None => "--".to_string(),
        other => format!("$\\mathcal{{U}}_{}$", &other.label()[1..]),
    }
}

pub fn delta_table_latex(records: &[DeltaRecord]) -> String {
    let mut out = String::from("\\begin{tabular}{rllrllcccl}\n");
    out.push_str(
        "$u$ & $u$ & $d_u$ & $u'$ & $u'$ & $d_{u'}$ & $\\delta_0$ & $\\delta_{x_\\alpha}$ & $\\delta_{x_\\beta}$ & class \\\\\n\\hline\n",
    );
    for r in records {
        out.push_str(&format!(
            "{} & ${}$ & ${}$ & {} & ${}$ & ${}$ & {} & {} & {} & {} \\\\\n",
            r.u.index() + 1,
            r.u.name(),
            r.u.d_word(),
            r.uprime.index() + 1,
            r.uprime.name(),
            r.uprime.d_word(),
            r.delta[0],
            r.delta[1],
            r.delta[2],
            latex_class(r.class)
        ));
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> GroupElement {
        GroupElement::parse(s).unwrap()
    }

    #[test]
    fn d_table_matches_formula() {
        for u in W0Index::all() {
            d_element(u).unwrap();
        }
        assert_eq!(d_element(W0Index::new(0).unwrap()).unwrap(), e(""));
        assert_eq!(d_element(W0Index::from_name("s").unwrap()).unwrap(), e("tstsr"));
        assert_eq!(
            d_element(W0Index::from_name("ststst").unwrap()).unwrap(),
            e("rstsrtstsr")
        );
    }

    #[test]
    fn distinguished_involutions() {
        for u in W0Index::all() {
            let d = d_element(u).unwrap();
            let inv = d.multiply(&w0()).multiply(&d.inverse());
            assert!(inv.multiply(&inv).is_identity());
        }
    }

    #[test]
    fn translations() {
        assert!(translation_element(DominantWeight::new(0, 0)).is_identity());
        assert_eq!(translation_element(DominantWeight::new(1, 0)).length(), 6);
        let t = translation_element(DominantWeight::new(1, 1));
        assert_eq!(t.length(), 16);
        assert_eq!(t, e(X_BETA_WORD).multiply(&e(X_ALPHA_WORD)));
        assert_eq!(translation_element(DominantWeight::new(2, 1)).length(), 22);
    }

    #[test]
    fn v_parametrization() {
        assert_eq!(c0_element(1, 1, 0, 0).unwrap(), w0());
        let g = c0_element(2, 1, 0, 0).unwrap();
        assert_eq!(g, e("r").multiply(&w0()));
        assert_eq!(g.length(), 7);
        assert!(c0_element(0, 1, 0, 0).is_err());
    }

    #[test]
    fn decompositions() {
        let d = decompose_c0(&w0()).unwrap().unwrap();
        assert_eq!(d.to_string(), "(e,(0,0),e)");
        assert_eq!(decompose_c0(&e("s")).unwrap(), None);
        assert_eq!(decompose_c0(&e("")).unwrap(), None);
        let g = c0_element(2, 1, 1, 0).unwrap();
        let d = decompose_c0(&g).unwrap().unwrap();
        assert_eq!(d.element(), g);
    }

    #[test]
    fn cells() {
        let rw0 = e("r").multiply(&w0());
        assert!(same_left_cell_c0(&w0(), &rw0).unwrap());
        assert!(same_right_cell_c0(&w0(), &w0()).unwrap());
        let other = c0_element(1, 2, 0, 0).unwrap();
        assert!(!same_left_cell_c0(&w0(), &other).unwrap());
        assert!(matches!(
            same_left_cell_c0(&e("s"), &w0()),
            Err(Error::NotInLowestCell(_))
        ));
    }

    #[test]
    fn single_deltas() {
        let kl = KlEngine::with_max_length(40);
        let idx = |n| W0Index::from_name(n).unwrap();
        assert_eq!(delta_triple(&kl, idx("e"), idx("ststs"), ZValue::Zero).unwrap(), 1);
        assert_eq!(delta_triple(&kl, idx("e"), idx("ststs"), ZValue::XAlpha).unwrap(), 0);
        assert_eq!(delta_triple(&kl, idx("e"), idx("e"), ZValue::Zero).unwrap(), 0);
    }

    #[test]
    fn mu_on_small_pairs() {
        let cell = LowestCell::new(Arc::new(KlEngine::with_max_length(40)));
        let rw0 = e("r").multiply(&w0());
        assert_eq!(cell.mu_lowest(&w0(), &rw0).unwrap(), 1);
        assert_eq!(cell.mu_lowest(&w0(), &w0()).unwrap(), 0);
        assert_eq!(
            cell.mu_lowest(&w0(), &rw0).unwrap(),
            cell.engine().mu_symmetric(&w0(), &rw0).unwrap()
        );
    }

    #[test]
    fn csv_shape() {
        let rec = DeltaRecord {
            u: W0Index::new(0).unwrap(),
            uprime: W0Index::new(9).unwrap(),
            delta: [1, 0, 0],
            class: UClass::U1,
        };
        let csv = delta_table_csv(&[rec]);
        assert_eq!(csv.lines().nth(1).unwrap(), "1,e,e,10,ststs,r,1,0,0,U1");
    }
}
