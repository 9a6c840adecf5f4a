use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::KlEngine;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{ElemId, Generator, GroupElement, NO_ELEMENT};

/// `sum h_z C_z` keyed by registry id. Ids are shortlex-ordered.
pub(crate) type HeckeIds = BTreeMap<ElemId, LaurentPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element of the Hecke algebra written in the canonical basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeCombination {
    terms: BTreeMap<GroupElement, LaurentPoly>,
}

impl HeckeCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `C_w`.
    pub fn basis(w: GroupElement) -> Self {
        let mut c = Self::zero();
        c.add_term(w, &LaurentPoly::one());
        c
    }

    pub fn add_term(&mut self, w: GroupElement, h: &LaurentPoly) {
        let entry = self.terms.entry(w.clone()).or_default();
        *entry += h;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeCombination, factor: &LaurentPoly) {
        for (w, h) in &other.terms {
            self.add_term(w.clone(), &(h * factor));
        }
    }

    pub fn coefficient(&self, z: &GroupElement) -> LaurentPoly {
        self.terms.get(z).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in shortlex order of the basis element.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&GroupElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms.keys()
    }
}

impl fmt::Display for HeckeCombination {
    /// Longest basis elements first, coefficients in powers of `[2]`:
    /// `[2]*C[121210121212] + ([2]^5-3[2]^3+[2])*C[121212]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, h)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let basis = format!("C[{}]", w.digits());
            if h.is_one() {
                f.write_str(&basis)?;
            } else {
                let text = h.quantum_text();
                let atomic = !text[1..].contains(['+', '-']);
                if atomic {
                    write!(f, "{text}*{basis}")?;
                } else {
                    write!(f, "({text})*{basis}")?;
                }
            }
        }
        Ok(())
    }
}

fn add_into(acc: &mut HeckeIds, w: ElemId, h: LaurentPoly) {
    if h.is_zero() {
        return;
    }
    let entry = acc.entry(w).or_default();
    *entry += &h;
    if entry.is_zero() {
        acc.remove(&w);
    }
}

impl KlEngine {
    pub(crate) fn to_ids(&self, c: &HeckeCombination) -> Result<HeckeIds> {
        c.terms
            .iter()
            .map(|(w, h)| Ok((self.id(w)?, h.clone())))
            .collect()
    }

    pub(crate) fn combination_of(&self, c: &HeckeIds) -> HeckeCombination {
        HeckeCombination {
            terms: c
                .iter()
                .map(|(&w, h)| (self.element(w).clone(), h.clone()))
                .collect(),
        }
    }

    fn overflow(&self, what: &str) -> Error {
        Error::ResourceLimit(format!(
            "{what} leaves the registry (max length {})",
            self.registry().max_length()
        ))
    }

    /// `C_g * c` (left) or `c * C_g` (right).
    pub(crate) fn cs_mul_ids(&self, g: Generator, c: &HeckeIds, side: Side) -> Result<HeckeIds> {
        let reg = self.registry();
        let two = LaurentPoly::two();
        let mut out = HeckeIds::new();
        for (&w, h) in c {
            let descent = match side {
                Side::Left => reg.is_left_descent(g, w),
                Side::Right => reg.is_right_descent(w, g),
            };
            if descent {
                add_into(&mut out, w, h * &two);
                continue;
            }
            let gw = match side {
                Side::Left => reg.lmul(g, w),
                Side::Right => reg.rmul(w, g),
            };
            if gw == NO_ELEMENT {
                return Err(self.overflow("generator product"));
            }
            add_into(&mut out, gw, h.clone());
            for &(z, m) in self.column(w)?.mu_list() {
                let below = match side {
                    Side::Left => reg.is_left_descent(g, z),
                    Side::Right => reg.is_right_descent(z, g),
                };
                if below {
                    add_into(&mut out, z, h.scale(&BigInt::from(m)));
                }
            }
        }
        self.check_support(&out)?;
        Ok(out)
    }

    pub fn cs_mul(&self, g: Generator, c: &HeckeCombination, side: Side) -> Result<HeckeCombination> {
        let ids = self.to_ids(c)?;
        Ok(self.combination_of(&self.cs_mul_ids(g, &ids, side)?))
    }

    fn check_support(&self, c: &HeckeIds) -> Result<()> {
        if c.len() > self.config().max_support {
            return Err(Error::ResourceLimit(format!(
                "product support {} exceeds cap {}",
                c.len(),
                self.config().max_support
            )));
        }
        Ok(())
    }

    /// `C_x C_y`, peeling the first letter of `x`:
    /// `C_x = C_g C_{x'} - sum_{z ≺ x', gz < z} mu(z, x') C_z`.
    pub(crate) fn c_product_ids(&self, x: ElemId, y: ElemId) -> Result<Arc<HeckeIds>> {
        let reg = self.registry();
        if reg.length(x) + reg.length(y) > self.config().max_operand_length {
            return Err(Error::ResourceLimit(format!(
                "l(x) + l(y) = {} exceeds cap {}",
                reg.length(x) + reg.length(y),
                self.config().max_operand_length
            )));
        }
        if let Some(hit) = self.products.get(&(x, y)) {
            return Ok(Arc::clone(hit.value()));
        }
        let result = match reg.first_letter(x) {
            None => {
                let mut c = HeckeIds::new();
                c.insert(y, LaurentPoly::one());
                c
            }
            Some(g) => {
                let rest = reg.lmul(g, x);
                let inner = self.c_product_ids(rest, y)?;
                let mut acc = self.cs_mul_ids(g, &inner, Side::Left)?;
                let subtract: Vec<(ElemId, u64)> = self
                    .column(rest)?
                    .mu_list()
                    .iter()
                    .copied()
                    .filter(|&(z, _)| reg.is_left_descent(g, z))
                    .collect();
                for (z, m) in subtract {
                    let term = self.c_product_ids(z, y)?;
                    let m = LaurentPoly::constant(m);
                    for (&w, h) in term.iter() {
                        add_into(&mut acc, w, -(h * &m));
                    }
                }
                self.check_support(&acc)?;
                acc
            }
        };
        let result = Arc::new(result);
        self.products.insert((x, y), Arc::clone(&result));
        Ok(result)
    }

    pub fn c_product(&self, x: &GroupElement, y: &GroupElement) -> Result<HeckeCombination> {
        let (x, y) = (self.id(x)?, self.id(y)?);
        Ok(self.combination_of(&*self.c_product_ids(x, y)?))
    }

    /// Product of an arbitrary combination with `C_y` on the right.
    pub fn combination_times(&self, c: &HeckeCombination, y: &GroupElement) -> Result<HeckeCombination> {
        let y = self.id(y)?;
        let mut acc = HeckeIds::new();
        for (x, h) in c.terms() {
            let prod = self.c_product_ids(self.id(x)?, y)?;
            for (&w, k) in prod.iter() {
                add_into(&mut acc, w, h * k);
            }
        }
        Ok(self.combination_of(&acc))
    }

    /// Number of memoized products.
    pub fn products_cached(&self) -> usize {
        self.products.len()
    }
}
