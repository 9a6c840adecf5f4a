//! Kazhdan-Lusztig polynomials, leading coefficients, and canonical-basis
//! products for the affine Weyl group of type G2.
//!
//! Polynomials are computed a column at a time: for each `w`, every `P_{y,w}`
//! with `y <= w` is produced from the column of `w' = s w` (where `s` is the
//! first letter of `w`'s canonical word) and the columns of the `z ≺ w'` with
//! `sz < z`. Columns are stored once and shared between threads.

mod cache;
mod hecke;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use dashmap::DashMap;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{ElemId, Generator, GroupElement, Registry, NO_ELEMENT};

pub use cache::{cache_info, CacheInfo, CACHE_FORMAT_VERSION, CACHE_HEADER};
pub use hecke::{HeckeCombination, Side};

pub(crate) use hecke::HeckeIds;

/// Coefficients of a polynomial in `q`, lowest degree first, without
/// trailing zeros.
pub type QPoly = Vec<i64>;

const ABSENT: u32 = u32::MAX;

/// All `P_{y,w}` for one `w`.
#[derive(Debug, Clone)]
pub struct Column {
    /// `slot[y]` indexes `polys` for `y <= w`, `ABSENT` otherwise.
    slot: Vec<u32>,
    members: Vec<ElemId>,
    polys: Vec<QPoly>,
    /// `(y, mu(y, w))` for `y ≺ w`, sorted by id.
    mu: Vec<(ElemId, u64)>,
}

impl Column {
    pub fn get(&self, y: ElemId) -> Option<&QPoly> {
        match self.slot.get(y as usize) {
            Some(&i) if i != ABSENT => Some(&self.polys[i as usize]),
            _ => None,
        }
    }

    /// Bruhat interval `[e, w]` in id order.
    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn mu_list(&self) -> &[(ElemId, u64)] {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn from_entries(reg: &Registry, w: ElemId, entries: Vec<(ElemId, QPoly)>) -> Column {
        let lw = reg.length(w);
        let mut slot = vec![ABSENT; reg.count_below(lw + 1)];
        let mut members = Vec::with_capacity(entries.len());
        let mut polys = Vec::with_capacity(entries.len());
        let mut mu = Vec::new();
        for (y, p) in entries {
            slot[y as usize] = polys.len() as u32;
            let gap = lw - reg.length(y);
            if gap % 2 == 1 {
                let top = (gap - 1) / 2;
                if let Some(&c) = p.get(top) {
                    if c > 0 {
                        mu.push((y, c as u64));
                    }
                }
            }
            members.push(y);
            polys.push(p);
        }
        Column {
            slot,
            members,
            polys,
            mu,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KlConfig {
    /// Elements longer than this are outside the registry.
    pub max_length: usize,
    /// Cap on the support of any intermediate canonical-basis product.
    pub max_support: usize,
    /// Cap on `l(x) + l(y)` for `C_x C_y`.
    pub max_operand_length: usize,
}

impl Default for KlConfig {
    fn default() -> Self {
        KlConfig {
            max_length: 40,
            max_support: 20_000,
            max_operand_length: 36,
        }
    }
}

pub struct KlEngine {
    reg: Registry,
    config: KlConfig,
    columns: Vec<OnceLock<Column>>,
    products: DashMap<(ElemId, ElemId), std::sync::Arc<HeckeIds>>,
    right_memo: Mutex<HashMap<(ElemId, ElemId), QPoly>>,
}

fn q_shift_add(acc: &mut QPoly, p: &[i64], shift: usize, factor: i64) -> Result<()> {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        let term = c
            .checked_mul(factor)
            .ok_or_else(|| Error::ResourceLimit("KL coefficient overflow".into()))?;
        acc[i + shift] = acc[i + shift]
            .checked_add(term)
            .ok_or_else(|| Error::ResourceLimit("KL coefficient overflow".into()))?;
    }
    Ok(())
}

fn trim(p: &mut QPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub fn qpoly_to_laurent(p: &[i64]) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(p)
}

impl KlEngine {
    pub fn new(config: KlConfig) -> Self {
        let reg = Registry::new(config.max_length);
        let columns = (0..reg.len()).map(|_| OnceLock::new()).collect();
        KlEngine {
            reg,
            config,
            columns,
            products: DashMap::new(),
            right_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_max_length(max_length: usize) -> Self {
        Self::new(KlConfig {
            max_length,
            ..KlConfig::default()
        })
    }

    pub fn registry(&self) -> &Registry {
        &self.reg
    }

    pub fn config(&self) -> &KlConfig {
        &self.config
    }

    pub fn id(&self, e: &GroupElement) -> Result<ElemId> {
        self.reg.require(e)
    }

    pub fn element(&self, id: ElemId) -> &GroupElement {
        self.reg.element(id)
    }

    /// Number of columns computed or loaded so far.
    pub fn columns_ready(&self) -> usize {
        self.columns.iter().filter(|c| c.get().is_some()).count()
    }

    pub fn column(&self, w: ElemId) -> Result<&Column> {
        if let Some(c) = self.columns[w as usize].get() {
            return Ok(c);
        }
        // Build shorter prerequisites bottom-up so recursion depth stays at
        // one level.
        let mut pending = vec![w];
        let mut order = Vec::new();
        while let Some(x) = pending.pop() {
            if self.columns[x as usize].get().is_some() || order.contains(&x) {
                continue;
            }
            order.push(x);
            if let Some(s) = self.reg.first_letter(x) {
                let v = self.reg.lmul(s, x);
                pending.push(v);
            }
        }
        order.sort_unstable();
        for x in order {
            self.compute_column(x)?;
        }
        Ok(self.columns[w as usize].get().expect("column was just computed"))
    }

    fn compute_column(&self, w: ElemId) -> Result<()> {
        if self.columns[w as usize].get().is_some() {
            return Ok(());
        }
        let reg = &self.reg;
        let Some(s) = reg.first_letter(w) else {
            let col = Column::from_entries(reg, w, vec![(w, vec![1])]);
            let _ = self.columns[w as usize].set(col);
            return Ok(());
        };
        let v = reg.lmul(s, w);
        let col_v = self.column(v)?;
        let lw = reg.length(w);

        let corrections: Vec<(ElemId, u64, &Column)> = col_v
            .mu
            .iter()
            .filter(|(z, _)| reg.is_left_descent(s, *z))
            .map(|&(z, m)| Ok((z, m, self.column(z)?)))
            .collect::<Result<_>>()?;

        let mut in_interval = vec![false; reg.count_below(lw + 1)];
        for &y in &col_v.members {
            in_interval[y as usize] = true;
            let sy = reg.lmul(s, y);
            in_interval[sy as usize] = true;
        }

        let mut entries = Vec::new();
        for (y, _) in in_interval.iter().enumerate().filter(|(_, &b)| b) {
            let y = y as ElemId;
            let sy = reg.lmul(s, y);
            let c = usize::from(reg.is_left_descent(s, y));
            let mut p: QPoly = Vec::new();
            if let Some(p1) = col_v.get(sy) {
                q_shift_add(&mut p, p1, 1 - c, 1)?;
            }
            if let Some(p2) = col_v.get(y) {
                q_shift_add(&mut p, p2, c, 1)?;
            }
            for &(z, m, col_z) in &corrections {
                if let Some(pyz) = col_z.get(y) {
                    let shift = (lw - reg.length(z)) / 2;
                    q_shift_add(&mut p, pyz, shift, -(m as i64))?;
                }
            }
            trim(&mut p);
            self.check_kl(y, w, &p)?;
            entries.push((y, p));
        }
        let col = Column::from_entries(reg, w, entries);
        let _ = self.columns[w as usize].set(col);
        Ok(())
    }

    /// Properties every computed `P_{y,w}` with `y <= w` must satisfy. A
    /// failure means the recursion itself is wrong.
    fn check_kl(&self, y: ElemId, w: ElemId, p: &[i64]) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::Invariant(format!(
                "P({}, {}) = {:?}: {what}",
                self.reg.element(y),
                self.reg.element(w),
                p
            )))
        };
        if p.first() != Some(&1) {
            return fail("constant term is not 1");
        }
        if p.iter().any(|&c| c < 0) {
            return fail("negative coefficient");
        }
        let gap = self.reg.length(w) - self.reg.length(y);
        let deg = p.len() - 1;
        if y == w {
            if deg != 0 {
                return fail("P(w, w) is not 1");
            }
        } else if 2 * deg + 1 > gap {
            return fail("degree bound violated");
        }
        Ok(())
    }

    pub(crate) fn kl_ids(&self, u: ElemId, w: ElemId) -> Result<Option<&QPoly>> {
        Ok(self.column(w)?.get(u))
    }

    /// `P_{u,w}` as a Laurent polynomial with even exponents.
    pub fn kl_poly(&self, u: &GroupElement, w: &GroupElement) -> Result<LaurentPoly> {
        if u.length() > w.length() {
            return Ok(LaurentPoly::zero());
        }
        let (u, w) = (self.id(u)?, self.id(w)?);
        Ok(self
            .kl_ids(u, w)?
            .map(|p| qpoly_to_laurent(p))
            .unwrap_or_default())
    }

    /// Leading coefficient `mu(u, w)` with the descent shortcuts.
    pub fn mu(&self, u: &GroupElement, w: &GroupElement) -> Result<u64> {
        if u.length() >= w.length() || (w.length() - u.length()).is_multiple_of(2) {
            return Ok(0);
        }
        let (u, w) = (self.id(u)?, self.id(w)?);
        self.mu_ids(u, w)
    }

    pub(crate) fn mu_ids(&self, u: ElemId, w: ElemId) -> Result<u64> {
        let reg = &self.reg;
        let (lu, lw) = (reg.length(u), reg.length(w));
        if lu >= lw || (lw - lu) % 2 == 0 || !reg.bruhat_leq(u, w) {
            return Ok(0);
        }
        for g in Generator::ALL {
            // su > u and sw < w: u ≺ w iff w = su, with mu = 1.
            if reg.is_left_descent(g, w) && !reg.is_left_descent(g, u) {
                return Ok(u64::from(reg.lmul(g, u) == w));
            }
            if reg.is_right_descent(w, g) && !reg.is_right_descent(u, g) {
                return Ok(u64::from(reg.rmul(u, g) == w));
            }
        }
        self.mu_full_ids(u, w)
    }

    /// Leading coefficient read straight off the column, no shortcuts.
    pub fn mu_full(&self, u: &GroupElement, w: &GroupElement) -> Result<u64> {
        if u.length() >= w.length() {
            return Ok(0);
        }
        let (u, w) = (self.id(u)?, self.id(w)?);
        self.mu_full_ids(u, w)
    }

    fn mu_full_ids(&self, u: ElemId, w: ElemId) -> Result<u64> {
        let col = self.column(w)?;
        Ok(col
            .mu
            .binary_search_by_key(&u, |&(y, _)| y)
            .map(|i| col.mu[i].1)
            .unwrap_or(0))
    }

    /// The symmetrized leading coefficient: `mu(y, w)` if `y < w`,
    /// `mu(w, y)` if `w < y`, zero otherwise.
    pub fn mu_symmetric(&self, y: &GroupElement, w: &GroupElement) -> Result<u64> {
        if y.length() < w.length() {
            self.mu(y, w)
        } else {
            self.mu(w, y)
        }
    }

    /// `y ≺ w` with their leading coefficients.
    pub fn mu_list(&self, w: &GroupElement) -> Result<Vec<(GroupElement, u64)>> {
        let col = self.column(self.id(w)?)?;
        Ok(col
            .mu
            .iter()
            .map(|&(y, m)| (self.reg.element(y).clone(), m))
            .collect())
    }

    /// `P_{u,w}` by the mirror-image recursion, peeling the last letter of
    /// `w` and using right descents. Independent of the column tables; used
    /// to cross-check them.
    pub fn kl_poly_right(&self, u: &GroupElement, w: &GroupElement) -> Result<LaurentPoly> {
        let (u, w) = (self.id(u)?, self.id(w)?);
        Ok(qpoly_to_laurent(&self.right_ids(u, w)?))
    }

    fn right_ids(&self, u: ElemId, w: ElemId) -> Result<QPoly> {
        let reg = &self.reg;
        let (lu, lw) = (reg.length(u), reg.length(w));
        if lu > lw || !reg.bruhat_leq(u, w) {
            return Ok(Vec::new());
        }
        if lu == lw {
            return Ok(vec![1]);
        }
        if let Some(p) = self.right_memo.lock().unwrap().get(&(u, w)) {
            return Ok(p.clone());
        }
        let s = reg.last_letter(w).expect("w is not the identity");
        let v = reg.rmul(w, s);
        let c = usize::from(reg.is_right_descent(u, s));
        let us = reg.rmul(u, s);
        let mut p = Vec::new();
        if us != NO_ELEMENT {
            q_shift_add(&mut p, &self.right_ids(us, v)?, 1 - c, 1)?;
        }
        q_shift_add(&mut p, &self.right_ids(u, v)?, c, 1)?;
        let lv = reg.length(v);
        // z ≺ v with zs < z and u <= z.
        for z in 0..reg.count_below(lv) as ElemId {
            let lz = reg.length(z);
            if (lv - lz).is_multiple_of(2) || lz < lu || !reg.is_right_descent(z, s) {
                continue;
            }
            if !reg.bruhat_leq(u, z) || !reg.bruhat_leq(z, v) {
                continue;
            }
            let pzv = self.right_ids(z, v)?;
            let m = pzv.get((lv - lz - 1) / 2).copied().unwrap_or(0);
            if m != 0 {
                let puz = self.right_ids(u, z)?;
                q_shift_add(&mut p, &puz, (lw - lz) / 2, -m)?;
            }
        }
        trim(&mut p);
        self.right_memo.lock().unwrap().insert((u, w), p.clone());
        Ok(p)
    }

    /// Structure constant `h_{x,y,z}`.
    pub fn h_coeff(&self, x: &GroupElement, y: &GroupElement, z: &GroupElement) -> Result<LaurentPoly> {
        Ok(self.c_product(x, y)?.coefficient(z))
    }

    /// Coefficients of `v^{a}` and `v^{a-1}` in `h_{x,y,z}`.
    pub fn gamma_delta(
        &self,
        x: &GroupElement,
        y: &GroupElement,
        z: &GroupElement,
        a_z: i64,
    ) -> Result<(BigInt, BigInt)> {
        let h = self.h_coeff(x, y, z)?;
        gamma_delta_of(&h, a_z)
    }
}

pub fn gamma_delta_of(h: &LaurentPoly, a_z: i64) -> Result<(BigInt, BigInt)> {
    if let Some(d) = h.degree() {
        if d > a_z {
            return Err(Error::DegreeViolation { degree: d, a: a_z });
        }
    }
    Ok((h.coeff(a_z), h.coeff(a_z - 1)))
}
