//! Finite-dimensional representations of the simple Lie algebra of type G2.
//!
//! Weights are written in the basis of fundamental weights `(n_α, n_β)`,
//! where `x_α = (1,0)` is the short fundamental weight (the 7-dimensional
//! module) and `x_β = (0,1)` the long one (the adjoint module).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Rational64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    pub n_alpha: i64,
    pub n_beta: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight::new(0, 0);
    pub const X_ALPHA: Weight = Weight::new(1, 0);
    pub const X_BETA: Weight = Weight::new(0, 1);
    pub const RHO: Weight = Weight::new(1, 1);

    pub const fn new(n_alpha: i64, n_beta: i64) -> Self {
        Weight { n_alpha, n_beta }
    }

    pub fn is_dominant(self) -> bool {
        self.n_alpha >= 0 && self.n_beta >= 0
    }

    /// Coefficients `(c_α, c_β)` of the weight in the basis of simple roots.
    pub fn root_coordinates(self) -> (i64, i64) {
        (
            2 * self.n_alpha + 3 * self.n_beta,
            self.n_alpha + 2 * self.n_beta,
        )
    }

    /// `<λ, ρ∨>`.
    pub fn height(self) -> i64 {
        let (a, b) = self.root_coordinates();
        a + b
    }

    /// The dominant weight in the Weyl orbit.
    pub fn dominant_representative(self) -> Weight {
        let mut w = self;
        loop {
            if w.n_alpha < 0 {
                w = reflect_alpha(w);
            } else if w.n_beta < 0 {
                w = reflect_beta(w);
            } else {
                return w;
            }
        }
    }

    /// Parses `(a,b)` or `a,b`.
    pub fn parse(text: &str) -> Result<Weight> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("`{text}` is not a weight of the form (a,b)"));
        if parts.len() != 2 {
            return Err(bad());
        }
        let a = parts[0].parse().map_err(|_| bad())?;
        let b = parts[1].parse().map_err(|_| bad())?;
        Ok(Weight::new(a, b))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n_alpha, self.n_beta)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.n_alpha + o.n_alpha, self.n_beta + o.n_beta)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.n_alpha - o.n_alpha, self.n_beta - o.n_beta)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.n_alpha, -self.n_beta)
    }
}

impl std::ops::Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::new(self * w.n_alpha, self * w.n_beta)
    }
}

fn reflect_alpha(w: Weight) -> Weight {
    Weight::new(-w.n_alpha, w.n_alpha + w.n_beta)
}

fn reflect_beta(w: Weight) -> Weight {
    Weight::new(w.n_alpha + 3 * w.n_beta, -w.n_beta)
}

/// An element of the finite Weyl group acting on weights: `(n_α, n_β)`
/// maps to `(m[0][0] n_α + m[0][1] n_β, m[1][0] n_α + m[1][1] n_β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeylMap {
    pub matrix: [[i64; 2]; 2],
    pub sign: i64,
}

impl WeylMap {
    pub fn apply(&self, w: Weight) -> Weight {
        let m = &self.matrix;
        Weight::new(
            m[0][0] * w.n_alpha + m[0][1] * w.n_beta,
            m[1][0] * w.n_alpha + m[1][1] * w.n_beta,
        )
    }
}

pub type WeightMults = BTreeMap<Weight, u64>;

#[derive(Clone, Debug)]
pub struct RootSystemG2 {
    pub positive_roots: [Weight; 6],
    pub rho: Weight,
    pub weyl_group: Vec<WeylMap>,
}

impl RootSystemG2 {
    pub const ALPHA: Weight = Weight::new(2, -1);
    pub const BETA: Weight = Weight::new(-3, 2);

    pub fn new() -> Self {
        let positive_roots = [
            Self::ALPHA,
            Self::BETA,
            Self::ALPHA + Self::BETA,
            2 * Self::ALPHA + Self::BETA,
            3 * Self::ALPHA + Self::BETA,
            3 * Self::ALPHA + 2 * Self::BETA,
        ];
        let id = WeylMap {
            matrix: [[1, 0], [0, 1]],
            sign: 1,
        };
        let mut group = vec![id];
        let mut frontier = vec![id];
        while let Some(g) = frontier.pop() {
            for refl in [reflect_alpha, reflect_beta] {
                let c0 = refl(g.apply(Weight::new(1, 0)));
                let c1 = refl(g.apply(Weight::new(0, 1)));
                let h = WeylMap {
                    matrix: [[c0.n_alpha, c1.n_alpha], [c0.n_beta, c1.n_beta]],
                    sign: -g.sign,
                };
                if !group.iter().any(|k| k.matrix == h.matrix) {
                    group.push(h);
                    frontier.push(h);
                }
            }
        }
        RootSystemG2 {
            positive_roots,
            rho: Weight::RHO,
            weyl_group: group,
        }
    }

    /// The invariant form with `(β,β) = 2`, `(α,α) = 2/3`, `(α,β) = -1`.
    pub fn pairing(&self, x: Weight, y: Weight) -> Rational64 {
        let three_g = x.n_alpha * (2 * y.n_alpha + 3 * y.n_beta)
            + x.n_beta * (3 * y.n_alpha + 6 * y.n_beta);
        Rational64::new(three_g, 3)
    }

    /// `<x, γ∨> = 2(x,γ)/(γ,γ)`.
    pub fn coroot_pairing(&self, x: Weight, gamma: Weight) -> Rational64 {
        Rational64::from_integer(2) * self.pairing(x, gamma) / self.pairing(gamma, gamma)
    }

    pub fn longest_element(&self) -> WeylMap {
        *self
            .weyl_group
            .iter()
            .find(|g| g.matrix == [[-1, 0], [0, -1]])
            .expect("w0 acts as -1")
    }
}

impl Default for RootSystemG2 {
    fn default() -> Self {
        Self::new()
    }
}

fn roots() -> &'static RootSystemG2 {
    static ROOTS: OnceLock<RootSystemG2> = OnceLock::new();
    ROOTS.get_or_init(RootSystemG2::new)
}

fn require_dominant(l: Weight) -> Result<()> {
    if l.is_dominant() {
        Ok(())
    } else {
        Err(Error::Parse(format!("{l} is not dominant")))
    }
}

pub fn weyl_dim(lambda: Weight) -> Result<u64> {
    require_dominant(lambda)?;
    let rs = roots();
    let mut num = Rational64::from_integer(1);
    for &g in &rs.positive_roots {
        num *= rs.pairing(lambda + rs.rho, g) / rs.pairing(rs.rho, g);
    }
    if !num.is_integer() {
        return Err(Error::Invariant(format!("dim V{lambda} = {num} is not an integer")));
    }
    Ok(*num.numer() as u64)
}

/// `-w0 λ`, which is `λ` itself in type G2.
pub fn dual(lambda: Weight) -> Weight {
    -roots().longest_element().apply(lambda)
}

fn freudenthal_memo() -> &'static Mutex<HashMap<Weight, Arc<WeightMults>>> {
    static MEMO: OnceLock<Mutex<HashMap<Weight, Arc<WeightMults>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Weights of `V(λ)` with multiplicities, by the Freudenthal formula.
pub fn freudenthal_mults(lambda: Weight) -> Result<Arc<WeightMults>> {
    require_dominant(lambda)?;
    if let Some(hit) = freudenthal_memo().lock().unwrap().get(&lambda) {
        return Ok(Arc::clone(hit));
    }
    let computed = Arc::new(compute_freudenthal(lambda)?);
    freudenthal_memo()
        .lock()
        .unwrap()
        .insert(lambda, Arc::clone(&computed));
    Ok(computed)
}

fn compute_freudenthal(lambda: Weight) -> Result<WeightMults> {
    let rs = roots();
    let (ca, cb) = lambda.root_coordinates();
    // Dominant weights below λ, highest first.
    let mut dominant: Vec<Weight> = Vec::new();
    for a in 0..=ca {
        for b in 0..=cb {
            let mu = lambda - a * RootSystemG2::ALPHA - b * RootSystemG2::BETA;
            if mu.is_dominant() {
                dominant.push(mu);
            }
        }
    }
    dominant.sort_by_key(|mu| (-mu.height(), *mu));

    let lr = lambda + rs.rho;
    let norm_top = rs.pairing(lr, lr);
    let mut dom_mult: HashMap<Weight, u64> = HashMap::new();
    let lookup = |dom_mult: &HashMap<Weight, u64>, w: Weight| -> u64 {
        dom_mult.get(&w.dominant_representative()).copied().unwrap_or(0)
    };
    for &mu in &dominant {
        if mu == lambda {
            dom_mult.insert(mu, 1);
            continue;
        }
        let mut sum = Rational64::from_integer(0);
        for &g in &rs.positive_roots {
            let mut k = 1;
            loop {
                let up = mu + k * g;
                if (lambda - up).height() < 0 {
                    break;
                }
                let m = lookup(&dom_mult, up);
                if m > 0 {
                    sum += rs.pairing(up, g) * Rational64::from_integer(m as i64);
                }
                k += 1;
            }
        }
        let mr = mu + rs.rho;
        let denom = norm_top - rs.pairing(mr, mr);
        let value = Rational64::from_integer(2) * sum / denom;
        if !value.is_integer() || *value.numer() < 0 {
            return Err(Error::Invariant(format!(
                "Freudenthal multiplicity of {mu} in V{lambda} is {value}"
            )));
        }
        let value = *value.numer() as u64;
        if value > 0 {
            dom_mult.insert(mu, value);
        }
    }
    let mut out = WeightMults::new();
    for (&mu, &m) in &dom_mult {
        for g in &rs.weyl_group {
            out.insert(g.apply(mu), m);
        }
    }
    Ok(out)
}

/// Multiplicity of the weight `gamma` in `V(λ)`.
pub fn weight_mult(lambda: Weight, gamma: Weight) -> Result<u64> {
    Ok(freudenthal_mults(lambda)?.get(&gamma).copied().unwrap_or(0))
}

/// Multiplicity of `V(ν)` in `V(λ) ⊗ V(λ')` by the Klimyk formula.
pub fn tensor_mult(lambda: Weight, lambda2: Weight, nu: Weight) -> Result<u64> {
    require_dominant(lambda)?;
    require_dominant(lambda2)?;
    require_dominant(nu)?;
    let rs = roots();
    let mults = freudenthal_mults(lambda)?;
    let target = lambda2 + rs.rho;
    let mut total: i64 = 0;
    for g in &rs.weyl_group {
        let gamma = g.apply(nu + rs.rho) - target;
        if let Some(&m) = mults.get(&gamma) {
            total += g.sign * m as i64;
        }
    }
    if total < 0 {
        return Err(Error::Invariant(format!(
            "Klimyk sum for m({lambda},{lambda2},{nu}) is negative"
        )));
    }
    Ok(total as u64)
}

/// Full decomposition of `V(λ) ⊗ V(λ')` by the Klimyk formula.
pub fn tensor_decomposition(lambda: Weight, lambda2: Weight) -> Result<BTreeMap<Weight, u64>> {
    let mut out = BTreeMap::new();
    let top = lambda + lambda2;
    let (ca, cb) = top.root_coordinates();
    for a in 0..=ca {
        for b in 0..=cb {
            let nu = top - a * RootSystemG2::ALPHA - b * RootSystemG2::BETA;
            if nu.is_dominant() {
                let m = tensor_mult(lambda, lambda2, nu)?;
                if m > 0 {
                    out.insert(nu, m);
                }
            }
        }
    }
    Ok(out)
}

/// Default cap on `dim V(λ) · dim V(λ')` for the character oracle.
pub const DEFAULT_ORACLE_DIM_CAP: u64 = 1 << 40;

/// Decomposition of `V(λ) ⊗ V(λ')` by multiplying characters and peeling off
/// highest weights.
pub fn char_product_oracle(lambda: Weight, lambda2: Weight, dim_cap: u64) -> Result<BTreeMap<Weight, u64>> {
    let d = weyl_dim(lambda)?.saturating_mul(weyl_dim(lambda2)?);
    if d > dim_cap {
        return Err(Error::ResourceLimit(format!(
            "character product of dimension {d} exceeds cap {dim_cap}"
        )));
    }
    let a = freudenthal_mults(lambda)?;
    let b = freudenthal_mults(lambda2)?;
    let mut ch: HashMap<Weight, i64> = HashMap::new();
    for (&x, &m) in a.iter() {
        for (&y, &n) in b.iter() {
            *ch.entry(x + y).or_default() += (m * n) as i64;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        let top = ch
            .iter()
            .filter(|(w, &c)| c != 0 && w.is_dominant())
            .map(|(w, _)| *w)
            .max_by_key(|w| (w.height(), *w));
        let Some(top) = top else { break };
        let c = ch[&top];
        if c < 0 {
            return Err(Error::Invariant(format!(
                "negative coefficient {c} at {top} while decomposing {lambda} x {lambda2}"
            )));
        }
        for (&w, &m) in freudenthal_mults(top)?.iter() {
            let e = ch.entry(w).or_default();
            *e -= c * m as i64;
            if *e == 0 {
                ch.remove(&w);
            }
        }
        out.insert(top, c as u64);
    }
    if !ch.is_empty() {
        return Err(Error::Invariant(format!(
            "character of {lambda} x {lambda2} did not reduce to zero"
        )));
    }
    Ok(out)
}

/// The bound `K_{λ, ν-λ'}` on `m_{λ,λ',ν}`.
pub fn tensor_mult_bound(lambda: Weight, lambda2: Weight, nu: Weight) -> Result<u64> {
    weight_mult(lambda, nu - lambda2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    #[test]
    fn root_system_shape() {
        let rs = RootSystemG2::new();
        assert_eq!(rs.weyl_group.len(), 12);
        assert_eq!(rs.weyl_group.iter().filter(|g| g.sign == 1).count(), 6);
        assert_eq!(rs.pairing(RootSystemG2::ALPHA, RootSystemG2::ALPHA), Rational64::new(2, 3));
        assert_eq!(rs.pairing(RootSystemG2::BETA, RootSystemG2::BETA), Rational64::from_integer(2));
        assert_eq!(rs.pairing(RootSystemG2::ALPHA, RootSystemG2::BETA), Rational64::from_integer(-1));
        assert_eq!(rs.coroot_pairing(w(1, 0), RootSystemG2::ALPHA), Rational64::from_integer(1));
        assert_eq!(rs.coroot_pairing(w(0, 1), RootSystemG2::BETA), Rational64::from_integer(1));
        assert_eq!(rs.longest_element().sign, 1);
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dim(w(0, 0)).unwrap(), 1);
        assert_eq!(weyl_dim(w(1, 0)).unwrap(), 7);
        assert_eq!(weyl_dim(w(0, 1)).unwrap(), 14);
        assert_eq!(weyl_dim(w(2, 0)).unwrap(), 27);
        assert_eq!(weyl_dim(w(1, 1)).unwrap(), 64);
        assert!(weyl_dim(w(-1, 0)).is_err());
    }

    #[test]
    fn small_modules() {
        let m = freudenthal_mults(w(0, 0)).unwrap();
        assert_eq!(m.len(), 1);
        let m = freudenthal_mults(w(1, 0)).unwrap();
        assert_eq!(m.len(), 7);
        assert!(m.values().all(|&k| k == 1));
        let m = freudenthal_mults(w(0, 1)).unwrap();
        assert_eq!(m.len(), 13);
        assert_eq!(m[&w(0, 0)], 2);
        assert_eq!(m.values().sum::<u64>(), 14);
    }

    #[test]
    fn sums_match_dimension() {
        for a in 0..4 {
            for b in 0..4 {
                let m = freudenthal_mults(w(a, b)).unwrap();
                assert_eq!(m.values().sum::<u64>(), weyl_dim(w(a, b)).unwrap());
            }
        }
    }

    #[test]
    fn seven_squared() {
        let d = tensor_decomposition(w(1, 0), w(1, 0)).unwrap();
        let expected: BTreeMap<_, _> =
            [(w(2, 0), 1), (w(0, 1), 1), (w(1, 0), 1), (w(0, 0), 1)].into_iter().collect();
        assert_eq!(d, expected);
        assert_eq!(char_product_oracle(w(1, 0), w(1, 0), DEFAULT_ORACLE_DIM_CAP).unwrap(), expected);
    }

    #[test]
    fn trivial_factor_and_duality() {
        for l in [w(0, 0), w(1, 0), w(2, 1)] {
            assert_eq!(tensor_mult(l, w(0, 0), l).unwrap(), 1);
            assert_eq!(tensor_mult(l, w(0, 0), w(3, 3)).unwrap(), 0);
            assert_eq!(tensor_mult(l, l, w(0, 0)).unwrap(), 1);
            assert_eq!(dual(l), l);
        }
    }

    #[test]
    fn oracle_cap() {
        assert!(matches!(
            char_product_oracle(w(3, 3), w(3, 3), 100),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn weight_parsing() {
        assert_eq!(Weight::parse("(1,2)").unwrap(), w(1, 2));
        assert_eq!(Weight::parse(" 0 , 3 ").unwrap(), w(0, 3));
        assert!(Weight::parse("(1)").is_err());
        assert_eq!(w(4, 1).to_string(), "(4,1)");
    }
}
