//! The coefficient ring: sparse integer polynomials in the edge marker `w`
//! and the feature marker `u`.
//!
//! Every series coefficient in this crate lives in `Z[w, u]`. A term map
//! keyed by the exponent pair `(e_w, e_u)` keeps the representation sparse;
//! zero coefficients are never stored, so equality is term-map equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

/// Sparse polynomial in `w` and `u` over arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct CoeffPoly {
    // (e_w, e_u) -> coefficient, lexicographic order gives canonical rendering
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::from_int(1)
    }

    pub fn from_int(value: i64) -> Self {
        CoeffPoly::from_big(BigInt::from(value))
    }

    pub fn from_big(value: BigInt) -> Self {
        let mut p = CoeffPoly::default();
        if !value.is_zero() {
            p.terms.insert((0, 0), value);
        }
        p
    }

    /// The monomial `w`.
    pub fn var_w() -> Self {
        CoeffPoly::term(BigInt::one(), 1, 0)
    }

    /// The monomial `u`.
    pub fn var_u() -> Self {
        CoeffPoly::term(BigInt::one(), 0, 1)
    }

    /// A single term `coeff * w^e_w * u^e_u`.
    pub fn term(coeff: BigInt, e_w: u32, e_u: u32) -> Self {
        let mut p = CoeffPoly::default();
        if !coeff.is_zero() {
            p.terms.insert((e_w, e_u), coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|&k| k == (0, 0))
    }

    /// The constant value, if this polynomial is a constant.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    pub fn has_u(&self) -> bool {
        self.terms.keys().any(|&(_, e_u)| e_u > 0)
    }

    pub fn deg_w(&self) -> u32 {
        self.terms.keys().map(|&(e_w, _)| e_w).max().unwrap_or(0)
    }

    /// Terms in canonical `(e_w, e_u)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, key: (u32, u32), value: &BigInt) {
        if value.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += value;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        for (&key, value) in &other.terms {
            out.add_term(key, value);
        }
        out
    }

    pub fn neg(&self) -> CoeffPoly {
        let mut out = CoeffPoly::default();
        for (&key, value) in &self.terms {
            out.terms.insert(key, -value);
        }
        out
    }

    pub fn sub(&self, other: &CoeffPoly) -> CoeffPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::default();
        for (&(aw, au), ac) in &self.terms {
            for (&(bw, bu), bc) in &other.terms {
                out.add_term((aw + bw, au + bu), &(ac * bc));
            }
        }
        out
    }

    pub fn mul_big(&self, scalar: &BigInt) -> CoeffPoly {
        if scalar.is_zero() {
            return CoeffPoly::zero();
        }
        let mut out = CoeffPoly::default();
        for (&key, value) in &self.terms {
            out.terms.insert(key, value * scalar);
        }
        out
    }

    pub fn mul_int(&self, scalar: i64) -> CoeffPoly {
        self.mul_big(&BigInt::from(scalar))
    }

    /// Substitute `u -> u + delta`, fully expanded.
    pub fn subst_u(&self, delta: i64) -> CoeffPoly {
        if delta == 0 {
            return self.clone();
        }
        let delta = BigInt::from(delta);
        let mut out = CoeffPoly::default();
        for (&(e_w, e_u), coeff) in &self.terms {
            // (u + delta)^e_u = sum_j C(e_u, j) delta^(e_u - j) u^j
            let mut binom = BigInt::one();
            let mut delta_pow = vec![BigInt::one()];
            for _ in 0..e_u {
                delta_pow.push(delta_pow.last().unwrap() * &delta);
            }
            for j in 0..=e_u {
                let contrib = coeff * &binom * &delta_pow[(e_u - j) as usize];
                out.add_term((e_w, j), &contrib);
                if j < e_u {
                    binom = binom * (e_u - j) / (j + 1);
                }
            }
        }
        out
    }

    /// Exact evaluation at integer `w` and `u`.
    pub fn eval(&self, w_value: &BigInt, u_value: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(e_w, e_u), coeff) in &self.terms {
            total += coeff * big_pow(w_value, e_w) * big_pow(u_value, e_u);
        }
        total
    }

    /// Partial evaluation at integer `u`, keeping `w` symbolic.
    pub fn eval_u(&self, u_value: &BigInt) -> CoeffPoly {
        let mut out = CoeffPoly::default();
        for (&(e_w, e_u), coeff) in &self.terms {
            out.add_term((e_w, 0), &(coeff * big_pow(u_value, e_u)));
        }
        out
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::add(self, rhs)
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::sub(self, rhs)
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::mul(self, rhs)
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly::neg(self)
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(e_w, e_u), coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            let abs = coeff.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (e_w == 0 && e_u == 0) {
                parts.push(abs.to_string());
            }
            if e_w == 1 {
                parts.push("w".to_string());
            } else if e_w > 1 {
                parts.push(format!("w^{e_w}"));
            }
            if e_u == 1 {
                parts.push("u".to_string());
            } else if e_u > 1 {
                parts.push(format!("u^{e_u}"));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

pub fn big_pow(base: &BigInt, exp: u32) -> BigInt {
    num_traits::pow::pow(base.clone(), exp as usize)
}

static ONE_PLUS_W_CACHE: Lazy<Mutex<HashMap<u32, CoeffPoly>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The expanded polynomial `(1+w)^k`, cached per `k`.
pub fn one_plus_w_pow(k: u32) -> CoeffPoly {
    if let Some(hit) = ONE_PLUS_W_CACHE.lock().unwrap().get(&k) {
        return hit.clone();
    }
    let mut p = CoeffPoly::default();
    let mut binom = BigInt::one();
    for j in 0..=k {
        p.terms.insert((j, 0), binom.clone());
        if j < k {
            binom = binom * (k - j) / (j + 1);
        }
    }
    ONE_PLUS_W_CACHE.lock().unwrap().insert(k, p.clone());
    p
}

/// Coefficient interpretation: fully symbolic, or with `w` and `u` fixed
/// to integers (the fast path for large-order counting).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffMode {
    Polynomial,
    Numeric { w: BigInt, u: BigInt },
}

impl CoeffMode {
    pub fn numeric(w: i64, u: i64) -> Self {
        CoeffMode::Numeric {
            w: BigInt::from(w),
            u: BigInt::from(u),
        }
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, CoeffMode::Numeric { .. })
    }

    /// `(1+w)^k` in this mode: a polynomial, or the integer `(1+w_value)^k`.
    pub fn one_plus_w_pow(&self, k: u32) -> CoeffPoly {
        match self {
            CoeffMode::Polynomial => one_plus_w_pow(k),
            CoeffMode::Numeric { w, .. } => {
                CoeffPoly::from_big(big_pow(&(w + BigInt::one()), k))
            }
        }
    }

    /// The linear marker polynomial `k*u + c` in this mode.
    pub fn u_linear(&self, k: i64, c: i64) -> CoeffPoly {
        match self {
            CoeffMode::Polynomial => {
                CoeffPoly::var_u().mul_int(k).add(&CoeffPoly::from_int(c))
            }
            CoeffMode::Numeric { u, .. } => {
                CoeffPoly::from_big(u * BigInt::from(k) + BigInt::from(c))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, u32, u32)]) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for &(c, e_w, e_u) in pairs {
            out = out.add(&CoeffPoly::term(BigInt::from(c), e_w, e_u));
        }
        out
    }

    #[test]
    fn add_examples() {
        let one_plus_w = p(&[(1, 0, 0), (1, 1, 0)]);
        assert_eq!(one_plus_w.add(&one_plus_w), p(&[(2, 0, 0), (2, 1, 0)]));
        assert_eq!(CoeffPoly::var_w().add(&CoeffPoly::var_w().neg()), CoeffPoly::zero());
        let a = p(&[(1, 0, 2), (2, 1, 1)]);
        assert_eq!(a.add(&CoeffPoly::one()), p(&[(1, 0, 0), (2, 1, 1), (1, 0, 2)]));
    }

    #[test]
    fn mul_examples() {
        let one_plus_w = p(&[(1, 0, 0), (1, 1, 0)]);
        assert_eq!(
            one_plus_w.mul(&one_plus_w),
            p(&[(1, 0, 0), (2, 1, 0), (1, 2, 0)])
        );
        let u_minus_1 = p(&[(-1, 0, 0), (1, 0, 1)]);
        let u_plus_1 = p(&[(1, 0, 0), (1, 0, 1)]);
        assert_eq!(u_minus_1.mul(&u_plus_1), p(&[(-1, 0, 0), (1, 0, 2)]));
        assert_eq!(CoeffPoly::zero().mul(&one_plus_w), CoeffPoly::zero());
    }

    #[test]
    fn one_plus_w_pow_examples() {
        assert_eq!(one_plus_w_pow(0), CoeffPoly::one());
        assert_eq!(one_plus_w_pow(2), p(&[(1, 0, 0), (2, 1, 0), (1, 2, 0)]));
        // k=6 against a repeated-multiplication oracle
        let base = p(&[(1, 0, 0), (1, 1, 0)]);
        let mut expected = CoeffPoly::one();
        for _ in 0..6 {
            expected = expected.mul(&base);
        }
        assert_eq!(one_plus_w_pow(6), expected);
        assert_eq!(
            one_plus_w_pow(6),
            p(&[(1, 0, 0), (6, 1, 0), (15, 2, 0), (20, 3, 0), (15, 4, 0), (6, 5, 0), (1, 6, 0)])
        );
    }

    #[test]
    fn subst_u_examples() {
        let u2 = p(&[(1, 0, 2)]);
        assert_eq!(u2.subst_u(-1), p(&[(1, 0, 0), (-2, 0, 1), (1, 0, 2)]));
        // (u+1)^2 + 2w(u+1) expanded by hand
        let a = p(&[(1, 0, 2), (2, 1, 1)]);
        assert_eq!(
            a.subst_u(1),
            p(&[(1, 0, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (2, 1, 1)])
        );
        assert_eq!(CoeffPoly::var_w().subst_u(-1), CoeffPoly::var_w());
    }

    #[test]
    fn eval_examples() {
        let a = p(&[(1, 0, 0), (2, 1, 0)]);
        assert_eq!(a.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(3));
        let scc3 = p(&[(2, 3, 0), (9, 4, 0), (6, 5, 0), (1, 6, 0)]);
        assert_eq!(scc3.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(18));
        assert_eq!(CoeffPoly::zero().eval(&BigInt::from(7), &BigInt::from(-3)), BigInt::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(one_plus_w_pow(2).to_string(), "1 + 2*w + w^2");
        assert_eq!(p(&[(1, 0, 2), (2, 1, 1)]).to_string(), "u^2 + 2*w*u");
        assert_eq!(p(&[(-1, 0, 0), (1, 2, 0)]).to_string(), "-1 + w^2");
        assert_eq!(CoeffPoly::zero().to_string(), "0");
    }

    #[test]
    fn numeric_mode_helpers() {
        let mode = CoeffMode::numeric(1, 1);
        assert_eq!(mode.one_plus_w_pow(6), CoeffPoly::from_int(64));
        assert_eq!(mode.u_linear(1, -1), CoeffPoly::zero());
        let poly = CoeffMode::Polynomial;
        assert_eq!(poly.u_linear(-1, 1), p(&[(1, 0, 0), (-1, 0, 1)]));
    }
}
