//! Truncated formal power series in `z` over the `w,u` coefficient ring.
//!
//! A series carries a kind tag. For the EGF kind the stored coefficient
//! `c_n` stands for `c_n * z^n / n!`. For the GGF kind it is the numerator
//! of `c_n / (1+w)^C(n,2) * z^n / n!`; the denominator is implicit and
//! never materialized. The product of two GGFs then picks up the arrow
//! weight `(1+w)^{k*l}` in each convolution term, and the exp, log and
//! reciprocal recurrences inherit the same weight. All recurrences stay
//! inside the integer polynomial ring.

use num_bigint::BigInt;

use crate::binomial::{choose2, BinomialTable};
use crate::coeff::{CoeffMode, CoeffPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Egf,
    Ggf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    kind: SeriesKind,
    mode: CoeffMode,
    coeffs: Vec<CoeffPoly>,
}

impl Series {
    pub fn from_coeffs(kind: SeriesKind, mode: CoeffMode, coeffs: Vec<CoeffPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { kind, mode, coeffs }
    }

    pub fn zero(kind: SeriesKind, mode: CoeffMode, order: usize) -> Self {
        Series::from_coeffs(kind, mode, vec![CoeffPoly::zero(); order + 1])
    }

    /// The multiplicative identity: `c_0 = 1`, all other coefficients zero.
    pub fn one(kind: SeriesKind, mode: CoeffMode, order: usize) -> Self {
        let mut s = Series::zero(kind, mode, order);
        s.coeffs[0] = CoeffPoly::one();
        s
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn mode(&self) -> &CoeffMode {
        &self.mode
    }

    /// Truncation order `N` (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &CoeffPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[CoeffPoly] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn check_compatible(&self, other: &Series) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    /// Arrow weight `S(k,l)`: trivial for EGF, `(1+w)^{k*l}` for GGF.
    fn shift(&self, k: usize, l: usize) -> Option<CoeffPoly> {
        match self.kind {
            SeriesKind::Egf => None,
            SeriesKind::Ggf => Some(self.mode.one_plus_w_pow((k * l) as u32)),
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].add(&other.coeffs[n]))
            .collect();
        Ok(Series::from_coeffs(self.kind, self.mode.clone(), coeffs))
    }

    pub fn negate(&self) -> Series {
        let coeffs = self.coeffs.iter().map(|c| c.neg()).collect();
        Series::from_coeffs(self.kind, self.mode.clone(), coeffs)
    }

    /// Kind-aware product: `c_n = sum_k C(n,k) S(k,n-k) a_k b_{n-k}`.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let order = self.order().min(other.order());
        let binom = BinomialTable::new(order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = CoeffPoly::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || other.coeffs[n - k].is_zero() {
                    continue;
                }
                let mut term = self.coeffs[k].mul(&other.coeffs[n - k]);
                if let Some(s) = self.shift(k, n - k) {
                    term = term.mul(&s);
                }
                c = c.add(&term.mul_big(binom.get_ref(n, k)));
            }
            coeffs.push(c);
        }
        Ok(Series::from_coeffs(self.kind, self.mode.clone(), coeffs))
    }

    /// Formal exponential under the kind's convolution.
    ///
    /// `e_0 = 1`, `e_n = sum_{k=1..n} C(n-1,k-1) S(k,n-k) a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let binom = BinomialTable::new(order.max(1));
        let mut out: Vec<CoeffPoly> = vec![CoeffPoly::one()];
        for n in 1..=order {
            let mut c = CoeffPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                let mut term = self.coeffs[k].mul(&out[n - k]);
                if let Some(s) = self.shift(k, n - k) {
                    term = term.mul(&s);
                }
                c = c.add(&term.mul_big(binom.get_ref(n - 1, k - 1)));
            }
            out.push(c);
        }
        Ok(Series::from_coeffs(self.kind, self.mode.clone(), out))
    }

    /// Formal logarithm, inverse of [`Series::exp`].
    ///
    /// `l_n = a_n - sum_{k=1..n-1} C(n-1,k-1) S(k,n-k) l_k a_{n-k}`.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let order = self.order();
        let binom = BinomialTable::new(order.max(1));
        let mut out: Vec<CoeffPoly> = vec![CoeffPoly::zero()];
        for n in 1..=order {
            let mut c = self.coeffs[n].clone();
            for k in 1..n {
                if out[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                let mut term = out[k].mul(&self.coeffs[n - k]);
                if let Some(s) = self.shift(k, n - k) {
                    term = term.mul(&s);
                }
                c = c.sub(&term.mul_big(binom.get_ref(n - 1, k - 1)));
            }
            out.push(c);
        }
        Ok(Series::from_coeffs(self.kind, self.mode.clone(), out))
    }

    /// Multiplicative inverse: `r_n = -sum_{k=1..n} C(n,k) S(k,n-k) a_k r_{n-k}`.
    pub fn recip(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let order = self.order();
        let binom = BinomialTable::new(order);
        let mut out: Vec<CoeffPoly> = vec![CoeffPoly::one()];
        for n in 1..=order {
            let mut c = CoeffPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                let mut term = self.coeffs[k].mul(&out[n - k]);
                if let Some(s) = self.shift(k, n - k) {
                    term = term.mul(&s);
                }
                c = c.add(&term.mul_big(binom.get_ref(n, k)));
            }
            out.push(c.neg());
        }
        Ok(Series::from_coeffs(self.kind, self.mode.clone(), out))
    }

    /// Exponential Hadamard product, EGF operands only.
    pub fn hadamard(&self, other: &Series) -> Result<Series> {
        if self.kind != SeriesKind::Egf || other.kind != SeriesKind::Egf {
            return Err(Error::KindMismatch);
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].mul(&other.coeffs[n]))
            .collect();
        Ok(Series::from_coeffs(SeriesKind::Egf, self.mode.clone(), coeffs))
    }

    /// Family translation GGF -> EGF: the numerators already are the family
    /// polynomials, so the Hadamard product with G reduces to a kind retag.
    pub fn retag_family_to_egf(&self) -> Result<Series> {
        if self.kind != SeriesKind::Ggf {
            return Err(Error::KindMismatch);
        }
        Ok(Series::from_coeffs(SeriesKind::Egf, self.mode.clone(), self.coeffs.clone()))
    }

    /// Family translation EGF -> GGF (Hadamard with Set, as a kind retag).
    pub fn retag_family_to_ggf(&self) -> Result<Series> {
        if self.kind != SeriesKind::Egf {
            return Err(Error::KindMismatch);
        }
        Ok(Series::from_coeffs(SeriesKind::Ggf, self.mode.clone(), self.coeffs.clone()))
    }

    /// Reinterpret an EGF as a GGF denoting the *same* formal series:
    /// numerators pick up the factor `(1+w)^C(n,2)`.
    pub fn reinterpret_value_egf_as_ggf(&self) -> Series {
        assert_eq!(self.kind, SeriesKind::Egf, "value reinterpretation starts from an EGF");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.mul(&self.mode.one_plus_w_pow(choose2(n as u32))))
            .collect();
        Series::from_coeffs(SeriesKind::Ggf, self.mode.clone(), coeffs)
    }

    /// Distinguish one vertex: `c_n <- n * c_n` (z d/dz).
    pub fn point(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.mul_big(&BigInt::from(n)))
            .collect();
        Series::from_coeffs(self.kind, self.mode.clone(), coeffs)
    }

    /// Substitution `z -> s*z`: `c_n <- s^n * c_n`.
    pub fn scale_z(&self, s: &CoeffPoly) -> Series {
        let mut s_pow = CoeffPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                s_pow = s_pow.mul(s);
            }
            coeffs.push(c.mul(&s_pow));
        }
        Series::from_coeffs(self.kind, self.mode.clone(), coeffs)
    }

    /// Multiply every coefficient by a fixed polynomial (used to realize
    /// `e^{(u-1)A}`-style marker scalings without trivariate composition).
    pub fn scale_coeffs(&self, s: &CoeffPoly) -> Series {
        let coeffs = self.coeffs.iter().map(|c| c.mul(s)).collect();
        Series::from_coeffs(self.kind, self.mode.clone(), coeffs)
    }

    /// `u -> u + delta` in every coefficient.
    pub fn subst_u(&self, delta: i64) -> Series {
        let coeffs = self.coeffs.iter().map(|c| c.subst_u(delta)).collect();
        Series::from_coeffs(self.kind, self.mode.clone(), coeffs)
    }

    /// Partial evaluation of the marker `u` (no-op in Numeric mode, where
    /// `u` is already fixed).
    pub fn eval_u(&self, u_value: &BigInt) -> Series {
        if self.mode.is_numeric() {
            return self.clone();
        }
        let coeffs = self.coeffs.iter().map(|c| c.eval_u(u_value)).collect();
        Series::from_coeffs(self.kind, self.mode.clone(), coeffs)
    }

    pub fn has_u(&self) -> bool {
        self.coeffs.iter().any(|c| c.has_u())
    }

    /// Drop coefficients above `order`.
    pub fn truncated(&self, order: usize) -> Series {
        let order = order.min(self.order());
        Series::from_coeffs(self.kind, self.mode.clone(), self.coeffs[..=order].to_vec())
    }
}
