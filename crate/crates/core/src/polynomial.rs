//! The polynomial family `P(x) = Σ_{i=0}^{k} q^{n+i} x^{k-i}` and its
//! monomial-to-lattice-point map.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Validated parameter triple `(q, n, k)` with `q ≥ 1`, `n ≥ 0`, `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecialPolynomial {
    q: BigUint,
    n: u32,
    k: u32,
}

impl SpecialPolynomial {
    /// Validates and builds the triple. Each rejected parameter gets its own
    /// error variant so callers can name the offending flag.
    pub fn new(q: impl Into<BigInt>, n: i64, k: i64) -> Result<Self> {
        let q = q.into();
        if !q.is_positive() {
            return Err(Error::InvalidBase(q));
        }
        if n < 0 {
            return Err(Error::InvalidShift(n));
        }
        if k < 1 {
            return Err(Error::InvalidDegree(k));
        }
        let top = n as u64 + k as u64;
        if top > u64::from(u32::MAX) {
            return Err(Error::ExponentOverflow(top));
        }
        Ok(Self {
            q: q.magnitude().clone(),
            n: n as u32,
            k: k as u32,
        })
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Degree of the polynomial.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// `q = 1` collapses the diagram onto the vertical line `x = 1`.
    pub fn is_degenerate(&self) -> bool {
        self.q.is_one()
    }

    /// Coefficient of `x^{k-i}`, i.e. `q^{n+i}`.
    pub fn coefficient(&self, i: u32) -> BigUint {
        self.q.pow(self.n + i)
    }

    /// Coefficients `q^n, q^{n+1}, …, q^{n+k}` from the leading term down.
    pub fn coefficients(&self) -> Vec<BigUint> {
        let mut out = Vec::with_capacity(self.k as usize + 1);
        let mut c = self.q.pow(self.n);
        for _ in 0..=self.k {
            out.push(c.clone());
            c *= &self.q;
        }
        out
    }

    /// Exact value of `P(x)` by Horner's rule.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients()
            .into_iter()
            .fold(BigInt::zero(), |acc, c| acc * x + BigInt::from(c))
    }

    /// The map sending `q^{n+i} x^{k-i}` to `(q^{n+i}, k-i)`, for `i = 0..=k`.
    pub fn monomial_map(&self) -> Vec<LatticePoint> {
        self.coefficients()
            .into_iter()
            .zip((0..=self.k).rev())
            .map(|(x, y)| LatticePoint::new(x, y))
            .collect()
    }
}

impl fmt::Display for SpecialPolynomial {
    /// Renders e.g. `x^2 + 2x + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients().into_iter().enumerate() {
            let exp = self.k - i as u32;
            if i > 0 {
                f.write_str(" + ")?;
            }
            let coeff = if c.is_one() && exp > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match exp {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}x")?,
                e => write!(f, "{coeff}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Convenience wrapper over [`SpecialPolynomial::new`].
pub fn build_polynomial(q: impl Into<BigInt>, n: i64, k: i64) -> Result<SpecialPolynomial> {
    SpecialPolynomial::new(q, n, k)
}

pub fn evaluate_polynomial(p: &SpecialPolynomial, x: &BigInt) -> BigInt {
    p.evaluate(x)
}

pub fn monomial_map(p: &SpecialPolynomial) -> Vec<LatticePoint> {
    p.monomial_map()
}

/// A point with non-negative integer coordinates. `x` is unbounded, `y`
/// never exceeds the degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigUint,
    pub y: u32,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigUint>, y: u32) -> Self {
        Self { x: x.into(), y }
    }

    pub(crate) fn signed(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.x.clone()), BigInt::from(self.y))
    }

    /// `x` as `f64`, saturating to infinity for huge coordinates.
    pub fn x_f64(&self) -> f64 {
        self.x.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}
