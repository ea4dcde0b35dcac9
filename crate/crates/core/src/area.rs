//! Areas of polynomial diagrams, computed four ways.
//!
//! * [`area_closed_form_k2`]: `q^n (q+3)(q-1) / 2`, degree 2 only.
//! * [`area_general`]: `Σ_{m=0}^{k-2} q^{n+m}(q-1)(2k-2m-1)/2 + (q^{n+k} - q^{n+k-1})/2`,
//!   i.e. `k-1` vertical trapezoid slabs plus the rightmost right triangle.
//! * [`area_shoelace`]: signed cross-product sum over the vertex cycle.
//! * [`area_pick`]: `I + B/2 - 1` from lattice-point counts.
//!
//! The last two only look at vertex coordinates and serve as oracles for the
//! first two.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::{build_diagram, PolynomialDiagram};
use crate::error::{Error, Result};
use crate::polynomial::SpecialPolynomial;

/// Default column budget for [`area_pick`].
pub const DEFAULT_PICK_BUDGET: u64 = 1_000_000;

/// Exact non-negative rational area, always in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactArea(BigRational);

impl ExactArea {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self(BigRational::new(num.into(), den.into()))
    }

    /// `twice / 2`; every lattice-polygon area has this form.
    pub fn from_halves(twice: BigInt) -> Self {
        Self::new(twice, 2)
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Lossy; for presentation and tolerance checks only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for ExactArea {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl fmt::Display for ExactArea {
    /// `num/den`, or just `num` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn big(u: &BigUint) -> BigInt {
    BigInt::from(u.clone())
}

/// `q^n (q+3)(q-1) / 2`, the degree-2 area. Only `q = 0` is rejected.
pub fn area_closed_form_k2(q: &BigUint, n: u32) -> Result<ExactArea> {
    if q.is_zero() {
        return Err(Error::InvalidBase(BigInt::zero()));
    }
    let q = big(q);
    let twice = q.pow(n) * (&q + 3u32) * (&q - 1u32);
    Ok(ExactArea::from_halves(twice))
}

/// Area of slab `m` (`0 ≤ m ≤ k-2`): the right trapezoid between
/// `x = q^{n+m}` and `x = q^{n+m+1}` with vertical sides `k-m` and `k-m-1`.
pub fn trapezoid_area(p: &SpecialPolynomial, m: u32) -> Result<ExactArea> {
    let k = p.k();
    if k < 2 || m > k - 2 {
        return Err(Error::TrapezoidIndex { m, k });
    }
    let width = big(&p.coefficient(m + 1)) - big(&p.coefficient(m));
    let heights = BigInt::from(2 * (k - m) - 1);
    Ok(ExactArea::from_halves(width * heights))
}

/// `(q^{n+k} - q^{n+k-1}) / 2`, the right triangle under the last chain edge.
pub fn triangle_area(p: &SpecialPolynomial) -> ExactArea {
    let k = p.k();
    ExactArea::from_halves(big(&p.coefficient(k)) - big(&p.coefficient(k - 1)))
}

/// Trapezoid-sum area, any degree. For `k = 1` the sum is empty.
pub fn area_general(p: &SpecialPolynomial) -> ExactArea {
    let (k, n) = (p.k(), p.n());
    let q = big(p.q());
    let q_minus_one = &q - 1u32;
    let mut power = q.pow(n);
    let mut twice = BigInt::zero();
    for m in 0..k.saturating_sub(1) {
        twice += &power * &q_minus_one * BigInt::from(2 * k - 2 * m - 1);
        power *= &q;
    }
    twice += q.pow(n + k) - q.pow(n + k - 1);
    ExactArea::from_halves(twice)
}

/// Unsigned shoelace area of the closed vertex cycle.
pub fn area_shoelace(d: &PolynomialDiagram) -> ExactArea {
    let twice_signed: BigInt = d
        .edges()
        .map(|(a, b)| {
            let (ax, ay) = a.signed();
            let (bx, by) = b.signed();
            ax * by - bx * ay
        })
        .sum();
    ExactArea::from_halves(twice_signed.abs())
}

/// Result of the Pick's-theorem oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PickCount {
    pub interior: BigUint,
    pub boundary: BigUint,
    pub area: ExactArea,
}

/// Counts boundary points by edge gcds and interior points column by column,
/// then applies `A = I + B/2 - 1`.
///
/// The scan visits every integer column strictly between `q^n` and
/// `q^{n+k}`, so instances wider than `budget` columns are refused.
pub fn area_pick(d: &PolynomialDiagram, budget: u64) -> Result<PickCount> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDiagram);
    }
    let boundary: BigUint = d
        .edges()
        .map(|(a, b)| {
            let (ax, ay) = a.signed();
            let (bx, by) = b.signed();
            (ax - bx).abs().gcd(&(ay - by).abs()).magnitude().clone()
        })
        .sum();

    let chain = d.upper_chain();
    let left = &chain[0].x;
    let right = &chain[chain.len() - 1].x;
    let extent = right - left;
    if extent > BigUint::from(budget) {
        return Err(Error::PickBudget { extent, budget });
    }

    // Within budget, and q^n ≤ q^{n+k} - q^n for q ≥ 2, so every x fits in u64.
    let right = right.to_u64().unwrap();
    let mut interior: u64 = 0;
    for w in chain.windows(2) {
        let (xa, xb) = (w[0].x.to_u64().unwrap(), w[1].x.to_u64().unwrap());
        let (ya, yb) = (u64::from(w[0].y), u64::from(w[1].y));
        let run = xb - xa;
        // The right end of the last edge sits on the x-axis.
        let last = if xb == right { xb - 1 } else { xb };
        for x in xa + 1..=last {
            // Upper boundary at column x is top / run.
            let top = ya * (xb - x) + yb * (x - xa);
            // Integers y with 0 < y < top/run.
            interior += top.div_ceil(run) - 1;
        }
    }

    let interior = BigUint::from(interior);
    let twice = BigInt::from(interior.clone()) * 2u32 + BigInt::from(boundary.clone()) - 2u32;
    Ok(PickCount {
        interior,
        boundary,
        area: ExactArea::from_halves(twice),
    })
}

/// All applicable area methods for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaCrossCheck {
    /// Present only for `k = 2`.
    pub closed_form: Option<ExactArea>,
    pub general_formula: ExactArea,
    pub shoelace: ExactArea,
    /// Absent for degenerate diagrams and instances over the Pick budget.
    pub pick: Option<ExactArea>,
    pub agree: bool,
}

impl AreaCrossCheck {
    pub fn values(&self) -> impl Iterator<Item = (&'static str, &ExactArea)> {
        [
            ("closed", self.closed_form.as_ref()),
            ("general", Some(&self.general_formula)),
            ("shoelace", Some(&self.shoelace)),
            ("pick", self.pick.as_ref()),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.map(|v| (name, v)))
    }
}

pub fn cross_check(p: &SpecialPolynomial, pick_budget: u64) -> AreaCrossCheck {
    let d = build_diagram(p);
    let closed_form =
        (p.k() == 2).then(|| area_closed_form_k2(p.q(), p.n()).expect("q ≥ 1 by construction"));
    let general_formula = area_general(p);
    let shoelace = area_shoelace(&d);
    let pick = area_pick(&d, pick_budget).ok().map(|c| c.area);
    let mut check = AreaCrossCheck {
        closed_form,
        general_formula,
        shoelace,
        pick,
        agree: false,
    };
    let agree = check.values().all(|(_, v)| *v == check.general_formula);
    check.agree = agree;
    check
}
