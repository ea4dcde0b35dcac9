//! Area sequences `S^q` over a range of `q`, their consecutive ratios and
//! forward differences.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::area::{area_general, ExactArea};
use crate::error::{Error, Result};
use crate::polynomial::SpecialPolynomial;

/// `values[j]` is the area at `q = q_start + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaSequence {
    k: u32,
    n: u32,
    q_start: BigUint,
    values: Vec<ExactArea>,
}

impl AreaSequence {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q_start(&self) -> &BigUint {
        &self.q_start
    }

    pub fn values(&self) -> &[ExactArea] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `q` at index `j`.
    pub fn q_at(&self, j: usize) -> BigUint {
        &self.q_start + j
    }

    fn rationals(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .map(|v| v.as_rational().clone())
            .collect()
    }
}

/// Areas for every `q` in `q_from..=q_to`.
pub fn area_sequence(k: u32, n: u32, q_from: &BigUint, q_to: &BigUint) -> Result<AreaSequence> {
    if q_from.is_zero() {
        return Err(Error::InvalidBase(BigInt::zero()));
    }
    if q_from > q_to {
        return Err(Error::EmptyRange {
            from: q_from.clone(),
            to: q_to.clone(),
        });
    }
    let len = (q_to - q_from)
        .to_usize()
        .and_then(|d| d.checked_add(1))
        .expect("q range length fits in memory");
    let mut values = Vec::with_capacity(len);
    for j in 0..len {
        let p = SpecialPolynomial::new(BigInt::from(q_from + j), n.into(), k.into())?;
        values.push(area_general(&p));
    }
    Ok(AreaSequence {
        k,
        n,
        q_start: q_from.clone(),
        values,
    })
}

/// `S^{q+1} / S^q` for each consecutive pair; `None` where `S^q = 0`.
pub fn ratio_sequence(s: &AreaSequence) -> Vec<Option<BigRational>> {
    s.values
        .windows(2)
        .map(|w| (!w[0].is_zero()).then(|| w[1].as_rational() / w[0].as_rational()))
        .collect()
}

/// `Σ_{i=0}^{d} (-1)^{d-i} C(d, i) v[j+i]` at every admissible `j`.
pub fn forward_difference(values: &[BigRational], order: usize) -> Result<Vec<BigRational>> {
    if order == 0 || order >= values.len() {
        return Err(Error::DifferenceOrder {
            order,
            len: values.len(),
        });
    }
    let mut weights = Vec::with_capacity(order + 1);
    let mut c = BigInt::one();
    for i in 0..=order {
        let sign = if (order - i).is_multiple_of(2) { 1 } else { -1 };
        weights.push(BigRational::from_integer(&c * sign));
        c = c * (order - i) / (i + 1);
    }
    Ok(values
        .windows(order + 1)
        .map(|w| w.iter().zip(&weights).map(|(v, wt)| v * wt).sum())
        .collect())
}

/// Order-`d` forward difference of the area sequence.
pub fn finite_difference(s: &AreaSequence, order: usize) -> Result<Vec<BigRational>> {
    forward_difference(&s.rationals(), order)
}

/// `S^{q+2} - 2 S^{q+1} + S^q`, written out directly.
pub fn second_difference(s: &AreaSequence) -> Result<Vec<BigRational>> {
    if s.len() < 3 {
        return Err(Error::DifferenceOrder {
            order: 2,
            len: s.len(),
        });
    }
    let two = BigRational::from_integer(2.into());
    Ok(s.values
        .windows(3)
        .map(|w| w[2].as_rational() - &two * w[1].as_rational() + w[0].as_rational())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub ratios: Vec<Option<BigRational>>,
    /// Order of [`Self::differences`]; empty when the sequence is too short.
    pub difference_order: usize,
    pub differences: Vec<BigRational>,
    /// Defined ratios strictly decrease along the range.
    pub monotone_decreasing: bool,
    /// `|last defined ratio - 1|`, absent when no ratio is defined.
    pub distance_to_limit: Option<BigRational>,
}

impl SequenceReport {
    pub fn insufficient_data(&self) -> bool {
        self.distance_to_limit.is_none()
    }

    pub fn last_ratio(&self) -> Option<&BigRational> {
        self.ratios.iter().rev().find_map(Option::as_ref)
    }
}

pub fn convergence_report(s: &AreaSequence) -> SequenceReport {
    let ratios = ratio_sequence(s);
    let defined: Vec<&BigRational> = ratios.iter().flatten().collect();
    let monotone_decreasing = !defined.is_empty() && defined.windows(2).all(|w| w[1] < w[0]);
    let distance_to_limit = defined.last().map(|r| (*r - BigRational::one()).abs());
    let differences = second_difference(s).unwrap_or_default();
    SequenceReport {
        ratios,
        difference_order: 2,
        differences,
        monotone_decreasing,
        distance_to_limit,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(k: u32, n: u32, from: u32, to: u32) -> AreaSequence {
        area_sequence(k, n, &BigUint::from(from), &BigUint::from(to)).unwrap()
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn sequence_examples() {
        let s = seq(2, 0, 2, 6);
        let expected: Vec<ExactArea> = [(5, 2), (6, 1), (21, 2), (16, 1), (45, 2)]
            .iter()
            .map(|&(a, b)| ExactArea::new(a, b))
            .collect();
        assert_eq!(s.values(), expected.as_slice());
        assert_eq!(s.q_at(4), BigUint::from(6u32));

        assert_eq!(seq(2, 0, 1, 1).values(), &[ExactArea::zero()]);
        assert_eq!(
            seq(3, 0, 2, 3).values(),
            &[ExactArea::new(15, 2), ExactArea::new(23, 1)]
        );
    }

    #[test]
    fn sequence_rejects_bad_ranges() {
        let r = area_sequence(2, 0, &BigUint::from(5u32), &BigUint::from(4u32));
        assert!(matches!(r, Err(Error::EmptyRange { .. })));
        let r = area_sequence(2, 0, &BigUint::zero(), &BigUint::from(4u32));
        assert!(matches!(r, Err(Error::InvalidBase(_))));
        let r = area_sequence(0, 0, &BigUint::one(), &BigUint::one());
        assert!(matches!(r, Err(Error::InvalidDegree(0))));
    }

    #[test]
    fn ratio_examples() {
        let r = ratio_sequence(&seq(2, 0, 2, 3));
        assert_eq!(r, vec![Some(rat(12, 5))]);
        let r = ratio_sequence(&seq(2, 0, 16, 17));
        assert_eq!(r, vec![Some(rat(64, 57))]);
        let r = ratio_sequence(&seq(2, 3, 2, 3));
        assert_eq!(r, vec![Some(rat(81, 10))]);
    }

    #[test]
    fn ratio_undefined_after_zero_area() {
        let r = ratio_sequence(&seq(2, 0, 1, 3));
        assert_eq!(r, vec![None, Some(rat(12, 5))]);
    }

    #[test]
    fn difference_examples() {
        assert!(finite_difference(&seq(2, 0, 1, 12), 2)
            .unwrap()
            .iter()
            .all(|d| *d == rat(1, 1)));
        let constant = vec![rat(7, 3); 5];
        assert!(forward_difference(&constant, 1)
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        assert_eq!(
            finite_difference(&seq(2, 1, 2, 4), 2).unwrap(),
            vec![rat(11, 1)]
        );
    }

    #[test]
    fn difference_order_errors() {
        let s = seq(2, 0, 2, 4);
        assert!(finite_difference(&s, 3).is_err());
        assert!(finite_difference(&s, 0).is_err());
        assert!(second_difference(&seq(2, 0, 2, 3)).is_err());
    }

    #[test]
    fn higher_order_matches_iterated_first_difference() {
        let v = seq(4, 1, 2, 14).rationals();
        let mut iterated = v.clone();
        for d in 1..=6 {
            iterated = iterated.windows(2).map(|w| &w[1] - &w[0]).collect();
            assert_eq!(forward_difference(&v, d).unwrap(), iterated);
        }
    }

    #[test]
    fn report_over_table_range() {
        let rep = convergence_report(&seq(2, 0, 2, 17));
        assert!(rep.monotone_decreasing);
        assert_eq!(rep.last_ratio(), Some(&rat(64, 57)));
        assert_eq!(rep.distance_to_limit, Some(rat(7, 57)));
        assert!(rep.differences.iter().all(|d| *d == rat(1, 1)));
    }

    #[test]
    fn report_at_large_q() {
        let big = BigUint::from(1_000_000u32);
        let s = area_sequence(2, 0, &big, &(&big + 1u32)).unwrap();
        let rep = convergence_report(&s);
        assert!(rep.distance_to_limit.unwrap() < rat(1, 100_000));
    }

    #[test]
    fn report_on_zero_sequence() {
        let rep = convergence_report(&seq(3, 2, 1, 1));
        assert!(rep.insufficient_data());
        assert!(!rep.monotone_decreasing);
        assert!(rep.ratios.is_empty());
        let zeros = AreaSequence {
            k: 2,
            n: 0,
            q_start: BigUint::one(),
            values: vec![ExactArea::zero(); 3],
        };
        let rep = convergence_report(&zeros);
        assert_eq!(rep.ratios, vec![None, None]);
        assert!(rep.insufficient_data());
    }
}
