//! Exact arithmetic in the group ring Z[Z^k].
//!
//! A rank-k element is a finite integer combination of monomials
//! x^e = x1^{e1}...xk^{ek} indexed by exponent vectors e in Z^k. The group
//! operation on monomials is componentwise exponent addition, so the ring is
//! the Laurent polynomial ring in k variables. Coefficients are
//! arbitrary-precision integers and term maps are kept sorted
//! lexicographically, which makes every operation deterministic and every
//! serialized value reproducible bit-for-bit.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial: a point of Z^k.
///
/// Ordering is lexicographic, which is a total group order on Z^k; the
/// lex-least and lex-greatest terms of a product are the products of the
/// corresponding extreme terms, a fact the exact-division loop relies on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(rank: usize) -> Self {
        ExponentVector(vec![0; rank])
    }

    /// Standard basis vector e_i.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, n: i64) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Negation; the group inverse of the monomial.
    pub fn negated(&self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .map(|a| a.checked_neg().expect("exponent overflow in negation"))
                .collect(),
        )
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A unit of Z[Z^k]: a sign together with a single monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    sign: i8,
    monomial: ExponentVector,
}

impl Unit {
    pub fn new(sign: i8, monomial: ExponentVector) -> Self {
        assert!(sign == 1 || sign == -1, "unit sign must be +1 or -1");
        Unit { sign, monomial }
    }

    pub fn identity(rank: usize) -> Self {
        Unit {
            sign: 1,
            monomial: ExponentVector::zero(rank),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn monomial(&self) -> &ExponentVector {
        &self.monomial
    }

    pub fn rank(&self) -> usize {
        self.monomial.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sign == 1 && self.monomial.is_zero()
    }

    pub fn inverse(&self) -> Self {
        Unit {
            sign: self.sign,
            monomial: self.monomial.negated(),
        }
    }

    pub fn mul(&self, other: &Unit) -> Result<Unit> {
        Ok(Unit {
            sign: self.sign * other.sign,
            monomial: self.monomial.checked_add(&other.monomial)?,
        })
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.monomial.clone(), BigInt::from(self.sign))
    }
}

/// Element of Z[Z^k]: a finite map from exponent vectors to nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::zero(rank), c);
        }
        LaurentPoly { rank, terms }
    }

    pub fn monomial(exp: ExponentVector, coef: BigInt) -> Self {
        let rank = exp.len();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        LaurentPoly { rank, terms }
    }

    /// Builds an element from (exponent, coefficient) pairs, merging
    /// duplicates and purging zeros. Every exponent must have length `rank`.
    pub fn from_terms<I>(rank: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut terms: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (exp, coef) in pairs {
            if exp.len() != rank {
                return Err(Error::RankMismatch {
                    left: exp.len(),
                    right: rank,
                });
            }
            if coef.is_zero() {
                continue;
            }
            let entry = terms.entry(exp).or_insert_with(BigInt::zero);
            *entry += coef;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { rank, terms })
    }

    /// Univariate convenience constructor from (exponent, coefficient) pairs.
    pub fn uni(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(
            1,
            pairs
                .iter()
                .map(|&(e, c)| (ExponentVector::new(vec![e]), BigInt::from(c))),
        )
        .expect("rank-1 pairs")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num_terms() == 1 && {
            let (e, c) = self.terms.iter().next().unwrap();
            e.is_zero() && c.is_one()
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    /// Componentwise minimum of the support, if nonzero.
    pub fn min_corner(&self) -> Option<ExponentVector> {
        self.corner(|a, b| a.min(b))
    }

    /// Componentwise maximum of the support, if nonzero.
    pub fn max_corner(&self) -> Option<ExponentVector> {
        self.corner(|a, b| a.max(b))
    }

    fn corner(&self, pick: impl Fn(i64, i64) -> i64) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        let mut acc = first.entries().to_vec();
        for e in it {
            for (a, b) in acc.iter_mut().zip(e.entries()) {
                *a = pick(*a, *b);
            }
        }
        Some(ExponentVector::new(acc))
    }

    /// Per-coordinate support width (max - min). Widths add under
    /// multiplication, which bounds divisor supports.
    pub fn widths(&self) -> Option<Vec<i64>> {
        let min = self.min_corner()?;
        let max = self.max_corner()?;
        Some(
            max.entries()
                .iter()
                .zip(min.entries())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            rank: self.rank,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Ring product: convolution of term maps.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut terms: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_add(eb)?;
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            rank: self.rank,
            terms,
        })
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul_unit(&self, u: &Unit) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let exp = e.checked_add(u.monomial())?;
            let coef = if u.sign() == 1 { c.clone() } else { -c };
            terms.insert(exp, coef);
        }
        Ok(LaurentPoly {
            rank: self.rank,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = LaurentPoly::one(self.rank);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact division in Z[Z^k]: returns `Some(q)` with `q*d == self` when
    /// `d` divides exactly, `None` otherwise.
    ///
    /// The loop cancels the lex-least remainder term against the lex-least
    /// divisor term; division is abandoned as soon as a quotient exponent
    /// leaves the box forced by the support of the dividend (Newton supports
    /// are Minkowski summands, so per-coordinate quotient bounds are exact).
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        self.check_rank(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero(self.rank)));
        }

        let x_min = self.min_corner().unwrap();
        let x_max = self.max_corner().unwrap();
        let d_min = d.min_corner().unwrap();
        let d_max = d.max_corner().unwrap();
        // Quotient support is confined to [x_min - d_min, x_max - d_max].
        let q_lo = x_min.checked_sub(&d_min)?;
        let q_hi = x_max.checked_sub(&d_max)?;
        if q_lo.entries().iter().zip(q_hi.entries()).any(|(l, h)| l > h) {
            return Ok(None);
        }

        let (d_lead_exp, d_lead_coef) = d.terms.iter().next().unwrap();
        let mut remainder = self.clone();
        let mut quotient: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();

        while !remainder.is_zero() {
            let (r_exp, r_coef) = remainder.terms.iter().next().unwrap();
            let (q_coef, rem) = num_integer::div_rem(r_coef.clone(), d_lead_coef.clone());
            if !rem.is_zero() {
                return Ok(None);
            }
            let q_exp = r_exp.checked_sub(d_lead_exp)?;
            if q_exp
                .entries()
                .iter()
                .zip(q_lo.entries().iter().zip(q_hi.entries()))
                .any(|(e, (l, h))| e < l || e > h)
            {
                return Ok(None);
            }
            let piece = LaurentPoly::monomial(q_exp.clone(), q_coef.clone());
            remainder = remainder.sub(&piece.mul(d)?)?;
            quotient.insert(q_exp, q_coef);
        }

        Ok(Some(LaurentPoly {
            rank: self.rank,
            terms: quotient,
        }))
    }

    /// Splits a nonzero element as unit * canonical associate. The canonical
    /// associate has minimum exponent 0 in every coordinate and a positive
    /// coefficient on its lex-leading (greatest) exponent.
    pub fn normalize(&self) -> Result<(Unit, Self)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("normalize"));
        }
        let shift = self.min_corner().unwrap();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.checked_sub(&shift)?, c.clone());
        }
        let leading_negative = terms.iter().next_back().unwrap().1.is_negative();
        let sign: i8 = if leading_negative { -1 } else { 1 };
        if leading_negative {
            for c in terms.values_mut() {
                *c = -std::mem::take(c);
            }
        }
        Ok((
            Unit::new(sign, shift),
            LaurentPoly {
                rank: self.rank,
                terms,
            },
        ))
    }

    /// The canonical associate (normalize, drop the unit).
    pub fn canonical(&self) -> Result<Self> {
        Ok(self.normalize()?.1)
    }

    pub fn is_canonical(&self) -> bool {
        match self.normalize() {
            Ok((u, _)) => u.is_identity(),
            Err(_) => false,
        }
    }

    /// The bar involution: every group element goes to its inverse.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.negated(), c.clone()))
                .collect(),
        }
    }

    /// True iff this element is +/- a single monomial.
    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some(Unit::new(1, e.clone()))
        } else if (-c).is_one() {
            Some(Unit::new(-1, e.clone()))
        } else {
            None
        }
    }

    /// True iff the two elements differ by a unit.
    pub fn associates(&self, other: &Self) -> Result<bool> {
        self.check_rank(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroInput("associates"));
        }
        Ok(self.canonical()? == other.canonical()?)
    }

    /// Substitutes the single variable of a rank-1 element by the monomial
    /// with exponent vector `target` inside rank `ambient_rank`. A ring
    /// homomorphism: c*t^n maps to c*x^(n*target).
    pub fn substitute_monomial(
        &self,
        target: &ExponentVector,
        ambient_rank: usize,
    ) -> Result<LaurentPoly> {
        if self.rank != 1 {
            return Err(Error::NotUnivariate { rank: self.rank });
        }
        if target.len() > ambient_rank {
            return Err(Error::TargetRankMismatch {
                target_len: target.len(),
                ambient: ambient_rank,
            });
        }
        let mut padded = target.entries().to_vec();
        padded.resize(ambient_rank, 0);
        let target = ExponentVector::new(padded);
        LaurentPoly::from_terms(
            ambient_rank,
            self.terms
                .iter()
                .map(|(e, c)| Ok((target.checked_scale(e.entries()[0])?, c.clone())))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Sum of all coefficients; the ring homomorphism sending every monomial
    /// to 1.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Renders with the given variable names (one per coordinate), terms in
    /// descending lex order, e.g. `t^2 - t + 1 - t^-1`.
    pub fn display_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.rank, "one variable name per coordinate");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, coef)) in self.terms.iter().rev().enumerate() {
            let neg = coef.is_negative();
            let mag = coef.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut vars = String::new();
            for (name, &e) in names.iter().zip(exp.entries()) {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                if e == 1 {
                    vars.push_str(name);
                } else {
                    vars.push_str(&format!("{name}^{e}"));
                }
            }
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&vars);
            }
        }
        out
    }

    fn default_names(&self) -> Vec<String> {
        if self.rank == 1 {
            vec!["t".to_string()]
        } else {
            (1..=self.rank).map(|i| format!("x{i}")).collect()
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&self.default_names()))
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order for deterministic factor sorting: by rank, then term count,
/// then the term sequences themselves.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.terms.len().cmp(&other.terms.len()))
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> LaurentPoly {
        LaurentPoly::uni(&[(1, 1)])
    }

    #[test]
    fn add_examples() {
        let a = LaurentPoly::uni(&[(1, 1), (0, -1)]);
        let b = LaurentPoly::uni(&[(0, 1), (1, -1)]);
        assert!(a.add(&b).unwrap().is_zero());

        let a = LaurentPoly::uni(&[(1, 1), (-1, 1)]);
        let b = t();
        assert_eq!(a.add(&b).unwrap(), LaurentPoly::uni(&[(1, 2), (-1, 1)]));

        let x = LaurentPoly::uni(&[(3, 5), (0, -2)]);
        assert_eq!(x.add(&LaurentPoly::zero(1)).unwrap(), x);
    }

    #[test]
    fn add_rank_mismatch() {
        let a = LaurentPoly::uni(&[(1, 1)]);
        let b = LaurentPoly::one(2);
        assert!(matches!(a.add(&b), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn mul_examples() {
        // (t - 1)(t^-1 - 1) = 2 - t - t^-1
        let a = LaurentPoly::uni(&[(1, 1), (0, -1)]);
        let b = LaurentPoly::uni(&[(-1, 1), (0, -1)]);
        assert_eq!(
            a.mul(&b).unwrap(),
            LaurentPoly::uni(&[(0, 2), (1, -1), (-1, -1)])
        );

        let x = LaurentPoly::uni(&[(2, 3), (-1, 7)]);
        assert_eq!(x.mul(&LaurentPoly::one(1)).unwrap(), x);

        // (t - 1 + t^-1)^2 = t^2 - 2t + 3 - 2t^-1 + t^-2
        let p = LaurentPoly::uni(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(
            p.pow(2).unwrap(),
            LaurentPoly::uni(&[(2, 1), (1, -2), (0, 3), (-1, -2), (-2, 1)])
        );
    }

    #[test]
    fn exact_div_examples() {
        let x = LaurentPoly::uni(&[(2, 1), (0, -1)]);
        let d = LaurentPoly::uni(&[(1, 1), (0, -1)]);
        assert_eq!(
            x.exact_div(&d).unwrap(),
            Some(LaurentPoly::uni(&[(1, 1), (0, 1)]))
        );

        let x = LaurentPoly::uni(&[(2, 1), (0, 1)]);
        assert_eq!(x.exact_div(&d).unwrap(), None);

        assert!(matches!(
            x.exact_div(&LaurentPoly::zero(1)),
            Err(Error::DivisionByZero)
        ));

        // 0 / d = 0
        assert_eq!(
            LaurentPoly::zero(1).exact_div(&d).unwrap(),
            Some(LaurentPoly::zero(1))
        );
    }

    #[test]
    fn exact_div_multivariate() {
        // (x + y)(x - y) = x^2 - y^2 in rank 2
        let x = LaurentPoly::monomial(ExponentVector::new(vec![1, 0]), BigInt::one());
        let y = LaurentPoly::monomial(ExponentVector::new(vec![0, 1]), BigInt::one());
        let s = x.add(&y).unwrap();
        let d = x.sub(&y).unwrap();
        let prod = s.mul(&d).unwrap();
        assert_eq!(prod.exact_div(&d).unwrap(), Some(s.clone()));
        assert_eq!(prod.exact_div(&s).unwrap(), Some(d));
        assert_eq!(prod.exact_div(&y).unwrap(), None);
    }

    #[test]
    fn normalize_examples() {
        // -t^3 + t^2 = (-1) * t^2 * (t - 1)
        let x = LaurentPoly::uni(&[(3, -1), (2, 1)]);
        let (u, p) = x.normalize().unwrap();
        assert_eq!(u.sign(), -1);
        assert_eq!(u.monomial(), &ExponentVector::new(vec![2]));
        assert_eq!(p, LaurentPoly::uni(&[(1, 1), (0, -1)]));
        assert_eq!(p.mul_unit(&u).unwrap(), x);

        // t - 1 + t^-1 = (+1) * t^-1 * (t^2 - t + 1)
        let x = LaurentPoly::uni(&[(1, 1), (0, -1), (-1, 1)]);
        let (u, p) = x.normalize().unwrap();
        assert_eq!(u.sign(), 1);
        assert_eq!(u.monomial(), &ExponentVector::new(vec![-1]));
        assert_eq!(p, LaurentPoly::uni(&[(2, 1), (1, -1), (0, 1)]));

        // idempotence on the canonical part
        let (u2, p2) = p.normalize().unwrap();
        assert!(u2.is_identity());
        assert_eq!(p2, p);

        assert!(matches!(
            LaurentPoly::zero(1).normalize(),
            Err(Error::ZeroInput(_))
        ));
    }

    #[test]
    fn bar_examples() {
        let x = LaurentPoly::uni(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(x.bar(), x);

        let y = LaurentPoly::uni(&[(3, 2)]);
        assert_eq!(y.bar(), LaurentPoly::uni(&[(-3, 2)]));
        assert_eq!(y.bar().bar(), y);

        let a = LaurentPoly::uni(&[(2, 1), (0, 3)]);
        let b = LaurentPoly::uni(&[(1, -1), (-2, 5)]);
        assert_eq!(
            a.mul(&b).unwrap().bar(),
            a.bar().mul(&b.bar()).unwrap()
        );
    }

    #[test]
    fn unit_predicates() {
        assert!(LaurentPoly::uni(&[(5, -1)]).is_unit());
        assert!(!LaurentPoly::uni(&[(1, 1), (0, 1)]).is_unit());
        assert!(!LaurentPoly::uni(&[(0, 2)]).is_unit());

        // t - 1 and t^-1 - 1 differ by the unit -t^-1
        let a = LaurentPoly::uni(&[(1, 1), (0, -1)]);
        let b = LaurentPoly::uni(&[(-1, 1), (0, -1)]);
        assert!(a.associates(&b).unwrap());
        assert!(matches!(
            a.associates(&LaurentPoly::zero(1)),
            Err(Error::ZeroInput(_))
        ));
    }

    #[test]
    fn unit_inverse_roundtrip() {
        let u = Unit::new(-1, ExponentVector::new(vec![2, -1]));
        let prod = u.to_poly().mul(&u.inverse().to_poly()).unwrap();
        assert!(prod.is_one());
    }

    #[test]
    fn substitute_examples() {
        // t - 1 + t^-1 at target 2*e2 in rank 2
        let p = LaurentPoly::uni(&[(1, 1), (0, -1), (-1, 1)]);
        let target = ExponentVector::new(vec![0, 2]);
        let got = p.substitute_monomial(&target, 2).unwrap();
        let want = LaurentPoly::from_terms(
            2,
            vec![
                (ExponentVector::new(vec![0, 2]), BigInt::from(1)),
                (ExponentVector::new(vec![0, 0]), BigInt::from(-1)),
                (ExponentVector::new(vec![0, -2]), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(got, want);

        let one = LaurentPoly::one(1);
        assert_eq!(one.substitute_monomial(&target, 2).unwrap(), LaurentPoly::one(2));

        assert!(matches!(
            p.substitute_monomial(&ExponentVector::new(vec![1, 2, 3]), 2),
            Err(Error::TargetRankMismatch { .. })
        ));
    }

    #[test]
    fn evaluate_at_one_examples() {
        let x = LaurentPoly::uni(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(x.evaluate_at_one(), BigInt::one());
        assert_eq!(LaurentPoly::zero(1).evaluate_at_one(), BigInt::zero());
    }

    #[test]
    fn display_pretty() {
        let x = LaurentPoly::uni(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]);
        assert_eq!(x.to_string(), "t^2 - t + 1 - t^-1 + t^-2");
        assert_eq!(LaurentPoly::zero(1).to_string(), "0");
        assert_eq!(LaurentPoly::uni(&[(1, -3)]).to_string(), "-3*t");
    }
}
