//! Alexander polynomials from standard knot presentations: Seifert matrices
//! (det(V - t V^T)), braid words (reduced Burau), and the torus-knot formula,
//! all funneled through one symmetrization convention: bar-fixed with value
//! 1 at t = 1. That pins the unit ambiguity completely, so equality of knots
//! for the distinguisher is literal equality of canonical values.


use num_traits::One;

use crate::error::{Error, Result};
use crate::factor::{factor_univariate, FactorEntry, Factorization};
use crate::laurent::{ExponentVector, LaurentPoly, Unit};

/// A knot given by one of the supported presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotInput {
    /// Explicit univariate Laurent polynomial, symmetrized on ingestion.
    Coefficients(LaurentPoly),
    /// Seifert matrix, square of even dimension.
    Seifert(Vec<Vec<i64>>),
    /// Braid word on `strands` strands; signed generator indices.
    Braid { strands: usize, word: Vec<i64> },
    /// Torus knot T(p, q), p and q coprime and >= 2.
    Torus(i64, i64),
}

/// Symmetrized Alexander polynomial: rank 1, bar-fixed, value 1 at t = 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlexanderPolynomial {
    poly: LaurentPoly,
}

impl AlexanderPolynomial {
    /// Validates the invariants instead of trusting the caller.
    pub fn new(poly: LaurentPoly) -> Result<Self> {
        if poly.rank() != 1 {
            return Err(Error::NotUnivariate { rank: poly.rank() });
        }
        if poly.is_zero() {
            return Err(Error::ZeroInput("AlexanderPolynomial"));
        }
        if !poly.evaluate_at_one().is_one() {
            return Err(Error::NotAlexander {
                value_at_one: poly.evaluate_at_one().to_string(),
            });
        }
        if poly.bar() != poly {
            return Err(Error::NotSymmetrizable);
        }
        Ok(AlexanderPolynomial { poly })
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    pub fn is_trivial(&self) -> bool {
        self.poly.is_one()
    }
}

impl std::fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Computes the Alexander polynomial of any supported presentation.
pub fn alexander(input: &KnotInput) -> Result<AlexanderPolynomial> {
    match input {
        KnotInput::Coefficients(p) => symmetrize(p),
        KnotInput::Seifert(v) => alexander_from_seifert(v),
        KnotInput::Braid { strands, word } => alexander_from_braid(*strands, word),
        KnotInput::Torus(p, q) => alexander_torus(*p, *q),
    }
}

/// The unique unit multiple of `p` that is bar-fixed with value 1 at t = 1.
///
/// Fails when p(1) is not +/-1, or when no bar-fixed representative exists
/// (bar(p) not an associate of p, or odd exponent span).
pub fn symmetrize(p: &LaurentPoly) -> Result<AlexanderPolynomial> {
    if p.rank() != 1 {
        return Err(Error::NotUnivariate { rank: p.rank() });
    }
    if p.is_zero() {
        return Err(Error::ZeroInput("symmetrize"));
    }
    let value = p.evaluate_at_one();
    if !value.is_one() && !(-&value).is_one() {
        return Err(Error::NotAlexander {
            value_at_one: value.to_string(),
        });
    }
    let lo = p.min_corner().unwrap().entries()[0];
    let hi = p.max_corner().unwrap().entries()[0];
    if (lo + hi) % 2 != 0 {
        return Err(Error::NotSymmetrizable);
    }
    let shift = Unit::new(1, ExponentVector::new(vec![-(lo + hi) / 2]));
    let centered = p.mul_unit(&shift)?;
    if centered.bar() != centered {
        return Err(Error::NotSymmetrizable);
    }
    let fixed = if value.is_one() {
        centered
    } else {
        centered.neg()
    };
    AlexanderPolynomial::new(fixed)
}

/// det(V - t V^T), symmetrized. The empty matrix gives the unknot.
pub fn alexander_from_seifert(v: &[Vec<i64>]) -> Result<AlexanderPolynomial> {
    let n = v.len();
    for row in v {
        if row.len() != n {
            return Err(Error::BadSeifertShape {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n % 2 != 0 {
        return Err(Error::BadSeifertShape { rows: n, cols: n });
    }
    let mat: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    // v[i][j] - t * v[j][i]
                    LaurentPoly::uni(&[(0, v[i][j]), (1, -v[j][i])])
                })
                .collect()
        })
        .collect();
    let det = laurent_det(1, mat)?;
    if det.is_zero() {
        return Err(Error::NotAlexander {
            value_at_one: "0".to_string(),
        });
    }
    symmetrize(&det)
}

/// Reduced Burau route: det(rho(beta) - I) * (t - 1) / (t^n - 1), then
/// symmetrize. Inexact division or a bad value at t = 1 means the closure is
/// not a knot.
pub fn alexander_from_braid(strands: usize, word: &[i64]) -> Result<AlexanderPolynomial> {
    if strands < 2 {
        return Err(Error::BadStrandCount { strands });
    }
    for &w in word {
        if w == 0 || w.unsigned_abs() as usize > strands - 1 {
            return Err(Error::BraidIndexOutOfRange { index: w, strands });
        }
    }
    let dim = strands - 1;
    let mut rho = identity_matrix(dim);
    for &w in word {
        let gen = burau_generator(strands, w.unsigned_abs() as usize, w < 0);
        rho = matrix_mul(&rho, &gen)?;
    }
    for (i, row) in rho.iter_mut().enumerate() {
        row[i] = row[i].sub(&LaurentPoly::one(1))?;
    }
    let det = laurent_det(1, rho)?;
    let numerator = det.mul(&LaurentPoly::uni(&[(1, 1), (0, -1)]))?;
    let denominator = LaurentPoly::uni(&[(strands as i64, 1), (0, -1)]);
    let quotient = numerator
        .exact_div(&denominator)?
        .ok_or_else(|| Error::ClosureNotKnot {
            detail: "Alexander division by t^n - 1 is inexact".to_string(),
        })?;
    if quotient.is_zero() {
        return Err(Error::ClosureNotKnot {
            detail: "vanishing Burau determinant".to_string(),
        });
    }
    symmetrize(&quotient).map_err(|e| match e {
        Error::NotAlexander { value_at_one } => Error::ClosureNotKnot {
            detail: format!("value at t=1 is {value_at_one}, not +/-1"),
        },
        Error::NotSymmetrizable => Error::ClosureNotKnot {
            detail: "no bar-fixed representative".to_string(),
        },
        other => other,
    })
}

/// Reduced Burau matrix of sigma_i^(+/-1) on `strands` strands.
fn burau_generator(strands: usize, i: usize, inverse: bool) -> Vec<Vec<LaurentPoly>> {
    let dim = strands - 1;
    let j = i - 1; // 0-based row of the twisted strand
    let mut m = identity_matrix(dim);
    if inverse {
        m[j][j] = LaurentPoly::uni(&[(-1, -1)]);
        if j > 0 {
            m[j][j - 1] = LaurentPoly::one(1);
        }
        if j + 1 < dim {
            m[j][j + 1] = LaurentPoly::uni(&[(-1, 1)]);
        }
    } else {
        m[j][j] = LaurentPoly::uni(&[(1, -1)]);
        if j > 0 {
            m[j][j - 1] = LaurentPoly::uni(&[(1, 1)]);
        }
        if j + 1 < dim {
            m[j][j + 1] = LaurentPoly::one(1);
        }
    }
    m
}

/// Torus knot T(p, q): (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
pub fn alexander_torus(p: i64, q: i64) -> Result<AlexanderPolynomial> {
    if p < 2 || q < 2 || num_integer::gcd(p, q) != 1 {
        return Err(Error::BadTorusParams { p, q });
    }
    let cyc = |k: i64| LaurentPoly::uni(&[(k, 1), (0, -1)]);
    let numerator = cyc(p * q).mul(&cyc(1))?;
    let denominator = cyc(p).mul(&cyc(q))?;
    let quotient = numerator
        .exact_div(&denominator)?
        .expect("the torus-knot division is exact for coprime p, q");
    symmetrize(&quotient)
}

/// Alexander polynomial of a connected sum: the product of the parts.
pub fn connected_sum(a: &AlexanderPolynomial, b: &AlexanderPolynomial) -> Result<AlexanderPolynomial> {
    AlexanderPolynomial::new(a.poly().mul(b.poly())?)
}

/// How a factor class pairs with its bar image inside a symmetric
/// factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BarPair {
    /// The class is its own bar image.
    SelfConjugate { factor: LaurentPoly, multiplicity: u32 },
    /// Distinct classes swapped by bar, necessarily of equal multiplicity.
    Conjugate {
        factor: LaurentPoly,
        bar_factor: LaurentPoly,
        multiplicity: u32,
    },
}

/// A factorization together with an explicit bar pairing of its classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarPairedFactorization {
    pub factorization: Factorization,
    pub pairs: Vec<BarPair>,
}

/// Factors an Alexander polynomial and exhibits the bar pairing: every
/// factor class must occur with the same multiplicity as its bar class.
/// Failure would falsify the symmetric-factorization claim and is reported
/// as an error; it must never happen for genuine Alexander polynomials.
pub fn bar_closed_factorization(d: &AlexanderPolynomial) -> Result<BarPairedFactorization> {
    let factorization = factor_univariate(d.poly())?;
    let mut pairs = Vec::new();
    let mut visited: Vec<&LaurentPoly> = Vec::new();
    for FactorEntry { poly, multiplicity } in factorization.factors() {
        if visited.contains(&poly) {
            continue;
        }
        let bar = poly.bar().canonical()?;
        if bar == *poly {
            pairs.push(BarPair::SelfConjugate {
                factor: poly.clone(),
                multiplicity: *multiplicity,
            });
            continue;
        }
        let partner = factorization
            .factors()
            .iter()
            .find(|e| e.poly == bar)
            .map(|e| e.multiplicity)
            .unwrap_or(0);
        if partner != *multiplicity {
            return Err(Error::BarPairingFailed {
                factor: poly.to_string(),
                found: partner as u64,
                expected: *multiplicity as u64,
            });
        }
        visited.push(poly);
        pairs.push(BarPair::Conjugate {
            factor: poly.clone(),
            bar_factor: bar,
            multiplicity: *multiplicity,
        });
    }
    Ok(BarPairedFactorization {
        factorization,
        pairs,
    })
}

/// Built-in knots with ground truth computable in-repo: unknot, trefoil,
/// figure-eight, and a handful of torus knots.
pub fn catalog() -> Vec<(&'static str, KnotInput)> {
    vec![
        (
            "unknot",
            KnotInput::Braid {
                strands: 2,
                word: vec![1],
            },
        ),
        ("trefoil", KnotInput::Seifert(vec![vec![-1, 1], vec![0, -1]])),
        (
            "figure-eight",
            KnotInput::Seifert(vec![vec![1, 1], vec![0, -1]]),
        ),
        ("torus-2-3", KnotInput::Torus(2, 3)),
        ("torus-2-5", KnotInput::Torus(2, 5)),
        ("torus-2-7", KnotInput::Torus(2, 7)),
        ("torus-3-4", KnotInput::Torus(3, 4)),
        ("torus-3-5", KnotInput::Torus(3, 5)),
    ]
}

fn identity_matrix(n: usize) -> Vec<Vec<LaurentPoly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one(1)
                    } else {
                        LaurentPoly::zero(1)
                    }
                })
                .collect()
        })
        .collect()
}

fn matrix_mul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Result<Vec<Vec<LaurentPoly>>> {
    let n = a.len();
    let mut out = identity_matrix(n);
    for i in 0..n {
        for (j, slot) in out[i].iter_mut().enumerate() {
            let mut acc = LaurentPoly::zero(1);
            for k in 0..n {
                acc = acc.add(&a[i][k].mul(&b[k][j])?)?;
            }
            *slot = acc;
        }
    }
    Ok(out)
}

/// Fraction-free Bareiss determinant over the Laurent ring; every interior
/// division is exact by the Sylvester identity.
pub(crate) fn laurent_det(rank: usize, mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one(rank));
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one(rank);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero(rank)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = num
                    .exact_div(&prev)?
                    .expect("Bareiss interior division is exact");
            }
            m[i][k] = LaurentPoly::zero(rank);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_delta() -> LaurentPoly {
        LaurentPoly::uni(&[(1, 1), (0, -1), (-1, 1)])
    }

    fn fig8_delta() -> LaurentPoly {
        LaurentPoly::uni(&[(1, -1), (0, 3), (-1, -1)])
    }

    #[test]
    fn seifert_trefoil() {
        let d = alexander_from_seifert(&[vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(*d.poly(), trefoil_delta());
    }

    #[test]
    fn seifert_figure_eight() {
        let d = alexander_from_seifert(&[vec![1, 1], vec![0, -1]]).unwrap();
        assert_eq!(*d.poly(), fig8_delta());
        assert_eq!(d.poly().evaluate_at_one(), BigInt::one());
    }

    #[test]
    fn seifert_empty_is_unknot() {
        let d = alexander_from_seifert(&[]).unwrap();
        assert!(d.is_trivial());
    }

    #[test]
    fn seifert_shape_errors() {
        assert!(matches!(
            alexander_from_seifert(&[vec![1]]),
            Err(Error::BadSeifertShape { .. })
        ));
        assert!(matches!(
            alexander_from_seifert(&[vec![1, 2], vec![3]]),
            Err(Error::BadSeifertShape { .. })
        ));
    }

    #[test]
    fn braid_trefoil() {
        let d = alexander_from_braid(2, &[1, 1, 1]).unwrap();
        assert_eq!(*d.poly(), trefoil_delta());
    }

    #[test]
    fn braid_unknot() {
        let d = alexander_from_braid(2, &[1]).unwrap();
        assert!(d.is_trivial());
    }

    #[test]
    fn braid_figure_eight_matches_seifert() {
        let braid = alexander_from_braid(3, &[1, -2, 1, -2]).unwrap();
        let seifert = alexander_from_seifert(&[vec![1, 1], vec![0, -1]]).unwrap();
        assert_eq!(braid, seifert);
    }

    #[test]
    fn braid_rejects_bad_words() {
        assert!(matches!(
            alexander_from_braid(1, &[]),
            Err(Error::BadStrandCount { .. })
        ));
        assert!(matches!(
            alexander_from_braid(2, &[2]),
            Err(Error::BraidIndexOutOfRange { .. })
        ));
        assert!(matches!(
            alexander_from_braid(2, &[0]),
            Err(Error::BraidIndexOutOfRange { .. })
        ));
        // two-component closure
        assert!(matches!(
            alexander_from_braid(2, &[1, 1]),
            Err(Error::ClosureNotKnot { .. })
        ));
    }

    #[test]
    fn torus_examples() {
        let t23 = alexander_torus(2, 3).unwrap();
        assert_eq!(*t23.poly(), trefoil_delta());

        let t25 = alexander_torus(2, 5).unwrap();
        assert_eq!(
            *t25.poly(),
            LaurentPoly::uni(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])
        );

        assert_eq!(t23, alexander_from_braid(2, &[1, 1, 1]).unwrap());

        assert!(matches!(
            alexander_torus(2, 4),
            Err(Error::BadTorusParams { .. })
        ));
        assert!(matches!(
            alexander_torus(1, 5),
            Err(Error::BadTorusParams { .. })
        ));
    }

    #[test]
    fn symmetrize_examples() {
        let d = symmetrize(&LaurentPoly::uni(&[(2, 1), (1, -1), (0, 1)])).unwrap();
        assert_eq!(*d.poly(), trefoil_delta());

        let d = symmetrize(&LaurentPoly::uni(&[(2, -1), (1, 3), (0, -1)])).unwrap();
        assert_eq!(*d.poly(), fig8_delta());

        let d = symmetrize(&LaurentPoly::one(1)).unwrap();
        assert!(d.is_trivial());

        assert!(matches!(
            symmetrize(&LaurentPoly::uni(&[(1, 1), (0, 1)])),
            Err(Error::NotAlexander { .. })
        ));
        // value -1 but odd span: no bar-fixed representative exists
        assert!(matches!(
            symmetrize(&LaurentPoly::uni(&[(1, 1), (0, -2)])),
            Err(Error::NotSymmetrizable)
        ));
        assert!(matches!(
            symmetrize(&LaurentPoly::zero(1)),
            Err(Error::ZeroInput(_))
        ));
    }

    #[test]
    fn symmetrize_flips_sign_for_value_minus_one() {
        // -(t^2 - t + 1): value at 1 is -1, representative gets negated
        let p = LaurentPoly::uni(&[(2, -1), (1, 1), (0, -1)]);
        let d = symmetrize(&p).unwrap();
        assert_eq!(*d.poly(), trefoil_delta());
        assert_eq!(d.poly().evaluate_at_one(), BigInt::one());
    }

    #[test]
    fn alexander_invariants_hold_on_catalog() {
        for (name, input) in catalog() {
            let d = alexander(&input).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(d.poly().bar(), *d.poly(), "{name} not bar-fixed");
            assert!(d.poly().evaluate_at_one().is_one(), "{name} value at 1");
        }
    }

    #[test]
    fn bar_closed_factorization_trefoil() {
        let d = alexander_torus(2, 3).unwrap();
        let paired = bar_closed_factorization(&d).unwrap();
        assert_eq!(paired.pairs.len(), 1);
        assert!(matches!(
            &paired.pairs[0],
            BarPair::SelfConjugate { multiplicity: 1, .. }
        ));
    }

    #[test]
    fn bar_closed_factorization_torus_3_4() {
        let d = alexander_torus(3, 4).unwrap();
        let paired = bar_closed_factorization(&d).unwrap();
        // Delta = (t^2 - t + 1)(t^4 - t^2 + 1) up to the symmetrizing unit
        assert_eq!(paired.factorization.factors().len(), 2);
        assert!(paired
            .pairs
            .iter()
            .all(|p| matches!(p, BarPair::SelfConjugate { .. })));
    }

    #[test]
    fn bar_closed_factorization_swapped_pair() {
        // (t - 2)(t^-1 - 2) symmetrizes to 5 - 2t - 2t^-1 with classes
        // {t - 2} and {2t - 1} swapped by bar.
        let a = LaurentPoly::uni(&[(1, 1), (0, -2)]);
        let prod = a.mul(&a.bar()).unwrap();
        let d = symmetrize(&prod).unwrap();
        let paired = bar_closed_factorization(&d).unwrap();
        assert_eq!(paired.pairs.len(), 1);
        match &paired.pairs[0] {
            BarPair::Conjugate {
                factor,
                bar_factor,
                multiplicity,
            } => {
                assert_eq!(*multiplicity, 1);
                assert_eq!(*factor, LaurentPoly::uni(&[(1, 1), (0, -2)]));
                assert_eq!(*bar_factor, LaurentPoly::uni(&[(1, 2), (0, -1)]));
            }
            other => panic!("expected a swapped pair, got {other:?}"),
        }
    }

    #[test]
    fn connected_sum_multiplies_factors() {
        let a = alexander_torus(2, 3).unwrap();
        let b = alexander_torus(2, 5).unwrap();
        let sum = connected_sum(&a, &b).unwrap();
        let fa = factor_univariate(a.poly()).unwrap();
        let fb = factor_univariate(b.poly()).unwrap();
        let fsum = factor_univariate(sum.poly()).unwrap();
        assert_eq!(fsum.factors(), fa.mul(&fb).unwrap().factors());
    }
}
