//! The invariant Gamma_{alpha,phi}: total multiplicity, in the factorization
//! of x, of irreducible factors of the form phi^n(alpha) or phi^n(alpha-bar)
//! over all integers n.
//!
//! The orbit over n is truncated soundly: a divisor's per-coordinate support
//! width can never exceed the dividend's (widths add under multiplication),
//! so candidates are scanned while their widths fit, with a short grace
//! window for transient dips, and the scan stops outright when the orbit
//! revisits a canonical associate (finite-order phi).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::laurent::{ExponentVector, LaurentPoly};

/// Consecutive width-exceeding orbit steps tolerated before a direction is
/// abandoned; covers transient width dips of hyperbolic automorphisms.
const ORBIT_GRACE: usize = 16;

/// Hard cap on orbit steps per direction.
const ORBIT_CAP: usize = 10_000;

/// A ring automorphism of Z[Z^k] given by the linear extension of a
/// determinant +/-1 integer matrix acting on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    matrix: Vec<Vec<i64>>,
    inverse: Vec<Vec<i64>>,
    det: i8,
}

impl Automorphism {
    /// Validates that `matrix` is square with determinant +1 or -1 and
    /// precomputes the integer inverse.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            if row.len() != n {
                return Err(Error::NonSquareMatrix {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        let big: Vec<Vec<BigInt>> = matrix
            .iter()
            .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        let det = int_det(big.clone());
        let det: i8 = if det.is_one() {
            1
        } else if (-&det).is_one() {
            -1
        } else {
            return Err(Error::NotUnimodular {
                det: det.to_string(),
            });
        };
        let inverse = unimodular_inverse(&big, det)?;
        Ok(Automorphism {
            matrix,
            inverse,
            det,
        })
    }

    pub fn identity(size: usize) -> Self {
        let mut matrix = vec![vec![0i64; size]; size];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        Automorphism {
            matrix: matrix.clone(),
            inverse: matrix,
            det: 1,
        }
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn det(&self) -> i8 {
        self.det
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &e)| e == i64::from(i == j)))
    }

    /// The inverse automorphism.
    pub fn inverse(&self) -> Self {
        Automorphism {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            det: self.det,
        }
    }

    /// Matrix action on an exponent vector (column convention).
    pub fn apply_vector(&self, v: &ExponentVector) -> Result<ExponentVector> {
        apply_matrix(&self.matrix, v)
    }

    pub fn apply_vector_inverse(&self, v: &ExponentVector) -> Result<ExponentVector> {
        apply_matrix(&self.inverse, v)
    }

    /// The induced ring automorphism: exponents map through the matrix,
    /// coefficients are untouched.
    pub fn apply(&self, x: &LaurentPoly) -> Result<LaurentPoly> {
        if self.size() != x.rank() {
            return Err(Error::SizeMismatch {
                size: self.size(),
                rank: x.rank(),
            });
        }
        LaurentPoly::from_terms(
            x.rank(),
            x.terms()
                .map(|(e, c)| Ok((self.apply_vector(e)?, c.clone())))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn apply_inverse(&self, x: &LaurentPoly) -> Result<LaurentPoly> {
        self.inverse().apply(x)
    }
}

fn apply_matrix(m: &[Vec<i64>], v: &ExponentVector) -> Result<ExponentVector> {
    if m.len() != v.len() {
        return Err(Error::SizeMismatch {
            size: m.len(),
            rank: v.len(),
        });
    }
    let mut out = Vec::with_capacity(m.len());
    for row in m {
        let mut acc: i128 = 0;
        for (&a, &x) in row.iter().zip(v.entries()) {
            acc += a as i128 * x as i128;
        }
        out.push(i64::try_from(acc).map_err(|_| Error::ExponentOverflow)?);
    }
    Ok(ExponentVector::new(out))
}

/// Fraction-free Bareiss determinant over Z.
fn int_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Integer inverse of a determinant +/-1 matrix via the adjugate.
fn unimodular_inverse(m: &[Vec<BigInt>], det: i8) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    let det = BigInt::from(det);
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // cofactor C_ji for the (i, j) entry of the inverse
            let minor: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let mut cof = int_det(minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            let entry = cof * &det;
            inv[i][j] = i64::try_from(&entry).map_err(|_| Error::ExponentOverflow)?;
        }
    }
    Ok(inv)
}

/// Which side of the conjugate pair a witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessSide {
    Alpha,
    Bar,
    /// alpha and alpha-bar are associates; the class is counted once.
    Merged,
}

/// One orbit member that actually divides x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaWitness {
    pub n: i64,
    pub side: WitnessSide,
    pub multiplicity: u64,
}

/// Value of Gamma together with the witnesses found; the value is the sum of
/// the witness multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub value: u64,
    pub witnesses: Vec<GammaWitness>,
}

fn ensure_gamma_inputs(alpha: &LaurentPoly, x: &LaurentPoly) -> Result<()> {
    if x.is_zero() {
        return Err(Error::ZeroInput("gamma"));
    }
    if alpha.is_zero() {
        return Err(Error::ZeroInput("gamma alpha"));
    }
    if alpha.is_unit() {
        return Err(Error::UnitInput("gamma alpha"));
    }
    if alpha.rank() != x.rank() {
        return Err(Error::RankMismatch {
            left: alpha.rank(),
            right: x.rank(),
        });
    }
    Ok(())
}

fn ensure_irreducible(alpha: &LaurentPoly) -> Result<()> {
    if is_irreducible(alpha)? {
        Ok(())
    } else {
        Err(Error::ReducibleAlpha)
    }
}

/// Largest m with alpha^m dividing x up to units. `alpha` must be
/// irreducible; the check is skipped by the `_certified` variant.
pub fn multiplicity(alpha: &LaurentPoly, x: &LaurentPoly) -> Result<u64> {
    ensure_gamma_inputs(alpha, x)?;
    ensure_irreducible(alpha)?;
    multiplicity_certified(alpha, x)
}

/// As [`multiplicity`], trusting the caller that alpha is irreducible.
/// Divisibility is decided by repeated exact division against the canonical
/// associate, independent of any factorization routine.
pub fn multiplicity_certified(alpha: &LaurentPoly, x: &LaurentPoly) -> Result<u64> {
    ensure_gamma_inputs(alpha, x)?;
    let a = alpha.canonical()?;
    let mut cur = x.clone();
    let mut m = 0u64;
    while let Some(q) = cur.exact_div(&a)? {
        cur = q;
        m += 1;
    }
    Ok(m)
}

/// Gamma_{alpha,id}: multiplicity of alpha plus multiplicity of alpha-bar,
/// counted once when the two are associates.
pub fn gamma_id(alpha: &LaurentPoly, x: &LaurentPoly) -> Result<GammaResult> {
    ensure_gamma_inputs(alpha, x)?;
    ensure_irreducible(alpha)?;
    gamma_id_certified(alpha, x)
}

pub fn gamma_id_certified(alpha: &LaurentPoly, x: &LaurentPoly) -> Result<GammaResult> {
    ensure_gamma_inputs(alpha, x)?;
    let a = alpha.canonical()?;
    let ab = alpha.bar().canonical()?;
    let mut witnesses = Vec::new();
    if a == ab {
        let m = multiplicity_certified(&a, x)?;
        if m > 0 {
            witnesses.push(GammaWitness {
                n: 0,
                side: WitnessSide::Merged,
                multiplicity: m,
            });
        }
    } else {
        for (side, cls) in [(WitnessSide::Alpha, &a), (WitnessSide::Bar, &ab)] {
            let m = multiplicity_certified(cls, x)?;
            if m > 0 {
                witnesses.push(GammaWitness {
                    n: 0,
                    side,
                    multiplicity: m,
                });
            }
        }
    }
    Ok(GammaResult {
        value: witnesses.iter().map(|w| w.multiplicity).sum(),
        witnesses,
    })
}

/// Gamma_{alpha,phi}: total multiplicity over the phi-orbit of alpha and
/// alpha-bar.
pub fn gamma(alpha: &LaurentPoly, phi: &Automorphism, x: &LaurentPoly) -> Result<GammaResult> {
    ensure_gamma_inputs(alpha, x)?;
    ensure_irreducible(alpha)?;
    gamma_certified(alpha, phi, x)
}

pub fn gamma_certified(
    alpha: &LaurentPoly,
    phi: &Automorphism,
    x: &LaurentPoly,
) -> Result<GammaResult> {
    ensure_gamma_inputs(alpha, x)?;
    if phi.size() != x.rank() {
        return Err(Error::SizeMismatch {
            size: phi.size(),
            rank: x.rank(),
        });
    }

    let x_widths = x.widths().expect("x nonzero");
    let mut seen: BTreeSet<LaurentPoly> = BTreeSet::new();
    let mut counted: BTreeSet<LaurentPoly> = BTreeSet::new();
    let mut witnesses: Vec<GammaWitness> = Vec::new();

    for backward in [false, true] {
        let mut cur = if backward {
            phi.apply_inverse(alpha)?
        } else {
            alpha.clone()
        };
        let mut n: i64 = if backward { -1 } else { 0 };
        let mut excess = 0usize;
        let mut steps = 0usize;
        loop {
            steps += 1;
            if steps > ORBIT_CAP {
                return Err(Error::OrbitScanOverflow { cap: ORBIT_CAP });
            }
            let can = cur.canonical()?;
            if !seen.insert(can.clone()) {
                break;
            }
            let widths = can.widths().expect("orbit member nonzero");
            let fits = widths.iter().zip(&x_widths).all(|(w, wx)| w <= wx);
            if fits {
                excess = 0;
                let can_bar = cur.bar().canonical()?;
                if can == can_bar {
                    if counted.insert(can.clone()) {
                        let m = multiplicity_certified(&can, x)?;
                        if m > 0 {
                            witnesses.push(GammaWitness {
                                n,
                                side: WitnessSide::Merged,
                                multiplicity: m,
                            });
                        }
                    }
                } else {
                    for (side, cls) in [(WitnessSide::Alpha, &can), (WitnessSide::Bar, &can_bar)] {
                        if counted.insert(cls.clone()) {
                            let m = multiplicity_certified(cls, x)?;
                            if m > 0 {
                                witnesses.push(GammaWitness {
                                    n,
                                    side,
                                    multiplicity: m,
                                });
                            }
                        }
                    }
                }
            } else {
                excess += 1;
                if excess > ORBIT_GRACE {
                    break;
                }
            }
            if backward {
                cur = phi.apply_inverse(&cur)?;
                n -= 1;
            } else {
                cur = phi.apply(&cur)?;
                n += 1;
            }
        }
    }

    Ok(GammaResult {
        value: witnesses.iter().map(|w| w.multiplicity).sum(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shear() -> Automorphism {
        Automorphism::new(vec![vec![1, 1], vec![0, 1]]).unwrap()
    }

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn rank2(terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            2,
            terms
                .iter()
                .map(|(e, c)| (ev(e), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn automorphism_requires_unimodular() {
        assert!(Automorphism::new(vec![vec![2, 0], vec![0, 1]]).is_err());
        assert!(Automorphism::new(vec![vec![1, 0, 0], vec![0, 1, 0]]).is_err());
        assert!(Automorphism::new(vec![vec![0, -1], vec![1, 0]]).is_ok());
    }

    #[test]
    fn apply_shear_on_monomial() {
        // [[1,1],[0,1]] sends y = x^(0,1) to xy = x^(1,1)
        let phi = shear();
        let y = rank2(&[(&[0, 1], 1)]);
        assert_eq!(phi.apply(&y).unwrap(), rank2(&[(&[1, 1], 1)]));

        let id = Automorphism::identity(2);
        let p = rank2(&[(&[1, 0], 2), (&[0, -1], -3)]);
        assert_eq!(id.apply(&p).unwrap(), p);
    }

    #[test]
    fn apply_is_ring_homomorphism() {
        let phi = shear();
        let a = rank2(&[(&[1, 0], 1), (&[0, 1], -2)]);
        let b = rank2(&[(&[-1, 1], 3), (&[0, 0], 1)]);
        assert_eq!(
            phi.apply(&a.mul(&b).unwrap()).unwrap(),
            phi.apply(&a).unwrap().mul(&phi.apply(&b).unwrap()).unwrap()
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let phi = Automorphism::new(vec![vec![2, 1], vec![1, 1]]).unwrap();
        let p = rank2(&[(&[3, -2], 5), (&[0, 1], -1)]);
        assert_eq!(phi.apply_inverse(&phi.apply(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn multiplicity_examples() {
        // (t-1)^2 (t+1)
        let t_minus_1 = LaurentPoly::uni(&[(1, 1), (0, -1)]);
        let t_plus_1 = LaurentPoly::uni(&[(1, 1), (0, 1)]);
        let x = t_minus_1
            .pow(2)
            .unwrap()
            .mul(&t_plus_1)
            .unwrap();
        assert_eq!(multiplicity(&t_minus_1, &x).unwrap(), 2);

        let alpha = LaurentPoly::uni(&[(2, 1), (1, -1), (0, 1)]);
        assert_eq!(multiplicity(&alpha, &t_plus_1).unwrap(), 0);

        assert!(matches!(
            multiplicity(&t_minus_1, &LaurentPoly::zero(1)),
            Err(Error::ZeroInput(_))
        ));
        let reducible = LaurentPoly::uni(&[(2, 1), (0, -1)]);
        assert!(matches!(
            multiplicity(&reducible, &x),
            Err(Error::ReducibleAlpha)
        ));
        assert!(matches!(
            multiplicity(&LaurentPoly::uni(&[(1, -1)]), &x),
            Err(Error::UnitInput(_))
        ));
    }

    #[test]
    fn gamma_id_merged_when_bar_fixed() {
        let alpha = LaurentPoly::uni(&[(1, 1), (0, -1), (-1, 1)]);
        let g = gamma_id(&alpha, &alpha).unwrap();
        assert_eq!(g.value, 1);
        assert_eq!(g.witnesses.len(), 1);
        assert_eq!(g.witnesses[0].side, WitnessSide::Merged);
    }

    #[test]
    fn gamma_id_on_a_unit_is_zero() {
        let alpha = LaurentPoly::uni(&[(1, 1), (0, -2)]);
        let g = gamma_id(&alpha, &LaurentPoly::one(1)).unwrap();
        assert_eq!(g.value, 0);
        assert!(g.witnesses.is_empty());
    }

    #[test]
    fn gamma_id_counts_both_sides() {
        // (t - 2)(t^-1 - 2) = 5 - 2t - 2t^-1
        let alpha = LaurentPoly::uni(&[(1, 1), (0, -2)]);
        let x = alpha.mul(&alpha.bar()).unwrap();
        assert_eq!(x, LaurentPoly::uni(&[(0, 5), (1, -2), (-1, -2)]));
        let g = gamma_id(&alpha, &x).unwrap();
        assert_eq!(g.value, 2);
        assert_eq!(g.witnesses.len(), 2);
    }

    #[test]
    fn gamma_identity_matches_gamma_id() {
        let alpha = LaurentPoly::uni(&[(1, 1), (0, -2)]);
        let x = alpha
            .pow(2)
            .unwrap()
            .mul(&LaurentPoly::uni(&[(1, 1), (0, 1)]))
            .unwrap();
        let id = Automorphism::identity(1);
        let via_orbit = gamma(&alpha, &id, &x).unwrap();
        let direct = gamma_id(&alpha, &x).unwrap();
        assert_eq!(via_orbit.value, direct.value);
    }

    #[test]
    fn gamma_line_supported_collapses_to_id() {
        // alpha = x - 1 + x^-1 on the e1-axis, beta = alpha^2, shear phi
        let alpha = rank2(&[(&[1, 0], 1), (&[0, 0], -1), (&[-1, 0], 1)]);
        let beta = alpha.pow(2).unwrap();
        let phi = shear();
        let g = gamma(&alpha, &phi, &beta).unwrap();
        assert_eq!(g.value, 2);
        assert_eq!(g.value, gamma_id(&alpha, &beta).unwrap().value);
    }

    #[test]
    fn gamma_finite_order_orbit() {
        // phi of order 4, x = alpha * phi(alpha) with alpha = x1 - 2
        let phi = Automorphism::new(vec![vec![0, -1], vec![1, 0]]).unwrap();
        let alpha = rank2(&[(&[1, 0], 1), (&[0, 0], -2)]);
        let x = alpha.mul(&phi.apply(&alpha).unwrap()).unwrap();
        let g = gamma(&alpha, &phi, &x).unwrap();
        assert_eq!(g.value, 2);
        assert!(g.witnesses.len() >= 2);
    }

    #[test]
    fn gamma_survives_transient_width_dip() {
        // alpha sits along a direction the hyperbolic phi initially shrinks:
        // the n=0 candidate is wider than x = phi(alpha), yet the n=1 witness
        // must still be found.
        let phi = Automorphism::new(vec![vec![2, 1], vec![1, 1]]).unwrap();
        let alpha = rank2(&[(&[1, -1], 1), (&[0, 0], 1)]);
        let x = phi.apply(&alpha).unwrap();
        let g = gamma_certified(&alpha, &phi, &x).unwrap();
        assert_eq!(g.value, 1);
        assert_eq!(g.witnesses[0].n, 1);
    }
}
