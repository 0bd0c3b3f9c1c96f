//! Randomized executable forms of the three Gamma identities, runnable from
//! the CLI: (i) additivity over products, (ii) invariance under the
//! automorphism itself, (iii) collapse to the identity automorphism for
//! line-supported arguments. Inputs are constructed with planted orbit
//! factors so the identities are exercised with nonzero values, not just
//! 0 = 0.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gamma::{gamma_certified, gamma_id_certified, Automorphism};
use crate::laurent::{ExponentVector, LaurentPoly, Unit};

#[derive(Debug, Clone, Copy)]
pub struct PropsConfig {
    pub iterations: u32,
    pub seed: u64,
}

impl Default for PropsConfig {
    fn default() -> Self {
        PropsConfig {
            iterations: 200,
            seed: 7,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: u32,
    pub violations: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct PropsReport {
    pub suites: Vec<SuiteResult>,
}

impl PropsReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// Runs the three suites at the given iteration count and seed.
pub fn run_properties(cfg: &PropsConfig) -> Result<PropsReport> {
    let pool = gl2_pool(3);
    Ok(PropsReport {
        suites: vec![
            additivity_suite(cfg, &pool)?,
            invariance_suite(cfg, &pool)?,
            line_collapse_suite(cfg, &pool)?,
        ],
    })
}

/// All of GL(2, Z) with entries bounded by `bound`, in a fixed enumeration
/// order.
pub fn gl2_pool(bound: i64) -> Vec<Automorphism> {
    let mut pool = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    let det = a * d - b * c;
                    if det == 1 || det == -1 {
                        pool.push(
                            Automorphism::new(vec![vec![a, b], vec![c, d]])
                                .expect("det checked"),
                        );
                    }
                }
            }
        }
    }
    pool
}

fn irreducible_pool() -> Vec<LaurentPoly> {
    vec![
        LaurentPoly::uni(&[(1, 1), (0, -2)]),
        LaurentPoly::uni(&[(1, 1), (0, 2)]),
        LaurentPoly::uni(&[(1, 2), (0, -1)]),
        LaurentPoly::uni(&[(2, 1), (1, -1), (0, 1)]),
        LaurentPoly::uni(&[(2, 1), (1, 1), (0, 1)]),
        LaurentPoly::uni(&[(2, 1), (0, 1)]),
        LaurentPoly::uni(&[(2, 1), (1, -1), (0, -1)]),
        LaurentPoly::uni(&[(3, 1), (1, -1), (0, -1)]),
    ]
}

fn directions() -> Vec<ExponentVector> {
    [
        vec![1, 0],
        vec![0, 1],
        vec![1, 1],
        vec![1, -1],
        vec![2, 1],
        vec![1, 2],
        vec![1, -2],
    ]
    .into_iter()
    .map(ExponentVector::new)
    .collect()
}

fn embed(uni: &LaurentPoly, dir: &ExponentVector) -> Result<LaurentPoly> {
    uni.substitute_monomial(dir, 2)
}

fn phi_power_apply(phi: &Automorphism, n: i64, x: &LaurentPoly) -> Result<LaurentPoly> {
    let mut out = x.clone();
    if n >= 0 {
        for _ in 0..n {
            out = phi.apply(&out)?;
        }
    } else {
        for _ in 0..-n {
            out = phi.apply_inverse(&out)?;
        }
    }
    Ok(out)
}

fn random_unit(rng: &mut ChaCha8Rng) -> Unit {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let exp = ExponentVector::new(vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
    Unit::new(sign, exp)
}

/// A nonzero element carrying a few planted orbit members of alpha (and of
/// an unrelated irreducible), times a random unit.
fn orbit_product(
    rng: &mut ChaCha8Rng,
    phi: &Automorphism,
    alpha: &LaurentPoly,
    extra: &LaurentPoly,
) -> Result<LaurentPoly> {
    let mut acc = random_unit(rng).to_poly();
    for _ in 0..rng.gen_range(0..=2u32) {
        let n = rng.gen_range(-2..=2i64);
        let member = phi_power_apply(phi, n, alpha)?;
        let member = if rng.gen_bool(0.5) {
            member.bar()
        } else {
            member
        };
        acc = acc.mul(&member)?;
    }
    if rng.gen_bool(0.4) {
        acc = acc.mul(extra)?;
    }
    Ok(acc)
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

/// (i): Gamma(ab) = Gamma(a) + Gamma(b).
fn additivity_suite(cfg: &PropsConfig, pool: &[Automorphism]) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let irr = irreducible_pool();
    let dirs = directions();
    let mut violations = Vec::new();
    for case in 0..cfg.iterations {
        let phi = pick(&mut rng, pool).clone();
        let dir = pick(&mut rng, &dirs).clone();
        let alpha = embed(pick(&mut rng, &irr), &dir)?;
        let extra_dir = pick(&mut rng, &dirs).clone();
        let extra = embed(pick(&mut rng, &irr), &extra_dir)?;
        let a = orbit_product(&mut rng, &phi, &alpha, &extra)?;
        let b = orbit_product(&mut rng, &phi, &alpha, &extra)?;
        let ab = a.mul(&b)?;
        let lhs = gamma_certified(&alpha, &phi, &ab)?.value;
        let rhs =
            gamma_certified(&alpha, &phi, &a)?.value + gamma_certified(&alpha, &phi, &b)?.value;
        if lhs != rhs {
            violations.push(format!(
                "case {case}: Gamma(ab)={lhs} but Gamma(a)+Gamma(b)={rhs} for alpha={alpha}"
            ));
        }
    }
    Ok(SuiteResult {
        name: "additivity",
        cases: cfg.iterations,
        violations,
    })
}

/// (ii): Gamma(phi(x)) = Gamma(x).
fn invariance_suite(cfg: &PropsConfig, pool: &[Automorphism]) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    let irr = irreducible_pool();
    let dirs = directions();
    let mut violations = Vec::new();
    for case in 0..cfg.iterations {
        let phi = pick(&mut rng, pool).clone();
        let dir = pick(&mut rng, &dirs).clone();
        let alpha = embed(pick(&mut rng, &irr), &dir)?;
        let extra = embed(pick(&mut rng, &irr), pick(&mut rng, &dirs))?;
        let x = orbit_product(&mut rng, &phi, &alpha, &extra)?;
        let phi_x = phi.apply(&x)?;
        let lhs = gamma_certified(&alpha, &phi, &phi_x)?.value;
        let rhs = gamma_certified(&alpha, &phi, &x)?.value;
        if lhs != rhs {
            violations.push(format!(
                "case {case}: Gamma(phi(x))={lhs} but Gamma(x)={rhs} for alpha={alpha}"
            ));
        }
    }
    Ok(SuiteResult {
        name: "invariance",
        cases: cfg.iterations,
        violations,
    })
}

/// (iii): Gamma_{alpha,phi}(beta) = Gamma_{alpha,id}(beta) when alpha and
/// beta live on a common lattice line and alpha has at least two terms.
fn line_collapse_suite(cfg: &PropsConfig, pool: &[Automorphism]) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(3));
    let irr = irreducible_pool();
    let dirs = directions();
    let mut violations = Vec::new();
    for case in 0..cfg.iterations {
        let phi = pick(&mut rng, pool).clone();
        let dir = pick(&mut rng, &dirs).clone();
        let alpha_uni = pick(&mut rng, &irr).clone();
        let alpha = embed(&alpha_uni, &dir)?;

        // beta: a product of line irreducibles including a planted power
        // of alpha or its bar image
        let mut beta_uni = LaurentPoly::uni(&[(rng.gen_range(-2..=2), 1)]);
        for _ in 0..rng.gen_range(0..=2u32) {
            let f = pick(&mut rng, &irr);
            beta_uni = beta_uni.mul(f)?;
        }
        for _ in 0..rng.gen_range(0..=2u32) {
            let f = if rng.gen_bool(0.5) {
                alpha_uni.bar()
            } else {
                alpha_uni.clone()
            };
            beta_uni = beta_uni.mul(&f)?;
        }
        let beta = embed(&beta_uni, &dir)?;

        let lhs = gamma_certified(&alpha, &phi, &beta)?.value;
        let rhs = gamma_id_certified(&alpha, &beta)?.value;
        if lhs != rhs {
            violations.push(format!(
                "case {case}: Gamma_phi(beta)={lhs} but Gamma_id(beta)={rhs} for alpha={alpha}, beta={beta}"
            ));
        }
    }
    Ok(SuiteResult {
        name: "line-collapse",
        cases: cfg.iterations,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_contains_classics() {
        let pool = gl2_pool(3);
        assert!(pool.len() > 100);
        let id = Automorphism::identity(2);
        assert!(pool.iter().any(|m| *m == id));
        let rot = Automorphism::new(vec![vec![0, -1], vec![1, 0]]).unwrap();
        assert!(pool.iter().any(|m| *m == rot));
    }

    #[test]
    fn short_run_is_clean_and_deterministic() {
        let cfg = PropsConfig {
            iterations: 40,
            seed: 7,
        };
        let report = run_properties(&cfg).unwrap();
        assert!(report.passed(), "{:?}", report);
        let again = run_properties(&cfg).unwrap();
        assert_eq!(
            report.suites.iter().map(|s| s.cases).collect::<Vec<_>>(),
            again.suites.iter().map(|s| s.cases).collect::<Vec<_>>()
        );
    }

    #[test]
    fn irreducible_pool_is_irreducible() {
        for p in irreducible_pool() {
            assert!(crate::factor::is_irreducible(&p).unwrap(), "{p}");
            assert!(p.num_terms() >= 2, "{p}");
        }
    }
}
