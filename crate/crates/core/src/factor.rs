//! Unique factorization into irreducibles for the fragment of Z[Z^k] the
//! distinguisher needs: complete factorization of univariate and
//! line-supported elements, via squarefree decomposition, mod-p
//! factorization, Hensel lifting and Zassenhaus subset recombination.
//!
//! Genuinely multivariate supports are rejected; the gamma module covers
//! those through divisibility alone.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, LaurentPoly, Unit};
use crate::unipoly::{factor_squarefree_modp, squarefree_decomposition, IntPoly, ModPoly};

/// Hard cap on the degree accepted by the univariate pipeline; subset
/// recombination is exponential in the number of modular factors.
pub const DEGREE_CAP: usize = 64;

/// Knobs for the factorization pipeline. The seed feeds the equal-degree
/// splitting step, which is the only randomized sub-step; identical seeds
/// give bit-identical factorizations.
#[derive(Debug, Clone, Copy)]
pub struct FactorConfig {
    pub seed: u64,
    pub degree_cap: usize,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            seed: 0x5eed,
            degree_cap: DEGREE_CAP,
        }
    }
}

/// A canonical irreducible factor with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEntry {
    pub poly: LaurentPoly,
    pub multiplicity: u32,
}

/// unit * prod factor^multiplicity, factors canonical irreducible and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    unit: Unit,
    factors: Vec<FactorEntry>,
}

impl Factorization {
    pub fn new(unit: Unit, entries: impl IntoIterator<Item = (LaurentPoly, u32)>) -> Self {
        let mut map: BTreeMap<LaurentPoly, u32> = BTreeMap::new();
        for (poly, mult) in entries {
            if mult == 0 {
                continue;
            }
            *map.entry(poly).or_insert(0) += mult;
        }
        Factorization {
            unit,
            factors: map
                .into_iter()
                .map(|(poly, multiplicity)| FactorEntry { poly, multiplicity })
                .collect(),
        }
    }

    pub fn unit(&self) -> &Unit {
        &self.unit
    }

    pub fn factors(&self) -> &[FactorEntry] {
        &self.factors
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.factors.iter().map(|f| f.multiplicity as u64).sum()
    }

    /// Re-expands to the original element, exactly.
    pub fn expand(&self) -> Result<LaurentPoly> {
        let mut acc = self.unit.to_poly();
        for entry in &self.factors {
            acc = acc.mul(&entry.poly.pow(entry.multiplicity)?)?;
        }
        Ok(acc)
    }

    /// Factorization of a product: multiset union with units composed.
    pub fn mul(&self, other: &Factorization) -> Result<Factorization> {
        Ok(Factorization::new(
            self.unit.mul(&other.unit)?,
            self.factors
                .iter()
                .chain(other.factors.iter())
                .map(|e| (e.poly.clone(), e.multiplicity)),
        ))
    }
}

/// Splits a univariate element as content * primitive part, the sign chosen
/// so the primitive part has a positive leading (lex-greatest) coefficient.
pub fn content_primitive(p: &LaurentPoly) -> Result<(BigInt, LaurentPoly)> {
    if p.rank() != 1 {
        return Err(Error::NotUnivariate { rank: p.rank() });
    }
    if p.is_zero() {
        return Err(Error::ZeroInput("content_primitive"));
    }
    let mut content = BigInt::zero();
    for (_, c) in p.terms() {
        content = content.gcd(c);
    }
    let leading = p.terms().next_back().map(|(_, c)| c.clone()).unwrap();
    if leading.is_negative() {
        content = -content;
    }
    let primitive = LaurentPoly::from_terms(
        1,
        p.terms().map(|(e, c)| (e.clone(), c / &content)),
    )?;
    Ok((content, primitive))
}

/// Complete factorization of a univariate element into Z-irreducible
/// canonical factors (constant primes included), deterministic.
pub fn factor_univariate(p: &LaurentPoly) -> Result<Factorization> {
    factor_univariate_with(p, &FactorConfig::default())
}

pub fn factor_univariate_with(p: &LaurentPoly, cfg: &FactorConfig) -> Result<Factorization> {
    if p.rank() != 1 {
        return Err(Error::NotUnivariate { rank: p.rank() });
    }
    if p.is_zero() {
        return Err(Error::ZeroInput("factor_univariate"));
    }
    let (unit, canon) = p.normalize()?;
    let poly = IntPoly::from_laurent(&canon).expect("canonical rank-1 support is nonnegative");

    let mut entries: Vec<(LaurentPoly, u32)> = Vec::new();
    let content = poly.content();
    let prim = poly.div_scalar_exact(&content);
    for (prime, mult) in factor_integer(&content) {
        entries.push((LaurentPoly::constant(1, prime), mult));
    }

    if let Some(deg) = prim.degree() {
        if deg > cfg.degree_cap {
            return Err(Error::DegreeCapExceeded {
                degree: deg,
                cap: cfg.degree_cap,
            });
        }
        if deg > 0 {
            for (part, mult) in squarefree_decomposition(&prim) {
                for irr in zassenhaus(&part, cfg)? {
                    entries.push((irr.to_laurent(), mult as u32));
                }
            }
        }
    }

    Ok(Factorization::new(unit, entries))
}

/// Factorization of an element supported on a lattice line: parametrize the
/// line by its primitive direction, factor the univariate image, map back.
pub fn factor_line(x: &LaurentPoly) -> Result<Factorization> {
    factor_line_with(x, &FactorConfig::default())
}

pub fn factor_line_with(x: &LaurentPoly, cfg: &FactorConfig) -> Result<Factorization> {
    if x.is_zero() {
        return Err(Error::ZeroInput("factor_line"));
    }
    if x.rank() == 1 {
        return factor_univariate_with(x, cfg);
    }
    if x.num_terms() == 1 {
        // +/- c * monomial: the unit carries the monomial and sign, the
        // constant factors into primes.
        let (unit, canon) = x.normalize()?;
        let c = canon.evaluate_at_one();
        let entries = factor_integer(&c)
            .into_iter()
            .map(|(prime, mult)| (LaurentPoly::constant(x.rank(), prime), mult));
        return Ok(Factorization::new(unit, entries));
    }

    let (base, dir, steps) = support_line(x).ok_or(Error::NonCollinearSupport)?;
    let uni = LaurentPoly::from_terms(
        1,
        steps
            .iter()
            .map(|(n, c)| (ExponentVector::new(vec![*n]), c.clone())),
    )?;
    let fact = factor_univariate_with(&uni, cfg)?;

    // x = X^base * uni(X^dir); push every univariate piece through the
    // substitution and re-canonicalize.
    let sub_unit_poly = fact
        .unit()
        .to_poly()
        .substitute_monomial(&dir, x.rank())?;
    let mut unit = sub_unit_poly
        .as_unit()
        .expect("image of a unit is a unit");
    unit = Unit::new(unit.sign(), unit.monomial().checked_add(&base)?);

    let mut entries = Vec::new();
    for entry in fact.factors() {
        if entry.poly.num_terms() == 1 {
            // constant prime factor: unchanged by substitution
            let c = entry.poly.evaluate_at_one();
            entries.push((LaurentPoly::constant(x.rank(), c), entry.multiplicity));
            continue;
        }
        let image = entry.poly.substitute_monomial(&dir, x.rank())?;
        let (w, canon) = image.normalize()?;
        for _ in 0..entry.multiplicity {
            unit = unit.mul(&w)?;
        }
        entries.push((canon, entry.multiplicity));
    }
    Ok(Factorization::new(unit, entries))
}

/// Factors any supported element: univariate or line-supported. Genuinely
/// multivariate supports come back as `NonCollinearSupport`.
pub fn factor_element(x: &LaurentPoly) -> Result<Factorization> {
    factor_element_with(x, &FactorConfig::default())
}

pub fn factor_element_with(x: &LaurentPoly, cfg: &FactorConfig) -> Result<Factorization> {
    if x.rank() == 1 {
        factor_univariate_with(x, cfg)
    } else {
        factor_line_with(x, cfg)
    }
}

/// Decides irreducibility where factorization is available. Errors with
/// `IrreducibilityUndecidable` on non-collinear multivariate support, which
/// tells the caller to supply the element in factored form.
pub fn is_irreducible(p: &LaurentPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroInput("is_irreducible"));
    }
    if p.is_unit() {
        return Err(Error::UnitInput("is_irreducible"));
    }
    let fact = if p.rank() == 1 {
        factor_univariate(p)?
    } else if p.num_terms() == 1 || support_line(p).is_some() {
        factor_line(p)?
    } else {
        return Err(Error::IrreducibilityUndecidable);
    };
    Ok(fact.total_multiplicity() == 1)
}

/// Finds the arithmetic-progression structure of a support: base point,
/// primitive direction (lex-positive), and the step/coefficient list.
/// `None` when the support is not collinear. Requires >= 2 terms.
pub(crate) fn support_line(
    x: &LaurentPoly,
) -> Option<(ExponentVector, ExponentVector, Vec<(i64, BigInt)>)> {
    let pts: Vec<&ExponentVector> = x.terms().map(|(e, _)| e).collect();
    if pts.len() < 2 {
        return None;
    }
    let base = pts[0].clone();
    let span = pts.last().unwrap().checked_sub(&base).ok()?;
    let g = span
        .entries()
        .iter()
        .fold(0i64, |acc, &e| num_integer::gcd(acc, e));
    debug_assert!(g > 0);
    let dir = ExponentVector::new(span.entries().iter().map(|&e| e / g).collect());
    let pivot = dir.entries().iter().position(|&e| e != 0)?;

    let mut steps = Vec::with_capacity(pts.len());
    for (e, c) in x.terms() {
        let d = e.checked_sub(&base).ok()?;
        let (n, rem) = d.entries()[pivot].div_rem(&dir.entries()[pivot]);
        if rem != 0 {
            return None;
        }
        if dir.checked_scale(n).ok()? != d {
            return None;
        }
        steps.push((n, c.clone()));
    }
    Some((base, dir, steps))
}

// ---------------------------------------------------------------------------
// Zassenhaus: squarefree primitive leading-positive input over Z.
// ---------------------------------------------------------------------------

fn zassenhaus(f: &IntPoly, cfg: &FactorConfig) -> Result<Vec<IntPoly>> {
    let n = f.degree().expect("nonzero squarefree part");
    debug_assert!(n >= 1);
    if n == 1 {
        return Ok(vec![f.clone()]);
    }

    let (p, f_p) = choose_prime(f)?;
    let modular = factor_squarefree_modp(&f_p.monic(), cfg.seed);
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }

    let bound = mignotte_bound(f);
    let p_big = BigInt::from(p);
    let mut modulus = p_big.clone();
    let target = &bound * 2;
    while modulus <= target {
        modulus *= &p_big;
    }

    let lifted = hensel_tree(f, &modular, p, &modulus);
    Ok(recombine(f, lifted, &modulus))
}

/// Smallest prime that keeps the leading and trailing coefficients alive and
/// the reduction squarefree.
fn choose_prime(f: &IntPoly) -> Result<(u64, ModPoly)> {
    let lc = f.lc();
    let tc = f
        .coeffs
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero polynomial")
        .clone();
    let mut p: u64 = 2;
    let mut tried = 0u32;
    while tried < 25_000 {
        if (&lc % p).is_zero() || (&tc % p).is_zero() {
            p = next_prime(p);
            tried += 1;
            continue;
        }
        let f_p = ModPoly::from_int(f, p);
        let d = f_p.derivative();
        if !d.is_zero() && f_p.gcd(&d).degree() == Some(0) {
            return Ok((p, f_p));
        }
        p = next_prime(p);
        tried += 1;
    }
    Err(Error::PrimeScanExhausted)
}

fn next_prime(p: u64) -> u64 {
    let mut n = p + 1;
    loop {
        if is_prime_u64(n) {
            return n;
        }
        n += 1;
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Bound on the coefficients of lc(f)-adjusted candidate divisors.
fn mignotte_bound(f: &IntPoly) -> BigInt {
    let norm2 = f.norm2_squared().sqrt() + 1;
    (BigInt::one() << f.degree().unwrap()) * norm2 * f.lc().abs()
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs.iter().map(|c| symmetric_mod(c, m)).collect())
}

fn lift_symmetric(f: &ModPoly) -> IntPoly {
    let p = BigInt::from(f.p);
    IntPoly::new(
        f.coeffs
            .iter()
            .map(|&c| symmetric_mod(&BigInt::from(c), &p))
            .collect(),
    )
}

fn modinv_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "inverse exists modulo prime power");
    e.x.mod_floor(m)
}

/// Lifts `f = u*w (mod p)` to the same congruence mod at least `modulus`,
/// following the classical linear two-factor lift with the leading
/// coefficients of both halves pinned to lc(f).
fn hensel_lift_pair(
    f: &IntPoly,
    g_p: &ModPoly,
    h_p: &ModPoly,
    modulus: &BigInt,
) -> (IntPoly, IntPoly) {
    let p = BigInt::from(g_p.p);
    let lc = f.lc();
    let lc_u64 = {
        let r = lc.mod_floor(&p);
        use num_traits::ToPrimitive;
        r.to_u64().unwrap()
    };

    let a = f.mul_scalar(&lc);
    let u_p = g_p.monic().mul_scalar(lc_u64);
    let w_p = h_p.monic().mul_scalar(lc_u64);
    let (one, s, t) = u_p.extended_gcd(&w_p);
    debug_assert!(one.degree() == Some(0));

    let mut u_i = lift_symmetric(&u_p);
    let mut w_i = lift_symmetric(&w_p);
    *u_i.coeffs.last_mut().unwrap() = lc.clone();
    *w_i.coeffs.last_mut().unwrap() = lc.clone();

    let mut e = a.sub(&u_i.mul(&w_i));
    let mut m = p.clone();

    while !e.is_zero() && m <= *modulus {
        let e_p = ModPoly::from_int(&e.div_scalar_exact(&m), g_p.p);
        let (q, r) = e_p.mul(&s).div_rem(&w_p);
        let tau = e_p.mul(&t).add(&q.mul(&u_p));
        u_i = u_i.add(&lift_symmetric(&tau).mul_scalar(&m));
        w_i = w_i.add(&lift_symmetric(&r).mul_scalar(&m));
        e = a.sub(&u_i.mul(&w_i));
        m *= &p;
    }

    if e.is_zero() {
        // True factorization of lc*f over Z: strip the extra content.
        let content_u = u_i.content();
        let u_true = u_i.div_scalar_exact(&content_u);
        let gamma = lc.div_rem(&content_u).0;
        let w_true = if gamma.is_one() {
            w_i
        } else {
            w_i.div_scalar_exact(&gamma)
        };
        (u_true, w_true)
    } else {
        let inv_u = modinv_big(&u_i.lc(), &m);
        let inv_w = modinv_big(&w_i.lc(), &m);
        (
            reduce_symmetric(&u_i.mul_scalar(&inv_u), &m),
            reduce_symmetric(&w_i.mul_scalar(&inv_w), &m),
        )
    }
}

/// Binary-tree multifactor lift: returns one integer polynomial per modular
/// factor, each congruent to the (monic) modular factor mod `modulus`.
fn hensel_tree(f: &IntPoly, parts: &[ModPoly], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    if parts.len() == 1 {
        let lc = f.lc();
        if lc.is_one() {
            return vec![reduce_symmetric(f, modulus)];
        }
        let inv = modinv_big(&lc, modulus);
        return vec![reduce_symmetric(&f.mul_scalar(&inv), modulus)];
    }
    let (ls, rs) = parts.split_at(parts.len() / 2);
    let prod = |side: &[ModPoly]| {
        let mut g = ModPoly::one(p);
        for x in side {
            g = g.mul(x);
        }
        g
    };
    let (fg, fh) = hensel_lift_pair(f, &prod(ls), &prod(rs), modulus);
    let mut out = hensel_tree(&fg, ls, p, modulus);
    out.extend(hensel_tree(&fh, rs, p, modulus));
    out
}

/// Zassenhaus subset recombination with early exact-division trials.
fn recombine(f: &IntPoly, lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut remaining = lifted;
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;

    'sizes: while 2 * size <= remaining.len() {
        let mut combo = Combinations::new(remaining.len(), size);
        while let Some(idx) = combo.next() {
            let mut cand = IntPoly::constant(rest.lc());
            for &i in idx {
                cand = reduce_symmetric(&cand.mul(&remaining[i]), modulus);
            }
            let cand = cand.primitive_positive();
            if cand.degree().map_or(true, |d| d == 0) {
                continue;
            }
            if let Some(q) = rest.exact_div(&cand) {
                out.push(cand);
                for &i in idx.iter().rev() {
                    remaining.remove(i);
                }
                rest = q;
                continue 'sizes;
            }
        }
        size += 1;
    }

    if rest.degree().map_or(false, |d| d >= 1) {
        out.push(rest.primitive_positive());
    }
    out
}

/// Ascending-index subset iterator, deterministic.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] != i + self.n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}

// ---------------------------------------------------------------------------
// Integer factorization for contents: trial division, Miller-Rabin,
// Pollard-Brent rho with a deterministic parameter schedule.
// ---------------------------------------------------------------------------

/// Prime factorization of |n| for |n| >= 2; empty for n in {0, +1, -1}.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut m = n.abs();
    if m <= BigInt::one() {
        return vec![];
    }
    let mut out: BTreeMap<BigInt, u32> = BTreeMap::new();
    for small in [2u32, 3, 5, 7, 11, 13] {
        let d = BigInt::from(small);
        while (&m % &d).is_zero() {
            *out.entry(d.clone()).or_insert(0) += 1;
            m /= &d;
        }
    }
    let mut d = BigInt::from(17u32);
    while &d * &d <= m && d < BigInt::from(100_000u32) {
        while (&m % &d).is_zero() {
            *out.entry(d.clone()).or_insert(0) += 1;
            m /= &d;
        }
        d += 2;
    }
    if m > BigInt::one() {
        let mut stack = vec![m];
        while let Some(v) = stack.pop() {
            if v.is_one() {
                continue;
            }
            if is_probable_prime(&v) {
                *out.entry(v).or_insert(0) += 1;
                continue;
            }
            let f = pollard_brent(&v);
            stack.push(&v / &f);
            stack.push(f);
        }
    }
    out.into_iter().collect()
}

fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2u32) {
        return false;
    }
    for w in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let wb = BigInt::from(w);
        if n == &wb {
            return true;
        }
        if (n % &wb).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'witness: for w in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&BigInt::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    let two = BigInt::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigInt::one();
    loop {
        let mut x = two.clone();
        let mut y = two.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d > one && &d < n {
            return d;
        }
        c += 1;
    }
}
