//! Dense univariate polynomial helpers used by the factorization pipeline:
//! exact integer polynomials (content, primitive PRS gcd, Yun squarefree
//! split) and mod-p polynomials (distinct/equal degree factorization).
//!
//! Everything here is crate-internal; the public surface works with
//! [`crate::laurent::LaurentPoly`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::{ExponentVector, LaurentPoly};

/// Dense integer polynomial, little-endian coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn mul_scalar(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Divides every coefficient, which must be exact.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Exact polynomial division over Z; `None` if not exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len()];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (c, r) = rem.lc().div_rem(&d.lc());
            if !r.is_zero() {
                return None;
            }
            let shift = rd - dd;
            q[shift] = c.clone();
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(d.coeffs.iter().map(|x| x * &c));
            rem = rem.sub(&Self::new(sub));
        }
        Some(Self::new(q))
    }

    /// Pseudo-remainder: lc(d)^(deg r - deg d + 1) * r reduced by d.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let mut rem = self.clone();
        let lc_d = d.lc();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.lc();
            let shift = rd - dd;
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(d.coeffs.iter().map(|x| x * &c));
            rem = rem.mul_scalar(&lc_d).sub(&Self::new(sub));
        }
        rem
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Square of the Euclidean norm of the coefficient vector.
    pub fn norm2_squared(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (ExponentVector::new(vec![i as i64]), c.clone())),
        )
        .expect("rank-1 terms")
    }

    /// Converts a rank-1 element with nonnegative support. `None` when the
    /// element has negative exponents or is not rank 1.
    pub fn from_laurent(p: &LaurentPoly) -> Option<Self> {
        if p.rank() != 1 {
            return None;
        }
        if p.is_zero() {
            return Some(Self::zero());
        }
        let min = p.min_corner().unwrap().entries()[0];
        if min < 0 {
            return None;
        }
        let max = p.max_corner().unwrap().entries()[0];
        let mut coeffs = vec![BigInt::zero(); (max + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[e.entries()[0] as usize] = c.clone();
        }
        Some(Self::new(coeffs))
    }
}

/// Primitive gcd over Z via the primitive PRS; result has positive leading
/// coefficient and content gcd(content(a), content(b)).
pub(crate) fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_positive().mul_scalar(&b.content());
    }
    if b.is_zero() {
        return a.primitive_positive().mul_scalar(&a.content());
    }
    let content = a.content().gcd(&b.content());
    let mut r0 = a.primitive_positive();
    let mut r1 = b.primitive_positive();
    if r0.degree() < r1.degree() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let rem = r0.pseudo_rem(&r1).primitive_positive();
        r0 = std::mem::replace(&mut r1, rem);
    }
    r0.mul_scalar(&content)
}

/// Yun's squarefree decomposition of a primitive polynomial: returns
/// (squarefree part, multiplicity) pairs with multiplicities ascending.
pub(crate) fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let deg = f.degree().expect("nonzero input");
    if deg == 0 {
        return vec![];
    }
    let df = f.derivative();
    let a0 = int_gcd(f, &df).primitive_positive();
    if a0.degree() == Some(0) {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides derivative");
    let mut i = 1usize;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree().map_or(false, |d| d > 0) {
                out.push((b.primitive_positive(), i));
            }
            break;
        }
        let a = int_gcd(&b, &d).primitive_positive();
        if a.degree().map_or(false, |d| d > 0) {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("squarefree step divides");
        c = d.exact_div(&a).expect("squarefree step divides");
        i += 1;
        if b.degree() == Some(0) {
            break;
        }
    }
    out
}

/// Dense polynomial over F_p, p an odd or even prime below 2^31.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last().map_or(false, |&c| c == 0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ModPoly {
            p,
            coeffs: vec![1],
        }
    }

    pub fn x(p: u64) -> Self {
        ModPoly {
            p,
            coeffs: vec![0, 1],
        }
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let m = BigInt::from(p);
        Self::new(
            p,
            f.coeffs
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + other.coeff(i)) % self.p);
        }
        Self::new(self.p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.p + self.coeff(i) - other.coeff(i)) % self.p);
        }
        Self::new(self.p, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mul_mod(a, b)) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    pub fn mul_scalar(&self, k: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&c| self.mul_mod(c, k)).collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = mod_inverse(self.lc(), self.p);
        self.mul_scalar(inv)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero");
        let inv = mod_inverse(d.lc(), self.p);
        let mut rem = self.clone();
        let mut q = vec![0u64; self.coeffs.len().max(1)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.mul_mod(rem.lc(), inv);
            let shift = rd - dd;
            q[shift] = c;
            let mut sub = vec![0u64; shift];
            sub.extend(d.coeffs.iter().map(|&x| rem.mul_mod(x, c)));
            rem = rem.sub(&Self::new(self.p, sub));
        }
        (Self::new(self.p, q), rem)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = mod_inverse(r0.lc(), p);
        (r0.mul_scalar(inv), s0.mul_scalar(inv), t0.mul_scalar(inv))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.p);
        }
        Self::new(
            self.p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| self.mul_mod(c, (i as u64 + 1) % self.p))
                .collect(),
        )
    }

    /// self^e mod m, with a big-integer exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime.
    let mut acc: u64 = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Factors a monic squarefree polynomial over F_p into monic irreducibles,
/// deterministically ordered. Distinct-degree split first, then equal-degree
/// splitting; the random splitting elements come from the caller's seed.
pub(crate) fn factor_squarefree_modp(f: &ModPoly, seed: u64) -> Vec<ModPoly> {
    let p = f.p;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    // Distinct-degree stage.
    let mut h = ModPoly::x(p); // x^(p^d) mod f, advanced once per round
    let mut rest = f.clone();
    let mut d = 0usize;
    let mut stages: Vec<(ModPoly, usize)> = Vec::new();
    while rest.degree().map_or(false, |deg| deg > 0) {
        d += 1;
        if rest.degree().unwrap() < 2 * d {
            stages.push((rest.clone(), rest.degree().unwrap()));
            break;
        }
        h = h.pow_mod(&BigUint::from(p), &rest);
        let g = rest.gcd(&h.sub(&ModPoly::x(p)));
        if g.degree().map_or(false, |deg| deg > 0) {
            stages.push((g.clone(), d));
            rest = rest.div_rem(&g).0.monic();
            h = h.rem(&rest);
        }
    }

    for (product, deg) in stages {
        equal_degree_split(&product, deg, &mut rng, &mut out);
    }

    out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    out
}

/// Cantor-Zassenhaus equal-degree splitting: `f` is monic squarefree with
/// all irreducible factors of degree `d`.
fn equal_degree_split(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    loop {
        let a = random_poly(p, n, rng);
        if a.degree().map_or(true, |deg| deg == 0) {
            continue;
        }
        let g = if p == 2 {
            // Trace map over F_2.
            let mut tr = a.clone();
            let mut power = a.clone();
            for _ in 1..d {
                power = power.mul(&power).rem(f);
                tr = tr.add(&power);
            }
            f.gcd(&tr)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod(&e, f);
            f.gcd(&b.sub(&ModPoly::one(p)))
        };
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < n {
                let rest = f.div_rem(&g).0.monic();
                equal_degree_split(&g, d, rng, out);
                equal_degree_split(&rest, d, rng, out);
                return;
            }
        }
    }
}

fn random_poly(p: u64, max_deg: usize, rng: &mut ChaCha8Rng) -> ModPoly {
    let deg = rng.gen_range(1..=max_deg.max(1));
    let coeffs = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
    ModPoly::new(p, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_basics() {
        // gcd(t^2 - 1, t^2 - 2t + 1) = t - 1
        let a = ip(&[-1, 0, 1]);
        let b = ip(&[1, -2, 1]);
        assert_eq!(int_gcd(&a, &b), ip(&[-1, 1]));
        // contents are combined
        let a = ip(&[-2, 0, 2]);
        let b = ip(&[4, -8, 4]);
        assert_eq!(int_gcd(&a, &b), ip(&[-2, 2]));
    }

    #[test]
    fn squarefree_split() {
        // (t - 1)^2 (t + 2)
        let f = ip(&[1, -2, 1]).mul(&ip(&[2, 1]));
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts, vec![(ip(&[2, 1]), 1), (ip(&[-1, 1]), 2)]);
    }

    #[test]
    fn exact_div_int() {
        let f = ip(&[-1, 0, 1]);
        let d = ip(&[-1, 1]);
        assert_eq!(f.exact_div(&d), Some(ip(&[1, 1])));
        assert_eq!(f.exact_div(&ip(&[1, 1, 1])), None);
    }

    #[test]
    fn modp_factor_deterministic() {
        // t^2 + 1 mod 5 = (t + 2)(t + 3)
        let f = ModPoly::new(5, vec![1, 0, 1]);
        let fs = factor_squarefree_modp(&f, 7);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].mul(&fs[1]), f);
        let again = factor_squarefree_modp(&f, 7);
        assert_eq!(fs, again);
    }

    #[test]
    fn modp_factor_f2() {
        // t^3 + t + 1 is irreducible over F_2; t^2 + t = t(t+1) splits.
        let f = ModPoly::new(2, vec![1, 1, 0, 1]);
        assert_eq!(factor_squarefree_modp(&f, 1).len(), 1);
        let g = ModPoly::new(2, vec![0, 1, 1]);
        let fs = factor_squarefree_modp(&g, 1);
        assert_eq!(fs.len(), 2);
    }
}
