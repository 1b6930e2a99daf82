//! Finite-field arithmetic F_{p^r} in a polynomial basis.
//!
//! Elements are residue classes mod a monic irreducible f(x) of degree r over
//! F_p, encoded canonically: the element Σ cᵢ·uⁱ (u the class of x) has index
//! Σ cᵢ·pⁱ, a bijection with 0..p^r. Field construction is deterministic: f is
//! the first monic irreducible by ascending canonical index of its coefficient
//! vector, and the generator is the smallest-index element of full multiplicative
//! order (overridable). Degree 1 uses f(x) = x, so elements are plain residues.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::OnceLock;

/// Largest supported field order for construction, arithmetic and discrete logs.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

const MAX_R: usize = 22;

/// Largest root-of-unity table a field will cache (entries).
const TERM_ROOT_CAP: u64 = 1 << 21;

/// An element of a finite field, by canonical index. Only meaningful together
/// with the `FieldCtx` that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A concrete presentation of F_{p^r}: modulus polynomial, generator, trace data.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    r: u32,
    order: u64,
    /// Monic modulus, little-endian coefficients, length r+1.
    modpoly: Vec<u64>,
    g: FieldElement,
    /// Tr(uⁱ) for i < r; trace of any element follows by F_p-linearity.
    trace_basis: Vec<u64>,
    /// Distinct prime factors of p^r − 1, for order tests.
    order_factors: Vec<u64>,
    /// Lazy generator-power tables for batch work: (exp, log).
    tables: OnceLock<(Vec<u32>, Vec<u32>)>,
    /// Lazy p·(p^r−1)-th roots of unity (None when over the size cap); every
    /// Gauss-sum term angle is an exact multiple of 1/(p·(p^r−1)) turns.
    term_roots: OnceLock<Option<Vec<Complex64>>>,
    /// Lazy column of Tr(x) for every element index x.
    trace_col: OnceLock<Vec<u32>>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modpoly == other.modpoly && self.g == other.g
    }
}

impl FieldCtx {
    /// Build F_{p^r} with the deterministic modulus and generator choices.
    pub fn new(p: u64, r: u32) -> Result<FieldCtx> {
        Self::build(p, r, None)
    }

    /// Build F_{p^r} but use the given element index as generator (validated).
    pub fn with_generator(p: u64, r: u32, g_idx: u64) -> Result<FieldCtx> {
        Self::build(p, r, Some(g_idx))
    }

    fn build(p: u64, r: u32, g_override: Option<u64>) -> Result<FieldCtx> {
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order_wide = (p as u128).pow(r);
        if order_wide > MAX_FIELD_ORDER as u128 {
            return Err(Error::OrderTooLarge { order: order_wide, bound: MAX_FIELD_ORDER });
        }
        let order = order_wide as u64;

        let modpoly = if r == 1 {
            vec![0, 1]
        } else {
            first_irreducible(p, r)
        };

        let mut ctx = FieldCtx {
            p,
            r,
            order,
            modpoly,
            g: FieldElement(0),
            trace_basis: Vec::new(),
            order_factors: distinct_prime_factors(order - 1),
            tables: OnceLock::new(),
            term_roots: OnceLock::new(),
            trace_col: OnceLock::new(),
        };
        ctx.trace_basis = (0..r)
            .map(|i| {
                let t = ctx.trace_by_frobenius(FieldElement(p.pow(i)));
                debug_assert!(t.index() < p, "trace must land in the base field");
                t.index()
            })
            .collect();

        ctx.g = match g_override {
            Some(idx) => {
                let g = ctx.element(idx)?;
                if !ctx.is_primitive_element(g) {
                    return Err(Error::NotPrimitive(idx));
                }
                g
            }
            None => ctx.find_generator(),
        };
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Order of the multiplicative group, p^r − 1.
    pub fn unit_order(&self) -> u64 {
        self.order - 1
    }

    pub fn generator(&self) -> FieldElement {
        self.g
    }

    /// Little-endian coefficients of the modulus polynomial (length r+1, monic).
    pub fn modpoly(&self) -> &[u64] {
        &self.modpoly
    }

    /// Modulus polynomial rendered like "x^2+x+1".
    pub fn modpoly_string(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for d in (0..=self.r as usize).rev() {
            let c = self.modpoly[d];
            if c == 0 {
                continue;
            }
            let t = match d {
                0 => format!("{c}"),
                1 if c == 1 => "x".to_string(),
                1 => format!("{c}x"),
                _ if c == 1 => format!("x^{d}"),
                _ => format!("{c}x^{d}"),
            };
            terms.push(t);
        }
        terms.join("+")
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn element(&self, idx: u64) -> Result<FieldElement> {
        if idx < self.order {
            Ok(FieldElement(idx))
        } else {
            Err(Error::IndexOutOfRange { idx, order: self.order })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(FieldElement)
    }

    /// Little-endian base-p coefficient vector of x, length r.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.r as usize);
        let mut idx = x.0;
        for _ in 0..self.r {
            v.push(idx % self.p);
            idx /= self.p;
        }
        v
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.r as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadCoefficients);
        }
        let mut idx = 0;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        Ok(FieldElement(idx))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (da, db) = (self.digits(a.0), self.digits(b.0));
        let mut out = [0u64; MAX_R];
        for i in 0..self.r as usize {
            out[i] = (da[i] + db[i]) % self.p;
        }
        FieldElement(self.undigits(&out))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let da = self.digits(a.0);
        let mut out = [0u64; MAX_R];
        for i in 0..self.r as usize {
            out[i] = (self.p - da[i]) % self.p;
        }
        FieldElement(self.undigits(&out))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement(a.0 * b.0 % self.p);
        }
        let r = self.r as usize;
        let (da, db) = (self.digits(a.0), self.digits(b.0));
        let mut buf = [0u64; 2 * MAX_R];
        for i in 0..r {
            if da[i] == 0 {
                continue;
            }
            for j in 0..r {
                buf[i + j] += da[i] * db[j];
            }
        }
        // Reduce by the monic modulus: x^d ≡ −Σ modpoly[i]·x^{d−r+i}.
        for d in (r..=2 * r - 2).rev() {
            let c = buf[d] % self.p;
            if c != 0 {
                for i in 0..r {
                    buf[d - r + i] += c * (self.p - self.modpoly[i]);
                }
            }
        }
        let mut out = [0u64; MAX_R];
        for i in 0..r {
            out[i] = buf[i] % self.p;
        }
        FieldElement(self.undigits(&out))
    }

    /// x^e with 0^0 = 1.
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        let mut base = x;
        let mut e = e;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(x, self.order - 2))
    }

    /// Tr(x) = Σ_{j<r} x^{p^j} ∈ F_p, via the precomputed basis traces.
    pub fn trace(&self, x: FieldElement) -> u64 {
        if self.r == 1 {
            return x.0;
        }
        let d = self.digits(x.0);
        let mut t = 0u64;
        for i in 0..self.r as usize {
            t += d[i] * self.trace_basis[i];
        }
        t % self.p
    }

    fn trace_by_frobenius(&self, x: FieldElement) -> FieldElement {
        let mut acc = self.zero();
        for j in 0..self.r {
            acc = self.add(acc, self.pow(x, self.p.pow(j)));
        }
        acc
    }

    /// j with g^j = x, by baby-step/giant-step in O(√(p^r)) time and memory.
    pub fn discrete_log(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroLog);
        }
        let n = self.unit_order();
        let m = (n as f64).sqrt().ceil() as u64;
        let mut baby: HashMap<u64, u64> = HashMap::with_capacity(m as usize);
        let mut cur = self.one();
        for j in 0..m {
            baby.entry(cur.0).or_insert(j);
            cur = self.mul(cur, self.g);
        }
        // cur is now g^m; step by its inverse.
        let giant = self.inv(cur)?;
        let mut cur = x;
        for i in 0..=n / m {
            if let Some(&j) = baby.get(&cur.0) {
                return Ok((i * m + j) % n);
            }
            cur = self.mul(cur, giant);
        }
        Err(Error::ReconstructionFailed)
    }

    fn is_primitive_element(&self, x: FieldElement) -> bool {
        if x.is_zero() {
            return false;
        }
        let n = self.unit_order();
        if n == 1 {
            return true;
        }
        self.order_factors.iter().all(|&f| self.pow(x, n / f) != self.one())
    }

    fn find_generator(&self) -> FieldElement {
        if self.order == 2 {
            return self.one();
        }
        for idx in 2..self.order {
            let c = FieldElement(idx);
            if self.is_primitive_element(c) {
                return c;
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    /// Generator-power tables (exp, log): exp[j] = index of g^j for j < p^r−1,
    /// log[index] = j with log[0] a sentinel. Built once, on demand.
    pub(crate) fn dlog_tables(&self) -> (&[u32], &[u32]) {
        let (exp, log) = self.tables.get_or_init(|| {
            let n = self.unit_order() as usize;
            let mut exp = vec![0u32; n];
            let mut log = vec![u32::MAX; self.order as usize];
            let mut cur = self.one();
            for (j, e) in exp.iter_mut().enumerate() {
                *e = cur.0 as u32;
                log[cur.0 as usize] = j as u32;
                cur = self.mul(cur, self.g);
            }
            debug_assert_eq!(cur, self.one(), "generator order must be p^r - 1");
            (exp, log)
        });
        (exp, log)
    }

    /// Tr(x) for every element index x. Built once, on demand.
    pub(crate) fn trace_table(&self) -> &[u32] {
        self.trace_col.get_or_init(|| {
            (0..self.order)
                .map(|x| self.trace(FieldElement(x)) as u32)
                .collect()
        })
    }

    /// Table of the p·(p^r−1)-th roots of unity, or None when it would exceed
    /// the size cap. Built once, on demand; lets batch character sums replace
    /// per-term trigonometry with indexed lookups.
    pub(crate) fn term_root_table(&self) -> Option<&[Complex64]> {
        self.term_roots
            .get_or_init(|| {
                let d = (self.p as u128) * (self.order as u128 - 1);
                if d == 0 || d > TERM_ROOT_CAP as u128 {
                    None
                } else {
                    Some(crate::angle::unit_roots(d as u64))
                }
            })
            .as_deref()
    }

    fn digits(&self, mut idx: u64) -> [u64; MAX_R] {
        let mut d = [0u64; MAX_R];
        for slot in d.iter_mut().take(self.r as usize) {
            *slot = idx % self.p;
            idx /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u64; MAX_R]) -> u64 {
        let mut idx = 0;
        for i in (0..self.r as usize).rev() {
            idx = idx * self.p + d[i];
        }
        idx
    }
}

// --- primality, factoring, irreducibility ----------------------------------

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut fs = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            fs.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        fs.push((n, 1));
    }
    fs
}

pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut fs = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            fs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

/// First monic irreducible of degree r over F_p, by ascending canonical index
/// of the lower coefficient vector (c_0, …, c_{r−1}) ↦ Σ cᵢ·pⁱ.
fn first_irreducible(p: u64, r: u32) -> Vec<u64> {
    let span = p.pow(r);
    for a in 0..span {
        let mut f: Vec<u64> = Vec::with_capacity(r as usize + 1);
        let mut idx = a;
        for _ in 0..r {
            f.push(idx % p);
            idx /= p;
        }
        f.push(1);
        if poly_is_irreducible(&f, p, r) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Irreducibility of monic degree-r f: x^{p^r} ≡ x mod f, and
/// gcd(x^{p^i} − x mod f, f) = 1 for 1 ≤ i < r.
fn poly_is_irreducible(f: &[u64], p: u64, r: u32) -> bool {
    let x = vec![0, 1];
    for i in 1..r {
        let xp = poly_powmod(&x, p.pow(i), f, p);
        let diff = poly_sub(&xp, &x, p);
        let g = poly_gcd(&diff, f, p);
        if poly_deg(&g) != 0 {
            return false;
        }
    }
    let xpr = poly_powmod(&x, p.pow(r), f, p);
    poly_deg(&poly_sub(&xpr, &x, p)) == usize::MAX // zero polynomial
}

fn poly_deg(a: &[u64]) -> usize {
    match a.iter().rposition(|&c| c != 0) {
        Some(d) => d,
        None => usize::MAX, // degree of the zero polynomial
    }
}

fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let av = a.get(i).copied().unwrap_or(0);
        let bv = b.get(i).copied().unwrap_or(0);
        *o = (av + p - bv) % p;
    }
    poly_trim(out)
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut buf = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            buf[i + j] = (buf[i + j] + ai * bj) % p;
        }
    }
    // f is monic of degree deg_f.
    let deg_f = poly_deg(f);
    if deg_f != usize::MAX {
        for d in (deg_f..buf.len()).rev() {
            let c = buf[d];
            if c != 0 {
                buf[d] = 0;
                for i in 0..deg_f {
                    buf[d - deg_f + i] = (buf[d - deg_f + i] + c * (p - f[i]) % p) % p;
                }
            }
        }
    }
    poly_trim(buf)
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, f, p);
        }
        base = poly_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    // Normalize to monic for a canonical representative.
    if let Some(&lead) = a.last() {
        let inv = mod_inv(lead, p);
        for c in a.iter_mut() {
            *c = *c * inv % p;
        }
    }
    a
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_deg(b);
    assert!(db != usize::MAX, "division by the zero polynomial");
    let lead_inv = mod_inv(b[db], p);
    let mut rem = a.to_vec();
    while poly_deg(&rem) != usize::MAX && poly_deg(&rem) >= db {
        let dr = poly_deg(&rem);
        let c = rem[dr] * lead_inv % p;
        for i in 0..=db {
            rem[dr - db + i] = (rem[dr - db + i] + c * (p - b[i]) % p) % p;
        }
    }
    poly_trim(rem)
}

pub(crate) fn mod_inv(a: u64, m: u64) -> u64 {
    // Extended Euclid; a must be a unit mod m.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert!(old_r == 1, "{a} is not invertible mod {m}");
    old_s.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_identity_modulus_and_smallest_generator() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f5.modpoly(), &[0, 1]);
        assert_eq!(f5.generator().index(), 2);
        assert_eq!(f5.modpoly_string(), "x");

        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.generator().index(), 1);
    }

    #[test]
    fn deterministic_modulus_for_small_extensions() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.modpoly(), &[1, 1, 1]); // x^2+x+1
        assert_eq!(f4.generator().index(), 2); // u itself
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.modpoly(), &[1, 0, 1]); // x^2+1
        assert_eq!(f9.generator().index(), 4); // u+1
        assert_eq!(f9.modpoly_string(), "x^2+1");
    }

    #[test]
    fn generator_override_is_validated() {
        let f = FieldCtx::with_generator(241, 1, 7).unwrap();
        assert_eq!(f.generator().index(), 7);
        // 1 generates nothing mod 241.
        assert!(matches!(FieldCtx::with_generator(241, 1, 1), Err(Error::NotPrimitive(1))));
        // 32 = 2^5 has order 240/gcd... check a known non-generator: 16 = 2^4.
        assert!(FieldCtx::with_generator(241, 1, 16).is_err());
    }

    #[test]
    fn construction_rejects_bad_parameters() {
        assert!(matches!(FieldCtx::new(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(FieldCtx::new(5, 0), Err(Error::ZeroDegree)));
        assert!(matches!(FieldCtx::new(2, 23), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn f4_arithmetic_matches_hand_calculation() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let u = f4.element(2).unwrap();
        let u1 = f4.element(3).unwrap();
        assert_eq!(f4.mul(u, u), u1); // u^2 = u+1
        assert_eq!(f4.pow(u, 2), u1);
        assert_eq!(f4.inv(u).unwrap(), u1); // u(u+1) = 1
        assert_eq!(f4.mul(u, u1), f4.one());
        assert_eq!(f4.add(u, u), f4.zero());
    }

    #[test]
    fn prime_field_inverse_matches_known_values() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f5.inv(f5.element(2).unwrap()).unwrap().index(), 3);
        assert!(f5.inv(f5.zero()).is_err());
    }

    #[test]
    fn coeff_round_trip() {
        let f27 = FieldCtx::new(3, 3).unwrap();
        for x in f27.elements() {
            let c = f27.coeffs(x);
            assert_eq!(f27.from_coeffs(&c).unwrap(), x);
        }
        assert!(f27.from_coeffs(&[1, 2]).is_err());
        assert!(f27.from_coeffs(&[3, 0, 0]).is_err());
        assert!(f27.element(27).is_err());
    }

    #[test]
    fn trace_known_values() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.trace(f4.one()), 0); // 1 + 1
        assert_eq!(f4.trace(f4.element(2).unwrap()), 1); // u + u^2 = 1
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.trace(f9.element(3).unwrap()), 0); // u + u^3 = u - u
        assert_eq!(f9.trace(f9.one()), 2);
    }

    #[test]
    fn trace_is_linear_and_balanced() {
        for (p, r) in [(2, 4), (3, 3), (5, 2), (7, 2), (2, 1), (13, 1)] {
            let f = FieldCtx::new(p, r).unwrap();
            // Linearity over all x, y and base scalars a, b.
            for x in f.elements() {
                for y in f.elements() {
                    for a in 0..p {
                        for b in 0..p {
                            let ax = f.mul(f.element(a).unwrap(), x);
                            let by = f.mul(f.element(b).unwrap(), y);
                            let lhs = f.trace(f.add(ax, by));
                            let rhs = (a * f.trace(x) + b * f.trace(y)) % p;
                            assert_eq!(lhs, rhs, "trace not linear in F_{}^{}", p, r);
                        }
                    }
                }
            }
            // Each base-field value is hit exactly p^{r-1} times.
            let mut counts = vec![0u64; p as usize];
            for x in f.elements() {
                counts[f.trace(x) as usize] += 1;
            }
            assert!(counts.iter().all(|&c| c == p.pow(r - 1)));
        }
    }

    #[test]
    fn pow_and_frobenius_agree_with_definitions() {
        let f = FieldCtx::new(3, 3).unwrap();
        for x in f.elements() {
            assert_eq!(f.pow(x, f.order()), x, "x^q = x");
            if !x.is_zero() {
                assert_eq!(f.pow(x, f.unit_order()), f.one(), "x^{{q-1}} = 1");
            }
        }
        assert_eq!(f.pow(f.zero(), 0), f.one(), "0^0 = 1 by convention");
    }

    #[test]
    fn discrete_log_round_trips_exhaustively() {
        // Every prime power up to 512.
        let mut sizes = Vec::new();
        for p in 2u64..=512 {
            if !is_prime(p) {
                continue;
            }
            let mut q = p;
            let mut r = 1;
            while q <= 512 {
                sizes.push((p, r));
                q *= p;
                r += 1;
            }
        }
        for (p, r) in sizes {
            let f = FieldCtx::new(p, r).unwrap();
            let n = f.unit_order();
            let mut cur = f.one();
            for j in 0..n {
                assert_eq!(f.discrete_log(cur).unwrap(), j, "dlog in F_{}^{}", p, r);
                cur = f.mul(cur, f.generator());
            }
            assert_eq!(cur, f.one());
            assert!(f.discrete_log(f.zero()).is_err());
        }
    }

    #[test]
    fn dlog_tables_match_bsgs() {
        let f = FieldCtx::new(3, 5).unwrap();
        let (exp, log) = f.dlog_tables();
        assert_eq!(exp.len() as u64, f.unit_order());
        for j in 0..f.unit_order() {
            let x = FieldElement(exp[j as usize] as u64);
            assert_eq!(log[x.index() as usize] as u64, j);
            assert_eq!(f.discrete_log(x).unwrap(), j);
        }
        assert_eq!(log[0], u32::MAX);
    }

    #[test]
    fn field_identity_comparison() {
        let a = FieldCtx::new(5, 1).unwrap();
        let b = FieldCtx::new(5, 1).unwrap();
        let c = FieldCtx::with_generator(5, 1, 3).unwrap();
        assert_eq!(a, b);
        assert!(a != c);
    }
}
