//! Multiplicative and Dirichlet characters with exact root-of-unity values.
//!
//! Field case: fixing a generator g of F_{p^r}^*, every multiplicative
//! character is χ^α(g^j) = ζ_{p^r−1}^{αj} for an index α mod p^r−1, extended
//! by χ(0) = 0. Ring case: (Z/nZ)* splits over the prime powers of n; each odd
//! p^r contributes a cyclic factor with a primitive root, and the two-power
//! part 2^{r₀} (r₀ ≥ 3) is the direct product ⟨−1⟩ × ⟨5⟩ ≅ Z/2 × Z/2^{r₀−2}.
//! A Dirichlet character carries one exponent per cyclic factor and vanishes
//! off the units. Values are exact rational turns (`TurnAngle`); floating
//! point enters only when a value is materialized as a complex number.
//!
//! Additive characters e_β(x) = ζ_p^{Tr(βx)} (fields) and ζ_n^{βx} (rings)
//! complete the ingredients for Gauss sums.

use crate::angle::{gcd, lcm, TurnAngle};
use crate::error::{Error, Result};
use crate::field::{self, FieldCtx, FieldElement};
use num_complex::Complex64;
use std::sync::{Arc, OnceLock};

/// Largest supported Dirichlet modulus (matches the field arithmetic bound).
pub const MAX_MODULUS: u64 = 1 << 22;

// --- additive characters ----------------------------------------------------

/// Additive character of F_{p^r}: e_β(x) = ζ_p^{Tr(βx)}.
#[derive(Clone, Debug)]
pub struct AddCharField {
    ctx: Arc<FieldCtx>,
    beta: FieldElement,
}

impl AddCharField {
    pub fn new(ctx: Arc<FieldCtx>, beta: FieldElement) -> AddCharField {
        AddCharField { ctx, beta }
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Tr(βx)/p as an exact fraction of a turn.
    pub fn angle(&self, x: FieldElement) -> TurnAngle {
        TurnAngle::new(self.ctx.trace(self.ctx.mul(self.beta, x)), self.ctx.p())
    }

    pub fn value(&self, x: FieldElement) -> Complex64 {
        self.angle(x).to_complex()
    }
}

/// Additive character of Z/nZ: e_β(x) = ζ_n^{βx}.
#[derive(Clone, Debug)]
pub struct AddCharRing {
    n: u64,
    beta: u64,
}

impl AddCharRing {
    pub fn new(n: u64, beta: u64) -> Result<AddCharRing> {
        if n < 2 || n > MAX_MODULUS {
            return Err(Error::BadModulus(n));
        }
        Ok(AddCharRing { n, beta: beta % n })
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// βx/n as an exact fraction of a turn.
    pub fn angle(&self, x: u64) -> TurnAngle {
        TurnAngle::new(self.beta * (x % self.n), self.n)
    }

    pub fn value(&self, x: u64) -> Complex64 {
        self.angle(x).to_complex()
    }
}

// --- multiplicative characters of a finite field -----------------------------

/// Multiplicative character χ^α of F_{p^r}^*, with χ(0) = 0.
#[derive(Clone, Debug)]
pub struct MultChar {
    ctx: Arc<FieldCtx>,
    alpha: u64,
}

impl MultChar {
    /// χ^α for the field's fixed generator; α is reduced mod p^r−1.
    pub fn new(ctx: Arc<FieldCtx>, alpha: u64) -> MultChar {
        let n = ctx.unit_order();
        MultChar { ctx, alpha: alpha % n }
    }

    /// The quadratic character (order 2); fields of characteristic 2 have none.
    pub fn quadratic(ctx: Arc<FieldCtx>) -> Result<MultChar> {
        if ctx.p() == 2 {
            return Err(Error::InvalidArgument(
                "fields of characteristic 2 have no quadratic character".into(),
            ));
        }
        let alpha = ctx.unit_order() / 2;
        Ok(MultChar { ctx, alpha })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn is_trivial(&self) -> bool {
        self.alpha == 0
    }

    /// Order of χ in the character group: (p^r−1)/gcd(p^r−1, α).
    pub fn order(&self) -> u64 {
        let n = self.ctx.unit_order();
        if n == 0 {
            return 1;
        }
        n / gcd(n, self.alpha)
    }

    pub fn is_quadratic(&self) -> bool {
        self.order() == 2
    }

    /// χ(g^j) = ζ_{p^r−1}^{αj} as an exact angle.
    pub fn angle_at_log(&self, j: u64) -> TurnAngle {
        let n = self.ctx.unit_order();
        TurnAngle::new(((self.alpha as u128 * j as u128) % n as u128) as u64, n)
    }

    /// Exact angle of χ(x), or None at x = 0 where χ vanishes.
    pub fn angle(&self, x: FieldElement) -> Option<TurnAngle> {
        if x.is_zero() {
            return None;
        }
        let (_, log) = self.ctx.dlog_tables();
        Some(self.angle_at_log(log[x.index() as usize] as u64))
    }

    pub fn value(&self, x: FieldElement) -> Complex64 {
        match self.angle(x) {
            Some(a) => a.to_complex(),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// Pointwise product of characters over the same field presentation.
    pub fn mul(&self, other: &MultChar) -> Result<MultChar> {
        if self.ctx.as_ref() != other.ctx.as_ref() {
            return Err(Error::ContextMismatch);
        }
        let n = self.ctx.unit_order();
        Ok(MultChar { ctx: self.ctx.clone(), alpha: (self.alpha + other.alpha) % n })
    }

    /// χ^{−1}, which is also the pointwise complex conjugate of χ.
    pub fn inverse(&self) -> MultChar {
        let n = self.ctx.unit_order();
        MultChar { ctx: self.ctx.clone(), alpha: (n - self.alpha) % n }
    }

    /// All p^r−1 characters of the field, trivial first.
    pub fn enumerate(ctx: &Arc<FieldCtx>) -> Vec<MultChar> {
        (0..ctx.unit_order()).map(|a| MultChar { ctx: ctx.clone(), alpha: a }).collect()
    }
}

impl PartialEq for MultChar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.as_ref() == other.ctx.as_ref() && self.alpha == other.alpha
    }
}

// --- Dirichlet characters of Z/nZ --------------------------------------------

/// One odd-prime-power block p^r of the modulus: cyclic with primitive root g.
#[derive(Clone, Debug)]
struct OddComponent {
    p: u64,
    r: u32,
    modulus: u64,
    phi: u64,
    g: u64,
    alpha: u64,
    /// log[x] = log_g(x) for units x mod p^r; u32::MAX off the units.
    log: Vec<u32>,
}

impl OddComponent {
    fn new(p: u64, r: u32, alpha: u64) -> OddComponent {
        let modulus = p.pow(r);
        let phi = modulus / p * (p - 1);
        let g = smallest_primitive_root(p, r);
        let mut log = vec![u32::MAX; modulus as usize];
        let mut cur = 1u64;
        for j in 0..phi {
            log[cur as usize] = j as u32;
            cur = cur * g % modulus;
        }
        debug_assert_eq!(cur, 1);
        OddComponent { p, r, modulus, phi, g, alpha, log }
    }

    fn angle(&self, x: u64) -> TurnAngle {
        let j = self.log[(x % self.modulus) as usize] as u64;
        TurnAngle::new(((self.alpha as u128 * j as u128) % self.phi as u128) as u64, self.phi)
    }
}

/// A Dirichlet character mod n, specified by one exponent per cyclic factor of
/// (Z/nZ)*: (α₀, α₀′) for the two-power part and α_j for each odd prime power.
#[derive(Clone, Debug)]
pub struct DirichletChar {
    n: u64,
    r0: u32,
    two_pow: u64,
    alpha0: u64,
    alpha0p: u64,
    /// For odd x mod 2^{r₀} at slot x>>1 (r₀ ≥ 3): exponents (i, i′) in
    /// x = (−1)^i·5^{i′}.
    two_sign: Vec<u8>,
    two_log5: Vec<u32>,
    odd: Vec<OddComponent>,
    /// Lazy column of angle numerators over the denominator ord(χ), with
    /// u32::MAX marking non-units; built for batch summation.
    angle_col: OnceLock<Vec<u32>>,
}

impl DirichletChar {
    /// Character mod n with two-power indices (α₀, α₀′) and odd-part indices
    /// α_j listed by ascending odd prime. Unused indices must be zero:
    /// α₀ needs v₂(n) ≥ 2 and α₀′ needs v₂(n) ≥ 3.
    pub fn new(n: u64, alpha0: u64, alpha0p: u64, odd_alphas: &[u64]) -> Result<DirichletChar> {
        if n < 2 || n > MAX_MODULUS {
            return Err(Error::BadModulus(n));
        }
        let bad = |detail: String| Error::BadCharIndices { n, detail };
        let factors = field::factorize(n);
        let r0 = factors.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e);
        let two_pow = 1u64 << r0;

        let a0_span: u64 = if r0 >= 2 { 2 } else { 1 };
        let a0p_span: u64 = if r0 >= 3 { 1 << (r0 - 2) } else { 1 };
        if alpha0 >= a0_span {
            return Err(bad(format!("alpha0 = {alpha0} out of range (modulus has 2-part 2^{r0})")));
        }
        if alpha0p >= a0p_span {
            return Err(bad(format!("alpha0' = {alpha0p} out of range (modulus has 2-part 2^{r0})")));
        }

        let odd_primes: Vec<(u64, u32)> = factors.into_iter().filter(|&(p, _)| p != 2).collect();
        if odd_alphas.len() != odd_primes.len() {
            return Err(bad(format!(
                "expected {} odd-part indices, got {}",
                odd_primes.len(),
                odd_alphas.len()
            )));
        }
        let mut odd = Vec::with_capacity(odd_primes.len());
        for (&(p, r), &alpha) in odd_primes.iter().zip(odd_alphas) {
            let phi = p.pow(r) / p * (p - 1);
            if alpha >= phi {
                return Err(bad(format!("index {alpha} out of range for component {p}^{r}")));
            }
            odd.push(OddComponent::new(p, r, alpha));
        }

        let (two_sign, two_log5) = build_two_power_tables(r0);
        Ok(DirichletChar {
            n,
            r0,
            two_pow,
            alpha0,
            alpha0p,
            two_sign,
            two_log5,
            odd,
            angle_col: OnceLock::new(),
        })
    }

    pub fn trivial(n: u64) -> Result<DirichletChar> {
        let odd_count = field::factorize(n).iter().filter(|&&(p, _)| p != 2).count();
        DirichletChar::new(n, 0, 0, &vec![0; odd_count])
    }

    /// All φ(n) characters mod n, in lexicographic index order (trivial first).
    pub fn enumerate(n: u64) -> Result<Vec<DirichletChar>> {
        let proto = DirichletChar::trivial(n)?;
        let mut radices = vec![
            if proto.r0 >= 2 { 2 } else { 1 },
            if proto.r0 >= 3 { 1u64 << (proto.r0 - 2) } else { 1 },
        ];
        radices.extend(proto.odd.iter().map(|c| c.phi));
        let total: u64 = radices.iter().product();
        let mut out = Vec::with_capacity(total as usize);
        for code in 0..total {
            let mut rem = code;
            let mut digits = vec![0u64; radices.len()];
            for (d, &rad) in digits.iter_mut().zip(&radices).rev() {
                *d = rem % rad;
                rem /= rad;
            }
            let mut chi = proto.clone();
            chi.alpha0 = digits[0];
            chi.alpha0p = digits[1];
            for (c, &a) in chi.odd.iter_mut().zip(&digits[2..]) {
                c.alpha = a;
            }
            out.push(chi);
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Order of the unit group φ(n) (= number of characters mod n).
    pub fn phi(&self) -> u64 {
        let two: u64 = if self.r0 >= 2 { self.two_pow / 2 } else { 1 };
        two * self.odd.iter().map(|c| c.phi).product::<u64>()
    }

    /// The index vector ((α₀, α₀′), [α_j by ascending odd prime]).
    pub fn indices(&self) -> ((u64, u64), Vec<u64>) {
        ((self.alpha0, self.alpha0p), self.odd.iter().map(|c| c.alpha).collect())
    }

    /// Odd components as (p, r, generator, index, φ(p^r)).
    pub fn odd_components(&self) -> impl Iterator<Item = (u64, u32, u64, u64, u64)> + '_ {
        self.odd.iter().map(|c| (c.p, c.r, c.g, c.alpha, c.phi))
    }

    /// v₂(n), the exponent of the two-power part.
    pub fn two_exponent(&self) -> u32 {
        self.r0
    }

    pub fn is_trivial(&self) -> bool {
        self.alpha0 == 0 && self.alpha0p == 0 && self.odd.iter().all(|c| c.alpha == 0)
    }

    /// Exact angle of χ(x), or None off the units where χ vanishes.
    pub fn angle(&self, x: u64) -> Option<TurnAngle> {
        let x = x % self.n;
        if gcd(x, self.n) != 1 {
            return None;
        }
        let mut acc = TurnAngle::zero();
        if self.r0 >= 2 {
            let xr = x % self.two_pow;
            if self.r0 == 2 {
                if xr == 3 {
                    acc = acc.add(TurnAngle::new(self.alpha0, 2));
                }
            } else {
                let slot = (xr >> 1) as usize;
                let (i, i5) = (self.two_sign[slot] as u64, self.two_log5[slot] as u64);
                acc = acc.add(TurnAngle::new(self.alpha0 * i, 2));
                acc = acc.add(TurnAngle::new(
                    ((self.alpha0p as u128 * i5 as u128) % (self.two_pow as u128 / 4)) as u64,
                    self.two_pow / 4,
                ));
            }
        }
        for c in &self.odd {
            acc = acc.add(c.angle(x));
        }
        Some(acc)
    }

    /// Column of angle numerators over the denominator ord(χ): entry x holds
    /// k with χ(x) = ζ_{ord}^k, or u32::MAX where χ vanishes. Built once.
    pub(crate) fn angle_numerators(&self) -> &[u32] {
        self.angle_col.get_or_init(|| {
            let m = self.order();
            (0..self.n)
                .map(|x| match self.angle(x) {
                    Some(a) => (a.num() * (m / a.den())) as u32,
                    None => u32::MAX,
                })
                .collect()
        })
    }

    pub fn value(&self, x: u64) -> Complex64 {
        match self.angle(x) {
            Some(a) => a.to_complex(),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// Order of χ in the character group mod n.
    pub fn order(&self) -> u64 {
        let mut ord = 1;
        if self.alpha0 == 1 {
            ord = 2;
        }
        if self.r0 >= 3 && self.alpha0p != 0 {
            let m = self.two_pow / 4;
            ord = lcm(ord, m / gcd(m, self.alpha0p));
        }
        for c in &self.odd {
            ord = lcm(ord, c.phi / gcd(c.phi, c.alpha));
        }
        ord
    }

    /// Smallest c ≥ 1 with χ trivial on every unit ≡ 1 mod c; equivalently the
    /// modulus of the primitive character inducing χ. Trivial characters give 1.
    pub fn conductor(&self) -> u64 {
        let mut divisors: Vec<u64> = (1..=self.n).filter(|d| self.n % d == 0).collect();
        divisors.sort_unstable();
        'outer: for &c in &divisors {
            let mut z = 1 + c;
            while z < self.n {
                if gcd(z, self.n) == 1 {
                    match self.angle(z) {
                        Some(a) if !a.is_zero() => continue 'outer,
                        _ => {}
                    }
                }
                z += c;
            }
            return c;
        }
        self.n
    }

    /// True when the conductor equals the modulus; the trivial character is
    /// never primitive.
    pub fn is_primitive(&self) -> bool {
        !self.is_trivial() && self.conductor() == self.n
    }

    /// The primitive character mod conductor(χ) inducing χ: ψ(x mod c) = χ(x)
    /// on every unit of Z/nZ. The trivial character is induced by no primitive
    /// character and is rejected.
    pub fn primitive_part(&self) -> Result<DirichletChar> {
        if self.is_trivial() {
            return Err(Error::TrivialChar);
        }
        let c = self.conductor();
        let m0 = c.trailing_zeros().min(self.r0);
        let (mut a0, mut a0p) = (0u64, 0u64);
        if m0 >= 2 {
            if m0 == 2 {
                // The 2-part of χ collapses to the character mod 4 sending
                // 3 ↦ ±1; read the sign off χ's own 2-part at a unit ≡ 3 mod 4.
                let two_angle = self.two_part_angle(3 % self.two_pow.max(4));
                a0 = if two_angle.is_zero() { 0 } else { 1 };
            } else {
                a0 = self.alpha0;
                a0p = self.alpha0p >> (self.r0 - m0);
                debug_assert_eq!(a0p << (self.r0 - m0), self.alpha0p, "conductor must absorb 2-part depth");
            }
        }
        let mut odd_alphas = Vec::new();
        for comp in &self.odd {
            let m = match field::factorize(c).iter().find(|&&(p, _)| p == comp.p) {
                Some(&(_, e)) => e,
                None => continue,
            };
            let s = comp.r - m;
            let reduced_mod = comp.p.pow(m);
            let phi_c = reduced_mod / comp.p * (comp.p - 1);
            let g_new = smallest_primitive_root(comp.p, m);
            // ψ(g_new) = χ(g_new) pins ψ's index: α_c = (α/p^s)·log_g(g_new).
            let ps = comp.p.pow(s);
            debug_assert_eq!(comp.alpha % ps, 0, "conductor must absorb odd-part depth");
            let j0 = comp.log[g_new as usize] as u128;
            let a_c = ((comp.alpha / ps) as u128 * j0 % phi_c as u128) as u64;
            odd_alphas.push(a_c);
        }
        DirichletChar::new(c, a0, a0p, &odd_alphas)
    }

    /// Pointwise product of characters with the same modulus.
    pub fn mul(&self, other: &DirichletChar) -> Result<DirichletChar> {
        if self.n != other.n {
            return Err(Error::ContextMismatch);
        }
        let mut chi = self.clone();
        if self.r0 >= 2 {
            chi.alpha0 = (self.alpha0 + other.alpha0) % 2;
        }
        if self.r0 >= 3 {
            chi.alpha0p = (self.alpha0p + other.alpha0p) % (self.two_pow / 4);
        }
        for (c, o) in chi.odd.iter_mut().zip(&other.odd) {
            c.alpha = (c.alpha + o.alpha) % c.phi;
        }
        Ok(chi)
    }

    /// χ^{−1}, the pointwise complex conjugate.
    pub fn inverse(&self) -> DirichletChar {
        let mut chi = self.clone();
        if self.r0 >= 2 {
            chi.alpha0 = (2 - self.alpha0) % 2;
        }
        if self.r0 >= 3 {
            let m = self.two_pow / 4;
            chi.alpha0p = (m - self.alpha0p) % m;
        }
        for c in chi.odd.iter_mut() {
            c.alpha = (c.phi - c.alpha) % c.phi;
        }
        chi
    }

    /// Angle contributed by the two-power component alone at an odd x.
    fn two_part_angle(&self, x: u64) -> TurnAngle {
        if self.r0 < 2 {
            return TurnAngle::zero();
        }
        let xr = x % self.two_pow;
        if self.r0 == 2 {
            return if xr == 3 { TurnAngle::new(self.alpha0, 2) } else { TurnAngle::zero() };
        }
        let slot = (xr >> 1) as usize;
        let (i, i5) = (self.two_sign[slot] as u64, self.two_log5[slot] as u64);
        TurnAngle::new(self.alpha0 * i, 2).add(TurnAngle::new(
            ((self.alpha0p as u128 * i5 as u128) % (self.two_pow as u128 / 4)) as u64,
            self.two_pow / 4,
        ))
    }
}

impl PartialEq for DirichletChar {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.alpha0 == other.alpha0
            && self.alpha0p == other.alpha0p
            && self.odd.len() == other.odd.len()
            && self.odd.iter().zip(&other.odd).all(|(a, b)| a.p == b.p && a.alpha == b.alpha)
    }
}

// --- shared helpers -----------------------------------------------------------

/// Exponent tables for (Z/2^{r₀})* = ⟨−1⟩ × ⟨5⟩ when r₀ ≥ 3: slot x>>1 of an
/// odd residue x holds (i, i′) with x = (−1)^i·5^{i′}. The pair ranges over
/// Z/2 × Z/2^{r₀−2}; the two cosets ±⟨5⟩ are disjoint since 5^{i′} ≡ 1, 5 mod 8
/// while −5^{i′} ≡ 7, 3 mod 8.
fn build_two_power_tables(r0: u32) -> (Vec<u8>, Vec<u32>) {
    if r0 < 3 {
        return (Vec::new(), Vec::new());
    }
    let m = 1u64 << r0;
    let mut sign = vec![0u8; (m / 2) as usize];
    let mut log5 = vec![0u32; (m / 2) as usize];
    let mut cur = 1u64;
    for i5 in 0..(m / 4) as u32 {
        sign[(cur >> 1) as usize] = 0;
        log5[(cur >> 1) as usize] = i5;
        let neg = m - cur;
        sign[(neg >> 1) as usize] = 1;
        log5[(neg >> 1) as usize] = i5;
        cur = cur * 5 % m;
    }
    debug_assert_eq!(cur, 1, "5 must have order 2^{{r0-2}} mod 2^r0");
    (sign, log5)
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Smallest primitive root mod p^r for odd prime p (r ≥ 1).
pub(crate) fn smallest_primitive_root(p: u64, r: u32) -> u64 {
    let m = p.pow(r);
    let phi = m / p * (p - 1);
    let factors = field::distinct_prime_factors(phi);
    for g in 2..m {
        if g % p == 0 {
            continue;
        }
        if factors.iter().all(|&f| mod_pow(g, phi / f, m) != 1) {
            return g;
        }
    }
    unreachable!("odd prime powers have primitive roots")
}

/// Euler's totient, by trial-division factoring.
pub fn euler_phi(n: u64) -> u64 {
    field::factorize(n).iter().map(|&(p, e)| p.pow(e) / p * (p - 1)).product()
}
