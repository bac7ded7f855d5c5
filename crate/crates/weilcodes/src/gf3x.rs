//! Exact arithmetic in F_q = F_3(ξ) where ξ is a primitive 2ℓ^m-th root of
//! unity and 3 is a primitive root modulo 2ℓ^m.
//!
//! Elements are coefficient vectors in the standard power basis
//! {1, ξ, …, ξ^{e−1}} with e = (ℓ−1)ℓ^{m−1}; the modulus is the 2ℓ^m-th
//! cyclotomic polynomial Σ_k (−x)^{kℓ^{m−1}} reduced mod 3, irreducible by
//! the primitive-root condition (re-verified at construction).  A context
//! additionally fixes a primitive element g, normalized so that
//! ξ = g^{(q−1)/(2ℓ^m)} holds exactly.  Classifications of exponents
//! downstream depend on that identity, so g must be reproducible: candidates
//! are scanned in increasing base-3 integer encoding and then adjusted by a
//! unit exponent when needed.
//!
//! Capability tiers by field size:
//! * arithmetic, traces, ξ-powers: any supported e (≤ 64),
//! * discrete logarithms: lookup table for q ≤ 2^24, baby-step/giant-step
//!   up to e ≤ 26,
//! * full enumeration of F_q^* (brute-force sums, code construction):
//!   e ≤ 15 by default, raisable via an explicit ceiling.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::{Error, Result};

/// Hard bound on the extension degree: q = 3^e must fit in u128 with room
/// for exact template arithmetic.
pub const MAX_E: u32 = 64;
/// Default bound for contexts built without an explicit opt-in to
/// closed-form-only mode.
pub const DEFAULT_FULL_E: u32 = 20;
/// Default enumeration ceiling: full sweeps over F_q^* stay desk-scale.
pub const DEFAULT_ENUM_E: u32 = 15;
/// Largest field size for which the dense discrete-log table is built.
const DLOG_TABLE_MAX_Q: u128 = 1 << 24;
/// Largest e for which baby-step/giant-step tables stay reasonable.
const BSGS_MAX_E: u32 = 26;

// --- F_3 scalar helpers -----------------------------------------------------

#[inline]
pub fn f3_add(a: u8, b: u8) -> u8 {
    (a + b) % 3
}

#[inline]
pub fn f3_neg(a: u8) -> u8 {
    (3 - a) % 3
}

#[inline]
pub fn f3_mul(a: u8, b: u8) -> u8 {
    (a * b) % 3
}

/// Reduce a signed integer into {0,1,2}.
#[inline]
pub fn f3_from_i64(v: i64) -> u8 {
    (v.rem_euclid(3)) as u8
}

// --- parameters --------------------------------------------------------------

/// The numeric shape of the tower: ℓ, m and everything derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldParams {
    pub ell: u64,
    pub m: u32,
    /// Extension degree e = (ℓ−1)ℓ^{m−1} = φ(2ℓ^m).
    pub e: u32,
    /// q = 3^e.
    pub q: u128,
    /// 3^{e/2}; exact since e is even.
    pub sqrt_q: u128,
    /// N = 2ℓ^m, the order of ξ.
    pub period: u64,
    /// ℓ^m.
    pub ell_pow_m: u64,
    /// ℓ^{m−1}.
    pub ell_pow_m1: u64,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = 11u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod_u64(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut b = (base % modulus) as u128;
    let md = modulus as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % md;
        }
        b = b * b % md;
        exp >>= 1;
    }
    acc as u64
}

fn factor_u64_small(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Multiplicative order of `base` modulo `n`, given φ(n) and its factorization.
fn order_mod(base: u64, n: u64, phi: u64, phi_factors: &[(u64, u32)]) -> u64 {
    let mut ord = phi;
    for &(p, _) in phi_factors {
        while ord % p == 0 && pow_mod_u64(base, ord / p, n) == 1 {
            ord /= p;
        }
    }
    ord
}

impl FieldParams {
    /// Validate (ℓ, m) for full use; rejects extensions past the default
    /// ceiling (use [`FieldParams::validate_closed_form`] above it).
    pub fn validate(ell: u64, m: u32) -> Result<Self> {
        Self::validate_with_limit(ell, m, DEFAULT_FULL_E)
    }

    /// Validate for closed-form-only work: any e up to the hard cap.
    pub fn validate_closed_form(ell: u64, m: u32) -> Result<Self> {
        Self::validate_with_limit(ell, m, MAX_E)
    }

    fn validate_with_limit(ell: u64, m: u32, max_e: u32) -> Result<Self> {
        if !is_prime_u64(ell) {
            return Err(Error::NotPrime(ell));
        }
        if ell <= 3 {
            return Err(Error::Unsupported(format!(
                "ell = {} must be an odd prime greater than 3",
                ell
            )));
        }
        if m == 0 {
            return Err(Error::Unsupported("m must be positive".into()));
        }
        let mut lam: u64 = 1;
        for _ in 1..m {
            lam = lam
                .checked_mul(ell)
                .ok_or_else(|| Error::Unsupported("ell^(m-1) overflows".into()))?;
        }
        let big_l = lam
            .checked_mul(ell)
            .ok_or_else(|| Error::Unsupported("ell^m overflows".into()))?;
        let period = 2 * big_l;
        let e128 = (ell as u128 - 1) * lam as u128;
        if e128 > max_e as u128 {
            return Err(Error::Unsupported(format!(
                "extension degree e = {} exceeds the ceiling {}",
                e128, max_e
            )));
        }
        let e = e128 as u32;

        // 3 must be a primitive root modulo 2ℓ^m; φ(2ℓ^m) = e.
        let phi = e as u64;
        let phi_factors = factor_u64_small(phi);
        let order = order_mod(3, period, phi, &phi_factors);
        if order != phi {
            return Err(Error::NotPrimitiveRoot { ell, m, order, phi });
        }

        debug_assert!(e % 2 == 0);
        let q = 3u128.pow(e);
        let sqrt_q = 3u128.pow(e / 2);
        let qm1 = q - 1;
        if qm1 % period as u128 != 0 {
            return Err(Error::Unreachable("2*ell^m must divide q-1".into()));
        }
        if (qm1 / period as u128) % 2 != 0 {
            return Err(Error::Unreachable("(q-1)/(2*ell^m) must be even".into()));
        }
        Ok(FieldParams {
            ell,
            m,
            e,
            q,
            sqrt_q,
            period,
            ell_pow_m: big_l,
            ell_pow_m1: lam,
        })
    }

    /// (q−1)/(2ℓ^m): the index of ξ with respect to the normalized g.
    pub fn xi_index(&self) -> u128 {
        (self.q - 1) / self.period as u128
    }

    /// Whether the additive character in the binomial-sum reduction enters
    /// conjugated at these parameters.
    ///
    /// 3^{e/2} ≡ −1 (mod 2ℓ^m) makes the order-2ℓ^m Gauss sums pure, equal
    /// to (−1)^{(√q+1)/(2ℓ^m)}·√q.  When that exponent is odd the ζ-branches
    /// of every closed form pick up a conjugation; the enumeration oracle
    /// pins this down at desk scale.  Odd happens exactly for ℓ ≡ 1 (mod 4).
    pub fn chi_conjugated(&self) -> bool {
        ((self.sqrt_q + 1) / self.period as u128) % 2 == 1
    }
}

/// Tr(ξ^j) by the closed five-case table, reduced into {0,1,2}.
pub fn trace_xi_power(p: &FieldParams, j: u64) -> u8 {
    let lam = p.ell_pow_m1;
    let big_l = p.ell_pow_m;
    let n = p.period;
    let e_mod = |v: u64| (v % 3) as u8;
    if j % n == 0 {
        e_mod((p.ell - 1) * lam)
    } else if j % big_l == 0 && j % 2 == 1 {
        f3_neg(e_mod((p.ell - 1) * lam))
    } else if j % (2 * lam) == 0 {
        // ℓ^m ∤ j here: the previous branches caught every multiple of ℓ^m
        // that is even, and odd multiples of ℓ^m are never divisible by 2λ.
        debug_assert!(j % big_l != 0);
        f3_neg(e_mod(lam))
    } else if j % lam == 0 && j % big_l != 0 && j % 2 == 1 {
        e_mod(lam)
    } else {
        0
    }
}

// --- elements ----------------------------------------------------------------

/// An element of F_q: coefficients of 1, ξ, …, ξ^{e−1}, each in {0,1,2}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coeffs: Vec<u8>,
}

impl FieldElement {
    pub fn zero(e: u32) -> Self {
        FieldElement {
            coeffs: vec![0; e as usize],
        }
    }

    pub fn scalar(e: u32, c: u8) -> Self {
        let mut coeffs = vec![0; e as usize];
        coeffs[0] = c % 3;
        FieldElement { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Base-3 integer encoding, constant term least significant.
    pub fn encoding(&self) -> u128 {
        let mut acc = 0u128;
        for &c in self.coeffs.iter().rev() {
            acc = acc * 3 + c as u128;
        }
        acc
    }

    pub fn from_encoding(e: u32, mut v: u128) -> Self {
        let mut coeffs = vec![0; e as usize];
        for slot in coeffs.iter_mut() {
            *slot = (v % 3) as u8;
            v /= 3;
        }
        debug_assert_eq!(v, 0);
        FieldElement { coeffs }
    }

    /// Digit string, constant term first (most significant digit last).
    pub fn digit_string(&self) -> String {
        self.coeffs.iter().map(|c| char::from(b'0' + c)).collect()
    }
}

// --- context -----------------------------------------------------------------

enum DlogStrategy {
    /// Dense table indexed by element encoding; entry for 0 is unused.
    Table(Vec<u32>),
    /// Baby-step table built lazily; giant stride is g^{−step}.
    Bsgs {
        step: u64,
        giant: FieldElement,
        baby: OnceLock<HashMap<u128, u64>>,
    },
    Unavailable,
}

struct EnumTables {
    /// Tr(g^k) for k ∈ [0, q−1).
    tr_pow: Vec<u8>,
}

/// Immutable tower context; shareable across threads once built.
pub struct FieldContext {
    pub params: FieldParams,
    /// Monic modulus, length e+1.
    pub modulus: Vec<u8>,
    /// x^e mod Q as a dense row of length e.
    reduction_row: Vec<u8>,
    /// ξ^0 … ξ^{N−1}.
    pub xi_pows: Vec<FieldElement>,
    xi_inv: FieldElement,
    /// Tr(ξ^i) for i < e; traces of arbitrary elements are dot products.
    tr_basis: Vec<u8>,
    pub g: FieldElement,
    /// Prime factorization of q−1.
    pub qm1_factors: Vec<(u128, u32)>,
    dlog: DlogStrategy,
    enum_tables: Option<EnumTables>,
}

impl FieldContext {
    /// Build a context with the default enumeration ceiling.
    pub fn build(params: FieldParams) -> Result<Self> {
        Self::build_with_ceiling(params, DEFAULT_ENUM_E)
    }

    /// Build with an explicit enumeration ceiling (capped at e = 16; above
    /// that the per-element tables stop being desk-scale).
    pub fn build_with_ceiling(params: FieldParams, enum_ceiling: u32) -> Result<Self> {
        let e = params.e as usize;
        let lam = params.ell_pow_m1 as usize;
        let ell = params.ell as usize;

        // Q_{2ℓ^m}(x) = Q_{ℓ^m}(−x) = Σ_{k<ℓ} (−1)^k x^{kλ} over F_3.
        let mut modulus = vec![0u8; e + 1];
        for k in 0..ell {
            modulus[k * lam] = if k % 2 == 0 { 1 } else { 2 };
        }
        debug_assert_eq!(modulus[e], 1);
        let reduction_row: Vec<u8> = modulus[..e].iter().map(|&c| f3_neg(c)).collect();

        let mut ctx = FieldContext {
            params,
            modulus,
            reduction_row,
            xi_pows: Vec::new(),
            xi_inv: FieldElement::zero(0),
            tr_basis: Vec::new(),
            g: FieldElement::zero(0),
            qm1_factors: Vec::new(),
            dlog: DlogStrategy::Unavailable,
            enum_tables: None,
        };

        ctx.build_xi_powers()?;
        ctx.verify_modulus_irreducible()?;
        ctx.build_trace_basis()?;
        ctx.qm1_factors = factor_u128(ctx.params.q - 1);
        ctx.find_and_normalize_g()?;

        let enumerate = ctx.params.e <= enum_ceiling.min(16);
        if enumerate {
            ctx.build_enum_tables();
        } else if ctx.params.e <= BSGS_MAX_E {
            let qm1 = ctx.params.q - 1;
            let step = (qm1 as f64).sqrt().ceil() as u64 + 1;
            let giant = ctx.pow(&ctx.g, qm1 - step as u128);
            ctx.dlog = DlogStrategy::Bsgs {
                step,
                giant,
                baby: OnceLock::new(),
            };
        }
        Ok(ctx)
    }

    fn build_xi_powers(&mut self) -> Result<()> {
        let e = self.params.e;
        let n = self.params.period as usize;
        let xi = {
            let mut c = FieldElement::zero(e);
            c.coeffs[1] = 1;
            c
        };
        let mut pows = Vec::with_capacity(n);
        let mut cur = self.one();
        for _ in 0..n {
            pows.push(cur.clone());
            cur = self.mul(&cur, &xi);
        }
        if cur != self.one() {
            return Err(Error::Unreachable("xi does not have order 2*ell^m".into()));
        }
        let minus_one = FieldElement::scalar(e, 2);
        if pows[self.params.ell_pow_m as usize] != minus_one {
            return Err(Error::Unreachable("xi^(ell^m) != -1".into()));
        }
        self.xi_inv = pows[n - 1].clone();
        self.xi_pows = pows;
        Ok(())
    }

    /// x^{3^e} ≡ x and x^{3^{e/r}} ≠ x for every prime r | e.
    fn verify_modulus_irreducible(&self) -> Result<()> {
        let e = self.params.e;
        let x = self.xi_pows[1].clone();
        let mut frob = x.clone();
        let mut at_step: HashMap<u32, FieldElement> = HashMap::new();
        for step in 1..=e {
            frob = self.pow_by_small(&frob, 3);
            at_step.insert(step, frob.clone());
        }
        if at_step[&e] != x {
            return Err(Error::Unreachable("modulus fails Frobenius closure".into()));
        }
        for (r, _) in factor_u64_small(e as u64) {
            let sub = e / r as u32;
            if at_step[&sub] == x {
                return Err(Error::Unreachable(format!(
                    "modulus splits over the degree-{} subfield",
                    sub
                )));
            }
        }
        Ok(())
    }

    fn build_trace_basis(&mut self) -> Result<()> {
        let e = self.params.e;
        let n = self.params.period;
        let mut pow3: Vec<u64> = Vec::with_capacity(e as usize);
        let mut t = 1u64;
        for _ in 0..e {
            pow3.push(t);
            t = t * 3 % n;
        }
        let mut basis = Vec::with_capacity(e as usize);
        for i in 0..e as u64 {
            let mut acc = FieldElement::zero(e);
            for &p3 in &pow3 {
                let idx = (i * p3 % n) as usize;
                for (slot, &c) in acc.coeffs.iter_mut().zip(&self.xi_pows[idx].coeffs) {
                    *slot = f3_add(*slot, c);
                }
            }
            if acc.coeffs[1..].iter().any(|&c| c != 0) {
                return Err(Error::Unreachable("trace left the prime subfield".into()));
            }
            basis.push(acc.coeffs[0]);
        }
        self.tr_basis = basis;
        Ok(())
    }

    /// Scan candidates in increasing base-3 encoding for an element of order
    /// q−1, then adjust by a unit exponent so that g^{(q−1)/N} = ξ exactly.
    fn find_and_normalize_g(&mut self) -> Result<()> {
        let qm1 = self.params.q - 1;
        let mut found = None;
        for v in 2u128..self.params.q {
            let cand = FieldElement::from_encoding(self.params.e, v);
            if self.order_is_qm1(&cand) {
                found = Some(cand);
                break;
            }
        }
        let g0 = found.ok_or_else(|| Error::Unreachable("no primitive element found".into()))?;

        let n = self.params.period;
        let t_index = qm1 / n as u128;
        let g_t = self.pow(&g0, t_index);
        let xi = self.xi_pows[1].clone();
        // ξ lies in <g^T>, a cyclic group of small order N: find the unit u
        // with (g^T)^u = ξ by direct scan.
        let mut unit = None;
        let mut cur = self.one();
        for u in 0..n {
            if cur == xi {
                unit = Some(u);
                break;
            }
            cur = self.mul(&cur, &g_t);
        }
        let u = unit.ok_or_else(|| Error::Unreachable("xi not a power of g^T".into()))?;
        if gcd_u64(u, n) != 1 {
            return Err(Error::Unreachable(
                "xi index not coprime to the period".into(),
            ));
        }
        self.g = if u == 1 {
            g0
        } else {
            // Least u' ≡ u (mod N) with gcd(u', q−1) = 1 keeps g primitive
            // and is deterministic.
            let mut u_prime = u as u128;
            while gcd_u128(u_prime, qm1) != 1 {
                u_prime += n as u128;
            }
            self.pow(&g0, u_prime)
        };
        debug_assert_eq!(self.pow(&self.g, t_index), xi);
        Ok(())
    }

    fn order_is_qm1(&self, cand: &FieldElement) -> bool {
        if cand.is_zero() {
            return false;
        }
        let qm1 = self.params.q - 1;
        self.qm1_factors
            .iter()
            .all(|&(r, _)| self.pow(cand, qm1 / r) != self.one())
    }

    fn build_enum_tables(&mut self) {
        let qm1 = (self.params.q - 1) as usize;
        let mut tr_pow = Vec::with_capacity(qm1);
        let build_table = self.params.q <= DLOG_TABLE_MAX_Q;
        let mut log_table = if build_table {
            vec![u32::MAX; self.params.q as usize]
        } else {
            Vec::new()
        };
        let mut cur = self.one();
        for k in 0..qm1 {
            tr_pow.push(self.trace(&cur));
            if build_table {
                log_table[cur.encoding() as usize] = k as u32;
            }
            cur = self.mul(&cur, &self.g);
        }
        debug_assert_eq!(cur, self.one());
        self.enum_tables = Some(EnumTables { tr_pow });
        if build_table {
            self.dlog = DlogStrategy::Table(log_table);
        } else {
            let qm1 = self.params.q - 1;
            let step = (qm1 as f64).sqrt().ceil() as u64 + 1;
            let giant = self.pow(&self.g, qm1 - step as u128);
            self.dlog = DlogStrategy::Bsgs {
                step,
                giant,
                baby: OnceLock::new(),
            };
        }
    }

    // --- basic arithmetic ---

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(self.params.e)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::scalar(self.params.e, 1)
    }

    /// The scalar c·1 for c ∈ {0,1,2}.
    pub fn scalar(&self, c: u8) -> FieldElement {
        FieldElement::scalar(self.params.e, c)
    }

    pub fn xi(&self) -> &FieldElement {
        &self.xi_pows[1]
    }

    pub fn xi_pow(&self, t: u64) -> &FieldElement {
        &self.xi_pows[(t % self.params.period) as usize]
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| f3_add(x, y))
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| f3_add(x, f3_neg(y)))
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| f3_neg(x)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: u8, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| f3_mul(c, x)).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let e = self.params.e as usize;
        let mut acc = vec![0u16; 2 * e - 1];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                acc[i + j] += (ai * bj) as u16;
            }
        }
        for d in (e..2 * e - 1).rev() {
            let c = (acc[d] % 3) as u8;
            if c != 0 {
                let base = d - e;
                for (i, &r) in self.reduction_row.iter().enumerate() {
                    acc[base + i] += (c * r) as u16;
                }
            }
            acc[d] = 0;
        }
        let coeffs = acc[..e].iter().map(|&v| (v % 3) as u8).collect();
        FieldElement { coeffs }
    }

    fn pow_by_small(&self, a: &FieldElement, k: u32) -> FieldElement {
        let mut acc = self.one();
        let mut rem = k;
        let mut base = a.clone();
        while rem > 0 {
            if rem & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            rem >>= 1;
            if rem > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// a^k with k reduced modulo q−1 for nonzero a; 0^0 = 1 by convention.
    pub fn pow(&self, a: &FieldElement, k: u128) -> FieldElement {
        if a.is_zero() {
            return if k == 0 { self.one() } else { self.zero() };
        }
        let mut rem = k % (self.params.q - 1);
        let mut acc = self.one();
        let mut base = a.clone();
        while rem > 0 {
            if rem & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            rem >>= 1;
            if rem > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.params.q - 2))
    }

    pub fn g_pow(&self, k: u128) -> FieldElement {
        self.pow(&self.g, k)
    }

    /// Absolute trace onto F_3 as a dot product against precomputed basis
    /// traces.
    pub fn trace(&self, a: &FieldElement) -> u8 {
        let mut acc = 0u32;
        for (&c, &t) in a.coeffs.iter().zip(&self.tr_basis) {
            acc += (c * t) as u32;
        }
        (acc % 3) as u8
    }

    /// Coefficients a_1..a_e of a in the shifted basis {ξ, ξ², …, ξ^e}:
    /// index i holds a_{i+1}.
    pub fn shifted_coeffs(&self, a: &FieldElement) -> Vec<u8> {
        self.mul(a, &self.xi_inv).coeffs
    }

    /// Inverse of [`FieldContext::shifted_coeffs`].
    pub fn from_shifted_coeffs(&self, shifted: &[u8]) -> FieldElement {
        let y = FieldElement {
            coeffs: shifted.to_vec(),
        };
        self.mul(&y, &self.xi_pows[1])
    }

    /// Least k ∈ [0, q−1) with g^k = x.
    pub fn discrete_log(&self, x: &FieldElement) -> Result<u128> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        match &self.dlog {
            DlogStrategy::Table(t) => {
                let k = t[x.encoding() as usize];
                if k == u32::MAX {
                    return Err(Error::Unreachable("element missing from log table".into()));
                }
                Ok(k as u128)
            }
            DlogStrategy::Bsgs { step, giant, baby } => {
                let table = baby.get_or_init(|| {
                    let mut map = HashMap::with_capacity(*step as usize);
                    let mut cur = self.one();
                    for j in 0..*step {
                        map.entry(cur.encoding()).or_insert(j);
                        cur = self.mul(&cur, &self.g);
                    }
                    map
                });
                let qm1 = self.params.q - 1;
                let mut cur = x.clone();
                let mut i: u128 = 0;
                while i * *step as u128 <= qm1 {
                    if let Some(&j) = table.get(&cur.encoding()) {
                        return Ok((i * *step as u128 + j as u128) % qm1);
                    }
                    cur = self.mul(&cur, giant);
                    i += 1;
                }
                Err(Error::Unreachable("BSGS exhausted without a hit".into()))
            }
            DlogStrategy::Unavailable => Err(Error::Unsupported(
                "discrete logarithm is not feasible at this field size".into(),
            )),
        }
    }

    /// Whether full F_q^* sweeps are enabled for this context.
    pub fn enumeration_available(&self) -> bool {
        self.enum_tables.is_some()
    }

    /// Tr(g^k) table for enumeration-mode contexts.
    pub fn trace_of_g_pow(&self) -> Result<&[u8]> {
        self.enum_tables
            .as_ref()
            .map(|t| t.tr_pow.as_slice())
            .ok_or_else(|| {
                Error::EnumerationUnavailable(format!(
                    "field with e = {} is in closed-form-only mode",
                    self.params.e
                ))
            })
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}

// --- factoring q−1 ------------------------------------------------------------

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    // Deterministic Miller-Rabin via BigUint modpow; the base set is valid
    // far beyond u128.
    let nb = BigUint::from(n);
    let one = BigUint::one();
    let nm1 = &nb - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, &nb);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % &nb;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    // Brent's cycle variant over BigUint; n here is odd, composite, and has
    // no factor below the trial-division bound.
    let nb = BigUint::from(n);
    let mut c = BigUint::one();
    loop {
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        let step = |v: &BigUint| (v * v + &c) % &nb;
        while d.is_one() {
            x = step(&x);
            y = step(&step(&y));
            let diff = if x >= y { &x - &y } else { &y - &x };
            if num_traits::Zero::is_zero(&diff) {
                break;
            }
            d = diff.gcd(&nb);
        }
        if !d.is_one() && d != nb {
            let digits = d.to_u64_digits();
            let mut out = 0u128;
            for &w in digits.iter().rev() {
                out = (out << 64) | w as u128;
            }
            return out;
        }
        c += BigUint::one();
    }
}

/// Prime factorization of an u128, sorted by prime.
pub fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut factors: HashMap<u128, u32> = HashMap::new();
    for p in [2u128, 3, 5] {
        while n % p == 0 {
            *factors.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut d = 7u128;
    let mut wheel = [4u128, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d <= 1_000_000 && d * d <= n {
        while n % d == 0 {
            *factors.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += *wheel.next().unwrap();
    }
    let mut stack = vec![n];
    while let Some(v) = stack.pop() {
        if v == 1 {
            continue;
        }
        if is_prime_u128(v) {
            *factors.entry(v).or_insert(0) += 1;
        } else {
            let f = pollard_rho(v);
            stack.push(f);
            stack.push(v / f);
        }
    }
    let mut out: Vec<(u128, u32)> = factors.into_iter().collect();
    out.sort_unstable();
    out
}
