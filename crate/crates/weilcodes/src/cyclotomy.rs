//! Cyclotomic classes C_j = g^j·(F_q^*)^d of order d and the pair counts
//! N_{j1,j2} = #{γ ∈ F_q^*\{±β}: β+γ ∈ C_{j1}, β−γ ∈ C_{j2}}.
//!
//! The existence guarantee (N_{j1,j2} > 0 whenever d ≤ d₀ ≈ 0.4595·q^{1/4})
//! is what forces every pair-sum value to occur in the four-weight
//! derivation; the threshold test here is exact integer arithmetic, no
//! floating point.

use num_bigint::BigInt;

use crate::gf3x::{FieldContext, FieldElement};
use crate::{Error, Result};

/// Index of the cyclotomic class of x: Ind(x) mod d.
pub fn class_index(ctx: &FieldContext, d: u64, x: &FieldElement) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if d == 0 || (ctx.params.q - 1) % d as u128 != 0 {
        return Err(Error::BadDivisor(d));
    }
    Ok((ctx.discrete_log(x)? % d as u128) as u64)
}

/// N_{j1,j2} for one pair of class indices.
pub fn pair_count(
    ctx: &FieldContext,
    d: u64,
    beta: &FieldElement,
    j1: u64,
    j2: u64,
) -> Result<u128> {
    if j1 >= d || j2 >= d {
        return Err(Error::OutOfRange(j1.max(j2), d));
    }
    let table = pair_count_table(ctx, d, beta)?;
    Ok(table[j1 as usize][j2 as usize])
}

/// All d×d pair counts in one sweep over γ.
pub fn pair_count_table(ctx: &FieldContext, d: u64, beta: &FieldElement) -> Result<Vec<Vec<u128>>> {
    if beta.is_zero() {
        return Err(Error::ZeroB);
    }
    if d == 0 || (ctx.params.q - 1) % d as u128 != 0 {
        return Err(Error::BadDivisor(d));
    }
    if !ctx.enumeration_available() {
        return Err(Error::EnumerationUnavailable(
            "pair counting sweeps all of F_q^*".into(),
        ));
    }
    let qm1 = ctx.params.q - 1;
    let minus_beta = ctx.neg(beta);
    let mut counts = vec![vec![0u128; d as usize]; d as usize];
    let mut gamma = ctx.one();
    for _ in 0..qm1 {
        if gamma != *beta && gamma != minus_beta {
            let plus = ctx.add(beta, &gamma);
            let minus = ctx.sub(beta, &gamma);
            // γ = ∓β are excluded, so β ± γ are both nonzero here.
            let c1 = (ctx.discrete_log(&plus)? % d as u128) as usize;
            let c2 = (ctx.discrete_log(&minus)? % d as u128) as usize;
            counts[c1][c2] += 1;
        }
        gamma = ctx.mul(&gamma, &ctx.g);
    }
    Ok(counts)
}

/// Exact test of d ≤ d₀ = (2 − 4/√5)^{1/2}·q^{1/4}.
///
/// Squaring twice and clearing √5 turns the comparison into
/// 5d⁴ < 36q and 1280·q² ≤ (36q − 5d⁴)²; equality cannot occur because
/// 1280 is not a perfect square.
pub fn d0_admissible(q: u128, d: u64) -> bool {
    let q = BigInt::from(q);
    let d4 = BigInt::from(d).pow(4);
    let margin = 36 * &q - 5 * &d4;
    if margin <= BigInt::from(0) {
        return false;
    }
    BigInt::from(1280) * &q * &q <= &margin * &margin
}

/// Divisors d of q−1 with d ≤ d₀, ascending.
pub fn admissible_divisors(ctx: &FieldContext) -> Vec<u64> {
    let q = ctx.params.q;
    let mut out: Vec<u64> = Vec::new();
    // DFS over the factorization, pruned at the threshold.
    fn rec(factors: &[(u128, u32)], idx: usize, cur: u128, q: u128, out: &mut Vec<u64>) {
        if idx == factors.len() {
            out.push(cur as u64);
            return;
        }
        let (p, max_k) = factors[idx];
        let mut v = cur;
        for _ in 0..=max_k {
            if v <= u64::MAX as u128 && d0_admissible(q, v as u64) {
                rec(factors, idx + 1, v, q, out);
            } else {
                break;
            }
            match v.checked_mul(p) {
                Some(next) => v = next,
                None => break,
            }
        }
    }
    rec(&ctx.qm1_factors, 0, 1, q, &mut out);
    out.sort_unstable();
    out
}
