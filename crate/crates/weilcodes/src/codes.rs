//! The ternary codes C_{α,β} cut out by the defining set
//! D = {x ∈ F_q^*: Tr(x^{(q−1)/(2ℓ^m)} + βx) = α}, their weight
//! distributions, duals, and the sphere-packing optimality check.
//!
//! Weight distributions come from two independent routes:
//! * brute force: enumerate D, then every codeword weight over F_q^*;
//! * closed form: length n = (q + w(α,β) − 1)/3, the weight values implied
//!   by w(α,β±γ) ∈ {A, B}, and enumerators solved exactly from the first
//!   three power-moment identities with A₂^⊥ from the closed formula.
//!
//! The closed route never copies the published per-case tables; those are
//! encoded separately in [`crate::claims`] and adjudicated against these
//! computations.

use std::collections::{BTreeMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::charsums::{
    classify_j, j_beta_of, w_beta_zero, w_by_class, w_distinct_nonzero, w_values_nonzero, JLabel,
};
use crate::gf3x::{FieldContext, FieldElement, FieldParams};
use crate::{Error, Result};

/// A code selector: α ∈ F_3 together with β ∈ F_q.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    pub alpha: u8,
    pub beta: FieldElement,
}

/// β for closed-form work, where only zero-ness and the class of
/// j_β = −Ind(β) mod 2ℓ^m matter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaClass {
    Zero,
    Class(JLabel),
}

/// Weight histogram of a code of length n and dimension k: weight → count
/// over the q−1 nonzero messages.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    pub n: u128,
    pub k: u32,
    pub weights: BTreeMap<u128, u128>,
}

impl WeightDistribution {
    pub fn total_nonzero(&self) -> u128 {
        self.weights.values().sum()
    }

    /// The first three power-moment identities, exactly:
    /// Σ A_w = q−1, Σ A_w·w = 2nq/3, Σ A_w·w² = q(2n(2n+1) + 2A₂^⊥)/9.
    pub fn pless_check(&self, q: u128, a2_perp: u128) -> Result<()> {
        let qb = BigInt::from(q);
        let n = BigInt::from(self.n);
        let mut m0 = BigInt::zero();
        let mut m1 = BigInt::zero();
        let mut m2 = BigInt::zero();
        for (&w, &count) in &self.weights {
            let wb = BigInt::from(w);
            let cb = BigInt::from(count);
            m0 += &cb;
            m1 += &cb * &wb;
            m2 += &cb * &wb * &wb;
        }
        let expect0 = &qb - 1;
        let expect1 = BigInt::from(2) * &n * &qb / 3;
        let expect2 = &qb
            * (BigInt::from(2) * &n * (BigInt::from(2) * &n + 1) + BigInt::from(2 * a2_perp))
            / 9;
        if m0 != expect0 {
            return Err(Error::Unreachable(format!(
                "moment 0: {} != {}",
                m0, expect0
            )));
        }
        if m1 != expect1 {
            return Err(Error::Unreachable(format!(
                "moment 1: {} != {}",
                m1, expect1
            )));
        }
        if m2 != expect2 {
            return Err(Error::Unreachable(format!(
                "moment 2: {} != {}",
                m2, expect2
            )));
        }
        Ok(())
    }
}

// --- brute-force route ----------------------------------------------------------

/// Exponents k (increasing, so increasing discrete log) with g^k ∈ D.
pub fn defining_set(ctx: &FieldContext, spec: &CodeSpec) -> Result<Vec<u64>> {
    let tr = ctx.trace_of_g_pow()?;
    let qm1 = tr.len();
    let t_exp = ctx.params.xi_index() as usize % qm1;
    let alpha = spec.alpha % 3;
    let mut out = Vec::new();
    if spec.beta.is_zero() {
        for k in 0..qm1 {
            if tr[(k * t_exp) % qm1] == alpha {
                out.push(k as u64);
            }
        }
    } else {
        let i_beta = ctx.discrete_log(&spec.beta)? as usize;
        for k in 0..qm1 {
            let v = (tr[(k * t_exp) % qm1] + tr[(i_beta + k) % qm1]) % 3;
            if v == alpha {
                out.push(k as u64);
            }
        }
    }
    Ok(out)
}

pub fn defining_set_elements(ctx: &FieldContext, spec: &CodeSpec) -> Result<Vec<FieldElement>> {
    Ok(defining_set(ctx, spec)?
        .into_iter()
        .map(|k| ctx.g_pow(k as u128))
        .collect())
}

/// w(α, ·) of an arbitrary element through the template table.
pub fn w_of_element(ctx: &FieldContext, alpha: u8, v: &FieldElement) -> Result<i128> {
    if v.is_zero() {
        Ok(w_beta_zero(&ctx.params, alpha).a)
    } else {
        let j = j_beta_of(ctx, v)?;
        Ok(w_by_class(&ctx.params, alpha, classify_j(&ctx.params, j)?.label)?.a)
    }
}

/// Weight of the codeword attached to γ ≠ 0, via the direct count and the
/// closed identity wt = (2q + 2w(α,β) − w(α,β+γ) − w(α,β−γ))/9; both are
/// computed and must agree.
pub fn codeword_weight(ctx: &FieldContext, spec: &CodeSpec, gamma: &FieldElement) -> Result<u128> {
    if gamma.is_zero() {
        return Err(Error::ZeroElement);
    }
    let tr = ctx.trace_of_g_pow()?;
    let qm1 = tr.len();
    let t = ctx.discrete_log(gamma)? as usize;
    let d = defining_set(ctx, spec)?;
    let direct = d
        .iter()
        .filter(|&&k| tr[(t + k as usize) % qm1] != 0)
        .count() as u128;

    let q = ctx.params.q as i128;
    let w_beta = w_of_element(ctx, spec.alpha, &spec.beta)?;
    let w_plus = w_of_element(ctx, spec.alpha, &ctx.add(&spec.beta, gamma))?;
    let w_minus = w_of_element(ctx, spec.alpha, &ctx.sub(&spec.beta, gamma))?;
    let num = 2 * q + 2 * w_beta - w_plus - w_minus;
    if num % 9 != 0 || num < 0 {
        return Err(Error::InexactDivision(format!("weight formula: {}/9", num)));
    }
    let closed = (num / 9) as u128;
    if closed != direct {
        return Err(Error::Unreachable(format!(
            "weight mismatch for gamma exponent {}: direct {} vs closed {}",
            t, direct, closed
        )));
    }
    Ok(direct)
}

/// Histogram of codeword weights over all γ ∈ F_q^*; errors if any nonzero
/// message evaluates to the zero codeword (the dimension would collapse).
pub fn weight_distribution_brute(
    ctx: &FieldContext,
    spec: &CodeSpec,
) -> Result<WeightDistribution> {
    weight_distribution_brute_jobs(ctx, spec, 1)
}

/// Parallel variant over contiguous γ-exponent ranges; histograms merge by
/// addition, so the result does not depend on the worker count.
pub fn weight_distribution_brute_jobs(
    ctx: &FieldContext,
    spec: &CodeSpec,
    jobs: usize,
) -> Result<WeightDistribution> {
    let tr = ctx.trace_of_g_pow()?;
    let qm1 = tr.len();
    let d = defining_set(ctx, spec)?;
    if d.is_empty() {
        return Err(Error::EmptyCode);
    }
    let count_range = |lo: usize, hi: usize| -> std::result::Result<BTreeMap<u128, u128>, usize> {
        let mut weights: BTreeMap<u128, u128> = BTreeMap::new();
        for t in lo..hi {
            let mut wt = 0u128;
            for &k in &d {
                if tr[(t + k as usize) % qm1] != 0 {
                    wt += 1;
                }
            }
            if wt == 0 {
                return Err(t);
            }
            *weights.entry(wt).or_insert(0) += 1;
        }
        Ok(weights)
    };
    let jobs = jobs.max(1).min(qm1);
    let merged: std::result::Result<BTreeMap<u128, u128>, usize> = if jobs == 1 {
        count_range(0, qm1)
    } else {
        let chunk = qm1.div_ceil(jobs);
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..jobs {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(qm1);
                if lo < hi {
                    let count = &count_range;
                    handles.push(scope.spawn(move || count(lo, hi)));
                }
            }
            let mut acc: BTreeMap<u128, u128> = BTreeMap::new();
            for h in handles {
                let part = h.join().expect("weight worker")?;
                for (w, cnt) in part {
                    *acc.entry(w).or_insert(0) += cnt;
                }
            }
            Ok(acc)
        })
    };
    match merged {
        Ok(weights) => Ok(WeightDistribution {
            n: d.len() as u128,
            k: ctx.params.e,
            weights,
        }),
        Err(t) => Err(Error::Unreachable(format!(
            "gamma = g^{} gives the zero codeword",
            t
        ))),
    }
}

/// A₂^⊥ by enumeration, via both equivalent counts: negation pairs inside D
/// and the solution count of {Tr(x^{(q−1)/N}) = α, Tr(βx) = 0}.
pub fn a2_perp_brute(ctx: &FieldContext, spec: &CodeSpec) -> Result<u128> {
    let tr = ctx.trace_of_g_pow()?;
    let qm1 = tr.len();
    let d = defining_set(ctx, spec)?;
    let half = qm1 as u64 / 2;
    let set: HashSet<u64> = d.iter().copied().collect();
    let pairs = d
        .iter()
        .filter(|&&k| set.contains(&((k + half) % qm1 as u64)))
        .count() as u128;

    let t_exp = ctx.params.xi_index() as usize % qm1;
    let alpha = spec.alpha % 3;
    let x_count = if spec.beta.is_zero() {
        (0..qm1).filter(|&k| tr[(k * t_exp) % qm1] == alpha).count() as u128
    } else {
        let i_beta = ctx.discrete_log(&spec.beta)? as usize;
        (0..qm1)
            .filter(|&k| tr[(k * t_exp) % qm1] == alpha && tr[(i_beta + k) % qm1] == 0)
            .count() as u128
    };
    if pairs != x_count {
        return Err(Error::Unreachable(format!(
            "A2-dual counts disagree: pairs {} vs solutions {}",
            pairs, x_count
        )));
    }
    Ok(pairs)
}

// --- closed-form route ------------------------------------------------------------

/// Code length n = (q + w(α,β) − 1)/3 with the divisibility enforced.
pub fn code_length_closed(p: &FieldParams, alpha: u8, beta: BetaClass) -> Result<u128> {
    let w = match beta {
        BetaClass::Zero => w_beta_zero(p, alpha).a,
        BetaClass::Class(label) => w_by_class(p, alpha, label)?.a,
    };
    let num = p.q as i128 + w - 1;
    if num % 3 != 0 || num < 0 {
        return Err(Error::InexactDivision(format!("length formula: {}/3", num)));
    }
    Ok((num / 3) as u128)
}

/// A₂^⊥ by the closed formula (q − 3 + 2w(α,β) + w(α,0))/9 for β ≠ 0; for
/// β = 0 the negation-pair argument gives A₂^⊥ = n.
pub fn a2_perp_closed(p: &FieldParams, alpha: u8, beta: BetaClass) -> Result<u128> {
    match beta {
        BetaClass::Zero => code_length_closed(p, alpha, beta),
        BetaClass::Class(label) => {
            let a = w_by_class(p, alpha, label)?.a;
            let w0 = w_beta_zero(p, alpha).a;
            let num = p.q as i128 - 3 + 2 * a + w0;
            if num % 9 != 0 || num < 0 {
                return Err(Error::InexactDivision(format!(
                    "A2-dual formula: {}/9",
                    num
                )));
            }
            Ok((num / 9) as u128)
        }
    }
}

fn exact_i128(num: i128, den: i128, what: &str) -> Result<i128> {
    if den == 0 || num % den != 0 {
        return Err(Error::InexactDivision(format!("{}: {}/{}", what, num, den)));
    }
    Ok(num / den)
}

/// Solve the 3×3 Vandermonde-style system for the three open enumerators of
/// a four-weight code; exact integer solution or an error.
fn solve_three(weights: [i128; 3], rhs: [BigInt; 3]) -> Result<[BigInt; 3]> {
    let w = weights.map(BigInt::from);
    // Rows: [1,1,1], [w2,w3,w4], [w2²,w3²,w4²].
    let det = (&w[1] - &w[0]) * (&w[2] - &w[0]) * (&w[2] - &w[1]);
    if det.is_zero() {
        return Err(Error::Unreachable("degenerate weight system".into()));
    }
    let col = |i: usize| -> BigInt {
        // Cramer: replace column i by rhs.
        let m = |r: usize, c: usize| -> BigInt {
            if c == i {
                rhs[r].clone()
            } else {
                match r {
                    0 => BigInt::one(),
                    1 => w[c].clone(),
                    _ => &w[c] * &w[c],
                }
            }
        };
        m(0, 0).clone() * (&m(1, 1) * &m(2, 2) - &m(1, 2) * &m(2, 1))
            - m(0, 1) * (&m(1, 0) * &m(2, 2) - &m(1, 2) * &m(2, 0))
            + m(0, 2) * (&m(1, 0) * &m(2, 1) - &m(1, 1) * &m(2, 0))
    };
    let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (i, slot) in out.iter_mut().enumerate() {
        let num = col(i);
        let (q, r) = num.div_rem(&det);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "enumerator system: {}/{}",
                num, det
            )));
        }
        if q.is_negative() {
            return Err(Error::Unreachable(format!("negative enumerator {}", q)));
        }
        *slot = q;
    }
    Ok(out)
}

use num_integer::Integer as _;

fn bigint_to_u128(v: &BigInt) -> Result<u128> {
    let (sign, digits) = v.to_u64_digits();
    if sign == num_bigint::Sign::Minus || digits.len() > 2 {
        return Err(Error::Unreachable(format!("count out of range: {}", v)));
    }
    let mut out = 0u128;
    for &d in digits.iter().rev() {
        out = (out << 64) | d as u128;
    }
    Ok(out)
}

/// The closed-form weight distribution.
///
/// For β = 0 the enumerators are exact class counts.  For β ≠ 0 the weight
/// w₁ = (2q + A − w₀)/9 occurs exactly twice (γ = ±β), the remaining
/// weights are 2q/9, (2q+A−B)/9, (2q+2A−2B)/9 where {A, B} are the two
/// values w(α, ·) takes on nonzero arguments, and their enumerators solve
/// the first three moment identities.  Coinciding weights are merged
/// afterwards, which reproduces the degenerate two- and three-weight cases
/// without special-casing them.
pub fn weight_distribution_closed(
    p: &FieldParams,
    alpha: u8,
    beta: BetaClass,
) -> Result<WeightDistribution> {
    let q = p.q as i128;
    let w0 = w_beta_zero(p, alpha).a;
    match beta {
        BetaClass::Zero => {
            let n_val = exact_i128(q + w0 - 1, 3, "length")?;
            if n_val == 0 {
                return Err(Error::EmptyCode);
            }
            let per_class = (p.q - 1) / p.period as u128;
            let mut weights: BTreeMap<u128, u128> = BTreeMap::new();
            for (label, w_gamma) in w_values_nonzero(p, alpha)? {
                let wt = exact_i128(2 * q + 2 * w0 - 2 * w_gamma.a, 9, "weight")?;
                if wt <= 0 {
                    return Err(Error::Unreachable("nonpositive weight".into()));
                }
                *weights.entry(wt as u128).or_insert(0) += label.size(p) as u128 * per_class;
            }
            let dist = WeightDistribution {
                n: n_val as u128,
                k: p.e,
                weights,
            };
            if dist.total_nonzero() != p.q - 1 {
                return Err(Error::Unreachable("class counts do not cover F_q^*".into()));
            }
            Ok(dist)
        }
        BetaClass::Class(label) => {
            let a_val = w_by_class(p, alpha, label)?.a;
            let n_val = exact_i128(q + a_val - 1, 3, "length")?;
            if n_val <= 0 {
                return Err(Error::EmptyCode);
            }
            let w1 = exact_i128(2 * q + a_val - w0, 9, "w1")?;
            let distinct = w_distinct_nonzero(p, alpha)?;
            let b_val = distinct
                .iter()
                .map(|v| v.a)
                .find(|&v| v != a_val)
                .unwrap_or(a_val);
            let mut slots: Vec<(i128, BigInt)> = vec![(w1, BigInt::from(2))];
            if a_val == b_val {
                // All γ outside ±β see the same pair sum: single weight 2q/9.
                let w2 = exact_i128(2 * q, 9, "w2")?;
                slots.push((w2, BigInt::from(q - 3)));
            } else {
                let w2 = exact_i128(2 * q, 9, "w2")?;
                let w3 = exact_i128(2 * q + a_val - b_val, 9, "w3")?;
                let w4 = exact_i128(2 * q + 2 * (a_val - b_val), 9, "w4")?;
                let a2 = a2_perp_closed(p, alpha, beta)? as i128;
                let n_b = BigInt::from(n_val);
                let q_b = BigInt::from(q);
                let m1 = BigInt::from(2) * &n_b * &q_b / 3 - BigInt::from(2 * w1);
                let m2 = &q_b
                    * (BigInt::from(2) * &n_b * (BigInt::from(2) * &n_b + 1)
                        + BigInt::from(2 * a2))
                    / 9
                    - BigInt::from(2) * BigInt::from(w1) * BigInt::from(w1);
                let counts = solve_three([w2, w3, w4], [BigInt::from(q - 3), m1, m2])?;
                slots.push((w2, counts[0].clone()));
                slots.push((w3, counts[1].clone()));
                slots.push((w4, counts[2].clone()));
            }
            let mut weights: BTreeMap<u128, u128> = BTreeMap::new();
            for (w, count) in slots {
                if count.is_zero() {
                    continue;
                }
                if w <= 0 {
                    return Err(Error::Unreachable("nonpositive weight".into()));
                }
                *weights.entry(w as u128).or_insert(0) += bigint_to_u128(&count)?;
            }
            let dist = WeightDistribution {
                n: n_val as u128,
                k: p.e,
                weights,
            };
            if dist.total_nonzero() != p.q - 1 {
                return Err(Error::Unreachable("enumerators do not sum to q-1".into()));
            }
            Ok(dist)
        }
    }
}

/// Closed distribution for a concrete β inside a full context.
pub fn weight_distribution_closed_for(
    ctx: &FieldContext,
    spec: &CodeSpec,
) -> Result<WeightDistribution> {
    let beta = if spec.beta.is_zero() {
        BetaClass::Zero
    } else {
        let j = j_beta_of(ctx, &spec.beta)?;
        BetaClass::Class(classify_j(&ctx.params, j)?.label)
    };
    weight_distribution_closed(&ctx.params, spec.alpha, beta)
}

// --- dual code -----------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DualDistance {
    Two,
    AtLeastThree,
}

impl std::fmt::Display for DualDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DualDistance::Two => f.write_str("2"),
            DualDistance::AtLeastThree => f.write_str(">=3"),
        }
    }
}

/// Dual parameters and the optimality verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct DualReport {
    pub n: u128,
    pub dual_dim: u128,
    pub d_min: DualDistance,
    pub a2_perp: u128,
    /// Sphere-packing verdict for [n, n−e, d_min]; only meaningful when the
    /// minimum distance is known exactly (d = 2).
    pub sphere_packing_optimal: Option<bool>,
    /// The sufficient condition n > (q−1)/2 under which the bound certifies
    /// optimality at d = 2.
    pub n_exceeds_half_qm1: bool,
}

/// Dual report from closed-form data.
pub fn dual_report(p: &FieldParams, alpha: u8, beta: BetaClass) -> Result<DualReport> {
    let n = code_length_closed(p, alpha, beta)?;
    if n == 0 {
        return Err(Error::EmptyCode);
    }
    let a2 = a2_perp_closed(p, alpha, beta)?;
    let d_min = if matches!(beta, BetaClass::Zero) || a2 > 0 {
        DualDistance::Two
    } else {
        DualDistance::AtLeastThree
    };
    let dual_dim = n - p.e as u128;
    let sphere = match d_min {
        DualDistance::Two => Some(hamming_bound_check(n, dual_dim, 2)),
        DualDistance::AtLeastThree => None,
    };
    Ok(DualReport {
        n,
        dual_dim,
        d_min,
        a2_perp: a2,
        sphere_packing_optimal: sphere,
        n_exceeds_half_qm1: n > (p.q - 1) / 2,
    })
}

/// True iff no ternary [n, k, d+1] code can satisfy the sphere-packing
/// bound, i.e. Σ_{i ≤ ⌊d/2⌋} C(n,i)·2^i > 3^{n−k}, computed exactly.
pub fn hamming_bound_check(n: u128, k: u128, d: u128) -> bool {
    let t = d / 2;
    let mut sum = BigUint::one();
    let mut binom = BigUint::one();
    let two = BigUint::from(2u32);
    let mut pow2 = BigUint::one();
    for i in 1..=t {
        binom = binom * BigUint::from(n - (i - 1)) / BigUint::from(i);
        pow2 = &pow2 * &two;
        sum += &binom * &pow2;
    }
    let rhs = BigUint::from(3u32).pow((n - k) as u32);
    sum > rhs
}

// --- the F-partition of F_q^* -----------------------------------------------------

/// Membership class of x by which of the four power conditions
/// x^{(q−1)/(2ℓ^m)}, x^{(q−1)/ℓ^m}, x^{(q−1)/(2ℓ^{m−1})}, x^{(q−1)/ℓ^{m−1}}
/// equal 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FLabel {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

pub const ALL_F_LABELS: [FLabel; 6] = [
    FLabel::F1,
    FLabel::F2,
    FLabel::F3,
    FLabel::F4,
    FLabel::F5,
    FLabel::F6,
];

impl std::fmt::Display for FLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{}", *self as u8 + 1)
    }
}

pub fn f_classify(ctx: &FieldContext, x: &FieldElement) -> Result<FLabel> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let p = &ctx.params;
    let qm1 = p.q - 1;
    let one = ctx.one();
    let y1 = ctx.pow(x, qm1 / p.period as u128) == one;
    let y2 = ctx.pow(x, qm1 / p.ell_pow_m as u128) == one;
    let y3 = ctx.pow(x, qm1 / (2 * p.ell_pow_m1) as u128) == one;
    let y4 = ctx.pow(x, qm1 / p.ell_pow_m1 as u128) == one;
    Ok(match (y1, y2, y3, y4) {
        (true, _, _, _) => FLabel::F1,
        (false, true, true, _) => FLabel::F2,
        (false, true, false, _) => FLabel::F3,
        (false, false, true, true) => FLabel::F4,
        (false, false, false, true) => FLabel::F5,
        (false, false, false, false) => FLabel::F6,
        (false, false, true, false) => {
            return Err(Error::Unreachable(
                "x^{(q-1)/(2λ)} = 1 forces x^{(q-1)/λ} = 1".into(),
            ))
        }
    })
}

/// (Tr(x^{(q−1)/ℓ^m}), Tr(x^{(q−1)/(2ℓ^m)})) computed directly.
pub fn trace_pair(ctx: &FieldContext, x: &FieldElement) -> Result<(u8, u8)> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let p = &ctx.params;
    let qm1 = p.q - 1;
    let tr1 = ctx.trace(&ctx.pow(x, qm1 / p.ell_pow_m as u128));
    let tr2 = ctx.trace(&ctx.pow(x, qm1 / p.period as u128));
    Ok((tr1, tr2))
}

/// The predicted (Tr₁, Tr₂) pair for each F-class.
pub fn predicted_trace_pair(p: &FieldParams, label: FLabel) -> (u8, u8) {
    if p.ell % 3 == 1 {
        let tr1 = match label {
            FLabel::F4 | FLabel::F5 => 2,
            _ => 0,
        };
        let tr2 = match label {
            FLabel::F2 | FLabel::F5 => 1,
            FLabel::F4 => 2,
            _ => 0,
        };
        (tr1, tr2)
    } else {
        // (−1)^{m−1} and (−1)^m as elements of {1, 2}.
        let pm1 = if (p.m - 1) % 2 == 0 { 1 } else { 2 };
        let pm = 3 - pm1;
        let tr1 = match label {
            FLabel::F1 | FLabel::F2 | FLabel::F3 => pm1,
            FLabel::F4 | FLabel::F5 => pm,
            FLabel::F6 => 0,
        };
        let tr2 = match label {
            FLabel::F1 | FLabel::F5 => pm1,
            FLabel::F3 | FLabel::F4 => pm,
            FLabel::F2 | FLabel::F6 => 0,
        };
        (tr1, tr2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3x::{FieldContext, FieldParams};

    fn ctx(ell: u64, m: u32) -> FieldContext {
        FieldContext::build(FieldParams::validate(ell, m).unwrap()).unwrap()
    }

    /// β = g^{q−1−j} has j_β = j; β = 1 covers j = 0.
    fn beta_for_j(c: &FieldContext, j: u64) -> FieldElement {
        if j == 0 {
            c.one()
        } else {
            c.g_pow(c.params.q - 1 - j as u128)
        }
    }

    #[test]
    fn defining_set_sizes() {
        let c5 = ctx(5, 1);
        let empty = CodeSpec {
            alpha: 0,
            beta: c5.zero(),
        };
        assert!(defining_set(&c5, &empty).unwrap().is_empty());
        let spec = CodeSpec {
            alpha: 1,
            beta: c5.zero(),
        };
        assert_eq!(defining_set(&c5, &spec).unwrap().len(), 40);
        let c7 = ctx(7, 1);
        let spec7 = CodeSpec {
            alpha: 0,
            beta: c7.zero(),
        };
        assert_eq!(defining_set(&c7, &spec7).unwrap().len(), 104);
    }

    #[test]
    fn closed_length_matches_brute_sizes() {
        let c = ctx(5, 1);
        for alpha in [0u8, 1, 2] {
            for j in 0..c.params.period {
                let beta = beta_for_j(&c, j);
                let spec = CodeSpec { alpha, beta };
                let label = classify_j(&c.params, j).unwrap().label;
                let closed = code_length_closed(&c.params, alpha, BetaClass::Class(label)).unwrap();
                assert_eq!(closed, defining_set(&c, &spec).unwrap().len() as u128);
            }
            // β = 0 row.
            let spec = CodeSpec {
                alpha,
                beta: c.zero(),
            };
            let closed = code_length_closed(&c.params, alpha, BetaClass::Zero).unwrap();
            assert_eq!(closed, defining_set(&c, &spec).unwrap().len() as u128);
        }
    }

    #[test]
    fn two_weight_code_at_5_1_alpha_nonzero_beta_zero() {
        let c = ctx(5, 1);
        let spec = CodeSpec {
            alpha: 1,
            beta: c.zero(),
        };
        let brute = weight_distribution_brute(&c, &spec).unwrap();
        assert_eq!(brute.n, 40);
        assert_eq!(brute.k, 4);
        let expect: BTreeMap<u128, u128> = [(24u128, 40u128), (30, 40)].into_iter().collect();
        assert_eq!(brute.weights, expect);
        let closed = weight_distribution_closed(&c.params, 1, BetaClass::Zero).unwrap();
        assert_eq!(closed, brute);
        // Every codeword weight is one of the two (spot check).
        for t in [0u128, 5, 33] {
            let w = codeword_weight(&c, &spec, &c.g_pow(t)).unwrap();
            assert!(w == 24 || w == 30);
        }
    }

    #[test]
    fn empty_code_is_first_class() {
        let c = ctx(5, 1);
        let spec = CodeSpec {
            alpha: 0,
            beta: c.zero(),
        };
        assert_eq!(weight_distribution_brute(&c, &spec), Err(Error::EmptyCode));
        assert_eq!(
            weight_distribution_closed(&c.params, 0, BetaClass::Zero),
            Err(Error::EmptyCode)
        );
    }

    #[test]
    fn two_weight_exception_alpha_zero_beta_nonzero() {
        // ℓ ≡ −1, m = 1, α = 0, β ≠ 0: [q/3, e] with A_{q/3} = 2, A_{2q/9} = q−3.
        let c = ctx(5, 1);
        for j in [0u64, 1, 5, 8] {
            let spec = CodeSpec {
                alpha: 0,
                beta: beta_for_j(&c, j),
            };
            let brute = weight_distribution_brute(&c, &spec).unwrap();
            assert_eq!(brute.n, 27);
            let expect: BTreeMap<u128, u128> = [(18u128, 78u128), (27, 2)].into_iter().collect();
            assert_eq!(brute.weights, expect);
            let closed = weight_distribution_closed_for(&c, &spec).unwrap();
            assert_eq!(closed, brute);
        }
    }

    #[test]
    fn three_weight_exception_22_4() {
        // w(α, β) = −14 cases at (5,1): a [22,4] code with weights
        // {12: 22, 18: 18, 15: 40}.  Occurs at (α = 1, j_β = 0) and
        // (α = 2, j_β = 5).
        let c = ctx(5, 1);
        for (alpha, j) in [(1u8, 0u64), (2, 5)] {
            let spec = CodeSpec {
                alpha,
                beta: beta_for_j(&c, j),
            };
            let brute = weight_distribution_brute(&c, &spec).unwrap();
            assert_eq!(brute.n, 22);
            let expect: BTreeMap<u128, u128> =
                [(12u128, 22u128), (15, 40), (18, 18)].into_iter().collect();
            assert_eq!(brute.weights, expect);
            let closed = weight_distribution_closed_for(&c, &spec).unwrap();
            assert_eq!(closed, brute);
        }
        // The complementary pairings give the four-weight [31, 4] code.
        let spec = CodeSpec {
            alpha: 1,
            beta: beta_for_j(&c, 5),
        };
        assert_eq!(weight_distribution_brute(&c, &spec).unwrap().n, 31);
    }

    #[test]
    fn closed_matches_brute_full_sweep_5_1() {
        let c = ctx(5, 1);
        for alpha in [0u8, 1, 2] {
            for j in 0..c.params.period {
                let spec = CodeSpec {
                    alpha,
                    beta: beta_for_j(&c, j),
                };
                let brute = weight_distribution_brute(&c, &spec).unwrap();
                let closed = weight_distribution_closed_for(&c, &spec).unwrap();
                assert_eq!(closed, brute, "alpha={} j={}", alpha, j);
                let a2 = a2_perp_brute(&c, &spec).unwrap();
                brute.pless_check(c.params.q, a2).unwrap();
            }
        }
    }

    #[test]
    fn a2_perp_formula_and_examples() {
        let c = ctx(5, 1);
        // α = 0, any β ≠ 0 at (5,1): A₂^⊥ = 0 (the distance-3 exception).
        for j in 0..c.params.period {
            let spec = CodeSpec {
                alpha: 0,
                beta: beta_for_j(&c, j),
            };
            let label = classify_j(&c.params, j).unwrap().label;
            let brute = a2_perp_brute(&c, &spec).unwrap();
            assert_eq!(brute, 0);
            assert_eq!(
                a2_perp_closed(&c.params, 0, BetaClass::Class(label)).unwrap(),
                0
            );
        }
        // α ≠ 0 values match the formula across classes.
        for alpha in [1u8, 2] {
            for j in 0..c.params.period {
                let spec = CodeSpec {
                    alpha,
                    beta: beta_for_j(&c, j),
                };
                let label = classify_j(&c.params, j).unwrap().label;
                assert_eq!(
                    a2_perp_brute(&c, &spec).unwrap(),
                    a2_perp_closed(&c.params, alpha, BetaClass::Class(label)).unwrap()
                );
            }
        }
        // β = 0: negation pairs give A₂^⊥ = n.
        let spec = CodeSpec {
            alpha: 1,
            beta: c.zero(),
        };
        assert_eq!(a2_perp_brute(&c, &spec).unwrap(), 40);
    }

    #[test]
    fn defining_set_negation_closure_iff_beta_zero() {
        let c = ctx(5, 1);
        let qm1 = (c.params.q - 1) as u64;
        let closed_under_neg = |d: &[u64]| {
            let set: HashSet<u64> = d.iter().copied().collect();
            d.iter().all(|&k| set.contains(&((k + qm1 / 2) % qm1)))
        };
        let spec0 = CodeSpec {
            alpha: 1,
            beta: c.zero(),
        };
        assert!(closed_under_neg(&defining_set(&c, &spec0).unwrap()));
        for alpha in [0u8, 1, 2] {
            for j in [0u64, 3, 5] {
                let spec = CodeSpec {
                    alpha,
                    beta: beta_for_j(&c, j),
                };
                let d = defining_set(&c, &spec).unwrap();
                assert!(!closed_under_neg(&d), "alpha={} j={}", alpha, j);
            }
        }
    }

    #[test]
    fn codeword_weight_negation_symmetry_beta_zero() {
        let c = ctx(5, 1);
        let spec = CodeSpec {
            alpha: 1,
            beta: c.zero(),
        };
        for t in [0u128, 7, 19, 41] {
            let gamma = c.g_pow(t);
            let two_gamma = c.scalar_mul(2, &gamma);
            assert_eq!(
                codeword_weight(&c, &spec, &gamma).unwrap(),
                codeword_weight(&c, &spec, &two_gamma).unwrap()
            );
        }
        assert_eq!(
            codeword_weight(&c, &spec, &c.zero()),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn hamming_bound_examples() {
        // [4,2,2]: 9·(1+8) = 81 is not > 81.
        assert!(!hamming_bound_check(4, 2, 2));
        // d = 2 reduces to n > (3^e − 1)/2.
        for e in [4u128, 6] {
            let q = 3u128.pow(e as u32);
            for n in [(q - 1) / 2 - 1, (q - 1) / 2, (q - 1) / 2 + 1, q - 1] {
                assert_eq!(hamming_bound_check(n, n - e, 2), n > (q - 1) / 2);
            }
        }
    }

    #[test]
    fn dual_reports() {
        let p = FieldParams::validate(5, 1).unwrap();
        // α = 0, β ≠ 0: A₂^⊥ = 0, distance at least 3.
        let r = dual_report(&p, 0, BetaClass::Class(JLabel::Zero)).unwrap();
        assert_eq!(r.d_min, DualDistance::AtLeastThree);
        assert_eq!(r.a2_perp, 0);
        assert_eq!(r.dual_dim, r.n - 4);
        assert_eq!(r.sphere_packing_optimal, None);
        // β = 0: negation pairs force d = 2.
        let r = dual_report(&p, 1, BetaClass::Zero).unwrap();
        assert_eq!(r.d_min, DualDistance::Two);
        assert_eq!(r.a2_perp, 40);
    }

    #[test]
    fn f_partition_and_trace_predictions_5_1() {
        let c = ctx(5, 1);
        let mut sizes: BTreeMap<FLabel, u64> = BTreeMap::new();
        for k in 0..(c.params.q - 1) {
            let x = c.g_pow(k);
            let label = f_classify(&c, &x).unwrap();
            *sizes.entry(label).or_insert(0) += 1;
            assert_eq!(
                trace_pair(&c, &x).unwrap(),
                predicted_trace_pair(&c.params, label),
                "k = {}",
                k
            );
        }
        let total: u64 = sizes.values().sum();
        assert_eq!(total as u128, c.params.q - 1);
        // x = 1 ∈ F1.
        assert_eq!(f_classify(&c, &c.one()).unwrap(), FLabel::F1);
        // x = g^{ℓ^m} has x^{(q−1)/N} = ξ^{ℓ^m} = −1.  By the membership
        // conditions as stated that lands in F3, never F2: the third power
        // is the ℓ-th power of the first, so −1 there forces −1.  F2 is
        // empty for every parameter choice.
        let x = c.g_pow(c.params.ell_pow_m as u128);
        assert_eq!(f_classify(&c, &x).unwrap(), FLabel::F3);
        assert!(!sizes.contains_key(&FLabel::F2));
    }
}
