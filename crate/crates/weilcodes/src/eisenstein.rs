//! Exact arithmetic in Z[ζ] with ζ a primitive cube root of unity.
//!
//! Every ternary character sum in this crate takes values here.  The basis
//! is {1, ζ}; ζ² is always rewritten as −1−ζ, so equality of sums is plain
//! integer equality on the coefficient pair.  Coefficients use `i128` with
//! checked arithmetic, which leaves ample headroom: every sum in scope is
//! bounded by q ≤ 3^64 in absolute value.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::gf3x::FieldParams;
use crate::{Error, Result};

/// `a + b·ζ` with ζ = e^{2πi/3}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Eisenstein {
    pub a: i128,
    pub b: i128,
}

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
    pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };

    pub fn new(a: i128, b: i128) -> Self {
        Eisenstein { a, b }
    }

    pub fn from_int(v: i128) -> Self {
        Eisenstein { a: v, b: 0 }
    }

    /// ζ^t for t ∈ {0,1,2}: the value of the canonical additive character
    /// on an element of trace t.
    pub fn zeta_pow(t: u8) -> Self {
        match t % 3 {
            0 => Eisenstein::ONE,
            1 => Eisenstein::new(0, 1),
            _ => Eisenstein::new(-1, -1),
        }
    }

    pub fn add(self, rhs: Self) -> Self {
        Eisenstein::new(
            self.a.checked_add(rhs.a).expect("eisenstein add overflow"),
            self.b.checked_add(rhs.b).expect("eisenstein add overflow"),
        )
    }

    pub fn sub(self, rhs: Self) -> Self {
        self.add(rhs.neg())
    }

    pub fn neg(self) -> Self {
        Eisenstein::new(-self.a, -self.b)
    }

    /// (a + bζ)(c + dζ) = ac − bd + (ad + bc − bd)ζ, using ζ² = −1−ζ.
    pub fn mul(self, rhs: Self) -> Self {
        let ac = self.a.checked_mul(rhs.a).expect("eisenstein mul overflow");
        let bd = self.b.checked_mul(rhs.b).expect("eisenstein mul overflow");
        let ad = self.a.checked_mul(rhs.b).expect("eisenstein mul overflow");
        let bc = self.b.checked_mul(rhs.a).expect("eisenstein mul overflow");
        Eisenstein::new(ac - bd, ad + bc - bd)
    }

    pub fn scale(self, k: i128) -> Self {
        Eisenstein::new(
            self.a.checked_mul(k).expect("eisenstein scale overflow"),
            self.b.checked_mul(k).expect("eisenstein scale overflow"),
        )
    }

    /// Complex conjugation, i.e. the ring automorphism ζ ↦ ζ² = −1−ζ.
    pub fn conj(self) -> Self {
        Eisenstein::new(self.a - self.b, -self.b)
    }

    /// Exact division by a rational integer; errors unless both
    /// coefficients are divisible.
    pub fn div_exact(self, d: i128) -> Result<Self> {
        if d == 0 || self.a % d != 0 || self.b % d != 0 {
            return Err(Error::InexactDivision(format!("({}) / {}", self, d)));
        }
        Ok(Eisenstein::new(self.a / d, self.b / d))
    }

    /// True when the value lies in Z (ζ-coefficient zero).
    pub fn is_rational(self) -> bool {
        self.b == 0
    }
}

impl std::fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b >= 0 {
            write!(f, "{}+{}*z", self.a, self.b)
        } else {
            write!(f, "{}{}*z", self.a, self.b)
        }
    }
}

/// Serialize an integer as a JSON number when it fits in 2^53, else as a
/// decimal string, so plain JSON tooling never rounds.
pub fn serialize_exact_int<S: Serializer>(v: &i128, s: S) -> std::result::Result<S::Ok, S::Error> {
    const SAFE: i128 = 1 << 53;
    if -SAFE <= *v && *v <= SAFE {
        s.serialize_i64(*v as i64)
    } else {
        s.serialize_str(&v.to_string())
    }
}

/// Same convention for unsigned quantities such as q.
pub fn serialize_exact_uint<S: Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    const SAFE: u128 = 1 << 53;
    if *v <= SAFE {
        s.serialize_u64(*v as u64)
    } else {
        s.serialize_str(&v.to_string())
    }
}

impl Serialize for Eisenstein {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Eisenstein", 2)?;
        st.serialize_field("a", &ExactInt(self.a))?;
        st.serialize_field("b", &ExactInt(self.b))?;
        st.end()
    }
}

/// Wrapper applying the exact-integer JSON convention.
#[derive(Debug, Clone, Copy)]
pub struct ExactInt(pub i128);

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_exact_int(&self.0, s)
    }
}

/// The closed-form templates a binomial sum can evaluate to once the class
/// of the exponent is known.  `Base*` are the rational-integer branches;
/// `H`/`CapH` are the ζ-dependent ones for ℓ ≡ 1 and ℓ ≡ −1 (mod 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SumTemplate {
    BaseEllOne,
    BaseEllMinusOne,
    H { zeta_sign: i8 },
    CapH { zeta_sign: i8 },
}

impl SumTemplate {
    pub fn eval(self, p: &FieldParams) -> Result<Eisenstein> {
        match self {
            SumTemplate::BaseEllOne => base_ell_one(p),
            SumTemplate::BaseEllMinusOne => base_ell_minus_one(p),
            SumTemplate::H { zeta_sign } => eval_h(p, zeta_sign),
            SumTemplate::CapH { zeta_sign } => eval_cap_h(p, zeta_sign),
        }
    }
}

fn zeta_signed(sign: i8) -> Eisenstein {
    if sign >= 0 {
        Eisenstein::zeta_pow(1)
    } else {
        Eisenstein::zeta_pow(2)
    }
}

fn sqrt_q_plus_1(p: &FieldParams) -> i128 {
    p.sqrt_q as i128 + 1
}

/// −1 + (√q+1)(3ℓ−3)/(2ℓ^m), the constant branch for ℓ ≡ 1 (mod 3).
pub fn base_ell_one(p: &FieldParams) -> Result<Eisenstein> {
    let two_l = 2 * p.ell_pow_m as i128;
    let num = Eisenstein::from_int(sqrt_q_plus_1(p) * (3 * p.ell as i128 - 3));
    Ok(Eisenstein::from_int(-1).add(num.div_exact(two_l)?))
}

/// −1 + 3(√q+1)/(2ℓ^{m−1}), the constant branch for ℓ ≡ −1 (mod 3).
pub fn base_ell_minus_one(p: &FieldParams) -> Result<Eisenstein> {
    let two_lam = 2 * p.ell_pow_m1 as i128;
    let num = Eisenstein::from_int(3 * sqrt_q_plus_1(p));
    Ok(Eisenstein::from_int(-1).add(num.div_exact(two_lam)?))
}

/// h(x) = −x + (√q+1)(2ℓ^m·x − 2ℓ^m + 3ℓ − 3)/(2ℓ^m) evaluated at
/// x = ζ^{zeta_sign}.  Used on the ℓ ≡ 1 (mod 3) branch.
pub fn eval_h(p: &FieldParams, zeta_sign: i8) -> Result<Eisenstein> {
    let x = zeta_signed(zeta_sign);
    let two_l = 2 * p.ell_pow_m as i128;
    let c = two_l - 3 * p.ell as i128 + 3;
    let num = x
        .scale(two_l)
        .sub(Eisenstein::from_int(c))
        .scale(sqrt_q_plus_1(p));
    Ok(x.neg().add(num.div_exact(two_l)?))
}

/// H(x) = −x^{(−1)^m} + (√q+1)(2ℓ^{m−1}·x^{(−1)^m} − 2ℓ^{m−1} + 3)/(2ℓ^{m−1})
/// at x = ζ^{zeta_sign}; the inner exponent flips x to its conjugate for
/// odd m.  Used on the ℓ ≡ −1 (mod 3) branch.
pub fn eval_cap_h(p: &FieldParams, zeta_sign: i8) -> Result<Eisenstein> {
    let x = zeta_signed(zeta_sign);
    let y = if p.m % 2 == 0 { x } else { x.conj() };
    let two_lam = 2 * p.ell_pow_m1 as i128;
    let c = two_lam - 3;
    let num = y
        .scale(two_lam)
        .sub(Eisenstein::from_int(c))
        .scale(sqrt_q_plus_1(p));
    Ok(y.neg().add(num.div_exact(two_lam)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3x::FieldParams;
    use proptest::prelude::*;

    fn params(ell: u64, m: u32) -> FieldParams {
        FieldParams::validate_closed_form(ell, m).unwrap()
    }

    #[test]
    fn cube_root_relation() {
        let z = Eisenstein::zeta_pow(1);
        let z2 = Eisenstein::zeta_pow(2);
        assert_eq!(Eisenstein::ONE.add(z).add(z2), Eisenstein::ZERO);
        assert_eq!(z.mul(z), z2);
        assert_eq!(z.mul(z2), Eisenstein::ONE);
        // (1+ζ)² = ζ² + 2ζ + 1 = ζ
        let one_plus_z = Eisenstein::ONE.add(z);
        assert_eq!(one_plus_z.mul(one_plus_z), z);
    }

    #[test]
    fn conjugation() {
        let v = Eisenstein::new(5, -3);
        assert_eq!(v.conj(), Eisenstein::new(8, 3));
        assert_eq!(v.conj().conj(), v);
        assert_eq!(Eisenstein::zeta_pow(1).conj(), Eisenstein::zeta_pow(2));
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            Eisenstein::new(6, -9).div_exact(3).unwrap(),
            Eisenstein::new(2, -3)
        );
        assert!(Eisenstein::new(5, 3).div_exact(3).is_err());
    }

    #[test]
    fn h_at_7_1() {
        // (√q+1) = 28, denominator 14: h(ζ) = 8 + 27ζ.
        let p = params(7, 1);
        assert_eq!(eval_h(&p, 1).unwrap(), Eisenstein::new(8, 27));
        assert_eq!(eval_h(&p, -1).unwrap(), Eisenstein::new(8, 27).conj());
        // h(ζ) + h(ζ^{-1}) is a rational integer.
        let sum = eval_h(&p, 1).unwrap().add(eval_h(&p, -1).unwrap());
        assert!(sum.is_rational());
        assert_eq!(sum, Eisenstein::from_int(-11));
    }

    #[test]
    fn cap_h_at_5_1() {
        // √q = 9, denominator 2: H(ζ) = −ζ^{-1} + 5(2ζ^{-1}+1) = 5 + 9ζ^{-1}.
        let p = params(5, 1);
        assert_eq!(eval_cap_h(&p, 1).unwrap(), Eisenstein::new(-4, -9));
        assert_eq!(eval_cap_h(&p, -1).unwrap(), Eisenstein::new(5, 9));
        assert_eq!(
            eval_cap_h(&p, 1).unwrap().conj(),
            eval_cap_h(&p, -1).unwrap()
        );
    }

    #[test]
    fn cap_h_parity_flip() {
        // Between m and m+1 the inner exponent swaps ζ and ζ^{-1}; compare
        // the ζ-parts structurally at (5,1) vs (5,2).
        let p1 = params(5, 1);
        let p2 = params(5, 2);
        let h1 = eval_cap_h(&p1, 1).unwrap();
        let h2 = eval_cap_h(&p2, 1).unwrap();
        // m=1 uses ζ^{-1} (negative ζ-coefficient), m=2 uses ζ itself.
        assert!(h1.b < 0);
        assert!(h2.b > 0);
    }

    #[test]
    fn base_values() {
        assert_eq!(
            base_ell_one(&params(7, 1)).unwrap(),
            Eisenstein::from_int(35)
        );
        assert_eq!(
            base_ell_minus_one(&params(5, 1)).unwrap(),
            Eisenstein::from_int(14)
        );
    }

    #[test]
    fn template_divisions_exact_for_valid_params() {
        for (ell, m) in [(5u64, 1u32), (7, 1), (5, 2), (7, 2), (17, 1), (19, 1)] {
            let p = params(ell, m);
            if p.ell % 3 == 1 {
                base_ell_one(&p).unwrap();
                eval_h(&p, 1).unwrap();
                eval_h(&p, -1).unwrap();
            } else {
                base_ell_minus_one(&p).unwrap();
                eval_cap_h(&p, 1).unwrap();
                eval_cap_h(&p, -1).unwrap();
            }
        }
    }

    fn small() -> impl Strategy<Value = Eisenstein> {
        (
            -1_000_000_000i128..1_000_000_000,
            -1_000_000_000i128..1_000_000_000,
        )
            .prop_map(|(a, b)| Eisenstein::new(a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms(u in small(), v in small(), w in small()) {
            prop_assert_eq!(u.add(v), v.add(u));
            prop_assert_eq!(u.mul(v), v.mul(u));
            prop_assert_eq!(u.add(v).add(w), u.add(v.add(w)));
            prop_assert_eq!(u.mul(v).mul(w), u.mul(v.mul(w)));
            prop_assert_eq!(u.mul(v.add(w)), u.mul(v).add(u.mul(w)));
        }

        #[test]
        fn conj_is_ring_hom(u in small(), v in small()) {
            prop_assert_eq!(u.add(v).conj(), u.conj().add(v.conj()));
            prop_assert_eq!(u.mul(v).conj(), u.conj().mul(v.conj()));
            prop_assert_eq!(u.conj().conj(), u);
        }
    }
}
