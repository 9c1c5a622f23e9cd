//! Exact arithmetic in the cyclotomic integers `Z[w]`, `w` a primitive
//! `r`-th root of unity.
//!
//! Elements are stored as integer polynomials in `w` reduced modulo the
//! `r`-th cyclotomic polynomial `Phi_r`, so every element has exactly one
//! representation and equality is coefficient-wise. Coefficients are `i64`
//! and every operation is overflow-checked.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients of the monic `r`-th cyclotomic polynomial, constant term first.
///
/// Computed by exact division of `x^r - 1` by `Phi_d` for every proper
/// divisor `d` of `r`.
///
/// # Panics
///
/// Panics if `r == 0`.
pub fn cyclotomic_poly(r: u32) -> Vec<i64> {
    assert!(r >= 1, "cyclotomic polynomial requires r >= 1");
    ring(r).phi.clone()
}

fn compute_cyclotomic(r: u32) -> Vec<i64> {
    // x^r - 1
    let mut num = vec![0i64; r as usize + 1];
    num[0] = -1;
    num[r as usize] = 1;
    for d in 1..r {
        if r.is_multiple_of(d) {
            num = exact_div_monic(&num, &ring(d).phi);
        }
    }
    num
}

/// Divides `num` by the monic `den`; the division must be exact.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Per-order data shared by every element of `Z[w_r]`.
#[derive(Debug)]
pub(crate) struct Ring {
    pub(crate) phi: Vec<i64>,
    pub(crate) degree: usize,
    /// `powers[j]` is the reduced representative of `w^j`, `0 <= j < r`.
    pub(crate) powers: Vec<Vec<i64>>,
}

impl Ring {
    fn new(r: u32) -> Ring {
        let phi = compute_cyclotomic(r);
        let degree = phi.len() - 1;
        let powers = (0..r as usize)
            .map(|j| {
                let mut v = vec![0i64; degree.max(j + 1)];
                v[j] = 1;
                reduce(&mut v, &phi).expect("reducing a monomial cannot overflow");
                v
            })
            .collect();
        Ring {
            phi,
            degree,
            powers,
        }
    }
}

pub(crate) fn ring(r: u32) -> Arc<Ring> {
    static RINGS: OnceLock<RwLock<HashMap<u32, Arc<Ring>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(found) = rings.read().expect("ring cache poisoned").get(&r) {
        return Arc::clone(found);
    }
    // Built outside the write lock: construction recurses into ring(d).
    let built = Arc::new(Ring::new(r));
    let mut w = rings.write().expect("ring cache poisoned");
    Arc::clone(w.entry(r).or_insert(built))
}

/// Reduces `v` modulo the monic `phi` in place, truncating to `deg phi` entries.
fn reduce(v: &mut Vec<i64>, phi: &[i64]) -> Result<()> {
    let d = phi.len() - 1;
    for i in (d..v.len()).rev() {
        let c = v[i];
        if c == 0 {
            continue;
        }
        for (j, &p) in phi.iter().enumerate().take(d) {
            let delta = c.checked_mul(p).ok_or(Error::Overflow)?;
            v[i - d + j] = v[i - d + j].checked_sub(delta).ok_or(Error::Overflow)?;
        }
        v[i] = 0;
    }
    v.truncate(d);
    v.resize(d, 0);
    Ok(())
}

/// An element of `Z[w_r]` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCycInt")]
pub struct CycInt {
    r: u32,
    #[serde(rename = "c")]
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
struct RawCycInt {
    r: u32,
    c: Vec<i64>,
}

impl TryFrom<RawCycInt> for CycInt {
    type Error = Error;

    fn try_from(raw: RawCycInt) -> Result<Self> {
        CycInt::from_coeffs(raw.r, raw.c)
    }
}

impl CycInt {
    fn check_order(r: u32) -> Result<()> {
        if r == 0 {
            Err(Error::InvalidOrder(r))
        } else {
            Ok(())
        }
    }

    /// Builds an element from its canonical coefficient vector of length `phi(r)`.
    pub fn from_coeffs(r: u32, coeffs: Vec<i64>) -> Result<Self> {
        Self::check_order(r)?;
        let expected = ring(r).degree;
        if coeffs.len() != expected {
            return Err(Error::CoefficientLength {
                r,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(CycInt { r, coeffs })
    }

    /// Reduces an arbitrary polynomial in `w` (constant term first).
    pub fn from_poly(r: u32, poly: &[i64]) -> Result<Self> {
        Self::check_order(r)?;
        let ring = ring(r);
        let mut v = poly.to_vec();
        if v.len() < ring.degree {
            v.resize(ring.degree, 0);
        }
        reduce(&mut v, &ring.phi)?;
        Ok(CycInt { r, coeffs: v })
    }

    pub fn from_int(r: u32, n: i64) -> Self {
        let d = ring(r).degree;
        let mut coeffs = vec![0; d];
        coeffs[0] = n;
        CycInt { r, coeffs }
    }

    pub fn zero(r: u32) -> Self {
        Self::from_int(r, 0)
    }

    pub fn one(r: u32) -> Self {
        Self::from_int(r, 1)
    }

    /// The canonical representative of `w^(k mod r)`.
    pub fn omega(r: u32, k: i64) -> Self {
        let ring = ring(r);
        let j = k.rem_euclid(r as i64) as usize;
        CycInt {
            r,
            coeffs: ring.powers[j].clone(),
        }
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.as_integer() == Some(1)
    }

    /// `Some(n)` when the element is the rational integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            Err(Error::OrderMismatch {
                left: self.r,
                right: other.r,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CycInt { r: self.r, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CycInt { r: self.r, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let d = self.coeffs.len();
        if d == 1 {
            let c = self.coeffs[0]
                .checked_mul(other.coeffs[0])
                .ok_or(Error::Overflow)?;
            return Ok(CycInt {
                r: self.r,
                coeffs: vec![c],
            });
        }
        let mut prod = vec![0i64; 2 * d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let ab = a.checked_mul(b).ok_or(Error::Overflow)?;
                prod[i + j] = prod[i + j].checked_add(ab).ok_or(Error::Overflow)?;
            }
        }
        reduce(&mut prod, &ring(self.r).phi)?;
        Ok(CycInt {
            r: self.r,
            coeffs: prod,
        })
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CycInt { r: self.r, coeffs })
    }

    pub fn checked_pow(&self, mut e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = CycInt::one(self.r);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Integer combination `sum_j counts[j] * w^j`, `counts.len() <= r`.
    pub(crate) fn from_power_counts(r: u32, counts: &[i64]) -> Result<Self> {
        let ring = ring(r);
        let mut coeffs = vec![0i64; ring.degree];
        for (j, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (acc, &p) in coeffs.iter_mut().zip(&ring.powers[j]) {
                if p != 0 {
                    let cp = c.checked_mul(p).ok_or(Error::Overflow)?;
                    *acc = acc.checked_add(cp).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(CycInt { r, coeffs })
    }
}

/// Prints the `w`-polynomial in ascending powers, e.g. `-1-w` or `2+w^3`.
impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (j, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "w".to_string(),
                (1, m) => format!("{m}w"),
                (_, 1) => format!("w^{j}"),
                (_, m) => format!("{m}w^{j}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
    }

    #[test]
    fn divisor_product_is_x_pow_r_minus_one() {
        for r in 1..=24u32 {
            let mut prod = vec![1i64];
            for d in (1..=r).filter(|d| r % d == 0) {
                prod = naive_mul(&prod, &cyclotomic_poly(d));
            }
            let mut expected = vec![0i64; r as usize + 1];
            expected[0] = -1;
            expected[r as usize] = 1;
            assert_eq!(prod, expected, "r = {r}");
        }
    }

    #[test]
    fn degree_is_euler_phi() {
        let phi = |r: u32| (1..=r).filter(|k| gcd(*k, r) == 1).count();
        fn gcd(a: u32, b: u32) -> u32 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for r in 1..=30 {
            assert_eq!(cyclotomic_poly(r).len() - 1, phi(r), "r = {r}");
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(CycInt::omega(2, 1), CycInt::from_int(2, -1));
        assert_eq!(CycInt::omega(4, 2), CycInt::from_int(4, -1));
        assert_eq!(CycInt::omega(3, 0), CycInt::one(3));
        assert_eq!(CycInt::omega(5, -1), CycInt::omega(5, 4));
        assert_eq!(CycInt::omega(1, 7), CycInt::one(1));
    }

    #[test]
    fn ring_op_examples() {
        let s = CycInt::omega(3, 1)
            .checked_add(&CycInt::omega(3, 2))
            .unwrap();
        assert_eq!(s, CycInt::from_int(3, -1));
        let p = CycInt::omega(4, 1)
            .checked_mul(&CycInt::omega(4, 3))
            .unwrap();
        assert!(p.is_one());
        let p = CycInt::omega(5, 2)
            .checked_mul(&CycInt::omega(5, 4))
            .unwrap();
        assert_eq!(p, CycInt::omega(5, 1));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let err = CycInt::one(3).checked_add(&CycInt::one(4)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 3, right: 4 });
        assert!(CycInt::one(3).checked_mul(&CycInt::one(5)).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = CycInt::from_int(1, i64::MAX);
        assert_eq!(big.checked_add(&CycInt::one(1)), Err(Error::Overflow));
        assert_eq!(big.checked_scale(2), Err(Error::Overflow));
        assert_eq!(
            CycInt::from_int(3, i64::MIN).checked_neg(),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn coefficient_length_is_validated() {
        assert!(CycInt::from_coeffs(5, vec![1, 2, 3]).is_err());
        assert!(CycInt::from_coeffs(5, vec![1, 2, 3, 4]).is_ok());
        let json = r#"{"r":3,"c":[1,2,3]}"#;
        assert!(serde_json::from_str::<CycInt>(json).is_err());
    }

    #[test]
    fn json_form() {
        let w = CycInt::omega(3, 2);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"r":3,"c":[-1,-1]}"#);
        assert_eq!(serde_json::from_str::<CycInt>(&s).unwrap(), w);
    }

    #[test]
    fn display() {
        assert_eq!(CycInt::omega(3, 1).to_string(), "w");
        assert_eq!(CycInt::omega(3, 2).to_string(), "-1-w");
        assert_eq!(CycInt::zero(7).to_string(), "0");
        assert_eq!(
            CycInt::from_poly(8, &[2, 0, -3]).unwrap().to_string(),
            "2-3w^2"
        );
    }

    #[test]
    fn roots_of_unity_properties() {
        for r in 1..=12u32 {
            for k in 0..r as i64 {
                assert!(CycInt::omega(r, k).checked_pow(r).unwrap().is_one());
            }
            if r > 1 {
                let mut s = CycInt::zero(r);
                for j in 0..r as i64 {
                    s = s.checked_add(&CycInt::omega(r, j)).unwrap();
                }
                assert!(s.is_zero(), "r = {r}");
            }
        }
    }

    fn arb_cycint(r: u32) -> impl Strategy<Value = CycInt> {
        let d = cyclotomic_poly(r).len() - 1;
        proptest::collection::vec(-50i64..50, d)
            .prop_map(move |c| CycInt::from_coeffs(r, c).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (CycInt, CycInt, CycInt)> {
        (1u32..=12).prop_flat_map(|r| (arb_cycint(r), arb_cycint(r), arb_cycint(r)))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            let ab = a.checked_mul(&b).unwrap();
            prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
            prop_assert_eq!(
                ab.checked_mul(&c).unwrap(),
                a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(),
                ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.checked_add(&b).unwrap().checked_add(&c).unwrap(),
                a.checked_add(&b.checked_add(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn difference_vanishes_iff_equal((a, b, _c) in arb_triple()) {
            prop_assert_eq!(a.checked_sub(&b).unwrap().is_zero(), a == b);
            prop_assert!(a.checked_sub(&a).unwrap().is_zero());
        }

        #[test]
        fn from_poly_agrees_with_omega_sums(r in 1u32..=12, raw in proptest::collection::vec(-20i64..20, 0..30)) {
            let direct = CycInt::from_poly(r, &raw).unwrap();
            let mut summed = CycInt::zero(r);
            for (j, &c) in raw.iter().enumerate() {
                let term = CycInt::omega(r, j as i64).checked_scale(c).unwrap();
                summed = summed.checked_add(&term).unwrap();
            }
            prop_assert_eq!(direct, summed);
        }
    }
}
