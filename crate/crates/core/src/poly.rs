//! Sparse polynomials in `q` and `t` with cyclotomic-integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};

/// A monomial `q^q t^t`. Ordered by total degree, then by `q`-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub q: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        Monomial { q, t }
    }

    fn total(self) -> u64 {
        self.q as u64 + self.t as u64
    }

    fn checked_mul(self, other: Monomial) -> Result<Monomial> {
        Ok(Monomial {
            q: self.q.checked_add(other.q).ok_or(Error::Overflow)?,
            t: self.t.checked_add(other.t).ok_or(Error::Overflow)?,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total(), self.q).cmp(&(other.total(), other.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `q` (and optionally `t`) over `Z[w_r]`.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly2 {
    ring_order: u32,
    terms: BTreeMap<Monomial, CycInt>,
}

impl Poly2 {
    pub fn zero(r: u32) -> Self {
        Poly2 {
            ring_order: r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: u32) -> Self {
        Self::monomial(CycInt::one(r), 0, 0)
    }

    pub fn constant(c: CycInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: CycInt, q: u32, t: u32) -> Self {
        let mut p = Poly2::zero(c.order());
        if !c.is_zero() {
            p.terms.insert(Monomial { q, t }, c);
        }
        p
    }

    pub fn ring_order(&self) -> u32 {
        self.ring_order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|m| m.t == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in display order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &CycInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, q: u32, t: u32) -> CycInt {
        self.terms
            .get(&Monomial { q, t })
            .cloned()
            .unwrap_or_else(|| CycInt::zero(self.ring_order))
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring_order != other.ring_order {
            Err(Error::OrderMismatch {
                left: self.ring_order,
                right: other.ring_order,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: &CycInt) -> Result<()> {
        if c.order() != self.ring_order {
            return Err(Error::OrderMismatch {
                left: self.ring_order,
                right: c.order(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.checked_add(c)?;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((*m, c.checked_neg()?)))
            .collect::<Result<_>>()?;
        Ok(Poly2 {
            ring_order: self.ring_order,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Poly2::zero(self.ring_order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.checked_mul(*mb)?, &ca.checked_mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, c: &CycInt) -> Result<Self> {
        let mut out = Poly2::zero(self.ring_order);
        for (m, a) in &self.terms {
            out.add_term(*m, &a.checked_mul(c)?)?;
        }
        Ok(out)
    }

    /// Product of all `factors`; the empty product is `1`.
    pub fn product<'a>(r: u32, factors: impl IntoIterator<Item = &'a Poly2>) -> Result<Self> {
        factors
            .into_iter()
            .try_fold(Poly2::one(r), |acc, f| acc.checked_mul(f))
    }

    /// Swaps the roles of `q` and `t`.
    pub fn transpose(&self) -> Self {
        Poly2 {
            ring_order: self.ring_order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { q: m.t, t: m.q }, c.clone()))
                .collect(),
        }
    }

    /// Value at `q = t = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> Result<CycInt> {
        self.terms
            .values()
            .try_fold(CycInt::zero(self.ring_order), |acc, c| acc.checked_add(c))
    }

    /// Largest `q + t` degree among the terms.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total()).max()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// `[k]_u = 1 + u + ... + u^(k-1)` with `u = unit * q^qpow * t^tpow`.
pub fn q_bracket(k: u32, unit: &CycInt, qpow: u32, tpow: u32) -> Result<Poly2> {
    let r = unit.order();
    let mut out = Poly2::zero(r);
    let mut coeff = CycInt::one(r);
    for j in 0..k {
        let m = Monomial {
            q: qpow.checked_mul(j).ok_or(Error::Overflow)?,
            t: tpow.checked_mul(j).ok_or(Error::Overflow)?,
        };
        out.add_term(m, &coeff)?;
        if j + 1 < k {
            coeff = coeff.checked_mul(unit)?;
        }
    }
    Ok(out)
}

fn fmt_monomial(m: Monomial) -> String {
    let mut s = String::new();
    match m.q {
        0 => {}
        1 => s.push('q'),
        e => s.push_str(&format!("q^{e}")),
    }
    match m.t {
        0 => {}
        1 => s.push('t'),
        e => s.push_str(&format!("t^{e}")),
    }
    s
}

/// Human form: graded order, integer coefficients inline, other cyclotomic
/// coefficients parenthesized, e.g. `1 + (w)q + (-1-w)q^2 - q^3t`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = fmt_monomial(*m);
            let (negative, body) = match c.as_integer() {
                Some(n) => {
                    let mag = n.unsigned_abs();
                    let body = if mag == 1 && !mono.is_empty() {
                        mono
                    } else {
                        format!("{mag}{mono}")
                    };
                    (n < 0, body)
                }
                None => (false, format!("({c}){mono}")),
            };
            match (i, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    q: u32,
    t: u32,
    c: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    r: u32,
    terms: Vec<RawTerm>,
}

impl Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawPoly {
            r: self.ring_order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| RawTerm {
                    q: m.q,
                    t: m.t,
                    c: c.coeffs().to_vec(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawPoly::deserialize(deserializer)?;
        let mut p = Poly2::zero(raw.r);
        for term in raw.terms {
            let c = CycInt::from_coeffs(raw.r, term.c).map_err(serde::de::Error::custom)?;
            p.add_term(Monomial::new(term.q, term.t), &c)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(r: u32, n: i64) -> CycInt {
        CycInt::from_int(r, n)
    }

    /// Univariate integer polynomial from dense coefficients.
    fn dense(coeffs: &[i64]) -> Poly2 {
        let mut p = Poly2::zero(1);
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::new(e as u32, 0), &int(1, c)).unwrap();
        }
        p
    }

    #[test]
    fn bracket_examples() {
        let p = q_bracket(2, &int(1, -1), 3, 0).unwrap();
        assert_eq!(p, dense(&[1, 0, 0, -1]));
        assert_eq!(p.to_string(), "1 - q^3");

        let w = CycInt::omega(3, 1);
        let p = q_bracket(3, &w, 1, 0).unwrap();
        assert_eq!(p.coeff(0, 0), CycInt::one(3));
        assert_eq!(p.coeff(1, 0), w);
        assert_eq!(p.coeff(2, 0), CycInt::omega(3, 2));
        assert_eq!(p.to_string(), "1 + (w)q + (-1-w)q^2");

        assert!(q_bracket(0, &int(1, 1), 1, 0).unwrap().is_zero());
        assert_eq!(q_bracket(1, &int(4, 5), 7, 2).unwrap(), Poly2::one(4));
    }

    #[test]
    fn bracket_with_zero_exponent_collects() {
        // [3]_{-1} = 1 - 1 + 1
        assert_eq!(q_bracket(3, &int(1, -1), 0, 0).unwrap(), Poly2::one(1));
    }

    #[test]
    fn gessel_simion_four_expansion() {
        // [1]_q [2]_{-q} [3]_q [4]_{-q} against a hand-rolled dense product
        let one = int(1, 1);
        let neg = int(1, -1);
        let factors = [
            q_bracket(1, &one, 1, 0).unwrap(),
            q_bracket(2, &neg, 1, 0).unwrap(),
            q_bracket(3, &one, 1, 0).unwrap(),
            q_bracket(4, &neg, 1, 0).unwrap(),
        ];
        let got = Poly2::product(1, &factors).unwrap();
        let mut want = vec![1i64];
        for f in [vec![1], vec![1, -1], vec![1, 1, 1], vec![1, -1, 1, -1]] {
            let mut next = vec![0i64; want.len() + f.len() - 1];
            for (i, a) in want.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            want = next;
        }
        assert_eq!(got, dense(&want));
    }

    #[test]
    fn ops_examples() {
        let a = dense(&[1, -1]);
        let b = dense(&[1, 1]);
        assert_eq!(a.checked_mul(&b).unwrap(), dense(&[1, 0, -1]));

        let one = int(1, 1);
        let lhs = q_bracket(2, &one, 1, 0)
            .unwrap()
            .checked_mul(&q_bracket(2, &one, 2, 0).unwrap())
            .unwrap();
        assert_eq!(lhs, q_bracket(4, &one, 1, 0).unwrap());
    }

    #[test]
    fn ring_mismatch() {
        assert!(Poly2::one(2).checked_add(&Poly2::one(3)).is_err());
        assert!(Poly2::one(2).checked_mul(&Poly2::one(3)).is_err());
        let mut p = Poly2::zero(2);
        assert!(p.add_term(Monomial::ONE, &CycInt::one(3)).is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(Poly2::zero(3).to_string(), "0");
        let mut p = Poly2::zero(1);
        p.add_term(Monomial::new(0, 0), &int(1, 1)).unwrap();
        p.add_term(Monomial::new(1, 0), &int(1, 2)).unwrap();
        p.add_term(Monomial::new(3, 1), &int(1, -1)).unwrap();
        p.add_term(Monomial::new(0, 2), &int(1, -3)).unwrap();
        assert_eq!(p.to_string(), "1 + 2q - 3t^2 - q^3t");
        assert_eq!(Poly2::constant(int(1, -2)).to_string(), "-2");
        assert_eq!(Poly2::monomial(int(1, -1), 2, 0).to_string(), "-q^2");
    }

    #[test]
    fn json_schema() {
        let p = q_bracket(3, &CycInt::omega(3, 1), 1, 0).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"r":3,"terms":[{"q":0,"t":0,"c":[1,0]},{"q":1,"t":0,"c":[0,1]},{"q":2,"t":0,"c":[-1,-1]}]}"#
        );
    }

    #[test]
    fn bracket_counts() {
        for k in 0..12 {
            let p = q_bracket(k, &int(1, 1), 1, 0).unwrap();
            assert_eq!(p.len(), k as usize);
            assert!(p.terms().all(|(_, c)| c.is_one()));
            assert_eq!(p.eval_at_one().unwrap(), int(1, k as i64));
        }
    }

    fn arb_poly(r: u32) -> impl Strategy<Value = Poly2> {
        let d = crate::cyclotomic::cyclotomic_poly(r).len() - 1;
        proptest::collection::vec(
            (0u32..6, 0u32..3, proptest::collection::vec(-9i64..9, d)),
            0..8,
        )
        .prop_map(move |terms| {
            let mut p = Poly2::zero(r);
            for (q, t, c) in terms {
                p.add_term(Monomial::new(q, t), &CycInt::from_coeffs(r, c).unwrap())
                    .unwrap();
            }
            p
        })
    }

    fn arb_pair() -> impl Strategy<Value = (Poly2, Poly2)> {
        (1u32..=6).prop_flat_map(|r| (arb_poly(r), arb_poly(r)))
    }

    proptest! {
        #[test]
        fn json_round_trip((a, _b) in arb_pair()) {
            prop_assert_eq!(Poly2::from_json(&a.to_json()).unwrap(), a);
        }

        #[test]
        fn additive_inverse((a, _b) in arb_pair()) {
            prop_assert!(a.checked_sub(&a).unwrap().is_zero());
        }

        #[test]
        fn degree_is_additive((a, b) in arb_pair()) {
            let p = a.checked_mul(&b).unwrap();
            if !a.is_zero() && !b.is_zero() {
                // Z[w] is an integral domain; leading q-t forms cannot cancel
                // under a graded order, so total degrees add.
                prop_assert_eq!(p.total_degree(), Some(a.total_degree().unwrap() + b.total_degree().unwrap()));
            } else {
                prop_assert!(p.is_zero());
            }
        }

        #[test]
        fn multiplication_commutes((a, b) in arb_pair()) {
            prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        }

        #[test]
        fn transpose_is_involution((a, _b) in arb_pair()) {
            prop_assert_eq!(a.transpose().transpose(), a);
        }
    }
}
