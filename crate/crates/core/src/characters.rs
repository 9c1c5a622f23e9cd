//! One-dimensional characters: `1` and `(-1)^inv` on `S_n`; the four
//! characters of `B_n` plus `(-1)^inv_A`; `1`, `sign` and `(-1)^inv_A` on
//! `D_n`; and the `2r` characters `chi_{a,b}` of `G(r, n)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycInt;
use crate::element::{ColoredPerm, Family, LetterOrder};
use crate::error::{Error, Result};
use crate::stats::{self, StatName};

/// A root of unity `(-1)^neg * w^exp` in `Z[w_r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unit {
    pub negative: bool,
    pub exp: u32,
}

impl Unit {
    pub const ONE: Unit = Unit {
        negative: false,
        exp: 0,
    };

    pub fn sign(negative: bool) -> Self {
        Unit { negative, exp: 0 }
    }

    pub fn mul(self, other: Unit, r: u32) -> Unit {
        Unit {
            negative: self.negative ^ other.negative,
            exp: (self.exp + other.exp) % r.max(1),
        }
    }

    pub fn to_cycint(self, r: u32) -> CycInt {
        let w = CycInt::omega(r, self.exp as i64);
        if self.negative {
            w.checked_neg()
                .expect("negating a root of unity cannot overflow")
        } else {
            w
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharName {
    Trivial,
    /// `(-1)^length` for the family's Coxeter length.
    Sign,
    /// `(-1)^neg`.
    Neg,
    /// `sign(|pi|) = (-1)^inv(|pi|)`.
    AbsSign,
    /// `(-1)^inv_A` in the integer order.
    InvA,
    /// `chi_{a,b}(pi) = (-1)^(a (len - Z)) w^(b Z)`.
    Chi {
        a: u32,
        b: u32,
    },
}

impl fmt::Display for CharName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharName::Trivial => f.write_str("trivial"),
            CharName::Sign => f.write_str("sign"),
            CharName::Neg => f.write_str("neg"),
            CharName::AbsSign => f.write_str("abssign"),
            CharName::InvA => f.write_str("invA"),
            CharName::Chi { a, b } => write!(f, "a={a},b={b}"),
        }
    }
}

impl FromStr for CharName {
    type Err = Error;

    /// `trivial|sign|neg|abssign|invA` or `a=1,b=2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::CharacterMismatch {
            name: s.to_string(),
            reason: "expected trivial, sign, neg, abssign, invA or a=<0|1>,b=<k>".into(),
        };
        Ok(match s {
            "trivial" => CharName::Trivial,
            "sign" => CharName::Sign,
            "neg" => CharName::Neg,
            "abssign" => CharName::AbsSign,
            "invA" | "inva" => CharName::InvA,
            _ => {
                let mut a = None;
                let mut b = None;
                for part in s.split(',') {
                    let (key, val) = part.split_once('=').ok_or_else(bad)?;
                    let val: u32 = val.trim().parse().map_err(|_| bad())?;
                    match key.trim() {
                        "a" => a = Some(val),
                        "b" => b = Some(val),
                        _ => return Err(bad()),
                    }
                }
                CharName::Chi {
                    a: a.ok_or_else(bad)?,
                    b: b.unwrap_or(0),
                }
            }
        })
    }
}

/// A character of a specific group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharSpec {
    pub family: Family,
    pub name: CharName,
    pub r: u32,
}

impl CharSpec {
    pub fn new(family: Family, name: CharName, r: u32) -> Result<Self> {
        let spec = CharSpec { family, name, r };
        spec.validate()?;
        Ok(spec)
    }

    pub fn chi(r: u32, a: u32, b: u32) -> Result<Self> {
        Self::new(Family::G, CharName::Chi { a, b }, r)
    }

    fn mismatch(&self, reason: impl Into<String>) -> Error {
        Error::CharacterMismatch {
            name: self.name.to_string(),
            reason: reason.into(),
        }
    }

    fn validate(&self) -> Result<()> {
        self.family
            .check(self.r)
            .map_err(|e| self.mismatch(e.to_string()))?;
        let ok = match (self.family, self.name) {
            (_, CharName::Trivial) => true,
            (Family::S, CharName::Sign) => true,
            (Family::B, CharName::Sign | CharName::Neg | CharName::AbsSign | CharName::InvA) => {
                true
            }
            (Family::D, CharName::Sign | CharName::InvA) => true,
            (Family::G, CharName::Chi { a, b }) => a <= 1 && b < self.r,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.mismatch(format!("not a character of family {}", self.family)))
        }
    }

    /// Checks that `pi` lies in the group this character is defined on.
    pub fn check(&self, pi: &ColoredPerm) -> Result<()> {
        let fits = match self.family {
            Family::G => pi.r() == self.r,
            f => f.contains(pi),
        };
        if fits {
            Ok(())
        } else {
            Err(self.mismatch(format!("element {pi} is not in family {}", self.family)))
        }
    }

    pub fn unit(&self, pi: &ColoredPerm) -> Result<Unit> {
        self.check(pi)?;
        Ok(self.unit_unchecked(pi))
    }

    /// Character value as a root of unity; `pi` must satisfy [`CharSpec::check`].
    pub fn unit_unchecked(&self, pi: &ColoredPerm) -> Unit {
        let parity = |s: StatName| Unit::sign(s.eval_unchecked(pi) % 2 == 1);
        match (self.family, self.name) {
            (_, CharName::Trivial) => Unit::ONE,
            (Family::S, CharName::Sign) => parity(StatName::Inv(LetterOrder::NaturalS)),
            (Family::D, CharName::Sign) => parity(StatName::LenD),
            (_, CharName::Sign) => parity(StatName::LenB),
            (_, CharName::Neg) => Unit::sign(pi.colored_count() % 2 == 1),
            (_, CharName::AbsSign) => parity(StatName::AbsInv),
            (_, CharName::InvA) => parity(StatName::Inv(LetterOrder::IntegerB)),
            (_, CharName::Chi { a, b }) => {
                let z = stats::color_sum(pi);
                // len - Z = inv_A + sum over colored of (|pi_i| - 1)
                let len_minus_z =
                    stats::inv(pi, LetterOrder::ValueBlockG) + stats::colored_excess(pi);
                Unit {
                    negative: a == 1 && len_minus_z % 2 == 1,
                    exp: ((b as u64 * z) % self.r as u64) as u32,
                }
            }
        }
    }
}

/// The value of a character on an element, as an exact cyclotomic integer.
pub fn char_value(spec: &CharSpec, pi: &ColoredPerm) -> Result<CycInt> {
    Ok(spec.unit(pi)?.to_cycint(spec.r))
}

/// Wreath-product composition: `(pi o pi')_i` has value `sigma_{sigma'_i}`
/// and color `z_{sigma'_i} + z'_i mod r`.
pub fn wreath_compose(pi: &ColoredPerm, other: &ColoredPerm) -> Result<ColoredPerm> {
    if pi.r() != other.r() || pi.n() != other.n() {
        return Err(Error::InvalidParameters(
            "composition needs elements of the same G(r, n)".into(),
        ));
    }
    let r = pi.r();
    let (sigma, z): (Vec<u32>, Vec<u32>) = other
        .letters()
        .map(|l| {
            let j = l.value as usize - 1;
            (pi.sigma()[j], (pi.z()[j] + l.color) % r)
        })
        .unzip();
    ColoredPerm::new(r, sigma, z)
}
