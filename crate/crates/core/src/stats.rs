//! Permutation statistics, computed from their combinatorial formulas.
//!
//! `maj` is always the sum of descent positions (1-based), never the number
//! of descents.

use std::fmt;

use crate::element::{reduce_tilde, ColoredPerm, Family, LetterOrder};
use crate::error::{Error, Result};

/// Number of pairs `i < j` with `pi_i > pi_j` under `order`.
pub fn inv(pi: &ColoredPerm, order: LetterOrder) -> u64 {
    let (n, r) = (pi.n() as u32, pi.r());
    let keys: Vec<u32> = pi.letters().map(|l| order.sort_key(l, n, r)).collect();
    let mut count = 0;
    for (i, a) in keys.iter().enumerate() {
        count += keys[i + 1..].iter().filter(|b| a > b).count() as u64;
    }
    count
}

/// Sum of the positions `i` with `pi_i > pi_{i+1}` under `order`.
pub fn maj(pi: &ColoredPerm, order: LetterOrder) -> u64 {
    let (n, r) = (pi.n() as u32, pi.r());
    let mut total = 0;
    let mut prev = None;
    for (i, l) in pi.letters().enumerate() {
        let k = order.sort_key(l, n, r);
        if prev.is_some_and(|p| p > k) {
            total += i as u64;
        }
        prev = Some(k);
    }
    total
}

/// `Z(pi)`: the sum of the colors.
pub fn color_sum(pi: &ColoredPerm) -> u64 {
    pi.z().iter().map(|&c| c as u64).sum()
}

/// `Zhat(pi)`: `sum z_i * sigma_i`.
pub fn weighted_color_sum(pi: &ColoredPerm) -> u64 {
    pi.letters().map(|l| l.color as u64 * l.value as u64).sum()
}

/// `sum over colored positions of (|pi_i| - 1)`.
pub fn colored_excess(pi: &ColoredPerm) -> u64 {
    pi.letters()
        .filter(|l| l.color != 0)
        .map(|l| l.value as u64 - 1)
        .sum()
}

/// Sum of `|pi_i|` over colored positions; for signed permutations this is
/// `-(sum of the negative entries)`.
pub fn colored_value_sum(pi: &ColoredPerm) -> u64 {
    pi.letters()
        .filter(|l| l.color != 0)
        .map(|l| l.value as u64)
        .sum()
}

/// `|Neg(pi) ∩ {i : pi_i even}|`.
pub fn neg_even(pi: &ColoredPerm) -> u64 {
    pi.letters()
        .filter(|l| l.color != 0 && l.value % 2 == 0)
        .count() as u64
}

/// `fmaf` through the reduced element: `r * sum_j (i_j - j) + fmaj(tilde)`.
pub fn fmaf(pi: &ColoredPerm) -> u64 {
    let (fix, tilde) = reduce_tilde(pi);
    let shift: u64 = fix
        .iter()
        .enumerate()
        .map(|(j, &i)| (i - (j + 1)) as u64)
        .sum();
    pi.r() as u64 * shift + fmaj_g(&tilde)
}

/// `fmaf` via `r * (sum Fix - C(fix + 1, 2) + maj_A(tilde)) + Z(tilde)`,
/// computed in place without building the reduced element.
pub fn fmaf_fixed_point_form(pi: &ColoredPerm) -> u64 {
    let (n, r) = (pi.n() as u32, pi.r());
    let order = LetterOrder::ColorBlockG;
    let mut fix_sum = 0u64;
    let mut fix = 0u64;
    let mut reduced_pos = 0u64;
    let mut reduced_maj = 0u64;
    let mut prev = None;
    for (i, l) in pi.letters().enumerate() {
        if l.color == 0 && l.value as usize == i + 1 {
            fix += 1;
            fix_sum += i as u64 + 1;
            continue;
        }
        // Renumbering is monotone within each color, so comparing original
        // letters gives the same descents as comparing renumbered ones.
        let k = order.sort_key(l, n, r);
        if prev.is_some_and(|p| p > k) {
            reduced_maj += reduced_pos;
        }
        reduced_pos += 1;
        prev = Some(k);
    }
    let binom = fix * (fix + 1) / 2;
    r as u64 * (fix_sum - binom + reduced_maj) + color_sum(pi)
}

fn fmaj_g(pi: &ColoredPerm) -> u64 {
    pi.r() as u64 * maj(pi, LetterOrder::ColorBlockG) + color_sum(pi)
}

fn len_g_extra(pi: &ColoredPerm) -> u64 {
    pi.letters()
        .filter(|l| l.color != 0)
        .map(|l| (l.value + l.color - 1) as u64)
        .sum()
}

/// A named statistic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatName {
    /// Inversions under a letter order (`inv` on `S_n`, `inv_A` elsewhere).
    Inv(LetterOrder),
    /// Major index under a letter order (`maj` on `S_n`, `maj_A` elsewhere).
    Maj(LetterOrder),
    /// `inv(|pi|)`.
    AbsInv,
    /// Number of negative entries.
    Neg,
    /// `-(sum of negative entries)`.
    SumNeg,
    /// Negative entries with even absolute value.
    NegEven,
    /// `maj` under the sign-block order.
    Major,
    /// Coxeter length of `B_n`.
    LenB,
    /// Flag major index `2 major + neg`.
    FmajB,
    /// F-major index `2 maj_A + neg`.
    FmajCapB,
    /// Negative major index `maj_A + SumNeg`.
    Nmaj,
    /// Coxeter length of `D_n`.
    LenD,
    Dmaj,
    Z,
    Zhat,
    /// `sum over colored positions of (|pi_i| - 1)`.
    ColExcess,
    /// Length of `G(r, n)`.
    LenG,
    Lmaj,
    /// `r maj_A + Z` under the color-block order.
    FmajG,
    Rmaj,
    Rinv,
    Fmaf,
    Fix,
}

impl StatName {
    /// Parses the CLI spelling. `inv`/`maj` take the family's default order
    /// unless one is given; `fmaj` means the flag major index of the family.
    pub fn parse(name: &str, family: Family, order: Option<LetterOrder>) -> Result<Self> {
        let default_order = match family {
            Family::S => LetterOrder::NaturalS,
            Family::B | Family::D => LetterOrder::IntegerB,
            Family::G => LetterOrder::ValueBlockG,
        };
        let order = order.unwrap_or(default_order);
        let stat = match name {
            "inv" => StatName::Inv(order),
            "maj" => StatName::Maj(order),
            "absinv" => StatName::AbsInv,
            "neg" => StatName::Neg,
            "sumneg" => StatName::SumNeg,
            "negeven" => StatName::NegEven,
            "major" => StatName::Major,
            "lenb" => StatName::LenB,
            "fmaj" if family == Family::G => StatName::FmajG,
            "fmaj" => StatName::FmajB,
            "Fmaj" => StatName::FmajCapB,
            "nmaj" => StatName::Nmaj,
            "lend" => StatName::LenD,
            "dmaj" => StatName::Dmaj,
            "z" | "Z" => StatName::Z,
            "zhat" | "Zhat" => StatName::Zhat,
            "colexcess" => StatName::ColExcess,
            "leng" | "len" if family == Family::G => StatName::LenG,
            "len" if family == Family::B => StatName::LenB,
            "len" if family == Family::D => StatName::LenD,
            "len" => StatName::Inv(LetterOrder::NaturalS),
            "lmaj" => StatName::Lmaj,
            "fmajg" => StatName::FmajG,
            "rmaj" => StatName::Rmaj,
            "rinv" => StatName::Rinv,
            "fmaf" => StatName::Fmaf,
            "fix" => StatName::Fix,
            _ => {
                return Err(Error::WrongFamily {
                    stat: name.to_string(),
                    reason: "unknown statistic".into(),
                })
            }
        };
        Ok(stat)
    }

    /// Checks that the statistic is defined on `pi`.
    pub fn check(self, pi: &ColoredPerm) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::WrongFamily {
                stat: self.to_string(),
                reason,
            })
        };
        match self {
            StatName::Inv(order) | StatName::Maj(order) => {
                if !order.supports(pi.r()) {
                    return fail(format!(
                        "order {} needs a different r than {}",
                        order.name(),
                        pi.r()
                    ));
                }
            }
            StatName::Neg
            | StatName::SumNeg
            | StatName::NegEven
            | StatName::Major
            | StatName::LenB
            | StatName::FmajB
            | StatName::FmajCapB
            | StatName::Nmaj => {
                if pi.r() != 2 {
                    return fail(format!(
                        "defined on signed permutations (r = 2), got r = {}",
                        pi.r()
                    ));
                }
            }
            StatName::LenD | StatName::Dmaj => {
                if !Family::D.contains(pi) {
                    return fail("defined on even-signed permutations only".into());
                }
            }
            StatName::AbsInv
            | StatName::Z
            | StatName::Zhat
            | StatName::ColExcess
            | StatName::LenG
            | StatName::Lmaj
            | StatName::FmajG
            | StatName::Rmaj
            | StatName::Rinv
            | StatName::Fmaf
            | StatName::Fix => {}
        }
        Ok(())
    }

    pub fn eval(self, pi: &ColoredPerm) -> Result<u64> {
        self.check(pi)?;
        Ok(self.eval_unchecked(pi))
    }

    /// Evaluates without the family check; callers must have run [`check`]
    /// on an element of the same group.
    ///
    /// [`check`]: StatName::check
    pub fn eval_unchecked(self, pi: &ColoredPerm) -> u64 {
        use LetterOrder::*;
        let neg = || pi.colored_count() as u64;
        match self {
            StatName::Inv(order) => inv(pi, order),
            StatName::Maj(order) => maj(pi, order),
            StatName::AbsInv => {
                let s = pi.sigma();
                let mut c = 0;
                for i in 0..s.len() {
                    c += s[i + 1..].iter().filter(|&&b| s[i] > b).count() as u64;
                }
                c
            }
            StatName::Neg => neg(),
            StatName::SumNeg => colored_value_sum(pi),
            StatName::NegEven => neg_even(pi),
            StatName::Major => maj(pi, SignBlockB),
            StatName::LenB => inv(pi, IntegerB) + colored_value_sum(pi),
            StatName::FmajB => 2 * maj(pi, SignBlockB) + neg(),
            StatName::FmajCapB => 2 * maj(pi, IntegerB) + neg(),
            StatName::Nmaj => maj(pi, IntegerB) + colored_value_sum(pi),
            StatName::LenD => inv(pi, IntegerB) + colored_value_sum(pi) - neg(),
            StatName::Dmaj => maj(pi, IntegerB) + colored_value_sum(pi) - neg(),
            StatName::Z => color_sum(pi),
            StatName::Zhat => weighted_color_sum(pi),
            StatName::ColExcess => colored_excess(pi),
            StatName::LenG => inv(pi, ValueBlockG) + len_g_extra(pi),
            StatName::Lmaj => maj(pi, ValueBlockG) + len_g_extra(pi),
            StatName::FmajG => fmaj_g(pi),
            StatName::Rmaj => maj(pi, ColorBlockG) + weighted_color_sum(pi),
            StatName::Rinv => inv(pi, ColorBlockG) + weighted_color_sum(pi),
            StatName::Fmaf => fmaf(pi),
            StatName::Fix => pi
                .letters()
                .enumerate()
                .filter(|(i, l)| l.color == 0 && l.value as usize == i + 1)
                .count() as u64,
        }
    }
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatName::Inv(LetterOrder::NaturalS) => f.write_str("inv"),
            StatName::Maj(LetterOrder::NaturalS) => f.write_str("maj"),
            StatName::Inv(o) => write!(f, "inv[{}]", o.name()),
            StatName::Maj(o) => write!(f, "maj[{}]", o.name()),
            StatName::AbsInv => f.write_str("absinv"),
            StatName::Neg => f.write_str("neg"),
            StatName::SumNeg => f.write_str("sumneg"),
            StatName::NegEven => f.write_str("negeven"),
            StatName::Major => f.write_str("major"),
            StatName::LenB => f.write_str("lenb"),
            StatName::FmajB => f.write_str("fmaj"),
            StatName::FmajCapB => f.write_str("Fmaj"),
            StatName::Nmaj => f.write_str("nmaj"),
            StatName::LenD => f.write_str("lend"),
            StatName::Dmaj => f.write_str("dmaj"),
            StatName::Z => f.write_str("Z"),
            StatName::Zhat => f.write_str("Zhat"),
            StatName::ColExcess => f.write_str("colexcess"),
            StatName::LenG => f.write_str("leng"),
            StatName::Lmaj => f.write_str("lmaj"),
            StatName::FmajG => f.write_str("fmajg"),
            StatName::Rmaj => f.write_str("rmaj"),
            StatName::Rinv => f.write_str("rinv"),
            StatName::Fmaf => f.write_str("fmaf"),
            StatName::Fix => f.write_str("fix"),
        }
    }
}
