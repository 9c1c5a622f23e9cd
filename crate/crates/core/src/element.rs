//! Colored permutations, letter orders, group enumeration and the
//! `pi = tau * rho` decomposition.
//!
//! An element of `G(r, n)` is a pair `(z, sigma)`: `sigma` a permutation of
//! `1..=n` in one-line notation and `z` a color vector in `{0..r-1}^n`. The
//! symmetric group is the `r = 1` case and the signed permutations `B_n` are
//! the `r = 2` case with color 1 read as a minus sign.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter `value^[color]` of a colored permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub value: u32,
    pub color: u32,
}

impl Letter {
    pub fn new(value: u32, color: u32) -> Self {
        Letter { value, color }
    }
}

/// Which group an element or computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Symmetric group, `r = 1`.
    S,
    /// Signed permutations, `r = 2`.
    B,
    /// Signed permutations with an even number of negative entries.
    D,
    /// Colored permutations `G(r, n)`.
    G,
}

impl Family {
    /// The forced number of colors, if the family fixes one.
    pub fn fixed_r(self) -> Option<u32> {
        match self {
            Family::S => Some(1),
            Family::B | Family::D => Some(2),
            Family::G => None,
        }
    }

    pub fn check(self, r: u32) -> Result<()> {
        match self.fixed_r() {
            Some(fixed) if fixed != r => Err(Error::InvalidParameters(format!(
                "family {self} requires r = {fixed}, got r = {r}"
            ))),
            _ if r == 0 => Err(Error::InvalidParameters("r must be at least 1".into())),
            _ => Ok(()),
        }
    }

    /// `|S_n| = n!`, `|B_n| = 2^n n!`, `|D_n| = 2^(n-1) n!`, `|G(r,n)| = r^n n!`.
    pub fn group_order(self, n: usize, r: u32) -> Option<u64> {
        let fact = (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))?;
        let colors = self.uset_size(n, r)?;
        fact.checked_mul(colors)
    }

    /// Number of order-increasing coset representatives: `1`, `2^n`,
    /// `2^(n-1)` (`1` when `n = 0`) and `r^n`.
    pub fn uset_size(self, n: usize, r: u32) -> Option<u64> {
        match self {
            Family::S => Some(1),
            Family::B => 2u64.checked_pow(n as u32),
            Family::D => 2u64.checked_pow(n.saturating_sub(1) as u32),
            Family::G => (r as u64).checked_pow(n as u32),
        }
    }

    /// Whether an element of `G(r, n)` belongs to this family.
    pub fn contains(self, pi: &ColoredPerm) -> bool {
        match self {
            Family::S => pi.r == 1,
            Family::B => pi.r == 2,
            Family::D => pi.r == 2 && pi.colored_count().is_multiple_of(2),
            Family::G => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::S => "S",
            Family::B => "B",
            Family::D => "D",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" | "a" => Ok(Family::S),
            "b" => Ok(Family::B),
            "d" => Ok(Family::D),
            "g" => Ok(Family::G),
            _ => Err(Error::InvalidParameters(format!("unknown family {s:?}"))),
        }
    }
}

/// A total order on colored letters. `inv` and `maj` are always taken
/// relative to one of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LetterOrder {
    /// `1 < 2 < ... < n`, uncolored letters only.
    NaturalS,
    /// Integer order on signed letters: `-n < ... < -1 < 1 < ... < n`.
    IntegerB,
    /// Negatives first by absolute value: `-1 < ... < -n < 1 < ... < n`.
    SignBlockB,
    /// Colored letters grouped by value, largest value first and, within a
    /// value, highest color first; then the uncolored letters ascending:
    /// `(n^[r-1] < ... < n^[1]) < ... < (1^[r-1] < ... < 1^[1]) < (1 < ... < n)`.
    ValueBlockG,
    /// Letters grouped by color, highest color first, uncolored last, each
    /// block ascending by value:
    /// `(1^[r-1] < ... < n^[r-1]) < ... < (1^[1] < ... < n^[1]) < (1 < ... < n)`.
    ColorBlockG,
}

impl LetterOrder {
    pub const ALL: [LetterOrder; 5] = [
        LetterOrder::NaturalS,
        LetterOrder::IntegerB,
        LetterOrder::SignBlockB,
        LetterOrder::ValueBlockG,
        LetterOrder::ColorBlockG,
    ];

    /// Whether the order is defined on letters with `r` colors.
    pub fn supports(self, r: u32) -> bool {
        match self {
            LetterOrder::NaturalS => r == 1,
            LetterOrder::IntegerB | LetterOrder::SignBlockB => (1..=2).contains(&r),
            LetterOrder::ValueBlockG | LetterOrder::ColorBlockG => r >= 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LetterOrder::NaturalS => "natural",
            LetterOrder::IntegerB => "integer",
            LetterOrder::SignBlockB => "sign-block",
            LetterOrder::ValueBlockG => "value-block",
            LetterOrder::ColorBlockG => "color-block",
        }
    }

    /// Dense integer key, strictly monotone in the order for letters of
    /// `G(r, n)`. Used on the hot path of every statistic.
    #[inline]
    pub fn sort_key(self, l: Letter, n: u32, r: u32) -> u32 {
        let (v, c) = (l.value, l.color);
        match self {
            LetterOrder::NaturalS => v,
            LetterOrder::IntegerB => {
                if c == 0 {
                    n + v
                } else {
                    n + 1 - v
                }
            }
            LetterOrder::SignBlockB => {
                if c == 0 {
                    n + v
                } else {
                    v
                }
            }
            LetterOrder::ValueBlockG => {
                if c == 0 {
                    n * (r - 1) + v
                } else {
                    (n - v) * (r - 1) + (r - c)
                }
            }
            LetterOrder::ColorBlockG => {
                if c == 0 {
                    n * (r - 1) + v
                } else {
                    (r - 1 - c) * n + v
                }
            }
        }
    }
}

impl FromStr for LetterOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LetterOrder::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown letter order {s:?}")))
    }
}

/// Compares two letters of a group with `r` colors under `order`.
pub fn compare_letters(order: LetterOrder, a: Letter, b: Letter, r: u32) -> Result<Ordering> {
    for l in [a, b] {
        if l.value == 0 || l.color >= r || !order.supports(r) {
            return Err(Error::InvalidLetter {
                value: l.value,
                color: l.color,
                context: format!("order {} with r = {r}", order.name()),
            });
        }
    }
    let (va, vb) = (a.value as i64, b.value as i64);
    let (ca, cb) = (a.color as i64, b.color as i64);
    Ok(match order {
        LetterOrder::NaturalS => va.cmp(&vb),
        LetterOrder::IntegerB => {
            let signed = |v: i64, c: i64| if c == 0 { v } else { -v };
            signed(va, ca).cmp(&signed(vb, cb))
        }
        LetterOrder::SignBlockB => (ca == 0, va).cmp(&(cb == 0, vb)),
        LetterOrder::ValueBlockG => {
            let key = |v: i64, c: i64| if c == 0 { (1, v, 0) } else { (0, -v, -c) };
            key(va, ca).cmp(&key(vb, cb))
        }
        LetterOrder::ColorBlockG => {
            let key = |v: i64, c: i64| if c == 0 { (0, v) } else { (-c, v) };
            key(va, ca).cmp(&key(vb, cb))
        }
    })
}

/// An element `(z, sigma)` of `G(r, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPerm")]
pub struct ColoredPerm {
    r: u32,
    sigma: Vec<u32>,
    z: Vec<u32>,
}

#[derive(Deserialize)]
struct RawPerm {
    r: u32,
    sigma: Vec<u32>,
    z: Vec<u32>,
}

impl TryFrom<RawPerm> for ColoredPerm {
    type Error = Error;

    fn try_from(raw: RawPerm) -> Result<Self> {
        ColoredPerm::new(raw.r, raw.sigma, raw.z)
    }
}

impl ColoredPerm {
    pub fn new(r: u32, sigma: Vec<u32>, z: Vec<u32>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidElement("r must be at least 1".into()));
        }
        if sigma.len() != z.len() {
            return Err(Error::InvalidElement(format!(
                "sigma has {} entries but z has {}",
                sigma.len(),
                z.len()
            )));
        }
        let n = sigma.len();
        let mut seen = vec![false; n + 1];
        for &v in &sigma {
            if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidElement(format!(
                    "{sigma:?} is not a permutation of 1..={n}"
                )));
            }
        }
        if let Some(&c) = z.iter().find(|&&c| c >= r) {
            return Err(Error::InvalidElement(format!(
                "color {c} out of range for r = {r}"
            )));
        }
        Ok(ColoredPerm { r, sigma, z })
    }

    pub fn from_letters(r: u32, letters: &[Letter]) -> Result<Self> {
        Self::new(
            r,
            letters.iter().map(|l| l.value).collect(),
            letters.iter().map(|l| l.color).collect(),
        )
    }

    /// An uncolored permutation of `S_n` from one-line notation.
    pub fn perm(sigma: Vec<u32>) -> Result<Self> {
        let z = vec![0; sigma.len()];
        Self::new(1, sigma, z)
    }

    /// A signed permutation from window notation, e.g. `[-3, 1, -6, 2, -5, -4]`.
    pub fn signed(window: &[i64]) -> Result<Self> {
        let sigma = window.iter().map(|v| v.unsigned_abs() as u32).collect();
        let z = window.iter().map(|&v| u32::from(v < 0)).collect();
        Self::new(2, sigma, z)
    }

    pub fn identity(r: u32, n: usize) -> Self {
        ColoredPerm {
            r: r.max(1),
            sigma: (1..=n as u32).collect(),
            z: vec![0; n],
        }
    }

    /// Parses whitespace-separated letters: `5`, `3[2]` (also `3^[2]`), and
    /// for `r = 2` the alias `-3` for `3[1]`.
    pub fn parse(text: &str, r: u32) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let letter = if let Some(abs) = tok.strip_prefix('-') {
                if r != 2 {
                    return Err(err(format!("sign alias {tok:?} needs r = 2")));
                }
                let v = abs
                    .parse()
                    .map_err(|_| err(format!("bad letter {tok:?}")))?;
                Letter::new(v, 1)
            } else if let Some(open) = tok.find('[') {
                let close = tok
                    .strip_suffix(']')
                    .ok_or_else(|| err(format!("unterminated color in {tok:?}")))?;
                let value = tok[..open].trim_end_matches('^');
                let v = value
                    .parse()
                    .map_err(|_| err(format!("bad value in {tok:?}")))?;
                let c = close[open + 1..]
                    .parse()
                    .map_err(|_| err(format!("bad color in {tok:?}")))?;
                Letter::new(v, c)
            } else {
                let v = tok
                    .parse()
                    .map_err(|_| err(format!("bad letter {tok:?}")))?;
                Letter::new(v, 0)
            };
            letters.push(letter);
        }
        Self::from_letters(r, &letters).map_err(|e| err(e.to_string()))
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn z(&self) -> &[u32] {
        &self.z
    }

    /// The letter in 0-based position `i`.
    #[inline]
    pub fn letter(&self, i: usize) -> Letter {
        Letter {
            value: self.sigma[i],
            color: self.z[i],
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.sigma
            .iter()
            .zip(&self.z)
            .map(|(&value, &color)| Letter { value, color })
    }

    /// Number of positions with a nonzero color (`neg` for signed permutations).
    pub fn colored_count(&self) -> usize {
        self.z.iter().filter(|&&c| c != 0).count()
    }
}

impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match l.color {
                0 => write!(f, "{}", l.value)?,
                1 if self.r == 2 => write!(f, "-{}", l.value)?,
                c => write!(f, "{}[{c}]", l.value)?,
            }
        }
        Ok(())
    }
}

/// Lexicographic successor of `s` in place; `false` when `s` was the last one.
fn next_permutation(s: &mut [u32]) -> bool {
    let n = s.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// Lazy exhaustive stream over a group, lexicographic in `(sigma, z)` with
/// `z` varying fastest. Optionally pinned to a fixed first letter.
#[derive(Clone, Debug)]
pub struct Elements {
    r: u32,
    sigma: Vec<u32>,
    z: Vec<u32>,
    pinned: usize,
    even_only: bool,
    done: bool,
}

impl Elements {
    fn new(family: Family, n: usize, r: u32) -> Result<Self> {
        family.check(r)?;
        Ok(Elements {
            r,
            sigma: (1..=n as u32).collect(),
            z: vec![0; n],
            pinned: 0,
            even_only: family == Family::D,
            done: false,
        })
    }

    fn with_first_letter(family: Family, n: usize, r: u32, first: Letter) -> Result<Self> {
        let mut e = Self::new(family, n, r)?;
        if first.value == 0 || first.value as usize > n || first.color >= r {
            return Err(Error::InvalidLetter {
                value: first.value,
                color: first.color,
                context: format!("G({r}, {n})"),
            });
        }
        e.sigma = std::iter::once(first.value)
            .chain((1..=n as u32).filter(|&v| v != first.value))
            .collect();
        e.z[0] = first.color;
        e.pinned = 1;
        Ok(e)
    }

    /// Visits every element without allocating one per step.
    pub fn for_each_ref(mut self, mut f: impl FnMut(&ColoredPerm)) {
        let mut cur = ColoredPerm {
            r: self.r,
            sigma: Vec::new(),
            z: Vec::new(),
        };
        while !self.done {
            if self.accepts() {
                cur.sigma.clone_from(&self.sigma);
                cur.z.clone_from(&self.z);
                f(&cur);
            }
            self.advance();
        }
    }

    fn accepts(&self) -> bool {
        !self.even_only || self.z.iter().filter(|&&c| c != 0).count() % 2 == 0
    }

    fn advance(&mut self) {
        for i in (self.pinned..self.z.len()).rev() {
            if self.z[i] + 1 < self.r {
                self.z[i] += 1;
                return;
            }
            self.z[i] = 0;
        }
        if !next_permutation(&mut self.sigma[self.pinned..]) {
            self.done = true;
        }
    }
}

impl Iterator for Elements {
    type Item = ColoredPerm;

    fn next(&mut self) -> Option<ColoredPerm> {
        while !self.done {
            let item = self.accepts().then(|| ColoredPerm {
                r: self.r,
                sigma: self.sigma.clone(),
                z: self.z.clone(),
            });
            self.advance();
            if item.is_some() {
                return item;
            }
        }
        None
    }
}

/// Every element of the family's group of rank `n` exactly once.
pub fn enumerate(family: Family, n: usize, r: u32) -> Result<Elements> {
    Elements::new(family, n, r)
}

/// Disjoint sub-streams, one per first letter, whose union is
/// `enumerate(family, n, r)`.
pub fn partitions(family: Family, n: usize, r: u32) -> Result<Vec<Elements>> {
    family.check(r)?;
    if n == 0 {
        return Ok(vec![Elements::new(family, n, r)?]);
    }
    let mut parts = Vec::with_capacity(n * r as usize);
    for v in 1..=n as u32 {
        for c in 0..r {
            parts.push(Elements::with_first_letter(
                family,
                n,
                r,
                Letter::new(v, c),
            )?);
        }
    }
    Ok(parts)
}

/// Stream over the order-increasing elements `tau_1 < ... < tau_n`: one per
/// color assignment of the values (even number of colored values for `D`).
#[derive(Clone, Debug)]
pub struct USet {
    r: u32,
    order: LetterOrder,
    colors: Vec<u32>,
    even_only: bool,
    done: bool,
}

impl USet {
    fn current(&self) -> ColoredPerm {
        let n = self.colors.len() as u32;
        let mut letters: Vec<Letter> = self
            .colors
            .iter()
            .enumerate()
            .map(|(i, &c)| Letter::new(i as u32 + 1, c))
            .collect();
        letters.sort_by_key(|&l| self.order.sort_key(l, n, self.r));
        ColoredPerm {
            r: self.r,
            sigma: letters.iter().map(|l| l.value).collect(),
            z: letters.iter().map(|l| l.color).collect(),
        }
    }

    fn advance(&mut self) {
        for c in self.colors.iter_mut().rev() {
            if *c + 1 < self.r {
                *c += 1;
                return;
            }
            *c = 0;
        }
        self.done = true;
    }
}

impl Iterator for USet {
    type Item = ColoredPerm;

    fn next(&mut self) -> Option<ColoredPerm> {
        while !self.done {
            let keep = !self.even_only || self.colors.iter().filter(|&&c| c != 0).count() % 2 == 0;
            let item = keep.then(|| self.current());
            self.advance();
            if item.is_some() {
                return item;
            }
        }
        None
    }
}

/// The coset representatives `U` with `family = U . S_n`, increasing under `order`.
pub fn uset(family: Family, n: usize, r: u32, order: LetterOrder) -> Result<USet> {
    family.check(r)?;
    if !order.supports(r) {
        return Err(Error::InvalidParameters(format!(
            "order {} is not defined for r = {r}",
            order.name()
        )));
    }
    Ok(USet {
        r,
        order,
        colors: vec![0; n],
        even_only: family == Family::D,
        done: false,
    })
}

/// Splits `pi = tau rho` with `tau` increasing under `order` and `rho`
/// uncolored, using the convention `pi_i = tau_{rho_i}`.
pub fn decompose(pi: &ColoredPerm, order: LetterOrder) -> Result<(ColoredPerm, ColoredPerm)> {
    if !order.supports(pi.r) {
        return Err(Error::InvalidParameters(format!(
            "order {} is not defined for r = {}",
            order.name(),
            pi.r
        )));
    }
    let n = pi.n();
    let key = |i: usize| order.sort_key(pi.letter(i), n as u32, pi.r);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| key(i));
    let mut rho = vec![0u32; n];
    for (rank, &i) in idx.iter().enumerate() {
        rho[i] = rank as u32 + 1;
    }
    let tau = ColoredPerm {
        r: pi.r,
        sigma: idx.iter().map(|&i| pi.sigma[i]).collect(),
        z: idx.iter().map(|&i| pi.z[i]).collect(),
    };
    let rho = ColoredPerm {
        r: 1,
        sigma: rho,
        z: vec![0; n],
    };
    Ok((tau, rho))
}

/// Inverse of [`decompose`]: `pi_i = tau_{rho_i}`.
pub fn recompose(tau: &ColoredPerm, rho: &ColoredPerm) -> Result<ColoredPerm> {
    if tau.n() != rho.n() || rho.colored_count() != 0 {
        return Err(Error::InvalidParameters(
            "recompose needs an uncolored rho of the same rank".into(),
        ));
    }
    let idx = |i: usize| rho.sigma[i] as usize - 1;
    Ok(ColoredPerm {
        r: tau.r,
        sigma: (0..tau.n()).map(|i| tau.sigma[idx(i)]).collect(),
        z: (0..tau.n()).map(|i| tau.z[idx(i)]).collect(),
    })
}

/// `|pi|`: the underlying uncolored permutation.
pub fn abs_perm(pi: &ColoredPerm) -> ColoredPerm {
    ColoredPerm {
        r: 1,
        sigma: pi.sigma.clone(),
        z: vec![0; pi.n()],
    }
}

/// Removes the fixed points `{i : pi_i = i with color 0}` and renumbers the
/// remaining values order-preservingly. Returns the 1-based fixed positions
/// and the reduced element of `G(r, n - fix)`.
pub fn reduce_tilde(pi: &ColoredPerm) -> (Vec<usize>, ColoredPerm) {
    let n = pi.n();
    let is_fixed = |i: usize| pi.sigma[i] as usize == i + 1 && pi.z[i] == 0;
    let fix: Vec<usize> = (0..n).filter(|&i| is_fixed(i)).map(|i| i + 1).collect();
    // new value = old value minus the number of fixed values below it
    let mut shift = vec![0u32; n + 1];
    let mut below = 0;
    for (v, s) in shift.iter_mut().enumerate().skip(1) {
        *s = below;
        if fix.binary_search(&v).is_ok() {
            below += 1;
        }
    }
    let mut sigma = Vec::with_capacity(n - fix.len());
    let mut z = Vec::with_capacity(n - fix.len());
    for i in (0..n).filter(|&i| !is_fixed(i)) {
        let v = pi.sigma[i];
        sigma.push(v - shift[v as usize]);
        z.push(pi.z[i]);
    }
    (fix, ColoredPerm { r: pi.r, sigma, z })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str, r: u32) -> ColoredPerm {
        ColoredPerm::parse(text, r).unwrap()
    }

    #[test]
    fn compare_examples() {
        use LetterOrder::*;
        let l = Letter::new;
        assert_eq!(
            compare_letters(ColorBlockG, l(1, 3), l(2, 1), 4).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_letters(ValueBlockG, l(2, 1), l(1, 3), 4).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_letters(IntegerB, l(3, 1), l(5, 1), 2).unwrap(),
            Ordering::Greater
        );
        assert!(compare_letters(IntegerB, l(3, 2), l(5, 1), 3).is_err());
        assert!(compare_letters(ColorBlockG, l(3, 4), l(5, 1), 4).is_err());
        assert!(compare_letters(NaturalS, l(3, 1), l(5, 0), 2).is_err());
    }

    #[test]
    fn orders_are_strict_total_and_match_sort_keys() {
        for r in 1..=4u32 {
            for n in 1..=4u32 {
                let letters: Vec<Letter> = (1..=n)
                    .flat_map(|v| (0..r).map(move |c| Letter::new(v, c)))
                    .collect();
                for order in LetterOrder::ALL.into_iter().filter(|o| o.supports(r)) {
                    for &a in &letters {
                        for &b in &letters {
                            let ab = compare_letters(order, a, b, r).unwrap();
                            assert_eq!(ab == Ordering::Equal, a == b);
                            assert_eq!(ab.reverse(), compare_letters(order, b, a, r).unwrap());
                            let ka = order.sort_key(a, n, r);
                            let kb = order.sort_key(b, n, r);
                            assert_eq!(ka.cmp(&kb), ab, "{order:?} {a:?} {b:?}");
                            for &c in &letters {
                                let bc = compare_letters(order, b, c, r).unwrap();
                                if ab == Ordering::Less && bc == Ordering::Less {
                                    assert_eq!(
                                        compare_letters(order, a, c, r).unwrap(),
                                        Ordering::Less
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orders_coincide_at_r_two() {
        for n in 1..=5u32 {
            for v in 1..=n {
                for c in 0..2 {
                    let l = Letter::new(v, c);
                    assert_eq!(
                        LetterOrder::ValueBlockG.sort_key(l, n, 2),
                        LetterOrder::IntegerB.sort_key(l, n, 2)
                    );
                    assert_eq!(
                        LetterOrder::ColorBlockG.sort_key(l, n, 2),
                        LetterOrder::SignBlockB.sort_key(l, n, 2)
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let p = g("-3 1 -6 2 -5 -4", 2);
        assert_eq!(p.sigma(), &[3, 1, 6, 2, 5, 4]);
        assert_eq!(p.z(), &[1, 0, 1, 0, 1, 1]);
        assert_eq!(p.to_string(), "-3 1 -6 2 -5 -4");
        assert_eq!(g("3[1] 1 6[1] 2 5[1] 4[1]", 2), p);

        let q = g("2[1] 1[3] 5 4 3^[2]", 4);
        assert_eq!(q.z(), &[1, 3, 0, 0, 2]);
        assert_eq!(q.to_string(), "2[1] 1[3] 5 4 3[2]");

        assert!(ColoredPerm::parse("-1 2", 3).is_err());
        assert!(ColoredPerm::parse("1 1", 1).is_err());
        assert!(ColoredPerm::parse("1[4] 2", 4).is_err());
        assert!(ColoredPerm::parse("1[2", 4).is_err());
        assert!(ColoredPerm::parse("x", 1).is_err());
    }

    #[test]
    fn json_form() {
        let p = g("2[1] 1", 3);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"r":3,"sigma":[2,1],"z":[1,0]}"#);
        assert_eq!(serde_json::from_str::<ColoredPerm>(&s).unwrap(), p);
        assert!(serde_json::from_str::<ColoredPerm>(r#"{"r":3,"sigma":[2,2],"z":[1,0]}"#).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(Family::S, 3, 1).unwrap().count(), 6);
        for n in 0..=4 {
            for (family, r) in [(Family::S, 1), (Family::B, 2), (Family::D, 2)] {
                let expected = family.group_order(n, r).unwrap() as usize;
                assert_eq!(enumerate(family, n, r).unwrap().count(), expected);
            }
            for r in 1..=4 {
                let expected = Family::G.group_order(n, r).unwrap() as usize;
                assert_eq!(enumerate(Family::G, n, r).unwrap().count(), expected);
            }
        }
        assert!(enumerate(Family::B, 3, 3).is_err());
        assert!(enumerate(Family::G, 3, 0).is_err());
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        use std::collections::HashSet;
        let all: Vec<_> = enumerate(Family::G, 3, 3).unwrap().collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert_eq!(all.len(), 162);
        assert_eq!(all[0], ColoredPerm::identity(3, 3));
        assert_eq!(all[1], g("1 2 3[1]", 3));
    }

    #[test]
    fn d2_elements() {
        let d2: Vec<String> = enumerate(Family::D, 2, 2)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(d2, ["1 2", "-1 -2", "2 1", "-2 -1"]);
    }

    #[test]
    fn partitions_cover_the_group() {
        let mut whole: Vec<_> = enumerate(Family::G, 3, 2).unwrap().collect();
        let mut parts: Vec<_> = partitions(Family::G, 3, 2)
            .unwrap()
            .into_iter()
            .flatten()
            .collect();
        whole.sort_by(|a, b| (a.sigma(), a.z()).cmp(&(b.sigma(), b.z())));
        parts.sort_by(|a, b| (a.sigma(), a.z()).cmp(&(b.sigma(), b.z())));
        assert_eq!(whole, parts);

        let d: usize = partitions(Family::D, 4, 2)
            .unwrap()
            .into_iter()
            .map(|p| p.count())
            .sum();
        assert_eq!(d, 192);
    }

    #[test]
    fn for_each_ref_matches_iterator() {
        let mut seen = Vec::new();
        enumerate(Family::D, 3, 2)
            .unwrap()
            .for_each_ref(|p| seen.push(p.clone()));
        assert_eq!(
            seen,
            enumerate(Family::D, 3, 2).unwrap().collect::<Vec<_>>()
        );
    }

    #[test]
    fn decompose_examples() {
        let (tau, rho) = decompose(&g("3 -5 -1 4 -2", 2), LetterOrder::IntegerB).unwrap();
        assert_eq!(tau, g("-5 -2 -1 3 4", 2));
        assert_eq!(rho, ColoredPerm::perm(vec![4, 1, 3, 5, 2]).unwrap());

        let (tau, rho) = decompose(&g("2 4[2] 1[1] 3[2]", 3), LetterOrder::ValueBlockG).unwrap();
        assert_eq!(tau, g("4[2] 3[2] 1[1] 2", 3));
        assert_eq!(rho, ColoredPerm::perm(vec![4, 1, 3, 2]).unwrap());

        let id = ColoredPerm::identity(3, 4);
        let (tau, rho) = decompose(&id, LetterOrder::ColorBlockG).unwrap();
        assert_eq!(tau, id);
        assert_eq!(rho, ColoredPerm::identity(1, 4));

        assert!(decompose(&g("1[2] 2", 3), LetterOrder::IntegerB).is_err());
    }

    #[test]
    fn decompose_round_trip_g34() {
        for order in [LetterOrder::ValueBlockG, LetterOrder::ColorBlockG] {
            for pi in enumerate(Family::G, 4, 3).unwrap() {
                let (tau, rho) = decompose(&pi, order).unwrap();
                assert_eq!(recompose(&tau, &rho).unwrap(), pi);
                let n = pi.n() as u32;
                let keys: Vec<u32> = tau.letters().map(|l| order.sort_key(l, n, 3)).collect();
                assert!(keys.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn uset_sizes_and_monotone() {
        for n in 0..=5 {
            assert_eq!(
                uset(Family::B, n, 2, LetterOrder::IntegerB)
                    .unwrap()
                    .count(),
                1 << n
            );
            assert_eq!(
                uset(Family::D, n, 2, LetterOrder::IntegerB)
                    .unwrap()
                    .count() as u64,
                Family::D.uset_size(n, 2).unwrap()
            );
            for r in 1..=4u32 {
                for tau in uset(Family::G, n, r, LetterOrder::ColorBlockG).unwrap() {
                    let (t2, rho) = decompose(&tau, LetterOrder::ColorBlockG).unwrap();
                    assert_eq!(t2, tau);
                    assert_eq!(rho, ColoredPerm::identity(1, n));
                }
            }
        }
    }

    #[test]
    fn abs_perm_examples() {
        assert_eq!(
            abs_perm(&g("-3 1 -6 2 -5 -4", 2)),
            ColoredPerm::perm(vec![3, 1, 6, 2, 5, 4]).unwrap()
        );
        assert_eq!(
            abs_perm(&g("2[1] 1[3] 5 4 3[2]", 4)),
            ColoredPerm::perm(vec![2, 1, 5, 4, 3]).unwrap()
        );
        assert_eq!(
            abs_perm(&ColoredPerm::identity(1, 3)),
            ColoredPerm::identity(1, 3)
        );
    }

    #[test]
    fn reduce_tilde_examples() {
        let (fix, tilde) = reduce_tilde(&g("2[1] 1[3] 5 4 3[2]", 4));
        assert_eq!(fix, vec![4]);
        assert_eq!(tilde, g("2[1] 1[3] 4 3[2]", 4));

        let (fix, tilde) = reduce_tilde(&ColoredPerm::identity(3, 4));
        assert_eq!(fix, vec![1, 2, 3, 4]);
        assert_eq!(tilde.n(), 0);

        let (fix, tilde) = reduce_tilde(&g("1[1]", 2));
        assert!(fix.is_empty());
        assert_eq!(tilde, g("1[1]", 2));

        let (fix, tilde) = reduce_tilde(&g("1 3 2 4 6 5", 1));
        assert_eq!(fix, vec![1, 4]);
        assert_eq!(tilde, g("2 1 4 3", 1));
    }
}
