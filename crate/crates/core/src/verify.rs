//! Brute-force evaluation of identity left sides and comparison with their
//! closed forms.
//!
//! A fold keeps one integer counter per `(monomial, power of w)` and converts
//! to cyclotomic coefficients only at the end, so the per-element cost is a
//! hash lookup and an increment.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{CharSpec, Unit};
use crate::cyclotomic::CycInt;
use crate::element::{enumerate, partitions, uset, ColoredPerm, Elements, Family, LetterOrder};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly2};
use crate::registry::{
    find, list_identities, Domain, Expected, Filter, IdentityRecord, Params, Rhs, Sum, Weight,
};
use crate::stats::StatName;

/// What to sum over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Group {
        family: Family,
        n: usize,
        r: u32,
    },
    USet {
        family: Family,
        n: usize,
        r: u32,
        order: LetterOrder,
    },
}

impl Source {
    pub fn r(&self) -> u32 {
        match *self {
            Source::Group { r, .. } | Source::USet { r, .. } => r,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            Source::Group { n, .. } | Source::USet { n, .. } => n,
        }
    }

    pub fn family(&self) -> Family {
        match *self {
            Source::Group { family, .. } | Source::USet { family, .. } => family,
        }
    }

    pub fn expected_size(&self) -> Option<u64> {
        match *self {
            Source::Group { family, n, r } => family.group_order(n, r),
            Source::USet { family, n, r, .. } => family.uset_size(n, r),
        }
    }

    /// A member of the domain, used to validate statistics and characters once.
    fn representative(&self) -> ColoredPerm {
        ColoredPerm::identity(self.r(), self.n())
    }

    fn for_each(&self, mut f: impl FnMut(&ColoredPerm)) -> Result<()> {
        match *self {
            Source::Group { family, n, r } => enumerate(family, n, r)?.for_each_ref(f),
            Source::USet {
                family,
                n,
                r,
                order,
            } => uset(family, n, r, order)?.for_each(|pi| f(&pi)),
        }
        Ok(())
    }
}

/// Accumulates `k` weighted polynomials over one stream.
#[derive(Clone, Debug)]
struct Fold {
    r: u32,
    sums: Vec<HashMap<Monomial, Vec<i64>>>,
    count: u64,
}

impl Fold {
    fn new(r: u32, k: usize) -> Self {
        Fold {
            r,
            sums: vec![HashMap::new(); k],
            count: 0,
        }
    }

    fn add(&mut self, slot: usize, unit: Unit, m: Monomial) {
        let r = self.r as usize;
        let counts = self.sums[slot].entry(m).or_insert_with(|| vec![0; r]);
        let c = &mut counts[unit.exp as usize];
        if unit.negative {
            *c -= 1;
        } else {
            *c += 1;
        }
    }

    fn merge(mut self, other: Fold) -> Result<Fold> {
        for (mine, theirs) in self.sums.iter_mut().zip(other.sums) {
            for (m, counts) in theirs {
                let slot = mine.entry(m).or_insert_with(|| vec![0; counts.len()]);
                for (a, b) in slot.iter_mut().zip(counts) {
                    *a = a.checked_add(b).ok_or(Error::Overflow)?;
                }
            }
        }
        self.count += other.count;
        Ok(self)
    }

    fn into_polys(self) -> Result<(Vec<Poly2>, u64)> {
        let r = self.r;
        let polys = self
            .sums
            .into_iter()
            .map(|map| {
                let mut p = Poly2::zero(r);
                let mut terms: Vec<_> = map.into_iter().collect();
                terms.sort_by_key(|(m, _)| *m);
                for (m, counts) in terms {
                    p.add_term(m, &CycInt::from_power_counts(r, &counts)?)?;
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((polys, self.count))
    }
}

/// One weighted monomial per element: `weight(pi) q^q_stat t^t_stat`.
#[derive(Clone, Copy, Debug)]
pub struct Term {
    pub weight: TermWeight,
    pub q_stat: StatName,
    pub t_stat: Option<StatName>,
}

#[derive(Clone, Copy, Debug)]
pub enum TermWeight {
    One,
    Char(CharSpec),
    SignOf(&'static [StatName]),
}

impl Term {
    pub fn plain(q_stat: StatName) -> Self {
        Term {
            weight: TermWeight::One,
            q_stat,
            t_stat: None,
        }
    }

    fn check(&self, pi: &ColoredPerm) -> Result<()> {
        self.q_stat.check(pi)?;
        if let Some(t) = self.t_stat {
            t.check(pi)?;
        }
        match self.weight {
            TermWeight::One => Ok(()),
            TermWeight::Char(spec) => spec.check(pi),
            TermWeight::SignOf(stats) => stats.iter().try_for_each(|s| s.check(pi)),
        }
    }

    #[inline]
    fn eval(&self, pi: &ColoredPerm) -> (Unit, Monomial) {
        let unit = match self.weight {
            TermWeight::One => Unit::ONE,
            TermWeight::Char(spec) => spec.unit_unchecked(pi),
            TermWeight::SignOf(stats) => {
                let total: u64 = stats.iter().map(|s| s.eval_unchecked(pi)).sum();
                Unit::sign(total % 2 == 1)
            }
        };
        let q = self.q_stat.eval_unchecked(pi) as u32;
        let t = self.t_stat.map_or(0, |s| s.eval_unchecked(pi) as u32);
        (unit, Monomial::new(q, t))
    }
}

/// Runs folds, optionally on a dedicated thread pool.
pub struct Verifier {
    threads: usize,
    pool: Option<rayon::ThreadPool>,
}

impl std::fmt::Debug for Verifier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Verifier")
            .field("threads", &self.threads)
            .finish()
    }
}

impl Verifier {
    /// `threads == 1` folds sequentially on the calling thread.
    pub fn new(threads: usize) -> Result<Self> {
        let threads = threads.max(1);
        let pool = if threads > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?,
            )
        } else {
            None
        };
        Ok(Verifier { threads, pool })
    }

    pub fn sequential() -> Self {
        Verifier {
            threads: 1,
            pool: None,
        }
    }

    /// Reads `MAHON_THREADS`, defaulting to the available parallelism.
    pub fn from_env() -> Result<Self> {
        let threads = match std::env::var("MAHON_THREADS") {
            Ok(v) => v.trim().parse::<usize>().map_err(|_| {
                Error::InvalidParameters(format!(
                    "MAHON_THREADS must be a positive integer, got {v:?}"
                ))
            })?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Self::new(threads)
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    /// Sums every term over the source, returning one polynomial per term
    /// and the number of elements visited.
    pub fn fold(&self, source: &Source, terms: &[Term]) -> Result<(Vec<Poly2>, u64)> {
        let rep = source.representative();
        for term in terms {
            term.check(&rep)?;
        }
        let r = source.r();
        let run_part = |part: Elements| {
            let mut fold = Fold::new(r, terms.len());
            part.for_each_ref(|pi| {
                fold.count += 1;
                for (slot, term) in terms.iter().enumerate() {
                    let (unit, m) = term.eval(pi);
                    fold.add(slot, unit, m);
                }
            });
            fold
        };
        let fold = match (*source, &self.pool) {
            (Source::Group { family, n, r }, Some(pool)) => {
                let parts = partitions(family, n, r)?;
                let folds: Vec<Fold> =
                    pool.install(|| parts.into_par_iter().map(run_part).collect());
                folds
                    .into_iter()
                    .try_fold(Fold::new(r, terms.len()), |acc, f| acc.merge(f))?
            }
            (Source::Group { family, n, r }, None) => run_part(enumerate(family, n, r)?),
            (Source::USet { .. }, _) => {
                let mut fold = Fold::new(r, terms.len());
                source.for_each(|pi| {
                    fold.count += 1;
                    for (slot, term) in terms.iter().enumerate() {
                        let (unit, m) = term.eval(pi);
                        fold.add(slot, unit, m);
                    }
                })?;
                fold
            }
        };
        let (polys, count) = fold.into_polys()?;
        if let Some(size) = source.expected_size() {
            if size != count {
                return Err(Error::Internal(format!(
                    "visited {count} elements, expected {size}"
                )));
            }
        }
        Ok((polys, count))
    }

    /// `sum over G of weight(pi) q^stat(pi)`, the distribution of one statistic.
    pub fn distribution(
        &self,
        family: Family,
        n: usize,
        r: u32,
        stat: StatName,
        character: Option<CharSpec>,
    ) -> Result<Poly2> {
        let term = Term {
            weight: character.map_or(TermWeight::One, TermWeight::Char),
            q_stat: stat,
            t_stat: None,
        };
        let (mut polys, _) = self.fold(&Source::Group { family, n, r }, &[term])?;
        Ok(polys.remove(0))
    }

    /// Left sides of every sum in `record` at `p`.
    pub fn lhs_bruteforce(&self, record: &IdentityRecord, p: &Params) -> Result<(Vec<Poly2>, u64)> {
        record.check_params(p)?;
        let source = source_of(record, p);
        let terms = record
            .sums
            .iter()
            .map(|s| term_of(record, s, p))
            .collect::<Result<Vec<_>>>()?;
        self.fold(&source, &terms)
    }

    pub fn verify(&self, id: &str, p: &Params) -> Result<VerifyReport> {
        self.verify_record(find(id)?, p)
    }

    pub fn verify_record(&self, record: &IdentityRecord, p: &Params) -> Result<VerifyReport> {
        let start = Instant::now();
        let (lhs_all, count) = self.lhs_bruteforce(record, p)?;
        let mut chosen = None;
        for (i, lhs) in lhs_all.iter().enumerate() {
            let rhs = match record.rhs {
                Rhs::Product(build) => build(p)?,
                Rhs::Transpose => lhs.transpose(),
            };
            let diff = lhs.checked_sub(&rhs)?;
            let bad = !diff.is_zero();
            if chosen.is_none() || bad {
                chosen = Some((i, lhs.clone(), rhs, diff));
            }
            if bad {
                break;
            }
        }
        let (slot, lhs, rhs, diff) =
            chosen.ok_or_else(|| Error::Internal(format!("{} has no sums", record.id)))?;
        let equal = diff.is_zero();
        let verdict = match (equal, record.expected) {
            (true, _) => Verdict::Equal,
            (false, Expected::Match) => Verdict::Mismatch,
            (false, Expected::KnownErratum(_)) => Verdict::ExpectedMismatchConfirmed,
        };
        let witness = if equal || p.n > 4 {
            None
        } else {
            witness_for(record, p, slot, &diff)?
        };
        let note = match record.expected {
            Expected::KnownErratum(text) => Some(text.to_string()),
            Expected::Match => None,
        };
        Ok(VerifyReport {
            id: record.id.to_string(),
            params: *p,
            verdict,
            expected_erratum: matches!(record.expected, Expected::KnownErratum(_)),
            sum: record.sums[slot].describe(),
            lhs,
            rhs,
            diff,
            count,
            ms: start.elapsed().as_millis() as u64,
            witness,
            note,
        })
    }

    /// Every record matching `filter` at every valid parameter tuple with
    /// `n <= max_n`, `r <= max_r`, in registry order.
    pub fn verify_range(
        &self,
        filter: &Filter,
        max_n: usize,
        max_r: u32,
    ) -> Result<Vec<VerifyReport>> {
        let mut out = Vec::new();
        for record in list_identities(filter) {
            for p in record.param_grid(max_n, max_r) {
                out.push(self.verify_record(record, &p)?);
            }
        }
        Ok(out)
    }
}

impl Default for Verifier {
    fn default() -> Self {
        Self::sequential()
    }
}

fn source_of(record: &IdentityRecord, p: &Params) -> Source {
    match record.domain {
        Domain::Group => Source::Group {
            family: record.family,
            n: p.n,
            r: p.r,
        },
        Domain::USet(order) => Source::USet {
            family: record.family,
            n: p.n,
            r: p.r,
            order,
        },
    }
}

fn term_of(record: &IdentityRecord, sum: &Sum, p: &Params) -> Result<Term> {
    let weight = match sum.weight {
        Weight::Trivial => TermWeight::One,
        Weight::SignOf(stats) => TermWeight::SignOf(stats),
        w => match record.char_spec(w, p)? {
            Some(spec) => TermWeight::Char(spec),
            None => TermWeight::One,
        },
    };
    Ok(Term {
        weight,
        q_stat: sum.q_stat,
        t_stat: sum.t_stat,
    })
}

/// First element, in enumeration order, contributing to the lowest monomial
/// of the difference.
fn witness_for(
    record: &IdentityRecord,
    p: &Params,
    slot: usize,
    diff: &Poly2,
) -> Result<Option<String>> {
    let Some((target, _)) = diff.terms().next() else {
        return Ok(None);
    };
    let term = term_of(record, &record.sums[slot], p)?;
    let mut found = None;
    source_of(record, p).for_each(|pi| {
        if found.is_none() && term.eval(pi).1 == target {
            found = Some(pi.to_string());
        }
    })?;
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    Mismatch,
    ExpectedMismatchConfirmed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Mismatch => "mismatch",
            Verdict::ExpectedMismatchConfirmed => "expected-mismatch-confirmed",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub params: Params,
    pub verdict: Verdict,
    /// The record is registered as a known erratum.
    pub expected_erratum: bool,
    /// The sum the report's `lhs` belongs to.
    pub sum: String,
    pub lhs: Poly2,
    pub rhs: Poly2,
    pub diff: Poly2,
    pub count: u64,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerifyReport {
    /// Equal for ordinary records, a confirmed mismatch for errata.
    pub fn as_expected(&self) -> bool {
        match self.verdict {
            Verdict::Equal => !self.expected_erratum,
            Verdict::ExpectedMismatchConfirmed => true,
            Verdict::Mismatch => false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// One line: id, parameters, verdict, count, time.
    pub fn summary_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{} elements\t{} ms",
            self.id, self.params, self.verdict, self.count, self.ms
        )
    }

    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.id,
            self.params.n,
            self.params.r,
            self.params.a,
            self.params.b,
            self.verdict,
            self.count
        )
    }

    /// Multi-line human report; includes the polynomials when they differ.
    pub fn human(&self) -> String {
        let mut s = self.summary_line();
        if self.verdict != Verdict::Equal {
            s.push_str(&format!("\n  sum:  {}", self.sum));
            s.push_str(&format!("\n  lhs:  {}", self.lhs));
            s.push_str(&format!("\n  rhs:  {}", self.rhs));
            s.push_str(&format!("\n  diff: {}", self.diff));
            if let Some(w) = &self.witness {
                s.push_str(&format!("\n  first contributing element: {w}"));
            }
        }
        if let Some(note) = &self.note {
            s.push_str(&format!("\n  note: {note}"));
        }
        s
    }
}

/// `verify` on a default sequential verifier.
pub fn verify(id: &str, p: &Params) -> Result<VerifyReport> {
    Verifier::sequential().verify(id, p)
}
