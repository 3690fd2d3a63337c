//! Character-table summary files and the conjecture audit run over them.
//!
//! A summary keeps only what the three conjectures look at: degrees,
//! principal-block membership per prime, and optional Sylow commutation
//! facts. The format is line oriented, `#` starts a comment:
//!
//! ```text
//! group S4
//! order 24
//! primes 2 3
//! trivial [4]
//! complete true
//! sylow_commute 2 3 false
//! char [4] 1 2:1 3:1
//! char [3,1] 3 2:1 3:0
//! ```
//!
//! Header directives come first, then `char` lines. Every `char` line flags
//! every header prime exactly once.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::block::principal_block_contains;
use crate::degree::degree;
use crate::factored::{is_prime, ArithError, FactoredNatural};
use crate::partition::partitions_of;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterRow {
    pub id: String,
    pub degree: BigUint,
    pub principal_flags: BTreeMap<u64, bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTableSummary {
    pub group_name: String,
    pub order: BigUint,
    pub primes: Vec<u64>,
    pub trivial_id: String,
    pub rows: Vec<CharacterRow>,
    /// Keyed by `(smaller prime, larger prime)`.
    pub sylow_commute: BTreeMap<(u64, u64), bool>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("missing `{0}` directive")]
    MissingDirective(&'static str),
    #[error("duplicate `{0}` directive")]
    DuplicateDirective(String),
    #[error("header directive after the first `char` line")]
    HeaderAfterRows,
    #[error("unknown directive")]
    UnknownDirective,
    #[error("wrong number of arguments")]
    WrongArity,
    #[error("malformed integer")]
    MalformedInteger,
    #[error("malformed boolean")]
    MalformedBool,
    #[error("not a prime")]
    NotPrime,
    #[error("prime listed twice")]
    DuplicatePrime,
    #[error("prime does not divide the group order")]
    PrimeDoesNotDivideOrder,
    #[error("duplicate character id")]
    DuplicateId,
    #[error("malformed prime flag (expected <p>:<0|1>)")]
    MalformedFlag,
    #[error("flag for a prime not in the header")]
    UnknownPrimeFlag,
    #[error("prime flagged twice")]
    DuplicatePrimeFlag,
    #[error("missing flag for prime {0}")]
    MissingPrimeFlag(u64),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind} (at {token:?})")]
pub struct ParseError {
    pub line: usize,
    pub token: String,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, token: &str, kind: ParseErrorKind) -> Self {
        Self {
            line,
            token: token.to_string(),
            kind,
        }
    }
}

fn parse_uint(line: usize, tok: &str) -> Result<BigUint, ParseError> {
    if tok.is_empty() || !tok.bytes().all(|c| c.is_ascii_digit()) {
        return Err(ParseError::new(line, tok, ParseErrorKind::MalformedInteger));
    }
    BigUint::parse_bytes(tok.as_bytes(), 10)
        .ok_or_else(|| ParseError::new(line, tok, ParseErrorKind::MalformedInteger))
}

fn parse_prime(line: usize, tok: &str) -> Result<u64, ParseError> {
    let p: u64 = tok
        .parse()
        .map_err(|_| ParseError::new(line, tok, ParseErrorKind::MalformedInteger))?;
    if !is_prime(p) {
        return Err(ParseError::new(line, tok, ParseErrorKind::NotPrime));
    }
    Ok(p)
}

fn parse_bool(line: usize, tok: &str) -> Result<bool, ParseError> {
    match tok {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(ParseError::new(line, tok, ParseErrorKind::MalformedBool)),
    }
}

#[derive(Default)]
struct Header {
    group: Option<String>,
    order: Option<BigUint>,
    primes: Option<Vec<u64>>,
    trivial: Option<String>,
    complete: Option<bool>,
    sylow: BTreeMap<(u64, u64), (bool, usize)>,
}

impl Header {
    fn finish(self, line: usize) -> Result<Validated, ParseError> {
        let missing = |d| ParseError::new(line, "", ParseErrorKind::MissingDirective(d));
        let group_name = self.group.ok_or_else(|| missing("group"))?;
        let order = self.order.ok_or_else(|| missing("order"))?;
        let primes = self.primes.ok_or_else(|| missing("primes"))?;
        let trivial_id = self.trivial.ok_or_else(|| missing("trivial"))?;
        let complete = self.complete.ok_or_else(|| missing("complete"))?;
        for &p in &primes {
            if !(&order % p).is_zero() {
                return Err(ParseError::new(
                    line,
                    &p.to_string(),
                    ParseErrorKind::PrimeDoesNotDivideOrder,
                ));
            }
        }
        let mut sylow_commute = BTreeMap::new();
        for (&(p, q), &(v, at)) in &self.sylow {
            for x in [p, q] {
                if !primes.contains(&x) {
                    return Err(ParseError::new(
                        at,
                        &x.to_string(),
                        ParseErrorKind::UnknownPrimeFlag,
                    ));
                }
            }
            sylow_commute.insert((p, q), v);
        }
        Ok(Validated {
            group_name,
            order,
            primes,
            trivial_id,
            complete,
            sylow_commute,
        })
    }
}

struct Validated {
    group_name: String,
    order: BigUint,
    primes: Vec<u64>,
    trivial_id: String,
    complete: bool,
    sylow_commute: BTreeMap<(u64, u64), bool>,
}

/// Parses and fully validates a summary. Raw bytes must be UTF-8.
pub fn parse_table_bytes(bytes: &[u8]) -> Result<CharacterTableSummary, ParseError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| ParseError::new(0, "", ParseErrorKind::InvalidUtf8))?;
    parse_table(text)
}

pub fn parse_table(text: &str) -> Result<CharacterTableSummary, ParseError> {
    let mut header = Header::default();
    let mut validated: Option<Validated> = None;
    let mut rows: Vec<CharacterRow> = Vec::new();
    let mut ids = BTreeSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&directive, args)) = toks.split_first() else {
            continue;
        };

        if directive == "char" {
            if validated.is_none() {
                validated = Some(std::mem::take(&mut header).finish(line)?);
            }
            let v = validated.as_ref().expect("header validated");
            rows.push(parse_row(line, args, &v.primes, &mut ids)?);
            continue;
        }
        if validated.is_some() {
            return Err(ParseError::new(
                line,
                directive,
                ParseErrorKind::HeaderAfterRows,
            ));
        }
        let dup = || {
            ParseError::new(
                line,
                directive,
                ParseErrorKind::DuplicateDirective(directive.into()),
            )
        };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(ParseError::new(line, directive, ParseErrorKind::WrongArity))
            }
        };
        match directive {
            "group" => {
                arity(1)?;
                if header.group.replace(args[0].to_string()).is_some() {
                    return Err(dup());
                }
            }
            "order" => {
                arity(1)?;
                let order = parse_uint(line, args[0])?;
                if order.is_zero() {
                    return Err(ParseError::new(
                        line,
                        args[0],
                        ParseErrorKind::MalformedInteger,
                    ));
                }
                if header.order.replace(order).is_some() {
                    return Err(dup());
                }
            }
            "primes" => {
                let mut primes = Vec::new();
                for tok in args {
                    let p = parse_prime(line, tok)?;
                    if primes.contains(&p) {
                        return Err(ParseError::new(line, tok, ParseErrorKind::DuplicatePrime));
                    }
                    primes.push(p);
                }
                if header.primes.replace(primes).is_some() {
                    return Err(dup());
                }
            }
            "trivial" => {
                arity(1)?;
                if header.trivial.replace(args[0].to_string()).is_some() {
                    return Err(dup());
                }
            }
            "complete" => {
                arity(1)?;
                if header
                    .complete
                    .replace(parse_bool(line, args[0])?)
                    .is_some()
                {
                    return Err(dup());
                }
            }
            "sylow_commute" => {
                arity(3)?;
                let p = parse_prime(line, args[0])?;
                let q = parse_prime(line, args[1])?;
                if p == q {
                    return Err(ParseError::new(
                        line,
                        args[1],
                        ParseErrorKind::DuplicatePrime,
                    ));
                }
                let v = parse_bool(line, args[2])?;
                if header
                    .sylow
                    .insert((p.min(q), p.max(q)), (v, line))
                    .is_some()
                {
                    return Err(dup());
                }
            }
            _ => {
                return Err(ParseError::new(
                    line,
                    directive,
                    ParseErrorKind::UnknownDirective,
                ))
            }
        }
    }

    let end = last_line + 1;
    let v = match validated {
        Some(v) => v,
        None => header.finish(end)?,
    };
    let invariant = |msg: String| ParseError::new(end, "", ParseErrorKind::Invariant(msg));
    let trivial = rows
        .iter()
        .find(|r| r.id == v.trivial_id)
        .ok_or_else(|| invariant(format!("trivial character {} has no row", v.trivial_id)))?;
    if !trivial.degree.is_one() {
        return Err(invariant(format!(
            "trivial character has degree {}",
            trivial.degree
        )));
    }
    if let Some((p, _)) = trivial.principal_flags.iter().find(|(_, &f)| !f) {
        return Err(invariant(format!(
            "trivial character not flagged principal at {p}"
        )));
    }
    if v.complete {
        let sum: BigUint = rows.iter().map(|r| &r.degree * &r.degree).sum();
        if sum != v.order {
            return Err(invariant(format!(
                "complete table but sum of squared degrees {sum} != order {}",
                v.order
            )));
        }
    }
    Ok(CharacterTableSummary {
        group_name: v.group_name,
        order: v.order,
        primes: v.primes,
        trivial_id: v.trivial_id,
        rows,
        sylow_commute: v.sylow_commute,
        complete: v.complete,
    })
}

fn parse_row(
    line: usize,
    args: &[&str],
    primes: &[u64],
    ids: &mut BTreeSet<String>,
) -> Result<CharacterRow, ParseError> {
    if args.len() != 2 + primes.len() {
        return Err(ParseError::new(line, "char", ParseErrorKind::WrongArity));
    }
    let id = args[0];
    if !ids.insert(id.to_string()) {
        return Err(ParseError::new(line, id, ParseErrorKind::DuplicateId));
    }
    let degree = parse_uint(line, args[1])?;
    if degree.is_zero() {
        return Err(ParseError::new(
            line,
            args[1],
            ParseErrorKind::MalformedInteger,
        ));
    }
    let mut flags = BTreeMap::new();
    for tok in &args[2..] {
        let (p, f) = tok
            .split_once(':')
            .ok_or_else(|| ParseError::new(line, tok, ParseErrorKind::MalformedFlag))?;
        let p: u64 = p
            .parse()
            .map_err(|_| ParseError::new(line, tok, ParseErrorKind::MalformedFlag))?;
        let f = match f {
            "0" => false,
            "1" => true,
            _ => return Err(ParseError::new(line, tok, ParseErrorKind::MalformedFlag)),
        };
        if !primes.contains(&p) {
            return Err(ParseError::new(line, tok, ParseErrorKind::UnknownPrimeFlag));
        }
        if flags.insert(p, f).is_some() {
            return Err(ParseError::new(
                line,
                tok,
                ParseErrorKind::DuplicatePrimeFlag,
            ));
        }
    }
    if let Some(&p) = primes.iter().find(|p| !flags.contains_key(p)) {
        return Err(ParseError::new(
            line,
            id,
            ParseErrorKind::MissingPrimeFlag(p),
        ));
    }
    Ok(CharacterRow {
        id: id.to_string(),
        degree,
        principal_flags: flags,
    })
}

impl CharacterTableSummary {
    /// Renders in the file format; [`parse_table`] reads it back unchanged.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group {}", self.group_name);
        let _ = writeln!(out, "order {}", self.order);
        out.push_str("primes");
        for p in &self.primes {
            let _ = write!(out, " {p}");
        }
        out.push('\n');
        let _ = writeln!(out, "trivial {}", self.trivial_id);
        let _ = writeln!(out, "complete {}", self.complete);
        for (&(p, q), v) in &self.sylow_commute {
            let _ = writeln!(out, "sylow_commute {p} {q} {v}");
        }
        for row in &self.rows {
            let _ = write!(out, "char {} {}", row.id, row.degree);
            for p in &self.primes {
                let _ = write!(out, " {p}:{}", u8::from(row.principal_flags[p]));
            }
            out.push('\n');
        }
        out
    }

    /// Ids of characters in the principal p-block with degree prime to `p`.
    pub fn p_prime_principal(&self, p: u64) -> BTreeSet<&str> {
        self.rows
            .iter()
            .filter(|r| r.principal_flags.get(&p).copied().unwrap_or(false))
            .filter(|r| !(&r.degree % p).is_zero())
            .map(|r| r.id.as_str())
            .collect()
    }

    pub fn sylow_fact(&self, p: u64, q: u64) -> Option<bool> {
        self.sylow_commute.get(&(p.min(q), p.max(q))).copied()
    }

    fn degree_of(&self, id: &str) -> &BigUint {
        &self
            .rows
            .iter()
            .find(|r| r.id == id)
            .expect("id from this table")
            .degree
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conjecture {
    /// `Irr_{p'}(B_p) ∩ Irr_{q'}(B_q) = {1}` implies commuting Sylows.
    A,
    /// `Irr_{p'}(B_p) = Irr_{q'}(B_q)` implies `p = q`.
    B,
    /// No cross-divisibility iff commuting Sylows.
    C,
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::A => "A",
            Conjecture::B => "B",
            Conjecture::C => "C",
        })
    }
}

impl std::str::FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(Conjecture::A),
            "b" | "B" => Ok(Conjecture::B),
            "c" | "C" => Ok(Conjecture::C),
            _ => Err(format!("unknown conjecture {s:?} (expected a, b or c)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Consistent,
    HypothesisHolds,
    Violation,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::HypothesisHolds => "hypothesis_holds",
            Verdict::Violation => "violation",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditFinding {
    pub conjecture: Conjecture,
    pub p: u64,
    pub q: u64,
    pub verdict: Verdict,
    pub detail: String,
}

impl fmt::Display for AuditFinding {
    /// `finding <conjecture> <p> <q> <verdict> "<detail>"`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "finding {} {} {} {} {:?}",
            self.conjecture, self.p, self.q, self.verdict, self.detail
        )
    }
}

fn commute_text(fact: Option<bool>) -> &'static str {
    match fact {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

/// One finding per unordered pair of header primes, smaller prime first.
pub fn audit(summary: &CharacterTableSummary, which: Conjecture) -> Vec<AuditFinding> {
    let mut primes = summary.primes.clone();
    primes.sort_unstable();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            out.push(audit_pair(summary, which, p, q));
        }
    }
    out
}

fn audit_pair(summary: &CharacterTableSummary, which: Conjecture, p: u64, q: u64) -> AuditFinding {
    let s_p = summary.p_prime_principal(p);
    let s_q = summary.p_prime_principal(q);
    let fact = summary.sylow_fact(p, q);
    let sizes = format!("|S_{p}|={} |S_{q}|={}", s_p.len(), s_q.len());
    let (verdict, detail) = match which {
        Conjecture::A => {
            let common: BTreeSet<_> = s_p.intersection(&s_q).copied().collect();
            let hypothesis = common.len() == 1 && common.contains(summary.trivial_id.as_str());
            let verdict = match (hypothesis, fact) {
                (false, _) => Verdict::Consistent,
                (true, Some(true)) => Verdict::HypothesisHolds,
                (true, Some(false)) => Verdict::Violation,
                (true, None) => Verdict::Indeterminate,
            };
            (
                verdict,
                format!(
                    "hypothesis={hypothesis} intersection={} {sizes} sylow_commute={}",
                    common.len(),
                    commute_text(fact)
                ),
            )
        }
        Conjecture::B => {
            let equal = s_p == s_q;
            let verdict = if equal {
                Verdict::Violation
            } else {
                Verdict::Consistent
            };
            (verdict, format!("sets_equal={equal} {sizes}"))
        }
        Conjecture::C => {
            let cross_p = s_p.iter().find(|id| (summary.degree_of(id) % q).is_zero());
            let cross_q = s_q.iter().find(|id| (summary.degree_of(id) % p).is_zero());
            let condition = cross_p.is_none() && cross_q.is_none();
            let verdict = match fact {
                Some(f) if f == condition => Verdict::Consistent,
                Some(_) => Verdict::Violation,
                None => Verdict::Indeterminate,
            };
            let example = match (cross_p, cross_q) {
                (Some(id), _) => format!(" example={id}@{p}"),
                (None, Some(id)) => format!(" example={id}@{q}"),
                (None, None) => String::new(),
            };
            (
                verdict,
                format!(
                    "condition={condition} {sizes} sylow_commute={}{example}",
                    commute_text(fact)
                ),
            )
        }
    };
    AuditFinding {
        conjecture: which,
        p,
        q,
        verdict,
        detail,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("n must be at least 1")]
    ZeroN,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} listed twice")]
    DuplicatePrime(u64),
    #[error("prime {p} exceeds n = {n}")]
    PrimeExceedsN { p: u64, n: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Summary of `S_n` restricted to the given primes. Sylow subgroups for
/// distinct primes dividing `|S_n|` never commute elementwise, so every
/// pair gets `sylow_commute p q false`.
pub fn sn_table_summary(n: u64, primes: &[u64]) -> Result<CharacterTableSummary, TableError> {
    if n == 0 {
        return Err(TableError::ZeroN);
    }
    for (i, &p) in primes.iter().enumerate() {
        if !is_prime(p) {
            return Err(TableError::NotPrime(p));
        }
        if primes[..i].contains(&p) {
            return Err(TableError::DuplicatePrime(p));
        }
        if p > n {
            return Err(TableError::PrimeExceedsN { p, n });
        }
    }
    let mut rows = Vec::new();
    for lam in partitions_of(n as usize) {
        rows.push(CharacterRow {
            id: lam.to_string(),
            degree: degree(&lam)?.to_biguint(),
            principal_flags: primes
                .iter()
                .map(|&p| (p, principal_block_contains(&lam, p)))
                .collect(),
        });
    }
    let mut sylow_commute = BTreeMap::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            sylow_commute.insert((p.min(q), p.max(q)), false);
        }
    }
    Ok(CharacterTableSummary {
        group_name: format!("S{n}"),
        order: FactoredNatural::factorial(n).to_biguint(),
        primes: primes.to_vec(),
        trivial_id: crate::partition::Partition::row(n as usize).to_string(),
        rows,
        sylow_commute,
        complete: true,
    })
}

pub fn export_sn_table(n: u64, primes: &[u64]) -> Result<String, TableError> {
    Ok(sn_table_summary(n, primes)?.render())
}
