//! Fundamental GL-rack presentations read off a front code.
//!
//! The full presentation has one generator per arc, where arcs are cut at
//! cusps and under-passes. The reduced presentation cuts only at
//! under-passes and records the cusps met along each arc as `u^p d^q`.

use std::fmt;

use thiserror::Error;

use crate::frontcode::{CuspDir, Event, FrontCode, FrontError, Role, Sign};
use crate::glrack::{CuspMap, FiniteGlRack};
use crate::text::{parse_num, tokens, LineCursor, ParseError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error("the code has no crossings; use the full presentation")]
    NoCrossings,
    #[error("relation {relation}: generator {index} out of range (gens {gens})")]
    IndexOutOfRange { relation: usize, index: usize, gens: usize },
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("generator {0} is unassigned")]
    Unassigned(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

// ---------------------------------------------------------------------------
// words

/// A term of the free GL-rack on generators `0..`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word {
    Gen(usize),
    Op(Box<Word>, Box<Word>, Sign),
    U(Box<Word>),
    D(Box<Word>),
}

impl Word {
    pub fn gen(i: usize) -> Word {
        Word::Gen(i)
    }

    pub fn star(a: Word, b: Word) -> Word {
        Word::Op(Box::new(a), Box::new(b), Sign::Pos)
    }

    pub fn star_inv(a: Word, b: Word) -> Word {
        Word::Op(Box::new(a), Box::new(b), Sign::Neg)
    }

    pub fn op(a: Word, b: Word, sign: Sign) -> Word {
        Word::Op(Box::new(a), Box::new(b), sign)
    }

    pub fn u(w: Word) -> Word {
        Word::U(Box::new(w))
    }

    pub fn d(w: Word) -> Word {
        Word::D(Box::new(w))
    }

    /// `u^p d^q (w)`.
    pub fn ud_power(w: Word, p: u32, q: u32) -> Word {
        let mut out = w;
        for _ in 0..q {
            out = Word::d(out);
        }
        for _ in 0..p {
            out = Word::u(out);
        }
        out
    }

    /// Largest generator index occurring in the word.
    pub fn max_gen(&self) -> usize {
        match self {
            Word::Gen(i) => *i,
            Word::Op(a, b, _) => a.max_gen().max(b.max_gen()),
            Word::U(w) | Word::D(w) => w.max_gen(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(i) => write!(f, "g{i}"),
            Word::Op(a, b, Sign::Pos) => write!(f, "({a} * {b})"),
            Word::Op(a, b, Sign::Neg) => write!(f, "({a} *^-1 {b})"),
            Word::U(w) => write!(f, "u({w})"),
            Word::D(w) => write!(f, "d({w})"),
        }
    }
}

/// Evaluates `w` in `x` with generator `i` sent to `assignment[i]`.
pub fn eval_word(w: &Word, x: &FiniteGlRack, assignment: &[usize]) -> Result<usize, PresentationError> {
    Ok(match w {
        Word::Gen(i) => *assignment.get(*i).ok_or(PresentationError::Unassigned(*i))?,
        Word::Op(a, b, s) => {
            let a = eval_word(a, x, assignment)?;
            let b = eval_word(b, x, assignment)?;
            x.op_signed(a, b, *s)
        }
        Word::U(a) => x.u()[eval_word(a, x, assignment)?],
        Word::D(a) => x.d()[eval_word(a, x, assignment)?],
    })
}

// ---------------------------------------------------------------------------
// relations

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FullRelation {
    /// `kind(from) = to`
    Cusp { kind: CuspMap, from: usize, to: usize },
    /// `under_in *^sign over = under_out`
    Cross { sign: Sign, under_in: usize, over: usize, under_out: usize },
}

impl FullRelation {
    pub fn input(&self) -> usize {
        match *self {
            FullRelation::Cusp { from, .. } => from,
            FullRelation::Cross { under_in, .. } => under_in,
        }
    }

    pub fn output(&self) -> usize {
        match *self {
            FullRelation::Cusp { to, .. } => to,
            FullRelation::Cross { under_out, .. } => under_out,
        }
    }

    /// Left and right sides as words.
    pub fn words(&self) -> (Word, Word) {
        match *self {
            FullRelation::Cusp { kind: CuspMap::U, from, to } => (Word::u(Word::gen(from)), Word::gen(to)),
            FullRelation::Cusp { kind: CuspMap::D, from, to } => (Word::d(Word::gen(from)), Word::gen(to)),
            FullRelation::Cross { sign, under_in, over, under_out } => {
                (Word::op(Word::gen(under_in), Word::gen(over), sign), Word::gen(under_out))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FullPresentation {
    pub gens: usize,
    pub relations: Vec<FullRelation>,
}

/// Relation `i`: `u^p d^q(x_i) *^sign x_over = x_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReducedRelation {
    pub p: u32,
    pub q: u32,
    pub sign: Sign,
    pub over: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedPresentation {
    pub gens: usize,
    pub relations: Vec<ReducedRelation>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PresentationSummary {
    pub omega: i64,
    pub p: u64,
    pub q: u64,
    pub gens: usize,
    pub cusps: u64,
}

impl PresentationSummary {
    /// `tb = ω − (p+q)/2`; `None` when `p + q` is odd.
    pub fn tb(&self) -> Option<i64> {
        let c = (self.p + self.q) as i64;
        (c % 2 == 0).then(|| self.omega - c / 2)
    }

    /// `rot = (q − p)/2`; `None` when `p + q` is odd.
    pub fn rot(&self) -> Option<i64> {
        let diff = self.q as i64 - self.p as i64;
        (diff % 2 == 0).then(|| diff / 2)
    }

    pub fn to_text(&self) -> String {
        format!(
            "omega {}\np {}\nq {}\ngens {}\ncusps {}\n",
            self.omega, self.p, self.q, self.gens, self.cusps
        )
    }

    pub fn parse(text: &str) -> Result<PresentationSummary, PresentationError> {
        let mut lines = LineCursor::new(text);
        let mut field = |kw: &str| -> Result<(usize, usize, String), ParseError> {
            let (ln, l) = lines.expect_line(kw)?;
            let toks: Vec<_> = tokens(l).collect();
            if toks.len() != 2 {
                return Err(ParseError::new(ln, 1, format!("expected `{kw} <value>`")));
            }
            Ok((ln, toks[1].0, toks[1].1.to_string()))
        };
        let (ln, c, t) = field("omega")?;
        let omega = parse_num(ln, c, &t)?;
        let (ln, c, t) = field("p")?;
        let p = parse_num(ln, c, &t)?;
        let (ln, c, t) = field("q")?;
        let q = parse_num(ln, c, &t)?;
        let (ln, c, t) = field("gens")?;
        let gens = parse_num(ln, c, &t)?;
        let (ln, c, t) = field("cusps")?;
        let cusps: u64 = parse_num(ln, c, &t)?;
        lines.expect_end()?;
        if cusps != p + q {
            return Err(PresentationError::Malformed(format!("cusps {cusps} != p + q = {}", p + q)));
        }
        Ok(PresentationSummary { omega, p, q, gens, cusps })
    }
}

impl FullPresentation {
    /// Index ranges, and that relations form a single closed cycle.
    pub fn check(&self) -> Result<(), PresentationError> {
        let m = self.gens;
        if self.relations.len() != m {
            return Err(PresentationError::Malformed(format!(
                "{} relations for {m} generators",
                self.relations.len()
            )));
        }
        let mut next = vec![usize::MAX; m];
        let mut produced = vec![false; m];
        for (r, rel) in self.relations.iter().enumerate() {
            let mut idx = vec![rel.input(), rel.output()];
            if let FullRelation::Cross { over, .. } = rel {
                idx.push(*over);
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= m) {
                return Err(PresentationError::IndexOutOfRange { relation: r, index: bad, gens: m });
            }
            if next[rel.input()] != usize::MAX {
                return Err(PresentationError::Malformed(format!("generator {} is an input twice", rel.input())));
            }
            if produced[rel.output()] {
                return Err(PresentationError::Malformed(format!("generator {} is an output twice", rel.output())));
            }
            next[rel.input()] = rel.output();
            produced[rel.output()] = true;
        }
        single_cycle(&next)
    }

    pub fn has_crossings(&self) -> bool {
        self.relations.iter().any(|r| matches!(r, FullRelation::Cross { .. }))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens {}\n", self.gens);
        for r in &self.relations {
            match *r {
                FullRelation::Cusp { kind, from, to } => s += &format!("cusp {kind} {from} {to}\n"),
                FullRelation::Cross { sign, under_in, over, under_out } => {
                    s += &format!("cross {} {under_in} {over} {under_out}\n", sign.as_char())
                }
            }
        }
        s
    }
}

fn single_cycle(next: &[usize]) -> Result<(), PresentationError> {
    let m = next.len();
    if m == 0 {
        return Ok(());
    }
    let mut x = 0;
    for step in 1..=m {
        x = next[x];
        if x == 0 {
            return if step == m {
                Ok(())
            } else {
                Err(PresentationError::Malformed("relations form more than one cycle".into()))
            };
        }
    }
    Err(PresentationError::Malformed("relations do not close up".into()))
}

impl ReducedRelation {
    pub fn words(&self, i: usize, gens: usize) -> (Word, Word) {
        let lhs = Word::op(Word::ud_power(Word::gen(i), self.p, self.q), Word::gen(self.over), self.sign);
        (lhs, Word::gen((i + 1) % gens))
    }
}

fn ud_prefix(p: u32, q: u32) -> String {
    let pow = |c: char, e: u32| match e {
        0 => String::new(),
        1 => c.to_string(),
        e => format!("{c}^{e}"),
    };
    format!("{}{}", pow('u', p), pow('d', q))
}

impl ReducedPresentation {
    pub fn check(&self) -> Result<(), PresentationError> {
        if self.relations.len() != self.gens {
            return Err(PresentationError::Malformed(format!(
                "{} relations for {} generators",
                self.relations.len(),
                self.gens
            )));
        }
        for (r, rel) in self.relations.iter().enumerate() {
            if rel.over >= self.gens {
                return Err(PresentationError::IndexOutOfRange { relation: r, index: rel.over, gens: self.gens });
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens {}\n", self.gens);
        for (i, r) in self.relations.iter().enumerate() {
            s += &format!("xr {i} {} {} {} {}\n", r.p, r.q, r.sign.as_char(), r.over);
        }
        s
    }

    /// One line per relation, generators 1-based, e.g. `ud(x1) *^-1 x4 = x2`.
    pub fn pretty(&self, letter: char) -> Vec<String> {
        let m = self.gens;
        self.relations
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let pre = ud_prefix(r.p, r.q);
                let input = if pre.is_empty() {
                    format!("{letter}{}", i + 1)
                } else {
                    format!("{pre}({letter}{})", i + 1)
                };
                let op = match r.sign {
                    Sign::Pos => "*",
                    Sign::Neg => "*^-1",
                };
                format!("{input} {op} {letter}{} = {letter}{}", r.over + 1, (i + 1) % m + 1)
            })
            .collect()
    }

    /// Relabels generators cyclically so that old generator `start` becomes 0.
    pub fn rotated(&self, start: usize) -> ReducedPresentation {
        let m = self.gens;
        if m == 0 {
            return self.clone();
        }
        let relations = (0..m)
            .map(|i| {
                let r = self.relations[(i + start) % m];
                ReducedRelation { over: (r.over + m - start % m) % m, ..r }
            })
            .collect();
        ReducedPresentation { gens: m, relations }
    }
}

/// Either kind of presentation, as read from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Full(FullPresentation),
    Reduced(ReducedPresentation),
}

impl Presentation {
    pub fn gens(&self) -> usize {
        match self {
            Presentation::Full(f) => f.gens,
            Presentation::Reduced(r) => r.gens,
        }
    }

    pub fn check(&self) -> Result<(), PresentationError> {
        match self {
            Presentation::Full(f) => f.check(),
            Presentation::Reduced(r) => r.check(),
        }
    }

    /// Every relation as a pair of words.
    pub fn relation_words(&self) -> Vec<(Word, Word)> {
        match self {
            Presentation::Full(f) => f.relations.iter().map(|r| r.words()).collect(),
            Presentation::Reduced(r) => {
                r.relations.iter().enumerate().map(|(i, rel)| rel.words(i, r.gens)).collect()
            }
        }
    }

    pub fn summary(&self) -> Result<PresentationSummary, PresentationError> {
        match self {
            Presentation::Full(f) => summarize_full(f),
            Presentation::Reduced(r) => {
                r.check()?;
                Ok(summarize(r))
            }
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Presentation::Full(f) => f.to_text(),
            Presentation::Reduced(r) => r.to_text(),
        }
    }

    /// Parses either format; the relation keywords decide which.
    pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
        let mut lines = LineCursor::new(text);
        let (ln, l) = lines.expect_line("gens")?;
        let gens: usize = crate::text::numbers_after(ln, l, Some(1))?[0];
        let mut full = Vec::new();
        let mut reduced = Vec::new();
        while let Some((ln, l)) = lines.next_line() {
            let toks: Vec<(usize, &str)> = tokens(l).collect();
            let (kcol, kw) = toks[0];
            let want = match kw {
                "cusp" | "cross" if !reduced.is_empty() => None,
                "xr" if !full.is_empty() => None,
                "cusp" => Some(4),
                "cross" => Some(5),
                "xr" => Some(6),
                _ => return Err(ParseError::new(ln, kcol, format!("unknown relation `{kw}`")).into()),
            };
            let Some(want) = want else {
                return Err(ParseError::new(ln, kcol, "full and reduced relations cannot be mixed").into());
            };
            if toks.len() != want {
                let col = toks.last().map_or(1, |(c, t)| c + t.len());
                return Err(ParseError::new(ln, col, format!("`{kw}` needs {} fields", want - 1)).into());
            }
            let num = |k: usize| parse_num::<usize>(ln, toks[k].0, toks[k].1);
            let sign = |k: usize| {
                let t = toks[k].1;
                let mut cs = t.chars();
                match (cs.next().and_then(Sign::from_char), cs.next()) {
                    (Some(s), None) => Ok(s),
                    _ => Err(ParseError::new(ln, toks[k].0, format!("expected `+` or `-`, found `{t}`"))),
                }
            };
            match kw {
                "cusp" => {
                    let kind = match toks[1].1 {
                        "u" => CuspMap::U,
                        "d" => CuspMap::D,
                        t => return Err(ParseError::new(ln, toks[1].0, format!("expected `u` or `d`, found `{t}`")).into()),
                    };
                    full.push(FullRelation::Cusp { kind, from: num(2)?, to: num(3)? });
                }
                "cross" => full.push(FullRelation::Cross {
                    sign: sign(1)?,
                    under_in: num(2)?,
                    over: num(3)?,
                    under_out: num(4)?,
                }),
                _ => {
                    let i = num(1)?;
                    if i != reduced.len() {
                        return Err(ParseError::new(ln, toks[1].0, format!("expected relation index {}", reduced.len())).into());
                    }
                    reduced.push(ReducedRelation {
                        p: parse_num(ln, toks[2].0, toks[2].1)?,
                        q: parse_num(ln, toks[3].0, toks[3].1)?,
                        sign: sign(4)?,
                        over: num(5)?,
                    });
                }
            }
        }
        let pres = if full.is_empty() {
            Presentation::Reduced(ReducedPresentation { gens, relations: reduced })
        } else {
            Presentation::Full(FullPresentation { gens, relations: full })
        };
        pres.check()?;
        Ok(pres)
    }
}

impl From<FullPresentation> for Presentation {
    fn from(f: FullPresentation) -> Self {
        Presentation::Full(f)
    }
}

impl From<ReducedPresentation> for Presentation {
    fn from(r: ReducedPresentation) -> Self {
        Presentation::Reduced(r)
    }
}

// ---------------------------------------------------------------------------
// extraction

/// Index of the last separator at or before position `i`, cyclically.
fn owning_separator(seps: &[usize], i: usize) -> usize {
    match seps.partition_point(|&s| s <= i) {
        0 => seps.len() - 1,
        k => k - 1,
    }
}

pub fn extract_full(code: &FrontCode) -> Result<FullPresentation, PresentationError> {
    code.ensure_valid()?;
    let ev = &code.events;
    let seps: Vec<usize> = (0..ev.len()).filter(|&i| ev[i].is_cusp() || ev[i].is_under()).collect();
    let m = seps.len();
    let relations = seps
        .iter()
        .enumerate()
        .map(|(j, &pos)| {
            let from = (j + m - 1) % m;
            match ev[pos] {
                Event::Cusp(CuspDir::Up) => FullRelation::Cusp { kind: CuspMap::U, from, to: j },
                Event::Cusp(CuspDir::Down) => FullRelation::Cusp { kind: CuspMap::D, from, to: j },
                Event::Pass { crossing, sign, .. } => {
                    let o = code.find_pass(crossing, Role::Over).expect("validated");
                    FullRelation::Cross { sign, under_in: from, over: owning_separator(&seps, o), under_out: j }
                }
            }
        })
        .collect();
    Ok(FullPresentation { gens: m, relations })
}

pub fn extract_reduced(code: &FrontCode) -> Result<ReducedPresentation, PresentationError> {
    code.ensure_valid()?;
    let ev = &code.events;
    let unders: Vec<usize> = (0..ev.len()).filter(|&i| ev[i].is_under()).collect();
    let m = unders.len();
    if m == 0 {
        return Err(PresentationError::NoCrossings);
    }
    let n = ev.len();
    let relations = (0..m)
        .map(|j| {
            let (start, end) = (unders[j], unders[(j + 1) % m]);
            let (mut p, mut q) = (0, 0);
            let mut i = (start + 1) % n;
            while i != end {
                match ev[i] {
                    Event::Cusp(CuspDir::Up) => p += 1,
                    Event::Cusp(CuspDir::Down) => q += 1,
                    _ => {}
                }
                i = (i + 1) % n;
            }
            let Event::Pass { crossing, sign, .. } = ev[end] else { unreachable!() };
            let o = code.find_pass(crossing, Role::Over).expect("validated");
            ReducedRelation { p, q, sign, over: owning_separator(&unders, o) }
        })
        .collect();
    Ok(ReducedPresentation { gens: m, relations })
}

/// Eliminates the generators produced by cusp relations.
///
/// Each such generator equals `u^a d^b` of an earlier crossing output; the
/// exponents move onto the next crossing relation, and as an over-argument
/// it is replaced by that output outright since `x * u(y) = x * y`.
pub fn reduce(fp: &FullPresentation) -> Result<ReducedPresentation, PresentationError> {
    fp.check()?;
    if !fp.has_crossings() {
        return Err(PresentationError::NoCrossings);
    }
    let m = fp.gens;
    let mut producer = vec![0; m];
    for (r, rel) in fp.relations.iter().enumerate() {
        producer[rel.output()] = r;
    }
    // (root crossing output, u count, d count) for each generator
    let root = |g: usize| -> (usize, u32, u32) {
        let (mut g, mut p, mut q) = (g, 0, 0);
        loop {
            match fp.relations[producer[g]] {
                FullRelation::Cross { .. } => return (g, p, q),
                FullRelation::Cusp { kind, from, .. } => {
                    match kind {
                        CuspMap::U => p += 1,
                        CuspMap::D => q += 1,
                    }
                    g = from;
                }
            }
        }
    };
    let kept: Vec<usize> = (0..m)
        .filter(|&g| matches!(fp.relations[producer[g]], FullRelation::Cross { .. }))
        .collect();
    let mut index = vec![usize::MAX; m];
    // kept generator -> (next kept generator, relation)
    let mut next = vec![None; m];
    for rel in &fp.relations {
        if let FullRelation::Cross { sign, under_in, over, under_out } = *rel {
            let (r, p, q) = root(under_in);
            next[r] = Some((under_out, ReducedRelation { p, q, sign, over: root(over).0 }));
        }
    }
    let mut order = Vec::with_capacity(kept.len());
    let mut g = kept[0];
    loop {
        index[g] = order.len();
        order.push(g);
        g = next[g].expect("every kept generator feeds a crossing").0;
        if g == kept[0] {
            break;
        }
    }
    if order.len() != kept.len() {
        return Err(PresentationError::Malformed("relations form more than one cycle".into()));
    }
    let relations = order
        .iter()
        .map(|&g| {
            let r = next[g].unwrap().1;
            ReducedRelation { over: index[r.over], ..r }
        })
        .collect();
    Ok(ReducedPresentation { gens: kept.len(), relations })
}

pub fn summarize(rp: &ReducedPresentation) -> PresentationSummary {
    let mut s = PresentationSummary { gens: rp.gens, ..Default::default() };
    for r in &rp.relations {
        s.omega += r.sign.value();
        s.p += r.p as u64;
        s.q += r.q as u64;
    }
    s.cusps = s.p + s.q;
    s
}

/// Summary of a full presentation. Without crossings ω is 0 and the cusp
/// counts are read directly from the cusp relations.
pub fn summarize_full(fp: &FullPresentation) -> Result<PresentationSummary, PresentationError> {
    if fp.has_crossings() {
        return Ok(summarize(&reduce(fp)?));
    }
    fp.check()?;
    let mut s = PresentationSummary::default();
    for r in &fp.relations {
        if let FullRelation::Cusp { kind, .. } = r {
            match kind {
                CuspMap::U => s.p += 1,
                CuspMap::D => s.q += 1,
            }
        }
    }
    s.cusps = s.p + s.q;
    Ok(s)
}

/// Summary straight from a code, through whichever presentation applies.
pub fn summarize_code(code: &FrontCode) -> Result<PresentationSummary, PresentationError> {
    if code.crossing_count() == 0 {
        summarize_full(&extract_full(code)?)
    } else {
        Ok(summarize(&extract_reduced(code)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrack::{mk_permutation_family, mk_trivial};

    fn code(s: &str) -> FrontCode {
        FrontCode::parse(&format!("knot t\ncode {s}\n")).unwrap()
    }

    #[test]
    fn unknot_full() {
        let fp = extract_full(&code("cd cu")).unwrap();
        assert_eq!(fp.gens, 2);
        assert_eq!(fp.relations, vec![
            FullRelation::Cusp { kind: CuspMap::D, from: 1, to: 0 },
            FullRelation::Cusp { kind: CuspMap::U, from: 0, to: 1 },
        ]);
        assert_eq!(extract_reduced(&code("cd cu")), Err(PresentationError::NoCrossings));
        assert_eq!(reduce(&fp), Err(PresentationError::NoCrossings));
        let s = summarize_full(&fp).unwrap();
        assert_eq!((s.omega, s.p, s.q, s.tb(), s.rot()), (0, 1, 1, Some(-1), Some(0)));
    }

    #[test]
    fn zero_cusps_rejected() {
        assert!(matches!(extract_full(&code("x1o+ x1u+")), Err(PresentationError::Front(_))));
    }

    #[test]
    fn reduce_matches_reduced_extraction() {
        let c = code("x1o+ x2o+ cd x1u+ x3o+ cu x2u+ x3u+ cd cu");
        let full = extract_full(&c).unwrap();
        assert_eq!(full.relations.len(), c.cusp_count() + c.crossing_count());
        assert_eq!(reduce(&full).unwrap(), extract_reduced(&c).unwrap());
    }

    #[test]
    fn reduced_text_and_pretty() {
        let rp = ReducedPresentation {
            gens: 3,
            relations: vec![
                ReducedRelation { p: 2, q: 1, sign: Sign::Pos, over: 2 },
                ReducedRelation { p: 0, q: 0, sign: Sign::Neg, over: 0 },
                ReducedRelation { p: 1, q: 2, sign: Sign::Pos, over: 1 },
            ],
        };
        assert_eq!(rp.pretty('x'), vec![
            "u^2d(x1) * x3 = x2",
            "x2 *^-1 x1 = x3",
            "ud^2(x3) * x2 = x1",
        ]);
        let back = Presentation::parse(&rp.to_text()).unwrap();
        assert_eq!(back, Presentation::Reduced(rp.clone()));
        let s = summarize(&rp);
        assert_eq!((s.omega, s.p, s.q, s.gens, s.cusps), (1, 3, 3, 3, 6));
        assert_eq!(PresentationSummary::parse(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn parse_errors() {
        let e = Presentation::parse("gens 2\nxr 0 0 0 + 1\nxr 1 0 0 * 0\n").unwrap_err();
        assert_eq!(e, PresentationError::Parse(ParseError::new(3, 10, "expected `+` or `-`, found `*`")));
        assert!(matches!(
            Presentation::parse("gens 1\nxr 0 0 0 + 3\n"),
            Err(PresentationError::IndexOutOfRange { relation: 0, index: 3, gens: 1 })
        ));
        assert!(matches!(
            Presentation::parse("gens 2\ncusp u 0 1\nxr 0 0 0 + 0\n"),
            Err(PresentationError::Parse(_))
        ));
        // two separate loops
        assert!(matches!(
            Presentation::parse("gens 2\ncusp u 0 0\ncusp d 1 1\n"),
            Err(PresentationError::Malformed(_))
        ));
    }

    #[test]
    fn empty_summary() {
        let rp = ReducedPresentation { gens: 0, relations: vec![] };
        assert_eq!(summarize(&rp), PresentationSummary::default());
    }

    #[test]
    fn word_relations_hold() {
        let x = mk_permutation_family(5, 2, -1).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let asg = [a, b];
                let g = || Word::gen(0);
                let h = || Word::gen(1);
                let ev = |w: &Word| eval_word(w, &x, &asg).unwrap();
                assert_eq!(ev(&Word::u(Word::d(Word::star(g(), g())))), a);
                assert_eq!(ev(&Word::star_inv(Word::star(g(), h()), h())), a);
                assert_eq!(ev(&Word::star(g(), Word::u(h()))), ev(&Word::star(g(), h())));
            }
        }
        assert_eq!(eval_word(&Word::gen(3), &mk_trivial(2), &[0, 1]), Err(PresentationError::Unassigned(3)));
    }

    #[test]
    fn rotated_relabels() {
        let c = code("x1o+ x2o+ cd x1u+ x3o+ cu x2u+ x3u+ cd cu");
        let rp = extract_reduced(&c).unwrap();
        assert_eq!(rp.rotated(0), rp);
        assert_eq!(rp.rotated(1).rotated(2), rp);
    }
}
