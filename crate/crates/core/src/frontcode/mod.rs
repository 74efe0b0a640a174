//! Oriented Legendrian front diagrams as cyclic event codes.
//!
//! A [`FrontCode`] records, in traversal order, every crossing pass and
//! every cusp met while walking once around the knot. Crossing signs are
//! input annotations (right-handed = `+`), cusps are classified by whether
//! the traversal moves up or down through them.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::text::{tokens, LineCursor, ParseError};

mod moves;

pub use moves::{apply_move, move_instances, Direction, MoveKind, MoveSpec};

/// Sign of a crossing, also the exponent of `*` in the crossing relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Pos),
            '-' => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn opposite(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

/// Direction of travel through a cusp.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CuspDir {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    Pass { crossing: u32, role: Role, sign: Sign },
    Cusp(CuspDir),
}

impl Event {
    pub fn pass(crossing: u32, role: Role, sign: Sign) -> Event {
        Event::Pass { crossing, role, sign }
    }

    pub fn is_cusp(&self) -> bool {
        matches!(self, Event::Cusp(_))
    }

    pub fn is_under(&self) -> bool {
        matches!(self, Event::Pass { role: Role::Under, .. })
    }

    fn parse(tok: &str) -> Option<Event> {
        match tok {
            "cu" => return Some(Event::Cusp(CuspDir::Up)),
            "cd" => return Some(Event::Cusp(CuspDir::Down)),
            _ => {}
        }
        let body = tok.strip_prefix('x')?;
        let mut chars = body.chars();
        let sign = Sign::from_char(chars.next_back()?)?;
        let role = match chars.next_back()? {
            'o' => Role::Over,
            'u' => Role::Under,
            _ => return None,
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let crossing = digits.parse().ok()?;
        Some(Event::Pass { crossing, role, sign })
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Event::Cusp(CuspDir::Up) => f.write_str("cu"),
            Event::Cusp(CuspDir::Down) => f.write_str("cd"),
            Event::Pass { crossing, role, sign } => {
                let r = if role == Role::Over { 'o' } else { 'u' };
                write!(f, "x{crossing}{r}{}", sign.as_char())
            }
        }
    }
}

/// A violated front-code invariant, with the offending event index where
/// one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    ZeroCrossingId { index: usize },
    DuplicatePass { crossing: u32, role: Role, index: usize },
    MissingPass { crossing: u32, role: Role, index: usize },
    SignMismatch { crossing: u32, index: usize },
    OddCusps { count: usize },
    TooFewCusps { count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let role = |r: &Role| if *r == Role::Over { "over" } else { "under" };
        match self {
            Violation::Empty => write!(f, "empty: code has no events"),
            Violation::ZeroCrossingId { index } => {
                write!(f, "zero-crossing-id at {index}: crossing ids start at 1")
            }
            Violation::DuplicatePass { crossing, role: r, index } => {
                write!(f, "duplicate-pass at {index}: crossing {crossing} has a second {} pass", role(r))
            }
            Violation::MissingPass { crossing, role: r, index } => {
                write!(f, "missing-pass at {index}: crossing {crossing} has no {} pass", role(r))
            }
            Violation::SignMismatch { crossing, index } => {
                write!(f, "sign-mismatch at {index}: passes of crossing {crossing} disagree on sign")
            }
            Violation::OddCusps { count } => write!(f, "odd-cusps: {count} cusps"),
            Violation::TooFewCusps { count } => write!(f, "too-few-cusps: {count} cusps, need at least 2"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrontError {
    #[error("invalid front code: {}", render_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("site {site} out of range for code of length {len}")]
    SiteOutOfRange { site: usize, len: usize },
    #[error("no match at site: expected {expected}")]
    NoMatch { expected: String },
    #[error("bad move site spec `{0}`")]
    BadSite(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn render_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontCode {
    pub name: String,
    pub events: Vec<Event>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalInvariants {
    pub writhe: i64,
    pub up_cusps: usize,
    pub down_cusps: usize,
    pub tb: i64,
    pub rot: i64,
}

impl FrontCode {
    pub fn new(name: impl Into<String>, events: Vec<Event>) -> Self {
        FrontCode { name: name.into(), events }
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn cusp_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_cusp()).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_under()).count()
    }

    /// Crossing ids in ascending order.
    pub fn crossing_ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self
            .events
            .iter()
            .filter_map(|e| match e {
                Event::Pass { crossing, .. } => Some(*crossing),
                _ => None,
            })
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub(crate) fn next_crossing_id(&self) -> u32 {
        self.crossing_ids().last().copied().unwrap_or(0) + 1
    }

    /// Position of the given pass, if present.
    pub fn find_pass(&self, crossing: u32, role: Role) -> Option<usize> {
        self.events.iter().position(|e| {
            matches!(e, Event::Pass { crossing: c, role: r, .. } if *c == crossing && *r == role)
        })
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(self)
    }

    pub fn ensure_valid(&self) -> Result<(), FrontError> {
        let v = validate(self);
        if v.is_empty() {
            Ok(())
        } else {
            Err(FrontError::Invalid(v))
        }
    }

    pub fn classical_invariants(&self) -> Result<ClassicalInvariants, FrontError> {
        classical_invariants(self)
    }

    /// Cyclic rotation so that the event at `start` comes first.
    pub fn rotated(&self, start: usize) -> FrontCode {
        let mut events = self.events.clone();
        if !events.is_empty() {
            let k = start % events.len();
            events.rotate_left(k);
        }
        FrontCode { name: self.name.clone(), events }
    }

    pub fn to_text(&self) -> String {
        let evs: Vec<String> = self.events.iter().map(|e| e.to_string()).collect();
        format!("knot {}\ncode {}\n", self.name, evs.join(" "))
    }

    pub fn parse(text: &str) -> Result<FrontCode, FrontError> {
        let mut lines = LineCursor::new(text);
        let (ln, line) = lines.expect_line("knot")?;
        let rest = line.trim_start().strip_prefix("knot").unwrap_or("");
        let name = rest.trim();
        if name.is_empty() || !rest.starts_with(char::is_whitespace) {
            return Err(ParseError::new(ln, 1, "expected `knot <name>`").into());
        }
        let (ln, line) = lines.expect_line("code")?;
        let mut toks = tokens(line);
        match toks.next() {
            Some((_, "code")) => {}
            Some((col, _)) => return Err(ParseError::new(ln, col, "expected `code`").into()),
            None => return Err(ParseError::new(ln, 1, "expected `code`").into()),
        }
        let mut events = Vec::new();
        for (col, tok) in toks {
            let ev = Event::parse(tok)
                .ok_or_else(|| ParseError::new(ln, col, format!("bad event `{tok}`")))?;
            events.push(ev);
        }
        lines.expect_end()?;
        Ok(FrontCode { name: name.to_string(), events })
    }
}

impl fmt::Display for FrontCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn validate(code: &FrontCode) -> Vec<Violation> {
    let mut out = Vec::new();
    if code.events.is_empty() {
        out.push(Violation::Empty);
    }
    // crossing -> (over index, under index, first sign, first index)
    let mut seen: BTreeMap<u32, (Option<usize>, Option<usize>, Sign)> = BTreeMap::new();
    for (i, ev) in code.events.iter().enumerate() {
        if let Event::Pass { crossing, role, sign } = *ev {
            if crossing == 0 {
                out.push(Violation::ZeroCrossingId { index: i });
                continue;
            }
            let entry = seen.entry(crossing).or_insert((None, None, sign));
            if entry.2 != sign {
                out.push(Violation::SignMismatch { crossing, index: i });
            }
            let slot = if role == Role::Over { &mut entry.0 } else { &mut entry.1 };
            if slot.is_some() {
                out.push(Violation::DuplicatePass { crossing, role, index: i });
            } else {
                *slot = Some(i);
            }
        }
    }
    for (&crossing, &(over, under, _)) in &seen {
        match (over, under) {
            (Some(_), None) => out.push(Violation::MissingPass {
                crossing,
                role: Role::Under,
                index: over.unwrap(),
            }),
            (None, Some(_)) => out.push(Violation::MissingPass {
                crossing,
                role: Role::Over,
                index: under.unwrap(),
            }),
            _ => {}
        }
    }
    let cusps = code.cusp_count();
    if cusps % 2 == 1 {
        out.push(Violation::OddCusps { count: cusps });
    }
    if cusps < 2 {
        out.push(Violation::TooFewCusps { count: cusps });
    }
    out
}

pub fn classical_invariants(code: &FrontCode) -> Result<ClassicalInvariants, FrontError> {
    code.ensure_valid()?;
    let mut writhe = 0;
    let (mut up, mut down) = (0usize, 0usize);
    for ev in &code.events {
        match *ev {
            // each crossing counted once, at its under-pass
            Event::Pass { role: Role::Under, sign, .. } => writhe += sign.value(),
            Event::Pass { .. } => {}
            Event::Cusp(CuspDir::Up) => up += 1,
            Event::Cusp(CuspDir::Down) => down += 1,
        }
    }
    let cusps = (up + down) as i64;
    Ok(ClassicalInvariants {
        writhe,
        up_cusps: up,
        down_cusps: down,
        tb: writhe - cusps / 2,
        rot: (down as i64 - up as i64) / 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stabilization {
    Plus,
    Minus,
}

/// Inserts a zigzag before event `site`: two Down cusps for `Plus`, two Up
/// cusps for `Minus`.
pub fn stabilize(code: &FrontCode, kind: Stabilization, site: usize) -> Result<FrontCode, FrontError> {
    code.ensure_valid()?;
    if site > code.len() {
        return Err(FrontError::SiteOutOfRange { site, len: code.len() });
    }
    let dir = match kind {
        Stabilization::Plus => CuspDir::Down,
        Stabilization::Minus => CuspDir::Up,
    };
    let mut events = code.events.clone();
    events.splice(site..site, [Event::Cusp(dir), Event::Cusp(dir)]);
    Ok(FrontCode { name: code.name.clone(), events })
}
