//! Legendrian Reidemeister moves as before/after event templates.
//!
//! The exact templates are listed in `docs/conventions.md`. In short:
//!
//! * LR1 inserts or removes a kink `xN{r}+ c c' xN{r'}+` where `{r, r'}` are
//!   the two roles and `{c, c'}` one Up and one Down cusp.
//! * LR2 pushes a strand across a cusp: the cusp strand reads
//!   `xA{R}{s} c xB{R}{-s}` and the other strand carries the adjacent pair
//!   `xA{R'}{s} xB{R'}{-s}` (in either order).
//! * LR3 slides the top strand across the crossing of the two lower ones,
//!   reversing the order of the adjacent pass pairs on all three strands.

use std::fmt;

use super::{CuspDir, Event, FrontCode, FrontError, Role, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    Lr1,
    Lr2,
    Lr3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// A fully resolved move instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveSpec {
    /// Insert a kink before event `at`; `first` is the role of the first
    /// pass met, `first_cusp` the first cusp met.
    Lr1Insert { at: usize, first: Role, first_cusp: CuspDir },
    /// Remove the kink occupying the four cyclic positions from `at`.
    Lr1Remove { at: usize },
    /// Push the strand entering before event `at` across the cusp at index
    /// `cusp`. `cusp_role` is the role of the cusp strand at both new
    /// crossings, `first_sign` the sign of the crossing met before the cusp,
    /// and `reversed` flips the order of the pair on the other strand.
    Lr2Insert { cusp: usize, at: usize, cusp_role: Role, first_sign: Sign, reversed: bool },
    /// Undo an LR2 around the cusp at index `cusp`.
    Lr2Remove { cusp: usize },
    /// Triangle move on the three named crossings; an involution.
    Lr3 { crossings: [u32; 3] },
}

impl MoveSpec {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSpec::Lr1Insert { .. } | MoveSpec::Lr1Remove { .. } => MoveKind::Lr1,
            MoveSpec::Lr2Insert { .. } | MoveSpec::Lr2Remove { .. } => MoveKind::Lr2,
            MoveSpec::Lr3 { .. } => MoveKind::Lr3,
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            MoveSpec::Lr1Remove { .. } | MoveSpec::Lr2Remove { .. } => Direction::Backward,
            _ => Direction::Forward,
        }
    }

    /// Parses the `--site` grammar of the CLI:
    ///
    /// | move | fwd | bwd |
    /// |------|-----|-----|
    /// | 1 | `at[:uo\|ou][:ud\|du]` | `at` |
    /// | 2 | `cusp,at[:u\|o][:+\|-][:s\|r]` | `cusp` |
    /// | 3 | `a,b,c` | `a,b,c` |
    pub fn parse(kind: MoveKind, dir: Direction, site: &str) -> Result<MoveSpec, FrontError> {
        let bad = || FrontError::BadSite(site.to_string());
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        let mut parts = site.split(':');
        let head = parts.next().ok_or_else(bad)?;
        let flags: Vec<&str> = parts.collect();
        let spec = match (kind, dir) {
            (MoveKind::Lr1, Direction::Forward) => {
                if flags.len() > 2 {
                    return Err(bad());
                }
                let first = match flags.first().copied() {
                    None | Some("uo") => Role::Under,
                    Some("ou") => Role::Over,
                    _ => return Err(bad()),
                };
                let first_cusp = match flags.get(1).copied() {
                    None | Some("ud") => CuspDir::Up,
                    Some("du") => CuspDir::Down,
                    _ => return Err(bad()),
                };
                MoveSpec::Lr1Insert { at: num(head)?, first, first_cusp }
            }
            (MoveKind::Lr1, Direction::Backward) => {
                if !flags.is_empty() {
                    return Err(bad());
                }
                MoveSpec::Lr1Remove { at: num(head)? }
            }
            (MoveKind::Lr2, Direction::Forward) => {
                let (c, a) = head.split_once(',').ok_or_else(bad)?;
                if flags.len() > 3 {
                    return Err(bad());
                }
                let cusp_role = match flags.first().copied() {
                    None | Some("u") => Role::Under,
                    Some("o") => Role::Over,
                    _ => return Err(bad()),
                };
                let first_sign = match flags.get(1).copied() {
                    None | Some("+") => Sign::Pos,
                    Some("-") => Sign::Neg,
                    _ => return Err(bad()),
                };
                let reversed = match flags.get(2).copied() {
                    None | Some("s") => false,
                    Some("r") => true,
                    _ => return Err(bad()),
                };
                MoveSpec::Lr2Insert { cusp: num(c)?, at: num(a)?, cusp_role, first_sign, reversed }
            }
            (MoveKind::Lr2, Direction::Backward) => {
                if !flags.is_empty() {
                    return Err(bad());
                }
                MoveSpec::Lr2Remove { cusp: num(head)? }
            }
            (MoveKind::Lr3, _) => {
                if !flags.is_empty() {
                    return Err(bad());
                }
                let ids: Vec<u32> = head
                    .split(',')
                    .map(|s| s.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?;
                let crossings: [u32; 3] = ids.try_into().map_err(|_| bad())?;
                MoveSpec::Lr3 { crossings }
            }
        };
        Ok(spec)
    }

    /// The `--site` string that parses back to this instance.
    pub fn site(&self) -> String {
        match *self {
            MoveSpec::Lr1Insert { at, first, first_cusp } => format!(
                "{at}:{}:{}",
                if first == Role::Under { "uo" } else { "ou" },
                if first_cusp == CuspDir::Up { "ud" } else { "du" }
            ),
            MoveSpec::Lr1Remove { at } => at.to_string(),
            MoveSpec::Lr2Insert { cusp, at, cusp_role, first_sign, reversed } => format!(
                "{cusp},{at}:{}:{}:{}",
                if cusp_role == Role::Under { "u" } else { "o" },
                first_sign.as_char(),
                if reversed { "r" } else { "s" }
            ),
            MoveSpec::Lr2Remove { cusp } => cusp.to_string(),
            MoveSpec::Lr3 { crossings: [a, b, c] } => format!("{a},{b},{c}"),
        }
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind() {
            MoveKind::Lr1 => 1,
            MoveKind::Lr2 => 2,
            MoveKind::Lr3 => 3,
        };
        let d = if self.direction() == Direction::Forward { "fwd" } else { "bwd" };
        write!(f, "--move {k} --dir {d} --site {}", self.site())
    }
}

const LR1_PATTERN: &str = "kink `xN{r}+ c c' xN{r'}+` with opposite roles and one Up, one Down cusp";
const LR2_PATTERN: &str =
    "`xA{R}{s} cusp xB{R}{-s}` with the other passes of A and B adjacent";
const LR3_PATTERN: &str =
    "three crossings forming a triangle: top strand over both, bottom strand under both, \
     each strand's two passes adjacent, sign product +1, orders consistent with a triangle";

fn no_match(p: &str) -> FrontError {
    FrontError::NoMatch { expected: p.to_string() }
}

fn cyc(i: usize, len: usize) -> usize {
    i % len
}

fn adjacent(i: usize, j: usize, len: usize) -> bool {
    (i + 1) % len == j || (j + 1) % len == i
}

fn without(events: &[Event], drop: &[usize]) -> Vec<Event> {
    events
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, e)| *e)
        .collect()
}

fn opposite(d: CuspDir) -> CuspDir {
    match d {
        CuspDir::Up => CuspDir::Down,
        CuspDir::Down => CuspDir::Up,
    }
}

/// Applies a move. The input must be valid; on success the output is valid
/// and has the same classical invariants.
pub fn apply_move(code: &FrontCode, spec: &MoveSpec) -> Result<FrontCode, FrontError> {
    code.ensure_valid()?;
    let len = code.len();
    let ev = &code.events;
    let events = match *spec {
        MoveSpec::Lr1Insert { at, first, first_cusp } => {
            if at > len {
                return Err(FrontError::SiteOutOfRange { site: at, len });
            }
            let n = code.next_crossing_id();
            let kink = [
                Event::pass(n, first, Sign::Pos),
                Event::Cusp(first_cusp),
                Event::Cusp(opposite(first_cusp)),
                Event::pass(n, first.opposite(), Sign::Pos),
            ];
            let mut out = ev.clone();
            out.splice(at..at, kink);
            out
        }
        MoveSpec::Lr1Remove { at } => {
            if at >= len {
                return Err(FrontError::SiteOutOfRange { site: at, len });
            }
            if len < 4 {
                return Err(no_match(LR1_PATTERN));
            }
            let pos: Vec<usize> = (0..4).map(|k| cyc(at + k, len)).collect();
            match (ev[pos[0]], ev[pos[1]], ev[pos[2]], ev[pos[3]]) {
                (
                    Event::Pass { crossing: a, role: ra, sign: Sign::Pos },
                    Event::Cusp(c1),
                    Event::Cusp(c2),
                    Event::Pass { crossing: b, role: rb, sign: Sign::Pos },
                ) if a == b && ra != rb && c1 != c2 => without(ev, &pos),
                _ => return Err(no_match(LR1_PATTERN)),
            }
        }
        MoveSpec::Lr2Insert { cusp, at, cusp_role, first_sign, reversed } => {
            if cusp >= len {
                return Err(FrontError::SiteOutOfRange { site: cusp, len });
            }
            if at > len {
                return Err(FrontError::SiteOutOfRange { site: at, len });
            }
            if !ev[cusp].is_cusp() {
                return Err(no_match("a cusp at the given index"));
            }
            if at % len == cusp || at % len == (cusp + 1) % len {
                return Err(no_match("an insertion point not adjacent to the cusp"));
            }
            let a = code.next_crossing_id();
            let b = a + 1;
            let other = cusp_role.opposite();
            let mut pair = [
                Event::pass(a, other, first_sign),
                Event::pass(b, other, first_sign.flip()),
            ];
            if reversed {
                pair.swap(0, 1);
            }
            let mut out = Vec::with_capacity(len + 4);
            for i in 0..=len {
                if i == at {
                    out.extend(pair);
                }
                if i < len {
                    if i == cusp {
                        out.push(Event::pass(a, cusp_role, first_sign));
                        out.push(ev[i]);
                        out.push(Event::pass(b, cusp_role, first_sign.flip()));
                    } else {
                        out.push(ev[i]);
                    }
                }
            }
            out
        }
        MoveSpec::Lr2Remove { cusp } => {
            if cusp >= len {
                return Err(FrontError::SiteOutOfRange { site: cusp, len });
            }
            if len < 5 || !ev[cusp].is_cusp() {
                return Err(no_match(LR2_PATTERN));
            }
            let before = cyc(cusp + len - 1, len);
            let after = cyc(cusp + 1, len);
            match (ev[before], ev[after]) {
                (
                    Event::Pass { crossing: a, role: ra, sign: sa },
                    Event::Pass { crossing: b, role: rb, sign: sb },
                ) if a != b && ra == rb && sa != sb => {
                    let pa = code.find_pass(a, ra.opposite()).ok_or_else(|| no_match(LR2_PATTERN))?;
                    let pb = code.find_pass(b, rb.opposite()).ok_or_else(|| no_match(LR2_PATTERN))?;
                    if !adjacent(pa, pb, len) {
                        return Err(no_match(LR2_PATTERN));
                    }
                    without(ev, &[before, after, pa, pb])
                }
                _ => return Err(no_match(LR2_PATTERN)),
            }
        }
        MoveSpec::Lr3 { crossings } => {
            let pairs = lr3_pairs(code, crossings).ok_or_else(|| no_match(LR3_PATTERN))?;
            let mut out = ev.clone();
            for (i, j) in pairs {
                out.swap(i, j);
            }
            out
        }
    };
    let result = FrontCode { name: code.name.clone(), events };
    result.ensure_valid()?;
    Ok(result)
}

/// Position pairs to swap for an LR3 on `crossings`, if they form a
/// triangle.
fn lr3_pairs(code: &FrontCode, crossings: [u32; 3]) -> Option<[(usize, usize); 3]> {
    let len = code.len();
    let [x, y, z] = crossings;
    if x == y || y == z || x == z {
        return None;
    }
    let sign_of = |c: u32| {
        code.events.iter().find_map(|e| match *e {
            Event::Pass { crossing, sign, .. } if crossing == c => Some(sign),
            _ => None,
        })
    };
    let pos = |c: u32, r: Role| code.find_pass(c, r);
    // (top-bottom, top-middle, middle-bottom) assignments
    let candidates = [(x, y, z), (x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)];
    for (tb, tm, mb) in candidates {
        let t = (pos(tm, Role::Over)?, pos(tb, Role::Over)?);
        let m = (pos(tm, Role::Under)?, pos(mb, Role::Over)?);
        let b = (pos(tb, Role::Under)?, pos(mb, Role::Under)?);
        if !(adjacent(t.0, t.1, len) && adjacent(m.0, m.1, len) && adjacent(b.0, b.1, len)) {
            continue;
        }
        let (e_tm, e_tb, e_mb) = (sign_of(tm)?, sign_of(tb)?, sign_of(mb)?);
        if e_tm * e_tb * e_mb != Sign::Pos {
            continue;
        }
        // Strand x-directions up to a global flip: d_T = +, d_M = e_tm, d_B = e_tb.
        // In one triangle configuration the x-order along each strand is
        // T: (tm, tb), M: (tm, mb), B: (tb, mb); the traversal order is the
        // x-order exactly when the strand runs rightward.
        let first_is = |p: (usize, usize)| (p.0 + 1) % len == p.1;
        let f_t = first_is(t);
        let f_m = first_is(m) == (e_tm == Sign::Pos);
        let f_b = first_is(b) == (e_tb == Sign::Pos);
        if f_t == f_m && f_m == f_b {
            return Some([t, m, b]);
        }
    }
    None
}

/// Every move instance applicable to `code` under the documented templates.
pub fn move_instances(code: &FrontCode) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    if !code.validate().is_empty() {
        return out;
    }
    let len = code.len();
    for at in 0..=len {
        for first in [Role::Under, Role::Over] {
            for first_cusp in [CuspDir::Up, CuspDir::Down] {
                out.push(MoveSpec::Lr1Insert { at, first, first_cusp });
            }
        }
    }
    let try_push = |out: &mut Vec<MoveSpec>, s: MoveSpec| {
        if apply_move(code, &s).is_ok() {
            out.push(s);
        }
    };
    for at in 0..len {
        try_push(&mut out, MoveSpec::Lr1Remove { at });
    }
    for cusp in (0..len).filter(|&i| code.events[i].is_cusp()) {
        for at in 0..=len {
            if at % len == cusp || at % len == (cusp + 1) % len {
                continue;
            }
            for cusp_role in [Role::Under, Role::Over] {
                for first_sign in [Sign::Pos, Sign::Neg] {
                    for reversed in [false, true] {
                        out.push(MoveSpec::Lr2Insert { cusp, at, cusp_role, first_sign, reversed });
                    }
                }
            }
        }
        try_push(&mut out, MoveSpec::Lr2Remove { cusp });
    }
    let ids = code.crossing_ids();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            for k in j + 1..ids.len() {
                try_push(&mut out, MoveSpec::Lr3 { crossings: [ids[i], ids[j], ids[k]] });
            }
        }
    }
    out
}
