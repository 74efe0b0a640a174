//! Counting colorings, i.e. GL-rack homomorphisms from a presented
//! fundamental GL-rack into a finite GL-rack.

use rayon::prelude::*;
use thiserror::Error;

use crate::frontcode::Sign;
use crate::glrack::{perm, CuspMap, FiniteGlRack, GlRackError};
use crate::presentation::{
    eval_word, FullRelation, Presentation, PresentationError, PresentationSummary,
};

pub const DEFAULT_EMIT_CAP: usize = 1000;
pub const DEFAULT_BRUTEFORCE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("brute force needs {size}^{gens} assignments, over the budget of {budget}")]
    BudgetExceeded { size: usize, gens: usize, budget: u64 },
    #[error("k must be at least 1")]
    ZeroModulus,
    #[error("a + b must be 1, got {a} + {b}")]
    BadExponents { a: i64, b: i64 },
    #[error(transparent)]
    Rack(#[from] GlRackError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColoringResult {
    pub count: u64,
    /// Present only when requested; at most the configured cap.
    pub colorings: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoringOptions {
    pub emit: bool,
    pub cap: usize,
}

impl Default for ColoringOptions {
    fn default() -> Self {
        ColoringOptions { emit: false, cap: DEFAULT_EMIT_CAP }
    }
}

/// `output = pre(input) *^sign over`, or `output = pre(input)` without `over`.
struct Constraint {
    input: usize,
    over: Option<usize>,
    sign: Sign,
    pre: Vec<usize>,
    pre_inv: Vec<usize>,
    output: usize,
}

fn constraints(pres: &Presentation, x: &FiniteGlRack) -> Vec<Constraint> {
    let mk = |input, over, sign, pre: Vec<usize>, output| {
        let pre_inv = perm::inverse(&pre);
        Constraint { input, over, sign, pre, pre_inv, output }
    };
    match pres {
        Presentation::Full(f) => f
            .relations
            .iter()
            .map(|r| match *r {
                FullRelation::Cusp { kind, from, to } => {
                    let (p, q) = if kind == CuspMap::U { (1, 0) } else { (0, 1) };
                    mk(from, None, Sign::Pos, x.ud_power(p, q), to)
                }
                FullRelation::Cross { sign, under_in, over, under_out } => {
                    mk(under_in, Some(over), sign, x.ud_power(0, 0), under_out)
                }
            })
            .collect(),
        Presentation::Reduced(r) => r
            .relations
            .iter()
            .enumerate()
            .map(|(i, rel)| mk(i, Some(rel.over), rel.sign, x.ud_power(rel.p, rel.q), (i + 1) % r.gens))
            .collect(),
    }
}

const NONE: usize = usize::MAX;

/// `row[s][x]` is `Some(v)` when `x *^s y = v` for every `y`.
struct ConstantRows {
    pos: Vec<Option<usize>>,
    neg: Vec<Option<usize>>,
}

impl ConstantRows {
    fn new(x: &FiniteGlRack) -> Self {
        let n = x.order();
        let row = |s: Sign| -> Vec<Option<usize>> {
            (0..n)
                .map(|a| {
                    let v = x.op_signed(a, 0, s);
                    (1..n).all(|b| x.op_signed(a, b, s) == v).then_some(v)
                })
                .collect()
        };
        ConstantRows { pos: row(Sign::Pos), neg: row(Sign::Neg) }
    }

    fn get(&self, a: usize, s: Sign) -> Option<usize> {
        match s {
            Sign::Pos => self.pos[a],
            Sign::Neg => self.neg[a],
        }
    }
}

/// Fills in everything the constraints force; `false` on a contradiction.
fn propagate(cs: &[Constraint], x: &FiniteGlRack, rows: &ConstantRows, a: &mut [usize]) -> bool {
    loop {
        let mut changed = false;
        for c in cs {
            let over = match c.over {
                Some(o) if a[o] == NONE => {
                    // the output may still be forced when the row is constant
                    let i = a[c.input];
                    let Some(v) = (i != NONE).then(|| rows.get(c.pre[i], c.sign)).flatten() else {
                        continue;
                    };
                    match a[c.output] {
                        NONE => {
                            a[c.output] = v;
                            changed = true;
                        }
                        o if o != v => return false,
                        _ => {}
                    }
                    continue;
                }
                Some(o) => Some(a[o]),
                None => None,
            };
            let (i, o) = (a[c.input], a[c.output]);
            if i != NONE {
                let pi = c.pre[i];
                let v = over.map_or(pi, |y| x.op_signed(pi, y, c.sign));
                if o == NONE {
                    a[c.output] = v;
                    changed = true;
                } else if o != v {
                    return false;
                }
            } else if o != NONE {
                let pi = over.map_or(o, |y| x.op_signed(o, y, c.sign.flip()));
                a[c.input] = c.pre_inv[pi];
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
}

struct Search<'a> {
    cs: &'a [Constraint],
    x: &'a FiniteGlRack,
    rows: &'a ConstantRows,
    opts: ColoringOptions,
    count: u64,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn go(&mut self, mut a: Vec<usize>) {
        if !propagate(self.cs, self.x, self.rows, &mut a) {
            return;
        }
        match a.iter().position(|&v| v == NONE) {
            None => {
                self.count += 1;
                if self.opts.emit && self.found.len() < self.opts.cap {
                    self.found.push(a);
                }
            }
            Some(g) => {
                for c in 0..self.x.order() {
                    let mut b = a.clone();
                    b[g] = c;
                    self.go(b);
                }
            }
        }
    }
}

/// Whether `assignment` satisfies every relation of `pres`.
pub fn is_coloring(pres: &Presentation, x: &FiniteGlRack, assignment: &[usize]) -> bool {
    assignment.len() == pres.gens()
        && assignment.iter().all(|&v| v < x.order())
        && pres.relation_words().iter().all(|(l, r)| {
            matches!((eval_word(l, x, assignment), eval_word(r, x, assignment)), (Ok(a), Ok(b)) if a == b)
        })
}

pub fn count_colorings(pres: &Presentation, x: &FiniteGlRack) -> Result<ColoringResult, ColoringError> {
    count_colorings_with(pres, x, ColoringOptions::default())
}

/// Exact count by propagation and backtracking. The branches on the
/// color of generator 0 run in parallel and are merged in color order.
pub fn count_colorings_with(
    pres: &Presentation,
    x: &FiniteGlRack,
    opts: ColoringOptions,
) -> Result<ColoringResult, ColoringError> {
    pres.check()?;
    let m = pres.gens();
    let cs = constraints(pres, x);
    let rows = ConstantRows::new(x);
    let branches: Vec<(u64, Vec<Vec<usize>>)> = if m == 0 {
        vec![(1, if opts.emit { vec![vec![]] } else { vec![] })]
    } else {
        (0..x.order())
            .into_par_iter()
            .map(|c| {
                let mut s = Search { cs: &cs, x, rows: &rows, opts, count: 0, found: Vec::new() };
                let mut a = vec![NONE; m];
                a[0] = c;
                s.go(a);
                (s.count, s.found)
            })
            .collect()
    };
    let count = branches.iter().map(|b| b.0).sum();
    let colorings = opts.emit.then(|| {
        let all: Vec<Vec<usize>> = branches.into_iter().flat_map(|b| b.1).take(opts.cap).collect();
        for a in &all {
            assert!(is_coloring(pres, x, a), "emitted assignment {a:?} violates a relation");
        }
        all
    });
    Ok(ColoringResult { count, colorings })
}

pub fn count_bruteforce(pres: &Presentation, x: &FiniteGlRack) -> Result<ColoringResult, ColoringError> {
    count_bruteforce_with_budget(pres, x, DEFAULT_BRUTEFORCE_BUDGET)
}

/// Tries every assignment and evaluates each relation as a pair of words.
pub fn count_bruteforce_with_budget(
    pres: &Presentation,
    x: &FiniteGlRack,
    budget: u64,
) -> Result<ColoringResult, ColoringError> {
    pres.check()?;
    let (n, m) = (x.order(), pres.gens());
    let total = (n as u64).checked_pow(m as u32);
    if total.map_or(true, |t| t > budget) {
        return Err(ColoringError::BudgetExceeded { size: n, gens: m, budget });
    }
    let words = pres.relation_words();
    let mut a = vec![0usize; m];
    let mut count = 0;
    for _ in 0..total.unwrap() {
        let ok = words.iter().all(|(l, r)| eval_word(l, x, &a).ok() == eval_word(r, x, &a).ok());
        if ok {
            count += 1;
        }
        // odometer, last generator fastest
        for g in (0..m).rev() {
            a[g] += 1;
            if a[g] < n {
                break;
            }
            a[g] = 0;
        }
    }
    Ok(ColoringResult { count, colorings: None })
}

/// Count against `(Z_k, x*y = x+1, u = σ^-a, d = σ^-b)` from the summary
/// alone: a seed color survives the loop iff `σ^(ω − ap − bq)` fixes it.
pub fn closed_form_permutation(s: &PresentationSummary, k: u64, a: i64, b: i64) -> Result<u64, ColoringError> {
    if k == 0 {
        return Err(ColoringError::ZeroModulus);
    }
    if a + b != 1 {
        return Err(ColoringError::BadExponents { a, b });
    }
    let t = s.omega as i128 - a as i128 * s.p as i128 - b as i128 * s.q as i128;
    Ok(if t % k as i128 == 0 { k } else { 0 })
}

/// Counts against each rack in order.
pub fn coloring_profile(pres: &Presentation, racks: &[FiniteGlRack]) -> Result<Vec<u64>, ColoringError> {
    racks.par_iter().map(|x| count_colorings(pres, x).map(|r| r.count)).collect()
}
