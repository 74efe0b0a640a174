//! Finite racks and generalized Legendrian racks (GL-racks) as tables.
//!
//! Elements are `0..n`. The rack operation is stored row-major,
//! `op[x * n + y] = x * y`, and the column maps `s_y(x) = x * y` are
//! bijections whose inverses give the table of `*^-1`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::frontcode::Sign;
use crate::text::{join, numbers_after, LineCursor, ParseError};

/// Largest order accepted by the enumerators unless configured otherwise.
pub const DEFAULT_MAX_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CuspMap {
    U,
    D,
}

impl fmt::Display for CuspMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CuspMap::U => "u",
            CuspMap::D => "d",
        })
    }
}

/// A failed axiom with a witnessing tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    ColumnNotBijective { y: usize },
    SelfDistributivity { x: usize, y: usize, z: usize },
    /// `ud(x*x) = du(x*x) = x` fails at `x`.
    Gl1 { x: usize },
    /// `m(x*y) = m(x)*y` fails.
    Gl2 { map: CuspMap, x: usize, y: usize },
    /// `x*m(y) = x*y` fails.
    Gl3 { map: CuspMap, x: usize, y: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::ColumnNotBijective { y } => write!(f, "rack: s_{y} is not a bijection"),
            AxiomViolation::SelfDistributivity { x, y, z } => {
                write!(f, "rack: (x*y)*z != (x*z)*(y*z) at x={x} y={y} z={z}")
            }
            AxiomViolation::Gl1 { x } => write!(f, "GL1: ud(x*x) = du(x*x) = x fails at x={x}"),
            AxiomViolation::Gl2 { map, x, y } => {
                write!(f, "GL2: {map}(x*y) != {map}(x)*y at x={x} y={y}")
            }
            AxiomViolation::Gl3 { map, x, y } => {
                write!(f, "GL3: x*{map}(y) != x*y at x={x} y={y}")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlRackError {
    #[error("{what}: expected {expected} entries, found {found}")]
    Dimension { what: &'static str, expected: usize, found: usize },
    #[error("{what}: entry {index} = {value} is out of range")]
    OutOfRange { what: &'static str, index: usize, value: usize },
    #[error("axioms violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<AxiomViolation>),
    #[error("not a group: {0}")]
    NotGroup(String),
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("{0} is not a permutation")]
    NotPermutation(&'static str),
    #[error("permutation rack requires d∘u = σ⁻¹")]
    PermutationCondition,
    #[error("order {n} outside the supported range 1..={max}")]
    BadOrder { n: usize, max: usize },
    #[error("bad permutation family parameters: {0}")]
    BadFamily(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

// ---------------------------------------------------------------------------
// permutations

pub mod perm {
    pub fn identity(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    pub fn is_permutation(p: &[usize]) -> bool {
        let mut seen = vec![false; p.len()];
        for &v in p {
            if v >= p.len() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn inverse(p: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() {
            inv[v] = i;
        }
        inv
    }

    /// `(f ∘ g)(x) = f(g(x))`
    pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
        g.iter().map(|&x| f[x]).collect()
    }

    pub fn power(p: &[usize], e: i64) -> Vec<usize> {
        let base = if e < 0 { inverse(p) } else { p.to_vec() };
        let mut out = identity(p.len());
        for _ in 0..e.unsigned_abs() {
            out = compose(&base, &out);
        }
        out
    }

    /// Length of the cycle through each point.
    pub fn cycle_lengths(p: &[usize]) -> Vec<usize> {
        let mut out = vec![0; p.len()];
        for start in 0..p.len() {
            if out[start] != 0 {
                continue;
            }
            let mut cyc = vec![start];
            let mut x = p[start];
            while x != start {
                cyc.push(x);
                x = p[x];
            }
            for &c in &cyc {
                out[c] = cyc.len();
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths.
    pub fn cycle_type(p: &[usize]) -> Vec<usize> {
        let lens = cycle_lengths(p);
        let mut seen = vec![false; p.len()];
        let mut out = Vec::new();
        for s in 0..p.len() {
            if seen[s] {
                continue;
            }
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
            out.push(lens[s]);
        }
        out.sort_unstable();
        out
    }

    /// Advances to the next permutation in lexicographic order.
    pub fn next_permutation(p: &mut [usize]) -> bool {
        if p.len() < 2 {
            return false;
        }
        let mut i = p.len() - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = p.len() - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Vec<usize>> {
        let mut p = identity(n);
        let mut out = vec![p.clone()];
        while next_permutation(&mut p) {
            out.push(p.clone());
        }
        out
    }
}

// ---------------------------------------------------------------------------
// racks

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteRack {
    n: usize,
    op: Vec<usize>,
    inv: Vec<usize>,
}

fn check_table(what: &'static str, t: &[usize], len: usize, n: usize) -> Result<(), GlRackError> {
    if t.len() != len {
        return Err(GlRackError::Dimension { what, expected: len, found: t.len() });
    }
    if let Some((index, &value)) = t.iter().enumerate().find(|(_, &v)| v >= n) {
        return Err(GlRackError::OutOfRange { what, index, value });
    }
    Ok(())
}

fn rack_violations(n: usize, op: &[usize]) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    for y in 0..n {
        let col: Vec<usize> = (0..n).map(|x| op[x * n + y]).collect();
        if !perm::is_permutation(&col) {
            out.push(AxiomViolation::ColumnNotBijective { y });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = op[op[x * n + y] * n + z];
                let r = op[op[x * n + z] * n + op[y * n + z]];
                if l != r {
                    out.push(AxiomViolation::SelfDistributivity { x, y, z });
                }
            }
        }
    }
    out
}

impl FiniteRack {
    /// Checks dimensions and both rack axioms.
    pub fn new(n: usize, op: Vec<usize>) -> Result<Self, GlRackError> {
        check_table("op", &op, n * n, n)?;
        let v = rack_violations(n, &op);
        if !v.is_empty() {
            return Err(GlRackError::Axioms(v));
        }
        Ok(Self::from_valid(n, op))
    }

    fn from_valid(n: usize, op: Vec<usize>) -> Self {
        let mut inv = vec![0; n * n];
        for y in 0..n {
            for x in 0..n {
                inv[op[x * n + y] * n + y] = x;
            }
        }
        FiniteRack { n, op, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n + y]
    }

    /// `x *^-1 y`, the inverse of `s_y`.
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv[x * self.n + y]
    }

    /// `x *^e y`.
    #[inline]
    pub fn op_signed(&self, x: usize, y: usize, sign: Sign) -> usize {
        match sign {
            Sign::Pos => self.op(x, y),
            Sign::Neg => self.inv_op(x, y),
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.op
    }

    /// `θ(x) = x * x`.
    pub fn theta(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.op(x, x)).collect()
    }

    pub fn is_quandle(&self) -> bool {
        (0..self.n).all(|x| self.op(x, x) == x)
    }

    /// Column map `s_y: x ↦ x * y`.
    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.op(x, y)).collect()
    }

    fn relabel(&self, p: &[usize]) -> Vec<usize> {
        let n = self.n;
        let mut out = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                out[p[x] * n + p[y]] = p[self.op(x, y)];
            }
        }
        out
    }

    /// Lexicographically least table over all relabelings.
    pub fn canonical(&self) -> FiniteRack {
        let best = perm::all(self.n)
            .into_iter()
            .map(|p| self.relabel(&p))
            .min()
            .unwrap_or_default();
        FiniteRack::from_valid(self.n, best)
    }
}

// ---------------------------------------------------------------------------
// GL-racks

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGlRack {
    rack: FiniteRack,
    u: Vec<usize>,
    d: Vec<usize>,
}

/// Checks dimensions, then the rack axioms and GL1-GL3 exhaustively.
/// Every failing tuple is reported.
pub fn validate_glrack(
    n: usize,
    op: &[usize],
    u: &[usize],
    d: &[usize],
) -> Result<Vec<AxiomViolation>, GlRackError> {
    check_table("op", op, n * n, n)?;
    check_table("u", u, n, n)?;
    check_table("d", d, n, n)?;
    let mut out = rack_violations(n, op);
    let star = |x: usize, y: usize| op[x * n + y];
    for x in 0..n {
        let t = star(x, x);
        if u[d[t]] != x || d[u[t]] != x {
            out.push(AxiomViolation::Gl1 { x });
        }
    }
    for (map, m) in [(CuspMap::U, u), (CuspMap::D, d)] {
        for x in 0..n {
            for y in 0..n {
                if m[star(x, y)] != star(m[x], y) {
                    out.push(AxiomViolation::Gl2 { map, x, y });
                }
            }
        }
    }
    for (map, m) in [(CuspMap::U, u), (CuspMap::D, d)] {
        for x in 0..n {
            for y in 0..n {
                if star(x, m[y]) != star(x, y) {
                    out.push(AxiomViolation::Gl3 { map, x, y });
                }
            }
        }
    }
    Ok(out)
}

impl FiniteGlRack {
    pub fn new(rack: FiniteRack, u: Vec<usize>, d: Vec<usize>) -> Result<Self, GlRackError> {
        let v = validate_glrack(rack.n, &rack.op, &u, &d)?;
        if !v.is_empty() {
            return Err(GlRackError::Axioms(v));
        }
        Ok(FiniteGlRack { rack, u, d })
    }

    pub fn from_tables(n: usize, op: Vec<usize>, u: Vec<usize>, d: Vec<usize>) -> Result<Self, GlRackError> {
        let v = validate_glrack(n, &op, &u, &d)?;
        if !v.is_empty() {
            return Err(GlRackError::Axioms(v));
        }
        Ok(FiniteGlRack { rack: FiniteRack::from_valid(n, op), u, d })
    }

    pub fn order(&self) -> usize {
        self.rack.n
    }

    pub fn rack(&self) -> &FiniteRack {
        &self.rack
    }

    pub fn u(&self) -> &[usize] {
        &self.u
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn map(&self, m: CuspMap) -> &[usize] {
        match m {
            CuspMap::U => &self.u,
            CuspMap::D => &self.d,
        }
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.rack.op(x, y)
    }

    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.rack.inv_op(x, y)
    }

    #[inline]
    pub fn op_signed(&self, x: usize, y: usize, sign: Sign) -> usize {
        self.rack.op_signed(x, y, sign)
    }

    /// The map `u^p d^q` as a table.
    pub fn ud_power(&self, p: u32, q: u32) -> Vec<usize> {
        let mut out = perm::identity(self.order());
        for _ in 0..q {
            out = perm::compose(&self.d, &out);
        }
        for _ in 0..p {
            out = perm::compose(&self.u, &out);
        }
        out
    }

    pub fn theta(&self) -> Vec<usize> {
        self.rack.theta()
    }

    /// Relabels elements by the bijection `p`: `x ↦ p[x]`.
    pub fn relabeled(&self, p: &[usize]) -> FiniteGlRack {
        let n = self.order();
        let op = self.rack.relabel(p);
        let mut u = vec![0; n];
        let mut d = vec![0; n];
        for x in 0..n {
            u[p[x]] = p[self.u[x]];
            d[p[x]] = p[self.d[x]];
        }
        FiniteGlRack { rack: FiniteRack::from_valid(n, op), u, d }
    }

    fn flat_key(&self) -> Vec<usize> {
        let mut k = self.rack.op.clone();
        k.extend_from_slice(&self.u);
        k.extend_from_slice(&self.d);
        k
    }

    /// Lexicographically least `(op, u, d)` over all `n!` relabelings.
    pub fn canonical(&self) -> FiniteGlRack {
        let mut best: Option<(Vec<usize>, FiniteGlRack)> = None;
        for p in perm::all(self.order()) {
            let r = self.relabeled(&p);
            let key = r.flat_key();
            if best.as_ref().map_or(true, |(b, _)| key < *b) {
                best = Some((key, r));
            }
        }
        best.map(|(_, r)| r).unwrap_or_else(|| self.clone())
    }

    pub fn to_text(&self) -> String {
        format!(
            "size {}\nop {}\nu {}\nd {}\n",
            self.order(),
            join(&self.rack.op),
            join(&self.u),
            join(&self.d)
        )
    }

    /// Parses the `size`/`op`/`u`/`d` format and validates the axioms.
    pub fn parse(text: &str) -> Result<FiniteGlRack, GlRackError> {
        let mut lines = LineCursor::new(text);
        let (ln, l) = lines.expect_line("size")?;
        let n: usize = numbers_after(ln, l, Some(1))?[0];
        let (ln, l) = lines.expect_line("op")?;
        let op = numbers_after(ln, l, Some(n * n))?;
        let (ln, l) = lines.expect_line("u")?;
        let u = numbers_after(ln, l, Some(n))?;
        let (ln, l) = lines.expect_line("d")?;
        let d = numbers_after(ln, l, Some(n))?;
        lines.expect_end()?;
        FiniteGlRack::from_tables(n, op, u, d)
    }
}

impl fmt::Display for FiniteGlRack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// ---------------------------------------------------------------------------
// groups and constructors

/// A finite group given by its Cayley table, `mul[a * n + b] = ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Group, GlRackError> {
        let n = rows.len();
        if n == 0 {
            return Err(GlRackError::NotGroup("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(GlRackError::Dimension { what: "cayley row", expected: n, found: r.len() });
            }
            mul.extend_from_slice(r);
        }
        check_table("cayley", &mul, n * n, n)?;
        let m = |a: usize, b: usize| mul[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(GlRackError::NotGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| GlRackError::NotGroup("no identity".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| GlRackError::NotGroup(format!("{a} has no inverse")))?;
        }
        Ok(Group { n, mul, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Group {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_cayley(&rows).expect("cyclic group")
    }

    /// Symmetric group on `k` letters; elements are the permutations in
    /// lexicographic order and `ab = a ∘ b`.
    pub fn symmetric(k: usize) -> Group {
        let elems = perm::all(k);
        let index: BTreeMap<Vec<usize>, usize> =
            elems.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&perm::compose(a, b)]).collect())
            .collect();
        Group::from_cayley(&rows).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.n).all(|a| self.mul(z, a) == self.mul(a, z))
    }
}

/// `x * y = x`, `u = d = id`.
pub fn mk_trivial(n: usize) -> FiniteGlRack {
    let op = (0..n).flat_map(|x| std::iter::repeat(x).take(n)).collect();
    FiniteGlRack {
        rack: FiniteRack::from_valid(n, op),
        u: perm::identity(n),
        d: perm::identity(n),
    }
}

/// Conjugation quandle `x * y = y⁻¹xy` with `u(x) = zx`, `d(x) = z⁻¹x`.
pub fn mk_conjugation(g: &Group, z: usize) -> Result<FiniteGlRack, GlRackError> {
    let n = g.order();
    if z >= n {
        return Err(GlRackError::OutOfRange { what: "z", index: 0, value: z });
    }
    if !g.is_central(z) {
        return Err(GlRackError::NotCentral(z));
    }
    let mut op = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            op[x * n + y] = g.mul(g.mul(g.inv(y), x), y);
        }
    }
    let u = (0..n).map(|x| g.mul(z, x)).collect();
    let d = (0..n).map(|x| g.mul(g.inv(z), x)).collect();
    FiniteGlRack::from_tables(n, op, u, d)
}

/// Core quandle `x * y = yx⁻¹y`.
pub fn mk_core(g: &Group) -> FiniteRack {
    let n = g.order();
    let mut op = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            op[x * n + y] = g.mul(g.mul(y, g.inv(x)), y);
        }
    }
    FiniteRack::new(n, op).expect("core of a group is a quandle")
}

/// Permutation rack `x * y = σ(x)` with the given `u`, `d`; requires
/// `d ∘ u = σ⁻¹` and the remaining GL axioms.
pub fn mk_permutation(
    n: usize,
    sigma: &[usize],
    u: &[usize],
    d: &[usize],
) -> Result<FiniteGlRack, GlRackError> {
    check_table("sigma", sigma, n, n)?;
    check_table("u", u, n, n)?;
    check_table("d", d, n, n)?;
    if !perm::is_permutation(sigma) {
        return Err(GlRackError::NotPermutation("sigma"));
    }
    if perm::compose(d, u) != perm::inverse(sigma) {
        return Err(GlRackError::PermutationCondition);
    }
    let op = (0..n).flat_map(|x| std::iter::repeat(sigma[x]).take(n)).collect();
    FiniteGlRack::from_tables(n, op, u.to_vec(), d.to_vec())
}

/// `(Z_k, σ = x ↦ x+1, u = σ^-a, d = σ^-b)`, the family behind the closed
/// form count. Requires `a + b = 1`.
pub fn mk_permutation_family(k: usize, a: i64, b: i64) -> Result<FiniteGlRack, GlRackError> {
    if k == 0 {
        return Err(GlRackError::BadFamily("k must be at least 1".into()));
    }
    if a + b != 1 {
        return Err(GlRackError::BadFamily(format!("a + b must be 1, got {a} + {b}")));
    }
    let sigma: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
    mk_permutation(k, &sigma, &perm::power(&sigma, -a), &perm::power(&sigma, -b))
}

// ---------------------------------------------------------------------------
// homomorphisms

pub fn is_homomorphism(f: &[usize], x: &FiniteGlRack, y: &FiniteGlRack) -> bool {
    let n = x.order();
    if f.len() != n || f.iter().any(|&v| v >= y.order()) {
        return false;
    }
    for a in 0..n {
        if f[x.u[a]] != y.u[f[a]] || f[x.d[a]] != y.d[f[a]] {
            return false;
        }
        for b in 0..n {
            if f[x.op(a, b)] != y.op(f[a], f[b]) {
                return false;
            }
        }
    }
    true
}

/// Per-element data preserved by isomorphisms.
fn signatures(x: &FiniteGlRack) -> Vec<[usize; 5]> {
    let n = x.order();
    let ul = perm::cycle_lengths(&x.u);
    let dl = perm::cycle_lengths(&x.d);
    let tl = perm::cycle_lengths(&x.theta());
    (0..n)
        .map(|a| {
            let fixed_by = (0..n).filter(|&b| x.op(a, b) == a).count();
            // size of the orbit of a under all s_y
            let mut seen = vec![false; n];
            let mut stack = vec![a];
            seen[a] = true;
            while let Some(c) = stack.pop() {
                for b in 0..n {
                    let e = x.op(c, b);
                    if !seen[e] {
                        seen[e] = true;
                        stack.push(e);
                    }
                }
            }
            let orbit = seen.iter().filter(|&&s| s).count();
            [ul[a], dl[a], tl[a], fixed_by, orbit]
        })
        .collect()
}

/// A bijective homomorphism `X → Y`, if one exists.
pub fn is_isomorphic(x: &FiniteGlRack, y: &FiniteGlRack) -> Option<Vec<usize>> {
    let n = x.order();
    if n != y.order() {
        return None;
    }
    let sx = signatures(x);
    let sy = signatures(y);
    let (mut a, mut b) = (sx.clone(), sy.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_iso(0, x, y, &sx, &sy, &mut f, &mut used) {
        Some(f)
    } else {
        None
    }
}

fn extend_iso(
    k: usize,
    x: &FiniteGlRack,
    y: &FiniteGlRack,
    sx: &[[usize; 5]],
    sy: &[[usize; 5]],
    f: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = x.order();
    if k == n {
        return true;
    }
    for c in 0..n {
        if used[c] || sx[k] != sy[c] {
            continue;
        }
        f[k] = c;
        used[c] = true;
        if partial_ok(k, x, y, f) && extend_iso(k + 1, x, y, sx, sy, f, used) {
            return true;
        }
        used[c] = false;
        f[k] = usize::MAX;
    }
    false
}

/// Checks every constraint whose elements are among `0..=k`.
fn partial_ok(k: usize, x: &FiniteGlRack, y: &FiniteGlRack, f: &[usize]) -> bool {
    let known = |a: usize| a <= k;
    for a in 0..=k {
        for m in [CuspMap::U, CuspMap::D] {
            let (mx, my) = (x.map(m), y.map(m));
            if known(mx[a]) && f[mx[a]] != my[f[a]] {
                return false;
            }
        }
        for b in 0..=k {
            let ab = x.op(a, b);
            if known(ab) && f[ab] != y.op(f[a], f[b]) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// enumeration

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_order: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_order: DEFAULT_MAX_ORDER }
    }
}

const UNSET: usize = usize::MAX;

struct RackSearch {
    n: usize,
    op: Vec<usize>,
    used: Vec<bool>, // used[y * n + v]: v already in column y
    found: Vec<Vec<usize>>,
}

impl RackSearch {
    /// Distributivity on every triple whose five lookups are known.
    fn consistent(&self) -> bool {
        let n = self.n;
        let op = &self.op;
        for x in 0..n {
            for y in 0..n {
                let xy = op[x * n + y];
                if xy == UNSET {
                    continue;
                }
                for z in 0..n {
                    let xz = op[x * n + z];
                    let yz = op[y * n + z];
                    if xz == UNSET || yz == UNSET {
                        continue;
                    }
                    let l = op[xy * n + z];
                    let r = op[xz * n + yz];
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    // cells are filled column by column
    fn go(&mut self, cell: usize) {
        let n = self.n;
        if cell == n * n {
            self.found.push(self.op.clone());
            return;
        }
        let (x, y) = (cell % n, cell / n);
        for v in 0..n {
            if self.used[y * n + v] {
                continue;
            }
            self.op[x * n + y] = v;
            self.used[y * n + v] = true;
            if self.consistent() {
                self.go(cell + 1);
            }
            self.used[y * n + v] = false;
            self.op[x * n + y] = UNSET;
        }
    }
}

/// All rack tables of order `n` (labeled, not up to isomorphism).
pub fn labeled_racks(n: usize) -> Vec<Vec<usize>> {
    let mut s = RackSearch { n, op: vec![UNSET; n * n], used: vec![false; n * n], found: Vec::new() };
    s.go(0);
    s.found
}

fn check_order(n: usize, cfg: &EnumerationConfig) -> Result<(), GlRackError> {
    if n == 0 || n > cfg.max_order {
        return Err(GlRackError::BadOrder { n, max: cfg.max_order });
    }
    Ok(())
}

/// One canonical rack per isomorphism class, sorted by table.
pub fn enumerate_racks(n: usize, cfg: &EnumerationConfig) -> Result<Vec<FiniteRack>, GlRackError> {
    check_order(n, cfg)?;
    let mut classes = BTreeMap::new();
    for op in labeled_racks(n) {
        let c = FiniteRack::from_valid(n, op).canonical();
        classes.entry(c.op.clone()).or_insert(c);
    }
    Ok(classes.into_values().collect())
}

/// One canonical GL-rack per isomorphism class, sorted by canonical form.
///
/// For each rack class, `u` ranges over bijections commuting with every
/// `s_y` and constant on the right argument; `d` is then forced to be
/// `θ⁻¹ ∘ u⁻¹`.
pub fn enumerate_glracks_with(n: usize, cfg: &EnumerationConfig) -> Result<Vec<FiniteGlRack>, GlRackError> {
    let racks = enumerate_racks(n, cfg)?;
    let mut classes: BTreeMap<Vec<usize>, FiniteGlRack> = BTreeMap::new();
    for rack in racks {
        let theta_inv = perm::inverse(&rack.theta());
        for u in perm::all(n) {
            let gl2 = (0..n).all(|x| (0..n).all(|y| u[rack.op(x, y)] == rack.op(u[x], y)));
            let gl3 = (0..n).all(|x| (0..n).all(|y| rack.op(x, u[y]) == rack.op(x, y)));
            if !(gl2 && gl3) {
                continue;
            }
            let d = perm::compose(&theta_inv, &perm::inverse(&u));
            if let Ok(g) = FiniteGlRack::new(rack.clone(), u, d) {
                let c = g.canonical();
                classes.entry(c.flat_key()).or_insert(c);
            }
        }
    }
    Ok(classes.into_values().collect())
}

pub fn enumerate_glracks(n: usize) -> Result<Vec<FiniteGlRack>, GlRackError> {
    enumerate_glracks_with(n, &EnumerationConfig::default())
}

/// Every GL-rack class of order `1..=max`, in order.
pub fn enumerate_glracks_up_to(max: usize) -> Result<Vec<FiniteGlRack>, GlRackError> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate_glracks(n)?);
    }
    Ok(out)
}
