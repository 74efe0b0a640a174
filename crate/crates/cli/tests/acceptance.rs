//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact; the only tolerances are the wall-clock
//! limits listed next to each criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use legrack::audit::{theorem1_gate, Verdict};
use legrack::coloring::{closed_form_permutation, count_bruteforce, count_colorings, ColoringError};
use legrack::corpus;
use legrack::frontcode::{
    apply_move, move_instances, stabilize, CuspDir, Event, FrontCode, Role, Sign, Stabilization,
};
use legrack::glrack::{enumerate_glracks, is_homomorphism, mk_permutation_family, perm, FiniteGlRack};
use legrack::presentation::{extract_full, extract_reduced, summarize_code, Presentation};
use legrack_cli::run_capture;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Relation lists as printed for the four example knots, 1-based.
const LISTS: [(&str, char, &[&str]); 4] = [
    ("K1", 'x', &[
        "ud(x1) *^-1 x4 = x2",
        "d^2(x2) *^-1 x5 = x3",
        "ud(x3) *^-1 x1 = x4",
        "d^2(x4) *^-1 x2 = x5",
        "d^2(x5) *^-1 x3 = x1",
    ]),
    ("K2", 'y', &[
        "u(y1) *^-1 y7 = y2",
        "y2 *^-1 y4 = y3",
        "d(y3) *^-1 y7 = y4",
        "y4 *^-1 y1 = y5",
        "d(y5) *^-1 y7 = y6",
        "y6 *^-1 y4 = y7",
        "d(y7) *^-1 y1 = y8",
        "y8 *^-1 y5 = y1",
    ]),
    ("K3", 'x', &[
        "u^2d(x1) * x4 = x2",
        "x2 * x1 = x3",
        "d^2(x3) * x6 = x4",
        "u^2d(x4) * x1 = x5",
        "d(x5) * x4 = x6",
        "u(x6) * x3 = x1",
    ]),
    ("K4", 'y', &[
        "u^2d(y1) * y4 = y2",
        "y2 * y1 = y3",
        "d(y3) * y6 = y4",
        "u^2(y4) * y1 = y5",
        "d(y5) * y4 = y6",
        "ud^2(y6) * y3 = y1",
    ]),
];

/// (ω, p, q) summed straight from the printed relations.
fn oracle_sums(lines: &[&str]) -> (i64, i64, i64) {
    let (mut w, mut p, mut q) = (0, 0, 0);
    for l in lines {
        w += if l.contains("*^-1") { -1 } else { 1 };
        let prefix = l.split('(').next().unwrap();
        if l.contains('(') {
            let mut chars = prefix.chars().peekable();
            while let Some(c) = chars.next() {
                let mut e = 1;
                if chars.peek() == Some(&'^') {
                    chars.next();
                    e = chars.next().unwrap().to_digit(10).unwrap() as i64;
                }
                match c {
                    'u' => p += e,
                    'd' => q += e,
                    _ => panic!("unexpected `{c}` in {l}"),
                }
            }
        }
    }
    (w, p, q)
}

fn cli(args: &[&str]) -> Result<String, String> {
    let mut full = vec!["legrack"];
    full.extend_from_slice(args);
    let (code, out, err) = run_capture(full, "");
    if code == 0 {
        Ok(out)
    } else {
        Err(format!("{args:?} exited {code}: {}", err.trim()))
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn best_presentation(c: &FrontCode) -> Presentation {
    if c.crossing_count() > 0 {
        extract_reduced(c).unwrap().into()
    } else {
        extract_full(c).unwrap().into()
    }
}

fn racks_up_to(n: usize) -> Vec<FiniteGlRack> {
    (1..=n).flat_map(|k| enumerate_glracks(k).unwrap()).collect()
}

fn c1() -> Result<String, String> {
    let k2 = cli(&["color", "corpus:K2.pres", "--rack", "perm:9:1:0"])?;
    let k1 = cli(&["color", "corpus:K1.pres", "--rack", "perm:9:1:0"])?;
    check(k2 == "9\n" && k1 == "0\n", || format!("K2 {k2:?} K1 {k1:?}"))?;
    Ok("Col_Z9(K2) = 9, Col_Z9(K1) = 0".into())
}

fn c2() -> Result<String, String> {
    let inv = |src: &str| -> Result<(i64, i64), String> {
        let out = cli(&["invariants", src])?;
        let get = |k: &str| {
            out.lines()
                .find_map(|l| l.strip_prefix(&format!("{k} ")))
                .and_then(|v| v.parse::<i64>().ok())
                .ok_or_else(|| format!("no {k} in {out:?}"))
        };
        Ok((get("tb")?, get("rot")?))
    };
    for k in ["K3", "K4"] {
        let got = inv(&format!("corpus:{k}"))?;
        check(got == (1, 0), || format!("{k} code gives {got:?}"))?;
        let s = corpus::presentation(k).unwrap().summary().unwrap();
        check((s.tb(), s.rot()) == (Some(1), Some(0)), || format!("{k} presentation gives {s:?}"))?;
    }
    for (k, abs_rot) in [("K1", 3), ("K2", 1)] {
        let lines = LISTS.iter().find(|l| l.0 == k).unwrap().2;
        let (w, p, q) = oracle_sums(lines);
        let (tb, rot) = (w - (p + q) / 2, (q - p) / 2);
        check(tb == -10 && rot.abs() == abs_rot, || format!("{k} oracle gives tb {tb} rot {rot}"))?;
        let got = inv(&format!("corpus:{k}"))?;
        check(got == (tb, rot), || format!("{k} code gives {got:?}, oracle ({tb}, {rot})"))?;
        let s = corpus::presentation(k).unwrap().summary().unwrap();
        check((s.tb(), s.rot()) == (Some(tb), Some(rot)), || format!("{k} presentation gives {s:?}"))?;
    }
    Ok("K3, K4: tb 1 rot 0; K1: tb -10 rot 3; K2: tb -10 rot 1".into())
}

fn c3() -> Result<String, String> {
    for (k, letter, want) in LISTS {
        let out = cli(&["present", &format!("corpus:{k}"), "--pretty", "--letter", &letter.to_string()])?;
        let got: Vec<&str> = out.lines().collect();
        check(got == want, || format!("{k}: got {got:?}"))?;
    }
    Ok("K1, K2, K3, K4 relation lists reproduced verbatim".into())
}

fn random_code(rng: &mut StdRng) -> FrontCode {
    let crossings = rng.gen_range(0..=10u32);
    let cusps = 2 * rng.gen_range(1..=6);
    let mut evs = Vec::new();
    for c in 1..=crossings {
        let s = if rng.gen() { Sign::Pos } else { Sign::Neg };
        evs.push(Event::pass(c, Role::Over, s));
        evs.push(Event::pass(c, Role::Under, s));
    }
    for _ in 0..cusps {
        evs.push(Event::Cusp(if rng.gen() { CuspDir::Up } else { CuspDir::Down }));
    }
    evs.shuffle(rng);
    FrontCode::new("random", evs)
}

fn c4() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(20240601);
    for i in 0..200 {
        let c = random_code(&mut rng);
        let ci = c.classical_invariants().map_err(|e| format!("code {i}: {e}"))?;
        let s = summarize_code(&c).map_err(|e| format!("code {i}: {e}"))?;
        let (w, p, q) = (s.omega, s.p as i64, s.q as i64);
        check(ci.tb == w - (p + q) / 2 && ci.rot == (q - p) / 2 && (p + q) % 2 == 0, || {
            format!("code {i} `{}`: tb {} rot {} vs summary {s:?}", c.to_text().trim(), ci.tb, ci.rot)
        })?;
    }
    Ok("200 random codes, seed 20240601".into())
}

/// Bundled presentations and both presentations of every bundled code, each
/// with a smaller equivalent presentation to brute-force when it is too big.
fn all_presentations() -> Vec<(String, Presentation, Option<Presentation>)> {
    let mut out: Vec<(String, Presentation, Option<Presentation>)> =
        corpus::presentations().into_iter().map(|(n, p)| (n.to_string(), p, None)).collect();
    for c in corpus::codes() {
        let reduced: Option<Presentation> = extract_reduced(&c).ok().map(Into::into);
        out.push((format!("{} full", c.name), extract_full(&c).unwrap().into(), reduced.clone()));
        if let Some(r) = reduced {
            out.push((format!("{} reduced", c.name), r, None));
        }
    }
    out
}

fn c5() -> Result<String, String> {
    let racks = racks_up_to(3);
    let (mut brute, mut via_reduced, mut closed) = (0, 0, 0);
    for (name, p, smaller) in all_presentations() {
        for (i, x) in racks.iter().enumerate() {
            let fast = count_colorings(&p, x).map_err(|e| e.to_string())?.count;
            let b = match count_bruteforce(&p, x) {
                Ok(b) => {
                    brute += 1;
                    b
                }
                Err(ColoringError::BudgetExceeded { .. }) if smaller.is_some() => {
                    via_reduced += 1;
                    count_bruteforce(smaller.as_ref().unwrap(), x).map_err(|e| format!("{name}: {e}"))?
                }
                Err(e) => return Err(format!("{name}: {e}")),
            };
            check(b.count == fast, || format!("{name} rack {i}: engine {fast}, brute force {}", b.count))?;
        }
        let s = p.summary().map_err(|e| e.to_string())?;
        for k in 1..=12u64 {
            for (a, b) in [(1, 0), (0, 1), (2, -1)] {
                let x = mk_permutation_family(k as usize, a, b).unwrap();
                let fast = count_colorings(&p, &x).map_err(|e| e.to_string())?.count;
                let cf = closed_form_permutation(&s, k, a, b).map_err(|e| e.to_string())?;
                check(fast == cf, || format!("{name} k={k} a={a} b={b}: engine {fast}, closed form {cf}"))?;
                closed += 1;
            }
        }
    }
    Ok(format!(
        "{brute} direct brute-force comparisons, {via_reduced} against brute force on the reduced form, {closed} closed-form comparisons"
    ))
}

fn c6() -> Result<String, String> {
    let mut racks = racks_up_to(3);
    for (a, b) in [(1, 0), (0, 1), (2, -1)] {
        racks.push(mk_permutation_family(9, a, b).unwrap());
    }
    let profile = |c: &FrontCode| -> Vec<u64> {
        let p = best_presentation(c);
        racks.iter().map(|x| count_colorings(&p, x).unwrap().count).collect()
    };
    let (mut moves, mut stabs) = (0, 0);
    for c in corpus::codes() {
        let ci = c.classical_invariants().unwrap();
        let before = profile(&c);
        for m in move_instances(&c) {
            let after = apply_move(&c, &m).map_err(|e| format!("{} {m}: {e}", c.name))?;
            let ai = after.classical_invariants().unwrap();
            check((ai.tb, ai.rot) == (ci.tb, ci.rot), || format!("{} {m}: (tb, rot) changed", c.name))?;
            check(profile(&after) == before, || format!("{} {m}: colorings changed", c.name))?;
            moves += 1;
        }
        for site in 0..=c.len() {
            for (kind, drot) in [(Stabilization::Plus, 1), (Stabilization::Minus, -1)] {
                let s = stabilize(&c, kind, site).unwrap().classical_invariants().unwrap();
                check((s.tb, s.rot) == (ci.tb - 1, ci.rot + drot), || {
                    format!("{} {kind:?} at {site}: ({}, {})", c.name, s.tb, s.rot)
                })?;
                stabs += 1;
            }
        }
    }
    Ok(format!("{moves} move instances, {stabs} stabilizations"))
}

fn c7() -> Result<String, String> {
    let out = cli(&["gate", "corpus:K1.pres", "corpus:K2.pres"])?;
    check(out.starts_with("verdict CertifiedDistinct\n"), || out.clone())?;
    let w = out.lines().find_map(|l| l.strip_prefix("witness ")).ok_or("no witness line")?;
    let field = |k: &str| w.split(' ').find_map(|f| f.strip_prefix(&format!("{k}="))).unwrap().to_string();
    let k: usize = field("k").parse().unwrap();
    let a: i64 = field("a").parse().unwrap();
    let b: i64 = field("b").parse().unwrap();
    let counts: Vec<u64> = field("counts").split(',').map(|c| c.parse().unwrap()).collect();
    let x = mk_permutation_family(k, a, b).unwrap();
    let e1 = count_colorings(&corpus::presentation("K1").unwrap(), &x).unwrap().count;
    let e2 = count_colorings(&corpus::presentation("K2").unwrap(), &x).unwrap().count;
    check(counts == [e1, e2] && e1 != e2, || format!("witness {w}, engine gives {e1},{e2}"))?;
    for (a, b) in [("corpus:K3.pres", "corpus:K4.pres"), ("corpus:K3", "corpus:K4")] {
        let out = cli(&["gate", a, b])?;
        check(out.starts_with("verdict SameInvariants\n"), || format!("{a} {b}: {out}"))?;
    }
    let mut entries: Vec<String> = corpus::code_names().iter().map(|n| format!("corpus:{n}")).collect();
    entries.extend(corpus::presentation_names().iter().map(|n| format!("corpus:{n}")));
    for e in &entries {
        let out = cli(&["gate", e, e])?;
        check(out.starts_with("verdict SameInvariants\n"), || format!("{e}: {out}"))?;
    }
    // the report on summaries agrees with the CLI
    let s1 = corpus::presentation("K1").unwrap().summary().unwrap();
    let s2 = corpus::presentation("K2").unwrap().summary().unwrap();
    check(theorem1_gate(&s1, &s2).unwrap().verdict == Verdict::CertifiedDistinct, || "library verdict".into())?;
    Ok(format!("K1/K2 witness {w}; K3/K4 same; {} self-comparisons", entries.len()))
}

fn c8() -> Result<String, String> {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let xs = enumerate_glracks(n).map_err(|e| e.to_string())?;
        counts.push(xs.len());
        for (i, x) in xs.iter().enumerate() {
            let (u, d) = (x.u(), x.d());
            let theta_inv = perm::inverse(&x.theta());
            let u_inv = perm::inverse(u);
            let tag = || format!("order {n} class {i}");
            for a in 0..n {
                check(u[d[a]] == d[u[a]], || format!("{}: ud != du at {a}", tag()))?;
                check(x.op(u[d[a]], a) == a, || format!("{}: ud(x)*x != x at {a}", tag()))?;
                check(d[a] == theta_inv[u_inv[a]], || format!("{}: d != θ⁻¹u⁻¹ at {a}", tag()))?;
            }
            check(is_homomorphism(u, x, x) && perm::is_permutation(u), || format!("{}: u", tag()))?;
            check(is_homomorphism(d, x, x) && perm::is_permutation(d), || format!("{}: d", tag()))?;
            let ud_id = (0..n).all(|a| u[d[a]] == a);
            check(x.rack().is_quandle() == ud_id, || format!("{}: quandle iff ud = id", tag()))?;
        }
    }
    check(counts == [1, 4, 13, 62], || format!("class counts {counts:?}"))?;
    Ok(format!("class counts by order 1..4: {counts:?}"))
}

fn main() {
    type Criterion = (u32, &'static str, u64, fn() -> Result<String, String>);
    let criteria: [Criterion; 8] = [
        (1, "Z9 coloring counts", 1, c1),
        (2, "classical invariants", 1, c2),
        (3, "presentation fidelity", 5, c3),
        (4, "formula cross-check on random codes", 5, c4),
        (5, "oracle equivalence", 60, c5),
        (6, "move and stabilization invariance", 60, c6),
        (7, "comparison gate", 5, c7),
        (8, "algebra property suite", 60, c8),
    ];
    let mut failed = 0;
    for (n, title, limit, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f));
        let took = start.elapsed();
        let outcome = match result {
            Ok(Ok(detail)) if took <= Duration::from_secs(limit) => Ok(detail),
            Ok(Ok(detail)) => Err(format!("over the time limit; {detail}")),
            Ok(Err(e)) => Err(e),
            Err(p) => Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into())),
        };
        let secs = took.as_secs_f64();
        match outcome {
            Ok(d) => println!("criterion {n} PASS {title} [{secs:.2}s <= {limit}s] {d}"),
            Err(e) => {
                failed += 1;
                println!("criterion {n} FAIL {title} [{secs:.2}s, limit {limit}s] {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
