#![allow(dead_code)]

use legrack::frontcode::{CuspDir, Event, FrontCode, Role, Sign};
use legrack::glrack::{enumerate_glracks_up_to, mk_permutation_family, FiniteGlRack};
use proptest::collection::vec;
use proptest::prelude::*;

/// Valid codes with up to `max_cross` crossings and `2..=max_cusps` cusps.
pub fn arb_code(max_cross: usize, max_cusps: usize) -> impl Strategy<Value = FrontCode> {
    (0..=max_cross, 1..=max_cusps / 2)
        .prop_flat_map(|(c, half)| (vec(any::<bool>(), c), vec(any::<bool>(), 2 * half)))
        .prop_flat_map(|(signs, cusps)| {
            let mut evs = Vec::new();
            for (i, &pos) in signs.iter().enumerate() {
                let sign = if pos { Sign::Pos } else { Sign::Neg };
                evs.push(Event::pass(i as u32 + 1, Role::Over, sign));
                evs.push(Event::pass(i as u32 + 1, Role::Under, sign));
            }
            for &up in &cusps {
                evs.push(Event::Cusp(if up { CuspDir::Up } else { CuspDir::Down }));
            }
            Just(evs).prop_shuffle().prop_map(|e| FrontCode::new("random", e))
        })
}

pub fn code(s: &str) -> FrontCode {
    FrontCode::parse(&format!("knot t\ncode {s}\n")).unwrap()
}

pub fn small_racks() -> Vec<FiniteGlRack> {
    enumerate_glracks_up_to(3).unwrap()
}

/// `(Z_k, σ^-a, σ^-b)` for `k <= 12` and the three exponent pairs.
pub fn permutation_family() -> Vec<(u64, i64, i64, FiniteGlRack)> {
    let mut out = Vec::new();
    for k in 1..=12u64 {
        for (a, b) in [(1, 0), (0, 1), (2, -1)] {
            out.push((k, a, b, mk_permutation_family(k as usize, a, b).unwrap()));
        }
    }
    out
}
