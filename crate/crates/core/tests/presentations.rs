mod common;

use common::{arb_code, code};
use legrack::corpus;
use legrack::glrack::{enumerate_glracks_up_to, is_homomorphism, FiniteGlRack};
use legrack::presentation::*;
use proptest::prelude::*;

#[test]
fn bundled_codes_reproduce_transcribed_lists() {
    for k in ["K1", "K2", "K3", "K4"] {
        let c = corpus::code(k).unwrap();
        let want = corpus::presentation(k).unwrap();
        let got = extract_reduced(&c).unwrap();
        assert_eq!(Presentation::Reduced(got.clone()), want, "{k}");
        assert_eq!(reduce(&extract_full(&c).unwrap()).unwrap(), got, "{k}");
    }
}

#[test]
fn transcribed_summaries() {
    let s = |k| corpus::presentation(k).unwrap().summary().unwrap();
    let tuple = |s: PresentationSummary| (s.omega, s.p, s.q, s.gens);
    assert_eq!(tuple(s("K1")), (-5, 2, 8, 5));
    assert_eq!(tuple(s("K2")), (-8, 1, 3, 8));
    assert_eq!(tuple(s("K3")), (6, 5, 5, 6));
    assert_eq!(tuple(s("K4")), (6, 5, 5, 6));
}

#[test]
fn pretty_printing_of_k3() {
    let rp = extract_reduced(&corpus::code("K3").unwrap()).unwrap();
    assert_eq!(rp.pretty('x')[0], "u^2d(x1) * x4 = x2");
    let rp = extract_reduced(&corpus::code("K1").unwrap()).unwrap();
    assert_eq!(rp.pretty('x')[0], "ud(x1) *^-1 x4 = x2");
}

#[test]
fn words_satisfy_the_defining_relations() {
    let g = || Word::gen(0);
    let h = || Word::gen(1);
    let rules: Vec<(Word, Word)> = vec![
        (Word::u(Word::d(Word::star(g(), g()))), g()),
        (Word::d(Word::u(Word::star(g(), g()))), g()),
        (Word::star_inv(Word::star(g(), h()), h()), g()),
        (Word::star(Word::star_inv(g(), h()), h()), g()),
        (Word::star(g(), Word::u(h())), Word::star(g(), h())),
        (Word::star(g(), Word::d(h())), Word::star(g(), h())),
        (Word::u(Word::star(g(), h())), Word::star(Word::u(g()), h())),
        (Word::d(Word::star(g(), h())), Word::star(Word::d(g()), h())),
    ];
    for x in enumerate_glracks_up_to(4).unwrap() {
        for a in 0..x.order() {
            for b in 0..x.order() {
                for (l, r) in &rules {
                    assert_eq!(eval_word(l, &x, &[a, b]), eval_word(r, &x, &[a, b]));
                }
            }
        }
    }
}

#[test]
fn eval_commutes_with_homomorphisms() {
    let w = Word::u(Word::star_inv(Word::d(Word::gen(0)), Word::star(Word::gen(1), Word::gen(2))));
    let xs: Vec<FiniteGlRack> = enumerate_glracks_up_to(3).unwrap();
    for x in &xs {
        for y in &xs {
            let n = x.order();
            // every map X -> Y
            for code in 0..y.order().pow(n as u32) {
                let f: Vec<usize> = (0..n).map(|i| code / y.order().pow(i as u32) % y.order()).collect();
                if !is_homomorphism(&f, x, y) {
                    continue;
                }
                for a in 0..n.pow(3) {
                    let asg = [a % n, a / n % n, a / n / n];
                    let fa: Vec<usize> = asg.iter().map(|&v| f[v]).collect();
                    assert_eq!(f[eval_word(&w, x, &asg).unwrap()], eval_word(&w, y, &fa).unwrap());
                }
            }
        }
    }
}

#[test]
fn corpus_round_trips() {
    for c in corpus::codes() {
        assert_eq!(legrack::FrontCode::parse(&c.to_text()).unwrap(), c);
        let fp = extract_full(&c).unwrap();
        assert_eq!(Presentation::parse(&fp.to_text()).unwrap(), Presentation::Full(fp));
    }
    for (_, p) in corpus::presentations() {
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
    }
}

#[test]
fn full_presentation_shape() {
    let c = code("cd x1u- cd x2u+ cu x2o+ x1o- cu");
    let fp = extract_full(&c).unwrap();
    assert_eq!(fp.relations.len(), 6);
    assert!(fp.check().is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn summary_matches_classical_invariants(c in arb_code(10, 12)) {
        let ci = c.classical_invariants().unwrap();
        let s = summarize_code(&c).unwrap();
        prop_assert_eq!(s.cusps as usize, c.cusp_count());
        prop_assert_eq!(s.p as usize, ci.up_cusps);
        prop_assert_eq!(s.q as usize, ci.down_cusps);
        if c.crossing_count() > 0 {
            prop_assert_eq!(s.omega, ci.writhe);
        }
        prop_assert_eq!(s.tb(), Some(ci.tb));
        prop_assert_eq!(s.rot(), Some(ci.rot));
    }

    #[test]
    fn full_reduces_to_reduced(c in arb_code(8, 10)) {
        let fp = extract_full(&c).unwrap();
        prop_assert_eq!(fp.relations.len(), c.cusp_count() + c.crossing_count());
        prop_assert!(fp.check().is_ok());
        if c.crossing_count() > 0 {
            prop_assert_eq!(reduce(&fp).unwrap(), extract_reduced(&c).unwrap());
        } else {
            prop_assert_eq!(reduce(&fp), Err(PresentationError::NoCrossings));
        }
    }

    #[test]
    fn base_point_independence(c in arb_code(8, 10), shift in 0usize..40) {
        prop_assume!(c.crossing_count() > 0);
        let rp = extract_reduced(&c).unwrap();
        let rot = c.rotated(shift);
        let rq = extract_reduced(&rot).unwrap();
        prop_assert_eq!(summarize(&rp), summarize(&rq));
        // the first under-pass of the rotated code is some under-pass of the original
        let m = rp.gens;
        prop_assert!((0..m).any(|s| rp.rotated(s) == rq));
    }
}
