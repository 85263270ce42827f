//! Library results against the brute-force oracles, plus property tests.

mod common;

use common::{rd_oracle, truth_table_tautology, NaiveEval, Oracle};
use jstit::calculus::{is_tautology, rd_literals};
use jstit::frames::classify::has_next_below;
use jstit::gen::{
    random_formula, random_jstit, random_model, random_stit, random_tree, FrameParams, ModelParams,
    Vocabulary,
};
use jstit::semantics::Evaluator;
use jstit::{
    frames::is_unirelational, is_mixsucc, is_regular, match_rd, parse_formula, render, theta,
    Agent, ConstantSpecification, Formula, JstitFrame, Polynomial, Universe,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn poly() -> impl Strategy<Value = Polynomial> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["x", "y", "z1"]).prop_map(Polynomial::var),
        prop::sample::select(vec!["c", "c2"]).prop_map(Polynomial::constant),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(s, t)| Polynomial::sum(s, t)),
            (inner.clone(), inner.clone()).prop_map(|(s, t)| Polynomial::app(s, t)),
            inner.prop_map(Polynomial::check),
        ]
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["p", "q", "r7"]).prop_map(Formula::prop),
        poly().prop_map(Formula::announced),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            inner.clone().prop_map(Formula::not),
            (0usize..2, inner.clone()).prop_map(|(j, a)| Formula::Cstit(Agent(j), Box::new(a))),
            inner.clone().prop_map(Formula::boxed),
            inner.clone().prop_map(Formula::knows),
            (poly(), inner).prop_map(|(t, a)| Formula::proves(t, a)),
        ]
    })
}

fn frame(seed: u64, dense: f64) -> JstitFrame {
    let p = FrameParams {
        max_moments: 7,
        dense,
        ..Default::default()
    };
    random_jstit(&mut StdRng::seed_from_u64(seed), &p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_inverts_render(f in formula()) {
        prop_assert_eq!(parse_formula(&render(&f)).unwrap(), f);
    }

    #[test]
    fn tautology_matches_truth_tables(f in formula()) {
        let atoms = {
            let mut v = Vec::new();
            jstit::calculus::boolean_atoms(&f).into_iter().for_each(|a| if !v.contains(&a) { v.push(a) });
            v.len()
        };
        prop_assume!(atoms < 14);
        prop_assert_eq!(is_tautology(&f), truth_table_tautology(&f));
        let g = Formula::or(f.clone(), Formula::not(f.clone()));
        prop_assert!(is_tautology(&g));
    }

    #[test]
    fn theta_members_have_predecessors(seed in any::<u64>()) {
        let f = frame(seed, 0.3);
        for m in f.moments() {
            for s in theta(&f, m).unwrap() {
                for x in s.iter() {
                    prop_assert!(!f.strict_predecessors(x).is_empty());
                }
            }
        }
    }

    #[test]
    fn mixsucc_unirelational_frames_are_regular(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let c = random_stit(&mut rng, &FrameParams { max_moments: 7, dense: 0.3, ..Default::default() });
        prop_assume!(is_mixsucc(&c));
        let f = JstitFrame::temporal_epistemics(c);
        prop_assert!(is_unirelational(&f));
        prop_assert!(is_regular(&f).unwrap());
    }

    #[test]
    fn unirelational_is_relation_equality(seed in any::<u64>()) {
        let f = frame(seed, 0.0);
        prop_assert_eq!(is_unirelational(&f), f.r() == f.re());
    }

    #[test]
    fn next_is_cover_without_annotations(seed in any::<u64>(), n in 1usize..9) {
        let t = random_tree(&mut StdRng::seed_from_u64(seed), n, 0.0);
        for a in t.moments() {
            for b in t.moments() {
                let cover = t.lt(a, b) && !t.moments().any(|c| t.lt(a, c) && t.lt(c, b));
                prop_assert_eq!(t.next(a, b), cover);
                prop_assert_eq!(has_next_below(&t, a, b), t.lt(a, b));
            }
        }
    }

    #[test]
    fn frame_classifiers_match_oracle(seed in any::<u64>()) {
        let f = frame(seed, 0.25);
        let o = Oracle::new(&f);
        prop_assert_eq!(is_mixsucc(&f), o.mixsucc());
        prop_assert_eq!(is_regular(&f).unwrap(), o.regular());
        for m in f.moments() {
            let lib: Vec<u64> = theta(&f, m).unwrap().into_iter().map(|b| b.0).collect();
            prop_assert_eq!(lib, o.theta(m));
        }
    }

    #[test]
    fn rd_matches_all_orderings(
        prem in prop::collection::vec((any::<bool>(), 0usize..3), 1..4),
        concl in prop::collection::vec((any::<bool>(), 0usize..3), 1..4),
        shuffle in any::<bool>(),
    ) {
        let ts = [Polynomial::var("x"), Polynomial::var("y"), Polynomial::constant("c")];
        let lits = |v: &[(bool, usize)]| -> Vec<(bool, Polynomial)> {
            v.iter().map(|&(n, i)| (n, ts[i].clone())).collect()
        };
        let prem = lits(&prem);
        let mut concl = lits(&concl);
        if shuffle {
            concl = prem.iter().rev().cloned().collect();
        }
        let k = Formula::knows(parse_formula("p").unwrap());
        let build = |v: &[(bool, Polynomial)], boxed: bool| {
            let items = v.iter().map(|(n, t)| {
                let e = Formula::announced(t.clone());
                let e = if boxed { Formula::boxed(e) } else { e };
                if *n { Formula::not(e) } else { e }
            }).collect();
            Formula::implies(k.clone(), Formula::disjunction(items).unwrap())
        };
        let (pf, cf) = (build(&prem, true), build(&concl, false));
        prop_assert_eq!(rd_literals(pf.as_implication().unwrap().1, true), Some(prem.clone()));
        prop_assert_eq!(match_rd(&pf, &cf), rd_oracle(&prem, &concl));
    }
}

#[test]
fn satisfies_matches_naive_evaluator() {
    let mut rng = StdRng::seed_from_u64(17);
    let v = Vocabulary::default();
    let cs = ConstantSpecification::empty();
    for i in 0..150 {
        let f = frame(i, 0.3);
        let formulas: Vec<Formula> = (0..4).map(|_| random_formula(&mut rng, 3, &v)).collect();
        let u = Universe::from_formulas(&formulas).unwrap();
        let model = random_model(&mut rng, f, u, &cs, &ModelParams::default()).unwrap();
        let lib = Evaluator::new(&model);
        let naive = NaiveEval::new(&model);
        for g in &formulas {
            assert_eq!(lib.truth_sets(g).unwrap(), naive.truth_sets(g), "{g}");
        }
    }
}

#[test]
fn oracle_histories_match_library() {
    for i in 0..100 {
        let f = frame(i, 0.2);
        let o = Oracle::new(&f);
        let mut lib: Vec<u64> = f.histories().iter().map(|h| h.0).collect();
        let mut ours = o.hists.clone();
        lib.sort();
        ours.sort();
        assert_eq!(lib, ours);
        for a in f.moments() {
            for b in f.moments() {
                assert_eq!(f.next(a, b), o.next(a, b));
            }
        }
    }
}
