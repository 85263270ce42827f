//! Every axiom instance is valid in every validated CS-normal model over a
//! regular frame.

use jstit::calculus::scheme_patterns;
use jstit::gen::{
    random_instance, random_jstit, random_model, FrameParams, ModelParams, Vocabulary,
};
use jstit::{
    is_regular, parse_formula, valid_in_model, validate_model, ConstantSpecification, Scheme,
    Universe,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn axioms_valid_on_regular_models() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let v = Vocabulary::default();
    let cs = ConstantSpecification::from_formulas([
        &parse_formula("c : (K p -> p)").unwrap(),
        &parse_formula("c : (Box E x -> K Box E x)").unwrap(),
    ])
    .unwrap();
    let params = FrameParams {
        max_moments: 7,
        dense: 0.15,
        ..Default::default()
    };
    let mut checked = [0usize; 10];
    let mut models = 0;
    while models < 200 {
        let frame = random_jstit(&mut rng, &params);
        if !is_regular(&frame).unwrap() {
            continue;
        }
        let instances: Vec<_> = Scheme::ALL
            .iter()
            .map(|&s| (s, random_instance(&mut rng, s, 2, &v)))
            .collect();
        let mut u = Universe::new();
        for (_, f) in &instances {
            u.add_formula(f).unwrap();
        }
        for e in cs.entries() {
            u.add_formula(&e.formula()).unwrap();
        }
        let model = random_model(&mut rng, frame, u, &cs, &ModelParams::default()).unwrap();
        let d = validate_model(&model, Some(&cs));
        assert!(d.is_ok(), "{d:?}");
        for (s, f) in &instances {
            let (ok, at) = valid_in_model(&model, f).unwrap();
            assert!(ok, "{s} instance {f} fails at {at:?}");
            checked[*s as usize] += 1;
        }
        models += 1;
    }
    assert!(checked.iter().all(|&n| n >= 50));
    assert!(!scheme_patterns(Scheme::A0).is_empty());
}
