//! Shared fixtures for the criterion benches.

use jstit::gen::{
    random_formula, random_jstit, random_model, FrameParams, ModelParams, Vocabulary,
};
use jstit::{ConstantSpecification, Formula, JstitFrame, JstitModel, Universe};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Deterministic random jstit frames with exactly `n` moments.
pub fn frames(n: usize, count: usize, dense: f64) -> Vec<JstitFrame> {
    let mut rng = StdRng::seed_from_u64(n as u64);
    let p = FrameParams {
        min_moments: n,
        max_moments: n,
        dense,
        ..Default::default()
    };
    (0..count).map(|_| random_jstit(&mut rng, &p)).collect()
}

/// A model on a random `n`-moment frame together with formulas of height
/// `depth` it interprets.
pub fn model(n: usize, depth: usize, formulas: usize) -> (JstitModel, Vec<Formula>) {
    let mut rng = StdRng::seed_from_u64(1000 + n as u64);
    let v = Vocabulary::default();
    let fs: Vec<Formula> = (0..formulas)
        .map(|_| random_formula(&mut rng, depth, &v))
        .collect();
    let frame = frames(n, 1, 0.2).pop().expect("one frame");
    let u = Universe::from_formulas(&fs).expect("small universe");
    let m = random_model(
        &mut rng,
        frame,
        u,
        &ConstantSpecification::empty(),
        &ModelParams::default(),
    )
    .expect("generated model");
    (m, fs)
}
