//! Seeded random generators for frames, models, formulas and axiom
//! instances. Every generated frame and model is valid by construction
//! (models after evidence repair), which the tests double-check.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::Bits;
use crate::calculus::{scheme_patterns, Scheme};
use crate::frames::{JstitFrame, Relation, StitFrame, TemporalFrame};
use crate::models::{ConstantSpecification, EvidenceSet, JstitModel, ModelError, Universe};
use crate::semantics::search::act_pattern_ok;
use crate::syntax::{Agent, Formula, Polynomial};

/// Names available to random formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    pub props: Vec<String>,
    pub vars: Vec<String>,
    pub consts: Vec<String>,
    pub agents: usize,
}

impl Default for Vocabulary {
    fn default() -> Self {
        Vocabulary {
            props: vec!["p".into(), "q".into(), "r".into()],
            vars: vec!["x".into(), "y".into()],
            consts: vec!["c".into()],
            agents: 2,
        }
    }
}

/// Random tree on `n` moments named `m0..`; each cover edge is annotated
/// dense with probability `dense`.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize, dense: f64) -> TemporalFrame {
    let parents: Vec<Option<usize>> = (0..n.max(1))
        .map(|i| (i > 0).then(|| rng.gen_range(0..i)))
        .collect();
    let edges: Vec<(usize, usize)> = parents
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (p, i)))
        .filter(|_| rng.gen_bool(dense))
        .collect();
    TemporalFrame::from_parents(&parents)
        .and_then(|t| t.with_density(edges))
        .expect("parent arrays give trees")
}

/// Random coarsening of the undivided classes at `m`.
fn random_partition<R: Rng>(rng: &mut R, classes: &[Bits]) -> Vec<Bits> {
    let k = rng.gen_range(1..=classes.len().max(1));
    let mut blocks = vec![Bits::empty(); k];
    for c in classes {
        let b = rng.gen_range(0..k);
        blocks[b] = blocks[b].union(*c);
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// Random choice partitions; an agent whose draw breaks independence
/// after a few retries keeps the trivial partition.
pub fn random_choices<R: Rng>(rng: &mut R, t: TemporalFrame, agents: usize) -> StitFrame {
    let mut c = StitFrame::trivial(t, agents).expect("agents >= 1");
    for m in c.moments() {
        let classes = c.undivided_classes(m);
        for j in 0..agents {
            let trivial = vec![c.through(m)];
            for _ in 0..4 {
                let cells = random_partition(rng, &classes);
                c.set_choice(m, j, cells).expect("partition of H_m");
                if c.validate().is_ok() {
                    break;
                }
                c.set_choice(m, j, trivial.clone())
                    .expect("trivial partition");
            }
        }
    }
    c
}

/// Preorder containing `base`, with each missing pair added with
/// probability `p` before closing.
pub fn random_preorder_above<R: Rng>(rng: &mut R, base: &Relation, p: f64) -> Relation {
    let n = base.len();
    let mut r = base.clone();
    for a in 0..n {
        for b in 0..n {
            if !r.holds(a, b) && rng.gen_bool(p) {
                r.insert(a, b);
            }
        }
    }
    r.reflexive_transitive_closure()
}

/// Shape of random jstit frames.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameParams {
    pub min_moments: usize,
    pub max_moments: usize,
    pub agents: usize,
    pub dense: f64,
    pub extra_r: f64,
    pub extra_re: f64,
}

impl Default for FrameParams {
    fn default() -> Self {
        FrameParams {
            min_moments: 1,
            max_moments: 6,
            agents: 2,
            dense: 0.0,
            extra_r: 0.05,
            extra_re: 0.1,
        }
    }
}

pub fn random_stit<R: Rng>(rng: &mut R, p: &FrameParams) -> StitFrame {
    let n = rng.gen_range(p.min_moments..=p.max_moments);
    let t = random_tree(rng, n, p.dense);
    random_choices(rng, t, p.agents)
}

/// Random `(R, R_e)` with `⊴ ⊆ R ⊆ R_e` over `c`.
pub fn random_epistemics<R: Rng>(rng: &mut R, c: StitFrame, p: &FrameParams) -> JstitFrame {
    let r = random_preorder_above(rng, c.order(), p.extra_r);
    let re = random_preorder_above(rng, &r, p.extra_re);
    JstitFrame::new(c, r, re)
}

pub fn random_jstit<R: Rng>(rng: &mut R, p: &FrameParams) -> JstitFrame {
    let c = random_stit(rng, p);
    random_epistemics(rng, c, p)
}

pub fn random_polynomial<R: Rng>(rng: &mut R, depth: usize, v: &Vocabulary) -> Polynomial {
    let atom = |rng: &mut R| {
        let pool: Vec<&String> = v.vars.iter().chain(&v.consts).collect();
        Polynomial::atom(pool.choose(rng).map_or("x", |s| s.as_str()))
    };
    if depth == 0 || rng.gen_bool(0.5) {
        return atom(rng);
    }
    match rng.gen_range(0..3) {
        0 => Polynomial::sum(
            random_polynomial(rng, depth - 1, v),
            random_polynomial(rng, depth - 1, v),
        ),
        1 => Polynomial::app(
            random_polynomial(rng, depth - 1, v),
            random_polynomial(rng, depth - 1, v),
        ),
        _ => Polynomial::check(random_polynomial(rng, depth - 1, v)),
    }
}

/// Random core formula of height at most `depth`; proof polynomials have
/// height at most 1.
pub fn random_formula<R: Rng>(rng: &mut R, depth: usize, v: &Vocabulary) -> Formula {
    let prop = |rng: &mut R| Formula::prop(v.props.choose(rng).map_or("p", |s| s.as_str()));
    if depth == 0 {
        return if rng.gen_bool(0.8) {
            prop(rng)
        } else {
            Formula::announced(random_polynomial(rng, 1, v))
        };
    }
    let sub = |rng: &mut R| random_formula(rng, depth - 1, v);
    match rng.gen_range(0..9) {
        0 => prop(rng),
        1 | 2 => Formula::and(sub(rng), sub(rng)),
        3 => Formula::not(sub(rng)),
        4 => Formula::cstit(rng.gen_range(0..v.agents.max(1)), sub(rng)),
        5 => Formula::boxed(sub(rng)),
        6 => Formula::proves(random_polynomial(rng, 1, v), sub(rng)),
        7 => Formula::knows(sub(rng)),
        _ => Formula::announced(random_polynomial(rng, 1, v)),
    }
}

/// Replaces metavariables in a scheme pattern, drawing fresh values on
/// first use.
fn instantiate<R: Rng>(
    rng: &mut R,
    depth: usize,
    v: &Vocabulary,
    fs: &mut BTreeMap<String, Formula>,
    ps: &mut BTreeMap<String, Polynomial>,
    ags: &mut BTreeMap<usize, usize>,
    pat: &Formula,
) -> Formula {
    fn poly<R: Rng>(
        rng: &mut R,
        t: &Polynomial,
        v: &Vocabulary,
        ps: &mut BTreeMap<String, Polynomial>,
    ) -> Polynomial {
        match t {
            Polynomial::Var(name) => ps
                .entry(name.clone())
                .or_insert_with(|| random_polynomial(rng, 1, v))
                .clone(),
            Polynomial::Const(_) => t.clone(),
            Polynomial::Sum(a, b) => Polynomial::sum(poly(rng, a, v, ps), poly(rng, b, v, ps)),
            Polynomial::App(a, b) => Polynomial::app(poly(rng, a, v, ps), poly(rng, b, v, ps)),
            Polynomial::Check(a) => Polynomial::check(poly(rng, a, v, ps)),
        }
    }
    match pat {
        Formula::Prop(name) if name.starts_with(|c: char| c.is_ascii_uppercase()) => {
            if let Some(f) = fs.get(name) {
                return f.clone();
            }
            let f = random_formula(rng, depth, v);
            fs.insert(name.clone(), f.clone());
            f
        }
        Formula::Prop(_) => pat.clone(),
        Formula::And(a, b) => {
            let a = instantiate(rng, depth, v, fs, ps, ags, a);
            Formula::and(a, instantiate(rng, depth, v, fs, ps, ags, b))
        }
        Formula::Not(a) => Formula::not(instantiate(rng, depth, v, fs, ps, ags, a)),
        Formula::Cstit(j, a) => {
            let k = *ags
                .entry(j.0)
                .or_insert_with(|| rng.gen_range(0..v.agents.max(1)));
            Formula::Cstit(
                Agent(k),
                Box::new(instantiate(rng, depth, v, fs, ps, ags, a)),
            )
        }
        Formula::Box(a) => Formula::boxed(instantiate(rng, depth, v, fs, ps, ags, a)),
        Formula::Knows(a) => Formula::knows(instantiate(rng, depth, v, fs, ps, ags, a)),
        Formula::Proves(t, a) => {
            let t = poly(rng, t, v, ps);
            Formula::proves(t, instantiate(rng, depth, v, fs, ps, ags, a))
        }
        Formula::Announced(t) => Formula::announced(poly(rng, t, v, ps)),
    }
}

/// Random instance of `scheme` with metavariables replaced by formulas of
/// height at most `depth`. A0 instances come from the propositional basis.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    scheme: Scheme,
    depth: usize,
    v: &Vocabulary,
) -> Formula {
    if scheme == Scheme::A3 {
        let n = rng.gen_range(1..=v.agents.clamp(1, 3));
        let mut agents: Vec<usize> = (0..v.agents.max(1)).collect();
        agents.shuffle(rng);
        let stits: Vec<Formula> = agents[..n]
            .iter()
            .map(|&j| Formula::cstit(j, random_formula(rng, depth, v)))
            .collect();
        let lhs = Formula::conjunction(stits.iter().cloned().map(Formula::dia).collect())
            .expect("n >= 1");
        let rhs = Formula::dia(Formula::conjunction(stits).expect("n >= 1"));
        return Formula::implies(lhs, rhs);
    }
    let pats = scheme_patterns(scheme);
    let (_, pat) = pats.choose(rng).expect("scheme has patterns");
    instantiate(
        rng,
        depth,
        v,
        &mut BTreeMap::new(),
        &mut BTreeMap::new(),
        &mut BTreeMap::new(),
        pat,
    )
}

/// Per-moment histories presenting one polynomial: random unions of
/// undivided classes, closed upward, kept if the presentation constraints
/// hold; empty after `tries` failed draws.
pub fn random_act_pattern<R: Rng>(rng: &mut R, f: &JstitFrame, p: f64, tries: usize) -> Vec<Bits> {
    let classes: Vec<Vec<Bits>> = f.moments().map(|m| f.undivided_classes(m)).collect();
    for _ in 0..tries {
        let mut pat: Vec<Bits> = classes
            .iter()
            .map(|cs| {
                cs.iter()
                    .filter(|_| rng.gen_bool(p))
                    .fold(Bits::empty(), |a, c| a.union(*c))
            })
            .collect();
        loop {
            let mut changed = false;
            for m1 in f.moments() {
                let mut want = pat[m1];
                for m in f.strict_predecessors(m1).iter() {
                    want = want.union(pat[m].intersection(f.through(m1)));
                }
                for c in &classes[m1] {
                    if !c.intersection(want).is_empty() {
                        want = want.union(*c);
                    }
                }
                if want != pat[m1] {
                    pat[m1] = want;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if act_pattern_ok(f, &pat) {
            return pat;
        }
    }
    vec![Bits::empty(); f.len()]
}

/// Grows `E` to the least extension satisfying monotonicity, the closure
/// conditions inside the universe and CS-normality. A checker whose
/// target formula `t:A` is outside the universe is saturated.
pub fn repair_evidence(model: &mut JstitModel, cs: &ConstantSpecification) {
    let u = model.universe().clone();
    let n = u.poly_count();
    let frame = model.frame().clone();
    let cs_reqs: Vec<(usize, Vec<usize>)> = cs
        .constants()
        .into_iter()
        .filter_map(|c| {
            let i = u.poly_index(&Polynomial::constant(c))?;
            let fs = cs
                .specified(c)
                .iter()
                .filter_map(|a| u.formula_index(a))
                .collect();
            Some((i, fs))
        })
        .collect();
    let mut e: Vec<Vec<EvidenceSet>> = frame
        .moments()
        .map(|m| (0..n).map(|t| model.evidence(m, t).clone()).collect())
        .collect();
    let grow = |slot: &mut EvidenceSet, add: &EvidenceSet| -> bool {
        if add.is_subset(slot) {
            false
        } else {
            *slot = slot.union(add);
            true
        }
    };
    let everything = EvidenceSet::Everything;
    loop {
        let mut changed = false;
        for row in e.iter_mut() {
            for (c, fs) in &cs_reqs {
                let add = EvidenceSet::Finite(fs.iter().copied().collect());
                changed |= grow(&mut row[*c], &add);
            }
            for s in 0..n {
                for t in 0..n {
                    if let Some(st) = u.sum_of(s, t) {
                        let add = row[s].union(&row[t]);
                        changed |= grow(&mut row[st], &add);
                    }
                    if let Some(st) = u.app_of(s, t) {
                        let add = match &row[s] {
                            EvidenceSet::Everything if !row[t].is_empty() => everything.clone(),
                            EvidenceSet::Everything => EvidenceSet::empty(),
                            EvidenceSet::Finite(set) => EvidenceSet::Finite(
                                set.iter()
                                    .filter_map(|&i| {
                                        let (a, b) = u.formula(i).as_implication()?;
                                        row[t]
                                            .contains(u.formula_index(a))
                                            .then(|| u.formula_index(b))
                                            .flatten()
                                    })
                                    .collect(),
                            ),
                        };
                        changed |= grow(&mut row[st], &add);
                    }
                }
                if let Some(bang) = u.check_of(s) {
                    let add = match &row[s] {
                        EvidenceSet::Everything => everything.clone(),
                        EvidenceSet::Finite(set) => {
                            let idx: Option<Vec<usize>> = set
                                .iter()
                                .map(|&i| {
                                    u.formula_index(&Formula::proves(
                                        u.polynomial(s).clone(),
                                        u.formula(i).clone(),
                                    ))
                                })
                                .collect();
                            idx.map_or(everything.clone(), |v| {
                                EvidenceSet::Finite(v.into_iter().collect())
                            })
                        }
                    };
                    changed |= grow(&mut row[bang], &add);
                }
            }
        }
        for (m, m1) in frame.re().pairs().filter(|&(a, b)| a != b) {
            let row = e[m].clone();
            for (t, add) in row.iter().enumerate() {
                changed |= grow(&mut e[m1][t], add);
            }
        }
        if !changed {
            break;
        }
    }
    for (m, row) in e.into_iter().enumerate() {
        for (t, s) in row.into_iter().enumerate() {
            model.set_evidence(m, t, s);
        }
    }
}

/// Knobs for [`random_model`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// chance that a seed `E(m,t)` is `Everything`
    pub everything: f64,
    /// chance that a formula of the universe enters a finite seed
    pub formula: f64,
    /// chance that a polynomial gets a nonempty presentation attempt
    pub present: f64,
    /// chance of each `(m,h)` in a proposition's extension
    pub truth: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            everything: 0.15,
            formula: 0.08,
            present: 0.6,
            truth: 0.5,
        }
    }
}

/// Random model over `frame` and `universe` satisfying every model
/// constraint and CS-normal for `cs`. The default evidence is empty, so
/// constants outside the universe must not be specified.
pub fn random_model<R: Rng>(
    rng: &mut R,
    frame: JstitFrame,
    universe: Universe,
    cs: &ConstantSpecification,
    p: &ModelParams,
) -> Result<JstitModel, ModelError> {
    let mut model = JstitModel::new(frame, universe);
    model.set_evidence_default(EvidenceSet::empty());
    let f = model.frame().clone();
    let u = model.universe().clone();
    let (n, nf) = (u.poly_count(), u.formulas().len());
    for m in f.moments() {
        for t in 0..n {
            let e = if rng.gen_bool(p.everything) {
                EvidenceSet::Everything
            } else {
                EvidenceSet::Finite((0..nf).filter(|_| rng.gen_bool(p.formula)).collect())
            };
            model.set_evidence(m, t, e);
        }
    }
    repair_evidence(&mut model, cs);
    let mut act = vec![vec![Bits::empty(); f.history_count()]; f.len()];
    for t in 0..n {
        if !rng.gen_bool(p.present) {
            continue;
        }
        let density = rng.gen_range(0.05..0.5);
        let pat = random_act_pattern(rng, &f, density, 8);
        for (m, hs) in pat.iter().enumerate() {
            for h in hs.iter() {
                act[m][h].insert(t);
            }
        }
    }
    for (m, h) in f.mh_pairs() {
        model.set_act(m, h, act[m][h])?;
    }
    let props: Vec<String> = u.props().iter().cloned().collect();
    for prop in props {
        let rows = f
            .moments()
            .map(|m| {
                f.through(m)
                    .iter()
                    .filter(|_| rng.gen_bool(p.truth))
                    .collect()
            })
            .collect();
        model.set_valuation(&prop, rows)?;
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{instance_of, is_tautology, CalculusOptions};
    use crate::frames::is_regular;
    use crate::models::validate_model;
    use crate::syntax::parse_formula;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn frames_are_valid() {
        let mut rng = StdRng::seed_from_u64(1);
        let p = FrameParams {
            dense: 0.3,
            ..Default::default()
        };
        for _ in 0..100 {
            let f = random_jstit(&mut rng, &p);
            assert!(f.validate().is_ok(), "{:?}", f.validate());
        }
    }

    #[test]
    fn instances_match_their_scheme() {
        let mut rng = StdRng::seed_from_u64(2);
        let v = Vocabulary::default();
        for s in Scheme::ALL {
            for _ in 0..30 {
                let f = random_instance(&mut rng, s, 2, &v);
                assert!(
                    instance_of(&f, s, CalculusOptions::default()).is_some(),
                    "{s}: {f}"
                );
                if s == Scheme::A0 {
                    assert!(is_tautology(&f));
                }
            }
        }
    }

    #[test]
    fn models_are_valid_and_cs_normal() {
        let mut rng = StdRng::seed_from_u64(3);
        let v = Vocabulary::default();
        let cs = ConstantSpecification::from_formulas([&parse_formula("c : (K p -> p)").unwrap()])
            .unwrap();
        let mut regular = 0;
        for _ in 0..60 {
            let f = random_jstit(
                &mut rng,
                &FrameParams {
                    dense: 0.2,
                    ..Default::default()
                },
            );
            regular += usize::from(is_regular(&f).unwrap());
            let fs: Vec<Formula> = (0..4).map(|_| random_formula(&mut rng, 3, &v)).collect();
            let mut u = Universe::from_formulas(&fs).unwrap();
            for e in cs.entries() {
                u.add_formula(&e.formula()).unwrap();
            }
            let m = random_model(&mut rng, f, u, &cs, &ModelParams::default()).unwrap();
            let d = validate_model(&m, Some(&cs));
            assert!(d.is_ok(), "{d:?}");
        }
        assert!(regular > 0);
    }
}
