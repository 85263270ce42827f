use super::{ConstantSpecification, EvidenceSet, JstitModel};
use crate::bits::Bits;
use crate::diag::{Constraint, Diagnostics, Violation};
use crate::syntax::{Formula, Polynomial};

const SKIP_EXAMPLES: usize = 6;

/// Checks the `Act`/`E` constraints of a jstit model, and CS-normality when
/// `cs` is given. Frame constraints are checked by the frame validators.
///
/// On annotated frames, "no new proofs guaranteed" is discharged at every
/// moment entered by an annotated edge: its virtual predecessors carry
/// `Act_m` on every history.
pub fn validate_model(model: &JstitModel, cs: Option<&ConstantSpecification>) -> Diagnostics {
    let mut d = Diagnostics::new();
    check_evidence_monotonicity(model, &mut d);
    check_evidence_closure(model, &mut d);
    check_act(model, &mut d);
    if let Some(cs) = cs {
        check_cs_normality(model, cs, &mut d);
    }
    d
}

fn poly_name(model: &JstitModel, t: usize) -> String {
    model.universe().polynomial(t).to_string()
}

fn formula_name(model: &JstitModel, i: usize) -> String {
    model.universe().formula(i).to_string()
}

fn finite(e: &EvidenceSet) -> Option<&std::collections::BTreeSet<usize>> {
    match e {
        EvidenceSet::Finite(s) => Some(s),
        EvidenceSet::Everything => None,
    }
}

/// A formula in `a` but not in `b`, rendered; `a ⊄ b` is assumed.
fn missing(model: &JstitModel, a: &EvidenceSet, b: &EvidenceSet) -> String {
    match (finite(a), finite(b)) {
        (Some(a), Some(b)) => a
            .difference(b)
            .next()
            .map(|&i| formula_name(model, i))
            .unwrap_or_default(),
        _ => "(every formula)".to_string(),
    }
}

fn check_evidence_monotonicity(model: &JstitModel, d: &mut Diagnostics) {
    let f = model.frame();
    for (m, m1) in f.re().pairs().filter(|&(a, b)| a != b) {
        for t in 0..model.universe().poly_count() {
            let (a, b) = (model.evidence(m, t), model.evidence(m1, t));
            if !a.is_subset(b) {
                d.push(
                    Violation::new(Constraint::MonotonicityOfEvidence)
                        .with("m", f.name(m))
                        .with("m1", f.name(m1))
                        .with("t", poly_name(model, t))
                        .with("A", missing(model, a, b)),
                );
            }
        }
    }
}

fn check_evidence_closure(model: &JstitModel, d: &mut Diagnostics) {
    let f = model.frame();
    let u = model.universe();
    let n = u.poly_count();
    let mut skipped: Vec<String> = Vec::new();
    let nonempty = |m: usize, t: usize| !model.evidence(m, t).is_empty();
    for s in 0..n {
        for t in 0..n {
            let (ps, pt) = (u.polynomial(s).clone(), u.polynomial(t).clone());
            match u.app_of(s, t) {
                Some(st) => {
                    for m in f.moments() {
                        if let Some(v) = app_violation(model, m, s, t, st) {
                            d.push(v);
                        }
                    }
                }
                None if f.moments().any(|m| nonempty(m, s) && nonempty(m, t)) => {
                    skipped.push(Polynomial::app(ps.clone(), pt.clone()).to_string());
                }
                None => {}
            }
            match u.sum_of(s, t) {
                Some(st) => {
                    for m in f.moments() {
                        let target = model.evidence(m, st);
                        for part in [s, t] {
                            let e = model.evidence(m, part);
                            if !e.is_subset(target) {
                                d.push(
                                    Violation::new(Constraint::SumClosure)
                                        .with("m", f.name(m))
                                        .with("s", poly_name(model, s))
                                        .with("t", poly_name(model, t))
                                        .with("A", missing(model, e, target)),
                                );
                            }
                        }
                    }
                }
                None if f.moments().any(|m| nonempty(m, s) || nonempty(m, t)) => {
                    skipped.push(Polynomial::sum(ps, pt).to_string());
                }
                None => {}
            }
        }
        match u.check_of(s) {
            Some(bang) => {
                for m in f.moments() {
                    if let Some(v) = check_violation(model, m, s, bang) {
                        d.push(v);
                    }
                }
            }
            None if f.moments().any(|m| nonempty(m, s)) => {
                skipped.push(Polynomial::check(u.polynomial(s).clone()).to_string());
            }
            None => {}
        }
    }
    if !skipped.is_empty() {
        let shown: Vec<&str> = skipped
            .iter()
            .take(SKIP_EXAMPLES)
            .map(String::as_str)
            .collect();
        let more = if skipped.len() > SKIP_EXAMPLES {
            ", ..."
        } else {
            ""
        };
        d.warn(format!(
            "evidence closure not checked for {} composite(s) outside the universe: {}{more}",
            skipped.len(),
            shown.join(", ")
        ));
    }
}

/// `A → B ∈ E(m,s) ∧ A ∈ E(m,t) ⇒ B ∈ E(m,s×t)`
fn app_violation(model: &JstitModel, m: usize, s: usize, t: usize, st: usize) -> Option<Violation> {
    let u = model.universe();
    let target = model.evidence(m, st);
    if target.is_everything() {
        return None;
    }
    let (es, et) = (model.evidence(m, s), model.evidence(m, t));
    let violation = |a: String, b: String| {
        Violation::new(Constraint::ApplicationClosure)
            .with("m", model.frame().name(m))
            .with("s", poly_name(model, s))
            .with("t", poly_name(model, t))
            .with("A", a)
            .with("B", b)
    };
    match finite(es) {
        None => {
            // every implication is evidenced by s
            let a = match finite(et) {
                None => Some("(every formula)".to_string()),
                Some(set) => set.iter().next().map(|&i| formula_name(model, i)),
            };
            a.map(|a| violation(a, "(every formula)".to_string()))
        }
        Some(set) => set.iter().find_map(|&i| {
            let (a, b) = u.formula(i).as_implication()?;
            if et.contains(u.formula_index(a)) && !target.contains(u.formula_index(b)) {
                Some(violation(a.to_string(), b.to_string()))
            } else {
                None
            }
        }),
    }
}

/// `A ∈ E(m,t) ⇒ t:A ∈ E(m,!t)`
fn check_violation(model: &JstitModel, m: usize, t: usize, bang: usize) -> Option<Violation> {
    let u = model.universe();
    let target = model.evidence(m, bang);
    if target.is_everything() {
        return None;
    }
    let violation = |a: String| {
        Violation::new(Constraint::CheckerClosure)
            .with("m", model.frame().name(m))
            .with("t", poly_name(model, t))
            .with("A", a)
    };
    match finite(model.evidence(m, t)) {
        None => Some(violation("(every formula)".to_string())),
        Some(set) => set.iter().find_map(|&i| {
            let a = u.formula(i);
            let ta = Formula::proves(u.polynomial(t).clone(), a.clone());
            (!target.contains(u.formula_index(&ta))).then(|| violation(a.to_string()))
        }),
    }
}

fn check_act(model: &JstitModel, d: &mut Diagnostics) {
    let f = model.frame();
    let settled: Vec<Bits> = f.moments().map(|m| model.act_settled(m)).collect();
    // 7: m ⊲ m1, h ∈ H_{m1} ⇒ Act(m,h) ⊆ Act(m1,h)
    for m1 in f.moments() {
        for m in f.strict_predecessors(m1).iter() {
            for h in f.through(m1).iter() {
                let lost = model.act(m, h).difference(model.act(m1, h));
                if let Some(t) = lost.first() {
                    d.push(
                        Violation::new(Constraint::ExpansionOfPresentedProofs)
                            .with("m", f.name(m))
                            .with("m1", f.name(m1))
                            .with("h", format!("h{h}"))
                            .with("t", poly_name(model, t)),
                    );
                }
            }
        }
    }
    // 8
    let mut discharged = Vec::new();
    for m in f.moments() {
        if f.dense_in(m) {
            if !settled[m].is_empty() {
                discharged.push(f.name(m).to_string());
            }
            continue;
        }
        let earlier = f
            .strict_predecessors(m)
            .iter()
            .fold(Bits::empty(), |acc, m0| {
                f.through(m)
                    .iter()
                    .fold(acc, |acc, h| acc.union(model.act(m0, h)))
            });
        if let Some(t) = settled[m].difference(earlier).first() {
            d.push(
                Violation::new(Constraint::NoNewProofsGuaranteed)
                    .with("m", f.name(m))
                    .with("t", poly_name(model, t)),
            );
        }
    }
    if !discharged.is_empty() {
        d.warn(format!(
            "no-new-proofs discharged by annotated virtual predecessors at: {}",
            discharged.join(", ")
        ));
    }
    // 9
    for m in f.moments() {
        'classes: for class in f.undivided_classes(m) {
            let hs = class.to_vec();
            for &g in &hs[1..] {
                let diff = model
                    .act(m, hs[0])
                    .difference(model.act(m, g))
                    .union(model.act(m, g).difference(model.act(m, hs[0])));
                if let Some(t) = diff.first() {
                    d.push(
                        Violation::new(Constraint::PresentingMakesHistoriesDivide)
                            .with("m", f.name(m))
                            .with("h", format!("h{}", hs[0]))
                            .with("h1", format!("h{g}"))
                            .with("t", poly_name(model, t)),
                    );
                    continue 'classes;
                }
            }
        }
    }
    // 11
    for (m, m1) in f.re().pairs().filter(|&(a, b)| a != b) {
        if let Some(t) = settled[m].difference(settled[m1]).first() {
            d.push(
                Violation::new(Constraint::EpistemicTransparency)
                    .with("m", f.name(m))
                    .with("m1", f.name(m1))
                    .with("t", poly_name(model, t)),
            );
        }
    }
}

fn check_cs_normality(model: &JstitModel, cs: &ConstantSpecification, d: &mut Diagnostics) {
    let f = model.frame();
    let u = model.universe();
    for c in cs.constants() {
        let specified = cs.specified(c);
        let idx = u.poly_index(&Polynomial::constant(c));
        if idx.is_none() && !model.evidence_default().is_everything() {
            d.warn(format!(
                "constant {c} is outside the universe; default evidence used"
            ));
        }
        for m in f.moments() {
            let e = match idx {
                Some(i) => model.evidence(m, i),
                None => model.evidence_default(),
            };
            if let Some(a) = specified.iter().find(|a| !e.contains(u.formula_index(a))) {
                d.push(
                    Violation::new(Constraint::CsNormality)
                        .with("m", f.name(m))
                        .with("c", c)
                        .with("A", a),
                );
            }
        }
    }
}

/// Cross-check: `m ⊲ m1 ∧ t ∈ Act(m,h) ⇒ t ∈ Act_{m1}` for `h ∈ H_{m1}`.
/// Holds in every model passing [`validate_model`].
pub fn derived_property_check(model: &JstitModel) -> Diagnostics {
    let f = model.frame();
    let mut d = Diagnostics::new();
    for m1 in f.moments() {
        let settled = model.act_settled(m1);
        for m in f.strict_predecessors(m1).iter() {
            for h in f.through(m1).iter() {
                if let Some(t) = model.act(m, h).difference(settled).first() {
                    d.push(
                        Violation::new(Constraint::SettledPresentationPersists)
                            .with("m", f.name(m))
                            .with("m1", f.name(m1))
                            .with("h", format!("h{h}"))
                            .with("t", poly_name(model, t)),
                    );
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{JstitFrame, StitFrame, TemporalFrame};
    use crate::models::Universe;
    use crate::syntax::parse_formula;

    fn model(parents: &[Option<usize>], text: &str) -> JstitModel {
        let t = TemporalFrame::from_parents(parents).unwrap();
        let f = JstitFrame::temporal_epistemics(StitFrame::trivial(t, 1).unwrap());
        let u = Universe::from_formulas([&parse_formula(text).unwrap()]).unwrap();
        JstitModel::new(f, u)
    }

    #[test]
    fn expansion_violation_witness() {
        let mut m = model(&[None, Some(0)], "E x");
        m.set_act_polys(0, 0, &[Polynomial::var("x")]).unwrap();
        let d = validate_model(&m, None);
        let v = d.first(Constraint::ExpansionOfPresentedProofs).unwrap();
        assert_eq!(v.witness_value("m"), Some("m0"));
        assert_eq!(v.witness_value("m1"), Some("m1"));
        assert_eq!(v.witness_value("t"), Some("x"));
        assert!(!derived_property_check(&m).is_ok());
    }

    #[test]
    fn undivided_histories_need_equal_act() {
        let mut m = model(&[None, Some(0), Some(1), Some(1)], "E x");
        m.set_act_polys(0, 0, &[Polynomial::var("x")]).unwrap();
        assert!(validate_model(&m, None).has(Constraint::PresentingMakesHistoriesDivide));
    }

    #[test]
    fn root_presentation_is_new() {
        let mut m = model(&[None], "E x");
        m.set_act_polys(0, 0, &[Polynomial::var("x")]).unwrap();
        assert!(validate_model(&m, None).has(Constraint::NoNewProofsGuaranteed));
    }

    #[test]
    fn empty_act_everything_valid() {
        let m = model(&[None, Some(0), Some(0)], "(x * y) : p -> !x : E (x + y)");
        let d = validate_model(&m, None);
        assert!(d.is_ok(), "{d}");
        assert!(derived_property_check(&m).is_ok());
    }

    #[test]
    fn closure_violations() {
        let mut m = model(&[None], "(x * y) : q & (x + y) : q & !x : x : (p -> q)");
        m.set_evidence_default(EvidenceSet::empty());
        let u = m.universe().clone();
        let ix = |s: &str| {
            u.poly_index(&crate::syntax::parse_polynomial(s).unwrap())
                .unwrap()
        };
        let fx = |s: &str| u.formula_index(&parse_formula(s).unwrap()).unwrap();
        m.set_evidence(0, ix("x"), EvidenceSet::Finite([fx("p -> q")].into()));
        m.set_evidence(0, ix("y"), EvidenceSet::Finite([fx("p")].into()));
        let d = validate_model(&m, None);
        assert!(d.has(Constraint::ApplicationClosure));
        assert!(d.has(Constraint::SumClosure));
        assert!(d.has(Constraint::CheckerClosure));
        assert!(!d.warnings.is_empty());
    }

    #[test]
    fn cs_normality() {
        let mut m = model(&[None], "c : (Box p -> [0]p)");
        let cs =
            ConstantSpecification::from_formulas([&parse_formula("c : (Box p -> [0]p)").unwrap()])
                .unwrap();
        assert!(validate_model(&m, Some(&cs)).is_ok());
        m.set_evidence_default(EvidenceSet::empty());
        assert!(validate_model(&m, Some(&cs)).has(Constraint::CsNormality));
    }
}
