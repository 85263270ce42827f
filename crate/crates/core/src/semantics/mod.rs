//! Satisfaction relation and bounded counter-model search.
//!
//! Formulas are evaluated by labeling: each subformula gets, per moment, the
//! set of histories through that moment where it holds. On annotated frames
//! every annotated edge `(a,b)` contributes one virtual moment, a clone of
//! `b` lying only on `H_b` with trivial choice and `Act = Act_b`; all clones
//! of one edge are isomorphic, so one representative suffices.

pub(crate) mod search;

pub use search::{find_countermodel, Bounds, Countermodel, EvidenceMode, SearchError};

use std::collections::HashMap;

use thiserror::Error;

use crate::bits::Bits;
use crate::frames::JstitFrame;
use crate::models::JstitModel;
use crate::syntax::{subformulas, Formula};

/// A moment-history pair `(m, h)` with `h ∈ H_m`.
pub type Index = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("polynomial {0} is not in the model's universe")]
    OutOfUniverse(String),
    #[error("({moment}, h{history}) is not a moment-history pair")]
    NotAnIndex { moment: String, history: usize },
    #[error("agent {agent} out of range (agents: {agents})")]
    AgentOutOfRange { agent: usize, agents: usize },
}

/// Actual moments followed by one virtual moment per annotated edge.
struct Carrier {
    actual: usize,
    /// actual moment whose data a carrier moment copies
    origin: Vec<usize>,
    r: Vec<Vec<usize>>,
    re: Vec<Vec<usize>>,
}

impl Carrier {
    fn new(f: &JstitFrame) -> Carrier {
        let n = f.len();
        let mut origin: Vec<usize> = (0..n).collect();
        origin.extend(f.density().iter().map(|&(_, b)| b));
        let succ = |rel: &crate::frames::Relation| -> Vec<Vec<usize>> {
            let rows: Vec<Vec<usize>> = (0..n)
                .map(|x| {
                    (0..origin.len())
                        .filter(|&c| rel.holds(x, origin[c]))
                        .collect()
                })
                .collect();
            origin.iter().map(|&o| rows[o].clone()).collect()
        };
        Carrier {
            actual: n,
            r: succ(f.r()),
            re: succ(f.re()),
            origin,
        }
    }

    fn len(&self) -> usize {
        self.origin.len()
    }
}

/// Reusable evaluator for one model.
pub struct Evaluator<'a> {
    model: &'a JstitModel,
    carrier: Carrier,
    settled: Vec<Bits>,
}

impl<'a> Evaluator<'a> {
    pub fn new(model: &'a JstitModel) -> Evaluator<'a> {
        let f = model.frame();
        Evaluator {
            model,
            carrier: Carrier::new(f),
            settled: f.moments().map(|m| model.act_settled(m)).collect(),
        }
    }

    fn check(&self, f: &Formula) -> Result<(), SemanticsError> {
        let agents = self.model.frame().agents();
        for g in subformulas(f) {
            match &g {
                Formula::Proves(t, _) | Formula::Announced(t) => {
                    if self.model.universe().poly_index(t).is_none() {
                        return Err(SemanticsError::OutOfUniverse(t.to_string()));
                    }
                }
                Formula::Cstit(j, _) if j.0 >= agents => {
                    return Err(SemanticsError::AgentOutOfRange { agent: j.0, agents });
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Truth sets of `f` at the actual moments: `result[m]` holds the
    /// histories `h ∈ H_m` with `M, m, h ⊨ f`.
    pub fn truth_sets(&self, f: &Formula) -> Result<Vec<Bits>, SemanticsError> {
        self.check(f)?;
        let mut labels: HashMap<&Formula, Vec<Bits>> = HashMap::new();
        let subs = subformulas(f);
        for g in &subs {
            let row = self.label(g, &labels);
            labels.insert(g, row);
        }
        let mut top = labels.remove(f).expect("formula labeled");
        top.truncate(self.carrier.actual);
        Ok(top)
    }

    fn label(&self, g: &Formula, labels: &HashMap<&Formula, Vec<Bits>>) -> Vec<Bits> {
        let model = self.model;
        let frame = model.frame();
        let u = model.universe();
        let c = &self.carrier;
        let hs = |x: usize| frame.through(c.origin[x]);
        let full_at = |row: &[Bits], x: usize| hs(x).is_subset(row[x]);
        let all_or_none = |x: usize, cond: bool| if cond { hs(x) } else { Bits::empty() };
        (0..c.len())
            .map(|x| {
                let o = c.origin[x];
                let virt = x >= c.actual;
                match g {
                    Formula::Prop(p) => model.valuation_of(p).map_or(Bits::empty(), |rows| rows[o]),
                    Formula::Not(a) => hs(x).difference(labels[&**a][x]),
                    Formula::And(a, b) => labels[&**a][x].intersection(labels[&**b][x]),
                    Formula::Box(a) => all_or_none(x, full_at(&labels[&**a], x)),
                    Formula::Cstit(j, a) => {
                        let row = labels[&**a][x];
                        if virt {
                            all_or_none(x, hs(x).is_subset(row))
                        } else {
                            frame
                                .choice(x, j.0)
                                .iter()
                                .filter(|cell| cell.is_subset(row))
                                .fold(Bits::empty(), |acc, cell| acc.union(*cell))
                        }
                    }
                    Formula::Knows(a) => {
                        let row = &labels[&**a];
                        all_or_none(x, c.r[x].iter().all(|&y| full_at(row, y)))
                    }
                    Formula::Proves(t, a) => {
                        let ti = u.poly_index(t).expect("checked");
                        let row = &labels[&**a];
                        let evidenced = model.evidence(o, ti).contains(u.formula_index(a));
                        all_or_none(x, evidenced && c.re[x].iter().all(|&y| full_at(row, y)))
                    }
                    Formula::Announced(t) => {
                        let ti = u.poly_index(t).expect("checked");
                        if virt {
                            all_or_none(x, self.settled[o].contains(ti))
                        } else {
                            hs(x)
                                .iter()
                                .filter(|&h| model.act(x, h).contains(ti))
                                .collect()
                        }
                    }
                }
            })
            .collect()
    }

    pub fn satisfies(&self, at: Index, f: &Formula) -> Result<bool, SemanticsError> {
        self.check_index(at)?;
        Ok(self.truth_sets(f)?[at.0].contains(at.1))
    }

    fn check_index(&self, (m, h): Index) -> Result<(), SemanticsError> {
        let frame = self.model.frame();
        if m < frame.len() && h < frame.history_count() && frame.through(m).contains(h) {
            Ok(())
        } else {
            Err(SemanticsError::NotAnIndex {
                moment: if m < frame.len() {
                    frame.name(m).to_string()
                } else {
                    format!("#{m}")
                },
                history: h,
            })
        }
    }

    /// First index in `(moment, history)` order where `f` fails.
    pub fn first_failure(&self, f: &Formula) -> Result<Option<Index>, SemanticsError> {
        let sets = self.truth_sets(f)?;
        let frame = self.model.frame();
        Ok(frame
            .moments()
            .find_map(|m| frame.through(m).difference(sets[m]).first().map(|h| (m, h))))
    }
}

/// `M, m, h ⊨ f`
pub fn satisfies(model: &JstitModel, at: Index, f: &Formula) -> Result<bool, SemanticsError> {
    Evaluator::new(model).satisfies(at, f)
}

/// Truth of `f` at every moment-history pair; on failure, the first failing
/// pair in `(moment, history)` order.
pub fn valid_in_model(
    model: &JstitModel,
    f: &Formula,
) -> Result<(bool, Option<Index>), SemanticsError> {
    let fail = Evaluator::new(model).first_failure(f)?;
    Ok((fail.is_none(), fail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{StitFrame, TemporalFrame};
    use crate::models::{EvidenceSet, Universe};
    use crate::syntax::{parse_formula, Polynomial};

    fn fork_model(texts: &[&str]) -> JstitModel {
        let t = TemporalFrame::from_parents(&[None, Some(0), Some(0)]).unwrap();
        let f = JstitFrame::temporal_epistemics(StitFrame::trivial(t, 2).unwrap());
        let fs: Vec<Formula> = texts.iter().map(|s| parse_formula(s).unwrap()).collect();
        JstitModel::new(f, Universe::from_formulas(&fs).unwrap())
    }

    #[test]
    fn announced_is_direct() {
        let mut m = fork_model(&["E x"]);
        m.set_act_polys(1, 0, &[Polynomial::var("x")]).unwrap();
        let ex = parse_formula("E x").unwrap();
        assert!(satisfies(&m, (1, 0), &ex).unwrap());
        assert!(!satisfies(&m, (0, 0), &ex).unwrap());
    }

    #[test]
    fn top_valid_and_box() {
        let mut m = fork_model(&["p"]);
        m.set_holds("p", 0, 0, true).unwrap();
        assert!(valid_in_model(&m, &Formula::top()).unwrap().0);
        let bp = parse_formula("Box p").unwrap();
        assert!(!satisfies(&m, (0, 0), &bp).unwrap());
        let (ok, fail) = valid_in_model(&m, &parse_formula("p").unwrap()).unwrap();
        assert!(!ok);
        assert_eq!(fail, Some((0, 1)));
    }

    #[test]
    fn knowledge_and_evidence() {
        let mut m = fork_model(&["K p", "x : p"]);
        for (mm, h) in m.frame().mh_pairs() {
            m.set_holds("p", mm, h, true).unwrap();
        }
        assert!(
            valid_in_model(&m, &parse_formula("K p").unwrap())
                .unwrap()
                .0
        );
        assert!(
            valid_in_model(&m, &parse_formula("x : p").unwrap())
                .unwrap()
                .0
        );
        m.set_evidence(0, 0, EvidenceSet::empty());
        assert!(!satisfies(&m, (0, 0), &parse_formula("x : p").unwrap()).unwrap());
        assert!(satisfies(&m, (1, 0), &parse_formula("x : p").unwrap()).unwrap());
    }

    #[test]
    fn errors() {
        let m = fork_model(&["p"]);
        assert!(matches!(
            satisfies(&m, (0, 0), &parse_formula("E z").unwrap()),
            Err(SemanticsError::OutOfUniverse(ref s)) if s == "z"
        ));
        assert!(matches!(
            satisfies(&m, (1, 1), &parse_formula("p").unwrap()),
            Err(SemanticsError::NotAnIndex { .. })
        ));
        assert!(satisfies(&m, (0, 0), &parse_formula("[5]p").unwrap()).is_err());
    }

    #[test]
    fn virtual_moment_counts_for_knowledge() {
        // root with two children, annotated edge into m1; Act(m1) = {x}
        let t = TemporalFrame::from_parents(&[None, Some(0), Some(0)])
            .unwrap()
            .with_density([(0, 1)])
            .unwrap();
        let f = JstitFrame::temporal_epistemics(StitFrame::trivial(t, 1).unwrap());
        let u = Universe::from_formulas([&parse_formula("K Box E x").unwrap()]).unwrap();
        let mut m = JstitModel::new(f, u);
        m.set_act_polys(1, 0, &[Polynomial::var("x")]).unwrap();
        let ev = Evaluator::new(&m);
        assert_eq!(ev.carrier.len(), 4);
        assert!(ev
            .satisfies((1, 0), &parse_formula("K Box E x").unwrap())
            .unwrap());
    }
}
