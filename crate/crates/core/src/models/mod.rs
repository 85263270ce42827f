//! Finite jstit models: presentations `Act`, evidence `E` and valuation
//! `V` over a jstit frame and a finite [`Universe`].

mod cs;
mod universe;
mod validate;

pub use cs::{ConstantSpecification, CsEntry};
pub use universe::{Universe, MAX_POLYNOMIALS};
pub use validate::{derived_property_check, validate_model};

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::bits::Bits;
use crate::frames::{FrameError, JstitFrame};
use crate::syntax::{Formula, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("universe exceeds {0} polynomials")]
    UniverseTooLarge(usize),
    #[error("{0} is not in the universe")]
    NotInUniverse(String),
    #[error("history h{history} does not pass through {moment}")]
    NotThrough { moment: String, history: usize },
    #[error("{0} does not start with a proof constant")]
    NotCsEntry(String),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

/// Value of `E(m,t)`: the whole formula set, or a finite subset of the
/// universe's formulas (stored as formula indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvidenceSet {
    Everything,
    Finite(BTreeSet<usize>),
}

impl Default for EvidenceSet {
    fn default() -> Self {
        EvidenceSet::Finite(BTreeSet::new())
    }
}

impl EvidenceSet {
    pub fn empty() -> EvidenceSet {
        EvidenceSet::default()
    }

    pub fn is_everything(&self) -> bool {
        matches!(self, EvidenceSet::Everything)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, EvidenceSet::Finite(s) if s.is_empty())
    }

    /// Membership of a universe formula index; `None` stands for a formula
    /// outside the universe, which only `Everything` contains.
    pub fn contains(&self, i: Option<usize>) -> bool {
        match (self, i) {
            (EvidenceSet::Everything, _) => true,
            (EvidenceSet::Finite(s), Some(i)) => s.contains(&i),
            (EvidenceSet::Finite(_), None) => false,
        }
    }

    pub fn is_subset(&self, other: &EvidenceSet) -> bool {
        match (self, other) {
            (_, EvidenceSet::Everything) => true,
            (EvidenceSet::Everything, EvidenceSet::Finite(_)) => false,
            (EvidenceSet::Finite(a), EvidenceSet::Finite(b)) => a.is_subset(b),
        }
    }

    pub fn union(&self, other: &EvidenceSet) -> EvidenceSet {
        match (self, other) {
            (EvidenceSet::Finite(a), EvidenceSet::Finite(b)) => {
                EvidenceSet::Finite(a.union(b).copied().collect())
            }
            _ => EvidenceSet::Everything,
        }
    }

    pub fn insert(&mut self, i: usize) {
        if let EvidenceSet::Finite(s) = self {
            s.insert(i);
        }
    }
}

/// A jstit model over a finite universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JstitModel {
    frame: JstitFrame,
    universe: Universe,
    /// `act[m][h]`, meaningful for `h ∈ H_m`
    act: Vec<Vec<Bits>>,
    evidence: BTreeMap<(usize, usize), EvidenceSet>,
    evidence_default: EvidenceSet,
    /// `valuation[p][m]` = histories `h` with `(m,h) ∈ V(p)`
    valuation: BTreeMap<String, Vec<Bits>>,
}

impl JstitModel {
    /// `Act ≡ ∅`, `E ≡ Everything`, `V ≡ ∅`.
    pub fn new(frame: JstitFrame, universe: Universe) -> JstitModel {
        let n = frame.len();
        let hs = frame.history_count();
        JstitModel {
            frame,
            universe,
            act: vec![vec![Bits::empty(); hs]; n],
            evidence: BTreeMap::new(),
            evidence_default: EvidenceSet::Everything,
            valuation: BTreeMap::new(),
        }
    }

    pub fn frame(&self) -> &JstitFrame {
        &self.frame
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Adds `f` and its subterms to the universe. New polynomials take the
    /// default evidence and appear in no `Act` value.
    pub fn extend_universe(&mut self, f: &Formula) -> Result<(), ModelError> {
        self.universe.add_formula(f)?;
        Ok(())
    }

    fn check_through(&self, m: usize, h: usize) -> Result<(), ModelError> {
        if h < self.frame.history_count() && self.frame.through(m).contains(h) {
            Ok(())
        } else {
            Err(ModelError::NotThrough {
                moment: self.frame.name(m).to_string(),
                history: h,
            })
        }
    }

    /// `Act(m,h)` as polynomial indices.
    pub fn act(&self, m: usize, h: usize) -> Bits {
        self.act[m][h]
    }

    pub fn set_act(&mut self, m: usize, h: usize, ts: Bits) -> Result<(), ModelError> {
        self.check_through(m, h)?;
        if let Some(i) = ts.iter().find(|&i| i >= self.universe.poly_count()) {
            return Err(ModelError::NotInUniverse(format!("polynomial #{i}")));
        }
        self.act[m][h] = ts;
        Ok(())
    }

    pub fn set_act_polys(
        &mut self,
        m: usize,
        h: usize,
        ts: &[Polynomial],
    ) -> Result<(), ModelError> {
        let bits = self.universe.poly_set(ts)?;
        self.set_act(m, h, bits)
    }

    /// `Act_m`
    pub fn act_settled(&self, m: usize) -> Bits {
        self.frame
            .through(m)
            .iter()
            .fold(Bits::full(self.universe.poly_count()), |acc, h| {
                acc.intersection(self.act[m][h])
            })
    }

    pub fn act_polys(&self, bits: Bits) -> Vec<&Polynomial> {
        bits.iter().map(|i| self.universe.polynomial(i)).collect()
    }

    pub fn evidence(&self, m: usize, t: usize) -> &EvidenceSet {
        self.evidence.get(&(m, t)).unwrap_or(&self.evidence_default)
    }

    pub fn evidence_default(&self) -> &EvidenceSet {
        &self.evidence_default
    }

    pub fn set_evidence_default(&mut self, e: EvidenceSet) {
        self.evidence_default = e;
        self.normalize_evidence();
    }

    pub fn set_evidence(&mut self, m: usize, t: usize, e: EvidenceSet) {
        if e == self.evidence_default {
            self.evidence.remove(&(m, t));
        } else {
            self.evidence.insert((m, t), e);
        }
    }

    /// Entries differing from the default, in `(moment, polynomial)` order.
    pub fn evidence_entries(&self) -> impl Iterator<Item = (&(usize, usize), &EvidenceSet)> {
        self.evidence.iter()
    }

    fn normalize_evidence(&mut self) {
        let d = self.evidence_default.clone();
        self.evidence.retain(|_, e| *e != d);
    }

    /// Whether `(m,h) ∈ V(p)`.
    pub fn holds(&self, p: &str, m: usize, h: usize) -> bool {
        self.valuation.get(p).is_some_and(|v| v[m].contains(h))
    }

    pub fn valuation_of(&self, p: &str) -> Option<&[Bits]> {
        self.valuation.get(p).map(Vec::as_slice)
    }

    pub fn valuation(&self) -> &BTreeMap<String, Vec<Bits>> {
        &self.valuation
    }

    pub fn set_holds(
        &mut self,
        p: &str,
        m: usize,
        h: usize,
        value: bool,
    ) -> Result<(), ModelError> {
        self.check_through(m, h)?;
        self.universe.add_prop(p);
        let n = self.frame.len();
        let row = self
            .valuation
            .entry(p.to_string())
            .or_insert_with(|| vec![Bits::empty(); n]);
        if value {
            row[m].insert(h);
        } else {
            row[m].remove(h);
        }
        Ok(())
    }

    /// Replaces `V(p)` by the given per-moment history sets.
    pub fn set_valuation(&mut self, p: &str, rows: Vec<Bits>) -> Result<(), ModelError> {
        for (m, row) in rows.iter().enumerate() {
            for h in row.iter() {
                self.check_through(m, h)?;
            }
        }
        self.universe.add_prop(p);
        self.valuation.insert(p.to_string(), rows);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{StitFrame, TemporalFrame};
    use crate::syntax::parse_formula;

    fn fork_model() -> JstitModel {
        let t = TemporalFrame::from_parents(&[None, Some(0), Some(0)]).unwrap();
        let f = JstitFrame::temporal_epistemics(StitFrame::trivial(t, 1).unwrap());
        let u = Universe::from_formulas([&parse_formula("E x & E y").unwrap()]).unwrap();
        JstitModel::new(f, u)
    }

    #[test]
    fn settled_is_intersection() {
        let mut m = fork_model();
        let x = Polynomial::var("x");
        let y = Polynomial::var("y");
        m.set_act_polys(0, 0, &[x.clone(), y.clone()][..]).unwrap();
        m.set_act_polys(0, 1, std::slice::from_ref(&y)).unwrap();
        assert_eq!(m.act_polys(m.act_settled(0)), vec![&y]);
        m.set_act_polys(1, 0, std::slice::from_ref(&x)).unwrap();
        assert_eq!(m.act_polys(m.act_settled(1)), vec![&x]);
    }

    #[test]
    fn act_requires_history_through_moment() {
        let mut m = fork_model();
        assert!(matches!(
            m.set_act(1, 1, Bits::empty()),
            Err(ModelError::NotThrough { .. })
        ));
        assert!(m.set_act_polys(0, 0, &[Polynomial::var("z")]).is_err());
    }

    #[test]
    fn evidence_defaults() {
        let mut m = fork_model();
        assert!(m.evidence(0, 0).is_everything());
        m.set_evidence(0, 0, EvidenceSet::empty());
        assert!(m.evidence(0, 0).is_empty());
        m.set_evidence_default(EvidenceSet::empty());
        assert_eq!(m.evidence_entries().count(), 0);
        assert!(EvidenceSet::empty().is_subset(&EvidenceSet::Everything));
        assert!(EvidenceSet::Everything.contains(None));
        assert!(!EvidenceSet::empty().contains(None));
    }
}
