use std::ops::Deref;

use super::{Relation, StitFrame};
use crate::diag::{Constraint, Diagnostics, Violation};

/// Stit frame plus the two epistemic preorders `R ⊆ R_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JstitFrame {
    base: StitFrame,
    r: Relation,
    re: Relation,
}

impl Deref for JstitFrame {
    type Target = StitFrame;

    fn deref(&self) -> &StitFrame {
        &self.base
    }
}

impl JstitFrame {
    pub fn new(base: StitFrame, r: Relation, re: Relation) -> JstitFrame {
        assert_eq!(r.len(), base.len());
        assert_eq!(re.len(), base.len());
        JstitFrame { base, r, re }
    }

    /// `R = R_e = ⊴`.
    pub fn temporal_epistemics(base: StitFrame) -> JstitFrame {
        let le = base.order().clone();
        JstitFrame::new(base, le.clone(), le)
    }

    pub fn stit(&self) -> &StitFrame {
        &self.base
    }

    pub fn r(&self) -> &Relation {
        &self.r
    }

    pub fn re(&self) -> &Relation {
        &self.re
    }

    pub fn validate(&self) -> Diagnostics {
        let mut d = self.base.validate();
        let name = |m: usize| self.name(m).to_string();
        for (rel, refl, trans) in [
            (&self.r, Constraint::RReflexive, Constraint::RTransitive),
            (&self.re, Constraint::ReReflexive, Constraint::ReTransitive),
        ] {
            if let Some(m) = rel.first_irreflexive() {
                d.push(Violation::new(refl).with("m", name(m)));
            }
            if let Some((a, b, c)) = rel.first_intransitive() {
                d.push(
                    Violation::new(trans)
                        .with("m", name(a))
                        .with("m1", name(b))
                        .with("m2", name(c)),
                );
            }
        }
        if let Some((a, b)) = self.r.first_missing_in(&self.re) {
            d.push(
                Violation::new(Constraint::RInclusion)
                    .with("m", name(a))
                    .with("m1", name(b)),
            );
        }
        if let Some((a, b)) = self.order().first_missing_in(&self.r) {
            d.push(
                Violation::new(Constraint::FutureAlwaysMatters)
                    .with("m", name(a))
                    .with("m1", name(b)),
            );
        }
        d
    }
}
