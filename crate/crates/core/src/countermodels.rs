//! Explicit falsifying models for frames that are not mixed-successor
//! (stit and temporal frames) or not regular (jstit frames).
//!
//! Every builder falsifies `K(Box E x | ~Box E y) -> (E x | ~E y)` at the
//! returned index, with `E ≡ Everything`, `V ≡ ∅` and `h2` the least
//! history through `m1`.

use thiserror::Error;

use crate::bits::Bits;
use crate::frames::{
    classify::has_next_below, theta_condition_failure, FrameError, JstitFrame, MixsuccWitness,
    RegWitness, StitFrame, TemporalFrame,
};
use crate::models::{JstitModel, ModelError, Universe};
use crate::semantics::Index;
use crate::syntax::{parse_formula, Formula, Polynomial};

pub const TARGET: &str = "K(Box E x | ~Box E y) -> (E x | ~E y)";

/// `K(□Ex ∨ ¬□Ey) → (Ex ∨ ¬Ey)`
pub fn target_formula() -> Formula {
    parse_formula(TARGET).expect("target parses")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("moment index {0} out of range")]
    UnknownMoment(usize),
    #[error("history h{history} does not pass through {moment}")]
    NotThrough { history: usize, moment: String },
    #[error("{m0} ⊲ {m1} fails")]
    NotStrictlyBefore { m0: String, m1: String },
    #[error("h{h0} and h{h1} are undivided at {m0}")]
    Undivided { h0: usize, h1: usize, m0: String },
    #[error("Next({m0}, {m}) holds for {m} ⊴ {m1}")]
    NextBelow { m0: String, m: String, m1: String },
    #[error("{m0} belongs to S")]
    BaseInS { m0: String },
    #[error("{m} lies in ({m0}, {m1}] but not in S")]
    IntervalNotInS { m: String, m0: String, m1: String },
    #[error("S violates condition {0} of the Theta definition")]
    NotClosed(u8),
    #[error("h{h_prime} is undivided from h{g} at {m0}, and h{g} passes through {m1}")]
    HPrimeUndivided {
        h_prime: usize,
        g: usize,
        m0: String,
        m1: String,
    },
    #[error("{m} is a Next-successor of {m0} on h{h_prime} and lies in S")]
    NextInS {
        m: String,
        m0: String,
        h_prime: usize,
    },
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Builder output.
#[derive(Debug, Clone)]
pub struct Built {
    pub model: JstitModel,
    pub index: Index,
    pub h2: usize,
    /// Set when the witness relies on annotated edges.
    pub uses_density: bool,
}

impl Built {
    pub fn note(&self) -> Option<&'static str> {
        self.uses_density.then_some(
            "witness relies on density annotations: annotated edges stand for dense intervals of virtual moments",
        )
    }
}

fn moment(t: &TemporalFrame, m: usize) -> Result<String, WitnessError> {
    if m < t.len() {
        Ok(t.name(m).to_string())
    } else {
        Err(WitnessError::UnknownMoment(m))
    }
}

fn through(t: &TemporalFrame, m: usize, h: usize) -> Result<(), WitnessError> {
    if h < t.history_count() && t.through(m).contains(h) {
        Ok(())
    } else {
        Err(WitnessError::NotThrough {
            history: h,
            moment: t.name(m).to_string(),
        })
    }
}

/// `m0 ⊲ m1` and `(∀m ⊴ m1) ¬Next(m0, m)`.
fn check_no_next(t: &TemporalFrame, m0: usize, m1: usize) -> Result<(), WitnessError> {
    let (n0, n1) = (moment(t, m0)?, moment(t, m1)?);
    if !t.lt(m0, m1) {
        return Err(WitnessError::NotStrictlyBefore { m0: n0, m1: n1 });
    }
    if has_next_below(t, m0, m1) {
        let m = t
            .moments()
            .find(|&m| t.le(m, m1) && t.next(m0, m))
            .expect("some Next successor");
        return Err(WitnessError::NextBelow {
            m0: n0,
            m: t.name(m).to_string(),
            m1: n1,
        });
    }
    Ok(())
}

/// Checks `h0 ≉_{m0} h1 ∧ m0 ⊲ m1 ∧ (∀m ⊴ m1) ¬Next(m0, m)`.
pub fn check_mixsucc_witness(t: &TemporalFrame, w: &MixsuccWitness) -> Result<(), WitnessError> {
    let n0 = moment(t, w.m0)?;
    through(t, w.m0, w.h0)?;
    through(t, w.m0, w.h1)?;
    if t.undivided(w.m0, w.h0, w.h1) {
        return Err(WitnessError::Undivided {
            h0: w.h0,
            h1: w.h1,
            m0: n0,
        });
    }
    check_no_next(t, w.m0, w.m1)
}

/// Checks the (reg) antecedent with a failing consequent.
pub fn check_reg_witness(f: &JstitFrame, w: &RegWitness) -> Result<(), WitnessError> {
    let (n0, n1) = (moment(f, w.m0)?, moment(f, w.m1)?);
    if let Some(m) = w.s.iter().find(|&m| m >= f.len()) {
        return Err(WitnessError::UnknownMoment(m));
    }
    through(f, w.m0, w.h_prime)?;
    check_no_next(f, w.m0, w.m1)?;
    if w.s.contains(w.m0) {
        return Err(WitnessError::BaseInS { m0: n0 });
    }
    if let Some(m) = f
        .moments()
        .find(|&m| f.lt(w.m0, m) && f.le(m, w.m1) && !w.s.contains(m))
    {
        return Err(WitnessError::IntervalNotInS {
            m: f.name(m).to_string(),
            m0: n0,
            m1: n1,
        });
    }
    if let Some(c) = theta_condition_failure(f, w.s) {
        return Err(WitnessError::NotClosed(c));
    }
    if let Some(g) = f
        .through(w.m1)
        .iter()
        .find(|&g| f.undivided(w.m0, w.h_prime, g))
    {
        return Err(WitnessError::HPrimeUndivided {
            h_prime: w.h_prime,
            g,
            m0: n0,
            m1: n1,
        });
    }
    if let Some(m) = f
        .history(w.h_prime)
        .iter()
        .find(|&m| f.next(w.m0, m) && w.s.contains(m))
    {
        return Err(WitnessError::NextInS {
            m: f.name(m).to_string(),
            m0: n0,
            h_prime: w.h_prime,
        });
    }
    Ok(())
}

fn blank_model(f: JstitFrame) -> Result<(JstitModel, Bits, Bits), WitnessError> {
    let u = Universe::from_formulas([&target_formula()])?;
    let x = u.poly_set([&Polynomial::var("x")])?;
    let y = u.poly_set([&Polynomial::var("y")])?;
    Ok((JstitModel::new(f, u), x, y))
}

fn uses_density(t: &TemporalFrame, m0: usize, m1: usize) -> bool {
    t.density().iter().any(|&(a, b)| t.le(m0, a) && t.le(b, m1))
}

/// Falsifying model for a stit frame violating (mixsucc) at `w`, with
/// `R = R_e = ⊴`.
pub fn build_stit_countermodel(c: &StitFrame, w: &MixsuccWitness) -> Result<Built, WitnessError> {
    check_mixsucc_witness(c, w)?;
    let frame = JstitFrame::temporal_epistemics(c.clone());
    let (mut model, x, y) = blank_model(frame)?;
    let h2 = c
        .through(w.m1)
        .first()
        .expect("every moment is on a history");
    for (m, h) in c.mh_pairs() {
        let near = c.through(w.m0).contains(h) && c.undivided(w.m0, h, h2);
        let act = if m == w.m0 && near {
            y
        } else if c.lt(w.m0, m) && near {
            x.union(y)
        } else {
            Bits::empty()
        };
        model.set_act(m, h, act)?;
    }
    Ok(Built {
        model,
        index: (w.m0, h2),
        h2,
        uses_density: uses_density(c, w.m0, w.m1),
    })
}

/// As [`build_stit_countermodel`] with trivial choice for every agent.
pub fn build_temporal_countermodel(
    t: &TemporalFrame,
    agents: usize,
    w: &MixsuccWitness,
) -> Result<Built, WitnessError> {
    build_stit_countermodel(&StitFrame::trivial(t.clone(), agents)?, w)
}

/// Falsifying model for a jstit frame violating (reg) at `w`.
pub fn build_jstit_countermodel(f: &JstitFrame, w: &RegWitness) -> Result<Built, WitnessError> {
    check_reg_witness(f, w)?;
    let (mut model, x, y) = blank_model(f.clone())?;
    let h2 = f
        .through(w.m1)
        .first()
        .expect("every moment is on a history");
    for (m, h) in f.mh_pairs() {
        let act = if m == w.m0 && f.undivided(w.m0, h, h2) {
            y
        } else if w.s.contains(m)
            || f.history(h)
                .iter()
                .any(|m1| w.s.contains(m1) && f.next(m, m1))
        {
            x.union(y)
        } else {
            Bits::empty()
        };
        model.set_act(m, h, act)?;
    }
    Ok(Built {
        model,
        index: (w.m0, h2),
        h2,
        uses_density: uses_density(f, w.m0, w.m1),
    })
}
