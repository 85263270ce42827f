//! Temporal, stit and jstit frames over at most 64 moments.

pub mod classify;
mod jstit;
mod relation;
mod stit;
mod temporal;

pub use classify::{
    classify, is_mixsucc, is_regular, is_unirelational, mixsucc_witness, regular_witness, theta,
    theta_condition_failure, Classification, MixsuccWitness, RegWitness, ThetaFamily,
};
pub use jstit::JstitFrame;
pub use relation::Relation;
pub use stit::StitFrame;
pub use temporal::TemporalFrame;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("frame has no moments")]
    Empty,
    #[error("{0} moments exceed the limit of 64")]
    TooManyMoments(usize),
    #[error("duplicate moment name {0:?}")]
    DuplicateMoment(String),
    #[error("{0} histories exceed the limit of 64")]
    TooManyHistories(usize),
    #[error("density annotation ({0}, {1}) is not a strict order pair")]
    DensityNotStrict(String, String),
    #[error("history h{history} does not pass through {moment}")]
    NotThrough { history: usize, moment: String },
    #[error("a stit frame needs at least one agent")]
    NoAgents,
    #[error("agent {0} out of range (agents: {1})")]
    AgentOutOfRange(usize, usize),
    #[error("unknown history h{0}")]
    UnknownHistory(usize),
    #[error("unknown moment {0:?}")]
    UnknownMoment(String),
    #[error("{moments} moments exceed the Theta enumeration cap of {cap}")]
    ThetaTooLarge { moments: usize, cap: usize },
}
