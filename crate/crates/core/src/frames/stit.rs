use std::ops::Deref;

use super::{FrameError, TemporalFrame};
use crate::bits::Bits;
use crate::diag::{Constraint, Diagnostics, Violation};

/// Temporal frame plus a choice partition of `H_m` for every moment and
/// agent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StitFrame {
    base: TemporalFrame,
    agents: usize,
    /// `choice[m][j]` lists the cells of `Choice^m_j`, sorted.
    choice: Vec<Vec<Vec<Bits>>>,
}

impl Deref for StitFrame {
    type Target = TemporalFrame;

    fn deref(&self) -> &TemporalFrame {
        &self.base
    }
}

impl StitFrame {
    /// Every agent has the single-cell partition `{H_m}` everywhere.
    pub fn trivial(base: TemporalFrame, agents: usize) -> Result<StitFrame, FrameError> {
        if agents == 0 {
            return Err(FrameError::NoAgents);
        }
        let choice = base
            .moments()
            .map(|m| vec![vec![base.through(m)]; agents])
            .collect();
        Ok(StitFrame {
            base,
            agents,
            choice,
        })
    }

    /// Sets `Choice^m_j` to the given cells. Cells are stored as given
    /// (sorted); partition validity is reported by [`StitFrame::validate`].
    pub fn set_choice(
        &mut self,
        m: usize,
        j: usize,
        mut cells: Vec<Bits>,
    ) -> Result<(), FrameError> {
        if j >= self.agents {
            return Err(FrameError::AgentOutOfRange(j, self.agents));
        }
        for c in &cells {
            if let Some(h) = c.iter().find(|&h| h >= self.history_count()) {
                return Err(FrameError::UnknownHistory(h));
            }
        }
        cells.sort();
        self.choice[m][j] = cells;
        Ok(())
    }

    pub fn with_choice(
        mut self,
        m: usize,
        j: usize,
        cells: Vec<Bits>,
    ) -> Result<StitFrame, FrameError> {
        self.set_choice(m, j, cells)?;
        Ok(self)
    }

    pub fn temporal(&self) -> &TemporalFrame {
        &self.base
    }

    pub fn agents(&self) -> usize {
        self.agents
    }

    pub fn choice(&self, m: usize, j: usize) -> &[Bits] {
        &self.choice[m][j]
    }

    /// `Choice^m_j(h)`; empty when `h` is in no cell.
    pub fn choice_cell(&self, m: usize, j: usize, h: usize) -> Bits {
        self.choice[m][j]
            .iter()
            .copied()
            .find(|c| c.contains(h))
            .unwrap_or_default()
    }

    pub fn is_trivial_choice(&self) -> bool {
        self.moments()
            .all(|m| (0..self.agents).all(|j| self.choice[m][j].len() == 1))
    }

    /// Temporal constraints plus partition, no choice between undivided
    /// histories, and independence of agents.
    pub fn validate(&self) -> Diagnostics {
        let mut d = self.base.validate();
        for m in self.moments() {
            let hm = self.through(m);
            let mname = self.name(m);
            for j in 0..self.agents {
                let cells = &self.choice[m][j];
                let mut union = Bits::empty();
                let mut overlap = false;
                for c in cells {
                    if c.is_empty() || !union.intersection(*c).is_empty() {
                        overlap = true;
                    }
                    union = union.union(*c);
                }
                if overlap || union != hm {
                    d.push(
                        Violation::new(Constraint::ChoicePartition)
                            .with("m", mname)
                            .with("j", j),
                    );
                    continue;
                }
                'pairs: for h in hm.iter() {
                    for g in hm.iter().filter(|&g| g > h) {
                        if self.undivided(m, h, g)
                            && self.choice_cell(m, j, h) != self.choice_cell(m, j, g)
                        {
                            d.push(
                                Violation::new(Constraint::NoChoiceBetweenUndivided)
                                    .with("m", mname)
                                    .with("j", j)
                                    .with("h", h)
                                    .with("h1", g),
                            );
                            break 'pairs;
                        }
                    }
                }
            }
            if let Some(selection) = self.empty_selection(m) {
                let picks: Vec<String> = selection.iter().map(|c| format!("{c:?}")).collect();
                d.push(
                    Violation::new(Constraint::IndependenceOfAgents)
                        .with("m", mname)
                        .with("cells", picks.join(" ")),
                );
            }
        }
        d
    }

    /// A selection of one cell per agent with empty intersection, if any.
    fn empty_selection(&self, m: usize) -> Option<Vec<Bits>> {
        fn go(frame: &StitFrame, m: usize, j: usize, acc: Bits, picked: &mut Vec<Bits>) -> bool {
            if j == frame.agents {
                return acc.is_empty();
            }
            for &c in &frame.choice[m][j] {
                picked.push(c);
                if go(frame, m, j + 1, acc.intersection(c), picked) {
                    return true;
                }
                picked.pop();
            }
            false
        }
        let mut picked = Vec::new();
        if go(self, m, 0, self.through(m), &mut picked) {
            Some(picked)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fork() -> TemporalFrame {
        TemporalFrame::from_parents(&[None, Some(0), Some(0)]).unwrap()
    }

    #[test]
    fn trivial_choice_is_valid() {
        let c = StitFrame::trivial(fork(), 2).unwrap();
        assert!(c.validate().is_ok());
        assert!(c.is_trivial_choice());
        assert_eq!(c.choice_cell(0, 1, 0).to_vec(), vec![0, 1]);
    }

    #[test]
    fn independence_violation() {
        let split = vec![Bits::singleton(0), Bits::singleton(1)];
        let c = StitFrame::trivial(fork(), 2)
            .unwrap()
            .with_choice(0, 0, split.clone())
            .unwrap()
            .with_choice(0, 1, split)
            .unwrap();
        assert!(c.validate().has(Constraint::IndependenceOfAgents));
    }

    #[test]
    fn undivided_histories_cannot_be_split() {
        let t = TemporalFrame::from_parents(&[None, Some(0), Some(1), Some(1)]).unwrap();
        let c = StitFrame::trivial(t, 1)
            .unwrap()
            .with_choice(0, 0, vec![Bits::singleton(0), Bits::singleton(1)])
            .unwrap();
        assert!(c.validate().has(Constraint::NoChoiceBetweenUndivided));
    }

    #[test]
    fn non_partition_reported() {
        let c = StitFrame::trivial(fork(), 1)
            .unwrap()
            .with_choice(0, 0, vec![Bits::singleton(0)])
            .unwrap();
        assert!(c.validate().has(Constraint::ChoicePartition));
    }
}
