use std::collections::BTreeSet;

use super::{FrameError, Relation};
use crate::bits::Bits;
use crate::diag::{Constraint, Diagnostics, Violation};

/// Finite moment set with its temporal order, plus optional density
/// annotations.
///
/// A density annotation marks a cover edge `a ⊲ b` as standing for a dense
/// open interval of virtual moments. Every virtual moment lies on exactly the
/// histories through `b`, is an epistemic and evidential copy of `b`, and
/// carries the presentations settled at `b`. The annotation makes
/// `Next(a, b)` false, which is the only way a finite order can lack an
/// immediate successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalFrame {
    names: Vec<String>,
    le: Relation,
    dense: BTreeSet<(usize, usize)>,
    histories: Vec<Bits>,
    through: Vec<Bits>,
}

/// Maximal chains of the comparability graph (Bron-Kerbosch with pivoting).
fn maximal_chains(le: &Relation) -> Vec<Bits> {
    let n = le.len();
    let adj: Vec<Bits> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| b != a && (le.holds(a, b) || le.holds(b, a)))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    fn bk(r: Bits, mut p: Bits, mut x: Bits, adj: &[Bits], out: &mut Vec<Bits>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p.union(x).first().unwrap();
        for v in p.difference(adj[pivot]).iter() {
            bk(
                r.with(v),
                p.intersection(adj[v]),
                x.intersection(adj[v]),
                adj,
                out,
            );
            p.remove(v);
            x.insert(v);
        }
    }
    if n > 0 {
        bk(Bits::empty(), Bits::full(n), Bits::empty(), &adj, &mut out);
    }
    out.sort_by_key(|h| h.to_vec());
    out
}

impl TemporalFrame {
    /// Builds a frame from an order relation taken as given (no closure).
    pub fn new(names: Vec<String>, le: Relation) -> Result<TemporalFrame, FrameError> {
        let n = names.len();
        if n == 0 {
            return Err(FrameError::Empty);
        }
        if n > Bits::CAPACITY {
            return Err(FrameError::TooManyMoments(n));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(FrameError::DuplicateMoment(name.clone()));
            }
        }
        assert_eq!(le.len(), n, "relation size must match moment count");
        let histories = maximal_chains(&le);
        if histories.len() > Bits::CAPACITY {
            return Err(FrameError::TooManyHistories(histories.len()));
        }
        let through = (0..n)
            .map(|m| {
                histories
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.contains(m))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok(TemporalFrame {
            names,
            le,
            dense: BTreeSet::new(),
            histories,
            through,
        })
    }

    /// Builds a frame from generating pairs `a ⊴ b`; the reflexive-transitive
    /// closure is applied.
    pub fn from_pairs(
        names: Vec<String>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<TemporalFrame, FrameError> {
        let n = names.len();
        let le = Relation::from_pairs(n, pairs).reflexive_transitive_closure();
        TemporalFrame::new(names, le)
    }

    /// Tree given by a parent array: `parent[i]` is the immediate
    /// predecessor of moment `i`, `None` for the root. Moments are named
    /// `m0, m1, ...`.
    pub fn from_parents(parent: &[Option<usize>]) -> Result<TemporalFrame, FrameError> {
        let names = (0..parent.len()).map(|i| format!("m{i}")).collect();
        let pairs = parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i)));
        TemporalFrame::from_pairs(names, pairs)
    }

    /// Adds density annotations. A pair `(m, m1)` with `m ⊲ m1` marks the
    /// cover edge out of `m` on the way to `m1`.
    pub fn with_density(
        mut self,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<TemporalFrame, FrameError> {
        for (a, b) in pairs {
            if !self.lt(a, b) {
                return Err(FrameError::DensityNotStrict(
                    self.names[a].clone(),
                    self.names[b].clone(),
                ));
            }
            let between: Bits = (0..self.len())
                .filter(|&c| self.lt(a, c) && self.le(c, b))
                .collect();
            let cover = between
                .iter()
                .find(|&c| between.iter().all(|d| d == c || !self.lt(d, c)))
                .expect("nonempty finite set has a minimal element");
            self.dense.insert((a, cover));
        }
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn moments(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn order(&self) -> &Relation {
        &self.le
    }

    /// `a ⊴ b`
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le.holds(a, b)
    }

    /// `a ⊲ b`
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le.holds(a, b)
    }

    /// Annotated cover edges.
    pub fn density(&self) -> &BTreeSet<(usize, usize)> {
        &self.dense
    }

    pub fn has_density(&self) -> bool {
        !self.dense.is_empty()
    }

    pub fn is_dense_edge(&self, a: usize, b: usize) -> bool {
        self.dense.contains(&(a, b))
    }

    /// Whether the edge into `b` from its immediate predecessor is dense.
    pub fn dense_in(&self, b: usize) -> bool {
        self.dense.iter().any(|&(_, y)| y == b)
    }

    /// Whether some virtual moment lies strictly between `a` and `b`.
    pub fn virtual_between(&self, a: usize, b: usize) -> bool {
        self.dense
            .iter()
            .any(|&(x, y)| self.le(a, x) && self.le(y, b))
    }

    /// `{b : a ⊲ b}`
    pub fn strict_successors(&self, a: usize) -> Bits {
        self.le.successors(a).difference(Bits::singleton(a))
    }

    /// `{a : a ⊲ b}`
    pub fn strict_predecessors(&self, b: usize) -> Bits {
        self.le.predecessors(b).difference(Bits::singleton(b))
    }

    /// `Next(m, m')`: `m ⊲ m'`, every `m'' ⊲ m'` satisfies `m'' ⊴ m`, and the
    /// edge is not annotated dense.
    pub fn next(&self, m: usize, m2: usize) -> bool {
        self.lt(m, m2)
            && self.strict_predecessors(m2).iter().all(|m3| self.le(m3, m))
            && !self.is_dense_edge(m, m2)
    }

    /// All histories in canonical order.
    pub fn histories(&self) -> &[Bits] {
        &self.histories
    }

    pub fn history(&self, h: usize) -> Bits {
        self.histories[h]
    }

    pub fn history_count(&self) -> usize {
        self.histories.len()
    }

    /// `H_m` as a set of history ids.
    pub fn through(&self, m: usize) -> Bits {
        self.through[m]
    }

    /// Moment-history pairs in canonical order (moment, then history).
    pub fn mh_pairs(&self) -> Vec<(usize, usize)> {
        self.moments()
            .flat_map(|m| self.through(m).iter().map(move |h| (m, h)))
            .collect()
    }

    /// `h ≈_m g`, reported without checking membership in `H_m`.
    pub fn undivided(&self, m: usize, h: usize, g: usize) -> bool {
        let shared = self.histories[h].intersection(self.histories[g]);
        shared.iter().any(|m2| self.lt(m, m2))
    }

    /// `h ≈_m g`.
    pub fn undivided_at(&self, m: usize, h: usize, g: usize) -> Result<bool, FrameError> {
        for x in [h, g] {
            if x >= self.history_count() || !self.through(m).contains(x) {
                return Err(FrameError::NotThrough {
                    history: x,
                    moment: self.names[m].clone(),
                });
            }
        }
        Ok(self.undivided(m, h, g))
    }

    /// `H_m` split into `≈_m` classes, ordered by least member.
    pub fn undivided_classes(&self, m: usize) -> Vec<Bits> {
        let mut classes: Vec<Bits> = Vec::new();
        for h in self.through(m).iter() {
            match classes
                .iter_mut()
                .find(|c| self.undivided(m, c.first().unwrap(), h))
            {
                Some(c) => c.insert(h),
                None => classes.push(Bits::singleton(h)),
            }
        }
        classes
    }

    /// Checks the partial-order axioms, historical connection and no
    /// backward branching.
    pub fn validate(&self) -> Diagnostics {
        let mut d = Diagnostics::new();
        let n = self.len();
        let name = |m: usize| self.names[m].as_str();
        if let Some(m) = self.le.first_irreflexive() {
            d.push(Violation::new(Constraint::Reflexivity).with("m", name(m)));
        }
        if let Some((a, b, c)) = self.le.first_intransitive() {
            d.push(
                Violation::new(Constraint::Transitivity)
                    .with("m", name(a))
                    .with("m1", name(b))
                    .with("m2", name(c)),
            );
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.le(a, b) && self.le(b, a) {
                    d.push(
                        Violation::new(Constraint::Antisymmetry)
                            .with("m", name(a))
                            .with("m1", name(b)),
                    );
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let common = self
                    .le
                    .predecessors(a)
                    .intersection(self.le.predecessors(b));
                if common.is_empty() {
                    d.push(
                        Violation::new(Constraint::HistoricalConnection)
                            .with("m", name(a))
                            .with("m1", name(b)),
                    );
                }
            }
        }
        for m in 0..n {
            let below = self.le.predecessors(m).to_vec();
            'outer: for (i, &a) in below.iter().enumerate() {
                for &b in &below[i + 1..] {
                    if !self.le(a, b) && !self.le(b, a) {
                        d.push(
                            Violation::new(Constraint::NoBackwardBranching)
                                .with("m", name(m))
                                .with("m1", name(a))
                                .with("m2", name(b)),
                        );
                        break 'outer;
                    }
                }
            }
        }
        if self.has_density() {
            d.warn(format!(
                "frame carries {} density annotation(s); Next and the Θ conditions treat annotated edges as dense intervals of virtual moments",
                self.dense.len()
            ));
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fork() -> TemporalFrame {
        TemporalFrame::from_parents(&[None, Some(0), Some(0)]).unwrap()
    }

    #[test]
    fn single_moment_has_one_history() {
        let t = TemporalFrame::from_parents(&[None]).unwrap();
        assert_eq!(t.histories(), &[Bits::singleton(0)]);
        assert_eq!(t.through(0).to_vec(), vec![0]);
    }

    #[test]
    fn fork_has_two_histories() {
        let t = fork();
        let hs: Vec<Vec<usize>> = t.histories().iter().map(|h| h.to_vec()).collect();
        assert_eq!(hs, vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(t.through(0).len(), 2);
        assert_eq!(t.through(1).to_vec(), vec![0]);
    }

    #[test]
    fn chain_has_one_history() {
        let t = TemporalFrame::from_parents(&[None, Some(0), Some(1)]).unwrap();
        assert_eq!(t.histories().len(), 1);
        assert!(t.next(0, 1));
        assert!(!t.next(0, 2));
        assert!(!t.next(0, 0));
    }

    #[test]
    fn undivided_relation() {
        let t = TemporalFrame::from_parents(&[None, Some(0), Some(1), Some(1)]).unwrap();
        // histories {0,1,2}, {0,1,3}: undivided at 0, divided at 1
        assert!(t.undivided_at(0, 0, 1).unwrap());
        assert!(!t.undivided_at(1, 0, 1).unwrap());
        assert!(t.undivided_at(1, 0, 0).unwrap());
        assert!(t.undivided_at(2, 0, 1).is_err());
        let f = fork();
        assert!(!f.undivided_at(0, 0, 1).unwrap());
        assert_eq!(f.undivided_classes(0).len(), 2);
    }

    #[test]
    fn density_blocks_next() {
        let t = fork().with_density([(0, 1)]).unwrap();
        assert!(!t.next(0, 1));
        assert!(t.next(0, 2));
        assert!(t.dense_in(1));
        assert!(t.virtual_between(0, 1));
        assert!(fork().with_density([(1, 0)]).is_err());
        // a pair farther up is normalised to the cover edge
        let chain = TemporalFrame::from_parents(&[None, Some(0), Some(1)])
            .unwrap()
            .with_density([(0, 2)])
            .unwrap();
        assert!(chain.is_dense_edge(0, 1));
    }

    #[test]
    fn validation_reports_witnesses() {
        let names = vec!["a".to_string(), "b".to_string()];
        let t = TemporalFrame::from_pairs(names, []).unwrap();
        let d = t.validate();
        let v = d.first(Constraint::HistoricalConnection).unwrap();
        assert_eq!(v.witness_value("m"), Some("a"));
        assert_eq!(v.witness_value("m1"), Some("b"));

        let names = vec!["a".into(), "b".into(), "top".into()];
        let diamond = TemporalFrame::from_pairs(names, [(0, 2), (1, 2)]).unwrap();
        assert!(diamond.validate().has(Constraint::NoBackwardBranching));

        assert!(fork().validate().is_ok());
    }
}
