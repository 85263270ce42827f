//! Exhaustive counter-model search over small tree-shaped frames.
//!
//! Cost model: the search visits, in order, moment counts `1..=max_moments`,
//! parent arrays, choice partitions, pairs of preorders `⊴ ⊆ R ⊆ R_e`,
//! evidence assignments, presentation patterns and valuations. Every
//! visited `(R, R_e)` pair and every evaluated model counts one step
//! against the budget; exceeding it is a [`SearchError::Resource`].
//! With `density` set, each tree is also visited with every subset of its
//! cover edges annotated dense. Presentations only range over the target's polynomials and are chosen
//! per polynomial from the single-polynomial solutions of the `Act`
//! constraints (these constraints never relate two polynomials).

use std::collections::BTreeSet;

use thiserror::Error;

use super::{Evaluator, Index, SemanticsError};
use crate::bits::Bits;
use crate::frames::{JstitFrame, Relation, StitFrame, TemporalFrame};
use crate::models::{validate_model, EvidenceSet, JstitModel, ModelError, Universe};
use crate::syntax::{prop_vars, subformulas, Formula};

/// Largest frames the search accepts.
pub const MAX_SEARCH_MOMENTS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvidenceMode {
    /// `E ≡ Everything`; the search is exhaustive for this regime.
    Everything,
    /// Each `E(m,t)` ranges over `Everything` and the subsets of
    /// `{A : t:A occurs in the target}`, subject to the evidence constraints.
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_moments: usize,
    pub max_histories: usize,
    pub agents: usize,
    pub evidence_mode: EvidenceMode,
    pub budget: u64,
    /// Also visit every set of density annotations on the cover edges.
    pub density: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_moments: 3,
            max_histories: 3,
            agents: 1,
            evidence_mode: EvidenceMode::Everything,
            budget: 5_000_000,
            density: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget of {budget} steps exhausted")]
    Resource { budget: u64 },
    #[error("bound {what} = {value} exceeds the supported maximum {max}")]
    BoundsTooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone)]
pub struct Countermodel {
    pub model: JstitModel,
    pub index: Index,
    pub steps: u64,
}

struct Ticker {
    steps: u64,
    budget: u64,
}

impl Ticker {
    fn tick(&mut self, n: u64) -> Result<(), SearchError> {
        self.steps += n;
        if self.steps > self.budget {
            Err(SearchError::Resource {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}

/// Visits every vector `v` with `v[i] < radices[i]` in lexicographic order
/// until `f` returns `Some`.
fn odometer<T, E>(
    radices: &[usize],
    mut f: impl FnMut(&[usize]) -> Result<Option<T>, E>,
) -> Result<Option<T>, E> {
    if radices.contains(&0) {
        return Ok(None);
    }
    let mut v = vec![0; radices.len()];
    loop {
        if let Some(x) = f(&v)? {
            return Ok(Some(x));
        }
        let mut i = radices.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            v[i] += 1;
            if v[i] < radices[i] {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Parent arrays of rooted trees on `n` labeled moments with parents
/// preceding children.
fn parent_arrays(n: usize) -> Vec<Vec<Option<usize>>> {
    let radices: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    let _ = odometer::<(), ()>(&radices, |v| {
        let mut p = vec![None];
        p.extend(v.iter().map(|&x| Some(x)));
        out.push(p);
        Ok(None)
    });
    out
}

/// Set partitions of `items`, as lists of blocks.
fn set_partitions(items: &[Bits]) -> Vec<Vec<Bits>> {
    fn go(items: &[Bits], i: usize, blocks: &mut Vec<Bits>, out: &mut Vec<Vec<Bits>>) {
        if i == items.len() {
            let mut b = blocks.clone();
            b.sort();
            out.push(b);
            return;
        }
        for k in 0..blocks.len() {
            let old = blocks[k];
            blocks[k] = old.union(items[i]);
            go(items, i + 1, blocks, out);
            blocks[k] = old;
        }
        blocks.push(items[i]);
        go(items, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

/// Preorders containing `base`, in a deterministic order.
fn preorders_above(base: &Relation) -> Vec<Relation> {
    let n = base.len();
    let extra: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !base.holds(a, b))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << extra.len()) {
        let mut r = base.clone();
        for (i, &(a, b)) in extra.iter().enumerate() {
            if mask >> i & 1 == 1 {
                r.insert(a, b);
            }
        }
        if r.first_intransitive().is_none() {
            let key: Vec<(usize, usize)> = r.pairs().collect();
            if seen.insert(key) {
                out.push(r);
            }
        }
    }
    out
}

/// Single-polynomial presentation patterns: per moment, the histories
/// where the polynomial is presented.
fn act_patterns(f: &JstitFrame) -> Vec<Vec<Bits>> {
    let n = f.len();
    let options: Vec<Vec<Bits>> = f
        .moments()
        .map(|m| {
            let classes = f.undivided_classes(m);
            (0u64..(1u64 << classes.len()))
                .map(|mask| {
                    classes
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .fold(Bits::empty(), |acc, (_, c)| acc.union(*c))
                })
                .collect()
        })
        .collect();
    let radices: Vec<usize> = options.iter().map(Vec::len).collect();
    let mut out = Vec::new();
    let _ = odometer::<(), ()>(&radices, |v| {
        let pat: Vec<Bits> = (0..n).map(|m| options[m][v[m]]).collect();
        if act_pattern_ok(f, &pat) {
            out.push(pat);
        }
        Ok(None)
    });
    out
}

pub(crate) fn act_pattern_ok(f: &JstitFrame, pat: &[Bits]) -> bool {
    let settled = |m: usize| !f.through(m).is_empty() && f.through(m).is_subset(pat[m]);
    for m1 in f.moments() {
        let preds = f.strict_predecessors(m1);
        for m in preds.iter() {
            if !pat[m].intersection(f.through(m1)).is_subset(pat[m1]) {
                return false;
            }
        }
        if settled(m1)
            && !f.dense_in(m1)
            && preds
                .iter()
                .all(|m| pat[m].intersection(f.through(m1)).is_empty())
        {
            return false;
        }
    }
    f.re().pairs().all(|(m, m1)| !settled(m) || settled(m1))
}

/// Evidence assignments for `Enumerate` mode: `options[t]` lists candidate
/// values of `E(·,t)` at one moment.
fn evidence_options(u: &Universe, target: &Formula) -> Vec<Vec<EvidenceSet>> {
    let subs = subformulas(target);
    (0..u.poly_count())
        .map(|t| {
            let evidenced: Vec<usize> = subs
                .iter()
                .filter_map(|g| match g {
                    Formula::Proves(s, a) if u.poly_index(s) == Some(t) => u.formula_index(a),
                    _ => None,
                })
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let mut opts = vec![EvidenceSet::Everything];
            for mask in 0u64..(1u64 << evidenced.len()) {
                let set = evidenced
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &a)| a)
                    .collect();
                opts.push(EvidenceSet::Finite(set));
            }
            opts
        })
        .collect()
}

/// Searches for a model and index falsifying `target`.
pub fn find_countermodel(
    target: &Formula,
    bounds: Bounds,
) -> Result<Option<Countermodel>, SearchError> {
    if bounds.max_moments > MAX_SEARCH_MOMENTS {
        return Err(SearchError::BoundsTooLarge {
            what: "max_moments",
            value: bounds.max_moments,
            max: MAX_SEARCH_MOMENTS,
        });
    }
    let agents = bounds.agents.max(target.max_agent().map_or(1, |j| j + 1));
    let universe = Universe::from_formulas([target])?;
    let props = prop_vars(target);
    let polys = universe.poly_count();
    let ev_options = match bounds.evidence_mode {
        EvidenceMode::Everything => Vec::new(),
        EvidenceMode::Enumerate => evidence_options(&universe, target),
    };
    let mut ticker = Ticker {
        steps: 0,
        budget: bounds.budget,
    };
    for n in 1..=bounds.max_moments {
        for parents in parent_arrays(n) {
            let plain = TemporalFrame::from_parents(&parents).map_err(ModelError::from)?;
            if plain.history_count() > bounds.max_histories {
                continue;
            }
            let edges: Vec<(usize, usize)> =
                (1..n).map(|i| (parents[i].expect("non-root"), i)).collect();
            let masks = if bounds.density {
                1u64 << edges.len()
            } else {
                1
            };
            for mask in 0..masks {
                let dense = edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let t = plain
                    .clone()
                    .with_density(dense)
                    .map_err(ModelError::from)?;
                for stit in choice_frames(&t, agents)? {
                    let le = stit.order().clone();
                    for r in preorders_above(&le) {
                        for re in preorders_above(&r) {
                            ticker.tick(1)?;
                            let frame = JstitFrame::new(stit.clone(), r.clone(), re.clone());
                            let found = search_frame(
                                target,
                                &frame,
                                &universe,
                                &props,
                                polys,
                                &ev_options,
                                &mut ticker,
                            )?;
                            if let Some((model, index)) = found {
                                return Ok(Some(Countermodel {
                                    model,
                                    index,
                                    steps: ticker.steps,
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn choice_frames(t: &TemporalFrame, agents: usize) -> Result<Vec<StitFrame>, SearchError> {
    let base = StitFrame::trivial(t.clone(), agents).map_err(ModelError::from)?;
    let per_moment: Vec<Vec<Vec<Bits>>> = t
        .moments()
        .map(|m| set_partitions(&t.undivided_classes(m)))
        .collect();
    let slots: Vec<(usize, usize)> = t
        .moments()
        .flat_map(|m| (0..agents).map(move |j| (m, j)))
        .collect();
    let radices: Vec<usize> = slots.iter().map(|&(m, _)| per_moment[m].len()).collect();
    let mut out = Vec::new();
    odometer::<(), SearchError>(&radices, |v| {
        let mut c = base.clone();
        for (k, &(m, j)) in slots.iter().enumerate() {
            c.set_choice(m, j, per_moment[m][v[k]].clone())
                .map_err(ModelError::from)?;
        }
        if c.validate().is_ok() {
            out.push(c);
        }
        Ok(None)
    })?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_frame(
    target: &Formula,
    frame: &JstitFrame,
    universe: &Universe,
    props: &[String],
    polys: usize,
    ev_options: &[Vec<EvidenceSet>],
    ticker: &mut Ticker,
) -> Result<Option<(JstitModel, Index)>, SearchError> {
    let n = frame.len();
    let patterns = act_patterns(frame);
    let blank = JstitModel::new(frame.clone(), universe.clone());
    let ev_slots: Vec<(usize, usize)> = if ev_options.is_empty() {
        Vec::new()
    } else {
        (0..n)
            .flat_map(|m| (0..polys).map(move |t| (m, t)))
            .collect()
    };
    let ev_radices: Vec<usize> = ev_slots.iter().map(|&(_, t)| ev_options[t].len()).collect();
    let val_slots: Vec<(usize, usize)> = props
        .iter()
        .enumerate()
        .flat_map(|(p, _)| (0..n).map(move |m| (p, m)))
        .collect();
    let val_radices: Vec<usize> = val_slots
        .iter()
        .map(|&(_, m)| 1usize << frame.through(m).len())
        .collect();
    let act_radices = vec![patterns.len(); polys];
    odometer(&ev_radices, |ev| {
        let mut with_ev = blank.clone();
        for (k, &(m, t)) in ev_slots.iter().enumerate() {
            with_ev.set_evidence(m, t, ev_options[t][ev[k]].clone());
        }
        if !ev_slots.is_empty() {
            ticker.tick(1)?;
            if !validate_model(&with_ev, None).is_ok() {
                return Ok(None);
            }
        }
        odometer(&act_radices, |act| {
            let mut with_act = with_ev.clone();
            for m in frame.moments() {
                for h in frame.through(m).iter() {
                    let bits: Bits = (0..polys)
                        .filter(|&t| patterns[act[t]][m].contains(h))
                        .collect();
                    with_act.set_act(m, h, bits)?;
                }
            }
            odometer(&val_radices, |val| {
                ticker.tick(1)?;
                let mut model = with_act.clone();
                for (k, &(p, m)) in val_slots.iter().enumerate() {
                    let hs = frame.through(m).to_vec();
                    for (i, &h) in hs.iter().enumerate() {
                        if val[k] >> i & 1 == 1 {
                            model.set_holds(&props[p], m, h, true)?;
                        }
                    }
                }
                let fail = Evaluator::new(&model).first_failure(target)?;
                Ok::<_, SearchError>(fail.map(|index| (model, index)))
            })
        })
    })
}
