//! Independent brute-force oracles. Everything here is recomputed from the
//! raw order, density, relation and model data by direct quantifier
//! expansion; only the library's history numbering is reused, to compare
//! truth sets.
#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::HashMap;

use jstit::{Bits, Formula, JstitFrame, JstitModel, Polynomial, TemporalFrame};

pub fn bit(s: u64, i: usize) -> bool {
    s >> i & 1 == 1
}

/// Frame facts by brute force. An annotated edge `(a, b)` stands for a
/// dense run of moments between `a` and its cover `b`.
pub struct Oracle {
    pub n: usize,
    le: Vec<Vec<bool>>,
    /// annotated cover edges
    dense: Vec<(usize, usize)>,
    r: Vec<Vec<bool>>,
    re: Vec<Vec<bool>>,
    /// maximal chains as moment masks
    pub hists: Vec<u64>,
}

impl Oracle {
    pub fn new(f: &JstitFrame) -> Oracle {
        let n = f.len();
        let rel = |holds: &dyn Fn(usize, usize) -> bool| -> Vec<Vec<bool>> {
            (0..n)
                .map(|a| (0..n).map(|b| holds(a, b)).collect())
                .collect()
        };
        let le = rel(&|a, b| f.order().holds(a, b));
        let mut o = Oracle {
            n,
            le,
            dense: f.density().iter().copied().collect(),
            r: rel(&|a, b| f.r().holds(a, b)),
            re: rel(&|a, b| f.re().holds(a, b)),
            hists: Vec::new(),
        };
        o.hists = o.maximal_chains();
        o
    }

    pub fn temporal(t: &TemporalFrame) -> Oracle {
        let c = jstit::StitFrame::trivial(t.clone(), 1).unwrap();
        Oracle::new(&JstitFrame::temporal_epistemics(c))
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    fn maximal_chains(&self) -> Vec<u64> {
        let n = self.n;
        let chain = |s: u64| {
            (0..n)
                .all(|a| (0..n).all(|b| !bit(s, a) || !bit(s, b) || self.le(a, b) || self.le(b, a)))
        };
        let chains: Vec<u64> = (1u64..1 << n).filter(|&s| chain(s)).collect();
        chains
            .iter()
            .copied()
            .filter(|&s| !chains.iter().any(|&t| t != s && t & s == s))
            .collect()
    }

    pub fn through(&self, m: usize) -> Vec<u64> {
        self.hists.iter().copied().filter(|&h| bit(h, m)).collect()
    }

    /// Some annotated edge leaves `a` toward `b`.
    fn dense_toward(&self, a: usize, b: usize) -> bool {
        self.dense.iter().any(|&(x, c)| x == a && self.le(c, b))
    }

    pub fn dense_in(&self, b: usize) -> bool {
        self.dense.iter().any(|&(_, c)| c == b)
    }

    /// `m ⊲ m1 ∧ (∀m2 ⊲ m1) m2 ⊴ m`, virtual moments included.
    pub fn next(&self, m: usize, m1: usize) -> bool {
        self.lt(m, m1)
            && (0..self.n).all(|m2| !self.lt(m2, m1) || self.le(m2, m))
            && !self.dense_toward(m, m1)
    }

    /// Some moment, actual or virtual, lies strictly between.
    fn gap(&self, a: usize, b: usize) -> bool {
        (0..self.n).any(|c| self.lt(a, c) && self.lt(c, b)) || self.dense_toward(a, b)
    }

    pub fn undivided(&self, m: usize, h: u64, g: u64) -> bool {
        (0..self.n).any(|m1| self.lt(m, m1) && bit(h, m1) && bit(g, m1))
    }

    pub fn mixsucc(&self) -> bool {
        (0..self.n).all(|m| {
            let all_undivided = self
                .through(m)
                .iter()
                .all(|&h| self.through(m).iter().all(|&g| self.undivided(m, h, g)));
            (0..self.n).all(|m1| {
                !self.lt(m, m1)
                    || (0..self.n).any(|m2| self.le(m2, m1) && self.next(m, m2))
                    || all_undivided
            })
        })
    }

    /// Conditions 2-4 of the `Θ` definition for `s ⊆ Tree`; a virtual
    /// moment belongs to `s` iff the top of its edge does.
    pub fn closed(&self, s: u64) -> bool {
        let n = self.n;
        let c2 = (0..n).all(|m1| !bit(s, m1) || (0..n).all(|m2| !self.re[m1][m2] || bit(s, m2)));
        let c3 = (0..n).all(|m1| {
            let forced = self
                .through(m1)
                .iter()
                .all(|&h| (0..n).any(|m2| bit(h, m2) && self.next(m1, m2) && bit(s, m2)));
            !forced || bit(s, m1)
        });
        let c4 = (0..n).all(|m1| {
            let no_immediate = (0..n).all(|m2| !self.lt(m2, m1) || self.gap(m2, m1));
            !bit(s, m1)
                || !no_immediate
                || self.dense_in(m1)
                || (0..n).any(|m4| self.lt(m4, m1) && bit(s, m4))
        });
        c2 && c3 && c4
    }

    pub fn theta(&self, m: usize) -> Vec<u64> {
        (1u64..1 << self.n)
            .filter(|&s| bit(s, m) && self.closed(s))
            .collect()
    }

    pub fn regular(&self) -> bool {
        let n = self.n;
        let closed: Vec<u64> = (1u64..1 << n).filter(|&s| self.closed(s)).collect();
        (0..n).all(|m| {
            (0..n).all(|m1| {
                if !self.lt(m, m1) || (0..n).any(|m2| self.le(m2, m1) && self.next(m, m2)) {
                    return true;
                }
                let interval: u64 = (0..n)
                    .filter(|&m0| self.lt(m, m0) && self.le(m0, m1))
                    .fold(0, |a, m0| a | 1 << m0);
                let antecedent = closed.iter().any(|&s| {
                    s & interval == interval
                        && !bit(s, m)
                        && self.through(m).iter().any(|&h| {
                            self.through(m1).iter().all(|&g| !self.undivided(m, h, g))
                                && (0..n).all(|m2| !bit(h, m2) || !self.next(m, m2) || !bit(s, m2))
                        })
                });
                !antecedent
            })
        })
    }
}

/// Satisfaction by direct recursion over the expanded carrier: actual
/// moments, then one clone of `b` per annotated edge `(a, b)`.
pub struct NaiveEval<'a> {
    model: &'a JstitModel,
    o: Oracle,
    origin: Vec<usize>,
    memo: RefCell<HashMap<(usize, u64, *const Formula), bool>>,
}

impl<'a> NaiveEval<'a> {
    pub fn new(model: &'a JstitModel) -> NaiveEval<'a> {
        let f = model.frame();
        let o = Oracle::new(f);
        let mut origin: Vec<usize> = (0..f.len()).collect();
        origin.extend(f.density().iter().map(|&(_, b)| b));
        NaiveEval {
            model,
            o,
            origin,
            memo: RefCell::new(HashMap::new()),
        }
    }

    fn hid(&self, h: u64) -> usize {
        let f = self.model.frame();
        (0..f.history_count())
            .find(|&i| f.history(i).0 == h)
            .expect("oracle history is a library history")
    }

    fn hs(&self, x: usize) -> Vec<u64> {
        self.o.through(self.origin[x])
    }

    fn everywhere(&self, rel: &[Vec<bool>], x: usize, a: &Formula) -> bool {
        (0..self.origin.len())
            .filter(|&y| rel[self.origin[x]][self.origin[y]])
            .all(|y| self.hs(y).iter().all(|&g| self.sat(y, g, a)))
    }

    fn poly(&self, t: &Polynomial) -> usize {
        self.model
            .universe()
            .poly_index(t)
            .expect("polynomial in universe")
    }

    pub fn sat(&self, x: usize, h: u64, f: &Formula) -> bool {
        let key = (x, h, f as *const Formula);
        if let Some(&v) = self.memo.borrow().get(&key) {
            return v;
        }
        let m = self.model;
        let actual = x < m.frame().len();
        let o = self.origin[x];
        let v = match f {
            Formula::Prop(p) => m.holds(p, o, self.hid(h)),
            Formula::Not(a) => !self.sat(x, h, a),
            Formula::And(a, b) => self.sat(x, h, a) && self.sat(x, h, b),
            Formula::Box(a) => self.hs(x).iter().all(|&g| self.sat(x, g, a)),
            Formula::Cstit(j, a) => {
                let cell = if actual {
                    m.frame().choice_cell(x, j.0, self.hid(h))
                } else {
                    Bits::full(64)
                };
                self.hs(x)
                    .iter()
                    .filter(|&&g| cell.contains(self.hid(g)))
                    .all(|&g| self.sat(x, g, a))
            }
            Formula::Knows(a) => self.everywhere(&self.o.r, x, a),
            Formula::Proves(t, a) => {
                let e = m.evidence(o, self.poly(t));
                e.contains(m.universe().formula_index(a)) && self.everywhere(&self.o.re, x, a)
            }
            Formula::Announced(t) => {
                let ti = self.poly(t);
                if actual {
                    m.act(x, self.hid(h)).contains(ti)
                } else {
                    self.hs(x)
                        .iter()
                        .all(|&g| m.act(o, self.hid(g)).contains(ti))
                }
            }
        };
        self.memo.borrow_mut().insert(key, v);
        v
    }

    /// Per actual moment, the library ids of histories where `f` holds.
    pub fn truth_sets(&self, f: &Formula) -> Vec<Bits> {
        (0..self.model.frame().len())
            .map(|m| {
                self.hs(m)
                    .iter()
                    .filter(|&&h| self.sat(m, h, f))
                    .map(|&h| self.hid(h))
                    .collect()
            })
            .collect()
    }
}

/// Rooted trees on `n` labeled moments with parents before children.
pub fn parent_arrays(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![vec![None]];
    for i in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..i).map(move |q| {
                    let mut p = p.clone();
                    p.push(Some(q));
                    p
                })
            })
            .collect();
    }
    out
}

/// Every tree with at most `max` moments, with every set of annotated edges.
pub fn annotated_trees(max: usize) -> Vec<TemporalFrame> {
    let mut out = Vec::new();
    for n in 1..=max {
        for parents in parent_arrays(n) {
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (parents[i].unwrap(), i)).collect();
            for mask in 0u64..1 << edges.len() {
                let dense = edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bit(mask, *i))
                    .map(|(_, &e)| e);
                out.push(
                    TemporalFrame::from_parents(&parents)
                        .unwrap()
                        .with_density(dense)
                        .unwrap(),
                );
            }
        }
    }
    out
}

/// Every preorder containing `base`.
pub fn preorders_above(base: &jstit::Relation) -> Vec<jstit::Relation> {
    let n = base.len();
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !base.holds(a, b))
        .collect();
    let mut out: Vec<jstit::Relation> = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut r = base.clone();
        for (i, &(a, b)) in free.iter().enumerate() {
            if bit(mask, i) {
                r.insert(a, b);
            }
        }
        if r.is_preorder() {
            out.push(r);
        }
    }
    out
}

/// Classical validity by truth tables over the maximal non-boolean
/// subformulas.
pub fn truth_table_tautology(f: &Formula) -> bool {
    fn atoms<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::And(a, b) => {
                atoms(a, out);
                atoms(b, out);
            }
            Formula::Not(a) => atoms(a, out),
            other => {
                if !out.contains(&other) {
                    out.push(other);
                }
            }
        }
    }
    fn eval(f: &Formula, atoms: &[&Formula], v: u64) -> bool {
        match f {
            Formula::And(a, b) => eval(a, atoms, v) && eval(b, atoms, v),
            Formula::Not(a) => !eval(a, atoms, v),
            other => bit(v, atoms.iter().position(|a| *a == other).unwrap()),
        }
    }
    let mut xs = Vec::new();
    atoms(f, &mut xs);
    assert!(xs.len() < 20, "too many atoms for a truth table");
    (0u64..1 << xs.len()).all(|v| eval(f, &xs, v))
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

/// `R_D` applicability: some ordering of the conclusion's literals equals
/// the premise's literal list.
pub fn rd_oracle(premise: &[(bool, Polynomial)], conclusion: &[(bool, Polynomial)]) -> bool {
    !premise.is_empty()
        && permutations(conclusion)
            .iter()
            .any(|p| p.as_slice() == premise)
}
