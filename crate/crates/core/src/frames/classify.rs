//! Frame classifiers: mixed successor frames, the `Θ_m` families, regular
//! jstit frames and unirelational jstit frames.

use super::{FrameError, JstitFrame, TemporalFrame};
use crate::bits::Bits;

/// Default cap on `|Tree|` for `Θ` enumeration.
pub const DEFAULT_THETA_CAP: usize = 16;

/// A pair `m0 ⊲ m1` where both disjuncts of (mixsucc) fail, with two
/// histories through `m0` divided at `m0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixsuccWitness {
    pub m0: usize,
    pub m1: usize,
    pub h0: usize,
    pub h1: usize,
}

/// An instantiation of the antecedent of (reg) whose consequent fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegWitness {
    pub m0: usize,
    pub m1: usize,
    pub h_prime: usize,
    pub s: Bits,
}

/// `(∃m2 ⊴ m1) Next(m, m2)`
pub fn has_next_below(t: &TemporalFrame, m: usize, m1: usize) -> bool {
    t.moments().any(|m2| t.le(m2, m1) && t.next(m, m2))
}

/// Checks (mixsucc); returns the first violating witness in canonical order.
pub fn mixsucc_witness(t: &TemporalFrame) -> Option<MixsuccWitness> {
    for m0 in t.moments() {
        let hm = t.through(m0).to_vec();
        let divided = hm.iter().enumerate().find_map(|(i, &h)| {
            hm[i + 1..]
                .iter()
                .find(|&&g| !t.undivided(m0, h, g))
                .map(|&g| (h, g))
        });
        let Some((h0, h1)) = divided else { continue };
        for m1 in t.strict_successors(m0).iter() {
            if !has_next_below(t, m0, m1) {
                return Some(MixsuccWitness { m0, m1, h0, h1 });
            }
        }
    }
    None
}

pub fn is_mixsucc(t: &TemporalFrame) -> bool {
    mixsucc_witness(t).is_none()
}

/// Per-frame data shared by every `Θ` membership test.
struct ThetaContext {
    n: usize,
    re_rows: Vec<Bits>,
    /// for each `m1`, per history through `m1`, the `Next`-successors of
    /// `m1` on that history
    next_on: Vec<Vec<Bits>>,
    /// for each `m1`: whether every strict predecessor has something
    /// (actual or virtual) strictly between it and `m1`
    no_immediate_pred: Vec<bool>,
    preds: Vec<Bits>,
    dense_in: Vec<bool>,
}

impl ThetaContext {
    fn new(f: &JstitFrame) -> ThetaContext {
        let n = f.len();
        let next_on = (0..n)
            .map(|m1| {
                f.through(m1)
                    .iter()
                    .map(|h| f.history(h).iter().filter(|&m2| f.next(m1, m2)).collect())
                    .collect()
            })
            .collect();
        let no_immediate_pred = (0..n)
            .map(|m1| {
                f.strict_predecessors(m1).iter().all(|m2| {
                    f.moments().any(|m3| f.lt(m2, m3) && f.lt(m3, m1)) || f.virtual_between(m2, m1)
                })
            })
            .collect();
        ThetaContext {
            n,
            re_rows: (0..n).map(|m| f.re().successors(m)).collect(),
            next_on,
            no_immediate_pred,
            preds: (0..n).map(|m| f.strict_predecessors(m)).collect(),
            dense_in: (0..n).map(|m| f.dense_in(m)).collect(),
        }
    }

    /// Condition 4; virtual moments below an annotated edge into `m1`
    /// belong to `S` exactly when `m1` does.
    fn cond4(&self, s: Bits) -> bool {
        s.iter().all(|m1| {
            !self.no_immediate_pred[m1]
                || self.dense_in[m1]
                || !self.preds[m1].intersection(s).is_empty()
        })
    }

    fn cond2(&self, s: Bits) -> bool {
        s.iter().all(|m1| self.re_rows[m1].is_subset(s))
    }

    fn cond3(&self, s: Bits) -> bool {
        (0..self.n).filter(|&m1| !s.contains(m1)).all(|m1| {
            !self.next_on[m1]
                .iter()
                .all(|succ| !succ.intersection(s).is_empty())
        })
    }

    fn closed(&self, s: Bits) -> bool {
        self.cond4(s) && self.cond2(s) && self.cond3(s)
    }
}

/// First failing condition (2, 3 or 4) of the `Θ` definition for `s`, or
/// `None` when `s` satisfies all three.
pub fn theta_condition_failure(f: &JstitFrame, s: Bits) -> Option<u8> {
    let ctx = ThetaContext::new(f);
    if !ctx.cond2(s) {
        Some(2)
    } else if !ctx.cond3(s) {
        Some(3)
    } else if !ctx.cond4(s) {
        Some(4)
    } else {
        None
    }
}

/// All `S ⊆ Tree` satisfying conditions 2-4 of the `Θ` definition, so that
/// `Θ_m` is the subfamily containing `m`. Sorted by bit value.
#[derive(Debug, Clone)]
pub struct ThetaFamily {
    closed: Vec<Bits>,
}

impl ThetaFamily {
    pub fn compute(f: &JstitFrame) -> Result<ThetaFamily, FrameError> {
        Self::compute_capped(f, DEFAULT_THETA_CAP)
    }

    pub fn compute_capped(f: &JstitFrame, cap: usize) -> Result<ThetaFamily, FrameError> {
        let n = f.len();
        if n > cap {
            return Err(FrameError::ThetaTooLarge { moments: n, cap });
        }
        let ctx = ThetaContext::new(f);
        let closed = (1u64..(1u64 << n))
            .map(Bits)
            .filter(|&s| ctx.closed(s))
            .collect();
        Ok(ThetaFamily { closed })
    }

    pub fn closed_sets(&self) -> &[Bits] {
        &self.closed
    }

    /// `Θ_m`
    pub fn theta(&self, m: usize) -> Vec<Bits> {
        self.closed
            .iter()
            .copied()
            .filter(|s| s.contains(m))
            .collect()
    }

    /// `⋂_{m ∈ required} Θ_m` for a nonempty `required`.
    pub fn containing(&self, required: Bits) -> impl Iterator<Item = Bits> + '_ {
        self.closed
            .iter()
            .copied()
            .filter(move |s| required.is_subset(*s))
    }
}

/// `Θ_m`, enumerating subsets with `m` tested first.
pub fn theta(f: &JstitFrame, m: usize) -> Result<Vec<Bits>, FrameError> {
    theta_capped(f, m, DEFAULT_THETA_CAP)
}

pub fn theta_capped(f: &JstitFrame, m: usize, cap: usize) -> Result<Vec<Bits>, FrameError> {
    let n = f.len();
    if n > cap {
        return Err(FrameError::ThetaTooLarge { moments: n, cap });
    }
    let ctx = ThetaContext::new(f);
    let rest = Bits::full(n).difference(Bits::singleton(m)).to_vec();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << rest.len()) {
        let mut s = Bits::singleton(m);
        for (i, &x) in rest.iter().enumerate() {
            if bits >> i & 1 == 1 {
                s.insert(x);
            }
        }
        if ctx.closed(s) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Checks (reg); returns the first violating witness in canonical order.
pub fn regular_witness(f: &JstitFrame) -> Result<Option<RegWitness>, FrameError> {
    regular_witness_capped(f, DEFAULT_THETA_CAP)
}

pub fn regular_witness_capped(
    f: &JstitFrame,
    cap: usize,
) -> Result<Option<RegWitness>, FrameError> {
    // Θ is only needed where the consequent can fail.
    let candidates: Vec<(usize, usize)> = f
        .moments()
        .flat_map(|m0| f.strict_successors(m0).iter().map(move |m1| (m0, m1)))
        .filter(|&(m0, m1)| !has_next_below(f, m0, m1))
        .collect();
    if candidates.is_empty() {
        return Ok(None);
    }
    let family = ThetaFamily::compute_capped(f, cap)?;
    for (m0, m1) in candidates {
        let interval: Bits = f
            .moments()
            .filter(|&x| f.lt(m0, x) && f.le(x, m1))
            .collect();
        let hm1 = f.through(m1);
        let candidates_h: Vec<usize> = f
            .through(m0)
            .iter()
            .filter(|&h| hm1.iter().all(|g| !f.undivided(m0, h, g)))
            .collect();
        if candidates_h.is_empty() {
            continue;
        }
        for s in family.containing(interval) {
            if s.contains(m0) {
                continue;
            }
            for &h in &candidates_h {
                let next_ok = f
                    .history(h)
                    .iter()
                    .all(|m2| !f.next(m0, m2) || !s.contains(m2));
                if next_ok {
                    return Ok(Some(RegWitness {
                        m0,
                        m1,
                        h_prime: h,
                        s,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_regular(f: &JstitFrame) -> Result<bool, FrameError> {
    Ok(regular_witness(f)?.is_none())
}

/// `R_e ⊆ R`
pub fn is_unirelational(f: &JstitFrame) -> bool {
    f.re().is_subset(f.r())
}

/// Everything `classify` reports about a jstit frame.
#[derive(Debug, Clone)]
pub struct Classification {
    pub mixsucc: Option<MixsuccWitness>,
    pub regular: Option<RegWitness>,
    pub unirelational: bool,
    pub theta_sizes: Vec<usize>,
    pub uses_density: bool,
}

pub fn classify(f: &JstitFrame) -> Result<Classification, FrameError> {
    let family = ThetaFamily::compute(f)?;
    Ok(Classification {
        mixsucc: mixsucc_witness(f),
        regular: regular_witness(f)?,
        unirelational: is_unirelational(f),
        theta_sizes: f.moments().map(|m| family.theta(m).len()).collect(),
        uses_density: f.has_density(),
    })
}
