use crate::bits::Bits;

/// Binary relation on `0..n` stored as successor rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<Bits>,
}

impl Relation {
    pub fn empty(n: usize) -> Relation {
        Relation {
            rows: vec![Bits::empty(); n],
        }
    }

    pub fn identity(n: usize) -> Relation {
        Relation {
            rows: (0..n).map(Bits::singleton).collect(),
        }
    }

    pub fn total(n: usize) -> Relation {
        Relation {
            rows: vec![Bits::full(n); n],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Relation {
        let mut r = Relation::empty(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn from_rows(rows: Vec<Bits>) -> Relation {
        Relation { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.rows[a].insert(b);
    }

    /// `{b : a R b}`
    pub fn successors(&self, a: usize) -> Bits {
        self.rows[a]
    }

    /// `{a : a R b}`
    pub fn predecessors(&self, b: usize) -> Bits {
        (0..self.len()).filter(|&a| self.holds(a, b)).collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |b| (a, b)))
    }

    pub fn union(&self, other: &Relation) -> Relation {
        Relation {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.union(*b))
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(*b))
    }

    /// First pair in `self` missing from `other`.
    pub fn first_missing_in(&self, other: &Relation) -> Option<(usize, usize)> {
        self.pairs().find(|&(a, b)| !other.holds(a, b))
    }

    pub fn reflexive_transitive_closure(&self) -> Relation {
        let n = self.len();
        let mut rows = self.rows.clone();
        for (a, row) in rows.iter_mut().enumerate() {
            row.insert(a);
        }
        // Warshall
        for k in 0..n {
            for a in 0..n {
                if rows[a].contains(k) {
                    rows[a] = rows[a].union(rows[k]);
                }
            }
        }
        Relation { rows }
    }

    pub fn first_irreflexive(&self) -> Option<usize> {
        (0..self.len()).find(|&a| !self.holds(a, a))
    }

    /// First `(a, b, c)` with `a R b`, `b R c` but not `a R c`.
    pub fn first_intransitive(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.len() {
            for b in self.rows[a].iter() {
                let missing = self.rows[b].difference(self.rows[a]);
                if let Some(c) = missing.first() {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    pub fn is_preorder(&self) -> bool {
        self.first_irreflexive().is_none() && self.first_intransitive().is_none()
    }
}
