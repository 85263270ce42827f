use std::collections::BTreeSet;

use super::ModelError;
use crate::syntax::{Formula, Polynomial};

/// `c_n : ... : c_1 : A` with the chain stored outermost first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CsEntry {
    pub chain: Vec<String>,
    pub core: Formula,
}

impl CsEntry {
    pub fn new(chain: Vec<String>, core: Formula) -> CsEntry {
        CsEntry { chain, core }
    }

    /// Peels the maximal leading chain of proof constants off `f`.
    pub fn from_formula(f: &Formula) -> Result<CsEntry, ModelError> {
        let mut chain = Vec::new();
        let mut cur = f;
        while let Formula::Proves(Polynomial::Const(c), inner) = cur {
            chain.push(c.clone());
            cur = inner;
        }
        if chain.is_empty() {
            return Err(ModelError::NotCsEntry(f.to_string()));
        }
        Ok(CsEntry {
            chain,
            core: cur.clone(),
        })
    }

    /// The formula after the outermost constant: `c_{n-1} : ... : A`.
    pub fn body(&self) -> Formula {
        self.chain[1..]
            .iter()
            .rev()
            .fold(self.core.clone(), |acc, c| {
                Formula::proves(Polynomial::constant(c.clone()), acc)
            })
    }

    pub fn formula(&self) -> Formula {
        Formula::proves(Polynomial::constant(self.chain[0].clone()), self.body())
    }

    pub fn outer(&self) -> &str {
        &self.chain[0]
    }
}

/// Downward-closed set of constant-annotated axiom instances. Missing
/// lower entries are added on construction and reported as warnings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstantSpecification {
    entries: BTreeSet<CsEntry>,
    completed: Vec<CsEntry>,
}

impl ConstantSpecification {
    pub fn new(given: impl IntoIterator<Item = CsEntry>) -> ConstantSpecification {
        let given: BTreeSet<CsEntry> = given.into_iter().collect();
        let mut entries = given.clone();
        let mut completed = Vec::new();
        for e in &given {
            for k in 1..e.chain.len() {
                let lower = CsEntry::new(e.chain[k..].to_vec(), e.core.clone());
                if !given.contains(&lower) && entries.insert(lower.clone()) {
                    completed.push(lower);
                }
            }
        }
        completed.sort();
        ConstantSpecification { entries, completed }
    }

    pub fn from_formulas<'a>(
        fs: impl IntoIterator<Item = &'a Formula>,
    ) -> Result<ConstantSpecification, ModelError> {
        let entries = fs
            .into_iter()
            .map(CsEntry::from_formula)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ConstantSpecification::new(entries))
    }

    pub fn empty() -> ConstantSpecification {
        ConstantSpecification::default()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CsEntry> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries added by downward completion.
    pub fn completed(&self) -> &[CsEntry] {
        &self.completed
    }

    pub fn warnings(&self) -> Vec<String> {
        self.completed
            .iter()
            .map(|e| format!("CS not downward closed; added {}", e.formula()))
            .collect()
    }

    pub fn contains_formula(&self, f: &Formula) -> bool {
        CsEntry::from_formula(f).is_ok_and(|e| self.entries.contains(&e))
    }

    /// Constants heading some entry, sorted.
    pub fn constants(&self) -> BTreeSet<&str> {
        self.entries.iter().map(CsEntry::outer).collect()
    }

    /// `{A | c:A ∈ CS}`
    pub fn specified(&self, c: &str) -> Vec<Formula> {
        self.entries
            .iter()
            .filter(|e| e.outer() == c)
            .map(CsEntry::body)
            .collect()
    }
}
