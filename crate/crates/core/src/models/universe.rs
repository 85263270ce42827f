use std::collections::{BTreeSet, HashMap};

use super::ModelError;
use crate::bits::Bits;
use crate::syntax::{subformulas, Formula, Polynomial};

/// Maximum number of polynomials a universe may hold.
pub const MAX_POLYNOMIALS: usize = 64;

/// Finite, subterm-closed carrier for evidence and presentations.
///
/// Polynomials are interned so that `Act(m,h)` fits in a [`Bits`]; every
/// polynomial is stored after all of its proper subterms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Universe {
    polys: Vec<Polynomial>,
    poly_ix: HashMap<Polynomial, usize>,
    formulas: Vec<Formula>,
    formula_ix: HashMap<Formula, usize>,
    props: BTreeSet<String>,
}

impl Universe {
    pub fn new() -> Universe {
        Universe::default()
    }

    pub fn from_formulas<'a>(
        fs: impl IntoIterator<Item = &'a Formula>,
    ) -> Result<Universe, ModelError> {
        let mut u = Universe::new();
        for f in fs {
            u.add_formula(f)?;
        }
        Ok(u)
    }

    /// Adds `t` and its subterms; returns the index of `t`.
    pub fn add_polynomial(&mut self, t: &Polynomial) -> Result<usize, ModelError> {
        if let Some(&i) = self.poly_ix.get(t) {
            return Ok(i);
        }
        match t {
            Polynomial::Var(_) | Polynomial::Const(_) => {}
            Polynomial::Sum(a, b) | Polynomial::App(a, b) => {
                self.add_polynomial(a)?;
                self.add_polynomial(b)?;
            }
            Polynomial::Check(a) => {
                self.add_polynomial(a)?;
            }
        }
        if self.polys.len() == MAX_POLYNOMIALS {
            return Err(ModelError::UniverseTooLarge(MAX_POLYNOMIALS + 1));
        }
        let i = self.polys.len();
        self.polys.push(t.clone());
        self.poly_ix.insert(t.clone(), i);
        Ok(i)
    }

    /// Adds `f` with all subformulas, polynomials and variables; returns
    /// the index of `f`.
    pub fn add_formula(&mut self, f: &Formula) -> Result<usize, ModelError> {
        if let Some(&i) = self.formula_ix.get(f) {
            return Ok(i);
        }
        for g in subformulas(f) {
            if self.formula_ix.contains_key(&g) {
                continue;
            }
            match &g {
                Formula::Prop(p) => {
                    self.props.insert(p.clone());
                }
                Formula::Proves(t, _) | Formula::Announced(t) => {
                    self.add_polynomial(t)?;
                }
                _ => {}
            }
            self.formula_ix.insert(g.clone(), self.formulas.len());
            self.formulas.push(g);
        }
        Ok(self.formula_ix[f])
    }

    pub fn add_prop(&mut self, p: &str) {
        self.props.insert(p.to_string());
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn polynomial(&self, i: usize) -> &Polynomial {
        &self.polys[i]
    }

    pub fn poly_index(&self, t: &Polynomial) -> Option<usize> {
        self.poly_ix.get(t).copied()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.formulas[i]
    }

    pub fn formula_index(&self, f: &Formula) -> Option<usize> {
        self.formula_ix.get(f).copied()
    }

    pub fn props(&self) -> &BTreeSet<String> {
        &self.props
    }

    pub fn poly_count(&self) -> usize {
        self.polys.len()
    }

    /// Interns a list of polynomials already in the universe.
    pub fn poly_set<'a>(
        &self,
        ts: impl IntoIterator<Item = &'a Polynomial>,
    ) -> Result<Bits, ModelError> {
        ts.into_iter()
            .map(|t| {
                self.poly_index(t)
                    .ok_or_else(|| ModelError::NotInUniverse(t.to_string()))
            })
            .collect()
    }

    /// `s × t`, `s + t` or `!t` if it is in the universe.
    pub fn app_of(&self, s: usize, t: usize) -> Option<usize> {
        self.poly_index(&Polynomial::app(
            self.polys[s].clone(),
            self.polys[t].clone(),
        ))
    }

    pub fn sum_of(&self, s: usize, t: usize) -> Option<usize> {
        self.poly_index(&Polynomial::sum(
            self.polys[s].clone(),
            self.polys[t].clone(),
        ))
    }

    pub fn check_of(&self, t: usize) -> Option<usize> {
        self.poly_index(&Polynomial::check(self.polys[t].clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn subterm_closed() {
        let f = parse_formula("(x * !y) : p -> E (x + c)").unwrap();
        let u = Universe::from_formulas([&f]).unwrap();
        let names: Vec<String> = u.polynomials().iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["x", "y", "!y", "x * !y", "c", "x + c"]);
        assert!(u.formula_index(&parse_formula("p").unwrap()).is_some());
        assert_eq!(u.props().iter().collect::<Vec<_>>(), ["p"]);
        let x = u.poly_index(&Polynomial::var("x")).unwrap();
        let cy = u
            .poly_index(&Polynomial::check(Polynomial::var("y")))
            .unwrap();
        assert!(u.app_of(x, cy).is_some());
        assert!(u.sum_of(cy, x).is_none());
    }

    #[test]
    fn cap() {
        let mut u = Universe::new();
        for i in 0..MAX_POLYNOMIALS {
            u.add_polynomial(&Polynomial::var(format!("x{i}"))).unwrap();
        }
        assert!(matches!(
            u.add_polynomial(&Polynomial::var("z")),
            Err(ModelError::UniverseTooLarge(_))
        ));
    }
}
