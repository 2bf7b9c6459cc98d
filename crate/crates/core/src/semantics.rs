//! Evaluation, consequence, equivalence, and consistency, parameterized
//! by a [`LogicSpec`], plus the classical two-valued oracle.

use crate::family::LogicSpec;
use crate::formula::Formula;
use crate::truth::TruthValue;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// A finite assignment of truth values to atom names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<String, TruthValue>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn assign(&mut self, atom: impl Into<String>, value: TruthValue) {
        self.0.insert(atom.into(), value);
    }

    pub fn get(&self, atom: &str) -> Option<TruthValue> {
        self.0.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(String, TruthValue)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (String, TruthValue)>>(iter: I) -> Valuation {
        Valuation(iter.into_iter().collect())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(empty)");
        }
        let mut first = true;
        for (atom, value) in &self.0 {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{atom}={value}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value assigned to atom '{0}'")]
    MissingAtom(String),
    #[error("atom '{0}' is assigned b, which the classical semantics rejects")]
    NonClassicalAtom(String),
}

/// Evaluates a formula under a valuation using the logic's tables.
/// `F` evaluates to `f` in every logic.
pub fn eval(
    formula: &Formula,
    valuation: &Valuation,
    logic: &LogicSpec,
) -> Result<TruthValue, EvalError> {
    match formula {
        Formula::Atom(name) => valuation
            .get(name)
            .ok_or_else(|| EvalError::MissingAtom(name.clone())),
        Formula::Falsum => Ok(TruthValue::False),
        Formula::Not(inner) => Ok(logic.neg(eval(inner, valuation, logic)?)),
        Formula::And(l, r) => Ok(logic.and(eval(l, valuation, logic)?, eval(r, valuation, logic)?)),
        Formula::Or(l, r) => Ok(logic.or(eval(l, valuation, logic)?, eval(r, valuation, logic)?)),
        Formula::Implies(l, r) => {
            Ok(logic.imp(eval(l, valuation, logic)?, eval(r, valuation, logic)?))
        }
    }
}

/// Evaluates under the classical two-valued semantics. The valuation must
/// assign only `t` and `f`.
pub fn classical_eval(formula: &Formula, valuation: &Valuation) -> Result<TruthValue, EvalError> {
    classical_eval_bool(formula, valuation).map(TruthValue::from_bool)
}

fn classical_eval_bool(formula: &Formula, valuation: &Valuation) -> Result<bool, EvalError> {
    match formula {
        Formula::Atom(name) => match valuation.get(name) {
            Some(TruthValue::True) => Ok(true),
            Some(TruthValue::False) => Ok(false),
            Some(TruthValue::Both) => Err(EvalError::NonClassicalAtom(name.clone())),
            None => Err(EvalError::MissingAtom(name.clone())),
        },
        Formula::Falsum => Ok(false),
        Formula::Not(inner) => Ok(!classical_eval_bool(inner, valuation)?),
        Formula::And(l, r) => {
            Ok(classical_eval_bool(l, valuation)? & classical_eval_bool(r, valuation)?)
        }
        Formula::Or(l, r) => {
            Ok(classical_eval_bool(l, valuation)? | classical_eval_bool(r, valuation)?)
        }
        Formula::Implies(l, r) => {
            Ok(!classical_eval_bool(l, valuation)? | classical_eval_bool(r, valuation)?)
        }
    }
}

/// Outcome of a consequence or equivalence query. A witness is attached
/// exactly when the relation fails; re-evaluating it reproduces the
/// failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntailmentResult {
    Holds,
    Refuted(Valuation),
}

impl EntailmentResult {
    pub fn holds(&self) -> bool {
        matches!(self, EntailmentResult::Holds)
    }

    pub fn witness(&self) -> Option<&Valuation> {
        match self {
            EntailmentResult::Holds => None,
            EntailmentResult::Refuted(v) => Some(v),
        }
    }
}

/// All valuations over the given atoms, in lexicographic order: atoms
/// sorted by name, values ordered `t < f < b`, the last atom varying
/// fastest. The empty atom set yields the single empty valuation.
pub fn valuations(atoms: &BTreeSet<String>) -> impl Iterator<Item = Valuation> {
    ValuationIter::new(atoms, &TruthValue::ALL)
}

/// All two-valued valuations over the given atoms, in the same order.
pub fn classical_valuations(atoms: &BTreeSet<String>) -> impl Iterator<Item = Valuation> {
    ValuationIter::new(atoms, &TruthValue::CLASSICAL)
}

struct ValuationIter {
    atoms: Vec<String>,
    values: &'static [TruthValue],
    counters: Vec<usize>,
    done: bool,
}

impl ValuationIter {
    fn new(atoms: &BTreeSet<String>, values: &'static [TruthValue]) -> ValuationIter {
        let atoms: Vec<String> = atoms.iter().cloned().collect();
        let counters = vec![0; atoms.len()];
        ValuationIter {
            atoms,
            values,
            counters,
            done: false,
        }
    }
}

impl Iterator for ValuationIter {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        if self.done {
            return None;
        }
        let valuation = self
            .atoms
            .iter()
            .zip(&self.counters)
            .map(|(atom, &i)| (atom.clone(), self.values[i]))
            .collect();
        // Odometer step, least significant position last.
        let mut pos = self.counters.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.counters[pos] += 1;
            if self.counters[pos] < self.values.len() {
                break;
            }
            self.counters[pos] = 0;
        }
        Some(valuation)
    }
}

fn query_atoms(premises: &[Formula], conclusion: &Formula) -> BTreeSet<String> {
    let mut atoms = conclusion.atoms();
    for premise in premises {
        atoms.extend(premise.atoms());
    }
    atoms
}

/// Semantic consequence: every valuation either makes some premise `f` or
/// gives the conclusion a designated value. On failure, returns the least
/// refuting valuation.
pub fn entails(premises: &[Formula], conclusion: &Formula, logic: &LogicSpec) -> EntailmentResult {
    let atoms = query_atoms(premises, conclusion);
    for valuation in valuations(&atoms) {
        let vacuous = premises.iter().any(|p| {
            eval(p, &valuation, logic).expect("valuation covers the premise atoms")
                == TruthValue::False
        });
        if vacuous {
            continue;
        }
        let value =
            eval(conclusion, &valuation, logic).expect("valuation covers the conclusion atoms");
        if !value.is_designated() {
            return EntailmentResult::Refuted(valuation);
        }
    }
    EntailmentResult::Holds
}

/// Logical equivalence: both formulas take the same value under every
/// valuation. On failure, returns the least distinguishing valuation.
pub fn equivalent(a: &Formula, b: &Formula, logic: &LogicSpec) -> EntailmentResult {
    let mut atoms = a.atoms();
    atoms.extend(b.atoms());
    for valuation in valuations(&atoms) {
        let va = eval(a, &valuation, logic).expect("valuation covers the atoms");
        let vb = eval(b, &valuation, logic).expect("valuation covers the atoms");
        if va != vb {
            return EntailmentResult::Refuted(valuation);
        }
    }
    EntailmentResult::Holds
}

/// A formula is consistent when no valuation gives it the value `b`.
pub fn is_consistent(formula: &Formula, logic: &LogicSpec) -> bool {
    valuations(&formula.atoms()).all(|valuation| {
        eval(formula, &valuation, logic).expect("valuation covers the atoms") != TruthValue::Both
    })
}

/// Classical consequence, quantifying over two-valued valuations only.
pub fn classical_entails(premises: &[Formula], conclusion: &Formula) -> bool {
    let atoms = query_atoms(premises, conclusion);
    classical_valuations(&atoms).all(|valuation| {
        let vacuous = premises.iter().any(|p| {
            classical_eval(p, &valuation).expect("valuation covers the premise atoms")
                == TruthValue::False
        });
        vacuous
            || classical_eval(conclusion, &valuation).expect("valuation covers the atoms")
                == TruthValue::True
    })
}
