//! Plain-text truth tables.

use crate::family::LogicSpec;
use crate::formula::Formula;
use crate::semantics::{eval, valuations};
use thiserror::Error;

pub const MAX_TABLE_ATOMS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("formula has {0} atoms; truth tables are limited to {MAX_TABLE_ATOMS}")]
pub struct TooManyAtoms(pub usize);

/// Renders the truth table of a formula under a logic. Rows follow the
/// valuation enumeration order (`t`, `f`, `b`, last atom fastest);
/// designated results are marked with `*`.
pub fn render_truth_table(formula: &Formula, logic: &LogicSpec) -> Result<String, TooManyAtoms> {
    let atoms = formula.atoms();
    if atoms.len() > MAX_TABLE_ATOMS {
        return Err(TooManyAtoms(atoms.len()));
    }

    let mut out = String::new();
    let mut header = String::new();
    for atom in &atoms {
        header.push_str(atom);
        header.push_str("  ");
    }
    if !atoms.is_empty() {
        header.push_str("| ");
    }
    header.push_str(&formula.to_string());
    out.push_str(&header);
    out.push('\n');
    out.push_str(&"-".repeat(header.len()));
    out.push('\n');

    for valuation in valuations(&atoms) {
        for atom in &atoms {
            let value = valuation.get(atom).expect("valuation covers the atoms");
            out.push(value.as_char());
            out.push_str(&" ".repeat(atom.len() + 1));
        }
        if !atoms.is_empty() {
            out.push_str("| ");
        }
        let value = eval(formula, &valuation, logic).expect("valuation covers the atoms");
        out.push(value.as_char());
        if value.is_designated() {
            out.push_str(" *");
        }
        out.push('\n');
    }
    Ok(out)
}
