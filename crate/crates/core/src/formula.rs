use std::collections::BTreeSet;
use std::fmt;

/// Abstract syntax of the propositional language: atoms, the falsity
/// constant, negation, conjunction, disjunction, and implication.
///
/// `T` and `<->` are abbreviations resolved by the parser (`T` becomes
/// `~F`, `a <-> b` becomes `(a -> b) & (b -> a)`); they are never nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Falsum,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn falsum() -> Formula {
        Formula::Falsum
    }

    /// The truth constant `T`, i.e. `~F`.
    pub fn verum() -> Formula {
        Formula::not(Formula::Falsum)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Formula) -> Formula {
        Formula::Not(Box::new(inner))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Formula {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    /// The bi-implication abbreviation: `(lhs -> rhs) & (rhs -> lhs)`.
    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::and(
            Formula::implies(lhs.clone(), rhs.clone()),
            Formula::implies(rhs, lhs),
        )
    }

    /// The atom names occurring in the formula, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.clone());
            }
            Formula::Falsum => {}
            Formula::Not(inner) => inner.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum => 1,
            Formula::Not(inner) => 1 + inner.size(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    /// Nesting depth; atoms and `F` have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum => 0,
            Formula::Not(inner) => 1 + inner.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Atom(_) | Formula::Falsum => 5,
            Formula::Not(_) => 4,
            Formula::And(..) => 3,
            Formula::Or(..) => 2,
            Formula::Implies(..) => 1,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let parens = self.precedence() < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Formula::Atom(name) => write!(f, "{name}")?,
            Formula::Falsum => write!(f, "F")?,
            Formula::Not(inner) => {
                write!(f, "~")?;
                inner.fmt_prec(f, 4)?;
            }
            Formula::And(l, r) => {
                l.fmt_prec(f, 3)?;
                write!(f, " & ")?;
                r.fmt_prec(f, 4)?;
            }
            Formula::Or(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " | ")?;
                r.fmt_prec(f, 3)?;
            }
            Formula::Implies(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " -> ")?;
                r.fmt_prec(f, 1)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    /// Prints with the fewest parentheses that reparse to the same tree:
    /// `~` binds tightest, then `&`, `|`, `->`; `&` and `|` associate to
    /// the left and `->` to the right.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
