//! The family of three-valued paraconsistent logics.
//!
//! A [`LogicSpec`] is a complete set of truth tables (one unary, three
//! binary) over `{t, f, b}`. The family consists of every table set that
//! restricts to the classical two-valued tables on `{t, f}` and respects
//! the designation conditions with designated set `{t, b}`:
//!
//! * `x & y` is designated iff both arguments are,
//! * `x | y` is designated iff at least one argument is,
//! * `x -> y` is designated iff `x` is not designated or `y` is,
//! * `~b` is designated.
//!
//! These conditions pin every cell except a handful whose value may be
//! either designated value: three conjunction cells, five disjunction
//! cells, the negation of `b`, and four implication cells. The free
//! choices are independent, so the family has exactly
//! `8 * 32 * 2 * 16 = 8192` members, each identified by a 13-bit
//! [`LogicId`].

use crate::truth::TruthValue;
use std::fmt;
use thiserror::Error;

use TruthValue::{Both, False, True};

/// Number of logics in the family.
pub const FAMILY_SIZE: u16 = 8192;

/// A connective of the language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    Negation,
    Conjunction,
    Disjunction,
    Implication,
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Connective::Negation => "negation",
            Connective::Conjunction => "conjunction",
            Connective::Disjunction => "disjunction",
            Connective::Implication => "implication",
        };
        write!(f, "{name}")
    }
}

/// Free cells of each binary table, in the order that defines the bit
/// layout of [`LogicId`]. Every free cell may hold `t` or `b`.
pub const AND_FREE: [(TruthValue, TruthValue); 3] = [(True, Both), (Both, True), (Both, Both)];
pub const OR_FREE: [(TruthValue, TruthValue); 5] = [
    (True, Both),
    (Both, True),
    (Both, Both),
    (Both, False),
    (False, Both),
];
pub const IMP_FREE: [(TruthValue, TruthValue); 4] =
    [(True, Both), (Both, True), (Both, Both), (False, Both)];

/// Truth tables for one logic of the family.
///
/// The constructor accepts arbitrary tables; [`LogicSpec::check_family_constraints`]
/// decides membership. Tables are indexed with argument order `t, f, b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LogicSpec {
    neg: [TruthValue; 3],
    and: [[TruthValue; 3]; 3],
    or: [[TruthValue; 3]; 3],
    imp: [[TruthValue; 3]; 3],
}

impl LogicSpec {
    /// Assembles a table set without validating it. Rows and columns are
    /// ordered `t, f, b`.
    pub fn from_tables(
        neg: [TruthValue; 3],
        and: [[TruthValue; 3]; 3],
        or: [[TruthValue; 3]; 3],
        imp: [[TruthValue; 3]; 3],
    ) -> LogicSpec {
        LogicSpec { neg, and, or, imp }
    }

    pub fn neg(&self, v: TruthValue) -> TruthValue {
        self.neg[v.index()]
    }

    pub fn and(&self, x: TruthValue, y: TruthValue) -> TruthValue {
        self.and[x.index()][y.index()]
    }

    pub fn or(&self, x: TruthValue, y: TruthValue) -> TruthValue {
        self.or[x.index()][y.index()]
    }

    pub fn imp(&self, x: TruthValue, y: TruthValue) -> TruthValue {
        self.imp[x.index()][y.index()]
    }

    pub fn binary(&self, conn: Connective, x: TruthValue, y: TruthValue) -> TruthValue {
        match conn {
            Connective::Conjunction => self.and(x, y),
            Connective::Disjunction => self.or(x, y),
            Connective::Implication => self.imp(x, y),
            Connective::Negation => panic!("negation is unary"),
        }
    }

    /// Returns a copy with one cell replaced. Handy for building
    /// near-miss tables in tests and reports.
    pub fn with_binary_cell(
        &self,
        conn: Connective,
        x: TruthValue,
        y: TruthValue,
        value: TruthValue,
    ) -> LogicSpec {
        let mut out = *self;
        let table = match conn {
            Connective::Conjunction => &mut out.and,
            Connective::Disjunction => &mut out.or,
            Connective::Implication => &mut out.imp,
            Connective::Negation => panic!("negation is unary"),
        };
        table[x.index()][y.index()] = value;
        out
    }

    pub fn with_neg_cell(&self, x: TruthValue, value: TruthValue) -> LogicSpec {
        let mut out = *self;
        out.neg[x.index()] = value;
        out
    }

    /// Checks the classical restriction and the designation conditions,
    /// reporting the first violated cell.
    pub fn check_family_constraints(&self) -> Result<(), ConstraintViolation> {
        for x in TruthValue::CLASSICAL {
            let expected = TruthValue::from_bool(!matches!(x, True));
            if self.neg(x) != expected {
                return Err(ConstraintViolation::Classical {
                    connective: Connective::Negation,
                    x,
                    y: None,
                    found: self.neg(x),
                    expected,
                });
            }
        }
        if !self.neg(Both).is_designated() {
            return Err(ConstraintViolation::MustBeDesignated {
                connective: Connective::Negation,
                x: Both,
                y: None,
                found: self.neg(Both),
            });
        }

        for conn in [
            Connective::Conjunction,
            Connective::Disjunction,
            Connective::Implication,
        ] {
            for x in TruthValue::ALL {
                for y in TruthValue::ALL {
                    let found = self.binary(conn, x, y);
                    if x.is_classical() && y.is_classical() {
                        let expected = classical_binary(conn, x, y);
                        if found != expected {
                            return Err(ConstraintViolation::Classical {
                                connective: conn,
                                x,
                                y: Some(y),
                                found,
                                expected,
                            });
                        }
                    } else if designation_condition(conn, x, y) {
                        if !found.is_designated() {
                            return Err(ConstraintViolation::MustBeDesignated {
                                connective: conn,
                                x,
                                y: Some(y),
                                found,
                            });
                        }
                    } else if found != False {
                        return Err(ConstraintViolation::MustBeFalse {
                            connective: conn,
                            x,
                            y: Some(y),
                            found,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_family_member(&self) -> bool {
        self.check_family_constraints().is_ok()
    }
}

/// Whether the designation conditions require a designated result at the
/// given binary cell. Where they do not, the cell must be `f`.
pub(crate) fn designation_condition(conn: Connective, x: TruthValue, y: TruthValue) -> bool {
    match conn {
        Connective::Conjunction => x.is_designated() && y.is_designated(),
        Connective::Disjunction => x.is_designated() || y.is_designated(),
        Connective::Implication => !x.is_designated() || y.is_designated(),
        Connective::Negation => panic!("negation is unary"),
    }
}

/// The classical two-valued table, on classical arguments.
pub(crate) fn classical_binary(conn: Connective, x: TruthValue, y: TruthValue) -> TruthValue {
    let (x, y) = (matches!(x, True), matches!(y, True));
    let out = match conn {
        Connective::Conjunction => x && y,
        Connective::Disjunction => x || y,
        Connective::Implication => !x || y,
        Connective::Negation => panic!("negation is unary"),
    };
    TruthValue::from_bool(out)
}

/// A constraint broken by a candidate table set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ConstraintViolation {
    #[error(
        "{connective} must agree with the two-valued table at {}: found {found}, expected {expected}",
        Cell(*x, *y)
    )]
    Classical {
        connective: Connective,
        x: TruthValue,
        y: Option<TruthValue>,
        found: TruthValue,
        expected: TruthValue,
    },
    #[error(
        "{connective} cell {} must hold a designated value, found {found}",
        Cell(*x, *y)
    )]
    MustBeDesignated {
        connective: Connective,
        x: TruthValue,
        y: Option<TruthValue>,
        found: TruthValue,
    },
    #[error("{connective} cell {} must be f, found {found}", Cell(*x, *y))]
    MustBeFalse {
        connective: Connective,
        x: TruthValue,
        y: Option<TruthValue>,
        found: TruthValue,
    },
}

struct Cell(TruthValue, Option<TruthValue>);

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.1 {
            Some(y) => write!(f, "({}, {})", self.0, y),
            None => write!(f, "({})", self.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("logic id {0} is out of range (valid ids are 0..{FAMILY_SIZE})")]
pub struct IdOutOfRange(pub u16);

/// Canonical identity of a family member: a packed 13-bit code.
///
/// Reading from the most significant bit: the three conjunction free
/// cells, the five disjunction free cells, the negation of `b`, and the
/// four implication free cells, each in the order given by [`AND_FREE`],
/// [`OR_FREE`], and [`IMP_FREE`]. A zero bit stands for `t`, a one bit
/// for `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LogicId(u16);

impl LogicId {
    pub fn new(raw: u16) -> Result<LogicId, IdOutOfRange> {
        if raw < FAMILY_SIZE {
            Ok(LogicId(raw))
        } else {
            Err(IdOutOfRange(raw))
        }
    }

    pub fn value(self) -> u16 {
        self.0
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The tables of LP with implication and falsity: negation fixes `b`,
/// conjunction and disjunction are the lattice operations of the order
/// `f < b < t`, and `x -> y` is `t` when `x` is `f` and `y` otherwise.
pub fn lp_logic() -> LogicSpec {
    LogicSpec {
        neg: [False, True, Both],
        and: [
            [True, False, Both],
            [False, False, False],
            [Both, False, Both],
        ],
        or: [[True, True, True], [True, False, Both], [True, Both, Both]],
        imp: [[True, False, Both], [True, True, True], [True, False, Both]],
    }
}

/// Encodes a family member as its canonical id. Tables that violate the
/// family constraints are rejected.
pub fn encode(spec: &LogicSpec) -> Result<LogicId, ConstraintViolation> {
    spec.check_family_constraints()?;
    let mut bits: u16 = 0;
    let mut push = |v: TruthValue| bits = (bits << 1) | u16::from(v == Both);
    for (x, y) in AND_FREE {
        push(spec.and(x, y));
    }
    for (x, y) in OR_FREE {
        push(spec.or(x, y));
    }
    push(spec.neg(Both));
    for (x, y) in IMP_FREE {
        push(spec.imp(x, y));
    }
    Ok(LogicId(bits))
}

/// Reconstructs the family member with the given id.
pub fn decode(id: LogicId) -> LogicSpec {
    let mut spec = fixed_base();
    let mut pos = 13;
    let mut pull = || {
        pos -= 1;
        if id.0 >> pos & 1 == 1 {
            Both
        } else {
            True
        }
    };
    for (x, y) in AND_FREE {
        spec.and[x.index()][y.index()] = pull();
    }
    for (x, y) in OR_FREE {
        spec.or[x.index()][y.index()] = pull();
    }
    spec.neg[Both.index()] = pull();
    for (x, y) in IMP_FREE {
        spec.imp[x.index()][y.index()] = pull();
    }
    spec
}

/// Table set with every constraint-forced cell filled in and the free
/// cells left at a placeholder value.
fn fixed_base() -> LogicSpec {
    let mut spec = LogicSpec {
        neg: [False, True, True],
        and: [[True; 3]; 3],
        or: [[True; 3]; 3],
        imp: [[True; 3]; 3],
    };
    for conn in [
        Connective::Conjunction,
        Connective::Disjunction,
        Connective::Implication,
    ] {
        for x in TruthValue::ALL {
            for y in TruthValue::ALL {
                let value = if x.is_classical() && y.is_classical() {
                    classical_binary(conn, x, y)
                } else if designation_condition(conn, x, y) {
                    True // placeholder; overwritten for free cells
                } else {
                    False
                };
                let table = match conn {
                    Connective::Conjunction => &mut spec.and,
                    Connective::Disjunction => &mut spec.or,
                    Connective::Implication => &mut spec.imp,
                    Connective::Negation => unreachable!(),
                };
                table[x.index()][y.index()] = value;
            }
        }
    }
    spec
}

/// All 8192 family members, in increasing id order.
pub fn enumerate_logics() -> impl Iterator<Item = LogicSpec> {
    (0..FAMILY_SIZE).map(|raw| decode(LogicId(raw)))
}

/// All ids, in increasing order.
pub fn logic_ids() -> impl Iterator<Item = LogicId> {
    (0..FAMILY_SIZE).map(LogicId)
}
