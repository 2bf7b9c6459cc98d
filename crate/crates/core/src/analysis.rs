//! Quantitative analysis over the whole family: counting the logics that
//! satisfy chosen laws, the staged truth-table analysis behind the
//! uniqueness result, the internalized consistency and equivalence
//! checks, the tautology-coincidence scan, and the aggregate replication
//! report.

use crate::family::{
    self, classical_binary, decode, designation_condition, encode, lp_logic, Connective, LogicId,
    LogicSpec, AND_FREE, IMP_FREE, OR_FREE,
};
use crate::formula::Formula;
use crate::laws::{
    self, assignments, builtin_law, check_mp_preservation, LawSchema, MetaAssignment, Template,
    LAW_COUNT,
};
use crate::semantics::{entails, Valuation};
use crate::truth::TruthValue;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

use TruthValue::{Both, False, True};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("law number {0} is out of range (valid numbers are 1..={LAW_COUNT})")]
    InvalidLawNumber(u8),
    #[error("law {law} needs the {connective} table, which is not fixed at this stage")]
    LawNotStageable { law: String, connective: Connective },
    #[error("scan depth {0} exceeds the supported bound of {MAX_SCAN_DEPTH}")]
    DepthBoundExceeded(usize),
    #[error("scan atom count {0} exceeds the supported bound of {MAX_SCAN_ATOMS}")]
    AtomBoundExceeded(usize),
}

fn validate_law_numbers(law_numbers: &BTreeSet<u8>) -> Result<(), AnalysisError> {
    for &n in law_numbers {
        if !(1..=LAW_COUNT).contains(&n) {
            return Err(AnalysisError::InvalidLawNumber(n));
        }
    }
    Ok(())
}

/// The family members whose equivalence relation satisfies all of the
/// given built-in laws, in increasing id order.
pub fn count_satisfying(law_numbers: &BTreeSet<u8>) -> Result<Vec<LogicId>, AnalysisError> {
    validate_law_numbers(law_numbers)?;
    let laws: Vec<LawSchema> = law_numbers
        .iter()
        .map(|&n| builtin_law(n).expect("validated above"))
        .collect();
    let mut ids = Vec::new();
    for id in family::logic_ids() {
        let spec = decode(id);
        if laws.iter().all(|law| laws::check_law(law, &spec)) {
            ids.push(id);
        }
    }
    Ok(ids)
}

/// Truth tables in which some cells are still undetermined. The fixed
/// cells are the classical ones, the cells forced to `f` by the
/// designation conditions, and the tables of connectives fixed earlier in
/// the staging order.
#[derive(Debug, Clone, Copy)]
struct PartialTables {
    neg: [Option<TruthValue>; 3],
    and: [[Option<TruthValue>; 3]; 3],
    or: [[Option<TruthValue>; 3]; 3],
    imp: [[Option<TruthValue>; 3]; 3],
}

impl PartialTables {
    /// Only the constraint-forced cells are determined.
    fn base() -> PartialTables {
        let mut tables = PartialTables {
            neg: [Some(False), Some(True), None],
            and: [[None; 3]; 3],
            or: [[None; 3]; 3],
            imp: [[None; 3]; 3],
        };
        for conn in [
            Connective::Conjunction,
            Connective::Disjunction,
            Connective::Implication,
        ] {
            for x in TruthValue::ALL {
                for y in TruthValue::ALL {
                    let value = if x.is_classical() && y.is_classical() {
                        Some(classical_binary(conn, x, y))
                    } else if designation_condition(conn, x, y) {
                        None
                    } else {
                        Some(False)
                    };
                    tables.binary_mut(conn)[x.index()][y.index()] = value;
                }
            }
        }
        tables
    }

    fn binary_mut(&mut self, conn: Connective) -> &mut [[Option<TruthValue>; 3]; 3] {
        match conn {
            Connective::Conjunction => &mut self.and,
            Connective::Disjunction => &mut self.or,
            Connective::Implication => &mut self.imp,
            Connective::Negation => panic!("negation is unary"),
        }
    }

    fn fix_connective(&mut self, conn: Connective, from: &LogicSpec) {
        match conn {
            Connective::Negation => {
                for x in TruthValue::ALL {
                    self.neg[x.index()] = Some(from.neg(x));
                }
            }
            _ => {
                for x in TruthValue::ALL {
                    for y in TruthValue::ALL {
                        self.binary_mut(conn)[x.index()][y.index()] = Some(from.binary(conn, x, y));
                    }
                }
            }
        }
    }

    fn neg(&self, x: TruthValue) -> Option<TruthValue> {
        self.neg[x.index()]
    }

    fn binary(&self, conn: Connective, x: TruthValue, y: TruthValue) -> Option<TruthValue> {
        match conn {
            Connective::Conjunction => self.and[x.index()][y.index()],
            Connective::Disjunction => self.or[x.index()][y.index()],
            Connective::Implication => self.imp[x.index()][y.index()],
            Connective::Negation => panic!("negation is unary"),
        }
    }

    /// Evaluates a template, failing on any cell that is not yet fixed.
    fn eval(
        &self,
        template: &Template,
        assignment: &MetaAssignment,
    ) -> Result<TruthValue, Connective> {
        match template {
            Template::Meta(var) => Ok(assignment
                .get(*var)
                .expect("assignment covers the template's metavariables")),
            Template::Falsum => Ok(False),
            Template::Not(inner) => {
                let v = self.eval(inner, assignment)?;
                self.neg(v).ok_or(Connective::Negation)
            }
            Template::And(l, r) => self.eval_binary(Connective::Conjunction, l, r, assignment),
            Template::Or(l, r) => self.eval_binary(Connective::Disjunction, l, r, assignment),
            Template::Implies(l, r) => self.eval_binary(Connective::Implication, l, r, assignment),
        }
    }

    fn eval_binary(
        &self,
        conn: Connective,
        l: &Template,
        r: &Template,
        assignment: &MetaAssignment,
    ) -> Result<TruthValue, Connective> {
        let x = self.eval(l, assignment)?;
        let y = self.eval(r, assignment)?;
        self.binary(conn, x, y).ok_or(conn)
    }
}

/// The order in which the staged analysis fixes connectives.
pub const STAGE_ORDER: [Connective; 4] = [
    Connective::Conjunction,
    Connective::Disjunction,
    Connective::Negation,
    Connective::Implication,
];

/// Result of one stage: how many tables the family constraints allow for
/// the connective, and how many of those satisfy the given laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageAnalysis {
    pub candidate_count: usize,
    pub compatible_count: usize,
}

fn free_cells(conn: Connective) -> &'static [(TruthValue, TruthValue)] {
    match conn {
        Connective::Conjunction => &AND_FREE,
        Connective::Disjunction => &OR_FREE,
        Connective::Implication => &IMP_FREE,
        Connective::Negation => panic!("negation free cells are handled separately"),
    }
}

/// Stages one connective: connectives earlier in [`STAGE_ORDER`] take the
/// reference tables, the staged connective runs over every completion the
/// family constraints allow, and the given laws are checked against each.
/// Laws may only use cells that are fixed at this stage.
pub fn stage_analysis(
    staged: Connective,
    law_numbers: &BTreeSet<u8>,
) -> Result<StageAnalysis, AnalysisError> {
    validate_law_numbers(law_numbers)?;
    let laws: Vec<LawSchema> = law_numbers
        .iter()
        .map(|&n| builtin_law(n).expect("validated above"))
        .collect();

    let lp = lp_logic();
    let mut tables = PartialTables::base();
    for conn in STAGE_ORDER {
        if conn == staged {
            break;
        }
        tables.fix_connective(conn, &lp);
    }

    let cells: Vec<(Option<(TruthValue, TruthValue)>, TruthValue)> = match staged {
        Connective::Negation => vec![(None, Both)],
        conn => free_cells(conn)
            .iter()
            .map(|&(x, y)| (Some((x, y)), x))
            .collect(),
    };
    let candidate_count = 1usize << cells.len();

    let mut compatible_count = 0;
    for choice in 0..candidate_count {
        let mut candidate = tables;
        for (i, cell) in cells.iter().enumerate() {
            let value = if choice >> (cells.len() - 1 - i) & 1 == 1 {
                Both
            } else {
                True
            };
            match cell.0 {
                Some((x, y)) => candidate.binary_mut(staged)[x.index()][y.index()] = Some(value),
                None => candidate.neg[Both.index()] = Some(value),
            }
        }
        let mut all_hold = true;
        for law in &laws {
            let vars = law.metavars();
            for assignment in assignments(&vars) {
                let lhs = candidate
                    .eval(&law.lhs, &assignment)
                    .map_err(|connective| AnalysisError::LawNotStageable {
                        law: law.name.clone(),
                        connective,
                    })?;
                let rhs = candidate
                    .eval(&law.rhs, &assignment)
                    .map_err(|connective| AnalysisError::LawNotStageable {
                        law: law.name.clone(),
                        connective,
                    })?;
                if lhs != rhs {
                    all_hold = false;
                    break;
                }
            }
            if !all_hold {
                break;
            }
        }
        if all_hold {
            compatible_count += 1;
        }
    }

    Ok(StageAnalysis {
        candidate_count,
        compatible_count,
    })
}

/// Whether `(x -> F) | (~x -> F)` is designated exactly for the values
/// other than `b` — the internalized consistency test, checked at the
/// value level.
pub fn check_internalized_consistency(logic: &LogicSpec) -> bool {
    TruthValue::ALL.into_iter().all(|x| {
        let value = logic.or(logic.imp(x, False), logic.imp(logic.neg(x), False));
        value.is_designated() == (x != Both)
    })
}

/// Whether `(x <-> y) & (~x <-> ~y)`, with `<->` expanded, is designated
/// exactly when `x = y` — the internalized equivalence test.
pub fn check_internalized_equivalence(logic: &LogicSpec) -> bool {
    let iff = |x: TruthValue, y: TruthValue| logic.and(logic.imp(x, y), logic.imp(y, x));
    TruthValue::ALL.into_iter().all(|x| {
        TruthValue::ALL.into_iter().all(|y| {
            let value = logic.and(iff(x, y), iff(logic.neg(x), logic.neg(y)));
            value.is_designated() == (x == y)
        })
    })
}

pub const MAX_SCAN_DEPTH: usize = 4;
pub const MAX_SCAN_ATOMS: usize = 2;

const SCAN_ATOMS: [&str; MAX_SCAN_ATOMS] = ["p", "q"];

/// Ordering used by the scan: smaller formulas first, ties broken by
/// constructor kind (atom < F < ~ < & < | < ->) and then recursively.
fn scan_order(a: &Formula, b: &Formula) -> Ordering {
    fn rank(f: &Formula) -> u8 {
        match f {
            Formula::Atom(_) => 0,
            Formula::Falsum => 1,
            Formula::Not(_) => 2,
            Formula::And(..) => 3,
            Formula::Or(..) => 4,
            Formula::Implies(..) => 5,
        }
    }
    a.size()
        .cmp(&b.size())
        .then_with(|| rank(a).cmp(&rank(b)))
        .then_with(|| match (a, b) {
            (Formula::Atom(x), Formula::Atom(y)) => x.cmp(y),
            (Formula::Not(x), Formula::Not(y)) => scan_order(x, y),
            (Formula::And(l1, r1), Formula::And(l2, r2))
            | (Formula::Or(l1, r1), Formula::Or(l2, r2))
            | (Formula::Implies(l1, r1), Formula::Implies(l2, r2)) => {
                scan_order(l1, l2).then_with(|| scan_order(r1, r2))
            }
            _ => Ordering::Equal,
        })
}

/// Scans every formula of depth at most `max_depth` over at most
/// `atom_count` atoms plus `F`, and returns the formulas that are
/// tautologies of the logic but not of classical logic or vice versa.
///
/// A formula's behaviour under both tautology tests is determined by its
/// value vector over the valuations of the atom set, so the scan closes
/// the set of reachable vectors depth by depth, keeping the least
/// representative formula (in [`scan_order`]) per vector. The result is
/// exactly the set of semantically distinct mismatching formulas within
/// the bound; it is empty iff no formula within the bound mismatches.
pub fn tautology_coincidence_scan(
    logic: &LogicSpec,
    max_depth: usize,
    atom_count: usize,
) -> Result<Vec<Formula>, AnalysisError> {
    if max_depth > MAX_SCAN_DEPTH {
        return Err(AnalysisError::DepthBoundExceeded(max_depth));
    }
    if atom_count > MAX_SCAN_ATOMS {
        return Err(AnalysisError::AtomBoundExceeded(atom_count));
    }

    let atoms = &SCAN_ATOMS[..atom_count];
    let valuation_count = 3usize.pow(atom_count as u32);
    // Valuations in lexicographic order; entry i of a vector is the value
    // under valuation i. The classical valuations are those whose digits
    // avoid b.
    let valuation_values: Vec<Vec<TruthValue>> = (0..valuation_count)
        .map(|mut n| {
            let mut digits = vec![True; atom_count];
            for slot in digits.iter_mut().rev() {
                *slot = TruthValue::ALL[n % 3];
                n /= 3;
            }
            digits
        })
        .collect();
    let classical_rows: Vec<usize> = (0..valuation_count)
        .filter(|&i| valuation_values[i].iter().all(|v| v.is_classical()))
        .collect();

    type Vector = Vec<TruthValue>;
    let mut reachable: HashMap<Vector, Formula> = HashMap::new();
    let consider =
        |reachable: &mut HashMap<Vector, Formula>, vector: Vector, f: Formula| match reachable
            .get_mut(&vector)
        {
            Some(existing) => {
                if scan_order(&f, existing) == Ordering::Less {
                    *existing = f;
                }
            }
            None => {
                reachable.insert(vector, f);
            }
        };

    for (i, atom) in atoms.iter().enumerate() {
        let vector: Vector = valuation_values.iter().map(|row| row[i]).collect();
        consider(&mut reachable, vector, Formula::atom(*atom));
    }
    consider(
        &mut reachable,
        vec![False; valuation_count],
        Formula::Falsum,
    );

    for _ in 0..max_depth {
        let snapshot: Vec<(Vector, Formula)> = reachable
            .iter()
            .map(|(v, f)| (v.clone(), f.clone()))
            .collect();
        for (vector, formula) in &snapshot {
            let neg: Vector = vector.iter().map(|&v| logic.neg(v)).collect();
            consider(&mut reachable, neg, Formula::not(formula.clone()));
        }
        for (lv, lf) in &snapshot {
            for (rv, rf) in &snapshot {
                let and: Vector = lv.iter().zip(rv).map(|(&x, &y)| logic.and(x, y)).collect();
                consider(&mut reachable, and, Formula::and(lf.clone(), rf.clone()));
                let or: Vector = lv.iter().zip(rv).map(|(&x, &y)| logic.or(x, y)).collect();
                consider(&mut reachable, or, Formula::or(lf.clone(), rf.clone()));
                let imp: Vector = lv.iter().zip(rv).map(|(&x, &y)| logic.imp(x, y)).collect();
                consider(
                    &mut reachable,
                    imp,
                    Formula::implies(lf.clone(), rf.clone()),
                );
            }
        }
    }

    let mut mismatches: Vec<Formula> = reachable
        .into_iter()
        .filter(|(vector, formula)| {
            formula.depth() <= max_depth && {
                let family_tautology = vector.iter().all(|v| v.is_designated());
                let classical_tautology = classical_rows.iter().all(|&i| vector[i] == True);
                family_tautology != classical_tautology
            }
        })
        .map(|(_, formula)| formula)
        .collect();
    mismatches.sort_by(scan_order);
    Ok(mismatches)
}

/// One replicated claim: an expected value, the value the workbench
/// computed, and supporting witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub matched: bool,
    pub witnesses: Vec<String>,
}

impl ClaimResult {
    fn new(
        label: &str,
        expected: impl ToString,
        computed: impl ToString,
        witnesses: Vec<String>,
    ) -> ClaimResult {
        let expected = expected.to_string();
        let computed = computed.to_string();
        ClaimResult {
            label: label.to_string(),
            matched: expected == computed,
            expected,
            computed,
            witnesses,
        }
    }
}

/// The full replication report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplicationReport {
    pub claims: Vec<ClaimResult>,
}

impl ReplicationReport {
    pub fn all_matched(&self) -> bool {
        self.claims.iter().all(|c| c.matched)
    }
}

/// Runs every quantitative claim of the analysis with its expected value:
/// the family size, the four stage counts, the law profile of LP, the
/// four counting claims, and the family-wide value-level properties.
/// Mismatches are recorded in the report, not raised as errors.
pub fn replicate_report() -> ReplicationReport {
    let lp = lp_logic();
    let lp_id = encode(&lp).expect("LP is a family member");
    let mut claims = Vec::new();

    claims.push(ClaimResult::new(
        "family size",
        8192,
        family::enumerate_logics().count(),
        vec![],
    ));

    for (label, conn, law_set, expected) in [
        (
            "conjunction stage: laws 1,3,5,7",
            Connective::Conjunction,
            vec![1u8, 3, 5, 7],
            (8, 1),
        ),
        (
            "disjunction stage: laws 2,4,6,8",
            Connective::Disjunction,
            vec![2, 4, 6, 8],
            (32, 1),
        ),
        (
            "negation stage: law 9",
            Connective::Negation,
            vec![9],
            (2, 1),
        ),
        (
            "implication stage: laws 10-12",
            Connective::Implication,
            vec![10, 11, 12],
            (16, 1),
        ),
    ] {
        let set: BTreeSet<u8> = law_set.into_iter().collect();
        let stage = stage_analysis(conn, &set).expect("stage laws are valid here");
        claims.push(ClaimResult::new(
            label,
            format!("{:?}", expected),
            format!("{:?}", (stage.candidate_count, stage.compatible_count)),
            vec![],
        ));
    }

    let profile = laws::law_profile(&lp);
    let holds_range = |from: u8, to: u8| (from..=to).all(|n| profile.satisfies(n));
    claims.push(ClaimResult::new(
        "laws 1-12 hold under LP",
        true,
        holds_range(1, 12),
        vec![],
    ));
    claims.push(ClaimResult::new(
        "laws 13-20 hold under LP",
        true,
        holds_range(13, 20),
        (13..=20)
            .filter(|&n| !profile.satisfies(n))
            .map(|n| {
                let law = builtin_law(n).expect("in range");
                let ce = laws::counterexample(&law, &lp).expect("law fails");
                format!("{} fails at {}", law.name, ce)
            })
            .collect(),
    ));
    claims.push(ClaimResult::new(
        "laws 21-23 fail under LP",
        true,
        (21..=23).all(|n| !profile.satisfies(n)),
        (21..=23)
            .filter_map(|n| {
                let law = builtin_law(n).expect("in range");
                laws::counterexample(&law, &lp).map(|ce| format!("{} fails at {}", law.name, ce))
            })
            .collect(),
    ));

    let count_claim = |label: &str, numbers: &[u8], expected: usize| {
        let set: BTreeSet<u8> = numbers.iter().copied().collect();
        let ids = count_satisfying(&set).expect("law numbers are valid here");
        let witnesses = ids.iter().map(|id| id.to_string()).collect();
        (ClaimResult::new(label, expected, ids.len(), witnesses), ids)
    };

    let (claim, unique_ids) = count_claim(
        "exactly one logic satisfies laws 1-12",
        &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        1,
    );
    claims.push(claim);
    claims.push(ClaimResult::new(
        "the unique laws-1-12 logic is LP",
        true,
        unique_ids.len() == 1 && decode(unique_ids[0]) == lp,
        vec![lp_id.to_string()],
    ));

    let (claim, _) = count_claim(
        "exactly 16 logics satisfy laws 1-9",
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        16,
    );
    claims.push(claim);
    let (claim, _) = count_claim(
        "exactly 32 logics satisfy laws 1-8",
        &[1, 2, 3, 4, 5, 6, 7, 8],
        32,
    );
    claims.push(claim);

    let (claim, four_ids) = count_claim(
        "exactly four logics satisfy laws 1-8 and 10-12",
        &[1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12],
        4,
    );
    claims.push(claim);
    claims.push(ClaimResult::new(
        "LP is among the laws-1-8,10-12 logics",
        true,
        four_ids.contains(&lp_id),
        vec![lp_id.to_string()],
    ));

    let mut consistency = true;
    let mut equivalence = true;
    let mut mp = true;
    let mut paraconsistent = true;
    let p = Formula::atom("p");
    let not_p = Formula::not(p.clone());
    let q = Formula::atom("q");
    let expected_witness: Valuation = [("p".to_string(), Both), ("q".to_string(), False)]
        .into_iter()
        .collect();
    for spec in family::enumerate_logics() {
        consistency &= check_internalized_consistency(&spec);
        equivalence &= check_internalized_equivalence(&spec);
        mp &= check_mp_preservation(&spec);
        let result = entails(&[p.clone(), not_p.clone()], &q, &spec);
        paraconsistent &= result.witness() == Some(&expected_witness);
    }
    claims.push(ClaimResult::new(
        "internalized consistency holds family-wide",
        true,
        consistency,
        vec![],
    ));
    claims.push(ClaimResult::new(
        "internalized equivalence holds family-wide",
        true,
        equivalence,
        vec![],
    ));
    claims.push(ClaimResult::new(
        "modus ponens preserves designation family-wide",
        true,
        mp,
        vec![],
    ));
    claims.push(ClaimResult::new(
        "contradictory premises never explode (family-wide)",
        true,
        paraconsistent,
        vec![format!("witness {expected_witness}")],
    ));

    ReplicationReport { claims }
}
