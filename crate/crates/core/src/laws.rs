//! Equivalence-law schemas over metavariables, the built-in law catalog,
//! law checking with counterexamples, and the Hilbert axiom checks.
//!
//! Because every connective is truth-functional, a law holds for all
//! formula instances exactly when it holds for all assignments of truth
//! values to its metavariables. Laws are therefore decided over at most
//! `3^3` assignments; substitution of concrete formulas appears only in
//! tests of that reduction.

use crate::family::LogicSpec;
use crate::formula::Formula;
use crate::truth::TruthValue;
use std::collections::BTreeSet;
use std::fmt;

/// A metavariable of a law or axiom schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetaVar {
    A,
    B,
    C,
}

impl MetaVar {
    pub const ALL: [MetaVar; 3] = [MetaVar::A, MetaVar::B, MetaVar::C];

    pub fn name(self) -> &'static str {
        match self {
            MetaVar::A => "A",
            MetaVar::B => "B",
            MetaVar::C => "C",
        }
    }

    fn index(self) -> usize {
        match self {
            MetaVar::A => 0,
            MetaVar::B => 1,
            MetaVar::C => 2,
        }
    }
}

impl fmt::Display for MetaVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A formula template whose leaves are metavariables or `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Template {
    Meta(MetaVar),
    Falsum,
    Not(Box<Template>),
    And(Box<Template>, Box<Template>),
    Or(Box<Template>, Box<Template>),
    Implies(Box<Template>, Box<Template>),
}

impl Template {
    pub fn meta(var: MetaVar) -> Template {
        Template::Meta(var)
    }

    pub fn falsum() -> Template {
        Template::Falsum
    }

    /// The truth constant `T`, i.e. `~F`.
    pub fn verum() -> Template {
        Template::not(Template::Falsum)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Template) -> Template {
        Template::Not(Box::new(inner))
    }

    pub fn and(lhs: Template, rhs: Template) -> Template {
        Template::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Template, rhs: Template) -> Template {
        Template::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn implies(lhs: Template, rhs: Template) -> Template {
        Template::Implies(Box::new(lhs), Box::new(rhs))
    }

    /// The bi-implication abbreviation, expanded.
    pub fn iff(lhs: Template, rhs: Template) -> Template {
        Template::and(
            Template::implies(lhs.clone(), rhs.clone()),
            Template::implies(rhs, lhs),
        )
    }

    /// The metavariables occurring in the template, sorted.
    pub fn metavars(&self) -> BTreeSet<MetaVar> {
        let mut out = BTreeSet::new();
        self.collect_metavars(&mut out);
        out
    }

    fn collect_metavars(&self, out: &mut BTreeSet<MetaVar>) {
        match self {
            Template::Meta(var) => {
                out.insert(*var);
            }
            Template::Falsum => {}
            Template::Not(inner) => inner.collect_metavars(out),
            Template::And(l, r) | Template::Or(l, r) | Template::Implies(l, r) => {
                l.collect_metavars(out);
                r.collect_metavars(out);
            }
        }
    }

    /// Evaluates the template under an assignment of values to its
    /// metavariables.
    pub fn eval(&self, assignment: &MetaAssignment, logic: &LogicSpec) -> TruthValue {
        match self {
            Template::Meta(var) => assignment
                .get(*var)
                .expect("assignment covers the template's metavariables"),
            Template::Falsum => TruthValue::False,
            Template::Not(inner) => logic.neg(inner.eval(assignment, logic)),
            Template::And(l, r) => logic.and(l.eval(assignment, logic), r.eval(assignment, logic)),
            Template::Or(l, r) => logic.or(l.eval(assignment, logic), r.eval(assignment, logic)),
            Template::Implies(l, r) => {
                logic.imp(l.eval(assignment, logic), r.eval(assignment, logic))
            }
        }
    }

    /// Replaces each metavariable by a concrete formula.
    pub fn instantiate(&self, subs: &impl Fn(MetaVar) -> Formula) -> Formula {
        match self {
            Template::Meta(var) => subs(*var),
            Template::Falsum => Formula::Falsum,
            Template::Not(inner) => Formula::not(inner.instantiate(subs)),
            Template::And(l, r) => Formula::and(l.instantiate(subs), r.instantiate(subs)),
            Template::Or(l, r) => Formula::or(l.instantiate(subs), r.instantiate(subs)),
            Template::Implies(l, r) => Formula::implies(l.instantiate(subs), r.instantiate(subs)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Template::Meta(_) | Template::Falsum => 5,
            Template::Not(_) => 4,
            Template::And(..) => 3,
            Template::Or(..) => 2,
            Template::Implies(..) => 1,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let parens = self.precedence() < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Template::Meta(var) => write!(f, "{var}")?,
            Template::Falsum => write!(f, "F")?,
            Template::Not(inner) => {
                write!(f, "~")?;
                inner.fmt_prec(f, 4)?;
            }
            Template::And(l, r) => {
                l.fmt_prec(f, 3)?;
                write!(f, " & ")?;
                r.fmt_prec(f, 4)?;
            }
            Template::Or(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " | ")?;
                r.fmt_prec(f, 3)?;
            }
            Template::Implies(l, r) => {
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

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// An assignment of truth values to metavariables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MetaAssignment([Option<TruthValue>; 3]);

impl MetaAssignment {
    pub fn new() -> MetaAssignment {
        MetaAssignment::default()
    }

    pub fn assign(&mut self, var: MetaVar, value: TruthValue) {
        self.0[var.index()] = Some(value);
    }

    pub fn get(&self, var: MetaVar) -> Option<TruthValue> {
        self.0[var.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (MetaVar, TruthValue)> + '_ {
        MetaVar::ALL
            .into_iter()
            .filter_map(|var| self.get(var).map(|v| (var, v)))
    }
}

impl FromIterator<(MetaVar, TruthValue)> for MetaAssignment {
    fn from_iter<I: IntoIterator<Item = (MetaVar, TruthValue)>>(iter: I) -> MetaAssignment {
        let mut out = MetaAssignment::new();
        for (var, value) in iter {
            out.assign(var, value);
        }
        out
    }
}

impl fmt::Display for MetaAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (var, value) in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{var}={value}")?;
        }
        if first {
            write!(f, "(empty)")?;
        }
        Ok(())
    }
}

/// All assignments over the given metavariables, lexicographic with
/// `A < B < C` and values ordered `t < f < b`.
pub fn assignments(vars: &BTreeSet<MetaVar>) -> impl Iterator<Item = MetaAssignment> {
    let vars: Vec<MetaVar> = vars.iter().copied().collect();
    let total = 3usize.pow(vars.len() as u32);
    (0..total).map(move |mut n| {
        let mut assignment = MetaAssignment::new();
        for &var in vars.iter().rev() {
            assignment.assign(var, TruthValue::ALL[n % 3]);
            n /= 3;
        }
        assignment
    })
}

/// A named equivalence law: two templates asserted to take the same value
/// under every assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawSchema {
    pub name: String,
    pub lhs: Template,
    pub rhs: Template,
}

impl LawSchema {
    pub fn new(name: impl Into<String>, lhs: Template, rhs: Template) -> LawSchema {
        LawSchema {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn metavars(&self) -> BTreeSet<MetaVar> {
        let mut vars = self.lhs.metavars();
        vars.extend(self.rhs.metavars());
        vars
    }
}

impl fmt::Display for LawSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} == {}", self.name, self.lhs, self.rhs)
    }
}

/// Number of built-in laws.
pub const LAW_COUNT: u8 = 23;

/// The built-in equivalence laws `L1`..`L23`, in catalog order:
/// annihilation, identity, idempotence and commutativity for `&` and `|`
/// (1-8), double negation (9), three implication laws (10-12),
/// associativity, distributivity and the negation normal-form laws
/// (13-20), and the three classically valid laws that define `->` from
/// `~` and `|` and collapse contradictions (21-23).
pub fn builtin_laws() -> Vec<LawSchema> {
    use Template as T;
    let a = || T::meta(MetaVar::A);
    let b = || T::meta(MetaVar::B);
    let c = || T::meta(MetaVar::C);
    let f = T::falsum;
    let t = T::verum;

    vec![
        LawSchema::new("L1", T::and(a(), f()), f()),
        LawSchema::new("L2", T::or(a(), t()), t()),
        LawSchema::new("L3", T::and(a(), t()), a()),
        LawSchema::new("L4", T::or(a(), f()), a()),
        LawSchema::new("L5", T::and(a(), a()), a()),
        LawSchema::new("L6", T::or(a(), a()), a()),
        LawSchema::new("L7", T::and(a(), b()), T::and(b(), a())),
        LawSchema::new("L8", T::or(a(), b()), T::or(b(), a())),
        LawSchema::new("L9", T::not(T::not(a())), a()),
        LawSchema::new("L10", T::implies(T::or(a(), T::not(a())), b()), b()),
        LawSchema::new(
            "L11",
            T::and(T::implies(a(), b()), T::implies(a(), c())),
            T::implies(a(), T::and(b(), c())),
        ),
        LawSchema::new(
            "L12",
            T::and(T::implies(a(), c()), T::implies(b(), c())),
            T::implies(T::or(a(), b()), c()),
        ),
        LawSchema::new(
            "L13",
            T::and(T::and(a(), b()), c()),
            T::and(a(), T::and(b(), c())),
        ),
        LawSchema::new(
            "L14",
            T::or(T::or(a(), b()), c()),
            T::or(a(), T::or(b(), c())),
        ),
        LawSchema::new(
            "L15",
            T::and(a(), T::or(b(), c())),
            T::or(T::and(a(), b()), T::and(a(), c())),
        ),
        LawSchema::new(
            "L16",
            T::or(a(), T::and(b(), c())),
            T::and(T::or(a(), b()), T::or(a(), c())),
        ),
        LawSchema::new(
            "L17",
            T::not(T::and(a(), b())),
            T::or(T::not(a()), T::not(b())),
        ),
        LawSchema::new(
            "L18",
            T::not(T::or(a(), b())),
            T::and(T::not(a()), T::not(b())),
        ),
        LawSchema::new(
            "L19",
            T::not(T::implies(a(), b())),
            T::and(a(), T::not(b())),
        ),
        LawSchema::new(
            "L20",
            T::implies(a(), T::implies(b(), c())),
            T::implies(T::and(a(), b()), c()),
        ),
        LawSchema::new("L21", T::implies(a(), b()), T::or(T::not(a()), b())),
        LawSchema::new("L22", T::and(a(), T::not(a())), f()),
        LawSchema::new("L23", T::or(a(), T::not(a())), t()),
    ]
}

/// Built-in law by 1-based number.
pub fn builtin_law(number: u8) -> Option<LawSchema> {
    if (1..=LAW_COUNT).contains(&number) {
        Some(builtin_laws().swap_remove(usize::from(number) - 1))
    } else {
        None
    }
}

/// Whether the law holds in the logic: both sides take the same value
/// under every assignment to the law's metavariables.
pub fn check_law(law: &LawSchema, logic: &LogicSpec) -> bool {
    let vars = law.metavars();
    assignments(&vars)
        .all(|assignment| law.lhs.eval(&assignment, logic) == law.rhs.eval(&assignment, logic))
}

/// A failing assignment together with the two side values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCounterexample {
    pub assignment: MetaAssignment,
    pub lhs: TruthValue,
    pub rhs: TruthValue,
}

impl fmt::Display for LawCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (lhs={}, rhs={})",
            self.assignment, self.lhs, self.rhs
        )
    }
}

/// The least assignment on which the law's sides differ, or `None` when
/// the law holds.
pub fn counterexample(law: &LawSchema, logic: &LogicSpec) -> Option<LawCounterexample> {
    let vars = law.metavars();
    for assignment in assignments(&vars) {
        let lhs = law.lhs.eval(&assignment, logic);
        let rhs = law.rhs.eval(&assignment, logic);
        if lhs != rhs {
            return Some(LawCounterexample {
                assignment,
                lhs,
                rhs,
            });
        }
    }
    None
}

/// Which of the 23 built-in laws a logic satisfies; bit `k` stands for
/// law `k+1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LawProfile(u32);

impl LawProfile {
    pub fn satisfies(self, law_number: u8) -> bool {
        assert!((1..=LAW_COUNT).contains(&law_number));
        self.0 >> (law_number - 1) & 1 == 1
    }

    pub fn satisfies_all<'a>(self, law_numbers: impl IntoIterator<Item = &'a u8>) -> bool {
        law_numbers.into_iter().all(|&n| self.satisfies(n))
    }

    fn set(&mut self, law_number: u8) {
        self.0 |= 1 << (law_number - 1);
    }

    /// 23 characters, law 1 first, `1` for satisfied.
    pub fn bitstring(self) -> String {
        (1..=LAW_COUNT)
            .map(|n| if self.satisfies(n) { '1' } else { '0' })
            .collect()
    }

    pub fn from_bitstring(s: &str) -> Option<LawProfile> {
        if s.len() != usize::from(LAW_COUNT) {
            return None;
        }
        let mut profile = LawProfile::default();
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => profile.set(i as u8 + 1),
                '0' => {}
                _ => return None,
            }
        }
        Some(profile)
    }
}

/// Checks each built-in law against the logic.
pub fn law_profile(logic: &LogicSpec) -> LawProfile {
    let mut profile = LawProfile::default();
    for (i, law) in builtin_laws().iter().enumerate() {
        if check_law(law, logic) {
            profile.set(i as u8 + 1);
        }
    }
    profile
}

/// A named Hilbert-style axiom schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSchema {
    pub name: String,
    pub template: Template,
}

impl AxiomSchema {
    fn new(name: &str, template: Template) -> AxiomSchema {
        AxiomSchema {
            name: name.to_string(),
            template,
        }
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.template)
    }
}

/// The 15 axiom schemas of the Hilbert-style proof system: the positive
/// fragment of classical propositional logic, the negation normal-form
/// axioms, and excluded middle. Bi-implications are stored expanded.
pub fn hilbert_axioms() -> Vec<AxiomSchema> {
    use Template as T;
    let a = || T::meta(MetaVar::A);
    let b = || T::meta(MetaVar::B);
    let c = || T::meta(MetaVar::C);

    vec![
        AxiomSchema::new("k", T::implies(a(), T::implies(b(), a()))),
        AxiomSchema::new(
            "peirce",
            T::implies(T::implies(T::implies(a(), b()), a()), a()),
        ),
        AxiomSchema::new(
            "s",
            T::implies(
                T::implies(a(), T::implies(b(), c())),
                T::implies(T::implies(a(), b()), T::implies(a(), c())),
            ),
        ),
        AxiomSchema::new("ex-falso", T::implies(T::falsum(), a())),
        AxiomSchema::new("and-elim-left", T::implies(T::and(a(), b()), a())),
        AxiomSchema::new("and-elim-right", T::implies(T::and(a(), b()), b())),
        AxiomSchema::new(
            "and-intro",
            T::implies(a(), T::implies(b(), T::and(a(), b()))),
        ),
        AxiomSchema::new("or-intro-left", T::implies(a(), T::or(a(), b()))),
        AxiomSchema::new("or-intro-right", T::implies(b(), T::or(a(), b()))),
        AxiomSchema::new(
            "or-elim",
            T::implies(
                T::implies(a(), c()),
                T::implies(T::implies(b(), c()), T::implies(T::or(a(), b()), c())),
            ),
        ),
        AxiomSchema::new("double-negation", T::iff(T::not(T::not(a())), a())),
        AxiomSchema::new(
            "negated-implication",
            T::iff(T::not(T::implies(a(), b())), T::and(a(), T::not(b()))),
        ),
        AxiomSchema::new(
            "negated-conjunction",
            T::iff(T::not(T::and(a(), b())), T::or(T::not(a()), T::not(b()))),
        ),
        AxiomSchema::new(
            "negated-disjunction",
            T::iff(T::not(T::or(a(), b())), T::and(T::not(a()), T::not(b()))),
        ),
        AxiomSchema::new("excluded-middle", T::or(a(), T::not(a()))),
    ]
}

/// `~A -> (A -> B)`: adding this schema to the proof system yields
/// classical propositional logic. It is the canonical invalid schema for
/// the paraconsistent family.
pub fn classical_collapse_schema() -> AxiomSchema {
    use Template as T;
    let a = || T::meta(MetaVar::A);
    let b = || T::meta(MetaVar::B);
    AxiomSchema::new(
        "classical-collapse",
        T::implies(T::not(a()), T::implies(a(), b())),
    )
}

/// Validity verdict for one axiom schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub name: String,
    pub valid: bool,
    /// Least assignment whose value is not designated, with that value.
    pub counterexample: Option<(MetaAssignment, TruthValue)>,
}

/// Checks one schema: valid when every assignment evaluates into the
/// designated set.
pub fn check_axiom_schema(axiom: &AxiomSchema, logic: &LogicSpec) -> AxiomReport {
    let vars = axiom.template.metavars();
    for assignment in assignments(&vars) {
        let value = axiom.template.eval(&assignment, logic);
        if !value.is_designated() {
            return AxiomReport {
                name: axiom.name.clone(),
                valid: false,
                counterexample: Some((assignment, value)),
            };
        }
    }
    AxiomReport {
        name: axiom.name.clone(),
        valid: true,
        counterexample: None,
    }
}

/// Checks every Hilbert axiom schema against the logic.
pub fn check_axiom_schemas(logic: &LogicSpec) -> Vec<AxiomReport> {
    hilbert_axioms()
        .iter()
        .map(|axiom| check_axiom_schema(axiom, logic))
        .collect()
}

/// Whether modus ponens preserves designation at the value level: for all
/// `x`, `y`, if `x` and `x -> y` are designated then so is `y`.
pub fn check_mp_preservation(logic: &LogicSpec) -> bool {
    TruthValue::ALL.into_iter().all(|x| {
        TruthValue::ALL
            .into_iter()
            .all(|y| !(x.is_designated() && logic.imp(x, y).is_designated()) || y.is_designated())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{lp_logic, Connective};
    use crate::truth::TruthValue::{Both, False, True};

    #[test]
    fn catalog_has_23_laws_in_order() {
        let laws = builtin_laws();
        assert_eq!(laws.len(), usize::from(LAW_COUNT));
        assert_eq!(laws[0].to_string(), "L1: A & F == F");
        assert_eq!(laws[16].to_string(), "L17: ~(A & B) == ~A | ~B");
        assert_eq!(laws[21].to_string(), "L22: A & ~A == F");
        assert_eq!(builtin_law(23).unwrap().name, "L23");
        assert!(builtin_law(0).is_none());
        assert!(builtin_law(24).is_none());
    }

    #[test]
    fn lp_satisfies_annihilation_but_not_excluded_middle_as_equivalence() {
        let lp = lp_logic();
        assert!(check_law(&builtin_law(1).unwrap(), &lp));
        assert!(!check_law(&builtin_law(23).unwrap(), &lp));
    }

    /// LP satisfies laws 1-18 and 20. Law 19 fails at A=b, B=f: the left
    /// side is `~(b -> f)` = `~f` = t while the right side is `b & ~f` =
    /// `b & t` = b; the sides are both designated but not equal, and the
    /// equivalence relation compares values exactly. Laws 21-23 fail as
    /// well.
    #[test]
    fn lp_law_profile() {
        let profile = law_profile(&lp_logic());
        for n in 1..=LAW_COUNT {
            let expected = n != 19 && n < 21;
            assert_eq!(profile.satisfies(n), expected, "law {n}");
        }

        let ce19 = counterexample(&builtin_law(19).unwrap(), &lp_logic()).unwrap();
        assert_eq!(
            ce19.assignment,
            [(MetaVar::A, Both), (MetaVar::B, False)]
                .into_iter()
                .collect()
        );
        assert_eq!((ce19.lhs, ce19.rhs), (True, Both));
    }

    #[test]
    fn annihilation_by_falsum_holds_family_wide() {
        // A & F is never designated, and the only non-designated value
        // is f, so law 1 is forced by the designation conditions alone.
        for spec in crate::family::enumerate_logics() {
            assert!(check_law(&builtin_law(1).unwrap(), &spec));
        }
    }

    #[test]
    fn double_negation_fails_when_negation_maps_b_to_t() {
        let logic = lp_logic().with_neg_cell(Both, True);
        assert!(logic.is_family_member());
        // ~~b = ~t = f, not b: brute force over the three assignments
        // pins the failure at A=b.
        let law = builtin_law(9).unwrap();
        assert!(!check_law(&law, &logic));
        let ce = counterexample(&law, &logic).unwrap();
        assert_eq!(ce.assignment, [(MetaVar::A, Both)].into_iter().collect());
        assert_eq!((ce.lhs, ce.rhs), (False, Both));
    }

    #[test]
    fn counterexamples_are_least_and_carry_both_sides() {
        let lp = lp_logic();

        let ce23 = counterexample(&builtin_law(23).unwrap(), &lp).unwrap();
        assert_eq!(ce23.assignment, [(MetaVar::A, Both)].into_iter().collect());
        assert_eq!((ce23.lhs, ce23.rhs), (Both, True));

        assert!(counterexample(&builtin_law(1).unwrap(), &lp).is_none());

        let ce21 = counterexample(&builtin_law(21).unwrap(), &lp).unwrap();
        assert_eq!(
            ce21.assignment,
            [(MetaVar::A, Both), (MetaVar::B, False)]
                .into_iter()
                .collect()
        );
        assert_eq!((ce21.lhs, ce21.rhs), (False, Both));
    }

    #[test]
    fn idempotence_fails_when_conjunction_of_b_with_itself_is_t() {
        let logic = lp_logic().with_binary_cell(Connective::Conjunction, Both, Both, True);
        assert!(logic.is_family_member());
        assert!(!law_profile(&logic).satisfies(5));
    }

    #[test]
    fn profile_bitstring_roundtrip() {
        let profile = law_profile(&lp_logic());
        let s = profile.bitstring();
        assert_eq!(s.len(), 23);
        assert_eq!(LawProfile::from_bitstring(&s), Some(profile));
        assert_eq!(LawProfile::from_bitstring("10"), None);
    }

    #[test]
    fn all_23_laws_hold_classically() {
        // Under two-valued assignments the family tables agree with the
        // classical ones, so restricting the assignments to t and f
        // checks the classical validity of each law.
        let lp = lp_logic();
        for law in builtin_laws() {
            let vars = law.metavars();
            let classical_ok = assignments(&vars)
                .filter(|asg| asg.iter().all(|(_, v)| v.is_classical()))
                .all(|asg| law.lhs.eval(&asg, &lp) == law.rhs.eval(&asg, &lp));
            assert!(classical_ok, "{law} should hold classically");
        }
    }

    #[test]
    fn hilbert_axioms_are_lp_valid() {
        let reports = check_axiom_schemas(&lp_logic());
        assert_eq!(reports.len(), 15);
        for report in &reports {
            assert!(report.valid, "{} should be valid", report.name);
            assert!(report.counterexample.is_none());
        }
    }

    #[test]
    fn ex_falso_is_valid_family_wide() {
        // F -> A: f is never designated, so imp(f, x) always is.
        let ex_falso = hilbert_axioms().swap_remove(3);
        assert_eq!(ex_falso.name, "ex-falso");
        for spec in crate::family::enumerate_logics() {
            assert!(check_axiom_schema(&ex_falso, &spec).valid);
        }
    }

    #[test]
    fn classical_collapse_is_lp_invalid_at_a_b_b_f() {
        let report = check_axiom_schema(&classical_collapse_schema(), &lp_logic());
        assert!(!report.valid);
        let (assignment, value) = report.counterexample.unwrap();
        assert_eq!(
            assignment,
            [(MetaVar::A, Both), (MetaVar::B, False)]
                .into_iter()
                .collect()
        );
        assert_eq!(value, False);
    }

    #[test]
    fn mp_preservation() {
        assert!(check_mp_preservation(&lp_logic()));
        let broken = lp_logic().with_binary_cell(Connective::Implication, Both, False, Both);
        assert!(!broken.is_family_member());
        assert!(!check_mp_preservation(&broken));
    }

    #[test]
    fn assignment_order_is_lexicographic() {
        let vars: BTreeSet<MetaVar> = [MetaVar::A, MetaVar::B].into();
        let order: Vec<_> = assignments(&vars)
            .map(|a| (a.get(MetaVar::A).unwrap(), a.get(MetaVar::B).unwrap()))
            .collect();
        assert_eq!(order.len(), 9);
        assert_eq!(order[0], (True, True));
        assert_eq!(order[1], (True, False));
        assert_eq!(order[3], (False, True));
        assert_eq!(order[8], (Both, Both));
    }

    #[test]
    fn laws_without_metavars_use_the_empty_assignment() {
        let law = LawSchema::new("X", Template::falsum(), Template::falsum());
        assert!(check_law(&law, &lp_logic()));
        let bad = LawSchema::new("Y", Template::falsum(), Template::verum());
        let ce = counterexample(&bad, &lp_logic()).unwrap();
        assert_eq!(ce.assignment, MetaAssignment::new());
    }
}
