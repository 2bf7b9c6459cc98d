//! Exercises the C ABI the way a foreign caller would: through raw
//! pointers and the status codes.

use std::ffi::{c_char, CStr, CString};
use std::ptr;
use trilogic_ffi::*;

fn cstr(text: &str) -> CString {
    CString::new(text).unwrap()
}

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { trilogic_string_free(ptr) };
    text
}

unsafe fn parse(text: &str) -> *mut TrilogicFormula {
    let mut formula = ptr::null_mut();
    let status = unsafe { trilogic_formula_parse(cstr(text).as_ptr(), &mut formula) };
    assert_eq!(status, TrilogicStatus::Ok);
    assert!(!formula.is_null());
    formula
}

unsafe fn lp() -> *mut TrilogicLogic {
    let mut logic = ptr::null_mut();
    assert_eq!(unsafe { trilogic_logic_lp(&mut logic) }, TrilogicStatus::Ok);
    logic
}

#[test]
fn constants() {
    assert_eq!(trilogic_family_size(), 8192);
    assert_eq!(trilogic_law_count(), 23);
    let message = unsafe { CStr::from_ptr(trilogic_status_message(TrilogicStatus::Ok)) };
    assert_eq!(message.to_str().unwrap(), "ok");
}

#[test]
fn parse_print_roundtrip() {
    unsafe {
        let formula = parse("p & ~p -> q");
        let mut printed = ptr::null_mut();
        assert_eq!(
            trilogic_formula_to_string(formula, &mut printed),
            TrilogicStatus::Ok
        );
        assert_eq!(take_string(printed), "p & ~p -> q");
        trilogic_formula_free(formula);

        let mut bad = ptr::null_mut();
        assert_eq!(
            trilogic_formula_parse(cstr("p &").as_ptr(), &mut bad),
            TrilogicStatus::SyntaxError
        );
    }
}

#[test]
fn logic_handles_carry_ids() {
    unsafe {
        let logic = lp();
        let mut id = 0u16;
        assert_eq!(trilogic_logic_id(logic, &mut id), TrilogicStatus::Ok);
        assert_eq!(id, 7418);
        trilogic_logic_free(logic);

        let mut other = ptr::null_mut();
        assert_eq!(trilogic_logic_from_id(0, &mut other), TrilogicStatus::Ok);
        let mut raw = 1u16;
        assert_eq!(trilogic_logic_id(other, &mut raw), TrilogicStatus::Ok);
        assert_eq!(raw, 0);
        trilogic_logic_free(other);

        let mut out_of_range = ptr::null_mut();
        assert_eq!(
            trilogic_logic_from_id(8192, &mut out_of_range),
            TrilogicStatus::IdOutOfRange
        );
    }
}

#[test]
fn eval_reports_values_and_missing_atoms() {
    unsafe {
        let logic = lp();
        let formula = parse("~p");
        let mut value: c_char = 0;
        assert_eq!(
            trilogic_eval(logic, formula, cstr("p=b").as_ptr(), &mut value),
            TrilogicStatus::Ok
        );
        assert_eq!(value as u8 as char, 'b');

        assert_eq!(
            trilogic_eval(logic, formula, cstr("").as_ptr(), &mut value),
            TrilogicStatus::MissingAtom
        );
        assert_eq!(
            trilogic_eval(logic, formula, cstr("p=x").as_ptr(), &mut value),
            TrilogicStatus::SyntaxError
        );

        trilogic_formula_free(formula);
        trilogic_logic_free(logic);
    }
}

#[test]
fn entails_returns_the_refuting_witness() {
    unsafe {
        let logic = lp();
        let p = parse("p");
        let not_p = parse("~p");
        let q = parse("q");
        let premises = [p as *const TrilogicFormula, not_p as *const TrilogicFormula];

        let mut holds = true;
        let mut witness = ptr::null_mut();
        let status = trilogic_entails(logic, premises.as_ptr(), 2, q, &mut holds, &mut witness);
        assert_eq!(status, TrilogicStatus::Ok);
        assert!(!holds);
        assert_eq!(take_string(witness), "p=b, q=f");

        // Empty premise set, valid conclusion.
        let lem = parse("p | ~p");
        let mut witness = ptr::null_mut();
        let status = trilogic_entails(logic, ptr::null(), 0, lem, &mut holds, &mut witness);
        assert_eq!(status, TrilogicStatus::Ok);
        assert!(holds);
        assert!(witness.is_null());

        trilogic_formula_free(lem);
        trilogic_formula_free(p);
        trilogic_formula_free(not_p);
        trilogic_formula_free(q);
        trilogic_logic_free(logic);
    }
}

#[test]
fn equivalence_and_consistency() {
    unsafe {
        let logic = lp();
        let lhs = parse("p -> q");
        let rhs = parse("~p | q");
        let mut holds = true;
        let mut witness = ptr::null_mut();
        assert_eq!(
            trilogic_equivalent(logic, lhs, rhs, &mut holds, &mut witness),
            TrilogicStatus::Ok
        );
        assert!(!holds);
        assert_eq!(take_string(witness), "p=b, q=f");

        let mut consistent = true;
        let p = parse("p");
        assert_eq!(
            trilogic_is_consistent(logic, p, &mut consistent),
            TrilogicStatus::Ok
        );
        assert!(!consistent);
        let falsum = parse("F");
        assert_eq!(
            trilogic_is_consistent(logic, falsum, &mut consistent),
            TrilogicStatus::Ok
        );
        assert!(consistent);

        trilogic_formula_free(p);
        trilogic_formula_free(falsum);
        trilogic_formula_free(lhs);
        trilogic_formula_free(rhs);
        trilogic_logic_free(logic);
    }
}

#[test]
fn law_checks_and_profiles() {
    unsafe {
        let logic = lp();
        let mut satisfied = false;
        assert_eq!(
            trilogic_check_law(logic, 1, &mut satisfied),
            TrilogicStatus::Ok
        );
        assert!(satisfied);
        assert_eq!(
            trilogic_check_law(logic, 23, &mut satisfied),
            TrilogicStatus::Ok
        );
        assert!(!satisfied);
        assert_eq!(
            trilogic_check_law(logic, 24, &mut satisfied),
            TrilogicStatus::InvalidLawNumber
        );

        let mut profile = ptr::null_mut();
        assert_eq!(
            trilogic_law_profile(logic, &mut profile),
            TrilogicStatus::Ok
        );
        let text = take_string(profile);
        assert_eq!(text.len(), 23);
        assert!(text.starts_with("1111111111"));

        let laws = [1u8, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
        let mut count = 0u32;
        assert_eq!(
            trilogic_count_satisfying(laws.as_ptr(), laws.len(), &mut count),
            TrilogicStatus::Ok
        );
        assert_eq!(count, 1);
        assert_eq!(
            trilogic_count_satisfying(ptr::null(), 0, &mut count),
            TrilogicStatus::Ok
        );
        assert_eq!(count, 8192);
        let bad = [42u8];
        assert_eq!(
            trilogic_count_satisfying(bad.as_ptr(), 1, &mut count),
            TrilogicStatus::InvalidLawNumber
        );

        trilogic_logic_free(logic);
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut formula = ptr::null_mut();
        assert_eq!(
            trilogic_formula_parse(ptr::null(), &mut formula),
            TrilogicStatus::NullArgument
        );
        assert_eq!(
            trilogic_formula_parse(cstr("p").as_ptr(), ptr::null_mut()),
            TrilogicStatus::NullArgument
        );
        let mut value: c_char = 0;
        assert_eq!(
            trilogic_eval(ptr::null(), ptr::null(), cstr("").as_ptr(), &mut value),
            TrilogicStatus::NullArgument
        );
        trilogic_formula_free(ptr::null_mut());
        trilogic_logic_free(ptr::null_mut());
        trilogic_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_covers_the_surface() {
    let header = include_str!("../include/trilogic.h");
    for symbol in [
        "TrilogicStatus",
        "TrilogicFormula",
        "TrilogicLogic",
        "trilogic_formula_parse",
        "trilogic_formula_to_string",
        "trilogic_formula_free",
        "trilogic_string_free",
        "trilogic_logic_lp",
        "trilogic_logic_from_id",
        "trilogic_logic_id",
        "trilogic_logic_free",
        "trilogic_eval",
        "trilogic_entails",
        "trilogic_equivalent",
        "trilogic_is_consistent",
        "trilogic_check_law",
        "trilogic_law_profile",
        "trilogic_count_satisfying",
        "trilogic_family_size",
        "trilogic_law_count",
        "trilogic_status_message",
    ] {
        assert!(header.contains(symbol), "header must declare {symbol}");
    }
}
