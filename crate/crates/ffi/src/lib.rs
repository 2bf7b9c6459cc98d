//! C ABI for the trilogic workbench.
//!
//! Formulas and logics are opaque handles created and destroyed by this
//! library; every function returns a [`TrilogicStatus`] and writes its
//! results through out-pointers only on success. Strings returned
//! through out-pointers are owned by the caller and must be released
//! with [`trilogic_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::ptr;
use trilogic::cli::parse_assignment;
use trilogic::family::FAMILY_SIZE;
use trilogic::laws::LAW_COUNT;
use trilogic::semantics::EntailmentResult;
use trilogic::{
    builtin_law, check_law, count_satisfying, decode, encode, entails, equivalent, eval,
    is_consistent, law_profile, lp_logic, parse_formula, Formula, LogicId, LogicSpec,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrilogicStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A formula or assignment failed to parse.
    SyntaxError = 3,
    /// The valuation does not cover an atom of the formula.
    MissingAtom = 4,
    /// The logic id is outside 0..8192.
    IdOutOfRange = 5,
    /// A law number is outside 1..=23.
    InvalidLawNumber = 6,
}

/// Opaque formula handle.
pub struct TrilogicFormula {
    inner: Formula,
}

/// Opaque logic handle.
pub struct TrilogicLogic {
    inner: LogicSpec,
}

/// A static description of a status code.
#[no_mangle]
pub extern "C" fn trilogic_status_message(status: TrilogicStatus) -> *const c_char {
    let message: &'static CStr = match status {
        TrilogicStatus::Ok => c"ok",
        TrilogicStatus::NullArgument => c"a required pointer argument was null",
        TrilogicStatus::InvalidUtf8 => c"a string argument was not valid UTF-8",
        TrilogicStatus::SyntaxError => c"a formula or assignment failed to parse",
        TrilogicStatus::MissingAtom => c"the assignment does not cover an atom of the formula",
        TrilogicStatus::IdOutOfRange => c"the logic id is outside 0..8192",
        TrilogicStatus::InvalidLawNumber => c"a law number is outside 1..=23",
    };
    message.as_ptr()
}

/// Number of logics in the family (8192).
#[no_mangle]
pub extern "C" fn trilogic_family_size() -> u16 {
    FAMILY_SIZE
}

/// Number of built-in equivalence laws (23).
#[no_mangle]
pub extern "C" fn trilogic_law_count() -> u8 {
    LAW_COUNT
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, TrilogicStatus> {
    if text.is_null() {
        return Err(TrilogicStatus::NullArgument);
    }
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map_err(|_| TrilogicStatus::InvalidUtf8)
}

fn owned_c_string(text: String) -> *mut c_char {
    CString::new(text)
        .expect("workbench strings contain no interior NUL")
        .into_raw()
}

/// Parses a formula in the workbench's concrete syntax into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_formula_parse(
    text: *const c_char,
    out: *mut *mut TrilogicFormula,
) -> TrilogicStatus {
    if out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    let text = match unsafe { read_str(text) } {
        Ok(text) => text,
        Err(status) => return status,
    };
    match parse_formula(text) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(TrilogicFormula { inner })) };
            TrilogicStatus::Ok
        }
        Err(_) => TrilogicStatus::SyntaxError,
    }
}

/// Prints a formula; the result reparses to the same formula.
///
/// # Safety
/// `formula` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_formula_to_string(
    formula: *const TrilogicFormula,
    out: *mut *mut c_char,
) -> TrilogicStatus {
    if formula.is_null() || out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    let text = unsafe { &(*formula).inner }.to_string();
    unsafe { *out = owned_c_string(text) };
    TrilogicStatus::Ok
}

/// Releases a formula handle. Null is ignored.
///
/// # Safety
/// `formula` must be null or a handle returned by this library, and must
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trilogic_formula_free(formula: *mut TrilogicFormula) {
    if !formula.is_null() {
        drop(unsafe { Box::from_raw(formula) });
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must be null or a string returned by this library, and must
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trilogic_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

/// Creates a handle to the LP tables.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_logic_lp(out: *mut *mut TrilogicLogic) -> TrilogicStatus {
    if out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(TrilogicLogic { inner: lp_logic() })) };
    TrilogicStatus::Ok
}

/// Creates a handle to the family member with the given id.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_logic_from_id(
    id: u16,
    out: *mut *mut TrilogicLogic,
) -> TrilogicStatus {
    if out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    match LogicId::new(id) {
        Ok(id) => {
            unsafe { *out = Box::into_raw(Box::new(TrilogicLogic { inner: decode(id) })) };
            TrilogicStatus::Ok
        }
        Err(_) => TrilogicStatus::IdOutOfRange,
    }
}

/// Writes the canonical id of the logic.
///
/// # Safety
/// `logic` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_logic_id(
    logic: *const TrilogicLogic,
    out: *mut u16,
) -> TrilogicStatus {
    if logic.is_null() || out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    let id = encode(unsafe { &(*logic).inner }).expect("handles only hold family members");
    unsafe { *out = id.value() };
    TrilogicStatus::Ok
}

/// Releases a logic handle. Null is ignored.
///
/// # Safety
/// `logic` must be null or a handle returned by this library, and must
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trilogic_logic_free(logic: *mut TrilogicLogic) {
    if !logic.is_null() {
        drop(unsafe { Box::from_raw(logic) });
    }
}

/// Evaluates a formula under an assignment such as `"p=t,q=b"`, writing
/// the value as `'t'`, `'f'`, or `'b'`.
///
/// # Safety
/// `logic` and `formula` must be live handles, `assignment` a
/// NUL-terminated string, and `out_value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_eval(
    logic: *const TrilogicLogic,
    formula: *const TrilogicFormula,
    assignment: *const c_char,
    out_value: *mut c_char,
) -> TrilogicStatus {
    if logic.is_null() || formula.is_null() || out_value.is_null() {
        return TrilogicStatus::NullArgument;
    }
    let assignment = match unsafe { read_str(assignment) } {
        Ok(text) => text,
        Err(status) => return status,
    };
    let valuation = match parse_assignment(assignment) {
        Ok(valuation) => valuation,
        Err(_) => return TrilogicStatus::SyntaxError,
    };
    match eval(unsafe { &(*formula).inner }, &valuation, unsafe {
        &(*logic).inner
    }) {
        Ok(value) => {
            unsafe { *out_value = value.as_char() as c_char };
            TrilogicStatus::Ok
        }
        Err(_) => TrilogicStatus::MissingAtom,
    }
}

unsafe fn write_outcome(
    result: EntailmentResult,
    out_holds: *mut bool,
    out_witness: *mut *mut c_char,
) -> TrilogicStatus {
    match result {
        EntailmentResult::Holds => {
            unsafe { *out_holds = true };
            if !out_witness.is_null() {
                unsafe { *out_witness = ptr::null_mut() };
            }
        }
        EntailmentResult::Refuted(witness) => {
            unsafe { *out_holds = false };
            if !out_witness.is_null() {
                unsafe { *out_witness = owned_c_string(witness.to_string()) };
            }
        }
    }
    TrilogicStatus::Ok
}

/// Decides semantic consequence. On refutation, the least refuting
/// valuation is written to `out_witness` (when non-null) as a string
/// such as `"p=b, q=f"`; on success `out_witness` is set to null.
///
/// # Safety
/// `premises` must point to `premise_count` live formula handles (it may
/// be null when the count is zero); `logic` and `conclusion` must be
/// live handles; `out_holds` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_entails(
    logic: *const TrilogicLogic,
    premises: *const *const TrilogicFormula,
    premise_count: usize,
    conclusion: *const TrilogicFormula,
    out_holds: *mut bool,
    out_witness: *mut *mut c_char,
) -> TrilogicStatus {
    if logic.is_null() || conclusion.is_null() || out_holds.is_null() {
        return TrilogicStatus::NullArgument;
    }
    if premises.is_null() && premise_count > 0 {
        return TrilogicStatus::NullArgument;
    }
    let mut owned = Vec::with_capacity(premise_count);
    for i in 0..premise_count {
        let premise = unsafe { *premises.add(i) };
        if premise.is_null() {
            return TrilogicStatus::NullArgument;
        }
        owned.push(unsafe { &(*premise).inner }.clone());
    }
    let result = entails(&owned, unsafe { &(*conclusion).inner }, unsafe {
        &(*logic).inner
    });
    unsafe { write_outcome(result, out_holds, out_witness) }
}

/// Decides logical equivalence with the same outcome convention as
/// [`trilogic_entails`].
///
/// # Safety
/// `logic`, `lhs`, and `rhs` must be live handles; `out_holds` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_equivalent(
    logic: *const TrilogicLogic,
    lhs: *const TrilogicFormula,
    rhs: *const TrilogicFormula,
    out_holds: *mut bool,
    out_witness: *mut *mut c_char,
) -> TrilogicStatus {
    if logic.is_null() || lhs.is_null() || rhs.is_null() || out_holds.is_null() {
        return TrilogicStatus::NullArgument;
    }
    let result = equivalent(unsafe { &(*lhs).inner }, unsafe { &(*rhs).inner }, unsafe {
        &(*logic).inner
    });
    unsafe { write_outcome(result, out_holds, out_witness) }
}

/// Whether no valuation gives the formula the value `b`.
///
/// # Safety
/// `logic` and `formula` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_is_consistent(
    logic: *const TrilogicLogic,
    formula: *const TrilogicFormula,
    out: *mut bool,
) -> TrilogicStatus {
    if logic.is_null() || formula.is_null() || out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    unsafe { *out = is_consistent(&(*formula).inner, &(*logic).inner) };
    TrilogicStatus::Ok
}

/// Whether the logic satisfies the built-in law with the given 1-based
/// number.
///
/// # Safety
/// `logic` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_check_law(
    logic: *const TrilogicLogic,
    law_number: u8,
    out: *mut bool,
) -> TrilogicStatus {
    if logic.is_null() || out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    match builtin_law(law_number) {
        Some(law) => {
            unsafe { *out = check_law(&law, &(*logic).inner) };
            TrilogicStatus::Ok
        }
        None => TrilogicStatus::InvalidLawNumber,
    }
}

/// Writes the logic's law profile as a 23-character string of `0`/`1`,
/// law 1 first.
///
/// # Safety
/// `logic` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_law_profile(
    logic: *const TrilogicLogic,
    out: *mut *mut c_char,
) -> TrilogicStatus {
    if logic.is_null() || out.is_null() {
        return TrilogicStatus::NullArgument;
    }
    let profile = law_profile(unsafe { &(*logic).inner });
    unsafe { *out = owned_c_string(profile.bitstring()) };
    TrilogicStatus::Ok
}

/// Counts the family members satisfying all of the given built-in laws.
///
/// # Safety
/// `law_numbers` must point to `law_count` bytes (it may be null when
/// the count is zero) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn trilogic_count_satisfying(
    law_numbers: *const u8,
    law_count: usize,
    out: *mut u32,
) -> TrilogicStatus {
    if out.is_null() || (law_numbers.is_null() && law_count > 0) {
        return TrilogicStatus::NullArgument;
    }
    let numbers: &[u8] = if law_count == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(law_numbers, law_count) }
    };
    match count_satisfying(&numbers.iter().copied().collect()) {
        Ok(ids) => {
            unsafe { *out = ids.len() as u32 };
            TrilogicStatus::Ok
        }
        Err(_) => TrilogicStatus::InvalidLawNumber,
    }
}
