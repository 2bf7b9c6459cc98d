/* C interface to the trilogic workbench. Generated by cbindgen; do not edit. */

#ifndef TRILOGIC_H
#define TRILOGIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum TrilogicStatus {
  TRILOGIC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TRILOGIC_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  TRILOGIC_STATUS_INVALID_UTF8 = 2,
  /**
   * A formula or assignment failed to parse.
   */
  TRILOGIC_STATUS_SYNTAX_ERROR = 3,
  /**
   * The valuation does not cover an atom of the formula.
   */
  TRILOGIC_STATUS_MISSING_ATOM = 4,
  /**
   * The logic id is outside 0..8192.
   */
  TRILOGIC_STATUS_ID_OUT_OF_RANGE = 5,
  /**
   * A law number is outside 1..=23.
   */
  TRILOGIC_STATUS_INVALID_LAW_NUMBER = 6,
} TrilogicStatus;

/**
 * Opaque formula handle.
 */
typedef struct TrilogicFormula TrilogicFormula;

/**
 * Opaque logic handle.
 */
typedef struct TrilogicLogic TrilogicLogic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * A static description of a status code.
 */
const char *trilogic_status_message(enum TrilogicStatus status);

/**
 * Number of logics in the family (8192).
 */
uint16_t trilogic_family_size(void);

/**
 * Number of built-in equivalence laws (23).
 */
uint8_t trilogic_law_count(void);

/**
 * Parses a formula in the workbench's concrete syntax into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TrilogicStatus trilogic_formula_parse(const char *text, struct TrilogicFormula **out);

/**
 * Prints a formula; the result reparses to the same formula.
 *
 * # Safety
 * `formula` must be a live handle and `out` a valid pointer.
 */
enum TrilogicStatus trilogic_formula_to_string(const struct TrilogicFormula *formula, char **out);

/**
 * Releases a formula handle. Null is ignored.
 *
 * # Safety
 * `formula` must be null or a handle returned by this library, and must
 * not be used afterwards.
 */
void trilogic_formula_free(struct TrilogicFormula *formula);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `text` must be null or a string returned by this library, and must
 * not be used afterwards.
 */
void trilogic_string_free(char *text);

/**
 * Creates a handle to the LP tables.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TrilogicStatus trilogic_logic_lp(struct TrilogicLogic **out);

/**
 * Creates a handle to the family member with the given id.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TrilogicStatus trilogic_logic_from_id(uint16_t id, struct TrilogicLogic **out);

/**
 * Writes the canonical id of the logic.
 *
 * # Safety
 * `logic` must be a live handle and `out` a valid pointer.
 */
enum TrilogicStatus trilogic_logic_id(const struct TrilogicLogic *logic, uint16_t *out);

/**
 * Releases a logic handle. Null is ignored.
 *
 * # Safety
 * `logic` must be null or a handle returned by this library, and must
 * not be used afterwards.
 */
void trilogic_logic_free(struct TrilogicLogic *logic);

/**
 * Evaluates a formula under an assignment such as `"p=t,q=b"`, writing
 * the value as `'t'`, `'f'`, or `'b'`.
 *
 * # Safety
 * `logic` and `formula` must be live handles, `assignment` a
 * NUL-terminated string, and `out_value` a valid pointer.
 */
enum TrilogicStatus trilogic_eval(const struct TrilogicLogic *logic,
                                  const struct TrilogicFormula *formula,
                                  const char *assignment,
                                  char *out_value);

/**
 * Decides semantic consequence. On refutation, the least refuting
 * valuation is written to `out_witness` (when non-null) as a string
 * such as `"p=b, q=f"`; on success `out_witness` is set to null.
 *
 * # Safety
 * `premises` must point to `premise_count` live formula handles (it may
 * be null when the count is zero); `logic` and `conclusion` must be
 * live handles; `out_holds` must be a valid pointer.
 */
enum TrilogicStatus trilogic_entails(const struct TrilogicLogic *logic,
                                     const struct TrilogicFormula *const *premises,
                                     uintptr_t premise_count,
                                     const struct TrilogicFormula *conclusion,
                                     bool *out_holds,
                                     char **out_witness);

/**
 * Decides logical equivalence with the same outcome convention as
 * [`trilogic_entails`].
 *
 * # Safety
 * `logic`, `lhs`, and `rhs` must be live handles; `out_holds` must be a
 * valid pointer.
 */
enum TrilogicStatus trilogic_equivalent(const struct TrilogicLogic *logic,
                                        const struct TrilogicFormula *lhs,
                                        const struct TrilogicFormula *rhs,
                                        bool *out_holds,
                                        char **out_witness);

/**
 * Whether no valuation gives the formula the value `b`.
 *
 * # Safety
 * `logic` and `formula` must be live handles and `out` a valid pointer.
 */
enum TrilogicStatus trilogic_is_consistent(const struct TrilogicLogic *logic,
                                           const struct TrilogicFormula *formula,
                                           bool *out);

/**
 * Whether the logic satisfies the built-in law with the given 1-based
 * number.
 *
 * # Safety
 * `logic` must be a live handle and `out` a valid pointer.
 */
enum TrilogicStatus trilogic_check_law(const struct TrilogicLogic *logic,
                                       uint8_t law_number,
                                       bool *out);

/**
 * Writes the logic's law profile as a 23-character string of `0`/`1`,
 * law 1 first.
 *
 * # Safety
 * `logic` must be a live handle and `out` a valid pointer.
 */
enum TrilogicStatus trilogic_law_profile(const struct TrilogicLogic *logic, char **out);

/**
 * Counts the family members satisfying all of the given built-in laws.
 *
 * # Safety
 * `law_numbers` must point to `law_count` bytes (it may be null when
 * the count is zero) and `out` must be a valid pointer.
 */
enum TrilogicStatus trilogic_count_satisfying(const uint8_t *law_numbers,
                                              uintptr_t law_count,
                                              uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRILOGIC_H */
