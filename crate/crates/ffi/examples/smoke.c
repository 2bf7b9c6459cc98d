/* Minimal consumer of the C interface.
 *
 * Build (from the workspace root, after `cargo build -p trilogic-ffi`):
 *
 *   gcc -I crates/ffi/include crates/ffi/examples/smoke.c \
 *       -L target/debug -ltrilogic_ffi -o smoke
 *   LD_LIBRARY_PATH=target/debug ./smoke
 */
#include "trilogic.h"

#include <assert.h>
#include <stdio.h>

int main(void) {
    assert(trilogic_family_size() == 8192);

    TrilogicLogic *lp = NULL;
    assert(trilogic_logic_lp(&lp) == TRILOGIC_STATUS_OK);
    uint16_t id = 0;
    assert(trilogic_logic_id(lp, &id) == TRILOGIC_STATUS_OK);
    printf("lp id: %u\n", id);

    TrilogicFormula *p = NULL, *not_p = NULL, *q = NULL;
    assert(trilogic_formula_parse("p", &p) == TRILOGIC_STATUS_OK);
    assert(trilogic_formula_parse("~p", &not_p) == TRILOGIC_STATUS_OK);
    assert(trilogic_formula_parse("q", &q) == TRILOGIC_STATUS_OK);

    const TrilogicFormula *premises[] = {p, not_p};
    bool holds = true;
    char *witness = NULL;
    assert(trilogic_entails(lp, premises, 2, q, &holds, &witness) == TRILOGIC_STATUS_OK);
    printf("p, ~p entail q: %s\n", holds ? "yes" : "no");
    if (witness != NULL) {
        printf("witness: %s\n", witness);
        trilogic_string_free(witness);
    }

    char *profile = NULL;
    assert(trilogic_law_profile(lp, &profile) == TRILOGIC_STATUS_OK);
    printf("law profile: %s\n", profile);
    trilogic_string_free(profile);

    trilogic_formula_free(p);
    trilogic_formula_free(not_p);
    trilogic_formula_free(q);
    trilogic_logic_free(lp);
    return 0;
}
