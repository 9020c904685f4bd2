#include <stdio.h>
#include <string.h>
#include "treecert.h"

int main(void) {
    TcRational *r = NULL;
    if (tc_rational_parse(7, "x^3/(x + 2)", &r) != TC_STATUS_OK) return 1;
    char *s = tc_rational_to_string(r);
    int ok = strcmp(s, "x^3/(x+2)") == 0;
    tc_string_free(s);
    int64_t v = 0;
    int inf = 0;
    ok = ok && tc_rational_valuation(r, &v, &inf) == TC_STATUS_OK && v == -2 && !inf;
    tc_rational_free(r);

    TcMatrix *m = NULL;
    ok = ok && tc_matrix_parse(4, "1;0;0;1", &m) == TC_STATUS_INVALID_ARGUMENT;
    ok = ok && tc_last_error() != NULL && strstr(tc_last_error(), "prime") != NULL;

    TcReport *rep = NULL;
    ok = ok && tc_surface_verify(2, &rep) == TC_STATUS_OK && tc_report_passed(rep);
    tc_report_free(rep);
    printf("%s\n", ok ? "ok" : "FAIL");
    return ok ? 0 : 1;
}
