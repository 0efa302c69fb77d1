/* Plain C consumer of the shared library. */
#include "hopfcalc/hopfcalc.h"

#include <stdio.h>
#include <string.h>

static const char kc2[] =
    "field rational\ndim 2\nbasis 1 g\nunit 1 0\n"
    "mult 0 0 : 1 0\nmult 0 1 : 0 1\nmult 1 0 : 0 1\nmult 1 1 : 1 0\n"
    "comult 0 : 0,0,1\ncomult 1 : 1,1,1\ncounit 1 1\n"
    "antipode 0 : 1 0\nantipode 1 : 0 1\nideal full : -1 1\n";

static int failures = 0;

#define EXPECT(cond)                                                    \
    do {                                                                \
        if (!(cond)) {                                                  \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
            ++failures;                                                 \
        }                                                               \
    } while (0)

int main(void)
{
    hc_algebra* a = NULL;
    EXPECT(hc_algebra_parse(kc2, strlen(kc2), NULL, &a) == HC_OK);
    EXPECT(hc_algebra_dim(a) == 2);
    int valid = 0;
    EXPECT(hc_algebra_validate(a, &valid) == HC_OK && valid == 1);
    size_t chars = 0;
    EXPECT(hc_algebra_character_count(a, &chars) == HC_OK && chars == 2);

    hc_calculus* u = NULL;
    EXPECT(hc_calculus_universal(a, &u) == HC_OK);
    EXPECT(hc_calculus_omega_dim(u) == 2);
    EXPECT(hc_calculus_field_dim(u) == 2);
    size_t qdim = 0;
    EXPECT(hc_calculus_quantum_lie_dim(u, &qdim) == HC_OK && qdim == 1);
    hc_calculus_free(u);

    hc_calculus* w = NULL;
    EXPECT(hc_calculus_woronowicz(a, "full", &w) == HC_OK);
    EXPECT(hc_calculus_omega_dim(w) == 0);
    hc_calculus_free(w);
    EXPECT(hc_calculus_woronowicz(a, "missing", &w) == HC_ERR_INPUT && w == NULL);
    EXPECT(strstr(hc_last_error(), "missing") != NULL);
    hc_algebra_free(a);

    hc_algebra* bad = NULL;
    EXPECT(hc_algebra_parse("", 0, NULL, &bad) == HC_ERR_INPUT && bad == NULL);
    EXPECT(strcmp(hc_last_error(), "missing field declaration") == 0);
    EXPECT(hc_last_error_line() == 1 && hc_last_error_column() == 1);
    EXPECT(hc_algebra_parse(kc2, strlen(kc2), "gf:4", &bad) == HC_ERR_INPUT);
    EXPECT(hc_algebra_parse(NULL, 0, NULL, &bad) == HC_ERR_NULL_ARGUMENT);

    hc_run_options o;
    memset(&o, 0, sizeof o);
    o.command = "woronowicz";
    o.ideal = "full";
    hc_report* r = NULL;
    EXPECT(hc_run(kc2, strlen(kc2), &o, &r) == HC_OK);
    EXPECT(hc_report_exit_code(r) == 0);
    EXPECT(strstr(hc_report_json(r), "\"omega_dim\": 0") != NULL);
    EXPECT(strstr(hc_report_text(r), "omega_dim: 0") != NULL);
    hc_report_free(r);

    o.command = "validate";
    o.ideal = NULL;
    EXPECT(hc_run("field", 5, &o, &r) == HC_OK);
    EXPECT(hc_report_exit_code(r) == 2);
    hc_report_free(r);

    if (failures == 0)
        printf("C API: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
