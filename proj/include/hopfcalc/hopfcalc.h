/* C interface to the hopfcalc engine. All strings are UTF-8 and NUL-terminated. */
#ifndef HOPFCALC_H
#define HOPFCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HC_API __declspec(dllexport)
#else
#define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_NULL_ARGUMENT = 1,
    /* malformed HADF text or a bad name/argument; see hc_last_error() */
    HC_ERR_INPUT = 2,
    /* an internal verification failed */
    HC_ERR_CONSISTENCY = 3,
    HC_ERR_OUT_OF_MEMORY = 4,
    HC_ERR_INTERNAL = 5
} hc_status;

typedef struct hc_algebra hc_algebra;
typedef struct hc_calculus hc_calculus;
typedef struct hc_report hc_report;

/* Message of the last failed call on this thread; "" if none. */
HC_API const char* hc_last_error(void);
/* Position of the last input error (0 when it has none). */
HC_API size_t hc_last_error_line(void);
HC_API size_t hc_last_error_column(void);

HC_API const char* hc_version(void);

/* field_override: NULL or "gf:<p>". */
HC_API hc_status hc_algebra_parse(const char* hadf_text, size_t length, const char* field_override, hc_algebra** out);
HC_API void hc_algebra_free(hc_algebra* algebra);
HC_API size_t hc_algebra_dim(const hc_algebra* algebra);
/* Writes 1 to *valid when every Hopf axiom holds. */
HC_API hc_status hc_algebra_validate(const hc_algebra* algebra, int* valid);
HC_API hc_status hc_algebra_character_count(const hc_algebra* algebra, size_t* count);

HC_API hc_status hc_calculus_universal(const hc_algebra* algebra, hc_calculus** out);
/* Woronowicz calculus of an ideal declared in the definition file. */
HC_API hc_status hc_calculus_woronowicz(const hc_algebra* algebra, const char* ideal_name, hc_calculus** out);
HC_API void hc_calculus_free(hc_calculus* calculus);
HC_API size_t hc_calculus_omega_dim(const hc_calculus* calculus);
HC_API size_t hc_calculus_field_dim(const hc_calculus* calculus);
HC_API hc_status hc_calculus_quantum_lie_dim(const hc_calculus* calculus, size_t* dim);

typedef struct hc_run_options {
    const char* command;
    /* extra positional arguments, e.g. the two references of "bracket" */
    const char* const* args;
    size_t arg_count;
    const char* ideal; /* NULL when absent */
    const char* suite; /* NULL means "all" */
    uint64_t seed;
    const char* field_override; /* NULL or "gf:<p>" */
} hc_run_options;

/* Runs one CLI command on HADF text. Input problems do not make this fail:
   they are recorded in the report with exit code 2. */
HC_API hc_status hc_run(const char* hadf_text, size_t length, const hc_run_options* options, hc_report** out);
HC_API void hc_report_free(hc_report* report);
HC_API int hc_report_exit_code(const hc_report* report);
/* Owned by the report. */
HC_API const char* hc_report_text(const hc_report* report);
HC_API const char* hc_report_json(const hc_report* report);

#ifdef __cplusplus
}
#endif

#endif
