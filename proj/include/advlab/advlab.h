/* C interface to the advised-automata library.
 *
 * Objects are opaque handles created by *_open / *_build / run_experiment
 * and released by the matching *_close. Every fallible call returns an
 * advlab_status; on failure advlab_last_error() describes the problem for
 * the calling thread. Strings returned through char** are heap-allocated
 * and must be released with advlab_string_free.
 */
#ifndef ADVLAB_H
#define ADVLAB_H

#include <stdint.h>

#if defined(_WIN32)
#  define ADVLAB_API __declspec(dllexport)
#else
#  define ADVLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum advlab_status {
    ADVLAB_OK = 0,
    ADVLAB_E_INVALID_ARGUMENT = 1, /* null pointer, unknown name, bad config */
    ADVLAB_E_DOMAIN = 2,           /* symbol outside an alphabet */
    ADVLAB_E_REFUSED = 3,          /* search ceiling exceeded */
    ADVLAB_E_ADVICE = 4,           /* advice does not fit the input */
    ADVLAB_E_MACHINE = 5,          /* machine fault or space cap */
    ADVLAB_E_DECODE = 6,           /* decompression found no string */
    ADVLAB_E_PARSE = 7,
    ADVLAB_E_INTERNAL = 8
} advlab_status;

typedef struct advlab_oracle advlab_oracle;
typedef struct advlab_machine advlab_machine;
typedef struct advlab_report advlab_report;

ADVLAB_API const char *advlab_version(void);
ADVLAB_API const char *advlab_last_error(void);
ADVLAB_API void advlab_string_free(char *s);

/* Oracles: "Lm:2", "Lf:sqrt", "LANGk:3", "Lg:log2", "Lw:k=3,seed=42", "all:01". */
ADVLAB_API advlab_status advlab_oracle_open(const char *name, uint64_t default_seed,
                                            advlab_oracle **out);
ADVLAB_API void advlab_oracle_close(advlab_oracle *oracle);
ADVLAB_API advlab_status advlab_oracle_member(const advlab_oracle *oracle, const char *word,
                                              int *is_member);
ADVLAB_API advlab_status advlab_oracle_alphabet(const advlab_oracle *oracle, char **out);

/* Advised machines: "Lm:3", "Lf:sqrt", "LANGk-prefix:2", "LANGk-dot:2", "L3rand", "Lg:log2", "Lw:k=3,seed=42". */
ADVLAB_API advlab_status advlab_machine_build(const char *builder, uint64_t default_seed,
                                              advlab_machine **out);
ADVLAB_API void advlab_machine_close(advlab_machine *machine);
ADVLAB_API advlab_status advlab_machine_state_count(const advlab_machine *machine,
                                                    uint64_t *out);
/* Exact acceptance probability num/den of a plain word. */
ADVLAB_API advlab_status advlab_machine_accept_probability(const advlab_machine *machine,
                                                           const char *word, int64_t *num,
                                                           int64_t *den);
/* Machine plus advice entries for lengths 0..max_n. */
ADVLAB_API advlab_status advlab_machine_to_json(const advlab_machine *machine, uint32_t max_n,
                                                char **out);

ADVLAB_API advlab_status advlab_check_recognition(const advlab_machine *machine,
                                                  const advlab_oracle *oracle, uint32_t max_len,
                                                  int *agree, char **report_json);
ADVLAB_API advlab_status advlab_search_separation(const advlab_oracle *oracle, uint32_t states,
                                                  uint32_t inkdots, uint32_t max_len,
                                                  uint64_t ceiling, uint32_t jobs,
                                                  char **certificate_json);
ADVLAB_API advlab_status advlab_myhill_nerode_index(const advlab_oracle *oracle,
                                                    uint32_t word_len, uint32_t ext_len,
                                                    uint64_t ceiling, uint64_t *out);

/* Experiments. `config_json` holds the ExperimentConfig fields:
 * {"command":..., "oracle":..., "builder":..., "max_len":..., "states":...,
 *  "inkdots":..., "ext_len":..., "seed":..., "format":..., "jobs":..., "ceiling":...}
 * Missing fields take their defaults. */
ADVLAB_API advlab_status advlab_run_experiment(const char *config_json, advlab_report **out);
ADVLAB_API void advlab_report_close(advlab_report *report);
ADVLAB_API int advlab_report_passed(const advlab_report *report);
ADVLAB_API double advlab_report_wall_clock(const advlab_report *report);
/* format: "json" or "markdown". */
ADVLAB_API advlab_status advlab_report_render(const advlab_report *report, const char *format,
                                              char **out);

#ifdef __cplusplus
}
#endif

#endif /* ADVLAB_H */
