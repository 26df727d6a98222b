/* C interface to the coxtwist library.
 *
 * Every function returning ctw_status leaves a message for the calling
 * thread in ctw_last_error() when it fails. Strings returned through char**
 * are owned by the caller and released with ctw_string_free. Words are text:
 * whitespace- or comma-separated 1-based generator indices, "e" for the
 * empty word, or "w0" for the longest element of a finite group.
 */
#ifndef COXTWIST_H
#define COXTWIST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CTW_API __attribute__((visibility("default")))
#else
#define CTW_API
#endif

typedef struct ctw_system ctw_system;

typedef enum {
  CTW_OK = 0,
  CTW_INVALID_INPUT = 1,
  CTW_NOT_REDUCED = 2,
  CTW_NOT_FINITE = 3,
  CTW_NOT_DESCENT = 4,
  CTW_INFINITE_BOND = 5,
  CTW_DIFFERENT_ELEMENT = 6,
  CTW_HYPOTHESIS_VIOLATED = 7,
  CTW_NOT_RIGHT_ANGLED = 8,
  CTW_NOT_IDENTITY_TWIST = 9,
  CTW_OVERFLOW = 10,
  /* Not errors in the input: the requested property does not hold. */
  CTW_NOT_CONNECTED = 11,
  CTW_CHECK_FAILED = 12,
  CTW_INTERNAL = 99
} ctw_status;

typedef enum { CTW_FORMAT_TEXT = 0, CTW_FORMAT_JSON = 1, CTW_FORMAT_DOT = 2 } ctw_format;

typedef enum { CTW_REGIME_BRAID = 0, CTW_REGIME_HALFBRAID = 1, CTW_REGIME_FULL = 2 } ctw_regime;

typedef enum {
  CTW_ENUM_ELEMENT = 0,     /* reduced words of an element */
  CTW_ENUM_INVOLUTIONS = 1, /* twisted involutions */
  CTW_ENUM_EXPRESSIONS = 2  /* reduced S-hat-expressions of a twisted involution */
} ctw_enum_target;

typedef enum { CTW_GRAPH_MAXIMALITY = 0, CTW_GRAPH_EXPRESSIONS = 1 } ctw_graph_kind;

typedef enum {
  CTW_SUITE_WORD_PROPERTY = 0,
  CTW_SUITE_NECESSITY = 1,
  CTW_SUITE_HALF_BRAID = 2,
  CTW_SUITE_RIGHT_ANGLED = 3,
  CTW_SUITE_ALL = 4
} ctw_suite;

typedef struct {
  long long rank_bound; /* negative: unbounded (finite groups only) */
  size_t length_bound;
  uint64_t cap;
  size_t samples;
  size_t threads;
} ctw_verify_options;

CTW_API const char* ctw_last_error(void);
CTW_API const char* ctw_status_name(ctw_status status);
CTW_API void ctw_string_free(char* s);

CTW_API ctw_status ctw_system_load_file(const char* path, ctw_system** out);
CTW_API ctw_status ctw_system_load_json(const char* json, ctw_system** out);
/* Catalogue names: A3, B4, D4, E6, F4, H3, I2(5), I2(inf), ~A2. */
CTW_API ctw_status ctw_system_from_type(const char* name, ctw_system** out);
/* "2 1 3" (1-based images) or "id". */
CTW_API ctw_status ctw_system_set_theta(ctw_system* system, const char* theta);
CTW_API void ctw_system_free(ctw_system* system);
CTW_API size_t ctw_system_rank(const ctw_system* system);
CTW_API ctw_status ctw_system_describe(const ctw_system* system, char** out);

/* hat = 0: normal form and length of a word over S.
 * hat = 1: evaluation of an S-hat-word (reducedness, element, rank, twisted
 * absolute length, ord-expansion, standard expression). */
CTW_API ctw_status ctw_normalize(const ctw_system* system, const char* word,
                                 int hat, ctw_format format, char** out);

/* `word` is ignored for CTW_ENUM_INVOLUTIONS; `bound` (negative: none)
 * bounds the rank there. */
CTW_API ctw_status ctw_enumerate(const ctw_system* system, ctw_enum_target target,
                                 const char* word, long long bound,
                                 ctw_format format, char** out);

/* CTW_NOT_CONNECTED fills *out with "not connected under <regime>". */
CTW_API ctw_status ctw_connect(const ctw_system* system, const char* from,
                               const char* to, ctw_regime regime,
                               ctw_format format, char** out);

CTW_API ctw_status ctw_graph(const ctw_system* system, const char* word,
                             ctw_graph_kind kind, ctw_regime regime,
                             ctw_format format, char** out);

CTW_API void ctw_verify_options_default(ctw_verify_options* options);
/* CTW_CHECK_FAILED when the report contains a failing check; *out holds the
 * report in both cases. */
CTW_API ctw_status ctw_verify(const ctw_system* system, ctw_suite suite,
                              const ctw_verify_options* options,
                              ctw_format format, char** out);

CTW_API ctw_status ctw_classify(const ctw_system* system, ctw_format format,
                                char** out);

#ifdef __cplusplus
}
#endif

#endif
