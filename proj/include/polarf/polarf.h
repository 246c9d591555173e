// Copyright 2026 The polarf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef POLARF_H_
#define POLARF_H_

/* C interface to the polarf typechecker. Results are opaque handles owned
 * by the caller and released with polarf_result_free. Strings returned by
 * accessors live as long as the result they came from. */

#include <stddef.h>

#if defined(_WIN32)
#define POLARF_API __declspec(dllexport)
#else
#define POLARF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polarf_status {
  POLARF_ACCEPTED = 0,
  POLARF_REJECTED = 1,
  POLARF_MALFORMED = 2,
  POLARF_INTERNAL_ERROR = 3
} polarf_status;

typedef enum polarf_code {
  POLARF_OK = 0,
  POLARF_EINVAL = -1, /* null or out-of-range argument */
  POLARF_ENOMEM = -2
} polarf_code;

#define POLARF_FLAG_TRACE 1u  /* record the derivation */
#define POLARF_FLAG_VERIFY 2u /* check postconditions after every judgment */

typedef struct polarf_result polarf_result;

POLARF_API const char *polarf_version(void);

/* Checks a program. `file` names the source in diagnostics and may be
 * null. On success *out receives a new result. */
POLARF_API int polarf_check(const char *source, size_t length, const char *file,
                            unsigned flags, polarf_result **out);

/* Checks a file of `A <: B` judgments. */
POLARF_API int polarf_subtype_file(const char *source, size_t length,
                                   const char *file, unsigned flags,
                                   polarf_result **out);

/* Checks embedded corpus fixture `index`. */
POLARF_API int polarf_corpus_check(size_t index, unsigned flags,
                                   polarf_result **out);

POLARF_API polarf_status polarf_result_status(const polarf_result *r);
/* Process exit code for the result: 0, 1, 2 or 3. */
POLARF_API int polarf_result_exit_code(const polarf_result *r);
/* Accepted programs: the synthesized type. Otherwise "". */
POLARF_API const char *polarf_result_type(const polarf_result *r);
/* Human-readable report: "OK : <type>", a diagnostic, or sub verdicts. */
POLARF_API const char *polarf_result_text(const polarf_result *r);
/* Indented derivation; "" unless traced. */
POLARF_API const char *polarf_result_trace(const polarf_result *r);
/* JSON record {status, type, error, trace}. "" for subtype files. */
POLARF_API const char *polarf_result_json(const polarf_result *r);
/* Error kind ("parse", "subtype-failure", ...) or "" when none. */
POLARF_API const char *polarf_result_error_kind(const polarf_result *r);
/* Corpus fixtures only: 1 when the verdict matches the expectation. */
POLARF_API int polarf_result_corpus_pass(const polarf_result *r);
POLARF_API void polarf_result_free(polarf_result *r);

POLARF_API size_t polarf_corpus_count(void);
/* Name, row label and class ("ok", "ann", "reject", "stripped") of fixture
 * `index`; returns POLARF_EINVAL when out of range. */
POLARF_API int polarf_corpus_entry(size_t index, const char **name,
                                   const char **row, const char **row_class);
/* The full verdict table with a summary line. Caller frees with
 * polarf_string_free. *all_pass is set when every fixture matches. */
POLARF_API int polarf_corpus_report(unsigned flags, char **table, int *all_pass);
POLARF_API void polarf_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* POLARF_H_ */
