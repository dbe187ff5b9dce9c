#ifndef COWORDISM_H
#define COWORDISM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every call.
typedef enum CwStatus {
  CW_STATUS_OK = 0,
  // A word or lexicon entry was not found.
  CW_STATUS_NOT_FOUND = 1,
  // The input text or arguments were rejected.
  CW_STATUS_INVALID_INPUT = 2,
  // A required pointer was null.
  CW_STATUS_NULL_POINTER = 3,
  // A string argument was not UTF-8.
  CW_STATUS_INVALID_UTF8 = 4,
  // The library panicked; the handle should not be used again.
  CW_STATUS_INTERNAL = 5,
} CwStatus;

// A parsed and validated grammar of any supported kind.
typedef struct CwGrammar CwGrammar;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failed call on this thread, or an empty string.
// Valid until the next call on the same thread.
const char *cw_last_error(void);

// Parses and validates grammar text. On success `*out` owns a new handle.
//
// # Safety
// `source` must be a NUL-terminated string and `out` a valid pointer.
enum CwStatus cw_grammar_parse(const char *source, struct CwGrammar **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from [`cw_grammar_parse`] and not be used afterwards.
void cw_grammar_free(struct CwGrammar *g);

// `"llg"`, `"mcfg"`, `"cowcfg"` or `"acg"`; a static string.
//
// # Safety
// `g` must be a live handle or null.
const char *cw_grammar_kind(const struct CwGrammar *g);

// The generated words, one per line, an empty line for the empty word.
// MCFGs and cowordism grammars are enumerated up to `max_len` (8 when 0);
// the others are searched with `max_axioms` lexicon uses and, when
// `max_len` is non-zero, words no longer than `max_len`.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum CwStatus cw_generate(const struct CwGrammar *g, size_t max_axioms, size_t max_len, char **out);

// Whether `word` (space-separated symbols) is generated within
// `max_axioms` lexicon uses: [`CwStatus::Ok`] if so, otherwise
// [`CwStatus::NotFound`]. `*complete` (if not null) is set to 1 when a
// negative answer is exact.
//
// # Safety
// `g` must be a live handle, `word` NUL-terminated, `complete` valid or null.
enum CwStatus cw_member(const struct CwGrammar *g,
                        const char *word,
                        size_t max_axioms,
                        int *complete);

// Graphviz text for the lexicon entry named `entry`.
//
// # Safety
// `g` must be a live handle, `entry` NUL-terminated and `out` valid.
enum CwStatus cw_render_dot(const struct CwGrammar *g, const char *entry, int vertical, char **out);

// The grammar translated to `kind` (`"llg"`, `"mcfg"`, `"cowcfg"`), as
// grammar text.
//
// # Safety
// `g` must be a live handle, `kind` NUL-terminated and `out` valid.
enum CwStatus cw_convert(const struct CwGrammar *g, const char *kind, char **out);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void cw_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COWORDISM_H */
