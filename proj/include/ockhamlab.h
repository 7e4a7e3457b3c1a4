#ifndef OCKHAMLAB_H_
#define OCKHAMLAB_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OCKHAMLAB_API __declspec(dllexport)
#else
#define OCKHAMLAB_API __attribute__((visibility("default")))
#endif

/* Status codes double as process exit codes for the command-line tool. */
enum {
  OCKHAMLAB_OK = 0,
  OCKHAMLAB_USAGE = 1,
  OCKHAMLAB_MALFORMED = 2,
  OCKHAMLAB_INTERNAL = 3,
  OCKHAMLAB_RESOURCE = 4
};

typedef struct ockhamlab_session ockhamlab_session;
typedef struct ockhamlab_object ockhamlab_object;

/* caps_text is "key=value,..." over structure, power, algebra, space, ground, maps; NULL for
   defaults. On failure *out is NULL and the status says why. */
OCKHAMLAB_API int ockhamlab_session_create(const char* caps_text, ockhamlab_session** out);
OCKHAMLAB_API void ockhamlab_session_destroy(ockhamlab_session* session);

/* Text produced by the last successful call, or the diagnostic of the last failed call. Owned by
   the session and valid until the next call on it. */
OCKHAMLAB_API const char* ockhamlab_output(const ockhamlab_session* session);
OCKHAMLAB_API const char* ockhamlab_error(const ockhamlab_session* session);

OCKHAMLAB_API const char* ockhamlab_status_name(int status);

/* Parses one JSON document (ockham_space, ockham_algebra, structure or relation). Axioms are not
   checked here; see ockhamlab_validate. */
OCKHAMLAB_API int ockhamlab_parse(ockhamlab_session* session, const char* json_text, ockhamlab_object** out);
OCKHAMLAB_API void ockhamlab_object_destroy(ockhamlab_object* object);
/* "ockham_space", "ockham_algebra", "structure" or "relation". */
OCKHAMLAB_API const char* ockhamlab_object_kind(const ockhamlab_object* object);

/* Axiom report as JSON; *valid receives 1 or 0 when non-NULL. Succeeds on invalid input. */
OCKHAMLAB_API int ockhamlab_validate(ockhamlab_session* session, const ockhamlab_object* object, int* valid);
/* Space to algebra or algebra to space, as a JSON document. */
OCKHAMLAB_API int ockhamlab_dual(ockhamlab_session* session, const ockhamlab_object* object);
/* Verdict JSON. With explain, adds a DOT drawing of the evidence. */
OCKHAMLAB_API int ockhamlab_classify(ockhamlab_session* session, const ockhamlab_object* object, int explain);
OCKHAMLAB_API int ockhamlab_quasiprimal(ockhamlab_session* session, const ockhamlab_object* object);
/* Equivalence classes of compatible relations of arity 1..max_arity on an algebra. */
OCKHAMLAB_API int ockhamlab_census(ockhamlab_session* session, const ockhamlab_object* object, unsigned max_arity);
/* Mutual conjunct-atomic definability of two relations on the same carrier. */
OCKHAMLAB_API int ockhamlab_equiv(ockhamlab_session* session, const ockhamlab_object* first,
                                  const ockhamlab_object* second);
/* Is sub a homomorphic image of a substructure of of? Spaces or structures. */
OCKHAMLAB_API int ockhamlab_divisor(ockhamlab_session* session, const ockhamlab_object* sub,
                                    const ockhamlab_object* of);
/* kind is C, D, Dop, Y1, Y2, Y3, Y4, Y4op, Y5, Y6 or Y6op; m is used by C, D and Dop. */
OCKHAMLAB_API int ockhamlab_catalog(ockhamlab_session* session, const char* kind, unsigned m);
/* family is crown or fence; ego is kleene, a2 or a56. */
OCKHAMLAB_API int ockhamlab_witness(ockhamlab_session* session, const char* family, const char* ego, unsigned n);
/* Structure with op u and binary relation leq, generators as carrier indices. */
OCKHAMLAB_API int ockhamlab_normalize(ockhamlab_session* session, const ockhamlab_object* object, const int* gens,
                                      size_t gen_count, unsigned m);
/* format must be "dot". */
OCKHAMLAB_API int ockhamlab_render(ockhamlab_session* session, const ockhamlab_object* object, const char* format);

#ifdef __cplusplus
}
#endif

#endif /* OCKHAMLAB_H_ */
