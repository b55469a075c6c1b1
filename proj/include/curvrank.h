#ifndef CURVRANK_H
#define CURVRANK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* C interface of the curvature rank library. Every operation consumes and
 * produces JSON payload strings (schema_version 1, rationals as "n/d"
 * strings) and returns a status code. Output strings are heap-allocated,
 * owned by the caller, and released with crk_free_string. A context is not
 * safe to share between threads; create one per thread instead. */

typedef struct crk_ctx crk_ctx;

/* Status codes. Non-ok calls leave a message on the context. */
#define CRK_OK 0
#define CRK_INVALID 2       /* a checked identity or verification failed */
#define CRK_INPUT_ERROR 3   /* malformed input or violated precondition */
#define CRK_SEARCH_FAILED 4 /* degenerate geometry or exhausted search */

crk_ctx* crk_ctx_new(void);
void crk_ctx_free(crk_ctx* ctx);

/* Message for the last failing call on this context; empty when none. The
 * pointer stays valid until the next call on the same context. */
const char* crk_last_error(const crk_ctx* ctx);

void crk_free_string(char* s);

/* Checks the three curvature identities of a tensor payload. Writes the
 * per-identity report even when it returns CRK_INVALID. */
int crk_validate(crk_ctx* ctx, const char* tensor_json, char** out_json);

/* Curvature operator of one seeded spacelike plane: plane, Gram determinant,
 * matrix, and rank. With timelike != 0 it instead profiles the ranks of
 * `samples` seeded non-degenerate non-spacelike planes. */
int crk_plane_op(crk_ctx* ctx, const char* tensor_json, uint64_t seed, long bound, int timelike,
                 size_t samples, char** out_json);

/* Jordan class of the operator of one seeded spacelike plane. lambda_sq is
 * the squared eigenvalue magnitude of the normalized operator and appears
 * for the eigenvalue-pair classes only. */
int crk_jordan(crk_ctx* ctx, const char* tensor_json, uint64_t seed, long bound, char** out_json);

/* Admissibility, self-adjointness, and exact constant-type class of an
 * endomorphism payload. The class is null unless the map is self-adjoint and
 * admissible; a note marks spaces below the five-dimensional spacelike part
 * the classification theory assumes. */
int crk_classify(crk_ctx* ctx, const char* map_json, char** out_json);

/* Exact constant-type class next to a sampled plane-type survey of the
 * curvature of the same map, with an agreement flag. Sampling that misses a
 * measure-zero witness set reports constant; the flag records exactly that. */
int crk_ip_check(crk_ctx* ctx, const char* map_json, size_t samples, uint64_t seed,
                 char** out_json);

/* Reconstructs the generator of a skew-map payload, either a single
 * endomorphism up to sign and positive scale or an alternating-map/vector
 * pair, verified exactly before it is written. */
int crk_decompose(crk_ctx* ctx, const char* skew_json, uint64_t seed, char** out_json);

/* Factors a tensor payload as the curvature of a graph hypersurface, checks
 * the realized curvature exactly at the origin and by rank sampling near it,
 * and writes the immersion data. */
int crk_realize(crk_ctx* ctx, const char* tensor_json, size_t point_samples, uint64_t seed,
                char** out_json);

/* Built-in catalog families "8.1", "8.2", "8.3" at timelike dimension p.
 * emit selects the payload: "payload" for the native form, "skew" for the
 * induced skew map, "tensor" for the induced curvature tensor. */
int crk_fixture(crk_ctx* ctx, const char* name, size_t p, const char* emit, char** out_json);

/* Seeded self-adjoint admissible endomorphism of the standard (p, q) space
 * with a kernel of the requested dimension. emit as in crk_fixture. */
int crk_gen_phi(crk_ctx* ctx, size_t p, size_t q, size_t kernel_dim, uint64_t seed,
                const char* emit, char** out_json);

/* Seeded integer-entry spacelike plane of the standard (p, q) space. */
int crk_gen_plane(crk_ctx* ctx, size_t p, size_t q, uint64_t seed, long bound, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
