/* C interface to libnetmet: network distance, motifs, skeleta, isomorphism
 * and geodesics for finite weighted directed networks.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a netmet_status; on
 * failure netmet_last_error() describes the problem (thread-local, valid
 * until the next call on the same thread). Strings and index arrays handed
 * out by the library are released with netmet_string_free /
 * netmet_indices_free.
 */
#ifndef NETMET_NETMET_H
#define NETMET_NETMET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NETMET_BUILDING)
#    define NETMET_API __declspec(dllexport)
#  else
#    define NETMET_API __declspec(dllimport)
#  endif
#else
#  define NETMET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum netmet_status {
  NETMET_OK = 0,
  NETMET_ERR_INVALID_ARGUMENT = 1,
  NETMET_ERR_PARSE = 2,
  NETMET_ERR_BUDGET = 3,
  NETMET_ERR_IO = 4,
  NETMET_ERR_INTERNAL = 5
} netmet_status;

typedef struct netmet_network netmet_network;
typedef struct netmet_correspondence netmet_correspondence;

NETMET_API const char* netmet_last_error(void);
NETMET_API const char* netmet_status_name(netmet_status status);

NETMET_API void netmet_string_free(char* s);
NETMET_API void netmet_indices_free(size_t* indices);

/* ---- networks ---------------------------------------------------------- */

/* labels may be NULL for "0", "1", ...; weights is row-major n*n. */
NETMET_API netmet_status netmet_network_create(size_t n, const char* const* labels,
                                               const double* weights, netmet_network** out);
NETMET_API netmet_status netmet_network_parse(const char* text, netmet_network** out);
NETMET_API netmet_status netmet_network_read(const char* path, netmet_network** out);
NETMET_API netmet_status netmet_network_write(const netmet_network* x, const char* path);
NETMET_API netmet_status netmet_network_serialize(const netmet_network* x, char** out_text);
NETMET_API void netmet_network_free(netmet_network* x);

NETMET_API size_t netmet_network_size(const netmet_network* x);
/* NULL when i is out of range. Owned by the network. */
NETMET_API const char* netmet_network_label(const netmet_network* x, size_t i);
NETMET_API netmet_status netmet_network_weight(const netmet_network* x, size_t i, size_t j,
                                               double* out);

NETMET_API double netmet_diameter(const netmet_network* x);
NETMET_API int netmet_is_generic(const netmet_network* x);

NETMET_API netmet_status netmet_blow_up(const netmet_network* x, const size_t* multiplicities,
                                        size_t count, netmet_network** out);
/* class_of may be NULL; otherwise it receives netmet_network_size(x) entries. */
NETMET_API netmet_status netmet_skeletonize(const netmet_network* x, double tolerance,
                                            netmet_network** out_skeleton, size_t* class_of);
/* out receives n*n entries, row-major. */
NETMET_API netmet_status netmet_canonical_pseudometric(const netmet_network* x,
                                                       const size_t* subset, size_t subset_len,
                                                       double* out);
NETMET_API netmet_status netmet_quantize(const netmet_network* x, double step,
                                         netmet_network** out);
NETMET_API netmet_status netmet_extract_net(const netmet_network* x, double epsilon,
                                            netmet_network** out, double* bound);

/* ---- correspondences --------------------------------------------------- */

/* pairs holds count (i, j) index pairs, flattened. */
NETMET_API netmet_status netmet_correspondence_create(size_t n_x, size_t n_y, const size_t* pairs,
                                                      size_t count, netmet_correspondence** out);
NETMET_API void netmet_correspondence_free(netmet_correspondence* r);
NETMET_API size_t netmet_correspondence_size(const netmet_correspondence* r);
NETMET_API netmet_status netmet_correspondence_pair(const netmet_correspondence* r, size_t k,
                                                    size_t* i, size_t* j);
NETMET_API int netmet_correspondence_validate(const netmet_correspondence* r,
                                              const netmet_network* x, const netmet_network* y);
NETMET_API netmet_status netmet_distortion(const netmet_correspondence* r, const netmet_network* x,
                                           const netmet_network* y, double* out);
NETMET_API netmet_status netmet_compose(const netmet_correspondence* r,
                                        const netmet_correspondence* s,
                                        netmet_correspondence** out);

/* ---- distance ---------------------------------------------------------- */

/* threads: 0 = hardware concurrency. optimal may be NULL. */
NETMET_API netmet_status netmet_exact_distance(const netmet_network* x, const netmet_network* y,
                                               size_t node_budget, unsigned threads, double* value,
                                               netmet_correspondence** optimal);
NETMET_API netmet_status netmet_lower_bound_diameter(const netmet_network* x,
                                                     const netmet_network* y, double* out);
NETMET_API netmet_status netmet_lower_bound_motif(const netmet_network* x, const netmet_network* y,
                                                  size_t n, size_t tuple_budget, double* out);
NETMET_API netmet_status netmet_upper_bound_product(const netmet_network* x,
                                                    const netmet_network* y, double* out);

typedef struct netmet_report_options {
  size_t exact_budget;
  size_t motif_max_order;
  size_t motif_budget;
  unsigned threads;
} netmet_report_options;

NETMET_API void netmet_report_options_init(netmet_report_options* options);
/* Flat key = value report text; see README for the schema. */
NETMET_API netmet_status netmet_distance_report(const netmet_network* x, const netmet_network* y,
                                                const netmet_report_options* options,
                                                char** out_text);

/* ---- motifs ------------------------------------------------------------ */

NETMET_API netmet_status netmet_motif_set_text(const netmet_network* x, size_t n,
                                               size_t tuple_budget, char** out_text);
NETMET_API netmet_status netmet_motif_distance(const netmet_network* x, const netmet_network* y,
                                               size_t n, size_t tuple_budget, double* out);
/* *found = 1 and forward (n entries) filled when a bijection is recovered. */
NETMET_API netmet_status netmet_reconstruct_generic(const netmet_network* x,
                                                    const netmet_network* y, int* found,
                                                    size_t* forward);

/* ---- isomorphism ------------------------------------------------------- */

/* forward may be NULL; otherwise netmet_network_size(x) entries. */
NETMET_API netmet_status netmet_strong_isomorphic(const netmet_network* x, const netmet_network* y,
                                                  double epsilon, int* isomorphic,
                                                  size_t* forward);
/* Skeleton handles and map are optional outputs (pass NULL to skip). The map
 * has netmet_network_size(*skeleton_x) entries and is set only when
 * isomorphic. */
NETMET_API netmet_status netmet_weak_isomorphic(const netmet_network* x, const netmet_network* y,
                                                double epsilon, int* isomorphic,
                                                netmet_network** skeleton_x,
                                                netmet_network** skeleton_y,
                                                size_t** skeleton_map);
/* Flattened count * n forward maps. */
NETMET_API netmet_status netmet_automorphisms(const netmet_network* x, size_t size_budget,
                                              size_t** maps, size_t* count);

/* ---- geodesics --------------------------------------------------------- */

NETMET_API netmet_status netmet_geodesic_point(const netmet_network* x, const netmet_network* y,
                                               const netmet_correspondence* r, double t,
                                               netmet_network** out);
/* out receives count handles. */
NETMET_API netmet_status netmet_sample_geodesic(const netmet_network* x, const netmet_network* y,
                                                const double* ts, size_t count,
                                                size_t node_budget, unsigned threads,
                                                netmet_network** out);
NETMET_API netmet_status netmet_midpoint(const netmet_network* x, const netmet_network* y,
                                         size_t node_budget, unsigned threads,
                                         netmet_network** out);

/* ---- generators -------------------------------------------------------- */

NETMET_API netmet_status netmet_directed_circle(size_t n, netmet_network** out);
NETMET_API netmet_status netmet_directed_circle_reversible(size_t n, double rho,
                                                           netmet_network** out);
NETMET_API netmet_status netmet_constant_network(size_t n, double alpha, netmet_network** out);
NETMET_API netmet_status netmet_random_network(size_t n, double low, double high, uint64_t seed,
                                               netmet_network** out);

#ifdef __cplusplus
}
#endif

#endif /* NETMET_NETMET_H */
