/* mldp — exact bi-objective route evaluation and solving behind a C API.
 *
 * All functions are thread-safe as long as each handle is used from one
 * thread at a time; handles are immutable after creation except for being
 * freed. Functions returning mldp_status set a thread-local error message
 * retrievable with mldp_last_error() on failure.
 */

#ifndef MLDP_H
#define MLDP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MLDP_API __declspec(dllexport)
#else
#define MLDP_API __attribute__((visibility("default")))
#endif

typedef enum mldp_status {
  MLDP_OK = 0,
  MLDP_ERR_INVALID_ARGUMENT = 1,
  MLDP_ERR_PARSE = 2,
  MLDP_ERR_NOT_PERMUTATION = 3,
  MLDP_ERR_TOO_LARGE = 4,
  MLDP_ERR_OVERFLOW = 5,
  MLDP_ERR_NOMEM = 6,
  MLDP_ERR_INTERNAL = 7
} mldp_status;

/* An instance: depot + n clients, (n+1)x(n+1) travel-time matrix with
 * service times on the diagonal. */
typedef struct mldp_instance mldp_instance;

/* A decision-TSP input: m x m zero-diagonal cost matrix plus tour budget. */
typedef struct mldp_tsp mldp_tsp;

/* A Pareto front: nondominated (travel, latency) pairs with witness
 * routes, sorted by ascending travel. */
typedef struct mldp_front mldp_front;

MLDP_API const char* mldp_version(void);
MLDP_API const char* mldp_status_name(mldp_status status);

/* Message for the most recent failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the next mldp call on
 * the same thread. */
MLDP_API const char* mldp_last_error(void);

/* ---- instances ------------------------------------------------------- */

/* `times` is row-major with (clients+1)*(clients+1) entries. Entries must
 * be non-negative, times[0] (= t[0][0]) must be 0, and values must be
 * small enough that no objective can overflow int64. */
MLDP_API mldp_status mldp_instance_create(int32_t clients, const int64_t* times,
                                          mldp_instance** out);
MLDP_API void mldp_instance_free(mldp_instance* inst);
MLDP_API int32_t mldp_instance_clients(const mldp_instance* inst);
MLDP_API mldp_status mldp_instance_time(const mldp_instance* inst, int32_t from,
                                        int32_t to, int64_t* out);
/* Per-arc cost c(i, j) = t(i, i) + t(i, j). */
MLDP_API mldp_status mldp_instance_cost(const mldp_instance* inst, int32_t from,
                                        int32_t to, int64_t* out);

/* Native text format. Rendered strings are freed with mldp_string_free. */
MLDP_API mldp_status mldp_instance_parse(const char* text, mldp_instance** out);
MLDP_API mldp_status mldp_instance_render(const mldp_instance* inst, char** out);

/* Decision-instance text format (instance plus theta/omega bounds). */
MLDP_API mldp_status mldp_decision_parse(const char* text, mldp_instance** out,
                                         int64_t* theta, int64_t* omega);
MLDP_API mldp_status mldp_decision_render(const mldp_instance* inst, int64_t theta,
                                          int64_t omega, char** out);

MLDP_API void mldp_string_free(char* text);

typedef enum mldp_family {
  MLDP_FAMILY_EUCLIDEAN = 0,
  MLDP_FAMILY_ASYMMETRIC_UNIFORM = 1,
  MLDP_FAMILY_CONSTANT_TRAVEL = 2,
  MLDP_FAMILY_CONSTANT_SERVICE = 3
} mldp_family;

typedef struct mldp_generator_spec {
  int32_t family; /* mldp_family */
  int32_t clients;
  uint64_t seed;
  int64_t travel_min;
  int64_t travel_max;
  int64_t service_min;
  int64_t service_max;
} mldp_generator_spec;

/* Deterministic: equal specs yield byte-identical instances. */
MLDP_API mldp_status mldp_instance_generate(const mldp_generator_spec* spec,
                                            mldp_instance** out);

/* ---- objectives ------------------------------------------------------ */

/* `route` holds route_len distinct clients in visiting order (the depot is
 * implicit at both ends). Fails with MLDP_ERR_NOT_PERMUTATION unless it is
 * a permutation of {1..n}. */
MLDP_API mldp_status mldp_evaluate(const mldp_instance* inst, const int32_t* route,
                                   int32_t route_len, int64_t* travel,
                                   int64_t* latency);

/* Same values computed by the accumulator walk instead of the
 * position-weighted sum; exposed for cross-checking. */
MLDP_API mldp_status mldp_simulate_timeline(const mldp_instance* inst,
                                            const int32_t* route, int32_t route_len,
                                            int64_t* travel, int64_t* latency);

/* ---- decision verification ------------------------------------------ */

typedef enum mldp_verdict_reason {
  MLDP_VERDICT_OK = 0,
  MLDP_VERDICT_NOT_PERMUTATION = 1,
  MLDP_VERDICT_TRAVEL_EXCEEDS_THETA = 2,
  MLDP_VERDICT_LATENCY_EXCEEDS_OMEGA = 3
} mldp_verdict_reason;

typedef struct mldp_verdict {
  int32_t feasible;
  int32_t reason; /* mldp_verdict_reason */
  /* Computed pair; valid iff has_observed (the candidate was a
   * permutation). */
  int32_t has_observed;
  int64_t travel;
  int64_t latency;
} mldp_verdict;

MLDP_API const char* mldp_verdict_reason_name(mldp_verdict_reason reason);

/* Total certificate checker: any candidate sequence is accepted and judged,
 * never rejected with an error. Bounds are inclusive. */
MLDP_API mldp_status mldp_verify(const mldp_instance* inst, int64_t theta,
                                 int64_t omega, const int32_t* candidate,
                                 int32_t candidate_len, mldp_verdict* out);

/* ---- TSP reduction --------------------------------------------------- */

/* `costs` is row-major m x m, zero diagonal, non-negative. */
MLDP_API mldp_status mldp_tsp_create(int32_t cities, const int64_t* costs,
                                     int64_t budget, mldp_tsp** out);
/* Accepts the native "tspd" matrix format or a node-coordinate TSP file
 * (2D Euclidean, distances rounded half-to-even). */
MLDP_API mldp_status mldp_tsp_parse(const char* text, int64_t budget,
                                    mldp_tsp** out);
MLDP_API mldp_status mldp_tsp_render(const mldp_tsp* tsp, char** out);
MLDP_API void mldp_tsp_free(mldp_tsp* tsp);
MLDP_API int32_t mldp_tsp_cities(const mldp_tsp* tsp);
MLDP_API mldp_status mldp_tsp_cost(const mldp_tsp* tsp, int32_t from, int32_t to,
                                   int64_t* out);
MLDP_API int64_t mldp_tsp_budget(const mldp_tsp* tsp);

/* Worst-case latency over any tour: row maxima sorted descending, summed as
 * cumulative sums. */
MLDP_API mldp_status mldp_latency_bound(const mldp_tsp* tsp, int64_t* omega);

/* City 0 becomes the depot; travel times are the TSP costs (all service
 * times zero), *theta the budget, *omega the worst-case latency bound. The
 * reduced decision instance answers "yes" iff the TSP input does. */
MLDP_API mldp_status mldp_reduce(const mldp_tsp* tsp, mldp_instance** out,
                                 int64_t* theta, int64_t* omega);

/* ---- solving --------------------------------------------------------- */

typedef enum mldp_method {
  MLDP_METHOD_BRUTE_FORCE = 0,
  MLDP_METHOD_DP = 1
} mldp_method;

typedef struct mldp_solve_options {
  int32_t method;   /* mldp_method */
  int32_t jobs;     /* >= 1; output is identical for every value */
  int32_t brute_force_limit;
  int32_t dp_limit;
  uint64_t label_cap; /* 0 = exact */
} mldp_solve_options;

MLDP_API void mldp_solve_options_init(mldp_solve_options* opts);

typedef struct mldp_solve_stats {
  uint64_t routes_enumerated;
  uint64_t labels_generated;
  uint64_t labels_kept;
} mldp_solve_stats;

/* Computes the Pareto front. `opts` may be NULL for defaults. */
MLDP_API mldp_status mldp_solve(const mldp_instance* inst,
                                const mldp_solve_options* opts, mldp_front** out);
MLDP_API void mldp_front_free(mldp_front* front);
MLDP_API int32_t mldp_front_size(const mldp_front* front);
MLDP_API int32_t mldp_front_clients(const mldp_front* front);
MLDP_API mldp_status mldp_front_point(const mldp_front* front, int32_t index,
                                      int64_t* travel, int64_t* latency);
/* Writes the witness route (front_clients entries) into `route`. */
MLDP_API mldp_status mldp_front_witness(const mldp_front* front, int32_t index,
                                        int32_t* route, int32_t capacity);
MLDP_API mldp_status mldp_front_stats(const mldp_front* front,
                                      mldp_solve_stats* out);

/* Decision answer via the front. *feasible is 1/0. When feasible and
 * `witness` is non-NULL with capacity >= n, a witness route satisfying both
 * bounds is written. */
MLDP_API mldp_status mldp_decide(const mldp_instance* inst, int64_t theta,
                                 int64_t omega, const mldp_solve_options* opts,
                                 int32_t* feasible, int32_t* witness,
                                 int32_t capacity);

/* Minimizes (num/den)*travel + (1 - num/den)*latency by seeded local
 * search; 0 <= num <= den. Writes the route (n entries) and its exact
 * objective pair. */
MLDP_API mldp_status mldp_local_search(const mldp_instance* inst, int64_t weight_num,
                                       int64_t weight_den, uint64_t seed,
                                       int32_t* route, int32_t capacity,
                                       int64_t* travel, int64_t* latency);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MLDP_H */
