#ifndef COMMOP_COMMOP_H
#define COMMOP_COMMOP_H

/* C interface to libcommop: differential operators with polynomial
 * coefficients, commutativity chains and spectral curves.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns a commop_status; on failure commop_last_error()
 * describes it (per thread). Strings returned through char** are owned by
 * the caller and released with commop_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(COMMOP_BUILDING_LIBRARY)
#    define COMMOP_API __declspec(dllexport)
#  else
#    define COMMOP_API __declspec(dllimport)
#  endif
#else
#  define COMMOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum commop_status {
  COMMOP_OK = 0,
  COMMOP_ERR_PARSE = 1,
  COMMOP_ERR_INVALID_ARGUMENT = 2,
  COMMOP_ERR_DIVISION_BY_ZERO = 3,
  COMMOP_ERR_UNBOUND_PARAMETER = 4,
  COMMOP_ERR_X_DEPENDENCE = 5,
  COMMOP_ERR_NONLINEAR = 6,
  COMMOP_ERR_INFEASIBLE = 7,
  COMMOP_ERR_NULL_ARGUMENT = 8,
  COMMOP_ERR_INTERNAL = 9
} commop_status;

typedef enum commop_solve_status {
  COMMOP_SOLVE_UNIQUE = 0,
  COMMOP_SOLVE_UNDERDETERMINED = 1,
  COMMOP_SOLVE_INFEASIBLE = 2
} commop_solve_status;

typedef struct commop_context commop_context; /* declared parameters */
typedef struct commop_op commop_op;           /* differential operator */
typedef struct commop_chain commop_chain;     /* solved chain a_1..a_{m+1} */
typedef struct commop_curve commop_curve;     /* w^2 = F(z) */

COMMOP_API const char* commop_version(void);
COMMOP_API const char* commop_status_name(commop_status status);
/* Message of the last failed call on this thread; "" if none. */
COMMOP_API const char* commop_last_error(void);
COMMOP_API void commop_string_free(char* s);

/* params: names separated by commas or spaces, e.g. "A6, A2". */
COMMOP_API commop_status commop_context_new(const char* params, commop_context** out);
COMMOP_API void commop_context_free(commop_context* ctx);
COMMOP_API size_t commop_context_param_count(const commop_context* ctx);

/* Operators such as "(D^2 + x^3 + alpha)^2 + 2*x". */
COMMOP_API commop_status commop_op_parse(const commop_context* ctx, const char* text,
                                         commop_op** out);
COMMOP_API commop_status commop_op_compose(const commop_op* a, const commop_op* b,
                                           commop_op** out);
COMMOP_API commop_status commop_op_commutator(const commop_op* a, const commop_op* b,
                                              commop_op** out);
COMMOP_API commop_status commop_op_sub(const commop_op* a, const commop_op* b,
                                       commop_op** out);
COMMOP_API commop_status commop_op_pow(const commop_op* a, unsigned k, commop_op** out);
/* Order of the operator; -1 for the zero operator. */
COMMOP_API commop_status commop_op_order(const commop_op* a, int* order);
COMMOP_API commop_status commop_op_render(const commop_op* a, char** text);
COMMOP_API void commop_op_free(commop_op* a);

/* Chain for L = (D^2 + V)^2 + W at target degree m, with constants solved. */
COMMOP_API commop_status commop_chain_build(const commop_context* ctx, const char* V,
                                            const char* W, int m, commop_chain** out);
COMMOP_API commop_status commop_chain_status(const commop_chain* chain,
                                             commop_solve_status* status);
COMMOP_API commop_status commop_chain_free_count(const commop_chain* chain, size_t* count);
/* a_1 .. a_{m+1} one per line. */
COMMOP_API commop_status commop_chain_render(const commop_chain* chain, char** text);
COMMOP_API void commop_chain_free(commop_chain* chain);

/* Spectral curve of a feasible chain; free constants are set to 0. */
COMMOP_API commop_status commop_curve_from_chain(const commop_chain* chain, commop_curve** out);
COMMOP_API commop_status commop_curve_degree(const commop_curve* curve, int* degree);
COMMOP_API commop_status commop_curve_render(const commop_curve* curve, char** text);
/* Coefficient of z^power as text. */
COMMOP_API commop_status commop_curve_coefficient(const commop_curve* curve, int power,
                                                  char** text);
/* bindings: "A6=1, A2=-1/2"; every parameter of F must be bound. */
COMMOP_API commop_status commop_curve_is_singular(const commop_curve* curve,
                                                  const char* bindings, int* singular);
COMMOP_API void commop_curve_free(commop_curve* curve);

/* Runs a JSON job (see the README); *report is a JSON document and
 * *exit_status is 0 (ok), 1 (refuted) or 2 (input error). */
COMMOP_API commop_status commop_run_job(const char* command, const char* document,
                                        char** report, int* exit_status);

#ifdef __cplusplus
}
#endif

#endif /* COMMOP_COMMOP_H */
