#ifndef KLEIND_KLEIND_H
#define KLEIND_KLEIND_H

/* C interface to the kleind library. Every call returns a kd_status; on
 * failure kd_last_error() describes the problem for the calling thread.
 * Strings handed out through char** parameters are owned by the caller and
 * released with kd_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KD_API __declspec(dllexport)
#else
#define KD_API __attribute__((visibility("default")))
#endif

typedef struct kd_session kd_session;

typedef enum kd_status {
  KD_OK = 0,
  KD_ERR_DIVISION_BY_ZERO,
  KD_ERR_NON_EXACT_DIVISION,
  KD_ERR_POLE_EVALUATION,
  KD_ERR_ZERO_POLYNOMIAL,
  KD_ERR_NOT_IN_L_SHARP_M,
  KD_ERR_DEGREE_TOO_SMALL,
  KD_ERR_NON_TERMINATION,
  KD_ERR_ORACLE_INCONSISTENT,
  KD_ERR_ODD_POLYNOMIAL,
  KD_ERR_WINDOW_TOO_SMALL,
  KD_ERR_PARSE,
  KD_ERR_EXPRESSION_PARSE,
  KD_ERR_INVALID_ARGUMENT,
  KD_ERR_NULL_ARGUMENT,
  KD_ERR_INTERNAL
} kd_status;

typedef enum kd_act_method { KD_ACT_CLOSED_FORM = 0, KD_ACT_ORACLE = 1 } kd_act_method;

typedef enum kd_graph_format { KD_GRAPH_DOT = 0, KD_GRAPH_JSON = 1 } kd_graph_format;

KD_API const char* kd_version(void);
KD_API const char* kd_status_name(kd_status status);
/* Message for the last failing call on this thread; "" if none. */
KD_API const char* kd_last_error(void);
KD_API void kd_string_free(char* s);

/* q_text: ascending comma-separated rationals, e.g. "0,0,0,0,1" for t^4.
 * Fails with KD_ERR_DEGREE_TOO_SMALL when deg q < 4. */
KD_API kd_status kd_session_create(const char* q_text, kd_session** out);
KD_API void kd_session_destroy(kd_session* session);

/* Runs the verification suites (all when only is NULL) and reports
 * [{"suite","identity","pass","residual"}]. max_deg bounds the
 * preservation checks. */
KD_API kd_status kd_verify(kd_session* session, const char* only, unsigned max_deg, int* all_pass, char** report_json);

/* phi(expr) in the skew-element schema {"terms":[{"k","eps","num","den"}]}. */
KD_API kd_status kd_phi(kd_session* session, const char* expr, char** json_out);

/* PBW normal form as [{"u","v","w","coeff"}]. */
KD_API kd_status kd_normal_form(kd_session* session, const char* expr, char** json_out);

/* Nil-Hecke and flag-order identities: [{"identity","pass","residual"}]. */
KD_API kd_status kd_flag_report(kd_session* session, int* all_pass, char** json_out);

/* Action of a generator (u, v, w, half_v_plus_w) on T_order(point) as
 * [{"order","point","coeff"}]. With KD_ACT_ORACLE, generator may also be
 * any expression in u, v, w, fitted on the support of the given radius. */
KD_API kd_status kd_act(kd_session* session, const char* generator, int order, const char* point,
                        kd_act_method method, unsigned radius, char** json_out);

/* Module graph of the orbit through lambda0, cut to |point| <= window. */
KD_API kd_status kd_module_graph(kd_session* session, const char* lambda0, int window, int full,
                                 kd_graph_format format, int symbolic, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KLEIND_KLEIND_H */
