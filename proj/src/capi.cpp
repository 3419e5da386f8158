#include "kleind/kleind.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "kleind/error.hpp"
#include "kleind/flag_order.hpp"
#include "kleind/hc_modules.hpp"
#include "kleind/json_io.hpp"
#include "kleind/verify.hpp"

struct kd_session {
  kleind::Polynomial q;
  kleind::Embedding embedding;
};

namespace {

thread_local std::string last_error;

kd_status status_of(kleind::ErrorCode code) {
  using kleind::ErrorCode;
  switch (code) {
    case ErrorCode::kDivisionByZero: return KD_ERR_DIVISION_BY_ZERO;
    case ErrorCode::kNonExactDivision: return KD_ERR_NON_EXACT_DIVISION;
    case ErrorCode::kPoleEvaluation: return KD_ERR_POLE_EVALUATION;
    case ErrorCode::kZeroPolynomial: return KD_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::kNotInLSharpM: return KD_ERR_NOT_IN_L_SHARP_M;
    case ErrorCode::kDegreeTooSmall: return KD_ERR_DEGREE_TOO_SMALL;
    case ErrorCode::kNonTermination: return KD_ERR_NON_TERMINATION;
    case ErrorCode::kOracleInconsistent: return KD_ERR_ORACLE_INCONSISTENT;
    case ErrorCode::kOddPolynomial: return KD_ERR_ODD_POLYNOMIAL;
    case ErrorCode::kWindowTooSmall: return KD_ERR_WINDOW_TOO_SMALL;
    case ErrorCode::kParseError: return KD_ERR_PARSE;
    case ErrorCode::kExpressionParseError: return KD_ERR_EXPRESSION_PARSE;
    case ErrorCode::kInvalidArgument: return KD_ERR_INVALID_ARGUMENT;
  }
  return KD_ERR_INTERNAL;
}

kd_status fail(kd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, translating exceptions into status codes.
template <typename F>
kd_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const kleind::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(KD_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KD_ERR_INTERNAL, e.what());
  }
}

kd_status emit(const std::string& text, char** out) {
  *out = copy_out(text);
  return *out == nullptr ? fail(KD_ERR_INTERNAL, "out of memory") : KD_OK;
}

}  // namespace

extern "C" {

const char* kd_version(void) { return "0.1.0"; }

const char* kd_status_name(kd_status status) {
  switch (status) {
    case KD_OK: return "Ok";
    case KD_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case KD_ERR_NON_EXACT_DIVISION: return "NonExactDivision";
    case KD_ERR_POLE_EVALUATION: return "PoleEvaluation";
    case KD_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case KD_ERR_NOT_IN_L_SHARP_M: return "NotInLSharpM";
    case KD_ERR_DEGREE_TOO_SMALL: return "DegreeTooSmall";
    case KD_ERR_NON_TERMINATION: return "NonTermination";
    case KD_ERR_ORACLE_INCONSISTENT: return "OracleInconsistent";
    case KD_ERR_ODD_POLYNOMIAL: return "OddPolynomial";
    case KD_ERR_WINDOW_TOO_SMALL: return "WindowTooSmall";
    case KD_ERR_PARSE: return "ParseError";
    case KD_ERR_EXPRESSION_PARSE: return "ExpressionParseError";
    case KD_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case KD_ERR_NULL_ARGUMENT: return "NullArgument";
    case KD_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* kd_last_error(void) { return last_error.c_str(); }

void kd_string_free(char* s) { std::free(s); }

kd_status kd_session_create(const char* q_text, kd_session** out) {
  if (q_text == nullptr || out == nullptr) return fail(KD_ERR_NULL_ARGUMENT, "q_text and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    kleind::Polynomial q = kleind::Polynomial::parse(q_text);
    kleind::Embedding embedding(kleind::params_from_q(q));
    *out = new kd_session{std::move(q), std::move(embedding)};
    return KD_OK;
  });
}

void kd_session_destroy(kd_session* session) { delete session; }

kd_status kd_verify(kd_session* session, const char* only, unsigned max_deg, int* all_pass, char** report_json) {
  if (session == nullptr || all_pass == nullptr || report_json == nullptr) {
    return fail(KD_ERR_NULL_ARGUMENT, "session, all_pass and report_json must be non-null");
  }
  return guarded([&] {
    kleind::VerifyOptions options;
    options.max_deg = max_deg;
    std::optional<std::string_view> suite;
    if (only != nullptr) suite = only;
    const auto results = kleind::verify_all(session->q, options, suite);
    *all_pass = kleind::all_pass(results) ? 1 : 0;
    return emit(kleind::verify_report(results).dump(2), report_json);
  });
}

kd_status kd_phi(kd_session* session, const char* expr, char** json_out) {
  if (session == nullptr || expr == nullptr || json_out == nullptr) {
    return fail(KD_ERR_NULL_ARGUMENT, "session, expr and json_out must be non-null");
  }
  return guarded([&] {
    const auto X = kleind::FreeExpression::parse(expr);
    return emit(nlohmann::json(session->embedding.phi(X)).dump(), json_out);
  });
}

kd_status kd_normal_form(kd_session* session, const char* expr, char** json_out) {
  if (session == nullptr || expr == nullptr || json_out == nullptr) {
    return fail(KD_ERR_NULL_ARGUMENT, "session, expr and json_out must be non-null");
  }
  return guarded([&] {
    const auto X = kleind::FreeExpression::parse(expr);
    return emit(nlohmann::json(kleind::pbw_normal_form(X, session->embedding.params())).dump(), json_out);
  });
}

kd_status kd_flag_report(kd_session* session, int* all_pass, char** json_out) {
  if (session == nullptr || all_pass == nullptr || json_out == nullptr) {
    return fail(KD_ERR_NULL_ARGUMENT, "session, all_pass and json_out must be non-null");
  }
  return guarded([&] {
    const auto results = kleind::verify_identities(session->q);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    *all_pass = ok ? 1 : 0;
    return emit(kleind::identity_report(results).dump(2), json_out);
  });
}

kd_status kd_act(kd_session* session, const char* generator, int order, const char* point, kd_act_method method,
                 unsigned radius, char** json_out) {
  if (session == nullptr || generator == nullptr || point == nullptr || json_out == nullptr) {
    return fail(KD_ERR_NULL_ARGUMENT, "session, generator, point and json_out must be non-null");
  }
  return guarded([&] {
    if (order != 0 && order != 1) return fail(KD_ERR_INVALID_ARGUMENT, "order must be 0 or 1");
    const kleind::Tableau t{order, kleind::Rational::parse(point)};
    const auto g = kleind::hc_generator_from_text(generator);
    kleind::Distribution result;
    if (method == KD_ACT_CLOSED_FORM) {
      if (!g) return fail(KD_ERR_INVALID_ARGUMENT, std::string("closed form needs u, v, w or half_v_plus_w, got ") + generator);
      result = kleind::act_closed_form(*g, t, session->embedding.params());
    } else if (method == KD_ACT_ORACLE) {
      const kleind::FreeExpression X = g ? kleind::generator_expression(*g) : kleind::FreeExpression::parse(generator);
      result = kleind::DualActionOracle(session->embedding).act(X, t, radius == 0 ? 1 : radius);
    } else {
      return fail(KD_ERR_INVALID_ARGUMENT, "unknown action method");
    }
    return emit(nlohmann::json(result).dump(), json_out);
  });
}

kd_status kd_module_graph(kd_session* session, const char* lambda0, int window, int full, kd_graph_format format,
                          int symbolic, char** out) {
  if (session == nullptr || lambda0 == nullptr || out == nullptr) {
    return fail(KD_ERR_NULL_ARGUMENT, "session, lambda0 and out must be non-null");
  }
  return guarded([&] {
    const auto graph = kleind::module_graph(session->embedding, kleind::Rational::parse(lambda0), window, full != 0);
    const auto closures = kleind::submodule_closures(graph);
    if (format == KD_GRAPH_DOT) return emit(kleind::to_dot(graph, closures, symbolic != 0), out);
    if (format == KD_GRAPH_JSON) return emit(kleind::graph_to_json(graph, closures).dump(2), out);
    return fail(KD_ERR_INVALID_ARGUMENT, "unknown graph format");
  });
}

}  // extern "C"
