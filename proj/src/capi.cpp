#include "cka.h"

#include "decision.hpp"
#include "json_io.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct cka_session {
  cka::Alphabet alphabet;
  std::string last_error;
};

struct cka_expr {
  const cka_session *owner;
  cka::ExprPtr expr;
};

struct cka_semilinear {
  const cka_session *owner;
  cka::SemilinearSet set;
};

namespace {

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cka_status classify(const std::exception &e) {
  if (dynamic_cast<const cka::ParseError *>(&e))
    return CKA_ERR_PARSE;
  if (dynamic_cast<const cka::UsageError *>(&e))
    return CKA_ERR_USAGE;
  if (dynamic_cast<const nlohmann::json::exception *>(&e))
    return CKA_ERR_PARSE;
  return CKA_ERR_INTERNAL;
}

template <typename Fn> cka_status guarded(cka_session *session, Fn &&fn) {
  if (!session)
    return CKA_ERR_USAGE;
  session->last_error.clear();
  try {
    fn();
    return CKA_OK;
  } catch (const std::exception &e) {
    session->last_error = e.what();
    return classify(e);
  }
}

bool check_handle(cka_session *session, const void *handle,
                  const cka_session *owner) {
  if (!handle) {
    session->last_error = "null handle";
    return false;
  }
  if (owner != session) {
    session->last_error = "handle belongs to a different session";
    return false;
  }
  return true;
}

} // namespace

cka_status cka_session_create(const char *letters, cka_session **out) {
  if (!letters || !out)
    return CKA_ERR_USAGE;
  *out = nullptr;
  try {
    *out = new cka_session{cka::Alphabet::from_csv(letters), {}};
    return CKA_OK;
  } catch (const std::exception &) {
    return CKA_ERR_USAGE;
  }
}

void cka_session_destroy(cka_session *session) { delete session; }

const char *cka_session_error(const cka_session *session) {
  return session ? session->last_error.c_str() : "null session";
}

cka_status cka_expr_parse(cka_session *session, const char *text,
                          cka_expr **out) {
  return guarded(session, [&] {
    if (!text || !out)
      throw cka::UsageError("null argument");
    *out = new cka_expr{session,
                        cka::parse_expr(session->alphabet, text)};
  });
}

void cka_expr_destroy(cka_expr *expr) { delete expr; }

cka_status cka_expr_format(cka_session *session, const cka_expr *expr,
                           char **out) {
  return guarded(session, [&] {
    if (!check_handle(session, expr, expr ? expr->owner : nullptr) || !out)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    *out = copy_string(cka::print_expr(session->alphabet, *expr->expr));
  });
}

cka_status cka_expr_enumerate(cka_session *session, const cka_expr *expr,
                              unsigned degree, char **out) {
  return guarded(session, [&] {
    if (!check_handle(session, expr, expr ? expr->owner : nullptr) || !out)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    cka::VectorSet vectors = cka::bounded_semantics(
        *expr->expr, session->alphabet.size(), degree);
    std::ostringstream lines;
    for (const cka::ParikhVector &v : vectors)
      lines << cka::format_monomial(session->alphabet, v) << '\n';
    *out = copy_string(lines.str());
  });
}

cka_status cka_expr_is_empty(cka_session *session, const cka_expr *expr,
                             int *empty) {
  return guarded(session, [&] {
    if (!check_handle(session, expr, expr ? expr->owner : nullptr) || !empty)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    *empty = cka::is_empty(
                 cka::from_expr(*expr->expr, session->alphabet.size()))
                 ? 1
                 : 0;
  });
}

cka_status cka_normalize(cka_session *session, const cka_expr *expr,
                         cka_semilinear **out) {
  return guarded(session, [&] {
    if (!check_handle(session, expr, expr ? expr->owner : nullptr) || !out)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    *out = new cka_semilinear{
        session, cka::disambiguate(cka::from_expr(
                     *expr->expr, session->alphabet.size()))};
  });
}

void cka_semilinear_destroy(cka_semilinear *set) { delete set; }

cka_status cka_semilinear_format(cka_session *session,
                                 const cka_semilinear *set, char **out) {
  return guarded(session, [&] {
    if (!check_handle(session, set, set ? set->owner : nullptr) || !out)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    *out = copy_string(
        cka::print_expr(session->alphabet, *cka::to_expr(set->set)));
  });
}

cka_status cka_semilinear_to_json(cka_session *session,
                                  const cka_semilinear *set, char **out) {
  return guarded(session, [&] {
    if (!check_handle(session, set, set ? set->owner : nullptr) || !out)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    *out = copy_string(
        cka::semilinear_to_json(session->alphabet, set->set).dump());
  });
}

cka_status cka_semilinear_from_json(cka_session *session, const char *json,
                                    cka_semilinear **out) {
  return guarded(session, [&] {
    if (!json || !out)
      throw cka::UsageError("null argument");
    nlohmann::json parsed = nlohmann::json::parse(json);
    *out = new cka_semilinear{
        session, cka::semilinear_from_json(session->alphabet, parsed)};
  });
}

cka_status cka_semilinear_term_count(cka_session *session,
                                     const cka_semilinear *set,
                                     size_t *count) {
  return guarded(session, [&] {
    if (!check_handle(session, set, set ? set->owner : nullptr) || !count)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    *count = set->set.terms().size();
  });
}

cka_status cka_semilinear_member(cka_session *session,
                                 const cka_semilinear *set,
                                 const char *monomial, int *is_member) {
  return guarded(session, [&] {
    if (!check_handle(session, set, set ? set->owner : nullptr) || !monomial ||
        !is_member)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    cka::ParikhVector v = cka::parse_monomial(session->alphabet, monomial);
    *is_member = cka::member(set->set, v) ? 1 : 0;
  });
}

namespace {

cka_status decide_common(cka_session *session, const cka_expr *e,
                         const cka_expr *f, int want_trace, int *holds,
                         char **counterexample, char **trace_json,
                         bool equivalence) {
  return guarded(session, [&] {
    if (!check_handle(session, e, e ? e->owner : nullptr) ||
        !check_handle(session, f, f ? f->owner : nullptr) || !holds)
      throw cka::UsageError(session->last_error.empty() ? "null argument"
                                                        : session->last_error);
    if (counterexample)
      *counterexample = nullptr;
    if (trace_json)
      *trace_json = nullptr;
    cka::DecisionOptions options;
    options.want_trace = want_trace != 0;
    cka::DecisionResult result =
        equivalence
            ? cka::decide_eq(e->expr, f->expr, session->alphabet.size(),
                             options)
            : cka::decide_leq(e->expr, f->expr, session->alphabet.size(),
                              options);
    *holds = result.holds ? 1 : 0;
    if (!result.holds && counterexample && result.counterexample)
      *counterexample = copy_string(
          cka::format_monomial(session->alphabet, *result.counterexample));
    if (want_trace && trace_json)
      *trace_json = copy_string(
          cka::trace_to_json(session->alphabet, result.trace).dump());
  });
}

} // namespace

cka_status cka_decide_leq(cka_session *session, const cka_expr *e,
                          const cka_expr *f, int want_trace, int *holds,
                          char **counterexample, char **trace_json) {
  return decide_common(session, e, f, want_trace, holds, counterexample,
                       trace_json, false);
}

cka_status cka_decide_eq(cka_session *session, const cka_expr *e,
                         const cka_expr *f, int want_trace, int *holds,
                         char **counterexample, char **trace_json) {
  return decide_common(session, e, f, want_trace, holds, counterexample,
                       trace_json, true);
}

void cka_string_free(char *str) { std::free(str); }
