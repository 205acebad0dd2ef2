#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cka.h"

#include <string>

namespace {

std::string take(char *owned) {
  std::string out = owned ? owned : "";
  cka_string_free(owned);
  return out;
}

struct Session {
  cka_session *raw = nullptr;
  explicit Session(const char *letters) {
    REQUIRE(cka_session_create(letters, &raw) == CKA_OK);
  }
  ~Session() { cka_session_destroy(raw); }
  operator cka_session *() const { return raw; }
};

struct Parsed {
  cka_expr *raw = nullptr;
  Parsed(cka_session *session, const char *text) {
    REQUIRE(cka_expr_parse(session, text, &raw) == CKA_OK);
  }
  ~Parsed() { cka_expr_destroy(raw); }
  operator const cka_expr *() const { return raw; }
};

} // namespace

TEST_CASE("session lifecycle and errors") {
  cka_session *session = nullptr;
  CHECK(cka_session_create("a,b", &session) == CKA_OK);
  REQUIRE(session != nullptr);
  CHECK(std::string(cka_session_error(session)).empty());

  cka_expr *expr = nullptr;
  CHECK(cka_expr_parse(session, "(a", &expr) == CKA_ERR_PARSE);
  CHECK(expr == nullptr);
  CHECK(std::string(cka_session_error(session)).find("position") !=
        std::string::npos);

  CHECK(cka_expr_parse(session, "c", &expr) == CKA_ERR_PARSE);
  cka_session_destroy(session);

  CHECK(cka_session_create("", &session) == CKA_ERR_USAGE);
  CHECK(cka_session_create("a,a", &session) == CKA_ERR_USAGE);
  CHECK(cka_session_create(nullptr, &session) == CKA_ERR_USAGE);
}

TEST_CASE("parse, format, enumerate, empty") {
  Session session("a,b");
  Parsed expr(session, "(a + b)*");
  char *text = nullptr;
  REQUIRE(cka_expr_format(session, expr, &text) == CKA_OK);
  CHECK(take(text) == "(a+b)*");

  char *lines = nullptr;
  REQUIRE(cka_expr_enumerate(session, expr, 1, &lines) == CKA_OK);
  CHECK(take(lines) == "1\nb\na\n");

  int empty = -1;
  Parsed zero(session, "a 0");
  REQUIRE(cka_expr_is_empty(session, zero, &empty) == CKA_OK);
  CHECK(empty == 1);
  REQUIRE(cka_expr_is_empty(session, expr, &empty) == CKA_OK);
  CHECK(empty == 0);
}

TEST_CASE("normalization, membership, JSON round trip") {
  Session session("a,b");
  Parsed expr(session, "(a+b)*");
  cka_semilinear *normal = nullptr;
  REQUIRE(cka_normalize(session, expr, &normal) == CKA_OK);

  size_t count = 0;
  REQUIRE(cka_semilinear_term_count(session, normal, &count) == CKA_OK);
  CHECK(count == 4);

  char *formatted = nullptr;
  REQUIRE(cka_semilinear_format(session, normal, &formatted) == CKA_OK);
  CHECK(take(formatted) == "1+b b*+a a*+a b b* a*");

  int is_member = -1;
  REQUIRE(cka_semilinear_member(session, normal, "a^3 b", &is_member) ==
          CKA_OK);
  CHECK(is_member == 1);
  CHECK(cka_semilinear_member(session, normal, "x", &is_member) ==
        CKA_ERR_PARSE);

  char *json = nullptr;
  REQUIRE(cka_semilinear_to_json(session, normal, &json) == CKA_OK);
  std::string encoded = take(json);
  cka_semilinear *decoded = nullptr;
  REQUIRE(cka_semilinear_from_json(session, encoded.c_str(), &decoded) ==
          CKA_OK);
  char *json2 = nullptr;
  REQUIRE(cka_semilinear_to_json(session, decoded, &json2) == CKA_OK);
  CHECK(take(json2) == encoded);
  CHECK(cka_semilinear_from_json(session, "{not json", &decoded) ==
        CKA_ERR_PARSE);

  cka_semilinear_destroy(decoded);
  cka_semilinear_destroy(normal);
}

TEST_CASE("decisions through the C surface") {
  Session session("a,b");
  Parsed diag(session, "(ab)*");
  Parsed box(session, "a* b*");

  int holds = -1;
  char *witness = nullptr;
  REQUIRE(cka_decide_leq(session, diag, box, 0, &holds, &witness, nullptr) ==
          CKA_OK);
  CHECK(holds == 1);
  CHECK(witness == nullptr);

  REQUIRE(cka_decide_leq(session, box, diag, 0, &holds, &witness, nullptr) ==
          CKA_OK);
  CHECK(holds == 0);
  CHECK(take(witness) == "b");

  char *trace = nullptr;
  Parsed sum(session, "(a+b)*");
  REQUIRE(cka_decide_eq(session, sum, box, 1, &holds, &witness, &trace) ==
          CKA_OK);
  CHECK(holds == 1);
  std::string trace_text = take(trace);
  CHECK(trace_text.find("\"steps\"") != std::string::npos);
  CHECK(trace_text.find("decomp") != std::string::npos);
}

TEST_CASE("foreign and null handles are usage errors") {
  Session first("a,b");
  Session second("a,b");
  Parsed expr(first, "a");

  char *out = nullptr;
  CHECK(cka_expr_format(second, expr, &out) == CKA_ERR_USAGE);
  CHECK(std::string(cka_session_error(second)).find("different session") !=
        std::string::npos);
  CHECK(cka_expr_format(first, nullptr, &out) == CKA_ERR_USAGE);

  int holds = -1;
  CHECK(cka_decide_leq(first, expr, nullptr, 0, &holds, nullptr, nullptr) ==
        CKA_ERR_USAGE);
  CHECK(cka_decide_leq(nullptr, expr, expr, 0, &holds, nullptr, nullptr) ==
        CKA_ERR_USAGE);
}
