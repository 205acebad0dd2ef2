// Command-line front-end for the cka shared library. Talks to the C API
// only; everything here is argument handling and output formatting.

#include "cka.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct SessionDeleter {
  void operator()(cka_session *s) const { cka_session_destroy(s); }
};
struct ExprDeleter {
  void operator()(cka_expr *e) const { cka_expr_destroy(e); }
};
struct SetDeleter {
  void operator()(cka_semilinear *s) const { cka_semilinear_destroy(s); }
};

using SessionPtr = std::unique_ptr<cka_session, SessionDeleter>;
using ExprHandle = std::unique_ptr<cka_expr, ExprDeleter>;
using SetHandle = std::unique_ptr<cka_semilinear, SetDeleter>;

std::string take_string(char *owned) {
  std::string out = owned ? owned : "";
  cka_string_free(owned);
  return out;
}

int exit_code_for(cka_status status) {
  return status == CKA_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

[[noreturn]] void fail(const SessionPtr &session, cka_status status) {
  std::cerr << "error: " << cka_session_error(session.get()) << '\n';
  std::exit(exit_code_for(status));
}

/** The letters occurring in the inputs, in alphabetical order. */
std::string infer_alphabet(const std::vector<std::string> &inputs) {
  std::set<char> letters;
  for (const std::string &text : inputs)
    for (char c : text)
      if (c >= 'a' && c <= 'z')
        letters.insert(c);
  if (letters.empty())
    letters.insert('a'); // constant-only input still needs an alphabet
  std::string csv;
  for (char c : letters) {
    if (!csv.empty())
      csv += ',';
    csv += c;
  }
  return csv;
}

SessionPtr open_session(const std::string &alphabet_option,
                        const std::vector<std::string> &inputs) {
  std::string letters =
      alphabet_option.empty() ? infer_alphabet(inputs) : alphabet_option;
  cka_session *raw = nullptr;
  if (cka_session_create(letters.c_str(), &raw) != CKA_OK) {
    std::cerr << "error: invalid alphabet '" << letters << "'\n";
    std::exit(kExitUsage);
  }
  return SessionPtr(raw);
}

ExprHandle parse_or_fail(const SessionPtr &session, const std::string &text) {
  cka_expr *raw = nullptr;
  cka_status status = cka_expr_parse(session.get(), text.c_str(), &raw);
  if (status != CKA_OK)
    fail(session, status);
  return ExprHandle(raw);
}

struct Options {
  std::string alphabet;
  unsigned degree = 6;
  std::string format = "text";
  bool trace = false;
};

int run_normalize(const Options &opts, const std::string &text) {
  SessionPtr session = open_session(opts.alphabet, {text});
  ExprHandle expr = parse_or_fail(session, text);
  cka_semilinear *raw = nullptr;
  cka_status status = cka_normalize(session.get(), expr.get(), &raw);
  if (status != CKA_OK)
    fail(session, status);
  SetHandle normal(raw);
  char *rendered = nullptr;
  status = opts.format == "json"
               ? cka_semilinear_to_json(session.get(), normal.get(), &rendered)
               : cka_semilinear_format(session.get(), normal.get(), &rendered);
  if (status != CKA_OK)
    fail(session, status);
  std::cout << take_string(rendered) << '\n';
  return kExitHolds;
}

int run_decide(const Options &opts, const std::string &mode,
               const std::string &left, const std::string &right) {
  SessionPtr session = open_session(opts.alphabet, {left, right});
  ExprHandle e = parse_or_fail(session, left);
  ExprHandle f = parse_or_fail(session, right);
  int holds = 0;
  char *counterexample = nullptr;
  char *trace_json = nullptr;
  auto decide = mode == "eq" ? cka_decide_eq : cka_decide_leq;
  cka_status status =
      decide(session.get(), e.get(), f.get(), opts.trace ? 1 : 0, &holds,
             &counterexample, &trace_json);
  if (status != CKA_OK)
    fail(session, status);
  std::string witness = take_string(counterexample);
  std::string trace = take_string(trace_json);
  if (opts.format == "json") {
    nlohmann::json out{{"verdict", holds ? "HOLDS" : "FAILS"}};
    if (!holds)
      out["counterexample"] = witness;
    if (opts.trace)
      out["trace"] = nlohmann::json::parse(trace);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << (holds ? "HOLDS" : "FAILS") << '\n';
    if (!holds)
      std::cout << "counterexample: " << witness << '\n';
    if (opts.trace)
      std::cout << trace << '\n';
  }
  return holds ? kExitHolds : kExitFails;
}

int run_member(const Options &opts, const std::string &monomial,
               const std::string &text) {
  SessionPtr session = open_session(opts.alphabet, {monomial, text});
  ExprHandle expr = parse_or_fail(session, text);
  cka_semilinear *raw = nullptr;
  cka_status status = cka_normalize(session.get(), expr.get(), &raw);
  if (status != CKA_OK)
    fail(session, status);
  SetHandle normal(raw);
  int is_member = 0;
  status = cka_semilinear_member(session.get(), normal.get(), monomial.c_str(),
                                 &is_member);
  if (status != CKA_OK)
    fail(session, status);
  if (opts.format == "json")
    std::cout << nlohmann::json{{"member", is_member != 0}}.dump() << '\n';
  else
    std::cout << (is_member ? "yes" : "no") << '\n';
  return is_member ? kExitHolds : kExitFails;
}

int run_enumerate(const Options &opts, const std::string &text) {
  SessionPtr session = open_session(opts.alphabet, {text});
  ExprHandle expr = parse_or_fail(session, text);
  char *lines = nullptr;
  cka_status status =
      cka_expr_enumerate(session.get(), expr.get(), opts.degree, &lines);
  if (status != CKA_OK)
    fail(session, status);
  std::string rendered = take_string(lines);
  if (opts.format == "json") {
    nlohmann::json vectors = nlohmann::json::array();
    std::size_t start = 0;
    while (start < rendered.size()) {
      std::size_t nl = rendered.find('\n', start);
      vectors.push_back(rendered.substr(start, nl - start));
      start = nl == std::string::npos ? rendered.size() : nl + 1;
    }
    std::cout << nlohmann::json{{"vectors", std::move(vectors)}}.dump()
              << '\n';
  } else {
    std::cout << rendered;
  }
  return kExitHolds;
}

int run_empty(const Options &opts, const std::string &text) {
  SessionPtr session = open_session(opts.alphabet, {text});
  ExprHandle expr = parse_or_fail(session, text);
  int empty = 0;
  cka_status status = cka_expr_is_empty(session.get(), expr.get(), &empty);
  if (status != CKA_OK)
    fail(session, status);
  if (opts.format == "json")
    std::cout << nlohmann::json{{"empty", empty != 0}}.dump() << '\n';
  else
    std::cout << (empty ? "empty" : "nonempty") << '\n';
  return empty ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decide equivalence and inclusion of commutative regular "
               "expressions via semilinear normal forms"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--alphabet", opts.alphabet,
                 "Comma-separated letters fixing the coordinate order "
                 "(default: letters occurring in the inputs)");
  app.add_option("--degree", opts.degree,
                 "Total-degree bound for enumerate (default 6)");
  app.add_option("--format", opts.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", opts.trace, "Record and print the rewrite trace");

  std::string expr_text, right_text, mode, monomial;

  CLI::App *normalize =
      app.add_subcommand("normalize", "Print the unambiguous normal form");
  normalize->add_option("expr", expr_text, "Expression")->required();

  CLI::App *decide =
      app.add_subcommand("decide", "Decide eq or leq of two expressions");
  decide->add_option("mode", mode, "eq or leq")
      ->required()
      ->check(CLI::IsMember({"eq", "leq"}));
  decide->add_option("lhs", expr_text, "Left expression")->required();
  decide->add_option("rhs", right_text, "Right expression")->required();

  CLI::App *member_cmd =
      app.add_subcommand("member", "Test vector membership");
  member_cmd->add_option("vector", monomial, "Monomial, e.g. \"a^2 b\"")
      ->required();
  member_cmd->add_option("expr", expr_text, "Expression")->required();

  CLI::App *enumerate_cmd = app.add_subcommand(
      "enumerate", "List all vectors up to the degree bound");
  enumerate_cmd->add_option("expr", expr_text, "Expression")->required();

  CLI::App *empty_cmd =
      app.add_subcommand("empty", "Test whether the language is empty");
  empty_cmd->add_option("expr", expr_text, "Expression")->required();

  for (CLI::App *sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &help) {
    return app.exit(help);
  } catch (const CLI::ParseError &err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (normalize->parsed())
      return run_normalize(opts, expr_text);
    if (decide->parsed())
      return run_decide(opts, mode, expr_text, right_text);
    if (member_cmd->parsed())
      return run_member(opts, monomial, expr_text);
    if (enumerate_cmd->parsed())
      return run_enumerate(opts, expr_text);
    if (empty_cmd->parsed())
      return run_empty(opts, expr_text);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
