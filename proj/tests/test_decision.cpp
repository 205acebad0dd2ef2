#include "support/gen.hpp"

#include <doctest.h>

using namespace cka;
using namespace cka::testsupport;

namespace {

const Alphabet kAb = Alphabet::from_csv("a,b");

VectorSet everything(std::size_t width, unsigned degree) {
  VectorSet out;
  for (const ParikhVector &v : all_vectors(width, degree))
    out.insert(v);
  return out;
}

void check_decomposition(const SemilinearSet &e, const LinearSet &f,
                         const Decomposition &d, std::size_t width,
                         unsigned degree) {
  VectorSet e_sem = semantics_of(e, width, degree);
  VectorSet f_sem = semantics_of(sls({f}), width, degree);
  VectorSet inside = semantics_of(d.inside, width, degree);
  VectorSet outside = semantics_of(d.outside, width, degree);
  CHECK(unioned(inside, outside) == e_sem);
  CHECK(subset_of(inside, f_sem));
  CHECK(disjoint(outside, f_sem));
}

} // namespace

TEST_CASE("homogenize") {
  Frame frame({vec({1, 1})}, 2);
  SUBCASE("canonical generators against the diagonal") {
    LinearSet t = lin({0, 0}, {{1, 0}, {0, 1}});
    std::vector<LinearSet> parts = homogenize(t, frame);
    CHECK(SemilinearSet(parts) == sls({lin({0, 0}, {{1, 1}, {0, 1}}),
                                       lin({0, 0}, {{1, 1}, {1, 0}})}));
    for (const LinearSet &h : parts)
      CHECK(is_homogeneous(h, frame));
    CHECK(semantics_of(SemilinearSet(parts), 2, 5) ==
          semantics_of(sls({t}), 2, 5));
  }
  SUBCASE("already homogeneous terms pass through") {
    LinearSet t = lin({1, 0}, {{1, 1}, {2, 2}});
    REQUIRE(is_homogeneous(t, frame));
    std::vector<LinearSet> parts = homogenize(t, frame);
    REQUIRE(parts.size() == 1);
    CHECK(parts.front() == t);
  }
  SUBCASE("empty base is trivially homogeneous") {
    LinearSet t = lin({2, 1}, {});
    std::vector<LinearSet> parts = homogenize(t, frame);
    REQUIRE(parts.size() == 1);
    CHECK(parts.front() == t);
  }
  SUBCASE("outputs are homogeneous and preserve semantics on random input") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
      std::size_t width = 2 + pick(rng, 2);
      Frame random_frame(random_independent_base(rng, width, 2, 0), width);
      LinearSet t = random_linear_set(rng, width, 2, 3);
      std::vector<LinearSet> parts = homogenize(t, random_frame);
      for (const LinearSet &h : parts)
        CHECK(is_homogeneous(h, random_frame));
      CHECK(semantics_of(SemilinearSet(parts), width, 6) ==
            semantics_of(sls({t}), width, 6));
    }
  }
}

TEST_CASE("compatible_decompose") {
  SUBCASE("witness inside a shifted diagonal") {
    LinearSet t = lin({0, 0}, {{2, 2}});
    LinearSet f = lin({1, 1}, {{1, 1}});
    Frame frame(f.base(), 2);
    Decomposition d = compatible_decompose(t, f, frame);
    CHECK(d.inside == sls({lin({2, 2}, {{2, 2}})}));
    CHECK(d.outside == sls({lin({0, 0}, {})}));
    check_decomposition(sls({t}), f, d, 2, 8);
  }
  SUBCASE("disjoint by extension coordinates") {
    LinearSet t = lin({1, 0}, {{1, 1}});
    LinearSet f = lin({0, 1}, {{1, 1}});
    Frame frame(f.base(), 2);
    Decomposition d = compatible_decompose(t, f, frame);
    CHECK(is_empty(d.inside));
    CHECK(d.outside == sls({t}));
    check_decomposition(sls({t}), f, d, 2, 8);
  }
  SUBCASE("base-free term decided by its offset") {
    LinearSet t = lin({0, 0}, {});
    LinearSet f = lin({0, 0}, {{1, 1}});
    Frame frame(f.base(), 2);
    Decomposition d = compatible_decompose(t, f, frame);
    CHECK(d.inside == sls({t}));
    CHECK(is_empty(d.outside));
  }
  SUBCASE("incompatible base is rejected") {
    LinearSet t = lin({0, 0}, {{1, 0}});
    LinearSet f = lin({0, 0}, {{1, 1}});
    Frame frame(f.base(), 2);
    CHECK_THROWS_AS(compatible_decompose(t, f, frame), UsageError);
  }
}

TEST_CASE("base_split") {
  SUBCASE("full plane against the diagonal") {
    SemilinearSet e = from_expr(*parse_expr(kAb, "(a+b)*"), 2);
    LinearSet f = lin({0, 0}, {{1, 1}});
    Decomposition d = base_split(e, f);
    check_decomposition(e, f, d, 2, 6);
    CHECK(semantics_of(d.inside, 2, 6) ==
          bounded_semantics(*parse_expr(kAb, "(ab)*"), 2, 6));
  }
  SUBCASE("empty set") {
    Decomposition d = base_split(SemilinearSet(), lin({0, 0}, {{1, 1}}));
    CHECK(is_empty(d.inside));
    CHECK(is_empty(d.outside));
  }
  SUBCASE("self split keeps everything inside") {
    LinearSet f = lin({1, 0}, {{0, 1}, {1, 1}});
    Decomposition d = base_split(sls({f}), f);
    CHECK(is_empty(d.outside));
    CHECK(semantics_of(d.inside, 2, 6) == semantics_of(sls({f}), 2, 6));
  }
  SUBCASE("ambiguous reference is rejected") {
    CHECK_THROWS_AS(base_split(SemilinearSet(),
                               lin({0, 0}, {{1, 0}, {2, 0}})),
                    UsageError);
  }
  SUBCASE("decomposition contract on random pairs") {
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
      std::size_t width = 2 + pick(rng, 2);
      SemilinearSet e =
          disambiguate(from_expr(*random_expr(rng, width, 10, 2), width));
      LinearSet f(random_vector(rng, width, 2, true),
                  random_independent_base(rng, width, 2, 0));
      Decomposition d = base_split(e, f);
      check_decomposition(e, f, d, width, 6);
    }
  }
}

TEST_CASE("decide_leq on pinned pairs") {
  auto decide = [&](const char *lhs, const char *rhs) {
    return decide_leq(parse_expr(kAb, lhs), parse_expr(kAb, rhs), 2);
  };
  CHECK(decide("(ab)*", "a* b*").holds);
  CHECK(decide("0", "a b").holds);
  CHECK(decide("0", "0").holds);
  CHECK(decide("a*", "a* + b").holds);

  DecisionResult separated = decide("a* b*", "(ab)*");
  CHECK(!separated.holds);
  REQUIRE(separated.counterexample.has_value());
  CHECK(*separated.counterexample == vec({0, 1}));

  DecisionResult letters = decide("a", "b");
  CHECK(!letters.holds);
  REQUIRE(letters.counterexample.has_value());
  CHECK(*letters.counterexample == vec({1, 0}));
}

TEST_CASE("decide_eq on the paper identity suite") {
  Alphabet a1 = Alphabet::from_csv("a");
  auto eq2 = [&](const char *lhs, const char *rhs) {
    return decide_eq(parse_expr(kAb, lhs), parse_expr(kAb, rhs), 2).holds;
  };
  auto eq1 = [&](const char *lhs, const char *rhs) {
    return decide_eq(parse_expr(a1, lhs), parse_expr(a1, rhs), 1).holds;
  };
  CHECK(eq2("(a+b)*", "a* b*"));
  CHECK(eq1("a*", "(1+a)(a a)*"));
  CHECK(eq1("a*", "(1+a+a^2)(a^3)*"));
  CHECK(eq2("(a b*)*", "1 + a(a+b)*"));
  CHECK(eq1("a*", "1 + a a*"));
  CHECK(eq1("a*", "(1+a) + a^2 a*"));
  CHECK(eq1("a*", "(1+a+a^2) + a^3 a*"));
  CHECK(eq2("ab", "ba"));
  CHECK(!eq2("a", "b"));
  CHECK(!eq2("(ab)*", "a* b*"));
}

TEST_CASE("decide_eq is reflexive and stable under sound rewrites") {
  Rng rng(43);
  for (int i = 0; i < 25; ++i) {
    std::size_t width = 2 + pick(rng, 2);
    ExprPtr e = random_expr(rng, width, 9, 2);
    CHECK(decide_eq(e, e, width).holds);
    ExprPtr rewritten = sound_rewrite(rng, e);
    CHECK(decide_eq(e, rewritten, width).holds);
    CHECK(decide_eq(rewritten, e, width).holds);
  }
}

TEST_CASE("decide_leq agrees with the oracle on random pairs") {
  Rng rng(44);
  for (int i = 0; i < 60; ++i) {
    std::size_t width = 2 + pick(rng, 2);
    ExprPtr e = random_expr(rng, width, 10, 2);
    ExprPtr f = random_expr(rng, width, 10, 2);
    DecisionResult result = decide_leq(e, f, width);
    if (result.holds) {
      CHECK(subset_of(bounded_semantics(*e, width, 8),
                      bounded_semantics(*f, width, 8)));
    } else {
      REQUIRE(result.counterexample.has_value());
      SemilinearSet left = disambiguate(from_expr(*e, width));
      SemilinearSet right = disambiguate(from_expr(*f, width));
      CHECK(member(left, *result.counterexample));
      CHECK(!member(right, *result.counterexample));
    }
  }
}

TEST_CASE("traces record oracle-equal steps") {
  DecisionOptions options;
  options.want_trace = true;

  SUBCASE("pinned separation") {
    DecisionResult result = decide_leq(parse_expr(kAb, "a* b*"),
                                       parse_expr(kAb, "(ab)*"), 2, options);
    CHECK(!result.holds);
    CHECK(!result.trace.empty());
    for (const TraceStep &step : result.trace.steps())
      CHECK(step_is_sound(step, 2, 6));
  }
  SUBCASE("pinned identity") {
    DecisionResult result = decide_eq(parse_expr(kAb, "(a+b)*"),
                                      parse_expr(kAb, "a* b*"), 2, options);
    CHECK(result.holds);
    bool saw_decomp = false, saw_loop = false;
    for (const TraceStep &step : result.trace.steps()) {
      CHECK(step_is_sound(step, 2, 6));
      saw_decomp |= step.rule == "decomp";
      saw_loop |= step.rule == "decision-loop";
    }
    CHECK(saw_decomp);
    CHECK(saw_loop);
  }
  SUBCASE("random pairs") {
    Rng rng(45);
    for (int i = 0; i < 10; ++i) {
      ExprPtr e = random_expr(rng, 2, 8, 1);
      ExprPtr f = random_expr(rng, 2, 8, 1);
      DecisionResult result = decide_leq(e, f, 2, options);
      for (const TraceStep &step : result.trace.steps())
        CHECK(step_is_sound(step, 2, 6));
    }
  }
}

TEST_CASE("base-vector identity of the acceptance suite") {
  // {a,b}* rewritten through the point (1,1) covers the whole lattice.
  SemilinearSet split =
      base_vector_split({vec({1, 0}), vec({0, 1})}, {Int(1), Int(1)});
  CHECK(semantics_of(split, 2, 6) == everything(2, 6));
}
