#include "support/gen.hpp"

#include <doctest.h>

using namespace cka;
using namespace cka::testsupport;

TEST_CASE("alphabet validation") {
  CHECK(Alphabet::from_csv("a,b,c").size() == 3);
  CHECK(Alphabet::from_csv("b").letter(0) == 'b');
  CHECK(Alphabet::from_csv("b,a").index_of('a') == 1);
  CHECK(!Alphabet::from_csv("a,b").index_of('z').has_value());
  CHECK_THROWS_AS(Alphabet(std::vector<char>{}), UsageError);
  CHECK_THROWS_AS(Alphabet({'a', 'a'}), UsageError);
  CHECK_THROWS_AS(Alphabet({'A'}), UsageError);
  CHECK_THROWS_AS(Alphabet::from_csv("ab,c"), UsageError);
}

TEST_CASE("vector addition and scalar multiplication") {
  CHECK(vec_add(vec({1, 0}), vec({0, 1})) == vec({1, 1}));
  CHECK(vec_add(vec({0, 0}), vec({2, 3})) == vec({2, 3}));
  CHECK(vec_add(vec({1, 2}), vec({3, 4})) == vec({4, 6}));
  CHECK(scalar_mul(0, vec({5, 7})) == vec({0, 0}));
  CHECK(scalar_mul(1, vec({2, 3})) == vec({2, 3}));
  CHECK(scalar_mul(3, vec({1, 2})) == vec({3, 6}));
  CHECK_THROWS_AS(vec_add(vec({1}), vec({1, 2})), UsageError);
}

TEST_CASE("vector algebra laws on random inputs") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    std::size_t width = 1 + pick(rng, 3);
    ParikhVector u = random_vector(rng, width, 6, true);
    ParikhVector v = random_vector(rng, width, 6, true);
    ParikhVector w = random_vector(rng, width, 6, true);
    Int n = pick(rng, 7);
    CHECK(vec_add(u, v) == vec_add(v, u));
    CHECK(vec_add(vec_add(u, v), w) == vec_add(u, vec_add(v, w)));
    CHECK(vec_add(u, ParikhVector(width)) == u);
    CHECK(scalar_mul(n, vec_add(u, v)) ==
          vec_add(scalar_mul(n, u), scalar_mul(n, v)));
  }
}

TEST_CASE("points interpret as vectors") {
  Point p{{vec({1, 0}), vec({0, 1})}, {Int(2), Int(3)}};
  CHECK(p.to_vector() == vec({2, 3}));

  Point zero{{vec({1, 1})}, {Int(0)}};
  CHECK(zero.to_vector() == vec({0, 0}));

  // A dependent base makes the interpretation non-injective.
  Point left{{vec({1, 0}), vec({0, 1}), vec({1, 1})}, {Int(1), Int(1), Int(0)}};
  Point right{{vec({1, 0}), vec({0, 1}), vec({1, 1})},
              {Int(0), Int(0), Int(1)}};
  CHECK(left.coeffs != right.coeffs);
  CHECK(left.to_vector() == right.to_vector());
}

TEST_CASE("to_vector is injective over independent bases") {
  // Exhaustive at width 2: all bases of <= 2 nonzero vectors with entries
  // <= 2, all coefficient pairs <= 5.
  std::vector<ParikhVector> candidates;
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y)
      if (x + y > 0)
        candidates.push_back(vec({x, y}));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      std::vector<ParikhVector> base{candidates[i], candidates[j]};
      if (!is_independent(base))
        continue;
      VectorSet seen;
      for (long c1 = 0; c1 <= 5; ++c1)
        for (long c2 = 0; c2 <= 5; ++c2) {
          Point p{base, {Int(c1), Int(c2)}};
          CHECK(seen.insert(p.to_vector()).second);
        }
    }
  }
}

TEST_CASE("monomial syntax") {
  Alphabet ab = Alphabet::from_csv("a,b");
  CHECK(format_monomial(ab, vec({2, 1})) == "a^2 b");
  CHECK(format_monomial(ab, vec({0, 0})) == "1");
  CHECK(format_monomial(ab, vec({0, 3})) == "b^3");
  CHECK(parse_monomial(ab, "a^2 b") == vec({2, 1}));
  CHECK(parse_monomial(ab, "1") == vec({0, 0}));
  CHECK(parse_monomial(ab, "b a b") == vec({1, 2}));
  CHECK(parse_monomial(ab, "  a^10  ") == vec({10, 0}));
  CHECK_THROWS_AS(parse_monomial(ab, "c"), ParseError);
  CHECK_THROWS_AS(parse_monomial(ab, ""), ParseError);
  CHECK_THROWS_AS(parse_monomial(ab, "a^"), ParseError);

  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    ParikhVector v = random_vector(rng, 2, 9, true);
    CHECK(parse_monomial(ab, format_monomial(ab, v)) == v);
  }
}
