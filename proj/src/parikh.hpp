#ifndef CKA_PARIKH_HPP
#define CKA_PARIKH_HPP

#include "errors.hpp"
#include "numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cka {

/**
 * Ordered finite alphabet of single-character letters. The order is fixed
 * for a session and determines the coordinate order of every vector.
 */
class Alphabet {
public:
  explicit Alphabet(std::vector<char> letters);

  /** Parse a comma-separated list such as "a,b,c". */
  static Alphabet from_csv(std::string_view csv);

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t i) const { return letters_[i]; }
  const std::vector<char> &letters() const { return letters_; }
  std::optional<std::size_t> index_of(char c) const;

  bool operator==(const Alphabet &other) const = default;

private:
  std::vector<char> letters_;
};

/**
 * A commutative word: one natural count per letter, in alphabet order.
 * Counts are arbitrary-precision and never negative.
 */
class ParikhVector {
public:
  explicit ParikhVector(std::size_t width) : counts_(width) {}
  explicit ParikhVector(std::vector<Int> counts);

  /** The vector with a single 1 in coordinate `letter`. */
  static ParikhVector unit(std::size_t width, std::size_t letter);

  std::size_t width() const { return counts_.size(); }
  const Int &count(std::size_t i) const { return counts_[i]; }
  void set_count(std::size_t i, Int value);

  Int total_degree() const;
  bool is_zero() const;

  /** Lexicographic on counts; the canonical vector order. */
  friend int compare(const ParikhVector &u, const ParikhVector &v);

  friend bool operator==(const ParikhVector &u, const ParikhVector &v) {
    return compare(u, v) == 0;
  }
  friend bool operator!=(const ParikhVector &u, const ParikhVector &v) {
    return compare(u, v) != 0;
  }
  friend bool operator<(const ParikhVector &u, const ParikhVector &v) {
    return compare(u, v) < 0;
  }

private:
  std::vector<Int> counts_;
};

ParikhVector vec_add(const ParikhVector &u, const ParikhVector &v);
ParikhVector scalar_mul(const Int &n, const ParikhVector &v);

/** A linear combination over an explicit base, with natural coefficients. */
struct Point {
  std::vector<ParikhVector> base;
  std::vector<Int> coeffs;

  ParikhVector to_vector() const;
};

/** Monomial syntax: `1` for the zero vector, else e.g. `a^2 b`. */
std::string format_monomial(const Alphabet &alphabet, const ParikhVector &v);
ParikhVector parse_monomial(const Alphabet &alphabet, std::string_view text);

} // namespace cka

#endif
