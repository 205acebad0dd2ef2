#ifndef CKA_EXPR_HPP
#define CKA_EXPR_HPP

#include "parikh.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace cka {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/**
 * Commutative regular expression AST. `product` is the paper's `·` (vector
 * addition of languages), `join` its `∪` (the surface `+`). Nodes are
 * immutable and shared; no simplification happens at construction.
 */
class Expr {
public:
  enum class Kind { zero, one, letter, product, join, star };

  Kind kind() const { return kind_; }
  std::size_t letter() const;
  const ExprPtr &left() const;  // product/join; also the star operand
  const ExprPtr &right() const; // product/join

  static ExprPtr zero();
  static ExprPtr one();
  static ExprPtr letter(std::size_t index);
  static ExprPtr product(ExprPtr l, ExprPtr r);
  static ExprPtr join(ExprPtr l, ExprPtr r);
  static ExprPtr star(ExprPtr operand);

private:
  Expr(Kind kind, std::size_t letter, ExprPtr l, ExprPtr r)
      : kind_(kind), letter_(letter), left_(std::move(l)),
        right_(std::move(r)) {}

  Kind kind_;
  std::size_t letter_ = 0;
  ExprPtr left_;
  ExprPtr right_;
};

bool structurally_equal(const Expr &a, const Expr &b);
std::size_t node_count(const Expr &e);

/**
 * Concrete syntax: `expr := term ('+' term)*`, `term := factor ('.'? factor)*`
 * (juxtaposition allowed), `factor := atom ('*' | '^' nat)*`,
 * `atom := '0' | '1' | letter | '(' expr ')'`. `^n` expands to an n-fold
 * product at parse time, `^0` to `1`.
 */
ExprPtr parse_expr(const Alphabet &alphabet, std::string_view text);

/** Canonical form; parse(print(e)) is structurally equal to e. */
std::string print_expr(const Alphabet &alphabet, const Expr &e);

/** An expression whose semantics is exactly {v}; the zero vector gives 1. */
ExprPtr expr_of_vector(const ParikhVector &v);

using VectorSet = std::set<ParikhVector>;

/**
 * The brute-force oracle: exactly the vectors of the expression's semantics
 * with total degree <= degree.
 */
VectorSet bounded_semantics(const Expr &e, std::size_t width, unsigned degree);

} // namespace cka

#endif
