#ifndef CKA_SEMILINEAR_HPP
#define CKA_SEMILINEAR_HPP

#include "expr.hpp"
#include "linalg.hpp"

#include <vector>

namespace cka {

class Trace;

/**
 * u + B*: the offset plus all nonnegative integer combinations of the base.
 * The base is deduplicated, sorted in the canonical vector order, and never
 * contains the zero vector.
 */
class LinearSet {
public:
  LinearSet(ParikhVector offset, std::vector<ParikhVector> base);

  const ParikhVector &offset() const { return offset_; }
  const std::vector<ParikhVector> &base() const { return base_; }
  std::size_t dimension() const { return base_.size(); }
  std::size_t width() const { return offset_.width(); }

  friend int compare(const LinearSet &a, const LinearSet &b);
  friend bool operator==(const LinearSet &a, const LinearSet &b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const LinearSet &a, const LinearSet &b) {
    return compare(a, b) < 0;
  }

private:
  ParikhVector offset_;
  std::vector<ParikhVector> base_;
};

/** A finite union of linear sets; terms sorted and deduplicated. */
class SemilinearSet {
public:
  SemilinearSet() = default;
  explicit SemilinearSet(std::vector<LinearSet> terms);

  const std::vector<LinearSet> &terms() const { return terms_; }
  bool operator==(const SemilinearSet &other) const;

private:
  std::vector<LinearSet> terms_;
};

SemilinearSet unite(const SemilinearSet &a, const SemilinearSet &b);

/** Pointwise sum of languages: offsets add, bases union. */
SemilinearSet minkowski(const SemilinearSet &a, const SemilinearSet &b);
SemilinearSet offset_by(const ParikhVector &u, const SemilinearSet &s);

/** Semantics-preserving translation of an expression into semilinear form. */
SemilinearSet from_expr(const Expr &e, std::size_t width);

/** u·a^{<n}·B*: the terms (u + j·a, B) for 0 <= j < n; n = 0 is empty. */
SemilinearSet expand_bounded_power(const ParikhVector &u,
                                   const ParikhVector &a, const Int &n,
                                   const std::vector<ParikhVector> &base);

/**
 * Rewrite B* as (tovec p)* distributed over the base vectors: for every i
 * with p_i > 0 and 0 <= j < p_i, a term with offset j·base_i and base
 * {tovec p} ∪ (B ∖ {base_i}). Requires p != 0.
 */
SemilinearSet base_vector_split(const std::vector<ParikhVector> &base,
                                const std::vector<Int> &point);

/**
 * Rewrite the iteration of a dependent base as a union of terms of strictly
 * smaller dimension. Requires the base to be dependent.
 */
SemilinearSet reduce_dependent(const std::vector<ParikhVector> &base,
                               Trace *trace = nullptr);

/** Replace every dependent-base term until all bases are independent. */
SemilinearSet disambiguate(const SemilinearSet &s, Trace *trace = nullptr);

/** Exact membership; requires every term's base to be independent. */
bool member(const SemilinearSet &s, const ParikhVector &v);

bool is_empty(const SemilinearSet &s);

/** The expression sum_i expr(u_i) · prod_b (expr(b))*; the empty set is 0. */
ExprPtr to_expr(const SemilinearSet &s);

} // namespace cka

#endif
