#ifndef CKA_LINALG_HPP
#define CKA_LINALG_HPP

#include "parikh.hpp"

#include <optional>
#include <vector>

namespace cka {

RatVector to_rational(const ParikhVector &v);

/**
 * Solve sum_i c_i * columns_i = target over the rationals.
 *
 * Plain rational Gauss-Jordan, first-nonzero pivot, columns processed in
 * input order; free variables are set to 0, so an independent column family
 * yields the unique solution.
 */
std::optional<RatVector> rat_solve(const std::vector<RatVector> &columns,
                                   const RatVector &target);

/** True iff no nontrivial rational combination of the vectors is zero. */
bool is_independent(const std::vector<ParikhVector> &vectors);

/**
 * Two distinct points over the same base with equal interpretations and
 * disjoint supports (per index, at least one of mu_i, nu_i is zero).
 */
struct DependencyWitness {
  Point mu;
  Point nu;
};

/**
 * Absent iff the vectors are independent. Otherwise a rational dependency is
 * scaled by the least common multiple of its denominators; positive
 * coefficients go to mu, negated non-positive ones to nu.
 */
std::optional<DependencyWitness>
integer_dependency(const std::vector<ParikhVector> &vectors);

/**
 * Complete an independent family to a basis of the rational span of the
 * alphabet, drawing greedily from the canonical letter vectors in alphabet
 * order. Returns only the added vectors.
 */
std::vector<ParikhVector> extend_basis(const std::vector<ParikhVector> &base,
                                       std::size_t width);

/**
 * An independent base completed to a full rational basis, with a precomputed
 * inverse for coordinate lookups. Directions are indexed base-first: indices
 * below base_size() belong to the base, the rest to the extension.
 */
class Frame {
public:
  Frame(std::vector<ParikhVector> base, std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t base_size() const { return base_.size(); }
  const std::vector<ParikhVector> &base() const { return base_; }
  const std::vector<ParikhVector> &extension() const { return extension_; }
  const ParikhVector &direction(std::size_t i) const;
  bool direction_in_base(std::size_t i) const { return i < base_.size(); }

  /** The unique rational coordinates c with sum_i c_i * direction_i = v. */
  RatVector coordinates(const ParikhVector &v) const;

private:
  std::size_t width_;
  std::vector<ParikhVector> base_;
  std::vector<ParikhVector> extension_;
  std::vector<RatVector> inverse_; // width_ x width_, row-major
};

} // namespace cka

#endif
