#ifndef CKA_TESTS_HELPERS_HPP
#define CKA_TESTS_HELPERS_HPP

#include "decision.hpp"

#include <vector>

namespace cka::testsupport {

inline ParikhVector vec(const std::vector<long> &counts) {
  std::vector<Int> c;
  c.reserve(counts.size());
  for (long x : counts)
    c.emplace_back(x);
  return ParikhVector(std::move(c));
}

inline LinearSet lin(const std::vector<long> &offset,
                     const std::vector<std::vector<long>> &base) {
  std::vector<ParikhVector> b;
  b.reserve(base.size());
  for (const auto &v : base)
    b.push_back(vec(v));
  return LinearSet(vec(offset), std::move(b));
}

inline SemilinearSet sls(std::vector<LinearSet> terms) {
  return SemilinearSet(std::move(terms));
}

/** Every vector of total degree <= degree, in canonical order. */
inline std::vector<ParikhVector> all_vectors(std::size_t width,
                                             unsigned degree) {
  std::vector<ParikhVector> out;
  std::vector<Int> current(width, Int(0));
  auto rec = [&](auto &&self, std::size_t i, unsigned remaining) -> void {
    if (i == width) {
      out.emplace_back(current);
      return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
      current[i] = c;
      self(self, i + 1, remaining - c);
    }
    current[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

/** Truncated semantics of a semilinear set, through its defining shape. */
inline VectorSet semantics_of(const SemilinearSet &s, std::size_t width,
                              unsigned degree) {
  return bounded_semantics(*to_expr(s), width, degree);
}

/** Truncated semantics through exact membership instead of enumeration. */
inline VectorSet member_enumeration(const SemilinearSet &s, std::size_t width,
                                    unsigned degree) {
  VectorSet out;
  for (const ParikhVector &v : all_vectors(width, degree))
    if (member(s, v))
      out.insert(v);
  return out;
}

inline bool subset_of(const VectorSet &a, const VectorSet &b) {
  for (const ParikhVector &v : a)
    if (!b.count(v))
      return false;
  return true;
}

inline bool disjoint(const VectorSet &a, const VectorSet &b) {
  for (const ParikhVector &v : a)
    if (b.count(v))
      return false;
  return true;
}

inline VectorSet unioned(VectorSet a, const VectorSet &b) {
  a.insert(b.begin(), b.end());
  return a;
}

/** Oracle-equality of a recorded trace step at the given degree. */
inline bool step_is_sound(const TraceStep &step, std::size_t width,
                          unsigned degree) {
  if (step.before.index() != step.after.index())
    return false;
  if (const ExprPtr *before = std::get_if<ExprPtr>(&step.before)) {
    const ExprPtr &after = std::get<ExprPtr>(step.after);
    return bounded_semantics(**before, width, degree) ==
           bounded_semantics(*after, width, degree);
  }
  const SemilinearSet &before = std::get<SemilinearSet>(step.before);
  const SemilinearSet &after = std::get<SemilinearSet>(step.after);
  return semantics_of(before, width, degree) ==
         semantics_of(after, width, degree);
}

} // namespace cka::testsupport

#endif
