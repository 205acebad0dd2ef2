#ifndef CKA_DECISION_HPP
#define CKA_DECISION_HPP

#include "semilinear.hpp"
#include "trace.hpp"

#include <optional>

namespace cka {

/**
 * A split of some set relative to a reference linear set f: `inside` is
 * contained in f, `outside` is disjoint from it, and their union is the
 * original set.
 */
struct Decomposition {
  SemilinearSet inside;
  SemilinearSet outside;
};

struct DecisionOptions {
  bool want_trace = false;
  /**
   * Ceiling on the split recursions. All of them carry proven strictly
   * decreasing measures, so hitting the ceiling is a bug, reported loudly.
   */
  std::size_t max_depth = 64;
};

/**
 * No frame direction sees strictly mixed signs across the base: whenever one
 * base vector has a positive coordinate in a direction, none has a negative
 * one there.
 */
bool is_homogeneous(const LinearSet &t, const Frame &frame);

/**
 * Split a linear set into homogeneous pieces with the same union. Directions
 * are processed in frame order; within a direction, the first positive/first
 * negative pair in canonical base order is merged via a base-vector split,
 * which strictly lowers the number of base vectors touching that direction.
 */
std::vector<LinearSet> homogenize(const LinearSet &t, const Frame &frame,
                                  Trace *trace = nullptr);

/**
 * Decompose t relative to f when every base vector of t lies in the lattice
 * of f's base. The frame must be the one built from f's base.
 */
Decomposition compatible_decompose(const LinearSet &t, const LinearSet &f,
                                   const Frame &frame, Trace *trace = nullptr,
                                   const DecisionOptions &options = {});

/** Decompose a whole semilinear set relative to an unambiguous linear f. */
Decomposition base_split(const SemilinearSet &e, const LinearSet &f,
                         Trace *trace = nullptr,
                         const DecisionOptions &options = {});

struct DecisionResult {
  bool holds = false;
  std::optional<ParikhVector> counterexample;
  Trace trace;
};

/** Exact inclusion of semantics; on failure returns a verified witness. */
DecisionResult decide_leq(const ExprPtr &e, const ExprPtr &f,
                          std::size_t width,
                          const DecisionOptions &options = {});

/** Exact equivalence, via inclusion both ways. */
DecisionResult decide_eq(const ExprPtr &e, const ExprPtr &f, std::size_t width,
                         const DecisionOptions &options = {});

} // namespace cka

#endif
