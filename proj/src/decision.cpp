#include "decision.hpp"

#include <algorithm>
#include <sstream>

namespace cka {

namespace {

std::vector<RatVector> base_coordinates(const LinearSet &t,
                                        const Frame &frame) {
  std::vector<RatVector> coords;
  coords.reserve(t.base().size());
  for (const ParikhVector &b : t.base())
    coords.push_back(frame.coordinates(b));
  return coords;
}

SemilinearSet singleton(const LinearSet &t) { return SemilinearSet({t}); }

/**
 * Membership range of f = v + B* in frame coordinates: a vector w belongs to
 * f iff coord(w - v) is a natural number on every base direction and zero on
 * every extension direction.
 */
struct CompatibilityReport {
  bool feasible = true;
  Int witness_scale = 0; // uniform coefficient realising a common vector
};

CompatibilityReport analyse_intersection(const RatVector &cu,
                                         const RatVector &cv,
                                         const std::vector<RatVector> &coords,
                                         const Frame &frame) {
  CompatibilityReport report;
  Int max_deficit = 0;
  for (std::size_t dir = 0; dir < frame.width(); ++dir) {
    Rat c = cu[dir] - cv[dir];
    if (!frame.direction_in_base(dir)) {
      if (sgn(c) != 0) {
        report.feasible = false;
        return report;
      }
      continue;
    }
    if (!rat_is_integer(c)) {
      report.feasible = false;
      return report;
    }
    if (sgn(c) < 0) {
      bool coverable = false;
      for (const RatVector &a : coords)
        if (sgn(a[dir]) > 0)
          coverable = true;
      if (!coverable) {
        report.feasible = false;
        return report;
      }
      Int deficit = -c.get_num();
      if (deficit > max_deficit)
        max_deficit = deficit;
    }
  }
  report.witness_scale = max_deficit;
  return report;
}

Decomposition
compatible_decompose_impl(const LinearSet &t, const LinearSet &f,
                          const Frame &frame, Trace *trace,
                          const DecisionOptions &options, std::size_t depth) {
  if (depth > options.max_depth)
    throw InternalError("compatible_decompose exceeded the recursion ceiling");

  std::vector<RatVector> coords = base_coordinates(t, frame);
  for (const RatVector &a : coords) {
    for (std::size_t dir = 0; dir < frame.width(); ++dir) {
      bool ok = frame.direction_in_base(dir)
                    ? sgn(a[dir]) >= 0 && rat_is_integer(a[dir])
                    : sgn(a[dir]) == 0;
      if (!ok)
        throw UsageError(
            "compatible_decompose: base vector outside the reference lattice");
    }
  }

  RatVector cu = frame.coordinates(t.offset());
  RatVector cv = frame.coordinates(f.offset());
  CompatibilityReport report = analyse_intersection(cu, cv, coords, frame);

  Decomposition result;
  if (!report.feasible) {
    result.outside = singleton(t);
  } else if (t.base().empty()) {
    result.inside = singleton(t);
  } else {
    const Int &scale = report.witness_scale;
    ParikhVector common = t.offset();
    for (const ParikhVector &a : t.base())
      common = vec_add(common, scalar_mul(scale, a));
    result.inside = singleton(LinearSet(common, t.base()));

    // Proper subsets of the base, with bounded-power offsets for the dropped
    // vectors; each recursion strictly shrinks the base.
    std::vector<std::pair<ParikhVector, std::vector<ParikhVector>>> pending;
    if (sgn(scale) > 0) {
      std::size_t n = t.base().size();
      for (std::size_t mask = 0; mask + 1 < (std::size_t(1) << n); ++mask) {
        std::vector<ParikhVector> kept;
        ParikhVector start = t.offset();
        std::vector<std::size_t> dropped;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (std::size_t(1) << i)) {
            kept.push_back(t.base()[i]);
            start = vec_add(start, scalar_mul(scale, t.base()[i]));
          } else {
            dropped.push_back(i);
          }
        }
        std::vector<ParikhVector> offsets = {start};
        for (std::size_t i : dropped) {
          std::vector<ParikhVector> next;
          for (const ParikhVector &o : offsets)
            for (Int j = 0; j < scale; ++j)
              next.push_back(vec_add(o, scalar_mul(j, t.base()[i])));
          offsets = std::move(next);
        }
        for (ParikhVector &o : offsets)
          pending.emplace_back(std::move(o), kept);
      }
    }
    if (trace && !pending.empty()) {
      std::vector<LinearSet> expansion_view = {result.inside.terms().front()};
      for (const auto &[offset, kept] : pending)
        expansion_view.emplace_back(offset, kept);
      trace->record_set("n-or-more", singleton(t),
                        SemilinearSet(std::move(expansion_view)));
    }
    for (auto &[offset, kept] : pending) {
      Decomposition sub = compatible_decompose_impl(
          LinearSet(std::move(offset), std::move(kept)), f, frame, trace,
          options, depth + 1);
      result.inside = unite(result.inside, sub.inside);
      result.outside = unite(result.outside, sub.outside);
    }
  }

  if (trace)
    trace->record_set("dec-compatible", singleton(t),
                      unite(result.inside, result.outside));
  return result;
}

/** lcm of the denominators of the base-direction coordinates. */
Int integrality_scale(const RatVector &coords, const Frame &frame) {
  Int scale = 1;
  for (std::size_t dir = 0; dir < frame.base_size(); ++dir)
    scale = lcm(scale, coords[dir].get_den());
  return scale;
}

/**
 * Whole-term separation test: true when some frame direction pins all of
 * u + A* strictly outside f's membership range, so no splitting is needed.
 * This is the same coordinate argument the dimension-reducing split ends
 * with, applied upfront; without it, terms already disjoint from f would
 * still be shredded into exponentially many sub-terms.
 */
bool separated_from(const LinearSet &t, const LinearSet &f,
                    const std::vector<RatVector> &coords, const Frame &frame) {
  RatVector cu = frame.coordinates(t.offset());
  RatVector cv = frame.coordinates(f.offset());
  for (std::size_t dir = 0; dir < frame.width(); ++dir) {
    bool none_positive = true, none_negative = true, all_integer = true;
    for (const RatVector &a : coords) {
      int s = sgn(a[dir]);
      if (s > 0)
        none_positive = false;
      if (s < 0)
        none_negative = false;
      if (!rat_is_integer(a[dir]))
        all_integer = false;
    }
    if (cu[dir] < cv[dir] && none_positive)
      return true; // every reachable coordinate stays below the range
    if (!frame.direction_in_base(dir) && cu[dir] > cv[dir] && none_negative)
      return true; // stays above an exact-zero requirement
    if (frame.direction_in_base(dir) && all_integer &&
        !rat_is_integer(cu[dir] - cv[dir]))
      return true; // integrality can never be repaired
  }
  return false;
}

Decomposition split_homogeneous(const LinearSet &t, const LinearSet &f,
                                const Frame &frame, Trace *trace,
                                const DecisionOptions &options,
                                std::size_t depth) {
  if (depth > options.max_depth)
    throw InternalError("base_split exceeded the recursion ceiling");

  std::vector<RatVector> coords = base_coordinates(t, frame);

  if (separated_from(t, f, coords, frame)) {
    Decomposition result;
    result.outside = singleton(t);
    return result;
  }

  // Case 1: every base vector already lives in the rational cone of f's
  // base. Rescale each generator to integer coordinates and hand the
  // resulting compatible terms over.
  bool compatible_cone = true;
  for (const RatVector &a : coords)
    for (std::size_t dir = 0; dir < frame.width() && compatible_cone; ++dir)
      if (frame.direction_in_base(dir) ? sgn(a[dir]) < 0 : sgn(a[dir]) != 0)
        compatible_cone = false;

  if (compatible_cone) {
    std::vector<ParikhVector> scaled;
    scaled.reserve(t.base().size());
    std::vector<ParikhVector> offsets = {t.offset()};
    for (std::size_t i = 0; i < t.base().size(); ++i) {
      Int n = integrality_scale(coords[i], frame);
      scaled.push_back(scalar_mul(n, t.base()[i]));
      std::vector<ParikhVector> next;
      for (const ParikhVector &o : offsets)
        for (Int j = 0; j < n; ++j)
          next.push_back(vec_add(o, scalar_mul(j, t.base()[i])));
      offsets = std::move(next);
    }
    std::vector<LinearSet> compatible_terms;
    compatible_terms.reserve(offsets.size());
    for (const ParikhVector &o : offsets)
      compatible_terms.emplace_back(o, scaled);
    if (trace && !(offsets.size() == 1 && compatible_terms.front() == t))
      trace->record_set("first-iterates", singleton(t),
                        SemilinearSet(compatible_terms));
    Decomposition result;
    for (const LinearSet &c : compatible_terms) {
      Decomposition sub =
          compatible_decompose_impl(c, f, frame, trace, options, depth + 1);
      result.inside = unite(result.inside, sub.inside);
      result.outside = unite(result.outside, sub.outside);
    }
    return result;
  }

  // Case 2: some generator leaves the cone in some direction. Split off a
  // bounded power (strictly smaller dimension) plus a shifted tail that the
  // chosen direction separates from f entirely.
  std::size_t split_dir = frame.width();
  std::size_t split_vec = t.base().size();
  for (std::size_t dir = 0; dir < frame.width() && split_dir == frame.width();
       ++dir) {
    for (std::size_t i = 0; i < t.base().size(); ++i) {
      bool violates = frame.direction_in_base(dir)
                          ? sgn(coords[i][dir]) < 0
                          : sgn(coords[i][dir]) != 0;
      if (violates) {
        split_dir = dir;
        split_vec = i;
        break;
      }
    }
  }
  CKA_CHECK(split_dir < frame.width(), "case analysis missed a violation");

  const ParikhVector &d = t.base()[split_vec];
  const Rat &cd = coords[split_vec][split_dir];
  Rat cu = frame.coordinates(t.offset())[split_dir];
  Rat cv = frame.coordinates(f.offset())[split_dir];

  // Smallest N >= 1 pushing the tail offset strictly past f's membership
  // range in this direction.
  Int steps;
  if (sgn(cd) < 0)
    steps = rat_floor((cu - cv) / (-cd));
  else
    steps = rat_floor((cv - cu) / cd);
  Int n = 1 + std::max(Int(0), steps);

  std::vector<ParikhVector> rest;
  for (std::size_t i = 0; i < t.base().size(); ++i)
    if (i != split_vec)
      rest.push_back(t.base()[i]);
  SemilinearSet bounded = expand_bounded_power(t.offset(), d, n, rest);
  LinearSet tail(vec_add(t.offset(), scalar_mul(n, d)), t.base());

  // The separation must be visible in coordinates alone: the tail offset is
  // strictly past cv, and every generator keeps it on that side.
  Rat tail_coord = frame.coordinates(tail.offset())[split_dir];
  if (sgn(cd) < 0) {
    CKA_CHECK(tail_coord < cv, "case-2 tail not separated (negative side)");
    for (const RatVector &a : coords)
      CKA_CHECK(sgn(a[split_dir]) <= 0, "case-2 generator crosses back");
  } else {
    CKA_CHECK(tail_coord > cv, "case-2 tail not separated (positive side)");
    for (const RatVector &a : coords)
      CKA_CHECK(sgn(a[split_dir]) >= 0, "case-2 generator crosses back");
  }

  if (trace) {
    std::ostringstream note;
    note << "direction " << split_dir << ", bound " << n.get_str();
    trace->record_set("n-or-more", singleton(t),
                      unite(bounded, singleton(tail)), note.str());
  }

  Decomposition result;
  result.outside = singleton(tail);
  for (const LinearSet &sub : bounded.terms()) {
    Decomposition part =
        split_homogeneous(sub, f, frame, trace, options, depth + 1);
    result.inside = unite(result.inside, part.inside);
    result.outside = unite(result.outside, part.outside);
  }
  return result;
}

} // namespace

bool is_homogeneous(const LinearSet &t, const Frame &frame) {
  std::vector<RatVector> coords = base_coordinates(t, frame);
  for (std::size_t dir = 0; dir < frame.width(); ++dir) {
    bool positive = false, negative = false;
    for (const RatVector &a : coords) {
      if (sgn(a[dir]) > 0)
        positive = true;
      else if (sgn(a[dir]) < 0)
        negative = true;
    }
    if (positive && negative)
      return false;
  }
  return true;
}

std::vector<LinearSet> homogenize(const LinearSet &t, const Frame &frame,
                                  Trace *trace) {
  std::vector<LinearSet> work = {t};
  for (std::size_t dir = 0; dir < frame.width(); ++dir) {
    std::vector<LinearSet> settled;
    while (!work.empty()) {
      LinearSet cur = std::move(work.back());
      work.pop_back();
      std::vector<RatVector> coords = base_coordinates(cur, frame);
      std::size_t pos = cur.base().size(), neg = cur.base().size();
      for (std::size_t i = 0; i < cur.base().size(); ++i) {
        if (pos == cur.base().size() && sgn(coords[i][dir]) > 0)
          pos = i;
        if (neg == cur.base().size() && sgn(coords[i][dir]) < 0)
          neg = i;
      }
      if (pos == cur.base().size() || neg == cur.base().size()) {
        settled.push_back(std::move(cur));
        continue;
      }
      // Merge the pair into a direction-neutral generator; n/m come from the
      // coordinate ratio in lowest terms, so both scores drop by one.
      Rat ratio = -coords[neg][dir] / coords[pos][dir];
      std::vector<Int> point(cur.base().size(), Int(0));
      point[pos] = ratio.get_num();
      point[neg] = ratio.get_den();
      SemilinearSet replaced =
          offset_by(cur.offset(), base_vector_split(cur.base(), point));
      if (trace) {
        std::ostringstream note;
        note << "direction " << dir;
        trace->record_set("homogeneous", singleton(cur), replaced, note.str());
      }
      for (const LinearSet &r : replaced.terms())
        work.push_back(r);
    }
    work = std::move(settled);
  }
  for (const LinearSet &h : work)
    CKA_CHECK(is_homogeneous(h, frame), "homogenize left a mixed direction");
  return work;
}

Decomposition compatible_decompose(const LinearSet &t, const LinearSet &f,
                                   const Frame &frame, Trace *trace,
                                   const DecisionOptions &options) {
  return compatible_decompose_impl(t, f, frame, trace, options, 0);
}

Decomposition base_split(const SemilinearSet &e, const LinearSet &f,
                         Trace *trace, const DecisionOptions &options) {
  if (!is_independent(f.base()))
    throw UsageError("base_split: reference term must be unambiguous");
  Frame frame(f.base(), f.width());
  Decomposition result;
  for (const LinearSet &t : e.terms()) {
    for (const LinearSet &h : homogenize(t, frame, trace)) {
      Decomposition part = split_homogeneous(h, f, frame, trace, options, 0);
      result.inside = unite(result.inside, part.inside);
      result.outside = unite(result.outside, part.outside);
    }
  }
  if (trace)
    trace->record_set("baseSplit", e,
                      unite(result.inside, result.outside));
  return result;
}

DecisionResult decide_leq(const ExprPtr &e, const ExprPtr &f,
                          std::size_t width, const DecisionOptions &options) {
  if (!e || !f)
    throw UsageError("decide_leq: null expression");
  DecisionResult result;
  Trace *trace = options.want_trace ? &result.trace : nullptr;

  SemilinearSet right_raw = from_expr(*f, width);
  if (trace)
    trace->record_expr("decomp", f, to_expr(right_raw), "right-hand side");
  SemilinearSet right = disambiguate(right_raw, trace);

  SemilinearSet left_raw = from_expr(*e, width);
  if (trace)
    trace->record_expr("decomp", e, to_expr(left_raw), "left-hand side");
  SemilinearSet left = disambiguate(left_raw, trace);

  SemilinearSet remainder = left;
  for (std::size_t i = 0; i < right.terms().size(); ++i) {
    if (is_empty(remainder))
      break;
    Decomposition split =
        base_split(remainder, right.terms()[i], trace, options);
    if (trace) {
      std::ostringstream note;
      note << "reference term " << i;
      trace->record_set("decision-loop", remainder,
                        unite(split.inside, split.outside), note.str());
    }
    remainder = split.outside;
  }

  if (is_empty(remainder)) {
    result.holds = true;
    return result;
  }
  ParikhVector witness = remainder.terms().front().offset();
  CKA_CHECK(member(left, witness),
            "counterexample fell outside the left normal form");
  CKA_CHECK(!member(right, witness),
            "counterexample landed inside the right normal form");
  result.holds = false;
  result.counterexample = std::move(witness);
  return result;
}

DecisionResult decide_eq(const ExprPtr &e, const ExprPtr &f, std::size_t width,
                         const DecisionOptions &options) {
  DecisionResult forward = decide_leq(e, f, width, options);
  if (!forward.holds)
    return forward;
  DecisionResult backward = decide_leq(f, e, width, options);
  DecisionResult result = std::move(backward);
  Trace combined = std::move(forward.trace);
  combined.append(std::move(result.trace));
  result.trace = std::move(combined);
  return result;
}

} // namespace cka
