#include "semilinear.hpp"

#include "trace.hpp"

#include <algorithm>

namespace cka {

LinearSet::LinearSet(ParikhVector offset, std::vector<ParikhVector> base)
    : offset_(std::move(offset)) {
  for (ParikhVector &v : base) {
    CKA_CHECK(v.width() == offset_.width(), "linear set width mismatch");
    if (!v.is_zero())
      base_.push_back(std::move(v));
  }
  std::sort(base_.begin(), base_.end());
  base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
}

int compare(const LinearSet &a, const LinearSet &b) {
  int c = compare(a.offset_, b.offset_);
  if (c != 0)
    return c;
  for (std::size_t i = 0; i < a.base_.size() && i < b.base_.size(); ++i) {
    c = compare(a.base_[i], b.base_[i]);
    if (c != 0)
      return c;
  }
  if (a.base_.size() != b.base_.size())
    return a.base_.size() < b.base_.size() ? -1 : 1;
  return 0;
}

SemilinearSet::SemilinearSet(std::vector<LinearSet> terms)
    : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end(),
                           [](const LinearSet &a, const LinearSet &b) {
                             return compare(a, b) == 0;
                           }),
               terms_.end());
}

bool SemilinearSet::operator==(const SemilinearSet &other) const {
  if (terms_.size() != other.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (compare(terms_[i], other.terms_[i]) != 0)
      return false;
  return true;
}

SemilinearSet unite(const SemilinearSet &a, const SemilinearSet &b) {
  std::vector<LinearSet> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return SemilinearSet(std::move(terms));
}

SemilinearSet minkowski(const SemilinearSet &a, const SemilinearSet &b) {
  std::vector<LinearSet> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const LinearSet &t : a.terms()) {
    for (const LinearSet &s : b.terms()) {
      std::vector<ParikhVector> base = t.base();
      base.insert(base.end(), s.base().begin(), s.base().end());
      terms.emplace_back(vec_add(t.offset(), s.offset()), std::move(base));
    }
  }
  return SemilinearSet(std::move(terms));
}

SemilinearSet offset_by(const ParikhVector &u, const SemilinearSet &s) {
  std::vector<LinearSet> terms;
  terms.reserve(s.terms().size());
  for (const LinearSet &t : s.terms())
    terms.emplace_back(vec_add(u, t.offset()), t.base());
  return SemilinearSet(std::move(terms));
}

SemilinearSet from_expr(const Expr &e, std::size_t width) {
  switch (e.kind()) {
  case Expr::Kind::zero:
    return SemilinearSet();
  case Expr::Kind::one:
    return SemilinearSet({LinearSet(ParikhVector(width), {})});
  case Expr::Kind::letter:
    return SemilinearSet(
        {LinearSet(ParikhVector::unit(width, e.letter()), {})});
  case Expr::Kind::join:
    return unite(from_expr(*e.left(), width), from_expr(*e.right(), width));
  case Expr::Kind::product:
    return minkowski(from_expr(*e.left(), width),
                     from_expr(*e.right(), width));
  case Expr::Kind::star: {
    // Union over subsets I of the operand's terms, built incrementally with
    // dedup at every step; the subset count is exponential by construction.
    SemilinearSet inner = from_expr(*e.left(), width);
    std::vector<LinearSet> acc{LinearSet(ParikhVector(width), {})};
    for (const LinearSet &t : inner.terms()) {
      std::vector<ParikhVector> generators = t.base();
      generators.push_back(t.offset());
      std::vector<LinearSet> next = acc;
      for (const LinearSet &s : acc) {
        std::vector<ParikhVector> base = s.base();
        base.insert(base.end(), generators.begin(), generators.end());
        next.emplace_back(vec_add(s.offset(), t.offset()), std::move(base));
      }
      acc = SemilinearSet(std::move(next)).terms();
    }
    return SemilinearSet(std::move(acc));
  }
  }
  throw InternalError("unreachable expression kind");
}

SemilinearSet expand_bounded_power(const ParikhVector &u,
                                   const ParikhVector &a, const Int &n,
                                   const std::vector<ParikhVector> &base) {
  if (sgn(n) < 0)
    throw UsageError("expand_bounded_power: negative bound");
  std::vector<LinearSet> terms;
  for (Int j = 0; j < n; ++j)
    terms.emplace_back(vec_add(u, scalar_mul(j, a)), base);
  return SemilinearSet(std::move(terms));
}

SemilinearSet base_vector_split(const std::vector<ParikhVector> &base,
                                const std::vector<Int> &point) {
  if (base.size() != point.size())
    throw UsageError("base_vector_split: point/base length mismatch");
  bool nonzero = false;
  for (const Int &p : point) {
    if (sgn(p) < 0)
      throw UsageError("base_vector_split: point coefficients must be naturals");
    if (sgn(p) > 0)
      nonzero = true;
  }
  if (!nonzero)
    throw UsageError("base_vector_split: point must be nonzero");

  ParikhVector w(base.front().width());
  for (std::size_t i = 0; i < base.size(); ++i)
    w = vec_add(w, scalar_mul(point[i], base[i]));

  std::vector<LinearSet> terms;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (sgn(point[i]) == 0)
      continue;
    std::vector<ParikhVector> others;
    others.reserve(base.size());
    others.push_back(w);
    for (std::size_t j = 0; j < base.size(); ++j)
      if (j != i)
        others.push_back(base[j]);
    for (Int j = 0; j < point[i]; ++j)
      terms.emplace_back(scalar_mul(j, base[i]), others);
  }
  return SemilinearSet(std::move(terms));
}

SemilinearSet reduce_dependent(const std::vector<ParikhVector> &base,
                               Trace *trace) {
  std::vector<ParikhVector> sorted = base;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto witness = integer_dependency(sorted);
  if (!witness)
    throw UsageError("reduce_dependent: base is independent");

  std::vector<ParikhVector> base_mu, base_nu, base_rest;
  std::vector<Int> coeff_mu, coeff_nu;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sgn(witness->mu.coeffs[i]) > 0) {
      base_mu.push_back(sorted[i]);
      coeff_mu.push_back(witness->mu.coeffs[i]);
    } else if (sgn(witness->nu.coeffs[i]) > 0) {
      base_nu.push_back(sorted[i]);
      coeff_nu.push_back(witness->nu.coeffs[i]);
    } else {
      base_rest.push_back(sorted[i]);
    }
  }
  CKA_CHECK(!base_mu.empty() && !base_nu.empty(),
            "dependency witness must have nonempty supports");

  SemilinearSet split_mu = base_vector_split(base_mu, coeff_mu);
  SemilinearSet split_nu = base_vector_split(base_nu, coeff_nu);
  if (trace) {
    std::size_t width = sorted.front().width();
    trace->record_set(
        "base-vector",
        SemilinearSet({LinearSet(ParikhVector(width), base_mu)}), split_mu);
    trace->record_set(
        "base-vector",
        SemilinearSet({LinearSet(ParikhVector(width), base_nu)}), split_nu);
  }
  SemilinearSet rest(
      {LinearSet(ParikhVector(sorted.front().width()), base_rest)});
  SemilinearSet result = minkowski(minkowski(split_mu, split_nu), rest);
  for (const LinearSet &t : result.terms())
    CKA_CHECK(t.dimension() < sorted.size(),
              "reduce_dependent did not shrink the dimension");
  return result;
}

SemilinearSet disambiguate(const SemilinearSet &s, Trace *trace) {
  std::vector<LinearSet> done;
  std::vector<LinearSet> work = s.terms();
  while (!work.empty()) {
    LinearSet t = std::move(work.back());
    work.pop_back();
    if (is_independent(t.base())) {
      done.push_back(std::move(t));
      continue;
    }
    SemilinearSet replaced = offset_by(t.offset(), reduce_dependent(t.base(), trace));
    if (trace)
      trace->record_set("dep-inf-dim", SemilinearSet({t}), replaced);
    for (const LinearSet &r : replaced.terms())
      work.push_back(r);
  }
  SemilinearSet result(std::move(done));
  for (const LinearSet &t : result.terms())
    CKA_CHECK(is_independent(t.base()), "disambiguate left a dependent base");
  return result;
}

bool member(const SemilinearSet &s, const ParikhVector &v) {
  for (const LinearSet &t : s.terms()) {
    if (!is_independent(t.base()))
      throw UsageError("member requires an unambiguous semilinear set");
    if (t.base().empty()) {
      if (t.offset() == v)
        return true;
      continue;
    }
    RatVector diff = to_rational(v);
    for (std::size_t i = 0; i < v.width(); ++i)
      diff[i] -= Rat(t.offset().count(i));
    std::vector<RatVector> columns;
    columns.reserve(t.base().size());
    for (const ParikhVector &b : t.base())
      columns.push_back(to_rational(b));
    auto solution = rat_solve(columns, diff);
    if (!solution)
      continue;
    bool natural = true;
    for (const Rat &c : *solution)
      if (sgn(c) < 0 || !rat_is_integer(c))
        natural = false;
    if (natural)
      return true;
  }
  return false;
}

bool is_empty(const SemilinearSet &s) { return s.terms().empty(); }

ExprPtr to_expr(const SemilinearSet &s) {
  if (s.terms().empty())
    return Expr::zero();
  ExprPtr out;
  for (const LinearSet &t : s.terms()) {
    ExprPtr term;
    if (!t.offset().is_zero() || t.base().empty())
      term = expr_of_vector(t.offset());
    for (const ParikhVector &b : t.base()) {
      ExprPtr factor = Expr::star(expr_of_vector(b));
      term = term ? Expr::product(std::move(term), std::move(factor))
                  : std::move(factor);
    }
    out = out ? Expr::join(std::move(out), std::move(term)) : std::move(term);
  }
  return out;
}

} // namespace cka
