#include "linalg.hpp"

#include <algorithm>

namespace cka {

namespace {

/**
 * In-place Gauss-Jordan over the first `cols` columns of `m` (rows may carry
 * extra augmented columns, which are transformed along). Returns the pivot
 * row chosen for each eliminated column, if any. Pivot order: columns left to
 * right, first row with a nonzero entry among the unused rows.
 */
std::vector<std::optional<std::size_t>>
gauss_jordan(std::vector<RatVector> &m, std::size_t cols) {
  std::vector<std::optional<std::size_t>> pivot_row(cols);
  std::vector<bool> row_used(m.size(), false);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = m.size();
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (!row_used[r] && sgn(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == m.size())
      continue; // free column
    row_used[pivot] = true;
    pivot_row[col] = pivot;
    Rat inv = m[pivot][col];
    for (Rat &x : m[pivot])
      x /= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot || sgn(m[r][col]) == 0)
        continue;
      Rat factor = m[r][col];
      for (std::size_t j = 0; j < m[r].size(); ++j)
        m[r][j] -= factor * m[pivot][j];
    }
  }
  return pivot_row;
}

std::vector<RatVector> columns_of(const std::vector<ParikhVector> &vectors,
                                  std::size_t width) {
  std::vector<RatVector> rows(width);
  for (std::size_t r = 0; r < width; ++r) {
    rows[r].reserve(vectors.size());
    for (const ParikhVector &v : vectors) {
      CKA_CHECK(v.width() == width, "vector width mismatch");
      rows[r].emplace_back(v.count(r));
    }
  }
  return rows;
}

/**
 * A nontrivial rational kernel vector of the column family, or absent when
 * the family is independent. Deterministic: built from the first free column.
 */
std::optional<RatVector> kernel_vector(const std::vector<ParikhVector> &vectors) {
  if (vectors.empty())
    return std::nullopt;
  std::size_t width = vectors.front().width();
  std::vector<RatVector> m = columns_of(vectors, width);
  auto pivot_row = gauss_jordan(m, vectors.size());
  std::size_t free_col = vectors.size();
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (!pivot_row[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == vectors.size())
    return std::nullopt;
  RatVector kernel(vectors.size(), Rat(0));
  kernel[free_col] = 1;
  for (std::size_t c = 0; c < vectors.size(); ++c)
    if (pivot_row[c])
      kernel[c] = -m[*pivot_row[c]][free_col];
  return kernel;
}

} // namespace

RatVector to_rational(const ParikhVector &v) {
  RatVector out;
  out.reserve(v.width());
  for (std::size_t i = 0; i < v.width(); ++i)
    out.emplace_back(v.count(i));
  return out;
}

std::optional<RatVector> rat_solve(const std::vector<RatVector> &columns,
                                   const RatVector &target) {
  std::size_t height = target.size();
  for (const RatVector &c : columns)
    if (c.size() != height)
      throw UsageError("rat_solve: dimension mismatch");
  std::vector<RatVector> m(height);
  for (std::size_t r = 0; r < height; ++r) {
    m[r].reserve(columns.size() + 1);
    for (const RatVector &c : columns)
      m[r].push_back(c[r]);
    m[r].push_back(target[r]);
  }
  auto pivot_row = gauss_jordan(m, columns.size());
  std::vector<bool> is_pivot_row(height, false);
  for (const auto &p : pivot_row)
    if (p)
      is_pivot_row[*p] = true;
  for (std::size_t r = 0; r < height; ++r) {
    if (is_pivot_row[r])
      continue;
    bool all_zero = true;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (sgn(m[r][c]) != 0)
        all_zero = false;
    if (all_zero && sgn(m[r][columns.size()]) != 0)
      return std::nullopt; // inconsistent
  }
  RatVector solution(columns.size(), Rat(0));
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (pivot_row[c])
      solution[c] = m[*pivot_row[c]][columns.size()];
  return solution;
}

bool is_independent(const std::vector<ParikhVector> &vectors) {
  return !kernel_vector(vectors).has_value();
}

std::optional<DependencyWitness>
integer_dependency(const std::vector<ParikhVector> &vectors) {
  auto kernel = kernel_vector(vectors);
  if (!kernel)
    return std::nullopt;
  Int scale = 1;
  for (const Rat &q : *kernel)
    scale = lcm(scale, q.get_den());
  DependencyWitness witness;
  witness.mu.base = vectors;
  witness.nu.base = vectors;
  witness.mu.coeffs.reserve(vectors.size());
  witness.nu.coeffs.reserve(vectors.size());
  for (const Rat &q : *kernel) {
    Rat scaled_q = q * scale;
    CKA_CHECK(rat_is_integer(scaled_q), "dependency scaling failed");
    Int z = scaled_q.get_num();
    if (sgn(z) > 0) {
      witness.mu.coeffs.push_back(z);
      witness.nu.coeffs.emplace_back(0);
    } else {
      witness.mu.coeffs.emplace_back(0);
      witness.nu.coeffs.push_back(-z);
    }
  }
  CKA_CHECK(witness.mu.coeffs != witness.nu.coeffs,
            "dependency witness is trivial");
  CKA_CHECK(witness.mu.to_vector() == witness.nu.to_vector(),
            "dependency witness sides differ");
  for (std::size_t i = 0; i < vectors.size(); ++i)
    CKA_CHECK(sgn(witness.mu.coeffs[i]) == 0 || sgn(witness.nu.coeffs[i]) == 0,
              "dependency witness supports overlap");
  return witness;
}

std::vector<ParikhVector> extend_basis(const std::vector<ParikhVector> &base,
                                       std::size_t width) {
  if (!is_independent(base))
    throw UsageError("extend_basis: base is not independent");
  std::vector<ParikhVector> working = base;
  std::vector<ParikhVector> added;
  for (std::size_t a = 0; a < width && working.size() < width; ++a) {
    ParikhVector candidate = ParikhVector::unit(width, a);
    working.push_back(candidate);
    if (is_independent(working))
      added.push_back(std::move(candidate));
    else
      working.pop_back();
  }
  CKA_CHECK(working.size() == width, "extend_basis failed to reach full rank");
  CKA_CHECK(is_independent(working), "extended family not independent");
  return added;
}

Frame::Frame(std::vector<ParikhVector> base, std::size_t width)
    : width_(width), base_(std::move(base)) {
  for (const ParikhVector &v : base_)
    if (v.width() != width_)
      throw UsageError("frame base width mismatch");
  extension_ = extend_basis(base_, width_);

  // Invert the matrix whose columns are the frame directions via [M | I].
  std::vector<RatVector> m(width_, RatVector(2 * width_, Rat(0)));
  for (std::size_t r = 0; r < width_; ++r) {
    for (std::size_t c = 0; c < width_; ++c)
      m[r][c] = Rat(direction(c).count(r));
    m[r][width_ + r] = 1;
  }
  for (std::size_t col = 0; col < width_; ++col) {
    std::size_t pivot = col;
    while (pivot < width_ && sgn(m[pivot][col]) == 0)
      ++pivot;
    CKA_CHECK(pivot < width_, "frame matrix is singular");
    std::swap(m[col], m[pivot]);
    Rat inv = m[col][col];
    for (Rat &x : m[col])
      x /= inv;
    for (std::size_t r = 0; r < width_; ++r) {
      if (r == col || sgn(m[r][col]) == 0)
        continue;
      Rat factor = m[r][col];
      for (std::size_t j = 0; j < 2 * width_; ++j)
        m[r][j] -= factor * m[col][j];
    }
  }
  inverse_.assign(width_, RatVector(width_, Rat(0)));
  for (std::size_t r = 0; r < width_; ++r)
    for (std::size_t c = 0; c < width_; ++c)
      inverse_[r][c] = m[r][width_ + c];
}

const ParikhVector &Frame::direction(std::size_t i) const {
  CKA_CHECK(i < width_, "frame direction out of range");
  return i < base_.size() ? base_[i] : extension_[i - base_.size()];
}

RatVector Frame::coordinates(const ParikhVector &v) const {
  if (v.width() != width_)
    throw UsageError("coordinates: vector width does not match frame");
  RatVector out(width_, Rat(0));
  for (std::size_t r = 0; r < width_; ++r) {
    Rat sum(0);
    for (std::size_t c = 0; c < width_; ++c) {
      if (sgn(inverse_[r][c]) == 0 || sgn(v.count(c)) == 0)
        continue;
      sum += inverse_[r][c] * Rat(v.count(c));
    }
    out[r] = sum;
  }
  return out;
}

} // namespace cka
