#include "parikh.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cka {

Alphabet::Alphabet(std::vector<char> letters) : letters_(std::move(letters)) {
  if (letters_.empty())
    throw UsageError("alphabet must not be empty");
  for (char c : letters_) {
    if (c < 'a' || c > 'z')
      throw UsageError(std::string("letter '") + c +
                       "' is not a lowercase letter");
    if (std::count(letters_.begin(), letters_.end(), c) != 1)
      throw UsageError(std::string("duplicate letter '") + c +
                       "' in alphabet");
  }
}

Alphabet Alphabet::from_csv(std::string_view csv) {
  std::vector<char> letters;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string_view item = csv.substr(
        start, comma == std::string_view::npos ? csv.size() - start
                                               : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (item.size() != 1)
      throw UsageError("alphabet entries must be single letters, got '" +
                       std::string(item) + "'");
    letters.push_back(item.front());
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return Alphabet(std::move(letters));
}

std::optional<std::size_t> Alphabet::index_of(char c) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == c)
      return i;
  return std::nullopt;
}

ParikhVector::ParikhVector(std::vector<Int> counts)
    : counts_(std::move(counts)) {
  for (const Int &c : counts_)
    CKA_CHECK(sgn(c) >= 0, "Parikh vector counts must be naturals");
}

ParikhVector ParikhVector::unit(std::size_t width, std::size_t letter) {
  CKA_CHECK(letter < width, "letter index out of range");
  ParikhVector v(width);
  v.counts_[letter] = 1;
  return v;
}

void ParikhVector::set_count(std::size_t i, Int value) {
  CKA_CHECK(sgn(value) >= 0, "Parikh vector counts must be naturals");
  counts_[i] = std::move(value);
}

Int ParikhVector::total_degree() const {
  Int sum = 0;
  for (const Int &c : counts_)
    sum += c;
  return sum;
}

bool ParikhVector::is_zero() const {
  for (const Int &c : counts_)
    if (sgn(c) != 0)
      return false;
  return true;
}

int compare(const ParikhVector &u, const ParikhVector &v) {
  CKA_CHECK(u.width() == v.width(), "comparing vectors of different widths");
  for (std::size_t i = 0; i < u.width(); ++i) {
    int c = cmp(u.counts_[i], v.counts_[i]);
    if (c != 0)
      return c;
  }
  return 0;
}

ParikhVector vec_add(const ParikhVector &u, const ParikhVector &v) {
  if (u.width() != v.width())
    throw UsageError("alphabet mismatch in vector addition");
  ParikhVector out(u.width());
  for (std::size_t i = 0; i < u.width(); ++i)
    out.set_count(i, u.count(i) + v.count(i));
  return out;
}

ParikhVector scalar_mul(const Int &n, const ParikhVector &v) {
  CKA_CHECK(sgn(n) >= 0, "scalar must be a natural number");
  ParikhVector out(v.width());
  for (std::size_t i = 0; i < v.width(); ++i)
    out.set_count(i, n * v.count(i));
  return out;
}

ParikhVector Point::to_vector() const {
  CKA_CHECK(base.size() == coeffs.size(), "point/base length mismatch");
  if (base.empty())
    throw UsageError("cannot interpret a point over an empty base without a width");
  ParikhVector sum(base.front().width());
  for (std::size_t i = 0; i < base.size(); ++i)
    sum = vec_add(sum, scalar_mul(coeffs[i], base[i]));
  return sum;
}

std::string format_monomial(const Alphabet &alphabet, const ParikhVector &v) {
  CKA_CHECK(alphabet.size() == v.width(), "alphabet/vector width mismatch");
  if (v.is_zero())
    return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.width(); ++i) {
    if (sgn(v.count(i)) == 0)
      continue;
    if (!first)
      out << ' ';
    first = false;
    out << alphabet.letter(i);
    if (v.count(i) != 1)
      out << '^' << v.count(i).get_str();
  }
  return out.str();
}

ParikhVector parse_monomial(const Alphabet &alphabet, std::string_view text) {
  ParikhVector v(alphabet.size());
  std::size_t pos = 0;
  bool saw_item = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '1') {
      saw_item = true;
      ++pos;
      continue;
    }
    auto idx = alphabet.index_of(c);
    if (!idx)
      throw ParseError(std::string("unknown letter '") + c + "' in monomial",
                       pos);
    ++pos;
    Int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t digits_start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == digits_start)
        throw ParseError("expected digits after '^'", pos);
      exponent = Int(std::string(text.substr(digits_start, pos - digits_start)));
    }
    v.set_count(*idx, v.count(*idx) + exponent);
    saw_item = true;
  }
  if (!saw_item)
    throw ParseError("empty monomial", 0);
  return v;
}

} // namespace cka
