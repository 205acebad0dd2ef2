#include "expr.hpp"

#include <cctype>
#include <deque>

namespace cka {

std::size_t Expr::letter() const {
  CKA_CHECK(kind_ == Kind::letter, "not a letter node");
  return letter_;
}

const ExprPtr &Expr::left() const {
  CKA_CHECK(left_ != nullptr, "node has no operand");
  return left_;
}

const ExprPtr &Expr::right() const {
  CKA_CHECK(right_ != nullptr, "node has no right operand");
  return right_;
}

ExprPtr Expr::zero() {
  static const ExprPtr instance(new Expr(Kind::zero, 0, nullptr, nullptr));
  return instance;
}

ExprPtr Expr::one() {
  static const ExprPtr instance(new Expr(Kind::one, 0, nullptr, nullptr));
  return instance;
}

ExprPtr Expr::letter(std::size_t index) {
  return ExprPtr(new Expr(Kind::letter, index, nullptr, nullptr));
}

ExprPtr Expr::product(ExprPtr l, ExprPtr r) {
  CKA_CHECK(l && r, "product operands must not be null");
  return ExprPtr(new Expr(Kind::product, 0, std::move(l), std::move(r)));
}

ExprPtr Expr::join(ExprPtr l, ExprPtr r) {
  CKA_CHECK(l && r, "join operands must not be null");
  return ExprPtr(new Expr(Kind::join, 0, std::move(l), std::move(r)));
}

ExprPtr Expr::star(ExprPtr operand) {
  CKA_CHECK(operand != nullptr, "star operand must not be null");
  return ExprPtr(new Expr(Kind::star, 0, std::move(operand), nullptr));
}

bool structurally_equal(const Expr &a, const Expr &b) {
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
  case Expr::Kind::zero:
  case Expr::Kind::one:
    return true;
  case Expr::Kind::letter:
    return a.letter() == b.letter();
  case Expr::Kind::star:
    return structurally_equal(*a.left(), *b.left());
  case Expr::Kind::product:
  case Expr::Kind::join:
    return structurally_equal(*a.left(), *b.left()) &&
           structurally_equal(*a.right(), *b.right());
  }
  return false;
}

std::size_t node_count(const Expr &e) {
  switch (e.kind()) {
  case Expr::Kind::zero:
  case Expr::Kind::one:
  case Expr::Kind::letter:
    return 1;
  case Expr::Kind::star:
    return 1 + node_count(*e.left());
  case Expr::Kind::product:
  case Expr::Kind::join:
    return 1 + node_count(*e.left()) + node_count(*e.right());
  }
  return 1;
}

namespace {

constexpr unsigned long kMaxExponent = 100000;

struct Parser {
  const Alphabet &alphabet;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return text[pos];
  }

  ExprPtr parse_union() {
    ExprPtr e = parse_term();
    while (!at_end() && peek() == '+') {
      ++pos;
      e = Expr::join(std::move(e), parse_term());
    }
    return e;
  }

  static bool starts_atom(char c) {
    return c == '0' || c == '1' || c == '(' || (c >= 'a' && c <= 'z');
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (!at_end()) {
      char c = peek();
      if (c == '.') {
        ++pos;
        e = Expr::product(std::move(e), parse_factor());
      } else if (starts_atom(c)) {
        e = Expr::product(std::move(e), parse_factor());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_atom();
    while (!at_end()) {
      char c = peek();
      if (c == '*') {
        ++pos;
        e = Expr::star(std::move(e));
      } else if (c == '^') {
        ++pos;
        unsigned long n = parse_exponent();
        ExprPtr expanded = Expr::one();
        for (unsigned long i = 0; i < n; ++i)
          expanded = i == 0 ? e : Expr::product(std::move(expanded), e);
        e = std::move(expanded);
      } else {
        break;
      }
    }
    return e;
  }

  unsigned long parse_exponent() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw ParseError("expected a number after '^'", start);
    unsigned long n = 0;
    for (std::size_t i = start; i < pos; ++i) {
      n = n * 10 + static_cast<unsigned long>(text[i] - '0');
      if (n > kMaxExponent)
        throw ParseError("exponent too large", start);
    }
    return n;
  }

  ExprPtr parse_atom() {
    if (at_end())
      throw ParseError("expected an expression", pos);
    char c = text[pos];
    if (c == '0') {
      ++pos;
      return Expr::zero();
    }
    if (c == '1') {
      ++pos;
      return Expr::one();
    }
    if (c == '(') {
      ++pos;
      ExprPtr e = parse_union();
      if (at_end() || text[pos] != ')')
        throw ParseError("expected ')'", pos);
      ++pos;
      return e;
    }
    if (c >= 'a' && c <= 'z') {
      auto idx = alphabet.index_of(c);
      if (!idx)
        throw ParseError(std::string("unknown letter '") + c + "'", pos);
      ++pos;
      return Expr::letter(*idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

int precedence(Expr::Kind k) {
  switch (k) {
  case Expr::Kind::join:
    return 1;
  case Expr::Kind::product:
    return 2;
  case Expr::Kind::star:
    return 3;
  default:
    return 4;
  }
}

void print_rec(std::string &out, const Alphabet &alphabet, const Expr &e,
               int min_prec) {
  bool parens = precedence(e.kind()) < min_prec;
  if (parens)
    out += '(';
  switch (e.kind()) {
  case Expr::Kind::zero:
    out += '0';
    break;
  case Expr::Kind::one:
    out += '1';
    break;
  case Expr::Kind::letter:
    out += alphabet.letter(e.letter());
    break;
  case Expr::Kind::star:
    print_rec(out, alphabet, *e.left(), 3);
    out += '*';
    break;
  case Expr::Kind::product:
    print_rec(out, alphabet, *e.left(), 2);
    out += ' ';
    print_rec(out, alphabet, *e.right(), 3);
    break;
  case Expr::Kind::join:
    print_rec(out, alphabet, *e.left(), 1);
    out += '+';
    print_rec(out, alphabet, *e.right(), 2);
    break;
  }
  if (parens)
    out += ')';
}

} // namespace

ExprPtr parse_expr(const Alphabet &alphabet, std::string_view text) {
  Parser parser{alphabet, text};
  ExprPtr e = parser.parse_union();
  if (!parser.at_end())
    throw ParseError(std::string("unexpected character '") +
                         text[parser.pos] + "'",
                     parser.pos);
  return e;
}

std::string print_expr(const Alphabet &alphabet, const Expr &e) {
  std::string out;
  print_rec(out, alphabet, e, 0);
  return out;
}

ExprPtr expr_of_vector(const ParikhVector &v) {
  ExprPtr e;
  for (std::size_t i = 0; i < v.width(); ++i) {
    for (Int j = 0; j < v.count(i); ++j) {
      ExprPtr a = Expr::letter(i);
      e = e ? Expr::product(std::move(e), std::move(a)) : std::move(a);
    }
  }
  return e ? e : Expr::one();
}

VectorSet bounded_semantics(const Expr &e, std::size_t width,
                            unsigned degree) {
  switch (e.kind()) {
  case Expr::Kind::zero:
    return {};
  case Expr::Kind::one:
    return {ParikhVector(width)};
  case Expr::Kind::letter:
    if (degree >= 1)
      return {ParikhVector::unit(width, e.letter())};
    return {};
  case Expr::Kind::join: {
    VectorSet out = bounded_semantics(*e.left(), width, degree);
    VectorSet rhs = bounded_semantics(*e.right(), width, degree);
    out.insert(rhs.begin(), rhs.end());
    return out;
  }
  case Expr::Kind::product: {
    VectorSet lhs = bounded_semantics(*e.left(), width, degree);
    VectorSet rhs = bounded_semantics(*e.right(), width, degree);
    VectorSet out;
    for (const ParikhVector &u : lhs) {
      for (const ParikhVector &v : rhs) {
        ParikhVector sum = vec_add(u, v);
        if (sum.total_degree() <= degree)
          out.insert(std::move(sum));
      }
    }
    return out;
  }
  case Expr::Kind::star: {
    VectorSet inner = bounded_semantics(*e.left(), width, degree);
    VectorSet out{ParikhVector(width)};
    std::deque<ParikhVector> work(out.begin(), out.end());
    while (!work.empty()) {
      ParikhVector current = std::move(work.front());
      work.pop_front();
      for (const ParikhVector &step : inner) {
        if (step.is_zero())
          continue;
        ParikhVector next = vec_add(current, step);
        if (next.total_degree() <= degree && out.insert(next).second)
          work.push_back(std::move(next));
      }
    }
    return out;
  }
  }
  throw InternalError("unreachable expression kind");
}

} // namespace cka
