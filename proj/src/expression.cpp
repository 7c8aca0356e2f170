#include <waring/expression.hpp>

#include <cctype>
#include <map>
#include <optional>

namespace waring {

namespace {

struct Term {
  std::size_t offset;
  Rational coeff;
  int x = 0, y = 0;
};

class FormParser {
 public:
  explicit FormParser(const std::string& s) : s_(s) {}

  std::vector<Term> run() {
    std::vector<Term> terms;
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (!at_end()) {
      skip();
      const std::size_t start = pos_;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      Term t = term(start);
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(t);
      first = false;
      skip();
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Integer integer() {
    const std::size_t b = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) throw ParseError("expected a number", pos_);
    return Integer(s_.substr(b, pos_ - b));
  }

  int exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    const std::size_t at = pos_;
    const Integer e = integer();
    if (!e.fits_sint_p() || e > 1000) throw ParseError("exponent too large", at);
    return static_cast<int>(e.get_si());
  }

  Term term(std::size_t start) {
    Term t{start, Rational(1)};
    bool have_coeff = false, have_var = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer();
      Integer den(1);
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      t.coeff = Rational(num, den);
      t.coeff.canonicalize();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x' && peek() != 'y') throw ParseError("expected 'x' or 'y'", pos_);
      }
    }
    while (peek() == 'x' || peek() == 'y') {
      const char v = peek();
      ++pos_;
      const int e = exponent();
      (v == 'x' ? t.x : t.y) += e;
      have_var = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x' && peek() != 'y') throw ParseError("expected 'x' or 'y'", pos_);
      }
    }
    if (!have_coeff && !have_var) throw ParseError("expected a term", pos_);
    if (!at_end() && peek() != '+' && peek() != '-')
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long parse_long(const std::string& digits, std::size_t offset) {
  std::size_t i = 0;
  if (i < digits.size() && digits[i] == '-') ++i;
  if (i == digits.size()) throw ParseError("expected an integer", offset + i);
  for (std::size_t j = i; j < digits.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(digits[j]))) throw ParseError("expected an integer", offset + j);
  if (digits.size() - i > 9) throw ParseError("field parameter too large", offset);
  return std::stol(digits);
}

}  // namespace

BinaryForm parse_form_expr(const std::string& text) {
  const std::vector<Term> terms = FormParser(text).run();
  const int degree = terms.front().x + terms.front().y;
  std::vector<std::size_t> bad;
  for (const auto& t : terms)
    if (t.x + t.y != degree) bad.push_back(t.offset);
  if (!bad.empty()) {
    std::string where;
    for (std::size_t o : bad) where += (where.empty() ? "" : ", ") + std::to_string(o);
    throw InhomogeneousError("inhomogeneous form: terms at positions " + where + " differ from degree " +
                                 std::to_string(degree),
                             bad);
  }
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (const auto& t : terms) c[static_cast<std::size_t>(t.y)] += t.coeff;
  bool zero = true;
  for (auto& q : c) {
    q.canonicalize();
    if (sgn(q) != 0) zero = false;
  }
  if (zero) throw ParseError("the zero form is not allowed", 0);
  return BinaryForm::over_rationals(c);
}

NumberField parse_field_spec(const std::string& text) {
  const std::string s = trim(text);
  const std::size_t off = text.find_first_not_of(" \t\r\n") == std::string::npos ? 0 : text.find_first_not_of(" \t\r\n");
  if (s == "Q") return NumberField::rationals();
  if (s == "R") return NumberField::real_closure();
  if (s == "C") return NumberField::complex_closure();
  if (s == "Q(i)") return NumberField::quadratic(-1);
  if (s.size() < 4 || s.rfind("Q(", 0) != 0 || s.back() != ')')
    throw ParseError("unknown field '" + s + "'; expected Q, Q(i), Q(zeta<n>), Q(sqrt<d>), R or C", off);
  const std::string inner = s.substr(2, s.size() - 3);
  try {
    if (inner.rfind("zeta", 0) == 0) {
      const long n = parse_long(inner.substr(4), off + 6);
      if (n < 1) throw ParseError("zeta index must be positive", off + 6);
      return NumberField::cyclotomic(n);
    }
    if (inner.rfind("sqrt", 0) == 0) {
      std::string arg = inner.substr(4);
      std::size_t shift = 6;
      if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')') {
        arg = arg.substr(1, arg.size() - 2);
        ++shift;
      }
      return NumberField::quadratic(parse_long(arg, off + shift));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid field parameter: ") + e.what(), off + 2);
  }
  throw ParseError("unknown field '" + s + "'", off + 2);
}

}  // namespace waring
