#include "darboux/expr.hpp"

#include <cctype>
#include <sstream>
#include <variant>

#include "darboux/error.hpp"

namespace darboux {

namespace {

using Value = std::variant<RatFun, DiffOp>;

DiffOp as_operator(const Value& v) {
  if (const auto* f = std::get_if<RatFun>(&v)) return DiffOp::multiply(*f);
  return std::get<DiffOp>(v);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value acc = term();
    while (true) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      const std::size_t at = pos_;
      if (accept('*')) {
        acc = multiply(acc, unary());
      } else if (accept('/')) {
        acc = divide(acc, unary(), at);
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      if (auto* f = std::get_if<RatFun>(&v)) return -*f;
      return -std::get<DiffOp>(v);
    }
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const long e = integer("integer exponent");
    const int exponent = static_cast<int>(negative ? -e : e);
    if (const auto* f = std::get_if<RatFun>(&base)) {
      try {
        return pow(*f, exponent);
      } catch (const DivisionByZero&) {
        throw ParseError("negative power of zero", at);
      }
    }
    if (exponent < 0) throw ParseError("operators only take nonnegative powers", at);
    DiffOp result = DiffOp::identity();
    for (int i = 0; i < exponent; ++i) result = compose(result, std::get<DiffOp>(base));
    return result;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'x') {
      ++pos_;
      return RatFun::x();
    }
    if (c == 'D') {
      ++pos_;
      return DiffOp::d();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFun(BigRat(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  long integer(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    return std::stol(digits);
  }

  static Value add(const Value& a, const Value& b, bool subtract) {
    const auto* fa = std::get_if<RatFun>(&a);
    const auto* fb = std::get_if<RatFun>(&b);
    if (fa && fb) return subtract ? *fa - *fb : *fa + *fb;
    return subtract ? as_operator(a) - as_operator(b) : as_operator(a) + as_operator(b);
  }

  static Value multiply(const Value& a, const Value& b) {
    const auto* fa = std::get_if<RatFun>(&a);
    const auto* fb = std::get_if<RatFun>(&b);
    if (fa && fb) return *fa * *fb;
    if (fa) return *fa * std::get<DiffOp>(b);
    if (fb) return std::get<DiffOp>(a) * *fb;
    return compose(std::get<DiffOp>(a), std::get<DiffOp>(b));
  }

  static Value divide(const Value& a, const Value& b, std::size_t at) {
    const auto* fb = std::get_if<RatFun>(&b);
    if (!fb) throw ParseError("cannot divide by an operator", at);
    if (fb->is_zero()) throw ParseError("division by zero", at);
    const RatFun inv = RatFun(BigRat(1)) / *fb;
    if (const auto* fa = std::get_if<RatFun>(&a)) return *fa * inv;
    return std::get<DiffOp>(a) * inv;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string power_suffix(std::string_view var, std::size_t k) {
  std::string out(var);
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

// Signed terms of a polynomial, highest degree first.
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

bool leading_negative(const RatFun& f) { return sgn(f.num().leading()) < 0; }

// Printed form of a factor placed in front of "*D^k" or below a fraction
// bar: parenthesized unless it is a single polynomial term.
std::string factor_form(const RatFun& f) {
  const std::string s = to_string(f);
  if (f.is_polynomial() && f.num().term_count() <= 1) return s;
  return "(" + s + ")";
}

}  // namespace

DiffOp parse_operator(std::string_view text) { return as_operator(Parser(text).parse()); }

RatFun parse_function(std::string_view text) {
  Value v = Parser(text).parse();
  if (const auto* f = std::get_if<RatFun>(&v)) return *f;
  throw ParseError("expected a function of x, found an operator", 0);
}

std::string to_string(const Poly& p, std::string_view var) {
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const BigRat& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    const BigRat mag = abs(c);
    std::string body;
    if (k == 0) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = power_suffix(var, k);
    } else {
      body = mag.get_str() + "*" + power_suffix(var, k);
    }
    terms.emplace_back(sgn(c) < 0, std::move(body));
  }
  return join_terms(terms);
}

std::string to_string(const RatFun& f) {
  if (f.is_polynomial()) return to_string(f.num());
  if (f.num().is_constant()) {
    // Fold the constant's denominator in: 1/(4*x^2) rather than 1/4/x^2.
    const BigRat c = f.num().coeff(0);
    const Poly den = f.den() * Poly::constant(BigRat(c.get_den()));
    const std::string d = to_string(den);
    return to_string(BigRat(c.get_num())) + "/" + (den.term_count() == 1 && d.find('*') == std::string::npos ? d : "(" + d + ")");
  }
  const std::string num = f.num().term_count() == 1 ? to_string(f.num()) : "(" + to_string(f.num()) + ")";
  const std::string den = f.den().term_count() == 1 ? to_string(f.den()) : "(" + to_string(f.den()) + ")";
  return num + "/" + den;
}

std::string to_string(const DiffOp& op) {
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = op.by_power().size(); k-- > 0;) {
    const RatFun& c = op.by_power()[k];
    if (c.is_zero()) continue;
    if (k == 0) {
      // Only the first summand carries the printed sign, so lift it textually.
      std::string body = to_string(c);
      const bool negative = body.front() == '-';
      terms.emplace_back(negative, negative ? body.substr(1) : body);
      continue;
    }
    const bool negative = leading_negative(c);
    const RatFun mag = negative ? -c : c;
    std::string body;
    if (mag == RatFun(BigRat(1))) {
      body = power_suffix("D", k);
    } else {
      body = factor_form(mag) + "*" + power_suffix("D", k);
    }
    terms.emplace_back(negative, std::move(body));
  }
  return join_terms(terms);
}

std::string to_string(const EulerOp& op) {
  if (op.is_zero()) return "0";
  const std::string k = to_string(op.k, "D_t");
  if (op.m == 0) return k;
  const std::string factor = op.m == 1 ? "exp(t)" : "exp(" + std::to_string(op.m) + "t)";
  return factor + "*(" + k + ")";
}

std::string to_string(const ContinuedFraction& cf) {
  // Built inside out: each level renders as "d + n/(inner)".
  std::string inner;
  for (std::size_t i = cf.terms.size(); i-- > 0;) {
    const CfLevel& level = cf.terms[i];
    const std::string below = inner.empty() ? to_string(level.partial_denominator) : inner;
    const RatFun& n = level.partial_numerator;
    const bool negative = leading_negative(n);
    const std::string frac = factor_form(negative ? -n : n) + "/(" + below + ")";
    const RatFun& above = i == 0 ? cf.head : cf.terms[i - 1].partial_denominator;
    if (above.is_zero()) {
      inner = negative ? "-" + frac : frac;
    } else {
      inner = to_string(above) + (negative ? " - " : " + ") + frac;
    }
  }
  return inner.empty() ? to_string(cf.head) : inner;
}

}  // namespace darboux
