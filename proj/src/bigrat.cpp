#include "darboux/bigrat.hpp"

#include <cctype>
#include <stdexcept>

namespace darboux {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRat parse_rat(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRat r{BigInt{std::string(num)}, d};
  r.canonicalize();
  if (text.front() == '-') r = -r;
  return r;
}

std::string to_string(const BigRat& value) { return value.get_str(); }

std::optional<BigRat> rational_sqrt(const BigRat& value) {
  if (sgn(value) < 0) return std::nullopt;
  const BigInt& p = value.get_num();
  const BigInt& q = value.get_den();
  if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t())) {
    return std::nullopt;
  }
  BigRat root(BigInt(sqrt(p)), BigInt(sqrt(q)));
  root.canonicalize();
  return root;
}

}  // namespace darboux
