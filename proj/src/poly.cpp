#include "darboux/poly.hpp"

#include <algorithm>

#include "darboux/error.hpp"

namespace darboux {

Poly::Poly(std::vector<BigRat> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly::Poly(std::initializer_list<BigRat> ascending) : coeffs_(ascending) { trim(); }

Poly Poly::constant(const BigRat& c) { return Poly(std::vector<BigRat>{c}); }

Poly Poly::monomial(const BigRat& c, std::size_t power) {
  std::vector<BigRat> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigRat Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRat(0); }

BigRat Poly::leading() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return sgn(c) != 0; }));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const BigRat lead = leading();
  Poly out = *this;
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

BigRat Poly::operator()(const BigRat& at) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<BigRat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const BigRat& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<BigRat> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigRat lead = b.leading();
  std::vector<BigRat> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigRat t = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = t;
    if (sgn(t) == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= t * bc[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a.monic();
  Poly v = b.monic();
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second.monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<BigRat> out(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * BigRat(static_cast<long>(k));
  return Poly(std::move(out));
}

Poly shift(const Poly& p, const BigRat& by) {
  // Horner in the shifted variable: p(x + by) = (...(c_n (x+by) + c_(n-1)) (x+by) + ...).
  const Poly step{by, BigRat(1)};
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * step + Poly::constant(*it);
  }
  return acc;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(BigRat(1));
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace darboux
