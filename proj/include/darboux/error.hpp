#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace darboux {

/// Division by an identically zero polynomial or rational function.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero polynomial") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation hit a zero of the denominator.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const mpq_class& location)
      : std::domain_error("pole at x = " + location.get_str()), location_(location) {}

  const mpq_class& location() const noexcept { return location_; }

 private:
  mpq_class location_;
};

/// A continued fraction's denominator vanished while evaluating at some level
/// (1 = outermost).
class ContinuedFractionPole : public std::domain_error {
 public:
  ContinuedFractionPole(std::size_t level, double x)
      : std::domain_error(describe(level, x)),
        level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  static std::string describe(std::size_t level, double x) {
    std::ostringstream s;
    s << "continued fraction has a zero denominator at level " << level << " for x = " << x;
    return s.str();
  }

  std::size_t level_;
};

}  // namespace darboux
