#pragma once

#include "homspace/exactalg.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace homspace {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Values of Q/Z are Fractions reduced into [0, 1).
class Fraction {
public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
  Fraction(Integer n) : num_(std::move(n)), den_(1) {} // NOLINT(google-explicit-constructor)
  Fraction(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  Integer floor() const { return floor_div(num_, den_); }
  /// Representative of this value mod 1 in [0, 1).
  Fraction mod1() const { return Fraction(floor_mod(num_, den_), den_); }

  Fraction operator-() const { return Fraction(-num_, den_); }
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }

  bool operator==(const Fraction& o) const = default;
  std::strong_ordering operator<=>(const Fraction& o) const;

  /// "3", "-1/2".
  std::string to_string() const;
  /// Accepts "a" or "a/b" with b != 0; throws Error("malformed_fraction").
  static Fraction parse(std::string_view text, const std::string& where = {});

private:
  Integer num_;
  Integer den_;
};

using FractionVector = std::vector<Fraction>;

std::string to_string(const FractionVector& v); // "1/2,0"
FractionVector parse_fraction_list(std::string_view text, const std::string& where = {});

} // namespace homspace
