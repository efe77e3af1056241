#include "homspace/fraction.hpp"

#include "homspace/error.hpp"

#include <algorithm>

namespace homspace {

Fraction::Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error("malformed_fraction", "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) { return Fraction(a.num_ * b.num_, a.den_ * b.den_); }

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) throw Error("division_by_zero", "fraction division by zero");
  return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
  Integer lhs = num_ * o.den_, rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

namespace {

bool is_int_token(std::string_view s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  return s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                         [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Integer to_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

} // namespace

Fraction Fraction::parse(std::string_view text, const std::string& where) {
  std::string_view s = strip(text);
  auto slash = s.find('/');
  std::string_view n = strip(s.substr(0, slash));
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : strip(s.substr(slash + 1));
  if (!is_int_token(n) || !is_int_token(d) || d.find('-') != std::string_view::npos)
    throw Error("malformed_fraction", "not a fraction: '" + std::string(text) + "'", where);
  Integer den = to_integer(d);
  if (den == 0) throw Error("malformed_fraction", "zero denominator in '" + std::string(text) + "'", where);
  return Fraction(to_integer(n), den);
}

std::string to_string(const FractionVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].to_string();
  }
  return out;
}

FractionVector parse_fraction_list(std::string_view text, const std::string& where) {
  FractionVector out;
  std::string_view s = strip(text);
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    out.push_back(Fraction::parse(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), where));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

} // namespace homspace
