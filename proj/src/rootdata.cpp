#include "homspace/rootdata.hpp"

#include "homspace/error.hpp"

#include <cctype>

namespace homspace {

namespace {

void check_rank(Family f, long long r) {
  bool ok = false;
  switch (f) {
  case Family::A: ok = r >= 1; break;
  case Family::B: ok = r >= 2; break;
  case Family::C: ok = r >= 3; break;
  case Family::D: ok = r >= 4; break;
  case Family::E: ok = r >= 6 && r <= 8; break;
  case Family::F: ok = r == 4; break;
  case Family::G: ok = r == 2; break;
  }
  if (!ok) throw Error("invalid_rank", "no simple type " + std::string(1, "ABCDEFG"[static_cast<int>(f)]) + std::to_string(r));
  if (r > 64) throw Error("invalid_rank", "rank " + std::to_string(r) + " is above the supported limit 64");
}

void bond(IntMatrix& c, std::size_t i, std::size_t j) { // 1-based simple bond
  c(i - 1, j - 1) = -1;
  c(j - 1, i - 1) = -1;
}

} // namespace

SimpleType SimpleType::make(Family family, long long rank) {
  check_rank(family, rank);
  return SimpleType{family, static_cast<std::size_t>(rank)};
}

SimpleType SimpleType::make(char family, long long rank) {
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  if (f < 'A' || f > 'G') throw Error("invalid_rank", std::string("unknown family '") + family + "'");
  return make(static_cast<Family>(f - 'A'), rank);
}

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw Error("invalid_rank", "cannot parse simple type '" + std::string(text) + "'");
  std::string digits(text.substr(1));
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)) || digits.size() > 3)
      throw Error("invalid_rank", "cannot parse simple type '" + std::string(text) + "'");
  return make(text[0], std::stoll(digits));
}

char SimpleType::family_letter() const { return "ABCDEFG"[static_cast<int>(family)]; }

std::string SimpleType::to_string() const { return family_letter() + std::to_string(rank); }

IntMatrix cartan_matrix(const SimpleType& t) {
  const std::size_t n = t.rank;
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  switch (t.family) {
  case Family::A:
    for (std::size_t i = 1; i < n; ++i) bond(c, i, i + 1);
    break;
  case Family::B: // alpha_n short
    for (std::size_t i = 1; i < n; ++i) bond(c, i, i + 1);
    c(n - 2, n - 1) = -2;
    break;
  case Family::C: // alpha_n long
    for (std::size_t i = 1; i < n; ++i) bond(c, i, i + 1);
    c(n - 1, n - 2) = -2;
    break;
  case Family::D:
    for (std::size_t i = 1; i + 1 < n; ++i) bond(c, i, i + 1);
    bond(c, n - 2, n);
    break;
  case Family::E:
    bond(c, 1, 3);
    bond(c, 2, 4);
    for (std::size_t i = 3; i < n; ++i) bond(c, i, i + 1);
    break;
  case Family::F:
    bond(c, 1, 2);
    bond(c, 2, 3);
    bond(c, 3, 4);
    c(1, 2) = -2;
    break;
  case Family::G: // alpha_1 short
    c(0, 1) = -1;
    c(1, 0) = -3;
    break;
  }
  return c;
}

// ---------------------------------------------------------------------------

RootDatum::RootDatum(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  std::size_t n = 0;
  for (const auto& t : factors_) {
    check_rank(t.family, static_cast<long long>(t.rank));
    offsets_.push_back(n);
    n += t.rank;
  }
  cartan_ = IntMatrix(n, n);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    IntMatrix c = cartan_matrix(factors_[f]);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) cartan_(offsets_[f] + i, offsets_[f] + j) = c(i, j);
  }
  // Q -> P has the simple roots as columns, i.e. the transposed Cartan matrix.
  pq_ = present(n, cartan_.transpose());
  if (!pq_.group.is_finite()) throw InvariantViolation("P/Q came out infinite");
  center_ = dual_finite(pq_.group);
}

IntVector RootDatum::weight_class(const IntVector& weight) const {
  if (weight.size() != rank())
    throw Error("dimension_mismatch", "weight has " + std::to_string(weight.size()) + " coordinates, rank is " + std::to_string(rank()));
  return pq_.group.reduce(pq_.projection * weight);
}

Fraction RootDatum::pair(const IntVector& center_coords, const IntVector& weight) const {
  return center_.evaluate(center_.dual.reduce(center_coords), weight_class(weight));
}

IntVector RootDatum::center_element(const FractionVector& values) const {
  try {
    return center_.character_coords(values);
  } catch (const Error& e) {
    throw Error("center_mismatch", e.what());
  }
}

std::string RootDatum::to_string() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x " : "") + factors_[i].to_string();
  return s;
}

// ---------------------------------------------------------------------------

bool KCharacter::is_trivial() const {
  for (const auto& v : values)
    if (v.num() != 0) return false;
  return true;
}

KCharacter restrict_weight(const RootDatum& datum, const IntVector& weight, const SubgroupPresentation& k) {
  if (!(k.ambient == datum.center()))
    throw Error("center_mismatch", "subgroup lives in " + k.ambient.to_string() + ", center is " + datum.center().to_string());
  KCharacter chi;
  for (std::size_t j = 0; j < k.group.num_generators(); ++j) chi.values.push_back(datum.pair(k.inclusion.matrix().col(j), weight));
  chi.coords = dual_finite(k.group).character_coords(chi.values);
  return chi;
}

Lattice character_lattice_of_quotient(const RootDatum& datum, const SubgroupPresentation& k) {
  if (!(k.ambient == datum.center()))
    throw Error("center_mismatch", "subgroup lives in " + k.ambient.to_string() + ", center is " + datum.center().to_string());
  const std::size_t n = datum.rank();
  std::vector<FractionVector> conditions;
  for (std::size_t j = 0; j < k.group.num_generators(); ++j) {
    FractionVector row(n);
    IntVector z = k.inclusion.matrix().col(j);
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      row[i] = datum.pair(z, e);
    }
    conditions.push_back(std::move(row));
  }
  return integral_annihilator(conditions, n);
}

std::vector<SubgroupPresentation> small_subgroups(const FgAbGroup& g) {
  FiniteEnumeration en(g);
  std::vector<SubgroupPresentation> out;
  for (std::size_t x = 0; x < en.size(); ++x)
    for (std::size_t y = x; y < en.size(); ++y) {
      SubgroupPresentation s = subgroup_from_generators(g, std::vector<IntVector>{en.coords(x), en.coords(y)});
      bool seen = false;
      for (const auto& t : out)
        if (t.same_subgroup(s)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(std::move(s));
    }
  return out;
}

} // namespace homspace
