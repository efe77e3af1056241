#pragma once

#include "homspace/abgroup.hpp"
#include "homspace/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace homspace {

enum class Family { A, B, C, D, E, F, G };

/// Simple root system type. Rank bounds exclude the low-rank coincidences:
/// A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4, G = 2.
struct SimpleType {
  Family family = Family::A;
  std::size_t rank = 1;

  /// Throws Error("invalid_rank").
  static SimpleType make(Family family, long long rank);
  static SimpleType make(char family, long long rank);
  /// "A5", "E7".
  static SimpleType parse(std::string_view text);

  char family_letter() const;
  std::string to_string() const;
  bool operator==(const SimpleType&) const = default;
};

/// Bourbaki numbering; C[i][j] = <alpha_i, alpha_j^vee>, so row i is alpha_i
/// written in fundamental-weight coordinates.
IntMatrix cartan_matrix(const SimpleType& t);

/// Product of simple root systems: P = Z^n in fundamental-weight coordinates,
/// Q spanned by the rows of the block-diagonal Cartan matrix. The center of
/// the simply connected group is Hom(P/Q, Q/Z), kept as an explicit pairing.
class RootDatum {
public:
  RootDatum() : RootDatum(std::vector<SimpleType>{}) {}
  explicit RootDatum(std::vector<SimpleType> factors);

  const std::vector<SimpleType>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return cartan_.rows(); }
  bool empty() const noexcept { return factors_.empty(); }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  /// Offset of factor i inside the concatenated weight coordinates.
  std::size_t factor_offset(std::size_t i) const { return offsets_.at(i); }

  const FgAbGroup& pq_group() const noexcept { return pq_.group; }
  /// Projection P -> P/Q and section, from the SNF of the transposed Cartan matrix.
  const Presentation& pq() const noexcept { return pq_; }
  /// Class of a weight in P/Q.
  IntVector weight_class(const IntVector& weight) const;

  /// Center as the dual of P/Q: pairing.dual is the center group,
  /// pairing.group is P/Q.
  const DualPairing& center_pairing() const noexcept { return center_; }
  const FgAbGroup& center() const noexcept { return center_.dual; }
  /// <z, lambda> in [0,1) for a center element z and weight lambda.
  Fraction pair(const IntVector& center_coords, const IntVector& weight) const;
  /// Center element with the given values on the generators of P/Q.
  /// Throws Error("center_mismatch") if a value has the wrong denominator.
  IntVector center_element(const FractionVector& values) const;

  std::string to_string() const; // "A1 x D4", or "trivial"
  bool operator==(const RootDatum& o) const { return factors_ == o.factors_; }

private:
  std::vector<SimpleType> factors_;
  std::vector<std::size_t> offsets_;
  IntMatrix cartan_;
  Presentation pq_;
  DualPairing center_;
};

/// A character of a subgroup K of the center, with values on the canonical
/// generators of K and coordinates in dual_finite(K).
struct KCharacter {
  FractionVector values;
  IntVector coords;
  bool is_trivial() const;
};

/// k -> <k, lambda mod Q>. Throws Error("center_mismatch") if K does not sit
/// inside the center of `datum`.
KCharacter restrict_weight(const RootDatum& datum, const IntVector& weight, const SubgroupPresentation& k);

/// {lambda in P : lambda restricts trivially to K}; its index in P is |K|.
Lattice character_lattice_of_quotient(const RootDatum& datum, const SubgroupPresentation& k);

/// All subgroups of a finite group, each generated by at most two elements.
/// Enough for centers of simple types; deduplicated, in a fixed order.
std::vector<SubgroupPresentation> small_subgroups(const FgAbGroup& g);

} // namespace homspace
