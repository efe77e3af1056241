#pragma once

#include "homspace/abgroup.hpp"

#include <vector>

namespace homspace {

/// Homomorphism Gamma -> Q/Z of a finite group, by its values on the
/// canonical generators. Values are kept in [0,1).
class Character {
public:
  /// Throws Error("not_a_character") unless d_i * value_i is integral.
  Character(FgAbGroup group, FractionVector values);
  static Character zero(const FgAbGroup& group);

  const FgAbGroup& group() const noexcept { return group_; }
  const FractionVector& values() const noexcept { return values_; }
  Fraction operator()(const IntVector& g) const;
  /// Least N with N * chi = 0.
  Integer order() const;
  bool is_zero() const;

  Character operator+(const Character& o) const;
  Character operator-() const;
  bool operator==(const Character&) const = default;

private:
  FgAbGroup group_;
  FractionVector values_;
};

/// Normalized symmetric 2-cocycle Gamma x Gamma -> Z, stored as a full table
/// indexed through FiniteEnumeration. |Gamma| is capped at 4096.
class SymmetricCocycle {
public:
  /// Validates symmetry, normalization and the cocycle identity.
  /// Throws Error("not_a_cocycle").
  SymmetricCocycle(FgAbGroup group, std::vector<Integer> table);
  static SymmetricCocycle zero(const FgAbGroup& group);

  const FgAbGroup& group() const noexcept { return enum_.group(); }
  const FiniteEnumeration& elements() const noexcept { return enum_; }
  const Integer& operator()(std::size_t a, std::size_t b) const { return table_[a * enum_.size() + b]; }
  const std::vector<Integer>& table() const noexcept { return table_; }

  bool operator==(const SymmetricCocycle& o) const { return group() == o.group() && table_ == o.table_; }

private:
  FiniteEnumeration enum_;
  std::vector<Integer> table_;
};

/// 0 -> Z -> E -> Gamma -> 0, with E realized inside (1/N)Z x Gamma
/// (first coordinate scaled by N).
struct ExtensionData {
  FgAbGroup middle;
  AbHom inject;  // Z -> E
  AbHom project; // E -> Gamma
  Integer scale;
  SubgroupPresentation realization;

  /// inject injective, project surjective, exact in the middle.
  bool is_exact() const;
};

ExtensionData character_to_extension(const Character& chi);
/// c(a,b) = s(a) + s(b) - s(a+b) read back in Z, for a normalized section s.
SymmetricCocycle cocycle_of(const ExtensionData& e);
/// chi(g) = (1/|Gamma|) sum_h c(g,h) mod 1.
Character cocycle_class(const SymmetricCocycle& c);
SymmetricCocycle baer_sum(const SymmetricCocycle& a, const SymmetricCocycle& b);
SymmetricCocycle negate(const SymmetricCocycle& c);
bool are_equivalent(const SymmetricCocycle& a, const SymmetricCocycle& b);
/// (delta f)(a,b) = f(a) + f(b) - f(a+b), for f indexed like the enumeration.
SymmetricCocycle coboundary(const FgAbGroup& group, const std::vector<Integer>& f);

/// Ext^1(Gamma, Z) realized as the character group. Throws Error("not_finite").
FgAbGroup ext_group_via_characters(const FgAbGroup& gamma);
/// Image of chi under the connecting map X(Gamma) -> Ext^1(Gamma, Z), in the
/// coordinates of ext1_z(Gamma).
IntVector ext_class(const Character& chi);

} // namespace homspace
