#pragma once

#include "homspace/exactalg.hpp"
#include "homspace/fraction.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homspace {

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant-factor
/// form (every di >= 2, di | di+1). Two groups are isomorphic iff they compare
/// equal. Generator coordinates list the free generators first.
class FgAbGroup {
public:
  FgAbGroup() = default; // trivial group
  FgAbGroup(std::size_t free_rank, IntVector factors);

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
  /// Z/n; n == 0 gives Z and n == 1 the trivial group.
  static FgAbGroup cyclic(const Integer& n);
  /// Canonical form of a direct sum of cyclic groups of the given orders
  /// (0 meaning Z).
  static FgAbGroup from_cyclic_orders(const IntVector& orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const IntVector& factors() const noexcept { return factors_; }
  std::size_t num_generators() const noexcept { return free_rank_ + factors_.size(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }

  /// |G| for finite groups, nothing otherwise.
  std::optional<Integer> order() const;
  /// Order of generator i, 0 for a free generator.
  Integer generator_order(std::size_t i) const;
  /// Largest invariant factor (1 for the trivial group); 0 if infinite.
  Integer exponent() const;

  /// Reduce torsion coordinates into [0, di).
  IntVector reduce(IntVector coords) const;
  bool is_zero(const IntVector& coords) const;
  IntVector zero() const { return IntVector(num_generators()); }
  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector scale(const Integer& k, const IntVector& a) const;

  /// Columns d_i e_{r+i}: Z^n modulo these is the group.
  IntMatrix relation_matrix() const;

  /// `Z^r x Z/d1 x ...`; the trivial group prints as `0`.
  std::string to_string() const;
  static FgAbGroup parse(std::string_view text);

  bool operator==(const FgAbGroup&) const = default;

private:
  std::size_t free_rank_ = 0;
  IntVector factors_;
};

struct AbElement {
  FgAbGroup group;
  IntVector coords;

  AbElement(FgAbGroup g, IntVector c);
  bool is_zero() const { return group.is_zero(coords); }
  bool operator==(const AbElement&) const = default;
};

/// Homomorphism given by the images of the domain generators (columns of
/// `matrix`, in codomain coordinates). Well-definedness is checked on
/// construction: each torsion generator of order d must map to an element
/// killed by d.
class AbHom {
public:
  AbHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix);

  static AbHom identity(const FgAbGroup& g);
  static AbHom zero(const FgAbGroup& domain, const FgAbGroup& codomain);

  const FgAbGroup& domain() const noexcept { return domain_; }
  const FgAbGroup& codomain() const noexcept { return codomain_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector apply(const IntVector& coords) const;
  /// (*this) o first
  AbHom compose(const AbHom& first) const;

  bool is_zero() const { return matrix_.is_zero(); }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  bool operator==(const AbHom&) const = default;

private:
  FgAbGroup domain_;
  FgAbGroup codomain_;
  IntMatrix matrix_;
};

/// Z^n / (column span of relations), with the quotient map from Z^n and a
/// section sending each canonical generator to a preimage in Z^n.
struct Presentation {
  FgAbGroup group;
  IntMatrix projection; // group.num_generators() x n
  IntMatrix section;    // n x group.num_generators(); projection * section == I
};

Presentation present(std::size_t n_generators, const IntMatrix& relations);

struct PresentationResult {
  FgAbGroup group;
  AbHom projection; // from the free group Z^n
};

/// Relations are the columns of an n x m matrix.
PresentationResult from_presentation(std::size_t n_generators, const IntMatrix& relations);

/// Subgroup of `ambient` generated by a list of elements, with its abstract
/// isomorphism type and injective inclusion.
struct SubgroupPresentation {
  FgAbGroup ambient;
  std::vector<IntVector> generators;
  FgAbGroup group;
  AbHom inclusion;

  /// Coordinates (in `group`) of an ambient element, if it lies in the subgroup.
  std::optional<IntVector> coordinates_of(const IntVector& ambient_coords) const;
  bool contains(const IntVector& ambient_coords) const { return coordinates_of(ambient_coords).has_value(); }
  /// Same subgroup of the same ambient group.
  bool same_subgroup(const SubgroupPresentation& other) const;
};

SubgroupPresentation subgroup_from_generators(const FgAbGroup& ambient, const std::vector<IntVector>& gens);
SubgroupPresentation subgroup_from_generators(const FgAbGroup& ambient, const std::vector<AbElement>& gens);

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup ext1_z(const FgAbGroup& a);
FgAbGroup torsion_subgroup(const FgAbGroup& a);

/// Hom(G, Q/Z) for finite G. The dual basis chi_i pairs with the canonical
/// generators e_j as <chi_i, e_j> = delta_ij / d_i.
struct DualPairing {
  FgAbGroup group;
  FgAbGroup dual;
  std::vector<FractionVector> table; // table[i][j] = <chi_i, e_j> in [0,1)

  Fraction evaluate(const IntVector& dual_coords, const IntVector& group_coords) const;
  /// The dual element whose values on e_1..e_k are `values` (mod 1).
  /// Throws Error("not_a_character") if d_j * values_j is not integral.
  IntVector character_coords(const FractionVector& values) const;
  /// Values on e_1..e_k of the character with the given dual coordinates.
  FractionVector character_values(const IntVector& dual_coords) const;
};

DualPairing dual_finite(const FgAbGroup& g);

SubgroupPresentation kernel_of(const AbHom& f);

struct CokernelResult {
  FgAbGroup group;
  AbHom projection; // codomain(f) -> group
};

CokernelResult cokernel_of(const AbHom& f);

/// image(f) == kernel(g) inside codomain(f) == domain(g).
bool is_exact_at(const AbHom& f, const AbHom& g);

/// All elements of a finite group, in mixed-radix order (last coordinate
/// fastest). Throws Error("not_finite") otherwise.
class FiniteEnumeration {
public:
  explicit FiniteEnumeration(FgAbGroup g);

  std::size_t size() const noexcept { return size_; }
  const FgAbGroup& group() const noexcept { return group_; }
  IntVector coords(std::size_t index) const;
  std::size_t index(const IntVector& coords) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

private:
  FgAbGroup group_;
  std::vector<std::size_t> radix_;
  std::size_t size_ = 1;
};

} // namespace homspace
