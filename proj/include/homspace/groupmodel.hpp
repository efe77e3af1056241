#pragma once

#include "homspace/abgroup.hpp"
#include "homspace/lattice.hpp"
#include "homspace/rootdata.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace homspace {

/// H_sc / K for a subgroup K of the center.
struct SemisimpleModel {
  RootDatum datum;
  SubgroupPresentation kernel;
};

/// One generator of the gluing group: a center element (coordinates over the
/// canonical generators of the center) and a torsion point of the torus,
/// given mod 1.
struct GluingElement {
  IntVector center;
  FractionVector torus;
};

/// H = (T^r x S_sc) / Gamma, with Gamma generated by the gluing elements.
/// The unipotent dimension is carried along but enters no computation.
struct ReductiveModel {
  std::string name;
  RootDatum ss;
  std::size_t torus_rank = 0;
  std::vector<GluingElement> gluing;
  std::size_t unipotent_dim = 0;
};

/// Lambda inside Z^r x Z(S_sc), torus coordinates scaled by N, generated by
/// N e_i and one lift (N t, z) of each gluing generator with t in [0,1).
/// Gamma is Lambda modulo the N e_i.
struct GluingGroup {
  Integer scale; // N, lcm of the torus denominators
  SubgroupPresentation lambda;
  FgAbGroup gamma;
  AbHom quotient;                     // Lambda -> Gamma
  std::vector<IntVector> lifts;       // ambient coordinates of each lift
  std::vector<IntVector> generators;  // image of each gluing element in Gamma
};

struct Validation {
  Integer gamma_order;
  Integer gamma_exponent;
  std::vector<std::string> certificates;
};

/// Checks shapes, denominators and |Gamma| <= 10^6. Throws Error on bad input.
Validation validate(const ReductiveModel& h);

GluingGroup gluing_group(const ReductiveModel& h);

/// pi_1(H) is Lambda; its torsion is pi_1 of the derived subgroup.
struct Pi1Result {
  FgAbGroup group;
  FgAbGroup torsion;
  FgAbGroup derived_pi1;
  Integer scale;
  SubgroupPresentation lambda;
  SubgroupPresentation derived_kernel; // Gamma intersected with S_sc, inside the center
};

Pi1Result pi1(const ReductiveModel& h);

SemisimpleModel derived_subgroup(const ReductiveModel& h);

struct CharacterGroup {
  Lattice lattice; // X(H) inside Z^r
  FgAbGroup group;
};

CharacterGroup character_group(const ReductiveModel& h);

/// Psi(mu): pi_1(H) -> Z, (v, z) -> <mu, v>. Throws Error("not_a_character").
AbHom psi_character_map(const ReductiveModel& h, const IntVector& mu);
AbHom psi_character_map(const ReductiveModel& h, const Pi1Result& p, const IntVector& mu);

/// Matrix of Psi on a basis of X(H), against the basis of Hom(pi_1(H), Z)
/// dual to the free generators of pi_1(H). Square of size r.
IntMatrix psi_matrix(const ReductiveModel& h);

/// The extension (H~ x G_m)/Gamma of H by G_m attached to a character gamma
/// of Gamma, given by its values on the gluing generators.
/// Throws Error("not_a_homomorphism") if the values violate a relation.
ReductiveModel central_pushout(const ReductiveModel& h, const FractionVector& gamma);

ReductiveModel as_reductive(const SemisimpleModel& s);

/// SL(n), GL(n), PGL(n), SO(n), Sp(2n), Spin(n). Throws Error("unknown_preset").
ReductiveModel preset(std::string_view name);
std::vector<std::string> preset_families();

/// Weights of the vector representation of Spin(n), n >= 3, in
/// fundamental-weight coordinates of the datum used by the Spin(n) preset.
std::vector<IntVector> vector_weights(std::size_t n);

} // namespace homspace
