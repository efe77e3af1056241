#pragma once

#include "homspace/extension.hpp"
#include "homspace/groupmodel.hpp"

#include <string>
#include <vector>

namespace homspace {

struct PicardResult {
  Lattice lattice; // X(H) inside Z^r
  FgAbGroup group;
};

struct TopologicalInvariants {
  FgAbGroup pi1_M;
  FgAbGroup pi2_M;
  FgAbGroup h2_M;
  FgAbGroup tors_h3_M;
};

/// Invariants of M = G/H for any simply connected semisimple G containing H.
struct InvariantReport {
  Lattice pic_lattice;
  FgAbGroup pic_group;
  FgAbGroup brauer;
  FgAbGroup e_al;
  FgAbGroup pic_of_group;
  FgAbGroup pi1_H;
  TopologicalInvariants topology;
  std::vector<std::string> notes;
};

/// Pic(G/H) = X(H).
PicardResult picard(const ReductiveModel& h);
/// Ext^1(pi_1(H), Z).
FgAbGroup brauer(const ReductiveModel& h);
/// Hom(pi_1(H^(1)), Q/Z).
FgAbGroup algebraic_extension_group(const ReductiveModel& h);
/// Pic(H) = Pic(H^(1)) = Hom(pi_1(H^(1)), Q/Z).
FgAbGroup picard_of_group(const ReductiveModel& h);
TopologicalInvariants topological_invariants(const ReductiveModel& h);

InvariantReport invariant_report(const ReductiveModel& h);

/// Whether X(H)/n -> Hom(pi_1(H), Z)/n induced by Psi is an isomorphism.
bool cotorsion_agrees(const ReductiveModel& h, const Integer& n);

struct WeightBrauerRow {
  std::size_t node;     // 1-based, over the concatenated Bourbaki numbering
  std::string factor;   // simple type holding the node, e.g. "B3"
  std::size_t local_node;
  IntVector weight;     // the fundamental weight
  KCharacter restriction;
  IntVector brauer_class; // coordinates in Ext^1(K, Z)
};

struct WeightBrauerTable {
  FgAbGroup kernel;  // pi_1(H) as a subgroup of the center
  FgAbGroup brauer;  // Ext^1(kernel, Z)
  std::vector<WeightBrauerRow> rows;
};

WeightBrauerTable weight_brauer_table(const SemisimpleModel& h);
/// Throws Error("not_semisimple") when the model has a torus.
WeightBrauerTable weight_brauer_table(const ReductiveModel& h);

} // namespace homspace
