#include "homspace/invariants.hpp"

#include "homspace/error.hpp"

namespace homspace {

PicardResult picard(const ReductiveModel& h) {
  CharacterGroup x = character_group(h);
  return PicardResult{x.lattice, x.group};
}

FgAbGroup brauer(const ReductiveModel& h) { return ext1_z(pi1(h).group); }

FgAbGroup algebraic_extension_group(const ReductiveModel& h) { return dual_finite(pi1(h).derived_pi1).dual; }

FgAbGroup picard_of_group(const ReductiveModel& h) { return dual_finite(pi1(h).derived_pi1).dual; }

TopologicalInvariants topological_invariants(const ReductiveModel& h) {
  FgAbGroup p = pi1(h).group;
  return TopologicalInvariants{FgAbGroup(), p, hom_group(p, FgAbGroup::free(1)), ext1_z(p)};
}

bool cotorsion_agrees(const ReductiveModel& h, const Integer& n) {
  if (n < 1) throw Error("dimension_mismatch", "cotorsion needs n >= 1");
  const std::size_t r = h.torus_rank;
  IntMatrix psi = psi_matrix(h);
  IntVector orders(r, n);
  FgAbGroup mod_n = FgAbGroup::from_cyclic_orders(orders);
  if (mod_n.free_rank() != 0 || mod_n.num_generators() != (n == 1 ? 0 : r)) throw InvariantViolation("unexpected Z/n form");
  if (n == 1) return true;
  return AbHom(mod_n, mod_n, psi).is_isomorphism();
}

InvariantReport invariant_report(const ReductiveModel& h) {
  Pi1Result p = pi1(h);
  PicardResult pic = picard(h);
  InvariantReport rep{pic.lattice,
                      pic.group,
                      ext1_z(p.group),
                      dual_finite(p.derived_pi1).dual,
                      dual_finite(p.derived_pi1).dual,
                      p.group,
                      TopologicalInvariants{FgAbGroup(), p.group, hom_group(p.group, FgAbGroup::free(1)), ext1_z(p.group)},
                      {}};
  if (!(rep.brauer == rep.e_al) || !(rep.brauer == rep.topology.tors_h3_M) || !rep.brauer.is_finite())
    throw InvariantViolation("Br, E_al and Tors H^3 disagree");
  if (rep.topology.h2_M.free_rank() != rep.pic_group.free_rank()) throw InvariantViolation("rank of X(H) differs from rank of H^2");

  rep.notes.push_back("results hold for any simply connected semisimple G containing H");
  rep.notes.push_back("Br = Br' = Br'^an = Br^an");
  if (h.unipotent_dim > 0)
    rep.notes.push_back("warning: H has a unipotent part of dimension " + std::to_string(h.unipotent_dim) +
                        "; Pic is the algebraic Picard group, equality with the analytic one is not claimed");
  else
    rep.notes.push_back("H is reductive, so Pic = Pic^an");
  return rep;
}

WeightBrauerTable weight_brauer_table(const SemisimpleModel& h) {
  const RootDatum& d = h.datum;
  WeightBrauerTable t{h.kernel.group, ext1_z(h.kernel.group), {}};
  const FgAbGroup& k = h.kernel.group;
  for (std::size_t f = 0; f < d.factors().size(); ++f)
    for (std::size_t i = 0; i < d.factors()[f].rank; ++i) {
      std::size_t node = d.factor_offset(f) + i;
      IntVector w(d.rank());
      w[node] = 1;
      KCharacter chi = restrict_weight(d, w, h.kernel);
      IntVector cls = ext_class(Character(k, chi.values));
      t.rows.push_back(WeightBrauerRow{node + 1, d.factors()[f].to_string(), i + 1, std::move(w), std::move(chi), std::move(cls)});
    }
  return t;
}

WeightBrauerTable weight_brauer_table(const ReductiveModel& h) {
  if (h.torus_rank != 0)
    throw Error("not_semisimple", "the weight table needs a semisimple model, this one has torus rank " + std::to_string(h.torus_rank), "/torus_rank");
  return weight_brauer_table(derived_subgroup(h));
}

} // namespace homspace
