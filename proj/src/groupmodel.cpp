#include "homspace/groupmodel.hpp"

#include "homspace/error.hpp"

namespace homspace {

namespace {

const Integer kMaxGammaOrder = 1000000;

void check_shapes(const ReductiveModel& h) {
  const std::size_t k = h.ss.center().num_generators();
  for (std::size_t i = 0; i < h.gluing.size(); ++i) {
    const std::string at = "/gluing/" + std::to_string(i);
    if (h.gluing[i].center.size() != k)
      throw Error("center_mismatch",
                  "center element needs " + std::to_string(k) + " coefficients for center " + h.ss.center().to_string(),
                  at + "/center");
    if (h.gluing[i].torus.size() != h.torus_rank)
      throw Error("dimension_mismatch", "torus part needs " + std::to_string(h.torus_rank) + " fractions", at + "/torus");
  }
}

FgAbGroup lambda_ambient(const ReductiveModel& h) { return FgAbGroup(h.torus_rank, h.ss.center().factors()); }

} // namespace

GluingGroup gluing_group(const ReductiveModel& h) {
  check_shapes(h);
  const std::size_t r = h.torus_rank;
  Integer n = 1;
  for (const auto& g : h.gluing)
    for (const auto& t : g.torus) n = lcm(n, t.den());

  FgAbGroup ambient = lambda_ambient(h);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(ambient.num_generators());
    e[i] = n;
    gens.push_back(std::move(e));
  }
  std::vector<IntVector> lifts;
  for (const auto& g : h.gluing) {
    IntVector v(ambient.num_generators());
    for (std::size_t i = 0; i < r; ++i) v[i] = (g.torus[i].mod1() * Fraction(n)).num();
    for (std::size_t j = 0; j < g.center.size(); ++j) v[r + j] = g.center[j];
    lifts.push_back(ambient.reduce(std::move(v)));
  }
  gens.insert(gens.end(), lifts.begin(), lifts.end());
  SubgroupPresentation lambda = subgroup_from_generators(ambient, gens);

  // Gamma = Lambda / <N e_i>.
  IntMatrix torus_gens(lambda.group.num_generators(), r);
  for (std::size_t i = 0; i < r; ++i) {
    IntVector c = *lambda.coordinates_of(gens[i]);
    for (std::size_t j = 0; j < c.size(); ++j) torus_gens(j, i) = c[j];
  }
  CokernelResult q = cokernel_of(AbHom(FgAbGroup::free(r), lambda.group, torus_gens));
  std::vector<IntVector> images;
  for (const auto& l : lifts) images.push_back(q.projection.apply(*lambda.coordinates_of(l)));
  return GluingGroup{n, std::move(lambda), q.group, q.projection, std::move(lifts), std::move(images)};
}

Validation validate(const ReductiveModel& h) {
  GluingGroup g = gluing_group(h);
  if (!g.gamma.is_finite()) throw InvariantViolation("gluing group came out infinite");
  Validation v{*g.gamma.order(), g.gamma.exponent(), {}};
  if (v.gamma_order > kMaxGammaOrder)
    throw Error("too_large", "gluing group has order " + v.gamma_order.str() + ", limit is 1000000", "/gluing");
  v.certificates.push_back("every center coefficient reduced in " + h.ss.center().to_string());
  v.certificates.push_back("Gamma = " + g.gamma.to_string() + ", order " + v.gamma_order.str() + ", exponent " + v.gamma_exponent.str());
  v.certificates.push_back("torus lifts scaled by N = " + g.scale.str());
  return v;
}

Pi1Result pi1(const ReductiveModel& h) {
  validate(h);
  GluingGroup g = gluing_group(h);
  const std::size_t r = h.torus_rank;
  const IntMatrix& incl = g.lambda.inclusion.matrix();

  AbHom to_torus(g.lambda.group, FgAbGroup::free(r), incl.row_block(0, r));
  SubgroupPresentation ker = kernel_of(to_torus);
  std::vector<IntVector> center_parts;
  for (std::size_t j = 0; j < ker.inclusion.matrix().cols(); ++j) {
    IntVector amb = incl * ker.inclusion.matrix().col(j);
    center_parts.emplace_back(amb.begin() + static_cast<std::ptrdiff_t>(r), amb.end());
  }
  SubgroupPresentation derived = subgroup_from_generators(h.ss.center(), center_parts);

  Pi1Result p{g.lambda.group, torsion_subgroup(g.lambda.group), ker.group, g.scale, g.lambda, derived};
  if (p.group.free_rank() != r) throw InvariantViolation("free rank of pi_1 differs from torus rank");
  if (!(derived.group == ker.group)) throw InvariantViolation("derived kernel does not embed into the center");
  return p;
}

SemisimpleModel derived_subgroup(const ReductiveModel& h) {
  Pi1Result p = pi1(h);
  return SemisimpleModel{h.ss, p.derived_kernel};
}

CharacterGroup character_group(const ReductiveModel& h) {
  check_shapes(h);
  std::vector<FractionVector> conditions;
  for (const auto& g : h.gluing) conditions.push_back(g.torus);
  return CharacterGroup{integral_annihilator(conditions, h.torus_rank), FgAbGroup::free(h.torus_rank)};
}

AbHom psi_character_map(const ReductiveModel& h, const Pi1Result& p, const IntVector& mu) {
  const std::size_t r = h.torus_rank;
  if (mu.size() != r) throw Error("dimension_mismatch", "character needs " + std::to_string(r) + " coordinates");
  const IntMatrix& incl = p.lambda.inclusion.matrix();
  IntMatrix row(1, incl.cols());
  for (std::size_t j = 0; j < incl.cols(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < r; ++i) s += mu[i] * incl(i, j);
    if (s % p.scale != 0)
      throw Error("not_a_character", "(" + to_string(mu) + ") pairs non-integrally with the gluing group");
    row(0, j) = s / p.scale;
  }
  return AbHom(p.group, FgAbGroup::free(1), row);
}

AbHom psi_character_map(const ReductiveModel& h, const IntVector& mu) { return psi_character_map(h, pi1(h), mu); }

IntMatrix psi_matrix(const ReductiveModel& h) {
  Pi1Result p = pi1(h);
  CharacterGroup x = character_group(h);
  const std::size_t r = h.torus_rank;
  IntMatrix m(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    AbHom f = psi_character_map(h, p, x.lattice.basis.row(k));
    for (std::size_t i = 0; i < r; ++i) m(i, k) = f.matrix()(0, i);
  }
  return m;
}

ReductiveModel central_pushout(const ReductiveModel& h, const FractionVector& gamma) {
  if (gamma.size() != h.gluing.size())
    throw Error("dimension_mismatch", "character needs one value per gluing generator (" + std::to_string(h.gluing.size()) + ")");
  GluingGroup g = gluing_group(h);
  const std::size_t m = h.gluing.size();
  IntMatrix images = IntMatrix::from_columns(g.generators, g.gamma.num_generators());
  IntMatrix rel = integer_kernel(IntMatrix::hcat(images, g.gamma.relation_matrix()));
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    Fraction s;
    for (std::size_t i = 0; i < m; ++i) s += Fraction(rel(i, j)) * gamma[i];
    if (!s.is_integer()) {
      IntVector y = rel.col(j);
      y.resize(m);
      throw Error("not_a_homomorphism", "values violate the relation (" + to_string(y) + ") among the gluing generators");
    }
  }
  ReductiveModel out = h;
  out.name = h.name.empty() ? std::string() : "(" + h.name + " x Gm)/Gamma";
  out.torus_rank = h.torus_rank + 1;
  for (std::size_t i = 0; i < m; ++i) out.gluing[i].torus.push_back(gamma[i].mod1());
  return out;
}

ReductiveModel as_reductive(const SemisimpleModel& s) {
  ReductiveModel h;
  h.ss = s.datum;
  for (std::size_t j = 0; j < s.kernel.inclusion.matrix().cols(); ++j) h.gluing.push_back({s.kernel.inclusion.matrix().col(j), {}});
  return h;
}

} // namespace homspace
