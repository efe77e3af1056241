#pragma once

// Helpers shared by the unit tests and the acceptance runner: seeded random
// inputs and brute-force oracles that avoid the normal-form machinery.

#include "homspace/error.hpp"
#include "homspace/extension.hpp"
#include "homspace/groupmodel.hpp"
#include "homspace/invariants.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace testing_support {

using namespace homspace;
using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

inline SimpleType random_simple_type(Rng& rng, long long max_rank) {
  while (true) {
    char f = "ABCDEFG"[uniform(rng, 0, 6)];
    long long r = uniform(rng, 1, max_rank);
    try {
      return SimpleType::make(f, r);
    } catch (const Error&) {
    }
  }
}

/// 0-2 simple factors of rank <= 6, torus rank <= 3, 1-2 gluing generators
/// with torus denominators in {1,2,3,4,6}; |Gamma| <= max_gamma.
inline ReductiveModel random_model(Rng& rng, long long max_gamma = 48) {
  static const long long dens[] = {1, 2, 3, 4, 6};
  while (true) {
    ReductiveModel h;
    std::vector<SimpleType> f;
    for (long long i = uniform(rng, 0, 2); i > 0; --i) f.push_back(random_simple_type(rng, 6));
    h.ss = RootDatum(f);
    h.torus_rank = static_cast<std::size_t>(uniform(rng, 0, 3));
    for (long long k = uniform(rng, 1, 2); k > 0; --k) {
      GluingElement g;
      for (std::size_t j = 0; j < h.ss.center().num_generators(); ++j)
        g.center.emplace_back(uniform(rng, 0, h.ss.center().generator_order(j).convert_to<long long>() - 1));
      for (std::size_t i = 0; i < h.torus_rank; ++i) {
        long long d = dens[uniform(rng, 0, 4)];
        g.torus.emplace_back(Integer(uniform(rng, 0, d - 1)), Integer(d));
      }
      h.gluing.push_back(std::move(g));
    }
    if (validate(h).gamma_order <= max_gamma) return h;
  }
}

/// Element of Gamma as an explicit tuple: torus part mod 1, center part
/// reduced, plus the value of an optional character.
struct GammaPoint {
  FractionVector torus;
  IntVector center;
  Fraction value;
  bool operator<(const GammaPoint& o) const {
    if (torus != o.torus) return torus < o.torus;
    if (center != o.center) return center < o.center;
    return value < o.value;
  }
};

/// Closure of the gluing generators under addition, with gamma[i] attached to
/// generator i (empty gamma means value 0 everywhere).
inline std::vector<GammaPoint> gamma_closure(const ReductiveModel& h, const FractionVector& gamma = {}) {
  const FgAbGroup& z = h.ss.center();
  auto add = [&](const GammaPoint& a, const GammaPoint& b) {
    GammaPoint c;
    for (std::size_t i = 0; i < a.torus.size(); ++i) c.torus.push_back((a.torus[i] + b.torus[i]).mod1());
    c.center = z.add(a.center, b.center);
    c.value = (a.value + b.value).mod1();
    return c;
  };
  std::vector<GammaPoint> gens;
  for (std::size_t i = 0; i < h.gluing.size(); ++i) {
    GammaPoint p;
    for (const auto& t : h.gluing[i].torus) p.torus.push_back(t.mod1());
    p.center = z.reduce(h.gluing[i].center);
    p.value = gamma.empty() ? Fraction() : gamma[i].mod1();
    gens.push_back(std::move(p));
  }
  GammaPoint zero{FractionVector(h.torus_rank), z.zero(), Fraction()};
  std::set<GammaPoint> seen{zero};
  std::vector<GammaPoint> frontier{zero};
  while (!frontier.empty()) {
    std::vector<GammaPoint> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        GammaPoint q = add(p, g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Abstract type of {x in Gamma : torus part 0 and value 0}, via its center parts.
inline FgAbGroup brute_force_kernel(const ReductiveModel& h, const FractionVector& gamma = {}) {
  std::vector<IntVector> parts;
  for (const auto& p : gamma_closure(h, gamma)) {
    bool torus_zero = true;
    for (const auto& t : p.torus) torus_zero = torus_zero && t.num() == 0;
    if (torus_zero && p.value.num() == 0) parts.push_back(p.center);
  }
  return subgroup_from_generators(h.ss.center(), parts).group;
}

/// Every finite abelian group of order <= n, canonical and without repeats.
inline std::vector<FgAbGroup> finite_groups_up_to(long long n) {
  std::vector<FgAbGroup> out;
  std::vector<long long> chain;
  // chain of invariant factors d1 | d2 | ... with product <= n
  auto rec = [&](auto&& self, long long prod) -> void {
    IntVector f(chain.begin(), chain.end());
    out.emplace_back(0, f);
    long long last = chain.empty() ? 1 : chain.back();
    for (long long d = chain.empty() ? 2 : last; prod * d <= n; d += chain.empty() ? 1 : last) {
      if (d % last != 0) continue;
      chain.push_back(d);
      self(self, prod * d);
      chain.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Another generating list of the same gluing group: g1 -> g1 + g2, a unit
/// multiple of one generator, or an extra redundant generator.
inline ReductiveModel re_present(const ReductiveModel& h, Rng& rng) {
  ReductiveModel out = h;
  const Integer exponent = validate(h).gamma_exponent;
  const std::size_t m = h.gluing.size();
  auto combine = [&](const GluingElement& a, const GluingElement& b, long long ka, long long kb) {
    GluingElement c;
    for (std::size_t j = 0; j < a.center.size(); ++j) c.center.push_back(ka * a.center[j] + kb * b.center[j]);
    for (std::size_t i = 0; i < a.torus.size(); ++i) c.torus.push_back((Fraction(ka) * a.torus[i] + Fraction(kb) * b.torus[i]).mod1());
    return c;
  };
  switch (uniform(rng, 0, 2)) {
  case 0:
    if (m >= 2) {
      std::size_t i = static_cast<std::size_t>(uniform(rng, 0, 1));
      out.gluing[i] = combine(h.gluing[i], h.gluing[1 - i], 1, uniform(rng, 1, 3));
      break;
    }
    [[fallthrough]];
  case 1: {
    long long u = 1;
    do u = uniform(rng, 2, 13);
    while (gcd(Integer(u), exponent) != 1);
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(m) - 1));
    out.gluing[i] = combine(h.gluing[i], h.gluing[i], u, 0);
    break;
  }
  default: {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(m) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(m) - 1));
    out.gluing.push_back(combine(h.gluing[i], h.gluing[j], uniform(rng, 1, 3), uniform(rng, 0, 3)));
    break;
  }
  }
  return out;
}

inline bool same_gluing(const ReductiveModel& a, const ReductiveModel& b) {
  if (a.gluing.size() != b.gluing.size()) return false;
  for (std::size_t i = 0; i < a.gluing.size(); ++i) {
    if (a.ss.center().reduce(a.gluing[i].center) != b.ss.center().reduce(b.gluing[i].center)) return false;
    for (std::size_t k = 0; k < a.gluing[i].torus.size(); ++k)
      if (a.gluing[i].torus[k].mod1() != b.gluing[i].torus[k].mod1()) return false;
  }
  return true;
}

/// Every invariant in the report, flattened into comparable strings.
inline std::vector<std::string> invariant_fingerprint(const ReductiveModel& h) {
  InvariantReport r = invariant_report(h);
  Pi1Result p = pi1(h);
  return {r.pi1_H.to_string(),         p.torsion.to_string(),          p.derived_pi1.to_string(),
          r.pic_group.to_string(),     r.pic_lattice.basis.to_literal(), r.brauer.to_string(),
          r.e_al.to_string(),          r.pic_of_group.to_string(),     r.topology.pi1_M.to_string(),
          r.topology.pi2_M.to_string(), r.topology.h2_M.to_string(),    r.topology.tors_h3_M.to_string()};
}

} // namespace testing_support
