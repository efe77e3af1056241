#include "homspace/error.hpp"
#include "homspace/groupmodel.hpp"

#include <regex>

namespace homspace {

namespace {

IntVector unit(std::size_t n, std::size_t i, long long a = 1) {
  IntVector v(n);
  v[i] = a;
  return v;
}

RootDatum spin_datum(std::size_t n) {
  switch (n) {
  case 3: return RootDatum({SimpleType::make('A', 1)});
  case 4: return RootDatum({SimpleType::make('A', 1), SimpleType::make('A', 1)});
  case 6: return RootDatum({SimpleType::make('A', 3)});
  default: break;
  }
  const auto m = static_cast<long long>(n / 2);
  return RootDatum({SimpleType::make(n % 2 ? 'B' : 'D', m)});
}

// Center elements of Spin(n) killing every weight of the vector representation.
SubgroupPresentation spin_to_so_kernel(const RootDatum& d, std::size_t n) {
  std::vector<IntVector> weights = vector_weights(n);
  FiniteEnumeration en(d.center());
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < en.size(); ++i) {
    IntVector z = en.coords(i);
    bool kills = true;
    for (const auto& w : weights)
      if (d.pair(z, w).num() != 0) kills = false;
    if (kills) kernel.push_back(std::move(z));
  }
  return subgroup_from_generators(d.center(), kernel);
}

ReductiveModel torus(std::string name, std::size_t r) {
  ReductiveModel h;
  h.name = std::move(name);
  h.torus_rank = r;
  return h;
}

} // namespace

std::vector<IntVector> vector_weights(std::size_t n) {
  if (n < 3) throw Error("unknown_preset", "no vector representation data for Spin(" + std::to_string(n) + ")");
  if (n == 3) return {IntVector{2}};
  if (n == 4) return {IntVector{1, 1}, IntVector{1, -1}};
  if (n == 6) return {IntVector{0, 1, 0}};
  const std::size_t m = n / 2;
  std::vector<IntVector> e;
  if (n % 2) { // B_m: e_i = w_i - w_{i-1} (i < m), e_m = 2 w_m - w_{m-1}
    for (std::size_t i = 0; i < m; ++i) {
      IntVector v = unit(m, i, i + 1 == m ? 2 : 1);
      if (i > 0) v[i - 1] = -1;
      e.push_back(std::move(v));
    }
  } else { // D_m: e_i = w_i - w_{i-1} (i <= m-2), e_{m-1} = w_{m-1} + w_m - w_{m-2}, e_m = w_m - w_{m-1}
    for (std::size_t i = 0; i + 2 < m; ++i) {
      IntVector v = unit(m, i);
      if (i > 0) v[i - 1] = -1;
      e.push_back(std::move(v));
    }
    IntVector a = unit(m, m - 2);
    a[m - 1] = 1;
    a[m - 3] = -1;
    IntVector b = unit(m, m - 1);
    b[m - 2] = -1;
    e.push_back(std::move(a));
    e.push_back(std::move(b));
  }
  return e;
}

std::vector<std::string> preset_families() { return {"SL(n)", "GL(n)", "PGL(n)", "SO(n)", "Sp(2n)", "Spin(n)"}; }

ReductiveModel preset(std::string_view text) {
  static const std::regex re(R"(^\s*(SL|GL|PGL|SO|Sp|Spin)\s*\(\s*([0-9]{1,3})\s*\)\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re))
    throw Error("unknown_preset", "unknown preset '" + s + "'; known: SL(n), GL(n), PGL(n), SO(n), Sp(2n), Spin(n)", "--preset");
  const std::string fam = m[1];
  const auto n = static_cast<std::size_t>(std::stoul(m[2]));
  const std::string name = fam + "(" + std::to_string(n) + ")";
  if (n == 0 || n > 65) throw Error("unknown_preset", "preset size out of range in '" + s + "'", "--preset");

  ReductiveModel h;
  h.name = name;
  if (fam == "SL" || fam == "GL" || fam == "PGL") {
    if (n == 1) return fam == "GL" ? torus(name, 1) : h;
    h.ss = RootDatum({SimpleType::make('A', static_cast<long long>(n - 1))});
    if (fam == "GL") {
      h.torus_rank = 1;
      h.gluing.push_back({IntVector{1}, FractionVector{Fraction(1, n)}});
    } else if (fam == "PGL") {
      h.gluing.push_back({IntVector{1}, {}});
    }
    return h;
  }
  if (fam == "Sp") {
    if (n % 2) throw Error("unknown_preset", "Sp needs an even size, got '" + s + "'", "--preset");
    const auto k = static_cast<long long>(n / 2);
    h.ss = RootDatum({k == 1 ? SimpleType::make('A', 1) : k == 2 ? SimpleType::make('B', 2) : SimpleType::make('C', k)});
    return h;
  }
  // SO and Spin
  if (n == 1) {
    if (fam == "SO") return h;
    throw Error("unknown_preset", "Spin(1) is not connected", "--preset");
  }
  if (n == 2) return torus(name, 1);
  h.ss = spin_datum(n);
  if (fam == "SO") {
    SubgroupPresentation k = spin_to_so_kernel(h.ss, n);
    for (std::size_t j = 0; j < k.inclusion.matrix().cols(); ++j) h.gluing.push_back({k.inclusion.matrix().col(j), {}});
  }
  return h;
}

} // namespace homspace
