#include "homspace/lattice.hpp"

#include "homspace/error.hpp"

namespace homspace {

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != dimension()) throw Error("dimension_mismatch", "lattice membership needs " + std::to_string(dimension()) + " entries");
  return solve_integer(basis.transpose(), v).has_value();
}

Lattice lattice_from_rows(const IntMatrix& rows) {
  HnfResult h = hermite_normal_form(rows);
  const std::size_t n = rows.cols();
  IntMatrix basis = h.H.row_block(0, std::min(n, h.H.rows()));
  if (basis.rows() != n || determinant(basis) == 0)
    throw Error("dimension_mismatch", "lattice generators do not span a full-rank lattice");
  return Lattice{basis, abs(determinant(basis))};
}

Lattice integral_annihilator(const std::vector<FractionVector>& conditions, std::size_t n) {
  Integer N = 1;
  for (const auto& c : conditions) {
    if (c.size() != n) throw Error("dimension_mismatch", "condition has " + std::to_string(c.size()) + " entries, expected " + std::to_string(n));
    for (const auto& q : c) N = lcm(N, q.den());
  }
  // x lies in the lattice iff A x = N y for some integer y, with A = N * conditions.
  const std::size_t m = conditions.size();
  IntMatrix a(m, n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) a(j, i) = (conditions[j][i] * Fraction(N)).num();
    a(j, n + j) = -N;
  }
  IntMatrix k = integer_kernel(a);
  return lattice_from_rows(k.row_block(0, n).transpose());
}

} // namespace homspace
