#pragma once

#include "homspace/exactalg.hpp"
#include "homspace/fraction.hpp"

#include <vector>

namespace homspace {

/// Full-rank sublattice of Z^n. Basis rows are kept in Hermite form, so two
/// lattices are equal iff their bases compare equal.
struct Lattice {
  IntMatrix basis; // n x n
  Integer index;   // [Z^n : L]

  std::size_t dimension() const { return basis.cols(); }
  bool contains(const IntVector& v) const;
  bool operator==(const Lattice&) const = default;
};

/// Lattice spanned by the rows of a full-rank integer matrix.
Lattice lattice_from_rows(const IntMatrix& rows);

/// {x in Z^n : sum_i c[i] x[i] is an integer for every condition row c}.
Lattice integral_annihilator(const std::vector<FractionVector>& conditions, std::size_t n);

} // namespace homspace
