#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homspace {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Zero rows or zero
/// columns are legal.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);
  static IntMatrix diagonal(const IntVector& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;

  // Row block [first, first+count) and column block likewise.
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  IntMatrix col_block(std::size_t first, std::size_t count) const;

  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k); // r_t += k r_s
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& k); // c_t += k c_s
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// `2,4;6,8` form: rows separated by `;`, entries by `,`.
  std::string to_literal() const;
  static IntMatrix parse_literal(std::string_view text);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SnfResult {
  IntMatrix U;     // rows x rows, unimodular
  IntMatrix D;     // rows x cols, diagonal with d1 | d2 | ..., zeros trailing
  IntMatrix V;     // cols x cols, unimodular
  IntMatrix U_inv; // inverses, carried along so callers never need to invert
  IntMatrix V_inv;

  std::size_t rank() const;
  IntVector diagonal() const; // length min(rows, cols)
};

/// U * M * V == D. Pivoting always picks the entry of smallest absolute value.
SnfResult smith_normal_form(const IntMatrix& m);

struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};

/// Row-style Hermite form: U * M == H, pivots positive, entries above each
/// pivot reduced into [0, pivot), zero rows last.
HnfResult hermite_normal_form(const IntMatrix& m);

/// Columns form a saturated basis of {x : M x = 0}, in a canonical shape
/// (the transposed basis is in Hermite form).
IntMatrix integer_kernel(const IntMatrix& m);

/// Some x with M x = b, or nothing when no integer solution exists.
/// Throws Error("dimension_mismatch") when b has the wrong length.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

// Small integer helpers shared across modules.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b); // result in [0, |b|)
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::string to_string(const IntVector& v); // "1,-2,3"

} // namespace homspace
