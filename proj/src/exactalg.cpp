#include "homspace/exactalg.hpp"

#include "homspace/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace homspace {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error("dimension_mismatch", "matrix entry count does not match its shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("dimension_mismatch", "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("dimension_mismatch", "row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("dimension_mismatch", "column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("dimension_mismatch", "matrix product shapes disagree");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw Error("dimension_mismatch", "matrix-vector shapes disagree");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

IntMatrix IntMatrix::col_block(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw Error("dimension_mismatch", "hcat of matrices with different row counts");
  IntMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw Error("dimension_mismatch", "vcat of matrices with different column counts");
  IntMatrix out(a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i) out(a.rows_ + i, j) = b(i, j);
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += k * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += k * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_literal() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
  }
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

Integer parse_integer(const std::string& tok) {
  std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (tok.size() == start ||
      !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error("malformed_matrix", "not an integer: '" + tok + "'", "--matrix");
  return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

} // namespace

IntMatrix IntMatrix::parse_literal(std::string_view text) {
  std::string body = trim(text);
  if (body.empty()) return {};
  std::vector<std::vector<Integer>> rows;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = body.find(';', pos);
    std::string row_text = trim(std::string_view(body).substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
    std::vector<Integer> row;
    std::size_t rp = 0;
    while (true) {
      std::size_t comma = row_text.find(',', rp);
      row.push_back(parse_integer(trim(std::string_view(row_text).substr(rp, comma == std::string::npos ? std::string::npos : comma - rp))));
      if (comma == std::string::npos) break;
      rp = comma + 1;
    }
    if (!rows.empty() && rows.front().size() != row.size())
      throw Error("malformed_matrix", "rows have different lengths", "--matrix");
    rows.push_back(std::move(row));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return from_rows(rows, rows.front().size());
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error("division_by_zero", "floor_div by zero");
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer m = abs(b);
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SnfResult::rank() const {
  std::size_t k = 0;
  std::size_t n = std::min(D.rows(), D.cols());
  while (k < n && D(k, k) != 0) ++k;
  return k;
}

IntVector SnfResult::diagonal() const {
  std::size_t n = std::min(D.rows(), D.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = D(i, i);
  return d;
}

namespace {

// Carries D together with the four transforms. Row operations act on D and U
// from the left and on U_inv from the right (as the inverse column operation);
// column operations likewise for V / V_inv.
struct SnfState {
  IntMatrix D, U, U_inv, V, V_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
    U_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
    V_inv.swap_rows(i, j);
  }
  // r_t += k r_s
  void add_row(std::size_t t, std::size_t s, const Integer& k) {
    D.add_row_multiple(t, s, k);
    U.add_row_multiple(t, s, k);
    U_inv.add_col_multiple(s, t, -k);
  }
  // c_t += k c_s
  void add_col(std::size_t t, std::size_t s, const Integer& k) {
    D.add_col_multiple(t, s, k);
    V.add_col_multiple(t, s, k);
    V_inv.add_row_multiple(s, t, -k);
  }
  void negate_row(std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
    U_inv.negate_col(i);
  }
};

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfState s{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols),
             IntMatrix::identity(cols)};
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero |entry| in the trailing block.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& x = s.D(i, j);
          if (x != 0 && (pi == rows || abs(x) < best)) {
            best = abs(x);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.D(i, t) == 0) continue;
        Integer q = s.D(i, t) / s.D(t, t);
        s.add_row(i, t, -q);
        if (s.D(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.D(t, j) == 0) continue;
        Integer q = s.D(t, j) / s.D(t, t);
        s.add_col(j, t, -q);
        if (s.D(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Row and column are clear; enforce divisibility of the remaining block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.D(i, j) % s.D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      s.add_row(t, bad, 1);
    }
    if (exhausted) break;
    if (s.D(t, t) < 0) s.negate_row(t);
  }

  return SnfResult{std::move(s.U), std::move(s.D), std::move(s.V), std::move(s.U_inv), std::move(s.V_inv)};
}

// ---------------------------------------------------------------------------
// Hermite normal form

HnfResult hermite_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix H = m;
  IntMatrix U = IntMatrix::identity(rows);
  auto row_op = [&](std::size_t t, std::size_t s, const Integer& k) {
    H.add_row_multiple(t, s, k);
    U.add_row_multiple(t, s, k);
  };

  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i)
        if (H(i, c) != 0 && (best == rows || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == rows) break;
      have_pivot = true;
      H.swap_rows(pr, best);
      U.swap_rows(pr, best);
      bool clear = true;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        if (H(i, c) == 0) continue;
        row_op(i, pr, -(H(i, c) / H(pr, c)));
        if (H(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (!have_pivot) continue;
    if (H(pr, c) < 0) {
      H.negate_row(pr);
      U.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) row_op(i, pr, -floor_div(H(i, c), H(pr, c)));
    ++pr;
  }
  return HnfResult{std::move(H), std::move(U)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  SnfResult snf = smith_normal_form(m);
  std::size_t k = snf.rank();
  IntMatrix basis = snf.V.col_block(k, cols - k);
  if (basis.cols() == 0) return basis;
  // Canonical representative of the same lattice.
  return hermite_normal_form(basis.transpose()).H.transpose();
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows())
    throw Error("dimension_mismatch", "right-hand side length " + std::to_string(b.size()) +
                                          " does not match " + std::to_string(m.rows()) + " rows");
  SnfResult snf = smith_normal_form(m);
  IntVector ub = snf.U * b;
  std::size_t k = snf.rank();
  IntVector y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < k) {
      if (ub[i] % snf.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / snf.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("dimension_mismatch", "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

} // namespace homspace
