#include "doctest.h"
#include "support.hpp"

#include "homspace/error.hpp"
#include "homspace/exactalg.hpp"
#include "homspace/fraction.hpp"

using namespace homspace;
using testing_support::Rng;
using testing_support::random_matrix;
using testing_support::uniform;

namespace {

// Laplace expansion: slow and obviously correct.
Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    Integer term = m(0, j) * laplace_det(minor);
    s += (j % 2 ? -term : term);
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor: gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
      g = gcd(g, laplace_det(sub));
    }
  return g;
}

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k) {
      if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
      if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
    }
  }
  return true;
}

bool is_hermite(const IntMatrix& h) {
  std::size_t lead = 0;
  bool zero_seen = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || (i > 0 && p < lead) || h(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    lead = p + 1;
  }
  return true;
}

} // namespace

TEST_CASE("smith normal form examples") {
  SnfResult s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(s.U * IntMatrix{{2, 4}, {6, 8}} * s.V == s.D);

  SnfResult id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.D == IntMatrix::identity(2));

  CHECK(smith_normal_form(IntMatrix{{2}}).D == IntMatrix{{2}});
}

TEST_CASE("smith normal form of empty shapes") {
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {3, 0}}) {
    IntMatrix m(r, c);
    SnfResult s = smith_normal_form(m);
    CHECK(s.D.rows() == r);
    CHECK(s.D.cols() == c);
    CHECK(s.U == IntMatrix::identity(r));
    CHECK(s.V == IntMatrix::identity(c));
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 6)), c = static_cast<std::size_t>(uniform(rng, 1, 6));
    IntMatrix m = random_matrix(rng, r, c, 9);
    SnfResult s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(is_diagonal_chain(s.D));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(r));
    CHECK(s.V * s.V_inv == IntMatrix::identity(c));
  }
}

TEST_CASE("smith diagonal matches determinantal divisors") {
  Rng rng(12);
  for (int t = 0; t < 120; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 4)), c = static_cast<std::size_t>(uniform(rng, 1, 4));
    IntMatrix m = random_matrix(rng, r, c, 6);
    IntVector d = smith_normal_form(m).diagonal();
    Integer prev = 1;
    for (std::size_t k = 1; k <= d.size(); ++k) {
      Integer dk = determinantal_divisor(m, k);
      Integer expected = dk == 0 ? Integer(0) : dk / prev;
      CHECK(d[k - 1] == expected);
      if (dk != 0) prev = dk;
    }
  }
}

TEST_CASE("product of smith diagonal equals |det| on nonsingular squares") {
  Rng rng(13);
  int tested = 0;
  while (tested < 200) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    IntMatrix m = random_matrix(rng, n, n, 9);
    Integer det = laplace_det(m);
    if (det == 0) continue;
    ++tested;
    Integer prod = 1;
    for (const auto& x : smith_normal_form(m).diagonal()) prod *= x;
    CHECK(prod == abs(det));
    CHECK(determinant(m) == det);
  }
}

TEST_CASE("hermite normal form examples") {
  CHECK(hermite_normal_form(IntMatrix{{2, 4}, {6, 8}}).H == IntMatrix{{2, 0}, {0, 4}});
  CHECK(hermite_normal_form(IntMatrix(2, 3)).H == IntMatrix(2, 3));
  CHECK(hermite_normal_form(IntMatrix{{1, 5}}).H == IntMatrix{{1, 5}});
}

TEST_CASE("hermite normal form properties") {
  Rng rng(14);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 5)), c = static_cast<std::size_t>(uniform(rng, 1, 5));
    IntMatrix m = random_matrix(rng, r, c, 9);
    HnfResult h = hermite_normal_form(m);
    CHECK(h.U * m == h.H);
    CHECK(abs(laplace_det(h.U)) == 1);
    CHECK(is_hermite(h.H));
    // Same row lattice gives the same form.
    IntMatrix w = random_matrix(rng, r, r, 3);
    if (abs(laplace_det(w)) == 1) CHECK(hermite_normal_form(w * m).H == h.H);
  }
}

TEST_CASE("integer kernel examples") {
  CHECK(integer_kernel(IntMatrix{{1, 1}}) == IntMatrix{{1}, {-1}});
  CHECK(integer_kernel(IntMatrix{{2, 4}}) == IntMatrix{{2}, {-1}});
  CHECK(integer_kernel(IntMatrix{{2, 1}, {1, 1}}).cols() == 0);
}

TEST_CASE("integer kernel is a saturated basis") {
  Rng rng(15);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 4)), c = static_cast<std::size_t>(uniform(rng, 1, 5));
    IntMatrix m = random_matrix(rng, r, c, 5);
    IntMatrix k = integer_kernel(m);
    CHECK((m * k).is_zero());
    CHECK(k.cols() == c - smith_normal_form(m).rank());
    if (k.cols() == 0) continue;
    // Saturated: the gcd of maximal minors is 1, so Z^c / span(K) is torsion free.
    CHECK(determinantal_divisor(k, k.cols()) == 1);
    // Every kernel vector found by brute force lies in the span.
    for (int s = 0; s < 5; ++s) {
      IntVector y(k.cols());
      for (auto& v : y) v = uniform(rng, -3, 3);
      IntVector x = k * y;
      CHECK(solve_integer(k, x).has_value());
    }
  }
}

TEST_CASE("solve_integer examples") {
  CHECK(*solve_integer(IntMatrix{{2}}, {4}) == IntVector{2});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {3}).has_value());
  auto x = solve_integer(IntMatrix{{2, 4}, {6, 8}}, {2, 6});
  REQUIRE(x.has_value());
  CHECK(*x == IntVector{1, 0});
  CHECK_THROWS_AS(solve_integer(IntMatrix{{2}}, {1, 2}), Error);
}

TEST_CASE("solve_integer agrees with brute force") {
  Rng rng(16);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 3)), c = static_cast<std::size_t>(uniform(rng, 1, 2));
    IntMatrix m = random_matrix(rng, r, c, 4);
    IntVector b(r);
    for (auto& v : b) v = uniform(rng, -10, 10);
    bool found = false;
    for (long long x0 = -10; x0 <= 10 && !found; ++x0)
      for (long long x1 = -10; x1 <= 10 && !found; ++x1) {
        IntVector x{x0};
        if (c == 2) x.emplace_back(x1);
        else if (x1 != 0) continue;
        found = m * x == b;
      }
    auto s = solve_integer(m, b);
    if (found) REQUIRE(s.has_value());
    if (s) CHECK(m * *s == b);
  }
}

TEST_CASE("matrix literals") {
  IntMatrix m = IntMatrix::parse_literal("2,4;6,8");
  CHECK(m == IntMatrix{{2, 4}, {6, 8}});
  CHECK(m.to_literal() == "2,4;6,8");
  CHECK_THROWS_AS(IntMatrix::parse_literal("1,2;3"), Error);
  CHECK_THROWS_AS(IntMatrix::parse_literal("1,x"), Error);
  try {
    IntMatrix::parse_literal("1,2;3");
  } catch (const Error& e) {
    CHECK(e.code() == "malformed_matrix");
    CHECK(e.where() == "--matrix");
  }
}

TEST_CASE("fractions") {
  CHECK(Fraction(2, -4) == Fraction(-1, 2));
  CHECK(Fraction(-1, 2).mod1() == Fraction(1, 2));
  CHECK(Fraction::parse("3/6").to_string() == "1/2");
  CHECK(Fraction::parse(" -7 ").to_string() == "-7");
  CHECK_THROWS_AS(Fraction::parse("1/0"), Error);
  CHECK_THROWS_AS(Fraction::parse("1/-2"), Error);
  CHECK_THROWS_AS(Fraction::parse("a/2"), Error);
  CHECK(to_string(parse_fraction_list("1/2, 0")) == "1/2,0");
}

TEST_CASE("no overflow on large entries") {
  Integer big = Integer(1) << 200;
  IntMatrix m(2, 2);
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(1, 0) = big * 3;
  m(1, 1) = big * 3 + 2;
  SnfResult s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(s.D(0, 0) * s.D(1, 1) == abs(laplace_det(m)));
}
