#include "homspace/abgroup.hpp"

#include "homspace/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace homspace {

FgAbGroup::FgAbGroup(std::size_t free_rank, IntVector factors) : free_rank_(free_rank), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error("not_canonical", "invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error("not_canonical", "invariant factors must form a divisibility chain");
  }
}

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
  if (n == 0) return free(1);
  if (abs(n) == 1) return {};
  return FgAbGroup(0, {abs(n)});
}

FgAbGroup FgAbGroup::from_cyclic_orders(const IntVector& orders) {
  std::size_t free = 0;
  IntVector finite;
  for (const auto& d : orders) {
    if (d == 0)
      ++free;
    else if (abs(d) != 1)
      finite.push_back(abs(d));
  }
  FgAbGroup torsion = present(finite.size(), IntMatrix::diagonal(finite)).group;
  return FgAbGroup(free, torsion.factors());
}

std::optional<Integer> FgAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Integer FgAbGroup::generator_order(std::size_t i) const {
  if (i < free_rank_) return 0;
  return factors_.at(i - free_rank_);
}

Integer FgAbGroup::exponent() const {
  if (free_rank_ > 0) return 0;
  return factors_.empty() ? Integer(1) : factors_.back();
}

IntVector FgAbGroup::reduce(IntVector coords) const {
  if (coords.size() != num_generators())
    throw Error("group_mismatch", "element has " + std::to_string(coords.size()) + " coordinates, group " +
                                      to_string() + " has " + std::to_string(num_generators()) + " generators");
  for (std::size_t i = 0; i < factors_.size(); ++i) coords[free_rank_ + i] = floor_mod(coords[free_rank_ + i], factors_[i]);
  return coords;
}

bool FgAbGroup::is_zero(const IntVector& coords) const {
  IntVector r = reduce(coords);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

IntVector FgAbGroup::add(const IntVector& a, const IntVector& b) const {
  if (a.size() != b.size()) throw Error("group_mismatch", "adding elements of different groups");
  IntVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return reduce(std::move(s));
}

IntVector FgAbGroup::scale(const Integer& k, const IntVector& a) const {
  IntVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = k * a[i];
  return reduce(std::move(s));
}

IntMatrix FgAbGroup::relation_matrix() const {
  IntMatrix r(num_generators(), factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r(free_rank_ + i, i) = factors_[i];
  return r;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    os << (first ? "" : " x ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

FgAbGroup FgAbGroup::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s == "0" || s.empty()) return {};
  std::size_t free = 0;
  IntVector orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t x = s.find('x', pos);
    std::string part = s.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
    try {
      if (part == "Z") {
        free += 1;
      } else if (part.rfind("Z^", 0) == 0) {
        free += std::stoul(part.substr(2));
      } else if (part.rfind("Z/", 0) == 0) {
        orders.emplace_back(part.substr(2));
      } else {
        throw Error("malformed_group", "cannot parse group component '" + part + "'");
      }
    } catch (const std::logic_error&) {
      throw Error("malformed_group", "cannot parse group component '" + part + "'");
    }
    if (x == std::string::npos) break;
    pos = x + 1;
  }
  FgAbGroup t = from_cyclic_orders(orders);
  return FgAbGroup(free, t.factors());
}

AbElement::AbElement(FgAbGroup g, IntVector c) : group(std::move(g)), coords(group.reduce(std::move(c))) {}

// ---------------------------------------------------------------------------

AbHom::AbHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.num_generators() || matrix_.cols() != domain_.num_generators())
    throw Error("dimension_mismatch", "hom matrix must be " + std::to_string(codomain_.num_generators()) + "x" +
                                          std::to_string(domain_.num_generators()));
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    IntVector image = codomain_.reduce(matrix_.col(j));
    for (std::size_t i = 0; i < image.size(); ++i) matrix_(i, j) = image[i];
    Integer d = domain_.generator_order(j);
    if (d != 0 && !codomain_.is_zero(codomain_.scale(d, image)))
      throw Error("ill_defined_hom", "generator " + std::to_string(j) + " of order " + d.str() +
                                         " maps to an element not killed by " + d.str());
  }
}

AbHom AbHom::identity(const FgAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.num_generators())); }

AbHom AbHom::zero(const FgAbGroup& domain, const FgAbGroup& codomain) {
  return AbHom(domain, codomain, IntMatrix(codomain.num_generators(), domain.num_generators()));
}

IntVector AbHom::apply(const IntVector& coords) const { return codomain_.reduce(matrix_ * domain_.reduce(coords)); }

AbHom AbHom::compose(const AbHom& first) const {
  if (!(first.codomain_ == domain_)) throw Error("group_mismatch", "composition of non-composable homs");
  return AbHom(first.domain_, codomain_, matrix_ * first.matrix_);
}

bool AbHom::is_injective() const { return kernel_of(*this).group.is_trivial(); }

bool AbHom::is_surjective() const { return cokernel_of(*this).group.is_trivial(); }

// ---------------------------------------------------------------------------

Presentation present(std::size_t n, const IntMatrix& relations) {
  if (relations.rows() != n)
    throw Error("dimension_mismatch", "relation matrix needs " + std::to_string(n) + " rows");
  SnfResult snf = smith_normal_form(relations);
  const std::size_t diag = std::min(relations.rows(), relations.cols());

  std::vector<std::size_t> free_idx, tors_idx;
  IntVector factors;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = i < diag ? snf.D(i, i) : Integer(0);
    if (d == 0) {
      free_idx.push_back(i);
    } else if (d != 1) {
      tors_idx.push_back(i);
      factors.push_back(d);
    }
  }
  FgAbGroup group(free_idx.size(), factors);
  std::vector<std::size_t> order = free_idx;
  order.insert(order.end(), tors_idx.begin(), tors_idx.end());

  IntMatrix proj(order.size(), n), sec(n, order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      proj(k, j) = snf.U(order[k], j);
      sec(j, k) = snf.U_inv(j, order[k]);
    }
    if (k >= free_idx.size())
      for (std::size_t j = 0; j < n; ++j) proj(k, j) = floor_mod(proj(k, j), factors[k - free_idx.size()]);
  }
  return Presentation{std::move(group), std::move(proj), std::move(sec)};
}

PresentationResult from_presentation(std::size_t n, const IntMatrix& relations) {
  Presentation p = present(n, relations);
  AbHom proj(FgAbGroup::free(n), p.group, p.projection);
  return PresentationResult{std::move(p.group), std::move(proj)};
}

// ---------------------------------------------------------------------------

std::optional<IntVector> SubgroupPresentation::coordinates_of(const IntVector& ambient_coords) const {
  IntMatrix m = IntMatrix::hcat(inclusion.matrix(), ambient.relation_matrix());
  auto x = solve_integer(m, ambient.reduce(ambient_coords));
  if (!x) return std::nullopt;
  x->resize(group.num_generators());
  return group.reduce(std::move(*x));
}

bool SubgroupPresentation::same_subgroup(const SubgroupPresentation& other) const {
  if (!(ambient == other.ambient)) return false;
  for (std::size_t j = 0; j < inclusion.matrix().cols(); ++j)
    if (!other.contains(inclusion.matrix().col(j))) return false;
  for (std::size_t j = 0; j < other.inclusion.matrix().cols(); ++j)
    if (!contains(other.inclusion.matrix().col(j))) return false;
  return true;
}

SubgroupPresentation subgroup_from_generators(const FgAbGroup& ambient, const std::vector<IntVector>& gens) {
  const std::size_t n = ambient.num_generators();
  std::vector<IntVector> reduced;
  reduced.reserve(gens.size());
  for (const auto& g : gens) reduced.push_back(ambient.reduce(g));
  IntMatrix G = IntMatrix::from_columns(reduced, n);

  // Relations among the generators: y with G y in the ambient relation lattice.
  IntMatrix K = integer_kernel(IntMatrix::hcat(G, ambient.relation_matrix()));
  IntMatrix L = K.row_block(0, gens.size());
  Presentation p = present(gens.size(), L);

  IntMatrix incl = G * p.section;
  AbHom inclusion(p.group, ambient, incl);
  return SubgroupPresentation{ambient, std::move(reduced), std::move(p.group), std::move(inclusion)};
}

SubgroupPresentation subgroup_from_generators(const FgAbGroup& ambient, const std::vector<AbElement>& gens) {
  std::vector<IntVector> coords;
  for (const auto& g : gens) {
    if (!(g.group == ambient))
      throw Error("group_mismatch", "generator belongs to " + g.group.to_string() + ", not " + ambient.to_string());
    coords.push_back(g.coords);
  }
  return subgroup_from_generators(ambient, coords);
}

// ---------------------------------------------------------------------------

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b) {
  IntVector orders;
  for (std::size_t i = 0; i < a.num_generators(); ++i)
    for (std::size_t j = 0; j < b.num_generators(); ++j) {
      Integer p = a.generator_order(i), q = b.generator_order(j);
      if (q == 0 && p != 0)
        orders.emplace_back(1); // Hom(Z/p, Z) = 0
      else
        orders.push_back(gcd(p, q));
    }
  return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup ext1_z(const FgAbGroup& a) {
  // 0 -> Z^k --R--> Z^n -> A -> 0 gives Ext^1(A, Z) = coker(R^T).
  IntMatrix r = a.relation_matrix();
  return from_presentation(r.cols(), r.transpose()).group;
}

FgAbGroup torsion_subgroup(const FgAbGroup& a) { return FgAbGroup(0, a.factors()); }

Fraction DualPairing::evaluate(const IntVector& dual_coords, const IntVector& group_coords) const {
  Fraction s;
  for (std::size_t i = 0; i < dual_coords.size(); ++i)
    for (std::size_t j = 0; j < group_coords.size(); ++j)
      if (dual_coords[i] != 0 && group_coords[j] != 0) s += Fraction(dual_coords[i] * group_coords[j]) * table[i][j];
  return s.mod1();
}

IntVector DualPairing::character_coords(const FractionVector& values) const {
  if (values.size() != group.num_generators())
    throw Error("group_mismatch", "character needs " + std::to_string(group.num_generators()) + " values");
  IntVector c(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    Fraction q = values[j].mod1() / table[j][j];
    if (!q.is_integer())
      throw Error("not_a_character", "value " + values[j].to_string() + " on a generator of order " +
                                         group.generator_order(j).str() + " is not a multiple of " +
                                         table[j][j].to_string());
    c[j] = q.num();
  }
  return dual.reduce(std::move(c));
}

FractionVector DualPairing::character_values(const IntVector& dual_coords) const {
  FractionVector v(group.num_generators());
  for (std::size_t j = 0; j < v.size(); ++j) {
    IntVector e(group.num_generators());
    e[j] = 1;
    v[j] = evaluate(dual_coords, e);
  }
  return v;
}

DualPairing dual_finite(const FgAbGroup& g) {
  if (!g.is_finite()) throw Error("not_finite", "dual_finite needs a finite group, got " + g.to_string());
  const std::size_t k = g.num_generators();
  std::vector<FractionVector> table(k, FractionVector(k));
  for (std::size_t i = 0; i < k; ++i) table[i][i] = Fraction(1, g.factors()[i]);
  return DualPairing{g, g, std::move(table)};
}

SubgroupPresentation kernel_of(const AbHom& f) {
  const FgAbGroup& a = f.domain();
  IntMatrix K = integer_kernel(IntMatrix::hcat(f.matrix(), f.codomain().relation_matrix()));
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < K.cols(); ++j) {
    IntVector x = K.col(j);
    x.resize(a.num_generators());
    gens.push_back(std::move(x));
  }
  return subgroup_from_generators(a, gens);
}

CokernelResult cokernel_of(const AbHom& f) {
  const FgAbGroup& b = f.codomain();
  Presentation p = present(b.num_generators(), IntMatrix::hcat(f.matrix(), b.relation_matrix()));
  AbHom proj(b, p.group, p.projection);
  return CokernelResult{std::move(p.group), std::move(proj)};
}

bool is_exact_at(const AbHom& f, const AbHom& g) {
  if (!(f.codomain() == g.domain()))
    throw Error("group_mismatch", "is_exact_at: codomain " + f.codomain().to_string() + " is not domain " +
                                      g.domain().to_string());
  if (!g.compose(f).is_zero()) return false;
  SubgroupPresentation ker = kernel_of(g);
  std::vector<IntVector> images;
  for (std::size_t j = 0; j < f.matrix().cols(); ++j) images.push_back(f.matrix().col(j));
  SubgroupPresentation img = subgroup_from_generators(f.codomain(), images);
  for (std::size_t j = 0; j < ker.inclusion.matrix().cols(); ++j)
    if (!img.contains(ker.inclusion.matrix().col(j))) return false;
  return true;
}

// ---------------------------------------------------------------------------

FiniteEnumeration::FiniteEnumeration(FgAbGroup g) : group_(std::move(g)) {
  if (!group_.is_finite()) throw Error("not_finite", "cannot enumerate " + group_.to_string());
  for (const auto& d : group_.factors()) {
    if (d > Integer(std::numeric_limits<std::uint32_t>::max()) ||
        size_ > std::numeric_limits<std::uint32_t>::max() / d.convert_to<std::size_t>())
      throw Error("too_large", "group " + group_.to_string() + " is too large to enumerate");
    radix_.push_back(d.convert_to<std::size_t>());
    size_ *= radix_.back();
  }
}

IntVector FiniteEnumeration::coords(std::size_t index) const {
  IntVector c(radix_.size());
  for (std::size_t i = radix_.size(); i-- > 0;) {
    c[i] = index % radix_[i];
    index /= radix_[i];
  }
  return c;
}

std::size_t FiniteEnumeration::index(const IntVector& coords) const {
  IntVector r = group_.reduce(coords);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) idx = idx * radix_[i] + r[i].convert_to<std::size_t>();
  return idx;
}

std::size_t FiniteEnumeration::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, mul = 1;
  for (std::size_t i = radix_.size(); i-- > 0;) {
    std::size_t x = a % radix_[i], y = b % radix_[i];
    out += ((x + y) % radix_[i]) * mul;
    mul *= radix_[i];
    a /= radix_[i];
    b /= radix_[i];
  }
  return out;
}

std::size_t FiniteEnumeration::negate(std::size_t a) const {
  std::size_t out = 0, mul = 1;
  for (std::size_t i = radix_.size(); i-- > 0;) {
    std::size_t x = a % radix_[i];
    out += ((radix_[i] - x) % radix_[i]) * mul;
    mul *= radix_[i];
    a /= radix_[i];
  }
  return out;
}

} // namespace homspace
