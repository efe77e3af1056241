#include "homspace/extension.hpp"

#include "homspace/error.hpp"

namespace homspace {

Character::Character(FgAbGroup group, FractionVector values) : group_(std::move(group)), values_(std::move(values)) {
  if (!group_.is_finite()) throw Error("not_finite", "characters need a finite group, got " + group_.to_string());
  if (values_.size() != group_.num_generators())
    throw Error("dimension_mismatch", "character on " + group_.to_string() + " needs " + std::to_string(group_.num_generators()) + " values", "--char");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = values_[i].mod1();
    if (!(values_[i] * Fraction(group_.factors()[i])).is_integer())
      throw Error("not_a_character", "value " + values_[i].to_string() + " on a generator of order " + group_.factors()[i].str() + " is not a multiple of 1/" + group_.factors()[i].str(), "--char");
  }
}

Character Character::zero(const FgAbGroup& group) { return Character(group, FractionVector(group.num_generators())); }

Fraction Character::operator()(const IntVector& g) const {
  IntVector r = group_.reduce(g);
  Fraction s;
  for (std::size_t i = 0; i < r.size(); ++i) s += Fraction(r[i]) * values_[i];
  return s.mod1();
}

Integer Character::order() const {
  Integer n = 1;
  for (const auto& v : values_) n = lcm(n, v.den());
  return n;
}

bool Character::is_zero() const {
  for (const auto& v : values_)
    if (v.num() != 0) return false;
  return true;
}

Character Character::operator+(const Character& o) const {
  if (!(group_ == o.group_)) throw Error("group_mismatch", "adding characters of different groups");
  FractionVector v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return Character(group_, std::move(v));
}

Character Character::operator-() const {
  FractionVector v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -values_[i];
  return Character(group_, std::move(v));
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxCocycleGroup = 4096;

FiniteEnumeration checked_enumeration(const FgAbGroup& g) {
  FiniteEnumeration en(g);
  if (en.size() > kMaxCocycleGroup)
    throw Error("too_large", "cocycle tables are limited to groups of order " + std::to_string(kMaxCocycleGroup));
  return en;
}

// F(a) = sum_h c(a,h).
std::vector<Integer> row_sums(const FiniteEnumeration& en, const std::vector<Integer>& t) {
  const std::size_t n = en.size();
  std::vector<Integer> f(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t h = 0; h < n; ++h) f[a] += t[a * n + h];
  return f;
}

} // namespace

SymmetricCocycle::SymmetricCocycle(FgAbGroup group, std::vector<Integer> table)
    : enum_(checked_enumeration(group)), table_(std::move(table)) {
  const std::size_t n = enum_.size();
  if (table_.size() != n * n)
    throw Error("dimension_mismatch", "cocycle table needs " + std::to_string(n * n) + " entries");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a] != 0) throw Error("not_a_cocycle", "cocycle is not normalized: c(0, g) != 0");
    for (std::size_t b = a + 1; b < n; ++b)
      if (table_[a * n + b] != table_[b * n + a]) throw Error("not_a_cocycle", "cocycle is not symmetric");
  }
  // A symmetric normalized table is a cocycle iff it is the coboundary of
  // F / |Gamma| over Q, which is an O(n^2) check.
  std::vector<Integer> f = row_sums(enum_, table_);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (Integer(n) * table_[a * n + b] != f[a] + f[b] - f[enum_.add(a, b)])
        throw Error("not_a_cocycle", "cocycle identity fails at (" + to_string(enum_.coords(a)) + "), (" + to_string(enum_.coords(b)) + ")");
}

SymmetricCocycle SymmetricCocycle::zero(const FgAbGroup& group) {
  FiniteEnumeration en = checked_enumeration(group);
  return SymmetricCocycle(group, std::vector<Integer>(en.size() * en.size()));
}

bool ExtensionData::is_exact() const {
  return inject.is_injective() && project.is_surjective() && is_exact_at(inject, project);
}

ExtensionData character_to_extension(const Character& chi) {
  const FgAbGroup& g = chi.group();
  const Integer n = chi.order();
  FgAbGroup ambient(1, g.factors());
  std::vector<IntVector> gens;
  IntVector base(ambient.num_generators());
  base[0] = n;
  gens.push_back(base);
  for (std::size_t i = 0; i < g.num_generators(); ++i) {
    IntVector v(ambient.num_generators());
    v[0] = (chi.values()[i] * Fraction(n)).num();
    v[1 + i] = 1;
    gens.push_back(std::move(v));
  }
  SubgroupPresentation e = subgroup_from_generators(ambient, gens);

  IntVector z = *e.coordinates_of(base);
  AbHom inject(FgAbGroup::free(1), e.group, IntMatrix::from_columns({z}, e.group.num_generators()));
  AbHom project(e.group, g, e.inclusion.matrix().row_block(1, g.num_generators()));
  return ExtensionData{e.group, std::move(inject), std::move(project), n, std::move(e)};
}

SymmetricCocycle cocycle_of(const ExtensionData& e) {
  const FgAbGroup& g = e.project.codomain();
  FiniteEnumeration en = checked_enumeration(g);
  const std::size_t n = en.size();
  const IntMatrix lift = IntMatrix::hcat(e.project.matrix(), g.relation_matrix());
  const IntVector q_row = e.realization.inclusion.matrix().row(0);

  // q[x] = scaled Q-coordinate of the section value s(x); s(0) = 0.
  std::vector<Integer> q(n);
  for (std::size_t x = 1; x < n; ++x) {
    auto sol = solve_integer(lift, en.coords(x));
    if (!sol) throw InvariantViolation("extension does not surject onto Gamma");
    Integer s = 0;
    for (std::size_t j = 0; j < q_row.size(); ++j) s += q_row[j] * (*sol)[j];
    q[x] = s;
  }
  std::vector<Integer> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Integer d = q[a] + q[b] - q[en.add(a, b)];
      if (d % e.scale != 0) throw InvariantViolation("cocycle value is not integral");
      table[a * n + b] = d / e.scale;
    }
  return SymmetricCocycle(g, std::move(table));
}

Character cocycle_class(const SymmetricCocycle& c) {
  const FiniteEnumeration& en = c.elements();
  const std::size_t n = en.size();
  std::vector<Integer> f = row_sums(en, c.table());
#ifndef NDEBUG
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (f[a] + f[b] - f[en.add(a, b)] != Integer(n) * c(a, b)) throw InvariantViolation("averaging lift is not a primitive of c");
#endif
  FractionVector values;
  for (std::size_t i = 0; i < c.group().num_generators(); ++i) {
    IntVector e(c.group().num_generators());
    e[i] = 1;
    values.push_back(Fraction(f[en.index(e)], Integer(n)));
  }
  return Character(c.group(), std::move(values));
}

SymmetricCocycle baer_sum(const SymmetricCocycle& a, const SymmetricCocycle& b) {
  if (!(a.group() == b.group())) throw Error("group_mismatch", "Baer sum of cocycles on " + a.group().to_string() + " and " + b.group().to_string());
  std::vector<Integer> t(a.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.table()[i] + b.table()[i];
  return SymmetricCocycle(a.group(), std::move(t));
}

SymmetricCocycle negate(const SymmetricCocycle& c) {
  std::vector<Integer> t(c.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = -c.table()[i];
  return SymmetricCocycle(c.group(), std::move(t));
}

bool are_equivalent(const SymmetricCocycle& a, const SymmetricCocycle& b) {
  if (!(a.group() == b.group())) throw Error("group_mismatch", "comparing cocycles on " + a.group().to_string() + " and " + b.group().to_string());
  return cocycle_class(a) == cocycle_class(b);
}

SymmetricCocycle coboundary(const FgAbGroup& group, const std::vector<Integer>& f) {
  FiniteEnumeration en = checked_enumeration(group);
  const std::size_t n = en.size();
  if (f.size() != n) throw Error("dimension_mismatch", "coboundary needs one value per group element");
  std::vector<Integer> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = f[a] + f[b] - f[en.add(a, b)];
  return SymmetricCocycle(group, std::move(t));
}

FgAbGroup ext_group_via_characters(const FgAbGroup& gamma) { return dual_finite(gamma).dual; }

IntVector ext_class(const Character& chi) {
  const FgAbGroup& g = chi.group();
  IntMatrix r = g.relation_matrix();
  PresentationResult ext = from_presentation(r.cols(), r.transpose());
  IntVector y(g.num_generators());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = (chi.values()[j] * Fraction(g.factors()[j])).num();
  return ext.projection.apply(y);
}

} // namespace homspace
