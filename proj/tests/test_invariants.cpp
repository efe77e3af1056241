#include "doctest.h"
#include "support.hpp"

#include "homspace/error.hpp"
#include "homspace/invariants.hpp"
#include "homspace/report.hpp"
#include "homspace/spec_io.hpp"

#include <algorithm>

using namespace homspace;
using testing_support::Rng;
using testing_support::uniform;

namespace {

FgAbGroup Z(std::size_t r = 1) { return FgAbGroup::free(r); }
FgAbGroup C(long long n) { return FgAbGroup::cyclic(n); }

ReductiveModel unipotent_only() {
  ReductiveModel h;
  h.unipotent_dim = 1;
  return h;
}

std::string so(int n) { return "SO(" + std::to_string(n) + ")"; }

bool has_note(const InvariantReport& r, const std::string& needle) {
  return std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

} // namespace

TEST_CASE("picard examples") {
  for (int n = 3; n <= 10; ++n) CHECK(picard(preset(so(n))).group.is_trivial());
  CHECK(picard(unipotent_only()).group.is_trivial());
  for (int n = 2; n <= 6; ++n) {
    PicardResult p = picard(preset("GL(" + std::to_string(n) + ")"));
    CHECK(p.group == Z());
    CHECK(p.lattice.index == n);
  }
}

TEST_CASE("brauer examples") {
  CHECK(brauer(preset("SO(2)")).is_trivial());
  for (int n = 3; n <= 10; ++n) CHECK(brauer(preset(so(n))) == C(2));
  for (const char* s : {"Spin(7)", "Spin(8)", "Sp(6)", "SL(5)"}) CHECK(brauer(preset(s)).is_trivial());
  CHECK(brauer(preset("PGL(4)")) == C(4));
}

TEST_CASE("algebraic extension group examples") {
  CHECK(algebraic_extension_group(preset("GL(1)")).is_trivial());
  for (int n = 3; n <= 8; ++n) CHECK(algebraic_extension_group(preset(so(n))) == C(2));
  for (int n = 2; n <= 6; ++n) CHECK(algebraic_extension_group(preset("PGL(" + std::to_string(n) + ")")) == C(n));
}

TEST_CASE("picard of the group") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(picard_of_group(preset("GL(" + std::to_string(n) + ")")).is_trivial());
    CHECK(picard_of_group(preset("PGL(" + std::to_string(n) + ")")) == C(n));
    CHECK(picard_of_group(preset("SL(" + std::to_string(n) + ")")).is_trivial());
  }
}

TEST_CASE("topological invariants examples") {
  TopologicalInvariants t = topological_invariants(preset("SO(3)"));
  CHECK(t.pi1_M.is_trivial());
  CHECK(t.pi2_M == C(2));
  CHECK(t.h2_M.is_trivial());
  CHECK(t.tors_h3_M == C(2));
  TopologicalInvariants g = topological_invariants(preset("GL(1)"));
  CHECK(g.pi2_M == Z());
  CHECK(g.h2_M == Z());
  CHECK(g.tors_h3_M.is_trivial());
  TopologicalInvariants s = topological_invariants(preset("Spin(9)"));
  CHECK(s.pi2_M.is_trivial());
  CHECK(s.h2_M.is_trivial());
  CHECK(s.tors_h3_M.is_trivial());
}

TEST_CASE("report notes") {
  InvariantReport r = invariant_report(preset("SO(5)"));
  CHECK(has_note(r, "Br = Br'"));
  CHECK(has_note(r, "Pic = Pic^an"));
  InvariantReport u = invariant_report(unipotent_only());
  CHECK_FALSE(has_note(u, "Pic = Pic^an"));
  CHECK(u.notes.size() == r.notes.size());
  CHECK(u.pic_group.is_trivial());
}

TEST_CASE("weight table examples") {
  for (int m = 1; m <= 7; ++m) {
    WeightBrauerTable t = weight_brauer_table(preset(so(2 * m + 1)));
    REQUIRE(t.rows.size() == static_cast<std::size_t>(m));
    CHECK(t.kernel == C(2));
    CHECK(t.brauer == C(2));
    CHECK_FALSE(t.rows[static_cast<std::size_t>(m) - 1].restriction.is_trivial());
    if (m > 1) CHECK(t.rows[0].restriction.is_trivial());
    CHECK(t.rows[0].node == 1);
  }
  for (const auto& row : weight_brauer_table(preset("SL(5)")).rows) CHECK(row.restriction.is_trivial());
  WeightBrauerTable p = weight_brauer_table(preset("PGL(2)"));
  REQUIRE(p.rows.size() == 1);
  CHECK(p.rows[0].restriction.values == FractionVector{Fraction(1, 2)});
  CHECK(p.rows[0].factor == "A1");

  CHECK_THROWS_AS(weight_brauer_table(preset("GL(3)")), Error);
  try {
    weight_brauer_table(preset("GL(3)"));
  } catch (const Error& e) {
    CHECK(e.code() == "not_semisimple");
  }
}

TEST_CASE("weight table rows over a product use concatenated numbering") {
  ReductiveModel h = parse_model(R"j({"semisimple":["A1","B3"],"gluing":[{"center":[1,1]}]})j");
  WeightBrauerTable t = weight_brauer_table(h);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[1].node == 2);
  CHECK(t.rows[1].factor == "B3");
  CHECK(t.rows[1].local_node == 1);
  CHECK_FALSE(t.rows[0].restriction.is_trivial());
  CHECK(t.rows[1].restriction.is_trivial());
  CHECK_FALSE(t.rows[3].restriction.is_trivial());
}

TEST_CASE("brauer = e_al = tors H^3 on random models") {
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    ReductiveModel h = testing_support::random_model(rng);
    InvariantReport r = invariant_report(h);
    CHECK(r.brauer == r.e_al);
    CHECK(r.brauer == r.topology.tors_h3_M);
    CHECK(r.brauer.order().has_value());
    CHECK(r.topology.pi1_M.is_trivial());
    CHECK(r.topology.h2_M == hom_group(r.pi1_H, Z()));
    CHECK(r.pic_group == hom_group(r.pi1_H, Z()));
    // Oracle: Ext^1(pi_1, Z) is the torsion of pi_1, seen through the closure of Gamma.
    CHECK(r.brauer == testing_support::brute_force_kernel(h));
  }
}

TEST_CASE("cotorsion agreement for n <= 12") {
  Rng rng(62);
  for (int t = 0; t < 30; ++t) {
    ReductiveModel h = testing_support::random_model(rng);
    for (long long n = 1; n <= 12; ++n) CHECK(cotorsion_agrees(h, n));
  }
}

TEST_CASE("weight restrictions are exact on semisimple models") {
  Rng rng(63);
  for (int t = 0; t < 40; ++t) {
    ReductiveModel h = testing_support::random_model(rng);
    h.torus_rank = 0;
    for (auto& g : h.gluing) g.torus.clear();
    SemisimpleModel s = derived_subgroup(h);
    WeightBrauerTable table = weight_brauer_table(s);
    DualPairing dk = dual_finite(s.kernel.group);
    std::vector<IntVector> images;
    for (const auto& row : table.rows) images.push_back(row.restriction.coords);
    CHECK(subgroup_from_generators(dk.dual, images).group == dk.dual);
    CHECK(table.brauer == ext1_z(s.kernel.group));
    // Kernel lattice: weights with trivial restriction.
    Lattice l = character_lattice_of_quotient(s.datum, s.kernel);
    CHECK(l.index == *s.kernel.group.order());
    for (std::size_t i = 0; i < l.basis.rows(); ++i) CHECK(restrict_weight(s.datum, l.basis.row(i), s.kernel).is_trivial());
  }
}

TEST_CASE("invariants are independent of the presentation and the unipotent part") {
  Rng rng(64);
  for (int t = 0; t < 40; ++t) {
    ReductiveModel h = testing_support::random_model(rng, 24);
    ReductiveModel g = testing_support::re_present(h, rng);
    CHECK(testing_support::invariant_fingerprint(h) == testing_support::invariant_fingerprint(g));
    ReductiveModel u = h;
    u.unipotent_dim = 5;
    CHECK(testing_support::invariant_fingerprint(h) == testing_support::invariant_fingerprint(u));
  }
}

TEST_CASE("parse_spec examples") {
  ReductiveModel so5 = parse_model(R"j({"preset":"SO(5)"})j");
  CHECK(so5.ss.to_string() == "B2");
  CHECK(pi1(so5).group == C(2));

  ReductiveModel pgl2 = parse_model(R"j({"semisimple":[{"family":"A","rank":1}],"torus_rank":0,"gluing":[{"center":[1],"torus":[]}]})j");
  CHECK(pi1(pgl2).group == pi1(preset("PGL(2)")).group);
  CHECK(brauer(pgl2) == C(2));

  ReductiveModel gl2 = parse_model(R"j({"semisimple":["A1"],"torus_rank":1,"gluing":[{"center":[1],"torus":["1/2"]}]})j");
  CHECK(pi1(gl2).group == Z());

  auto error_of = [](const std::string& text) {
    try {
      parse_model(text);
    } catch (const Error& e) {
      return e.code() + " " + e.where();
    }
    return std::string("none");
  };
  CHECK(error_of(R"j({"torus_rank":-1})j") == "schema /torus_rank");
  CHECK(error_of(R"j({"colour":1})j") == "schema /colour");
  CHECK(error_of(R"j({"semisimple":["A1"],"torus_rank":1,"gluing":[{"center":[1],"torus":["1/x"]}]})j") == "malformed_fraction /gluing/0/torus/0");
  CHECK(error_of(R"j({"preset":"U(3)"})j").rfind("unknown_preset", 0) == 0);
  CHECK(error_of("{").rfind("malformed_json", 0) == 0);
  CHECK(error_of(R"j({"semisimple":[{"family":"B","rank":1}]})j").rfind("invalid_rank", 0) == 0);
}

TEST_CASE("expanded presets parse back to the same model") {
  for (const char* s : {"SO(7)", "GL(3)", "PGL(4)", "Spin(10)", "Sp(6)", "SO(2)", "SO(8)"}) {
    ReductiveModel h = preset(s);
    ReductiveModel back = parse_model(expand_model(h));
    CHECK(back.ss == h.ss);
    CHECK(back.torus_rank == h.torus_rank);
    CHECK(testing_support::same_gluing(back, h));
  }
}

TEST_CASE("rendering is deterministic") {
  RenderOptions json{true, false}, text{false, false};
  for (const char* s : {"SO(7)", "GL(2)", "PGL(3)"}) {
    ReductiveModel h = preset(s);
    CHECK(render_invariants(h, json) == render_invariants(preset(s), json));
    CHECK(render_invariants(h, text) == render_invariants(h, text));
  }
  CHECK(render_invariants(preset("SO(7)"), text).find("Z/2") != std::string::npos);
  CHECK(render_snf(IntMatrix::parse_literal("2,4;6,8"), text).find("2,0;0,4") != std::string::npos);
}
