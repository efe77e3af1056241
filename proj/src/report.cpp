#include "homspace/report.hpp"

#include "homspace/error.hpp"
#include "homspace/invariants.hpp"
#include "homspace/spec_io.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace homspace {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) return x.convert_to<long long>();
  return x.str();
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const FractionVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json rows_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json header(const std::string& command) { return json{{"tool", "homspace"}, {"version", kVersion}, {"command", command}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const std::vector<std::string>& conventions() {
  static const std::vector<std::string> c = {
      "simple roots and fundamental weights follow Bourbaki node numbering; nodes of a product are numbered consecutively",
      "Cartan matrix entries are C[i][j] = <alpha_i, alpha_j^vee>, so row i is alpha_i in fundamental-weight coordinates",
      "center coefficients are taken over the canonical generators of Hom(P/Q, Q/Z); generator i takes the value 1/d_i on the i-th generator of P/Q",
      "a character chi of a finite group maps to the extension class whose averaged cocycle lift returns chi (positive sign)",
  };
  return c;
}

struct Text {
  bool color;
  std::ostringstream os;
  void heading(const std::string& s) { os << (color ? "\x1b[1m" : "") << s << (color ? "\x1b[0m" : "") << "\n"; }
  void field(const std::string& k, const std::string& v) {
    os << "  " << k;
    for (std::size_t i = k.size(); i < 18; ++i) os << ' ';
    os << v << "\n";
  }
};

std::string model_title(const ReductiveModel& h) { return h.name.empty() ? std::string("(unnamed)") : h.name; }

std::string orders_list(const FgAbGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < g.num_generators(); ++i) s += (i ? "," : "") + g.generator_order(i).str();
  return s.empty() ? "none" : s;
}

json weight_table_json(const WeightBrauerTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"node", r.node},
                    {"factor", r.factor},
                    {"local_node", r.local_node},
                    {"weight", to_json(r.weight)},
                    {"restriction", to_json(r.restriction.values)},
                    {"trivial", r.restriction.is_trivial()},
                    {"brauer_class", to_json(r.brauer_class)}});
  return json{{"kernel", t.kernel.to_string()}, {"brauer", t.brauer.to_string()}, {"rows", rows}};
}

void weight_table_text(Text& t, const WeightBrauerTable& w) {
  t.field("kernel", w.kernel.to_string());
  t.field("Br(G/H)", w.brauer.to_string());
  for (const auto& r : w.rows) {
    std::string label = "w" + std::to_string(r.node) + " (" + r.factor + " node " + std::to_string(r.local_node) + ")";
    std::string v = r.restriction.is_trivial() ? "trivial" : "restriction (" + to_string(r.restriction.values) + "), class (" + to_string(r.brauer_class) + ")";
    t.field(label, v);
  }
}

} // namespace

std::string render_describe(const ReductiveModel& h, const RenderOptions& opt) {
  Validation v = validate(h);
  GluingGroup g = gluing_group(h);
  const RootDatum& d = h.ss;
  if (opt.json) {
    json j = header("describe");
    j["model"] = json::parse(expand_model(h));
    j["rank"] = d.rank();
    j["cartan"] = rows_json(d.cartan());
    j["pq_group"] = d.pq_group().to_string();
    json orders = json::array();
    for (std::size_t i = 0; i < d.center().num_generators(); ++i) orders.push_back(to_json(d.center().generator_order(i)));
    j["center"] = {{"group", d.center().to_string()}, {"generator_orders", orders}};
    j["gamma"] = {{"group", g.gamma.to_string()}, {"order", to_json(v.gamma_order)}, {"exponent", to_json(v.gamma_exponent)}};
    j["certificates"] = v.certificates;
    j["conventions"] = conventions();
    return dump(j);
  }
  Text t{opt.color, {}};
  t.heading("H = " + model_title(h));
  t.field("semisimple", d.to_string());
  t.field("torus rank", std::to_string(h.torus_rank));
  t.field("unipotent dim", std::to_string(h.unipotent_dim));
  t.field("Cartan", d.rank() ? d.cartan().to_literal() : "empty");
  t.field("P/Q", d.pq_group().to_string());
  t.field("center", d.center().to_string());
  t.field("center orders", orders_list(d.center()));
  for (std::size_t i = 0; i < h.gluing.size(); ++i)
    t.field("gluing " + std::to_string(i), "center (" + to_string(h.gluing[i].center) + ") torus (" + to_string(h.gluing[i].torus) + ")");
  t.field("Gamma", g.gamma.to_string());
  t.heading("certificates");
  for (const auto& c : v.certificates) t.os << "  - " << c << "\n";
  return t.os.str();
}

std::string render_invariants(const ReductiveModel& h, const RenderOptions& opt) {
  InvariantReport r = invariant_report(h);
  Pi1Result p = pi1(h);
  std::optional<WeightBrauerTable> w;
  if (h.torus_rank == 0) w = weight_brauer_table(h);
  if (opt.json) {
    json j = header("invariants");
    j["model"] = json::parse(expand_model(h));
    j["pi1_H"] = r.pi1_H.to_string();
    j["pi1_derived"] = p.derived_pi1.to_string();
    j["pic"] = {{"group", r.pic_group.to_string()}, {"lattice", rows_json(r.pic_lattice.basis)}, {"index", to_json(r.pic_lattice.index)}};
    j["brauer"] = r.brauer.to_string();
    j["e_al"] = r.e_al.to_string();
    j["pic_of_group"] = r.pic_of_group.to_string();
    j["topology"] = {{"pi1_M", r.topology.pi1_M.to_string()},
                     {"pi2_M", r.topology.pi2_M.to_string()},
                     {"h2_M", r.topology.h2_M.to_string()},
                     {"tors_h3_M", r.topology.tors_h3_M.to_string()}};
    j["weight_table"] = w ? weight_table_json(*w) : json(nullptr);
    j["notes"] = r.notes;
    j["conventions"] = conventions();
    return dump(j);
  }
  Text t{opt.color, {}};
  t.heading("H = " + model_title(h));
  t.field("pi_1(H)", r.pi1_H.to_string());
  t.field("pi_1(H^(1))", p.derived_pi1.to_string());
  t.heading("M = G/H");
  t.field("Pic(M)", r.pic_group.to_string() + (h.torus_rank ? "  lattice " + r.pic_lattice.basis.to_literal() : ""));
  t.field("Br(M)", r.brauer.to_string());
  t.field("E_al(H, Gm)", r.e_al.to_string());
  t.field("Pic(H)", r.pic_of_group.to_string());
  t.field("pi_1(M)", r.topology.pi1_M.to_string());
  t.field("pi_2(M)", r.topology.pi2_M.to_string());
  t.field("H^2(M, Z)", r.topology.h2_M.to_string());
  t.field("Tors H^3(M, Z)", r.topology.tors_h3_M.to_string());
  if (w) {
    t.heading("fundamental weights");
    weight_table_text(t, *w);
  }
  t.heading("notes");
  for (const auto& n : r.notes) t.os << "  - " << n << "\n";
  return t.os.str();
}

std::string render_weights(const ReductiveModel& h, const RenderOptions& opt) {
  WeightBrauerTable w = weight_brauer_table(h);
  if (opt.json) {
    json j = header("weights");
    j["model"] = json::parse(expand_model(h));
    j["weight_table"] = weight_table_json(w);
    j["conventions"] = conventions();
    return dump(j);
  }
  Text t{opt.color, {}};
  t.heading("H = " + model_title(h));
  weight_table_text(t, w);
  return t.os.str();
}

std::string render_ext(const Character& chi, const RenderOptions& opt) {
  ExtensionData e = character_to_extension(chi);
  bool exact = e.is_exact();
  Character back = cocycle_class(cocycle_of(e));
  if (!exact || !(back == chi)) throw InvariantViolation("character -> extension -> character round trip failed");
  FgAbGroup ext = ext1_z(chi.group());
  IntVector cls = ext_class(chi);
  if (opt.json) {
    json j = header("ext");
    j["gamma"] = chi.group().to_string();
    j["character"] = to_json(chi.values());
    j["character_order"] = to_json(chi.order());
    j["extension"] = {{"middle", e.middle.to_string()},
                      {"inject", rows_json(e.inject.matrix())},
                      {"project", rows_json(e.project.matrix())},
                      {"exact", exact}};
    j["cocycle_class"] = to_json(back.values());
    j["ext1"] = ext.to_string();
    j["ext_group_via_characters"] = ext_group_via_characters(chi.group()).to_string();
    j["ext_class"] = to_json(cls);
    j["conventions"] = conventions();
    return dump(j);
  }
  Text t{opt.color, {}};
  t.heading("Gamma = " + chi.group().to_string());
  t.field("character", "(" + to_string(chi.values()) + "), order " + chi.order().str());
  t.field("extension E", e.middle.to_string());
  t.field("Z -> E", e.inject.matrix().to_literal());
  t.field("E -> Gamma", e.project.matrix().empty() ? "empty" : e.project.matrix().to_literal());
  t.field("exact", exact ? "yes" : "no");
  t.field("cocycle class", "(" + to_string(back.values()) + ")");
  t.field("Ext^1(Gamma, Z)", ext.to_string());
  t.field("class in Ext^1", "(" + to_string(cls) + ")");
  return t.os.str();
}

std::string render_snf(const IntMatrix& m, const RenderOptions& opt) {
  SnfResult s = smith_normal_form(m);
  auto lit = [](const IntMatrix& x) { return x.empty() ? std::string() : x.to_literal(); };
  if (opt.json) {
    json j = header("snf");
    j["input"] = lit(m);
    j["U"] = lit(s.U);
    j["D"] = lit(s.D);
    j["V"] = lit(s.V);
    j["invariant_factors"] = to_json(s.diagonal());
    j["rank"] = s.rank();
    return dump(j);
  }
  Text t{opt.color, {}};
  t.heading("Smith normal form, U M V = D");
  t.field("D", lit(s.D));
  t.field("U", lit(s.U));
  t.field("V", lit(s.V));
  t.field("rank", std::to_string(s.rank()));
  return t.os.str();
}

std::string render_error(const std::string& code, const std::string& where, const std::string& message, bool as_json) {
  if (as_json) {
    json j{{"error", {{"code", code}, {"where", where}, {"message", message}}}};
    return j.dump() + "\n";
  }
  return "error[" + code + "]" + (where.empty() ? "" : " at " + where) + ": " + message + "\n";
}

} // namespace homspace
