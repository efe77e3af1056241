// homspace: Picard and Brauer invariants of homogeneous spaces G/H.
//
//   homspace describe   --preset "SO(7)" [--expand]
//   homspace invariants --spec group.json [--json]
//   homspace weights    --preset "PGL(2)"
//   homspace ext        --group "2,4" --char "1/2,0"
//   homspace snf        --matrix "2,4;6,8"
//
// Exit status: 0 success, 1 bad input, 2 internal invariant violation.

#include "homspace/error.hpp"
#include "homspace/report.hpp"
#include "homspace/spec_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace homspace;

namespace {

struct ModelArgs {
  std::string spec;
  std::string preset;
};

void add_model_options(CLI::App* cmd, ModelArgs& a) {
  auto* s = cmd->add_option("--spec", a.spec, "group spec JSON file ('-' for stdin)");
  auto* p = cmd->add_option("--preset", a.preset, "SL(n), GL(n), PGL(n), SO(n), Sp(2n) or Spin(n)");
  s->excludes(p);
}

ReductiveModel load_model(const ModelArgs& a) {
  if (!a.preset.empty()) return to_model(GroupSpec{std::nullopt, a.preset, {}, 0, {}, 0});
  if (a.spec.empty()) throw Error("usage", "give --spec <file> or --preset <name>", "--spec");
  std::stringstream buf;
  if (a.spec == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(a.spec);
    if (!in) throw Error("io", "cannot read '" + a.spec + "'", "--spec");
    buf << in.rdbuf();
  }
  return parse_model(buf.str());
}

FgAbGroup parse_group_factors(const std::string& text) {
  IntVector orders;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t end = 0;
    long long d = 0;
    try {
      d = std::stoll(item, &end);
    } catch (const std::logic_error&) {
      end = std::string::npos;
    }
    if (end == std::string::npos || item.find_first_not_of(" \t", end) != std::string::npos || d < 1)
      throw Error("malformed_group", "expected positive cyclic orders such as \"2,4\", got '" + text + "'", "--group");
    orders.emplace_back(d);
  }
  return FgAbGroup::from_cyclic_orders(orders);
}

bool want_color() {
  const char* no = std::getenv("HOMSPACE_NO_COLOR");
  return (no == nullptr || *no == '\0') && isatty(STDOUT_FILENO);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard and Brauer invariants of homogeneous spaces G/H"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output")->configurable(false);

  ModelArgs describe_args, inv_args, weight_args;
  bool expand = false;
  auto* describe = app.add_subcommand("describe", "center generators, gluing group and certificates of a model");
  add_model_options(describe, describe_args);
  describe->add_flag("--expand", expand, "print the explicit spec document of the model");
  describe->add_flag("--json", json, "JSON output");

  auto* invariants = app.add_subcommand("invariants", "Pic, Br, E_al and topological invariants of G/H");
  add_model_options(invariants, inv_args);
  invariants->add_flag("--json", json, "JSON output");

  auto* weights = app.add_subcommand("weights", "restriction of fundamental weights and their Brauer classes");
  add_model_options(weights, weight_args);
  weights->add_flag("--json", json, "JSON output");

  std::string group_text, char_text;
  auto* ext = app.add_subcommand("ext", "character -> extension -> class for a finite abelian group");
  ext->add_option("--group", group_text, "cyclic orders, e.g. \"2,4\"")->required();
  ext->add_option("--char", char_text, "values on the canonical generators, e.g. \"1/2,0\"")->required();
  ext->add_flag("--json", json, "JSON output");

  std::string matrix_text;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", matrix_text, "rows separated by ';', entries by ','")->required();
  snf->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RenderOptions opt{json, !json && want_color()};
    std::string out;
    if (*describe) {
      ReductiveModel h = load_model(describe_args);
      out = expand ? expand_model(h) + "\n" : render_describe(h, opt);
    } else if (*invariants) {
      out = render_invariants(load_model(inv_args), opt);
    } else if (*weights) {
      out = render_weights(load_model(weight_args), opt);
    } else if (*ext) {
      FgAbGroup g = parse_group_factors(group_text);
      out = render_ext(Character(g, parse_fraction_list(char_text, "--char")), opt);
    } else if (*snf) {
      out = render_snf(IntMatrix::parse_literal(matrix_text), opt);
    }
    std::cout << out;
    return 0;
  } catch (const Error& e) {
    std::cerr << render_error(e.code(), e.where(), e.what(), json);
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << render_error("invariant_violation", "", e.what(), json);
    return 2;
  }
}
