// Command-line surface for the index-5 principal graph workbench.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pg5/branch2222.hpp"
#include "pg5/catalog.hpp"
#include "pg5/cells.hpp"
#include "pg5/graph_ops.hpp"
#include "pg5/isomorphism.hpp"
#include "pg5/obstructions.hpp"
#include "pg5/solver.hpp"
#include "pg5/spectral.hpp"

namespace {

using nlohmann::json;
using namespace pg5;

/// A pair argument is a catalog name, or a path to a JSON object
/// {"plus": ..., "minus": ...}, or a two-line text file.
BigraphPair load_pair(const std::string& arg) {
  if (const CatalogEntry* entry = find_entry(arg)) return entry->pair();
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("no catalog entry or readable file named '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first_printable = text.find_first_not_of(" \t\r\n");
  if (first_printable != std::string::npos && text[first_printable] == '{') {
    const json j = json::parse(text);
    return parse_pair(j.at("plus").get<std::string>(), j.at("minus").get<std::string>());
  }
  std::istringstream lines(text);
  std::string plus, minus;
  if (!std::getline(lines, plus) || !std::getline(lines, minus))
    throw std::runtime_error("pair file needs two lines (plus and minus graph strings)");
  if (!plus.empty() && plus.back() == '\r') plus.pop_back();
  if (!minus.empty() && minus.back() == '\r') minus.pop_back();
  return parse_pair(plus, minus);
}

json graph_info(const Bigraph& g) {
  json j;
  const SpectralData s = norm_squared(g, BigInt(5));
  j["poly"] = s.char_poly.str("u");
  j["isolating_interval"] = {to_string(s.interval_lo), to_string(s.interval_hi)};
  if (s.exact_target) j["norm_sq_exact"] = s.exact_target->str();
  else if (s.exact_root) j["norm_sq_exact"] = to_string(*s.exact_root);
  j["supertransitivity"] = supertransitivity(g);
  if (const auto prof = star_profile(g)) {
    j["star"] = {{"arms", prof->arms},
                 {"star_arm", prof->star_arm},
                 {"star_on_longest", prof->star_on_longest}};
  }
  if (const auto delta = exact_delta(g)) {
    const DimensionVector dims = dimension_vector(g, *delta);
    json layers = json::array();
    for (int d = 0; d <= g.max_depth(); ++d) {
      json layer = json::array();
      for (int v = 0; v < g.layer_size(d); ++v) {
        const QSqrt5& q = dims.at({d, v});
        layer.push_back({{"value", q.str()}, {"approx", q.to_double()}});
      }
      layers.push_back(layer);
    }
    j["dimensions"] = layers;
  }
  return j;
}

int run_parse(const std::string& text) {
  const Bigraph g = parse_bigraph(text);
  json layers = json::array();
  for (int d = 0; d <= g.max_depth(); ++d) layers.push_back(g.layer_size(d));
  json duals = json::array();
  for (int k = 0; k < g.num_even_layers(); ++k) {
    json perm = json::array();
    for (int v : g.dual_layer(k)) perm.push_back(v + 1);
    duals.push_back(perm);
  }
  std::cout << json{{"layers", layers},
                    {"duals", duals},
                    {"vertices", g.total_vertices()},
                    {"round_trip", serialize_bigraph(g)}}
                   .dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for principal graph pairs at index exactly 5"};
  app.require_subcommand(1);

  std::string text, pair_arg, pair_b;
  bool allow_opposite = false, short_circuit = false, all = false, orbits = false;
  bool as_markdown = false, as_json = false;
  int restarts = 100;
  double tol = 1e-10;
  std::uint64_t seed = 1;

  auto* parse_cmd = app.add_subcommand("parse", "Decode a graph string");
  parse_cmd->add_option("string", text)->required();

  auto* info_cmd = app.add_subcommand("info", "Norms, dimensions, supertransitivity, star shape");
  info_cmd->add_option("pair", pair_arg)->required();

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Run the obstruction battery");
  obstruct_cmd->add_option("pair", pair_arg)->required();
  obstruct_cmd->add_flag("--short-circuit", short_circuit);

  auto* iso_cmd = app.add_subcommand("iso", "Search for a pair isomorphism");
  iso_cmd->add_option("pair_a", pair_arg)->required();
  iso_cmd->add_option("pair_b", pair_b)->required();
  iso_cmd->add_flag("--opposite", allow_opposite, "also try the opposite of the second pair");

  auto* connect_cmd = app.add_subcommand("connect", "Solve the bi-unitary connection equations");
  connect_cmd->add_option("pair", pair_arg)->required();
  connect_cmd->add_option("--restarts", restarts);
  connect_cmd->add_option("--tol", tol);
  connect_cmd->add_option("--seed", seed);
  connect_cmd->add_flag("--orbits", orbits, "cluster solutions into gauge orbits");

  auto* classify_cmd = app.add_subcommand("classify", "Classify one pair or the whole catalog");
  classify_cmd->add_option("pair", pair_arg);
  classify_cmd->add_flag("--all", all);

  auto* report_cmd = app.add_subcommand("report", "Reproduce the index-5 classification");
  report_cmd->add_flag("--markdown", as_markdown);
  report_cmd->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return run_parse(text);
    if (info_cmd->parsed()) {
      const BigraphPair p = load_pair(pair_arg);
      std::cout << json{{"plus", graph_info(p.plus)},
                        {"minus", graph_info(p.minus)},
                        {"norms_agree", norms_agree(p)}}
                       .dump(2)
                << "\n";
      return 0;
    }
    if (obstruct_cmd->parsed()) {
      json out = json::array();
      for (const auto& v : run_battery(load_pair(pair_arg), short_circuit))
        out.push_back(v.to_json());
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (iso_cmd->parsed()) {
      const auto iso = pair_isomorphic(load_pair(pair_arg), load_pair(pair_b), allow_opposite);
      if (!iso) {
        std::cout << json{{"isomorphic", false}}.dump(2) << "\n";
        return 0;
      }
      json perms{{"plus", iso->plus}, {"minus", iso->minus}};
      std::cout << json{{"isomorphic", true}, {"swapped", iso->swapped}, {"witness", perms}}.dump(2)
                << "\n";
      return 0;
    }
    if (connect_cmd->parsed()) {
      const CellComplex c = build_cells(load_pair(pair_arg));
      json out{{"cells", c.num_cells()},
               {"max_unitarity_block", c.max_unitarity_block},
               {"max_renorm_block", c.max_renorm_block}};
      if (orbits) {
        out["orbits"] = count_gauge_orbits(c, restarts, tol, seed).to_json();
      } else {
        const SolveResult sr = solve(c, restarts, tol, seed);
        json summary = sr.to_json();
        summary.erase("best");  // keep stdout reports compact
        out["solve"] = summary;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (classify_cmd->parsed()) {
      if (all) {
        json out = json::array();
        for (const auto& entry : catalog_entries())
          out.push_back(classify_pair(entry.pair(), entry.name).to_json());
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      if (pair_arg.empty()) throw std::runtime_error("classify needs a pair or --all");
      std::cout << classify_pair(load_pair(pair_arg), pair_arg).to_json().dump(2) << "\n";
      return 0;
    }
    if (report_cmd->parsed()) {
      const Report rep = reproduce_classification();
      if (as_markdown || !as_json) std::cout << rep.to_markdown();
      if (as_json) std::cout << rep.to_json().dump(2) << "\n";
      return rep.ok ? 0 : 2;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
