#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "eqcube/casson.hpp"
#include "eqcube/codec.hpp"
#include "eqcube/diagram.hpp"
#include "eqcube/pipeline.hpp"
#include "eqcube/self_check.hpp"
#include "eqcube/surgery.hpp"

namespace {

using eqcube::Json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eqcube::ParseFailure("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eqcube::Error(eqcube::ErrorCode::InvalidDatum, "cannot write " + path);
  out << text << "\n";
}

void print_error(const eqcube::Error& e) {
  Json err = {{"code", std::string(eqcube::name(e.code()))}, {"message", e.what()}};
  if (const auto* pf = dynamic_cast<const eqcube::ParseFailure*>(&e); pf && pf->line() > 0) {
    err["line"] = pf->line();
    err["column"] = pf->column();
  }
  if (const auto* me = dynamic_cast<const eqcube::MoveError*>(&e)) err["move"] = me->index();
  std::cerr << Json{{"error", err}}.dump(2) << "\n";
}

// "A..B" with integers A <= B.
eqcube::DegreeWindow parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw eqcube::ParseFailure("--degree-window expects A..B, got \"" + text + "\"");
  try {
    std::size_t used = 0;
    eqcube::DegreeWindow w;
    w.lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string hi = text.substr(dots + 2);
    w.hi = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return w;
  } catch (const std::logic_error&) {
    throw eqcube::ParseFailure("--degree-window expects A..B, got \"" + text + "\"");
  }
}

eqcube::Bead decode_bead(const Json& j, const eqcube::HLPoly& delta, const std::string& path) {
  return eqcube::Bead::from_fraction(eqcube::decode_frac(j, path), delta);
}

// A DiagramVector array, {"theta": [P, Q, R]} or {"dumbbell": [P, Q]}.
eqcube::DiagramVector decode_diagram_input(const Json& j, const eqcube::HLPoly& delta) {
  if (j.is_array()) return eqcube::decode_diagram(j);
  if (j.is_object() && j.contains("theta")) {
    const Json& b = j["theta"];
    if (!b.is_array() || b.size() != 3) throw eqcube::ParseFailure("$.theta: expected three beads");
    return eqcube::theta(decode_bead(b[0], delta, "$.theta[0]"), decode_bead(b[1], delta, "$.theta[1]"),
                         decode_bead(b[2], delta, "$.theta[2]"));
  }
  if (j.is_object() && j.contains("dumbbell")) {
    const Json& b = j["dumbbell"];
    if (!b.is_array() || b.size() != 2) throw eqcube::ParseFailure("$.dumbbell: expected two beads");
    return eqcube::dumbbell(decode_bead(b[0], delta, "$.dumbbell[0]"), decode_bead(b[1], delta, "$.dumbbell[1]"));
  }
  throw eqcube::ParseFailure("$: expected a diagram vector, {\"theta\": [...]} or {\"dumbbell\": [...]}");
}

eqcube::HLPoly parse_delta_flag(const std::string& text) {
  if (text.empty()) return eqcube::HLPoly(1);
  return eqcube::decode_hlpoly(eqcube::parse_json_text(text), "--delta");
}

Json encode_labeled(const eqcube::LabeledGraph& g) {
  Json edges = Json::array();
  for (const auto& [t, h] : g.edges) edges.push_back({t + 1, h + 1});
  return {{"vertices", g.vertices}, {"edges", edges}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the equivariant cube invariant Q(M, K)", "eqcube"};
  app.require_subcommand(1);

  std::string manifest_path;
  std::string out_path;
  std::optional<int> kmax;
  std::string window_text;
  auto* compute = app.add_subcommand("compute", "Run a move manifest and write the JSON report");
  compute->add_option("--manifest", manifest_path, "Manifest JSON file ('-' for stdin)")->required();
  compute->add_option("--out", out_path, "Report file (default: stdout)");
  compute->add_option("--kmax", kmax, "Reduce Q modulo Q_1..Q_kmax");
  compute->add_option("--degree-window", window_text, "Exponent window A..B for the reduction (default -15..15)");

  std::string input_path = "-";
  std::string delta_text;
  bool as_json = false;
  auto* psi_cmd = app.add_subcommand("psi", "Evaluate psi on a theta-supported diagram vector");
  psi_cmd->add_option("--input", input_path, "Diagram JSON file ('-' for stdin)");
  psi_cmd->add_option("--delta", delta_text, "delta as an HLPoly JSON array (default 1)");
  psi_cmd->add_flag("--json", as_json, "Print {num, den} JSON instead of text");

  auto* canon = app.add_subcommand("canon", "Canonicalize a MonGraph");
  canon->add_option("--input", input_path, "MonGraph JSON file ('-' for stdin)");

  int n = 1;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the labeled graph set CS_n");
  enumerate->add_option("--n", n, "Half the number of vertices")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");

  eqcube::IhxWindow ihx_window;
  auto* ihx = app.add_subcommand("ihx", "Generate the IHX relations inside a bead window");
  ihx->add_option("--n", ihx_window.n, "Half the number of vertices")->required();
  ihx->add_option("--a-min", ihx_window.a_min, "Smallest edge exponent");
  ihx->add_option("--a-max", ihx_window.a_max, "Largest edge exponent");
  ihx->add_option("--b-max", ihx_window.b_max, "Largest delta power");

  std::int64_t p = 0;
  std::int64_t q = 0;
  auto* lens = app.add_subcommand("lens", "Casson-Walker invariant of p/q surgery on the unknot");
  lens->add_option("--p", p)->required();
  lens->add_option("--q", q)->required();
  auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(q, p)");
  dedekind->add_option("--q", q)->required();
  dedekind->add_option("--p", p)->required();

  std::uint64_t seed = 20240601;
  auto* check = app.add_subcommand("check", "Run the bundled property suites");
  check->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*compute) {
      const eqcube::Manifest manifest = eqcube::decode_manifest(eqcube::parse_json_text(read_input(manifest_path)));
      std::optional<eqcube::ReductionRequest> reduction;
      if (kmax || !window_text.empty()) {
        reduction.emplace();
        if (kmax) reduction->k_max = *kmax;
        if (!window_text.empty()) reduction->window = parse_window(window_text);
      }
      write_output(out_path, eqcube::encode(eqcube::run_pipeline(manifest, reduction)).dump(2));
    } else if (*psi_cmd) {
      const eqcube::HLPoly delta = parse_delta_flag(delta_text);
      const auto v = decode_diagram_input(eqcube::parse_json_text(read_input(input_path)), delta);
      const eqcube::TriVarElem value = eqcube::psi(v, delta);
      std::cout << (as_json ? eqcube::encode(value).dump(2) : eqcube::to_string(value)) << "\n";
    } else if (*canon) {
      const auto form = eqcube::canonicalize(eqcube::decode_graph(eqcube::parse_json_text(read_input(input_path))));
      std::cout << Json{{"graph", eqcube::encode(form.graph)}, {"sign", form.sign}}.dump(2) << "\n";
    } else if (*enumerate) {
      Json out = {{"n", n}, {"count", eqcube::count_cs(n).get_str()}};
      if (!count_only && n <= 2) {
        Json graphs = Json::array();
        for (const auto& g : eqcube::enumerate_cs(n)) graphs.push_back(encode_labeled(g));
        out["graphs"] = graphs;
      }
      out["normalization_constant"] = eqcube::to_string(eqcube::normalization_constant(n));
      std::cout << out.dump(count_only || n > 1 ? -1 : 2) << "\n";
    } else if (*ihx) {
      Json out = Json::array();
      for (const auto& rel : eqcube::ihx_relations(ihx_window)) out.push_back(eqcube::encode(rel));
      std::cout << out.dump(2) << "\n";
    } else if (*lens) {
      std::cout << eqcube::to_string(eqcube::lambda_lens(eqcube::SurgeryCoefficient(p, q))) << "\n";
    } else if (*dedekind) {
      std::cout << eqcube::to_string(eqcube::dedekind_sum(q, p)) << "\n";
    } else if (*check) {
      bool all = true;
      std::size_t width = 0;
      const auto results = eqcube::run_self_check(seed);
      for (const auto& r : results) width = std::max(width, r.suite.size() + r.name.size() + 3);
      for (const auto& r : results) {
        std::string label = r.suite + " : " + r.name;
        label.resize(width, ' ');
        std::ostringstream secs;
        secs.precision(2);
        secs << std::fixed << r.seconds << "s";
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << label << "  " << secs.str();
        if (!r.passed) std::cout << "  " << r.detail;
        std::cout << "\n";
        all = all && r.passed;
      }
      return all ? kExitOk : kExitDomain;
    }
  } catch (const eqcube::Error& e) {
    print_error(e);
    return e.code() == eqcube::ErrorCode::ParseError ? kExitParse : kExitDomain;
  }
  return kExitOk;
}
